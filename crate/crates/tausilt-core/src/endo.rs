//! Endomorphism algebras of two-term silting objects as exact multiplication
//! tables with Gabriel-quiver summaries.

use crate::algebra::AlgebraBasis;
use crate::complex::BoundedComplex;
use crate::error::{Error, Result};
use crate::hom::{compose_components, hom_homotopy, trace_radical, HomSpace};
use crate::linalg::{sparse_add_scaled, sparse_from_dense, Echelon, SparseVec};
use crate::mutation::SiltingObject;
use crate::proj::ProjMorphism;
use crate::scalar::Rat;
use std::collections::BTreeMap;

/// Basic algebra presented by structure constants: idempotents, a
/// pair-homogeneous basis (every element lies in some `e_a A e_b`), and the
/// full multiplication table.
#[derive(Clone, Debug)]
pub struct StructureTable {
    pub vertex_count: usize,
    pub dim: usize,
    /// `pair[i] = (a, b)` when basis element i lies in `e_a A e_b`.
    pub pair: Vec<(usize, usize)>,
    /// Basis index of each idempotent `e_v`; all other elements are radical.
    pub idem: Vec<usize>,
    /// Row-major products `basis_i * basis_j` (composition left to right).
    pub table: Vec<SparseVec>,
    pub labels: Vec<String>,
}

impl StructureTable {
    pub fn from_algebra(b: &AlgebraBasis) -> StructureTable {
        let q = &b.presentation.quiver;
        StructureTable {
            vertex_count: b.vertex_count(),
            dim: b.dim,
            pair: (0..b.dim).map(|i| b.pair_of(i)).collect(),
            idem: b.idempotents.clone(),
            table: (0..b.dim * b.dim)
                .map(|k| b.product_of_basis(k / b.dim, k % b.dim).clone())
                .collect(),
            labels: b.paths.iter().map(|p| p.display(q).to_string()).collect(),
        }
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for &(i, ca) in a {
            for &(j, cb) in b {
                let p = self.product(i as usize, j as usize);
                if !p.is_empty() {
                    out = sparse_add_scaled(&out, ca * cb, p);
                }
            }
        }
        out
    }

    pub fn radical_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.idem.contains(i)).collect()
    }

    /// Bases of `rad^k` for k = 1, 2, ... until zero.
    pub fn radical_filtration(&self) -> Vec<Vec<SparseVec>> {
        let rad: Vec<SparseVec> = self
            .radical_indices()
            .into_iter()
            .map(|i| crate::linalg::sparse_unit(i as u32))
            .collect();
        let mut out = Vec::new();
        let mut current = rad.clone();
        loop {
            let mut ech = Echelon::new();
            for v in &current {
                ech.insert(v.clone());
            }
            if ech.rank() == 0 {
                break;
            }
            let reduced: Vec<SparseVec> = ech.rows().to_vec();
            let mut next = Vec::new();
            for v in &reduced {
                for r in &rad {
                    let p = self.mul(v, r);
                    if !p.is_empty() {
                        next.push(p);
                    }
                }
            }
            out.push(reduced);
            current = next;
        }
        out
    }

    /// Dimensions of `rad^k / rad^{k+1}` for k = 0, 1, ...
    pub fn radical_layers(&self) -> Vec<usize> {
        let filt = self.radical_filtration();
        let mut dims = vec![self.dim];
        dims.extend(filt.iter().map(|f| f.len()));
        dims.push(0);
        dims.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// `arrow_counts[a][b]` = dim of `e_a (rad/rad^2) e_b`, the number of
    /// Gabriel-quiver arrows from a to b.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let filt = self.radical_filtration();
        let mut counts = vec![vec![0usize; n]; n];
        if filt.is_empty() {
            return counts;
        }
        // products are pair-homogeneous, so rad and rad^2 split per pair
        let pair_of_vec = |v: &SparseVec| -> (usize, usize) {
            self.pair[v[0].0 as usize]
        };
        let mut rad2_per_pair: BTreeMap<(usize, usize), Echelon> = BTreeMap::new();
        if filt.len() > 1 {
            for v in &filt[1] {
                rad2_per_pair.entry(pair_of_vec(v)).or_default().insert(v.clone());
            }
        }
        let mut rad_per_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &i in &self.radical_indices() {
            *rad_per_pair.entry(self.pair[i]).or_default() += 1;
        }
        for (&(a, b), &d) in &rad_per_pair {
            let d2 = rad2_per_pair.get(&(a, b)).map(|e| e.rank()).unwrap_or(0);
            counts[a][b] = d - d2;
        }
        counts
    }

    /// Structural sanity: orthogonal idempotents summing to the identity,
    /// associativity, pair compatibility of products.
    pub fn validate(&self) -> Result<()> {
        for (v, &i) in self.idem.iter().enumerate() {
            if self.pair[i] != (v, v) {
                return Err(Error::Inconsistency("idempotent in wrong pair".into()));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                let (a, b) = self.pair[i];
                let (c, d) = self.pair[j];
                if b != c && !p.is_empty() {
                    return Err(Error::Inconsistency("nonzero product across vertices".into()));
                }
                for &(k, _) in p {
                    if self.pair[k as usize] != (a, d) {
                        return Err(Error::Inconsistency("product leaves its pair".into()));
                    }
                }
            }
        }
        // identity
        let one: SparseVec = {
            let mut v: SparseVec =
                self.idem.iter().map(|&i| (i as u32, Rat::ONE)).collect();
            v.sort_by_key(|&(i, _)| i);
            v
        };
        for i in 0..self.dim {
            let x = crate::linalg::sparse_unit(i as u32);
            if self.mul(&one, &x) != x || self.mul(&x, &one) != x {
                return Err(Error::Inconsistency("identity fails".into()));
            }
        }
        // associativity
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product(i, j).clone();
                for k in 0..self.dim {
                    let left = self.mul(&ij, &crate::linalg::sparse_unit(k as u32));
                    let right = self.mul(
                        &crate::linalg::sparse_unit(i as u32),
                        self.product(j, k),
                    );
                    if left != right {
                        return Err(Error::Inconsistency(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Endomorphism algebra of a silting pair, with its table and quiver data.
pub struct EndoPresentation {
    pub table: StructureTable,
    pub dimension: usize,
    pub radical_layers: Vec<usize>,
    pub arrow_counts: Vec<Vec<usize>>,
    /// Hom-space dimension per ordered pair (a, b) = dim Hom(C_b, C_a).
    pub hom_dims: Vec<Vec<usize>>,
}

fn scale_components(
    comps: &BTreeMap<i32, ProjMorphism>,
    c: Rat,
) -> BTreeMap<i32, ProjMorphism> {
    let mut out = comps.clone();
    for m in out.values_mut() {
        for e in &mut m.entries {
            *e = m.algebra.element(crate::linalg::sparse_scale(&e.coeffs, c));
        }
    }
    out
}

fn add_components(
    acc: &mut BTreeMap<i32, ProjMorphism>,
    other: &BTreeMap<i32, ProjMorphism>,
) {
    for (&n, m) in other {
        match acc.get_mut(&n) {
            Some(existing) => {
                for (e, o) in existing.entries.iter_mut().zip(&m.entries) {
                    *e = m
                        .algebra
                        .element(sparse_add_scaled(&e.coeffs, Rat::ONE, &o.coeffs));
                }
            }
            None => {
                acc.insert(n, m.clone());
            }
        }
    }
}

/// Linear combination of a Hom space's representatives as an actual map.
fn combine_reps(space: &HomSpace, coeffs: &[Rat]) -> BTreeMap<i32, ProjMorphism> {
    let mut acc: BTreeMap<i32, ProjMorphism> = BTreeMap::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scaled = scale_components(&space.rep_components(i), c);
        add_components(&mut acc, &scaled);
    }
    acc
}

/// Identity chain map of a complex.
fn identity_components(x: &BoundedComplex) -> BTreeMap<i32, ProjMorphism> {
    x.objects
        .iter()
        .map(|(&n, o)| (n, ProjMorphism::identity(&x.algebra, o.clone())))
        .collect()
}

/// Computes `End(C_0 ⊕ C_1)` as a structure table whose basis consists of
/// the two identity idempotents and a radical basis, graded by ordered
/// summand pair.
pub fn endomorphism_table(t: &SiltingObject) -> Result<EndoPresentation> {
    let n = t.summands.len();
    // hom spaces: e_a Γ e_b = Hom(C_b, C_a)
    let mut spaces: Vec<Vec<HomSpace>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            row.push(hom_homotopy(&t.summands[b], &t.summands[a], 0)?);
        }
        spaces.push(row);
    }
    let hom_dims: Vec<Vec<usize>> =
        spaces.iter().map(|r| r.iter().map(|s| s.dim).collect()).collect();

    // global basis: per pair, a list of dense coefficient vectors over that
    // pair's representatives; diagonal pairs re-based to (identity, radical)
    let mut basis_coeffs: Vec<(usize, usize, Vec<Rat>)> = Vec::new();
    let mut idem = vec![usize::MAX; n];
    for a in 0..n {
        let space = &spaces[a][a];
        let d = space.dim;
        let id_class = space.class_of_components(&identity_components(&t.summands[a]))?;
        // radical of End(C_a) via the trace form on its table
        let reps: Vec<BTreeMap<i32, ProjMorphism>> =
            (0..d).map(|i| space.rep_components(i)).collect();
        let mut table = vec![vec![Rat::ZERO; d]; d * d];
        for i in 0..d {
            for j in 0..d {
                let prod = compose_components(
                    &t.summands[a],
                    &t.summands[a],
                    &t.summands[a],
                    &reps[j],
                    &reps[i],
                )?;
                table[i * d + j] = space.class_of_components(&prod)?;
            }
        }
        let rad = trace_radical(d, &table);
        if rad.len() + 1 != d {
            return Err(Error::NotIndecomposable);
        }
        idem[a] = basis_coeffs.len();
        basis_coeffs.push((a, a, id_class));
        for r in rad {
            basis_coeffs.push((a, a, r));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let d = spaces[a][b].dim;
            for i in 0..d {
                let mut v = vec![Rat::ZERO; d];
                v[i] = Rat::ONE;
                basis_coeffs.push((a, b, v));
            }
        }
    }
    let dim = basis_coeffs.len();

    // per-pair change of basis: express rep-class vectors over global basis
    let mut pair_reducers: BTreeMap<(usize, usize), (Echelon, Vec<usize>)> = BTreeMap::new();
    for (gi, (a, b, coeffs)) in basis_coeffs.iter().enumerate() {
        let entry = pair_reducers
            .entry((*a, *b))
            .or_insert_with(|| (Echelon::tracking(), Vec::new()));
        if !entry.0.insert(sparse_from_dense(coeffs)) {
            return Err(Error::Inconsistency("endomorphism basis is degenerate".into()));
        }
        entry.1.push(gi);
    }
    let express = |a: usize, b: usize, class: &[Rat]| -> Result<SparseVec> {
        let (ech, members) = &pair_reducers[&(a, b)];
        let combo = ech
            .express(&sparse_from_dense(class))
            .ok_or_else(|| Error::Inconsistency("class escapes its Hom pair".into()))?;
        let mut out: SparseVec =
            combo.into_iter().map(|(k, c)| (members[k as usize] as u32, c)).collect();
        out.sort_by_key(|&(i, _)| i);
        Ok(out)
    };

    // actual chain maps for each global basis element
    let maps: Vec<BTreeMap<i32, ProjMorphism>> = basis_coeffs
        .iter()
        .map(|(a, b, coeffs)| combine_reps(&spaces[*a][*b], coeffs))
        .collect();

    // multiplication table: u * v = "first v, then u" (path composition of
    // the quiver of End: u from a to b, v from b to c)
    let mut table = vec![SparseVec::new(); dim * dim];
    for (i, (a, b, _)) in basis_coeffs.iter().enumerate() {
        for (j, (c, d2, _)) in basis_coeffs.iter().enumerate() {
            if b != c {
                continue;
            }
            let prod = compose_components(
                &t.summands[*d2],
                &t.summands[*b],
                &t.summands[*a],
                &maps[j],
                &maps[i],
            )?;
            let class = spaces[*a][*d2].class_of_components(&prod)?;
            let v = express(*a, *d2, &class)?;
            table[i * dim + j] = v;
        }
    }

    let labels: Vec<String> = basis_coeffs
        .iter()
        .enumerate()
        .map(|(i, (a, b, _))| {
            if idem.contains(&i) {
                format!("e_{}", a + 1)
            } else {
                format!("f{}{}_{}", a + 1, b + 1, i)
            }
        })
        .collect();
    let st = StructureTable {
        vertex_count: n,
        dim,
        pair: basis_coeffs.iter().map(|(a, b, _)| (*a, *b)).collect(),
        idem,
        table,
        labels,
    };
    st.validate()?;
    let radical_layers = st.radical_layers();
    let arrow_counts = st.arrow_counts();
    Ok(EndoPresentation { table: st, dimension: dim, radical_layers, arrow_counts, hom_dims })
}

/// Gabriel-quiver summary: vertex count, arrows per ordered pair, layers.
pub fn gabriel_summary(e: &EndoPresentation) -> (usize, Vec<Vec<usize>>, Vec<usize>) {
    (e.table.vertex_count, e.arrow_counts.clone(), e.radical_layers.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;
    use crate::catalog;
    use crate::mutation::left_mutation;
    use std::sync::Arc;

    fn start(p: &crate::quiver::AlgebraPresentation) -> SiltingObject {
        let b = Arc::new(compute_basis(p).unwrap());
        SiltingObject::initial(&b).unwrap()
    }

    #[test]
    fn stalk_pair_endo_matches_algebra() {
        for pres in [catalog::delta1(), catalog::omega3(), catalog::omega2()] {
            let t = start(&pres);
            let e = endomorphism_table(&t).unwrap();
            let b = compute_basis(&pres).unwrap();
            assert_eq!(e.dimension, b.dim);
            assert_eq!(e.radical_layers, b.radical_layers());
        }
    }

    #[test]
    fn omega3_first_mutation_endo_shape() {
        let t0 = start(&catalog::omega3());
        let t1 = left_mutation(&t0, 1).unwrap().object.unwrap();
        let e = endomorphism_table(&t1).unwrap();
        assert_eq!(e.dimension, 7);
        // two loops at vertex 2, two arrows 2 -> 1
        assert_eq!(e.arrow_counts[1][1], 2);
        assert_eq!(e.arrow_counts[1][0], 2);
        assert_eq!(e.arrow_counts[0][0], 0);
        assert_eq!(e.arrow_counts[0][1], 0);
    }

    #[test]
    fn omega1_first_mutation_endo_shape() {
        let t0 = start(&catalog::omega1());
        let t1 = left_mutation(&t0, 1).unwrap().object.unwrap();
        let e = endomorphism_table(&t1).unwrap();
        assert_eq!(e.dimension, 9);
        // one loop at 2, one arrow 2 -> 1 (the opposite of the base quiver)
        assert_eq!(e.arrow_counts[1][1], 1);
        assert_eq!(e.arrow_counts[1][0], 1);
        // the loop b satisfies b^4 = 0, b^3 != 0: five radical layers
        assert_eq!(e.radical_layers.len(), 5);
    }

    #[test]
    fn kronecker_mutation_endo_is_opposite_shape() {
        let t0 = start(&catalog::delta1());
        let t1 = left_mutation(&t0, 1).unwrap().object.unwrap();
        let e = endomorphism_table(&t1).unwrap();
        assert_eq!(e.dimension, 4);
        assert_eq!(e.arrow_counts[1][0], 2);
        assert_eq!(e.arrow_counts[0][1], 0);
    }

    #[test]
    fn omega2_stalk_gabriel_quiver() {
        let t = start(&catalog::omega2());
        let e = endomorphism_table(&t).unwrap();
        let (v, arrows, _) = gabriel_summary(&e);
        assert_eq!(v, 2);
        assert_eq!(arrows[0][0], 1);
        assert_eq!(arrows[1][1], 1);
        assert_eq!(arrows[0][1], 1);
        assert_eq!(arrows[1][0], 0);
    }
}
