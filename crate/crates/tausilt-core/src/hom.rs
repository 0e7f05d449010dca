//! Hom spaces in the homotopy category: chain maps modulo null-homotopic
//! maps, solved as exact linear systems, plus the presilting / silting /
//! tilting predicates built on them.
//!
//! Conventions: `(X[1])^n = X^{n+1}` with `d_{X[1]} = -d_X`; a chain map
//! `f : X -> Y[s]` satisfies `f^{n+1} ∘ d_X^n = (-1)^s d_Y^{n+s} ∘ f^n`, and
//! null-homotopic maps are `(-1)^s d_Y h + h d_X`.

use crate::algebra::AlgebraBasis;
use crate::complex::BoundedComplex;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, sparse_get, Echelon, SparseVec};
use crate::proj::{compose, ProjMorphism, ProjMultiple};
use crate::quiver::VertexId;
use crate::scalar::Rat;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Coordinates for graded degreewise maps `X^n -> Y^{n+s}`: one block per
/// degree, entries indexed by (row, col, per-pair basis position).
#[derive(Clone, Debug)]
pub struct MapLayout {
    pub algebra: Arc<AlgebraBasis>,
    pub shift: i32,
    blocks: Vec<DegreeBlock>,
    pub total: usize,
}

#[derive(Clone, Debug)]
struct DegreeBlock {
    degree: i32,
    rows: Vec<VertexId>,
    cols: Vec<VertexId>,
    /// start coordinate of entry (r, c), length = per-pair dimension
    offsets: Vec<usize>,
    start: usize,
    len: usize,
}

impl MapLayout {
    pub fn new(x: &BoundedComplex, y: &BoundedComplex, shift: i32) -> Result<MapLayout> {
        if !Arc::ptr_eq(&x.algebra, &y.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let a = x.algebra.clone();
        let mut blocks = Vec::new();
        let mut total = 0usize;
        for (&n, xo) in &x.objects {
            let yo = y.object_at(n + shift);
            if yo.is_zero() {
                continue;
            }
            let rows = yo.summands.clone();
            let cols = xo.summands.clone();
            let mut offsets = Vec::with_capacity(rows.len() * cols.len());
            let mut len = 0usize;
            for &rv in &rows {
                for &cv in &cols {
                    offsets.push(total + len);
                    len += a.per_pair[rv][cv].len();
                }
            }
            blocks.push(DegreeBlock { degree: n, rows, cols, offsets, start: total, len });
            total += len;
        }
        Ok(MapLayout { algebra: a, shift, blocks, total })
    }

    fn block(&self, degree: i32) -> Option<&DegreeBlock> {
        self.blocks.iter().find(|b| b.degree == degree)
    }

    /// Coordinate of per-pair position `t` of entry (r, c) at `degree`.
    fn coord(&self, block: &DegreeBlock, r: usize, c: usize, t: usize) -> usize {
        block.offsets[r * block.cols.len() + c] + t
    }

    /// Scatters an element's coefficients into layout coordinates.
    fn scatter(
        &self,
        block: &DegreeBlock,
        r: usize,
        c: usize,
        coeffs: &SparseVec,
        scale: Rat,
        out: &mut Vec<(u32, Rat)>,
    ) {
        let a = &self.algebra;
        for &(gi, coeff) in coeffs {
            let t = a.pair_pos[gi as usize];
            out.push((self.coord(block, r, c, t) as u32, coeff * scale));
        }
    }

    /// Morphism components from a coordinate vector.
    pub fn to_morphisms(
        &self,
        x: &BoundedComplex,
        y: &BoundedComplex,
        v: &SparseVec,
    ) -> BTreeMap<i32, ProjMorphism> {
        let a = &self.algebra;
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            let source = ProjMultiple { summands: b.cols.clone() };
            let target = ProjMultiple { summands: b.rows.clone() };
            let mut m = ProjMorphism::zero(a, source, target);
            let mut any = false;
            for &(coord, coeff) in v {
                let coord = coord as usize;
                if coord < b.start || coord >= b.start + b.len {
                    continue;
                }
                // locate (r, c, t) by scanning offsets
                let rc = match b.offsets.binary_search(&coord) {
                    Ok(k) => k,
                    Err(k) => k - 1,
                };
                let (r, c) = (rc / b.cols.len(), rc % b.cols.len());
                let t = coord - b.offsets[rc];
                let gi = a.per_pair[b.rows[r]][b.cols[c]][t];
                let entry = m.at_mut(r, c);
                let mut coeffs = entry.coeffs.clone();
                coeffs.push((gi as u32, coeff));
                coeffs.sort_by_key(|&(i, _)| i);
                *entry = a.element(coeffs);
                any = true;
            }
            if any || (!m.source.is_zero() && !m.target.is_zero()) {
                out.insert(b.degree, m);
            }
        }
        let _ = (x, y);
        out
    }
}

/// Linear rows of the chain-map condition
/// `f^{n+1} ∘ d_X^n - (-1)^s d_Y^{n+s} ∘ f^n = 0`, one row per coordinate of
/// the target layout (maps `X -> Y[s+1]` degreewise).
fn chain_condition_rows(
    x: &BoundedComplex,
    y: &BoundedComplex,
    unknowns: &MapLayout,
) -> (Vec<SparseVec>, usize) {
    let a = &unknowns.algebra;
    let s = unknowns.shift;
    let eq_layout = MapLayout::new(x, y, s + 1).expect("same algebra");
    let mut rows: Vec<Vec<(u32, Rat)>> = vec![Vec::new(); eq_layout.total];
    let sign = if s % 2 == 0 { Rat::ONE } else { -Rat::ONE };

    for ub in &unknowns.blocks {
        let n = ub.degree;
        // term f^n ∘ d_X^{n-1} lands in equations at degree n-1
        if let Some(eb) = eq_layout.block(n - 1) {
            let dx = x.diff_at(n - 1);
            for (m, _) in ub.cols.iter().enumerate() {
                for c in 0..eb.cols.len() {
                    let d_entry = dx.at(m, c);
                    if d_entry.is_zero() {
                        continue;
                    }
                    for (r, &rv) in ub.rows.iter().enumerate() {
                        let pair = &a.per_pair[rv][ub.cols[m]];
                        for (t, &gi) in pair.iter().enumerate() {
                            let prod = a
                                .multiply(&a.basis_element(gi), d_entry)
                                .expect("same basis");
                            if prod.is_zero() {
                                continue;
                            }
                            let ucoord = unknowns.coord(ub, r, m, t) as u32;
                            let mut scattered = Vec::new();
                            eq_layout.scatter(eb, r, c, &prod.coeffs, Rat::ONE, &mut scattered);
                            for (ec, coeff) in scattered {
                                rows[ec as usize].push((ucoord, coeff));
                            }
                        }
                    }
                }
            }
        }
        // term -(-1)^s d_Y^{n+s} ∘ f^n lands in equations at degree n
        if let Some(eb) = eq_layout.block(n) {
            let dy = y.diff_at(n + s);
            for (m, &mv) in ub.rows.iter().enumerate() {
                for r in 0..eb.rows.len() {
                    let d_entry = dy.at(r, m);
                    if d_entry.is_zero() {
                        continue;
                    }
                    for (c, &cv) in ub.cols.iter().enumerate() {
                        let pair = &a.per_pair[mv][cv];
                        for (t, &gi) in pair.iter().enumerate() {
                            let prod = a
                                .multiply(d_entry, &a.basis_element(gi))
                                .expect("same basis");
                            if prod.is_zero() {
                                continue;
                            }
                            let ucoord = unknowns.coord(ub, m, c, t) as u32;
                            let mut scattered = Vec::new();
                            eq_layout.scatter(eb, r, c, &prod.coeffs, -sign, &mut scattered);
                            for (ec, coeff) in scattered {
                                rows[ec as usize].push((ucoord, coeff));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::with_capacity(rows.len());
    for mut row in rows {
        row.sort_by_key(|&(i, _)| i);
        // merge duplicate coordinates
        let mut merged: SparseVec = Vec::with_capacity(row.len());
        for (i, c) in row {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += c,
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|&(_, c)| !c.is_zero());
        if !merged.is_empty() {
            out.push(merged);
        }
    }
    (out, eq_layout.total)
}

/// Images of the homotopy generators `(-1)^s d_Y h + h d_X` in unknown
/// coordinates, one row per coordinate of the `X -> Y[s-1]` layout.
fn homotopy_rows(
    x: &BoundedComplex,
    y: &BoundedComplex,
    unknowns: &MapLayout,
) -> Vec<SparseVec> {
    let a = &unknowns.algebra;
    let s = unknowns.shift;
    let h_layout = MapLayout::new(x, y, s - 1).expect("same algebra");
    let sign = if s % 2 == 0 { Rat::ONE } else { -Rat::ONE };
    let mut out = Vec::new();
    for hb in &h_layout.blocks {
        let n = hb.degree;
        for (rho, &rho_v) in hb.rows.iter().enumerate() {
            for (gamma, &gamma_v) in hb.cols.iter().enumerate() {
                let pair = &a.per_pair[rho_v][gamma_v];
                for &gi in pair.iter() {
                    let basis_el = a.basis_element(gi);
                    let mut row: Vec<(u32, Rat)> = Vec::new();
                    // (-1)^s d_Y^{n+s-1} ∘ h^n: contributes to f^n block
                    if let Some(ub) = unknowns.block(n) {
                        let dy = y.diff_at(n + s - 1);
                        for r in 0..ub.rows.len() {
                            let d_entry = dy.at(r, rho);
                            if d_entry.is_zero() {
                                continue;
                            }
                            let prod = a.multiply(d_entry, &basis_el).expect("same basis");
                            unknowns.scatter(ub, r, gamma, &prod.coeffs, sign, &mut row);
                        }
                    }
                    // h^n ∘ d_X^{n-1}: contributes to f^{n-1} block
                    if let Some(ub) = unknowns.block(n - 1) {
                        let dx = x.diff_at(n - 1);
                        for c in 0..ub.cols.len() {
                            let d_entry = dx.at(gamma, c);
                            if d_entry.is_zero() {
                                continue;
                            }
                            let prod = a.multiply(&basis_el, d_entry).expect("same basis");
                            unknowns.scatter(ub, rho, c, &prod.coeffs, Rat::ONE, &mut row);
                        }
                    }
                    row.sort_by_key(|&(i, _)| i);
                    let mut merged: SparseVec = Vec::with_capacity(row.len());
                    for (i, c) in row {
                        match merged.last_mut() {
                            Some(last) if last.0 == i => last.1 += c,
                            _ => merged.push((i, c)),
                        }
                    }
                    merged.retain(|&(_, c)| !c.is_zero());
                    if !merged.is_empty() {
                        out.push(merged);
                    }
                }
            }
        }
    }
    out
}

/// Hom space `Hom_K(X, Y[s])` with representatives and class reduction.
pub struct HomSpace {
    pub layout: MapLayout,
    pub dim: usize,
    /// Coordinates of the chosen class representatives.
    pub reps: Vec<SparseVec>,
    reducer: Echelon,
    /// insertion index of each representative inside the reducer
    rep_idx: Vec<u32>,
    source: BoundedComplex,
    target: BoundedComplex,
}

impl HomSpace {
    pub fn rep_components(&self, i: usize) -> BTreeMap<i32, ProjMorphism> {
        self.layout.to_morphisms(&self.source, &self.target, &self.reps[i])
    }

    /// Expresses a chain map (by coordinates) in the representative basis;
    /// the homotopy part of the expression is discarded.
    pub fn class_of(&self, coords: &SparseVec) -> Result<Vec<Rat>> {
        let combo = self.reducer.express(coords).ok_or_else(|| {
            Error::Inconsistency("vector is not a chain map for this Hom space".into())
        })?;
        let mut out = vec![Rat::ZERO; self.dim];
        for (i, c) in combo {
            if let Ok(k) = self.rep_idx.binary_search(&i) {
                out[k] = c;
            }
        }
        Ok(out)
    }

    pub fn class_of_components(&self, comps: &BTreeMap<i32, ProjMorphism>) -> Result<Vec<Rat>> {
        self.class_of(&self.coords_of(comps))
    }

    /// Coordinates of a degreewise morphism family.
    pub fn coords_of(&self, comps: &BTreeMap<i32, ProjMorphism>) -> SparseVec {
        let mut out: Vec<(u32, Rat)> = Vec::new();
        for b in &self.layout.blocks {
            if let Some(m) = comps.get(&b.degree) {
                for r in 0..b.rows.len() {
                    for c in 0..b.cols.len() {
                        self.layout.scatter(b, r, c, &m.at(r, c).coeffs, Rat::ONE, &mut out);
                    }
                }
            }
        }
        out.sort_by_key(|&(i, _)| i);
        out
    }

    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.target
    }
}

/// Solves for `Hom_K(X, Y[s])`: kernel of the chain-map condition modulo the
/// image of the homotopy map.
pub fn hom_homotopy(x: &BoundedComplex, y: &BoundedComplex, shift: i32) -> Result<HomSpace> {
    let layout = MapLayout::new(x, y, shift)?;
    let (rows, _) = chain_condition_rows(x, y, &layout);
    let kernel = kernel_basis(&rows, layout.total);
    let homot = homotopy_rows(x, y, &layout);
    let mut reducer = Echelon::tracking();
    let mut insert_count = 0u32;
    for h in &homot {
        reducer.insert(h.clone());
        insert_count += 1;
    }
    let mut reps = Vec::new();
    let mut rep_idx = Vec::new();
    for k in kernel {
        let idx = insert_count;
        insert_count += 1;
        if reducer.insert(k.clone()) {
            reps.push(k);
            rep_idx.push(idx);
        }
    }
    let dim = reps.len();
    Ok(HomSpace {
        layout,
        dim,
        reps,
        reducer,
        rep_idx,
        source: x.clone(),
        target: y.clone(),
    })
}

/// Dimension of `Hom_K(X, Y[s])` without computing representatives.
pub fn hom_dim(x: &BoundedComplex, y: &BoundedComplex, shift: i32) -> Result<usize> {
    let layout = MapLayout::new(x, y, shift)?;
    if layout.total == 0 {
        return Ok(0);
    }
    let (rows, _) = chain_condition_rows(x, y, &layout);
    let homot = homotopy_rows(x, y, &layout);
    let chain_dim = layout.total - rank(&rows);
    Ok(chain_dim - rank(&homot))
}

/// Presilting test: `Hom(T, T[1]) = 0` over all ordered pairs. For two-term
/// complexes the positive shifts beyond 1 vanish automatically.
pub fn is_presilting(complexes: &[&BoundedComplex]) -> Result<bool> {
    for x in complexes {
        debug_assert!(x.is_two_term());
    }
    for x in complexes {
        for y in complexes {
            if hom_dim(x, y, 1)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Local endomorphism ring test: `dim End/rad End = 1`, with the radical of
/// `End` computed from the trace bilinear form (valid in characteristic 0).
pub fn is_indecomposable(x: &BoundedComplex) -> Result<bool> {
    let end = hom_homotopy(x, x, 0)?;
    let d = end.dim;
    if d == 0 {
        return Ok(false);
    }
    // multiplication table of End(X) in the representative basis
    let reps: Vec<BTreeMap<i32, ProjMorphism>> =
        (0..d).map(|i| end.rep_components(i)).collect();
    let mut table = vec![vec![Rat::ZERO; d]; d * d];
    for i in 0..d {
        for j in 0..d {
            let prod = compose_components(x, x, x, &reps[j], &reps[i])?;
            table[i * d + j] = dense_class(&end, &prod)?;
        }
    }
    let rad_dim = trace_radical_dim(d, &table);
    Ok(d - rad_dim == 1)
}

/// Degreewise composition "first f, then g" of maps X -> Y -> Z.
pub fn compose_components(
    _x: &BoundedComplex,
    _y: &BoundedComplex,
    _z: &BoundedComplex,
    f: &BTreeMap<i32, ProjMorphism>,
    g: &BTreeMap<i32, ProjMorphism>,
) -> Result<BTreeMap<i32, ProjMorphism>> {
    let mut out = BTreeMap::new();
    for (&n, fc) in f {
        if let Some(gc) = g.get(&n) {
            if fc.target == gc.source {
                out.insert(n, compose(fc, gc)?);
            }
        }
    }
    Ok(out)
}

fn dense_class(space: &HomSpace, comps: &BTreeMap<i32, ProjMorphism>) -> Result<Vec<Rat>> {
    space.class_of_components(comps)
}

/// Radical of an algebra given by a dense multiplication table, via the
/// kernel of the trace form of the regular representation (characteristic
/// zero). Returns a basis of the radical as dense coefficient vectors.
pub fn trace_radical(d: usize, table: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    // tr(L_v) for a vector v: sum_k (v * b_k)[k]
    let trace_of = |v: &[Rat]| -> Rat {
        let mut t = Rat::ZERO;
        for k in 0..d {
            for i in 0..d {
                if !v[i].is_zero() {
                    t += v[i] * table[i * d + k][k];
                }
            }
        }
        t
    };
    let mut gram: Vec<SparseVec> = Vec::with_capacity(d);
    for i in 0..d {
        let mut row: SparseVec = Vec::new();
        for j in 0..d {
            let prod = &table[i * d + j];
            let t = trace_of(prod);
            if !t.is_zero() {
                row.push((j as u32, t));
            }
        }
        if !row.is_empty() {
            gram.push(row);
        }
    }
    kernel_basis(&gram, d)
        .into_iter()
        .map(|v| crate::linalg::sparse_to_dense(&v, d))
        .collect()
}

pub fn trace_radical_dim(d: usize, table: &[Vec<Rat>]) -> usize {
    trace_radical(d, table).len()
}

/// Support conditions for a pair of indecomposable two-term complexes:
/// every projective appears among `T^0 ⊕ T^{-1}`, and none appears in both
/// a degree-0 and a degree-(-1) part.
fn support_conditions(a: &BoundedComplex, b: &BoundedComplex) -> bool {
    let n = a.algebra.vertex_count();
    let mut deg0 = vec![false; n];
    let mut degm1 = vec![false; n];
    for c in [a, b] {
        for &v in &c.object_at(0).summands {
            deg0[v] = true;
        }
        for &v in &c.object_at(-1).summands {
            degm1[v] = true;
        }
    }
    let covered = (0..n).all(|v| deg0[v] || degm1[v]);
    let disjoint = (0..n).all(|v| !(deg0[v] && degm1[v]));
    covered && disjoint
}

/// Two-term silting test for a pair of indecomposable minimal complexes:
/// presilting plus the degreewise support conditions.
pub fn is_two_term_silting(a: &BoundedComplex, b: &BoundedComplex) -> Result<bool> {
    if !is_indecomposable(a)? || !is_indecomposable(b)? {
        return Err(Error::NotIndecomposable);
    }
    Ok(is_presilting(&[a, b])? && support_conditions(a, b))
}

/// Tilting refinement: also `Hom(T, T[-1]) = 0`.
pub fn is_tilting_two_term(a: &BoundedComplex, b: &BoundedComplex) -> Result<bool> {
    for x in [a, b] {
        for y in [a, b] {
            if hom_dim(x, y, -1)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;
    use crate::catalog;

    fn basis(p: &crate::quiver::AlgebraPresentation) -> Arc<AlgebraBasis> {
        Arc::new(compute_basis(p).unwrap())
    }

    /// X = (0 -> P1) and Y = (P2 -> P1^2) over the Kronecker algebra.
    fn delta1_pair() -> (Arc<AlgebraBasis>, BoundedComplex, BoundedComplex) {
        let b = basis(&catalog::delta1());
        let q = &b.presentation.quiver;
        let x = BoundedComplex::stalk(&b, 0);
        let mut d = ProjMorphism::zero(&b, ProjMultiple::single(1), ProjMultiple::power(0, 2));
        d.set(0, 0, b.path_element(&[q.arrow_id("mu1").unwrap()]).unwrap()).unwrap();
        d.set(1, 0, b.path_element(&[q.arrow_id("mu2").unwrap()]).unwrap()).unwrap();
        let y = BoundedComplex::two_term(d);
        (b, x, y)
    }

    #[test]
    fn kronecker_hom_dimensions() {
        let (_b, x, y) = delta1_pair();
        assert_eq!(hom_dim(&x, &y, 0).unwrap(), 2);
        assert_eq!(hom_dim(&x, &x, 0).unwrap(), 1);
        assert_eq!(hom_dim(&y, &x, 0).unwrap(), 0);
        assert_eq!(hom_dim(&y, &y, 0).unwrap(), 1);
    }

    #[test]
    fn omega2_stalk_has_two_endomorphisms() {
        let b = basis(&catalog::omega2());
        let x = BoundedComplex::stalk(&b, 0);
        assert_eq!(hom_dim(&x, &x, 0).unwrap(), 2);
    }

    #[test]
    fn representatives_are_chain_maps() {
        let (_b, x, y) = delta1_pair();
        let hom = hom_homotopy(&x, &y, 0).unwrap();
        assert_eq!(hom.dim, 2);
        for i in 0..hom.dim {
            let comps = hom.rep_components(i);
            let f = crate::complex::ChainMap {
                source: x.clone(),
                target: y.clone(),
                comps,
            };
            f.validate().unwrap();
        }
    }

    #[test]
    fn class_reduction_identifies_representatives() {
        let (_b, x, y) = delta1_pair();
        let hom = hom_homotopy(&x, &y, 0).unwrap();
        for i in 0..hom.dim {
            let class = hom.class_of(&hom.reps[i]).unwrap();
            for (j, c) in class.iter().enumerate() {
                assert_eq!(*c == Rat::ONE, i == j);
            }
        }
    }

    #[test]
    fn presilting_examples() {
        let (b, x, _) = delta1_pair();
        let p2 = BoundedComplex::stalk(&b, 1);
        // the stalk pair (0->P1), (0->P2) is presilting
        assert!(is_presilting(&[&x, &p2]).unwrap());
        // {(0->P1), (P1->0)} is not
        let p1_left = BoundedComplex::stalk(&b, 0).shift(1);
        assert!(!is_presilting(&[&x, &p1_left]).unwrap());
    }

    #[test]
    fn silting_pair_examples() {
        let (b, x, y) = delta1_pair();
        let p2 = BoundedComplex::stalk(&b, 1);
        assert!(is_two_term_silting(&x, &p2).unwrap());
        // mu2^-(Delta1): (0->P1) + (P2 -> P1^2)
        assert!(is_two_term_silting(&x, &y).unwrap());
        // (0->P1) twice misses P2 and is decomposable as a pair input
        assert!(matches!(
            is_two_term_silting(&x, &x).map(|_| ()),
            Ok(())
        ));
        assert!(!is_two_term_silting(&x, &x).unwrap());
    }

    #[test]
    fn tilting_examples() {
        let (b, x, y) = delta1_pair();
        let p2 = BoundedComplex::stalk(&b, 1);
        assert!(is_tilting_two_term(&x, &p2).unwrap());
        assert!(is_tilting_two_term(&x, &y).unwrap());
        // mu1^-(Delta1) = (P1 -> 0) + (0 -> P2) is silting but not tilting
        let p1_left = BoundedComplex::stalk(&b, 0).shift(1);
        assert!(!is_tilting_two_term(&p1_left, &p2).unwrap());
    }

    #[test]
    fn indecomposability_examples() {
        let (b, x, y) = delta1_pair();
        assert!(is_indecomposable(&x).unwrap());
        assert!(is_indecomposable(&y).unwrap());
        // P1 + P1 is decomposable
        let mut two = x.clone();
        two.objects.insert(0, crate::proj::ProjMultiple::power(0, 2));
        assert!(!is_indecomposable(&two).unwrap());
    }

    #[test]
    fn shifted_homs_match_two_term_theory() {
        let (b, x, _y) = delta1_pair();
        // Hom((P1 -> 0), (0 -> P1)[1]) is End(P1) = K
        let p1_left = BoundedComplex::stalk(&b, 0).shift(1);
        assert_eq!(hom_dim(&p1_left, &x, 1).unwrap(), 1);
        // and in the other direction it vanishes
        assert_eq!(hom_dim(&x, &p1_left, 1).unwrap(), 0);
        // far shifts vanish for two-term complexes
        assert_eq!(hom_dim(&x, &p1_left, 2).unwrap(), 0);
        assert_eq!(hom_dim(&x, &p1_left, -2).unwrap(), 0);
    }
}
