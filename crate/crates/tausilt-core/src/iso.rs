//! Exact isomorphism testing between basic algebras given by structure
//! constants.
//!
//! The search fixes a vertex matching, picks arrow lifts on one side, and
//! backtracks over images of those arrows in the other algebra (linear
//! combinations of radical basis elements of the matching pair, small
//! integer coefficients, nonzero class modulo rad^2). Multiplicativity is
//! enforced incrementally through word closures, and any witness found is
//! re-verified exactly against the full tables, so positive answers are
//! sound; a `None` only means no isomorphism was found under this graded
//! search.

use crate::endo::StructureTable;
use crate::error::{Error, Result};
use crate::linalg::{sparse_from_dense, sparse_to_dense, Echelon, SparseVec};
use crate::scalar::Rat;

pub const DEFAULT_DIM_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct IsoOptions {
    pub dim_cap: usize,
    /// When set, only this vertex matching is tried.
    pub forced_vertex_map: Option<Vec<usize>>,
    /// Coefficients allowed in arrow images.
    pub coefficients: Vec<Rat>,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            dim_cap: DEFAULT_DIM_CAP,
            forced_vertex_map: None,
            coefficients: vec![Rat::ONE, -Rat::ONE],
        }
    }
}

/// Verified isomorphism: images of every basis element of A over B's basis.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub vertex_map: Vec<usize>,
    pub matrix: Vec<Vec<Rat>>,
    /// Largest absolute defect of multiplicativity; exactly zero by
    /// construction, re-checked in `verify`.
    pub residue: Rat,
}

impl IsoWitness {
    /// Exhaustive re-verification of the witness against both tables.
    pub fn verify(&self, a: &StructureTable, b: &StructureTable) -> Rat {
        let mut worst = Rat::ZERO;
        let apply = |v: &SparseVec| -> Vec<Rat> {
            let mut out = vec![Rat::ZERO; b.dim];
            for &(i, c) in v {
                for (k, x) in self.matrix[i as usize].iter().enumerate() {
                    out[k] += c * *x;
                }
            }
            out
        };
        for i in 0..a.dim {
            for j in 0..a.dim {
                let lhs = apply(a.product(i, j));
                let phi_i = sparse_from_dense(&self.matrix[i]);
                let phi_j = sparse_from_dense(&self.matrix[j]);
                let rhs = sparse_to_dense(&b.mul(&phi_i, &phi_j), b.dim);
                for k in 0..b.dim {
                    let d = (lhs[k] - rhs[k]).abs();
                    if d > worst {
                        worst = d;
                    }
                }
            }
        }
        // idempotents must match the vertex map
        for (v, &i) in a.idem.iter().enumerate() {
            let img = sparse_from_dense(&self.matrix[i]);
            let expect = crate::linalg::sparse_unit(b.idem[self.vertex_map[v]] as u32);
            if img != expect {
                worst = Rat::ONE;
            }
        }
        // bijectivity
        let mut ech = Echelon::new();
        for row in &self.matrix {
            ech.insert(sparse_from_dense(row));
        }
        if ech.rank() != b.dim || a.dim != b.dim {
            worst = Rat::ONE;
        }
        worst
    }
}

/// Per-pair dimensions of every radical power, the invariant screen data.
fn layered_pair_dims(t: &StructureTable) -> Vec<Vec<Vec<usize>>> {
    let n = t.vertex_count;
    let mut out = Vec::new();
    // layer 0: full per-pair dims
    let mut full = vec![vec![0usize; n]; n];
    for i in 0..t.dim {
        let (a, b) = t.pair[i];
        full[a][b] += 1;
    }
    out.push(full);
    for layer in t.radical_filtration() {
        let mut dims = vec![vec![0usize; n]; n];
        let mut per_pair: std::collections::BTreeMap<(usize, usize), Echelon> =
            std::collections::BTreeMap::new();
        for v in &layer {
            let pair = t.pair[v[0].0 as usize];
            per_pair.entry(pair).or_default().insert(v.clone());
        }
        for ((a, b), e) in per_pair {
            dims[a][b] = e.rank();
        }
        out.push(dims);
    }
    out
}

fn screen(a: &StructureTable, b: &StructureTable, sigma: &[usize]) -> bool {
    if a.dim != b.dim || a.vertex_count != b.vertex_count {
        return false;
    }
    let la = layered_pair_dims(a);
    let lb = layered_pair_dims(b);
    if la.len() != lb.len() {
        return false;
    }
    for (da, db) in la.iter().zip(&lb) {
        for x in 0..a.vertex_count {
            for y in 0..a.vertex_count {
                if da[x][y] != db[sigma[x]][sigma[y]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Arrow lifts of `a`: basis indices whose classes mod rad^2 form a basis of
/// rad/rad^2, pair by pair.
fn arrow_lifts(t: &StructureTable) -> Vec<usize> {
    let filt = t.radical_filtration();
    let mut rad2 = Echelon::new();
    if filt.len() > 1 {
        for v in &filt[1] {
            rad2.insert(v.clone());
        }
    }
    let mut chosen = Vec::new();
    let mut ech = rad2;
    for i in t.radical_indices() {
        if ech.insert(crate::linalg::sparse_unit(i as u32)) {
            chosen.push(i);
        }
    }
    chosen
}

/// All composable words over the chosen arrows, by nondecreasing length.
fn composable_words(t: &StructureTable, arrows: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = arrows.iter().map(|&a| vec![a]).collect();
    let mut out = words.clone();
    for _ in 2..=max_len {
        let mut next = Vec::new();
        for w in &words {
            let (_, end) = t.pair[*w.last().unwrap()];
            for &a in arrows {
                if t.pair[a].0 == end {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        words = next;
    }
    out
}

/// Candidate images for one arrow: vectors over `basis_elems` with small
/// coefficients and nonzero class modulo rad^2, simplest first.
fn candidates(
    b: &StructureTable,
    basis_elems: &[usize],
    rad2: &Echelon,
    coeffs: &[Rat],
) -> Vec<SparseVec> {
    let m = basis_elems.len();
    let mut out: Vec<(usize, usize, SparseVec)> = Vec::new();
    // enumerate assignments of coefficient-or-zero per basis element
    let mut stack: Vec<(usize, SparseVec)> = vec![(0, Vec::new())];
    while let Some((i, v)) = stack.pop() {
        if i == m {
            if v.is_empty() {
                continue;
            }
            // class mod rad^2 must be nonzero
            if rad2.contains(&v) {
                continue;
            }
            let nonzeros = v.len();
            let negatives = v.iter().filter(|&&(_, c)| c < Rat::ZERO).count();
            out.push((nonzeros, negatives, v));
            continue;
        }
        stack.push((i + 1, v.clone()));
        for &c in coeffs {
            let mut w = v.clone();
            w.push((basis_elems[i] as u32, c));
            stack.push((i + 1, w));
        }
    }
    let _ = b;
    out.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
    out.into_iter().map(|(_, _, v)| v).collect()
}

struct Search<'a> {
    a: &'a StructureTable,
    b: &'a StructureTable,
    sigma: Vec<usize>,
    arrows: Vec<usize>,
    words: Vec<Vec<usize>>,
    candidate_lists: Vec<Vec<SparseVec>>,
    b_rad2: Echelon,
}

impl Search<'_> {
    /// Checks well-definedness of the partial map determined by the images
    /// assigned so far, and on full assignments builds the witness.
    fn try_assignment(&self, images: &[SparseVec]) -> Option<Option<IsoWitness>> {
        let assigned = images.len();
        let arrow_pos: std::collections::HashMap<usize, usize> =
            self.arrows.iter().take(assigned).enumerate().map(|(k, &i)| (i, k)).collect();
        // independence of same-pair arrow images modulo rad^2
        let mut indep = self.b_rad2.clone();
        for img in images {
            if !indep.insert(img.clone()) {
                return None;
            }
        }
        // word closure: A-value vs B-value consistency
        let mut ech = Echelon::tracking();
        let mut b_values: Vec<SparseVec> = Vec::new();
        let mut insert_pair = |va: SparseVec, vb: SparseVec, ech: &mut Echelon, b_values: &mut Vec<SparseVec>| -> bool {
            if va.is_empty() {
                return vb.is_empty();
            }
            match ech.express(&va) {
                Some(combo) => {
                    // vb must equal the same combination of stored B-values
                    let mut expect: SparseVec = Vec::new();
                    for (k, c) in combo {
                        expect = crate::linalg::sparse_add_scaled(
                            &expect,
                            c,
                            &b_values[k as usize],
                        );
                    }
                    expect == vb
                }
                None => {
                    ech.insert(va);
                    b_values.push(vb);
                    true
                }
            }
        };
        for v in 0..self.a.vertex_count {
            let ea = crate::linalg::sparse_unit(self.a.idem[v] as u32);
            let eb = crate::linalg::sparse_unit(self.b.idem[self.sigma[v]] as u32);
            if !insert_pair(ea, eb, &mut ech, &mut b_values) {
                return None;
            }
        }
        for w in &self.words {
            if w.iter().any(|i| !arrow_pos.contains_key(i)) {
                continue;
            }
            let mut va = crate::linalg::sparse_unit(w[0] as u32);
            let mut vb = images[arrow_pos[&w[0]]].clone();
            for &ai in &w[1..] {
                va = self.a.mul(&va, &crate::linalg::sparse_unit(ai as u32));
                vb = self.b.mul(&vb, &images[arrow_pos[&ai]]);
            }
            if !insert_pair(va, vb, &mut ech, &mut b_values) {
                return None;
            }
        }
        if assigned < self.arrows.len() {
            return Some(None);
        }
        // full assignment: spanning on both sides
        if ech.rank() != self.a.dim {
            return None;
        }
        let mut b_span = Echelon::new();
        for v in &b_values {
            b_span.insert(v.clone());
        }
        if b_span.rank() != self.b.dim {
            return None;
        }
        // matrix of the iso: express each A basis unit over the word values
        let mut matrix = Vec::with_capacity(self.a.dim);
        for i in 0..self.a.dim {
            let combo = ech.express(&crate::linalg::sparse_unit(i as u32))?;
            let mut img: SparseVec = Vec::new();
            for (k, c) in combo {
                img = crate::linalg::sparse_add_scaled(&img, c, &b_values[k as usize]);
            }
            matrix.push(sparse_to_dense(&img, self.b.dim));
        }
        let witness =
            IsoWitness { vertex_map: self.sigma.clone(), matrix, residue: Rat::ZERO };
        let residue = witness.verify(self.a, self.b);
        if residue.is_zero() {
            Some(Some(witness))
        } else {
            None
        }
    }

    fn backtrack(&self, images: &mut Vec<SparseVec>) -> Option<IsoWitness> {
        match self.try_assignment(images) {
            None => None,
            Some(Some(w)) => Some(w),
            Some(None) => {
                let next = images.len();
                for cand in &self.candidate_lists[next] {
                    images.push(cand.clone());
                    if let Some(w) = self.backtrack(images) {
                        return Some(w);
                    }
                    images.pop();
                }
                None
            }
        }
    }
}

/// Searches for an exact algebra isomorphism `A -> B`.
pub fn is_isomorphic(
    a: &StructureTable,
    b: &StructureTable,
    opts: &IsoOptions,
) -> Result<Option<IsoWitness>> {
    if a.dim.max(b.dim) > opts.dim_cap {
        return Err(Error::DimensionCapExceeded(a.dim.max(b.dim), opts.dim_cap));
    }
    if a.dim != b.dim || a.vertex_count != b.vertex_count {
        return Ok(None);
    }
    let n = a.vertex_count;
    let mut sigmas: Vec<Vec<usize>> = Vec::new();
    match &opts.forced_vertex_map {
        Some(s) => sigmas.push(s.clone()),
        None => {
            // all permutations of 0..n (n is 2 in practice)
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                sigmas.push(perm.clone());
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    let nilpotency = a.radical_filtration().len().max(1);
    for sigma in sigmas {
        if !screen(a, b, &sigma) {
            continue;
        }
        let arrows = arrow_lifts(a);
        let words = composable_words(a, &arrows, nilpotency);
        let b_filt = b.radical_filtration();
        let mut b_rad2 = Echelon::new();
        if b_filt.len() > 1 {
            for v in &b_filt[1] {
                b_rad2.insert(v.clone());
            }
        }
        // candidate images per arrow
        let mut candidate_lists = Vec::with_capacity(arrows.len());
        let mut feasible = true;
        for &x in &arrows {
            let (pa, pb) = a.pair[x];
            let (qa, qb) = (sigma[pa], sigma[pb]);
            let basis_elems: Vec<usize> = b
                .radical_indices()
                .into_iter()
                .filter(|&i| b.pair[i] == (qa, qb))
                .collect();
            let list = candidates(b, &basis_elems, &b_rad2, &opts.coefficients);
            if list.is_empty() {
                feasible = false;
                break;
            }
            candidate_lists.push(list);
        }
        if !feasible {
            continue;
        }
        let search = Search { a, b, sigma, arrows, words, candidate_lists, b_rad2 };
        if let Some(w) = search.backtrack(&mut Vec::new()) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;
    use crate::catalog;
    use crate::endo::StructureTable;

    fn table(p: &crate::quiver::AlgebraPresentation) -> StructureTable {
        StructureTable::from_algebra(&compute_basis(p).unwrap())
    }

    #[test]
    fn identical_presentations_are_isomorphic() {
        for pres in [catalog::delta2(), catalog::omega5(), catalog::lambda1111()] {
            let a = table(&pres);
            let b = table(&pres);
            let w = is_isomorphic(&a, &b, &IsoOptions::default()).unwrap().unwrap();
            assert!(w.verify(&a, &b).is_zero());
        }
    }

    #[test]
    fn dimension_screen_rejects() {
        let a = table(&catalog::delta1());
        let b = table(&catalog::omega2());
        assert!(is_isomorphic(&a, &b, &IsoOptions::default()).unwrap().is_none());
    }

    #[test]
    fn opposites_of_symmetric_algebras() {
        // the Kronecker algebra is isomorphic to its opposite with swapped
        // vertices, and not with the identity matching
        let a = table(&catalog::delta1());
        let b = table(&catalog::delta1().opposite());
        let w = is_isomorphic(&a, &b, &IsoOptions::default()).unwrap().unwrap();
        assert_eq!(w.vertex_map, vec![1, 0]);
        let forced = IsoOptions {
            forced_vertex_map: Some(vec![0, 1]),
            ..IsoOptions::default()
        };
        assert!(is_isomorphic(&a, &b, &forced).unwrap().is_none());
    }

    #[test]
    fn omega3_not_isomorphic_to_delta2() {
        // same dimension (7) but different radical structure
        let a = table(&catalog::omega3());
        let b = table(&catalog::delta2());
        assert!(is_isomorphic(&a, &b, &IsoOptions::default()).unwrap().is_none());
    }

    #[test]
    fn dim_cap_enforced() {
        let a = table(&catalog::delta5());
        let opts = IsoOptions { dim_cap: 10, ..IsoOptions::default() };
        assert!(matches!(
            is_isomorphic(&a, &a, &opts),
            Err(Error::DimensionCapExceeded(16, 10))
        ));
    }
}
