//! Sparse exact linear algebra over the rationals.
//!
//! The chain-map and homotopy systems produced by the engine are large but
//! very sparse with `{0, ±1}` coefficients; everything here works on sorted
//! sparse rows and keeps arithmetic exact.

use crate::scalar::Rat;

/// Sparse vector: sorted `(column, coefficient)` pairs with nonzero entries.
pub type SparseVec = Vec<(u32, Rat)>;

pub fn sparse_from_dense(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, *c))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::ZERO; len];
    for &(i, c) in v {
        out[i as usize] = c;
    }
    out
}

pub fn sparse_unit(i: u32) -> SparseVec {
    vec![(i, Rat::ONE)]
}

pub fn sparse_scale(v: &SparseVec, c: Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, x * c)).collect()
}

/// `a + c*b`, merging sorted supports.
pub fn sparse_add_scaled(a: &SparseVec, c: Rat, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ia, va)), Some(&(ib, vb))) => {
                if ia < ib {
                    out.push((ia, va));
                    i += 1;
                } else if ib < ia {
                    out.push((ib, vb * c));
                    j += 1;
                } else {
                    let v = va + vb * c;
                    if !v.is_zero() {
                        out.push((ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&(ia, va)), None) => {
                out.push((ia, va));
                i += 1;
            }
            (None, Some(&(ib, vb))) => {
                out.push((ib, vb * c));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sparse_get(v: &SparseVec, col: u32) -> Rat {
    match v.binary_search_by_key(&col, |&(i, _)| i) {
        Ok(p) => v[p].1,
        Err(_) => Rat::ZERO,
    }
}

/// Row-echelon basis of a subspace, with optional tracking of how each
/// echelon row was produced from the inserted vectors.
///
/// Rows are kept fully reduced (reduced row-echelon form): each pivot column
/// appears in exactly one row, with coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    // combos[k] expresses rows[k] over the original inserted vectors
    combos: Vec<SparseVec>,
    track: bool,
    inserted: u32,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), combos: Vec::new(), track: false, inserted: 0 }
    }

    /// Echelon that remembers expressions over the inserted vectors.
    pub fn tracking() -> Self {
        Echelon { rows: Vec::new(), combos: Vec::new(), track: true, inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    fn reduce_internal(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        let mut combo: SparseVec = Vec::new();
        // rows are sorted by pivot column; sweep once
        for (k, row) in self.rows.iter().enumerate() {
            let piv = row[0].0;
            if v.is_empty() || piv > v[v.len() - 1].0 {
                break;
            }
            let c = sparse_get(&v, piv);
            if !c.is_zero() {
                v = sparse_add_scaled(&v, -c, row);
                if self.track {
                    combo = sparse_add_scaled(&combo, c, &self.combos[k]);
                }
            }
        }
        (v, combo)
    }

    /// Reduces `v` against the current rows; returns the residue.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_internal(v).0
    }

    /// True iff `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_internal(v).0.is_empty()
    }

    /// Expresses `v` over the original inserted vectors, if it is in the span.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "echelon built without tracking");
        let (res, combo) = self.reduce_internal(v);
        res.is_empty().then_some(combo)
    }

    /// Inserts a vector. Returns `true` if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (mut res, combo) = self.reduce_internal(&v);
        if res.is_empty() {
            return false;
        }
        let mut combo = if self.track {
            // residue = v - combo·inserted, so v-expression carries -combo
            let mut c = sparse_scale(&combo, -Rat::ONE);
            c = sparse_add_scaled(&c, Rat::ONE, &sparse_unit(idx));
            c
        } else {
            Vec::new()
        };
        // normalize pivot to 1
        let lead = res[0].1;
        if !lead.is_one() {
            let inv = lead.recip();
            res = sparse_scale(&res, inv);
            if self.track {
                combo = sparse_scale(&combo, inv);
            }
        }
        let piv = res[0].0;
        // back-substitute into existing rows to stay fully reduced
        for k in 0..self.rows.len() {
            let c = sparse_get(&self.rows[k], piv);
            if !c.is_zero() {
                self.rows[k] = sparse_add_scaled(&self.rows[k], -c, &res);
                if self.track {
                    self.combos[k] = sparse_add_scaled(&self.combos[k], -c, &combo);
                }
            }
        }
        let pos = self.rows.partition_point(|r| r[0].0 < piv);
        self.rows.insert(pos, res);
        self.combos.insert(pos, combo);
        true
    }
}

/// Kernel basis of the linear map given by `rows` acting on `n` unknowns:
/// all `x` with `row · x = 0` for every row.
///
/// Returned vectors are the standard free-column kernel basis of the RREF,
/// one per non-pivot unknown, in ascending unknown order.
pub fn kernel_basis(rows: &[SparseVec], n: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    let pivot_set: Vec<u32> = ech.pivots().collect();
    let mut is_pivot = vec![false; n];
    for &p in &pivot_set {
        is_pivot[p as usize] = true;
    }
    let mut basis = Vec::with_capacity(n - pivot_set.len());
    for f in 0..n as u32 {
        if is_pivot[f as usize] {
            continue;
        }
        // x_f = 1, x_{p_k} = -row_k[f]
        let mut v: SparseVec = vec![(f, Rat::ONE)];
        for (k, row) in ech.rows().iter().enumerate() {
            let c = sparse_get(row, f);
            if !c.is_zero() {
                v = sparse_add_scaled(&v, -c, &sparse_unit(pivot_set[k]));
            }
        }
        v.sort_by_key(|&(i, _)| i);
        basis.push(v);
    }
    basis
}

pub fn rank(rows: &[SparseVec]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}

/// Dense square-matrix inverse; used only on small matrices.
pub fn invert_dense(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::ONE } else { Rat::ZERO }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].recip();
        for j in 0..n {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col];
                for j in 0..n {
                    let s = a[col][j] * c;
                    a[r][j] = a[r][j] - s;
                    let s = inv[col][j] * c;
                    inv[r][j] = inv[r][j] - s;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(u32, i64)]) -> SparseVec {
        pairs.iter().map(|&(i, c)| (i, Rat::from_int(c))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (1, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.reduce(&sv(&[(0, 2), (1, 4)])).is_empty());
        assert!(!e.reduce(&sv(&[(2, 1)])).is_empty());
    }

    #[test]
    fn echelon_tracking_expresses_members() {
        let mut e = Echelon::tracking();
        e.insert(sv(&[(0, 1), (1, 1)]));
        e.insert(sv(&[(1, 1)]));
        let combo = e.express(&sv(&[(0, 3), (1, 5)])).unwrap();
        // 3*(v0) + 2*(v1)
        assert_eq!(combo, sv(&[(0, 3), (1, 2)]));
        assert!(e.express(&sv(&[(2, 1)])).is_none());
    }

    #[test]
    fn kernel_of_small_system() {
        // x0 + x1 - x2 = 0 ; x1 + x2 = 0
        let rows = vec![sv(&[(0, 1), (1, 1), (2, -1)]), sv(&[(1, 1), (2, 1)])];
        let ker = kernel_basis(&rows, 3);
        assert_eq!(ker.len(), 1);
        for row in &rows {
            let dot: Rat = row
                .iter()
                .map(|&(i, c)| c * sparse_get(&ker[0], i))
                .fold(Rat::ZERO, |a, b| a + b);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn kernel_of_empty_system_is_everything() {
        let ker = kernel_basis(&[], 4);
        assert_eq!(ker.len(), 4);
        assert_eq!(ker[2], sparse_unit(2));
    }

    #[test]
    fn dense_inverse() {
        let m = vec![
            vec![Rat::from_int(2), Rat::from_int(1)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ];
        let inv = invert_dense(&m).unwrap();
        assert_eq!(inv[0][0], Rat::from_int(1));
        assert_eq!(inv[0][1], Rat::from_int(-1));
        assert_eq!(inv[1][0], Rat::from_int(-1));
        assert_eq!(inv[1][1], Rat::from_int(2));
        let singular = vec![
            vec![Rat::from_int(1), Rat::from_int(2)],
            vec![Rat::from_int(2), Rat::from_int(4)],
        ];
        assert!(invert_dense(&singular).is_none());
    }
}
