//! Bounded complexes of projectives, mapping cones, shifts, g-vectors and
//! minimization (removal of contractible summands).

use crate::algebra::{AlgebraBasis, AlgebraElement};
use crate::error::{Error, Result};
use crate::linalg::sparse_add_scaled;
use crate::proj::{compose, ProjMorphism, ProjMultiple};
use crate::scalar::Rat;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Class of a two-term complex in the Grothendieck group: multiplicities in
/// degree 0 minus multiplicities in degree -1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize)]
pub struct GVector(pub Vec<i64>);

impl std::fmt::Display for GVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Bounded complex of projective multiples; `diffs[n]` maps degree n to n+1.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedComplex {
    pub algebra: Arc<AlgebraBasis>,
    pub objects: BTreeMap<i32, ProjMultiple>,
    pub diffs: BTreeMap<i32, ProjMorphism>,
}

impl BoundedComplex {
    pub fn zero(algebra: &Arc<AlgebraBasis>) -> Self {
        BoundedComplex { algebra: algebra.clone(), objects: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// Stalk complex `0 -> P_v` concentrated in degree 0.
    pub fn stalk(algebra: &Arc<AlgebraBasis>, v: usize) -> Self {
        let mut objects = BTreeMap::new();
        objects.insert(0, ProjMultiple::single(v));
        BoundedComplex { algebra: algebra.clone(), objects, diffs: BTreeMap::new() }
    }

    /// Two-term complex determined by its differential `P^{-1} -> P^0`.
    pub fn two_term(d: ProjMorphism) -> Self {
        let algebra = d.algebra.clone();
        let mut objects = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        if !d.source.is_zero() {
            objects.insert(-1, d.source.clone());
        }
        if !d.target.is_zero() {
            objects.insert(0, d.target.clone());
        }
        if !d.source.is_zero() && !d.target.is_zero() {
            diffs.insert(-1, d);
        }
        BoundedComplex { algebra, objects, diffs }
    }

    pub fn object_at(&self, n: i32) -> ProjMultiple {
        self.objects.get(&n).cloned().unwrap_or_else(ProjMultiple::zero)
    }

    pub fn diff_at(&self, n: i32) -> ProjMorphism {
        match self.diffs.get(&n) {
            Some(d) => d.clone(),
            None => ProjMorphism::zero(&self.algebra, self.object_at(n), self.object_at(n + 1)),
        }
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.objects.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.objects.keys().next_back().copied()
    }

    pub fn is_zero_complex(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn is_two_term(&self) -> bool {
        self.objects.keys().all(|&n| n == -1 || n == 0)
    }

    /// Validates d composed with d = 0 and entry placement.
    pub fn validate(&self) -> Result<()> {
        for d in self.diffs.values() {
            d.validate()?;
        }
        if let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) {
            for n in lo..hi {
                let dd = compose(&self.diff_at(n), &self.diff_at(n + 1))?;
                if !dd.is_zero() {
                    return Err(Error::Inconsistency(format!("d∘d != 0 at degree {n}")));
                }
            }
        }
        Ok(())
    }

    /// Shift `X[k]`: objects move down by k, differentials pick up `(-1)^k`.
    pub fn shift(&self, k: i32) -> BoundedComplex {
        let objects = self.objects.iter().map(|(&n, o)| (n - k, o.clone())).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&n, d)| {
                let d = if k % 2 == 0 { d.clone() } else { d.negate() };
                (n - k, d)
            })
            .collect();
        BoundedComplex { algebra: self.algebra.clone(), objects, diffs }
    }

    /// g-vector `(a_1 - b_1, ..., a_n - b_n)` of a two-term complex.
    pub fn g_vector(&self) -> GVector {
        debug_assert!(self.is_two_term());
        let n = self.algebra.vertex_count();
        let a = self.object_at(0).multiplicities(n);
        let b = self.object_at(-1).multiplicities(n);
        GVector((0..n).map(|i| a[i] as i64 - b[i] as i64).collect())
    }

    pub fn total_summands(&self) -> usize {
        self.objects.values().map(|o| o.len()).sum()
    }
}

/// Chain map between complexes over the same algebra (no implicit shift).
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: BoundedComplex,
    pub target: BoundedComplex,
    pub comps: BTreeMap<i32, ProjMorphism>,
}

impl ChainMap {
    pub fn comp_at(&self, n: i32) -> ProjMorphism {
        match self.comps.get(&n) {
            Some(c) => c.clone(),
            None => ProjMorphism::zero(
                &self.source.algebra,
                self.source.object_at(n),
                self.target.object_at(n),
            ),
        }
    }

    /// Checks the squares `f^{n+1} ∘ d_X^n = d_Y^n ∘ f^n`.
    pub fn validate(&self) -> Result<()> {
        let degs: Vec<i32> = self
            .source
            .objects
            .keys()
            .chain(self.target.objects.keys())
            .copied()
            .collect();
        let (lo, hi) = match (degs.iter().min(), degs.iter().max()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Ok(()),
        };
        for n in lo - 1..=hi {
            let lhs = compose(&self.source.diff_at(n), &self.comp_at(n + 1))?;
            let rhs = compose(&self.comp_at(n), &self.target.diff_at(n))?;
            let mut diff = lhs;
            for (e, o) in diff.entries.iter_mut().zip(rhs.entries.iter()) {
                let sum = sparse_add_scaled(&e.coeffs, -Rat::ONE, &o.coeffs);
                *e = diff_entry(&self.source.algebra, sum);
            }
            if !diff.is_zero() {
                return Err(Error::Inconsistency(format!("chain-map square fails at {n}")));
            }
        }
        Ok(())
    }
}

fn diff_entry(a: &Arc<AlgebraBasis>, coeffs: crate::linalg::SparseVec) -> AlgebraElement {
    a.element(coeffs)
}

/// Mapping cone of `f : X -> Y`: degree n part is `X^{n+1} ⊕ Y^n` with
/// differential `[[-d_X, 0], [f, d_Y]]` in block form.
pub fn cone(f: &ChainMap) -> Result<BoundedComplex> {
    let x = &f.source;
    let y = &f.target;
    if !Arc::ptr_eq(&x.algebra, &y.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let algebra = x.algebra.clone();
    let mut objects = BTreeMap::new();
    let degs: Vec<i32> = {
        let mut v: Vec<i32> = x.objects.keys().map(|&n| n - 1).collect();
        v.extend(y.objects.keys());
        v.sort_unstable();
        v.dedup();
        v
    };
    for &n in &degs {
        let part = x.object_at(n + 1).concat(&y.object_at(n));
        if !part.is_zero() {
            objects.insert(n, part);
        }
    }
    let mut diffs = BTreeMap::new();
    for &n in &degs {
        let src = x.object_at(n + 1).concat(&y.object_at(n));
        let tgt = x.object_at(n + 2).concat(&y.object_at(n + 1));
        if src.is_zero() || tgt.is_zero() {
            continue;
        }
        let mut d = ProjMorphism::zero(&algebra, src, tgt);
        let dx = x.diff_at(n + 1).negate();
        let dy = y.diff_at(n);
        let fc = f.comp_at(n + 1);
        let x_cols = x.object_at(n + 1).len();
        let x_rows = x.object_at(n + 2).len();
        for r in 0..dx.target.len() {
            for c in 0..dx.source.len() {
                *d.at_mut(r, c) = dx.at(r, c).clone();
            }
        }
        for r in 0..fc.target.len() {
            for c in 0..fc.source.len() {
                *d.at_mut(x_rows + r, c) = fc.at(r, c).clone();
            }
        }
        for r in 0..dy.target.len() {
            for c in 0..dy.source.len() {
                *d.at_mut(x_rows + r, x_cols + c) = dy.at(r, c).clone();
            }
        }
        if !d.is_zero() {
            diffs.insert(n, d);
        }
    }
    let out = BoundedComplex { algebra, objects, diffs };
    out.validate()?;
    Ok(out)
}

/// Inverse of an element of `e_v Lambda e_v` whose trivial-path coefficient
/// is nonzero (unit = scalar plus nilpotent).
fn invert_local(a: &Arc<AlgebraBasis>, x: &AlgebraElement, v: usize) -> Option<AlgebraElement> {
    let e_idx = a.idempotents[v] as u32;
    let lambda = crate::linalg::sparse_get(&x.coeffs, e_idx);
    if lambda.is_zero() {
        return None;
    }
    // y = e_v - x/lambda is nilpotent; inverse = (e_v + y + y^2 + ...)/lambda
    let e = a.idempotent(v);
    let scaled = a.element(crate::linalg::sparse_scale(&x.coeffs, Rat::ONE / lambda));
    let y = a.element(sparse_add_scaled(&e.coeffs, -Rat::ONE, &scaled.coeffs));
    let mut acc = e.clone();
    let mut pow = y.clone();
    for _ in 0..a.nilpotency + 1 {
        if pow.is_zero() {
            break;
        }
        acc = a.element(sparse_add_scaled(&acc.coeffs, Rat::ONE, &pow.coeffs));
        pow = a.multiply(&pow, &y).unwrap();
    }
    Some(a.element(crate::linalg::sparse_scale(&acc.coeffs, Rat::ONE / lambda)))
}

/// Finds an invertible entry of some differential, if any.
fn find_unit(c: &BoundedComplex) -> Option<(i32, usize, usize, AlgebraElement)> {
    for (&n, d) in &c.diffs {
        for r in 0..d.target.len() {
            for col in 0..d.source.len() {
                let t = d.target.summands[r];
                let s = d.source.summands[col];
                if t != s {
                    continue;
                }
                if let Some(inv) = invert_local(&c.algebra, d.at(r, col), t) {
                    return Some((n, r, col, inv));
                }
            }
        }
    }
    None
}

/// Homotopy-equivalent complex with no invertible differential entries:
/// repeatedly Gauss-eliminates unit pivots and drops the contractible
/// `P -> P` summand they span.
pub fn minimize(c: &BoundedComplex) -> Result<BoundedComplex> {
    let mut c = c.clone();
    while let Some((n, r0, c0, u_inv)) = find_unit(&c) {
        let a = c.algebra.clone();
        let mut d = c.diff_at(n);
        // clear column c0 outside row r0 (row operations on X^{n+1})
        let alphas: Vec<AlgebraElement> = (0..d.target.len())
            .map(|r| {
                if r == r0 {
                    a.zero()
                } else {
                    a.multiply(d.at(r, c0), &u_inv).unwrap()
                }
            })
            .collect();
        for r in 0..d.target.len() {
            if r == r0 || alphas[r].is_zero() {
                continue;
            }
            for col in 0..d.source.len() {
                let sub = a.multiply(&alphas[r], d.at(r0, col)).unwrap();
                let val = sparse_add_scaled(&d.at(r, col).coeffs, -Rat::ONE, &sub.coeffs);
                *d.at_mut(r, col) = a.element(val);
            }
        }
        // transport the basis change to d^{n+1}: column r0 += sum col_m * alpha_m
        let mut d_next = c.diff_at(n + 1);
        if !d_next.source.is_zero() && !d_next.target.is_zero() {
            for r in 0..d_next.target.len() {
                let mut acc = d_next.at(r, r0).clone();
                for (m, alpha) in alphas.iter().enumerate() {
                    if m == r0 || alpha.is_zero() {
                        continue;
                    }
                    let term = a.multiply(d_next.at(r, m), alpha).unwrap();
                    acc = a.element(sparse_add_scaled(&acc.coeffs, Rat::ONE, &term.coeffs));
                }
                *d_next.at_mut(r, r0) = acc;
            }
        }
        // clear row r0 outside column c0 (column operations on X^n)
        let betas: Vec<AlgebraElement> = (0..d.source.len())
            .map(|col| {
                if col == c0 {
                    a.zero()
                } else {
                    a.multiply(&u_inv, d.at(r0, col)).unwrap()
                }
            })
            .collect();
        for col in 0..d.source.len() {
            if col == c0 || betas[col].is_zero() {
                continue;
            }
            // only row r0 can change; the column c0 is zero elsewhere
            let sub = a.multiply(d.at(r0, c0), &betas[col]).unwrap();
            let val = sparse_add_scaled(&d.at(r0, col).coeffs, -Rat::ONE, &sub.coeffs);
            *d.at_mut(r0, col) = a.element(val);
        }
        // transport to d^{n-1}: row c0 += sum beta_m * row_m
        let mut d_prev = c.diff_at(n - 1);
        if !d_prev.source.is_zero() && !d_prev.target.is_zero() {
            for col in 0..d_prev.source.len() {
                let mut acc = d_prev.at(c0, col).clone();
                for (m, beta) in betas.iter().enumerate() {
                    if m == c0 || beta.is_zero() {
                        continue;
                    }
                    let term = a.multiply(beta, d_prev.at(m, col)).unwrap();
                    acc = a.element(sparse_add_scaled(&acc.coeffs, Rat::ONE, &term.coeffs));
                }
                *d_prev.at_mut(c0, col) = acc;
            }
        }
        // drop summand c0 in degree n and r0 in degree n+1
        let keep_src: Vec<usize> = (0..d.source.len()).filter(|&i| i != c0).collect();
        let keep_tgt: Vec<usize> = (0..d.target.len()).filter(|&i| i != r0).collect();
        let new_d = d.submatrix(&keep_tgt, &keep_src);
        let new_d_prev = {
            let rows: Vec<usize> = (0..d_prev.target.len()).filter(|&i| i != c0).collect();
            let cols: Vec<usize> = (0..d_prev.source.len()).collect();
            d_prev.submatrix(&rows, &cols)
        };
        let new_d_next = {
            let rows: Vec<usize> = (0..d_next.target.len()).collect();
            let cols: Vec<usize> = (0..d_next.source.len()).filter(|&i| i != r0).collect();
            d_next.submatrix(&rows, &cols)
        };

        let mut objects = c.objects.clone();
        let set_obj = |objects: &mut BTreeMap<i32, ProjMultiple>, deg: i32, o: ProjMultiple| {
            if o.is_zero() {
                objects.remove(&deg);
            } else {
                objects.insert(deg, o);
            }
        };
        set_obj(&mut objects, n, new_d.source.clone());
        set_obj(&mut objects, n + 1, new_d.target.clone());
        let mut diffs = c.diffs.clone();
        let set_diff = |diffs: &mut BTreeMap<i32, ProjMorphism>, deg: i32, d: ProjMorphism| {
            if d.source.is_zero() || d.target.is_zero() {
                diffs.remove(&deg);
            } else {
                diffs.insert(deg, d);
            }
        };
        set_diff(&mut diffs, n, new_d);
        set_diff(&mut diffs, n - 1, new_d_prev);
        set_diff(&mut diffs, n + 1, new_d_next);
        c = BoundedComplex { algebra: a, objects, diffs };
    }
    c.validate()?;
    Ok(c)
}
