//! Finite direct sums of indecomposable projectives `P_i = e_i Lambda` and
//! morphisms between them as matrices of algebra elements.
//!
//! A morphism entry at row r, column c lies in `e_{t(r)} Lambda e_{s(c)}` and
//! acts by left multiplication, so `Hom(P_i, P_j) = e_j Lambda e_i` with its
//! basis given by paths from j to i.

use crate::algebra::{AlgebraBasis, AlgebraElement};
use crate::error::{Error, Result};
use crate::quiver::{Path, VertexId};
use std::sync::Arc;

/// Direct sum of projectives, kept as an explicit summand sequence so that
/// block constructions (cones) preserve their layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMultiple {
    pub summands: Vec<VertexId>,
}

impl ProjMultiple {
    pub fn zero() -> Self {
        ProjMultiple { summands: Vec::new() }
    }

    pub fn single(v: VertexId) -> Self {
        ProjMultiple { summands: vec![v] }
    }

    pub fn power(v: VertexId, k: usize) -> Self {
        ProjMultiple { summands: vec![v; k] }
    }

    pub fn concat(&self, other: &ProjMultiple) -> ProjMultiple {
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        ProjMultiple { summands }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiplicity vector (a_1, ..., a_n).
    pub fn multiplicities(&self, vertex_count: usize) -> Vec<usize> {
        let mut counts = vec![0; vertex_count];
        for &v in &self.summands {
            counts[v] += 1;
        }
        counts
    }
}

/// Matrix of algebra elements acting by left multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjMorphism {
    pub algebra: Arc<AlgebraBasis>,
    pub source: ProjMultiple,
    pub target: ProjMultiple,
    /// Row-major, `entries[r * source.len() + c]`.
    pub entries: Vec<AlgebraElement>,
}

impl ProjMorphism {
    pub fn zero(algebra: &Arc<AlgebraBasis>, source: ProjMultiple, target: ProjMultiple) -> Self {
        let entries = vec![algebra.zero(); source.len() * target.len()];
        ProjMorphism { algebra: algebra.clone(), source, target, entries }
    }

    pub fn identity(algebra: &Arc<AlgebraBasis>, object: ProjMultiple) -> Self {
        let mut m = ProjMorphism::zero(algebra, object.clone(), object.clone());
        for (i, &v) in object.summands.iter().enumerate() {
            *m.at_mut(i, i) = algebra.idempotent(v);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.entries[r * self.source.len() + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut AlgebraElement {
        let cols = self.source.len();
        &mut self.entries[r * cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: AlgebraElement) -> Result<()> {
        let pair_ok = self.entry_is_in_pair(r, c, &value);
        if !pair_ok {
            return Err(Error::Inconsistency(format!(
                "entry ({r},{c}) not in e_t Lambda e_s"
            )));
        }
        *self.at_mut(r, c) = value;
        Ok(())
    }

    fn entry_is_in_pair(&self, r: usize, c: usize, value: &AlgebraElement) -> bool {
        let t = self.target.summands[r];
        let s = self.source.summands[c];
        value.coeffs.iter().all(|&(i, _)| self.algebra.pair_of(i as usize) == (t, s))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Every entry lies in its required per-pair subspace.
    pub fn validate(&self) -> Result<()> {
        for r in 0..self.target.len() {
            for c in 0..self.source.len() {
                if !self.at(r, c).is_zero() && !self.entry_is_in_pair(r, c, self.at(r, c)) {
                    return Err(Error::Inconsistency(format!(
                        "entry ({r},{c}) lies outside its Hom pair"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn negate(&self) -> ProjMorphism {
        let mut out = self.clone();
        for e in &mut out.entries {
            for (_, c) in &mut e.coeffs {
                *c = -*c;
            }
        }
        out
    }

    /// Restriction to chosen source columns and target rows.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ProjMorphism {
        let source =
            ProjMultiple { summands: cols.iter().map(|&c| self.source.summands[c]).collect() };
        let target =
            ProjMultiple { summands: rows.iter().map(|&r| self.target.summands[r]).collect() };
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.at(r, c).clone());
            }
        }
        ProjMorphism { algebra: self.algebra.clone(), source, target, entries }
    }

    /// Stacks `self` above `other` (shared source): target is the
    /// concatenation of targets.
    pub fn stack_rows(&self, other: &ProjMorphism) -> Result<ProjMorphism> {
        if self.source != other.source || !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::ShapeMismatch);
        }
        let target = self.target.concat(&other.target);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ProjMorphism { algebra: self.algebra.clone(), source: self.source.clone(), target, entries })
    }

    /// Places `self` beside `other` (shared target): source concatenated.
    pub fn concat_cols(&self, other: &ProjMorphism) -> Result<ProjMorphism> {
        if self.target != other.target || !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::ShapeMismatch);
        }
        let source = self.source.concat(&other.source);
        let rows = self.target.len();
        let mut entries = Vec::with_capacity(rows * source.len());
        for r in 0..rows {
            for c in 0..self.source.len() {
                entries.push(self.at(r, c).clone());
            }
            for c in 0..other.source.len() {
                entries.push(other.at(r, c).clone());
            }
        }
        Ok(ProjMorphism { algebra: self.algebra.clone(), source, target: self.target.clone(), entries })
    }
}

/// Basis of `Hom(P_i, P_j)` as paths (the per-pair basis `e_j Lambda e_i`).
pub fn hom_basis_proj(basis: &AlgebraBasis, i: VertexId, j: VertexId) -> Result<Vec<Path>> {
    let n = basis.vertex_count();
    if i >= n || j >= n {
        return Err(Error::UnknownVertex(format!("index {}", i.max(j))));
    }
    Ok(basis.per_pair[j][i].iter().map(|&k| basis.paths[k].clone()).collect())
}

/// Composition "apply f, then g": for left-multiplication matrices this is
/// the matrix product of g's entries against f's.
pub fn compose(f: &ProjMorphism, g: &ProjMorphism) -> Result<ProjMorphism> {
    if f.target != g.source || !Arc::ptr_eq(&f.algebra, &g.algebra) {
        return Err(Error::ShapeMismatch);
    }
    let a = &f.algebra;
    let mut out = ProjMorphism::zero(a, f.source.clone(), g.target.clone());
    for r in 0..g.target.len() {
        for c in 0..f.source.len() {
            let mut acc = a.zero();
            for m in 0..f.target.len() {
                let term = a.multiply(g.at(r, m), f.at(m, c))?;
                acc = a.element(crate::linalg::sparse_add_scaled(
                    &acc.coeffs,
                    crate::scalar::Rat::ONE,
                    &term.coeffs,
                ));
            }
            *out.at_mut(r, c) = acc;
        }
    }
    Ok(out)
}
