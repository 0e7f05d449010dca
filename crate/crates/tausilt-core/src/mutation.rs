//! Irreducible silting mutation of two-term silting pairs: minimal left and
//! right approximations, mapping cones, and the g-vector transfer check
//! `g(cone) = k g(E) - g(T_j)`.

use crate::algebra::AlgebraBasis;
use crate::complex::{cone, minimize, BoundedComplex, ChainMap, GVector};
use crate::error::{Error, Result};
use crate::hom::{
    compose_components, hom_homotopy, is_indecomposable, is_two_term_silting, trace_radical,
    HomSpace,
};
use crate::proj::{ProjMorphism, ProjMultiple};
use crate::scalar::Rat;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Basic two-term silting object over a two-point algebra: an ordered pair
/// of indecomposable two-term complexes, slot i aligned with vertex i of the
/// starting algebra.
#[derive(Clone, Debug)]
pub struct SiltingObject {
    pub algebra: Arc<AlgebraBasis>,
    pub summands: Vec<BoundedComplex>,
}

impl SiltingObject {
    /// The algebra itself as a stalk pair `(0 -> P_1) ⊕ (0 -> P_2)`.
    pub fn initial(algebra: &Arc<AlgebraBasis>) -> Result<Self> {
        let n = algebra.vertex_count();
        if n != 2 {
            return Err(Error::UnsupportedShape(n));
        }
        let summands = (0..n).map(|v| BoundedComplex::stalk(algebra, v)).collect();
        Ok(SiltingObject { algebra: algebra.clone(), summands })
    }

    pub fn g_vectors(&self) -> Vec<GVector> {
        self.summands.iter().map(|c| c.g_vector()).collect()
    }

    /// Node key: the unordered pair of summand g-vectors.
    pub fn key(&self) -> Vec<GVector> {
        let mut g = self.g_vectors();
        g.sort();
        g
    }

    /// True iff this is `Lambda[1]`, i.e. all g-vectors are negated units.
    pub fn is_shifted_algebra(&self) -> bool {
        let n = self.algebra.vertex_count();
        let mut expect: Vec<GVector> = (0..n)
            .map(|v| {
                let mut g = vec![0i64; n];
                g[v] = -1;
                GVector(g)
            })
            .collect();
        expect.sort();
        self.key() == expect
    }

    /// Full silting verification of the pair.
    pub fn verify(&self) -> Result<bool> {
        is_two_term_silting(&self.summands[0], &self.summands[1])
    }
}

/// Minimal approximation `pi` with its multiplicity and factorization
/// certificate already checked.
pub struct Approximation {
    /// number of copies of E in the approximation target/source
    pub multiplicity: usize,
    /// components of pi (for left: T_j -> E^k; for right: E^k -> T_j)
    pub comps: BTreeMap<i32, ProjMorphism>,
    /// the power complex E^k
    pub power: BoundedComplex,
}

/// Degreewise direct sum of k copies of a complex, copies blocked together.
fn power_complex(e: &BoundedComplex, k: usize) -> BoundedComplex {
    let a = &e.algebra;
    let mut objects = BTreeMap::new();
    for (&n, o) in &e.objects {
        let mut summands = Vec::with_capacity(o.len() * k);
        for _ in 0..k {
            summands.extend_from_slice(&o.summands);
        }
        if !summands.is_empty() {
            objects.insert(n, ProjMultiple { summands });
        }
    }
    let mut diffs = BTreeMap::new();
    for (&n, d) in &e.diffs {
        let src = ProjMultiple {
            summands: objects.get(&n).map(|o| o.summands.clone()).unwrap_or_default(),
        };
        let tgt = ProjMultiple {
            summands: objects.get(&(n + 1)).map(|o| o.summands.clone()).unwrap_or_default(),
        };
        let mut big = ProjMorphism::zero(a, src, tgt);
        let (rows, cols) = (d.target.len(), d.source.len());
        for copy in 0..k {
            for r in 0..rows {
                for c in 0..cols {
                    *big.at_mut(copy * rows + r, copy * cols + c) = d.at(r, c).clone();
                }
            }
        }
        diffs.insert(n, big);
    }
    BoundedComplex { algebra: a.clone(), objects, diffs }
}

/// End(E) as a multiplication table over the Hom-space representatives,
/// together with a radical basis (dense vectors over the representatives).
fn end_table(e: &BoundedComplex) -> Result<(HomSpace, Vec<Vec<Rat>>, Vec<Vec<Rat>>)> {
    let end = hom_homotopy(e, e, 0)?;
    let d = end.dim;
    let reps: Vec<BTreeMap<i32, ProjMorphism>> = (0..d).map(|i| end.rep_components(i)).collect();
    let mut table = vec![vec![Rat::ZERO; d]; d * d];
    for i in 0..d {
        for j in 0..d {
            // basis product u_i * u_j = "first u_j, then u_i"
            let prod = compose_components(e, e, e, &reps[j], &reps[i])?;
            table[i * d + j] = end.class_of_components(&prod)?;
        }
    }
    let rad = trace_radical(d, &table);
    Ok((end, table, rad))
}

/// Minimal left `add(E)`-approximation of `tj`, with multiplicity
/// `k = dim Hom(tj, E) / rad End(E) ∘ Hom(tj, E)` and a factorization
/// certificate (every map tj -> E factors through pi).
pub fn minimal_left_approximation(
    tj: &BoundedComplex,
    e: &BoundedComplex,
) -> Result<Approximation> {
    let hom = hom_homotopy(tj, e, 0)?;
    let d = hom.dim;
    let (end, _table, rad) = end_table(e)?;
    let end_reps: Vec<BTreeMap<i32, ProjMorphism>> =
        (0..end.dim).map(|i| end.rep_components(i)).collect();
    let hom_reps: Vec<BTreeMap<i32, ProjMorphism>> = (0..d).map(|i| hom.rep_components(i)).collect();

    // classes of u_a ∘ phi_b (first phi, then u) in the Hom basis
    let mut composed = vec![vec![Rat::ZERO; d]; end.dim * d];
    for (a, u) in end_reps.iter().enumerate() {
        for (b, phi) in hom_reps.iter().enumerate() {
            let prod = compose_components(tj, e, e, phi, u)?;
            composed[a * d + b] = hom.class_of_components(&prod)?;
        }
    }
    // span of rad End(E) ∘ Hom(tj, E)
    let mut ech = crate::linalg::Echelon::new();
    for rho in &rad {
        for b in 0..d {
            let mut v = vec![Rat::ZERO; d];
            for (a, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (x, val) in v.iter_mut().enumerate() {
                    *val += *coeff * composed[a * d + b][x];
                }
            }
            let sv = crate::linalg::sparse_from_dense(&v);
            if !sv.is_empty() {
                ech.insert(sv);
            }
        }
    }
    let pivots: Vec<u32> = ech.pivots().collect();
    let chosen: Vec<usize> =
        (0..d).filter(|&i| pivots.binary_search(&(i as u32)).is_err()).collect();
    let k = chosen.len();
    debug_assert_eq!(k, d - ech.rank());

    let power = power_complex(e, k);
    // stack the chosen representatives vertically
    let mut comps: BTreeMap<i32, ProjMorphism> = BTreeMap::new();
    for (&n, src_obj) in &tj.objects {
        let tgt = power.object_at(n);
        if tgt.is_zero() {
            continue;
        }
        let mut m = ProjMorphism::zero(&tj.algebra, src_obj.clone(), tgt);
        let block_rows = e.object_at(n).len();
        for (copy, &rep_i) in chosen.iter().enumerate() {
            if let Some(part) = hom_reps[rep_i].get(&n) {
                for r in 0..part.target.len() {
                    for c in 0..part.source.len() {
                        *m.at_mut(copy * block_rows + r, c) = part.at(r, c).clone();
                    }
                }
            }
        }
        comps.insert(n, m);
    }

    // factorization certificate: maps u ∘ pi_i span the whole Hom space
    let mut cert = crate::linalg::Echelon::new();
    for u in 0..end.dim {
        for &i in &chosen {
            let v = &composed[u * d + i];
            let sv = crate::linalg::sparse_from_dense(v);
            if !sv.is_empty() {
                cert.insert(sv);
            }
        }
    }
    if cert.rank() != d {
        return Err(Error::ApproximationCheckFailed(format!(
            "left approximation spans {} of {d} Hom classes",
            cert.rank()
        )));
    }
    Ok(Approximation { multiplicity: k, comps, power })
}

/// Minimal right `add(E)`-approximation `pi : E^k -> tj`, the dual of the
/// left version (quotient by the right action of rad End(E)).
pub fn minimal_right_approximation(
    tj: &BoundedComplex,
    e: &BoundedComplex,
) -> Result<Approximation> {
    let hom = hom_homotopy(e, tj, 0)?;
    let d = hom.dim;
    let (end, _table, rad) = end_table(e)?;
    let end_reps: Vec<BTreeMap<i32, ProjMorphism>> =
        (0..end.dim).map(|i| end.rep_components(i)).collect();
    let hom_reps: Vec<BTreeMap<i32, ProjMorphism>> = (0..d).map(|i| hom.rep_components(i)).collect();

    // classes of phi_b ∘ u_a (first u, then phi)
    let mut composed = vec![vec![Rat::ZERO; d]; end.dim * d];
    for (a, u) in end_reps.iter().enumerate() {
        for (b, phi) in hom_reps.iter().enumerate() {
            let prod = compose_components(e, e, tj, u, phi)?;
            composed[a * d + b] = hom.class_of_components(&prod)?;
        }
    }
    let mut ech = crate::linalg::Echelon::new();
    for rho in &rad {
        for b in 0..d {
            let mut v = vec![Rat::ZERO; d];
            for (a, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (x, val) in v.iter_mut().enumerate() {
                    *val += *coeff * composed[a * d + b][x];
                }
            }
            let sv = crate::linalg::sparse_from_dense(&v);
            if !sv.is_empty() {
                ech.insert(sv);
            }
        }
    }
    let pivots: Vec<u32> = ech.pivots().collect();
    let chosen: Vec<usize> =
        (0..d).filter(|&i| pivots.binary_search(&(i as u32)).is_err()).collect();
    let k = chosen.len();

    let power = power_complex(e, k);
    // place the chosen representatives side by side
    let mut comps: BTreeMap<i32, ProjMorphism> = BTreeMap::new();
    for (&n, tgt_obj) in &tj.objects {
        let src = power.object_at(n);
        if src.is_zero() {
            continue;
        }
        let mut m = ProjMorphism::zero(&tj.algebra, src, tgt_obj.clone());
        let block_cols = e.object_at(n).len();
        for (copy, &rep_i) in chosen.iter().enumerate() {
            if let Some(part) = hom_reps[rep_i].get(&n) {
                for r in 0..part.target.len() {
                    for c in 0..part.source.len() {
                        *m.at_mut(r, copy * block_cols + c) = part.at(r, c).clone();
                    }
                }
            }
        }
        comps.insert(n, m);
    }

    let mut cert = crate::linalg::Echelon::new();
    for u in 0..end.dim {
        for &i in &chosen {
            let v = &composed[u * d + i];
            let sv = crate::linalg::sparse_from_dense(v);
            if !sv.is_empty() {
                cert.insert(sv);
            }
        }
    }
    if cert.rank() != d {
        return Err(Error::ApproximationCheckFailed(format!(
            "right approximation spans {} of {d} Hom classes",
            cert.rank()
        )));
    }
    Ok(Approximation { multiplicity: k, comps, power })
}

/// Result of a mutation: the new object when it stays two-term.
pub struct MutationStep {
    pub object: Option<SiltingObject>,
    pub multiplicity: usize,
}

fn check_g_transfer(
    new_summand: &BoundedComplex,
    k: usize,
    e: &BoundedComplex,
    tj: &BoundedComplex,
) -> Result<()> {
    let ge = e.g_vector().0;
    let gt = tj.g_vector().0;
    let expect: Vec<i64> =
        ge.iter().zip(&gt).map(|(a, b)| k as i64 * a - b).collect();
    if new_summand.g_vector().0 != expect {
        return Err(Error::Inconsistency(format!(
            "g-vector transfer failed: got {}, expected ({})",
            new_summand.g_vector(),
            expect.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )));
    }
    Ok(())
}

/// Irreducible left silting mutation at slot `j` (0-based): replaces the
/// summand by the minimized cone of its minimal left approximation into the
/// other summand. Returns `None` inside the step when the cone leaves the
/// two-term range.
pub fn left_mutation(t: &SiltingObject, j: usize) -> Result<MutationStep> {
    let tj = &t.summands[j];
    let e = &t.summands[1 - j];
    let approx = minimal_left_approximation(tj, e)?;
    let pi = ChainMap { source: tj.clone(), target: approx.power.clone(), comps: approx.comps.clone() };
    pi.validate()?;
    let c = minimize(&cone(&pi)?)?;
    if !c.is_two_term() {
        return Ok(MutationStep { object: None, multiplicity: approx.multiplicity });
    }
    check_g_transfer(&c, approx.multiplicity, e, tj)?;
    if !is_indecomposable(&c)? {
        return Err(Error::Inconsistency(
            "mutation cone is decomposable; silting theory forbids this".into(),
        ));
    }
    let mut summands = t.summands.clone();
    summands[j] = c;
    Ok(MutationStep {
        object: Some(SiltingObject { algebra: t.algebra.clone(), summands }),
        multiplicity: approx.multiplicity,
    })
}

/// Irreducible right silting mutation at slot `j`: the co-cone of the
/// minimal right approximation, inverse to `left_mutation` at the same slot.
pub fn right_mutation(t: &SiltingObject, j: usize) -> Result<MutationStep> {
    let tj = &t.summands[j];
    let e = &t.summands[1 - j];
    let approx = minimal_right_approximation(tj, e)?;
    let pi = ChainMap { source: approx.power.clone(), target: tj.clone(), comps: approx.comps.clone() };
    pi.validate()?;
    let c = minimize(&cone(&pi)?)?.shift(-1);
    if !c.is_two_term() {
        return Ok(MutationStep { object: None, multiplicity: approx.multiplicity });
    }
    check_g_transfer(&c, approx.multiplicity, e, tj)?;
    if !is_indecomposable(&c)? {
        return Err(Error::Inconsistency(
            "mutation co-cone is decomposable; silting theory forbids this".into(),
        ));
    }
    let mut summands = t.summands.clone();
    summands[j] = c;
    Ok(MutationStep {
        object: Some(SiltingObject { algebra: t.algebra.clone(), summands }),
        multiplicity: approx.multiplicity,
    })
}

/// Left mutation chain from the algebra in the given alternating order
/// (0-based starting slot), stopping at the shifted algebra. Returns the
/// chain including the start, and the multiplicities used.
pub fn mutation_chain(
    basis: &Arc<AlgebraBasis>,
    start_slot: usize,
    steps: usize,
) -> Result<(Vec<SiltingObject>, Vec<usize>)> {
    let mut chain = vec![SiltingObject::initial(basis)?];
    let mut mults = Vec::new();
    for i in 0..steps {
        let last = chain.last().unwrap();
        if last.is_shifted_algebra() {
            break;
        }
        let slot = if i % 2 == 0 { start_slot } else { 1 - start_slot };
        let step = left_mutation(last, slot)?;
        let next = step.object.ok_or_else(|| {
            Error::Inconsistency("alternating mutation left the two-term range".into())
        })?;
        mults.push(step.multiplicity);
        chain.push(next);
    }
    Ok((chain, mults))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;
    use crate::catalog;

    fn basis(p: &crate::quiver::AlgebraPresentation) -> Arc<AlgebraBasis> {
        Arc::new(compute_basis(p).unwrap())
    }

    fn g(t: &SiltingObject) -> Vec<Vec<i64>> {
        t.g_vectors().into_iter().map(|v| v.0).collect()
    }

    #[test]
    fn kronecker_first_approximation() {
        let b = basis(&catalog::delta1());
        let t = SiltingObject::initial(&b).unwrap();
        let approx = minimal_left_approximation(&t.summands[1], &t.summands[0]).unwrap();
        assert_eq!(approx.multiplicity, 2);
        // pi = (mu1, mu2)^T in degree 0
        let m = &approx.comps[&0];
        let shown: Vec<String> =
            (0..2).map(|r| b.display_element(m.at(r, 0))).collect();
        assert_eq!(shown, vec!["mu1", "mu2"]);
    }

    #[test]
    fn omega1_first_approximation_has_four_components() {
        let b = basis(&catalog::omega1());
        let t = SiltingObject::initial(&b).unwrap();
        let approx = minimal_left_approximation(&t.summands[1], &t.summands[0]).unwrap();
        assert_eq!(approx.multiplicity, 4);
        let m = &approx.comps[&0];
        let shown: Vec<String> = (0..4).map(|r| b.display_element(m.at(r, 0))).collect();
        assert_eq!(
            shown,
            vec!["mu", "mu beta", "mu beta beta", "mu beta beta beta"]
        );
    }

    #[test]
    fn approximation_into_zero_when_no_homs() {
        let b = basis(&catalog::delta1());
        let t = SiltingObject::initial(&b).unwrap();
        // Hom(P1, P2) = 0 over the Kronecker algebra
        let approx = minimal_left_approximation(&t.summands[0], &t.summands[1]).unwrap();
        assert_eq!(approx.multiplicity, 0);
        assert!(approx.power.is_zero_complex());
    }

    #[test]
    fn kronecker_mutation_chain_g_vectors() {
        let b = basis(&catalog::delta1());
        let t0 = SiltingObject::initial(&b).unwrap();
        let t1 = left_mutation(&t0, 1).unwrap().object.unwrap();
        assert_eq!(g(&t1), vec![vec![1, 0], vec![2, -1]]);
        let t2 = left_mutation(&t1, 0).unwrap().object.unwrap();
        assert_eq!(g(&t2), vec![vec![3, -2], vec![2, -1]]);
        assert!(t2.verify().unwrap());
    }

    #[test]
    fn omega3_first_mutation() {
        let b = basis(&catalog::omega3());
        let t0 = SiltingObject::initial(&b).unwrap();
        let step = left_mutation(&t0, 1).unwrap();
        assert_eq!(step.multiplicity, 3);
        let t1 = step.object.unwrap();
        assert_eq!(g(&t1), vec![vec![1, 0], vec![3, -1]]);
        assert!(t1.verify().unwrap());
        assert!(crate::hom::is_tilting_two_term(&t1.summands[0], &t1.summands[1]).unwrap());
    }

    #[test]
    fn double_left_mutation_reaches_shift() {
        let b = basis(&catalog::delta1());
        let t0 = SiltingObject::initial(&b).unwrap();
        let t1 = left_mutation(&t0, 0).unwrap().object.unwrap();
        assert_eq!(g(&t1), vec![vec![-1, 0], vec![0, 1]]);
        let t2 = left_mutation(&t1, 1).unwrap().object.unwrap();
        assert_eq!(g(&t2), vec![vec![-1, 0], vec![0, -1]]);
        assert!(t2.is_shifted_algebra());
        // mutating the same slot twice leaves the two-term range
        let again = left_mutation(&t1, 0).unwrap();
        assert!(again.object.is_none());
    }

    #[test]
    fn omega1_second_mutation_matches_transfer() {
        let b = basis(&catalog::omega1());
        let t0 = SiltingObject::initial(&b).unwrap();
        let t1 = left_mutation(&t0, 1).unwrap().object.unwrap();
        assert_eq!(g(&t1), vec![vec![1, 0], vec![4, -1]]);
        let t2 = left_mutation(&t1, 0).unwrap().object.unwrap();
        assert_eq!(g(&t2), vec![vec![3, -1], vec![4, -1]]);
        let t3 = left_mutation(&t2, 1).unwrap().object.unwrap();
        assert_eq!(g(&t3), vec![vec![3, -1], vec![8, -3]]);
    }

    #[test]
    fn right_mutation_inverts_left() {
        for pres in [catalog::delta1(), catalog::omega3(), catalog::omegabar1()] {
            let b = basis(&pres);
            let t0 = SiltingObject::initial(&b).unwrap();
            for j in [0usize, 1] {
                let t1 = left_mutation(&t0, j).unwrap().object.unwrap();
                let back = right_mutation(&t1, j).unwrap().object.unwrap();
                assert_eq!(back.key(), t0.key());
            }
        }
    }

    #[test]
    fn right_mutation_of_shifted_algebra() {
        let b = basis(&catalog::delta1());
        let t0 = SiltingObject::initial(&b).unwrap();
        let l1 = left_mutation(&t0, 0).unwrap().object.unwrap();
        let shifted = left_mutation(&l1, 1).unwrap().object.unwrap();
        // inverse of the last step: right mutation at slot 2
        let back = right_mutation(&shifted, 1).unwrap().object.unwrap();
        assert_eq!(g(&back), vec![vec![-1, 0], vec![0, 1]]);
        // right mutation at slot 1 instead walks up the other chain
        let other = right_mutation(&shifted, 0).unwrap().object.unwrap();
        assert_eq!(other.key(), {
            let mut k = vec![GVector(vec![1, -2]), GVector(vec![0, -1])];
            k.sort();
            k
        });
    }
}
