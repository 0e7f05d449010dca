//! Hasse-quiver exploration for two-point algebras: both alternating
//! mutation orders from the algebra down to its shift, finiteness detection,
//! self-similarity certificates for infinite chains, g-vector recurrences
//! and the shift-duality action on g-vectors.

use crate::algebra::AlgebraBasis;
use crate::catalog;
use crate::complex::GVector;
use crate::endo::{endomorphism_table, EndoPresentation, StructureTable};
use crate::error::{Error, Result};
use crate::hom::{is_presilting, is_tilting_two_term};
use crate::iso::{is_isomorphic, IsoOptions, IsoWitness};
use crate::mutation::{left_mutation, SiltingObject};
use crate::scalar::Rat;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const DEFAULT_MAX_STEPS: usize = 64;
/// Chain length at which self-similarity certificates are probed.
const CERTIFY_PROBE_LEN: usize = 16;

#[derive(Clone, Debug)]
pub struct ExploreOptions {
    /// Mutation budget per chain.
    pub max_steps: usize,
    /// Largest base offset searched for self-similarity.
    pub certify_base_cap: usize,
    /// Largest (even) period searched for self-similarity.
    pub certify_period_cap: usize,
    /// Run the full presilting verification on every produced node.
    pub verify_nodes: bool,
    /// Resource guard: a chain stops (counts as capped) once a summand
    /// multiplicity budget is exceeded.
    pub max_summands: usize,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions {
            max_steps: DEFAULT_MAX_STEPS,
            certify_base_cap: 6,
            certify_period_cap: 8,
            verify_nodes: true,
            max_summands: 200,
        }
    }
}

impl ExploreOptions {
    /// Cheap budget for confirming self-similarity when the verdict is
    /// already known from a quotient witness.
    pub fn confirmation() -> Self {
        ExploreOptions { max_steps: 8, max_summands: 64, ..ExploreOptions::default() }
    }
}

/// Evidence that a left mutation chain never terminates: all entries up to
/// `base + period` are tilting, the endomorphism algebras at `base` and
/// `base + period` agree with matching summand roles (so the mutation
/// combinatorics repeats with that period), and the resulting g-vector
/// recurrence `matrix(T_{base+j+n*period}) = matrix(T_{base+j}) * M^n` has a
/// unipotent `M` whose orbit provably never reaches the shifted algebra.
#[derive(Clone, Debug)]
pub struct SelfSimilarityCertificate {
    /// 1-based starting index of the mutation order (1,2,... or 2,1,...).
    pub order_start: usize,
    pub base_index: usize,
    pub period: usize,
    /// One-period g-vector transition matrix.
    pub matrix: [[i64; 2]; 2],
    /// Catalog name of `End(T_base)` when recognized.
    pub end_algebra: Option<String>,
    pub witness: IsoWitness,
    /// g-vector pairs of the chain up to the probe point (slot order).
    pub gvector_record: Vec<Vec<GVector>>,
}

#[derive(Clone, Debug)]
pub enum HasseStatus {
    Finite,
    CertifiedInfinite(SelfSimilarityCertificate),
    Inconclusive { step_cap: usize },
}

#[derive(Clone, Debug)]
pub struct HasseNode {
    /// Unordered node key (sorted g-vector pair).
    pub g: Vec<GVector>,
    /// g-vectors in slot order as first discovered.
    pub slot_g: Vec<GVector>,
}

#[derive(Clone, Debug)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    /// 1-based mutated vertex index.
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct HasseGraph {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<HasseEdge>,
    pub status: HasseStatus,
}

impl HasseGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Multiset of node keys, for comparisons against printed diagrams.
    pub fn key_multiset(&self) -> Vec<Vec<Vec<i64>>> {
        let mut keys: Vec<Vec<Vec<i64>>> = self
            .nodes
            .iter()
            .map(|n| n.g.iter().map(|g| g.0.clone()).collect())
            .collect();
        keys.sort();
        keys
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.status, HasseStatus::Finite)
    }
}

struct ChainRun {
    objects: Vec<SiltingObject>,
    mutated_slots: Vec<usize>,
    reached_shift: bool,
}

fn run_chain(
    basis: &Arc<AlgebraBasis>,
    start_slot: usize,
    budget: usize,
    opts: &ExploreOptions,
) -> Result<ChainRun> {
    let mut objects = vec![SiltingObject::initial(basis)?];
    let mut mutated_slots = Vec::new();
    let mut reached_shift = false;
    loop {
        let last = objects.last().unwrap();
        if last.is_shifted_algebra() {
            reached_shift = true;
            break;
        }
        if mutated_slots.len() >= budget {
            break;
        }
        let size: usize = last.summands.iter().map(|c| c.total_summands()).sum();
        if size > opts.max_summands {
            break;
        }
        let slot = if mutated_slots.len() % 2 == 0 { start_slot } else { 1 - start_slot };
        let step = left_mutation(last, slot)?;
        let next = step.object.ok_or_else(|| {
            Error::Inconsistency(
                "alternating left mutation left the two-term range before the shift".into(),
            )
        })?;
        if opts.verify_nodes && !is_presilting(&[&next.summands[0], &next.summands[1]])? {
            return Err(Error::Inconsistency("mutation produced a non-presilting pair".into()));
        }
        objects.push(next);
        mutated_slots.push(slot);
    }
    Ok(ChainRun { objects, mutated_slots, reached_shift })
}

/// Shifted-algebra matrix in slot order.
const TERMINAL: [[i64; 2]; 2] = [[-1, 0], [0, -1]];

/// Exact solve for `a + n b = c` over a single non-negative integer n, all
/// four matrix coordinates simultaneously. `Some(n)` when a hit exists.
fn affine_hit(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2], c: &[[i64; 2]; 2]) -> Option<i64> {
    let mut n: Option<i64> = None;
    for i in 0..2 {
        for j in 0..2 {
            if b[i][j] == 0 {
                if a[i][j] != c[i][j] {
                    return None;
                }
            } else {
                let num = c[i][j] - a[i][j];
                if num % b[i][j] != 0 {
                    return None;
                }
                let cand = num / b[i][j];
                if cand < 0 {
                    return None;
                }
                match n {
                    None => n = Some(cand),
                    Some(existing) if existing != cand => return None,
                    _ => {}
                }
            }
        }
    }
    // all coordinates constant and equal to c counts as n = 0
    n.or(Some(0))
}

/// Searches a capped chain for a self-similarity certificate.
///
/// Soundness: all entries up to the probe point tilting plus the role-aligned
/// endomorphism isomorphism make the mutation combinatorics `period`-periodic
/// from `base` on, so by the g-vector transfer identity a single integer
/// matrix `M` advances the chain one period forever. With `(M - I)^2 = 0`
/// the orbit is affine in the period count and an exact solve decides
/// whether it ever reaches the shifted algebra; when it provably cannot,
/// the chain is infinite (its g-vector keys are pairwise distinct). A hit
/// instead means the chain terminates later, and no certificate is issued.
pub fn certify_infinite(
    chain: &[SiltingObject],
    order_start_slot: usize,
    opts: &ExploreOptions,
) -> Result<Option<SelfSimilarityCertificate>> {
    let mats: Vec<Option<[[i64; 2]; 2]>> =
        chain.iter().map(|t| to_matrix(&t.g_vectors())).collect();
    let mut endos: BTreeMap<usize, EndoPresentation> = BTreeMap::new();
    let mut tilting: BTreeMap<usize, bool> = BTreeMap::new();
    let mut tilting_up_to = |upto: usize, tilting: &mut BTreeMap<usize, bool>| -> Result<bool> {
        for i in 0..=upto {
            if !tilting.contains_key(&i) {
                let t = &chain[i];
                let ok = is_tilting_two_term(&t.summands[0], &t.summands[1])?;
                tilting.insert(i, ok);
            }
            if !tilting[&i] {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for base in 0..=opts.certify_base_cap {
        for period in (2..=opts.certify_period_cap).step_by(2) {
            let probe = base + period;
            if probe >= chain.len() {
                continue;
            }
            // one-period transition matrix, exact and integral
            let (Some(a0), Some(ak)) = (mats[base], mats[probe]) else { continue };
            let det = a0[0][0] * a0[1][1] - a0[0][1] * a0[1][0];
            if det == 0 {
                continue;
            }
            let adj = [[a0[1][1], -a0[0][1]], [-a0[1][0], a0[0][0]]];
            let num = mat_mul(&adj, &ak);
            if num.iter().flatten().any(|x| x % det != 0) {
                continue;
            }
            let m = [
                [num[0][0] / det, num[0][1] / det],
                [num[1][0] / det, num[1][1] / det],
            ];
            // the period must validate on every computed matrix
            let consistent = (base..chain.len().saturating_sub(period)).all(|j| {
                match (mats[j], mats[j + period]) {
                    (Some(x), Some(y)) => mat_mul(&x, &m) == y,
                    _ => false,
                }
            });
            if !consistent {
                continue;
            }
            // unipotent orbit: (M - I)^2 = 0, M != I
            let mi = [[m[0][0] - 1, m[0][1]], [m[1][0], m[1][1] - 1]];
            if mi == [[0; 2]; 2] || mat_mul(&mi, &mi) != [[0; 2]; 2] {
                continue;
            }
            if !tilting_up_to(probe, &mut tilting)? {
                continue;
            }
            for idx in [base, probe] {
                if !endos.contains_key(&idx) {
                    endos.insert(idx, endomorphism_table(&chain[idx])?);
                }
            }
            let e_base = &endos[&base];
            let e_probe = &endos[&probe];
            if e_base.dimension > crate::iso::DEFAULT_DIM_CAP {
                continue;
            }
            let opts_iso = IsoOptions {
                forced_vertex_map: Some((0..2).collect()),
                ..IsoOptions::default()
            };
            let found = match is_isomorphic(&e_probe.table, &e_base.table, &opts_iso) {
                Ok(w) => w,
                Err(Error::DimensionCapExceeded(..)) => None,
                Err(e) => return Err(e),
            };
            let Some(witness) = found else { continue };
            // the affine orbits of one full period must all miss Lambda[1]
            let mut terminates = false;
            for j in 0..period {
                let Some(a) = mats[base + j] else { terminates = true; break };
                let b = mat_mul(&a, &mi);
                if affine_hit(&a, &b, &TERMINAL).is_some() {
                    terminates = true;
                    break;
                }
            }
            if terminates {
                // the periodic chain reaches the shifted algebra later on
                return Ok(None);
            }
            let end_algebra = identify_catalog(&e_base.table);
            let gvector_record = chain[..=probe].iter().map(|t| t.g_vectors()).collect();
            return Ok(Some(SelfSimilarityCertificate {
                order_start: order_start_slot + 1,
                base_index: base,
                period,
                matrix: m,
                end_algebra,
                witness,
                gvector_record,
            }));
        }
    }
    Ok(None)
}

/// Names a structure table after a catalog algebra (or its opposite) when an
/// exact isomorphism is found.
pub fn identify_catalog(t: &StructureTable) -> Option<String> {
    for entry in catalog::entries() {
        if entry.expected_dim != t.dim {
            continue;
        }
        for op in [false, true] {
            let pres = if op { entry.presentation.opposite() } else { entry.presentation.clone() };
            let Ok(basis) = crate::algebra::compute_basis(&pres) else { continue };
            let table = StructureTable::from_algebra(&basis);
            if let Ok(Some(_)) = is_isomorphic(t, &table, &IsoOptions::default()) {
                return Some(if op { crate::quiver::opposite_name(entry.name) } else { entry.name.to_string() });
            }
        }
    }
    None
}

/// Explores both mutation orders from the algebra, closing the graph at the
/// shifted algebra or certifying an infinite chain.
pub fn explore_hasse(basis: &Arc<AlgebraBasis>, opts: &ExploreOptions) -> Result<HasseGraph> {
    if basis.vertex_count() != 2 {
        return Err(Error::UnsupportedShape(basis.vertex_count()));
    }
    // One chain reaching the shift does not decide finiteness on its own:
    // the other order can still be an infinite chain (the Kronecker algebra
    // closes the order-1,2 side in two steps while the order-2,1 side never
    // terminates). Finite status needs both chains closed.
    let probe = CERTIFY_PROBE_LEN.min(opts.max_steps);
    let mut runs: Vec<ChainRun> = Vec::new();
    for start in 0..2 {
        runs.push(run_chain(basis, start, probe, opts)?);
    }
    let mut certificate = None;
    if runs.iter().any(|r| !r.reached_shift) {
        for (start, run) in runs.iter().enumerate() {
            if run.reached_shift {
                continue;
            }
            certificate = certify_infinite(&run.objects, start, opts)?;
            if certificate.is_some() {
                break;
            }
        }
        // no certificate at the probe depth: spend the full budget, then
        // certify once more before giving up
        if certificate.is_none() && opts.max_steps > probe {
            for start in 0..2 {
                if !runs[start].reached_shift {
                    runs[start] = run_chain(basis, start, opts.max_steps, opts)?;
                    if !runs[start].reached_shift {
                        certificate = certify_infinite(&runs[start].objects, start, opts)?;
                        if certificate.is_some() {
                            break;
                        }
                    }
                }
            }
        }
    }

    // assemble nodes and edges; node identity by sorted g-vector pair
    let mut nodes: Vec<HasseNode> = Vec::new();
    let mut index: BTreeMap<Vec<GVector>, usize> = BTreeMap::new();
    let mut edges: Vec<HasseEdge> = Vec::new();
    let mut intern = |t: &SiltingObject,
                      nodes: &mut Vec<HasseNode>,
                      index: &mut BTreeMap<Vec<GVector>, usize>|
     -> usize {
        let key = t.key();
        *index.entry(key.clone()).or_insert_with(|| {
            nodes.push(HasseNode { g: key, slot_g: t.g_vectors() });
            nodes.len() - 1
        })
    };
    // interior uniqueness check: shared endpoints are expected, repeats are not
    let mut seen_interior: BTreeMap<Vec<GVector>, (usize, usize)> = BTreeMap::new();
    for (c, run) in runs.iter().enumerate() {
        for (i, t) in run.objects.iter().enumerate() {
            let is_start = i == 0;
            let is_end = run.reached_shift && i + 1 == run.objects.len();
            if is_start || is_end {
                continue;
            }
            if let Some(&(pc, pi)) = seen_interior.get(&t.key()) {
                if (pc, pi) != (c, i) {
                    return Err(Error::Inconsistency(format!(
                        "g-vector key {:?} repeated across the exploration",
                        t.key()
                    )));
                }
            }
            seen_interior.insert(t.key(), (c, i));
        }
    }
    for run in &runs {
        let mut prev: Option<usize> = None;
        for (i, t) in run.objects.iter().enumerate() {
            let id = intern(t, &mut nodes, &mut index);
            if let Some(p) = prev {
                edges.push(HasseEdge { from: p, to: id, index: run.mutated_slots[i - 1] + 1 });
            }
            prev = Some(id);
        }
    }
    let status = if runs.iter().all(|r| r.reached_shift) {
        HasseStatus::Finite
    } else if let Some(cert) = certificate {
        HasseStatus::CertifiedInfinite(cert)
    } else {
        HasseStatus::Inconclusive { step_cap: opts.max_steps }
    };
    Ok(HasseGraph { nodes, edges, status })
}

/// Fitted linear recurrence on the g-vector matrices of a mutation chain:
/// `matrix(T_{i+2}) = matrix(T_i) · M`, with an affine closed form when
/// `(M - I)^2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GVectorRecurrence {
    pub matrix: [[i64; 2]; 2],
    /// For each parity p in {0, 1}: `matrix(T_{2n+p}) = base_p + n * step_p`.
    pub affine: Option<[([[i64; 2]; 2], [[i64; 2]; 2]); 2]>,
}

fn to_matrix(g: &[GVector]) -> Option<[[i64; 2]; 2]> {
    if g.len() != 2 || g[0].0.len() != 2 {
        return None;
    }
    Some([[g[0].0[0], g[0].0[1]], [g[1].0[0], g[1].0[1]]])
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Diagnostic recurrence fit over a chain of slot-ordered g-vector pairs.
/// Needs at least six entries; `None` when no exact recurrence validates.
pub fn gvector_recurrence(chain: &[Vec<GVector>]) -> Option<GVectorRecurrence> {
    if chain.len() < 6 {
        return None;
    }
    let mats: Vec<[[i64; 2]; 2]> = chain.iter().map(|g| to_matrix(g)).collect::<Option<_>>()?;
    // solve matrix(T_0) * M = matrix(T_2) exactly over the rationals
    let m0 = mats[0];
    let det = m0[0][0] * m0[1][1] - m0[0][1] * m0[1][0];
    if det == 0 {
        return None;
    }
    let adj = [[m0[1][1], -m0[0][1]], [-m0[1][0], m0[0][0]]];
    let num = mat_mul(&adj, &mats[2]);
    if num.iter().flatten().any(|x| x % det != 0) {
        return None;
    }
    let m = [
        [num[0][0] / det, num[0][1] / det],
        [num[1][0] / det, num[1][1] / det],
    ];
    for i in 0..mats.len().saturating_sub(2) {
        if mat_mul(&mats[i], &m) != mats[i + 2] {
            return None;
        }
    }
    // affine closed form when (M - I)^2 = 0
    let mi = [[m[0][0] - 1, m[0][1]], [m[1][0], m[1][1] - 1]];
    let affine = if mat_mul(&mi, &mi) == [[0; 2]; 2] {
        let step0 = mat_mul(&mats[0], &mi);
        let step1 = mat_mul(&mats[1], &mi);
        Some([(mats[0], step0), (mats[1], step1)])
    } else {
        None
    };
    Some(GVectorRecurrence { matrix: m, affine })
}

/// Shift duality induced by an isomorphism from the opposite algebra:
/// a vertex permutation acting on g-vectors by `g -> -(g ∘ sigma)`.
#[derive(Clone, Debug)]
pub struct SigmaDuality {
    pub perm: Vec<usize>,
    pub witness: IsoWitness,
}

impl SigmaDuality {
    /// Verifies that `perm` comes from an isomorphism from the opposite
    /// algebra onto the algebra.
    pub fn try_new(basis: &AlgebraBasis, perm: Vec<usize>) -> Result<SigmaDuality> {
        let op = crate::algebra::compute_basis(&basis.presentation.opposite())?;
        let a = StructureTable::from_algebra(&op);
        let b = StructureTable::from_algebra(basis);
        let opts = IsoOptions { forced_vertex_map: Some(perm.clone()), ..IsoOptions::default() };
        match is_isomorphic(&a, &b, &opts)? {
            Some(witness) => Ok(SigmaDuality { perm, witness }),
            None => Err(Error::InvalidSigma),
        }
    }

    /// All valid dualities of the algebra.
    pub fn all(basis: &AlgebraBasis) -> Vec<SigmaDuality> {
        let n = basis.vertex_count();
        let perms: Vec<Vec<usize>> = if n == 2 {
            vec![vec![0, 1], vec![1, 0]]
        } else {
            vec![(0..n).collect()]
        };
        perms
            .into_iter()
            .filter_map(|p| SigmaDuality::try_new(basis, p).ok())
            .collect()
    }

    /// `g(S_sigma(T))` for a summand g-vector.
    pub fn apply(&self, g: &GVector) -> GVector {
        GVector((0..g.0.len()).map(|i| -g.0[self.perm[i]]).collect())
    }

    pub fn apply_pair(&self, gs: &[GVector]) -> Vec<GVector> {
        gs.iter().map(|g| self.apply(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;

    fn basis(p: &crate::quiver::AlgebraPresentation) -> Arc<AlgebraBasis> {
        Arc::new(compute_basis(p).unwrap())
    }

    fn keys(pairs: &[[[i64; 2]; 2]]) -> Vec<Vec<Vec<i64>>> {
        let mut out: Vec<Vec<Vec<i64>>> = pairs
            .iter()
            .map(|p| {
                let mut pair = vec![p[0].to_vec(), p[1].to_vec()];
                pair.sort();
                pair
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn omegabar3_graph_matches_diagram() {
        let g = explore_hasse(&basis(&crate::catalog::omegabar3()), &ExploreOptions::default())
            .unwrap();
        assert!(g.is_finite());
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edges.len(), 6);
        let expect = keys(&[
            [[1, 0], [0, 1]],
            [[-1, 0], [0, 1]],
            [[1, 0], [2, -1]],
            [[1, -1], [2, -1]],
            [[1, -1], [0, -1]],
            [[-1, 0], [0, -1]],
        ]);
        assert_eq!(g.key_multiset(), expect);
    }

    #[test]
    fn omegabar1_graph_has_eight_nodes() {
        let g = explore_hasse(&basis(&crate::catalog::omegabar1()), &ExploreOptions::default())
            .unwrap();
        assert!(g.is_finite());
        assert_eq!(g.node_count(), 8);
    }

    #[test]
    fn kronecker_is_certified_infinite() {
        let g = explore_hasse(&basis(&crate::catalog::delta1()), &ExploreOptions::default())
            .unwrap();
        match &g.status {
            HasseStatus::CertifiedInfinite(cert) => {
                assert_eq!(cert.period, 2);
                assert_eq!(cert.base_index, 0);
                assert_eq!(cert.end_algebra.as_deref(), Some("Delta1"));
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn omega1_certificate_alternates_with_its_opposite() {
        let b = basis(&crate::catalog::omega1());
        let run = run_chain(&b, 1, 5, &ExploreOptions::default()).unwrap();
        let cert = certify_infinite(&run.objects, 1, &ExploreOptions::default())
            .unwrap()
            .expect("certificate");
        assert_eq!(cert.period, 2);
        assert_eq!(cert.end_algebra.as_deref(), Some("Omega1"));
        // the odd entry is the opposite algebra
        let e1 = endomorphism_table(&run.objects[1]).unwrap();
        assert_eq!(identify_catalog(&e1.table).as_deref(), Some("Omega1^op"));
    }

    #[test]
    fn finite_chain_has_no_certificate() {
        let b = basis(&crate::catalog::omegabar1());
        let run = run_chain(&b, 1, 16, &ExploreOptions::default()).unwrap();
        assert!(run.reached_shift);
        let cert = certify_infinite(&run.objects, 1, &ExploreOptions::default()).unwrap();
        assert!(cert.is_none());
    }

    #[test]
    fn kronecker_recurrence() {
        let b = basis(&crate::catalog::delta1());
        let run = run_chain(&b, 1, 7, &ExploreOptions::default()).unwrap();
        let gs: Vec<Vec<GVector>> = run.objects.iter().map(|t| t.g_vectors()).collect();
        let rec = gvector_recurrence(&gs).unwrap();
        assert_eq!(rec.matrix, [[3, -2], [2, -1]]);
        assert!(rec.affine.is_some());
    }

    #[test]
    fn omega1_recurrence() {
        let b = basis(&crate::catalog::omega1());
        let run = run_chain(&b, 1, 7, &ExploreOptions::default()).unwrap();
        let gs: Vec<Vec<GVector>> = run.objects.iter().map(|t| t.g_vectors()).collect();
        let rec = gvector_recurrence(&gs).unwrap();
        assert_eq!(rec.matrix, [[3, -1], [4, -1]]);
    }

    #[test]
    fn short_or_terminating_chains_give_no_recurrence() {
        let b = basis(&crate::catalog::omegabar3());
        let run = run_chain(&b, 1, 16, &ExploreOptions::default()).unwrap();
        let gs: Vec<Vec<GVector>> = run.objects.iter().map(|t| t.g_vectors()).collect();
        assert!(gvector_recurrence(&gs).is_none());
    }

    #[test]
    fn sigma_duality_on_delta3() {
        let b = basis(&crate::catalog::delta3());
        let sigma = SigmaDuality::try_new(&b, vec![1, 0]).unwrap();
        let g = GVector(vec![3, -2]);
        assert_eq!(sigma.apply(&g), GVector(vec![2, -3]));
        // involution
        assert_eq!(sigma.apply(&sigma.apply(&g)), g);
        // the algebra start maps to the shifted end
        let start = vec![GVector(vec![1, 0]), GVector(vec![0, 1])];
        let image = sigma.apply_pair(&start);
        assert_eq!(image, vec![GVector(vec![0, -1]), GVector(vec![-1, 0])]);
    }

    #[test]
    fn invalid_sigma_rejected() {
        // the Kronecker algebra has no identity-permutation duality
        let b = basis(&crate::catalog::delta1());
        assert!(matches!(
            SigmaDuality::try_new(&b, vec![0, 1]),
            Err(Error::InvalidSigma)
        ));
        assert!(SigmaDuality::try_new(&b, vec![1, 0]).is_ok());
    }
}
