//! Decision layer: catalog quotient detection, central reduction, the
//! finiteness classifier with its theorem cross-checks, and the bulk
//! scanner over monomial families.

use crate::algebra::{compute_basis, AlgebraBasis};
use crate::catalog::{self, CatalogTag};
use crate::endo::StructureTable;
use crate::error::{Error, Result};
use crate::hasse::{explore_hasse, ExploreOptions, HasseGraph, HasseStatus, SelfSimilarityCertificate};
use crate::iso::{is_isomorphic, IsoOptions};
use crate::quiver::{quotient_presentation, AlgebraPresentation, Path, QuotientGen, Relation};
use crate::scalar::Rat;

/// Witness that a catalog algebra is a quotient: the arrow assignment and
/// the generators killed.
#[derive(Clone, Debug, serde::Serialize)]
pub struct QuotientWitness {
    pub catalog_name: String,
    /// catalog vertex -> algebra vertex
    pub vertex_map: Vec<usize>,
    /// catalog arrow name -> algebra arrow name
    pub arrow_map: Vec<(String, String)>,
    /// algebra arrows killed by the quotient
    pub killed_arrows: Vec<String>,
}

fn is_monomial(p: &AlgebraPresentation) -> bool {
    p.relations.iter().all(|r| r.terms.len() == 1)
}

/// Word-level survival test for monomial data: a path dies iff it contains
/// a killed arrow or a forbidden subword.
fn survives(word: &[usize], killed: &[bool], forbidden: &[Vec<usize>]) -> bool {
    if word.iter().any(|&a| killed[a]) {
        return false;
    }
    for f in forbidden {
        if f.len() <= word.len() {
            if word.windows(f.len()).any(|w| w == f.as_slice()) {
                return false;
            }
        }
    }
    true
}

/// Tests whether `target` (a catalog presentation) is a quotient of the
/// algebra, searching vertex bijections and injective arrow assignments.
/// Monomial-on-monomial instances run on pure word combinatorics; otherwise
/// the candidate quotient is compiled and compared by dimension and an exact
/// isomorphism witness.
pub fn has_quotient(
    algebra: &AlgebraPresentation,
    algebra_dim: usize,
    target: &AlgebraPresentation,
    target_basis: &AlgebraBasis,
) -> Result<Option<QuotientWitness>> {
    let qa = &algebra.quiver;
    let qt = &target.quiver;
    if qa.vertex_count() != 2 || qt.vertex_count() != 2 {
        return Err(Error::UnsupportedShape(qa.vertex_count().max(qt.vertex_count())));
    }
    if target_basis.dim > algebra_dim {
        return Ok(None);
    }
    let monomial = is_monomial(algebra) && is_monomial(target);
    for sigma in [[0usize, 1], [1, 0]] {
        // backtracking over injective arrow assignments respecting endpoints
        let mut assignment: Vec<usize> = Vec::new(); // target arrow -> algebra arrow
        if let Some(w) =
            assign_arrows(algebra, algebra_dim, target, target_basis, &sigma, &mut assignment, monomial)?
        {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn assign_arrows(
    algebra: &AlgebraPresentation,
    algebra_dim: usize,
    target: &AlgebraPresentation,
    target_basis: &AlgebraBasis,
    sigma: &[usize; 2],
    assignment: &mut Vec<usize>,
    monomial: bool,
) -> Result<Option<QuotientWitness>> {
    let qa = &algebra.quiver;
    let qt = &target.quiver;
    if assignment.len() == qt.arrows.len() {
        return check_assignment(algebra, algebra_dim, target, target_basis, sigma, assignment, monomial);
    }
    let t_arrow = &qt.arrows[assignment.len()];
    for (aid, arrow) in qa.arrows.iter().enumerate() {
        if assignment.contains(&aid) {
            continue;
        }
        if arrow.from != sigma[t_arrow.from] || arrow.to != sigma[t_arrow.to] {
            continue;
        }
        assignment.push(aid);
        if let Some(w) =
            assign_arrows(algebra, algebra_dim, target, target_basis, sigma, assignment, monomial)?
        {
            return Ok(Some(w));
        }
        assignment.pop();
    }
    Ok(None)
}

fn check_assignment(
    algebra: &AlgebraPresentation,
    algebra_dim: usize,
    target: &AlgebraPresentation,
    target_basis: &AlgebraBasis,
    sigma: &[usize; 2],
    assignment: &[usize],
    monomial: bool,
) -> Result<Option<QuotientWitness>> {
    let qa = &algebra.quiver;
    let qt = &target.quiver;
    let witness = || QuotientWitness {
        catalog_name: target.name.clone().unwrap_or_else(|| "target".into()),
        vertex_map: sigma.to_vec(),
        arrow_map: qt
            .arrows
            .iter()
            .zip(assignment)
            .map(|(t, &a)| (t.name.clone(), qa.arrows[a].name.clone()))
            .collect(),
        killed_arrows: (0..qa.arrows.len())
            .filter(|a| !assignment.contains(a))
            .map(|a| qa.arrows[a].name.clone())
            .collect(),
    };
    if monomial {
        // survival combinatorics over the image arrows
        let mut killed = vec![false; qa.arrows.len()];
        for (a, k) in killed.iter_mut().enumerate() {
            *k = !assignment.contains(&a);
        }
        let mut forbidden: Vec<Vec<usize>> = Vec::new();
        for r in &algebra.relations {
            forbidden.push(r.terms[0].1.word.clone());
        }
        for r in &target.relations {
            forbidden.push(r.terms[0].1.word.iter().map(|&t| assignment[t]).collect());
        }
        // candidate dimension = surviving words of length < N, and no
        // surviving word of length N (N = closure degree of the target)
        let n = target_basis.nilpotency;
        let mut count = 0usize;
        let mut frontier: Vec<(usize, Vec<usize>)> =
            (0..2).map(|v| (sigma[v], Vec::new())).collect();
        count += 2;
        for len in 1..=n {
            let mut next = Vec::new();
            for (end, word) in &frontier {
                for &aid in assignment {
                    if qa.arrows[aid].from == *end {
                        let mut w = word.clone();
                        w.push(aid);
                        if survives(&w, &killed, &forbidden) {
                            next.push((qa.arrows[aid].to, w));
                        }
                    }
                }
            }
            if len == n {
                if !next.is_empty() {
                    return Ok(None); // candidate is bigger than the target
                }
            } else {
                count += next.len();
            }
            frontier = next;
        }
        return Ok(if count == target_basis.dim { Some(witness()) } else { None });
    }

    // general path: build the candidate quotient presentation and compare
    let killed: Vec<QuotientGen> = (0..qa.arrows.len())
        .filter(|a| !assignment.contains(a))
        .map(QuotientGen::Arrow)
        .collect();
    let mut candidate = quotient_presentation(algebra, &killed)?;
    // transport the target's relations through the arrow assignment
    let name_map: Vec<&str> =
        assignment.iter().map(|&a| qa.arrows[a].name.as_str()).collect();
    for r in &target.relations {
        let terms = r
            .terms
            .iter()
            .map(|(c, p)| {
                let word = p
                    .word
                    .iter()
                    .map(|&t| candidate.quiver.arrow_id(name_map[t]))
                    .collect::<Result<Vec<_>>>()?;
                Ok((*c, Path::of_word(&candidate.quiver, word)?))
            })
            .collect::<Result<Vec<_>>>()?;
        candidate.relations.push(Relation::new(terms)?);
    }
    candidate.nilpotency_hint = Some(target_basis.nilpotency);
    let cand_basis = match compute_basis(&candidate) {
        Ok(b) => b,
        Err(Error::NotAdmissible(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let _ = algebra_dim;
    if cand_basis.dim != target_basis.dim {
        return Ok(None);
    }
    // dimension equality makes the candidate isomorphic to the target; the
    // witness search should confirm it quickly
    let a_table = StructureTable::from_algebra(&cand_basis);
    let b_table = StructureTable::from_algebra(target_basis);
    match is_isomorphic(&a_table, &b_table, &IsoOptions::default())? {
        Some(_) => Ok(Some(witness())),
        None => Err(Error::Inconsistency(
            "quotient candidate matches dimension but no isomorphism was found".into(),
        )),
    }
}

/// Quotient by the ideal generated by all central radical elements, iterated
/// to a fixed point. The two-term silting poset is preserved.
pub fn central_reduction(p: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let mut current = p.clone();
    for _round in 0..16 {
        let basis = compute_basis(&current)?;
        let central = basis.central_radical_elements();
        if central.is_empty() {
            return Ok(current);
        }
        let mut gens: Vec<QuotientGen> = Vec::new();
        for z in &central {
            // split into parallel components; each lies in the ideal
            let mut by_pair: std::collections::BTreeMap<(usize, usize), Vec<(Rat, Path)>> =
                std::collections::BTreeMap::new();
            for &(i, c) in &z.coeffs {
                let path = basis.paths[i as usize].clone();
                by_pair.entry((path.source, path.target)).or_default().push((c, path));
            }
            for (_, terms) in by_pair {
                gens.push(QuotientGen::Combination(terms));
            }
        }
        current = quotient_presentation(&current, &gens)?;
        current.name = p.name.clone();
    }
    Err(Error::Inconsistency("central reduction did not reach a fixed point".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Verdict {
    Finite,
    Infinite,
    Inconclusive,
}

/// Full classification outcome with all gathered evidence.
pub struct Classification {
    pub verdict: Verdict,
    pub quotient_witness: Option<QuotientWitness>,
    pub certificate: Option<SelfSimilarityCertificate>,
    pub graph: Option<HasseGraph>,
    pub node_count: Option<usize>,
    pub reduced: Option<AlgebraPresentation>,
    /// Theorem criterion applied (when hypotheses matched) and its verdict.
    pub theorem: Option<(String, bool)>,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub explore: ExploreOptions,
    /// Skip exploration when a quotient witness already decides the verdict.
    pub quotient_short_circuit: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { explore: ExploreOptions::default(), quotient_short_circuit: false }
    }
}

/// Names of the minimal tau-tilting infinite catalog entries.
fn minimal_infinite_entries() -> Vec<(String, AlgebraPresentation)> {
    let mut out = Vec::new();
    for entry in catalog::entries() {
        if entry.tag == CatalogTag::MinimalInfinite {
            out.push((entry.name.to_string(), entry.presentation.clone()));
            out.push((
                crate::quiver::opposite_name(entry.name),
                entry.presentation.opposite(),
            ));
        }
    }
    out
}

fn quotient_scan(
    p: &AlgebraPresentation,
    dim: usize,
    names: &[&str],
) -> Result<Option<QuotientWitness>> {
    for (name, pres) in minimal_infinite_entries() {
        if !names.is_empty() && !names.iter().any(|n| *n == name) {
            continue;
        }
        let pres = pres.named(&name);
        let tb = compute_basis(&pres)?;
        if let Some(w) = has_quotient(p, dim, &pres, &tb)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Arrow-shape profile (loops at 1, arrows 1->2, arrows 2->1, loops at 2).
fn shape(p: &AlgebraPresentation) -> (usize, usize, usize, usize) {
    let mut s = (0, 0, 0, 0);
    for a in &p.quiver.arrows {
        match (a.from, a.to) {
            (0, 0) => s.0 += 1,
            (0, 1) => s.1 += 1,
            (1, 0) => s.2 += 1,
            (1, 1) => s.3 += 1,
            _ => {}
        }
    }
    s
}

/// Theorem-level quotient criterion applicable to this presentation, if
/// any, returning (label, quotient list).
fn applicable_theorem(
    p: &AlgebraPresentation,
    basis: &AlgebraBasis,
) -> Option<(String, Vec<&'static str>)> {
    let monomial = is_monomial(p);
    let rad_len = basis.radical_layers().len();
    if monomial && rad_len <= 3 {
        return Some((
            "radical-cube-zero".into(),
            vec!["Delta1", "Omega3", "Omega3^op"],
        ));
    }
    let s = shape(p);
    if s == (0, 1, 0, 1) || s == (0, 0, 1, 1) || s == (1, 1, 0, 0) || s == (1, 0, 1, 0) {
        // one arrow and one loop: the criterion holds for any admissible ideal
        return Some(("single-loop".into(), vec!["Omega1", "Omega1^op"]));
    }
    if monomial && (s == (1, 1, 0, 1) || s == (1, 0, 1, 1)) {
        return Some((
            "two-loops-one-arrow".into(),
            vec!["Omega1", "Omega1^op", "Omega2", "Omega2^op"],
        ));
    }
    if monomial && s == (1, 1, 1, 1) && rad_len <= 5 {
        return Some((
            "radical-five-zero".into(),
            vec!["Omega1", "Omega1^op", "Omega2", "Omega2^op", "Omega5", "Omega5^op"],
        ));
    }
    None
}

/// Decision pipeline: catalog quotient shortcut, central reduction, Hasse
/// exploration, and a cross-check against the applicable theorem criterion.
pub fn classify(p: &AlgebraPresentation, opts: &ClassifyOptions) -> Result<Classification> {
    if p.quiver.vertex_count() != 2 {
        return Err(Error::UnsupportedShape(p.quiver.vertex_count()));
    }
    let basis = compute_basis(p)?;
    let quotient_witness = quotient_scan(p, basis.dim, &[])?;

    let mut certificate = None;
    let mut graph = None;
    let mut node_count = None;
    let mut reduced_pres = None;
    let mut explored_verdict = None;
    if quotient_witness.is_none() || !opts.quotient_short_circuit {
        let reduced = central_reduction(p)?;
        let reduced_basis = std::sync::Arc::new(compute_basis(&reduced)?);
        // when a quotient witness already settles the verdict, exploration
        // only confirms self-similarity, on a small budget
        let explore_opts = if quotient_witness.is_some() {
            ExploreOptions {
                max_steps: opts.explore.max_steps.min(ExploreOptions::confirmation().max_steps),
                max_summands: opts
                    .explore
                    .max_summands
                    .min(ExploreOptions::confirmation().max_summands),
                ..opts.explore.clone()
            }
        } else {
            opts.explore.clone()
        };
        let g = explore_hasse(&reduced_basis, &explore_opts)?;
        explored_verdict = Some(match &g.status {
            HasseStatus::Finite => Verdict::Finite,
            HasseStatus::CertifiedInfinite(_) => Verdict::Infinite,
            HasseStatus::Inconclusive { .. } => Verdict::Inconclusive,
        });
        if let HasseStatus::CertifiedInfinite(c) = &g.status {
            certificate = Some(c.clone());
        }
        if g.is_finite() {
            node_count = Some(g.node_count());
        }
        graph = Some(g);
        reduced_pres = Some(reduced);
    }

    let verdict = match (quotient_witness.is_some(), explored_verdict) {
        (true, Some(Verdict::Finite)) => {
            return Err(Error::Inconsistency(
                "exploration closed a finite graph although an infinite quotient exists".into(),
            ));
        }
        (true, _) => Verdict::Infinite,
        (false, Some(v)) => v,
        (false, None) => Verdict::Inconclusive,
    };

    // theorem cross-check
    let mut theorem = None;
    if let Some((label, list)) = applicable_theorem(p, &basis) {
        let hit = quotient_scan(p, basis.dim, &list)?;
        let predicted_infinite = hit.is_some();
        theorem = Some((label.clone(), predicted_infinite));
        match verdict {
            Verdict::Finite if predicted_infinite => {
                return Err(Error::Inconsistency(format!(
                    "{label} criterion predicts infinite but exploration closed the graph"
                )));
            }
            Verdict::Infinite if !predicted_infinite => {
                return Err(Error::Inconsistency(format!(
                    "{label} criterion predicts finite but the verdict is infinite"
                )));
            }
            _ => {}
        }
    }

    Ok(Classification {
        verdict,
        quotient_witness,
        certificate,
        graph,
        node_count,
        reduced: reduced_pres,
        theorem,
    })
}
