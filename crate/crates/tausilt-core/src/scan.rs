//! Bulk verification over the loop-family quivers: enumerates all monomial
//! ideals with radical cube zero up to loop relabeling and checks the
//! classifier against the quotient criterion on every instance.

use crate::catalog::build_presentation;
use crate::classify::{classify, ClassifyOptions, Verdict};
use crate::error::Result;
use crate::hasse::ExploreOptions;
use crate::quiver::AlgebraPresentation;

/// Outcome for a single scanned algebra.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ScanOutcome {
    pub family: (usize, usize),
    pub presentation: String,
    pub verdict: Verdict,
    /// the radical-cube-zero quotient criterion's prediction
    pub criterion_infinite: bool,
    pub node_count: Option<usize>,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct ScanReport {
    pub raw_count: usize,
    pub canonical_count: usize,
    pub finite: usize,
    pub infinite: usize,
    pub disagreements: Vec<String>,
}

impl ScanReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Arrow names of the loop-family quiver with m loops at vertex 1 and n at
/// vertex 2, one arrow each way.
fn family_arrows(m: usize, n: usize) -> Vec<(String, String, String)> {
    let mut arrows = Vec::new();
    for i in 1..=m {
        arrows.push((format!("alpha{i}"), "1".to_string(), "1".to_string()));
    }
    arrows.push(("mu".into(), "1".into(), "2".into()));
    arrows.push(("nu".into(), "2".into(), "1".into()));
    for i in 1..=n {
        arrows.push((format!("beta{i}"), "2".to_string(), "2".to_string()));
    }
    arrows
}

/// Builds the presentation for a chosen set of killed length-2 paths.
fn family_presentation(
    m: usize,
    n: usize,
    len2: &[(usize, usize)],
    arrows: &[(String, String, String)],
    ends: &[(usize, usize)],
    mask: u64,
) -> Result<AlgebraPresentation> {
    let arrow_list: Vec<(&str, &str, &str)> =
        arrows.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    let mut monomials: Vec<String> = Vec::new();
    for (k, &(a, b)) in len2.iter().enumerate() {
        if mask & (1 << k) != 0 {
            monomials.push(format!("{} {}", arrows[a].0, arrows[b].0));
        }
    }
    // radical cube zero: all length-3 paths die
    for (a, &(_, ea)) in ends.iter().enumerate() {
        for (b, &(sb, eb)) in ends.iter().enumerate() {
            if ea != sb {
                continue;
            }
            for (c, &(sc, _)) in ends.iter().enumerate() {
                if eb == sc {
                    monomials.push(format!(
                        "{} {} {}",
                        arrows[a].0, arrows[b].0, arrows[c].0
                    ));
                }
            }
        }
    }
    let monomial_refs: Vec<&str> = monomials.iter().map(|s| s.as_str()).collect();
    let p = build_presentation(&["1", "2"], &arrow_list, &monomial_refs, &[], 3)?;
    let _ = (m, n);
    Ok(p)
}

/// Loop-relabeling orbit representative test: the mask must be minimal in
/// its orbit under permuting the alpha block and the beta block.
fn is_canonical(
    mask: u64,
    len2: &[(usize, usize)],
    perms: &[Vec<usize>],
    index_of: &std::collections::HashMap<(usize, usize), usize>,
) -> bool {
    for perm in perms {
        let mut image = 0u64;
        for (k, &(a, b)) in len2.iter().enumerate() {
            if mask & (1 << k) != 0 {
                let na = perm[a];
                let nb = perm[b];
                image |= 1 << index_of[&(na, nb)];
            }
        }
        if image < mask {
            return false;
        }
    }
    true
}

/// Enumerates and classifies every radical-cube-zero monomial algebra on
/// the loop families with m <= max_m, n <= max_n, calling `sink` per
/// canonical instance.
pub fn scan_rad_cube_zero(
    max_m: usize,
    max_n: usize,
    opts: &ClassifyOptions,
    mut sink: impl FnMut(&ScanOutcome),
) -> Result<ScanReport> {
    let mut report = ScanReport::default();
    for m in 0..=max_m {
        for n in 0..=max_n {
            scan_family(m, n, opts, &mut report, &mut sink)?;
        }
    }
    Ok(report)
}

fn scan_family(
    m: usize,
    n: usize,
    opts: &ClassifyOptions,
    report: &mut ScanReport,
    sink: &mut impl FnMut(&ScanOutcome),
) -> Result<()> {
    let arrows = family_arrows(m, n);
    // endpoint table by arrow index (0 = vertex 1, 1 = vertex 2)
    let ends: Vec<(usize, usize)> = arrows
        .iter()
        .map(|(_, f, t)| (if f == "1" { 0 } else { 1 }, if t == "1" { 0 } else { 1 }))
        .collect();
    let mut len2: Vec<(usize, usize)> = Vec::new();
    for (a, &(_, ea)) in ends.iter().enumerate() {
        for (b, &(sb, _)) in ends.iter().enumerate() {
            if ea == sb {
                len2.push((a, b));
            }
        }
    }
    assert!(len2.len() <= 60, "mask width exceeded");
    let index_of: std::collections::HashMap<(usize, usize), usize> =
        len2.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    // arrow permutations generated by relabeling loops within each block
    let alpha_ids: Vec<usize> = (0..m).collect();
    let beta_ids: Vec<usize> = (m + 2..m + 2 + n).collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for pa in permutations(&alpha_ids) {
        for pb in permutations(&beta_ids) {
            let mut perm: Vec<usize> = (0..arrows.len()).collect();
            for (i, &src) in alpha_ids.iter().enumerate() {
                perm[src] = pa[i];
            }
            for (i, &src) in beta_ids.iter().enumerate() {
                perm[src] = pb[i];
            }
            perms.push(perm);
        }
    }

    for mask in 0u64..(1u64 << len2.len()) {
        report.raw_count += 1;
        if !is_canonical(mask, &len2, &perms, &index_of) {
            continue;
        }
        report.canonical_count += 1;
        let pres = family_presentation(m, n, &len2, &arrows, &ends, mask)?;
        let outcome = match classify(&pres, opts) {
            Ok(c) => {
                let criterion_infinite = c.theorem.as_ref().map(|(_, p)| *p).unwrap_or(false);
                match c.verdict {
                    Verdict::Finite => report.finite += 1,
                    Verdict::Infinite => report.infinite += 1,
                    Verdict::Inconclusive => {}
                }
                if (c.verdict == Verdict::Infinite) != criterion_infinite
                    || c.verdict == Verdict::Inconclusive
                {
                    report
                        .disagreements
                        .push(format!("{}: {:?}", pres.canonical_string(), c.verdict));
                }
                ScanOutcome {
                    family: (m, n),
                    presentation: pres.canonical_string(),
                    verdict: c.verdict,
                    criterion_infinite,
                    node_count: c.node_count,
                }
            }
            Err(e) => {
                report
                    .disagreements
                    .push(format!("{}: {e}", pres.canonical_string()));
                ScanOutcome {
                    family: (m, n),
                    presentation: pres.canonical_string(),
                    verdict: Verdict::Inconclusive,
                    criterion_infinite: false,
                    node_count: None,
                }
            }
        };
        sink(&outcome);
    }
    Ok(())
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Scan options tuned for bulk runs: short-circuit on quotient witnesses and
/// keep exploration budgets small (the finite graphs in this family close
/// within a dozen steps).
pub fn bulk_options() -> ClassifyOptions {
    ClassifyOptions {
        explore: ExploreOptions { max_steps: 24, ..ExploreOptions::default() },
        quotient_short_circuit: true,
    }
}
