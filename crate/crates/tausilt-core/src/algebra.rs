//! Finite path bases of bound quiver algebras with exact multiplication
//! tables, radical filtrations and central-element computation.

use crate::error::{Error, Result};
use crate::linalg::{sparse_add_scaled, sparse_unit, Echelon, SparseVec};
use crate::quiver::{AlgebraPresentation, Path, Relation, VertexId};
use crate::scalar::Rat;
use std::sync::atomic::{AtomicU64, Ordering};

static NEXT_BASIS_ID: AtomicU64 = AtomicU64::new(1);

/// Default cap for the ideal-closure search (all algebras in scope satisfy
/// rad^5 = 0, so 12 leaves plenty of room).
pub const DEFAULT_CLOSURE_CAP: usize = 12;

/// Hard cap on enumerated paths, to fail loudly on wild input.
const PATH_BUDGET: usize = 400_000;

/// Element of a computed algebra basis: sparse coefficients over the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    pub basis_id: u64,
    pub coeffs: SparseVec,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Finite path basis of `K Q / I` with its exact multiplication table.
pub struct AlgebraBasis {
    pub id: u64,
    pub presentation: AlgebraPresentation,
    /// Normal-form path representatives in (length, lex) order.
    pub paths: Vec<Path>,
    pub dim: usize,
    /// Basis index of the trivial path at each vertex.
    pub idempotents: Vec<usize>,
    /// `per_pair[i][j]` lists basis indices of paths from vertex i to j.
    pub per_pair: Vec<Vec<Vec<usize>>>,
    /// Position of each basis element inside its per-pair list.
    pub pair_pos: Vec<usize>,
    /// Smallest `N` with `rad^N = 0` certified by the closure.
    pub nilpotency: usize,
    table: Vec<SparseVec>,
    // keyed by (source vertex, arrow word); trivial paths share the empty word
    path_lookup: std::collections::HashMap<(usize, Vec<usize>), usize>,
}

impl std::fmt::Debug for AlgebraBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgebraBasis(dim {}, N {})", self.dim, self.nilpotency)
    }
}

// identity comparison: each computed basis instance is its own world
impl PartialEq for AlgebraBasis {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for AlgebraBasis {}

/// Enumerates all paths of length <= max_len, grouped by length.
fn paths_up_to(p: &AlgebraPresentation, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let q = &p.quiver;
    let mut by_len: Vec<Vec<Path>> = Vec::with_capacity(max_len + 1);
    by_len.push((0..q.vertex_count()).map(Path::trivial).collect());
    let mut total = by_len[0].len();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for path in &by_len[len - 1] {
            for (aid, arrow) in q.arrows.iter().enumerate() {
                if arrow.from == path.target {
                    let mut word = path.word.clone();
                    word.push(aid);
                    next.push(Path { word, source: path.source, target: arrow.to });
                }
            }
        }
        // arrow order on words gives lex order for free, but sort to be sure
        next.sort_by(|a, b| a.cmp_order(b));
        total += next.len();
        if total > PATH_BUDGET {
            return Err(Error::NotAdmissible(format!(
                "path enumeration exceeded {PATH_BUDGET} paths; ideal is unlikely to be admissible"
            )));
        }
        by_len.push(next);
    }
    Ok(by_len)
}

type PathKey = (usize, Vec<usize>);
type PathIndex = std::collections::HashMap<PathKey, usize>;

fn path_key(p: &Path) -> PathKey {
    (p.source, p.word.clone())
}

/// Extension `a * rho * b` of a relation by paths on either side, as a vector
/// over a global path index map. Extension words always have length >= 2.
fn extend_relation(
    rho: &Relation,
    left: &Path,
    right: &Path,
    index_of: &PathIndex,
    drop_len_at_least: Option<usize>,
) -> SparseVec {
    let mut vec: SparseVec = Vec::new();
    for (c, term) in &rho.terms {
        let mut word = left.word.clone();
        word.extend_from_slice(&term.word);
        word.extend_from_slice(&right.word);
        if let Some(cut) = drop_len_at_least {
            if word.len() >= cut {
                continue;
            }
        }
        if let Some(&idx) = index_of.get(&(left.source, word)) {
            vec = sparse_add_scaled(&vec, *c, &sparse_unit(idx as u32));
        }
    }
    vec.sort_by_key(|&(i, _)| i);
    vec
}

/// Computes the path basis of `K Q / I` by closing the relations under
/// left/right path multiplication.
///
/// The closure searches for the smallest `N` such that every path of length
/// `N` lies in the genuinely generated ideal span; paths of length >= `N` are
/// then all in the ideal, and Gaussian elimination on the remaining span
/// (largest path in (length, lex) order eliminated first) yields deterministic
/// normal forms.
pub fn compute_basis(p: &AlgebraPresentation) -> Result<AlgebraBasis> {
    compute_basis_capped(p, DEFAULT_CLOSURE_CAP)
}

pub fn compute_basis_capped(p: &AlgebraPresentation, cap: usize) -> Result<AlgebraBasis> {
    if p.quiver.vertex_count() == 0 {
        return Err(Error::EmptyQuiver);
    }
    for r in &p.relations {
        // re-validate, presentations can be assembled by hand
        Relation::new(r.terms.clone())?;
    }
    let max_term = p
        .relations
        .iter()
        .flat_map(|r| r.terms.iter().map(|(_, t)| t.len()))
        .max()
        .unwrap_or(2);
    let lo = p.nilpotency_hint.unwrap_or(2).clamp(2, cap);

    let mut chosen: Option<(usize, Vec<Vec<Path>>)> = None;
    for n in lo..=cap {
        let reach = n + max_term.saturating_sub(2);
        let by_len = paths_up_to(p, reach)?;
        // genuine ideal vectors: extensions with all components kept
        let mut index_of: PathIndex = std::collections::HashMap::new();
        let mut flat: Vec<&Path> = Vec::new();
        for layer in &by_len {
            for path in layer {
                index_of.insert(path_key(path), flat.len());
                flat.push(path);
            }
        }
        let mut span = Echelon::new();
        for rho in &p.relations {
            let min_term = rho.terms.iter().map(|(_, t)| t.len()).min().unwrap();
            let budget = n.saturating_sub(min_term);
            let (s, t) = (rho.terms[0].1.source, rho.terms[0].1.target);
            for la in 0..=budget {
                for left in by_len[la].iter().filter(|p| p.target == s) {
                    for lb in 0..=(budget - la) {
                        for right in by_len[lb].iter().filter(|p| p.source == t) {
                            let v = extend_relation(rho, left, right, &index_of, None);
                            if !v.is_empty() {
                                span.insert(v);
                            }
                        }
                    }
                }
            }
        }
        let all_in = by_len[n].iter().all(|path| {
            let idx = index_of[&path_key(path)];
            span.contains(&sparse_unit(idx as u32))
        });
        if all_in {
            chosen = Some((n, by_len));
            break;
        }
    }
    let Some((n, by_len)) = chosen else {
        return Err(Error::NotAdmissible(format!(
            "no N <= {cap} closes the ideal (is some arrow free of relations?)"
        )));
    };

    // working space: paths of length < n, in (length, lex) order
    let mut paths: Vec<Path> = Vec::new();
    for layer in by_len.iter().take(n) {
        paths.extend(layer.iter().cloned());
    }
    let m = paths.len();
    let index_of: PathIndex =
        paths.iter().enumerate().map(|(i, p)| (path_key(p), i)).collect();
    // eliminate the largest path first: flip coordinates for the echelon
    let flip = |i: usize| (m - 1 - i) as u32;
    let unflip = |c: u32| m - 1 - c as usize;
    let flip_vec = |v: &SparseVec| -> SparseVec {
        let mut out: SparseVec = v.iter().map(|&(i, c)| (flip(i as usize), c)).collect();
        out.sort_by_key(|&(i, _)| i);
        out
    };

    let mut ideal = Echelon::new();
    for rho in &p.relations {
        let min_term = rho.terms.iter().map(|(_, t)| t.len()).min().unwrap();
        if min_term >= n {
            continue;
        }
        let budget = n - 1 - min_term;
        let (s, t) = (rho.terms[0].1.source, rho.terms[0].1.target);
        for la in 0..=budget {
            for left in by_len[la].iter().filter(|p| p.target == s) {
                for lb in 0..=(budget - la) {
                    for right in by_len[lb].iter().filter(|p| p.source == t) {
                        let v = extend_relation(rho, left, right, &index_of, Some(n));
                        if !v.is_empty() {
                            ideal.insert(flip_vec(&v));
                        }
                    }
                }
            }
        }
    }

    let mut is_pivot = vec![false; m];
    for c in ideal.pivots() {
        is_pivot[unflip(c)] = true;
    }
    let basis_paths: Vec<Path> = paths
        .iter()
        .enumerate()
        .filter(|(i, _)| !is_pivot[*i])
        .map(|(_, p)| p.clone())
        .collect();
    let basis_index: PathIndex =
        basis_paths.iter().enumerate().map(|(i, p)| (path_key(p), i)).collect();
    let dim = basis_paths.len();

    // reduce a path (source, word) to basis coordinates
    let reduce_word = |source: usize, word: &[usize]| -> SparseVec {
        if word.len() >= n {
            return Vec::new();
        }
        let idx = index_of[&(source, word.to_vec())];
        let reduced = ideal.reduce(&sparse_unit(flip(idx)));
        let mut out: SparseVec = reduced
            .iter()
            .map(|&(c, coeff)| {
                let pi = unflip(c);
                (basis_index[&path_key(&paths[pi])] as u32, coeff)
            })
            .collect();
        out.sort_by_key(|&(i, _)| i);
        out
    };

    let mut table: Vec<SparseVec> = Vec::with_capacity(dim * dim);
    for pi in &basis_paths {
        for pj in &basis_paths {
            if pi.target != pj.source {
                table.push(Vec::new());
                continue;
            }
            let mut word = pi.word.clone();
            word.extend_from_slice(&pj.word);
            table.push(reduce_word(pi.source, &word));
        }
    }

    let vertex_count = p.quiver.vertex_count();
    let mut idempotents = vec![usize::MAX; vertex_count];
    let mut per_pair = vec![vec![Vec::new(); vertex_count]; vertex_count];
    let mut pair_pos = vec![0usize; dim];
    for (i, path) in basis_paths.iter().enumerate() {
        if path.is_trivial() {
            idempotents[path.source] = i;
        }
        pair_pos[i] = per_pair[path.source][path.target].len();
        per_pair[path.source][path.target].push(i);
    }
    debug_assert!(idempotents.iter().all(|&i| i != usize::MAX));

    Ok(AlgebraBasis {
        id: NEXT_BASIS_ID.fetch_add(1, Ordering::Relaxed),
        presentation: p.clone(),
        path_lookup: basis_index,
        paths: basis_paths,
        dim,
        idempotents,
        per_pair,
        pair_pos,
        nilpotency: n,
        table,
    })
}

impl AlgebraBasis {
    pub fn vertex_count(&self) -> usize {
        self.presentation.quiver.vertex_count()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { basis_id: self.id, coeffs: Vec::new() }
    }

    pub fn element(&self, coeffs: SparseVec) -> AlgebraElement {
        debug_assert!(coeffs.iter().all(|&(i, _)| (i as usize) < self.dim));
        AlgebraElement { basis_id: self.id, coeffs }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        self.element(sparse_unit(i as u32))
    }

    pub fn idempotent(&self, v: VertexId) -> AlgebraElement {
        self.basis_element(self.idempotents[v])
    }

    /// Identity element `sum_v e_v`.
    pub fn one(&self) -> AlgebraElement {
        let mut coeffs: SparseVec =
            self.idempotents.iter().map(|&i| (i as u32, Rat::ONE)).collect();
        coeffs.sort_by_key(|&(i, _)| i);
        self.element(coeffs)
    }

    /// Looks up a basis path by its arrow word (empty word not allowed).
    pub fn path_element(&self, word: &[usize]) -> Option<AlgebraElement> {
        let source = self.presentation.quiver.arrows.get(*word.first()?)?.from;
        self.path_lookup.get(&(source, word.to_vec())).map(|&i| self.basis_element(i))
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Bilinear product, composition written left to right: `multiply(p, q)`
    /// is the path "p then q".
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        if a.basis_id != self.id || b.basis_id != self.id {
            return Err(Error::BasisMismatch);
        }
        let mut out: SparseVec = Vec::new();
        for &(i, ca) in &a.coeffs {
            for &(j, cb) in &b.coeffs {
                let prod = self.product_of_basis(i as usize, j as usize);
                if !prod.is_empty() {
                    out = sparse_add_scaled(&out, ca * cb, prod);
                }
            }
        }
        Ok(self.element(out))
    }

    /// Basis indices spanning the Jacobson radical (all non-trivial paths).
    pub fn radical_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| !self.paths[i].is_trivial()).collect()
    }

    /// Dimensions of `rad^k / rad^{k+1}` for k = 0, 1, ... until zero.
    pub fn radical_layers(&self) -> Vec<usize> {
        let rad: Vec<SparseVec> =
            self.radical_indices().iter().map(|&i| sparse_unit(i as u32)).collect();
        let mut layers = vec![self.dim];
        let mut current = rad.clone();
        loop {
            let mut ech = Echelon::new();
            for v in &current {
                ech.insert(v.clone());
            }
            let dim_k = ech.rank();
            let prev = *layers.last().unwrap();
            layers.pop();
            layers.push(prev - dim_k);
            if dim_k == 0 {
                break;
            }
            layers.push(dim_k);
            // rad^{k+1} = rad^k * rad
            let mut next = Vec::new();
            for v in ech.rows() {
                for r in &rad {
                    let prod = self
                        .multiply(&self.element(v.clone()), &self.element(r.clone()))
                        .unwrap();
                    if !prod.coeffs.is_empty() {
                        next.push(prod.coeffs);
                    }
                }
            }
            current = next;
        }
        layers
    }

    /// A basis of `{z in rad : z a = a z for every arrow a, z e_v = e_v z}`.
    pub fn central_radical_elements(&self) -> Vec<AlgebraElement> {
        let rad = self.radical_indices();
        // for each probe x (arrows and idempotents), the map z -> z x - x z
        // must vanish; collect its matrix rows by output coordinate
        let mut probes: Vec<AlgebraElement> = Vec::new();
        for name_id in 0..self.presentation.quiver.arrows.len() {
            if let Some(e) = self.path_element(&[name_id]) {
                probes.push(e);
            }
        }
        for v in 0..self.vertex_count() {
            probes.push(self.idempotent(v));
        }
        // build equations indexed by (probe, output basis index)
        let mut rows: std::collections::BTreeMap<(usize, u32), SparseVec> =
            std::collections::BTreeMap::new();
        for (k, &i) in rad.iter().enumerate() {
            let z = self.basis_element(i);
            for (pi, x) in probes.iter().enumerate() {
                let zx = self.multiply(&z, x).unwrap();
                let xz = self.multiply(x, &z).unwrap();
                let diff = sparse_add_scaled(&zx.coeffs, -Rat::ONE, &xz.coeffs);
                for (out, c) in diff {
                    rows.entry((pi, out))
                        .or_default()
                        .push((k as u32, c));
                }
            }
        }
        let mut eqs: Vec<SparseVec> = rows.into_values().collect();
        for e in &mut eqs {
            e.sort_by_key(|&(i, _)| i);
        }
        crate::linalg::kernel_basis(&eqs, rad.len())
            .into_iter()
            .map(|v| {
                let mut coeffs: SparseVec =
                    v.iter().map(|&(k, c)| (rad[k as usize] as u32, c)).collect();
                coeffs.sort_by_key(|&(i, _)| i);
                self.element(coeffs)
            })
            .collect()
    }

    pub fn pair_of(&self, i: usize) -> (VertexId, VertexId) {
        (self.paths[i].source, self.paths[i].target)
    }

    /// Pretty form of an element, e.g. `mu beta + 2 e_1`.
    pub fn display_element(&self, e: &AlgebraElement) -> String {
        if e.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for &(i, c) in &e.coeffs {
            let p = self.paths[i as usize].display(&self.presentation.quiver).to_string();
            if c.is_one() {
                parts.push(p);
            } else if c == -Rat::ONE {
                parts.push(format!("-{p}"));
            } else {
                parts.push(format!("{c} {p}"));
            }
        }
        parts.join(" + ")
    }
}
