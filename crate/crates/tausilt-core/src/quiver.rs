//! Quivers, paths, relations and algebra presentations.

use crate::error::{Error, Result};
use crate::scalar::Rat;
use std::cmp::Ordering;
use std::fmt;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: VertexId,
    pub to: VertexId,
}

/// Finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyQuiver);
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        let lookup = |label: &str| -> Result<VertexId> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut names = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::Parse(format!("duplicate arrow name {name:?}")));
            }
            out.push(Arrow { from: lookup(&from)?, to: lookup(&to)?, name });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, label: &str) -> Result<VertexId> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }
}

/// Path in a quiver, composed left to right: the word `[a, b]` is the path
/// "first `a`, then `b`" and requires `to(a) = from(b)`. Trivial paths are
/// empty words anchored at a vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub word: Vec<ArrowId>,
    pub source: VertexId,
    pub target: VertexId,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { word: Vec::new(), source: v, target: v }
    }

    pub fn of_word(quiver: &Quiver, word: Vec<ArrowId>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::Parse("empty path word needs an anchor vertex".into()));
        }
        for w in word.windows(2) {
            if quiver.arrows[w[0]].to != quiver.arrows[w[1]].from {
                return Err(Error::Parse(format!(
                    "arrows {:?} and {:?} do not compose",
                    quiver.arrows[w[0]].name, quiver.arrows[w[1]].name
                )));
            }
        }
        Ok(Path {
            source: quiver.arrows[word[0]].from,
            target: quiver.arrows[*word.last().unwrap()].to,
            word,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.word.is_empty()
    }

    /// Normal-form order: by (length, lexicographic arrow order); trivial
    /// paths ordered by anchor vertex.
    pub fn cmp_order(&self, other: &Path) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.source.cmp(&other.source))
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({:?} {}->{})", self.word, self.source, self.target)
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.word.is_empty() {
            return write!(f, "e_{}", self.quiver.vertices[self.path.source]);
        }
        let names: Vec<&str> =
            self.path.word.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect();
        write!(f, "{}", names.join(" "))
    }
}

/// Relation: a linear combination of parallel paths, each of length >= 2.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Rat, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Rat, Path)>) -> Result<Self> {
        let terms: Vec<(Rat, Path)> =
            terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Err(Error::NotAdmissible("relation with no nonzero term".into()));
        }
        let (s, t) = (terms[0].1.source, terms[0].1.target);
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation term of length {} (need >= 2)",
                    p.len()
                )));
            }
            if p.source != s || p.target != t {
                return Err(Error::NotAdmissible("relation terms are not parallel".into()));
            }
        }
        Ok(Relation { terms })
    }

    pub fn monomial(path: Path) -> Result<Self> {
        Relation::new(vec![(Rat::ONE, path)])
    }
}

/// Bound quiver algebra presentation: quiver plus admissible relations.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Optional hint: smallest known N with rad^N = 0.
    pub nilpotency_hint: Option<usize>,
    /// Display name, when the presentation comes from the catalog.
    pub name: Option<String>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Self {
        AlgebraPresentation { quiver, relations, nilpotency_hint: None, name: None }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_hint(mut self, n: usize) -> Self {
        self.nilpotency_hint = Some(n);
        self
    }

    /// Opposite algebra: arrows reversed, relation words reversed,
    /// coefficients kept.
    pub fn opposite(&self) -> AlgebraPresentation {
        let quiver = Quiver {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), from: a.to, to: a.from })
                .collect(),
        };
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        let mut word = p.word.clone();
                        word.reverse();
                        (*c, Path { word, source: p.target, target: p.source })
                    })
                    .collect(),
            })
            .collect();
        AlgebraPresentation {
            quiver,
            relations,
            nilpotency_hint: self.nilpotency_hint,
            name: self.name.as_ref().map(|n| opposite_name(n)),
        }
    }

    /// Canonical text form, used for cache keys and diagnostics.
    pub fn canonical_string(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        write!(s, "vertices={:?};arrows=[", self.quiver.vertices).unwrap();
        for a in &self.quiver.arrows {
            write!(s, "({},{},{})", a.name, a.from, a.to).unwrap();
        }
        s.push_str("];relations=[");
        let mut rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                let mut terms: Vec<String> = r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        let word: Vec<&str> =
                            p.word.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect();
                        format!("{}*{}", c, word.join(" "))
                    })
                    .collect();
                terms.sort();
                terms.join("+")
            })
            .collect();
        rels.sort();
        s.push_str(&rels.join(";"));
        s.push(']');
        s
    }
}

pub fn opposite_name(name: &str) -> String {
    match name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{name}^op"),
    }
}

/// Generator for a quotient presentation: either a whole arrow, or a linear
/// combination of parallel paths of length at least one.
#[derive(Clone, Debug)]
pub enum QuotientGen {
    Arrow(ArrowId),
    Combination(Vec<(Rat, Path)>),
}

/// Presentation of `Lambda / <extra>`. Killing an arrow removes it from the
/// quiver; other generators become relations rewritten into the smaller
/// quiver. Combinations mixing arrows with longer paths are rejected.
pub fn quotient_presentation(
    p: &AlgebraPresentation,
    extra: &[QuotientGen],
) -> Result<AlgebraPresentation> {
    let mut killed: Vec<ArrowId> = Vec::new();
    let mut new_relations: Vec<Vec<(Rat, Path)>> = Vec::new();
    for gen in extra {
        match gen {
            QuotientGen::Arrow(a) => {
                if *a >= p.quiver.arrows.len() {
                    return Err(Error::InvalidGenerator(format!("no arrow with id {a}")));
                }
                killed.push(*a);
            }
            QuotientGen::Combination(terms) => {
                let terms: Vec<(Rat, Path)> =
                    terms.iter().filter(|(c, _)| !c.is_zero()).cloned().collect();
                if terms.is_empty() {
                    continue;
                }
                let (s, t) = (terms[0].1.source, terms[0].1.target);
                if terms.iter().any(|(_, q)| q.source != s || q.target != t) {
                    return Err(Error::InvalidGenerator(
                        "generator terms are not parallel".into(),
                    ));
                }
                if terms.iter().any(|(_, q)| q.is_trivial()) {
                    return Err(Error::InvalidGenerator(
                        "cannot quotient by a trivial path".into(),
                    ));
                }
                let has_arrow = terms.iter().any(|(_, q)| q.len() == 1);
                if has_arrow {
                    if terms.len() != 1 {
                        return Err(Error::InvalidGenerator(
                            "combination mixes an arrow with longer paths".into(),
                        ));
                    }
                    killed.push(terms[0].1.word[0]);
                } else {
                    new_relations.push(terms);
                }
            }
        }
    }
    killed.sort_unstable();
    killed.dedup();

    // rebuild the quiver without the killed arrows, remapping ids
    let mut id_map: Vec<Option<ArrowId>> = vec![None; p.quiver.arrows.len()];
    let mut arrows = Vec::new();
    for (old, arrow) in p.quiver.arrows.iter().enumerate() {
        if killed.binary_search(&old).is_err() {
            id_map[old] = Some(arrows.len());
            arrows.push(arrow.clone());
        }
    }
    let quiver = Quiver { vertices: p.quiver.vertices.clone(), arrows };

    let remap = |path: &Path| -> Option<Path> {
        let word = path
            .word
            .iter()
            .map(|&a| id_map[a])
            .collect::<Option<Vec<_>>>()?;
        Some(Path { word, source: path.source, target: path.target })
    };
    let mut relations = Vec::new();
    let mut push_terms = |terms: &[(Rat, Path)]| -> Result<()> {
        let surviving: Vec<(Rat, Path)> = terms
            .iter()
            .filter_map(|(c, path)| remap(path).map(|q| (*c, q)))
            .collect();
        if !surviving.is_empty() {
            relations.push(Relation::new(surviving)?);
        }
        Ok(())
    };
    for r in &p.relations {
        push_terms(&r.terms)?;
    }
    for terms in &new_relations {
        push_terms(terms)?;
    }
    let name = p.name.as_ref().map(|n| format!("{n}/<{} gens>", extra.len()));
    Ok(AlgebraPresentation {
        quiver,
        relations,
        nilpotency_hint: p.nilpotency_hint,
        name,
    })
}
