//! Algebra presentation files.
//!
//! The format is TOML with two blocks; unknown keys are rejected.
//!
//! ```toml
//! [quiver]
//! vertices = ["1", "2"]
//! arrows = [
//!   { name = "mu", from = "1", to = "2" },
//!   { name = "beta", from = "2", to = "2" },
//! ]
//!
//! [relations]
//! monomials = ["beta beta beta beta"]
//! linear = [[{ coeff = "1", path = "b1 c1" }, { coeff = "-1", path = "b2 c2" }]]
//!
//! [options]            # optional
//! rad_nilpotency = 5   # hint: smallest N with rad^N = 0
//! closure_cap = 12     # override for the ideal-closure cap
//! ```

use crate::error::{Error, Result};
use crate::quiver::{AlgebraPresentation, Path, Quiver, Relation};
use crate::scalar::Rat;
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSchema {
    quiver: QuiverSchema,
    #[serde(default)]
    relations: RelationsSchema,
    #[serde(default)]
    options: OptionsSchema,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverSchema {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowSchema>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowSchema {
    name: String,
    from: String,
    to: String,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RelationsSchema {
    #[serde(default)]
    monomials: Vec<String>,
    #[serde(default)]
    linear: Vec<Vec<TermSchema>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermSchema {
    coeff: toml::Value,
    path: String,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct OptionsSchema {
    rad_nilpotency: Option<usize>,
    closure_cap: Option<usize>,
}

fn parse_word(quiver: &Quiver, s: &str) -> Result<Path> {
    let ids = s
        .split_whitespace()
        .map(|name| quiver.arrow_id(name))
        .collect::<Result<Vec<_>>>()?;
    if ids.is_empty() {
        return Err(Error::Parse(format!("empty path in {s:?}")));
    }
    Path::of_word(quiver, ids)
}

fn parse_coeff(v: &toml::Value) -> Result<Rat> {
    match v {
        toml::Value::Integer(n) => Ok(Rat::from_int(*n)),
        toml::Value::String(s) => s.parse::<Rat>().map_err(Error::Parse),
        other => Err(Error::Parse(format!("bad coefficient {other:?}"))),
    }
}

/// Parses the presentation text; also returns the closure-cap override.
pub fn parse_presentation(text: &str) -> Result<(AlgebraPresentation, Option<usize>)> {
    let file: FileSchema =
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let quiver = Quiver::new(
        file.quiver.vertices,
        file.quiver
            .arrows
            .into_iter()
            .map(|a| (a.name, a.from, a.to))
            .collect(),
    )?;
    let mut relations = Vec::new();
    for m in &file.relations.monomials {
        relations.push(Relation::monomial(parse_word(&quiver, m)?)?);
    }
    for terms in &file.relations.linear {
        let parsed = terms
            .iter()
            .map(|t| Ok((parse_coeff(&t.coeff)?, parse_word(&quiver, &t.path)?)))
            .collect::<Result<Vec<_>>>()?;
        relations.push(Relation::new(parsed)?);
    }
    let mut p = AlgebraPresentation::new(quiver, relations);
    p.nilpotency_hint = file.options.rad_nilpotency;
    Ok((p, file.options.closure_cap))
}

pub fn parse_presentation_file(path: &std::path::Path) -> Result<(AlgebraPresentation, Option<usize>)> {
    let text = std::fs::read_to_string(path)?;
    let (mut p, cap) = parse_presentation(&text)?;
    if p.name.is_none() {
        p.name = path.file_stem().map(|s| s.to_string_lossy().to_string());
    }
    Ok((p, cap))
}
