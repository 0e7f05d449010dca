//! Named two-point algebras used throughout the engine and its test suites.

use crate::error::{Error, Result};
use crate::quiver::{AlgebraPresentation, Path, Quiver, Relation};
use crate::scalar::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CatalogTag {
    /// tau-tilting infinite, every proper quotient finite
    MinimalInfinite,
    /// tau-tilting finite
    Finite,
    /// appears as an endomorphism algebra along mutation chains
    DerivedHelper,
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub presentation: AlgebraPresentation,
    pub tag: CatalogTag,
    pub expected_dim: usize,
    pub notes: &'static str,
}

/// Builds a two-point presentation from arrow triples, monomial relation
/// words (space-separated arrow names) and linear relations.
pub fn build_presentation(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    monomials: &[&str],
    linear: &[&[(i64, &str)]],
    hint: usize,
) -> Result<AlgebraPresentation> {
    let quiver = Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(n, f, t)| (n.to_string(), f.to_string(), t.to_string()))
            .collect(),
    )?;
    let parse_word = |q: &Quiver, s: &str| -> Result<Path> {
        let ids = s
            .split_whitespace()
            .map(|name| q.arrow_id(name))
            .collect::<Result<Vec<_>>>()?;
        Path::of_word(q, ids)
    };
    let mut relations = Vec::new();
    for m in monomials {
        relations.push(Relation::monomial(parse_word(&quiver, m)?)?);
    }
    for terms in linear {
        let parsed = terms
            .iter()
            .map(|(c, w)| Ok((Rat::from_int(*c), parse_word(&quiver, w)?)))
            .collect::<Result<Vec<_>>>()?;
        relations.push(Relation::new(parsed)?);
    }
    Ok(AlgebraPresentation::new(quiver, relations).with_hint(hint))
}

fn two_point(
    name: &'static str,
    arrows: &[(&str, &str, &str)],
    monomials: &[&str],
    linear: &[&[(i64, &str)]],
    hint: usize,
) -> AlgebraPresentation {
    build_presentation(&["1", "2"], arrows, monomials, linear, hint)
        .expect("catalog presentation")
        .named(name)
}

/// Kronecker algebra: two parallel arrows 1 -> 2.
pub fn delta1() -> AlgebraPresentation {
    two_point("Delta1", &[("mu1", "1", "2"), ("mu2", "1", "2")], &[], &[], 2)
}

/// Two loops and two arrows 2 -> 1, with one socle identification.
pub fn delta2() -> AlgebraPresentation {
    two_point(
        "Delta2",
        &[("b1", "2", "2"), ("b2", "2", "2"), ("c1", "2", "1"), ("c2", "2", "1")],
        &["b1 b1", "b2 b2", "b1 b2", "b2 b1", "b1 c2", "b2 c1"],
        &[&[(1, "b1 c1"), (-1, "b2 c2")]],
        3,
    )
}

pub fn delta3() -> AlgebraPresentation {
    two_point(
        "Delta3",
        &[("alpha", "1", "1"), ("mu", "1", "2"), ("beta", "2", "2")],
        &["alpha alpha alpha", "beta beta beta", "alpha mu beta"],
        &[],
        4,
    )
}

pub fn delta4() -> AlgebraPresentation {
    two_point(
        "Delta4",
        &[("b1", "2", "2"), ("b2", "2", "2"), ("c1", "2", "1"), ("c2", "2", "1")],
        &["b1 b1 b1", "b2 b2", "b2 b1", "b1 c2", "b2 c1", "b1 b1 b2"],
        &[&[(1, "b1 c1"), (-1, "b2 c2")]],
        4,
    )
}

pub fn delta5() -> AlgebraPresentation {
    two_point(
        "Delta5",
        &[("alpha", "1", "1"), ("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &[
            "alpha alpha alpha",
            "beta beta beta",
            "mu nu",
            "nu mu",
            "alpha mu beta",
            "beta nu alpha",
            "nu alpha mu",
            "mu beta nu",
            "nu alpha alpha mu",
            "mu beta beta nu",
        ],
        &[],
        4,
    )
}

/// One arrow 1 -> 2 and a loop of nilpotency four.
pub fn omega1() -> AlgebraPresentation {
    two_point(
        "Omega1",
        &[("mu", "1", "2"), ("beta", "2", "2")],
        &["beta beta beta beta"],
        &[],
        5,
    )
}

pub fn omega2() -> AlgebraPresentation {
    two_point(
        "Omega2",
        &[("alpha", "1", "1"), ("mu", "1", "2"), ("beta", "2", "2")],
        &["alpha alpha", "beta beta"],
        &[],
        4,
    )
}

pub fn omega3() -> AlgebraPresentation {
    two_point(
        "Omega3",
        &[("mu", "1", "2"), ("beta1", "2", "2"), ("beta2", "2", "2")],
        &["beta1 beta1", "beta2 beta2", "beta1 beta2", "beta2 beta1"],
        &[],
        3,
    )
}

pub fn omega4() -> AlgebraPresentation {
    two_point(
        "Omega4",
        &[("mu", "1", "2"), ("beta1", "2", "2"), ("beta2", "2", "2")],
        &[
            "beta1 beta1 beta1",
            "beta2 beta2",
            "beta2 beta1",
            "mu beta2",
            "beta1 beta1 beta2",
        ],
        &[],
        4,
    )
}

pub fn omega5() -> AlgebraPresentation {
    two_point(
        "Omega5",
        &[("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &["beta beta beta", "beta nu", "nu mu nu", "nu mu beta beta"],
        &[],
        5,
    )
}

pub fn omegabar1() -> AlgebraPresentation {
    two_point(
        "OmegaBar1",
        &[("mu", "1", "2"), ("beta", "2", "2")],
        &["beta beta beta"],
        &[],
        4,
    )
}

pub fn omegabar3() -> AlgebraPresentation {
    two_point(
        "OmegaBar3",
        &[("mu", "1", "2"), ("beta1", "2", "2"), ("beta2", "2", "2")],
        &["beta1 beta1", "beta2 beta2", "beta1 beta2", "beta2 beta1", "mu beta2"],
        &[],
        3,
    )
}

pub fn omegabar4() -> AlgebraPresentation {
    two_point(
        "OmegaBar4",
        &[("mu", "1", "2"), ("beta1", "2", "2"), ("beta2", "2", "2")],
        &[
            "beta1 beta1 beta1",
            "beta2 beta2",
            "beta2 beta1",
            "mu beta2",
            "beta1 beta1 beta2",
            "mu beta1 beta2",
        ],
        &[],
        4,
    )
}

pub fn omegabar4p() -> AlgebraPresentation {
    two_point(
        "OmegaBar4p",
        &[("mu", "1", "2"), ("beta1", "2", "2"), ("beta2", "2", "2")],
        &[
            "beta1 beta1 beta1",
            "beta2 beta2",
            "beta2 beta1",
            "mu beta2",
            "beta1 beta1 beta2",
            "mu beta1 beta1",
        ],
        &[],
        4,
    )
}

/// Quotient of Omega5 by both paths "mu nu" and "nu mu" (equivalently by the
/// central element nu mu + mu nu of the socle quotient).
pub fn omegabar5() -> AlgebraPresentation {
    two_point(
        "OmegaBar5",
        &[("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &["beta beta beta", "beta nu", "mu nu", "nu mu"],
        &[],
        4,
    )
}

/// Radical-cube-zero reduction target on one loop per vertex: exactly the
/// products mu beta, alpha mu, nu alpha, beta nu survive.
pub fn lambda1111() -> AlgebraPresentation {
    two_point(
        "Lambda1111",
        &[("alpha", "1", "1"), ("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &[
            "alpha alpha",
            "beta beta",
            "mu nu",
            "nu mu",
            "alpha mu beta",
            "beta nu alpha",
            "nu alpha mu",
            "mu beta nu",
        ],
        &[],
        3,
    )
}

/// Variant with two loops on each vertex; survivors mu beta1, beta2 nu,
/// nu alpha1, alpha2 mu.
pub fn lambda1212() -> AlgebraPresentation {
    two_point(
        "Lambda1212",
        &[
            ("alpha1", "1", "1"),
            ("alpha2", "1", "1"),
            ("mu", "1", "2"),
            ("nu", "2", "1"),
            ("beta1", "2", "2"),
            ("beta2", "2", "2"),
        ],
        &[
            "alpha1 alpha1",
            "alpha1 alpha2",
            "alpha2 alpha1",
            "alpha2 alpha2",
            "beta1 beta1",
            "beta1 beta2",
            "beta2 beta1",
            "beta2 beta2",
            "mu nu",
            "nu mu",
            "mu beta2",
            "beta1 nu",
            "nu alpha2",
            "alpha1 mu",
            "alpha2 mu beta1",
            "beta2 nu alpha1",
        ],
        &[],
        3,
    )
}

/// Variant with one loop at vertex 1 and two at vertex 2; survivors
/// mu beta1, beta2 nu, nu alpha, alpha mu.
pub fn lambda1211() -> AlgebraPresentation {
    two_point(
        "Lambda1211",
        &[
            ("alpha", "1", "1"),
            ("mu", "1", "2"),
            ("nu", "2", "1"),
            ("beta1", "2", "2"),
            ("beta2", "2", "2"),
        ],
        &[
            "alpha alpha",
            "beta1 beta1",
            "beta1 beta2",
            "beta2 beta1",
            "beta2 beta2",
            "mu nu",
            "nu mu",
            "mu beta2",
            "beta1 nu",
            "alpha mu beta1",
            "beta2 nu alpha",
            "nu alpha mu",
        ],
        &[],
        3,
    )
}

/// Omega5 modulo its socle path "mu nu mu beta".
pub fn omega5_mod_socle1() -> AlgebraPresentation {
    two_point(
        "Omega5/<mu nu mu beta>",
        &[("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &["beta beta beta", "beta nu", "nu mu nu", "nu mu beta beta", "mu nu mu beta"],
        &[],
        4,
    )
}

/// Omega5 modulo "nu mu beta".
pub fn omega5_mod_numubeta() -> AlgebraPresentation {
    two_point(
        "Omega5/<nu mu beta>",
        &[("mu", "1", "2"), ("nu", "2", "1"), ("beta", "2", "2")],
        &["beta beta beta", "beta nu", "nu mu nu", "nu mu beta"],
        &[],
        4,
    )
}

/// Omega1 modulo its socle path "mu beta^3".
pub fn omega1_mod_socle() -> AlgebraPresentation {
    two_point(
        "Omega1/<mu beta^3>",
        &[("mu", "1", "2"), ("beta", "2", "2")],
        &["beta beta beta beta", "mu beta beta beta"],
        &[],
        5,
    )
}

pub fn entries() -> Vec<CatalogEntry> {
    use CatalogTag::*;
    vec![
        CatalogEntry {
            name: "Delta1",
            presentation: delta1(),
            tag: MinimalInfinite,
            expected_dim: 4,
            notes: "Kronecker algebra",
        },
        CatalogEntry {
            name: "Delta2",
            presentation: delta2(),
            tag: DerivedHelper,
            expected_dim: 7,
            notes: "endomorphism algebra of the first mutation over Omega3",
        },
        CatalogEntry {
            name: "Delta3",
            presentation: delta3(),
            tag: Finite,
            expected_dim: 11,
            notes: "loop at each vertex joined by an arrow, tau-tilting finite",
        },
        CatalogEntry {
            name: "Delta4",
            presentation: delta4(),
            tag: DerivedHelper,
            expected_dim: 10,
            notes: "endomorphism algebra of the first mutation over Omega4",
        },
        CatalogEntry {
            name: "Delta5",
            presentation: delta5(),
            tag: Finite,
            expected_dim: 16,
            notes: "reduction target for radical-five-zero presentations",
        },
        CatalogEntry {
            name: "Omega1",
            presentation: omega1(),
            tag: MinimalInfinite,
            expected_dim: 9,
            notes: "arrow plus loop of nilpotency four",
        },
        CatalogEntry {
            name: "Omega2",
            presentation: omega2(),
            tag: MinimalInfinite,
            expected_dim: 8,
            notes: "gentle algebra with two square-zero loops",
        },
        CatalogEntry {
            name: "Omega3",
            presentation: omega3(),
            tag: MinimalInfinite,
            expected_dim: 7,
            notes: "arrow plus two loops with radical cube zero",
        },
        CatalogEntry {
            name: "Omega4",
            presentation: omega4(),
            tag: MinimalInfinite,
            expected_dim: 10,
            notes: "radical cube nonzero variant of Omega3",
        },
        CatalogEntry {
            name: "Omega5",
            presentation: omega5(),
            tag: MinimalInfinite,
            expected_dim: 13,
            notes: "endomorphism algebra of the first mutation over the opposite of Omega4",
        },
        CatalogEntry {
            name: "OmegaBar1",
            presentation: omegabar1(),
            tag: Finite,
            expected_dim: 7,
            notes: "socle quotient of Omega1",
        },
        CatalogEntry {
            name: "OmegaBar3",
            presentation: omegabar3(),
            tag: Finite,
            expected_dim: 6,
            notes: "socle quotient of Omega3",
        },
        CatalogEntry {
            name: "OmegaBar4",
            presentation: omegabar4(),
            tag: Finite,
            expected_dim: 9,
            notes: "socle quotient of Omega4, shares g-vectors with OmegaBar1",
        },
        CatalogEntry {
            name: "OmegaBar4p",
            presentation: omegabar4p(),
            tag: Finite,
            expected_dim: 9,
            notes: "second socle quotient of Omega4",
        },
        CatalogEntry {
            name: "OmegaBar5",
            presentation: omegabar5(),
            tag: Finite,
            expected_dim: 8,
            notes: "central reduction of the socle quotients of Omega5",
        },
        CatalogEntry {
            name: "Lambda1111",
            presentation: lambda1111(),
            tag: Finite,
            expected_dim: 10,
            notes: "radical-cube-zero reduction target, one loop per vertex",
        },
        CatalogEntry {
            name: "Lambda1212",
            presentation: lambda1212(),
            tag: Finite,
            expected_dim: 12,
            notes: "radical-cube-zero reduction target, two loops per vertex",
        },
        CatalogEntry {
            name: "Lambda1211",
            presentation: lambda1211(),
            tag: Finite,
            expected_dim: 11,
            notes: "radical-cube-zero reduction target, mixed loop counts",
        },
    ]
}

/// Looks a presentation up by name; `Name^op` and `Name_op` give opposites.
pub fn by_name(name: &str) -> Result<AlgebraPresentation> {
    let (base, op) = match name.strip_suffix("^op").or_else(|| name.strip_suffix("_op")) {
        Some(b) => (b, true),
        None => (name, false),
    };
    let entry = entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(base))
        .ok_or_else(|| Error::Parse(format!("unknown catalog algebra {name:?}")))?;
    Ok(if op { entry.presentation.opposite() } else { entry.presentation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_basis;

    #[test]
    fn catalog_dimensions_match() {
        for entry in entries() {
            let b = compute_basis(&entry.presentation)
                .unwrap_or_else(|e| panic!("{} failed: {e}", entry.name));
            assert_eq!(b.dim, entry.expected_dim, "dimension of {}", entry.name);
        }
    }

    #[test]
    fn lookup_with_opposites() {
        assert_eq!(by_name("Delta1").unwrap().name.as_deref(), Some("Delta1"));
        let op = by_name("Omega3^op").unwrap();
        assert_eq!(op.name.as_deref(), Some("Omega3^op"));
        assert!(by_name("Omega9").is_err());
        let op2 = by_name("omega3_op").unwrap();
        assert_eq!(op2.quiver, op.quiver);
    }

    #[test]
    fn omega2_per_pair_counts_match_projective_diagrams() {
        let b = compute_basis(&omega2()).unwrap();
        assert_eq!(b.per_pair[0][0].len(), 2);
        assert_eq!(b.per_pair[0][1].len(), 4);
        assert_eq!(b.per_pair[1][1].len(), 2);
        assert_eq!(b.per_pair[1][0].len(), 0);
    }
}
