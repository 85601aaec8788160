//! JSON serialization of forms, brackets, decompositions, and residual
//! reports, shared by the CLI and the test harness.
//!
//! All scalars travel as exact rational strings (`"3"`, `"-2/3"`); no
//! floating-point round trip is involved.

use serde::{Deserialize, Serialize};

use crate::blade::Blade;
use crate::decomp::{Decomposition, SimplePart};
use crate::error::{AlgebraError, Result};
use crate::form::Form;
use crate::nlie::NBracket;
use crate::plucker::ResidualReport;
use crate::scalar::{format_rat, parse_rat, Rat, Scalar};
use crate::space::MetricSpace;

/// One `coeff · e_{indices}` term of a form file.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TermJson {
    pub indices: Vec<usize>,
    pub coeff: String,
}

/// Form file format: `{"dim", "time_dims", "degree", "terms": [...]}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FormJson {
    pub dim: usize,
    #[serde(default)]
    pub time_dims: usize,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

fn parse_error(context: &str, detail: impl std::fmt::Display) -> AlgebraError {
    AlgebraError::ParseError(format!("{context}: {detail}"))
}

/// Serialize an exact form.
pub fn form_to_json(f: &Form<Rat>) -> FormJson {
    FormJson {
        dim: f.space().dim(),
        time_dims: f.space().time_dims(),
        degree: f.degree(),
        terms: f
            .terms()
            .map(|(b, c)| TermJson {
                indices: b.indices(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

/// Rebuild a form from its file representation, validating every field.
pub fn form_from_json(j: &FormJson) -> Result<Form<Rat>> {
    let space = MetricSpace::new(j.dim, j.time_dims)?;
    let mut f = Form::zero(space, j.degree);
    for (line, term) in j.terms.iter().enumerate() {
        let context = format!("terms[{line}]");
        if term.indices.len() != j.degree {
            return Err(parse_error(
                &context,
                format!(
                    "term has {} indices but degree is {}",
                    term.indices.len(),
                    j.degree
                ),
            ));
        }
        if term.indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_error(&context, "indices must be strictly increasing"));
        }
        if term.indices.iter().any(|&i| i < 1 || i > j.dim) {
            return Err(parse_error(
                &context,
                format!("index out of range 1..={}", j.dim),
            ));
        }
        let coeff = parse_rat(&term.coeff)
            .map_err(|e| parse_error(&format!("{context}.coeff"), e))?;
        let blade = Blade::from_sorted(&term.indices)
            .ok_or_else(|| parse_error(&context, "invalid blade"))?;
        f.add_term(blade, coeff);
    }
    Ok(f)
}

/// Parse a form from JSON text.
pub fn form_from_str(text: &str) -> Result<Form<Rat>> {
    let j: FormJson =
        serde_json::from_str(text).map_err(|e| parse_error("form file", e))?;
    form_from_json(&j)
}

/// Render a form as pretty JSON text.
pub fn form_to_str(f: &Form<Rat>) -> String {
    serde_json::to_string_pretty(&form_to_json(f)).expect("form serializes")
}

/// One structure constant `f_{lower}^{upper} = coeff`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ConstantJson {
    pub lower: Vec<usize>,
    pub upper: usize,
    pub coeff: String,
}

/// Bracket file format: `{"arity", "dim", "constants": [...]}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BracketJson {
    pub arity: usize,
    pub dim: usize,
    pub constants: Vec<ConstantJson>,
}

/// Serialize a bracket's structure constants (sorted lower tuples only).
pub fn bracket_to_json(b: &NBracket<Rat>) -> BracketJson {
    let mut constants = Vec::new();
    for (blade, coeffs) in b.entries() {
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                constants.push(ConstantJson {
                    lower: blade.indices(),
                    upper: k + 1,
                    coeff: format_rat(c),
                });
            }
        }
    }
    BracketJson {
        arity: b.arity,
        dim: b.dim,
        constants,
    }
}

/// Rebuild a bracket, validating index ranges and sortedness.
pub fn bracket_from_json(j: &BracketJson) -> Result<NBracket<Rat>> {
    if j.arity < 2 {
        return Err(parse_error("bracket file", "arity must be at least 2"));
    }
    if j.dim < 1 || j.dim > 16 {
        return Err(parse_error("bracket file", "dim must be in 1..=16"));
    }
    let mut b = NBracket::new(j.arity, j.dim);
    for (line, c) in j.constants.iter().enumerate() {
        let context = format!("constants[{line}]");
        if c.lower.len() != j.arity {
            return Err(parse_error(
                &context,
                format!("lower tuple has {} indices, arity is {}", c.lower.len(), j.arity),
            ));
        }
        if c.lower.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_error(
                &context,
                "lower indices must be strictly increasing",
            ));
        }
        if c.lower.iter().any(|&i| i < 1 || i > j.dim) || c.upper < 1 || c.upper > j.dim {
            return Err(parse_error(
                &context,
                format!("index out of range 1..={}", j.dim),
            ));
        }
        let coeff = parse_rat(&c.coeff)
            .map_err(|e| parse_error(&format!("{context}.coeff"), e))?;
        b.add_constant(&c.lower, c.upper, coeff);
    }
    Ok(b)
}

/// Parse a bracket from JSON text.
pub fn bracket_from_str(text: &str) -> Result<NBracket<Rat>> {
    let j: BracketJson =
        serde_json::from_str(text).map_err(|e| parse_error("bracket file", e))?;
    bracket_from_json(&j)
}

/// One simple part: each factor is a coefficient vector of a one-form.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PartJson {
    pub factors: Vec<Vec<String>>,
}

/// Decomposition file format.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct DecompositionJson {
    pub dim: usize,
    #[serde(default)]
    pub time_dims: usize,
    pub parts: Vec<PartJson>,
}

pub fn decomposition_to_json(space: MetricSpace, d: &Decomposition<Rat>) -> DecompositionJson {
    DecompositionJson {
        dim: space.dim(),
        time_dims: space.time_dims(),
        parts: d
            .parts
            .iter()
            .map(|p| PartJson {
                factors: p
                    .factors
                    .iter()
                    .map(|f| f.covector_coords().iter().map(format_rat).collect())
                    .collect(),
            })
            .collect(),
    }
}

pub fn decomposition_from_json(j: &DecompositionJson) -> Result<(MetricSpace, Decomposition<Rat>)> {
    let space = MetricSpace::new(j.dim, j.time_dims)?;
    let mut parts = Vec::new();
    for (pi, p) in j.parts.iter().enumerate() {
        let mut factors = Vec::new();
        for (fi, coords) in p.factors.iter().enumerate() {
            let context = format!("parts[{pi}].factors[{fi}]");
            if coords.len() != j.dim {
                return Err(parse_error(
                    &context,
                    format!("expected {} coordinates", j.dim),
                ));
            }
            let mut exact = Vec::new();
            for (ci, c) in coords.iter().enumerate() {
                exact.push(
                    parse_rat(c)
                        .map_err(|e| parse_error(&format!("{context}[{ci}]"), e))?,
                );
            }
            factors.push(Form::from_covector(space, &exact));
        }
        parts.push(SimplePart::from_factors(space, factors)?);
    }
    Ok((space, Decomposition { parts }))
}

/// Residual report format: verdict plus per-blade residual forms.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ResidualReportJson {
    pub kind: String,
    pub is_zero: bool,
    pub max_abs_coeff: f64,
    pub outside_hypothesis: bool,
    pub violations: Vec<ResidualEntryJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ResidualEntryJson {
    pub contraction: Vec<usize>,
    pub residual: Vec<TermJson>,
}

pub fn residual_report_to_json(r: &ResidualReport<Rat>) -> ResidualReportJson {
    ResidualReportJson {
        kind: format!("{:?}", r.kind),
        is_zero: r.is_zero,
        max_abs_coeff: r.max_abs_coeff,
        outside_hypothesis: r.outside_hypothesis,
        violations: r
            .violations()
            .map(|(xi, form)| ResidualEntryJson {
                contraction: xi.indices(),
                residual: form_to_json(form).terms,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nlie;
    use crate::plucker;
    use crate::scalar::rint;

    #[test]
    fn form_round_trip() {
        let space = MetricSpace::euclidean(6);
        let f = Form::monomial(space, &[1, 2, 3], rint(1))
            .unwrap()
            .plus(&Form::monomial(space, &[4, 5, 6], crate::scalar::rat(-2, 3)).unwrap())
            .unwrap();
        let text = form_to_str(&f);
        let g = form_from_str(&text).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn form_validation_errors_carry_field_context() {
        let bad_degree = r#"{"dim":6,"degree":3,"terms":[{"indices":[1,2],"coeff":"1"}]}"#;
        let err = form_from_str(bad_degree).unwrap_err();
        assert!(err.to_string().contains("terms[0]"), "{err}");

        let bad_order = r#"{"dim":6,"degree":2,"terms":[{"indices":[2,1],"coeff":"1"}]}"#;
        assert!(form_from_str(bad_order)
            .unwrap_err()
            .to_string()
            .contains("strictly increasing"));

        let bad_coeff = r#"{"dim":6,"degree":2,"terms":[{"indices":[1,2],"coeff":"x"}]}"#;
        assert!(form_from_str(bad_coeff)
            .unwrap_err()
            .to_string()
            .contains("coeff"));

        let bad_json = r#"{"dim":6"#;
        assert!(form_from_str(bad_json).is_err());
    }

    #[test]
    fn bracket_round_trip() {
        let mut b = NBracket::<Rat>::new(2, 3);
        b.add_constant(&[1, 2], 3, rint(1));
        b.add_constant(&[1, 3], 2, rint(-1));
        let text = serde_json::to_string(&bracket_to_json(&b)).unwrap();
        let c = bracket_from_str(&text).unwrap();
        assert_eq!(b, c);
        assert!(nlie::jacobi_residual(&c)
            .iter()
            .all(|v| v.residual.iter().all(|r| r.is_zero())));
    }

    #[test]
    fn decomposition_round_trip() {
        let space = MetricSpace::euclidean(6);
        let f = form_from_str(
            r#"{"dim":6,"degree":3,"terms":[
                {"indices":[1,2,3],"coeff":"1"},{"indices":[4,5,6],"coeff":"1"}]}"#,
        )
        .unwrap();
        let d = Decomposition {
            parts: vec![
                SimplePart::from_factors(
                    space,
                    (1..=3)
                        .map(|i| Form::basis_one_form(space, i))
                        .collect(),
                )
                .unwrap(),
                SimplePart::from_factors(
                    space,
                    (4..=6)
                        .map(|i| Form::basis_one_form(space, i))
                        .collect(),
                )
                .unwrap(),
            ],
        };
        let j = decomposition_to_json(space, &d);
        let (space2, d2) = decomposition_from_json(&j).unwrap();
        assert_eq!(space, space2);
        assert!(crate::decomp::verify_orthogonal_sum(&f, &d2).unwrap());
    }

    #[test]
    fn residual_report_serializes() {
        let space = MetricSpace::euclidean(6);
        let f = form_from_str(
            r#"{"dim":6,"degree":3,"terms":[
                {"indices":[1,2,3],"coeff":"1"},{"indices":[1,4,5],"coeff":"1"},
                {"indices":[2,3,6],"coeff":"1"},{"indices":[4,5,6],"coeff":"1"}]}"#,
        )
        .unwrap();
        let r = plucker::orthogonal_relation_check(&f).unwrap();
        let j = residual_report_to_json(&r);
        assert!(!j.is_zero);
        assert!(!j.violations.is_empty());
        let _ = space;
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("contraction"));
    }
}
