//! JSON encodings of polynomials, matroids, graphs, module elements and
//! verification reports.
//!
//! A polynomial with no negative powers is a coefficient array starting at
//! degree 0; a Laurent polynomial is `{"low": k, "coeffs": [...]}`.
//! Coefficients outside the `i64` range are written as decimal strings.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hecke::{HElement, NamedCheck};
use crate::kl::{DeletionReport, Sides};
use crate::matroid::Matroid;
use crate::poly::LaurentPoly;
use crate::scalar::Coefficient;

pub fn coeff_to_json<C: Coefficient>(c: &C) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

fn coeff_from_json<C: Coefficient>(v: &Value) -> Result<C> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(Error::Parse(format!(
                "coefficient must be an integer, got {other}"
            )))
        }
    };
    C::from_str_radix(&text, 10)
        .map_err(|_| Error::Parse(format!("coefficient {text} does not fit")))
}

pub fn poly_to_json<C: Coefficient>(p: &LaurentPoly<C>) -> Value {
    match p.to_dense() {
        Some(dense) => Value::Array(dense.iter().map(coeff_to_json).collect()),
        None => json!({
            "low": p.low(),
            "coeffs": p.coeffs().iter().map(coeff_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn poly_from_json<C: Coefficient>(v: &Value) -> Result<LaurentPoly<C>> {
    let parse_all = |items: &Vec<Value>| {
        items
            .iter()
            .map(coeff_from_json)
            .collect::<Result<Vec<C>>>()
    };
    match v {
        Value::Array(items) => Ok(LaurentPoly::new(0, parse_all(items)?)),
        Value::Object(map) => {
            let low = map.get("low").and_then(Value::as_i64).ok_or_else(|| {
                Error::Parse("Laurent polynomial needs an integer \"low\"".into())
            })?;
            match map.get("coeffs") {
                Some(Value::Array(items)) => Ok(LaurentPoly::new(low, parse_all(items)?)),
                _ => Err(Error::Parse(
                    "Laurent polynomial needs a \"coeffs\" array".into(),
                )),
            }
        }
        other => Err(Error::Parse(format!("not a polynomial: {other}"))),
    }
}

/// `{"n": int, "flats": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidSpec {
    pub n: usize,
    pub flats: Vec<Vec<usize>>,
}

/// `{"vertices": int, "edges": [[int, int], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads and validates a simple matroid. `cap` bounds the ground set size.
pub fn matroid_from_json(text: &str, cap: usize) -> Result<Matroid> {
    let spec: MatroidSpec = parse(text)?;
    if spec.n > cap {
        return Err(Error::SizeCap { size: spec.n, cap });
    }
    Matroid::from_flats(spec.n, &spec.flats)
}

pub fn matroid_to_spec(m: &Matroid) -> MatroidSpec {
    MatroidSpec {
        n: m.ground_size(),
        flats: m.flat_lists(),
    }
}

/// Reads a graph. `cap` bounds the edge count.
pub fn graph_from_json(text: &str, cap: usize) -> Result<Graph> {
    let spec: GraphSpec = parse(text)?;
    if spec.edges.len() > cap {
        return Err(Error::SizeCap {
            size: spec.edges.len(),
            cap,
        });
    }
    Graph::new(
        spec.vertices,
        spec.edges.iter().map(|&[a, b]| (a, b)).collect(),
    )
}

pub fn graph_to_spec(g: &Graph) -> GraphSpec {
    GraphSpec {
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
    }
}

fn flat_labels(m: &Matroid, i: usize) -> Vec<usize> {
    let mut v: Vec<usize> = m.flat(i).iter().map(|e| m.label(e)).collect();
    v.sort_unstable();
    v
}

/// Non-zero coordinates as `[{"flat": [labels], "poly": ...}, ...]`.
pub fn helement_to_json<C: Coefficient>(alpha: &HElement<C>) -> Value {
    let m = alpha.matroid();
    Value::Array(
        alpha
            .support()
            .map(|(i, p)| json!({ "flat": flat_labels(m, i), "poly": poly_to_json(p) }))
            .collect(),
    )
}

fn sides_json<C: Coefficient>(
    kl: &Option<Sides<C>>,
    z: &Option<Sides<C>>,
    pick: fn(&Sides<C>) -> &LaurentPoly<C>,
) -> Value {
    match (kl, z) {
        (Some(k), Some(z)) => json!({ "kl": poly_to_json(pick(k)), "z": poly_to_json(pick(z)) }),
        _ => Value::Null,
    }
}

/// One row per element: `{"element", "status", "lhs", "rhs"}`, where each
/// side holds the `kl` and `z` polynomials (null for skipped coloops).
pub fn deletion_report_to_json<C: Coefficient>(report: &DeletionReport<C>) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "element": c.label,
                    "status": c.status.as_str(),
                    "lhs": sides_json(&c.kl, &c.z, |s| &s.lhs),
                    "rhs": sides_json(&c.kl, &c.z, |s| &s.rhs),
                })
            })
            .collect(),
    )
}

pub fn checks_to_json(checks: &[NamedCheck]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeModule;
    use crate::kl::verify_deletion;
    use crate::matroid::uniform_matroid;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn polynomial_round_trip() {
        let cases = [
            P::from_ints(0, &[1, 9, 5]),
            P::from_ints(-1, &[-1, 0, 1]),
            P::zero(),
            P::from_ints(2, &[3]),
        ];
        for p in cases {
            assert_eq!(poly_from_json::<BigInt>(&poly_to_json(&p)).unwrap(), p);
        }
        assert_eq!(
            poly_to_json(&P::from_ints(0, &[1, 9, 5])).to_string(),
            "[1,9,5]"
        );
        assert_eq!(
            poly_to_json(&P::t_pow(-1)).to_string(),
            r#"{"coeffs":[1],"low":-1}"#
        );
    }

    #[test]
    fn big_coefficients_are_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = P::constant(big.clone());
        let v = poly_to_json(&p);
        assert_eq!(v, json!(["123456789012345678901234567890"]));
        assert_eq!(poly_from_json::<BigInt>(&v).unwrap(), p);
        assert!(poly_from_json::<i64>(&v).is_err());
        assert!(poly_from_json::<i64>(&json!([1.5])).is_err());
    }

    #[test]
    fn matroid_round_trip() {
        let m = uniform_matroid(1, 3).unwrap();
        let text = serde_json::to_string(&matroid_to_spec(&m)).unwrap();
        assert_eq!(matroid_from_json(&text, 24).unwrap(), m);
        assert!(matches!(
            matroid_from_json(&text, 3),
            Err(Error::SizeCap { size: 4, cap: 3 })
        ));
        assert!(matches!(
            matroid_from_json("{\"n\": 2}", 24),
            Err(Error::Parse(_))
        ));
        let bad = r#"{"n": 3, "flats": [[], [0], [1], [2], [0, 1]]}"#;
        assert!(matches!(
            matroid_from_json(bad, 24),
            Err(Error::Axiom { .. })
        ));
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let text = serde_json::to_string(&graph_to_spec(&g)).unwrap();
        assert_eq!(text, r#"{"vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#);
        assert_eq!(graph_from_json(&text, 24).unwrap(), g);
        assert!(matches!(
            graph_from_json(r#"{"vertices":2,"edges":[[0,5]]}"#, 24),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn reports_and_elements() {
        let m = uniform_matroid(1, 2).unwrap();
        let report = verify_deletion::<BigInt>(&m).unwrap();
        let v = deletion_report_to_json(&report);
        assert_eq!(v[0]["status"], "pass");
        assert_eq!(v[0]["lhs"]["kl"], json!([1]));
        assert_eq!(v[0]["lhs"]["z"], json!([1, 3, 1]));
        let hm = HeckeModule::<BigInt>::new(&m);
        let top = hm.zeta(m.top_index());
        let v = helement_to_json(&top);
        assert_eq!(v.as_array().unwrap().len(), m.num_flats());
        assert_eq!(v[0], json!({"flat": [], "poly": [0, 0, 1]}));
    }
}
