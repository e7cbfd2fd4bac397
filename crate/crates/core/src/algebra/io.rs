//! JSON encoding of algebras.

use serde_json::{json, Value};

use super::BiAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, FieldSpec};

pub fn field_spec_to_json(spec: FieldSpec) -> Value {
    match spec {
        FieldSpec::Rationals => json!("Q"),
        FieldSpec::PrimeField(p) => json!({ "p": p }),
    }
}

pub fn field_spec_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) => FieldSpec::parse(s),
        Value::Object(o) => {
            let p = o
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("field object needs integer `p`".into()))?;
            FieldSpec::parse(&p.to_string())
        }
        other => Err(Error::Parse(format!("bad field {other}"))),
    }
}

fn tensor_to_json<F: Field>(a: &BiAlgebra<F>, bracket: bool) -> Value {
    let n = a.dim();
    let f = a.field();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| {
                            Value::Array(
                                (0..n)
                                    .map(|k| {
                                        let c = if bracket { a.bracket_const(i, j, k) } else { a.dot_const(i, j, k) };
                                        f.to_json(&c)
                                    })
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn algebra_to_json<F: Field>(a: &BiAlgebra<F>) -> Value {
    json!({
        "field": field_spec_to_json(a.field().spec()),
        "dim": a.dim(),
        "basis": a.basis_names(),
        "dot": tensor_to_json(a, false),
        "bracket": tensor_to_json(a, true),
    })
}

fn tensor_from_json<F: Field>(field: &F, v: Option<&Value>, n: usize, what: &str) -> Result<Vec<Vec<Vec<F::Elem>>>> {
    let Some(v) = v else {
        return Ok(vec![vec![vec![field.zero(); n]; n]; n]);
    };
    let shape_err = || Error::ShapeMismatch(format!("`{what}` must have shape {n}x{n}x{n}"));
    let outer = v.as_array().ok_or_else(shape_err)?;
    if outer.len() != n {
        return Err(shape_err());
    }
    outer
        .iter()
        .map(|row| {
            let row = row.as_array().filter(|r| r.len() == n).ok_or_else(shape_err)?;
            row.iter()
                .map(|cell| {
                    let cell = cell.as_array().filter(|c| c.len() == n).ok_or_else(shape_err)?;
                    cell.iter().map(|x| field.from_json(x)).collect()
                })
                .collect()
        })
        .collect()
}

/// Reads an algebra over `field`; the file's field must match.
pub fn algebra_from_json<F: Field>(field: &F, v: &Value) -> Result<BiAlgebra<F>> {
    let spec = field_spec_from_json(v.get("field").ok_or_else(|| Error::Parse("missing `field`".into()))?)?;
    if spec != field.spec() {
        return Err(Error::FieldMismatch(format!("file is over {spec}, expected {}", field.spec())));
    }
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer `dim`".into()))? as usize;
    let names: Vec<String> = match v.get("basis") {
        Some(Value::Array(b)) => b
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::Parse("basis names must be strings".into())))
            .collect::<Result<_>>()?,
        Some(_) => return Err(Error::Parse("`basis` must be an array".into())),
        None => (1..=dim).map(|i| format!("e{i}")).collect(),
    };
    if names.len() != dim {
        return Err(Error::ShapeMismatch(format!("{} basis names for dim {dim}", names.len())));
    }
    let dot = tensor_from_json(field, v.get("dot"), dim, "dot")?;
    let bracket = tensor_from_json(field, v.get("bracket"), dim, "bracket")?;
    BiAlgebra::from_constants(field, names, &dot, &bracket)
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn roundtrip_q_and_fp() {
        let q = Rationals;
        let mut a = upper_triangular(&q);
        a.set_bracket(0, 2, vec![(1, q.parse_elem("-3/2").unwrap())]);
        let j = algebra_to_json(&a);
        assert_eq!(j["bracket"][0][2][1], json!("-3/2"));
        assert_eq!(algebra_from_json(&q, &j).unwrap(), a);
        let f = PrimeField::new(3).unwrap();
        let b = leibniz_xx(&f);
        let j = algebra_to_json(&b);
        assert_eq!(j["field"], json!({"p": 3}));
        assert_eq!(algebra_from_json(&f, &j).unwrap(), b);
        assert!(matches!(algebra_from_json(&q, &j), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn shape_errors() {
        let q = Rationals;
        let bad = json!({"field": "Q", "dim": 2, "dot": [[[0]]]});
        assert!(matches!(algebra_from_json(&q, &bad), Err(Error::ShapeMismatch(_))));
    }
}
