//! The versioned structure-file format, the only I/O boundary.
//!
//! A structure file is a JSON object holding one algebra, coalgebra or
//! bialgebra: rational coefficients as `"p/q"` strings (integers may omit
//! the `/1`), matrices as row-major nested arrays, cubic tensors as
//! `mul[i][j][k]` / `comul[i][j][k]` nested arrays. Parsing accepts any key
//! order; writing is canonical (fixed key order, fixed layout, trailing
//! newline) so golden-file comparisons are byte-exact.

use crate::algebra::BiHomAlgebra;
use crate::bialgebra::BiHomBialgebra;
use crate::coalgebra::BiHomCoalgebra;
use crate::exact::{format_rational, parse_rational, Matrix, Rational, Tensor3};
use serde_json::Value;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("value error: {0}")]
    Value(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Algebra(BiHomAlgebra),
    Coalgebra(BiHomCoalgebra),
    Bialgebra(BiHomBialgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bialgebra(_) => "bialgebra",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Structure::Algebra(a) => a.dim(),
            Structure::Coalgebra(c) => c.dim(),
            Structure::Bialgebra(b) => b.dim(),
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Structure::Algebra(a) => a.label(),
            Structure::Coalgebra(c) => c.label(),
            Structure::Bialgebra(b) => b.algebra().label(),
        }
    }
}

fn get_usize(obj: &serde_json::Map<String, Value>, key: &str) -> Result<usize, FormatError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| FormatError::Schema(format!("missing or non-integer field {key:?}")))
}

fn parse_coeff(v: &Value, site: &str) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => {
            parse_rational(s).map_err(|e| FormatError::Value(format!("{site}: {e}")))
        }
        Value::Number(n) => {
            // integer literals are tolerated on input
            n.as_i64()
                .map(crate::exact::rint)
                .ok_or_else(|| FormatError::Value(format!("{site}: non-integer number")))
        }
        _ => Err(FormatError::Value(format!(
            "{site}: expected a rational string"
        ))),
    }
}

fn parse_vector(v: &Value, n: usize, site: &str) -> Result<Vec<Rational>, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError::Schema(format!("{site}: expected an array")))?;
    if arr.len() != n {
        return Err(FormatError::Schema(format!(
            "{site}: expected length {n}, got {}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| parse_coeff(x, &format!("{site}[{i}]")))
        .collect()
}

fn parse_matrix(v: &Value, n: usize, site: &str) -> Result<Matrix, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError::Schema(format!("{site}: expected an array")))?;
    if arr.len() != n {
        return Err(FormatError::Schema(format!(
            "{site}: expected {n} rows, got {}",
            arr.len()
        )));
    }
    let rows = arr
        .iter()
        .enumerate()
        .map(|(r, row)| parse_vector(row, n, &format!("{site}[{r}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| FormatError::Schema(format!("{site}: {e}")))
}

fn parse_tensor(v: &Value, n: usize, site: &str) -> Result<Tensor3, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError::Schema(format!("{site}: expected an array")))?;
    if arr.len() != n {
        return Err(FormatError::Schema(format!(
            "{site}: expected {n} slices, got {}",
            arr.len()
        )));
    }
    let mut t = Tensor3::zero(n);
    for (i, slice) in arr.iter().enumerate() {
        let rows = slice
            .as_array()
            .ok_or_else(|| FormatError::Schema(format!("{site}[{i}]: expected an array")))?;
        if rows.len() != n {
            return Err(FormatError::Schema(format!(
                "{site}[{i}]: expected {n} rows, got {}",
                rows.len()
            )));
        }
        for (j, row) in rows.iter().enumerate() {
            let fiber = parse_vector(row, n, &format!("{site}[{i}][{j}]"))?;
            t.set_fiber(i, j, &fiber);
        }
    }
    Ok(t)
}

/// Parses a structure file, accepting any key order.
pub fn parse_structure(text: &str) -> Result<Structure, FormatError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    parse_structure_value(&value)
}

pub fn parse_structure_value(value: &Value) -> Result<Structure, FormatError> {
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError::Schema("top level must be an object".into()))?;
    let version = get_usize(obj, "schema_version")?;
    if version as u64 != SCHEMA_VERSION {
        return Err(FormatError::Schema(format!(
            "unsupported schema_version {version}"
        )));
    }
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| FormatError::Schema("missing field \"kind\"".into()))?;
    let dim = get_usize(obj, "dim")?;
    let label = obj
        .get("label")
        .and_then(Value::as_str)
        .map(|s| s.to_string());

    let algebra_part = |obj: &serde_json::Map<String, Value>| -> Result<BiHomAlgebra, FormatError> {
        let mul = parse_tensor(
            obj.get("mul")
                .ok_or_else(|| FormatError::Schema("missing field \"mul\"".into()))?,
            dim,
            "mul",
        )?;
        let alpha = parse_matrix(
            obj.get("alpha")
                .ok_or_else(|| FormatError::Schema("missing field \"alpha\"".into()))?,
            dim,
            "alpha",
        )?;
        let beta = parse_matrix(
            obj.get("beta")
                .ok_or_else(|| FormatError::Schema("missing field \"beta\"".into()))?,
            dim,
            "beta",
        )?;
        let unit = obj
            .get("unit")
            .map(|u| parse_vector(u, dim, "unit"))
            .transpose()?;
        BiHomAlgebra::new(mul, alpha, beta, unit, label.clone())
            .map_err(|e| FormatError::Schema(e.to_string()))
    };
    let coalgebra_part =
        |obj: &serde_json::Map<String, Value>| -> Result<BiHomCoalgebra, FormatError> {
            let comul = parse_tensor(
                obj.get("comul")
                    .ok_or_else(|| FormatError::Schema("missing field \"comul\"".into()))?,
                dim,
                "comul",
            )?;
            let psi = parse_matrix(
                obj.get("psi")
                    .ok_or_else(|| FormatError::Schema("missing field \"psi\"".into()))?,
                dim,
                "psi",
            )?;
            let omega = parse_matrix(
                obj.get("omega")
                    .ok_or_else(|| FormatError::Schema("missing field \"omega\"".into()))?,
                dim,
                "omega",
            )?;
            let counit = obj
                .get("counit")
                .map(|e| parse_vector(e, dim, "counit"))
                .transpose()?;
            BiHomCoalgebra::new(comul, psi, omega, counit, label.clone())
                .map_err(|e| FormatError::Schema(e.to_string()))
        };

    match kind {
        "algebra" => Ok(Structure::Algebra(algebra_part(obj)?)),
        "coalgebra" => Ok(Structure::Coalgebra(coalgebra_part(obj)?)),
        "bialgebra" => {
            let alg = algebra_part(obj)?;
            let coa = coalgebra_part(obj)?;
            BiHomBialgebra::new(alg, coa)
                .map(Structure::Bialgebra)
                .map_err(|e| FormatError::Schema(e.to_string()))
        }
        other => Err(FormatError::Schema(format!("unknown kind {other:?}"))),
    }
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn vector_json(v: &[Rational]) -> String {
    let items: Vec<String> = v
        .iter()
        .map(|x| format!("\"{}\"", format_rational(x)))
        .collect();
    format!("[{}]", items.join(","))
}

fn matrix_json(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|r| vector_json(m.row(r))).collect();
    format!("[{}]", rows.join(","))
}

fn tensor_json(t: &Tensor3) -> String {
    let n = t.dim();
    let slices: Vec<String> = (0..n)
        .map(|i| {
            let rows: Vec<String> = (0..n).map(|j| vector_json(t.fiber(i, j))).collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    format!("[{}]", slices.join(","))
}

/// Canonical serialization: fixed key order (schema_version, kind, dim,
/// label, mul, alpha, beta, unit, comul, psi, omega, counit), absent
/// optionals omitted, one top-level key per line, trailing newline.
pub fn write_structure(s: &Structure) -> String {
    let mut fields: Vec<(&str, String)> = vec![
        ("schema_version", SCHEMA_VERSION.to_string()),
        ("kind", format!("\"{}\"", s.kind())),
        ("dim", s.dim().to_string()),
    ];
    if let Some(label) = s.label() {
        fields.push(("label", format!("\"{}\"", escape_json(label))));
    }
    let push_algebra = |fields: &mut Vec<(&str, String)>, a: &BiHomAlgebra| {
        fields.push(("mul", tensor_json(a.mul_tensor())));
        fields.push(("alpha", matrix_json(a.alpha())));
        fields.push(("beta", matrix_json(a.beta())));
        if let Some(u) = a.unit() {
            fields.push(("unit", vector_json(u)));
        }
    };
    let push_coalgebra = |fields: &mut Vec<(&str, String)>, c: &BiHomCoalgebra| {
        fields.push(("comul", tensor_json(c.comul_tensor())));
        fields.push(("psi", matrix_json(c.psi())));
        fields.push(("omega", matrix_json(c.omega())));
        if let Some(e) = c.counit() {
            fields.push(("counit", vector_json(e)));
        }
    };
    match s {
        Structure::Algebra(a) => push_algebra(&mut fields, a),
        Structure::Coalgebra(c) => push_coalgebra(&mut fields, c),
        Structure::Bialgebra(b) => {
            push_algebra(&mut fields, b.algebra());
            push_coalgebra(&mut fields, b.coalgebra());
        }
    }
    let body: Vec<String> = fields
        .into_iter()
        .map(|(k, v)| format!("  \"{k}\": {v}"))
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

// ------------------------------------------------------- polynomial format

/// Polynomial JSON: `{"variables": [...], "terms": [{"exps": [...],
/// "coeff": "p/q"}]}` with terms in canonical display order.
pub fn write_poly(p: &crate::exact::MultiPoly) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "variables".into(),
        Value::Array(p.vars().iter().map(|v| Value::String(v.clone())).collect()),
    );
    let terms: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| {
            let mut t = serde_json::Map::new();
            t.insert(
                "exps".into(),
                Value::Array(m.iter().map(|&e| Value::Number(e.into())).collect()),
            );
            t.insert("coeff".into(), Value::String(format_rational(c)));
            Value::Object(t)
        })
        .collect();
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn parse_poly(value: &Value) -> Result<crate::exact::MultiPoly, FormatError> {
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError::Schema("polynomial must be an object".into()))?;
    let vars: Vec<String> = obj
        .get("variables")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Schema("missing polynomial variables".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| FormatError::Schema("variable names must be strings".into()))
        })
        .collect::<Result<_, _>>()?;
    let vars = std::sync::Arc::new(vars);
    let mut poly = crate::exact::MultiPoly::zero(std::sync::Arc::clone(&vars));
    for (i, term) in obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Schema("missing polynomial terms".into()))?
        .iter()
        .enumerate()
    {
        let t = term
            .as_object()
            .ok_or_else(|| FormatError::Schema(format!("terms[{i}] must be an object")))?;
        let exps: Vec<u16> = t
            .get("exps")
            .and_then(Value::as_array)
            .ok_or_else(|| FormatError::Schema(format!("terms[{i}] missing exps")))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|x| u16::try_from(x).ok())
                    .ok_or_else(|| FormatError::Value(format!("terms[{i}]: bad exponent")))
            })
            .collect::<Result<_, _>>()?;
        if exps.len() != vars.len() {
            return Err(FormatError::Schema(format!(
                "terms[{i}]: exponent vector length {} but {} variables",
                exps.len(),
                vars.len()
            )));
        }
        let coeff = parse_coeff(
            t.get("coeff")
                .ok_or_else(|| FormatError::Schema(format!("terms[{i}] missing coeff")))?,
            &format!("terms[{i}].coeff"),
        )?;
        poly.add_term(exps, coeff);
    }
    Ok(poly)
}

/// Ideal JSON: `{"variables": [...], "order": "lex"|"degrevlex",
/// "generators": [poly...]}`.
pub fn write_ideal(ideal: &crate::polysys::Ideal) -> String {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "variables".into(),
        Value::Array(
            ideal
                .vars
                .iter()
                .map(|v| Value::String(v.clone()))
                .collect(),
        ),
    );
    obj.insert(
        "order".into(),
        Value::String(
            match ideal.order {
                crate::exact::MonomialOrder::Lex => "lex",
                crate::exact::MonomialOrder::DegRevLex => "degrevlex",
            }
            .into(),
        ),
    );
    obj.insert(
        "generators".into(),
        Value::Array(ideal.generators.iter().map(write_poly).collect()),
    );
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_ideal(text: &str) -> Result<crate::polysys::Ideal, FormatError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError::Schema("ideal must be an object".into()))?;
    let vars: Vec<String> = obj
        .get("variables")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Schema("missing ideal variables".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| FormatError::Schema("variable names must be strings".into()))
        })
        .collect::<Result<_, _>>()?;
    let order = match obj.get("order").and_then(Value::as_str) {
        Some("lex") => crate::exact::MonomialOrder::Lex,
        Some("degrevlex") | None => crate::exact::MonomialOrder::DegRevLex,
        Some(other) => {
            return Err(FormatError::Schema(format!(
                "unknown monomial order {other:?}"
            )))
        }
    };
    let shared = std::sync::Arc::new(vars.clone());
    let generators = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Schema("missing ideal generators".into()))?
        .iter()
        .map(|g| {
            let p = parse_poly(g)?;
            if p.vars() == vars.as_slice() {
                Ok(p)
            } else {
                // align onto the ideal's variable list
                Ok(crate::exact::MultiPoly::zero(std::sync::Arc::clone(&shared)).add(&p))
            }
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(crate::polysys::Ideal {
        generators,
        vars,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint, rone};

    fn sample_algebra() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(1, 1, 0, rat(1, 2));
        BiHomAlgebra::new(
            mul,
            Matrix::from_i64(&[&[1, 1], &[0, 1]]),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            Some("sample".into()),
        )
        .unwrap()
    }

    #[test]
    fn round_trip_is_identity_on_canonical_files() {
        let s = Structure::Algebra(sample_algebra());
        let text = write_structure(&s);
        let parsed = parse_structure(&text).unwrap();
        assert_eq!(parsed, s);
        assert_eq!(write_structure(&parsed), text);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn key_order_is_canonicalized() {
        // scrambled key order parses and re-emits canonically
        let scrambled = r#"{
            "beta": [["1","0"],["0","1"]],
            "dim": 2,
            "kind": "algebra",
            "alpha": [["1","1"],["0","1"]],
            "mul": [[["0","0"],["0","0"]],[["0","0"],["1/2","0"]]],
            "schema_version": 1,
            "unit": ["1","0"],
            "label": "sample"
        }"#;
        let parsed = parse_structure(scrambled).unwrap();
        assert_eq!(
            write_structure(&parsed),
            write_structure(&Structure::Algebra(sample_algebra()))
        );
    }

    #[test]
    fn errors_carry_locations() {
        assert!(matches!(
            parse_structure("{not json"),
            Err(FormatError::Json(_))
        ));
        let bad_kind = r#"{"schema_version":1,"kind":"ring","dim":1}"#;
        assert!(matches!(
            parse_structure(bad_kind),
            Err(FormatError::Schema(_))
        ));
        let bad_value = r#"{"schema_version":1,"kind":"algebra","dim":1,
            "mul":[[["x"]]],"alpha":[["1"]],"beta":[["1"]]}"#;
        match parse_structure(bad_value) {
            Err(FormatError::Value(msg)) => assert!(msg.contains("mul[0][0][0]")),
            other => panic!("expected a value error, got {other:?}"),
        }
        let wrong_version = r#"{"schema_version":9,"kind":"algebra","dim":0,
            "mul":[],"alpha":[],"beta":[]}"#;
        assert!(matches!(
            parse_structure(wrong_version),
            Err(FormatError::Schema(_))
        ));
    }

    #[test]
    fn poly_and_ideal_round_trip() {
        let vars = std::sync::Arc::new(vec!["x".to_string(), "y".to_string()]);
        let p = crate::exact::MultiPoly::from_terms(
            std::sync::Arc::clone(&vars),
            vec![(vec![2, 0], rone()), (vec![0, 1], rat(-1, 2))],
        );
        let back = parse_poly(&write_poly(&p)).unwrap();
        assert_eq!(back, p);
        let ideal = crate::polysys::Ideal {
            generators: vec![p],
            vars: vars.as_ref().clone(),
            order: crate::exact::MonomialOrder::Lex,
        };
        let text = write_ideal(&ideal);
        let parsed = parse_ideal(&text).unwrap();
        assert_eq!(parsed, ideal);
    }

    #[test]
    fn bialgebra_files_carry_both_layers() {
        let mut mul = Tensor3::zero(1);
        mul.set(0, 0, 0, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(1),
            Matrix::identity(1),
            Some(vec![rone()]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(1);
        comul.set(0, 0, 0, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::identity(1),
            Matrix::identity(1),
            Some(vec![rone()]),
            None,
        )
        .unwrap();
        let b = Structure::Bialgebra(BiHomBialgebra::new(alg, coa).unwrap());
        let text = write_structure(&b);
        assert!(text.contains("\"mul\"") && text.contains("\"comul\""));
        assert_eq!(parse_structure(&text).unwrap(), b);
    }
}
