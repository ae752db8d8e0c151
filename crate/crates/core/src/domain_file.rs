//! JSON domain descriptions.
//!
//! ```text
//! {"type": "ellipsoid",      "a": ["1", "2", "inf"]}
//! {"type": "polydisk",       "a": ["1", "3/2"]}
//! {"type": "cube",           "n": 2, "delta": "1"}
//! {"type": "cylinder_union", "n": 2, "delta": "9/10"}
//! {"type": "convex",         "generators": [["1", "0"], ["0", "2"]]}
//! {"type": "concave",        "sigma": [["1", "0"], ["0", "2"]]}
//! ```
//!
//! Scalars are strings `"p"`, `"p/q"` (or `"inf"` for ellipsoid axes) or
//! JSON integers. Fractional JSON numbers and decimal strings are rejected so
//! no value ever passes through binary floating point.

use serde_json::{Map, Value};
use thiserror::Error;

use crate::geometry::{ConcaveToricDomain, ConvexToricDomain, ToricDomain};
use crate::rational::{ExtendedRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainFileError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Semantic { path: String, message: String },
}

fn semantic(path: &str, message: impl Into<String>) -> DomainFileError {
    DomainFileError::Semantic {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses a domain description.
pub fn parse_domain(text: &str) -> Result<ToricDomain, DomainFileError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DomainFileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    domain_from_value(&value)
}

pub fn domain_from_value(value: &Value) -> Result<ToricDomain, DomainFileError> {
    let obj = value
        .as_object()
        .ok_or_else(|| semantic("$", "expected an object"))?;
    let kind = obj
        .get("type")
        .ok_or_else(|| semantic("type", "missing"))?
        .as_str()
        .ok_or_else(|| semantic("type", "expected a string"))?;
    let allowed: &[&str] = match kind {
        "ellipsoid" | "polydisk" => &["type", "a"],
        "cube" | "cylinder_union" => &["type", "n", "delta"],
        "convex" => &["type", "generators"],
        "concave" => &["type", "sigma"],
        other => return Err(semantic("type", format!("unknown domain type {other:?}"))),
    };
    if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(semantic(extra, format!("unexpected field for {kind}")));
    }
    match kind {
        "ellipsoid" => {
            let axes = list(obj, "a")?
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let path = format!("a[{i}]");
                    let x = extended(v, &path)?;
                    if let ExtendedRational::Finite(r) = &x {
                        if !r.is_positive() {
                            return Err(semantic(&path, format!("axis must be positive, got {r}")));
                        }
                    }
                    Ok(x)
                })
                .collect::<Result<Vec<_>, _>>()?;
            if axes.is_empty() {
                return Err(semantic("a", "at least one axis required"));
            }
            Ok(ToricDomain::Ellipsoid(axes))
        }
        "polydisk" => {
            let sides = list(obj, "a")?
                .iter()
                .enumerate()
                .map(|(i, v)| positive(v, &format!("a[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            if sides.is_empty() {
                return Err(semantic("a", "at least one factor required"));
            }
            Ok(ToricDomain::Polydisk(sides))
        }
        "cube" | "cylinder_union" => {
            let n = obj
                .get("n")
                .ok_or_else(|| semantic("n", "missing"))?
                .as_u64()
                .filter(|&n| n >= 1)
                .ok_or_else(|| semantic("n", "expected an integer >= 1"))?
                as usize;
            let delta = positive(
                obj.get("delta")
                    .ok_or_else(|| semantic("delta", "missing"))?,
                "delta",
            )?;
            Ok(if kind == "cube" {
                ToricDomain::Cube { n, delta }
            } else {
                ToricDomain::CylinderUnion { n, delta }
            })
        }
        "convex" => {
            let p = points(obj, "generators")?;
            ConvexToricDomain::new(p)
                .map(ToricDomain::Convex)
                .map_err(|e| semantic("generators", e.to_string()))
        }
        "concave" => {
            let p = points(obj, "sigma")?;
            ConcaveToricDomain::new(p)
                .map(ToricDomain::Concave)
                .map_err(|e| semantic("sigma", e.to_string()))
        }
        _ => unreachable!(),
    }
}

fn list<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>, DomainFileError> {
    obj.get(key)
        .ok_or_else(|| semantic(key, "missing"))?
        .as_array()
        .ok_or_else(|| semantic(key, "expected an array"))
}

fn rational(v: &Value, path: &str) -> Result<Rational, DomainFileError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| {
            semantic(
                path,
                format!("invalid rational {s:?} (use \"p\" or \"p/q\")"),
            )
        }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u))
            } else {
                Err(semantic(
                    path,
                    format!("decimal literal {n} not allowed; write it as a \"p/q\" string"),
                ))
            }
        }
        _ => Err(semantic(path, "expected a rational string or integer")),
    }
}

fn extended(v: &Value, path: &str) -> Result<ExtendedRational, DomainFileError> {
    if let Value::String(s) = v {
        if s.trim() == "inf" {
            return Ok(ExtendedRational::Infinity);
        }
    }
    rational(v, path).map(ExtendedRational::Finite)
}

fn positive(v: &Value, path: &str) -> Result<Rational, DomainFileError> {
    let r = rational(v, path)?;
    if !r.is_positive() {
        return Err(semantic(path, format!("must be positive, got {r}")));
    }
    Ok(r)
}

fn points(obj: &Map<String, Value>, key: &str) -> Result<Vec<Vec<Rational>>, DomainFileError> {
    let rows = list(obj, key)?;
    if rows.is_empty() {
        return Err(semantic(key, "at least one point required"));
    }
    let mut out = Vec::with_capacity(rows.len());
    let mut dim = None;
    for (i, row) in rows.iter().enumerate() {
        let path = format!("{key}[{i}]");
        let coords = row
            .as_array()
            .ok_or_else(|| semantic(&path, "expected an array of coordinates"))?;
        if coords.is_empty() {
            return Err(semantic(&path, "dimension must be at least 1"));
        }
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(semantic(
                    &path,
                    format!(
                        "dimension mismatch: expected {d} coordinates, got {}",
                        coords.len()
                    ),
                ))
            }
            _ => {}
        }
        let mut p = Vec::with_capacity(coords.len());
        for (c, x) in coords.iter().enumerate() {
            let cpath = format!("{path}[{c}]");
            let r = rational(x, &cpath)?;
            if r.is_negative() {
                return Err(semantic(&cpath, format!("negative coordinate {r}")));
            }
            p.push(r);
        }
        out.push(p);
    }
    Ok(out)
}

fn rat_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn points_json(ps: &[Vec<Rational>]) -> Value {
    Value::Array(
        ps.iter()
            .map(|p| Value::Array(p.iter().map(rat_json).collect()))
            .collect(),
    )
}

pub fn domain_to_value(d: &ToricDomain) -> Value {
    let mut obj = Map::new();
    obj.insert("type".into(), Value::String(d.kind().into()));
    match d {
        ToricDomain::Ellipsoid(a) => {
            obj.insert(
                "a".into(),
                Value::Array(a.iter().map(|x| Value::String(x.to_string())).collect()),
            );
        }
        ToricDomain::Polydisk(a) => {
            obj.insert("a".into(), Value::Array(a.iter().map(rat_json).collect()));
        }
        ToricDomain::Cube { n, delta } | ToricDomain::CylinderUnion { n, delta } => {
            obj.insert("n".into(), Value::from(*n as u64));
            obj.insert("delta".into(), rat_json(delta));
        }
        ToricDomain::Convex(c) => {
            obj.insert("generators".into(), points_json(c.generators()));
        }
        ToricDomain::Concave(c) => {
            obj.insert("sigma".into(), points_json(c.vertices()));
        }
    }
    Value::Object(obj)
}

/// Canonical text form; `parse_domain(&render_domain(d)) == d`.
pub fn render_domain(d: &ToricDomain) -> String {
    serde_json::to_string(&domain_to_value(d)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let e = parse_domain(r#"{"type":"ellipsoid","a":["1","2"]}"#).unwrap();
        assert_eq!(e, ToricDomain::finite_ellipsoid(&[q("1"), q("2")]).unwrap());

        let c = parse_domain(r#"{"type":"concave","sigma":[["1","0"],["0","2"]]}"#).unwrap();
        let expected =
            ConcaveToricDomain::new(vec![vec![q("1"), q("0")], vec![q("0"), q("2")]]).unwrap();
        assert_eq!(c, ToricDomain::Concave(expected));

        let z = parse_domain(r#"{"type":"ellipsoid","a":["1","inf"]}"#).unwrap();
        assert_eq!(
            z,
            ToricDomain::Ellipsoid(vec![
                ExtendedRational::Finite(q("1")),
                ExtendedRational::Infinity
            ])
        );
    }

    #[test]
    fn integers_accepted_decimals_rejected() {
        let d = parse_domain(r#"{"type":"cube","n":3,"delta":2}"#).unwrap();
        assert_eq!(d, ToricDomain::cube(3, q("2")).unwrap());
        let err = parse_domain(r#"{"type":"cube","n":3,"delta":1.5}"#).unwrap_err();
        assert!(
            matches!(&err, DomainFileError::Semantic { path, .. } if path == "delta"),
            "{err}"
        );
        let err = parse_domain(r#"{"type":"polydisk","a":["1","0.5"]}"#).unwrap_err();
        assert!(
            matches!(&err, DomainFileError::Semantic { path, .. } if path == "a[1]"),
            "{err}"
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_domain("{\n  \"type\": \"cube\",\n  \"n\": 2,\n  oops\n}").unwrap_err();
        match err {
            DomainFileError::Syntax { line, column, .. } => {
                assert_eq!(line, 4);
                assert!(column >= 3);
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn semantic_errors_carry_paths() {
        let cases = [
            (
                r#"{"type":"convex","generators":[["1","0"],["0","-2"]]}"#,
                "generators[1][1]",
            ),
            (
                r#"{"type":"concave","sigma":[["1","0"],["0"]]}"#,
                "sigma[1]",
            ),
            (r#"{"type":"ellipsoid","a":["1","0"]}"#, "a[1]"),
            (r#"{"type":"polydisk","a":[]}"#, "a"),
            (r#"{"type":"cylinder_union","n":0,"delta":"1"}"#, "n"),
            (r#"{"type":"cube","n":2,"delta":"-1"}"#, "delta"),
            (r#"{"type":"torus"}"#, "type"),
            (r#"{"type":"cube","n":2,"delta":"1","extra":1}"#, "extra"),
            (r#"{"a":["1"]}"#, "type"),
            (r#"[1,2]"#, "$"),
        ];
        for (text, want) in cases {
            match parse_domain(text) {
                Err(DomainFileError::Semantic { path, .. }) => assert_eq!(path, want, "{text}"),
                other => panic!("{text}: expected semantic error at {want}, got {other:?}"),
            }
        }
    }

    #[test]
    fn render_is_canonical() {
        let d = ToricDomain::Ellipsoid(vec![
            ExtendedRational::Finite(q("3/2")),
            ExtendedRational::Infinity,
        ]);
        assert_eq!(
            render_domain(&d),
            r#"{"type":"ellipsoid","a":["3/2","inf"]}"#
        );
        let d = ToricDomain::cylinder_union(2, q("9/10")).unwrap();
        assert_eq!(
            render_domain(&d),
            r#"{"type":"cylinder_union","n":2,"delta":"9/10"}"#
        );
    }
}
