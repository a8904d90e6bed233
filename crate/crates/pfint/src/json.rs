//! JSON interchange formats used by the CLI.
//!
//! Matrices: `{"scalar": "rational" | "complex", "rows": [[...], ...]}`.
//! Rational entries are strings `"p/q"` or plain integers; complex entries
//! are two-element `[re, im]` arrays (a bare number is taken as real).
//!
//! Measure spaces: `{"points": [...], "weights": [...]}` with the same
//! entry encodings; the scalar kind is inferred from the entries.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::measure::MeasureSpace;
use crate::scalar::Scalar;

/// A matrix over either supported scalar kind.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<BigRational>),
    Complex(Matrix<Complex64>),
}

/// A measure space over either supported scalar kind.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySpace {
    Rational(MeasureSpace<BigRational>),
    Complex(MeasureSpace<Complex64>),
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else {
                Err(Error::Parse(format!(
                    "rational entries must be integers or \"p/q\" strings, got {n}"
                )))
            }
        }
        Value::String(s) => {
            let mut parts = s.splitn(2, '/');
            let num = parts.next().unwrap_or("").trim();
            let num: BigInt = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let den: BigInt = match parts.next() {
                None => BigInt::from(1),
                Some(d) => d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?,
            };
            if den == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::Parse(format!("unsupported rational entry {other}"))),
    }
}

fn parse_complex(v: &Value) -> Result<Complex64> {
    match v {
        Value::Number(n) => {
            let re = n
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("bad real value {n}")))?;
            Ok(Complex64::new(re, 0.0))
        }
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0]
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("bad real part {}", pair[0])))?;
            let im = pair[1]
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("bad imaginary part {}", pair[1])))?;
            Ok(Complex64::new(re, im))
        }
        other => Err(Error::Parse(format!(
            "complex entries must be numbers or [re, im] pairs, got {other}"
        ))),
    }
}

fn rational_to_value(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Ok(i) = i64::try_from(q.numer().clone()) {
            return json!(i);
        }
    }
    json!(q.to_string())
}

fn complex_to_value(c: &Complex64) -> Value {
    json!([c.re, c.im])
}

fn parse_rows<S: Scalar>(
    rows: &[Value],
    parse: impl Fn(&Value) -> Result<S>,
) -> Result<Matrix<S>> {
    let nrows = rows.len();
    let ncols = rows
        .first()
        .and_then(|r| r.as_array())
        .map(|r| r.len())
        .unwrap_or(0);
    let mut data = Vec::with_capacity(nrows * ncols);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("row {i} is not an array")))?;
        if row.len() != ncols {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {ncols}",
                row.len()
            )));
        }
        for v in row {
            data.push(parse(v)?);
        }
    }
    Matrix::new(nrows, ncols, data)
}

/// Parses a matrix document.
pub fn matrix_from_json(v: &Value) -> Result<AnyMatrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("matrix document must be an object".into()))?;
    let kind = obj
        .get("scalar")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing \"scalar\": \"rational\" | \"complex\"".into()))?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"rows\" array".into()))?;
    match kind {
        "rational" => Ok(AnyMatrix::Rational(parse_rows(rows, parse_rational)?)),
        "complex" => Ok(AnyMatrix::Complex(parse_rows(rows, parse_complex)?)),
        other => Err(Error::Parse(format!(
            "unknown scalar kind {other:?}, expected \"rational\" or \"complex\""
        ))),
    }
}

/// Parses a matrix document from source text.
pub fn matrix_from_str(s: &str) -> Result<AnyMatrix> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    matrix_from_json(&v)
}

/// Serializes a matrix document.
pub fn matrix_to_json(m: &AnyMatrix) -> Value {
    fn rows<S: Scalar>(m: &Matrix<S>, enc: impl Fn(&S) -> Value) -> Value {
        Value::Array(
            (0..m.rows())
                .map(|i| Value::Array(m.row(i).iter().map(&enc).collect()))
                .collect(),
        )
    }
    match m {
        AnyMatrix::Rational(m) => json!({"scalar": "rational", "rows": rows(m, rational_to_value)}),
        AnyMatrix::Complex(m) => json!({"scalar": "complex", "rows": rows(m, complex_to_value)}),
    }
}

/// Parses a measure-space document, inferring the scalar kind: any
/// `[re, im]` pair or non-integer number makes the space complex.
pub fn space_from_json(v: &Value) -> Result<AnySpace> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("measure document must be an object".into()))?;
    let points = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"points\" array".into()))?;
    let weights = obj
        .get("weights")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"weights\" array".into()))?;
    let looks_complex = points.iter().chain(weights.iter()).any(|e| {
        e.is_array() || e.as_f64().map(|x| x.fract() != 0.0).unwrap_or(false)
    });
    if looks_complex {
        let p: Result<Vec<_>> = points.iter().map(parse_complex).collect();
        let w: Result<Vec<_>> = weights.iter().map(parse_complex).collect();
        Ok(AnySpace::Complex(MeasureSpace::new(p?, w?)?))
    } else {
        let p: Result<Vec<_>> = points.iter().map(parse_rational).collect();
        let w: Result<Vec<_>> = weights.iter().map(parse_rational).collect();
        Ok(AnySpace::Rational(MeasureSpace::new(p?, w?)?))
    }
}

/// Parses a measure-space document from source text.
pub fn space_from_str(s: &str) -> Result<AnySpace> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    space_from_json(&v)
}

/// Serializes a measure-space document.
pub fn space_to_json(s: &AnySpace) -> Value {
    match s {
        AnySpace::Rational(sp) => json!({
            "points": sp.points().iter().map(rational_to_value).collect::<Vec<_>>(),
            "weights": sp.weights().iter().map(rational_to_value).collect::<Vec<_>>(),
        }),
        AnySpace::Complex(sp) => json!({
            "points": sp.points().iter().map(complex_to_value).collect::<Vec<_>>(),
            "weights": sp.weights().iter().map(complex_to_value).collect::<Vec<_>>(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn rational_matrix_round_trip() {
        let doc = r#"{"scalar": "rational", "rows": [[0, "3/2"], ["-3/2", 0]]}"#;
        let m = matrix_from_str(doc).unwrap();
        match &m {
            AnyMatrix::Rational(q) => {
                assert_eq!(q.get(0, 1), &rat(3, 2));
                assert_eq!(q.get(1, 0), &rat(-3, 2));
            }
            _ => panic!("expected rational"),
        }
        let back = matrix_to_json(&m);
        let reparsed = matrix_from_json(&back).unwrap();
        assert_eq!(m, reparsed);
    }

    #[test]
    fn complex_matrix_round_trip() {
        let doc = r#"{"scalar": "complex", "rows": [[[0,0], [1.5,-2.0]], [[-1.5,2.0], 0]]}"#;
        let m = matrix_from_str(doc).unwrap();
        match &m {
            AnyMatrix::Complex(c) => {
                assert_eq!(c.get(0, 1), &Complex64::new(1.5, -2.0));
            }
            _ => panic!("expected complex"),
        }
        let back = matrix_to_json(&m);
        assert_eq!(matrix_from_json(&back).unwrap(), m);
    }

    #[test]
    fn parse_failures_are_informative() {
        assert!(matrix_from_str("[]").is_err());
        assert!(matrix_from_str(r#"{"scalar": "octonion", "rows": []}"#).is_err());
        assert!(matrix_from_str(r#"{"scalar": "rational", "rows": [[1], [2, 3]]}"#).is_err());
        assert!(matrix_from_str(r#"{"scalar": "rational", "rows": [["1/0"]]}"#).is_err());
        assert!(matrix_from_str(r#"{"scalar": "rational", "rows": [[1.25]]}"#).is_err());
    }

    #[test]
    fn space_kind_inference() {
        let rational = space_from_str(r#"{"points": [0, 1, 2], "weights": ["1/2", 1, 2]}"#).unwrap();
        match &rational {
            AnySpace::Rational(sp) => {
                assert_eq!(sp.len(), 3);
                assert_eq!(sp.weight(0), &rat(1, 2));
            }
            _ => panic!("expected rational"),
        }
        let complex =
            space_from_str(r#"{"points": [[0.5, 1.0]], "weights": [0.25]}"#).unwrap();
        match &complex {
            AnySpace::Complex(sp) => {
                assert_eq!(sp.point(0), &Complex64::new(0.5, 1.0));
            }
            _ => panic!("expected complex"),
        }
        let back = space_to_json(&rational);
        assert_eq!(space_from_json(&back).unwrap(), rational);
    }

    #[test]
    fn big_rationals_serialize_as_strings() {
        let huge = rat_int(i64::MAX) * rat_int(4) + rat(1, 3);
        let m = AnyMatrix::Rational(Matrix::new(1, 1, vec![huge.clone()]).unwrap());
        let v = matrix_to_json(&m);
        let reparsed = matrix_from_json(&v).unwrap();
        match reparsed {
            AnyMatrix::Rational(q) => assert_eq!(q.get(0, 0), &huge),
            _ => panic!(),
        }
    }

    #[test]
    fn length_mismatch_in_space_is_rejected() {
        assert!(space_from_str(r#"{"points": [0, 1], "weights": [1]}"#).is_err());
    }
}
