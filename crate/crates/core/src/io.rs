//! JSON interchange: Hopf specs, labeled networks and scalars.
//!
//! Hopf spec files take one of three forms:
//! `{"type":"constants","basis":[..],"mult":..,"unit":..,"comult":..,"counit":..,"antipode":..}`,
//! `{"type":"group","table":[[..]],"basis":[..]?}`, or `{"type":"dual","of":"<path>"}`
//! with the path relative to the spec file.
//!
//! A coefficient is a rational (`3`, `"-1/2"`), a string `"a + b·δ"`, or a
//! record `{"rat":[p,q],"delta":[p,q]}`. A box label is a coefficient list, or
//! one of the names `"1"`, `"h"` or a basis element name.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::hopf::{Element, HopfAlgebra, HopfConstants, HopfError};
use crate::network::{LabeledNetwork, NetworkError, Pass, Shading};
use crate::scalars::{parse_rational, DeltaSign, Field, QuadraticScalar, ScalarError, ScalarRecord};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {reason}")]
    Read { path: PathBuf, reason: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid {what}: {detail}")]
    Format { what: &'static str, detail: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

fn format_err(what: &'static str, detail: impl Into<String>) -> IoError {
    IoError::Format { what, detail: detail.into() }
}

fn read_json(path: &Path) -> Result<Value, IoError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| IoError::Read { path: path.to_path_buf(), reason: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| IoError::Json(format!("{}: {e}", path.display())))
}

pub fn parse_json(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))
}

fn bigint(v: &Value) -> Result<BigInt, IoError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        Value::String(s) => s.trim().parse().map_err(|_| format_err("integer", s.clone())),
        other => Err(format_err("integer", other.to_string())),
    }
}

pub fn rational_from_json(v: &Value) -> Result<BigRational, IoError> {
    match v {
        Value::Number(_) => Ok(BigRational::from_integer(bigint(v)?)),
        Value::String(s) => Ok(parse_rational(s)?),
        other => Err(format_err("rational", other.to_string())),
    }
}

pub fn rational_to_json(r: &BigRational) -> Value {
    if r.is_integer() && r.numer().abs() < BigInt::from(1i64 << 53) {
        json!(r.numer().to_string().parse::<i64>().expect("small integer"))
    } else {
        json!(r.to_string())
    }
}

fn pair(v: &Value) -> Result<[BigInt; 2], IoError> {
    match v.as_array().map(Vec::as_slice) {
        Some([p, q]) => Ok([bigint(p)?, bigint(q)?]),
        _ => Err(format_err("ratio pair", v.to_string())),
    }
}

pub fn record_from_json(v: &Value) -> Result<ScalarRecord, IoError> {
    let field = |k: &str| v.get(k).ok_or_else(|| format_err("scalar record", format!("missing \"{k}\"")));
    Ok(ScalarRecord { rat: pair(field("rat")?)?, delta: pair(field("delta")?)? })
}

pub fn record_to_json(r: &ScalarRecord) -> Value {
    let p = |x: &[BigInt; 2]| json!([x[0].to_string(), x[1].to_string()]);
    json!({"rat": p(&r.rat), "delta": p(&r.delta)})
}

/// Rational and δ parts of a coefficient.
pub fn coefficient_parts(v: &Value) -> Result<(BigRational, BigRational), IoError> {
    match v {
        Value::Object(_) => {
            let rec = record_from_json(v)?;
            let q = |p: &[BigInt; 2]| -> Result<BigRational, IoError> {
                if !p[1].is_positive() {
                    return Err(format_err("scalar record", "denominator must be positive"));
                }
                Ok(BigRational::new(p[0].clone(), p[1].clone()))
            };
            Ok((q(&rec.rat)?, q(&rec.delta)?))
        }
        Value::String(s) if s.contains('δ') => {
            let (a, b) = s
                .split_once('+')
                .ok_or_else(|| format_err("scalar", format!("{s:?} is not of the form \"a + b·δ\"")))?;
            let b = b.trim().trim_end_matches('δ').trim_end_matches('·').trim_end_matches('*');
            Ok((parse_rational(a)?, parse_rational(b)?))
        }
        _ => Ok((rational_from_json(v)?, BigRational::zero())),
    }
}

/// A coefficient in the field of `h`. The symbol δ always denotes the
/// positive root √n, as in rendered scalars, whatever h's sign convention.
pub fn coefficient<F: Field>(v: &Value, h: &HopfAlgebra<F>) -> Result<F, IoError> {
    let (a, b) = coefficient_parts(v)?;
    if b.is_zero() {
        return Ok(F::from_rational(&a));
    }
    Ok(F::from_rational(&a) + F::from_rational(&b) * &F::delta(h.dim() as u64, DeltaSign::Plus)?)
}

pub fn scalar_from_json(v: &Value, n: u64) -> Result<QuadraticScalar, IoError> {
    let (a, b) = coefficient_parts(v)?;
    if b.is_zero() {
        return Ok(QuadraticScalar::rational(a));
    }
    Ok(QuadraticScalar::new(a, b, n)?)
}

pub fn scalar_to_json(x: &QuadraticScalar) -> Value {
    record_to_json(&x.to_record())
}

fn rational_vec(v: &Value, what: &'static str) -> Result<Vec<BigRational>, IoError> {
    v.as_array().ok_or_else(|| format_err(what, "expected an array"))?.iter().map(rational_from_json).collect()
}

fn rational_matrix(v: &Value, what: &'static str) -> Result<Vec<Vec<BigRational>>, IoError> {
    v.as_array().ok_or_else(|| format_err(what, "expected an array"))?.iter().map(|r| rational_vec(r, what)).collect()
}

fn rational_cube(v: &Value, what: &'static str) -> Result<Vec<Vec<Vec<BigRational>>>, IoError> {
    v.as_array()
        .ok_or_else(|| format_err(what, "expected an array"))?
        .iter()
        .map(|m| rational_matrix(m, what))
        .collect()
}

fn names(v: Option<&Value>) -> Result<Option<Vec<String>>, IoError> {
    v.map(|b| {
        b.as_array()
            .ok_or_else(|| format_err("basis", "expected an array of names"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| format_err("basis", s.to_string())))
            .collect()
    })
    .transpose()
}

/// Reads structure constants from a spec value; `base` resolves `"of"` paths.
pub fn hopf_constants_from_json(v: &Value, base: &Path) -> Result<HopfConstants, IoError> {
    let get = |k: &'static str| v.get(k).ok_or_else(|| format_err("hopf spec", format!("missing \"{k}\"")));
    match get("type")?.as_str() {
        Some("constants") => Ok(HopfConstants {
            basis: names(Some(get("basis")?))?.unwrap_or_default(),
            mult: rational_cube(get("mult")?, "mult")?,
            unit: rational_vec(get("unit")?, "unit")?,
            comult: rational_cube(get("comult")?, "comult")?,
            counit: rational_vec(get("counit")?, "counit")?,
            antipode: rational_matrix(get("antipode")?, "antipode")?,
        }),
        Some("group") => {
            let table = get("table")?
                .as_array()
                .ok_or_else(|| format_err("group table", "expected an array of rows"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| format_err("group table", "expected rows of indices"))?
                        .iter()
                        .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(|| format_err("group table", x.to_string())))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(HopfConstants::group_algebra(&table, names(v.get("basis"))?)?)
        }
        Some("dual") => {
            let of = get("of")?.as_str().ok_or_else(|| format_err("hopf spec", "\"of\" must be a path"))?;
            Ok(load_hopf_constants(&base.join(of))?.transposed())
        }
        _ => Err(format_err("hopf spec", "\"type\" must be constants, group or dual")),
    }
}

pub fn load_hopf_constants(path: &Path) -> Result<HopfConstants, IoError> {
    let v = read_json(path)?;
    hopf_constants_from_json(&v, path.parent().unwrap_or(Path::new(".")))
}

pub fn load_hopf<F: Field>(path: &Path, sign: DeltaSign) -> Result<HopfAlgebra<F>, IoError> {
    Ok(HopfAlgebra::from_constants(load_hopf_constants(path)?, sign)?)
}

pub fn hopf_constants_to_json(c: &HopfConstants) -> Value {
    let vec = |v: &[BigRational]| Value::Array(v.iter().map(rational_to_json).collect());
    let mat = |m: &[Vec<BigRational>]| Value::Array(m.iter().map(|r| vec(r)).collect());
    let cube = |t: &[Vec<Vec<BigRational>>]| Value::Array(t.iter().map(|m| mat(m)).collect());
    json!({
        "type": "constants",
        "basis": c.basis,
        "mult": cube(&c.mult),
        "unit": vec(&c.unit),
        "comult": cube(&c.comult),
        "counit": vec(&c.counit),
        "antipode": mat(&c.antipode),
    })
}

fn label<F: Field>(v: &Value, h: &HopfAlgebra<F>, id: &str) -> Result<Element<F>, IoError> {
    if let Some(name) = v.as_str() {
        return match name {
            "1" => Ok(h.one().clone()),
            "h" => Ok(h.dual_integral().clone()),
            _ => h
                .basis_names()
                .iter()
                .position(|b| b == name)
                .map(|i| h.basis(i))
                .ok_or_else(|| format_err("box label", format!("{id}: unknown basis name {name:?}"))),
        };
    }
    let coeffs = v.as_array().ok_or_else(|| format_err("box label", format!("{id}: expected a list or a name")))?;
    if coeffs.len() != h.dim() {
        return Err(NetworkError::LabelDimension { id: id.to_string(), expected: h.dim(), found: coeffs.len() }.into());
    }
    Ok(Element::new(coeffs.iter().map(|c| coefficient(c, h)).collect::<Result<_, _>>()?))
}

pub fn network_from_json<F: Field>(v: &Value, h: &HopfAlgebra<F>) -> Result<LabeledNetwork<F>, IoError> {
    let shading = match v.get("shading").map(|s| s.as_str()) {
        None | Some(Some("plus")) => Shading::Plus,
        Some(Some("minus")) => Shading::Minus,
        Some(_) => return Err(format_err("network", "\"shading\" must be \"plus\" or \"minus\"")),
    };
    let mut net = LabeledNetwork::empty().with_shading(shading);
    if let Some(boxes) = v.get("boxes") {
        let boxes = boxes.as_object().ok_or_else(|| format_err("network", "\"boxes\" must be an object"))?;
        for (id, l) in boxes {
            net.boxes.insert(id.clone(), label(l, h, id)?);
        }
    }
    let loops = v.get("loops").and_then(Value::as_array).ok_or_else(|| format_err("network", "missing \"loops\""))?;
    for lp in loops {
        let passes = lp.as_array().ok_or_else(|| format_err("network", "each loop must be an array"))?;
        let passes = passes
            .iter()
            .map(|p| serde_json::from_value::<Pass>(p.clone()).map_err(|e| format_err("pass", format!("{p}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        net.loops.push(passes);
    }
    net.validate()?;
    net.check_labels(h.dim())?;
    Ok(net)
}

pub fn load_network<F: Field>(path: &Path, h: &HopfAlgebra<F>) -> Result<LabeledNetwork<F>, IoError> {
    network_from_json(&read_json(path)?, h)
}

pub fn network_to_json<F: Field>(n: &LabeledNetwork<F>) -> Value {
    let boxes: Map<String, Value> = n
        .boxes
        .iter()
        .map(|(id, e)| (id.clone(), Value::Array(e.coeffs.iter().map(|c| json!(c.to_string())).collect())))
        .collect();
    let shading = match n.shading {
        Shading::Plus => "plus",
        Shading::Minus => "minus",
    };
    json!({"shading": shading, "boxes": boxes, "loops": n.loops})
}
