//! JSON documents.
//!
//! Every document is an object with `"schema": 1` and a `"kind"` tag.
//! Integers are JSON numbers, or decimal strings when they do not fit in 64
//! bits; rationals are `"p/q"` strings and `+∞` is `"inf"`.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactla::{parse_rat, FgAbelianGroup, Int, IntMatrix, IntVec, Rat};
use crate::multiproj::Grading;
use crate::sysfan::{Fan, SysFanMorphism, SystemOfFans};
use crate::tropembed::{Polynomial, QPoly, ValuedScalar};
use crate::troppre::{ExtReal, NonNegTropPoint, TropPoint, ValuatedChartPolynomial};

pub const SCHEMA: u64 = 1;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Wraps a payload object into a versioned document.
pub fn document(kind: &str, payload: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!(kind));
    if let Value::Object(p) = payload {
        m.extend(p);
    }
    Value::Object(m)
}

/// The kind tag of a document, after checking the schema version.
pub fn kind_of(v: &Value) -> Result<&str> {
    let obj = v.as_object().ok_or_else(|| err("document must be an object"))?;
    match obj.get("schema").and_then(Value::as_u64) {
        Some(SCHEMA) => {}
        Some(other) => return Err(err(format!("unsupported schema {other}"))),
        None => return Err(err("missing schema version")),
    }
    obj.get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| err("missing kind"))
}

fn expect_kind(v: &Value, kind: &str) -> Result<()> {
    let k = kind_of(v)?;
    if k != kind {
        return Err(err(format!("expected a {kind} document, found {k}")));
    }
    Ok(())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(format!("field {key:?} must be a non-negative integer")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("{what} must be an array")))
}

pub fn int_to_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .or_else(|| n.as_u64().map(Int::from))
            .ok_or_else(|| err(format!("{n} is not an integer"))),
        Value::String(s) => s.trim().parse().map_err(|_| err(format!("bad integer {s:?}"))),
        _ => Err(err("expected an integer")),
    }
}

pub fn ivec_to_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn ivec_from_json(v: &Value, width: Option<usize>) -> Result<IntVec> {
    let out: IntVec = array(v, "vector")?
        .iter()
        .map(int_from_json)
        .collect::<Result<_>>()?;
    if let Some(w) = width {
        if out.len() != w {
            return Err(err(format!("vector of length {} where {w} was expected", out.len())));
        }
    }
    Ok(out)
}

pub fn rat_to_json(r: &Rat) -> Value {
    json!(r.to_string())
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(_) => int_from_json(v).map(Rat::from_integer),
        _ => Err(err("expected a rational \"p/q\"")),
    }
}

pub fn ext_to_json(x: &ExtReal) -> Value {
    json!(x.to_string())
}

pub fn ext_from_json(v: &Value) -> Result<ExtReal> {
    match v {
        Value::String(s) => ExtReal::parse(s),
        _ => rat_from_json(v).map(ExtReal::Finite),
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ivec_to_json(r)).collect())
}

pub fn matrix_from_json(v: &Value, cols: Option<usize>) -> Result<IntMatrix> {
    let rows: Vec<IntVec> = array(v, "matrix")?
        .iter()
        .map(|r| ivec_from_json(r, cols))
        .collect::<Result<_>>()?;
    let width = match (cols, rows.first()) {
        (Some(c), _) => c,
        (None, Some(r)) => r.len(),
        (None, None) => 0,
    };
    if rows.iter().any(|r| r.len() != width) {
        return Err(err("ragged matrix"));
    }
    Ok(IntMatrix::from_rows(width, &rows))
}

/// `{"rays": [...], "ambient_rank": n}` plus `"lineality"` when nonzero.
pub fn cone_to_json(c: &Cone) -> Value {
    let mut m = Map::new();
    m.insert("rays".into(), Value::Array(c.rays().iter().map(|r| ivec_to_json(r)).collect()));
    if !c.lineality().is_empty() {
        m.insert(
            "lineality".into(),
            Value::Array(c.lineality().iter().map(|r| ivec_to_json(r)).collect()),
        );
    }
    m.insert("ambient_rank".into(), json!(c.ambient_rank()));
    Value::Object(m)
}

/// Accepts the object form or a bare list of rays. A stored `"facets"` list
/// must agree with the recomputed H-representation.
pub fn cone_from_json(v: &Value, ambient: Option<usize>) -> Result<Cone> {
    let (rays_v, lin_v, facets_v, amb) = match v {
        Value::Array(_) => (v, None, None, ambient),
        Value::Object(_) => {
            let amb = match v.get("ambient_rank") {
                Some(a) => Some(a.as_u64().ok_or_else(|| err("bad ambient_rank"))? as usize),
                None => ambient,
            };
            if let (Some(a), Some(b)) = (amb, ambient) {
                if a != b {
                    return Err(err(format!("cone of ambient rank {a} in a rank {b} context")));
                }
            }
            (field(v, "rays")?, v.get("lineality"), v.get("facets"), amb)
        }
        _ => return Err(err("a cone must be an object or a list of rays")),
    };
    let mut gens: Vec<IntVec> = array(rays_v, "rays")?
        .iter()
        .map(|r| ivec_from_json(r, amb))
        .collect::<Result<_>>()?;
    if let Some(l) = lin_v {
        for r in array(l, "lineality")? {
            let r = ivec_from_json(r, amb)?;
            gens.push(r.iter().map(|x| -x).collect());
            gens.push(r);
        }
    }
    let n = match amb.or_else(|| gens.first().map(|g| g.len())) {
        Some(n) => n,
        None => return Err(err("cannot infer the ambient rank of an empty cone")),
    };
    if gens.iter().any(|g| g.len() != n) {
        return Err(err("rays of different lengths"));
    }
    let cone = Cone::from_generators(n, &gens)?;
    if let Some(f) = facets_v {
        let mut stored: Vec<IntVec> = array(f, "facets")?
            .iter()
            .map(|r| ivec_from_json(r, Some(n)))
            .collect::<Result<_>>()?;
        stored.sort();
        let mut actual = cone.facets().to_vec();
        actual.sort();
        if stored != actual {
            return Err(Error::Invalid("stored facets disagree with the rays".into()));
        }
    }
    Ok(cone)
}

fn fan_to_json(f: &Fan) -> Value {
    Value::Array(
        f.maximal_cones()
            .iter()
            .map(|c| {
                if c.lineality().is_empty() {
                    Value::Array(c.rays().iter().map(|r| ivec_to_json(r)).collect())
                } else {
                    cone_to_json(c)
                }
            })
            .collect(),
    )
}

pub fn system_to_json(s: &SystemOfFans) -> Value {
    let n = s.len();
    let mut fans = Map::new();
    for i in 0..n {
        for j in 0..n {
            if j < i && s.fan(i, j) == s.fan(j, i) {
                continue;
            }
            let key = format!("{},{}", s.indices()[i], s.indices()[j]);
            fans.insert(key, fan_to_json(s.fan(i, j)));
        }
    }
    document(
        "system_of_fans",
        json!({
            "ambient_rank": s.ambient_rank(),
            "indices": s.indices(),
            "fans": Value::Object(fans),
        }),
    )
}

pub fn system_from_json(v: &Value) -> Result<SystemOfFans> {
    expect_kind(v, "system_of_fans")?;
    let n = usize_field(v, "ambient_rank")?;
    let indices: Vec<String> = array(field(v, "indices")?, "indices")?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .or_else(|| x.as_u64().map(|k| k.to_string()))
                .ok_or_else(|| err("index labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let pos = |l: &str| {
        indices
            .iter()
            .position(|x| x == l.trim())
            .ok_or_else(|| err(format!("unknown index {l:?}")))
    };
    let mut entries: BTreeMap<(usize, usize), Vec<Cone>> = BTreeMap::new();
    let fans = field(v, "fans")?
        .as_object()
        .ok_or_else(|| err("fans must be an object keyed by \"i,j\""))?;
    for (key, cones) in fans {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| err(format!("bad fan key {key:?}")))?;
        let ij = (pos(a)?, pos(b)?);
        let list: Vec<Cone> = array(cones, "fan")?
            .iter()
            .map(|c| cone_from_json(c, Some(n)))
            .collect::<Result<_>>()?;
        entries.insert(ij, list);
    }
    SystemOfFans::from_cone_lists(n, indices, &entries)
}

pub fn grading_to_json(g: &Grading) -> Value {
    document(
        "grading",
        json!({
            "n": g.n(),
            "free_rank": g.group().free_rank(),
            "torsion": Value::Array(g.group().torsion().iter().map(int_to_json).collect()),
            "degrees": Value::Array(g.degrees().iter().map(|d| ivec_to_json(d)).collect()),
        }),
    )
}

pub fn grading_from_json(v: &Value) -> Result<Grading> {
    expect_kind(v, "grading")?;
    let n = usize_field(v, "n")?;
    let r = usize_field(v, "free_rank")?;
    let torsion: Vec<Int> = match v.get("torsion") {
        Some(t) => array(t, "torsion")?.iter().map(int_from_json).collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let group = FgAbelianGroup::new(r, torsion)?;
    let raw = array(field(v, "degrees")?, "degrees")?;
    if raw.len() != n {
        return Err(err(format!("{} degrees for {n} variables", raw.len())));
    }
    let degrees = raw
        .iter()
        .map(|d| ivec_from_json(d, Some(group.width())))
        .collect::<Result<_>>()?;
    Grading::new(group, degrees)
}

pub fn trop_point_to_json(p: &TropPoint) -> Value {
    document(
        "trop_point",
        json!({
            "class": p.class,
            "coords": Value::Array(p.coords.iter().map(rat_to_json).collect()),
        }),
    )
}

pub fn trop_point_from_json(v: &Value) -> Result<TropPoint> {
    expect_kind(v, "trop_point")?;
    Ok(TropPoint {
        class: usize_field(v, "class")?,
        coords: array(field(v, "coords")?, "coords")?
            .iter()
            .map(rat_from_json)
            .collect::<Result<_>>()?,
    })
}

pub fn nonneg_point_to_json(p: &NonNegTropPoint) -> Value {
    document(
        "nonneg_point",
        json!({
            "class": p.class,
            "face": cone_to_json(&p.face),
            "coords": Value::Array(p.coords.iter().map(rat_to_json).collect()),
        }),
    )
}

pub fn nonneg_point_from_json(v: &Value) -> Result<NonNegTropPoint> {
    expect_kind(v, "nonneg_point")?;
    Ok(NonNegTropPoint {
        class: usize_field(v, "class")?,
        face: cone_from_json(field(v, "face")?, None)?,
        coords: array(field(v, "coords")?, "coords")?
            .iter()
            .map(rat_from_json)
            .collect::<Result<_>>()?,
    })
}

fn qpoly_to_json(p: &QPoly) -> Value {
    Value::Array(
        ValuedScalar::terms(p)
            .iter()
            .map(|(c, k)| json!([c.to_string(), k]))
            .collect(),
    )
}

fn qpoly_from_json(v: &Value) -> Result<QPoly> {
    let mut coeffs: Vec<Rat> = Vec::new();
    for term in array(v, "t-polynomial")? {
        let pair = array(term, "term")?;
        if pair.len() != 2 {
            return Err(err("a t-polynomial term is [coefficient, exponent]"));
        }
        let c = rat_from_json(&pair[0])?;
        let k = pair[1]
            .as_u64()
            .ok_or_else(|| err("t-exponents must be non-negative integers"))? as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rat::zero());
        }
        coeffs[k] += c;
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// A constant `"p/q"`, or `{"num": [[c, e], ...], "den": [...]}`.
pub fn scalar_to_json(s: &ValuedScalar) -> Value {
    let one = QPoly::constant(Rat::from_integer(1.into()));
    if s.den() == &one && s.num().degree().unwrap_or(0) == 0 {
        let c = s.num().coeffs().first().cloned().unwrap_or_else(Rat::zero);
        return json!(c.to_string());
    }
    let mut m = Map::new();
    m.insert("num".into(), qpoly_to_json(s.num()));
    if s.den() != &one {
        m.insert("den".into(), qpoly_to_json(s.den()));
    }
    Value::Object(m)
}

pub fn scalar_from_json(v: &Value) -> Result<ValuedScalar> {
    match v {
        Value::String(_) | Value::Number(_) => rat_from_json(v).map(ValuedScalar::from_rat),
        Value::Object(_) => {
            let num = qpoly_from_json(field(v, "num")?)?;
            let den = match v.get("den") {
                Some(d) => qpoly_from_json(d)?,
                None => QPoly::constant(Rat::from_integer(1.into())),
            };
            ValuedScalar::new(num, den).ok_or_else(|| err("zero denominator"))
        }
        _ => Err(err("bad scalar")),
    }
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    document(
        "polynomial",
        json!({
            "n": p.n(),
            "terms": Value::Array(
                p.terms()
                    .iter()
                    .map(|(e, c)| json!({"exp": ivec_to_json(e), "coeff": scalar_to_json(c)}))
                    .collect()
            ),
        }),
    )
}

pub fn polynomial_from_json(v: &Value) -> Result<Polynomial> {
    expect_kind(v, "polynomial")?;
    let n = usize_field(v, "n")?;
    let terms = array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| Ok((ivec_from_json(field(t, "exp")?, Some(n))?, scalar_from_json(field(t, "coeff")?)?)))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::new(n, terms)
}

pub fn chart_polynomial_to_json(p: &ValuatedChartPolynomial) -> Value {
    document(
        "polynomial",
        json!({
            "chart": p.chart,
            "terms": Value::Array(
                p.terms
                    .iter()
                    .map(|(e, a)| json!({"exp": ivec_to_json(e), "val": ext_to_json(a)}))
                    .collect()
            ),
        }),
    )
}

/// Terms carry either `"val"` directly or a `"coeff"` whose valuation is used.
pub fn chart_polynomial_from_json(v: &Value) -> Result<ValuatedChartPolynomial> {
    expect_kind(v, "polynomial")?;
    let chart = usize_field(v, "chart")?;
    let terms = array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| {
            let e = ivec_from_json(field(t, "exp")?, None)?;
            let a = match (t.get("val"), t.get("coeff")) {
                (Some(x), _) => ext_from_json(x)?,
                (None, Some(c)) => scalar_from_json(c)?.val(),
                (None, None) => return Err(err("a term needs \"val\" or \"coeff\"")),
            };
            Ok((e, a))
        })
        .collect::<Result<Vec<_>>>()?;
    ValuatedChartPolynomial::new(chart, terms)
}

pub fn morphism_to_json(m: &SysFanMorphism) -> Value {
    document(
        "morphism",
        json!({
            "lattice_map": matrix_to_json(&m.lattice_map),
            "class_map": m.class_map,
        }),
    )
}

pub fn morphism_from_json(v: &Value) -> Result<SysFanMorphism> {
    expect_kind(v, "morphism")?;
    let lattice_map = matrix_from_json(field(v, "lattice_map")?, None)?;
    let class_map = array(field(v, "class_map")?, "class_map")?
        .iter()
        .map(|x| x.as_u64().map(|k| k as usize).ok_or_else(|| err("class ids are integers")))
        .collect::<Result<_>>()?;
    Ok(SysFanMorphism {
        lattice_map,
        class_map,
    })
}

/// Values keyed by generator index, as in `{"0": "1/2", "1": "inf"}`, or
/// given as a list.
pub fn chart_values_from_json(v: &Value, len: usize) -> Result<Vec<ExtReal>> {
    match v {
        Value::Array(a) => {
            if a.len() != len {
                return Err(err(format!("{} values for {len} generators", a.len())));
            }
            a.iter().map(ext_from_json).collect()
        }
        Value::Object(m) => {
            let mut out: Vec<Option<ExtReal>> = vec![None; len];
            for (k, x) in m {
                let i: usize = k.parse().map_err(|_| err(format!("bad generator index {k:?}")))?;
                if i >= len {
                    return Err(err(format!("generator index {i} out of range")));
                }
                out[i] = Some(ext_from_json(x)?);
            }
            out.into_iter()
                .enumerate()
                .map(|(i, x)| x.ok_or_else(|| err(format!("missing value for generator {i}"))))
                .collect()
        }
        _ => Err(err("values must be an object or a list")),
    }
}

/// Reads a whole file as JSON.
pub fn read_json(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| err(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ivec, rat};
    use crate::sysfan::fixtures::*;

    #[test]
    fn systems_round_trip() {
        for s in [line_with_two_origins(), projective_line(), p1_times_p1(), SystemOfFans::point()] {
            let v = system_to_json(&s);
            assert_eq!(system_from_json(&v).unwrap(), s);
            let text = serde_json::to_string(&v).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(system_from_json(&back).unwrap(), s);
        }
    }

    #[test]
    fn mirrored_entries() {
        let v = json!({
            "schema": 1, "kind": "system_of_fans", "ambient_rank": 1,
            "indices": ["1", "2"],
            "fans": {"1,1": [[[1]]], "2,2": [[[1]]], "1,2": [[]]}
        });
        assert_eq!(system_from_json(&v).unwrap(), line_with_two_origins());
    }

    #[test]
    fn big_integers_survive() {
        let big: Int = "123456789012345678901234567890".parse().unwrap();
        let v = int_to_json(&big);
        assert!(v.is_string());
        assert_eq!(int_from_json(&v).unwrap(), big);
        assert_eq!(int_from_json(&json!(-7)).unwrap(), Int::from(-7));
    }

    #[test]
    fn points_and_scalars() {
        let p = TropPoint { class: 2, coords: vec![rat(1, 2), rat(-3, 1)] };
        assert_eq!(trop_point_from_json(&trop_point_to_json(&p)).unwrap(), p);
        let s = &ValuedScalar::from_int(-1) - &ValuedScalar::t();
        let s2 = s.checked_div(&(&ValuedScalar::from_int(2) + &ValuedScalar::t())).unwrap();
        for x in [s, s2, ValuedScalar::from_rat(rat(3, 4)), ValuedScalar::zero()] {
            assert_eq!(scalar_from_json(&scalar_to_json(&x)).unwrap(), x);
        }
        assert_eq!(
            scalar_from_json(&json!({"num": [["1", 1]], "den": [["1", 2]]})).unwrap().val(),
            ExtReal::int(-1)
        );
    }

    #[test]
    fn gradings_and_polynomials() {
        let g = crate::multiproj::fixtures::grading_4();
        assert_eq!(grading_from_json(&grading_to_json(&g)).unwrap(), g);
        let f = Polynomial::from_i64(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(polynomial_from_json(&polynomial_to_json(&f)).unwrap(), f);
        let cp = ValuatedChartPolynomial::new(3, vec![(ivec(&[1, 0]), ExtReal::int(0)), (ivec(&[0, 1]), ExtReal::Infinity)]).unwrap();
        assert_eq!(chart_polynomial_from_json(&chart_polynomial_to_json(&cp)).unwrap(), cp);
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(kind_of(&json!({"kind": "grading"})), Err(Error::Parse(_))));
        assert!(matches!(kind_of(&json!({"schema": 2, "kind": "grading"})), Err(Error::Parse(_))));
        assert!(matches!(
            system_from_json(&json!({"schema": 1, "kind": "grading"})),
            Err(Error::Parse(_))
        ));
        let bad_facets = json!({"rays": [[1, 0], [0, 1]], "facets": [[1, 1]], "ambient_rank": 2});
        assert!(matches!(cone_from_json(&bad_facets, None), Err(Error::Invalid(_))));
    }

    #[test]
    fn chart_values() {
        let v = json!({"1": "inf", "0": "1/2"});
        assert_eq!(
            chart_values_from_json(&v, 2).unwrap(),
            vec![ExtReal::Finite(rat(1, 2)), ExtReal::Infinity]
        );
        assert!(chart_values_from_json(&json!({"0": "1"}), 2).is_err());
    }
}
