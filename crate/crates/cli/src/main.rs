//! `prevtrop`: JSON in, JSON out.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use prevtrop_core::exactla::Int;
use prevtrop_core::io::*;
use prevtrop_core::multiproj::{subset_label, Proj};
use prevtrop_core::sysfan::{Separation, SystemOfFans};
use prevtrop_core::tropembed::{
    kapranov_membership, nonneg_trop_point, refine_embedding, separation_witness, trop_point,
    ClassicalChartPoint, RefinedSystem, ValuedScalar,
};
use prevtrop_core::troppre::{Prevariety, TropPoint};
use prevtrop_core::Error;

#[derive(Parser)]
#[command(name = "prevtrop", version, about = "Tropical toric prevarieties in exact arithmetic")]
struct Cli {
    /// Worker threads for batches of points.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a system of fans, or that a grading has a simplicial Proj.
    Validate { file: PathBuf },
    /// Classes of Ω(S), their order and the strata dimensions.
    Omega { file: PathBuf },
    /// Separatedness with a witness, and support-fullness when separated.
    Separated { file: PathBuf },
    /// The system of fans of the multigraded Proj of a grading.
    Proj { grading: PathBuf },
    /// Tropicalize classical points or canonicalize chart values.
    Trop { point: PathBuf, system: PathBuf },
    /// Non-negative tropicalization.
    Nonneg {
        point: PathBuf,
        system: PathBuf,
        /// Also emit the image under the comparison map.
        #[arg(long)]
        compare: bool,
    },
    /// Kapranov membership of a tropical point in a tropical hypersurface.
    Kapranov {
        poly: PathBuf,
        point: PathBuf,
        system: PathBuf,
        /// Chart label, required for polynomials in Cox variables.
        #[arg(long)]
        chart: Option<String>,
    },
    /// Refine an embedding by a new variable x ↦ g̃.
    Refine {
        grading: PathBuf,
        /// Polynomial document for g̃.
        #[arg(long, required_unless_present = "separate")]
        gtilde: Option<PathBuf>,
        /// Exponent vector of the monomial h, as in "1,0".
        #[arg(long, required_unless_present = "separate")]
        h: Option<String>,
        /// Degree-zero chart function; builds g̃ and h that separate two points.
        #[arg(long, conflicts_with_all = ["gtilde", "h"])]
        separate: Option<PathBuf>,
        points: Vec<PathBuf>,
    },
    /// Product of two systems of fans.
    Product { first: PathBuf, second: PathBuf },
}

enum Failure {
    Malformed(String),
    Semantic(String),
    Report(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Malformed(m),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let jobs = cli.jobs.max(1);
    let out = match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Omega { file } => cmd_omega(&file),
        Command::Separated { file } => cmd_separated(&file),
        Command::Proj { grading } => cmd_proj(&grading),
        Command::Trop { point, system } => cmd_trop(&point, &system, jobs),
        Command::Nonneg { point, system, compare } => cmd_nonneg(&point, &system, compare, jobs),
        Command::Kapranov { poly, point, system, chart } => {
            cmd_kapranov(&poly, &point, &system, chart.as_deref())
        }
        Command::Refine { grading, gtilde, h, separate, points } => {
            cmd_refine(&grading, gtilde.as_deref(), h.as_deref(), separate.as_deref(), &points, jobs)
        }
        Command::Product { first, second } => cmd_product(&first, &second),
    };
    match out {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            ExitCode::SUCCESS
        }
        Err(Failure::Malformed(m)) => {
            eprintln!("prevtrop: malformed input: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Semantic(m)) => {
            eprintln!("prevtrop: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Report(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            ExitCode::from(2)
        }
    }
}

/// A system of fans, possibly coming from a grading.
struct Loaded {
    proj: Option<Proj>,
    prev: Prevariety,
}

fn load_system(path: &Path) -> Result<Loaded, Failure> {
    let v = read_json(path)?;
    match kind_of(&v)? {
        "grading" => {
            let proj = grading_from_json(&v)?.proj()?;
            let prev = Prevariety::new(proj.system.clone())?;
            Ok(Loaded { proj: Some(proj), prev })
        }
        "system_of_fans" => Ok(Loaded {
            proj: None,
            prev: Prevariety::new(system_from_json(&v)?)?,
        }),
        k => Err(Failure::Malformed(format!("expected a system_of_fans or grading, found {k}"))),
    }
}

fn labels(s: &SystemOfFans, members: &[usize]) -> Value {
    json!(members.iter().map(|&i| s.indices()[i].clone()).collect::<Vec<_>>())
}

fn report(command: &str, mut payload: Map<String, Value>) -> Value {
    payload.insert("command".into(), json!(command));
    document("report", Value::Object(payload))
}

fn cmd_validate(path: &Path) -> Outcome {
    let v = read_json(path)?;
    let mut m = Map::new();
    let problems: Vec<String> = match kind_of(&v)? {
        "system_of_fans" => system_from_json(&v)?.validate().iter().map(|x| x.to_string()).collect(),
        "grading" => {
            let g = grading_from_json(&v)?;
            match g.proj() {
                Ok(p) => {
                    m.insert("charts".into(), json!(p.charts.iter().map(|c| subset_label(c)).collect::<Vec<_>>()));
                    Vec::new()
                }
                Err(e @ (Error::EmptyProj | Error::NonSimplicial(_))) => vec![e.to_string()],
                Err(e) => return Err(e.into()),
            }
        }
        k => return Err(Failure::Malformed(format!("cannot validate a {k} document"))),
    };
    m.insert("ok".into(), json!(problems.is_empty()));
    m.insert("violations".into(), json!(problems));
    let out = report("validate", m);
    if problems.is_empty() {
        Ok(out)
    } else {
        for p in &problems {
            eprintln!("prevtrop: {p}");
        }
        Err(Failure::Report(out))
    }
}

fn cmd_omega(path: &Path) -> Outcome {
    let l = load_system(path)?;
    let s = l.prev.system();
    let poset = l.prev.poset();
    let classes: Vec<Value> = poset
        .classes()
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "cone": cone_to_json(&c.cone),
                "members": labels(s, &c.members),
            })
        })
        .collect();
    let strata: Vec<Value> = l
        .prev
        .strata()
        .iter()
        .map(|(c, d)| json!({"class": c, "dim": d}))
        .collect();
    let nonneg: Vec<Value> = l
        .prev
        .nonneg_strata()
        .iter()
        .map(|st| json!({"class": st.class, "face": cone_to_json(&st.face), "dim": st.dim}))
        .collect();
    let mut m = Map::new();
    m.insert("classes".into(), json!(classes));
    m.insert("order".into(), json!(poset.relation().iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()));
    m.insert("strata".into(), json!(strata));
    m.insert("nonneg_strata".into(), json!(nonneg));
    Ok(report("omega", m))
}

fn separation_report(s: &SystemOfFans) -> Result<Map<String, Value>, Failure> {
    let mut m = Map::new();
    match s.is_separated() {
        Separation::Separated => {
            m.insert("separated".into(), json!(true));
            m.insert("support_is_full".into(), json!(s.support_is_full()?));
        }
        Separation::NotSeparated(w) => {
            let poset = s.omega_poset();
            let class = |id: usize| {
                let c = poset.class(id);
                json!({"id": id, "cone": cone_to_json(&c.cone), "members": labels(s, &c.members)})
            };
            m.insert("separated".into(), json!(false));
            m.insert(
                "witness".into(),
                json!({
                    "first": class(w.first),
                    "second": class(w.second),
                    "intersection": cone_to_json(&w.intersection),
                }),
            );
        }
    }
    Ok(m)
}

fn cmd_separated(path: &Path) -> Outcome {
    let l = load_system(path)?;
    Ok(report("separated", separation_report(l.prev.system())?))
}

fn cmd_proj(path: &Path) -> Outcome {
    let g = grading_from_json(&read_json(path)?)?;
    let p = g.proj()?;
    let mut doc = system_to_json(&p.system);
    let mut meta = separation_report(&p.system)?;
    meta.insert("charts".into(), json!(p.charts.iter().map(|c| subset_label(c)).collect::<Vec<_>>()));
    meta.insert("relevant".into(), json!(p.relevant.iter().map(|c| subset_label(c)).collect::<Vec<_>>()));
    meta.insert("kernel".into(), matrix_to_json(&p.kernel));
    doc["metadata"] = Value::Object(meta);
    Ok(doc)
}

fn cmd_product(a: &Path, b: &Path) -> Outcome {
    let x = load_system(a)?;
    let y = load_system(b)?;
    Ok(system_to_json(&x.prev.system().product(y.prev.system())))
}

/// Chart class named by a label or given as a class id.
fn resolve_chart(prev: &Prevariety, v: &Value) -> Result<usize, Failure> {
    match v {
        Value::Number(n) => {
            let id = n.as_u64().ok_or_else(|| Failure::Malformed("chart ids are non-negative".into()))? as usize;
            if id >= prev.poset().len() {
                return Err(Failure::Semantic(format!("no class {id}")));
            }
            Ok(id)
        }
        Value::String(l) => {
            let i = chart_index(prev, l)?;
            let max = prev.system().fan(i, i).maximal_cones();
            if max.len() != 1 {
                return Err(Failure::Semantic(format!("chart {l} is not affine")));
            }
            Ok(prev.poset().class_of(&max[0], i).unwrap())
        }
        _ => Err(Failure::Malformed("chart must be a label or a class id".into())),
    }
}

fn chart_index(prev: &Prevariety, label: &str) -> Result<usize, Failure> {
    prev.system()
        .index_of(label)
        .ok_or_else(|| Failure::Semantic(format!("no chart labelled {label:?}")))
}

fn scalars(v: &Value) -> Result<Vec<ValuedScalar>, Failure> {
    v.as_array()
        .ok_or_else(|| Failure::Malformed("coordinates must be a list".into()))?
        .iter()
        .map(|x| scalar_from_json(x).map_err(Failure::from))
        .collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| Failure::Malformed(format!("missing field {key:?}")))
}

fn classical(l: &Loaded, v: &Value) -> Result<ClassicalChartPoint, Failure> {
    let chart_v = field(v, "chart")?;
    if let Some(x) = v.get("cox") {
        let proj = l
            .proj
            .as_ref()
            .ok_or_else(|| Failure::Malformed("Cox coordinates need a grading".into()))?;
        let label = chart_v
            .as_str()
            .ok_or_else(|| Failure::Malformed("Cox points name their chart by label".into()))?;
        let i = chart_index(&l.prev, label)?;
        return Ok(ClassicalChartPoint::from_cox(proj, &l.prev, i, &scalars(x)?)?);
    }
    let chart = resolve_chart(&l.prev, chart_v)?;
    if let Some(x) = v.get("torus") {
        Ok(ClassicalChartPoint::from_torus(&l.prev, chart, &scalars(x)?)?)
    } else {
        Ok(ClassicalChartPoint::new(&l.prev, chart, scalars(field(v, "values")?)?)?)
    }
}

/// Reads a `trop_point`, in canonical form or as chart values, or
/// tropicalizes a `classical_point`.
fn tropical(l: &Loaded, v: &Value) -> Result<TropPoint, Failure> {
    match kind_of(v)? {
        "classical_point" => Ok(trop_point(&l.prev, &classical(l, v)?)?),
        "trop_point" if v.get("values").is_some() => {
            let chart = resolve_chart(&l.prev, field(v, "chart")?)?;
            let vals = chart_values_from_json(&v["values"], l.prev.semigroup(chart).len())?;
            Ok(l.prev.point_from_chart_values(chart, &vals)?)
        }
        "trop_point" => {
            let p = trop_point_from_json(v)?;
            l.prev.check_point(&p)?;
            Ok(p)
        }
        k => Err(Failure::Malformed(format!("expected a point, found {k}"))),
    }
}

/// Items of a file holding one document or a list of them.
fn batch(path: &Path) -> Result<(Vec<Value>, bool), Failure> {
    match read_json(path)? {
        Value::Array(a) => Ok((a, true)),
        v => Ok((vec![v], false)),
    }
}

fn run_batch<F>(items: &[Value], jobs: usize, f: F) -> Vec<Result<Value, Failure>>
where
    F: Fn(&Value) -> Result<Value, Failure> + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}

fn collect(results: Vec<Result<Value, Failure>>, many: bool) -> Outcome {
    let out = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    if many {
        Ok(Value::Array(out))
    } else {
        Ok(out.into_iter().next().unwrap())
    }
}

fn cmd_trop(point: &Path, system: &Path, jobs: usize) -> Outcome {
    let l = load_system(system)?;
    let (items, many) = batch(point)?;
    collect(run_batch(&items, jobs, |v| Ok(trop_point_to_json(&tropical(&l, v)?))), many)
}

fn cmd_nonneg(point: &Path, system: &Path, compare: bool, jobs: usize) -> Outcome {
    let l = load_system(system)?;
    let (items, many) = batch(point)?;
    let one = |v: &Value| -> Result<Value, Failure> {
        let q = match kind_of(v)? {
            "classical_point" => nonneg_trop_point(&l.prev, &classical(&l, v)?)?,
            "trop_point" | "nonneg_point" if v.get("values").is_some() => {
                let chart = resolve_chart(&l.prev, field(v, "chart")?)?;
                let vals = chart_values_from_json(&v["values"], l.prev.semigroup(chart).len())?;
                l.prev.nonneg_from_chart_values(chart, &vals)?
            }
            "nonneg_point" => {
                let q = nonneg_point_from_json(v)?;
                if q.class >= l.prev.poset().len() {
                    return Err(Failure::Semantic(format!("no class {}", q.class)));
                }
                l.prev.nonneg_point(q.class, &q.face, q.coords)?
            }
            k => return Err(Failure::Malformed(format!("expected a point, found {k}"))),
        };
        let mut doc = nonneg_point_to_json(&q);
        if compare {
            doc["comparison"] = trop_point_to_json(&l.prev.compare_to_trop(&q));
        }
        Ok(doc)
    };
    collect(run_batch(&items, jobs, one), many)
}

fn cmd_kapranov(poly: &Path, point: &Path, system: &Path, chart: Option<&str>) -> Outcome {
    let l = load_system(system)?;
    let w = tropical(&l, &read_json(point)?)?;
    let mut pv = read_json(poly)?;
    let f = if pv.get("chart").is_some() {
        let id = resolve_chart(&l.prev, &pv["chart"])?;
        pv["chart"] = json!(id);
        chart_polynomial_from_json(&pv)?
    } else {
        let proj = l
            .proj
            .as_ref()
            .ok_or_else(|| Failure::Malformed("a Cox polynomial needs a grading".into()))?;
        let label = chart.ok_or_else(|| Failure::Malformed("--chart is required for Cox polynomials".into()))?;
        let i = chart_index(&l.prev, label)?;
        polynomial_from_json(&pv)?.to_chart(proj, &l.prev, i)?
    };
    let k = kapranov_membership(&l.prev, &f, &w)?;
    let mut m = Map::new();
    m.insert("member".into(), json!(k.member));
    m.insert("achieving_terms".into(), json!(k.achieving));
    m.insert("minimum".into(), ext_to_json(&k.minimum));
    m.insert("point".into(), trop_point_to_json(&w));
    Ok(report("kapranov", m))
}

fn cox_point(proj: &Proj, v: &Value) -> Result<(usize, Vec<ValuedScalar>), Failure> {
    if kind_of(v)? != "classical_point" {
        return Err(Failure::Malformed("refine takes classical points in Cox coordinates".into()));
    }
    let label = field(v, "chart")?
        .as_str()
        .ok_or_else(|| Failure::Malformed("Cox points name their chart by label".into()))?;
    let i = proj
        .system
        .index_of(label)
        .ok_or_else(|| Failure::Semantic(format!("no chart labelled {label:?}")))?;
    Ok((i, scalars(field(v, "cox")?)?))
}

fn parse_exponents(s: &str) -> Result<Vec<Int>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<Int>().map_err(|_| Failure::Malformed(format!("bad exponent {x:?}"))))
        .collect()
}

fn cmd_refine(
    grading: &Path,
    gtilde: Option<&Path>,
    h: Option<&str>,
    separate: Option<&Path>,
    points: &[PathBuf],
    jobs: usize,
) -> Outcome {
    let g = grading_from_json(&read_json(grading)?)?;
    let proj = g.proj()?;
    let docs = points.iter().map(|p| read_json(p)).collect::<Result<Vec<_>, _>>()?;
    let pts = docs.iter().map(|v| cox_point(&proj, v)).collect::<Result<Vec<_>, _>>()?;
    let mut m = Map::new();
    let system = if let Some(f) = separate {
        let f = polynomial_from_json(&read_json(f)?)?;
        let [(i, p), (j, q)] = pts.as_slice() else {
            return Err(Failure::Malformed("--separate takes exactly two points".into()));
        };
        if i != j {
            return Err(Failure::Semantic("the two points must lie on the same chart".into()));
        }
        let w = separation_witness(&g, *i, p, q, &f)?;
        m.insert("common".into(), trop_point_to_json(&w.common));
        m.insert("separated".into(), json!(w.refined_p != w.refined_q));
        w.system
    } else {
        let gt = polynomial_from_json(&read_json(gtilde.unwrap())?)?;
        let h = parse_exponents(h.unwrap())?;
        RefinedSystem::build(refine_embedding(&g, &gt, &h)?)?
    };
    m.insert("refined_grading".into(), grading_to_json(&system.refinement.new));
    m.insert("gtilde".into(), polynomial_to_json(&system.refinement.gtilde));
    m.insert("h".into(), ivec_to_json(&system.refinement.h));
    m.insert("system".into(), system_to_json(&system.new.system));
    let indexed: Vec<Value> = (0..pts.len()).map(|k| json!(k)).collect();
    let rows = run_batch(&indexed, jobs, |k| {
        let (i, x) = &pts[k.as_u64().unwrap() as usize];
        let direct = system.direct_trop(*i, x)?;
        let refined = system.refined_trop(*i, x)?;
        let projected = system.project(*i, &refined)?;
        Ok(json!({
            "chart": proj.system.indices()[*i],
            "direct": trop_point_to_json(&direct),
            "refined": trop_point_to_json(&refined),
            "projected": trop_point_to_json(&projected),
            "projection_agrees": projected == direct,
        }))
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let ok = rows.iter().all(|r| r["projection_agrees"] == json!(true));
    m.insert("points".into(), json!(rows));
    m.insert("projection_check".into(), json!(ok));
    let out = report("refine", m);
    if ok {
        Ok(out)
    } else {
        eprintln!("prevtrop: projection of a refined point differs from the direct tropicalization");
        Err(Failure::Report(out))
    }
}
