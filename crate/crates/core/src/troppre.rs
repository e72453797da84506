//! Tropical and non-negative tropical toric prevarieties.
//!
//! A point of `X^trop` is stored as a class `[τ, i] ∈ Ω(S)` together with
//! coordinates in `N/span(τ)`, taken with respect to the canonical basis of
//! `τ⊥ ∩ M` (the coordinate `c_j` is the value of the point on the `j`-th
//! basis vector). Non-negative points additionally remember the smallest
//! class whose closed cone contains them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_traits::{Signed, Zero};

use crate::cone::{fmt_vec, AffineSemigroup, Cone};
use crate::error::{Error, Result};
use crate::exactla::{dot, parse_rat, rat_from_int, solve_rational, Int, IntMatrix, IntVec, Rat};
use crate::sysfan::{OmegaPoset, SysFanMorphism, SystemOfFans};

/// An element of `ℝ ∪ {∞}` with rational finite part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtReal {
    Finite(Rat),
    Infinity,
}

impl ExtReal {
    pub fn int(v: i64) -> Self {
        ExtReal::Finite(Rat::from_integer(v.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(r) => Some(r),
            ExtReal::Infinity => None,
        }
    }

    /// Parses `"p/q"`, `"p"` or `"inf"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(ExtReal::Infinity),
            other => parse_rat(other).map(ExtReal::Finite),
        }
    }
}

impl Add for &ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: &ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinity,
        }
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        &self + &rhs
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(r) => write!(f, "{r}"),
            ExtReal::Infinity => write!(f, "inf"),
        }
    }
}

impl From<Rat> for ExtReal {
    fn from(r: Rat) -> Self {
        ExtReal::Finite(r)
    }
}

/// A point of `X^trop`: a stratum class and coordinates in `N/span(τ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropPoint {
    pub class: usize,
    pub coords: Vec<Rat>,
}

/// A point of `X^{trop,≥0}` in the stratum `relint(ρ)/τ` of the class `[ρ, i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonNegTropPoint {
    /// Smallest class `[ρ, i]` whose closed cone contains the point.
    pub class: usize,
    /// Face `τ ⪯ ρ` on whose dual face the point is finite.
    pub face: Cone,
    /// Coordinates in `N/span(τ)`, in the basis of `τ⊥ ∩ M`.
    pub coords: Vec<Rat>,
}

/// `Σ a_s χ^s` on a chart, with coefficients recorded by valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuatedChartPolynomial {
    pub chart: usize,
    pub terms: Vec<(IntVec, ExtReal)>,
}

impl ValuatedChartPolynomial {
    pub fn new(chart: usize, terms: Vec<(IntVec, ExtReal)>) -> Result<Self> {
        let mut seen: Vec<&IntVec> = terms.iter().map(|(s, _)| s).collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("duplicate exponent".into()));
        }
        Ok(ValuatedChartPolynomial { chart, terms })
    }
}

/// A stratum `relint(ρ)/τ` of `X^{trop,≥0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonNegStratum {
    pub class: usize,
    pub face: Cone,
    pub dim: usize,
}

#[derive(Clone, Debug)]
struct Chart {
    semigroup: AffineSemigroup,
    faces: Vec<Cone>,
}

/// A validated system of fans together with the per-class data needed to
/// work with its tropicalizations.
#[derive(Clone, Debug)]
pub struct Prevariety {
    system: SystemOfFans,
    poset: OmegaPoset,
    charts: Vec<Chart>,
}

impl Prevariety {
    pub fn new(system: SystemOfFans) -> Result<Self> {
        if let Some(v) = system.validate().first() {
            return Err(Error::Invalid(v.to_string()));
        }
        let poset = system.omega_poset();
        let charts = poset
            .classes()
            .iter()
            .map(|c| Chart {
                semigroup: c.cone.hilbert_basis(),
                faces: c.cone.faces().into_iter().map(|f| f.cone).collect(),
            })
            .collect();
        Ok(Prevariety {
            system,
            poset,
            charts,
        })
    }

    pub fn system(&self) -> &SystemOfFans {
        &self.system
    }

    pub fn poset(&self) -> &OmegaPoset {
        &self.poset
    }

    pub fn ambient_rank(&self) -> usize {
        self.system.ambient_rank()
    }

    /// Generators of `S_σ` for the class `[σ, i]`.
    pub fn semigroup(&self, class: usize) -> &AffineSemigroup {
        &self.charts[class].semigroup
    }

    pub fn class_cone(&self, class: usize) -> &Cone {
        &self.poset.class(class).cone
    }

    /// Class of the zero cone in chart `i`, i.e. the dense torus.
    pub fn torus_class(&self, index: usize) -> usize {
        self.poset
            .class_of(&Cone::zero(self.ambient_rank()), index)
            .expect("every chart contains the zero cone")
    }

    pub fn check_point(&self, p: &TropPoint) -> Result<()> {
        if p.class >= self.poset.len() {
            return Err(Error::Invalid(format!("no class {}", p.class)));
        }
        let k = self.class_cone(p.class).equations().len();
        if p.coords.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: p.coords.len(),
            });
        }
        Ok(())
    }

    /// `u(s)` for `s ∈ M`: finite iff `s ∈ τ⊥`.
    pub fn eval(&self, p: &TropPoint, s: &[Int]) -> ExtReal {
        let tau = self.class_cone(p.class);
        match perp_coordinates(tau, s) {
            Some(a) => ExtReal::Finite(
                a.iter()
                    .zip(&p.coords)
                    .fold(Rat::zero(), |acc, (x, c)| acc + x * c),
            ),
            None => ExtReal::Infinity,
        }
    }

    /// `u(s)` for `s ∈ S_σ`, where `[σ, i]` is a chart class above the
    /// stratum of `p`.
    pub fn trop_eval(&self, p: &TropPoint, chart: usize, s: &[Int]) -> Result<ExtReal> {
        self.check_point(p)?;
        if !self.poset.leq(p.class, chart) {
            return Err(Error::ChartMismatch(format!(
                "class {} is not below class {chart}",
                p.class
            )));
        }
        if !self.semigroup(chart).contains(s) {
            return Err(Error::NotInMonoid);
        }
        Ok(self.eval(p, s))
    }

    /// Values of `p` on the generators of `S_σ` for the chart class.
    pub fn chart_values(&self, p: &TropPoint, chart: usize) -> Result<Vec<ExtReal>> {
        self.semigroup(chart)
            .generators()
            .iter()
            .map(|g| self.trop_eval(p, chart, g))
            .collect()
    }

    /// The point with the given values on the generators of `S_σ`.
    pub fn point_from_chart_values(&self, chart: usize, values: &[ExtReal]) -> Result<TropPoint> {
        let (tau, coords) = self.decode_values(chart, values)?;
        let rep = self.poset.class(chart).representative;
        Ok(TropPoint {
            class: self.poset.class_of(&tau, rep).unwrap(),
            coords,
        })
    }

    /// Finds the face `τ` with finite locus `τ⊥ ∩ S_σ` and the coordinates in
    /// `N/span(τ)`.
    fn decode_values(&self, chart: usize, values: &[ExtReal]) -> Result<(Cone, Vec<Rat>)> {
        let sg = self.semigroup(chart);
        if values.len() != sg.len() {
            return Err(Error::DimensionMismatch {
                expected: sg.len(),
                got: values.len(),
            });
        }
        let finite: Vec<bool> = values.iter().map(|v| v.is_finite()).collect();
        let tau = self.charts[chart]
            .faces
            .iter()
            .find(|t| {
                sg.generators()
                    .iter()
                    .zip(&finite)
                    .all(|(g, f)| is_perp(t, g) == *f)
            })
            .ok_or(Error::FiniteLocusNotAFace)?
            .clone();
        let idx: Vec<usize> = (0..values.len()).filter(|&k| finite[k]).collect();
        let rows: Vec<IntVec> = idx
            .iter()
            .map(|&k| perp_coordinates(&tau, &sg.generators()[k]).unwrap())
            .map(|r| r.iter().map(|x| x.to_integer()).collect())
            .collect();
        let width = tau.equations().len();
        let a = IntMatrix::from_rows(width, &rows);
        let b: Vec<Rat> = idx.iter().map(|&k| values[k].finite().unwrap().clone()).collect();
        if width == 0 {
            if let Some(k) = idx.iter().zip(&b).find(|(_, v)| !v.is_zero()).map(|(k, _)| *k) {
                return Err(Error::RelationViolation(format!(
                    "unit {} must have value 0",
                    fmt_vec(&sg.generators()[k])
                )));
            }
            return Ok((tau, Vec::new()));
        }
        match solve_rational(&a, &b) {
            Some(c) => Ok((tau, c)),
            None => Err(Error::RelationViolation(violated_relation(
                &a,
                &b,
                &idx.iter().map(|&k| sg.generators()[k].clone()).collect::<Vec<_>>(),
            ))),
        }
    }

    /// Image of a point under the map induced by a morphism of systems of
    /// fans, computed chart-wise via `s′ ↦ u(Fᵀ s′)`.
    pub fn induced_map(
        &self,
        target: &Prevariety,
        m: &SysFanMorphism,
        p: &TropPoint,
    ) -> Result<TropPoint> {
        self.check_point(p)?;
        let tau = self.class_cone(p.class);
        let img = tau.image(&m.lattice_map)?;
        let host = target.poset.class(m.class_map[p.class]);
        let rho = target.charts[host.id]
            .faces
            .iter()
            .filter(|f| f.contains_cone(&img))
            .min_by_key(|f| f.dim())
            .ok_or_else(|| Error::Invalid("morphism does not map the stratum into its target cone".into()))?;
        let ft = m.lattice_map.transpose();
        let coords = rho
            .equations()
            .iter()
            .map(|e| match self.eval(p, &ft.mul_vec(e)) {
                ExtReal::Finite(r) => Ok(r),
                ExtReal::Infinity => Err(Error::Invalid("pullback left the finite locus".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TropPoint {
            class: target.poset.class_of(rho, host.representative).unwrap(),
            coords,
        })
    }

    /// `min_s (val(a_s) + u(s))`, the `-log` of the skeleton seminorm.
    pub fn skeleton_seminorm(&self, p: &TropPoint, f: &ValuatedChartPolynomial) -> Result<ExtReal> {
        let mut best = ExtReal::Infinity;
        for (s, a) in &f.terms {
            let v = a + &self.trop_eval(p, f.chart, s)?;
            if v < best {
                best = v;
            }
        }
        Ok(best)
    }

    /// Trop strata `N_ℝ/span(σ)` as (class, dimension).
    pub fn strata(&self) -> Vec<(usize, usize)> {
        self.poset
            .classes()
            .iter()
            .map(|c| (c.id, self.ambient_rank() - c.cone.dim()))
            .collect()
    }

    /// Non-negative strata `relint(ρ)/τ` for every class `[ρ, i]` and face
    /// `τ ⪯ ρ`.
    pub fn nonneg_strata(&self) -> Vec<NonNegStratum> {
        let mut out = Vec::new();
        for c in self.poset.classes() {
            for tau in &self.charts[c.id].faces {
                out.push(NonNegStratum {
                    class: c.id,
                    face: tau.clone(),
                    dim: c.cone.dim() - tau.dim(),
                });
            }
        }
        out
    }

    /// The non-negative point with the given generator values on a chart.
    pub fn nonneg_from_chart_values(&self, chart: usize, values: &[ExtReal]) -> Result<NonNegTropPoint> {
        if let Some(k) = values
            .iter()
            .position(|v| v.finite().is_some_and(|r| r.is_negative()))
        {
            return Err(Error::Invalid(format!("generator {k} has a negative value")));
        }
        let (tau, coords) = self.decode_values(chart, values)?;
        self.nonneg_point(chart, &tau, coords)
    }

    /// The point of `σ/τ` on the chart class `[σ, i]`, brought to canonical
    /// form.
    pub fn nonneg_point(&self, chart: usize, face: &Cone, coords: Vec<Rat>) -> Result<NonNegTropPoint> {
        let sigma = self.class_cone(chart);
        if !face.is_face_of(sigma) {
            return Err(Error::NotAFace);
        }
        if coords.len() != face.equations().len() {
            return Err(Error::DimensionMismatch {
                expected: face.equations().len(),
                got: coords.len(),
            });
        }
        let probe = TropPoint {
            class: self.poset.class_of(face, self.poset.class(chart).representative).unwrap(),
            coords,
        };
        let gens = self.semigroup(chart).generators();
        let values: Vec<ExtReal> = gens.iter().map(|g| self.eval(&probe, g)).collect();
        if values
            .iter()
            .any(|v| v.finite().is_some_and(|r| r.is_negative()))
        {
            return Err(Error::Invalid("coordinates lie outside the image of the cone".into()));
        }
        let rho = self.charts[chart]
            .faces
            .iter()
            .filter(|r| face.is_face_of(r))
            .filter(|r| {
                gens.iter()
                    .zip(&values)
                    .all(|(g, v)| !is_perp(r, g) || v.finite().is_some_and(|x| x.is_zero()))
            })
            .min_by_key(|r| r.dim())
            .expect("σ itself qualifies");
        Ok(NonNegTropPoint {
            class: self
                .poset
                .class_of(rho, self.poset.class(chart).representative)
                .unwrap(),
            face: face.clone(),
            coords: probe.coords,
        })
    }

    /// The canonical map `X^{trop,≥0} → X^trop`.
    pub fn compare_to_trop(&self, q: &NonNegTropPoint) -> TropPoint {
        let rep = self.poset.class(q.class).representative;
        TropPoint {
            class: self.poset.class_of(&q.face, rep).unwrap(),
            coords: q.coords.clone(),
        }
    }

    /// All points of `X^{trop,≥0}` mapping to `p`.
    pub fn nonneg_preimages(&self, p: &TropPoint) -> Vec<NonNegTropPoint> {
        let tau = self.class_cone(p.class).clone();
        let mut out: Vec<NonNegTropPoint> = (0..self.poset.len())
            .filter(|&c| self.poset.leq(p.class, c))
            .filter_map(|c| self.nonneg_point(c, &tau, p.coords.clone()).ok())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Values of a non-negative point on the generators of its class.
    pub fn nonneg_chart_values(&self, q: &NonNegTropPoint) -> Vec<ExtReal> {
        let p = self.compare_to_trop(q);
        self.semigroup(q.class)
            .generators()
            .iter()
            .map(|g| self.eval(&p, g))
            .collect()
    }
}

pub(crate) fn is_perp(tau: &Cone, s: &[Int]) -> bool {
    tau.generators().iter().all(|g| dot(g, s).is_zero())
}

/// Coordinates of `s ∈ τ⊥ ∩ M` in the canonical basis of `τ⊥ ∩ M`.
pub(crate) fn perp_coordinates(tau: &Cone, s: &[Int]) -> Option<Vec<Rat>> {
    if s.len() != tau.ambient_rank() || !is_perp(tau, s) {
        return None;
    }
    let eqs = tau.equations();
    if eqs.is_empty() {
        return Some(Vec::new());
    }
    let basis = IntMatrix::from_cols(tau.ambient_rank(), eqs);
    let rhs: Vec<Rat> = s.iter().map(rat_from_int).collect();
    solve_rational(&basis, &rhs)
}

/// Finds an integer relation `Σ r_k g_k = 0` whose values do not cancel.
fn violated_relation(coords: &IntMatrix, values: &[Rat], gens: &[IntVec]) -> String {
    let kernel = crate::exactla::kernel_lattice(&coords.transpose());
    for r in kernel.basis() {
        let total = r
            .iter()
            .zip(values)
            .fold(Rat::zero(), |acc, (x, v)| acc + rat_from_int(x) * v);
        if total.is_zero() {
            continue;
        }
        let side = |positive: bool| {
            let parts: Vec<String> = r
                .iter()
                .zip(gens)
                .filter(|(x, _)| if positive { x.is_positive() } else { x.is_negative() })
                .map(|(x, g)| {
                    let c = x.abs();
                    if c == Int::from(1) {
                        fmt_vec(g)
                    } else {
                        format!("{c}*{}", fmt_vec(g))
                    }
                })
                .collect();
            parts.join(" + ")
        };
        return format!("{} = {}", side(true), side(false));
    }
    "inconsistent values".into()
}

impl PartialOrd for NonNegStratum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NonNegStratum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.class, &self.face).cmp(&(other.class, &other.face))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ivec, rat};
    use crate::sysfan::fixtures::*;

    fn q(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    fn fin(v: i64) -> ExtReal {
        ExtReal::int(v)
    }

    #[test]
    fn extended_arithmetic() {
        assert_eq!(fin(2) + fin(3), fin(5));
        assert_eq!(fin(2) + ExtReal::Infinity, ExtReal::Infinity);
        assert!(fin(1000) < ExtReal::Infinity);
        assert_eq!(ExtReal::parse("inf").unwrap(), ExtReal::Infinity);
        assert_eq!(ExtReal::parse("-3/6").unwrap(), ExtReal::Finite(rat(-1, 2)));
    }

    #[test]
    fn evaluation_on_the_plane() {
        let a2 = Prevariety::new(affine_space(2)).unwrap();
        let chart = a2.poset().len() - 1;
        let torus = TropPoint {
            class: a2.torus_class(0),
            coords: vec![q(1), q(2)],
        };
        assert_eq!(a2.trop_eval(&torus, chart, &ivec(&[1, 0])).unwrap(), fin(1));
        // generators sorted: e₂ then e₁
        let p = a2
            .point_from_chart_values(chart, &[ExtReal::Infinity, fin(5)])
            .unwrap();
        assert_eq!(p.coords, vec![q(5)]);
        assert_eq!(
            a2.class_cone(p.class),
            &Cone::from_i64(2, &[&[0, 1]])
        );
        assert_eq!(a2.trop_eval(&p, chart, &ivec(&[0, 1])).unwrap(), ExtReal::Infinity);
        let deepest = a2
            .point_from_chart_values(chart, &[ExtReal::Infinity, ExtReal::Infinity])
            .unwrap();
        assert_eq!(deepest.class, chart);
        assert_eq!(a2.trop_eval(&deepest, chart, &ivec(&[1, 0])).unwrap(), ExtReal::Infinity);
        assert_eq!(
            a2.trop_eval(&torus, chart, &ivec(&[-1, 0])),
            Err(Error::NotInMonoid)
        );
        let zero = a2.point_from_chart_values(chart, &[fin(0), fin(0)]).unwrap();
        assert_eq!(zero.class, a2.torus_class(0));
        assert_eq!(zero.coords, vec![q(0), q(0)]);
    }

    #[test]
    fn relations_are_checked() {
        let sigma = Cone::from_i64(2, &[&[1, 0], &[1, 2]]);
        let pv = Prevariety::new(SystemOfFans::from_fan(
            "1",
            crate::sysfan::Fan::of_cone(&sigma),
        ))
        .unwrap();
        let chart = pv.poset().class_of(&sigma, 0).unwrap();
        let gens = pv.semigroup(chart).generators().to_vec();
        assert_eq!(gens, vec![ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[2, -1])]);
        match pv.point_from_chart_values(chart, &[fin(0), fin(0), fin(5)]) {
            Err(Error::RelationViolation(msg)) => {
                assert!(msg.contains("(2,-1)"), "{msg}");
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            pv.point_from_chart_values(chart, &[ExtReal::Infinity, fin(0), ExtReal::Infinity]),
            Err(Error::FiniteLocusNotAFace)
        );
        let ok = pv.point_from_chart_values(chart, &[fin(1), fin(3), fin(5)]).unwrap();
        assert_eq!(pv.chart_values(&ok, chart).unwrap(), vec![fin(1), fin(3), fin(5)]);
    }

    #[test]
    fn strata_inventories() {
        let pp = Prevariety::new(p1_times_p1()).unwrap();
        let mut dims: Vec<usize> = pp.strata().iter().map(|s| s.1).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 0, 0, 0, 1, 1, 1, 1, 2]);
        let two = Prevariety::new(line_with_two_origins()).unwrap();
        let dims: Vec<usize> = two.strata().iter().map(|s| s.1).collect();
        assert_eq!(dims, vec![1, 0, 0]);
        let nn = two.nonneg_strata();
        assert_eq!(nn.len(), 5);
        let pt = Prevariety::new(SystemOfFans::point()).unwrap();
        assert_eq!(pt.strata(), vec![(0, 0)]);
    }

    #[test]
    fn comparison_on_two_origins() {
        let two = Prevariety::new(line_with_two_origins()).unwrap();
        let a = two.nonneg_from_chart_values(1, &[fin(1)]).unwrap();
        let b = two.nonneg_from_chart_values(2, &[fin(1)]).unwrap();
        assert_ne!(a, b);
        assert_eq!(two.compare_to_trop(&a), two.compare_to_trop(&b));
        assert_eq!(two.compare_to_trop(&a), TropPoint { class: 0, coords: vec![q(1)] });
        // Value 0 is the shared apex.
        let c = two.nonneg_from_chart_values(1, &[fin(0)]).unwrap();
        let d = two.nonneg_from_chart_values(2, &[fin(0)]).unwrap();
        assert_eq!(c, d);
        let apex = two.nonneg_from_chart_values(1, &[ExtReal::Infinity]).unwrap();
        assert_eq!(two.compare_to_trop(&apex), TropPoint { class: 1, coords: vec![] });
        assert_eq!(two.nonneg_preimages(&two.compare_to_trop(&a)).len(), 2);
    }

    #[test]
    fn surjectivity_fails_on_the_line() {
        let a1 = Prevariety::new(affine_line()).unwrap();
        let minus_one = TropPoint { class: 0, coords: vec![q(-1)] };
        assert!(a1.nonneg_preimages(&minus_one).is_empty());
        let p1 = Prevariety::new(projective_line()).unwrap();
        let p = TropPoint { class: p1.torus_class(0), coords: vec![q(-1)] };
        assert_eq!(p1.nonneg_preimages(&p).len(), 1);
    }

    #[test]
    fn induced_maps() {
        let two = Prevariety::new(line_with_two_origins()).unwrap();
        let a1 = Prevariety::new(affine_line()).unwrap();
        let fold = SysFanMorphism::from_chart_map(IntMatrix::identity(1), two.system(), a1.system(), &[0, 0]).unwrap();
        let inf1 = TropPoint { class: 1, coords: vec![] };
        let inf2 = TropPoint { class: 2, coords: vec![] };
        assert_eq!(
            two.induced_map(&a1, &fold, &inf1).unwrap(),
            two.induced_map(&a1, &fold, &inf2).unwrap()
        );
        let a2 = Prevariety::new(affine_space(2)).unwrap();
        let diag = SysFanMorphism::from_chart_map(IntMatrix::from_i64(&[&[1], &[1]]), a1.system(), a2.system(), &[0]).unwrap();
        let three = TropPoint { class: 0, coords: vec![q(3)] };
        let img = a1.induced_map(&a2, &diag, &three).unwrap();
        assert_eq!(img, TropPoint { class: a2.torus_class(0), coords: vec![q(3), q(3)] });
        let id = SysFanMorphism::identity(two.system());
        assert_eq!(two.induced_map(&two, &id, &inf2).unwrap(), inf2);
    }

    #[test]
    fn skeleton_seminorm_values() {
        let a2 = Prevariety::new(affine_space(2)).unwrap();
        let chart = a2.poset().len() - 1;
        let u = TropPoint { class: a2.torus_class(0), coords: vec![q(1), q(2)] };
        let f = ValuatedChartPolynomial::new(
            chart,
            vec![(ivec(&[1, 0]), fin(0)), (ivec(&[0, 1]), fin(1))],
        )
        .unwrap();
        assert_eq!(a2.skeleton_seminorm(&u, &f).unwrap(), fin(1));
        let boundary = a2
            .point_from_chart_values(chart, &[ExtReal::Infinity, fin(4)])
            .unwrap();
        let g = ValuatedChartPolynomial::new(chart, vec![(ivec(&[0, 1]), fin(0))]).unwrap();
        assert_eq!(a2.skeleton_seminorm(&boundary, &g).unwrap(), ExtReal::Infinity);
        let empty = ValuatedChartPolynomial::new(chart, vec![]).unwrap();
        assert_eq!(a2.skeleton_seminorm(&u, &empty).unwrap(), ExtReal::Infinity);
    }
}
