//! Classical points over `ℚ(t)`, their (non-negative) tropicalizations,
//! hypersurface membership and the embedding refinement `x ↦ g̃`.

pub mod scalar;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{kernel_lattice, Int, IntMatrix, IntVec};
use crate::multiproj::{Grading, Proj};
use crate::sysfan::SysFanMorphism;
use crate::troppre::{
    perp_coordinates, ExtReal, NonNegTropPoint, Prevariety, TropPoint, ValuatedChartPolynomial,
};

pub use scalar::{QPoly, ValuedScalar};

/// A `ℚ(t)`-point of the affine chart `U_σ`, given by its values on the
/// generators of `S_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalChartPoint {
    pub chart: usize,
    pub values: Vec<ValuedScalar>,
}

impl ClassicalChartPoint {
    /// Checks that the values define a monoid homomorphism `S_σ → ℚ(t)`.
    pub fn new(prev: &Prevariety, chart: usize, values: Vec<ValuedScalar>) -> Result<Self> {
        let vals: Vec<ExtReal> = values.iter().map(|v| v.val()).collect();
        let tp = prev.point_from_chart_values(chart, &vals)?;
        let tau = prev.class_cone(tp.class);
        let gens = prev.semigroup(chart).generators();
        let live: Vec<usize> = (0..values.len()).filter(|&k| !values[k].is_zero()).collect();
        let width = tau.equations().len();
        let rows: Vec<IntVec> = live
            .iter()
            .map(|&k| {
                perp_coordinates(tau, &gens[k])
                    .unwrap()
                    .iter()
                    .map(|x| x.to_integer())
                    .collect()
            })
            .collect();
        let a = IntMatrix::from_rows(width, &rows);
        for r in kernel_lattice(&a.transpose()).basis() {
            let mut lhs = ValuedScalar::one();
            let mut rhs = ValuedScalar::one();
            for (j, c) in r.iter().enumerate() {
                let v = &values[live[j]];
                if c.is_positive() {
                    lhs = &lhs * &v.pow(c).unwrap();
                } else if c.is_negative() {
                    rhs = &rhs * &v.pow(&-c).unwrap();
                }
            }
            if lhs != rhs {
                return Err(Error::RelationViolation(format!(
                    "multiplicative relation {r:?} among generator values"
                )));
            }
        }
        Ok(ClassicalChartPoint { chart, values })
    }

    /// A point of the dense torus with coordinates `x ∈ (ℚ(t)*)ⁿ`.
    pub fn from_torus(prev: &Prevariety, chart: usize, x: &[ValuedScalar]) -> Result<Self> {
        if x.len() != prev.ambient_rank() {
            return Err(Error::DimensionMismatch {
                expected: prev.ambient_rank(),
                got: x.len(),
            });
        }
        if x.iter().any(|v| v.is_zero()) {
            return Err(Error::Invalid("torus coordinates must be nonzero".into()));
        }
        let values = prev
            .semigroup(chart)
            .generators()
            .iter()
            .map(|g| monomial_value(x, g).unwrap())
            .collect();
        Ok(ClassicalChartPoint { chart, values })
    }

    /// The image in the chart `D₊(T^F)` of a point with Cox coordinates `x`.
    pub fn from_cox(proj: &Proj, prev: &Prevariety, index: usize, x: &[ValuedScalar]) -> Result<Self> {
        let n = proj.grading.n();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        let f = &proj.charts[index];
        if let Some(&i) = f.iter().find(|&&i| x[i].is_zero()) {
            return Err(Error::ChartMismatch(format!(
                "coordinate T{} vanishes on chart {}",
                i + 1,
                proj.system.indices()[index]
            )));
        }
        let chart = prev
            .poset()
            .class_of(&proj.cone_of(f), index)
            .expect("chart cone is a class");
        let values = prev
            .semigroup(chart)
            .generators()
            .iter()
            .map(|g| monomial_value(x, &proj.m_to_exponent(g)).unwrap())
            .collect();
        Ok(ClassicalChartPoint { chart, values })
    }

    /// `χ^s` at the point, for `s ∈ S_σ`.
    pub fn character(&self, prev: &Prevariety, s: &[Int]) -> Result<ValuedScalar> {
        let coeffs = prev
            .semigroup(self.chart)
            .decompose(s)
            .ok_or(Error::NotInMonoid)?;
        let mut acc = ValuedScalar::one();
        for (c, v) in coeffs.iter().zip(&self.values) {
            if *c > 0 {
                acc = &acc * &v.pow(&Int::from(*c)).unwrap();
            }
        }
        Ok(acc)
    }

    pub fn valuations(&self) -> Vec<ExtReal> {
        self.values.iter().map(|v| v.val()).collect()
    }
}

/// `Π xᵢ^{aᵢ}`, or `None` when a negative power of zero occurs.
pub fn monomial_value(x: &[ValuedScalar], a: &[Int]) -> Option<ValuedScalar> {
    let mut acc = ValuedScalar::one();
    for (xi, ai) in x.iter().zip(a) {
        if !ai.is_zero() {
            acc = &acc * &xi.pow(ai)?;
        }
    }
    Some(acc)
}

/// `s ↦ val χ^s(p)`, decoded into a point of `X^trop`.
pub fn trop_point(prev: &Prevariety, p: &ClassicalChartPoint) -> Result<TropPoint> {
    prev.point_from_chart_values(p.chart, &p.valuations())
}

/// The non-negative tropicalization of a point of the Raynaud generic fiber.
pub fn nonneg_trop_point(prev: &Prevariety, p: &ClassicalChartPoint) -> Result<NonNegTropPoint> {
    let vals = p.valuations();
    if let Some(k) = vals
        .iter()
        .position(|v| v.finite().is_some_and(|r| r.is_negative()))
    {
        return Err(Error::NotBounded { generator: k });
    }
    prev.nonneg_from_chart_values(p.chart, &vals)
}

/// Image of a classical point under the toric morphism of `m`:
/// `χ^{s′}(f(p)) = χ^{Fᵀ s′}(p)`.
pub fn push_forward(
    prev: &Prevariety,
    target: &Prevariety,
    m: &SysFanMorphism,
    p: &ClassicalChartPoint,
) -> Result<ClassicalChartPoint> {
    let chart = m.class_map[p.chart];
    let ft = m.lattice_map.transpose();
    let values = target
        .semigroup(chart)
        .generators()
        .iter()
        .map(|g| p.character(prev, &ft.mul_vec(g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassicalChartPoint { chart, values })
}

/// A Laurent polynomial in the Cox variables with `ℚ(t)` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: Vec<(IntVec, ValuedScalar)>,
}

impl Polynomial {
    /// Combines like terms and drops zero coefficients.
    pub fn new(n: usize, terms: Vec<(IntVec, ValuedScalar)>) -> Result<Self> {
        let mut acc: BTreeMap<IntVec, ValuedScalar> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
            let slot = acc.entry(e).or_insert_with(ValuedScalar::zero);
            *slot = &*slot + &c;
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial { n, terms })
    }

    /// Shorthand with integer exponents and rational constant coefficients.
    pub fn from_i64(n: usize, terms: &[(&[i64], i64)]) -> Self {
        let t = terms
            .iter()
            .map(|(e, c)| (crate::exactla::ivec(e), ValuedScalar::from_int(*c)))
            .collect();
        Self::new(n, t).expect("exponent width")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(IntVec, ValuedScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|x| !x.is_negative()))
    }

    pub fn eval(&self, x: &[ValuedScalar]) -> Option<ValuedScalar> {
        let mut acc = ValuedScalar::zero();
        for (e, c) in &self.terms {
            acc = &acc + &(c * &monomial_value(x, e)?);
        }
        Some(acc)
    }

    /// The common degree of all terms, or `NotHomogeneous`.
    pub fn degree(&self, g: &Grading) -> Result<IntVec> {
        let mut degs = self.terms.iter().map(|(e, _)| g.degree_of(e));
        let first = degs.next().unwrap_or_else(|| vec![Int::zero(); g.group().width()]);
        if degs.any(|d| d != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(first)
    }

    /// `T^b · self`.
    pub fn shift(&self, b: &[Int]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(b).map(|(x, y)| x + y).collect(), c.clone()))
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// The degree-zero function on the chart `D₊(T^F)` as a valuated chart
    /// polynomial in `M`-coordinates.
    pub fn to_chart(&self, proj: &Proj, prev: &Prevariety, index: usize) -> Result<ValuatedChartPolynomial> {
        let f = &proj.charts[index];
        let chart = prev
            .poset()
            .class_of(&proj.cone_of(f), index)
            .expect("chart cone is a class");
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if !proj.grading.degree_of(e).iter().all(|x| x.is_zero()) {
                return Err(Error::NotHomogeneous);
            }
            let m = proj.exponent_to_m(e).ok_or(Error::NotHomogeneous)?;
            if !prev.semigroup(chart).contains(&m) {
                return Err(Error::NotInMonoid);
            }
            terms.push((m, c.val()));
        }
        ValuatedChartPolynomial::new(chart, terms)
    }
}

/// A hypersurface `V(f)` in `Proj_D k[T₁, …, Tₙ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedHypersurface {
    pub grading: Grading,
    pub poly: Polynomial,
}

impl EmbeddedHypersurface {
    pub fn new(grading: Grading, poly: Polynomial) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::Invalid("the zero polynomial does not define a hypersurface".into()));
        }
        if poly.n() != grading.n() {
            return Err(Error::DimensionMismatch {
                expected: grading.n(),
                got: poly.n(),
            });
        }
        poly.degree(&grading)?;
        Ok(EmbeddedHypersurface { grading, poly })
    }

    pub fn contains(&self, x: &[ValuedScalar]) -> bool {
        self.poly.eval(x).is_some_and(|v| v.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KapranovResult {
    pub member: bool,
    /// Indices of the terms attaining the minimum.
    pub achieving: Vec<usize>,
    pub minimum: ExtReal,
}

/// Min-attained-twice test after discarding the terms that are infinite on
/// the stratum of `w`. A polynomial with no surviving term counts as
/// vanishing on the stratum.
pub fn kapranov_membership(
    prev: &Prevariety,
    f: &ValuatedChartPolynomial,
    w: &TropPoint,
) -> Result<KapranovResult> {
    let mut values = Vec::with_capacity(f.terms.len());
    for (s, a) in &f.terms {
        values.push(a + &prev.trop_eval(w, f.chart, s)?);
    }
    let minimum = values.iter().min().cloned().unwrap_or(ExtReal::Infinity);
    if !minimum.is_finite() {
        return Ok(KapranovResult {
            member: true,
            achieving: Vec::new(),
            minimum,
        });
    }
    let achieving: Vec<usize> = (0..values.len()).filter(|&k| values[k] == minimum).collect();
    Ok(KapranovResult {
        member: achieving.len() >= 2,
        achieving,
        minimum,
    })
}

/// The presentation `S[x] → S`, `x ↦ g̃` with `deg x = deg g̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub old: Grading,
    pub new: Grading,
    pub gtilde: Polynomial,
    /// Exponent of the monomial `h` with `g̃ = h·g`.
    pub h: IntVec,
}

impl Refinement {
    /// Exponent vector in `ℤⁿ⁺¹` of the monomial `x/h`, whose pullback is `g`.
    pub fn target_monomial(&self) -> IntVec {
        let mut e: IntVec = self.h.iter().map(|x| -x).collect();
        e.push(Int::from(1));
        e
    }
}

pub fn refine_embedding(g: &Grading, gtilde: &Polynomial, h: &[Int]) -> Result<Refinement> {
    if gtilde.n() != g.n() || h.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: gtilde.n().min(h.len()),
        });
    }
    if gtilde.is_zero() || !gtilde.is_polynomial() {
        return Err(Error::Invalid("g̃ must be a nonzero polynomial".into()));
    }
    if h.iter().any(|x| x.is_negative()) {
        return Err(Error::Invalid("h must be a monomial".into()));
    }
    let deg = gtilde.degree(g)?;
    Ok(Refinement {
        old: g.clone(),
        new: g.with_variable(deg)?,
        gtilde: gtilde.clone(),
        h: h.to_vec(),
    })
}

/// Both multigraded spectra of a refinement, ready for tropicalization.
#[derive(Clone, Debug)]
pub struct RefinedSystem {
    pub refinement: Refinement,
    pub old: Proj,
    pub old_prev: Prevariety,
    pub new: Proj,
    pub new_prev: Prevariety,
}

impl RefinedSystem {
    pub fn build(refinement: Refinement) -> Result<Self> {
        let old = refinement.old.proj()?;
        let new = refinement.new.proj()?;
        Ok(RefinedSystem {
            old_prev: Prevariety::new(old.system.clone())?,
            new_prev: Prevariety::new(new.system.clone())?,
            refinement,
            old,
            new,
        })
    }

    /// `trop_i` of a point on the old chart `index`.
    pub fn direct_trop(&self, index: usize, x: &[ValuedScalar]) -> Result<TropPoint> {
        let p = ClassicalChartPoint::from_cox(&self.old, &self.old_prev, index, x)?;
        trop_point(&self.old_prev, &p)
    }

    /// New chart index of an old chart; old minimal relevant subsets stay
    /// minimal after adjoining `x`.
    pub fn new_index(&self, index: usize) -> usize {
        self.new
            .chart_index(&self.old.charts[index])
            .expect("old charts survive the refinement")
    }

    /// `trop_{i′}` of the point extended by `x = g̃(p)`.
    pub fn refined_trop(&self, index: usize, x: &[ValuedScalar]) -> Result<TropPoint> {
        let gx = self
            .refinement
            .gtilde
            .eval(x)
            .ok_or_else(|| Error::Invalid("g̃ is not defined at the point".into()))?;
        let mut ext = x.to_vec();
        ext.push(gx);
        let p = ClassicalChartPoint::from_cox(&self.new, &self.new_prev, self.new_index(index), &ext)?;
        trop_point(&self.new_prev, &p)
    }

    /// Forgets the `x`-coordinate: the map dual to `M → M′, a ↦ (a, 0)`.
    pub fn project(&self, index: usize, p: &TropPoint) -> Result<TropPoint> {
        let chart = self
            .old_prev
            .poset()
            .class_of(&self.old.cone_of(&self.old.charts[index]), index)
            .unwrap();
        let values = self
            .old_prev
            .semigroup(chart)
            .generators()
            .iter()
            .map(|g| {
                let mut a = self.old.m_to_exponent(g);
                a.push(Int::zero());
                let m = self.new.exponent_to_m(&a).expect("degree zero stays degree zero");
                self.new_prev.eval(p, &m)
            })
            .collect::<Vec<_>>();
        self.old_prev.point_from_chart_values(chart, &values)
    }
}

/// A refinement whose tropicalization separates two points with the same
/// tropicalization.
#[derive(Clone, Debug)]
pub struct SeparationWitness {
    pub system: RefinedSystem,
    pub common: TropPoint,
    pub refined_p: TropPoint,
    pub refined_q: TropPoint,
}

/// Builds `g̃ = h·f` with the smallest monomial `h` clearing the
/// denominators of the degree-zero chart function `f`, refines by `x ↦ g̃`
/// and checks that the refined tropicalizations differ.
pub fn separation_witness(
    g: &Grading,
    index: usize,
    p: &[ValuedScalar],
    q: &[ValuedScalar],
    f: &Polynomial,
) -> Result<SeparationWitness> {
    let proj = g.proj()?;
    let prev = Prevariety::new(proj.system.clone())?;
    let chart = &proj.charts[index];
    let tp = trop_point(&prev, &ClassicalChartPoint::from_cox(&proj, &prev, index, p)?)?;
    let tq = trop_point(&prev, &ClassicalChartPoint::from_cox(&proj, &prev, index, q)?)?;
    if tp != tq {
        return Err(Error::NotSeparating("the tropicalizations already differ".into()));
    }
    if !f.degree(g)?.iter().all(|x| x.is_zero()) {
        return Err(Error::NotHomogeneous);
    }
    let fp = f.eval(p).ok_or_else(|| Error::Invalid("f is not defined at p".into()))?;
    let fq = f.eval(q).ok_or_else(|| Error::Invalid("f is not defined at q".into()))?;
    if fp.val() == fq.val() {
        return Err(Error::NotSeparating("f has equal valuations at both points".into()));
    }
    let mut h = vec![Int::zero(); g.n()];
    for (e, _) in f.terms() {
        for (i, x) in e.iter().enumerate() {
            if x.is_negative() {
                if !chart.contains(&i) {
                    return Err(Error::Invalid(format!(
                        "f has a pole along T{} on this chart",
                        i + 1
                    )));
                }
                if -x > h[i] {
                    h[i] = -x;
                }
            }
        }
    }
    let gtilde = f.shift(&h);
    let system = RefinedSystem::build(refine_embedding(g, &gtilde, &h)?)?;
    let refined_p = system.refined_trop(index, p)?;
    let refined_q = system.refined_trop(index, q)?;
    if refined_p == refined_q {
        return Err(Error::NotSeparating("the refinement does not separate the points".into()));
    }
    Ok(SeparationWitness {
        system,
        common: tp,
        refined_p,
        refined_q,
    })
}
