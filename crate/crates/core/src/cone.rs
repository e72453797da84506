//! Rational polyhedral cones in `ℝⁿ` with the lattice `ℤⁿ`.
//!
//! A [`Cone`] always carries both representations in canonical form: the
//! extreme rays (primitive, reduced modulo the lineality space, sorted
//! lexicographically) together with a saturated lattice basis of the
//! lineality space, and the facet normals together with a saturated basis of
//! `σ⊥`. Canonical forms make structural equality the same as equality of
//! sets, and make `dual` a plain swap of the two representations.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    dot, dot_rat, is_zero_vec, primitive, primitive_from_rat,
    rat_from_int, saturated_span, smith_normal_form, solve_integer, solve_rational, Int,
    IntMatrix, IntVec, Lattice, Rat,
};

#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

impl Cone {
    /// Non-negative span of `generators` in `ℝⁿ`.
    pub fn from_generators(ambient: usize, generators: &[IntVec]) -> Result<Self> {
        check_widths(ambient, generators)?;
        let (facets, equations) = double_description(ambient, generators);
        let mut constraints = facets.clone();
        for e in &equations {
            constraints.push(e.clone());
            constraints.push(e.iter().map(|x| -x).collect());
        }
        let (rays, lineality) = double_description(ambient, &constraints);
        Ok(Cone {
            ambient,
            rays,
            lineality,
            facets,
            equations,
        })
    }

    pub fn from_i64(ambient: usize, generators: &[&[i64]]) -> Self {
        let g: Vec<IntVec> = generators.iter().map(|v| crate::exactla::ivec(v)).collect();
        Self::from_generators(ambient, &g).expect("generator width")
    }

    /// `{x : ⟨a, x⟩ ≥ 0 for a in inequalities, ⟨e, x⟩ = 0 for e in equations}`.
    pub fn from_inequalities(
        ambient: usize,
        inequalities: &[IntVec],
        equations: &[IntVec],
    ) -> Result<Self> {
        check_widths(ambient, inequalities)?;
        check_widths(ambient, equations)?;
        let mut constraints = inequalities.to_vec();
        for e in equations {
            constraints.push(e.clone());
            constraints.push(e.iter().map(|x| -x).collect());
        }
        let (rays, lineality) = double_description(ambient, &constraints);
        let mut gens = rays;
        for l in &lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        Self::from_generators(ambient, &gens)
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_generators(ambient, &[]).unwrap()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Extreme rays modulo the lineality space.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    /// Inward facet normals (modulo `σ⊥`).
    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    /// Saturated basis of `σ⊥ ∩ ℤⁿ` in Hermite normal form.
    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// All generators as a monoid: rays and `±` lineality basis.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    /// `σ∨ = {u : ⟨u, v⟩ ≥ 0 for all v ∈ σ}`.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient: self.ambient,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn contains_int(&self, v: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, v).is_zero())
            && self.facets.iter().all(|f| !dot(f, v).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains_int(g))
    }

    /// Intersection of two cones in the same ambient space.
    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut ineq = self.facets.clone();
        ineq.extend(other.facets.iter().cloned());
        let mut eq = self.equations.clone();
        eq.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient, &ineq, &eq)
    }

    /// All faces, from the minimal face up to the cone itself, sorted by
    /// dimension and then canonical form.
    pub fn faces(&self) -> Vec<Face> {
        let zero_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| {
                (0..self.rays.len())
                    .filter(|&r| dot(f, &self.rays[r]).is_zero())
                    .collect()
            })
            .collect();
        let all: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = vec![all.clone()];
        seen.insert(all);
        while let Some(s) = queue.pop() {
            for z in &zero_sets {
                let t: BTreeSet<usize> = s.intersection(z).copied().collect();
                if seen.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|rays| {
                let tight: Vec<usize> = (0..self.facets.len())
                    .filter(|&f| rays.iter().all(|r| zero_sets[f].contains(r)))
                    .collect();
                let mut gens: Vec<IntVec> = rays.iter().map(|&r| self.rays[r].clone()).collect();
                for l in &self.lineality {
                    gens.push(l.clone());
                    gens.push(l.iter().map(|x| -x).collect());
                }
                Face {
                    cone: Cone::from_generators(self.ambient, &gens).unwrap(),
                    tight_facets: tight,
                }
            })
            .collect();
        faces.sort_by(|a, b| a.cone.cmp(&b.cone));
        faces
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        if self.ambient != other.ambient || !other.contains_cone(self) {
            return false;
        }
        // The smallest face of `other` containing `self` is cut out by the
        // facets vanishing on all of `self`.
        let gens = self.generators();
        let tight: Vec<&IntVec> = other
            .facets
            .iter()
            .filter(|f| gens.iter().all(|g| dot(f, g).is_zero()))
            .collect();
        let face_rays: Vec<&IntVec> = other
            .rays
            .iter()
            .filter(|r| tight.iter().all(|f| dot(f, r).is_zero()))
            .collect();
        face_rays.iter().all(|r| self.contains_int(r))
            && other.lineality.iter().all(|l| self.contains_int(l))
    }

    /// Classifies a rational point relative to the cone.
    pub fn contains(&self, v: &[Rat]) -> Result<Containment> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        if self.equations.iter().any(|e| !dot_rat(v, e).is_zero()) {
            return Ok(Containment::Outside);
        }
        let values: Vec<Rat> = self.facets.iter().map(|f| dot_rat(v, f)).collect();
        if values.iter().any(|x| x.is_negative()) {
            return Ok(Containment::Outside);
        }
        let tight: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_zero()).collect();
        if tight.is_empty() {
            return Ok(Containment::RelativeInterior);
        }
        let mut eqs = self.equations.clone();
        eqs.extend(tight.iter().map(|&i| self.facets[i].clone()));
        let face = Cone::from_inequalities(self.ambient, &self.facets, &eqs)?;
        Ok(Containment::Boundary(face))
    }

    /// `N/span(τ)` for a face `τ` of `self`, with the projection matrix
    /// whose rows are the canonical basis of `τ⊥ ∩ M`.
    pub fn quotient_by_span(&self, face: &Cone) -> Result<Quotient> {
        if !face.is_face_of(self) {
            return Err(Error::NotAFace);
        }
        Ok(face.span_quotient())
    }

    /// `N/span(self)` with its canonical projection.
    pub fn span_quotient(&self) -> Quotient {
        let projection = IntMatrix::from_rows(self.ambient, &self.equations);
        Quotient {
            lattice: Lattice::standard(self.equations.len()),
            projection,
        }
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && IntMatrix::from_rows(self.ambient, &self.rays).rank() == self.rays.len()
    }

    /// Generators of the monoid `σ∨ ∩ M`.
    pub fn hilbert_basis(&self) -> AffineSemigroup {
        AffineSemigroup::of_dual(self)
    }

    /// Image of the cone under an integer linear map `F: ℤⁿ → ℤᵐ`.
    pub fn image(&self, map: &IntMatrix) -> Result<Cone> {
        if map.ncols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: map.ncols(),
            });
        }
        let gens: Vec<IntVec> = self.generators().iter().map(|g| map.mul_vec(g)).collect();
        Cone::from_generators(map.nrows(), &gens)
    }

    /// Cartesian product `σ × σ′` in `ℤⁿ ⊕ ℤᵐ`.
    pub fn product(&self, other: &Cone) -> Cone {
        let n = self.ambient + other.ambient;
        let mut gens = Vec::new();
        for g in self.generators() {
            let mut v = g;
            v.extend(std::iter::repeat(Int::zero()).take(other.ambient));
            gens.push(v);
        }
        for g in other.generators() {
            let mut v = vec![Int::zero(); self.ambient];
            v.extend(g);
            gens.push(v);
        }
        Cone::from_generators(n, &gens).unwrap()
    }
}

fn check_widths(ambient: usize, vs: &[IntVec]) -> Result<()> {
    match vs.iter().find(|v| v.len() != ambient) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: ambient,
            got: v.len(),
        }),
        None => Ok(()),
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.rays == other.rays
            && self.lineality == other.lineality
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rays.hash(state);
        self.lineality.hash(state);
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.rays.cmp(&other.rays))
            .then_with(|| self.lineality.cmp(&other.lineality))
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone(")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_vec(r))?;
        }
        if !self.lineality.is_empty() {
            write!(f, "; lin")?;
            for l in &self.lineality {
                write!(f, " {}", fmt_vec(l))?;
            }
        }
        write!(f, ") in Z^{}", self.ambient)
    }
}

pub(crate) fn fmt_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub cone: Cone,
    /// Indices into the parent's facet list vanishing on this face.
    pub tight_facets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Outside,
    /// In the relative interior of the given proper face.
    Boundary(Cone),
    RelativeInterior,
}

/// The quotient lattice `N/span(τ)` and the projection `N → N/span(τ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub lattice: Lattice,
    pub projection: IntMatrix,
}

/// Small fixed-size bitset over constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// Incremental double description for `{x ∈ ℝⁿ : ⟨a, x⟩ ≥ 0 for all a}`.
///
/// Returns the canonical extreme rays and the canonical lattice basis of the
/// lineality space.
fn double_description(n: usize, constraints: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let m = constraints.len();
    let mut lineality: Vec<IntVec> = (0..n)
        .map(|i| {
            let mut v = vec![Int::zero(); n];
            v[i] = Int::from(1);
            v
        })
        .collect();
    let mut rays: Vec<(IntVec, Bits)> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                al0 = -al0;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    let v: IntVec = l.iter().zip(&l0).map(|(x, y)| x * &al0 - y * &al).collect();
                    *l = primitive(&v);
                }
            }
            for (r, z) in rays.iter_mut() {
                let ar = dot(a, r);
                if !ar.is_zero() {
                    let v: IntVec = r.iter().zip(&l0).map(|(x, y)| x * &al0 - y * &ar).collect();
                    *r = primitive(&v);
                }
                z.set(k);
            }
            // l0 is tight on every earlier constraint.
            let mut z = Bits::new(m);
            for j in 0..k {
                z.set(j);
            }
            rays.push((primitive(&l0), z));
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let mut next: Vec<(IntVec, Bits)> = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            match values[i].sign() {
                num_bigint::Sign::Plus => {
                    next.push((r.clone(), z.clone()));
                    pos.push(i);
                }
                num_bigint::Sign::NoSign => {
                    let mut z = z.clone();
                    z.set(k);
                    next.push((r.clone(), z));
                }
                num_bigint::Sign::Minus => neg.push(i),
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.subset_of(&rays[r].1));
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let v: IntVec = rays[p]
                    .0
                    .iter()
                    .zip(&rays[q].0)
                    .map(|(x, y)| x * &vq + y * vp)
                    .collect();
                let mut z = common;
                z.set(k);
                next.push((primitive(&v), z));
            }
        }
        rays = next;
    }

    let lineality = if lineality.is_empty() {
        Vec::new()
    } else {
        saturated_span(&lineality, n).basis()
    };
    let mut out: Vec<IntVec> = rays
        .into_iter()
        .map(|(r, _)| reduce_mod_lineality(&r, &lineality))
        .filter(|r| !is_zero_vec(r))
        .collect();
    out.sort();
    out.dedup();
    (out, lineality)
}

/// Orthogonal projection onto the complement of the lineality space, scaled
/// back to a primitive integer vector.
fn reduce_mod_lineality(r: &IntVec, lineality: &[IntVec]) -> IntVec {
    if lineality.is_empty() {
        return primitive(r);
    }
    let k = lineality.len();
    // Gram system: (L Lᵀ) c = L r
    let gram_rows: Vec<IntVec> = (0..k)
        .map(|i| (0..k).map(|j| dot(&lineality[i], &lineality[j])).collect())
        .collect();
    let gram = IntMatrix::from_rows(k, &gram_rows);
    let rhs: Vec<Rat> = lineality.iter().map(|l| rat_from_int(&dot(l, r))).collect();
    let c = solve_rational(&gram, &rhs).expect("lineality basis is independent");
    let proj: Vec<Rat> = (0..r.len())
        .map(|i| {
            let mut x = rat_from_int(&r[i]);
            for (j, l) in lineality.iter().enumerate() {
                x -= &c[j] * rat_from_int(&l[i]);
            }
            x
        })
        .collect();
    primitive_from_rat(&proj)
}

/// A finitely generated saturated monoid `σ∨ ∩ M`, stored with its
/// generators in lexicographic order.
///
/// When `σ` is not full-dimensional, `σ∨` contains the subspace `σ⊥`; a
/// lattice basis of `σ⊥ ∩ M` and its negatives are then part of the
/// generators (the units of the monoid).
#[derive(Clone, Debug)]
pub struct AffineSemigroup {
    cone: Cone,
    generators: Vec<IntVec>,
    units: Vec<bool>,
    /// Projection `M → M/(σ⊥ ∩ M)`, rows.
    projection: IntMatrix,
    pointed: Cone,
    projected: Vec<IntVec>,
}

impl AffineSemigroup {
    fn of_dual(sigma: &Cone) -> Self {
        let n = sigma.ambient_rank();
        let dual = sigma.dual();
        let units_basis = sigma.equations().to_vec();
        let k = units_basis.len();

        let (projection, lift) = complement_coordinates(n, &units_basis);
        let projected_rays: Vec<IntVec> = dual.rays().iter().map(|r| projection.mul_vec(r)).collect();
        let pointed = Cone::from_generators(n - k, &projected_rays).unwrap();
        let pointed_basis = pointed_hilbert_basis(&pointed);

        let mut gens: Vec<(IntVec, bool)> = pointed_basis
            .iter()
            .map(|h| (lift.mul_vec(h), false))
            .collect();
        for u in &units_basis {
            gens.push((u.clone(), true));
            gens.push((u.iter().map(|x| -x).collect(), true));
        }
        gens.sort();
        let projected = gens.iter().map(|(g, _)| projection.mul_vec(g)).collect();
        AffineSemigroup {
            cone: dual,
            units: gens.iter().map(|(_, u)| *u).collect(),
            generators: gens.into_iter().map(|(g, _)| g).collect(),
            projection,
            pointed,
            projected,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.cone.ambient_rank()
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self, i: usize) -> bool {
        self.units[i]
    }

    pub fn index_of(&self, v: &[Int]) -> Option<usize> {
        self.generators.iter().position(|g| g.as_slice() == v)
    }

    /// The cone `σ∨` whose lattice points form this monoid.
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        v.len() == self.ambient_rank() && self.cone.contains_int(v)
    }

    /// Writes `v` as an ℕ-combination of the generators.
    pub fn decompose(&self, v: &[Int]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        let target = self.projection.mul_vec(v);
        let degree: Vec<Int> = self.pointed.facets().iter().fold(
            vec![Int::zero(); target.len()],
            |acc, f| acc.iter().zip(f).map(|(a, b)| a + b).collect(),
        );
        let mut failed: HashMap<IntVec, ()> = HashMap::new();
        let mut coeffs = vec![0u64; self.generators.len()];
        if !self.decompose_pointed(&target, &degree, &mut coeffs, &mut failed) {
            return None;
        }
        // Remainder lies in σ⊥ ∩ M and is absorbed by the unit generators.
        let mut rest: IntVec = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if *c > 0 {
                for (x, g) in rest.iter_mut().zip(&self.generators[i]) {
                    *x -= g * Int::from(*c);
                }
            }
        }
        if !is_zero_vec(&rest) {
            let unit_pos: Vec<usize> = (0..self.generators.len())
                .filter(|&i| self.units[i] && self.generators[i].iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()))
                .collect();
            let basis: Vec<IntVec> = unit_pos.iter().map(|&i| self.generators[i].clone()).collect();
            let mat = IntMatrix::from_cols(self.ambient_rank(), &basis);
            let c = solve_integer(&mat, &rest)?;
            for (j, cj) in c.iter().enumerate() {
                let idx = if cj.is_negative() {
                    let neg: IntVec = basis[j].iter().map(|x| -x).collect();
                    self.index_of(&neg).unwrap()
                } else {
                    unit_pos[j]
                };
                coeffs[idx] += u64::try_from(cj.abs()).ok()?;
            }
        }
        Some(coeffs)
    }

    fn decompose_pointed(
        &self,
        target: &IntVec,
        degree: &IntVec,
        coeffs: &mut [u64],
        failed: &mut HashMap<IntVec, ()>,
    ) -> bool {
        if is_zero_vec(target) {
            return true;
        }
        if failed.contains_key(target) {
            return false;
        }
        for (i, g) in self.projected.iter().enumerate() {
            if self.units[i] || dot(degree, g).is_zero() {
                continue;
            }
            let rest: IntVec = target.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.pointed.contains_int(&rest) {
                coeffs[i] += 1;
                if self.decompose_pointed(&rest, degree, coeffs, failed) {
                    return true;
                }
                coeffs[i] -= 1;
            }
        }
        failed.insert(target.clone(), ());
        false
    }
}

/// For a saturated basis `E` (k rows) of a sublattice of `ℤⁿ`, returns a
/// projection `ℤⁿ → ℤⁿ⁻ᵏ` with kernel `span(E) ∩ ℤⁿ` and a lift
/// `ℤⁿ⁻ᵏ → ℤⁿ` splitting it.
fn complement_coordinates(n: usize, basis: &[IntVec]) -> (IntMatrix, IntMatrix) {
    let k = basis.len();
    if k == 0 {
        return (IntMatrix::identity(n), IntMatrix::identity(n));
    }
    // d = p · Eᵀ · q with d = [I; 0] because E is saturated, so rows k.. of
    // the unimodular p vanish on span(E) and give the projection.
    let e = IntMatrix::from_rows(n, basis);
    let snf = smith_normal_form(&e.transpose());
    let proj_rows: Vec<IntVec> = (k..n).map(|r| snf.p.row(r).to_vec()).collect();
    let projection = IntMatrix::from_rows(n, &proj_rows);
    let pinv = unimodular_inverse(&snf.p);
    let lift_cols: Vec<IntVec> = (k..n).map(|c| pinv.col(c)).collect();
    let lift = IntMatrix::from_cols(n, &lift_cols);
    (projection, lift)
}

pub(crate) fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.nrows();
    let cols: Vec<IntVec> = (0..n)
        .map(|c| {
            let mut e = vec![Int::zero(); n];
            e[c] = Int::from(1);
            solve_integer(m, &e).expect("matrix is unimodular")
        })
        .collect();
    IntMatrix::from_cols(n, &cols)
}

/// Hilbert basis of a pointed cone by enumerating the lattice points of the
/// bounding box of the zonotope spanned by its rays and discarding the
/// reducible ones.
fn pointed_hilbert_basis(cone: &Cone) -> Vec<IntVec> {
    let d = cone.ambient_rank();
    if d == 0 {
        return Vec::new();
    }
    debug_assert!(cone.is_pointed());
    let mut lo = vec![Int::zero(); d];
    let mut hi = vec![Int::zero(); d];
    for r in cone.rays() {
        for j in 0..d {
            if r[j].is_negative() {
                lo[j] += &r[j];
            } else {
                hi[j] += &r[j];
            }
        }
    }
    let degree: IntVec = cone.facets().iter().fold(vec![Int::zero(); d], |acc, f| {
        acc.iter().zip(f).map(|(a, b)| a + b).collect()
    });
    let mut candidates: Vec<(Int, IntVec)> = Vec::new();
    let mut cur = lo.clone();
    loop {
        if !is_zero_vec(&cur) && cone.contains_int(&cur) {
            candidates.push((dot(&degree, &cur), cur.clone()));
        }
        let mut j = 0;
        loop {
            if j == d {
                candidates.sort();
                return irreducibles(cone, candidates);
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j].clone();
            j += 1;
        }
    }
}

fn irreducibles(cone: &Cone, candidates: Vec<(Int, IntVec)>) -> Vec<IntVec> {
    let mut basis: Vec<IntVec> = Vec::new();
    for (deg, x) in &candidates {
        let reducible = candidates.iter().take_while(|(d2, _)| d2 < deg).any(|(_, h)| {
            let rest: IntVec = x.iter().zip(h).map(|(a, b)| a - b).collect();
            cone.contains_int(&rest)
        });
        if !reducible {
            basis.push(x.clone());
        }
    }
    basis.sort();
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ivec, rat};

    #[test]
    fn duals() {
        let half = Cone::from_i64(1, &[&[1]]);
        assert_eq!(half.dual(), half);
        let zero = Cone::zero(2);
        let dual = zero.dual();
        assert_eq!(dual.dim(), 2);
        assert_eq!(dual.lineality().len(), 2);
        let s = Cone::from_i64(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(s.dual(), Cone::from_i64(2, &[&[0, 1], &[2, -1]]));
        assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn non_minimal_generators_are_pruned() {
        let c = Cone::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[2, 0]]);
        assert_eq!(c.rays(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
        let line = Cone::from_i64(2, &[&[1, 1], &[-2, -2]]);
        assert_eq!(line.lineality(), &[ivec(&[1, 1])]);
        assert!(line.rays().is_empty());
        let halfplane = Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[3, 1]]);
        assert_eq!(halfplane.rays(), &[ivec(&[0, 1])]);
        assert_eq!(halfplane.facets(), &[ivec(&[0, 1])]);
    }

    #[test]
    fn face_counts() {
        let quadrant = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.faces().len(), 4);
        let ray = Cone::from_i64(3, &[&[1, 2, 3]]);
        assert_eq!(ray.faces().len(), 2);
        let s = Cone::from_i64(2, &[&[1, 0], &[1, 2]]);
        let faces = s.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().any(|f| f.cone == Cone::from_i64(2, &[&[1, 0]])));
        assert!(faces.iter().any(|f| f.cone == Cone::from_i64(2, &[&[1, 2]])));
        for f in &faces {
            assert!(f.cone.is_face_of(&s));
        }
        let square = Cone::from_i64(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]);
        assert_eq!(square.faces().len(), 1 + 4 + 4 + 1);
    }

    #[test]
    fn face_relation_rejects_non_faces() {
        let quadrant = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        let diag = Cone::from_i64(2, &[&[1, 1]]);
        assert!(!diag.is_face_of(&quadrant));
        assert!(Cone::zero(2).is_face_of(&quadrant));
        assert!(quadrant.is_face_of(&quadrant));
    }

    #[test]
    fn hilbert_bases() {
        let quadrant = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.hilbert_basis().generators(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
        let s = Cone::from_i64(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(
            s.hilbert_basis().generators(),
            &[ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[2, -1])]
        );
        let hb = Cone::zero(1).hilbert_basis();
        assert_eq!(hb.generators(), &[ivec(&[-1]), ivec(&[1])]);
        assert!(hb.is_unit(0) && hb.is_unit(1));
    }

    #[test]
    fn hilbert_basis_of_non_full_cone() {
        // σ = ray (1,0) in ℤ²: σ∨ = {x ≥ 0}, generated by (1,0) and ±(0,1).
        let ray = Cone::from_i64(2, &[&[1, 0]]);
        let hb = ray.hilbert_basis();
        assert_eq!(hb.len(), 3);
        assert!(hb.index_of(&ivec(&[0, 1])).is_some());
        assert!(hb.index_of(&ivec(&[0, -1])).is_some());
        let c = hb.decompose(&ivec(&[2, -3])).unwrap();
        let mut sum = ivec(&[0, 0]);
        for (i, k) in c.iter().enumerate() {
            for j in 0..2 {
                sum[j] += &hb.generators()[i][j] * Int::from(*k);
            }
        }
        assert_eq!(sum, ivec(&[2, -3]));
        assert!(hb.decompose(&ivec(&[-1, 0])).is_none());
    }

    #[test]
    fn containment() {
        let q = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.contains(&[rat(1, 1), rat(1, 1)]).unwrap(), Containment::RelativeInterior);
        assert_eq!(
            q.contains(&[rat(1, 1), rat(0, 1)]).unwrap(),
            Containment::Boundary(Cone::from_i64(2, &[&[1, 0]]))
        );
        assert_eq!(q.contains(&[rat(-1, 1), rat(0, 1)]).unwrap(), Containment::Outside);
        assert_eq!(
            q.contains(&[rat(0, 1), rat(0, 1)]).unwrap(),
            Containment::Boundary(Cone::zero(2))
        );
        assert!(q.contains(&[rat(1, 1)]).is_err());
    }

    #[test]
    fn quotients() {
        let q = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        let id = q.quotient_by_span(&Cone::zero(2)).unwrap();
        assert_eq!(id.projection, IntMatrix::identity(2));
        assert_eq!(q.quotient_by_span(&q).unwrap().lattice.rank(), 0);
        let ray = Cone::from_i64(2, &[&[1, 0]]);
        let p = q.quotient_by_span(&ray).unwrap();
        assert_eq!(p.projection, IntMatrix::from_i64(&[&[0, 1]]));
        let diag = Cone::from_i64(2, &[&[1, 1]]);
        assert_eq!(q.quotient_by_span(&diag), Err(Error::NotAFace));
    }

    #[test]
    fn simpliciality() {
        assert!(Cone::from_i64(2, &[&[1, 0], &[0, 1]]).is_simplicial());
        assert!(Cone::zero(3).is_simplicial());
        let c = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]);
        assert_eq!(c.rays().len(), 4);
        assert!(!c.is_simplicial());
    }

    #[test]
    fn intersections() {
        let a = Cone::from_i64(2, &[&[1, 0], &[1, 1]]);
        let b = Cone::from_i64(2, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), Cone::from_i64(2, &[&[1, 1]]));
    }
}
