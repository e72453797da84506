//! Systems of fans and the poset `Ω(S)` of cone/chart classes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

/// A face-closed collection of pointed cones, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient: usize,
    cones: Vec<Cone>,
}

impl Fan {
    pub fn empty(ambient: usize) -> Self {
        Fan {
            ambient,
            cones: Vec::new(),
        }
    }

    /// Closes the given cones under taking faces. Fan axioms are not checked
    /// here; see [`Fan::violations`].
    pub fn from_cones(ambient: usize, cones: &[Cone]) -> Result<Self> {
        let mut all = Vec::new();
        for c in cones {
            if c.ambient_rank() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: c.ambient_rank(),
                });
            }
            all.extend(c.faces().into_iter().map(|f| f.cone));
        }
        all.sort();
        all.dedup();
        Ok(Fan { ambient, cones: all })
    }

    /// The fan of all faces of a single cone.
    pub fn of_cone(cone: &Cone) -> Self {
        Self::from_cones(cone.ambient_rank(), std::slice::from_ref(cone)).unwrap()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains(&self, cone: &Cone) -> bool {
        self.cones.binary_search(cone).is_ok()
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d != *c && c.is_face_of(d))
            })
            .collect()
    }

    /// Set-theoretic intersection of the cone lists.
    pub fn common_cones(&self, other: &Fan) -> Vec<Cone> {
        self.cones
            .iter()
            .filter(|c| other.contains(c))
            .cloned()
            .collect()
    }

    /// Violations of the fan axioms: non-pointed cones and pairs whose
    /// intersection is not a common face.
    pub fn violations(&self) -> Vec<FanDefect> {
        let mut out = Vec::new();
        for c in &self.cones {
            if !c.is_pointed() {
                out.push(FanDefect::NotPointed(c.clone()));
            }
        }
        let maximal = self.maximal_cones();
        for (a, x) in maximal.iter().enumerate() {
            for y in &maximal[a + 1..] {
                let meet = x.intersection(y).expect("same ambient");
                if !(meet.is_face_of(x) && meet.is_face_of(y)) {
                    out.push(FanDefect::BadIntersection((*x).clone(), (*y).clone()));
                }
            }
        }
        out
    }

    pub fn product(&self, other: &Fan) -> Fan {
        let mut cones: Vec<Cone> = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                cones.push(a.product(b));
            }
        }
        cones.sort();
        cones.dedup();
        Fan {
            ambient: self.ambient + other.ambient,
            cones,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanDefect {
    NotPointed(Cone),
    BadIntersection(Cone, Cone),
}

/// A system of fans `(Δ_ij)` indexed by a finite labelled set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemOfFans {
    ambient: usize,
    indices: Vec<String>,
    fans: Vec<Vec<Fan>>,
}

impl SystemOfFans {
    /// Builds a system from a full matrix of fans. No axioms are checked.
    pub fn new(ambient: usize, indices: Vec<String>, fans: Vec<Vec<Fan>>) -> Result<Self> {
        let n = indices.len();
        if fans.len() != n || fans.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid(format!(
                "expected a {n}x{n} matrix of fans"
            )));
        }
        let mut seen = indices.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::Invalid("duplicate index labels".into()));
        }
        if let Some(bad) = indices.iter().find(|l| l.contains(',') || l.is_empty()) {
            return Err(Error::Invalid(format!("bad index label {bad:?}")));
        }
        for row in &fans {
            for f in row {
                if f.ambient != ambient {
                    return Err(Error::DimensionMismatch {
                        expected: ambient,
                        got: f.ambient,
                    });
                }
            }
        }
        Ok(SystemOfFans {
            ambient,
            indices,
            fans,
        })
    }

    /// Builds a system from (possibly only maximal) cones per index pair.
    /// Missing entries `(j, i)` are mirrored from `(i, j)`; entries absent in
    /// both orders are empty fans.
    pub fn from_cone_lists(
        ambient: usize,
        indices: Vec<String>,
        entries: &BTreeMap<(usize, usize), Vec<Cone>>,
    ) -> Result<Self> {
        let n = indices.len();
        let mut fans = vec![vec![Fan::empty(ambient); n]; n];
        for (i, row) in fans.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let cones = entries.get(&(i, j)).or_else(|| entries.get(&(j, i)));
                if let Some(cones) = cones {
                    *slot = Fan::from_cones(ambient, cones)?;
                }
            }
        }
        Self::new(ambient, indices, fans)
    }

    /// One chart containing a single fan.
    pub fn from_fan(label: &str, fan: Fan) -> Self {
        let ambient = fan.ambient;
        Self::new(ambient, vec![label.to_string()], vec![vec![fan]]).unwrap()
    }

    /// The system of a point: `N = 0`, one chart with the zero cone.
    pub fn point() -> Self {
        Self::from_fan("0", Fan::of_cone(&Cone::zero(0)))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn indices(&self) -> &[String] {
        &self.indices
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.indices.iter().position(|l| l == label)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn fan(&self, i: usize, j: usize) -> &Fan {
        &self.fans[i][j]
    }

    /// Checks the fan axioms for every `Δ_ij`, symmetry, and the subfan axiom
    /// `Δ_ij ∩ Δ_jk ⊆ Δ_ik`.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.len();
        let label = |i: usize| self.indices[i].clone();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for d in self.fans[i][j].violations() {
                    out.push(match d {
                        FanDefect::NotPointed(c) => Violation::NotPointed {
                            i: label(i),
                            j: label(j),
                            cone: c,
                        },
                        FanDefect::BadIntersection(a, b) => Violation::NotAFan {
                            i: label(i),
                            j: label(j),
                            a,
                            b,
                        },
                    });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.fans[i][j] != self.fans[j][i] {
                    out.push(Violation::Asymmetric {
                        i: label(i),
                        j: label(j),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let common = self.fans[i][j].common_cones(&self.fans[j][k]);
                    if let Some(c) = common.into_iter().find(|c| !self.fans[i][k].contains(c)) {
                        out.push(Violation::NotSubfan {
                            i: label(i),
                            j: label(j),
                            k: label(k),
                            cone: c,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn omega_poset(&self) -> OmegaPoset {
        OmegaPoset::of(self)
    }

    /// `S × S′` on the index set `I × I′` in `N ⊕ N′`.
    pub fn product(&self, other: &SystemOfFans) -> SystemOfFans {
        let mut indices = Vec::new();
        let mut pairs = Vec::new();
        for (i, a) in self.indices.iter().enumerate() {
            for (k, b) in other.indices.iter().enumerate() {
                indices.push(format!("{a}*{b}"));
                pairs.push((i, k));
            }
        }
        let fans = pairs
            .iter()
            .map(|&(i, k)| {
                pairs
                    .iter()
                    .map(|&(j, l)| self.fans[i][j].product(&other.fans[k][l]))
                    .collect()
            })
            .collect();
        SystemOfFans::new(self.ambient + other.ambient, indices, fans).unwrap()
    }

    /// Pairwise gluing criterion: for all cones `σ ∈ Δ_ii`, `τ ∈ Δ_jj`, the
    /// intersection `σ ∩ τ` is a face of both and lies in `Δ_ij`.
    pub fn is_separated(&self) -> Separation {
        let poset = self.omega_poset();
        let n = self.len();
        for i in 0..n {
            for j in i..n {
                for s in self.fans[i][i].cones() {
                    for t in self.fans[j][j].cones() {
                        let meet = s.intersection(t).expect("same ambient");
                        let ok = meet.is_face_of(s)
                            && meet.is_face_of(t)
                            && self.fans[i][j].contains(&meet);
                        if !ok {
                            return Separation::NotSeparated(SeparationWitness {
                                first: poset.class_of(s, i).unwrap(),
                                second: poset.class_of(t, j).unwrap(),
                                intersection: meet,
                            });
                        }
                    }
                }
            }
        }
        Separation::Separated
    }

    /// Whether the cones cover `N_ℝ`. Only defined for separated systems.
    pub fn support_is_full(&self) -> Result<bool> {
        if let Separation::NotSeparated(_) = self.is_separated() {
            return Err(Error::Precondition(
                "support_is_full needs a separated system of fans".into(),
            ));
        }
        let mut all: Vec<Cone> = Vec::new();
        for i in 0..self.len() {
            all.extend(self.fans[i][i].cones().iter().cloned());
        }
        all.sort();
        all.dedup();
        let maximal: Vec<&Cone> = all
            .iter()
            .filter(|c| !all.iter().any(|d| d != *c && c.is_face_of(d)))
            .collect();
        if maximal.is_empty() {
            return Ok(false);
        }
        for m in &maximal {
            if !m.is_full_dimensional() {
                return Ok(false);
            }
            for facet in m.faces().into_iter().filter(|f| f.cone.dim() + 1 == m.dim()) {
                let others = maximal
                    .iter()
                    .filter(|o| *o != m && facet.cone.is_face_of(o))
                    .count();
                if others != 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Relabels the charts by a permutation and compares structurally.
    pub fn is_relabeling_of(&self, other: &SystemOfFans) -> bool {
        if self.ambient != other.ambient || self.len() != other.len() {
            return false;
        }
        let n = self.len();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let same = (0..n).all(|i| (0..n).all(|j| self.fans[i][j] == other.fans[perm[i]][perm[j]]));
            if same {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotPointed { i: String, j: String, cone: Cone },
    NotAFan { i: String, j: String, a: Cone, b: Cone },
    Asymmetric { i: String, j: String },
    NotSubfan { i: String, j: String, k: String, cone: Cone },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPointed { i, j, cone } => {
                write!(f, "fan ({i},{j}): {cone:?} is not pointed")
            }
            Violation::NotAFan { i, j, a, b } => write!(
                f,
                "fan ({i},{j}): {a:?} and {b:?} do not meet in a common face"
            ),
            Violation::Asymmetric { i, j } => write!(f, "fans ({i},{j}) and ({j},{i}) differ"),
            Violation::NotSubfan { i, j, k, cone } => write!(
                f,
                "{cone:?} lies in fans ({i},{j}) and ({j},{k}) but not in ({i},{k})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    Separated,
    NotSeparated(SeparationWitness),
}

impl Separation {
    pub fn is_separated(&self) -> bool {
        matches!(self, Separation::Separated)
    }
}

/// Two classes whose cones do not glue along their intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub first: usize,
    pub second: usize,
    pub intersection: Cone,
}

/// An equivalence class `[σ, i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaClass {
    pub id: usize,
    pub cone: Cone,
    /// Smallest chart index in the class.
    pub representative: usize,
    pub members: Vec<usize>,
}

/// `Ω(S)` with its partial order.
#[derive(Clone, Debug)]
pub struct OmegaPoset {
    classes: Vec<OmegaClass>,
    leq: Vec<Vec<bool>>,
    lookup: HashMap<(usize, Cone), usize>,
}

impl OmegaPoset {
    fn of(sys: &SystemOfFans) -> Self {
        let n = sys.len();
        let mut nodes: Vec<(usize, Cone)> = Vec::new();
        let mut node_of: HashMap<(usize, Cone), usize> = HashMap::new();
        for i in 0..n {
            for c in sys.fan(i, i).cones() {
                node_of.insert((i, c.clone()), nodes.len());
                nodes.push((i, c.clone()));
            }
        }
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                for c in sys.fan(i, j).cones() {
                    if let (Some(&a), Some(&b)) =
                        (node_of.get(&(i, c.clone())), node_of.get(&(j, c.clone())))
                    {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent[ra.max(rb)] = ra.min(rb);
                        }
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..nodes.len() {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        let mut raw: Vec<(Cone, Vec<usize>)> = groups
            .values()
            .map(|g| {
                let cone = nodes[g[0]].1.clone();
                let mut members: Vec<usize> = g.iter().map(|&x| nodes[x].0).collect();
                members.sort();
                (cone, members)
            })
            .collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0).then(a.1[0].cmp(&b.1[0])));
        let classes: Vec<OmegaClass> = raw
            .into_iter()
            .enumerate()
            .map(|(id, (cone, members))| OmegaClass {
                id,
                cone,
                representative: members[0],
                members,
            })
            .collect();
        let mut lookup = HashMap::new();
        for c in &classes {
            for &m in &c.members {
                lookup.insert((m, c.cone.clone()), c.id);
            }
        }
        let k = classes.len();
        let mut leq = vec![vec![false; k]; k];
        for big in &classes {
            for face in big.cone.faces() {
                if let Some(&small) = lookup.get(&(big.representative, face.cone)) {
                    leq[small][big.id] = true;
                }
            }
        }
        OmegaPoset {
            classes,
            leq,
            lookup,
        }
    }

    pub fn classes(&self) -> &[OmegaClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &OmegaClass {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class of `(cone, i)` for `cone ∈ Δ_ii`.
    pub fn class_of(&self, cone: &Cone, index: usize) -> Option<usize> {
        self.lookup.get(&(index, cone.clone())).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// All pairs `(a, b)` with `a ⪯ b`, in lexicographic order.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if self.leq[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Classes below `id` (its faces in the same chart).
    pub fn down_set(&self, id: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.leq[a][id]).collect()
    }

    /// Whether the relation is a partial order.
    pub fn is_partial_order(&self) -> bool {
        let k = self.len();
        for a in 0..k {
            if !self.leq[a][a] {
                return false;
            }
            for b in 0..k {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    return false;
                }
                if !self.leq[a][b] {
                    continue;
                }
                for c in 0..k {
                    if self.leq[b][c] && !self.leq[a][c] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A morphism of systems of fans: a lattice map and a map on `Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SysFanMorphism {
    pub lattice_map: IntMatrix,
    pub class_map: Vec<usize>,
}

impl SysFanMorphism {
    pub fn identity(sys: &SystemOfFans) -> Self {
        SysFanMorphism {
            lattice_map: IntMatrix::identity(sys.ambient_rank()),
            class_map: (0..sys.omega_poset().len()).collect(),
        }
    }

    /// Derives the class map from a lattice map and a choice of target chart
    /// per source chart: `[σ, i]` goes to the smallest cone of
    /// `Δ′_{c(i)c(i)}` containing `F(σ)`.
    pub fn from_chart_map(
        lattice_map: IntMatrix,
        source: &SystemOfFans,
        target: &SystemOfFans,
        chart_map: &[usize],
    ) -> Result<Self> {
        if lattice_map.ncols() != source.ambient_rank() || lattice_map.nrows() != target.ambient_rank() {
            return Err(Error::DimensionMismatch {
                expected: source.ambient_rank(),
                got: lattice_map.ncols(),
            });
        }
        if chart_map.len() != source.len() || chart_map.iter().any(|&c| c >= target.len()) {
            return Err(Error::Invalid("chart map has the wrong shape".into()));
        }
        let sp = source.omega_poset();
        let tp = target.omega_poset();
        let mut class_map = Vec::with_capacity(sp.len());
        for class in sp.classes() {
            let img = class.cone.image(&lattice_map)?;
            let ti = chart_map[class.representative];
            let host = target
                .fan(ti, ti)
                .cones()
                .iter()
                .filter(|c| c.contains_cone(&img))
                .min_by_key(|c| c.dim())
                .ok_or_else(|| {
                    Error::Invalid(format!(
                        "image of {:?} lies in no cone of chart {}",
                        class.cone,
                        target.indices()[ti]
                    ))
                })?;
            class_map.push(tp.class_of(host, ti).unwrap());
        }
        Ok(SysFanMorphism {
            lattice_map,
            class_map,
        })
    }

    pub fn validate(&self, source: &SystemOfFans, target: &SystemOfFans) -> Vec<MorphismViolation> {
        let sp = source.omega_poset();
        let tp = target.omega_poset();
        let mut out = Vec::new();
        if self.lattice_map.ncols() != source.ambient_rank()
            || self.lattice_map.nrows() != target.ambient_rank()
        {
            out.push(MorphismViolation::Shape);
            return out;
        }
        if self.class_map.len() != sp.len() || self.class_map.iter().any(|&c| c >= tp.len()) {
            out.push(MorphismViolation::Shape);
            return out;
        }
        for (a, b) in sp.relation() {
            if !tp.leq(self.class_map[a], self.class_map[b]) {
                out.push(MorphismViolation::NotOrderPreserving { lower: a, upper: b });
            }
        }
        for class in sp.classes() {
            let img = class.cone.image(&self.lattice_map).expect("shape checked");
            let host = &tp.class(self.class_map[class.id]).cone;
            if !host.contains_cone(&img) {
                out.push(MorphismViolation::ConeNotContained { class: class.id });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    Shape,
    NotOrderPreserving { lower: usize, upper: usize },
    ConeNotContained { class: usize },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::Shape => write!(f, "lattice map or class map has the wrong shape"),
            MorphismViolation::NotOrderPreserving { lower, upper } => {
                write!(f, "class map does not preserve {lower} <= {upper}")
            }
            MorphismViolation::ConeNotContained { class } => {
                write!(f, "image of the cone of class {class} is not inside its target cone")
            }
        }
    }
}

/// Hand-built systems that appear throughout the tests and examples.
pub mod fixtures {
    use super::*;

    fn ray(v: i64) -> Cone {
        Cone::from_i64(1, &[&[v]])
    }

    /// `𝔸¹`: the fan of `ℝ≥0`.
    pub fn affine_line() -> SystemOfFans {
        SystemOfFans::from_fan("1", Fan::of_cone(&ray(1)))
    }

    /// `𝔸ⁿ` as one chart.
    pub fn affine_space(n: usize) -> SystemOfFans {
        let gens: Vec<_> = (0..n)
            .map(|i| {
                let mut v = vec![num_bigint::BigInt::from(0); n];
                v[i] = 1.into();
                v
            })
            .collect();
        SystemOfFans::from_fan("1", Fan::of_cone(&Cone::from_generators(n, &gens).unwrap()))
    }

    /// The affine line with two origins.
    pub fn line_with_two_origins() -> SystemOfFans {
        let mut e = BTreeMap::new();
        e.insert((0, 0), vec![ray(1)]);
        e.insert((1, 1), vec![ray(1)]);
        e.insert((0, 1), vec![Cone::zero(1)]);
        SystemOfFans::from_cone_lists(1, vec!["1".into(), "2".into()], &e).unwrap()
    }

    /// `ℙ¹` with one chart per affine piece.
    pub fn projective_line() -> SystemOfFans {
        let mut e = BTreeMap::new();
        e.insert((0, 0), vec![ray(1)]);
        e.insert((1, 1), vec![ray(-1)]);
        e.insert((0, 1), vec![Cone::zero(1)]);
        SystemOfFans::from_cone_lists(1, vec!["1".into(), "2".into()], &e).unwrap()
    }

    /// `ℙ¹` as a single complete fan.
    pub fn projective_line_fan() -> SystemOfFans {
        SystemOfFans::from_fan(
            "1",
            Fan::from_cones(1, &[ray(1), ray(-1)]).unwrap(),
        )
    }

    /// `ℙ¹ × ℙ¹` as a single fan with four quadrants.
    pub fn p1_times_p1() -> SystemOfFans {
        let q = |a: i64, b: i64| Cone::from_i64(2, &[&[a, 0], &[0, b]]);
        SystemOfFans::from_fan(
            "1",
            Fan::from_cones(2, &[q(1, 1), q(-1, 1), q(1, -1), q(-1, -1)]).unwrap(),
        )
    }

    /// The standard fan of `ℙ²`.
    pub fn projective_plane() -> SystemOfFans {
        let c = |a: &[i64], b: &[i64]| Cone::from_i64(2, &[a, b]);
        SystemOfFans::from_fan(
            "1",
            Fan::from_cones(
                2,
                &[c(&[1, 0], &[0, 1]), c(&[0, 1], &[-1, -1]), c(&[-1, -1], &[1, 0])],
            )
            .unwrap(),
        )
    }
}
