//! Multigraded polynomial rings `k[T₁, …, Tₙ]` and their multihomogeneous
//! spectra `Proj_D` as simplicial toric prevarieties.
//!
//! Only monomial charts `D₊(T^F)` are used. The torus is `Spec k[M]` with
//! `M` the degree-zero exponents of the free part of the grading, `N` is its
//! dual, and `q: ℤⁿ → N` restricts the coordinate functionals to `M`. The
//! chart of a relevant subset `F` has cone `σ_F = cone(q(e_i) : i ∉ F)`, and
//! charts `F, G` are glued along the faces of `σ_{F∪G}`.

use std::fmt;

use num_traits::Zero;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactla::{cokernel_index, kernel_lattice, solve_integer, FgAbelianGroup, Int, IntMatrix, IntVec};
use crate::sysfan::{Fan, SystemOfFans};

/// A grading `deg: ℤⁿ → D` given by the degrees of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    group: FgAbelianGroup,
    degrees: Vec<IntVec>,
}

impl Grading {
    pub fn new(group: FgAbelianGroup, degrees: Vec<IntVec>) -> Result<Self> {
        let w = group.width();
        if let Some(d) = degrees.iter().find(|d| d.len() != w) {
            return Err(Error::DimensionMismatch {
                expected: w,
                got: d.len(),
            });
        }
        let degrees = degrees.iter().map(|d| group.reduce(d)).collect();
        Ok(Grading { group, degrees })
    }

    /// Free grading `ℤⁿ → ℤʳ` with the given degree vectors.
    pub fn free(rank: usize, degrees: &[&[i64]]) -> Self {
        let degs = degrees.iter().map(|d| crate::exactla::ivec(d)).collect();
        Self::new(FgAbelianGroup::free(rank), degs).expect("degree width")
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[IntVec] {
        &self.degrees
    }

    /// `deg(T^a)`.
    pub fn degree_of(&self, a: &[Int]) -> IntVec {
        let mut d = vec![Int::zero(); self.group.width()];
        for (ai, di) in a.iter().zip(&self.degrees) {
            for (x, y) in d.iter_mut().zip(di) {
                *x += ai * y;
            }
        }
        self.group.reduce(&d)
    }

    /// The grading on `k[T₁, …, Tₙ, x]` with `deg x` appended.
    pub fn with_variable(&self, degree: IntVec) -> Result<Grading> {
        let mut degs = self.degrees.clone();
        degs.push(degree);
        Grading::new(self.group.clone(), degs)
    }

    /// `F` (0-based variable indices) is relevant iff its degrees generate a
    /// finite-index subgroup of `D`.
    pub fn is_relevant_subset(&self, subset: &[usize]) -> bool {
        let cols: Vec<IntVec> = subset.iter().map(|&i| self.degrees[i].clone()).collect();
        cokernel_index(&cols, &self.group).is_some()
    }

    /// `T^a` lies in the irrelevant ideal iff its support is relevant.
    pub fn monomial_in_irrelevant_ideal(&self, a: &[Int]) -> bool {
        let support: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
        self.is_relevant_subset(&support)
    }

    pub fn relevant_subsets(&self) -> Result<ChartPoset> {
        let n = self.n();
        if n > 16 {
            return Err(Error::Invalid(format!("{n} variables is too many to enumerate")));
        }
        let mut relevant: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| self.is_relevant_subset(s))
            .collect();
        relevant.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let minimal = relevant
            .iter()
            .filter(|s| {
                !relevant
                    .iter()
                    .any(|t| t.len() < s.len() && t.iter().all(|x| s.contains(x)))
            })
            .cloned()
            .collect();
        Ok(ChartPoset { relevant, minimal })
    }

    /// Rows form a basis of `M = ker(δ_free) ⊆ ℤⁿ`.
    pub fn character_lattice(&self) -> IntMatrix {
        let n = self.n();
        let r = self.group.free_rank();
        let rows: Vec<IntVec> = (0..r)
            .map(|k| self.degrees.iter().map(|d| d[k].clone()).collect())
            .collect();
        let delta = IntMatrix::from_rows(n, &rows);
        let basis = kernel_lattice(&delta).basis();
        IntMatrix::from_rows(n, &basis)
    }

    /// Checks that `{q(e_i) : i ∉ F}` is linearly independent for every
    /// relevant `F`.
    pub fn check_simplicial(&self) -> Result<()> {
        let k = self.character_lattice();
        for f in self.relevant_subsets()?.relevant {
            let rest: Vec<usize> = (0..self.n()).filter(|i| !f.contains(i)).collect();
            if k.select_cols(&rest).rank() != rest.len() {
                return Err(Error::NonSimplicial(subset_label(&f)));
            }
        }
        Ok(())
    }

    pub fn proj(&self) -> Result<Proj> {
        let poset = self.relevant_subsets()?;
        if poset.minimal.is_empty() {
            return Err(Error::EmptyProj);
        }
        self.check_simplicial()?;
        let kernel = self.character_lattice();
        let m = kernel.nrows();
        let cone_of = |f: &[usize]| {
            let gens: Vec<IntVec> = (0..self.n())
                .filter(|i| !f.contains(i))
                .map(|i| kernel.col(i))
                .collect();
            Cone::from_generators(m, &gens).unwrap()
        };
        let charts = poset.minimal.clone();
        let fans: Vec<Vec<Fan>> = charts
            .iter()
            .map(|f| {
                charts
                    .iter()
                    .map(|g| {
                        let mut u: Vec<usize> = f.iter().chain(g).copied().collect();
                        u.sort();
                        u.dedup();
                        Fan::of_cone(&cone_of(&u))
                    })
                    .collect()
            })
            .collect();
        let labels = charts.iter().map(|f| subset_label(f)).collect();
        let system = SystemOfFans::new(m, labels, fans)?;
        Ok(Proj {
            grading: self.clone(),
            kernel,
            charts,
            relevant: poset.relevant,
            system,
        })
    }
}

/// 1-based variable list joined by `+`; the empty set is `0`.
pub fn subset_label(f: &[usize]) -> String {
    if f.is_empty() {
        return "0".into();
    }
    f.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join("+")
}

pub fn parse_subset_label(label: &str) -> Result<Vec<usize>> {
    if label == "0" {
        return Ok(Vec::new());
    }
    label
        .split('+')
        .map(|p| match p.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(Error::Parse(format!("bad chart label {label:?}"))),
        })
        .collect()
}

/// Relevant subsets (0-based), sorted by size then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartPoset {
    pub relevant: Vec<Vec<usize>>,
    pub minimal: Vec<Vec<usize>>,
}

/// `Proj_D k[T₁, …, Tₙ]` with the data linking it back to the ring.
#[derive(Clone, Debug)]
pub struct Proj {
    pub grading: Grading,
    /// Rows: basis of `M ⊆ ℤⁿ`; column `i` is `q(e_i) ∈ N`.
    pub kernel: IntMatrix,
    /// Chart subsets, in index order of `system`.
    pub charts: Vec<Vec<usize>>,
    pub relevant: Vec<Vec<usize>>,
    pub system: SystemOfFans,
}

impl Proj {
    /// Coordinates in `M` of a degree-zero exponent vector `a ∈ ℤⁿ`.
    pub fn exponent_to_m(&self, a: &[Int]) -> Option<IntVec> {
        if self.kernel.nrows() == 0 {
            return a.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        solve_integer(&self.kernel.transpose(), a)
    }

    /// The exponent vector in `ℤⁿ` of an element of `M`.
    pub fn m_to_exponent(&self, c: &[Int]) -> IntVec {
        self.kernel.transpose().mul_vec(c)
    }

    pub fn chart_index(&self, subset: &[usize]) -> Option<usize> {
        self.charts.iter().position(|f| f == subset)
    }

    pub fn cone_of(&self, subset: &[usize]) -> Cone {
        let gens: Vec<IntVec> = (0..self.grading.n())
            .filter(|i| !subset.contains(i))
            .map(|i| self.kernel.col(i))
            .collect();
        Cone::from_generators(self.kernel.nrows(), &gens).unwrap()
    }
}

impl fmt::Display for ChartPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.relevant.iter().map(|s| subset_label(s)).collect();
        write!(f, "{}", labels.join(", "))
    }
}

/// The four gradings of `k[T₁, T₂]` used throughout the tests.
pub mod fixtures {
    use super::*;

    /// `D = ℤ²`, `deg Tᵢ = eᵢ`.
    pub fn grading_1() -> Grading {
        Grading::free(2, &[&[1, 0], &[0, 1]])
    }

    /// `δ(c, d) = (c + d, 0)`.
    pub fn grading_2() -> Grading {
        Grading::free(2, &[&[1, 0], &[1, 0]])
    }

    /// Total degree.
    pub fn grading_3() -> Grading {
        Grading::free(1, &[&[1], &[1]])
    }

    /// `δ(a, b) = a − b`.
    pub fn grading_4() -> Grading {
        Grading::free(1, &[&[1], &[-1]])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exactla::ivec;
    use crate::sysfan::fixtures::{line_with_two_origins, projective_line};

    #[test]
    fn relevance_in_the_four_gradings() {
        let g1 = grading_1();
        assert!(g1.is_relevant_subset(&[0, 1]));
        assert!(!g1.is_relevant_subset(&[0]));
        assert!(g1.monomial_in_irrelevant_ideal(&ivec(&[1, 1])));
        assert!(!g1.monomial_in_irrelevant_ideal(&ivec(&[5, 0])));
        let g2 = grading_2();
        assert!(g2.relevant_subsets().unwrap().relevant.is_empty());
        assert!(!g2.monomial_in_irrelevant_ideal(&ivec(&[3, 4])));
        let p3 = grading_3().relevant_subsets().unwrap();
        assert_eq!(p3.relevant, vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(p3.minimal, vec![vec![0], vec![1]]);
        let p4 = grading_4().relevant_subsets().unwrap();
        assert_eq!(p4.relevant, vec![vec![0], vec![1], vec![0, 1]]);
        let trivial = Grading::new(FgAbelianGroup::free(0), vec![vec![], vec![]]).unwrap();
        assert!(trivial.is_relevant_subset(&[]));
    }

    #[test]
    fn torsion_counts_for_relevance() {
        let g = Grading::new(
            FgAbelianGroup::new(1, vec![Int::from(2)]).unwrap(),
            vec![ivec(&[1, 0]), ivec(&[1, 1])],
        )
        .unwrap();
        // Torsion changes the index but never its finiteness.
        assert_eq!(cokernel_index(&[ivec(&[1, 0])], g.group()), Some(Int::from(2)));
        assert_eq!(cokernel_index(&[ivec(&[1, 1])], g.group()), Some(Int::from(2)));
        assert_eq!(cokernel_index(g.degrees(), g.group()), Some(Int::from(1)));
        assert!(g.is_relevant_subset(&[0]));
        assert!(g.is_relevant_subset(&[1]));
        assert!(!g.is_relevant_subset(&[]));
    }

    #[test]
    fn four_gradings_proj() {
        let p1 = grading_1().proj().unwrap();
        assert_eq!(p1.system.len(), 1);
        assert_eq!(p1.system.ambient_rank(), 0);
        assert_eq!(p1.system.fan(0, 0).cones(), &[Cone::zero(0)]);

        assert_eq!(grading_2().proj().unwrap_err(), Error::EmptyProj);

        let p3 = grading_3().proj().unwrap();
        assert!(p3.system.is_valid());
        assert!(p3.system.is_separated().is_separated());
        assert!(p3.system.support_is_full().unwrap());
        assert!(p3.system.is_relabeling_of(&projective_line()));

        let p4 = grading_4().proj().unwrap();
        assert!(p4.system.is_valid());
        assert!(!p4.system.is_separated().is_separated());
        assert_eq!(p4.system, line_with_two_origins());
    }

    #[test]
    fn projective_plane() {
        let g = Grading::free(1, &[&[1], &[1], &[1]]);
        let p = g.proj().unwrap();
        assert!(p.system.is_valid());
        assert!(p.system.is_separated().is_separated());
        assert!(p.system.support_is_full().unwrap());
        let maximal: Vec<Cone> = (0..3)
            .map(|i| p.system.fan(i, i).maximal_cones()[0].clone())
            .collect();
        assert!(maximal.iter().all(|c| c.dim() == 2 && c.is_simplicial()));
        // q(e₁), q(e₂) is a basis of N; send it to the standard basis.
        let basis = IntMatrix::from_cols(2, &[p.kernel.col(0), p.kernel.col(1)]);
        assert!(basis.det() == Int::from(1) || basis.det() == Int::from(-1));
        let inv = crate::cone::unimodular_inverse(&basis);
        let mut mapped: Vec<Cone> = maximal.iter().map(|c| c.image(&inv).unwrap()).collect();
        mapped.sort();
        let hand = crate::sysfan::fixtures::projective_plane();
        let mut expected: Vec<Cone> = hand.fan(0, 0).maximal_cones().into_iter().cloned().collect();
        expected.sort();
        assert_eq!(mapped, expected);
    }

    #[test]
    fn exponent_coordinates() {
        let p = grading_3().proj().unwrap();
        let c = p.exponent_to_m(&ivec(&[2, -2])).unwrap();
        assert_eq!(p.m_to_exponent(&c), ivec(&[2, -2]));
        assert!(p.exponent_to_m(&ivec(&[1, 0])).is_none());
    }

    #[test]
    fn labels_round_trip() {
        for s in [vec![], vec![0], vec![0, 2, 3]] {
            assert_eq!(parse_subset_label(&subset_label(&s)).unwrap(), s);
        }
        assert!(parse_subset_label("1,2").is_err());
    }
}
