//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Matrices are
//! dense and row-major; the sizes that show up in lattice computations for
//! toric geometry are small, so the algorithms favour clarity over speed.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn ivec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Int]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + x * rat_from_int(y))
}

pub fn gcd_of(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of a nonzero integer vector.
pub fn primitive(v: &[Int]) -> IntVec {
    let g = gcd_of(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing in the same direction.
pub fn primitive_from_rat(v: &[Rat]) -> IntVec {
    let l = v
        .iter()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVec = v.iter().map(|x| (x * rat_from_int(&l)).to_integer()).collect();
    primitive(&ints)
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from rows. `cols` is needed so that an empty row list
    /// still knows its width.
    pub fn from_rows(cols: usize, rows: &[IntVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVec> = rows.iter().map(|r| ivec(r)).collect();
        Self::from_rows(cols, &rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[IntVec]) -> Self {
        Self::from_rows(rows, cols).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> IntVec {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Int]) -> IntVec {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> RatVec {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| dot_rat(v, self.row(r)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<IntVec> = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self[(r, c)].clone()).collect())
            .collect();
        Self::from_rows(cols.len(), &rows)
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let rows: Vec<IntVec> = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend_from_slice(other.row(r));
                v
            })
            .collect();
        Self::from_rows(self.cols + other.cols, &rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss_det(self.to_rows())
    }

    pub fn rank(&self) -> usize {
        rank_int(&self.to_rows(), self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self[(src, c)] * k;
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self[(r, src)] * k;
            self[(r, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * &rhs[(k, c)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (i, x) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn bareiss_det(mut m: Vec<IntVec>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank over ℚ of the given rows.
pub fn rank_int(rows: &[IntVec], cols: usize) -> usize {
    let rows: Vec<RatVec> = rows
        .iter()
        .map(|r| r.iter().map(rat_from_int).collect())
        .collect();
    row_echelon(rows, cols).len()
}

/// Reduced row echelon form over ℚ; returns the nonzero rows together with
/// their pivot columns.
fn row_echelon(mut rows: Vec<RatVec>, cols: usize) -> Vec<(usize, RatVec)> {
    let mut out: Vec<(usize, RatVec)> = Vec::new();
    let mut r0 = 0;
    for c in 0..cols {
        let Some(p) = (r0..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(r0, p);
        let inv = rows[r0][c].recip();
        for x in rows[r0].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != r0 && !rows[r][c].is_zero() {
                let k = rows[r][c].clone();
                for j in 0..cols {
                    let v = &k * &rows[r0][j];
                    rows[r][j] -= v;
                }
            }
        }
        r0 += 1;
    }
    for (i, row) in rows.into_iter().take(r0).enumerate() {
        let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
        debug_assert!(i <= pivot);
        out.push((pivot, row));
    }
    out
}

/// Some rational solution of `A x = b`, or `None` when inconsistent.
pub fn solve_rational(a: &IntMatrix, b: &[Rat]) -> Option<RatVec> {
    assert_eq!(a.nrows(), b.len());
    let n = a.ncols();
    let rows: Vec<RatVec> = (0..a.nrows())
        .map(|r| {
            let mut v: RatVec = a.row(r).iter().map(rat_from_int).collect();
            v.push(b[r].clone());
            v
        })
        .collect();
    let ech = row_echelon(rows, n + 1);
    let mut x = vec![Rat::zero(); n];
    for (pivot, row) in ech {
        if pivot == n {
            return None;
        }
        x[pivot] = row[n].clone();
    }
    Some(x)
}

/// Basis of the rational null space `{x : A x = 0}`.
pub fn nullspace_rational(a: &IntMatrix) -> Vec<RatVec> {
    let n = a.ncols();
    let rows: Vec<RatVec> = a
        .to_rows()
        .iter()
        .map(|r| r.iter().map(rat_from_int).collect())
        .collect();
    let ech = row_echelon(rows, n);
    let pivots: Vec<usize> = ech.iter().map(|(p, _)| *p).collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (p, row) in &ech {
            v[*p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Result of [`hermite_normal_form`]: `h = u · a`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Number of nonzero rows of `h` (they come first).
    pub rank: usize,
}

/// Row-style Hermite normal form.
///
/// The pivots of `h` are positive, strictly increase in column index from
/// row to row, and every entry above a pivot lies in `[0, pivot)`. Zero rows
/// are moved to the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> Hnf {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut p = 0;
    for c in 0..n {
        if p == m {
            break;
        }
        loop {
            let best = (p..m)
                .filter(|&r| !h[(r, c)].is_zero())
                .min_by(|&x, &y| h[(x, c)].abs().cmp(&h[(y, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(p, best);
            u.swap_rows(p, best);
            let mut done = true;
            for r in p + 1..m {
                if h[(r, c)].is_zero() {
                    continue;
                }
                let q = h[(r, c)].div_floor(&h[(p, c)]);
                let k = -q;
                h.add_row_multiple(r, p, &k);
                u.add_row_multiple(r, p, &k);
                if !h[(r, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(p, c)].is_zero() {
            continue;
        }
        if h[(p, c)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for r in 0..p {
            let q = h[(r, c)].div_floor(&h[(p, c)]);
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(r, p, &k);
                u.add_row_multiple(r, p, &k);
            }
        }
        p += 1;
    }
    Hnf { h, u, rank: p }
}

/// Result of [`smith_normal_form`]: `d = p · a · q`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<Int> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with non-negative diagonal `d₁ | d₂ | …`.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let m = a.nrows();
    let n = a.ncols();
    let mut d = a.clone();
    let mut p = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Snf { d, p, q };
            };
            d.swap_rows(t, bi);
            p.swap_rows(t, bi);
            d.swap_cols(t, bj);
            q.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let k = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &k);
                p.add_row_multiple(i, t, &k);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let k = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &k);
                q.add_col_multiple(j, t, &k);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = Int::one();
                    d.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    Snf { d, p, q }
}

/// A lattice of the given rank, optionally embedded in a parent `ℤⁿ` by the
/// rows of `embedding`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    rank: usize,
    embedding: Option<IntMatrix>,
}

impl Lattice {
    pub fn standard(rank: usize) -> Self {
        Lattice {
            rank,
            embedding: None,
        }
    }

    /// Sublattice spanned by the rows of `basis`; rows must be independent.
    pub fn embedded(basis: IntMatrix) -> Self {
        debug_assert_eq!(basis.rank(), basis.nrows());
        Lattice {
            rank: basis.nrows(),
            embedding: Some(basis),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn embedding(&self) -> Option<&IntMatrix> {
        self.embedding.as_ref()
    }

    /// Basis vectors in the parent lattice (the standard basis when the
    /// lattice is not embedded).
    pub fn basis(&self) -> Vec<IntVec> {
        match &self.embedding {
            Some(b) => b.to_rows(),
            None => IntMatrix::identity(self.rank).to_rows(),
        }
    }

    /// Integer coordinates of `v` in this lattice's basis, if `v` lies in it.
    pub fn coordinates(&self, v: &[Int]) -> Option<IntVec> {
        match &self.embedding {
            None => Some(v.to_vec()),
            Some(b) => solve_integer(&b.transpose(), v),
        }
    }
}

/// Saturated lattice `{v ∈ ℤⁿ : A v = 0}` in canonical (HNF) basis.
pub fn kernel_lattice(a: &IntMatrix) -> Lattice {
    let n = a.ncols();
    let hnf = hermite_normal_form(&a.transpose());
    let rows: Vec<IntVec> = (hnf.rank..n).map(|r| hnf.u.row(r).to_vec()).collect();
    if rows.is_empty() {
        return Lattice::embedded(IntMatrix::zeros(0, n));
    }
    let canon = hermite_normal_form(&IntMatrix::from_rows(n, &rows));
    let basis: Vec<IntVec> = (0..canon.rank).map(|r| canon.h.row(r).to_vec()).collect();
    Lattice::embedded(IntMatrix::from_rows(n, &basis))
}

/// Saturation `span_ℚ(rows) ∩ ℤⁿ`, canonical basis.
pub fn saturated_span(rows: &[IntVec], n: usize) -> Lattice {
    let perp = kernel_lattice(&IntMatrix::from_rows(n, rows));
    kernel_lattice(&IntMatrix::from_rows(n, &perp.basis()))
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[Int]) -> Option<IntVec> {
    assert_eq!(a.nrows(), b.len());
    let snf = smith_normal_form(a);
    let pb = snf.p.mul_vec(b);
    let mut y = vec![Int::zero(); a.ncols()];
    for (i, rhs) in pb.iter().enumerate() {
        let di = if i < a.ncols() {
            snf.d[(i, i)].clone()
        } else {
            Int::zero()
        };
        if di.is_zero() {
            if !rhs.is_zero() {
                return None;
            }
        } else {
            let (quot, rem) = rhs.div_rem(&di);
            if !rem.is_zero() {
                return None;
            }
            y[i] = quot;
        }
    }
    Some(snf.q.mul_vec(&y))
}

/// A finitely generated abelian group `ℤ^r ⊕ ⊕ₖ ℤ/mₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<Int>,
}

impl FgAbelianGroup {
    /// Torsion orders must be positive; trivial factors `ℤ/1` are dropped.
    pub fn new(free_rank: usize, torsion: Vec<Int>) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|m| !m.is_positive()) {
            return Err(Error::Invalid(format!("torsion order {bad} must be positive")));
        }
        Ok(FgAbelianGroup {
            free_rank,
            torsion: torsion.into_iter().filter(|m| !m.is_one()).collect(),
        })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    /// Length of an element's coordinate vector.
    pub fn width(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Reduces torsion coordinates into `[0, mₖ)`.
    pub fn reduce(&self, v: &[Int]) -> IntVec {
        assert_eq!(v.len(), self.width());
        let mut out = v.to_vec();
        for (k, m) in self.torsion.iter().enumerate() {
            out[self.free_rank + k] = v[self.free_rank + k].mod_floor(m);
        }
        out
    }

    /// Columns `mₖ e_{r+k}` generating the relations.
    fn relation_columns(&self) -> Vec<IntVec> {
        self.torsion
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let mut v = vec![Int::zero(); self.width()];
                v[self.free_rank + k] = m.clone();
                v
            })
            .collect()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for m in &self.torsion {
            parts.push(format!("Z/{m}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Index of the subgroup generated by `columns` inside `group`, or `None`
/// when the index is infinite.
pub fn cokernel_index(columns: &[IntVec], group: &FgAbelianGroup) -> Option<Int> {
    let w = group.width();
    let mut cols: Vec<IntVec> = columns.to_vec();
    for c in &cols {
        assert_eq!(c.len(), w, "group element has the wrong width");
    }
    cols.extend(group.relation_columns());
    if w == 0 {
        return Some(Int::one());
    }
    let snf = smith_normal_form(&IntMatrix::from_cols(w, &cols));
    let factors = snf.invariant_factors();
    if factors.len() < w {
        return None;
    }
    Some(factors.iter().product())
}

/// `(finite, index)` for the subgroup generated by `columns`.
pub fn cokernel_is_finite(columns: &[IntVec], group: &FgAbelianGroup) -> (bool, Option<Int>) {
    let idx = cokernel_index(columns, group);
    (idx.is_some(), idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn hnf_identity_and_diagonal() {
        let id = IntMatrix::identity(2);
        let r = hermite_normal_form(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
        let d = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(hermite_normal_form(&d).h, d);
    }

    #[test]
    fn hnf_matches_hand_row_reduction() {
        // [[1,1],[1,-1]]: subtract row 0 from row 1 -> [0,-2], negate -> [0,2],
        // reduce the entry above the pivot 2 into [0,2) -> 1 stays.
        let a = m(&[&[1, 1], &[1, -1]]);
        let r = hermite_normal_form(&a);
        assert_eq!(r.h, m(&[&[1, 1], &[0, 2]]));
        assert_eq!(&r.u * &a, r.h);
        assert!(r.u.det().abs().is_one());
    }

    #[test]
    fn snf_small_cases() {
        let d = m(&[&[1, 0], &[0, 2]]);
        assert_eq!(smith_normal_form(&d).d, d);
        let a = m(&[&[1, 1], &[1, -1]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, m(&[&[1, 0], &[0, 2]]));
        assert_eq!(&(&s.p * &a) * &s.q, s.d);
        let z = IntMatrix::zeros(2, 3);
        assert!(smith_normal_form(&z).d.is_zero());
    }

    #[test]
    fn snf_enforces_divisibility() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), ivec(&[1, 6]));
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel_lattice(&m(&[&[1, -1]])).basis(), vec![ivec(&[1, 1])]);
        assert_eq!(kernel_lattice(&m(&[&[1, 1]])).basis(), vec![ivec(&[1, -1])]);
        assert_eq!(kernel_lattice(&IntMatrix::identity(3)).rank(), 0);
        // saturated: ker [2, 4] is spanned by (-2, 1), not (-4, 2)
        let k = kernel_lattice(&m(&[&[2, 4]]));
        assert_eq!(k.basis(), vec![ivec(&[2, -1])]);
    }

    #[test]
    fn subgroup_index() {
        let z2 = FgAbelianGroup::free(2);
        assert_eq!(
            cokernel_is_finite(&[ivec(&[1, 0]), ivec(&[0, 1])], &z2),
            (true, Some(int(1)))
        );
        assert_eq!(cokernel_is_finite(&[ivec(&[1, 0])], &z2), (false, None));
        assert_eq!(
            cokernel_index(&[ivec(&[2, 0]), ivec(&[0, 2])], &z2),
            Some(int(4))
        );
        let zt = FgAbelianGroup::new(1, vec![int(2)]).unwrap();
        assert_eq!(cokernel_index(&[ivec(&[1, 0])], &zt), Some(int(2)));
        // (a, b) ↦ a + b mod 2 kills (1, 1)
        assert_eq!(cokernel_index(&[ivec(&[1, 1])], &zt), Some(int(2)));
        assert_eq!(cokernel_index(&[ivec(&[1, 0]), ivec(&[0, 1])], &zt), Some(int(1)));
        assert_eq!(cokernel_index(&[], &FgAbelianGroup::free(0)), Some(int(1)));
    }

    #[test]
    fn integer_solve() {
        let a = m(&[&[2, 4]]);
        assert_eq!(solve_integer(&a, &ivec(&[3])), None);
        let x = solve_integer(&a, &ivec(&[6])).unwrap();
        assert_eq!(a.mul_vec(&x), ivec(&[6]));
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-4").unwrap(), rat(-4, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn bareiss() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), int(-2));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), int(0));
    }
}
