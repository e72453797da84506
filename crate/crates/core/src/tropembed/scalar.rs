//! `ℚ(t)` with the `t`-adic valuation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactla::{Int, Rat};
use crate::troppre::ExtReal;

/// A polynomial in `t` with rational coefficients, lowest degree first and
/// without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Vec<Rat>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        QPoly(vec![c]).trimmed()
    }

    /// `c·tᵏ`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        QPoly(v).trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        QPoly(coeffs).trimmed()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Order of vanishing at `t = 0`.
    pub fn ord(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    fn scale(&self, c: &Rat) -> QPoly {
        QPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dl = d.leading().expect("division by zero polynomial").clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        (QPoly(q).trimmed(), QPoly(r).trimmed())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(Rat::one() / l)),
            None => a,
        }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        let v = (0..n)
            .map(|i| {
                let a = self.0.get(i).cloned().unwrap_or_else(Rat::zero);
                let b = rhs.0.get(i).cloned().unwrap_or_else(Rat::zero);
                a + b
            })
            .collect();
        QPoly(v).trimmed()
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trimmed()
    }
}

/// An element `num/den` of `ℚ(t)`, kept in lowest terms with monic
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuedScalar {
    num: QPoly,
    den: QPoly,
}

impl ValuedScalar {
    pub fn new(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return ValuedScalar {
                num,
                den: QPoly::constant(Rat::one()),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = Rat::one() / den.leading().unwrap().clone();
        ValuedScalar {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::reduced(QPoly::constant(c), QPoly::constant(Rat::one()))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(Rat::from_integer(c.into()))
    }

    /// `c·tᵏ` for any integer `k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if k >= 0 {
            Self::reduced(QPoly::monomial(c, k as usize), QPoly::constant(Rat::one()))
        } else {
            Self::reduced(QPoly::constant(c), QPoly::monomial(Rat::one(), (-k) as usize))
        }
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `ord_t(num) − ord_t(den)`, and `∞` for zero.
    pub fn val(&self) -> ExtReal {
        match (self.num.ord(), self.den.ord()) {
            (Some(a), Some(b)) => ExtReal::Finite(Rat::from_integer(Int::from(a as i64 - b as i64))),
            _ => ExtReal::Infinity,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self * &i)
    }

    /// Integer power; `None` for negative powers of zero.
    pub fn pow(&self, e: &Int) -> Option<Self> {
        let neg = e < &Int::zero();
        let base = if neg { self.inv()? } else { self.clone() };
        let mut k: Int = if neg { -e.clone() } else { e.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let two = Int::from(2);
        while !k.is_zero() {
            if &k % &two == Int::one() {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k /= &two;
        }
        Some(acc)
    }

    /// Sparse `(coefficient, exponent)` terms of numerator or denominator.
    pub fn terms(p: &QPoly) -> Vec<(Rat, usize)> {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), k))
            .collect()
    }
}

impl Add for &ValuedScalar {
    type Output = ValuedScalar;
    fn add(self, rhs: &ValuedScalar) -> ValuedScalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ValuedScalar::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &ValuedScalar {
    type Output = ValuedScalar;
    fn sub(self, rhs: &ValuedScalar) -> ValuedScalar {
        self + &(-rhs)
    }
}

impl Neg for &ValuedScalar {
    type Output = ValuedScalar;
    fn neg(self) -> ValuedScalar {
        ValuedScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ValuedScalar {
    type Output = ValuedScalar;
    fn mul(self, rhs: &ValuedScalar) -> ValuedScalar {
        ValuedScalar::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

fn fmt_poly(p: &QPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let terms = ValuedScalar::terms(p);
    if terms.is_empty() {
        return write!(f, "0");
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(c, k)| match k {
            0 => format!("{c}"),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{k}"),
        })
        .collect();
    write!(f, "{}", parts.join(" + "))
}

impl fmt::Display for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::constant(Rat::one()) {
            return fmt_poly(&self.num, f);
        }
        write!(f, "(")?;
        fmt_poly(&self.num, f)?;
        write!(f, ")/(")?;
        fmt_poly(&self.den, f)?;
        write!(f, ")")
    }
}
