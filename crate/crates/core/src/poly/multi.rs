use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::{DensePoly, UniPoly};
use super::Rational;

/// The four variables of the ambient ring `Q[x0, x1, x2, t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X0,
    X1,
    X2,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X0, Var::X1, Var::X2, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X0 => "x0",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::T => "t",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector `(e0, e1, e2, et)`, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; 4];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    fn with(mut self, v: Var, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = [0; 4];
        for (slot, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&o.0)) {
            *slot = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x0, x1, x2, t` with rational coefficients.
///
/// Zero coefficients are never stored; terms are kept in graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(items: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in items {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) == 0)
    }

    /// Common degree in `vars` if every term has the same degree in them.
    pub fn homogeneous_degree(&self, vars: &[Var]) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| vars.iter().map(|v| m.exp(*v)).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of `v^k`, a polynomial free of `v`.
    pub fn coefficient_in(&self, v: Var, k: u32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Coefficients `[c0, c1, ..., cd]` with `self = sum ck v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Self::zero(); d + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.with(v, 0), c.clone());
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) > 0)
                .map(|(m, c)| {
                    let e = m.exp(v);
                    (m.with(v, e - 1), c * Rational::from_integer(e.into()))
                }),
        )
    }

    /// Replaces every occurrence of `v` by `q`.
    pub fn substitute(&self, v: Var, q: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Sets `v` to a rational value.
    pub fn evaluate_var(&self, v: Var, value: &Rational) -> Self {
        self.substitute(v, &Self::constant(value.clone()))
    }

    /// Value at a point `(x0, x1, x2, t)`.
    pub fn evaluate(&self, point: &[Rational; 4]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    term *= num_traits::pow(point[i].clone(), *e as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let t = Self::term(qc, qm);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Divides by the largest power of `v` dividing every term; returns the exponent.
    pub fn strip_var_power(&self, v: Var) -> (u32, MultiPoly) {
        let k = self.min_degree_in(v);
        let out = MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with(v, m.exp(v) - k), c.clone()))
                .collect(),
        };
        (k, out)
    }

    /// `(lambda, lambda * self)` with `lambda * self` having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn integral_primitive(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut lambda = Rational::new(den_lcm, num_gcd);
        if self.leading_term().unwrap().1.is_negative() {
            lambda = -lambda;
        }
        let p = self.scale(&lambda);
        (lambda, p)
    }

    /// Univariate view when the polynomial involves only `v`.
    pub fn to_univariate(&self, v: Var) -> Option<UniPoly> {
        if Var::ALL.iter().any(|w| *w != v && !self.is_free_of(*w)) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly, v: Var) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    /// View as a polynomial in `x` with coefficients in `Q[t]`; the
    /// polynomial must involve no other variable.
    pub fn to_dense_over_t(&self, x: Var) -> Option<DensePoly<UniPoly>> {
        if Var::ALL
            .iter()
            .any(|w| *w != x && *w != Var::T && !self.is_free_of(*w))
        {
            return None;
        }
        let coeffs = self
            .coefficients_in(x)
            .iter()
            .map(|c| c.to_univariate(Var::T).expect("only t remains"))
            .collect();
        Some(DensePoly::new(coeffs))
    }

    pub fn from_dense_over_t(p: &DensePoly<UniPoly>, x: Var) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            for (j, r) in c.coeffs().iter().enumerate() {
                out.add_term(Monomial::var(x, i as u32).with(Var::T, j as u32), r.clone());
            }
        }
        out
    }

    /// Binary form of degree `deg` in `(x, y)` from its dehomogenization in `x`.
    pub fn homogenize_dense(p: &DensePoly<UniPoly>, x: Var, y: Var, deg: u32) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            for (j, r) in c.coeffs().iter().enumerate() {
                let m = Monomial::var(x, i as u32)
                    .with(y, deg - i as u32)
                    .with(Var::T, j as u32);
                out.add_term(m, r.clone());
            }
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
