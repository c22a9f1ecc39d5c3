//! Dense univariate polynomials over an exact coefficient domain.
//!
//! The coefficient domain is abstracted by [`Coeff`] so the same code serves
//! `Q[t]` (coefficients in `Q`) and `Q[t][x]` (coefficients in `Q[t]`).
//! Greatest common divisors use the subresultant PRS on primitive parts, so
//! no fractions over the coefficient domain are ever formed.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exact arithmetic over a GCD domain of characteristic zero.
///
/// Methods take references and never consume; in generic code only these
/// methods are used so no operator overload is needed on the domain.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// `self / other` when the quotient exists in the domain.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// Unit-normal greatest common divisor; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;
    /// The unit `u` such that `self / u` is unit normal (one for zero).
    fn unit(&self) -> Self;

    /// Every nonzero element is a unit.
    fn is_field() -> bool {
        false
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_exact(&self.unit())
            .expect("units divide everything")
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(other) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn unit(&self) -> Self {
        if Zero::is_zero(self) {
            One::one()
        } else {
            self.clone()
        }
    }
    fn is_field() -> bool {
        true
    }
}

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

/// Polynomials in one variable over `Q`.
pub type UniPoly = DensePoly<Rational>;

impl<C: Coeff> DensePoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial reported as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if Coeff::is_zero(self) {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&C::from_int(i as i64)))
                .collect(),
        )
    }

    /// Evaluates at a point of the coefficient domain.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// `self(q)`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            Coeff::add(&Coeff::mul(&acc, q), &Self::constant(c.clone()))
        })
    }

    pub fn div_coeffs_exact(&self, c: &C) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Exact division returning `(quotient, remainder)` when every leading
    /// coefficient division on the way is exact in the coefficient domain.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].div_exact(&lc)?;
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].sub(&c.mul(dc));
            }
            quot[shift] = c;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn div_poly_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        Coeff::is_zero(&r).then_some(q)
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return self.clone();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut steps = ds - dd + 1;
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            let shift = top - dd;
            for r in rem.iter_mut() {
                *r = r.mul(&lc);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].sub(&c.mul(dc));
            }
            steps -= 1;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        let fix = lc.pow(steps as u32);
        Self::new(rem).scale(&fix)
    }

    /// Gcd of the coefficients, unit normal.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g == C::one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with unit-normal leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if Coeff::is_zero(self) {
            return self.clone();
        }
        let c = self.content();
        let p = self.div_coeffs_exact(&c).expect("content divides");
        p.div_coeffs_exact(&p.leading().unit())
            .expect("unit divides")
    }

    /// Square-free decomposition `[s1, s2, ...]` with `self ~ s1 * s2^2 * ...`
    /// up to a unit. `self` must be primitive; trailing unit factors are dropped.
    pub fn squarefree_factors(&self) -> Vec<Self> {
        if self.deg() == 0 {
            return Vec::new();
        }
        let fp = self.derivative();
        let a0 = Coeff::gcd(self, &fp);
        let mut b = self.div_poly_exact(&a0).expect("gcd divides f");
        let c = fp.div_poly_exact(&a0).expect("gcd divides f'");
        let mut d = Coeff::sub(&c, &b.derivative());
        let mut out = Vec::new();
        while b.deg() > 0 {
            let a = Coeff::gcd(&b, &d);
            b = b.div_poly_exact(&a).expect("gcd divides b");
            let c = d.div_poly_exact(&a).expect("gcd divides d");
            d = Coeff::sub(&c, &b.derivative());
            out.push(a);
        }
        while out.last().is_some_and(|p| p.deg() == 0) {
            out.pop();
        }
        out
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return Self::one();
        }
        let p = self.primitive_part();
        let g = Coeff::gcd(&p, &p.derivative());
        p.div_poly_exact(&g).expect("gcd divides").primitive_part()
    }

    /// Monic remainder sequence; only valid over a field.
    fn euclid_gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.normalized(), b.normalized());
        while !Coeff::is_zero(&b) {
            let (_, r) = a.div_rem(&b).expect("division by a monic polynomial");
            a = b;
            b = r.normalized();
        }
        a
    }

    fn subresultant_gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = if a.deg() >= b.deg() {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        let mut g = C::one();
        let mut h = C::one();
        loop {
            let delta = (a.deg() - b.deg()) as u32;
            let r = a.pseudo_rem(&b);
            if Coeff::is_zero(&r) {
                return b.primitive_part();
            }
            if r.deg() == 0 {
                return Self::one();
            }
            a = b;
            let divisor = g.mul(&h.pow(delta));
            b = r
                .div_coeffs_exact(&divisor)
                .expect("subresultant PRS divisions are exact");
            g = a.leading();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => g
                    .pow(delta)
                    .div_exact(&h.pow(delta - 1))
                    .expect("subresultant PRS divisions are exact"),
            };
        }
    }
}

impl<C: Coeff> Coeff for DensePoly<C> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div_poly_exact(other)
    }
    fn gcd(&self, other: &Self) -> Self {
        match (Coeff::is_zero(self), Coeff::is_zero(other)) {
            (true, true) => Self::zero(),
            (true, false) => other.normalized(),
            (false, true) => self.normalized(),
            (false, false) if C::is_field() => Self::euclid_gcd(self, other),
            (false, false) => {
                let c = self.content().gcd(&other.content());
                let g = Self::subresultant_gcd(&self.primitive_part(), &other.primitive_part());
                g.scale(&c).normalized()
            }
        }
    }
    fn unit(&self) -> Self {
        Self::constant(self.leading().unit())
    }
}

impl UniPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Self {
        self.normalized()
    }

    /// Multiplicity of the square-free polynomial `p` in `self`
    /// (`u32::MAX` for the zero polynomial).
    pub fn valuation(&self, p: &UniPoly) -> u32 {
        if Coeff::is_zero(self) {
            return u32::MAX;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_poly_exact(p) {
            cur = q;
            v += 1;
        }
        v
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn has_positive_leading(&self) -> bool {
        self.leading().is_positive()
    }
}

impl<C: Coeff + fmt::Debug> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::MultiPoly::from_univariate(self, super::Var::T).fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_over_q() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = Coeff::mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = Coeff::mul(&p(&[-1, 1]), &p(&[-3, 1]));
        assert_eq!(Coeff::gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(Coeff::gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
    }

    #[test]
    fn squarefree_over_q() {
        // x^3 (x+1)^2 (x-2)
        let f = [
            p(&[0, 1]),
            p(&[0, 1]),
            p(&[0, 1]),
            p(&[1, 1]),
            p(&[1, 1]),
            p(&[-2, 1]),
        ]
        .iter()
        .fold(UniPoly::one(), |acc, q| Coeff::mul(&acc, q));
        let s = f.squarefree_factors();
        assert_eq!(s, vec![p(&[-2, 1]), p(&[1, 1]), p(&[0, 1])]);
        assert_eq!(
            f.squarefree_part(),
            Coeff::mul(&Coeff::mul(&p(&[0, 1]), &p(&[1, 1])), &p(&[-2, 1]))
        );
    }

    #[test]
    fn gcd_over_q_t() {
        // polynomials in x with coefficients in Q[t]:
        // (t x + 1)(x - t) and (t x + 1)(x + 1)
        type P = DensePoly<UniPoly>;
        let tx1 = P::new(vec![p(&[1]), p(&[0, 1])]);
        let xmt = P::new(vec![p(&[0, -1]), p(&[1])]);
        let xp1 = P::new(vec![p(&[1]), p(&[1])]);
        let a = Coeff::mul(&tx1, &xmt);
        let b = Coeff::mul(&tx1, &xp1);
        assert_eq!(Coeff::gcd(&a, &b), tx1);
        let sq = Coeff::mul(&a, &tx1);
        assert_eq!(sq.squarefree_factors(), vec![xmt, tx1]);
    }

    #[test]
    fn pseudo_remainder() {
        let a = p(&[1, 0, 3]);
        let b = p(&[1, 2]);
        // 4 * (3x^2 + 1) = (6x - 3)(2x + 1) + 7
        assert_eq!(a.pseudo_rem(&b), p(&[7]));
    }

    #[test]
    fn valuation_counts_multiplicity() {
        let f = Coeff::mul(&p(&[0, 0, 0, 1]), &p(&[1, 1]));
        assert_eq!(f.valuation(&p(&[0, 1])), 3);
        assert_eq!(f.valuation(&p(&[1, 1])), 1);
        assert_eq!(f.valuation(&p(&[2, 1])), 0);
    }
}
