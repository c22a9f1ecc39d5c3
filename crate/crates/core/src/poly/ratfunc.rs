use std::fmt;

use super::dense::{Coeff, UniPoly};
use super::Rational;

/// Element of `Q(t)` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Option<Self> {
        if Coeff::is_zero(&den) {
            return None;
        }
        if Coeff::is_zero(&num) {
            return Some(Self::zero());
        }
        let g = Coeff::gcd(&num, &den);
        let num = num.div_poly_exact(&g).expect("gcd divides");
        let den = den.div_poly_exact(&g).expect("gcd divides");
        let lc = den.leading();
        Some(RatFunc {
            num: num.scale(&(Rational::from_int(1) / &lc)),
            den: den.scale(&(Rational::from_int(1) / &lc)),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        (self.den.deg() == 0).then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(&self.num)
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(Coeff::add(&self.num, &o.num), self.den.clone()).unwrap();
        }
        Self::new(
            Coeff::add(
                &Coeff::mul(&self.num, &o.den),
                &Coeff::mul(&o.num, &self.den),
            ),
            Coeff::mul(&self.den, &o.den),
        )
        .unwrap()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Self::new(Coeff::mul(&self.num, &o.num), Coeff::mul(&self.den, &o.den)).unwrap()
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: Coeff::neg(&self.num),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(UniPoly::from_int(n))
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            Self::zero()
        } else {
            Self::one()
        }
    }
    fn unit(&self) -> Self {
        if self.is_zero() {
            Self::one()
        } else {
            self.clone()
        }
    }
    fn is_field() -> bool {
        true
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.deg() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        // (t^2 - 1) / (2t + 2) = (t - 1)/2
        let r = RatFunc::new(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[2, 2])).unwrap();
        assert_eq!(r.denom(), &UniPoly::one());
        assert_eq!(
            r.numer(),
            &UniPoly::new(vec![
                Rational::new((-1).into(), 2.into()),
                Rational::new(1.into(), 2.into())
            ])
        );
        let s = RatFunc::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 1])).unwrap();
        assert_eq!(
            Coeff::mul(&s, &RatFunc::from_poly(UniPoly::from_ints(&[0, 1]))),
            RatFunc::one()
        );
        assert!(RatFunc::new(UniPoly::one(), UniPoly::zero()).is_none());
    }
}
