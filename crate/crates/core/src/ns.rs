//! Divisor classes on a rational elliptic surface viewed as the plane blown
//! up in nine points, in the basis `H, E1, ..., E9` (optionally extended by
//! further exceptional classes `E10, E11, ...` for blow-ups of the surface).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of points blown up to reach a rational elliptic surface.
pub const BASE_POINTS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsError {
    #[error("class {0} is not a section (needs C^2 = -1 and C.(-K) = 1)")]
    NotASection(DivisorClass),
    #[error("sections meet with multiplicity {0}, expected 1")]
    WrongIntersection(i64),
    #[error("a divisor class needs at least one coordinate")]
    Empty,
}

/// `d*H - m1*E1 - ... - mk*Ek`, stored as `[d, m1, ..., mk]`.
///
/// Missing trailing coordinates count as zero, so classes with different
/// numbers of exceptional coordinates can be compared and paired.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DivisorClass {
    coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Result<Self, NsError> {
        if coords.is_empty() {
            return Err(NsError::Empty);
        }
        Ok(DivisorClass { coords })
    }

    pub fn from_degree_and_multiplicities(d: i64, mults: &[i64]) -> Self {
        let mut coords = Vec::with_capacity(mults.len() + 1);
        coords.push(d);
        coords.extend_from_slice(mults);
        DivisorClass { coords }
    }

    pub fn hyperplane() -> Self {
        Self::from_degree_and_multiplicities(1, &[0; BASE_POINTS])
    }

    /// The exceptional class `E_i`, 1-based.
    pub fn exceptional(i: usize) -> Self {
        assert!(i >= 1, "exceptional classes are numbered from 1");
        let mut coords = vec![0; (i + 1).max(BASE_POINTS + 1)];
        // E_i enters with multiplicity -1 in d*H - sum m_j E_j
        coords[i] = -1;
        DivisorClass { coords }
    }

    /// `-K = 3H - E1 - ... - E9`, also the class of a fiber.
    pub fn anticanonical() -> Self {
        Self::from_degree_and_multiplicities(3, &[1; BASE_POINTS])
    }

    pub fn degree(&self) -> i64 {
        self.coords[0]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn coord(&self, i: usize) -> i64 {
        self.coords.get(i).copied().unwrap_or(0)
    }

    fn len(&self) -> usize {
        self.coords.len()
    }

    /// Intersection number `d1*d2 - sum m1i*m2i`.
    pub fn pairing(&self, other: &DivisorClass) -> i64 {
        let n = self.len().max(other.len());
        let mut acc = self.degree() * other.degree();
        for i in 1..n {
            acc -= self.coord(i) * other.coord(i);
        }
        acc
    }

    pub fn self_intersection(&self) -> i64 {
        self.pairing(self)
    }

    pub fn anticanonical_degree(&self) -> i64 {
        self.pairing(&Self::anticanonical())
    }

    /// `D^2 = 0` and `D.(-K) = 2`. Effectivity is not checked.
    pub fn is_conic_class(&self) -> bool {
        self.self_intersection() == 0 && self.anticanonical_degree() == 2
    }

    /// `C^2 = -1` and `C.(-K) = 1`.
    pub fn is_section(&self) -> bool {
        self.self_intersection() == -1 && self.anticanonical_degree() == 1
    }

    /// The positive `k` with `D = k(-K)`, if any.
    pub fn fiber_multiple(&self) -> Option<i64> {
        let k = self.degree();
        if k <= 0 || k % 3 != 0 {
            return None;
        }
        let k = k / 3;
        (*self == Self::anticanonical() * k).then_some(k)
    }

    pub fn is_fiber_class(&self) -> bool {
        self.fiber_multiple().is_some()
    }

    /// Two sections meeting transversally in one point add up to a conic class.
    pub fn conic_from_sections(
        c1: &DivisorClass,
        c2: &DivisorClass,
    ) -> Result<DivisorClass, NsError> {
        for c in [c1, c2] {
            if !c.is_section() {
                return Err(NsError::NotASection(c.clone()));
            }
        }
        let m = c1.pairing(c2);
        if m != 1 {
            return Err(NsError::WrongIntersection(m));
        }
        let d = c1 + c2;
        debug_assert!(d.is_conic_class());
        Ok(d)
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(i64, i64) -> i64) -> DivisorClass {
        let n = self.len().max(other.len());
        DivisorClass {
            coords: (0..n).map(|i| f(self.coord(i), other.coord(i))).collect(),
        }
    }
}

impl TryFrom<Vec<i64>> for DivisorClass {
    type Error = NsError;
    fn try_from(coords: Vec<i64>) -> Result<Self, NsError> {
        DivisorClass::new(coords)
    }
}

impl From<DivisorClass> for Vec<i64> {
    fn from(d: DivisorClass) -> Vec<i64> {
        d.coords
    }
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| self.coord(i) == other.coord(i))
    }
}

impl Eq for DivisorClass {}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self * -1
    }
}

impl Mul<i64> for DivisorClass {
    type Output = DivisorClass;
    fn mul(self, k: i64) -> DivisorClass {
        DivisorClass {
            coords: self.coords.into_iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: i64, name: String| -> fmt::Result {
            if c == 0 {
                return Ok(());
            }
            let sign = if c < 0 { "-" } else { "+" };
            let abs = c.unsigned_abs();
            match (first, c < 0) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            f.write_str(&name)
        };
        term(f, self.degree(), "H".into())?;
        for i in 1..self.len() {
            term(f, -self.coords[i], format!("E{i}"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> DivisorClass {
        DivisorClass::hyperplane()
    }
    fn e(i: usize) -> DivisorClass {
        DivisorClass::exceptional(i)
    }
    fn k() -> DivisorClass {
        DivisorClass::anticanonical()
    }

    #[test]
    fn pairing_basics() {
        assert_eq!(h().pairing(&h()), 1);
        assert_eq!(e(1).pairing(&e(1)), -1);
        assert_eq!(k().pairing(&k()), 0);
        assert_eq!(k().pairing(&e(1)), 1);
        assert_eq!(k().pairing(&h()), 3);
    }

    #[test]
    fn conic_classes() {
        assert!((h() - e(2)).is_conic_class());
        let d = h() * 2 - e(1) - e(2) - e(3) - e(4);
        assert!(d.is_conic_class());
        assert!(!h().is_conic_class());
    }

    #[test]
    fn sections() {
        assert!(e(1).is_section());
        assert!((h() - e(1) - e(2)).is_section());
        assert!(!(h() - e(1)).is_section());
    }

    #[test]
    fn conics_from_sections() {
        let c = DivisorClass::conic_from_sections(&e(1), &(h() - e(1) - e(2))).unwrap();
        assert_eq!(c, h() - e(2));
        assert_eq!(
            DivisorClass::conic_from_sections(&e(1), &e(2)),
            Err(NsError::WrongIntersection(0))
        );
        assert!(matches!(
            DivisorClass::conic_from_sections(&h(), &e(1)),
            Err(NsError::NotASection(_))
        ));
    }

    #[test]
    fn fiber_classes() {
        assert!(k().is_fiber_class());
        assert!(!(h() - e(2)).is_fiber_class());
        assert_eq!((k() * 2).fiber_multiple(), Some(2));
        assert_eq!((-k()).fiber_multiple(), None);
    }

    #[test]
    fn extended_basis() {
        // E10 lives on a further blow-up; it pairs to zero with -K of R.
        let e10 = e(10);
        assert_eq!(e10.coords().len(), 11);
        assert_eq!(e10.self_intersection(), -1);
        assert_eq!(e10.pairing(&k()), 0);
        assert_eq!(e(3), DivisorClass::new(vec![0, 0, 0, -1]).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!((h() - e(2)).to_string(), "H - E2");
        assert_eq!(
            k().to_string(),
            "3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9"
        );
        assert_eq!(e(1).to_string(), "E1");
        assert_eq!((-e(1)).to_string(), "-E1");
    }

    #[test]
    fn json_form() {
        let d: DivisorClass = serde_json::from_str("[1,0,1,0,0,0,0,0,0,0]").unwrap();
        assert_eq!(d, h() - e(2));
        assert_eq!(
            serde_json::to_string(&k()).unwrap(),
            "[3,1,1,1,1,1,1,1,1,1]"
        );
    }
}
