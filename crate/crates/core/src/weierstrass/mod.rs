//! From a double plane and a pencil of curves to a Weierstrass model, and
//! from a Weierstrass model to its singular fibers.

use thiserror::Error;

use crate::fiber::FiberError;
use crate::poly::{Coeff, MultiPoly, PolyError, RatFunc, UniPoly, Var};

mod extract;
mod isogeny;
mod places;
mod quartic;

pub use extract::{extract_genus_one_fibration, DoubleCoverModel, GenusOneQuartic, PencilModel};
pub use isogeny::two_isogeny_quotient;
pub use places::{
    fiber_configuration_of, kodaira_type_at_place, singular_places, torsion_marking_at_place,
    Place, PlaceFiber, PlaceValuations,
};
pub use quartic::{parse_ratfunc, quartic_to_weierstrass, QuarticPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeierstrassError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error("{what} must be a homogeneous cubic in x0, x1, x2 without t")]
    InvalidCubic { what: &'static str },
    #[error("the cubics share a common factor")]
    CommonFactor,
    #[error(
        "pencil must be homogeneous of degree 1..=3 in x0, x1, x2, linear in t, and involve x1"
    )]
    InvalidPencil,
    #[error("square-free part has degree {degree} in (x0, x2), expected 4")]
    NotAConicBundlePencil { degree: u32 },
    #[error("quartic must be c(t) * b(x0, x2, t) with b a binary quartic and c a nonzero polynomial in t")]
    InvalidQuartic,
    #[error("point does not lie on the quartic")]
    NoSectionGiven,
    #[error("quartic has identically vanishing discriminant")]
    SingularQuartic,
    #[error("Weierstrass coefficients must be polynomials in t")]
    NotInT,
    #[error("discriminant vanishes identically")]
    SingularModel,
    #[error("model is not in two-torsion form")]
    NotTwoTorsionForm,
    #[error("isogenous curve is singular: b * (a^2 - 4b) vanishes identically")]
    SingularInput,
    #[error("place must be a non-constant monic square-free polynomial in t")]
    InvalidPlace,
    #[error("roots of the place have different valuations")]
    NonUniformPlace,
    #[error("model cannot be minimalized at the place")]
    NotMinimalizable,
    #[error("valuations ({v_c4:?}, {v_c6:?}, {v_delta}) match no fiber type")]
    AmbiguousValuations {
        v_c4: Option<u32>,
        v_c6: Option<u32>,
        v_delta: u32,
    },
}

/// An elliptic curve over `Q(t)` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeierstrassModel {
    /// `y^2 = x^3 + a4(t) x + a6(t)`
    Short { a4: MultiPoly, a6: MultiPoly },
    /// `y^2 = x (x^2 + a(t) x + b(t))`, with `(0, 0)` of order two.
    TwoTorsion { a: MultiPoly, b: MultiPoly },
}

fn in_t(p: &MultiPoly) -> Result<UniPoly, WeierstrassError> {
    p.to_univariate(Var::T).ok_or(WeierstrassError::NotInT)
}

impl WeierstrassModel {
    pub fn short(a4: MultiPoly, a6: MultiPoly) -> Result<Self, WeierstrassError> {
        Self::checked(WeierstrassModel::Short { a4, a6 })
    }

    pub fn two_torsion(a: MultiPoly, b: MultiPoly) -> Result<Self, WeierstrassError> {
        Self::checked(WeierstrassModel::TwoTorsion { a, b })
    }

    fn checked(model: Self) -> Result<Self, WeierstrassError> {
        let (p, q) = model.coefficients();
        in_t(p)?;
        in_t(q)?;
        if Coeff::is_zero(&model.discriminant()) {
            return Err(WeierstrassError::SingularModel);
        }
        Ok(model)
    }

    fn coefficients(&self) -> (&MultiPoly, &MultiPoly) {
        match self {
            WeierstrassModel::Short { a4, a6 } => (a4, a6),
            WeierstrassModel::TwoTorsion { a, b } => (a, b),
        }
    }

    fn uni(&self) -> (UniPoly, UniPoly) {
        let (p, q) = self.coefficients();
        (
            in_t(p).expect("validated on construction"),
            in_t(q).expect("validated on construction"),
        )
    }

    pub fn c4(&self) -> UniPoly {
        let (p, q) = self.uni();
        match self {
            WeierstrassModel::Short { .. } => p.scale(&int(-48)),
            WeierstrassModel::TwoTorsion { .. } => p.mul(&p).sub(&q.scale(&int(3))).scale(&int(16)),
        }
    }

    pub fn c6(&self) -> UniPoly {
        let (p, q) = self.uni();
        match self {
            WeierstrassModel::Short { .. } => q.scale(&int(-864)),
            WeierstrassModel::TwoTorsion { .. } => {
                let inner = p.mul(&p).scale(&int(2)).sub(&q.scale(&int(9)));
                p.mul(&inner).scale(&int(-32))
            }
        }
    }

    pub fn discriminant(&self) -> UniPoly {
        let (p, q) = self.uni();
        match self {
            WeierstrassModel::Short { .. } => {
                let cube = p.pow(3).scale(&int(4));
                let square = q.mul(&q).scale(&int(27));
                cube.add(&square).scale(&int(-16))
            }
            WeierstrassModel::TwoTorsion { .. } => {
                let disc = p.mul(&p).sub(&q.scale(&int(4)));
                q.mul(&q).mul(&disc).scale(&int(16))
            }
        }
    }

    /// `j = c4^3 / Delta`.
    pub fn j_invariant(&self) -> RatFunc {
        RatFunc::new(self.c4().pow(3), self.discriminant()).expect("discriminant is nonzero")
    }

    /// The same curve as `y^2 = x^3 - 27 c4 x - 54 c6`.
    pub fn to_short(&self) -> WeierstrassModel {
        match self {
            WeierstrassModel::Short { .. } => self.clone(),
            WeierstrassModel::TwoTorsion { .. } => WeierstrassModel::Short {
                a4: MultiPoly::from_univariate(&self.c4().scale(&int(-27)), Var::T),
                a6: MultiPoly::from_univariate(&self.c6().scale(&int(-54)), Var::T),
            },
        }
    }
}

fn int(n: i64) -> crate::poly::Rational {
    crate::poly::Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn invariants_satisfy_the_syzygy() {
        for model in [
            WeierstrassModel::short(p("t^2 + 1"), p("t^3 - t")).unwrap(),
            WeierstrassModel::two_torsion(p("t + 2"), p("t^2 - 3")).unwrap(),
        ] {
            let lhs = model.c4().pow(3).sub(&model.c6().pow(2));
            assert_eq!(lhs, model.discriminant().scale(&int(1728)));
        }
    }

    #[test]
    fn rejects_bad_models() {
        assert_eq!(
            WeierstrassModel::short(p("x0"), p("1")),
            Err(WeierstrassError::NotInT)
        );
        assert_eq!(
            WeierstrassModel::two_torsion(p("2*t"), p("t^2")),
            Err(WeierstrassError::SingularModel)
        );
        assert_eq!(
            WeierstrassModel::short(p("0"), p("0")),
            Err(WeierstrassError::SingularModel)
        );
    }

    #[test]
    fn two_torsion_to_short_keeps_j() {
        let w = WeierstrassModel::two_torsion(p("t"), p("t^3 + 1")).unwrap();
        assert_eq!(w.j_invariant(), w.to_short().j_invariant());
    }
}
