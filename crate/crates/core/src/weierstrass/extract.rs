use crate::poly::{resultant, square_part_decompose, MultiPoly, Rational, Var};

use super::WeierstrassError;

const PLANE: [Var; 3] = [Var::X0, Var::X1, Var::X2];

/// The double plane `w^2 = f3 * g3` branched along two cubics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoverModel {
    f3: MultiPoly,
    g3: MultiPoly,
}

impl DoubleCoverModel {
    pub fn new(f3: MultiPoly, g3: MultiPoly) -> Result<Self, WeierstrassError> {
        for (what, c) in [("f3", &f3), ("g3", &g3)] {
            if c.is_zero() || !c.is_free_of(Var::T) || c.homogeneous_degree(&PLANE) != Some(3) {
                return Err(WeierstrassError::InvalidCubic { what });
            }
        }
        if share_factor(&f3, &g3)? {
            return Err(WeierstrassError::CommonFactor);
        }
        Ok(DoubleCoverModel { f3, g3 })
    }

    pub fn f3(&self) -> &MultiPoly {
        &self.f3
    }

    pub fn g3(&self) -> &MultiPoly {
        &self.g3
    }

    /// The branch sextic `f3 * g3`.
    pub fn branch_sextic(&self) -> MultiPoly {
        &self.f3 * &self.g3
    }
}

/// Whether two nonzero ternary forms have a nonconstant common factor.
///
/// After a shear `x0 -> x0 + l x1, x2 -> x2 + m x1` that makes both forms
/// monic in `x1`, any common factor has positive degree in `x1`, so the
/// resultant in `x1` vanishes exactly when one exists.
fn share_factor(f: &MultiPoly, g: &MultiPoly) -> Result<bool, WeierstrassError> {
    let x1 = MultiPoly::var(Var::X1);
    for l in 0..6i64 {
        for m in 0..6i64 {
            let sx0 = &MultiPoly::var(Var::X0) + &x1.scale(&Rational::from_integer(l.into()));
            let sx2 = &MultiPoly::var(Var::X2) + &x1.scale(&Rational::from_integer(m.into()));
            let shear = |p: &MultiPoly| p.substitute(Var::X0, &sx0).substitute(Var::X2, &sx2);
            let (fs, gs) = (shear(f), shear(g));
            let top = |p: &MultiPoly| p.homogeneous_degree(&PLANE) == Some(p.degree_in(Var::X1));
            if top(&fs) && top(&gs) {
                return Ok(resultant(&fs, &gs, Var::X1)?.is_zero());
            }
        }
    }
    unreachable!("a nonzero form does not vanish on a 6x6 grid of points")
}

/// A pencil `h(x0, x1, x2, t) = 0` of plane curves through the projection
/// point `(0:1:0)`, linear in the parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilModel {
    h: MultiPoly,
    degree: u32,
}

impl PencilModel {
    pub fn new(h: MultiPoly) -> Result<Self, WeierstrassError> {
        let degree = h
            .homogeneous_degree(&PLANE)
            .ok_or(WeierstrassError::InvalidPencil)?;
        if !(1..=3).contains(&degree) || h.degree_in(Var::T) != 1 || h.degree_in(Var::X1) == 0 {
            return Err(WeierstrassError::InvalidPencil);
        }
        Ok(PencilModel { h, degree })
    }

    pub fn h(&self) -> &MultiPoly {
        &self.h
    }

    /// The degree `e` of the curves in the pencil.
    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// `w^2 = c(t) * b(x0:x2, t)` with `b` a binary quartic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusOneQuartic {
    pub(super) c: MultiPoly,
    pub(super) b: MultiPoly,
}

impl GenusOneQuartic {
    pub fn new(c: MultiPoly, b: MultiPoly) -> Result<Self, WeierstrassError> {
        let c_ok = !c.is_zero() && c.to_univariate(Var::T).is_some();
        let b_ok = b.is_free_of(Var::X1) && b.homogeneous_degree(&[Var::X0, Var::X2]) == Some(4);
        if !(c_ok && b_ok) {
            return Err(WeierstrassError::InvalidQuartic);
        }
        Ok(GenusOneQuartic { c, b })
    }

    pub fn c(&self) -> &MultiPoly {
        &self.c
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }
}

/// Eliminates `x1` between the branch sextic and the pencil, then splits off
/// the square part: `w^2 = r = a^2 * b * c` becomes `w^2 = c * b` after
/// `w -> a w`.
pub fn extract_genus_one_fibration(
    cover: &DoubleCoverModel,
    pencil: &PencilModel,
) -> Result<(MultiPoly, GenusOneQuartic), WeierstrassError> {
    let r = resultant(&cover.branch_sextic(), pencil.h(), Var::X1)?;
    let sp = square_part_decompose(&r)?;
    let degree =
        sp.b.homogeneous_degree(&[Var::X0, Var::X2])
            .expect("square-free part of a binary form is a binary form");
    if degree != 4 {
        return Err(WeierstrassError::NotAConicBundlePencil { degree });
    }
    Ok((sp.a, GenusOneQuartic { c: sp.c, b: sp.b }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn cover() -> DoubleCoverModel {
        DoubleCoverModel::new(p("x0^2*x1 + x2^3"), p("x0^2*x2 + x1^3")).unwrap()
    }

    fn pencil(s: &str) -> PencilModel {
        PencilModel::new(p(s)).unwrap()
    }

    #[test]
    fn lines_through_a_base_point() {
        let (a, q) = extract_genus_one_fibration(&cover(), &pencil("x1 - t*x2")).unwrap();
        assert_eq!(a, p("x2"));
        assert_eq!(q.b, p("(t*x0^2 + x2^2)*(x0^2 + t^3*x2^2)"));
        assert_eq!(q.c, p("1"));
    }

    #[test]
    fn lines_through_a_double_point() {
        let (a, q) = extract_genus_one_fibration(&cover(), &pencil("x1 - t*x0")).unwrap();
        assert_eq!(a, p("x0"));
        assert_eq!(q.b, p("(t*x0^3 + x2^3)*(x2 + t^3*x0)"));
        assert_eq!(q.c, p("1"));
    }

    #[test]
    fn generic_pencil_is_not_genus_one() {
        assert_eq!(
            extract_genus_one_fibration(&cover(), &pencil("x1 - t*(x0 + x2)")),
            Err(WeierstrassError::NotAConicBundlePencil { degree: 6 })
        );
    }

    #[test]
    fn validation() {
        assert_eq!(
            DoubleCoverModel::new(p("x0*x1"), p("x2^3")),
            Err(WeierstrassError::InvalidCubic { what: "f3" })
        );
        assert_eq!(
            DoubleCoverModel::new(p("x0^3"), p("t*x2^3")),
            Err(WeierstrassError::InvalidCubic { what: "g3" })
        );
        assert_eq!(
            DoubleCoverModel::new(p("x0*(x1^2 + x2^2)"), p("x0*x1*x2")),
            Err(WeierstrassError::CommonFactor)
        );
        assert_eq!(
            DoubleCoverModel::new(p("(x0 + x1)*x2^2"), p("(x0 + x1)^3")),
            Err(WeierstrassError::CommonFactor)
        );
        assert!(DoubleCoverModel::new(p("x0^3 + x1^3"), p("x2^3 + x0*x1*x2")).is_ok());
        assert_eq!(
            PencilModel::new(p("x0 - t*x2")),
            Err(WeierstrassError::InvalidPencil)
        );
        assert_eq!(
            PencilModel::new(p("x1 - t^2*x2")),
            Err(WeierstrassError::InvalidPencil)
        );
        assert_eq!(
            PencilModel::new(p("x1^4 - t*x2^4")),
            Err(WeierstrassError::InvalidPencil)
        );
        assert_eq!(
            PencilModel::new(p("x1^2 - t*x2")),
            Err(WeierstrassError::InvalidPencil)
        );
        assert_eq!(pencil("x1*x0 - t*x2^2").degree(), 2);
    }
}
