use super::dense::{Coeff, DensePoly, UniPoly};
use super::multi::{MultiPoly, Var};
use super::PolyError;

/// `r = a^2 * b * c` with `c` depending on `t` only and `b` square-free in
/// the fiber variables over `Q(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarePart {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
}

/// Splits a binary form in `(x0, x2)` with coefficients in `Q[t]` into its
/// maximal square part, a square-free part and a content in `t`.
///
/// `a` and `b` are returned with coprime integer coefficients and positive
/// leading coefficient; every rational constant lands in `c`.
pub fn square_part_decompose(r: &MultiPoly) -> Result<SquarePart, PolyError> {
    if r.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !r.is_free_of(Var::X1) {
        return Err(PolyError::NotHomogeneous);
    }
    let degree = r
        .homogeneous_degree(&[Var::X0, Var::X2])
        .ok_or(PolyError::NotHomogeneous)?;

    // Powers of x2 are invisible after setting x2 = 1; split them off first.
    let (k, rest) = r.strip_var_power(Var::X2);
    let dehom = rest
        .evaluate_var(Var::X2, &num_traits::One::one())
        .to_dense_over_t(Var::X0)
        .expect("only x0 and t remain");
    debug_assert_eq!(dehom.deg() as u32, degree - k);

    let primitive = dehom.primitive_part();
    let factors = primitive.squarefree_factors();

    let mut a_dense = DensePoly::<UniPoly>::one();
    let mut b_dense = DensePoly::<UniPoly>::one();
    for (i, s) in factors.iter().enumerate() {
        let mult = i as u32 + 1;
        a_dense = Coeff::mul(&a_dense, &s.pow(mult / 2));
        if mult % 2 == 1 {
            b_dense = Coeff::mul(&b_dense, s);
        }
    }

    let x2 = MultiPoly::var(Var::X2);
    let a = MultiPoly::homogenize_dense(&a_dense, Var::X0, Var::X2, a_dense.deg() as u32)
        * x2.pow(k / 2);
    let b = MultiPoly::homogenize_dense(&b_dense, Var::X0, Var::X2, b_dense.deg() as u32)
        * x2.pow(k % 2);
    let (_, a) = a.integral_primitive();
    let (_, b) = b.integral_primitive();

    let c = r
        .div_exact(&(&a.pow(2) * &b))
        .ok_or(PolyError::InexactFactorization)?;
    if !(c.is_free_of(Var::X0) && c.is_free_of(Var::X2)) {
        return Err(PolyError::InexactFactorization);
    }
    Ok(SquarePart { a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn check(r: &MultiPoly, sp: &SquarePart) {
        assert_eq!(&(&sp.a.pow(2) * &sp.b) * &sp.c, *r);
    }

    #[test]
    fn running_example() {
        let r = p("x2^2*(t*x0^2 + x2^2)*(x0^2 + t^3*x2^2)");
        let sp = square_part_decompose(&r).unwrap();
        assert_eq!(sp.a, p("x2"));
        assert_eq!(sp.b, p("(t*x0^2 + x2^2)*(x0^2 + t^3*x2^2)"));
        assert_eq!(sp.c, p("1"));
        check(&r, &sp);
    }

    #[test]
    fn already_squarefree() {
        let r = p("x0^2 + x2^2");
        let sp = square_part_decompose(&r).unwrap();
        assert_eq!(
            (sp.a.clone(), sp.b.clone(), sp.c.clone()),
            (p("1"), r.clone(), p("1"))
        );
    }

    #[test]
    fn square_times_content() {
        let r = p("t^2*x0^4");
        let sp = square_part_decompose(&r).unwrap();
        assert_eq!(
            (sp.a.clone(), sp.b.clone(), sp.c.clone()),
            (p("x0^2"), p("1"), p("t^2"))
        );
    }

    #[test]
    fn rational_constants_go_to_c() {
        let r = p("-3/2*(t + 1)*(x0 - t*x2)^3*(x0 + x2)");
        let sp = square_part_decompose(&r).unwrap();
        assert_eq!(sp.a, p("t*x2 - x0"));
        assert_eq!(sp.b, p("(t*x2 - x0)*(x0 + x2)"));
        assert_eq!(sp.c, p("3/2*(t + 1)"));
        check(&r, &sp);
    }

    #[test]
    fn mixed_x2_powers() {
        let r = p("x2^5*(x0 + t*x2)^2*(x0^2 - t*x2^2)");
        let sp = square_part_decompose(&r).unwrap();
        assert_eq!(sp.a, p("x2^2*(x0 + t*x2)"));
        assert_eq!(sp.b, p("x2*(t*x2^2 - x0^2)"));
        check(&r, &sp);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            square_part_decompose(&p("x0^2 + x2")),
            Err(PolyError::NotHomogeneous)
        );
        assert_eq!(
            square_part_decompose(&p("x0 + x1")),
            Err(PolyError::NotHomogeneous)
        );
        assert_eq!(
            square_part_decompose(&MultiPoly::zero()),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
