use crate::poly::{parse_poly, Coeff, DensePoly, MultiPoly, PolyError, RatFunc, UniPoly, Var};

use super::{GenusOneQuartic, WeierstrassError, WeierstrassModel};

/// A point `(u0, w0)` on `w^2 = c(t) b(u, 1)` with coordinates in `Q(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticPoint {
    pub u0: RatFunc,
    pub w0: RatFunc,
}

impl QuarticPoint {
    pub fn new(u0: RatFunc, w0: RatFunc) -> Self {
        QuarticPoint { u0, w0 }
    }

    /// Parses `"u0,w0"`, each coordinate a polynomial in `t` or a quotient
    /// of two such.
    pub fn parse(s: &str) -> Result<Self, WeierstrassError> {
        let (u, w) = s.split_once(',').ok_or(PolyError::Syntax {
            position: s.len(),
            message: "expected u0,w0".into(),
        })?;
        Ok(QuarticPoint::new(parse_ratfunc(u)?, parse_ratfunc(w)?))
    }
}

/// Parses an element of `Q(t)` written as `p` or `p / q`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc, WeierstrassError> {
    let in_t = |p: MultiPoly| p.to_univariate(Var::T).ok_or(WeierstrassError::NotInT);
    let whole = parse_poly(s);
    if let Ok(p) = whole {
        return Ok(RatFunc::from_poly(in_t(p)?));
    }
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if let (Ok(n), Ok(d)) = (parse_poly(&s[..i]), parse_poly(&s[i + 1..])) {
                    let (n, d) = (in_t(n)?, in_t(d)?);
                    return RatFunc::new(n, d)
                        .ok_or(WeierstrassError::Poly(PolyError::ZeroPolynomial));
                }
            }
            _ => {}
        }
    }
    Err(whole.unwrap_err().into())
}

fn rf(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

fn div(a: &RatFunc, b: &RatFunc) -> RatFunc {
    a.div_exact(b)
        .expect("division by a nonzero element of Q(t)")
}

/// Coefficients `[q0, ..., q4]` of `c(t) b(u, 1)`.
fn dehomogenize(q: &GenusOneQuartic) -> Vec<RatFunc> {
    let c =
        q.c.to_univariate(Var::T)
            .expect("validated on construction");
    (0..=4)
        .map(|k| {
            let coeff =
                q.b.coefficient_in(Var::X0, k)
                    .coefficient_in(Var::X2, 4 - k);
            let coeff = coeff
                .to_univariate(Var::T)
                .expect("validated on construction");
            RatFunc::from_poly(Coeff::mul(&coeff, &c))
        })
        .collect()
}

/// `4 I^3 - J^2` for the quartic `q4 u^4 + ... + q0`.
fn quartic_discriminant(q: &[RatFunc]) -> RatFunc {
    let (a, b, c, d, e) = (&q[4], &q[3], &q[2], &q[1], &q[0]);
    let m = |xs: &[&RatFunc]| xs.iter().fold(rf(1), |acc, x| acc.mul(x));
    let i = m(&[&rf(12), a, e])
        .sub(&m(&[&rf(3), b, d]))
        .add(&m(&[c, c]));
    let j = m(&[&rf(72), a, c, e])
        .add(&m(&[&rf(9), b, c, d]))
        .sub(&m(&[&rf(27), a, d, d]))
        .sub(&m(&[&rf(27), e, b, b]))
        .sub(&m(&[&rf(2), c, c, c]));
    m(&[&rf(4), &i, &i, &i]).sub(&j.mul(&j))
}

/// `[a1, a2, a3, a4, a6]` to `(c4, c6)`.
fn long_form_invariants(a: [RatFunc; 5]) -> (RatFunc, RatFunc) {
    let [a1, a2, a3, a4, a6] = a;
    let b2 = a1.mul(&a1).add(&a2.scale_int(4));
    let b4 = a4.scale_int(2).add(&a1.mul(&a3));
    let b6 = a3.mul(&a3).add(&a6.scale_int(4));
    let c4 = b2.mul(&b2).sub(&b4.scale_int(24));
    let c6 = b2
        .pow(3)
        .neg()
        .add(&b2.mul(&b4).scale_int(36))
        .sub(&b6.scale_int(216));
    (c4, c6)
}

trait ScaleInt {
    fn scale_int(&self, n: i64) -> Self;
}

impl ScaleInt for RatFunc {
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&rf(n))
    }
}

/// Brings `w^2 = c(t) b(u, 1)` with a known point to Weierstrass form.
///
/// A point with `w0 = 0` is moved to infinity by `u = u0 + 1/v`; a point with
/// `w0 != 0` is moved to `u = 0` and sent to the flex of a long Weierstrass
/// form. A quartic that is really a cubic (no `u^4` term) is used as is.
pub fn quartic_to_weierstrass(
    q: &GenusOneQuartic,
    pt: &QuarticPoint,
) -> Result<WeierstrassModel, WeierstrassError> {
    let coeffs = dehomogenize(q);
    if quartic_discriminant(&coeffs).is_zero() {
        return Err(WeierstrassError::SingularQuartic);
    }
    let quartic = DensePoly::new(coeffs.clone());
    if quartic.eval(&pt.u0) != pt.w0.mul(&pt.w0) {
        return Err(WeierstrassError::NoSectionGiven);
    }
    let zero = RatFunc::zero();
    let long = if coeffs[4].is_zero() {
        let (d0, d1, d2, d3) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
        [
            zero.clone(),
            d2.clone(),
            zero,
            d1.mul(d3),
            d0.mul(&d3.mul(d3)),
        ]
    } else {
        let shift = DensePoly::new(vec![pt.u0.clone(), RatFunc::one()]);
        let e: Vec<RatFunc> = (0..=4).map(|k| quartic.compose(&shift).coeff(k)).collect();
        if pt.w0.is_zero() {
            [
                zero.clone(),
                e[2].clone(),
                zero,
                e[1].mul(&e[3]),
                e[1].mul(&e[1]).mul(&e[4]),
            ]
        } else {
            let w = &pt.w0;
            let w2 = w.mul(w);
            let a1 = div(&e[1], w);
            let a2 = e[2].sub(&div(&e[1].mul(&e[1]), &w2.scale_int(4)));
            let a3 = w.mul(&e[3]).scale_int(2);
            let a4 = w2.mul(&e[4]).scale_int(-4);
            let a6 = a2.mul(&a4);
            [a1, a2, a3, a4, a6]
        }
    };
    let (c4, c6) = long_form_invariants(long);
    let (a4, a6) = clear_denominators(&c4.scale_int(-27), &c6.scale_int(-54));
    let model = WeierstrassModel::short(a4, a6)?;
    Ok(model)
}

/// Rescales `(A, B)` by `(l^4, l^6)` with `l` the least common multiple of
/// the denominators.
fn clear_denominators(a: &RatFunc, b: &RatFunc) -> (MultiPoly, MultiPoly) {
    let (da, db) = (a.denom(), b.denom());
    let g = Coeff::gcd(da, db);
    let l = Coeff::mul(da, &db.div_poly_exact(&g).expect("gcd divides"));
    let lift = |x: &RatFunc, e: u32| -> MultiPoly {
        let scaled = x.mul(&RatFunc::from_poly(l.pow(e)));
        let p: &UniPoly = scaled.as_poly().expect("denominator cleared");
        MultiPoly::from_univariate(p, Var::T)
    };
    (lift(a, 4), lift(b, 6))
}
