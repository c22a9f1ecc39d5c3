use crate::poly::Rational;

use super::{WeierstrassError, WeierstrassModel};

/// The quotient of `y^2 = x(x^2 + a x + b)` by translation along `(0, 0)`:
/// `y^2 = x(x^2 - 2a x + a^2 - 4b)`.
pub fn two_isogeny_quotient(w: &WeierstrassModel) -> Result<WeierstrassModel, WeierstrassError> {
    let WeierstrassModel::TwoTorsion { a, b } = w else {
        return Err(WeierstrassError::NotTwoTorsionForm);
    };
    let new_a = a.scale(&Rational::from_integer((-2).into()));
    let new_b = &(a * a) - &b.scale(&Rational::from_integer(4.into()));
    WeierstrassModel::two_torsion(new_a, new_b).map_err(|e| match e {
        WeierstrassError::SingularModel => WeierstrassError::SingularInput,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MultiPoly};

    fn tt(a: &str, b: &str) -> WeierstrassModel {
        WeierstrassModel::TwoTorsion {
            a: parse_poly(a).unwrap(),
            b: parse_poly(b).unwrap(),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(two_isogeny_quotient(&tt("0", "1")).unwrap(), tt("0", "-4"));
        assert_eq!(
            two_isogeny_quotient(&tt("t", "1")).unwrap(),
            tt("-2*t", "t^2 - 4")
        );
    }

    #[test]
    fn twice_is_rescaling() {
        let w = tt("t^2 - 3*t", "t^3 + 2");
        let back = two_isogeny_quotient(&two_isogeny_quotient(&w).unwrap()).unwrap();
        assert_eq!(back, tt("4*t^2 - 12*t", "16*t^3 + 32"));
    }

    #[test]
    fn errors() {
        let short = WeierstrassModel::Short {
            a4: MultiPoly::one(),
            a6: MultiPoly::one(),
        };
        assert_eq!(
            two_isogeny_quotient(&short),
            Err(WeierstrassError::NotTwoTorsionForm)
        );
        assert_eq!(
            two_isogeny_quotient(&tt("t", "0")),
            Err(WeierstrassError::SingularInput)
        );
        assert_eq!(
            two_isogeny_quotient(&tt("2*t", "t^2")),
            Err(WeierstrassError::SingularInput)
        );
        assert_eq!(
            two_isogeny_quotient(&tt("x0", "1")),
            Err(WeierstrassError::NotInT)
        );
    }
}
