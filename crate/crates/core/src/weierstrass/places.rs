use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::fiber::{KodairaType, TorsionMarking};
use crate::poly::{parse_poly, Coeff, UniPoly, Var};
use crate::surface::FiberConfiguration;

use super::{WeierstrassError, WeierstrassModel};

/// A point of the base line: the roots of a monic square-free polynomial in
/// `t` (all typed alike), or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(UniPoly),
    Infinity,
}

impl Place {
    pub fn finite(p: UniPoly) -> Result<Place, WeierstrassError> {
        if p.deg() == 0 || p.squarefree_part().deg() != p.deg() {
            return Err(WeierstrassError::InvalidPlace);
        }
        Ok(Place::Finite(p.monic()))
    }

    /// `t - r`.
    pub fn at(r: i64) -> Place {
        Place::Finite(UniPoly::from_ints(&[-r, 1]))
    }

    /// Number of geometric points the place stands for.
    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(p) => p.deg() as u32,
            Place::Infinity => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => p.fmt(f),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Place {
    type Err = WeierstrassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if matches!(s.trim(), "inf" | "infinity" | "∞") {
            return Ok(Place::Infinity);
        }
        let p = parse_poly(s)?
            .to_univariate(Var::T)
            .ok_or(WeierstrassError::InvalidPlace)?;
        Place::finite(p)
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Valuations of `c4`, `c6` and the discriminant at a place of a model that
/// is minimal there. `None` marks an identically vanishing invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaceValuations {
    pub place: Place,
    pub v_c4: Option<u32>,
    pub v_c6: Option<u32>,
    pub v_delta: u32,
}

/// A singular fiber with the place it sits over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaceFiber {
    pub kodaira: KodairaType,
    pub valuations: PlaceValuations,
    /// Number of geometric points of the place, each carrying this fiber.
    pub multiplicity: u32,
}

struct Invariants {
    c4: UniPoly,
    c6: UniPoly,
    delta: UniPoly,
    /// Extra polynomials whose valuations must be constant on each place.
    extra: Vec<UniPoly>,
}

#[derive(Debug, Clone, Copy)]
struct Raw {
    v4: Option<u32>,
    v6: Option<u32>,
    vd: u32,
}

impl Raw {
    /// Number of `u^12` rescalings that bring the triple below `(4, 6, 12)`.
    fn excess(self) -> u32 {
        let q = |v: Option<u32>, w: u32| v.map_or(u32::MAX, |v| v / w);
        q(self.v4, 4).min(q(self.v6, 6)).min(self.vd / 12)
    }

    fn minimalize(self) -> (Raw, u32) {
        let k = self.excess();
        let sub = |v: Option<u32>, w: u32| v.map(|v| v - w * k);
        let raw = Raw {
            v4: sub(self.v4, 4),
            v6: sub(self.v6, 6),
            vd: self.vd - 12 * k,
        };
        (raw, k)
    }
}

impl Invariants {
    fn of(w: &WeierstrassModel) -> Self {
        let extra = match w {
            WeierstrassModel::TwoTorsion { .. } => {
                let (a, b) = w.uni();
                vec![a, b]
            }
            WeierstrassModel::Short { .. } => Vec::new(),
        };
        Invariants {
            c4: w.c4(),
            c6: w.c6(),
            delta: w.discriminant(),
            extra,
        }
    }

    fn at_finite(&self, p: &UniPoly) -> Result<Raw, WeierstrassError> {
        Ok(Raw {
            v4: uniform_valuation(&self.c4, p)?,
            v6: uniform_valuation(&self.c6, p)?,
            vd: uniform_valuation(&self.delta, p)?.expect("discriminant is nonzero"),
        })
    }

    /// Square-free pieces of the discriminant on which every invariant has
    /// constant valuation.
    fn pieces(&self) -> Vec<UniPoly> {
        let mut pieces = vec![self.delta.squarefree_part()];
        pieces.retain(|p| p.deg() > 0);
        for f in [&self.c4, &self.c6, &self.delta]
            .into_iter()
            .chain(&self.extra)
        {
            if Coeff::is_zero(f) {
                continue;
            }
            for level in f.monic().squarefree_factors() {
                if level.deg() == 0 {
                    continue;
                }
                pieces = pieces
                    .into_iter()
                    .flat_map(|p| {
                        let g = Coeff::gcd(&p, &level);
                        if g.deg() == 0 || g.deg() == p.deg() {
                            vec![p]
                        } else {
                            let rest = p.div_poly_exact(&g).expect("gcd divides").monic();
                            vec![g, rest]
                        }
                    })
                    .collect();
            }
        }
        pieces.sort_by_key(|p| (p.deg(), p.to_string()));
        pieces
    }

    /// Triple at infinity of the model twisted to have the least weight
    /// compatible with the finite minimal degrees.
    fn at_infinity(&self) -> Result<(Raw, u32), WeierstrassError> {
        let mut drop = 0u32;
        for p in self.pieces() {
            drop += self.at_finite(&p)?.excess() * p.deg() as u32;
        }
        let deg = |f: &UniPoly, w: u32| (!Coeff::is_zero(f)).then(|| f.deg() as u32 - w * drop);
        let (d4, d6, dd) = (
            deg(&self.c4, 4),
            deg(&self.c6, 6),
            deg(&self.delta, 12).unwrap(),
        );
        let ceil = |d: Option<u32>, w: u32| d.map_or(0, |d| d.div_ceil(w));
        let n = ceil(d4, 4).max(ceil(d6, 6)).max(ceil(Some(dd), 12));
        let raw = Raw {
            v4: d4.map(|d| 4 * n - d),
            v6: d6.map(|d| 6 * n - d),
            vd: 12 * n - dd,
        };
        Ok((raw, drop))
    }
}

/// Multiplicity of every root of `p` in `f`, which must be the same for all
/// of them. `None` if `f` vanishes identically.
fn uniform_valuation(f: &UniPoly, p: &UniPoly) -> Result<Option<u32>, WeierstrassError> {
    if Coeff::is_zero(f) {
        return Ok(None);
    }
    let v = f.valuation(p);
    let mut rest = f.clone();
    for _ in 0..v {
        rest = rest
            .div_poly_exact(p)
            .expect("valuation counted exact divisions");
    }
    if Coeff::gcd(&rest, p).deg() > 0 {
        return Err(WeierstrassError::NonUniformPlace);
    }
    Ok(Some(v))
}

fn classify(raw: Raw) -> Result<KodairaType, WeierstrassError> {
    let Raw { v4, v6, vd } = raw;
    let eq = |v: Option<u32>, n: u32| v == Some(n);
    let ge = |v: Option<u32>, n: u32| v.is_none_or(|v| v >= n);
    let ambiguous = WeierstrassError::AmbiguousValuations {
        v_c4: v4,
        v_c6: v6,
        v_delta: vd,
    };
    if vd == 0 {
        return Ok(KodairaType::I(0));
    }
    if eq(v4, 0) {
        return if eq(v6, 0) {
            Ok(KodairaType::I(vd))
        } else {
            Err(ambiguous)
        };
    }
    Ok(match vd {
        2 if eq(v6, 1) => KodairaType::II,
        3 if eq(v4, 1) && ge(v6, 2) => KodairaType::III,
        4 if ge(v4, 2) && eq(v6, 2) => KodairaType::IV,
        6 if ge(v4, 2) && ge(v6, 3) => KodairaType::IStar(0),
        8 if ge(v4, 3) && eq(v6, 4) => KodairaType::IVStar,
        9 if eq(v4, 3) && ge(v6, 5) => KodairaType::IIIStar,
        10 if ge(v4, 4) && eq(v6, 5) => KodairaType::IIStar,
        n if n > 6 && eq(v4, 2) && eq(v6, 3) => KodairaType::IStar(n - 6),
        _ => return Err(ambiguous),
    })
}

fn valuations_at(
    inv: &Invariants,
    place: &Place,
) -> Result<(KodairaType, PlaceValuations, u32), WeierstrassError> {
    let (raw, k) = match place {
        Place::Finite(p) => inv.at_finite(p)?.minimalize(),
        Place::Infinity => inv.at_infinity()?,
    };
    if raw.excess() > 0 {
        return Err(WeierstrassError::NotMinimalizable);
    }
    let kodaira = classify(raw)?;
    let vals = PlaceValuations {
        place: place.clone(),
        v_c4: raw.v4,
        v_c6: raw.v6,
        v_delta: raw.vd,
    };
    Ok((kodaira, vals, k))
}

/// Fiber type at a place, after minimalizing the model there.
pub fn kodaira_type_at_place(
    w: &WeierstrassModel,
    place: &Place,
) -> Result<(KodairaType, PlaceValuations), WeierstrassError> {
    let (kodaira, vals, _) = valuations_at(&Invariants::of(w), place)?;
    Ok((kodaira, vals))
}

/// Every place with a singular fiber: the finite ones sorted by the degree of
/// their polynomial, then infinity.
pub fn singular_places(w: &WeierstrassModel) -> Result<Vec<PlaceFiber>, WeierstrassError> {
    let inv = Invariants::of(w);
    let places = inv
        .pieces()
        .into_iter()
        .map(Place::Finite)
        .chain(std::iter::once(Place::Infinity));
    let mut out = Vec::new();
    for place in places {
        let (kodaira, valuations, _) = valuations_at(&inv, &place)?;
        if kodaira.is_smooth() {
            continue;
        }
        out.push(PlaceFiber {
            kodaira,
            multiplicity: place.degree(),
            valuations,
        });
    }
    Ok(out)
}

/// The multiset of singular fibers over the whole base line.
pub fn fiber_configuration_of(
    w: &WeierstrassModel,
) -> Result<FiberConfiguration, WeierstrassError> {
    let mut config = FiberConfiguration::new();
    for pf in singular_places(w)? {
        config.add(pf.kodaira, pf.multiplicity);
    }
    Ok(config)
}

/// Which fiber component the 2-torsion section `(0, 0)` meets at a place.
pub fn torsion_marking_at_place(
    w: &WeierstrassModel,
    place: &Place,
) -> Result<TorsionMarking, WeierstrassError> {
    if !matches!(w, WeierstrassModel::TwoTorsion { .. }) {
        return Err(WeierstrassError::NotTwoTorsionForm);
    }
    let inv = Invariants::of(w);
    let (kodaira, _, k) = valuations_at(&inv, place)?;
    let b = &inv.extra[1];
    let vb = match place {
        Place::Finite(p) => uniform_valuation(b, p)?.map(|v| v.checked_sub(4 * k)),
        Place::Infinity => {
            let (raw, drop) = inv.at_infinity()?;
            let n = (raw.vd + inv.delta.deg() as u32 - 12 * drop) / 12;
            (!Coeff::is_zero(b)).then(|| (4 * n + 4 * drop).checked_sub(b.deg() as u32))
        }
    };
    let vb = vb
        .expect("b is nonzero on a smooth two-torsion model")
        .ok_or(WeierstrassError::NotMinimalizable)?;
    Ok(match kodaira {
        KodairaType::I(n) if n % 2 == 0 => {
            if vb == 0 {
                TorsionMarking::MeetsTheta0
            } else {
                TorsionMarking::MeetsThetaN
            }
        }
        KodairaType::IStar(n) if n % 2 == 0 => {
            if vb <= 2 {
                TorsionMarking::MeetsNear
            } else {
                TorsionMarking::MeetsFar
            }
        }
        _ => TorsionMarking::None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MultiPoly};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn short(a: &str, b: &str) -> WeierstrassModel {
        WeierstrassModel::short(p(a), p(b)).unwrap()
    }

    fn tt(a: &str, b: &str) -> WeierstrassModel {
        WeierstrassModel::two_torsion(p(a), p(b)).unwrap()
    }

    #[test]
    fn cusp_at_zero() {
        let (k, v) = kodaira_type_at_place(&short("t", "t"), &Place::at(0)).unwrap();
        assert_eq!(k, KodairaType::II);
        assert_eq!((v.v_c4, v.v_c6, v.v_delta), (Some(1), Some(1), 2));
    }

    #[test]
    fn node_at_zero() {
        let (k, v) = kodaira_type_at_place(&tt("1", "t"), &Place::at(0)).unwrap();
        assert_eq!(k, KodairaType::I(2));
        assert_eq!((v.v_c4, v.v_delta), (Some(0), 2));
    }

    #[test]
    fn every_additive_row() {
        let cases = [
            (("t", "t"), KodairaType::II),
            (("t", "t^2"), KodairaType::III),
            (("t^2", "t^2"), KodairaType::IV),
            (("t^2", "t^3"), KodairaType::IStar(0)),
            (("0", "t^3"), KodairaType::IStar(0)),
            (("t^3", "t^4"), KodairaType::IVStar),
            (("t^3", "t^5"), KodairaType::IIIStar),
            (("t^4", "t^5"), KodairaType::IIStar),
            (("t^5", "t^7"), KodairaType::II),
        ];
        for ((a, b), want) in cases {
            let (got, _) = kodaira_type_at_place(&short(a, b), &Place::at(0)).unwrap();
            assert_eq!(got, want, "A = {a}, B = {b}");
        }
        let (got, _) = kodaira_type_at_place(&tt("2*t", "t^2 - 1/4*t^4"), &Place::at(0)).unwrap();
        assert_eq!(got, KodairaType::IStar(2));
    }

    #[test]
    fn rational_elliptic_surfaces() {
        // y^2 = x^3 + t: II at 0, II* at infinity
        let w = short("0", "t");
        assert_eq!(fiber_configuration_of(&w).unwrap().to_notation(), "II*+II");
        let w = short("-3", "2*t");
        let config = fiber_configuration_of(&w).unwrap();
        assert_eq!(config.euler_characteristic(), 12);
        assert_eq!(config.to_notation(), "II*+2I1");
    }

    #[test]
    fn conjugate_roots_share_a_type() {
        let w = short("-3", "2*t^2 - 1");
        let places = singular_places(&w).unwrap();
        let config = fiber_configuration_of(&w).unwrap();
        let sum: u32 = places
            .iter()
            .map(|p| p.valuations.v_delta * p.multiplicity)
            .sum();
        assert_eq!(sum, config.euler_characteristic());
        assert_eq!(config.to_notation(), "IV*+4I1");
    }

    #[test]
    fn non_minimal_models_are_reduced() {
        // t^12 scaling of a smooth fiber at zero
        let w = short("t^4 + t^5", "t^6");
        let (k, v) = kodaira_type_at_place(&w, &Place::at(0)).unwrap();
        assert_eq!(k, KodairaType::I(0));
        assert_eq!(v.v_delta, 0);
        let config = fiber_configuration_of(&w).unwrap();
        assert_eq!(config.count(KodairaType::I(0)), 0);
    }

    #[test]
    fn place_parsing() {
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Infinity);
        assert_eq!("2*t - 4".parse::<Place>().unwrap(), Place::at(2));
        assert_eq!("t^2".parse::<Place>(), Err(WeierstrassError::InvalidPlace));
        assert_eq!("3".parse::<Place>(), Err(WeierstrassError::InvalidPlace));
        assert_eq!("x0".parse::<Place>(), Err(WeierstrassError::InvalidPlace));
        assert_eq!(Place::at(-1).to_string(), "t + 1");
    }

    #[test]
    fn non_uniform_place() {
        let w = short("t", "t^2*(t - 1)");
        let place: Place = "t^2 - t".parse().unwrap();
        assert_eq!(
            kodaira_type_at_place(&w, &place),
            Err(WeierstrassError::NonUniformPlace)
        );
    }

    #[test]
    fn markings() {
        let m = |a: &str, b: &str| torsion_marking_at_place(&tt(a, b), &Place::at(0)).unwrap();
        assert_eq!(m("2", "1 - 1/4*t^4"), TorsionMarking::MeetsTheta0);
        assert_eq!(m("1", "t^2"), TorsionMarking::MeetsThetaN);
        assert_eq!(m("2*t", "t^2 - 1/4*t^4"), TorsionMarking::MeetsNear);
        assert_eq!(m("t", "t^3"), TorsionMarking::MeetsFar);
        assert_eq!(m("1", "1/4 - 1/4*t"), TorsionMarking::None);
        assert_eq!(
            torsion_marking_at_place(&short("1", "t"), &Place::at(0)),
            Err(WeierstrassError::NotTwoTorsionForm)
        );
    }
}
