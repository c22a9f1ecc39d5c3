//! Kodaira singular-fiber symbols and the two fiber transformation rules
//! used for double covers: ramified quadratic base change and the quotient
//! by translation along a 2-torsion section.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by fiber arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiberError {
    #[error("fiber {0} is not reduced and cannot be a branch fiber")]
    NonReducedBranch(KodairaType),
    #[error("marking {marking:?} is not legal for fiber {fiber}")]
    IllegalMarking {
        fiber: KodairaType,
        marking: TorsionMarking,
    },
    #[error("fiber {0} is incompatible with a 2-torsion section")]
    UnsupportedFiber(KodairaType),
    #[error("cannot parse fiber symbol {0:?}")]
    Syntax(String),
}

/// A Kodaira fiber symbol in characteristic zero.
///
/// `I(0)` stands for a smooth fiber; `IStar(0)` is the fiber `I0*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

/// How a 2-torsion section meets a reducible fiber.
///
/// `MeetsNear`/`MeetsFar` are opaque labels telling apart the two `I*_{2n}`
/// behaviours under the 2-isogeny: `MeetsNear` doubles the index, `MeetsFar`
/// halves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorsionMarking {
    MeetsTheta0,
    MeetsThetaN,
    MeetsNear,
    MeetsFar,
    None,
}

impl KodairaType {
    pub const SMOOTH: KodairaType = KodairaType::I(0);

    pub fn is_smooth(self) -> bool {
        self == KodairaType::I(0)
    }

    /// Topological Euler number of the fiber.
    pub fn euler_number(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Number of irreducible components.
    pub fn component_count(self) -> u32 {
        match self {
            KodairaType::I(0) | KodairaType::I(1) => 1,
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// Rank of the root lattice spanned by the components missing the zero section.
    pub fn root_rank(self) -> u32 {
        self.component_count() - 1
    }

    /// Whether every component has multiplicity one.
    pub fn is_reduced(self) -> bool {
        matches!(
            self,
            KodairaType::I(_) | KodairaType::II | KodairaType::III | KodairaType::IV
        )
    }

    /// Whether the fiber is of additive reduction (neither `I_n` nor `I_n*`).
    pub fn is_additive_symbol(self) -> bool {
        !matches!(self, KodairaType::I(_) | KodairaType::IStar(_))
    }

    /// Image of a branch fiber under a quadratic base change ramified over it.
    pub fn ramified_transform(self) -> Result<KodairaType, FiberError> {
        match self {
            KodairaType::I(n) => Ok(KodairaType::I(2 * n)),
            KodairaType::II => Ok(KodairaType::IV),
            KodairaType::III => Ok(KodairaType::IStar(0)),
            KodairaType::IV => Ok(KodairaType::IVStar),
            other => Err(FiberError::NonReducedBranch(other)),
        }
    }

    /// Whether `marking` is a legal description of the 2-torsion section on this fiber.
    pub fn accepts_marking(self, marking: TorsionMarking) -> bool {
        match (self, marking) {
            (KodairaType::I(n), TorsionMarking::MeetsTheta0 | TorsionMarking::MeetsThetaN) => {
                n % 2 == 0
            }
            (KodairaType::IStar(n), TorsionMarking::MeetsNear | TorsionMarking::MeetsFar) => {
                n % 2 == 0
            }
            (KodairaType::I(n), TorsionMarking::None) => n % 2 == 1,
            (KodairaType::IStar(n), TorsionMarking::None) => n % 2 == 1,
            (_, TorsionMarking::None) => true,
            _ => false,
        }
    }

    /// Fiber type on the quotient by translation along a 2-torsion section.
    pub fn isogeny_transform(self, marking: TorsionMarking) -> Result<KodairaType, FiberError> {
        if matches!(
            self,
            KodairaType::IIStar | KodairaType::IVStar | KodairaType::II | KodairaType::IV
        ) {
            return Err(FiberError::UnsupportedFiber(self));
        }
        if !self.accepts_marking(marking) {
            return Err(FiberError::IllegalMarking {
                fiber: self,
                marking,
            });
        }
        Ok(match (self, marking) {
            (KodairaType::IIIStar, _) => KodairaType::IIIStar,
            (KodairaType::I(n), TorsionMarking::None) => KodairaType::I(2 * n),
            (KodairaType::I(n), TorsionMarking::MeetsTheta0) => KodairaType::I(2 * n),
            (KodairaType::I(n), TorsionMarking::MeetsThetaN) => KodairaType::I(n / 2),
            (KodairaType::IStar(n), TorsionMarking::None) => KodairaType::IStar(2 * n),
            (KodairaType::IStar(n), TorsionMarking::MeetsNear) => KodairaType::IStar(2 * n),
            (KodairaType::IStar(n), TorsionMarking::MeetsFar) => KodairaType::IStar(n / 2),
            // III is absent from the table; reached only with a legal None marking.
            (other, _) => return Err(FiberError::UnsupportedFiber(other)),
        })
    }

    fn order_key(self) -> (u8, u32) {
        match self {
            KodairaType::II => (0, 0),
            KodairaType::III => (0, 1),
            KodairaType::IV => (0, 2),
            KodairaType::IVStar => (0, 3),
            KodairaType::IIIStar => (0, 4),
            KodairaType::IIStar => (0, 5),
            KodairaType::I(n) => (1, n),
            KodairaType::IStar(n) => (2, n),
        }
    }
}

/// Canonical order: additive symbols first, then `I_n` ascending, then `I*_n` ascending.
impl Ord for KodairaType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for KodairaType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IIStar => f.write_str("II*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IVStar => f.write_str("IV*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = FiberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FiberError::Syntax(s.to_string());
        let (body, star) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let symbol = match body {
            "II" => Some(if star {
                KodairaType::IIStar
            } else {
                KodairaType::II
            }),
            "III" => Some(if star {
                KodairaType::IIIStar
            } else {
                KodairaType::III
            }),
            "IV" => Some(if star {
                KodairaType::IVStar
            } else {
                KodairaType::IV
            }),
            _ => None,
        };
        if let Some(k) = symbol {
            return Ok(k);
        }
        let digits = body.strip_prefix('I').ok_or_else(err)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        // "I007" is not a canonical symbol
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(err());
        }
        let n: u32 = digits.parse().map_err(|_| err())?;
        Ok(if star {
            KodairaType::IStar(n)
        } else {
            KodairaType::I(n)
        })
    }
}

impl serde::Serialize for KodairaType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for KodairaType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::KodairaType::*;
    use super::*;

    const ALL_SMALL: [KodairaType; 14] = [
        I(0),
        I(1),
        I(2),
        I(5),
        I(9),
        IStar(0),
        IStar(1),
        IStar(4),
        II,
        III,
        IV,
        IIStar,
        IIIStar,
        IVStar,
    ];

    #[test]
    fn euler_numbers() {
        assert_eq!(I(0).euler_number(), 0);
        // 2 e(II*) + 2 e(I2) = 24
        assert_eq!(2 * IIStar.euler_number() + 2 * I(2).euler_number(), 24);
        assert_eq!(IIStar.euler_number(), 10);
        assert_eq!(IStar(4).euler_number(), 10);
    }

    #[test]
    fn component_counts_and_ranks() {
        assert_eq!(I(1).component_count(), 1);
        assert_eq!(IIStar.component_count(), 9);
        assert_eq!(IStar(2).component_count(), 7);
        assert_eq!(I(1).root_rank(), 0);
        assert_eq!(I(9).root_rank(), 8);
        assert_eq!(IIIStar.root_rank(), 7);
        for f in ALL_SMALL {
            assert_eq!(f.root_rank() + 1, f.component_count());
        }
    }

    #[test]
    fn reducedness() {
        assert!(I(5).is_reduced());
        assert!(!IStar(0).is_reduced());
        assert!(!IIStar.is_reduced());
    }

    #[test]
    fn ramified_transform_table() {
        assert_eq!(I(1).ramified_transform(), Ok(I(2)));
        assert_eq!(I(5).ramified_transform(), Ok(I(10)));
        assert_eq!(I(0).ramified_transform(), Ok(I(0)));
        assert_eq!(II.ramified_transform(), Ok(IV));
        assert_eq!(III.ramified_transform(), Ok(IStar(0)));
        assert_eq!(IV.ramified_transform(), Ok(IVStar));
        assert_eq!(
            IStar(0).ramified_transform(),
            Err(FiberError::NonReducedBranch(IStar(0)))
        );
    }

    #[test]
    fn ramified_transform_doubles_euler() {
        for f in ALL_SMALL.into_iter().filter(|f| f.is_reduced()) {
            let g = f.ramified_transform().unwrap();
            assert_eq!(g.euler_number(), 2 * f.euler_number(), "{f}");
        }
    }

    #[test]
    fn isogeny_table() {
        use TorsionMarking as M;
        assert_eq!(IIIStar.isogeny_transform(M::None), Ok(IIIStar));
        assert_eq!(I(3).isogeny_transform(M::None), Ok(I(6)));
        assert_eq!(I(4).isogeny_transform(M::MeetsThetaN), Ok(I(2)));
        assert_eq!(I(4).isogeny_transform(M::MeetsTheta0), Ok(I(8)));
        assert_eq!(I(0).isogeny_transform(M::MeetsTheta0), Ok(I(0)));
        assert_eq!(IStar(1).isogeny_transform(M::None), Ok(IStar(2)));
        assert_eq!(IStar(3).isogeny_transform(M::None), Ok(IStar(6)));
        assert_eq!(IStar(2).isogeny_transform(M::MeetsNear), Ok(IStar(4)));
        assert_eq!(IStar(2).isogeny_transform(M::MeetsFar), Ok(IStar(1)));
        assert_eq!(IStar(0).isogeny_transform(M::MeetsFar), Ok(IStar(0)));
    }

    #[test]
    fn isogeny_errors() {
        use TorsionMarking as M;
        assert_eq!(
            IIStar.isogeny_transform(M::None),
            Err(FiberError::UnsupportedFiber(IIStar))
        );
        assert_eq!(
            IV.isogeny_transform(M::None),
            Err(FiberError::UnsupportedFiber(IV))
        );
        assert!(matches!(
            I(3).isogeny_transform(M::MeetsTheta0),
            Err(FiberError::IllegalMarking { .. })
        ));
        assert!(matches!(
            I(4).isogeny_transform(M::None),
            Err(FiberError::IllegalMarking { .. })
        ));
        assert!(matches!(
            IStar(2).isogeny_transform(M::MeetsTheta0),
            Err(FiberError::IllegalMarking { .. })
        ));
        assert!(III.isogeny_transform(M::None).is_err());
    }

    #[test]
    fn symbol_round_trip() {
        for s in [
            "I0", "I12", "I4*", "I0*", "II", "III", "IV", "II*", "III*", "IV*",
        ] {
            let k: KodairaType = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        for bad in ["I-1", "I1*2", "i3", "I", "V", "I01", "I*", "II**", ""] {
            assert!(bad.parse::<KodairaType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![IStar(1), I(3), IIStar, I(1), II, IStar(0)];
        v.sort();
        assert_eq!(v, vec![II, IIStar, I(1), I(3), IStar(0), IStar(1)]);
    }
}
