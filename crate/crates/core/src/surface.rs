//! Fiber configurations of elliptic surfaces and the bookkeeping built on
//! them: Euler characteristic, trivial lattice rank, Mordell–Weil rank via
//! Shioda–Tate, extremality, and the admissibility predicates for fibrations
//! of type 1 and type 2 with respect to an involution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fiber::KodairaType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("Picard number {picard} is smaller than 2 + trivial lattice rank {trivial}")]
    RankUnderflow { picard: u32, trivial: u32 },
    #[error("a symplectic involution always has a non-empty fixed locus")]
    InconsistentInput,
    #[error("cannot parse fiber configuration: bad token {token:?}")]
    Syntax { token: String },
}

/// Multiset of singular fibers. Smooth fibers are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FiberConfiguration {
    entries: BTreeMap<KodairaType, u32>,
}

impl FiberConfiguration {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (KodairaType, u32)>>(items: I) -> Self {
        let mut c = Self::new();
        for (k, n) in items {
            c.add(k, n);
        }
        c
    }

    pub fn add(&mut self, fiber: KodairaType, count: u32) {
        if fiber.is_smooth() || count == 0 {
            return;
        }
        *self.entries.entry(fiber).or_insert(0) += count;
    }

    /// Removes one fiber of the given type. Returns false when none is present.
    pub fn remove_one(&mut self, fiber: KodairaType) -> bool {
        match self.entries.get_mut(&fiber) {
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.entries.remove(&fiber);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, fiber: KodairaType) -> u32 {
        self.entries.get(&fiber).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (KodairaType, u32)> + '_ {
        self.entries.iter().map(|(k, n)| (*k, *n))
    }

    /// Every fiber listed once per occurrence.
    pub fn fibers(&self) -> impl Iterator<Item = KodairaType> + '_ {
        self.iter()
            .flat_map(|(k, n)| std::iter::repeat_n(k, n as usize))
    }

    pub fn total_count(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn euler_characteristic(&self) -> u32 {
        self.iter().map(|(k, n)| k.euler_number() * n).sum()
    }

    pub fn trivial_lattice_rank(&self) -> u32 {
        self.iter().map(|(k, n)| k.root_rank() * n).sum()
    }

    /// Shioda–Tate: `picard - 2 - trivial_lattice_rank`.
    pub fn mw_rank(&self, picard: u32) -> Result<u32, SurfaceError> {
        let trivial = self.trivial_lattice_rank();
        picard
            .checked_sub(2 + trivial)
            .ok_or(SurfaceError::RankUnderflow { picard, trivial })
    }

    pub fn is_extremal(&self, class: SurfaceClass, picard: u32) -> bool {
        picard == class.max_picard() && self.mw_rank(picard) == Ok(0)
    }

    /// Number of reduced singular fibers, counted with multiplicity.
    pub fn reduced_singular_count(&self) -> u32 {
        self.iter()
            .filter(|(k, _)| k.is_reduced())
            .map(|(_, n)| n)
            .sum()
    }

    /// Candidate test for a fibration of type 2: equal fibers pair up and at
    /// most two admissible fibers may be left over.
    pub fn type2_candidate(&self) -> Type2Report {
        let mut pairing = BTreeMap::new();
        let mut unpaired = Vec::new();
        for (k, n) in self.iter() {
            if n / 2 > 0 {
                pairing.insert(k, n / 2);
            }
            if n % 2 == 1 {
                unpaired.push(k);
            }
        }
        let is_candidate =
            unpaired.len() <= 2 && unpaired.iter().all(|k| is_type2_branch_image(*k));
        Type2Report {
            is_candidate,
            unpaired,
            pairing,
        }
    }

    /// No `II*` and no `IV*`; both are incompatible with a 2-torsion section.
    pub fn type1_symplectic_admissible(&self) -> bool {
        self.count(KodairaType::IIStar) == 0 && self.count(KodairaType::IVStar) == 0
    }

    /// Fiber bounds for a type 1 fibration under a non-symplectic involution
    /// fixing two smooth genus 1 curves. The hypothesis is the caller's to
    /// guarantee; it is not checked here.
    ///
    /// Under the stronger assumption that the involution acts trivially on
    /// NS(X), the Mordell–Weil group is contained in `(Z/2Z)^2`.
    pub fn type1_nonsymplectic_admissible(&self) -> bool {
        let irreducible: u32 = self
            .iter()
            .filter(|(k, _)| k.component_count() == 1)
            .map(|(_, n)| n)
            .sum();
        if irreducible > 6 {
            return false;
        }
        self.iter().all(|(k, _)| match k {
            KodairaType::IIStar
            | KodairaType::IVStar
            | KodairaType::II
            | KodairaType::III
            | KodairaType::IV => false,
            KodairaType::I(n) => !(n % 2 == 1 && n > 7),
            KodairaType::IStar(m) => !((m % 2 == 1 && m > 5) || (m % 2 == 0 && m > 12)),
            KodairaType::IIIStar => true,
        })
    }

    /// Entries in the reading order of [`Self::to_notation`].
    pub fn notation_entries(&self) -> Vec<(KodairaType, u32)> {
        let mut items: Vec<_> = self.iter().collect();
        items.sort_by_key(|(k, _)| notation_key(*k));
        items
    }

    /// Additive notation in the usual reading order, e.g. `2III*+I4+I2`.
    pub fn to_notation(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        self.notation_entries()
            .iter()
            .map(|(k, n)| {
                if *n == 1 {
                    k.to_string()
                } else {
                    format!("{n}{k}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn notation_key(k: KodairaType) -> (u8, std::cmp::Reverse<u32>) {
    use std::cmp::Reverse;
    match k {
        KodairaType::IIStar => (0, Reverse(0)),
        KodairaType::IIIStar => (1, Reverse(0)),
        KodairaType::IVStar => (2, Reverse(0)),
        KodairaType::IV => (3, Reverse(0)),
        KodairaType::III => (4, Reverse(0)),
        KodairaType::II => (5, Reverse(0)),
        KodairaType::IStar(n) => (6, Reverse(n)),
        KodairaType::I(n) => (7, Reverse(n)),
    }
}

/// Images of reduced fibers under a ramified quadratic base change.
fn is_type2_branch_image(k: KodairaType) -> bool {
    match k {
        KodairaType::I(n) => n % 2 == 0,
        KodairaType::IV | KodairaType::IStar(0) | KodairaType::IVStar => true,
        _ => false,
    }
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_notation())
    }
}

/// Parses additive notation such as `I9+3I1` or `2III*+2I_2+2I_1`.
/// Whitespace and underscores are ignored; `0` denotes the empty configuration.
impl FromStr for FiberConfiguration {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        let mut config = FiberConfiguration::new();
        if compact == "0" {
            return Ok(config);
        }
        for token in compact.split('+') {
            let bad = || SurfaceError::Syntax {
                token: token.to_string(),
            };
            let split = token.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
            let (digits, symbol) = token.split_at(split);
            let count = if digits.is_empty() {
                1
            } else if digits.starts_with('0') {
                return Err(bad());
            } else {
                digits.parse::<u32>().map_err(|_| bad())?
            };
            let fiber: KodairaType = symbol.parse().map_err(|_| bad())?;
            config.add(fiber, count);
        }
        Ok(config)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    #[serde(rename = "type")]
    fiber: KodairaType,
    count: u32,
}

/// JSON array of `{"type": "I4*", "count": 2}` in notation order.
impl Serialize for FiberConfiguration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (fiber, count) in self.notation_entries() {
            seq.serialize_element(&EntryRepr { fiber, count })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for FiberConfiguration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<EntryRepr>::deserialize(d)?;
        if let Some(e) = entries.iter().find(|e| e.count == 0) {
            return Err(serde::de::Error::custom(format!(
                "count for {} must be positive",
                e.fiber
            )));
        }
        Ok(Self::from_counts(
            entries.into_iter().map(|e| (e.fiber, e.count)),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceClass {
    RationalElliptic,
    K3,
}

impl SurfaceClass {
    pub fn euler_characteristic(self) -> u32 {
        match self {
            SurfaceClass::RationalElliptic => 12,
            SurfaceClass::K3 => 24,
        }
    }

    pub fn max_picard(self) -> u32 {
        match self {
            SurfaceClass::RationalElliptic => 10,
            SurfaceClass::K3 => 20,
        }
    }
}

/// Birational type of the quotient of a K3 surface by an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuotientKind {
    K3,
    Enriques,
    Rational,
}

pub fn quotient_surface_kind(
    symplectic: bool,
    fixed_locus_empty: bool,
) -> Result<QuotientKind, SurfaceError> {
    match (symplectic, fixed_locus_empty) {
        (true, true) => Err(SurfaceError::InconsistentInput),
        (true, false) => Ok(QuotientKind::K3),
        (false, true) => Ok(QuotientKind::Enriques),
        (false, false) => Ok(QuotientKind::Rational),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Type2Report {
    pub is_candidate: bool,
    pub unpaired: Vec<KodairaType>,
    /// Number of pairs formed for each fiber type.
    pub pairing: BTreeMap<KodairaType, u32>,
}
