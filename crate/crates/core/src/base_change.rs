//! Quadratic base change of rational elliptic surfaces, the catalogue of
//! extremal rational elliptic surfaces, and the enumeration of the extremal
//! K3 fibrations they produce.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fiber::{FiberError, KodairaType};
use crate::surface::{FiberConfiguration, SurfaceClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseChangeError {
    #[error("fiber {0} is not reduced and cannot be a branch fiber")]
    NonReducedBranch(KodairaType),
    #[error("branch fiber {0} is not available in the configuration")]
    UnavailableBranch(KodairaType),
}

impl From<FiberError> for BaseChangeError {
    fn from(e: FiberError) -> Self {
        match e {
            FiberError::NonReducedBranch(k) => BaseChangeError::NonReducedBranch(k),
            other => unreachable!("ramified transform only fails on non-reduced fibers: {other}"),
        }
    }
}

/// One of the two branch points of a quadratic base change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BranchSlot {
    Smooth,
    Singular(KodairaType),
}

impl From<KodairaType> for BranchSlot {
    fn from(k: KodairaType) -> Self {
        if k.is_smooth() {
            BranchSlot::Smooth
        } else {
            BranchSlot::Singular(k)
        }
    }
}

impl fmt::Display for BranchSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchSlot::Smooth => f.write_str("I0"),
            BranchSlot::Singular(k) => k.fmt(f),
        }
    }
}

/// Unordered pair of branch slots, selected by fiber type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchSelection {
    slots: [BranchSlot; 2],
}

impl BranchSelection {
    pub fn new(a: impl Into<BranchSlot>, b: impl Into<BranchSlot>) -> Self {
        let mut slots = [a.into(), b.into()];
        slots.sort();
        BranchSelection { slots }
    }

    pub fn smooth() -> Self {
        Self::new(BranchSlot::Smooth, BranchSlot::Smooth)
    }

    pub fn slots(&self) -> [BranchSlot; 2] {
        self.slots
    }

    pub fn both_singular(&self) -> bool {
        self.slots
            .iter()
            .all(|s| matches!(s, BranchSlot::Singular(_)))
    }

    /// The branch pair written as a configuration, e.g. `2I1` or `I9+I1`.
    pub fn to_notation(&self) -> String {
        let mut c = FiberConfiguration::new();
        for s in self.slots {
            if let BranchSlot::Singular(k) = s {
                c.add(k, 1);
            }
        }
        let smooth = self
            .slots
            .iter()
            .filter(|s| **s == BranchSlot::Smooth)
            .count();
        match (c.is_empty(), smooth) {
            (_, 0) => c.to_notation(),
            (true, n) => format!("{n}I0").replace("1I0", "I0"),
            (false, _) => format!("{}+I0", c.to_notation()),
        }
    }

    pub fn symbols(&self) -> [String; 2] {
        self.slots.map(|s| s.to_string())
    }
}

impl Serialize for BranchSelection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.symbols().serialize(s)
    }
}

/// Pulls `config` back along a double cover of the base branched at the two
/// given slots. Branch fibers are replaced by their ramified images and every
/// other fiber appears twice.
pub fn apply_quadratic_base_change(
    config: &FiberConfiguration,
    branch: &BranchSelection,
) -> Result<FiberConfiguration, BaseChangeError> {
    let mut rest = config.clone();
    let mut images = Vec::new();
    for slot in branch.slots() {
        if let BranchSlot::Singular(k) = slot {
            if !k.is_reduced() {
                return Err(BaseChangeError::NonReducedBranch(k));
            }
            if !rest.remove_one(k) {
                return Err(BaseChangeError::UnavailableBranch(k));
            }
            images.push(k.ramified_transform()?);
        }
    }
    let mut out = FiberConfiguration::new();
    for (k, n) in rest.iter() {
        out.add(k, 2 * n);
    }
    for k in images {
        out.add(k, 1);
    }
    Ok(out)
}

/// Whether the base change of `res_config` branched at `branch` is an
/// extremal elliptic K3 surface: the surface must be an extremal rational
/// elliptic surface and both branch fibers singular and reduced.
pub fn is_extremal_k3_base_change(
    res_config: &FiberConfiguration,
    branch: &BranchSelection,
) -> Result<bool, BaseChangeError> {
    let k3 = apply_quadratic_base_change(res_config, branch)?;
    let res_extremal =
        res_config.euler_characteristic() == 12 && res_config.trivial_lattice_rank() == 8;
    Ok(res_extremal && branch.both_singular() && k3.trivial_lattice_rank() == 18)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRes {
    pub id: &'static str,
    pub config: FiberConfiguration,
    /// At least two reduced singular fibers, counted with multiplicity.
    pub eligible: bool,
}

/// Miranda–Persson labels with their singular fibers, in the order the
/// enumeration reports them. The last four have fewer than two reduced
/// singular fibers.
const CATALOGUE: [(&str, &str); 16] = [
    ("X_211", "II*+2I1"),
    ("X_411", "I4*+2I1"),
    ("X_9111", "I9+3I1"),
    ("X_321", "III*+I2+I1"),
    ("X_8211", "I8+I2+2I1"),
    ("X_431", "IV*+I3+I1"),
    ("X_222", "I2*+2I2"),
    ("X_141", "I1*+I4+I1"),
    ("X_6321", "I6+I3+I2+I1"),
    ("X_5511", "2I5+2I1"),
    ("X_4422", "2I4+2I2"),
    ("X_3333", "4I3"),
    ("X_22", "II*+II"),
    ("X_33", "III*+III"),
    ("X_44", "IV*+IV"),
    ("X_11", "2I0*"),
];

/// The sixteen extremal rational elliptic surfaces.
pub fn builtin_extremal_res() -> Vec<ExtremalRes> {
    CATALOGUE
        .iter()
        .map(|(id, notation)| {
            let config: FiberConfiguration =
                notation.parse().expect("catalogue entries are well formed");
            ExtremalRes {
                id,
                eligible: config.reduced_singular_count() >= 2,
                config,
            }
        })
        .collect()
}

/// Positive definite even binary form `[[a, b], [b, c]]` stored as `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TranscendentalForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TranscendentalForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        TranscendentalForm { a, b, c }
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.c - self.b * self.b
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.c > 0 && self.determinant() > 0
    }
}

impl fmt::Display for TranscendentalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl Serialize for TranscendentalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.a, self.b, self.c].serialize(s)
    }
}

/// Transcendental lattices of the 25 extremal base changes, keyed by surface
/// and branch pair. Reference data; not derived here.
const TRANSCENDENTAL: [(&str, &str, (i64, i64, i64)); 25] = [
    ("X_211", "2I1", (2, 0, 2)),
    ("X_411", "2I1", (2, 0, 2)),
    ("X_9111", "2I1", (4, 2, 10)),
    ("X_9111", "I9+I1", (2, 0, 2)),
    ("X_321", "I2+I1", (2, 0, 4)),
    ("X_8211", "2I1", (4, 0, 4)),
    ("X_8211", "I2+I1", (2, 0, 4)),
    ("X_8211", "I8+I1", (2, 0, 4)),
    ("X_8211", "I8+I2", (2, 0, 2)),
    ("X_431", "I3+I1", (2, 0, 6)),
    ("X_222", "2I2", (4, 0, 4)),
    ("X_141", "I4+I1", (2, 0, 8)),
    ("X_6321", "I2+I1", (6, 0, 12)),
    ("X_6321", "I3+I1", (2, 0, 6)),
    ("X_6321", "I6+I1", (2, 0, 12)),
    ("X_6321", "I3+I2", (4, 0, 6)),
    ("X_6321", "I6+I2", (4, 2, 4)),
    ("X_6321", "I6+I3", (2, 0, 4)),
    ("X_5511", "2I1", (10, 0, 10)),
    ("X_5511", "I5+I1", (2, 0, 10)),
    ("X_5511", "2I5", (2, 0, 2)),
    ("X_4422", "2I2", (4, 0, 4)),
    ("X_4422", "I4+I2", (4, 0, 8)),
    ("X_4422", "2I4", (4, 0, 4)),
    ("X_3333", "2I3", (6, 0, 6)),
];

/// Rows known to give the same K3 surface, as stated with the classification.
/// Every row not listed is its own class.
const STATED_COINCIDENCES: [&[usize]; 4] =
    [&[1, 2, 4, 9, 21], &[5, 7, 8], &[6, 11, 22, 24], &[10, 14]];

pub fn lookup_transcendental(res_id: &str, branch: &BranchSelection) -> Option<TranscendentalForm> {
    let key = branch.to_notation();
    TRANSCENDENTAL
        .iter()
        .find(|(id, b, _)| *id == res_id && *b == key)
        .map(|(_, _, (a, b, c))| TranscendentalForm::new(*a, *b, *c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    /// 1-based position in the enumeration.
    pub index: usize,
    pub res_id: &'static str,
    pub res_config: FiberConfiguration,
    pub branch: BranchSelection,
    pub k3_config: FiberConfiguration,
    pub t_x: Option<TranscendentalForm>,
}

/// All unordered pairs of reduced singular fiber types that `config` can
/// supply, ordered by smaller type then larger type.
pub fn admissible_branch_pairs(config: &FiberConfiguration) -> Vec<BranchSelection> {
    let reduced: Vec<(KodairaType, u32)> = config.iter().filter(|(k, _)| k.is_reduced()).collect();
    let mut pairs = Vec::new();
    for (i, (k1, n1)) in reduced.iter().enumerate() {
        if *n1 >= 2 {
            pairs.push(BranchSelection::new(*k1, *k1));
        }
        for (k2, _) in &reduced[i + 1..] {
            pairs.push(BranchSelection::new(*k1, *k2));
        }
    }
    pairs.sort_by_key(|p| {
        let [a, b] = p.slots();
        (a, b)
    });
    pairs
}

/// Every extremal elliptic K3 fibration obtained as a quadratic base change
/// of an extremal rational elliptic surface branched at two singular reduced
/// fibers.
pub fn enumerate_extremal_k3() -> Vec<ExtremalRow> {
    let mut rows = Vec::new();
    for res in builtin_extremal_res().into_iter().filter(|r| r.eligible) {
        for branch in admissible_branch_pairs(&res.config) {
            let k3_config = apply_quadratic_base_change(&res.config, &branch)
                .expect("branch pairs are drawn from the configuration");
            debug_assert_eq!(
                k3_config.euler_characteristic(),
                SurfaceClass::K3.euler_characteristic()
            );
            rows.push(ExtremalRow {
                index: rows.len() + 1,
                res_id: res.id,
                t_x: lookup_transcendental(res.id, &branch),
                res_config: res.config.clone(),
                branch,
                k3_config,
            });
        }
    }
    rows
}

/// A transcendental-lattice class that the stated grouping splits apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub t_x: TranscendentalForm,
    pub tx_class: Vec<usize>,
    pub stated_classes: Vec<Vec<usize>>,
    /// Rows outside the largest stated class inside `tx_class`.
    pub flagged: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DedupReport {
    pub stated_classes: Vec<Vec<usize>>,
    pub tx_classes: Vec<Vec<usize>>,
    pub divergences: Vec<Divergence>,
}

impl DedupReport {
    pub fn stated_class_count(&self) -> usize {
        self.stated_classes.len()
    }

    pub fn tx_class_count(&self) -> usize {
        self.tx_classes.len()
    }

    pub fn flagged_rows(&self) -> Vec<usize> {
        self.divergences
            .iter()
            .flat_map(|d| d.flagged.iter().copied())
            .collect()
    }
}

/// Groups rows into K3 surfaces twice: by the stated coincidences and by
/// exact equality of transcendental forms, and records where they disagree.
pub fn deduplicate_by_transcendental(rows: &[ExtremalRow]) -> DedupReport {
    let indices: Vec<usize> = rows.iter().map(|r| r.index).collect();

    let mut stated_classes: Vec<Vec<usize>> = Vec::new();
    for &i in &indices {
        if stated_classes.iter().any(|c| c.contains(&i)) {
            continue;
        }
        match STATED_COINCIDENCES.iter().find(|g| g.contains(&i)) {
            Some(group) => stated_classes.push(
                group
                    .iter()
                    .copied()
                    .filter(|j| indices.contains(j))
                    .collect(),
            ),
            None => stated_classes.push(vec![i]),
        }
    }

    let mut by_tx: BTreeMap<Option<TranscendentalForm>, Vec<usize>> = BTreeMap::new();
    let mut tx_order = Vec::new();
    for r in rows {
        let entry = by_tx.entry(r.t_x).or_default();
        if entry.is_empty() {
            tx_order.push(r.t_x);
        }
        entry.push(r.index);
    }
    let tx_classes: Vec<Vec<usize>> = tx_order.iter().map(|k| by_tx[k].clone()).collect();

    let mut divergences = Vec::new();
    for (key, class) in tx_order.iter().zip(&tx_classes) {
        let Some(t_x) = key else { continue };
        let mut parts: Vec<Vec<usize>> = stated_classes
            .iter()
            .filter(|c| c.iter().any(|i| class.contains(i)))
            .cloned()
            .collect();
        if parts.len() <= 1 {
            continue;
        }
        parts.sort_by_key(|c| c[0]);
        let largest = parts
            .iter()
            .enumerate()
            .max_by_key(|(pos, c)| (c.len(), std::cmp::Reverse(*pos)))
            .map(|(pos, _)| pos)
            .unwrap_or(0);
        let flagged = parts
            .iter()
            .enumerate()
            .filter(|(pos, _)| *pos != largest)
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        divergences.push(Divergence {
            t_x: *t_x,
            tx_class: class.clone(),
            stated_classes: parts,
            flagged,
        });
    }

    DedupReport {
        stated_classes,
        tx_classes,
        divergences,
    }
}
