//! Exact computations with elliptic fibrations on rational elliptic surfaces
//! and on the K3 surfaces obtained from them by quadratic base change.
//!
//! * [`fiber`]: Kodaira fiber symbols and their transformation rules.
//! * [`surface`]: fiber configurations, Shioda–Tate bookkeeping, type 1/2 tests.
//! * [`base_change`]: quadratic base change and the extremal K3 enumeration.
//! * [`ns`]: intersection arithmetic in the blow-up basis of NS(R).
//! * [`poly`]: exact multivariate polynomials, resultants, square parts.
//! * [`weierstrass`]: from a double plane and a pencil to a Weierstrass
//!   model, 2-isogenies, and fiber types read off valuations.

pub mod base_change;
pub mod fiber;
pub mod ns;
pub mod poly;
pub mod surface;
pub mod weierstrass;

pub use base_change::{
    apply_quadratic_base_change, builtin_extremal_res, deduplicate_by_transcendental,
    enumerate_extremal_k3, is_extremal_k3_base_change, BaseChangeError, BranchSelection,
    BranchSlot, DedupReport, ExtremalRes, ExtremalRow, TranscendentalForm,
};
pub use fiber::{FiberError, KodairaType, TorsionMarking};
pub use ns::{DivisorClass, NsError};
pub use poly::{parse_poly, MultiPoly, PolyError, Rational, Var};
pub use surface::{
    quotient_surface_kind, FiberConfiguration, QuotientKind, SurfaceClass, SurfaceError,
    Type2Report,
};
pub use weierstrass::{
    extract_genus_one_fibration, fiber_configuration_of, kodaira_type_at_place, parse_ratfunc,
    quartic_to_weierstrass, singular_places, torsion_marking_at_place, two_isogeny_quotient,
    DoubleCoverModel, GenusOneQuartic, PencilModel, Place, PlaceFiber, PlaceValuations,
    QuarticPoint, WeierstrassError, WeierstrassModel,
};
