//! Inputs shared by the criterion benchmarks.

use k3fib::{parse_poly, DoubleCoverModel, PencilModel, QuarticPoint};

/// The double plane branched along `x0^2 x1 + x2^3` and `x0^2 x2 + x1^3`.
pub fn sample_cover() -> DoubleCoverModel {
    DoubleCoverModel::new(
        parse_poly("x0^2*x1 + x2^3").expect("valid polynomial"),
        parse_poly("x0^2*x2 + x1^3").expect("valid polynomial"),
    )
    .expect("cubics are coprime")
}

/// Lines through the point `(0:0:1)`, which yields a quartic with the
/// rational root `u = -1/t^3`.
pub fn sample_pencil() -> (PencilModel, QuarticPoint) {
    let pencil =
        PencilModel::new(parse_poly("x1 - t*x0").expect("valid polynomial")).expect("valid pencil");
    let point = QuarticPoint::parse("-1/t^3,0").expect("valid point");
    (pencil, point)
}
