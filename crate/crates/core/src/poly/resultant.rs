use super::multi::{MultiPoly, Var};
use super::PolyError;

/// Resultant of `p` and `q` with respect to `var`, normalized as
/// `lc(q)^deg(p) * prod p(beta)` over the roots `beta` of `q`.
///
/// With this normalization, `resultant(p, var - s, var) = p(s)`; swapping
/// the arguments multiplies by `(-1)^(deg p * deg q)`. Linear arguments take
/// a closed form; everything else goes through fraction-free Bareiss
/// elimination of the Sylvester matrix.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: Var) -> Result<MultiPoly, PolyError> {
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if m == 0 && n == 0 {
        return Err(PolyError::DegenerateResultant(var));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    if n == 1 {
        return Ok(linear_resultant(&pc, &qc));
    }
    if m == 1 {
        let r = linear_resultant(&qc, &pc);
        return Ok(if n % 2 == 1 { -r } else { r });
    }
    // Sylvester matrix of (q, p): m shifted rows of q, then n shifted rows of p.
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..m {
        rows.push(sylvester_row(&qc, shift, size));
    }
    for shift in 0..n {
        rows.push(sylvester_row(&pc, shift, size));
    }
    Ok(bareiss_determinant(rows))
}

/// `sum_i p_i * (-q0)^i * q1^(deg p - i)`: the resultant against `q1 v + q0`.
fn linear_resultant(pc: &[MultiPoly], qc: &[MultiPoly]) -> MultiPoly {
    let m = pc.len() - 1;
    let root_num = -&qc[0];
    let lead = &qc[1];
    let mut acc = MultiPoly::zero();
    for (i, c) in pc.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc + &(c * &(&root_num.pow(i as u32) * &lead.pow((m - i) as u32)));
    }
    acc
}

fn sylvester_row(coeffs: &[MultiPoly], shift: usize, size: usize) -> Vec<MultiPoly> {
    let mut row = vec![MultiPoly::zero(); size];
    // highest coefficient first
    for (j, c) in coeffs.iter().rev().enumerate() {
        row[shift + j] = c.clone();
    }
    row
}

/// Determinant by fraction-free Gaussian elimination; all divisions are exact.
pub fn bareiss_determinant(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss elimination divides exactly");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn linear_examples() {
        assert_eq!(
            resultant(&p("x1 - t*x2"), &p("x1 + x2"), Var::X1).unwrap(),
            p("-(1 + t)*x2")
        );
        assert!(resultant(&p("x1^2"), &p("x1"), Var::X1).unwrap().is_zero());
    }

    #[test]
    fn degenerate() {
        assert_eq!(
            resultant(&p("x0 + 1"), &p("t"), Var::X1),
            Err(PolyError::DegenerateResultant(Var::X1))
        );
    }

    #[test]
    fn quadratic_discriminant_shape() {
        // Res(x^2 + b x + c, 2x + b) relates to the discriminant b^2 - 4c.
        let f = p("x0^2 + t*x0 + x2");
        let fp = p("2*x0 + t");
        // p(beta) at beta = -t/2, times lc(q)^2 = 4
        assert_eq!(resultant(&f, &fp, Var::X0).unwrap(), p("4*x2 - t^2"));
        // Sylvester route, swapped order: (-1)^(2*1) = 1
        assert_eq!(resultant(&fp, &f, Var::X0).unwrap(), p("4*x2 - t^2"));
    }

    #[test]
    fn sylvester_matches_product_of_roots() {
        // p = (x - 1)(x - 2)(x - t), q = (x - 3)(x + t): p(3) * p(-t)
        let pp = p("(x0 - 1)*(x0 - 2)*(x0 - t)");
        let qq = p("(x0 - 3)*(x0 + t)");
        let expected = &pp.substitute(Var::X0, &p("3")) * &pp.substitute(Var::X0, &p("-t"));
        assert_eq!(resultant(&pp, &qq, Var::X0).unwrap(), expected);
        // swapped: sign (-1)^(3*2) = +1
        assert_eq!(resultant(&qq, &pp, Var::X0).unwrap(), expected);
    }

    #[test]
    fn running_example_resultant() {
        let cover = p("(x0^2*x1 + x2^3)*(x0^2*x2 + x1^3)");
        let r = resultant(&cover, &p("x1 - t*x2"), Var::X1).unwrap();
        assert_eq!(r, p("x2^2*(t*x0^2 + x2^2)*(x0^2 + t^3*x2^2)"));
    }
}
