//! Exact integrals over the projected simplex `t_i ≥ 0, Σ t_i ≤ 1`.

use charclass::exact::{integrate_monomial_simplex, integrate_poly_simplex, MultiPoly, Rational, Scalar};

fn main() -> charclass::Result<()> {
    for n in 1..=4 {
        println!("volume of D_{n}: {}", integrate_monomial_simplex(n, &vec![0; n])?);
    }
    // (1 - t1 - t2)^2 + 3 t1 t2
    let t1 = MultiPoly::variable(0, 2);
    let t2 = MultiPoly::variable(1, 2);
    let t0 = MultiPoly::constant(Rational::one(), 2).sub_ref(&t1).sub_ref(&t2);
    let p = t0.pow(2).add_ref(&t1.mul_ref(&t2).scale(&Rational::from(3)));
    println!("∫ {p} = {}", integrate_poly_simplex(&p)?);
    Ok(())
}
