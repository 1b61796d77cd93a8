//! Building algebras from structure constants, Jacobi checks and semidirect
//! products.

use charclass::exact::Rational;
use charclass::lie::{abelian, check_jacobi, heisenberg3, rotation_derivation, semidirect_product, LieAlgebra};

fn main() -> charclass::Result<()> {
    let r = Rational::from;
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    // [p, q] = z, [q, z] = q violates Jacobi
    let bad = LieAlgebra::from_brackets_unchecked(
        names(&["p", "q", "z"]),
        vec![(0, 1, vec![r(0), r(0), r(1)]), (1, 2, vec![r(0), r(1), r(0)])],
    )?;
    for v in check_jacobi(&bad).violations {
        println!("Jacobi fails on {:?}: {:?}", v.names, v.sum);
    }

    let osc = semidirect_product(&heisenberg3(), &abelian(1), &[rotation_derivation()])?;
    println!("oscillator basis {:?}", osc.basis_names());
    println!("[e0, p] = {:?}", osc.bracket_basis(3, 0));
    Ok(())
}
