//! Betti numbers and explicit cohomology bases of small Lie algebras.

use charclass::characteristic::{betti_numbers, cohomology_space, trivial_betti_numbers};
use charclass::lie::{abelian, heisenberg3, oscillator};
use charclass::multilinear::Cochain;

fn main() {
    for (name, g) in [("R^3", abelian(3)), ("h3", heisenberg3()), ("osc", oscillator())] {
        println!("{name}: trivial Betti numbers {:?}", trivial_betti_numbers(&g));
        println!("{name}: adjoint Betti numbers {:?}", betti_numbers(&g.adjoint()));
    }

    let h3 = heisenberg3().adjoint();
    let h2 = cohomology_space(&h3, 2);
    println!("H^2(h3, h3) has dimension {}", h2.h_dim());
    for c in h2.class_basis() {
        let nonzero: Vec<_> = c.entries().filter(|(_, v)| v.iter().any(|x| !x.is_zero())).collect();
        println!("  class with {} nonzero entries", nonzero.len());
    }

    // p* is closed and not exact
    let trivial = charclass::lie::Representation::trivial(heisenberg3(), 1);
    let h1 = cohomology_space(&trivial, 1);
    let pstar: Cochain = Cochain::dual(3, 0);
    println!("p* has coordinates {:?}", h1.coordinates(&pstar).unwrap());
}
