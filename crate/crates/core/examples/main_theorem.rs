//! Checks `(k − n + 1) dΔ_f(σ_0..σ_n) = Σ_i (−1)^i Δ_f(σ_0..σ̂_i..σ_n)` for
//! the central extension of `aff1 ⊕ aff1` by a line, where both sides are
//! nonzero.

use charclass::characteristic::verify_main_theorem;
use charclass::exact::{Matrix, Rational};
use charclass::extension::{Extension, Section};
use charclass::lie::{LieAlgebra, Representation};
use charclass::multilinear::SymMultiMap;

fn main() -> charclass::Result<()> {
    let r = Rational::from;
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let unit = |d: usize, i: usize| (0..d).map(|k| r(i64::from(k == i))).collect::<Vec<_>>();

    let total = LieAlgebra::from_brackets(
        names(&["a1", "b1", "a2", "b2", "c"]),
        vec![(0, 1, unit(5, 1)), (2, 3, unit(5, 3)), (0, 2, unit(5, 4))],
    )?;
    let base = LieAlgebra::from_brackets(
        names(&["a1", "b1", "a2", "b2"]),
        vec![(0, 1, unit(4, 1)), (2, 3, unit(4, 3))],
    )?;
    let kernel = LieAlgebra::from_brackets(names(&["c"]), Vec::new())?;
    let iota = Matrix::from_columns(5, &[unit(5, 4)]);
    let q = Matrix::from_fn(4, 5, |i, j| r(i64::from(i == j)));
    let ext = Extension::new(total, base, kernel, iota, q)?;
    let rep = Representation::trivial(ext.base().clone(), 1);

    // σ_i(e_j) = e_j + shift_i(e_j) c
    let section = |shift: [i64; 4]| {
        Section::new(Matrix::from_fn(5, 4, |i, j| if i == 4 { r(shift[j]) } else { r(i64::from(i == j)) }))
    };
    let sections = [section([0, 0, 0, 0]), section([1, -2, 0, 3]), section([2, 1, -1, 0])];
    let f = SymMultiMap::from_fn(2, 1, 1, |_| vec![r(1)]);
    for n in 1..=2 {
        let report = verify_main_theorem(&ext, &f, &sections[..=n], &rep)?;
        println!(
            "n = {n}: equal {}, sign {:?}, lhs zero {}",
            report.equal(),
            report.sign(),
            report.lhs.is_zero()
        );
    }
    Ok(())
}
