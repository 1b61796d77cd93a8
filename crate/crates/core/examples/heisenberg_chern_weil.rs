//! The primary class of the Heisenberg central extension for the identity
//! functional on the centre, computed from several sections.

use charclass::characteristic::{chern_weil, classes_equal, cohomology_space, InvarianceMode};
use charclass::exact::{Matrix, Rational};
use charclass::extension::{heisenberg_extension, Section};
use charclass::lie::Representation;
use charclass::multilinear::SymMultiMap;

fn main() -> charclass::Result<()> {
    let ext = heisenberg_extension();
    let rep = Representation::trivial(ext.base().clone(), 1);
    let f = SymMultiMap::dual(1, 0);
    let r = Rational::new;

    // x ↦ x + a z, y ↦ y + b z for a few (a, b)
    let shifts = [(r(0, 1), r(0, 1)), (r(2, 1), r(-1, 1)), (r(1, 2), r(3, 1))];
    let mut reps = Vec::new();
    for (a, b) in shifts {
        let one = Rational::one();
        let zero = Rational::zero();
        let m = Matrix::from_rows(vec![
            vec![one.clone(), zero.clone()],
            vec![zero, one],
            vec![a, b],
        ])?;
        let class = chern_weil(&ext, &f, &Section::new(m), &rep, InvarianceMode::Section)?;
        println!("coordinates {:?}", class.coordinates);
        reps.push(class.representative);
    }
    let h2 = cohomology_space(&rep, 2);
    println!("all equal: {}", classes_equal(&reps[0], &reps[1], &h2)? && classes_equal(&reps[0], &reps[2], &h2)?);
    Ok(())
}
