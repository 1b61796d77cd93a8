//! The secondary class of the split oscillator extension `0 → h3 → osc → R → 0`
//! for the central functional `f_z`, from two flat sections.

use charclass::characteristic::{secondary_class, InvarianceMode};
use charclass::exact::Rational;
use charclass::extension::{oscillator_extension, section_curvature, Section};
use charclass::lie::Representation;
use charclass::multilinear::SymMultiMap;

fn main() -> charclass::Result<()> {
    let ext = oscillator_extension();
    let r = Rational::from;
    // r ↦ w and r ↦ z + w
    let s0 = Section::from_images(4, &[vec![r(0), r(0), r(0), r(1)]]);
    let sz = Section::from_images(4, &[vec![r(0), r(0), r(1), r(1)]]);
    for (name, s) in [("s0", &s0), ("sz", &sz)] {
        println!("curvature of {name} is zero: {}", section_curvature(&ext, s)?.is_zero());
    }

    let fz = SymMultiMap::dual(3, 2);
    let rep = Representation::trivial(ext.base().clone(), 1);
    let class = secondary_class(&ext, &fz, &s0, &sz, &rep, InvarianceMode::Section)?;
    println!("degree {}, dim H = {}, coordinates {:?}", class.degree, class.h_dim(), class.coordinates);
    Ok(())
}
