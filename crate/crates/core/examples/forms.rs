//! Wedge products, the Chevalley–Eilenberg differential and the Bianchi
//! identity on Lie-algebra-valued forms.

use charclass::lie::{heisenberg3, oscillator};
use charclass::multilinear::{
    ce_differential, covariant_derivative, curvature, wedge, BilinearProduct, Cochain, LinearAction,
};

fn main() -> charclass::Result<()> {
    let h3 = heisenberg3();
    let trivial = charclass::lie::Representation::trivial(h3.clone(), 1);
    let p: Cochain = Cochain::dual(3, 0);
    let q: Cochain = Cochain::dual(3, 1);
    let z: Cochain = Cochain::dual(3, 2);
    let pq = wedge(&p, &q, &BilinearProduct::scalars())?;
    println!("d z* = {:?}", ce_differential(&z, &trivial)?.values());
    println!("p* ∧ q* = {:?}", pq.values());

    // any linear map h3 → osc has curvature satisfying d_S R = 0 with S = ad∘σ
    let osc = oscillator();
    let sigma = Cochain::from_fn(1, 3, 4, |t| {
        (0..4).map(|k| charclass::exact::Rational::from(((t[0] + 2 * k) % 3) as i64 - 1)).collect()
    });
    let r = curvature(&sigma, &h3, &BilinearProduct::lie_bracket(&osc))?;
    let ad: Vec<_> = (0..3).map(|i| osc.adjoint().action_of(sigma.get(&[i]))).collect();
    let s = LinearAction::new(h3, 4, ad)?;
    println!("d_S R = 0: {}", covariant_derivative(&r, &s)?.is_zero());
    Ok(())
}
