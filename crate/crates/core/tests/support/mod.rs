//! Shared generators, fixtures and independent oracles for the integration
//! tests. The oracles deliberately avoid the library's own shortcuts: they
//! work on full index tables, iterated integrals and plain elimination.
#![allow(dead_code)]

use std::collections::BTreeMap;

use charclass::exact::{solve_linear, Matrix, MultiPoly, Rational, Scalar};
use charclass::extension::{
    heisenberg_extension, invariant_polynomials, oscillator_extension, Extension, InvariancePolicy,
    Section,
};
use charclass::lie::{abelian, heisenberg3, oscillator, rotation_derivation, semidirect_product};
use charclass::lie::{LieAlgebra, Representation};
use charclass::multilinear::{alt, BilinearProduct, Cochain, LinearAction, RawMultilinear, SymMultiMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Small rational with numerator in `-4..=4` and denominator in `1..=3`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.inverse().is_some() {
            return m;
        }
    }
}

pub fn random_cochain(rng: &mut ChaCha8Rng, p: usize, d: usize, m: usize) -> Cochain {
    Cochain::from_fn(p, d, m, |_| random_vec(rng, m))
}

pub fn random_sym(rng: &mut ChaCha8Rng, p: usize, n: usize, m: usize) -> SymMultiMap {
    SymMultiMap::from_fn(p, n, m, |_| random_vec(rng, m))
}

/// Polynomial in `nvars` variables with up to `terms` random terms of total
/// degree at most `max_degree`.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32, terms: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut term = MultiPoly::constant(small_rational(rng), nvars);
        for v in 0..nvars {
            let e = rng.gen_range(0..=budget);
            budget -= e;
            term = term.mul_ref(&MultiPoly::variable(v, nvars).pow(e));
        }
        out = out.add_ref(&term);
    }
    out
}

// ---------------------------------------------------------------- algebras

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["h", "e", "f"]),
        vec![(0, 1, qs(&[0, 2, 0])), (0, 2, qs(&[0, 0, -2])), (1, 2, qs(&[1, 0, 0]))],
    )
    .unwrap()
}

pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["x", "y", "z"]),
        vec![(0, 1, qs(&[0, 0, 1])), (1, 2, qs(&[1, 0, 0])), (0, 2, qs(&[0, -1, 0]))],
    )
    .unwrap()
}

pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["a", "b"]), vec![(0, 1, qs(&[0, 1]))]).unwrap()
}

/// The Euclidean algebra `osc / span(z)` with basis `(p, q, w)`.
pub fn e2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["p", "q", "w"]),
        vec![(0, 2, qs(&[0, -1, 0])), (1, 2, qs(&[1, 0, 0]))],
    )
    .unwrap()
}

pub fn line(name: &str) -> LieAlgebra {
    LieAlgebra::from_brackets(names(&[name]), Vec::new()).unwrap()
}

fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| qs(r)).collect()).unwrap()
}

/// Known algebras of dimension at most `max_dim`, each with a few modules.
pub fn catalogue(max_dim: usize) -> Vec<Vec<Representation>> {
    let mut out: Vec<Vec<Representation>> = Vec::new();
    let standard = |alg: LieAlgebra, extra: Vec<Representation>| {
        let mut reps = vec![
            Representation::trivial(alg.clone(), 1),
            Representation::trivial(alg.clone(), 2),
            alg.adjoint(),
        ];
        reps.extend(extra);
        reps
    };
    for d in 1..=3 {
        out.push(standard(abelian(d), vec![]));
    }
    out.push(standard(heisenberg3(), vec![]));
    let s = sl2();
    let sl2_std = Representation::new(
        s.clone(),
        vec![mat(&[&[1, 0], &[0, -1]]), mat(&[&[0, 1], &[0, 0]]), mat(&[&[0, 0], &[1, 0]])],
    )
    .unwrap();
    out.push(standard(s, vec![sl2_std]));
    out.push(standard(so3(), vec![]));
    let a = aff1();
    let aff_std =
        Representation::new(a.clone(), vec![mat(&[&[1, 0], &[0, 0]]), mat(&[&[0, 1], &[0, 0]])]).unwrap();
    let aff_char = Representation::new(a.clone(), vec![mat(&[&[3]]), mat(&[&[0]])]).unwrap();
    out.push(standard(a, vec![aff_std, aff_char]));
    let e = e2();
    let e_char = Representation::new(e.clone(), vec![mat(&[&[0]]), mat(&[&[0]]), mat(&[&[2]])]).unwrap();
    out.push(standard(e, vec![e_char]));
    out.push(standard(abelian(4), vec![]));
    out.push(standard(oscillator(), vec![]));
    out.push(standard(heisenberg3().direct_sum(&line("c")), vec![]));
    out.push(standard(sl2().direct_sum(&line("c")), vec![]));
    out.push(standard(aff1().direct_sum(&LieAlgebra::from_brackets(names(&["a2", "b2"]), vec![(0, 1, qs(&[0, 1]))]).unwrap()), vec![]));
    out.retain(|reps| reps[0].algebra().dim() <= max_dim);
    out
}

/// A module over a random catalogue algebra, with random bases of both the
/// algebra and the module.
pub fn random_module(rng: &mut ChaCha8Rng, max_dim: usize) -> Representation {
    let cat = catalogue(max_dim);
    let reps = cat.choose(rng).unwrap();
    let rep = reps.choose(rng).unwrap();
    let p = random_invertible(rng, rep.algebra().dim());
    let m = random_invertible(rng, rep.space_dim());
    let out = rep.change_basis(&p, &m).unwrap();
    assert!(out.check().is_ok());
    out
}

// -------------------------------------------------------------- extensions

/// An extension with a module of the base algebra for `f` to take values in.
#[derive(Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub ext: Extension,
    pub rep: Representation,
}

/// `0 → span(z) → osc → e2 → 0`.
pub fn oscillator_center_extension() -> Extension {
    let iota = mat(&[&[0], &[0], &[1], &[0]]);
    let proj = mat(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    Extension::new(oscillator(), e2(), line("z"), iota, proj).unwrap()
}

/// `0 → span(z1, z2) → ĝ → R^3 → 0` with `[x1, x2] = z1`, `[x1, x3] = z2`.
pub fn two_step_extension() -> Extension {
    let total = LieAlgebra::from_brackets(
        names(&["x1", "x2", "x3", "z1", "z2"]),
        vec![(0, 1, qs(&[0, 0, 0, 1, 0])), (0, 2, qs(&[0, 0, 0, 0, 1]))],
    )
    .unwrap();
    let iota = Matrix::from_fn(5, 2, |i, j| q(i64::from(i == j + 3)));
    let proj = Matrix::from_fn(3, 5, |i, j| q(i64::from(i == j)));
    let kernel = LieAlgebra::from_brackets(names(&["z1", "z2"]), Vec::new()).unwrap();
    Extension::new(total, abelian(3), kernel, iota, proj).unwrap()
}

/// `R^2 ⋊ R^2` with `a1` rotating and `a2` scaling the plane `(y1, y2)`.
pub fn rotation_extension() -> Extension {
    let plane = LieAlgebra::from_brackets(names(&["y1", "y2"]), Vec::new()).unwrap();
    let acting = LieAlgebra::from_brackets(names(&["a1", "a2"]), Vec::new()).unwrap();
    let rot = Matrix::from_fn(2, 2, |i, j| rotation_derivation()[(i, j)].clone());
    let total = semidirect_product(&plane, &acting, &[rot, Matrix::identity(2)]).unwrap();
    let iota = Matrix::from_fn(4, 2, |i, j| q(i64::from(i == j)));
    let proj = Matrix::from_fn(2, 4, |i, j| q(i64::from(j == i + 2)));
    Extension::new(total, acting, plane, iota, proj).unwrap()
}

/// The line on which `a2` acts by 2, so that `y1² + y2²` is invariant.
pub fn rotation_module(ext: &Extension) -> Representation {
    Representation::new(ext.base().clone(), vec![mat(&[&[0]]), mat(&[&[2]])]).unwrap()
}

/// `0 → R → sl2 ⊕ R → sl2 → 0`.
pub fn sl2_center_extension() -> Extension {
    let total = sl2().direct_sum(&line("c"));
    let iota = mat(&[&[0], &[0], &[0], &[1]]);
    let proj = Matrix::from_fn(3, 4, |i, j| q(i64::from(i == j)));
    Extension::new(total, sl2(), line("c"), iota, proj).unwrap()
}

/// `0 → span(c) → ĝ → aff1 ⊕ aff1 → 0` with `[a1, a2] = c`. The base is
/// not unimodular, so the differential into top degree is nonzero.
pub fn affine_pair_extension() -> Extension {
    let total = LieAlgebra::from_brackets(
        names(&["a1", "b1", "a2", "b2", "c"]),
        vec![
            (0, 1, qs(&[0, 1, 0, 0, 0])),
            (2, 3, qs(&[0, 0, 0, 1, 0])),
            (0, 2, qs(&[0, 0, 0, 0, 1])),
        ],
    )
    .unwrap();
    let base = LieAlgebra::from_brackets(
        names(&["a1", "b1", "a2", "b2"]),
        vec![(0, 1, qs(&[0, 1, 0, 0])), (2, 3, qs(&[0, 0, 0, 1]))],
    )
    .unwrap();
    let iota = mat(&[&[0], &[0], &[0], &[0], &[1]]);
    let proj = Matrix::from_fn(4, 5, |i, j| q(i64::from(i == j)));
    Extension::new(total, base, line("c"), iota, proj).unwrap()
}

/// The same extension written in the basis given by the columns of `p`.
pub fn change_total_basis(ext: &Extension, p: &Matrix) -> Extension {
    let inv = p.inverse().expect("invertible");
    let total = ext.total().change_basis(p).unwrap();
    let iota = inv.mul(ext.inclusion()).unwrap();
    let proj = ext.projection().mul(p).unwrap();
    Extension::new(total, ext.base().clone(), ext.kernel().clone(), iota, proj).unwrap()
}

fn trivial_fixture(name: &'static str, ext: Extension) -> Fixture {
    let rep = Representation::trivial(ext.base().clone(), 1);
    Fixture { name, ext, rep }
}

pub fn fixtures() -> Vec<Fixture> {
    let rot = rotation_extension();
    let rot_rep = rotation_module(&rot);
    vec![
        trivial_fixture("heisenberg", heisenberg_extension()),
        trivial_fixture("oscillator", oscillator_extension()),
        trivial_fixture("oscillator-center", oscillator_center_extension()),
        trivial_fixture("two-step", two_step_extension()),
        Fixture { name: "rotation", ext: rot.clone(), rep: rot_rep },
        trivial_fixture("rotation-trivial", rot),
        trivial_fixture("sl2-center", sl2_center_extension()),
        trivial_fixture("affine-pair", affine_pair_extension()),
    ]
}

/// A fixture written in a random basis of the total algebra.
pub fn scrambled(rng: &mut ChaCha8Rng, fx: &Fixture) -> Fixture {
    let p = random_invertible(rng, fx.ext.total().dim());
    Fixture { name: fx.name, ext: change_total_basis(&fx.ext, &p), rep: fx.rep.clone() }
}

/// A fixed section: `σ(e_i)` solves `q x = e_i`.
pub fn base_section(ext: &Extension) -> Section {
    let d = ext.base().dim();
    let images: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            let e: Vec<Rational> = (0..d).map(|j| q(i64::from(i == j))).collect();
            solve_linear(ext.projection(), &e).unwrap().expect("q is surjective")
        })
        .collect();
    Section::from_images(ext.total().dim(), &images)
}

/// `σ_base + ι ∘ L` for a random `L: g → n`.
pub fn random_section(rng: &mut ChaCha8Rng, ext: &Extension) -> Section {
    let shift = random_matrix(rng, ext.kernel().dim(), ext.base().dim());
    let moved = ext.inclusion().mul(&shift).unwrap();
    Section::new(base_section(ext).matrix().add(&moved).unwrap())
}

/// Random element of the span of the maps of degree `p` that are invariant
/// for every given section; `None` when that span is zero.
pub fn random_invariant(
    rng: &mut ChaCha8Rng,
    ext: &Extension,
    rep: &Representation,
    p: usize,
    sections: &[Section],
) -> Option<SymMultiMap> {
    let policies: Vec<InvariancePolicy<'_>> = sections.iter().map(InvariancePolicy::Section).collect();
    let basis = invariant_polynomials(ext, rep, p, &policies).unwrap();
    if basis.is_empty() {
        return None;
    }
    let mut f = SymMultiMap::zero(p, ext.kernel().dim(), rep.space_dim());
    for b in &basis {
        let c = loop {
            let c = small_rational(rng);
            if !c.is_zero() {
                break c;
            }
        };
        f = f.add(&b.scale(&c)).unwrap();
    }
    Some(f)
}

/// Sections for which the oscillator keeps `f_z` invariant: the image of
/// `r` is `w + c z`.
pub fn oscillator_central_section(rng: &mut ChaCha8Rng) -> Section {
    let c = small_rational(rng);
    Section::from_images(4, &[vec![q(0), q(0), c, q(1)]])
}

// ----------------------------------------------------------------- oracles

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(q(1), |acc, k| &acc * &q(k))
}

/// `(1/p!q!) Alt(α ·_m β)` from the full tensor.
pub fn wedge_by_alt(alpha: &Cochain, beta: &Cochain, m: &BilinearProduct) -> Cochain {
    let (p, qd) = (alpha.degree(), beta.degree());
    let d = alpha.source_dim();
    let tensor = RawMultilinear::from_fn(p + qd, d, m.out_dim(), |idx| {
        m.apply(&alpha.value_on(&idx[..p]), &beta.value_on(&idx[p..])).unwrap()
    });
    let scale = (&factorial(p) * &factorial(qd)).recip().unwrap();
    alt(&tensor).scale(&scale)
}

/// `(1/Π p_i!) Alt(f(β_1(..), …, β_k(..)))` from the full tensor.
pub fn compose_by_alt(f: &SymMultiMap, args: &[&Cochain]) -> Cochain {
    let degrees: Vec<usize> = args.iter().map(|a| a.degree()).collect();
    let total: usize = degrees.iter().sum();
    let d = args[0].source_dim();
    let tensor = RawMultilinear::from_fn(total, d, f.target_dim(), |idx| {
        let mut start = 0;
        let mut values = Vec::new();
        for (a, &k) in args.iter().zip(&degrees) {
            values.push(a.value_on(&idx[start..start + k]));
            start += k;
        }
        let refs: Vec<&[Rational]> = values.iter().map(Vec::as_slice).collect();
        f.evaluate(&refs).unwrap()
    });
    let scale = degrees.iter().fold(q(1), |acc, &k| &acc * &factorial(k)).recip().unwrap();
    alt(&tensor).scale(&scale)
}

type Sparse = BTreeMap<Vec<u32>, Rational>;

fn sparse_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e).or_insert_with(|| q(0));
            *c = &*c + &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `∫_{D_n} p dλ` by integrating out the last variable over
/// `0 ≤ t_k ≤ 1 − t_1 − … − t_{k−1}` until none is left.
pub fn iterated_integral(p: &MultiPoly, n: usize) -> Rational {
    let mut cur: Sparse = Sparse::new();
    for (mono, c) in p.iter() {
        cur.insert(mono.padded(n), c.clone());
    }
    for k in (0..n).rev() {
        // u = 1 − t_0 − … − t_{k−1} as a polynomial in all n slots
        let mut u = Sparse::new();
        u.insert(vec![0; n], q(1));
        for v in 0..k {
            let mut e = vec![0; n];
            e[v] = 1;
            u.insert(e, q(-1));
        }
        let mut next = Sparse::new();
        for (e, c) in &cur {
            let power = e[k] + 1;
            let mut rest = e.clone();
            rest[k] = 0;
            let mut term = Sparse::new();
            term.insert(rest, c / &q(i64::from(power)));
            for _ in 0..power {
                term = sparse_mul(&term, &u);
            }
            for (te, tc) in term {
                let slot = next.entry(te).or_insert_with(|| q(0));
                *slot = &*slot + &tc;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur.get(&vec![0; n]).cloned().unwrap_or_else(|| q(0))
}

/// Rank by plain row reduction, independent of the library's `rref`.
pub fn oracle_rank(rows: Vec<Vec<Rational>>) -> usize {
    let mut rows: Vec<Vec<Rational>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn increasing_tuples(d: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for t in increasing_tuples(d, p - 1) {
        let start = t.last().map_or(0, |&l| l + 1);
        for i in start..d {
            let mut s = t.clone();
            s.push(i);
            out.push(s);
        }
    }
    out
}

/// Betti numbers with trivial scalar coefficients from the matrices of
/// `d: Λ^p g* → Λ^{p+1} g*`, built entry by entry from the structure
/// constants with the formula `dω(x_0..x_p) = Σ_{i<j} (−1)^{i+j} ω([x_i, x_j], …)`.
pub fn oracle_betti(g: &LieAlgebra) -> Vec<usize> {
    let d = g.dim();
    let ranks: Vec<usize> = (0..=d)
        .map(|p| {
            let src = increasing_tuples(d, p);
            let dst = increasing_tuples(d, p + 1);
            let rows: Vec<Vec<Rational>> = dst
                .iter()
                .map(|x| {
                    src.iter()
                        .map(|basis| {
                            // value of d(e^basis) on the tuple x
                            let mut acc = q(0);
                            for i in 0..x.len() {
                                for j in (i + 1)..x.len() {
                                    let rest: Vec<usize> = x
                                        .iter()
                                        .enumerate()
                                        .filter(|&(k, _)| k != i && k != j)
                                        .map(|(_, &v)| v)
                                        .collect();
                                    let sign = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
                                    for k in 0..d {
                                        let c = g.structure_constant(x[i], x[j], k);
                                        if c.is_zero() {
                                            continue;
                                        }
                                        let mut args = vec![k];
                                        args.extend(&rest);
                                        acc = &acc + &(&(&sign * c) * &dual_value(basis, &args));
                                    }
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            if rows.is_empty() || src.is_empty() {
                0
            } else {
                oracle_rank(rows)
            }
        })
        .collect();
    (0..=d)
        .map(|p| {
            let dim = increasing_tuples(d, p).len();
            let into = if p == 0 { 0 } else { ranks[p - 1] };
            dim - ranks[p] - into
        })
        .collect()
}

/// `e^{basis}(e_args)` for the dual basis form indexed by an increasing tuple.
fn dual_value(basis: &[usize], args: &[usize]) -> Rational {
    let mut sorted = args.to_vec();
    let mut sign = 1;
    for i in 0..sorted.len() {
        for j in 0..sorted.len() - 1 - i {
            if sorted[j] > sorted[j + 1] {
                sorted.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if sorted == basis {
        q(sign)
    } else {
        q(0)
    }
}

/// A basis of the derivations of a product `m: V × V → V`.
pub fn derivation_basis(m: &BilinearProduct) -> Vec<Matrix> {
    let v = m.out_dim();
    let unknowns = v * v;
    // column u is D = E_{r c} with u = r * v + c
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let (r, c) = (u / v, u % v);
        let d = Matrix::from_fn(v, v, |i, j| q(i64::from(i == r && j == c)));
        let mut col = Vec::new();
        for i in 0..v {
            for j in 0..v {
                let ei: Vec<Rational> = (0..v).map(|k| q(i64::from(k == i))).collect();
                let ej: Vec<Rational> = (0..v).map(|k| q(i64::from(k == j))).collect();
                let mij = m.apply(&ei, &ej).unwrap();
                let lhs = d.mul_vec(&mij).unwrap();
                let a = m.apply(&d.column(i), &ej).unwrap();
                let b = m.apply(&ei, &d.column(j)).unwrap();
                for k in 0..v {
                    col.push(&(&lhs[k] - &a[k]) - &b[k]);
                }
            }
        }
        columns.push(col);
    }
    let system = Matrix::from_columns(v * v * v, &columns);
    charclass::exact::nullspace(&system)
        .into_iter()
        .map(|x| Matrix::from_fn(v, v, |i, j| x[i * v + j].clone()))
        .collect()
}

/// Products `V × V → V` with plenty of derivations: Lie brackets, the zero
/// product, truncated polynomial algebras and a diagonal algebra.
pub fn random_product(rng: &mut ChaCha8Rng, max_dim: usize) -> BilinearProduct {
    match rng.gen_range(0..4) {
        0 => {
            let module = random_module(rng, max_dim);
            BilinearProduct::lie_bracket(module.algebra())
        }
        1 => {
            let v = rng.gen_range(1..=max_dim);
            BilinearProduct::from_fn(v, v, v, |_, _, _| q(0))
        }
        2 => {
            // R[x]/(x^v) on the basis 1, x, .., x^{v−1}
            let v = rng.gen_range(1..=max_dim);
            BilinearProduct::from_fn(v, v, v, |i, j, k| q(i64::from(i + j == k)))
        }
        _ => {
            let v = rng.gen_range(1..=max_dim);
            BilinearProduct::from_fn(v, v, v, |i, j, k| q(i64::from(i == j && j == k)))
        }
    }
}

/// `S: g → End(V)` with every `S(e_i)` a random combination of derivations.
pub fn derivation_action(
    rng: &mut ChaCha8Rng,
    g: &LieAlgebra,
    m: &BilinearProduct,
) -> LinearAction {
    let v = m.out_dim();
    let ders = derivation_basis(m);
    let matrices = (0..g.dim())
        .map(|_| {
            let mut acc = Matrix::zeros(v, v);
            for d in &ders {
                acc = acc.add(&d.scale(&small_rational(rng))).unwrap();
            }
            acc
        })
        .collect();
    LinearAction::new(g.clone(), v, matrices).unwrap()
}
