use crate::exact::{vec_add_assign, vec_is_zero, vec_zero, Rational, Scalar};
use crate::{Error, Result};

use super::tuples::{combination_rank, combinations, permutations, sort_with_sign};

/// An alternating `p`-linear map `g^p → V`, stored densely on strictly
/// increasing basis tuples in lexicographic order.
///
/// `source_dim` is `dim g` and `target_dim` is `dim V`. Evaluation on any
/// other argument list is the unique alternating multilinear extension.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain<S = Rational> {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    values: Vec<Vec<S>>,
}

impl<S: Scalar> Cochain<S> {
    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        let n = super::tuples::binomial(source_dim, degree);
        Cochain { degree, source_dim, target_dim, values: vec![vec_zero(target_dim); n] }
    }

    /// Fills the table by calling `f` on each increasing tuple.
    pub fn from_fn(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<S>,
    ) -> Self {
        let values = combinations(source_dim, degree)
            .iter()
            .map(|t| {
                let v = f(t);
                assert_eq!(v.len(), target_dim, "value length must equal target dimension");
                v
            })
            .collect();
        Cochain { degree, source_dim, target_dim, values }
    }

    /// Table given in the order of [`Cochain::tuples`].
    pub fn from_values(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        values: Vec<Vec<S>>,
    ) -> Result<Self> {
        let n = super::tuples::binomial(source_dim, degree);
        if values.len() != n || values.iter().any(|v| v.len() != target_dim) {
            return Err(Error::DimensionMismatch(format!(
                "degree-{degree} cochain on a {source_dim}-dimensional algebra needs {n} \
                 values of length {target_dim}"
            )));
        }
        Ok(Cochain { degree, source_dim, target_dim, values })
    }

    /// The 1-cochain `x ↦ x_i` with scalar values.
    pub fn dual(source_dim: usize, i: usize) -> Self {
        Cochain::from_fn(1, source_dim, 1, |t| {
            vec![if t[0] == i { S::one() } else { S::zero() }]
        })
    }

    /// The degree-0 cochain with the given value.
    pub fn constant(source_dim: usize, value: Vec<S>) -> Self {
        let target_dim = value.len();
        Cochain { degree: 0, source_dim, target_dim, values: vec![value] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// The increasing tuples indexing the table, in storage order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        combinations(self.source_dim, self.degree)
    }

    pub fn values(&self) -> &[Vec<S>] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &[S])> {
        self.tuples().into_iter().zip(self.values.iter().map(Vec::as_slice))
    }

    /// Value on a strictly increasing tuple.
    pub fn get(&self, tuple: &[usize]) -> &[S] {
        &self.values[combination_rank(self.source_dim, tuple)]
    }

    /// Value on basis vectors in any order: signed lookup, zero on repeats.
    pub fn value_on(&self, indices: &[usize]) -> Vec<S> {
        assert_eq!(indices.len(), self.degree, "wrong number of arguments");
        match sort_with_sign(indices) {
            None => vec_zero(self.target_dim),
            Some((sorted, sign)) => {
                let v = self.get(&sorted);
                if sign > 0 {
                    v.to_vec()
                } else {
                    v.iter().map(Scalar::neg_ref).collect()
                }
            }
        }
    }

    /// Multilinear evaluation on arbitrary coefficient vectors.
    pub fn evaluate(&self, args: &[Vec<S>]) -> Result<Vec<S>> {
        if args.len() != self.degree || args.iter().any(|a| a.len() != self.source_dim) {
            return Err(Error::DimensionMismatch(format!(
                "degree-{} cochain evaluated on {} arguments",
                self.degree,
                args.len()
            )));
        }
        let mut out = vec_zero(self.target_dim);
        let mut idx = vec![0usize; self.degree];
        self.evaluate_rec(args, 0, S::one(), &mut idx, &mut out);
        Ok(out)
    }

    fn evaluate_rec(&self, args: &[Vec<S>], slot: usize, coeff: S, idx: &mut [usize], out: &mut [S]) {
        if slot == self.degree {
            let v = self.value_on(idx);
            for (o, x) in out.iter_mut().zip(&v) {
                o.add_product(&coeff, x);
            }
            return;
        }
        for (j, a) in args[slot].iter().enumerate() {
            if a.is_zero() || idx[..slot].contains(&j) {
                continue;
            }
            idx[slot] = j;
            self.evaluate_rec(args, slot + 1, coeff.mul_ref(a), idx, out);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vec_is_zero(v))
    }

    /// All values concatenated, tuple-major: index `r * target_dim + k`.
    pub fn to_flat(&self) -> Vec<S> {
        self.values.iter().flatten().cloned().collect()
    }

    /// Inverse of [`Cochain::to_flat`].
    pub fn from_flat(degree: usize, source_dim: usize, target_dim: usize, flat: &[S]) -> Result<Self> {
        let n = super::tuples::binomial(source_dim, degree);
        if flat.len() != n * target_dim {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a degree-{degree} cochain on a {source_dim}-dimensional algebra \
                 with {target_dim}-dimensional values",
                flat.len()
            )));
        }
        let values = if target_dim == 0 {
            vec![Vec::new(); n]
        } else {
            flat.chunks(target_dim).map(<[S]>::to_vec).collect()
        };
        Ok(Cochain { degree, source_dim, target_dim, values })
    }

    /// Number of scalar entries, `C(source_dim, degree) * target_dim`.
    pub fn flat_len(&self) -> usize {
        self.values.len() * self.target_dim
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree
            || self.source_dim != other.source_dim
            || self.target_dim != other.target_dim
        {
            return Err(Error::DimensionMismatch(format!(
                "cochain shapes (deg {}, {}→{}) and (deg {}, {}→{}) differ",
                self.degree,
                self.source_dim,
                self.target_dim,
                other.degree,
                other.source_dim,
                other.target_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            vec_add_assign(a, b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(Scalar::neg_ref)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Cochain<T> {
        Cochain {
            degree: self.degree,
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            values: self.values.iter().map(|v| v.iter().map(&f).collect()).collect(),
        }
    }

    /// Applies `f` to every value; the results must have length `target_dim`.
    pub fn map_values(&self, f: impl Fn(&[S]) -> Vec<S>, target_dim: usize) -> Cochain<S> {
        Cochain {
            degree: self.degree,
            source_dim: self.source_dim,
            target_dim,
            values: self.values.iter().map(|v| f(v)).collect(),
        }
    }
}

impl Cochain<Rational> {
    /// Lifts to any scalar ring (constant polynomials, for instance).
    pub fn lift<T: Scalar>(&self) -> Cochain<T> {
        self.map(T::from_rational)
    }
}

/// An arbitrary (not necessarily alternating) `p`-linear map `g^p → V`,
/// stored on all `d^p` basis tuples.
#[derive(Clone, PartialEq, Debug)]
pub struct RawMultilinear<S = Rational> {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    values: Vec<Vec<S>>,
}

impl<S: Scalar> RawMultilinear<S> {
    pub fn from_fn(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<S>,
    ) -> Self {
        let count = source_dim.pow(degree as u32);
        let mut values = Vec::with_capacity(count);
        let mut idx = vec![0usize; degree];
        for n in 0..count {
            let mut rest = n;
            for slot in (0..degree).rev() {
                idx[slot] = rest % source_dim;
                rest /= source_dim;
            }
            let v = f(&idx);
            assert_eq!(v.len(), target_dim, "value length must equal target dimension");
            values.push(v);
        }
        RawMultilinear { degree, source_dim, target_dim, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, indices: &[usize]) -> &[S] {
        let n = indices.iter().fold(0, |acc, &i| acc * self.source_dim + i);
        &self.values[n]
    }
}

/// `Alt(f) = Σ_{π ∈ S_p} sgn(π) f^π`.
pub fn alt<S: Scalar>(f: &RawMultilinear<S>) -> Cochain<S> {
    let perms = permutations(f.degree);
    let mut args = vec![0usize; f.degree];
    Cochain::from_fn(f.degree, f.source_dim, f.target_dim, |t| {
        let mut acc: Vec<S> = vec_zero(f.target_dim);
        for (perm, sign) in &perms {
            for (slot, &src) in perm.iter().enumerate() {
                args[slot] = t[src];
            }
            let v = f.get(&args);
            for (a, x) in acc.iter_mut().zip(v) {
                if *sign > 0 {
                    a.add_assign_ref(x);
                } else {
                    a.add_assign_ref(&x.neg_ref());
                }
            }
        }
        acc
    })
}
