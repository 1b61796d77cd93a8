use crate::exact::{vec_is_zero, vec_zero, Rational, Scalar};
use crate::{Error, Result};

use super::product::BilinearProduct;
use super::tuples::{multiset_count, multiset_rank, multisets, shuffles};

/// A symmetric `p`-linear map `n^p → V`, stored on non-decreasing basis
/// tuples in lexicographic order. Equivalently a linear map on the
/// symmetric power `S^p(n)` in its monomial basis.
#[derive(Clone, PartialEq, Debug)]
pub struct SymMultiMap {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    values: Vec<Vec<Rational>>,
}

impl SymMultiMap {
    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        let n = multiset_count(source_dim, degree);
        SymMultiMap { degree, source_dim, target_dim, values: vec![vec_zero(target_dim); n] }
    }

    pub fn from_fn(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Self {
        let values = multisets(source_dim, degree)
            .iter()
            .map(|t| {
                let v = f(t);
                assert_eq!(v.len(), target_dim, "value length must equal target dimension");
                v
            })
            .collect();
        SymMultiMap { degree, source_dim, target_dim, values }
    }

    /// Builds from sparse `(tuple, value)` entries; tuples may be unsorted
    /// and missing tuples are zero. Repeated tuples are an error.
    pub fn from_entries<I>(degree: usize, source_dim: usize, target_dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Rational>)>,
    {
        let mut out = SymMultiMap::zero(degree, source_dim, target_dim);
        let mut seen = vec![false; out.values.len()];
        for (mut tuple, value) in entries {
            if tuple.len() != degree || tuple.iter().any(|&i| i >= source_dim) {
                return Err(Error::DimensionMismatch(format!(
                    "tuple {tuple:?} for a degree-{degree} map on a {source_dim}-dimensional space"
                )));
            }
            if value.len() != target_dim {
                return Err(Error::DimensionMismatch(format!(
                    "value of length {} for target dimension {target_dim}",
                    value.len()
                )));
            }
            tuple.sort_unstable();
            let r = multiset_rank(source_dim, &tuple);
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::Parse(format!("tuple {tuple:?} listed twice")));
            }
            out.values[r] = value;
        }
        Ok(out)
    }

    /// The scalar linear functional `y ↦ y_i` on an `n`-dimensional space.
    pub fn dual(source_dim: usize, i: usize) -> Self {
        SymMultiMap::from_fn(1, source_dim, 1, |t| {
            vec![if t[0] == i { Rational::one() } else { Rational::zero() }]
        })
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

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        multisets(self.source_dim, self.degree)
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    /// Value on a non-decreasing tuple.
    pub fn get(&self, tuple: &[usize]) -> &[Rational] {
        &self.values[multiset_rank(self.source_dim, tuple)]
    }

    /// Value on basis vectors in any order.
    pub fn value_on(&self, indices: &[usize]) -> &[Rational] {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        self.get(&sorted)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vec_is_zero(v))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for v in &mut out.values {
            for x in v {
                *x = &*x * r;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.degree, self.source_dim, self.target_dim)
            != (other.degree, other.source_dim, other.target_dim)
        {
            return Err(Error::DimensionMismatch("symmetric maps of different shapes".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        Ok(out)
    }

    /// Multilinear evaluation `f(v_1, ..., v_p)` on coefficient vectors of
    /// any scalar kind.
    pub fn evaluate<S: Scalar>(&self, args: &[&[S]]) -> Result<Vec<S>> {
        if args.len() != self.degree || args.iter().any(|a| a.len() != self.source_dim) {
            return Err(Error::DimensionMismatch(format!(
                "degree-{} symmetric map on {} arguments",
                self.degree,
                args.len()
            )));
        }
        let mut out = vec_zero(self.target_dim);
        self.evaluate_into(args, &Rational::one(), &mut out);
        Ok(out)
    }

    /// `out += factor * f(args)`, shapes assumed checked.
    pub(crate) fn evaluate_into<S: Scalar>(&self, args: &[&[S]], factor: &Rational, out: &mut [S]) {
        let mut idx = Vec::with_capacity(self.degree);
        self.eval_rec(args, &S::from_rational(factor), &mut idx, out);
    }

    fn eval_rec<S: Scalar>(&self, args: &[&[S]], coeff: &S, idx: &mut Vec<usize>, out: &mut [S]) {
        let slot = idx.len();
        if slot == self.degree {
            let v = self.value_on(idx);
            for (o, c) in out.iter_mut().zip(v) {
                o.add_scaled(coeff, c);
            }
            return;
        }
        for (j, a) in args[slot].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            idx.push(j);
            self.eval_rec(args, &coeff.mul_ref(a), idx, out);
            idx.pop();
        }
    }
}

/// `(f ∨ g)(y_1..y_{p+q}) = Σ_{(p,q)-shuffles} m_V(f(y_A), g(y_B))`, an
/// unsigned shuffle sum.
pub fn sym_product(f: &SymMultiMap, g: &SymMultiMap, m_v: &BilinearProduct) -> Result<SymMultiMap> {
    if f.source_dim != g.source_dim {
        return Err(Error::DimensionMismatch("symmetric maps on different spaces".into()));
    }
    if m_v.left_dim() != f.target_dim || m_v.right_dim() != g.target_dim {
        return Err(Error::DimensionMismatch(format!(
            "product {}×{} does not accept values of dimensions {} and {}",
            m_v.left_dim(),
            m_v.right_dim(),
            f.target_dim,
            g.target_dim
        )));
    }
    let shuffles = shuffles(&[f.degree, g.degree]);
    let one = Rational::one();
    Ok(SymMultiMap::from_fn(f.degree + g.degree, f.source_dim, m_v.out_dim(), |t| {
        let mut acc = vec_zero(m_v.out_dim());
        for sh in &shuffles {
            let a: Vec<usize> = sh.blocks[0].iter().map(|&i| t[i]).collect();
            let b: Vec<usize> = sh.blocks[1].iter().map(|&i| t[i]).collect();
            m_v.apply_into(f.get(&a), g.get(&b), &one, &mut acc);
        }
        acc
    }))
}
