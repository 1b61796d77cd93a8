//! Index-tuple combinatorics shared by the cochain tables.

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Strictly increasing `p`-tuples from `0..d`, lexicographic.
pub(crate) fn combinations(d: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(d, p));
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, d: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in start..d {
            cur.push(v);
            rec(v + 1, d, p, cur, out);
            cur.pop();
        }
    }
    rec(0, d, p, &mut cur, &mut out);
    out
}

/// Position of a strictly increasing tuple in [`combinations`].
pub(crate) fn combination_rank(d: usize, tuple: &[usize]) -> usize {
    let p = tuple.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &t) in tuple.iter().enumerate() {
        for v in start..t {
            rank += binomial(d - 1 - v, p - 1 - i);
        }
        start = t + 1;
    }
    rank
}

/// Non-decreasing `p`-tuples from `0..d`, lexicographic.
pub(crate) fn multisets(d: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, d: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in start..d {
            cur.push(v);
            rec(v, d, p, cur, out);
            cur.pop();
        }
    }
    rec(0, d, p, &mut cur, &mut out);
    out
}

pub(crate) fn multiset_count(d: usize, p: usize) -> usize {
    if d == 0 {
        return usize::from(p == 0);
    }
    binomial(d + p - 1, p)
}

/// Position of a non-decreasing tuple in [`multisets`].
pub(crate) fn multiset_rank(d: usize, tuple: &[usize]) -> usize {
    let p = tuple.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &t) in tuple.iter().enumerate() {
        for v in start..t {
            rank += multiset_count(d - v, p - 1 - i);
        }
        start = t;
    }
    rank
}

/// Sign of the permutation that sorts `seq` (entries assumed distinct).
pub(crate) fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorts `tuple`, returning the sorted tuple and the sign of the sorting
/// permutation, or `None` when an index repeats.
pub(crate) fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i8)> {
    let sign = permutation_sign(tuple);
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sorted, sign))
}

/// All permutations of `0..n` with their signs.
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        if cur.len() == n {
            out.push((cur.clone(), permutation_sign(cur)));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// A multi-shuffle: positions `0..N` split into increasing blocks of the
/// requested sizes, with the sign of the concatenated block permutation.
#[derive(Clone, Debug)]
pub(crate) struct Shuffle {
    pub blocks: Vec<Vec<usize>>,
    pub sign: i8,
}

pub(crate) fn shuffles(sizes: &[usize]) -> Vec<Shuffle> {
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut assignment = vec![usize::MAX; total];
    fn rec(
        block: usize,
        sizes: &[usize],
        assignment: &mut Vec<usize>,
        out: &mut Vec<Shuffle>,
    ) {
        if block == sizes.len() {
            let mut blocks = vec![Vec::new(); sizes.len()];
            for (pos, &b) in assignment.iter().enumerate() {
                blocks[b].push(pos);
            }
            let concat: Vec<usize> = blocks.iter().flatten().copied().collect();
            let sign = permutation_sign(&concat);
            out.push(Shuffle { blocks, sign });
            return;
        }
        let free: Vec<usize> = (0..assignment.len()).filter(|&i| assignment[i] == usize::MAX).collect();
        for chosen in combinations(free.len(), sizes[block]) {
            for &c in &chosen {
                assignment[free[c]] = block;
            }
            rec(block + 1, sizes, assignment, out);
            for &c in &chosen {
                assignment[free[c]] = usize::MAX;
            }
        }
    }
    rec(0, sizes, &mut assignment, &mut out);
    out
}
