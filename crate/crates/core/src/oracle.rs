//! Slow reference implementations written straight from the definitions.
//!
//! Vectors are plain `Vec<i8>` with entries in `{-1, 0, 1}` and subsets are
//! `Vec<usize>`. Nothing here touches the bit-level code, so these functions
//! serve as an independent check on it.

use itertools::Itertools;

use crate::signs::SignFamily;

pub type Vector = Vec<i8>;

fn product(n: usize, values: &[i8]) -> Vec<Vector> {
    let mut out: Vec<Vector> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `{±1}^n` in lexicographic order with `-1 < +1`.
pub fn cube(n: usize) -> Vec<Vector> {
    product(n, &[-1, 1])
}

/// `{±1,0}^n`.
pub fn grid(n: usize) -> Vec<Vector> {
    product(n, &[-1, 0, 1])
}

/// Every subset of `0..n`, as sorted index lists.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| (0..n).combinations(k)).collect()
}

pub fn from_family(family: &SignFamily) -> Vec<Vector> {
    family
        .iter()
        .map(|s| (0..s.dim()).map(|e| s.get(e).value()).collect())
        .collect()
}

/// `A` is shattered when every sign pattern on `A` occurs in `L`.
pub fn is_shattered(family: &[Vector], a: &[usize]) -> bool {
    product(a.len(), &[-1, 1]).into_iter().all(|pattern| {
        family.iter().any(|s| a.iter().zip(&pattern).all(|(&e, &x)| s[e] == x))
    }) && !family.is_empty()
}

/// `A` is strongly shattered when some `A`-subcube lies inside `L`.
pub fn is_strongly_shattered(family: &[Vector], a: &[usize]) -> bool {
    family.iter().any(|base| {
        product(a.len(), &[-1, 1]).into_iter().all(|pattern| {
            let mut s = base.clone();
            for (&e, &x) in a.iter().zip(&pattern) {
                s[e] = x;
            }
            family.contains(&s)
        })
    })
}

pub fn shattered_count(family: &[Vector], n: usize) -> usize {
    subsets(n).iter().filter(|a| is_shattered(family, a)).count()
}

pub fn strongly_shattered_count(family: &[Vector], n: usize) -> usize {
    subsets(n).iter().filter(|a| is_strongly_shattered(family, a)).count()
}

pub fn is_ample(family: &[Vector], n: usize) -> bool {
    family.len() == shattered_count(family, n)
}

/// Number of ample families `L ⊆ {±1}^n`, by brute force over all of them.
pub fn count_ample(n: usize) -> u64 {
    let vertices = cube(n);
    let mut count = 0;
    for k in 0..=vertices.len() {
        for family in vertices.iter().cloned().combinations(k) {
            if is_ample(&family, n) {
                count += 1;
            }
        }
    }
    count
}

/// `t ≺ s`: every coordinate of `t` is `0` or equal to that of `s`.
pub fn precedes(t: &[i8], s: &[i8]) -> bool {
    t.iter().zip(s).all(|(&a, &b)| a == 0 || a == b)
}

/// `Baryc(L)`: the `t` all of whose vertices lie in `L`, in grid order.
pub fn barycentric_completion(family: &[Vector], n: usize) -> Vec<Vector> {
    let vertices = cube(n);
    grid(n)
        .into_iter()
        .filter(|t| vertices.iter().filter(|s| precedes(t, s)).all(|s| family.contains(s)))
        .collect()
}

/// `Σ_i (−1)^i f_i(L ∩ F)` by listing the faces of `F` inside `L`.
pub fn euler_characteristic(family: &[Vector], n: usize, face: &[i8]) -> i64 {
    barycentric_completion(family, n)
        .iter()
        .filter(|t| precedes(face, t))
        .map(|t| if t.iter().filter(|&&x| x == 0).count() % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Summary of the naive invariants of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub strongly_shattered: usize,
    pub members: usize,
    pub shattered: usize,
    pub vc_dimension: i32,
    pub ample: bool,
    pub barycenters: usize,
}

pub fn invariants(family: &SignFamily) -> Invariants {
    let n = family.dim();
    let l = from_family(family);
    let vc = subsets(n)
        .iter()
        .filter(|a| is_shattered(&l, a))
        .map(|a| a.len() as i32)
        .max()
        .unwrap_or(-1);
    Invariants {
        strongly_shattered: strongly_shattered_count(&l, n),
        members: l.len(),
        shattered: shattered_count(&l, n),
        vc_dimension: vc,
        ample: is_ample(&l, n),
        barycenters: barycentric_completion(&l, n).len(),
    }
}
