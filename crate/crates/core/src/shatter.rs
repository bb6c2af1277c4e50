//! Projections `L_A`, restrictions `L^A`, and the two simplicial complexes
//! they induce: the sets shattered and the sets strongly shattered by `L`.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{compress, positions};
use crate::signs::{GroundSet, SignFamily, Subset};
use crate::Result;

/// A family of subsets of `E`, stored as masks in increasing order.
#[derive(Clone, Debug)]
pub struct SubsetFamily {
    ground: GroundSet,
    members: Vec<u64>,
}

impl SubsetFamily {
    pub(crate) fn from_bits(ground: GroundSet, mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        SubsetFamily { ground, members }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &Subset) -> bool {
        a.dim() == self.ground.len() && self.contains_bits(a.bits())
    }

    pub(crate) fn contains_bits(&self, a: u64) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn encodings(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.ground.len();
        self.members.iter().map(move |&a| Subset::from_raw(n, a))
    }

    /// Size of the largest member, `None` for the empty family.
    pub fn max_size(&self) -> Option<usize> {
        self.members.iter().map(|a| a.count_ones() as usize).max()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&a| positions(a).all(|e| self.contains_bits(a & !(1 << e))))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(|a| a.to_string()).collect()
    }
}

impl PartialEq for SubsetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.ground.len() == other.ground.len() && self.members == other.members
    }
}

impl Eq for SubsetFamily {}

/// One `0`/`1` characteristic string per line.
impl fmt::Display for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.iter() {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

fn check_subset(family: &SignFamily, a: &Subset) -> Result<()> {
    family.ground().check_same(a.dim())
}

/// `L_A`: the image of `L` under deletion of the coordinates in `A`.
pub fn project(family: &SignFamily, a: &Subset) -> Result<SignFamily> {
    check_subset(family, a)?;
    let keep = family.ground().mask() & !a.bits();
    let members = family.encodings().iter().map(|&s| compress(s, keep)).collect();
    Ok(SignFamily::from_bits(family.ground().without(a.bits()), members))
}

/// `L^A`: the `t ∈ {±1}^{E−A}` whose every extension lies in `L`.
pub fn restrict(family: &SignFamily, a: &Subset) -> Result<SignFamily> {
    check_subset(family, a)?;
    let keep = family.ground().mask() & !a.bits();
    let members = full_fibers(family.encodings(), a.bits())
        .into_iter()
        .map(|key| compress(key, keep))
        .collect();
    Ok(SignFamily::from_bits(family.ground().without(a.bits()), members))
}

/// Keys `s & !a` (in the original frame) of the `a`-fibers contained in the
/// sorted member list. Members are distinct, so a key is complete exactly
/// when it occurs `2^#a` times.
pub(crate) fn full_fibers(members: &[u64], a: u64) -> Vec<u64> {
    if a == 0 {
        return members.to_vec();
    }
    let need = 1usize << a.count_ones();
    if need > members.len() {
        return Vec::new();
    }
    let mut keys: Vec<u64> = members.iter().map(|&s| s & !a).collect();
    keys.sort_unstable();
    keys.chunk_by(|x, y| x == y).filter(|run| run.len() == need).map(|run| run[0]).collect()
}

pub(crate) fn has_full_fiber(members: &[u64], a: u64) -> bool {
    if a == 0 {
        return !members.is_empty();
    }
    let need = 1usize << a.count_ones();
    if need > members.len() {
        return false;
    }
    let mut keys: Vec<u64> = members.iter().map(|&s| s & !a).collect();
    keys.sort_unstable();
    keys.chunk_by(|x, y| x == y).any(|run| run.len() == need)
}

/// Whether the members realize all `2^#a` patterns on `a`.
pub(crate) fn is_shattered_by(members: &[u64], a: u64) -> bool {
    if a == 0 {
        return !members.is_empty();
    }
    let k = a.count_ones();
    let need = 1usize << k;
    if members.len() < need {
        return false;
    }
    let mut seen = vec![0u64; need.div_ceil(64)];
    let mut distinct = 0usize;
    for &s in members {
        let p = compress(s, a) as usize;
        let (word, bit) = (p / 64, p % 64);
        if seen[word] >> bit & 1 == 0 {
            seen[word] |= 1 << bit;
            distinct += 1;
            if distinct == need {
                return true;
            }
        }
    }
    false
}

/// Collects every `A ⊆ E` satisfying a downward-closed predicate, level by
/// level: a candidate is tested only if all its one-smaller subsets passed.
pub(crate) fn downward_closed_sets(n: usize, holds: impl Fn(u64) -> bool) -> Vec<u64> {
    if !holds(0) {
        return Vec::new();
    }
    let mut all = vec![0u64];
    let mut level: Vec<u64> = vec![0];
    while !level.is_empty() {
        let present: HashSet<u64> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &a in &level {
            let start = 64 - a.leading_zeros() as usize;
            for e in start..n {
                let cand = a | 1 << e;
                let faces_ok = positions(a).all(|f| present.contains(&(cand & !(1 << f))));
                if faces_ok && holds(cand) {
                    next.push(cand);
                }
            }
        }
        all.extend_from_slice(&next);
        level = next;
    }
    all
}

/// `X̄(L)`: all `A` with `L_{E−A} = {±1}^A`.
pub fn shattered(family: &SignFamily) -> SubsetFamily {
    let members = family.encodings();
    let sets = downward_closed_sets(family.dim(), |a| is_shattered_by(members, a));
    SubsetFamily::from_bits(family.ground().clone(), sets)
}

/// `X̲(L)`: all `A` with `L^A ≠ ∅`.
pub fn strongly_shattered(family: &SignFamily) -> SubsetFamily {
    let members = family.encodings();
    let sets = downward_closed_sets(family.dim(), |a| has_full_fiber(members, a));
    SubsetFamily::from_bits(family.ground().clone(), sets)
}

/// Size of the largest shattered set; `-1` for the empty family.
pub fn vc_dimension(family: &SignFamily) -> i32 {
    shattered(family).max_size().map_or(-1, |d| d as i32)
}

/// `(#X̲(L), #L, #X̄(L))`.
///
/// # Panics
/// If the counts violate `#X̲(L) ≤ #L ≤ #X̄(L)`, which can only mean a bug
/// in the shattering code.
pub fn dress_pajor(family: &SignFamily) -> (usize, usize, usize) {
    let lower = strongly_shattered(family).len();
    let upper = shattered(family).len();
    let middle = family.len();
    assert!(
        lower <= middle && middle <= upper,
        "inequality #X̲ ≤ #L ≤ #X̄ violated: ({lower}, {middle}, {upper})"
    );
    (lower, middle, upper)
}
