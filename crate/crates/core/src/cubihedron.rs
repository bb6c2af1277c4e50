//! The cube complex `|L|` of a sign family: the faces of the hypercube all of
//! whose vertices lie in `L`.
//!
//! Faces are never materialized geometrically. A face is its barycenter
//! `t ∈ {±1,0}^E`, and `F(t') ⊆ F(t)` iff `t ≺ t'`. Everything here (f-vectors,
//! facets, projected complexes, the grid metric on barycenters) is computed on
//! those sign vectors.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde_json::json;

use crate::bits::{expand, full_mask, positions};
use crate::shatter::{
    downward_closed_sets, full_fibers, has_full_fiber, project, strongly_shattered,
};
use crate::signs::{
    complement, l1_partial_raw, precedes_raw, PartialFamily, PartialSignVector, SignFamily,
    SignVector, Subset,
};
use crate::{Error, Result};

/// `|L|` stored as `Baryc(L)`, which is always upward closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    barycenters: PartialFamily,
}

impl FaceComplex {
    pub fn barycenters(&self) -> &PartialFamily {
        &self.barycenters
    }

    pub fn into_barycenters(self) -> PartialFamily {
        self.barycenters
    }

    pub fn len(&self) -> usize {
        self.barycenters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.barycenters.is_empty()
    }

    /// The 0-faces, i.e. `L` itself.
    pub fn vertices(&self) -> SignFamily {
        self.barycenters.full_vectors()
    }

    /// `f_i` = number of `i`-dimensional faces, for `i = 0..=n`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.barycenters.dim() + 1];
        for t in self.barycenters.iter() {
            f[t.face_dimension()] += 1;
        }
        f
    }

    /// Facets: the inclusion-maximal faces.
    pub fn facets(&self) -> PartialFamily {
        minimal_in_upward_closed(&self.barycenters)
    }

    pub fn dimension(&self) -> i32 {
        self.barycenters.iter().map(|t| t.face_dimension() as i32).max().unwrap_or(-1)
    }
}

/// `Baryc(L)`: every `t` whose face `F(t)` has all its vertices in `L`.
pub fn barycentric_completion(family: &SignFamily) -> FaceComplex {
    let n = family.dim();
    let mask = family.ground().mask();
    let members = family.encodings();
    let mut bary = Vec::new();
    for zeros in downward_closed_sets(n, |b| has_full_fiber(members, b)) {
        for key in full_fibers(members, zeros) {
            bary.push(PartialSignVector::from_raw(n, mask & !zeros, key));
        }
    }
    FaceComplex { barycenters: PartialFamily::from_vec(family.ground().clone(), bary) }
}

/// Minima of an upward-closed family: members none of whose lower grid
/// neighbors (one support coordinate zeroed) is a member.
fn minimal_in_upward_closed(family: &PartialFamily) -> PartialFamily {
    let members = family
        .iter()
        .filter(|t| {
            positions(t.support()).all(|e| {
                let lower = PartialSignVector::from_raw(
                    t.dim(),
                    t.support() & !(1 << e),
                    t.signs(),
                );
                !family.contains(&lower)
            })
        })
        .copied()
        .collect();
    PartialFamily::from_sorted(family.ground().clone(), members)
}

/// `Cocirc(L) = Min(Baryc(L))`, the barycenters of the facets of `|L|`.
pub fn cocircuits(family: &SignFamily) -> PartialFamily {
    barycentric_completion(family).facets()
}

/// `Circ(L) = Cocirc(L*)`.
pub fn circuits(family: &SignFamily) -> PartialFamily {
    cocircuits(&complement(family))
}

fn check_face(family: &SignFamily, face: &PartialSignVector) -> Result<()> {
    family.ground().check_same(face.dim())
}

pub(crate) fn face_counts_in(barycenters: &PartialFamily, face: &PartialSignVector) -> Vec<u64> {
    let mut f = vec![0u64; face.dim() + 1];
    for t in barycenters.iter().filter(|t| precedes_raw(face, t)) {
        f[t.face_dimension()] += 1;
    }
    f
}

/// `f_i(L ∩ F)`: the number of `i`-cubes of `|L|` inside the face `F`.
pub fn face_counts(family: &SignFamily, face: &PartialSignVector) -> Result<Vec<u64>> {
    check_face(family, face)?;
    Ok(face_counts_in(barycentric_completion(family).barycenters(), face))
}

pub(crate) fn alternating_sum(f: &[u64]) -> i64 {
    f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

/// `Σ_i (−1)^i f_i(L ∩ F)`.
pub fn euler_characteristic(family: &SignFamily, face: &PartialSignVector) -> Result<i64> {
    Ok(alternating_sum(&face_counts(family, face)?))
}

/// Neighbors of `t` in the grid graph on `{±1,0}^E`.
pub(crate) fn grid_neighbors(t: &PartialSignVector) -> impl Iterator<Item = PartialSignVector> + '_ {
    let n = t.dim();
    (0..n).flat_map(move |e| {
        let bit = 1u64 << e;
        let (support, signs) = (t.support(), t.signs());
        let out: [Option<PartialSignVector>; 2] = if support & bit == 0 {
            [
                Some(PartialSignVector::from_raw(n, support | bit, signs)),
                Some(PartialSignVector::from_raw(n, support | bit, signs | bit)),
            ]
        } else {
            [Some(PartialSignVector::from_raw(n, support & !bit, signs & !bit)), None]
        };
        out.into_iter().flatten()
    })
}

/// Breadth-first distances from `source` inside the subgraph induced by
/// `family`; `u32::MAX` marks unreachable members. Indexed like
/// `family.members()`.
fn grid_bfs(family: &PartialFamily, source: usize) -> Vec<u32> {
    let members = family.members();
    let mut dist = vec![u32::MAX; members.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(i) = queue.pop_front() {
        for nb in grid_neighbors(&members[i]) {
            if let Ok(j) = members.binary_search(&nb) {
                if dist[j] == u32::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
    }
    dist
}

/// Shortest-path length between two members of `J` in the subgraph of the
/// grid induced by `J`; `None` when they lie in different components.
pub fn grid_distance(
    family: &PartialFamily,
    from: &PartialSignVector,
    to: &PartialSignVector,
) -> Result<Option<u32>> {
    family.ground().check_same(from.dim())?;
    family.ground().check_same(to.dim())?;
    let members = family.members();
    let i = members.binary_search(from).map_err(|_| Error::NotAMember(from.to_string()))?;
    let j = members.binary_search(to).map_err(|_| Error::NotAMember(to.to_string()))?;
    let d = grid_bfs(family, i)[j];
    Ok((d != u32::MAX).then_some(d))
}

/// A pair `(t, t')` whose grid distance inside `J` exceeds their ℓ1
/// distance, if any.
///
/// Uses the local form of isometry: for every pair at ℓ1 distance `d ≥ 2`
/// some neighbor of `t` inside `J` must be at distance `d − 1` from `t'`.
pub(crate) fn grid_isometry_violation(
    family: &PartialFamily,
) -> Option<(PartialSignVector, PartialSignVector)> {
    let members = family.members();
    for t in members {
        let inside: Vec<PartialSignVector> =
            grid_neighbors(t).filter(|nb| family.contains(nb)).collect();
        for u in members {
            let d = l1_partial_raw(t, u);
            if d < 2 {
                continue;
            }
            if !inside.iter().any(|nb| l1_partial_raw(nb, u) + 1 == d) {
                return Some((*t, *u));
            }
        }
    }
    None
}

/// Whether `J` induces an isometric subgraph of the grid on `{±1,0}^E`.
pub fn is_grid_isometric(family: &PartialFamily) -> bool {
    grid_isometry_violation(family).is_none()
}

/// Edges of the subgraph of the grid induced by `J`, each listed once with
/// the smaller endpoint first.
pub fn grid_edges(family: &PartialFamily) -> Vec<(PartialSignVector, PartialSignVector)> {
    let mut edges = Vec::new();
    for t in family.iter() {
        for nb in grid_neighbors(t) {
            if *t < nb && family.contains(&nb) {
                edges.push((*t, nb));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Edges of the 1-skeleton `G(L)`, smaller endpoint first.
pub fn skeleton_edges(family: &SignFamily) -> Vec<(SignVector, SignVector)> {
    let n = family.dim();
    let mut edges = Vec::new();
    for &s in family.encodings() {
        for e in positions(full_mask(n) & !s) {
            let t = s | 1 << e;
            if family.contains_bits(t) {
                edges.push((SignVector::from_raw(n, s), SignVector::from_raw(n, t)));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Hypercube BFS distances (in edges) from member `source` within `G(L)`.
fn skeleton_bfs(family: &SignFamily, source: usize) -> Vec<u32> {
    let members = family.encodings();
    let n = family.dim();
    let mut dist = vec![u32::MAX; members.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(i) = queue.pop_front() {
        for e in 0..n {
            if let Ok(j) = members.binary_search(&(members[i] ^ 1 << e)) {
                if dist[j] == u32::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
    }
    dist
}

/// Two members in different components of `G(L)`, if any.
pub fn disconnected_pair(family: &SignFamily) -> Option<(SignVector, SignVector)> {
    if family.is_empty() {
        return None;
    }
    let dist = skeleton_bfs(family, 0);
    let n = family.dim();
    dist.iter().position(|&d| d == u32::MAX).map(|j| {
        (
            SignVector::from_raw(n, family.encodings()[0]),
            SignVector::from_raw(n, family.encodings()[j]),
        )
    })
}

/// Whether `G(L)` is connected; the empty family counts as connected.
pub fn is_connected(family: &SignFamily) -> bool {
    disconnected_pair(family).is_none()
}

/// Two members whose distance in `G(L)` exceeds half their ℓ1 distance.
pub fn skeleton_isometry_violation(family: &SignFamily) -> Option<(SignVector, SignVector)> {
    let members = family.encodings();
    let n = family.dim();
    for i in 0..members.len() {
        let dist = skeleton_bfs(family, i);
        for (j, &d) in dist.iter().enumerate() {
            if d != (members[i] ^ members[j]).count_ones() {
                return Some((SignVector::from_raw(n, members[i]), SignVector::from_raw(n, members[j])));
            }
        }
    }
    None
}

/// Whether every two members are joined in `G(L)` by a path of length
/// equal to their Hamming distance.
pub fn is_isometric(family: &SignFamily) -> bool {
    skeleton_isometry_violation(family).is_none()
}

/// `dim |L|`: the largest strongly shattered set; `-1` for `L = ∅`.
pub fn complex_dimension(family: &SignFamily) -> i32 {
    strongly_shattered(family).max_size().map_or(-1, |d| d as i32)
}

/// Whether the face `F(u)` of `H(E−A)` lies in the projection `|L|_A` of the
/// cube complex, i.e. whether some `B` with `zeros(u) ⊆ B ⊆ E−A` has `u`
/// restricted to `(E−A)−B` in `(L^B)_A`.
pub fn projected_complex_contains(
    family: &SignFamily,
    a: &Subset,
    u: &PartialSignVector,
) -> Result<bool> {
    family.ground().check_same(a.dim())?;
    let keep = family.ground().mask() & !a.bits();
    family.ground().check_same(u.dim() + a.len())?;
    let zeros = expand(u.zeros(), keep);
    let support = expand(u.support(), keep);
    let signs = expand(u.signs(), keep);
    let members = family.encodings();
    for extra in crate::bits::submasks(support) {
        let b = zeros | extra;
        let visible = keep & !b;
        let target = signs & visible;
        if full_fibers(members, b).iter().any(|&key| key & visible == target) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(dim |L|_A, dim |L_A|)`: the dimension of the projected complex and of
/// the complex of the projected family. The first never exceeds the second.
pub fn projection_dimensions(family: &SignFamily, a: &Subset) -> Result<(i32, i32)> {
    let projected = project(family, a)?;
    let first = strongly_shattered(family)
        .encodings()
        .iter()
        .filter(|&&b| b & a.bits() == 0)
        .map(|b| b.count_ones() as i32)
        .max()
        .unwrap_or(-1);
    Ok((first, complex_dimension(&projected)))
}

fn dot_id(label: &str) -> String {
    format!("\"{label}\"")
}

/// Graphviz rendering of the 1-skeleton `G(L)`; node names are sign strings.
pub fn skeleton_dot(family: &SignFamily) -> String {
    let mut out = String::from("graph skeleton {\n");
    for s in family.iter() {
        let _ = writeln!(out, "  {};", dot_id(&s.to_string()));
    }
    for (s, t) in skeleton_edges(family) {
        let _ = writeln!(out, "  {} -- {};", dot_id(&s.to_string()), dot_id(&t.to_string()));
    }
    out.push_str("}\n");
    out
}

/// Graphviz rendering of the grid graph induced by `Baryc(L)`.
pub fn barycenter_dot(family: &SignFamily) -> String {
    let bary = barycentric_completion(family);
    let mut out = String::from("graph barycenters {\n");
    for t in bary.barycenters().iter() {
        let _ = writeln!(out, "  {} [dim={}];", dot_id(&t.to_string()), t.face_dimension());
    }
    for (s, t) in grid_edges(bary.barycenters()) {
        let _ = writeln!(out, "  {} -- {};", dot_id(&s.to_string()), dot_id(&t.to_string()));
    }
    out.push_str("}\n");
    out
}

/// JSON summary of `|L|`: f-vector, Euler characteristic, facets and circuits.
pub fn complex_json(family: &SignFamily) -> serde_json::Value {
    let bary = barycentric_completion(family);
    let f = bary.f_vector();
    json!({
        "n": family.dim(),
        "family": family.to_strings(),
        "dimension": bary.dimension(),
        "f_vector": f,
        "euler_characteristic": alternating_sum(&f),
        "barycenters": bary.barycenters().to_strings(),
        "cocircuits": bary.facets().to_strings(),
        "circuits": circuits(family).to_strings(),
    })
}
