//! Discrete convexity on `{±1,0}^E` and sign patterns of point clouds.

use serde::Serialize;

use crate::bits::{full_mask, submasks};
use crate::cubihedron::barycentric_completion;
use crate::signs::{
    l1_partial_raw, upward_closure, GroundSet, PartialFamily, PartialSignVector, SignFamily,
};
use crate::{Error, Result, MAX_DIMENSION};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A finite sample `K ⊆ ℝ^E`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    ground: GroundSet,
    points: Vec<Vec<f64>>,
    tolerance: f64,
}

impl PointCloud {
    pub fn new(ground: GroundSet, points: Vec<Vec<f64>>) -> Result<Self> {
        let n = ground.len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "point {} has {} coordinates, expected {n}",
                    i + 1,
                    p.len()
                )));
            }
            check_finite(p)?;
        }
        Ok(PointCloud { ground, points, tolerance: DEFAULT_TOLERANCE })
    }

    /// Infers `n` from the first point; an empty list gives `n = 0`.
    pub fn from_rows(points: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.first().map_or(0, Vec::len);
        PointCloud::new(GroundSet::new(n)?, points)
    }

    /// Magnitudes at or below `tolerance` count as exact zeros.
    pub fn with_tolerance(mut self, tolerance: f64) -> Result<Self> {
        if !tolerance.is_finite() || tolerance < 0.0 {
            return Err(Error::InvalidArgument(format!("bad tolerance {tolerance}")));
        }
        self.tolerance = tolerance;
        Ok(self)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_finite(r: &[f64]) -> Result<()> {
    match r.iter().position(|x| !x.is_finite()) {
        Some(index) => Err(Error::NonFinite { index, value: r[index].to_string() }),
        None => Ok(()),
    }
}

/// `sign(r)`, snapping `|x| ≤ tolerance` to zero.
pub fn sign_of_point(r: &[f64], tolerance: f64) -> Result<PartialSignVector> {
    if r.len() > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge { n: r.len(), max: MAX_DIMENSION });
    }
    check_finite(r)?;
    let (mut support, mut signs) = (0u64, 0u64);
    for (e, &x) in r.iter().enumerate() {
        if x.abs() > tolerance {
            support |= 1 << e;
            if x > 0.0 {
                signs |= 1 << e;
            }
        }
    }
    Ok(PartialSignVector::from_raw(r.len(), support, signs))
}

/// `J(K)`: the sign vectors of the points.
pub fn region_pattern(cloud: &PointCloud) -> PartialFamily {
    let members = cloud
        .points
        .iter()
        .map(|r| sign_of_point(r, cloud.tolerance).expect("validated on construction"))
        .collect();
    PartialFamily::from_vec(cloud.ground.clone(), members)
}

/// `L(K)`: every closed orthant met by the cloud.
pub fn orthant_pattern(cloud: &PointCloud) -> SignFamily {
    let mut members = Vec::new();
    for t in region_pattern(cloud).iter() {
        for fill in submasks(t.zeros()) {
            members.push(t.signs() | fill);
        }
    }
    SignFamily::from_bits(cloud.ground.clone(), members)
}

/// `L(|L|) = ↑Baryc(L) ∩ {±1}^E`: the orthants touched by the cube complex.
pub fn orthant_pattern_of_complex(family: &SignFamily) -> SignFamily {
    let bary = barycentric_completion(family);
    let mut members = Vec::new();
    for t in bary.barycenters().iter() {
        for fill in submasks(t.zeros()) {
            members.push(t.signs() | fill);
        }
    }
    SignFamily::from_bits(family.ground().clone(), members)
}

/// Coordinates where `t(f) ≠ u(f)`.
#[inline]
fn differs(t: &PartialSignVector, u: &PartialSignVector) -> u64 {
    (t.support() ^ u.support()) | (t.support() & u.support() & (t.signs() ^ u.signs()))
}

#[inline]
fn conflicts(a: &PartialSignVector, b: &PartialSignVector) -> u64 {
    a.support() & b.support() & (a.signs() ^ b.signs())
}

#[inline]
fn between(a: &PartialSignVector, t: &PartialSignVector, b: &PartialSignVector) -> bool {
    l1_partial_raw(a, t) + l1_partial_raw(t, b) == l1_partial_raw(a, b)
}

/// `t(f) ∈ {0, a(f), b(f)}` everywhere.
#[inline]
fn sca_candidate(t: &PartialSignVector, a: &PartialSignVector, b: &PartialSignVector) -> bool {
    let plus = |v: &PartialSignVector| v.support() & v.signs();
    let minus = |v: &PartialSignVector| v.support() & !v.signs();
    plus(t) & !(plus(a) | plus(b)) == 0 && minus(t) & !(minus(a) | minus(b)) == 0
}

/// `t(f) ∈ {a(f), b(f)}` wherever `a(f)·b(f) ≥ 0`.
#[inline]
fn sign_convex_candidate(
    t: &PartialSignVector,
    a: &PartialSignVector,
    b: &PartialSignVector,
) -> bool {
    differs(t, a) & differs(t, b) & !conflicts(a, b) == 0
}

/// A conflicting pair `(t', t'')` and the coordinate `e` left unresolved.
pub type ConvexityViolation = (PartialSignVector, PartialSignVector, usize);

/// Scans unordered pairs; for each, the union of `zeros(t)` over admissible
/// `t` must cover every conflict coordinate.
fn first_violation(
    family: &PartialFamily,
    admissible: impl Fn(&PartialSignVector, &PartialSignVector, &PartialSignVector) -> bool,
) -> Option<ConvexityViolation> {
    let members = family.members();
    let mask = full_mask(family.dim());
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let conflict = conflicts(a, b);
            if conflict == 0 {
                continue;
            }
            let mut covered = 0u64;
            for t in members {
                let hit = t.zeros() & conflict & !covered & mask;
                if hit != 0 && admissible(t, a, b) {
                    covered |= hit;
                    if covered == conflict {
                        break;
                    }
                }
            }
            if covered != conflict {
                let e = (conflict & !covered).trailing_zeros() as usize;
                return Some((*a, *b, e));
            }
        }
    }
    None
}

pub fn sca_violation(family: &PartialFamily) -> Option<ConvexityViolation> {
    first_violation(family, sca_candidate)
}

pub fn sign_convexity_violation(family: &PartialFamily) -> Option<ConvexityViolation> {
    first_violation(family, sign_convex_candidate)
}

/// The signed-circuit axiom, equivalently 0-convexity.
pub fn satisfies_sca(family: &PartialFamily) -> bool {
    sca_violation(family).is_none()
}

pub fn is_sign_convex(family: &PartialFamily) -> bool {
    sign_convexity_violation(family).is_none()
}

/// The four equivalent conditions for an upward-closed `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityReport {
    pub sign_convex: bool,
    pub sign_convex_in_box: bool,
    pub zero_convex: bool,
    pub zero_convex_in_box: bool,
}

impl ConvexityReport {
    pub fn agree(&self) -> bool {
        let v = [self.sign_convex, self.sign_convex_in_box, self.zero_convex, self.zero_convex_in_box];
        v.iter().all(|&x| x == v[0])
    }
}

/// Evaluates sign-convexity and 0-convexity, each with and without the
/// requirement that the eliminating vector lie in the box `[t', t'']`.
pub fn upward_closed_convexity_report(family: &PartialFamily) -> Result<ConvexityReport> {
    if let Some(t) = family.upward_closure_violation() {
        return Err(Error::NotUpwardClosed(t.to_string()));
    }
    let boxed = |rule: fn(&PartialSignVector, &PartialSignVector, &PartialSignVector) -> bool| {
        first_violation(family, move |t, a, b| rule(t, a, b) && between(a, t, b)).is_none()
    };
    Ok(ConvexityReport {
        sign_convex: is_sign_convex(family),
        sign_convex_in_box: boxed(sign_convex_candidate),
        zero_convex: satisfies_sca(family),
        zero_convex_in_box: boxed(sca_candidate),
    })
}

/// `satisfies_sca(↑J)`, which always equals `satisfies_sca(J)`.
pub fn closure_satisfies_sca(family: &PartialFamily) -> bool {
    satisfies_sca(&upward_closure(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubihedron::cocircuits;

    fn pv(s: &str) -> PartialSignVector {
        s.parse().unwrap()
    }

    fn fam(n: usize, items: &[&str]) -> PartialFamily {
        PartialFamily::from_strs(n, items).unwrap()
    }

    fn cloud(points: &[&[f64]]) -> PointCloud {
        PointCloud::from_rows(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn six_cycle() -> SignFamily {
        SignFamily::from_strs(3, &["++-", "+-+", "+--", "-++", "-+-", "--+"]).unwrap()
    }

    #[test]
    fn sign_of_point_examples() {
        assert_eq!(sign_of_point(&[-0.3, 0.0, 2.0], DEFAULT_TOLERANCE).unwrap(), pv("-0+"));
        assert_eq!(sign_of_point(&[0.0, 0.0], DEFAULT_TOLERANCE).unwrap(), pv("00"));
        assert_eq!(sign_of_point(&[1e-12, -1.0], 1e-9).unwrap(), pv("0-"));
        assert_eq!(sign_of_point(&[1e-12, -1.0], 0.0).unwrap(), pv("+-"));
        assert!(matches!(
            sign_of_point(&[1.0, f64::NAN], 1e-9),
            Err(Error::NonFinite { index: 1, .. })
        ));
    }

    #[test]
    fn cloud_validation() {
        assert!(PointCloud::from_rows(vec![vec![1.0, 2.0], vec![1.0]]).is_err());
        assert!(PointCloud::from_rows(vec![vec![f64::INFINITY]]).is_err());
        assert!(cloud(&[&[1.0]]).with_tolerance(-1.0).is_err());
        assert_eq!(PointCloud::from_rows(vec![]).unwrap().ground().len(), 0);
    }

    #[test]
    fn orthant_pattern_examples() {
        assert_eq!(orthant_pattern(&cloud(&[&[0.5, 0.5]])).to_strings(), vec!["++"]);
        assert_eq!(orthant_pattern(&cloud(&[&[0.0, 1.0]])).to_strings(), vec!["-+", "++"]);
        assert_eq!(
            orthant_pattern(&cloud(&[&[-1.0, -1.0], &[1.0, 1.0]])).to_strings(),
            vec!["--", "++"]
        );
    }

    #[test]
    fn region_pattern_examples() {
        assert_eq!(region_pattern(&cloud(&[&[0.5, 0.5]])), fam(2, &["++"]));
        assert_eq!(region_pattern(&cloud(&[&[0.0, 1.0], &[2.0, -3.0]])), fam(2, &["0+", "+-"]));
        assert_eq!(region_pattern(&cloud(&[&[-1.0, -1.0], &[1.0, 1.0], &[2.0, 2.0]])), fam(2, &["--", "++"]));
    }

    #[test]
    fn sca_examples() {
        assert_eq!(sca_violation(&fam(2, &["--", "++"])), Some((pv("--"), pv("++"), 0)));
        assert!(satisfies_sca(&fam(1, &["-", "0", "+"])));
        let cocirc = cocircuits(&six_cycle());
        assert!(!satisfies_sca(&cocirc));
        // "00" lies below everything, so it resolves every conflict.
        assert!(satisfies_sca(&fam(2, &["--", "00", "++"])));
    }

    #[test]
    fn sign_convexity_examples() {
        assert!(is_sign_convex(&PartialFamily::everything(GroundSet::new(3).unwrap())));
        assert!(!is_sign_convex(&fam(2, &["--", "++"])));
        let square = SignFamily::full(GroundSet::new(2).unwrap());
        assert!(is_sign_convex(barycentric_completion(&square).barycenters()));
        // zero in an agreeing coordinate is 0-convex but not sign-convex
        let j = fam(2, &["-+", "00", "++"]);
        assert!(satisfies_sca(&j));
        assert!(!is_sign_convex(&j));
    }

    #[test]
    fn report_examples() {
        let l6 = barycentric_completion(&six_cycle()).into_barycenters();
        let r = upward_closed_convexity_report(&l6).unwrap();
        assert_eq!(r, ConvexityReport {
            sign_convex: false,
            sign_convex_in_box: false,
            zero_convex: false,
            zero_convex_in_box: false,
        });
        let cube = SignFamily::full(GroundSet::new(3).unwrap());
        let r = upward_closed_convexity_report(barycentric_completion(&cube).barycenters()).unwrap();
        assert!(r.sign_convex && r.agree());
        let everything = upward_closure(&fam(2, &["00"]));
        assert_eq!(everything.len(), 9);
        assert!(upward_closed_convexity_report(&everything).unwrap().zero_convex_in_box);
        assert!(matches!(
            upward_closed_convexity_report(&fam(2, &["00"])),
            Err(Error::NotUpwardClosed(_))
        ));
    }

    #[test]
    fn realization_of_complex() {
        assert_eq!(orthant_pattern_of_complex(&six_cycle()), six_cycle());
        let cube = SignFamily::full(GroundSet::new(3).unwrap());
        assert_eq!(orthant_pattern_of_complex(&cube), cube);
    }

    #[test]
    fn segment_through_origin() {
        let k = cloud(&[&[-1.0, -1.0], &[-0.5, -0.5], &[0.0, 0.0], &[0.5, 0.5], &[1.0, 1.0]]);
        let j = region_pattern(&k);
        assert!(satisfies_sca(&j));
        assert!(is_sign_convex(&j));
        assert_eq!(orthant_pattern(&k).len(), 4);
    }
}
