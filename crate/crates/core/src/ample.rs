//! Every characterization of ampleness as its own predicate, plus a harness
//! that runs them side by side and family generators for testing.
//!
//! The predicates share nothing beyond the primitive operations of the other
//! modules: each one reads its defining condition literally, so agreement
//! between them is evidence rather than tautology.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::bits::{compress, full_mask, submasks};
use crate::convexity::{sca_violation, sign_convexity_violation};
use crate::cubihedron::{
    alternating_sum, barycentric_completion, cocircuits, disconnected_pair, face_counts_in,
    grid_isometry_violation, is_connected, is_isometric, projected_complex_contains,
    projection_dimensions, skeleton_isometry_violation, FaceComplex,
};
use crate::shatter::{project, restrict, shattered, strongly_shattered, vc_dimension, SubsetFamily};
use crate::signs::{
    complement, GroundSet, PartialSignVector, SignFamily, SignVector, Subset, MAX_ENUMERABLE,
};
use crate::{Error, Result};

/// The identifiers of the characterizations, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Characterization {
    /// `L^A` is isometric for all `A`.
    Superisometry,
    /// `L^A` is connected for all `A`.
    Superconnectivity,
    /// `L` is isometric and, for some `e`, `L_e` and `L^e` are ample.
    IsoRecursive,
    /// `L` is connected and `L^e` is ample for every `e`.
    ConnRecursive,
    /// `(L^A)_B = (L_B)^A` for disjoint `A`, `B`.
    Commutativity,
    /// `#L = #X̄(L)`.
    Count,
    /// `#L = #X̲(L)`.
    Sparse,
    /// For every partition `E = A ⊔ B`, `A ∈ X̲(L)` or `B ∈ X̲(L*)`.
    Lopsided,
    /// Every face meeting `L` meets it in a complex of Euler characteristic 1.
    Euler,
    /// No face meets `L` in a proper, nonempty, antipodally closed set.
    Asymmetry,
    /// `Baryc(L)` is an isometric subgraph of the grid.
    GridIso,
    /// `Baryc(L)` satisfies the signed-circuit axiom.
    ScaBaryc,
    /// `Cocirc(L)` satisfies the signed-circuit axiom.
    ScaCocirc,
    /// `Circ(L)` satisfies the signed-circuit axiom.
    ScaCirc,
    /// `Baryc(L)` is sign-convex.
    SignconvBaryc,
    /// `dim |L|_A = dim |L_A|` for all `A`.
    ProjDim,
    /// `|L|_A = |L_A|` for all `A`.
    ProjSet,
}

impl Characterization {
    pub const ALL: [Characterization; 17] = [
        Characterization::Superisometry,
        Characterization::Superconnectivity,
        Characterization::IsoRecursive,
        Characterization::ConnRecursive,
        Characterization::Commutativity,
        Characterization::Count,
        Characterization::Sparse,
        Characterization::Lopsided,
        Characterization::Euler,
        Characterization::Asymmetry,
        Characterization::GridIso,
        Characterization::ScaBaryc,
        Characterization::ScaCocirc,
        Characterization::ScaCirc,
        Characterization::SignconvBaryc,
        Characterization::ProjDim,
        Characterization::ProjSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Characterization::Superisometry => "SUPERISOMETRY",
            Characterization::Superconnectivity => "SUPERCONNECTIVITY",
            Characterization::IsoRecursive => "ISO_RECURSIVE",
            Characterization::ConnRecursive => "CONN_RECURSIVE",
            Characterization::Commutativity => "COMMUTATIVITY",
            Characterization::Count => "COUNT",
            Characterization::Sparse => "SPARSE",
            Characterization::Lopsided => "LOPSIDED",
            Characterization::Euler => "EULER",
            Characterization::Asymmetry => "ASYMMETRY",
            Characterization::GridIso => "GRID_ISO",
            Characterization::ScaBaryc => "SCA_BARYC",
            Characterization::ScaCocirc => "SCA_COCIRC",
            Characterization::ScaCirc => "SCA_CIRC",
            Characterization::SignconvBaryc => "SIGNCONV_BARYC",
            Characterization::ProjDim => "PROJ_DIM",
            Characterization::ProjSet => "PROJ_SET",
        }
    }
}

impl fmt::Display for Characterization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Characterization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        Characterization::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::UnknownCharacterization(s.to_string()))
    }
}

/// The first counterexample found by a failing predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `L^A` fails; the two vectors live in `{±1}^{E−A}`.
    Restriction { a: Subset, first: SignVector, second: SignVector },
    /// The recursive condition fails, at `coordinate` if one is to blame.
    Recursion { coordinate: Option<usize>, reason: String },
    /// A pair of disjoint sets.
    Partition { a: Subset, b: Subset },
    /// A face whose intersection with `L` has the wrong Euler characteristic.
    EulerFace { face: PartialSignVector, euler: i64 },
    /// A face meeting `L` in a proper, nonempty, antipodally closed set.
    SymmetricFace { face: PartialSignVector, members: usize },
    /// Two barycenters, with the coordinate they conflict on if relevant.
    Pair { first: PartialSignVector, second: PartialSignVector, coordinate: Option<usize> },
    /// `#L` against the size of a shattering family.
    Counts { members: usize, sets: usize },
    Dimensions { a: Subset, projected_complex: i32, complex_of_projection: i32 },
    ProjectedFace { a: Subset, face: PartialSignVector, in_projected_complex: bool },
}

impl Witness {
    /// One-line rendering with coordinate labels from `ground`.
    pub fn describe(&self, ground: &GroundSet) -> String {
        let label = |e: usize| ground.label(e);
        match self {
            Witness::Restriction { a, first, second } => {
                format!("A = {}: {first} and {second} in L^A", a.describe(ground))
            }
            Witness::Recursion { coordinate: Some(e), reason } => format!("{} at {}", reason, label(*e)),
            Witness::Recursion { coordinate: None, reason } => reason.clone(),
            Witness::Partition { a, b } => {
                format!("A = {}, B = {}", a.describe(ground), b.describe(ground))
            }
            Witness::EulerFace { face, euler } => format!("face {face} has Euler characteristic {euler}"),
            Witness::SymmetricFace { face, members } => {
                format!("face {face} meets L in {members} antipodally closed vertices")
            }
            Witness::Pair { first, second, coordinate: Some(e) } => {
                format!("{first} and {second} at {}", label(*e))
            }
            Witness::Pair { first, second, coordinate: None } => format!("{first} and {second}"),
            Witness::Counts { members, sets } => format!("#L = {members}, {sets} sets"),
            Witness::Dimensions { a, projected_complex, complex_of_projection } => format!(
                "A = {}: dimensions {projected_complex} and {complex_of_projection}",
                a.describe(ground)
            ),
            Witness::ProjectedFace { a, face, in_projected_complex } => format!(
                "A = {}: face {face} {} the projected complex only",
                a.describe(ground),
                if *in_projected_complex { "in" } else { "missing from" }
            ),
        }
    }
}

/// A predicate's answer, with a witness whenever it is `false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_witness(witness: Option<Witness>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

/// Lazily computed tables shared between predicates on one family.
struct Context<'a> {
    family: &'a SignFamily,
    baryc: OnceCell<FaceComplex>,
    shattered: OnceCell<SubsetFamily>,
    strong: OnceCell<SubsetFamily>,
    complement: OnceCell<SignFamily>,
}

impl<'a> Context<'a> {
    fn new(family: &'a SignFamily) -> Self {
        Context {
            family,
            baryc: OnceCell::new(),
            shattered: OnceCell::new(),
            strong: OnceCell::new(),
            complement: OnceCell::new(),
        }
    }

    fn n(&self) -> usize {
        self.family.dim()
    }

    fn subset(&self, bits: u64) -> Subset {
        Subset::from_raw(self.n(), bits)
    }

    fn baryc(&self) -> &FaceComplex {
        self.baryc.get_or_init(|| barycentric_completion(self.family))
    }

    fn shattered(&self) -> &SubsetFamily {
        self.shattered.get_or_init(|| shattered(self.family))
    }

    fn strong(&self) -> &SubsetFamily {
        self.strong.get_or_init(|| strongly_shattered(self.family))
    }

    fn complement(&self) -> &SignFamily {
        self.complement.get_or_init(|| complement(self.family))
    }

    fn run(&self, which: Characterization) -> Verdict {
        let witness = match which {
            Characterization::Superisometry => self.superisometry(),
            Characterization::Superconnectivity => self.superconnectivity(),
            Characterization::IsoRecursive => self.iso_recursive(),
            Characterization::ConnRecursive => self.conn_recursive(),
            Characterization::Commutativity => self.commutativity(),
            Characterization::Count => self.count(),
            Characterization::Sparse => self.sparse(),
            Characterization::Lopsided => self.lopsided(),
            Characterization::Euler => self.euler(),
            Characterization::Asymmetry => self.asymmetry(),
            Characterization::GridIso => self.grid_iso(),
            Characterization::ScaBaryc => pair_witness(sca_violation(self.baryc().barycenters())),
            Characterization::ScaCocirc => pair_witness(sca_violation(&self.baryc().facets())),
            Characterization::ScaCirc => {
                pair_witness(sca_violation(&cocircuits(self.complement())))
            }
            Characterization::SignconvBaryc => {
                pair_witness(sign_convexity_violation(self.baryc().barycenters()))
            }
            Characterization::ProjDim => self.proj_dim(),
            Characterization::ProjSet => self.proj_set(),
        };
        Verdict::from_witness(witness)
    }

    fn restriction_failure(
        &self,
        bad_pair: impl Fn(&SignFamily) -> Option<(SignVector, SignVector)>,
    ) -> Option<Witness> {
        (0..=full_mask(self.n())).find_map(|bits| {
            let a = self.subset(bits);
            let r = restrict(self.family, &a).expect("same ground set");
            bad_pair(&r).map(|(first, second)| Witness::Restriction { a, first, second })
        })
    }

    fn superisometry(&self) -> Option<Witness> {
        self.restriction_failure(skeleton_isometry_violation)
    }

    fn superconnectivity(&self) -> Option<Witness> {
        self.restriction_failure(disconnected_pair)
    }

    fn iso_recursive(&self) -> Option<Witness> {
        if !is_isometric(self.family) {
            return Some(Witness::Recursion { coordinate: None, reason: "L is not isometric".into() });
        }
        (!iso_recursive(self.family)).then(|| Witness::Recursion {
            coordinate: None,
            reason: "no coordinate e has both L_e and L^e ample".into(),
        })
    }

    fn conn_recursive(&self) -> Option<Witness> {
        if !is_connected(self.family) {
            return Some(Witness::Recursion { coordinate: None, reason: "L is not connected".into() });
        }
        let n = self.n();
        (0..n).find_map(|e| {
            let r = restrict(self.family, &self.subset(1 << e)).expect("same ground set");
            (!conn_recursive(&r)).then(|| Witness::Recursion {
                coordinate: Some(e),
                reason: "L^e is not ample".into(),
            })
        })
    }

    fn commutativity(&self) -> Option<Witness> {
        let mask = full_mask(self.n());
        for a_bits in 0..=mask {
            let a = self.subset(a_bits);
            let keep_a = mask & !a_bits;
            let restricted = restrict(self.family, &a).expect("same ground set");
            for b_bits in submasks(keep_a) {
                let b = self.subset(b_bits);
                let keep_b = mask & !b_bits;
                let b_in_rest = Subset::from_raw(restricted.dim(), compress(b_bits, keep_a));
                let left = project(&restricted, &b_in_rest).expect("same ground set");
                let projected = project(self.family, &b).expect("same ground set");
                let a_in_proj = Subset::from_raw(projected.dim(), compress(a_bits, keep_b));
                let right = restrict(&projected, &a_in_proj).expect("same ground set");
                if left.encodings() != right.encodings() {
                    return Some(Witness::Partition { a, b });
                }
            }
        }
        None
    }

    fn count(&self) -> Option<Witness> {
        let (members, sets) = (self.family.len(), self.shattered().len());
        (members != sets).then_some(Witness::Counts { members, sets })
    }

    fn sparse(&self) -> Option<Witness> {
        let (members, sets) = (self.family.len(), self.strong().len());
        (members != sets).then_some(Witness::Counts { members, sets })
    }

    fn lopsided(&self) -> Option<Witness> {
        let mask = full_mask(self.n());
        let other = strongly_shattered(self.complement());
        (0..=mask).find_map(|a_bits| {
            let b_bits = mask & !a_bits;
            let ok = self.strong().contains_bits(a_bits) || other.contains_bits(b_bits);
            (!ok).then(|| Witness::Partition { a: self.subset(a_bits), b: self.subset(b_bits) })
        })
    }

    /// Faces in scan order: free coordinates ascending, then fixed signs.
    fn faces(&self) -> impl Iterator<Item = PartialSignVector> {
        let n = self.n();
        let mask = full_mask(n);
        (0..=mask).flat_map(move |zeros| {
            let support = mask & !zeros;
            submasks(support).map(move |signs| PartialSignVector::from_raw(n, support, signs))
        })
    }

    fn euler(&self) -> Option<Witness> {
        let bary = self.baryc().barycenters();
        self.faces().find_map(|face| {
            let f = face_counts_in(bary, &face);
            let euler = alternating_sum(&f);
            (f[0] > 0 && euler != 1).then_some(Witness::EulerFace { face, euler })
        })
    }

    fn asymmetry(&self) -> Option<Witness> {
        let members = self.family.encodings();
        self.faces().find_map(|face| {
            let free = face.zeros();
            let inside: Vec<u64> =
                members.iter().copied().filter(|s| s & !free == face.signs()).collect();
            let size = 1usize << free.count_ones();
            let closed = inside.iter().all(|s| self.family.contains_bits(s ^ free));
            (closed && !inside.is_empty() && inside.len() != size)
                .then_some(Witness::SymmetricFace { face, members: inside.len() })
        })
    }

    fn grid_iso(&self) -> Option<Witness> {
        grid_isometry_violation(self.baryc().barycenters())
            .map(|(first, second)| Witness::Pair { first, second, coordinate: None })
    }

    fn proj_dim(&self) -> Option<Witness> {
        (0..=full_mask(self.n())).find_map(|bits| {
            let a = self.subset(bits);
            let (p, q) = projection_dimensions(self.family, &a).expect("same ground set");
            (p != q).then_some(Witness::Dimensions {
                a,
                projected_complex: p,
                complex_of_projection: q,
            })
        })
    }

    fn proj_set(&self) -> Option<Witness> {
        let n = self.n();
        for bits in 0..=full_mask(n) {
            let a = self.subset(bits);
            let projected = project(self.family, &a).expect("same ground set");
            let target = barycentric_completion(&projected);
            let m = projected.dim();
            let mask = full_mask(m);
            for zeros in 0..=mask {
                for signs in submasks(mask & !zeros) {
                    let u = PartialSignVector::from_raw(m, mask & !zeros, signs);
                    let left = projected_complex_contains(self.family, &a, &u).expect("dimensions match");
                    if left != target.barycenters().contains(&u) {
                        return Some(Witness::ProjectedFace { a, face: u, in_projected_complex: left });
                    }
                }
            }
        }
        None
    }
}

fn pair_witness(v: Option<(PartialSignVector, PartialSignVector, usize)>) -> Option<Witness> {
    v.map(|(first, second, e)| Witness::Pair { first, second, coordinate: Some(e) })
}

fn iso_recursive(family: &SignFamily) -> bool {
    let n = family.dim();
    if n == 0 {
        return true;
    }
    if !is_isometric(family) {
        return false;
    }
    (0..n).any(|e| {
        let a = Subset::from_raw(n, 1 << e);
        iso_recursive(&project(family, &a).expect("same ground set"))
            && iso_recursive(&restrict(family, &a).expect("same ground set"))
    })
}

fn conn_recursive(family: &SignFamily) -> bool {
    let n = family.dim();
    if n == 0 {
        return true;
    }
    is_connected(family)
        && (0..n).all(|e| {
            conn_recursive(&restrict(family, &Subset::from_raw(n, 1 << e)).expect("same ground set"))
        })
}

/// `#L = #X̄(L)`.
pub fn is_ample(family: &SignFamily) -> bool {
    shattered(family).len() == family.len()
}

/// Evaluates a single characterization.
pub fn check(family: &SignFamily, which: Characterization) -> Verdict {
    Context::new(family).run(which)
}

/// All predicates on one family, side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub n: usize,
    pub family: Vec<String>,
    pub family_digest: String,
    pub verdicts: Vec<(Characterization, Verdict)>,
    pub agree: bool,
    pub dress_pajor: (usize, usize, usize),
    pub vc_dimension: i32,
    labels: GroundSet,
}

impl CharacterizationReport {
    pub fn verdict(&self, which: Characterization) -> Option<&Verdict> {
        self.verdicts.iter().find(|(c, _)| *c == which).map(|(_, v)| v)
    }

    pub fn is_ample(&self) -> bool {
        self.dress_pajor.1 == self.dress_pajor.2
    }

    /// Characterizations whose verdict differs from `is_ample`.
    pub fn disagreements(&self) -> Vec<Characterization> {
        let ample = self.is_ample();
        self.verdicts.iter().filter(|(_, v)| v.holds != ample).map(|(c, _)| *c).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut verdicts = Map::new();
        let mut witnesses = Map::new();
        for (c, v) in &self.verdicts {
            verdicts.insert(c.name().to_string(), Value::Bool(v.holds));
            if let Some(w) = &v.witness {
                witnesses.insert(c.name().to_string(), serde_json::to_value(w).expect("plain data"));
            }
        }
        let (lo, mid, hi) = self.dress_pajor;
        json!({
            "n": self.n,
            "family": self.family,
            "family_digest": self.family_digest,
            "verdicts": verdicts,
            "witnesses": witnesses,
            "agree": self.agree,
            "dress_pajor": [lo, mid, hi],
            "vc_dimension": self.vc_dimension,
        })
    }

    pub fn to_text(&self) -> String {
        let (lo, mid, hi) = self.dress_pajor;
        let mut out = format!(
            "n: {}\nmembers: {}\ndress_pajor: {lo} {mid} {hi}\nvc_dimension: {}\nample: {}\n",
            self.n,
            mid,
            self.vc_dimension,
            self.is_ample()
        );
        for (c, v) in &self.verdicts {
            let line = match &v.witness {
                Some(w) => format!("{:<18} {:<5}  {}\n", c.name(), v.holds, w.describe(&self.labels)),
                None => format!("{:<18} {}\n", c.name(), v.holds),
            };
            out.push_str(&line);
        }
        out.push_str(&format!("agree: {}\n", self.agree));
        out
    }
}

impl Serialize for CharacterizationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// SHA-256 of the canonical text form.
pub fn family_digest(family: &SignFamily) -> String {
    let mut text = format!("# n: {}\n", family.dim());
    for s in family.iter() {
        text.push_str(&s.to_string());
        text.push('\n');
    }
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Runs every characterization on `L`.
pub fn cross_check(family: &SignFamily) -> CharacterizationReport {
    cross_check_only(family, &Characterization::ALL)
}

/// Runs the listed characterizations on `L`.
pub fn cross_check_only(family: &SignFamily, which: &[Characterization]) -> CharacterizationReport {
    let ctx = Context::new(family);
    let verdicts: Vec<(Characterization, Verdict)> = which.iter().map(|&c| (c, ctx.run(c))).collect();
    let agree = verdicts.windows(2).all(|w| w[0].1.holds == w[1].1.holds);
    let dress_pajor = (ctx.strong().len(), family.len(), ctx.shattered().len());
    CharacterizationReport {
        n: family.dim(),
        family: family.to_strings(),
        family_digest: family_digest(family),
        verdicts,
        agree,
        dress_pajor,
        vc_dimension: vc_dimension(family),
        labels: family.ground().clone(),
    }
}

pub const MAX_EXHAUSTIVE: usize = 4;

/// The family with index `index`: bit `s` of `index` says whether the vertex
/// with encoding `s` belongs to it.
pub fn family_from_index(n: usize, index: u64) -> SignFamily {
    let members = (0..1u64 << n).filter(|s| index >> s & 1 == 1).collect();
    SignFamily::from_sorted(GroundSet::new(n).expect("small n"), members)
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

/// Counts the families `L ⊆ {±1}^n` satisfying a characterization, over all
/// `2^(2^n)` of them. `jobs` caps the worker threads.
pub fn enumerate_families(n: usize, which: Characterization, jobs: Option<usize>) -> Result<u64> {
    if n > MAX_EXHAUSTIVE {
        return Err(Error::InvalidArgument(format!(
            "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE}; use sampling for n = {n}"
        )));
    }
    let total = 1u64 << (1u64 << n);
    let count = pool(jobs)?.install(|| {
        (0..total)
            .into_par_iter()
            .filter(|&i| check(&family_from_index(n, i), which).holds)
            .count()
    });
    Ok(count as u64)
}

/// Checks `samples` uniformly random families `L ⊆ {±1}^n` and returns how
/// many satisfy the characterization.
pub fn sample_families(
    n: usize,
    which: Characterization,
    samples: u64,
    seed: u64,
    jobs: Option<usize>,
) -> Result<u64> {
    if n > MAX_ENUMERABLE {
        return Err(Error::DimensionTooLarge { n, max: MAX_ENUMERABLE });
    }
    let count = pool(jobs)?.install(|| {
        (0..samples)
            .into_par_iter()
            .filter(|&i| {
                let family = random_family(n, seed.wrapping_add(i), 0.5);
                check(&family, which).holds
            })
            .count()
    });
    Ok(count as u64)
}

/// Shapes of generated families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Full,
    Empty,
    Singleton,
    Downset,
    SixCycle,
    Random,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "FULL" => Ok(FamilyKind::Full),
            "EMPTY" => Ok(FamilyKind::Empty),
            "SINGLETON" => Ok(FamilyKind::Singleton),
            "DOWNSET" => Ok(FamilyKind::Downset),
            "SIX_CYCLE" => Ok(FamilyKind::SixCycle),
            "RANDOM" => Ok(FamilyKind::Random),
            _ => Err(Error::InvalidArgument(format!("unknown family kind `{s}`"))),
        }
    }
}

/// Each vertex of `{±1}^n` independently with probability `p`.
pub fn random_family(n: usize, seed: u64, p: f64) -> SignFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members = (0..1u64 << n).filter(|_| rng.random_bool(p)).collect();
    SignFamily::from_sorted(GroundSet::new(n).expect("caller checks n"), members)
}

/// The down-closure of a few random subsets, encoded with `e ∈ X` as `+1`.
fn random_downset(n: usize, seed: u64) -> SignFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = full_mask(n);
    let generators = rng.random_range(1..=n.max(1));
    let mut members = Vec::new();
    for _ in 0..generators {
        let top = rng.random::<u64>() & mask;
        members.extend(submasks(top));
    }
    SignFamily::from_bits(GroundSet::new(n).expect("caller checks n"), members)
}

/// A deterministic family of the requested shape. `RANDOM` and `DOWNSET`
/// need a seed; `SIX_CYCLE` exists only for `n = 3`.
pub fn generate(kind: FamilyKind, n: usize, seed: Option<u64>) -> Result<SignFamily> {
    let ground = GroundSet::new(n)?;
    let needs_cube = matches!(kind, FamilyKind::Full | FamilyKind::Random);
    if needs_cube && n > MAX_ENUMERABLE {
        return Err(Error::DimensionTooLarge { n, max: MAX_ENUMERABLE });
    }
    let need_seed = || {
        seed.ok_or_else(|| Error::InvalidArgument(format!("{kind:?} families need a seed")))
    };
    match kind {
        FamilyKind::Full => Ok(SignFamily::full(ground)),
        FamilyKind::Empty => Ok(SignFamily::empty(ground)),
        FamilyKind::Singleton => Ok(SignFamily::from_sorted(ground, vec![0])),
        FamilyKind::Downset => Ok(random_downset(n, need_seed()?)),
        FamilyKind::Random => Ok(random_family(n, need_seed()?, 0.5)),
        FamilyKind::SixCycle if n == 3 => {
            SignFamily::from_strs(3, &["++-", "+-+", "+--", "-++", "-+-", "--+"])
        }
        FamilyKind::SixCycle => Err(Error::InvalidArgument(format!(
            "the six-cycle lives in dimension 3, not {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Characterization as C;

    fn six_cycle() -> SignFamily {
        generate(FamilyKind::SixCycle, 3, None).unwrap()
    }

    fn full(n: usize) -> SignFamily {
        generate(FamilyKind::Full, n, None).unwrap()
    }

    fn subset(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in C::ALL {
            assert_eq!(c.name().parse::<C>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), json!(c.name()));
        }
        assert_eq!("sca-cocirc".parse::<C>().unwrap(), C::ScaCocirc);
        assert!(matches!("NOPE".parse::<C>(), Err(Error::UnknownCharacterization(_))));
    }

    #[test]
    fn is_ample_examples() {
        assert!(!is_ample(&six_cycle()));
        assert!(is_ample(&full(3)));
        assert!(is_ample(&generate(FamilyKind::Singleton, 3, None).unwrap()));
        assert!(is_ample(&generate(FamilyKind::Empty, 3, None).unwrap()));
        assert!(!is_ample(&SignFamily::from_strs(2, &["--", "++"]).unwrap()));
    }

    #[test]
    fn six_cycle_witnesses() {
        let l6 = six_cycle();
        let v = check(&l6, C::Superconnectivity);
        assert_eq!(
            v.witness,
            Some(Witness::Restriction {
                a: subset(3, &[0]),
                first: "+-".parse().unwrap(),
                second: "-+".parse().unwrap(),
            })
        );
        assert_eq!(
            check(&l6, C::Lopsided).witness,
            Some(Witness::Partition { a: subset(3, &[0, 1]), b: subset(3, &[2]) })
        );
        assert_eq!(
            check(&l6, C::Asymmetry).witness,
            Some(Witness::SymmetricFace { face: "000".parse().unwrap(), members: 6 })
        );
        assert_eq!(
            check(&l6, C::Commutativity).witness,
            Some(Witness::Partition { a: subset(3, &[0, 1]), b: subset(3, &[2]) })
        );
        assert_eq!(
            check(&l6, C::ProjDim).witness,
            Some(Witness::Dimensions {
                a: subset(3, &[0]),
                projected_complex: 1,
                complex_of_projection: 2
            })
        );
    }

    #[test]
    fn alternative_commutativity_witness() {
        // A = {e2,e3}, B = {e1}: (L^A)_B is empty while (L_B)^A = {ε}.
        let l6 = six_cycle();
        let a = subset(3, &[1, 2]);
        let left = project(&restrict(&l6, &a).unwrap(), &subset(1, &[0])).unwrap();
        let right = restrict(&project(&l6, &subset(3, &[0])).unwrap(), &subset(2, &[0, 1])).unwrap();
        assert!(left.is_empty());
        assert_eq!(right.len(), 1);
    }

    #[test]
    fn euler_on_square() {
        let square = full(2);
        assert!(check(&square, C::Euler).holds);
        let bary = barycentric_completion(&square);
        let f = face_counts_in(bary.barycenters(), &"00".parse().unwrap());
        assert_eq!(f, vec![4, 4, 1]);
    }

    #[test]
    fn six_cycle_all_false_full_all_true() {
        let r = cross_check(&six_cycle());
        assert!(r.agree);
        assert!(r.verdicts.iter().all(|(_, v)| !v.holds && v.witness.is_some()));
        let r = cross_check(&full(3));
        assert!(r.agree && r.verdicts.iter().all(|(_, v)| v.holds));
        assert!(r.disagreements().is_empty());
    }

    #[test]
    fn trivial_dimensions() {
        for n in 0..=2 {
            for kind in [FamilyKind::Empty, FamilyKind::Full, FamilyKind::Singleton] {
                let r = cross_check(&generate(kind, n, None).unwrap());
                assert!(r.agree && r.is_ample(), "{kind:?} at n = {n}");
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let v = cross_check(&six_cycle()).to_json();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["n", "family", "family_digest", "verdicts", "witnesses", "agree", "dress_pajor", "vc_dimension"]
        );
        assert_eq!(v["dress_pajor"], json!([4, 6, 7]));
        assert_eq!(v["vc_dimension"], json!(2));
        assert_eq!(v["verdicts"].as_object().unwrap().len(), 17);
        assert_eq!(v["witnesses"]["LOPSIDED"]["kind"], json!("partition"));
        assert_eq!(v["witnesses"]["LOPSIDED"]["a"], json!("110"));
    }

    #[test]
    fn text_report_mentions_every_id() {
        let text = cross_check(&six_cycle()).to_text();
        for c in C::ALL {
            assert!(text.contains(c.name()));
        }
        assert!(text.contains("A = {e1,e2}, B = {e3}"));
    }

    #[test]
    fn digest_is_canonical() {
        let a = SignFamily::from_strs(2, &["++", "--"]).unwrap();
        let b = SignFamily::from_strs(2, &["--", "++", "--"]).unwrap();
        assert_eq!(family_digest(&a), family_digest(&b));
        assert_ne!(family_digest(&a), family_digest(&full(2)));
        assert_eq!(family_digest(&a).len(), 64);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_families(1, C::Count, Some(1)).unwrap(), 4);
        assert_eq!(enumerate_families(2, C::Count, None).unwrap(), 14);
        assert_eq!(enumerate_families(2, C::ScaCocirc, None).unwrap(), 14);
        assert_eq!(enumerate_families(0, C::Count, None).unwrap(), 2);
        assert!(enumerate_families(5, C::Count, None).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_families(5, C::Count, 50, 11, Some(2)).unwrap();
        let b = sample_families(5, C::Count, 50, 11, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generators() {
        assert_eq!(six_cycle().len(), 6);
        assert!(generate(FamilyKind::SixCycle, 4, None).is_err());
        assert_eq!(full(2).len(), 4);
        assert!(generate(FamilyKind::Random, 3, None).is_err());
        let a = generate(FamilyKind::Random, 6, Some(3)).unwrap();
        assert_eq!(a, generate(FamilyKind::Random, 6, Some(3)).unwrap());
        for seed in 0..20 {
            let d = generate(FamilyKind::Downset, 5, Some(seed)).unwrap();
            assert!(is_ample(&d), "seed {seed}");
            assert!(d.contains_bits(0));
        }
        assert_eq!("six_cycle".parse::<FamilyKind>().unwrap(), FamilyKind::SixCycle);
    }
}
