//! Ground sets, full and partial sign vectors, and the families built from
//! them.
//!
//! A full sign vector `s ∈ {±1}^E` is stored as a word whose bit `e` is set
//! iff `s(e) = +1`. A partial sign vector `t ∈ {±1,0}^E` additionally stores
//! its support; sign bits outside the support are always zero.
//!
//! The text form writes one vector per line with the characters `+`, `-` and
//! `0`, leftmost character first coordinate. Lines starting with `#` are
//! comments, except for two optional header directives:
//!
//! ```text
//! # n: 3
//! # labels: a b c
//! ```
//!
//! which fix the dimension (needed for empty files) and the coordinate names.
//! Over the empty ground set the single empty vector is written `()`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::bits::{full_mask, positions, submasks};
use crate::{Error, Result};

/// Largest supported ground set.
pub const MAX_DIMENSION: usize = 62;

/// Largest ground set for which the whole vertex set `{±1}^E` may be
/// materialized (complements, full cubes).
pub const MAX_ENUMERABLE: usize = 26;

/// The finite ground set `E`, identified with `0..n`.
#[derive(Clone, Debug)]
pub struct GroundSet {
    n: usize,
    labels: Option<Arc<[String]>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIMENSION });
        }
        Ok(GroundSet { n, labels: None })
    }

    /// Ground set with explicit coordinate names, in coordinate order.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge { n: labels.len(), max: MAX_DIMENSION });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabels(format!("bad label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidLabels(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { n: labels.len(), labels: Some(labels.into()) })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Name of coordinate `e`; defaults to `e1`, `e2`, ...
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(labels) => labels[e].clone(),
            None => format!("e{}", e + 1),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|e| self.label(e)).collect()
    }

    pub fn has_explicit_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.n).find(|&e| self.label(e) == label)
    }

    /// Mask with one bit per coordinate.
    pub fn mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// The ground set `E − A`, keeping the names of the surviving coordinates.
    pub(crate) fn without(&self, a: u64) -> GroundSet {
        if a & self.mask() == 0 {
            return self.clone();
        }
        let keep = self.mask() & !a;
        let labels: Vec<String> = positions(keep).map(|e| self.label(e)).collect();
        GroundSet { n: labels.len(), labels: Some(labels.into()) }
    }

    pub(crate) fn check_same(&self, other_n: usize) -> Result<()> {
        if self.n == other_n {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch { left: self.n, right: other_n })
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && (0..self.n).all(|e| self.label(e) == other.label(e))
    }
}

impl Eq for GroundSet {}

/// A single coordinate value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }
}

/// A vertex `s ∈ {±1}^E` of the hypercube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    n: u8,
    bits: u64,
}

impl SignVector {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIMENSION });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::OutOfRange { bits, n });
        }
        Ok(SignVector { n: n as u8, bits })
    }

    pub(crate) fn from_raw(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        SignVector { n: n as u8, bits }
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    /// Bit `e` set iff coordinate `e` is `+1`.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, e: usize) -> Sign {
        assert!(e < self.dim(), "coordinate {e} out of range");
        if self.bits >> e & 1 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The antipode `−s`.
    pub fn negate(&self) -> SignVector {
        SignVector { n: self.n, bits: !self.bits & full_mask(self.dim()) }
    }

    pub fn to_partial(&self) -> PartialSignVector {
        PartialSignVector::from(*self)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("()");
        }
        for e in 0..self.dim() {
            write!(f, "{}", self.get(e).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: PartialSignVector = s.parse()?;
        t.to_full().ok_or_else(|| Error::Parse {
            line: 1,
            message: format!("{s:?} contains a zero coordinate"),
        })
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A map `t ∈ {±1,0}^E`; doubles as the barycenter of the face
/// `F(t) = H(zeros(t)) × t|supp(t)` of the hypercube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialSignVector {
    n: u8,
    support: u64,
    signs: u64,
}

impl PartialSignVector {
    /// Builds `t` from its support and sign bits; sign bits outside the
    /// support are discarded.
    pub fn new(n: usize, support: u64, signs: u64) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIMENSION });
        }
        if support & !full_mask(n) != 0 {
            return Err(Error::OutOfRange { bits: support, n });
        }
        Ok(PartialSignVector { n: n as u8, support, signs: signs & support })
    }

    pub(crate) fn from_raw(n: usize, support: u64, signs: u64) -> Self {
        debug_assert!(support & !full_mask(n) == 0);
        PartialSignVector { n: n as u8, support, signs: signs & support }
    }

    /// The zero map, barycenter of the whole cube.
    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn signs(&self) -> u64 {
        self.signs
    }

    /// The zero set `E(t)`.
    pub fn zeros(&self) -> u64 {
        full_mask(self.dim()) & !self.support
    }

    pub fn get(&self, e: usize) -> Sign {
        assert!(e < self.dim(), "coordinate {e} out of range");
        if self.support >> e & 1 == 0 {
            Sign::Zero
        } else if self.signs >> e & 1 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_full(&self) -> bool {
        self.support == full_mask(self.dim())
    }

    pub fn to_full(&self) -> Option<SignVector> {
        self.is_full().then(|| SignVector::from_raw(self.dim(), self.signs))
    }

    /// Dimension of the face this vector is the barycenter of.
    pub fn face_dimension(&self) -> usize {
        self.zeros().count_ones() as usize
    }

    /// Vertices of the face `F(t)`, i.e. all full `s` with `t ≺ s`.
    pub fn vertices(&self) -> impl Iterator<Item = SignVector> + '_ {
        let n = self.dim();
        let signs = self.signs;
        submasks(self.zeros()).map(move |free| SignVector::from_raw(n, signs | free))
    }
}

impl From<SignVector> for PartialSignVector {
    fn from(s: SignVector) -> Self {
        PartialSignVector { n: s.n, support: full_mask(s.dim()), signs: s.bits }
    }
}

impl fmt::Display for PartialSignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("()");
        }
        for e in 0..self.dim() {
            write!(f, "{}", self.get(e).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PartialSignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_vector(s.trim(), 1)
    }
}

impl Serialize for PartialSignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_vector(s: &str, line: usize) -> Result<PartialSignVector> {
    if s == "()" {
        return Ok(PartialSignVector::from_raw(0, 0, 0));
    }
    let n = s.chars().count();
    if n > MAX_DIMENSION {
        return Err(Error::Parse {
            line,
            message: format!("vector has {n} coordinates, at most {MAX_DIMENSION} are supported"),
        });
    }
    let (mut support, mut signs) = (0u64, 0u64);
    for (e, c) in s.chars().enumerate() {
        match Sign::from_char(c) {
            Some(Sign::Plus) => {
                support |= 1 << e;
                signs |= 1 << e;
            }
            Some(Sign::Minus) => support |= 1 << e,
            Some(Sign::Zero) => {}
            None => {
                return Err(Error::Parse {
                    line,
                    message: format!("illegal character {c:?} at column {}", e + 1),
                })
            }
        }
    }
    Ok(PartialSignVector::from_raw(n, support, signs))
}

/// A subset `A ⊆ E`, stored as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: u8,
    bits: u64,
}

impl Subset {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIMENSION });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::OutOfRange { bits, n });
        }
        Ok(Subset { n: n as u8, bits })
    }

    pub(crate) fn from_raw(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Subset { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &e in indices {
            if e >= n {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {e} outside ground set of size {n}"
                )));
            }
            bits |= 1 << e;
        }
        Self::new(n, bits)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.dim() && self.bits >> e & 1 == 1
    }

    pub fn indices(&self) -> Vec<usize> {
        positions(self.bits).collect()
    }

    /// Renders the subset as `{e1,e3}` using the ground set's labels.
    pub fn describe(&self, ground: &GroundSet) -> String {
        let names: Vec<String> = positions(self.bits).map(|e| ground.label(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Characteristic string: `1` at members, leftmost coordinate first.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("()");
        }
        for e in 0..self.dim() {
            f.write_str(if self.contains(e) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Subset::new(0, 0);
        }
        let mut bits = 0u64;
        for (e, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << e.min(63),
                '0' => {}
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("illegal character {c:?} in subset string"),
                    })
                }
            }
        }
        Subset::new(s.chars().count(), bits)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite set `L ⊆ {±1}^E`, members kept sorted by encoding.
#[derive(Clone, Debug)]
pub struct SignFamily {
    ground: GroundSet,
    members: Vec<u64>,
}

impl SignFamily {
    pub fn new<I>(ground: GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = SignVector>,
    {
        let mut bits = Vec::new();
        for s in members {
            ground.check_same(s.dim())?;
            bits.push(s.bits);
        }
        Ok(Self::from_bits(ground, bits))
    }

    /// Builds a family from raw encodings; each must fit the ground set.
    pub fn from_encodings<I>(ground: GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mask = ground.mask();
        let bits: Vec<u64> = members.into_iter().collect();
        if let Some(&bad) = bits.iter().find(|&&b| b & !mask != 0) {
            return Err(Error::OutOfRange { bits: bad, n: ground.len() });
        }
        Ok(Self::from_bits(ground, bits))
    }

    pub(crate) fn from_bits(ground: GroundSet, mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        SignFamily { ground, members }
    }

    pub(crate) fn from_sorted(ground: GroundSet, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SignFamily { ground, members }
    }

    pub fn empty(ground: GroundSet) -> Self {
        SignFamily { ground, members: Vec::new() }
    }

    /// All of `{±1}^E`.
    ///
    /// # Panics
    /// If the ground set exceeds [`MAX_ENUMERABLE`] coordinates.
    pub fn full(ground: GroundSet) -> Self {
        assert_enumerable(ground.len());
        let members = (0..=ground.mask()).collect();
        SignFamily { ground, members }
    }

    /// Family over the default ground set of size `n` parsed from sign
    /// strings; convenient in tests and examples.
    pub fn from_strs(n: usize, members: &[&str]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let vectors = members.iter().map(|s| s.parse::<SignVector>()).collect::<Result<Vec<_>>>()?;
        Self::new(ground, vectors)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn dim(&self) -> usize {
        self.ground.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member encodings in increasing order.
    pub fn encodings(&self) -> &[u64] {
        &self.members
    }

    pub fn contains(&self, s: &SignVector) -> bool {
        s.dim() == self.dim() && self.contains_bits(s.bits)
    }

    #[inline]
    pub(crate) fn contains_bits(&self, bits: u64) -> bool {
        self.members.binary_search(&bits).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = SignVector> + '_ {
        let n = self.dim();
        self.members.iter().map(move |&b| SignVector::from_raw(n, b))
    }

    pub fn with_ground(mut self, ground: GroundSet) -> Result<Self> {
        ground.check_same(self.dim())?;
        self.ground = ground;
        Ok(self)
    }

    /// The family as partial vectors (all of them full).
    pub fn to_partial(&self) -> PartialFamily {
        let n = self.dim();
        let mask = self.ground.mask();
        PartialFamily::from_sorted(
            self.ground.clone(),
            self.members.iter().map(|&b| PartialSignVector::from_raw(n, mask, b)).collect(),
        )
    }

    /// Parses the line-oriented text form.
    pub fn parse(text: &str) -> Result<Self> {
        let (ground, vectors) = parse_lines(text)?;
        let mut bits = Vec::with_capacity(vectors.len());
        for (line, t) in vectors {
            match t.to_full() {
                Some(s) => bits.push(s.bits),
                None => {
                    return Err(Error::Parse {
                        line,
                        message: format!("{t} has a zero coordinate; expected a full sign vector"),
                    })
                }
            }
        }
        Ok(Self::from_bits(ground, bits))
    }

    /// Text form with a dimension header, suitable for [`SignFamily::parse`].
    pub fn to_text(&self) -> String {
        let mut out = header(&self.ground);
        for s in self.iter() {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(|s| s.to_string()).collect()
    }
}

impl PartialEq for SignFamily {
    /// Labels are presentation only; equality compares dimension and members.
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.members == other.members
    }
}

impl Eq for SignFamily {}

impl fmt::Display for SignFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A finite set `J ⊆ {±1,0}^E`.
#[derive(Clone, Debug)]
pub struct PartialFamily {
    ground: GroundSet,
    members: Vec<PartialSignVector>,
}

impl PartialFamily {
    pub fn new<I>(ground: GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = PartialSignVector>,
    {
        let mut v = Vec::new();
        for t in members {
            ground.check_same(t.dim())?;
            v.push(t);
        }
        Ok(Self::from_vec(ground, v))
    }

    pub(crate) fn from_vec(ground: GroundSet, mut members: Vec<PartialSignVector>) -> Self {
        members.sort_unstable();
        members.dedup();
        PartialFamily { ground, members }
    }

    pub(crate) fn from_sorted(ground: GroundSet, members: Vec<PartialSignVector>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        PartialFamily { ground, members }
    }

    pub fn empty(ground: GroundSet) -> Self {
        PartialFamily { ground, members: Vec::new() }
    }

    pub fn from_strs(n: usize, members: &[&str]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let vectors =
            members.iter().map(|s| s.parse::<PartialSignVector>()).collect::<Result<Vec<_>>>()?;
        Self::new(ground, vectors)
    }

    /// All of `{±1,0}^E`.
    ///
    /// # Panics
    /// If `n` is too large to enumerate.
    pub fn everything(ground: GroundSet) -> Self {
        assert_enumerable(ground.len() * 2);
        let zero = PartialSignVector::from_raw(ground.len(), 0, 0);
        let members = up_set_of(&zero);
        PartialFamily::from_vec(ground, members)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn dim(&self) -> usize {
        self.ground.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[PartialSignVector] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &PartialSignVector> + '_ {
        self.members.iter()
    }

    pub fn contains(&self, t: &PartialSignVector) -> bool {
        self.members.binary_search(t).is_ok()
    }

    /// `J ∩ {±1}^E`.
    pub fn full_vectors(&self) -> SignFamily {
        SignFamily::from_bits(
            self.ground.clone(),
            self.members.iter().filter(|t| t.is_full()).map(|t| t.signs).collect(),
        )
    }

    /// True iff every upper neighbor of every member is a member.
    pub fn is_upward_closed(&self) -> bool {
        self.upward_closure_violation().is_none()
    }

    /// A member with an upper grid neighbor outside the family.
    pub(crate) fn upward_closure_violation(&self) -> Option<PartialSignVector> {
        self.members.iter().copied().find(|t| {
            positions(t.zeros()).any(|e| {
                let bit = 1u64 << e;
                let plus = PartialSignVector::from_raw(t.dim(), t.support | bit, t.signs | bit);
                let minus = PartialSignVector::from_raw(t.dim(), t.support | bit, t.signs);
                !self.contains(&plus) || !self.contains(&minus)
            })
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (ground, vectors) = parse_lines(text)?;
        Ok(Self::from_vec(ground, vectors.into_iter().map(|(_, t)| t).collect()))
    }

    pub fn to_text(&self) -> String {
        let mut out = header(&self.ground);
        for t in &self.members {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.members.iter().map(|t| t.to_string()).collect()
    }
}

impl PartialEq for PartialFamily {
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.members == other.members
    }
}

impl Eq for PartialFamily {}

impl fmt::Display for PartialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.members {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

fn header(ground: &GroundSet) -> String {
    let mut out = format!("# n: {}\n", ground.len());
    if ground.has_explicit_labels() {
        out.push_str(&format!("# labels: {}\n", ground.labels().join(" ")));
    }
    out
}

pub(crate) fn assert_enumerable(n: usize) {
    assert!(
        n <= MAX_ENUMERABLE,
        "{n} coordinates is too many to enumerate the whole cube (limit {MAX_ENUMERABLE})"
    );
}

/// Shared reader for the family text form. Returns the ground set and the
/// parsed vectors with their line numbers.
fn parse_lines(text: &str) -> Result<(GroundSet, Vec<(usize, PartialSignVector)>)> {
    let mut declared_n: Option<(usize, usize)> = None;
    let mut labels: Option<(usize, Vec<String>)> = None;
    let mut vectors: Vec<(usize, PartialSignVector)> = Vec::new();
    let mut dim: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() {
            continue;
        }
        if let Some(comment) = body.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = directive(comment, "n") {
                let n = value.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad dimension {value:?}"),
                })?;
                declared_n = Some((line, n));
            } else if let Some(value) = directive(comment, "labels") {
                labels = Some((line, value.split_whitespace().map(str::to_string).collect()));
            }
            continue;
        }
        let t = parse_vector(body, line)?;
        let expected = dim.or(declared_n.map(|(_, n)| n)).or(labels.as_ref().map(|(_, l)| l.len()));
        match expected {
            Some(n) if n != t.dim() => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} coordinates, found {}", t.dim()),
                })
            }
            _ => dim = Some(t.dim()),
        }
        vectors.push((line, t));
    }

    let n = dim.or(declared_n.map(|(_, n)| n)).or(labels.as_ref().map(|(_, l)| l.len())).unwrap_or(0);
    if let Some((line, d)) = declared_n {
        if d != n {
            return Err(Error::Parse { line, message: format!("declared n = {d} but vectors have {n}") });
        }
    }
    let ground = match labels {
        Some((line, l)) => {
            if l.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("{} labels given for {n} coordinates", l.len()),
                });
            }
            GroundSet::with_labels(l).map_err(|e| Error::Parse { line, message: e.to_string() })?
        }
        None => GroundSet::new(n).map_err(|e| Error::Parse { line: 1, message: e.to_string() })?,
    };
    Ok((ground, vectors))
}

fn directive<'a>(comment: &'a str, key: &str) -> Option<&'a str> {
    let (k, v) = comment.split_once(':')?;
    (k.trim().eq_ignore_ascii_case(key)).then(|| v.trim())
}

/// `2 · #Δ(s, s')`: the ℓ1 distance between two hypercube vertices.
pub fn l1_distance(s: &SignVector, other: &SignVector) -> Result<u32> {
    if s.n != other.n {
        return Err(Error::GroundSetMismatch { left: s.dim(), right: other.dim() });
    }
    Ok(2 * (s.bits ^ other.bits).count_ones())
}

#[inline]
pub(crate) fn l1_partial_raw(a: &PartialSignVector, b: &PartialSignVector) -> u32 {
    let one_sided = (a.support ^ b.support).count_ones();
    let opposite = (a.support & b.support & (a.signs ^ b.signs)).count_ones();
    one_sided + 2 * opposite
}

/// `Σ_e |t(e) − t'(e)|` over `{±1,0}^E`.
pub fn l1_distance_partial(t: &PartialSignVector, other: &PartialSignVector) -> Result<u32> {
    if t.n != other.n {
        return Err(Error::GroundSetMismatch { left: t.dim(), right: other.dim() });
    }
    Ok(l1_partial_raw(t, other))
}

#[inline]
pub(crate) fn precedes_raw(lower: &PartialSignVector, upper: &PartialSignVector) -> bool {
    lower.support & !upper.support == 0 && (lower.signs ^ upper.signs) & lower.support == 0
}

/// The sign order: `t ≺ t'` iff `t(e) ∈ {0, t'(e)}` for every coordinate.
pub fn precedes(t: &PartialSignVector, other: &PartialSignVector) -> Result<bool> {
    if t.n != other.n {
        return Err(Error::GroundSetMismatch { left: t.dim(), right: other.dim() });
    }
    Ok(precedes_raw(t, other))
}

/// Every `t'` with `t ≺ t'`: all ways of filling the zeros of `t` with
/// `−1`, `0` or `+1`.
pub(crate) fn up_set_of(t: &PartialSignVector) -> Vec<PartialSignVector> {
    let n = t.dim();
    let mut out = Vec::new();
    for extra in submasks(t.zeros()) {
        for plus in submasks(extra) {
            out.push(PartialSignVector::from_raw(n, t.support | extra, t.signs | plus));
        }
    }
    out
}

/// `↑J`: everything lying above some member of `J`.
pub fn upward_closure(family: &PartialFamily) -> PartialFamily {
    let mut seen: HashSet<PartialSignVector> = HashSet::new();
    for t in &family.members {
        if seen.contains(t) {
            continue;
        }
        seen.extend(up_set_of(t));
    }
    PartialFamily::from_vec(family.ground.clone(), seen.into_iter().collect())
}

/// `Min(J)`: the members with no other member below them.
pub fn minima(family: &PartialFamily) -> PartialFamily {
    let members: Vec<PartialSignVector> = family
        .members
        .iter()
        .filter(|t| !family.members.iter().any(|u| u != *t && precedes_raw(u, t)))
        .copied()
        .collect();
    PartialFamily::from_sorted(family.ground.clone(), members)
}

/// `L* = {±1}^E − L`.
///
/// # Panics
/// If the ground set is too large to enumerate.
pub fn complement(family: &SignFamily) -> SignFamily {
    assert_enumerable(family.dim());
    let mut out = Vec::with_capacity((1usize << family.dim()) - family.len());
    let mut present = family.members.iter().peekable();
    for s in 0..=family.ground.mask() {
        if present.peek() == Some(&&s) {
            present.next();
        } else {
            out.push(s);
        }
    }
    SignFamily::from_sorted(family.ground.clone(), out)
}
