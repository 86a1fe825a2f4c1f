//! Windmill graphs (one-point unions of cycles), labellings of them, and
//! the graceful / near-graceful verifier.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VaneClass {
    pub cycle: u32,
    pub count: u32,
}

/// Multiset of cycle lengths sharing one central vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VaneClass>", into = "Vec<VaneClass>")]
pub struct WindmillSpec {
    classes: Vec<VaneClass>,
}

impl WindmillSpec {
    /// Builds a spec from `(cycle, count)` pairs. Zero counts are dropped;
    /// classes are kept sorted by cycle length.
    pub fn new(classes: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut out: Vec<VaneClass> = Vec::new();
        for (cycle, count) in classes {
            if cycle < 3 {
                return Err(Error::MalformedLabelling(format!("cycle length {cycle} < 3")));
            }
            if out.iter().any(|c| c.cycle == cycle) {
                return Err(Error::MalformedLabelling(format!("cycle length {cycle} listed twice")));
            }
            if count > 0 {
                out.push(VaneClass { cycle, count });
            }
        }
        out.sort();
        let spec = Self { classes: out };
        if spec.edge_count() < 3 {
            return Err(Error::MalformedLabelling("windmill needs at least one vane".into()));
        }
        Ok(spec)
    }

    pub fn classes(&self) -> &[VaneClass] {
        &self.classes
    }

    pub fn count_of(&self, cycle: u32) -> u32 {
        self.classes.iter().find(|c| c.cycle == cycle).map_or(0, |c| c.count)
    }

    /// Total number of edges `m`.
    pub fn edge_count(&self) -> u32 {
        self.classes.iter().map(|c| c.cycle * c.count).sum()
    }

    pub fn vane_count(&self) -> u32 {
        self.classes.iter().map(|c| c.count).sum()
    }
}

impl TryFrom<Vec<VaneClass>> for WindmillSpec {
    type Error = Error;

    fn try_from(v: Vec<VaneClass>) -> Result<Self> {
        Self::new(v.into_iter().map(|c| (c.cycle, c.count)))
    }
}

impl From<WindmillSpec> for Vec<VaneClass> {
    fn from(s: WindmillSpec) -> Self {
        s.classes
    }
}

impl fmt::Display for WindmillSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            write!(f, "C{}^{}", c.cycle, c.count)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Graceful,
    NearGraceful,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Graceful => "graceful",
            Self::NearGraceful => "near-graceful",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graceful" => Ok(Self::Graceful),
            "near-graceful" | "near" => Ok(Self::NearGraceful),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// Graceful iff `m ≡ 0,3 (mod 4)`.
pub fn expected_mode(spec: &WindmillSpec) -> Mode {
    match spec.edge_count() % 4 {
        0 | 3 => Mode::Graceful,
        _ => Mode::NearGraceful,
    }
}

/// Vertex labels of one cycle, starting with the central 0. The edge from
/// the last vertex back to the centre is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vane(pub Vec<u32>);

impl Vane {
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn cycle(&self) -> u32 {
        self.0.len() as u32
    }

    /// Cyclic differences, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| self.0[i].abs_diff(self.0[(i + 1) % n]))
    }

    /// The same cycle traversed the other way round.
    pub fn reversed(&self) -> Vane {
        let mut v = self.0.clone();
        v[1..].reverse();
        Vane(v)
    }

    /// Orientation with the second entry below the last one.
    pub fn canonical(&self) -> Vane {
        if self.0.len() > 2 && self.0[1] > self.0[self.0.len() - 1] {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// Equality as cycles through the centre (either direction).
    pub fn same_cycle(&self, other: &Vane) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<const N: usize> From<[u32; N]> for Vane {
    fn from(v: [u32; N]) -> Self {
        Vane(v.to_vec())
    }
}

impl fmt::Display for Vane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Where a stored labelling came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub origin: String,
    pub spec: String,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabelling")]
pub struct Labelling {
    spec: WindmillSpec,
    mode: Mode,
    vanes: Vec<Vane>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

#[derive(Deserialize)]
struct RawLabelling {
    spec: WindmillSpec,
    mode: Mode,
    vanes: Vec<Vane>,
    #[serde(default)]
    provenance: Option<Provenance>,
}

impl TryFrom<RawLabelling> for Labelling {
    type Error = Error;

    fn try_from(r: RawLabelling) -> Result<Self> {
        let mut l = Labelling::new(r.spec, r.mode, r.vanes)?;
        l.provenance = r.provenance;
        Ok(l)
    }
}

impl Labelling {
    /// Checks the structure: every vane starts at 0 and the vane lengths
    /// match the spec.
    pub fn new(spec: WindmillSpec, mode: Mode, vanes: Vec<Vane>) -> Result<Self> {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for v in &vanes {
            if v.0.first() != Some(&0) {
                return Err(Error::MalformedLabelling(format!("vane {v} does not start at 0")));
            }
            *counts.entry(v.cycle()).or_insert(0) += 1;
        }
        let expected: BTreeMap<u32, u32> = spec.classes().iter().map(|c| (c.cycle, c.count)).collect();
        if counts != expected {
            return Err(Error::MalformedLabelling(format!(
                "vane lengths {counts:?} do not match spec {spec}"
            )));
        }
        Ok(Self { spec, mode, vanes, provenance: None })
    }

    /// Infers the spec from the vane lengths.
    pub fn from_vanes(mode: Mode, vanes: Vec<Vane>) -> Result<Self> {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for v in &vanes {
            *counts.entry(v.cycle()).or_insert(0) += 1;
        }
        Self::new(WindmillSpec::new(counts)?, mode, vanes)
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn spec(&self) -> &WindmillSpec {
        &self.spec
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vanes(&self) -> &[Vane] {
        &self.vanes
    }

    pub fn into_vanes(self) -> Vec<Vane> {
        self.vanes
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn edge_count(&self) -> u32 {
        self.spec.edge_count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labelling serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| {
            let msg = e.to_string();
            Error::MalformedLabelling(msg.strip_prefix("malformed labelling: ").unwrap_or(&msg).to_string())
        })
    }

    /// Graphviz rendering; the centre appears once as `v0`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph windmill {{");
        let _ = writeln!(out, "  // {} {}, m={}", self.spec, self.mode, self.edge_count());
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.vanes {
            for &x in v.labels() {
                if seen.insert(x) {
                    let _ = writeln!(out, "  v{x} [label={x}];");
                }
            }
        }
        for v in &self.vanes {
            let l = v.labels();
            for i in 0..l.len() {
                let (a, b) = (l[i], l[(i + 1) % l.len()]);
                let _ = writeln!(out, "  v{a} -- v{b} [label={}];", a.abs_diff(b));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} m={} {}\n", self.spec, self.edge_count(), self.mode);
        for v in &self.vanes {
            let _ = writeln!(out, "{v}");
        }
        out
    }
}

/// Absolute differences along every vane, closing edges included.
pub fn edge_multiset(l: &Labelling) -> Vec<u32> {
    let mut e: Vec<u32> = l.vanes.iter().flat_map(Vane::edges).collect();
    e.sort_unstable();
    e
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub m: u32,
    pub mode_checked: Mode,
    /// Non-central labels that occur more than once (0 counts as used by the centre).
    pub duplicate_vertices: Vec<u32>,
    /// Labels outside the allowed vertex range for the mode.
    pub out_of_range_vertices: Vec<u32>,
    pub missing_edges: Vec<u32>,
    pub extra_edges: Vec<u32>,
    /// Set when a near-graceful labelling was accepted with edge set `[1,m]`
    /// under the permissive check.
    pub permissive: bool,
}

/// Multiset difference `a - b` of two sorted lists.
fn sorted_minus(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j < b.len() && a[i] == b[j] {
            i += 1;
            j += 1;
        } else if j < b.len() && b[j] < a[i] {
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
        }
    }
    out
}

fn check(l: &Labelling, mode: Mode, edge_target: &[u32], vertex_ok: impl Fn(u32) -> bool) -> VerificationReport {
    let m = l.edge_count();
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    seen.insert(0, 1);
    for v in &l.vanes {
        for &x in &v.labels()[1..] {
            *seen.entry(x).or_insert(0) += 1;
        }
    }
    let duplicate_vertices: Vec<u32> = seen.iter().filter(|(_, &c)| c > 1).map(|(&x, _)| x).collect();
    let out_of_range_vertices: Vec<u32> = seen.keys().copied().filter(|&x| x != 0 && !vertex_ok(x)).collect();
    let edges = edge_multiset(l);
    let missing_edges = sorted_minus(edge_target, &edges);
    let extra_edges = sorted_minus(&edges, edge_target);
    VerificationReport {
        ok: duplicate_vertices.is_empty()
            && out_of_range_vertices.is_empty()
            && missing_edges.is_empty()
            && extra_edges.is_empty(),
        m,
        mode_checked: mode,
        duplicate_vertices,
        out_of_range_vertices,
        missing_edges,
        extra_edges,
        permissive: false,
    }
}

/// Edge labels a labelling of `m` edges must realise in the given mode
/// (near-graceful omits `m` and uses `m+1`).
pub fn target_edges(m: u32, mode: Mode) -> Vec<u32> {
    match mode {
        Mode::Graceful => (1..=m).collect(),
        Mode::NearGraceful => (1..m).chain([m + 1]).collect(),
    }
}

/// Verifies in the labelling's own mode with the constructive conventions.
pub fn verify(l: &Labelling) -> VerificationReport {
    verify_as(l, l.mode)
}

pub fn verify_as(l: &Labelling, mode: Mode) -> VerificationReport {
    let m = l.edge_count();
    match mode {
        Mode::Graceful => check(l, mode, &target_edges(m, mode), |x| x <= m),
        Mode::NearGraceful => check(l, mode, &target_edges(m, mode), |x| x < m || x == m + 1),
    }
}

/// Near-graceful in the general sense: vertex labels up to `m+1` and edge
/// labels `[1,m-1]` plus one of `m`, `m+1`. Graceful mode is unchanged.
pub fn verify_permissive(l: &Labelling) -> VerificationReport {
    let m = l.edge_count();
    if l.mode == Mode::Graceful {
        return verify(l);
    }
    let strict = check(l, Mode::NearGraceful, &target_edges(m, Mode::NearGraceful), |x| x <= m + 1);
    if strict.ok {
        return strict;
    }
    let mut alt = check(l, Mode::NearGraceful, &target_edges(m, Mode::Graceful), |x| x <= m + 1);
    alt.permissive = true;
    if alt.ok || alt.missing_edges.len() + alt.extra_edges.len() < strict.missing_edges.len() + strict.extra_edges.len() {
        alt
    } else {
        strict
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(mode: Mode, vanes: &[&[u32]]) -> Labelling {
        Labelling::from_vanes(mode, vanes.iter().map(|v| Vane(v.to_vec())).collect()).unwrap()
    }

    #[test]
    fn mixed_example() {
        let l = lab(
            Mode::Graceful,
            &[
                &[0, 18, 20],
                &[0, 23, 24],
                &[0, 17, 21],
                &[0, 22, 19],
                &[0, 15, 1, 7],
                &[0, 11, 2, 12],
                &[0, 16, 3, 8],
            ],
        );
        let r = verify(&l);
        assert!(r.ok, "{r:?}");
        assert_eq!(r.m, 24);
        assert_eq!(expected_mode(l.spec()), Mode::Graceful);
    }

    #[test]
    fn small_cases() {
        let l = lab(Mode::Graceful, &[&[0, 1, 3]]);
        assert!(verify(&l).ok);
        assert_eq!(edge_multiset(&l), vec![1, 2, 3]);
        let l = lab(Mode::NearGraceful, &[&[0, 11, 2, 9, 1], &[0, 6, 3, 7, 5]]);
        assert!(verify(&l).ok);
        assert_eq!(edge_multiset(&l), (1..=9).chain([11]).collect::<Vec<_>>());
        let l = lab(Mode::Graceful, &[&[0, 5, 7], &[0, 8, 4, 3, 6]]);
        let r = verify(&l);
        assert!(r.ok && r.m == 8);
    }

    #[test]
    fn edge_examples() {
        assert_eq!(Vane::from([0, 4, 1, 2]).edges().collect::<Vec<_>>(), vec![4, 3, 1, 2]);
        assert_eq!(Vane::from([0, 6, 1, 4, 3, 7]).edges().collect::<Vec<_>>(), vec![6, 5, 3, 1, 4, 7]);
    }

    #[test]
    fn expected_modes() {
        assert_eq!(expected_mode(&WindmillSpec::new([(3, 2)]).unwrap()), Mode::NearGraceful);
        assert_eq!(expected_mode(&WindmillSpec::new([(5, 3)]).unwrap()), Mode::Graceful);
    }

    #[test]
    fn violations_are_listed() {
        let l = lab(Mode::Graceful, &[&[0, 1, 3], &[0, 3, 5]]);
        let r = verify(&l);
        assert!(!r.ok);
        assert_eq!(r.duplicate_vertices, vec![3]);
        assert_eq!(r.missing_edges, vec![4, 6]);
        assert_eq!(r.extra_edges, vec![2, 3]);
    }

    #[test]
    fn permissive_near() {
        let l = lab(Mode::NearGraceful, &[&[0, 1, 4], &[0, 2, 7]]);
        assert_eq!(edge_multiset(&l), vec![1, 2, 3, 4, 5, 7]);
        assert!(verify(&l).ok);
        assert!(!verify_permissive(&l).permissive);
        // Edge set [1,4] using the label m+1 = 5.
        let l = lab(Mode::NearGraceful, &[&[0, 4, 5, 2]]);
        assert!(!verify(&l).ok);
        let r = verify_permissive(&l);
        assert!(r.ok && r.permissive);
    }

    #[test]
    fn structure_is_checked() {
        let spec = WindmillSpec::new([(3, 1)]).unwrap();
        assert!(Labelling::new(spec.clone(), Mode::Graceful, vec![Vane::from([1, 0, 3])]).is_err());
        assert!(Labelling::new(spec, Mode::Graceful, vec![Vane::from([0, 1, 2, 3])]).is_err());
        assert!(WindmillSpec::new([(2, 1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = lab(Mode::Graceful, &[&[0, 5, 7], &[0, 8, 4, 3, 6]]);
        let s = l.to_json();
        assert_eq!(
            s,
            r#"{"spec":[{"cycle":3,"count":1},{"cycle":5,"count":1}],"mode":"graceful","vanes":[[0,5,7],[0,8,4,3,6]]}"#
        );
        assert_eq!(Labelling::from_json(&s).unwrap(), l);
        assert!(Labelling::from_json(r#"{"spec":[{"cycle":3,"count":2}],"mode":"graceful","vanes":[[0,1,3]]}"#).is_err());
    }

    #[test]
    fn dot_has_single_centre() {
        let l = lab(Mode::Graceful, &[&[0, 5, 7], &[0, 8, 4, 3, 6]]);
        let dot = l.to_dot();
        assert_eq!(dot.matches("v0 [label=0]").count(), 1);
        assert!(dot.contains("v8 -- v4 [label=4];"));
    }
}
