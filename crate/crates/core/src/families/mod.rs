//! Whole-windmill labellings: Dutch windmills, pentagon windmills and the
//! variable windmills `C3^t C4^s`, `C3^t C5^p`, `C3^t C6^h`.

mod small_tables;
mod small_tables_data;
mod c3c4;
mod fixtures;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::assemble::{fivetuples_c5, fivetuples_from, hexagon_merge, hexagon_pairs, triples_from_pairs};
use crate::assemble::{c5_forbidden_positions, c5_sequences, TripleForm};
use crate::error::{Error, Result};
use crate::sequences::{gen_langford, gen_skolem_or_hooked, pairs_of};
use crate::windmill::{expected_mode, verify, Labelling, Mode, Vane, WindmillSpec};

pub use small_tables::{small_table, small_table_repaired, table_bound, DEFECTIVE_ROWS, SHARED_T1};
pub use c3c4::{
    coverage_audit, extend_c3c4, extension_bounds, extension_case, has_required_triangles, label_c3c4,
    replay_trace, required_triangles, AuditCell,
};
pub use fixtures::{fixture, fixture_cells};

/// The rule that produced a labelling (or part of one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Triangles from a (hooked) Skolem sequence.
    Dutch,
    /// Pentagons from two Skolem-type sequences.
    Pentagons,
    /// Squares from a two-fold Skolem sequence of order `s ≤ t`.
    TwoFoldSkolem,
    /// Squares from the odd/even two-fold tables, `t < s ≤ 2t`.
    ParityTables,
    /// Squares from a doubled Langford sequence, `s = 2t+1`.
    DoubleLangford,
    /// Doubled Langford followed by a two-fold Skolem sequence.
    DoubleLangfordPlusTwoFold,
    /// `P'_x`, doubled Langford, `(1,1)` and `C^y`.
    TrimmedPowerComposite,
    /// `P_x`, doubled Langford and `C^y`.
    PowerComposite,
    /// Small-case table (possibly repaired).
    SmallTable,
    /// Extension of a smaller labelling by a two-fold Langford sequence.
    TwoFoldLangfordExtension,
    /// Embedded labelling found by exhaustive search.
    Fixture,
    /// Triangles from a Langford sequence plus shifted pentagons.
    TrianglesPentagons,
    /// Triangle pairs merged into hexagons.
    HexagonMerge,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Self::Dutch => "dutch",
            Self::Pentagons => "pentagons",
            Self::TwoFoldSkolem => "two-fold-skolem",
            Self::ParityTables => "parity-tables",
            Self::DoubleLangford => "double-langford",
            Self::DoubleLangfordPlusTwoFold => "double-langford-plus-two-fold",
            Self::TrimmedPowerComposite => "trimmed-power-composite",
            Self::PowerComposite => "power-composite",
            Self::SmallTable => "small-table",
            Self::TwoFoldLangfordExtension => "two-fold-langford-extension",
            Self::Fixture => "fixture",
            Self::TrianglesPentagons => "triangles-pentagons",
            Self::HexagonMerge => "hexagon-merge",
        }
    }

    pub const ALL: [Rule; 13] = [
        Self::Dutch,
        Self::Pentagons,
        Self::TwoFoldSkolem,
        Self::ParityTables,
        Self::DoubleLangford,
        Self::DoubleLangfordPlusTwoFold,
        Self::TrimmedPowerComposite,
        Self::PowerComposite,
        Self::SmallTable,
        Self::TwoFoldLangfordExtension,
        Self::Fixture,
        Self::TrianglesPentagons,
        Self::HexagonMerge,
    ];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// How a labelling was built: the rule, its parameters and, for recursive
/// rules, the traces of the pieces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub rule: Rule,
    pub params: BTreeMap<&'static str, i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<ConstructionTrace>,
}

impl ConstructionTrace {
    pub fn new(rule: Rule) -> Self {
        Self { rule, params: BTreeMap::new(), children: Vec::new() }
    }

    pub fn with(mut self, key: &'static str, value: impl Into<i64>) -> Self {
        self.params.insert(key, value.into());
        self
    }

    pub fn child(mut self, c: ConstructionTrace) -> Self {
        self.children.push(c);
        self
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    /// Every rule used, depth first.
    pub fn rules(&self) -> Vec<Rule> {
        let mut out = vec![self.rule];
        for c in &self.children {
            out.extend(c.rules());
        }
        out
    }
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", ps.join(","))?;
        }
        for c in &self.children {
            write!(f, " <- {c}")?;
        }
        Ok(())
    }
}

/// Wraps vanes as a labelling of `spec` in its expected mode and insists
/// that it verifies.
pub(crate) fn finish(spec: WindmillSpec, vanes: Vec<Vane>, what: &str) -> Result<Labelling> {
    let mode = expected_mode(&spec);
    let l = Labelling::new(spec, mode, vanes)?;
    let r = verify(&l);
    if r.ok {
        Ok(l)
    } else {
        Err(Error::Unlabellable(format!("{what} does not verify: {r:?}")))
    }
}

/// Triangles `(0, a_i+c, b_i+c)` from a Skolem sequence of order `t`
/// (hooked when `t ≡ 2,3 mod 4`).
pub(crate) fn dutch_triangles(t: u32, c: u32) -> Result<Vec<Vane>> {
    triples_from_pairs(&pairs_of(&gen_skolem_or_hooked(t)?)?, c, TripleForm::Shifted)
}

/// `C3^t`, graceful when `t ≡ 0,1 (mod 4)` and near-graceful otherwise.
pub fn label_c3(t: u32) -> Result<Labelling> {
    if t == 0 {
        return Err(Error::OutOfRange { what: "t", value: 0 });
    }
    finish(WindmillSpec::new([(3, t)])?, dutch_triangles(t, t)?, "C3^t")
}

/// `C5^p`, graceful when `p ≡ 0,3 (mod 4)` and near-graceful otherwise.
pub fn label_c5(p: u32) -> Result<Labelling> {
    if p == 0 {
        return Err(Error::OutOfRange { what: "p", value: 0 });
    }
    finish(WindmillSpec::new([(5, p)])?, fivetuples_c5(p)?, "C5^p")
}

/// Residue pairs `(p mod 4, t mod 4)` covered for `C3^t C5^p`, with the
/// resulting mode.
pub fn c3c5_supported(t: u32, p: u32) -> Result<Mode> {
    if (t, p) == (1, 1) {
        return Ok(Mode::Graceful);
    }
    if p == 0 || t == 0 {
        return Err(Error::UnsupportedCombination("t and p must be positive".into()));
    }
    if t < 2 * p + 1 {
        return Err(Error::UnsupportedCombination(format!("t = {t} is below 2p+1 = {}", 2 * p + 1)));
    }
    let mode = match (p % 4, t % 4) {
        (0, 0 | 1) | (3, 0 | 3) => Mode::Graceful,
        (1, 0 | 3) | (2, 0 | 1) => Mode::NearGraceful,
        (pr, tr) => {
            return Err(Error::UnsupportedCombination(format!(
                "p ≡ {pr} and t ≡ {tr} (mod 4) is not a covered residue pair"
            )))
        }
    };
    Ok(mode)
}

/// `C3^t C5^p` for `t ≥ 2p+1` in the covered residue classes, plus `(1,1)`.
///
/// Triangles come from a Langford sequence with defect `p+1` and order `t`
/// shifted by `p+t`; the pentagons of `C5^p` are shifted up by `3t`.
pub fn label_c3c5(t: u32, p: u32) -> Result<Labelling> {
    let mode = c3c5_supported(t, p)?;
    let spec = WindmillSpec::new([(3, t), (5, p)])?;
    if (t, p) == (1, 1) {
        return finish(spec, vec![Vane::from([0, 5, 7]), Vane::from([0, 8, 4, 3, 6])], "C3^1C5^1");
    }
    let lang = gen_langford(p + 1, t)?;
    let mut vanes = triples_from_pairs(&pairs_of(&lang)?, p + t, TripleForm::Shifted)?;
    let (s1, s2) = c5_sequences(p)?;
    vanes.extend(fivetuples_from(&s1, &s2, p, 3 * t, &c5_forbidden_positions(p))?);
    let l = finish(spec, vanes, "C3^tC5^p")?;
    debug_assert_eq!(l.mode(), mode);
    Ok(l)
}

/// Disjoint triangle pairs with distinct sums that are not labels, for
/// orders below the pairing table.
fn small_hexagon_pairs(vanes: &[Vane], n: u32, h: usize) -> Option<Vec<(u32, u32)>> {
    let used: Vec<u32> = vanes.iter().flat_map(|v| v.labels().iter().copied()).collect();
    let cands: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !used.contains(&(i + j)))
        .collect();
    fn go(c: &[(u32, u32)], h: usize, acc: &mut Vec<(u32, u32)>) -> bool {
        if acc.len() == h {
            return true;
        }
        for (k, &(i, j)) in c.iter().enumerate() {
            let clash = acc.iter().any(|&(a, b)| a == i || a == j || b == i || b == j || a + b == i + j);
            if clash {
                continue;
            }
            acc.push((i, j));
            if go(&c[k + 1..], h, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    go(&cands, h, &mut acc).then_some(acc)
}

/// `C3^t C6^h` for `h ≤ 2t+1`: label `C3^{t+2h}` with triangles
/// `(0, i, b_i+n)` and merge `h` pairs of them into hexagons.
pub fn label_c3c6(t: u32, h: u32) -> Result<Labelling> {
    if t == 0 {
        return Err(Error::OutOfRange { what: "t", value: 0 });
    }
    if h > 2 * t + 1 {
        return Err(Error::TooManyHexagons { h, max: 2 * t + 1 });
    }
    if h == 0 {
        return label_c3(t);
    }
    let n = t + 2 * h;
    let triangles = triples_from_pairs(&pairs_of(&gen_skolem_or_hooked(n)?)?, n, TripleForm::SymbolFirst)?;
    let table = if n >= 5 { hexagon_pairs(n)? } else { Vec::new() };
    let merged = merge_all(&triangles, &table[..table.len().min(h as usize)], n, h as usize).or_else(|_| {
        let pairs = small_hexagon_pairs(&triangles, n, h as usize)
            .ok_or_else(|| Error::Unlabellable(format!("no {h} mergeable triangle pairs for n = {n}")))?;
        merge_all(&triangles, &pairs, n, h as usize)
    })?;
    finish(WindmillSpec::new([(3, t), (6, h)])?, merged, "C3^tC6^h")
}

fn merge_all(triangles: &[Vane], pairs: &[(u32, u32)], n: u32, h: usize) -> Result<Vec<Vane>> {
    if pairs.len() < h {
        return Err(Error::Unlabellable(format!("only {} pairs available", pairs.len())));
    }
    let mut rest = triangles.to_vec();
    let mut hexes = Vec::new();
    for &pair in pairs {
        let all: Vec<Vane> = rest.iter().chain(&hexes).cloned().collect();
        if all.iter().any(|v| v.labels().contains(&(pair.0 + pair.1))) {
            return Err(Error::LabelClash { label: pair.0 + pair.1 });
        }
        let (r, hex) = hexagon_merge(&rest, pair, n)?;
        rest = r;
        hexes.push(hex);
    }
    rest.extend(hexes);
    Ok(rest)
}

/// Labels any windmill the library has a construction for: `C3^t`,
/// `C5^p`, `C3^t C4^s`, `C3^t C5^p` and `C3^t C6^h`.
pub fn label_spec(spec: &WindmillSpec) -> Result<(Labelling, ConstructionTrace)> {
    let count = |n| spec.count_of(n);
    let lengths: Vec<u32> = spec.classes().iter().map(|c| c.cycle).collect();
    match lengths.as_slice() {
        [3] => label_c3c4(count(3), 0),
        [3, 4] => label_c3c4(count(3), count(4)),
        [5] => Ok((label_c5(count(5))?, ConstructionTrace::new(Rule::Pentagons).with("p", count(5)))),
        [3, 5] => Ok((
            label_c3c5(count(3), count(5))?,
            ConstructionTrace::new(Rule::TrianglesPentagons).with("t", count(3)).with("p", count(5)),
        )),
        [3, 6] => Ok((
            label_c3c6(count(3), count(6))?,
            ConstructionTrace::new(Rule::HexagonMerge)
                .with("t", count(3))
                .with("h", count(6))
                .with("n", count(3) + 2 * count(6)),
        )),
        _ => Err(Error::UnsupportedCombination(format!("no construction for {spec}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::windmill::edge_multiset;

    #[test]
    fn dutch() {
        let l = label_c3(1).unwrap();
        assert_eq!(l.vanes(), &[Vane::from([0, 2, 3])]);
        assert_eq!(label_c3(3).unwrap().mode(), Mode::NearGraceful);
        let l = label_c3(8).unwrap();
        assert_eq!((l.mode(), l.edge_count()), (Mode::Graceful, 24));
    }

    #[test]
    fn pentagons() {
        assert_eq!(label_c5(3).unwrap().mode(), Mode::Graceful);
        let l = label_c5(1).unwrap();
        assert_eq!(l.mode(), Mode::NearGraceful);
        assert_eq!(edge_multiset(&l), vec![1, 2, 3, 4, 6]);
        assert_eq!(label_c5(4).unwrap().mode(), Mode::Graceful);
    }

    #[test]
    fn triangles_and_pentagons_worked_example() {
        let l = label_c3c5(9, 4).unwrap();
        assert_eq!(l.mode(), Mode::Graceful);
        let tri: Vec<Vane> = [
            [0, 18, 23],
            [0, 22, 28],
            [0, 17, 24],
            [0, 21, 29],
            [0, 16, 25],
            [0, 20, 30],
            [0, 15, 26],
            [0, 19, 31],
            [0, 14, 27],
        ]
        .into_iter()
        .map(Vane::from)
        .collect();
        let pent: Vec<Vane> = [[0, 43, 7, 8, 40], [0, 38, 4, 2, 37], [0, 44, 3, 6, 39], [0, 46, 1, 5, 47]]
            .into_iter()
            .map(Vane::from)
            .collect();
        let mut got: Vec<Vane> = l.vanes().iter().map(Vane::canonical).collect();
        let mut want: Vec<Vane> = tri.iter().chain(&pent).map(Vane::canonical).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(label_c3c5(1, 1).unwrap().vanes(), &[Vane::from([0, 5, 7]), Vane::from([0, 8, 4, 3, 6])]);
        assert!(matches!(label_c3c5(2, 4), Err(Error::UnsupportedCombination(_))));
        assert!(matches!(label_c3c5(10, 4), Err(Error::UnsupportedCombination(_))));
    }

    #[test]
    fn hexagons() {
        let l = label_c3c6(1, 1).unwrap();
        assert_eq!(l.mode(), Mode::NearGraceful);
        assert!(l.vanes().contains(&Vane::from([0, 6, 1, 4, 3, 7])));
        assert!(l.vanes().contains(&Vane::from([0, 2, 10])));
        let l = label_c3c6(2, 3).unwrap();
        assert_eq!(l.mode(), Mode::Graceful);
        assert_eq!(l.spec().count_of(6), 3);
        assert!(matches!(label_c3c6(1, 4), Err(Error::TooManyHexagons { h: 4, max: 3 })));
    }

    #[test]
    fn trace_display() {
        let t = ConstructionTrace::new(Rule::TwoFoldLangfordExtension)
            .with("k", 20)
            .child(ConstructionTrace::new(Rule::ParityTables));
        assert_eq!(t.to_string(), "two-fold-langford-extension(k=20) <- parity-tables");
        assert_eq!(t.rules(), vec![Rule::TwoFoldLangfordExtension, Rule::ParityTables]);
    }
}
