//! Skolem-type sequences: data model, validation, pairing and the table
//! generators used by the labelling constructions.
//!
//! Positions are 1-based throughout. A hook (empty cell) is stored as the
//! value 0 at its position so that length arithmetic stays exact.

mod complete;
mod tables;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use complete::{
    complete, gen_hooked_skolem_with_tail, gen_langford, Completion, HookedTail, COMPLETION_BUDGET,
    MAX_COMPLETION_LENGTH,
};
pub use tables::{
    fixed_small_twofold, gen_hooked_skolem, gen_langford_doubledefect, gen_near_skolem_topdefect,
    gen_power4, gen_skolem, gen_skolem_or_hooked, gen_twofold_langford, gen_twofold_skolem,
};

/// A positional sequence over a symbol set, possibly with hooks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SkolemTypeSequence {
    entries: Vec<u32>,
}

impl SkolemTypeSequence {
    pub fn new(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at a 1-based position.
    pub fn at(&self, pos: u32) -> Option<u32> {
        pos.checked_sub(1).and_then(|i| self.entries.get(i as usize).copied())
    }

    /// Number of occurrences of every nonzero symbol.
    pub fn symbol_counts(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for &x in self.entries.iter().filter(|&&x| x != 0) {
            *counts.entry(x).or_insert(0) += 1;
        }
        counts
    }

    pub fn symbol_set(&self) -> BTreeSet<u32> {
        self.entries.iter().copied().filter(|&x| x != 0).collect()
    }

    /// Number of distinct symbols.
    pub fn order(&self) -> usize {
        self.symbol_set().len()
    }

    /// The common fold if every symbol occurs the same even number of times.
    pub fn fold(&self) -> Option<usize> {
        let counts = self.symbol_counts();
        let first = *counts.values().next()?;
        (first % 2 == 0 && counts.values().all(|&c| c == first)).then_some(first / 2)
    }

    pub fn hook_positions(&self) -> Vec<u32> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 0)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    pub fn is_hooked(&self) -> bool {
        self.entries.contains(&0)
    }

    /// 1-based positions of each symbol, in increasing order.
    fn positions(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut pos: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (i, &x) in self.entries.iter().enumerate() {
            if x != 0 {
                pos.entry(x).or_default().push(i as u32 + 1);
            }
        }
        pos
    }
}

impl fmt::Display for SkolemTypeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for SkolemTypeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl From<Vec<u32>> for SkolemTypeSequence {
    fn from(entries: Vec<u32>) -> Self {
        Self::new(entries)
    }
}

impl<const N: usize> From<[u32; N]> for SkolemTypeSequence {
    fn from(entries: [u32; N]) -> Self {
        Self::new(entries.to_vec())
    }
}

/// Which family a sequence is checked against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Skolem,
    HookedSkolem,
    /// Symbol set `[1,n]` without `defect`.
    NearSkolem { defect: u32 },
    HookedNearSkolem { defect: u32 },
    /// Symbol set `[defect, defect+l-1]`.
    Langford { defect: u32 },
    HookedLangford { defect: u32 },
    TwoFoldSkolem,
    TwoFoldLangford { defect: u32 },
    SkolemType { symbols: BTreeSet<u32> },
    TwoFoldSkolemType { symbols: BTreeSet<u32> },
    MultiFoldSkolem { fold: u32 },
    HookedMultiFoldSkolem { fold: u32 },
}

impl SequenceKind {
    pub fn fold(&self) -> u32 {
        match self {
            Self::TwoFoldSkolem | Self::TwoFoldLangford { .. } | Self::TwoFoldSkolemType { .. } => 2,
            Self::MultiFoldSkolem { fold } | Self::HookedMultiFoldSkolem { fold } => *fold,
            _ => 1,
        }
    }

    pub fn is_hooked(&self) -> bool {
        matches!(
            self,
            Self::HookedSkolem
                | Self::HookedNearSkolem { .. }
                | Self::HookedLangford { .. }
                | Self::HookedMultiFoldSkolem { .. }
        )
    }

    /// The symbol set a sequence of this kind and order must use.
    pub fn symbols(&self, order: u32) -> BTreeSet<u32> {
        match self {
            Self::Skolem
            | Self::HookedSkolem
            | Self::TwoFoldSkolem
            | Self::MultiFoldSkolem { .. }
            | Self::HookedMultiFoldSkolem { .. } => (1..=order).collect(),
            Self::NearSkolem { defect } | Self::HookedNearSkolem { defect } => {
                (1..=order).filter(|h| h != defect).collect()
            }
            Self::Langford { defect }
            | Self::HookedLangford { defect }
            | Self::TwoFoldLangford { defect } => (*defect..defect + order).collect(),
            Self::SkolemType { symbols } | Self::TwoFoldSkolemType { symbols } => symbols.clone(),
        }
    }

    /// Parameter sanity: positive defects, near-Skolem defect within the order.
    pub fn check_params(&self, order: u32) -> Result<()> {
        match self {
            Self::NearSkolem { defect } | Self::HookedNearSkolem { defect } => {
                if *defect == 0 || *defect > order {
                    return Err(Error::OutOfRange { what: "near-Skolem defect", value: *defect as i64 });
                }
            }
            Self::Langford { defect }
            | Self::HookedLangford { defect }
            | Self::TwoFoldLangford { defect } => {
                if *defect == 0 {
                    return Err(Error::OutOfRange { what: "Langford defect", value: 0 });
                }
            }
            Self::MultiFoldSkolem { fold } | Self::HookedMultiFoldSkolem { fold } => {
                if *fold == 0 {
                    return Err(Error::OutOfRange { what: "fold", value: 0 });
                }
            }
            Self::SkolemType { symbols } | Self::TwoFoldSkolemType { symbols } => {
                if symbols.contains(&0) {
                    return Err(Error::OutOfRange { what: "symbol", value: 0 });
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Skolem => write!(f, "skolem"),
            Self::HookedSkolem => write!(f, "hooked-skolem"),
            Self::NearSkolem { defect } => write!(f, "near-skolem(m={defect})"),
            Self::HookedNearSkolem { defect } => write!(f, "hooked-near-skolem(m={defect})"),
            Self::Langford { defect } => write!(f, "langford(d={defect})"),
            Self::HookedLangford { defect } => write!(f, "hooked-langford(d={defect})"),
            Self::TwoFoldSkolem => write!(f, "two-fold-skolem"),
            Self::TwoFoldLangford { defect } => write!(f, "two-fold-langford(d={defect})"),
            Self::SkolemType { symbols } => write!(f, "skolem-type({symbols:?})"),
            Self::TwoFoldSkolemType { symbols } => write!(f, "two-fold-skolem-type({symbols:?})"),
            Self::MultiFoldSkolem { fold } => write!(f, "{fold}-fold-skolem"),
            Self::HookedMultiFoldSkolem { fold } => write!(f, "hooked-{fold}-fold-skolem"),
        }
    }
}

/// One reason a sequence fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    Length { expected: usize, actual: usize },
    /// A 0 where no hook is allowed.
    StrayHook { position: u32 },
    MissingHook { position: u32 },
    UnexpectedSymbol { position: u32, symbol: u32 },
    MissingSymbol { symbol: u32 },
    Multiplicity { symbol: u32, count: usize, expected: usize },
    /// Positions of a symbol that cannot be matched at distance `symbol`.
    Unpaired { symbol: u32, positions: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SequenceReport {
    pub ok: bool,
    pub violations: Vec<SequenceViolation>,
}

impl SequenceReport {
    fn from_violations(violations: Vec<SequenceViolation>) -> Self {
        Self { ok: violations.is_empty(), violations }
    }
}

/// Greedy left-to-right matching of one symbol's positions. Returns the
/// pairs, or the positions left unmatched.
fn greedy_pairs(symbol: u32, positions: &[u32]) -> std::result::Result<Vec<(u32, u32)>, Vec<u32>> {
    let mut left: Vec<u32> = positions.to_vec();
    let mut pairs = Vec::with_capacity(left.len() / 2);
    while let Some(&a) = left.first() {
        left.remove(0);
        match left.iter().position(|&p| p == a + symbol) {
            Some(j) => {
                left.remove(j);
                pairs.push((a, a + symbol));
            }
            None => {
                let mut rest = vec![a];
                rest.extend(left);
                return Err(rest);
            }
        }
    }
    Ok(pairs)
}

/// Checks a sequence against a kind of the given order (for Langford kinds
/// the order is `l`, the number of symbols).
pub fn validate(seq: &SkolemTypeSequence, kind: &SequenceKind, order: u32) -> SequenceReport {
    let mut v = Vec::new();
    let symbols = kind.symbols(order);
    let fold = kind.fold() as usize;
    let hooked = kind.is_hooked();
    let expected_len = 2 * fold * symbols.len() + usize::from(hooked);
    if seq.len() != expected_len {
        v.push(SequenceViolation::Length { expected: expected_len, actual: seq.len() });
    }
    let hook_at = hooked.then(|| expected_len as u32 - 1);
    for (i, &x) in seq.entries().iter().enumerate() {
        let pos = i as u32 + 1;
        if x == 0 && Some(pos) != hook_at {
            v.push(SequenceViolation::StrayHook { position: pos });
        } else if x != 0 && !symbols.contains(&x) {
            v.push(SequenceViolation::UnexpectedSymbol { position: pos, symbol: x });
        }
    }
    if let Some(h) = hook_at {
        if seq.at(h).is_some_and(|x| x != 0) {
            v.push(SequenceViolation::MissingHook { position: h });
        }
    }
    let positions = seq.positions();
    for &h in &symbols {
        let ps = positions.get(&h).map(Vec::as_slice).unwrap_or(&[]);
        if ps.is_empty() {
            v.push(SequenceViolation::MissingSymbol { symbol: h });
            continue;
        }
        if ps.len() != 2 * fold {
            v.push(SequenceViolation::Multiplicity { symbol: h, count: ps.len(), expected: 2 * fold });
        }
        if let Err(rest) = greedy_pairs(h, ps) {
            v.push(SequenceViolation::Unpaired { symbol: h, positions: rest });
        }
    }
    SequenceReport::from_violations(v)
}

/// Fragment check: no hooks, and every symbol's occurrences pair up at the
/// symbol's distance. Multiplicities may differ between symbols.
pub fn validate_fragment(seq: &SkolemTypeSequence) -> SequenceReport {
    let mut v = Vec::new();
    for pos in seq.hook_positions() {
        v.push(SequenceViolation::StrayHook { position: pos });
    }
    for (h, ps) in seq.positions() {
        if let Err(rest) = greedy_pairs(h, &ps) {
            v.push(SequenceViolation::Unpaired { symbol: h, positions: rest });
        }
    }
    SequenceReport::from_violations(v)
}

/// Validation that turns a failing report into an error; used by the
/// generators so a bad table row can never leak out.
pub(crate) fn checked(seq: SkolemTypeSequence, kind: &SequenceKind, order: u32) -> Result<SkolemTypeSequence> {
    let report = validate(&seq, kind, order);
    if report.ok {
        Ok(seq)
    } else {
        Err(Error::PreconditionFailed(format!(
            "generated {kind} sequence of order {order} is invalid: {:?}",
            report.violations
        )))
    }
}

/// Symbol to (left, right) position pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pub pairs: BTreeMap<u32, Vec<(u32, u32)>>,
    pub length: usize,
}

impl PairSet {
    /// The single pair of a fold-1 symbol.
    pub fn pair(&self, symbol: u32) -> Option<(u32, u32)> {
        self.pairs.get(&symbol).and_then(|ps| ps.first().copied())
    }

    /// Rebuilds the entries; uncovered positions become hooks.
    pub fn to_sequence(&self) -> SkolemTypeSequence {
        let mut entries = vec![0; self.length];
        for (&h, ps) in &self.pairs {
            for &(a, b) in ps {
                entries[a as usize - 1] = h;
                entries[b as usize - 1] = h;
            }
        }
        SkolemTypeSequence::new(entries)
    }

    /// Right endpoint of every pair, sorted.
    pub fn right_endpoints(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self.pairs.values().flatten().map(|&(_, b)| b).collect();
        r.sort_unstable();
        r
    }
}

pub fn pairs_of(seq: &SkolemTypeSequence) -> Result<PairSet> {
    let mut pairs = BTreeMap::new();
    for (h, ps) in seq.positions() {
        let matched = greedy_pairs(h, &ps).map_err(|_| Error::UnmatchedSymbol { symbol: h })?;
        pairs.insert(h, matched);
    }
    Ok(PairSet { pairs, length: seq.len() })
}

/// Concatenation of unhooked sequences.
pub fn concat(seqs: &[SkolemTypeSequence]) -> Result<SkolemTypeSequence> {
    if seqs.iter().any(SkolemTypeSequence::is_hooked) {
        return Err(Error::HookedOperand);
    }
    Ok(SkolemTypeSequence::new(seqs.iter().flat_map(|s| s.entries().iter().copied()).collect()))
}

/// Two copies of an unhooked sequence side by side.
pub fn double(seq: &SkolemTypeSequence) -> Result<SkolemTypeSequence> {
    concat(&[seq.clone(), seq.clone()])
}

/// Existence of a sequence of the given kind and order (Langford kinds take
/// `order = l`), as characterised by the classical necessary and sufficient
/// conditions.
pub fn exists(kind: &SequenceKind, order: u32) -> Result<bool> {
    if order == 0 {
        return Err(Error::OutOfRange { what: "order", value: 0 });
    }
    kind.check_params(order)?;
    let n = order as i64;
    let r = n % 4;
    Ok(match kind {
        SequenceKind::Skolem => r == 0 || r == 1,
        SequenceKind::HookedSkolem => r == 2 || r == 3,
        SequenceKind::Langford { defect } => {
            let (d, l) = (*defect as i64, n);
            l >= 2 * d - 1
                && ((l % 4 == 0 || l % 4 == 1) && d % 2 == 1 || (l % 4 == 0 || l % 4 == 3) && d % 2 == 0)
        }
        SequenceKind::HookedLangford { defect } => {
            let (d, l) = (*defect as i64, n);
            l * (l - 2 * d + 1) + 2 >= 0
                && ((l % 4 == 2 || l % 4 == 3) && d % 2 == 1 || (l % 4 == 1 || l % 4 == 2) && d % 2 == 0)
        }
        SequenceKind::NearSkolem { defect } => {
            let odd = defect % 2 == 1;
            (r == 0 || r == 1) && odd || (r == 2 || r == 3) && !odd
        }
        SequenceKind::HookedNearSkolem { defect } => {
            let odd = defect % 2 == 1;
            (r == 0 || r == 1) && !odd || (r == 2 || r == 3) && odd
        }
        SequenceKind::TwoFoldSkolem => true,
        SequenceKind::MultiFoldSkolem { fold } => fold % 2 == 0 || r == 0 || r == 1,
        SequenceKind::HookedMultiFoldSkolem { fold } => fold % 2 == 1 && (r == 2 || r == 3),
        SequenceKind::TwoFoldLangford { .. }
        | SequenceKind::SkolemType { .. }
        | SequenceKind::TwoFoldSkolemType { .. } => {
            return Err(Error::UnknownKind(kind.to_string()));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SkolemTypeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn skolem_type_with_gap_symbols() {
        let h: BTreeSet<u32> = [1, 3, 4, 6].into();
        let r = validate(&seq("6,4,1,1,3,4,6,3"), &SequenceKind::SkolemType { symbols: h }, 4);
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn order_one() {
        assert!(validate(&seq("1,1"), &SequenceKind::Skolem, 1).ok);
    }

    #[test]
    fn distance_violation_is_reported() {
        let r = validate(&seq("1,1,2,2"), &SequenceKind::Skolem, 2);
        assert!(!r.ok);
        assert!(r
            .violations
            .contains(&SequenceViolation::Unpaired { symbol: 2, positions: vec![3, 4] }));
        let h: BTreeSet<u32> = [1, 2].into();
        assert!(!validate(&seq("1,1,2,2"), &SequenceKind::SkolemType { symbols: h }, 2).ok);
        assert!(!validate_fragment(&seq("1,1,2,2")).ok);
    }

    #[test]
    fn near_skolem_order_seven() {
        let s = seq("1,1,6,3,7,5,3,2,6,2,5,7");
        assert!(validate(&s, &SequenceKind::NearSkolem { defect: 4 }, 7).ok);
        assert!(!validate(&s, &SequenceKind::NearSkolem { defect: 3 }, 7).ok);
    }

    #[test]
    fn hook_position_enforced() {
        assert!(validate(&seq("3,1,1,3,2,0,2"), &SequenceKind::HookedSkolem, 3).ok);
        let r = validate(&seq("1,1,0,2,3,2,3"), &SequenceKind::HookedSkolem, 3);
        assert!(!r.ok);
        assert!(r.violations.contains(&SequenceViolation::StrayHook { position: 3 }));
    }

    #[test]
    fn pairs_examples() {
        let p = pairs_of(&seq("3,1,1,3,2,0,2")).unwrap();
        assert_eq!(p.pair(1), Some((2, 3)));
        assert_eq!(p.pair(2), Some((5, 7)));
        assert_eq!(p.pair(3), Some((1, 4)));
        assert_eq!(pairs_of(&seq("1,1")).unwrap().pair(1), Some((1, 2)));
        let p = pairs_of(&seq("8,8,4,4,1,1,4,4,8,8,1,1")).unwrap();
        assert_eq!(p.pairs[&1], vec![(5, 6), (11, 12)]);
        assert_eq!(p.pairs[&4], vec![(3, 7), (4, 8)]);
        assert_eq!(p.pairs[&8], vec![(1, 9), (2, 10)]);
        assert_eq!(
            pairs_of(&seq("2,1,1,2,2")),
            Err(Error::UnmatchedSymbol { symbol: 2 })
        );
    }

    #[test]
    fn concat_and_double() {
        let one = seq("1,1");
        assert_eq!(concat(&[SkolemTypeSequence::empty(), one.clone()]).unwrap(), one);
        let two = concat(&[one.clone(), one.clone()]).unwrap();
        assert_eq!(two.entries(), &[1, 1, 1, 1]);
        assert_eq!(two.fold(), Some(2));
        assert_eq!(double(&one).unwrap(), two);
        let d = double(&seq("4,2,3,2,4,3")).unwrap();
        assert!(validate(&d, &SequenceKind::TwoFoldLangford { defect: 2 }, 3).ok);
        assert_eq!(double(&seq("3,1,1,3,2,0,2")), Err(Error::HookedOperand));
    }

    #[test]
    fn existence_table() {
        assert!(!exists(&SequenceKind::Skolem, 7).unwrap());
        assert!(exists(&SequenceKind::HookedSkolem, 7).unwrap());
        assert!(!exists(&SequenceKind::Langford { defect: 2 }, 5).unwrap());
        assert!(exists(&SequenceKind::HookedLangford { defect: 2 }, 5).unwrap());
        assert!(exists(&SequenceKind::Langford { defect: 1 }, 1).unwrap());
        assert!(matches!(
            exists(&SequenceKind::TwoFoldLangford { defect: 3 }, 5),
            Err(Error::UnknownKind(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let s = seq("3,1,1,3,2,0,2");
        assert_eq!(s.to_string(), "3,1,1,3,2,0,2");
        assert_eq!(seq("(1, 1)").entries(), &[1, 1]);
        assert!("1,x".parse::<SkolemTypeSequence>().is_err());
    }
}
