//! Exhaustive searches used as ground truth: labellings of small windmills
//! and enumeration of small Skolem-type sequences.
//!
//! The labelling search always extends the partial labelling with a vane
//! that carries the largest edge label still missing. Every labelling is a
//! set of vanes, and this rule visits each set in exactly one order, so
//! "none" after an exhausted search is a proof. Vanes are enumerated in one
//! orientation only (second vertex below the last).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::sequences::{validate, SequenceKind, SkolemTypeSequence};
use crate::windmill::{verify, verify_permissive, Labelling, Mode, Provenance, Vane, WindmillSpec};

/// Largest edge count the bitset search accepts.
pub const MAX_EDGES: u32 = 126;

/// Which labels count as success.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Graceful,
    /// Edge set `[1,m-1] ∪ {m+1}`, label `m` unused.
    NearGraceful,
    /// Vertex labels up to `m+1`, edge set `[1,m-1]` plus `m` or `m+1`.
    NearGracefulPermissive,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Graceful => Self::Graceful,
            Mode::NearGraceful => Self::NearGraceful,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Labelling),
    /// The whole (symmetry-reduced) space was exhausted.
    None,
    BudgetExhausted,
}

struct LabelSearch {
    /// Remaining vane count per cycle length.
    remaining: BTreeMap<u32, u32>,
    /// Edge labels still to be realised.
    edges_left: u128,
    /// Vertex labels still available.
    labels_free: u128,
    max_label: u32,
    vanes: Vec<Vane>,
    nodes: u64,
    budget: u64,
}

fn bit(x: u32) -> u128 {
    1u128 << x
}

impl LabelSearch {
    fn run(&mut self) -> Option<bool> {
        if self.edges_left == 0 {
            return Some(self.remaining.values().all(|&c| c == 0));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let top = 127 - self.edges_left.leading_zeros();
        let lengths: Vec<u32> = self.remaining.iter().filter(|(_, &c)| c > 0).map(|(&n, _)| n).collect();
        for n in lengths {
            for vane in self.candidates(n, top) {
                self.apply(&vane, n, true);
                match self.run() {
                    Some(false) => {}
                    done => return done,
                }
                self.apply(&vane, n, false);
            }
        }
        Some(false)
    }

    fn apply(&mut self, v: &Vane, n: u32, place: bool) {
        let mut lab = 0u128;
        for &x in &v.labels()[1..] {
            lab |= bit(x);
        }
        let mut ed = 0u128;
        for e in v.edges() {
            ed |= bit(e);
        }
        let c = self.remaining.get_mut(&n).expect("cycle length tracked");
        if place {
            self.labels_free &= !lab;
            self.edges_left &= !ed;
            *c -= 1;
            self.vanes.push(v.clone());
        } else {
            self.labels_free |= lab;
            self.edges_left |= ed;
            *c += 1;
            self.vanes.pop();
        }
    }

    /// All `n`-cycles through 0 that use `top` as an edge, only free labels
    /// and only edges still needed, each edge at most once.
    fn candidates(&self, n: u32, top: u32) -> Vec<Vane> {
        let mut out = Vec::new();
        let n = n as usize;
        // Edge k joins vertex k and vertex k+1 (vertex n is the centre again).
        for k in 0..n {
            let ends: Vec<(u32, u32)> = if k == 0 {
                vec![(0, top)]
            } else if k == n - 1 {
                vec![(top, 0)]
            } else {
                (1..=self.max_label.saturating_sub(top))
                    .flat_map(|x| [(x, x + top), (x + top, x)])
                    .collect()
            };
            for (u, w) in ends {
                if (u != 0 && self.labels_free & bit(u) == 0) || (w != 0 && self.labels_free & bit(w) == 0) {
                    continue;
                }
                let mut verts = vec![0u32; n];
                verts[k] = u;
                if k + 1 < n {
                    verts[k + 1] = w;
                }
                let used_labels = bit(u) | bit(w);
                let used_edges = bit(top);
                self.extend(&mut verts, k, n, used_labels, used_edges, top, &mut out);
            }
        }
        // Vanes spending the largest remaining edges come first.
        out.sort_by_cached_key(|v| {
            let mut e: Vec<u32> = v.edges().collect();
            e.sort_unstable_by(|a, b| b.cmp(a));
            std::cmp::Reverse(e)
        });
        out
    }

    /// Fills vertices after `k+1` (up to `n-1`) and then before `k`, keeping
    /// every edge below `top`, then closes the cycle.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        verts: &mut Vec<u32>,
        k: usize,
        n: usize,
        used_labels: u128,
        used_edges: u128,
        top: u32,
        out: &mut Vec<Vane>,
    ) {
        // Positions still to fill, in order: k+2..n-1, then k-1 down to 1.
        let mut todo: Vec<usize> = (k + 2..n).collect();
        todo.extend((1..k).rev());
        self.fill(verts, &todo, 0, k, n, used_labels, used_edges, top, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        verts: &mut Vec<u32>,
        todo: &[usize],
        idx: usize,
        k: usize,
        n: usize,
        used_labels: u128,
        used_edges: u128,
        top: u32,
        out: &mut Vec<Vane>,
    ) {
        let avail = self.edges_left & !used_edges & (bit(top) - 1);
        if idx == todo.len() {
            // The only edge not yet checked is the one between the two
            // growth fronts: (n-1, 0) when k < n-1 grew rightwards to the end
            // and (0, 1) when leftward growth reached vertex 1.
            let closing = if k == n - 1 {
                // Grew leftwards from n-2 down to 1: close 0-1.
                verts[1]
            } else if k == 0 {
                verts[n - 1]
            } else {
                // Right front ends at n-1 (closes to 0); left front ends at 1.
                let a = verts[n - 1];
                let b = verts[1];
                if avail & bit(a) == 0 || a == b {
                    return;
                }
                let avail2 = avail & !bit(a);
                if avail2 & bit(b) == 0 {
                    return;
                }
                self.emit(verts, out);
                return;
            };
            if avail & bit(closing) != 0 {
                self.emit(verts, out);
            }
            return;
        }
        let p = todo[idx];
        // The neighbour already fixed: p-1 while growing right, p+1 while growing left.
        let prev = if p > k { verts[p - 1] } else { verts[p + 1] };
        let mut rest = avail;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            for v in [prev.checked_sub(e), prev.checked_add(e)].into_iter().flatten() {
                if v == 0 || v > self.max_label || self.labels_free & bit(v) == 0 || used_labels & bit(v) != 0 {
                    continue;
                }
                verts[p] = v;
                self.fill(verts, todo, idx + 1, k, n, used_labels | bit(v), used_edges | bit(e), top, out);
            }
        }
        verts[p] = 0;
    }

    fn emit(&self, verts: &[u32], out: &mut Vec<Vane>) {
        if verts[1] < verts[verts.len() - 1] {
            out.push(Vane(verts.to_vec()));
        }
    }
}

fn run_search(
    spec: &WindmillSpec,
    targets: u128,
    labels: u128,
    max_label: u32,
    budget: u64,
) -> (Option<Vec<Vane>>, bool, u64) {
    let mut s = LabelSearch {
        remaining: spec.classes().iter().map(|c| (c.cycle, c.count)).collect(),
        edges_left: targets,
        labels_free: labels,
        max_label,
        vanes: Vec::new(),
        nodes: 0,
        budget,
    };
    match s.run() {
        Some(true) => (Some(s.vanes), true, s.nodes),
        Some(false) => (None, true, s.nodes),
        None => (None, false, s.nodes),
    }
}

fn range_mask(lo: u32, hi: u32) -> u128 {
    (lo..=hi).fold(0, |m, x| m | bit(x))
}

/// Backtracking search for a labelling of `spec`. `max_label` defaults to
/// `m` (graceful) or `m+1` (near-graceful).
pub fn search_labelling(
    spec: &WindmillSpec,
    mode: SearchMode,
    max_label: Option<u32>,
    node_budget: u64,
) -> Result<SearchOutcome> {
    let m = spec.edge_count();
    if m > MAX_EDGES {
        return Err(Error::SpecTooLarge { m, cap: MAX_EDGES });
    }
    let default_max = if mode == SearchMode::Graceful { m } else { m + 1 };
    let max_label = max_label.unwrap_or(default_max).min(default_max);
    let near_edges = range_mask(1, m - 1) | bit(m + 1);
    let attempts: Vec<(u128, u128, Mode)> = match mode {
        SearchMode::Graceful => vec![(range_mask(1, m), range_mask(1, max_label), Mode::Graceful)],
        SearchMode::NearGraceful => {
            vec![(near_edges, range_mask(1, max_label) & !bit(m), Mode::NearGraceful)]
        }
        SearchMode::NearGracefulPermissive => vec![
            (near_edges, range_mask(1, max_label), Mode::NearGraceful),
            (range_mask(1, m), range_mask(1, max_label), Mode::NearGraceful),
        ],
    };
    let mut exhaustive = true;
    let mut spent = 0;
    for (targets, labels, lmode) in attempts {
        let (found, complete, nodes) = run_search(spec, targets, labels, max_label, node_budget - spent);
        spent += nodes;
        if let Some(vanes) = found {
            let l = Labelling::new(spec.clone(), lmode, vanes)?.with_provenance(Provenance {
                origin: "oracle".into(),
                spec: spec.to_string(),
                exhaustive: false,
            });
            let report = if mode == SearchMode::NearGracefulPermissive { verify_permissive(&l) } else { verify(&l) };
            if !report.ok {
                return Err(Error::PreconditionFailed(format!("search produced an invalid labelling: {report:?}")));
            }
            return Ok(SearchOutcome::Found(l));
        }
        exhaustive &= complete;
        if spent >= node_budget {
            exhaustive = false;
            break;
        }
    }
    Ok(if exhaustive { SearchOutcome::None } else { SearchOutcome::BudgetExhausted })
}

/// Largest order accepted by [`search_sequence`].
pub const MAX_SEQUENCE_ORDER: u32 = 12;

/// Enumerates sequences of the given kind and order by placing symbols from
/// the largest down, each at every feasible left position. With
/// `enumerate_all` unset the first sequence found is returned.
pub fn search_sequence(kind: &SequenceKind, n: u32, enumerate_all: bool) -> Result<Vec<SkolemTypeSequence>> {
    if n > MAX_SEQUENCE_ORDER {
        return Err(Error::OrderTooLarge { n, cap: MAX_SEQUENCE_ORDER });
    }
    kind.check_params(n.max(1))?;
    let symbols: Vec<u32> = kind.symbols(n).into_iter().rev().collect();
    let fold = kind.fold() as usize;
    let len = 2 * fold * symbols.len() + usize::from(kind.is_hooked());
    let mut cells = vec![0u32; len];
    if kind.is_hooked() {
        if len < 2 {
            return Ok(Vec::new());
        }
        cells[len - 2] = u32::MAX;
    }
    let mut out = Vec::new();
    place_symbols(&mut cells, &symbols, 0, fold, 0, enumerate_all, &mut out);
    for s in &out {
        let r = validate(s, kind, n);
        if !r.ok {
            return Err(Error::PreconditionFailed(format!("enumerated invalid sequence {s}: {r:?}")));
        }
    }
    Ok(out)
}

/// Places copy `copy` of `symbols[idx]` at a left position after `from`.
/// Returns true when the caller should stop.
fn place_symbols(
    cells: &mut [u32],
    symbols: &[u32],
    idx: usize,
    fold: usize,
    copy: usize,
    all: bool,
    out: &mut Vec<SkolemTypeSequence>,
) -> bool {
    place_from(cells, symbols, idx, fold, copy, 0, all, out)
}

#[allow(clippy::too_many_arguments)]
fn place_from(
    cells: &mut [u32],
    symbols: &[u32],
    idx: usize,
    fold: usize,
    copy: usize,
    from: usize,
    all: bool,
    out: &mut Vec<SkolemTypeSequence>,
) -> bool {
    if idx == symbols.len() {
        out.push(SkolemTypeSequence::new(
            cells.iter().map(|&c| if c == u32::MAX { 0 } else { c }).collect(),
        ));
        return !all;
    }
    let h = symbols[idx] as usize;
    for a in from..cells.len().saturating_sub(h) {
        if cells[a] != 0 || cells[a + h] != 0 {
            continue;
        }
        cells[a] = h as u32;
        cells[a + h] = h as u32;
        let stop = if copy + 1 < fold {
            place_from(cells, symbols, idx, fold, copy + 1, a + 1, all, out)
        } else {
            place_from(cells, symbols, idx + 1, fold, 0, 0, all, out)
        };
        cells[a] = 0;
        cells[a + h] = 0;
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::exists;

    fn spec(c: &[(u32, u32)]) -> WindmillSpec {
        WindmillSpec::new(c.iter().copied()).unwrap()
    }

    #[test]
    fn single_square() {
        match search_labelling(&spec(&[(4, 1)]), SearchMode::Graceful, None, 1_000_000).unwrap() {
            SearchOutcome::Found(l) => assert!(verify(&l).ok),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_triangles_have_no_graceful_labelling() {
        assert_eq!(
            search_labelling(&spec(&[(3, 2)]), SearchMode::Graceful, None, 1_000_000).unwrap(),
            SearchOutcome::None
        );
        assert!(matches!(
            search_labelling(&spec(&[(3, 2)]), SearchMode::NearGraceful, None, 1_000_000).unwrap(),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn single_triangle() {
        match search_labelling(&spec(&[(3, 1)]), SearchMode::Graceful, None, 1000).unwrap() {
            SearchOutcome::Found(l) => {
                let v = l.vanes()[0].canonical();
                assert!(v == Vane::from([0, 1, 3]) || v == Vane::from([0, 2, 3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mixed_lengths() {
        for c in [&[(3, 1), (5, 1)][..], &[(3, 2), (4, 1)], &[(6, 1)], &[(3, 1), (6, 1)]] {
            let s = spec(c);
            let mode = crate::windmill::expected_mode(&s);
            match search_labelling(&s, mode.into(), None, 10_000_000).unwrap() {
                SearchOutcome::Found(l) => assert!(verify(&l).ok),
                other => panic!("{s}: {other:?}"),
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        assert_eq!(
            search_labelling(&spec(&[(3, 3)]), SearchMode::Graceful, None, 1).unwrap(),
            SearchOutcome::BudgetExhausted
        );
        assert!(matches!(
            search_labelling(&spec(&[(4, 40)]), SearchMode::Graceful, None, 1),
            Err(Error::SpecTooLarge { .. })
        ));
    }

    #[test]
    fn sequence_examples() {
        assert!(search_sequence(&SequenceKind::Skolem, 2, true).unwrap().is_empty());
        let hooked = search_sequence(&SequenceKind::HookedSkolem, 2, true).unwrap();
        assert!(hooked.contains(&SkolemTypeSequence::from([1, 1, 2, 0, 2])));
        assert_eq!(search_sequence(&SequenceKind::Skolem, 4, true).unwrap().len(), 6);
        assert_eq!(search_sequence(&SequenceKind::Skolem, 5, true).unwrap().len(), 10);
        assert!(matches!(
            search_sequence(&SequenceKind::Skolem, 13, false),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn two_fold_enumeration() {
        let all = search_sequence(&SequenceKind::TwoFoldSkolem, 2, true).unwrap();
        assert!(all.contains(&SkolemTypeSequence::from([1, 1, 1, 1, 2, 2, 2, 2])));
        assert!(exists(&SequenceKind::TwoFoldSkolem, 2).unwrap());
    }
}
