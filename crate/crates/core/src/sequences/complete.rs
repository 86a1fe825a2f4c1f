//! Depth-first completion of partially filled Skolem-type sequences, used
//! where no closed-form construction is available (general Langford
//! sequences and hooked Skolem sequences with a prescribed tail).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{checked, exists, SequenceKind, SkolemTypeSequence};
use crate::error::{Error, Result};

/// Default node budget for the generators in this file.
pub const COMPLETION_BUDGET: u64 = 100_000_000;

/// Longest sequence the bitset solver handles.
pub const MAX_COMPLETION_LENGTH: u32 = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completion {
    Found(SkolemTypeSequence),
    Impossible,
    BudgetExhausted,
}

/// Bitset search: bit `p` of `free` is position `p+1`. At each node a cell
/// that only one symbol can still reach is settled first; otherwise the
/// symbol with the fewest placements is branched on.
struct Solver {
    free: u128,
    symbols: Vec<u32>,
    used: Vec<bool>,
    placed: Vec<(u32, u32)>,
    nodes: u64,
    budget: u64,
    rng: Option<ChaCha8Rng>,
}

impl Solver {
    /// Left endpoints where symbol `h` still fits.
    fn starts(&self, h: u32) -> u128 {
        self.free & (self.free >> h)
    }

    fn branch_order(&mut self, mut starts: u128) -> Vec<u32> {
        let mut v = Vec::with_capacity(starts.count_ones() as usize);
        while starts != 0 {
            v.push(starts.trailing_zeros());
            starts &= starts - 1;
        }
        if let Some(rng) = self.rng.as_mut() {
            v.shuffle(rng);
        }
        v
    }

    fn search(&mut self) -> Option<bool> {
        if self.free == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let (mut once, mut twice) = (0u128, 0u128);
        let mut best: Option<(u32, usize)> = None;
        for k in 0..self.symbols.len() {
            if self.used[k] {
                continue;
            }
            let h = self.symbols[k];
            let st = self.starts(h);
            let n = st.count_ones();
            if n == 0 {
                return Some(false);
            }
            if best.map_or(true, |(b, _)| n < b) {
                best = Some((n, k));
            }
            let reach = st | (st << h);
            twice |= once & reach;
            once |= reach;
        }
        if self.free & !once != 0 {
            return Some(false);
        }
        let lonely = self.free & !twice;
        let (k, starts) = if lonely != 0 {
            let cell = lonely.trailing_zeros();
            let k = (0..self.symbols.len())
                .find(|&k| {
                    !self.used[k] && {
                        let h = self.symbols[k];
                        let st = self.starts(h);
                        (st | (st << h)) >> cell & 1 == 1
                    }
                })
                .expect("a reachable cell has a symbol");
            let h = self.symbols[k];
            let st = self.starts(h);
            let hits = st & ((1u128 << cell) | if cell >= h { 1u128 << (cell - h) } else { 0 });
            (k, hits)
        } else {
            let (_, k) = best.expect("free cells imply unused symbols");
            (k, self.starts(self.symbols[k]))
        };
        let h = self.symbols[k];
        for a in self.branch_order(starts) {
            let bits = (1u128 << a) | (1u128 << (a + h));
            self.free &= !bits;
            self.used[k] = true;
            self.placed.push((h, a + 1));
            match self.search() {
                Some(false) => {}
                done => return done,
            }
            self.placed.pop();
            self.used[k] = false;
            self.free |= bits;
        }
        Some(false)
    }
}

/// Completes a sequence of `length` cells. `hooks` are 1-based positions
/// left empty, `fixed` are `(symbol, left, right)` pairs placed up front and
/// `symbols` are the remaining symbols, each placed exactly once.
///
/// The first pass is deterministic; if it stalls, seeded restarts with
/// shuffled branch order and doubling limits follow, all within `budget`
/// nodes in total. `Impossible` is only reported by a pass that ran to
/// exhaustion.
pub fn complete(
    length: u32,
    symbols: &[u32],
    hooks: &[u32],
    fixed: &[(u32, u32, u32)],
    budget: u64,
) -> Completion {
    assert!(length <= MAX_COMPLETION_LENGTH, "sequence too long for the bitset solver");
    let mut entries = vec![0u32; length as usize];
    let mut free: u128 = if length == 128 { u128::MAX } else { (1u128 << length) - 1 };
    for &p in hooks {
        free &= !(1u128 << (p - 1));
    }
    for &(h, a, b) in fixed {
        debug_assert_eq!(b, a + h);
        entries[a as usize - 1] = h;
        entries[b as usize - 1] = h;
        free &= !((1u128 << (a - 1)) | (1u128 << (b - 1)));
    }
    let mut symbols = symbols.to_vec();
    symbols.sort_unstable_by(|a, b| b.cmp(a));
    if free.count_ones() as usize != 2 * symbols.len() {
        return Completion::Impossible;
    }
    let mut spent = 0u64;
    let mut limit = FIRST_PASS.min(budget);
    let mut attempt = 0u64;
    while limit > 0 {
        let mut s = Solver {
            free,
            symbols: symbols.clone(),
            used: vec![false; symbols.len()],
            placed: Vec::new(),
            nodes: 0,
            budget: limit,
            rng: (attempt > 0).then(|| ChaCha8Rng::seed_from_u64(attempt)),
        };
        let outcome = s.search();
        spent += s.nodes;
        match outcome {
            Some(true) => {
                for (h, a) in s.placed {
                    entries[a as usize - 1] = h;
                    entries[(a + h) as usize - 1] = h;
                }
                return Completion::Found(SkolemTypeSequence::new(entries));
            }
            Some(false) => return Completion::Impossible,
            None => {}
        }
        attempt += 1;
        limit = if attempt == 1 { RESTART_START } else { limit.saturating_mul(2) };
        limit = limit.min(budget.saturating_sub(spent));
    }
    Completion::BudgetExhausted
}

const FIRST_PASS: u64 = 200_000;
const RESTART_START: u64 = 1_000;

fn found(c: Completion, what: String, order: u32) -> Result<SkolemTypeSequence> {
    match c {
        Completion::Found(s) => Ok(s),
        Completion::Impossible => Err(Error::NoSuchSequence { kind: what, order }),
        Completion::BudgetExhausted => Err(Error::UnsupportedOrder {
            order,
            reason: format!("{what}: completion search budget exhausted"),
        }),
    }
}

/// Langford sequence with defect `d` and order `l`. Uses the closed form
/// when `l = 2d-1` and a depth-first search otherwise.
pub fn gen_langford(d: u32, l: u32) -> Result<SkolemTypeSequence> {
    let kind = SequenceKind::Langford { defect: d };
    if !exists(&kind, l)? {
        return Err(Error::NoSuchSequence { kind: kind.to_string(), order: l });
    }
    if l == 2 * d - 1 {
        return super::gen_langford_doubledefect(d);
    }
    if 2 * l > MAX_COMPLETION_LENGTH {
        return Err(Error::UnsupportedOrder { order: l, reason: "too long for completion search".into() });
    }
    let symbols: Vec<u32> = (d..d + l).collect();
    let seq = found(complete(2 * l, &symbols, &[], &[], COMPLETION_BUDGET), kind.to_string(), l)?;
    checked(seq, &kind, l)
}

/// Prescribed ending of a hooked Skolem sequence of order `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookedTail {
    /// Symbol 2 at `(2t-1, 2t+1)`, straddling the hook.
    Two,
    /// Symbol 1 at `(2t-2, 2t-1)` and symbol 4 at `(2t-3, 2t+1)`.
    OneFour,
}

impl HookedTail {
    fn fixed(self, t: u32) -> Vec<(u32, u32, u32)> {
        match self {
            Self::Two => vec![(2, 2 * t - 1, 2 * t + 1)],
            Self::OneFour => vec![(1, 2 * t - 2, 2 * t - 1), (4, 2 * t - 3, 2 * t + 1)],
        }
    }

    /// Whether a hooked sequence of order `t` ends this way.
    pub fn matches(self, seq: &SkolemTypeSequence, t: u32) -> bool {
        self.fixed(t)
            .into_iter()
            .all(|(h, a, b)| seq.at(a) == Some(h) && seq.at(b) == Some(h))
    }
}

/// Hooked Skolem sequence of order `t` with the given tail.
pub fn gen_hooked_skolem_with_tail(t: u32, tail: HookedTail) -> Result<SkolemTypeSequence> {
    let kind = SequenceKind::HookedSkolem;
    let what = format!("{kind} with tail {tail:?}");
    let min = match tail {
        HookedTail::Two => 2,
        HookedTail::OneFour => 4,
    };
    if t < min || !exists(&kind, t)? {
        return Err(Error::NoSuchSequence { kind: what, order: t });
    }
    if 2 * t + 1 > MAX_COMPLETION_LENGTH {
        return Err(Error::UnsupportedOrder { order: t, reason: "too long for completion search".into() });
    }
    let fixed = tail.fixed(t);
    let symbols: Vec<u32> = (1..=t).filter(|h| fixed.iter().all(|f| f.0 != *h)).collect();
    let seq = found(complete(2 * t + 1, &symbols, &[2 * t], &fixed, COMPLETION_BUDGET), what, t)?;
    checked(seq, &kind, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::validate;

    #[test]
    fn langford_small() {
        let s = gen_langford(2, 4).unwrap();
        assert!(validate(&s, &SequenceKind::Langford { defect: 2 }, 4).ok);
        assert!(matches!(gen_langford(2, 5), Err(Error::NoSuchSequence { .. })));
        assert_eq!(gen_langford(3, 5).unwrap(), crate::sequences::gen_langford_doubledefect(3).unwrap());
    }

    #[test]
    fn tails() {
        let s = gen_hooked_skolem_with_tail(6, HookedTail::Two).unwrap();
        assert!(HookedTail::Two.matches(&s, 6));
        let s = gen_hooked_skolem_with_tail(7, HookedTail::OneFour).unwrap();
        assert!(HookedTail::OneFour.matches(&s, 7));
        assert!(gen_hooked_skolem_with_tail(3, HookedTail::OneFour).is_err());
    }

    #[test]
    fn impossible_is_reported() {
        assert_eq!(complete(4, &[1, 2], &[], &[], 1000), Completion::Impossible);
    }
}
