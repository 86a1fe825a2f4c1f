//! Turning sequences into vane tuples: triangles from fold-1 pairs,
//! squares from two-fold sequences, pentagons from two Skolem-type
//! sequences, and hexagons by merging two triangles.

use crate::error::{Error, Result};
use crate::sequences::{pairs_of, PairSet, SkolemTypeSequence};
use crate::windmill::Vane;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleForm {
    /// `(0, a_i + c, b_i + c)`
    Shifted,
    /// `(0, i, b_i + c)`
    SymbolFirst,
}

/// One triangle per symbol, in increasing symbol order.
pub fn triples_from_pairs(pairs: &PairSet, c: u32, form: TripleForm) -> Result<Vec<Vane>> {
    let max = pairs.pairs.keys().next_back().copied().unwrap_or(0);
    if c < max {
        return Err(Error::ShiftTooSmall { c, need: max });
    }
    pairs
        .pairs
        .iter()
        .map(|(&i, ps)| match ps.as_slice() {
            [(a, b)] => Ok(match form {
                TripleForm::Shifted => Vane(vec![0, a + c, b + c]),
                TripleForm::SymbolFirst => Vane(vec![0, i, b + c]),
            }),
            _ => Err(Error::PreconditionFailed(format!("symbol {i} does not have exactly one pair"))),
        })
        .collect()
}

/// The sequence family a two-fold input comes from; decides which bound on
/// the shift guarantees disjoint labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoFoldFamily {
    /// Any two-fold Skolem sequence: `s ≤ c+1`.
    TwoFoldSkolem,
    /// The odd/even parity tables: `s ≤ 2c+1` (odd) or `s ≤ 2c` (even).
    ParityTable,
    /// Two copies of `L_d^{2d-1}`: `d ≤ c+1`.
    DoubleLangford { defect: u32 },
    /// Two copies of a table Skolem sequence of order `4m`: `s ≤ 2c+2`.
    DoubleSkolemEven,
    /// Two copies of a table Skolem sequence of order `4m+1`: `s ≤ 2c+1`.
    DoubleSkolemOdd,
    /// `P_x`: `2s ≤ c+4`.
    Power4,
    /// `C^y`, `1 ≤ y ≤ 4`.
    Small { y: u32 },
    /// Two-fold Langford with defect `6k-1`: `c ≥ 2k-1`.
    TwoFoldLangford { k: u32 },
    /// Concatenations; the caller verifies the final labelling instead.
    Composite,
}

impl TwoFoldFamily {
    fn check(self, s: u32, c: u32) -> Result<()> {
        let ok = match self {
            Self::TwoFoldSkolem => s <= c + 1,
            Self::ParityTable => {
                if s % 2 == 1 {
                    s <= 2 * c + 1
                } else {
                    s <= 2 * c
                }
            }
            Self::DoubleLangford { defect } => defect <= c + 1,
            Self::DoubleSkolemEven => s <= 2 * c + 2,
            Self::DoubleSkolemOdd => s <= 2 * c + 1,
            Self::Power4 => 2 * s <= c + 4,
            Self::Small { y } => match y {
                1 => true,
                2 => c >= 1,
                3 => c >= 3,
                4 => c >= 2,
                _ => false,
            },
            Self::TwoFoldLangford { k } => c + 1 >= 2 * k,
            Self::Composite => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BoundViolation(format!("{self:?} with order {s} and shift c={c}")))
        }
    }
}

/// One square `(0, d_j + c, j, f_j + c)` per symbol `j`, in increasing
/// symbol order, where `(c_j,d_j)`, `(e_j,f_j)` are the two pairs of `j`.
pub fn quadruples_from_twofold(seq: &SkolemTypeSequence, c: u32, family: TwoFoldFamily) -> Result<Vec<Vane>> {
    let pairs = pairs_of(seq)?;
    family.check(pairs.pairs.len() as u32, c)?;
    pairs
        .pairs
        .iter()
        .map(|(&j, ps)| match ps.as_slice() {
            [(_, d), (_, f)] => Ok(Vane(vec![0, d + c, j, f + c])),
            _ => Err(Error::PreconditionFailed(format!("symbol {j} does not have exactly two pairs"))),
        })
        .collect()
}

/// Pentagons `(0, d_{b_i}+p+shift, b_i, a_i, d_{a_i}+p+shift)` for `1 ≤ i ≤ p`,
/// where `(a_i,b_i)` is the pair of `i` in `s1` and `d_x` is the right
/// endpoint of symbol `x` in `s2`. `s2` must have no right endpoint among
/// `forbidden`.
pub fn fivetuples_from(
    s1: &SkolemTypeSequence,
    s2: &SkolemTypeSequence,
    p: u32,
    shift: u32,
    forbidden: &[u32],
) -> Result<Vec<Vane>> {
    let p1 = pairs_of(s1)?;
    let p2 = pairs_of(s2)?;
    if let Some(r) = p2.right_endpoints().into_iter().find(|r| forbidden.contains(r)) {
        return Err(Error::PreconditionFailed(format!("second sequence has a right endpoint at {r}")));
    }
    let right = |x: u32| {
        p2.pair(x)
            .map(|(_, d)| d)
            .ok_or_else(|| Error::PreconditionFailed(format!("second sequence lacks symbol {x}")))
    };
    (1..=p)
        .map(|i| {
            let (a, b) = p1
                .pair(i)
                .ok_or_else(|| Error::PreconditionFailed(format!("first sequence lacks symbol {i}")))?;
            Ok(Vane(vec![0, right(b)? + p + shift, b, a, right(a)? + p + shift]))
        })
        .collect()
}

/// Right-endpoint positions the second sequence must avoid for `C5^p`.
pub fn c5_forbidden_positions(p: u32) -> Vec<u32> {
    if p % 4 <= 1 {
        (1..=p).collect()
    } else {
        (1..p).chain([p + 1]).collect()
    }
}

/// Second sequences for `p = 2, 3`, where the near-Skolem tables do not
/// reach; found by exhaustive search under the right-endpoint condition.
const C5_SECOND_2: [u32; 9] = [5, 3, 1, 1, 3, 5, 2, 0, 2];
const C5_SECOND_3: [u32; 12] = [7, 4, 2, 5, 2, 4, 3, 7, 5, 3, 1, 1];

/// The two sequences behind the pentagons of `C5^p`: a (hooked) Skolem
/// sequence of order `p` and, by `p mod 4`, a Skolem, hooked Skolem, hooked
/// near-Skolem or near-Skolem sequence of order `2p` or `2p+1`.
pub fn c5_sequences(p: u32) -> Result<(SkolemTypeSequence, SkolemTypeSequence)> {
    use crate::sequences::*;
    if p == 0 {
        return Err(Error::OutOfRange { what: "p", value: 0 });
    }
    let s1 = gen_skolem_or_hooked(p)?;
    let s2 = match (p, p % 4) {
        (2, _) => C5_SECOND_2.into(),
        (3, _) => C5_SECOND_3.into(),
        (_, 0) => gen_skolem(2 * p)?,
        (_, 1) => gen_hooked_skolem(2 * p)?,
        _ => gen_near_skolem_topdefect(2 * p + 1)?,
    };
    Ok((s1, s2))
}

/// Pentagons for `C5^p`. For `p = 2, 3` the classical hand-made tuples are
/// returned.
pub fn fivetuples_c5(p: u32) -> Result<Vec<Vane>> {
    match p {
        2 => Ok(vec![Vane::from([0, 11, 2, 9, 1]), Vane::from([0, 6, 3, 7, 5])]),
        3 => Ok(vec![
            Vane::from([0, 15, 1, 14, 12]),
            Vane::from([0, 5, 6, 3, 10]),
            Vane::from([0, 9, 13, 2, 8]),
        ]),
        _ => {
            let (s1, s2) = c5_sequences(p)?;
            fivetuples_from(&s1, &s2, p, 0, &c5_forbidden_positions(p))
        }
    }
}

/// Pairs `(i, j)` of triangles to merge into hexagons for `C3^n`, by the
/// residue of `n` mod 5. Pairs are disjoint, with distinct sums in
/// `[n+1, ⌈(3n+3)/2⌉-1]`.
pub fn hexagon_pairs(n: u32) -> Result<Vec<(u32, u32)>> {
    if n < 5 {
        return Err(Error::OutOfRange { what: "n", value: n as i64 });
    }
    let (k, r) = (n / 5, n % 5);
    let (a, b): (Vec<(u32, u32)>, Vec<(u32, u32)>) = match r {
        0 => (
            (0..k).map(|z| (k + z, 4 * k + z + 1)).collect(),
            (0..k).map(|z| (2 * k + z + 1, 3 * k + z + 1)).collect(),
        ),
        1 => (
            (0..=k).map(|z| (k + z + 1, 4 * k + z + 1)).collect(),
            (0..k - 1).map(|z| (2 * k + z + 2, 3 * k + z + 1)).collect(),
        ),
        2 => (
            (0..=k).map(|z| (k + z + 1, 4 * k + z + 2)).collect(),
            (0..k).map(|z| (2 * k + z + 2, 3 * k + z + 2)).collect(),
        ),
        3 => (
            (0..=k).map(|z| (k + z + 1, 4 * k + z + 3)).collect(),
            (0..k).map(|z| (2 * k + z + 2, 3 * k + z + 3)).collect(),
        ),
        _ => (
            (0..=k).map(|z| (k + z + 1, 4 * k + z + 4)).collect(),
            (0..k).map(|z| (2 * k + z + 3, 3 * k + z + 3)).collect(),
        ),
    };
    Ok(a.into_iter().chain(b).collect())
}

/// Replaces the triangles `(0, i, x)` and `(0, j, y)` by the hexagon
/// `(0, x, i, i+j, j, y)`. Returns the remaining vanes (order kept) and the
/// hexagon. `i + j` must not be a label anywhere in `vanes`.
pub fn hexagon_merge(vanes: &[Vane], pair: (u32, u32), n: u32) -> Result<(Vec<Vane>, Vane)> {
    let (i, j) = pair;
    let find = |x: u32| {
        vanes
            .iter()
            .position(|v| v.cycle() == 3 && v.0[1] == x && v.0[2] > n)
            .ok_or(Error::MissingTriple { i: x })
    };
    let (pi, pj) = (find(i)?, find(j)?);
    let sum = i + j;
    if vanes.iter().any(|v| v.labels().contains(&sum)) {
        return Err(Error::LabelClash { label: sum });
    }
    let hex = Vane(vec![0, vanes[pi].0[2], i, sum, j, vanes[pj].0[2]]);
    let rest = vanes
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pi && k != pj)
        .map(|(_, v)| v.clone())
        .collect();
    Ok((rest, hex))
}
