//! Closed-form generators. Every row formula is evaluated into a pair list,
//! placed, and the result validated before it is returned.

use std::collections::BTreeSet;

use super::{checked, SequenceKind, SkolemTypeSequence};
use crate::error::{Error, Result};

/// Places `(symbol, left, right)` pairs into a sequence of `length` cells.
fn place(length: u32, pairs: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<SkolemTypeSequence> {
    let mut entries = vec![0u32; length as usize];
    for (h, a, b) in pairs {
        if b != a + h || a == 0 || b > length {
            return Err(Error::PreconditionFailed(format!("row emits pair ({a},{b}) for symbol {h}")));
        }
        for p in [a, b] {
            let cell = &mut entries[p as usize - 1];
            if *cell != 0 {
                return Err(Error::PreconditionFailed(format!(
                    "row collision at position {p}: {} and {h}",
                    *cell
                )));
            }
            *cell = h;
        }
    }
    Ok(SkolemTypeSequence::new(entries))
}

fn skolem_4m(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 0..2 * m {
        p.push((2 * r + 2, 2 * m - r, 2 * m + 2 + r));
    }
    p.push((1, 7 * m, 7 * m + 1));
    p.push((4 * m - 1, 2 * m + 1, 6 * m));
    for r in 0..m - 1 {
        p.push((2 * m + 2 * r + 1, 5 * m + 1 - r, 7 * m + r + 2));
    }
    p.push((2 * m - 1, 4 * m + 2, 6 * m + 1));
    for r in 0..m.saturating_sub(2) {
        p.push((2 * m - 3 - 2 * r, 5 * m + 2 + r, 7 * m - 1 - r));
    }
    place(8 * m, p)
}

fn skolem_4m1(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 1..=2 * m {
        p.push((2 * r, 2 * m + 1 - r, 2 * m + 1 + r));
    }
    p.push((4 * m + 1, 2 * m + 1, 6 * m + 2));
    for r in 1..=m {
        p.push((2 * m - 1 + 2 * r, 5 * m + 2 - r, 7 * m + 1 + r));
    }
    p.push((2 * m - 1, 6 * m + 3, 8 * m + 2));
    p.push((1, 5 * m + 2, 5 * m + 3));
    for r in 1..m.saturating_sub(1) {
        p.push((2 * r + 1, 6 * m + 2 - r, 6 * m + 3 + r));
    }
    place(8 * m + 2, p)
}

fn hooked_4m2(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 1..=2 * m + 1 {
        p.push((2 * r, 2 * m + 2 - r, 2 * m + 2 + r));
    }
    p.push((1, 7 * m + 4, 7 * m + 5));
    for r in 1..=m {
        p.push((1 + 2 * r, 6 * m + 2 - r, 6 * m + 3 + r));
    }
    p.push((2 * m + 3, 6 * m + 2, 8 * m + 5));
    for r in 1..m.saturating_sub(1) {
        p.push((2 * m + 3 + 2 * r, 5 * m + 2 - r, 7 * m + 5 + r));
    }
    p.push((4 * m + 1, 2 * m + 2, 6 * m + 3));
    place(8 * m + 5, p)
}

fn hooked_4m3(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 1..=2 * m + 1 {
        p.push((2 * r, 2 * m + 2 - r, 2 * m + 2 + r));
    }
    p.push((1, 5 * m + 4, 5 * m + 5));
    for r in 1..m {
        p.push((1 + 2 * r, 6 * m + 5 - r, 6 * m + 6 + r));
    }
    p.push((2 * m + 1, 6 * m + 6, 8 * m + 7));
    for r in 1..=m {
        p.push((2 * m + 1 + 2 * r, 5 * m + 4 - r, 7 * m + 5 + r));
    }
    p.push((4 * m + 3, 2 * m + 2, 6 * m + 5));
    place(8 * m + 7, p)
}

/// Small orders where the tables do not apply. Each has no right endpoint
/// before position ⌈(n+3)/2⌉ where that is possible at all.
const SKOLEM_4: [u32; 8] = [4, 2, 3, 2, 4, 3, 1, 1];
const SKOLEM_5: [u32; 10] = [5, 2, 4, 2, 3, 5, 4, 3, 1, 1];
const HOOKED_2: [u32; 5] = [1, 1, 2, 0, 2];
const HOOKED_3: [u32; 7] = [3, 1, 1, 3, 2, 0, 2];
const HOOKED_6: [u32; 13] = [6, 4, 5, 1, 1, 4, 6, 5, 2, 3, 2, 0, 3];

/// Skolem sequence of order `n ≡ 0,1 (mod 4)`.
pub fn gen_skolem(n: u32) -> Result<SkolemTypeSequence> {
    let seq = match (n % 4, n) {
        (_, 0) => return Err(Error::OutOfRange { what: "order", value: 0 }),
        (1, 1) => SkolemTypeSequence::from([1, 1]),
        (0, 4) => SKOLEM_4.into(),
        (1, 5) => SKOLEM_5.into(),
        (0, _) => skolem_4m(n / 4)?,
        (1, _) => skolem_4m1(n / 4)?,
        _ => return Err(Error::NoSuchSequence { kind: "skolem".into(), order: n }),
    };
    checked(seq, &SequenceKind::Skolem, n)
}

/// Hooked Skolem sequence of order `n ≡ 2,3 (mod 4)`, hook at position `2n`.
pub fn gen_hooked_skolem(n: u32) -> Result<SkolemTypeSequence> {
    let seq = match (n % 4, n) {
        (2, 2) => HOOKED_2.into(),
        (3, 3) => HOOKED_3.into(),
        (2, 6) => HOOKED_6.into(),
        (2, _) => hooked_4m2(n / 4)?,
        (3, _) => hooked_4m3(n / 4)?,
        _ => return Err(Error::NoSuchSequence { kind: "hooked-skolem".into(), order: n }),
    };
    checked(seq, &SequenceKind::HookedSkolem, n)
}

/// Skolem sequence when `n ≡ 0,1 (mod 4)`, hooked Skolem otherwise.
pub fn gen_skolem_or_hooked(n: u32) -> Result<SkolemTypeSequence> {
    if n % 4 <= 1 {
        gen_skolem(n)
    } else {
        gen_hooked_skolem(n)
    }
}

/// Langford sequence with defect `d` and order `2d-1`.
pub fn gen_langford_doubledefect(d: u32) -> Result<SkolemTypeSequence> {
    if d == 0 {
        return Err(Error::OutOfRange { what: "defect", value: 0 });
    }
    let mut p = Vec::new();
    for r in 0..d {
        p.push((d + 2 * r, d - r, 2 * d + r));
    }
    for r in 0..d - 1 {
        p.push((d + 2 * r + 1, 2 * d - 1 - r, 3 * d + r));
    }
    checked(place(2 * (2 * d - 1), p)?, &SequenceKind::Langford { defect: d }, 2 * d - 1)
}

fn near_hooked_4m1(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 1..=2 * m {
        p.push((2 * r + 1, 2 * m + 1 - r, 2 * m + 2 + r));
    }
    p.push((4 * m - 4, 2 * m + 2, 6 * m - 2));
    p.push((4 * m - 2, 2 * m + 1, 6 * m - 1));
    for r in 0..m - 2 {
        p.push((2 * m + 2 * r, 5 * m - r, 7 * m + r));
    }
    for r in 0..m - 3 {
        p.push((2 * r + 4, 6 * m - r - 3, 6 * m + r + 1));
    }
    p.push((2 * m - 2, 6 * m, 8 * m - 2));
    p.push((1, 7 * m - 2, 7 * m - 1));
    p.push((2, 8 * m - 1, 8 * m + 1));
    place(8 * m + 1, p)
}

fn near_plain_4m3(m: u32) -> Result<SkolemTypeSequence> {
    let mut p = Vec::new();
    for r in 1..=2 * m + 1 {
        p.push((2 * r + 1, 2 * m + 2 - r, 2 * m + 3 + r));
    }
    p.push((4 * m, 2 * m + 2, 6 * m + 2));
    p.push((4 * m - 2, 2 * m + 3, 6 * m + 1));
    for r in 0..m - 2 {
        p.push((2 * m + 2 + 2 * r, 5 * m + 2 - r, 7 * m + 4 + r));
    }
    for r in 0..m - 2 {
        p.push((2 * r + 4, 6 * m - r, 6 * m + 4 + r));
    }
    p.push((1, 7 * m + 2, 7 * m + 3));
    p.push((2 * m, 6 * m + 3, 8 * m + 3));
    p.push((2, 8 * m + 2, 8 * m + 4));
    place(8 * m + 4, p)
}

/// Near-Skolem sequence of odd order `n` omitting `n-1`; hooked iff
/// `n ≡ 1 (mod 4)`. With `n = 2k+1` no right endpoint lies in `[1, k+2]`.
pub fn gen_near_skolem_topdefect(n: u32) -> Result<SkolemTypeSequence> {
    let unsupported = |reason: &str| Error::UnsupportedOrder { order: n, reason: reason.into() };
    match n % 4 {
        1 if n >= 13 => checked(
            near_hooked_4m1(n / 4)?,
            &SequenceKind::HookedNearSkolem { defect: n - 1 },
            n,
        ),
        3 if n >= 11 => checked(near_plain_4m3(n / 4)?, &SequenceKind::NearSkolem { defect: n - 1 }, n),
        1 => Err(unsupported("n = 4m+1 needs m >= 3")),
        3 => Err(unsupported("n = 4m+3 needs m >= 2")),
        _ => Err(unsupported("order must be odd")),
    }
}

fn twofold_odd(n: u32) -> Vec<(u32, u32, u32)> {
    let mut p = Vec::new();
    for r in 0..=(n - 1) / 2 {
        p.push((2 * r + 1, (n + 1) / 2 - r, (n + 3) / 2 + r));
        p.push((2 * r + 1, (3 * n + 3) / 2 - r, (3 * n + 5) / 2 + r));
    }
    p.push((n - 1, 2 * n + 3, 3 * n + 2));
    p.push((n - 1, (5 * n + 5) / 2, (7 * n + 3) / 2));
    if n >= 5 {
        for r in 0..=(n - 5) / 2 {
            p.push((2 * r + 2, (5 * n + 3) / 2 - r, (5 * n + 3) / 2 + r + 2));
            p.push((2 * r + 2, (7 * n + 1) / 2 - r, (7 * n + 1) / 2 + r + 2));
        }
    }
    p
}

fn twofold_even(n: u32) -> Vec<(u32, u32, u32)> {
    let mut p = Vec::new();
    for r in 0..=(n - 2) / 2 {
        p.push((2 * r + 1, n / 2 - r, (n + 2) / 2 + r));
        p.push((2 * r + 1, 3 * n / 2 - r, (3 * n + 2) / 2 + r));
    }
    p.push((n, 2 * n + 1, 3 * n + 1));
    p.push((n, (5 * n + 2) / 2, (7 * n + 2) / 2));
    if n >= 4 {
        for r in 0..=(n - 4) / 2 {
            p.push((2 * r + 2, 5 * n / 2 - r, 5 * n / 2 + r + 2));
            p.push((2 * r + 2, 7 * n / 2 - r, 7 * n / 2 + r + 2));
        }
    }
    p
}

/// Two-fold Skolem sequence of order `n` from the parity tables.
pub fn gen_twofold_skolem(n: u32) -> Result<SkolemTypeSequence> {
    let seq = match n {
        0 => return Err(Error::OutOfRange { what: "order", value: 0 }),
        1 => SkolemTypeSequence::from([1, 1, 1, 1]),
        _ if n % 2 == 1 => place(4 * n, twofold_odd(n))?,
        _ => place(4 * n, twofold_even(n))?,
    };
    checked(seq, &SequenceKind::TwoFoldSkolem, n)
}

/// `P_x`, two-fold over `{1} ∪ {4i : 1 ≤ i < x}`; trimmed gives `P'_x`,
/// which drops the trailing `(1,1)` (and `P'_0 = (1,1)`).
pub fn gen_power4(x: u32, trimmed: bool) -> Result<SkolemTypeSequence> {
    if x == 0 {
        return if trimmed {
            Ok(SkolemTypeSequence::from([1, 1]))
        } else {
            Err(Error::OutOfRange { what: "x", value: 0 })
        };
    }
    let mut p = vec![(1, 2 * x - 1, 2 * x), (1, 4 * x - 1, 4 * x)];
    for r in 1..x {
        p.push((4 * r, 2 * x - 2 * r - 1, 2 * x + 2 * r - 1));
        p.push((4 * r, 2 * x - 2 * r, 2 * x + 2 * r));
    }
    let symbols: BTreeSet<u32> = std::iter::once(1).chain((1..x).map(|i| 4 * i)).collect();
    let order = symbols.len() as u32;
    let full = checked(place(4 * x, p)?, &SequenceKind::TwoFoldSkolemType { symbols }, order)?;
    if trimmed {
        let mut entries = full.into_entries();
        entries.truncate(entries.len() - 2);
        Ok(SkolemTypeSequence::new(entries))
    } else {
        Ok(full)
    }
}

/// The five small two-fold sequences `C^0 … C^4`.
pub fn fixed_small_twofold(y: u32) -> Result<SkolemTypeSequence> {
    let entries: &[u32] = match y {
        0 => &[],
        1 => &[2, 2, 2, 2],
        2 => &[2, 3, 2, 3, 3, 2, 3, 2],
        3 => &[2, 2, 2, 2, 5, 3, 5, 3, 3, 5, 3, 5],
        4 => &[6, 6, 2, 2, 2, 2, 6, 6, 5, 3, 5, 3, 3, 5, 3, 5],
        _ => return Err(Error::OutOfRange { what: "y", value: y as i64 }),
    };
    Ok(SkolemTypeSequence::new(entries.to_vec()))
}

/// Two-fold Langford sequence with defect `6k-1` and order `4k-1`.
pub fn gen_twofold_langford(k: u32) -> Result<SkolemTypeSequence> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", value: 0 });
    }
    let mut p = Vec::new();
    for r in 1..2 * k {
        let h = 10 * k - 2 - 2 * r;
        p.push((h, r, 10 * k - 2 - r));
        p.push((h, 2 * k - 1 + r, 12 * k - 3 - r));
    }
    for r in 1..=2 * k {
        let h = 10 * k - 1 - 2 * r;
        p.push((h, 4 * k - 2 + r, 14 * k - 3 - r));
        p.push((h, 6 * k - 2 + r, 16 * k - 3 - r));
    }
    checked(
        place(4 * (4 * k - 1), p)?,
        &SequenceKind::TwoFoldLangford { defect: 6 * k - 1 },
        4 * k - 1,
    )
}
