//! Hand-made labellings of `C3^t C4^s` for `t ≤ 3` and small `s`.
//!
//! [`small_table`] returns the rows exactly as printed. Eight of them do
//! not verify; [`small_table_repaired`] patches those so the dispatcher can
//! rely on every row.

use super::small_tables_data::ROWS;
use crate::error::{Error, Result};
use crate::windmill::{expected_mode, Labelling, Mode, Vane, WindmillSpec};

/// Vanes added to every `t = 1` row.
pub const SHARED_T1: [&[u32]; 2] = [&[0, 3, 2, 6], &[0, 5, 7]];

/// Largest `s` in the table for `t`.
pub fn table_bound(t: u32) -> Option<u32> {
    match t {
        1 | 2 => Some(20),
        3 => Some(19),
        _ => None,
    }
}

fn row(t: u32, s: u32) -> Option<&'static [&'static [u32]]> {
    ROWS.iter().find(|r| r.0 == t && r.1 == s).map(|r| r.2)
}

fn to_vanes(vs: &[&[u32]]) -> Vec<Vane> {
    vs.iter().map(|v| Vane(v.to_vec())).collect()
}

fn claimed_mode(t: u32) -> Mode {
    if t == 1 {
        Mode::Graceful
    } else {
        Mode::NearGraceful
    }
}

fn literal_vanes(t: u32, s: u32) -> Result<Vec<Vane>> {
    if table_bound(t).map_or(true, |b| s == 0 || s > b) {
        return Err(Error::NotInTable { t, s });
    }
    let mut vanes = if t == 1 && s == 1 { Vec::new() } else { to_vanes(row(t, s).ok_or(Error::NotInTable { t, s })?) };
    if t == 1 {
        for v in to_vanes(&SHARED_T1) {
            if !vanes.contains(&v) {
                vanes.push(v);
            }
        }
    }
    Ok(vanes)
}

fn build(t: u32, s: u32, vanes: Vec<Vane>) -> Result<Labelling> {
    let spec = WindmillSpec::new(vanes_spec(&vanes))?;
    if spec.count_of(3) != t || spec.count_of(4) != s {
        return Err(Error::MalformedLabelling(format!(
            "row ({t},{s}) has {} triangles and {} squares",
            spec.count_of(3),
            spec.count_of(4)
        )));
    }
    Labelling::new(spec, claimed_mode(t), vanes)
}

fn vanes_spec(vanes: &[Vane]) -> Vec<(u32, u32)> {
    let mut counts = std::collections::BTreeMap::new();
    for v in vanes {
        *counts.entry(v.cycle()).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// The literal row for `C3^t C4^s`, vane for vane, in the mode the table
/// claims. Some rows have the wrong vane count or do not verify.
pub fn small_table(t: u32, s: u32) -> Result<Labelling> {
    let vanes = literal_vanes(t, s)?;
    let spec = WindmillSpec::new(vanes_spec(&vanes))?;
    Labelling::new(spec, claimed_mode(t), vanes)
}

/// The literal row with known defects patched. Every row verifies.
pub fn small_table_repaired(t: u32, s: u32) -> Result<Labelling> {
    let mut vanes = literal_vanes(t, s)?;
    let add = |vanes: &mut Vec<Vane>, extra: &[&[u32]]| vanes.extend(to_vanes(extra));
    match (t, s) {
        // The row repeats s = 9. Reuse the first seven squares of the
        // t = 2, s = 8 row with both outer labels lowered by one.
        (1, 8) => {
            vanes = row(2, 8)
                .unwrap_or_default()
                .iter()
                .take(7)
                .map(|v| Vane(vec![0, v[1] - 1, v[2], v[3] - 1]))
                .chain(to_vanes(&SHARED_T1))
                .collect();
        }
        // Rows that stop one to three squares short; the low squares of
        // the s = 2, 3, 4 rows fill exactly the missing labels.
        (1, 13) | (1, 17) => add(&mut vanes, &[&[0, 9, 1, 11]]),
        (1, 14) | (1, 18) => add(&mut vanes, &[&[0, 11, 1, 15], &[0, 12, 4, 13]]),
        (1, 19) => add(&mut vanes, &[&[0, 13, 1, 19], &[0, 14, 4, 15], &[0, 16, 8, 17]]),
        // Label 8 is used twice and edge 6 is missing.
        (2, 4) | (2, 19) => {
            let bad = [Vane::from([0, 14, 1, 20]), Vane::from([0, 17, 8, 18])];
            vanes.retain(|v| !bad.contains(v));
            vanes.extend([Vane::from([0, 14, 1, 18]), Vane::from([0, 19, 10, 20])]);
        }
        _ => {}
    }
    let l = build(t, s, vanes)?;
    debug_assert_eq!(l.mode(), expected_mode(l.spec()));
    Ok(l)
}

/// Rows whose literal form does not verify.
pub const DEFECTIVE_ROWS: [(u32, u32); 8] = [(1, 8), (1, 13), (1, 14), (1, 17), (1, 18), (1, 19), (2, 4), (2, 19)];
