//! `C3^t C4^s`: direct constructions, the small tables, extension by a
//! two-fold Langford sequence, and the coverage audit.

use serde::Serialize;

use super::small_tables::{small_table_repaired, table_bound};
use super::fixtures::fixture;
use super::{dutch_triangles, finish, ConstructionTrace, Rule};
use crate::assemble::{quadruples_from_twofold, triples_from_pairs, TripleForm, TwoFoldFamily};
use crate::error::{Error, Result};
use crate::sequences::{
    concat, double, fixed_small_twofold, gen_hooked_skolem_with_tail, gen_langford_doubledefect, gen_power4,
    gen_twofold_langford, gen_twofold_skolem, pairs_of, HookedTail, SkolemTypeSequence,
};
use crate::windmill::{expected_mode, verify, Labelling, Vane, WindmillSpec};

/// Triangles (as unordered label pairs) a near-graceful labelling with
/// `t ≡ 2,3 (mod 4)` triangles and `s` squares must contain before it can
/// be extended.
pub fn required_triangles(t: u32, s: u32) -> Vec<(u32, u32)> {
    let (w, x) = (t / 4, t % 4);
    let b = 4 * s + 12 * w;
    match x {
        2 => vec![(b + 5, b + 7)],
        3 => vec![(b + 7, b + 8), (b + 6, b + 10)],
        _ => Vec::new(),
    }
}

fn find_triangle(vanes: &[Vane], (a, b): (u32, u32)) -> Option<usize> {
    vanes.iter().position(|v| {
        let l = v.labels();
        l.len() == 3 && ((l[1] == a && l[2] == b) || (l[1] == b && l[2] == a))
    })
}

pub fn has_required_triangles(l: &Labelling) -> bool {
    let (t, s) = (l.spec().count_of(3), l.spec().count_of(4));
    required_triangles(t, s).into_iter().all(|p| find_triangle(l.vanes(), p).is_some())
}

/// Extension case (1 to 4) for `t` triangles: `t mod 4` plus one.
pub fn extension_case(t: u32) -> u32 {
    t % 4 + 1
}

/// Range of `4s` for which a labelling with `t` triangles and `s` squares
/// extends by `4k-1` squares, or `None` when the case does not apply
/// (`t ≡ 0` needs `t ≥ 4`).
pub fn extension_bounds(t: u32, k: u32) -> Option<(i64, i64)> {
    let (w, x) = ((t / 4) as i64, t % 4);
    let k = k as i64;
    let (lo, hi) = match x {
        0 if w >= 1 => (2, -5),
        0 => return None,
        1 => (-1, -8),
        2 => (-2, -9),
        _ => (-3, -10),
    };
    Some((2 * k - 12 * w + lo, 6 * k - 12 * w + hi))
}

fn admits(t: u32, s: u32, k: u32) -> bool {
    extension_bounds(t, k).is_some_and(|(lo, hi)| (lo..=hi).contains(&(4 * s as i64)))
}

/// Adds `4k-1` squares from the two-fold Langford sequence with defect
/// `6k-1`, and for near-graceful cases moves the required triangles up.
pub fn extend_c3c4(base: &Labelling, k: u32, case: u32) -> Result<Labelling> {
    let (t, s) = (base.spec().count_of(3), base.spec().count_of(4));
    if base.spec().classes().len() > 2 || t == 0 {
        return Err(Error::PreconditionFailed("base must be a C3^tC4^s labelling with t ≥ 1".into()));
    }
    if case != extension_case(t) {
        return Err(Error::BoundViolation(format!("case {case} does not apply to t = {t}")));
    }
    if k == 0 || !admits(t, s, k) {
        return Err(Error::BoundViolation(format!("s = {s} outside the extension range for t = {t}, k = {k}")));
    }
    let r = verify(base);
    if !r.ok {
        return Err(Error::PreconditionFailed(format!("base does not verify: {r:?}")));
    }
    let (w, x) = (t / 4, t % 4);
    let b = 4 * s + 12 * w;
    let c = b + [0, 3, 4, 5][x as usize];
    let mut vanes = base.vanes().to_vec();
    let top = 16 * k + b;
    let moves: Vec<((u32, u32), [u32; 3])> = match x {
        2 => vec![((b + 5, b + 7), [0, top + 1, top + 3])],
        3 => vec![((b + 7, b + 8), [0, top + 3, top + 4]), ((b + 6, b + 10), [0, top + 2, top + 6])],
        _ => Vec::new(),
    };
    for (old, new) in moves {
        let i = find_triangle(&vanes, old).ok_or(Error::MissingRequiredTriangle { a: old.0, b: old.1 })?;
        vanes[i] = Vane::from(new);
    }
    vanes.extend(quadruples_from_twofold(&gen_twofold_langford(k)?, c, TwoFoldFamily::TwoFoldLangford { k })?);
    finish(WindmillSpec::new([(3, t), (4, s + 4 * k - 1)])?, vanes, "extension")
}

/// One direct recipe: squares from `seq` shifted by `t`, triangles above.
struct Recipe {
    rule: Rule,
    seq: SkolemTypeSequence,
    family: TwoFoldFamily,
    params: Vec<(&'static str, i64)>,
}

fn direct_recipes(t: u32, s: u32) -> Result<Vec<Recipe>> {
    let mut out = Vec::new();
    let recipe = |rule, seq, family, params: &[(&'static str, i64)]| Recipe { rule, seq, family, params: params.to_vec() };
    let dl = |d: u32| double(&gen_langford_doubledefect(d)?);
    if s <= t {
        out.push(recipe(Rule::TwoFoldSkolem, gen_twofold_skolem(s)?, TwoFoldFamily::TwoFoldSkolem, &[]));
    }
    if t < 4 {
        return Ok(out);
    }
    if t < s && s <= 2 * t {
        out.push(recipe(Rule::ParityTables, gen_twofold_skolem(s)?, TwoFoldFamily::ParityTable, &[]));
    }
    if s == 2 * t + 1 {
        let d = t + 1;
        out.push(recipe(Rule::DoubleLangford, dl(d)?, TwoFoldFamily::DoubleLangford { defect: d }, &[("d", d as i64)]));
    }
    if 2 * t + 2 <= s && s <= 3 * t + 1 {
        let k = s - (2 * t + 1);
        let seq = concat(&[dl(t + 1)?, gen_twofold_skolem(k)?])?;
        out.push(recipe(Rule::DoubleLangfordPlusTwoFold, seq, TwoFoldFamily::Composite, &[("d", t as i64 + 1), ("k", k as i64)]));
    }
    if 3 * t + 2 <= s && 2 * s <= 13 * t + 37 {
        let (ti, si) = (t as i64, s as i64);
        for x in 1..=(t + 3) / 2 {
            let xi = x as i64;
            for y in 0..=4u32 {
                let yi = y as i64;
                if si == 2 * ti + 9 * xi + yi - 3 && ti >= 2 * xi - 3 {
                    let d = t + 4 * x - 1;
                    let seq = concat(&[gen_power4(x, true)?, dl(d)?, gen_power4(0, true)?, fixed_small_twofold(y)?])?;
                    out.push(recipe(
                        Rule::TrimmedPowerComposite,
                        seq,
                        TwoFoldFamily::Composite,
                        &[("x", xi), ("y", yi), ("d", d as i64)],
                    ));
                }
                if si == 2 * ti + 9 * xi + yi + 1 && ti >= 2 * xi - 3 && !(y == 4 && ti + 2 * xi <= 6) {
                    let d = t + 4 * x + 1;
                    let seq = concat(&[gen_power4(x, false)?, dl(d)?, fixed_small_twofold(y)?])?;
                    out.push(recipe(Rule::PowerComposite, seq, TwoFoldFamily::Composite, &[("x", xi), ("y", yi), ("d", d as i64)]));
                }
            }
        }
    }
    Ok(out)
}

/// Triangles above `c = 4s+t`; when `need` is set and `t ≥ 6`, built from a
/// hooked Skolem sequence whose tail yields the triangles an extension
/// needs.
fn triangles_for(t: u32, s: u32, need: bool) -> Result<Vec<Vane>> {
    let c = 4 * s + t;
    let tail = match t % 4 {
        2 if need && t >= 6 => Some(HookedTail::Two),
        3 if need && t >= 7 => Some(HookedTail::OneFour),
        _ => None,
    };
    match tail {
        Some(tail) => triples_from_pairs(&pairs_of(&gen_hooked_skolem_with_tail(t, tail)?)?, c, TripleForm::Shifted),
        None => dutch_triangles(t, c),
    }
}

fn try_direct(t: u32, s: u32, need: bool) -> Result<Option<(Labelling, ConstructionTrace)>> {
    let spec = WindmillSpec::new([(3, t), (4, s)])?;
    if s == 0 {
        let l = finish(spec, triangles_for(t, 0, need)?, "C3^t")?;
        let ok = !need || has_required_triangles(&l);
        return Ok(ok.then(|| (l, ConstructionTrace::new(Rule::Dutch).with("t", t).with("c", t))));
    }
    for r in direct_recipes(t, s)? {
        let Ok(mut vanes) = quadruples_from_twofold(&r.seq, t, r.family) else { continue };
        vanes.extend(triangles_for(t, s, need)?);
        let Ok(l) = finish(spec.clone(), vanes, r.rule.id()) else { continue };
        if need && !has_required_triangles(&l) {
            continue;
        }
        let mut trace = ConstructionTrace::new(r.rule).with("t", t).with("s", s).with("c", t);
        for (k, v) in r.params {
            trace = trace.with(k, v);
        }
        return Ok(Some((l, trace)));
    }
    Ok(None)
}

fn label_inner(t: u32, s: u32, need: bool) -> Result<(Labelling, ConstructionTrace)> {
    if let Some(found) = try_direct(t, s, need)? {
        return Ok(found);
    }
    if table_bound(t).is_some_and(|b| 1 <= s && s <= b) {
        let l = small_table_repaired(t, s)?;
        if !need || has_required_triangles(&l) {
            return Ok((l, ConstructionTrace::new(Rule::SmallTable).with("t", t).with("s", s)));
        }
    }
    for k in 1..=s.div_ceil(4) {
        let Some(sp) = (s + 1).checked_sub(4 * k) else { break };
        if !admits(t, sp, k) {
            continue;
        }
        let Ok((base, child)) = label_inner(t, sp, t % 4 >= 2) else { continue };
        let Ok(l) = extend_c3c4(&base, k, extension_case(t)) else { continue };
        let trace = ConstructionTrace::new(Rule::TwoFoldLangfordExtension)
            .with("t", t)
            .with("s", s)
            .with("k", k)
            .with("s_prime", sp)
            .with("case", extension_case(t))
            .child(child);
        return Ok((l, trace));
    }
    if let Some(l) = fixture(t, s) {
        if !need || has_required_triangles(&l) {
            return Ok((l, ConstructionTrace::new(Rule::Fixture).with("t", t).with("s", s)));
        }
    }
    Err(Error::Unlabellable(format!("no construction applies to C3^{t}C4^{s}")))
}

/// Labels `C3^t C4^s` (`t ≥ 1`), graceful when `t ≡ 0,1 (mod 4)` and
/// near-graceful otherwise. Direct constructions are tried first, then the
/// small tables, then extension of a smaller labelling (smallest `k`), then
/// embedded fixtures.
pub fn label_c3c4(t: u32, s: u32) -> Result<(Labelling, ConstructionTrace)> {
    if t == 0 {
        return Err(Error::UnsupportedCombination("labellings without triangles are not constructed".into()));
    }
    let (l, trace) = label_inner(t, s, false)?;
    debug_assert_eq!(l.mode(), expected_mode(l.spec()));
    Ok((l, trace))
}

/// Checks a trace against the preconditions of its rules, recursively.
pub fn replay_trace(trace: &ConstructionTrace) -> Result<()> {
    let get = |k: &str| {
        trace
            .param(k)
            .ok_or_else(|| Error::PreconditionFailed(format!("{} trace lacks {k}", trace.rule)))
    };
    let fail = |why: String| Err(Error::PreconditionFailed(format!("{trace}: {why}")));
    let t = get("t")?;
    let s = trace.param("s").unwrap_or(0);
    let ok = match trace.rule {
        Rule::Dutch => s == 0 && get("c")? == t,
        Rule::TwoFoldSkolem => 1 <= s && s <= t && get("c")? == t,
        Rule::ParityTables => t >= 4 && t < s && s <= 2 * t,
        Rule::DoubleLangford => t >= 4 && s == 2 * t + 1 && get("d")? == t + 1,
        Rule::DoubleLangfordPlusTwoFold => t >= 4 && 2 * t + 2 <= s && s <= 3 * t + 1 && get("k")? == s - 2 * t - 1,
        Rule::TrimmedPowerComposite | Rule::PowerComposite => {
            let (x, y) = (get("x")?, get("y")?);
            let off = if trace.rule == Rule::PowerComposite { 1 } else { -3 };
            t >= 4 && 3 * t + 2 <= s && 2 * s <= 13 * t + 37 && s == 2 * t + 9 * x + y + off && t >= 2 * x - 3
        }
        Rule::SmallTable => table_bound(t as u32).is_some_and(|b| 1 <= s && s <= b as i64),
        Rule::TwoFoldLangfordExtension => {
            let (k, sp) = (get("k")?, get("s_prime")?);
            let [child] = trace.children.as_slice() else { return fail("expected one child".into()) };
            replay_trace(child)?;
            child.param("t") == Some(t)
                && child.param("s").unwrap_or(0) == sp
                && sp + 4 * k - 1 == s
                && admits(t as u32, sp as u32, k as u32)
        }
        Rule::Fixture => fixture(t as u32, s as u32).is_some(),
        other => return fail(format!("{other} is not a C3^tC4^s rule")),
    };
    if ok {
        Ok(())
    } else {
        fail("preconditions do not hold".into())
    }
}

/// What the dispatcher would use for one cell, decided from the parameter
/// ranges alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditCell {
    pub t: u32,
    pub s: u32,
    /// `None` marks a gap: no general rule reaches the cell.
    pub rule: Option<Rule>,
}

fn planned_rule(t: u32, s: u32, covered: &dyn Fn(u32) -> bool) -> Option<Rule> {
    if s == 0 {
        return Some(Rule::Dutch);
    }
    if s <= t {
        return Some(Rule::TwoFoldSkolem);
    }
    if t >= 4 {
        if s <= 2 * t {
            return Some(Rule::ParityTables);
        }
        if s == 2 * t + 1 {
            return Some(Rule::DoubleLangford);
        }
        if s <= 3 * t + 1 {
            return Some(Rule::DoubleLangfordPlusTwoFold);
        }
        if 2 * s <= 13 * t + 37 {
            let (ti, si) = (t as i64, s as i64);
            for x in 1..=(ti + 3) / 2 {
                for y in 0..=4 {
                    if si == 2 * ti + 9 * x + y - 3 && ti >= 2 * x - 3 {
                        return Some(Rule::TrimmedPowerComposite);
                    }
                    if si == 2 * ti + 9 * x + y + 1 && ti >= 2 * x - 3 && !(y == 4 && ti + 2 * x <= 6) {
                        return Some(Rule::PowerComposite);
                    }
                }
            }
        }
    }
    if table_bound(t).is_some_and(|b| s <= b) {
        return Some(Rule::SmallTable);
    }
    let ext = (1..=s.div_ceil(4))
        .filter_map(|k| (s + 1).checked_sub(4 * k).map(|sp| (k, sp)))
        .any(|(k, sp)| admits(t, sp, k) && covered(sp));
    ext.then_some(Rule::TwoFoldLangfordExtension)
}

/// The rule for every cell `1 ≤ t ≤ t_max`, `0 ≤ s ≤ s_max`, by interval
/// arithmetic. An extension counts when its base cell is reachable at all,
/// including through a fixture.
pub fn coverage_audit(t_max: u32, s_max: u32) -> Vec<AuditCell> {
    let mut out = Vec::new();
    for t in 1..=t_max {
        let mut reach: Vec<bool> = Vec::new();
        for s in 0..=s_max {
            let rule = planned_rule(t, s, &|sp| reach[sp as usize]);
            reach.push(rule.is_some() || fixture(t, s).is_some());
            out.push(AuditCell { t, s, rule });
        }
    }
    out
}
