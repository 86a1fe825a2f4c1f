//! Embedded labellings for the `C3^t C4^s` cells no general rule reaches.
//! Each file carries its provenance and is verified when first loaded.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use crate::windmill::{verify, Labelling};

const FILES: [(u32, u32, &str); 5] = [
    (1, 21, include_str!("../../fixtures/c3c4_t1_s21.json")),
    (1, 25, include_str!("../../fixtures/c3c4_t1_s25.json")),
    (2, 25, include_str!("../../fixtures/c3c4_t2_s25.json")),
    (3, 20, include_str!("../../fixtures/c3c4_t3_s20.json")),
    (3, 25, include_str!("../../fixtures/c3c4_t3_s25.json")),
];

static STORE: Lazy<BTreeMap<(u32, u32), Labelling>> = Lazy::new(|| {
    FILES
        .iter()
        .map(|&(t, s, text)| {
            let l = Labelling::from_json(text).unwrap_or_else(|e| panic!("fixture ({t},{s}) is malformed: {e}"));
            let r = verify(&l);
            assert!(r.ok, "fixture ({t},{s}) does not verify: {r:?}");
            assert_eq!((l.spec().count_of(3), l.spec().count_of(4)), (t, s), "fixture ({t},{s}) has the wrong spec");
            ((t, s), l)
        })
        .collect()
});

/// The embedded labelling of `C3^t C4^s`, if there is one.
pub fn fixture(t: u32, s: u32) -> Option<Labelling> {
    STORE.get(&(t, s)).cloned()
}

/// Cells with an embedded labelling.
pub fn fixture_cells() -> Vec<(u32, u32)> {
    STORE.keys().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load_and_verify() {
        assert_eq!(fixture_cells().len(), FILES.len());
        for (t, s) in fixture_cells() {
            let l = fixture(t, s).unwrap();
            assert!(l.provenance().is_some());
        }
    }
}
