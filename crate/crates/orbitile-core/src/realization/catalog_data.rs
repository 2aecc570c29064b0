//! Frozen realization catalog: rotation centers as reflection words applied
//! to base-triangle corners, produced by the orbit search in
//! `realization::search` (see the ignored `regenerate_catalog` test in the
//! `orbitile` crate) and verified by the test suite.

use alloc::string::String;
use alloc::vec::Vec;

use super::{BaseVertex, CatalogEntry, CenterSpec};

pub(super) struct RawCenter {
    pub vertex: u8,
    pub order: u32,
    pub word: &'static [u8],
}

pub(super) struct RawEntry {
    pub symbol: &'static str,
    pub label: &'static str,
    pub notes: &'static str,
    pub centers: &'static [RawCenter],
}

pub(super) static RAW_ENTRIES: &[RawEntry] = &[];

pub(super) fn entries() -> Vec<CatalogEntry> {
    RAW_ENTRIES
        .iter()
        .map(|raw| CatalogEntry {
            symbol: String::from(raw.symbol),
            label: String::from(raw.label),
            notes: String::from(raw.notes),
            centers: raw
                .centers
                .iter()
                .map(|c| CenterSpec {
                    vertex: BaseVertex::from_index(c.vertex as usize)
                        .expect("vertex index in 0..3"),
                    word: c.word.to_vec(),
                    order: c.order,
                })
                .collect(),
        })
        .collect()
}
