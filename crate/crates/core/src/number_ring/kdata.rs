//! Orders of the named finite groups `H^{2,m}` and `H^{1,m}_tor`, where known.

use crate::dirichlet::{torsion_w_n, KTheoryData, NumberFieldRecord};
use std::collections::BTreeMap;

/// `h_m = |H^{2,m}|` and `w_m = |H^{1,m}_tor|` by twist `m >= 1`; at `m = 1`
/// these are the class number and the number of roots of unity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KSymbols {
    pub h: BTreeMap<i64, u64>,
    pub w: BTreeMap<i64, u64>,
}

impl KSymbols {
    pub fn from_data(k: &KTheoryData) -> KSymbols {
        let mut out = KSymbols::default();
        for (&m, e) in &k.entries {
            out.h.insert(m, e.h);
            out.w.insert(m, e.w);
        }
        out
    }

    /// K-theory data first; `w_m` falls back to the cyclotomic computation
    /// when the record carries characters.
    pub fn from_record(f: &NumberFieldRecord) -> KSymbols {
        let mut out = f.invariants.as_ref().map(KSymbols::from_data).unwrap_or_default();
        if f.characters.is_some() {
            for m in 1..=12 {
                if let std::collections::btree_map::Entry::Vacant(e) = out.w.entry(m) {
                    if let Ok(w) = torsion_w_n(f, m) {
                        e.insert(w);
                    }
                }
            }
        }
        out
    }

    pub fn h(&self, m: i64) -> Option<u64> {
        self.h.get(&m).copied()
    }

    pub fn w(&self, m: i64) -> Option<u64> {
        self.w.get(&m).copied()
    }
}
