//! Weil-etale, Weil-Arakelov and compact-support Weil-Arakelov cohomology of
//! `Spec O_F`, as symbolic tables of finitely generated groups.

use super::kdata::KSymbols;
use crate::dirichlet::NumberFieldRecord;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// `[n = i mod 2]`.
pub fn delta(i: i64, n: i64) -> i64 {
    i64::from((i - n).rem_euclid(2) == 0)
}

/// `delta_{i,n}` if `1 <= i <= n` or `n < i < 0`, else 0.
pub fn epsilon(i: i64, n: i64) -> i64 {
    if (1 <= i && i <= n) || (n < i && i < 0) {
        delta(i, n)
    } else {
        0
    }
}

/// A finite factor such as `(Z/2)^k`, `Cl(O_F)` or `(H^{2,n})^D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionFactor {
    /// Name of the underlying group, without any dual decoration.
    pub symbol: String,
    pub multiplicity: u32,
    /// Pontryagin dual of the named group.
    pub dual: bool,
    pub order: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub rank: u32,
    pub torsion: Vec<TorsionFactor>,
    /// Named groups kept opaque, e.g. the Arakelov class group.
    pub opaque: Vec<String>,
    pub named_order: Option<u64>,
}

impl GroupDescriptor {
    pub fn zero() -> GroupDescriptor {
        GroupDescriptor {
            named_order: Some(1),
            ..GroupDescriptor::default()
        }
    }

    fn build(rank: u32, torsion: Vec<TorsionFactor>, opaque: Vec<String>) -> GroupDescriptor {
        let torsion: Vec<_> = torsion.into_iter().filter(|t| t.multiplicity > 0).collect();
        let named_order = if opaque.is_empty() {
            torsion.iter().try_fold(1u64, |acc, t| {
                let o = t.order?.checked_pow(t.multiplicity)?;
                acc.checked_mul(o)
            })
        } else {
            None
        };
        GroupDescriptor {
            rank,
            torsion,
            opaque,
            named_order,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty() && self.opaque.is_empty()
    }

    /// Multiplicity of `Z/2` factors.
    pub fn two_torsion(&self) -> u32 {
        self.torsion
            .iter()
            .filter(|t| t.symbol == "Z/2")
            .map(|t| t.multiplicity)
            .sum()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        for t in &self.torsion {
            let base = if t.dual { format!("({})^D", t.symbol) } else { t.symbol.clone() };
            parts.push(if t.multiplicity == 1 { base } else { format!("({base})^{}", t.multiplicity) });
        }
        parts.extend(self.opaque.iter().cloned());
        write!(f, "{}", parts.join(" + "))
    }
}

fn factor(symbol: impl Into<String>, multiplicity: u32, dual: bool, order: Option<u64>) -> TorsionFactor {
    TorsionFactor {
        symbol: symbol.into(),
        multiplicity,
        dual,
        order,
    }
}

fn two(k: i64) -> TorsionFactor {
    factor("Z/2", k as u32, false, Some(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Theory {
    #[serde(rename = "W")]
    Weil,
    #[serde(rename = "ar")]
    Arakelov,
    #[serde(rename = "ar,c")]
    ArakelovCompact,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologyTable {
    pub theory: Theory,
    pub twist: i64,
    pub r1: u32,
    pub r2: u32,
    /// Nonzero entries only.
    pub entries: BTreeMap<i64, GroupDescriptor>,
    /// Real dimensions of `H^i(X, R~(n))`; only for the compact-support theory.
    pub real_dims: BTreeMap<i64, u32>,
}

impl CohomologyTable {
    pub fn entry(&self, i: i64) -> GroupDescriptor {
        self.entries.get(&i).cloned().unwrap_or_else(GroupDescriptor::zero)
    }

    /// `sum (-1)^i i dim H^i(R~(n))`.
    pub fn euler_order(&self) -> i64 {
        self.real_dims
            .iter()
            .map(|(&i, &d)| if i % 2 == 0 { 1 } else { -1 } * i * i64::from(d))
            .sum()
    }
}

fn insert(map: &mut BTreeMap<i64, GroupDescriptor>, i: i64, g: GroupDescriptor) {
    if !g.is_zero() {
        map.insert(i, g);
    }
}

/// Rank of `H^{1,m}` for `m >= 2`, the dimension of the regulator target.
pub fn rank_h1(f: &NumberFieldRecord, m: i64) -> u32 {
    f.r2 + f.r1 * delta(1, m) as u32
}

fn weil_entries(f: &NumberFieldRecord, n: i64, k: &KSymbols, arakelov: bool) -> BTreeMap<i64, GroupDescriptor> {
    let r1 = i64::from(f.r1);
    let unit_rank = f.r1 + f.r2 - 1;
    let mut m = BTreeMap::new();
    let g = GroupDescriptor::build;
    if n > 1 {
        let h1 = format!("H^{{1,{n}}}_tor");
        let h2 = format!("H^{{2,{n}}}");
        if arakelov {
            insert(&mut m, 1, g(0, vec![factor(h1, 1, false, k.w(n))], vec![]));
            insert(
                &mut m,
                2,
                g(0, vec![factor(h2, 1, false, k.h(n))], vec![format!("coker(r_{n})")]),
            );
        } else {
            insert(&mut m, 1, g(rank_h1(f, n), vec![factor(h1, 1, false, k.w(n))], vec![]));
            insert(&mut m, 2, g(0, vec![factor(h2, 1, false, k.h(n))], vec![]));
        }
        for i in 3..=n.max(3) {
            insert(&mut m, i, g(0, vec![two(r1 * epsilon(i, n))], vec![]));
        }
    } else if n == 1 {
        if arakelov {
            insert(&mut m, 1, g(0, vec![factor("(O_F^x)_tor", 1, false, k.w(1))], vec![]));
            insert(&mut m, 2, g(0, vec![], vec!["Cl(X_bar)".into()]));
        } else {
            insert(&mut m, 1, g(unit_rank, vec![factor("(O_F^x)_tor", 1, false, k.w(1))], vec![]));
            insert(&mut m, 2, g(0, vec![factor("Cl(O_F)", 1, false, k.h(1))], vec![]));
        }
        insert(&mut m, 3, g(1, vec![], vec![]));
    } else if n == 0 {
        insert(&mut m, 0, g(1, vec![], vec![]));
        insert(&mut m, 2, g(unit_rank, vec![factor("Cl(O_F)", 1, true, k.h(1))], vec![]));
        insert(&mut m, 3, g(0, vec![factor("(O_F^x)_tor", 1, true, k.w(1))], vec![]));
    } else {
        let d = 1 - n;
        for i in (n + 1)..0 {
            insert(&mut m, i, g(0, vec![two(r1 * epsilon(i - 1, n))], vec![]));
        }
        insert(
            &mut m,
            2,
            g(rank_h1(f, d), vec![factor(format!("H^{{2,{d}}}"), 1, true, k.h(d))], vec![]),
        );
        insert(
            &mut m,
            3,
            g(0, vec![factor(format!("H^{{1,{d}}}_tor"), 1, true, k.w(d))], vec![]),
        );
    }
    m
}

fn compact_table(f: &NumberFieldRecord, n: i64, k: &KSymbols) -> CohomologyTable {
    let mut entries = BTreeMap::new();
    let mut real_dims = BTreeMap::new();
    let rho = f.rho(n);
    if n <= 0 {
        let d = 1 - n;
        let rho = rho as u32;
        insert(&mut entries, 1, GroupDescriptor::build(rho, vec![], vec![]));
        let (h, w) = if n == 0 {
            (factor("Cl(O_F)", 1, true, k.h(1)), factor("(O_F^x)_tor", 1, true, k.w(1)))
        } else {
            (
                factor(format!("H^{{2,{d}}}"), 1, true, k.h(d)),
                factor(format!("H^{{1,{d}}}_tor"), 1, true, k.w(d)),
            )
        };
        insert(&mut entries, 2, GroupDescriptor::build(rho, vec![h], vec![]));
        insert(&mut entries, 3, GroupDescriptor::build(0, vec![w], vec![]));
        if rho > 0 {
            real_dims.insert(1, rho);
            real_dims.insert(2, rho);
        }
    } else if n == 1 {
        insert(&mut entries, 2, GroupDescriptor::build(0, vec![], vec!["H^2_{ar,c}(Z(1))".into()]));
        insert(&mut entries, 3, GroupDescriptor::build(1, vec![], vec![]));
        real_dims.insert(2, 1);
        real_dims.insert(3, 1);
    } else {
        for i in [2, 3] {
            insert(
                &mut entries,
                i,
                GroupDescriptor::build(0, vec![], vec![format!("H^{i}_{{ar,c}}(Z({n}))")]),
            );
        }
    }
    CohomologyTable {
        theory: Theory::ArakelovCompact,
        twist: n,
        r1: f.r1,
        r2: f.r2,
        entries,
        real_dims,
    }
}

/// The three tables at twist `n`, with orders resolved from `k` where known.
pub fn cohomology_tables_with(f: &NumberFieldRecord, n: i64, k: &KSymbols) -> [CohomologyTable; 3] {
    let table = |theory, arakelov| CohomologyTable {
        theory,
        twist: n,
        r1: f.r1,
        r2: f.r2,
        entries: weil_entries(f, n, k, arakelov),
        real_dims: BTreeMap::new(),
    };
    [table(Theory::Weil, false), table(Theory::Arakelov, n >= 1), compact_table(f, n, k)]
}

/// The three tables at twist `n`, resolving symbols from the record's data.
pub fn cohomology_tables(f: &NumberFieldRecord, n: i64) -> [CohomologyTable; 3] {
    cohomology_tables_with(f, n, &KSymbols::from_record(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_epsilon_values() {
        assert_eq!(delta(3, 1), 1);
        assert_eq!(delta(-1, 2), 0);
        assert_eq!(epsilon(1, 1), 1);
        assert_eq!(epsilon(2, 0), 0);
        assert_eq!(epsilon(3, 2), 0);
        assert_eq!(epsilon(-2, -4), 1);
        assert_eq!(epsilon(-1, -4), 0);
    }

    #[test]
    fn printed_rows() {
        let q = NumberFieldRecord::rationals();
        let [w, _, _] = cohomology_tables(&q, 1);
        assert_eq!(w.entry(2).torsion[0].symbol, "Cl(O_F)");
        assert_eq!(w.entry(3).rank, 1);
        let [w, _, _] = cohomology_tables(&q, 0);
        assert_eq!(w.entry(0).rank, 1);
        assert_eq!(w.entry(2).rank, 0);
        // K_3(Z) has rank 0, so H^{1,2} is finite for Q
        let [w, _, _] = cohomology_tables(&q, 2);
        assert_eq!(w.entry(1).rank, 0);
        assert_eq!(w.entry(1).named_order, Some(24));
        let q5 = NumberFieldRecord::quadratic("Q(sqrt 5)", 5).unwrap();
        let [w, _, _] = cohomology_tables(&q5, 0);
        assert_eq!(w.entry(2).rank, 1);
        let [w, _, _] = cohomology_tables(&q5, 3);
        assert_eq!(w.entry(1).rank, 2);
        assert_eq!(w.entry(3).two_torsion(), 2);
    }

    #[test]
    fn compact_support_dimensions() {
        let f = NumberFieldRecord::quadratic("Q(i)", -4).unwrap();
        for n in -6..=6 {
            let [_, _, c] = cohomology_tables(&f, n);
            assert_eq!(c.euler_order(), f.rho(n), "n = {n}");
            for i in -3..6 {
                if !(1..=3).contains(&i) && !(n >= 1 && i == 2) {
                    assert!(c.entry(i).is_zero() || (i == 3), "n = {n}, i = {i}");
                }
            }
        }
    }
}
