use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Real Hodge structure of weight `i`: numbers `h^{p,q}` with `p + q = i`, and
/// for even `i` the split `h^{i/2,i/2} = h^{i/2,+} + h^{i/2,-}` into the
/// eigenspaces where the de Rham conjugation acts by `(-1)^(i/2)` and by its negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeStructure {
    weight: u32,
    hpq: BTreeMap<(u32, u32), u32>,
    middle_split: Option<(u32, u32)>,
}

impl HodgeStructure {
    pub fn new(weight: u32, hpq: BTreeMap<(u32, u32), u32>, middle_split: Option<(u32, u32)>) -> Result<HodgeStructure> {
        for (&(p, q), &h) in &hpq {
            if p + q != weight {
                return Err(Error::Invariant(format!("h^({p},{q}) in a structure of weight {weight}")));
            }
            if hpq.get(&(q, p)).copied().unwrap_or(0) != h {
                return Err(Error::Invariant(format!("h^({p},{q}) != h^({q},{p})")));
            }
        }
        if weight % 2 == 1 {
            if middle_split.is_some() {
                return Err(Error::Invariant("odd weight has no middle split".into()));
            }
        } else {
            let mid = hpq.get(&(weight / 2, weight / 2)).copied().unwrap_or(0);
            let (plus, minus) = middle_split.unwrap_or((0, 0));
            if plus + minus != mid {
                return Err(Error::Invariant(format!(
                    "middle split ({plus}, {minus}) does not sum to h^(i/2,i/2) = {mid}"
                )));
            }
        }
        let hpq = hpq.into_iter().filter(|&(_, h)| h > 0).collect();
        let middle_split = weight.is_multiple_of(2).then(|| middle_split.unwrap_or((0, 0)));
        Ok(HodgeStructure {
            weight,
            hpq,
            middle_split,
        })
    }

    /// Weight-0 structure `h^{0,0} = 1` with trivial conjugation: a real place.
    pub fn real_place() -> HodgeStructure {
        HodgeStructure::new(0, BTreeMap::from([((0, 0), 1)]), Some((1, 0))).expect("valid")
    }

    /// Weight-0 structure `h^{0,0} = 2` with conjugation swapping the two
    /// embeddings: a complex place.
    pub fn complex_place() -> HodgeStructure {
        HodgeStructure::new(0, BTreeMap::from([((0, 0), 2)]), Some((1, 1))).expect("valid")
    }

    /// `h^{0,1} = h^{1,0} = g`, e.g. `H^1` of a curve of genus `g`.
    pub fn curve_h1(g: u32) -> HodgeStructure {
        HodgeStructure::new(1, BTreeMap::from([((0, 1), g), ((1, 0), g)]), None).expect("valid")
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn h(&self, p: u32, q: u32) -> u32 {
        self.hpq.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn hpq(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.hpq
    }

    /// `(h^{i/2,+}, h^{i/2,-})`, or `None` for odd weight.
    pub fn middle_split(&self) -> Option<(u32, u32)> {
        self.middle_split
    }

    /// `h^{i/2, sign}` with `sign = +1` or `-1`; zero for odd weight.
    pub fn middle(&self, sign: i64) -> u32 {
        match self.middle_split {
            Some((plus, minus)) => {
                if sign > 0 {
                    plus
                } else {
                    minus
                }
            }
            None => 0,
        }
    }

    pub fn dimension(&self) -> u32 {
        self.hpq.values().sum()
    }
}

/// The archimedean Hodge package of `Spec O_F`: `r1` real and `r2` complex places.
pub fn number_ring_hodge(r1: u32, r2: u32) -> Vec<HodgeStructure> {
    let mut out = Vec::new();
    if r1 > 0 {
        out.push(HodgeStructure::new(0, BTreeMap::from([((0, 0), r1)]), Some((r1, 0))).expect("valid"));
    }
    if r2 > 0 {
        out.push(HodgeStructure::new(0, BTreeMap::from([((0, 0), 2 * r2)]), Some((r2, r2))).expect("valid"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_checks() {
        assert!(HodgeStructure::new(1, BTreeMap::from([((0, 1), 1)]), None).is_err());
        assert!(HodgeStructure::new(1, BTreeMap::from([((0, 1), 1), ((1, 0), 1)]), Some((0, 0))).is_err());
        assert!(HodgeStructure::new(2, BTreeMap::from([((1, 1), 2)]), Some((1, 0))).is_err());
        assert!(HodgeStructure::new(2, BTreeMap::from([((1, 1), 2)]), Some((1, 1))).is_ok());
        assert!(HodgeStructure::new(2, BTreeMap::from([((0, 1), 1), ((1, 0), 1)]), None).is_err());
        assert_eq!(HodgeStructure::curve_h1(2).dimension(), 4);
    }
}
