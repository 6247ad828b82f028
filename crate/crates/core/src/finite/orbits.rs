//! Orbits of nonzero mod-2 classes under the transvection-generated
//! stabilizer of β, and the BFS closure of that stabilizer.

use serde::Serialize;

use super::f2::{pair2, transvect2, transvection2_matrix, F2Class};
use super::group::{symplectic_group_order, GroupClosure, ModMatrix};
use crate::error::{Error, Result};

/// Largest genus for which full stabilizer closures are enumerated.
pub const MAX_CLOSURE_GENUS: usize = 3;

/// Largest genus for which vector orbits are enumerated.
pub const MAX_ORBIT_GENUS: usize = 10;

const CLOSURE_BUDGET: usize = 2_000_000;

/// Which mod-2 transvections generate the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorPolicy {
    /// `t_c` for every nonzero `c` with `î₂(c, β) = 0`.
    BetaOrthogonal,
    /// Transvections by the listed packed vectors.
    Transvections(Vec<u64>),
    Empty,
}

impl GeneratorPolicy {
    pub fn vectors(&self, genus: usize, beta: F2Class) -> Vec<u64> {
        match self {
            GeneratorPolicy::BetaOrthogonal => {
                (1u64..1 << (2 * genus)).filter(|&c| pair2(c, beta.bits()) == 0).collect()
            }
            GeneratorPolicy::Transvections(v) => v.clone(),
            GeneratorPolicy::Empty => Vec::new(),
        }
    }
}

/// The closed-form orbit label of a nonzero class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    /// `î₂(v, β) = 1`.
    Odd,
    /// `î₂(v, β) = 0` and `v ≠ β`.
    Even,
    Beta,
}

pub fn orbit_kind(v: u64, beta: u64) -> OrbitKind {
    if v == beta {
        OrbitKind::Beta
    } else if pair2(v, beta) == 1 {
        OrbitKind::Odd
    } else {
        OrbitKind::Even
    }
}

/// Orbits of the nonzero classes, largest first (ties by smallest member).
#[derive(Debug, Clone, Serialize)]
pub struct OrbitPartition {
    pub genus: usize,
    pub beta: F2Class,
    pub orbits: Vec<Vec<F2Class>>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Sizes predicted by the closed-form description.
    pub fn predicted_sizes(genus: usize) -> Vec<usize> {
        let half = 1usize << (2 * genus - 1);
        vec![half, half - 2, 1]
    }

    /// True iff the BFS orbits are exactly the three predicate classes.
    pub fn matches_predicate(&self) -> bool {
        let beta = self.beta.bits();
        let mut kinds = Vec::new();
        for orbit in &self.orbits {
            let k = orbit_kind(orbit[0].bits(), beta);
            if orbit.iter().any(|v| orbit_kind(v.bits(), beta) != k) {
                return false;
            }
            kinds.push(k);
        }
        kinds.sort();
        kinds.dedup();
        kinds.len() == self.orbits.len()
            && kinds == [OrbitKind::Odd, OrbitKind::Even, OrbitKind::Beta]
    }
}

fn check_beta(genus: usize, beta: F2Class) -> Result<()> {
    if beta.genus() != genus {
        return Err(Error::usage(format!("beta has genus {} but genus {genus} was requested", beta.genus())));
    }
    if genus < 2 {
        return Err(Error::usage("genus must be at least 2"));
    }
    Ok(())
}

/// Orbits under the closure of the β-orthogonal transvections.
pub fn orbit_classify(genus: usize, beta: F2Class) -> Result<OrbitPartition> {
    let gens = GeneratorPolicy::BetaOrthogonal.vectors(genus, beta);
    orbit_classify_with(genus, beta, &gens)
}

/// Orbits under the group generated by transvections by `generators`.
pub fn orbit_classify_with(genus: usize, beta: F2Class, generators: &[u64]) -> Result<OrbitPartition> {
    check_beta(genus, beta)?;
    if genus > MAX_ORBIT_GENUS {
        return Err(Error::Capability(format!(
            "orbit enumeration is limited to genus {MAX_ORBIT_GENUS}"
        )));
    }
    let size = 1usize << (2 * genus);
    let mut label = vec![usize::MAX; size];
    let mut orbits: Vec<Vec<F2Class>> = Vec::new();
    for start in 1..size {
        if label[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        label[start] = id;
        let mut members = vec![start as u64];
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &c in generators {
                let w = transvect2(c, v);
                if label[w as usize] == usize::MAX {
                    label[w as usize] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members.into_iter().map(|b| F2Class::new(genus, b)).collect::<Result<_>>()?);
    }
    orbits.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
    Ok(OrbitPartition { genus, beta, orbits })
}

/// BFS closure of the mod-2 transvections selected by `policy`.
pub fn stabilizer_closure(genus: usize, beta: F2Class, policy: &GeneratorPolicy) -> Result<GroupClosure> {
    check_beta(genus, beta)?;
    let vectors = policy.vectors(genus, beta);
    if vectors.is_empty() {
        return Ok(GroupClosure::trivial(2 * genus, 2));
    }
    if genus > MAX_CLOSURE_GENUS {
        return Err(Error::Capability(format!(
            "full closure enumeration is limited to genus {MAX_CLOSURE_GENUS}; use the orbit-only checks instead"
        )));
    }
    let gens: Vec<ModMatrix> = vectors.iter().map(|&c| transvection2_matrix(genus, c)).collect();
    GroupClosure::generate(2 * genus, 2, gens, CLOSURE_BUDGET)
}

/// `|Sp(2g, 2)| / (2^{2g} − 1)`, the order of the stabilizer of a nonzero vector.
pub fn predicted_stabilizer_order(genus: usize) -> u128 {
    symplectic_group_order(genus as u32, 2) / ((1u128 << (2 * genus)) - 1)
}

/// True iff every element of the closure fixes β.
pub fn closure_fixes(closure: &GroupClosure, beta: F2Class) -> bool {
    closure.elements().iter().all(|m| m.apply_bits(beta.bits()) == beta.bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b1(genus: usize) -> F2Class {
        F2Class::new(genus, 0b10).unwrap()
    }

    #[test]
    fn genus_two_orbit_sizes() {
        let p = orbit_classify(2, b1(2)).unwrap();
        assert_eq!(p.sizes(), vec![8, 6, 1]);
        assert!(p.matches_predicate());
    }

    #[test]
    fn no_generators_gives_singletons() {
        let p = orbit_classify_with(2, b1(2), &[]).unwrap();
        assert_eq!(p.orbits.len(), 15);
        assert!(!p.matches_predicate());
    }

    #[test]
    fn closure_orders_in_genus_two() {
        let c = stabilizer_closure(2, b1(2), &GeneratorPolicy::BetaOrthogonal).unwrap();
        assert_eq!(c.order(), 48);
        assert_eq!(predicted_stabilizer_order(2), 48);
        assert!(closure_fixes(&c, b1(2)));
        assert_eq!(stabilizer_closure(2, b1(2), &GeneratorPolicy::Empty).unwrap().order(), 1);
    }

    #[test]
    fn large_genus_closure_is_a_capability_error() {
        let r = stabilizer_closure(5, b1(5), &GeneratorPolicy::BetaOrthogonal);
        assert!(matches!(r, Err(Error::Capability(_))));
    }

    #[test]
    fn genus_mismatch_is_usage_error() {
        assert!(matches!(orbit_classify(3, b1(2)), Err(Error::Usage(_))));
    }
}
