//! Finite topological and measurable spaces as set systems closed under
//! the relevant operations, with the generation functors Γ and Σ.
//!
//! Continuous and measurable maps are exactly the antihomomorphisms of the
//! underlying set systems, and Γ, Σ are right adjoint to the inclusions:
//! a map `T → S` pulls members of `S` back into `T` iff it pulls members of
//! the generated structure back. The counits are identity vertex maps.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{FinMap, FinSet, DEFAULT_POWER_SET_BOUND};
use crate::graphs::{Morphism, SetSystem, SetSystemAntiHom};
use crate::verify::LawReport;

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

fn check_size(s: &SetSystem) -> Result<()> {
    if s.vertices.len() > DEFAULT_POWER_SET_BOUND {
        return Err(Error::SizeLimit {
            what: "space carrier",
            size: s.vertices.len(),
            bound: DEFAULT_POWER_SET_BOUND,
        });
    }
    Ok(())
}

/// Opens of a finite topology.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTopSpace(SetSystem);

/// Measurable sets of a finite σ-algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMeasSpace(SetSystem);

pub fn is_topology(s: &SetSystem) -> bool {
    let m = s.masks();
    let full = full_mask(s.vertices.len());
    m.contains(&0)
        && m.contains(&full)
        && m.iter().all(|a| m.iter().all(|b| m.contains(&(a | b)) && m.contains(&(a & b))))
}

pub fn is_sigma_algebra(s: &SetSystem) -> bool {
    let m = s.masks();
    let full = full_mask(s.vertices.len());
    m.contains(&full)
        && m.iter().all(|a| m.contains(&(full & !a)))
        && m.iter().all(|a| m.iter().all(|b| m.contains(&(a | b))))
}

impl FiniteTopSpace {
    pub fn new(opens: SetSystem) -> Result<Self> {
        check_size(&opens)?;
        if !is_topology(&opens) {
            return Err(Error::KindMismatch(format!("{opens} is not a topology")));
        }
        Ok(FiniteTopSpace(opens))
    }

    pub fn points(&self) -> &FinSet {
        &self.0.vertices
    }

    pub fn opens(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_set_system(self) -> SetSystem {
        self.0
    }
}

impl FiniteMeasSpace {
    pub fn new(sigma: SetSystem) -> Result<Self> {
        check_size(&sigma)?;
        if !is_sigma_algebra(&sigma) {
            return Err(Error::KindMismatch(format!("{sigma} is not a σ-algebra")));
        }
        Ok(FiniteMeasSpace(sigma))
    }

    pub fn points(&self) -> &FinSet {
        &self.0.vertices
    }

    pub fn measurable(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_set_system(self) -> SetSystem {
        self.0
    }
}

impl fmt::Display for FiniteTopSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "topology {}", self.0)
    }
}

impl fmt::Display for FiniteMeasSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ-algebra {}", self.0)
    }
}

/// Least family containing `seed` and closed under binary union and
/// intersection. Terminates after at most `2^n` insertions.
fn lattice_closure(seed: BTreeSet<u64>) -> BTreeSet<u64> {
    let mut have = seed;
    let mut work: Vec<u64> = have.iter().copied().collect();
    while let Some(a) = work.pop() {
        let current: Vec<u64> = have.iter().copied().collect();
        for b in current {
            for c in [a | b, a & b] {
                if have.insert(c) {
                    work.push(c);
                }
            }
        }
    }
    have
}

/// Γ: the least topology containing the members of `s`.
pub fn generate_topology(s: &SetSystem) -> Result<FiniteTopSpace> {
    check_size(s)?;
    let mut seed = s.masks();
    seed.insert(0);
    seed.insert(full_mask(s.vertices.len()));
    FiniteTopSpace::new(SetSystem::from_masks(&s.vertices, lattice_closure(seed)))
}

/// Points grouped by which members of `s` contain them.
pub fn atoms(s: &SetSystem) -> Vec<u64> {
    let members: Vec<u64> = s.masks().into_iter().collect();
    let mut classes: Vec<(Vec<bool>, u64)> = Vec::new();
    for i in 0..s.vertices.len() {
        let sig: Vec<bool> = members.iter().map(|m| m >> i & 1 == 1).collect();
        match classes.iter_mut().find(|(k, _)| *k == sig) {
            Some((_, bits)) => *bits |= 1 << i,
            None => classes.push((sig, 1 << i)),
        }
    }
    classes.into_iter().map(|(_, bits)| bits).collect()
}

/// Σ: the least σ-algebra containing the members of `s`, as all unions of
/// the atoms of the partition they induce.
pub fn generate_sigma(s: &SetSystem) -> Result<FiniteMeasSpace> {
    check_size(s)?;
    let atoms = atoms(s);
    let unions = (0..1u64 << atoms.len()).map(|pick| {
        atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .fold(0u64, |acc, (_, a)| acc | a)
    });
    FiniteMeasSpace::new(SetSystem::from_masks(&s.vertices, unions))
}

/// The Borel σ-algebra: Σ applied to the opens.
pub fn borel(t: &FiniteTopSpace) -> Result<FiniteMeasSpace> {
    generate_sigma(t.opens())
}

/// The identity vertex map `Γ(s) → s`, an antihomomorphism.
pub fn topology_counit(s: &SetSystem) -> SetSystemAntiHom {
    SetSystemAntiHom {
        vmap: FinMap::identity(&s.vertices),
    }
}

/// The identity vertex map `Σ(s) → s`.
pub fn sigma_counit(s: &SetSystem) -> SetSystemAntiHom {
    topology_counit(s)
}

/// Passes the preimage test iff every codomain member pulls back to a
/// domain member.
pub fn check_antihom(f: &SetSystemAntiHom, dom: &SetSystem, cod: &SetSystem) -> LawReport {
    LawReport::from_check("antihomomorphism", format!("{} : {dom} → {cod}", f.vmap), f.check(dom, cod))
}
