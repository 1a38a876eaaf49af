//! Deterministic instance generators: exhaustive up to a size bound, or
//! seeded random.
//!
//! Vertices are labeled `v0, v1, ...`, edges `e0, ...`, incidences
//! `i0, ...`. Exhaustive generators list each multiset of edge shapes once,
//! so objects differing only by a permutation of edge labels are skipped.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finset::{FinMap, FinSet};
use crate::graphs::{
    Digraph, IncHypergraph, IncStructure, Quiver, SSHypergraph, SetSystem, SimpleGraph, SymDigraph,
};
use crate::spaces;

fn names(prefix: &str, n: usize) -> FinSet {
    FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).expect("generated labels are distinct")
}

/// Non-decreasing sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < n {
                let v = cur[i] + 1;
                for c in &mut cur[i..] {
                    *c = v;
                }
                break;
            }
        }
    }
}

fn quiver_from(nv: usize, shapes: &[(usize, usize)]) -> Quiver {
    let v = names("v", nv);
    let e = names("e", shapes.len());
    let src = FinMap::from_indices(e.clone(), v.clone(), shapes.iter().map(|s| s.0).collect());
    let tgt = FinMap::from_indices(e.clone(), v.clone(), shapes.iter().map(|s| s.1).collect());
    Quiver::new(v, e, src.expect("indices in range"), tgt.expect("indices in range")).expect("generated quiver")
}

pub fn quivers(max_v: usize, max_e: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        for ne in 0..=max_e {
            for pick in multisets(nv * nv, ne) {
                let shapes: Vec<(usize, usize)> = pick.iter().map(|&p| (p / nv, p % nv)).collect();
                out.push(quiver_from(nv, &shapes));
            }
        }
    }
    out
}

fn hypergraph_from(nv: usize, masks: &[u64]) -> SSHypergraph {
    let v = names("v", nv);
    let e = names("e", masks.len());
    let pv = crate::finset::power_set(&v).expect("small carrier");
    let inc = FinMap::from_fn(e.clone(), pv, |l| {
        let i: usize = l[1..].parse().expect("generated edge label");
        crate::finset::mask_label(&v, masks[i])
    })
    .expect("subsets lie in the power set");
    SSHypergraph::new(v, e, inc).expect("generated hypergraph")
}

pub fn hypergraphs(max_v: usize, max_e: usize) -> Vec<SSHypergraph> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        for ne in 0..=max_e {
            for pick in multisets(1 << nv, ne) {
                let masks: Vec<u64> = pick.iter().map(|&p| p as u64).collect();
                out.push(hypergraph_from(nv, &masks));
            }
        }
    }
    out
}

fn incidence_from(nv: usize, ne: usize, flags: &[(usize, usize)]) -> IncHypergraph {
    let v = names("v", nv);
    let e = names("e", ne);
    let i = names("i", flags.len());
    let av = FinMap::from_indices(i.clone(), v.clone(), flags.iter().map(|f| f.0).collect());
    let ae = FinMap::from_indices(i.clone(), e.clone(), flags.iter().map(|f| f.1).collect());
    IncHypergraph::new(v, e, i, av.expect("indices in range"), ae.expect("indices in range"))
        .expect("generated incidence hypergraph")
}

pub fn incidence_hypergraphs(max_v: usize, max_e: usize, max_i: usize) -> Vec<IncHypergraph> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        for ne in 0..=max_e {
            for ni in 0..=max_i {
                for pick in multisets(nv * ne, ni) {
                    let flags: Vec<(usize, usize)> = pick.iter().map(|&p| (p / ne, p % ne)).collect();
                    out.push(incidence_from(nv, ne, &flags));
                }
            }
        }
    }
    out
}

fn digraph_from(nv: usize, bits: u64) -> Digraph {
    let v = names("v", nv);
    let arcs: Vec<(String, String)> = (0..nv * nv)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| (v.labels()[i / nv].clone(), v.labels()[i % nv].clone()))
        .collect();
    Digraph::new(v, arcs).expect("generated digraph")
}

pub fn digraphs(max_v: usize) -> Vec<Digraph> {
    (0..=max_v)
        .flat_map(|nv| (0..1u64 << (nv * nv)).map(move |bits| digraph_from(nv, bits)))
        .collect()
}

pub fn sym_digraphs(max_v: usize) -> Vec<SymDigraph> {
    simple_graphs(max_v)
        .iter()
        .map(crate::reflectors::gra_to_symdigra)
        .collect()
}

pub fn set_systems(max_v: usize) -> Vec<SetSystem> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        let v = names("v", nv);
        let subsets = 1usize << nv;
        for fam in 0..1u64 << subsets {
            out.push(SetSystem::from_masks(&v, (0..subsets as u64).filter(|s| fam >> s & 1 == 1)));
        }
    }
    out
}

pub fn simple_graphs(max_v: usize) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        let v = names("v", nv);
        let small: Vec<u64> = (1..1u64 << nv).filter(|m| m.count_ones() <= 2).collect();
        for fam in 0..1u64 << small.len() {
            let s = SetSystem::from_masks(
                &v,
                small.iter().enumerate().filter(|(i, _)| fam >> i & 1 == 1).map(|(_, &m)| m),
            );
            out.push(SimpleGraph::new(s).expect("members have one or two elements"));
        }
    }
    out
}

pub fn inc_structures(max_v: usize, max_e: usize) -> Vec<IncStructure> {
    let mut out = Vec::new();
    for nv in 0..=max_v {
        for ne in 0..=max_e {
            let v = names("v", nv);
            let e = names("e", ne);
            for bits in 0..1u64 << (nv * ne) {
                let flags: Vec<(String, String)> = (0..nv * ne)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| (v.labels()[i / ne].clone(), e.labels()[i % ne].clone()))
                    .collect();
                out.push(IncStructure::new(v.clone(), e.clone(), flags).expect("generated incidence structure"));
            }
        }
    }
    out
}

pub fn topologies(max_v: usize) -> Vec<SetSystem> {
    set_systems(max_v).into_iter().filter(spaces::is_topology).collect()
}

pub fn sigma_algebras(max_v: usize) -> Vec<SetSystem> {
    set_systems(max_v).into_iter().filter(spaces::is_sigma_algebra).collect()
}

/// Seeded random instances of each kind.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn quiver(&mut self, max_v: usize, max_e: usize) -> Quiver {
        let nv = self.rng.gen_range(0..=max_v);
        let ne = if nv == 0 { 0 } else { self.rng.gen_range(0..=max_e) };
        let shapes: Vec<(usize, usize)> =
            (0..ne).map(|_| (self.rng.gen_range(0..nv), self.rng.gen_range(0..nv))).collect();
        quiver_from(nv, &shapes)
    }

    pub fn hypergraph(&mut self, max_v: usize, max_e: usize) -> SSHypergraph {
        let nv = self.rng.gen_range(0..=max_v);
        let ne = self.rng.gen_range(0..=max_e);
        let masks: Vec<u64> = (0..ne).map(|_| self.rng.gen_range(0..1u64 << nv)).collect();
        hypergraph_from(nv, &masks)
    }

    pub fn incidence(&mut self, max_v: usize, max_e: usize, max_i: usize) -> IncHypergraph {
        let nv = self.rng.gen_range(0..=max_v);
        let ne = self.rng.gen_range(0..=max_e);
        let ni = if nv * ne == 0 { 0 } else { self.rng.gen_range(0..=max_i) };
        let flags: Vec<(usize, usize)> =
            (0..ni).map(|_| (self.rng.gen_range(0..nv), self.rng.gen_range(0..ne))).collect();
        incidence_from(nv, ne, &flags)
    }

    pub fn digraph(&mut self, max_v: usize) -> Digraph {
        let nv = self.rng.gen_range(0..=max_v);
        let bits = self.rng.gen_range(0..1u64 << (nv * nv));
        digraph_from(nv, bits)
    }

    pub fn set_system(&mut self, max_v: usize) -> SetSystem {
        let nv = self.rng.gen_range(0..=max_v);
        let v = names("v", nv);
        let fam: u64 = self.rng.gen();
        SetSystem::from_masks(&v, (0..1u64 << nv).filter(|s| fam >> (s % 64) & 1 == 1))
    }

    pub fn map(&mut self, dom: &FinSet, cod: &FinSet) -> Option<FinMap> {
        if cod.is_empty() && !dom.is_empty() {
            return None;
        }
        let images = (0..dom.len()).map(|_| self.rng.gen_range(0..cod.len())).collect();
        FinMap::from_indices(dom.clone(), cod.clone(), images).ok()
    }
}
