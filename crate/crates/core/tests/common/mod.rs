//! Brute-force oracles shared by the integration tests. They work on raw
//! index vectors and bitmasks and never call the library's enumerators.
#![allow(dead_code)]

use std::collections::BTreeSet;

use catgraph_core::finset::FinMap;
use catgraph_core::graphs::{Digraph, IncHypergraph, IncStructure, Quiver, SSHypergraph, SetSystem};

/// Every function `0..n → 0..m` as an image vector.
pub fn index_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(i);
                    p
                })
            })
            .collect();
    }
    out
}

fn idx(f: &FinMap) -> Vec<usize> {
    f.indices().to_vec()
}

pub fn quiver_homs(x: &Quiver, y: &Quiver) -> usize {
    let (xs, xt, ys, yt) = (idx(&x.src), idx(&x.tgt), idx(&y.src), idx(&y.tgt));
    let mut n = 0;
    for v in index_maps(x.vertices.len(), y.vertices.len()) {
        for e in index_maps(x.edges.len(), y.edges.len()) {
            if (0..x.edges.len()).all(|i| v[xs[i]] == ys[e[i]] && v[xt[i]] == yt[e[i]]) {
                n += 1;
            }
        }
    }
    n
}

fn edge_masks(h: &SSHypergraph) -> Vec<u64> {
    h.edges
        .iter()
        .map(|e| {
            h.members(e)
                .iter()
                .map(|v| 1u64 << h.vertices.index_of(v).unwrap())
                .fold(0, |a, b| a | b)
        })
        .collect()
}

fn image_mask(v: &[usize], mask: u64) -> u64 {
    (0..v.len()).filter(|i| mask >> i & 1 == 1).fold(0, |a, i| a | 1 << v[i])
}

fn preimage_mask(v: &[usize], mask: u64) -> u64 {
    (0..v.len()).filter(|&i| mask >> v[i] & 1 == 1).fold(0, |a, i| a | 1 << i)
}

pub fn hypergraph_homs(x: &SSHypergraph, y: &SSHypergraph) -> usize {
    let (mx, my) = (edge_masks(x), edge_masks(y));
    let mut n = 0;
    for v in index_maps(x.vertices.len(), y.vertices.len()) {
        for e in index_maps(x.edges.len(), y.edges.len()) {
            if (0..mx.len()).all(|i| image_mask(&v, mx[i]) == my[e[i]]) {
                n += 1;
            }
        }
    }
    n
}

pub fn anti_homs(x: &SSHypergraph, y: &SSHypergraph) -> usize {
    let (mx, my) = (edge_masks(x), edge_masks(y));
    let mut n = 0;
    for v in index_maps(x.vertices.len(), y.vertices.len()) {
        for e in index_maps(y.edges.len(), x.edges.len()) {
            if (0..my.len()).all(|j| preimage_mask(&v, my[j]) == mx[e[j]]) {
                n += 1;
            }
        }
    }
    n
}

pub fn incidence_homs(x: &IncHypergraph, y: &IncHypergraph) -> usize {
    let (xv, xe, yv, ye) = (idx(&x.att_v), idx(&x.att_e), idx(&y.att_v), idx(&y.att_e));
    let mut n = 0;
    for v in index_maps(x.vertices.len(), y.vertices.len()) {
        for e in index_maps(x.edges.len(), y.edges.len()) {
            for i in index_maps(x.incidences.len(), y.incidences.len()) {
                if (0..i.len()).all(|k| v[xv[k]] == yv[i[k]] && e[xe[k]] == ye[i[k]]) {
                    n += 1;
                }
            }
        }
    }
    n
}

fn arc_set(d: &Digraph) -> BTreeSet<(usize, usize)> {
    d.arcs
        .iter()
        .map(|(a, b)| (d.vertices.index_of(a).unwrap(), d.vertices.index_of(b).unwrap()))
        .collect()
}

pub fn digraph_homs(x: &Digraph, y: &Digraph) -> usize {
    let (ax, ay) = (arc_set(x), arc_set(y));
    index_maps(x.vertices.len(), y.vertices.len())
        .into_iter()
        .filter(|v| ax.iter().all(|&(a, b)| ay.contains(&(v[a], v[b]))))
        .count()
}

pub fn set_system_homs(x: &SetSystem, y: &SetSystem) -> usize {
    let (mx, my) = (x.masks(), y.masks());
    index_maps(x.vertices.len(), y.vertices.len())
        .into_iter()
        .filter(|v| mx.iter().all(|&m| my.contains(&image_mask(v, m))))
        .count()
}

pub fn set_system_antihoms(x: &SetSystem, y: &SetSystem) -> usize {
    let (mx, my) = (x.masks(), y.masks());
    index_maps(x.vertices.len(), y.vertices.len())
        .into_iter()
        .filter(|v| my.iter().all(|&m| mx.contains(&preimage_mask(v, m))))
        .count()
}

pub fn inc_structure_homs(x: &IncStructure, y: &IncStructure) -> usize {
    let flag = |s: &IncStructure, (v, e): &(String, String)| {
        (s.vertices.index_of(v).unwrap(), s.edges.index_of(e).unwrap())
    };
    let fx: Vec<(usize, usize)> = x.flags.iter().map(|f| flag(x, f)).collect();
    let fy: BTreeSet<(usize, usize)> = y.flags.iter().map(|f| flag(y, f)).collect();
    let mut n = 0;
    for v in index_maps(x.vertices.len(), y.vertices.len()) {
        for e in index_maps(x.edges.len(), y.edges.len()) {
            if fx.iter().all(|&(a, b)| fy.contains(&(v[a], e[b]))) {
                n += 1;
            }
        }
    }
    n
}

/// Least family closed under union and intersection containing the seed,
/// `∅` and the whole set, by iteration to a fixed point.
pub fn topology_closure(s: &SetSystem) -> BTreeSet<u64> {
    let full = (1u64 << s.vertices.len()) - 1;
    let mut have = s.masks();
    have.insert(0);
    have.insert(full);
    loop {
        let mut next = have.clone();
        for &a in &have {
            for &b in &have {
                next.insert(a | b);
                next.insert(a & b);
            }
        }
        if next == have {
            return have;
        }
        have = next;
    }
}

/// Least family closed under complement and union, by iteration.
pub fn sigma_closure(s: &SetSystem) -> BTreeSet<u64> {
    let full = (1u64 << s.vertices.len()) - 1;
    let mut have = s.masks();
    have.insert(full);
    loop {
        let mut next = have.clone();
        for &a in &have {
            next.insert(full & !a);
            for &b in &have {
                next.insert(a | b);
            }
        }
        if next == have {
            return have;
        }
        have = next;
    }
}

/// Or-closure of the arc relation by a pairwise scan.
pub fn or_closure(d: &Digraph) -> BTreeSet<(String, String)> {
    d.arcs.iter().flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())]).collect()
}

/// And-interior of the arc relation by a pairwise scan.
pub fn and_interior(d: &Digraph) -> BTreeSet<(String, String)> {
    d.arcs
        .iter()
        .filter(|(a, b)| d.arcs.contains(&(b.clone(), a.clone())))
        .cloned()
        .collect()
}

/// Classes of the equivalence generated by `pairs` on `0..n`, by repeated
/// relaxation of class ids.
pub fn classes(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut id: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let m = id[a].min(id[b]);
            for k in 0..n {
                if (id[k] == id[a] || id[k] == id[b]) && id[k] != m {
                    id[k] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return id;
        }
    }
}
