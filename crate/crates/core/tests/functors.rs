mod common;

use std::collections::BTreeSet;

use catgraph_core::comma::{self, Presented};
use catgraph_core::coreflectors::{self, cosimplify};
use catgraph_core::graphs::{
    Digraph, IncHypergraph, Morphism, Quiver, SSHypergraph, SetSystem, SimpleGraph, SymDigraph,
};
use catgraph_core::limits::{self, Construction, LimitArgs, SimpleKind, SimpleObject};
use catgraph_core::reflectors::{self, simplify};
use catgraph_core::spaces;
use catgraph_core::verify::gen::{self, Sampler};
use catgraph_core::verify::{Category, CommaCat, QuiverCat, DEFAULT_BUDGET};
use proptest::prelude::*;

fn edge_labels<T: AsRef<str>>(it: impl Iterator<Item = T>) -> BTreeSet<String> {
    it.map(|s| s.as_ref().to_string()).collect()
}

#[test]
fn parallel_quiver_edges_merge() {
    let q = Quiver::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "a", "b")]).unwrap();
    let s = Quiver::from_comma(&simplify(&q.to_comma()).unwrap().result).unwrap();
    assert_eq!(s.vertices, q.vertices);
    assert_eq!(s.edges.labels(), ["(a,b)"]);
}

#[test]
fn parallel_hyperedges_merge() {
    let h = SSHypergraph::build(&["a", "b"], &[("e1", &["a", "b"]), ("e2", &["a", "b"]), ("e3", &["a"])]).unwrap();
    let s = SSHypergraph::from_comma(&simplify(&h.to_comma()).unwrap().result).unwrap();
    assert_eq!(edge_labels(s.edges.iter()), edge_labels(["{a,b}", "{a}"].iter()));
}

#[test]
fn parallel_incidences_merge_but_edges_stay() {
    let g = IncHypergraph::build(&["v"], &["e", "f"], &[("i", "v", "e"), ("j", "v", "e")]).unwrap();
    let s = IncHypergraph::from_comma(&simplify(&g.to_comma()).unwrap().result).unwrap();
    assert_eq!(s.incidences.len(), 1);
    assert_eq!(s.edges.len(), 2);
}

#[test]
fn deletion_drops_large_and_empty_members() {
    let h = SetSystem::build(&["a", "b", "c"], &[&["a"], &["a", "b"], &["a", "b", "c"]]).unwrap();
    let d = reflectors::del_ssys(&h);
    assert_eq!(d.result.as_set_system(), &SetSystem::build(&["a", "b", "c"], &[&["a"], &["a", "b"]]).unwrap());
    let with_empty = SetSystem::build(&["a"], &[&[], &["a"]]).unwrap();
    assert_eq!(reflectors::del_ssys(&with_empty).result.as_set_system().sets.len(), 1);
    assert!(d.counit.check(d.result.as_set_system(), &h).is_ok());
}

#[test]
fn isolated_vertices_removed() {
    let q = Quiver::build(&["a", "b", "c"], &[("e", "a", "a")]).unwrap();
    let c = coreflectors::cosimplify_quiver(&q);
    assert_eq!(Quiver::from_comma(&c.result).unwrap().vertices.labels(), ["a"]);
    let loaded = Quiver::build(&["a"], &[("l", "a", "a")]).unwrap();
    assert!(coreflectors::is_loaded(&loaded));
    let mut homs = QuiverCat::default().homs(&loaded, &q, DEFAULT_BUDGET).unwrap();
    assert_eq!(homs.len(), 1);
    let mc = homs.remove(0);
    let tilde = c.factor(&loaded.to_comma(), &Quiver::hom_to_comma(&mc)).unwrap();
    assert_eq!(comma::compose(&c.counit, &tilde).unwrap(), Quiver::hom_to_comma(&mc));
}

#[test]
fn loaded_predicates() {
    let full = Quiver::build(&["a", "b"], &[("1", "a", "a"), ("2", "a", "b"), ("3", "b", "a"), ("4", "b", "b")]).unwrap();
    assert!(coreflectors::is_loaded(&full));
    for q in gen::quivers(2, 3) {
        if q.edges.len() < q.vertices.len() * q.vertices.len() {
            assert!(!coreflectors::is_loaded(&q));
        }
    }
}

#[test]
fn antihomomorphism_cosimplification_merges_parallels() {
    let h = SSHypergraph::build(&["a", "b"], &[("e1", &["a", "b"]), ("e2", &["a", "b"]), ("e3", &["a"])]).unwrap();
    let c = coreflectors::cosimplify_p(&h);
    let back = comma::anti_from_comma(&c.result).unwrap();
    assert_eq!(edge_labels(back.edges.iter()), edge_labels(["{a,b}", "{a}"].iter()));
}

#[test]
fn anti_composition_reverses_edge_maps() {
    let h = SSHypergraph::build(&["a"], &[("e", &["a"]), ("f", &["a"])]).unwrap();
    let homs = catgraph_core::verify::AntiCat.homs(&h, &h, DEFAULT_BUDGET).unwrap();
    let swap = homs.iter().find(|m| m.emap.apply("e") == Some("f")).unwrap();
    let fix = homs.iter().find(|m| m.emap.apply("e") == Some("e") && m.emap.apply("f") == Some("e")).unwrap();
    let both = swap.compose(fix).unwrap();
    // edges pull back through `swap` first, then `fix`
    for e in ["e", "f"] {
        let want = fix.emap.apply(swap.emap.apply(e).unwrap()).unwrap();
        assert_eq!(both.emap.apply(e), Some(want));
    }
}

#[test]
fn quiver_product_of_two_arrows() {
    let x = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
    let y = Quiver::build(&["c", "d"], &[("f", "c", "d")]).unwrap();
    let p = limits::product(&x, &y).unwrap();
    assert_eq!(p.object.vertices.len(), 4);
    assert_eq!(p.object.edges.len(), 1);
    for t in gen::quivers(2, 2) {
        assert_eq!(common::quiver_homs(&t, &p.object), common::quiver_homs(&t, &x) * common::quiver_homs(&t, &y));
    }
}

#[test]
fn hypergraph_product_of_edges() {
    let k2 = SSHypergraph::build(&["a", "b"], &[("e", &["a", "b"])]).unwrap();
    let p = limits::product(&k2, &k2).unwrap();
    assert_eq!(p.object.edges.len(), 7);
    for t in gen::hypergraphs(2, 1) {
        assert_eq!(common::hypergraph_homs(&t, &p.object), common::hypergraph_homs(&t, &k2).pow(2));
    }
}

#[test]
fn quiver_equalizer_and_coequalizer_match_scans() {
    let objs = gen::quivers(2, 2);
    for x in objs.iter().step_by(3) {
        for y in objs.iter().step_by(4) {
            let homs = QuiverCat::default().homs(x, y, DEFAULT_BUDGET).unwrap();
            for f in &homs {
                for g in &homs {
                    let e = limits::equalizer(x, y, f, g).unwrap();
                    let agree: BTreeSet<&str> =
                        x.vertices.iter().filter(|v| f.vmap.apply(v) == g.vmap.apply(v)).collect();
                    assert_eq!(e.object.vertices.iter().collect::<BTreeSet<_>>(), agree);
                    let q = limits::coequalizer(x, y, f, g).unwrap();
                    let pairs: Vec<(usize, usize)> =
                        f.vmap.indices().iter().copied().zip(g.vmap.indices().iter().copied()).collect();
                    let ids = common::classes(y.vertices.len(), &pairs);
                    let n = ids.iter().collect::<BTreeSet<_>>().len();
                    assert_eq!(q.object.vertices.len(), n);
                }
            }
        }
    }
}

#[test]
fn coproduct_with_empty_keeps_shape() {
    let x = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
    let s = limits::coproduct(&x, &Quiver::empty()).unwrap();
    assert_eq!((s.object.vertices.len(), s.object.edges.len()), (2, 1));
}

#[test]
fn digraph_product_of_arcs() {
    let x = Digraph::build(&["a", "b"], &[("a", "b")]).unwrap();
    let y = Digraph::build(&["c", "d"], &[("c", "d")]).unwrap();
    let lim = limits::limit_in_simple(
        SimpleKind::Digra,
        Construction::Product,
        &LimitArgs::Pair(SimpleObject::Digraph(x.clone()), SimpleObject::Digraph(y.clone())),
    )
    .unwrap();
    let SimpleObject::Digraph(p) = lim.object else { panic!("digraph expected") };
    assert_eq!((p.vertices.len(), p.arcs.len()), (4, 1));
    for t in gen::digraphs(2) {
        assert_eq!(common::digraph_homs(&t, &p), common::digraph_homs(&t, &x) * common::digraph_homs(&t, &y));
    }
}

#[test]
fn k2_product_in_graphs_is_not_the_set_system_product() {
    let k2 = SimpleGraph::new(SetSystem::build(&["a", "b"], &[&["a", "b"]]).unwrap()).unwrap();
    let lim = limits::limit_in_simple(
        SimpleKind::Gra,
        Construction::Product,
        &LimitArgs::Pair(SimpleObject::Graph(k2.clone()), SimpleObject::Graph(k2.clone())),
    )
    .unwrap();
    let SimpleObject::Graph(p) = lim.object else { panic!("graph expected") };
    assert_eq!(p.as_set_system().sets.len(), 2);
    for t in gen::simple_graphs(2) {
        let t = t.as_set_system();
        assert_eq!(
            common::set_system_homs(t, p.as_set_system()),
            common::set_system_homs(t, k2.as_set_system()).pow(2)
        );
    }
    let tri = SetSystem::build(&["x", "y", "z"], &[&["x", "y", "z"]]).unwrap();
    assert_eq!(common::set_system_homs(&tri, k2.as_set_system()).pow(2), 36);
    assert_eq!(common::set_system_homs(&tri, p.as_set_system()), 12);
}

#[test]
fn two_automorphisms_of_an_edge() {
    let k2 = reflectors::gra_to_symdigra(
        &SimpleGraph::new(SetSystem::build(&["a", "b"], &[&["a", "b"]]).unwrap()).unwrap(),
    );
    assert_eq!(common::digraph_homs(k2.as_digraph(), k2.as_digraph()), 2);
}

#[test]
fn topology_and_sigma_examples() {
    let s = SetSystem::build(&["a", "b"], &[&["a"]]).unwrap();
    assert_eq!(spaces::generate_topology(&s).unwrap().opens(), &SetSystem::build(&["a", "b"], &[&[], &["a"], &["a", "b"]]).unwrap());
    let s3 = SetSystem::build(&["a", "b", "c"], &[&["a"]]).unwrap();
    assert_eq!(
        spaces::generate_sigma(&s3).unwrap().measurable(),
        &SetSystem::build(&["a", "b", "c"], &[&[], &["a"], &["b", "c"], &["a", "b", "c"]]).unwrap()
    );
    let singles = SetSystem::build(&["a", "b", "c"], &[&["a"], &["b"], &["c"]]).unwrap();
    assert_eq!(spaces::generate_topology(&singles).unwrap().opens().sets.len(), 8);
}

#[test]
fn generated_structures_match_iteration() {
    for s in gen::set_systems(3) {
        assert_eq!(spaces::generate_topology(&s).unwrap().opens().masks(), common::topology_closure(&s));
        assert_eq!(spaces::generate_sigma(&s).unwrap().measurable().masks(), common::sigma_closure(&s));
    }
    for t in gen::topologies(3) {
        let top = spaces::FiniteTopSpace::new(t.clone()).unwrap();
        assert_eq!(spaces::borel(&top).unwrap().measurable().masks(), common::sigma_closure(&t));
    }
}

#[test]
fn zeta_on_a_simple_quiver() {
    let q = Quiver::build(&["a", "b"], &[("e", "a", "b"), ("l", "b", "b")]).unwrap();
    let x = q.to_comma();
    let z = comma::zeta(&x).unwrap();
    assert!(z.phi.is_bijective());
    let target = comma::comma_of(&comma::space_of(&x).unwrap());
    assert!(comma::check_morphism(&z, &x, &target).is_ok());
}

#[test]
fn maps_into_simple_targets_are_fixed_by_psi() {
    let x = Quiver::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "a", "b")]).unwrap().to_comma();
    for y in gen::digraphs(2) {
        let y = comma::comma_of(&comma::Space::Digraph(y));
        let homs = CommaCat.homs(&x, &y, DEFAULT_BUDGET).unwrap();
        for a in &homs {
            for b in &homs {
                if a.psi == b.psi {
                    assert_eq!(a.phi, b.phi);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn simplification_is_idempotent_and_simple(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        for x in [s.quiver(3, 4).to_comma(), s.hypergraph(3, 4).to_comma(), s.incidence(3, 3, 4).to_comma()] {
            let r = simplify(&x).unwrap();
            prop_assert!(comma::is_simple(&r.result));
            prop_assert_eq!(&simplify(&r.result).unwrap().result, &r.result);
            prop_assert!(r.unit.phi.is_surjective());
            prop_assert_eq!(r.unit.phi.is_bijective(), comma::is_simple(&x));
        }
    }

    #[test]
    fn factorization_recomposes(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.quiver(2, 3).to_comma();
        let y = comma::comma_of(&comma::Space::Digraph(s.digraph(2)));
        let r = simplify(&x).unwrap();
        for m in CommaCat.homs(&x, &y, DEFAULT_BUDGET).unwrap() {
            let h = r.factor(&m, &y).unwrap();
            prop_assert_eq!(comma::compose(&h, &r.unit).unwrap(), m);
        }
    }

    #[test]
    fn closure_and_interior_match_scans(seed in any::<u64>()) {
        let g = Sampler::new(seed).digraph(4);
        let cl = reflectors::sym_closure(&g).result.into_digraph();
        let int = reflectors::sym_interior(&g).result.into_digraph();
        prop_assert_eq!(cl.arcs, common::or_closure(&g));
        prop_assert_eq!(int.arcs, common::and_interior(&g));
    }

    #[test]
    fn symmetric_round_trip(seed in any::<u64>()) {
        let g = Sampler::new(seed).digraph(4);
        let sym = reflectors::sym_closure(&g).result;
        let back = reflectors::gra_to_symdigra(&reflectors::symdigra_to_gra(&sym));
        prop_assert_eq!(back, sym.clone());
        prop_assert!(SymDigraph::new(sym.into_digraph()).is_ok());
    }

    #[test]
    fn cosimplification_trims_to_endpoints(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let q = s.quiver(4, 3);
        let c = coreflectors::cosimplify_quiver(&q);
        let ends: BTreeSet<&str> = q.src.iter().chain(q.tgt.iter()).map(|(_, v)| v).collect();
        let kept = Quiver::from_comma(&c.result).unwrap();
        prop_assert_eq!(kept.vertices.iter().collect::<BTreeSet<_>>(), ends);
        prop_assert_eq!(&cosimplify(&c.result).unwrap().result, &c.result);

        let g = s.incidence(3, 3, 3);
        let c = coreflectors::cosimplify_inc(&g);
        let kept = IncHypergraph::from_comma(&c.result).unwrap();
        let hit_v: BTreeSet<&str> = g.att_v.iter().map(|(_, v)| v).collect();
        let hit_e: BTreeSet<&str> = g.att_e.iter().map(|(_, e)| e).collect();
        prop_assert_eq!(kept.vertices.iter().collect::<BTreeSet<_>>(), hit_v);
        prop_assert_eq!(kept.edges.iter().collect::<BTreeSet<_>>(), hit_e);
    }

    #[test]
    fn anti_cosimplification_is_injective(seed in any::<u64>()) {
        let h = Sampler::new(seed).hypergraph(3, 5);
        let c = coreflectors::cosimplify_p(&h);
        prop_assert!(c.result.f.is_injective());
        prop_assert_eq!(&cosimplify(&c.result).unwrap().result, &c.result);
        let distinct: BTreeSet<BTreeSet<String>> = h.edges.iter().map(|e| h.member_set(e)).collect();
        prop_assert_eq!(c.result.f.dom().len(), distinct.len());
    }

    #[test]
    fn presentations_round_trip(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let q = s.quiver(3, 4);
        prop_assert_eq!(Quiver::from_comma(&q.to_comma()).unwrap(), q);
        let g = s.incidence(3, 3, 4);
        prop_assert_eq!(IncHypergraph::from_comma(&g.to_comma()).unwrap(), g);
        let h = s.hypergraph(3, 4);
        prop_assert_eq!(comma::anti_from_comma(&comma::anti_to_comma(&h)).unwrap(), h.clone());
        prop_assert_eq!(SSHypergraph::from_comma(&h.to_comma()).unwrap(), h);
    }

    #[test]
    fn generation_is_a_closure(seed in any::<u64>()) {
        let s = Sampler::new(seed).set_system(4);
        let t = spaces::generate_topology(&s).unwrap().into_set_system();
        let m = spaces::generate_sigma(&s).unwrap().into_set_system();
        prop_assert!(s.sets.is_subset(&t.sets) && s.sets.is_subset(&m.sets));
        prop_assert!(spaces::is_topology(&t) && spaces::is_sigma_algebra(&m));
        prop_assert_eq!(spaces::generate_topology(&t).unwrap().into_set_system(), t);
        prop_assert_eq!(m.masks(), common::sigma_closure(&s));
    }

    #[test]
    fn deletion_keeps_small_members(seed in any::<u64>()) {
        let s = Sampler::new(seed).set_system(4);
        let d = reflectors::del_ssys(&s).result.into_set_system();
        let want: BTreeSet<BTreeSet<String>> = s.sets.iter().filter(|m| (1..=2).contains(&m.len())).cloned().collect();
        prop_assert_eq!(d.sets, want);
    }
}
