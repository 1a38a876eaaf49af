mod common;

use catgraph_core::comma::{self, Presented};
use catgraph_core::verify::gen;
use catgraph_core::verify::{
    enumerate_comma_homs, AntiCat, AntiSetCat, Category, DigraCat, HypergraphCat, IStrCat, IncidenceCat,
    QuiverCat, SSysCat, DEFAULT_BUDGET,
};

const B: u64 = DEFAULT_BUDGET;

#[test]
fn quiver_homs_match_brute_force() {
    let objs = gen::quivers(2, 2);
    for x in &objs {
        for y in &objs {
            let want = common::quiver_homs(x, y);
            assert_eq!(QuiverCat::default().homs(x, y, B).unwrap().len(), want, "{x} → {y}");
            assert_eq!(enumerate_comma_homs(&x.to_comma(), &y.to_comma(), B).unwrap().len(), want);
        }
    }
}

#[test]
fn hypergraph_homs_match_brute_force() {
    let objs = gen::hypergraphs(2, 2);
    for x in &objs {
        for y in &objs {
            let want = common::hypergraph_homs(x, y);
            assert_eq!(HypergraphCat::default().homs(x, y, B).unwrap().len(), want, "{x} → {y}");
            assert_eq!(enumerate_comma_homs(&x.to_comma(), &y.to_comma(), B).unwrap().len(), want);
        }
    }
}

#[test]
fn antihoms_match_brute_force() {
    let objs = gen::hypergraphs(2, 2);
    for x in &objs {
        for y in &objs {
            let want = common::anti_homs(x, y);
            assert_eq!(AntiCat.homs(x, y, B).unwrap().len(), want, "{x} → {y}");
            let (cx, cy) = (comma::anti_to_comma(x), comma::anti_to_comma(y));
            assert_eq!(enumerate_comma_homs(&cx, &cy, B).unwrap().len(), want);
        }
    }
}

#[test]
fn incidence_homs_match_brute_force() {
    let objs = gen::incidence_hypergraphs(2, 2, 2);
    for x in &objs {
        for y in &objs {
            let want = common::incidence_homs(x, y);
            assert_eq!(IncidenceCat::default().homs(x, y, B).unwrap().len(), want, "{x} → {y}");
            assert_eq!(enumerate_comma_homs(&x.to_comma(), &y.to_comma(), B).unwrap().len(), want);
        }
    }
}

#[test]
fn space_homs_match_brute_force() {
    let ds = gen::digraphs(2);
    for x in &ds {
        for y in &ds {
            assert_eq!(DigraCat.homs(x, y, B).unwrap().len(), common::digraph_homs(x, y));
        }
    }
    let ss = gen::set_systems(2);
    for x in &ss {
        for y in &ss {
            assert_eq!(SSysCat.homs(x, y, B).unwrap().len(), common::set_system_homs(x, y));
            assert_eq!(AntiSetCat.homs(x, y, B).unwrap().len(), common::set_system_antihoms(x, y));
        }
    }
    let is = gen::inc_structures(2, 2);
    for x in &is {
        for y in &is {
            assert_eq!(IStrCat.homs(x, y, B).unwrap().len(), common::inc_structure_homs(x, y));
        }
    }
}

#[test]
fn every_enumerated_hom_is_valid_and_distinct() {
    let objs = gen::quivers(2, 2);
    for x in &objs {
        for y in &objs {
            let (cx, cy) = (x.to_comma(), y.to_comma());
            let homs = enumerate_comma_homs(&cx, &cy, B).unwrap();
            for (i, m) in homs.iter().enumerate() {
                assert!(comma::check_morphism(m, &cx, &cy).is_ok());
                assert!(!homs[..i].contains(m));
            }
        }
    }
}

#[test]
fn budget_is_enforced() {
    let big = gen::digraphs(3).pop().unwrap();
    assert!(DigraCat.homs(&big, &big, 10).is_err());
    assert_eq!(DigraCat.homs(&big, &big, 27).unwrap().len(), 27);
}
