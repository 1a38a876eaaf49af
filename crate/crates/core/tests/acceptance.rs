//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use catgraph_core::comma::{self, Presented, Space};
use catgraph_core::coreflectors;
use catgraph_core::graphs::{Digraph, Quiver, SymDigraph};
use catgraph_core::limits::{self, Construction, LimitArgs, SimpleKind, SimpleObject};
use catgraph_core::reflectors::{self, simplify};
use catgraph_core::spaces;
use catgraph_core::verify::gen;
use catgraph_core::verify::suites::{self, SuiteConfig};
use catgraph_core::LawReport;

type Outcome = Result<String, String>;

/// Runs the named suites at the given sizes; fails with the first failing
/// report.
fn suites_pass(runs: &[(&str, usize)]) -> Result<(usize, Vec<LawReport>), String> {
    let mut total = 0;
    let mut all = Vec::new();
    for &(name, n) in runs {
        let cfg = SuiteConfig {
            max_size: Some(n),
            ..SuiteConfig::default()
        };
        let reports = suites::run(name, &cfg)
            .ok_or_else(|| format!("no suite {name}"))?
            .map_err(|e| format!("{name}: {e}"))?;
        if let Some(bad) = reports.iter().find(|r| !r.passed()) {
            return Err(format!("{name}: {bad}"));
        }
        if reports.is_empty() {
            return Err(format!("{name}: no instances"));
        }
        total += reports.len();
        all.extend(reports);
    }
    Ok((total, all))
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn simplicity() -> Outcome {
    let (n, _) = suites_pass(&[("simplicity-quiver", 3), ("simplicity-hypergraph", 3), ("simplicity-incidence", 3)])?;
    for q in gen::quivers(3, 3) {
        let pairs: BTreeSet<(&str, &str)> =
            q.edges.iter().map(|e| (q.src.apply(e).unwrap(), q.tgt.apply(e).unwrap())).collect();
        let s = Quiver::from_comma(&simplify(&q.to_comma()).unwrap().result).unwrap();
        check(s.edges.len() == pairs.len(), || format!("{q}: {} edges, {} distinct pairs", s.edges.len(), pairs.len()))?;
    }
    Ok(format!("{n} instances"))
}

fn reflective() -> Outcome {
    let (n, _) = suites_pass(&[("reflective-quiver", 2), ("reflective-hypergraph", 2), ("reflective-incidence", 2)])?;
    let ys = gen::digraphs(2);
    for x in gen::quivers(2, 3) {
        let Space::Digraph(sx) = comma::space_of(&simplify(&x.to_comma()).unwrap().result).unwrap() else {
            return Err("simplified quiver is not a digraph".into());
        };
        for y in &ys {
            let ny = Quiver::from_comma(&comma::comma_of(&Space::Digraph(y.clone()))).unwrap();
            let (lhs, rhs) = (common::quiver_homs(&x, &ny), common::digraph_homs(&sx, y));
            check(lhs == rhs, || format!("|Hom({x}, N{y})| = {lhs} but |Hom(S x, {y})| = {rhs}"))?;
        }
    }
    Ok(format!("{n} pairs; brute-force hom counts agree"))
}

fn round_trips() -> Outcome {
    let (n, _) = suites_pass(&[
        ("roundtrip-quiver", 3),
        ("roundtrip-incidence", 3),
        ("roundtrip-hypergraph", 3),
        ("roundtrip-gra", 3),
    ])?;
    Ok(format!("{n} instances"))
}

fn adjoint_chain() -> Outcome {
    let (n, reports) = suites_pass(&[("adjoint-digraph", 3), ("operators-digraph", 3), ("triangles", 3)])?;
    let tri = reports.iter().filter(|r| r.law == "triangles-closure" || r.law == "triangles-interior").count();
    check(tri == 2 * gen::digraphs(3).len(), || format!("{tri} digraph triangle checks"))?;
    let syms: Vec<Digraph> = gen::sym_digraphs(3).into_iter().map(SymDigraph::into_digraph).collect();
    for x in gen::digraphs(3) {
        let cl = reflectors::sym_closure(&x).result.into_digraph();
        let int = reflectors::sym_interior(&x).result.into_digraph();
        for y in &syms {
            check(common::digraph_homs(&cl, y) == common::digraph_homs(&x, y), || format!("closure count at {x}, {y}"))?;
            check(common::digraph_homs(y, &int) == common::digraph_homs(y, &x), || format!("interior count at {x}, {y}"))?;
        }
    }
    Ok(format!("{n} checks; brute-force hom counts agree"))
}

fn simple_limits() -> Outcome {
    let (n, _) = suites_pass(&[("product-digra", 2), ("product-gra", 2), ("equalizer-digra", 2)])?;
    let ds = gen::digraphs(2);
    for x in &ds {
        for y in &ds {
            let lim = limits::limit_in_simple(
                SimpleKind::Digra,
                Construction::Product,
                &LimitArgs::Pair(SimpleObject::Digraph(x.clone()), SimpleObject::Digraph(y.clone())),
            )
            .map_err(|e| e.to_string())?;
            let SimpleObject::Digraph(p) = lim.object else {
                return Err("digraph product is not a digraph".into());
            };
            for t in &ds {
                let (a, b) = (common::digraph_homs(t, &p), common::digraph_homs(t, x) * common::digraph_homs(t, y));
                check(a == b, || format!("{x} × {y} at {t}: {a} vs {b}"))?;
            }
        }
    }
    Ok(format!("{n} pairs; brute-force hom counts agree"))
}

fn nonpreservation() -> Outcome {
    let (_, reports) = suites_pass(&[("nonpreservation-ssys", 2)])?;
    let w = reports
        .iter()
        .find(|r| r.law == "nonpreservation-ssys")
        .and_then(|r| r.witness.clone())
        .ok_or("no witness")?;
    let contrast = reports.iter().filter(|r| r.law == "preservation-symdigra").count();
    Ok(format!("witness {w}; {contrast} symmetric digraph pairs preserved"))
}

fn cosimplification() -> Outcome {
    let (n, _) = suites_pass(&[
        ("cosimplify-quiver", 3),
        ("cosimplify-incidence", 3),
        ("cosimplify-anti", 3),
        ("coreflective-anti", 2),
    ])?;
    let ys = gen::set_systems(2);
    for h in gen::hypergraphs(2, 3) {
        let t = comma::anti_from_comma(&coreflectors::cosimplify_p(&h).result).unwrap();
        for y in &ys {
            let y = comma::anti_from_comma(&comma::cocomma_of(y)).unwrap();
            let (a, b) = (common::anti_homs(&y, &h), common::anti_homs(&y, &t));
            check(a == b, || format!("|Hom({y}, {h})| = {a} but |Hom({y}, T)| = {b}"))?;
        }
    }
    Ok(format!("{n} instances; brute-force antihomomorphism counts agree"))
}

fn comma_space() -> Outcome {
    let (n, _) = suites_pass(&[("comma-space", 3)])?;
    Ok(format!("{n} checks"))
}

fn spaces_suite() -> Outcome {
    let (n, _) = suites_pass(&[
        ("spaces-topology", 3),
        ("spaces-sigma", 4),
        ("spaces-borel", 3),
        ("spaces-antihom", 3),
        ("spaces-adjunction", 3),
    ])?;
    let systems = gen::set_systems(4);
    for s in &systems {
        let atoms = spaces::generate_sigma(s).map_err(|e| e.to_string())?;
        check(atoms.measurable().masks() == common::sigma_closure(s), || format!("Σ oracles disagree on {s}"))?;
    }
    Ok(format!("{n} checks; Σ oracles agree on {} set systems", systems.len()))
}

fn psi_determinacy() -> Outcome {
    let (n, reports) = suites_pass(&[("psi-determinacy", 2)])?;
    let w = reports
        .iter()
        .find(|r| r.law == "psi-determinacy-needs-simplicity")
        .and_then(|r| r.witness.clone())
        .ok_or("no counterexample for a non-simple target")?;
    Ok(format!("{n} checks; counterexample {w}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("simplicity and idempotence", simplicity),
        ("reflective universal property", reflective),
        ("isomorphism round trips", round_trips),
        ("adjoint chain on digraphs", adjoint_chain),
        ("limits in simple categories", simple_limits),
        ("non-preservation witness", nonpreservation),
        ("cosimplification", cosimplification),
        ("comma/space equivalence", comma_space),
        ("finite spaces", spaces_suite),
        ("psi-determinacy", psi_determinacy),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) in {secs:.2}s: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) in {secs:.2}s: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
