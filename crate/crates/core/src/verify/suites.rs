//! Named law suites. Each suite enumerates instances up to a size bound
//! (or samples them from a seed) and returns one report per instance.

use std::collections::{BTreeMap, BTreeSet};

use crate::comma::{self, CommaObject, Presentation, Presented, Space};
use crate::coreflectors::{self, cosimplify};
use crate::error::{Error, Result};
use crate::finset::{all_maps, FinMap};
use crate::graphs::{
    Digraph, IncHypergraph, Morphism, Quiver, SSHypergraph, SetSystem, SetSystemAntiHom,
    SimpleGraph, SymDigraph,
};
use crate::limits::{self, Construction, FiniteLimits, LimitArgs, SimpleKind, SimpleObject};
use crate::reflectors::{self, simplify};
use crate::spaces;

use super::gen::{self, Sampler};
use super::{
    coproduct_law, coequalizer_law, coreflection_law, coreflection_triangles, equalizer_law, product_law,
    reflection_law, reflection_triangles, AntiSetCat, Category, CommaCat, DigraCat, IStrCat, LawReport,
    PresentedCat, SSysCat, DEFAULT_BUDGET,
};

/// Run-time knobs shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Vertex bound; `None` uses the suite's default.
    pub max_size: Option<usize>,
    /// Sample instances from this seed instead of enumerating them all.
    pub seed: Option<u64>,
    pub samples: usize,
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: None,
            seed: None,
            samples: 40,
            budget: DEFAULT_BUDGET,
        }
    }
}

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub default_size: usize,
    run: fn(&Ctx) -> Result<Vec<LawReport>>,
}

struct Ctx {
    n: usize,
    seed: Option<u64>,
    samples: usize,
    budget: u64,
}

impl Ctx {
    fn sampler(&self) -> Option<Sampler> {
        self.seed.map(Sampler::new)
    }

    fn quivers(&self, nv: usize, ne: usize) -> Vec<Quiver> {
        match self.sampler() {
            Some(mut s) => (0..self.samples).map(|_| s.quiver(nv, ne)).collect(),
            None => gen::quivers(nv, ne),
        }
    }

    fn hypergraphs(&self, nv: usize, ne: usize) -> Vec<SSHypergraph> {
        match self.sampler() {
            Some(mut s) => (0..self.samples).map(|_| s.hypergraph(nv, ne)).collect(),
            None => gen::hypergraphs(nv, ne),
        }
    }

    fn incidences(&self, nv: usize, ne: usize, ni: usize) -> Vec<IncHypergraph> {
        match self.sampler() {
            Some(mut s) => (0..self.samples).map(|_| s.incidence(nv, ne, ni)).collect(),
            None => gen::incidence_hypergraphs(nv, ne, ni),
        }
    }

    fn digraphs(&self, nv: usize) -> Vec<Digraph> {
        match self.sampler() {
            Some(mut s) => (0..self.samples).map(|_| s.digraph(nv)).collect(),
            None => gen::digraphs(nv),
        }
    }

    fn set_systems(&self, nv: usize) -> Vec<SetSystem> {
        match self.sampler() {
            Some(mut s) => (0..self.samples).map(|_| s.set_system(nv)).collect(),
            None => gen::set_systems(nv),
        }
    }

    /// Parent-category objects of a presentation: `n` vertices and `ne` edges
    /// (incidences for `R1`, which also gets `n` edges).
    fn parents(&self, p: Presentation, ne: usize) -> Vec<CommaObject> {
        match p {
            Presentation::Q1 => self.quivers(self.n, ne).iter().map(Presented::to_comma).collect(),
            Presentation::H1 => self.hypergraphs(self.n, ne).iter().map(Presented::to_comma).collect(),
            Presentation::R1 => self.incidences(self.n, self.n, ne).iter().map(Presented::to_comma).collect(),
            Presentation::P1 => self.hypergraphs(self.n, ne).iter().map(comma::anti_to_comma).collect(),
        }
    }
}

/// Every simple object of a presentation with at most `nv` vertices.
fn simples(p: Presentation, nv: usize) -> Vec<CommaObject> {
    let spaces: Vec<Space> = match p {
        Presentation::Q1 => gen::digraphs(nv).into_iter().map(Space::Digraph).collect(),
        Presentation::H1 => gen::set_systems(nv).into_iter().map(Space::SetSystem).collect(),
        Presentation::R1 => gen::inc_structures(nv, nv).into_iter().map(Space::IncStructure).collect(),
        Presentation::P1 => Vec::new(),
    };
    spaces.iter().map(comma::comma_of).collect()
}

fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::passed)
}

/// Folds many sub-checks of one instance into one report: the first failure,
/// or a pass counting the checks made.
fn merge(law: &str, instance: String, parts: Vec<LawReport>) -> LawReport {
    match parts.iter().find(|r| !r.passed()) {
        Some(bad) => {
            let mut r = LawReport::fail(law, instance, format!("{}: {}", bad.instance, bad.witness.clone().unwrap_or_default()));
            r.counts = bad.counts.clone();
            r
        }
        None => LawReport::pass(law, instance).with_count("checks", parts.len()),
    }
}

fn presentation_suffix(p: Presentation) -> &'static str {
    match p {
        Presentation::Q1 => "quiver",
        Presentation::H1 => "hypergraph",
        Presentation::R1 => "incidence",
        Presentation::P1 => "anti",
    }
}

// ---- simplification -------------------------------------------------------

fn simplicity(ctx: &Ctx, p: Presentation) -> Result<Vec<LawReport>> {
    let law = format!("simplicity-{}", presentation_suffix(p));
    let mut out = Vec::new();
    for x in ctx.parents(p, ctx.n) {
        let r = simplify(&x)?;
        let again = simplify(&r.result)?;
        let recomposed = comma::compose(&r.embedding, &r.unit)?;
        let outcome = if !comma::is_simple(&r.result) {
            Err("result is not simple".to_string())
        } else if again.result != r.result {
            Err(format!("not idempotent: {} became {}", r.result, again.result))
        } else if r.unit.phi.is_bijective() != comma::is_simple(&x) {
            Err("unit is an isomorphism exactly when the input is simple, violated".to_string())
        } else if recomposed.phi != x.f {
            Err("embedding after unit is not the structure map".to_string())
        } else {
            comma::check_morphism(&r.unit, &x, &r.result)
                .and_then(|_| comma::check_morphism(&r.embedding, &r.result, &r.complete))
        };
        out.push(LawReport::from_check(&law, x.to_string(), outcome));
    }
    Ok(out)
}

fn reflective(ctx: &Ctx, p: Presentation) -> Result<Vec<LawReport>> {
    let law = format!("reflective-{}", presentation_suffix(p));
    let ys = simples(p, ctx.n);
    let mut out = Vec::new();
    for x in ctx.parents(p, ctx.n + 1) {
        let r = simplify(&x)?;
        for y in &ys {
            out.push(reflection_law(
                &CommaCat,
                &law,
                (&x, &r.result, &r.unit),
                y,
                |m| r.factor(m, y),
                ctx.budget,
            )?);
        }
    }
    Ok(out)
}

fn psi_determinacy(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let law = "psi-determinacy";
    let mut out = Vec::new();
    for p in [Presentation::Q1, Presentation::H1, Presentation::R1] {
        let xs = ctx.parents(p, ctx.n + 1);
        for y in simples(p, ctx.n) {
            for x in &xs {
                let mut by_psi: BTreeMap<String, String> = BTreeMap::new();
                let mut outcome = Ok(());
                for m in CommaCat.homs(x, &y, ctx.budget)? {
                    let key = format!("{:?}", m.psi);
                    let phi = m.phi.to_string();
                    if let Some(prev) = by_psi.insert(key, phi.clone()) {
                        if prev != phi {
                            outcome = Err(format!("φ = {prev} and φ = {phi} share ψ"));
                            break;
                        }
                    }
                }
                out.push(LawReport::from_check(law, format!("x = {x}; y = {y}"), outcome));
            }
        }
    }
    // simplicity of the target is needed: find two squares with equal ψ and different φ
    let mut witness = None;
    'search: for y in gen::quivers(ctx.n.max(1), 2) {
        let y = y.to_comma();
        if comma::is_simple(&y) {
            continue;
        }
        for x in gen::quivers(ctx.n.max(1), 1) {
            let x = x.to_comma();
            let homs = CommaCat.homs(&x, &y, ctx.budget)?;
            for (i, a) in homs.iter().enumerate() {
                for b in &homs[i + 1..] {
                    if a.psi == b.psi && a.phi != b.phi {
                        witness = Some(format!("x = {x}; y = {y}; {a} and {b}"));
                        break 'search;
                    }
                }
            }
        }
    }
    out.push(match witness {
        Some(w) => LawReport::pass("psi-determinacy-needs-simplicity", "non-simple quiver targets").with_witness(w),
        None => LawReport::fail(
            "psi-determinacy-needs-simplicity",
            "non-simple quiver targets",
            "no pair of squares with equal ψ and different φ found",
        ),
    });
    Ok(out)
}

// ---- symmetric closure and interior ----------------------------------------

fn sym(d: &Digraph) -> Result<SymDigraph> {
    SymDigraph::new(d.clone())
}

fn adjoint_digraph(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let syms: Vec<Digraph> = gen::sym_digraphs(ctx.n).into_iter().map(SymDigraph::into_digraph).collect();
    let mut out = Vec::new();
    for x in ctx.digraphs(ctx.n) {
        let cl = reflectors::sym_closure(&x);
        let int = reflectors::sym_interior(&x);
        let (cl_obj, int_obj) = (cl.result.as_digraph().clone(), int.result.as_digraph().clone());
        for y in &syms {
            let hy = sym(y)?;
            out.push(reflection_law(
                &DigraCat,
                "closure-reflection",
                (&x, &cl_obj, &cl.unit),
                y,
                |m| reflectors::factor_through_sym_closure(&x, m, &hy),
                ctx.budget,
            )?);
            out.push(coreflection_law(
                &DigraCat,
                "interior-coreflection",
                y,
                (&x, &int_obj, &int.counit),
                |m| reflectors::factor_through_sym_interior(&hy, m, &x),
                ctx.budget,
            )?);
        }
    }
    Ok(out)
}

fn arcs_subset(a: &Digraph, b: &Digraph) -> bool {
    a.arcs.is_subset(&b.arcs)
}

fn operators_digraph(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for g in ctx.digraphs(ctx.n) {
        let cl = reflectors::sym_closure(&g).result.into_digraph();
        let int = reflectors::sym_interior(&g).result.into_digraph();
        let mut parts = vec![
            LawReport::from_check("closure-extensive", "", ok_if(arcs_subset(&g, &cl), "arcs lost")),
            LawReport::from_check(
                "closure-idempotent",
                "",
                ok_if(reflectors::sym_closure(&cl).result.as_digraph() == &cl, "closure moved"),
            ),
            LawReport::from_check("interior-contractive", "", ok_if(arcs_subset(&int, &g), "arcs gained")),
            LawReport::from_check(
                "interior-idempotent",
                "",
                ok_if(reflectors::sym_interior(&int).result.as_digraph() == &int, "interior moved"),
            ),
            LawReport::from_check(
                "fixed-points",
                "",
                ok_if(!g.is_symmetric() || (cl == g && int == g), "symmetric input not fixed"),
            ),
        ];
        // monotonicity along single-arc additions implies it for all inclusions
        for v in g.vertices.iter() {
            for w in g.vertices.iter() {
                let mut bigger = g.clone();
                if !bigger.arcs.insert((v.to_string(), w.to_string())) {
                    continue;
                }
                let cl2 = reflectors::sym_closure(&bigger).result.into_digraph();
                let int2 = reflectors::sym_interior(&bigger).result.into_digraph();
                parts.push(LawReport::from_check(
                    "monotone",
                    format!("adding ({v},{w})"),
                    ok_if(arcs_subset(&cl, &cl2) && arcs_subset(&int, &int2), "order not preserved"),
                ));
            }
        }
        out.push(merge("operators-digraph", g.to_string(), parts));
    }
    Ok(out)
}

fn ok_if(cond: bool, why: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

// ---- deletion -------------------------------------------------------------

fn coreflective_del(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let graphs = gen::simple_graphs(ctx.n.min(2));
    let mut out = Vec::new();
    for x in ctx.set_systems(ctx.n) {
        let d = reflectors::del_ssys(&x);
        let dx = d.result.as_set_system().clone();
        for g in &graphs {
            out.push(coreflection_law(
                &SSysCat,
                "del-coreflection",
                g.as_set_system(),
                (&x, &dx, &d.counit),
                |m| reflectors::factor_through_del(g, m, &x),
                ctx.budget,
            )?);
        }
        let on_graph = SimpleGraph::new(x.clone()).map(|g| reflectors::del_ssys(g.as_set_system()).result == g);
        if let Ok(same) = on_graph {
            out.push(LawReport::from_check(
                "del-fixes-graphs",
                x.to_string(),
                ok_if(same, "deletion changed a simple graph"),
            ));
        }
    }
    Ok(out)
}

// ---- cosimplification -----------------------------------------------------

fn cosimplify_quiver(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for q in ctx.quivers(ctx.n, ctx.n) {
        let c = coreflectors::cosimplify_quiver(&q);
        let back = Quiver::from_comma(&c.result)?;
        let endpoints: BTreeSet<&str> = q.src.iter().chain(q.tgt.iter()).map(|(_, v)| v).collect();
        let kept: BTreeSet<&str> = back.vertices.iter().collect();
        let again = cosimplify(&c.result)?;
        let outcome = if kept != endpoints {
            Err(format!("kept {kept:?}, endpoints are {endpoints:?}"))
        } else if back.edges != q.edges {
            Err("edges changed".into())
        } else if again.result != c.result {
            Err("not idempotent".into())
        } else {
            comma::check_morphism(&c.counit, &c.result, &q.to_comma())
        };
        out.push(LawReport::from_check("cosimplify-quiver", q.to_string(), outcome));
    }
    Ok(out)
}

fn cosimplify_incidence(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for g in ctx.incidences(ctx.n, ctx.n, ctx.n) {
        let c = coreflectors::cosimplify_inc(&g);
        let back = IncHypergraph::from_comma(&c.result)?;
        let hit_v: BTreeSet<&str> = g.att_v.iter().map(|(_, v)| v).collect();
        let hit_e: BTreeSet<&str> = g.att_e.iter().map(|(_, e)| e).collect();
        let outcome = if back.vertices.iter().collect::<BTreeSet<_>>() != hit_v {
            Err("vertex set is not the set of attached vertices".to_string())
        } else if back.edges.iter().collect::<BTreeSet<_>>() != hit_e {
            Err("edge set is not the set of attached edges".to_string())
        } else if back.incidences != g.incidences {
            Err("incidences changed".into())
        } else if cosimplify(&c.result)?.result != c.result {
            Err("not idempotent".into())
        } else {
            comma::check_morphism(&c.counit, &c.result, &g.to_comma())
        };
        out.push(LawReport::from_check("cosimplify-incidence", g.to_string(), outcome));
    }
    Ok(out)
}

fn cosimplify_anti(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for h in ctx.hypergraphs(ctx.n, ctx.n) {
        let x = comma::anti_to_comma(&h);
        let c = coreflectors::cosimplify_p(&h);
        let outcome = if !c.result.f.is_injective() {
            Err("structure map not injective".to_string())
        } else if cosimplify(&c.result)?.result != c.result {
            Err("not idempotent".into())
        } else if c.result.f.range() != x.f.range() {
            Err("edge values changed".into())
        } else {
            comma::check_morphism(&c.counit, &c.result, &x)
        };
        out.push(LawReport::from_check("cosimplify-anti", h.to_string(), outcome));
    }
    Ok(out)
}

fn coreflective_anti(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let ys: Vec<CommaObject> = gen::set_systems(ctx.n).iter().map(comma::cocomma_of).collect();
    let mut out = Vec::new();
    for x in ctx.parents(Presentation::P1, ctx.n + 1) {
        let c = cosimplify(&x)?;
        for y in &ys {
            out.push(coreflection_law(
                &CommaCat,
                "coreflective-anti",
                y,
                (&x, &c.result, &c.counit),
                |m| c.factor(y, m),
                ctx.budget,
            )?);
        }
    }
    Ok(out)
}

fn couniversal(ctx: &Ctx, p: Presentation) -> Result<Vec<LawReport>> {
    let law = format!("couniversal-{}", presentation_suffix(p));
    let ys: Vec<CommaObject> = match p {
        Presentation::Q1 => gen::quivers(ctx.n, ctx.n * ctx.n)
            .into_iter()
            .filter(coreflectors::is_loaded)
            .map(|q| q.to_comma())
            .collect(),
        _ => gen::incidence_hypergraphs(ctx.n, ctx.n, ctx.n * ctx.n)
            .into_iter()
            .filter(|g| coreflectors::is_full_incidence(g) && g.vertices.is_empty() == g.edges.is_empty())
            .map(|g| g.to_comma())
            .collect(),
    };
    let mut out = Vec::new();
    for x in ctx.parents(p, ctx.n + 1) {
        let c = cosimplify(&x)?;
        for y in &ys {
            out.push(coreflection_law(
                &CommaCat,
                &law,
                y,
                (&x, &c.result, &c.counit),
                |m| c.factor(y, m),
                ctx.budget,
            )?);
        }
    }
    Ok(out)
}

// ---- triangle identities ---------------------------------------------------

fn triangles(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for p in [Presentation::Q1, Presentation::H1, Presentation::R1] {
        let law = format!("triangles-simplify-{}", presentation_suffix(p));
        for x in ctx.parents(p, ctx.n + 1) {
            out.push(reflection_triangles(
                &CommaCat,
                &law,
                &x,
                comma::is_simple(&x),
                |o| simplify(o).map(|r| (r.result, r.unit)),
                reflectors::factor_through_simplification,
            )?);
        }
    }
    for x in ctx.parents(Presentation::P1, ctx.n + 1) {
        out.push(coreflection_triangles(
            &CommaCat,
            "triangles-cosimplify-anti",
            &x,
            comma::is_cosimple(&x),
            |o| cosimplify(o).map(|c| (c.result, c.counit)),
            coreflectors::factor_through_cosimplification,
        )?);
    }
    for x in ctx.digraphs(ctx.n) {
        out.push(reflection_triangles(
            &DigraCat,
            "triangles-closure",
            &x,
            x.is_symmetric(),
            |o| {
                let c = reflectors::sym_closure(o);
                Ok((c.result.into_digraph(), c.unit))
            },
            |a, m, b| reflectors::factor_through_sym_closure(a, m, &sym(b)?),
        )?);
        out.push(coreflection_triangles(
            &DigraCat,
            "triangles-interior",
            &x,
            x.is_symmetric(),
            |o| {
                let c = reflectors::sym_interior(o);
                Ok((c.result.into_digraph(), c.counit))
            },
            |a, m, b| reflectors::factor_through_sym_interior(&sym(a)?, m, b),
        )?);
    }
    for x in ctx.set_systems(ctx.n) {
        let is_graph = SimpleGraph::new(x.clone()).is_ok();
        out.push(coreflection_triangles(
            &SSysCat,
            "triangles-del",
            &x,
            is_graph,
            |o| {
                let d = reflectors::del_ssys(o);
                Ok((d.result.into_set_system(), d.counit))
            },
            |a, m, b| reflectors::factor_through_del(&SimpleGraph::new(a.clone())?, m, b),
        )?);
        out.push(coreflection_triangles(
            &AntiSetCat,
            "triangles-topology",
            &x,
            spaces::is_topology(&x),
            |o| Ok((spaces::generate_topology(o)?.into_set_system(), spaces::topology_counit(o))),
            |a, m, b| anti_factor(a, m, &spaces::generate_topology(b)?.into_set_system()),
        )?);
        out.push(coreflection_triangles(
            &AntiSetCat,
            "triangles-sigma",
            &x,
            spaces::is_sigma_algebra(&x),
            |o| Ok((spaces::generate_sigma(o)?.into_set_system(), spaces::sigma_counit(o))),
            |a, m, b| anti_factor(a, m, &spaces::generate_sigma(b)?.into_set_system()),
        )?);
    }
    Ok(out)
}

/// The transpose of an antihomomorphism into a generated structure is the
/// same vertex map.
fn anti_factor(dom: &SetSystem, m: &SetSystemAntiHom, generated: &SetSystem) -> Result<SetSystemAntiHom> {
    m.check(dom, generated).map_err(Error::Violation)?;
    Ok(m.clone())
}

// ---- limits ---------------------------------------------------------------

fn simple_object_sets(kind: SimpleKind, n: usize) -> Vec<SimpleObject> {
    match kind {
        SimpleKind::Digra => gen::digraphs(n).into_iter().map(SimpleObject::Digraph).collect(),
        SimpleKind::SSys => gen::set_systems(n).into_iter().map(SimpleObject::SetSystem).collect(),
        SimpleKind::IStr => gen::inc_structures(n, n.min(1))
            .into_iter()
            .map(SimpleObject::IncStructure)
            .collect(),
        SimpleKind::Gra => gen::simple_graphs(n).into_iter().map(SimpleObject::Graph).collect(),
    }
}

fn product_in<C: Category>(
    cat: &C,
    law: &str,
    (x, y): (&C::Obj, &C::Obj),
    (p, legs): (&C::Obj, &[C::Mor]),
    tests: &[C::Obj],
    budget: u64,
) -> Result<LawReport> {
    let mut parts = Vec::new();
    for l in legs.iter().zip([x, y]) {
        parts.push(LawReport::from_check(
            "leg",
            cat.describe(l.0),
            ok_if(cat.is_hom(l.0, p, l.1), "projection is not a morphism"),
        ));
    }
    for t in tests {
        parts.push(product_law(cat, law, (x, y), (p, &legs[0], &legs[1]), t, budget)?);
    }
    Ok(merge(law, format!("x = {x}; y = {y}; product = {p}"), parts))
}

fn product_simple(ctx: &Ctx, kind: SimpleKind) -> Result<Vec<LawReport>> {
    let law = match kind {
        SimpleKind::Digra => "product-digra",
        SimpleKind::SSys => "product-ssys",
        SimpleKind::IStr => "product-istr",
        SimpleKind::Gra => "product-gra",
    };
    let objs = simple_object_sets(kind, ctx.n);
    let mut out = Vec::new();
    for a in &objs {
        for b in &objs {
            let lim = limits::limit_in_simple(kind, Construction::Product, &LimitArgs::Pair(a.clone(), b.clone()))?;
            let report = match (a, b, &lim.object) {
                (SimpleObject::Digraph(x), SimpleObject::Digraph(y), SimpleObject::Digraph(p)) => {
                    let tests = gen::digraphs(ctx.n);
                    product_in(&DigraCat, law, (x, y), (p, &lim.legs), &tests, ctx.budget)?
                }
                (SimpleObject::SetSystem(x), SimpleObject::SetSystem(y), SimpleObject::SetSystem(p)) => {
                    let tests = gen::set_systems(ctx.n);
                    product_in(&SSysCat, law, (x, y), (p, &lim.legs), &tests, ctx.budget)?
                }
                (SimpleObject::IncStructure(x), SimpleObject::IncStructure(y), SimpleObject::IncStructure(p)) => {
                    let tests = gen::inc_structures(ctx.n, ctx.n.min(1));
                    product_in(&IStrCat, law, (x, y), (p, &lim.legs), &tests, ctx.budget)?
                }
                (SimpleObject::Graph(x), SimpleObject::Graph(y), SimpleObject::Graph(p)) => {
                    let tests: Vec<SetSystem> =
                        gen::simple_graphs(ctx.n).into_iter().map(SimpleGraph::into_set_system).collect();
                    let mut r = product_in(
                        &SSysCat,
                        law,
                        (x.as_set_system(), y.as_set_system()),
                        (p.as_set_system(), &lim.legs),
                        &tests,
                        ctx.budget,
                    )?;
                    // symmetric digraphs are closed under products in Digra
                    let (sx, sy, sp) = (
                        reflectors::gra_to_symdigra(x).into_digraph(),
                        reflectors::gra_to_symdigra(y).into_digraph(),
                        reflectors::gra_to_symdigra(p).into_digraph(),
                    );
                    let digra = product_in(&DigraCat, law, (&sx, &sy), (&sp, &lim.legs), &gen::digraphs(ctx.n), ctx.budget)?;
                    if !digra.passed() {
                        r = digra;
                    }
                    r
                }
                _ => return Err(Error::KindMismatch("limit of unexpected kind".into())),
            };
            out.push(report);
        }
    }
    Ok(out)
}

fn equalizer_digra(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let objs = gen::digraphs(ctx.n);
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            let homs = DigraCat.homs(x, y, ctx.budget)?;
            for f in &homs {
                for g in &homs {
                    let args = LimitArgs::Parallel {
                        source: SimpleObject::Digraph(x.clone()),
                        target: SimpleObject::Digraph(y.clone()),
                        first: f.clone(),
                        second: g.clone(),
                    };
                    let lim = limits::limit_in_simple(SimpleKind::Digra, Construction::Equalizer, &args)?;
                    let SimpleObject::Digraph(e) = &lim.object else {
                        return Err(Error::KindMismatch("digraph equalizer".into()));
                    };
                    let mut parts = Vec::new();
                    for t in &objs {
                        parts.push(equalizer_law(&DigraCat, "equalizer-digra", (x, f, g), (e, &lim.legs[0]), t, ctx.budget)?);
                    }
                    out.push(merge("equalizer-digra", format!("x = {x}; f = {}; g = {}", f.vmap, g.vmap), parts));
                }
            }
        }
    }
    Ok(out)
}

fn parent_limits<T>(law: &str, objs: &[T], tests: &[T], budget: u64) -> Result<Vec<LawReport>>
where
    T: Presented + FiniteLimits<Hom = <T as Presented>::Hom> + Clone + std::fmt::Display,
    <T as Presented>::Hom: Morphism<T> + Clone + PartialEq + std::fmt::Debug,
{
    let cat = PresentedCat::<T>::default();
    let mut out = Vec::new();
    for x in objs {
        for y in objs {
            let mut parts = Vec::new();
            let p = T::product(x, y)?;
            let s = T::coproduct(x, y)?;
            for t in tests {
                parts.push(product_law(&cat, "product", (x, y), (&p.object, &p.proj1, &p.proj2), t, budget)?);
                parts.push(coproduct_law(&cat, "coproduct", (x, y), (&s.object, &s.inj1, &s.inj2), t, budget)?);
            }
            let homs = cat.homs(x, y, budget)?;
            for f in &homs {
                for g in &homs {
                    let e = T::equalizer(x, y, f, g)?;
                    let q = T::coequalizer(x, y, f, g)?;
                    for t in tests {
                        parts.push(equalizer_law(&cat, "equalizer", (x, f, g), (&e.object, &e.inclusion), t, budget)?);
                        parts.push(coequalizer_law(&cat, "coequalizer", (y, f, g), (&q.object, &q.projection), t, budget)?);
                    }
                }
            }
            out.push(merge(law, format!("x = {x}; y = {y}"), parts));
        }
    }
    Ok(out)
}

fn limits_quiver(ctx: &Ctx) -> Result<Vec<LawReport>> {
    parent_limits("limits-quiver", &gen::quivers(ctx.n, 1), &gen::quivers(ctx.n, 2), ctx.budget)
}

fn limits_hypergraph(ctx: &Ctx) -> Result<Vec<LawReport>> {
    parent_limits("limits-hypergraph", &gen::hypergraphs(ctx.n, 1), &gen::hypergraphs(ctx.n, 1), ctx.budget)
}

fn limits_incidence(ctx: &Ctx) -> Result<Vec<LawReport>> {
    parent_limits(
        "limits-incidence",
        &gen::incidence_hypergraphs(ctx.n, 1, 1),
        &gen::incidence_hypergraphs(ctx.n, 1, 2),
        ctx.budget,
    )
}

/// Searches pairs of simple graphs for one whose product in `Gra`, viewed
/// as a set system, is not the product in `SSys`. A test object `t` with
/// `|Hom(t, N(x × y))| ≠ |Hom(t, Nx)|·|Hom(t, Ny)|` certifies it.
pub fn find_product_nonpreservation(max_v: usize, budget: u64) -> Result<LawReport> {
    let law = "nonpreservation-ssys";
    let graphs = gen::simple_graphs(max_v);
    let tests = gen::set_systems(3);
    let mut failing_pairs = 0usize;
    let mut first = None;
    for x in &graphs {
        for y in &graphs {
            let lim = limits::limit_in_simple(
                SimpleKind::Gra,
                Construction::Product,
                &LimitArgs::Pair(SimpleObject::Graph(x.clone()), SimpleObject::Graph(y.clone())),
            )?;
            let SimpleObject::Graph(p) = &lim.object else {
                return Err(Error::KindMismatch("graph product".into()));
            };
            for t in &tests {
                let into_p = SSysCat.homs(t, p.as_set_system(), budget)?.len();
                let into_x = SSysCat.homs(t, x.as_set_system(), budget)?.len();
                let into_y = SSysCat.homs(t, y.as_set_system(), budget)?.len();
                if into_p != into_x * into_y {
                    failing_pairs += 1;
                    if first.is_none() {
                        first = Some(format!(
                            "x = {x}; y = {y}; x × y in Gra = {p}; t = {t}: |Hom(t, N(x × y))| = {into_p} but |Hom(t, Nx)|·|Hom(t, Ny)| = {}",
                            into_x * into_y
                        ));
                    }
                    break;
                }
            }
        }
    }
    let instance = format!("pairs of simple graphs with at most {max_v} vertices");
    Ok(match first {
        Some(w) => LawReport::pass(law, instance)
            .with_witness(w)
            .with_count("pairs", graphs.len() * graphs.len())
            .with_count("non-preserved", failing_pairs),
        None => LawReport::fail(law, instance, "no pair of graphs witnesses non-preservation"),
    })
}

fn nonpreservation(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = vec![find_product_nonpreservation(ctx.n, ctx.budget)?];
    // the inclusion of symmetric digraphs does preserve products
    let syms: Vec<Digraph> = gen::sym_digraphs(ctx.n).into_iter().map(SymDigraph::into_digraph).collect();
    let tests = gen::digraphs(ctx.n);
    for x in &syms {
        for y in &syms {
            let lim = limits::limit_in_simple(
                SimpleKind::Digra,
                Construction::Product,
                &LimitArgs::Pair(SimpleObject::Digraph(x.clone()), SimpleObject::Digraph(y.clone())),
            )?;
            let SimpleObject::Digraph(p) = &lim.object else {
                return Err(Error::KindMismatch("digraph product".into()));
            };
            let mut r = product_in(&DigraCat, "preservation-symdigra", (x, y), (p, &lim.legs), &tests, ctx.budget)?;
            if !p.is_symmetric() {
                r = LawReport::fail("preservation-symdigra", r.instance, "product of symmetric digraphs is not symmetric");
            }
            out.push(r);
        }
    }
    Ok(out)
}

// ---- comma / space ---------------------------------------------------------

fn comma_space(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    let mut spaces_all: Vec<Space> = gen::digraphs(ctx.n).into_iter().map(Space::Digraph).collect();
    spaces_all.extend(gen::set_systems(ctx.n).into_iter().map(Space::SetSystem));
    spaces_all.extend(gen::inc_structures(ctx.n, ctx.n.min(2)).into_iter().map(Space::IncStructure));
    for s in &spaces_all {
        let back = comma::space_of(&comma::comma_of(s))?;
        out.push(LawReport::from_check("space-comma-identity", s.to_string(), ok_if(&back == s, "space changed")));
    }
    let small = ctx.n.min(2);
    let mut simple_objs: Vec<CommaObject> = Vec::new();
    for q in gen::quivers(small, 2) {
        simple_objs.push(simplify(&q.to_comma())?.result);
    }
    for h in gen::hypergraphs(small, 2) {
        simple_objs.push(simplify(&h.to_comma())?.result);
    }
    for g in gen::incidence_hypergraphs(small, 1, 2) {
        simple_objs.push(simplify(&g.to_comma())?.result);
    }
    simple_objs.sort_by_key(|x| x.to_string());
    simple_objs.dedup();
    for x in &simple_objs {
        let z = comma::zeta(x)?;
        let target = comma::comma_of(&comma::space_of(x)?);
        let outcome = if !z.phi.is_bijective() {
            Err("q_f is not bijective".to_string())
        } else if !z.psi.is_bijective() {
            Err("ψ-component is not an identity".to_string())
        } else {
            comma::check_morphism(&z, x, &target)
        };
        out.push(LawReport::from_check("zeta-iso", x.to_string(), outcome));
    }
    for x in &simple_objs {
        for y in &simple_objs {
            if x.presentation != y.presentation {
                continue;
            }
            let (sx, sy) = (comma::space_of(x)?, comma::space_of(y)?);
            let (zx, zy) = (comma::zeta(x)?, comma::zeta(y)?);
            let mut parts = Vec::new();
            for m in CommaCat.homs(x, y, ctx.budget)? {
                let sm = comma::space_hom_of(&m);
                let cm = comma::comma_hom_of(&sm, &sx, &sy)?;
                let left = comma::compose(&cm, &zx)?;
                let right = comma::compose(&zy, &m)?;
                parts.push(LawReport::from_check("square", m.to_string(), ok_if(left == right, "square does not commute")));
                let again = comma::space_hom_of(&comma::comma_hom_of(&sm, &sx, &sy)?);
                parts.push(LawReport::from_check("space-of-comma", m.to_string(), ok_if(again == sm, "space map changed")));
            }
            out.push(merge("zeta-natural", format!("x = {x}; y = {y}"), parts));
        }
    }
    Ok(out)
}

// ---- isomorphisms ----------------------------------------------------------

fn roundtrip<T>(law: &str, objs: &[T], budget: u64) -> Result<Vec<LawReport>>
where
    T: Presented + Clone + PartialEq + std::fmt::Display,
    T::Hom: PartialEq,
{
    let mut out = Vec::new();
    for g in objs {
        let x = g.to_comma();
        let back = T::from_comma(&x)?;
        let again = back.to_comma();
        let mut outcome = ok_if(&back == g && again == x, "object round trip changed the input");
        if outcome.is_ok() {
            for m in super::enumerate_comma_homs(&x, &x, budget)? {
                let h = T::hom_from_comma(&m)?;
                if T::hom_to_comma(&h) != m {
                    outcome = Err(format!("morphism {m} changed"));
                    break;
                }
            }
        }
        out.push(LawReport::from_check(law, g.to_string(), outcome));
    }
    Ok(out)
}

fn roundtrip_quiver(ctx: &Ctx) -> Result<Vec<LawReport>> {
    roundtrip("roundtrip-quiver", &ctx.quivers(ctx.n, ctx.n), ctx.budget)
}

fn roundtrip_incidence(ctx: &Ctx) -> Result<Vec<LawReport>> {
    roundtrip("roundtrip-incidence", &ctx.incidences(ctx.n, ctx.n.min(2), ctx.n), ctx.budget)
}

fn roundtrip_hypergraph(ctx: &Ctx) -> Result<Vec<LawReport>> {
    roundtrip("roundtrip-hypergraph", &ctx.hypergraphs(ctx.n, ctx.n), ctx.budget)
}

fn roundtrip_gra(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for g in gen::simple_graphs(ctx.n) {
        let back = reflectors::symdigra_to_gra(&reflectors::gra_to_symdigra(&g));
        out.push(LawReport::from_check("roundtrip-gra", g.to_string(), ok_if(back == g, "W∘Z changed the graph")));
    }
    for d in gen::digraphs(ctx.n).into_iter().filter(Digraph::is_symmetric) {
        let s = sym(&d)?;
        let back = reflectors::gra_to_symdigra(&reflectors::symdigra_to_gra(&s));
        out.push(LawReport::from_check("roundtrip-symdigra", d.to_string(), ok_if(back == s, "Z∘W changed the digraph")));
    }
    Ok(out)
}

// ---- spaces ---------------------------------------------------------------

fn with_member(s: &SetSystem, mask: u64) -> SetSystem {
    let mut masks = s.masks();
    masks.insert(mask);
    SetSystem::from_masks(&s.vertices, masks)
}

fn closure_laws(
    law: &str,
    s: &SetSystem,
    close: impl Fn(&SetSystem) -> Result<SetSystem>,
    valid: impl Fn(&SetSystem) -> bool,
) -> Result<LawReport> {
    let c = close(s)?;
    let mut parts = vec![
        LawReport::from_check("extensive", "", ok_if(s.sets.is_subset(&c.sets), "members lost")),
        LawReport::from_check("idempotent", "", ok_if(close(&c)? == c, "closure moved")),
        LawReport::from_check("closed", "", ok_if(valid(&c), "output not closed")),
    ];
    for m in 0..1u64 << s.vertices.len() {
        let bigger = with_member(s, m);
        if bigger != *s {
            parts.push(LawReport::from_check(
                "monotone",
                format!("adding mask {m}"),
                ok_if(c.sets.is_subset(&close(&bigger)?.sets), "order not preserved"),
            ));
        }
    }
    Ok(merge(law, s.to_string(), parts))
}

/// σ-algebra generated by iterating complement and union to a fixed point.
fn sigma_by_iteration(s: &SetSystem) -> SetSystem {
    let n = s.vertices.len();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
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
            return SetSystem::from_masks(&s.vertices, have);
        }
        have = next;
    }
}

fn spaces_topology(ctx: &Ctx) -> Result<Vec<LawReport>> {
    ctx.set_systems(ctx.n)
        .iter()
        .map(|s| {
            closure_laws("spaces-topology", s, |x| Ok(spaces::generate_topology(x)?.into_set_system()), spaces::is_topology)
        })
        .collect()
}

fn spaces_sigma(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for s in ctx.set_systems(ctx.n) {
        let sigma = spaces::generate_sigma(&s)?.into_set_system();
        let mut r = closure_laws("spaces-sigma", &s, |x| Ok(spaces::generate_sigma(x)?.into_set_system()), spaces::is_sigma_algebra)?;
        if r.passed() && sigma_by_iteration(&s) != sigma {
            r = LawReport::fail("spaces-sigma", s.to_string(), "atom partition and iterative closure disagree");
        }
        out.push(r);
    }
    Ok(out)
}

fn spaces_borel(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for t in gen::topologies(ctx.n) {
        let top = spaces::FiniteTopSpace::new(t.clone())?;
        let b = spaces::borel(&top)?.into_set_system();
        let outcome = ok_if(b == spaces::generate_sigma(&t)?.into_set_system(), "Borel differs from Σ of the opens")
            .and_then(|_| ok_if(b == sigma_by_iteration(&t), "Borel differs from the iterative oracle"));
        out.push(LawReport::from_check("spaces-borel", t.to_string(), outcome));
    }
    Ok(out)
}

fn preimage_oracle(f: &FinMap, dom: &SetSystem, cod: &SetSystem) -> bool {
    cod.sets.iter().all(|member| {
        let pulled: BTreeSet<String> = f
            .iter()
            .filter(|(_, y)| member.contains(*y))
            .map(|(x, _)| x.to_string())
            .collect();
        dom.sets.contains(&pulled)
    })
}

fn spaces_antihom(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let mut objs = gen::topologies(ctx.n);
    objs.extend(gen::sigma_algebras(ctx.n));
    objs.sort();
    objs.dedup();
    let mut out = Vec::new();
    for a in &objs {
        for b in &objs {
            let mut parts = Vec::new();
            for f in all_maps(&a.vertices, &b.vertices) {
                let h = SetSystemAntiHom { vmap: f.clone() };
                let r = spaces::check_antihom(&h, a, b);
                let agree = r.passed() == preimage_oracle(&f, a, b);
                parts.push(LawReport::from_check("preimage", f.to_string(), ok_if(agree, "preimage test disagrees with oracle")));
            }
            out.push(merge("spaces-antihom", format!("{a} → {b}"), parts));
        }
    }
    Ok(out)
}

fn spaces_adjunction(ctx: &Ctx) -> Result<Vec<LawReport>> {
    let tops = gen::topologies(ctx.n);
    let sigmas = gen::sigma_algebras(ctx.n);
    let mut out = Vec::new();
    for s in ctx.set_systems(ctx.n) {
        let g = spaces::generate_topology(&s)?.into_set_system();
        let m = spaces::generate_sigma(&s)?.into_set_system();
        let counit = spaces::topology_counit(&s);
        for t in &tops {
            out.push(coreflection_law(
                &AntiSetCat,
                "topology-coreflection",
                t,
                (&s, &g, &counit),
                |h| anti_factor(t, h, &g),
                ctx.budget,
            )?);
        }
        for t in &sigmas {
            out.push(coreflection_law(
                &AntiSetCat,
                "sigma-coreflection",
                t,
                (&s, &m, &counit),
                |h| anti_factor(t, h, &m),
                ctx.budget,
            )?);
        }
    }
    Ok(out)
}

// ---- registry --------------------------------------------------------------

macro_rules! suite {
    ($name:expr, $size:expr, $about:expr, $f:expr) => {
        Suite {
            name: $name,
            about: $about,
            default_size: $size,
            run: $f,
        }
    };
}

pub const SUITES: &[Suite] = &[
    suite!("simplicity-quiver", 3, "simplification yields simple objects and is idempotent", |c| simplicity(c, Presentation::Q1)),
    suite!("simplicity-hypergraph", 3, "simplification yields simple objects and is idempotent", |c| simplicity(c, Presentation::H1)),
    suite!("simplicity-incidence", 3, "simplification yields simple objects and is idempotent", |c| simplicity(c, Presentation::R1)),
    suite!("reflective-quiver", 2, "unique factorization through the simplification unit", |c| reflective(c, Presentation::Q1)),
    suite!("reflective-hypergraph", 2, "unique factorization through the simplification unit", |c| reflective(c, Presentation::H1)),
    suite!("reflective-incidence", 2, "unique factorization through the simplification unit", |c| reflective(c, Presentation::R1)),
    suite!("psi-determinacy", 2, "into a simple object, ψ determines φ", psi_determinacy),
    suite!("roundtrip-quiver", 3, "quivers and their Q1 presentation round-trip", roundtrip_quiver),
    suite!("roundtrip-hypergraph", 3, "hypergraphs and their H1 presentation round-trip", roundtrip_hypergraph),
    suite!("roundtrip-incidence", 3, "incidence hypergraphs and their R1 presentation round-trip", roundtrip_incidence),
    suite!("roundtrip-gra", 3, "simple graphs and symmetric digraphs round-trip", roundtrip_gra),
    suite!("adjoint-digraph", 3, "symmetric closure and interior are reflection and coreflection", adjoint_digraph),
    suite!("operators-digraph", 3, "closure and interior operator laws", operators_digraph),
    suite!("coreflective-del", 3, "deletion is a coreflection onto simple graphs", coreflective_del),
    suite!("cosimplify-quiver", 3, "cosimplification removes exactly the isolated vertices", cosimplify_quiver),
    suite!("cosimplify-incidence", 3, "cosimplification removes isolated vertices and loose edges", cosimplify_incidence),
    suite!("cosimplify-anti", 3, "cosimplification under antihomomorphisms removes parallel edges", cosimplify_anti),
    suite!("coreflective-anti", 2, "unique factorization through the P1 cosimplification counit", coreflective_anti),
    suite!("couniversal-quiver", 2, "loaded quivers factor uniquely through the cosimplification counit", |c| couniversal(c, Presentation::Q1)),
    suite!("couniversal-incidence", 1, "full incidence hypergraphs factor uniquely through the counit", |c| couniversal(c, Presentation::R1)),
    suite!("triangles", 3, "triangle identities of every adjunction", triangles),
    suite!("product-digra", 2, "products of digraphs via quivers", |c| product_simple(c, SimpleKind::Digra)),
    suite!("product-ssys", 2, "products of set systems via hypergraphs", |c| product_simple(c, SimpleKind::SSys)),
    suite!("product-istr", 2, "products of incidence structures via incidence hypergraphs", |c| product_simple(c, SimpleKind::IStr)),
    suite!("product-gra", 2, "products of simple graphs via symmetric digraphs", |c| product_simple(c, SimpleKind::Gra)),
    suite!("equalizer-digra", 2, "equalizers of digraph morphisms via quivers", equalizer_digra),
    suite!("limits-quiver", 2, "products, equalizers, coproducts and coequalizers of quivers", limits_quiver),
    suite!("limits-hypergraph", 2, "products, equalizers, coproducts and coequalizers of hypergraphs", limits_hypergraph),
    suite!("limits-incidence", 1, "products, equalizers, coproducts and coequalizers of incidence hypergraphs", limits_incidence),
    suite!("nonpreservation-ssys", 2, "the inclusion of graphs into set systems does not preserve products", nonpreservation),
    suite!("comma-space", 3, "spaces and simple comma objects are isomorphic", comma_space),
    suite!("spaces-topology", 3, "topology generation is a closure operator", spaces_topology),
    suite!("spaces-sigma", 3, "σ-algebra generation is a closure operator and matches iteration", spaces_sigma),
    suite!("spaces-borel", 3, "Borel σ-algebra is Σ of the opens", spaces_borel),
    suite!("spaces-antihom", 3, "continuity and measurability are the preimage condition", spaces_antihom),
    suite!("spaces-adjunction", 3, "topology and σ-algebra generation are coreflections", spaces_adjunction),
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.name)
}

impl Suite {
    pub fn run(&self, cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
        let ctx = Ctx {
            n: cfg.max_size.unwrap_or(self.default_size),
            seed: cfg.seed,
            samples: cfg.samples,
            budget: cfg.budget,
        };
        (self.run)(&ctx)
    }
}

/// Runs a suite by name; `None` if no suite has that name.
pub fn run(name: &str, cfg: &SuiteConfig) -> Option<Result<Vec<LawReport>>> {
    find(name).map(|s| s.run(cfg))
}

/// True when every report passed.
pub fn passed(reports: &[LawReport]) -> bool {
    all_pass(reports)
}
