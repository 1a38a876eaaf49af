//! Binary products, equalizers, coproducts and coequalizers of quivers,
//! hypergraphs and incidence hypergraphs, and limits of the simple kinds
//! computed by passing to the parent category and simplifying.

use crate::comma::{self, Presented, Space};
use crate::error::{Error, Result};
use crate::finset::{
    self, coequalizer as set_coequalizer, coproduct_set, mask_label, power_set, product_set, FinMap,
    FinSet, SetCone, DEFAULT_POWER_SET_BOUND,
};
use crate::graphs::{
    Digraph, HypergraphHom, IncHom, IncHypergraph, IncStructure, Morphism, Quiver, QuiverHom, SSHypergraph,
    SetSystem, SimpleGraph, SpaceHom, SymDigraph,
};
use crate::label;
use crate::reflectors::{gra_to_symdigra, simplify, symdigra_to_gra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product<O, M> {
    pub object: O,
    pub proj1: M,
    pub proj2: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equalizer<O, M> {
    pub object: O,
    pub inclusion: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct<O, M> {
    pub object: O,
    pub inj1: M,
    pub inj2: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coequalizer<O, M> {
    pub object: O,
    pub projection: M,
}

/// Kinds with binary products, equalizers, coproducts and coequalizers.
pub trait FiniteLimits: Sized {
    type Hom;

    fn product(x: &Self, y: &Self) -> Result<Product<Self, Self::Hom>>;

    /// Largest subobject of `x` on which the parallel pair `f, g: x → y` agrees.
    fn equalizer(x: &Self, y: &Self, f: &Self::Hom, g: &Self::Hom) -> Result<Equalizer<Self, Self::Hom>>;

    fn coproduct(x: &Self, y: &Self) -> Result<Coproduct<Self, Self::Hom>>;

    /// Quotient of `y` by the equivalence generated by `f(a) ~ g(a)`.
    fn coequalizer(x: &Self, y: &Self, f: &Self::Hom, g: &Self::Hom) -> Result<Coequalizer<Self, Self::Hom>>;
}

pub fn product<T: FiniteLimits>(x: &T, y: &T) -> Result<Product<T, T::Hom>> {
    T::product(x, y)
}

pub fn equalizer<T: FiniteLimits>(x: &T, y: &T, f: &T::Hom, g: &T::Hom) -> Result<Equalizer<T, T::Hom>> {
    T::equalizer(x, y, f, g)
}

pub fn coproduct<T: FiniteLimits>(x: &T, y: &T) -> Result<Coproduct<T, T::Hom>> {
    T::coproduct(x, y)
}

pub fn coequalizer<T: FiniteLimits>(x: &T, y: &T, f: &T::Hom, g: &T::Hom) -> Result<Coequalizer<T, T::Hom>> {
    T::coequalizer(x, y, f, g)
}

fn parallel<O, M: Morphism<O>>(x: &O, y: &O, f: &M, g: &M) -> Result<()> {
    f.check(x, y).map_err(Error::Violation)?;
    g.check(x, y).map_err(Error::Violation)
}

/// `(a, b) ↦ (f a, g b)` between product carriers.
fn pair_map(dom: &SetCone, cod: &SetCone, f: &FinMap, g: &FinMap) -> Result<FinMap> {
    FinMap::from_fn(dom.carrier.clone(), cod.carrier.clone(), |l| {
        let (a, b) = label::split_pair(l).expect("product labels are pairs");
        label::pair(f.apply(a).unwrap_or_default(), g.apply(b).unwrap_or_default())
    })
}

/// `i:a ↦ i:(f a)` or `i:(g a)` between coproduct carriers.
fn sum_map(dom: &SetCone, cod: &SetCone, f: &FinMap, g: &FinMap) -> Result<FinMap> {
    FinMap::from_fn(dom.carrier.clone(), cod.carrier.clone(), |l| {
        let (side, a) = label::split_tag(l).expect("coproduct labels are tagged");
        let m = if side == 0 { f } else { g };
        label::tag(side, m.apply(a).unwrap_or_default())
    })
}

/// Elements where `f` and `g` agree, with the inclusion.
fn agreement(f: &FinMap, g: &FinMap, extra: impl Fn(&str) -> bool) -> Result<(FinSet, FinMap)> {
    let sub = FinSet::collect_dedup(
        f.iter()
            .zip(g.iter())
            .filter(|((a, x), (_, y))| x == y && extra(a))
            .map(|((a, _), _)| a),
    )?;
    let incl = FinMap::inclusion(&sub, f.dom())?;
    Ok((sub, incl))
}

/// Pushes a structure map along class projections: the class of `r` goes to
/// the class of `s(r)`, read off the representative.
fn on_classes(classes: &FinMap, s: &FinMap, target: &FinMap) -> Result<FinMap> {
    FinMap::from_fn(classes.cod().clone(), target.cod().clone(), |rep| {
        target.apply(s.apply(rep).unwrap_or_default()).unwrap_or_default().to_string()
    })
}

impl FiniteLimits for Quiver {
    type Hom = QuiverHom;

    fn product(x: &Quiver, y: &Quiver) -> Result<Product<Quiver, QuiverHom>> {
        let v = product_set(&x.vertices, &y.vertices);
        let e = product_set(&x.edges, &y.edges);
        let object = Quiver::new(
            v.carrier.clone(),
            e.carrier.clone(),
            pair_map(&e, &v, &x.src, &y.src)?,
            pair_map(&e, &v, &x.tgt, &y.tgt)?,
        )?;
        Ok(Product {
            object,
            proj1: QuiverHom {
                vmap: v.leg1,
                emap: e.leg1,
            },
            proj2: QuiverHom {
                vmap: v.leg2,
                emap: e.leg2,
            },
        })
    }

    fn equalizer(x: &Quiver, y: &Quiver, f: &QuiverHom, g: &QuiverHom) -> Result<Equalizer<Quiver, QuiverHom>> {
        parallel(x, y, f, g)?;
        let (vs, vi) = agreement(&f.vmap, &g.vmap, |_| true)?;
        let (es, ei) = agreement(&f.emap, &g.emap, |_| true)?;
        let object = Quiver::new(
            vs.clone(),
            es.clone(),
            x.src.restrict(&es)?.with_codomain(&vs)?,
            x.tgt.restrict(&es)?.with_codomain(&vs)?,
        )?;
        Ok(Equalizer {
            object,
            inclusion: QuiverHom { vmap: vi, emap: ei },
        })
    }

    fn coproduct(x: &Quiver, y: &Quiver) -> Result<Coproduct<Quiver, QuiverHom>> {
        let v = coproduct_set(&x.vertices, &y.vertices);
        let e = coproduct_set(&x.edges, &y.edges);
        let object = Quiver::new(
            v.carrier.clone(),
            e.carrier.clone(),
            sum_map(&e, &v, &x.src, &y.src)?,
            sum_map(&e, &v, &x.tgt, &y.tgt)?,
        )?;
        Ok(Coproduct {
            object,
            inj1: QuiverHom {
                vmap: v.leg1,
                emap: e.leg1,
            },
            inj2: QuiverHom {
                vmap: v.leg2,
                emap: e.leg2,
            },
        })
    }

    fn coequalizer(x: &Quiver, y: &Quiver, f: &QuiverHom, g: &QuiverHom) -> Result<Coequalizer<Quiver, QuiverHom>> {
        parallel(x, y, f, g)?;
        let qv = set_coequalizer(&f.vmap, &g.vmap)?;
        let qe = set_coequalizer(&f.emap, &g.emap)?;
        let object = Quiver::new(
            qv.cod().clone(),
            qe.cod().clone(),
            on_classes(&qe, &y.src, &qv)?,
            on_classes(&qe, &y.tgt, &qv)?,
        )?;
        Ok(Coequalizer {
            object,
            projection: QuiverHom { vmap: qv, emap: qe },
        })
    }
}

impl FiniteLimits for IncHypergraph {
    type Hom = IncHom;

    fn product(x: &IncHypergraph, y: &IncHypergraph) -> Result<Product<IncHypergraph, IncHom>> {
        let v = product_set(&x.vertices, &y.vertices);
        let e = product_set(&x.edges, &y.edges);
        let i = product_set(&x.incidences, &y.incidences);
        let object = IncHypergraph::new(
            v.carrier.clone(),
            e.carrier.clone(),
            i.carrier.clone(),
            pair_map(&i, &v, &x.att_v, &y.att_v)?,
            pair_map(&i, &e, &x.att_e, &y.att_e)?,
        )?;
        Ok(Product {
            object,
            proj1: IncHom {
                vmap: v.leg1,
                emap: e.leg1,
                imap: i.leg1,
            },
            proj2: IncHom {
                vmap: v.leg2,
                emap: e.leg2,
                imap: i.leg2,
            },
        })
    }

    fn equalizer(
        x: &IncHypergraph,
        y: &IncHypergraph,
        f: &IncHom,
        g: &IncHom,
    ) -> Result<Equalizer<IncHypergraph, IncHom>> {
        parallel(x, y, f, g)?;
        let (vs, vi) = agreement(&f.vmap, &g.vmap, |_| true)?;
        let (es, ei) = agreement(&f.emap, &g.emap, |_| true)?;
        let (is, ii) = agreement(&f.imap, &g.imap, |_| true)?;
        let object = IncHypergraph::new(
            vs.clone(),
            es.clone(),
            is.clone(),
            x.att_v.restrict(&is)?.with_codomain(&vs)?,
            x.att_e.restrict(&is)?.with_codomain(&es)?,
        )?;
        Ok(Equalizer {
            object,
            inclusion: IncHom {
                vmap: vi,
                emap: ei,
                imap: ii,
            },
        })
    }

    fn coproduct(x: &IncHypergraph, y: &IncHypergraph) -> Result<Coproduct<IncHypergraph, IncHom>> {
        let v = coproduct_set(&x.vertices, &y.vertices);
        let e = coproduct_set(&x.edges, &y.edges);
        let i = coproduct_set(&x.incidences, &y.incidences);
        let object = IncHypergraph::new(
            v.carrier.clone(),
            e.carrier.clone(),
            i.carrier.clone(),
            sum_map(&i, &v, &x.att_v, &y.att_v)?,
            sum_map(&i, &e, &x.att_e, &y.att_e)?,
        )?;
        Ok(Coproduct {
            object,
            inj1: IncHom {
                vmap: v.leg1,
                emap: e.leg1,
                imap: i.leg1,
            },
            inj2: IncHom {
                vmap: v.leg2,
                emap: e.leg2,
                imap: i.leg2,
            },
        })
    }

    fn coequalizer(
        x: &IncHypergraph,
        y: &IncHypergraph,
        f: &IncHom,
        g: &IncHom,
    ) -> Result<Coequalizer<IncHypergraph, IncHom>> {
        parallel(x, y, f, g)?;
        let qv = set_coequalizer(&f.vmap, &g.vmap)?;
        let qe = set_coequalizer(&f.emap, &g.emap)?;
        let qi = set_coequalizer(&f.imap, &g.imap)?;
        let object = IncHypergraph::new(
            qv.cod().clone(),
            qe.cod().clone(),
            qi.cod().clone(),
            on_classes(&qi, &y.att_v, &qv)?,
            on_classes(&qi, &y.att_e, &qe)?,
        )?;
        Ok(Coequalizer {
            object,
            projection: IncHom {
                vmap: qv,
                emap: qe,
                imap: qi,
            },
        })
    }
}

fn bits_of(vertices: &FinSet, members: &[&str]) -> u64 {
    members
        .iter()
        .filter_map(|m| vertices.index_of(m))
        .fold(0, |acc, i| acc | 1 << i)
}

impl FiniteLimits for SSHypergraph {
    type Hom = HypergraphHom;

    /// Edges are triples `(e, e', S)` with `S ⊆ V × V'` projecting onto
    /// `ε(e)` and `ε'(e')`; the edge carries `S`.
    fn product(x: &SSHypergraph, y: &SSHypergraph) -> Result<Product<SSHypergraph, HypergraphHom>> {
        let v = product_set(&x.vertices, &y.vertices);
        let n = v.carrier.len();
        if n > DEFAULT_POWER_SET_BOUND {
            return Err(Error::SizeLimit {
                what: "hypergraph product vertex set",
                size: n,
                bound: DEFAULT_POWER_SET_BOUND,
            });
        }
        let left = v.leg1.indices();
        let right = v.leg2.indices();
        let project = |mask: u64, side: &[usize]| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << side[i])
        };
        let mut edges = Vec::new();
        for e in x.edges.iter() {
            let me = bits_of(&x.vertices, &x.members(e));
            for f in y.edges.iter() {
                let mf = bits_of(&y.vertices, &y.members(f));
                for s in 0..1u64 << n {
                    if project(s, left) == me && project(s, right) == mf {
                        let sl = mask_label(&v.carrier, s);
                        edges.push((label::tuple(&[e, f, sl.as_str()]), e.to_string(), f.to_string(), sl));
                    }
                }
            }
        }
        let eset = FinSet::new(edges.iter().map(|t| t.0.clone()))?;
        let pv = power_set(&v.carrier)?;
        let incidence = FinMap::new(eset.clone(), pv, edges.iter().map(|t| (t.0.as_str(), t.3.as_str())))?;
        let ep1 = FinMap::new(eset.clone(), x.edges.clone(), edges.iter().map(|t| (t.0.as_str(), t.1.as_str())))?;
        let ep2 = FinMap::new(eset.clone(), y.edges.clone(), edges.iter().map(|t| (t.0.as_str(), t.2.as_str())))?;
        Ok(Product {
            object: SSHypergraph::new(v.carrier.clone(), eset, incidence)?,
            proj1: HypergraphHom {
                vmap: v.leg1,
                emap: ep1,
            },
            proj2: HypergraphHom {
                vmap: v.leg2,
                emap: ep2,
            },
        })
    }

    fn equalizer(
        x: &SSHypergraph,
        y: &SSHypergraph,
        f: &HypergraphHom,
        g: &HypergraphHom,
    ) -> Result<Equalizer<SSHypergraph, HypergraphHom>> {
        parallel(x, y, f, g)?;
        let (vs, vi) = agreement(&f.vmap, &g.vmap, |_| true)?;
        let (es, ei) = agreement(&f.emap, &g.emap, |e| x.members(e).iter().all(|v| vs.contains(v)))?;
        let pv = power_set(&vs)?;
        let incidence = FinMap::from_fn(es.clone(), pv, |e| label::subset(x.members(e)))?;
        Ok(Equalizer {
            object: SSHypergraph::new(vs, es, incidence)?,
            inclusion: HypergraphHom { vmap: vi, emap: ei },
        })
    }

    fn coproduct(x: &SSHypergraph, y: &SSHypergraph) -> Result<Coproduct<SSHypergraph, HypergraphHom>> {
        let v = coproduct_set(&x.vertices, &y.vertices);
        let e = coproduct_set(&x.edges, &y.edges);
        let pv = power_set(&v.carrier)?;
        let incidence = FinMap::from_fn(e.carrier.clone(), pv, |l| {
            let (side, a) = label::split_tag(l).expect("coproduct labels are tagged");
            let members = if side == 0 { x.members(a) } else { y.members(a) };
            let mut tagged: Vec<String> = members.iter().map(|m| label::tag(side, m)).collect();
            tagged.sort();
            label::subset(tagged)
        })?;
        Ok(Coproduct {
            object: SSHypergraph::new(v.carrier.clone(), e.carrier.clone(), incidence)?,
            inj1: HypergraphHom {
                vmap: v.leg1,
                emap: e.leg1,
            },
            inj2: HypergraphHom {
                vmap: v.leg2,
                emap: e.leg2,
            },
        })
    }

    fn coequalizer(
        x: &SSHypergraph,
        y: &SSHypergraph,
        f: &HypergraphHom,
        g: &HypergraphHom,
    ) -> Result<Coequalizer<SSHypergraph, HypergraphHom>> {
        parallel(x, y, f, g)?;
        let qv = set_coequalizer(&f.vmap, &g.vmap)?;
        let qe = set_coequalizer(&f.emap, &g.emap)?;
        let image = finset::direct_image_map(&qv)?;
        let incidence = on_classes(&qe, &y.incidence, &image)?;
        Ok(Coequalizer {
            object: SSHypergraph::new(qv.cod().clone(), qe.cod().clone(), incidence)?,
            projection: HypergraphHom { vmap: qv, emap: qe },
        })
    }
}

/// The simple kinds whose limits are computed through a parent category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleKind {
    Digra,
    SSys,
    IStr,
    Gra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Product,
    Equalizer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleObject {
    Digraph(Digraph),
    SetSystem(SetSystem),
    IncStructure(IncStructure),
    Graph(SimpleGraph),
}

impl SimpleObject {
    pub fn kind(&self) -> SimpleKind {
        match self {
            SimpleObject::Digraph(_) => SimpleKind::Digra,
            SimpleObject::SetSystem(_) => SimpleKind::SSys,
            SimpleObject::IncStructure(_) => SimpleKind::IStr,
            SimpleObject::Graph(_) => SimpleKind::Gra,
        }
    }

    fn to_space(&self) -> Space {
        match self {
            SimpleObject::Digraph(d) => Space::Digraph(d.clone()),
            SimpleObject::SetSystem(s) => Space::SetSystem(s.clone()),
            SimpleObject::IncStructure(s) => Space::IncStructure(s.clone()),
            SimpleObject::Graph(g) => Space::SetSystem(g.as_set_system().clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitArgs {
    Pair(SimpleObject, SimpleObject),
    Parallel {
        source: SimpleObject,
        target: SimpleObject,
        first: SpaceHom,
        second: SpaceHom,
    },
}

/// A limit in a simple category: the object and its legs (two projections,
/// or one inclusion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleLimit {
    pub object: SimpleObject,
    pub legs: Vec<SpaceHom>,
}

fn parent_limit<T>(construction: Construction, args: &LimitArgs) -> Result<(comma::CommaObject, Vec<SpaceHom>)>
where
    T: Presented + FiniteLimits<Hom = <T as Presented>::Hom>,
{
    let lift = |s: &SimpleObject| -> Result<T> { comma::from_comma::<T>(&comma::comma_of(&s.to_space())) };
    let legs = |ms: &[&<T as Presented>::Hom]| -> Vec<SpaceHom> {
        ms.iter().map(|m| comma::space_hom_of(&T::hom_to_comma(m))).collect()
    };
    match (construction, args) {
        (Construction::Product, LimitArgs::Pair(a, b)) => {
            let p = T::product(&lift(a)?, &lift(b)?)?;
            Ok((p.object.to_comma(), legs(&[&p.proj1, &p.proj2])))
        }
        (
            Construction::Equalizer,
            LimitArgs::Parallel {
                source,
                target,
                first,
                second,
            },
        ) => {
            let (s, t) = (source.to_space(), target.to_space());
            let f = T::hom_from_comma(&comma::comma_hom_of(first, &s, &t)?)?;
            let g = T::hom_from_comma(&comma::comma_hom_of(second, &s, &t)?)?;
            let e = T::equalizer(&lift(source)?, &lift(target)?, &f, &g)?;
            Ok((e.object.to_comma(), legs(&[&e.inclusion])))
        }
        (Construction::Product, _) => Err(Error::KindMismatch("a product needs two objects".into())),
        (Construction::Equalizer, _) => Err(Error::KindMismatch("an equalizer needs a parallel pair".into())),
    }
}

fn check_kinds(kind: SimpleKind, args: &LimitArgs) -> Result<()> {
    let objs: Vec<&SimpleObject> = match args {
        LimitArgs::Pair(a, b) => vec![a, b],
        LimitArgs::Parallel { source, target, .. } => vec![source, target],
    };
    for o in objs {
        if o.kind() != kind {
            return Err(Error::KindMismatch(format!("expected {kind:?}, got {:?}", o.kind())));
        }
    }
    Ok(())
}

fn as_sym(o: &SimpleObject) -> Result<SimpleObject> {
    match o {
        SimpleObject::Graph(g) => Ok(SimpleObject::Digraph(gra_to_symdigra(g).into_digraph())),
        _ => Err(Error::KindMismatch("expected a graph".into())),
    }
}

/// Limit in `Digra`, `SSys`, `IStr` or `Gra`: include into quivers,
/// hypergraphs or incidence hypergraphs, take the limit there, simplify,
/// and read the result back as a space. `Gra` goes through symmetric
/// digraphs.
pub fn limit_in_simple(kind: SimpleKind, construction: Construction, args: &LimitArgs) -> Result<SimpleLimit> {
    check_kinds(kind, args)?;
    if kind == SimpleKind::Gra {
        let sym_args = match args {
            LimitArgs::Pair(a, b) => LimitArgs::Pair(as_sym(a)?, as_sym(b)?),
            LimitArgs::Parallel {
                source,
                target,
                first,
                second,
            } => LimitArgs::Parallel {
                source: as_sym(source)?,
                target: as_sym(target)?,
                first: first.clone(),
                second: second.clone(),
            },
        };
        let lim = limit_in_simple(SimpleKind::Digra, construction, &sym_args)?;
        let SimpleObject::Digraph(d) = lim.object else {
            unreachable!("digraph limits are digraphs")
        };
        let g = symdigra_to_gra(&SymDigraph::new(d)?);
        return Ok(SimpleLimit {
            object: SimpleObject::Graph(g),
            legs: lim.legs,
        });
    }
    let (parent, legs) = match kind {
        SimpleKind::Digra => parent_limit::<Quiver>(construction, args)?,
        SimpleKind::SSys => parent_limit::<SSHypergraph>(construction, args)?,
        SimpleKind::IStr => parent_limit::<IncHypergraph>(construction, args)?,
        SimpleKind::Gra => unreachable!(),
    };
    let object = match comma::space_of(&simplify(&parent)?.result)? {
        Space::Digraph(d) => SimpleObject::Digraph(d),
        Space::SetSystem(s) => SimpleObject::SetSystem(s),
        Space::IncStructure(s) => SimpleObject::IncStructure(s),
    };
    Ok(SimpleLimit { object, legs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_single_edges() {
        let x = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let y = Quiver::build(&["c", "d"], &[("f", "c", "d")]).unwrap();
        let p = product(&x, &y).unwrap();
        assert_eq!(p.object.vertices.len(), 4);
        assert_eq!(p.object.edges.labels(), ["(e,f)"]);
        assert_eq!(p.object.src.apply("(e,f)"), Some("(a,c)"));
        assert_eq!(p.object.tgt.apply("(e,f)"), Some("(b,d)"));
        assert!(product(&x, &Quiver::empty()).unwrap().object.vertices.is_empty());
    }

    #[test]
    fn equalizer_of_equal_maps_is_everything() {
        let x = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let id = QuiverHom::identity(&x);
        let eq = equalizer(&x, &x, &id, &id).unwrap();
        assert_eq!(eq.object, x);
    }

    #[test]
    fn equalizer_of_disagreeing_maps_is_empty() {
        let x = Quiver::build(&["a"], &[]).unwrap();
        let y = Quiver::build(&["p", "q"], &[]).unwrap();
        let f = QuiverHom {
            vmap: FinMap::new(x.vertices.clone(), y.vertices.clone(), [("a", "p")]).unwrap(),
            emap: FinMap::identity(&x.edges),
        };
        let g = QuiverHom {
            vmap: FinMap::new(x.vertices.clone(), y.vertices.clone(), [("a", "q")]).unwrap(),
            emap: FinMap::identity(&x.edges),
        };
        assert!(equalizer(&x, &y, &f, &g).unwrap().object.vertices.is_empty());
    }

    #[test]
    fn coequalizer_of_equal_maps_keeps_codomain() {
        let x = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let id = QuiverHom::identity(&x);
        assert_eq!(coequalizer(&x, &x, &id, &id).unwrap().object, x);
    }

    #[test]
    fn hypergraph_product_of_edges_has_seven_edges() {
        let k = SSHypergraph::build(&["a", "b"], &[("e", &["a", "b"])]).unwrap();
        let p = product(&k, &k).unwrap();
        assert_eq!(p.object.edges.len(), 7);
    }

    #[test]
    fn digraph_product_via_quivers() {
        let x = SimpleObject::Digraph(Digraph::build(&["a", "b"], &[("a", "b")]).unwrap());
        let y = SimpleObject::Digraph(Digraph::build(&["c", "d"], &[("c", "d")]).unwrap());
        let lim = limit_in_simple(SimpleKind::Digra, Construction::Product, &LimitArgs::Pair(x, y)).unwrap();
        let SimpleObject::Digraph(d) = lim.object else { panic!() };
        assert_eq!(d.vertices.len(), 4);
        assert_eq!(d.arcs.len(), 1);
        assert_eq!(lim.legs.len(), 2);
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let x = SimpleObject::Digraph(Digraph::build(&["a"], &[]).unwrap());
        let y = SimpleObject::SetSystem(SetSystem::build(&["a"], &[]).unwrap());
        assert!(matches!(
            limit_in_simple(SimpleKind::Digra, Construction::Product, &LimitArgs::Pair(x, y)),
            Err(Error::KindMismatch(_))
        ));
    }
}
