//! The functor registry behind `catgraph apply`.

use catgraph_core::comma::{self, Presented};
use catgraph_core::coreflectors;
use catgraph_core::graphs::{
    HypergraphHom, IncHom, IncHypergraph, Morphism, Quiver, QuiverHom, SSHypergraph, SetSystem, SimpleGraph,
    SpaceHom, SymDigraph,
};
use catgraph_core::limits::{self, Construction, LimitArgs, SimpleKind, SimpleObject};
use catgraph_core::reflectors::{self, simplify};
use catgraph_core::spaces;

use crate::format::{self, Doc, MapDoc};
use crate::Failure;

pub const FUNCTORS: &[&str] = &[
    "simplify-quiver",
    "simplify-hypergraph",
    "simplify-incidence",
    "del",
    "sym-closure",
    "sym-interior",
    "gra-to-symdigra",
    "symdigra-to-gra",
    "cosimplify-quiver",
    "cosimplify-incidence",
    "cosimplify-anti",
    "generate-topology",
    "generate-sigma",
    "borel",
    "product",
    "equalizer",
    "coproduct",
    "coequalizer",
];

fn wrong(functor: &str, doc: &Doc) -> Failure {
    Failure::Kind(format!("{functor} does not accept a {} document", doc.kind()))
}

fn quiver(doc: &Doc, functor: &str) -> Result<Quiver, Failure> {
    match doc {
        Doc::Quiver { vertices, edges } => format::quiver_from(vertices, edges),
        _ => Err(wrong(functor, doc)),
    }
}

fn hypergraph(doc: &Doc, functor: &str) -> Result<SSHypergraph, Failure> {
    match doc {
        Doc::Hypergraph { vertices, edges } => format::hypergraph_from(vertices, edges),
        _ => Err(wrong(functor, doc)),
    }
}

fn incidence(doc: &Doc, functor: &str) -> Result<IncHypergraph, Failure> {
    match doc {
        Doc::Incidence {
            vertices,
            edges,
            incidences,
        } => format::incidence_from(vertices, edges, incidences),
        _ => Err(wrong(functor, doc)),
    }
}

/// Any set-system-shaped document, validated against its kind tag.
fn set_system(doc: &Doc, functor: &str) -> Result<SetSystem, Failure> {
    let (vertices, sets) = match doc {
        Doc::Setsystem { vertices, sets }
        | Doc::Graph { vertices, sets }
        | Doc::Topology { vertices, sets }
        | Doc::Sigma { vertices, sets } => (vertices, sets),
        _ => return Err(wrong(functor, doc)),
    };
    let s = format::set_system_from(vertices, sets)?;
    let valid = match doc {
        Doc::Graph { .. } => SimpleGraph::new(s.clone()).is_ok(),
        Doc::Topology { .. } => spaces::is_topology(&s),
        Doc::Sigma { .. } => spaces::is_sigma_algebra(&s),
        _ => true,
    };
    if !valid {
        return Err(Failure::Parse(format!("sets: not a valid {} document", doc.kind())));
    }
    Ok(s)
}

fn simple_object(doc: &Doc, functor: &str) -> Result<SimpleObject, Failure> {
    match doc {
        Doc::Digraph { vertices, arcs } => Ok(SimpleObject::Digraph(format::digraph_from(vertices, arcs)?)),
        Doc::Setsystem { .. } => Ok(SimpleObject::SetSystem(set_system(doc, functor)?)),
        Doc::Graph { .. } => Ok(SimpleObject::Graph(
            SimpleGraph::new(set_system(doc, functor)?).map_err(Failure::from)?,
        )),
        _ => Err(wrong(functor, doc)),
    }
}

fn simple_doc(o: &SimpleObject) -> Result<Doc, Failure> {
    match o {
        SimpleObject::Digraph(d) => Ok(format::digraph_doc(d)),
        SimpleObject::SetSystem(s) => Ok(format::setsystem_doc(s)),
        SimpleObject::Graph(g) => Ok(format::graph_doc(g.as_set_system())),
        SimpleObject::IncStructure(_) => Err(Failure::Kind("incidence structures have no document kind".into())),
    }
}

fn one<'a>(functor: &str, inputs: &'a [Doc]) -> Result<&'a Doc, Failure> {
    match inputs {
        [d] => Ok(d),
        _ => Err(Failure::Usage(format!("{functor} takes exactly one --in, got {}", inputs.len()))),
    }
}

fn checked<O, M: Morphism<O>>(name: &str, m: M, dom: &O, cod: &O) -> Result<M, Failure> {
    m.check(dom, cod).map_err(|e| Failure::Parse(format!("{name}: {e}")))?;
    Ok(m)
}

fn quiver_hom(name: &str, m: &MapDoc, x: &Quiver, y: &Quiver) -> Result<QuiverHom, Failure> {
    let h = QuiverHom {
        vmap: format::map_from(&format!("{name}.vertices"), &m.vertices, &x.vertices, &y.vertices)?,
        emap: format::map_from(&format!("{name}.edges"), &m.edges, &x.edges, &y.edges)?,
    };
    checked(name, h, x, y)
}

fn hypergraph_hom(name: &str, m: &MapDoc, x: &SSHypergraph, y: &SSHypergraph) -> Result<HypergraphHom, Failure> {
    let h = HypergraphHom {
        vmap: format::map_from(&format!("{name}.vertices"), &m.vertices, &x.vertices, &y.vertices)?,
        emap: format::map_from(&format!("{name}.edges"), &m.edges, &x.edges, &y.edges)?,
    };
    checked(name, h, x, y)
}

fn incidence_hom(name: &str, m: &MapDoc, x: &IncHypergraph, y: &IncHypergraph) -> Result<IncHom, Failure> {
    let h = IncHom {
        vmap: format::map_from(&format!("{name}.vertices"), &m.vertices, &x.vertices, &y.vertices)?,
        emap: format::map_from(&format!("{name}.edges"), &m.edges, &x.edges, &y.edges)?,
        imap: format::map_from(&format!("{name}.incidences"), &m.incidences, &x.incidences, &y.incidences)?,
    };
    checked(name, h, x, y)
}

fn space_hom(name: &str, m: &MapDoc, x: &SimpleObject, y: &SimpleObject) -> Result<SpaceHom, Failure> {
    let vertices = |o: &SimpleObject| match o {
        SimpleObject::Digraph(d) => d.vertices.clone(),
        SimpleObject::SetSystem(s) => s.vertices.clone(),
        SimpleObject::Graph(g) => g.as_set_system().vertices.clone(),
        SimpleObject::IncStructure(s) => s.vertices.clone(),
    };
    let h = SpaceHom::vertex(format::map_from(&format!("{name}.vertices"), &m.vertices, &vertices(x), &vertices(y))?);
    let ok = match (x, y) {
        (SimpleObject::Digraph(a), SimpleObject::Digraph(b)) => h.check(a, b),
        (SimpleObject::SetSystem(a), SimpleObject::SetSystem(b)) => h.check(a, b),
        (SimpleObject::Graph(a), SimpleObject::Graph(b)) => h.check(a.as_set_system(), b.as_set_system()),
        _ => Err("source and target kinds differ".to_string()),
    };
    ok.map_err(|e| Failure::Parse(format!("{name}: {e}")))?;
    Ok(h)
}

fn pair(functor: &str, inputs: &[Doc]) -> Result<Doc, Failure> {
    let [a, b] = inputs else {
        return Err(Failure::Usage(format!("{functor} takes two --in files, got {}", inputs.len())));
    };
    if a.kind() != b.kind() {
        return Err(Failure::Kind(format!("{functor} of a {} and a {}", a.kind(), b.kind())));
    }
    let product = functor == "product";
    match a {
        Doc::Quiver { .. } => {
            let (x, y) = (quiver(a, functor)?, quiver(b, functor)?);
            Ok(format::quiver_doc(&if product {
                limits::product(&x, &y)?.object
            } else {
                limits::coproduct(&x, &y)?.object
            }))
        }
        Doc::Hypergraph { .. } => {
            let (x, y) = (hypergraph(a, functor)?, hypergraph(b, functor)?);
            Ok(format::hypergraph_doc(&if product {
                limits::product(&x, &y)?.object
            } else {
                limits::coproduct(&x, &y)?.object
            }))
        }
        Doc::Incidence { .. } => {
            let (x, y) = (incidence(a, functor)?, incidence(b, functor)?);
            Ok(format::incidence_doc(&if product {
                limits::product(&x, &y)?.object
            } else {
                limits::coproduct(&x, &y)?.object
            }))
        }
        _ if product => {
            let (x, y) = (simple_object(a, functor)?, simple_object(b, functor)?);
            let lim = limits::limit_in_simple(x.kind(), Construction::Product, &LimitArgs::Pair(x, y))?;
            simple_doc(&lim.object)
        }
        _ => Err(wrong(functor, a)),
    }
}

fn parallel(functor: &str, inputs: &[Doc]) -> Result<Doc, Failure> {
    let doc = one(functor, inputs)?;
    let Doc::Parallel {
        source,
        target,
        first,
        second,
    } = doc
    else {
        return Err(wrong(functor, doc));
    };
    if source.kind() != target.kind() {
        return Err(Failure::Kind(format!("parallel pair from a {} to a {}", source.kind(), target.kind())));
    }
    let equalizer = functor == "equalizer";
    match source.as_ref() {
        Doc::Quiver { .. } => {
            let (x, y) = (quiver(source, functor)?, quiver(target, functor)?);
            let (f, g) = (quiver_hom("first", first, &x, &y)?, quiver_hom("second", second, &x, &y)?);
            Ok(format::quiver_doc(&if equalizer {
                limits::equalizer(&x, &y, &f, &g)?.object
            } else {
                limits::coequalizer(&x, &y, &f, &g)?.object
            }))
        }
        Doc::Hypergraph { .. } => {
            let (x, y) = (hypergraph(source, functor)?, hypergraph(target, functor)?);
            let (f, g) = (hypergraph_hom("first", first, &x, &y)?, hypergraph_hom("second", second, &x, &y)?);
            Ok(format::hypergraph_doc(&if equalizer {
                limits::equalizer(&x, &y, &f, &g)?.object
            } else {
                limits::coequalizer(&x, &y, &f, &g)?.object
            }))
        }
        Doc::Incidence { .. } => {
            let (x, y) = (incidence(source, functor)?, incidence(target, functor)?);
            let (f, g) = (incidence_hom("first", first, &x, &y)?, incidence_hom("second", second, &x, &y)?);
            Ok(format::incidence_doc(&if equalizer {
                limits::equalizer(&x, &y, &f, &g)?.object
            } else {
                limits::coequalizer(&x, &y, &f, &g)?.object
            }))
        }
        _ if equalizer => {
            let (x, y) = (simple_object(source, functor)?, simple_object(target, functor)?);
            let (f, g) = (space_hom("first", first, &x, &y)?, space_hom("second", second, &x, &y)?);
            let kind: SimpleKind = x.kind();
            let args = LimitArgs::Parallel {
                source: x,
                target: y,
                first: f,
                second: g,
            };
            simple_doc(&limits::limit_in_simple(kind, Construction::Equalizer, &args)?.object)
        }
        _ => Err(wrong(functor, source)),
    }
}

pub fn apply(functor: &str, inputs: &[Doc]) -> Result<Doc, Failure> {
    match functor {
        "product" | "coproduct" => return pair(functor, inputs),
        "equalizer" | "coequalizer" => return parallel(functor, inputs),
        _ => {}
    }
    let doc = one(functor, inputs)?;
    match functor {
        "simplify-quiver" => {
            let r = simplify(&quiver(doc, functor)?.to_comma())?;
            Ok(format::quiver_doc(&Quiver::from_comma(&r.result)?))
        }
        "simplify-hypergraph" => {
            let r = simplify(&hypergraph(doc, functor)?.to_comma())?;
            Ok(format::hypergraph_doc(&SSHypergraph::from_comma(&r.result)?))
        }
        "simplify-incidence" => {
            let r = simplify(&incidence(doc, functor)?.to_comma())?;
            Ok(format::incidence_doc(&IncHypergraph::from_comma(&r.result)?))
        }
        "cosimplify-quiver" => {
            let c = coreflectors::cosimplify_quiver(&quiver(doc, functor)?);
            Ok(format::quiver_doc(&Quiver::from_comma(&c.result)?))
        }
        "cosimplify-incidence" => {
            let c = coreflectors::cosimplify_inc(&incidence(doc, functor)?);
            Ok(format::incidence_doc(&IncHypergraph::from_comma(&c.result)?))
        }
        "cosimplify-anti" => {
            let c = coreflectors::cosimplify_p(&hypergraph(doc, functor)?);
            Ok(format::hypergraph_doc(&comma::anti_from_comma(&c.result)?))
        }
        "del" => {
            let d = reflectors::del_ssys(&set_system(doc, functor)?);
            Ok(format::graph_doc(d.result.as_set_system()))
        }
        "sym-closure" | "sym-interior" | "symdigra-to-gra" => {
            let Doc::Digraph { vertices, arcs } = doc else {
                return Err(wrong(functor, doc));
            };
            let d = format::digraph_from(vertices, arcs)?;
            Ok(match functor {
                "sym-closure" => format::digraph_doc(reflectors::sym_closure(&d).result.as_digraph()),
                "sym-interior" => format::digraph_doc(reflectors::sym_interior(&d).result.as_digraph()),
                _ => {
                    let s = SymDigraph::new(d).map_err(|_| Failure::Kind("symdigra-to-gra needs a symmetric digraph".into()))?;
                    format::graph_doc(reflectors::symdigra_to_gra(&s).as_set_system())
                }
            })
        }
        "gra-to-symdigra" => {
            let g = SimpleGraph::new(set_system(doc, functor)?)
                .map_err(|_| Failure::Kind("gra-to-symdigra needs members of one or two vertices".into()))?;
            Ok(format::digraph_doc(reflectors::gra_to_symdigra(&g).as_digraph()))
        }
        "generate-topology" => {
            let t = spaces::generate_topology(&set_system(doc, functor)?)?;
            Ok(format::topology_doc(t.opens()))
        }
        "generate-sigma" => {
            let m = spaces::generate_sigma(&set_system(doc, functor)?)?;
            Ok(format::sigma_doc(m.measurable()))
        }
        "borel" => {
            if !matches!(doc, Doc::Topology { .. }) {
                return Err(wrong(functor, doc));
            }
            let t = spaces::FiniteTopSpace::new(set_system(doc, functor)?)?;
            Ok(format::sigma_doc(spaces::borel(&t)?.measurable()))
        }
        _ => Err(Failure::Usage(format!(
            "unknown functor `{functor}`; known: {}",
            FUNCTORS.join(", ")
        ))),
    }
}
