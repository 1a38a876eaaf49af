//! Left adjoints onto simple objects (simplification), symmetric closure,
//! and the right adjoints deletion and symmetric interior, plus the
//! isomorphism between simple graphs and symmetric digraphs.

use std::collections::BTreeSet;

use crate::comma::{self, CommaMorphism, CommaObject, FootMap, Presentation};
use crate::error::{Error, Result};
use crate::finset::{image_factorization, FinMap};
use crate::graphs::{Digraph, Morphism, SetSystem, SimpleGraph, SpaceHom, SymDigraph};

/// Output of [`simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    /// The simple object built on the range of `f`.
    pub result: CommaObject,
    /// `(e, id_B)`: input → result, with `e` the surjective part of `f`.
    pub unit: CommaMorphism,
    /// `(G(B), id, B)`, the object every simple object with base `B` embeds into.
    pub complete: CommaObject,
    /// `(m, id_B)`: result → complete, with `m` the inclusion of the range.
    pub embedding: CommaMorphism,
}

/// Image-factorizes the structure map of `x` and keeps only its range.
pub fn simplify(x: &CommaObject) -> Result<Reflection> {
    if x.presentation == Presentation::P1 {
        return Err(Error::Unsupported {
            op: "simplify",
            presentation: "P1",
        });
    }
    let fac = image_factorization(&x.f);
    let p = x.presentation;
    let id_b = FootMap::identity(&x.b_part);
    let complete = CommaObject {
        presentation: p,
        a_part: x.f.cod().clone(),
        f: FinMap::identity(x.f.cod()),
        b_part: x.b_part.clone(),
    };
    Ok(Reflection {
        result: CommaObject {
            presentation: p,
            a_part: fac.mid.clone(),
            f: fac.mono.clone(),
            b_part: x.b_part.clone(),
        },
        unit: CommaMorphism {
            presentation: p,
            phi: fac.epi,
            psi: id_b.clone(),
        },
        complete,
        embedding: CommaMorphism {
            presentation: p,
            phi: fac.mono,
            psi: id_b,
        },
    })
}

impl Reflection {
    /// The unique `m̂: result → y` with `m̂ ∘ unit = m`, for `m: x → y` and
    /// `y` simple.
    pub fn factor(&self, m: &CommaMorphism, y: &CommaObject) -> Result<CommaMorphism> {
        if !comma::is_simple(y) {
            return Err(Error::NotSimple);
        }
        let epi = &self.unit.phi;
        let phi = FinMap::from_fn(self.result.a_part.clone(), y.a_part.clone(), |r| {
            epi.fiber(r)
                .first()
                .and_then(|a| m.phi.apply(a))
                .unwrap_or_default()
                .to_string()
        })?;
        let hat = CommaMorphism {
            presentation: m.presentation,
            phi,
            psi: m.psi.clone(),
        };
        comma::check_morphism(&hat, &self.result, y).map_err(Error::Violation)?;
        if comma::compose(&hat, &self.unit)? != *m {
            return Err(Error::Violation("factorization does not recompose".into()));
        }
        Ok(hat)
    }
}

/// Factors `m: x → y` (with `y` simple) through the simplification of `x`.
pub fn factor_through_simplification(
    x: &CommaObject,
    m: &CommaMorphism,
    y: &CommaObject,
) -> Result<CommaMorphism> {
    simplify(x)?.factor(m, y)
}

/// Output of [`del_ssys`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub result: SimpleGraph,
    /// Inclusion of the result into the input set system.
    pub counit: SpaceHom,
}

/// Keeps the members with one or two elements.
pub fn del_ssys(h: &SetSystem) -> Deletion {
    let sets: BTreeSet<BTreeSet<String>> = h
        .sets
        .iter()
        .filter(|s| (1..=2).contains(&s.len()))
        .cloned()
        .collect();
    let result = SimpleGraph::new(SetSystem {
        vertices: h.vertices.clone(),
        sets,
    })
    .expect("filtered members have one or two elements");
    Deletion {
        result,
        counit: SpaceHom::vertex(FinMap::identity(&h.vertices)),
    }
}

/// The unique `m̂: g → del_ssys(h)` with `j ∘ m̂ = m`.
pub fn factor_through_del(g: &SimpleGraph, m: &SpaceHom, h: &SetSystem) -> Result<SpaceHom> {
    let del = del_ssys(h);
    let hat = SpaceHom::vertex(m.vmap.clone());
    Morphism::<SetSystem>::check(&hat, g.as_set_system(), del.result.as_set_system())
        .map_err(Error::Violation)?;
    Ok(hat)
}

/// Output of [`sym_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClosure {
    pub result: SymDigraph,
    /// Identity on vertices: input → closure.
    pub unit: SpaceHom,
}

pub fn sym_closure(g: &Digraph) -> SymClosure {
    let arcs = g
        .arcs
        .iter()
        .flat_map(|(v, w)| [(v.clone(), w.clone()), (w.clone(), v.clone())])
        .collect();
    SymClosure {
        result: SymDigraph::new(Digraph {
            vertices: g.vertices.clone(),
            arcs,
        })
        .expect("or-closure is symmetric"),
        unit: SpaceHom::vertex(FinMap::identity(&g.vertices)),
    }
}

/// The unique `m̂: closure(g) → h` with `m̂ ∘ unit = m`, for `m: g → h`.
pub fn factor_through_sym_closure(g: &Digraph, m: &SpaceHom, h: &SymDigraph) -> Result<SpaceHom> {
    let hat = SpaceHom::vertex(m.vmap.clone());
    Morphism::<Digraph>::check(&hat, sym_closure(g).result.as_digraph(), h.as_digraph())
        .map_err(Error::Violation)?;
    Ok(hat)
}

/// Output of [`sym_interior`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymInterior {
    pub result: SymDigraph,
    /// Identity on vertices: interior → input.
    pub counit: SpaceHom,
}

pub fn sym_interior(g: &Digraph) -> SymInterior {
    let arcs = g
        .arcs
        .iter()
        .filter(|(v, w)| g.arcs.contains(&(w.clone(), v.clone())))
        .cloned()
        .collect();
    SymInterior {
        result: SymDigraph::new(Digraph {
            vertices: g.vertices.clone(),
            arcs,
        })
        .expect("and-restriction is symmetric"),
        counit: SpaceHom::vertex(FinMap::identity(&g.vertices)),
    }
}

/// The unique `m̃: h → interior(g)` with `counit ∘ m̃ = m`, for `m: h → g`.
pub fn factor_through_sym_interior(h: &SymDigraph, m: &SpaceHom, g: &Digraph) -> Result<SpaceHom> {
    let tilde = SpaceHom::vertex(m.vmap.clone());
    Morphism::<Digraph>::check(&tilde, h.as_digraph(), sym_interior(g).result.as_digraph())
        .map_err(Error::Violation)?;
    Ok(tilde)
}

/// Each member `{v,w}` becomes the arcs `(v,w)` and `(w,v)`; a loop `{v}`
/// becomes `(v,v)`. Morphisms are unchanged vertex maps.
pub fn gra_to_symdigra(g: &SimpleGraph) -> SymDigraph {
    let arcs = g
        .as_set_system()
        .sets
        .iter()
        .flat_map(|s| {
            let v: Vec<&String> = s.iter().collect();
            let (a, b) = (v[0], *v.last().expect("members are non-empty"));
            [(a.clone(), b.clone()), (b.clone(), a.clone())]
        })
        .collect();
    SymDigraph::new(Digraph {
        vertices: g.as_set_system().vertices.clone(),
        arcs,
    })
    .expect("arcs come in both directions")
}

/// Each arc `(v,w)` becomes the member `{v,w}`.
pub fn symdigra_to_gra(d: &SymDigraph) -> SimpleGraph {
    let sets = d
        .as_digraph()
        .arcs
        .iter()
        .map(|(v, w)| [v.clone(), w.clone()].into_iter().collect())
        .collect();
    SimpleGraph::new(SetSystem {
        vertices: d.as_digraph().vertices.clone(),
        sets,
    })
    .expect("arc endpoints give one or two elements")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comma::{is_simple, to_comma, Presented};
    use crate::graphs::{IncHypergraph, Quiver, SSHypergraph};

    #[test]
    fn parallel_quiver_edges_merge() {
        let q = Quiver::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "a", "b")]).unwrap();
        let r = simplify(&to_comma(&q)).unwrap();
        assert_eq!(r.result.a_part.labels(), ["(a,b)"]);
        assert_eq!(r.result.b_part, to_comma(&q).b_part);
        assert!(is_simple(&r.result));
        let back = Quiver::from_comma(&r.result).unwrap();
        assert_eq!(back.vertices, q.vertices);
    }

    #[test]
    fn simple_input_has_bijective_unit() {
        let q = Quiver::build(&["a", "b"], &[("e", "a", "b"), ("f", "b", "a")]).unwrap();
        let r = simplify(&to_comma(&q)).unwrap();
        assert!(r.unit.phi.is_bijective());
    }

    #[test]
    fn hypergraph_simplification_deduplicates_edge_sets() {
        let h = SSHypergraph::build(
            &["a", "b"],
            &[("e1", &["a", "b"]), ("e2", &["a", "b"]), ("e3", &["a"])],
        )
        .unwrap();
        let r = simplify(&to_comma(&h)).unwrap();
        assert_eq!(r.result.a_part.labels(), ["{a,b}", "{a}"]);
    }

    #[test]
    fn incidence_simplification_removes_parallel_incidences_only() {
        let g = IncHypergraph::build(&["v"], &["e", "f"], &[("i", "v", "e"), ("j", "v", "e")]).unwrap();
        let r = simplify(&to_comma(&g)).unwrap();
        assert_eq!(r.result.a_part.labels(), ["(v,e)"]);
        let back = IncHypergraph::from_comma(&r.result).unwrap();
        assert_eq!(back.edges.len(), 2);
    }

    #[test]
    fn p1_simplification_is_rejected() {
        let h = SSHypergraph::build(&["a"], &[("e", &["a"])]).unwrap();
        assert!(matches!(
            simplify(&comma::anti_to_comma(&h)),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn embedding_after_unit_is_the_structure_map() {
        let q = Quiver::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "a", "b"), ("e3", "b", "b")]).unwrap();
        let x = to_comma(&q);
        let r = simplify(&x).unwrap();
        let c = comma::compose(&r.embedding, &r.unit).unwrap();
        assert_eq!(c.phi, x.f);
        assert!(r.embedding.phi.is_injective());
        assert!(r.unit.phi.is_surjective());
        assert!(comma::check_morphism(&r.embedding, &r.result, &r.complete).is_ok());
    }

    #[test]
    fn factoring_the_unit_gives_identity() {
        let q = Quiver::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "a", "b")]).unwrap();
        let x = to_comma(&q);
        let r = simplify(&x).unwrap();
        let hat = r.factor(&r.unit, &r.result).unwrap();
        assert_eq!(hat, comma::identity(&r.result));
    }

    #[test]
    fn deletion_examples() {
        let h = SetSystem::build(&["a", "b", "c"], &[&["a"], &["a", "b"], &["a", "b", "c"]]).unwrap();
        let d = del_ssys(&h);
        assert_eq!(
            d.result,
            SimpleGraph::new(SetSystem::build(&["a", "b", "c"], &[&["a"], &["a", "b"]]).unwrap()).unwrap()
        );
        let empty = SetSystem::build(&["a"], &[]).unwrap();
        assert!(del_ssys(&empty).result.as_set_system().sets.is_empty());
        let with_empty = SetSystem::build(&["a"], &[&[], &["a"]]).unwrap();
        assert_eq!(del_ssys(&with_empty).result.as_set_system().sets.len(), 1);
    }

    #[test]
    fn loop_lands_in_filtered_members() {
        let g = SimpleGraph::new(SetSystem::build(&["x"], &[&["x"]]).unwrap()).unwrap();
        let h = SetSystem::build(&["a", "b"], &[&["a"], &["a", "b"]]).unwrap();
        let m = SpaceHom::vertex(FinMap::new(g.as_set_system().vertices.clone(), h.vertices.clone(), [("x", "a")]).unwrap());
        let hat = factor_through_del(&g, &m, &h).unwrap();
        assert_eq!(hat.vmap.apply("x"), Some("a"));
    }

    #[test]
    fn closure_and_interior_examples() {
        let g = Digraph::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(
            sym_closure(&g).result.as_digraph(),
            &Digraph::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
        );
        assert!(sym_interior(&g).result.as_digraph().arcs.is_empty());

        let s = Digraph::build(&["a", "b"], &[("a", "b"), ("b", "a"), ("a", "a")]).unwrap();
        assert_eq!(sym_closure(&s).result.as_digraph(), &s);
        assert_eq!(sym_interior(&s).result.as_digraph(), &s);
    }

    #[test]
    fn gra_symdigra_examples() {
        let edge = SimpleGraph::new(SetSystem::build(&["a", "b"], &[&["a", "b"]]).unwrap()).unwrap();
        assert_eq!(
            gra_to_symdigra(&edge).as_digraph(),
            &Digraph::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
        );
        let lp = SimpleGraph::new(SetSystem::build(&["a"], &[&["a"]]).unwrap()).unwrap();
        assert_eq!(
            gra_to_symdigra(&lp).as_digraph(),
            &Digraph::build(&["a"], &[("a", "a")]).unwrap()
        );
        assert_eq!(symdigra_to_gra(&gra_to_symdigra(&edge)), edge);
    }
}
