//! Right adjoints onto cosimple objects: removal of isolated vertices and
//! loose edges for quivers and incidence hypergraphs, and removal of
//! parallel edges for hypergraphs under antihomomorphisms.

use crate::comma::{self, CommaMorphism, CommaObject, Foot, FootMap, Presentation, Presented};
use crate::error::{Error, Result};
use crate::finset::{coproduct_set, image_factorization, product_set, FinMap, FinSet};
use crate::graphs::{IncHypergraph, Quiver, SSHypergraph};
use crate::label;

/// Output of [`cosimplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coreflection {
    pub result: CommaObject,
    /// result → input.
    pub counit: CommaMorphism,
}

fn pair_parts(x: &CommaObject, i: usize) -> (&str, &str) {
    label::split_pair(x.f.at(i)).expect("structure values are pairs")
}

fn cosimplify_q1(x: &CommaObject, v: &FinSet) -> Result<Coreflection> {
    // f̃: A + A → V, first summand to sources, second to targets
    let sum = coproduct_set(&x.a_part, &x.a_part);
    let f_tilde = FinMap::from_fn(sum.carrier.clone(), v.clone(), |t| {
        let (side, a) = label::split_tag(t).expect("coproduct labels are tagged");
        let (s, w) = pair_parts(x, x.a_part.index_of(a).expect("tag names an element"));
        if side == 0 { s } else { w }.to_string()
    })?;
    let coran = image_factorization(&f_tilde);
    let square = product_set(&coran.mid, &coran.mid).carrier;
    let f = x.f.with_codomain(&square)?;
    Ok(Coreflection {
        result: CommaObject::new(Presentation::Q1, x.a_part.clone(), f, Foot::One(coran.mid))?,
        counit: CommaMorphism {
            presentation: Presentation::Q1,
            phi: FinMap::identity(&x.a_part),
            psi: FootMap::One(coran.mono),
        },
    })
}

fn cosimplify_r1(x: &CommaObject, v: &FinSet, e: &FinSet) -> Result<Coreflection> {
    let to_v = FinMap::from_fn(x.a_part.clone(), v.clone(), |a| {
        pair_parts(x, x.a_part.index_of(a).expect("iterating the domain")).0.to_string()
    })?;
    let to_e = FinMap::from_fn(x.a_part.clone(), e.clone(), |a| {
        pair_parts(x, x.a_part.index_of(a).expect("iterating the domain")).1.to_string()
    })?;
    let cv = image_factorization(&to_v);
    let ce = image_factorization(&to_e);
    let f = x.f.with_codomain(&product_set(&cv.mid, &ce.mid).carrier)?;
    Ok(Coreflection {
        result: CommaObject::new(
            Presentation::R1,
            x.a_part.clone(),
            f,
            Foot::Two(cv.mid, ce.mid),
        )?,
        counit: CommaMorphism {
            presentation: Presentation::R1,
            phi: FinMap::identity(&x.a_part),
            psi: FootMap::Two(cv.mono, ce.mono),
        },
    })
}

fn cosimplify_p1(x: &CommaObject) -> Result<Coreflection> {
    let fac = image_factorization(&x.f);
    Ok(Coreflection {
        result: CommaObject::new(
            Presentation::P1,
            x.a_part.clone(),
            fac.mono,
            Foot::One(fac.mid),
        )?,
        counit: CommaMorphism {
            presentation: Presentation::P1,
            phi: FinMap::identity(&x.a_part),
            psi: FootMap::One(fac.epi),
        },
    })
}

/// Cosimplification over `Q1`, `R1` or `P1`.
pub fn cosimplify(x: &CommaObject) -> Result<Coreflection> {
    match (x.presentation, &x.b_part) {
        (Presentation::Q1, Foot::One(v)) => cosimplify_q1(x, v),
        (Presentation::R1, Foot::Two(v, e)) => cosimplify_r1(x, v, e),
        (Presentation::P1, Foot::One(_)) => cosimplify_p1(x),
        (Presentation::H1, _) => Err(Error::Unsupported {
            op: "cosimplify",
            presentation: "H1",
        }),
        _ => Err(Error::Mismatch("presentation and B-part disagree".into())),
    }
}

pub fn cosimplify_quiver(q: &Quiver) -> Coreflection {
    cosimplify(&q.to_comma()).expect("quivers present over Q1")
}

pub fn cosimplify_inc(g: &IncHypergraph) -> Coreflection {
    cosimplify(&g.to_comma()).expect("incidence hypergraphs present over R1")
}

pub fn cosimplify_p(g: &SSHypergraph) -> Coreflection {
    cosimplify(&comma::anti_to_comma(g)).expect("hypergraphs present over P1")
}

impl Coreflection {
    /// The unique `m̃: y → result` with `counit ∘ m̃ = m`, for `m: y → x`
    /// and `y` cosimple.
    pub fn factor(&self, y: &CommaObject, m: &CommaMorphism) -> Result<CommaMorphism> {
        if !comma::is_cosimple(y) {
            return Err(Error::NotCosimple);
        }
        let psi = match (&m.psi, &self.result.b_part) {
            (FootMap::One(psi), Foot::One(b)) if m.presentation == Presentation::P1 => {
                let collapse = self.counit.psi.single().expect("P1 counit has one edge map");
                FootMap::One(FinMap::from_fn(b.clone(), psi.cod().clone(), |s| {
                    collapse
                        .fiber(s)
                        .first()
                        .and_then(|e| psi.apply(e))
                        .unwrap_or_default()
                        .to_string()
                })?)
            }
            (FootMap::One(psi), Foot::One(b)) => FootMap::One(psi.with_codomain(b)?),
            (FootMap::Two(pv, pe), Foot::Two(bv, be)) => {
                FootMap::Two(pv.with_codomain(bv)?, pe.with_codomain(be)?)
            }
            _ => return Err(Error::Mismatch("morphism does not fit the cosimplification".into())),
        };
        let tilde = CommaMorphism {
            presentation: m.presentation,
            phi: m.phi.clone(),
            psi,
        };
        comma::check_morphism(&tilde, y, &self.result).map_err(Error::Violation)?;
        if comma::compose(&self.counit, &tilde)? != *m {
            return Err(Error::Violation("factorization does not recompose".into()));
        }
        Ok(tilde)
    }
}

/// Factors `m: y → x` (with `y` cosimple) through the cosimplification of `x`.
pub fn factor_through_cosimplification(
    y: &CommaObject,
    m: &CommaMorphism,
    x: &CommaObject,
) -> Result<CommaMorphism> {
    cosimplify(x)?.factor(y, m)
}

/// An edge for every ordered pair of vertices.
pub fn is_loaded(q: &Quiver) -> bool {
    comma::is_cosimple(&q.to_comma())
}

/// An incidence for every vertex-edge pair.
pub fn is_full_incidence(g: &IncHypergraph) -> bool {
    comma::is_cosimple(&g.to_comma())
}

/// `x ↦ (0:x, 1:x)`, the unit component `X → ΔΔ◇X` for quivers. Never
/// surjective once `|X| ≥ 2`.
pub fn sum_diagonal(x: &FinSet) -> FinMap {
    let sum = coproduct_set(x, x).carrier;
    let square = product_set(&sum, &sum).carrier;
    FinMap::from_fn(x.clone(), square, |v| label::pair(&label::tag(0, v), &label::tag(1, v)))
        .expect("tagged pairs lie in the square")
}

/// `x ↦ (x, x)`, the unit component for incidence hypergraphs.
pub fn diagonal(x: &FinSet) -> FinMap {
    FinMap::from_fn(x.clone(), product_set(x, x).carrier, |v| label::pair(v, v))
        .expect("diagonal pairs lie in the square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_vertex_removed() {
        let q = Quiver::build(&["a", "b", "c"], &[("e", "a", "b")]).unwrap();
        let c = cosimplify_quiver(&q);
        assert_eq!(c.result.b_part, Foot::One(FinSet::new(["a", "b"]).unwrap()));
        assert_eq!(c.result.a_part, q.edges);
        assert!(comma::check_morphism(&c.counit, &c.result, &q.to_comma()).is_ok());
        assert!(!comma::is_cosimple(&c.result));

        let bare = Quiver::build(&["a"], &[]).unwrap();
        assert_eq!(cosimplify_quiver(&bare).result.b_part, Foot::One(FinSet::empty()));
    }

    #[test]
    fn isolated_vertex_and_loose_edge_removed() {
        let g = IncHypergraph::build(&["v", "w"], &["e", "f"], &[("i", "v", "e")]).unwrap();
        let c = cosimplify_inc(&g);
        assert_eq!(
            c.result.b_part,
            Foot::Two(FinSet::new(["v"]).unwrap(), FinSet::new(["e"]).unwrap())
        );
        assert!(comma::check_morphism(&c.counit, &c.result, &g.to_comma()).is_ok());
    }

    #[test]
    fn edge_without_vertices_is_cosimple_but_not_fixed() {
        let g = IncHypergraph::build(&[], &["e"], &[]).unwrap();
        assert!(is_full_incidence(&g));
        let c = cosimplify_inc(&g);
        let id = comma::identity(&g.to_comma());
        assert!(matches!(c.factor(&g.to_comma(), &id), Err(_)));
    }

    #[test]
    fn parallel_edges_collapse_under_antihomomorphisms() {
        let h = SSHypergraph::build(
            &["a", "b"],
            &[("e1", &["a", "b"]), ("e2", &["a", "b"]), ("e3", &["a"])],
        )
        .unwrap();
        let c = cosimplify_p(&h);
        assert_eq!(c.result.b_part, Foot::One(FinSet::new(["{a,b}", "{a}"]).unwrap()));
        assert!(comma::is_cosimple(&c.result));
        assert!(comma::check_morphism(&c.counit, &c.result, &comma::anti_to_comma(&h)).is_ok());

        let empty = SSHypergraph::build(&["a"], &[]).unwrap();
        assert_eq!(cosimplify_p(&empty).result.b_part, Foot::One(FinSet::empty()));
    }

    #[test]
    fn injective_structure_gives_bijective_counit() {
        let h = SSHypergraph::build(&["a", "b"], &[("e1", &["a"]), ("e2", &["b"])]).unwrap();
        assert!(cosimplify_p(&h).counit.psi.is_bijective());
    }

    #[test]
    fn factoring_the_counit_gives_identity() {
        let h = SSHypergraph::build(&["a", "b"], &[("e1", &["a", "b"]), ("e2", &["a", "b"])]).unwrap();
        let c = cosimplify_p(&h);
        let r = cosimplify(&c.result).unwrap();
        let t = r.factor(&c.result, &r.counit).unwrap();
        assert_eq!(t, comma::identity(&c.result));
    }

    #[test]
    fn loop_factors_through_endpoint_restriction() {
        let y = Quiver::build(&["p"], &[("l", "p", "p")]).unwrap();
        let x = Quiver::build(&["a", "b", "c"], &[("e", "a", "a"), ("f", "a", "b")]).unwrap();
        assert!(is_loaded(&y));
        let m = comma::CommaMorphism {
            presentation: Presentation::Q1,
            phi: FinMap::new(y.edges.clone(), x.edges.clone(), [("l", "e")]).unwrap(),
            psi: FootMap::One(FinMap::new(y.vertices.clone(), x.vertices.clone(), [("p", "a")]).unwrap()),
        };
        let t = factor_through_cosimplification(&y.to_comma(), &m, &x.to_comma()).unwrap();
        assert_eq!(t.psi.single().unwrap().apply("p"), Some("a"));
    }

    #[test]
    fn loaded_and_full_incidence_flags() {
        let k = Quiver::build(
            &["a", "b"],
            &[("1", "a", "a"), ("2", "a", "b"), ("3", "b", "a"), ("4", "b", "b")],
        )
        .unwrap();
        assert!(is_loaded(&k));
        let short = Quiver::build(&["a", "b"], &[("1", "a", "a"), ("2", "a", "b"), ("3", "b", "a")]).unwrap();
        assert!(!is_loaded(&short));
        let g = IncHypergraph::build(&["v"], &["e"], &[("i", "v", "e")]).unwrap();
        assert!(is_full_incidence(&g));
    }

    #[test]
    fn diagonal_units_miss_mixed_pairs() {
        let x = FinSet::new(["a", "b"]).unwrap();
        assert!(!sum_diagonal(&x).is_surjective());
        assert!(!diagonal(&x).is_surjective());
        assert_eq!(sum_diagonal(&x).apply("a"), Some("(0:a,1:a)"));
    }
}
