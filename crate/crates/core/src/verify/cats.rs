//! Hom-set enumeration for every category the library works in.

use std::collections::HashMap;
use std::marker::PhantomData;

use crate::comma::{self, preimage_label, CommaMorphism, CommaObject, Foot, FootMap, Presentation, Presented};
use crate::error::{Error, Result};
use crate::finset::{all_maps, count_maps, FinMap, FinSet};
use crate::graphs::{
    AntiHom, Digraph, IncStructure, Morphism, SSHypergraph, SetSystem, SetSystemAntiHom, SpaceHom,
};

use super::Category;

fn within(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

/// Every way to pick one entry from each list, in odometer order.
fn choices(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for &c in list {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn foot_maps(from: &Foot, to: &Foot) -> Result<(u128, Vec<FootMap>)> {
    match (from, to) {
        (Foot::One(x), Foot::One(y)) => Ok((count_maps(x, y), all_maps(x, y).map(FootMap::One).collect())),
        (Foot::Two(x1, x2), Foot::Two(y1, y2)) => {
            let n = count_maps(x1, y1).saturating_mul(count_maps(x2, y2));
            let seconds: Vec<FinMap> = all_maps(x2, y2).collect();
            let maps = all_maps(x1, y1)
                .flat_map(|m| seconds.iter().map(move |n| FootMap::Two(m.clone(), n.clone())))
                .collect();
            Ok((n, maps))
        }
        _ => Err(Error::Mismatch("feet of different shapes".into())),
    }
}

fn fibers(f: &FinMap) -> HashMap<&str, Vec<usize>> {
    let mut by_value: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, (_, v)) in f.iter().enumerate() {
        by_value.entry(v).or_default().push(i);
    }
    by_value
}

fn foot_count(from: &Foot, to: &Foot) -> u128 {
    match (from, to) {
        (Foot::One(x), Foot::One(y)) => count_maps(x, y),
        (Foot::Two(x1, x2), Foot::Two(y1, y2)) => count_maps(x1, y1).saturating_mul(count_maps(x2, y2)),
        _ => 0,
    }
}

/// All comma morphisms `x → y`. For each `ψ`, each `φ(a)` ranges over the
/// fiber of `f_y` above `G(ψ)(f_x(a))`; for `P1`, each `ψ(e')` ranges over
/// the fiber of `f_x` above the preimage of `f_y(e')`.
pub fn enumerate_comma_homs(x: &CommaObject, y: &CommaObject, budget: u64) -> Result<Vec<CommaMorphism>> {
    let p = x.presentation;
    if y.presentation != p {
        return Err(Error::KindMismatch(format!("{p} and {} objects", y.presentation)));
    }
    if p == Presentation::P1 {
        return enumerate_p1(x, y, budget);
    }
    let raw = foot_count(&x.b_part, &y.b_part).saturating_mul(count_maps(&x.a_part, &y.a_part));
    within(raw, budget)?;
    let (_, psis) = foot_maps(&x.b_part, &y.b_part)?;
    let over = fibers(&y.f);
    let mut out = Vec::new();
    for psi in psis {
        let mut lists = Vec::with_capacity(x.a_part.len());
        for s in x.f.iter().map(|(_, s)| s) {
            let t = comma::middle_apply(p, &psi, s).unwrap_or_default();
            match over.get(t.as_str()) {
                Some(c) => lists.push(c.clone()),
                None => {
                    lists.clear();
                    lists.push(Vec::new());
                    break;
                }
            }
        }
        for pick in choices(&lists) {
            out.push(CommaMorphism {
                presentation: p,
                phi: FinMap::from_indices(x.a_part.clone(), y.a_part.clone(), pick)?,
                psi: psi.clone(),
            });
        }
    }
    Ok(out)
}

fn enumerate_p1(x: &CommaObject, y: &CommaObject, budget: u64) -> Result<Vec<CommaMorphism>> {
    let (bx, by) = match (&x.b_part, &y.b_part) {
        (Foot::One(bx), Foot::One(by)) => (bx, by),
        _ => return Err(Error::Mismatch("P1 has a single B-part".into())),
    };
    let raw = count_maps(&x.a_part, &y.a_part).saturating_mul(count_maps(by, bx));
    within(raw, budget)?;
    let over = fibers(&x.f);
    let mut out = Vec::new();
    for phi in all_maps(&x.a_part, &y.a_part) {
        let mut lists = Vec::with_capacity(by.len());
        for (_, s) in y.f.iter() {
            let want = preimage_label(&phi, s).unwrap_or_default();
            match over.get(want.as_str()) {
                Some(c) => lists.push(c.clone()),
                None => {
                    lists.clear();
                    lists.push(Vec::new());
                    break;
                }
            }
        }
        for pick in choices(&lists) {
            out.push(CommaMorphism {
                presentation: Presentation::P1,
                phi: phi.clone(),
                psi: FootMap::One(FinMap::from_indices(by.clone(), bx.clone(), pick)?),
            });
        }
    }
    Ok(out)
}

/// Comma objects of one presentation with commuting squares.
#[derive(Clone, Copy, Debug, Default)]
pub struct CommaCat;

impl Category for CommaCat {
    type Obj = CommaObject;
    type Mor = CommaMorphism;

    fn homs(&self, x: &CommaObject, y: &CommaObject, budget: u64) -> Result<Vec<CommaMorphism>> {
        enumerate_comma_homs(x, y, budget)
    }

    fn compose(&self, second: &CommaMorphism, first: &CommaMorphism) -> Result<CommaMorphism> {
        comma::compose(second, first)
    }

    fn identity(&self, x: &CommaObject) -> CommaMorphism {
        comma::identity(x)
    }

    fn is_hom(&self, m: &CommaMorphism, x: &CommaObject, y: &CommaObject) -> bool {
        comma::check_morphism(m, x, y).is_ok()
    }

    fn describe(&self, m: &CommaMorphism) -> String {
        m.to_string()
    }
}

/// A graph kind with a comma presentation, enumerated through that presentation.
pub struct PresentedCat<T>(PhantomData<T>);

impl<T> Default for PresentedCat<T> {
    fn default() -> Self {
        PresentedCat(PhantomData)
    }
}

impl<T> Category for PresentedCat<T>
where
    T: Presented + Clone + std::fmt::Display,
    T::Hom: Morphism<T> + Clone + PartialEq + std::fmt::Debug,
{
    type Obj = T;
    type Mor = T::Hom;

    fn homs(&self, x: &T, y: &T, budget: u64) -> Result<Vec<T::Hom>> {
        enumerate_comma_homs(&x.to_comma(), &y.to_comma(), budget)?
            .iter()
            .map(T::hom_from_comma)
            .collect()
    }

    fn compose(&self, second: &T::Hom, first: &T::Hom) -> Result<T::Hom> {
        second.compose(first)
    }

    fn identity(&self, x: &T) -> T::Hom {
        <T::Hom as Morphism<T>>::identity(x)
    }

    fn is_hom(&self, m: &T::Hom, x: &T, y: &T) -> bool {
        m.check(x, y).is_ok()
    }

    fn describe(&self, m: &T::Hom) -> String {
        format!("{m:?}")
    }
}

pub type QuiverCat = PresentedCat<crate::graphs::Quiver>;
pub type HypergraphCat = PresentedCat<SSHypergraph>;
pub type IncidenceCat = PresentedCat<crate::graphs::IncHypergraph>;

/// Set-system hypergraphs with antihomomorphisms.
#[derive(Clone, Copy, Debug, Default)]
pub struct AntiCat;

impl Category for AntiCat {
    type Obj = SSHypergraph;
    type Mor = AntiHom;

    fn homs(&self, x: &SSHypergraph, y: &SSHypergraph, budget: u64) -> Result<Vec<AntiHom>> {
        enumerate_p1(&comma::anti_to_comma(x), &comma::anti_to_comma(y), budget)?
            .iter()
            .map(comma::antihom_from_comma)
            .collect()
    }

    fn compose(&self, second: &AntiHom, first: &AntiHom) -> Result<AntiHom> {
        second.compose(first)
    }

    fn identity(&self, x: &SSHypergraph) -> AntiHom {
        <AntiHom as Morphism<SSHypergraph>>::identity(x)
    }

    fn is_hom(&self, m: &AntiHom, x: &SSHypergraph, y: &SSHypergraph) -> bool {
        m.check(x, y).is_ok()
    }

    fn describe(&self, m: &AntiHom) -> String {
        format!("(vertices {}, edges {})", m.vmap, m.emap)
    }
}

fn vertex_homs<O, M>(
    xv: &FinSet,
    yv: &FinSet,
    budget: u64,
    wrap: impl Fn(FinMap) -> M,
    keep: impl Fn(&M) -> bool,
) -> Result<Vec<M>> {
    within(count_maps(xv, yv), budget)?;
    Ok(all_maps(xv, yv).map(wrap).filter(|m| keep(m)).collect())
}

/// Digraphs (binary relations) with relation-preserving vertex maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct DigraCat;

impl Category for DigraCat {
    type Obj = Digraph;
    type Mor = SpaceHom;

    fn homs(&self, x: &Digraph, y: &Digraph, budget: u64) -> Result<Vec<SpaceHom>> {
        vertex_homs::<Digraph, _>(&x.vertices, &y.vertices, budget, SpaceHom::vertex, |m| {
            Morphism::<Digraph>::check(m, x, y).is_ok()
        })
    }

    fn compose(&self, second: &SpaceHom, first: &SpaceHom) -> Result<SpaceHom> {
        Morphism::<Digraph>::compose(second, first)
    }

    fn identity(&self, x: &Digraph) -> SpaceHom {
        Morphism::<Digraph>::identity(x)
    }

    fn is_hom(&self, m: &SpaceHom, x: &Digraph, y: &Digraph) -> bool {
        Morphism::<Digraph>::check(m, x, y).is_ok()
    }

    fn describe(&self, m: &SpaceHom) -> String {
        m.vmap.to_string()
    }
}

/// Set systems with direct-image-preserving vertex maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct SSysCat;

impl Category for SSysCat {
    type Obj = SetSystem;
    type Mor = SpaceHom;

    fn homs(&self, x: &SetSystem, y: &SetSystem, budget: u64) -> Result<Vec<SpaceHom>> {
        vertex_homs::<SetSystem, _>(&x.vertices, &y.vertices, budget, SpaceHom::vertex, |m| {
            Morphism::<SetSystem>::check(m, x, y).is_ok()
        })
    }

    fn compose(&self, second: &SpaceHom, first: &SpaceHom) -> Result<SpaceHom> {
        Morphism::<SetSystem>::compose(second, first)
    }

    fn identity(&self, x: &SetSystem) -> SpaceHom {
        Morphism::<SetSystem>::identity(x)
    }

    fn is_hom(&self, m: &SpaceHom, x: &SetSystem, y: &SetSystem) -> bool {
        Morphism::<SetSystem>::check(m, x, y).is_ok()
    }

    fn describe(&self, m: &SpaceHom) -> String {
        m.vmap.to_string()
    }
}

/// Incidence structures with flag-preserving vertex and edge maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct IStrCat;

impl Category for IStrCat {
    type Obj = IncStructure;
    type Mor = SpaceHom;

    fn homs(&self, x: &IncStructure, y: &IncStructure, budget: u64) -> Result<Vec<SpaceHom>> {
        within(
            count_maps(&x.vertices, &y.vertices).saturating_mul(count_maps(&x.edges, &y.edges)),
            budget,
        )?;
        let emaps: Vec<FinMap> = all_maps(&x.edges, &y.edges).collect();
        let mut out = Vec::new();
        for v in all_maps(&x.vertices, &y.vertices) {
            for e in &emaps {
                let m = SpaceHom {
                    vmap: v.clone(),
                    emap: Some(e.clone()),
                };
                if Morphism::<IncStructure>::check(&m, x, y).is_ok() {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    fn compose(&self, second: &SpaceHom, first: &SpaceHom) -> Result<SpaceHom> {
        Morphism::<IncStructure>::compose(second, first)
    }

    fn identity(&self, x: &IncStructure) -> SpaceHom {
        Morphism::<IncStructure>::identity(x)
    }

    fn is_hom(&self, m: &SpaceHom, x: &IncStructure, y: &IncStructure) -> bool {
        Morphism::<IncStructure>::check(m, x, y).is_ok()
    }

    fn describe(&self, m: &SpaceHom) -> String {
        match &m.emap {
            Some(e) => format!("(vertices {}, edges {e})", m.vmap),
            None => m.vmap.to_string(),
        }
    }
}

/// Set systems with antihomomorphisms (preimage-preserving vertex maps);
/// finite topological and measurable spaces sit inside as full subcategories.
#[derive(Clone, Copy, Debug, Default)]
pub struct AntiSetCat;

impl Category for AntiSetCat {
    type Obj = SetSystem;
    type Mor = SetSystemAntiHom;

    fn homs(&self, x: &SetSystem, y: &SetSystem, budget: u64) -> Result<Vec<SetSystemAntiHom>> {
        vertex_homs::<SetSystem, _>(
            &x.vertices,
            &y.vertices,
            budget,
            |vmap| SetSystemAntiHom { vmap },
            |m| m.check(x, y).is_ok(),
        )
    }

    fn compose(&self, second: &SetSystemAntiHom, first: &SetSystemAntiHom) -> Result<SetSystemAntiHom> {
        second.compose(first)
    }

    fn identity(&self, x: &SetSystem) -> SetSystemAntiHom {
        <SetSystemAntiHom as Morphism<SetSystem>>::identity(x)
    }

    fn is_hom(&self, m: &SetSystemAntiHom, x: &SetSystem, y: &SetSystem) -> bool {
        m.check(x, y).is_ok()
    }

    fn describe(&self, m: &SetSystemAntiHom) -> String {
        m.vmap.to_string()
    }
}
