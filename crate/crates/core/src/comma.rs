//! Comma-category presentations of the graph categories.
//!
//! Every presentation here has the identity as its left leg, so an object is
//! a triple `(A, f, B)` with `f: A → G(B)` for a middle functor `G`:
//!
//! | presentation | A          | B              | G(B)                 |
//! |--------------|------------|----------------|----------------------|
//! | `Q1`         | edges      | vertices       | `V × V`              |
//! | `H1`         | edges      | vertices       | power set of `V`     |
//! | `R1`         | incidences | (vertices, edges) | `V × E`           |
//!
//! `P1` is the contravariant power-set presentation of antihomomorphisms:
//! `A` is the vertex set, `B` the edge set, and `f: B → 𝒫(A)` points the
//! other way because the ambient category there is `Set^op`. Its morphisms
//! carry the `B`-component backwards.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{self, power_set, product_set, subset_mask, FinMap, FinSet};
use crate::graphs::{
    AntiHom, Digraph, HypergraphHom, IncHom, IncHypergraph, IncStructure, Quiver, QuiverHom,
    SSHypergraph, SetSystem, SpaceHom,
};
use crate::label;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Presentation {
    Q1,
    H1,
    R1,
    P1,
}

impl Presentation {
    pub fn name(self) -> &'static str {
        match self {
            Presentation::Q1 => "Q1",
            Presentation::H1 => "H1",
            Presentation::R1 => "R1",
            Presentation::P1 => "P1",
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `B`-part of a comma object: one set, or a pair for `R1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Foot {
    One(FinSet),
    Two(FinSet, FinSet),
}

impl Foot {
    pub fn single(&self) -> Option<&FinSet> {
        match self {
            Foot::One(x) => Some(x),
            Foot::Two(..) => None,
        }
    }

    pub fn pair(&self) -> Option<(&FinSet, &FinSet)> {
        match self {
            Foot::Two(x, y) => Some((x, y)),
            Foot::One(_) => None,
        }
    }
}

impl fmt::Display for Foot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Foot::One(x) => x.fmt(f),
            Foot::Two(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FootMap {
    One(FinMap),
    Two(FinMap, FinMap),
}

impl FootMap {
    pub fn identity(b: &Foot) -> Self {
        match b {
            Foot::One(x) => FootMap::One(FinMap::identity(x)),
            Foot::Two(x, y) => FootMap::Two(FinMap::identity(x), FinMap::identity(y)),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FootMap) -> Result<FootMap> {
        match (self, first) {
            (FootMap::One(g), FootMap::One(f)) => Ok(FootMap::One(g.after(f)?)),
            (FootMap::Two(g1, g2), FootMap::Two(f1, f2)) => {
                Ok(FootMap::Two(g1.after(f1)?, g2.after(f2)?))
            }
            _ => Err(Error::Mismatch("feet of different shapes".into())),
        }
    }

    pub fn dom(&self) -> Foot {
        match self {
            FootMap::One(m) => Foot::One(m.dom().clone()),
            FootMap::Two(m, n) => Foot::Two(m.dom().clone(), n.dom().clone()),
        }
    }

    pub fn cod(&self) -> Foot {
        match self {
            FootMap::One(m) => Foot::One(m.cod().clone()),
            FootMap::Two(m, n) => Foot::Two(m.cod().clone(), n.cod().clone()),
        }
    }

    pub fn single(&self) -> Option<&FinMap> {
        match self {
            FootMap::One(m) => Some(m),
            FootMap::Two(..) => None,
        }
    }

    pub fn is_injective(&self) -> bool {
        match self {
            FootMap::One(m) => m.is_injective(),
            FootMap::Two(m, n) => m.is_injective() && n.is_injective(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        match self {
            FootMap::One(m) => m.is_bijective(),
            FootMap::Two(m, n) => m.is_bijective() && n.is_bijective(),
        }
    }
}

/// An object `(A, f, B)` of one of the four presentations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommaObject {
    pub presentation: Presentation,
    pub a_part: FinSet,
    pub f: FinMap,
    pub b_part: Foot,
}

/// The domain and codomain `f` must have for the given feet.
pub fn structure_shape(p: Presentation, a: &FinSet, b: &Foot) -> Result<(FinSet, FinSet)> {
    let bad = || Error::Mismatch(format!("{p} does not accept a B-part of shape {b}"));
    match p {
        Presentation::Q1 => {
            let v = b.single().ok_or_else(bad)?;
            Ok((a.clone(), product_set(v, v).carrier))
        }
        Presentation::H1 => Ok((a.clone(), power_set(b.single().ok_or_else(bad)?)?)),
        Presentation::R1 => {
            let (v, e) = b.pair().ok_or_else(bad)?;
            Ok((a.clone(), product_set(v, e).carrier))
        }
        Presentation::P1 => Ok((b.single().ok_or_else(bad)?.clone(), power_set(a)?)),
    }
}

impl CommaObject {
    pub fn new(presentation: Presentation, a_part: FinSet, f: FinMap, b_part: Foot) -> Result<Self> {
        let (dom, cod) = structure_shape(presentation, &a_part, &b_part)?;
        if f.dom() != &dom || f.cod() != &cod {
            return Err(Error::Mismatch(format!(
                "{presentation} structure map must go {dom} → {cod}"
            )));
        }
        Ok(CommaObject {
            presentation,
            a_part,
            f,
            b_part,
        })
    }
}

impl fmt::Display for CommaObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (A={}, f={}, B={})",
            self.presentation, self.a_part, self.f, self.b_part
        )
    }
}

/// A commuting square `(φ, ψ)`. For `P1`, `psi` runs from the codomain's
/// `B`-part back to the domain's.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommaMorphism {
    pub presentation: Presentation,
    pub phi: FinMap,
    pub psi: FootMap,
}

impl fmt::Display for CommaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(φ={}, ψ=", self.phi)?;
        match &self.psi {
            FootMap::One(m) => write!(f, "{m})"),
            FootMap::Two(m, n) => write!(f, "({m}, {n}))"),
        }
    }
}

/// `G(ψ)` evaluated at one element of `G(B)`.
pub fn middle_apply(p: Presentation, psi: &FootMap, x: &str) -> Option<String> {
    match (p, psi) {
        (Presentation::Q1, FootMap::One(m)) => {
            let (v, w) = label::split_pair(x)?;
            Some(label::pair(m.apply(v)?, m.apply(w)?))
        }
        (Presentation::H1, FootMap::One(m)) => {
            let members = label::split_subset(x)?;
            let mut img = members
                .into_iter()
                .map(|v| m.apply(v))
                .collect::<Option<Vec<_>>>()?;
            img.sort();
            img.dedup();
            Some(label::subset(img))
        }
        (Presentation::R1, FootMap::Two(mv, me)) => {
            let (v, e) = label::split_pair(x)?;
            Some(label::pair(mv.apply(v)?, me.apply(e)?))
        }
        _ => None,
    }
}

/// Preimage of a subset label of `vmap`'s codomain, as a label over its domain.
pub fn preimage_label(vmap: &FinMap, subset: &str) -> Option<String> {
    let mask = subset_mask(vmap.cod(), subset)?;
    let pre = vmap
        .indices()
        .iter()
        .enumerate()
        .filter(|&(_, &j)| mask >> j & 1 == 1)
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    Some(finset::mask_label(vmap.dom(), pre))
}

/// Checks that `m` is a morphism `x → y`, naming the first failing element.
pub fn check_morphism(m: &CommaMorphism, x: &CommaObject, y: &CommaObject) -> std::result::Result<(), String> {
    let p = x.presentation;
    if m.presentation != p || y.presentation != p {
        return Err("presentations differ".into());
    }
    if m.phi.dom() != &x.a_part || m.phi.cod() != &y.a_part {
        return Err(format!("φ must go {} → {}", x.a_part, y.a_part));
    }
    if p == Presentation::P1 {
        if m.psi.dom() != y.b_part || m.psi.cod() != x.b_part {
            return Err(format!("ψ must go {} → {}", y.b_part, x.b_part));
        }
        let psi = m.psi.single().ok_or("P1 has a single B-part")?;
        for (e, s) in y.f.iter() {
            let back = psi.apply(e).unwrap_or("?");
            let want = preimage_label(&m.phi, s).unwrap_or_default();
            let have = x.f.apply(back).unwrap_or("?");
            if want != have {
                return Err(format!(
                    "edge {e}: preimage of {s} is {want} but ψ({e}) = {back} carries {have}"
                ));
            }
        }
        return Ok(());
    }
    if m.psi.dom() != x.b_part || m.psi.cod() != y.b_part {
        return Err(format!("ψ must go {} → {}", x.b_part, y.b_part));
    }
    for (a, s) in x.f.iter() {
        let pushed = middle_apply(p, &m.psi, s).unwrap_or_default();
        let there = m.phi.apply(a).and_then(|b| y.f.apply(b)).unwrap_or("?");
        if pushed != there {
            return Err(format!("element {a}: G(ψ)(f({a})) = {pushed} but f'(φ({a})) = {there}"));
        }
    }
    Ok(())
}

pub fn identity(x: &CommaObject) -> CommaMorphism {
    CommaMorphism {
        presentation: x.presentation,
        phi: FinMap::identity(&x.a_part),
        psi: FootMap::identity(&x.b_part),
    }
}

/// `second ∘ first`, composing `ψ` in reverse order for `P1`.
pub fn compose(second: &CommaMorphism, first: &CommaMorphism) -> Result<CommaMorphism> {
    if second.presentation != first.presentation {
        return Err(Error::Mismatch("presentations differ".into()));
    }
    let psi = if first.presentation == Presentation::P1 {
        first.psi.after(&second.psi)?
    } else {
        second.psi.after(&first.psi)?
    };
    Ok(CommaMorphism {
        presentation: first.presentation,
        phi: second.phi.after(&first.phi)?,
        psi,
    })
}

/// `f` is monic in the ambient category. For `P1` that category is
/// `Set^op`, where monic means surjective as a set function.
pub fn is_simple(x: &CommaObject) -> bool {
    match x.presentation {
        Presentation::P1 => x.f.is_surjective(),
        _ => x.f.is_injective(),
    }
}

/// `f` is epic in the ambient category (injective as a set function for `P1`).
pub fn is_cosimple(x: &CommaObject) -> bool {
    match x.presentation {
        Presentation::P1 => x.f.is_injective(),
        _ => x.f.is_surjective(),
    }
}

/// Graph kinds with an isomorphic comma presentation (the `W`/`Z` pair).
pub trait Presented: Sized {
    type Hom;
    const PRESENTATION: Presentation;

    fn to_comma(&self) -> CommaObject;
    fn from_comma(x: &CommaObject) -> Result<Self>;
    fn hom_to_comma(m: &Self::Hom) -> CommaMorphism;
    fn hom_from_comma(m: &CommaMorphism) -> Result<Self::Hom>;
}

pub fn to_comma<T: Presented>(g: &T) -> CommaObject {
    g.to_comma()
}

pub fn from_comma<T: Presented>(x: &CommaObject) -> Result<T> {
    T::from_comma(x)
}

fn expect(x: &CommaObject, p: Presentation) -> Result<()> {
    if x.presentation == p {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!(
            "expected a {p} object, got {}",
            x.presentation
        )))
    }
}

fn split_structure(f: &FinMap, left: &FinSet, right: &FinSet) -> Result<(FinMap, FinMap)> {
    let part = |first: bool, target: &FinSet| {
        FinMap::from_fn(f.dom().clone(), target.clone(), |a| {
            let (x, y) = f.apply(a).and_then(label::split_pair).unwrap_or(("", ""));
            if first { x } else { y }.to_string()
        })
    };
    Ok((part(true, left)?, part(false, right)?))
}

impl Presented for Quiver {
    type Hom = QuiverHom;
    const PRESENTATION: Presentation = Presentation::Q1;

    fn to_comma(&self) -> CommaObject {
        let cod = product_set(&self.vertices, &self.vertices).carrier;
        let f = FinMap::from_fn(self.edges.clone(), cod, |e| {
            label::pair(self.src.apply(e).unwrap_or(""), self.tgt.apply(e).unwrap_or(""))
        })
        .expect("endpoint pairs lie in V × V");
        CommaObject {
            presentation: Presentation::Q1,
            a_part: self.edges.clone(),
            f,
            b_part: Foot::One(self.vertices.clone()),
        }
    }

    fn from_comma(x: &CommaObject) -> Result<Self> {
        expect(x, Presentation::Q1)?;
        let v = x.b_part.single().ok_or_else(|| Error::Mismatch("Q1 B-part".into()))?;
        let (src, tgt) = split_structure(&x.f, v, v)?;
        Quiver::new(v.clone(), x.a_part.clone(), src, tgt)
    }

    fn hom_to_comma(m: &QuiverHom) -> CommaMorphism {
        CommaMorphism {
            presentation: Presentation::Q1,
            phi: m.emap.clone(),
            psi: FootMap::One(m.vmap.clone()),
        }
    }

    fn hom_from_comma(m: &CommaMorphism) -> Result<QuiverHom> {
        match (&m.presentation, &m.psi) {
            (Presentation::Q1, FootMap::One(v)) => Ok(QuiverHom {
                vmap: v.clone(),
                emap: m.phi.clone(),
            }),
            _ => Err(Error::KindMismatch("expected a Q1 morphism".into())),
        }
    }
}

impl Presented for SSHypergraph {
    type Hom = HypergraphHom;
    const PRESENTATION: Presentation = Presentation::H1;

    fn to_comma(&self) -> CommaObject {
        CommaObject {
            presentation: Presentation::H1,
            a_part: self.edges.clone(),
            f: self.incidence.clone(),
            b_part: Foot::One(self.vertices.clone()),
        }
    }

    fn from_comma(x: &CommaObject) -> Result<Self> {
        expect(x, Presentation::H1)?;
        let v = x.b_part.single().ok_or_else(|| Error::Mismatch("H1 B-part".into()))?;
        SSHypergraph::new(v.clone(), x.a_part.clone(), x.f.clone())
    }

    fn hom_to_comma(m: &HypergraphHom) -> CommaMorphism {
        CommaMorphism {
            presentation: Presentation::H1,
            phi: m.emap.clone(),
            psi: FootMap::One(m.vmap.clone()),
        }
    }

    fn hom_from_comma(m: &CommaMorphism) -> Result<HypergraphHom> {
        match (&m.presentation, &m.psi) {
            (Presentation::H1, FootMap::One(v)) => Ok(HypergraphHom {
                vmap: v.clone(),
                emap: m.phi.clone(),
            }),
            _ => Err(Error::KindMismatch("expected an H1 morphism".into())),
        }
    }
}

impl Presented for IncHypergraph {
    type Hom = IncHom;
    const PRESENTATION: Presentation = Presentation::R1;

    fn to_comma(&self) -> CommaObject {
        let cod = product_set(&self.vertices, &self.edges).carrier;
        let f = FinMap::from_fn(self.incidences.clone(), cod, |i| {
            label::pair(self.att_v.apply(i).unwrap_or(""), self.att_e.apply(i).unwrap_or(""))
        })
        .expect("attachment pairs lie in V × E");
        CommaObject {
            presentation: Presentation::R1,
            a_part: self.incidences.clone(),
            f,
            b_part: Foot::Two(self.vertices.clone(), self.edges.clone()),
        }
    }

    fn from_comma(x: &CommaObject) -> Result<Self> {
        expect(x, Presentation::R1)?;
        let (v, e) = x.b_part.pair().ok_or_else(|| Error::Mismatch("R1 B-part".into()))?;
        let (att_v, att_e) = split_structure(&x.f, v, e)?;
        IncHypergraph::new(v.clone(), e.clone(), x.a_part.clone(), att_v, att_e)
    }

    fn hom_to_comma(m: &IncHom) -> CommaMorphism {
        CommaMorphism {
            presentation: Presentation::R1,
            phi: m.imap.clone(),
            psi: FootMap::Two(m.vmap.clone(), m.emap.clone()),
        }
    }

    fn hom_from_comma(m: &CommaMorphism) -> Result<IncHom> {
        match (&m.presentation, &m.psi) {
            (Presentation::R1, FootMap::Two(v, e)) => Ok(IncHom {
                vmap: v.clone(),
                emap: e.clone(),
                imap: m.phi.clone(),
            }),
            _ => Err(Error::KindMismatch("expected an R1 morphism".into())),
        }
    }
}

/// A set-system hypergraph viewed in the antihomomorphism presentation.
pub fn anti_to_comma(g: &SSHypergraph) -> CommaObject {
    CommaObject {
        presentation: Presentation::P1,
        a_part: g.vertices.clone(),
        f: g.incidence.clone(),
        b_part: Foot::One(g.edges.clone()),
    }
}

pub fn anti_from_comma(x: &CommaObject) -> Result<SSHypergraph> {
    expect(x, Presentation::P1)?;
    let e = x.b_part.single().ok_or_else(|| Error::Mismatch("P1 B-part".into()))?;
    SSHypergraph::new(x.a_part.clone(), e.clone(), x.f.clone())
}

pub fn antihom_to_comma(m: &AntiHom) -> CommaMorphism {
    CommaMorphism {
        presentation: Presentation::P1,
        phi: m.vmap.clone(),
        psi: FootMap::One(m.emap.clone()),
    }
}

pub fn antihom_from_comma(m: &CommaMorphism) -> Result<AntiHom> {
    match (&m.presentation, &m.psi) {
        (Presentation::P1, FootMap::One(e)) => Ok(AntiHom {
            vmap: m.phi.clone(),
            emap: e.clone(),
        }),
        _ => Err(Error::KindMismatch("expected a P1 morphism".into())),
    }
}

/// The structured "spaces" equivalent to simple comma objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Digraph(Digraph),
    SetSystem(SetSystem),
    IncStructure(IncStructure),
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Digraph(g) => g.fmt(f),
            Space::SetSystem(s) => s.fmt(f),
            Space::IncStructure(s) => s.fmt(f),
        }
    }
}

fn decode_pairs(range: &FinSet) -> Result<Vec<(String, String)>> {
    range
        .iter()
        .map(|l| {
            label::split_pair(l)
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .ok_or_else(|| Error::BadLabel(l.to_string()))
        })
        .collect()
}

fn decode_subsets(range: &FinSet) -> Result<Vec<Vec<String>>> {
    range
        .iter()
        .map(|l| {
            label::split_subset(l)
                .map(|m| m.into_iter().map(str::to_string).collect())
                .ok_or_else(|| Error::BadLabel(l.to_string()))
        })
        .collect()
}

/// Reads a simple object as a relation, family or flag set over its `B`-part.
pub fn space_of(x: &CommaObject) -> Result<Space> {
    if x.presentation == Presentation::P1 {
        return Err(Error::Unsupported {
            op: "space_of",
            presentation: "P1",
        });
    }
    if !is_simple(x) {
        return Err(Error::NotSimple);
    }
    let range = x.f.range();
    match (&x.presentation, &x.b_part) {
        (Presentation::Q1, Foot::One(v)) => {
            Ok(Space::Digraph(Digraph::new(v.clone(), decode_pairs(&range)?)?))
        }
        (Presentation::H1, Foot::One(v)) => Ok(Space::SetSystem(SetSystem::new(
            v.clone(),
            decode_subsets(&range)?,
        )?)),
        (Presentation::R1, Foot::Two(v, e)) => Ok(Space::IncStructure(IncStructure::new(
            v.clone(),
            e.clone(),
            decode_pairs(&range)?,
        )?)),
        _ => Err(Error::Mismatch("presentation and B-part disagree".into())),
    }
}

/// The simple comma object whose `A`-part is the relation itself and whose
/// structure map is the inclusion.
pub fn comma_of(s: &Space) -> CommaObject {
    let (presentation, b_part, alpha) = match s {
        Space::Digraph(g) => (
            Presentation::Q1,
            Foot::One(g.vertices.clone()),
            g.arcs.iter().map(|(v, w)| label::pair(v, w)).collect(),
        ),
        Space::SetSystem(s) => (
            Presentation::H1,
            Foot::One(s.vertices.clone()),
            s.sets.iter().map(label::subset).collect(),
        ),
        Space::IncStructure(s) => (
            Presentation::R1,
            Foot::Two(s.vertices.clone(), s.edges.clone()),
            s.flags.iter().map(|(v, e)| label::pair(v, e)).collect(),
        ),
    };
    let a_part = FinSet::from_generated(alpha);
    let (_, cod) = structure_shape(presentation, &a_part, &b_part).expect("space feet are well-shaped");
    let f = FinMap::inclusion(&a_part, &cod).expect("a space's relation lies in G(B)");
    CommaObject {
        presentation,
        a_part,
        f,
        b_part,
    }
}

/// `Space(φ, ψ) = ψ`.
pub fn space_hom_of(m: &CommaMorphism) -> SpaceHom {
    match &m.psi {
        FootMap::One(v) => SpaceHom::vertex(v.clone()),
        FootMap::Two(v, e) => SpaceHom {
            vmap: v.clone(),
            emap: Some(e.clone()),
        },
    }
}

/// `Comma(ψ) = (G(ψ) restricted to the relation, ψ)` between `comma_of(dom)`
/// and `comma_of(cod)`.
pub fn comma_hom_of(m: &SpaceHom, dom: &Space, cod: &Space) -> Result<CommaMorphism> {
    let x = comma_of(dom);
    let y = comma_of(cod);
    let psi = match (&m.emap, &x.b_part) {
        (None, Foot::One(_)) => FootMap::One(m.vmap.clone()),
        (Some(e), Foot::Two(..)) => FootMap::Two(m.vmap.clone(), e.clone()),
        _ => return Err(Error::KindMismatch("space morphism does not fit".into())),
    };
    let p = x.presentation;
    let phi = FinMap::from_fn(x.a_part.clone(), y.a_part.clone(), |a| {
        middle_apply(p, &psi, a).unwrap_or_default()
    })
    .map_err(|_| Error::Violation("space morphism does not preserve the structure".into()))?;
    Ok(CommaMorphism {
        presentation: p,
        phi,
        psi,
    })
}

/// The comparison `ζ = (q_f, id_B): x → comma_of(space_of(x))`, with
/// `q_f(a) = f(a)`.
pub fn zeta(x: &CommaObject) -> Result<CommaMorphism> {
    let target = comma_of(&space_of(x)?);
    let q = x.f.with_codomain(&target.a_part)?;
    Ok(CommaMorphism {
        presentation: x.presentation,
        phi: q,
        psi: FootMap::identity(&x.b_part),
    })
}

/// Reads a cosimple `P1` object as a set system (an object of the
/// antihomomorphism category).
pub fn cospace_of(x: &CommaObject) -> Result<SetSystem> {
    expect(x, Presentation::P1)?;
    if !is_cosimple(x) {
        return Err(Error::NotCosimple);
    }
    SetSystem::new(x.a_part.clone(), decode_subsets(&x.f.range())?)
}

/// The cosimple `P1` object with one edge per member, labeled by the member.
pub fn cocomma_of(s: &SetSystem) -> CommaObject {
    let b = FinSet::from_generated(s.sets.iter().map(label::subset).collect());
    let cod = power_set(&s.vertices).expect("set-system carriers stay within the power-set bound");
    let f = FinMap::inclusion(&b, &cod).expect("members are subsets");
    CommaObject {
        presentation: Presentation::P1,
        a_part: s.vertices.clone(),
        f,
        b_part: Foot::One(b),
    }
}
