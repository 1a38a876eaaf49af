//! Concrete object and morphism kinds: quivers, set-system hypergraphs,
//! incidence hypergraphs, and the relation-style "spaces" (digraphs, set
//! systems, incidence structures) together with their subcategories.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{power_set, subset_mask, FinMap, FinSet};
use crate::label;
use crate::verify::LawReport;

type Check = std::result::Result<(), String>;

/// Objects whose internal consistency can be re-checked.
pub trait GraphObject: fmt::Display {
    fn check(&self) -> Check;

    fn validate(&self) -> LawReport {
        report("object-valid", self.to_string(), self.check())
    }
}

/// Structure-preserving maps between objects of kind `O`.
pub trait Morphism<O>: Sized {
    /// `Ok` when `self` is a valid morphism `dom → cod`; otherwise the first
    /// violated square and the offending element.
    fn check(&self, dom: &O, cod: &O) -> Check;

    fn identity(x: &O) -> Self;

    /// `self ∘ first`.
    fn compose(&self, first: &Self) -> Result<Self>;

    fn validate(&self, dom: &O, cod: &O) -> LawReport
    where
        O: fmt::Display,
    {
        report("morphism-valid", format!("{dom} → {cod}"), self.check(dom, cod))
    }
}

fn report(law: &str, instance: String, outcome: Check) -> LawReport {
    match outcome {
        Ok(()) => LawReport::pass(law, instance),
        Err(w) => LawReport::fail(law, instance, w),
    }
}

fn check_map(name: &str, m: &FinMap, dom: &FinSet, cod: &FinSet) -> Check {
    if m.dom() != dom {
        return Err(format!("{name} has domain {} instead of {dom}", m.dom()));
    }
    if m.cod() != cod {
        return Err(format!("{name} has codomain {} instead of {cod}", m.cod()));
    }
    Ok(())
}

fn image(m: &FinMap, x: &str) -> String {
    m.apply(x).unwrap_or("?").to_string()
}

fn direct_image(vmap: &FinMap, members: &[&str]) -> BTreeSet<String> {
    members.iter().map(|v| image(vmap, v)).collect()
}

fn preimage(vmap: &FinMap, target: &BTreeSet<String>) -> BTreeSet<String> {
    vmap.iter()
        .filter(|(_, y)| target.contains(*y))
        .map(|(x, _)| x.to_string())
        .collect()
}

/// A directed multigraph: edges with source and target maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertices: FinSet,
    pub edges: FinSet,
    pub src: FinMap,
    pub tgt: FinMap,
}

impl Quiver {
    pub fn new(vertices: FinSet, edges: FinSet, src: FinMap, tgt: FinMap) -> Result<Self> {
        let q = Quiver {
            vertices,
            edges,
            src,
            tgt,
        };
        q.check().map_err(Error::Violation)?;
        Ok(q)
    }

    /// Convenience constructor from `(id, source, target)` triples.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let v = FinSet::new(vertices.iter().copied())?;
        let e = FinSet::new(edges.iter().map(|t| t.0))?;
        let src = FinMap::new(e.clone(), v.clone(), edges.iter().map(|t| (t.0, t.1)))?;
        let tgt = FinMap::new(e.clone(), v.clone(), edges.iter().map(|t| (t.0, t.2)))?;
        Quiver::new(v, e, src, tgt)
    }

    pub fn empty() -> Self {
        Quiver::build(&[], &[]).expect("empty quiver")
    }
}

impl GraphObject for Quiver {
    fn check(&self) -> Check {
        check_map("src", &self.src, &self.edges, &self.vertices)?;
        check_map("tgt", &self.tgt, &self.edges, &self.vertices)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver V={} E=[", self.vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}:{}->{}", image(&self.src, e), image(&self.tgt, e))?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverHom {
    pub vmap: FinMap,
    pub emap: FinMap,
}

impl Morphism<Quiver> for QuiverHom {
    fn check(&self, dom: &Quiver, cod: &Quiver) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        check_map("edge map", &self.emap, &dom.edges, &cod.edges)?;
        for e in dom.edges.iter() {
            let e2 = image(&self.emap, e);
            for (name, here, there) in [("src", &dom.src, &cod.src), ("tgt", &dom.tgt, &cod.tgt)] {
                let a = image(&self.vmap, &image(here, e));
                let b = image(there, &e2);
                if a != b {
                    return Err(format!(
                        "edge {e}: vertex map sends {name}({e}) to {a} but {name}'({e2}) = {b}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn identity(x: &Quiver) -> Self {
        QuiverHom {
            vmap: FinMap::identity(&x.vertices),
            emap: FinMap::identity(&x.edges),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        Ok(QuiverHom {
            vmap: self.vmap.after(&first.vmap)?,
            emap: self.emap.after(&first.emap)?,
        })
    }
}

/// A hypergraph whose edges carry vertex subsets; parallel edges are
/// distinct edge labels with equal subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SSHypergraph {
    pub vertices: FinSet,
    pub edges: FinSet,
    /// edges → power set of the vertices
    pub incidence: FinMap,
}

impl SSHypergraph {
    pub fn new(vertices: FinSet, edges: FinSet, incidence: FinMap) -> Result<Self> {
        let h = SSHypergraph {
            vertices,
            edges,
            incidence,
        };
        h.check().map_err(Error::Violation)?;
        Ok(h)
    }

    /// Convenience constructor from `(id, members)` pairs.
    pub fn build(vertices: &[&str], edges: &[(&str, &[&str])]) -> Result<Self> {
        let v = FinSet::new(vertices.iter().copied())?;
        let e = FinSet::new(edges.iter().map(|t| t.0))?;
        let mut assignment = Vec::new();
        for (id, members) in edges {
            let sub = FinSet::collect_dedup(members.iter().copied())?;
            for m in sub.iter() {
                v.require(m, "the vertex set")?;
            }
            assignment.push((*id, label::subset(sub.iter())));
        }
        let incidence = FinMap::new(e.clone(), power_set(&v)?, assignment)?;
        SSHypergraph::new(v, e, incidence)
    }

    /// Vertices of edge `e`, in label order.
    pub fn members(&self, e: &str) -> Vec<&str> {
        self.incidence
            .apply(e)
            .and_then(label::split_subset)
            .unwrap_or_default()
    }

    pub fn member_set(&self, e: &str) -> BTreeSet<String> {
        self.members(e).into_iter().map(str::to_string).collect()
    }
}

impl GraphObject for SSHypergraph {
    fn check(&self) -> Check {
        if self.incidence.dom() != &self.edges {
            return Err(format!(
                "incidence has domain {} instead of {}",
                self.incidence.dom(),
                self.edges
            ));
        }
        for (e, s) in self.incidence.iter() {
            if subset_mask(&self.vertices, s).is_none() {
                return Err(format!("edge {e} carries {s}, not a subset of {}", self.vertices));
            }
        }
        match power_set(&self.vertices) {
            Ok(p) if &p == self.incidence.cod() => Ok(()),
            Ok(_) => Err("incidence codomain is not the vertex power set".into()),
            Err(e) => Err(e.to_string()),
        }
    }
}

impl fmt::Display for SSHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hypergraph V={} E=[", self.vertices)?;
        for (i, (e, s)) in self.incidence.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}:{s}")?;
        }
        f.write_str("]")
    }
}

/// Covariant hypergraph homomorphism: edges go forward and carry direct images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HypergraphHom {
    pub vmap: FinMap,
    pub emap: FinMap,
}

impl Morphism<SSHypergraph> for HypergraphHom {
    fn check(&self, dom: &SSHypergraph, cod: &SSHypergraph) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        check_map("edge map", &self.emap, &dom.edges, &cod.edges)?;
        for e in dom.edges.iter() {
            let e2 = image(&self.emap, e);
            let pushed = direct_image(&self.vmap, &dom.members(e));
            let there = cod.member_set(&e2);
            if pushed != there {
                return Err(format!(
                    "edge {e}: image of its vertices is {} but edge {e2} carries {}",
                    label::subset(&pushed),
                    label::subset(&there)
                ));
            }
        }
        Ok(())
    }

    fn identity(x: &SSHypergraph) -> Self {
        HypergraphHom {
            vmap: FinMap::identity(&x.vertices),
            emap: FinMap::identity(&x.edges),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        Ok(HypergraphHom {
            vmap: self.vmap.after(&first.vmap)?,
            emap: self.emap.after(&first.emap)?,
        })
    }
}

/// Antihomomorphism: vertices forward, edges backward, compatible via preimage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AntiHom {
    pub vmap: FinMap,
    /// edges of the codomain → edges of the domain
    pub emap: FinMap,
}

impl Morphism<SSHypergraph> for AntiHom {
    fn check(&self, dom: &SSHypergraph, cod: &SSHypergraph) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        check_map("reverse edge map", &self.emap, &cod.edges, &dom.edges)?;
        for f in cod.edges.iter() {
            let back = image(&self.emap, f);
            let pulled = preimage(&self.vmap, &cod.member_set(f));
            let here = dom.member_set(&back);
            if pulled != here {
                return Err(format!(
                    "edge {f}: preimage of its vertices is {} but edge {back} carries {}",
                    label::subset(&pulled),
                    label::subset(&here)
                ));
            }
        }
        Ok(())
    }

    fn identity(x: &SSHypergraph) -> Self {
        AntiHom {
            vmap: FinMap::identity(&x.vertices),
            emap: FinMap::identity(&x.edges),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        Ok(AntiHom {
            vmap: self.vmap.after(&first.vmap)?,
            emap: first.emap.after(&self.emap)?,
        })
    }
}

/// Incidence hypergraph: incidences attach to one vertex and one edge each.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncHypergraph {
    pub vertices: FinSet,
    pub edges: FinSet,
    pub incidences: FinSet,
    pub att_v: FinMap,
    pub att_e: FinMap,
}

impl IncHypergraph {
    pub fn new(
        vertices: FinSet,
        edges: FinSet,
        incidences: FinSet,
        att_v: FinMap,
        att_e: FinMap,
    ) -> Result<Self> {
        let g = IncHypergraph {
            vertices,
            edges,
            incidences,
            att_v,
            att_e,
        };
        g.check().map_err(Error::Violation)?;
        Ok(g)
    }

    /// Convenience constructor from `(id, vertex, edge)` triples.
    pub fn build(vertices: &[&str], edges: &[&str], incidences: &[(&str, &str, &str)]) -> Result<Self> {
        let v = FinSet::new(vertices.iter().copied())?;
        let e = FinSet::new(edges.iter().copied())?;
        let i = FinSet::new(incidences.iter().map(|t| t.0))?;
        let att_v = FinMap::new(i.clone(), v.clone(), incidences.iter().map(|t| (t.0, t.1)))?;
        let att_e = FinMap::new(i.clone(), e.clone(), incidences.iter().map(|t| (t.0, t.2)))?;
        IncHypergraph::new(v, e, i, att_v, att_e)
    }
}

impl GraphObject for IncHypergraph {
    fn check(&self) -> Check {
        check_map("vertex attachment", &self.att_v, &self.incidences, &self.vertices)?;
        check_map("edge attachment", &self.att_e, &self.incidences, &self.edges)
    }
}

impl fmt::Display for IncHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "incidence V={} E={} I=[", self.vertices, self.edges)?;
        for (k, i) in self.incidences.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}:{}~{}", image(&self.att_v, i), image(&self.att_e, i))?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncHom {
    pub vmap: FinMap,
    pub emap: FinMap,
    pub imap: FinMap,
}

impl Morphism<IncHypergraph> for IncHom {
    fn check(&self, dom: &IncHypergraph, cod: &IncHypergraph) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        check_map("edge map", &self.emap, &dom.edges, &cod.edges)?;
        check_map("incidence map", &self.imap, &dom.incidences, &cod.incidences)?;
        for i in dom.incidences.iter() {
            let i2 = image(&self.imap, i);
            let pairs = [
                ("vertex", &self.vmap, &dom.att_v, &cod.att_v),
                ("edge", &self.emap, &dom.att_e, &cod.att_e),
            ];
            for (name, m, here, there) in pairs {
                let a = image(m, &image(here, i));
                let b = image(there, &i2);
                if a != b {
                    return Err(format!(
                        "incidence {i}: its {name} maps to {a} but incidence {i2} attaches to {b}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn identity(x: &IncHypergraph) -> Self {
        IncHom {
            vmap: FinMap::identity(&x.vertices),
            emap: FinMap::identity(&x.edges),
            imap: FinMap::identity(&x.incidences),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        Ok(IncHom {
            vmap: self.vmap.after(&first.vmap)?,
            emap: self.emap.after(&first.emap)?,
            imap: self.imap.after(&first.imap)?,
        })
    }
}

/// A vertex set with a binary relation of arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    pub vertices: FinSet,
    pub arcs: BTreeSet<(String, String)>,
}

impl Digraph {
    pub fn new<I, S>(vertices: FinSet, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let g = Digraph {
            vertices,
            arcs: arcs.into_iter().map(|(v, w)| (v.into(), w.into())).collect(),
        };
        g.check().map_err(Error::Violation)?;
        Ok(g)
    }

    pub fn build(vertices: &[&str], arcs: &[(&str, &str)]) -> Result<Self> {
        Digraph::new(FinSet::new(vertices.iter().copied())?, arcs.iter().copied())
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs
            .iter()
            .all(|(v, w)| self.arcs.contains(&(w.clone(), v.clone())))
    }
}

impl GraphObject for Digraph {
    fn check(&self) -> Check {
        for (v, w) in &self.arcs {
            for x in [v, w] {
                if !self.vertices.contains(x) {
                    return Err(format!("arc ({v},{w}) uses {x}, which is not a vertex"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph V={} A={}", self.vertices, label::subset(self.arcs.iter().map(|(v, w)| label::pair(v, w))))
    }
}

/// A digraph whose arc relation is symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymDigraph(Digraph);

impl SymDigraph {
    pub fn new(g: Digraph) -> Result<Self> {
        if g.is_symmetric() {
            Ok(SymDigraph(g))
        } else {
            Err(Error::KindMismatch(format!("{g} is not symmetric")))
        }
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }
}

impl fmt::Display for SymDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A vertex set with a family of distinct vertex subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSystem {
    pub vertices: FinSet,
    pub sets: BTreeSet<BTreeSet<String>>,
}

impl SetSystem {
    pub fn new<I, J, S>(vertices: FinSet, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let s = SetSystem {
            vertices,
            sets: sets
                .into_iter()
                .map(|m| m.into_iter().map(Into::into).collect())
                .collect(),
        };
        s.check().map_err(Error::Violation)?;
        Ok(s)
    }

    pub fn build(vertices: &[&str], sets: &[&[&str]]) -> Result<Self> {
        SetSystem::new(
            FinSet::new(vertices.iter().copied())?,
            sets.iter().map(|s| s.iter().copied()),
        )
    }

    /// Bitmask of a member over the vertex order.
    pub fn mask_of(&self, set: &BTreeSet<String>) -> u64 {
        set.iter()
            .filter_map(|v| self.vertices.index_of(v))
            .fold(0, |acc, i| acc | 1 << i)
    }

    pub fn masks(&self) -> BTreeSet<u64> {
        self.sets.iter().map(|s| self.mask_of(s)).collect()
    }

    pub fn from_masks<I: IntoIterator<Item = u64>>(vertices: &FinSet, masks: I) -> SetSystem {
        SetSystem {
            vertices: vertices.clone(),
            sets: masks
                .into_iter()
                .map(|m| {
                    crate::finset::mask_members(vertices, m)
                        .map(str::to_string)
                        .collect()
                })
                .collect(),
        }
    }
}

impl GraphObject for SetSystem {
    fn check(&self) -> Check {
        for s in &self.sets {
            if let Some(x) = s.iter().find(|x| !self.vertices.contains(x)) {
                return Err(format!(
                    "member {} uses {x}, which is not a vertex",
                    label::subset(s)
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "setsystem V={} B={}",
            self.vertices,
            label::subset(self.sets.iter().map(label::subset))
        )
    }
}

/// A set system whose members have one or two elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph(SetSystem);

impl SimpleGraph {
    pub fn new(s: SetSystem) -> Result<Self> {
        match s.sets.iter().find(|m| m.is_empty() || m.len() > 2) {
            None => Ok(SimpleGraph(s)),
            Some(m) => Err(Error::KindMismatch(format!(
                "member {} has {} elements; graphs need 1 or 2",
                label::subset(m),
                m.len()
            ))),
        }
    }

    pub fn as_set_system(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_set_system(self) -> SetSystem {
        self.0
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Vertices, edges and a set of (vertex, edge) flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncStructure {
    pub vertices: FinSet,
    pub edges: FinSet,
    pub flags: BTreeSet<(String, String)>,
}

impl IncStructure {
    pub fn new<I, S>(vertices: FinSet, edges: FinSet, flags: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let s = IncStructure {
            vertices,
            edges,
            flags: flags.into_iter().map(|(v, e)| (v.into(), e.into())).collect(),
        };
        s.check().map_err(Error::Violation)?;
        Ok(s)
    }

    pub fn build(vertices: &[&str], edges: &[&str], flags: &[(&str, &str)]) -> Result<Self> {
        IncStructure::new(
            FinSet::new(vertices.iter().copied())?,
            FinSet::new(edges.iter().copied())?,
            flags.iter().copied(),
        )
    }
}

impl GraphObject for IncStructure {
    fn check(&self) -> Check {
        for (v, e) in &self.flags {
            if !self.vertices.contains(v) || !self.edges.contains(e) {
                return Err(format!("flag ({v},{e}) does not join a vertex to an edge"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for IncStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "incstructure V={} E={} F={}",
            self.vertices,
            self.edges,
            label::subset(self.flags.iter().map(|(v, e)| label::pair(v, e)))
        )
    }
}

/// Morphism of spaces: a vertex map, plus an edge map for incidence structures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceHom {
    pub vmap: FinMap,
    pub emap: Option<FinMap>,
}

impl SpaceHom {
    pub fn vertex(vmap: FinMap) -> Self {
        SpaceHom { vmap, emap: None }
    }

    fn compose_maps(&self, first: &Self) -> Result<Self> {
        let emap = match (&self.emap, &first.emap) {
            (Some(a), Some(b)) => Some(a.after(b)?),
            (None, None) => None,
            _ => return Err(Error::Mismatch("mixing vertex-only and two-sorted maps".into())),
        };
        Ok(SpaceHom {
            vmap: self.vmap.after(&first.vmap)?,
            emap,
        })
    }
}

impl Morphism<Digraph> for SpaceHom {
    fn check(&self, dom: &Digraph, cod: &Digraph) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        for (v, w) in &dom.arcs {
            let arc = (image(&self.vmap, v), image(&self.vmap, w));
            if !cod.arcs.contains(&arc) {
                return Err(format!("arc ({v},{w}) maps to ({},{}), not an arc", arc.0, arc.1));
            }
        }
        Ok(())
    }

    fn identity(x: &Digraph) -> Self {
        SpaceHom::vertex(FinMap::identity(&x.vertices))
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        self.compose_maps(first)
    }
}

impl Morphism<SetSystem> for SpaceHom {
    fn check(&self, dom: &SetSystem, cod: &SetSystem) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        for s in &dom.sets {
            let members: Vec<&str> = s.iter().map(String::as_str).collect();
            let img = direct_image(&self.vmap, &members);
            if !cod.sets.contains(&img) {
                return Err(format!(
                    "member {} maps to {}, not a member",
                    label::subset(s),
                    label::subset(&img)
                ));
            }
        }
        Ok(())
    }

    fn identity(x: &SetSystem) -> Self {
        SpaceHom::vertex(FinMap::identity(&x.vertices))
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        self.compose_maps(first)
    }
}

impl Morphism<IncStructure> for SpaceHom {
    fn check(&self, dom: &IncStructure, cod: &IncStructure) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        let emap = self.emap.as_ref().ok_or("incidence structures need an edge map")?;
        check_map("edge map", emap, &dom.edges, &cod.edges)?;
        for (v, e) in &dom.flags {
            let flag = (image(&self.vmap, v), image(emap, e));
            if !cod.flags.contains(&flag) {
                return Err(format!("flag ({v},{e}) maps to ({},{}), not a flag", flag.0, flag.1));
            }
        }
        Ok(())
    }

    fn identity(x: &IncStructure) -> Self {
        SpaceHom {
            vmap: FinMap::identity(&x.vertices),
            emap: Some(FinMap::identity(&x.edges)),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        self.compose_maps(first)
    }
}

/// Antihomomorphism of set systems: every codomain member pulls back to a
/// domain member. Continuous and measurable maps are exactly these.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystemAntiHom {
    pub vmap: FinMap,
}

impl Morphism<SetSystem> for SetSystemAntiHom {
    fn check(&self, dom: &SetSystem, cod: &SetSystem) -> Check {
        check_map("vertex map", &self.vmap, &dom.vertices, &cod.vertices)?;
        for s in &cod.sets {
            let pulled = preimage(&self.vmap, s);
            if !dom.sets.contains(&pulled) {
                return Err(format!(
                    "preimage of {} is {}, not a member",
                    label::subset(s),
                    label::subset(&pulled)
                ));
            }
        }
        Ok(())
    }

    fn identity(x: &SetSystem) -> Self {
        SetSystemAntiHom {
            vmap: FinMap::identity(&x.vertices),
        }
    }

    fn compose(&self, first: &Self) -> Result<Self> {
        Ok(SetSystemAntiHom {
            vmap: self.vmap.after(&first.vmap)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn identity_validates() {
        let q = Quiver::build(&["a", "b"], &[("e", "a", "b"), ("f", "b", "b")]).unwrap();
        assert_eq!(QuiverHom::identity(&q).validate(&q, &q).verdict, Verdict::Pass);
        assert_eq!(q.validate().verdict, Verdict::Pass);
    }

    #[test]
    fn broken_quiver_square_names_edge() {
        let q = Quiver::build(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let swap = FinMap::new(q.vertices.clone(), q.vertices.clone(), [("a", "b"), ("b", "a")]).unwrap();
        let m = QuiverHom {
            vmap: swap,
            emap: FinMap::identity(&q.edges),
        };
        let r = m.validate(&q, &q);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.unwrap().starts_with("edge e"));
    }

    #[test]
    fn wrong_domain_is_reported_not_panicking() {
        let q = Quiver::build(&["a"], &[("e", "a", "a")]).unwrap();
        let p = Quiver::build(&["x", "y"], &[]).unwrap();
        let r = QuiverHom::identity(&p).validate(&q, &q);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn symmetric_and_simple_graph_invariants() {
        let d = Digraph::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(SymDigraph::new(d).is_err());
        let s = SetSystem::build(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert!(SimpleGraph::new(s).is_err());
        let s = SetSystem::build(&["a"], &[&[]]).unwrap();
        assert!(SimpleGraph::new(s).is_err());
        let s = SetSystem::build(&["a"], &[&["a"]]).unwrap();
        assert!(SimpleGraph::new(s).is_ok());
        assert!(Digraph::build(&["a"], &[("a", "z")]).is_err());
    }

    #[test]
    fn antihom_checks_preimages() {
        let g = SSHypergraph::build(&["a", "b"], &[("e", &["a", "b"]), ("f", &["a"])]).unwrap();
        let h = SSHypergraph::build(&["x"], &[("g", &["x"])]).unwrap();
        let constant = FinMap::new(g.vertices.clone(), h.vertices.clone(), [("a", "x"), ("b", "x")]).unwrap();
        let ok = AntiHom {
            vmap: constant.clone(),
            emap: FinMap::new(h.edges.clone(), g.edges.clone(), [("g", "e")]).unwrap(),
        };
        assert!(ok.check(&g, &h).is_ok());
        let bad = AntiHom {
            vmap: constant,
            emap: FinMap::new(h.edges.clone(), g.edges.clone(), [("g", "f")]).unwrap(),
        };
        assert!(bad.check(&g, &h).unwrap_err().contains("edge g"));
    }
}
