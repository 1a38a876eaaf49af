//! Finite sets of labeled elements, total functions between them, and the
//! small regular-category toolkit built on top: image factorization, kernel
//! pairs, coequalizers, products, coproducts and power sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::label;

/// Upper bound on `|X|` for [`power_set`] unless a caller picks another one.
pub const DEFAULT_POWER_SET_BOUND: usize = 10;

/// A finite set of distinct labels, always held in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSet {
    elements: Vec<String>,
}

impl FinSet {
    /// Builds a set from labels, rejecting duplicates and malformed labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &elements {
            label::check(l)?;
        }
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        Ok(FinSet { elements })
    }

    /// Like [`FinSet::new`] but merges repeated labels.
    pub fn collect_dedup<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &elements {
            label::check(l)?;
        }
        elements.sort();
        elements.dedup();
        Ok(FinSet { elements })
    }

    /// Internal constructor for labels produced by the canonical encoders.
    pub(crate) fn from_generated(mut elements: Vec<String>) -> Self {
        elements.sort();
        elements.dedup();
        FinSet { elements }
    }

    pub fn empty() -> Self {
        FinSet::default()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &str) -> Option<usize> {
        self.elements
            .binary_search_by(|probe| probe.as_str().cmp(x))
            .ok()
    }

    pub fn contains(&self, x: &str) -> bool {
        self.index_of(x).is_some()
    }

    pub fn get(&self, i: usize) -> Option<&str> {
        self.elements.get(i).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        self.elements.iter().map(String::as_str)
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub(crate) fn require(&self, x: &str, context: &str) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::UnknownLabel {
            label: x.to_string(),
            context: context.to_string(),
        })
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label::subset(self.iter()))
    }
}

/// A total function between two finite sets.
///
/// Images are stored as indices into the codomain, so two maps are equal
/// exactly when they have the same domain, codomain and assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    images: Vec<usize>,
}

impl FinMap {
    /// Builds a map from explicit `(x, f(x))` pairs. Every domain element
    /// must appear exactly once and every image must lie in the codomain.
    pub fn new<I, K, V>(dom: FinSet, cod: FinSet, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut images = vec![usize::MAX; dom.len()];
        for (k, v) in assignment {
            let i = dom.require(k.as_ref(), "the domain")?;
            let j = cod.require(v.as_ref(), "the codomain")?;
            if images[i] != usize::MAX {
                return Err(Error::Mismatch(format!(
                    "`{}` is assigned twice",
                    k.as_ref()
                )));
            }
            images[i] = j;
        }
        if let Some(i) = images.iter().position(|&j| j == usize::MAX) {
            return Err(Error::NotTotal(dom.elements[i].clone()));
        }
        Ok(FinMap { dom, cod, images })
    }

    pub fn from_fn<F, S>(dom: FinSet, cod: FinSet, f: F) -> Result<Self>
    where
        F: Fn(&str) -> S,
        S: AsRef<str>,
    {
        let images = dom
            .iter()
            .map(|x| cod.require(f(x).as_ref(), "the codomain"))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinMap { dom, cod, images })
    }

    pub fn from_indices(dom: FinSet, cod: FinSet, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom.len() {
            return Err(Error::Mismatch(format!(
                "{} images for a domain of size {}",
                images.len(),
                dom.len()
            )));
        }
        if let Some(&j) = images.iter().find(|&&j| j >= cod.len()) {
            return Err(Error::Mismatch(format!(
                "image index {j} outside a codomain of size {}",
                cod.len()
            )));
        }
        Ok(FinMap { dom, cod, images })
    }

    pub fn identity(x: &FinSet) -> Self {
        FinMap {
            dom: x.clone(),
            cod: x.clone(),
            images: (0..x.len()).collect(),
        }
    }

    pub fn inclusion(sub: &FinSet, sup: &FinSet) -> Result<Self> {
        FinMap::from_fn(sub.clone(), sup.clone(), |x| x.to_string())
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn indices(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: &str) -> Option<&str> {
        let i = self.dom.index_of(x)?;
        Some(self.cod.elements[self.images[i]].as_str())
    }

    /// Image of the `i`-th domain element.
    pub fn at(&self, i: usize) -> &str {
        &self.cod.elements[self.images[i]]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.dom
            .iter()
            .zip(self.images.iter().map(|&j| self.cod.elements[j].as_str()))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinMap) -> Result<FinMap> {
        if first.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose: codomain {} is not domain {}",
                first.cod, self.dom
            )));
        }
        Ok(FinMap {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            images: first.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    /// Same assignment, different codomain (restriction or extension).
    pub fn with_codomain(&self, cod: &FinSet) -> Result<FinMap> {
        FinMap::from_fn(self.dom.clone(), cod.clone(), |x| {
            self.apply(x).unwrap_or_default().to_string()
        })
    }

    /// Restriction to a subset of the domain.
    pub fn restrict(&self, sub: &FinSet) -> Result<FinMap> {
        for x in sub.iter() {
            self.dom.require(x, "the domain being restricted")?;
        }
        FinMap::from_fn(sub.clone(), self.cod.clone(), |x| {
            self.apply(x).unwrap_or_default().to_string()
        })
    }

    pub fn range(&self) -> FinSet {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.images {
            hit[j] = true;
        }
        FinSet {
            elements: self
                .cod
                .elements
                .iter()
                .zip(hit)
                .filter_map(|(l, h)| h.then(|| l.clone()))
                .collect(),
        }
    }

    /// Domain elements sent to `y`, in domain order.
    pub fn fiber(&self, y: &str) -> Vec<&str> {
        match self.cod.index_of(y) {
            Some(j) => self
                .images
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k == j)
                .map(|(i, _)| self.dom.elements[i].as_str())
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.images
            .iter()
            .all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.images {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0; self.cod.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Some(FinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            images,
        })
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (x, y)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}↦{y}")?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapClass {
    pub injective: bool,
    pub surjective: bool,
}

pub fn classify_map(f: &FinMap) -> MapClass {
    MapClass {
        injective: f.is_injective(),
        surjective: f.is_surjective(),
    }
}

/// An epi-mono factorization `f = mono ∘ epi` through `mid`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub epi: FinMap,
    pub mono: FinMap,
    pub mid: FinSet,
}

/// Factors `f` through its set-theoretic range. The middle set reuses the
/// codomain labels of the elements hit.
pub fn image_factorization(f: &FinMap) -> Factorization {
    let mid = f.range();
    let epi = f
        .with_codomain(&mid)
        .expect("every image lies in the range");
    let mono = FinMap::inclusion(&mid, f.cod()).expect("range is a subset of the codomain");
    Factorization { epi, mono, mid }
}

/// The pullback of `f` against itself: all pairs `(x, y)` with `f(x) = f(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPair {
    pub pairs: FinSet,
    pub p1: FinMap,
    pub p2: FinMap,
}

pub fn kernel_pair(f: &FinMap) -> KernelPair {
    let dom = f.dom();
    let mut labels = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, x) in dom.iter().enumerate() {
        for (j, y) in dom.iter().enumerate() {
            if f.indices()[i] == f.indices()[j] {
                labels.push(label::pair(x, y));
                left.push(x.to_string());
                right.push(y.to_string());
            }
        }
    }
    let pairs = FinSet::from_generated(labels.clone());
    let lookup = |side: &[String]| {
        FinMap::new(
            pairs.clone(),
            dom.clone(),
            labels.iter().zip(side.iter()).map(|(l, x)| (l.as_str(), x.as_str())),
        )
        .expect("kernel pair projections are total")
    };
    let p1 = lookup(&left);
    let p2 = lookup(&right);
    KernelPair { pairs, p1, p2 }
}

/// Quotient of `set` by the equivalence relation generated by `related`.
/// Each class is named by its least label; the returned map sends every
/// element to its class.
pub fn quotient<'a, I>(set: &FinSet, related: I) -> Result<FinMap>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut parent: Vec<usize> = (0..set.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (x, y) in related {
        let a = find(&mut parent, set.require(x, "the set being quotiented")?);
        let b = find(&mut parent, set.require(y, "the set being quotiented")?);
        // labels are sorted, so the smaller index is the smaller label
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
    }
    let roots: Vec<usize> = (0..set.len()).map(|i| find(&mut parent, i)).collect();
    let classes = FinSet::from_generated(roots.iter().map(|&r| set.elements[r].clone()).collect());
    FinMap::from_fn(set.clone(), classes, |x| {
        let i = set.index_of(x).expect("iterating the domain");
        set.elements[roots[i]].clone()
    })
}

/// Coequalizer of two parallel maps `f, g: X → Y`: the projection of `Y`
/// onto its quotient by the equivalence generated by `f(x) ~ g(x)`.
pub fn coequalizer(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::Mismatch("coequalizer of non-parallel maps".into()));
    }
    quotient(f.cod(), f.iter().map(|(_, y)| y).zip(g.iter().map(|(_, y)| y)))
}

/// Builds the epi-mono factorization of `f` as the coequalizer of its
/// kernel pair followed by the induced comparison into the codomain.
///
/// The middle set is named by class representatives (least domain label of
/// each fiber); composing the representatives with `f` recovers the labels
/// produced by [`image_factorization`].
pub fn kernel_pair_coequalizer(f: &FinMap) -> Factorization {
    let kp = kernel_pair(f);
    let epi = coequalizer(&kp.p1, &kp.p2).expect("projections are parallel");
    let mid = epi.cod().clone();
    let mono = FinMap::from_fn(mid.clone(), f.cod().clone(), |rep| {
        f.apply(rep).expect("representatives lie in the domain").to_string()
    })
    .expect("images lie in the codomain");
    Factorization { epi, mono, mid }
}

/// A binary product or coproduct of finite sets with its two legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCone {
    pub carrier: FinSet,
    pub leg1: FinMap,
    pub leg2: FinMap,
}

/// Cartesian product with elements labeled `(x,y)`; the legs are the projections.
pub fn product_set(x: &FinSet, y: &FinSet) -> SetCone {
    let carrier = FinSet::from_generated(
        x.iter()
            .flat_map(|a| y.iter().map(move |b| label::pair(a, b)))
            .collect(),
    );
    let proj = |first: bool| {
        FinMap::new(
            carrier.clone(),
            if first { x.clone() } else { y.clone() },
            x.iter().flat_map(|a| {
                y.iter()
                    .map(move |b| (label::pair(a, b), if first { a } else { b }))
            }),
        )
        .expect("projections are total")
    };
    SetCone {
        leg1: proj(true),
        leg2: proj(false),
        carrier,
    }
}

/// Disjoint union with elements tagged `0:x` and `1:y`; the legs are the injections.
pub fn coproduct_set(x: &FinSet, y: &FinSet) -> SetCone {
    let carrier = FinSet::from_generated(
        x.iter()
            .map(|a| label::tag(0, a))
            .chain(y.iter().map(|b| label::tag(1, b)))
            .collect(),
    );
    let leg1 = FinMap::from_fn(x.clone(), carrier.clone(), |a| label::tag(0, a))
        .expect("tagged labels are in the carrier");
    let leg2 = FinMap::from_fn(y.clone(), carrier.clone(), |b| label::tag(1, b))
        .expect("tagged labels are in the carrier");
    SetCone {
        carrier,
        leg1,
        leg2,
    }
}

/// Members of `x` selected by the bits of `mask`, in label order.
pub fn mask_members(x: &FinSet, mask: u64) -> impl Iterator<Item = &str> + '_ {
    x.iter()
        .enumerate()
        .filter(move |(i, _)| mask >> i & 1 == 1)
        .map(|(_, l)| l)
}

pub fn mask_label(x: &FinSet, mask: u64) -> String {
    label::subset(mask_members(x, mask))
}

/// Decodes a subset label of `x` into a bitmask over `x`'s element order.
pub fn subset_mask(x: &FinSet, subset: &str) -> Option<u64> {
    let members = label::split_subset(subset)?;
    let mut mask = 0u64;
    for m in members {
        mask |= 1 << x.index_of(m)?;
    }
    Some(mask)
}

fn check_power_bound(x: &FinSet, bound: usize) -> Result<()> {
    if x.len() > bound || x.len() >= 64 {
        return Err(Error::SizeLimit {
            what: "power set base",
            size: x.len(),
            bound: bound.min(63),
        });
    }
    Ok(())
}

pub fn power_set(x: &FinSet) -> Result<FinSet> {
    power_set_bounded(x, DEFAULT_POWER_SET_BOUND)
}

/// All `2^|x|` subsets of `x`, labeled `{a,b}` with members in label order.
pub fn power_set_bounded(x: &FinSet, bound: usize) -> Result<FinSet> {
    check_power_bound(x, bound)?;
    Ok(FinSet::from_generated(
        (0..1u64 << x.len()).map(|m| mask_label(x, m)).collect(),
    ))
}

/// The contravariant power-set action: sends each subset of `cod f` to its preimage.
pub fn preimage_map(f: &FinMap) -> Result<FinMap> {
    preimage_map_bounded(f, DEFAULT_POWER_SET_BOUND)
}

pub fn preimage_map_bounded(f: &FinMap, bound: usize) -> Result<FinMap> {
    let pd = power_set_bounded(f.dom(), bound)?;
    let pc = power_set_bounded(f.cod(), bound)?;
    FinMap::from_fn(pc, pd, |s| {
        let mask = subset_mask(f.cod(), s).expect("power-set labels decode");
        let pre = f
            .indices()
            .iter()
            .enumerate()
            .filter(|&(_, &j)| mask >> j & 1 == 1)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        mask_label(f.dom(), pre)
    })
}

/// The covariant power-set action: sends each subset of `dom f` to its direct image.
pub fn direct_image_map(f: &FinMap) -> Result<FinMap> {
    let pd = power_set(f.dom())?;
    let pc = power_set(f.cod())?;
    FinMap::from_fn(pd, pc, |s| {
        let mask = subset_mask(f.dom(), s).expect("power-set labels decode");
        let img = f
            .indices()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .fold(0u64, |acc, (_, &j)| acc | 1 << j);
        mask_label(f.cod(), img)
    })
}

/// Number of functions `dom → cod`, saturating.
pub fn count_maps(dom: &FinSet, cod: &FinSet) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..dom.len() {
        n = n.saturating_mul(cod.len() as u128);
    }
    n
}

/// Every function `dom → cod` in lexicographic order of image indices.
pub fn all_maps(dom: &FinSet, cod: &FinSet) -> AllMaps {
    let done = !dom.is_empty() && cod.is_empty();
    AllMaps {
        dom: dom.clone(),
        cod: cod.clone(),
        next: Some(vec![0; dom.len()]).filter(|_| !done),
    }
}

pub struct AllMaps {
    dom: FinSet,
    cod: FinSet,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = FinMap;

    fn next(&mut self) -> Option<FinMap> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = self.cod.len();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            succ[k] += 1;
            if succ[k] < n {
                self.next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(FinMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            images: current,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().copied()).unwrap()
    }

    fn map(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> FinMap {
        FinMap::new(set(dom), set(cod), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn finset_is_sorted_and_rejects_duplicates() {
        let x = set(&["c", "a", "b"]);
        assert_eq!(x.labels(), ["a", "b", "c"]);
        assert_eq!(
            FinSet::new(["a", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert!(matches!(FinSet::new(["a,b"]), Err(Error::BadLabel(_))));
    }

    #[test]
    fn finmap_rejects_partial_and_foreign_assignments() {
        assert_eq!(
            FinMap::new(set(&["a", "b"]), set(&["x"]), [("a", "x")]),
            Err(Error::NotTotal("b".into()))
        );
        assert!(matches!(
            FinMap::new(set(&["a"]), set(&["x"]), [("a", "y")]),
            Err(Error::UnknownLabel { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let id = FinMap::identity(&set(&["a", "b"]));
        assert_eq!(
            classify_map(&id),
            MapClass {
                injective: true,
                surjective: true
            }
        );
        let constant = map(&["a", "b"], &["x"], &[("a", "x"), ("b", "x")]);
        assert_eq!(
            classify_map(&constant),
            MapClass {
                injective: false,
                surjective: true
            }
        );
        let f = map(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "x"), ("c", "y")],
        );
        assert_eq!(
            classify_map(&f),
            MapClass {
                injective: false,
                surjective: false
            }
        );
    }

    #[test]
    fn image_factorization_examples() {
        let id = FinMap::identity(&set(&["a"]));
        let fac = image_factorization(&id);
        assert_eq!(fac.epi, id);
        assert_eq!(fac.mono, id);
        assert_eq!(fac.mid, set(&["a"]));

        let f = map(&["e1", "e2"], &["x", "y"], &[("e1", "x"), ("e2", "x")]);
        let fac = image_factorization(&f);
        assert_eq!(fac.mid, set(&["x"]));
        assert_eq!(fac.epi, map(&["e1", "e2"], &["x"], &[("e1", "x"), ("e2", "x")]));
        assert_eq!(fac.mono, map(&["x"], &["x", "y"], &[("x", "x")]));
        assert_eq!(fac.mono.after(&fac.epi).unwrap(), f);
    }

    #[test]
    fn kernel_pair_examples() {
        let inj = map(&["a", "b"], &["x", "y"], &[("a", "x"), ("b", "y")]);
        let kp = kernel_pair(&inj);
        assert_eq!(kp.pairs, set(&["(a,a)", "(b,b)"]));
        let fac = kernel_pair_coequalizer(&inj);
        assert_eq!(fac.epi, FinMap::identity(&set(&["a", "b"])));

        let constant = map(&["a", "b"], &["x"], &[("a", "x"), ("b", "x")]);
        let kp = kernel_pair(&constant);
        assert_eq!(kp.pairs.len(), 4);
        let fac = kernel_pair_coequalizer(&constant);
        assert_eq!(fac.mid, set(&["a"]));
        assert_eq!(fac.epi.apply("b"), Some("a"));
        assert_eq!(fac.mono.apply("a"), Some("x"));
    }

    #[test]
    fn product_and_power_set_examples() {
        let p = product_set(&set(&["a"]), &set(&["b"]));
        assert_eq!(p.carrier, set(&["(a,b)"]));
        assert!(product_set(&FinSet::empty(), &set(&["b"])).carrier.is_empty());

        assert_eq!(power_set(&FinSet::empty()).unwrap(), set(&["{}"]));
        assert_eq!(power_set(&set(&["a"])).unwrap(), set(&["{}", "{a}"]));
        let big = FinSet::new((0..11).map(|i| format!("v{i}"))).unwrap();
        assert!(matches!(power_set(&big), Err(Error::SizeLimit { .. })));
        assert_eq!(power_set_bounded(&big, 11).unwrap().len(), 2048);
    }

    #[test]
    fn preimage_examples() {
        let id = FinMap::identity(&set(&["a", "b"]));
        let pre = preimage_map(&id).unwrap();
        assert_eq!(pre, FinMap::identity(&power_set(&set(&["a", "b"])).unwrap()));

        let constant = map(&["a", "b"], &["x"], &[("a", "x"), ("b", "x")]);
        let pre = preimage_map(&constant).unwrap();
        assert_eq!(pre.apply("{x}"), Some("{a,b}"));
        assert_eq!(pre.apply("{}"), Some("{}"));
    }

    #[test]
    fn all_maps_counts() {
        let x = set(&["a", "b"]);
        let y = set(&["x", "y", "z"]);
        assert_eq!(all_maps(&x, &y).count(), 9);
        assert_eq!(all_maps(&FinSet::empty(), &y).count(), 1);
        assert_eq!(all_maps(&x, &FinSet::empty()).count(), 0);
        assert_eq!(all_maps(&FinSet::empty(), &FinSet::empty()).count(), 1);
        assert_eq!(count_maps(&x, &y), 9);
    }

    #[test]
    fn quotient_uses_least_representative() {
        let x = set(&["a", "b", "c", "d"]);
        let q = quotient(&x, [("d", "b"), ("c", "d")]).unwrap();
        assert_eq!(q.cod(), &set(&["a", "b"]));
        assert_eq!(q.apply("c"), Some("b"));
        assert_eq!(q.apply("a"), Some("a"));
    }
}
