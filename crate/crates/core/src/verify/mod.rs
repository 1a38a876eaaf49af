//! Exhaustive homomorphism enumeration and enumeration-based checks of
//! universal properties, adjunctions and (non-)preservation claims.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;

pub mod cats;
pub mod gen;
pub mod suites;

pub use cats::*;

/// Default cap on raw candidate assignments before structure filtering.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one law check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
}

impl LawReport {
    pub fn pass(law: &str, instance: impl Into<String>) -> Self {
        LawReport {
            law: law.to_string(),
            instance: instance.into(),
            verdict: Verdict::Pass,
            witness: None,
            counts: BTreeMap::new(),
        }
    }

    pub fn fail(law: &str, instance: impl Into<String>, witness: impl Into<String>) -> Self {
        LawReport {
            law: law.to_string(),
            instance: instance.into(),
            verdict: Verdict::Fail,
            witness: Some(witness.into()),
            counts: BTreeMap::new(),
        }
    }

    pub fn from_check(law: &str, instance: impl Into<String>, outcome: std::result::Result<(), String>) -> Self {
        match outcome {
            Ok(()) => LawReport::pass(law, instance),
            Err(w) => LawReport::fail(law, instance, w),
        }
    }

    pub fn with_count(mut self, key: &str, n: usize) -> Self {
        self.counts.insert(key.to_string(), n as u64);
        self
    }

    /// Keeps the verdict but attaches a witness, e.g. a counterexample that
    /// a passing search was required to find.
    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.passed() { "pass" } else { "fail" };
        write!(f, "{} [{}] {}", self.law, v, self.instance)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// A concrete category whose hom-sets can be listed.
pub trait Category {
    type Obj: Clone + fmt::Display;
    type Mor: Clone + PartialEq;

    /// Every morphism `x → y`, in a deterministic order. Fails with
    /// [`crate::Error::Budget`] when the raw candidate space is too large.
    fn homs(&self, x: &Self::Obj, y: &Self::Obj, budget: u64) -> Result<Vec<Self::Mor>>;

    /// `second ∘ first`.
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor>;

    fn identity(&self, x: &Self::Obj) -> Self::Mor;

    fn is_hom(&self, m: &Self::Mor, x: &Self::Obj, y: &Self::Obj) -> bool;

    fn describe(&self, m: &Self::Mor) -> String;
}

/// The reflection law at one pair: every `m: x → y` (with `y` in the
/// subcategory) equals `h ∘ unit` for exactly one `h: rx → y`, and
/// `factor(m)` returns that `h`.
pub fn reflection_law<C, F>(
    cat: &C,
    law: &str,
    (x, rx, unit): (&C::Obj, &C::Obj, &C::Mor),
    y: &C::Obj,
    factor: F,
    budget: u64,
) -> Result<LawReport>
where
    C: Category,
    F: Fn(&C::Mor) -> Result<C::Mor>,
{
    let instance = format!("x = {x}; y = {y}");
    let down = cat.homs(x, y, budget)?;
    let up = cat.homs(rx, y, budget)?;
    let counted = |r: LawReport| r.with_count("hom(x,y)", down.len()).with_count("hom(rx,y)", up.len());
    for m in &down {
        let mut hits = Vec::new();
        for h in &up {
            if cat.compose(h, unit)? == *m {
                hits.push(h);
            }
        }
        if hits.len() != 1 {
            return Ok(counted(LawReport::fail(
                law,
                instance,
                format!("m = {} has {} factorizations", cat.describe(m), hits.len()),
            )));
        }
        match factor(m) {
            Ok(h) if h == *hits[0] => {}
            Ok(h) => {
                return Ok(counted(LawReport::fail(
                    law,
                    instance,
                    format!(
                        "m = {}: constructed {} but the unique factorization is {}",
                        cat.describe(m),
                        cat.describe(&h),
                        cat.describe(hits[0])
                    ),
                )))
            }
            Err(e) => {
                return Ok(counted(LawReport::fail(
                    law,
                    instance,
                    format!("m = {}: factorization failed: {e}", cat.describe(m)),
                )))
            }
        }
    }
    if down.len() != up.len() {
        return Ok(counted(LawReport::fail(
            law,
            instance,
            format!("hom-set sizes differ: {} vs {}", down.len(), up.len()),
        )));
    }
    Ok(counted(LawReport::pass(law, instance)))
}

/// The coreflection law at one pair: every `m: y → x` (with `y` in the
/// subcategory) equals `counit ∘ h` for exactly one `h: y → cx`, and
/// `factor(m)` returns that `h`.
pub fn coreflection_law<C, F>(
    cat: &C,
    law: &str,
    y: &C::Obj,
    (x, cx, counit): (&C::Obj, &C::Obj, &C::Mor),
    factor: F,
    budget: u64,
) -> Result<LawReport>
where
    C: Category,
    F: Fn(&C::Mor) -> Result<C::Mor>,
{
    let instance = format!("y = {y}; x = {x}");
    let down = cat.homs(y, x, budget)?;
    let up = cat.homs(y, cx, budget)?;
    let counted = |r: LawReport| r.with_count("hom(y,x)", down.len()).with_count("hom(y,cx)", up.len());
    for m in &down {
        let mut hits = Vec::new();
        for h in &up {
            if cat.compose(counit, h)? == *m {
                hits.push(h);
            }
        }
        if hits.len() != 1 {
            return Ok(counted(LawReport::fail(
                law,
                instance,
                format!("m = {} has {} factorizations", cat.describe(m), hits.len()),
            )));
        }
        match factor(m) {
            Ok(h) if h == *hits[0] => {}
            Ok(h) => {
                return Ok(counted(LawReport::fail(
                    law,
                    instance,
                    format!(
                        "m = {}: constructed {} but the unique factorization is {}",
                        cat.describe(m),
                        cat.describe(&h),
                        cat.describe(hits[0])
                    ),
                )))
            }
            Err(e) => {
                return Ok(counted(LawReport::fail(
                    law,
                    instance,
                    format!("m = {}: factorization failed: {e}", cat.describe(m)),
                )))
            }
        }
    }
    if down.len() != up.len() {
        return Ok(counted(LawReport::fail(
            law,
            instance,
            format!("hom-set sizes differ: {} vs {}", down.len(), up.len()),
        )));
    }
    Ok(counted(LawReport::pass(law, instance)))
}

/// Triangle identities for a reflection `L ⊣ N`, where `reflect` gives the
/// reflection and unit of an object and `factor(x, m, y)` the transpose of
/// `m: x → y` for `y` in the subcategory.
///
/// Checks `ε_{Lx} ∘ L(η_x) = id_{Lx}` for `x`, and, when `x` lies in the
/// subcategory, `ε_x ∘ η_x = id_x`.
pub fn reflection_triangles<C, R, F>(
    cat: &C,
    law: &str,
    x: &C::Obj,
    in_sub: bool,
    reflect: R,
    factor: F,
) -> Result<LawReport>
where
    C: Category,
    R: Fn(&C::Obj) -> Result<(C::Obj, C::Mor)>,
    F: Fn(&C::Obj, &C::Mor, &C::Obj) -> Result<C::Mor>,
{
    let instance = x.to_string();
    let (lx, eta) = reflect(x)?;
    let (llx, eta_l) = reflect(&lx)?;
    let l_eta = factor(x, &cat.compose(&eta_l, &eta)?, &llx)?;
    let eps_l = factor(&lx, &cat.identity(&lx), &lx)?;
    if cat.compose(&eps_l, &l_eta)? != cat.identity(&lx) {
        return Ok(LawReport::fail(
            law,
            instance,
            format!("ε∘L(η) = {} is not the identity", cat.describe(&cat.compose(&eps_l, &l_eta)?)),
        ));
    }
    if in_sub {
        let eps = factor(x, &cat.identity(x), x)?;
        let round = cat.compose(&eps, &eta)?;
        if round != cat.identity(x) {
            return Ok(LawReport::fail(
                law,
                instance,
                format!("N(ε)∘η = {} is not the identity", cat.describe(&round)),
            ));
        }
    }
    Ok(LawReport::pass(law, instance))
}

/// Dual of [`reflection_triangles`] for a coreflection `N ⊣ R`:
/// `coreflect` gives the coreflection and counit, `factor(y, m, x)` the
/// transpose of `m: y → x` for `y` in the subcategory.
pub fn coreflection_triangles<C, R, F>(
    cat: &C,
    law: &str,
    x: &C::Obj,
    in_sub: bool,
    coreflect: R,
    factor: F,
) -> Result<LawReport>
where
    C: Category,
    R: Fn(&C::Obj) -> Result<(C::Obj, C::Mor)>,
    F: Fn(&C::Obj, &C::Mor, &C::Obj) -> Result<C::Mor>,
{
    let instance = x.to_string();
    let (cx, eps) = coreflect(x)?;
    let (ccx, eps_c) = coreflect(&cx)?;
    let r_eps = factor(&ccx, &cat.compose(&eps, &eps_c)?, x)?;
    let eta_c = factor(&cx, &cat.identity(&cx), &cx)?;
    if cat.compose(&r_eps, &eta_c)? != cat.identity(&cx) {
        return Ok(LawReport::fail(
            law,
            instance,
            format!("R(ε)∘η = {} is not the identity", cat.describe(&cat.compose(&r_eps, &eta_c)?)),
        ));
    }
    if in_sub {
        let eta = factor(x, &cat.identity(x), x)?;
        let round = cat.compose(&eps, &eta)?;
        if round != cat.identity(x) {
            return Ok(LawReport::fail(
                law,
                instance,
                format!("ε∘η = {} is not the identity", cat.describe(&round)),
            ));
        }
    }
    Ok(LawReport::pass(law, instance))
}

/// Binary product law at one test object `t`: pairing
/// `Hom(t, p) → Hom(t, x) × Hom(t, y)` (by composing with the projections)
/// is a bijection.
pub fn product_law<C: Category>(
    cat: &C,
    law: &str,
    (x, y): (&C::Obj, &C::Obj),
    (p, p1, p2): (&C::Obj, &C::Mor, &C::Mor),
    t: &C::Obj,
    budget: u64,
) -> Result<LawReport> {
    let instance = format!("x = {x}; y = {y}; t = {t}");
    let into_p = cat.homs(t, p, budget)?;
    let into_x = cat.homs(t, x, budget)?;
    let into_y = cat.homs(t, y, budget)?;
    let mut hit = vec![vec![0usize; into_y.len()]; into_x.len()];
    for h in &into_p {
        let a = cat.compose(p1, h)?;
        let b = cat.compose(p2, h)?;
        let i = into_x.iter().position(|m| *m == a);
        let j = into_y.iter().position(|m| *m == b);
        match (i, j) {
            (Some(i), Some(j)) => hit[i][j] += 1,
            _ => {
                return Ok(LawReport::fail(
                    law,
                    instance,
                    format!("{} does not compose to morphisms into the factors", cat.describe(h)),
                ))
            }
        }
    }
    let report = |r: LawReport| {
        r.with_count("hom(t,p)", into_p.len())
            .with_count("hom(t,x)", into_x.len())
            .with_count("hom(t,y)", into_y.len())
    };
    for (i, row) in hit.iter().enumerate() {
        for (j, &n) in row.iter().enumerate() {
            if n != 1 {
                return Ok(report(LawReport::fail(
                    law,
                    instance,
                    format!(
                        "pair ({}, {}) has {n} mediating morphisms",
                        cat.describe(&into_x[i]),
                        cat.describe(&into_y[j])
                    ),
                )));
            }
        }
    }
    Ok(report(LawReport::pass(law, instance)))
}

/// Equalizer law at one test object `t`: composing with the inclusion is a
/// bijection from `Hom(t, eq)` onto the morphisms `t → x` equalizing `f, g`.
pub fn equalizer_law<C: Category>(
    cat: &C,
    law: &str,
    (x, f, g): (&C::Obj, &C::Mor, &C::Mor),
    (eq, incl): (&C::Obj, &C::Mor),
    t: &C::Obj,
    budget: u64,
) -> Result<LawReport> {
    let instance = format!("x = {x}; t = {t}");
    let into_eq = cat.homs(t, eq, budget)?;
    let into_x = cat.homs(t, x, budget)?;
    let mut equalizing = Vec::new();
    for m in &into_x {
        if cat.compose(f, m)? == cat.compose(g, m)? {
            equalizing.push(m);
        }
    }
    for m in &equalizing {
        let mut n = 0;
        for h in &into_eq {
            if cat.compose(incl, h)? == **m {
                n += 1;
            }
        }
        if n != 1 {
            return Ok(LawReport::fail(
                law,
                instance,
                format!("{} has {n} mediating morphisms", cat.describe(m)),
            ));
        }
    }
    if equalizing.len() != into_eq.len() {
        return Ok(LawReport::fail(
            law,
            instance,
            format!("{} equalizing maps but {} maps into the equalizer", equalizing.len(), into_eq.len()),
        ));
    }
    Ok(LawReport::pass(law, instance).with_count("hom(t,eq)", into_eq.len()))
}

/// Coproduct law at one test object `t`, dual of [`product_law`].
pub fn coproduct_law<C: Category>(
    cat: &C,
    law: &str,
    (x, y): (&C::Obj, &C::Obj),
    (s, i1, i2): (&C::Obj, &C::Mor, &C::Mor),
    t: &C::Obj,
    budget: u64,
) -> Result<LawReport> {
    let instance = format!("x = {x}; y = {y}; t = {t}");
    let from_s = cat.homs(s, t, budget)?;
    let from_x = cat.homs(x, t, budget)?;
    let from_y = cat.homs(y, t, budget)?;
    let mut hit = vec![vec![0usize; from_y.len()]; from_x.len()];
    for h in &from_s {
        let a = cat.compose(h, i1)?;
        let b = cat.compose(h, i2)?;
        match (
            from_x.iter().position(|m| *m == a),
            from_y.iter().position(|m| *m == b),
        ) {
            (Some(i), Some(j)) => hit[i][j] += 1,
            _ => return Ok(LawReport::fail(law, instance, format!("{} restricts badly", cat.describe(h)))),
        }
    }
    if hit.iter().flatten().any(|&n| n != 1) {
        return Ok(LawReport::fail(law, instance, "copairing is not a bijection"));
    }
    Ok(LawReport::pass(law, instance).with_count("hom(s,t)", from_s.len()))
}

/// Coequalizer law at one test object `t`, dual of [`equalizer_law`].
pub fn coequalizer_law<C: Category>(
    cat: &C,
    law: &str,
    (y, f, g): (&C::Obj, &C::Mor, &C::Mor),
    (q, proj): (&C::Obj, &C::Mor),
    t: &C::Obj,
    budget: u64,
) -> Result<LawReport> {
    let instance = format!("y = {y}; t = {t}");
    let from_q = cat.homs(q, t, budget)?;
    let from_y = cat.homs(y, t, budget)?;
    let mut coequalizing = Vec::new();
    for m in &from_y {
        if cat.compose(m, f)? == cat.compose(m, g)? {
            coequalizing.push(m);
        }
    }
    for m in &coequalizing {
        let mut n = 0;
        for h in &from_q {
            if cat.compose(h, proj)? == **m {
                n += 1;
            }
        }
        if n != 1 {
            return Ok(LawReport::fail(
                law,
                instance,
                format!("{} has {n} mediating morphisms", cat.describe(m)),
            ));
        }
    }
    if coequalizing.len() != from_q.len() {
        return Ok(LawReport::fail(law, instance, "coequalizing maps and maps out of the quotient differ in number"));
    }
    Ok(LawReport::pass(law, instance).with_count("hom(q,t)", from_q.len()))
}
