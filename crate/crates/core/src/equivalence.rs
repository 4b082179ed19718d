//! Comparison maps `P: C → TL(C)`, `F: TL(C) → C`, `phi: X → LT(X)`,
//! `psi: LT(X) → X` and the round-trip checks built on them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catgroup::{validate_catgroup, validate_functor, CatGroup, CatGroupFunctor, Limits};
use crate::cgroup::CMorphism;
use crate::corpus::Corpus;
use crate::crossmod::{
    cssc_report, special_lift, validate_cm_morphism, validate_crossed_module, CrossedModule,
    CrossedModuleMorphism,
};
use crate::error::{Error, Result};
use crate::functors::{l0, l1, t0, t1, GArrow, LModule, TCatGroup};
use crate::report::{first_failure, Check, ValidationReport};

/// `L(c)` and `T(L(c))`.
#[derive(Debug, Clone)]
pub struct TlImage {
    pub l: LModule,
    pub t: TCatGroup,
}

pub fn tl_image(c: &CatGroup, limits: &Limits) -> Result<TlImage> {
    let l = l0(c)?;
    let t = t0(&l.module, limits)?;
    Ok(TlImage { l, t })
}

/// `T(x)` and `L(T(x))`.
#[derive(Debug, Clone)]
pub struct LtImage {
    pub t: TCatGroup,
    pub l: LModule,
}

pub fn lt_image(x: &CrossedModule, limits: &Limits) -> Result<LtImage> {
    let t = t0(x, limits)?;
    let l = l0(&t.catgroup)?;
    Ok(LtImage { t, l })
}

fn missing(what: &str, at: &str) -> Error {
    Error::Precondition(format!("{what} is undefined at {at}"))
}

/// `P1(f) = (dom f, cod f, (f - 1_{dom f}) ∘ δ⁻¹)`.
pub fn build_p(c: &CatGroup, tl: &TlImage) -> Result<CatGroupFunctor> {
    let mut f1 = Vec::with_capacity(c.n_arrows());
    for f in 0..c.n_arrows() {
        let x = c.dom(f);
        let di = c
            .inverse(c.delta(x))
            .ok_or_else(|| missing("δ⁻¹", c.object_name(x)))?;
        let a = c
            .comp(c.aadd(f, c.aneg(c.id(x))), di)
            .ok_or_else(|| missing("P", c.arrow_name(f)))?;
        let el =
            tl.l.element_of(a)
                .ok_or_else(|| missing("P", c.arrow_name(f)))?;
        let g = GArrow::new(x, c.cod(f), tl.l.module.ws_rep(el));
        f1.push(
            tl.t.index_of(&g)
                .ok_or_else(|| missing("P", c.arrow_name(f)))?,
        );
    }
    Ok(CatGroupFunctor {
        f0: (0..c.n_objects()).collect(),
        f1,
    })
}

/// `F1(d, e, c) = σ ∘ (c + 1_d) ∘ λ_d⁻¹` with `σ: ∂c + d → e` the chosen
/// special isomorphism.
pub fn build_f(c: &CatGroup, tl: &TlImage) -> Result<CatGroupFunctor> {
    let mut f1 = Vec::with_capacity(tl.t.arrows.len());
    for (k, g) in tl.t.arrows.iter().enumerate() {
        let at = tl.t.catgroup.arrow_name(k);
        let a = tl.l.members[g.c];
        let mid = c.oadd(c.cod(a), g.dom);
        let s = c
            .chosen_special(mid, g.cod)
            .ok_or_else(|| missing("chosen special", at))?;
        let li = c
            .inverse(c.lambda(g.dom))
            .ok_or_else(|| missing("λ⁻¹", at))?;
        let h = c
            .chain(&[li, c.aadd(a, c.id(g.dom)), s])
            .ok_or_else(|| missing("F", at))?;
        f1.push(h);
    }
    Ok(CatGroupFunctor {
        f0: (0..c.n_objects()).collect(),
        f1,
    })
}

/// `phi1(c) = (0, ∂c, c)` in `Star₀` of `T(x)`.
pub fn build_phi(x: &CrossedModule, lt: &LtImage) -> Result<CrossedModuleMorphism> {
    let m = x.source();
    let z = x.target().zero();
    let mut f = Vec::with_capacity(m.len());
    for c in 0..m.len() {
        let g = GArrow::new(z, x.d(c), x.ws_rep(c));
        let a = lt.t.index_of(&g).ok_or_else(|| missing("phi", m.name(c)))?;
        f.push(
            lt.l.element_of(a)
                .ok_or_else(|| missing("phi", m.name(c)))?,
        );
    }
    Ok(CrossedModuleMorphism {
        f: CMorphism::new(f),
        g: CMorphism::identity(x.target().len()),
    })
}

/// `psi1(0, t, c)` is the lift of `t` weakly special congruent to `c`.
pub fn build_psi(x: &CrossedModule, lt: &LtImage) -> Result<CrossedModuleMorphism> {
    let f =
        lt.l.members
            .iter()
            .map(|&a| {
                let g = lt.t.garrow(a);
                special_lift(x, g.c, g.cod)
            })
            .collect::<Result<Vec<_>>>()?;
    Ok(CrossedModuleMorphism {
        f: CMorphism::new(f),
        g: CMorphism::identity(x.target().len()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Tl,
    Lt,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Tl => "TL",
            Direction::Lt => "LT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub instance: String,
    pub direction: Direction,
    pub report: ValidationReport,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for RoundTripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.direction, self.instance)?;
        for c in &self.report.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

fn fail_on_err<T>(r: &mut ValidationReport, name: &str, v: Result<T>) -> Option<T> {
    match v {
        Ok(v) => Some(v),
        Err(e) => {
            r.push(Check::fail(name, format!("{e}")));
            None
        }
    }
}

fn merge(r: &mut ValidationReport, prefix: &str, sub: ValidationReport) {
    for c in sub.checks {
        r.push(Check {
            name: format!("{prefix}:{}", c.name),
            ..c
        });
    }
}

/// First arrow where two functors with the same source disagree.
fn functor_diff(
    src: &CatGroup,
    a: &CatGroupFunctor,
    b: &CatGroupFunctor,
    tgt: &CatGroup,
) -> core::result::Result<(), String> {
    first_failure(0..src.n_objects(), |x| {
        (a.f0[x] != b.f0[x]).then(|| {
            format!(
                "x={}: {} vs {}",
                src.object_name(x),
                tgt.object_name(a.f0[x]),
                tgt.object_name(b.f0[x])
            )
        })
    })?;
    first_failure(0..src.n_arrows(), |f| {
        (a.f1[f] != b.f1[f]).then(|| {
            format!(
                "f={}: {} vs {}",
                src.arrow_name(f),
                tgt.arrow_name(a.f1[f]),
                tgt.arrow_name(b.f1[f])
            )
        })
    })
}

fn morphism_diff(
    x: &CrossedModule,
    a: &CrossedModuleMorphism,
    b: &CrossedModuleMorphism,
    y: &CrossedModule,
) -> core::result::Result<(), String> {
    let (n, m) = (x.target(), x.source());
    first_failure(0..n.len(), |r| {
        (a.g.apply(r) != b.g.apply(r)).then(|| {
            format!(
                "r={}: {} vs {}",
                n.name(r),
                y.target().name(a.g.apply(r)),
                y.target().name(b.g.apply(r))
            )
        })
    })?;
    first_failure(0..m.len(), |c| {
        (a.f.apply(c) != b.f.apply(c)).then(|| {
            format!(
                "c={}: {} vs {}",
                m.name(c),
                y.source().name(a.f.apply(c)),
                y.source().name(b.f.apply(c))
            )
        })
    })
}

/// `F ∘ P = 1` and `P ∘ F = 1`, exactly.
pub fn verify_tl(name: &str, c: &CatGroup, limits: &Limits) -> RoundTripReport {
    let mut r = ValidationReport::new(name);
    let cat_ok = validate_catgroup(c);
    if !cat_ok.passed() {
        merge(&mut r, "catgroup", cat_ok);
        return RoundTripReport {
            instance: name.into(),
            direction: Direction::Tl,
            report: r,
        };
    }
    let body = |r: &mut ValidationReport| -> Option<()> {
        let l = fail_on_err(r, "L", l0(c))?;
        merge(r, "L", cssc_report(&l.module));
        let t = fail_on_err(r, "T", t0(&l.module, limits))?;
        let tl = TlImage { l, t };
        let tc = &tl.t.catgroup;
        let p = fail_on_err(r, "P", build_p(c, &tl))?;
        let f = fail_on_err(r, "F", build_f(c, &tl))?;
        merge(
            r,
            "P",
            validate_functor(c, tc, &p).expect("P tables have the right shape"),
        );
        merge(
            r,
            "F",
            validate_functor(tc, c, &f).expect("F tables have the right shape"),
        );
        r.record(
            "FP=1",
            functor_diff(c, &p.then(&f), &CatGroupFunctor::identity(c), c),
        );
        r.record(
            "PF=1",
            functor_diff(tc, &f.then(&p), &CatGroupFunctor::identity(tc), tc),
        );
        Some(())
    };
    body(&mut r);
    RoundTripReport {
        instance: name.into(),
        direction: Direction::Tl,
        report: r,
    }
}

/// `psi ∘ phi = 1` and `phi ∘ psi = 1`, exactly.
pub fn verify_lt(name: &str, x: &CrossedModule, limits: &Limits) -> RoundTripReport {
    let mut r = ValidationReport::new(name);
    let body = |r: &mut ValidationReport| -> Option<()> {
        let lt = fail_on_err(r, "T", lt_image(x, limits))?;
        let y = &lt.l.module;
        let phi = fail_on_err(r, "phi", build_phi(x, &lt))?;
        let psi = fail_on_err(r, "psi", build_psi(x, &lt))?;
        merge(
            r,
            "phi",
            validate_cm_morphism(x, y, &phi).expect("phi tables have the right shape"),
        );
        merge(
            r,
            "psi",
            validate_cm_morphism(y, x, &psi).expect("psi tables have the right shape"),
        );
        r.record(
            "psi.phi=1",
            morphism_diff(x, &phi.then(&psi), &CrossedModuleMorphism::identity(x), x),
        );
        r.record(
            "phi.psi=1",
            morphism_diff(y, &psi.then(&phi), &CrossedModuleMorphism::identity(y), y),
        );
        Some(())
    };
    body(&mut r);
    RoundTripReport {
        instance: name.into(),
        direction: Direction::Lt,
        report: r,
    }
}

/// `P' ∘ t = TL(t) ∘ P` for `t: c → c2`.
pub fn verify_tl_naturality(
    c: &CatGroup,
    c2: &CatGroup,
    t: &CatGroupFunctor,
    limits: &Limits,
) -> Result<ValidationReport> {
    let (a, b) = (tl_image(c, limits)?, tl_image(c2, limits)?);
    let (p, p2) = (build_p(c, &a)?, build_p(c2, &b)?);
    let lt = l1(&a.l, &b.l, t)?;
    let tlt = t1(&a.t, &b.t, &lt)?;
    let mut r = ValidationReport::new("TL naturality");
    r.record(
        "P-square",
        functor_diff(c, &t.then(&p2), &p.then(&tlt), &b.t.catgroup),
    );
    Ok(r)
}

/// `phi' ∘ m = LT(m) ∘ phi` for `m: x → y`.
pub fn verify_lt_naturality(
    x: &CrossedModule,
    y: &CrossedModule,
    m: &CrossedModuleMorphism,
    limits: &Limits,
) -> Result<ValidationReport> {
    let (a, b) = (lt_image(x, limits)?, lt_image(y, limits)?);
    let (phi, phi2) = (build_phi(x, &a)?, build_phi(y, &b)?);
    let tm = t1(&a.t, &b.t, m)?;
    let ltm = l1(&a.l, &b.l, &tm)?;
    let mut r = ValidationReport::new("LT naturality");
    r.record(
        "phi-square",
        morphism_diff(x, &m.then(&phi2), &phi.then(&ltm), &b.l.module),
    );
    Ok(r)
}

/// `L` preserves the identity of `c` and the composite `s ∘ t`.
pub fn check_l_functoriality(
    cs: [&CatGroup; 3],
    t: &CatGroupFunctor,
    s: &CatGroupFunctor,
) -> Result<ValidationReport> {
    let ls = [l0(cs[0])?, l0(cs[1])?, l0(cs[2])?];
    let mut r = ValidationReport::new("L functoriality");
    let id = l1(&ls[0], &ls[0], &CatGroupFunctor::identity(cs[0]))?;
    r.record(
        "L-identity",
        morphism_diff(
            &ls[0].module,
            &id,
            &CrossedModuleMorphism::identity(&ls[0].module),
            &ls[0].module,
        ),
    );
    let whole = l1(&ls[0], &ls[2], &t.then(s))?;
    let parts = l1(&ls[0], &ls[1], t)?.then(&l1(&ls[1], &ls[2], s)?);
    r.record(
        "L-composition",
        morphism_diff(&ls[0].module, &whole, &parts, &ls[2].module),
    );
    Ok(r)
}

/// `T` preserves the identity of `x` and the composite `n ∘ m`.
pub fn check_t_functoriality(
    xs: [&CrossedModule; 3],
    m: &CrossedModuleMorphism,
    n: &CrossedModuleMorphism,
    limits: &Limits,
) -> Result<ValidationReport> {
    let ts = [t0(xs[0], limits)?, t0(xs[1], limits)?, t0(xs[2], limits)?];
    let mut r = ValidationReport::new("T functoriality");
    let c0 = &ts[0].catgroup;
    let id = t1(&ts[0], &ts[0], &CrossedModuleMorphism::identity(xs[0]))?;
    r.record(
        "T-identity",
        functor_diff(c0, &id, &CatGroupFunctor::identity(c0), c0),
    );
    let whole = t1(&ts[0], &ts[2], &m.then(n))?;
    let parts = t1(&ts[0], &ts[1], m)?.then(&t1(&ts[1], &ts[2], n)?);
    r.record(
        "T-composition",
        functor_diff(c0, &whole, &parts, &ts[2].catgroup),
    );
    Ok(r)
}

/// Outcome for one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub name: String,
    /// Set when the instance failed validation; no further checks ran.
    pub rejected: Option<String>,
    pub reports: Vec<RoundTripReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivalenceSummary {
    pub instances: Vec<InstanceOutcome>,
    /// Naturality and functoriality checks, one report per corpus edge or
    /// composable pair.
    pub edges: Vec<(String, ValidationReport)>,
}

impl EquivalenceSummary {
    pub fn passed(&self) -> bool {
        self.instances
            .iter()
            .all(|i| i.rejected.is_none() && i.reports.iter().all(|r| r.passed()))
            && self.edges.iter().all(|(_, r)| r.passed())
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in &self.instances {
            if let Some(w) = &i.rejected {
                out.push(format!("{}: rejected: {w}", i.name));
            }
            for rt in &i.reports {
                for c in rt.report.failures() {
                    out.push(format!("{} {}: {c}", rt.direction, i.name));
                }
            }
        }
        for (name, r) in &self.edges {
            for c in r.failures() {
                out.push(format!("{name}: {c}"));
            }
        }
        out
    }
}

impl fmt::Display for EquivalenceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.instances {
            match &i.rejected {
                Some(w) => writeln!(f, "{}: rejected ({w})", i.name)?,
                None => {
                    for rt in &i.reports {
                        writeln!(
                            f,
                            "{}: {} {}",
                            i.name,
                            rt.direction,
                            if rt.passed() { "pass" } else { "FAIL" }
                        )?;
                    }
                }
            }
        }
        for (name, r) in &self.edges {
            writeln!(f, "{name}: {}", if r.passed() { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}

fn edge_report(name: String, r: Result<ValidationReport>) -> (String, ValidationReport) {
    match r {
        Ok(r) => (name, r),
        Err(e) => {
            let mut v = ValidationReport::new(name.clone());
            v.push(Check::fail("build", format!("{e}")));
            (name, v)
        }
    }
}

/// Round trips for one categorical group: `TL` on it and `LT` on its
/// `L`-image. Rejected up front if it fails validation.
pub fn verify_catgroup_instance(name: &str, c: &CatGroup, limits: &Limits) -> InstanceOutcome {
    let v = validate_catgroup(c);
    if let Some(fail) = v.failures().next() {
        return InstanceOutcome {
            name: name.into(),
            rejected: Some(format!("{fail}")),
            reports: Vec::new(),
        };
    }
    let mut reports = alloc::vec![verify_tl(name, c, limits)];
    if let Ok(l) = l0(c) {
        reports.push(verify_lt(&format!("L({name})"), &l.module, limits));
    }
    InstanceOutcome {
        name: name.into(),
        rejected: None,
        reports,
    }
}

/// `LT` round trip for one crossed module, rejected if it is malformed.
pub fn verify_module_instance(name: &str, x: &CrossedModule, limits: &Limits) -> InstanceOutcome {
    let v = validate_crossed_module(x);
    if let Some(fail) = v.failures().next() {
        return InstanceOutcome {
            name: name.into(),
            rejected: Some(format!("{fail}")),
            reports: Vec::new(),
        };
    }
    InstanceOutcome {
        name: name.into(),
        rejected: None,
        reports: alloc::vec![verify_lt(name, x, limits)],
    }
}

/// Naturality squares for every edge and functoriality laws for every
/// composable pair, skipping edges that touch a name outside `valid`.
pub fn verify_edges(
    corpus: &Corpus,
    valid: &[&str],
    limits: &Limits,
) -> Vec<(String, ValidationReport)> {
    let ok = |n: &String| valid.contains(&n.as_str());
    let mut out = Vec::new();
    for e in corpus
        .functors
        .iter()
        .filter(|e| ok(&e.source) && ok(&e.target))
    {
        let (Some(c), Some(c2)) = (corpus.catgroup(&e.source), corpus.catgroup(&e.target)) else {
            continue;
        };
        out.push(edge_report(
            format!("TL naturality {}", e.name),
            verify_tl_naturality(c, c2, &e.functor, limits),
        ));
        let lt = l0(c).and_then(|a| {
            let b = l0(c2)?;
            let m = l1(&a, &b, &e.functor)?;
            verify_lt_naturality(&a.module, &b.module, &m, limits)
        });
        out.push(edge_report(format!("LT naturality L({})", e.name), lt));
    }
    for (t, u) in corpus.composable_pairs() {
        if ![&t.source, &t.target, &u.target].into_iter().all(ok) {
            continue;
        }
        let cs = [&t.source, &t.target, &u.target]
            .map(|n| corpus.catgroup(n).expect("edge endpoints exist"));
        let name = format!("{} then {}", t.name, u.name);
        out.push(edge_report(
            format!("L functoriality {name}"),
            check_l_functoriality(cs, &t.functor, &u.functor),
        ));
        let tr = (|| {
            let ls = [l0(cs[0])?, l0(cs[1])?, l0(cs[2])?];
            let m = l1(&ls[0], &ls[1], &t.functor)?;
            let n = l1(&ls[1], &ls[2], &u.functor)?;
            check_t_functoriality(
                [&ls[0].module, &ls[1].module, &ls[2].module],
                &m,
                &n,
                limits,
            )
        })();
        out.push(edge_report(format!("T functoriality L({name})"), tr));
    }
    for e in corpus
        .morphisms
        .iter()
        .filter(|e| ok(&e.source) && ok(&e.target))
    {
        let (Some(x), Some(y)) = (corpus.module(&e.source), corpus.module(&e.target)) else {
            continue;
        };
        out.push(edge_report(
            format!("LT naturality {}", e.name),
            verify_lt_naturality(x, y, &e.morphism, limits),
        ));
    }
    for (m, n) in corpus.composable_morphism_pairs() {
        if ![&m.source, &m.target, &n.target].into_iter().all(ok) {
            continue;
        }
        let xs = [&m.source, &m.target, &n.target]
            .map(|k| corpus.module(k).expect("edge endpoints exist"));
        out.push(edge_report(
            format!("T functoriality {} then {}", m.name, n.name),
            check_t_functoriality(xs, &m.morphism, &n.morphism, limits),
        ));
    }
    out
}

/// Every round trip, naturality square and functoriality law the corpus
/// supports. Instances that fail validation are rejected up front.
pub fn verify_equivalence(corpus: &Corpus, limits: &Limits) -> EquivalenceSummary {
    let mut s = EquivalenceSummary::default();
    for (name, c) in &corpus.catgroups {
        s.instances.push(verify_catgroup_instance(name, c, limits));
    }
    for (name, x) in &corpus.modules {
        s.instances.push(verify_module_instance(name, x, limits));
    }
    let valid: Vec<&str> = s
        .instances
        .iter()
        .filter(|i| i.rejected.is_none())
        .map(|i| i.name.as_str())
        .collect();
    s.edges = verify_edges(corpus, &valid, limits);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::group::FiniteGroup;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn tl_round_trips() {
        let d = gen::gen_discrete(&FiniteGroup::cyclic(2));
        let b = gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap();
        for (n, c) in [("DZ2", &d), ("BZ2", &b)] {
            let r = verify_tl(n, c, &lim());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn p_and_f_on_bz2() {
        let b = gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap();
        let tl = tl_image(&b, &lim()).unwrap();
        let p = build_p(&b, &tl).unwrap();
        let f = build_f(&b, &tl).unwrap();
        for a in 0..2 {
            assert_eq!(*tl.t.garrow(p.f1[a]), GArrow::new(0, 0, a));
            assert_eq!(f.f1[tl.t.index_of(&GArrow::new(0, 0, a)).unwrap()], a);
        }
        assert_eq!(p.f1[b.id(0)], tl.t.catgroup.id(0));
    }

    #[test]
    fn lt_round_trips() {
        let b = gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap();
        let x = l0(&b).unwrap().module;
        let r = verify_lt("L(BZ2)", &x, &lim());
        assert!(r.passed(), "{r}");
        let lt = lt_image(&x, &lim()).unwrap();
        let phi = build_phi(&x, &lt).unwrap();
        let psi = build_psi(&x, &lt).unwrap();
        assert_eq!(psi.f.apply(phi.f.apply(1)), 1);
        let r = verify_lt("X2tot", &crate::corpus::x2tot_module(), &lim());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn naturality_on_collapse() {
        let d = gen::gen_discrete(&FiniteGroup::cyclic(2));
        let b = gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap();
        let t = CatGroupFunctor {
            f0: alloc::vec![0, 0],
            f1: alloc::vec![b.id(0), b.id(0)],
        };
        assert!(verify_tl_naturality(&d, &b, &t, &lim()).unwrap().passed());
        assert!(
            verify_tl_naturality(&b, &b, &CatGroupFunctor::identity(&b), &lim())
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn empty_corpus_summary() {
        let s = verify_equivalence(&Corpus::default(), &lim());
        assert!(s.instances.is_empty() && s.edges.is_empty());
        assert!(s.passed());
    }

    #[test]
    fn broken_instance_is_rejected() {
        let mut corpus = Corpus::default();
        let mut t = gen::skz2().into_tables();
        t.alpha[7] = t.identity[1];
        corpus
            .catgroups
            .push(("broken".into(), CatGroup::new(t).unwrap()));
        let s = verify_equivalence(&corpus, &lim());
        assert!(s.instances[0].rejected.is_some());
        assert!(s.instances[0].reports.is_empty());
    }
}
