//! One line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use cssc_core::catgroup::lemmas::{check_comp_via_add, check_ker_commute, check_neg_identity};
use cssc_core::catgroup::star::{arrows_cgroup, arrows_star_zero, objects_cgroup};
use cssc_core::catgroup::validate_catgroup;
use cssc_core::corpus::{default_corpus, x2tot, Corpus};
use cssc_core::crossmod::{is_cssc, validate_cm_morphism};
use cssc_core::equivalence::{verify_lt, verify_tl, verify_tl_naturality};
use cssc_core::functors::{l0, l1, t0, t1};
use cssc_core::gen::{gen_skeletal_cocycle, skz2};
use cssc_core::{
    CatGroup, CatGroupFunctor, CatGroupTables, CrossedModule, CrossedModuleMorphism, FiniteGroup,
    Limits,
};

type Verdict = Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

/// Corpus categorical groups that validate.
fn valid_catgroups(c: &Corpus) -> Vec<(&str, &CatGroup)> {
    c.catgroups
        .iter()
        .filter(|(_, g)| validate_catgroup(g).passed())
        .map(|(n, g)| (n.as_str(), g))
        .collect()
}

/// The corpus modules and every `L`-image.
fn all_modules(c: &Corpus) -> Vec<(String, CrossedModule)> {
    let mut out: Vec<(String, CrossedModule)> = c.modules.clone();
    for (n, g) in valid_catgroups(c) {
        if let Ok(l) = l0(g) {
            out.push((format!("L({n})"), l.module));
        }
    }
    out
}

fn cssc_modules(c: &Corpus) -> (Vec<(String, CrossedModule)>, Vec<String>) {
    let (ok, skipped): (Vec<_>, Vec<_>) = all_modules(c).into_iter().partition(|(_, x)| is_cssc(x));
    (ok, skipped.into_iter().map(|(n, _)| n).collect())
}

fn join(errs: &[String]) -> String {
    errs.join("; ")
}

fn verdict(errs: Vec<String>, ok: String) -> Verdict {
    if errs.is_empty() {
        Ok(ok)
    } else {
        Err(join(&errs))
    }
}

type Field = (
    &'static str,
    fn(&mut CatGroupTables) -> &mut Vec<usize>,
    bool,
);

const FIELDS: [Field; 12] = [
    ("dom", |t| &mut t.dom, false),
    ("cod", |t| &mut t.cod, false),
    ("identity", |t| &mut t.identity, true),
    ("object_add", |t| &mut t.obj_add, false),
    ("arrow_add", |t| &mut t.arr_add, true),
    ("alpha", |t| &mut t.alpha, true),
    ("lambda", |t| &mut t.lambda, true),
    ("rho", |t| &mut t.rho, true),
    ("neg_object", |t| &mut t.neg_obj, false),
    ("epsilon", |t| &mut t.epsilon, true),
    ("delta", |t| &mut t.delta, true),
    ("neg_arrow", |t| &mut t.neg_arr, true),
];

/// Killed with a witness: rejected on construction, or some check fails
/// and names a counterexample.
fn killed(t: CatGroupTables) -> Option<String> {
    match CatGroup::new(t) {
        Err(e) => Some(format!("{e}")),
        Ok(c) => {
            let r = validate_catgroup(&c);
            let f = r.failures().next()?;
            f.witness
                .clone()
                .filter(|w| !w.is_empty())
                .map(|w| format!("{}: {w}", f.name))
        }
    }
}

fn criterion_1(_: &Corpus) -> Verdict {
    let corpus = default_corpus();
    let mut errs = Vec::new();
    let mut mutants = 0;
    for name in ["DZ2", "BZ2", "SkZ2", "BS(Z2<Z4)"] {
        let c = corpus.catgroup(name).unwrap();
        let r = validate_catgroup(c);
        if !r.passed() {
            errs.push(format!("{name} rejected: {}", r.failures().next().unwrap()));
            continue;
        }
        let base = c.tables().clone();
        let (n0, n1) = (c.n_objects(), c.n_arrows());
        for (field, get, arrows) in &FIELDS {
            let range = if *arrows { n1 } else { n0 };
            let len = get(&mut base.clone()).len();
            for cell in 0..len {
                for v in 0..range {
                    let mut t = base.clone();
                    let slot = &mut get(&mut t)[cell];
                    if *slot == v {
                        continue;
                    }
                    *slot = v;
                    mutants += 1;
                    if killed(t).is_none() {
                        errs.push(format!("{name}: {field}[{cell}] := {v} survives"));
                    }
                }
            }
        }
        for cell in 0..n1 * n1 {
            for v in 0..n1 {
                let mut t = base.clone();
                match t.compose[cell] {
                    Some(old) if old != v => t.compose[cell] = Some(v),
                    _ => continue,
                }
                mutants += 1;
                if killed(t).is_none() {
                    errs.push(format!("{name}: compose[{cell}] := {v} survives"));
                }
            }
        }
    }
    verdict(
        errs,
        format!("4 instances valid, {mutants} single-cell mutants all rejected with witnesses"),
    )
}

fn criterion_2(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let gs = valid_catgroups(c);
    for (n, g) in &gs {
        match l0(g) {
            Err(e) => errs.push(format!("L({n}): {e}")),
            Ok(l) => {
                let ours = is_cssc(&l.module);
                let oracle = naive_cssc(&l.module);
                if ours != oracle.is_ok() {
                    errs.push(format!("L({n}): crate says {ours}, oracle {oracle:?}"));
                } else if let Err(w) = oracle {
                    errs.push(format!("L({n}) not cssc: {w}"));
                }
            }
        }
    }
    verdict(errs, format!("{} L-images cssc", gs.len()))
}

/// Parallel special isomorphisms, from the naive closure.
fn parallel_specials(c: &CatGroup) -> Option<(usize, usize)> {
    let sp: Vec<usize> = naive_special_isos(c).into_iter().collect();
    sp.iter()
        .flat_map(|&f| sp.iter().map(move |&g| (f, g)))
        .find(|&(f, g)| f != g && c.dom(f) == c.dom(g) && c.cod(f) == c.cod(g))
}

fn criterion_3(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let (xs, skipped) = cssc_modules(c);
    for (n, x) in &xs {
        match t0(x, &lim()) {
            Err(e) => errs.push(format!("T({n}): {e}")),
            Ok(t) => {
                let r = validate_catgroup(&t.catgroup);
                if let Some(f) = r.failures().next() {
                    errs.push(format!("T({n}): {f}"));
                }
                if let Some((f, g)) = parallel_specials(&t.catgroup) {
                    errs.push(format!(
                        "T({n}): parallel special isos {} and {}",
                        t.catgroup.arrow_name(f),
                        t.catgroup.arrow_name(g)
                    ));
                }
            }
        }
    }
    let note = if skipped.is_empty() {
        String::new()
    } else {
        format!("; not cssc, so out of scope: {}", skipped.join(", "))
    };
    verdict(
        errs,
        format!(
            "{} cssc modules give coherent categorical groups{note}",
            xs.len()
        ),
    )
}

fn criterion_4(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let gs = valid_catgroups(c);
    for (n, g) in &gs {
        let r = verify_tl(n, g, &lim());
        for f in r.report.failures() {
            errs.push(format!("{n}: {f}"));
        }
    }
    let mut squares = 0;
    for e in &c.functors {
        let (Some(s), Some(t)) = (c.catgroup(&e.source), c.catgroup(&e.target)) else {
            continue;
        };
        squares += 1;
        match verify_tl_naturality(s, t, &e.functor, &lim()) {
            Err(err) => errs.push(format!("square {}: {err}", e.name)),
            Ok(r) => errs.extend(r.failures().map(|f| format!("square {}: {f}", e.name))),
        }
    }
    verdict(
        errs,
        format!(
            "FP=1 and PF=1 on {} instances, {squares} naturality squares",
            gs.len()
        ),
    )
}

fn criterion_5(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let (xs, skipped) = cssc_modules(c);
    for (n, x) in &xs {
        let r = verify_lt(n, x, &lim());
        errs.extend(r.report.failures().map(|f| format!("{n}: {f}")));
    }
    let note = if skipped.is_empty() {
        String::new()
    } else {
        format!("; not cssc, so out of scope: {}", skipped.join(", "))
    };
    verdict(
        errs,
        format!("psi.phi=1 and phi.psi=1 on {} cssc modules{note}", xs.len()),
    )
}

fn compose_maps(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

fn criterion_6(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let valid: BTreeSet<&str> = valid_catgroups(c).into_iter().map(|(n, _)| n).collect();
    let pairs: Vec<_> = c
        .composable_pairs()
        .into_iter()
        .filter(|(t, u)| {
            [&t.source, &t.target, &u.target]
                .iter()
                .all(|n| valid.contains(n.as_str()))
        })
        .collect();
    if pairs.len() < 3 {
        errs.push(format!("only {} composable pairs", pairs.len()));
    }
    let mut t_pairs = 0;
    for (t, u) in &pairs {
        let cs = [&t.source, &t.target, &u.target].map(|n| c.catgroup(n).unwrap());
        let r = (|| -> cssc_core::Result<Vec<String>> {
            let mut errs = Vec::new();
            let ls = [l0(cs[0])?, l0(cs[1])?, l0(cs[2])?];
            let id = l1(&ls[0], &ls[0], &CatGroupFunctor::identity(cs[0]))?;
            if id != CrossedModuleMorphism::identity(&ls[0].module) {
                errs.push(format!("L(1_{}) is not the identity", t.source));
            }
            let comp = CatGroupFunctor {
                f0: compose_maps(&t.functor.f0, &u.functor.f0),
                f1: compose_maps(&t.functor.f1, &u.functor.f1),
            };
            let (lt, lu) = (
                l1(&ls[0], &ls[1], &t.functor)?,
                l1(&ls[1], &ls[2], &u.functor)?,
            );
            let whole = l1(&ls[0], &ls[2], &comp)?;
            if whole.f.map != compose_maps(&lt.f.map, &lu.f.map)
                || whole.g.map != compose_maps(&lt.g.map, &lu.g.map)
            {
                errs.push(format!(
                    "L({} then {}) differs from the composite",
                    t.name, u.name
                ));
            }
            if !ls.iter().all(|l| is_cssc(&l.module)) {
                return Ok(errs);
            }
            let ts = [
                t0(&ls[0].module, &lim())?,
                t0(&ls[1].module, &lim())?,
                t0(&ls[2].module, &lim())?,
            ];
            let tid = t1(
                &ts[0],
                &ts[0],
                &CrossedModuleMorphism::identity(&ls[0].module),
            )?;
            if tid != CatGroupFunctor::identity(&ts[0].catgroup) {
                errs.push(format!("T(1_L({})) is not the identity", t.source));
            }
            let mcomp = CrossedModuleMorphism {
                f: cssc_core::CMorphism::new(compose_maps(&lt.f.map, &lu.f.map)),
                g: cssc_core::CMorphism::new(compose_maps(&lt.g.map, &lu.g.map)),
            };
            let (tt, tu) = (t1(&ts[0], &ts[1], &lt)?, t1(&ts[1], &ts[2], &lu)?);
            let whole = t1(&ts[0], &ts[2], &mcomp)?;
            if whole.f1 != compose_maps(&tt.f1, &tu.f1) || whole.f0 != compose_maps(&tt.f0, &tu.f0)
            {
                errs.push(format!(
                    "T(L({} then {})) differs from the composite",
                    t.name, u.name
                ));
            }
            if !validate_cm_morphism(&ls[0].module, &ls[2].module, &lt.then(&lu))
                .map(|r| r.passed())
                .unwrap_or(false)
            {
                errs.push(format!(
                    "composite L-morphism for {} then {} is invalid",
                    t.name, u.name
                ));
            }
            Ok(errs)
        })();
        match r {
            Ok(e) => errs.extend(e),
            Err(e) => errs.push(format!("{} then {}: {e}", t.name, u.name)),
        }
        t_pairs += 1;
    }
    verdict(
        errs,
        format!(
            "identities and composites preserved on {} composable pairs",
            t_pairs
        ),
    )
}

fn criterion_7(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let gs = valid_catgroups(c);
    for (n, g) in &gs {
        for r in [
            check_comp_via_add(g),
            check_ker_commute(g),
            check_neg_identity(g),
        ] {
            errs.extend(r.failures().map(|f| format!("{n}: {f}")));
        }
        // independent recheck of the composition lemma against the naive closure
        let sp = naive_special_isos(g);
        for f in 0..g.n_arrows() {
            for h in 0..g.n_arrows() {
                if let Some(fh) = g.comp(f, h) {
                    let rhs = g.aadd(g.aadd(f, g.aneg(g.id(g.dom(f)))), h);
                    if !naive_weak_iso(g, &sp, fh, rhs) {
                        errs.push(format!(
                            "{n}: oracle rejects comp-via-add at ({}, {})",
                            g.arrow_name(f),
                            g.arrow_name(h)
                        ));
                    }
                }
            }
        }
    }
    verdict(errs, format!("lemmas hold on {} instances", gs.len()))
}

fn criterion_8(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let (xs, _) = cssc_modules(c);
    let mut arrows = 0;
    let mut checked = 0;
    for (n, x) in &xs {
        let t = match t0(x, &lim()) {
            Ok(t) => t,
            Err(e) => {
                errs.push(format!("T({n}): {e}"));
                continue;
            }
        };
        if t.arrows.len() > 200 {
            continue;
        }
        checked += 1;
        arrows += t.arrows.len();
        errs.extend(oracle_ops(n, &t));
    }
    verdict(
        errs,
        format!("{checked} T-images ({arrows} arrows) agree with representative-based operations"),
    )
}

fn criterion_9(c: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let mut groups = vec![("X2tot".to_string(), x2tot())];
    let mut cats: Vec<(String, CatGroup)> = Vec::new();
    for (n, g) in &c.catgroups {
        cats.push((n.clone(), g.clone()));
        if let Ok(o) = objects_cgroup(g) {
            groups.push((format!("{n} objects"), o));
        }
        if let Ok(a) = arrows_cgroup(g) {
            groups.push((format!("{n} arrows"), a));
        }
        if let Ok(s) = arrows_star_zero(g) {
            groups.push((format!("{n} Star0"), s.group));
        }
    }
    for (n, x) in cssc_modules(c).0 {
        if let Ok(t) = t0(&x, &lim()) {
            cats.push((format!("T({n})"), t.catgroup));
        }
    }
    for (n, g) in &groups {
        let naive = naive_special_pairs(g);
        for a in 0..g.len() {
            for b in 0..g.len() {
                if g.special_pair(a, b) != naive.contains(&(a, b)) {
                    errs.push(format!(
                        "{n}: special closure disagrees at ({}, {})",
                        g.name(a),
                        g.name(b)
                    ));
                }
            }
        }
    }
    for (n, g) in &cats {
        let naive = naive_special_isos(g);
        let ours: BTreeSet<usize> = g.special().sorted().into_iter().collect();
        if ours != naive {
            errs.push(format!(
                "{n}: special isos {:?} vs oracle {:?}",
                ours, naive
            ));
        }
    }
    verdict(
        errs,
        format!(
            "{} c-groups and {} categorical groups agree with the naive fixpoint",
            groups.len(),
            cats.len()
        ),
    )
}

fn criterion_10(_: &Corpus) -> Verdict {
    let mut errs = Vec::new();
    let mut seen = 0;
    for (gn, an) in [(2usize, 2usize), (2, 4), (3, 2)] {
        let (g, a) = (FiniteGroup::cyclic(gn), FiniteGroup::cyclic(an));
        let free: Vec<usize> = (0..gn * gn * gn)
            .filter(|&k| k / (gn * gn) != 0 && (k / gn) % gn != 0 && k % gn != 0)
            .collect();
        for code in 0..an.pow(free.len() as u32) {
            let mut omega = vec![0; gn * gn * gn];
            let mut k = code;
            for &cell in &free {
                omega[cell] = k % an;
                k /= an;
            }
            seen += 1;
            let accepted = gen_skeletal_cocycle(&g, &a, &omega)
                .map(|c| validate_catgroup(&c).passed())
                .unwrap_or(false);
            if accepted != is_cocycle(gn, an, &omega) {
                errs.push(format!(
                    "G=Z{gn}, A=Z{an}, omega={omega:?}: accepted={accepted}"
                ));
            }
        }
    }
    let z2 = FiniteGroup::cyclic(2);
    let mut unnormalized = vec![0; 8];
    unnormalized[3] = 1;
    if gen_skeletal_cocycle(&z2, &z2, &unnormalized).is_ok() {
        errs.push("unnormalized omega accepted".into());
    }
    if !validate_catgroup(&skz2()).passed() {
        errs.push("SkZ2 rejected".into());
    }
    verdict(
        errs,
        format!(
            "{seen} normalized tables classified (2 over Z2/Z2), all matching the cocycle identity"
        ),
    )
}

fn main() -> ExitCode {
    let corpus = default_corpus();
    let criteria: [(&str, fn(&Corpus) -> Verdict, Option<Duration>); 10] = [
        (
            "validator soundness",
            criterion_1,
            Some(Duration::from_secs(5)),
        ),
        (
            "L-images are cssc",
            criterion_2,
            Some(Duration::from_secs(5)),
        ),
        (
            "T-images are categorical groups",
            criterion_3,
            Some(Duration::from_secs(10)),
        ),
        ("FP = 1, PF = 1, naturality", criterion_4, None),
        ("psi.phi = 1, phi.psi = 1", criterion_5, None),
        ("functoriality of L and T", criterion_6, None),
        ("structural lemmas", criterion_7, None),
        (
            "canonical forms match representative oracle",
            criterion_8,
            None,
        ),
        ("closures match naive fixpoint", criterion_9, None),
        ("pentagon iff cocycle", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut v = run(&corpus);
        let took = start.elapsed();
        if let (Ok(_), Some(b)) = (&v, budget) {
            if took > *b {
                v = Err(format!("took {took:.2?}, budget {b:?}"));
            }
        }
        match v {
            Ok(d) => println!("criterion {:>2} [{name}]: pass ({d}; {took:.2?})", i + 1),
            Err(w) => {
                failed += 1;
                println!("criterion {:>2} [{name}]: FAIL ({w}; {took:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
