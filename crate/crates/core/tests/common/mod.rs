//! Brute-force oracles. They read structures through table accessors only
//! and never call the crate's closure, canonical-form or cssc code, except
//! where `oracle_ops` compares against the operations under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cssc_core::functors::{t_add, t_compose, t_inverse, t_opposite, GArrow, TCatGroup};
use cssc_core::{CGroup, CatGroup, CrossedModule};

/// Least set of pairs holding the reflexive pairs and every axiom instance,
/// closed under symmetry, transitivity and sums, by blind iteration.
pub fn naive_special_pairs(g: &CGroup) -> BTreeSet<(usize, usize)> {
    let n = g.len();
    let z = g.zero();
    let mut s = BTreeSet::new();
    for a in 0..n {
        s.insert((a, a));
        s.insert((g.add(z, a), a));
        s.insert((g.add(a, z), a));
        s.insert((g.add(g.neg(a), a), z));
        s.insert((g.add(a, g.neg(a)), z));
        for b in 0..n {
            for c in 0..n {
                s.insert((g.add(g.add(a, b), c), g.add(a, g.add(b, c))));
            }
        }
    }
    loop {
        let cur: Vec<(usize, usize)> = s.iter().copied().collect();
        let mut next = s.clone();
        for &(a, b) in &cur {
            next.insert((b, a));
            for &(c, d) in &cur {
                if b == c {
                    next.insert((a, d));
                }
                next.insert((g.add(a, c), g.add(b, d)));
            }
        }
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

fn naive_inverse(c: &CatGroup, f: usize) -> Option<usize> {
    (0..c.n_arrows())
        .find(|&g| c.comp(g, f) == Some(c.id(c.dom(f))) && c.comp(f, g) == Some(c.id(c.cod(f))))
}

/// Arrows generated by identities and the structure maps under inverse,
/// composition and sum, by blind iteration.
pub fn naive_special_isos(c: &CatGroup) -> BTreeSet<usize> {
    let n0 = c.n_objects();
    let mut s = BTreeSet::new();
    for x in 0..n0 {
        s.insert(c.id(x));
        s.insert(c.lambda(x));
        s.insert(c.rho(x));
        s.insert(c.epsilon(x));
        s.insert(c.delta(x));
        for y in 0..n0 {
            for z in 0..n0 {
                s.insert(c.alpha(x, y, z));
            }
        }
    }
    loop {
        let cur: Vec<usize> = s.iter().copied().collect();
        let mut next = s.clone();
        for &f in &cur {
            if let Some(i) = naive_inverse(c, f) {
                next.insert(i);
            }
            for &g in &cur {
                if let Some(h) = c.comp(g, f) {
                    next.insert(h);
                }
                next.insert(c.aadd(f, g));
            }
        }
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// `f ≈ g`: special `t0: dom f → dom g`, `t1: cod f → cod g` with
/// `t1 ∘ f = g ∘ t0`, over the naive closure.
pub fn naive_weak_iso(c: &CatGroup, sp: &BTreeSet<usize>, f: usize, g: usize) -> bool {
    sp.iter().any(|&t0| {
        c.dom(t0) == c.dom(f)
            && c.cod(t0) == c.dom(g)
            && sp.iter().any(|&t1| {
                c.dom(t1) == c.cod(f)
                    && c.cod(t1) == c.cod(g)
                    && c.comp(t1, f).is_some()
                    && c.comp(t1, f) == c.comp(g, t0)
            })
    })
}

/// Connected, strict and special, from the definitions, with the special
/// congruences of the target taken from [`naive_special_pairs`].
pub fn naive_cssc(x: &CrossedModule) -> Result<(), String> {
    let (m, n) = (x.source(), x.target());
    let sp = naive_special_pairs(n);
    for a in 0..m.len() {
        for b in 0..m.len() {
            if !m.related(a, b) {
                return Err(format!("not connected at ({a}, {b})"));
            }
            let lhs = x.act(x.d(a), b);
            let rhs = m.add(a, m.add(b, m.neg(a)));
            if lhs != rhs {
                return Err(format!("not strict at ({a}, {b})"));
            }
        }
    }
    for c in 0..m.len() {
        for r in 0..n.len() {
            if n.related(x.d(c), r) && !(0..m.len()).any(|c1| m.related(c1, c) && x.d(c1) == r) {
                return Err(format!("no lift of {c} over {r}"));
            }
            if sp.contains(&(x.d(c), r)) {
                let k = (0..m.len())
                    .filter(|&c1| x.d(c1) == r && x.ws(c1, c))
                    .count();
                if k != 1 {
                    return Err(format!(
                        "{k} weak-special lifts of {} over {}",
                        m.name(c),
                        n.name(r)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Least element weakly special congruent to `c`.
pub fn naive_ws_rep(x: &CrossedModule, c: usize) -> usize {
    (0..x.source().len()).find(|&d| x.ws(c, d)).unwrap()
}

/// `δω = 0` for `ω: G³ → A` over cyclic `G = Z/g`, `A = Z/a` (elements
/// are their residues).
pub fn is_cocycle(g: usize, a: usize, omega: &[usize]) -> bool {
    let w = |x: usize, y: usize, z: usize| omega[(x * g + y) * g + z] as i64;
    for x in 0..g {
        for y in 0..g {
            for z in 0..g {
                for t in 0..g {
                    let d = w(y, z, t) - w((x + y) % g, z, t) + w(x, (y + z) % g, t)
                        - w(x, y, (z + t) % g)
                        + w(x, y, z);
                    if d.rem_euclid(a as i64) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Formal representations `(r, c)` of a canonical arrow `(d, e, c0)`:
/// `d ~ r` special, `c ~ c0` weakly special, `∂c + r ~ e` special.
fn representations(
    x: &CrossedModule,
    sp: &BTreeSet<(usize, usize)>,
    g: &GArrow,
) -> Vec<(usize, usize)> {
    let (m, n) = (x.source(), x.target());
    let mut out = Vec::new();
    for r in 0..n.len() {
        for c in 0..m.len() {
            if sp.contains(&(g.dom, r)) && x.ws(c, g.c) && sp.contains(&(n.add(x.d(c), r), g.cod)) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Canonical form of the formal arrow `β (r, c) α` with `α: d → r`,
/// `β: ∂c + r → e`, checking both legs.
fn oracle_canon(
    x: &CrossedModule,
    sp: &BTreeSet<(usize, usize)>,
    d: usize,
    r: usize,
    c: usize,
    e: usize,
) -> Result<GArrow, String> {
    let n = x.target();
    if !sp.contains(&(d, r)) {
        return Err(format!(
            "alpha leg {} -> {} not special",
            n.name(d),
            n.name(r)
        ));
    }
    let mid = n.add(x.d(c), r);
    if !sp.contains(&(mid, e)) {
        return Err(format!(
            "beta leg {} -> {} not special",
            n.name(mid),
            n.name(e)
        ));
    }
    Ok(GArrow::new(d, e, naive_ws_rep(x, c)))
}

pub fn oracle_ops(name: &str, t: &TCatGroup) -> Vec<String> {
    let x = &t.module;
    let (m, n) = (x.source(), x.target());
    let sp = naive_special_pairs(n);
    let reps: Vec<Vec<(usize, usize)>> = t
        .arrows
        .iter()
        .map(|g| representations(x, &sp, g))
        .collect();
    let mut errs = Vec::new();
    let mut check =
        |what: &str, a: &GArrow, b: &GArrow, want: Result<GArrow, String>, got: GArrow| {
            if errs.len() > 5 {
                return;
            }
            match want {
                Err(w) => errs.push(format!("{name}: {what}({}, {}): {w}", a.name(x), b.name(x))),
                Ok(w) if w != got => errs.push(format!(
                    "{name}: {what}({}, {}): oracle {} vs {}",
                    a.name(x),
                    b.name(x),
                    w.name(x),
                    got.name(x)
                )),
                Ok(_) => {}
            }
        };
    for (i, g1) in t.arrows.iter().enumerate() {
        if reps[i].is_empty() {
            check("representations", g1, g1, Err("none".into()), *g1);
        }
        for &(r, c) in &reps[i] {
            let inv = oracle_canon(x, &sp, g1.cod, n.add(x.d(c), r), m.neg(c), g1.dom);
            check("inverse", g1, g1, inv, t_inverse(x, g1));
            let nr = n.neg(r);
            let opp = oracle_canon(
                x,
                &sp,
                n.neg(g1.dom),
                nr,
                x.act(nr, m.neg(c)),
                n.neg(g1.cod),
            );
            check("opposite", g1, g1, opp, t_opposite(x, g1));
        }
        for (j, g2) in t.arrows.iter().enumerate() {
            for &(r1, c1) in &reps[i] {
                for &(r2, c2) in &reps[j] {
                    let sum = oracle_canon(
                        x,
                        &sp,
                        n.add(g1.dom, g2.dom),
                        n.add(r1, r2),
                        m.add(c1, x.act(r1, c2)),
                        n.add(g1.cod, g2.cod),
                    );
                    check("add", g1, g2, sum, t_add(x, g1, g2));
                    if g1.cod == g2.dom {
                        let comp = oracle_canon(x, &sp, g1.dom, r1, m.add(c2, c1), g2.cod);
                        check("compose", g2, g1, comp, t_compose(x, g2, g1).unwrap());
                    }
                }
            }
        }
    }
    errs
}
