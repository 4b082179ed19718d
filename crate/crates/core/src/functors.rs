//! The functors `L` (categorical groups to cssc-crossed modules) and `T`
//! (cssc-crossed modules to categorical groups).
//!
//! An arrow of `T(x)` is stored in canonical form `(dom, cod, c)`: the
//! incoming special leg is absorbed into `dom`, the outgoing one into `cod`,
//! and `c` is the least element of its weak-special class. Two formal
//! arrows are equal exactly when their canonical forms are.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catgroup::star::{
    arrows_star_zero, objects_cgroup, star_action, weak_special_iso_pairs,
};
use crate::catgroup::{CatGroup, CatGroupFunctor, CatGroupTables, Limits};
use crate::cgroup::CMorphism;
use crate::crossmod::{require_cssc, special_lift, CrossedModule, CrossedModuleMorphism};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GArrow {
    pub dom: usize,
    pub cod: usize,
    pub c: usize,
}

impl GArrow {
    pub fn new(dom: usize, cod: usize, c: usize) -> Self {
        GArrow { dom, cod, c }
    }

    pub fn name(&self, x: &CrossedModule) -> String {
        let (m, n) = (x.source(), x.target());
        format!(
            "({}|{}|{})",
            n.name(self.dom),
            n.name(self.cod),
            m.name(self.c)
        )
    }
}

fn leg_ok(x: &CrossedModule, g: &GArrow) -> bool {
    let n = x.target();
    n.special_pair(n.add(x.d(g.c), g.dom), g.cod)
}

/// Canonical form of the formal arrow `β ∘ (r, c) ∘ α` with
/// `α: r_dom → r` and `β: ∂c + r → beta_cod` special.
pub fn canonicalize(
    x: &CrossedModule,
    r_dom: usize,
    r: usize,
    c: usize,
    beta_cod: usize,
) -> Result<GArrow> {
    let n = x.target();
    if !n.special_pair(r_dom, r) {
        return Err(Error::NotSpecialLeg {
            leg: "alpha",
            from: n.name(r_dom).into(),
            to: n.name(r).into(),
        });
    }
    let mid = n.add(x.d(c), r);
    if !n.special_pair(mid, beta_cod) {
        return Err(Error::NotSpecialLeg {
            leg: "beta",
            from: n.name(mid).into(),
            to: n.name(beta_cod).into(),
        });
    }
    Ok(GArrow::new(r_dom, beta_cod, x.ws_rep(c)))
}

pub fn t_compose(x: &CrossedModule, g2: &GArrow, g1: &GArrow) -> Result<GArrow> {
    if g1.cod != g2.dom {
        let n = x.target();
        return Err(Error::NotComposable(format!(
            "{} then {}",
            n.name(g1.cod),
            n.name(g2.dom)
        )));
    }
    let g = GArrow::new(g1.dom, g2.cod, x.ws_rep(x.source().add(g2.c, g1.c)));
    debug_assert!(leg_ok(x, &g));
    Ok(g)
}

pub fn t_identity(x: &CrossedModule, r: usize) -> GArrow {
    GArrow::new(r, r, x.ws_rep(x.source().zero()))
}

pub fn t_inverse(x: &CrossedModule, g: &GArrow) -> GArrow {
    GArrow::new(g.cod, g.dom, x.ws_rep(x.source().neg(g.c)))
}

pub fn t_add(x: &CrossedModule, g1: &GArrow, g2: &GArrow) -> GArrow {
    let (m, n) = (x.source(), x.target());
    GArrow::new(
        n.add(g1.dom, g2.dom),
        n.add(g1.cod, g2.cod),
        x.ws_rep(m.add(g1.c, x.act(g1.dom, g2.c))),
    )
}

pub fn t_opposite(x: &CrossedModule, g: &GArrow) -> GArrow {
    let (m, n) = (x.source(), x.target());
    let nd = n.neg(g.dom);
    GArrow::new(nd, n.neg(g.cod), x.ws_rep(x.act(nd, m.neg(g.c))))
}

/// The special isomorphism `r → r'`, carried by the lift of `r' - r`
/// weakly special congruent to `0`.
pub fn t_special_iso(x: &CrossedModule, r: usize, r2: usize) -> Result<GArrow> {
    let n = x.target();
    if !n.special_pair(r, r2) {
        return Err(Error::NotSpecialPair(n.name(r).into(), n.name(r2).into()));
    }
    let c = special_lift(x, x.source().zero(), n.sub(r2, r))?;
    Ok(GArrow::new(r, r2, x.ws_rep(c)))
}

/// `T(x)`: the categorical group together with the canonical form of each
/// of its arrows.
#[derive(Debug, Clone)]
pub struct TCatGroup {
    pub module: CrossedModule,
    pub catgroup: CatGroup,
    /// Canonical form of arrow `i` of `catgroup`.
    pub arrows: Vec<GArrow>,
    index: BTreeMap<GArrow, usize>,
}

impl TCatGroup {
    pub fn index_of(&self, g: &GArrow) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn garrow(&self, f: usize) -> &GArrow {
        &self.arrows[f]
    }

    fn lookup(&self, g: &GArrow) -> Result<usize> {
        self.index_of(g)
            .ok_or_else(|| Error::Precondition(format!("{} is not an arrow", g.name(&self.module))))
    }
}

/// All canonical arrows, cell by cell.
pub fn enumerate_garrows(x: &CrossedModule) -> Vec<GArrow> {
    let (m, n) = (x.source(), x.target());
    let reps: Vec<usize> = (0..m.len()).filter(|&c| x.ws_rep(c) == c).collect();
    let mut out = Vec::new();
    for d in 0..n.len() {
        for e in 0..n.len() {
            for &c in &reps {
                let g = GArrow::new(d, e, c);
                if leg_ok(x, &g) {
                    out.push(g);
                }
            }
        }
    }
    out
}

pub fn t0(x: &CrossedModule, limits: &Limits) -> Result<TCatGroup> {
    require_cssc(x)?;
    let n = x.target();
    let n0 = n.len();
    let garrows = enumerate_garrows(x);
    if garrows.len() > limits.max_t_arrows {
        return Err(Error::TooLarge {
            size: garrows.len(),
            cap: limits.max_t_arrows,
        });
    }
    let pos: BTreeMap<GArrow, usize> = garrows.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let at = |g: GArrow| -> Result<usize> {
        pos.get(&g)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{} escapes the enumeration", g.name(x))))
    };
    let sp = |a: usize, b: usize| t_special_iso(x, a, b).and_then(at);
    let n1 = garrows.len();
    let mut compose = Vec::with_capacity(n1 * n1);
    for g2 in &garrows {
        for g1 in &garrows {
            compose.push(if g1.cod == g2.dom {
                Some(at(t_compose(x, g2, g1)?)?)
            } else {
                None
            });
        }
    }
    let mut arr_add = Vec::with_capacity(n1 * n1);
    for g1 in &garrows {
        for g2 in &garrows {
            arr_add.push(at(t_add(x, g1, g2))?);
        }
    }
    let mut alpha = Vec::with_capacity(n0 * n0 * n0);
    for a in 0..n0 {
        for b in 0..n0 {
            for c in 0..n0 {
                alpha.push(sp(n.add(n.add(a, b), c), n.add(a, n.add(b, c)))?);
            }
        }
    }
    let z = n.zero();
    let tables = CatGroupTables {
        objects: n.names().to_vec(),
        arrows: garrows.iter().map(|g| g.name(x)).collect(),
        dom: garrows.iter().map(|g| g.dom).collect(),
        cod: garrows.iter().map(|g| g.cod).collect(),
        identity: (0..n0)
            .map(|r| at(t_identity(x, r)))
            .collect::<Result<_>>()?,
        compose,
        zero: z,
        obj_add: (0..n0 * n0).map(|k| n.add(k / n0, k % n0)).collect(),
        arr_add,
        alpha,
        lambda: (0..n0).map(|r| sp(n.add(z, r), r)).collect::<Result<_>>()?,
        rho: (0..n0).map(|r| sp(n.add(r, z), r)).collect::<Result<_>>()?,
        neg_obj: (0..n0).map(|r| n.neg(r)).collect(),
        epsilon: (0..n0)
            .map(|r| sp(n.add(n.neg(r), r), z))
            .collect::<Result<_>>()?,
        delta: (0..n0)
            .map(|r| sp(n.add(r, n.neg(r)), z))
            .collect::<Result<_>>()?,
        neg_arr: garrows
            .iter()
            .map(|g| at(t_opposite(x, g)))
            .collect::<Result<_>>()?,
    };
    let catgroup = CatGroup::new(tables)?;
    let mut arrows = Vec::with_capacity(n1);
    for f in 0..n1 {
        let name = catgroup.arrow_name(f);
        let g = garrows
            .iter()
            .find(|g| g.name(x) == name)
            .copied()
            .expect("names are unique");
        arrows.push(g);
    }
    let index = arrows.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    Ok(TCatGroup {
        module: x.clone(),
        catgroup,
        arrows,
        index,
    })
}

/// `L(c)`: the crossed module `Star₀ → C0`, with the arrow index of each
/// element of `Star₀`.
#[derive(Debug, Clone)]
pub struct LModule {
    pub module: CrossedModule,
    pub members: Vec<usize>,
}

impl LModule {
    pub fn element_of(&self, f: usize) -> Option<usize> {
        self.members.binary_search(&f).ok()
    }
}

pub fn l0(c: &CatGroup) -> Result<LModule> {
    let star = arrows_star_zero(c)?;
    let objects = objects_cgroup(c)?;
    let action = star_action(c, &star)?;
    let boundary = star.members.iter().map(|&f| c.cod(f)).collect();
    let ws = weak_special_iso_pairs(c).restrict(&star.members);
    let module = CrossedModule::new(star.group, objects, boundary, action.table().to_vec(), ws)?;
    Ok(LModule {
        module,
        members: star.members,
    })
}

/// `L(t)`: objects as `t` does, `Star₀` by restriction.
pub fn l1(src: &LModule, tgt: &LModule, t: &CatGroupFunctor) -> Result<CrossedModuleMorphism> {
    let f = src
        .members
        .iter()
        .map(|&a| {
            tgt.element_of(t.f1[a]).ok_or_else(|| {
                Error::Precondition(format!(
                    "image of {} leaves Star₀",
                    src.module.source().name(src.element_of(a).unwrap())
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossedModuleMorphism {
        f: CMorphism::new(f),
        g: CMorphism::new(t.f0.clone()),
    })
}

/// `T(m)`: `(d, e, c) ↦ (m d, m e, m c)`, canonicalized in the target.
pub fn t1(src: &TCatGroup, tgt: &TCatGroup, m: &CrossedModuleMorphism) -> Result<CatGroupFunctor> {
    let f1 = src
        .arrows
        .iter()
        .map(|g| {
            let d = m.g.apply(g.dom);
            let h = canonicalize(&tgt.module, d, d, m.f.apply(g.c), m.g.apply(g.cod))?;
            tgt.lookup(&h)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatGroupFunctor {
        f0: m.g.map.clone(),
        f1,
    })
}
