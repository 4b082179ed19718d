//! c-groups extracted from a categorical group: objects, arrows, `Star₀`
//! and the kernels of `d0`/`d1`.

use alloc::format;
use alloc::vec::Vec;

use super::CatGroup;
use crate::cgroup::{induced, CGroup, CSubset};
use crate::crossmod::CAction;
use crate::error::{Error, Result};
use crate::relation::{Partition, Relation, UnionFind};

/// Objects joined by some arrow.
pub fn object_components(c: &CatGroup) -> Partition {
    let mut uf = UnionFind::new(c.n_objects());
    for f in 0..c.n_arrows() {
        uf.union(c.dom(f), c.cod(f));
    }
    Partition::from_union_find(&mut uf)
}

/// `C0` with the object sum; objects are congruent when isomorphic.
pub fn objects_cgroup(c: &CatGroup) -> Result<CGroup> {
    let n0 = c.n_objects();
    let t = c.tables();
    CGroup::new(
        t.objects.clone(),
        t.obj_add.clone(),
        t.zero,
        (0..n0).map(|x| c.oneg(x)).collect(),
        object_components(c),
    )
}

/// Endpoint pairs of special isomorphisms, as a relation on objects.
pub fn special_object_pairs(c: &CatGroup) -> Relation {
    let mut r = Relation::empty(c.n_objects());
    for &f in c.special().in_order() {
        r.insert(c.dom(f), c.cod(f));
    }
    r
}

/// `C1` with the arrow sum, zero `1₀` and arrow negation; arrows are
/// congruent when their domains are isomorphic (in a groupoid this is the
/// same as being isomorphic in the arrow category).
pub fn arrows_cgroup(c: &CatGroup) -> Result<CGroup> {
    let comps = object_components(c);
    let labels: Vec<usize> = (0..c.n_arrows()).map(|f| comps.rep(c.dom(f))).collect();
    let t = c.tables();
    CGroup::new(
        t.arrows.clone(),
        t.arr_add.clone(),
        c.id(c.zero()),
        t.neg_arr.clone(),
        Partition::from_labels(&labels),
    )
}

pub fn ker_d0_subset(c: &CatGroup) -> CSubset {
    let comps = object_components(c);
    CSubset::new(
        (0..c.n_arrows())
            .filter(|&f| comps.related(c.dom(f), c.zero()))
            .collect(),
    )
}

pub fn ker_d1_subset(c: &CatGroup) -> CSubset {
    let comps = object_components(c);
    CSubset::new(
        (0..c.n_arrows())
            .filter(|&f| comps.related(c.cod(f), c.zero()))
            .collect(),
    )
}

/// `cKer d0` as a c-subgroup of the arrow c-group.
pub fn arrows_ker_d0(c: &CatGroup) -> Result<(CGroup, CSubset)> {
    let all = arrows_cgroup(c)?;
    let k = ker_d0_subset(c);
    Ok((induced(&all, &k)?, k))
}

/// `Star₀`: arrows with domain exactly `0`, summed as `(f + g) ∘ λ₀⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarZero {
    pub group: CGroup,
    /// Arrow index of each element of `group`.
    pub members: Vec<usize>,
}

impl StarZero {
    pub fn arrow(&self, i: usize) -> usize {
        self.members[i]
    }

    pub fn element_of(&self, f: usize) -> Option<usize> {
        self.members.binary_search(&f).ok()
    }
}

fn need(c: &CatGroup, what: &str, f: Option<usize>) -> Result<usize> {
    f.ok_or_else(|| {
        Error::Precondition(format!(
            "{what} is undefined in `{}`",
            c.object_name(c.zero())
        ))
    })
}

pub fn arrows_star_zero(c: &CatGroup) -> Result<StarZero> {
    let z = c.zero();
    let members: Vec<usize> = (0..c.n_arrows()).filter(|&f| c.dom(f) == z).collect();
    let pos = |f: usize| members.binary_search(&f).ok();
    let gamma0 = need(c, "λ₀⁻¹", c.inverse(c.lambda(z)))?;
    // 0 → -0 + 0 → -0, so that the negation of f: 0 → x starts at 0
    let to_neg_zero = need(
        c,
        "ρ₋₀ ∘ ε₀⁻¹",
        c.inverse(c.epsilon(z))
            .and_then(|e| c.comp(c.rho(c.oneg(z)), e)),
    )?;
    let k = members.len();
    let mut add = Vec::with_capacity(k * k);
    for &f in &members {
        for &g in &members {
            let s = c.comp(c.aadd(f, g), gamma0).and_then(pos);
            add.push(need(c, "Star₀ sum", s)?);
        }
    }
    let mut neg = Vec::with_capacity(k);
    for &f in &members {
        neg.push(need(
            c,
            "Star₀ negation",
            c.comp(c.aneg(f), to_neg_zero).and_then(pos),
        )?);
    }
    let names = members.iter().map(|&f| c.arrow_name(f).into()).collect();
    let zero = need(c, "1₀", pos(c.id(z)))?;
    let group = CGroup::new(names, add, zero, neg, Partition::total(k))?;
    Ok(StarZero { group, members })
}

/// `γ_r: 0 → r + (0 - r)`, as `(1_r + λ⁻¹₋ᵣ) ∘ δ_r⁻¹`.
pub fn gamma(c: &CatGroup, r: usize) -> Option<usize> {
    let nr = c.oneg(r);
    let li = c.inverse(c.lambda(nr))?;
    let di = c.inverse(c.delta(r))?;
    c.comp(c.aadd(c.id(r), li), di)
}

/// `r·f = (1_r + (f - 1_r)) ∘ γ_r` on `Star₀`.
pub fn star_action(c: &CatGroup, star: &StarZero) -> Result<CAction> {
    let objects = objects_cgroup(c)?;
    let mut dot = Vec::with_capacity(c.n_objects() * star.members.len());
    for r in 0..c.n_objects() {
        let ir = c.id(r);
        let g = need(c, "γ", gamma(c, r))?;
        for &f in &star.members {
            let a = c
                .comp(c.aadd(ir, c.aadd(f, c.aneg(ir))), g)
                .and_then(|h| star.element_of(h));
            dot.push(a.ok_or_else(|| {
                Error::Precondition(format!(
                    "{} · {} is not in Star₀",
                    c.object_name(r),
                    c.arrow_name(f)
                ))
            })?);
        }
    }
    CAction::new(&objects, &star.group, dot)
}

/// Pairs of arrows related by a weak special isomorphism.
pub fn weak_special_iso_pairs(c: &CatGroup) -> Relation {
    let n1 = c.n_arrows();
    let mut r = Relation::empty(n1);
    for f in 0..n1 {
        let (x, y) = (c.dom(f), c.cod(f));
        for x2 in 0..c.n_objects() {
            for &t0 in c.special().between(x, x2) {
                let Some(t0i) = c.inverse(t0) else { continue };
                for y2 in 0..c.n_objects() {
                    for &t1 in c.special().between(y, y2) {
                        if let Some(g) = c.comp(t1, f).and_then(|h| c.comp(h, t0i)) {
                            r.insert(f, g);
                        }
                    }
                }
            }
        }
    }
    r
}
