//! Closure of the structure isomorphisms under inverse, composition and sum.

use alloc::vec;
use alloc::vec::Vec;

use super::CatGroup;

/// The special isomorphisms of a categorical group, in discovery order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecialIsos {
    order: Vec<usize>,
    member: Vec<bool>,
    between: Vec<Vec<usize>>,
    n0: usize,
}

impl SpecialIsos {
    pub fn contains(&self, f: usize) -> bool {
        self.member.get(f).copied().unwrap_or(false)
    }

    /// All special isomorphisms, first-discovered first.
    pub fn in_order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Special isomorphisms `x → y` in discovery order.
    pub fn between(&self, x: usize, y: usize) -> &[usize] {
        &self.between[x * self.n0 + y]
    }

    /// Members in arrow-index order.
    pub fn sorted(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&f| self.member[f]).collect()
    }
}

/// The generators in their fixed order: identities, α, λ, ρ, ε, δ.
pub fn generators(c: &CatGroup) -> Vec<usize> {
    let n0 = c.n_objects();
    let mut gens: Vec<usize> = (0..n0).map(|x| c.id(x)).collect();
    for x in 0..n0 {
        for y in 0..n0 {
            for z in 0..n0 {
                gens.push(c.alpha(x, y, z));
            }
        }
    }
    gens.extend((0..n0).map(|x| c.lambda(x)));
    gens.extend((0..n0).map(|x| c.rho(x)));
    gens.extend((0..n0).map(|x| c.epsilon(x)));
    gens.extend((0..n0).map(|x| c.delta(x)));
    gens
}

/// Breadth-first closure. Each newly found arrow is combined, in turn, by
/// inverse, by composition with every earlier arrow (both orders) and by
/// sum with every earlier arrow (both orders).
pub fn special_iso_closure(c: &CatGroup) -> SpecialIsos {
    let n0 = c.n_objects();
    let n1 = c.n_arrows();
    let mut s = SpecialIsos {
        order: Vec::new(),
        member: vec![false; n1],
        between: vec![Vec::new(); n0 * n0],
        n0,
    };
    let push = |s: &mut SpecialIsos, f: usize| {
        if !s.member[f] {
            s.member[f] = true;
            s.order.push(f);
            s.between[c.dom(f) * n0 + c.cod(f)].push(f);
        }
    };
    for g in generators(c) {
        push(&mut s, g);
    }
    let mut i = 0;
    while i < s.order.len() {
        let a = s.order[i];
        if let Some(inv) = c.inverse(a) {
            push(&mut s, inv);
        }
        for j in 0..=i {
            let b = s.order[j];
            if let Some(h) = c.comp(a, b) {
                push(&mut s, h);
            }
            if let Some(h) = c.comp(b, a) {
                push(&mut s, h);
            }
        }
        for j in 0..=i {
            let b = s.order[j];
            push(&mut s, c.aadd(a, b));
            push(&mut s, c.aadd(b, a));
        }
        i += 1;
    }
    s
}
