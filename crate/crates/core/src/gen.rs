//! Instance generators for categorical groups.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catgroup::{validate_catgroup, CatGroup, CatGroupTables};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

fn tab1(n: usize, f: impl Fn(usize) -> usize) -> Vec<usize> {
    (0..n).map(f).collect()
}

fn tab2(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n * n).map(|k| f(k / n, k % n)).collect()
}

fn tab3(n: usize, f: impl Fn(usize, usize, usize) -> usize) -> Vec<usize> {
    (0..n * n * n)
        .map(|k| f(k / (n * n), (k / n) % n, k % n))
        .collect()
}

/// `compose[g * n + f]`, filled where `cod f = dom g`.
fn compose_tab(
    dom: &[usize],
    cod: &[usize],
    f: impl Fn(usize, usize) -> usize,
) -> Vec<Option<usize>> {
    let n = dom.len();
    (0..n * n)
        .map(|k| {
            let (g, h) = (k / n, k % n);
            (cod[h] == dom[g]).then(|| f(g, h))
        })
        .collect()
}

fn reject_if_invalid(c: CatGroup) -> Result<CatGroup> {
    let r = validate_catgroup(&c);
    let fail = r
        .failures()
        .next()
        .map(|f| (f.name.clone(), f.witness.clone().unwrap_or_default()));
    match fail {
        Some((check, witness)) => Err(Error::GeneratorRejected { check, witness }),
        None => Ok(c),
    }
}

/// Objects `G`, identity arrows only.
pub fn gen_discrete(g: &FiniteGroup) -> CatGroup {
    let n = g.order();
    let ids: Vec<usize> = (0..n).collect();
    let t = CatGroupTables {
        objects: g.names().to_vec(),
        arrows: g.names().iter().map(|x| format!("1_{x}")).collect(),
        dom: ids.clone(),
        cod: ids.clone(),
        identity: ids.clone(),
        compose: compose_tab(&ids, &ids, |g, _| g),
        zero: g.zero(),
        obj_add: tab2(n, |x, y| g.add(x, y)),
        arr_add: tab2(n, |x, y| g.add(x, y)),
        alpha: tab3(n, |x, y, z| g.add(g.add(x, y), z)),
        lambda: ids.clone(),
        rho: ids.clone(),
        neg_obj: tab1(n, |x| g.neg(x)),
        epsilon: tab1(n, |_| g.zero()),
        delta: tab1(n, |_| g.zero()),
        neg_arr: tab1(n, |x| g.neg(x)),
    };
    CatGroup::new(t).expect("discrete tables are well formed")
}

/// One object `*`, arrows `A`, composition and sum both the group law.
/// Rejected with the failing check when `A` is not abelian.
pub fn gen_delooping(a: &FiniteGroup) -> Result<CatGroup> {
    let n = a.order();
    let zeros = alloc::vec![0; n];
    let t = CatGroupTables {
        objects: alloc::vec![String::from("*")],
        arrows: a.names().to_vec(),
        dom: zeros.clone(),
        cod: zeros.clone(),
        identity: alloc::vec![a.zero()],
        compose: compose_tab(&zeros, &zeros, |g, f| a.add(g, f)),
        zero: 0,
        obj_add: alloc::vec![0],
        arr_add: tab2(n, |f, g| a.add(f, g)),
        alpha: alloc::vec![a.zero()],
        lambda: alloc::vec![a.zero()],
        rho: alloc::vec![a.zero()],
        neg_obj: alloc::vec![0],
        epsilon: alloc::vec![a.zero()],
        delta: alloc::vec![a.zero()],
        neg_arr: tab1(n, |f| a.neg(f)),
    };
    reject_if_invalid(CatGroup::new(t)?)
}

/// Objects `G`, `hom(x, x) = A`, no arrows between distinct objects, and
/// associator `α_{x,y,z} = ω(x, y, z)` (table indexed like the other
/// three-argument tables). The result is not validated: its pentagon
/// holds exactly when `ω` is a 3-cocycle.
pub fn gen_skeletal_cocycle(g: &FiniteGroup, a: &FiniteGroup, omega: &[usize]) -> Result<CatGroup> {
    let (n, m) = (g.order(), a.order());
    if let Some((x, y)) = a.non_commuting_pair() {
        return Err(Error::NotAbelian(format!(
            "{} + {} != {} + {}",
            a.name(x),
            a.name(y),
            a.name(y),
            a.name(x)
        )));
    }
    if omega.len() != n * n * n || omega.iter().any(|&v| v >= m) {
        return Err(Error::MalformedTable {
            table: "omega",
            detail: format!("expected {} entries in A", n * n * n),
        });
    }
    let w = |x: usize, y: usize, z: usize| omega[(x * n + y) * n + z];
    let e = g.zero();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if (x == e || y == e || z == e) && w(x, y, z) != a.zero() {
                    return Err(Error::NotNormalized(format!(
                        "{}, {}, {}",
                        g.name(x),
                        g.name(y),
                        g.name(z)
                    )));
                }
            }
        }
    }
    // arrow (x, c) has index x * m + c
    let arr = |x: usize, c: usize| x * m + c;
    let obj = |f: usize| f / m;
    let val = |f: usize| f % m;
    let dom: Vec<usize> = (0..n * m).map(obj).collect();
    let t = CatGroupTables {
        objects: g.names().to_vec(),
        arrows: (0..n * m)
            .map(|f| format!("({},{})", g.name(obj(f)), a.name(val(f))))
            .collect(),
        dom: dom.clone(),
        cod: dom.clone(),
        identity: tab1(n, |x| arr(x, a.zero())),
        compose: compose_tab(&dom, &dom, |h, f| arr(obj(f), a.add(val(h), val(f)))),
        zero: e,
        obj_add: tab2(n, |x, y| g.add(x, y)),
        arr_add: tab2(n * m, |f, h| {
            arr(g.add(obj(f), obj(h)), a.add(val(f), val(h)))
        }),
        alpha: tab3(n, |x, y, z| arr(g.add(g.add(x, y), z), w(x, y, z))),
        lambda: tab1(n, |x| arr(x, a.zero())),
        rho: tab1(n, |x| arr(x, a.zero())),
        neg_obj: tab1(n, |x| g.neg(x)),
        epsilon: tab1(n, |x| arr(e, a.neg(w(x, g.neg(x), x)))),
        delta: tab1(n, |_| arr(e, a.zero())),
        neg_arr: tab1(n * m, |f| arr(g.neg(obj(f)), a.neg(val(f)))),
    };
    CatGroup::new(t)
}

/// The skeletal model over `G = A = Z/2` with `ω(1,1,1) = 1`.
pub fn skz2() -> CatGroup {
    let z2 = FiniteGroup::cyclic(2);
    let mut omega = alloc::vec![0; 8];
    omega[7] = 1;
    gen_skeletal_cocycle(&z2, &z2, &omega).expect("normalized")
}

/// An ordinary crossed module of groups `∂: T → G` with `G` acting on `T`
/// (`action[g * |T| + t]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCrossedModule {
    pub t: FiniteGroup,
    pub g: FiniteGroup,
    pub boundary: Vec<usize>,
    pub action: Vec<usize>,
}

impl ClassicalCrossedModule {
    pub fn new(
        t: FiniteGroup,
        g: FiniteGroup,
        boundary: Vec<usize>,
        action: Vec<usize>,
    ) -> Result<Self> {
        let cm = ClassicalCrossedModule {
            t,
            g,
            boundary,
            action,
        };
        if let Some(w) = cm.violation() {
            return Err(Error::InvalidCrossedModule(w));
        }
        Ok(cm)
    }

    /// A normal subgroup `T ⊴ G` embedded by `inclusion`, acted on by
    /// conjugation.
    pub fn conjugation(t: &FiniteGroup, g: &FiniteGroup, inclusion: Vec<usize>) -> Result<Self> {
        let mut action = Vec::with_capacity(g.order() * t.order());
        for x in 0..g.order() {
            for s in 0..t.order() {
                let c = g.add(x, g.add(inclusion[s], g.neg(x)));
                let pre = inclusion.iter().position(|&v| v == c).ok_or_else(|| {
                    Error::InvalidCrossedModule(format!("image is not normal at {}", g.name(c)))
                })?;
                action.push(pre);
            }
        }
        Self::new(t.clone(), g.clone(), inclusion, action)
    }

    /// `A → 1` with the trivial action.
    pub fn to_trivial(a: &FiniteGroup) -> Result<Self> {
        Self::new(
            a.clone(),
            FiniteGroup::trivial(),
            alloc::vec![0; a.order()],
            (0..a.order()).collect(),
        )
    }

    pub fn act(&self, x: usize, s: usize) -> usize {
        self.action[x * self.t.order() + s]
    }

    /// First failed classical axiom.
    pub fn violation(&self) -> Option<String> {
        let (t, g) = (&self.t, &self.g);
        let (nt, ng) = (t.order(), g.order());
        if self.boundary.len() != nt || self.action.len() != nt * ng {
            return Some("table sizes".into());
        }
        if self.boundary.iter().any(|&v| v >= ng) || self.action.iter().any(|&v| v >= nt) {
            return Some("table entries out of range".into());
        }
        if !t.is_homomorphism(g, &self.boundary) {
            return Some("boundary is not a homomorphism".into());
        }
        for x in 0..ng {
            if !t.is_homomorphism(t, &(0..nt).map(|s| self.act(x, s)).collect::<Vec<_>>()) {
                return Some(format!("{} does not act by an endomorphism", g.name(x)));
            }
            for y in 0..ng {
                for s in 0..nt {
                    if self.act(g.add(x, y), s) != self.act(x, self.act(y, s)) {
                        return Some(format!(
                            "action is not associative at ({}, {}, {})",
                            g.name(x),
                            g.name(y),
                            t.name(s)
                        ));
                    }
                }
            }
        }
        if (0..nt).any(|s| self.act(g.zero(), s) != s) {
            return Some("zero does not act trivially".into());
        }
        for x in 0..ng {
            for s in 0..nt {
                if self.boundary[self.act(x, s)] != g.add(x, g.add(self.boundary[s], g.neg(x))) {
                    return Some(format!(
                        "equivariance fails at ({}, {})",
                        g.name(x),
                        t.name(s)
                    ));
                }
            }
        }
        for s in 0..nt {
            for u in 0..nt {
                if self.act(self.boundary[s], u) != t.add(s, t.add(u, t.neg(s))) {
                    return Some(format!(
                        "Peiffer identity fails at ({}, {})",
                        t.name(s),
                        t.name(u)
                    ));
                }
            }
        }
        None
    }
}

/// Objects `G`, arrows `(g, t): g → ∂t + g`, composition
/// `(g', t') ∘ (g, t) = (g, t' + t)`, sum `(g1 + g2, t1 + g1·t2)`, all
/// structure maps identities.
pub fn gen_brown_spencer(cm: &ClassicalCrossedModule) -> Result<CatGroup> {
    if let Some(w) = cm.violation() {
        return Err(Error::InvalidCrossedModule(w));
    }
    let (t, g) = (&cm.t, &cm.g);
    let (nt, ng) = (t.order(), g.order());
    let arr = |x: usize, s: usize| x * nt + s;
    let base = |f: usize| f / nt;
    let tw = |f: usize| f % nt;
    let dom: Vec<usize> = (0..ng * nt).map(base).collect();
    let cod: Vec<usize> = (0..ng * nt)
        .map(|f| g.add(cm.boundary[tw(f)], base(f)))
        .collect();
    let id = |x: usize| arr(x, t.zero());
    let tb = CatGroupTables {
        objects: g.names().to_vec(),
        arrows: (0..ng * nt)
            .map(|f| format!("({},{})", g.name(base(f)), t.name(tw(f))))
            .collect(),
        dom: dom.clone(),
        cod: cod.clone(),
        identity: tab1(ng, id),
        compose: compose_tab(&dom, &cod, |h, f| arr(base(f), t.add(tw(h), tw(f)))),
        zero: g.zero(),
        obj_add: tab2(ng, |x, y| g.add(x, y)),
        arr_add: tab2(ng * nt, |f, h| {
            arr(
                g.add(base(f), base(h)),
                t.add(tw(f), cm.act(base(f), tw(h))),
            )
        }),
        alpha: tab3(ng, |x, y, z| id(g.add(g.add(x, y), z))),
        lambda: tab1(ng, id),
        rho: tab1(ng, id),
        neg_obj: tab1(ng, |x| g.neg(x)),
        epsilon: tab1(ng, |_| id(g.zero())),
        delta: tab1(ng, |_| id(g.zero())),
        neg_arr: tab1(ng * nt, |f| {
            let nx = g.neg(base(f));
            arr(nx, cm.act(nx, t.neg(tw(f))))
        }),
    };
    CatGroup::new(tb)
}

/// Componentwise product, with object and arrow names `(a,b)`.
pub fn gen_product(c1: &CatGroup, c2: &CatGroup) -> Result<CatGroup> {
    let (a0, b0) = (c1.n_objects(), c2.n_objects());
    let (a1, b1) = (c1.n_arrows(), c2.n_arrows());
    let o = |x: usize, y: usize| x * b0 + y;
    let ar = |f: usize, g: usize| f * b1 + g;
    let dom: Vec<usize> = (0..a1 * b1)
        .map(|k| o(c1.dom(k / b1), c2.dom(k % b1)))
        .collect();
    let cod: Vec<usize> = (0..a1 * b1)
        .map(|k| o(c1.cod(k / b1), c2.cod(k % b1)))
        .collect();
    let (p0, q0) = (|x: usize| x / b0, |x: usize| x % b0);
    let (p1, q1) = (|f: usize| f / b1, |f: usize| f % b1);
    let n0 = a0 * b0;
    let tb = CatGroupTables {
        objects: (0..n0)
            .map(|x| format!("({},{})", c1.object_name(p0(x)), c2.object_name(q0(x))))
            .collect(),
        arrows: (0..a1 * b1)
            .map(|f| format!("({},{})", c1.arrow_name(p1(f)), c2.arrow_name(q1(f))))
            .collect(),
        dom: dom.clone(),
        cod: cod.clone(),
        identity: tab1(n0, |x| ar(c1.id(p0(x)), c2.id(q0(x)))),
        compose: compose_tab(&dom, &cod, |h, f| {
            ar(
                c1.comp(p1(h), p1(f)).unwrap(),
                c2.comp(q1(h), q1(f)).unwrap(),
            )
        }),
        zero: o(c1.zero(), c2.zero()),
        obj_add: tab2(n0, |x, y| o(c1.oadd(p0(x), p0(y)), c2.oadd(q0(x), q0(y)))),
        arr_add: tab2(a1 * b1, |f, g| {
            ar(c1.aadd(p1(f), p1(g)), c2.aadd(q1(f), q1(g)))
        }),
        alpha: tab3(n0, |x, y, z| {
            ar(c1.alpha(p0(x), p0(y), p0(z)), c2.alpha(q0(x), q0(y), q0(z)))
        }),
        lambda: tab1(n0, |x| ar(c1.lambda(p0(x)), c2.lambda(q0(x)))),
        rho: tab1(n0, |x| ar(c1.rho(p0(x)), c2.rho(q0(x)))),
        neg_obj: tab1(n0, |x| o(c1.oneg(p0(x)), c2.oneg(q0(x)))),
        epsilon: tab1(n0, |x| ar(c1.epsilon(p0(x)), c2.epsilon(q0(x)))),
        delta: tab1(n0, |x| ar(c1.delta(p0(x)), c2.delta(q0(x)))),
        neg_arr: tab1(a1 * b1, |f| ar(c1.aneg(p1(f)), c2.aneg(q1(f)))),
    };
    CatGroup::new(tb)
}

/// The categorical group built from the identity module on X2tot: two
/// objects and exactly one arrow between any two of them.
pub fn codiscrete_pair() -> CatGroup {
    crate::functors::t0(
        &crate::corpus::x2tot_module(),
        &crate::catgroup::Limits::default(),
    )
    .expect("X2tot module is cssc")
    .catgroup
}
