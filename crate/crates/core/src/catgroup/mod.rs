//! Finite categorical groups.
//!
//! A [`CatGroup`] is a finite groupoid with a monoidal sum on objects and
//! arrows and the structure families α, λ, ρ, ε, δ together with arrow
//! negation. Objects and arrows are indexed in lexicographic name order.
//! The closure of special isomorphisms is computed on construction.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cgroup::{check_len, check_range, sort_names};
use crate::error::{Error, Result};
use crate::report::{first_failure, ValidationReport};

pub mod closure;
pub mod functor;
pub mod lemmas;
pub mod star;

pub use closure::SpecialIsos;
pub use functor::{validate_functor, CatGroupFunctor};

/// Size caps for the cubic checks and for enumerated categorical groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_arrows: usize,
    pub max_t_arrows: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_arrows: 64,
            max_t_arrows: 10_000,
        }
    }
}

/// Raw tables of a categorical group, indexed by position in `objects`
/// and `arrows`. `compose[g * |C1| + f]` holds `g ∘ f` and must be present
/// exactly when `cod f = dom g`. Three-argument tables are indexed
/// `(x * |C0| + y) * |C0| + z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatGroupTables {
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    pub identity: Vec<usize>,
    pub compose: Vec<Option<usize>>,
    pub zero: usize,
    pub obj_add: Vec<usize>,
    pub arr_add: Vec<usize>,
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
    pub neg_obj: Vec<usize>,
    pub epsilon: Vec<usize>,
    pub delta: Vec<usize>,
    pub neg_arr: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatGroup {
    t: CatGroupTables,
    inverse: Vec<Option<usize>>,
    special: SpecialIsos,
}

impl CatGroupTables {
    fn check_shapes(&self) -> Result<()> {
        let n0 = self.objects.len();
        let n1 = self.arrows.len();
        if n0 == 0 {
            return Err(Error::EmptyCarrier);
        }
        check_len("dom", &self.dom, n1)?;
        check_range("dom", &self.dom, n0)?;
        check_len("cod", &self.cod, n1)?;
        check_range("cod", &self.cod, n0)?;
        check_len("identity", &self.identity, n0)?;
        check_range("identity", &self.identity, n1)?;
        check_range("zero", &[self.zero], n0)?;
        check_len("object_add", &self.obj_add, n0 * n0)?;
        check_range("object_add", &self.obj_add, n0)?;
        check_len("arrow_add", &self.arr_add, n1 * n1)?;
        check_range("arrow_add", &self.arr_add, n1)?;
        check_len("alpha", &self.alpha, n0 * n0 * n0)?;
        check_range("alpha", &self.alpha, n1)?;
        for (name, t) in [
            ("lambda", &self.lambda),
            ("rho", &self.rho),
            ("epsilon", &self.epsilon),
            ("delta", &self.delta),
        ] {
            check_len(name, t, n0)?;
            check_range(name, t, n1)?;
        }
        check_len("neg_object", &self.neg_obj, n0)?;
        check_range("neg_object", &self.neg_obj, n0)?;
        check_len("neg_arrow", &self.neg_arr, n1)?;
        check_range("neg_arrow", &self.neg_arr, n1)?;
        if self.compose.len() != n1 * n1 {
            return Err(Error::MalformedTable {
                table: "compose",
                detail: format!("expected {} slots, found {}", n1 * n1, self.compose.len()),
            });
        }
        for g in 0..n1 {
            for f in 0..n1 {
                let slot = self.compose[g * n1 + f];
                let composable = self.cod[f] == self.dom[g];
                match (composable, slot) {
                    (true, None) => {
                        return Err(Error::MalformedTable {
                            table: "compose",
                            detail: format!("missing {} ∘ {}", self.arrows[g], self.arrows[f]),
                        })
                    }
                    (false, Some(_)) => {
                        return Err(Error::MalformedTable {
                            table: "compose",
                            detail: format!(
                                "{} ∘ {} given for non-composable arrows",
                                self.arrows[g], self.arrows[f]
                            ),
                        })
                    }
                    (_, Some(h)) if h >= n1 => {
                        return Err(Error::MalformedTable {
                            table: "compose",
                            detail: format!("entry {h} out of range"),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Re-indexes objects and arrows in name order.
    fn sorted(self) -> Result<Self> {
        let n0 = self.objects.len();
        let n1 = self.arrows.len();
        let (objects, po) = sort_names(self.objects)?;
        let (arrows, pa) = if n1 == 0 {
            (Vec::new(), Vec::new())
        } else {
            sort_names(self.arrows)?
        };
        let mut t = CatGroupTables {
            objects,
            arrows,
            dom: vec![0; n1],
            cod: vec![0; n1],
            identity: vec![0; n0],
            compose: vec![None; n1 * n1],
            zero: po[self.zero],
            obj_add: vec![0; n0 * n0],
            arr_add: vec![0; n1 * n1],
            alpha: vec![0; n0 * n0 * n0],
            lambda: vec![0; n0],
            rho: vec![0; n0],
            neg_obj: vec![0; n0],
            epsilon: vec![0; n0],
            delta: vec![0; n0],
            neg_arr: vec![0; n1],
        };
        for f in 0..n1 {
            t.dom[pa[f]] = po[self.dom[f]];
            t.cod[pa[f]] = po[self.cod[f]];
            t.neg_arr[pa[f]] = pa[self.neg_arr[f]];
            for g in 0..n1 {
                t.compose[pa[g] * n1 + pa[f]] = self.compose[g * n1 + f].map(|h| pa[h]);
                t.arr_add[pa[f] * n1 + pa[g]] = pa[self.arr_add[f * n1 + g]];
            }
        }
        for x in 0..n0 {
            t.identity[po[x]] = pa[self.identity[x]];
            t.lambda[po[x]] = pa[self.lambda[x]];
            t.rho[po[x]] = pa[self.rho[x]];
            t.epsilon[po[x]] = pa[self.epsilon[x]];
            t.delta[po[x]] = pa[self.delta[x]];
            t.neg_obj[po[x]] = po[self.neg_obj[x]];
            for y in 0..n0 {
                t.obj_add[po[x] * n0 + po[y]] = po[self.obj_add[x * n0 + y]];
                for z in 0..n0 {
                    t.alpha[(po[x] * n0 + po[y]) * n0 + po[z]] =
                        pa[self.alpha[(x * n0 + y) * n0 + z]];
                }
            }
        }
        Ok(t)
    }
}

impl CatGroup {
    /// Checks table shapes and composability, sorts by name and computes
    /// inverses and the special-isomorphism closure. The categorical-group
    /// axioms are checked separately by [`validate_catgroup`].
    pub fn new(tables: CatGroupTables) -> Result<Self> {
        tables.check_shapes()?;
        let t = tables.sorted()?;
        let n1 = t.arrows.len();
        let inverse = (0..n1)
            .map(|f| {
                (0..n1).find(|&g| {
                    t.compose[g * n1 + f] == Some(t.identity[t.dom[f]])
                        && t.compose[f * n1 + g] == Some(t.identity[t.cod[f]])
                })
            })
            .collect();
        let mut c = CatGroup {
            t,
            inverse,
            special: SpecialIsos::default(),
        };
        c.special = closure::special_iso_closure(&c);
        Ok(c)
    }

    pub fn tables(&self) -> &CatGroupTables {
        &self.t
    }

    pub fn into_tables(self) -> CatGroupTables {
        self.t
    }

    pub fn n_objects(&self) -> usize {
        self.t.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.t.arrows.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.t.objects[x]
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.t.arrows[f]
    }

    pub fn object_names(&self) -> &[String] {
        &self.t.objects
    }

    pub fn arrow_names(&self) -> &[String] {
        &self.t.arrows
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.t
            .objects
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.t
            .arrows
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    pub fn dom(&self, f: usize) -> usize {
        self.t.dom[f]
    }

    pub fn cod(&self, f: usize) -> usize {
        self.t.cod[f]
    }

    pub fn id(&self, x: usize) -> usize {
        self.t.identity[x]
    }

    /// `g ∘ f`, defined when `cod f = dom g`.
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.t.compose[g * self.n_arrows() + f]
    }

    /// Composes a chain given in application order (first arrow first).
    pub fn chain(&self, arrows: &[usize]) -> Option<usize> {
        let (&first, rest) = arrows.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.comp(g, acc))
    }

    pub fn zero(&self) -> usize {
        self.t.zero
    }

    pub fn oadd(&self, x: usize, y: usize) -> usize {
        self.t.obj_add[x * self.n_objects() + y]
    }

    pub fn aadd(&self, f: usize, g: usize) -> usize {
        self.t.arr_add[f * self.n_arrows() + g]
    }

    pub fn alpha(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.n_objects();
        self.t.alpha[(x * n + y) * n + z]
    }

    pub fn lambda(&self, x: usize) -> usize {
        self.t.lambda[x]
    }

    pub fn rho(&self, x: usize) -> usize {
        self.t.rho[x]
    }

    pub fn oneg(&self, x: usize) -> usize {
        self.t.neg_obj[x]
    }

    pub fn epsilon(&self, x: usize) -> usize {
        self.t.epsilon[x]
    }

    pub fn delta(&self, x: usize) -> usize {
        self.t.delta[x]
    }

    pub fn aneg(&self, f: usize) -> usize {
        self.t.neg_arr[f]
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        self.inverse[f]
    }

    pub fn special(&self) -> &SpecialIsos {
        &self.special
    }

    pub fn is_special(&self, f: usize) -> bool {
        self.special.contains(f)
    }

    /// The first special isomorphism `x → y` in discovery order.
    pub fn chosen_special(&self, x: usize, y: usize) -> Option<usize> {
        self.special.between(x, y).first().copied()
    }

    pub fn hom(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_arrows()).filter(move |&f| self.dom(f) == x && self.cod(f) == y)
    }

    /// Whether `f` and `g` are related by a weak special isomorphism: special
    /// `θ0: dom f → dom g` and `θ1: cod f → cod g` with `θ1 ∘ f = g ∘ θ0`.
    pub fn weakly_special_iso(&self, f: usize, g: usize) -> bool {
        self.weak_special_witness(f, g).is_some()
    }

    pub fn weak_special_witness(&self, f: usize, g: usize) -> Option<(usize, usize)> {
        let s0 = self.special.between(self.dom(f), self.dom(g));
        let s1 = self.special.between(self.cod(f), self.cod(g));
        for &t0 in s0 {
            let rhs = self.comp(g, t0);
            for &t1 in s1 {
                if self.comp(t1, f) == rhs {
                    return Some((t0, t1));
                }
            }
        }
        None
    }

    pub(crate) fn an(&self, f: Option<usize>) -> &str {
        f.map_or("⊥", |f| self.arrow_name(f))
    }
}

pub fn validate_catgroup(c: &CatGroup) -> ValidationReport {
    validate_catgroup_with(
        c,
        &Limits {
            max_arrows: usize::MAX,
            ..Limits::default()
        },
    )
    .expect("no cap")
}

/// Runs every axiom check; fails with `TooLarge` above the arrow cap.
pub fn validate_catgroup_with(c: &CatGroup, limits: &Limits) -> Result<ValidationReport> {
    let n0 = c.n_objects();
    let n1 = c.n_arrows();
    if n1 > limits.max_arrows {
        return Err(Error::TooLarge {
            size: n1,
            cap: limits.max_arrows,
        });
    }
    let on = |x: usize| c.object_name(x);
    let an = |f: usize| c.arrow_name(f);
    let ao = |f: Option<usize>| c.an(f);
    let objs = || 0..n0;
    let arrs = || 0..n1;
    let objs2 = || (0..n0).flat_map(move |x| (0..n0).map(move |y| (x, y)));
    let objs3 =
        || (0..n0).flat_map(move |x| (0..n0).flat_map(move |y| (0..n0).map(move |z| (x, y, z))));
    let arrs2 = || (0..n1).flat_map(move |f| (0..n1).map(move |g| (f, g)));
    let composable: Vec<(usize, usize)> =
        arrs2().filter(|&(g, f)| c.comp(g, f).is_some()).collect();
    let typed = |f: usize, x: usize, y: usize| c.dom(f) == x && c.cod(f) == y;
    let inv = |f: usize| c.inverse(f);
    let mut r = ValidationReport::new("categorical group");

    r.record(
        "identity-typing",
        first_failure(objs(), |x| {
            (!typed(c.id(x), x, x)).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "composition-typing",
        first_failure(composable.iter(), |&(g, f)| {
            let h = c.comp(g, f).unwrap();
            (!typed(h, c.dom(f), c.cod(g))).then(|| format!("{} ∘ {} = {}", an(g), an(f), an(h)))
        }),
    );
    r.record(
        "unit-law",
        first_failure(arrs(), |f| {
            (c.comp(f, c.id(c.dom(f))) != Some(f) || c.comp(c.id(c.cod(f)), f) != Some(f))
                .then(|| format!("f={}", an(f)))
        }),
    );
    r.record(
        "associativity",
        first_failure(composable.iter(), |&(g, f)| {
            let gf = c.comp(g, f).unwrap();
            (0..n1).filter(|&h| c.comp(h, g).is_some()).find_map(|h| {
                let l = c.comp(c.comp(h, g).unwrap(), f);
                let rr = c.comp(h, gf);
                (l != rr).then(|| {
                    format!(
                        "h={}, g={}, f={}: {} vs {}",
                        an(h),
                        an(g),
                        an(f),
                        ao(l),
                        ao(rr)
                    )
                })
            })
        }),
    );
    r.record(
        "groupoid",
        first_failure(arrs(), |f| {
            inv(f)
                .is_none()
                .then(|| format!("{} has no inverse", an(f)))
        }),
    );
    r.record(
        "sum-typing",
        first_failure(arrs2(), |(f, g)| {
            let s = c.aadd(f, g);
            (!typed(s, c.oadd(c.dom(f), c.dom(g)), c.oadd(c.cod(f), c.cod(g))))
                .then(|| format!("{} + {} = {}", an(f), an(g), an(s)))
        }),
    );
    r.record(
        "sum-identities",
        first_failure(objs2(), |(x, y)| {
            (c.aadd(c.id(x), c.id(y)) != c.id(c.oadd(x, y)))
                .then(|| format!("x={}, y={}", on(x), on(y)))
        }),
    );
    r.record(
        "interchange",
        first_failure(composable.iter(), |&(f, g)| {
            let fg = c.comp(f, g).unwrap();
            composable.iter().find_map(|&(h, t)| {
                let l = c.comp(c.aadd(f, h), c.aadd(g, t));
                let rr = Some(c.aadd(fg, c.comp(h, t).unwrap()));
                (l != rr).then(|| {
                    format!(
                        "f={}, g={}, h={}, t={}: {} vs {}",
                        an(f),
                        an(g),
                        an(h),
                        an(t),
                        ao(l),
                        ao(rr)
                    )
                })
            })
        }),
    );
    r.record(
        "alpha-typing",
        first_failure(objs3(), |(x, y, z)| {
            (!typed(
                c.alpha(x, y, z),
                c.oadd(c.oadd(x, y), z),
                c.oadd(x, c.oadd(y, z)),
            ))
            .then(|| format!("x={}, y={}, z={}", on(x), on(y), on(z)))
        }),
    );
    r.record(
        "lambda-typing",
        first_failure(objs(), |x| {
            (!typed(c.lambda(x), c.oadd(c.zero(), x), x)).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "rho-typing",
        first_failure(objs(), |x| {
            (!typed(c.rho(x), c.oadd(x, c.zero()), x)).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "alpha-naturality",
        first_failure(
            arrs().flat_map(|f| arrs().flat_map(move |g| arrs().map(move |h| (f, g, h)))),
            |(f, g, h)| {
                let a1 = c.alpha(c.cod(f), c.cod(g), c.cod(h));
                let a0 = c.alpha(c.dom(f), c.dom(g), c.dom(h));
                let l = c.comp(a1, c.aadd(c.aadd(f, g), h));
                let rr = c.comp(c.aadd(f, c.aadd(g, h)), a0);
                (l != rr || l.is_none()).then(|| {
                    format!(
                        "f={}, g={}, h={}: {} vs {}",
                        an(f),
                        an(g),
                        an(h),
                        ao(l),
                        ao(rr)
                    )
                })
            },
        ),
    );
    let z1 = c.id(c.zero());
    r.record(
        "lambda-naturality",
        first_failure(arrs(), |f| {
            let l = c.comp(c.lambda(c.cod(f)), c.aadd(z1, f));
            let rr = c.comp(f, c.lambda(c.dom(f)));
            (l != rr || l.is_none()).then(|| format!("f={}: {} vs {}", an(f), ao(l), ao(rr)))
        }),
    );
    r.record(
        "rho-naturality",
        first_failure(arrs(), |f| {
            let l = c.comp(c.rho(c.cod(f)), c.aadd(f, z1));
            let rr = c.comp(f, c.rho(c.dom(f)));
            (l != rr || l.is_none()).then(|| format!("f={}: {} vs {}", an(f), ao(l), ao(rr)))
        }),
    );
    r.record(
        "pentagon",
        first_failure(
            objs3().flat_map(|(x, y, z)| (0..n0).map(move |w| (x, y, z, w))),
            |(x, y, z, w)| {
                // (1 + α) ∘ α_{x,y+z,w} ∘ (α + 1) = α_{x,y,z+w} ∘ α_{x+y,z,w}
                let l = c.chain(&[
                    c.aadd(c.alpha(x, y, z), c.id(w)),
                    c.alpha(x, c.oadd(y, z), w),
                    c.aadd(c.id(x), c.alpha(y, z, w)),
                ]);
                let rr = c.chain(&[c.alpha(c.oadd(x, y), z, w), c.alpha(x, y, c.oadd(z, w))]);
                (l != rr || l.is_none()).then(|| {
                    format!(
                        "x={}, y={}, z={}, t={}: {} vs {}",
                        on(x),
                        on(y),
                        on(z),
                        on(w),
                        ao(l),
                        ao(rr)
                    )
                })
            },
        ),
    );
    r.record(
        "triangle",
        first_failure(objs2(), |(x, y)| {
            let l = c.comp(c.aadd(c.id(x), c.lambda(y)), c.alpha(x, c.zero(), y));
            let rr = Some(c.aadd(c.rho(x), c.id(y)));
            (l != rr).then(|| format!("x={}, y={}: {} vs {}", on(x), on(y), ao(l), ao(rr)))
        }),
    );
    r.record(
        "lambda0-rho0",
        if c.lambda(c.zero()) == c.rho(c.zero()) {
            Ok(())
        } else {
            Err(format!(
                "{} vs {}",
                an(c.lambda(c.zero())),
                an(c.rho(c.zero()))
            ))
        },
    );
    r.record(
        "epsilon-typing",
        first_failure(objs(), |x| {
            (!typed(c.epsilon(x), c.oadd(c.oneg(x), x), c.zero())).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "delta-typing",
        first_failure(objs(), |x| {
            (!typed(c.delta(x), c.oadd(x, c.oneg(x)), c.zero())).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "epsilon-naturality",
        first_failure(arrs(), |f| {
            let l = c.comp(c.epsilon(c.cod(f)), c.aadd(c.aneg(f), f));
            let rr = Some(c.epsilon(c.dom(f)));
            (l != rr).then(|| format!("f={}: {} vs {}", an(f), ao(l), ao(rr)))
        }),
    );
    r.record(
        "delta-naturality",
        first_failure(arrs(), |f| {
            let l = c.comp(c.delta(c.cod(f)), c.aadd(f, c.aneg(f)));
            let rr = Some(c.delta(c.dom(f)));
            (l != rr).then(|| format!("f={}: {} vs {}", an(f), ao(l), ao(rr)))
        }),
    );
    r.record(
        "zigzag-1",
        first_failure(objs(), |x| {
            // (1_x + ε_x) ∘ α_{x,-x,x} ∘ (δ_x⁻¹ + 1_x) = ρ_x⁻¹ ∘ λ_x
            let nx = c.oneg(x);
            let l = inv(c.delta(x)).and_then(|di| {
                c.chain(&[
                    c.aadd(di, c.id(x)),
                    c.alpha(x, nx, x),
                    c.aadd(c.id(x), c.epsilon(x)),
                ])
            });
            let rr = inv(c.rho(x)).and_then(|ri| c.comp(ri, c.lambda(x)));
            (l != rr || l.is_none()).then(|| format!("x={}: {} vs {}", on(x), ao(l), ao(rr)))
        }),
    );
    r.record(
        "zigzag-2",
        first_failure(objs(), |x| {
            // (ε_x + 1_{-x}) ∘ α⁻¹_{-x,x,-x} ∘ (1_{-x} + δ_x⁻¹) = λ⁻¹_{-x} ∘ ρ_{-x}
            let nx = c.oneg(x);
            let l = inv(c.delta(x))
                .zip(inv(c.alpha(nx, x, nx)))
                .and_then(|(di, ai)| {
                    c.chain(&[c.aadd(c.id(nx), di), ai, c.aadd(c.epsilon(x), c.id(nx))])
                });
            let rr = inv(c.lambda(nx)).and_then(|li| c.comp(li, c.rho(nx)));
            (l != rr || l.is_none()).then(|| format!("x={}: {} vs {}", on(x), ao(l), ao(rr)))
        }),
    );
    r.record(
        "negation-typing",
        first_failure(arrs(), |f| {
            (!typed(c.aneg(f), c.oneg(c.dom(f)), c.oneg(c.cod(f)))).then(|| format!("f={}", an(f)))
        }),
    );
    r.record(
        "negation-identity",
        first_failure(objs(), |x| {
            (c.aneg(c.id(x)) != c.id(c.oneg(x))).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "negation-cancel",
        first_failure(arrs(), |f| {
            let nf = c.aneg(f);
            let left = c.aadd(nf, f);
            let right = c.aadd(f, nf);
            if !c.weakly_special_iso(left, z1) {
                Some(format!("-{0} + {0} = {1}", an(f), an(left)))
            } else if !c.weakly_special_iso(right, z1) {
                Some(format!("{0} + -{0} = {1}", an(f), an(right)))
            } else {
                None
            }
        }),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::group::FiniteGroup;

    #[test]
    fn named_instances_validate() {
        for c in [
            gen::gen_discrete(&FiniteGroup::cyclic(2)),
            gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap(),
            gen::skz2(),
        ] {
            let r = validate_catgroup(&c);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn table_shape_errors() {
        let mut t = gen::gen_delooping(&FiniteGroup::cyclic(2))
            .unwrap()
            .into_tables();
        t.compose[0] = None;
        assert!(matches!(
            CatGroup::new(t.clone()),
            Err(Error::MalformedTable {
                table: "compose",
                ..
            })
        ));
        t.compose[0] = Some(7);
        assert!(matches!(
            CatGroup::new(t.clone()),
            Err(Error::MalformedTable {
                table: "compose",
                ..
            })
        ));
        t.compose[0] = Some(0);
        t.alpha.pop();
        assert!(matches!(
            CatGroup::new(t),
            Err(Error::MalformedTable { table: "alpha", .. })
        ));
    }

    #[test]
    fn tables_round_trip() {
        let c = gen::skz2();
        assert_eq!(CatGroup::new(c.tables().clone()).unwrap(), c);
    }

    #[test]
    fn cap_is_enforced() {
        let c = gen::gen_delooping(&FiniteGroup::cyclic(5)).unwrap();
        let lim = Limits {
            max_arrows: 4,
            ..Limits::default()
        };
        assert!(matches!(
            validate_catgroup_with(&c, &lim),
            Err(Error::TooLarge { size: 5, cap: 4 })
        ));
    }

    #[test]
    fn broken_pentagon_has_witness() {
        let c = gen::skz2();
        let mut t = c.into_tables();
        let n0 = t.objects.len();
        // α_{1,1,0} is an identity on 0 since ω is normalized; swap in the
        // nontrivial automorphism of 0.
        let idx = (n0 + 1) * n0;
        t.alpha[idx] = t.arrows.iter().position(|a| a == "(0,1)").unwrap();
        let c = CatGroup::new(t).unwrap();
        let r = validate_catgroup(&c);
        assert!(!r.passed());
        assert!(r.failures().any(|f| f.name == "pentagon"
            || f.name == "triangle"
            || f.name.contains("naturality")));
    }
}
