//! Actions of c-groups, c-crossed modules and the cssc predicates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catgroup::{star, CatGroup};
use crate::cgroup::{
    check_len, check_range, induced, is_connected, is_normal, is_perfect, validate_cgroup,
    validate_morphism, CGroup, CMorphism, CSubset,
};
use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::report::{first_failure, Check, ValidationReport};

/// An action of `B` on `A`, as a table `dot[b * |A| + a] = b·a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CAction {
    dot: Vec<usize>,
    acted: usize,
}

impl CAction {
    pub fn new(actor: &CGroup, acted: &CGroup, dot: Vec<usize>) -> Result<Self> {
        check_len("action", &dot, actor.len() * acted.len())?;
        check_range("action", &dot, acted.len())?;
        Ok(CAction {
            dot,
            acted: acted.len(),
        })
    }

    pub fn trivial(actor: &CGroup, acted: &CGroup) -> Self {
        let dot = (0..actor.len()).flat_map(|_| 0..acted.len()).collect();
        CAction {
            dot,
            acted: acted.len(),
        }
    }

    pub fn act(&self, b: usize, a: usize) -> usize {
        self.dot[b * self.acted + a]
    }

    pub fn table(&self) -> &[usize] {
        &self.dot
    }
}

pub fn validate_action(b: &CGroup, a: &CGroup, act: &CAction) -> Result<ValidationReport> {
    check_len("action", &act.dot, b.len() * a.len())?;
    check_range("action", &act.dot, a.len())?;
    let (nb, na) = (b.len(), a.len());
    let dot = |x: usize, y: usize| act.act(x, y);
    let mut r = ValidationReport::new("action");
    r.record(
        "action-i",
        first_failure(
            (0..nb).flat_map(|x| (0..na).flat_map(move |y| (0..na).map(move |z| (x, y, z)))),
            |(x, y, z)| {
                (!a.related(dot(x, a.add(y, z)), a.add(dot(x, y), dot(x, z))))
                    .then(|| format!("b={}, a={}, a1={}", b.name(x), a.name(y), a.name(z)))
            },
        ),
    );
    r.record(
        "action-ii",
        first_failure(
            (0..nb).flat_map(|x| (0..nb).flat_map(move |y| (0..na).map(move |z| (x, y, z)))),
            |(x, y, z)| {
                (!a.related(dot(b.add(x, y), z), dot(x, dot(y, z))))
                    .then(|| format!("b={}, b1={}, a={}", b.name(x), b.name(y), a.name(z)))
            },
        ),
    );
    r.record(
        "action-iii",
        first_failure(0..na, |y| {
            (!a.related(dot(b.zero(), y), y)).then(|| format!("a={}", a.name(y)))
        }),
    );
    r.record(
        "action-iv",
        first_failure(
            (0..nb).flat_map(|x| (0..na).map(move |y| (x, y))),
            |(x, y)| {
                let (x1, y1) = (b.rel().rep(x), a.rel().rep(y));
                (!a.related(dot(x, y), dot(x1, y1))).then(|| {
                    format!(
                        "b={}, b1={}, a={}, a1={}",
                        b.name(x),
                        b.name(x1),
                        a.name(y),
                        a.name(y1)
                    )
                })
            },
        ),
    );
    Ok(r)
}

/// A c-crossed module `∂: M → N` with an explicit weak-special relation
/// on `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    m: CGroup,
    n: CGroup,
    boundary: CMorphism,
    action: CAction,
    weak_special: Relation,
    ws_rep: Vec<usize>,
}

impl CrossedModule {
    pub fn new(
        m: CGroup,
        n: CGroup,
        boundary: Vec<usize>,
        action: Vec<usize>,
        weak_special: Relation,
    ) -> Result<Self> {
        check_len("boundary", &boundary, m.len())?;
        check_range("boundary", &boundary, n.len())?;
        let action = CAction::new(&n, &m, action)?;
        if weak_special.size() != m.len() {
            return Err(Error::MalformedTable {
                table: "weak_special",
                detail: format!(
                    "relation on {} elements for a carrier of {}",
                    weak_special.size(),
                    m.len()
                ),
            });
        }
        let ws_rep = weak_special.least_partners();
        Ok(CrossedModule {
            m,
            n,
            boundary: CMorphism::new(boundary),
            action,
            weak_special,
            ws_rep,
        })
    }

    pub fn source(&self) -> &CGroup {
        &self.m
    }

    pub fn target(&self) -> &CGroup {
        &self.n
    }

    pub fn boundary(&self) -> &CMorphism {
        &self.boundary
    }

    pub fn d(&self, c: usize) -> usize {
        self.boundary.map[c]
    }

    pub fn action(&self) -> &CAction {
        &self.action
    }

    pub fn act(&self, r: usize, c: usize) -> usize {
        self.action.act(r, c)
    }

    pub fn weak_special(&self) -> &Relation {
        &self.weak_special
    }

    pub fn ws(&self, a: usize, b: usize) -> bool {
        self.weak_special.contains(a, b)
    }

    /// Least element weakly special congruent to `c`.
    pub fn ws_rep(&self, c: usize) -> usize {
        self.ws_rep[c]
    }
}

pub fn validate_crossed_module(x: &CrossedModule) -> ValidationReport {
    let (m, n) = (&x.m, &x.n);
    let mut r = ValidationReport::new("crossed module");
    for c in validate_cgroup(m).checks {
        r.push(Check {
            name: format!("source:{}", c.name),
            ..c
        });
    }
    for c in validate_cgroup(n).checks {
        r.push(Check {
            name: format!("target:{}", c.name),
            ..c
        });
    }
    for c in validate_morphism(m, n, &x.boundary)
        .expect("shape checked on construction")
        .checks
    {
        r.push(Check {
            name: format!("boundary:{}", c.name),
            ..c
        });
    }
    for c in validate_action(n, m, &x.action)
        .expect("shape checked on construction")
        .checks
    {
        r.push(Check {
            name: format!("action:{}", c.name),
            ..c
        });
    }
    let (nm, nn) = (m.len(), n.len());
    r.record(
        "axiom-i",
        first_failure(
            (0..nn).flat_map(|b| (0..nm).map(move |a| (b, a))),
            |(b, a)| {
                let l = x.d(x.act(b, a));
                let rr = n.add(b, n.sub(x.d(a), b));
                (l != rr).then(|| {
                    format!(
                        "b={}, a={}: {} vs {}",
                        n.name(b),
                        m.name(a),
                        n.name(l),
                        n.name(rr)
                    )
                })
            },
        ),
    );
    r.record(
        "axiom-ii",
        first_failure(
            (0..nm).flat_map(|a| (0..nm).map(move |a1| (a, a1))),
            |(a, a1)| {
                (!m.related(x.act(x.d(a), a1), peiffer(m, a, a1)))
                    .then(|| format!("a={}, a1={}", m.name(a), m.name(a1)))
            },
        ),
    );
    let ws = &x.weak_special;
    let pair = |(a, b): (usize, usize)| format!("({}, {})", m.name(a), m.name(b));
    r.record(
        "ws-reflexive",
        ws.reflexivity_violation()
            .map_or(Ok(()), |a| Err(format!("a={}", m.name(a)))),
    );
    r.record(
        "ws-symmetric",
        ws.symmetry_violation().map_or(Ok(()), |p| Err(pair(p))),
    );
    r.record(
        "ws-transitive",
        ws.transitivity_violation().map_or(Ok(()), |(a, b, c)| {
            Err(format!("({}, {}, {})", m.name(a), m.name(b), m.name(c)))
        }),
    );
    r.record(
        "ws-within-rel",
        ws.is_subset_of_partition(m.rel())
            .map_or(Ok(()), |p| Err(pair(p))),
    );
    r.record(
        "ws-contains-special",
        first_failure(0..nm, |a| {
            let b = m.special().rep(a);
            (!ws.contains(a, b)).then(|| pair((a, b)))
        }),
    );
    r.record(
        "ws-boundary-special",
        first_failure(ws.pairs(), |(a, b)| {
            (!n.special_pair(x.d(a), x.d(b))).then(|| pair((a, b)))
        }),
    );
    r
}

/// `a + (a1 - a)`
fn peiffer(m: &CGroup, a: usize, a1: usize) -> usize {
    m.add(a, m.sub(a1, a))
}

pub fn strict_violation(x: &CrossedModule) -> Option<(usize, usize)> {
    let m = &x.m;
    (0..m.len())
        .flat_map(|a| (0..m.len()).map(move |a1| (a, a1)))
        .find(|&(a, a1)| x.act(x.d(a), a1) != peiffer(m, a, a1))
}

pub fn is_strict(x: &CrossedModule) -> bool {
    strict_violation(x).is_none()
}

/// The two clauses of the special property, with witnesses.
pub fn special_report(x: &CrossedModule) -> ValidationReport {
    let (m, n) = (&x.m, &x.n);
    let mut r = ValidationReport::new("special");
    r.record(
        "special-existence",
        first_failure(
            (0..m.len()).flat_map(|c| (0..n.len()).map(move |t| (c, t))),
            |(c, t)| {
                (n.related(x.d(c), t) && !(0..m.len()).any(|c1| m.related(c1, c) && x.d(c1) == t))
                    .then(|| format!("c={}, r={}: no congruent lift", m.name(c), n.name(t)))
            },
        ),
    );
    r.record(
        "special-uniqueness",
        first_failure(
            (0..m.len()).flat_map(|c| (0..n.len()).map(move |t| (c, t))),
            |(c, t)| {
                if !n.special_pair(x.d(c), t) {
                    return None;
                }
                let cands = lift_candidates(x, c, t);
                (cands.len() != 1).then(|| {
                    format!(
                        "c={}, r={}: {} weak-special lifts {}",
                        m.name(c),
                        n.name(t),
                        cands.len(),
                        m.fmt_elems(&cands)
                    )
                })
            },
        ),
    );
    r
}

pub fn is_special(x: &CrossedModule) -> bool {
    special_report(x).passed()
}

fn lift_candidates(x: &CrossedModule, c: usize, t: usize) -> Vec<usize> {
    (0..x.m.len())
        .filter(|&c1| x.d(c1) == t && x.ws(c1, c))
        .collect()
}

/// The unique `c'` with `∂c' = r` weakly special congruent to `c`.
pub fn special_lift(x: &CrossedModule, c: usize, r: usize) -> Result<usize> {
    let (m, n) = (&x.m, &x.n);
    if !n.special_pair(x.d(c), r) {
        return Err(Error::NotSpecialPair(
            String::from(n.name(x.d(c))),
            String::from(n.name(r)),
        ));
    }
    let cands = lift_candidates(x, c, r);
    match cands.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::NoLift {
            c: m.name(c).into(),
            r: n.name(r).into(),
        }),
        _ => Err(Error::NonUniqueLift {
            c: m.name(c).into(),
            r: n.name(r).into(),
            candidates: cands.iter().map(|&a| m.name(a).into()).collect(),
        }),
    }
}

/// Connected, strict and special, as one report.
pub fn cssc_report(x: &CrossedModule) -> ValidationReport {
    let mut r = ValidationReport::new("cssc");
    r.record(
        "connected",
        if is_connected(&x.m) {
            Ok(())
        } else {
            Err(format!(
                "source has {} congruence classes",
                x.m.rel().block_count()
            ))
        },
    );
    r.record(
        "strict",
        strict_violation(x).map_or(Ok(()), |(a, a1)| {
            Err(format!("a={}, a1={}", x.m.name(a), x.m.name(a1)))
        }),
    );
    r.extend(special_report(x));
    r
}

pub fn is_cssc(x: &CrossedModule) -> bool {
    cssc_report(x).passed()
}

pub(crate) fn require_cssc(x: &CrossedModule) -> Result<()> {
    match cssc_report(x).failures().next() {
        Some(c) => Err(Error::NotCssc(format!("{c}"))),
        None => Ok(()),
    }
}

/// Pairs `(c, c')` with `c ∼ c'` and `(∂c, ∂c')` special: the purely
/// relational reading of weak special congruence, kept as a diagnostic.
pub fn relational_weak_special(x: &CrossedModule) -> Relation {
    let m = &x.m;
    let mut rel = Relation::empty(m.len());
    for a in 0..m.len() {
        for b in 0..m.len() {
            if m.related(a, b) && x.n.special_pair(x.d(a), x.d(b)) {
                rel.insert(a, b);
            }
        }
    }
    rel
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossedModuleMorphism {
    pub f: CMorphism,
    pub g: CMorphism,
}

impl CrossedModuleMorphism {
    pub fn identity(x: &CrossedModule) -> Self {
        CrossedModuleMorphism {
            f: CMorphism::identity(x.m.len()),
            g: CMorphism::identity(x.n.len()),
        }
    }

    /// `next ∘ self`
    pub fn then(&self, next: &CrossedModuleMorphism) -> Self {
        CrossedModuleMorphism {
            f: self.f.then(&next.f),
            g: self.g.then(&next.g),
        }
    }
}

pub fn validate_cm_morphism(
    x: &CrossedModule,
    y: &CrossedModule,
    mor: &CrossedModuleMorphism,
) -> Result<ValidationReport> {
    let mut r = ValidationReport::new("crossed module morphism");
    for c in validate_morphism(&x.m, &y.m, &mor.f)?.checks {
        r.push(Check {
            name: format!("f:{}", c.name),
            ..c
        });
    }
    for c in validate_morphism(&x.n, &y.n, &mor.g)?.checks {
        r.push(Check {
            name: format!("g:{}", c.name),
            ..c
        });
    }
    let (f, g) = (&mor.f.map, &mor.g.map);
    r.record(
        "commutes",
        first_failure(0..x.m.len(), |a| {
            (g[x.d(a)] != y.d(f[a])).then(|| {
                format!(
                    "a={}: g(∂a)={} but ∂'(f a)={}",
                    x.m.name(a),
                    y.n.name(g[x.d(a)]),
                    y.n.name(y.d(f[a]))
                )
            })
        }),
    );
    r.record(
        "equivariant",
        first_failure(
            (0..x.n.len()).flat_map(|b| (0..x.m.len()).map(move |a| (b, a))),
            |(b, a)| {
                (f[x.act(b, a)] != y.act(g[b], f[a]))
                    .then(|| format!("b={}, a={}", x.n.name(b), x.m.name(a)))
            },
        ),
    );
    r.record(
        "preserves-weak-special",
        first_failure(x.weak_special.pairs(), |(a, b)| {
            (!y.ws(f[a], f[b])).then(|| format!("({}, {})", x.m.name(a), x.m.name(b)))
        }),
    );
    Ok(r)
}

/// The inclusion of a perfect normal c-subgroup, acted on by conjugation
/// `b·h = b + (h - b)`; perfectness keeps the conjugate inside `H`. The
/// weak-special relation is the special relation of `G` restricted to `H`.
pub fn inclusion_crossed_module(g: &CGroup, h: &CSubset) -> Result<CrossedModule> {
    if !is_perfect(g, h) || !is_normal(g, h) {
        return Err(Error::NotPerfectOrNormal);
    }
    let sub = induced(g, h)?;
    let mut action = Vec::with_capacity(g.len() * h.len());
    for b in 0..g.len() {
        for &a in &h.members {
            let c = g.add(b, g.sub(a, b));
            action.push(
                h.position(c)
                    .expect("conjugate lies in a perfect normal subset"),
            );
        }
    }
    let ws = g.special().to_relation().restrict(&h.members);
    CrossedModule::new(sub, g.clone(), h.members.clone(), action, ws)
}

/// The split extension `Ker d0 → C1 ⇄ C0` of a categorical group, the
/// conjugation action of `C0` on the kernel, and the resulting crossed
/// module `(cKer d0, C0, d1)`.
#[derive(Debug, Clone)]
pub struct KernelExtension {
    pub arrows: CGroup,
    pub objects: CGroup,
    pub kernel: CSubset,
    pub kernel_group: CGroup,
    /// Kernel inclusion `j` into the arrow c-group.
    pub j: CMorphism,
    pub d0: CMorphism,
    /// Identity section `i` of `d0`.
    pub i: CMorphism,
    pub action: CAction,
    pub module: CrossedModule,
}

pub fn kernel_extension(c: &CatGroup) -> Result<KernelExtension> {
    let arrows = star::arrows_cgroup(c)?;
    let objects = star::objects_cgroup(c)?;
    let kernel = star::ker_d0_subset(c);
    let kernel_group = induced(&arrows, &kernel)?;
    let j = CMorphism::new(kernel.members.clone());
    let d0 = CMorphism::new((0..c.n_arrows()).map(|f| c.dom(f)).collect());
    let i = CMorphism::new((0..c.n_objects()).map(|x| c.id(x)).collect());
    let mut dot = Vec::with_capacity(objects.len() * kernel.len());
    for r in 0..objects.len() {
        let ir = c.id(r);
        for &f in &kernel.members {
            let a = c.aadd(ir, c.aadd(f, c.aneg(ir)));
            dot.push(kernel.position(a).ok_or_else(|| {
                Error::Precondition(format!(
                    "{} · {} leaves Ker d0",
                    c.object_name(r),
                    c.arrow_name(f)
                ))
            })?);
        }
    }
    let action = CAction::new(&objects, &kernel_group, dot.clone())?;
    let ws = star::weak_special_iso_pairs(c).restrict(&kernel.members);
    let boundary = kernel.members.iter().map(|&f| c.cod(f)).collect();
    let module = CrossedModule::new(kernel_group.clone(), objects.clone(), boundary, dot, ws)?;
    Ok(KernelExtension {
        arrows,
        objects,
        kernel,
        kernel_group,
        j,
        d0,
        i,
        action,
        module,
    })
}
