//! Named instances and functor edges used by the round-trip suite.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catgroup::{CatGroup, CatGroupFunctor};
use crate::cgroup::CGroup;
use crate::crossmod::{CrossedModule, CrossedModuleMorphism};
use crate::gen::{self, ClassicalCrossedModule};
use crate::group::FiniteGroup;
use crate::relation::{Partition, Relation};

/// A functor between two named corpus entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorEdge {
    pub name: String,
    pub source: String,
    pub target: String,
    pub functor: CatGroupFunctor,
}

/// A crossed-module morphism between two named corpus modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismEdge {
    pub name: String,
    pub source: String,
    pub target: String,
    pub morphism: CrossedModuleMorphism,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub catgroups: Vec<(String, CatGroup)>,
    pub modules: Vec<(String, CrossedModule)>,
    pub functors: Vec<FunctorEdge>,
    pub morphisms: Vec<MorphismEdge>,
}

impl Corpus {
    pub fn catgroup(&self, name: &str) -> Option<&CatGroup> {
        self.catgroups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
    }

    pub fn module(&self, name: &str) -> Option<&CrossedModule> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, x)| x)
    }

    /// Pairs `(t, u)` with `t.target == u.source`.
    pub fn composable_pairs(&self) -> Vec<(&FunctorEdge, &FunctorEdge)> {
        let mut out = Vec::new();
        for t in &self.functors {
            for u in &self.functors {
                if t.target == u.source {
                    out.push((t, u));
                }
            }
        }
        out
    }

    pub fn composable_morphism_pairs(&self) -> Vec<(&MorphismEdge, &MorphismEdge)> {
        let mut out = Vec::new();
        for m in &self.morphisms {
            for n in &self.morphisms {
                if m.target == n.source {
                    out.push((m, n));
                }
            }
        }
        out
    }
}

/// The two-element c-group with `x0 + x0 = x1` and every other sum `x0`,
/// all elements congruent.
pub fn x2tot() -> CGroup {
    CGroup::new(
        alloc::vec!["x0".into(), "x1".into()],
        alloc::vec![1, 0, 0, 0],
        0,
        alloc::vec![0, 1],
        Partition::total(2),
    )
    .expect("well formed")
}

/// `1: X2tot → X2tot` acting by `b·a = b + (a - b)`, everything weakly
/// special congruent.
pub fn x2tot_module() -> CrossedModule {
    let g = x2tot();
    let action = (0..4).map(|k| g.add(k / 2, g.sub(k % 2, k / 2))).collect();
    CrossedModule::new(
        g.clone(),
        g,
        alloc::vec![0, 1],
        action,
        Relation::from_pairs(2, (0..4).map(|k| (k / 2, k % 2))).unwrap(),
    )
    .expect("well formed")
}

/// The automorphism of the X2tot module exchanging `x0` and `x1`
/// on both sides.
pub fn x2tot_swap() -> CrossedModuleMorphism {
    let swap = crate::cgroup::CMorphism::new(alloc::vec![1, 0]);
    CrossedModuleMorphism {
        f: swap.clone(),
        g: swap,
    }
}

/// Functor whose object and arrow maps are given on names.
fn by_name(
    src: &CatGroup,
    tgt: &CatGroup,
    obj: impl Fn(&str) -> String,
    arr: impl Fn(&CatGroup, usize) -> usize,
) -> CatGroupFunctor {
    let f0 = (0..src.n_objects())
        .map(|x| {
            let n = obj(src.object_name(x));
            tgt.object_index(&n)
                .unwrap_or_else(|| panic!("no object {n}"))
        })
        .collect();
    CatGroupFunctor {
        f0,
        f1: (0..src.n_arrows()).map(|f| arr(src, f)).collect(),
    }
}

/// Sends every arrow to the identity of the image of its domain.
fn to_identities(src: &CatGroup, tgt: &CatGroup, obj: impl Fn(&str) -> String) -> CatGroupFunctor {
    let mut t = by_name(src, tgt, obj, |_, _| 0);
    t.f1 = (0..src.n_arrows())
        .map(|f| tgt.id(t.f0[src.dom(f)]))
        .collect();
    t
}

fn parity(name: &str) -> String {
    format!("{}", name.parse::<usize>().expect("numeric object") % 2)
}

/// Second projection `c1 × c2 → c2` of [`gen::gen_product`].
pub fn second_projection(c1: &CatGroup, c2: &CatGroup, p: &CatGroup) -> CatGroupFunctor {
    let mut f0 = alloc::vec![0; p.n_objects()];
    for x in 0..c1.n_objects() {
        for y in 0..c2.n_objects() {
            f0[p.object_index(&format!("({},{})", c1.object_name(x), c2.object_name(y)))
                .unwrap()] = y;
        }
    }
    let mut f1 = alloc::vec![0; p.n_arrows()];
    for f in 0..c1.n_arrows() {
        for g in 0..c2.n_arrows() {
            f1[p.arrow_index(&format!("({},{})", c1.arrow_name(f), c2.arrow_name(g)))
                .unwrap()] = g;
        }
    }
    CatGroupFunctor { f0, f1 }
}

pub fn default_corpus() -> Corpus {
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);
    let dz2 = gen::gen_discrete(&z2);
    let dz4 = gen::gen_discrete(&z4);
    let d1 = gen::gen_discrete(&FiniteGroup::trivial());
    let bz2 = gen::gen_delooping(&z2).expect("abelian");
    let bz3 = gen::gen_delooping(&FiniteGroup::cyclic(3)).expect("abelian");
    let sk = gen::skz2();
    let cm =
        ClassicalCrossedModule::conjugation(&z2, &z4, alloc::vec![0, 2]).expect("normal subgroup");
    let bs = gen::gen_brown_spencer(&cm).expect("valid crossed module");
    let id4 = ClassicalCrossedModule::conjugation(&z4, &z4, (0..4).collect()).expect("whole group");
    let bs4 = gen::gen_brown_spencer(&id4).expect("valid crossed module");
    let cod = gen::codiscrete_pair();
    let cod_b = gen::gen_product(&cod, &bz2).expect("well formed");

    let edge = |name: &str, s: &str, t: &str, functor| FunctorEdge {
        name: name.into(),
        source: s.into(),
        target: t.into(),
        functor,
    };
    let functors = alloc::vec![
        edge("DZ4->DZ2", "DZ4", "DZ2", to_identities(&dz4, &dz2, parity)),
        edge(
            "DZ2->BZ2",
            "DZ2",
            "BZ2",
            to_identities(&dz2, &bz2, |_| "*".into())
        ),
        edge(
            "BS->DZ2",
            "BS(Z2<Z4)",
            "DZ2",
            to_identities(&bs, &dz2, parity)
        ),
        edge(
            "DZ2->BS",
            "DZ2",
            "BS(Z2<Z4)",
            to_identities(&dz2, &bs, |x| format!(
                "{}",
                2 * x.parse::<usize>().unwrap()
            ))
        ),
        edge(
            "Cod*BZ2->BZ2",
            "Cod*BZ2",
            "BZ2",
            second_projection(&cod, &bz2, &cod_b)
        ),
        edge(
            "BZ2->D1",
            "BZ2",
            "D1",
            to_identities(&bz2, &d1, |_| "0".into())
        ),
        edge("BZ2->BZ2", "BZ2", "BZ2", CatGroupFunctor::identity(&bz2)),
    ];
    Corpus {
        catgroups: alloc::vec![
            ("BS(Z2<Z4)".into(), bs),
            ("BS(Z4=Z4)".into(), bs4),
            ("BZ2".into(), bz2),
            ("BZ3".into(), bz3),
            ("Cod".into(), cod),
            ("Cod*BZ2".into(), cod_b),
            ("D1".into(), d1),
            ("DZ2".into(), dz2),
            ("DZ4".into(), dz4),
            ("SkZ2".into(), sk),
        ],
        modules: alloc::vec![("X2tot".into(), x2tot_module())],
        functors,
        morphisms: alloc::vec![MorphismEdge {
            name: "X2tot-swap".into(),
            source: "X2tot".into(),
            target: "X2tot".into(),
            morphism: x2tot_swap(),
        }],
    }
}
