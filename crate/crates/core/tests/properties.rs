mod common;

use std::collections::BTreeSet;

use common::*;
use cssc_core::catgroup::lemmas::{check_comp_via_add, check_ker_commute, check_neg_identity};
use cssc_core::catgroup::validate_catgroup;
use cssc_core::crossmod::is_cssc;
use cssc_core::equivalence::{verify_lt, verify_tl};
use cssc_core::functors::{l0, l1, t0, t1};
use cssc_core::gen::{
    gen_brown_spencer, gen_delooping, gen_discrete, gen_product, gen_skeletal_cocycle,
    ClassicalCrossedModule,
};
use cssc_core::{CatGroup, CatGroupFunctor, CrossedModuleMorphism, FiniteGroup, Limits};
use proptest::prelude::*;

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Z/m ⊴ Z/n` for `m | n`, with the induced (trivial) conjugation.
fn brown_spencer(n: usize, m: usize) -> CatGroup {
    let cm = ClassicalCrossedModule::conjugation(
        &FiniteGroup::cyclic(m),
        &FiniteGroup::cyclic(n),
        (0..m).map(|x| x * (n / m)).collect(),
    )
    .unwrap();
    gen_brown_spencer(&cm).unwrap()
}

fn arb_strict_small() -> impl Strategy<Value = (String, CatGroup)> {
    prop_oneof![
        (1usize..=5).prop_map(|n| (format!("DZ{n}"), gen_discrete(&FiniteGroup::cyclic(n)))),
        (1usize..=5).prop_map(|n| (
            format!("BZ{n}"),
            gen_delooping(&FiniteGroup::cyclic(n)).unwrap()
        )),
        (1usize..=6)
            .prop_flat_map(|n| (Just(n), proptest::sample::select(divisors(n))))
            .prop_map(|(n, m)| (format!("BS(Z{m}<Z{n})"), brown_spencer(n, m))),
    ]
}

fn arb_strict() -> impl Strategy<Value = (String, CatGroup)> {
    prop_oneof![
        3 => arb_strict_small(),
        1 => (arb_strict_small(), arb_strict_small())
            .prop_filter("keep products small", |((_, a), (_, b))| a.n_arrows() * b.n_arrows() <= 24)
            .prop_map(|((na, a), (nb, b))| (format!("{na}*{nb}"), gen_product(&a, &b).unwrap())),
    ]
}

/// Skeletal `Z2`-graded instances over `Z/2k` with `ω(1,1,1) ∈ {0, k}`.
fn arb_skeletal() -> impl Strategy<Value = CatGroup> {
    (1usize..=3, any::<bool>()).prop_map(|(k, twisted)| {
        let mut omega = vec![0; 8];
        if twisted {
            omega[7] = k;
        }
        gen_skeletal_cocycle(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2 * k), &omega).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_instances_validate((name, c) in arb_strict()) {
        let r = validate_catgroup(&c);
        prop_assert!(r.passed(), "{name}: {r}");
        for r in [check_comp_via_add(&c), check_ker_commute(&c), check_neg_identity(&c)] {
            prop_assert!(r.passed(), "{name}: {r}");
        }
    }

    #[test]
    fn cocycle_models_validate(c in arb_skeletal()) {
        prop_assert!(validate_catgroup(&c).passed());
        prop_assert!(check_neg_identity(&c).passed());
    }

    #[test]
    fn l_images_of_strict_instances_are_cssc((name, c) in arb_strict()) {
        let l = l0(&c).unwrap();
        prop_assert!(is_cssc(&l.module), "{name}");
        prop_assert_eq!(naive_cssc(&l.module), Ok(()));
    }

    #[test]
    fn cssc_verdict_matches_oracle(c in arb_skeletal()) {
        let l = l0(&c).unwrap();
        prop_assert_eq!(is_cssc(&l.module), naive_cssc(&l.module).is_ok());
    }

    #[test]
    fn tl_round_trip_is_exact((name, c) in arb_strict()) {
        let r = verify_tl(&name, &c, &Limits::default());
        prop_assert!(r.passed(), "{r}");
    }

    #[test]
    fn lt_round_trip_is_exact((name, c) in arb_strict()) {
        let x = l0(&c).unwrap().module;
        let r = verify_lt(&name, &x, &Limits::default());
        prop_assert!(r.passed(), "{r}");
    }

    #[test]
    fn t_images_are_coherent((name, c) in arb_strict()) {
        let t = t0(&l0(&c).unwrap().module, &Limits::default()).unwrap();
        prop_assert!(validate_catgroup(&t.catgroup).passed(), "{name}");
        let sp: Vec<usize> = naive_special_isos(&t.catgroup).into_iter().collect();
        for &f in &sp {
            for &g in &sp {
                let parallel = t.catgroup.dom(f) == t.catgroup.dom(g) && t.catgroup.cod(f) == t.catgroup.cod(g);
                prop_assert!(!parallel || f == g, "{name}: {} {}", t.catgroup.arrow_name(f), t.catgroup.arrow_name(g));
            }
        }
    }

    #[test]
    fn canonical_operations_match_oracle((name, c) in arb_strict()) {
        let t = t0(&l0(&c).unwrap().module, &Limits::default()).unwrap();
        let errs = oracle_ops(&name, &t);
        prop_assert!(errs.is_empty(), "{errs:?}");
    }

    #[test]
    fn closures_match_oracle((name, c) in arb_strict()) {
        let ours: BTreeSet<usize> = c.special().sorted().into_iter().collect();
        prop_assert_eq!(ours, naive_special_isos(&c), "{}", name);
        let l = l0(&c).unwrap();
        for g in [l.module.source(), l.module.target()] {
            let naive = naive_special_pairs(g);
            for a in 0..g.len() {
                for b in 0..g.len() {
                    prop_assert_eq!(g.special_pair(a, b), naive.contains(&(a, b)));
                }
            }
        }
    }

    #[test]
    fn identities_are_preserved((_name, c) in arb_strict()) {
        let l = l0(&c).unwrap();
        prop_assert_eq!(l1(&l, &l, &CatGroupFunctor::identity(&c)).unwrap(), CrossedModuleMorphism::identity(&l.module));
        let t = t0(&l.module, &Limits::default()).unwrap();
        let id = t1(&t, &t, &CrossedModuleMorphism::identity(&l.module)).unwrap();
        prop_assert_eq!(id, CatGroupFunctor::identity(&t.catgroup));
    }
}
