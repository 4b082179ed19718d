//! Executable forms of the structural facts about categorical groups.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::star::{ker_d0_subset, ker_d1_subset};
use super::CatGroup;
use crate::report::{first_failure, ValidationReport};

/// `f ∘ g` and `(f - 1_{d0 f}) + g` are weakly specially isomorphic for
/// every composable pair.
pub fn check_comp_via_add(c: &CatGroup) -> ValidationReport {
    let n1 = c.n_arrows();
    let mut r = ValidationReport::new("composition via addition");
    r.record(
        "comp-via-add",
        first_failure(
            (0..n1).flat_map(|f| (0..n1).map(move |g| (f, g))),
            |(f, g)| {
                let fg = c.comp(f, g)?;
                let rhs = c.aadd(c.aadd(f, c.aneg(c.id(c.dom(f)))), g);
                (!c.weakly_special_iso(fg, rhs)).then(|| {
                    format!(
                        "f={}, g={}: {} vs {}",
                        c.arrow_name(f),
                        c.arrow_name(g),
                        c.arrow_name(fg),
                        c.arrow_name(rhs)
                    )
                })
            },
        ),
    );
    r
}

/// `f + g` and `g + f` are weakly specially isomorphic for `f ∈ Ker d1`,
/// `g ∈ Ker d0`.
pub fn check_ker_commute(c: &CatGroup) -> ValidationReport {
    let k1 = ker_d1_subset(c);
    let k0 = ker_d0_subset(c);
    let mut r = ValidationReport::new("kernel commutation");
    r.record(
        "ker-commute",
        first_failure(
            k1.members
                .iter()
                .flat_map(|&f| k0.members.iter().map(move |&g| (f, g))),
            |(f, g)| {
                let (a, b) = (c.aadd(f, g), c.aadd(g, f));
                (!c.weakly_special_iso(a, b)).then(|| {
                    format!(
                        "f={}, g={}: {} vs {}",
                        c.arrow_name(f),
                        c.arrow_name(g),
                        c.arrow_name(a),
                        c.arrow_name(b)
                    )
                })
            },
        ),
    );
    r
}

/// `-1_x = 1_{-x}` for every object.
pub fn check_neg_identity(c: &CatGroup) -> ValidationReport {
    let mut r = ValidationReport::new("negated identities");
    r.record(
        "neg-identity",
        first_failure(0..c.n_objects(), |x| {
            (c.aneg(c.id(x)) != c.id(c.oneg(x))).then(|| format!("x={}", c.object_name(x)))
        }),
    );
    r
}

/// Parallel special isomorphisms, grouped by endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceDiagnostic {
    /// `(dom, cod, isos)` for every pair of objects joined by a special iso.
    pub sites: Vec<(usize, usize, Vec<usize>)>,
}

impl CoherenceDiagnostic {
    /// Sites carrying more than one special isomorphism.
    pub fn collisions(&self) -> impl Iterator<Item = &(usize, usize, Vec<usize>)> {
        self.sites.iter().filter(|s| s.2.len() > 1)
    }

    pub fn is_clean(&self) -> bool {
        self.collisions().next().is_none()
    }
}

pub fn coherence_diagnostic(c: &CatGroup) -> CoherenceDiagnostic {
    let mut sites = Vec::new();
    for x in 0..c.n_objects() {
        for y in 0..c.n_objects() {
            let mut isos: Vec<usize> = c.special().between(x, y).to_vec();
            if !isos.is_empty() {
                isos.sort_unstable();
                sites.push((x, y, isos));
            }
        }
    }
    CoherenceDiagnostic { sites }
}

pub struct DiagnosticDisplay<'a>(pub &'a CatGroup, pub &'a CoherenceDiagnostic);

impl fmt::Display for DiagnosticDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        for (x, y, isos) in &self.1.sites {
            write!(f, "{} -> {}:", c.object_name(*x), c.object_name(*y))?;
            for &i in isos {
                write!(f, " {}", c.arrow_name(i))?;
            }
            if isos.len() > 1 {
                write!(f, "  [{} parallel]", isos.len())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::group::FiniteGroup;

    #[test]
    fn diagnostic_examples() {
        let d = gen::gen_discrete(&FiniteGroup::cyclic(2));
        assert!(coherence_diagnostic(&d).is_clean());
        let b = gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap();
        let diag = coherence_diagnostic(&b);
        assert_eq!(diag.sites, alloc::vec![(0, 0, alloc::vec![b.id(0)])]);
        let s = gen::skz2();
        let one = s.object_index("1").unwrap();
        let diag = coherence_diagnostic(&s);
        let site = diag
            .collisions()
            .find(|t| t.0 == one && t.1 == one)
            .unwrap();
        assert!(site.2.contains(&s.id(one)) && site.2.contains(&s.alpha(one, one, one)));
    }

    #[test]
    fn lemmas_on_small_instances() {
        for c in [
            gen::gen_discrete(&FiniteGroup::cyclic(2)),
            gen::gen_delooping(&FiniteGroup::cyclic(2)).unwrap(),
            gen::skz2(),
        ] {
            assert!(check_comp_via_add(&c).passed());
            assert!(check_ker_commute(&c).passed());
            assert!(check_neg_identity(&c).passed());
        }
    }

    #[test]
    fn kernel_commutation_needs_exact_kernels_on_s3() {
        // With "isomorphic to 0" kernels the identity crossed module on S3
        // gives a counterexample; with exact kernels (d0 f = 0 = d1 g) the
        // commutation holds.
        let s3 = FiniteGroup::symmetric3();
        let cm = gen::ClassicalCrossedModule::conjugation(&s3, &s3, (0..6).collect()).unwrap();
        let c = gen::gen_brown_spencer(&cm).unwrap();
        assert!(!check_ker_commute(&c).passed());
        let z = c.zero();
        for f in (0..c.n_arrows()).filter(|&f| c.cod(f) == z) {
            for g in (0..c.n_arrows()).filter(|&g| c.dom(g) == z) {
                assert!(c.weakly_special_iso(c.aadd(f, g), c.aadd(g, f)));
            }
        }
    }
}
