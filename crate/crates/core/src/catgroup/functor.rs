//! Strict morphisms of categorical groups.

use alloc::format;
use alloc::vec::Vec;

use super::CatGroup;
use crate::cgroup::{check_len, check_range};
use crate::error::Result;
use crate::report::{first_failure, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatGroupFunctor {
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
}

impl CatGroupFunctor {
    pub fn identity(c: &CatGroup) -> Self {
        CatGroupFunctor {
            f0: (0..c.n_objects()).collect(),
            f1: (0..c.n_arrows()).collect(),
        }
    }

    /// `next ∘ self`
    pub fn then(&self, next: &CatGroupFunctor) -> Self {
        CatGroupFunctor {
            f0: self.f0.iter().map(|&x| next.f0[x]).collect(),
            f1: self.f1.iter().map(|&f| next.f1[f]).collect(),
        }
    }
}

pub fn validate_functor(
    src: &CatGroup,
    tgt: &CatGroup,
    t: &CatGroupFunctor,
) -> Result<ValidationReport> {
    check_len("f0", &t.f0, src.n_objects())?;
    check_range("f0", &t.f0, tgt.n_objects())?;
    check_len("f1", &t.f1, src.n_arrows())?;
    check_range("f1", &t.f1, tgt.n_arrows())?;
    let (n0, n1) = (src.n_objects(), src.n_arrows());
    let (f0, f1) = (|x: usize| t.f0[x], |f: usize| t.f1[f]);
    let on = |x: usize| src.object_name(x);
    let an = |f: usize| src.arrow_name(f);
    let mut r = ValidationReport::new("functor");
    r.record(
        "endpoints",
        first_failure(0..n1, |f| {
            (tgt.dom(f1(f)) != f0(src.dom(f)) || tgt.cod(f1(f)) != f0(src.cod(f)))
                .then(|| format!("f={}", an(f)))
        }),
    );
    r.record(
        "identities",
        first_failure(0..n0, |x| {
            (f1(src.id(x)) != tgt.id(f0(x))).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "composition",
        first_failure(
            (0..n1).flat_map(|g| (0..n1).map(move |f| (g, f))),
            |(g, f)| {
                let h = src.comp(g, f)?;
                (Some(f1(h)) != tgt.comp(f1(g), f1(f))).then(|| format!("g={}, f={}", an(g), an(f)))
            },
        ),
    );
    r.record(
        "object-sum",
        first_failure(
            (0..n0).flat_map(|x| (0..n0).map(move |y| (x, y))),
            |(x, y)| {
                (f0(src.oadd(x, y)) != tgt.oadd(f0(x), f0(y)))
                    .then(|| format!("x={}, y={}", on(x), on(y)))
            },
        ),
    );
    r.record(
        "arrow-sum",
        first_failure(
            (0..n1).flat_map(|f| (0..n1).map(move |g| (f, g))),
            |(f, g)| {
                (f1(src.aadd(f, g)) != tgt.aadd(f1(f), f1(g)))
                    .then(|| format!("f={}, g={}", an(f), an(g)))
            },
        ),
    );
    r.record(
        "zero",
        if f0(src.zero()) == tgt.zero() {
            Ok(())
        } else {
            Err(format!("T0 = {}", tgt.object_name(f0(src.zero()))))
        },
    );
    r.record(
        "alpha",
        first_failure(
            (0..n0).flat_map(|x| (0..n0).flat_map(move |y| (0..n0).map(move |z| (x, y, z)))),
            |(x, y, z)| {
                (f1(src.alpha(x, y, z)) != tgt.alpha(f0(x), f0(y), f0(z)))
                    .then(|| format!("x={}, y={}, z={}", on(x), on(y), on(z)))
            },
        ),
    );
    r.record(
        "lambda",
        first_failure(0..n0, |x| {
            (f1(src.lambda(x)) != tgt.lambda(f0(x))).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "rho",
        first_failure(0..n0, |x| {
            (f1(src.rho(x)) != tgt.rho(f0(x))).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "object-negation",
        first_failure(0..n0, |x| {
            (f0(src.oneg(x)) != tgt.oneg(f0(x))).then(|| format!("x={}", on(x)))
        }),
    );
    r.record(
        "arrow-negation",
        first_failure(0..n1, |f| {
            (f1(src.aneg(f)) != tgt.aneg(f1(f))).then(|| format!("f={}", an(f)))
        }),
    );
    Ok(r)
}
