//! Groups up to congruence.
//!
//! A [`CGroup`] is a finite set with an addition table, a chosen zero and
//! negation, and a partition `rel` such that the group axioms hold up to
//! `rel`. The subrelation of special congruences (the congruence generated
//! by the axiom instances) is computed when the value is built.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::crossmod::{validate_action, CAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::relation::{Partition, UnionFind};
use crate::report::{first_failure, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CGroup {
    names: Vec<String>,
    add: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
    rel: Partition,
    special: Partition,
}

/// Sorts `names`, returning the sorted list and the map old index -> new
/// index. Rejects empty and duplicate carriers.
pub(crate) fn sort_names(names: Vec<String>) -> Result<(Vec<String>, Vec<usize>)> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    for w in order.windows(2) {
        if names[w[0]] == names[w[1]] {
            return Err(Error::DuplicateName(names[w[0]].clone()));
        }
    }
    let mut new_of_old = vec![0; names.len()];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut slots: Vec<Option<String>> = names.into_iter().map(Some).collect();
    let sorted = order
        .iter()
        .map(|&old| slots[old].take().unwrap())
        .collect();
    Ok((sorted, new_of_old))
}

pub(crate) fn check_range(table: &'static str, values: &[usize], n: usize) -> Result<()> {
    match values.iter().position(|&v| v >= n) {
        Some(i) => Err(Error::MalformedTable {
            table,
            detail: format!("entry {i} is {}, outside carrier of size {n}", values[i]),
        }),
        None => Ok(()),
    }
}

pub(crate) fn check_len(table: &'static str, values: &[usize], len: usize) -> Result<()> {
    if values.len() != len {
        return Err(Error::MalformedTable {
            table,
            detail: format!("expected {len} entries, found {}", values.len()),
        });
    }
    Ok(())
}

impl CGroup {
    /// Builds a c-group from tables indexed by the positions of `names`.
    /// Elements are re-indexed in lexicographic name order. The axioms are
    /// not checked here; see [`validate_cgroup`].
    pub fn new(
        names: Vec<String>,
        add: Vec<usize>,
        zero: usize,
        neg: Vec<usize>,
        rel: Partition,
    ) -> Result<Self> {
        let n = names.len();
        check_len("add", &add, n * n)?;
        check_range("add", &add, n)?;
        check_len("neg", &neg, n)?;
        check_range("neg", &neg, n)?;
        check_range("zero", &[zero], n)?;
        if rel.len() != n {
            return Err(Error::MalformedTable {
                table: "rel",
                detail: format!("partition of {} elements for a carrier of {n}", rel.len()),
            });
        }
        let (names, p) = sort_names(names)?;
        let mut add2 = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add2[p[a] * n + p[b]] = p[add[a * n + b]];
            }
        }
        let mut neg2 = vec![0; n];
        for a in 0..n {
            neg2[p[a]] = p[neg[a]];
        }
        let mut g = CGroup {
            names,
            add: add2,
            zero: p[zero],
            neg: neg2,
            rel: rel.permute(&p),
            special: Partition::discrete(n),
        };
        g.special = special_closure(&g);
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    /// `a + (-b)`
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn rel(&self) -> &Partition {
        &self.rel
    }

    pub fn special(&self) -> &Partition {
        &self.special
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rel.related(a, b)
    }

    pub fn special_pair(&self, a: usize, b: usize) -> bool {
        self.special.related(a, b)
    }

    pub(crate) fn fmt_elems(&self, xs: &[usize]) -> String {
        let mut s = String::from("(");
        for (i, &x) in xs.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&self.names[x]);
        }
        s.push(')');
        s
    }
}

/// The axiom-instance pairs: associativity, both unit laws and both
/// inverse laws, for every choice of elements.
pub fn axiom_pairs(g: &CGroup) -> Vec<(usize, usize)> {
    let n = g.len();
    let mut out = Vec::with_capacity(n * n * n + 4 * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push((g.add(a, g.add(b, c)), g.add(g.add(a, b), c)));
            }
        }
    }
    for a in 0..n {
        out.push((g.add(a, g.zero), a));
        out.push((g.add(g.zero, a), a));
        out.push((g.add(a, g.neg(a)), g.zero));
        out.push((g.add(g.neg(a), a), g.zero));
    }
    out
}

/// Least equivalence containing `seed` that is closed under sums of pairs.
///
/// Works on a union-find: once every element is joined to its class root
/// in both summand positions, every pair of related pairs has related sums.
pub fn close_under_sums(g: &CGroup, seed: impl IntoIterator<Item = (usize, usize)>) -> Partition {
    let n = g.len();
    let mut uf = UnionFind::new(n);
    for (a, b) in seed {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            let ra = uf.find(a);
            if ra == a {
                continue;
            }
            for c in 0..n {
                changed |= uf.union(g.add(a, c), g.add(ra, c));
                changed |= uf.union(g.add(c, a), g.add(c, ra));
            }
        }
        if !changed {
            break;
        }
    }
    Partition::from_union_find(&mut uf)
}

/// The special congruences of `g`.
pub fn special_closure(g: &CGroup) -> Partition {
    close_under_sums(g, axiom_pairs(g))
}

pub fn validate_cgroup(g: &CGroup) -> ValidationReport {
    let n = g.len();
    let mut r = ValidationReport::new("c-group");
    let rel = &g.rel;
    r.record(
        "congruence",
        first_failure(
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))),
            |(a, b)| {
                let (a1, b1) = (rel.rep(a), rel.rep(b));
                (!rel.related(g.add(a, b), g.add(a1, b1))).then(|| {
                    format!(
                        "a={}, a1={}, b={}, b1={}: a+b={} but a1+b1={}",
                        g.name(a),
                        g.name(a1),
                        g.name(b),
                        g.name(b1),
                        g.name(g.add(a, b)),
                        g.name(g.add(a1, b1))
                    )
                })
            },
        ),
    );
    r.record(
        "associativity",
        first_failure(
            (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))),
            |(a, b, c)| {
                let (l, rr) = (g.add(a, g.add(b, c)), g.add(g.add(a, b), c));
                (!rel.related(l, rr)).then(|| {
                    format!(
                        "a={}, b={}, c={}: {} vs {}",
                        g.name(a),
                        g.name(b),
                        g.name(c),
                        g.name(l),
                        g.name(rr)
                    )
                })
            },
        ),
    );
    r.record(
        "unit",
        first_failure(0..n, |a| {
            (!rel.related(g.add(a, g.zero), a) || !rel.related(g.add(g.zero, a), a))
                .then(|| format!("a={}", g.name(a)))
        }),
    );
    r.record(
        "inverses",
        first_failure(0..n, |a| {
            (!rel.related(g.add(a, g.neg(a)), g.zero) || !rel.related(g.add(g.neg(a), a), g.zero))
                .then(|| format!("a={}", g.name(a)))
        }),
    );
    r.record(
        "special-within-rel",
        first_failure(0..n, |a| {
            let s = g.special.rep(a);
            (!rel.related(a, s))
                .then(|| format!("special pair ({}, {}) is not in rel", g.name(s), g.name(a)))
        }),
    );
    r
}

pub fn is_connected(g: &CGroup) -> bool {
    g.rel.is_total()
}

/// A c-group morphism, given by its table. Source and target are passed
/// alongside wherever they are needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CMorphism {
    pub map: Vec<usize>,
}

impl CMorphism {
    pub fn new(map: Vec<usize>) -> Self {
        CMorphism { map }
    }

    pub fn identity(n: usize) -> Self {
        CMorphism {
            map: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        CMorphism {
            map: vec![value; n],
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`
    pub fn then(&self, next: &CMorphism) -> CMorphism {
        CMorphism {
            map: self.map.iter().map(|&a| next.map[a]).collect(),
        }
    }
}

pub fn check_map_shape(
    src: &CGroup,
    tgt: &CGroup,
    map: &[usize],
    table: &'static str,
) -> Result<()> {
    check_len(table, map, src.len())?;
    check_range(table, map, tgt.len())
}

pub fn validate_morphism(src: &CGroup, tgt: &CGroup, m: &CMorphism) -> Result<ValidationReport> {
    check_map_shape(src, tgt, &m.map, "map")?;
    let n = src.len();
    let f = |a: usize| m.map[a];
    let mut r = ValidationReport::new("c-group morphism");
    r.record(
        "additivity",
        first_failure(
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))),
            |(a, b)| {
                (f(src.add(a, b)) != tgt.add(f(a), f(b))).then(|| {
                    format!(
                        "({}, {}): f(a+b)={} but f(a)+f(b)={}",
                        src.name(a),
                        src.name(b),
                        tgt.name(f(src.add(a, b))),
                        tgt.name(tgt.add(f(a), f(b)))
                    )
                })
            },
        ),
    );
    r.record(
        "preserves-rel",
        first_failure(0..n, |a| {
            let b = src.rel.rep(a);
            (!tgt.related(f(a), f(b))).then(|| format!("({}, {})", src.name(b), src.name(a)))
        }),
    );
    r.record(
        "preserves-special",
        first_failure(0..n, |a| {
            let b = src.special.rep(a);
            (!tgt.special_pair(f(a), f(b))).then(|| format!("({}, {})", src.name(b), src.name(a)))
        }),
    );
    Ok(r)
}

/// A subset of a c-group's carrier, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CSubset {
    pub members: Vec<usize>,
}

impl CSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        CSubset { members }
    }

    pub fn whole(g: &CGroup) -> Self {
        CSubset {
            members: (0..g.len()).collect(),
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of `a` within the members, i.e. its index in the induced
    /// c-group.
    pub fn position(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    fn check_in(&self, g: &CGroup) -> Result<()> {
        match self.members.iter().find(|&&a| a >= g.len()) {
            Some(&a) => Err(Error::ElementOutsideParent(a)),
            None => Ok(()),
        }
    }
}

pub fn c_kernel(src: &CGroup, tgt: &CGroup, m: &CMorphism) -> CSubset {
    CSubset::new(
        (0..src.len())
            .filter(|&a| tgt.related(m.map[a], tgt.zero))
            .collect(),
    )
}

pub fn c_image(src: &CGroup, tgt: &CGroup, m: &CMorphism) -> CSubset {
    let _ = src;
    CSubset::new(
        (0..tgt.len())
            .filter(|&b| m.map.iter().any(|&fa| tgt.related(fa, b)))
            .collect(),
    )
}

/// `a ∈̃ h`: some member of `h` is congruent to `a`.
pub fn inc(g: &CGroup, a: usize, h: &CSubset) -> Result<bool> {
    h.check_in(g)?;
    if a >= g.len() {
        return Err(Error::ElementOutsideParent(a));
    }
    Ok(h.members.iter().any(|&b| g.related(a, b)))
}

pub fn incs(g: &CGroup, h: &CSubset, h2: &CSubset) -> Result<bool> {
    h.check_in(g)?;
    h2.check_in(g)?;
    for &a in &h.members {
        if !inc(g, a, h2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g + h - g ∈̃ H` for all `g` and all members `h`.
pub fn is_normal(g: &CGroup, h: &CSubset) -> bool {
    normal_violation(g, h).is_none()
}

pub fn normal_violation(g: &CGroup, h: &CSubset) -> Option<(usize, usize)> {
    (0..g.len())
        .flat_map(|x| h.members.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| {
            let c = g.sub(g.add(x, y), x);
            !h.members.iter().any(|&b| g.related(c, b))
        })
}

/// `a ∈̃ H` implies `a ∈ H`.
pub fn is_perfect(g: &CGroup, h: &CSubset) -> bool {
    (0..g.len()).all(|a| h.contains(a) || !h.members.iter().any(|&b| g.related(a, b)))
}

/// The c-group induced on `h` (relation `rel ∩ (H × H)`). The subset must
/// contain zero and be closed under addition and negation.
pub fn induced(g: &CGroup, h: &CSubset) -> Result<CGroup> {
    h.check_in(g)?;
    if !h.contains(g.zero) {
        return Err(Error::NotASubgroup(format!(
            "zero `{}` is missing",
            g.name(g.zero)
        )));
    }
    let k = h.len();
    let pos = |a: usize| h.position(a);
    let mut add = Vec::with_capacity(k * k);
    for &a in &h.members {
        for &b in &h.members {
            let s = g.add(a, b);
            add.push(pos(s).ok_or_else(|| {
                Error::NotASubgroup(format!(
                    "{} + {} = {} leaves the subset",
                    g.name(a),
                    g.name(b),
                    g.name(s)
                ))
            })?);
        }
    }
    let mut neg = Vec::with_capacity(k);
    for &a in &h.members {
        let s = g.neg(a);
        neg.push(pos(s).ok_or_else(|| {
            Error::NotASubgroup(format!("-{} = {} leaves the subset", g.name(a), g.name(s)))
        })?);
    }
    let labels: Vec<usize> = h.members.iter().map(|&a| g.rel.rep(a)).collect();
    let names = h.members.iter().map(|&a| g.names[a].clone()).collect();
    CGroup::new(
        names,
        add,
        pos(g.zero).unwrap(),
        neg,
        Partition::from_labels(&labels),
    )
}

/// A group as a c-group whose relation is equality.
pub fn from_group(grp: &FiniteGroup) -> CGroup {
    let n = grp.order();
    let neg = (0..n).map(|a| grp.neg(a)).collect();
    CGroup::new(
        grp.names().to_vec(),
        grp.add_table().to_vec(),
        grp.zero(),
        neg,
        Partition::discrete(n),
    )
    .expect("a finite group is a well-formed c-group")
}

#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    pub group: CGroup,
    /// `(b, a)` for each element of `group`.
    pub pairs: Vec<(usize, usize)>,
    /// Projection `p'` onto the acting c-group.
    pub projection: CMorphism,
    /// `c_kernel(p')`, with its induced c-group.
    pub kernel: CSubset,
    pub kernel_group: CGroup,
    /// `a ↦ (0, a)` into `kernel_group`.
    pub inclusion: CMorphism,
    /// `(b, a) ↦ a` out of `kernel_group`.
    pub restriction: CMorphism,
}

impl SemidirectProduct {
    pub fn index_of(&self, b: usize, a: usize) -> usize {
        self.pairs
            .iter()
            .position(|&p| p == (b, a))
            .expect("pair in carrier")
    }
}

/// `B ⋉ A` with `(b', a') + (b, a) = (b' + b, a' + b'·a)`.
pub fn semidirect_product(b: &CGroup, a: &CGroup, act: &CAction) -> Result<SemidirectProduct> {
    let report = validate_action(b, a, act)?;
    if let Some(c) = report.failures().next() {
        return Err(Error::InvalidAction(format!("{c}")));
    }
    let (nb, na) = (b.len(), a.len());
    let idx = |x: usize, y: usize| x * na + y;
    let mut names = Vec::with_capacity(nb * na);
    for x in 0..nb {
        for y in 0..na {
            names.push(format!("({},{})", b.name(x), a.name(y)));
        }
    }
    let mut add = Vec::with_capacity(nb * na * nb * na);
    for p in 0..nb * na {
        let (b1, a1) = (p / na, p % na);
        for q in 0..nb * na {
            let (b2, a2) = (q / na, q % na);
            add.push(idx(b.add(b1, b2), a.add(a1, act.act(b1, a2))));
        }
    }
    let neg = (0..nb * na)
        .map(|p| {
            let (x, y) = (p / na, p % na);
            let nx = b.neg(x);
            idx(nx, act.act(nx, a.neg(y)))
        })
        .collect();
    let labels: Vec<usize> = (0..nb * na)
        .map(|p| idx(b.rel.rep(p / na), a.rel.rep(p % na)))
        .collect();
    let group = CGroup::new(
        names,
        add,
        idx(b.zero, a.zero),
        neg,
        Partition::from_labels(&labels),
    )?;
    let mut pairs = vec![(0, 0); nb * na];
    for x in 0..nb {
        for y in 0..na {
            let i = group
                .index_of(&format!("({},{})", b.name(x), a.name(y)))
                .expect("pair name");
            pairs[i] = (x, y);
        }
    }
    let projection = CMorphism::new(pairs.iter().map(|&(x, _)| x).collect());
    let kernel = c_kernel(&group, b, &projection);
    let kernel_group = induced(&group, &kernel)?;
    let find = |x: usize, y: usize| pairs.iter().position(|&p| p == (x, y)).unwrap();
    let inclusion = CMorphism::new(
        (0..na)
            .map(|y| kernel.position(find(b.zero, y)).unwrap())
            .collect(),
    );
    let restriction = CMorphism::new(kernel.members.iter().map(|&p| pairs[p].1).collect());
    Ok(SemidirectProduct {
        group,
        pairs,
        projection,
        kernel,
        kernel_group,
        inclusion,
        restriction,
    })
}

/// `f: D → D'` and `f2: D' → D` are mutually inverse up to congruence.
pub fn is_c_isomorphism(d: &CGroup, d2: &CGroup, f: &CMorphism, f2: &CMorphism) -> Result<bool> {
    if f.map.len() != d.len() || f2.map.len() != d2.len() {
        return Err(Error::SourceTargetMismatch(
            "map length differs from its source carrier".into(),
        ));
    }
    if f.map.iter().any(|&v| v >= d2.len()) || f2.map.iter().any(|&v| v >= d.len()) {
        return Err(Error::SourceTargetMismatch(
            "map value outside its target carrier".into(),
        ));
    }
    Ok((0..d.len()).all(|x| d.related(f2.map[f.map[x]], x))
        && (0..d2.len()).all(|y| d2.related(f.map[f2.map[y]], y)))
}

/// A c-group on `names` whose relation is the fiber partition of
/// `q: X → Q`. `section` picks a point in each fiber (used for zero and
/// negation) and `choice[x * |X| + y]` picks the sum `x + y` inside the
/// fiber over `q(x) + q(y)`.
pub fn lift_from_surjection(
    names: Vec<String>,
    q: &[usize],
    target: &FiniteGroup,
    section: &[usize],
    choice: &[usize],
) -> Result<CGroup> {
    let n = names.len();
    check_len("q", q, n)?;
    check_range("q", q, target.order())?;
    check_len("section", section, target.order())?;
    check_range("section", section, n)?;
    check_len("choice", choice, n * n)?;
    check_range("choice", choice, n)?;
    for s in 0..target.order() {
        if !q.contains(&s) {
            return Err(Error::NotSurjective(String::from(target.name(s))));
        }
        if q[section[s]] != s {
            return Err(Error::Precondition(format!(
                "section picks `{}` over `{}`",
                names[section[s]],
                target.name(s)
            )));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if q[choice[x * n + y]] != target.add(q[x], q[y]) {
                return Err(Error::ChoiceOutsideFiber {
                    x: names[x].clone(),
                    y: names[y].clone(),
                });
            }
        }
    }
    let neg = (0..n).map(|x| section[target.neg(q[x])]).collect();
    CGroup::new(
        names,
        choice.to_vec(),
        section[target.zero()],
        neg,
        Partition::from_labels(q),
    )
}
