//! JSON structure documents.
//!
//! Every document is an envelope `{kind, name, format_version, payload}`.
//! Tables are arrays of string tuples over element names, emitted in index
//! order; keys are emitted sorted, so serializing the same structure twice
//! gives the same bytes.

use std::collections::HashMap;

use cssc_core::catgroup::CatGroupTables;
use cssc_core::{
    CGroup, CMorphism, CatGroup, CatGroupFunctor, Check, CrossedModule, CrossedModuleMorphism,
    Partition, Relation, ValidationReport,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("format version {found} is not supported (expected {FORMAT_VERSION})")]
    VersionMismatch { found: u64 },
    #[error("{path}: {source}")]
    Structure {
        path: String,
        source: cssc_core::Error,
    },
}

fn perr(path: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Parse {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Cgroup,
    CrossedModule,
    Catgroup,
    Functor,
    CmMorphism,
    Report,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("string tag"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    kind: Kind,
    name: String,
    format_version: u64,
    payload: Value,
}

type P2 = (String, String);
type P3 = (String, String, String);
type P4 = (String, String, String, String);

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CGroupPayload {
    elements: Vec<String>,
    zero: String,
    add: Vec<P3>,
    neg: Vec<P2>,
    congruence: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossedModulePayload {
    source: CGroupPayload,
    target: CGroupPayload,
    boundary: Vec<P2>,
    action: Vec<P3>,
    weak_special: Vec<P2>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatGroupPayload {
    objects: Vec<String>,
    /// `(arrow, dom, cod)`
    arrows: Vec<P3>,
    identity: Vec<P2>,
    compose: Vec<P3>,
    zero: String,
    obj_add: Vec<P3>,
    arr_add: Vec<P3>,
    alpha: Vec<P4>,
    lambda: Vec<P2>,
    rho: Vec<P2>,
    neg_obj: Vec<P2>,
    epsilon: Vec<P2>,
    delta: Vec<P2>,
    neg_arr: Vec<P2>,
}

/// A functor between categorical groups, given on names. Resolve it
/// against its endpoints with [`FunctorDoc::resolve`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: String,
    pub target: String,
    pub objects: Vec<P2>,
    pub arrows: Vec<P2>,
}

/// A crossed-module morphism on names: `on_source` maps the source
/// c-groups, `on_target` the target c-groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: String,
    pub target: String,
    pub on_source: Vec<P2>,
    pub on_target: Vec<P2>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckEntry {
    name: String,
    passed: bool,
    witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportEntry {
    subject: String,
    passed: bool,
    checks: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportPayload {
    passed: bool,
    reports: Vec<ReportEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    CGroup(CGroup),
    CrossedModule(CrossedModule),
    CatGroup(CatGroup),
    Functor(FunctorDoc),
    CmMorphism(MorphismDoc),
    Report(Vec<ValidationReport>),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::CGroup(_) => Kind::Cgroup,
            Structure::CrossedModule(_) => Kind::CrossedModule,
            Structure::CatGroup(_) => Kind::Catgroup,
            Structure::Functor(_) => Kind::Functor,
            Structure::CmMorphism(_) => Kind::CmMorphism,
            Structure::Report(_) => Kind::Report,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDoc {
    pub name: String,
    pub structure: Structure,
}

impl StructureDoc {
    pub fn new(name: impl Into<String>, structure: Structure) -> Self {
        StructureDoc {
            name: name.into(),
            structure,
        }
    }

    pub fn kind(&self) -> Kind {
        self.structure.kind()
    }
}

/// Name lookup for one carrier.
struct Names<'a> {
    what: &'static str,
    names: &'a [String],
    index: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(what: &'static str, names: &'a [String], path: &str) -> Result<Self, DocError> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(perr(
                    format!("{path}[{i}]"),
                    format!("duplicate {} `{n}`", what),
                ));
            }
        }
        Ok(Names { what, names, index })
    }

    fn get(&self, name: &str, path: impl FnOnce() -> String) -> Result<usize, DocError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| perr(path(), format!("unknown {} `{name}`", self.what)))
    }

    fn len(&self) -> usize {
        self.names.len()
    }
}

/// A total map `dom → cod` given as pairs, each key exactly once.
fn unary(path: &str, rows: &[P2], dom: &Names, cod: &Names) -> Result<Vec<usize>, DocError> {
    let mut out = vec![None; dom.len()];
    for (i, (a, b)) in rows.iter().enumerate() {
        let a = dom.get(a, || format!("{path}[{i}].0"))?;
        let b = cod.get(b, || format!("{path}[{i}].1"))?;
        if out[a].replace(b).is_some() {
            return Err(perr(
                format!("{path}[{i}]"),
                format!("second entry for `{}`", dom.names[a]),
            ));
        }
    }
    out.iter()
        .enumerate()
        .map(|(a, v)| v.ok_or_else(|| perr(path, format!("no entry for `{}`", dom.names[a]))))
        .collect()
}

/// A map `l × r → cod` indexed `a * |r| + b`; entries may be missing
/// only when `partial`.
fn binary(
    path: &str,
    rows: &[P3],
    l: &Names,
    r: &Names,
    cod: &Names,
    partial: bool,
) -> Result<Vec<Option<usize>>, DocError> {
    let mut out = vec![None; l.len() * r.len()];
    for (i, (a, b, c)) in rows.iter().enumerate() {
        let a = l.get(a, || format!("{path}[{i}].0"))?;
        let b = r.get(b, || format!("{path}[{i}].1"))?;
        let c = cod.get(c, || format!("{path}[{i}].2"))?;
        if out[a * r.len() + b].replace(c).is_some() {
            return Err(perr(
                format!("{path}[{i}]"),
                format!("second entry for (`{}`, `{}`)", l.names[a], r.names[b]),
            ));
        }
    }
    if !partial {
        if let Some(k) = out.iter().position(Option::is_none) {
            return Err(perr(
                path,
                format!(
                    "no entry for (`{}`, `{}`)",
                    l.names[k / r.len()],
                    r.names[k % r.len()]
                ),
            ));
        }
    }
    Ok(out)
}

fn total(v: Vec<Option<usize>>) -> Vec<usize> {
    v.into_iter().map(|x| x.expect("checked total")).collect()
}

fn structure_err(path: &str) -> impl FnOnce(cssc_core::Error) -> DocError + '_ {
    move |source| DocError::Structure {
        path: path.into(),
        source,
    }
}

fn cgroup_from(p: &CGroupPayload, path: &str) -> Result<CGroup, DocError> {
    let el = Names::new("element", &p.elements, &format!("{path}.elements"))?;
    let add = total(binary(
        &format!("{path}.add"),
        &p.add,
        &el,
        &el,
        &el,
        false,
    )?);
    let neg = unary(&format!("{path}.neg"), &p.neg, &el, &el)?;
    let zero = el.get(&p.zero, || format!("{path}.zero"))?;
    let mut blocks = Vec::new();
    for (i, b) in p.congruence.iter().enumerate() {
        blocks.push(
            b.iter()
                .enumerate()
                .map(|(j, x)| el.get(x, || format!("{path}.congruence[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let cpath = format!("{path}.congruence");
    let rel = Partition::from_blocks(el.len(), &blocks).map_err(structure_err(&cpath))?;
    CGroup::new(p.elements.clone(), add, zero, neg, rel).map_err(structure_err(path))
}

fn cgroup_to(g: &CGroup) -> CGroupPayload {
    let n = g.len();
    let name = |a: usize| g.name(a).to_string();
    CGroupPayload {
        elements: g.names().to_vec(),
        zero: name(g.zero()),
        add: (0..n * n)
            .map(|k| (name(k / n), name(k % n), name(g.add(k / n, k % n))))
            .collect(),
        neg: (0..n).map(|a| (name(a), name(g.neg(a)))).collect(),
        congruence: g
            .rel()
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(name).collect())
            .collect(),
    }
}

fn module_from(p: &CrossedModulePayload) -> Result<CrossedModule, DocError> {
    let m = cgroup_from(&p.source, "payload.source")?;
    let n = cgroup_from(&p.target, "payload.target")?;
    let (ms, ns) = (
        Names::new("source element", m.names(), "payload.source")?,
        Names::new("target element", n.names(), "payload.target")?,
    );
    let boundary = unary("payload.boundary", &p.boundary, &ms, &ns)?;
    let action = total(binary("payload.action", &p.action, &ns, &ms, &ms, false)?);
    let mut pairs = Vec::new();
    for (i, (a, b)) in p.weak_special.iter().enumerate() {
        pairs.push((
            ms.get(a, || format!("payload.weak_special[{i}].0"))?,
            ms.get(b, || format!("payload.weak_special[{i}].1"))?,
        ));
    }
    let ws = Relation::from_pairs(m.len(), pairs).map_err(structure_err("payload.weak_special"))?;
    CrossedModule::new(m, n, boundary, action, ws).map_err(structure_err("payload"))
}

fn module_to(x: &CrossedModule) -> CrossedModulePayload {
    let (m, n) = (x.source(), x.target());
    let ms = |c: usize| m.name(c).to_string();
    let ns = |r: usize| n.name(r).to_string();
    let mut action = Vec::new();
    for r in 0..n.len() {
        for c in 0..m.len() {
            action.push((ns(r), ms(c), ms(x.act(r, c))));
        }
    }
    CrossedModulePayload {
        source: cgroup_to(m),
        target: cgroup_to(n),
        boundary: (0..m.len()).map(|c| (ms(c), ns(x.d(c)))).collect(),
        action,
        weak_special: x
            .weak_special()
            .pairs()
            .map(|(a, b)| (ms(a), ms(b)))
            .collect(),
    }
}

fn catgroup_from(p: &CatGroupPayload) -> Result<CatGroup, DocError> {
    let ob = Names::new("object", &p.objects, "payload.objects")?;
    let arrow_names: Vec<String> = p.arrows.iter().map(|a| a.0.clone()).collect();
    let ar = Names::new("arrow", &arrow_names, "payload.arrows")?;
    let mut dom = Vec::new();
    let mut cod = Vec::new();
    for (i, (_, d, c)) in p.arrows.iter().enumerate() {
        dom.push(ob.get(d, || format!("payload.arrows[{i}].dom"))?);
        cod.push(ob.get(c, || format!("payload.arrows[{i}].cod"))?);
    }
    let n0 = ob.len();
    let mut alpha = vec![None; n0 * n0 * n0];
    for (i, (x, y, z, f)) in p.alpha.iter().enumerate() {
        let at = |k: usize| move || format!("payload.alpha[{i}].{k}");
        let k = (ob.get(x, at(0))? * n0 + ob.get(y, at(1))?) * n0 + ob.get(z, at(2))?;
        if alpha[k].replace(ar.get(f, at(3))?).is_some() {
            return Err(perr(
                format!("payload.alpha[{i}]"),
                format!("second entry for (`{x}`, `{y}`, `{z}`)"),
            ));
        }
    }
    if let Some(k) = alpha.iter().position(Option::is_none) {
        let n = |i: usize| &p.objects[i];
        return Err(perr(
            "payload.alpha",
            format!(
                "no entry for (`{}`, `{}`, `{}`)",
                n(k / (n0 * n0)),
                n(k / n0 % n0),
                n(k % n0)
            ),
        ));
    }
    let tables = CatGroupTables {
        objects: p.objects.clone(),
        arrows: arrow_names.clone(),
        dom,
        cod,
        identity: unary("payload.identity", &p.identity, &ob, &ar)?,
        compose: binary("payload.compose", &p.compose, &ar, &ar, &ar, true)?,
        zero: ob.get(&p.zero, || "payload.zero".into())?,
        obj_add: total(binary("payload.obj_add", &p.obj_add, &ob, &ob, &ob, false)?),
        arr_add: total(binary("payload.arr_add", &p.arr_add, &ar, &ar, &ar, false)?),
        alpha: total(alpha),
        lambda: unary("payload.lambda", &p.lambda, &ob, &ar)?,
        rho: unary("payload.rho", &p.rho, &ob, &ar)?,
        neg_obj: unary("payload.neg_obj", &p.neg_obj, &ob, &ob)?,
        epsilon: unary("payload.epsilon", &p.epsilon, &ob, &ar)?,
        delta: unary("payload.delta", &p.delta, &ob, &ar)?,
        neg_arr: unary("payload.neg_arr", &p.neg_arr, &ar, &ar)?,
    };
    CatGroup::new(tables).map_err(structure_err("payload"))
}

fn catgroup_to(c: &CatGroup) -> CatGroupPayload {
    let (n0, n1) = (c.n_objects(), c.n_arrows());
    let o = |x: usize| c.object_name(x).to_string();
    let a = |f: usize| c.arrow_name(f).to_string();
    let obj_map = |m: &dyn Fn(usize) -> usize| (0..n0).map(|x| (o(x), a(m(x)))).collect::<Vec<_>>();
    let mut compose = Vec::new();
    for g in 0..n1 {
        for f in 0..n1 {
            if let Some(h) = c.comp(g, f) {
                compose.push((a(g), a(f), a(h)));
            }
        }
    }
    let mut alpha = Vec::new();
    for x in 0..n0 {
        for y in 0..n0 {
            for z in 0..n0 {
                alpha.push((o(x), o(y), o(z), a(c.alpha(x, y, z))));
            }
        }
    }
    CatGroupPayload {
        objects: c.object_names().to_vec(),
        arrows: (0..n1).map(|f| (a(f), o(c.dom(f)), o(c.cod(f)))).collect(),
        identity: obj_map(&|x| c.id(x)),
        compose,
        zero: o(c.zero()),
        obj_add: (0..n0 * n0)
            .map(|k| (o(k / n0), o(k % n0), o(c.oadd(k / n0, k % n0))))
            .collect(),
        arr_add: (0..n1 * n1)
            .map(|k| (a(k / n1), a(k % n1), a(c.aadd(k / n1, k % n1))))
            .collect(),
        alpha,
        lambda: obj_map(&|x| c.lambda(x)),
        rho: obj_map(&|x| c.rho(x)),
        neg_obj: (0..n0).map(|x| (o(x), o(c.oneg(x)))).collect(),
        epsilon: obj_map(&|x| c.epsilon(x)),
        delta: obj_map(&|x| c.delta(x)),
        neg_arr: (0..n1).map(|f| (a(f), a(c.aneg(f)))).collect(),
    }
}

impl FunctorDoc {
    pub fn from_functor(
        source: &str,
        target: &str,
        src: &CatGroup,
        tgt: &CatGroup,
        t: &CatGroupFunctor,
    ) -> Self {
        FunctorDoc {
            source: source.into(),
            target: target.into(),
            objects: (0..src.n_objects())
                .map(|x| (src.object_name(x).into(), tgt.object_name(t.f0[x]).into()))
                .collect(),
            arrows: (0..src.n_arrows())
                .map(|f| (src.arrow_name(f).into(), tgt.arrow_name(t.f1[f]).into()))
                .collect(),
        }
    }

    pub fn resolve(&self, src: &CatGroup, tgt: &CatGroup) -> Result<CatGroupFunctor, DocError> {
        let (so, to) = (
            Names::new("source object", src.object_names(), "")?,
            Names::new("target object", tgt.object_names(), "")?,
        );
        let (sa, ta) = (
            Names::new("source arrow", src.arrow_names(), "")?,
            Names::new("target arrow", tgt.arrow_names(), "")?,
        );
        Ok(CatGroupFunctor {
            f0: unary("payload.objects", &self.objects, &so, &to)?,
            f1: unary("payload.arrows", &self.arrows, &sa, &ta)?,
        })
    }
}

impl MorphismDoc {
    pub fn from_morphism(
        source: &str,
        target: &str,
        x: &CrossedModule,
        y: &CrossedModule,
        m: &CrossedModuleMorphism,
    ) -> Self {
        let pairs = |a: &CGroup, b: &CGroup, f: &CMorphism| {
            (0..a.len())
                .map(|i| (a.name(i).to_string(), b.name(f.apply(i)).to_string()))
                .collect()
        };
        MorphismDoc {
            source: source.into(),
            target: target.into(),
            on_source: pairs(x.source(), y.source(), &m.f),
            on_target: pairs(x.target(), y.target(), &m.g),
        }
    }

    pub fn resolve(
        &self,
        x: &CrossedModule,
        y: &CrossedModule,
    ) -> Result<CrossedModuleMorphism, DocError> {
        let xs = Names::new("source element", x.source().names(), "")?;
        let ys = Names::new("target element", y.source().names(), "")?;
        let xt = Names::new("source element", x.target().names(), "")?;
        let yt = Names::new("target element", y.target().names(), "")?;
        Ok(CrossedModuleMorphism {
            f: CMorphism::new(unary("payload.on_source", &self.on_source, &xs, &ys)?),
            g: CMorphism::new(unary("payload.on_target", &self.on_target, &xt, &yt)?),
        })
    }
}

fn report_to(reports: &[ValidationReport]) -> ReportPayload {
    ReportPayload {
        passed: reports.iter().all(|r| r.passed()),
        reports: reports
            .iter()
            .map(|r| ReportEntry {
                subject: r.subject.clone(),
                passed: r.passed(),
                checks: r
                    .checks
                    .iter()
                    .map(|c| CheckEntry {
                        name: c.name.clone(),
                        passed: c.passed,
                        witness: c.witness.clone(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

fn report_from(p: ReportPayload) -> Vec<ValidationReport> {
    p.reports
        .into_iter()
        .map(|r| ValidationReport {
            subject: r.subject,
            checks: r
                .checks
                .into_iter()
                .map(|c| Check {
                    name: c.name,
                    passed: c.passed,
                    witness: c.witness,
                })
                .collect(),
        })
        .collect()
}

fn payload<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, DocError> {
    serde_json::from_value(v).map_err(|e| perr("payload", e.to_string()))
}

/// Parses a document. The structure is built but not validated.
pub fn parse(text: &str) -> Result<StructureDoc, DocError> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| {
        perr(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if env.format_version != FORMAT_VERSION {
        return Err(DocError::VersionMismatch {
            found: env.format_version,
        });
    }
    let structure = match env.kind {
        Kind::Cgroup => Structure::CGroup(cgroup_from(&payload(env.payload)?, "payload")?),
        Kind::CrossedModule => Structure::CrossedModule(module_from(&payload(env.payload)?)?),
        Kind::Catgroup => Structure::CatGroup(catgroup_from(&payload(env.payload)?)?),
        Kind::Functor => Structure::Functor(payload(env.payload)?),
        Kind::CmMorphism => Structure::CmMorphism(payload(env.payload)?),
        Kind::Report => Structure::Report(report_from(payload(env.payload)?)),
    };
    Ok(StructureDoc {
        name: env.name,
        structure,
    })
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn serialize(doc: &StructureDoc) -> String {
    let to = |v: Result<Value, serde_json::Error>| v.expect("payloads serialize");
    let payload = match &doc.structure {
        Structure::CGroup(g) => to(serde_json::to_value(cgroup_to(g))),
        Structure::CrossedModule(x) => to(serde_json::to_value(module_to(x))),
        Structure::CatGroup(c) => to(serde_json::to_value(catgroup_to(c))),
        Structure::Functor(f) => to(serde_json::to_value(f)),
        Structure::CmMorphism(m) => to(serde_json::to_value(m)),
        Structure::Report(r) => to(serde_json::to_value(report_to(r))),
    };
    let env = Envelope {
        kind: doc.kind(),
        name: doc.name.clone(),
        format_version: FORMAT_VERSION,
        payload,
    };
    // Value objects are BTreeMap-backed, so going through Value sorts keys.
    let v = to(serde_json::to_value(env));
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use cssc_core::gen::{gen_delooping, skz2};
    use cssc_core::FiniteGroup;

    #[test]
    fn catgroup_round_trip() {
        let c = gen_delooping(&FiniteGroup::cyclic(3)).unwrap();
        let doc = StructureDoc::new("BZ3", Structure::CatGroup(c));
        let back = parse(&serialize(&doc)).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn version_checked_before_payload() {
        let text = r#"{"kind":"catgroup","name":"x","format_version":2,"payload":null}"#;
        assert!(matches!(
            parse(text),
            Err(DocError::VersionMismatch { found: 2 })
        ));
    }

    #[test]
    fn unknown_envelope_field_is_rejected() {
        let mut v: Value = serde_json::from_str(&serialize(&StructureDoc::new(
            "s",
            Structure::CatGroup(skz2()),
        )))
        .unwrap();
        v["extra"] = Value::Bool(true);
        let e = parse(&v.to_string()).unwrap_err();
        assert!(e.to_string().contains("extra"), "{e}");
    }

    #[test]
    fn missing_entry_is_named() {
        let mut v: Value = serde_json::from_str(&serialize(&StructureDoc::new(
            "s",
            Structure::CatGroup(skz2()),
        )))
        .unwrap();
        v["payload"]["neg_arr"].as_array_mut().unwrap().pop();
        let e = parse(&v.to_string()).unwrap_err();
        assert!(
            e.to_string()
                .starts_with("parse error at payload.neg_arr: no entry"),
            "{e}"
        );
    }

    #[test]
    fn kind_displays_as_tag() {
        assert_eq!(Kind::CmMorphism.to_string(), "cm_morphism");
    }
}
