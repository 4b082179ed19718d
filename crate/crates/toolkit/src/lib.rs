//! Structure documents, corpus directories and the runner behind the
//! `cssc` command-line tool.

pub mod doc;
pub mod manifest;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use cssc_core::corpus::Corpus;
use cssc_core::equivalence::{
    verify_catgroup_instance, verify_edges, verify_module_instance, EquivalenceSummary,
    InstanceOutcome,
};
use cssc_core::{Limits, ValidationReport};

pub use doc::{parse, serialize, DocError, Kind, Structure, StructureDoc};
pub use manifest::{load_corpus, write_corpus, LoadError};

/// [`cssc_core::equivalence::verify_equivalence`] with instances spread
/// over up to `jobs` threads. Instances come back sorted by name, so the
/// result does not depend on `jobs`.
pub fn run_equivalence(corpus: &Corpus, limits: &Limits, jobs: usize) -> EquivalenceSummary {
    enum Job<'a> {
        Cat(&'a str, &'a cssc_core::CatGroup),
        Module(&'a str, &'a cssc_core::CrossedModule),
    }
    let mut work: Vec<Job> = corpus
        .catgroups
        .iter()
        .map(|(n, c)| Job::Cat(n, c))
        .collect();
    work.extend(corpus.modules.iter().map(|(n, x)| Job::Module(n, x)));
    let next = AtomicUsize::new(0);
    let done = Mutex::new(Vec::with_capacity(work.len()));
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, work.len().max(1)) {
            s.spawn(|| {
                while let Some(job) = work.get(next.fetch_add(1, Ordering::Relaxed)) {
                    let out = match job {
                        Job::Cat(n, c) => verify_catgroup_instance(n, c, limits),
                        Job::Module(n, x) => verify_module_instance(n, x, limits),
                    };
                    done.lock().expect("no worker panicked").push(out);
                }
            });
        }
    });
    let mut instances: Vec<InstanceOutcome> = done.into_inner().expect("no worker panicked");
    instances.sort_by(|a, b| a.name.cmp(&b.name));
    let valid: Vec<&str> = instances
        .iter()
        .filter(|i| i.rejected.is_none())
        .map(|i| i.name.as_str())
        .collect();
    let edges = verify_edges(corpus, &valid, limits);
    EquivalenceSummary { instances, edges }
}

/// Flattens a summary into one report per round trip or edge, with
/// rejected instances as a failing `validation` check.
pub fn summary_reports(s: &EquivalenceSummary) -> Vec<ValidationReport> {
    let mut out = Vec::new();
    for i in &s.instances {
        if let Some(w) = &i.rejected {
            let mut r = ValidationReport::new(i.name.clone());
            r.push(cssc_core::Check::fail("validation", w.clone()));
            out.push(r);
        }
        for rt in &i.reports {
            let mut r = rt.report.clone();
            r.subject = format!("{} {}", rt.direction, rt.instance);
            out.push(r);
        }
    }
    for (name, r) in &s.edges {
        let mut r = r.clone();
        r.subject = name.clone();
        out.push(r);
    }
    out
}
