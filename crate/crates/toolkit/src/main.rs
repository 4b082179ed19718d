use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use cssc_core::catgroup::{validate_catgroup_with, validate_functor};
use cssc_core::cgroup::validate_cgroup;
use cssc_core::corpus::{default_corpus, x2tot_module};
use cssc_core::crossmod::{cssc_report, validate_cm_morphism, validate_crossed_module};
use cssc_core::equivalence::{verify_lt, verify_tl};
use cssc_core::functors::{l0, t0};
use cssc_core::gen::{self, ClassicalCrossedModule};
use cssc_core::{FiniteGroup, Limits, ValidationReport};
use cssc_toolkit::{
    load_corpus, parse, run_equivalence, serialize, summary_reports, write_corpus, Structure,
    StructureDoc,
};

#[derive(Parser)]
#[command(
    name = "cssc",
    version,
    about = "Check categorical groups and cssc-crossed modules"
)]
struct Cli {
    /// Cap on arrows for cubic checks and for enumerated T-images.
    #[arg(long, global = true, value_name = "N")]
    max_arrows: Option<usize>,
    /// Write the report document here.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure against its axioms.
    Validate {
        file: PathBuf,
        /// Source structure, for functor and cm_morphism documents.
        #[arg(long)]
        source: Option<PathBuf>,
        /// Target structure, for functor and cm_morphism documents.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Print the special congruence or the special isomorphisms.
    Closure { file: PathBuf },
    /// Apply L to a categorical group or T to a cssc-crossed module.
    Functor {
        which: Which,
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the TL round trip on a categorical group or LT on a module.
    Roundtrip { direction: Dir, file: PathBuf },
    /// Every round trip, naturality square and functoriality law of a corpus directory.
    Equivalence {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write a generated structure.
    Generate {
        #[command(subcommand)]
        kind: Generate,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Which {
    L,
    T,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Dir {
    Tl,
    Lt,
}

#[derive(Subcommand)]
enum Generate {
    /// Discrete categorical group on Z/n.
    Discrete { n: usize },
    /// One-object categorical group on Z/n.
    Delooping { n: usize },
    /// Skeletal model over G = Z/g, A = Z/a with ω given as g³ residues.
    Skeletal {
        g: usize,
        a: usize,
        #[arg(value_delimiter = ',')]
        omega: Vec<usize>,
    },
    /// From Z/t as a subgroup of Z/g (t divides g) acting by conjugation.
    BrownSpencer { t: usize, g: usize },
    /// Skeletal model over Z2 with ω(1,1,1) = 1.
    Skz2,
    /// Codiscrete categorical group on two objects.
    Codiscrete,
    /// The two-element cssc-crossed module with total congruences.
    X2tot,
    /// The built-in corpus as a directory; needs --out.
    Corpus,
}

/// Check failures are `Ok(false)`; input errors are `Err`.
type Outcome = anyhow::Result<bool>;

fn limits(cli: &Cli) -> Limits {
    match cli.max_arrows {
        Some(n) => Limits {
            max_arrows: n,
            max_t_arrows: n,
        },
        None => Limits::default(),
    }
}

fn read(path: &Path) -> anyhow::Result<StructureDoc> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(doc: &StructureDoc, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serialize(doc);
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(cli: &Cli, reports: Vec<ValidationReport>) -> Outcome {
    for r in &reports {
        print!("{r}");
    }
    let ok = reports.iter().all(ValidationReport::passed);
    if let Some(p) = &cli.report {
        emit(
            &StructureDoc::new("report", Structure::Report(reports)),
            Some(p),
        )?;
    }
    Ok(ok)
}

fn validate(cli: &Cli, file: &Path, source: Option<&Path>, target: Option<&Path>) -> Outcome {
    let doc = read(file)?;
    let ends = || -> anyhow::Result<(StructureDoc, StructureDoc)> {
        match (source, target) {
            (Some(s), Some(t)) => Ok((read(s)?, read(t)?)),
            _ => bail!("{} documents need --source and --target", doc.kind()),
        }
    };
    let mut r = match &doc.structure {
        Structure::CGroup(g) => validate_cgroup(g),
        Structure::CrossedModule(x) => {
            // cssc is reported but only the axioms decide the exit code.
            let mut r = validate_crossed_module(x);
            let ok = r.passed();
            r.extend(cssc_report(x));
            r.subject = doc.name.clone();
            finish(cli, vec![r])?;
            return Ok(ok);
        }
        Structure::CatGroup(c) => validate_catgroup_with(c, &limits(cli))?,
        Structure::Functor(f) => match ends()? {
            (
                StructureDoc {
                    structure: Structure::CatGroup(a),
                    ..
                },
                StructureDoc {
                    structure: Structure::CatGroup(b),
                    ..
                },
            ) => validate_functor(&a, &b, &f.resolve(&a, &b)?)?,
            _ => bail!("functor endpoints must be catgroup documents"),
        },
        Structure::CmMorphism(m) => match ends()? {
            (
                StructureDoc {
                    structure: Structure::CrossedModule(x),
                    ..
                },
                StructureDoc {
                    structure: Structure::CrossedModule(y),
                    ..
                },
            ) => validate_cm_morphism(&x, &y, &m.resolve(&x, &y)?)?,
            _ => bail!("cm_morphism endpoints must be crossed_module documents"),
        },
        Structure::Report(_) => bail!("report documents cannot be validated"),
    };
    r.subject = doc.name.clone();
    finish(cli, vec![r])
}

fn closure(file: &Path) -> Outcome {
    let doc = read(file)?;
    let show_blocks = |g: &cssc_core::CGroup| {
        for b in g.special().blocks() {
            let names: Vec<&str> = b.iter().map(|&a| g.name(a)).collect();
            println!("{{{}}}", names.join(", "));
        }
    };
    match &doc.structure {
        Structure::CGroup(g) => show_blocks(g),
        Structure::CrossedModule(x) => show_blocks(x.target()),
        Structure::CatGroup(c) => {
            for f in c.special().sorted() {
                println!(
                    "{}: {} -> {}",
                    c.arrow_name(f),
                    c.object_name(c.dom(f)),
                    c.object_name(c.cod(f))
                );
            }
        }
        _ => bail!("closure needs a cgroup, crossed_module or catgroup document"),
    }
    Ok(true)
}

fn functor(cli: &Cli, which: Which, file: &Path, out: Option<&Path>) -> Outcome {
    let doc = read(file)?;
    let result = match (which, &doc.structure) {
        (Which::L, Structure::CatGroup(c)) => StructureDoc::new(
            format!("L({})", doc.name),
            Structure::CrossedModule(l0(c)?.module),
        ),
        (Which::T, Structure::CrossedModule(x)) => StructureDoc::new(
            format!("T({})", doc.name),
            Structure::CatGroup(t0(x, &limits(cli))?.catgroup),
        ),
        (Which::L, _) => bail!("L takes a catgroup document"),
        (Which::T, _) => bail!("T takes a crossed_module document"),
    };
    emit(&result, out)?;
    Ok(true)
}

fn roundtrip(cli: &Cli, dir: Dir, file: &Path) -> Outcome {
    let doc = read(file)?;
    let rt = match (dir, &doc.structure) {
        (Dir::Tl, Structure::CatGroup(c)) => verify_tl(&doc.name, c, &limits(cli)),
        (Dir::Lt, Structure::CrossedModule(x)) => verify_lt(&doc.name, x, &limits(cli)),
        (Dir::Tl, _) => bail!("TL takes a catgroup document"),
        (Dir::Lt, _) => bail!("LT takes a crossed_module document"),
    };
    let mut r = rt.report;
    r.subject = format!("{} {}", rt.direction, rt.instance);
    finish(cli, vec![r])
}

fn equivalence(cli: &Cli, dir: &Path, jobs: usize) -> Outcome {
    let corpus = load_corpus(dir)?;
    let summary = run_equivalence(&corpus, &limits(cli), jobs);
    let reports = summary_reports(&summary);
    if let Some(p) = &cli.report {
        emit(
            &StructureDoc::new("equivalence", Structure::Report(reports.clone())),
            Some(p),
        )?;
    }
    for r in &reports {
        println!(
            "{}: {}",
            r.subject,
            if r.passed() { "pass" } else { "FAIL" }
        );
        for c in r.failures() {
            println!("  {c}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} of {} reports pass",
        reports.len() - failed,
        reports.len()
    );
    Ok(failed == 0)
}

fn generate(kind: &Generate, out: Option<&Path>) -> Outcome {
    let cyclic = FiniteGroup::cyclic;
    let (name, s) = match kind {
        Generate::Discrete { n } => (
            format!("DZ{n}"),
            Structure::CatGroup(gen::gen_discrete(&cyclic(*n))),
        ),
        Generate::Delooping { n } => (
            format!("BZ{n}"),
            Structure::CatGroup(gen::gen_delooping(&cyclic(*n))?),
        ),
        Generate::Skeletal { g, a, omega } => (
            format!("Sk(Z{g},Z{a})"),
            Structure::CatGroup(gen::gen_skeletal_cocycle(&cyclic(*g), &cyclic(*a), omega)?),
        ),
        Generate::BrownSpencer { t, g } => {
            if *t == 0 || g % t != 0 {
                bail!("Z/{t} is not a subgroup of Z/{g}");
            }
            let cm = ClassicalCrossedModule::conjugation(
                &cyclic(*t),
                &cyclic(*g),
                (0..*t).map(|x| x * (g / t)).collect(),
            )?;
            (
                format!("BS(Z{t}<Z{g})"),
                Structure::CatGroup(gen::gen_brown_spencer(&cm)?),
            )
        }
        Generate::Skz2 => ("SkZ2".into(), Structure::CatGroup(gen::skz2())),
        Generate::Codiscrete => ("Cod".into(), Structure::CatGroup(gen::codiscrete_pair())),
        Generate::X2tot => ("X2tot".into(), Structure::CrossedModule(x2tot_module())),
        Generate::Corpus => {
            let Some(dir) = out else {
                bail!("generate corpus needs --out <dir>")
            };
            write_corpus(dir, &default_corpus())?;
            return Ok(true);
        }
    };
    emit(&StructureDoc::new(name, s), out)?;
    Ok(true)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate {
            file,
            source,
            target,
        } => validate(cli, file, source.as_deref(), target.as_deref()),
        Command::Closure { file } => closure(file),
        Command::Functor { which, file, out } => functor(cli, *which, file, out.as_deref()),
        Command::Roundtrip { direction, file } => roundtrip(cli, *direction, file),
        Command::Equivalence { dir, jobs } => equivalence(cli, dir, *jobs),
        Command::Generate { kind, out } => generate(kind, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
