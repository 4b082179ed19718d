//! Corpus directories: one structure per file plus `corpus.manifest`.
//!
//! Manifest lines, blank lines and `#` comments ignored:
//!
//! ```text
//! catgroup <name> <file>
//! module <name> <file>
//! functor <name> <source> <target> <file>
//! morphism <name> <source> <target> <file>
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use cssc_core::corpus::{Corpus, FunctorEdge, MorphismEdge};

use crate::doc::{parse, serialize, DocError, FunctorDoc, MorphismDoc, Structure, StructureDoc};

pub const MANIFEST: &str = "corpus.manifest";

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{MANIFEST} line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error("{path}: {source}")]
    Doc { path: PathBuf, source: DocError },
    #[error("{path}: expected a {expected} document")]
    WrongKind {
        path: PathBuf,
        expected: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    CatGroup {
        name: String,
        file: String,
    },
    Module {
        name: String,
        file: String,
    },
    Functor {
        name: String,
        source: String,
        target: String,
        file: String,
    },
    Morphism {
        name: String,
        source: String,
        target: String,
        file: String,
    },
}

pub fn parse_manifest(text: &str) -> Result<Vec<Entry>, LoadError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let w: Vec<&str> = line.split_whitespace().collect();
        let s = |k: usize| w[k].to_string();
        let e = match (w[0], w.len()) {
            ("catgroup", 3) => Entry::CatGroup {
                name: s(1),
                file: s(2),
            },
            ("module", 3) => Entry::Module {
                name: s(1),
                file: s(2),
            },
            ("functor", 5) => Entry::Functor {
                name: s(1),
                source: s(2),
                target: s(3),
                file: s(4),
            },
            ("morphism", 5) => Entry::Morphism {
                name: s(1),
                source: s(2),
                target: s(3),
                file: s(4),
            },
            (kw @ ("catgroup" | "module" | "functor" | "morphism"), n) => {
                return Err(LoadError::Manifest {
                    line: i + 1,
                    message: format!(
                        "`{kw}` takes {} fields, found {}",
                        if kw.len() > 6 { 4 } else { 2 },
                        n - 1
                    ),
                })
            }
            (kw, _) => {
                return Err(LoadError::Manifest {
                    line: i + 1,
                    message: format!("unknown entry `{kw}`"),
                })
            }
        };
        out.push(e);
    }
    Ok(out)
}

fn read_doc(dir: &Path, file: &str) -> Result<(PathBuf, StructureDoc), LoadError> {
    let path = dir.join(file);
    let text = fs::read_to_string(&path).map_err(|source| LoadError::Io {
        path: path.clone(),
        source,
    })?;
    let doc = parse(&text).map_err(|source| LoadError::Doc {
        path: path.clone(),
        source,
    })?;
    Ok((path, doc))
}

fn unknown(line: usize, what: &str, name: &str) -> LoadError {
    LoadError::Manifest {
        line,
        message: format!("unknown {what} `{name}`"),
    }
}

/// Reads a corpus directory. Structures are parsed but not validated.
pub fn load_corpus(dir: &Path) -> Result<Corpus, LoadError> {
    let mpath = dir.join(MANIFEST);
    let text = fs::read_to_string(&mpath).map_err(|source| LoadError::Io {
        path: mpath,
        source,
    })?;
    let entries = parse_manifest(&text)?;
    let mut corpus = Corpus::default();
    let mut seen = BTreeSet::new();
    for (line, e) in entries.iter().enumerate().map(|(i, e)| (i + 1, e)) {
        let name = match e {
            Entry::CatGroup { name, .. }
            | Entry::Module { name, .. }
            | Entry::Functor { name, .. }
            | Entry::Morphism { name, .. } => name,
        };
        if !seen.insert(name.clone()) {
            return Err(LoadError::Manifest {
                line,
                message: format!("duplicate name `{name}`"),
            });
        }
    }
    for e in &entries {
        match e {
            Entry::CatGroup { name, file } => match read_doc(dir, file)? {
                (
                    _,
                    StructureDoc {
                        structure: Structure::CatGroup(c),
                        ..
                    },
                ) => corpus.catgroups.push((name.clone(), c)),
                (path, _) => {
                    return Err(LoadError::WrongKind {
                        path,
                        expected: "catgroup",
                    })
                }
            },
            Entry::Module { name, file } => match read_doc(dir, file)? {
                (
                    _,
                    StructureDoc {
                        structure: Structure::CrossedModule(x),
                        ..
                    },
                ) => corpus.modules.push((name.clone(), x)),
                (path, _) => {
                    return Err(LoadError::WrongKind {
                        path,
                        expected: "crossed_module",
                    })
                }
            },
            _ => {}
        }
    }
    for (i, e) in entries.iter().enumerate() {
        match e {
            Entry::Functor {
                name,
                source,
                target,
                file,
            } => {
                let src = corpus
                    .catgroup(source)
                    .ok_or_else(|| unknown(i + 1, "catgroup", source))?;
                let tgt = corpus
                    .catgroup(target)
                    .ok_or_else(|| unknown(i + 1, "catgroup", target))?;
                let functor = match read_doc(dir, file)? {
                    (
                        path,
                        StructureDoc {
                            structure: Structure::Functor(f),
                            ..
                        },
                    ) => f
                        .resolve(src, tgt)
                        .map_err(|source| LoadError::Doc { path, source })?,
                    (path, _) => {
                        return Err(LoadError::WrongKind {
                            path,
                            expected: "functor",
                        })
                    }
                };
                corpus.functors.push(FunctorEdge {
                    name: name.clone(),
                    source: source.clone(),
                    target: target.clone(),
                    functor,
                });
            }
            Entry::Morphism {
                name,
                source,
                target,
                file,
            } => {
                let x = corpus
                    .module(source)
                    .ok_or_else(|| unknown(i + 1, "module", source))?;
                let y = corpus
                    .module(target)
                    .ok_or_else(|| unknown(i + 1, "module", target))?;
                let morphism = match read_doc(dir, file)? {
                    (
                        path,
                        StructureDoc {
                            structure: Structure::CmMorphism(m),
                            ..
                        },
                    ) => m
                        .resolve(x, y)
                        .map_err(|source| LoadError::Doc { path, source })?,
                    (path, _) => {
                        return Err(LoadError::WrongKind {
                            path,
                            expected: "cm_morphism",
                        })
                    }
                };
                corpus.morphisms.push(MorphismEdge {
                    name: name.clone(),
                    source: source.clone(),
                    target: target.clone(),
                    morphism,
                });
            }
            _ => {}
        }
    }
    Ok(corpus)
}

/// File stem for a structure name: alphanumerics kept, the rest `_`.
fn stem(name: &str, used: &mut BTreeSet<String>) -> String {
    let base: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let mut s = base.clone();
    let mut k = 2;
    while !used.insert(s.clone()) {
        s = format!("{base}_{k}");
        k += 1;
    }
    s
}

/// Writes every structure and edge of `corpus` into `dir` with a manifest.
pub fn write_corpus(dir: &Path, corpus: &Corpus) -> Result<(), LoadError> {
    fs::create_dir_all(dir).map_err(|source| LoadError::Io {
        path: dir.into(),
        source,
    })?;
    let mut used = BTreeSet::new();
    let mut manifest = String::new();
    let mut write = |name: &str,
                     structure: Structure,
                     line: &dyn Fn(&str) -> String|
     -> Result<(), LoadError> {
        let file = format!("{}.json", stem(name, &mut used));
        let path = dir.join(&file);
        fs::write(&path, serialize(&StructureDoc::new(name, structure)))
            .map_err(|source| LoadError::Io { path, source })?;
        manifest.push_str(&line(&file));
        manifest.push('\n');
        Ok(())
    };
    for (n, c) in &corpus.catgroups {
        write(n, Structure::CatGroup(c.clone()), &|f| {
            format!("catgroup {n} {f}")
        })?;
    }
    for (n, x) in &corpus.modules {
        write(n, Structure::CrossedModule(x.clone()), &|f| {
            format!("module {n} {f}")
        })?;
    }
    for e in &corpus.functors {
        let (src, tgt) = (
            corpus.catgroup(&e.source).expect("edge source"),
            corpus.catgroup(&e.target).expect("edge target"),
        );
        let d = FunctorDoc::from_functor(&e.source, &e.target, src, tgt, &e.functor);
        write(&e.name, Structure::Functor(d), &|f| {
            format!("functor {} {} {} {f}", e.name, e.source, e.target)
        })?;
    }
    for e in &corpus.morphisms {
        let (x, y) = (
            corpus.module(&e.source).expect("edge source"),
            corpus.module(&e.target).expect("edge target"),
        );
        let d = MorphismDoc::from_morphism(&e.source, &e.target, x, y, &e.morphism);
        write(&e.name, Structure::CmMorphism(d), &|f| {
            format!("morphism {} {} {} {f}", e.name, e.source, e.target)
        })?;
    }
    let mpath = dir.join(MANIFEST);
    fs::write(&mpath, manifest).map_err(|source| LoadError::Io {
        path: mpath,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lines() {
        let m =
            parse_manifest("# c\n\ncatgroup BZ2 bz2.json\nfunctor id BZ2 BZ2 id.json\n").unwrap();
        assert_eq!(m.len(), 2);
        assert!(matches!(&m[1], Entry::Functor { source, .. } if source == "BZ2"));
        let e = parse_manifest("catgroup a\n").unwrap_err();
        assert!(e.to_string().contains("line 1"), "{e}");
        assert!(parse_manifest("widget a b\n").is_err());
    }

    #[test]
    fn stems_are_unique() {
        let mut used = BTreeSet::new();
        assert_eq!(stem("BS(Z2<Z4)", &mut used), "BS_Z2_Z4_");
        assert_eq!(stem("BS(Z2>Z4)", &mut used), "BS_Z2_Z4__2");
    }
}
