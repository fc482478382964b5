//! Named diagram records: `name: <id>` followed by PD lines.

use crate::error::{Error, Result};

use super::{parse_pd, LinkDiagram};

const EMBEDDED: &str = include_str!("../../data/corpus.pd");

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: LinkDiagram,
}

/// Parses a corpus file. A malformed record is reported with its name.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    let mut current: Option<(String, String)> = None;
    let finish = |cur: Option<(String, String)>, out: &mut Vec<CorpusEntry>| -> Result<()> {
        if let Some((name, body)) = cur {
            let diagram = parse_pd(&body).map_err(|e| match e {
                Error::MalformedDiagram(m) => Error::MalformedDiagram(format!("{name}: {m}")),
                Error::Parse(m) => Error::Parse(format!("{name}: {m}")),
                other => other,
            })?;
            out.push(CorpusEntry { name, diagram });
        }
        Ok(())
    };
    for line in text.lines() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix("name:") {
            finish(current.take(), &mut entries)?;
            current = Some((name.trim().to_string(), String::new()));
        } else {
            let Some((_, body)) = current.as_mut() else {
                return Err(Error::Corpus(format!("PD line before any `name:` record: {content:?}")));
            };
            body.push_str(content);
            body.push('\n');
        }
    }
    finish(current, &mut entries)?;
    Ok(entries)
}

pub fn embedded() -> Vec<CorpusEntry> {
    parse_corpus(EMBEDDED).expect("embedded corpus is valid")
}

/// Looks up a diagram of the embedded corpus by name.
pub fn get(name: &str) -> Option<LinkDiagram> {
    embedded().into_iter().find(|e| e.name == name).map(|e| e.diagram)
}

pub fn load_file(path: &std::path::Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    parse_corpus(&text)
}
