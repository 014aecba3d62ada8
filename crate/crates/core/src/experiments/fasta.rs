use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};
use crate::string::IntString;

/// What to do with letters other than A, C, G and T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmbiguityPolicy {
    /// Split the record at every such letter and keep the clean runs.
    #[default]
    Skip,
    /// Map every such letter to code 4.
    FifthLetter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub identifier: String,
    /// Over A=0, C=1, G=2, T=3 (and 4 under [`AmbiguityPolicy::FifthLetter`]).
    pub sequence: IntString,
}

fn dna_code(c: u8) -> Option<u32> {
    match c.to_ascii_uppercase() {
        b'A' => Some(0),
        b'C' => Some(1),
        b'G' => Some(2),
        b'T' => Some(3),
        _ => None,
    }
}

pub fn load_fasta(path: impl AsRef<Path>, policy: AmbiguityPolicy) -> Result<Vec<SequenceRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_fasta(BufReader::new(file), policy)
}

pub fn parse_fasta<R: BufRead>(reader: R, policy: AmbiguityPolicy) -> Result<Vec<SequenceRecord>> {
    let mut raw: Vec<(String, Vec<u8>)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end();
        if let Some(header) = line.strip_prefix('>') {
            let id = header.split_whitespace().next().ok_or(Error::Parse {
                line: idx + 1,
                message: "header without an identifier".into(),
            })?;
            raw.push((id.to_string(), Vec::new()));
        } else if !line.trim().is_empty() {
            let (_, body) = raw.last_mut().ok_or(Error::Parse {
                line: idx + 1,
                message: "sequence data before the first '>' header".into(),
            })?;
            body.extend(line.bytes().filter(|b| !b.is_ascii_whitespace()));
        }
    }
    if raw.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "empty FASTA input".into(),
        });
    }

    let mut records = Vec::new();
    for (id, body) in raw {
        match policy {
            AmbiguityPolicy::FifthLetter => {
                let codes = body.iter().map(|&b| dna_code(b).unwrap_or(4)).collect();
                records.push(SequenceRecord {
                    identifier: id,
                    sequence: IntString::new(codes, 5)?,
                });
            }
            AmbiguityPolicy::Skip => {
                let runs: Vec<Vec<u32>> = body
                    .split(|&b| dna_code(b).is_none())
                    .filter(|run| !run.is_empty())
                    .map(|run| {
                        run.iter()
                            .map(|&b| dna_code(b).expect("clean run"))
                            .collect()
                    })
                    .collect();
                let single = runs.len() == 1;
                for (j, run) in runs.into_iter().enumerate() {
                    let identifier = if single {
                        id.clone()
                    } else {
                        format!("{id}:{}", j + 1)
                    };
                    records.push(SequenceRecord {
                        identifier,
                        sequence: IntString::new(run, 4)?,
                    });
                }
            }
        }
    }
    Ok(records)
}
