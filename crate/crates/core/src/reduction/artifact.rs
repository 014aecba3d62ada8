use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::reduction::euler::eulerian_circuit;
use crate::reduction::gadget::{closed_form_counts, gadget_block, GadgetCase, GadgetCounts};
use crate::reduction::graph::DiGraph;
use crate::string::{IntString, WindowParams};

/// Where the copies encoding one arc sit in the generated string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSpan {
    /// Arc index in the input graph (`w >= 3`) or circuit step `i` for the
    /// arc `(v_i, v_{i+1})` (`w = 2`).
    pub arc_index: usize,
    pub arc: (u32, u32),
    /// 1-based, inclusive.
    pub start: usize,
    pub end: usize,
}

/// A generated instance of the minimizer-ordering decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub string: IntString,
    pub params: WindowParams,
    /// Number of counted middle blocks per arc; absent for `w = 2`.
    pub q: Option<usize>,
    pub ell: usize,
    pub ell_prime: usize,
    pub num_arcs: usize,
    pub layout: Vec<BlockSpan>,
    /// Block counts and block length; absent for `w = 2`.
    pub counts: Option<GadgetCounts>,
    pub block_len: Option<usize>,
    /// The Eulerian circuit the `w = 2` string was built from.
    pub circuit: Option<Vec<u32>>,
}

impl ReductionArtifact {
    pub fn is_w2(&self) -> bool {
        self.params.w() == 2
    }
}

fn check_ell_prime(ell_prime: usize) -> Result<()> {
    if ell_prime == 0 {
        return Err(Error::InvalidParameter("ell' must be positive".into()));
    }
    Ok(())
}

/// The `w >= 3` construction: for every arc `(a, b)` in input order, `q + 4`
/// consecutive copies of the block `T_ab`.
pub fn build_reduction_w3plus(
    g: &DiGraph,
    w: usize,
    k: usize,
    ell_prime: usize,
) -> Result<ReductionArtifact> {
    let counts = closed_form_counts(w, k)?;
    let block = gadget_block(w, k)?;
    check_ell_prime(ell_prime)?;
    let arcs = g.num_arcs();
    if arcs <= 1 {
        return Err(Error::InvalidGraph(format!(
            "the w >= 3 construction needs more than one arc (got {arcs})"
        )));
    }
    let q = match counts.case {
        GadgetCase::A => 4 * w * arcs + 1,
        GadgetCase::B | GadgetCase::C => 4 * arcs * (w + k + 3) + 1,
    };
    let ell = q * counts.gap() * (ell_prime + 1) + q * counts.m_ab * arcs;

    let run = (q + 4) * block.len();
    let mut symbols = Vec::with_capacity(run * arcs);
    let mut layout = Vec::with_capacity(arcs);
    for (i, &(a, b)) in g.arcs().iter().enumerate() {
        layout.push(BlockSpan {
            arc_index: i,
            arc: (a, b),
            start: symbols.len() + 1,
            end: symbols.len() + run,
        });
        for _ in 0..q + 4 {
            symbols.extend(block.instantiate(a, b));
        }
    }
    Ok(ReductionArtifact {
        string: IntString::new(symbols, g.num_vertices())?,
        params: WindowParams::new(w, k)?,
        q: Some(q),
        ell,
        ell_prime,
        num_arcs: arcs,
        layout,
        counts: Some(counts),
        block_len: Some(block.len()),
        circuit: None,
    })
}

/// The `w = 2` construction: the Eulerian circuit read backwards, each vertex
/// repeated `k + 1` times.
pub fn build_reduction_w2(g: &DiGraph, k: usize, ell_prime: usize) -> Result<ReductionArtifact> {
    let params = WindowParams::new(2, k)?;
    check_ell_prime(ell_prime)?;
    let circuit = eulerian_circuit(g)?;
    let arcs = g.num_arcs();
    let mut symbols = Vec::with_capacity((k + 1) * (arcs + 1));
    for &v in circuit.iter().rev() {
        symbols.extend(std::iter::repeat_n(v, k + 1));
    }
    // arc (v_i, v_{i+1}) is decided inside the block of v_{i+1}, which is
    // block number |A| - i - 1 (0-based) of the reversed string
    let layout = (0..arcs)
        .map(|i| {
            let start = (arcs - i - 1) * (k + 1) + 1;
            BlockSpan {
                arc_index: i,
                arc: (circuit[i], circuit[i + 1]),
                start,
                end: start + k,
            }
        })
        .collect();
    Ok(ReductionArtifact {
        string: IntString::new(symbols, g.num_vertices())?,
        params,
        q: None,
        ell: 1 + arcs * k + ell_prime,
        ell_prime,
        num_arcs: arcs,
        layout,
        counts: None,
        block_len: None,
        circuit: Some(circuit),
    })
}

impl ReductionArtifact {
    /// Line-oriented `key value` export; the string goes last as space
    /// separated codes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "variant {}",
            if self.is_w2() { "w2" } else { "w3plus" }
        );
        let _ = writeln!(out, "w {}", self.params.w());
        let _ = writeln!(out, "k {}", self.params.k());
        if let Some(q) = self.q {
            let _ = writeln!(out, "q {q}");
        }
        let _ = writeln!(out, "ell {}", self.ell);
        let _ = writeln!(out, "ell_prime {}", self.ell_prime);
        let _ = writeln!(out, "sigma {}", self.string.sigma());
        let _ = writeln!(out, "arcs {}", self.num_arcs);
        if let (Some(c), Some(len)) = (self.counts, self.block_len) {
            let _ = writeln!(out, "case {}", c.case);
            let _ = writeln!(out, "m_ab {}", c.m_ab);
            let _ = writeln!(out, "m_ba {}", c.m_ba);
            let _ = writeln!(out, "block_len {len}");
        }
        if let Some(circuit) = &self.circuit {
            let _ = writeln!(out, "circuit {}", join(circuit));
        }
        let _ = writeln!(out, "length {}", self.string.len());
        let _ = writeln!(out, "layout {}", self.layout.len());
        for b in &self.layout {
            let _ = writeln!(
                out,
                "{} {} {} {} {}",
                b.arc_index, b.arc.0, b.arc.1, b.start, b.end
            );
        }
        let _ = writeln!(out, "S {}", join(self.string.symbols()));
        out
    }

    pub fn parse<R: BufRead>(reader: R) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        let mut layout = Vec::new();
        let mut pending_layout = 0usize;
        let mut symbols: Option<Vec<u32>> = None;
        let mut circuit = None;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let err = |m: String| Error::Parse {
                line: lineno,
                message: m,
            };
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if pending_layout > 0 {
                let nums = parse_nums::<usize>(line).map_err(&err)?;
                if nums.len() != 5 {
                    return Err(err("layout rows have 5 fields".into()));
                }
                layout.push(BlockSpan {
                    arc_index: nums[0],
                    arc: (nums[1] as u32, nums[2] as u32),
                    start: nums[3],
                    end: nums[4],
                });
                pending_layout -= 1;
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "S" => symbols = Some(parse_nums(rest).map_err(&err)?),
                "circuit" => circuit = Some(parse_nums(rest).map_err(&err)?),
                "layout" => {
                    pending_layout = rest
                        .trim()
                        .parse()
                        .map_err(|_| err("bad layout count".into()))?
                }
                _ => {
                    fields.insert(key.to_string(), rest.trim().to_string());
                }
            }
        }
        let get = |key: &str| -> Result<usize> {
            fields
                .get(key)
                .ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!("missing field '{key}'"),
                })?
                .parse()
                .map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("field '{key}' is not a number"),
                })
        };
        let params = WindowParams::new(get("w")?, get("k")?)?;
        let sigma = get("sigma")? as u32;
        let string = IntString::new(
            symbols.ok_or(Error::Parse {
                line: 0,
                message: "missing string".into(),
            })?,
            sigma,
        )?;
        if string.len() != get("length")? {
            return Err(Error::Parse {
                line: 0,
                message: "length does not match the string".into(),
            });
        }
        let counts = match fields.get("case").map(String::as_str) {
            None => None,
            Some(tag) => Some(GadgetCounts {
                m_ab: get("m_ab")?,
                m_ba: get("m_ba")?,
                case: match tag {
                    "A" => GadgetCase::A,
                    "B" => GadgetCase::B,
                    "C" => GadgetCase::C,
                    other => {
                        return Err(Error::Parse {
                            line: 0,
                            message: format!("unknown case '{other}'"),
                        })
                    }
                },
            }),
        };
        Ok(Self {
            string,
            params,
            q: fields.contains_key("q").then(|| get("q")).transpose()?,
            ell: get("ell")?,
            ell_prime: get("ell_prime")?,
            num_arcs: get("arcs")?,
            layout,
            counts,
            block_len: fields
                .contains_key("block_len")
                .then(|| get("block_len"))
                .transpose()?,
            circuit,
        })
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_nums<T: std::str::FromStr>(text: &str) -> std::result::Result<Vec<T>, String> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("'{t}' is not a number")))
        .collect()
}
