//! Line-oriented text formats: instance files, trajectory files, host edge
//! lists and solution cycle lines. Vertices are 1-based on disk and 0-based
//! in memory.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::bits::BitVec;
use crate::cycle::{is_cycle, Cycle};
use crate::generate::HostGraph;
use crate::graph::{EdgeUniverse, GraphError, Instance, VertexId};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `{expected} <n> <k>`")]
    MalformedHeader { line: usize, expected: &'static str },
    #[error("line {line}: malformed edge line")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop ({v}, {v})")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge ({u}, {v}) in this section")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge outside a graph section")]
    EdgeOutsideSection { line: usize },
    #[error("line {line}: unrecognized directive `{directive}`")]
    UnknownDirective { line: usize, directive: String },
    #[error("header declares {declared} sections but the file has {found}")]
    SectionCountMismatch { declared: usize, found: usize },
    #[error("line {line}: expected `frame {expected}`")]
    FrameOutOfOrder { line: usize, expected: usize },
    #[error("empty frame range {start}..{end}")]
    EmptyRange { start: usize, end: usize },
    #[error("frame range {start}..{end} out of bounds 1..={frames}")]
    RangeOutOfBounds {
        start: usize,
        end: usize,
        frames: usize,
    },
    #[error("line {line}: malformed cycle line")]
    MalformedCycle { line: usize },
    #[error("line {line}: edge ({u}, {v}) is not in the instance")]
    UnknownEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge set is not a cycle")]
    NotACycle { line: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

struct Lines<'a, R> {
    reader: &'a mut R,
    buf: String,
    line: usize,
}

impl<R: BufRead> Lines<'_, R> {
    /// Next non-empty line with comments stripped, with its 1-based number.
    fn next_content(&mut self) -> Result<Option<(usize, &str)>, ParseError> {
        let (line, start, end) = loop {
            self.buf.clear();
            if self.reader.read_line(&mut self.buf)? == 0 {
                return Ok(None);
            }
            self.line += 1;
            let content = match self.buf.split_once('#') {
                Some((before, _)) => before,
                None => &self.buf,
            }
            .trim();
            if !content.is_empty() {
                let start = content.as_ptr() as usize - self.buf.as_ptr() as usize;
                break (self.line, start, start + content.len());
            }
        };
        Ok(Some((line, &self.buf[start..end])))
    }
}

fn parse_header(
    content: &str,
    line: usize,
    expected: &'static str,
) -> Result<(usize, usize), ParseError> {
    let mut parts = content.split_ascii_whitespace();
    let err = || ParseError::MalformedHeader { line, expected };
    if parts.next() != Some(expected) {
        return Err(err());
    }
    let n = parts.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    let k: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    if parts.next().is_some() || k == 0 {
        return Err(err());
    }
    Ok((n, k))
}

fn parse_edge_line(content: &str, line: usize, n: usize) -> Result<(usize, usize), ParseError> {
    let mut parts = content.split_ascii_whitespace();
    parts.next(); // the `e`
    let err = || ParseError::MalformedEdge { line };
    let u: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    let v: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    if parts.next().is_some() {
        return Err(err());
    }
    for &x in &[u, v] {
        if x == 0 || x > n {
            return Err(ParseError::VertexOutOfRange {
                line,
                vertex: x,
                n,
            });
        }
    }
    if u == v {
        return Err(ParseError::SelfLoop { line, v: u });
    }
    Ok((u - 1, v - 1))
}

/// Sections of `e u v` lines introduced by a directive such as `graph <name>`
/// or `frame <t>`.
fn parse_sections<R: BufRead>(
    lines: &mut Lines<'_, R>,
    n: usize,
    section_word: &str,
) -> Result<Vec<(String, Vec<(VertexId, VertexId)>)>, ParseError> {
    let mut sections: Vec<(String, Vec<(VertexId, VertexId)>)> = Vec::new();
    let mut seen: Vec<std::collections::HashSet<(usize, usize)>> = Vec::new();
    while let Some((line, content)) = lines.next_content()? {
        let directive = content.split_ascii_whitespace().next().unwrap();
        match directive {
            w if w == section_word => {
                let name = content[w.len()..].trim().to_string();
                sections.push((name, Vec::new()));
                seen.push(Default::default());
            }
            "e" => {
                let (u, v) = parse_edge_line(content, line, n)?;
                let Some((_, edges)) = sections.last_mut() else {
                    return Err(ParseError::EdgeOutsideSection { line });
                };
                if !seen.last_mut().unwrap().insert((u.min(v), u.max(v))) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.min(v) + 1,
                        v: u.max(v) + 1,
                    });
                }
                edges.push((u, v));
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                })
            }
        }
    }
    Ok(sections)
}

/// Parses the instance format: `mcbi <n> <k>` followed by `k` sections of
/// `graph <name>` / `e <u> <v>` lines.
pub fn parse_instance<R: BufRead>(reader: &mut R) -> Result<Instance, ParseError> {
    let mut lines = Lines {
        reader,
        buf: String::new(),
        line: 0,
    };
    let (line, content) = lines
        .next_content()?
        .ok_or(ParseError::MalformedHeader {
            line: 1,
            expected: "mcbi",
        })?;
    let (n, k) = parse_header(content, line, "mcbi")?;
    let sections = parse_sections(&mut lines, n, "graph")?;
    if sections.len() != k {
        return Err(ParseError::SectionCountMismatch {
            declared: k,
            found: sections.len(),
        });
    }
    Ok(Instance::from_edge_lists(n, sections)?)
}

/// Parses the trajectory format and keeps the 1-based inclusive frame range
/// (`None` selects every frame).
pub fn parse_trajectory<R: BufRead>(
    reader: &mut R,
    range: Option<(usize, usize)>,
) -> Result<Instance, ParseError> {
    let mut lines = Lines {
        reader,
        buf: String::new(),
        line: 0,
    };
    let (line, content) = lines
        .next_content()?
        .ok_or(ParseError::MalformedHeader {
            line: 1,
            expected: "traj",
        })?;
    let (n, frames) = parse_header(content, line, "traj")?;
    let sections = parse_sections(&mut lines, n, "frame")?;
    if sections.len() != frames {
        return Err(ParseError::SectionCountMismatch {
            declared: frames,
            found: sections.len(),
        });
    }
    for (i, (label, _)) in sections.iter().enumerate() {
        if label.parse::<usize>() != Ok(i + 1) {
            return Err(ParseError::FrameOutOfOrder {
                line: 0,
                expected: i + 1,
            });
        }
    }
    let (start, end) = range.unwrap_or((1, frames));
    if start > end {
        return Err(ParseError::EmptyRange { start, end });
    }
    if start == 0 || end > frames {
        return Err(ParseError::RangeOutOfBounds { start, end, frames });
    }
    let selected = sections[start - 1..end]
        .iter()
        .map(|(label, edges)| (format!("frame{label}"), edges.clone()))
        .collect();
    Ok(Instance::from_edge_lists(n, selected)?)
}

/// Parses a host edge list: `host <n> <m>` then `m` lines `e <u> <v>`.
pub fn parse_host<R: BufRead>(reader: &mut R) -> Result<HostGraph, ParseError> {
    let mut lines = Lines {
        reader,
        buf: String::new(),
        line: 0,
    };
    let (line, content) = lines
        .next_content()?
        .ok_or(ParseError::MalformedHeader {
            line: 1,
            expected: "host",
        })?;
    let (n, m) = parse_header(content, line, "host")?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    while let Some((line, content)) = lines.next_content()? {
        if !content.starts_with('e') {
            return Err(ParseError::MalformedEdge { line });
        }
        let (u, v) = parse_edge_line(content, line, n)?;
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u.min(v) + 1,
                v: u.max(v) + 1,
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::SectionCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(HostGraph::new(n, edges).expect("validated during parse"))
}

/// Canonical instance serialization; `parse_instance` of the output
/// reproduces the instance exactly.
pub fn write_instance<W: Write>(w: &mut W, instance: &Instance) -> io::Result<()> {
    let universe = instance.universe();
    writeln!(
        w,
        "mcbi {} {}",
        universe.vertex_count(),
        instance.graph_count()
    )?;
    for (graph, name) in instance.graphs().iter().zip(instance.names()) {
        writeln!(w, "graph {name}")?;
        for e in graph.edge_set().ones() {
            let (u, v) = universe.endpoints(e);
            writeln!(w, "e {} {}", u + 1, v + 1)?;
        }
    }
    Ok(())
}

/// Text form of a cycle: `c u1 v1 u2 v2 ...`, edges in universe order,
/// endpoints 1-based.
pub fn cycle_line(universe: &EdgeUniverse, cycle: &Cycle) -> String {
    let mut out = String::from("c");
    for e in cycle.edges() {
        let (u, v) = universe.endpoints(e);
        write!(out, " {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses one `c u1 v1 ...` line into a cycle over the universe.
pub fn parse_cycle_line(
    universe: &EdgeUniverse,
    content: &str,
    line: usize,
) -> Result<Cycle, ParseError> {
    let tokens = content
        .split_ascii_whitespace()
        .skip(1)
        .map(|t| t.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| ParseError::MalformedCycle { line })?;
    if tokens.len() % 2 != 0 || tokens.is_empty() {
        return Err(ParseError::MalformedCycle { line });
    }
    let n = universe.vertex_count();
    let mut bits = BitVec::zeros(universe.edge_count());
    for pair in tokens.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        for &x in &[u, v] {
            if x == 0 || x > n {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex: x,
                    n,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, v: u });
        }
        let e = universe
            .edge_id(u - 1, v - 1)
            .ok_or(ParseError::UnknownEdge { line, u, v })?;
        bits.set(e, true);
    }
    if !is_cycle(universe, &bits) {
        return Err(ParseError::NotACycle { line });
    }
    Ok(Cycle::try_new(universe, bits).expect("checked"))
}

/// Parses a solution file: one cycle per `c ...` line.
pub fn parse_solution<R: BufRead>(
    reader: &mut R,
    universe: &EdgeUniverse,
) -> Result<Vec<Cycle>, ParseError> {
    let mut lines = Lines {
        reader,
        buf: String::new(),
        line: 0,
    };
    let mut cycles = Vec::new();
    while let Some((line, content)) = lines.next_content()? {
        if !content.starts_with('c') {
            return Err(ParseError::MalformedCycle { line });
        }
        cycles.push(parse_cycle_line(universe, content, line)?);
    }
    Ok(cycles)
}
