//! Plain-text formats for graphs and subgroup presentations.
//!
//! Graph files start with `rank n basepoint`, followed by one `a v w` line per
//! `a`-labelled edge `v -> w`, sorted by `(a, v)`. Subgroup files start with
//! `rank r`, followed by one generator per line as signed integers
//! (`1 -2 1`). Lines starting with `#` and blank lines are ignored on input.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::StallingsGraph;
use crate::word::{Letter, Word};

/// A subgroup presentation: ambient rank plus generator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub rank: usize,
    pub generators: Vec<Word>,
}

pub fn write_graph(graph: &StallingsGraph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        graph.rank(),
        graph.vertex_count(),
        graph.basepoint()
    );
    for (slot, v, w) in graph.edges() {
        writeln!(out, "{} {v} {w}", slot + 1).unwrap();
    }
    out
}

/// Graph text preceded by a `# key=value ...` provenance line.
pub fn write_graph_with_comment(graph: &StallingsGraph, comment: &str) -> String {
    format!("# {comment}\n{}", write_graph(graph))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints<T: std::str::FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| Error::format(line_no, format!("expected an integer, found `{tok}`")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<StallingsGraph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::format(1, "missing `rank n basepoint` header"))?;
    let [rank, n, basepoint] = <[usize; 3]>::try_from(parse_ints::<usize>(header_no, header)?)
        .map_err(|_| Error::format(header_no, "header must be `rank n basepoint`"))?;
    if rank == 0 || n == 0 || basepoint >= n {
        return Err(Error::format(
            header_no,
            "need rank >= 1, n >= 1 and basepoint < n",
        ));
    }
    let mut edges = Vec::new();
    let mut last: Option<(usize, usize)> = None;
    let mut targets = std::collections::HashSet::new();
    for (line_no, line) in lines {
        let [a, v, w] = <[usize; 3]>::try_from(parse_ints::<usize>(line_no, line)?)
            .map_err(|_| Error::format(line_no, "edge must be `a v w`"))?;
        if a == 0 || a > rank {
            return Err(Error::format(line_no, format!("letter {a} outside rank {rank}")));
        }
        if v >= n || w >= n {
            return Err(Error::format(line_no, format!("vertex outside 0..{n}")));
        }
        if last.is_some_and(|prev| prev >= (a, v)) {
            return Err(Error::format(line_no, "edges must be sorted by (letter, source)"));
        }
        last = Some((a, v));
        if !targets.insert((a, w)) {
            return Err(Error::format(line_no, format!("two {a}-edges enter vertex {w}")));
        }
        edges.push((a - 1, v, w));
    }
    StallingsGraph::from_edges(rank, n, basepoint, edges)
}

pub fn write_presentation(p: &Presentation) -> String {
    let mut out = format!("rank {}\n", p.rank);
    for g in &p.generators {
        writeln!(out, "{g}").unwrap();
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::format(1, "missing `rank r` header"))?;
    let rank = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["rank", r] => r
            .parse::<usize>()
            .ok()
            .filter(|&r| r >= 1)
            .ok_or_else(|| Error::format(header_no, "rank must be a positive integer"))?,
        _ => return Err(Error::format(header_no, "header must be `rank r`")),
    };
    let mut generators = Vec::new();
    for (line_no, line) in lines {
        let letters = parse_ints::<i32>(line_no, line)?
            .into_iter()
            .map(|v| {
                Letter::from_signed(v)
                    .filter(|l| l.index() <= rank)
                    .ok_or_else(|| Error::format(line_no, format!("letter {v} outside rank {rank}")))
            })
            .collect::<Result<Vec<_>>>()?;
        generators.push(Word::reduce(letters));
    }
    Ok(Presentation { rank, generators })
}

/// Either kind of input file, told apart by the header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph(StallingsGraph),
    Presentation(Presentation),
}

pub fn parse_input(text: &str) -> Result<Input> {
    let is_presentation = content_lines(text)
        .next()
        .is_some_and(|(_, l)| l.starts_with("rank"));
    if is_presentation {
        parse_presentation(text).map(Input::Presentation)
    } else {
        parse_graph(text).map(Input::Graph)
    }
}
