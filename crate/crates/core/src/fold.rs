//! Stallings folding with a union-find over vertices.
//!
//! Every vertex root keeps, per letter, one outgoing and one incoming
//! neighbour. Adding an edge whose slot is already taken, or merging two roots
//! whose slots are both taken, queues the two neighbours for identification.
//! Each queued pair is resolved once, so folding runs in `O(E * r * α(V))`.

use crate::error::{Error, Result};
use crate::graph::StallingsGraph;
use crate::word::Word;

const NONE: usize = usize::MAX;

/// An unfolded labelled multigraph being folded incrementally.
#[derive(Clone, Debug)]
pub struct Folder {
    rank: usize,
    parent: Vec<usize>,
    size: Vec<usize>,
    out: Vec<usize>,
    inc: Vec<usize>,
    pending: Vec<(usize, usize)>,
}

impl Folder {
    pub fn new(rank: usize) -> Self {
        Folder {
            rank,
            parent: Vec::new(),
            size: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
            pending: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.size.push(1);
        self.out.extend(std::iter::repeat_n(NONE, self.rank));
        self.inc.extend(std::iter::repeat_n(NONE, self.rank));
        id
    }

    pub fn add_vertices(&mut self, count: usize) {
        for _ in 0..count {
            self.add_vertex();
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[v] != root {
            let next = self.parent[v];
            self.parent[v] = root;
            v = next;
        }
        root
    }

    /// Adds an edge labelled by the 0-based letter `slot` from `v` to `w`.
    pub fn add_edge(&mut self, slot: usize, v: usize, w: usize) {
        let v = self.find(v);
        let w = self.find(w);
        let o = v * self.rank + slot;
        match self.out[o] {
            NONE => self.out[o] = w,
            t => self.pending.push((t, w)),
        }
        let i = w * self.rank + slot;
        match self.inc[i] {
            NONE => self.inc[i] = v,
            s => self.pending.push((s, v)),
        }
        self.drain();
    }

    /// Adds a path spelling `word` from `start`, ending at `end` if given,
    /// otherwise at a fresh vertex. Returns the endpoint.
    pub fn add_path(&mut self, start: usize, word: &Word, end: Option<usize>) -> usize {
        let letters = word.letters();
        let mut current = start;
        for (i, &letter) in letters.iter().enumerate() {
            let next = match end {
                Some(e) if i + 1 == letters.len() => e,
                _ => self.add_vertex(),
            };
            if letter.is_inverse() {
                self.add_edge(letter.slot(), next, current);
            } else {
                self.add_edge(letter.slot(), current, next);
            }
            current = next;
        }
        match end {
            Some(e) if letters.is_empty() => {
                self.identify(start, e);
                e
            }
            _ => current,
        }
    }

    /// Identifies two vertices, folding as required.
    pub fn identify(&mut self, a: usize, b: usize) {
        self.pending.push((a, b));
        self.drain();
    }

    fn drain(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (root, child) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
            self.parent[child] = root;
            self.size[root] += self.size[child];
            for slot in 0..self.rank {
                for table in [&mut self.out, &mut self.inc] {
                    let c = table[child * self.rank + slot];
                    if c == NONE {
                        continue;
                    }
                    let r = &mut table[root * self.rank + slot];
                    if *r == NONE {
                        *r = c;
                    } else {
                        self.pending.push((*r, c));
                    }
                }
            }
        }
    }

    /// The folded graph on the component of `basepoint`, canonically numbered.
    pub fn finish(mut self, basepoint: usize) -> StallingsGraph {
        let n = self.parent.len();
        let mut new_id = vec![NONE; n];
        let mut count = 0;
        for (v, id) in new_id.iter_mut().enumerate() {
            if self.find(v) == v {
                *id = count;
                count += 1;
            }
        }
        let mut edges = Vec::new();
        for v in 0..n {
            if self.parent[v] != v {
                continue;
            }
            for slot in 0..self.rank {
                let t = self.out[v * self.rank + slot];
                if t != NONE {
                    let t = self.find(t);
                    edges.push((slot, new_id[v], new_id[t]));
                }
            }
        }
        let base = new_id[self.find(basepoint)];
        StallingsGraph::from_edges(self.rank, count, base, edges)
            .expect("folding reaches a deterministic fixed point")
            .canonical()
    }
}

/// Folds a graph given as labelled edges `(slot, v, w)` on `vertex_count` vertices.
/// Returns the folded basepoint component, not trimmed.
pub fn fold_edges(
    rank: usize,
    vertex_count: usize,
    basepoint: usize,
    edges: impl IntoIterator<Item = (usize, usize, usize)>,
) -> Result<StallingsGraph> {
    if rank == 0 {
        return Err(Error::InvalidParameter("rank must be at least 1".into()));
    }
    if basepoint >= vertex_count {
        return Err(Error::InvalidParameter("basepoint outside vertex set".into()));
    }
    let mut folder = Folder::new(rank);
    folder.add_vertices(vertex_count);
    for (slot, v, w) in edges {
        if slot >= rank {
            return Err(Error::Alphabet {
                letter: slot as i64 + 1,
                rank,
            });
        }
        if v >= vertex_count || w >= vertex_count {
            return Err(Error::InvalidParameter(format!("edge {v} -> {w} leaves the vertex set")));
        }
        folder.add_edge(slot, v, w);
    }
    Ok(folder.finish(basepoint))
}

/// The Stallings graph of the subgroup generated by `generators`: a wedge of
/// loops at the basepoint, folded and trimmed.
pub fn fold_from_words(rank: usize, generators: &[Word]) -> Result<StallingsGraph> {
    if rank == 0 {
        return Err(Error::InvalidParameter("rank must be at least 1".into()));
    }
    for g in generators {
        g.check_rank(rank)?;
    }
    let mut folder = Folder::new(rank);
    let base = folder.add_vertex();
    for g in generators.iter().filter(|g| !g.is_empty()) {
        folder.add_path(base, g, Some(base));
    }
    folder.finish(base).trim_to_core()
}
