//! Basepointed labelled graphs stored as one partial injection per letter.
//!
//! Storing each letter's edges as a partial injection makes every graph in
//! this representation an immersion into the rose: at most one outgoing and
//! one incoming edge per letter at every vertex. Folding therefore happens
//! before a graph is built (see [`crate::fold`]), never on a stored graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// An injective partial self-map of `{0, .., n-1}` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn empty(n: usize) -> Self {
        PartialInjection {
            forward: vec![None; n],
            backward: vec![None; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            forward: (0..n).map(Some).collect(),
            backward: (0..n).map(Some).collect(),
        }
    }

    /// Builds a partial injection from its forward table, rejecting
    /// non-injective or out-of-range tables.
    pub fn from_forward(forward: Vec<Option<usize>>) -> Option<Self> {
        let n = forward.len();
        let mut backward = vec![None; n];
        for (v, w) in forward.iter().enumerate() {
            if let Some(w) = *w {
                if w >= n || backward[w].is_some() {
                    return None;
                }
                backward[w] = Some(v);
            }
        }
        Some(PartialInjection { forward, backward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self, v: usize) -> Option<usize> {
        self.forward.get(v).copied().flatten()
    }

    pub fn backward(&self, w: usize) -> Option<usize> {
        self.backward.get(w).copied().flatten()
    }

    /// Inserts `v -> w`; returns false (and changes nothing) if either end is taken.
    pub fn insert(&mut self, v: usize, w: usize) -> bool {
        if self.forward[v].is_some() || self.backward[w].is_some() {
            return false;
        }
        self.forward[v] = Some(w);
        self.backward[w] = Some(v);
        true
    }

    pub fn domain_size(&self) -> usize {
        self.forward.iter().flatten().count()
    }

    pub fn is_total(&self) -> bool {
        self.forward.iter().all(Option::is_some)
    }

    /// `(v, w)` pairs in increasing order of `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward
            .iter()
            .enumerate()
            .filter_map(|(v, w)| w.map(|w| (v, w)))
    }

    pub fn forward_table(&self) -> &[Option<usize>] {
        &self.forward
    }

    /// Checks forward and backward agree everywhere.
    pub fn is_consistent(&self) -> bool {
        self.forward.len() == self.backward.len()
            && self
                .forward
                .iter()
                .enumerate()
                .all(|(v, w)| w.is_none_or(|w| self.backward.get(w) == Some(&Some(v))))
            && self
                .backward
                .iter()
                .enumerate()
                .all(|(w, v)| v.is_none_or(|v| self.forward.get(v) == Some(&Some(w))))
    }
}

/// A basepointed graph labelled by the letters of a free group of rank `rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    rank: usize,
    basepoint: usize,
    maps: Vec<PartialInjection>,
}

impl StallingsGraph {
    /// The one-vertex, edgeless graph of the trivial subgroup.
    pub fn trivial(rank: usize) -> Self {
        StallingsGraph {
            rank,
            basepoint: 0,
            maps: vec![PartialInjection::empty(1); rank],
        }
    }

    /// The rose: one vertex with a loop for every generator.
    pub fn rose(rank: usize) -> Self {
        StallingsGraph {
            rank,
            basepoint: 0,
            maps: vec![PartialInjection::identity(1); rank],
        }
    }

    pub fn from_maps(rank: usize, basepoint: usize, maps: Vec<PartialInjection>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("rank must be at least 1".into()));
        }
        if maps.len() != rank {
            return Err(Error::InvalidParameter(format!(
                "expected {rank} partial injections, got {}",
                maps.len()
            )));
        }
        let n = maps[0].len();
        if n == 0 || basepoint >= n {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex and a valid basepoint".into(),
            ));
        }
        if maps.iter().any(|m| m.len() != n || !m.is_consistent()) {
            return Err(Error::InvalidParameter(
                "partial injections disagree on the vertex set".into(),
            ));
        }
        Ok(StallingsGraph {
            rank,
            basepoint,
            maps,
        })
    }

    /// Builds a graph from `(slot, v, w)` triples with 0-based letter slots.
    /// Fails if two edges with the same label share a source or a target.
    pub fn from_edges(
        rank: usize,
        vertex_count: usize,
        basepoint: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("graph needs a vertex".into()));
        }
        let mut maps = vec![PartialInjection::empty(vertex_count); rank];
        for (slot, v, w) in edges {
            if slot >= rank {
                return Err(Error::Alphabet {
                    letter: slot as i64 + 1,
                    rank,
                });
            }
            if v >= vertex_count || w >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge {v} -> {w} leaves the vertex set"
                )));
            }
            if !maps[slot].insert(v, w) {
                return Err(Error::InvalidParameter(format!(
                    "letter {} is not deterministic at edge {v} -> {w}",
                    slot + 1
                )));
            }
        }
        StallingsGraph::from_maps(rank, basepoint, maps)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.maps[0].len()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn maps(&self) -> &[PartialInjection] {
        &self.maps
    }

    /// The map of the generator with 0-based slot `slot`.
    pub fn map(&self, slot: usize) -> &PartialInjection {
        &self.maps[slot]
    }

    /// Number of edges, each letter-edge counted once.
    pub fn edge_count(&self) -> usize {
        self.maps.iter().map(PartialInjection::domain_size).sum()
    }

    /// All edges as `(slot, v, w)`, sorted by `(slot, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.maps
            .iter()
            .enumerate()
            .flat_map(|(slot, m)| m.pairs().map(move |(v, w)| (slot, v, w)))
    }

    /// One step along `letter`, or `None` if the edge is missing.
    pub fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        let map = self.maps.get(letter.slot())?;
        if letter.is_inverse() {
            map.backward(v)
        } else {
            map.forward(v)
        }
    }

    /// Neighbours of `v` in canonical letter order: `x1, x1^-1, x2, x2^-1, ..`.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (Letter, usize)> + '_ {
        (1..=self.rank).flat_map(move |index| {
            [Letter::new(index, false), Letter::new(index, true)]
                .into_iter()
                .filter_map(move |l| self.step(v, l).map(|w| (l, w)))
        })
    }

    /// Total degree: outgoing plus incoming edges over all letters. A loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.maps
            .iter()
            .map(|m| usize::from(m.forward(v).is_some()) + usize::from(m.backward(v).is_some()))
            .sum()
    }

    /// Follows `word` from `start`, or returns `None` at the first missing edge.
    pub fn trace(&self, start: usize, word: &Word) -> Option<usize> {
        word.letters()
            .iter()
            .try_fold(start, |v, &letter| self.step(v, letter))
    }

    /// Whether `word` reads a closed path at the basepoint.
    pub fn is_member(&self, word: &Word) -> bool {
        self.trace(self.basepoint, word) == Some(self.basepoint)
    }

    /// Vertices reachable from `v` (edges taken as undirected), in canonical BFS order.
    fn bfs_order(&self, v: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut order = vec![v];
        seen[v] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for (_, w) in self.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_order(self.basepoint).len() == self.vertex_count()
    }

    /// The component of `v`, renumbered in canonical BFS order and based at `v` (now 0).
    pub fn connected_component(&self, v: usize) -> StallingsGraph {
        let order = self.bfs_order(v);
        self.relabel(&order, 0)
    }

    /// Canonical numbering of the basepoint component.
    ///
    /// Two connected graphs are basepoint-isomorphic exactly when their
    /// canonical forms are equal, since a deterministic labelled graph admits
    /// at most one basepoint-preserving isomorphism onto another.
    pub fn canonical(&self) -> StallingsGraph {
        self.connected_component(self.basepoint)
    }

    pub fn is_isomorphic(&self, other: &StallingsGraph) -> bool {
        self.rank == other.rank
            && self.vertex_count() == other.vertex_count()
            && self.canonical() == other.canonical()
    }

    /// Keeps the vertices listed in `order`, numbering them by position.
    fn relabel(&self, order: &[usize], basepoint: usize) -> StallingsGraph {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let forward = order
                    .iter()
                    .map(|&v| m.forward(v).map(|w| new_id[w]).filter(|&w| w != usize::MAX))
                    .collect();
                PartialInjection::from_forward(forward).expect("relabelling keeps injectivity")
            })
            .collect();
        StallingsGraph {
            rank: self.rank,
            basepoint,
            maps,
        }
    }

    /// Deletes non-basepoint vertices of degree at most one until none remain,
    /// then renumbers canonically with the basepoint at 0.
    pub fn trim_to_core(&self) -> Result<StallingsGraph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.vertex_count();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n)
            .filter(|&v| v != self.basepoint && degree[v] <= 1)
            .collect();
        while let Some(v) = queue.pop_front() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for (_, w) in self.neighbours(v) {
                if removed[w] || w == v {
                    continue;
                }
                degree[w] -= 1;
                if w != self.basepoint && degree[w] <= 1 {
                    queue.push_back(w);
                }
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        let base_pos = kept
            .iter()
            .position(|&v| v == self.basepoint)
            .expect("basepoint is never trimmed");
        Ok(self.relabel(&kept, base_pos).canonical())
    }

    /// Connected, with no vertex other than the basepoint of degree at most one.
    pub fn is_core(&self) -> bool {
        self.is_connected()
            && (0..self.vertex_count()).all(|v| v == self.basepoint || self.degree(v) >= 2)
    }

    /// Every letter's map is consistent with its inverse; always true for a
    /// graph built through this module's constructors.
    pub fn is_folded(&self) -> bool {
        self.maps.iter().all(PartialInjection::is_consistent)
    }

    /// `E - V + 1`, the rank of the fundamental group.
    pub fn cycle_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edge_count() + 1 - self.vertex_count())
    }

    /// `max(0, E - V)`.
    pub fn reduced_rank(&self) -> Result<usize> {
        Ok(self.cycle_rank()?.saturating_sub(1))
    }

    /// Whether every letter acts as a permutation, i.e. the graph covers the rose.
    pub fn is_covering_of_rose(&self) -> bool {
        self.maps.iter().all(PartialInjection::is_total)
    }

    /// The canonical BFS spanning tree of the basepoint component.
    pub fn spanning_tree(&self) -> SpanningTree {
        let order = self.bfs_order(self.basepoint);
        let mut parent: Vec<Option<(Letter, usize)>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        seen[self.basepoint] = true;
        for &u in &order {
            for (letter, w) in self.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((letter, u));
                }
            }
        }
        let mut paths = vec![Word::identity(); self.vertex_count()];
        for &v in &order {
            if let Some((letter, p)) = parent[v] {
                paths[v] = &paths[p] * &Word::reduce([letter]);
            }
        }
        SpanningTree { parent, paths }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub(crate) fn disjoint_union_edges(
        &self,
        other: &StallingsGraph,
    ) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let shift = self.vertex_count();
        let other_edges: Vec<_> = other.edges().map(|(a, v, w)| (a, v + shift, w + shift)).collect();
        self.edges().chain(other_edges)
    }
}

/// A spanning tree rooted at the basepoint, with the tree path to each vertex.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    parent: Vec<Option<(Letter, usize)>>,
    paths: Vec<Word>,
}

impl SpanningTree {
    /// The letter and vertex `v` was reached from, `None` at the root or
    /// outside the basepoint component.
    pub fn parent(&self, v: usize) -> Option<(Letter, usize)> {
        self.parent[v]
    }

    /// Word spelled by the tree path from the basepoint to `v`.
    pub fn path(&self, v: usize) -> &Word {
        &self.paths[v]
    }

    /// Whether the edge `v -a-> w` (0-based slot) belongs to the tree.
    pub fn contains_edge(&self, slot: usize, v: usize, w: usize) -> bool {
        self.parent[w] == Some((Letter::new(slot + 1, false), v))
            || self.parent[v] == Some((Letter::new(slot + 1, true), w))
    }
}
