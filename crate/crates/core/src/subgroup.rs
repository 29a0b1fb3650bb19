//! Subgroup-level operations on Stallings graphs.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fold::{fold_from_words, Folder};
use crate::graph::{PartialInjection, StallingsGraph};
use crate::word::{Letter, Word};

/// A finitely generated subgroup of the free group of rank `ambient_rank`,
/// held as its canonically numbered core graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    graph: StallingsGraph,
}

/// Index of a subgroup: a vertex count when the graph is a covering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Finite(usize),
    Infinite,
}

impl Index {
    pub fn finite(self) -> Option<usize> {
        match self {
            Index::Finite(n) => Some(n),
            Index::Infinite => None,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => f.write_str("infinite"),
        }
    }
}

impl Subgroup {
    /// The free group itself.
    pub fn full(rank: usize) -> Self {
        Subgroup {
            graph: StallingsGraph::rose(rank),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Subgroup {
            graph: StallingsGraph::trivial(rank),
        }
    }

    pub fn from_words(rank: usize, generators: &[Word]) -> Result<Self> {
        Ok(Subgroup {
            graph: fold_from_words(rank, generators)?,
        })
    }

    /// Wraps a graph that is already a core graph.
    pub fn from_core_graph(graph: StallingsGraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::NotCore("graph is disconnected"));
        }
        if !graph.is_core() {
            return Err(Error::NotCore("graph has a leaf other than the basepoint"));
        }
        Ok(Subgroup {
            graph: graph.canonical(),
        })
    }

    /// The subgroup read off the basepoint component of any graph, trimmed.
    pub fn from_graph(graph: &StallingsGraph) -> Self {
        Subgroup {
            graph: graph
                .canonical()
                .trim_to_core()
                .expect("canonical form is connected"),
        }
    }

    pub fn graph(&self) -> &StallingsGraph {
        &self.graph
    }

    pub fn into_graph(self) -> StallingsGraph {
        self.graph
    }

    pub fn ambient_rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn rank(&self) -> usize {
        self.graph.cycle_rank().expect("core graphs are connected")
    }

    pub fn reduced_rank(&self) -> usize {
        self.rank().saturating_sub(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.graph.is_member(word)
    }

    fn check_same_rank(&self, other: &Subgroup) -> Result<()> {
        if self.ambient_rank() == other.ambient_rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.ambient_rank(),
                right: other.ambient_rank(),
            })
        }
    }

    /// `H ∩ K`: the basepoint component of the pullback, trimmed.
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_rank(other)?;
        let component =
            Pullback::basepoint_component(&self.graph, &other.graph).into_graph();
        Ok(Subgroup::from_graph(&component))
    }

    /// `H ∨ K`: the two graphs wedged at their basepoints and folded.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_rank(other)?;
        let mut folder = Folder::new(self.ambient_rank());
        let shift = self.graph.vertex_count();
        folder.add_vertices(shift + other.graph.vertex_count());
        for (slot, v, w) in self.graph.disjoint_union_edges(&other.graph) {
            folder.add_edge(slot, v, w);
        }
        folder.identify(self.graph.basepoint(), other.graph.basepoint() + shift);
        Ok(Subgroup::from_graph(&folder.finish(self.graph.basepoint())))
    }

    /// Sum of reduced ranks over all components of the pullback, i.e. over
    /// the double cosets `HgK` with `H ∩ gKg⁻¹` nontrivial.
    pub fn shnc_left_side(&self, other: &Subgroup) -> Result<usize> {
        self.check_same_rank(other)?;
        Ok(Pullback::new(&self.graph, &other.graph).component_reduced_rank_sum())
    }

    /// `|F : H|`, finite exactly when the graph covers the rose.
    pub fn index_in_free_group(&self) -> Index {
        if self.graph.is_covering_of_rose() {
            Index::Finite(self.graph.vertex_count())
        } else {
            Index::Infinite
        }
    }

    /// `|self : sub|` for a subgroup `sub` of `self`.
    ///
    /// The generators of `sub` are rewritten over the spanning-tree basis of
    /// `self` (one new letter per non-tree edge) and the index of the
    /// resulting subgroup of a free group of rank `rank(self)` is read off.
    pub fn relative_index(&self, sub: &Subgroup) -> Result<Index> {
        self.check_same_rank(sub)?;
        let rewriter = SchreierRewriter::new(&self.graph);
        let mut rewritten = Vec::new();
        for g in sub.basis() {
            match rewriter.rewrite(&g) {
                Some(word) => rewritten.push(word),
                None => return Err(Error::NotASubgroup { word: g.to_string() }),
            }
        }
        if rewriter.rank() == 0 {
            return Ok(Index::Finite(1));
        }
        let image = Subgroup::from_words(rewriter.rank(), &rewritten)?;
        Ok(image.index_in_free_group())
    }

    /// A free basis read off the canonical BFS spanning tree: one word per
    /// non-tree edge, ordered by `(letter, source)`.
    pub fn basis(&self) -> Vec<Word> {
        let tree = self.graph.spanning_tree();
        self.graph
            .edges()
            .filter(|&(slot, v, w)| !tree.contains_edge(slot, v, w))
            .map(|(slot, v, w)| {
                let a = Letter::gen(slot + 1);
                Word::reduce(
                    tree.path(v)
                        .letters()
                        .iter()
                        .copied()
                        .chain(std::iter::once(a))
                        .chain(tree.path(w).inverse().letters().iter().copied()),
                )
            })
            .collect()
    }

    /// `w H w⁻¹`: a fresh basepoint joined to the old one by a path spelling `w`.
    pub fn conjugate(&self, w: &Word) -> Result<Subgroup> {
        w.check_rank(self.ambient_rank())?;
        let mut folder = Folder::new(self.ambient_rank());
        let n = self.graph.vertex_count();
        folder.add_vertices(n);
        for (slot, v, u) in self.graph.edges() {
            folder.add_edge(slot, v, u);
        }
        let base = folder.add_vertex();
        folder.add_path(base, w, Some(self.graph.basepoint()));
        Ok(Subgroup::from_graph(&folder.finish(base)))
    }

    pub fn is_isomorphic(&self, other: &Subgroup) -> bool {
        self.graph.is_isomorphic(&other.graph)
    }
}

/// Rewrites words accepted by a core graph as words in its spanning-tree basis.
struct SchreierRewriter<'a> {
    graph: &'a StallingsGraph,
    /// `(slot, source)` of each non-tree edge, mapped to its basis letter index.
    basis_edges: HashMap<(usize, usize), usize>,
}

impl<'a> SchreierRewriter<'a> {
    fn new(graph: &'a StallingsGraph) -> Self {
        let tree = graph.spanning_tree();
        let basis_edges = graph
            .edges()
            .filter(|&(slot, v, w)| !tree.contains_edge(slot, v, w))
            .enumerate()
            .map(|(i, (slot, v, _))| ((slot, v), i + 1))
            .collect();
        SchreierRewriter { graph, basis_edges }
    }

    fn rank(&self) -> usize {
        self.basis_edges.len()
    }

    /// `None` if the word does not read a closed path at the basepoint.
    fn rewrite(&self, word: &Word) -> Option<Word> {
        let mut v = self.graph.basepoint();
        let mut out = Vec::new();
        for &letter in word.letters() {
            let next = self.graph.step(v, letter)?;
            let (source, inverted) = if letter.is_inverse() { (next, true) } else { (v, false) };
            if let Some(&index) = self.basis_edges.get(&(letter.slot(), source)) {
                out.push(Letter::new(index, inverted));
            }
            v = next;
        }
        (v == self.graph.basepoint()).then(|| Word::reduce(out))
    }
}

/// The fibre product of two graphs over the rose, restricted to vertex pairs
/// that carry at least one edge.
#[derive(Clone, Debug)]
pub struct Pullback {
    rank: usize,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    edges: Vec<(usize, usize, usize)>,
}

impl Pullback {
    pub fn new(left: &StallingsGraph, right: &StallingsGraph) -> Self {
        let mut pb = Pullback {
            rank: left.rank(),
            pairs: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        };
        for slot in 0..left.rank() {
            for (v, w) in left.map(slot).pairs() {
                for (v2, w2) in right.map(slot).pairs() {
                    let s = pb.vertex((v, v2));
                    let t = pb.vertex((w, w2));
                    pb.edges.push((slot, s, t));
                }
            }
        }
        pb
    }

    fn vertex(&mut self, pair: (usize, usize)) -> usize {
        let next = self.pairs.len();
        let id = *self.index.entry(pair).or_insert(next);
        if id == next {
            self.pairs.push(pair);
        }
        id
    }

    /// Only the component of the basepoint pair, explored breadth-first.
    pub fn basepoint_component(left: &StallingsGraph, right: &StallingsGraph) -> Self {
        let mut pb = Pullback {
            rank: left.rank(),
            pairs: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        };
        pb.vertex((left.basepoint(), right.basepoint()));
        let mut head = 0;
        while head < pb.pairs.len() {
            let (v, v2) = pb.pairs[head];
            let s = head;
            head += 1;
            for slot in 0..left.rank() {
                if let (Some(w), Some(w2)) = (left.map(slot).forward(v), right.map(slot).forward(v2)) {
                    let t = pb.vertex((w, w2));
                    pb.edges.push((slot, s, t));
                }
                if let (Some(u), Some(u2)) = (left.map(slot).backward(v), right.map(slot).backward(v2)) {
                    pb.vertex((u, u2));
                }
            }
        }
        pb
    }

    pub fn vertex_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The whole pullback as a graph based at vertex 0; pairs keep their order.
    pub fn into_graph(self) -> StallingsGraph {
        let n = self.pairs.len().max(1);
        let mut maps = vec![PartialInjection::empty(n); self.rank];
        for (slot, s, t) in self.edges {
            let fresh = maps[slot].insert(s, t);
            debug_assert!(fresh, "pullback of immersions is an immersion");
        }
        StallingsGraph::from_maps(self.rank, 0, maps).expect("pullback is well formed")
    }

    /// `(vertices, edges)` of each connected component.
    pub fn component_sizes(&self) -> Vec<(usize, usize)> {
        let n = self.pairs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(_, s, t) in &self.edges {
            let a = find(&mut parent, s);
            let b = find(&mut parent, t);
            if a != b {
                parent[a] = b;
            }
        }
        let mut sizes: HashMap<usize, (usize, usize)> = HashMap::new();
        for v in 0..n {
            let root = find(&mut parent, v);
            sizes.entry(root).or_default().0 += 1;
        }
        for &(_, s, _) in &self.edges {
            let root = find(&mut parent, s);
            sizes.entry(root).or_default().1 += 1;
        }
        let mut out: Vec<_> = sizes.into_values().collect();
        out.sort_unstable();
        out
    }

    /// `Σ max(0, E - V)` over components.
    pub fn component_reduced_rank_sum(&self) -> usize {
        self.component_sizes()
            .into_iter()
            .map(|(v, e)| e.saturating_sub(v))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> Word {
        Word::from_signed(v).unwrap()
    }

    fn sg(rank: usize, gens: &[&[i32]]) -> Subgroup {
        Subgroup::from_words(rank, &gens.iter().map(|g| w(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn intersect_with_self() {
        let h = sg(2, &[&[1, 2, -1], &[2, 2, 1]]);
        assert!(h.intersect(&h).unwrap().is_isomorphic(&h));
    }

    #[test]
    fn rank_mismatch() {
        let h = Subgroup::full(2);
        let k = Subgroup::full(3);
        assert_eq!(h.intersect(&k), Err(Error::RankMismatch { left: 2, right: 3 }));
        assert!(h.join(&k).is_err());
        assert!(h.shnc_left_side(&k).is_err());
        assert!(h.relative_index(&k).is_err());
    }

    #[test]
    fn join_with_full_group() {
        let k = sg(3, &[&[1, 2, -3], &[3, 3]]);
        assert_eq!(Subgroup::full(3).join(&k).unwrap(), Subgroup::full(3));
    }

    #[test]
    fn shnc_examples() {
        let h = sg(2, &[&[1]]);
        let k = sg(2, &[&[2]]);
        assert_eq!(h.shnc_left_side(&k), Ok(0));
        for r in 1..5 {
            let f = Subgroup::full(r);
            assert_eq!(f.shnc_left_side(&f), Ok(r - 1));
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(Subgroup::full(2).index_in_free_group(), Index::Finite(1));
        assert_eq!(
            sg(2, &[&[2], &[1, 1], &[1, 2, -1]]).index_in_free_group(),
            Index::Finite(2)
        );
        assert_eq!(sg(2, &[&[1, 2, -1]]).index_in_free_group(), Index::Infinite);
    }

    #[test]
    fn relative_index_examples() {
        let h = sg(2, &[&[1, 2, -1], &[2, 2, 1]]);
        assert_eq!(h.relative_index(&h), Ok(Index::Finite(1)));
        assert_eq!(sg(1, &[&[1]]).relative_index(&sg(1, &[&[1, 1]])), Ok(Index::Finite(2)));
        assert_eq!(sg(2, &[&[1]]).relative_index(&sg(2, &[&[1, 1]])), Ok(Index::Finite(2)));
        assert_eq!(
            Subgroup::full(2).relative_index(&Subgroup::trivial(2)),
            Ok(Index::Infinite)
        );
        assert_eq!(
            Subgroup::trivial(2).relative_index(&Subgroup::trivial(2)),
            Ok(Index::Finite(1))
        );
        assert!(matches!(
            sg(2, &[&[1]]).relative_index(&sg(2, &[&[2]])),
            Err(Error::NotASubgroup { .. })
        ));
    }

    #[test]
    fn basis_examples() {
        let rose = Subgroup::full(2).basis();
        assert_eq!(rose, vec![w(&[1]), w(&[2])]);
        assert!(Subgroup::trivial(2).basis().is_empty());
        assert_eq!(sg(2, &[&[1, 2, -1]]).basis(), vec![w(&[1, 2, -1])]);
    }

    #[test]
    fn conjugate_examples() {
        let h = sg(2, &[&[1, 2, -1], &[2, 2, 1]]);
        assert_eq!(h.conjugate(&Word::identity()).unwrap(), h);
        assert_eq!(sg(2, &[&[2]]).conjugate(&w(&[1])).unwrap(), sg(2, &[&[1, 2, -1]]));
        // conjugating by a member is a no-op
        assert_eq!(h.conjugate(&w(&[1, 2, -1])).unwrap(), h);
        assert!(h.conjugate(&w(&[3])).is_err());
    }

    #[test]
    fn from_core_graph_validates() {
        let path = StallingsGraph::from_edges(1, 2, 0, [(0, 0, 1)]).unwrap();
        assert!(Subgroup::from_core_graph(path.clone()).is_err());
        assert_eq!(Subgroup::from_graph(&path), Subgroup::trivial(1));
        assert!(Subgroup::from_core_graph(StallingsGraph::rose(2)).is_ok());
    }

    #[test]
    fn full_pullback_contains_basepoint_component() {
        let h = sg(2, &[&[1, 2, -1], &[2, 1, 1]]);
        let k = sg(2, &[&[1, 1], &[2]]);
        let full = Pullback::new(h.graph(), k.graph());
        let base = Pullback::basepoint_component(h.graph(), k.graph());
        assert!(base.vertex_pairs().len() <= full.vertex_pairs().len().max(1));
    }
}
