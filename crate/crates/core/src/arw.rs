//! Newman's lemma on finite oriented graphs.
//!
//! Vertices stand for expressions and edges for single reduction steps. If
//! every oriented path terminates and every fork `b <- a -> b'` can be
//! joined, each weakly connected component has exactly one sink and every
//! maximal path from that component ends there.

use std::collections::VecDeque;
use std::fmt::Debug;
use std::hash::Hash;

use indexmap::IndexSet;

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph<V: Hash + Eq> {
    vertices: IndexSet<V>,
    succ: Vec<Vec<usize>>,
}

impl<V: Hash + Eq> Default for OrientedGraph<V> {
    fn default() -> Self {
        OrientedGraph {
            vertices: IndexSet::new(),
            succ: Vec::new(),
        }
    }
}

/// A fork whose two ends have no common descendant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondFailure<V> {
    pub vertex: V,
    pub left: V,
    pub right: V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<V> {
    pub vertices: Vec<V>,
    pub sink: V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NewmanVerdict<V> {
    /// Both hypotheses hold; one entry per weakly connected component.
    UniqueSinks(Vec<Component<V>>),
    /// Some oriented path does not terminate.
    NotTerminating { cycle: Vec<V> },
    /// The diamond condition fails at `DiamondFailure::vertex`.
    DiamondFails(DiamondFailure<V>),
}

impl<V: Hash + Eq + Clone + Debug> OrientedGraph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: V) -> usize {
        let (i, fresh) = self.vertices.insert_full(v);
        if fresh {
            self.succ.push(Vec::new());
        }
        i
    }

    /// Adds `from -> to`; parallel edges collapse.
    pub fn add_edge(&mut self, from: V, to: V) {
        let (i, j) = (self.add_vertex(from), self.add_vertex(to));
        if !self.succ[i].contains(&j) {
            self.succ[i].push(j);
        }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (V, V)>) -> Self {
        let mut g = Self::new();
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &V> {
        self.vertices.iter()
    }

    pub fn successors(&self, v: &V) -> Vec<&V> {
        match self.vertices.get_index_of(v) {
            Some(i) => self.succ[i].iter().map(|&j| &self.vertices[j]).collect(),
            None => Vec::new(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(move |(i, out)| out.iter().map(move |&j| (&self.vertices[i], &self.vertices[j])))
    }

    /// `Ok` when the graph is acyclic, otherwise a directed cycle
    /// `[v0, v1, ..., v0]`.
    pub fn check_termination(&self) -> Result<(), Vec<V>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.vertex_count();
        let mut mark = vec![Mark::New; n];
        for root in 0..n {
            if mark[root] != Mark::New {
                continue;
            }
            // (vertex, index of next successor to visit)
            let mut stack = vec![(root, 0usize)];
            mark[root] = Mark::Active;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.succ[v].get(*next) {
                    *next += 1;
                    match mark[w] {
                        Mark::New => {
                            mark[w] = Mark::Active;
                            stack.push((w, 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(u, _)| u == w).expect("on stack");
                            let mut cycle: Vec<V> = stack[start..]
                                .iter()
                                .map(|&(u, _)| self.vertices[u].clone())
                                .collect();
                            cycle.push(self.vertices[w].clone());
                            return Err(cycle);
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v] = Mark::Done;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    // Vertices reachable from `v` by a path of length >= 0.
    fn reach(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.succ[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Checks that the ends of every pair of edges leaving a common vertex
    /// reach a common vertex; reports the first fork that does not.
    pub fn check_local_diamond(&self) -> Result<(), DiamondFailure<V>> {
        let mut cache: Vec<Option<Vec<bool>>> = vec![None; self.vertex_count()];
        for (a, out) in self.succ.iter().enumerate() {
            for (k, &b) in out.iter().enumerate() {
                for &c in &out[k + 1..] {
                    for x in [b, c] {
                        if cache[x].is_none() {
                            cache[x] = Some(self.reach(x));
                        }
                    }
                    let (rb, rc) = (cache[b].as_ref().unwrap(), cache[c].as_ref().unwrap());
                    if !rb.iter().zip(rc).any(|(&p, &q)| p && q) {
                        return Err(DiamondFailure {
                            vertex: self.vertices[a].clone(),
                            left: self.vertices[b].clone(),
                            right: self.vertices[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Weakly connected components as lists of vertex indices, in order of
    /// first vertex.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut undirected = vec![Vec::new(); n];
        for (u, out) in self.succ.iter().enumerate() {
            for &v in out {
                undirected[u].push(v);
                undirected[v].push(u);
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut i = 0;
            while i < members.len() {
                for &w in &undirected[members[i]] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn newman_verdict(&self) -> NewmanVerdict<V> {
        if let Err(cycle) = self.check_termination() {
            return NewmanVerdict::NotTerminating { cycle };
        }
        if let Err(failure) = self.check_local_diamond() {
            return NewmanVerdict::DiamondFails(failure);
        }
        let components = self
            .components()
            .into_iter()
            .map(|members| {
                let sinks: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&v| self.succ[v].is_empty())
                    .collect();
                assert_eq!(
                    sinks.len(),
                    1,
                    "terminating locally confluent component has one sink"
                );
                let sink = sinks[0];
                // every vertex reaches the sink and no other sink, so every
                // maximal path (finite by acyclicity) ends there
                for &v in &members {
                    assert!(self.reach(v)[sink], "vertex cannot reach the component sink");
                }
                Component {
                    vertices: members.iter().map(|&v| self.vertices[v].clone()).collect(),
                    sink: self.vertices[sink].clone(),
                }
            })
            .collect();
        NewmanVerdict::UniqueSinks(components)
    }
}

impl OrientedGraph<String> {
    /// Parses one `u -> v` edge (or a lone vertex `u`) per line; `#` starts
    /// a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut g = OrientedGraph::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let label = |s: &str, offset: usize| -> Result<String, ParseError> {
                let t = s.trim();
                if t.is_empty() {
                    return Err(ParseError::new(n + 1, offset + 1, "expected a vertex label"));
                }
                let col = offset + s.len() - s.trim_start().len() + 1;
                if t.chars().any(char::is_whitespace) || t.contains("->") {
                    Err(ParseError::new(
                        n + 1,
                        col,
                        format!("malformed vertex label `{t}`"),
                    ))
                } else {
                    Ok(t.to_string())
                }
            };
            match line.find("->") {
                Some(pos) => {
                    let from = label(&line[..pos], 0)?;
                    let to = label(&line[pos + 2..], pos + 2)?;
                    g.add_edge(from, to);
                }
                None => {
                    g.add_vertex(label(line, 0)?);
                }
            }
        }
        Ok(g)
    }
}
