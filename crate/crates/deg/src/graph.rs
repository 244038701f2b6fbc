//! Signed colored graphs: vertex sets carrying a ±1 signature string, with
//! edge sets indexed by a contiguous band of colors.
//!
//! A graph of type `(m, n, N)` has edge colors `m+1, ..., n-1` and signatures
//! of length `N - 1`, with `1 <= m <= n <= N`. Graphs built from standard
//! tableaux or permutations of `n` letters have type `(1, n, n)`; restriction
//! operators produce the general types.
//!
//! The central examples: [`standard_graph`] and [`skew_graph`] connect
//! standard fillings of a shape by the dual moves acting through content
//! reading words; [`symmetric_group_graph`] and [`tau_graph`] do the same on
//! bare permutations using dual and controlled moves respectively.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tableaux::{Partition, Signature, SkewShape, Tableau};
use crate::words::{controlled_move, dual_move, rsk, TauWord, Word};
use crate::{DegError, Result};

/// Index of a vertex inside one [`SignedColoredGraph`].
pub type VertexId = usize;

/// What a vertex stands for. Purely informational: all structure lives in
/// the signature and edge data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Payload {
    /// A word (usually a permutation).
    Word(Word),
    /// A standard filling of a (skew) shape.
    Tableau(Tableau),
    /// An opaque name, for graphs built from explicit data files.
    Label(String),
}

impl Payload {
    /// The word this payload naturally reads as, if any: a word payload
    /// itself, or the content reading word of a tableau payload.
    pub fn as_word(&self) -> Option<Word> {
        match self {
            Payload::Word(w) => Some(w.clone()),
            Payload::Tableau(t) => Some(t.content_reading_word()),
            Payload::Label(_) => None,
        }
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Word(w) => write!(f, "{w}"),
            Payload::Tableau(t) => {
                // Rows top-down, separated by '|'.
                let mut rows: Vec<String> = Vec::new();
                for row in t.row_values().iter().rev() {
                    let cols: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    rows.push(cols.join(" "));
                }
                write!(f, "{}", rows.join("|"))
            }
            Payload::Label(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    m: usize,
    n: usize,
    sig_len: usize,
    vertices: Vec<VertexJson>,
    edges: BTreeMap<usize, Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    payload: Payload,
    signature: Signature,
}

/// A finite graph with signed vertices and colored edges.
///
/// Colors run over `m+1 ..= n-1` (possibly empty); every vertex carries a
/// signature of length `sig_len`. Edges are unordered pairs of distinct
/// vertices; at most one edge of each color joins a given pair, but the same
/// pair may be joined by edges of several colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedColoredGraph {
    m: usize,
    n: usize,
    sig_len: usize,
    payloads: Vec<Payload>,
    signatures: Vec<Signature>,
    edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>>,
    /// Per-vertex adjacency: sorted `(color, neighbor)` pairs.
    adj: Vec<Vec<(usize, VertexId)>>,
}

impl SignedColoredGraph {
    /// Build a graph of type `(m, n, sig_len + 1)` from vertex data and a
    /// list of `(color, endpoint, endpoint)` edges.
    pub fn new(
        m: usize,
        n: usize,
        sig_len: usize,
        vertices: Vec<(Payload, Signature)>,
        edge_list: &[(usize, VertexId, VertexId)],
    ) -> Result<Self> {
        if m < 1 || m > n || n > sig_len + 1 {
            return Err(DegError::InvalidGraph(format!(
                "type parameters m={m}, n={n}, sig_len={sig_len} violate 1 <= m <= n <= sig_len+1"
            )));
        }
        let (payloads, signatures): (Vec<_>, Vec<_>) = vertices.into_iter().unzip();
        for (i, s) in signatures.iter().enumerate() {
            if s.len() != sig_len {
                return Err(DegError::InvalidGraph(format!(
                    "vertex {i} has signature of length {}, expected {sig_len}",
                    s.len()
                )));
            }
        }
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for &(color, a, b) in edge_list {
            if color <= m || color >= n {
                return Err(DegError::InvalidGraph(format!(
                    "edge color {color} outside the band {}..={}",
                    m + 1,
                    n.saturating_sub(1)
                )));
            }
            if a >= payloads.len() || b >= payloads.len() {
                return Err(DegError::InvalidGraph(format!(
                    "edge ({color}, {a}, {b}) references a missing vertex"
                )));
            }
            if a == b {
                return Err(DegError::InvalidGraph(format!(
                    "edge of color {color} loops at vertex {a}"
                )));
            }
            edges
                .entry(color)
                .or_default()
                .insert((a.min(b), a.max(b)));
        }
        let adj = build_adjacency(payloads.len(), &edges);
        Ok(SignedColoredGraph {
            m,
            n,
            sig_len,
            payloads,
            signatures,
            edges,
            adj,
        })
    }

    /// Lower type parameter: colors start at `m + 1`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Upper type parameter: colors end at `n - 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of every vertex signature.
    pub fn sig_len(&self) -> usize {
        self.sig_len
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.payloads.len()
    }

    /// Total number of edges over all colors.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|s| s.len()).sum()
    }

    /// The colors `m+1 ..= n-1` this graph may use.
    pub fn colors(&self) -> std::ops::RangeInclusive<usize> {
        self.m + 1..=self.n.saturating_sub(1)
    }

    /// Payload of a vertex.
    pub fn payload(&self, v: VertexId) -> &Payload {
        &self.payloads[v]
    }

    /// Signature of a vertex.
    pub fn signature(&self, v: VertexId) -> &Signature {
        &self.signatures[v]
    }

    /// Edges of one color, as ordered pairs `(min, max)`.
    pub fn edges_of_color(&self, color: usize) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.get(&color).into_iter().flatten().copied()
    }

    /// All edges as `(color, a, b)` triples, sorted.
    pub fn all_edges(&self) -> Vec<(usize, VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&c, set) in &self.edges {
            for &(a, b) in set {
                out.push((c, a, b));
            }
        }
        out
    }

    /// Whether vertices `a` and `b` are joined by an edge of `color`.
    pub fn has_edge(&self, color: usize, a: VertexId, b: VertexId) -> bool {
        self.edges
            .get(&color)
            .is_some_and(|s| s.contains(&(a.min(b), a.max(b))))
    }

    /// The unique `color`-neighbor of `v`, if the color is present at `v`.
    /// (Builders and validated graphs never give a vertex two edges of one
    /// color; if raw data does, the first in vertex order is returned.)
    pub fn neighbor(&self, v: VertexId, color: usize) -> Option<VertexId> {
        self.adj[v]
            .iter()
            .find(|&&(c, _)| c == color)
            .map(|&(_, w)| w)
    }

    /// All `(color, neighbor)` pairs at `v`, sorted by color then neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(usize, VertexId)] {
        &self.adj[v]
    }

    /// Number of edges of each color incident to `v`, keyed by color.
    pub fn color_degrees(&self, v: VertexId) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &(c, _) in &self.adj[v] {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// Sorted multiset of all vertex signatures.
    pub fn signature_multiset(&self) -> Vec<Signature> {
        let mut sigs = self.signatures.clone();
        sigs.sort();
        sigs
    }

    /// Connected components over the given colors, each sorted, ordered by
    /// smallest member.
    pub fn components_over(&self, colors: impl IntoIterator<Item = usize>) -> Vec<Vec<VertexId>> {
        let wanted: BTreeSet<usize> = colors.into_iter().collect();
        let nv = self.vertex_count();
        let mut seen = vec![false; nv];
        let mut comps = Vec::new();
        for start in 0..nv {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(c, w) in &self.adj[v] {
                    if wanted.contains(&c) && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected components over all colors.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_over(self.colors())
    }

    /// The induced subgraph on `vertices` (same type parameters), keeping
    /// every edge whose endpoints both appear. Vertex `i` of the result is
    /// `vertices[i]`.
    pub fn subgraph(&self, vertices: &[VertexId]) -> Self {
        let index: HashMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let payloads: Vec<Payload> = vertices.iter().map(|&v| self.payloads[v].clone()).collect();
        let signatures: Vec<Signature> = vertices
            .iter()
            .map(|&v| self.signatures[v].clone())
            .collect();
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            for &(a, b) in set {
                if let (Some(&ia), Some(&ib)) = (index.get(&a), index.get(&b)) {
                    edges.entry(c).or_default().insert((ia.min(ib), ia.max(ib)));
                }
            }
        }
        let adj = build_adjacency(payloads.len(), &edges);
        SignedColoredGraph {
            m: self.m,
            n: self.n,
            sig_len: self.sig_len,
            payloads,
            signatures,
            edges,
            adj,
        }
    }

    /// Each connected component as its own graph, in [`Self::components`]
    /// order.
    pub fn component_graphs(&self) -> Vec<Self> {
        self.components()
            .into_iter()
            .map(|comp| self.subgraph(&comp))
            .collect()
    }

    /// Keep only colors `lo ..= hi` (all vertices), retyping the graph to
    /// `(lo - 1, hi + 1, sig_len + 1)`.
    pub fn color_window(&self, lo: usize, hi: usize) -> Result<Self> {
        if lo < 2 || lo > hi || hi > self.sig_len {
            return Err(DegError::RestrictionOutOfRange(format!(
                "color window {lo}..={hi} invalid for sig_len {}",
                self.sig_len
            )));
        }
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            if (lo..=hi).contains(&c) {
                edges.insert(c, set.clone());
            }
        }
        let adj = build_adjacency(self.payloads.len(), &edges);
        Ok(SignedColoredGraph {
            m: lo - 1,
            n: hi + 1,
            sig_len: self.sig_len,
            payloads: self.payloads.clone(),
            signatures: self.signatures.clone(),
            edges,
            adj,
        })
    }

    /// Restriction: lower the upper color bound to `n_new` (dropping edge
    /// colors `>= n_new`) and truncate signatures to length `cap_new - 1`.
    /// Requires `m <= n_new <= n` and `n_new <= cap_new <= sig_len + 1`.
    pub fn restrict(&self, n_new: usize, cap_new: usize) -> Result<Self> {
        if n_new < self.m || n_new > self.n || cap_new < n_new || cap_new > self.sig_len + 1 {
            return Err(DegError::RestrictionOutOfRange(format!(
                "restrict to (n, cap) = ({n_new}, {cap_new}) from (m, n, cap) = ({}, {}, {})",
                self.m,
                self.n,
                self.sig_len + 1
            )));
        }
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            if c < n_new {
                edges.insert(c, set.clone());
            }
        }
        let signatures: Vec<Signature> = self
            .signatures
            .iter()
            .map(|s| s.truncate(cap_new - 1))
            .collect();
        let adj = build_adjacency(self.payloads.len(), &edges);
        Ok(SignedColoredGraph {
            m: self.m,
            n: n_new,
            sig_len: cap_new - 1,
            payloads: self.payloads.clone(),
            signatures,
            edges,
            adj,
        })
    }

    /// Upward restriction: forget the first `h` signature coordinates and
    /// shift every color down by `h` (colors falling below 2 are dropped).
    /// The result has type `(max(m-h, 1), n-h, sig_len+1-h)`; requires
    /// `1 <= h <= n - 2`.
    pub fn upward_restriction(&self, h: usize) -> Result<Self> {
        if h < 1 || h + 2 > self.n {
            return Err(DegError::RestrictionOutOfRange(format!(
                "upward restriction by {h} from type ({}, {}, {})",
                self.m,
                self.n,
                self.sig_len + 1
            )));
        }
        let new_m = self.m.saturating_sub(h).max(1);
        let new_n = self.n - h;
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            if c >= h + 2 {
                edges.insert(c - h, set.clone());
            }
        }
        let signatures: Vec<Signature> = self.signatures.iter().map(|s| s.drop_front(h)).collect();
        let adj = build_adjacency(self.payloads.len(), &edges);
        Ok(SignedColoredGraph {
            m: new_m,
            n: new_n,
            sig_len: self.sig_len - h,
            payloads: self.payloads.clone(),
            signatures,
            edges,
            adj,
        })
    }

    /// Color reversal: signatures reversed, color `c` becomes `N + 1 - c`
    /// where `N = sig_len + 1`. The result has type
    /// `(N - n + 1, N - m + 1, N)`.
    pub fn reverse_colors(&self) -> Self {
        let cap = self.sig_len + 1;
        let mut edges: BTreeMap<usize, BTreeSet<(VertexId, VertexId)>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            edges.insert(cap + 1 - c, set.clone());
        }
        let signatures: Vec<Signature> = self.signatures.iter().map(|s| s.reversed()).collect();
        let adj = build_adjacency(self.payloads.len(), &edges);
        SignedColoredGraph {
            m: cap - self.n + 1,
            n: cap - self.m + 1,
            sig_len: self.sig_len,
            payloads: self.payloads.clone(),
            signatures,
            edges,
            adj,
        }
    }

    /// Render as Graphviz DOT. Vertex labels show payload and signature;
    /// parallel edges of several colors merge into one line labeled by all
    /// its colors.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n  node [shape=box];\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!(
                "  v{v} [label=\"{}\\n{}\"];\n",
                self.payloads[v], self.signatures[v]
            ));
        }
        let mut pair_colors: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        for (&c, set) in &self.edges {
            for &(a, b) in set {
                pair_colors.entry((a, b)).or_default().push(c);
            }
        }
        for ((a, b), colors) in pair_colors {
            let label: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!(
                "  v{a} -- v{b} [label=\"{}\"];\n",
                label.join(",")
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn build_adjacency(
    vertex_count: usize,
    edges: &BTreeMap<usize, BTreeSet<(VertexId, VertexId)>>,
) -> Vec<Vec<(usize, VertexId)>> {
    let mut adj = vec![Vec::new(); vertex_count];
    for (&c, set) in edges {
        for &(a, b) in set {
            adj[a].push((c, b));
            adj[b].push((c, a));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

impl Serialize for SignedColoredGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices = self
            .payloads
            .iter()
            .zip(&self.signatures)
            .map(|(p, s)| VertexJson {
                payload: p.clone(),
                signature: s.clone(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|(&c, set)| (c, set.iter().copied().collect()))
            .collect();
        GraphJson {
            m: self.m,
            n: self.n,
            sig_len: self.sig_len,
            vertices,
            edges,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedColoredGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let vertices: Vec<(Payload, Signature)> = raw
            .vertices
            .into_iter()
            .map(|v| (v.payload, v.signature))
            .collect();
        let mut edge_list = Vec::new();
        for (c, pairs) in raw.edges {
            for (a, b) in pairs {
                edge_list.push((c, a, b));
            }
        }
        SignedColoredGraph::new(raw.m, raw.n, raw.sig_len, vertices, &edge_list)
            .map_err(serde::de::Error::custom)
    }
}

/// Graph on all standard fillings of a skew shape, with edges given by the
/// dual moves acting on content reading words and signatures read from those
/// words. Type `(1, n, n)` for `n` the number of cells.
pub fn skew_graph(shape: &SkewShape) -> Result<SignedColoredGraph> {
    let n = shape.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty shape has no graph".into()));
    }
    let tableaux = crate::tableaux::enumerate_standard(shape);
    let mut words: Vec<Word> = Vec::with_capacity(tableaux.len());
    let mut index: HashMap<Word, usize> = HashMap::new();
    for (i, t) in tableaux.iter().enumerate() {
        let w = t.content_reading_word();
        index.insert(w.clone(), i);
        words.push(w);
    }
    let vertices: Vec<(Payload, Signature)> = tableaux
        .into_iter()
        .zip(&words)
        .map(|(t, w)| (Payload::Tableau(t), w.signature()))
        .collect();
    let mut edge_list = Vec::new();
    for (v, w) in words.iter().enumerate() {
        for i in 2..n {
            let moved = dual_move(w, i)?;
            if &moved != w {
                let target = *index.get(&moved).ok_or_else(|| {
                    DegError::InvalidGraph(format!(
                        "dual move {i} left the vertex set at {w}"
                    ))
                })?;
                if v < target {
                    edge_list.push((i, v, target));
                }
            }
        }
    }
    SignedColoredGraph::new(1, n, n - 1, vertices, &edge_list)
}

/// [`skew_graph`] for a straight shape.
pub fn standard_graph(lambda: &Partition) -> Result<SignedColoredGraph> {
    skew_graph(&SkewShape::straight(lambda.clone()))
}

/// Graph on all permutations of `n` letters with dual-move edges and
/// inverse-descent signatures. Type `(1, n, n)`.
pub fn symmetric_group_graph(n: usize) -> Result<SignedColoredGraph> {
    if n == 0 {
        return Err(DegError::InvalidWord("no permutations of length 0".into()));
    }
    permutation_graph(n, |w, i| dual_move(w, i))
}

/// Graph on all permutations of `n` letters where color `i` acts by the
/// controlled move for `tau`: the dual move where `tau` permits it and the
/// twisted move elsewhere. Type `(1, n, n)` for `n = tau.len()`.
pub fn tau_graph(tau: &TauWord) -> Result<SignedColoredGraph> {
    let tau = tau.clone();
    permutation_graph(tau.len(), move |w, i| controlled_move(w, &tau, i))
}

fn permutation_graph(
    n: usize,
    act: impl Fn(&Word, usize) -> Result<Word>,
) -> Result<SignedColoredGraph> {
    let perms = crate::words::enumerate_permutations(n);
    let index: HashMap<Word, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let vertices: Vec<(Payload, Signature)> = perms
        .iter()
        .map(|w| (Payload::Word(w.clone()), w.signature()))
        .collect();
    let mut edge_list = Vec::new();
    for (v, w) in perms.iter().enumerate() {
        for i in 2..n {
            let moved = act(w, i)?;
            if &moved != w {
                let target = index[&moved];
                if v < target {
                    edge_list.push((i, v, target));
                }
            }
        }
    }
    SignedColoredGraph::new(1, n, n - 1, vertices, &edge_list)
}

/// Disjoint union of graphs of identical type. Vertices of later summands
/// are shifted past all earlier ones.
pub fn disjoint_union(parts: &[&SignedColoredGraph]) -> Result<SignedColoredGraph> {
    let first = parts.first().ok_or_else(|| {
        DegError::InvalidGraph("disjoint union of no graphs".into())
    })?;
    let (m, n, sig_len) = (first.m(), first.n(), first.sig_len());
    let mut vertices = Vec::new();
    let mut edge_list = Vec::new();
    let mut offset = 0;
    for g in parts {
        if (g.m(), g.n(), g.sig_len()) != (m, n, sig_len) {
            return Err(DegError::InvalidGraph(
                "disjoint union of graphs of different types".into(),
            ));
        }
        for v in 0..g.vertex_count() {
            vertices.push((g.payload(v).clone(), g.signature(v).clone()));
        }
        for (c, a, b) in g.all_edges() {
            edge_list.push((c, a + offset, b + offset));
        }
        offset += g.vertex_count();
    }
    SignedColoredGraph::new(m, n, sig_len, vertices, &edge_list)
}

/// How [`find_isomorphism`] compares two graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    /// Require `sig(v) == sig(phi(v))` (signed isomorphism). Only valid with
    /// `color_shift == 0` and equal signature lengths.
    pub use_signatures: bool,
    /// Color `c` of the first graph is matched against `c + color_shift` of
    /// the second (edge-colored comparison across shifted bands).
    pub color_shift: i64,
}

impl IsoOptions {
    /// Signed isomorphism on identically-typed graphs.
    pub fn signed() -> Self {
        IsoOptions {
            use_signatures: true,
            color_shift: 0,
        }
    }

    /// Edge-colored isomorphism ignoring signatures, colors shifted.
    pub fn colored(color_shift: i64) -> Self {
        IsoOptions {
            use_signatures: false,
            color_shift,
        }
    }
}

/// Search for an isomorphism from `a` to `b`: a bijection of vertices
/// matching edges color-by-color (after shifting `a`'s colors by
/// `opts.color_shift`), and signatures too if `opts.use_signatures`.
/// Returns the image list `map` with `map[v]` the image of `v`.
pub fn find_isomorphism(
    a: &SignedColoredGraph,
    b: &SignedColoredGraph,
    opts: IsoOptions,
) -> Option<Vec<VertexId>> {
    if a.vertex_count() != b.vertex_count() {
        return None;
    }
    if opts.use_signatures && (opts.color_shift != 0 || a.sig_len() != b.sig_len()) {
        return None;
    }
    // Edge counts per (shifted) color must agree exactly.
    let mut a_counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (&c, set) in &a.edges {
        if !set.is_empty() {
            a_counts.insert(c as i64 + opts.color_shift, set.len());
        }
    }
    let mut b_counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (&c, set) in &b.edges {
        if !set.is_empty() {
            b_counts.insert(c as i64, set.len());
        }
    }
    if a_counts != b_counts {
        return None;
    }
    let nv = a.vertex_count();
    if nv == 0 {
        return Some(Vec::new());
    }

    // Iterative refinement of vertex labels. Labels are strings to make
    // equality exact; graphs here are small enough for this to be cheap.
    let initial = |g: &SignedColoredGraph, shift: i64, v: VertexId| -> String {
        let sig = if opts.use_signatures {
            g.signature(v).to_string()
        } else {
            String::new()
        };
        let mut degs: Vec<(i64, usize)> = g
            .color_degrees(v)
            .into_iter()
            .map(|(c, d)| (c as i64 + shift, d))
            .collect();
        degs.sort_unstable();
        format!("{sig}|{degs:?}")
    };
    let mut la: Vec<String> = (0..nv).map(|v| initial(a, opts.color_shift, v)).collect();
    let mut lb: Vec<String> = (0..nv).map(|v| initial(b, 0, v)).collect();
    loop {
        let refine = |g: &SignedColoredGraph, shift: i64, labels: &[String]| -> Vec<String> {
            (0..nv)
                .map(|v| {
                    let mut nbr: Vec<(i64, &str)> = g
                        .neighbors(v)
                        .iter()
                        .map(|&(c, w)| (c as i64 + shift, labels[w].as_str()))
                        .collect();
                    nbr.sort_unstable();
                    format!("{}#{nbr:?}", labels[v])
                })
                .collect()
        };
        let na = refine(a, opts.color_shift, &la);
        let nb = refine(b, 0, &lb);
        let mut sa: Vec<&String> = na.iter().collect();
        let mut sb: Vec<&String> = nb.iter().collect();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        let classes_before: BTreeSet<&String> = la.iter().collect();
        let classes_after: BTreeSet<&String> = na.iter().collect();
        let stable = classes_after.len() == classes_before.len();
        la = na;
        lb = nb;
        if stable {
            break;
        }
    }

    // Candidate lists per vertex of a, most-constrained first.
    let mut class_size: HashMap<&String, usize> = HashMap::new();
    for l in &la {
        *class_size.entry(l).or_insert(0) += 1;
    }
    let mut order: Vec<VertexId> = (0..nv).collect();
    order.sort_by_key(|&v| (class_size[&la[v]], la[v].clone(), v));
    let candidates: Vec<Vec<VertexId>> = order
        .iter()
        .map(|&v| (0..nv).filter(|&w| lb[w] == la[v]).collect())
        .collect();

    let mut map: Vec<Option<VertexId>> = vec![None; nv];
    let mut used = vec![false; nv];
    if !assign(a, b, &opts, &order, &candidates, 0, &mut map, &mut used) {
        return None;
    }
    let map: Vec<VertexId> = map.into_iter().map(|x| x.unwrap()).collect();
    // Confirm the reverse direction explicitly: every edge of b pulls back
    // to an edge of a.
    let mut inv = vec![0; nv];
    for (v, &w) in map.iter().enumerate() {
        inv[w] = v;
    }
    for (c, x, y) in b.all_edges() {
        let shifted = c as i64 - opts.color_shift;
        if shifted < 0 {
            return None;
        }
        if !a.has_edge(shifted as usize, inv[x], inv[y]) {
            return None;
        }
    }
    Some(map)
}

fn assign(
    a: &SignedColoredGraph,
    b: &SignedColoredGraph,
    opts: &IsoOptions,
    order: &[VertexId],
    candidates: &[Vec<VertexId>],
    depth: usize,
    map: &mut Vec<Option<VertexId>>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'next: for &w in &candidates[depth] {
        if used[w] {
            continue;
        }
        if opts.use_signatures && a.signature(v) != b.signature(w) {
            continue;
        }
        for &(c, u) in a.neighbors(v) {
            if let Some(mu) = map[u] {
                let shifted = c as i64 + opts.color_shift;
                if shifted < 0 || !b.has_edge(shifted as usize, w, mu) {
                    continue 'next;
                }
            }
        }
        // Also require image-side edges back into the assigned set to have
        // preimage edges, so partial maps stay honest in both directions.
        for &(c, u) in b.neighbors(w) {
            if used[u] {
                let shifted = c as i64 - opts.color_shift;
                let preimage = map
                    .iter()
                    .position(|&x| x == Some(u))
                    .expect("used vertex has a preimage");
                if shifted < 0 || !a.has_edge(shifted as usize, v, preimage) {
                    continue 'next;
                }
            }
        }
        map[order[depth]] = Some(w);
        used[w] = true;
        if assign(a, b, opts, order, candidates, depth + 1, map, used) {
            return true;
        }
        map[order[depth]] = None;
        used[w] = false;
    }
    false
}

/// Verify that `map` is a morphism of edge-colored graphs from `dom` to
/// `cod`: same type, and every `i`-edge maps to an `i`-edge.
pub fn check_colored_morphism(
    dom: &SignedColoredGraph,
    cod: &SignedColoredGraph,
    map: &[VertexId],
) -> Result<()> {
    if map.len() != dom.vertex_count() {
        return Err(DegError::MorphismViolation(format!(
            "map covers {} of {} vertices",
            map.len(),
            dom.vertex_count()
        )));
    }
    if (dom.m(), dom.n()) != (cod.m(), cod.n()) {
        return Err(DegError::MorphismViolation(format!(
            "type mismatch: ({}, {}) vs ({}, {})",
            dom.m(),
            dom.n(),
            cod.m(),
            cod.n()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&w| w >= cod.vertex_count()) {
        return Err(DegError::MorphismViolation(format!(
            "image vertex {bad} out of range"
        )));
    }
    for (c, a, b) in dom.all_edges() {
        if map[a] == map[b] || !cod.has_edge(c, map[a], map[b]) {
            return Err(DegError::MorphismViolation(format!(
                "edge ({c}, {a}, {b}) has no image edge ({c}, {}, {})",
                map[a], map[b]
            )));
        }
    }
    Ok(())
}

/// Verify that `map` is a morphism of signed colored graphs: an edge-colored
/// morphism that also preserves signatures.
pub fn check_signed_morphism(
    dom: &SignedColoredGraph,
    cod: &SignedColoredGraph,
    map: &[VertexId],
) -> Result<()> {
    check_colored_morphism(dom, cod, map)?;
    if dom.sig_len() != cod.sig_len() {
        return Err(DegError::MorphismViolation(format!(
            "signature length mismatch: {} vs {}",
            dom.sig_len(),
            cod.sig_len()
        )));
    }
    for v in 0..dom.vertex_count() {
        if dom.signature(v) != cod.signature(map[v]) {
            return Err(DegError::MorphismViolation(format!(
                "vertex {v} has signature {} but its image has {}",
                dom.signature(v),
                cod.signature(map[v])
            )));
        }
    }
    Ok(())
}

/// For a graph whose vertices read as permutations of `n` letters (type
/// `(1, n, n)`), build the disjoint union of all [`standard_graph`]s of size
/// `n` together with the map sending each vertex to the insertion tableau of
/// its word. The map is returned as image ids into the union.
pub fn knuth_projection(g: &SignedColoredGraph) -> Result<(SignedColoredGraph, Vec<VertexId>)> {
    if g.m() != 1 || g.n() != g.sig_len() + 1 {
        return Err(DegError::InvalidGraph(format!(
            "projection needs type (1, n, n), got ({}, {}, {})",
            g.m(),
            g.n(),
            g.sig_len() + 1
        )));
    }
    let n = g.n();
    let shapes = Partition::all_of(n);
    let mut parts = Vec::new();
    for lam in &shapes {
        parts.push(standard_graph(lam)?);
    }
    let refs: Vec<&SignedColoredGraph> = parts.iter().collect();
    let union = disjoint_union(&refs)?;
    let mut tableau_index: HashMap<Tableau, usize> = HashMap::new();
    for v in 0..union.vertex_count() {
        if let Payload::Tableau(t) = union.payload(v) {
            tableau_index.insert(t.clone(), v);
        }
    }
    let mut map = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let word = g.payload(v).as_word().ok_or_else(|| {
            DegError::InvalidGraph(format!("vertex {v} has no word to project"))
        })?;
        word.require_permutation()?;
        if word.len() != n {
            return Err(DegError::DegreeMismatch {
                left: word.len(),
                right: n,
            });
        }
        let (p, _) = rsk(&word)?;
        let target = *tableau_index.get(&p).ok_or_else(|| {
            DegError::InvalidGraph("insertion tableau missing from union".into())
        })?;
        map.push(target);
    }
    Ok((union, map))
}

/// Decide which [`standard_graph`] a connected `(1, n, n)` graph is
/// isomorphic to as a signed colored graph, if any.
pub fn classify_component(g: &SignedColoredGraph) -> Result<Option<Partition>> {
    if g.m() != 1 || g.n() != g.sig_len() + 1 {
        return Err(DegError::InvalidGraph(format!(
            "classification needs type (1, n, n), got ({}, {}, {})",
            g.m(),
            g.n(),
            g.sig_len() + 1
        )));
    }
    if g.components().len() != 1 {
        return Err(DegError::InvalidGraph(
            "classification needs a connected graph".into(),
        ));
    }
    let sig_multiset = g.signature_multiset();
    for lam in Partition::all_of(g.n()) {
        let model = standard_graph(&lam)?;
        if model.vertex_count() != g.vertex_count() {
            continue;
        }
        if model.signature_multiset() != sig_multiset {
            continue;
        }
        if find_isomorphism(g, &model, IsoOptions::signed()).is_some() {
            return Ok(Some(lam));
        }
    }
    Ok(None)
}
