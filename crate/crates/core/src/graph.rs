//! Simple undirected graphs, the standard families used throughout the crate,
//! and BFS distance matrices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted; adjacency lists are
/// sorted and always agree with the edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints `>= n`.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
            }
        }
        Ok(Self::from_canonical_edges(n, seen.into_iter().collect()))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical_edges(n, Vec::new())
    }

    fn from_canonical_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected components, each a sorted vertex list; components ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| {
                let (a, b) = (index[u], index[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_canonical_edges(vertices.len(), edges)
    }

    /// Serializes to the edge-list text format: `n m` header then one `u v`
    /// line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text format. Blank lines and lines starting with
    /// `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        let [n, m] = parse_pair(line_no, header)?;

        let mut edge_list = Vec::with_capacity(m);
        for (line_no, line) in lines {
            if edge_list.len() == m {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let [u, v] = parse_pair(line_no, line)?;
            edge_list.push((u, v));
        }
        if edge_list.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                message: format!("declared {m} edges, found {}", edge_list.len()),
            });
        }
        Graph::new(n, &edge_list)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse {
            line,
            message: format!("expected two integers, got {:?}", text),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("not a nonnegative integer: {field:?}"),
        })?;
    }
    Ok(out)
}

/// Disjoint union: `h`'s vertices are shifted by `g.vertex_count()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n;
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::from_canonical_edges(g.n + h.n, edges)
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_canonical_edges(n, edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Seeded batch of `count` connected graphs, `n` uniform in `n_min..=n_max`,
/// edge probability `p`. Same seed, same graphs.
pub fn random_batch(seed: u64, count: usize, n_min: usize, n_max: usize, p: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

/// The graph families with closed-form results, plus paths and cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    CompleteBipartiteBalanced,
    Star,
    Crown,
    HealthySpider,
    Path,
    Cycle,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::CompleteBipartiteBalanced,
        Family::Star,
        Family::Crown,
        Family::HealthySpider,
        Family::Path,
        Family::Cycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartiteBalanced => "bipartite",
            Family::Star => "star",
            Family::Crown => "crown",
            Family::HealthySpider => "spider",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }

    /// Smallest accepted parameter.
    pub fn min_param(self) -> usize {
        match self {
            Family::Complete | Family::CompleteBipartiteBalanced | Family::Path => 1,
            Family::Star | Family::HealthySpider => 2,
            Family::Crown | Family::Cycle => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" | "k" => Family::Complete,
            "bipartite" | "complete-bipartite" | "complete-bipartite-balanced" | "krr" => {
                Family::CompleteBipartiteBalanced
            }
            "star" => Family::Star,
            "crown" => Family::Crown,
            "spider" | "healthy-spider" => Family::HealthySpider,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            _ => return Err(GraphError::UnknownFamily(s.to_string())),
        })
    }
}

/// A family together with its size parameter (`n`, `r` or `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub param: usize,
}

impl FamilySpec {
    pub fn new(family: Family, param: usize) -> Result<Self, GraphError> {
        if param < family.min_param() {
            return Err(GraphError::ParameterOutOfRange {
                family: family.name(),
                param,
                min: family.min_param(),
            });
        }
        Ok(FamilySpec { family, param })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.param)
    }
}

/// Generates the named graph with frozen vertex order:
///
/// * `Complete`, `Star`, `Path`, `Cycle`: vertices `0..n`, star center `0`.
/// * `CompleteBipartiteBalanced(r)`: one side `0..r`, the other `r..2r`.
/// * `Crown(k)`: `a_i = i`, `b_i = k + i`.
/// * `HealthySpider(n)`: hub `0`, spine `1..n`, foot of spine `i` at `n - 1 + i`.
pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    let spec = FamilySpec::new(spec.family, spec.param)?;
    let p = spec.param;
    let mut edges = Vec::new();
    let n = match spec.family {
        Family::Complete => {
            for u in 0..p {
                for v in (u + 1)..p {
                    edges.push((u, v));
                }
            }
            p
        }
        Family::CompleteBipartiteBalanced => {
            for u in 0..p {
                for v in p..2 * p {
                    edges.push((u, v));
                }
            }
            2 * p
        }
        Family::Star => {
            edges.extend((1..p).map(|v| (0, v)));
            p
        }
        Family::Crown => {
            for i in 0..p {
                for j in 0..p {
                    if i != j {
                        edges.push((i, p + j));
                    }
                }
            }
            2 * p
        }
        Family::HealthySpider => {
            for i in 1..p {
                edges.push((0, i));
                edges.push((i, p - 1 + i));
            }
            2 * p - 1
        }
        Family::Path => {
            edges.extend((1..p).map(|v| (v - 1, v)));
            p
        }
        Family::Cycle => {
            edges.extend((1..p).map(|v| (v - 1, v)));
            edges.push((0, p - 1));
            p
        }
    };
    Graph::new(n, &edges)
}

/// All-pairs hop distances. `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.d[i * self.n + j]
    }

    pub fn has_unreachable(&self) -> bool {
        self.d.iter().any(Option::is_none)
    }

    /// Sum of `d(i, j)` over unordered pairs; errors on any unreachable pair.
    pub fn wiener_index(&self) -> Result<u64, GraphError> {
        let mut total = 0u64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                total += u64::from(self.get(i, j).ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(total)
    }

    /// Largest finite distance; errors on any unreachable pair.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        if self.has_unreachable() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.d.iter().flatten().copied().max().unwrap_or(0))
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![None; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u].expect("queued vertices are labelled");
            for &w in g.neighbors(u) {
                if row[w].is_none() {
                    row[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

pub fn wiener_index(dm: &DistanceMatrix) -> Result<u64, GraphError> {
    dm.wiener_index()
}

pub fn diameter(dm: &DistanceMatrix) -> Result<u32, GraphError> {
    dm.diameter()
}
