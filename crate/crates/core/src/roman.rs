//! Roman dominating functions and exact minimum solvers for the domination
//! number `γ` and the Roman domination number `γ_R`.
//!
//! Both solvers enumerate candidate sets `S` (the `V2` class for Roman
//! domination) as sorted index lists in depth-first preorder, which visits
//! them in lexicographic order. Given `V2 = S`, the cheapest completion puts
//! every vertex with no neighbour in `S` into `V1`, so a minimum RDF is fully
//! determined by its `V2` class.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::RomanError;
use crate::graph::Graph;

/// Largest vertex count accepted by the exact subset-enumeration solvers.
pub const MAX_SOLVER_VERTICES: usize = 30;

/// Largest vertex count accepted by [`brute_force_min_rdf`].
pub const MAX_BRUTE_FORCE_VERTICES: usize = 12;

/// An ordered partition `(V0, V1, V2)` of the vertex set, i.e. the labelling
/// `f(v) = i` for `v ∈ Vi`.
///
/// The fields are public so malformed partitions can be represented and
/// rejected by [`check_rdf`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RomanDominatingFunction {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl RomanDominatingFunction {
    /// Builds the partition from per-vertex labels in `{0, 1, 2}`.
    ///
    /// # Panics
    ///
    /// If a label is greater than 2.
    pub fn from_labels(labels: &[u8]) -> Self {
        let mut f = Self::default();
        for (v, &label) in labels.iter().enumerate() {
            match label {
                0 => f.v0.push(v),
                1 => f.v1.push(v),
                2 => f.v2.push(v),
                _ => panic!("Roman label {label} at vertex {v} is not in {{0, 1, 2}}"),
            }
        }
        f
    }

    /// The partition with `V2 = v2`, `V1` = vertices with no neighbour in
    /// `v2` (and not in it), `V0` = the rest.
    pub fn completion_of(g: &Graph, v2: &[usize]) -> Self {
        let n = g.vertex_count();
        let mut labels = vec![1u8; n];
        for &s in v2 {
            labels[s] = 2;
        }
        for &s in v2 {
            for &w in g.neighbors(s) {
                if labels[w] == 1 {
                    labels[w] = 0;
                }
            }
        }
        Self::from_labels(&labels)
    }

    /// `f(V) = 2|V2| + |V1|`.
    pub fn weight(&self) -> usize {
        2 * self.v2.len() + self.v1.len()
    }

    pub fn len(&self) -> usize {
        self.v0.len() + self.v1.len() + self.v2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Per-vertex labels, assuming the partition is well formed over `0..n`.
    pub fn labels(&self, n: usize) -> Vec<u8> {
        let mut labels = vec![0u8; n];
        for &v in &self.v1 {
            labels[v] = 1;
        }
        for &v in &self.v2 {
            labels[v] = 2;
        }
        labels
    }
}

impl fmt::Display for RomanDominatingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V2={:?} V1={:?} V0={:?} weight={}",
            self.v2,
            self.v1,
            self.v0,
            self.weight()
        )
    }
}

impl Serialize for RomanDominatingFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RomanDominatingFunction", 4)?;
        s.serialize_field("v0", &self.v0)?;
        s.serialize_field("v1", &self.v1)?;
        s.serialize_field("v2", &self.v2)?;
        s.serialize_field("weight", &self.weight())?;
        s.end()
    }
}

/// Why a labelling fails to be a Roman dominating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RdfViolation {
    OutOfRange {
        vertex: usize,
    },
    Repeated {
        vertex: usize,
    },
    Missing {
        vertex: usize,
    },
    /// A vertex labelled 0 with no neighbour labelled 2.
    Undominated {
        vertex: usize,
    },
}

impl fmt::Display for RdfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RdfViolation::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            RdfViolation::Repeated { vertex } => write!(f, "vertex {vertex} listed more than once"),
            RdfViolation::Missing { vertex } => write!(f, "vertex {vertex} not labelled"),
            RdfViolation::Undominated { vertex } => {
                write!(f, "vertex {vertex} is in V0 without a neighbour in V2")
            }
        }
    }
}

/// Partition and domination check against an arbitrary adjacency predicate.
pub(crate) fn check_rdf_with(
    n: usize,
    f: &RomanDominatingFunction,
    adjacent: impl Fn(usize, usize) -> bool,
) -> Result<(), RdfViolation> {
    let mut label = vec![None; n];
    for (class, members) in [(0u8, &f.v0), (1, &f.v1), (2, &f.v2)] {
        for &v in members {
            let slot = label
                .get_mut(v)
                .ok_or(RdfViolation::OutOfRange { vertex: v })?;
            if slot.is_some() {
                return Err(RdfViolation::Repeated { vertex: v });
            }
            *slot = Some(class);
        }
    }
    if let Some(v) = label.iter().position(Option::is_none) {
        return Err(RdfViolation::Missing { vertex: v });
    }
    for &u in &f.v0 {
        if !f.v2.iter().any(|&w| adjacent(u, w)) {
            return Err(RdfViolation::Undominated { vertex: u });
        }
    }
    Ok(())
}

pub fn check_rdf(g: &Graph, f: &RomanDominatingFunction) -> Result<(), RdfViolation> {
    check_rdf_with(g.vertex_count(), f, |u, v| g.has_edge(u, v))
}

pub fn is_valid_rdf(g: &Graph, f: &RomanDominatingFunction) -> bool {
    check_rdf(g, f).is_ok()
}

/// Bitmask view of a graph for the subset searches.
struct Masks {
    n: usize,
    full: u64,
    /// Closed neighbourhood of each vertex.
    closed: Vec<u64>,
    /// `reach[i]`: vertices dominated by some vertex with index `>= i`.
    reach: Vec<u64>,
    /// Maximum closed-neighbourhood size.
    cover: u32,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self, RomanError> {
        let n = g.vertex_count();
        if n > MAX_SOLVER_VERTICES {
            return Err(RomanError::TooLarge {
                n,
                limit: MAX_SOLVER_VERTICES,
            });
        }
        let closed: Vec<u64> = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(1u64 << v, |acc, &w| acc | (1u64 << w))
            })
            .collect();
        let mut reach = vec![0u64; n + 1];
        for i in (0..n).rev() {
            reach[i] = reach[i + 1] | closed[i];
        }
        Ok(Masks {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            cover: closed.iter().map(|c| c.count_ones()).max().unwrap_or(1),
            closed,
            reach,
        })
    }

    /// Lower bound on the weight of any RDF whose `V2` extends the current
    /// set (of size `size`, dominating `dom`) with vertices `>= next`.
    fn rdf_bound(&self, size: usize, dom: u64, next: usize) -> usize {
        let open = self.full & !dom;
        let forced = (open & !self.reach[next]).count_ones() as usize;
        let rest = (open & self.reach[next]).count_ones() as usize;
        let cover = self.cover as usize;
        // k more twos cover at most k·cover vertices, the rest cost one each:
        // min over k of 2k + max(0, rest - k·cover).
        let by_twos = 2 * (rest / cover) + (rest % cover).min(2);
        2 * size + forced + rest.min(by_twos)
    }

    fn rdf_weight(&self, size: usize, dom: u64) -> usize {
        2 * size + (self.full & !dom).count_ones() as usize
    }
}

struct RdfSearch<'a> {
    masks: &'a Masks,
    best: usize,
}

impl RdfSearch<'_> {
    fn descend(&mut self, next: usize, size: usize, dom: u64) {
        self.best = self.best.min(self.masks.rdf_weight(size, dom));
        for i in next..self.masks.n {
            let child = dom | self.masks.closed[i];
            if self.masks.rdf_bound(size + 1, child, i + 1) < self.best {
                self.descend(i + 1, size + 1, child);
            }
        }
    }
}

fn roman_number_of(g: &Graph) -> Result<usize, RomanError> {
    let masks = Masks::new(g)?;
    let mut search = RdfSearch {
        masks: &masks,
        best: g.vertex_count(),
    };
    search.descend(0, 0, 0);
    Ok(search.best)
}

/// Visits, in lexicographic order of `V2`, every `V2` class whose completion
/// has weight exactly `target`. The visitor returns `false` to stop.
fn for_each_rdf_of_weight(masks: &Masks, target: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        masks: &Masks,
        target: usize,
        next: usize,
        dom: u64,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if masks.rdf_weight(chosen.len(), dom) == target && !visit(chosen) {
            return false;
        }
        for i in next..masks.n {
            let child = dom | masks.closed[i];
            if masks.rdf_bound(chosen.len() + 1, child, i + 1) <= target {
                chosen.push(i);
                let keep_going = go(masks, target, i + 1, child, chosen, visit);
                chosen.pop();
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
    go(masks, target, 0, 0, &mut Vec::new(), visit);
}

/// `γ_R(G)`: components are solved independently and summed.
pub fn roman_domination_number(g: &Graph) -> Result<usize, RomanError> {
    if g.vertex_count() > MAX_SOLVER_VERTICES {
        return Err(RomanError::TooLarge {
            n: g.vertex_count(),
            limit: MAX_SOLVER_VERTICES,
        });
    }
    g.components()
        .iter()
        .map(|c| roman_number_of(&g.induced_subgraph(c)))
        .sum()
}

/// `γ_R(G)` with the canonical minimum RDF: the one whose sorted `V2` list is
/// lexicographically smallest (`V1` is then determined).
pub fn min_roman_domination(g: &Graph) -> Result<(usize, RomanDominatingFunction), RomanError> {
    let gamma_r = roman_domination_number(g)?;
    let masks = Masks::new(g)?;
    let mut canonical = None;
    for_each_rdf_of_weight(&masks, gamma_r, &mut |v2| {
        canonical = Some(RomanDominatingFunction::completion_of(g, v2));
        false
    });
    let f = canonical.expect("a set of weight γ_R exists");
    debug_assert!(is_valid_rdf(g, &f));
    Ok((gamma_r, f))
}

/// All minimum RDFs in lexicographic order of `(V2, V1)`, at most `cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinRdfEnumeration {
    pub gamma_r: usize,
    pub rdfs: Vec<RomanDominatingFunction>,
    /// Set when more than `cap` minimum RDFs exist.
    pub truncated: bool,
}

pub fn enumerate_min_rdfs(g: &Graph, cap: usize) -> Result<MinRdfEnumeration, RomanError> {
    let gamma_r = roman_domination_number(g)?;
    let masks = Masks::new(g)?;
    let mut rdfs = Vec::new();
    let mut truncated = false;
    for_each_rdf_of_weight(&masks, gamma_r, &mut |v2| {
        if rdfs.len() == cap {
            truncated = true;
            return false;
        }
        rdfs.push(RomanDominatingFunction::completion_of(g, v2));
        true
    });
    Ok(MinRdfEnumeration {
        gamma_r,
        rdfs,
        truncated,
    })
}

/// `γ(G)` with the lexicographically smallest minimum dominating set.
pub fn min_domination(g: &Graph) -> Result<(usize, Vec<usize>), RomanError> {
    let masks = Masks::new(g)?;
    let n = masks.n;
    let cover = masks.cover as usize;

    // size bound: every remaining vertex must be reachable and each pick covers
    // at most `cover` of them
    let bound = |size: usize, dom: u64, next: usize| -> Option<usize> {
        let open = masks.full & !dom;
        if open & !masks.reach[next] != 0 {
            return None;
        }
        Some(size + (open.count_ones() as usize).div_ceil(cover))
    };

    fn best_size(
        masks: &Masks,
        bound: &dyn Fn(usize, u64, usize) -> Option<usize>,
        next: usize,
        size: usize,
        dom: u64,
        best: &mut usize,
    ) {
        if dom & masks.full == masks.full {
            *best = (*best).min(size);
            return;
        }
        for i in next..masks.n {
            let child = dom | masks.closed[i];
            if bound(size + 1, child, i + 1).is_some_and(|b| b < *best) {
                best_size(masks, bound, i + 1, size + 1, child, best);
            }
        }
    }

    fn first_of_size(
        masks: &Masks,
        bound: &dyn Fn(usize, u64, usize) -> Option<usize>,
        target: usize,
        next: usize,
        dom: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if dom & masks.full == masks.full {
            return chosen.len() == target;
        }
        for i in next..masks.n {
            let child = dom | masks.closed[i];
            if bound(chosen.len() + 1, child, i + 1).is_some_and(|b| b <= target) {
                chosen.push(i);
                if first_of_size(masks, bound, target, i + 1, child, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut best = n;
    best_size(&masks, &bound, 0, 0, 0, &mut best);
    let mut witness = Vec::new();
    let found = first_of_size(&masks, &bound, best, 0, 0, &mut witness);
    debug_assert!(found);
    Ok((best, witness))
}

/// Minimum RDF weight over all `3^n` labellings. Test oracle only.
pub fn brute_force_min_rdf(g: &Graph) -> Result<usize, RomanError> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(RomanError::TooLarge {
            n,
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    let mut labels = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        let weight: usize = labels.iter().map(|&l| l as usize).sum();
        if weight < best {
            let ok =
                (0..n).all(|u| labels[u] != 0 || g.neighbors(u).iter().any(|&w| labels[w] == 2));
            if ok {
                best = weight;
            }
        }
        // base-3 increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(if n == 0 { 0 } else { best });
            }
            labels[i] += 1;
            if labels[i] < 3 {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// `γ ≤ γ_R ≤ 2γ`, checked on solver output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SandwichReport {
    pub gamma: usize,
    pub gamma_r: usize,
    pub holds: bool,
}

pub fn check_sandwich(g: &Graph) -> Result<SandwichReport, RomanError> {
    let (gamma, _) = min_domination(g)?;
    let gamma_r = roman_domination_number(g)?;
    Ok(SandwichReport {
        gamma,
        gamma_r,
        holds: gamma <= gamma_r && gamma_r <= 2 * gamma,
    })
}
