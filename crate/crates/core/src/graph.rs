//! The induced solubility graph on the non-radical elements and the graph
//! properties checked on it.

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::group::{Family, Group};
use crate::solubilizer::{in_solubilizer, solubilizer_of_element, SolubilizerRecord};
use crate::subgroup::{bitset_members, fingerprint, soluble_normalizers};

/// Graphs with more vertices need an explicit opt-in.
pub const LARGE_VERTEX_LIMIT: usize = 16_384;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph would have {0} vertices; pass the large-graph flag to build it")]
    TooLarge(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),
}

/// Simple undirected graph stored as a dense bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolubilityGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    /// Group element behind each vertex, when built from a group.
    elements: Option<Vec<u32>>,
}

impl SolubilityGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SolubilityGraph {
            n,
            words,
            bits: vec![0; n * words],
            elements: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> Option<&[u32]> {
        self.elements.as_deref()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Sets one directed entry; callers keep the matrix symmetric.
    pub fn set_entry(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.set_entry(i, j);
        self.set_entry(j, i);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// First (i, j) with an edge one way only, or a loop as (i, i).
    pub fn symmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            if self.has_edge(i, i) {
                return Some((i, i));
            }
            for j in self.neighbors(i) {
                if !self.has_edge(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &a)| vertices[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}

/// Elements whose solubilizer is the whole group (the soluble radical).
pub fn radical(g: &Group, records: &[SolubilizerRecord]) -> Vec<u32> {
    let mut out: Vec<u32> = records
        .iter()
        .filter(|r| r.size == g.order())
        .flat_map(|r| g.classes()[r.class_index].members.iter().copied())
        .collect();
    out.sort_unstable();
    out
}

/// Builds the induced solubility graph; vertex i is the i-th non-radical
/// element in index order.
pub fn build_graph(g: &Group, records: &[SolubilizerRecord], allow_large: bool) -> Result<SolubilityGraph, GraphError> {
    let rad = radical(g, records);
    let elements: Vec<u32> = (0..g.order() as u32).filter(|e| rad.binary_search(e).is_err()).collect();
    let n = elements.len();
    if n > LARGE_VERTEX_LIMIT && !allow_large {
        return Err(GraphError::TooLarge(n));
    }
    let mut vertex_of = vec![u32::MAX; g.order()];
    for (v, &e) in elements.iter().enumerate() {
        vertex_of[e as usize] = v as u32;
    }
    let mut graph = SolubilityGraph::empty(n);
    let words = graph.words;
    graph
        .bits
        .par_chunks_mut(words)
        .enumerate()
        .for_each(|(v, row)| {
            let e = elements[v];
            let sol = solubilizer_of_element(g, records, e);
            for s in sol.ones() {
                let u = vertex_of[s];
                if u != u32::MAX && u as usize != v {
                    row[u as usize / 64] |= 1 << (u % 64);
                }
            }
        });
    if let Some((i, j)) = graph.symmetry_violation() {
        return Err(GraphError::Asymmetric(i, j));
    }
    graph.elements = Some(elements);
    Ok(graph)
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerianReport {
    pub eulerian: bool,
    pub radical_order: usize,
    /// A class whose solubilizer size is odd, if any: (class index, element order, size).
    pub witness: Option<(usize, u32, usize)>,
}

/// The graph is Eulerian iff the radical has odd order and every other
/// solubilizer has even size.
pub fn eulerian_check(g: &Group, records: &[SolubilizerRecord]) -> EulerianReport {
    let radical_order = radical(g, records).len();
    let witness = records
        .iter()
        .filter(|r| r.size != g.order())
        .find(|r| r.size % 2 == 1)
        .map(|r| (r.class_index, r.element_order, r.size));
    EulerianReport {
        eulerian: radical_order % 2 == 1 && witness.is_none(),
        radical_order,
        witness,
    }
}

/// Eulerian test straight from vertex degrees of a connected graph.
pub fn all_degrees_even(graph: &SolubilityGraph) -> bool {
    graph.degrees().iter().all(|d| d % 2 == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "seed")]
pub enum VertexOrder {
    Canonical,
    DegreeDescending,
    Random(u64),
    /// Saturation-degree order, chosen adaptively.
    Dsatur,
}

#[derive(Debug, Clone, Serialize)]
pub struct Coloring {
    pub order: VertexOrder,
    /// Color of each vertex, starting at 0.
    pub colors: Vec<u32>,
    pub color_count: usize,
}

/// First-fit coloring in the given vertex order.
pub fn greedy_coloring(graph: &SolubilityGraph, order: VertexOrder) -> Coloring {
    if order == VertexOrder::Dsatur {
        return dsatur_coloring(graph);
    }
    let n = graph.vertex_count();
    let mut seq: Vec<usize> = (0..n).collect();
    match order {
        VertexOrder::Canonical => {}
        VertexOrder::DegreeDescending => {
            let deg = graph.degrees();
            seq.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        }
        VertexOrder::Random(seed) => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            seq.shuffle(&mut rng);
        }
        VertexOrder::Dsatur => unreachable!(),
    }
    let mut colors = vec![u32::MAX; n];
    let mut used: Vec<usize> = Vec::new();
    let mut count = 0usize;
    for &v in &seq {
        used.clear();
        used.resize(count + 1, usize::MAX);
        for u in graph.neighbors(v) {
            let c = colors[u];
            if c != u32::MAX {
                used[c as usize] = v;
            }
        }
        let c = used.iter().position(|&x| x != v).unwrap_or(count);
        colors[v] = c as u32;
        count = count.max(c + 1);
    }
    Coloring {
        order,
        colors,
        color_count: count,
    }
}

/// Colors next the uncolored vertex seeing the most distinct colors, ties
/// by degree then index.
fn dsatur_coloring(graph: &SolubilityGraph) -> Coloring {
    let n = graph.vertex_count();
    let degrees = graph.degrees();
    let mut colors = vec![u32::MAX; n];
    let mut seen: Vec<FixedBitSet> = vec![FixedBitSet::new(); n];
    let mut saturation = vec![0usize; n];
    let mut count = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == u32::MAX)
            .max_by(|&a, &b| {
                saturation[a]
                    .cmp(&saturation[b])
                    .then(degrees[a].cmp(&degrees[b]))
                    .then(b.cmp(&a))
            })
            .expect("uncolored vertex remains");
        let c = (0..).find(|&c| !seen[v].contains(c)).expect("unbounded range");
        colors[v] = c as u32;
        count = count.max(c + 1);
        for u in graph.neighbors(v) {
            if colors[u] == u32::MAX {
                seen[u].grow(c + 1);
                if !seen[u].put(c) {
                    saturation[u] += 1;
                }
            }
        }
    }
    Coloring {
        order: VertexOrder::Dsatur,
        colors,
        color_count: count,
    }
}

pub fn is_proper_coloring(graph: &SolubilityGraph, colors: &[u32]) -> bool {
    colors.len() == graph.vertex_count()
        && (0..graph.vertex_count()).all(|v| graph.neighbors(v).all(|u| colors[u] != colors[v]))
}

#[derive(Debug, Clone, Serialize)]
pub struct CliqueBound {
    pub size: usize,
    pub vertices: Vec<usize>,
    pub source: String,
}

/// Largest certified clique among: all involutions, and each soluble
/// normalizer of an elementary abelian subgroup minus the radical.
pub fn clique_lower_bound(g: &Group, graph: &SolubilityGraph) -> CliqueBound {
    let Some(elements) = graph.elements() else {
        return CliqueBound {
            size: usize::from(graph.vertex_count() > 0),
            vertices: (0..graph.vertex_count().min(1)).collect(),
            source: "single vertex".to_string(),
        };
    };
    let vertex_of: FxHashMap<u32, usize> = elements.iter().enumerate().map(|(v, &e)| (e, v)).collect();
    let to_vertices = |els: &[u32]| -> Vec<usize> { els.iter().filter_map(|e| vertex_of.get(e).copied()).collect() };
    let mut best = {
        let v = to_vertices(&g.involutions());
        CliqueBound {
            size: v.len(),
            vertices: v,
            source: "involutions".to_string(),
        }
    };
    for h in soluble_normalizers(g) {
        let v = to_vertices(&h.members);
        if v.len() > best.size {
            best = CliqueBound {
                size: v.len(),
                vertices: v,
                source: format!("soluble subgroup of order {}", h.order()),
            };
        }
    }
    debug_assert!(graph.is_clique(&best.vertices));
    best
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringReport {
    pub best: Coloring,
    pub attempts: Vec<(VertexOrder, usize)>,
    pub lower_bound: usize,
    pub lower_bound_source: String,
    /// Maximum degree, or maximum degree + 1 for complete graphs and odd cycles.
    pub brooks_bound: usize,
    /// The lower bound is attained, so the chromatic number is known exactly.
    pub exact: bool,
}

/// Runs first-fit in canonical, degree-descending, DSATUR and `random_orders`
/// seeded random orders and keeps the best proper coloring.
pub fn color_graph(g: &Group, graph: &SolubilityGraph, seed: u64, random_orders: usize) -> ColoringReport {
    let clique = clique_lower_bound(g, graph);
    color_with_bound(graph, clique, seed, random_orders)
}

pub fn color_with_bound(graph: &SolubilityGraph, clique: CliqueBound, seed: u64, random_orders: usize) -> ColoringReport {
    let mut orders = vec![VertexOrder::Canonical, VertexOrder::DegreeDescending, VertexOrder::Dsatur];
    orders.extend((0..random_orders as u64).map(|k| VertexOrder::Random(seed.wrapping_add(k))));
    let results: Vec<Coloring> = orders.par_iter().map(|&o| greedy_coloring(graph, o)).collect();
    let attempts = results.iter().map(|c| (c.order, c.color_count)).collect();
    let best = results
        .into_iter()
        .min_by_key(|c| c.color_count)
        .expect("at least one order");
    debug_assert!(is_proper_coloring(graph, &best.colors));
    let n = graph.vertex_count();
    let delta = graph.max_degree();
    let complete = graph.edge_count() == n * n.saturating_sub(1) / 2;
    let odd_cycle = n % 2 == 1 && n >= 3 && delta == 2 && graph.edge_count() == n && graph.is_connected();
    let brooks_bound = if complete || odd_cycle { delta + 1 } else { delta };
    ColoringReport {
        exact: best.color_count == clique.size,
        lower_bound: clique.size,
        lower_bound_source: clique.source,
        brooks_bound,
        attempts,
        best,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianResult {
    pub found: bool,
    /// Vertex sequence; the closing edge returns to the first vertex.
    pub cycle: Vec<usize>,
    pub seed: u64,
    pub attempts: usize,
}

/// Randomised greedy search: from the current vertex move to an unvisited
/// neighbour with the fewest unvisited neighbours, ties broken at random.
/// Each attempt starts at a random vertex of `starts` (or of the whole graph)
/// and is abandoned at a dead end or when the last vertex cannot close the cycle.
pub fn hamiltonian_search(graph: &SolubilityGraph, seed: u64, max_restarts: usize, starts: &[usize]) -> HamiltonianResult {
    let n = graph.vertex_count();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let degrees = graph.degrees();
    let words = n.div_ceil(64).max(1);
    let mut unvisited = vec![0u64; words];
    let mut remaining = vec![0usize; n];
    let mut path = Vec::with_capacity(n);
    if n < 3 {
        return HamiltonianResult { found: false, cycle: Vec::new(), seed, attempts: 0 };
    }
    for attempt in 1..=max_restarts {
        unvisited.iter_mut().for_each(|w| *w = !0);
        if n % 64 != 0 {
            unvisited[words - 1] = (1u64 << (n % 64)) - 1;
        }
        remaining.copy_from_slice(&degrees);
        path.clear();
        let start = if starts.is_empty() {
            rng.random_range(0..n)
        } else {
            starts[rng.random_range(0..starts.len())]
        };
        let visit = |v: usize, unvisited: &mut Vec<u64>, remaining: &mut Vec<usize>| {
            unvisited[v / 64] &= !(1 << (v % 64));
            for u in graph.neighbors(v) {
                remaining[u] -= 1;
            }
        };
        visit(start, &mut unvisited, &mut remaining);
        path.push(start);
        let mut cur = start;
        loop {
            let row = graph.row(cur);
            let mut best = usize::MAX;
            let mut choice = usize::MAX;
            let mut ties = 0u32;
            for (w, (&a, &b)) in row.iter().zip(unvisited.iter()).enumerate() {
                let mut x = a & b;
                while x != 0 {
                    let u = w * 64 + x.trailing_zeros() as usize;
                    x &= x - 1;
                    let r = remaining[u];
                    if r < best {
                        best = r;
                        choice = u;
                        ties = 1;
                    } else if r == best {
                        ties += 1;
                        if rng.random_range(0..ties) == 0 {
                            choice = u;
                        }
                    }
                }
            }
            if choice == usize::MAX {
                break;
            }
            visit(choice, &mut unvisited, &mut remaining);
            path.push(choice);
            cur = choice;
        }
        if path.len() == n && graph.has_edge(cur, start) {
            return HamiltonianResult {
                found: true,
                cycle: path,
                seed,
                attempts: attempt,
            };
        }
    }
    HamiltonianResult {
        found: false,
        cycle: Vec::new(),
        seed,
        attempts: max_restarts,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle has {found} vertices, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} is repeated")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// Independent check that `cycle` is a Hamiltonian cycle of `graph`.
pub fn validate_cycle(graph: &SolubilityGraph, cycle: &[usize]) -> Result<(), CycleError> {
    let n = graph.vertex_count();
    if cycle.len() != n {
        return Err(CycleError::WrongLength { expected: n, found: cycle.len() });
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Err(CycleError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleError::Repeated(v));
        }
    }
    for k in 0..n {
        let (a, b) = (cycle[k], cycle[(k + 1) % n]);
        if !graph.has_edge(a, b) {
            return Err(CycleError::NotAdjacent(a, b));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct BottleneckReport {
    pub involutions: usize,
    /// Distinct dihedral solubilizers of elements of order > 2 dividing q + 1.
    pub petals: usize,
    pub petal_size: usize,
    /// Non-involution neighbours of petal elements stay inside their petal.
    pub petals_isolated: bool,
    /// Other vertices exist, so each gap between petals would need two involutions.
    pub other_vertices: bool,
    /// No Hamiltonian cycle can exist.
    pub obstruction: bool,
}

/// Counts involutions against dihedral petals in PSL(2,q), q odd, where every
/// element of order > 2 dividing q + 1 has solubilizer equal to one dihedral
/// subgroup of order q + 1 and reaches the rest of the graph only via involutions.
pub fn dihedral_bottleneck_check(g: &Group, records: &[SolubilizerRecord]) -> Result<BottleneckReport, GraphError> {
    let spec = g.spec();
    if spec.family != Family::Psl2 || spec.q % 2 == 0 {
        return Err(GraphError::NotApplicable(format!("{} is not PSL(2,q) with q odd", spec.display_name())));
    }
    let q = spec.q;
    let half = (q + 1) / 2;
    let petal_classes: Vec<&SolubilizerRecord> = records
        .iter()
        .filter(|r| r.element_order > 2 && half % r.element_order as u64 == 0)
        .collect();
    if petal_classes.is_empty() {
        return Err(GraphError::HypothesesUnmet("no elements of order > 2 dividing (q+1)/2".into()));
    }
    for r in &petal_classes {
        let dihedral = r.is_subgroup
            && fingerprint(g, &bitset_members(&r.members)).is_ok_and(|fp| fp.is_dihedral());
        if r.size as u64 != q + 1 || !dihedral {
            return Err(GraphError::HypothesesUnmet(format!(
                "class {} of order {} has a solubilizer of size {} that is not dihedral of order {}",
                r.class_index,
                r.element_order,
                r.size,
                q + 1
            )));
        }
    }
    let petal_elements: Vec<u32> = petal_classes
        .iter()
        .flat_map(|r| g.classes()[r.class_index].members.iter().copied())
        .collect();
    let mut petal_of: FxHashMap<u32, usize> = FxHashMap::default();
    let mut petal_ids: FxHashMap<Vec<u32>, usize> = FxHashMap::default();
    for &x in &petal_elements {
        let key = bitset_members(&solubilizer_of_element(g, records, x));
        let next = petal_ids.len();
        let id = *petal_ids.entry(key).or_insert(next);
        petal_of.insert(x, id);
    }
    let orders = g.element_orders();
    let petals_isolated = petal_elements.par_iter().all(|&x| {
        let sol = solubilizer_of_element(g, records, x);
        sol.ones().all(|y| {
            let y = y as u32;
            y == 0 || y == x || orders[y as usize] == 2 || petal_of.get(&y) == petal_of.get(&x)
        })
    });
    let involutions = g.involution_count();
    let other_vertices = g.order() - 1 - involutions - petal_elements.len() > 0;
    let petals = petal_ids.len();
    Ok(BottleneckReport {
        involutions,
        petals,
        petal_size: (q + 1) as usize,
        petals_isolated,
        other_vertices,
        obstruction: petals_isolated && (involutions < petals || (involutions == petals && other_vertices)),
    })
}

/// Adjacency check through the records, without a materialised graph.
pub fn adjacent(g: &Group, records: &[SolubilizerRecord], a: u32, b: u32) -> bool {
    a != b && in_solubilizer(g, records, a, b)
}

#[derive(Debug, Clone, Serialize)]
pub struct FullGraphStats {
    pub radical_order: usize,
    pub chromatic_lower: usize,
    pub chromatic_upper: usize,
    /// Never Eulerian for an insoluble group: radical vertices have odd degree |G| - 1.
    pub eulerian: bool,
    pub hamiltonian: Option<bool>,
}

/// Transfers results from the induced graph to the graph on all of G.
pub fn full_graph_stats(
    g: &Group,
    records: &[SolubilizerRecord],
    coloring: Option<&ColoringReport>,
    hamiltonian: Option<&HamiltonianResult>,
) -> FullGraphStats {
    let radical_order = radical(g, records).len();
    let eulerian = records.iter().all(|r| (r.size - 1) % 2 == 0);
    FullGraphStats {
        radical_order,
        chromatic_lower: coloring.map_or(radical_order, |c| c.lower_bound + radical_order),
        chromatic_upper: coloring.map_or(g.order(), |c| c.best.color_count + radical_order),
        eulerian,
        hamiltonian: hamiltonian.and_then(|h| h.found.then_some(true)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::solubilizer::all_solubilizers;
    use crate::subgroup::SolubilityMode;

    fn triangle() -> SolubilityGraph {
        let mut g = SolubilityGraph::empty(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g
    }

    #[test]
    fn triangle_basics() {
        let g = triangle();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert!(g.is_connected());
        assert!(validate_cycle(&g, &[0, 1, 2]).is_ok());
        assert_eq!(validate_cycle(&g, &[0, 1, 1]), Err(CycleError::Repeated(1)));
        let c = greedy_coloring(&g, VertexOrder::Canonical);
        assert_eq!(c.color_count, 3);
        assert!(is_proper_coloring(&g, &c.colors));
    }

    #[test]
    fn a5_graph() {
        let grp = Group::build(GroupSpec::psl2(4)).unwrap();
        let recs = all_solubilizers(&grp, SolubilityMode::Shortcut).unwrap();
        let graph = build_graph(&grp, &recs, false).unwrap();
        assert_eq!(graph.vertex_count(), 59);
        assert!(graph.is_connected());
        for (v, &e) in graph.elements().unwrap().iter().enumerate() {
            assert_eq!(graph.degree(v), recs[grp.class_of(e)].size - 2);
        }
        assert!(eulerian_check(&grp, &recs).eulerian);
        assert!(all_degrees_even(&graph));
        let h = hamiltonian_search(&graph, 1, 1000, &[]);
        assert!(h.found);
        assert!(validate_cycle(&graph, &h.cycle).is_ok());
    }

    #[test]
    fn bottleneck_not_applicable_in_even_characteristic() {
        let grp = Group::build(GroupSpec::psl2(8)).unwrap();
        let recs = all_solubilizers(&grp, SolubilityMode::Shortcut).unwrap();
        assert!(matches!(dihedral_bottleneck_check(&grp, &recs), Err(GraphError::NotApplicable(_))));
    }
}
