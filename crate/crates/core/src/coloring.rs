//! Exact colouring: chromatic number and minimum-/maximum-sum proper
//! surjective colourings under a fixed palette size.
//!
//! Colour indices are 1-based and act as weights, so the colouring sum
//! of an assignment is `Σ_v colour(v) = Σ_i i·θ_i` where `θ_i` is the
//! size of colour class `i`. For a fixed partition into independent
//! classes the sum is extremized purely by index permutation: giving
//! smaller indices to larger classes minimizes it, the reverse
//! assignment maximizes it (exchange argument). The search therefore
//! runs over unordered partitions and canonicalizes indices afterwards.
//!
//! Everything here uses exact integer arithmetic; no floating point
//! enters any optimality decision.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Optimization direction for the colouring sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OptMode {
    Min,
    Max,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("infeasible: surjective {k}-colouring impossible on {n} vertices")]
    PaletteExceedsOrder { k: u32, n: u32 },
    #[error("infeasible: no proper surjective {k}-colouring exists")]
    NoProperColoring { k: u32 },
    #[error("instance with {n} vertices exceeds the solver limit of {limit}")]
    TooLarge { n: u32, limit: u32 },
    #[error("oracle refuses {n} vertices (limit {limit}); raise the limit explicitly to override")]
    OracleLimit { n: u32, limit: u32 },
    #[error("colouring is not proper: vertices {u} and {v} are adjacent and share a colour")]
    NotProper { u: Vertex, v: Vertex },
    #[error("colouring is not surjective: colour {missing} of 1..={k} unused")]
    NotSurjective { missing: u32, k: u32 },
    #[error("vertex {vertex} has colour {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: Vertex, color: u32, k: u32 },
}

/// A proper surjective assignment of colours `1..=k` to vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    k: u32,
    assign: Vec<u32>,
}

impl Coloring {
    /// Validate a raw assignment (vertex `i+1` gets `assign[i]`) against
    /// a graph: colours in `1..=k`, every colour used, no monochromatic
    /// edge. `k` is taken to be the maximum colour present.
    pub fn validated(g: &Graph, assign: Vec<u32>) -> Result<Coloring, SolveError> {
        assert_eq!(assign.len(), g.vertex_count() as usize, "one colour per vertex");
        let k = assign.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k as usize];
        for (i, &c) in assign.iter().enumerate() {
            if c < 1 || c > k {
                return Err(SolveError::ColorOutOfRange { vertex: i as Vertex + 1, color: c, k });
            }
            used[c as usize - 1] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(SolveError::NotSurjective { missing: missing as u32 + 1, k });
        }
        for (u, v) in g.edges() {
            if assign[u as usize - 1] == assign[v as usize - 1] {
                return Err(SolveError::NotProper { u, v });
            }
        }
        Ok(Coloring { k, assign })
    }

    fn from_parts(k: u32, assign: Vec<u32>) -> Coloring {
        Coloring { k, assign }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color_of(&self, v: Vertex) -> u32 {
        self.assign[v as usize - 1]
    }

    pub fn assignments(&self) -> &[u32] {
        &self.assign
    }

    pub fn omega(&self) -> u64 {
        self.assign.iter().map(|&c| c as u64).sum()
    }

    /// Class sizes indexed by colour.
    pub fn class_sizes(&self) -> ClassSizeVector {
        let mut theta = vec![0u32; self.k as usize];
        for &c in &self.assign {
            theta[c as usize - 1] += 1;
        }
        ClassSizeVector::new(theta).expect("surjective colouring has no empty class")
    }

    /// Vertices of each colour class, indexed by colour.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (i, &c) in self.assign.iter().enumerate() {
            classes[c as usize - 1].push(i as Vertex + 1);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.assign[u as usize - 1] != self.assign[v as usize - 1])
    }
}

/// Colour-class sizes `(θ_1, …, θ_k)`, every entry positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ClassSizeVector(Vec<u32>);

impl ClassSizeVector {
    pub fn new(theta: Vec<u32>) -> Result<ClassSizeVector, String> {
        if theta.is_empty() {
            return Err("size vector must have at least one class".to_string());
        }
        if theta.contains(&0) {
            return Err("size vector entries must be positive".to_string());
        }
        Ok(ClassSizeVector(theta))
    }

    pub fn k(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn sizes(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for ClassSizeVector {
    type Error = String;
    fn try_from(v: Vec<u32>) -> Result<ClassSizeVector, String> {
        ClassSizeVector::new(v)
    }
}

impl From<ClassSizeVector> for Vec<u32> {
    fn from(v: ClassSizeVector) -> Vec<u32> {
        v.0
    }
}

/// Result of an extremal-sum search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalResult {
    pub mode: OptMode,
    pub k: u32,
    pub omega: u64,
    pub witness: Coloring,
    pub size_vector: ClassSizeVector,
    /// Number of distinct optimal size vectors; populated by the oracle.
    pub multiplicity: Option<u64>,
}

/// Extremal colouring sum reachable from a fixed multiset of class
/// sizes by permuting colour indices: sort descending for `Min`
/// (largest class gets colour 1), ascending for `Max`.
pub fn canonical_sum(theta: &ClassSizeVector, mode: OptMode) -> u64 {
    canonical_sum_raw(theta.sizes(), mode)
}

fn canonical_sum_raw(sizes: &[u32], mode: OptMode) -> u64 {
    let mut sorted = sizes.to_vec();
    order_sizes(&mut sorted, mode);
    sorted.iter().enumerate().map(|(i, &t)| (i as u64 + 1) * t as u64).sum()
}

fn order_sizes(sizes: &mut [u32], mode: OptMode) {
    match mode {
        OptMode::Min => sizes.sort_unstable_by(|a, b| b.cmp(a)),
        OptMode::Max => sizes.sort_unstable(),
    }
}

/// `(ω, Σ i²θ_i, θ)` under the canonical index assignment.
type PartitionKey = (u64, u64, Vec<u32>);

/// Search key of a partition. Ties in ω are broken toward extremal
/// second moment (min for `Min`, max for `Max`), then lexicographically
/// smallest θ, so results are total-ordered and deterministic.
fn partition_key(sizes: &[u32], mode: OptMode) -> PartitionKey {
    let mut theta = sizes.to_vec();
    order_sizes(&mut theta, mode);
    let omega = theta.iter().enumerate().map(|(i, &t)| (i as u64 + 1) * t as u64).sum();
    let m2 = theta
        .iter()
        .enumerate()
        .map(|(i, &t)| (i as u64 + 1) * (i as u64 + 1) * t as u64)
        .sum();
    (omega, m2, theta)
}

fn key_improves(new: &PartitionKey, old: &PartitionKey, mode: OptMode) -> bool {
    match mode {
        OptMode::Min => new < old,
        OptMode::Max => {
            (new.0, new.1) > (old.0, old.1) || ((new.0, new.1) == (old.0, old.1) && new.2 < old.2)
        }
    }
}

/// Turn a class-id assignment (ids `0..k`, any order) into a `Coloring`
/// with canonical indices: classes sorted by size (descending for
/// `Min`, ascending for `Max`), ties by smallest member vertex.
pub(crate) fn finalize_partition(assign: &[u32], k: u32, mode: OptMode) -> (Coloring, ClassSizeVector) {
    let mut sizes = vec![0u32; k as usize];
    let mut first_vertex = vec![u32::MAX; k as usize];
    for (i, &c) in assign.iter().enumerate() {
        sizes[c as usize] += 1;
        first_vertex[c as usize] = first_vertex[c as usize].min(i as u32);
    }
    let mut order: Vec<usize> = (0..k as usize).collect();
    match mode {
        OptMode::Min => order.sort_by_key(|&c| (std::cmp::Reverse(sizes[c]), first_vertex[c])),
        OptMode::Max => order.sort_by_key(|&c| (sizes[c], first_vertex[c])),
    }
    let mut color_of_class = vec![0u32; k as usize];
    for (pos, &c) in order.iter().enumerate() {
        color_of_class[c] = pos as u32 + 1;
    }
    let colors: Vec<u32> = assign.iter().map(|&c| color_of_class[c as usize]).collect();
    let theta: Vec<u32> = order.iter().map(|&c| sizes[c]).collect();
    (
        Coloring::from_parts(k, colors),
        ClassSizeVector::new(theta).expect("all classes nonempty"),
    )
}

/// Saturation-degree greedy colouring: repeatedly colour the vertex
/// whose neighbourhood already shows the most distinct colours (ties:
/// higher degree, then lower index) with the smallest feasible colour.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.vertex_count() as usize;
    let mut assign = vec![0u32; n];
    let mut neighbor_colors: Vec<std::collections::BTreeSet<u32>> =
        vec![std::collections::BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&i| assign[i] == 0)
            .max_by_key(|&i| {
                (neighbor_colors[i].len(), g.degree(i as Vertex + 1), std::cmp::Reverse(i))
            })
            .expect("an uncoloured vertex remains");
        let mut c = 1u32;
        while neighbor_colors[v].contains(&c) {
            c += 1;
        }
        assign[v] = c;
        for &w in g.neighbors(v as Vertex + 1) {
            neighbor_colors[w as usize - 1].insert(c);
        }
    }
    let k = assign.iter().copied().max().unwrap_or(0);
    Coloring::from_parts(k, assign)
}

/// Palette size of the greedy colouring; a proper witness exists for it.
pub fn greedy_upper_bound(g: &Graph) -> u32 {
    greedy_coloring(g).k()
}

/// Size of a greedily grown clique; always a lower bound on χ.
pub fn clique_lower_bound(g: &Graph) -> u32 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 1;
    for (i, &seed) in order.iter().enumerate() {
        if g.degree(seed) < best as usize {
            break; // degree-sorted: nothing larger can follow
        }
        let mut clique = vec![seed];
        for &w in order.iter().skip(i + 1) {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len() as u32);
    }
    best
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count() as usize;
    let mut side = vec![0i8; n];
    for start in 0..n {
        if side[start] != 0 {
            continue;
        }
        side[start] = 1;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v as Vertex + 1) {
                let w = w as usize - 1;
                if side[w] == 0 {
                    side[w] = -side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact chromatic number via branch and bound between the clique lower
/// bound and the greedy upper bound. Deterministic.
pub fn chromatic_number(g: &Graph) -> u32 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = clique_lower_bound(g).max(2);
    let upper = greedy_upper_bound(g);
    for k in lower..upper {
        let feasible = if k == 2 { is_bipartite(g) } else { k_colorable(g, k) };
        if feasible {
            return k;
        }
    }
    upper
}

/// Complete backtracking test for proper k-colourability (not
/// necessarily surjective). The most saturated uncoloured vertex is
/// branched on next (ties: higher degree, then lower index), so
/// zero-choice vertices fail immediately; a vertex may only open colour
/// `max_used + 1`, which removes colour-permutation symmetry.
fn k_colorable(g: &Graph, k: u32) -> bool {
    let n = g.vertex_count() as usize;
    if k as usize >= n {
        return true;
    }

    struct State<'a> {
        g: &'a Graph,
        k: u32,
        colors: Vec<u32>,
        // per vertex: how many neighbours carry each colour (1-based)
        neighbor_count: Vec<Vec<u16>>,
        saturation: Vec<u32>,
        uncolored: usize,
    }

    impl State<'_> {
        fn assign(&mut self, v: usize, c: u32) {
            self.colors[v] = c;
            self.uncolored -= 1;
            for &w in self.g.neighbors(v as Vertex + 1) {
                let w = w as usize - 1;
                let slot = &mut self.neighbor_count[w][c as usize - 1];
                if *slot == 0 {
                    self.saturation[w] += 1;
                }
                *slot += 1;
            }
        }

        fn unassign(&mut self, v: usize, c: u32) {
            self.colors[v] = 0;
            self.uncolored += 1;
            for &w in self.g.neighbors(v as Vertex + 1) {
                let w = w as usize - 1;
                let slot = &mut self.neighbor_count[w][c as usize - 1];
                *slot -= 1;
                if *slot == 0 {
                    self.saturation[w] -= 1;
                }
            }
        }

        fn search(&mut self, max_used: u32) -> bool {
            if self.uncolored == 0 {
                return true;
            }
            let v = (0..self.colors.len())
                .filter(|&v| self.colors[v] == 0)
                .max_by_key(|&v| {
                    (self.saturation[v], self.g.degree(v as Vertex + 1), std::cmp::Reverse(v))
                })
                .expect("an uncoloured vertex remains");
            let cap = (max_used + 1).min(self.k);
            for c in 1..=cap {
                if self.neighbor_count[v][c as usize - 1] > 0 {
                    continue;
                }
                self.assign(v, c);
                if self.search(max_used.max(c)) {
                    return true;
                }
                self.unassign(v, c);
            }
            false
        }
    }

    let mut state = State {
        g,
        k,
        colors: vec![0; n],
        neighbor_count: vec![vec![0; k as usize]; n],
        saturation: vec![0; n],
        uncolored: n,
    };
    state.search(0)
}

const EXTREMAL_VERTEX_LIMIT: u32 = 128;

/// Exact extremal-sum colouring: over all proper surjective
/// `k`-colourings, minimize (`Min`) or maximize (`Max`) the colouring
/// sum; among optima, extremal second moment and then lexicographically
/// least size vector decide, so the output is deterministic.
///
/// Branch and bound over partitions: vertices are placed in index
/// order into independent classes, a new class may only be opened by
/// the lowest-indexed unplaced vertex, and the partial bound is the
/// canonical sum of (current sizes + most concentrated completion) --
/// concentrating remaining vertices into the largest class both
/// minimizes the reachable min-sum and maximizes the reachable max-sum.
pub fn extremal_coloring(g: &Graph, k: u32, mode: OptMode) -> Result<ExtremalResult, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > EXTREMAL_VERTEX_LIMIT {
        return Err(SolveError::TooLarge { n, limit: EXTREMAL_VERTEX_LIMIT });
    }
    if k < 1 || k > n {
        return Err(SolveError::PaletteExceedsOrder { k, n });
    }

    let neighbor_mask: Vec<u128> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | (1u128 << (w - 1))))
        .collect();

    struct Search<'a> {
        neighbor_mask: &'a [u128],
        n: u32,
        k: u32,
        mode: OptMode,
        class_mask: Vec<u128>,
        sizes: Vec<u32>,
        assign: Vec<u32>,
        best: Option<(PartitionKey, Vec<u32>)>,
    }

    impl Search<'_> {
        fn bound_allows(&self) -> bool {
            let best = match &self.best {
                Some((key, _)) => key,
                None => return true,
            };
            let placed: u32 = self.sizes.iter().sum();
            let remaining = self.n - placed;
            let new_classes = self.k - self.sizes.len() as u32;
            let extras = remaining - new_classes; // caller ensured >= 0
            let mut optimistic = self.sizes.clone();
            if let Some(m) = optimistic.iter_mut().max() {
                *m += extras;
                optimistic.extend(std::iter::repeat_n(1, new_classes as usize));
            } else {
                optimistic.push(1 + extras);
                optimistic.extend(std::iter::repeat_n(1, new_classes as usize - 1));
            }
            let bound = canonical_sum_raw(&optimistic, self.mode);
            match self.mode {
                OptMode::Min => bound <= best.0,
                OptMode::Max => bound >= best.0,
            }
        }

        fn place(&mut self, v: u32) {
            if v > self.n {
                if self.sizes.len() as u32 == self.k {
                    let key = partition_key(&self.sizes, self.mode);
                    let better = match &self.best {
                        None => true,
                        Some((old, _)) => key_improves(&key, old, self.mode),
                    };
                    if better {
                        self.best = Some((key, self.assign.clone()));
                    }
                }
                return;
            }
            let remaining = self.n - v + 1;
            let open = self.sizes.len() as u32;
            if open + remaining < self.k {
                return; // cannot open enough classes for surjectivity
            }
            if !self.bound_allows() {
                return;
            }
            let bit = 1u128 << (v - 1);
            let nbrs = self.neighbor_mask[v as usize - 1];
            for c in 0..self.sizes.len() {
                if self.class_mask[c] & nbrs == 0 {
                    self.class_mask[c] |= bit;
                    self.sizes[c] += 1;
                    self.assign[v as usize - 1] = c as u32;
                    self.place(v + 1);
                    self.sizes[c] -= 1;
                    self.class_mask[c] &= !bit;
                }
            }
            if open < self.k {
                self.class_mask.push(bit);
                self.sizes.push(1);
                self.assign[v as usize - 1] = open;
                self.place(v + 1);
                self.class_mask.pop();
                self.sizes.pop();
            }
        }
    }

    let mut search = Search {
        neighbor_mask: &neighbor_mask,
        n,
        k,
        mode,
        class_mask: Vec::new(),
        sizes: Vec::new(),
        assign: vec![0; n as usize],
        best: None,
    };
    search.place(1);

    let ((omega, _, _), assign) = search.best.ok_or(SolveError::NoProperColoring { k })?;
    let (witness, size_vector) = finalize_partition(&assign, k, mode);
    debug_assert_eq!(witness.omega(), omega);
    Ok(ExtremalResult { mode, k, omega, witness, size_vector, multiplicity: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, FamilyInstance};
    use crate::graph::{is_independent_set, mycielskian};

    fn family(f: Family, n: u32) -> crate::graph::Graph {
        FamilyInstance::simple(f, n).unwrap().build().unwrap()
    }

    fn myc(f: Family, n: u32) -> crate::graph::Graph {
        mycielskian(&family(f, n))
    }

    #[test]
    fn greedy_bounds() {
        assert_eq!(greedy_upper_bound(&family(Family::Complete, 5)), 5);
        let bip = FamilyInstance::bipartite(3, 2).unwrap().build().unwrap();
        let w = greedy_coloring(&bip);
        assert!(w.is_proper(&bip));
        let g = myc(Family::Cycle, 5);
        let w = greedy_coloring(&g);
        assert!(w.is_proper(&g));
        assert!(w.k() >= 4);
    }

    #[test]
    fn clique_bounds() {
        assert_eq!(clique_lower_bound(&family(Family::Complete, 4)), 4);
        assert_eq!(clique_lower_bound(&family(Family::Cycle, 5)), 2);
        assert_eq!(clique_lower_bound(&myc(Family::Path, 5)), 2);
    }

    #[test]
    fn chromatic_numbers() {
        for n in 2..=6 {
            assert_eq!(chromatic_number(&myc(Family::Path, n)), 3, "path n={n}");
        }
        assert_eq!(chromatic_number(&myc(Family::Cycle, 5)), 4); // Grötzsch graph
        assert_eq!(chromatic_number(&myc(Family::Complete, 3)), 4);
        assert_eq!(chromatic_number(&family(Family::Path, 1)), 1);
    }

    #[test]
    fn extremal_small_cases() {
        let g = myc(Family::Path, 2);
        let min = extremal_coloring(&g, 3, OptMode::Min).unwrap();
        assert_eq!(min.omega, 9);
        assert_eq!(min.size_vector.sizes(), &[2, 2, 1]);
        let max = extremal_coloring(&g, 3, OptMode::Max).unwrap();
        assert_eq!(max.omega, 11);
        assert_eq!(max.size_vector.sizes(), &[1, 2, 2]);
    }

    #[test]
    fn extremal_beats_shadow_monochromatic_pattern_on_p3() {
        let g = myc(Family::Path, 3);
        let min = extremal_coloring(&g, 3, OptMode::Min).unwrap();
        assert_eq!(min.omega, 11);
        assert_eq!(min.size_vector.sizes(), &[4, 2, 1]);
        assert!(min.witness.is_proper(&g));
        assert_eq!(min.witness.omega(), 11);
        for class in min.witness.classes() {
            assert!(is_independent_set(&g, &class).unwrap());
        }
    }

    #[test]
    fn infeasible_palettes() {
        let g = myc(Family::Path, 2); // 5-cycle, chi = 3
        assert_eq!(
            extremal_coloring(&g, 2, OptMode::Min).unwrap_err(),
            SolveError::NoProperColoring { k: 2 }
        );
        assert_eq!(
            extremal_coloring(&g, 6, OptMode::Min).unwrap_err(),
            SolveError::PaletteExceedsOrder { k: 6, n: 5 }
        );
    }

    #[test]
    fn canonical_sum_examples() {
        let v = ClassSizeVector::new(vec![2, 2, 1]).unwrap();
        assert_eq!(canonical_sum(&v, OptMode::Min), 9);
        let v = ClassSizeVector::new(vec![1, 2, 2]).unwrap();
        assert_eq!(canonical_sum(&v, OptMode::Min), 9);
        let v = ClassSizeVector::new(vec![3, 2, 1, 1]).unwrap();
        assert_eq!(canonical_sum(&v, OptMode::Max), 21);
        assert_eq!(canonical_sum(&v, OptMode::Min), 14);
    }

    #[test]
    fn coloring_validation() {
        let g = family(Family::Path, 3);
        assert!(Coloring::validated(&g, vec![1, 2, 1]).is_ok());
        assert_eq!(
            Coloring::validated(&g, vec![1, 1, 2]).unwrap_err(),
            SolveError::NotProper { u: 1, v: 2 }
        );
        assert_eq!(
            Coloring::validated(&g, vec![1, 3, 1]).unwrap_err(),
            SolveError::NotSurjective { missing: 2, k: 3 }
        );
    }
}
