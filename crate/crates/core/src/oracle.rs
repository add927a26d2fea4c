//! Brute-force ground truth for extremal-sum colourings.
//!
//! Enumerates every partition of the vertex set into exactly `k`
//! nonempty independent classes by restricted growth strings (vertex 1
//! is in block 0; a vertex may join an existing block or open the next
//! one), scoring each partition from scratch. No search bounds are
//! applied beyond independence and the block-count arithmetic, so this
//! path stays independent of the branch-and-bound solver it checks.

use std::collections::BTreeSet;

use crate::coloring::{
    finalize_partition, ClassSizeVector, ExtremalResult, OptMode, SolveError,
};
use crate::graph::Graph;

/// Default refusal threshold; 13 vertices keeps exhaustive enumeration
/// in the low millions of partitions.
pub const ORACLE_VERTEX_LIMIT: u32 = 13;

/// An [`ExtremalResult`] with multiplicity filled in, plus every
/// optimal size vector (sorted per the mode's canonical order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleOutcome {
    pub result: ExtremalResult,
    pub optimal_size_vectors: Vec<ClassSizeVector>,
}

pub fn oracle_extremal(g: &Graph, k: u32, mode: OptMode) -> Result<OracleOutcome, SolveError> {
    oracle_extremal_with_limit(g, k, mode, ORACLE_VERTEX_LIMIT)
}

pub fn oracle_extremal_with_limit(
    g: &Graph,
    k: u32,
    mode: OptMode,
    limit: u32,
) -> Result<OracleOutcome, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > limit {
        return Err(SolveError::OracleLimit { n, limit });
    }
    if k < 1 || k > n {
        return Err(SolveError::PaletteExceedsOrder { k, n });
    }

    struct Enumerate<'a> {
        g: &'a Graph,
        n: u32,
        k: u32,
        mode: OptMode,
        assign: Vec<u32>,
        best_omega: Option<u64>,
        // all size vectors achieving best_omega (canonical order per mode)
        optimal_vectors: BTreeSet<Vec<u32>>,
        // tie-broken champion: (omega, second moment, theta) with its assignment
        best_key: Option<(u64, u64, Vec<u32>)>,
        best_assign: Vec<u32>,
    }

    impl Enumerate<'_> {
        fn score(&mut self, blocks: u32) {
            let mut theta = vec![0u32; blocks as usize];
            for &b in &self.assign {
                theta[b as usize] += 1;
            }
            match self.mode {
                OptMode::Min => theta.sort_unstable_by(|a, b| b.cmp(a)),
                OptMode::Max => theta.sort_unstable(),
            }
            let omega: u64 =
                theta.iter().enumerate().map(|(i, &t)| (i as u64 + 1) * t as u64).sum();
            let m2: u64 = theta
                .iter()
                .enumerate()
                .map(|(i, &t)| (i as u64 + 1) * (i as u64 + 1) * t as u64)
                .sum();

            let improved_omega = match (self.mode, self.best_omega) {
                (_, None) => true,
                (OptMode::Min, Some(best)) => omega < best,
                (OptMode::Max, Some(best)) => omega > best,
            };
            if improved_omega {
                self.best_omega = Some(omega);
                self.optimal_vectors.clear();
            }
            if self.best_omega == Some(omega) {
                self.optimal_vectors.insert(theta.clone());
            }

            let key = (omega, m2, theta);
            let improved_key = match (&self.best_key, self.mode) {
                (None, _) => true,
                (Some(old), OptMode::Min) => key < *old,
                (Some(old), OptMode::Max) => {
                    (key.0, key.1) > (old.0, old.1)
                        || ((key.0, key.1) == (old.0, old.1) && key.2 < old.2)
                }
            };
            if improved_key {
                self.best_key = Some(key);
                self.best_assign = self.assign.clone();
            }
        }

        fn extend(&mut self, v: u32, blocks: u32) {
            if v > self.n {
                if blocks == self.k {
                    self.score(blocks);
                }
                return;
            }
            let remaining = self.n - v + 1;
            if blocks + remaining < self.k {
                return;
            }
            for b in 0..blocks {
                let independent = (1..v).all(|w| {
                    self.assign[w as usize - 1] != b || !self.g.has_edge(w, v)
                });
                if independent {
                    self.assign[v as usize - 1] = b;
                    self.extend(v + 1, blocks);
                }
            }
            if blocks < self.k {
                self.assign[v as usize - 1] = blocks;
                self.extend(v + 1, blocks + 1);
            }
        }
    }

    let mut e = Enumerate {
        g,
        n,
        k,
        mode,
        assign: vec![0; n as usize],
        best_omega: None,
        optimal_vectors: BTreeSet::new(),
        best_key: None,
        best_assign: Vec::new(),
    };
    e.extend(1, 0);

    let (omega, _, _) = e.best_key.ok_or(SolveError::NoProperColoring { k })?;
    let (witness, size_vector) = finalize_partition(&e.best_assign, k, mode);
    let multiplicity = e.optimal_vectors.len() as u64;
    let optimal_size_vectors = e
        .optimal_vectors
        .into_iter()
        .map(|v| ClassSizeVector::new(v).expect("nonempty blocks"))
        .collect();
    Ok(OracleOutcome {
        result: ExtremalResult {
            mode,
            k,
            omega,
            witness,
            size_vector,
            multiplicity: Some(multiplicity),
        },
        optimal_size_vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::extremal_coloring;
    use crate::family::{Family, FamilyInstance};
    use crate::graph::mycielskian;

    fn myc(f: Family, n: u32) -> Graph {
        mycielskian(&FamilyInstance::simple(f, n).unwrap().build().unwrap())
    }

    #[test]
    fn agrees_with_solver_on_p2() {
        let g = myc(Family::Path, 2);
        let oracle = oracle_extremal(&g, 3, OptMode::Min).unwrap();
        let solver = extremal_coloring(&g, 3, OptMode::Min).unwrap();
        assert_eq!(oracle.result.omega, 9);
        assert_eq!(oracle.result.omega, solver.omega);
        assert_eq!(oracle.result.size_vector, solver.size_vector);
    }

    #[test]
    fn complete_base_case() {
        let g = myc(Family::Complete, 3);
        let out = oracle_extremal(&g, 4, OptMode::Min).unwrap();
        assert_eq!(out.result.omega, 14);
        assert_eq!(out.result.size_vector.sizes(), &[3, 2, 1, 1]);
    }

    #[test]
    fn unique_optimum_on_p3() {
        let g = myc(Family::Path, 3);
        let out = oracle_extremal(&g, 3, OptMode::Min).unwrap();
        assert_eq!(out.result.multiplicity, Some(1));
        assert_eq!(out.optimal_size_vectors.len(), 1);
        assert_eq!(out.optimal_size_vectors[0].sizes(), &[4, 2, 1]);
    }

    #[test]
    fn refuses_large_instances() {
        let g = myc(Family::Path, 7); // 15 vertices
        assert_eq!(
            oracle_extremal(&g, 3, OptMode::Min).unwrap_err(),
            SolveError::OracleLimit { n: 15, limit: ORACLE_VERTEX_LIMIT }
        );
        assert!(oracle_extremal_with_limit(&g, 3, OptMode::Min, 15).is_ok());
    }
}
