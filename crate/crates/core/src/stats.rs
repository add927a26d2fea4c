//! Colour-class distributions and their exact mean/variance.
//!
//! A proper surjective colouring of an `n`-vertex graph induces the pmf
//! `f(i) = θ_i / n` of the colour index of a uniformly random vertex;
//! the colouring mean and variance are the moments of that index. The
//! χ-parameters take the minimum-sum colouring on χ colours, the
//! χ⁺-parameters the maximum-sum one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{extremal_coloring, chromatic_number, ClassSizeVector, OptMode, SolveError};
use crate::graph::Graph;
use crate::oracle::{oracle_extremal, ORACLE_VERTEX_LIMIT};
use crate::rational::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("class sizes sum to {sum}, expected the graph order {n}")]
    InvalidDistribution { sum: u32, n: u32 },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Which extremal colouring a summary describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SummaryMode {
    #[serde(rename = "chi")]
    Chi,
    #[serde(rename = "chi_plus")]
    ChiPlus,
}

impl SummaryMode {
    pub fn opt_mode(&self) -> OptMode {
        match self {
            SummaryMode::Chi => OptMode::Min,
            SummaryMode::ChiPlus => OptMode::Max,
        }
    }
}

/// Exact colour distribution: class sizes `θ` over `n` vertices with
/// pmf `f(i) = θ_i / n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorDistribution {
    n: u32,
    theta: ClassSizeVector,
}

impl ColorDistribution {
    pub fn new(theta: ClassSizeVector, n: u32) -> Result<ColorDistribution, StatsError> {
        let sum = theta.total();
        if sum != n {
            return Err(StatsError::InvalidDistribution { sum, n });
        }
        Ok(ColorDistribution { n, theta })
    }

    pub fn k(&self) -> u32 {
        self.theta.k()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn theta(&self) -> &ClassSizeVector {
        &self.theta
    }

    pub fn pmf(&self) -> Vec<Rat> {
        self.theta
            .sizes()
            .iter()
            .map(|&t| Rat::new(t as i128, self.n as i128))
            .collect()
    }

    /// `Σ i·f(i)`, equal to `(Σ i·θ_i)/n`.
    pub fn mean(&self) -> Rat {
        let weighted: i128 = self
            .theta
            .sizes()
            .iter()
            .enumerate()
            .map(|(i, &t)| (i as i128 + 1) * t as i128)
            .sum();
        Rat::new(weighted, self.n as i128)
    }

    /// Variance via the moment identity `E[i²] − E[i]²`.
    pub fn variance(&self) -> Rat {
        let second: i128 = self
            .theta
            .sizes()
            .iter()
            .enumerate()
            .map(|(i, &t)| (i as i128 + 1) * (i as i128 + 1) * t as i128)
            .sum();
        let mean = self.mean();
        Rat::new(second, self.n as i128) - mean * mean
    }

    /// Variance straight from the defining sum `Σ (i−μ)² f(i)`; equals
    /// [`ColorDistribution::variance`] exactly (property-tested).
    pub fn variance_definitional(&self) -> Rat {
        let mean = self.mean();
        self.pmf()
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                let d = Rat::int(i as i128 + 1) - mean;
                d * d * f
            })
            .sum()
    }

    /// Reverse the colour order: `θ'_i = θ_{k+1−i}`.
    pub fn reverse(&self) -> ColorDistribution {
        let mut sizes = self.theta.sizes().to_vec();
        sizes.reverse();
        ColorDistribution {
            n: self.n,
            theta: ClassSizeVector::new(sizes).expect("reversal preserves positivity"),
        }
    }
}

/// The χ- or χ⁺-summary of a graph: palette size, colouring sum, exact
/// moments and the realizing distribution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChromaticSummary {
    pub mode: SummaryMode,
    pub vertices: u32,
    pub k: u32,
    pub omega: u64,
    pub mean: Rat,
    pub variance: Rat,
    pub distribution: ClassSizeVector,
    pub multiplicity: Option<u64>,
}

/// Serialized form of [`ChromaticSummary`]; `family`/`n` carry the
/// generating parameters when the graph came from a family generator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SummaryJson {
    pub family: Option<String>,
    pub n: Option<u32>,
    pub vertices: u32,
    pub k: u32,
    pub omega: u64,
    pub mean: Rat,
    pub variance: Rat,
    pub distribution: Vec<u32>,
    pub multiplicity: Option<u64>,
    pub mode: String,
}

impl ChromaticSummary {
    pub fn to_json(&self, family: Option<String>, n: Option<u32>) -> SummaryJson {
        SummaryJson {
            family,
            n,
            vertices: self.vertices,
            k: self.k,
            omega: self.omega,
            mean: self.mean,
            variance: self.variance,
            distribution: self.distribution.sizes().to_vec(),
            multiplicity: self.multiplicity,
            mode: match self.mode {
                SummaryMode::Chi => "chi".to_string(),
                SummaryMode::ChiPlus => "chi_plus".to_string(),
            },
        }
    }
}

fn summary(g: &Graph, mode: SummaryMode, k: Option<u32>) -> Result<ChromaticSummary, StatsError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(StatsError::Solve(SolveError::EmptyGraph));
    }
    let k = match k {
        Some(k) => k,
        None => {
            // The default path must compute an exact chromatic number,
            // which is hopeless on large adversarial inputs; refuse
            // instead of hanging. Callers who know a feasible palette
            // can pass k explicitly.
            if n > 32 {
                return Err(StatsError::Solve(SolveError::TooLarge { n, limit: 32 }));
            }
            chromatic_number(g)
        }
    };
    let result = extremal_coloring(g, k, mode.opt_mode())?;
    let multiplicity = if n <= ORACLE_VERTEX_LIMIT {
        oracle_extremal(g, k, mode.opt_mode()).ok().and_then(|o| o.result.multiplicity)
    } else {
        None
    };
    let dist = ColorDistribution::new(result.size_vector.clone(), n)?;
    Ok(ChromaticSummary {
        mode,
        vertices: n,
        k,
        omega: result.omega,
        mean: dist.mean(),
        variance: dist.variance(),
        distribution: result.size_vector,
        multiplicity,
    })
}

/// Minimum-sum colouring statistics on exactly `χ(g)` colours.
pub fn chi_summary(g: &Graph) -> Result<ChromaticSummary, StatsError> {
    summary(g, SummaryMode::Chi, None)
}

/// Maximum-sum colouring statistics on exactly `χ(g)` colours.
pub fn chi_plus_summary(g: &Graph) -> Result<ChromaticSummary, StatsError> {
    summary(g, SummaryMode::ChiPlus, None)
}

/// Same as the summaries above but with an explicit palette size.
pub fn summary_with_palette(
    g: &Graph,
    mode: SummaryMode,
    k: u32,
) -> Result<ChromaticSummary, StatsError> {
    summary(g, mode, Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, FamilyInstance};
    use crate::graph::mycielskian;

    fn theta(v: &[u32]) -> ClassSizeVector {
        ClassSizeVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pmf_examples() {
        let d = ColorDistribution::new(theta(&[2, 2, 1]), 5).unwrap();
        assert_eq!(d.pmf(), vec![Rat::new(2, 5), Rat::new(2, 5), Rat::new(1, 5)]);
        assert_eq!(d.mean(), Rat::new(9, 5));
        assert_eq!(d.variance(), Rat::new(14, 25));

        let single = ColorDistribution::new(theta(&[7]), 7).unwrap();
        assert_eq!(single.mean(), Rat::int(1));
        assert_eq!(single.variance(), Rat::zero());

        let d = ColorDistribution::new(theta(&[4, 2, 1]), 7).unwrap();
        assert_eq!(d.pmf(), vec![Rat::new(4, 7), Rat::new(2, 7), Rat::new(1, 7)]);
    }

    #[test]
    fn complete_proof_distribution() {
        // θ=(3,2,1,1) over 7 vertices: mean 2, variance 8/7
        let d = ColorDistribution::new(theta(&[3, 2, 1, 1]), 7).unwrap();
        assert_eq!(d.mean(), Rat::int(2));
        assert_eq!(d.variance(), Rat::new(8, 7));
        assert_eq!(d.variance_definitional(), Rat::new(8, 7));
    }

    #[test]
    fn invalid_distribution() {
        assert_eq!(
            ColorDistribution::new(theta(&[2, 2]), 5).unwrap_err(),
            StatsError::InvalidDistribution { sum: 4, n: 5 }
        );
    }

    #[test]
    fn reversal_identities() {
        let d = ColorDistribution::new(theta(&[2, 2, 1]), 5).unwrap();
        let r = d.reverse();
        assert_eq!(r.theta().sizes(), &[1, 2, 2]);
        assert_eq!(r.reverse(), d);
        assert_eq!(r.mean() + d.mean(), Rat::int(4)); // k + 1
        assert_eq!(r.variance(), d.variance());
    }

    #[test]
    fn summaries_on_smallest_path() {
        let g = mycielskian(&FamilyInstance::simple(Family::Path, 2).unwrap().build().unwrap());
        let chi = chi_summary(&g).unwrap();
        assert_eq!(chi.k, 3);
        assert_eq!(chi.omega, 9);
        assert_eq!(chi.mean, Rat::new(9, 5));
        assert_eq!(chi.variance, Rat::new(14, 25));
        assert_eq!(chi.multiplicity, Some(1));

        let plus = chi_plus_summary(&g).unwrap();
        assert_eq!(plus.mean, Rat::new(11, 5));
    }

    #[test]
    fn summary_on_p3_reflects_true_minimum() {
        let g = mycielskian(&FamilyInstance::simple(Family::Path, 3).unwrap().build().unwrap());
        let chi = chi_summary(&g).unwrap();
        assert_eq!(chi.omega, 11);
        assert_eq!(chi.mean, Rat::new(11, 7));
        assert_eq!(chi.variance, Rat::new(26, 49));
        assert_eq!(chi.distribution.sizes(), &[4, 2, 1]);
    }

    #[test]
    fn json_schema_shape() {
        let g = mycielskian(&FamilyInstance::simple(Family::Path, 2).unwrap().build().unwrap());
        let json = serde_json::to_value(
            chi_summary(&g).unwrap().to_json(Some("path".into()), Some(2)),
        )
        .unwrap();
        assert_eq!(json["mean"], serde_json::json!({"num": 9, "den": 5}));
        assert_eq!(json["distribution"], serde_json::json!([2, 2, 1]));
        assert_eq!(json["mode"], "chi");
        assert_eq!(json["omega"], 9);
    }
}
