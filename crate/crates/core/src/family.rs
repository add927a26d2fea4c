//! Standard graph families and their generators.
//!
//! The wheel on rim `n` is `C_n` plus a hub, the fan on `n` is `P_n`
//! plus a hub; in both the hub is the last vertex (`n + 1`) so rim/path
//! indices line up with the bare cycle/path generators. "friendship" is
//! accepted as an alias for the fan because the construction "path plus
//! a vertex joined to every path vertex" circulates under both names,
//! even though the usual friendship graph is the windmill.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{mycielskian, Graph, Vertex};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Fan,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Family, FamilyError> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "complete_bipartite" => Ok(Family::CompleteBipartite),
            "wheel" => Ok(Family::Wheel),
            "fan" | "friendship" => Ok(Family::Fan),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} requires n >= {min}, got {got}")]
    SizeOutOfRange { family: Family, min: u32, got: u32 },
    #[error("complete_bipartite requires part sizes a >= b >= 1, got a={a}, b={b}")]
    BadPartSizes { a: u32, b: u32 },
    #[error("complete_bipartite takes part sizes (a, b), not n")]
    PartsRequired,
    #[error("part sizes (a, b) only apply to complete_bipartite")]
    PartsNotAllowed,
}

/// A parameterized family member, optionally wrapped in the Mycielskian.
///
/// `n` is the size parameter (rim length for wheels, path length for
/// fans); for `complete_bipartite` it is the derived order `a + b` and
/// part sizes are normalized so `a >= b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: Family,
    pub n: u32,
    pub parts: Option<(u32, u32)>,
    pub mycielskian: bool,
}

impl FamilyInstance {
    pub fn simple(family: Family, n: u32) -> Result<FamilyInstance, FamilyError> {
        if family == Family::CompleteBipartite {
            return Err(FamilyError::PartsRequired);
        }
        let min = match family {
            Family::Path | Family::Complete | Family::Fan => 1,
            Family::Cycle | Family::Wheel => 3,
            Family::CompleteBipartite => unreachable!(),
        };
        if n < min {
            return Err(FamilyError::SizeOutOfRange { family, min, got: n });
        }
        Ok(FamilyInstance { family, n, parts: None, mycielskian: false })
    }

    pub fn bipartite(a: u32, b: u32) -> Result<FamilyInstance, FamilyError> {
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        if b < 1 {
            return Err(FamilyError::BadPartSizes { a, b });
        }
        Ok(FamilyInstance {
            family: Family::CompleteBipartite,
            n: a + b,
            parts: Some((a, b)),
            mycielskian: false,
        })
    }

    pub fn with_mycielskian(mut self, flag: bool) -> FamilyInstance {
        self.mycielskian = flag;
        self
    }

    /// Base-graph order (before the Mycielskian is applied).
    pub fn base_order(&self) -> u32 {
        match self.family {
            Family::Wheel | Family::Fan => self.n + 1,
            _ => self.n,
        }
    }

    /// Order of the generated graph, after the optional Mycielskian.
    pub fn order(&self) -> u32 {
        if self.mycielskian {
            2 * self.base_order() + 1
        } else {
            self.base_order()
        }
    }

    /// Short parameter description, e.g. `n=4` or `a=3,b=2`.
    pub fn parameter_string(&self) -> String {
        match self.parts {
            Some((a, b)) => format!("a={a},b={b}"),
            None => format!("n={}", self.n),
        }
    }

    /// Generate the graph.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        let base = self.build_base()?;
        Ok(if self.mycielskian { mycielskian(&base) } else { base })
    }

    fn build_base(&self) -> Result<Graph, FamilyError> {
        let n = self.n;
        let edges: Vec<(Vertex, Vertex)> = match self.family {
            Family::Path => (1..n).map(|i| (i, i + 1)).collect(),
            Family::Cycle => (1..n).map(|i| (i, i + 1)).chain([(1, n)]).collect(),
            Family::Complete => {
                let mut e = Vec::new();
                for u in 1..=n {
                    for v in u + 1..=n {
                        e.push((u, v));
                    }
                }
                e
            }
            Family::CompleteBipartite => {
                let (a, b) = self.parts.ok_or(FamilyError::PartsRequired)?;
                let mut e = Vec::new();
                for u in 1..=a {
                    for v in a + 1..=a + b {
                        e.push((u, v));
                    }
                }
                e
            }
            Family::Wheel => {
                let hub = n + 1;
                (1..n)
                    .map(|i| (i, i + 1))
                    .chain([(1, n)])
                    .chain((1..=n).map(|i| (i, hub)))
                    .collect()
            }
            Family::Fan => {
                let hub = n + 1;
                (1..n).map(|i| (i, i + 1)).chain((1..=n).map(|i| (i, hub))).collect()
            }
        };
        let order = self.base_order();
        Ok(Graph::new(order, edges).expect("family generators produce valid graphs"))
    }
}

/// Spec-level entry point; equivalent to [`FamilyInstance::build`].
pub fn make_family(spec: &FamilyInstance) -> Result<Graph, FamilyError> {
    spec.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p3() {
        let g = FamilyInstance::simple(Family::Path, 3).unwrap().build().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn wheel_w5() {
        let g = FamilyInstance::simple(Family::Wheel, 4).unwrap().build().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(5), 4); // hub
    }

    #[test]
    fn fan_of_two_is_triangle() {
        let g = FamilyInstance::simple(Family::Fan, 2).unwrap().build().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_triangle());
    }

    #[test]
    fn bipartite_normalizes_parts() {
        let f = FamilyInstance::bipartite(1, 3).unwrap();
        assert_eq!(f.parts, Some((3, 1)));
        assert_eq!(f.n, 4);
        let g = f.build().unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(
            FamilyInstance::simple(Family::Cycle, 2).unwrap_err(),
            FamilyError::SizeOutOfRange { family: Family::Cycle, min: 3, got: 2 }
        );
        assert_eq!(
            FamilyInstance::bipartite(2, 0).unwrap_err(),
            FamilyError::BadPartSizes { a: 2, b: 0 }
        );
        assert_eq!("friendship".parse::<Family>().unwrap(), Family::Fan);
        assert!("grid".parse::<Family>().is_err());
    }

    #[test]
    fn mycielskian_flag_and_order() {
        let f = FamilyInstance::simple(Family::Path, 7).unwrap().with_mycielskian(true);
        assert_eq!(f.order(), 15);
        let g = f.build().unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 3 * 6 + 7);
    }
}
