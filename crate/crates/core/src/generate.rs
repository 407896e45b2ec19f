//! Reproducible instance families.
//!
//! Every generator is a pure function of `(family, n, chords, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_2_vertex_twinless_connected;
use crate::error::GenerateError;
use crate::graph::DirectedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Bidirected Hamiltonian cycle `0 <-> 1 <-> ... <-> n-1 <-> 0` plus
    /// random chords. 2-vertex-connected; without chords every vertex is a
    /// twinless articulation point.
    BidirectedCycle,
    /// Two edge-disjoint Hamiltonian cycles sharing no antiparallel pair,
    /// plus random chords. Always 2-vertex-twinless connected.
    TwinFreeDoubleCycle,
    /// One directed Hamiltonian cycle plus random chords; no guarantees.
    CyclePlusChords,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::BidirectedCycle,
        Family::TwinFreeDoubleCycle,
        Family::CyclePlusChords,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BidirectedCycle => "bidirected_cycle",
            Family::TwinFreeDoubleCycle => "twin_free_double_cycle",
            Family::CyclePlusChords => "cycle_plus_chords",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub chords: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, chords: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            chords,
            seed,
        }
    }

    pub fn generate(&self) -> Result<DirectedGraph, GenerateError> {
        match self.family {
            Family::BidirectedCycle => bidirected_cycle(self.n, self.chords, self.seed),
            Family::TwinFreeDoubleCycle => twin_free_double_cycle(self.n, self.chords, self.seed),
            Family::CyclePlusChords => cycle_plus_chords(self.n, self.chords, self.seed),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}:{}",
            self.family, self.n, self.chords, self.seed
        )
    }
}

/// Parses `family:n[:chords[:seed]]`; missing fields default to 0.
impl FromStr for GeneratorSpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let family: Family = parts.next().unwrap_or_default().parse()?;
        let mut number = |what: &str, required: bool| -> Result<u64, GenerateError> {
            match parts.next() {
                Some(p) => p.parse().map_err(|_| {
                    GenerateError::InfeasibleParameters(format!("invalid {what} `{p}` in `{s}`"))
                }),
                None if required => Err(GenerateError::InfeasibleParameters(format!(
                    "missing {what} in `{s}`"
                ))),
                None => Ok(0),
            }
        };
        let n = number("vertex count", true)? as usize;
        let chords = number("chord count", false)? as usize;
        let seed = number("seed", false)?;
        if parts.next().is_some() {
            return Err(GenerateError::InfeasibleParameters(format!(
                "too many fields in `{s}`"
            )));
        }
        Ok(Self::new(family, n, chords, seed))
    }
}

fn require_n(n: usize, min: usize, family: Family) -> Result<(), GenerateError> {
    if n < min {
        Err(GenerateError::InfeasibleParameters(format!(
            "{family} needs n >= {min}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Adds `count` distinct random pairs that are not yet edges.
fn add_chords(
    n: usize,
    mut pairs: Vec<(usize, usize)>,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<DirectedGraph, GenerateError> {
    let base = DirectedGraph::from_edge_list(n, &pairs)?;
    if count == 0 {
        return Ok(base);
    }
    let absent: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|&(u, v)| !base.has_pair(u.into(), v.into()))
        .collect();
    if count > absent.len() {
        return Err(GenerateError::InfeasibleParameters(format!(
            "only {} chords fit, {count} requested",
            absent.len()
        )));
    }
    pairs.extend(
        sample(rng, absent.len(), count)
            .into_iter()
            .map(|i| absent[i]),
    );
    Ok(DirectedGraph::from_edge_list(n, &pairs)?)
}

pub fn bidirected_cycle(
    n: usize,
    chords: usize,
    seed: u64,
) -> Result<DirectedGraph, GenerateError> {
    require_n(n, 3, Family::BidirectedCycle)?;
    let pairs = (0..n)
        .flat_map(|i| {
            let j = (i + 1) % n;
            [(i, j), (j, i)]
        })
        .collect();
    add_chords(n, pairs, chords, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn cycle_plus_chords(
    n: usize,
    chords: usize,
    seed: u64,
) -> Result<DirectedGraph, GenerateError> {
    require_n(n, 3, Family::CyclePlusChords)?;
    let pairs = (0..n).map(|i| (i, (i + 1) % n)).collect();
    add_chords(n, pairs, chords, &mut ChaCha8Rng::seed_from_u64(seed))
}

const DOUBLE_CYCLE_ATTEMPTS: usize = 100_000;

/// The first cycle is `0 -> 1 -> ... -> n-1 -> 0`; the second is a random
/// Hamiltonian cycle avoiding every first-cycle pair in both directions.
/// Candidates are redrawn until the union is 2-vertex-twinless connected.
pub fn twin_free_double_cycle(
    n: usize,
    chords: usize,
    seed: u64,
) -> Result<DirectedGraph, GenerateError> {
    // For n <= 4 every second cycle would reuse or reverse a first-cycle pair.
    require_n(n, 5, Family::TwinFreeDoubleCycle)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let adjacent_in_first = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..DOUBLE_CYCLE_ATTEMPTS {
        order[1..].shuffle(&mut rng);
        let conflict = (0..n).any(|i| adjacent_in_first(order[i], order[(i + 1) % n]));
        if conflict {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .map(|i| (i, (i + 1) % n))
            .chain((0..n).map(|i| (order[i], order[(i + 1) % n])))
            .collect();
        let g = DirectedGraph::from_edge_list(n, &pairs)?;
        if !is_2_vertex_twinless_connected(&g) {
            continue;
        }
        // Chords only add edges, which preserves 2-vertex-twinless connectivity.
        return add_chords(n, pairs, chords, &mut rng);
    }
    Err(GenerateError::InfeasibleParameters(format!(
        "no twin-free double cycle found for n = {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{is_2_vertex_connected, twinless_articulation_points};
    use crate::graph::VertexId;

    #[test]
    fn spec_strings() {
        let s: GeneratorSpec = "twin_free_double_cycle:6:2:9".parse().unwrap();
        assert_eq!(s, GeneratorSpec::new(Family::TwinFreeDoubleCycle, 6, 2, 9));
        assert_eq!(s.to_string(), "twin_free_double_cycle:6:2:9");
        let s: GeneratorSpec = "bidirected_cycle:7".parse().unwrap();
        assert_eq!(s, GeneratorSpec::new(Family::BidirectedCycle, 7, 0, 0));
        assert!("nope:3".parse::<GeneratorSpec>().is_err());
        assert!("bidirected_cycle".parse::<GeneratorSpec>().is_err());
        assert!("bidirected_cycle:x".parse::<GeneratorSpec>().is_err());
        assert!("bidirected_cycle:3:0:0:1".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn bidirected_cycle_every_vertex_is_a_tap() {
        let g = bidirected_cycle(7, 0, 0).unwrap();
        assert_eq!(g.m(), 14);
        assert!(is_2_vertex_connected(&g));
        assert_eq!(twinless_articulation_points(&g).unwrap().len(), 7);
        let tri = bidirected_cycle(3, 0, 0).unwrap();
        assert_eq!(tri.m(), 6);
        assert!(is_2_vertex_connected(&tri));
        assert!(!is_2_vertex_twinless_connected(&tri));
    }

    #[test]
    fn double_cycle_is_twin_free_and_2vtc() {
        for seed in 0..20 {
            for n in [5, 6, 9] {
                let g = twin_free_double_cycle(n, 0, seed).unwrap();
                assert_eq!(g.m(), 2 * n);
                assert!(g.edges().iter().all(|&(u, v)| !g.has_pair(v, u)));
                assert!(is_2_vertex_twinless_connected(&g));
            }
        }
        assert!(matches!(
            twin_free_double_cycle(4, 0, 0),
            Err(GenerateError::InfeasibleParameters(_))
        ));
    }

    #[test]
    fn chords_are_reproducible() {
        let a = cycle_plus_chords(10, 12, 5).unwrap();
        let b = cycle_plus_chords(10, 12, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.m(), 22);
        let c = cycle_plus_chords(10, 12, 6).unwrap();
        assert_ne!(a, c);
        assert!(a.has_pair(VertexId::new(9), VertexId::new(0)));
    }

    #[test]
    fn too_many_chords() {
        // 3 vertices have 6 ordered pairs, the cycle uses 3.
        assert!(cycle_plus_chords(3, 3, 0).is_ok());
        assert!(cycle_plus_chords(3, 4, 0).is_err());
    }
}
