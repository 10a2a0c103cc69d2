use crate::diagram::diagram_for_cycle;
use crate::error::{arg, Result};
use crate::geometry::{project, random_generic_direction, random_rectilinear, SpatialEmbedding};
use crate::graph::{complete_graph, cycles_of_length};
use crate::invariants::conway_a2;

/// Default lattice span for the K7 search.
pub const SEARCH_SPAN: i64 = 30;

/// A K7 embedding whose 7-cycles have a₂ summing to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub embedding: SpatialEmbedding,
    /// Trial index, counted from 0.
    pub trial: u64,
    /// Seed that regenerates `embedding` with `random_rectilinear(7, seed, span)`.
    pub seed: u64,
}

fn sum_a2_gamma7(e: &SpatialEmbedding) -> Result<i64> {
    let proj = project(e, &random_generic_direction(e, 0)?)?;
    let g = complete_graph(7)?;
    let mut s = 0;
    for c in cycles_of_length(&g, 7) {
        s += conway_a2(&diagram_for_cycle(&proj, &c)?)?;
    }
    Ok(s)
}

fn trial(seed: u64, t: u64, span: i64) -> Option<Result<SearchHit>> {
    let s = seed.wrapping_add(t);
    let run = || -> Result<Option<SearchHit>> {
        let e = random_rectilinear(7, s, span)?;
        Ok((sum_a2_gamma7(&e)? == 1).then_some(SearchHit {
            embedding: e,
            trial: t,
            seed: s,
        }))
    };
    run().transpose()
}

/// Tries `random_rectilinear(7, seed + t, span)` for `t` in `0..budget` and
/// returns the first embedding with Σ_{Γ7} a₂ = 1. The answer depends only
/// on the arguments, however many threads run the trials.
pub fn search_minimal_k7(seed: u64, budget: u64, span: i64) -> Result<Option<SearchHit>> {
    if budget == 0 {
        return arg("search budget must be at least 1");
    }
    #[cfg(feature = "parallel")]
    let found = {
        use rayon::prelude::*;
        (0..budget)
            .into_par_iter()
            .find_map_first(|t| trial(seed, t, span))
    };
    #[cfg(not(feature = "parallel"))]
    let found = (0..budget).find_map(|t| trial(seed, t, span));
    found.transpose()
}
