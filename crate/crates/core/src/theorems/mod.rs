//! Evaluates the cycle and pair sums of a K6 or K7 embedding once and checks
//! the integral identities and census claims against them.

mod census;
mod report;
mod search;
mod verify;

pub use census::{census_k6, census_k7, CensusReport, K6Case};
pub use report::{
    embedding_id, invariant_report, report_for_projection, InvariantReport, KnotEntry, LinkEntry,
};
pub use search::{search_minimal_k7, SearchHit, SEARCH_SPAN};
pub use verify::{
    combination_check, oracle_check, verify_d4_alpha, verify_embedding, verify_fm_bounds,
    verify_lemma_k7, verify_main1, verify_main2, verify_main3, verify_parity, verify_simon_alpha,
    verify_simon_lemma, Bound, BoundReport, IdentityReport, OracleReport, Verification,
};

#[cfg(feature = "parallel")]
pub(crate) fn try_map<T, U, F>(items: &[T], f: F) -> crate::Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> crate::Result<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map<T, U, F>(items: &[T], f: F) -> crate::Result<Vec<U>>
where
    F: Fn(&T) -> crate::Result<U>,
{
    items.iter().map(f).collect()
}
