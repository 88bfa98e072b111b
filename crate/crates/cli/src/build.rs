use bridgeguts::two_bridge::enumerate_canonical;
use bridgeguts::InvariantRecord;
use rayon::prelude::*;

use crate::Result;

/// Same output as [`bridgeguts::build_catalog`], computed on `jobs` worker
/// threads (`None` for the rayon default).
pub fn build_catalog_parallel(q_max: u64, jobs: Option<usize>) -> Result<Vec<InvariantRecord>> {
    let knots = enumerate_canonical(q_max);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    let mut records = pool.install(|| {
        knots
            .par_iter()
            .map(InvariantRecord::compute)
            .collect::<bridgeguts::Result<Vec<_>>>()
    })?;
    records.sort_by_key(|r| r.knot);
    Ok(records)
}
