//! Multi-threaded evaluation of the certification grid.

use muarr_core::{chunk_minimum, reduce_minima, CertificationGrid, GridMinimum, GridSpec};
use rayon::prelude::*;

use crate::error::CliError;

/// Rows per work item. Chunk minima are merged in row order, so the result does not
/// depend on the thread count.
pub const ROWS_PER_CHUNK: usize = 16;

pub fn certify_parallel(spec: &GridSpec, threads: usize) -> Result<CertificationGrid, CliError> {
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))?;
    let minima: Vec<GridMinimum> = pool.install(|| {
        spec.chunks(ROWS_PER_CHUNK).into_par_iter().map(|rows| chunk_minimum(spec, rows)).collect::<Result<_, _>>()
    })?;
    let min = reduce_minima(minima).expect("grid has at least two rows");
    Ok(CertificationGrid::from_minimum(spec, min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use muarr_core::certify_h_positive;

    #[test]
    fn matches_the_sequential_driver() {
        let spec = GridSpec::new(301, 257).unwrap();
        let seq = certify_h_positive(&spec).unwrap();
        for threads in [1, 3, 8] {
            assert_eq!(certify_parallel(&spec, threads).unwrap(), seq);
        }
        assert!(certify_parallel(&spec, 0).is_err());
    }
}
