//! Trial scheduling. Results always come back in trial order.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Uses rayon when the `parallel` feature is on, and runs sequentially
    /// otherwise.
    #[default]
    Parallel,
}

impl FromStr for ExecMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sequential" | "seq" => Ok(ExecMode::Sequential),
            "parallel" | "par" => Ok(ExecMode::Parallel),
            _ => Err(Error::Parse(format!("unknown execution mode `{s}`"))),
        }
    }
}

impl fmt::Display for ExecMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExecMode::Sequential => "sequential",
            ExecMode::Parallel => "parallel",
        })
    }
}

/// Generator for one trial: the job seed picks the key, the trial index
/// picks the stream, so trials are independent of scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn map_trials<T, F>(mode: ExecMode, count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        _ => (0..count).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn modes_agree() {
        let draw = |t| trial_rng(42, t).gen::<u64>();
        assert_eq!(
            map_trials(ExecMode::Sequential, 300, draw),
            map_trials(ExecMode::Parallel, 300, draw)
        );
        assert!(map_trials(ExecMode::Parallel, 0, draw).is_empty());
    }

    #[test]
    fn streams_differ() {
        assert_ne!(trial_rng(1, 0).gen::<u64>(), trial_rng(1, 1).gen::<u64>());
        assert_eq!("seq".parse::<ExecMode>().unwrap(), ExecMode::Sequential);
        assert!("fast".parse::<ExecMode>().is_err());
    }
}
