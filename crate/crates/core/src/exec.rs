//! Execution strategy for the exponential searches.
//!
//! With the `parallel` feature the searches fan out over rayon's global
//! pool; without it, or with [`Strategy::Sequential`], they run on the
//! calling thread. Both paths return identical results: order-sensitive
//! searches always report the earliest hit in enumeration order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Size guards for the searches that are exponential in attribute count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Subset enumeration: fd projection, BCNF and 3NF checks.
    pub subsets: usize,
    /// Key enumeration and primality.
    pub keys: usize,
    /// Universe size for the two-row implication oracle.
    pub oracle: usize,
    /// Ground-set size for the exhaustive hitting-set solver.
    pub hitting_set: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subsets: 20,
            keys: 16,
            oracle: 12,
            hitting_set: 20,
        }
    }
}

impl Limits {
    /// Same bound everywhere.
    pub fn uniform(limit: usize) -> Self {
        Limits {
            subsets: limit,
            keys: limit,
            oracle: limit,
            hitting_set: limit,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub strategy: Strategy,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            strategy: Strategy::Sequential,
            ..Config::default()
        }
    }

    pub fn with_limits(limits: Limits) -> Self {
        Config {
            limits,
            ..Config::default()
        }
    }
}

pub(crate) fn check_limit(what: &'static str, size: usize, limit: usize) -> crate::Result<()> {
    if size > limit {
        Err(crate::Error::LimitExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

impl Strategy {
    #[cfg(feature = "parallel")]
    fn parallel(self) -> bool {
        self == Strategy::Parallel
    }

    /// `filter_map` over `items`, preserving order.
    pub(crate) fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return items.par_iter().filter_map(f).collect();
        }
        items.iter().filter_map(f).collect()
    }

    /// `filter_map` over `0..count`, preserving order.
    pub(crate) fn filter_map_range<R, F>(self, count: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return (0..count).into_par_iter().filter_map(f).collect();
        }
        (0..count).filter_map(f).collect()
    }

    /// Least (by `cmp`) of the `Some` results of `f` over `0..count`.
    pub(crate) fn filter_min_range<R, F, C>(self, count: u64, f: F, cmp: C) -> Option<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
        C: Fn(&R, &R) -> std::cmp::Ordering + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return (0..count).into_par_iter().filter_map(f).min_by(cmp);
        }
        (0..count).filter_map(f).min_by(cmp)
    }

    /// First index in `0..count` for which `f` returns `Some`.
    pub(crate) fn find_map_first_range<R, F>(self, count: u64, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return (0..count).into_par_iter().find_map_first(f);
        }
        (0..count).find_map(f)
    }
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted index sequences.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<u64> {
    debug_assert!(n < 64);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
