//! Order preserving data parallel map with a sequential fallback.

/// How a batch of independent jobs is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// rayon work stealing when the `parallel` feature is on
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// Whether this build can run jobs in parallel at all.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `f` over `items`; the output is in input order either way.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let xs: Vec<u64> = (0..500).collect();
        let f = |x: &u64| x * x + 1;
        let a = Exec::Parallel.map(&xs, f);
        let b = Exec::Sequential.map(&xs, f);
        assert_eq!(a, b);
        assert_eq!(a[17], 17 * 17 + 1);
    }
}
