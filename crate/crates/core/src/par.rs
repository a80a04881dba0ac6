//! Sequential or rayon-backed execution of independent work items.
//!
//! Both modes produce identical results: mapped outputs keep index order and
//! `find_map_first` returns the lowest-index hit. Without the `parallel`
//! feature `Exec::Parallel` runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    pub fn find_map_first<T, F>(self, range: std::ops::RangeInclusive<usize>, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().find_map_first(f);
        }
        range.into_iter().find_map(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |i: usize| (i * 7919) % 101;
        assert_eq!(Exec::Sequential.map(0..500, f), Exec::Parallel.map(0..500, f));
        let g = |i: usize| (i % 37 == 36).then_some(i);
        assert_eq!(Exec::Sequential.find_map_first(0..=500, g), Some(36));
        assert_eq!(Exec::Parallel.find_map_first(0..=500, g), Some(36));
        assert_eq!(Exec::Parallel.find_map_first(std::ops::RangeInclusive::new(5, 4), g), None);
    }
}
