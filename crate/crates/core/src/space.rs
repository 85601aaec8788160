//! Metric vector spaces with orthonormal diagonal metrics.

use crate::error::{AlgebraError, Result};

/// A `d`-dimensional real vector space with a diagonal metric whose first
/// `time_dims` basis directions are timelike (−1) and the rest spacelike
/// (+1).  Indices are 1-based `1..=d`; in lorentzian signature index 1 is
/// the timelike direction (often written `e_0` elsewhere).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct MetricSpace {
    dim: usize,
    time_dims: usize,
}

impl MetricSpace {
    /// At most 16 dimensions: blades are stored as `u16` bitmasks.
    pub const MAX_DIM: usize = 16;

    pub fn new(dim: usize, time_dims: usize) -> Result<Self> {
        if dim == 0 || dim > Self::MAX_DIM {
            return Err(AlgebraError::Unsupported(format!(
                "dimension {dim} outside 1..={}",
                Self::MAX_DIM
            )));
        }
        if time_dims > dim {
            return Err(AlgebraError::Unsupported(format!(
                "time_dims {time_dims} exceeds dimension {dim}"
            )));
        }
        Ok(MetricSpace { dim, time_dims })
    }

    pub fn euclidean(dim: usize) -> Self {
        Self::new(dim, 0).expect("valid euclidean space")
    }

    pub fn lorentzian(dim: usize) -> Self {
        Self::new(dim, 1).expect("valid lorentzian space")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn time_dims(&self) -> usize {
        self.time_dims
    }

    /// Metric sign of basis direction `i` (1-based): −1 timelike, +1
    /// spacelike.
    pub fn sign(&self, i: usize) -> i8 {
        debug_assert!(i >= 1 && i <= self.dim);
        if i <= self.time_dims {
            -1
        } else {
            1
        }
    }

    /// The diagonal of the metric as a vector of ±1.
    pub fn metric_diag(&self) -> Vec<i8> {
        (1..=self.dim).map(|i| self.sign(i)).collect()
    }

    /// True for signatures covered by the orthogonal-relation hypothesis
    /// (euclidean or lorentzian).  Higher signatures are constructible but
    /// reports flag them.
    pub fn within_hypothesis(&self) -> bool {
        self.time_dims <= 1
    }

    pub fn same_space(&self, other: &MetricSpace, what: &str) -> Result<()> {
        if self != other {
            return Err(AlgebraError::SpaceMismatch(format!(
                "{what}: ({},{}) vs ({},{})",
                self.dim, self.time_dims, other.dim, other.time_dims
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_diagonal_signs() {
        let e = MetricSpace::euclidean(4);
        assert_eq!(e.metric_diag(), vec![1, 1, 1, 1]);
        let m = MetricSpace::lorentzian(4);
        assert_eq!(m.metric_diag(), vec![-1, 1, 1, 1]);
        assert!(m.within_hypothesis());
        let s = MetricSpace::new(4, 2).unwrap();
        assert!(!s.within_hypothesis());
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(MetricSpace::new(0, 0).is_err());
        assert!(MetricSpace::new(17, 0).is_err());
        assert!(MetricSpace::new(3, 4).is_err());
    }
}
