//! Basis monomials of the exterior algebra.
//!
//! A blade `e_{i1} ∧ … ∧ e_{ip}` with strictly increasing 1-based indices
//! is stored as a bitmask (bit `i-1` set for index `i`), which keeps sign
//! bookkeeping to popcounts and works for dimensions up to 16.

/// A basis monomial with strictly increasing indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Blade(u16);

impl Blade {
    /// The empty blade (degree 0, the scalar unit).
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Self {
        Blade(mask)
    }

    pub fn mask(&self) -> u16 {
        self.0
    }

    /// Build from strictly increasing 1-based indices.
    /// Returns `None` if indices are out of order, duplicated, or zero.
    pub fn from_sorted(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u16;
        let mut prev = 0usize;
        for &i in indices {
            if i <= prev || i > 16 {
                return None;
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Some(Blade(mask))
    }

    /// Build from indices in arbitrary order, returning the canonical
    /// blade and the sign of the sorting permutation.  `None` on a
    /// repeated index (the monomial is zero).
    pub fn from_unsorted(indices: &[usize]) -> Option<(Self, i8)> {
        let mut mask = 0u16;
        let mut sign = 1i8;
        for (pos, &i) in indices.iter().enumerate() {
            if i < 1 || i > 16 {
                return None;
            }
            let bit = 1u16 << (i - 1);
            if mask & bit != 0 {
                return None;
            }
            // Count earlier inserted indices larger than i: each is a
            // transposition when moving e_i into sorted position.
            let larger = indices[..pos].iter().filter(|&&j| j > i).count();
            if larger % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        Some((Blade(mask), sign))
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0 & (1 << (index - 1)) != 0
    }

    /// The increasing index list.
    pub fn indices(&self) -> Vec<usize> {
        (1..=16).filter(|&i| self.contains(i)).collect()
    }

    /// Sign of `e_A ∧ e_B` relative to the canonical blade on `A ∪ B`,
    /// or `None` if the index sets overlap.
    pub fn wedge_sign(&self, other: &Blade) -> Option<(Blade, i8)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // For each index b of `other`, moving e_b left past the elements
        // of `self` greater than b contributes one transposition each.
        let mut sign = 1i8;
        for b in other.indices() {
            let above = (self.0 >> b).count_ones();
            if above % 2 == 1 {
                sign = -sign;
            }
        }
        Some((Blade(self.0 | other.0), sign))
    }

    /// Remove index `i`: `ι_{e_i} e_B = sign · e_{B∖i}`, where the sign
    /// counts the indices of `B` below `i`.  `None` if `i ∉ B`.
    pub fn contract_index(&self, i: usize) -> Option<(Blade, i8)> {
        let bit = 1u16 << (i - 1);
        if self.0 & bit == 0 {
            return None;
        }
        let below = (self.0 & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((Blade(self.0 & !bit), sign))
    }

    /// Complement within dimension `d`.
    pub fn complement(&self, d: usize) -> Blade {
        let full = if d == 16 { u16::MAX } else { (1u16 << d) - 1 };
        Blade(full & !self.0)
    }

    /// All blades of the given degree in dimension `d`, in increasing
    /// mask order (lexicographic-compatible and deterministic).
    pub fn enumerate(d: usize, degree: usize) -> Vec<Blade> {
        let mut out = Vec::new();
        let full: u32 = 1 << d;
        for mask in 0..full {
            if (mask as u16).count_ones() as usize == degree {
                out.push(Blade(mask as u16));
            }
        }
        out
    }

    /// Short display such as `e123` (indices ≥ 10 separated by dots).
    pub fn label(&self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i <= 9) {
            format!(
                "e{}",
                idx.iter().map(|i| i.to_string()).collect::<String>()
            )
        } else {
            format!(
                "e[{}]",
                idx.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_sorting_signs() {
        let b = Blade::from_sorted(&[1, 3, 4]).unwrap();
        assert_eq!(b.indices(), vec![1, 3, 4]);
        assert_eq!(b.degree(), 3);
        assert!(Blade::from_sorted(&[3, 1]).is_none());
        let (c, s) = Blade::from_unsorted(&[3, 1, 4]).unwrap();
        assert_eq!(c, b);
        assert_eq!(s, -1); // one transposition sorts (3,1,4)
        assert!(Blade::from_unsorted(&[1, 1]).is_none());
    }

    #[test]
    fn wedge_signs() {
        let a = Blade::from_sorted(&[1, 3]).unwrap();
        let b = Blade::from_sorted(&[2, 4]).unwrap();
        // e1 ∧ e3 ∧ e2 ∧ e4 = −e1234.
        assert_eq!(
            a.wedge_sign(&b),
            Some((Blade::from_sorted(&[1, 2, 3, 4]).unwrap(), -1))
        );
        assert!(a.wedge_sign(&a).is_none());
    }

    #[test]
    fn contraction_signs() {
        let b = Blade::from_sorted(&[1, 2, 3]).unwrap();
        let (r, s) = b.contract_index(2).unwrap();
        assert_eq!(r, Blade::from_sorted(&[1, 3]).unwrap());
        assert_eq!(s, -1);
        assert!(b.contract_index(4).is_none());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Blade::enumerate(6, 3).len(), 20);
        assert_eq!(Blade::enumerate(10, 5).len(), 252);
        assert_eq!(Blade::enumerate(4, 0), vec![Blade::SCALAR]);
    }
}
