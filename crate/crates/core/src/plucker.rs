//! Simplicity and orthogonal-relation tests with full residual reports.
//!
//! Two criteria are implemented for a p-form `F`:
//!
//! * the classical test: `F` is a wedge of one-forms iff
//!   `ι_Ξ F ∧ F = 0` for every (p−1)-polyvector `Ξ`;
//! * the orthogonal relation `[ι_Ξ F, F] = 0` for every (p−2)-polyvector
//!   `Ξ`, where the bracket is the infinitesimal rotation action of the
//!   2-form `ι_Ξ F`.
//!
//! Both conditions are linear in `Ξ`, so checking all basis blades of the
//! required degree is complete; the reports enumerate exactly those
//! blades.  [`coordinate_residual`] evaluates the index expression
//! `Σ_{k,ℓ} g^{kℓ} F_{k i₁…i_{p−2} [j₁} F_{j₂…j_p] ℓ}` independently of
//! the bracket machinery and must agree on vanishing; the
//! antisymmetrization is an unweighted signed permutation sum, so its
//! residual magnitudes are `p!`-scaled relative to the bracket residual.

use crate::blade::Blade;
use crate::error::{AlgebraError, Result};
use crate::form::Form;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResidualKind {
    Classical,
    Orthogonal,
}

/// Residuals of a simplicity or relation check, one entry per
/// contraction blade.
#[derive(Clone, Debug)]
pub struct ResidualReport<S: Scalar = crate::scalar::Rat> {
    pub kind: ResidualKind,
    /// `(Ξ, residual)` for every basis blade `Ξ` of the contraction
    /// degree (p−1 classical, p−2 orthogonal).
    pub entries: Vec<(Blade, Form<S>)>,
    pub is_zero: bool,
    /// Largest residual coefficient magnitude (0 when `is_zero`).
    pub max_abs_coeff: f64,
    /// Set when the space's signature is outside the euclidean/lorentzian
    /// hypothesis of the orthogonal relation (t ≥ 2).
    pub outside_hypothesis: bool,
}

impl<S: Scalar> ResidualReport<S> {
    fn from_entries(
        kind: ResidualKind,
        entries: Vec<(Blade, Form<S>)>,
        outside_hypothesis: bool,
    ) -> Self {
        let is_zero = entries.iter().all(|(_, f)| f.is_zero());
        let max_abs_coeff = entries
            .iter()
            .map(|(_, f)| f.max_abs_coeff())
            .fold(0.0, f64::max);
        ResidualReport {
            kind,
            entries,
            is_zero,
            max_abs_coeff,
            outside_hypothesis,
        }
    }

    /// The nonzero residual entries.
    pub fn violations(&self) -> impl Iterator<Item = &(Blade, Form<S>)> {
        self.entries.iter().filter(|(_, f)| !f.is_zero())
    }
}

/// Classical Plücker simplicity criterion: residuals `ι_Ξ F ∧ F` over
/// all basis (p−1)-blades; all zero iff `F` is simple (the zero form
/// counts as simple).
pub fn classical_plucker_check<S: Scalar>(f: &Form<S>) -> Result<ResidualReport<S>> {
    let p = f.degree();
    let d = f.space().dim();
    if p < 1 || p > d {
        return Err(AlgebraError::DegreeError(format!(
            "classical test needs 1 ≤ p ≤ d, got p={p}, d={d}"
        )));
    }
    let mut entries = Vec::new();
    for xi in Blade::enumerate(d, p - 1) {
        let residual = f.contract_blade(&xi).wedge(f)?;
        entries.push((xi, residual));
    }
    Ok(ResidualReport::from_entries(
        ResidualKind::Classical,
        entries,
        false,
    ))
}

/// Fast boolean version of the classical test (stops at the first
/// nonzero residual).
pub fn is_simple<S: Scalar>(f: &Form<S>) -> Result<bool> {
    let p = f.degree();
    let d = f.space().dim();
    if p < 1 || p > d {
        return Err(AlgebraError::DegreeError(format!(
            "classical test needs 1 ≤ p ≤ d, got p={p}, d={d}"
        )));
    }
    for xi in Blade::enumerate(d, p - 1) {
        if !f.contract_blade(&xi).wedge(f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orthogonal relation check: residuals `[ι_Ξ F, F]` over all basis
/// (p−2)-blades.  Signatures with t ≥ 2 are processed but flagged
/// `outside_hypothesis`.
pub fn orthogonal_relation_check<S: Scalar>(f: &Form<S>) -> Result<ResidualReport<S>> {
    let p = f.degree();
    let d = f.space().dim();
    if p < 2 {
        return Err(AlgebraError::DegreeError(format!(
            "orthogonal relation needs p ≥ 2, got p={p}"
        )));
    }
    let mut entries = Vec::new();
    for xi in Blade::enumerate(d, p - 2) {
        let omega = f.contract_blade(&xi);
        let residual = Form::so_action(&omega, f)?;
        entries.push((xi, residual));
    }
    Ok(ResidualReport::from_entries(
        ResidualKind::Orthogonal,
        entries,
        !f.space().within_hypothesis(),
    ))
}

/// Fast boolean version of the orthogonal relation (stops at the first
/// nonzero residual).
pub fn relation_holds<S: Scalar>(f: &Form<S>) -> Result<bool> {
    let p = f.degree();
    if p < 2 {
        return Err(AlgebraError::DegreeError(format!(
            "orthogonal relation needs p ≥ 2, got p={p}"
        )));
    }
    let d = f.space().dim();
    for xi in Blade::enumerate(d, p - 2) {
        let omega = f.contract_blade(&xi);
        if !Form::so_action(&omega, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinate-expression cross-check of the orthogonal relation.
///
/// For each (p−2)-blade `Ξ = (i₁…i_{p−2})` the residual is the p-form
/// with components (unweighted antisymmetrization over `j₁…j_p`)
/// `Σ_{π} sign(π) Σ_k g^{kk} F_{k i₁…i_{p−2} π(j₁)} F_{π(j₂)…π(j_p) k}`.
pub fn coordinate_residual<S: Scalar>(f: &Form<S>) -> Result<ResidualReport<S>> {
    let p = f.degree();
    let d = f.space().dim();
    if p < 2 {
        return Err(AlgebraError::DegreeError(format!(
            "orthogonal relation needs p ≥ 2, got p={p}"
        )));
    }
    let space = *f.space();

    // Component lookup with arbitrary index order.
    let component = |indices: &[usize]| -> S {
        match Blade::from_unsorted(indices) {
            None => S::zero(),
            Some((b, sign)) => {
                let c = f.coeff(&b);
                if sign < 0 {
                    S::zero() - c
                } else {
                    c
                }
            }
        }
    };

    let mut entries = Vec::new();
    for xi in Blade::enumerate(d, p - 2) {
        let xi_idx = xi.indices();
        let mut residual = Form::zero(space, p);
        for j_blade in Blade::enumerate(d, p) {
            let j = j_blade.indices();
            let mut acc = S::zero();
            for (perm, sign) in permutations_with_sign(&j) {
                // T = Σ_k g^kk F_{k, Ξ, π(j1)} · F_{π(j2..jp), k}
                let mut inner = S::zero();
                for k in 1..=d {
                    let mut first = vec![k];
                    first.extend_from_slice(&xi_idx);
                    first.push(perm[0]);
                    let a = component(&first);
                    if a.is_zero() {
                        continue;
                    }
                    let mut second = perm[1..].to_vec();
                    second.push(k);
                    let b = component(&second);
                    if b.is_zero() {
                        continue;
                    }
                    let mut v = a * b;
                    if space.sign(k) < 0 {
                        v = S::zero() - v;
                    }
                    inner = inner + v;
                }
                if sign < 0 {
                    inner = S::zero() - inner;
                }
                acc = acc + inner;
            }
            residual.add_term(j_blade, acc);
        }
        entries.push((xi, residual));
    }
    Ok(ResidualReport::from_entries(
        ResidualKind::Orthogonal,
        entries,
        !space.within_hypothesis(),
    ))
}

/// All permutations of `items` with their signs (Heap's algorithm).
fn permutations_with_sign(items: &[usize]) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    out.push((a.clone(), sign));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};
    use crate::space::MetricSpace;

    fn e(space: MetricSpace, idx: &[usize]) -> Form {
        Form::monomial(space, idx, rint(1)).unwrap()
    }

    #[test]
    fn classical_test_examples() {
        let s = MetricSpace::euclidean(4);
        assert!(classical_plucker_check(&e(s, &[1, 2, 3])).unwrap().is_zero);
        let f = e(s, &[1, 2]).plus(&e(s, &[3, 4])).unwrap();
        let rep = classical_plucker_check(&f).unwrap();
        assert!(!rep.is_zero);
        assert!(rep.max_abs_coeff > 0.0);
        // Factored form e12 ∧ (e3 + e4) is simple.
        let g = e(s, &[1, 2, 3]).plus(&e(s, &[1, 2, 4])).unwrap();
        assert!(classical_plucker_check(&g).unwrap().is_zero);
        assert!(is_simple(&g).unwrap());
        // Zero form counts as simple.
        assert!(classical_plucker_check(&Form::<Rat>::zero(s, 2))
            .unwrap()
            .is_zero);
    }

    #[test]
    fn orthogonal_relation_e6_so4_family() {
        // Template α e123 + β e145 + γ e236 + δ e456 passes iff αβ+γδ=0.
        let s = MetricSpace::euclidean(6);
        let blades = [[1, 2, 3], [1, 4, 5], [2, 3, 6], [4, 5, 6]];
        let build = |coeffs: [i64; 4]| {
            let mut f = Form::zero(s, 3);
            for (c, idx) in coeffs.iter().zip(&blades) {
                f = f
                    .plus(&Form::monomial(s, idx, rint(*c)).unwrap())
                    .unwrap();
            }
            f
        };
        // α=δ=1, β=γ=0: αβ+γδ=0.
        assert!(orthogonal_relation_check(&build([1, 0, 0, 1])).unwrap().is_zero);
        // α=β=γ=δ=1: αβ+γδ=2.
        assert!(!orthogonal_relation_check(&build([1, 1, 1, 1])).unwrap().is_zero);
        // α=β=γ=1, δ=−1: αβ+γδ=0.
        assert!(orthogonal_relation_check(&build([1, 1, 1, -1])).unwrap().is_zero);
        assert!(relation_holds(&build([1, 1, 1, -1])).unwrap());
        assert!(!relation_holds(&build([1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn coordinate_residual_agrees() {
        let s = MetricSpace::euclidean(6);
        let m = MetricSpace::lorentzian(6);
        for space in [s, m] {
            let blades = [[1, 2, 3], [1, 4, 5], [2, 3, 6], [4, 5, 6]];
            for coeffs in [[1i64, 0, 0, 1], [1, 1, 1, 1], [1, 1, 1, -1], [2, 3, -1, 6]] {
                let mut f = Form::zero(space, 3);
                for (c, idx) in coeffs.iter().zip(&blades) {
                    f = f
                        .plus(&Form::monomial(space, idx, rint(*c)).unwrap())
                        .unwrap();
                }
                let a = orthogonal_relation_check(&f).unwrap();
                let b = coordinate_residual(&f).unwrap();
                assert_eq!(a.is_zero, b.is_zero, "space {space:?} coeffs {coeffs:?}");
            }
        }
    }

    #[test]
    fn simple_forms_satisfy_relation_below_double_dimension() {
        let s = MetricSpace::euclidean(5);
        let f = e(s, &[1, 2, 3]);
        assert!(coordinate_residual(&f).unwrap().is_zero);
        assert!(orthogonal_relation_check(&f).unwrap().is_zero);
    }

    #[test]
    fn report_enumerates_all_blades() {
        let s = MetricSpace::euclidean(6);
        let f = e(s, &[1, 2, 3]);
        assert_eq!(classical_plucker_check(&f).unwrap().entries.len(), 15); // C(6,2)
        assert_eq!(orthogonal_relation_check(&f).unwrap().entries.len(), 6); // C(6,1)
    }

    #[test]
    fn outside_hypothesis_flagged() {
        let s = MetricSpace::new(4, 2).unwrap();
        let f = e(s, &[1, 2]).plus(&e(s, &[3, 4])).unwrap();
        let rep = orthogonal_relation_check(&f).unwrap();
        assert!(rep.outside_hypothesis);
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(&[1, 2, 3]);
        assert_eq!(perms.len(), 6);
        let total: i8 = perms.iter().map(|(_, s)| s).sum();
        assert_eq!(total, 0);
        assert_eq!(perms[0], (vec![1, 2, 3], 1));
    }
}
