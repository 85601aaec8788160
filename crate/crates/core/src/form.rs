//! Sparse alternating tensors over a metric space.
//!
//! A [`Form`] is a degree-`p` alternating tensor stored as a sparse map
//! from basis blades to exact scalars.  [`Polyvector`] shares the same
//! representation; the contravariant role is recorded by usage, not by
//! the type.  Contraction pairs a polyvector against the leading slots of
//! a form and involves no metric; the metric enters through the musical
//! isomorphisms, the form inner product, the Hodge dual, and the
//! infinitesimal-rotation action [`so_action`].

use crate::blade::Blade;
use crate::error::{AlgebraError, Result};
use crate::linalg;
use crate::scalar::{Rat, Scalar};
use crate::space::MetricSpace;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Form<S: Scalar = Rat> {
    space: MetricSpace,
    degree: usize,
    terms: BTreeMap<Blade, S>,
}

/// Contravariant alias of [`Form`].
pub type Polyvector<S = Rat> = Form<S>;

/// A subspace given by an echelonized basis of coordinate vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct Plane<S: Scalar = Rat> {
    pub space: MetricSpace,
    /// Linearly independent vectors (length-`d` coordinate lists), in
    /// reduced row echelon form.
    pub basis: Vec<Vec<S>>,
}

impl<S: Scalar> Plane<S> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn from_rows(space: MetricSpace, rows: &[Vec<S>]) -> Self {
        Plane {
            space,
            basis: linalg::rref(rows),
        }
    }

    pub fn contains(&self, v: &[S]) -> bool {
        linalg::in_span(&self.basis, v)
    }
}

impl<S: Scalar> Form<S> {
    pub fn zero(space: MetricSpace, degree: usize) -> Self {
        Form {
            space,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis blade with coefficient one.
    pub fn basis_blade(space: MetricSpace, blade: Blade) -> Self {
        let mut f = Form::zero(space, blade.degree());
        f.terms.insert(blade, S::one());
        f
    }

    /// `coeff · e_{indices}` with indices in arbitrary order; a repeated
    /// index yields the zero form.
    pub fn monomial(space: MetricSpace, indices: &[usize], coeff: S) -> Result<Self> {
        if indices.iter().any(|&i| i < 1 || i > space.dim()) {
            return Err(AlgebraError::DegreeError(format!(
                "index out of range 1..={} in {indices:?}",
                space.dim()
            )));
        }
        let mut f = Form::zero(space, indices.len());
        match Blade::from_unsorted(indices) {
            Some((b, sign)) => {
                let c = if sign < 0 { S::zero() - coeff } else { coeff };
                f.add_term(b, c);
                Ok(f)
            }
            None => Ok(f),
        }
    }

    /// The basis one-form `e_i`.
    pub fn basis_one_form(space: MetricSpace, i: usize) -> Self {
        Form::basis_blade(space, Blade::from_sorted(&[i]).expect("valid index"))
    }

    /// One-form with the given coordinates.
    pub fn from_covector(space: MetricSpace, coords: &[S]) -> Self {
        let mut f = Form::zero(space, 1);
        for (i, c) in coords.iter().enumerate() {
            f.add_term(Blade::from_sorted(&[i + 1]).unwrap(), c.clone());
        }
        f
    }

    /// Coordinates of a one-form.
    pub fn covector_coords(&self) -> Vec<S> {
        debug_assert_eq!(self.degree, 1);
        (1..=self.space.dim())
            .map(|i| self.coeff(&Blade::from_sorted(&[i]).unwrap()))
            .collect()
    }

    /// The volume form `e_{1…d}` (orientation convention of the crate).
    pub fn volume(space: MetricSpace) -> Self {
        let all: Vec<usize> = (1..=space.dim()).collect();
        Form::basis_blade(space, Blade::from_sorted(&all).unwrap())
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &Blade) -> S {
        self.terms.get(b).cloned().unwrap_or_else(S::zero)
    }

    /// Largest coefficient magnitude (0 for the zero form); float, for
    /// reporting only.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs_f64())
            .fold(0.0, f64::max)
    }

    /// Add `coeff` to the blade's entry, dropping exact zeros.
    pub fn add_term(&mut self, blade: Blade, coeff: S) {
        debug_assert_eq!(blade.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            None => {
                self.terms.insert(blade, coeff);
            }
            Some(old) => {
                let s = old + coeff;
                if !s.is_zero() {
                    self.terms.insert(blade, s);
                }
            }
        }
    }

    pub fn plus(&self, other: &Form<S>) -> Result<Form<S>> {
        self.space.same_space(&other.space, "plus")?;
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeError(format!(
                "cannot add degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Form<S>) -> Result<Form<S>> {
        self.plus(&other.negate())
    }

    pub fn negate(&self) -> Form<S> {
        let mut out = Form::zero(self.space, self.degree);
        for (b, c) in self.terms() {
            out.terms.insert(*b, S::zero() - c.clone());
        }
        out
    }

    pub fn scaled(&self, s: &S) -> Form<S> {
        let mut out = Form::zero(self.space, self.degree);
        if s.is_zero() {
            return out;
        }
        for (b, c) in self.terms() {
            let v = c.clone() * s.clone();
            if !v.is_zero() {
                out.terms.insert(*b, v);
            }
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Form<S>) -> Result<Form<S>> {
        self.space.same_space(&other.space, "wedge")?;
        let degree = self.degree + other.degree;
        let mut out = Form::zero(self.space, degree);
        if degree > self.space.dim() {
            return Ok(out);
        }
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((c, sign)) = a.wedge_sign(b) {
                    let mut v = ca.clone() * cb.clone();
                    if sign < 0 {
                        v = S::zero() - v;
                    }
                    out.add_term(c, v);
                }
            }
        }
        Ok(out)
    }

    /// Contraction by a single basis direction, `ι_{e_i}`.
    pub fn contract_basis(&self, i: usize) -> Form<S> {
        let mut out = Form::zero(self.space, self.degree.saturating_sub(1));
        for (b, c) in self.terms() {
            if let Some((r, sign)) = b.contract_index(i) {
                let v = if sign < 0 {
                    S::zero() - c.clone()
                } else {
                    c.clone()
                };
                out.add_term(r, v);
            }
        }
        out
    }

    /// Contraction by a coordinate vector (no metric).
    pub fn contract_vector(&self, x: &[S]) -> Form<S> {
        let mut out = Form::zero(self.space, self.degree.saturating_sub(1));
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (b, c) in self.terms() {
                if let Some((r, sign)) = b.contract_index(i + 1) {
                    let mut v = c.clone() * xi.clone();
                    if sign < 0 {
                        v = S::zero() - v;
                    }
                    out.add_term(r, v);
                }
            }
        }
        out
    }

    /// Contraction by a blade polyvector: for `Ξ = e_{i1} ∧ … ∧ e_{ik}`
    /// (increasing), `ι_Ξ = ι_{e_{ik}} ∘ … ∘ ι_{e_{i1}}`, i.e. the lowest
    /// index is fed to the first slot.  Calibration:
    /// `ι_{e1∧e2} e_{1234} = e_{34}`.
    pub fn contract_blade(&self, xi: &Blade) -> Form<S> {
        let mut out = self.clone();
        for i in xi.indices() {
            out = out.contract_basis(i);
        }
        out
    }

    /// Bilinear contraction by a polyvector.
    pub fn contract(&self, xi: &Polyvector<S>) -> Result<Form<S>> {
        self.space.same_space(&xi.space, "contract")?;
        if xi.degree > self.degree {
            return Err(AlgebraError::DegreeError(format!(
                "contraction degree {} exceeds form degree {}",
                xi.degree, self.degree
            )));
        }
        let mut out = Form::zero(self.space, self.degree - xi.degree);
        for (b, c) in xi.terms() {
            out = out.plus(&self.contract_blade(b).scaled(c))?;
        }
        Ok(out)
    }

    /// Musical isomorphism on a one-form: raise the index with the
    /// inverse metric (componentwise sign flip on timelike directions).
    pub fn sharp(&self) -> Result<Vec<S>> {
        if self.degree != 1 {
            return Err(AlgebraError::DegreeError(format!(
                "sharp expects a one-form, got degree {}",
                self.degree
            )));
        }
        let mut v = self.covector_coords();
        for (i, x) in v.iter_mut().enumerate() {
            if self.space.sign(i + 1) < 0 {
                *x = S::zero() - x.clone();
            }
        }
        Ok(v)
    }

    /// Musical isomorphism on a vector: lower the index.
    pub fn flat(space: MetricSpace, x: &[S]) -> Form<S> {
        let coords: Vec<S> = x
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if space.sign(i + 1) < 0 {
                    S::zero() - c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        Form::from_covector(space, &coords)
    }

    /// Induced inner product on `Λ^p`: on blades,
    /// `⟨e_I, e_J⟩ = δ_IJ · ∏_{i∈I} g_ii`.
    pub fn form_inner(&self, other: &Form<S>) -> Result<S> {
        self.space.same_space(&other.space, "form_inner")?;
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeError(format!(
                "inner product needs equal degrees, got {} and {}",
                self.degree, other.degree
            )));
        }
        let mut acc = S::zero();
        for (b, c) in self.terms() {
            if let Some(d) = other.terms.get(b) {
                let mut v = c.clone() * d.clone();
                let neg = b
                    .indices()
                    .iter()
                    .filter(|&&i| self.space.sign(i) < 0)
                    .count();
                if neg % 2 == 1 {
                    v = S::zero() - v;
                }
                acc = acc + v;
            }
        }
        Ok(acc)
    }

    /// Hodge dual, defined by `α ∧ ★β = ⟨α,β⟩ · vol` with the
    /// increasing-index volume form as orientation.
    pub fn hodge(&self) -> Form<S> {
        let d = self.space.dim();
        let mut out = Form::zero(self.space, d - self.degree);
        for (b, c) in self.terms() {
            let comp = b.complement(d);
            let (_, wsign) = b.wedge_sign(&comp).expect("disjoint complement");
            let neg = b
                .indices()
                .iter()
                .filter(|&&i| self.space.sign(i) < 0)
                .count();
            let mut sign = wsign;
            if neg % 2 == 1 {
                sign = -sign;
            }
            let v = if sign < 0 {
                S::zero() - c.clone()
            } else {
                c.clone()
            };
            out.add_term(comp, v);
        }
        out
    }

    /// Infinitesimal rotation action of a 2-form on a form:
    /// `[α∧β, Ω] = α ∧ ι_{β♯} Ω − β ∧ ι_{α♯} Ω`, extended bilinearly.
    pub fn so_action(omega: &Form<S>, target: &Form<S>) -> Result<Form<S>> {
        omega.space.same_space(&target.space, "so_action")?;
        if omega.degree != 2 {
            return Err(AlgebraError::DegreeError(format!(
                "so_action generator must have degree 2, got {}",
                omega.degree
            )));
        }
        let space = target.space;
        let mut out = Form::zero(space, target.degree);
        for (w, c) in omega.terms() {
            let idx = w.indices();
            let (a, b) = (idx[0], idx[1]);
            // ω term c·e_a∧e_b:  c·( g_bb e_a ∧ ι_{e_b}Ω − g_aa e_b ∧ ι_{e_a}Ω ).
            for (t, f) in target.terms() {
                for (hit, other, g) in [(b, a, space.sign(b)), (a, b, space.sign(a))] {
                    if let Some((r, s1)) = t.contract_index(hit) {
                        if let Some((blade, s2)) =
                            Blade::from_sorted(&[other]).unwrap().wedge_sign(&r)
                        {
                            let mut v = c.clone() * f.clone();
                            let mut sign = s1 * s2 * g;
                            // The second summand carries the minus sign.
                            if hit == a {
                                sign = -sign;
                            }
                            if sign < 0 {
                                v = S::zero() - v;
                            }
                            out.add_term(blade, v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Span of all one-form contractions by degree `p−1` basis blades —
    /// the plane a simple form determines, and in general the support of
    /// the form.
    pub fn support_plane(&self) -> Plane<S> {
        let d = self.space.dim();
        let mut rows: Vec<Vec<S>> = Vec::new();
        for xi in Blade::enumerate(d, self.degree.saturating_sub(1)) {
            let one = self.contract_blade(&xi);
            if !one.is_zero() {
                rows.push(one.covector_coords());
            }
        }
        Plane::from_rows(self.space, &rows)
    }

    /// Apply the algebra homomorphism sending each basis covector `e_i`
    /// to the one-form with coordinates `map[i-1]` (row per index).  For
    /// an isometry matrix this is the induced action on forms.
    pub fn apply_linear(&self, map: &[Vec<S>]) -> Form<S> {
        let mut out = Form::zero(self.space, self.degree);
        for (b, c) in self.terms() {
            let mut acc: Option<Form<S>> = None;
            for i in b.indices() {
                let one = Form::from_covector(self.space, &map[i - 1]);
                acc = Some(match acc {
                    None => one,
                    Some(f) => f.wedge(&one).expect("same space"),
                });
            }
            let image = acc.unwrap_or_else(|| Form::basis_blade(self.space, Blade::SCALAR));
            out = out.plus(&image.scaled(c)).expect("same degree");
        }
        out
    }

    /// Map coefficients into another scalar type (e.g. ℚ into ℚ(√3)).
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Form<T> {
        let mut out = Form::zero(self.space, self.degree);
        for (b, c) in self.terms() {
            out.add_term(*b, f(c));
        }
        out
    }
}

impl<S: Scalar> fmt::Display for Form<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{}", b.label())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn e(space: MetricSpace, idx: &[usize]) -> Form {
        Form::monomial(space, idx, rint(1)).unwrap()
    }

    #[test]
    fn wedge_basics() {
        let s = MetricSpace::euclidean(4);
        let e1 = e(s, &[1]);
        let e2 = e(s, &[2]);
        assert_eq!(e1.wedge(&e2).unwrap(), e(s, &[1, 2]));
        let e12 = e(s, &[1, 2]);
        assert!(e12.wedge(&e12).unwrap().is_zero());
        let f = e(s, &[1, 2]).plus(&e(s, &[3, 4])).unwrap();
        let sq = f.wedge(&f).unwrap();
        assert_eq!(sq, e(s, &[1, 2, 3, 4]).scaled(&rint(2)));
    }

    #[test]
    fn contraction_convention() {
        let s = MetricSpace::euclidean(6);
        let f = e(s, &[1, 2, 3]);
        assert_eq!(f.contract_basis(1), e(s, &[2, 3]));
        // Fixed calibration: ι_{e1∧e2} e1234 = e34.
        let s4 = MetricSpace::euclidean(4);
        let f = e(s4, &[1, 2, 3, 4]);
        let xi = Blade::from_sorted(&[1, 2]).unwrap();
        assert_eq!(f.contract_blade(&xi), e(s4, &[3, 4]));
        // ι_{e1∧e2}(α e1234 + β e1256) = α e34 + β e56.
        let s6 = MetricSpace::euclidean(6);
        let f = e(s6, &[1, 2, 3, 4])
            .scaled(&rint(2))
            .plus(&e(s6, &[1, 2, 5, 6]).scaled(&rint(3)))
            .unwrap();
        let got = f.contract_blade(&xi);
        let want = e(s6, &[3, 4])
            .scaled(&rint(2))
            .plus(&e(s6, &[5, 6]).scaled(&rint(3)))
            .unwrap();
        assert_eq!(got, want);
        // ι_{e3} e12 = 0.
        assert!(e(s6, &[1, 2]).contract_basis(3).is_zero());
    }

    #[test]
    fn musical_isomorphisms() {
        let s = MetricSpace::lorentzian(3);
        let e1 = e(s, &[1]);
        assert_eq!(e1.sharp().unwrap(), vec![rint(-1), rint(0), rint(0)]);
        let x = vec![rat(1, 2), rint(2), rint(0)];
        let alpha = Form::flat(s, &x);
        assert_eq!(alpha.sharp().unwrap(), x);
    }

    #[test]
    fn inner_product_signs() {
        let s = MetricSpace::euclidean(4);
        let e12 = e(s, &[1, 2]);
        assert_eq!(e12.form_inner(&e12).unwrap(), rint(1));
        let m = MetricSpace::lorentzian(4);
        let e12m = e(m, &[1, 2]);
        assert_eq!(e12m.form_inner(&e12m).unwrap(), rint(-1));
        let e34 = e(s, &[3, 4]);
        assert_eq!(e12.form_inner(&e34).unwrap(), rint(0));
    }

    #[test]
    fn hodge_examples() {
        let s = MetricSpace::euclidean(4);
        assert_eq!(e(s, &[1, 2]).hodge(), e(s, &[3, 4]));
        assert_eq!(e(s, &[1, 3]).hodge(), e(s, &[2, 4]).negate());
        let s6 = MetricSpace::euclidean(6);
        // Sign fixed by e34 ∧ ★e34 = vol.
        let star = e(s6, &[3, 4]).hodge();
        let prod = e(s6, &[3, 4]).wedge(&star).unwrap();
        assert_eq!(prod, Form::volume(s6));
    }

    #[test]
    fn so_action_examples() {
        let s = MetricSpace::euclidean(4);
        let e12 = e(s, &[1, 2]);
        assert_eq!(
            Form::so_action(&e12, &e(s, &[1, 3])).unwrap(),
            e(s, &[2, 3]).negate()
        );
        assert_eq!(Form::so_action(&e12, &e(s, &[2])).unwrap(), e(s, &[1]));
        let m = MetricSpace::lorentzian(4);
        let e12m = e(m, &[1, 2]);
        assert_eq!(Form::so_action(&e12m, &e(m, &[1])).unwrap(), e(m, &[2]));
    }

    #[test]
    fn support_plane_ranks() {
        let s = MetricSpace::euclidean(6);
        let f = e(s, &[1, 2, 3]);
        let p = f.support_plane();
        assert_eq!(p.rank(), 3);
        assert!(p.contains(&[rint(0), rint(1), rint(0), rint(0), rint(0), rint(0)]));
        let g = f.plus(&e(s, &[4, 5, 6])).unwrap();
        assert_eq!(g.support_plane().rank(), 6);
    }

    #[test]
    fn linear_action_is_multiplicative() {
        let s = MetricSpace::euclidean(3);
        // Rotation by the (3,4,5) triple in the (1,2) plane.
        let map = vec![
            vec![rat(3, 5), rat(4, 5), rint(0)],
            vec![rat(-4, 5), rat(3, 5), rint(0)],
            vec![rint(0), rint(0), rint(1)],
        ];
        let f = e(s, &[1, 2]);
        assert_eq!(f.apply_linear(&map), f); // invariant plane element
        let v = e(s, &[1]);
        let img = v.apply_linear(&map);
        assert_eq!(img.covector_coords(), vec![rat(3, 5), rat(4, 5), rint(0)]);
    }
}
