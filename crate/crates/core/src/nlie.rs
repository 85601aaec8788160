//! Metric n-Lie (Filippov) algebra machinery.
//!
//! An (n+1)-form `F` over a metric space defines an n-ary bracket by
//! `F(X₁,…,X_{n+1}) = ⟨[X₁,…,X_n], X_{n+1}⟩`, and conversely a bracket
//! with an invariant metric defines a form.  The orthogonal relation
//! `[ι_Ξ F, F] = 0` is equivalent to the n-Jacobi (fundamental) identity
//! of this bracket; the equivalence is exercised by the test harness.
//!
//! The module also provides the double-extension construction
//! `𝔡(𝔤,𝔥) = 𝔥 ⋉ (𝔤 ×_c 𝔥*)` for one-dimensional `𝔥`, catalogs of
//! euclidean and lorentzian metric Lie algebras up to dimension 7, and
//! the su(3) structure constants over ℚ(√3).

use crate::blade::Blade;
use crate::error::{AlgebraError, Result};
use crate::form::Form;
use crate::linalg::{self, Matrix};
use crate::scalar::{rat, rint, Rat, Scalar, Sqrt3};
use crate::space::MetricSpace;
use std::collections::BTreeMap;

/// Totally antisymmetric n-ary bracket via structure constants
/// `f_{i₁…i_n}^k`, stored on sorted index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct NBracket<S: Scalar = Rat> {
    pub arity: usize,
    pub dim: usize,
    constants: BTreeMap<Blade, Vec<S>>,
}

impl<S: Scalar> NBracket<S> {
    pub fn new(arity: usize, dim: usize) -> Self {
        NBracket {
            arity,
            dim,
            constants: BTreeMap::new(),
        }
    }

    /// Set `[e_{lower…}] = Σ_k coeffs[k] e_{k+1}` for a sorted index
    /// tuple.
    pub fn set(&mut self, lower: &[usize], coeffs: Vec<S>) {
        let blade = Blade::from_sorted(lower).expect("sorted lower indices");
        debug_assert_eq!(blade.degree(), self.arity);
        debug_assert_eq!(coeffs.len(), self.dim);
        if coeffs.iter().all(|c| c.is_zero()) {
            self.constants.remove(&blade);
        } else {
            self.constants.insert(blade, coeffs);
        }
    }

    /// Add `c · e_upper` to `[e_{lower…}]` (lower sorted).
    pub fn add_constant(&mut self, lower: &[usize], upper: usize, c: S) {
        let blade = Blade::from_sorted(lower).expect("sorted lower indices");
        let entry = self
            .constants
            .entry(blade)
            .or_insert_with(|| vec![S::zero(); self.dim]);
        entry[upper - 1] = entry[upper - 1].clone() + c;
        if entry.iter().all(|c| c.is_zero()) {
            self.constants.remove(&blade);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Blade, &Vec<S>)> {
        self.constants.iter()
    }

    /// Bracket of basis vectors in arbitrary order (0 on repeats).
    pub fn of_basis(&self, indices: &[usize]) -> Vec<S> {
        debug_assert_eq!(indices.len(), self.arity);
        match Blade::from_unsorted(indices) {
            None => vec![S::zero(); self.dim],
            Some((blade, sign)) => {
                let mut v = self
                    .constants
                    .get(&blade)
                    .cloned()
                    .unwrap_or_else(|| vec![S::zero(); self.dim]);
                if sign < 0 {
                    for c in &mut v {
                        *c = S::zero() - c.clone();
                    }
                }
                v
            }
        }
    }

    /// Multilinear extension to coordinate vectors.
    pub fn of_vectors(&self, args: &[Vec<S>]) -> Vec<S> {
        debug_assert_eq!(args.len(), self.arity);
        let mut out = vec![S::zero(); self.dim];
        let mut idx = vec![0usize; self.arity];
        loop {
            let coeff = idx
                .iter()
                .enumerate()
                .fold(S::one(), |acc, (slot, &i)| acc * args[slot][i].clone());
            if !coeff.is_zero() {
                let indices: Vec<usize> = idx.iter().map(|&i| i + 1).collect();
                let v = self.of_basis(&indices);
                for (o, c) in out.iter_mut().zip(v) {
                    *o = o.clone() + coeff.clone() * c;
                }
            }
            // Advance the multi-index.
            let mut slot = 0;
            loop {
                if slot == self.arity {
                    return out;
                }
                idx[slot] += 1;
                if idx[slot] < self.dim {
                    break;
                }
                idx[slot] = 0;
                slot += 1;
            }
        }
    }
}

/// Bracket induced by an (n+1)-form over a diagonal ±1 metric:
/// `f_{i₁…i_n}^k = g^{kk} F_{i₁…i_n k}`.
pub fn bracket_from_form<S: Scalar>(f: &Form<S>) -> Result<NBracket<S>> {
    let p = f.degree();
    if p < 3 {
        return Err(AlgebraError::DegreeError(format!(
            "bracket_from_form needs degree ≥ 3, got {p}"
        )));
    }
    let d = f.space().dim();
    let space = *f.space();
    let mut b = NBracket::new(p - 1, d);
    for lower in Blade::enumerate(d, p - 1) {
        let mut coeffs = vec![S::zero(); d];
        let mut nonzero = false;
        for k in 1..=d {
            let mut idx = lower.indices();
            idx.push(k);
            let c = match Blade::from_unsorted(&idx) {
                None => S::zero(),
                Some((blade, sign)) => {
                    let v = f.coeff(&blade);
                    if sign < 0 {
                        S::zero() - v
                    } else {
                        v
                    }
                }
            };
            let c = if space.sign(k) < 0 {
                S::zero() - c
            } else {
                c
            };
            if !c.is_zero() {
                nonzero = true;
            }
            coeffs[k - 1] = c;
        }
        if nonzero {
            b.set(&lower.indices(), coeffs);
        }
    }
    Ok(b)
}

/// Form induced by a bracket and a (general symmetric) metric `B`:
/// `F(X₁,…,X_n,Z) = ⟨[X₁,…,X_n], Z⟩`.  Fails with `NotMetricInvariant`
/// if the induced tensor is not totally antisymmetric.  The returned form
/// lives on `space` (whose dimension must match); its coefficients are
/// components in the *same* basis the bracket uses.
pub fn form_from_bracket<S: Scalar>(
    bracket: &NBracket<S>,
    metric: &Matrix<S>,
    space: MetricSpace,
) -> Result<Form<S>> {
    let d = bracket.dim;
    if space.dim() != d {
        return Err(AlgebraError::SpaceMismatch(format!(
            "bracket dim {d} vs space dim {}",
            space.dim()
        )));
    }
    let n = bracket.arity;
    let mut form = Form::zero(space, n + 1);
    let mut seen: BTreeMap<Blade, S> = BTreeMap::new();
    for lower in Blade::enumerate(d, n) {
        let v = bracket.of_basis(&lower.indices());
        for k in 1..=d {
            // ⟨[lower], e_k⟩ = Σ_l v_l B[l][k]
            let mut t = S::zero();
            for l in 0..d {
                t = t + v[l].clone() * metric[l][k - 1].clone();
            }
            if lower.contains(k) {
                if !t.is_zero() {
                    return Err(AlgebraError::NotMetricInvariant(format!(
                        "⟨[{:?}], e_{k}⟩ = {t} with e_{k} repeated",
                        lower.indices()
                    )));
                }
                continue;
            }
            let mut idx = lower.indices();
            idx.push(k);
            let (blade, sign) = Blade::from_unsorted(&idx).expect("distinct indices");
            let val = if sign < 0 { S::zero() - t } else { t };
            match seen.get(&blade) {
                None => {
                    seen.insert(blade, val.clone());
                    form.add_term(blade, val);
                }
                Some(prev) => {
                    if *prev != val {
                        return Err(AlgebraError::NotMetricInvariant(format!(
                            "inconsistent components on {}: {prev} vs {val}",
                            blade.label()
                        )));
                    }
                }
            }
        }
    }
    Ok(form)
}

/// One violation of the n-Jacobi (fundamental) identity.
#[derive(Clone, Debug)]
pub struct JacobiViolation<S: Scalar = Rat> {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub residual: Vec<S>,
}

/// Residuals of the fundamental identity
/// `[X₁,…,X_{n−1},[Y₁,…,Y_n]] = Σᵢ [Y₁,…,[X,Yᵢ],…,Y_n]`
/// over sorted basis tuples; empty list ⇔ n-Lie algebra.
pub fn jacobi_residual<S: Scalar>(b: &NBracket<S>) -> Vec<JacobiViolation<S>> {
    let d = b.dim;
    let n = b.arity;
    let mut out = Vec::new();
    for xb in Blade::enumerate(d, n - 1) {
        let x = xb.indices();
        for yb in Blade::enumerate(d, n) {
            let y = yb.indices();
            // LHS = [X, [Y]]
            let inner = b.of_basis(&y);
            let mut lhs = vec![S::zero(); d];
            for (k, c) in inner.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut idx = x.clone();
                idx.push(k + 1);
                let v = b.of_basis(&idx);
                for (o, t) in lhs.iter_mut().zip(v) {
                    *o = o.clone() + c.clone() * t;
                }
            }
            // RHS = Σ_i [Y₁,…,[X,Yᵢ],…,Y_n]
            let mut rhs = vec![S::zero(); d];
            for i in 0..n {
                let mut idx = x.clone();
                idx.push(y[i]);
                let w = b.of_basis(&idx);
                for (k, c) in w.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut yk = y.clone();
                    yk[i] = k + 1;
                    let v = b.of_basis(&yk);
                    for (o, t) in rhs.iter_mut().zip(v) {
                        *o = o.clone() + c.clone() * t;
                    }
                }
            }
            let residual: Vec<S> = lhs
                .into_iter()
                .zip(rhs)
                .map(|(l, r)| l - r)
                .collect();
            if residual.iter().any(|c| !c.is_zero()) {
                out.push(JacobiViolation {
                    x: x.clone(),
                    y: y.clone(),
                    residual,
                });
            }
        }
    }
    out
}

/// One violation of metric invariance.
#[derive(Clone, Debug)]
pub struct InvarianceViolation<S: Scalar = Rat> {
    pub x: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub residual: S,
}

/// Residuals of `⟨[X,a],b⟩ + ⟨[X,b],a⟩ = 0` over sorted (n−1)-tuples `X`
/// and basis pairs `a ≤ b`; empty ⇔ the metric is invariant.
pub fn metric_invariance_residual<S: Scalar>(
    bracket: &NBracket<S>,
    metric: &Matrix<S>,
) -> Vec<InvarianceViolation<S>> {
    let d = bracket.dim;
    let n = bracket.arity;
    let pair = |v: &[S], k: usize| -> S {
        let mut acc = S::zero();
        for l in 0..d {
            acc = acc + v[l].clone() * metric[l][k - 1].clone();
        }
        acc
    };
    let mut out = Vec::new();
    for xb in Blade::enumerate(d, n - 1) {
        let x = xb.indices();
        for a in 1..=d {
            for b in a..=d {
                let mut xa = x.clone();
                xa.push(a);
                let mut xb2 = x.clone();
                xb2.push(b);
                let residual =
                    pair(&bracket.of_basis(&xa), b) + pair(&bracket.of_basis(&xb2), a);
                if !residual.is_zero() {
                    out.push(InvarianceViolation {
                        x: x.clone(),
                        a,
                        b,
                        residual,
                    });
                }
            }
        }
    }
    out
}

/// A Lie algebra (arity-2 bracket) with an invariant nondegenerate
/// symmetric metric `B`, which may have off-diagonal entries (double
/// extensions pair `e₊` with `e₋`).  `ortho_map` is an exact change of
/// basis to an orthonormal frame: its columns are the new basis vectors
/// in the algebra's coordinates, with all timelike directions first, so
/// `ortho_mapᵀ · B · ortho_map = diag(−1,…,+1)`.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    pub name: String,
    pub bracket: NBracket<Rat>,
    pub metric: Matrix<Rat>,
    pub ortho_map: Matrix<Rat>,
    pub time_dims: usize,
}

impl MetricLieAlgebra {
    pub fn dim(&self) -> usize {
        self.bracket.dim
    }

    /// The orthonormal space this algebra's invariant form lives on.
    pub fn frame_space(&self) -> MetricSpace {
        MetricSpace::new(self.dim(), self.time_dims).expect("valid signature")
    }

    /// Invariant 3-form `F(X,Y,Z) = ⟨[X,Y],Z⟩` pulled back to the
    /// orthonormal frame.
    pub fn invariant_form(&self) -> Result<Form<Rat>> {
        let space = self.frame_space();
        let raw = form_from_bracket(&self.bracket, &self.metric, space)?;
        Ok(raw.apply_linear(&self.ortho_map))
    }

    /// Assert the orthonormalizing map is exact: `QᵀBQ` must equal the
    /// frame's diagonal.  Used by tests and the catalog self-check.
    pub fn ortho_map_is_exact(&self) -> bool {
        let qt: Matrix<Rat> = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.ortho_map[j][i].clone()).collect())
            .collect();
        let prod = linalg::mat_mul(&qt, &linalg::mat_mul(&self.metric, &self.ortho_map));
        let space = self.frame_space();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let want = if i == j {
                    rint(space.sign(i + 1) as i64)
                } else {
                    rint(0)
                };
                if prod[i][j] != want {
                    return false;
                }
            }
        }
        true
    }
}

fn diag_metric(signs: &[i64]) -> Matrix<Rat> {
    let d = signs.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { rint(signs[i]) } else { rint(0) })
                .collect()
        })
        .collect()
}

/// Double extension of `g` by a one-dimensional `h`: `rho` is the action
/// of the new element `e₋` on `g` (a skew-symmetric derivation, checked),
/// `b = ⟨e₋,e₋⟩` is a free parameter.  Basis order of the result:
/// `(e₋, g-basis…, e₊)`.
pub fn double_extension(
    g: &MetricLieAlgebra,
    rho: &Matrix<Rat>,
    b: Rat,
) -> Result<MetricLieAlgebra> {
    let d = g.dim();
    // Skew-symmetry w.r.t. g's metric: (B·rho)ᵀ = −B·rho.
    let brho = linalg::mat_mul(&g.metric, rho);
    for i in 0..d {
        for j in 0..d {
            if brho[i][j] != -brho[j][i].clone() {
                return Err(AlgebraError::InvalidAction(
                    "rho is not skew-symmetric w.r.t. the metric".into(),
                ));
            }
        }
    }
    // Derivation property on basis pairs.
    for i in 1..=d {
        for j in i + 1..=d {
            let lhs = {
                let br = g.bracket.of_basis(&[i, j]);
                linalg::mat_vec(rho, &br)
            };
            let rho_i: Vec<Rat> = (0..d).map(|r| rho[r][i - 1].clone()).collect();
            let rho_j: Vec<Rat> = (0..d).map(|r| rho[r][j - 1].clone()).collect();
            let ei: Vec<Rat> = (0..d).map(|r| if r == i - 1 { rint(1) } else { rint(0) }).collect();
            let ej: Vec<Rat> = (0..d).map(|r| if r == j - 1 { rint(1) } else { rint(0) }).collect();
            let t1 = g.bracket.of_vectors(&[rho_i.clone(), ej.clone()]);
            let t2 = g.bracket.of_vectors(&[ei.clone(), rho_j.clone()]);
            for r in 0..d {
                if lhs[r] != t1[r].clone() + t2[r].clone() {
                    return Err(AlgebraError::InvalidAction(
                        "rho is not a derivation of g".into(),
                    ));
                }
            }
        }
    }

    let nd = d + 2;
    // Index map: e₋ = 1, g basis = 2..=d+1, e₊ = d+2.
    let mut bracket = NBracket::new(2, nd);
    // [e₋, X] = rho(X).
    for j in 1..=d {
        for r in 0..d {
            if !rho[r][j - 1].is_zero() {
                bracket.add_constant(&[1, j + 1], r + 2, rho[r][j - 1].clone());
            }
        }
    }
    // [X, Y] = [X,Y]_g + ⟨rho X, Y⟩ e₊.
    for i in 1..=d {
        for j in i + 1..=d {
            let br = g.bracket.of_basis(&[i, j]);
            for r in 0..d {
                if !br[r].is_zero() {
                    bracket.add_constant(&[i + 1, j + 1], r + 2, br[r].clone());
                }
            }
            // c(X,Y) = ⟨rho e_i, e_j⟩ = (B·rho)[j-1][i-1]
            let c = brho[j - 1][i - 1].clone();
            if !c.is_zero() {
                bracket.add_constant(&[i + 1, j + 1], nd, c);
            }
        }
    }
    // Metric: border matrix with ⟨e₋,e₋⟩ = b, ⟨e₋,e₊⟩ = 1, ⟨e₊,e₊⟩ = 0.
    let mut metric = vec![vec![rint(0); nd]; nd];
    metric[0][0] = b.clone();
    metric[0][nd - 1] = rint(1);
    metric[nd - 1][0] = rint(1);
    for i in 0..d {
        for j in 0..d {
            metric[i + 1][j + 1] = g.metric[i][j].clone();
        }
    }
    // Orthonormal frame: on the (e₋, e₊) null pair take
    //   f_time  = e₋ − (b+1)/2 · e₊   (norm −1)
    //   f_space = e₋ − (b−1)/2 · e₊   (norm +1)
    // and keep g's own orthonormal columns.  Timelike directions first.
    let mut cols: Vec<(i8, Vec<Rat>)> = Vec::new();
    let mut f_time = vec![rint(0); nd];
    f_time[0] = rint(1);
    f_time[nd - 1] = -(b.clone() + rint(1)) / rint(2);
    cols.push((-1, f_time));
    let mut f_space = vec![rint(0); nd];
    f_space[0] = rint(1);
    f_space[nd - 1] = -(b.clone() - rint(1)) / rint(2);
    cols.push((1, f_space));
    let g_space = g.frame_space();
    for c in 0..d {
        let mut v = vec![rint(0); nd];
        for r in 0..d {
            v[r + 1] = g.ortho_map[r][c].clone();
        }
        cols.push((g_space.sign(c + 1), v));
    }
    cols.sort_by_key(|(s, _)| *s);
    let time_dims = cols.iter().filter(|(s, _)| *s < 0).count();
    let ortho_map: Matrix<Rat> = (0..nd)
        .map(|r| cols.iter().map(|(_, v)| v[r].clone()).collect())
        .collect();

    let out = MetricLieAlgebra {
        name: format!("d({},R)", g.name),
        bracket,
        metric,
        ortho_map,
        time_dims,
    };
    debug_assert!(out.ortho_map_is_exact());
    Ok(out)
}

/// The oscillator algebra `𝔡(𝔼⁴,ℝ)`: the double extension of abelian
/// `𝔼⁴` along the rotation `α e₁∧e₂ + β e₃∧e₄`, with `⟨e₋,e₋⟩ = b`.
pub fn oscillator_algebra(alpha: &Rat, beta: &Rat, b: &Rat) -> MetricLieAlgebra {
    let e4 = abelian(4, 0);
    let mut rho = vec![vec![rint(0); 4]; 4];
    // e1 ↦ α e2, e2 ↦ −α e1, e3 ↦ β e4, e4 ↦ −β e3.
    rho[1][0] = alpha.clone();
    rho[0][1] = -alpha.clone();
    rho[3][2] = beta.clone();
    rho[2][3] = -beta.clone();
    let mut out = double_extension(&e4, &rho, b.clone()).expect("rotation is a skew derivation");
    out.name = "d(E4,R)".into();
    out
}

fn abelian(dim: usize, time_dims: usize) -> MetricLieAlgebra {
    let signs: Vec<i64> = (1..=dim)
        .map(|i| if i <= time_dims { -1 } else { 1 })
        .collect();
    MetricLieAlgebra {
        name: if time_dims == 0 {
            format!("E{dim}")
        } else {
            format!("E({time_dims},{})", dim - time_dims)
        },
        bracket: NBracket::new(2, dim),
        metric: diag_metric(&signs),
        ortho_map: linalg::identity(dim),
        time_dims,
    }
}

/// `su(2)` ≅ `so(3)` with the invariant metric normalized to the
/// identity: `[e₁,e₂] = e₃` and cyclic.
fn su2() -> MetricLieAlgebra {
    let mut bracket = NBracket::new(2, 3);
    bracket.add_constant(&[1, 2], 3, rint(1));
    bracket.add_constant(&[2, 3], 1, rint(1));
    bracket.add_constant(&[1, 3], 2, rint(-1));
    MetricLieAlgebra {
        name: "su(2)".into(),
        bracket,
        metric: diag_metric(&[1, 1, 1]),
        ortho_map: linalg::identity(3),
        time_dims: 0,
    }
}

/// `so(1,2)` with invariant metric `diag(−1,1,1)`: the bracket induced by
/// the volume form `e₁₂₃` of `𝔼^{1,2}`.
fn so12() -> MetricLieAlgebra {
    let mut bracket = NBracket::new(2, 3);
    bracket.add_constant(&[1, 2], 3, rint(1));
    bracket.add_constant(&[1, 3], 2, rint(-1));
    bracket.add_constant(&[2, 3], 1, rint(-1));
    MetricLieAlgebra {
        name: "so(1,2)".into(),
        bracket,
        metric: diag_metric(&[-1, 1, 1]),
        ortho_map: linalg::identity(3),
        time_dims: 1,
    }
}

/// Direct sum, placing all timelike directions of the summands first in
/// the orthonormal frame (summands themselves must already be in frame
/// order; only the first may be lorentzian here, which covers the
/// catalogs).
pub fn direct_sum(name: &str, parts: &[&MetricLieAlgebra]) -> MetricLieAlgebra {
    let dim: usize = parts.iter().map(|p| p.dim()).sum();
    let time_dims: usize = parts.iter().map(|p| p.time_dims).sum();
    assert!(
        parts.iter().skip(1).all(|p| p.time_dims == 0) || parts[0].time_dims == 0,
        "at most the first summand may carry timelike directions"
    );
    let mut bracket = NBracket::new(2, dim);
    let mut metric = vec![vec![rint(0); dim]; dim];
    let mut ortho_map = vec![vec![rint(0); dim]; dim];
    let mut offset = 0usize;
    // Column order of the orthonormal frame: timelike columns of each
    // part first (there is at most one timelike column overall in the
    // catalogs), then the spacelike columns in part order.
    let mut time_cols: Vec<Vec<Rat>> = Vec::new();
    let mut space_cols: Vec<Vec<Rat>> = Vec::new();
    for part in parts {
        let d = part.dim();
        for (blade, coeffs) in part.bracket.entries() {
            let lower: Vec<usize> = blade.indices().iter().map(|i| i + offset).collect();
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    bracket.add_constant(&lower, k + 1 + offset, c.clone());
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                metric[offset + i][offset + j] = part.metric[i][j].clone();
            }
        }
        let pspace = part.frame_space();
        for c in 0..d {
            let mut col = vec![rint(0); dim];
            for r in 0..d {
                col[offset + r] = part.ortho_map[r][c].clone();
            }
            if pspace.sign(c + 1) < 0 {
                time_cols.push(col);
            } else {
                space_cols.push(col);
            }
        }
        offset += d;
    }
    for (c, col) in time_cols.iter().chain(space_cols.iter()).enumerate() {
        for r in 0..dim {
            ortho_map[r][c] = col[r].clone();
        }
    }
    MetricLieAlgebra {
        name: name.into(),
        bracket,
        metric,
        ortho_map,
        time_dims,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Signature {
    Euclidean,
    Lorentzian,
}

/// Metric Lie algebras of dimension exactly `dim` from the d ≤ 7
/// catalogs (abelian spaces, su(2) and so(1,2) factors, and the
/// oscillator double-extension family, the latter with one fixed sample
/// of its parameters — use [`oscillator_algebra`] to vary them).
pub fn catalog(signature: Signature, dim: usize) -> Result<Vec<MetricLieAlgebra>> {
    if dim == 0 || dim > 7 {
        return Err(AlgebraError::Unsupported(format!(
            "catalog covers dimensions 1..=7, got {dim}"
        )));
    }
    let mut out = Vec::new();
    match signature {
        Signature::Euclidean => {
            out.push(abelian(dim, 0));
            if dim == 3 {
                out.push(su2());
            }
            if (4..=7).contains(&dim) {
                let k = dim - 3;
                let s = su2();
                let a = abelian(k, 0);
                out.push(direct_sum(&format!("su(2)+E{k}"), &[&s, &a]));
            }
            if dim == 6 {
                let s = su2();
                out.push(direct_sum("su(2)+su(2)", &[&s, &s]));
            }
            if dim == 7 {
                let s = su2();
                let a = abelian(1, 0);
                out.push(direct_sum("su(2)+su(2)+E1", &[&s, &s, &a]));
            }
        }
        Signature::Lorentzian => {
            out.push(abelian(dim, 1));
            if (4..=7).contains(&dim) {
                // E^{1,k} ⊕ so(3), k = dim − 4 ≤ 3.
                let k = dim - 4;
                let a = abelian(k + 1, 1);
                let s = su2();
                out.push(direct_sum(&format!("E(1,{k})+so(3)"), &[&a, &s]));
            }
            if dim == 3 {
                out.push(so12());
            }
            if (4..=7).contains(&dim) {
                // so(1,2) ⊕ E^k, k = dim − 3 ≤ 4.
                let k = dim - 3;
                let s = so12();
                let a = abelian(k, 0);
                out.push(direct_sum(&format!("so(1,2)+E{k}"), &[&s, &a]));
            }
            if dim == 6 {
                let s1 = so12();
                let s2 = su2();
                out.push(direct_sum("so(1,2)+so(3)", &[&s1, &s2]));
                out.push(oscillator_algebra(&rint(1), &rint(2), &rat(1, 2)));
            }
            if dim == 7 {
                let s1 = so12();
                let s2 = su2();
                let a = abelian(1, 0);
                out.push(direct_sum("so(1,2)+so(3)+E1", &[&s1, &s2, &a]));
                let osc = oscillator_algebra(&rint(1), &rint(2), &rat(1, 2));
                out.push(direct_sum("d(E4,R)+E1", &[&osc, &a]));
            }
        }
    }
    Ok(out)
}

/// su(3) in the Gell-Mann basis over ℚ(√3): totally antisymmetric
/// structure constants `f₁₂₃ = 1`, `f₁₄₇ = f₂₄₆ = f₂₅₇ = f₃₄₅ = ½`,
/// `f₁₅₆ = f₃₆₇ = −½`, `f₄₅₈ = f₆₇₈ = √3/2`, with the invariant metric
/// normalized to the identity (any positive multiple of the Killing form
/// works; this is the conventional `2 tr(T_a T_b) = δ_ab` scale).
pub fn su3_bracket() -> NBracket<Sqrt3> {
    let mut b = NBracket::new(2, 8);
    let half = Sqrt3::rational(rat(1, 2));
    let mhalf = Sqrt3::rational(rat(-1, 2));
    let one = Sqrt3::rational(rint(1));
    let s32 = Sqrt3::sqrt3_times(rat(1, 2));
    let table: [(usize, usize, usize, Sqrt3); 9] = [
        (1, 2, 3, one),
        (1, 4, 7, half.clone()),
        (1, 5, 6, mhalf.clone()),
        (2, 4, 6, half.clone()),
        (2, 5, 7, half.clone()),
        (3, 4, 5, half.clone()),
        (3, 6, 7, mhalf),
        (4, 5, 8, s32.clone()),
        (6, 7, 8, s32),
    ];
    for (i, j, k, f) in table {
        // Total antisymmetry: populate all three cyclic positions.
        b.add_constant(&[i, j], k, f.clone());
        b.add_constant(&[j, k], i, f.clone());
        b.add_constant(&[i, k], j, -f);
    }
    b
}

/// The su(3) invariant 3-form `F(X,Y,Z) = ⟨[X,Y],Z⟩` in `𝔼⁸`.
pub fn su3_form() -> Form<Sqrt3> {
    let metric: Matrix<Sqrt3> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    if i == j {
                        Sqrt3::one()
                    } else {
                        Sqrt3::zero()
                    }
                })
                .collect()
        })
        .collect();
    form_from_bracket(&su3_bracket(), &metric, MetricSpace::euclidean(8))
        .expect("su(3) metric is invariant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker;

    #[test]
    fn volume_form_brackets() {
        // F = e123 in E³ gives so(3).
        let s = MetricSpace::euclidean(3);
        let f = Form::monomial(s, &[1, 2, 3], rint(1)).unwrap();
        let b = bracket_from_form(&f).unwrap();
        assert_eq!(b.of_basis(&[1, 2]), vec![rint(0), rint(0), rint(1)]);
        assert_eq!(b.of_basis(&[2, 3]), vec![rint(1), rint(0), rint(0)]);
        assert_eq!(b.of_basis(&[3, 1]), vec![rint(0), rint(1), rint(0)]);
        assert!(jacobi_residual(&b).is_empty());
        // Lorentzian: [e2,e3] = −e1.
        let m = MetricSpace::lorentzian(3);
        let fm = Form::monomial(m, &[1, 2, 3], rint(1)).unwrap();
        let bm = bracket_from_form(&fm).unwrap();
        assert_eq!(bm.of_basis(&[2, 3]), vec![rint(-1), rint(0), rint(0)]);
        // 4-bracket from the volume form of E⁵.
        let s5 = MetricSpace::euclidean(5);
        let f5 = Form::monomial(s5, &[1, 2, 3, 4, 5], rint(1)).unwrap();
        let b5 = bracket_from_form(&f5).unwrap();
        assert_eq!(b5.arity, 4);
        assert_eq!(
            b5.of_basis(&[1, 2, 3, 4]),
            vec![rint(0), rint(0), rint(0), rint(0), rint(1)]
        );
        assert!(jacobi_residual(&b5).is_empty());
    }

    #[test]
    fn jacobi_detects_violations() {
        // [e1,e2] = e3, [e1,e3] = e1: the (e1,e2,e3) Jacobiator is e3.
        let mut b = NBracket::new(2, 3);
        b.add_constant(&[1, 2], 3, rint(1));
        b.add_constant(&[1, 3], 1, rint(1));
        assert!(!jacobi_residual(&b).is_empty());
    }

    #[test]
    fn invariance_residuals() {
        let so3 = su2();
        assert!(metric_invariance_residual(&so3.bracket, &so3.metric).is_empty());
        let lopsided = diag_metric(&[1, 1, 2]);
        assert!(!metric_invariance_residual(&so3.bracket, &lopsided).is_empty());
    }

    #[test]
    fn round_trips() {
        let s = MetricSpace::euclidean(3);
        let so3 = su2();
        let f = form_from_bracket(&so3.bracket, &so3.metric, s).unwrap();
        assert_eq!(f, Form::monomial(s, &[1, 2, 3], rint(1)).unwrap());
        let back = bracket_from_form(&f).unwrap();
        assert_eq!(back, so3.bracket);
        // A non-invariant metric is rejected.
        let bad = diag_metric(&[1, 1, 2]);
        assert!(matches!(
            form_from_bracket(&so3.bracket, &bad, s),
            Err(AlgebraError::NotMetricInvariant(_))
        ));
    }

    #[test]
    fn oscillator_family() {
        let l = oscillator_algebra(&rint(1), &rint(2), &rat(1, 2));
        assert_eq!(l.dim(), 6);
        assert!(jacobi_residual(&l.bracket).is_empty());
        assert!(metric_invariance_residual(&l.bracket, &l.metric).is_empty());
        assert!(l.ortho_map_is_exact());
        // Bracket table: [e₋,e₁] = α e₂, [e₁,e₂] = α e₊ (indices shifted).
        assert_eq!(
            l.bracket.of_basis(&[1, 2])[2],
            rint(1),
            "[e-, e1] = α e2"
        );
        assert_eq!(l.bracket.of_basis(&[2, 3])[5], rint(1), "[e1,e2] = α e+");
        let f = l.invariant_form().unwrap();
        assert!(plucker::relation_holds(&f).unwrap());
    }

    #[test]
    fn catalog_entries_are_metric_lie_algebras() {
        for sig in [Signature::Euclidean, Signature::Lorentzian] {
            for dim in 1..=7 {
                for entry in catalog(sig, dim).unwrap() {
                    assert!(
                        jacobi_residual(&entry.bracket).is_empty(),
                        "{} fails Jacobi",
                        entry.name
                    );
                    assert!(
                        metric_invariance_residual(&entry.bracket, &entry.metric).is_empty(),
                        "{} fails invariance",
                        entry.name
                    );
                    assert!(entry.ortho_map_is_exact(), "{} frame", entry.name);
                }
            }
        }
        let e3 = catalog(Signature::Euclidean, 3).unwrap();
        let names: Vec<&str> = e3.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, vec!["E3", "su(2)"]);
        let m3 = catalog(Signature::Lorentzian, 3).unwrap();
        let names: Vec<&str> = m3.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, vec!["E(1,2)", "so(1,2)"]);
    }

    #[test]
    fn su3_is_a_metric_lie_algebra() {
        let b = su3_bracket();
        assert!(jacobi_residual(&b).is_empty(), "su(3) Jacobi");
        let f = su3_form();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.support_plane().rank(), 8);
    }
}
