//! Floating-point normal forms of 2-forms.
//!
//! This is the only module that leaves exact arithmetic.  A 2-form over a
//! euclidean space skew-diagonalizes into orthogonal rotation blocks
//! `Σ αᵢ e_{2i−1} ∧ e_{2i}`; over a lorentzian space it falls into one of
//! three kinds depending on the spectrum of the mixed endomorphism
//! `η⁻¹ω`: elliptic (timelike axis fixed, spacelike rotation blocks),
//! hyperbolic (a boost block on a timelike plane plus rotations), or
//! parabolic (a block `κ (e⁰+e¹) ∧ e²` on a null plane plus rotations).
//! In every kind the output is a sum of mutually orthogonal simple
//! 2-forms, and the block pattern bridges back to the exact core through
//! bounded-denominator rationalization re-verified by
//! [`crate::decomp::verify_orthogonal_sum`].

use crate::decomp::{Decomposition, SimplePart};
use crate::error::{AlgebraError, Result};
use crate::form::Form;
use crate::scalar::{rationalize, Rat, Scalar};
use crate::space::MetricSpace;
use nalgebra::{DMatrix, DVector};
use num_traits::ToPrimitive;

/// Default reconstruction/classification tolerance on unit-scale input.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Denominator bound used when snapping float block data back to exact
/// rationals; snapped results are always re-verified exactly.
pub const SNAP_DENOMINATOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalFormKind {
    Zero,
    EuclideanBlocks,
    LorentzianElliptic,
    LorentzianHyperbolic,
    LorentzianParabolic,
}

/// Result of skew-diagonalizing a 2-form.
///
/// `basis` columns are the new frame vectors in the original coordinates;
/// the frame is an isometry of the metric (timelike directions stay
/// first).  `angles` are the block parameters: rotation rates, preceded
/// by the boost rate (hyperbolic) or the null-block coefficient
/// (parabolic).  `residual` is the max-norm error of both the frame
/// isometry property and the reconstruction of the input from the block
/// pattern.
#[derive(Clone, Debug)]
pub struct SkewNormalForm {
    pub kind: NormalFormKind,
    pub angles: Vec<f64>,
    pub basis: DMatrix<f64>,
    pub residual: f64,
}

fn form_matrix(omega: &Form<Rat>) -> DMatrix<f64> {
    let d = omega.space().dim();
    let mut w = DMatrix::zeros(d, d);
    for (blade, c) in omega.terms() {
        let idx = blade.indices();
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        let v = c.to_f64().unwrap_or(0.0);
        w[(i, j)] = v;
        w[(j, i)] = -v;
    }
    w
}

fn eta_diag(space: &MetricSpace) -> DVector<f64> {
    DVector::from_fn(space.dim(), |i, _| space.sign(i + 1) as f64)
}

fn eta_dot(eta: &DVector<f64>, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
    (0..x.len()).map(|i| eta[i] * x[i] * y[i]).sum()
}

/// Skew-diagonalize `w` (assumed skew over the identity metric): returns
/// `floor(n/2)` non-negative angles sorted descending plus a full
/// orthonormal basis whose leading columns span the rotation planes.
fn euclidean_blocks(w: &DMatrix<f64>, thr: f64) -> (Vec<f64>, Vec<DVector<f64>>) {
    let n = w.nrows();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    if let Some(out) = schur_blocks(w, thr) {
        return out;
    }
    // Fallback: -w² is symmetric PSD with eigenvalues αᵢ² (each twice).
    let s = -(w * w);
    let eig = nalgebra::SymmetricEigen::new(s);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let mut cols: Vec<DVector<f64>> = Vec::new();
    let mut angles: Vec<f64> = Vec::new();
    let mut leftovers: Vec<DVector<f64>> = Vec::new();
    for &idx in &order {
        let alpha = eig.eigenvalues[idx].max(0.0).sqrt();
        let v: DVector<f64> = eig.eigenvectors.column(idx).into();
        if alpha <= thr {
            leftovers.push(v);
            continue;
        }
        // Project out planes already extracted (kills the partner
        // eigenvector of a consumed plane, keeps fresh directions of a
        // degenerate eigenvalue).
        let mut v = v;
        for c in &cols {
            let d = c.dot(&v);
            v -= c * d;
        }
        if v.norm() < 0.5 {
            continue;
        }
        v /= v.norm();
        let mut u = -(w * &v) / alpha;
        let dv = v.dot(&u);
        u -= &v * dv;
        for c in &cols {
            let d = c.dot(&u);
            u -= c * d;
        }
        if u.norm() < 0.5 {
            leftovers.push(v);
            continue;
        }
        u /= u.norm();
        cols.push(v);
        cols.push(u);
        angles.push(alpha);
    }
    // Complete with the kernel directions.
    for v in leftovers
        .into_iter()
        .chain((0..n).map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 })))
    {
        if cols.len() == n {
            break;
        }
        let mut v = v;
        for c in &cols {
            let d = c.dot(&v);
            v -= c * d;
        }
        if v.norm() > 0.5 {
            v /= v.norm();
            cols.push(v);
        }
    }
    while angles.len() < n / 2 {
        angles.push(0.0);
    }
    (angles, cols)
}

/// Block extraction via the real Schur form of `w` itself.  Orthogonal
/// conjugation preserves skewness, so `QᵀwQ` is numerically skew and
/// quasi-block-diagonal: its 2×2 blocks are the rotation planes.  Avoids
/// the squaring of the eigen fallback, which loses half the available
/// precision when two angles nearly coincide.
fn schur_blocks(w: &DMatrix<f64>, thr: f64) -> Option<(Vec<f64>, Vec<DVector<f64>>)> {
    let n = w.nrows();
    // Bounded iterations: on the rare non-convergence the caller falls
    // back to the eigen path instead of spinning.
    let schur = nalgebra::linalg::Schur::try_new(w.clone(), 1e-14, 300)?;
    let (q, _) = schur.unpack();
    let t = q.transpose() * w * &q;
    let mut pairs: Vec<(f64, DVector<f64>, DVector<f64>)> = Vec::new();
    let mut leftovers: Vec<DVector<f64>> = Vec::new();
    let mut i = 0usize;
    while i < n {
        let coupled = i + 1 < n && t[(i + 1, i)].abs() > thr;
        if coupled {
            let a = t[(i, i + 1)];
            let v: DVector<f64> = q.column(i).into();
            let mut u: DVector<f64> = q.column(i + 1).into();
            // Orient the plane so that w·v = −α·u with α > 0.
            if a < 0.0 {
                u = -u;
            }
            pairs.push((a.abs(), v, u));
            i += 2;
        } else {
            leftovers.push(q.column(i).into());
            i += 1;
        }
    }
    pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    let mut angles = Vec::new();
    let mut cols = Vec::new();
    for (alpha, v, u) in pairs {
        angles.push(alpha);
        cols.push(v);
        cols.push(u);
    }
    cols.extend(leftovers);
    while angles.len() < n / 2 {
        angles.push(0.0);
    }
    Some((angles, cols))
}

/// Positive-definite η-orthogonal complement of η-orthonormal `used`
/// columns (their signs supplied), as η-orthonormal columns.
fn complement_basis(
    d: usize,
    eta: &DVector<f64>,
    used: &[(f64, DVector<f64>)],
) -> Vec<DVector<f64>> {
    let mut out: Vec<DVector<f64>> = Vec::new();
    for i in 0..d {
        if out.len() + used.len() == d {
            break;
        }
        let mut v = DVector::from_fn(d, |r, _| if r == i { 1.0 } else { 0.0 });
        for (sign, c) in used {
            let p = eta_dot(eta, &v, c) / sign;
            v -= c * p;
        }
        for c in &out {
            let p = eta_dot(eta, &v, c);
            v -= c * p;
        }
        let n2 = eta_dot(eta, &v, &v);
        if n2 > 1e-6 {
            v /= n2.sqrt();
            out.push(v);
        }
    }
    out
}

/// Run the euclidean block algorithm inside the span of η-orthonormal
/// spacelike `comp` columns; returns angles and the blocks mapped back to
/// ambient coordinates.
fn blocks_in_complement(
    w: &DMatrix<f64>,
    comp: &[DVector<f64>],
    thr: f64,
) -> (Vec<f64>, Vec<DVector<f64>>) {
    let k = comp.len();
    let wc = DMatrix::from_fn(k, k, |i, j| (comp[i].transpose() * w * &comp[j])[(0, 0)]);
    let (angles, sub) = euclidean_blocks(&wc, thr);
    let cols = sub
        .iter()
        .map(|v| {
            let mut out = DVector::zeros(w.nrows());
            for (i, c) in comp.iter().enumerate() {
                out += c * v[i];
            }
            out
        })
        .collect();
    (angles, cols)
}

fn relative_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s > rel_tol * max)
        .count()
}

/// Right null-space vectors of `m` (singular directions below
/// `rel_tol · σ_max`).
fn null_space(m: &DMatrix<f64>, rel_tol: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    let svd = m.clone().svd(false, true);
    let vt = svd.v_t.as_ref().expect("requested v_t");
    let max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let mut out = Vec::new();
    for i in 0..n {
        let s = if i < svd.singular_values.len() {
            svd.singular_values[i]
        } else {
            0.0
        };
        if s <= rel_tol * max.max(1e-300) {
            out.push(vt.row(i).transpose());
        }
    }
    out
}

fn assemble(
    kind: NormalFormKind,
    angles: Vec<f64>,
    cols: Vec<DVector<f64>>,
    w: &DMatrix<f64>,
    eta: &DVector<f64>,
) -> SkewNormalForm {
    let d = w.nrows();
    let basis = DMatrix::from_fn(d, d, |i, j| cols[j][i]);
    // Block-pattern matrix in the new frame.
    let mut n = DMatrix::zeros(d, d);
    let set = |i: usize, j: usize, v: f64, n: &mut DMatrix<f64>| {
        n[(i, j)] = v;
        n[(j, i)] = -v;
    };
    match kind {
        NormalFormKind::Zero => {}
        NormalFormKind::EuclideanBlocks => {
            for (i, a) in angles.iter().enumerate() {
                if 2 * i + 1 < d {
                    set(2 * i, 2 * i + 1, *a, &mut n);
                }
            }
        }
        NormalFormKind::LorentzianElliptic => {
            for (i, a) in angles.iter().enumerate() {
                if 2 * i + 2 < d {
                    set(2 * i + 1, 2 * i + 2, *a, &mut n);
                }
            }
        }
        NormalFormKind::LorentzianHyperbolic => {
            set(0, 1, angles[0], &mut n);
            for (i, a) in angles[1..].iter().enumerate() {
                if 2 * i + 3 < d {
                    set(2 * i + 2, 2 * i + 3, *a, &mut n);
                }
            }
        }
        NormalFormKind::LorentzianParabolic => {
            set(0, 2, angles[0], &mut n);
            set(1, 2, angles[0], &mut n);
            for (i, a) in angles[1..].iter().enumerate() {
                if 2 * i + 4 < d {
                    set(2 * i + 3, 2 * i + 4, *a, &mut n);
                }
            }
        }
    }
    let recon = basis.transpose() * w * &basis - &n;
    let gram = {
        let mut g = basis.transpose() * DMatrix::from_diagonal(eta) * &basis;
        for i in 0..d {
            g[(i, i)] -= eta[i];
        }
        g
    };
    let residual = recon.amax().max(gram.amax());
    SkewNormalForm {
        kind,
        angles,
        basis,
        residual,
    }
}

/// Skew-diagonalize a 2-form over a euclidean or lorentzian space.
pub fn skew_normal_form(omega: &Form<Rat>, tol: f64) -> Result<SkewNormalForm> {
    let space = *omega.space();
    let d = space.dim();
    if omega.degree() != 2 {
        return Err(AlgebraError::DegreeError(format!(
            "skew_normal_form expects degree 2, got {}",
            omega.degree()
        )));
    }
    if space.time_dims() >= 2 {
        return Err(AlgebraError::Unsupported(
            "normal forms for two or more timelike directions are not classified here".into(),
        ));
    }
    let w = form_matrix(omega);
    let eta = eta_diag(&space);
    let scale = w.amax();
    if scale <= tol {
        let cols: Vec<DVector<f64>> = (0..d)
            .map(|i| DVector::from_fn(d, |r, _| if r == i { 1.0 } else { 0.0 }))
            .collect();
        return Ok(assemble(NormalFormKind::Zero, vec![0.0; d / 2], cols, &w, &eta));
    }
    let thr = tol * scale.max(1.0);

    if space.time_dims() == 0 {
        let (angles, cols) = euclidean_blocks(&w, thr);
        return Ok(assemble(NormalFormKind::EuclideanBlocks, angles, cols, &w, &eta));
    }

    // Lorentzian: classify through the mixed endomorphism A = η⁻¹ w.
    let mut a = w.clone();
    for j in 0..d {
        a[(0, j)] = -a[(0, j)];
    }
    let rel = tol.max(1e-12);

    // Hyperbolic: a real eigenvalue pair ±μ.
    let eigs = a.clone().complex_eigenvalues();
    let mut mu = 0.0f64;
    for e in eigs.iter() {
        if e.im.abs() <= thr && e.re > mu {
            mu = e.re;
        }
    }
    if mu > thr {
        let idm = DMatrix::identity(d, d);
        let null_p = null_space(&(&a - &idm * mu), 1e-7);
        let null_m = null_space(&(&a + &idm * mu), 1e-7);
        let (up, um) = match (null_p.first(), null_m.first()) {
            (Some(p), Some(m)) => (p.clone(), m.clone()),
            _ => {
                return Err(AlgebraError::Unsupported(
                    "hyperbolic eigenvectors could not be resolved".into(),
                ))
            }
        };
        let s = eta_dot(&eta, &up, &um);
        if s.abs() < 1e-9 {
            return Err(AlgebraError::Unsupported(
                "degenerate null pairing in hyperbolic block".into(),
            ));
        }
        let um = um * (-1.0 / s);
        let inv_sqrt2 = 0.5f64.sqrt();
        let f0 = (&up + &um) * inv_sqrt2;
        let mut f1 = (&up - &um) * inv_sqrt2;
        let c = (f0.transpose() * &w * &f1)[(0, 0)];
        if c < 0.0 {
            f1 = -f1;
        }
        let used = vec![(-1.0, f0.clone()), (1.0, f1.clone())];
        let comp = complement_basis(d, &eta, &used);
        let (rest, rest_cols) = blocks_in_complement(&w, &comp, thr);
        let mut angles = vec![c.abs()];
        angles.extend(rest);
        let mut cols = vec![f0, f1];
        cols.extend(rest_cols);
        return Ok(assemble(NormalFormKind::LorentzianHyperbolic, angles, cols, &w, &eta));
    }

    // Parabolic: a nontrivial nilpotent Jordan chain (rank drops under
    // squaring; semisimple operators keep their rank).
    let a2 = &a * &a;
    if relative_rank(&a, rel) > relative_rank(&a2, rel) && a2.amax() > thr * scale {
        // Jordan chain y → Ay → A²y on the degenerate block.
        let jstar = (0..d)
            .max_by(|&i, &j| {
                a2.column(i)
                    .norm()
                    .partial_cmp(&a2.column(j).norm())
                    .unwrap()
            })
            .unwrap();
        let y = DVector::from_fn(d, |r, _| if r == jstar { 1.0 } else { 0.0 });
        let chain = [y.clone(), &a * &y, &a2 * &y];
        let g = DMatrix::from_fn(3, 3, |i, j| eta_dot(&eta, &chain[i], &chain[j]));
        let ge = nalgebra::SymmetricEigen::new(g);
        let mut block: Vec<(f64, DVector<f64>)> = Vec::new();
        for k in 0..3 {
            let lam = ge.eigenvalues[k];
            if lam.abs() < 1e-9 * scale.max(1.0) {
                return Err(AlgebraError::Unsupported(
                    "degenerate Gram matrix on the parabolic block".into(),
                ));
            }
            let mut v = DVector::zeros(d);
            for i in 0..3 {
                v += &chain[i] * ge.eigenvectors[(i, k)];
            }
            v /= lam.abs().sqrt();
            block.push((lam.signum(), v));
        }
        block.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        if block[0].0 > 0.0 || block[1].0 < 0.0 {
            return Err(AlgebraError::Unsupported(
                "parabolic block is not of signature (1,2)".into(),
            ));
        }
        let (b0, b1, b2) = (&block[0].1, &block[1].1, &block[2].1);
        // Kernel of the restricted endomorphism is a null line; rotate it
        // onto b0 − b1.
        let b3 = [b0.clone(), b1.clone(), b2.clone()];
        let w3 = DMatrix::from_fn(3, 3, |i, j| (b3[i].transpose() * &w * &b3[j])[(0, 0)]);
        let mut a3 = w3.clone();
        for j in 0..3 {
            a3[(0, j)] = -a3[(0, j)];
        }
        let kernel = null_space(&a3, 1e-7);
        let k3 = kernel.first().ok_or_else(|| {
            AlgebraError::Unsupported("parabolic block kernel not found".into())
        })?;
        if k3[0].abs() < 1e-7 {
            return Err(AlgebraError::Unsupported(
                "parabolic kernel has no timelike component".into(),
            ));
        }
        let k3 = k3 / k3[0];
        let r = (k3[1] * k3[1] + k3[2] * k3[2]).sqrt();
        let f0 = b0.clone();
        let f1 = (b1 * (-k3[1]) + b2 * (-k3[2])) / r;
        let mut f2 = (b1 * k3[2] + b2 * (-k3[1])) / r;
        let kappa = (f0.transpose() * &w * &f2)[(0, 0)];
        let kappa = if kappa < 0.0 {
            f2 = -f2;
            -kappa
        } else {
            kappa
        };
        let used = vec![(-1.0, f0.clone()), (1.0, f1.clone()), (1.0, f2.clone())];
        let comp = complement_basis(d, &eta, &used);
        let (rest, rest_cols) = blocks_in_complement(&w, &comp, thr);
        let mut angles = vec![kappa];
        angles.extend(rest);
        let mut cols = vec![f0, f1, f2];
        cols.extend(rest_cols);
        return Ok(assemble(NormalFormKind::LorentzianParabolic, angles, cols, &w, &eta));
    }

    // Elliptic: semisimple with imaginary spectrum; the timelike axis
    // sits in the kernel.
    let kernel = null_space(&a, 1e-7);
    if kernel.is_empty() {
        return Err(AlgebraError::Unsupported(
            "elliptic classification failed: no kernel direction".into(),
        ));
    }
    let kmat = DMatrix::from_fn(kernel.len(), kernel.len(), |i, j| {
        eta_dot(&eta, &kernel[i], &kernel[j])
    });
    let ke = nalgebra::SymmetricEigen::new(kmat);
    let mut f0: Option<DVector<f64>> = None;
    for k in 0..kernel.len() {
        if ke.eigenvalues[k] < -1e-9 {
            let mut v = DVector::zeros(d);
            for i in 0..kernel.len() {
                v += &kernel[i] * ke.eigenvectors[(i, k)];
            }
            v /= (-ke.eigenvalues[k]).sqrt();
            f0 = Some(v);
            break;
        }
    }
    let f0 = f0.ok_or_else(|| {
        AlgebraError::Unsupported("elliptic classification failed: no timelike kernel axis".into())
    })?;
    let used = vec![(-1.0, f0.clone())];
    let comp = complement_basis(d, &eta, &used);
    let (angles, rest_cols) = blocks_in_complement(&w, &comp, thr);
    let mut cols = vec![f0];
    cols.extend(rest_cols);
    Ok(assemble(NormalFormKind::LorentzianElliptic, angles, cols, &w, &eta))
}

/// Exact coordinate-model of a normal form: the block pattern with
/// rationalized angles, together with its decomposition into mutually
/// orthogonal simple parts.  Every part is re-verified exactly, realizing
/// the p = 2 orthogonal-decomposition statement for all kinds.
pub fn rational_block_decomposition(
    nf: &SkewNormalForm,
    space: MetricSpace,
    max_den: u64,
) -> Result<(Form<Rat>, Decomposition<Rat>)> {
    let d = space.dim();
    let cov = |coords: Vec<Rat>| Form::from_covector(space, &coords);
    let basis_cov = |i: usize| Form::basis_one_form(space, i);
    let mut parts: Vec<SimplePart<Rat>> = Vec::new();
    let push_pair = |parts: &mut Vec<SimplePart<Rat>>, a: &Rat, i: usize, j: usize| -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        let f1 = basis_cov(i).scaled(a);
        let f2 = basis_cov(j);
        parts.push(SimplePart::from_factors(space, vec![f1, f2])?);
        Ok(())
    };
    let snap = |x: f64| rationalize(x, max_den);
    match nf.kind {
        NormalFormKind::Zero => {}
        NormalFormKind::EuclideanBlocks => {
            for (k, a) in nf.angles.iter().enumerate() {
                if 2 * k + 2 <= d {
                    push_pair(&mut parts, &snap(*a), 2 * k + 1, 2 * k + 2)?;
                }
            }
        }
        NormalFormKind::LorentzianElliptic => {
            for (k, a) in nf.angles.iter().enumerate() {
                if 2 * k + 3 <= d {
                    push_pair(&mut parts, &snap(*a), 2 * k + 2, 2 * k + 3)?;
                }
            }
        }
        NormalFormKind::LorentzianHyperbolic => {
            push_pair(&mut parts, &snap(nf.angles[0]), 1, 2)?;
            for (k, a) in nf.angles[1..].iter().enumerate() {
                if 2 * k + 4 <= d {
                    push_pair(&mut parts, &snap(*a), 2 * k + 3, 2 * k + 4)?;
                }
            }
        }
        NormalFormKind::LorentzianParabolic => {
            let kappa = snap(nf.angles[0]);
            if !kappa.is_zero() {
                // κ (e⁰ + e¹) ∧ e² on a null plane.
                let mut coords = vec![Rat::zero(); d];
                coords[0] = kappa.clone();
                coords[1] = kappa;
                parts.push(SimplePart::from_factors(
                    space,
                    vec![cov(coords), basis_cov(3)],
                )?);
            }
            for (k, a) in nf.angles[1..].iter().enumerate() {
                if 2 * k + 5 <= d {
                    push_pair(&mut parts, &snap(*a), 2 * k + 4, 2 * k + 5)?;
                }
            }
        }
    }
    let mut total = Form::zero(space, 2);
    for p in &parts {
        total = total.plus(&p.form)?;
    }
    Ok((total, Decomposition { parts }))
}

/// Signed rotation rates of a 2-form already in skew-normal position:
/// the coefficients of the coordinate blocks `e_{2i−1} ∧ e_{2i}` (offset
/// by one slot in an elliptic lorentzian frame, where slot 1 is the fixed
/// timelike axis).
pub fn block_angles(two_form: &Form<Rat>) -> Result<Vec<Rat>> {
    let space = two_form.space();
    let d = space.dim();
    if two_form.degree() != 2 {
        return Err(AlgebraError::DegreeError(
            "block_angles expects a 2-form".into(),
        ));
    }
    let offset = if space.time_dims() == 1 { 1 } else { 0 };
    let mut angles = Vec::new();
    let mut seen = Form::zero(*space, 2);
    let mut i = offset + 1;
    while i + 1 <= d {
        let blade = crate::blade::Blade::from_sorted(&[i, i + 1]).unwrap();
        let c = two_form.coeff(&blade);
        if !c.is_zero() {
            seen.add_term(blade, c.clone());
        }
        angles.push(c);
        i += 2;
    }
    if &seen != two_form {
        return Err(AlgebraError::Unsupported(
            "form is not in skew-normal position".into(),
        ));
    }
    Ok(angles)
}

/// Map an angle multiset onto the isotropy-case labels used for
/// contractions: exact comparisons on rational angles.
pub fn classify_angles(angles: &[Rat]) -> Result<String> {
    let abs: Vec<Rat> = angles
        .iter()
        .map(|a| if a < &Rat::zero() { -a.clone() } else { a.clone() })
        .collect();
    let nonzero: Vec<&Rat> = abs.iter().filter(|a| !a.is_zero()).collect();
    match (angles.len(), nonzero.len()) {
        (_, 0) => Ok("zero".into()),
        (_, 1) => Ok("so(2)".into()),
        (2, 2) => Ok(if abs[0] == abs[1] { "su(2)" } else { "so(4)" }.into()),
        (3, 2) => {
            let (a, b) = (nonzero[0], nonzero[1]);
            Ok(if a == b { "su(2)" } else { "so(4)" }.into())
        }
        (3, 3) => {
            let mut s = abs.clone();
            s.sort();
            if s[0] == s[1] && s[1] == s[2] {
                return Ok("u(1)-diagonal".into());
            }
            let mut candidates = Vec::new();
            if s[0] == s[1] || s[1] == s[2] {
                candidates.push("su(2)xu(1)");
            }
            if s[2].clone() == s[0].clone() + s[1].clone() {
                candidates.push("su(3)");
            }
            match candidates.len() {
                0 => Ok("so(6)".into()),
                1 => Ok(candidates[0].into()),
                _ => Err(AlgebraError::AmbiguousCase(candidates.join(", "))),
            }
        }
        (m, k) if k == m || m > 3 => Err(AlgebraError::Unsupported(format!(
            "no classification table for {m} blocks"
        ))),
        _ => Err(AlgebraError::Unsupported(
            "unrecognized angle pattern".into(),
        )),
    }
}

/// Float-path variant of [`classify_angles`], with tolerance relative to
/// the largest angle.
pub fn classify_angles_f64(angles: &[f64], tol: f64) -> Result<String> {
    let amax = angles.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let thr = tol * amax.max(1.0);
    let snapped: Vec<Rat> = angles
        .iter()
        .map(|&a| {
            if a.abs() <= thr {
                Rat::zero()
            } else {
                rationalize(a, SNAP_DENOMINATOR_BOUND)
            }
        })
        .collect();
    // Snap near-coincidences exactly before classifying.
    let mut eq: Vec<Rat> = snapped.clone();
    for i in 0..eq.len() {
        for j in 0..i {
            let (x, y) = (angles[i].abs(), angles[j].abs());
            if (x - y).abs() <= thr {
                let sign = if angles[i] < 0.0 { -Rat::one() } else { Rat::one() };
                let mag = if eq[j] < Rat::zero() { -eq[j].clone() } else { eq[j].clone() };
                eq[i] = sign * mag;
            }
        }
    }
    classify_angles(&eq)
}

/// Classify a 2-form already in skew-normal position (exact path).
pub fn classify_case(two_form: &Form<Rat>) -> Result<String> {
    classify_angles(&block_angles(two_form)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify_orthogonal_sum;
    use crate::scalar::{rat, rint};

    fn e(space: MetricSpace, idx: &[usize], c: Rat) -> Form<Rat> {
        Form::monomial(space, idx, c).unwrap()
    }

    #[test]
    fn euclidean_already_normal() {
        let s = MetricSpace::euclidean(4);
        let w = e(s, &[1, 2], rint(1)).plus(&e(s, &[3, 4], rint(2))).unwrap();
        let nf = skew_normal_form(&w, DEFAULT_TOL).unwrap();
        assert_eq!(nf.kind, NormalFormKind::EuclideanBlocks);
        assert!((nf.angles[0] - 2.0).abs() < 1e-9);
        assert!((nf.angles[1] - 1.0).abs() < 1e-9);
        assert!(nf.residual < 1e-9);
    }

    #[test]
    fn euclidean_permutation_block() {
        let s = MetricSpace::euclidean(4);
        let w = e(s, &[1, 3], rint(1));
        let nf = skew_normal_form(&w, DEFAULT_TOL).unwrap();
        assert_eq!(nf.kind, NormalFormKind::EuclideanBlocks);
        assert!((nf.angles[0] - 1.0).abs() < 1e-9);
        assert!(nf.angles[1].abs() < 1e-9);
        assert!(nf.residual < 1e-9);
    }

    #[test]
    fn lorentzian_parabolic_null_block() {
        // (e1 + e2) ∧ e3 with index 1 timelike: nilpotent mixed
        // endomorphism, (η ω)³ = 0 but (η ω)² ≠ 0.
        let s = MetricSpace::lorentzian(4);
        let w = e(s, &[1, 3], rint(1)).plus(&e(s, &[2, 3], rint(1))).unwrap();
        let m = form_matrix(&w);
        let mut a = m.clone();
        for j in 0..4 {
            a[(0, j)] = -a[(0, j)];
        }
        let a2 = &a * &a;
        let a3 = &a2 * &a;
        assert!(a2.amax() > 1e-9 && a3.amax() < 1e-12, "nilpotency oracle");
        let nf = skew_normal_form(&w, DEFAULT_TOL).unwrap();
        assert_eq!(nf.kind, NormalFormKind::LorentzianParabolic);
        assert!(nf.residual < 1e-9, "residual {}", nf.residual);
    }

    #[test]
    fn lorentzian_hyperbolic_and_elliptic() {
        let s = MetricSpace::lorentzian(4);
        let boost = e(s, &[1, 2], rat(3, 2)).plus(&e(s, &[3, 4], rint(1))).unwrap();
        let nf = skew_normal_form(&boost, DEFAULT_TOL).unwrap();
        assert_eq!(nf.kind, NormalFormKind::LorentzianHyperbolic);
        assert!((nf.angles[0] - 1.5).abs() < 1e-9);
        assert!(nf.residual < 1e-9, "residual {}", nf.residual);

        let rot = e(s, &[2, 3], rint(2));
        let nf = skew_normal_form(&rot, DEFAULT_TOL).unwrap();
        assert_eq!(nf.kind, NormalFormKind::LorentzianElliptic);
        assert!((nf.angles[0] - 2.0).abs() < 1e-9);
        assert!(nf.residual < 1e-9, "residual {}", nf.residual);
    }

    #[test]
    fn rational_blocks_verify() {
        let s = MetricSpace::lorentzian(4);
        let w = e(s, &[1, 3], rint(1)).plus(&e(s, &[2, 3], rint(1))).unwrap();
        let nf = skew_normal_form(&w, DEFAULT_TOL).unwrap();
        let (f, dec) = rational_block_decomposition(&nf, s, SNAP_DENOMINATOR_BOUND).unwrap();
        assert!(!f.is_zero());
        assert!(verify_orthogonal_sum(&f, &dec).unwrap());
    }

    #[test]
    fn two_time_directions_are_refused() {
        let s = MetricSpace::new(4, 2).unwrap();
        let w = e(s, &[1, 2], rint(1));
        assert!(matches!(
            skew_normal_form(&w, DEFAULT_TOL),
            Err(AlgebraError::Unsupported(_))
        ));
    }

    #[test]
    fn case_labels() {
        assert_eq!(classify_angles(&[rint(2), rint(1)]).unwrap(), "so(4)");
        assert_eq!(classify_angles(&[rint(1), rint(-1)]).unwrap(), "su(2)");
        assert_eq!(classify_angles(&[rint(1), rint(0)]).unwrap(), "so(2)");
        assert_eq!(
            classify_angles(&[rint(1), rint(2), rint(5)]).unwrap(),
            "so(6)"
        );
        assert_eq!(
            classify_angles(&[rint(1), rint(2), rint(-3)]).unwrap(),
            "su(3)"
        );
        assert_eq!(
            classify_angles(&[rint(2), rint(2), rint(2)]).unwrap(),
            "u(1)-diagonal"
        );
        assert_eq!(
            classify_angles(&[rint(2), rint(-2), rint(5)]).unwrap(),
            "su(2)xu(1)"
        );
        assert!(matches!(
            classify_angles(&[rint(1), rint(1), rint(2)]),
            Err(AlgebraError::AmbiguousCase(_))
        ));
        let s = MetricSpace::euclidean(6);
        let f = e(s, &[1, 2], rint(3)).plus(&e(s, &[3, 4], rint(3))).unwrap();
        assert_eq!(classify_case(&f).unwrap(), "su(2)");
    }
}
