//! Matrix exponential, real logarithms, square roots and p-th roots.

use num_traits::{Float, FromPrimitive, One, ToPrimitive};

use crate::error::{Error, OffendingBlock, Result};
use crate::jordan::{
    jordan_structure, pair_negative_blocks, real_jordan_form, JordanStructure,
    RealBlockSpec, RealJordanForm, RealJordanStructure,
};
use crate::linalg::eig::eigenvalues;
use crate::linalg::lu::lu_factor;
use crate::matrix::Matrix;
use crate::scalar::{Entry, Scalar};
use crate::tol::Tolerances;

/// Which branch a matrix function result lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Spectrum verified inside the principal domain.
    Principal,
    /// Built from the real Jordan form without the principal-domain
    /// guarantee (negative real eigenvalues allowed).
    Constructed,
}

/// A computed matrix function together with its certificate data.
#[derive(Clone, Debug)]
pub struct FnResult<T: Scalar> {
    pub value: Matrix<T>,
    /// Relative round-trip residual in the operator 1-norm.
    pub residual: T,
    pub branch: Branch,
    /// Whether the eigenvalues of `value` were verified inside the
    /// uniqueness domain (the strip for logarithms, the right half-plane
    /// for square roots, the sector for p-th roots).
    pub domain_ok: bool,
    /// Set when the spectrum of the input passes close to the negative real
    /// axis, where branch classification is numerically delicate.
    pub near_branch_cut: bool,
}

/// Existence verdict for a real logarithm or real square root.
#[derive(Clone, Debug, PartialEq)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub invertible: bool,
    /// Set when the criterion does not apply (singular input for square
    /// roots): such a matrix may or may not have a square root.
    pub undecided: bool,
    /// Negative-eigenvalue block groups with odd count, as
    /// (eigenvalue, size, count).
    pub offending: Vec<OffendingBlock>,
}

// ---------------------------------------------------------------------------
// Exponential.

/// Matrix exponential by scaling and squaring with a Taylor core.
///
/// The argument is scaled by `2^-s` until its 1-norm is at most one half,
/// the series is summed until the remainder bound drops below machine
/// epsilon relative to the partial sum, and the result is squared `s`
/// times.
///
/// # Example
/// ```
/// use matfn::{expm, RealMatrix};
/// let z = RealMatrix::zeros(2, 2);
/// assert_eq!(expm(&z), RealMatrix::identity(2));
/// ```
pub fn expm<E: Entry>(a: &Matrix<E>) -> Matrix<E> {
    let norm = a.one_norm().to_f64().unwrap_or(0.0);
    let s = if norm <= 0.5 {
        0
    } else {
        ((norm / 0.5).log2().ceil() as usize).min(64)
    };
    expm_scaled(a, s)
}

/// Matrix exponential with the scaling parameter forced to `s`:
/// `exp(A) = (exp(A / 2^s))^(2^s)`.
pub fn expm_scaled<E: Entry>(a: &Matrix<E>, s: usize) -> Matrix<E> {
    let n = a.n();
    let half = E::Real::one() / E::Real::of(2.0).powi(s as i32);
    let b = a.scale(E::from_real(half));
    let bnorm = b.one_norm();

    let mut sum: Matrix<E> = Matrix::identity(n);
    let mut term: Matrix<E> = Matrix::identity(n);
    let mut bound = E::Real::one();
    for k in 1..=500usize {
        let kr = E::Real::from_usize(k).unwrap();
        term = (&term * &b).scale(E::from_real(E::Real::one() / kr));
        sum = &sum + &term;
        bound = bound * bnorm / kr;
        if bound < E::Real::epsilon() * sum.one_norm() {
            break;
        }
    }
    let mut out = sum;
    for _ in 0..s {
        out = &out * &out;
    }
    out
}

// ---------------------------------------------------------------------------
// Unipotent logarithms and roots.

/// Checks `(U - I)^r` vanishes, returning the nilpotent part `U - I`.
fn unipotent_part<E: Entry>(u: &Matrix<E>, r: usize) -> Result<Matrix<E>> {
    let n = u.n();
    let nil = u - &Matrix::identity(n);
    let tail = nil.pow(r);
    let thr = E::Real::from_usize(n).unwrap()
        * E::Real::epsilon()
        * (E::Real::one() + nil.one_norm()).powi(r as i32);
    if tail.max_abs() > thr {
        return Err(Error::NotUnipotent { bound: r });
    }
    Ok(nil)
}

/// Logarithm of a unipotent matrix with `(U - I)^r = 0`: the alternating
/// power series, which terminates after `r - 1` terms exactly.
pub fn log_unipotent<E: Entry>(u: &Matrix<E>, r: usize) -> Result<Matrix<E>> {
    let nil = unipotent_part(u, r)?;
    Ok(mercator_nilpotent(&nil, r))
}

/// p-th root of a unipotent matrix with `(U - I)^r = 0`: the binomial
/// series for `(I + N)^(1/p)`, which terminates after `r` terms exactly.
/// The result is again unipotent.
pub fn root_unipotent<E: Entry>(u: &Matrix<E>, p: u32, r: usize) -> Result<Matrix<E>> {
    assert!(p >= 1, "root order must be at least 1");
    let nil = unipotent_part(u, r)?;
    Ok(binomial_nilpotent(&nil, p, r))
}

/// `log(I + N)` for nilpotent `N` with `N^index = 0`.
fn mercator_nilpotent<E: Entry>(nil: &Matrix<E>, index: usize) -> Matrix<E> {
    let n = nil.n();
    let mut out: Matrix<E> = Matrix::zeros(n, n);
    let mut power: Matrix<E> = Matrix::identity(n);
    for k in 1..index {
        power = &power * nil;
        let kr = E::Real::from_usize(k).unwrap();
        let mut coeff = E::Real::one() / kr;
        if k % 2 == 0 {
            coeff = -coeff;
        }
        out = &out + &power.scale(E::from_real(coeff));
    }
    out
}

/// `(I + N)^(1/p)` for nilpotent `N` with `N^index = 0`.
fn binomial_nilpotent<E: Entry>(nil: &Matrix<E>, p: u32, index: usize) -> Matrix<E> {
    let n = nil.n();
    let inv_p = E::Real::one() / E::Real::from_u32(p).unwrap();
    let mut out: Matrix<E> = Matrix::identity(n);
    let mut power: Matrix<E> = Matrix::identity(n);
    let mut coeff = E::Real::one();
    for j in 1..index {
        let jr = E::Real::from_usize(j).unwrap();
        coeff = coeff * (inv_p - (jr - E::Real::one())) / jr;
        power = &power * nil;
        out = &out + &power.scale(E::from_real(coeff));
    }
    out
}

// ---------------------------------------------------------------------------
// Existence criteria.

/// Invertibility and odd-negative-block data read off a Jordan structure.
fn classify<T: Scalar>(s: &JordanStructure<T>, ctol: T) -> (bool, Vec<OffendingBlock>) {
    let mut invertible = true;
    let mut offending = Vec::new();
    for (value, size, count) in s.grouped() {
        if value.modulus() <= ctol {
            invertible = false;
        }
        if value.im == T::zero() && value.re < T::zero() && count % 2 != 0 {
            offending.push(OffendingBlock {
                eigenvalue: value.re.to_f64().unwrap_or(f64::NAN),
                size,
                count,
            });
        }
    }
    (invertible, offending)
}

/// Decides whether `a` has a real logarithm: `a` must be invertible and
/// every Jordan block with a negative real eigenvalue must occur an even
/// number of times.
pub fn has_real_log<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<ExistenceVerdict> {
    let s = jordan_structure(a, tol)?;
    let (invertible, offending) = classify(&s, tol.cluster_tol(a));
    Ok(ExistenceVerdict {
        exists: invertible && offending.is_empty(),
        invertible,
        undecided: false,
        offending,
    })
}

/// Decides whether an invertible `a` has a real square root, by the same
/// even-count criterion as [`has_real_log`]. For singular input the
/// criterion does not apply: the verdict reports `exists: false` with
/// `undecided: true`.
pub fn has_real_sqrt<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<ExistenceVerdict> {
    let s = jordan_structure(a, tol)?;
    let (invertible, offending) = classify(&s, tol.cluster_tol(a));
    Ok(ExistenceVerdict {
        exists: invertible && offending.is_empty(),
        invertible,
        undecided: !invertible,
        offending,
    })
}

// ---------------------------------------------------------------------------
// Logarithms.

/// Warn when some eigenvalue sits just off the negative real axis, where
/// tiny perturbations flip the branch classification.
fn near_negative_axis<T: Scalar>(s: &JordanStructure<T>, ctol: T) -> bool {
    let ten = T::of(10.0);
    s.blocks.iter().any(|b| {
        b.eigenvalue.re < T::zero()
            && b.eigenvalue.im != T::zero()
            && b.eigenvalue.im.abs() <= ten * ctol
    })
}

/// Angle of the pair `(lambda, mu)` in the branch convention `[-pi, pi)`:
/// a paired negative block (`mu == 0`, `lambda < 0`) takes `theta = -pi`.
fn block_angle<T: Scalar>(lambda: T, mu: T) -> T {
    let theta = mu.atan2(lambda);
    if theta == T::PI() && mu == T::zero() {
        -T::PI()
    } else {
        theta
    }
}

/// Nilpotent part `D^{-1} H` of a type-2 block in cell form: the
/// superdiagonal cells are `L(lambda, mu)^{-1}`.
fn type2_nilpotent<T: Scalar>(lambda: T, mu: T, half: usize) -> Matrix<T> {
    let n = 2 * half;
    let mut out = Matrix::zeros(n, n);
    let rho2 = lambda * lambda + mu * mu;
    for k in 0..half.saturating_sub(1) {
        let r = 2 * k;
        out[(r, r + 2)] = lambda / rho2;
        out[(r, r + 3)] = mu / rho2;
        out[(r + 1, r + 2)] = -mu / rho2;
        out[(r + 1, r + 3)] = lambda / rho2;
    }
    out
}

/// Nilpotent part `H / alpha` of a type-1 block.
fn type1_nilpotent<T: Scalar>(alpha: T, size: usize) -> Matrix<T> {
    let mut out = Matrix::zeros(size, size);
    for k in 0..size.saturating_sub(1) {
        out[(k, k + 1)] = T::one() / alpha;
    }
    out
}

/// Logarithm of one real Jordan matrix block.
fn log_block<T: Scalar>(block: &RealBlockSpec<T>) -> Result<Matrix<T>> {
    match *block {
        RealBlockSpec::Single { eigenvalue, size } => {
            if eigenvalue <= T::zero() {
                return Err(Error::NegativeEigenvalue {
                    eigenvalue: eigenvalue.to_f64().unwrap_or(f64::NAN),
                });
            }
            let m = mercator_nilpotent(&type1_nilpotent(eigenvalue, size), size);
            let mut out = m;
            let log_a = eigenvalue.ln();
            for i in 0..size {
                out[(i, i)] = out[(i, i)] + log_a;
            }
            Ok(out)
        }
        RealBlockSpec::Pair { lambda, mu, half } => {
            let rho = lambda.hypot(mu);
            let theta = block_angle(lambda, mu);
            let m = mercator_nilpotent(&type2_nilpotent(lambda, mu, half), half);
            let mut out = m;
            let log_rho = rho.ln();
            for k in 0..half {
                let r = 2 * k;
                out[(r, r)] = out[(r, r)] + log_rho;
                out[(r, r + 1)] = out[(r, r + 1)] - theta;
                out[(r + 1, r)] = out[(r + 1, r)] + theta;
                out[(r + 1, r + 1)] = out[(r + 1, r + 1)] + log_rho;
            }
            Ok(out)
        }
    }
}

/// p-th root of one real Jordan matrix block, as the commuting product of
/// the semisimple root and the unipotent binomial series.
fn root_block<T: Scalar>(block: &RealBlockSpec<T>, p: u32) -> Result<Matrix<T>> {
    let inv_p = T::one() / T::from_u32(p).unwrap();
    match *block {
        RealBlockSpec::Single { eigenvalue, size } => {
            if eigenvalue <= T::zero() {
                return Err(Error::NegativeEigenvalue {
                    eigenvalue: eigenvalue.to_f64().unwrap_or(f64::NAN),
                });
            }
            let m = binomial_nilpotent(&type1_nilpotent(eigenvalue, size), p, size);
            Ok(m.scale(eigenvalue.powf(inv_p)))
        }
        RealBlockSpec::Pair { lambda, mu, half } => {
            let rho = lambda.hypot(mu);
            let theta = block_angle(lambda, mu) * inv_p;
            let root_rho = rho.powf(inv_p);
            let (c, s) = (theta.cos() * root_rho, theta.sin() * root_rho);
            let n = 2 * half;
            let mut semi = Matrix::zeros(n, n);
            for k in 0..half {
                let r = 2 * k;
                semi[(r, r)] = c;
                semi[(r, r + 1)] = -s;
                semi[(r + 1, r)] = s;
                semi[(r + 1, r + 1)] = c;
            }
            let m = binomial_nilpotent(&type2_nilpotent(lambda, mu, half), p, half);
            Ok(&semi * &m)
        }
    }
}

/// Applies a per-block builder across a real Jordan structure.
fn blockwise<T: Scalar>(
    structure: &RealJordanStructure<T>,
    f: impl Fn(&RealBlockSpec<T>) -> Result<Matrix<T>>,
) -> Result<Matrix<T>> {
    let mut out = Matrix::zeros(structure.dim, structure.dim);
    let mut c = 0;
    for b in &structure.blocks {
        out.set_block(c, c, &f(b)?);
        c += b.dim();
    }
    Ok(out)
}

/// Conjugates a block-diagonal function value back: `X = P Y P^{-1}`.
fn conjugate_back<T: Scalar>(form: &RealJordanForm<T>, y: &Matrix<T>) -> Result<Matrix<T>> {
    let f = lu_factor(&form.p, T::zero()).map_err(|_| Error::ChainFailure)?;
    let p_inv = f.inverse();
    Ok(&(&form.p * y) * &p_inv)
}

pub(crate) fn relative_diff<T: Scalar>(got: &Matrix<T>, want: &Matrix<T>) -> T {
    let denom = want.one_norm();
    let diff = (got - want).one_norm();
    if denom > T::zero() {
        diff / denom
    } else {
        diff
    }
}

/// Strict strip membership `|Im| < pi` for every eigenvalue of `x`, with a
/// relative guard band so boundary spectra are not accepted by rounding
/// luck.
fn strip_ok<T: Scalar>(x: &Matrix<T>, tol: &Tolerances<T>) -> bool {
    let limit = T::PI() * (T::one() - T::epsilon().sqrt());
    match eigenvalues(x, tol) {
        Ok(eigs) => eigs.iter().all(|e| e.value.im.abs() < limit),
        Err(_) => false,
    }
}

/// Strict sector membership `|arg| < pi/p` for every eigenvalue of `x`.
fn sector_ok<T: Scalar>(x: &Matrix<T>, p: u32, tol: &Tolerances<T>) -> bool {
    let limit = T::PI() / T::from_u32(p).unwrap() * (T::one() - T::epsilon().sqrt());
    match eigenvalues(x, tol) {
        Ok(eigs) => eigs.iter().all(|e| e.value.arg().abs() < limit),
        Err(_) => false,
    }
}

/// A real logarithm of `a`, if one exists.
///
/// Requires `a` invertible with every negative-eigenvalue Jordan block
/// occurring an even number of times; such blocks are merged pairwise and
/// mapped through the branch angle `-pi`, so the result is genuinely real
/// but lies outside the principal strip whenever negative eigenvalues are
/// present.
pub fn real_log<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<FnResult<T>> {
    let structure = jordan_structure(a, tol)?;
    let ctol = tol.cluster_tol(a);
    let (invertible, offending) = classify(&structure, ctol);
    if !invertible || !offending.is_empty() {
        return Err(Error::NoRealLog { invertible, offending });
    }
    let near = near_negative_axis(&structure, ctol);
    let form = pair_negative_blocks(&real_jordan_form(a, tol)?)?;
    let y = blockwise(&form.structure, log_block)?;
    let x = conjugate_back(&form, &y)?;
    let residual = relative_diff(&expm(&x), a);
    let domain_ok = strip_ok(&x, tol);
    Ok(FnResult {
        value: x,
        residual,
        branch: Branch::Constructed,
        domain_ok,
        near_branch_cut: near,
    })
}

/// The principal logarithm: requires an invertible `a` with no negative
/// real eigenvalues, and returns the unique logarithm whose spectrum lies
/// in the open horizontal strip `|Im| < pi`.
///
/// # Example
/// ```
/// use matfn::{principal_log, RealMatrix, Tolerances};
/// let a = RealMatrix::from_rows(2, 2, &[2.0, 0.0, 0.0, 3.0]);
/// let r = principal_log(&a, &Tolerances::default()).unwrap();
/// assert!((r.value[(0, 0)] - 2.0_f64.ln()).abs() < 1e-14);
/// assert!(r.domain_ok);
/// ```
pub fn principal_log<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<FnResult<T>> {
    let structure = jordan_structure(a, tol)?;
    let ctol = tol.cluster_tol(a);
    check_principal_domain(&structure, ctol)?;
    let near = near_negative_axis(&structure, ctol);
    let form = real_jordan_form(a, tol)?;
    let y = blockwise(&form.structure, log_block)?;
    let x = conjugate_back(&form, &y)?;
    let residual = relative_diff(&expm(&x), a);
    let domain_ok = strip_ok(&x, tol);
    Ok(FnResult {
        value: x,
        residual,
        branch: Branch::Principal,
        domain_ok,
        near_branch_cut: near,
    })
}

/// Rejects singular matrices and negative real eigenvalues.
fn check_principal_domain<T: Scalar>(s: &JordanStructure<T>, ctol: T) -> Result<()> {
    for b in &s.blocks {
        if b.eigenvalue.modulus() <= ctol {
            return Err(Error::Singular);
        }
        if b.eigenvalue.im == T::zero() && b.eigenvalue.re < T::zero() {
            return Err(Error::NegativeEigenvalue {
                eigenvalue: b.eigenvalue.re.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Square roots and p-th roots.

/// A real square root of an invertible `a`, if one exists (same block
/// parity criterion as the real logarithm). Negative eigenvalue pairs map
/// through a rotation by `-pi/2`, outside the principal half-plane.
pub fn real_sqrt<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<FnResult<T>> {
    let structure = jordan_structure(a, tol)?;
    let ctol = tol.cluster_tol(a);
    let (invertible, offending) = classify(&structure, ctol);
    if !invertible || !offending.is_empty() {
        return Err(Error::NoRealSqrt { invertible, offending });
    }
    let near = near_negative_axis(&structure, ctol);
    let form = pair_negative_blocks(&real_jordan_form(a, tol)?)?;
    let y = blockwise(&form.structure, |b| root_block(b, 2))?;
    let x = conjugate_back(&form, &y)?;
    let residual = relative_diff(&(&x * &x), a);
    let domain_ok = sector_ok(&x, 2, tol);
    Ok(FnResult {
        value: x,
        residual,
        branch: Branch::Constructed,
        domain_ok,
        near_branch_cut: near,
    })
}

/// The principal square root: unique square root with spectrum in the open
/// right half-plane. Requires an invertible `a` with no negative real
/// eigenvalues.
pub fn principal_sqrt<T: Scalar>(a: &Matrix<T>, tol: &Tolerances<T>) -> Result<FnResult<T>> {
    principal_root(a, 2, tol)
}

/// The principal p-th root (`p >= 2`): unique p-th root with spectrum in
/// the open sector `|arg| < pi/p`. Requires an invertible `a` with no
/// negative real eigenvalues.
pub fn principal_root<T: Scalar>(a: &Matrix<T>, p: u32, tol: &Tolerances<T>) -> Result<FnResult<T>> {
    assert!(p >= 2, "root order must be at least 2");
    let structure = jordan_structure(a, tol)?;
    let ctol = tol.cluster_tol(a);
    check_principal_domain(&structure, ctol)?;
    let near = near_negative_axis(&structure, ctol);
    let form = real_jordan_form(a, tol)?;
    let y = blockwise(&form.structure, |b| root_block(b, p))?;
    let x = conjugate_back(&form, &y)?;
    let residual = relative_diff(&x.pow(p as usize), a);
    let domain_ok = sector_ok(&x, p, tol);
    Ok(FnResult {
        value: x,
        residual,
        branch: Branch::Principal,
        domain_ok,
        near_branch_cut: near,
    })
}
