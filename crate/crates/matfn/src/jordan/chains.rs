//! Jordan chain extraction and assembly of the complex Jordan form.

use num_traits::{Float, One, Zero};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::lu::lu_factor;
use crate::linalg::qr::{self, vec_norm};
use crate::matrix::Matrix;
use crate::scalar::{Entry, Scalar};
use crate::tol::Tolerances;

use super::structure::{shift_complex, shift_real};
use super::{ComplexJordanForm, JordanStructure};

/// Chains for one eigenvalue: outer index chain, then vector within the
/// chain (generator last), then components.
type Chains<T> = Vec<Vec<Vec<Complex<T>>>>;

/// Computes Jordan chains for `a` realizing `structure`, assembling the
/// transformation matrix `P` with `A = P J P^{-1}`.
///
/// `structure` must come from [`jordan_structure`](super::jordan_structure)
/// on the same matrix. Chains for a real eigenvalue are computed in real
/// arithmetic and embedded; chains for a conjugate pair are computed once
/// and conjugated, so `P` carries the pair symmetry exactly.
pub fn jordan_chains<T: Scalar>(
    a: &Matrix<T>,
    structure: &JordanStructure<T>,
    tol: &Tolerances<T>,
) -> Result<ComplexJordanForm<T>> {
    let n = a.n();
    if structure.dim != n {
        return Err(Error::ShapeMismatch { rows: n, cols: n, len: structure.dim });
    }
    let ctol = tol.cluster_tol(a);
    let mut p: Matrix<Complex<T>> = Matrix::zeros(n, n);
    let mut col = 0;

    // Chains computed for eigenvalues seen so far, to reuse for conjugates.
    let mut cache: Vec<(Complex<T>, Chains<T>)> = Vec::new();

    for (value, sizes) in eigen_groups(structure) {
        let chains: Chains<T> = if let Some((_, cached)) = cache
            .iter()
            .find(|(v, _)| *v == value.conj() && value.im != T::zero())
        {
            cached
                .iter()
                .map(|chain| {
                    chain
                        .iter()
                        .map(|v| v.iter().map(|z| z.conj()).collect())
                        .collect()
                })
                .collect()
        } else if value.im == T::zero() {
            let m = shift_real(a, value.re);
            eigen_chains(&m, &sizes, tol, ctol)?
                .into_iter()
                .map(|chain| {
                    chain
                        .into_iter()
                        .map(|v| v.into_iter().map(Complex::from_real).collect())
                        .collect()
                })
                .collect()
        } else {
            let m = shift_complex(a, value);
            eigen_chains(&m, &sizes, tol, ctol)?
        };

        for (chain, &size) in chains.iter().zip(sizes.iter()) {
            if chain.len() != size {
                return Err(Error::ChainFailure);
            }
            for v in chain {
                p.set_col(col, v);
                col += 1;
            }
        }
        cache.push((value, chains));
    }
    debug_assert_eq!(col, n);

    let j = structure.jordan_matrix();
    let residual = reconstruction_residual(&a.to_complex(), &p, &j)?;
    Ok(ComplexJordanForm { p, structure: structure.clone(), residual })
}

/// Groups consecutive blocks of `structure` by eigenvalue, returning the
/// stored value and the (descending) block sizes.
pub(crate) fn eigen_groups<T: Scalar>(
    structure: &JordanStructure<T>,
) -> Vec<(Complex<T>, Vec<usize>)> {
    let mut out: Vec<(Complex<T>, Vec<usize>)> = Vec::new();
    for b in &structure.blocks {
        match out.last_mut() {
            Some(g) if g.0 == b.eigenvalue => g.1.push(b.size),
            _ => out.push((b.eigenvalue, vec![b.size])),
        }
    }
    out
}

/// Relative residual `||A - P J P^{-1}|| / ||A||` in the operator 1-norm.
pub(crate) fn reconstruction_residual<E: Entry>(
    a: &Matrix<E>,
    p: &Matrix<E>,
    j: &Matrix<E>,
) -> Result<E::Real> {
    let f = lu_factor(p, E::Real::zero()).map_err(|_| Error::ChainFailure)?;
    let p_inv = f.inverse();
    let recon = &(p * j) * &p_inv;
    let denom = a.one_norm();
    let diff = (a - &recon).one_norm();
    Ok(if denom > E::Real::zero() { diff / denom } else { diff })
}

/// Extracts Jordan chains for one eigenvalue.
///
/// `m` is `A - lambda I` and `sizes` the descending block sizes. Chains are
/// built top-down through the kernel filtration: level-k generators are
/// chosen from the kernel of `m^k`, independent of the kernel of `m^(k-1)`
/// and of the descended images of taller chains; the candidate with the
/// largest such independent component is taken each time. Each returned
/// chain lists its vectors bottom-first, scaled so the eigenvector has unit
/// norm.
pub(crate) fn eigen_chains<E: Entry>(
    m: &Matrix<E>,
    sizes: &[usize],
    tol: &Tolerances<E::Real>,
    ctol: E::Real,
) -> Result<Vec<Vec<Vec<E>>>> {
    let n = m.n();
    let tallest = sizes[0];
    let m1_norm = m.one_norm();

    // Kernel bases of m^k for k = 0..=tallest.
    let mut kernels: Vec<Vec<Vec<E>>> = vec![Vec::new()];
    let mut power: Matrix<E> = Matrix::identity(n);
    for k in 1..=tallest {
        power = &power * m;
        let thr = tol.staircase_tol(m1_norm, &power, k, ctol);
        let (_, basis) = qr::kernel(&power, thr);
        let expected: usize = sizes.iter().map(|&r| r.min(k)).sum();
        if basis.len() != expected {
            return Err(Error::ChainFailure);
        }
        kernels.push(basis);
    }

    let count_ge = |k: usize| sizes.iter().filter(|&&r| r >= k).count();

    // vecs run top-first while descending the levels.
    let mut chains: Vec<Vec<Vec<E>>> = Vec::new();
    for k in (1..=tallest).rev() {
        for chain in chains.iter_mut() {
            let next = m.mul_vec(chain.last().unwrap());
            chain.push(next);
        }
        let need = count_ge(k) - count_ge(k + 1);
        if need > 0 {
            let mut fixed: Vec<Vec<E>> = kernels[k - 1].clone();
            fixed.extend(chains.iter().map(|c| c.last().unwrap().clone()));
            let picked = pick_independent(&fixed, &kernels[k], need)?;
            for u in picked {
                chains.push(vec![u]);
            }
        }
    }

    let mut out = Vec::with_capacity(chains.len());
    for chain in chains {
        let bottom = vec_norm(chain.last().unwrap());
        // `partial_cmp` so a NaN norm fails the chain rather than passing a
        // negated comparison.
        if bottom.partial_cmp(&E::Real::zero()) != Some(core::cmp::Ordering::Greater) {
            return Err(Error::ChainFailure);
        }
        let scale = E::from_real(E::Real::one() / bottom);
        let rescaled: Vec<Vec<E>> = chain
            .into_iter()
            .rev()
            .map(|v| v.into_iter().map(|e| e * scale).collect())
            .collect();
        out.push(rescaled);
    }
    Ok(out)
}

/// Greedily selects `need` vectors from `candidates` most independent of
/// `fixed` and of each other, returning their components orthogonal to the
/// running span. Fails with `ChainFailure` when no candidate keeps an
/// independent component above the working threshold.
fn pick_independent<E: Entry>(
    fixed: &[Vec<E>],
    candidates: &[Vec<E>],
    need: usize,
) -> Result<Vec<Vec<E>>> {
    let drop_tol = E::Real::epsilon().sqrt();
    let mut basis: Vec<Vec<E>> = Vec::new();
    for f in fixed {
        let norm = vec_norm(f);
        if norm > E::Real::zero() {
            let r = orthogonal_residual(f, &basis);
            let rnorm = vec_norm(&r);
            if rnorm > norm * E::Real::epsilon() {
                basis.push(normalize(r, rnorm));
            }
        }
    }

    let mut picked = Vec::with_capacity(need);
    for _ in 0..need {
        let mut best: Option<(E::Real, Vec<E>)> = None;
        for c in candidates {
            let r = orthogonal_residual(c, &basis);
            let rnorm = vec_norm(&r);
            if best.as_ref().is_none_or(|(b, _)| rnorm > *b) {
                best = Some((rnorm, r));
            }
        }
        let (rnorm, r) = best.ok_or(Error::ChainFailure)?;
        if rnorm <= drop_tol {
            return Err(Error::ChainFailure);
        }
        let u = normalize(r, rnorm);
        basis.push(u.clone());
        picked.push(u);
    }
    Ok(picked)
}

/// Twice-applied modified Gram-Schmidt projection of `v` off `basis`.
fn orthogonal_residual<E: Entry>(v: &[E], basis: &[Vec<E>]) -> Vec<E> {
    let mut r = v.to_vec();
    for _ in 0..2 {
        for q in basis {
            let mut dot = E::zero();
            for (a, b) in q.iter().zip(r.iter()) {
                dot = dot + a.conj() * *b;
            }
            for (e, q) in r.iter_mut().zip(q.iter()) {
                *e = *e - dot * *q;
            }
        }
    }
    r
}

fn normalize<E: Entry>(mut v: Vec<E>, norm: E::Real) -> Vec<E> {
    let s = E::from_real(E::Real::one() / norm);
    for e in v.iter_mut() {
        *e = *e * s;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::super::jordan_structure;
    use super::*;

    fn form_of(a: &Matrix<f64>) -> ComplexJordanForm<f64> {
        let tol = Tolerances::default();
        let s = jordan_structure(a, &tol).unwrap();
        jordan_chains(a, &s, &tol).unwrap()
    }

    #[test]
    fn diagonalizable_case() {
        let a = Matrix::from_rows(2, 2, &[1.0, 2.0, 0.0, 3.0]);
        let f = form_of(&a);
        assert!(f.residual < 1e-12, "residual {}", f.residual);
    }

    #[test]
    fn defective_block_reconstructs() {
        let a = Matrix::from_rows(2, 2, &[2.0, 1.0, 0.0, 2.0]);
        let f = form_of(&a);
        assert!(f.residual < 1e-7, "residual {}", f.residual);
        // P conjugates A into the Jordan matrix itself.
        let j = f.structure.jordan_matrix();
        let p_inv = crate::linalg::inverse(&f.p, 0.0).unwrap();
        let back = &(&p_inv * &a.to_complex()) * &f.p;
        assert!((&back - &j).max_abs() < 1e-7);
    }

    #[test]
    fn single_jordan_block_input() {
        let mut a = Matrix::<f64>::zeros(3, 3);
        for i in 0..3 {
            a[(i, i)] = 5.0;
            if i + 1 < 3 {
                a[(i, i + 1)] = 1.0;
            }
        }
        let f = form_of(&a);
        assert!(f.residual < 1e-10, "residual {}", f.residual);
    }

    #[test]
    fn complex_pair_chains_are_conjugate() {
        let a = Matrix::from_rows(2, 2, &[2.0, -5.0, 1.0, 0.0]);
        let f = form_of(&a);
        assert!(f.residual < 1e-12, "residual {}", f.residual);
        // Column for -2i block and column for +2i block are exact conjugates.
        let c0 = f.p.col(0);
        let c1 = f.p.col(1);
        for (a, b) in c0.iter().zip(c1.iter()) {
            assert_eq!(a.re, b.re);
            assert_eq!(a.im, -b.im);
        }
    }

    #[test]
    fn mixed_structure_residual() {
        // J_2(3) plus a rotation pair, conjugated by a fixed matrix.
        let mut j = Matrix::<f64>::zeros(4, 4);
        j[(0, 0)] = 3.0;
        j[(0, 1)] = 1.0;
        j[(1, 1)] = 3.0;
        j[(2, 2)] = 1.0;
        j[(2, 3)] = -2.0;
        j[(3, 2)] = 2.0;
        j[(3, 3)] = 1.0;
        let q = Matrix::from_rows(
            4,
            4,
            &[
                1.0, 0.5, 0.0, -0.5, 0.0, 1.0, 0.25, 0.0, 0.5, 0.0, 1.0, 0.5,
                0.0, -0.25, 0.0, 1.0,
            ],
        );
        let q_inv = crate::linalg::inverse(&q, 0.0).unwrap();
        let a = &(&q * &j) * &q_inv;
        let f = form_of(&a);
        assert!(f.residual < 1e-9, "residual {}", f.residual);
    }
}
