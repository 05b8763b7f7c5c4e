//! Jordan block sizes from the rank staircase of powers of `A - lambda I`.

use num_traits::ToPrimitive;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::eig::eigenvalues;
use crate::linalg::qr;
use crate::matrix::Matrix;
use crate::scalar::{Entry, Scalar};
use crate::tol::Tolerances;

use super::{JordanBlockSpec, JordanStructure};

/// Computes the Jordan structure (the multiset of elementary divisors) of a
/// real matrix.
///
/// For each clustered eigenvalue, the number of blocks of size at least `k`
/// is `rank((A - lambda I)^(k-1)) - rank((A - lambda I)^k)`. The staircase
/// must account for the full algebraic multiplicity of every eigenvalue or
/// the computation fails with `StructureInconsistent`.
pub fn jordan_structure<T: Scalar>(
    a: &Matrix<T>,
    tol: &Tolerances<T>,
) -> Result<JordanStructure<T>> {
    let n = a.n();
    let eigs = eigenvalues(a, tol)?;
    let ctol = tol.cluster_tol(a);
    let mut blocks = Vec::new();

    for ev in &eigs {
        if ev.value.im < T::zero() {
            // Mirrored below from the conjugate representative.
            continue;
        }
        let sizes = if ev.value.im == T::zero() {
            let shifted = shift_real(a, ev.value.re);
            staircase(&shifted, ev.multiplicity, ev.value.re, tol, ctol)?
        } else {
            let shifted = shift_complex(a, ev.value);
            staircase(&shifted, ev.multiplicity, ev.value.re, tol, ctol)?
        };
        for &s in &sizes {
            blocks.push(JordanBlockSpec { eigenvalue: ev.value, size: s });
            if ev.value.im > T::zero() {
                blocks.push(JordanBlockSpec { eigenvalue: ev.value.conj(), size: s });
            }
        }
    }

    let total: usize = blocks.iter().map(|b| b.size).sum();
    debug_assert_eq!(total, n);
    Ok(JordanStructure::new(blocks, n))
}

pub(crate) fn shift_real<T: Scalar>(a: &Matrix<T>, lambda: T) -> Matrix<T> {
    let mut m = a.clone();
    for i in 0..a.n() {
        m[(i, i)] = m[(i, i)] - lambda;
    }
    m
}

pub(crate) fn shift_complex<T: Scalar>(a: &Matrix<T>, lambda: Complex<T>) -> Matrix<Complex<T>> {
    let mut m = a.to_complex();
    for i in 0..a.n() {
        m[(i, i)] = m[(i, i)] - lambda;
    }
    m
}

/// Block sizes for one eigenvalue, descending. `m` is `A - lambda I` and
/// `multiplicity` the cluster's algebraic multiplicity.
pub(crate) fn staircase<E: Entry>(
    m: &Matrix<E>,
    multiplicity: usize,
    eigen_re: E::Real,
    tol: &Tolerances<E::Real>,
    ctol: E::Real,
) -> Result<Vec<usize>> {
    let n = m.n();
    let m1_norm = m.one_norm();
    let mut prev_rank = n;
    let mut power: Matrix<E> = Matrix::identity(n);
    // d[k-1] = number of blocks of size >= k.
    let mut d: Vec<usize> = Vec::new();
    let mut covered = 0usize;

    for k in 1..=multiplicity {
        power = &power * m;
        let thr = tol.staircase_tol(m1_norm, &power, k, ctol);
        let rank = qr::rank(&power, thr);
        let mut dk = prev_rank.saturating_sub(rank);
        if let Some(&dprev) = d.last() {
            // Blocks of size >= k cannot outnumber blocks of size >= k-1.
            dk = dk.min(dprev);
        }
        if dk == 0 {
            break;
        }
        covered += dk;
        d.push(dk);
        prev_rank = rank;
        if covered >= multiplicity {
            break;
        }
    }

    if covered != multiplicity {
        return Err(Error::StructureInconsistent {
            eigenvalue: eigen_re.to_f64().unwrap_or(f64::NAN),
            multiplicity,
            found: covered,
        });
    }

    // d[k-1] - d[k] blocks of size exactly k; emit descending.
    let mut sizes = Vec::new();
    for k in (1..=d.len()).rev() {
        let dk = d[k - 1];
        let dk1 = if k < d.len() { d[k] } else { 0 };
        for _ in 0..(dk - dk1) {
            sizes.push(k);
        }
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure_of(a: &Matrix<f64>) -> JordanStructure<f64> {
        jordan_structure(a, &Tolerances::default()).unwrap()
    }

    #[test]
    fn identity_splits_into_unit_blocks() {
        let s = structure_of(&Matrix::identity(3));
        assert_eq!(s.blocks.len(), 3);
        assert!(s.blocks.iter().all(|b| b.size == 1 && b.eigenvalue.re == 1.0));
    }

    #[test]
    fn single_defective_block() {
        let a = Matrix::from_rows(2, 2, &[2.0, 1.0, 0.0, 2.0]);
        let s = structure_of(&a);
        assert_eq!(s.blocks.len(), 1);
        assert_eq!(s.blocks[0].size, 2);
        assert!((s.blocks[0].eigenvalue.re - 2.0).abs() < 1e-7);
    }

    #[test]
    fn four_block_example() {
        // Blocks J_3(2), J_2(2), J_1(2), J_2(7) assembled directly.
        let mut a = Matrix::<f64>::zeros(8, 8);
        let mut c = 0;
        for (lam, size) in [(2.0, 3), (2.0, 2), (2.0, 1), (7.0, 2)] {
            for k in 0..size {
                a[(c + k, c + k)] = lam;
                if k + 1 < size {
                    a[(c + k, c + k + 1)] = 1.0;
                }
            }
            c += size;
        }
        let s = structure_of(&a);
        let g = s.grouped();
        assert_eq!(g.len(), 4);
        assert_eq!((g[0].0.re, g[0].1, g[0].2), (2.0, 3, 1));
        assert_eq!((g[1].0.re, g[1].1, g[1].2), (2.0, 2, 1));
        assert_eq!((g[2].0.re, g[2].1, g[2].2), (2.0, 1, 1));
        assert_eq!((g[3].0.re, g[3].1, g[3].2), (7.0, 2, 1));
    }

    #[test]
    fn complex_pair_blocks() {
        // Companion of X^2 - 2X + 5: eigenvalues 1 +/- 2i.
        let a = Matrix::from_rows(2, 2, &[2.0, -5.0, 1.0, 0.0]);
        let s = structure_of(&a);
        assert_eq!(s.blocks.len(), 2);
        assert!((s.blocks[0].eigenvalue.re - 1.0).abs() < 1e-12);
        assert!((s.blocks[0].eigenvalue.im + 2.0).abs() < 1e-12);
        assert!((s.blocks[1].eigenvalue.im - 2.0).abs() < 1e-12);
        assert_eq!(s.blocks[0].size, 1);
    }

    #[test]
    fn nilpotent_full_block() {
        let mut a = Matrix::<f64>::zeros(4, 4);
        for i in 0..3 {
            a[(i, i + 1)] = 1.0;
        }
        let s = structure_of(&a);
        assert_eq!(s.blocks.len(), 1);
        assert_eq!(s.blocks[0].size, 4);
        assert_eq!(s.blocks[0].eigenvalue.re, 0.0);
    }

    #[test]
    fn negative_pair_of_blocks() {
        let a = Matrix::from_rows(2, 2, &[-1.0, 0.0, 0.0, -1.0]);
        let s = structure_of(&a);
        assert_eq!(s.grouped(), vec![(Complex::from_real(-1.0), 1, 2)]);
    }
}
