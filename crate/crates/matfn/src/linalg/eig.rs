//! Eigenvalues of a real matrix, clustered into multiplicities.

use crate::complex::Complex;
use crate::error::Result;
use crate::linalg::hessenberg::hessenberg;
use crate::linalg::schur::{francis_qr, quasi_triangular_eigenvalues};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tol::Tolerances;

/// An eigenvalue together with its algebraic multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenvalue<T: Scalar> {
    pub value: Complex<T>,
    pub multiplicity: usize,
}

/// Computes the eigenvalues of `a` with algebraic multiplicities.
///
/// Values within the clustering tolerance of each other are merged into one
/// eigenvalue at their multiplicity-weighted mean; an eigenvalue whose
/// imaginary part is at most the tolerance is reported as exactly real.
/// Complex eigenvalues come in exact conjugate pairs. The result is sorted
/// by (real part, imaginary part).
pub fn eigenvalues<T: Scalar>(
    a: &Matrix<T>,
    tol: &Tolerances<T>,
) -> Result<Vec<Eigenvalue<T>>> {
    let n = a.n();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut h = hessenberg(a);
    francis_qr(&mut h, 30 * n)?;
    let raw = quasi_triangular_eigenvalues(&h);
    Ok(cluster(&raw, tol.cluster_tol(a)))
}

/// Merges raw eigenvalues into clusters at tolerance `tol`.
pub(crate) fn cluster<T: Scalar>(raw: &[Complex<T>], tol: T) -> Vec<Eigenvalue<T>> {
    // Snap near-real values onto the axis, then split by sign of Im.
    let mut reals: Vec<T> = Vec::new();
    let mut upper: Vec<Complex<T>> = Vec::new();
    for &z in raw {
        if z.im.abs() <= tol {
            reals.push(z.re);
        } else if z.im > T::zero() {
            upper.push(z);
        }
        // Lower-half values are the exact conjugates of the upper-half ones
        // and are regenerated after clustering.
    }

    let mut out: Vec<Eigenvalue<T>> = Vec::new();

    // Real clusters: single-linkage merge on the sorted list.
    reals.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let mut i = 0;
    while i < reals.len() {
        let mut j = i + 1;
        while j < reals.len() && reals[j] - reals[j - 1] <= tol {
            j += 1;
        }
        let count = j - i;
        let sum = reals[i..j].iter().fold(T::zero(), |s, &v| s + v);
        let mean = sum / T::from_usize(count).unwrap();
        out.push(Eigenvalue { value: Complex::from_real(mean), multiplicity: count });
        i = j;
    }

    // Complex clusters: greedy union on pairwise distance. The lists are
    // tiny, so the quadratic pass is fine.
    let mut groups: Vec<(Complex<T>, usize)> = Vec::new();
    for &z in &upper {
        let mut placed = false;
        for g in groups.iter_mut() {
            if (z - g.0).modulus() <= tol {
                // Running multiplicity-weighted mean.
                let m = T::from_usize(g.1).unwrap();
                let m1 = T::from_usize(g.1 + 1).unwrap();
                g.0 = (g.0.scale(m) + z).scale(T::one() / m1);
                g.1 += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((z, 1));
        }
    }
    for (z, m) in groups {
        out.push(Eigenvalue { value: z.conj(), multiplicity: m });
        out.push(Eigenvalue { value: z, multiplicity: m });
    }

    out.sort_by(|p, q| {
        p.value
            .re
            .partial_cmp(&q.value.re)
            .unwrap()
            .then(p.value.im.partial_cmp(&q.value.im).unwrap())
    });
    out
}
