//! Francis double-shift QR iteration on an upper Hessenberg matrix.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Drives an upper Hessenberg matrix to real Schur (quasi-triangular) form
/// in place. `budget` bounds the total number of double-shift sweeps.
///
/// Only the quasi-triangular factor is produced; the orthogonal transform is
/// not accumulated. Transformations are applied within the active window
/// only, which preserves every diagonal block of the final form but not the
/// coupling blocks above them; eigenvalue extraction never looks at those.
pub fn francis_qr<T: Scalar>(h: &mut Matrix<T>, budget: usize) -> Result<()> {
    let n = h.n();
    if n <= 2 {
        return Ok(());
    }
    let eps = T::epsilon();
    let hnorm = h.one_norm();
    let mut hi = n - 1;
    let mut sweeps = 0usize;
    let mut stagnation = 0usize;

    loop {
        // Flush negligible subdiagonal entries.
        for i in 0..hi {
            let local = h[(i, i)].abs() + h[(i + 1, i + 1)].abs();
            let scale = if local > T::zero() { local } else { hnorm };
            if h[(i + 1, i)].abs() <= eps * scale {
                h[(i + 1, i)] = T::zero();
            }
        }

        // Deflate converged 1x1 and 2x2 blocks off the bottom.
        let old_hi = hi;
        loop {
            if hi == 0 {
                return Ok(());
            }
            if h[(hi, hi - 1)] == T::zero() {
                hi -= 1;
                continue;
            }
            if hi == 1 {
                // Irreducible 2x2 in the top corner: quasi-triangular, done.
                return Ok(());
            }
            if h[(hi - 1, hi - 2)] == T::zero() {
                // Rows hi-1..hi form an isolated 2x2 block.
                hi -= 2;
                continue;
            }
            break;
        }
        stagnation = if hi == old_hi { stagnation + 1 } else { 0 };

        // The active window [lo, hi] has nonzero subdiagonals throughout,
        // so it is at least 3x3 here.
        let mut lo = hi - 1;
        while lo > 0 && h[(lo, lo - 1)] != T::zero() {
            lo -= 1;
        }

        sweeps += 1;
        if sweeps > budget {
            return Err(Error::NonConvergence { sweeps: budget });
        }

        // Double shift from the trailing 2x2, with an ad hoc exceptional
        // shift when the window stalls.
        let m = hi - 1;
        let (shift_sum, shift_prod) = if stagnation > 0 && stagnation.is_multiple_of(10) {
            let s = h[(hi, hi - 1)].abs() + h[(hi - 1, hi - 2)].abs();
            (T::of(1.5) * s, T::of(-0.4375) * s * s)
        } else {
            (
                h[(m, m)] + h[(hi, hi)],
                h[(m, m)] * h[(hi, hi)] - h[(m, hi)] * h[(hi, m)],
            )
        };

        // First column of (H - aI)(H - bI) restricted to the window.
        let mut x = h[(lo, lo)] * h[(lo, lo)] + h[(lo, lo + 1)] * h[(lo + 1, lo)]
            - shift_sum * h[(lo, lo)]
            + shift_prod;
        let mut y = h[(lo + 1, lo)] * (h[(lo, lo)] + h[(lo + 1, lo + 1)] - shift_sum);
        let mut z = h[(lo + 1, lo)] * h[(lo + 2, lo + 1)];

        for k in lo..=(hi - 2) {
            apply_reflector(h, &[x, y, z], k, lo, hi);
            x = h[(k + 1, k)];
            y = h[(k + 2, k)];
            z = if k + 3 <= hi { h[(k + 3, k)] } else { T::zero() };
        }
        apply_reflector(h, &[x, y], hi - 1, lo, hi);
    }
}

/// Applies a Householder similarity built from `col` (length 2 or 3) at row
/// `k`, restricted to the active window `[lo, hi]`.
fn apply_reflector<T: Scalar>(h: &mut Matrix<T>, col: &[T], k: usize, lo: usize, hi: usize) {
    let len = col.len();
    let norm = col.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    if norm == T::zero() {
        return;
    }
    let mut v = col.to_vec();
    let alpha = if v[0] >= T::zero() { -norm } else { norm };
    v[0] = v[0] - alpha;
    let vnorm = v.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    if vnorm == T::zero() {
        return;
    }
    for e in v.iter_mut() {
        *e = *e / vnorm;
    }
    let two = T::of(2.0);

    // Left: rows k..k+len, columns from the bulge column to hi.
    let c0 = if k > lo { k - 1 } else { lo };
    for j in c0..=hi {
        let mut dot = T::zero();
        for t in 0..len {
            dot = dot + v[t] * h[(k + t, j)];
        }
        let s = two * dot;
        for t in 0..len {
            let upd = s * v[t];
            h[(k + t, j)] = h[(k + t, j)] - upd;
        }
    }
    // Right: columns k..k+len, rows lo..min(k+len+1, hi).
    let r1 = (k + len + 1).min(hi);
    for i in lo..=r1 {
        let mut dot = T::zero();
        for t in 0..len {
            dot = dot + h[(i, k + t)] * v[t];
        }
        let s = two * dot;
        for t in 0..len {
            let upd = s * v[t];
            h[(i, k + t)] = h[(i, k + t)] - upd;
        }
    }
}

/// Reads the eigenvalues off a real quasi-triangular matrix. Complex pairs
/// come out exactly conjugate; real eigenvalues carry a zero imaginary part.
pub fn quasi_triangular_eigenvalues<T: Scalar>(h: &Matrix<T>) -> Vec<Complex<T>> {
    let n = h.n();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        if i + 1 >= n || h[(i + 1, i)] == T::zero() {
            out.push(Complex::from_real(h[(i, i)]));
            i += 1;
            continue;
        }
        let a = h[(i, i)];
        let b = h[(i, i + 1)];
        let c = h[(i + 1, i)];
        let d = h[(i + 1, i + 1)];
        let mid = (a + d) / T::of(2.0);
        let off = (a - d) / T::of(2.0);
        let disc = off * off + b * c;
        if disc >= T::zero() {
            let sq = disc.sqrt();
            let r1 = if mid >= T::zero() { mid + sq } else { mid - sq };
            let r2 = if r1 == T::zero() {
                mid
            } else {
                (a * d - b * c) / r1
            };
            out.push(Complex::from_real(r1));
            out.push(Complex::from_real(r2));
        } else {
            let s = (-disc).sqrt();
            out.push(Complex::new(mid, s));
            out.push(Complex::new(mid, -s));
        }
        i += 2;
    }
    out
}
