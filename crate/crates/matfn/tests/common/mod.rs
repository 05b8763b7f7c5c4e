//! Shared oracles and generators for the integration tests.
//!
//! The oracles deliberately avoid the code paths they are used to check:
//! characteristic polynomials come from the trace recurrence, polynomial
//! roots from a simultaneous-iteration solver, exact nullities from
//! fraction-free integer elimination, and square roots from a coupled
//! fixed-point iteration. None of them touch the Hessenberg/Francis
//! eigensolver or the Jordan-chain machinery under test.

#![allow(dead_code)]

use matfn::linalg::inverse;
use matfn::{Complex, RealMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Characteristic polynomial by the trace recurrence.

/// Coefficients `[c_0, ..., c_{n-1}, 1]` of `det(x I - A)`, computed with
/// the Faddeev-LeVerrier recurrence: `M_1 = I`,
/// `c_{n-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{n-k} I`.
pub fn char_poly(a: &RealMatrix) -> Vec<f64> {
    let n = a.n();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = RealMatrix::identity(n);
    for k in 1..=n {
        let am = a * &m;
        let c = -am.trace() / k as f64;
        coeffs[n - k] = c;
        m = am;
        for i in 0..n {
            m[(i, i)] += c;
        }
    }
    coeffs
}

// ---------------------------------------------------------------------------
// Polynomial roots by Durand-Kerner simultaneous iteration.

/// All complex roots of the monic polynomial with coefficients
/// `[c_0, ..., c_{n-1}, 1]` (ascending powers).
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex<f64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let scale = 1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    // Non-real, non-root-of-unity starting spread.
    let seed = Complex::new(0.4, 0.9);
    let mut z: Vec<Complex<f64>> = Vec::with_capacity(n);
    let mut acc = Complex::from_real(scale);
    for _ in 0..n {
        acc = acc * seed;
        z.push(acc);
    }

    let eval = |x: Complex<f64>| {
        let mut v = Complex::from_real(coeffs[n]);
        for k in (0..n).rev() {
            v = v * x + Complex::from_real(coeffs[k]);
        }
        v
    };

    for _ in 0..600 {
        let mut biggest = 0.0f64;
        for i in 0..n {
            let mut denom = Complex::from_real(1.0);
            for j in 0..n {
                if j != i {
                    denom = denom * (z[i] - z[j]);
                }
            }
            let step = eval(z[i]) / denom;
            z[i] = z[i] - step;
            biggest = biggest.max(step.modulus());
        }
        if biggest < 1e-14 * scale {
            break;
        }
    }
    z
}

/// Pairs two spectra (with multiplicity) and returns the largest pointwise
/// distance after sorting both by (re, im).
pub fn spectrum_distance(mut a: Vec<Complex<f64>>, mut b: Vec<Complex<f64>>) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra of different sizes");
    let key = |z: &Complex<f64>| (z.re, z.im);
    a.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    b.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    a.iter()
        .zip(&b)
        .map(|(x, y)| (*x - *y).modulus())
        .fold(0.0, f64::max)
}

// ---------------------------------------------------------------------------
// Exact nullity of an integer matrix by fraction-free elimination.

/// Nullity of an integer matrix, computed exactly with Bareiss
/// fraction-free Gaussian elimination in `i128`.
pub fn exact_nullity(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut rank = 0usize;
    let mut prev = 1i128;
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        // Forward elimination only: the Bareiss divisions stay exact because
        // every produced entry is a minor of the original matrix.
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                a[r][c] = (a[r][c] * a[row][col] - a[r][col] * a[row][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    cols - rank
}

/// Integer power of an integer matrix (exact).
pub fn int_pow(m: &[Vec<i128>], e: usize) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut out: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    for _ in 0..e {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i128;
                for (k, mk) in m.iter().enumerate() {
                    s += out[i][k] * mk[j];
                }
                next[i][j] = s;
            }
        }
        out = next;
    }
    out
}

/// Converts an integer matrix to floating point.
pub fn int_to_real(m: &[Vec<i128>]) -> RealMatrix {
    let n = m.len();
    RealMatrix::from_fn(n, n, |i, j| m[i][j] as f64)
}

// ---------------------------------------------------------------------------
// Square-root oracle: Denman-Beavers iteration.

/// Principal square root by the coupled Newton iteration
/// `X <- (X + Y^-1)/2`, `Y <- (Y + X^-1)/2`, started at `X = A`, `Y = I`.
/// Converges exactly for the matrices the principal square root is defined
/// on; returns `None` if an iterate becomes singular or 100 steps do not
/// settle.
pub fn denman_beavers_sqrt(a: &RealMatrix) -> Option<RealMatrix> {
    let n = a.n();
    let mut x = a.clone();
    let mut y = RealMatrix::identity(n);
    for _ in 0..100 {
        let xi = inverse(&x, 0.0).ok()?;
        let yi = inverse(&y, 0.0).ok()?;
        let xn = (&x + &yi).scale(0.5);
        let yn = (&y + &xi).scale(0.5);
        let step = (&xn - &x).one_norm();
        x = xn;
        y = yn;
        if step <= 1e-15 * x.one_norm() {
            return Some(x);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Random generators (all deterministic under the caller's seed).

/// Matrix with entries uniform in `[-scale, scale]`.
pub fn random_matrix(r: &mut ChaCha8Rng, n: usize, scale: f64) -> RealMatrix {
    RealMatrix::from_fn(n, n, |_, _| r.gen_range(-scale..scale))
}

/// Orthogonal matrix: QR of a random matrix with the signs fixed so the
/// factor is a rotation of determinant-free condition 1.
pub fn random_orthogonal(r: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    let a = random_matrix(r, n, 1.0);
    let f = matfn::linalg::pivoted_qr(&a);
    let mut q = f.q().clone();
    for j in 0..n {
        if f.r()[(j, j)] < 0.0 {
            for i in 0..n {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Symmetric positive definite matrix `B^T B + I/2`, exactly symmetric.
pub fn random_spd(r: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    let b = random_matrix(r, n, 1.0);
    let mut a = &b.transpose() * &b;
    for i in 0..n {
        a[(i, i)] += 0.5;
    }
    // Symmetrize exactly against rounding in the product.
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    a
}

/// Matrix with a guaranteed principal logarithm: `exp(R)` for a random `R`
/// scaled to 1-norm at most `radius` (keep `radius < pi` so the spectrum
/// of `R` stays inside the principal strip and `exp(R)` stays clear of the
/// negative real axis).
pub fn random_log_safe(r: &mut ChaCha8Rng, n: usize, radius: f64) -> (RealMatrix, RealMatrix) {
    let mut g = random_matrix(r, n, 1.0);
    let norm = g.one_norm();
    if norm > radius {
        g = g.scale(radius / norm);
    }
    (matfn::expm(&g), g)
}

/// Well-conditioned invertible matrix: orthogonal times a diagonal of
/// moderate positive entries, times another orthogonal.
pub fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    let u = random_orthogonal(r, n);
    let v = random_orthogonal(r, n);
    let mut d = RealMatrix::zeros(n, n);
    for i in 0..n {
        d[(i, i)] = r.gen_range(0.5..2.0);
    }
    &(&u * &d) * &v
}

// ---------------------------------------------------------------------------
// Comparison helpers.

pub fn assert_matrix_close(got: &RealMatrix, want: &RealMatrix, tol: f64, what: &str) {
    let diff = (got - want).max_abs();
    assert!(
        diff <= tol,
        "{what}: max entry difference {diff:.3e} exceeds {tol:.3e}\ngot:\n{got}\nwant:\n{want}"
    );
}
