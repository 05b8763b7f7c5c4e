//! Shared matrix generators for the acceptance suite.

#![allow(dead_code)]

use matfn::linalg::pivoted_qr;
use matfn::{JordanStructure, RealMatrix};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(r: &mut ChaCha8Rng, n: usize, scale: f64) -> RealMatrix {
    RealMatrix::from_fn(n, n, |_, _| r.gen_range(-scale..scale))
}

/// Orthogonal matrix: the Q factor of a random matrix, signs fixed.
pub fn random_orthogonal(r: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    let a = random_matrix(r, n, 1.0);
    let f = pivoted_qr(&a);
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
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    a
}

/// Exactly symmetric matrix with entries in `(-scale, scale)`.
pub fn random_symmetric(r: &mut ChaCha8Rng, n: usize, scale: f64) -> RealMatrix {
    let mut a = RealMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = r.gen_range(-scale..scale);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    a
}

/// Random matrix whose spectrum keeps distance at least 0.1 from the closed
/// negative real axis and pairwise eigenvalue gaps of at least 0.05: a block
/// upper triangular core (1x1 cells for real eigenvalues, 2x2 rotation cells
/// for conjugate pairs, random fill strictly above the cells) conjugated by
/// a random orthogonal matrix.  Principal logs, square roots and p-th roots
/// all exist and have their spectra safely inside the principal domains.
pub fn random_safe_matrix(r: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    loop {
        // Sample the spectrum as a list of cells: (x, 0) for a real
        // eigenvalue, (x, y) with y > 0 for the pair x +- iy.
        let mut cells: Vec<(f64, f64)> = Vec::new();
        let mut points: Vec<(f64, f64)> = Vec::new();
        let mut left = n;
        while left > 0 {
            if left >= 2 && r.gen_bool(0.5) {
                let x = r.gen_range(-1.5..2.0);
                let y = r.gen_range(0.2..1.8);
                cells.push((x, y));
                points.push((x, y));
                points.push((x, -y));
                left -= 2;
            } else {
                let lam = r.gen_range(0.15..2.5);
                cells.push((lam, 0.0));
                points.push((lam, 0.0));
                left -= 1;
            }
        }
        let gap_ok = points.iter().enumerate().all(|(i, p)| {
            points[..i]
                .iter()
                .all(|q| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt() >= 0.05)
        });
        if !gap_ok {
            continue;
        }

        let mut t = RealMatrix::zeros(n, n);
        let mut pos = 0;
        let mut spans: Vec<(usize, usize)> = Vec::new();
        for &(x, y) in &cells {
            if y == 0.0 {
                t[(pos, pos)] = x;
                spans.push((pos, pos + 1));
                pos += 1;
            } else {
                t[(pos, pos)] = x;
                t[(pos, pos + 1)] = -y;
                t[(pos + 1, pos)] = y;
                t[(pos + 1, pos + 1)] = x;
                spans.push((pos, pos + 2));
                pos += 2;
            }
        }
        // Random fill strictly to the right of each diagonal cell keeps the
        // matrix block upper triangular, so the spectrum is exactly the
        // sampled one while the matrix itself is far from normal.
        for &(start, end) in &spans {
            for i in start..end {
                for j in end..n {
                    t[(i, j)] = r.gen_range(-0.5..0.5);
                }
            }
        }
        let q = random_orthogonal(r, n);
        return &(&q * &t) * &q.transpose();
    }
}

/// Eigenvalue palette for hand-built Jordan matrices.  The values, their
/// exponentials and their squares are all pairwise separated by at least 0.1,
/// so block images stay resolvable after applying `exp` or squaring.
pub const PALETTE: [f64; 8] = [0.6, 1.0, 1.4, 1.9, -0.7, -1.2, 2.3, -1.7];

/// Bidiagonal Jordan matrix with the given `(eigenvalue, size)` blocks.
pub fn jordan_matrix(blocks: &[(f64, usize)]) -> RealMatrix {
    let n: usize = blocks.iter().map(|b| b.1).sum();
    let mut j = RealMatrix::zeros(n, n);
    let mut pos = 0;
    for &(lam, size) in blocks {
        for k in 0..size {
            j[(pos + k, pos + k)] = lam;
            if k + 1 < size {
                j[(pos + k, pos + k + 1)] = 1.0;
            }
        }
        pos += size;
    }
    j
}

/// Random hand-built Jordan matrix: total size at most 8, block sizes at
/// most 4, eigenvalues from [`PALETTE`]; an eigenvalue is sometimes reused
/// for consecutive blocks so multi-block eigenvalues occur.
pub fn random_jordan(r: &mut ChaCha8Rng) -> (RealMatrix, Vec<(f64, usize)>) {
    let n = r.gen_range(2..=8usize);
    let mut palette = PALETTE.to_vec();
    palette.shuffle(r);
    let mut specs: Vec<(f64, usize)> = Vec::new();
    let mut used = 0;
    let mut left = n;
    while left > 0 {
        let size = r.gen_range(1..=left.min(4));
        let reuse = used > 0 && r.gen_bool(0.3);
        if !reuse {
            used += 1;
        }
        specs.push((palette[used - 1], size));
        left -= size;
    }
    (jordan_matrix(&specs), specs)
}

/// Relative one-norm difference `||a - b|| / max(1, ||b||)`.
pub fn rel_diff(a: &RealMatrix, b: &RealMatrix) -> f64 {
    (a - b).one_norm() / b.one_norm().max(1.0)
}

/// Checks that a recovered Jordan structure equals an expected multiset of
/// real `(eigenvalue, size)` blocks, comparing eigenvalues within `tol`.
pub fn structure_matches(
    s: &JordanStructure<f64>,
    expected: &[(f64, usize)],
    tol: f64,
) -> Result<(), String> {
    let mut got: Vec<(f64, f64, usize)> = s
        .blocks
        .iter()
        .map(|b| (b.eigenvalue.re, b.eigenvalue.im, b.size))
        .collect();
    let mut want = expected.to_vec();
    got.sort_by(|a, b| a.partial_cmp(b).unwrap());
    want.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if got.len() != want.len() {
        return Err(format!(
            "{} blocks recovered, {} expected: got {got:?}, want {want:?}",
            got.len(),
            want.len()
        ));
    }
    for (&(gr, gi, gs), &(wr, ws)) in got.iter().zip(&want) {
        if gi.abs() > tol || (gr - wr).abs() > tol || gs != ws {
            return Err(format!(
                "block mismatch: got ({gr}, {gi}, {gs}), want ({wr}, {ws})"
            ));
        }
    }
    Ok(())
}

/// Prints the one-line verdict for an acceptance criterion and panics with
/// the collected failures if there are any.
pub fn report(index: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {index} ({name}): PASS");
    } else {
        println!(
            "ACCEPTANCE {index} ({name}): FAIL ({} problem(s); first: {})",
            failures.len(),
            failures[0]
        );
        panic!(
            "acceptance criterion {index} ({name}) failed:\n{}",
            failures.join("\n")
        );
    }
}
