//! The real Jordan form and pairing of negative real blocks.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::error::OffendingBlock;
use crate::scalar::Scalar;
use crate::tol::Tolerances;

use super::chains::{eigen_chains, eigen_groups, reconstruction_residual};
use super::structure::{jordan_structure, shift_complex, shift_real};
use super::{RealBlockSpec, RealJordanForm, RealJordanStructure};

/// Computes the real Jordan form `A = P J P^{-1}` with real `P` and `J`.
///
/// Real eigenvalues contribute type-1 blocks from real chains. A conjugate
/// pair `lambda +/- i mu` (stored with `mu > 0`) contributes one type-2
/// block per complex chain: a chain vector `w = u + i v` yields the column
/// pair `(v, u)`, which realizes the 2x2 cells as
/// `[[lambda, -mu], [mu, lambda]]`.
pub fn real_jordan_form<T: Scalar>(
    a: &Matrix<T>,
    tol: &Tolerances<T>,
) -> Result<RealJordanForm<T>> {
    let structure = jordan_structure(a, tol)?;
    let ctol = tol.cluster_tol(a);
    let mut items: Vec<(RealBlockSpec<T>, Vec<Vec<T>>)> = Vec::new();

    for (value, sizes) in eigen_groups(&structure) {
        if value.im < T::zero() {
            // Covered by the mu > 0 representative.
            continue;
        }
        if value.im == T::zero() {
            let m = shift_real(a, value.re);
            let chains = eigen_chains(&m, &sizes, tol, ctol)?;
            for (chain, &size) in chains.into_iter().zip(sizes.iter()) {
                debug_assert_eq!(chain.len(), size);
                items.push((RealBlockSpec::Single { eigenvalue: value.re, size }, chain));
            }
        } else {
            let m = shift_complex(a, value);
            let chains = eigen_chains(&m, &sizes, tol, ctol)?;
            for (chain, &size) in chains.into_iter().zip(sizes.iter()) {
                debug_assert_eq!(chain.len(), size);
                let mut cols: Vec<Vec<T>> = Vec::with_capacity(2 * size);
                for w in &chain {
                    cols.push(w.iter().map(|z| z.im).collect());
                    cols.push(w.iter().map(|z| z.re).collect());
                }
                items.push((
                    RealBlockSpec::Pair { lambda: value.re, mu: value.im, half: size },
                    cols,
                ));
            }
        }
    }

    let (p, structure) = build(a.n(), items)?;
    let j = structure.jordan_matrix();
    let residual = reconstruction_residual(a, &p, &j)?;
    Ok(RealJordanForm { p, structure, residual })
}

/// Merges identical negative-real type-1 blocks pairwise into type-2 blocks
/// with `mu = 0`, interleaving their chains. Fails with `ParityViolation`
/// listing every (eigenvalue, size, count) whose count is odd.
///
/// The merge is an exact column permutation of the input form (interleaving
/// two copies of `J_r(alpha)` is precisely the type-2 block with `mu = 0`),
/// so the reconstruction residual carries over unchanged.
pub fn pair_negative_blocks<T: Scalar>(
    form: &RealJordanForm<T>,
) -> Result<RealJordanForm<T>> {
    // Recover each block's columns from the stored order.
    let mut items: Vec<(RealBlockSpec<T>, Vec<Vec<T>>)> = Vec::new();
    let mut col = 0;
    for b in &form.structure.blocks {
        let cols: Vec<Vec<T>> = (col..col + b.dim()).map(|j| form.p.col(j)).collect();
        items.push((*b, cols));
        col += b.dim();
    }

    // Collect negative type-1 blocks grouped by (eigenvalue, size); stored
    // eigenvalues of one cluster are bit-identical, so exact grouping works.
    let mut offending: Vec<OffendingBlock> = Vec::new();
    let mut groups: Vec<(T, usize, Vec<usize>)> = Vec::new();
    for (idx, (b, _)) in items.iter().enumerate() {
        if let RealBlockSpec::Single { eigenvalue, size } = *b {
            if eigenvalue < T::zero() {
                match groups
                    .iter_mut()
                    .find(|(e, s, _)| *e == eigenvalue && *s == size)
                {
                    Some(g) => g.2.push(idx),
                    None => groups.push((eigenvalue, size, vec![idx])),
                }
            }
        }
    }
    for (e, s, idxs) in &groups {
        if idxs.len() % 2 != 0 {
            offending.push(OffendingBlock {
                eigenvalue: e.to_f64().unwrap_or(f64::NAN),
                size: *s,
                count: idxs.len(),
            });
        }
    }
    if !offending.is_empty() {
        return Err(Error::ParityViolation { offending });
    }

    let mut consumed = vec![false; items.len()];
    let mut merged: Vec<(RealBlockSpec<T>, Vec<Vec<T>>)> = Vec::new();
    for (e, s, idxs) in &groups {
        for pair in idxs.chunks(2) {
            let (i, j) = (pair[0], pair[1]);
            consumed[i] = true;
            consumed[j] = true;
            // Interleave the two chains: x_1 y_1 x_2 y_2 ...
            let mut cols = Vec::with_capacity(2 * s);
            for k in 0..*s {
                cols.push(items[i].1[k].clone());
                cols.push(items[j].1[k].clone());
            }
            merged.push((RealBlockSpec::Pair { lambda: *e, mu: T::zero(), half: *s }, cols));
        }
    }
    for (idx, item) in items.into_iter().enumerate() {
        if !consumed[idx] {
            merged.push(item);
        }
    }

    let (p, structure) = build(form.structure.dim, merged)?;
    Ok(RealJordanForm { p, structure, residual: form.residual })
}

/// Sorts blocks canonically and assembles `P` column by column.
fn build<T: Scalar>(
    n: usize,
    mut items: Vec<(RealBlockSpec<T>, Vec<Vec<T>>)>,
) -> Result<(Matrix<T>, RealJordanStructure<T>)> {
    items.sort_by(|x, y| {
        let (ar, ai, asz) = x.0.sort_key();
        let (br, bi, bsz) = y.0.sort_key();
        ar.partial_cmp(&br)
            .unwrap()
            .then(ai.partial_cmp(&bi).unwrap())
            .then(bsz.cmp(&asz))
    });

    let mut p: Matrix<T> = Matrix::zeros(n, n);
    let mut blocks = Vec::with_capacity(items.len());
    let mut col = 0;
    for (b, cols) in &items {
        if cols.len() != b.dim() {
            return Err(Error::ChainFailure);
        }
        for c in cols {
            p.set_col(col, c);
            col += 1;
        }
        blocks.push(*b);
    }
    if col != n {
        return Err(Error::ChainFailure);
    }

    let structure = RealJordanStructure { blocks, dim: n };
    Ok((p, structure))
}
