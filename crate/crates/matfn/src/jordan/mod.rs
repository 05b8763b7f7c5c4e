//! Jordan structure, Jordan chains, and the real Jordan form.

mod chains;
mod decomp;
mod real;
mod structure;

use crate::complex::Complex;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub use chains::jordan_chains;
pub use decomp::{additive_jordan_decomposition, multiplicative_jordan_decomposition};
pub use real::{pair_negative_blocks, real_jordan_form};
pub use structure::jordan_structure;

/// One Jordan block over the complex numbers: an elementary divisor
/// `(X - eigenvalue)^size`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JordanBlockSpec<T: Scalar> {
    pub eigenvalue: Complex<T>,
    pub size: usize,
}

/// The multiset of Jordan blocks of a matrix, sorted by
/// (real part, imaginary part, size descending).
#[derive(Clone, Debug, PartialEq)]
pub struct JordanStructure<T: Scalar> {
    pub blocks: Vec<JordanBlockSpec<T>>,
    pub dim: usize,
}

impl<T: Scalar> JordanStructure<T> {
    pub(crate) fn new(mut blocks: Vec<JordanBlockSpec<T>>, dim: usize) -> Self {
        blocks.sort_by(|a, b| {
            a.eigenvalue
                .re
                .partial_cmp(&b.eigenvalue.re)
                .unwrap()
                .then(a.eigenvalue.im.partial_cmp(&b.eigenvalue.im).unwrap())
                .then(b.size.cmp(&a.size))
        });
        JordanStructure { blocks, dim }
    }

    /// The Jordan matrix realizing this structure, blocks in stored order.
    pub fn jordan_matrix(&self) -> Matrix<Complex<T>> {
        let mut j = Matrix::zeros(self.dim, self.dim);
        let mut c = 0;
        for b in &self.blocks {
            for k in 0..b.size {
                j[(c + k, c + k)] = b.eigenvalue;
                if k + 1 < b.size {
                    j[(c + k, c + k + 1)] = Complex::from_real(T::one());
                }
            }
            c += b.size;
        }
        j
    }

    /// Blocks grouped into (eigenvalue, size, count) triples, preserving the
    /// sorted order. Grouping compares stored eigenvalues exactly, which is
    /// sound because blocks of one cluster share one stored value.
    pub fn grouped(&self) -> Vec<(Complex<T>, usize, usize)> {
        let mut out: Vec<(Complex<T>, usize, usize)> = Vec::new();
        for b in &self.blocks {
            match out.last_mut() {
                Some(g) if g.0 == b.eigenvalue && g.1 == b.size => g.2 += 1,
                _ => out.push((b.eigenvalue, b.size, 1)),
            }
        }
        out
    }
}

/// One block of a real Jordan form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RealBlockSpec<T: Scalar> {
    /// A type-1 block `J_size(eigenvalue)` for a real eigenvalue.
    Single { eigenvalue: T, size: usize },
    /// A type-2 block for the conjugate pair `lambda +/- i mu`, of total
    /// dimension `2 * half`, built from 2x2 cells `[[lambda, -mu], [mu,
    /// lambda]]` with 2x2 identity cells on the superdiagonal. `mu > 0`
    /// canonically, except `mu == 0` for a paired negative real block.
    Pair { lambda: T, mu: T, half: usize },
}

impl<T: Scalar> RealBlockSpec<T> {
    /// Total dimension the block occupies.
    pub fn dim(&self) -> usize {
        match *self {
            RealBlockSpec::Single { size, .. } => size,
            RealBlockSpec::Pair { half, .. } => 2 * half,
        }
    }

    pub(crate) fn sort_key(&self) -> (T, T, usize) {
        match *self {
            RealBlockSpec::Single { eigenvalue, size } => (eigenvalue, T::zero(), size),
            RealBlockSpec::Pair { lambda, mu, half } => (lambda, mu, half),
        }
    }

    /// Writes the block into `j` with top-left corner at (c, c).
    fn emit(&self, j: &mut Matrix<T>, c: usize) {
        match *self {
            RealBlockSpec::Single { eigenvalue, size } => {
                for k in 0..size {
                    j[(c + k, c + k)] = eigenvalue;
                    if k + 1 < size {
                        j[(c + k, c + k + 1)] = T::one();
                    }
                }
            }
            RealBlockSpec::Pair { lambda, mu, half } => {
                for k in 0..half {
                    let r = c + 2 * k;
                    j[(r, r)] = lambda;
                    j[(r, r + 1)] = -mu;
                    j[(r + 1, r)] = mu;
                    j[(r + 1, r + 1)] = lambda;
                    if k + 1 < half {
                        j[(r, r + 2)] = T::one();
                        j[(r + 1, r + 3)] = T::one();
                    }
                }
            }
        }
    }
}

/// The multiset of real Jordan blocks, sorted by
/// (real part, pair part, size descending).
#[derive(Clone, Debug, PartialEq)]
pub struct RealJordanStructure<T: Scalar> {
    pub blocks: Vec<RealBlockSpec<T>>,
    pub dim: usize,
}

impl<T: Scalar> RealJordanStructure<T> {
    /// The real Jordan matrix realizing this structure.
    pub fn jordan_matrix(&self) -> Matrix<T> {
        let mut j = Matrix::zeros(self.dim, self.dim);
        let mut c = 0;
        for b in &self.blocks {
            b.emit(&mut j, c);
            c += b.dim();
        }
        j
    }

    /// Only the cell-diagonal part: block superdiagonals dropped. This is
    /// the semisimple factor of the block in the chain basis.
    pub fn diagonal_part(&self) -> Matrix<T> {
        let mut j = Matrix::zeros(self.dim, self.dim);
        let mut c = 0;
        for b in &self.blocks {
            match *b {
                RealBlockSpec::Single { eigenvalue, size } => {
                    for k in 0..size {
                        j[(c + k, c + k)] = eigenvalue;
                    }
                }
                RealBlockSpec::Pair { lambda, mu, half } => {
                    for k in 0..half {
                        let r = c + 2 * k;
                        j[(r, r)] = lambda;
                        j[(r, r + 1)] = -mu;
                        j[(r + 1, r)] = mu;
                        j[(r + 1, r + 1)] = lambda;
                    }
                }
            }
            c += b.dim();
        }
        j
    }
}

/// Complex Jordan form `A = P J P^{-1}` with the relative reconstruction
/// residual recorded.
#[derive(Clone, Debug)]
pub struct ComplexJordanForm<T: Scalar> {
    pub p: Matrix<Complex<T>>,
    pub structure: JordanStructure<T>,
    pub residual: T,
}

/// Real Jordan form `A = P J P^{-1}` with the relative reconstruction
/// residual recorded.
#[derive(Clone, Debug)]
pub struct RealJordanForm<T: Scalar> {
    pub p: Matrix<T>,
    pub structure: RealJordanStructure<T>,
    pub residual: T,
}
