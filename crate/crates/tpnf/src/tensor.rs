//! Structure-constant tensors for bilinear products on an n-dimensional
//! space, plus the subspace series derived from them.
//!
//! Basis elements are labelled `1..=n` everywhere in this module's public
//! interface. A [`BilinearMap`] stores only the nonzero coefficients
//! `c[i][j][k]` of `B(e_i, e_j) = Σ_k c[i][j][k] e_k`.

use crate::error::Error;
use crate::linalg::{Matrix, RowSpace};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Hard cap on dimensions accepted by constructors.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    dim: usize,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl BilinearMap {
    /// The zero product on an `dim`-dimensional space.
    pub fn zero(dim: usize) -> Result<Self, Error> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimOutOfRange {
                dim,
                min: 1,
                max: MAX_DIM,
            });
        }
        Ok(BilinearMap {
            dim,
            coeffs: BTreeMap::new(),
        })
    }

    /// Build a tensor from `(i, j, k, c)` entries. Duplicate entries are
    /// summed; entries that cancel to zero are dropped.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut map = BilinearMap::zero(dim)?;
        for (i, j, k, c) in entries {
            map.add_entry(i, j, k, c)?;
        }
        Ok(map)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<(), Error> {
        let ok = |x: usize| (1..=self.dim).contains(&x);
        if !ok(i) || !ok(j) || !ok(k) {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                k,
                dim: self.dim,
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.entry((i, j, k)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero_map(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `e_k` in `B(e_i, e_j)`; zero when absent.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Sorted iteration over the nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.coeffs.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    /// `B(e_i, e_j)` as a coordinate vector.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for ((_, _, k), c) in self.coeffs.range((i, j, 1)..=(i, j, self.dim)) {
            out[k - 1] = c.clone();
        }
        out
    }

    /// Exact bilinear evaluation `B(x, y) = Σ_{i,j} x_i y_j B(e_i, e_j)`.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::LengthMismatch {
                    len: v.len(),
                    dim: self.dim,
                });
            }
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (&(i, j, k), c) in &self.coeffs {
            let (xi, yj) = (&x[i - 1], &y[j - 1]);
            if !xi.is_zero() && !yj.is_zero() {
                out[k - 1] += xi * yj * c;
            }
        }
        Ok(out)
    }

    /// Pullback of the product along the invertible matrix `p`:
    /// `B'(x, y) = p⁻¹ · B(px, py)`. The identity acts trivially.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<BilinearMap, Error> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
                expected: self.dim,
            });
        }
        let inv = p.inverse().ok_or(Error::SingularMatrix)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|c| p.column(c)).collect();
        let mut out = BilinearMap::zero(self.dim)?;
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let w = self.apply(&cols[i - 1], &cols[j - 1])?;
                if w.iter().all(Scalar::is_zero) {
                    continue;
                }
                let z = inv.mul_vec(&w);
                for (k, c) in z.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.add_entry(i, j, k + 1, c)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Power or derived series of the (not necessarily associative) algebra,
    /// computed until it reaches zero or stabilizes.
    pub fn series(&self, kind: SeriesKind) -> SubspaceChain {
        let n = self.dim;
        let full = RowSpace::from_vectors(n, (0..n).map(|i| basis_vector(n, i + 1)));
        let mut chain = vec![full];
        loop {
            let next = match kind {
                SeriesKind::Power => {
                    // A^{m+1} = Σ_{k=1}^{m} A^k · A^{m+1-k}
                    let m = chain.len();
                    let mut space = RowSpace::new(n);
                    for k in 1..=m {
                        self.span_product(&chain[k - 1], &chain[m - k], &mut space);
                    }
                    space
                }
                SeriesKind::Derived => {
                    let last = chain.last().unwrap();
                    let mut space = RowSpace::new(n);
                    self.span_product(last, last, &mut space);
                    space
                }
            };
            let stop = next.dim() == 0 || next.dim() == chain.last().unwrap().dim();
            chain.push(next);
            if stop {
                break;
            }
        }
        SubspaceChain::from_spaces(chain)
    }

    fn span_product(&self, left: &RowSpace, right: &RowSpace, out: &mut RowSpace) {
        for u in left.basis() {
            for w in right.basis() {
                let v = self
                    .apply(u, w)
                    .expect("basis vectors have the right length");
                if !v.iter().all(Scalar::is_zero) {
                    out.insert(v);
                }
            }
        }
    }

    /// Nilindex: the smallest `i` with `A^i = 0`, or `None` when the power
    /// series stabilizes at a nonzero subspace.
    pub fn nilindex(&self) -> Option<usize> {
        let chain = self.series(SeriesKind::Power);
        match chain.dims.last() {
            Some(0) => Some(chain.dims.len()),
            _ => None,
        }
    }

    /// True exactly when `dim A^i = (n+1) - i` for `1 <= i <= n+1`.
    pub fn is_null_filiform(&self) -> bool {
        let n = self.dim;
        let chain = self.series(SeriesKind::Power);
        chain.dims.len() == n + 1 && chain.dims.iter().enumerate().all(|(t, &d)| d == n - t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Power,
    Derived,
}

/// A non-increasing chain of subspaces with explicit bases.
#[derive(Clone, Debug)]
pub struct SubspaceChain {
    pub dims: Vec<usize>,
    pub bases: Vec<Vec<Vec<Scalar>>>,
}

impl SubspaceChain {
    fn from_spaces(spaces: Vec<RowSpace>) -> Self {
        SubspaceChain {
            dims: spaces.iter().map(RowSpace::dim).collect(),
            bases: spaces.into_iter().map(|s| s.basis().to_vec()).collect(),
        }
    }
}

/// A commutative-associative product together with a candidate bracket on
/// the same underlying space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPair {
    pub dot: BilinearMap,
    pub bracket: BilinearMap,
}

impl AlgebraPair {
    pub fn new(dot: BilinearMap, bracket: BilinearMap) -> Result<Self, Error> {
        if dot.dim() != bracket.dim() {
            return Err(Error::DimensionMismatch {
                left: dot.dim(),
                right: bracket.dim(),
            });
        }
        Ok(AlgebraPair { dot, bracket })
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }
}

/// The coordinate vector of `e_i` (1-based) in dimension `n`.
pub fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i - 1] = num_traits::One::one();
    v
}
