//! The null-filiform associative algebra and its automorphism group.
//!
//! The algebra has basis `e_1..e_n` with `e_i · e_j = e_{i+j}` whenever
//! `i+j <= n` and all other products zero. Its automorphisms are exactly
//! the maps sending `e_1` to `Σ A_i e_i` with `A_1 != 0` and `e_i` to the
//! i-th power of that image, which expands over compositions of the target
//! index into `i` positive parts.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::{BilinearMap, MAX_DIM};
use num_traits::{One, Zero};

/// Build the product `e_i · e_j = e_{i+j}` (when `i+j <= n`) on `n` basis
/// elements. For `n = 1` every product vanishes.
///
/// ```
/// let dot = tpnf::nullfiliform::build_mu0(4)?;
/// assert!(dot.is_null_filiform());
/// assert_eq!(dot.nilindex(), Some(5));
/// # Ok::<(), tpnf::Error>(())
/// ```
pub fn build_mu0(n: usize) -> Result<BilinearMap, Error> {
    let mut dot = BilinearMap::zero(n)?;
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                dot.add_entry(i, j, i + j, Scalar::one())?;
            }
        }
    }
    Ok(dot)
}

/// Parameter vector `(A_1, ..., A_n)` of an automorphism of the
/// null-filiform algebra; the leading entry must be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismParams {
    coeffs: Vec<Scalar>,
}

impl AutomorphismParams {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, Error> {
        if coeffs.len() > MAX_DIM {
            return Err(Error::DimOutOfRange {
                dim: coeffs.len(),
                min: 1,
                max: MAX_DIM,
            });
        }
        match coeffs.first() {
            Some(a1) if !a1.is_zero() => Ok(AutomorphismParams { coeffs }),
            _ => Err(Error::ZeroLeadingParam),
        }
    }

    /// The identity automorphism in dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs[0] = Scalar::one();
        AutomorphismParams { coeffs }
    }

    /// Diagonal-type parameters `(c, 0, ..., 0)`.
    pub fn scaling(n: usize, c: Scalar) -> Result<Self, Error> {
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs[0] = c;
        AutomorphismParams::new(coeffs)
    }

    /// Unipotent one-parameter change `e_1 -> e_1 + c·e_k` (so `A_1 = 1`,
    /// `A_k = c`, everything else zero). Requires `2 <= k <= n`.
    pub fn one_param(n: usize, k: usize, c: Scalar) -> Result<Self, Error> {
        if !(2..=n).contains(&k) {
            return Err(Error::IndexOutOfRange {
                i: k,
                j: 0,
                k: 0,
                dim: n,
            });
        }
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs[0] = Scalar::one();
        coeffs[k - 1] = c;
        AutomorphismParams::new(coeffs)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// 1-based access: `get(i)` is `A_i`.
    pub fn get(&self, i: usize) -> &Scalar {
        &self.coeffs[i - 1]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Column-by-column image matrix, built as successive products in the
    /// null-filiform algebra: column 1 is the parameter vector, column i is
    /// the product of column i-1 with column 1. Agrees with the
    /// composition-enumeration matrix and costs O(n^3).
    pub(crate) fn matrix_by_powers(&self) -> Matrix {
        let n = self.len();
        let dot = build_mu0(n).expect("dimension validated at construction");
        let mut m = Matrix::zeros(n, n);
        let mut col = self.coeffs.clone();
        for i in 1..=n {
            for (r, v) in col.iter().enumerate() {
                m.set(r, i - 1, v.clone());
            }
            if i < n {
                col = dot.apply(&col, &self.coeffs).expect("lengths match");
            }
        }
        m
    }

    /// Parameters of the composite automorphism "self after other applied
    /// first", i.e. of the matrix product `M(self) · M(other)`.
    pub fn compose(&self, other: &AutomorphismParams) -> Result<AutomorphismParams, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let image = self.matrix_by_powers().mul_vec(other.coeffs());
        AutomorphismParams::new(image)
    }

    /// Parameters of the inverse automorphism, via a forward triangular
    /// solve of `M(self) · w = e_1`.
    #[allow(clippy::needless_range_loop)] // index loop mirrors the triangular solve
    pub fn inverse(&self) -> AutomorphismParams {
        let n = self.len();
        let m = self.matrix_by_powers();
        let mut w = vec![Scalar::zero(); n];
        w[0] = self.coeffs[0].recip();
        for j in 1..n {
            let mut acc = Scalar::zero();
            for i in 0..j {
                if !w[i].is_zero() {
                    acc += m.get(j, i) * &w[i];
                }
            }
            if !acc.is_zero() {
                // Diagonal entry is A_1^{j+1}, never zero.
                w[j] = -acc / m.get(j, j);
            }
        }
        AutomorphismParams { coeffs: w }
    }
}

/// The automorphism matrix of the null-filiform algebra: column `i` holds
/// the image of `e_i`, whose `e_j` coefficient is the sum of
/// `A_{k_1}···A_{k_i}` over all compositions `k_1 + ... + k_i = j` into
/// positive parts.
///
/// Compositions are enumerated directly (branches through a zero `A_k`
/// are skipped since they contribute nothing), which is exponential in the
/// worst case; intended for the classification sizes `n <= 10`.
pub fn automorphism_matrix(params: &AutomorphismParams, n: usize) -> Result<Matrix, Error> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::DimOutOfRange {
            dim: n,
            min: 1,
            max: MAX_DIM,
        });
    }
    if params.len() != n {
        return Err(Error::ParamLength {
            len: params.len(),
            expected: n,
        });
    }
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        // Depth-first over compositions of any j <= n into i positive parts.
        fn walk(
            params: &AutomorphismParams,
            n: usize,
            parts_left: usize,
            sum: usize,
            prod: Scalar,
            col: usize,
            m: &mut Matrix,
        ) {
            if parts_left == 0 {
                m.add_to(sum - 1, col - 1, &prod);
                return;
            }
            let max_k = n - sum - (parts_left - 1);
            for k in 1..=max_k {
                let a_k = params.get(k);
                if a_k.is_zero() {
                    continue;
                }
                walk(params, n, parts_left - 1, sum + k, &prod * a_k, col, m);
            }
        }
        walk(params, n, i, 0, Scalar::one(), i, &mut m);
    }
    Ok(m)
}

/// True when `p` is invertible and leaves the product unchanged under a
/// change of basis.
pub fn is_automorphism(dot: &BilinearMap, p: &Matrix) -> bool {
    if p.rows() != dot.dim() || p.cols() != dot.dim() {
        return false;
    }
    match dot.change_of_basis(p) {
        Ok(transformed) => transformed == *dot,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn mu0_small_cases() {
        let m3 = build_mu0(3).unwrap();
        let entries: Vec<_> = m3.entries().map(|(i, j, k, _)| (i, j, k)).collect();
        assert_eq!(entries, vec![(1, 1, 2), (1, 2, 3), (2, 1, 3)]);

        assert!(build_mu0(1).unwrap().is_zero_map());
        assert!(build_mu0(0).is_err());
        assert!(build_mu0(MAX_DIM + 1).is_err());
    }

    #[test]
    fn mu0_is_null_filiform_with_nilindex() {
        let m4 = build_mu0(4).unwrap();
        assert!(m4.is_null_filiform());
        assert_eq!(m4.nilindex(), Some(5));

        // Removing the (1,1,2) entry destroys null-filiformity.
        let damaged = BilinearMap::from_entries(
            4,
            m4.entries()
                .filter(|&(i, j, k, _)| (i, j, k) != (1, 1, 2))
                .map(|(i, j, k, c)| (i, j, k, c.clone())),
        )
        .unwrap();
        assert!(!damaged.is_null_filiform());
    }

    #[test]
    fn automorphism_matrix_identity_params() {
        let p = AutomorphismParams::new(vec![int(1), int(0)]).unwrap();
        assert_eq!(automorphism_matrix(&p, 2).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn automorphism_matrix_n3_general() {
        // phi(e1) = a e1 + b e2 + c e3, phi(e2) = a^2 e2 + 2ab e3, phi(e3) = a^3 e3
        let (a, b, c) = (frac(2, 3), int(5), frac(-1, 7));
        let p = AutomorphismParams::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let m = automorphism_matrix(&p, 3).unwrap();
        assert_eq!(*m.get(0, 0), a);
        assert_eq!(*m.get(1, 0), b);
        assert_eq!(*m.get(2, 0), c);
        assert_eq!(*m.get(1, 1), &a * &a);
        assert_eq!(*m.get(2, 1), int(2) * &a * &b);
        assert_eq!(*m.get(2, 2), &a * &a * &a);
        assert!(m.get(0, 1).is_zero() && m.get(0, 2).is_zero() && m.get(1, 2).is_zero());
    }

    #[test]
    fn automorphism_matrix_composition_counts() {
        // A = (1,1,0,0): phi(e2) = e2 + 2 e3 + e4 from compositions of 3 and 4 into 2 parts.
        let p = AutomorphismParams::new(vec![int(1), int(1), int(0), int(0)]).unwrap();
        let m = automorphism_matrix(&p, 4).unwrap();
        assert_eq!(m.column(1), vec![int(0), int(1), int(2), int(1)]);
    }

    #[test]
    fn power_matrix_agrees_with_enumeration() {
        let p =
            AutomorphismParams::new(vec![frac(1, 2), int(-3), int(0), frac(2, 5), int(1)]).unwrap();
        assert_eq!(p.matrix_by_powers(), automorphism_matrix(&p, 5).unwrap());
    }

    #[test]
    fn automorphism_check_accepts_family_and_rejects_swap() {
        let dot = build_mu0(3).unwrap();
        let p = AutomorphismParams::new(vec![int(2), int(-1), frac(1, 3)]).unwrap();
        assert!(is_automorphism(&dot, &automorphism_matrix(&p, 3).unwrap()));
        assert!(is_automorphism(&dot, &Matrix::identity(3)));

        // Swapping e1 and e2 is invertible but not an automorphism.
        let mut swap = Matrix::zeros(3, 3);
        swap.set(0, 1, int(1));
        swap.set(1, 0, int(1));
        swap.set(2, 2, int(1));
        assert!(!is_automorphism(&dot, &swap));
    }

    #[test]
    fn compose_and_inverse_roundtrip() {
        let p = AutomorphismParams::new(vec![frac(3, 2), int(1), int(0), int(-2)]).unwrap();
        let q = AutomorphismParams::new(vec![int(-1), frac(1, 5), int(2), int(0)]).unwrap();
        let dot = build_mu0(4).unwrap();
        let comp = p.compose(&q).unwrap();
        assert!(is_automorphism(
            &dot,
            &automorphism_matrix(&comp, 4).unwrap()
        ));
        assert_eq!(
            automorphism_matrix(&comp, 4).unwrap(),
            automorphism_matrix(&p, 4)
                .unwrap()
                .mul(&automorphism_matrix(&q, 4).unwrap())
        );
        let id = p.compose(&p.inverse()).unwrap();
        assert_eq!(id, AutomorphismParams::identity(4));
    }

    #[test]
    fn zero_leading_param_rejected() {
        assert!(AutomorphismParams::new(vec![int(0), int(1)]).is_err());
        assert!(AutomorphismParams::new(vec![]).is_err());
    }
}
