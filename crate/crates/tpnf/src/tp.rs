//! The parameterized bracket family on the null-filiform algebra and the
//! independent constraint solver that re-derives it.
//!
//! The family `TP(α_2, ..., α_n)` puts
//! `[e_i, e_j] = (j-i) · Σ_{t=i+j-1}^{n} α_{t-i-j+3} e_t` on top of the
//! product of [`build_mu0`]. The solver knows nothing about that formula:
//! it assembles the linear system cut out by the compatibility identity on
//! all basis triples (with antisymmetry folded into the unknowns), computes
//! an exact rational nullspace, and then reports the Jacobi identity on the
//! general nullspace element as residual quadratic constraints.

use crate::error::Error;
use crate::linalg::{int_echelon, scale_primitive, SparseRow};
use crate::nullfiliform::build_mu0;
use crate::scalar::Scalar;
use crate::tensor::{basis_vector, BilinearMap};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Parameter vector `(α_2, ..., α_n)` indexing the bracket family, with an
/// optional pre-Jacobi `α_1` slot that is absent in classified data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaParams {
    n: usize,
    /// `alpha[t-2]` is `α_t` for `2 <= t <= n`.
    alpha: Vec<Scalar>,
    alpha1: Option<Scalar>,
}

impl AlphaParams {
    pub fn new(n: usize, alpha: Vec<Scalar>) -> Result<Self, Error> {
        if !(2..=crate::tensor::MAX_DIM).contains(&n) {
            return Err(Error::DimOutOfRange {
                dim: n,
                min: 2,
                max: crate::tensor::MAX_DIM,
            });
        }
        if alpha.len() != n - 1 {
            return Err(Error::ParamLength {
                len: alpha.len(),
                expected: n - 1,
            });
        }
        Ok(AlphaParams {
            n,
            alpha,
            alpha1: None,
        })
    }

    pub fn zero(n: usize) -> Result<Self, Error> {
        AlphaParams::new(n, vec![Scalar::zero(); n - 1])
    }

    /// Attach a pre-Jacobi `α_1` value (solver-side data only).
    pub fn with_alpha1(mut self, alpha1: Scalar) -> Self {
        self.alpha1 = if alpha1.is_zero() { None } else { Some(alpha1) };
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `α_t` for `2 <= t <= n`.
    pub fn get(&self, t: usize) -> &Scalar {
        &self.alpha[t - 2]
    }

    pub fn set(&mut self, t: usize, value: Scalar) {
        self.alpha[t - 2] = value;
    }

    /// The pre-Jacobi slot; `None` means zero/absent.
    pub fn alpha1(&self) -> Option<&Scalar> {
        self.alpha1.as_ref()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().all(Scalar::is_zero) && self.alpha1.is_none()
    }
}

/// Build the family bracket for the given parameters (the `α_1` slot, if
/// any, is ignored: the constructed bracket is the classified-family one).
///
/// ```
/// use tpnf::scalar::int;
/// use tpnf::tp::{build_tp_bracket, AlphaParams};
///
/// // [e1, e2] = e2 on two basis elements.
/// let bracket = build_tp_bracket(&AlphaParams::new(2, vec![int(1)])?);
/// assert_eq!(bracket.coeff(1, 2, 2), int(1));
/// assert_eq!(bracket.coeff(2, 1, 2), int(-1));
/// # Ok::<(), tpnf::Error>(())
/// ```
pub fn build_tp_bracket(params: &AlphaParams) -> BilinearMap {
    let n = params.n;
    let mut bracket = BilinearMap::zero(n).expect("n validated by AlphaParams");
    for i in 1..=n {
        for j in (i + 1)..=n {
            let factor = crate::scalar::int((j - i) as i64);
            for u in (i + j - 1)..=n {
                let t = u + 3 - i - j;
                let c = params.get(t) * &factor;
                if !c.is_zero() {
                    bracket.add_entry(i, j, u, c.clone()).unwrap();
                    bracket.add_entry(j, i, u, -c).unwrap();
                }
            }
        }
    }
    bracket
}

/// The bracket obtained by setting `α_t = 1` and every other parameter to
/// zero: `[e_i, e_j] = (j-i) e_{i+j+t-3}`. For `t >= 2` these are the
/// family's indicator brackets; `t = 1` is the pre-Jacobi slot that the
/// solver may or may not report as linearly admissible.
pub fn alpha_slice_bracket(n: usize, t: usize) -> Result<BilinearMap, Error> {
    if t == 0 || t > n {
        return Err(Error::IndexOutOfRange {
            i: t,
            j: 0,
            k: 0,
            dim: n,
        });
    }
    let mut bracket = BilinearMap::zero(n)?;
    for i in 1..=n {
        for j in (i + 1)..=n {
            let target = i + j + t - 3;
            if target > n {
                continue;
            }
            let c = crate::scalar::int((j - i) as i64);
            bracket.add_entry(i, j, target, c.clone())?;
            bracket.add_entry(j, i, target, -c)?;
        }
    }
    Ok(bracket)
}

/// Read the family parameters back off a bracket tensor.
///
/// Succeeds exactly when the bracket is the family bracket of the
/// extracted `(α_2, ..., α_n)` (which forces a zero `e_1` coefficient in
/// `[e_1, e_2]`); otherwise reports the first mismatching entry.
pub fn extract_alphas(bracket: &BilinearMap) -> Result<AlphaParams, Error> {
    let n = bracket.dim();
    if n < 2 {
        return Err(Error::DimOutOfRange {
            dim: n,
            min: 2,
            max: crate::tensor::MAX_DIM,
        });
    }
    let alpha: Vec<Scalar> = (2..=n).map(|t| bracket.coeff(1, 2, t)).collect();
    let params = AlphaParams::new(n, alpha)?;
    let rebuilt = build_tp_bracket(&params);
    if rebuilt != *bracket {
        let keys: BTreeSet<(usize, usize, usize)> = bracket
            .entries()
            .map(|(i, j, k, _)| (i, j, k))
            .chain(rebuilt.entries().map(|(i, j, k, _)| (i, j, k)))
            .collect();
        let &(i, j, k) = keys
            .iter()
            .find(|&&(i, j, k)| bracket.coeff(i, j, k) != rebuilt.coeff(i, j, k))
            .expect("unequal tensors differ at some entry");
        return Err(Error::NotInFamily { i, j, k });
    }
    Ok(params)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Transposed,
    Poisson,
}

/// A quadratic polynomial `Σ c_{uv} x_u x_v` in the coordinates of a
/// solution-space basis (variables are 1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadraticForm {
    pub vars: usize,
    pub terms: BTreeMap<(usize, usize), Scalar>,
}

impl QuadraticForm {
    fn normalized(vars: usize, terms: BTreeMap<(usize, usize), Scalar>) -> Option<Self> {
        let terms: BTreeMap<_, _> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return None;
        }
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        for c in terms.values() {
            gcd = gcd.gcd(&(c.numer() * &lcm / c.denom()));
        }
        let first = terms.values().next().unwrap();
        if first.is_negative() {
            gcd = -gcd;
        }
        let factor = Scalar::new(lcm, gcd);
        Some(QuadraticForm {
            vars,
            terms: terms.into_iter().map(|(k, c)| (k, c * &factor)).collect(),
        })
    }

    /// Evaluate at a coordinate vector (`x[0]` is variable 1).
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (&(u, v), c) in &self.terms {
            acc += &x[u - 1] * &x[v - 1] * c;
        }
        acc
    }
}

impl std::fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (&(u, v), c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({c})*x{u}*x{v}")?;
        }
        Ok(())
    }
}

/// Basis of the brackets solving a linear compatibility identity against
/// the null-filiform product, plus the Jacobi identity of the general
/// nullspace element as polynomial constraints on its coordinates.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub n: usize,
    pub mode: SolveMode,
    pub basis: Vec<BilinearMap>,
    pub residual_constraints: Vec<QuadraticForm>,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Antisymmetric unknown layout: one coordinate per `(i < j, k)` with the
/// mirror entry `(j, i, k)` fixed to the negative.
struct Unknowns {
    n: usize,
    pairs: Vec<(usize, usize)>,
    pair_pos: BTreeMap<(usize, usize), usize>,
}

impl Unknowns {
    fn new(n: usize) -> Self {
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push((i, j));
            }
        }
        let pair_pos = pairs
            .iter()
            .enumerate()
            .map(|(pos, &pq)| (pq, pos))
            .collect();
        Unknowns { n, pairs, pair_pos }
    }

    fn count(&self) -> usize {
        self.pairs.len() * self.n
    }

    /// The symbolic expansion of `[e_p, e_q]`: coordinates `k` (1-based),
    /// unknown columns and signs. Empty for `p == q`.
    fn sym_bracket(&self, p: usize, q: usize) -> Vec<(usize, usize, i64)> {
        if p == q {
            return Vec::new();
        }
        let (lo, hi, sign) = if p < q { (p, q, 1) } else { (q, p, -1) };
        let base = self.pair_pos[&(lo, hi)] * self.n;
        (1..=self.n).map(|k| (k, base + k - 1, sign)).collect()
    }

    /// Rebuild a bracket tensor from a coordinate vector.
    fn bracket_from_coords(&self, coords: &[Scalar]) -> BilinearMap {
        let mut entries = Vec::new();
        for (pos, &(i, j)) in self.pairs.iter().enumerate() {
            for k in 1..=self.n {
                let c = &coords[pos * self.n + k - 1];
                if !c.is_zero() {
                    entries.push((i, j, k, c.clone()));
                    entries.push((j, i, k, -c.clone()));
                }
            }
        }
        BilinearMap::from_entries(self.n, entries).expect("indices in range by construction")
    }
}

/// One identity instance contributes `n` coordinate rows, accumulated as
/// maps from unknown column to rational coefficient.
struct InstanceRows {
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl InstanceRows {
    fn new(n: usize) -> Self {
        InstanceRows {
            rows: vec![BTreeMap::new(); n],
        }
    }

    fn add(&mut self, coord: usize, col: usize, value: Scalar) {
        if value.is_zero() {
            return;
        }
        let slot = self.rows[coord - 1].entry(col).or_insert_with(Scalar::zero);
        *slot = &*slot + value;
    }

    /// Denominator-cleared primitive integer rows, zero rows dropped.
    fn into_sparse(self) -> Vec<SparseRow> {
        let mut out = Vec::new();
        for row in self.rows {
            let row: Vec<(usize, Scalar)> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if row.is_empty() {
                continue;
            }
            let mut lcm = BigInt::one();
            for (_, c) in &row {
                lcm = lcm.lcm(c.denom());
            }
            let mut int_row: SparseRow = row
                .into_iter()
                .map(|(col, c)| (col, c.numer() * &lcm / c.denom()))
                .collect();
            let mut gcd = BigInt::zero();
            for (_, v) in &int_row {
                gcd = gcd.gcd(v);
            }
            if int_row[0].1.is_negative() {
                gcd = -gcd;
            }
            if !gcd.is_one() {
                for (_, v) in int_row.iter_mut() {
                    *v = &*v / &gcd;
                }
            }
            out.push(int_row);
        }
        out
    }
}

fn assemble_rows(dot: &BilinearMap, mode: SolveMode, unknowns: &Unknowns) -> Vec<SparseRow> {
    let n = dot.dim();
    let mut rows: BTreeSet<SparseRow> = BTreeSet::new();
    let two = crate::scalar::int(2);

    match mode {
        SolveMode::Transposed => {
            // 2 e_c · [e_a, e_b] - [e_c·e_a, e_b] - [e_a, e_c·e_b] = 0,
            // antisymmetric in (a, b), so a < b suffices.
            for a in 1..=n {
                for b in (a + 1)..=n {
                    for c in 1..=n {
                        let mut inst = InstanceRows::new(n);
                        for (k, col, sg) in unknowns.sym_bracket(a, b) {
                            let w = dot.apply_basis(c, k);
                            for (pos, wm) in w.iter().enumerate() {
                                if !wm.is_zero() {
                                    inst.add(pos + 1, col, &two * wm * crate::scalar::int(sg));
                                }
                            }
                        }
                        let zx = dot.apply_basis(c, a);
                        for (pos, zm) in zx.iter().enumerate() {
                            if zm.is_zero() {
                                continue;
                            }
                            for (k, col, sg) in unknowns.sym_bracket(pos + 1, b) {
                                inst.add(k, col, -(zm * crate::scalar::int(sg)));
                            }
                        }
                        let zy = dot.apply_basis(c, b);
                        for (pos, zm) in zy.iter().enumerate() {
                            if zm.is_zero() {
                                continue;
                            }
                            for (k, col, sg) in unknowns.sym_bracket(a, pos + 1) {
                                inst.add(k, col, -(zm * crate::scalar::int(sg)));
                            }
                        }
                        for row in inst.into_sparse() {
                            rows.insert(row);
                        }
                    }
                }
            }
        }
        SolveMode::Poisson => {
            // [e_a, e_b·e_c] - [e_a, e_b]·e_c - e_b·[e_a, e_c] = 0,
            // symmetric in (b, c), so b <= c suffices.
            for a in 1..=n {
                for b in 1..=n {
                    for c in b..=n {
                        let mut inst = InstanceRows::new(n);
                        let yz = dot.apply_basis(b, c);
                        for (pos, ym) in yz.iter().enumerate() {
                            if ym.is_zero() {
                                continue;
                            }
                            for (k, col, sg) in unknowns.sym_bracket(a, pos + 1) {
                                inst.add(k, col, ym * crate::scalar::int(sg));
                            }
                        }
                        for (k, col, sg) in unknowns.sym_bracket(a, b) {
                            let w = dot.apply_basis(k, c);
                            for (pos, wm) in w.iter().enumerate() {
                                if !wm.is_zero() {
                                    inst.add(pos + 1, col, -(wm * crate::scalar::int(sg)));
                                }
                            }
                        }
                        for (k, col, sg) in unknowns.sym_bracket(a, c) {
                            let w = dot.apply_basis(b, k);
                            for (pos, wm) in w.iter().enumerate() {
                                if !wm.is_zero() {
                                    inst.add(pos + 1, col, -(wm * crate::scalar::int(sg)));
                                }
                            }
                        }
                        for row in inst.into_sparse() {
                            rows.insert(row);
                        }
                    }
                }
            }
        }
    }
    rows.into_iter().collect()
}

/// Mixed Jacobi expression `bv(bu(x,y),z) + bv(bu(y,z),x) + bv(bu(z,x),y)`
/// on basis labels; the full Jacobi residual of `B` is the diagonal case.
fn jacobi_mixed(bu: &BilinearMap, bv: &BilinearMap, a: usize, b: usize, c: usize) -> Vec<Scalar> {
    let n = bu.dim();
    let (ea, eb, ec) = (basis_vector(n, a), basis_vector(n, b), basis_vector(n, c));
    let mut acc = bv.apply(&bu.apply_basis(a, b), &ec).unwrap();
    for (x, y) in acc
        .iter_mut()
        .zip(bv.apply(&bu.apply_basis(b, c), &ea).unwrap())
    {
        *x = &*x + y;
    }
    for (x, y) in acc
        .iter_mut()
        .zip(bv.apply(&bu.apply_basis(c, a), &eb).unwrap())
    {
        *x = &*x + y;
    }
    acc
}

/// Jacobi constraints of `Σ x_u B_u` as deduplicated quadratic forms.
fn jacobi_constraints(basis: &[BilinearMap], n: usize) -> Vec<QuadraticForm> {
    let d = basis.len();
    let mut set: BTreeSet<QuadraticForm> = BTreeSet::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                let mut per_coord: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); n];
                for u in 0..d {
                    for v in u..d {
                        let mut r = jacobi_mixed(&basis[u], &basis[v], a, b, c);
                        if u != v {
                            for (x, y) in r
                                .iter_mut()
                                .zip(jacobi_mixed(&basis[v], &basis[u], a, b, c))
                            {
                                *x = &*x + y;
                            }
                        }
                        for (pos, val) in r.into_iter().enumerate() {
                            if !val.is_zero() {
                                per_coord[pos].insert((u + 1, v + 1), val);
                            }
                        }
                    }
                }
                for terms in per_coord {
                    if let Some(q) = QuadraticForm::normalized(d, terms) {
                        set.insert(q);
                    }
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Solve for all antisymmetric brackets compatible with the null-filiform
/// product under the chosen identity, as an exact rational nullspace, then
/// evaluate the Jacobi identity on the general solution.
pub fn solve_bracket_space(n: usize, mode: SolveMode) -> Result<SolutionSpace, Error> {
    if !(2..=10).contains(&n) {
        return Err(Error::DimOutOfRange {
            dim: n,
            min: 2,
            max: 10,
        });
    }
    let dot = build_mu0(n)?;
    let unknowns = Unknowns::new(n);
    let rows = assemble_rows(&dot, mode, &unknowns);
    let echelon = int_echelon(rows, unknowns.count());
    let basis: Vec<BilinearMap> = echelon
        .nullspace()
        .into_iter()
        .map(|coords| unknowns.bracket_from_coords(&scale_primitive(coords)))
        .collect();
    let residual_constraints = jacobi_constraints(&basis, n);
    Ok(SolutionSpace {
        n,
        mode,
        basis,
        residual_constraints,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{check_bracket, check_compat};
    use crate::scalar::{frac, int};
    use crate::tensor::AlgebraPair;

    fn params(n: usize, vals: &[i64]) -> AlphaParams {
        AlphaParams::new(n, vals.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn family_bracket_n4_products() {
        // alpha = (a2, a3, a4) = (2, 3, 5)
        let p = AlphaParams::new(4, vec![int(2), int(3), int(5)]).unwrap();
        let b = build_tp_bracket(&p);
        // [e1,e2] = 2 e2 + 3 e3 + 5 e4
        assert_eq!(b.apply_basis(1, 2), vec![int(0), int(2), int(3), int(5)]);
        // [e1,e3] = 2(2 e3 + 3 e4)
        assert_eq!(b.apply_basis(1, 3), vec![int(0), int(0), int(4), int(6)]);
        // [e1,e4] = 3·2 e4
        assert_eq!(b.apply_basis(1, 4), vec![int(0), int(0), int(0), int(6)]);
        // [e2,e3] = 2 e4
        assert_eq!(b.apply_basis(2, 3), vec![int(0), int(0), int(0), int(2)]);
        // [e2,e4] and [e3,e4] vanish (i+j > n+1)
        assert!(b.apply_basis(2, 4).iter().all(num_traits::Zero::is_zero));
        assert!(b.apply_basis(3, 4).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn family_bracket_n2() {
        let p = AlphaParams::new(2, vec![int(1)]).unwrap();
        let b = build_tp_bracket(&p);
        assert_eq!(b.apply_basis(1, 2), vec![int(0), int(1)]);
        assert_eq!(b.apply_basis(2, 1), vec![int(0), int(-1)]);
        assert_eq!(b.entries().count(), 2);
    }

    #[test]
    fn zero_params_give_zero_bracket() {
        assert!(build_tp_bracket(&AlphaParams::zero(5).unwrap()).is_zero_map());
    }

    #[test]
    fn family_brackets_are_transposed_poisson() {
        for n in 2..=6 {
            let vals: Vec<Scalar> = (0..n - 1).map(|t| frac(t as i64 + 1, 3)).collect();
            let p = AlphaParams::new(n, vals).unwrap();
            let b = build_tp_bracket(&p);
            let rb = check_bracket(&b);
            assert_eq!(rb.antisymmetric, Some(true), "n={n}");
            assert_eq!(rb.jacobi, Some(true), "n={n}");
            let pair = AlgebraPair::new(build_mu0(n).unwrap(), b).unwrap();
            assert_eq!(check_compat(&pair).transposed_leibniz, Some(true), "n={n}");
        }
    }

    #[test]
    fn extract_roundtrip_and_not_in_family() {
        let p = AlphaParams::new(4, vec![int(1), int(2), int(3)]).unwrap();
        let extracted = extract_alphas(&build_tp_bracket(&p)).unwrap();
        assert_eq!(extracted, p);
        assert!(extracted.alpha1().is_none());

        let zero = BilinearMap::zero(4).unwrap();
        assert!(extract_alphas(&zero).unwrap().is_zero());

        // A bracket with [e2,e3] = e2 is not in the family.
        let stray =
            BilinearMap::from_entries(4, vec![(2, 3, 2, int(1)), (3, 2, 2, int(-1))]).unwrap();
        match extract_alphas(&stray) {
            Err(Error::NotInFamily { i: 2, j: 3, k: 2 }) => {}
            other => panic!("expected not-in-family at (2,3,2), got {other:?}"),
        }
    }

    #[test]
    fn alpha_slice_matches_indicator_params() {
        for n in 2..=6 {
            for t in 2..=n {
                let mut p = AlphaParams::zero(n).unwrap();
                p.set(t, int(1));
                assert_eq!(alpha_slice_bracket(n, t).unwrap(), build_tp_bracket(&p));
            }
        }
    }

    #[test]
    fn solver_n2_transposed_is_one_dimensional() {
        let sol = solve_bracket_space(2, SolveMode::Transposed).unwrap();
        assert_eq!(sol.dimension(), 1);
        assert!(sol.residual_constraints.is_empty());
        // Spanned by [e1,e2] = e2.
        let b = &sol.basis[0];
        let expected = alpha_slice_bracket(2, 2).unwrap();
        assert!(
            b == &expected || {
                // Allow an overall sign.
                let mut neg = BilinearMap::zero(2).unwrap();
                for (i, j, k, c) in expected.entries() {
                    neg.add_entry(i, j, k, -c.clone()).unwrap();
                }
                b == &neg
            }
        );
    }

    #[test]
    fn solver_poisson_is_trivial_small() {
        for n in 2..=5 {
            let sol = solve_bracket_space(n, SolveMode::Poisson).unwrap();
            assert_eq!(sol.dimension(), 0, "n={n}");
            assert!(sol.residual_constraints.is_empty());
        }
    }

    #[test]
    fn solver_basis_satisfies_the_identity_it_solved() {
        use crate::identities::transposed_leibniz_residual;
        let n = 5;
        let sol = solve_bracket_space(n, SolveMode::Transposed).unwrap();
        let dot = build_mu0(n).unwrap();
        for b in &sol.basis {
            let pair = AlgebraPair::new(dot.clone(), b.clone()).unwrap();
            for a in 1..=n {
                for bb in 1..=n {
                    for c in 1..=n {
                        let r = transposed_leibniz_residual(
                            &pair,
                            &basis_vector(n, a),
                            &basis_vector(n, bb),
                            &basis_vector(n, c),
                        );
                        assert!(r.iter().all(Scalar::is_zero));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha1_ansatz_violates_jacobi_with_quadratic_residual() {
        use crate::identities::jacobi_residual;
        use crate::tensor::basis_vector;
        // The pre-Jacobi slot alone: [e_i, e_j] = (j-i) c e_{i+j-2} at n = 5.
        let n = 5;
        let c = frac(3, 7);
        let mut bracket = BilinearMap::zero(n).unwrap();
        for (i, j, k, v) in alpha_slice_bracket(n, 1).unwrap().entries() {
            bracket.add_entry(i, j, k, v * &c).unwrap();
        }
        let report = check_bracket(&bracket);
        assert_eq!(report.antisymmetric, Some(true));
        assert_eq!(report.jacobi, Some(false));
        // On the triple (e1, e3, e_n) the residual is (n^2-3n) c^2 e_n.
        let r = jacobi_residual(
            &bracket,
            &basis_vector(n, 1),
            &basis_vector(n, 3),
            &basis_vector(n, n),
        );
        let mut expected = vec![Scalar::zero(); n];
        expected[n - 1] = int((n * n - 3 * n) as i64) * &c * &c;
        assert_eq!(r, expected);
    }

    #[test]
    fn quadratic_form_eval_and_display() {
        let mut terms = BTreeMap::new();
        terms.insert((1, 1), int(4));
        terms.insert((1, 2), int(-2));
        let q = QuadraticForm::normalized(2, terms).unwrap();
        assert_eq!(q.eval(&[int(1), int(3)]), int(-1));
        assert_eq!(q.to_string(), "(2)*x1*x1 + (-1)*x1*x2");
        let _ = params(3, &[0, 0]);
    }
}
