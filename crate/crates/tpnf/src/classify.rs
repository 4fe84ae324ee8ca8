//! Classification of the bracket family up to isomorphism: the action of
//! the automorphism group on parameters, the shift-reduction that kills
//! removable coefficients, canonical forms, isomorphism testing and the
//! family table.
//!
//! An automorphism with parameters `(A_1, ..., A_n)` carries the family
//! bracket with parameters `α` to the family bracket with parameters `α'`
//! determined, for each `2 <= t <= n`, by
//!
//! ```text
//!   Σ_{i=2}^{t} Σ_{k_1+...+k_i=t} A_{k_1}···A_{k_i} α'_i
//!     = Σ_{j=2}^{t} Σ_{i=1}^{t-j+1} Σ_{k_1+k_2=t-i-j+3} (t-2i-j+3) A_i A_{k_1} A_{k_2} α_j .
//! ```
//!
//! The left side is triangular in `α'` (the `α'_t` coefficient is `A_1^t`),
//! so the relation is solved index by index.

use crate::error::Error;
use crate::nullfiliform::AutomorphismParams;
use crate::scalar::{rational_nth_root, Scalar};
use crate::tensor::MAX_DIM;
use crate::tp::AlphaParams;
use num_traits::{One, Zero};

/// Composition sums `c[j][i] = Σ_{k_1+...+k_i=j} A_{k_1}···A_{k_i}`,
/// computed by the first-part recursion
/// `c[j][i] = Σ_k A_k · c[j-k][i-1]`. These are exactly the entries of the
/// automorphism matrix (row `j`, column `i`).
fn composition_sums(a: &AutomorphismParams, n: usize) -> Vec<Vec<Scalar>> {
    let mut c = vec![vec![Scalar::zero(); n + 1]; n + 1];
    for (j, row) in c.iter_mut().enumerate().skip(1) {
        row[1] = a.get(j).clone();
    }
    for i in 2..=n {
        for j in i..=n {
            let mut acc = Scalar::zero();
            for k in 1..=(j - i + 1) {
                if !a.get(k).is_zero() && !c[j - k][i - 1].is_zero() {
                    acc += a.get(k) * &c[j - k][i - 1];
                }
            }
            c[j][i] = acc;
        }
    }
    c
}

/// Push family parameters through an automorphism: the triangular solve of
/// the parameter relation above. Any pre-Jacobi `α_1` slot on the input is
/// ignored; the result never carries one.
#[allow(clippy::needless_range_loop)] // index loops mirror the triangular recurrence
pub fn transform_params(alpha: &AlphaParams, a: &AutomorphismParams) -> Result<AlphaParams, Error> {
    let n = alpha.n();
    if a.len() != n {
        return Err(Error::ParamLength {
            len: a.len(),
            expected: n,
        });
    }
    let c = composition_sums(a, n);
    let mut out = AlphaParams::zero(n)?;
    for t in 2..=n {
        let mut acc = Scalar::zero();
        for j in 2..=t {
            if alpha.get(j).is_zero() {
                continue;
            }
            let mut coeff = Scalar::zero();
            for i in 1..=(t - j + 1) {
                let weight = t as i64 + 3 - 2 * i as i64 - j as i64;
                if weight == 0 || a.get(i).is_zero() {
                    continue;
                }
                let pair = &c[t + 3 - i - j][2];
                if !pair.is_zero() {
                    coeff += crate::scalar::int(weight) * a.get(i) * pair;
                }
            }
            acc += coeff * alpha.get(j);
        }
        for i in 2..t {
            if !c[t][i].is_zero() && !out.get(i).is_zero() {
                acc -= &c[t][i] * out.get(i);
            }
        }
        out.set(t, acc / &c[t][t]);
    }
    Ok(out)
}

/// Smallest index `t >= 2` with `α_t != 0`, or `None` for the zero vector.
pub fn first_nonzero(alpha: &AlphaParams) -> Option<usize> {
    (2..=alpha.n()).find(|&t| !alpha.get(t).is_zero())
}

/// One recorded reduction step: the unipotent automorphism applied and the
/// parameter vector it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub params: AutomorphismParams,
    pub result: AlphaParams,
}

/// The full reduction history. Replaying the steps from the original input
/// reproduces each recorded intermediate exactly.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReductionTranscript {
    pub steps: Vec<ReductionStep>,
    /// Set when reaching the fully normalized representative would need an
    /// irrational root scaling; the canonical form then reports the
    /// scaling-invariant ratio instead.
    pub note: Option<String>,
}

impl ReductionTranscript {
    /// Re-apply every step starting from `input`, checking each recorded
    /// intermediate, and return the final vector.
    pub fn replay(&self, input: &AlphaParams) -> Result<AlphaParams, Error> {
        let mut current = input.clone();
        for (idx, step) in self.steps.iter().enumerate() {
            current = transform_params(&current, &step.params)?;
            if current != step.result {
                return Err(Error::ReplayMismatch { step: idx });
            }
        }
        Ok(current)
    }

    /// The composite of all step automorphisms, in application order.
    pub fn composite(&self, n: usize) -> Result<AutomorphismParams, Error> {
        let mut acc = AutomorphismParams::identity(n);
        for step in &self.steps {
            acc = acc.compose(&step.params)?;
        }
        Ok(acc)
    }
}

/// Eliminate every removable coefficient above the leading index `s` with
/// unipotent basis changes `e_1 -> e_1 + c·e_m`.
///
/// To clear the coefficient at index `τ` the move uses `m = τ - s + 1`;
/// the cleared coefficient depends affinely on `c`, and lower indices are
/// untouched, so `c` is found by solving that affine condition. A zero
/// slope means the coefficient is not removable and the index is skipped —
/// this happens exactly at `τ = 2s-3`, which is why that coefficient
/// survives into the canonical form.
pub fn shift_reduce(alpha: &AlphaParams) -> Result<(AlphaParams, ReductionTranscript), Error> {
    if alpha.is_zero() {
        return Err(Error::AllZeroAlpha);
    }
    let n = alpha.n();
    let s = first_nonzero(alpha).expect("nonzero vector has a leading index");
    let mut current = alpha.clone();
    let mut steps = Vec::new();
    for tau in (s + 1)..=n {
        if current.get(tau).is_zero() {
            continue;
        }
        let m = tau - s + 1;
        let value_at = |state: &AlphaParams, cval: Scalar| -> Result<Scalar, Error> {
            let a = AutomorphismParams::one_param(n, m, cval)?;
            Ok(transform_params(state, &a)?.get(tau).clone())
        };
        let u = current.get(tau).clone();
        let f_pos = value_at(&current, Scalar::one())?;
        let f_neg = value_at(&current, -Scalar::one())?;
        assert!(
            &f_pos + &f_neg == crate::scalar::int(2) * &u,
            "coefficient at index {tau} is not affine in the step parameter"
        );
        let slope = &f_pos - &u;
        if slope.is_zero() {
            continue;
        }
        let a = AutomorphismParams::one_param(n, m, -u / slope)?;
        let next = transform_params(&current, &a)?;
        assert!(
            next.get(tau).is_zero(),
            "solved step must clear index {tau}"
        );
        for t in 2..tau {
            assert!(
                next.get(t) == current.get(t),
                "step clearing index {tau} must not disturb index {t}"
            );
        }
        steps.push(ReductionStep {
            params: a,
            result: next.clone(),
        });
        current = next;
    }
    let note = if s >= 4
        && !current.get(s).is_one()
        && rational_nth_root(current.get(s), (s - 3) as u32).is_none()
    {
        Some(format!(
            "normalizing alpha_{s} = {lead} to 1 needs c with c^{k} = {lead}, which has no \
             rational solution; the canonical form keeps the scaling-invariant ratio instead",
            lead = current.get(s),
            k = s - 3,
        ))
    } else {
        None
    };
    Ok((current, ReductionTranscript { steps, note }))
}

/// Canonical representative of a parameter vector's isomorphism class.
///
/// `S2` is the class with leading index 2 (a single algebra), `S3` keeps
/// its leading coefficient as a modulus, and `S { s }` for `s >= 4` keeps
/// the scaling-invariant ratio `α_{2s-3} / α_s²` whenever the index
/// `2s-3` exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalForm {
    Trivial,
    S2,
    S3 { modulus: Scalar },
    S { s: usize, modulus: Option<Scalar> },
}

/// The canonical form of a parameter vector, constant on isomorphism
/// orbits.
///
/// ```
/// use tpnf::classify::{canonical_form, CanonicalForm};
/// use tpnf::scalar::{frac, int};
/// use tpnf::tp::AlphaParams;
///
/// let alpha = AlphaParams::new(5, vec![int(0), int(0), int(3), int(4)])?;
/// assert_eq!(
///     canonical_form(&alpha),
///     CanonicalForm::S { s: 4, modulus: Some(frac(4, 9)) }
/// );
/// # Ok::<(), tpnf::Error>(())
/// ```
pub fn canonical_form(alpha: &AlphaParams) -> CanonicalForm {
    let Some(s) = first_nonzero(alpha) else {
        return CanonicalForm::Trivial;
    };
    let n = alpha.n();
    let (reduced, _) = shift_reduce(alpha).expect("nonzero vector reduces");
    for t in 2..=n {
        let may_survive = t == s || (s >= 4 && t == 2 * s - 3);
        assert!(
            may_survive || reduced.get(t).is_zero(),
            "shift reduction left an unexpected coefficient at index {t}"
        );
    }
    match s {
        2 => CanonicalForm::S2,
        3 => CanonicalForm::S3 {
            modulus: reduced.get(3).clone(),
        },
        _ => {
            let modulus = if 2 * s - 3 <= n {
                let lead = reduced.get(s);
                Some(reduced.get(2 * s - 3) / (lead * lead))
            } else {
                None
            };
            CanonicalForm::S { s, modulus }
        }
    }
}

/// Decide isomorphism of two parameter vectors and, when a rational
/// isomorphism exists, return automorphism parameters `w` with
/// `transform_params(a, w) = b`. A `true` verdict with no witness means
/// the connecting scaling needs an irrational root.
pub fn are_isomorphic(
    a: &AlphaParams,
    b: &AlphaParams,
) -> Result<(bool, Option<AutomorphismParams>), Error> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.n(),
        });
    }
    let ca = canonical_form(a);
    if ca != canonical_form(b) {
        return Ok((false, None));
    }
    if ca == CanonicalForm::Trivial {
        return Ok((true, Some(AutomorphismParams::identity(n))));
    }
    let (ra, ta) = shift_reduce(a)?;
    let (rb, tb) = shift_reduce(b)?;
    let s = first_nonzero(&ra).expect("nonzero");
    let scale = match s {
        2 => Some(rb.get(2) / ra.get(2)),
        3 => Some(Scalar::one()),
        _ => rational_nth_root(&(ra.get(s) / rb.get(s)), (s - 3) as u32),
    };
    let Some(c) = scale else {
        return Ok((true, None));
    };
    let witness = ta
        .composite(n)?
        .compose(&AutomorphismParams::scaling(n, c)?)?
        .compose(&tb.composite(n)?.inverse())?;
    let check = transform_params(a, &witness)?;
    assert!(check == *b, "isomorphism witness failed to verify");
    Ok((true, Some(witness)))
}

/// One family of the classification table. `S3` always carries a modulus
/// slot; `S { s }` carries one exactly when the index `2s-3` exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Trivial,
    S2,
    S3,
    S { s: usize, has_modulus: bool },
}

/// The families of compatible brackets in dimension `n`, pairwise
/// non-isomorphic: the trivial bracket, the leading-index-2 algebra, the
/// leading-index-3 one-parameter family (n >= 3), and one family per
/// leading index `4 <= s <= n`.
pub fn classification_table(n: usize) -> Result<Vec<Family>, Error> {
    if !(2..=MAX_DIM).contains(&n) {
        return Err(Error::DimOutOfRange {
            dim: n,
            min: 2,
            max: MAX_DIM,
        });
    }
    let mut families = vec![Family::Trivial, Family::S2];
    if n >= 3 {
        families.push(Family::S3);
    }
    for s in 4..=n {
        families.push(Family::S {
            s,
            has_modulus: 2 * s - 3 <= n,
        });
    }
    Ok(families)
}
