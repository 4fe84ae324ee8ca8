//! Polynomial-identity checks for products, brackets and pairs.
//!
//! Every identity here is multilinear, so checking it on all basis tuples
//! decides it on the whole space. The checks below do exactly that and
//! record, per failed identity, the first failing tuple together with the
//! full residual vector.

use crate::scalar::Scalar;
use crate::tensor::{basis_vector, AlgebraPair, BilinearMap};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Commutative,
    Associative,
    Antisymmetric,
    Jacobi,
    Leibniz,
    TransposedLeibniz,
    MixedTrivial,
}

impl IdentityKind {
    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::Commutative => "commutative",
            IdentityKind::Associative => "associative",
            IdentityKind::Antisymmetric => "antisymmetric",
            IdentityKind::Jacobi => "jacobi",
            IdentityKind::Leibniz => "leibniz",
            IdentityKind::TransposedLeibniz => "transposed_leibniz",
            IdentityKind::MixedTrivial => "mixed_trivial",
        }
    }
}

/// First failing basis tuple for one identity, with its residual vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityWitness {
    pub identity: IdentityKind,
    /// Basis labels of the failing tuple (two for pair identities,
    /// three for triple identities).
    pub at: Vec<usize>,
    pub residual: Vec<Scalar>,
}

/// Outcome of the identity checks. A flag is `None` when the corresponding
/// check was not run, and `Some(false)` exactly when a witness for that
/// identity is recorded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub commutative: Option<bool>,
    pub associative: Option<bool>,
    pub antisymmetric: Option<bool>,
    pub jacobi: Option<bool>,
    pub leibniz: Option<bool>,
    pub transposed_leibniz: Option<bool>,
    pub mixed_trivial: Option<bool>,
    pub witnesses: Vec<IdentityWitness>,
}

impl IdentityReport {
    /// Combine reports from the three checkers into one.
    pub fn merged(mut self, other: IdentityReport) -> IdentityReport {
        self.commutative = self.commutative.or(other.commutative);
        self.associative = self.associative.or(other.associative);
        self.antisymmetric = self.antisymmetric.or(other.antisymmetric);
        self.jacobi = self.jacobi.or(other.jacobi);
        self.leibniz = self.leibniz.or(other.leibniz);
        self.transposed_leibniz = self.transposed_leibniz.or(other.transposed_leibniz);
        self.mixed_trivial = self.mixed_trivial.or(other.mixed_trivial);
        self.witnesses.extend(other.witnesses);
        self
    }
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn sub(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    for (x, y) in a.iter_mut().zip(b) {
        *x = &*x - y;
    }
    a
}

fn add(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    for (x, y) in a.iter_mut().zip(b) {
        *x = &*x + y;
    }
    a
}

fn scale(mut a: Vec<Scalar>, c: i64) -> Vec<Scalar> {
    let c = crate::scalar::int(c);
    for x in a.iter_mut() {
        *x = &*x * &c;
    }
    a
}

/// `B(x,y) - B(y,x)`.
pub fn commutativity_residual(b: &BilinearMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    sub(b.apply(x, y).unwrap(), &b.apply(y, x).unwrap())
}

/// `(x·y)·z - x·(y·z)`.
pub fn associativity_residual(
    dot: &BilinearMap,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Vec<Scalar> {
    let xy = dot.apply(x, y).unwrap();
    let yz = dot.apply(y, z).unwrap();
    sub(dot.apply(&xy, z).unwrap(), &dot.apply(x, &yz).unwrap())
}

/// `[x,y] + [y,x]`.
pub fn antisymmetry_residual(b: &BilinearMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    add(b.apply(x, y).unwrap(), &b.apply(y, x).unwrap())
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_residual(b: &BilinearMap, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
    let xy = b.apply(x, y).unwrap();
    let yz = b.apply(y, z).unwrap();
    let zx = b.apply(z, x).unwrap();
    let mut acc = b.apply(&xy, z).unwrap();
    acc = add(acc, &b.apply(&yz, x).unwrap());
    add(acc, &b.apply(&zx, y).unwrap())
}

/// Leibniz-rule residual `[x, y·z] - [x,y]·z - y·[x,z]`.
pub fn leibniz_residual(
    pair: &AlgebraPair,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Vec<Scalar> {
    let yz = pair.dot.apply(y, z).unwrap();
    let xy = pair.bracket.apply(x, y).unwrap();
    let xz = pair.bracket.apply(x, z).unwrap();
    let mut acc = pair.bracket.apply(x, &yz).unwrap();
    acc = sub(acc, &pair.dot.apply(&xy, z).unwrap());
    sub(acc, &pair.dot.apply(y, &xz).unwrap())
}

/// Transposed Leibniz residual `2 z·[x,y] - [z·x, y] - [x, z·y]`.
pub fn transposed_leibniz_residual(
    pair: &AlgebraPair,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Vec<Scalar> {
    let xy = pair.bracket.apply(x, y).unwrap();
    let zx = pair.dot.apply(z, x).unwrap();
    let zy = pair.dot.apply(z, y).unwrap();
    let mut acc = scale(pair.dot.apply(z, &xy).unwrap(), 2);
    acc = sub(acc, &pair.bracket.apply(&zx, y).unwrap());
    sub(acc, &pair.bracket.apply(x, &zy).unwrap())
}

/// Residuals of the two halves of `x·[y,z] = [x·y, z] = 0`.
pub fn mixed_trivial_residuals(
    pair: &AlgebraPair,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> (Vec<Scalar>, Vec<Scalar>) {
    let yz = pair.bracket.apply(y, z).unwrap();
    let xy = pair.dot.apply(x, y).unwrap();
    (
        pair.dot.apply(x, &yz).unwrap(),
        pair.bracket.apply(&xy, z).unwrap(),
    )
}

struct FlagTracker {
    identity: IdentityKind,
    ok: bool,
    witness: Option<IdentityWitness>,
}

impl FlagTracker {
    fn new(identity: IdentityKind) -> Self {
        FlagTracker {
            identity,
            ok: true,
            witness: None,
        }
    }

    fn observe(&mut self, at: &[usize], residual: Vec<Scalar>) {
        if self.ok && !is_zero_vec(&residual) {
            self.ok = false;
            self.witness = Some(IdentityWitness {
                identity: self.identity,
                at: at.to_vec(),
                residual,
            });
        }
    }

    fn finish(self, flag: &mut Option<bool>, witnesses: &mut Vec<IdentityWitness>) {
        *flag = Some(self.ok);
        if let Some(w) = self.witness {
            witnesses.push(w);
        }
    }
}

/// Commutativity and associativity of a product, decided on basis tuples.
pub fn check_product(dot: &BilinearMap) -> IdentityReport {
    let n = dot.dim();
    let es: Vec<Vec<Scalar>> = (1..=n).map(|i| basis_vector(n, i)).collect();
    let mut comm = FlagTracker::new(IdentityKind::Commutative);
    let mut assoc = FlagTracker::new(IdentityKind::Associative);
    for i in 1..=n {
        for j in i..=n {
            comm.observe(&[i, j], commutativity_residual(dot, &es[i - 1], &es[j - 1]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                assoc.observe(
                    &[i, j, k],
                    associativity_residual(dot, &es[i - 1], &es[j - 1], &es[k - 1]),
                );
            }
        }
    }
    let mut report = IdentityReport::default();
    comm.finish(&mut report.commutative, &mut report.witnesses);
    assoc.finish(&mut report.associative, &mut report.witnesses);
    report
}

/// Antisymmetry and the Jacobi identity for a candidate bracket.
pub fn check_bracket(bracket: &BilinearMap) -> IdentityReport {
    let n = bracket.dim();
    let es: Vec<Vec<Scalar>> = (1..=n).map(|i| basis_vector(n, i)).collect();
    let mut anti = FlagTracker::new(IdentityKind::Antisymmetric);
    let mut jac = FlagTracker::new(IdentityKind::Jacobi);
    for i in 1..=n {
        for j in i..=n {
            anti.observe(
                &[i, j],
                antisymmetry_residual(bracket, &es[i - 1], &es[j - 1]),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                jac.observe(
                    &[i, j, k],
                    jacobi_residual(bracket, &es[i - 1], &es[j - 1], &es[k - 1]),
                );
            }
        }
    }
    let mut report = IdentityReport::default();
    anti.finish(&mut report.antisymmetric, &mut report.witnesses);
    jac.finish(&mut report.jacobi, &mut report.witnesses);
    report
}

/// Compatibility identities tying the product to the bracket: the Leibniz
/// rule, the transposed Leibniz rule, and the mixed-triviality condition.
pub fn check_compat(pair: &AlgebraPair) -> IdentityReport {
    let n = pair.dim();
    let es: Vec<Vec<Scalar>> = (1..=n).map(|i| basis_vector(n, i)).collect();
    let mut leib = FlagTracker::new(IdentityKind::Leibniz);
    let mut tleib = FlagTracker::new(IdentityKind::TransposedLeibniz);
    let mut mixed = FlagTracker::new(IdentityKind::MixedTrivial);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let (x, y, z) = (&es[i - 1], &es[j - 1], &es[k - 1]);
                let at = [i, j, k];
                leib.observe(&at, leibniz_residual(pair, x, y, z));
                tleib.observe(&at, transposed_leibniz_residual(pair, x, y, z));
                let (m1, m2) = mixed_trivial_residuals(pair, x, y, z);
                mixed.observe(&at, m1);
                mixed.observe(&at, m2);
            }
        }
    }
    let mut report = IdentityReport::default();
    leib.finish(&mut report.leibniz, &mut report.witnesses);
    tleib.finish(&mut report.transposed_leibniz, &mut report.witnesses);
    mixed.finish(&mut report.mixed_trivial, &mut report.witnesses);
    report
}

/// All seven checks merged into one report.
pub fn check_all(pair: &AlgebraPair) -> IdentityReport {
    check_product(&pair.dot)
        .merged(check_bracket(&pair.bracket))
        .merged(check_compat(pair))
}

/// Commutative-associative product, Lie bracket, Leibniz rule.
pub fn is_poisson(pair: &AlgebraPair) -> bool {
    let r = check_all(pair);
    [
        r.commutative,
        r.associative,
        r.antisymmetric,
        r.jacobi,
        r.leibniz,
    ]
    .iter()
    .all(|f| *f == Some(true))
}

/// Commutative-associative product, Lie bracket, transposed Leibniz rule.
pub fn is_transposed_poisson(pair: &AlgebraPair) -> bool {
    let r = check_all(pair);
    [
        r.commutative,
        r.associative,
        r.antisymmetric,
        r.jacobi,
        r.transposed_leibniz,
    ]
    .iter()
    .all(|f| *f == Some(true))
}
