//! Sparse exact arithmetic in the quantum torus of exponentiated extended
//! shear coordinates.
//!
//! A monomial is `c * q^{a/4} * w1^{b1}... * exp((n1*G1 + ... )/2)` with
//! integer `a`, `b`, `n` and rational `c`. Products follow
//! `M(u) M(v) = q^{(u eps v^T)/4} M(u+v)` where `u`, `v` are the half-unit
//! exponent vectors and eps is the basis commutator matrix; the quarter-power
//! lattice for q and the half-unit lattice for exponents make every formula
//! in scope exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::basis::{GeneratorBasis, GeneratorId, OmegaId};

pub type Scalar = Ratio<i64>;

/// Sparse exponent vector over a basis, in half-units: an entry `(g, n)`
/// stands for `exp(n * Y_g / 2)`. No zero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExponentVector {
    entries: Vec<(GeneratorId, i32)>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        ExponentVector::default()
    }

    pub fn single(g: GeneratorId, half_units: i32) -> Self {
        let mut v = ExponentVector::zero();
        v.set(g, half_units);
        v
    }

    pub fn from_entries(mut entries: Vec<(GeneratorId, i32)>) -> Self {
        entries.retain(|&(_, n)| n != 0);
        entries.sort_by_key(|&(g, _)| g);
        for w in entries.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate generator in exponent vector");
        }
        ExponentVector { entries }
    }

    pub fn get(&self, g: GeneratorId) -> i32 {
        self.entries
            .binary_search_by_key(&g, |&(h, _)| h)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn set(&mut self, g: GeneratorId, n: i32) {
        match self.entries.binary_search_by_key(&g, |&(h, _)| h) {
            Ok(i) => {
                if n == 0 {
                    self.entries.remove(i);
                } else {
                    self.entries[i].1 = n;
                }
            }
            Err(i) => {
                if n != 0 {
                    self.entries.insert(i, (g, n));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorId, i32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, n) in other.iter() {
            let cur = out.get(g);
            out.set(g, cur + n);
        }
        out
    }

    pub fn neg(&self) -> Self {
        ExponentVector {
            entries: self.entries.iter().map(|&(g, n)| (g, -n)).collect(),
        }
    }

    pub fn scale(&self, k: i32) -> Self {
        if k == 0 {
            return ExponentVector::zero();
        }
        ExponentVector {
            entries: self.entries.iter().map(|&(g, n)| (g, n * k)).collect(),
        }
    }

    /// `u eps v^T` over the given basis, an integer (quarter q-units).
    pub fn pairing(&self, other: &Self, basis: &GeneratorBasis) -> i64 {
        let mut total = 0i64;
        for (g, n) in self.iter() {
            for (h, m) in other.iter() {
                total += n as i64 * basis.eps(g, h) * m as i64;
            }
        }
        total
    }

    /// Dense lexicographic order under the basis generator order (missing
    /// entries are zero). Canonical term order for serialization.
    fn dense_cmp(&self, other: &Self) -> Ordering {
        let mut i = 0;
        let mut j = 0;
        loop {
            match (self.entries.get(i), other.entries.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(g, n)), None) => {
                    let _ = g;
                    return n.cmp(&0);
                }
                (None, Some(&(h, m))) => {
                    let _ = h;
                    return 0.cmp(&m);
                }
                (Some(&(g, n)), Some(&(h, m))) => match g.cmp(&h) {
                    Ordering::Less => {
                        if n != 0 {
                            return n.cmp(&0);
                        }
                        i += 1;
                    }
                    Ordering::Greater => {
                        if m != 0 {
                            return 0.cmp(&m);
                        }
                        j += 1;
                    }
                    Ordering::Equal => {
                        if n != m {
                            return n.cmp(&m);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dense_cmp(other)
    }
}

/// Monomial in the omega symbols, nonnegative exponents, sparse and sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct OmegaMono {
    entries: Vec<(OmegaId, u32)>,
}

impl OmegaMono {
    pub fn one() -> Self {
        OmegaMono::default()
    }

    pub fn single(w: OmegaId, e: u32) -> Self {
        if e == 0 {
            return OmegaMono::one();
        }
        OmegaMono {
            entries: alloc::vec![(w, e)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (OmegaId, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, e) in other.iter() {
            match out.entries.binary_search_by_key(&w, |&(x, _)| x) {
                Ok(i) => out.entries[i].1 += e,
                Err(i) => out.entries.insert(i, (w, e)),
            }
        }
        out
    }
}

/// Coefficient of one exponent vector: map from quarter-q-power to an omega
/// polynomial (map from omega monomial to a nonzero rational scalar).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coefficient {
    terms: BTreeMap<i32, BTreeMap<OmegaMono, Scalar>>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        Coefficient::term(0, OmegaMono::one(), c)
    }

    pub fn term(qpow: i32, omega: OmegaMono, c: Scalar) -> Self {
        let mut co = Coefficient::zero();
        co.add_term(qpow, omega, c);
        co
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, qpow: i32, omega: OmegaMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(qpow).or_default();
        let entry = slot.entry(omega).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            let key = slot
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                slot.remove(&k);
            }
        }
        if slot.is_empty() {
            self.terms.remove(&qpow);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&q, omegas) in &other.terms {
            for (w, c) in omegas {
                out.add_term(q, w.clone(), *c);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Coefficient::zero();
        for (&q, omegas) in &self.terms {
            for (w, c) in omegas {
                out.add_term(q, w.clone(), -*c);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Coefficient::zero();
        for (&q1, o1) in &self.terms {
            for (&q2, o2) in &other.terms {
                for (w1, c1) in o1 {
                    for (w2, c2) in o2 {
                        out.add_term(q1 + q2, w1.mul(w2), *c1 * *c2);
                    }
                }
            }
        }
        out
    }

    pub fn shift_q(&self, dq: i32) -> Self {
        let mut out = Coefficient::zero();
        for (&q, omegas) in &self.terms {
            for (w, c) in omegas {
                out.add_term(q + dq, w.clone(), *c);
            }
        }
        out
    }

    /// q -> q^{-1}.
    pub fn conj_q(&self) -> Self {
        let mut out = Coefficient::zero();
        for (&q, omegas) in &self.terms {
            for (w, c) in omegas {
                out.add_term(-q, w.clone(), *c);
            }
        }
        out
    }

    /// Collapse all q-powers to q = 1.
    pub fn specialize_q_one(&self) -> Self {
        let mut out = Coefficient::zero();
        for omegas in self.terms.values() {
            for (w, c) in omegas {
                out.add_term(0, w.clone(), *c);
            }
        }
        out
    }

    pub fn scale(&self, s: Scalar) -> Self {
        let mut out = Coefficient::zero();
        for (&q, omegas) in &self.terms {
            for (w, c) in omegas {
                out.add_term(q, w.clone(), *c * s);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &OmegaMono, Scalar)> + '_ {
        self.terms
            .iter()
            .flat_map(|(&q, omegas)| omegas.iter().map(move |(w, &c)| (q, w, c)))
    }

    /// The unique (qpow, omega, scalar) term, if there is exactly one.
    pub fn single_term(&self) -> Option<(i32, OmegaMono, Scalar)> {
        let mut it = self.iter();
        let first = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((first.0, first.1.clone(), first.2))
    }

    /// All q-powers zero?
    pub fn is_classical(&self) -> bool {
        self.terms.keys().all(|&q| q == 0)
    }

    /// True if every scalar is a nonnegative integer.
    pub fn is_nonneg_integer(&self) -> bool {
        self.iter()
            .all(|(_, _, c)| c.denom().is_one() && !c.is_negative())
    }
}

/// Errors from torus operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusError {
    BasisMismatch,
    QuantumInput,
    NotAMonomial,
    InconsistentPushforward {
        left: String,
        right: String,
    },
    /// Substitution would leave the half-unit lattice.
    OffLattice,
    MissingAssignment(String),
}

impl fmt::Display for TorusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusError::BasisMismatch => write!(f, "operands live in different generator bases"),
            TorusError::QuantumInput => write!(f, "classical operation on input with q-powers"),
            TorusError::NotAMonomial => write!(f, "expected a single invertible monomial"),
            TorusError::InconsistentPushforward { left, right } => write!(
                f,
                "substitution does not preserve commutators: {left} vs {right}"
            ),
            TorusError::OffLattice => write!(f, "substitution image leaves the exponent lattice"),
            TorusError::MissingAssignment(g) => write!(f, "no numeric value for generator {g}"),
        }
    }
}

/// Exact noncommutative Laurent element: finite sum of monomials over one basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QLaurent {
    basis: Arc<GeneratorBasis>,
    terms: BTreeMap<ExponentVector, Coefficient>,
}

impl QLaurent {
    pub fn zero(basis: Arc<GeneratorBasis>) -> Self {
        QLaurent {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Arc<GeneratorBasis>) -> Self {
        QLaurent::monomial(basis, ExponentVector::zero(), Coefficient::scalar(Scalar::one()))
    }

    pub fn scalar(basis: Arc<GeneratorBasis>, c: Scalar) -> Self {
        QLaurent::monomial(basis, ExponentVector::zero(), Coefficient::scalar(c))
    }

    pub fn monomial(basis: Arc<GeneratorBasis>, exp: ExponentVector, coeff: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QLaurent { basis, terms }
    }

    /// Weyl generator monomial `exp(n * Y_g / 2)`.
    pub fn generator(basis: Arc<GeneratorBasis>, g: GeneratorId, half_units: i32) -> Self {
        QLaurent::monomial(
            basis,
            ExponentVector::single(g, half_units),
            Coefficient::scalar(Scalar::one()),
        )
    }

    pub fn omega(basis: Arc<GeneratorBasis>, w: OmegaId) -> Self {
        QLaurent::monomial(
            basis,
            ExponentVector::zero(),
            Coefficient::term(0, OmegaMono::single(w, 1), Scalar::one()),
        )
    }

    pub fn basis(&self) -> &Arc<GeneratorBasis> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Coefficient)> {
        self.terms.iter()
    }

    fn same_basis(&self, other: &Self) -> Result<(), TorusError> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(TorusError::BasisMismatch)
        }
    }

    fn insert(&mut self, exp: ExponentVector, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                let sum = c.add(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TorusError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: Scalar) -> Self {
        if s.is_zero() {
            return QLaurent::zero(self.basis.clone());
        }
        QLaurent {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.scale(s)))
                .collect(),
        }
    }

    pub fn shift_q(&self, dq: i32) -> Self {
        QLaurent {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.shift_q(dq)))
                .collect(),
        }
    }

    /// Noncommutative normal-form product: bilinear extension of
    /// `M(u) M(v) = q^{(u eps v)/4} M(u+v)`.
    pub fn qmul(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_basis(other)?;
        let mut out = QLaurent::zero(self.basis.clone());
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let phase = u.pairing(v, &self.basis);
                let coeff = cu.mul(cv).shift_q(phase as i32);
                out.insert(u.add(v), coeff);
            }
        }
        Ok(out)
    }

    /// Commutative Laurent product (no q phases). Equals `qmul` followed by
    /// the q -> 1 specialization whenever the inputs are classical.
    pub fn mul_classical(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_basis(other)?;
        let mut out = QLaurent::zero(self.basis.clone());
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.insert(u.add(v), cu.mul(cv));
            }
        }
        Ok(out)
    }

    /// Set q = 1 in every coefficient.
    pub fn specialize_q_one(&self) -> Self {
        let mut out = QLaurent::zero(self.basis.clone());
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.specialize_q_one());
        }
        out
    }

    pub fn is_classical(&self) -> bool {
        self.terms.values().all(Coefficient::is_classical)
    }

    /// Poisson bracket `{e^{uY}, e^{vY}} = (u eps v) e^{(u+v)Y}`, bilinear.
    /// Half-unit exponents give the quarter factors: the bracket of two
    /// half-unit monomials is `(u eps v)/4` times their product.
    pub fn poisson(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_basis(other)?;
        if !self.is_classical() || !other.is_classical() {
            return Err(TorusError::QuantumInput);
        }
        let mut out = QLaurent::zero(self.basis.clone());
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let pairing = u.pairing(v, &self.basis);
                if pairing == 0 {
                    continue;
                }
                let coeff = cu.mul(cv).scale(Scalar::new(pairing, 4));
                out.insert(u.add(v), coeff);
            }
        }
        Ok(out)
    }

    /// The *-involution: exponent vectors fixed, q -> q^{-1}.
    pub fn adjoint(&self) -> Self {
        QLaurent {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.conj_q()))
                .collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// Inverse of a single monomial (exponent negation, q-power negation,
    /// scalar inversion). Rejects sums, omega factors and non-unit scalars
    /// other than +-1 divisions handled by rational inversion.
    pub fn inverse_monomial(&self) -> Result<Self, TorusError> {
        if self.terms.len() != 1 {
            return Err(TorusError::NotAMonomial);
        }
        let (exp, coeff) = self.terms.iter().next().unwrap();
        let Some((qpow, omega, c)) = coeff.single_term() else {
            return Err(TorusError::NotAMonomial);
        };
        if !omega.is_one() || c.is_zero() {
            return Err(TorusError::NotAMonomial);
        }
        Ok(QLaurent::monomial(
            self.basis.clone(),
            exp.neg(),
            Coefficient::term(-qpow, OmegaMono::one(), c.recip()),
        ))
    }

    /// If the element is a single term `c q^{a/4} w M(u)`, return the parts.
    pub fn single_monomial(&self) -> Option<(ExponentVector, i32, OmegaMono, Scalar)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (exp, coeff) = self.terms.iter().next().unwrap();
        let (q, w, c) = coeff.single_term()?;
        Some((exp.clone(), q, w, c))
    }

    /// Strip a uniform q-power so the result is Hermitian when possible:
    /// returns `(normalized, defect)` with `self = q^{defect/4} * normalized`
    /// when all terms carry the same q-power; otherwise returns self with
    /// defect 0.
    pub fn weyl_normalize(&self) -> (Self, i32) {
        let mut qpows: Vec<i32> = Vec::new();
        for c in self.terms.values() {
            for (q, _, _) in c.iter() {
                if !qpows.contains(&q) {
                    qpows.push(q);
                }
            }
        }
        if qpows.len() == 1 && qpows[0] != 0 {
            (self.shift_q(-qpows[0]), qpows[0])
        } else {
            (self.clone(), 0)
        }
    }

    /// True if all coefficients are nonnegative-integer polynomials in the
    /// omega symbols and q^{+-1/4} (the Laurent positivity property).
    pub fn is_positive_integral(&self) -> bool {
        self.terms.values().all(Coefficient::is_nonneg_integer)
    }
}

/// A substitution sending each source generator's half-unit exponential to a
/// single monomial in the target torus.
///
/// The image of `exp(Y_g/2)` may involve half-powers of the target lambda
/// generators (the cross-ratio inversions do), so images are stored on the
/// quarter-unit lattice: `quarter_images[g]` is twice the half-unit exponent
/// vector of the image. A term of a substituted element is valid when the
/// summed quarter vector is even; otherwise the term leaves the lattice and
/// the substitution is rejected.
#[derive(Debug, Clone)]
pub struct MonomialMap {
    source: Arc<GeneratorBasis>,
    target: Arc<GeneratorBasis>,
    /// (quarter-unit target exponent of image of exp(Y_g/2), quarter q-power, sign)
    quarter_images: Vec<(ExponentVector, i32, Scalar)>,
}

impl MonomialMap {
    /// Build from quarter-unit images of the half-generators.
    pub fn new(
        source: Arc<GeneratorBasis>,
        target: Arc<GeneratorBasis>,
        quarter_images: Vec<(ExponentVector, i32, Scalar)>,
    ) -> Result<Self, TorusError> {
        assert_eq!(quarter_images.len(), source.len());
        let map = MonomialMap {
            source,
            target,
            quarter_images,
        };
        map.check_pushforward()?;
        Ok(map)
    }

    /// Convenience: build from the images of the *full* generators
    /// `exp(Y_g) -> sign * q^{qpow/4} M(w_g)` with `w_g` in target half-units.
    pub fn from_full_images(
        source: Arc<GeneratorBasis>,
        target: Arc<GeneratorBasis>,
        full_images: Vec<(ExponentVector, i32, Scalar)>,
    ) -> Result<Self, TorusError> {
        let quarter = full_images
            .into_iter()
            .map(|(w, qp, c)| {
                if qp % 2 != 0 {
                    return Err(TorusError::OffLattice);
                }
                Ok((w, qp / 2, c))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MonomialMap::new(source, target, quarter)
    }

    /// The commutator of images must match the source commutator: with images
    /// in quarter units this reads `w~_g eps_t w~_h = 4 eps_s[g][h]`.
    fn check_pushforward(&self) -> Result<(), TorusError> {
        for g in self.source.ids() {
            for h in self.source.ids() {
                let lhs = self.quarter_images[g.0 as usize]
                    .0
                    .pairing(&self.quarter_images[h.0 as usize].0, &self.target);
                let rhs = 4 * self.source.eps(g, h);
                if lhs != rhs {
                    return Err(TorusError::InconsistentPushforward {
                        left: alloc::format!(
                            "[{}, {}] -> {}/4",
                            self.source.name(g),
                            self.source.name(h),
                            lhs
                        ),
                        right: alloc::format!("{rhs}/4"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<GeneratorBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GeneratorBasis> {
        &self.target
    }

    /// Image of the full generator `exp(Y_g)` as an element of the target.
    /// The square of the half-image: the quarter vector becomes the half-unit
    /// exponent and the q-power doubles.
    pub fn image_of_full(&self, g: GeneratorId) -> QLaurent {
        let (w, qp, c) = &self.quarter_images[g.0 as usize];
        QLaurent::monomial(
            self.target.clone(),
            w.clone(),
            Coefficient::term(qp * 2, OmegaMono::one(), *c * *c),
        )
    }

    /// Apply to an element. The image of a Weyl monomial `M(u)` is the Weyl
    /// monomial over the summed image vector: the pushforward check
    /// guarantees a torus morphism, so no reordering phases appear.
    pub fn apply(&self, value: &QLaurent) -> Result<QLaurent, TorusError> {
        if **value.basis() != *self.source {
            return Err(TorusError::BasisMismatch);
        }
        let mut out = QLaurent::zero(self.target.clone());
        for (u, coeff) in value.terms() {
            let mut quarter = ExponentVector::zero();
            let mut qshift = 0i64;
            let mut scal = Scalar::one();
            for (g, n) in u.iter() {
                let (w, qp, c) = &self.quarter_images[g.0 as usize];
                quarter = quarter.add(&w.scale(n));
                qshift += *qp as i64 * n as i64;
                let mut acc = Scalar::one();
                for _ in 0..n.unsigned_abs() {
                    acc *= *c;
                }
                if n < 0 {
                    acc = acc.recip();
                }
                scal *= acc;
            }
            let mut half = ExponentVector::zero();
            for (h, n) in quarter.iter() {
                if n % 2 != 0 {
                    return Err(TorusError::OffLattice);
                }
                half.set(h, n / 2);
            }
            let mut co = Coefficient::zero();
            for (q, w, c) in coeff.iter() {
                co.add_term(q + qshift as i32, w.clone(), c * scal);
            }
            out.insert(half, co);
        }
        Ok(out)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn two_gen_basis(eps01: i64) -> Arc<GeneratorBasis> {
        GeneratorBasis::new(
            vec!["A".to_string(), "B".to_string()],
            vec![
                crate::basis::GeneratorKind::InnerShear,
                crate::basis::GeneratorKind::InnerShear,
            ],
            Vec::new(),
            vec![vec![0, eps01], vec![-eps01, 0]],
        )
    }

    #[test]
    fn commuting_monomials_multiply_plainly() {
        let b = two_gen_basis(0);
        let a = QLaurent::generator(b.clone(), GeneratorId(0), 1);
        let c = QLaurent::generator(b.clone(), GeneratorId(1), 1);
        let p = a.qmul(&c).unwrap();
        let (exp, q, w, s) = p.single_monomial().unwrap();
        assert_eq!(q, 0);
        assert!(w.is_one());
        assert_eq!(s, Scalar::one());
        assert_eq!(exp.get(GeneratorId(0)), 1);
        assert_eq!(exp.get(GeneratorId(1)), 1);
    }

    #[test]
    fn self_product_has_no_phase() {
        let b = two_gen_basis(1);
        let a = QLaurent::generator(b, GeneratorId(0), 1);
        let p = a.qmul(&a).unwrap();
        let (exp, q, _, _) = p.single_monomial().unwrap();
        assert_eq!(q, 0);
        assert_eq!(exp.get(GeneratorId(0)), 2);
    }

    #[test]
    fn exchange_phase_is_twice_the_pairing() {
        let b = two_gen_basis(1);
        let a = QLaurent::generator(b.clone(), GeneratorId(0), 1);
        let c = QLaurent::generator(b.clone(), GeneratorId(1), 1);
        let ac = a.qmul(&c).unwrap();
        let ca = c.qmul(&a).unwrap();
        // M(u)M(v) = q^{ueps v} M(u+v), M(v)M(u) = q^{-u eps v} M(u+v)
        assert_eq!(ac.single_monomial().unwrap().1, 1);
        assert_eq!(ca.single_monomial().unwrap().1, -1);
        assert_eq!(ac, ca.shift_q(2));
    }

    #[test]
    fn poisson_is_quarter_of_pairing() {
        let b = two_gen_basis(1);
        let a = QLaurent::generator(b.clone(), GeneratorId(0), 1);
        let c = QLaurent::generator(b.clone(), GeneratorId(1), 1);
        let br = a.poisson(&c).unwrap();
        let (_, q, w, s) = br.single_monomial().unwrap();
        assert_eq!(q, 0);
        assert!(w.is_one());
        assert_eq!(s, Scalar::new(1, 4));
        assert!(a.poisson(&a).unwrap().is_zero());
    }

    #[test]
    fn adjoint_flips_q_and_reverses_products() {
        let b = two_gen_basis(1);
        let a = QLaurent::generator(b.clone(), GeneratorId(0), 1);
        let c = QLaurent::generator(b.clone(), GeneratorId(1), 1).shift_q(1);
        let prod = a.qmul(&c).unwrap();
        let adj = prod.adjoint();
        let rev = c.adjoint().qmul(&a.adjoint()).unwrap();
        assert_eq!(adj, rev);
        assert!(a.is_hermitian());
        assert!(!c.is_hermitian());
    }

    #[test]
    fn classical_specialization_matches_commutative_product() {
        let b = two_gen_basis(1);
        let a = QLaurent::generator(b.clone(), GeneratorId(0), 1)
            .add(&QLaurent::generator(b.clone(), GeneratorId(1), -1))
            .unwrap();
        let c = QLaurent::generator(b.clone(), GeneratorId(1), 2)
            .add(&QLaurent::one(b.clone()))
            .unwrap();
        let q1 = a.qmul(&c).unwrap().specialize_q_one();
        let cl = a.mul_classical(&c).unwrap();
        assert_eq!(q1, cl);
    }
}
