//! Exact multivariate polynomials.
//!
//! Two flavours share the same machinery:
//!
//! * [`HoloPoly`] — holomorphic polynomials in `(z_1, …, z_n, w)`, used for
//!   defining triples `P, Q, R` and for the coefficient functions of vector
//!   fields.
//! * [`MixedPoly`] — polynomials in `(z, z̄, u)`, used for defining functions
//!   `Φ(z, z̄)` and for tangency residuals.
//!
//! Terms are kept in a `BTreeMap` under a fixed graded-lexicographic key
//! order, so iteration, printing and serialization are deterministic. Zero
//! coefficients are never stored.

use super::exponent::Exponent;
use super::gauss::{Gauss, Rat};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial key `z^a · w^m` of a holomorphic polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HoloKey {
    pub z: Exponent,
    pub w: u32,
}

impl HoloKey {
    pub fn new(z: Exponent, w: u32) -> Self {
        HoloKey { z, w }
    }

    /// Plain total degree `|a| + m`.
    pub fn total(&self) -> u32 {
        self.z.total() + self.w
    }
}

impl Ord for HoloKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for HoloKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial key `z^a · z̄^b · u^k` of a mixed polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MixedKey {
    pub z: Exponent,
    pub zb: Exponent,
    pub u: u32,
}

impl MixedKey {
    pub fn new(z: Exponent, zb: Exponent, u: u32) -> Self {
        MixedKey { z, zb, u }
    }

    pub fn total(&self) -> u32 {
        self.z.total() + self.zb.total() + self.u
    }

    /// Key of the complex-conjugate monomial (swap `z` and `z̄`; `u` is real).
    pub fn conjugate(&self) -> MixedKey {
        MixedKey::new(self.zb.clone(), self.z.clone(), self.u)
    }
}

impl Ord for MixedKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.zb.cmp(&other.zb))
            .then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for MixedKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, Gauss>, key: K, coeff: Gauss) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Holomorphic polynomial in `(z_1, …, z_n, w)` over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoloPoly {
    n: usize,
    terms: BTreeMap<HoloKey, Gauss>,
}

impl HoloPoly {
    pub fn zero(n: usize) -> Self {
        HoloPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Gauss) -> Self {
        Self::monomial(n, HoloKey::new(Exponent::zeros(n), 0), c)
    }

    pub fn monomial(n: usize, key: HoloKey, coeff: Gauss) -> Self {
        assert_eq!(key.z.len(), n, "exponent length must match variable count");
        let mut terms = BTreeMap::new();
        add_term(&mut terms, key, coeff);
        HoloPoly { n, terms }
    }

    /// The variable `z_j` (0-indexed).
    pub fn z_var(n: usize, j: usize) -> Self {
        Self::monomial(n, HoloKey::new(Exponent::unit(n, j), 0), Gauss::one())
    }

    /// The variable `w`.
    pub fn w_var(n: usize) -> Self {
        Self::monomial(n, HoloKey::new(Exponent::zeros(n), 1), Gauss::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HoloKey, &Gauss)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &HoloKey) -> Gauss {
        self.terms.get(key).cloned().unwrap_or_else(Gauss::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.total()).max()
    }

    /// Maximal power of `w` appearing.
    pub fn w_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.w).max().unwrap_or(0)
    }

    /// `Some((key, coeff))` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&HoloKey, &Gauss)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add(&self, other: &HoloPoly) -> HoloPoly {
        assert_eq!(self.n, other.n, "variable context mismatch");
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut terms, k.clone(), c.clone());
        }
        HoloPoly { n: self.n, terms }
    }

    pub fn sub(&self, other: &HoloPoly) -> HoloPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HoloPoly {
        self.scale(&-&Gauss::one())
    }

    pub fn scale(&self, c: &Gauss) -> HoloPoly {
        if c.is_zero() {
            return HoloPoly::zero(self.n);
        }
        HoloPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Exact product, failing on mismatched variable contexts.
    pub fn checked_mul(&self, other: &HoloPoly) -> Result<HoloPoly, super::AlgebraError> {
        if self.n != other.n {
            return Err(super::AlgebraError::Dimension(format!(
                "cannot multiply polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &HoloPoly) -> HoloPoly {
        assert_eq!(self.n, other.n, "variable context mismatch");
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = HoloKey::new(ka.z.add(&kb.z), ka.w + kb.w);
                add_term(&mut terms, key, ca * cb);
            }
        }
        HoloPoly { n: self.n, terms }
    }

    /// Formal partial derivative with respect to `z_j`.
    pub fn partial_z(&self, j: usize) -> HoloPoly {
        assert!(j < self.n, "variable index out of range");
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if let Some(z) = k.z.step_down(j) {
                let factor = Gauss::from_int(i64::from(k.z[j]));
                add_term(&mut terms, HoloKey::new(z, k.w), c * &factor);
            }
        }
        HoloPoly { n: self.n, terms }
    }

    /// Formal partial derivative with respect to `w`.
    pub fn partial_w(&self) -> HoloPoly {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.w > 0 {
                let factor = Gauss::from_int(i64::from(k.w));
                add_term(
                    &mut terms,
                    HoloKey::new(k.z.clone(), k.w - 1),
                    c * &factor,
                );
            }
        }
        HoloPoly { n: self.n, terms }
    }

    /// Exact division by the monomial `coeff · z^div`; `None` when any term
    /// is not divisible. Only `w`-free polynomials are supported.
    pub fn div_by_monomial(&self, div: &Exponent, coeff: &Gauss) -> Option<HoloPoly> {
        assert!(!coeff.is_zero(), "division by zero monomial");
        let inv = coeff.inv().unwrap();
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let z = k.z.checked_sub(div)?;
            add_term(&mut terms, HoloKey::new(z, k.w), c * &inv);
        }
        Some(HoloPoly { n: self.n, terms })
    }

    /// View a `w`-free holomorphic polynomial as a mixed polynomial.
    pub fn to_mixed(&self) -> MixedPoly {
        assert_eq!(self.w_degree(), 0, "polynomial must be w-free");
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            add_term(
                &mut terms,
                MixedKey::new(k.z.clone(), Exponent::zeros(self.n), 0),
                c.clone(),
            );
        }
        MixedPoly { n: self.n, terms }
    }

    /// Substitute `w ↦ u + iΦ`. `pows[m]` must hold `(u + iΦ)^m` for every
    /// power of `w` appearing here; see [`MixedPoly::w_substitution_powers`].
    pub fn substitute_w(&self, pows: &[MixedPoly]) -> MixedPoly {
        let mut out = MixedPoly::zero(self.n);
        for (k, c) in &self.terms {
            let m = k.w as usize;
            assert!(m < pows.len(), "missing power for w-substitution");
            let zpart = MixedPoly::monomial(
                self.n,
                MixedKey::new(k.z.clone(), Exponent::zeros(self.n), 0),
                c.clone(),
            );
            out = out.add(&zpart.mul(&pows[m]));
        }
        out
    }
}

impl fmt::Display for HoloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let mut mono = String::new();
            for (j, &e) in k.z.iter().enumerate() {
                push_var(&mut mono, &format!("z{}", j + 1), e);
            }
            push_var(&mut mono, "w", k.w);
            parts.push(render_term(c, &mono));
        }
        write!(f, "{}", join_terms(&parts))
    }
}

/// Mixed polynomial in `(z, z̄, u)` over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedPoly {
    n: usize,
    terms: BTreeMap<MixedKey, Gauss>,
}

impl MixedPoly {
    pub fn zero(n: usize) -> Self {
        MixedPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, key: MixedKey, coeff: Gauss) -> Self {
        assert_eq!(key.z.len(), n);
        assert_eq!(key.zb.len(), n);
        let mut terms = BTreeMap::new();
        add_term(&mut terms, key, coeff);
        MixedPoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MixedKey, &Gauss)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &MixedKey) -> Gauss {
        self.terms.get(key).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.total()).max()
    }

    pub fn add(&self, other: &MixedPoly) -> MixedPoly {
        assert_eq!(self.n, other.n, "variable context mismatch");
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut terms, k.clone(), c.clone());
        }
        MixedPoly { n: self.n, terms }
    }

    pub fn sub(&self, other: &MixedPoly) -> MixedPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MixedPoly {
        self.scale(&-&Gauss::one())
    }

    pub fn scale(&self, c: &Gauss) -> MixedPoly {
        if c.is_zero() {
            return MixedPoly::zero(self.n);
        }
        MixedPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn scale_rat(&self, s: &Rat) -> MixedPoly {
        self.scale(&Gauss::from_rat(s.clone()))
    }

    /// Exact product, failing on mismatched variable contexts.
    pub fn checked_mul(&self, other: &MixedPoly) -> Result<MixedPoly, super::AlgebraError> {
        if self.n != other.n {
            return Err(super::AlgebraError::Dimension(format!(
                "cannot multiply polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &MixedPoly) -> MixedPoly {
        assert_eq!(self.n, other.n, "variable context mismatch");
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = MixedKey::new(ka.z.add(&kb.z), ka.zb.add(&kb.zb), ka.u + kb.u);
                add_term(&mut terms, key, ca * cb);
            }
        }
        MixedPoly { n: self.n, terms }
    }

    /// Complex conjugate: swaps every `z`-exponent with its `z̄`-exponent and
    /// conjugates every coefficient. An involution.
    pub fn conjugate(&self) -> MixedPoly {
        MixedPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.conjugate(), c.conj()))
                .collect(),
        }
    }

    /// Whether the polynomial is real-valued: the coefficient of
    /// `z^a z̄^b u^k` equals the conjugate of the coefficient of `z^b z̄^a u^k`.
    pub fn is_real(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| self.coeff(&k.conjugate()) == c.conj())
    }

    /// Real part `(p + p̄)/2`.
    pub fn re_part(&self) -> MixedPoly {
        self.add(&self.conjugate()).scale_rat(&super::gauss::rat(1, 2))
    }

    /// Imaginary part `(p − p̄)/(2i)`.
    pub fn im_part(&self) -> MixedPoly {
        self.sub(&self.conjugate())
            .scale(&Gauss::from_parts(0, 1, -1, 2))
    }

    /// Formal partial derivative with respect to `z_j` (z̄ and `u` are
    /// independent variables).
    pub fn partial_z(&self, j: usize) -> MixedPoly {
        assert!(j < self.n, "variable index out of range");
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if let Some(z) = k.z.step_down(j) {
                let factor = Gauss::from_int(i64::from(k.z[j]));
                add_term(
                    &mut terms,
                    MixedKey::new(z, k.zb.clone(), k.u),
                    c * &factor,
                );
            }
        }
        MixedPoly { n: self.n, terms }
    }

    /// Powers `(u + i·self)^m` for `m = 0..=max`, for the substitution
    /// `w ↦ u + iΦ`. `self` must be `u`-free.
    pub fn w_substitution_powers(&self, max: u32) -> Vec<MixedPoly> {
        let base = MixedPoly::monomial(
            self.n,
            MixedKey::new(Exponent::zeros(self.n), Exponent::zeros(self.n), 1),
            Gauss::one(),
        )
        .add(&self.scale(&Gauss::i()));
        let mut pows = Vec::with_capacity(max as usize + 1);
        pows.push(MixedPoly::monomial(
            self.n,
            MixedKey::new(Exponent::zeros(self.n), Exponent::zeros(self.n), 0),
            Gauss::one(),
        ));
        for m in 1..=max {
            let next = pows[(m - 1) as usize].mul(&base);
            pows.push(next);
        }
        pows
    }
}

impl fmt::Display for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let mut mono = String::new();
            for (j, &e) in k.z.iter().enumerate() {
                push_var(&mut mono, &format!("z{}", j + 1), e);
            }
            for (j, &e) in k.zb.iter().enumerate() {
                push_var(&mut mono, &format!("zb{}", j + 1), e);
            }
            push_var(&mut mono, "u", k.u);
            parts.push(render_term(c, &mono));
        }
        write!(f, "{}", join_terms(&parts))
    }
}

fn push_var(mono: &mut String, name: &str, e: u32) {
    if e == 0 {
        return;
    }
    if !mono.is_empty() {
        mono.push('*');
    }
    mono.push_str(name);
    if e > 1 {
        mono.push_str(&format!("^{}", e));
    }
}

fn render_term(c: &Gauss, mono: &str) -> String {
    if mono.is_empty() {
        return format!("{}", c);
    }
    if c == &Gauss::one() {
        return mono.to_string();
    }
    if c == &(-&Gauss::one()) {
        return format!("-{}", mono);
    }
    if c.is_real() && c.re.is_integer() {
        return format!("{}*{}", c, mono);
    }
    format!("({})*{}", c, mono)
}

fn join_terms(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

/// Exact determinant of a square matrix of holomorphic polynomials by
/// cofactor expansion along the first row.
pub fn holo_det(m: &[Vec<HoloPoly>]) -> Result<HoloPoly, super::AlgebraError> {
    let rows = m.len();
    if rows == 0 || m.iter().any(|r| r.len() != rows) {
        return Err(super::AlgebraError::Dimension(
            "determinant requires a non-empty square matrix".into(),
        ));
    }
    let n = m[0][0].n();
    Ok(det_rec(m, n))
}

fn det_rec(m: &[Vec<HoloPoly>], n: usize) -> HoloPoly {
    let size = m.len();
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = HoloPoly::zero(n);
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<HoloPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&det_rec(&minor, n));
        if col % 2 == 0 {
            acc = acc.add(&cof);
        } else {
            acc = acc.sub(&cof);
        }
    }
    acc
}
