//! Polynomials in `q` and `t` with integer coefficients, expansions in the
//! fundamental quasisymmetric basis, Schur expansions with polynomial
//! coefficients, and exact extraction of Schur coefficients.
//!
//! A degree-`n` fundamental expansion ([`FExpansion`]) stores one coefficient
//! polynomial per signature of length `n - 1`; the signature plays the role
//! of the descent composition of the corresponding fundamental function. A
//! [`SchurExpansion`] stores one coefficient polynomial per partition of `n`.
//! [`schur_to_f`] rewrites a (possibly skew) Schur function in the
//! fundamental basis by enumerating standard tableaux, and [`extract_schur`]
//! inverts that rewriting exactly — solving an integer linear system and
//! demanding nonnegative integer polynomial coefficients — so a claimed
//! Schur expansion is never the result of floating-point rounding.
//!
//! Fundamental functions are never evaluated in underlying variables;
//! everything is done coefficient-wise in the two exact bases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::tableaux::{enumerate_standard, Partition, Signature, SkewShape};
use crate::words::syam_shape;
use crate::{DegError, Result};

/// A polynomial in `q` and `t` with arbitrary-precision integer
/// coefficients and nonnegative exponents.
///
/// The zero polynomial is the empty term map; no explicit zero coefficients
/// are ever stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QtPoly::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        QtPoly::monomial(0, 0, 1)
    }

    /// The single monomial `c · q^a t^b` (zero if `c` is zero).
    pub fn monomial(q: u32, t: u32, c: impl Into<BigInt>) -> Self {
        let mut p = QtPoly::zero();
        p.add_monomial(q, t, c);
        p
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `q^a t^b` (zero when absent).
    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_default()
    }

    /// Term iterator in increasing `(q, t)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    /// Adds `c · q^a t^b` in place.
    pub fn add_monomial(&mut self, q: u32, t: u32, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q, t)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    /// Adds `k · other` in place.
    pub fn add_scaled(&mut self, other: &QtPoly, k: &BigInt) {
        for (q, t, c) in other.terms() {
            self.add_monomial(q, t, c * k);
        }
    }

    /// Adds `other` in place.
    pub fn add_assign(&mut self, other: &QtPoly) {
        for (q, t, c) in other.terms() {
            self.add_monomial(q, t, c.clone());
        }
    }

    /// Subtracts `other` in place.
    pub fn sub_assign(&mut self, other: &QtPoly) {
        for (q, t, c) in other.terms() {
            self.add_monomial(q, t, -c.clone());
        }
    }

    /// The polynomial with the roles of `q` and `t` exchanged.
    pub fn swap_qt(&self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (q, t, c) in self.terms() {
            out.add_monomial(t, q, c.clone());
        }
        out
    }

    /// Sum of all coefficients, i.e. the evaluation at `q = t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn fmt_term(q: u32, t: u32, c: &BigInt, out: &mut String) {
        use fmt::Write;
        let abs = c.abs();
        let unit = abs == 1u8.into();
        if !unit || (q == 0 && t == 0) {
            write!(out, "{abs}").unwrap();
        }
        let mut need_space = !unit || (q == 0 && t == 0);
        for (var, exp) in [("q", q), ("t", t)] {
            if exp == 0 {
                continue;
            }
            if need_space {
                out.push(' ');
            }
            need_space = true;
            if exp == 1 {
                out.push_str(var);
            } else {
                write!(out, "{var}^{exp}").unwrap();
            }
        }
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (q, t, c)) in self.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            QtPoly::fmt_term(q, t, c, &mut out);
        }
        write!(f, "{out}")
    }
}

/// One serialized monomial of a [`QtPoly`].
#[derive(Serialize, Deserialize)]
struct Monomial {
    q: u32,
    t: u32,
    #[serde(with = "coeff_serde")]
    c: BigInt,
}

/// Serializes an arbitrary-precision integer as a JSON number when it fits
/// in an `i64`, and as a decimal string otherwise; accepts both on input.
mod coeff_serde {
    use super::*;

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = BigInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<BigInt, E> {
                Ok(BigInt::from(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<BigInt, E> {
                Ok(BigInt::from(v))
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<BigInt, E> {
                v.parse().map_err(|_| E::custom("invalid integer string"))
            }
        }
        d.deserialize_any(V)
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let monomials: Vec<Monomial> = self
            .terms()
            .map(|(q, t, c)| Monomial { q, t, c: c.clone() })
            .collect();
        monomials.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let monomials = Vec::<Monomial>::deserialize(d)?;
        let mut p = QtPoly::zero();
        for m in monomials {
            p.add_monomial(m.q, m.t, m.c);
        }
        Ok(p)
    }
}

/// A degree-`n` expansion in the fundamental quasisymmetric basis: a
/// coefficient polynomial for each signature of length `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FExpansion {
    n: usize,
    terms: BTreeMap<Signature, QtPoly>,
}

impl FExpansion {
    /// The zero expansion in degree `n ≥ 1`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "fundamental expansions require degree at least 1");
        FExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The degree: signatures have length `degree() - 1`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Term map, keyed by signature in increasing order (`-` before `+`).
    pub fn terms(&self) -> &BTreeMap<Signature, QtPoly> {
        &self.terms
    }

    /// The coefficient polynomial of one signature (zero when absent).
    pub fn coeff(&self, sig: &Signature) -> QtPoly {
        self.terms.get(sig).cloned().unwrap_or_default()
    }

    /// Adds `c · q^a t^b · F_sig` in place.
    pub fn add_monomial(
        &mut self,
        sig: &Signature,
        q: u32,
        t: u32,
        c: impl Into<BigInt>,
    ) -> Result<()> {
        self.check_len(sig)?;
        let entry = self.terms.entry(sig.clone()).or_default();
        entry.add_monomial(q, t, c);
        if entry.is_zero() {
            self.terms.remove(sig);
        }
        Ok(())
    }

    /// Adds `k · poly · F_sig` in place.
    pub fn add_scaled(&mut self, sig: &Signature, poly: &QtPoly, k: &BigInt) -> Result<()> {
        self.check_len(sig)?;
        let entry = self.terms.entry(sig.clone()).or_default();
        entry.add_scaled(poly, k);
        if entry.is_zero() {
            self.terms.remove(sig);
        }
        Ok(())
    }

    /// Builds the unit-coefficient expansion `Σ F_sig` over a signature
    /// multiset, e.g. the vertex signatures of a signed colored graph.
    pub fn from_signatures(
        n: usize,
        sigs: impl IntoIterator<Item = Signature>,
    ) -> Result<FExpansion> {
        let mut f = FExpansion::new(n);
        for sig in sigs {
            f.add_monomial(&sig, 0, 0, 1)?;
        }
        Ok(f)
    }

    /// The expansion with the roles of `q` and `t` exchanged in every
    /// coefficient.
    pub fn swap_qt(&self) -> FExpansion {
        FExpansion {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(sig, poly)| (sig.clone(), poly.swap_qt()))
                .collect(),
        }
    }

    fn check_len(&self, sig: &Signature) -> Result<()> {
        if sig.len() + 1 != self.n {
            return Err(DegError::DegreeMismatch {
                left: self.n,
                right: sig.len() + 1,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sig, poly)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "F({sig})  {poly}")?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for FExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: BTreeMap<Signature, QtPoly>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.n < 1 {
            return Err(D::Error::custom("degree must be at least 1"));
        }
        for (sig, _) in raw.terms.iter() {
            if sig.len() + 1 != raw.n {
                return Err(D::Error::custom(format!(
                    "signature {sig} has length {}, expected {}",
                    sig.len(),
                    raw.n - 1
                )));
            }
        }
        let terms = raw.terms.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(FExpansion { n: raw.n, terms })
    }
}

/// The first coefficient disagreement between two fundamental expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDifference {
    /// Lexicographically first signature whose coefficients differ.
    pub signature: Signature,
    /// Coefficient polynomial on the left expansion.
    pub left: QtPoly,
    /// Coefficient polynomial on the right expansion.
    pub right: QtPoly,
}

/// Compares two fundamental expansions of the same degree, returning the
/// first differing coefficient, or `None` when they are equal.
///
/// Comparing expansions of different degrees is an error rather than a
/// difference: no signature could witness it.
pub fn f_equal(a: &FExpansion, b: &FExpansion) -> Result<Option<FDifference>> {
    if a.degree() != b.degree() {
        return Err(DegError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let keys: BTreeSet<&Signature> = a.terms.keys().chain(b.terms.keys()).collect();
    for sig in keys {
        let left = a.coeff(sig);
        let right = b.coeff(sig);
        if left != right {
            return Ok(Some(FDifference {
                signature: sig.clone(),
                left,
                right,
            }));
        }
    }
    Ok(None)
}

/// A degree-`n` Schur expansion: a coefficient polynomial for each partition
/// of `n` that appears.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    terms: BTreeMap<Partition, QtPoly>,
}

impl SchurExpansion {
    /// The zero expansion in degree `n ≥ 1`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Schur expansions require degree at least 1");
        SchurExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The degree: partitions in the support have size `degree()`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Term map, keyed by partition.
    pub fn terms(&self) -> &BTreeMap<Partition, QtPoly> {
        &self.terms
    }

    /// The coefficient polynomial of one partition (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> QtPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds `poly · s_lambda` in place.
    pub fn add_term(&mut self, lambda: &Partition, poly: &QtPoly) -> Result<()> {
        if lambda.size() != self.n {
            return Err(DegError::DegreeMismatch {
                left: self.n,
                right: lambda.size(),
            });
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        entry.add_assign(poly);
        if entry.is_zero() {
            self.terms.remove(lambda);
        }
        Ok(())
    }

    /// The expansion with the roles of `q` and `t` exchanged in every
    /// coefficient.
    pub fn swap_qt(&self) -> SchurExpansion {
        SchurExpansion {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(lambda, poly)| (lambda.clone(), poly.swap_qt()))
                .collect(),
        }
    }

    /// Rewrites the expansion in the fundamental basis: each `s_lambda`
    /// contributes its coefficient once per standard tableau of `lambda`,
    /// attached to that tableau's signature.
    pub fn expand(&self) -> FExpansion {
        let mut f = FExpansion::new(self.n);
        for (lambda, poly) in &self.terms {
            let flam = schur_to_f(&SkewShape::straight(lambda.clone()))
                .expect("partitions of n >= 1 have nonempty shapes");
            for (sig, count) in flam.terms() {
                let count = count.coeff(0, 0);
                f.add_scaled(sig, poly, &count)
                    .expect("degrees agree by construction");
            }
        }
        f
    }

    /// Whether every coefficient of every partition is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QtPoly::is_nonnegative)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, poly)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "s{lambda}  {poly}")?;
        }
        Ok(())
    }
}

/// One serialized term of a [`SchurExpansion`].
#[derive(Serialize, Deserialize)]
struct SchurTerm {
    lambda: Partition,
    coeff: QtPoly,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<SchurTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(lambda, coeff)| SchurTerm {
                lambda: lambda.clone(),
                coeff: coeff.clone(),
            })
            .collect();
        let mut st = s.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: Vec<SchurTerm>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.n < 1 {
            return Err(D::Error::custom("degree must be at least 1"));
        }
        let mut out = SchurExpansion::new(raw.n);
        for term in raw.terms {
            out.add_term(&term.lambda, &term.coeff)
                .map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

/// Expands the Schur function of a (possibly skew) shape in the fundamental
/// basis: the unit-coefficient sum of `F_sig(T)` over standard tableaux `T`
/// of the shape.
pub fn schur_to_f(shape: &SkewShape) -> Result<FExpansion> {
    let n = shape.size();
    if n == 0 {
        return Err(DegError::InvalidShape(
            "cannot expand the empty shape".into(),
        ));
    }
    let mut f = FExpansion::new(n);
    for t in enumerate_standard(shape) {
        f.add_monomial(&t.signature(), 0, 0, 1)?;
    }
    Ok(f)
}

/// Extracts the unique Schur expansion of a fundamental expansion, requiring
/// every Schur coefficient to be a polynomial with nonnegative integer
/// coefficients.
///
/// The extraction solves the exact linear system whose columns are the
/// fundamental expansions of the Schur functions `s_lambda` over all
/// partitions of the degree. It fails with [`DegError::NotSchurPositive`]
/// when the system has no solution (the input is not symmetric — the
/// residual is reported), when a solution requires fractional coefficients,
/// or when a solution exists but has a negative coefficient. On success the
/// result is re-expanded and checked against the input.
pub fn extract_schur(f: &FExpansion) -> Result<SchurExpansion> {
    let n = f.degree();
    let partitions = Partition::all_of(n);

    // Column signature counts: how many standard tableaux of each partition
    // carry each signature.
    let columns: Vec<BTreeMap<Signature, BigInt>> = partitions
        .iter()
        .map(|lambda| {
            let flam = schur_to_f(&SkewShape::straight(lambda.clone()))
                .expect("partitions of n >= 1 have nonempty shapes");
            flam.terms()
                .iter()
                .map(|(sig, poly)| (sig.clone(), poly.coeff(0, 0)))
                .collect()
        })
        .collect();

    // Row space: every signature seen in any column or in the input.
    let rows: Vec<Signature> = columns
        .iter()
        .flat_map(|col| col.keys())
        .chain(f.terms().keys())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // One right-hand-side column per (q, t) monomial present in the input.
    let monomials: Vec<(u32, u32)> = f
        .terms()
        .values()
        .flat_map(|poly| poly.terms().map(|(q, t, _)| (q, t)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let ncols = partitions.len();
    let width = ncols + monomials.len();
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|sig| {
            let mut row = Vec::with_capacity(width);
            for col in &columns {
                let v = col.get(sig).cloned().unwrap_or_default();
                row.push(BigRational::from_integer(v));
            }
            for &(q, t) in &monomials {
                row.push(BigRational::from_integer(f.coeff(sig).coeff(q, t)));
            }
            row
        })
        .collect();

    // Gauss–Jordan elimination over the exact rationals. Every Schur column
    // must produce a pivot: the fundamental expansions of distinct Schur
    // functions are linearly independent.
    let mut pivot_row_of_col = vec![usize::MAX; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot = (rank..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pivot) = pivot else {
            unreachable!("Schur-function columns are linearly independent");
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].clone();
        for j in col..width {
            let v = std::mem::take(&mut mat[rank][j]);
            mat[rank][j] = v / &inv;
        }
        for r in 0..mat.len() {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for j in col..width {
                let delta = &factor * &mat[rank][j];
                let v = std::mem::take(&mut mat[r][j]);
                mat[r][j] = v - delta;
            }
        }
        pivot_row_of_col[col] = rank;
        rank += 1;
    }

    // Read off the unique candidate solution and note any fractional entry.
    let mut fractional: Option<String> = None;
    let mut candidate = SchurExpansion::new(n);
    for (col, lambda) in partitions.iter().enumerate() {
        let row = pivot_row_of_col[col];
        let mut poly = QtPoly::zero();
        for (m, &(q, t)) in monomials.iter().enumerate() {
            let v = &mat[row][ncols + m];
            if v.is_integer() {
                poly.add_monomial(q, t, v.to_integer());
            } else if fractional.is_none() {
                fractional = Some(format!(
                    "coefficient of s{lambda} at q^{q} t^{t} would be {v}, not an integer"
                ));
            }
        }
        if !poly.is_zero() {
            candidate
                .add_term(lambda, &poly)
                .expect("partition sizes match the degree");
        }
    }

    if let Some(msg) = fractional {
        return Err(DegError::NotSchurPositive(msg));
    }

    // Residual: the input minus the re-expansion of the candidate. Nonzero
    // residual means the input is not in the span of Schur functions.
    let re = candidate.expand();
    let mut residual_terms: Vec<String> = Vec::new();
    let keys: BTreeSet<&Signature> = f.terms().keys().chain(re.terms().keys()).collect();
    for sig in keys {
        let mut diff = f.coeff(sig);
        diff.sub_assign(&re.coeff(sig));
        if !diff.is_zero() {
            residual_terms.push(format!("({diff}) F({sig})"));
        }
    }
    if !residual_terms.is_empty() {
        return Err(DegError::NotSchurPositive(format!(
            "residual after the best exact fit: {}",
            residual_terms.join(" + ")
        )));
    }

    if let Some((lambda, poly)) = candidate
        .terms()
        .iter()
        .find(|(_, poly)| !poly.is_nonnegative())
    {
        return Err(DegError::NotSchurPositive(format!(
            "exact expansion exists but the coefficient of s{lambda} is {poly}"
        )));
    }

    debug_assert!(
        f_equal(&candidate.expand(), f)
            .expect("degrees agree")
            .is_none(),
        "re-expansion of an extracted Schur expansion must reproduce the input"
    );
    Ok(candidate)
}

/// Counts, for each partition, the standard tableaux of `shape` whose
/// content reading word is a standardized Yamanouchi word of that partition.
///
/// This is the combinatorial (word-counting) route to the Schur coefficients
/// of a skew Schur function; [`extract_schur`] is the linear-algebra route.
pub fn yamanouchi_schur_counts(shape: &SkewShape) -> BTreeMap<Partition, BigInt> {
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for t in enumerate_standard(shape) {
        let word = t.content_reading_word();
        if let Ok(Some(lambda)) = syam_shape(&word) {
            *counts.entry(lambda).or_default() += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, standard_graph};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn straight_f(parts: &[usize]) -> FExpansion {
        schur_to_f(&SkewShape::straight(p(parts))).unwrap()
    }

    #[test]
    fn qt_poly_arithmetic_and_display() {
        let mut a = QtPoly::monomial(1, 0, 2);
        a.add_monomial(0, 2, 1);
        a.add_monomial(1, 0, -2);
        assert_eq!(a, QtPoly::monomial(0, 2, 1));
        assert_eq!(a.to_string(), "t^2");
        assert_eq!(QtPoly::zero().to_string(), "0");
        assert_eq!(QtPoly::one().to_string(), "1");
        assert_eq!(QtPoly::monomial(2, 1, 3).to_string(), "3 q^2 t");
        let mut b = QtPoly::monomial(1, 0, 1);
        b.add_monomial(0, 0, -4);
        assert_eq!(b.to_string(), "-4 + q");
        assert_eq!(b.swap_qt().to_string(), "-4 + t");
        assert_eq!(b.eval_at_one(), BigInt::from(-3));
        assert!(!b.is_nonnegative());
    }

    #[test]
    fn single_row_expands_to_all_plus() {
        let f = straight_f(&[4]);
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.coeff(&sig("+++")), QtPoly::one());
    }

    #[test]
    fn single_column_expands_to_all_minus() {
        let f = straight_f(&[1, 1, 1]);
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.coeff(&sig("--")), QtPoly::one());
    }

    #[test]
    fn two_one_expands_to_two_signatures() {
        let f = straight_f(&[2, 1]);
        let sigs: Vec<String> = f.terms().keys().map(|s| s.to_string()).collect();
        assert_eq!(sigs, vec!["-+", "+-"]);
        for poly in f.terms().values() {
            assert_eq!(*poly, QtPoly::one());
        }
    }

    #[test]
    fn three_two_expands_to_five_signatures() {
        let f = straight_f(&[3, 2]);
        let expected = ["+-++", "-+-+", "-++-", "+-+-", "++-+"];
        assert_eq!(f.terms().len(), expected.len());
        for s in expected {
            assert_eq!(f.coeff(&sig(s)), QtPoly::one(), "missing F({s})");
        }
    }

    #[test]
    fn f_equal_finds_first_difference() {
        let a = straight_f(&[2, 1]);
        let b = straight_f(&[1, 1, 1]);
        let diff = f_equal(&a, &b).unwrap().expect("expansions differ");
        assert_eq!(diff.signature, sig("--"));
        assert!(diff.left.is_zero());
        assert_eq!(diff.right, QtPoly::one());
        assert_eq!(f_equal(&a, &a).unwrap(), None);
    }

    #[test]
    fn f_equal_rejects_degree_mismatch() {
        let a = straight_f(&[2, 1]);
        let b = straight_f(&[2]);
        assert!(matches!(
            f_equal(&a, &b),
            Err(DegError::DegreeMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn extraction_round_trips_every_partition_through_degree_8() {
        for n in 1..=8 {
            for lambda in Partition::all_of(n) {
                let f = schur_to_f(&SkewShape::straight(lambda.clone())).unwrap();
                let e = extract_schur(&f).unwrap();
                assert_eq!(e.terms().len(), 1, "s{lambda} should extract to itself");
                assert_eq!(e.coeff(&lambda), QtPoly::one());
            }
        }
    }

    #[test]
    fn extraction_recovers_distinct_monomial_tags_through_degree_8() {
        // Tag every partition of n with a distinct power of q; exact
        // recovery of all tags at once exercises the joint system and hence
        // the linear independence of the Schur columns.
        for n in 1..=8 {
            let partitions = Partition::all_of(n);
            let mut f = FExpansion::new(n);
            let mut want = SchurExpansion::new(n);
            for (i, lambda) in partitions.iter().enumerate() {
                let tag = QtPoly::monomial(i as u32, 0, 1 + i as i64);
                want.add_term(lambda, &tag).unwrap();
                let flam = schur_to_f(&SkewShape::straight(lambda.clone())).unwrap();
                for (s, count) in flam.terms() {
                    f.add_scaled(s, &tag, &count.coeff(0, 0)).unwrap();
                }
            }
            let got = extract_schur(&f).unwrap();
            assert_eq!(got, want, "degree {n}");
        }
    }

    #[test]
    fn skew_extraction_matches_yamanouchi_counts() {
        let shapes = [
            (vec![3, 2, 1], vec![1]),
            (vec![3, 3], vec![2]),
            (vec![4, 2, 1], vec![2, 1]),
            (vec![2, 2, 2], vec![1, 1]),
            (vec![5, 2], vec![1]),
            (vec![3, 1], vec![1]),
            (vec![4, 3], vec![2, 1]),
        ];
        for (outer, inner) in shapes {
            let shape = SkewShape::new(p(&outer), p(&inner)).unwrap();
            let f = schur_to_f(&shape).unwrap();
            let e = extract_schur(&f).unwrap();
            assert!(e.is_nonnegative());
            let counts = yamanouchi_schur_counts(&shape);
            let from_counts: BTreeMap<Partition, QtPoly> = counts
                .into_iter()
                .map(|(lambda, c)| (lambda, QtPoly::monomial(0, 0, c)))
                .collect();
            assert_eq!(e.terms(), &from_counts, "shape {shape}");
        }
    }

    #[test]
    fn extraction_rejects_asymmetric_input() {
        // F(+-) alone is not symmetric: s(2,1) = F(+-) + F(-+) is the only
        // Schur function touching either signature.
        let mut f = FExpansion::new(3);
        f.add_monomial(&sig("+-"), 0, 0, 1).unwrap();
        let err = extract_schur(&f).unwrap_err();
        assert!(matches!(err, DegError::NotSchurPositive(_)));
        let msg = err.to_string();
        assert!(msg.contains("residual"), "unexpected message: {msg}");
    }

    #[test]
    fn extraction_rejects_negative_coefficients() {
        // F(+-) + F(-+) - F(--) is symmetric with expansion s(2,1) - s(1,1,1).
        let mut f = straight_f(&[2, 1]);
        f.add_monomial(&sig("--"), 0, 0, -1).unwrap();
        let err = extract_schur(&f).unwrap_err();
        assert!(matches!(err, DegError::NotSchurPositive(_)));
        let msg = err.to_string();
        assert!(msg.contains("s(1,1,1)"), "unexpected message: {msg}");
    }

    #[test]
    fn extraction_rejects_fractional_coefficients() {
        // Two copies of F(+-) but only one F(-+) forces a half coefficient
        // on s(2,1) in the pivot rows, caught before any residual check.
        let mut f = FExpansion::new(3);
        f.add_monomial(&sig("+-"), 0, 0, 2).unwrap();
        f.add_monomial(&sig("-+"), 0, 0, 1).unwrap();
        let err = extract_schur(&f).unwrap_err();
        assert!(matches!(err, DegError::NotSchurPositive(_)));
    }

    #[test]
    fn schur_expansion_expand_matches_manual_sum() {
        let mut e = SchurExpansion::new(3);
        e.add_term(&p(&[3]), &QtPoly::one()).unwrap();
        e.add_term(&p(&[2, 1]), &QtPoly::monomial(1, 0, 1)).unwrap();
        let f = e.expand();
        assert_eq!(f.coeff(&sig("++")), QtPoly::one());
        assert_eq!(f.coeff(&sig("+-")), QtPoly::monomial(1, 0, 1));
        assert_eq!(f.coeff(&sig("-+")), QtPoly::monomial(1, 0, 1));
        assert!(f.coeff(&sig("--")).is_zero());
    }

    #[test]
    fn union_of_standard_graphs_extracts_unit_multiplicities() {
        let a = standard_graph(&p(&[3, 1])).unwrap();
        let b = standard_graph(&p(&[2, 2])).unwrap();
        let g = disjoint_union(&[&a, &b]).unwrap();
        let sigs = (0..g.vertex_count()).map(|v| g.signature(v).clone());
        let f = FExpansion::from_signatures(g.n(), sigs).unwrap();
        let e = extract_schur(&f).unwrap();
        let mut want = SchurExpansion::new(4);
        want.add_term(&p(&[3, 1]), &QtPoly::one()).unwrap();
        want.add_term(&p(&[2, 2]), &QtPoly::one()).unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn schur_expansion_json_schema_is_stable() {
        let mut e = SchurExpansion::new(6);
        e.add_term(&p(&[3, 2, 1]), &QtPoly::monomial(1, 0, 2))
            .unwrap();
        let value = serde_json::to_value(&e).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "n": 6,
                "terms": [{"lambda": [3, 2, 1], "coeff": [{"q": 1, "t": 0, "c": 2}]}]
            })
        );
        let back: SchurExpansion = serde_json::from_value(value).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn f_expansion_json_round_trips_with_string_keys() {
        let mut f = FExpansion::new(3);
        f.add_monomial(&sig("+-"), 1, 0, 1).unwrap();
        f.add_monomial(&sig("--"), 0, 2, 3).unwrap();
        let value = serde_json::to_value(&f).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "n": 3,
                "terms": {
                    "--": [{"q": 0, "t": 2, "c": 3}],
                    "+-": [{"q": 1, "t": 0, "c": 1}]
                }
            })
        );
        let back: FExpansion = serde_json::from_value(value).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn huge_coefficients_round_trip_as_strings() {
        let big: BigInt = BigInt::from(1u8) << 100;
        let poly = QtPoly::monomial(0, 0, big.clone());
        let value = serde_json::to_value(&poly).unwrap();
        assert_eq!(
            value,
            serde_json::json!([{"q": 0, "t": 0, "c": big.to_string()}])
        );
        let back: QtPoly = serde_json::from_value(value).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn f_expansion_deserialization_rejects_bad_lengths() {
        let bad = serde_json::json!({
            "n": 3,
            "terms": {"+": [{"q": 0, "t": 0, "c": 1}]}
        });
        assert!(serde_json::from_value::<FExpansion>(bad).is_err());
    }
}
