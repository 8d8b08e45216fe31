//! Exact univariate polynomial arithmetic over the integers, plus the
//! falling-factorial (complete-graph) basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored constant term first; the representation is kept
/// canonical (no trailing zeros), so the zero polynomial is the empty vector
/// and its degree is undefined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients (constant term first), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Convenience constructor from machine integers, constant term first.
    pub fn from_coeffs_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, constant term first. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact value p(q).
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// p(x + c), computed exactly by Horner re-expansion.
    pub fn shift(&self, c: i64) -> IntPoly {
        let c = BigInt::from(c);
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // out <- out * (x + c) + a
            let mut next = vec![BigInt::zero(); out.len() + 1];
            for (i, b) in out.iter().enumerate() {
                next[i + 1] += b;
                next[i] += b * &c;
            }
            next[0] += a;
            out = next;
        }
        IntPoly::new(out)
    }

    /// (−1)^deg(p) · p(−x + c); the zero polynomial maps to itself.
    ///
    /// Monic in, monic out, and the map is an involution for fixed c.
    pub fn reflect(&self, c: i64) -> IntPoly {
        let Some(deg) = self.degree() else {
            return IntPoly::zero();
        };
        // p(−x + c) = r(x − c) with r(x) = p(−x)
        let negated = IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        );
        let reflected = negated.shift(-c);
        if deg % 2 == 1 {
            reflected.neg()
        } else {
            reflected
        }
    }

    /// Exact quotient if `divisor` divides self in Z\[x\]; `None` otherwise.
    ///
    /// Only used for cross-checks (the interesting factor is built by
    /// construction, never by division).
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let top = std::mem::take(&mut rem[i]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * b;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Coefficients as decimal strings, constant term first (the JSON wire
    /// form; arbitrary precision survives the round trip).
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Largest |coefficient| as f64 (for numeric sanity scaling).
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| bigint_to_f64(&c.abs()))
            .fold(0.0, f64::max)
    }
}

pub(crate) fn bigint_to_f64(v: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::INFINITY)
}

// Wire form: a JSON array of decimal coefficient strings, constant term
// first, so arbitrary precision survives the round trip.
impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        IntPoly::from_coeff_strings(&strings).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The monic falling factorial (x − shift)(x − shift − 1)⋯(x − shift − m + 1).
///
/// `falling_factorial(m, 0)` is the chromatic polynomial of the complete
/// graph K_m; m = 0 gives the constant 1.
pub fn falling_factorial(m: usize, shift: i64) -> IntPoly {
    let mut out = IntPoly::one();
    for t in 0..m {
        let root = BigInt::from(shift) + BigInt::from(t);
        out = out.mul(&IntPoly::new(vec![-root, BigInt::one()]));
    }
    out
}

/// Falling factorial of an integer argument: q(q−1)⋯(q−m+1).
pub fn falling_factorial_int(q: &BigInt, m: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..m {
        acc *= q - BigInt::from(t);
    }
    acc
}

/// Binomial coefficient with the usual convention C(n, r) = 0 for r < 0 or
/// r > n (n ≥ 0).
pub fn binomial(n: i64, r: i64) -> BigInt {
    if r < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..r {
        num *= BigInt::from(n - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Generalized binomial C(q, r) for arbitrary integer q: (q)_r / r!.
/// Always an integer (product of r consecutive integers over r!).
pub fn binomial_big(q: &BigInt, r: usize) -> BigInt {
    let num = falling_factorial_int(q, r);
    let mut den = BigInt::one();
    for t in 1..=r {
        den *= BigInt::from(t);
    }
    num / den
}

/// A polynomial expressed in the complete-graph basis: Σ c_n (x)_n.
///
/// Entries map n to c_n; explicit zeros are never stored. Round trip with
/// [`IntPoly`] is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FFSeries {
    entries: BTreeMap<usize, BigInt>,
}

impl FFSeries {
    pub fn new(entries: BTreeMap<usize, BigInt>) -> Self {
        let entries = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        FFSeries { entries }
    }

    pub fn entries(&self) -> &BTreeMap<usize, BigInt> {
        &self.entries
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.entries.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The unique coefficients c_n with p = Σ c_n (x)_n, found by repeated
/// synthetic division: p(x) = c_0 + x·(c_1 + (x−1)·(c_2 + (x−2)·(…))).
pub fn to_complete_graph_basis(p: &IntPoly) -> FFSeries {
    let mut entries = BTreeMap::new();
    let mut cur = p.coeffs.to_vec();
    let mut n = 0usize;
    while !cur.is_empty() {
        // synthetic division of cur by (x − n): remainder = cur(n)
        let root = BigInt::from(n as i64);
        let mut quot = vec![BigInt::zero(); cur.len().saturating_sub(1)];
        let mut carry = BigInt::zero();
        for (i, a) in cur.iter().enumerate().rev() {
            let val = a + &carry * &root;
            if i == 0 {
                carry = val;
            } else {
                carry = val.clone();
                quot[i - 1] = val;
            }
        }
        if !carry.is_zero() {
            entries.insert(n, carry);
        }
        while quot.last().is_some_and(Zero::is_zero) {
            quot.pop();
        }
        cur = quot;
        n += 1;
    }
    FFSeries { entries }
}

/// Exact inverse of [`to_complete_graph_basis`].
pub fn from_complete_graph_basis(series: &FFSeries) -> IntPoly {
    let mut out = IntPoly::zero();
    for (&n, c) in series.entries.iter() {
        out = out.add(&falling_factorial(n, 0).scale(c));
    }
    out
}
