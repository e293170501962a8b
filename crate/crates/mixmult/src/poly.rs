//! Exact multivariate polynomials with rational coefficients.
//!
//! Used for Hilbert polynomials: coefficients are `BigRational`, exponents
//! are small. Terms live in a `BTreeMap` so all iteration is deterministic
//! and zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::Dimension;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn big_pow(base: &BigInt, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `k!` as a big integer.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=k {
        acc *= BigInt::from(t);
    }
    acc
}

/// Product of the factorials of the entries: the normalization constant
/// attached to a mixed-multiplicity type.
pub fn type_factorial(k: &[u32]) -> BigInt {
    k.iter().map(|&e| factorial(e)).product()
}

impl RationalPolynomial {
    pub fn zero(arity: usize) -> Self {
        RationalPolynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, value: BigRational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], value);
        p
    }

    pub fn constant_int(arity: usize, value: i64) -> Self {
        Self::constant(arity, BigRational::from(BigInt::from(value)))
    }

    /// The monomial `coeff * n^exp`.
    pub fn term(exp: Vec<u32>, coeff: BigRational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, exp: Vec<u32>, coeff: BigRational) {
        assert_eq!(exp.len(), self.arity, "term arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> RationalPolynomial {
        if factor.is_zero() {
            return Self::zero(self.arity);
        }
        RationalPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    pub fn evaluate(&self, point: &[i64]) -> BigRational {
        assert_eq!(point.len(), self.arity, "evaluation point arity mismatch");
        let mut acc = BigRational::zero();
        for (exp, coeff) in &self.terms {
            let mut prod = BigInt::one();
            for (e, &x) in exp.iter().zip(point) {
                prod *= big_pow(&BigInt::from(x), *e);
            }
            acc += coeff * BigRational::from(prod);
        }
        acc
    }

    /// Total degree, with `-inf` for the zero polynomial.
    pub fn total_degree(&self) -> Dimension {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .map_or(Dimension::MinusInfinity, Dimension::Finite)
    }

    /// The terms of maximal total degree, as `(degree, exponent -> coeff)`.
    pub fn total_degree_leading_terms(&self) -> Result<(usize, BTreeMap<Vec<u32>, BigRational>)> {
        let Dimension::Finite(deg) = self.total_degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() as usize == deg)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok((deg, lead))
    }

    /// The univariate-in-one-axis polynomial `binomial(n_axis - base, k)`.
    pub fn binomial_in_var(arity: usize, axis: usize, base: i64, k: u32) -> RationalPolynomial {
        assert!(axis < arity, "axis out of range");
        let mut acc = Self::constant_int(arity, 1);
        for t in 0..k {
            // factor (n_axis - base - t)
            let mut factor = Self::zero(arity);
            let mut exp = vec![0; arity];
            exp[axis] = 1;
            factor.add_term(exp, BigRational::one());
            factor.add_term(vec![0; arity], BigRational::from(BigInt::from(-(base + t as i64))));
            acc = acc.mul(&factor);
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(k)))
    }

    /// Render with explicit variable names (one per axis).
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.arity, "one name per axis");
        if self.is_zero() {
            return "0".to_string();
        }
        // Leading terms first: descending total degree, then descending
        // exponent order.
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, key) in keys.iter().enumerate() {
            let coeff = &self.terms[*key];
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_const = key.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                out.push_str(&abs.to_string());
                if !is_const {
                    out.push('*');
                }
            }
            let mut first_var = true;
            for (axis, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    out.push('*');
                }
                first_var = false;
                out.push_str(names[axis]);
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }

    /// JSON form: `{"terms": [{"exp": [...], "num": .., "den": ..}]}` with
    /// the leading terms first.
    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let terms: Vec<Value> = keys
            .iter()
            .map(|key| {
                let c = &self.terms[*key];
                json!({
                    "exp": key,
                    "num": bigint_json(c.numer()),
                    "den": bigint_json(c.denom()),
                })
            })
            .collect();
        json!({ "terms": terms })
    }

    /// Parse the JSON form produced by [`to_json`](Self::to_json).
    pub fn from_json(value: &Value, arity: usize) -> Result<Self> {
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("polynomial JSON needs a 'terms' array".into()))?;
        let mut p = Self::zero(arity);
        for t in terms {
            let exp: Vec<u32> = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput("term needs an 'exp' array".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| Error::InvalidInput("term exponents must be small nonnegative integers".into()))
                })
                .collect::<Result<_>>()?;
            if exp.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: exp.len() });
            }
            let num = bigint_from_json(t.get("num"))?;
            let den = bigint_from_json(t.get("den"))?;
            if den.is_zero() {
                return Err(Error::InvalidInput("zero denominator".into()));
            }
            p.add_term(exp, BigRational::new(num, den));
        }
        Ok(p)
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

fn bigint_from_json(v: Option<&Value>) -> Result<BigInt> {
    match v {
        Some(Value::Number(n)) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::InvalidInput("coefficient out of range".into())),
        Some(Value::String(s)) => s
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad integer literal '{s}'"))),
        _ => Err(Error::InvalidInput("term needs integer 'num' and 'den'".into())),
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("n{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.render(&refs))
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
