//! Exact sparse polynomials in `q` and `t`, and the generating polynomials
//! aggregated over whole path families.
//!
//! For a partition, the family polynomial sums one monomial per path over
//! every rearrangement of the parts, weighted either by `(dinv, area)` or by
//! `(area, bounce)`; the sweep map makes the two weightings agree. The
//! symmetry defect subtracts the variable-swapped polynomial and is zero
//! exactly when the family polynomial is symmetric in `q` and `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::path::{compositions_of, enumerate_paths, KDyckPath, Limits, Partition};
use crate::stats::{area, bounce, dinv};

/// A sparse bivariate polynomial with exact integer coefficients.
///
/// Zero coefficients are never stored; equality is term-map equality.
/// Canonical term order is `q`-exponent descending, then `t`-exponent
/// descending, and the text form prints every term as `c*q^a*t^b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial::default()
    }

    /// A single monomial `c*q^a*t^b`.
    pub fn monomial(q_exp: u32, t_exp: u32, coeff: i64) -> Self {
        let mut p = QTPolynomial::zero();
        p.add_monomial(q_exp, t_exp, coeff);
        p
    }

    /// Builds a polynomial from `(q_exp, t_exp, coeff)` triples.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(terms: I) -> Self {
        let mut p = QTPolynomial::zero();
        for (q, t, c) in terms {
            p.add_monomial(q, t, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c*q^a*t^b` into the polynomial.
    pub fn add_monomial(&mut self, q_exp: u32, t_exp: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((q_exp, t_exp)).or_insert(0);
        *slot = slot
            .checked_add(coeff)
            .expect("polynomial coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    /// Coefficient of `q^a*t^b` (zero when absent).
    pub fn coefficient(&self, q_exp: u32, t_exp: u32) -> i64 {
        self.terms.get(&(q_exp, t_exp)).copied().unwrap_or(0)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().rev().map(|(&(q, t), &c)| (q, t, c))
    }

    /// Exchanges the exponents of `q` and `t` in every term.
    pub fn swap_variables(&self) -> Self {
        let mut p = QTPolynomial::zero();
        for (&(q, t), &c) in &self.terms {
            p.add_monomial(t, q, c);
        }
        p
    }

    /// Exact integer evaluation.
    pub fn evaluate(&self, q_value: i64, t_value: i64) -> i64 {
        let overflow = "overflow in polynomial evaluation";
        self.terms.iter().fold(0i64, |acc, (&(q, t), &c)| {
            let term = q_value
                .checked_pow(q)
                .and_then(|qp| t_value.checked_pow(t).and_then(|tp| qp.checked_mul(tp)))
                .and_then(|m| m.checked_mul(c))
                .expect(overflow);
            acc.checked_add(term).expect(overflow)
        })
    }
}

impl Add for &QTPolynomial {
    type Output = QTPolynomial;

    fn add(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (&(q, t), &c) in &rhs.terms {
            out.add_monomial(q, t, c);
        }
        out
    }
}

impl Sub for &QTPolynomial {
    type Output = QTPolynomial;

    fn sub(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (&(q, t), &c) in &rhs.terms {
            out.add_monomial(q, t, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (q, t, c)) in self.terms().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*q^{q}*t^{t}", c.unsigned_abs())?;
        }
        Ok(())
    }
}

impl Serialize for QTPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            q: u32,
            t: u32,
            c: i64,
        }
        #[derive(Serialize)]
        struct Wire<T> {
            terms: T,
        }
        struct Terms<'a>(&'a QTPolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.term_count()))?;
                for (q, t, c) in self.0.terms() {
                    seq.serialize_element(&Term { q, t, c })?;
                }
                seq.end()
            }
        }
        Wire { terms: Terms(self) }.serialize(serializer)
    }
}

/// Which statistic pair weights each path in [`c_lambda`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatisticPair {
    /// `q^dinv * t^area`
    DinvArea,
    /// `q^area * t^bounce`
    AreaBounce,
}

/// The family polynomial of a partition: one monomial per path, over every
/// rearrangement of the parts.
pub fn c_lambda(
    lambda: &Partition,
    pair: StatisticPair,
    limits: &Limits,
) -> Result<QTPolynomial, Error> {
    let mut poly = QTPolynomial::zero();
    let mut path_budget = limits.max_paths;
    for k in compositions_of(lambda) {
        for path in enumerate_paths(&k, limits)? {
            path_budget = path_budget.checked_sub(1).ok_or_else(|| Error::SizeGuard {
                detail: format!(
                    "aggregation for partition {lambda} exceeds {} paths",
                    limits.max_paths
                ),
            })?;
            let (q_exp, t_exp) = match pair {
                StatisticPair::DinvArea => (dinv(&path).total, area(&path)),
                StatisticPair::AreaBounce => (area(&path), bounce(&path).value),
            };
            poly.add_monomial(q_exp as u32, t_exp as u32, 1);
        }
    }
    Ok(poly)
}

/// The defect of the partition's family polynomial under exchanging `q` and
/// `t`, oriented as `C(t,q) - C(q,t)`; zero exactly when that polynomial is
/// symmetric. The result is antisymmetric under [`QTPolynomial::swap_variables`].
pub fn symmetry_defect(lambda: &Partition, limits: &Limits) -> Result<QTPolynomial, Error> {
    let c = c_lambda(lambda, StatisticPair::DinvArea, limits)?;
    Ok(&c.swap_variables() - &c)
}

/// The rank-reversing involution on paths with exactly two up steps: the
/// second up step's start level `r` is replaced by `k1 - r`.
///
/// Exchanges the `(area, bounce)` weight of the path with its transpose.
pub fn n2_involution(path: &KDyckPath) -> Result<KDyckPath, Error> {
    let k = path.composition();
    if k.part_count() != 2 {
        return Err(Error::NotTwoUps {
            ups: k.part_count(),
        });
    }
    let r2 = path.red_ranks()[1];
    let reflected = [0, k.parts()[0] - r2];
    Ok(KDyckPath::from_red_ranks(&k, &reflected).expect("reflected rank stays within range"))
}
