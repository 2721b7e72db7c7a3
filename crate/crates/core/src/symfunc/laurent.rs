//! Laurent polynomials in two variables `v`, `w` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

/// Exponent pair `(i, j)` for `v^i w^j`.
pub type Exponent = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<Exponent, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, (0, 0))
    }

    pub fn monomial(coeff: i64, exp: Exponent) -> Self {
        let mut l = Laurent::zero();
        l.add_term(exp, coeff);
        l
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, i64)>) -> Self {
        let mut l = Laurent::zero();
        for (e, c) in terms {
            l.add_term(e, c);
        }
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: Exponent) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    fn add_term(&mut self, exp: Exponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, k: i64) -> Laurent {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }
}

impl Add for &Laurent {
    type Output = Laurent;

    fn add(self, rhs: &Laurent) -> Laurent {
        Laurent::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Mul for &Laurent {
    type Output = Laurent;

    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|((i, j), c)| {
                let mut s = c.to_string();
                if i != 0 {
                    s.push_str(&format!("*v^{i}"));
                }
                if j != 0 {
                    s.push_str(&format!("*w^{j}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for Laurent {
    /// A list of `{v, w, coeff}` records.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            v: i32,
            w: i32,
            coeff: i64,
        }
        s.collect_seq(self.terms().map(|((v, w), coeff)| Term { v, w, coeff }))
    }
}
