//! Formal alphabet expressions: integer combinations of products of the
//! alphabets `X`, `Y`, `Z` and the sign letter `ε`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{KronError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    X,
    Y,
    Z,
}

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::X, Alphabet::Y, Alphabet::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Monomial shape: optional `ε` times a product of distinct alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letters {
    pub eps: bool,
    pub alphabets: [bool; 3],
}

impl Letters {
    pub const ONE: Letters = Letters {
        eps: false,
        alphabets: [false; 3],
    };

    pub fn is_constant(&self) -> bool {
        !self.alphabets.iter().any(|&a| a)
    }

    fn try_mul(self, other: Letters) -> Option<Letters> {
        let mut alphabets = self.alphabets;
        for (slot, &o) in alphabets.iter_mut().zip(&other.alphabets) {
            if *slot && o {
                return None;
            }
            *slot |= o;
        }
        Some(Letters {
            eps: self.eps ^ other.eps,
            alphabets,
        })
    }
}

/// Additive normal form: one coefficient per [`Letters`], zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlphabetExpression {
    terms: BTreeMap<Letters, i64>,
}

impl AlphabetExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, Letters::ONE)
    }

    pub fn alphabet(a: Alphabet) -> Self {
        let mut alphabets = [false; 3];
        alphabets[a.index()] = true;
        Self::term(1, Letters { eps: false, alphabets })
    }

    pub fn x() -> Self {
        Self::alphabet(Alphabet::X)
    }

    pub fn y() -> Self {
        Self::alphabet(Alphabet::Y)
    }

    pub fn z() -> Self {
        Self::alphabet(Alphabet::Z)
    }

    pub fn eps() -> Self {
        Self::term(
            1,
            Letters {
                eps: true,
                alphabets: [false; 3],
            },
        )
    }

    pub fn term(coeff: i64, letters: Letters) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(letters, coeff);
        }
        AlphabetExpression { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Letters, i64)> + '_ {
        self.terms.iter().map(|(&l, &c)| (l, c))
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(Letters::is_constant)
    }

    /// Product; fails when an alphabet would appear squared.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = AlphabetExpression::zero();
        for (&l1, &c1) in &self.terms {
            for (&l2, &c2) in &other.terms {
                let l = l1
                    .try_mul(l2)
                    .ok_or_else(|| KronError::Expression(format!("({self}) * ({other}) repeats an alphabet")))?;
                out.add_term(l, c1 * c2);
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, letters: Letters, coeff: i64) {
        let entry = self.terms.entry(letters).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&letters);
        }
    }
}

impl Add for AlphabetExpression {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
        self
    }
}

impl Neg for AlphabetExpression {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Sub for AlphabetExpression {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for AlphabetExpression {
    type Output = Self;

    fn mul(self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        AlphabetExpression {
            terms: self.terms.into_iter().map(|(l, c)| (l, c * k)).collect(),
        }
    }
}

impl Mul<AlphabetExpression> for i64 {
    type Output = AlphabetExpression;

    fn mul(self, e: AlphabetExpression) -> AlphabetExpression {
        e * self
    }
}

impl Mul for AlphabetExpression {
    type Output = Self;

    /// Panics if an alphabet would be squared; see [`AlphabetExpression::try_mul`].
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("alphabet products must be square-free")
    }
}

impl fmt::Display for AlphabetExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mut word = String::new();
            if l.eps {
                word.push('ε');
            }
            for a in Alphabet::ALL {
                if l.alphabets[a.index()] {
                    word.push_str(&format!("{a:?}"));
                }
            }
            match (c.abs(), word.is_empty()) {
                (k, true) => write!(f, "{k}")?,
                (1, false) => f.write_str(&word)?,
                (k, false) => write!(f, "{k}{word}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let x = AlphabetExpression::x;
        let e = x() + x() - x();
        assert_eq!(e, x());
        assert_eq!(x() - x(), AlphabetExpression::zero());
        let w = AlphabetExpression::y() * AlphabetExpression::z() - x();
        assert_eq!(w.to_string(), "YZ - X");
        let s = (AlphabetExpression::eps() - AlphabetExpression::constant(1)) * x();
        assert_eq!(s.terms().count(), 2);
        assert_eq!(
            (AlphabetExpression::eps() * AlphabetExpression::eps()),
            AlphabetExpression::constant(1)
        );
        assert!(x().try_mul(&x()).is_err());
        assert!((AlphabetExpression::constant(1) - AlphabetExpression::eps()).has_constant_term());
    }
}
