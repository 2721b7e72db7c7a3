//! Truncated series in the power-sum basis of three alphabets. Plethysm is
//! multiplicative here, so every `σ[E]`, `χ[E]` and `s_λ[E]` is built at this
//! level and converted to the Schur basis once.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expr::AlphabetExpression;
use super::series::{Caps, SchurKey, SchurSeries};
use crate::error::{KronError, Result};
use crate::kronecker::character_table;
use crate::partitions::{partitions_of, Partition};

/// `p_{ρX}[X] p_{ρY}[Y] p_{ρZ}[Z]` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    caps: Caps,
    terms: BTreeMap<SchurKey, BigRational>,
}

fn within(caps: &Caps, key: &SchurKey) -> bool {
    key.iter().zip(caps).all(|(p, &c)| p.weight() <= c)
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    Partition::from_unsorted(parts)
}

impl PowerSeries {
    pub fn zero(caps: Caps) -> Self {
        PowerSeries {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        let mut s = Self::zero(caps);
        s.add_term(Default::default(), BigRational::one());
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchurKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: SchurKey, value: BigRational) {
        if value.is_zero() || !within(&self.caps, &key) {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &PowerSeries) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scale(&self, k: &BigRational) -> PowerSeries {
        let mut out = PowerSeries::zero(self.caps);
        for (key, v) in &self.terms {
            out.add_term(key.clone(), v * k);
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let mut out = PowerSeries::zero(self.caps);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                if ka
                    .iter()
                    .zip(kb)
                    .zip(&self.caps)
                    .any(|((a, b), &c)| a.weight() + b.weight() > c)
                {
                    continue;
                }
                let key = [merge(&ka[0], &kb[0]), merge(&ka[1], &kb[1]), merge(&ka[2], &kb[2])];
                out.add_term(key, va * vb);
            }
        }
        out
    }

    /// `exp(self)` for a series without constant term; the sum terminates
    /// because every term raises some alphabet's degree.
    pub fn exp(&self) -> Result<PowerSeries> {
        if self.terms.contains_key(&SchurKey::default()) {
            return Err(KronError::Expression("exp of a series with a constant term".into()));
        }
        let mut total = PowerSeries::one(self.caps);
        let mut term = PowerSeries::one(self.caps);
        for n in 1u32.. {
            term = term.mul(self).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
            if term.is_zero() {
                break;
            }
            total.add_assign(&term);
        }
        Ok(total)
    }

    /// Schur-basis form: `p_ρ = Σ_λ χ^λ(ρ) s_λ` in each alphabet.
    pub fn to_schur(&self) -> Result<SchurSeries> {
        let mut out = SchurSeries::zero(self.caps);
        for (key, value) in &self.terms {
            let tables = key
                .iter()
                .map(|rho| character_table(rho.weight()))
                .collect::<Result<Vec<_>>>()?;
            let columns: Vec<Vec<(Partition, i64)>> = key
                .iter()
                .zip(&tables)
                .map(|(rho, t)| {
                    t.partitions()
                        .iter()
                        .map(|lam| (lam.clone(), t.value(lam, rho)))
                        .filter(|(_, v)| *v != 0)
                        .collect()
                })
                .collect();
            for (lx, cx) in &columns[0] {
                for (ly, cy) in &columns[1] {
                    for (lz, cz) in &columns[2] {
                        let c = BigInt::from(*cx) * BigInt::from(*cy) * BigInt::from(*cz);
                        out.add_term(
                            [lx.clone(), ly.clone(), lz.clone()],
                            value * BigRational::from_integer(c),
                        );
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `p_k[E]`: additive over terms, multiplicative over alphabets,
/// `p_k[n·A] = n·p_k[A]` and `p_k[εA] = (−1)^k p_k[A]`.
pub fn power_eval(expr: &AlphabetExpression, k: u32, caps: Caps) -> PowerSeries {
    assert!(k >= 1, "power sums start at p_1");
    let mut out = PowerSeries::zero(caps);
    for (letters, coeff) in expr.terms() {
        let key: SchurKey = std::array::from_fn(|i| {
            if letters.alphabets[i] {
                Partition::row(k)
            } else {
                Partition::empty()
            }
        });
        let sign = if letters.eps && k % 2 == 1 { -1 } else { 1 };
        out.add_term(key, BigRational::from_integer(BigInt::from(sign * coeff)));
    }
    out
}

fn check_no_constant(expr: &AlphabetExpression) -> Result<()> {
    if expr.has_constant_term() {
        return Err(KronError::Expression(format!(
            "`{expr}` has a constant term; its series does not truncate"
        )));
    }
    Ok(())
}

fn max_cap(caps: &Caps) -> u32 {
    caps.iter().copied().max().unwrap_or(0)
}

/// `Σ_{k≥1} p_k[E]/k` truncated; `σ[E]` is its exponential.
pub fn log_sigma(expr: &AlphabetExpression, caps: Caps) -> Result<PowerSeries> {
    check_no_constant(expr)?;
    let mut out = PowerSeries::zero(caps);
    for k in 1..=max_cap(&caps) {
        let inv = BigRational::new(BigInt::one(), BigInt::from(k));
        out.add_assign(&power_eval(expr, k, caps).scale(&inv));
    }
    Ok(out)
}

/// `σ[E] = Σ_n h_n[E]` in the power-sum basis.
pub fn sigma_power(expr: &AlphabetExpression, caps: Caps) -> Result<PowerSeries> {
    log_sigma(expr, caps)?.exp()
}

/// `χ[E] = Σ_{k≥1} p_k[E]` in the power-sum basis.
pub fn chi_power(expr: &AlphabetExpression, caps: Caps) -> Result<PowerSeries> {
    check_no_constant(expr)?;
    let mut out = PowerSeries::zero(caps);
    for k in 1..=max_cap(&caps) {
        out.add_assign(&power_eval(expr, k, caps));
    }
    Ok(out)
}

/// `s_λ[E] = Σ_ρ χ^λ(ρ)/z_ρ p_ρ[E]` in the power-sum basis.
pub fn schur_plethysm_power(lambda: &Partition, expr: &AlphabetExpression, caps: Caps) -> Result<PowerSeries> {
    check_no_constant(expr)?;
    let n = lambda.weight();
    let table = character_table(n)?;
    let powers: Vec<PowerSeries> = (1..=n.max(1)).map(|k| power_eval(expr, k, caps)).collect();
    let mut out = PowerSeries::zero(caps);
    for rho in partitions_of(n) {
        let chi = table.value(lambda, &rho);
        if chi == 0 {
            continue;
        }
        let mut prod = PowerSeries::one(caps);
        for &part in rho.parts() {
            prod = prod.mul(&powers[part as usize - 1]);
            if prod.is_zero() {
                break;
            }
        }
        let coeff = BigRational::new(BigInt::from(chi), BigInt::from(rho.z()));
        out.add_assign(&prod.scale(&coeff));
    }
    Ok(out)
}

/// `s_λ` evaluated at a specialization given by its power sums `p_k ↦ value(k)`.
pub fn specialize(lambda: &Partition, value: impl Fn(u32) -> BigRational) -> Result<BigRational> {
    let n = lambda.weight();
    let table = character_table(n)?;
    let mut total = BigRational::zero();
    for rho in partitions_of(n) {
        let chi = table.value(lambda, &rho);
        if chi == 0 {
            continue;
        }
        let prod: BigRational = rho.parts().iter().map(|&k| value(k)).product();
        total += prod * BigRational::new(BigInt::from(chi), BigInt::from(rho.z()));
    }
    Ok(total)
}
