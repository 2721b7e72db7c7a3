//! Truncated symmetric series in the Schur basis of `X`, `Y`, `Z`.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lr::schur_product;
use super::power::PowerSeries;
use crate::error::{KronError, Result};
use crate::kronecker::character_table;
use crate::partitions::{display_cmp, partitions_of, Partition};

/// Per-alphabet total-degree bounds `(d_X, d_Y, d_Z)`.
pub type Caps = [u32; 3];

/// `(λ_X, λ_Y, λ_Z)` indexing `s_{λ_X}[X] s_{λ_Y}[Y] s_{λ_Z}[Z]`.
pub type SchurKey = [Partition; 3];

pub fn key_string(key: &SchurKey) -> String {
    format!("{}|{}|{}", key[0], key[1], key[2])
}

pub fn parse_key(s: &str) -> Result<SchurKey> {
    let parts: Vec<&str> = s.split('|').collect();
    if parts.len() != 3 {
        return Err(KronError::InvalidPartition(s.to_string()));
    }
    Ok([parts[0].parse()?, parts[1].parse()?, parts[2].parse()?])
}

/// Series keys in table order: display order per alphabet, X first.
pub fn key_cmp(a: &SchurKey, b: &SchurKey) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| display_cmp(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSeries {
    caps: Caps,
    terms: BTreeMap<SchurKey, BigRational>,
}

impl SchurSeries {
    pub fn zero(caps: Caps) -> Self {
        SchurSeries {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        let mut s = Self::zero(caps);
        s.add_term(Default::default(), BigRational::one());
        s
    }

    /// `c · s_{key}`.
    pub fn monomial(caps: Caps, key: SchurKey, c: BigRational) -> Self {
        let mut s = Self::zero(caps);
        s.add_term(key, c);
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn fits(&self, key: &SchurKey) -> bool {
        key.iter().zip(&self.caps).all(|(p, &c)| p.weight() <= c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchurKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `value` at `key`; keys beyond the caps are dropped.
    pub fn add_term(&mut self, key: SchurKey, value: BigRational) {
        if value.is_zero() || !self.fits(&key) {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Exact coefficient, 0 when absent. Keys beyond the caps are an error.
    pub fn coefficient(&self, key: &SchurKey) -> Result<BigRational> {
        if !self.fits(key) {
            return Err(KronError::BeyondCaps {
                key: key_string(key),
                caps: self.caps,
            });
        }
        Ok(self.terms.get(key).cloned().unwrap_or_else(BigRational::zero))
    }

    pub fn coeff(&self, x: &Partition, y: &Partition, z: &Partition) -> Result<BigRational> {
        self.coefficient(&[x.clone(), y.clone(), z.clone()])
    }

    fn check_caps(&self, other: &SchurSeries) -> Result<()> {
        if self.caps != other.caps {
            return Err(KronError::CapMismatch(self.caps, other.caps));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> SchurSeries {
        let mut out = SchurSeries::zero(self.caps);
        for (key, v) in &self.terms {
            out.add_term(key.clone(), v * k);
        }
        out
    }

    /// Truncated product; each alphabet multiplies by Littlewood–Richardson.
    pub fn multiply(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.check_caps(other)?;
        let mut out = SchurSeries::zero(self.caps);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                if (0..3).any(|i| ka[i].weight() + kb[i].weight() > self.caps[i]) {
                    continue;
                }
                let coeff = va * vb;
                let px = schur_product(&ka[0], &kb[0]);
                let py = schur_product(&ka[1], &kb[1]);
                let pz = schur_product(&ka[2], &kb[2]);
                for (nx, cx) in px.iter() {
                    for (ny, cy) in py.iter() {
                        for (nz, cz) in pz.iter() {
                            let mult = BigInt::from(cx * cy * cz);
                            out.add_term(
                                [nx.clone(), ny.clone(), nz.clone()],
                                &coeff * BigRational::from_integer(mult),
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies each homogeneous component by its total degree: the graded
    /// form of `t·d/dt` at `t = 1`.
    pub fn euler(&self) -> SchurSeries {
        let mut out = SchurSeries::zero(self.caps);
        for (key, v) in &self.terms {
            let d: u32 = key.iter().map(Partition::weight).sum();
            out.add_term(key.clone(), v * BigRational::from_integer(BigInt::from(d)));
        }
        out
    }

    /// Re-truncates to smaller caps.
    pub fn truncate(&self, caps: Caps) -> SchurSeries {
        let mut out = SchurSeries::zero(caps);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    /// The first non-integral coefficient, if any, in table order.
    pub fn first_non_integral(&self) -> Option<(&SchurKey, &BigRational)> {
        let mut bad: Vec<_> = self.terms.iter().filter(|(_, v)| !v.is_integer()).collect();
        bad.sort_by(|a, b| key_cmp(a.0, b.0));
        bad.into_iter().next()
    }

    /// Power-sum form: `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ` per alphabet.
    pub fn to_power(&self) -> Result<PowerSeries> {
        let mut out = PowerSeries::zero(self.caps);
        for (key, value) in &self.terms {
            let mut cols: Vec<Vec<(Partition, BigRational)>> = Vec::with_capacity(3);
            for lam in key {
                let n = lam.weight();
                let table = character_table(n)?;
                cols.push(
                    partitions_of(n)
                        .into_iter()
                        .filter_map(|rho| {
                            let chi = table.value(lam, &rho);
                            (chi != 0).then(|| {
                                let z = BigInt::from(rho.z());
                                (rho, BigRational::new(BigInt::from(chi), z))
                            })
                        })
                        .collect(),
                );
            }
            for (rx, cx) in &cols[0] {
                for (ry, cy) in &cols[1] {
                    for (rz, cz) in &cols[2] {
                        out.add_term([rx.clone(), ry.clone(), rz.clone()], value * cx * cy * cz);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SeriesJson {
        let mut keys: Vec<&SchurKey> = self.terms.keys().collect();
        keys.sort_by(|a, b| key_cmp(a, b));
        SeriesJson {
            caps: self.caps,
            coefficients: keys
                .into_iter()
                .map(|k| {
                    let v = &self.terms[k];
                    (key_string(k), format!("{}/{}", v.numer(), v.denom()))
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<SchurSeries> {
        let mut out = SchurSeries::zero(json.caps);
        for (k, v) in &json.coefficients {
            let key = parse_key(k)?;
            if !out.fits(&key) {
                return Err(KronError::BeyondCaps {
                    key: k.clone(),
                    caps: json.caps,
                });
            }
            let value = parse_rational(v)?;
            out.add_term(key, value);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || KronError::Expression(format!("bad rational `{s}`"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Serialized series: `"λX|λY|λZ" → "p/q"`, keys in table order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub caps: Caps,
    pub coefficients: IndexMap<String, String>,
}
