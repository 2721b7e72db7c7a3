//! Kronecker coefficients by character sums, and the reduced (stable) values.

pub mod characters;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{KronError, Result};
use crate::partitions::{GrowthStep, Partition};
use crate::stability::GrowthVector;

pub use characters::{character_table, CharacterTable, CharacterTableCache};

fn check_equal_weights(parts: &[&Partition]) -> Result<u32> {
    let n = parts[0].weight();
    if parts.iter().any(|p| p.weight() != n) {
        let desc: Vec<String> = parts
            .iter()
            .map(|p| format!("{} (weight {})", p.to_tuple_string(), p.weight()))
            .collect();
        return Err(KronError::WeightMismatch(desc.join(", ")));
    }
    Ok(n)
}

/// `g(λ, μ, ν) = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = check_equal_weights(&[lambda, mu, nu])?;
    let table = character_table(n)?;
    Ok(kronecker_in(&table, lambda, mu, nu))
}

/// Same as [`kronecker`] against a table already in hand.
pub fn kronecker_in(table: &CharacterTable, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (a, b, c) = (table.row(lambda), table.row(mu), table.row(nu));
    kronecker_rows(table, a, b, c)
}

fn kronecker_rows(table: &CharacterTable, a: &[i64], b: &[i64], c: &[i64]) -> u64 {
    let sum: i128 = table
        .class_sizes()
        .iter()
        .enumerate()
        .map(|(i, &size)| size as i128 * a[i] as i128 * b[i] as i128 * c[i] as i128)
        .sum();
    let factorial: i128 = (1..=table.n() as i128).product();
    debug_assert_eq!(sum % factorial, 0);
    (sum / factorial) as u64
}

/// `s_λ * s_μ = Σ_ν g(λ, μ, ν) s_ν`, zero terms omitted.
pub fn internal_product(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let n = check_equal_weights(&[lambda, mu])?;
    let table = character_table(n)?;
    let (a, b) = (table.row(lambda), table.row(mu));
    Ok(table
        .partitions()
        .iter()
        .enumerate()
        .filter_map(|(i, nu)| {
            let g = kronecker_rows(&table, a, b, table.row_at(i));
            (g != 0).then(|| (nu.clone(), g))
        })
        .collect())
}

/// The triple `(λ op{m−a}{a}, μ op{m−b}{b}, ν op{m−c}{c})`.
pub fn hook_grown_triple(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    g: GrowthVector,
) -> Result<[Partition; 3]> {
    if !g.is_valid() {
        return Err(KronError::InvalidGrowth(g.to_string()));
    }
    Ok([
        lambda.grow(GrowthStep::new(g.m - g.a, g.a)),
        mu.grow(GrowthStep::new(g.m - g.b, g.b)),
        nu.grow(GrowthStep::new(g.m - g.c, g.c)),
    ])
}

pub fn hook_grown_kronecker(lambda: &Partition, mu: &Partition, nu: &Partition, g: GrowthVector) -> Result<u64> {
    let [l, m, n] = hook_grown_triple(lambda, mu, nu, g)?;
    kronecker(&l, &m, &n)
}

/// Consecutive window over which reduced values must agree.
pub const STABILITY_WINDOW: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedKronecker {
    pub value: u64,
    /// First `n` of the agreeing window.
    pub onset: u32,
    /// Every `(n, g)` evaluated, in order.
    pub evaluations: Vec<(u32, u64)>,
}

/// `(n − |α|, α)`; requires `n − |α| ≥ α₁`.
pub fn pad_first_row(alpha: &Partition, n: u32) -> Partition {
    let mut parts = vec![n - alpha.weight()];
    parts.extend_from_slice(alpha.parts());
    Partition::from_unsorted(parts)
}

/// Reduced Kronecker coefficient: `g((n−|α|,α), (n−|β|,β), (n−|γ|,γ))` for
/// large `n`, evaluated from `W₀ = |α|+|β|+|γ|+α₁+β₁+γ₁+1` until
/// [`STABILITY_WINDOW`] consecutive values agree.
pub fn reduced_kronecker(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<ReducedKronecker> {
    let start = alpha.weight()
        + beta.weight()
        + gamma.weight()
        + alpha.first_part()
        + beta.first_part()
        + gamma.first_part()
        + 1;
    let max_n = characters::global().max_n();
    let window = STABILITY_WINDOW as u32;
    if start + window - 1 > max_n {
        return Err(KronError::TableTooLarge {
            n: start + window - 1,
            max: max_n,
        });
    }
    let mut evaluations = Vec::new();
    for n in start..=max_n {
        let g = kronecker(
            &pad_first_row(alpha, n),
            &pad_first_row(beta, n),
            &pad_first_row(gamma, n),
        )?;
        evaluations.push((n, g));
        let tail = &evaluations[evaluations.len().saturating_sub(STABILITY_WINDOW)..];
        if tail.len() == STABILITY_WINDOW && tail.iter().all(|&(_, v)| v == g) {
            return Ok(ReducedKronecker {
                value: g,
                onset: tail[0].0,
                evaluations,
            });
        }
    }
    Err(KronError::NoStabilization {
        max_n,
        detail: format!("values {evaluations:?}"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Onset {
    pub n: u32,
    pub value: i64,
}

/// Least `n₀` from which the sequence is constant through its end, provided
/// that constant tail holds at least `window` values. `values[i]` is the term
/// at `first + i`.
pub fn stabilization_onset(first: u32, values: &[i64], window: usize) -> Option<Onset> {
    let last = *values.last()?;
    let tail = values.iter().rev().take_while(|&&v| v == last).count();
    (tail >= window.max(1)).then(|| Onset {
        n: first + (values.len() - tail) as u32,
        value: last,
    })
}
