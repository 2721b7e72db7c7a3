//! Closed-form stabilization bounds and the leading-coefficient formula.

use serde::Serialize;

use crate::partitions::Partition;
use crate::symfunc::{schur_at_integer, schur_at_monomials, Exponent, Laurent};

/// `(k₁, k₂, k₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnBounds {
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
}

/// `(k′₁, k′₂, k′₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RowBounds {
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
}

/// `k₁ = |α|+α₁+β′₁+γ′₁`, the others by symmetry.
pub fn column_bounds(alpha: &Partition, beta: &Partition, gamma: &Partition) -> ColumnBounds {
    let k =
        |a: &Partition, b: &Partition, c: &Partition| a.weight() + a.first_part() + b.first_column() + c.first_column();
    ColumnBounds {
        k1: k(alpha, beta, gamma),
        k2: k(beta, alpha, gamma),
        k3: k(gamma, alpha, beta),
    }
}

pub fn row_bounds(alpha: &Partition, beta: &Partition, gamma: &Partition) -> RowBounds {
    let total = alpha.weight() + beta.weight() + gamma.weight();
    RowBounds {
        k1: total + beta.first_part(),
        k2: total + gamma.first_part(),
        k3: total + alpha.first_part() + beta.first_part() + gamma.first_part(),
    }
}

/// β and γ fit in one column and `ᾱ` (α without its first row) in three.
pub fn sharpness_predicate(alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
    beta.first_part() <= 1 && gamma.first_part() <= 1 && alpha.part(1) <= 3
}

/// The alphabet `{1/(vw), v/w, w/v}`, whose sum is `(1+v²+w²)/(vw)`.
pub const LEADING_ALPHABET: [Exponent; 3] = [(-1, -1), (1, -1), (-1, 1)];

/// `s_{ᾱ′}[(1+v²+w²)/(vw)] · s_{β′}[1] · s_{γ′}[1]`.
pub fn leading_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Laurent {
    let unit = schur_at_integer(&beta.conjugate(), 1) * schur_at_integer(&gamma.conjugate(), 1);
    if unit == 0 {
        return Laurent::zero();
    }
    let alpha_bar = alpha.remove_first_row();
    schur_at_monomials(&alpha_bar.conjugate(), &LEADING_ALPHABET).scale(unit as i64)
}
