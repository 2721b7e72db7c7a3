//! Integer partitions and the row/column growth operator.
//!
//! A [`Partition`] is stored without trailing zeros, so structural equality is
//! partition equality. The derived [`Ord`] is plain lexicographic order on the
//! parts (`() < (1) < (1, 1) < (2)`); [`display_cmp`] gives the
//! degree-then-reverse-lex order used when listing tables.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::KronError;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, KronError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(KronError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: u32) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ₁`, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ′₁`, the length of the first column.
    pub fn first_column(&self) -> u32 {
        self.parts.len() as u32
    }

    /// The `i`-th part (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Adds `step.row_add` boxes to the first row, then appends `step.col_add`
    /// parts equal to 1. On the empty partition this yields `(x, 1^y)`.
    pub fn grow(&self, step: GrowthStep) -> Partition {
        let mut parts = self.parts.clone();
        if step.row_add > 0 {
            match parts.first_mut() {
                Some(first) => *first += step.row_add,
                None => parts.push(step.row_add),
            }
        }
        parts.extend(std::iter::repeat_n(1, step.col_add as usize));
        Partition { parts }
    }

    /// `λ̄ = (λ₂, λ₃, …)`.
    pub fn remove_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// `λ̂`: first row and first column removed.
    pub fn remove_first_row_and_column(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).filter(|&&p| p > 1).map(|&p| p - 1).collect(),
        }
    }

    /// True for `(a+1, 1^b)`; the empty partition is not a hook.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn hook_coords(&self) -> Option<HookCoords> {
        self.is_hook().then(|| HookCoords {
            arm: self.first_part() - 1,
            leg: self.first_column() - 1,
        })
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Hook length of the cell at (row, col), both 0-based.
    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let arm = self.parts[row] - col as u32 - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p as usize > col).count() as u32;
        arm + leg + 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let n = self.weight() as u128;
        let num: u128 = (1..=n).product();
        let den: u128 = self.cells().map(|(r, c)| self.hook_length(r, c) as u128).product();
        num / den
    }

    /// Cells of the diagram as (row, col), row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    /// Multiplicities `m_i` of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.first_part() as usize + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of a permutation of cycle type λ.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| {
                let fact: u128 = (1..=m as u128).product();
                (i as u128).pow(m) * fact
            })
            .product()
    }

    /// Tuple rendering `(2, 1)`; `∅` for the empty partition.
    pub fn to_tuple_string(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        format!("({})", inner.join(", "))
    }
}

/// Degree first (ascending), then reverse lexicographic within a degree:
/// `∅, (1), (2), (1,1), (3), (2,1), (1,1,1), …`.
pub fn display_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.weight().cmp(&b.weight()).then_with(|| b.cmp(a))
}

impl fmt::Display for Partition {
    /// Comma-separated parts (`2,1,1`), `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = KronError;

    /// Accepts `2,1,1`, `(2, 1, 1)`, and `-`, `∅` or the empty string for ∅.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "-" || trimmed == "∅" || trimmed == "\\ep" {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| KronError::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(KronError::InvalidPartition(s.to_string()));
        }
        Partition::new(parts).map_err(|_| KronError::InvalidPartition(s.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = KronError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand used heavily in tests: `part![2, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// Hook `(a|b) = (a+1, 1^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookCoords {
    pub arm: u32,
    pub leg: u32,
}

impl HookCoords {
    pub fn new(arm: u32, leg: u32) -> Self {
        HookCoords { arm, leg }
    }

    pub fn as_partition(&self) -> Partition {
        let mut parts = vec![self.arm + 1];
        parts.extend(std::iter::repeat_n(1, self.leg as usize));
        Partition { parts }
    }

    pub fn weight(&self) -> u32 {
        self.arm + self.leg + 1
    }

    /// All hooks of weight `1..=max_weight`.
    pub fn up_to(max_weight: u32) -> impl Iterator<Item = HookCoords> {
        (1..=max_weight).flat_map(|w| (0..w).map(move |arm| HookCoords::new(arm, w - 1 - arm)))
    }
}

/// The `op{x}{y}` operator: `x` boxes on the first row, `y` on the first column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrowthStep {
    pub row_add: u32,
    pub col_add: u32,
}

impl GrowthStep {
    pub const fn new(row_add: u32, col_add: u32) -> Self {
        GrowthStep { row_add, col_add }
    }

    pub fn transposed(self) -> Self {
        GrowthStep::new(self.col_add, self.row_add)
    }
}

/// All partitions of `n`, largest first in lexicographic order:
/// `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight `0..=max_weight` in display order.
pub fn partitions_up_to(max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(partitions_of).collect()
}

/// Equal-weight triples of a fixed weight, all orderings.
pub fn triples_of_weight(n: u32) -> Vec<[Partition; 3]> {
    let ps = partitions_of(n);
    let mut out = Vec::with_capacity(ps.len().pow(3));
    for a in &ps {
        for b in &ps {
            for c in &ps {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}
