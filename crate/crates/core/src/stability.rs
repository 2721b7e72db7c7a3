//! Hook-stability regions, the growth semigroup and monotonicity scans.
//!
//! A [`GrowthVector`] `(a, b, c, m)` grows a triple `(λ, μ, ν)` into
//! `(λ op{m−a}{a}, μ op{m−b}{b}, ν op{m−c}{c})`. The region `Dom` is cut out
//! by the linear forms `ℓ₁ = −a+b+c`, `ℓ₂ = a−b+c`, `ℓ₃ = a+b−c` and
//! thresholds derived from a pluggable `N₀` ([`ThresholdFunction`]).

use std::fmt;
use std::ops::Add;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::kronecker::{self, characters, hook_grown_triple, kronecker};
use crate::par::Execution;
use crate::partitions::{partitions_of, GrowthStep, Partition};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrowthVector {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub m: u32,
}

impl GrowthVector {
    pub const fn new(a: u32, b: u32, c: u32, m: u32) -> Self {
        GrowthVector { a, b, c, m }
    }

    /// `m ≥ a, b, c`.
    pub fn is_valid(&self) -> bool {
        self.m >= self.a && self.m >= self.b && self.m >= self.c
    }

    pub fn forms(&self) -> LinearForms {
        LinearForms::of(self.a, self.b, self.c)
    }

    pub fn parity(&self) -> Parity {
        if (self.a + self.b + self.c).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn checked_sub(&self, other: GrowthVector) -> Option<GrowthVector> {
        Some(GrowthVector::new(
            self.a.checked_sub(other.a)?,
            self.b.checked_sub(other.b)?,
            self.c.checked_sub(other.c)?,
            self.m.checked_sub(other.m)?,
        ))
    }

    /// All vectors with `m ≤ max_m` and `a, b, c ≤ m`.
    pub fn all_valid(max_m: u32) -> impl Iterator<Item = GrowthVector> {
        (0..=max_m).flat_map(|m| {
            (0..=m).flat_map(move |a| (0..=m).flat_map(move |b| (0..=m).map(move |c| GrowthVector::new(a, b, c, m))))
        })
    }
}

impl Add for GrowthVector {
    type Output = GrowthVector;

    fn add(self, o: GrowthVector) -> GrowthVector {
        GrowthVector::new(self.a + o.a, self.b + o.b, self.c + o.c, self.m + o.m)
    }
}

impl fmt::Display for GrowthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.m)
    }
}

impl std::str::FromStr for GrowthVector {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        let nums = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| KronError::InvalidGrowth(s.to_string()))?;
        match nums[..] {
            [a, b, c, m] => Ok(GrowthVector::new(a, b, c, m)),
            _ => Err(KronError::InvalidGrowth(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearForms {
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
}

impl LinearForms {
    pub fn of(a: u32, b: u32, c: u32) -> Self {
        let (a, b, c) = (i64::from(a), i64::from(b), i64::from(c));
        LinearForms {
            l1: -a + b + c,
            l2: a - b + c,
            l3: a + b - c,
        }
    }
}

/// Stand-in for the Murnaghan stability threshold `N₀(λ̂, μ̂, ν̂)`.
pub trait ThresholdFunction: Sync {
    fn n0(&self, lambda_hat: &Partition, mu_hat: &Partition, nu_hat: &Partition) -> u32;

    fn name(&self) -> &str {
        "custom"
    }
}

/// `N₀ = |λ̂|+|μ̂|+|ν̂| + λ̂₁+μ̂₁+ν̂₁`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultThreshold;

impl ThresholdFunction for DefaultThreshold {
    fn n0(&self, l: &Partition, m: &Partition, n: &Partition) -> u32 {
        l.weight() + m.weight() + n.weight() + l.first_part() + m.first_part() + n.first_part()
    }

    fn name(&self) -> &str {
        "weights-plus-first-rows"
    }
}

impl<F> ThresholdFunction for F
where
    F: Fn(&Partition, &Partition, &Partition) -> u32 + Sync,
{
    fn n0(&self, l: &Partition, m: &Partition, n: &Partition) -> u32 {
        self(l, m, n)
    }
}

/// Thresholds `δ₁, δ₂, δ₃, δ` of `Dom` for a fixed base triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityParams {
    pub weight: u32,
    pub n0: u32,
    #[serde(serialize_with = "ser_ratio")]
    pub delta1: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub delta2: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub delta3: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub delta: Rational64,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

impl StabilityParams {
    pub fn new(lambda: &Partition, mu: &Partition, nu: &Partition, t: &dyn ThresholdFunction) -> Result<Self> {
        let n = equal_weight(lambda, mu, nu)?;
        let n0 = t.n0(
            &lambda.remove_first_row_and_column(),
            &mu.remove_first_row_and_column(),
            &nu.remove_first_row_and_column(),
        );
        let gap = i64::from(n0) - i64::from(n);
        let (l1, m1, n1) = (
            i64::from(lambda.first_part()),
            i64::from(mu.first_part()),
            i64::from(nu.first_part()),
        );
        let (lc, mc, nc) = (
            i64::from(lambda.first_column()),
            i64::from(mu.first_column()),
            i64::from(nu.first_column()),
        );
        Ok(StabilityParams {
            weight: n,
            n0,
            delta1: Rational64::from(2 * gap + lc + m1 + n1),
            delta2: Rational64::from(2 * gap + l1 + mc + n1),
            delta3: Rational64::from(2 * gap + l1 + m1 + nc),
            delta: Rational64::from(gap) + Rational64::new(lc + mc + nc, 2),
        })
    }
}

fn equal_weight(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u32> {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return Err(KronError::WeightMismatch(format!(
            "{} / {} / {}",
            lambda.to_tuple_string(),
            mu.to_tuple_string(),
            nu.to_tuple_string()
        )));
    }
    Ok(n)
}

/// Membership in `𝕃₄`: all four conjugation patterns satisfy the sufficient
/// stability condition `N ≥ N₀(λ̂, μ̂, ν̂) + (first-row/column sum)/2`.
pub fn set_l4_contains(lambda: &Partition, mu: &Partition, nu: &Partition, t: &dyn ThresholdFunction) -> Result<bool> {
    let n = equal_weight(lambda, mu, nu)?;
    let n0 = t.n0(
        &lambda.remove_first_row_and_column(),
        &mu.remove_first_row_and_column(),
        &nu.remove_first_row_and_column(),
    );
    let (l1, m1, n1) = (lambda.first_part(), mu.first_part(), nu.first_part());
    let (lc, mc, nc) = (lambda.first_column(), mu.first_column(), nu.first_column());
    let sums = [lc + mc + nc, l1 + m1 + nc, l1 + mc + n1, lc + m1 + n1];
    Ok(sums
        .iter()
        .all(|&s| 2 * u64::from(n) >= 2 * u64::from(n0) + u64::from(s)))
}

/// Membership of `g` in `Dom(λ, μ, ν)`; inequalities are non-strict.
pub fn dom_contains(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    g: GrowthVector,
    t: &dyn ThresholdFunction,
) -> Result<bool> {
    let p = StabilityParams::new(lambda, mu, nu, t)?;
    Ok(dom_contains_with(&p, g))
}

pub fn dom_contains_with(p: &StabilityParams, g: GrowthVector) -> bool {
    if !g.is_valid() {
        return false;
    }
    let f = g.forms();
    let half_sum = Rational64::new(i64::from(g.a + g.b + g.c), 2);
    Rational64::from(f.l1) >= p.delta1
        && Rational64::from(f.l2) >= p.delta2
        && Rational64::from(f.l3) >= p.delta3
        && Rational64::from(i64::from(g.m)) - half_sum >= p.delta
}

/// Every vector of `Dom` with `m ≤ max_m`.
pub fn dom_sample(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    t: &dyn ThresholdFunction,
    max_m: u32,
) -> Result<Vec<GrowthVector>> {
    let p = StabilityParams::new(lambda, mu, nu, t)?;
    Ok(GrowthVector::all_valid(max_m)
        .filter(|&g| dom_contains_with(&p, g))
        .collect())
}

/// Generators `u₁ = (1,1,0,1)`, `u₂ = (1,0,1,1)`, `u₃ = (0,1,1,1)`, `u₄ = (0,0,0,1)`.
pub const GENERATORS: [GrowthVector; 4] = [
    GrowthVector::new(1, 1, 0, 1),
    GrowthVector::new(1, 0, 1, 1),
    GrowthVector::new(0, 1, 1, 1),
    GrowthVector::new(0, 0, 0, 1),
];

/// Offset of the odd class.
pub const ODD_SHIFT: GrowthVector = GrowthVector::new(1, 1, 1, 2);

/// Multiplicities `x` with `Σ xᵢ uᵢ = g`, if `g` lies in the semigroup.
///
/// The generators are linearly independent, so the rational solution
/// `x = (ℓ₃/2, ℓ₂/2, ℓ₁/2, m − (a+b+c)/2)` is the only candidate.
pub fn semigroup_decompose(g: GrowthVector) -> Option<[u32; 4]> {
    let f = g.forms();
    let total = i64::from(g.a + g.b + g.c);
    if total % 2 != 0 {
        return None;
    }
    let x = [f.l3 / 2, f.l2 / 2, f.l1 / 2, i64::from(g.m) - total / 2];
    x.iter().all(|&v| v >= 0).then(|| x.map(|v| v as u32))
}

pub fn semigroup_member(g: GrowthVector) -> bool {
    semigroup_decompose(g).is_some()
}

pub fn recompose(x: [u32; 4]) -> GrowthVector {
    GENERATORS.iter().zip(x).fold(GrowthVector::default(), |acc, (u, k)| {
        acc + GrowthVector::new(u.a * k, u.b * k, u.c * k, u.m * k)
    })
}

/// The cone `ℓᵢ(a,b,c) ≥ 0`, `2m ≥ a+b+c`, which splits into the semigroup
/// and its `(1,1,1,2)` translate.
pub fn in_growth_cone(g: GrowthVector) -> bool {
    let f = g.forms();
    f.l1 >= 0 && f.l2 >= 0 && f.l3 >= 0 && 2 * g.m >= g.a + g.b + g.c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthClass {
    /// In the semigroup, with these multiplicities.
    Semigroup([u32; 4]),
    /// `(1,1,1,2)` plus a semigroup element with these multiplicities.
    Shifted([u32; 4]),
}

pub fn classify(g: GrowthVector) -> Option<GrowthClass> {
    if let Some(x) = semigroup_decompose(g) {
        return Some(GrowthClass::Semigroup(x));
    }
    g.checked_sub(ODD_SHIFT)
        .and_then(semigroup_decompose)
        .map(GrowthClass::Shifted)
}

/// A single-generator growth move and the inequality that justifies it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// `u₁`: `(op{0}{1}, op{0}{1}, op{1}{0})`, Murnaghan after conjugating positions 1 and 2.
    TransportedU1,
    /// `u₂`: `(op{0}{1}, op{1}{0}, op{0}{1})`, conjugating positions 1 and 3.
    TransportedU2,
    /// `u₃`: `(op{1}{0}, op{0}{1}, op{0}{1})`, conjugating positions 2 and 3.
    TransportedU3,
    /// `u₄`: first rows grown, Murnaghan's inequality.
    Murnaghan,
    /// `(1,1,1,2)`: `op{1}{1}` on all three, the conjectured step.
    Conjecture510,
}

impl MoveKind {
    pub const PROVED: [MoveKind; 4] = [
        MoveKind::TransportedU1,
        MoveKind::TransportedU2,
        MoveKind::TransportedU3,
        MoveKind::Murnaghan,
    ];

    pub fn steps(self) -> [GrowthStep; 3] {
        let row = GrowthStep::new(1, 0);
        let col = GrowthStep::new(0, 1);
        match self {
            MoveKind::TransportedU1 => [col, col, row],
            MoveKind::TransportedU2 => [col, row, col],
            MoveKind::TransportedU3 => [row, col, col],
            MoveKind::Murnaghan => [row, row, row],
            MoveKind::Conjecture510 => [GrowthStep::new(1, 1); 3],
        }
    }

    pub fn vector(self) -> GrowthVector {
        match self {
            MoveKind::TransportedU1 => GENERATORS[0],
            MoveKind::TransportedU2 => GENERATORS[1],
            MoveKind::TransportedU3 => GENERATORS[2],
            MoveKind::Murnaghan => GENERATORS[3],
            MoveKind::Conjecture510 => ODD_SHIFT,
        }
    }

    pub fn is_conjectural(self) -> bool {
        self == MoveKind::Conjecture510
    }

    pub fn apply(self, triple: &[Partition; 3]) -> [Partition; 3] {
        let s = self.steps();
        [triple[0].grow(s[0]), triple[1].grow(s[1]), triple[2].grow(s[2])]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMove {
    pub kind: MoveKind,
    pub from: [Partition; 3],
    pub to: [Partition; 3],
    /// Oracle values when both triples fit the character-table limit.
    pub from_value: Option<u64>,
    pub to_value: Option<u64>,
}

impl ChainMove {
    /// `Some(true)` if the step's inequality was checked and holds.
    pub fn verified(&self) -> Option<bool> {
        Some(self.from_value? <= self.to_value?)
    }
}

/// Decomposes `g` into single-generator moves from `(λ, μ, ν)`: the
/// conjectured `(1,1,1,2)` step first when `g` is in the odd class, then
/// Murnaghan moves, then the conjugation-transported ones. Each move's
/// inequality is evaluated when the weights permit.
///
/// For non-empty partitions the endpoint is the hook-grown triple of `g`.
pub fn monotone_chain(lambda: &Partition, mu: &Partition, nu: &Partition, g: GrowthVector) -> Result<Vec<ChainMove>> {
    equal_weight(lambda, mu, nu)?;
    let (odd, x) = match classify(g) {
        Some(GrowthClass::Semigroup(x)) => (false, x),
        Some(GrowthClass::Shifted(x)) => (true, x),
        None => return Err(KronError::InvalidGrowth(format!("{g} is outside the growth cone"))),
    };
    let mut kinds = Vec::new();
    if odd {
        kinds.push(MoveKind::Conjecture510);
    }
    kinds.extend(std::iter::repeat_n(MoveKind::Murnaghan, x[3] as usize));
    kinds.extend(std::iter::repeat_n(MoveKind::TransportedU1, x[0] as usize));
    kinds.extend(std::iter::repeat_n(MoveKind::TransportedU2, x[1] as usize));
    kinds.extend(std::iter::repeat_n(MoveKind::TransportedU3, x[2] as usize));

    let max_n = characters::global().max_n();
    let value = |t: &[Partition; 3]| -> Result<Option<u64>> {
        if t[0].weight() > max_n {
            return Ok(None);
        }
        kronecker(&t[0], &t[1], &t[2]).map(Some)
    };
    let mut current = [lambda.clone(), mu.clone(), nu.clone()];
    let mut current_value = value(&current)?;
    let mut chain = Vec::with_capacity(kinds.len());
    for kind in kinds {
        let next = kind.apply(&current);
        let next_value = value(&next)?;
        chain.push(ChainMove {
            kind,
            from: current,
            to: next.clone(),
            from_value: current_value,
            to_value: next_value,
        });
        current = next;
        current_value = next_value;
    }
    Ok(chain)
}

/// Character-table provenance for reported values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub method: &'static str,
    pub cache_version: u32,
    pub max_table_n: u32,
}

impl Provenance {
    pub fn current() -> Self {
        Provenance {
            method: "murnaghan-nakayama character sum",
            cache_version: characters::CACHE_VERSION,
            max_table_n: characters::global().max_n(),
        }
    }
}

/// A triple where `g(λ,μ,ν) > g(grown triple)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub triple: [Partition; 3],
    pub growth: GrowthVector,
    pub grown: [Partition; 3],
    pub base_value: u64,
    pub grown_value: u64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub max_weight: u32,
    pub triples_checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

/// Checks `g(λ,μ,ν) ≤ g(move(λ,μ,ν))` for every ordered triple of equal
/// weight in `min_weight..=max_weight`.
pub fn monotonicity_scan(kind: MoveKind, min_weight: u32, max_weight: u32, exec: Execution) -> Result<ScanReport> {
    let grown_max = max_weight + kind.vector().m;
    let table_max = characters::global().max_n();
    if grown_max > table_max {
        return Err(KronError::TableTooLarge {
            n: grown_max,
            max: table_max,
        });
    }
    let mut triples_checked = 0u64;
    let mut counterexamples = Vec::new();
    for n in min_weight..=max_weight {
        let ps = partitions_of(n);
        let base = kronecker::character_table(n)?;
        let grown_table = kronecker::character_table(n + kind.vector().m)?;
        let found: Vec<Counterexample> = exec.flat_map(&ps, |lam| {
            let mut out = Vec::new();
            for mu in &ps {
                for nu in &ps {
                    let triple = [lam.clone(), mu.clone(), nu.clone()];
                    let grown = kind.apply(&triple);
                    let before = kronecker::kronecker_in(&base, lam, mu, nu);
                    let after = kronecker::kronecker_in(&grown_table, &grown[0], &grown[1], &grown[2]);
                    if before > after {
                        out.push(Counterexample {
                            triple,
                            growth: kind.vector(),
                            grown,
                            base_value: before,
                            grown_value: after,
                            provenance: Provenance::current(),
                        });
                    }
                }
            }
            out
        });
        triples_checked += (ps.len() as u64).pow(3);
        counterexamples.extend(found);
    }
    Ok(ScanReport {
        max_weight,
        triples_checked,
        counterexamples,
    })
}

/// Exhaustive search for violations of `g(λ,μ,ν) ≤ g(λ op{1}{1}, μ op{1}{1}, ν op{1}{1})`
/// over non-empty triples of weight up to `max_weight`.
pub fn scan_conjecture_510(max_weight: u32, exec: Execution) -> Result<ScanReport> {
    monotonicity_scan(MoveKind::Conjecture510, 1, max_weight, exec)
}

/// Two grown triples of the same parity class with different coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityViolation {
    pub triple: [Partition; 3],
    pub first: (GrowthVector, u64),
    pub second: (GrowthVector, u64),
}

impl fmt::Display for ParityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}): g at {} is {} but at {} is {}",
            self.triple[0].to_tuple_string(),
            self.triple[1].to_tuple_string(),
            self.triple[2].to_tuple_string(),
            self.first.0,
            self.first.1,
            self.second.0,
            self.second.1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoValues {
    pub even: Option<u64>,
    pub odd: Option<u64>,
    pub vectors_checked: usize,
}

/// Checks that the hook-grown coefficient is constant on each parity class
/// of `a+b+c` within `region`. The region is trusted to lie in `Dom`.
pub fn two_value_check(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    region: &[GrowthVector],
    exec: Execution,
) -> Result<std::result::Result<TwoValues, ParityViolation>> {
    let values = exec.map(region, |&g| {
        let [l, m, n] = hook_grown_triple(lambda, mu, nu, g)?;
        kronecker(&l, &m, &n).map(|v| (g, v))
    });
    let mut even: Option<(GrowthVector, u64)> = None;
    let mut odd: Option<(GrowthVector, u64)> = None;
    for entry in values {
        let (g, v) = entry?;
        let slot = match g.parity() {
            Parity::Even => &mut even,
            Parity::Odd => &mut odd,
        };
        match slot {
            None => *slot = Some((g, v)),
            Some((g0, v0)) if *v0 != v => {
                return Ok(Err(ParityViolation {
                    triple: [lambda.clone(), mu.clone(), nu.clone()],
                    first: (*g0, *v0),
                    second: (g, v),
                }))
            }
            Some(_) => {}
        }
    }
    Ok(Ok(TwoValues {
        even: even.map(|(_, v)| v),
        odd: odd.map(|(_, v)| v),
        vectors_checked: region.len(),
    }))
}
