//! The generating series of the `B` coefficients, in its product form and
//! its hook form, and coefficient extraction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{KronError, Result};
use crate::kronecker::{character_table, kronecker_in};
use crate::partitions::{partitions_of, HookCoords, Partition};
use crate::symfunc::power::{chi_power, schur_plethysm_power, sigma_power, PowerSeries};
use crate::symfunc::{
    chi_series, key_string, schur_at_one_minus_eps, sigma_series, AlphabetExpression, Caps, SchurKey, SchurSeries,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The six monomials of `W`.
pub fn w_monomials() -> [AlphabetExpression; 6] {
    let (x, y, z) = (AlphabetExpression::x, AlphabetExpression::y, AlphabetExpression::z);
    [x(), y(), z(), x() * y(), x() * z(), y() * z()]
}

/// `W = X + Y + Z + XY + XZ + YZ`.
pub fn w_alphabet() -> AlphabetExpression {
    w_monomials()
        .into_iter()
        .fold(AlphabetExpression::zero(), |acc, m| acc + m)
}

pub fn xyz() -> AlphabetExpression {
    AlphabetExpression::x() * AlphabetExpression::y() * AlphabetExpression::z()
}

/// `YZ − X`.
pub fn yz_minus_x() -> AlphabetExpression {
    AlphabetExpression::y() * AlphabetExpression::z() - AlphabetExpression::x()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Form {
    #[default]
    Theorem,
    Hook,
}

impl FromStr for Form {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(Form::Theorem),
            "hook" => Ok(Form::Hook),
            other => Err(KronError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Theorem => "theorem",
            Form::Hook => "hook",
        })
    }
}

/// A `B` series with every coefficient checked integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeries {
    series: SchurSeries,
    form: Form,
}

impl BSeries {
    pub fn new(series: SchurSeries, form: Form) -> Result<Self> {
        if let Some((key, value)) = series.first_non_integral() {
            return Err(KronError::NotIntegral {
                key: key_string(key),
                value: value.to_string(),
            });
        }
        Ok(BSeries { series, form })
    }

    pub fn series(&self) -> &SchurSeries {
        &self.series
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn caps(&self) -> Caps {
        self.series.caps()
    }

    pub fn coefficient(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<i64> {
        let v = self.series.coeff(alpha, beta, gamma)?;
        Ok(v.to_integer().to_i64().expect("B coefficient exceeds i64"))
    }
}

/// `σ[XYZ] = Σ_n Σ g(λ,μ,ν) s_λ[X] s_μ[Y] s_ν[Z]`.
pub fn sigma_xyz(caps: Caps) -> Result<SchurSeries> {
    let mut out = SchurSeries::zero(caps);
    let top = caps.iter().copied().min().unwrap_or(0);
    for n in 0..=top {
        let table = character_table(n)?;
        let ps = partitions_of(n);
        for l in &ps {
            for m in &ps {
                for v in &ps {
                    let g = kronecker_in(&table, l, m, v);
                    if g > 0 {
                        let key: SchurKey = [l.clone(), m.clone(), v.clone()];
                        out.add_term(key, BigRational::from_integer(BigInt::from(g)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `σ[XYZ + 2W]`, one factor per monomial.
pub fn sigma_prefactor(caps: Caps) -> Result<SchurSeries> {
    let mut acc = sigma_xyz(caps)?;
    for m in w_monomials() {
        acc = acc.multiply(&sigma_series(&(2 * m), caps)?)?;
    }
    Ok(acc)
}

/// `¾ + ¼σ[(ε−1)W] − ½χ[W]`.
pub fn theorem_w_part(caps: Caps) -> Result<SchurSeries> {
    let w = w_alphabet();
    let eps_w = (AlphabetExpression::eps() - AlphabetExpression::constant(1)) * w.clone();
    let mut p = PowerSeries::one(caps).scale(&rat(3, 4));
    p.add_assign(&sigma_power(&eps_w, caps)?.scale(&rat(1, 4)));
    p.add_assign(&chi_power(&w, caps)?.scale(&rat(-1, 2)));
    p.to_schur()
}

/// `1 − Σ_{a even, b} (−1)^b s_(a|b)[W]`.
pub fn hook_w_part(caps: Caps) -> Result<SchurSeries> {
    let w = w_alphabet();
    let mut p = PowerSeries::one(caps);
    for h in HookCoords::up_to(caps.iter().sum()) {
        if h.arm % 2 != 0 {
            continue;
        }
        let sign = if h.leg % 2 == 0 { -1 } else { 1 };
        p.add_assign(&schur_plethysm_power(&h.as_partition(), &w, caps)?.scale(&rat(sign, 1)));
    }
    p.to_schur()
}

/// `Σ_{a, b} (−1)^b s_(a|b)[YZ − X]`.
pub fn hook_yz_part(caps: Caps) -> Result<SchurSeries> {
    let e = yz_minus_x();
    let mut p = PowerSeries::zero(caps);
    for h in HookCoords::up_to(caps.iter().sum()) {
        let sign = if h.leg % 2 == 0 { 1 } else { -1 };
        p.add_assign(&schur_plethysm_power(&h.as_partition(), &e, caps)?.scale(&rat(sign, 1)));
    }
    p.to_schur()
}

/// `σ[XYZ+2W] · (¾ + ¼σ[(ε−1)W] − ½χ[W] + χ[YZ−X])`.
pub fn b_series_theorem_form(caps: Caps) -> Result<BSeries> {
    let bracket = theorem_w_part(caps)?.add(&chi_series(&yz_minus_x(), caps)?)?;
    BSeries::new(sigma_prefactor(caps)?.multiply(&bracket)?, Form::Theorem)
}

/// `σ[XYZ+2W] · (1 − Σ_{a even,b} (−1)^b s_(a|b)[W] + Σ_{a,b} (−1)^b s_(a|b)[YZ−X])`.
pub fn b_series_hook_form(caps: Caps) -> Result<BSeries> {
    let bracket = hook_w_part(caps)?.add(&hook_yz_part(caps)?)?;
    BSeries::new(sigma_prefactor(caps)?.multiply(&bracket)?, Form::Hook)
}

pub fn b_series(form: Form, caps: Caps) -> Result<BSeries> {
    match form {
        Form::Theorem => b_series_theorem_form(caps),
        Form::Hook => b_series_hook_form(caps),
    }
}

type SeriesSlot = Arc<OnceLock<Arc<BSeries>>>;

fn series_cache() -> &'static Mutex<HashMap<(Form, Caps), SeriesSlot>> {
    static CACHE: OnceLock<Mutex<HashMap<(Form, Caps), SeriesSlot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds each `(form, caps)` series at most once per process.
pub fn cached_b_series(form: Form, caps: Caps) -> Result<Arc<BSeries>> {
    let slot = series_cache()
        .lock()
        .expect("series cache poisoned")
        .entry((form, caps))
        .or_default()
        .clone();
    if let Some(s) = slot.get() {
        return Ok(s.clone());
    }
    let built = Arc::new(b_series(form, caps)?);
    Ok(slot.get_or_init(|| built).clone())
}

/// Uniform caps `(w, w, w)` with `w` the largest of the three weights.
pub fn caps_for(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Caps {
    let w = alpha.weight().max(beta.weight()).max(gamma.weight());
    [w, w, w]
}

pub fn b_coefficient_with(form: Form, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<i64> {
    cached_b_series(form, caps_for(alpha, beta, gamma))?.coefficient(alpha, beta, gamma)
}

/// `B_{α,β,γ}`: the coefficient of `s_α[X] s_β[Y] s_γ[Z]`.
pub fn b_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<i64> {
    b_coefficient_with(Form::Theorem, alpha, beta, gamma)
}

/// `((−1)^{|λ|}, λ′, s_λ[1−ε])`.
pub fn cauchy_sign_expand(lambda: &Partition) -> (i8, Partition, u32) {
    let sign = if lambda.weight().is_multiple_of(2) { 1 } else { -1 };
    (sign, lambda.conjugate(), schur_at_one_minus_eps(lambda))
}

/// `Σ_λ s_λ[1−ε] (−1)^{|λ|} s_{λ′}[W]`, i.e. `σ[(ε−1)W]` through the Cauchy expansion.
pub fn sigma_eps_w_by_cauchy(caps: Caps) -> Result<SchurSeries> {
    let w = w_alphabet();
    let mut p = PowerSeries::zero(caps);
    for n in 0..=caps.iter().sum() {
        for lambda in partitions_of(n) {
            let (sign, conj, value) = cauchy_sign_expand(&lambda);
            if value == 0 {
                continue;
            }
            let term = if conj.is_empty() {
                PowerSeries::one(caps)
            } else {
                schur_plethysm_power(&conj, &w, caps)?
            };
            p.add_assign(&term.scale(&rat(i64::from(sign) * i64::from(value), 1)));
        }
    }
    p.to_schur()
}

/// `1` at `caps`, for convenience in identities.
pub fn unit(caps: Caps) -> SchurSeries {
    SchurSeries::monomial(caps, Default::default(), BigRational::one())
}
