//! Exact symmetric functions over the alphabets `X`, `Y`, `Z`.
//!
//! Plethystic series (`σ[E]`, `χ[E]`, `s_λ[E]`) are computed in the
//! power-sum basis, where `p_k[E]` is a ring homomorphism in `E`, and then
//! converted to the Schur basis through character values. Products of Schur
//! series go through Littlewood–Richardson coefficients.

pub mod expr;
pub mod laurent;
pub mod lr;
pub mod power;
pub mod series;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

pub use expr::{Alphabet, AlphabetExpression, Letters};
pub use laurent::{Exponent, Laurent};
pub use lr::{lr_coefficient, schur_product};
pub use power::{power_eval, PowerSeries};
pub use series::{key_string, Caps, SchurKey, SchurSeries, SeriesJson};

use crate::error::Result;
use crate::partitions::Partition;

/// `σ[E]` truncated to `caps`, Schur basis.
pub fn sigma_series(expr: &AlphabetExpression, caps: Caps) -> Result<SchurSeries> {
    power::sigma_power(expr, caps)?.to_schur()
}

/// `χ[E] = Σ_{k≥1} p_k[E]` truncated to `caps`, Schur basis.
pub fn chi_series(expr: &AlphabetExpression, caps: Caps) -> Result<SchurSeries> {
    power::chi_power(expr, caps)?.to_schur()
}

/// `s_λ[E]` truncated to `caps`, Schur basis.
pub fn schur_plethysm(lambda: &Partition, expr: &AlphabetExpression, caps: Caps) -> Result<SchurSeries> {
    power::schur_plethysm_power(lambda, expr, caps)?.to_schur()
}

/// `s_λ` placed in one alphabet.
pub fn schur_in(alphabet: Alphabet, lambda: Partition, caps: Caps) -> SchurSeries {
    let mut key: SchurKey = Default::default();
    key[alphabet.index()] = lambda;
    SchurSeries::monomial(caps, key, num_rational::BigRational::from_integer(1.into()))
}

/// Principal specialization `s_λ[n] = s_λ(1, …, 1)` (`n` ones), by the
/// hook-content formula `Π (n + c(□)) / h(□)`.
pub fn schur_at_integer(lambda: &Partition, n: u32) -> u64 {
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (r, c) in lambda.cells() {
        let content = i64::from(n) + c as i64 - r as i64;
        if content <= 0 {
            return 0;
        }
        num *= content as u64;
        den *= lambda.hook_length(r, c);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_u64().expect("s_λ[n] exceeds u64")
}

/// `s_λ[1 − ε]`: 1 for ∅, 2 for a hook, 0 otherwise.
pub fn schur_at_one_minus_eps(lambda: &Partition) -> u32 {
    if lambda.is_empty() {
        1
    } else if lambda.is_hook() {
        2
    } else {
        0
    }
}

/// `s_λ(m₁, …, m_k)` for Laurent monomials `mᵢ = v^{aᵢ} w^{bᵢ}`: the sum over
/// semistandard tableaux with entries `1..=k` of the product of their letters.
pub fn schur_at_monomials(lambda: &Partition, monomials: &[Exponent]) -> Laurent {
    let k = monomials.len() as u32;
    if lambda.len() > monomials.len() {
        return Laurent::zero();
    }
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut filling = vec![0u32; cells.len()];
    let mut out = Laurent::zero();
    fill_ssyt(lambda, &cells, 0, k, &mut filling, &mut |f| {
        let (v, w) = f.iter().fold((0, 0), |(v, w), &e| {
            let (dv, dw) = monomials[e as usize];
            (v + dv, w + dw)
        });
        out = &out + &Laurent::monomial(1, (v, w));
    });
    out
}

/// Visits every semistandard filling of `lambda` with entries `0..k`.
fn fill_ssyt(
    lambda: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    k: u32,
    filling: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if idx == cells.len() {
        visit(filling);
        return;
    }
    let (r, c) = cells[idx];
    // Row-major order: left neighbour is idx-1, the cell above is one row up.
    let min_row = if c > 0 { filling[idx - 1] } else { 0 };
    let min_col = if r > 0 {
        let above: usize = lambda.parts()[..r - 1].iter().map(|&p| p as usize).sum::<usize>() + c;
        filling[above] + 1
    } else {
        0
    };
    for v in min_row.max(min_col)..k {
        filling[idx] = v;
        fill_ssyt(lambda, cells, idx + 1, k, filling, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::{partitions_of, partitions_up_to, HookCoords};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn x() -> AlphabetExpression {
        AlphabetExpression::x()
    }

    fn key_x(l: Partition) -> SchurKey {
        [l, part![], part![]]
    }

    #[test]
    fn sigma_examples() {
        let caps = [3, 3, 3];
        let xy = x() * AlphabetExpression::y();
        let s = sigma_series(&xy, caps).unwrap();
        assert_eq!(s.coeff(&part![1], &part![1], &part![]).unwrap(), int(1));
        assert_eq!(s.coeff(&part![2], &part![1, 1], &part![]).unwrap(), int(0));
        let s = sigma_series(&(2 * x()), caps).unwrap();
        assert_eq!(s.coefficient(&key_x(part![2])).unwrap(), int(3));
        assert_eq!(s.coefficient(&key_x(part![1, 1, 1])).unwrap(), int(0));
        let xyz = x() * AlphabetExpression::y() * AlphabetExpression::z();
        let s = sigma_series(&xyz, caps).unwrap();
        assert_eq!(s.coeff(&part![1], &part![1], &part![1]).unwrap(), int(1));
        assert!(s.coefficient(&key_x(part![4])).is_err());
    }

    #[test]
    fn chi_examples() {
        let c = chi_series(&x(), [3, 0, 0]).unwrap();
        assert_eq!(c.coefficient(&key_x(part![3])).unwrap(), int(1));
        assert_eq!(c.coefficient(&key_x(part![2, 1])).unwrap(), int(-1));
        assert_eq!(c.coefficient(&key_x(part![1, 1, 1])).unwrap(), int(1));
        assert_eq!(c.coefficient(&key_x(part![])).unwrap(), int(0));
        let e = AlphabetExpression::y() * AlphabetExpression::z() - x();
        let c = chi_series(&e, [3, 3, 3]).unwrap();
        assert_eq!(c.coeff(&part![1], &part![], &part![]).unwrap(), int(-1));
        assert_eq!(c.coeff(&part![], &part![1], &part![1]).unwrap(), int(1));
    }

    #[test]
    fn multiply_examples() {
        let caps = [4, 0, 0];
        let s1 = schur_in(Alphabet::X, part![1], caps);
        let p = s1.multiply(&s1).unwrap();
        let expected = schur_in(Alphabet::X, part![2], caps)
            .add(&schur_in(Alphabet::X, part![1, 1], caps))
            .unwrap();
        assert_eq!(p, expected);
        let p = schur_in(Alphabet::X, part![2, 1], caps).multiply(&s1).unwrap();
        let mut expected = SchurSeries::zero(caps);
        for l in [part![3, 1], part![2, 2], part![2, 1, 1]] {
            expected.add_term(key_x(l), int(1));
        }
        assert_eq!(p, expected);
        let one = SchurSeries::one(caps);
        assert_eq!(p.multiply(&one).unwrap(), p);
        assert!(p.multiply(&SchurSeries::one([3, 0, 0])).is_err());
    }

    #[test]
    fn lr_multiply_agrees_with_power_route() {
        let caps = [6, 0, 0];
        for a in partitions_up_to(3) {
            for b in partitions_up_to(3) {
                let sa = schur_in(Alphabet::X, a.clone(), caps);
                let sb = schur_in(Alphabet::X, b.clone(), caps);
                let lr = sa.multiply(&sb).unwrap();
                let pw = sa.to_power().unwrap().mul(&sb.to_power().unwrap()).to_schur().unwrap();
                assert_eq!(lr, pw, "{a} * {b}");
            }
        }
    }

    #[test]
    fn integer_specializations() {
        assert_eq!(schur_at_integer(&part![3, 1], 2), 3);
        assert_eq!(schur_at_integer(&part![1, 1, 1], 2), 0);
        assert_eq!(schur_at_integer(&part![5], 2), 6);
        assert_eq!(schur_at_integer(&part![], 0), 1);
        assert_eq!(schur_at_integer(&part![1], 1), 1);
        assert_eq!(schur_at_integer(&part![2], 1), 1);
        assert_eq!(schur_at_integer(&part![1, 1], 1), 0);
        for l in partitions_up_to(8) {
            for n in 0..5 {
                let oracle = power::specialize(&l, |_| int(n)).unwrap();
                assert_eq!(int(schur_at_integer(&l, n as u32) as i64), oracle, "{l} at {n}");
            }
        }
    }

    #[test]
    fn one_minus_eps() {
        assert_eq!(schur_at_one_minus_eps(&part![]), 1);
        assert_eq!(schur_at_one_minus_eps(&part![3, 1]), 2);
        assert_eq!(schur_at_one_minus_eps(&part![2, 2]), 0);
        for l in partitions_up_to(8) {
            // p_k[1 − ε] = 1 − (−1)^k
            let oracle = power::specialize(&l, |k| int(if k % 2 == 0 { 0 } else { 2 })).unwrap();
            assert_eq!(int(schur_at_one_minus_eps(&l) as i64), oracle, "{l}");
        }
    }

    #[test]
    fn monomial_alphabet() {
        let alphabet = [(-1, -1), (1, -1), (-1, 1)];
        let s1 = schur_at_monomials(&part![1], &alphabet);
        assert_eq!(s1, Laurent::from_terms([((-1, -1), 1), ((1, -1), 1), ((-1, 1), 1)]));
        assert!(schur_at_monomials(&part![1, 1, 1, 1], &alphabet).is_zero());
        let e2 = schur_at_monomials(&part![1, 1], &alphabet);
        assert_eq!(e2, Laurent::from_terms([((0, -2), 1), ((-2, 0), 1), ((0, 0), 1)]));
        // s_λ at k copies of 1 is s_λ[k]
        for l in partitions_up_to(6) {
            let ones = [(0, 0); 3];
            let v = schur_at_monomials(&l, &ones).coeff((0, 0));
            assert_eq!(v as u64, schur_at_integer(&l, 3), "{l}");
        }
    }

    #[test]
    fn power_schur_round_trip() {
        let caps = [8, 0, 0];
        for l in partitions_up_to(8) {
            let s = schur_in(Alphabet::X, l.clone(), caps);
            assert_eq!(s.to_power().unwrap().to_schur().unwrap(), s, "{l}");
        }
    }

    #[test]
    fn hook_expansion_of_chi() {
        let d = 8;
        let chi = chi_series(&x(), [d, 0, 0]).unwrap();
        let mut hooks = SchurSeries::zero([d, 0, 0]);
        for h in HookCoords::up_to(d) {
            let sign = if h.leg % 2 == 0 { 1 } else { -1 };
            hooks.add_term(key_x(h.as_partition()), int(sign));
        }
        assert_eq!(chi, hooks);
    }

    #[test]
    fn sign_rule() {
        let caps = [6, 0, 0];
        for l in partitions_up_to(6) {
            let lhs = schur_plethysm(&l, &-x(), caps).unwrap();
            let sign = if l.weight() % 2 == 0 { 1 } else { -1 };
            let rhs = SchurSeries::monomial(caps, key_x(l.conjugate()), int(sign));
            assert_eq!(lhs, rhs, "{l}");
        }
    }

    #[test]
    fn cauchy_diagonal() {
        let s = sigma_series(&(x() * AlphabetExpression::y()), [4, 4, 0]).unwrap();
        for l in partitions_up_to(4) {
            for m in partitions_up_to(4) {
                let expected = if l == m { BigRational::one() } else { int(0) };
                assert_eq!(s.coeff(&l, &m, &part![]).unwrap(), expected);
            }
        }
    }

    #[test]
    fn toolbox_identities() {
        let d = 8;
        let caps = [d, 0, 0];
        let sigma = sigma_series(&x(), caps).unwrap();
        let chi = chi_series(&x(), caps).unwrap();
        let lhs = sigma.multiply(&chi).unwrap();
        let mut rhs = SchurSeries::zero(caps);
        for k in 1..=d {
            rhs.add_term(key_x(Partition::row(k)), int(k as i64));
        }
        assert_eq!(lhs, rhs);
        // graded derivative: t d/dt σ[tX] = σ[tX] χ[tX]
        assert_eq!(sigma.euler(), lhs);

        let sigma2 = sigma_series(&(2 * x()), caps).unwrap();
        let lhs = sigma2.multiply(&chi).unwrap();
        let mut rhs = SchurSeries::zero(caps);
        for n in 1..=d {
            for l in partitions_of(n).into_iter().filter(|l| l.len() <= 2) {
                let (a, b) = (l.part(0) as i64, l.part(1) as i64);
                rhs.add_term(key_x(l), int((a - b + 1) * (a + b) / 2));
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_two_x_is_schur_at_two() {
        let s = sigma_series(&(2 * x()), [8, 0, 0]).unwrap();
        for l in partitions_up_to(8) {
            let expected = if l.len() <= 2 {
                (l.part(0) - l.part(1) + 1) as i64
            } else {
                0
            };
            assert_eq!(s.coefficient(&key_x(l.clone())).unwrap(), int(expected), "{l}");
        }
    }

    #[test]
    fn json_round_trip() {
        let e = AlphabetExpression::y() * AlphabetExpression::z() - x();
        let s = sigma_series(&e, [2, 2, 2])
            .unwrap()
            .scale(&BigRational::new(1.into(), 3.into()));
        let json = serde_json::to_string(&s.to_json()).unwrap();
        let back = SchurSeries::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
