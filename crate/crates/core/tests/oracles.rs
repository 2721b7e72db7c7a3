//! Independent routes for the character and product engines.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use kronlab::kronecker::{character_table, internal_product, CharacterTable};
use kronlab::partitions::{partitions_of, partitions_up_to, Partition};
use kronlab::symfunc::{lr_coefficient, schur_product};

/// Polynomials in power sums, keyed by sorted cycle type.
type PowerPoly = BTreeMap<Vec<u32>, BigRational>;

fn poly_mul(a: &PowerPoly, b: &PowerPoly) -> PowerPoly {
    let mut out = PowerPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k: Vec<u32> = ka.iter().chain(kb).copied().collect();
            k.sort_unstable_by(|x, y| y.cmp(x));
            *out.entry(k).or_insert_with(BigRational::zero) += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `h_n = Σ_ρ p_ρ / z_ρ`; zero for negative `n`.
fn h(n: i64) -> PowerPoly {
    if n < 0 {
        return PowerPoly::new();
    }
    partitions_of(n as u32)
        .into_iter()
        .map(|rho| {
            let z = BigInt::from(rho.z());
            (rho.parts().to_vec(), BigRational::new(BigInt::one(), z))
        })
        .collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest element at `pos` adds len-pos inversions
            let s = if (p.len() - pos) % 2 == 0 { sign } else { -sign };
            out.push((q, s));
        }
    }
    out
}

/// `s_λ = det(h_{λᵢ − i + j})` in the power-sum basis.
fn jacobi_trudi(lambda: &Partition) -> PowerPoly {
    let l = lambda.len();
    let mut total = PowerPoly::new();
    for (perm, sign) in permutations(l) {
        let mut term: PowerPoly = [(vec![], BigRational::one())].into_iter().collect();
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &h(i64::from(lambda.part(i)) - i as i64 + j as i64));
            if term.is_empty() {
                break;
            }
        }
        for (k, v) in term {
            *total.entry(k).or_insert_with(BigRational::zero) += v * BigInt::from(sign);
        }
    }
    total.retain(|_, v| !v.is_zero());
    total
}

#[test]
fn characters_match_jacobi_trudi() {
    for n in 0..=7 {
        let table: std::sync::Arc<CharacterTable> = character_table(n).unwrap();
        for lambda in partitions_of(n) {
            let expansion = jacobi_trudi(&lambda);
            for rho in partitions_of(n) {
                let coeff = expansion.get(rho.parts()).cloned().unwrap_or_else(BigRational::zero);
                let chi = coeff * BigInt::from(rho.z());
                assert!(chi.is_integer());
                assert_eq!(
                    chi.to_integer(),
                    BigInt::from(table.value(&lambda, &rho)),
                    "χ^{lambda}({rho})"
                );
            }
        }
    }
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    Partition::from_unsorted(a.parts().iter().chain(b.parts()).copied().collect())
}

#[test]
fn lr_matches_character_inner_product() {
    for a in partitions_up_to(4) {
        for b in partitions_up_to(3) {
            let n = a.weight() + b.weight();
            let (ta, tb, tn) = (
                character_table(a.weight()).unwrap(),
                character_table(b.weight()).unwrap(),
                character_table(n).unwrap(),
            );
            for nu in partitions_of(n) {
                let mut sum = BigRational::zero();
                for r1 in partitions_of(a.weight()) {
                    for r2 in partitions_of(b.weight()) {
                        let v = ta.value(&a, &r1) * tb.value(&b, &r2) * tn.value(&nu, &merge(&r1, &r2));
                        sum += BigRational::new(BigInt::from(v), BigInt::from(r1.z() * r2.z()));
                    }
                }
                assert_eq!(
                    sum,
                    BigRational::from_integer(BigInt::from(lr_coefficient(&a, &b, &nu))),
                    "c^{nu}_{{{a},{b}}}"
                );
            }
            let listed: u64 = schur_product(&a, &b).iter().map(|(_, c)| c).sum();
            let total: u64 = partitions_of(n).iter().map(|nu| lr_coefficient(&a, &b, nu)).sum();
            assert_eq!(listed, total);
        }
    }
}

#[test]
fn kronecker_with_trivial_and_sign() {
    for n in 1..=8 {
        for l in partitions_of(n) {
            let with_row = internal_product(&l, &Partition::row(n)).unwrap();
            assert_eq!(with_row, [(l.clone(), 1)].into_iter().collect());
            let with_col = internal_product(&l, &Partition::column(n)).unwrap();
            assert_eq!(with_col, [(l.conjugate(), 1)].into_iter().collect());
        }
    }
}

/// `s_λ * s_(n−1,1) = Σ_{remove a box, add a box} s_ν − s_λ`.
#[test]
fn kronecker_with_standard_representation() {
    for n in 2..=8 {
        let std_rep = Partition::new(vec![n - 1, 1]).unwrap();
        for l in partitions_of(n) {
            let mut expected: BTreeMap<Partition, i64> = BTreeMap::new();
            for smaller in partitions_of(n - 1).into_iter().filter(|m| l.contains(m)) {
                for bigger in partitions_of(n).into_iter().filter(|b| b.contains(&smaller)) {
                    *expected.entry(bigger).or_default() += 1;
                }
            }
            *expected.entry(l.clone()).or_default() -= 1;
            expected.retain(|_, v| *v != 0);
            let got: BTreeMap<Partition, i64> = internal_product(&l, &std_rep)
                .unwrap()
                .into_iter()
                .map(|(k, v)| (k, v as i64))
                .collect();
            assert_eq!(got, expected, "{l}");
        }
    }
}
