//! Littlewood–Richardson coefficients by counting LR tableaux.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{partitions_of, Partition};

/// `c^ν_{λμ}`: fillings of `ν/λ` with content `μ`, rows weakly increasing,
/// columns strictly increasing, and a lattice reverse reading word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // Skew cells in reading order: top row first, right to left.
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| {
            let start = lambda.part(r) as usize;
            (start..nu.part(r) as usize).rev().map(move |c| (r, c))
        })
        .collect();
    let mut filling: HashMap<(usize, usize), u32> = HashMap::with_capacity(cells.len());
    let mut counts = vec![0u32; mu.len() + 1];
    count_fillings(&cells, 0, lambda, mu, &mut filling, &mut counts)
}

fn count_fillings(
    cells: &[(usize, usize)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    filling: &mut HashMap<(usize, usize), u32>,
    counts: &mut [u32],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    // Weakly increasing along the row: bounded by the cell to the right.
    let upper = filling.get(&(r, c + 1)).copied().unwrap_or(mu.len() as u32);
    // Strictly increasing down the column: above cell, if it is skew.
    let lower = if r > 0 && (c as u32) >= lambda.part(r - 1) {
        filling[&(r - 1, c)] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lower..=upper {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        filling.insert((r, c), v);
        total += count_fillings(cells, idx + 1, lambda, mu, filling, counts);
        filling.remove(&(r, c));
        counts[vi] -= 1;
    }
    total
}

type ProductCache = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>>;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`, memoized.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = product_cache().read().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let n = lambda.weight() + mu.weight();
    let terms: Vec<(Partition, u64)> = partitions_of(n)
        .into_iter()
        .filter(|nu| nu.contains(&key.0) && nu.contains(&key.1))
        .filter_map(|nu| {
            let c = lr_coefficient(&key.0, &key.1, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect();
    let terms = Arc::new(terms);
    product_cache()
        .write()
        .expect("lr cache poisoned")
        .entry(key)
        .or_insert(terms)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn pieri_and_known_products() {
        let p = schur_product(&part![1], &part![1]);
        assert_eq!(*p, vec![(part![2], 1), (part![1, 1], 1)]);
        let p = schur_product(&part![2, 1], &part![1]);
        assert_eq!(*p, vec![(part![3, 1], 1), (part![2, 2], 1), (part![2, 1, 1], 1)]);
        assert_eq!(lr_coefficient(&part![2, 1], &part![2, 1], &part![3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&part![], &part![2, 1], &part![2, 1]), 1);
        assert_eq!(lr_coefficient(&part![2, 1], &part![], &part![2, 1]), 1);
    }

    #[test]
    fn products_preserve_dimension_count() {
        // Σ_ν c^ν f^ν = binom(|λ|+|μ|, |λ|) f^λ f^μ
        for a in crate::partitions::partitions_up_to(4) {
            for b in crate::partitions::partitions_up_to(4) {
                let (n, k) = (a.weight() + b.weight(), a.weight());
                let binom: u128 = (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1));
                let lhs: u128 = schur_product(&a, &b)
                    .iter()
                    .map(|(nu, c)| *c as u128 * nu.dimension())
                    .sum();
                assert_eq!(lhs, binom * a.dimension() * b.dimension(), "{a} {b}");
            }
        }
    }
}
