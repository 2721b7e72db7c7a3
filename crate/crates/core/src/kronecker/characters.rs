//! Symmetric-group character tables via the Murnaghan–Nakayama rule, with a
//! process-wide compute-once cache and an optional on-disk JSON mirror.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::partitions::{partitions_of, Partition};

pub const DEFAULT_MAX_N: u32 = 14;
pub const CACHE_VERSION: u32 = 1;

/// Irreducible characters `χ^λ(μ)` of `S_n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][μ]`, both indexed through `partitions`.
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u128>,
}

impl CharacterTable {
    /// Builds the full table by the Murnaghan–Nakayama recursion.
    pub fn compute(n: u32) -> Self {
        let partitions = partitions_of(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| mn_character(lam, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self::from_parts(n, partitions, values)
    }

    fn from_parts(n: u32, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let factorial: u128 = (1..=n as u128).product();
        let class_sizes = partitions.iter().map(|mu| factorial / mu.z()).collect();
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
            class_sizes,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Partitions of `n`; they index both irreducibles and cycle types.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`. Panics if either partition is not of weight `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    /// Row of `χ^λ` over all classes, in [`Self::partitions`] order.
    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }

    pub fn row_at(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn class_size(&self, mu: &Partition) -> u128 {
        self.class_sizes[self.index[mu]]
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.class_sizes
    }

    pub fn to_cache_file(&self) -> CacheFile {
        CacheFile {
            version: CACHE_VERSION,
            n: self.n,
            classes: self.partitions.iter().map(|p| p.parts().to_vec()).collect(),
            characters: self
                .partitions
                .iter()
                .zip(&self.values)
                .map(|(p, row)| (p.to_string(), row.clone()))
                .collect(),
        }
    }

    /// Rebuilds a table from its cache form; `None` if the file is stale or inconsistent.
    pub fn from_cache_file(file: CacheFile) -> Option<Self> {
        if file.version != CACHE_VERSION {
            return None;
        }
        let classes: Vec<Partition> = file
            .classes
            .into_iter()
            .map(Partition::new)
            .collect::<Result<_>>()
            .ok()?;
        if classes != partitions_of(file.n) {
            return None;
        }
        let mut values = Vec::with_capacity(classes.len());
        for p in &classes {
            let row = file.characters.get(&p.to_string())?;
            if row.len() != classes.len() {
                return None;
            }
            values.push(row.clone());
        }
        Some(Self::from_parts(file.n, classes, values))
    }
}

/// On-disk form of a character table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub n: u32,
    pub classes: Vec<Vec<u32>>,
    pub characters: BTreeMap<String, Vec<i64>>,
}

/// `χ^λ(μ)` with `μ` given as a slice of cycle lengths, largest first.
fn mn_character(lambda: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let total = remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(sign, smaller)| sign * mn_character(&smaller, rest, memo))
        .sum();
    memo.insert(key, total);
    total
}

/// All ways to remove a rim hook of length `k`, with sign `(-1)^{height}`.
pub fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(i64, Partition)> {
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut nb: Vec<u32> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb.iter().enumerate().map(|(i, &x)| x - (len - 1 - i as u32)).collect();
        out.push((sign, Partition::from_unsorted(parts)));
    }
    out
}

/// Compute-once store for character tables, shared across threads.
#[derive(Debug)]
pub struct CharacterTableCache {
    max_n: u32,
    dir: Option<PathBuf>,
    slots: Vec<OnceLock<Arc<CharacterTable>>>,
    disk_hits: AtomicU64,
    computed: AtomicU64,
}

impl CharacterTableCache {
    pub fn new(max_n: u32, dir: Option<PathBuf>) -> Self {
        CharacterTableCache {
            max_n,
            dir,
            slots: (0..=max_n).map(|_| OnceLock::new()).collect(),
            disk_hits: AtomicU64::new(0),
            computed: AtomicU64::new(0),
        }
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Tables loaded from disk so far.
    pub fn hits(&self) -> u64 {
        self.disk_hits.load(Ordering::Relaxed)
    }

    /// Tables computed from scratch so far.
    pub fn misses(&self) -> u64 {
        self.computed.load(Ordering::Relaxed)
    }

    pub fn get(&self, n: u32) -> Result<Arc<CharacterTable>> {
        let slot = self
            .slots
            .get(n as usize)
            .ok_or(KronError::TableTooLarge { n, max: self.max_n })?;
        Ok(slot.get_or_init(|| Arc::new(self.load_or_compute(n))).clone())
    }

    fn cache_path(&self, n: u32) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("chartable-v{CACHE_VERSION}-n{n}.json")))
    }

    fn load_or_compute(&self, n: u32) -> CharacterTable {
        if let Some(path) = self.cache_path(n) {
            let loaded = fs::read(&path)
                .ok()
                .and_then(|bytes| serde_json::from_slice::<CacheFile>(&bytes).ok())
                .and_then(CharacterTable::from_cache_file)
                .filter(|t| t.n() == n);
            if let Some(table) = loaded {
                self.disk_hits.fetch_add(1, Ordering::Relaxed);
                return table;
            }
        }
        let table = CharacterTable::compute(n);
        self.computed.fetch_add(1, Ordering::Relaxed);
        if let Some(path) = self.cache_path(n) {
            // A failed write only costs a recompute next run.
            let _ = publish(&path, &table);
        }
        table
    }
}

fn publish(path: &Path, table: &CharacterTable) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&table.to_cache_file())?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

static GLOBAL: OnceLock<CharacterTableCache> = OnceLock::new();

/// Installs the process-wide cache. Returns `false` if one was already in use.
pub fn configure_global(max_n: u32, dir: Option<PathBuf>) -> bool {
    GLOBAL.set(CharacterTableCache::new(max_n, dir)).is_ok()
}

/// The process-wide cache; in-memory only with `DEFAULT_MAX_N` unless configured first.
pub fn global() -> &'static CharacterTableCache {
    GLOBAL.get_or_init(|| CharacterTableCache::new(DEFAULT_MAX_N, None))
}

/// Character table of `S_n` from the global cache.
pub fn character_table(n: u32) -> Result<Arc<CharacterTable>> {
    global().get(n)
}
