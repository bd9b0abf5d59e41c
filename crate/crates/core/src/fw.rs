//! Maximal-alphabet words with prescribed periods (FW-words).
//!
//! For a period set `P` of a length-`n` word, `c(P, n)` is the number of
//! distinct letters of the word that has all periods in `P` and as many
//! letters as possible. Every word with periods `P` is a letter-to-letter
//! image of that word, so exactly `l^c(P, n)` words over `l` letters have
//! all periods in `P`.
//!
//! Two independent routes are provided: [`c_recursive`] follows the
//! Euclid-like reduction on the period set, [`fw_word`] closes positions
//! under the period identifications with a union-find.

use dashmap::DashMap;
use num_bigint::BigUint;

use crate::word::PeriodSet;

/// Letter classes of the FW-word, labelled by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FwWord {
    classes: Vec<u32>,
    class_count: u32,
}

impl FwWord {
    pub fn classes(&self) -> &[u32] {
        &self.classes
    }

    /// `c(P, n)`.
    pub fn class_count(&self) -> u32 {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `a`, `b`, ... for the first 26 classes; falls back to dotted numbers.
    pub fn to_letters(&self) -> String {
        if self.class_count <= 26 {
            self.classes
                .iter()
                .map(|&c| char::from(b'a' + c as u8))
                .collect()
        } else {
            self.classes
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// Reduction step: subtract `m = min P` from every member, drop the zero,
/// add `m` back, and restrict to the new length `n - m` (which is itself a
/// member since `n` is).
fn reduce(periods: &PeriodSet) -> PeriodSet {
    let m = periods.min_period();
    let n = periods.length();
    let next_len = n - m;
    let mut q: Vec<u32> = periods.periods()[1..].iter().map(|&p| p - m).collect();
    if m < next_len {
        if let Err(i) = q.binary_search(&m) {
            q.insert(i, m);
        }
    }
    PeriodSet::from_sorted_unchecked(next_len, q)
}

/// `c(P, n)` by the four-case recursion on `m = min P`.
pub fn c_recursive(periods: &PeriodSet) -> u32 {
    let mut set = periods.clone();
    let mut extra = 0;
    loop {
        let m = set.min_period();
        let n = set.length();
        if m == 1 {
            return extra + 1;
        }
        if m >= n {
            return extra + n;
        }
        if 2 * m > n {
            extra += 2 * m - n;
        }
        set = reduce(&set);
    }
}

/// Memo for `c(P, n)`, shareable across threads.
#[derive(Debug, Default)]
pub struct FwCache {
    memo: DashMap<PeriodSet, u32>,
}

impl FwCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn c(&self, periods: &PeriodSet) -> u32 {
        if let Some(c) = self.memo.get(periods) {
            return *c;
        }
        let c = c_recursive(periods);
        self.memo.insert(periods.clone(), c);
        c
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Builds the FW-word by identifying positions `i` and `i + p` for every
/// nontrivial period `p`.
pub fn fw_word(periods: &PeriodSet) -> FwWord {
    let n = periods.length() as usize;
    let mut uf = UnionFind::new(n);
    for &p in periods.nontrivial() {
        let p = p as usize;
        for i in 0..n - p {
            uf.union(i, i + p);
        }
    }
    let mut label_of_root = vec![u32::MAX; n];
    let mut next = 0;
    let classes = (0..n)
        .map(|i| {
            let root = uf.find(i);
            if label_of_root[root] == u32::MAX {
                label_of_root[root] = next;
                next += 1;
            }
            label_of_root[root]
        })
        .collect();
    FwWord {
        classes,
        class_count: next,
    }
}

/// Number of length-`n` words over `alphabet` letters having every period in `P`.
pub fn g_count(alphabet: u32, periods: &PeriodSet) -> BigUint {
    BigUint::from(alphabet).pow(c_recursive(periods))
}
