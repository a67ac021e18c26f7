//! Well-spaced rows: sets of positive integers with no doubling pair
//! (`a` and `2a` both present) and no three-term arithmetic progression.
//!
//! Well-spaced rows are exactly the feasible vertex-label sets of complete
//! graphs, so the extremal quantities computed here double as
//! `chi_td(K_n)`:
//!
//! - `OS(n)`: largest element of the greedy row of size `n`;
//! - `E(n)`: least possible maximum over all rows of size `n`;
//! - `D(n)`: number of rows of size `n` with maximum exactly `E(n)`;
//! - `Mi1(n)` / `Mi2(n)`: least and greatest minimum element over those
//!   extremal rows;
//! - `J(n) = E(n+1) - E(n)`.

use serde::{Deserialize, Serialize};
use std::sync::Mutex;

/// A strictly increasing sequence of positive integers forming a
/// well-spaced row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WellSpacedRow {
    elements: Vec<u64>,
}

impl WellSpacedRow {
    /// Validates and canonicalizes (sorts) the element set.
    pub fn new(mut elements: Vec<u64>) -> Option<WellSpacedRow> {
        elements.sort_unstable();
        elements.dedup();
        if is_wsr(&elements) {
            Some(WellSpacedRow { elements })
        } else {
            None
        }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().expect("well-spaced rows are nonempty")
    }

    pub fn min(&self) -> u64 {
        self.elements[0]
    }
}

/// True iff the set contains no pair `(a, 2a)` and no three elements in
/// arithmetic progression. Duplicates are ignored (set semantics).
pub fn is_wsr(elements: &[u64]) -> bool {
    let mut s: Vec<u64> = elements.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.first().is_some_and(|&x| x == 0) {
        return false; // rows consist of positive integers
    }
    for &a in &s {
        if s.binary_search(&(2 * a)).is_ok() {
            return false;
        }
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            // (s[i], s[j], 2*s[j] - s[i]) would be an AP with s[j] middle.
            if s.binary_search(&(2 * s[j] - s[i])).is_ok() {
                return false;
            }
        }
    }
    true
}

/// The `k`-th element of the greedy well-spaced row: write `k` in binary and
/// read the digit string in base 3.
///
/// (The variant that converts `k - 1` instead enumerates the non-averaging
/// sets, which include 0; rows here exclude 0, so the index is unshifted.)
pub fn greedy_element(k: u64) -> u64 {
    assert!(k >= 1, "elements are 1-indexed");
    let mut value = 0u64;
    for bit in (0..64 - k.leading_zeros()).rev() {
        value = value * 3 + ((k >> bit) & 1);
    }
    value
}

/// The greedy well-spaced row with `n` elements, built by repeatedly
/// appending the least integer that keeps the set well spaced.
pub fn greedy_wsr(n: usize) -> WellSpacedRow {
    assert!(n >= 1);
    let mut chosen: Vec<u64> = Vec::with_capacity(n);
    let mut forbidden: Vec<bool> = vec![false; 16];
    let mut candidate = 1u64;
    while chosen.len() < n {
        let c = candidate as usize;
        if c >= forbidden.len() {
            forbidden.resize(forbidden.len() * 2, false);
        }
        if !forbidden[c] {
            // Mark the double and every AP completion with the new element
            // as middle; both only matter above the current candidate.
            let mut mark = |x: u64| {
                let x = x as usize;
                if x >= forbidden.len() {
                    forbidden.resize((x + 1).next_power_of_two(), false);
                }
                forbidden[x] = true;
            };
            mark(2 * candidate);
            for &s in &chosen {
                mark(2 * candidate - s);
            }
            chosen.push(candidate);
        }
        candidate += 1;
    }
    WellSpacedRow { elements: chosen }
}

/// The extremal statistics for rows of size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WsrStats {
    pub n: usize,
    /// Largest element of the greedy row.
    pub os: u64,
    /// Least possible maximum element.
    pub e: u64,
    /// Number of rows attaining the minimum maximum.
    pub d: u64,
    /// Least minimum element over the extremal rows.
    pub mi1: u64,
    /// Greatest minimum element over the extremal rows.
    pub mi2: u64,
}

const WORDS: usize = 4;

/// Fixed-width bitmask over values `0..256`, wide enough for every search
/// this module performs (E(20) = 70).
#[derive(Clone, Copy)]
struct Mask {
    w: [u64; WORDS],
}

impl Mask {
    const ZERO: Mask = Mask { w: [0; WORDS] };

    #[inline]
    fn set(&mut self, i: u64) {
        let i = i as usize;
        if i < WORDS * 64 {
            self.w[i / 64] |= 1 << (i % 64);
        }
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        let i = i as usize;
        i < WORDS * 64 && (self.w[i / 64] >> (i % 64)) & 1 == 1
    }

    /// Number of clear bits in `(lo, hi]`.
    #[inline]
    fn free_in(&self, lo: u64, hi: u64) -> usize {
        let (lo, hi) = (lo as usize, hi as usize);
        let mut count = 0usize;
        for word in 0..WORDS {
            let base = word * 64;
            let mut bits = !self.w[word];
            // Keep only positions in (lo, hi].
            if base + 63 <= lo || base > hi {
                continue;
            }
            if lo >= base {
                let shift = lo - base + 1;
                if shift >= 64 {
                    bits = 0;
                } else {
                    bits &= !0u64 << shift;
                }
            }
            if hi < base + 63 {
                bits &= (1u64 << (hi - base + 1)) - 1;
            }
            count += bits.count_ones() as usize;
        }
        count
    }
}

/// Upper bound on the size of an AP-free subset of any integer window of
/// length `len` (doubling pairs ignored, so this also bounds rows).
/// Exact for `len <= AP_TABLE_LEN`; longer windows use subadditive chunking.
fn ap_free_bound(len: u64) -> usize {
    const AP_TABLE_LEN: usize = 24;
    static TABLE: Mutex<Vec<usize>> = Mutex::new(Vec::new());

    /// Largest AP-free subset of `{0..len-1}` by branch and bound; `table`
    /// holds exact values for every shorter length.
    fn ap_max_exact(len: usize, table: &[usize]) -> usize {
        fn rec(
            len: usize,
            chosen: &mut Vec<usize>,
            from: usize,
            forb: u128,
            best: &mut usize,
            table: &[usize],
        ) {
            *best = (*best).max(chosen.len());
            for v in from..len {
                if forb >> v & 1 == 1 {
                    continue;
                }
                let room = table.get(len - v - 1).copied().unwrap_or(len - v - 1);
                if chosen.len() + 1 + room <= *best {
                    break; // later v only shrinks the window
                }
                let mut f = forb;
                for &s in chosen.iter() {
                    let ap = 2 * v - s;
                    if ap < 128 {
                        f |= 1 << ap;
                    }
                }
                chosen.push(v);
                rec(len, chosen, v + 1, f, best, table);
                chosen.pop();
            }
        }
        let mut best = 0;
        rec(len, &mut Vec::new(), 0, 0, &mut best, table);
        best
    }

    let mut table = TABLE.lock().unwrap();
    if table.is_empty() {
        table.push(0); // length 0
        for l in 1..=AP_TABLE_LEN {
            let exact = ap_max_exact(l, &table);
            table.push(exact);
        }
    }
    let len = len as usize;
    if len < table.len() {
        return table[len];
    }
    // Subadditive chunking: split the window into full-size chunks.
    let chunk = table.len() - 1;
    let full = len / chunk;
    let rest = len % chunk;
    full * table[chunk] + table[rest]
}

struct RowSearch {
    /// Inclusive upper bound on elements.
    m: u64,
    /// Target row size.
    n: usize,
    chosen: Vec<u64>,
    forbidden: Mask,
    /// All complete rows found (only populated when enumerating).
    collect: bool,
    found: Vec<Vec<u64>>,
    satisfiable: bool,
}

impl RowSearch {
    fn new(n: usize, m: u64, collect: bool) -> RowSearch {
        RowSearch {
            m,
            n,
            chosen: Vec::with_capacity(n),
            forbidden: Mask::ZERO,
            collect,
            found: Vec::new(),
            satisfiable: false,
        }
    }

    fn run(&mut self) {
        self.extend(0);
    }

    /// Depth-first extension with the forbidden set propagated: choosing `v`
    /// forbids `2v` (doubling) and `2v - s` for every chosen `s` (the AP
    /// completion with `v` as middle). APs with `v` as top are exactly the
    /// values already in the mask, so membership testing suffices.
    fn extend(&mut self, last: u64) {
        if self.chosen.len() == self.n {
            debug_assert!(is_wsr(&self.chosen));
            self.satisfiable = true;
            if self.collect {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let needed = self.n - self.chosen.len();
        if self.forbidden.free_in(last, self.m) < needed {
            return;
        }
        for v in last + 1..=self.m {
            if self.satisfiable && !self.collect {
                return;
            }
            if self.forbidden.get(v) {
                continue;
            }
            // Window bounds for the tail above v.
            if needed > 1 {
                let window = self.m - v;
                if ap_free_bound(window) < needed - 1 {
                    break; // shrinking window, bound only gets worse
                }
                if self.forbidden.free_in(v, self.m) < needed - 1 {
                    continue;
                }
            }
            let saved = self.forbidden;
            self.forbidden.set(2 * v);
            for i in 0..self.chosen.len() {
                self.forbidden.set(2 * v - self.chosen[i]);
            }
            self.chosen.push(v);
            self.extend(v);
            self.chosen.pop();
            self.forbidden = saved;
        }
    }
}

/// Is there a row of size `n` within `{1..=m}`?
fn exists_row_within(n: usize, m: u64) -> bool {
    let mut s = RowSearch::new(n, m, false);
    s.run();
    s.satisfiable
}

fn all_rows_within(n: usize, m: u64) -> Vec<Vec<u64>> {
    let mut s = RowSearch::new(n, m, true);
    s.run();
    s.found.sort();
    s.found
}

/// Incrementally extended cache of per-size statistics (1-indexed by size).
static STATS: Mutex<Vec<WsrStats>> = Mutex::new(Vec::new());

fn ensure_stats(n: usize) -> Vec<WsrStats> {
    let mut cache = STATS.lock().unwrap();
    while cache.len() < n {
        let size = cache.len() + 1;
        let prev_e = cache.last().map_or(0, |s: &WsrStats| s.e);
        // E is strictly increasing: dropping the maximum of an extremal row
        // of size k leaves a row of size k-1 with a smaller maximum.
        let mut m = prev_e + 1;
        while !exists_row_within(size, m) {
            m += 1;
        }
        let rows = all_rows_within(size, m);
        debug_assert!(rows.iter().all(|r| *r.last().unwrap() == m));
        let mins: Vec<u64> = rows.iter().map(|r| r[0]).collect();
        cache.push(WsrStats {
            n: size,
            os: greedy_element(size as u64),
            e: m,
            d: rows.len() as u64,
            mi1: mins.iter().copied().min().unwrap(),
            mi2: mins.iter().copied().max().unwrap(),
        });
    }
    cache[..n].to_vec()
}

/// Statistics for every size `1..=max_n`.
pub fn stats_table(max_n: usize) -> Vec<WsrStats> {
    assert!(max_n >= 1);
    ensure_stats(max_n)
}

/// Statistics for rows of size `n`.
pub fn minimal_wsr_stats(n: usize) -> WsrStats {
    assert!(n >= 1);
    ensure_stats(n)[n - 1]
}

/// Every row of size `n` whose maximum equals `E(n)`; the count is `D(n)`.
pub fn enumerate_minimal_wsrs(n: usize) -> Vec<WellSpacedRow> {
    let stats = minimal_wsr_stats(n);
    all_rows_within(n, stats.e)
        .into_iter()
        .map(|elements| WellSpacedRow { elements })
        .collect()
}

/// First difference of the minimal maxima: `J(n) = E(n+1) - E(n)`.
pub fn j_sequence(n: usize) -> u64 {
    assert!(n >= 1);
    let stats = ensure_stats(n + 1);
    stats[n].e - stats[n - 1].e
}

/// `chi_td(K_n)`: a vertex label set is a proper labeling of the complete
/// graph iff it is a well-spaced row, so the optimum is `E(n)`.
pub fn chi_td_complete(n: usize) -> u64 {
    minimal_wsr_stats(n).e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wsr_predicate() {
        assert!(is_wsr(&[1, 3, 4, 9]));
        assert!(!is_wsr(&[1, 2])); // doubling pair
        assert!(!is_wsr(&[1, 3, 5])); // arithmetic progression
        assert!(is_wsr(&[]));
        assert!(is_wsr(&[7]));
        assert!(!is_wsr(&[0, 1, 3])); // rows are positive
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_wsr(1).elements(), &[1]);
        assert_eq!(greedy_wsr(4).elements(), &[1, 3, 4, 9]);
        assert_eq!(greedy_wsr(7).elements(), &[1, 3, 4, 9, 10, 12, 13]);
    }

    #[test]
    fn greedy_element_binary_to_ternary() {
        assert_eq!(greedy_element(1), 1);
        assert_eq!(greedy_element(13), 37);
        assert_eq!(greedy_element(20), 90);
    }

    #[test]
    fn greedy_formula_matches_simulation() {
        let row = greedy_wsr(64);
        for (i, &v) in row.elements().iter().enumerate() {
            assert_eq!(v, greedy_element(i as u64 + 1));
        }
    }

    /// Brute-force oracle: enumerate every n-subset of {1..=cap} directly.
    fn brute_stats(n: usize, cap: u64) -> (u64, u64, u64, u64) {
        let mut best_max = u64::MAX;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut subset: Vec<u64> = Vec::new();
        fn rec(n: usize, cap: u64, from: u64, subset: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if subset.len() == n {
                if is_wsr(subset) {
                    out.push(subset.clone());
                }
                return;
            }
            for v in from..=cap {
                subset.push(v);
                rec(n, cap, v + 1, subset, out);
                subset.pop();
            }
        }
        rec(n, cap, 1, &mut subset, &mut rows);
        for row in &rows {
            best_max = best_max.min(*row.last().unwrap());
        }
        let extremal: Vec<&Vec<u64>> =
            rows.iter().filter(|r| *r.last().unwrap() == best_max).collect();
        let mins: Vec<u64> = extremal.iter().map(|r| r[0]).collect();
        (
            best_max,
            extremal.len() as u64,
            mins.iter().copied().min().unwrap(),
            mins.iter().copied().max().unwrap(),
        )
    }

    #[test]
    fn stats_match_brute_force_oracle() {
        for n in 1..=6 {
            let (e, d, mi1, mi2) = brute_stats(n, 14);
            let s = minimal_wsr_stats(n);
            assert_eq!((s.e, s.d, s.mi1, s.mi2), (e, d, mi1, mi2), "size {n}");
        }
    }

    #[test]
    fn minimal_rows_examples() {
        let rows2 = enumerate_minimal_wsrs(2);
        let sets: Vec<&[u64]> = rows2.iter().map(|r| r.elements()).collect();
        assert_eq!(sets, vec![&[1, 3][..], &[2, 3][..]]);

        let rows7 = enumerate_minimal_wsrs(7);
        assert_eq!(rows7.len(), 1);
        assert_eq!(rows7[0].elements(), &[1, 3, 4, 9, 10, 12, 13]);

        assert_eq!(enumerate_minimal_wsrs(3).len(), 1);
    }

    #[test]
    fn stats_small_values() {
        let s4 = minimal_wsr_stats(4);
        assert_eq!((s4.os, s4.e, s4.d, s4.mi1, s4.mi2), (9, 8, 4, 1, 2));
        let s1 = minimal_wsr_stats(1);
        assert_eq!((s1.os, s1.e, s1.d, s1.mi1, s1.mi2), (1, 1, 1, 1, 1));
    }

    #[test]
    fn j_sequence_values() {
        assert_eq!(j_sequence(1), 2);
        assert_eq!(j_sequence(14), 1);
        assert_eq!(j_sequence(15), 10);
    }

    #[test]
    fn chi_complete_examples() {
        assert_eq!(chi_td_complete(1), 1);
        assert_eq!(chi_td_complete(4), 8);
        assert_eq!(chi_td_complete(8), 19);
    }

    #[test]
    fn outputs_are_rows_and_chain_holds() {
        for n in 1..=10 {
            let s = minimal_wsr_stats(n);
            assert!(s.mi1 <= s.mi2 && s.mi2 <= s.e && s.e <= s.os, "chain at {n}");
            if s.d == 1 {
                assert_eq!(s.mi1, s.mi2);
            }
            assert!(is_wsr(greedy_wsr(n).elements()));
            for row in enumerate_minimal_wsrs(n) {
                assert!(is_wsr(row.elements()));
            }
        }
    }

    #[test]
    fn rows_with_zero_are_non_averaging() {
        // Adjoining 0 must leave no element as the average of two others.
        for n in 1..=8 {
            for row in enumerate_minimal_wsrs(n) {
                let mut with_zero = vec![0u64];
                with_zero.extend_from_slice(row.elements());
                for (i, &a) in with_zero.iter().enumerate() {
                    for &b in &with_zero[i + 1..] {
                        if (a + b) % 2 == 0 {
                            let avg = (a + b) / 2;
                            assert!(
                                avg == a || avg == b || !with_zero.contains(&avg),
                                "{avg} is the average of {a} and {b} in {with_zero:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}
