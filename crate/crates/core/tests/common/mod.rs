#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Searches the permutation list for the one satisfying the ordinal-pattern
/// definition directly: x[s - r_{D-1}τ] <= ... <= x[s - r_0 τ] with ties
/// ordered r_i < r_{i-1}. `window` is in time order, so offset r is
/// `window[D-1-r]`. Returns the lexicographic position.
pub fn brute_force_index(window: &[f64], perms: &[Vec<usize>]) -> usize {
    let d = window.len();
    let value = |r: usize| window[d - 1 - r];
    let matches: Vec<usize> = perms
        .iter()
        .enumerate()
        .filter(|(_, pi)| {
            (1..d).all(|i| {
                let (hi, lo) = (value(pi[i - 1]), value(pi[i]));
                lo < hi || (lo == hi && pi[i] < pi[i - 1])
            })
        })
        .map(|(k, _)| k)
        .collect();
    assert_eq!(
        matches.len(),
        1,
        "definition must select exactly one pattern"
    );
    matches[0]
}

/// Histogram computed by sorting every embedding vector independently.
pub fn naive_counts(values: &[f64], d: usize, tau: usize) -> Vec<u64> {
    let perms = permutations(d);
    let mut counts = vec![0u64; perms.len()];
    let span = (d - 1) * tau;
    for start in 0..values.len() - span {
        let window: Vec<f64> = (0..d).map(|j| values[start + j * tau]).collect();
        counts[brute_force_index(&window, &perms)] += 1;
    }
    counts
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw on the probability simplex (normalized exponentials).
pub fn simplex_draw(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}
