use std::thread;

use num_integer::Roots;

use super::{BuchiTuple, PairTuple, TupleError};
use crate::exactmath::Integer;

const SIEVE_LIMIT: u64 = 50_000_000;
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub d_max: u64,
    pub shards: usize,
}

/// All non-trivial `n`-term chains of Büchi pairs with `D ≤ d_max`, in
/// ascending `(D, s)` order, with `x_j ≥ y_j` in every pair.
///
/// For each `D` the unordered divisor pairs are sorted by sum and every window
/// of `n` consecutive sums is reported.
pub fn search_chains(cfg: SearchConfig) -> Result<Vec<PairTuple>, TupleError> {
    if cfg.n < 3 {
        return Err(TupleError::TooShort { min: 3, got: cfg.n });
    }
    if cfg.d_max == 0 {
        return Ok(Vec::new());
    }
    let spf = (cfg.d_max <= SIEVE_LIMIT).then(|| smallest_prime_factors(cfg.d_max));
    let spf = spf.as_deref();
    let shards = cfg.shards.max(1);
    let chunks: Vec<(u64, u64)> = (0..cfg.d_max.div_ceil(CHUNK))
        .map(|i| (i * CHUNK + 1, ((i + 1) * CHUNK).min(cfg.d_max)))
        .collect();
    let mut found: Vec<(u64, Vec<[(u64, u64); 8]>, usize)> = Vec::new();
    if shards == 1 {
        for &(lo, hi) in &chunks {
            scan(lo, hi, cfg.n, spf, &mut found);
        }
    } else {
        let parts: Vec<_> = thread::scope(|scope| {
            let handles: Vec<_> = (0..shards)
                .map(|k| {
                    let chunks = &chunks;
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        for &(lo, hi) in chunks.iter().skip(k).step_by(shards) {
                            scan(lo, hi, cfg.n, spf, &mut local);
                        }
                        local
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search shard panicked"))
                .collect()
        });
        found = parts.into_iter().flatten().collect();
        found.sort_by_key(|(d, _, _)| *d);
    }
    let mut out = Vec::new();
    for (_, windows, n) in found {
        for w in windows {
            out.push(PairTuple::from_raw(
                w[..n]
                    .iter()
                    .map(|&(x, y)| (Integer::from(x), Integer::from(y)))
                    .collect(),
            ));
        }
    }
    Ok(out)
}

type Found = (u64, Vec<[(u64, u64); 8]>, usize);

fn scan(lo: u64, hi: u64, n: usize, spf: Option<&[u32]>, out: &mut Vec<Found>) {
    assert!(n <= 8, "chains longer than 8 are not supported");
    let mut divs = Vec::new();
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for d in lo..=hi {
        divisors(d, spf, &mut divs);
        pairs.clear();
        // divisors come sorted ascending, so walking the small cofactor
        // downward lists the pairs by ascending sum
        for &y in divs.iter().rev() {
            if y * y <= d {
                pairs.push((d / y, y));
            }
        }
        let mut windows = Vec::new();
        let mut run = 1;
        for i in 1..pairs.len() {
            if pairs[i].0 + pairs[i].1 == pairs[i - 1].0 + pairs[i - 1].1 + 1 {
                run += 1;
            } else {
                run = 1;
            }
            if run >= n {
                let mut w = [(0, 0); 8];
                w[..n].copy_from_slice(&pairs[i + 1 - n..=i]);
                windows.push(w);
            }
        }
        if !windows.is_empty() {
            out.push((d, windows, n));
        }
    }
}

fn smallest_prime_factors(limit: u64) -> Vec<u32> {
    let limit = limit as usize;
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            spf[i] = i as u32;
            if i * i <= limit {
                for j in (i * i..=limit).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
    }
    spf
}

fn factorize(mut d: u64, spf: Option<&[u32]>) -> Vec<(u64, u32)> {
    let mut f = Vec::new();
    match spf {
        Some(spf) => {
            while d > 1 {
                let p = spf[d as usize] as u64;
                let mut e = 0;
                while d % p == 0 {
                    d /= p;
                    e += 1;
                }
                f.push((p, e));
            }
        }
        None => {
            let mut p = 2;
            while p * p <= d {
                if d % p == 0 {
                    let mut e = 0;
                    while d % p == 0 {
                        d /= p;
                        e += 1;
                    }
                    f.push((p, e));
                }
                p += if p == 2 { 1 } else { 2 };
            }
            if d > 1 {
                f.push((d, 1));
            }
        }
    }
    f
}

fn divisors(d: u64, spf: Option<&[u32]>, out: &mut Vec<u64>) {
    out.clear();
    out.push(1);
    for (p, e) in factorize(d, spf) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
}

/// Every Büchi triple `u₁ < u₂ < u₃ ≤ u_max` with `u₁ ≥ 1`, found by direct
/// enumeration of `u₃² = 2u₂² - u₁² + 2`. Bounds the search by the roots
/// rather than by `D`.
pub fn enumerate_triples(u_max: u64) -> Vec<BuchiTuple> {
    let mut out = Vec::new();
    let lim = (u_max as u128) * (u_max as u128);
    for u2 in 2..u_max {
        let base = 2 * (u2 as u128) * (u2 as u128) + 2;
        for u1 in 1..u2 {
            let sq = base - (u1 as u128) * (u1 as u128);
            if sq > lim {
                continue;
            }
            let r = sq.sqrt();
            if r * r == sq && r as u64 > u2 {
                out.push(BuchiTuple::from_i64(&[u1 as i64, u2 as i64, r as i64]).unwrap());
            }
        }
    }
    out.sort_by(|a, b| a.values()[2].cmp(&b.values()[2]).then_with(|| a.cmp(b)));
    out
}
