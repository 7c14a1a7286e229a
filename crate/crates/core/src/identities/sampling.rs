//! Seeded parameter draws with rejection; the last coordinate comes from balancing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numerics::{HalfInt, Sector};
use crate::{Error, Result};

const MAX_TRIES: usize = 200_000;

pub(crate) struct Draw {
    rng: ChaCha8Rng,
    pub seed: u64,
    pub sector: Sector,
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Odd seeds draw from the half-integer sector unless one is requested.
pub(crate) fn default_sector(seed: u64) -> Sector {
    if seed % 2 == 1 {
        Sector::Half
    } else {
        Sector::Integer
    }
}

impl Draw {
    pub fn new(id: &str, seed: u64, sector: Option<Sector>) -> Self {
        let mix = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ fnv1a(id);
        Self {
            rng: ChaCha8Rng::seed_from_u64(mix),
            seed,
            sector: sector.unwrap_or_else(|| default_sector(seed)),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// k values in (lo, hi) summing to `total`.
    pub fn parts(&mut self, k: usize, total: f64, lo: f64, hi: f64) -> Result<Vec<f64>> {
        for _ in 0..MAX_TRIES {
            let mut v: Vec<f64> = (0..k - 1).map(|_| self.uniform(lo, hi)).collect();
            let last = total - v.iter().sum::<f64>();
            if last > lo && last < hi {
                v.push(last);
                return Ok(v);
            }
        }
        Err(Error::NonConvergence("parameter rejection sampling exhausted".into()))
    }

    /// k values in (−w, w) except the last, which closes the sum to `total`.
    pub fn free_parts(&mut self, k: usize, total: f64, w: f64) -> Vec<f64> {
        let mut v: Vec<f64> = (0..k - 1).map(|_| self.uniform(-w, w)).collect();
        let last = total - v.iter().sum::<f64>();
        v.push(last);
        v
    }

    /// A label in the current sector within ±span of ν.
    pub fn label(&mut self, span: i64) -> HalfInt {
        let k = self.rng.gen_range(-span..=span);
        HalfInt::from_int(k) + self.sector.nu()
    }

    /// k labels in the current sector summing to `total`, the last one within span+1.
    pub fn labels(&mut self, k: usize, total: HalfInt, span: i64) -> Result<Vec<HalfInt>> {
        for _ in 0..MAX_TRIES {
            let mut v: Vec<HalfInt> = (0..k - 1).map(|_| self.label(span)).collect();
            let last = total - v.iter().copied().sum::<HalfInt>();
            if last.sector() == self.sector && last.to_f64().abs() <= (span + 1) as f64 {
                v.push(last);
                return Ok(v);
            }
        }
        Err(Error::NonConvergence("label rejection sampling exhausted".into()))
    }
}
