//! Monte Carlo bookkeeping: seeded streams, chunked sampling with a fixed
//! reduction order, running moments, and Kolmogorov–Smirnov tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Samples drawn per chunk. Every chunk owns an independent ChaCha stream, so
/// results do not depend on how chunks are scheduled across threads.
pub const CHUNK: usize = 1 << 14;

/// The RNG for `(seed, stream)`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Mixes a base seed with a task index into a new seed (splitmix64 finalizer).
pub fn derive_seed(seed: u64, task: u64) -> u64 {
    let mut z = seed ^ task.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `work(rng, count)` over `samples` split into [`CHUNK`]-sized pieces,
/// possibly in parallel, and returns the partial results in chunk order.
pub fn chunked<T, F>(samples: usize, seed: u64, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> T + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let count = CHUNK.min(samples - c * CHUNK);
            let mut rng = stream_rng(seed, c as u64);
            work(&mut rng, count)
        })
        .collect()
}

/// Sum and sum of squares of a scalar sample.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Moments {
    pub n: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.n += 1;
        self.sum += x;
        self.sum_sq += x * x;
    }

    pub fn merge(&mut self, other: &Moments) {
        self.n += other.n;
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    pub fn mean(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.sum / self.n as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let n = self.n as f64;
        ((self.sum_sq - self.sum * self.sum / n) / (n - 1.0)).max(0.0)
    }

    pub fn stderr(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        (self.variance() / self.n as f64).sqrt()
    }

    pub fn estimate(&self) -> Estimate {
        Estimate {
            mean: self.mean(),
            stderr: self.stderr(),
            samples: self.n,
        }
    }
}

/// A Monte Carlo mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Self {
            mean: value,
            stderr: 0.0,
            samples: 0,
        }
    }

    /// |mean − target| in units of the standard error (∞ when the error is
    /// zero and the difference is not).
    pub fn sigmas_from(&self, target: f64) -> f64 {
        let d = (self.mean - target).abs();
        if d == 0.0 {
            0.0
        } else {
            d / self.stderr
        }
    }

    pub fn within_sigmas(&self, target: f64, sigmas: f64) -> bool {
        (self.mean - target).abs() <= sigmas * self.stderr
    }
}

/// Kolmogorov limiting survival function Q(t) = 2 Σ (-1)^{j-1} e^{-2 j² t²}.
pub fn kolmogorov_q(t: f64) -> f64 {
    if t < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let j = j as f64;
        let term = (-2.0 * j * j * t * t).exp();
        sum += if j as u64 % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Result of a KS test: the statistic D and its asymptotic p-value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

/// One-sample KS test of `data` against the continuous CDF `cdf`.
pub fn ks_one_sample(data: &[f64], cdf: impl Fn(f64) -> f64) -> KsResult {
    let mut x = data.to_vec();
    x.sort_by(f64::total_cmp);
    let n = x.len() as f64;
    let d = x
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let f = cdf(v);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max);
    let en = n.sqrt();
    KsResult {
        statistic: d,
        p_value: kolmogorov_q((en + 0.12 + 0.11 / en) * d),
    }
}

/// Two-sample KS test.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> KsResult {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    while i < x.len() && j < y.len() {
        let v = x[i].min(y[j]);
        while i < x.len() && x[i] <= v {
            i += 1;
        }
        while j < y.len() && y[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    let en = (n * m / (n + m)).sqrt();
    KsResult {
        statistic: d,
        p_value: kolmogorov_q((en + 0.12 + 0.11 / en) * d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn moments() {
        let mut m = Moments::default();
        for x in [1.0, 2.0, 3.0, 4.0] {
            m.push(x);
        }
        assert_eq!(m.mean(), 2.5);
        assert!((m.variance() - 5.0 / 3.0).abs() < 1e-12);
        let mut a = Moments::default();
        let mut b = Moments::default();
        a.push(1.0);
        a.push(2.0);
        b.push(3.0);
        b.push(4.0);
        a.merge(&b);
        assert_eq!(a, m);
    }

    #[test]
    fn kolmogorov_tail() {
        // Q(1.36) ≈ 0.05, Q(1.63) ≈ 0.01
        assert!((kolmogorov_q(1.358) - 0.05).abs() < 1e-3);
        assert!((kolmogorov_q(1.628) - 0.01).abs() < 1e-3);
        assert_eq!(kolmogorov_q(0.0), 1.0);
    }

    #[test]
    fn ks_uniform() {
        let mut rng = stream_rng(1, 0);
        let u: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>()).collect();
        assert!(ks_one_sample(&u, |x| x.clamp(0.0, 1.0)).p_value > 0.01);
        let sq: Vec<f64> = u.iter().map(|x| x * x).collect();
        assert!(ks_one_sample(&sq, |x| x.clamp(0.0, 1.0)).p_value < 1e-6);
        let v: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>()).collect();
        assert!(ks_two_sample(&u, &v).p_value > 0.01);
        assert!(ks_two_sample(&u, &sq).p_value < 1e-6);
    }

    #[test]
    fn chunking_is_deterministic() {
        let run = || -> Vec<f64> {
            chunked(3 * CHUNK + 5, 9, |rng, n| (0..n).map(|_| rng.random::<f64>()).sum())
        };
        let a = run();
        assert_eq!(a.len(), 4);
        assert_eq!(a, run());
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
    }
}
