//! Discrete power-law fitting by maximum likelihood.
//!
//! Fits `p_k ∝ k^{-γ}` for `k ≥ k_min` to a degree distribution. For every
//! candidate cutoff the exponent maximizes the zeta likelihood, and the
//! reported cutoff minimizes the Kolmogorov–Smirnov distance between the
//! empirical and fitted tail CDFs.

use core::fmt;

use crate::math;
use crate::stats::DegreeDistribution;

/// Minimum number of tail samples for a candidate cutoff to be considered.
pub const MIN_TAIL_SAMPLES: u64 = 50;

/// Fitted discrete power-law tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    /// Exponent `γ` of `p_k ∝ k^{-γ}`.
    pub exponent: f64,
    /// Smallest degree the law applies to.
    pub k_min: u64,
    /// KS distance between empirical and fitted tail CDFs.
    pub ks_statistic: f64,
    /// Number of samples at or above `k_min`.
    pub tail_samples: u64,
}

/// Fitting is impossible on this input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerLawError {
    /// No candidate cutoff keeps at least [`MIN_TAIL_SAMPLES`] samples.
    InsufficientTail { available: u64 },
}

impl fmt::Display for PowerLawError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PowerLawError::InsufficientTail { available } => write!(
                f,
                "power-law fit needs {MIN_TAIL_SAMPLES} tail samples; only {available} positive-degree samples available"
            ),
        }
    }
}

impl core::error::Error for PowerLawError {}

/// Hurwitz zeta `ζ(s, a) = Σ_{j≥0} (a + j)^{-s}` for `s > 1`, `a ≥ 1`.
///
/// Euler–Maclaurin: direct terms up to a boundary, then the integral tail
/// plus Bernoulli corrections, accurate to full double precision here.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    debug_assert!(s > 1.0 && a >= 1.0);
    let boundary = 25.0;
    let mut sum = 0.0;
    let mut x = a;
    while x < boundary {
        sum += math::powf(x, -s);
        x += 1.0;
    }
    // tail from x: ∫ + boundary value/2 + Bernoulli terms
    let inv = 1.0 / x;
    let xs = math::powf(x, -s);
    sum += x * xs / (s - 1.0); // x^{1-s}/(s-1)
    sum += 0.5 * xs;
    let mut deriv = s * xs * inv; // s·x^{-s-1} and later odd derivatives
    sum += deriv / 12.0;
    deriv *= (s + 1.0) * (s + 2.0) * inv * inv;
    sum -= deriv / 720.0;
    deriv *= (s + 3.0) * (s + 4.0) * inv * inv;
    sum += deriv / 30240.0;
    deriv *= (s + 5.0) * (s + 6.0) * inv * inv;
    sum -= deriv / 1209600.0;
    sum
}

/// Minimizes a unimodal function on `[a, b]` by golden-section search.
fn golden_minimize(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - (b - a) * INV_PHI;
    let mut d = a + (b - a) * INV_PHI;
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > 1e-10 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * INV_PHI;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * INV_PHI;
            fd = f(d);
        }
    }
    (a + b) / 2.0
}

/// Fits the power-law tail of a degree distribution.
///
/// Zero degrees never join the tail. Candidates are the distinct positive
/// degrees with at least [`MIN_TAIL_SAMPLES`] samples at or above them; ties
/// in the KS distance go to the smaller cutoff.
pub fn fit_power_law(dist: &DegreeDistribution) -> Result<PowerLawFit, PowerLawError> {
    let tail: alloc::vec::Vec<(u64, u64)> = dist.counts().filter(|&(k, _)| k >= 1).collect();
    let available: u64 = tail.iter().map(|&(_, c)| c).sum();
    let mut best: Option<PowerLawFit> = None;
    let mut samples_below: u64 = 0;
    for (i, &(k_min, _)) in tail.iter().enumerate() {
        let n_tail = available - samples_below;
        samples_below += tail[i].1;
        if n_tail < MIN_TAIL_SAMPLES {
            break; // later cutoffs keep even fewer samples
        }
        if tail.len() - i < 2 {
            break; // one distinct degree cannot identify an exponent
        }
        let log_sum: f64 = tail[i..]
            .iter()
            .map(|&(k, c)| c as f64 * math::ln(k as f64))
            .sum();
        let n = n_tail as f64;
        // negative log-likelihood per the zeta normalization
        let nll = |gamma: f64| gamma * log_sum + n * math::ln(hurwitz_zeta(gamma, k_min as f64));
        let gamma = golden_minimize(nll, 1.001, 10.0);
        let z = hurwitz_zeta(gamma, k_min as f64);
        // KS distance, walking the integers to keep the zeta tail incremental
        let mut ks: f64 = 0.0;
        let mut cumulative = 0u64;
        let mut partial = 0.0; // Σ_{j=k_min..k} j^{-γ}
        let mut next = k_min;
        for &(k, c) in &tail[i..] {
            while next <= k {
                partial += math::powf(next as f64, -gamma);
                next += 1;
            }
            cumulative += c;
            let empirical = cumulative as f64 / n;
            let fitted = partial / z;
            ks = ks.max(math::abs(empirical - fitted));
        }
        let candidate = PowerLawFit {
            exponent: gamma,
            k_min,
            ks_statistic: ks,
            tail_samples: n_tail,
        };
        if best.is_none_or(|b| ks < b.ks_statistic) {
            best = Some(candidate);
        }
    }
    best.ok_or(PowerLawError::InsufficientTail { available })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::DegreeMode;
    use alloc::collections::BTreeMap;
    use rand::Rng;

    #[test]
    fn zeta_matches_reference_values() {
        // ζ(2, 1) = π²/6
        assert!((hurwitz_zeta(2.0, 1.0) - core::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        // reference values from an independent arbitrary-precision evaluation
        assert!((hurwitz_zeta(1.5, 1.0) - 2.612_375_348_685_488).abs() < 1e-12);
        assert!((hurwitz_zeta(2.5, 3.0) - 0.164_710_561_954_280_3).abs() < 1e-12);
        assert!((hurwitz_zeta(1.2, 1.0) - 5.591_582_441_177_752).abs() < 1e-11);
        assert!((hurwitz_zeta(9.5, 2.0) - 1.412_590_612_173_662_3e-3).abs() < 1e-15);
        // consistency: ζ(s, a) = ζ(s, a+1) + a^{-s}
        for &(s, a) in &[(1.2, 1.0), (3.3, 7.0), (9.5, 2.0), (2.0, 40.0)] {
            let lhs = hurwitz_zeta(s, a);
            let rhs = hurwitz_zeta(s, a + 1.0) + a.powf(-s);
            assert!((lhs - rhs).abs() < 1e-12 * lhs, "s={s} a={a}");
        }
    }

    #[test]
    fn recovers_planted_zipf_exponent() {
        let mut rng = crate::generate::rng_from_seed(101);
        let dist = rand_distr::Zeta::new(2.5).unwrap();
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for _ in 0..100_000 {
            let x: f64 = rng.sample(dist);
            *counts.entry(x as u64).or_insert(0) += 1;
        }
        let dd = DegreeDistribution::from_counts(counts, DegreeMode::Multiplicity);
        let fit = fit_power_law(&dd).unwrap();
        assert!(
            (2.45..=2.55).contains(&fit.exponent),
            "exponent {}",
            fit.exponent
        );
        assert!(fit.k_min <= 3, "k_min {}", fit.k_min);
        assert!(fit.tail_samples >= MIN_TAIL_SAMPLES);
    }

    #[test]
    fn degenerate_tails_are_rejected() {
        // fewer than the required samples: error
        let mut small = BTreeMap::new();
        small.insert(5u64, 20u64);
        let dd = DegreeDistribution::from_counts(small, DegreeMode::Multiplicity);
        assert_eq!(
            fit_power_law(&dd),
            Err(PowerLawError::InsufficientTail { available: 20 })
        );

        // enough samples but a single distinct degree: the exponent is
        // unidentifiable, so the fit is rejected as insufficient data
        let mut flat = BTreeMap::new();
        flat.insert(5u64, 100u64);
        let dd = DegreeDistribution::from_counts(flat, DegreeMode::Multiplicity);
        assert_eq!(
            fit_power_law(&dd),
            Err(PowerLawError::InsufficientTail { available: 100 })
        );
    }

    #[test]
    fn zero_degrees_are_excluded_from_the_tail() {
        let mut counts = BTreeMap::new();
        counts.insert(0u64, 1000u64);
        counts.insert(1, 60);
        counts.insert(2, 15);
        counts.insert(3, 7);
        let dd = DegreeDistribution::from_counts(counts, DegreeMode::Multiplicity);
        let fit = fit_power_law(&dd).unwrap();
        assert!(fit.k_min >= 1);
        assert_eq!(fit.tail_samples, 82);
    }
}
