//! Random integer cubics through the classifier.

use std::collections::BTreeMap;

use cubic_waring::classify::classify;
use cubic_waring::covariants::aronhold_st;
use cubic_waring::TernaryCubic;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSummary {
    pub count: usize,
    pub seed: u64,
    pub bound: i64,
    /// Orbit row (or `"undetermined"`, `"zero"`) to number of inputs.
    pub by_orbit: BTreeMap<String, usize>,
    /// Inputs classified as row 11 with real rank 4.
    pub typical: usize,
    pub smooth: usize,
    pub undetermined: usize,
    pub smooth_undetermined: usize,
    /// Certificates that failed to re-expand; always expected to be 0.
    pub bad_certificates: usize,
}

impl SampleSummary {
    pub fn typical_fraction(&self) -> f64 {
        self.typical as f64 / self.count.max(1) as f64
    }
}

/// The `count` cubics drawn from ChaCha8 seeded with `seed`, coefficients
/// uniform in `[-bound, bound]`.
pub fn draw(count: usize, seed: u64, bound: i64) -> Vec<TernaryCubic> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| TernaryCubic::from_ints(std::array::from_fn(|_| rng.random_range(-bound..=bound))))
        .collect()
}

#[derive(Default)]
struct Tally {
    orbit: Option<Option<u8>>,
    typical: bool,
    smooth: bool,
    bad: bool,
}

fn tally(f: &TernaryCubic) -> Tally {
    if f.is_zero() {
        return Tally::default();
    }
    let smooth = !aronhold_st(f).discriminant().is_zero();
    match classify(f) {
        Ok(r) => Tally {
            typical: r.orbit == Some(11) && r.rk_real == Some(4),
            bad: r.upper.certificate.target() != f,
            orbit: Some(r.orbit),
            smooth,
        },
        Err(_) => Tally { orbit: Some(None), smooth, ..Tally::default() },
    }
}

pub fn run(count: usize, seed: u64, bound: i64) -> SampleSummary {
    let forms = draw(count, seed, bound);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = forms.len().div_ceil(threads).max(1);
    let tallies: Vec<Tally> = std::thread::scope(|s| {
        let handles: Vec<_> = forms
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(tally).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut out = SampleSummary {
        count,
        seed,
        bound,
        by_orbit: BTreeMap::new(),
        typical: 0,
        smooth: 0,
        undetermined: 0,
        smooth_undetermined: 0,
        bad_certificates: 0,
    };
    for t in tallies {
        let key = match t.orbit {
            None => "zero".to_string(),
            Some(None) => "undetermined".to_string(),
            Some(Some(n)) => format!("{n:02}"),
        };
        *out.by_orbit.entry(key).or_default() += 1;
        out.typical += t.typical as usize;
        out.smooth += t.smooth as usize;
        out.bad_certificates += t.bad as usize;
        if t.orbit == Some(None) {
            out.undetermined += 1;
            out.smooth_undetermined += t.smooth as usize;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        assert_eq!(draw(5, 7, 3), draw(5, 7, 3));
        assert_ne!(draw(5, 7, 3), draw(5, 8, 3));
        let bound_ok = draw(50, 1, 2)
            .iter()
            .flat_map(|f| f.coeffs().to_vec())
            .all(|c| c.as_rational().is_some_and(|r| r.abs() <= cubic_waring::Rational::from(2)));
        assert!(bound_ok);
    }

    #[test]
    fn small_run() {
        let s = run(20, 3, 5);
        assert_eq!(s.by_orbit.values().sum::<usize>(), 20);
        assert_eq!(s.smooth_undetermined, 0);
        assert_eq!(s.bad_certificates, 0);
    }
}
