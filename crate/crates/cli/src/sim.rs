//! Seeded error-injection simulation. Per-trial RNG streams are derived
//! from (seed, trial index), so results do not depend on how trials are
//! scheduled across threads.

use std::time::Instant;

use gagc::code::{GagCode, Message};
use gagc::decoder::{decode_with_radius, DecodeFailure, DecodeOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

pub struct Config {
    pub label: String,
    pub weight: usize,
    pub trials: u64,
    pub seed: u64,
    pub radius: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum TrialOutcome {
    Success,
    TooManyErrors,
    FrobeniusInconsistent,
    DegreeOverflow,
}

impl TrialOutcome {
    fn name(self) -> &'static str {
        match self {
            TrialOutcome::Success => "success",
            TrialOutcome::TooManyErrors => "too_many_errors",
            TrialOutcome::FrobeniusInconsistent => "frobenius_inconsistent",
            TrialOutcome::DegreeOverflow => "degree_overflow",
        }
    }
}

pub struct TrialRecord {
    pub outcome: TrialOutcome,
    /// Whether the decoded message equals the transmitted one.
    pub recovered: bool,
}

pub struct Report {
    label: String,
    weight: usize,
    seed: u64,
    radius: usize,
    n: usize,
    k: usize,
    records: Vec<TrialRecord>,
    wall_per_decode_us: f64,
}

impl Report {
    pub fn successes(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.outcome == TrialOutcome::Success)
            .count()
    }

    pub fn recovered(&self) -> usize {
        self.records.iter().filter(|r| r.recovered).count()
    }

    fn count(&self, outcome: TrialOutcome) -> usize {
        self.records.iter().filter(|r| r.outcome == outcome).count()
    }

    /// Human-readable summary; the timing line goes to the caller's stdout
    /// but is not part of the CSV, which must be byte-reproducible.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "label={} n={} k={} weight={} radius={} seed={} trials={}\n",
            self.label,
            self.n,
            self.k,
            self.weight,
            self.radius,
            self.seed,
            self.records.len()
        ));
        out.push_str(&format!(
            "success={} recovered={} too_many_errors={} frobenius_inconsistent={} degree_overflow={}\n",
            self.successes(),
            self.recovered(),
            self.count(TrialOutcome::TooManyErrors),
            self.count(TrialOutcome::FrobeniusInconsistent),
            self.count(TrialOutcome::DegreeOverflow),
        ));
        out.push_str(&format!(
            "wall_per_decode_us={:.1}\n",
            self.wall_per_decode_us
        ));
        out
    }

    /// Deterministic per-trial rows.
    pub fn csv(&self) -> String {
        let mut out = String::from("trial,weight,outcome,recovered\n");
        for (i, rec) in self.records.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                i,
                self.weight,
                rec.outcome.name(),
                rec.recovered
            ));
        }
        out
    }
}

pub fn run(code: &GagCode, cfg: &Config) -> Report {
    let start = Instant::now();
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(code, cfg, trial))
        .collect();
    let elapsed = start.elapsed();
    Report {
        label: cfg.label.clone(),
        weight: cfg.weight,
        seed: cfg.seed,
        radius: cfg.radius,
        n: code.n(),
        k: code.k(),
        records,
        wall_per_decode_us: elapsed.as_micros() as f64 / cfg.trials.max(1) as f64,
    }
}

fn run_trial(code: &GagCode, cfg: &Config, trial: u64) -> TrialRecord {
    let tower = code.tower();
    let q = tower.q();
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);

    let msg = Message(
        (0..code.k())
            .map(|_| tower.elem(1, rng.random_range(0..q)).unwrap())
            .collect(),
    );
    let sent = code.encode(&msg).expect("message shape is valid");
    let mut rx = sent.as_slice().to_vec();

    // Error positions by partial shuffle, values uniform nonzero.
    let n = code.n();
    let mut positions: Vec<usize> = (0..n).collect();
    for i in 0..cfg.weight {
        let j = rng.random_range(i..n);
        positions.swap(i, j);
        let val = tower.elem(1, rng.random_range(1..q)).unwrap();
        rx[positions[i]] = tower.add(rx[positions[i]], val);
    }

    match decode_with_radius(code, &rx, cfg.radius) {
        DecodeOutcome::Success { message, .. } => TrialRecord {
            outcome: TrialOutcome::Success,
            recovered: message == msg,
        },
        DecodeOutcome::Failure(reason) => TrialRecord {
            outcome: match reason {
                DecodeFailure::TooManyErrors => TrialOutcome::TooManyErrors,
                DecodeFailure::FrobeniusInconsistent => TrialOutcome::FrobeniusInconsistent,
                DecodeFailure::DegreeOverflow => TrialOutcome::DegreeOverflow,
            },
            recovered: false,
        },
    }
}
