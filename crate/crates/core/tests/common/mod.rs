//! Shared helpers for the integration suites: model lists and an
//! independent brute-force resonance enumerator used as the oracle.
//!
//! Each test binary uses a different subset of these helpers.
#![allow(dead_code)]

use parhopf::chevalley::ChevalleyAlgebra;
use parhopf::hopf::{ConnectionModuli, PoincareDulac};
use parhopf::parabolic::{build_parabolic, ParabolicData};
use parhopf::rat::{rat_to_f64, Rat};
use parhopf::rootsys::{DynkinSpec, RootSystem};
use std::sync::Arc;

/// The desk-scale families the suites must cover.
pub const REQUIRED_TYPES: [&str; 11] =
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2"];

pub fn system(spec: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(DynkinSpec::parse(spec).unwrap()).unwrap())
}

pub fn algebra(rs: &Arc<RootSystem>) -> ChevalleyAlgebra {
    ChevalleyAlgebra::build(rs.clone())
}

pub fn parabolic(rs: &Arc<RootSystem>, crossed: &[usize]) -> ParabolicData {
    build_parabolic(rs.clone(), crossed).unwrap()
}

/// Every nonempty crossed subset of `1..=rank`.
pub fn nonempty_crossed_sets(rank: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect())
        .collect()
}

/// Independent resonance oracle: for each target, iterate the full
/// multiindex box with caps `floor(budget / L_m) + 2` (a deliberately
/// enlarged box, no pruning inside it) and compare exact products of
/// rational moduli and turns.
pub struct ResonanceOracle {
    moduli: Vec<Rat>,
    turns: Vec<Rat>,
    neg_logs: Vec<f64>,
    /// memoized powers: powers[m][e] = moduli[m]^e
    powers: Vec<Vec<Rat>>,
    turn_mults: Vec<Vec<Rat>>,
}

impl ResonanceOracle {
    pub fn new(moduli: &[Rat], turns: &[Rat]) -> ResonanceOracle {
        let neg_logs: Vec<f64> = moduli.iter().map(|m| -rat_to_f64(m).ln()).collect();
        ResonanceOracle {
            moduli: moduli.to_vec(),
            turns: turns.to_vec(),
            neg_logs,
            powers: vec![Vec::new(); moduli.len()],
            turn_mults: vec![Vec::new(); moduli.len()],
        }
    }

    fn power(&mut self, m: usize, e: u32) -> Rat {
        while self.powers[m].len() <= e as usize {
            let next = match self.powers[m].last() {
                None => Rat::new(1.into(), 1.into()),
                Some(prev) => prev * &self.moduli[m],
            };
            self.powers[m].push(next);
        }
        self.powers[m][e as usize].clone()
    }

    fn turn_mult(&mut self, m: usize, e: u32) -> Rat {
        while self.turn_mults[m].len() <= e as usize {
            let next = match self.turn_mults[m].last() {
                None => Rat::new(0.into(), 1.into()),
                Some(prev) => prev + &self.turns[m],
            };
            self.turn_mults[m].push(next);
        }
        self.turn_mults[m][e as usize].clone()
    }

    fn alpha_box(&self, budget: f64) -> Vec<Vec<u32>> {
        let n = self.neg_logs.len();
        if budget < -1e-9 {
            return Vec::new();
        }
        let caps: Vec<u32> = self
            .neg_logs
            .iter()
            .map(|&l| (budget.max(0.0) / l).floor() as u32 + 2)
            .collect();
        let mut out = vec![vec![]];
        for m in 0..n {
            let mut next = Vec::with_capacity(out.len() * (caps[m] as usize + 1));
            for prefix in &out {
                for e in 0..=caps[m] {
                    let mut alpha = prefix.clone();
                    alpha.push(e);
                    next.push(alpha);
                }
            }
            out = next;
        }
        out
    }

    fn matches(&mut self, target: usize, exps: &[u32]) -> bool {
        let mut modulus = Rat::new(1.into(), 1.into());
        let mut turn = Rat::new(0.into(), 1.into());
        for (m, &e) in exps.iter().enumerate() {
            modulus *= self.power(m, e);
            turn += self.turn_mult(m, e);
        }
        modulus == self.moduli[target] && (turn - &self.turns[target]).is_integer()
    }

    pub fn connection_relations(&mut self) -> Vec<ConnectionModuli> {
        let n = self.moduli.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let budget = self.neg_logs[i] - self.neg_logs[j] - self.neg_logs[k];
                    for alpha in self.alpha_box(budget) {
                        let mut exps = alpha.clone();
                        exps[j] += 1;
                        exps[k] += 1;
                        if self.matches(i, &exps) {
                            out.push(ConnectionModuli { i: i + 1, j: j + 1, k: k + 1, alpha });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn poincare_dulac(&mut self) -> Vec<PoincareDulac> {
        let n = self.moduli.len();
        let mut out = Vec::new();
        for j in 0..n {
            for alpha in self.alpha_box(self.neg_logs[j]) {
                if alpha.iter().sum::<u32>() >= 2 && self.matches(j, &alpha) {
                    out.push(PoincareDulac { j: j + 1, alpha });
                }
            }
        }
        out.sort();
        out
    }
}
