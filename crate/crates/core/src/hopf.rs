//! Contraction spectra and resonance counting for Hopf-manifold structures.
//!
//! A Cartan element acts on the noncompact negative root spaces with
//! eigenvalue `exp(-<beta, sigma>)` on the `-beta` weight space; the log
//! eigenvalues `mu_beta = -<beta, sigma>` are exact complex rationals when
//! `sigma` is. Strict contraction means every `Re mu_beta < 0`, and picking
//! `sigma = -delta` always achieves it on an effective parabolic.
//!
//! Two resonance enumerations drive the classification: Poincare-Dulac
//! resonances `lambda_j = lambda^alpha` with `|alpha| >= 2` (obstructions to
//! formal linearization), and connection relations `lambda_i = lambda_j
//! lambda_k lambda^alpha`, whose count is the moduli dimension of invariant
//! holomorphic affine connections. Both enumerations are finite: strict
//! contraction bounds every admissible multiindex inside an explicit box.
//!
//! Eigenvalues supplied exactly (rational modulus and argument in rational
//! turns, or rational log form) are compared exactly; float input is
//! compared in log form within 1e-9 on the real part and on the argument
//! reduced mod 2pi.

use crate::parabolic::ParabolicData;
use crate::rat::{rat, rat_str, rat_to_f64, CRat, Rat};
use crate::rootsys::Root;
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// A Cartan coefficient vector in simple-root coordinates; pairings
/// `<beta, sigma>` are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionSigma {
    pub coeffs: Vec<CRat>,
}

impl ContractionSigma {
    pub fn from_rational(coeffs: Vec<Rat>) -> ContractionSigma {
        ContractionSigma { coeffs: coeffs.into_iter().map(CRat::from_rat).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }
}

/// Log-eigenvalues `mu_beta = -<beta, sigma>` over the noncompact positive
/// roots.
#[derive(Debug, Clone)]
pub struct Spectrum {
    entries: Vec<(Root, CRat)>,
}

impl Spectrum {
    pub fn entries(&self) -> &[(Root, CRat)] {
        &self.entries
    }

    pub fn mu(&self, root: &Root) -> Option<&CRat> {
        self.entries.iter().find(|(r, _)| r == root).map(|(_, m)| m)
    }

    /// Strictly contracting iff `Re mu < 0` for every entry.
    pub fn strictly_contracting(&self) -> bool {
        self.entries.iter().all(|(_, m)| m.re.is_negative())
    }

    /// The eigenvalues `exp(mu)` in exact log form.
    pub fn eigenvalues(&self) -> Vec<Eigenvalue> {
        self.entries
            .iter()
            .map(|(_, m)| Eigenvalue::ExactLog { re: m.re.clone(), im: m.im.clone() })
            .collect()
    }

    /// Log-eigenvalues are additive in the root, so every additive relation
    /// among the roots is satisfied by the spectrum; check it exactly.
    pub fn satisfies(&self, relation: &AdditiveRootRelation) -> bool {
        let side = |roots: &[Root]| -> Option<CRat> {
            let mut acc = CRat::zero();
            for r in roots {
                acc = acc + self.mu(r)?.clone();
            }
            Some(acc)
        };
        match (side(&relation.lhs), side(&relation.rhs)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

/// Log-eigenvalues of a Cartan element on the noncompact negative root
/// spaces: `mu_beta = -<beta, sigma>` for `beta` in `Delta^+_P`, exact.
pub fn contraction_spectrum(pd: &ParabolicData, sigma: &ContractionSigma) -> Result<Spectrum> {
    let rs = pd.root_system();
    let rank = rs.rank();
    if sigma.coeffs.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, got: sigma.coeffs.len() });
    }
    let mut entries = Vec::with_capacity(pd.noncompact_pos().len());
    for &idx in pd.noncompact_pos() {
        let beta = rs.root(idx);
        // <beta, sigma> = sum_j (beta^T G)_j sigma_j
        let mut mu = CRat::zero();
        for (j, coeff) in sigma.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (i, &b) in beta.0.iter().enumerate() {
                if b != 0 {
                    row += rat(b) * &rs.gram()[i][j];
                }
            }
            mu = mu + coeff.scale(&row);
        }
        entries.push((beta.clone(), -mu));
    }
    Ok(Spectrum { entries })
}

/// The canonical strictly contracting Cartan element: `sigma = -delta`,
/// verified to pair positively with every noncompact positive root before
/// returning.
pub fn canonical_contracting_sigma(pd: &ParabolicData) -> Result<ContractionSigma> {
    if pd.noncompact_pos().is_empty() {
        return Err(Error::DegenerateParabolic);
    }
    let coeffs: Vec<Rat> = pd.delta().iter().map(|q| -q).collect();
    let sigma = ContractionSigma::from_rational(coeffs.clone());
    let rs = pd.root_system();
    for &idx in pd.noncompact_pos() {
        let beta = rs.root(idx);
        let pairing = rs.inner_product(&coeffs, &rs.root_weight(beta))?;
        if !pairing.is_positive() {
            return Err(Error::Invariant(format!(
                "canonical sigma pairs nonpositively with {beta}: {}",
                rat_str(&pairing)
            )));
        }
    }
    Ok(sigma)
}

/// Two distinct multisets of noncompact positive roots with the same weight
/// sum. Each side is sorted; sides are ordered canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AdditiveRootRelation {
    pub lhs: Vec<Root>,
    pub rhs: Vec<Root>,
}

/// All pairs of distinct multisets of elements of `Delta^+_P` of size at
/// most `max_terms` with equal weight sums, deduplicated up to swapping
/// sides. Size-1 versus size-2 pairs are the classical `beta = gamma_1 +
/// gamma_2` relations.
pub fn additive_relations(
    pd: &ParabolicData,
    max_terms: usize,
) -> Result<Vec<AdditiveRootRelation>> {
    if max_terms < 2 {
        return Err(Error::MaxTermsTooSmall(max_terms));
    }
    let rs = pd.root_system();
    let roots: Vec<Root> = pd.noncompact_pos().iter().map(|&i| rs.root(i).clone()).collect();
    let rank = rs.rank();

    // Multisets of size 1..=max_terms as sorted index tuples.
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..roots.len()).map(|i| vec![i]).collect();
    while let Some(ms) = stack.pop() {
        if ms.len() < max_terms {
            let last = *ms.last().unwrap();
            for next in last..roots.len() {
                let mut bigger = ms.clone();
                bigger.push(next);
                stack.push(bigger);
            }
        }
        multisets.push(ms);
    }
    multisets.sort_by_key(|ms| (ms.len(), ms.clone()));

    let mut by_sum: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (mi, ms) in multisets.iter().enumerate() {
        let mut sum = vec![0i64; rank];
        for &ri in ms {
            for (c, &x) in sum.iter_mut().zip(&roots[ri].0) {
                *c += x;
            }
        }
        by_sum.entry(sum).or_default().push(mi);
    }

    let to_roots = |ms: &[usize]| -> Vec<Root> {
        let mut v: Vec<Root> = ms.iter().map(|&ri| roots[ri].clone()).collect();
        v.sort();
        v
    };
    let mut relations = Vec::new();
    for group in by_sum.values() {
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                relations.push(AdditiveRootRelation {
                    lhs: to_roots(&multisets[a]),
                    rhs: to_roots(&multisets[b]),
                });
            }
        }
    }
    relations.sort();
    Ok(relations)
}

/// A contraction eigenvalue in one of three representations.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    /// `lambda = modulus * exp(2 pi i turns)` with exact rational parts.
    ExactPolar { modulus: Rat, turns: Rat },
    /// `lambda = exp(re + i im)` with exact rational log parts (radians).
    ExactLog { re: Rat, im: Rat },
    /// Cartesian float; resonance comparisons fall back to the 1e-9 log-form
    /// tolerance.
    Float { re: f64, im: f64 },
}

impl Eigenvalue {
    /// Parse the polar CLI form `"<modulus>∠<degrees>"` with exact rational
    /// modulus and degrees, e.g. `"1/2∠90"`, `"0.25∠-30"`.
    pub fn parse_polar(s: &str) -> Result<Eigenvalue> {
        let (m, d) = s.split_once('∠').ok_or_else(|| Error::Parse {
            pos: 0,
            token: s.into(),
            msg: "expected <modulus>∠<degrees>".into(),
        })?;
        let modulus = crate::rat::parse_rat(m)
            .filter(|q| q.is_positive())
            .ok_or_else(|| Error::Parse {
                pos: 0,
                token: m.into(),
                msg: "modulus must be a positive rational".into(),
            })?;
        let degrees = crate::rat::parse_rat(d).ok_or_else(|| Error::Parse {
            pos: s.len() - d.len(),
            token: d.into(),
            msg: "angle must be a rational number of degrees".into(),
        })?;
        Ok(Eigenvalue::ExactPolar { modulus, turns: degrees / rat(360) })
    }
}

const LOG_TOLERANCE: f64 = 1e-9;

/// Homogeneous internal form of an eigenvalue list.
enum EigList {
    Polar(Vec<(Rat, Rat)>),
    Log(Vec<(Rat, Rat)>),
    Float(Vec<(f64, f64)>),
}

impl EigList {
    /// Validate and normalize. Mixed exact representations degrade to the
    /// float path; a homogeneous exact list is compared exactly.
    fn new(lambdas: &[Eigenvalue]) -> Result<EigList> {
        let all_polar = lambdas.iter().all(|l| matches!(l, Eigenvalue::ExactPolar { .. }));
        let all_log = lambdas.iter().all(|l| matches!(l, Eigenvalue::ExactLog { .. }));
        let list = if all_polar {
            EigList::Polar(
                lambdas
                    .iter()
                    .map(|l| match l {
                        Eigenvalue::ExactPolar { modulus, turns } => {
                            (modulus.clone(), turns.clone())
                        }
                        _ => unreachable!(),
                    })
                    .collect(),
            )
        } else if all_log {
            EigList::Log(
                lambdas
                    .iter()
                    .map(|l| match l {
                        Eigenvalue::ExactLog { re, im } => (re.clone(), im.clone()),
                        _ => unreachable!(),
                    })
                    .collect(),
            )
        } else {
            EigList::Float(
                lambdas
                    .iter()
                    .map(|l| match l {
                        Eigenvalue::Float { re, im } => (*re, *im),
                        Eigenvalue::ExactPolar { modulus, turns } => {
                            let m = rat_to_f64(modulus);
                            let a = rat_to_f64(turns) * std::f64::consts::TAU;
                            (m * a.cos(), m * a.sin())
                        }
                        Eigenvalue::ExactLog { re, im } => {
                            let m = rat_to_f64(re).exp();
                            let a = rat_to_f64(im);
                            (m * a.cos(), m * a.sin())
                        }
                    })
                    .collect(),
            )
        };
        for index in 0..list.len() {
            match &list {
                EigList::Polar(v) => {
                    if v[index].0.is_zero() || v[index].0.is_negative() {
                        return Err(Error::ZeroEigenvalue { index: index + 1 });
                    }
                    if v[index].0 >= Rat::one() {
                        return Err(Error::NotContracting { index: index + 1 });
                    }
                }
                EigList::Log(v) => {
                    // exp never vanishes; contraction iff Re < 0
                    if !v[index].0.is_negative() {
                        return Err(Error::NotContracting { index: index + 1 });
                    }
                }
                EigList::Float(v) => {
                    let m = v[index].0.hypot(v[index].1);
                    if m == 0.0 {
                        return Err(Error::ZeroEigenvalue { index: index + 1 });
                    }
                    if m >= 1.0 {
                        return Err(Error::NotContracting { index: index + 1 });
                    }
                }
            }
        }
        Ok(list)
    }

    fn len(&self) -> usize {
        match self {
            EigList::Polar(v) | EigList::Log(v) => v.len(),
            EigList::Float(v) => v.len(),
        }
    }

    /// `-log|lambda_m| > 0`, as a float for box bounds.
    fn neg_log_modulus(&self, m: usize) -> f64 {
        match self {
            EigList::Polar(v) => -rat_to_f64(&v[m].0).ln(),
            EigList::Log(v) => -rat_to_f64(&v[m].0),
            EigList::Float(v) => -v[m].0.hypot(v[m].1).ln(),
        }
    }

    /// Does `lambda_target = prod_m lambda_m^{exps_m}` hold?
    fn relation_holds(&self, target: usize, exps: &[u32]) -> bool {
        match self {
            EigList::Polar(v) => {
                let mut modulus = Rat::one();
                let mut turns = Rat::zero();
                for (m, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    modulus *= rat_pow(&v[m].0, e);
                    turns += &v[m].1 * rat(i64::from(e));
                }
                modulus == v[target].0 && (turns - &v[target].1).is_integer()
            }
            EigList::Log(v) => {
                let mut re = Rat::zero();
                let mut im = Rat::zero();
                for (m, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    re += &v[m].0 * rat(i64::from(e));
                    im += &v[m].1 * rat(i64::from(e));
                }
                // equality mod 2 pi i: the imaginary parts are rational
                // radians, so a nonzero multiple of 2 pi never matches
                re == v[target].0 && im == v[target].1
            }
            EigList::Float(v) => {
                let mut log_re = 0.0f64;
                let mut arg = 0.0f64;
                for (m, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    log_re += f64::from(e) * v[m].0.hypot(v[m].1).ln();
                    arg += f64::from(e) * v[m].1.atan2(v[m].0);
                }
                let target_log = v[target].0.hypot(v[target].1).ln();
                let target_arg = v[target].1.atan2(v[target].0);
                let darg = (arg - target_arg).rem_euclid(std::f64::consts::TAU);
                let darg = darg.min(std::f64::consts::TAU - darg);
                (log_re - target_log).abs() < LOG_TOLERANCE && darg < LOG_TOLERANCE
            }
        }
    }
}

fn rat_pow(q: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

/// Enumerate all multiindices `alpha` with `sum_m alpha_m L_m <= budget`
/// (within a safety margin) and call `f` on each, the zero multiindex
/// included.
fn for_each_alpha(weights: &[f64], budget: f64, f: &mut impl FnMut(&[u32])) {
    let n = weights.len();
    let slack = budget + 1e-6 * (1.0 + budget.abs());
    let mut alpha = vec![0u32; n];
    fn rec(
        weights: &[f64],
        slack: f64,
        alpha: &mut Vec<u32>,
        pos: usize,
        used: f64,
        f: &mut impl FnMut(&[u32]),
    ) {
        if pos == weights.len() {
            f(alpha);
            return;
        }
        let mut e = 0u32;
        loop {
            let cost = f64::from(e) * weights[pos];
            if used + cost > slack {
                break;
            }
            alpha[pos] = e;
            rec(weights, slack, alpha, pos + 1, used + cost, f);
            e += 1;
        }
        alpha[pos] = 0;
    }
    if slack >= 0.0 {
        rec(weights, slack, &mut alpha, 0, 0.0, f);
    }
}

/// One relation `lambda_i = lambda_j lambda_k lambda^alpha` (1-based
/// indices, ordered `(j, k)`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ConnectionModuli {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub alpha: Vec<u32>,
}

/// One Poincare-Dulac resonance `lambda_j = lambda^alpha`, `|alpha| >= 2`
/// (1-based index).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PoincareDulac {
    pub j: usize,
    pub alpha: Vec<u32>,
}

/// Count the relations `lambda_i = lambda_j lambda_k lambda^alpha` over all
/// ordered pairs `(j, k)` and multiindices `alpha >= 0`; the count is the
/// moduli dimension of invariant holomorphic affine connections.
pub fn affine_moduli_dimension(
    lambdas: &[Eigenvalue],
) -> Result<(usize, Vec<ConnectionModuli>)> {
    let list = EigList::new(lambdas)?;
    let n = list.len();
    let weights: Vec<f64> = (0..n).map(|m| list.neg_log_modulus(m)).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let budget = weights[i] - weights[j] - weights[k];
                let mut incs = vec![0u32; n];
                incs[j] += 1;
                incs[k] += 1;
                let mut exps = vec![0u32; n];
                for_each_alpha(&weights, budget, &mut |alpha| {
                    for (e, (&a, &extra)) in
                        exps.iter_mut().zip(alpha.iter().zip(incs.iter()))
                    {
                        *e = a + extra;
                    }
                    if list.relation_holds(i, &exps) {
                        relations.push(ConnectionModuli {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            alpha: alpha.to_vec(),
                        });
                    }
                });
            }
        }
    }
    relations.sort();
    Ok((relations.len(), relations))
}

/// Enumerate the Poincare-Dulac resonances `lambda_j = lambda^alpha` with
/// `sum alpha >= 2`; an empty list means the contraction germ is formally
/// linearizable.
pub fn poincare_dulac_resonances(lambdas: &[Eigenvalue]) -> Result<Vec<PoincareDulac>> {
    let list = EigList::new(lambdas)?;
    let n = list.len();
    let weights: Vec<f64> = (0..n).map(|m| list.neg_log_modulus(m)).collect();
    let mut relations = Vec::new();
    for j in 0..n {
        for_each_alpha(&weights, weights[j], &mut |alpha| {
            let total: u32 = alpha.iter().sum();
            if total >= 2 && list.relation_holds(j, alpha) {
                relations.push(PoincareDulac { j: j + 1, alpha: alpha.to_vec() });
            }
        });
    }
    relations.sort();
    Ok(relations)
}

/// Serialized form of one spectrum entry.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumEntry {
    pub root: Root,
    /// `mu = [re, im]` as exact rational strings.
    pub mu: [String; 2],
    /// `|lambda| = exp(Re mu)`, approximate.
    pub modulus_approx: f64,
}

/// Full classification report for one parabolic model and Cartan element.
#[derive(Debug, Clone, Serialize)]
pub struct HopfReport {
    pub model: String,
    pub sigma: Vec<[String; 2]>,
    pub strictly_contracting: bool,
    pub spectrum: Vec<SpectrumEntry>,
    pub additive_relations: Vec<AdditiveRootRelation>,
    /// Cartan spectra satisfy every additive relation by linearity; recorded
    /// as a consistency check.
    pub spectrum_satisfies_relations: bool,
    pub moduli_count: Option<usize>,
    pub moduli_relations: Option<Vec<ConnectionModuli>>,
    pub poincare_dulac: Option<Vec<PoincareDulac>>,
    pub formally_linearizable: Option<bool>,
    /// A strictly contracting element yields a Hopf quotient carrying a flat
    /// geometry of this model.
    pub flat_parabolic_geometry_exists: bool,
    /// True exactly when no additive relations constrain the eigenvalues:
    /// the unconstrained (projective-model) case.
    pub generic_admissibility: bool,
}

/// Classify the Hopf structures of one parabolic model under a Cartan
/// element. Requires an effective model with nonempty `Delta^+_P`.
pub fn hopf_report(pd: &ParabolicData, sigma: &ContractionSigma) -> Result<HopfReport> {
    let rs = pd.root_system();
    let mut component_has_noncompact = vec![false; rs.num_components()];
    for &idx in pd.noncompact_pos() {
        component_has_noncompact[rs.root_component(rs.root(idx))] = true;
    }
    if let Some(component) = component_has_noncompact.iter().position(|&b| !b) {
        return Err(Error::NotEffective { component });
    }
    if pd.noncompact_pos().is_empty() {
        return Err(Error::DegenerateParabolic);
    }

    let spectrum = contraction_spectrum(pd, sigma)?;
    let strict = spectrum.strictly_contracting();
    let relations = additive_relations(pd, 2)?;
    let satisfies = relations.iter().all(|r| spectrum.satisfies(r));

    let (moduli_count, moduli_relations, pd_resonances, linearizable) = if strict {
        let eigs = spectrum.eigenvalues();
        let (count, rels) = affine_moduli_dimension(&eigs)?;
        let pdr = poincare_dulac_resonances(&eigs)?;
        let lin = pdr.is_empty();
        (Some(count), Some(rels), Some(pdr), Some(lin))
    } else {
        (None, None, None, None)
    };

    Ok(HopfReport {
        model: pd.fingerprint(),
        sigma: sigma
            .coeffs
            .iter()
            .map(|c| [rat_str(&c.re), rat_str(&c.im)])
            .collect(),
        strictly_contracting: strict,
        spectrum: spectrum
            .entries()
            .iter()
            .map(|(root, mu)| SpectrumEntry {
                root: root.clone(),
                mu: [rat_str(&mu.re), rat_str(&mu.im)],
                modulus_approx: rat_to_f64(&mu.re).exp(),
            })
            .collect(),
        generic_admissibility: relations.is_empty(),
        additive_relations: relations,
        spectrum_satisfies_relations: satisfies,
        moduli_count,
        moduli_relations,
        poincare_dulac: pd_resonances,
        formally_linearizable: linearizable,
        flat_parabolic_geometry_exists: strict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::build_parabolic;
    use crate::rat::ratio;
    use crate::rootsys::{DynkinSpec, RootSystem};
    use std::sync::Arc;

    fn parabolic(s: &str, crossed: &[usize]) -> ParabolicData {
        let rs = Arc::new(RootSystem::build(DynkinSpec::parse(s).unwrap()).unwrap());
        build_parabolic(rs, crossed).unwrap()
    }

    fn polar(m: Rat) -> Eigenvalue {
        Eigenvalue::ExactPolar { modulus: m, turns: Rat::zero() }
    }

    #[test]
    fn spectrum_linearity_a2_borel() {
        let pd = parabolic("A2", &[1, 2]);
        // <alpha_1, sigma> = <alpha_2, sigma> = 1 for sigma = -delta
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let spec = contraction_spectrum(&pd, &sigma).unwrap();
        let mu = |c: Vec<i64>| spec.mu(&Root(c)).unwrap().clone();
        assert_eq!(mu(vec![1, 0]), CRat::from_rat(rat(-1)));
        assert_eq!(mu(vec![0, 1]), CRat::from_rat(rat(-1)));
        assert_eq!(mu(vec![1, 1]), CRat::from_rat(rat(-2)));
        assert!(spec.strictly_contracting());
    }

    #[test]
    fn zero_sigma_not_contracting() {
        let pd = parabolic("A2", &[1, 2]);
        let sigma = ContractionSigma::from_rational(vec![Rat::zero(), Rat::zero()]);
        let spec = contraction_spectrum(&pd, &sigma).unwrap();
        assert!(!spec.strictly_contracting());
        assert!(spec.entries().iter().all(|(_, m)| m.is_zero()));
    }

    #[test]
    fn spectrum_indexing_respects_partition() {
        let pd = parabolic("A2", &[1]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let spec = contraction_spectrum(&pd, &sigma).unwrap();
        let roots: Vec<&Root> = spec.entries().iter().map(|(r, _)| r).collect();
        assert_eq!(roots, vec![&Root(vec![1, 0]), &Root(vec![1, 1])]);
        // <alpha_1, -delta> = 3/2 on both noncompact positives
        assert_eq!(spec.mu(&Root(vec![1, 0])).unwrap(), &CRat::from_rat(ratio(-3, 2)));
        assert_eq!(spec.mu(&Root(vec![1, 1])).unwrap(), &CRat::from_rat(ratio(-3, 2)));
    }

    #[test]
    fn canonical_sigma_examples() {
        let pd = parabolic("A2", &[1, 2]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        assert_eq!(
            sigma,
            ContractionSigma::from_rational(vec![rat(1), rat(1)])
        );

        // compact pairing vanishes for the point stabilizer
        let pd = parabolic("A2", &[1]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let coeffs: Vec<Rat> = sigma.coeffs.iter().map(|c| c.re.clone()).collect();
        let rs = pd.root_system();
        let alpha2 = rs.root_weight(&Root(vec![0, 1]));
        assert_eq!(rs.inner_product(&coeffs, &alpha2).unwrap(), rat(0));

        // B2 Borel: all four pairings positive
        let pd = parabolic("B2", &[1, 2]);
        assert!(canonical_contracting_sigma(&pd).is_ok());

        let pd = parabolic("A2", &[]);
        assert!(matches!(canonical_contracting_sigma(&pd), Err(Error::DegenerateParabolic)));
    }

    #[test]
    fn additive_relations_examples() {
        let pd = parabolic("A2", &[1, 2]);
        let rels = additive_relations(&pd, 2).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].lhs, vec![Root(vec![1, 1])]);
        assert_eq!(rels[0].rhs, vec![Root(vec![0, 1]), Root(vec![1, 0])]);

        // single noncompact positive root: nothing to relate
        let pd = parabolic("A1", &[1]);
        assert!(additive_relations(&pd, 2).unwrap().is_empty());

        // Grassmannian Gr(2,4): the Plucker relation
        let pd = parabolic("A3", &[2]);
        let rels = additive_relations(&pd, 2).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].lhs, vec![Root(vec![0, 1, 0]), Root(vec![1, 1, 1])]);
        assert_eq!(rels[0].rhs, vec![Root(vec![0, 1, 1]), Root(vec![1, 1, 0])]);

        assert!(matches!(additive_relations(&pd, 1), Err(Error::MaxTermsTooSmall(1))));
    }

    #[test]
    fn projective_model_has_no_relations() {
        for s in ["A2", "A3", "A4"] {
            let pd = parabolic(s, &[1]);
            assert!(additive_relations(&pd, 2).unwrap().is_empty(), "{s}");
        }
    }

    #[test]
    fn moduli_dimension_examples() {
        let (count, rels) =
            affine_moduli_dimension(&[polar(ratio(1, 2)), polar(ratio(1, 4))]).unwrap();
        assert_eq!(count, 1);
        assert_eq!(rels, vec![ConnectionModuli { i: 2, j: 1, k: 1, alpha: vec![0, 0] }]);

        let (count, rels) =
            affine_moduli_dimension(&[polar(ratio(1, 2)), polar(ratio(1, 2))]).unwrap();
        assert_eq!(count, 0);
        assert!(rels.is_empty());

        let (count, rels) =
            affine_moduli_dimension(&[polar(ratio(1, 2)), polar(ratio(1, 8))]).unwrap();
        assert_eq!(count, 1);
        assert_eq!(rels, vec![ConnectionModuli { i: 2, j: 1, k: 1, alpha: vec![1, 0] }]);
    }

    #[test]
    fn poincare_dulac_examples() {
        let rels =
            poincare_dulac_resonances(&[polar(ratio(1, 2)), polar(ratio(1, 4))]).unwrap();
        assert_eq!(rels, vec![PoincareDulac { j: 2, alpha: vec![2, 0] }]);

        let rels =
            poincare_dulac_resonances(&[polar(ratio(1, 2)), polar(ratio(1, 3))]).unwrap();
        assert!(rels.is_empty());

        let rels = poincare_dulac_resonances(&[
            polar(ratio(1, 2)),
            polar(ratio(1, 4)),
            polar(ratio(1, 8)),
        ])
        .unwrap();
        assert_eq!(
            rels,
            vec![
                PoincareDulac { j: 2, alpha: vec![2, 0, 0] },
                PoincareDulac { j: 3, alpha: vec![1, 1, 0] },
                PoincareDulac { j: 3, alpha: vec![3, 0, 0] },
            ]
        );
    }

    #[test]
    fn rejects_bad_eigenvalues() {
        assert!(matches!(
            affine_moduli_dimension(&[polar(rat(1))]),
            Err(Error::NotContracting { index: 1 })
        ));
        assert!(matches!(
            poincare_dulac_resonances(&[polar(ratio(1, 2)), polar(rat(0))]),
            Err(Error::ZeroEigenvalue { index: 2 })
        ));
        assert!(matches!(
            affine_moduli_dimension(&[Eigenvalue::Float { re: 0.0, im: 0.0 }]),
            Err(Error::ZeroEigenvalue { index: 1 })
        ));
        assert!(matches!(
            affine_moduli_dimension(&[Eigenvalue::Float { re: 0.8, im: 0.8 }]),
            Err(Error::NotContracting { index: 1 })
        ));
    }

    #[test]
    fn float_path_matches_exact_on_known_cases() {
        let f = |x: f64| Eigenvalue::Float { re: x, im: 0.0 };
        let (count, rels) = affine_moduli_dimension(&[f(0.5), f(0.25)]).unwrap();
        assert_eq!(count, 1);
        assert_eq!(rels[0], ConnectionModuli { i: 2, j: 1, k: 1, alpha: vec![0, 0] });
        let rels = poincare_dulac_resonances(&[f(0.5), f(0.25)]).unwrap();
        assert_eq!(rels, vec![PoincareDulac { j: 2, alpha: vec![2, 0] }]);
    }

    #[test]
    fn complex_turns_participate_exactly() {
        // lambda_1 = (1/2) e^{i pi/2}, lambda_2 = (1/4) e^{i pi}:
        // lambda_2 = lambda_1^2 exactly
        let rels = poincare_dulac_resonances(&[
            Eigenvalue::ExactPolar { modulus: ratio(1, 2), turns: ratio(1, 4) },
            Eigenvalue::ExactPolar { modulus: ratio(1, 4), turns: ratio(1, 2) },
        ])
        .unwrap();
        assert_eq!(rels, vec![PoincareDulac { j: 2, alpha: vec![2, 0] }]);

        // breaking the argument kills the resonance
        let rels = poincare_dulac_resonances(&[
            Eigenvalue::ExactPolar { modulus: ratio(1, 2), turns: ratio(1, 4) },
            Eigenvalue::ExactPolar { modulus: ratio(1, 4), turns: ratio(1, 3) },
        ])
        .unwrap();
        assert!(rels.is_empty());
    }

    #[test]
    fn prime_moduli_give_empty_resonances() {
        let eigs = [polar(ratio(1, 2)), polar(ratio(1, 3)), polar(ratio(1, 5))];
        let (count, _) = affine_moduli_dimension(&eigs).unwrap();
        assert_eq!(count, 0);
        assert!(poincare_dulac_resonances(&eigs).unwrap().is_empty());
    }

    #[test]
    fn permutation_equivariance() {
        let eigs = [polar(ratio(1, 2)), polar(ratio(1, 4)), polar(ratio(1, 5))];
        let permuted = [polar(ratio(1, 4)), polar(ratio(1, 5)), polar(ratio(1, 2))];
        // permutation sending old index 1 -> 3, 2 -> 1, 3 -> 2
        let p = |i: usize| match i {
            1 => 3,
            2 => 1,
            _ => 2,
        };
        let (_, rels) = affine_moduli_dimension(&eigs).unwrap();
        let (_, rels_p) = affine_moduli_dimension(&permuted).unwrap();
        let mut mapped: Vec<ConnectionModuli> = rels
            .iter()
            .map(|r| {
                let mut alpha = vec![0u32; 3];
                for (m, &e) in r.alpha.iter().enumerate() {
                    alpha[p(m + 1) - 1] = e;
                }
                ConnectionModuli { i: p(r.i), j: p(r.j), k: p(r.k), alpha }
            })
            .collect();
        mapped.sort();
        assert_eq!(mapped, rels_p);
    }

    #[test]
    fn mu_additivity_invariant() {
        for (s, crossed) in [("A2", vec![1, 2]), ("B3", vec![1, 2, 3]), ("G2", vec![1, 2])] {
            let pd = parabolic(s, &crossed);
            let sigma = canonical_contracting_sigma(&pd).unwrap();
            let spec = contraction_spectrum(&pd, &sigma).unwrap();
            let rs = pd.root_system().clone();
            for &b in pd.noncompact_pos() {
                for &g in pd.noncompact_pos() {
                    if let Some(sum) = rs.root_sum(rs.root(b), rs.root(g)) {
                        let mb = spec.mu(rs.root(b)).unwrap().clone();
                        let mg = spec.mu(rs.root(g)).unwrap().clone();
                        let ms = spec.mu(rs.root(sum)).unwrap().clone();
                        assert_eq!(mb + mg, ms, "{s}");
                    }
                }
            }
            for rel in additive_relations(&pd, 3).unwrap() {
                assert!(spec.satisfies(&rel), "{s}: {rel:?}");
            }
        }
    }

    #[test]
    fn hopf_report_examples() {
        let pd = parabolic("A2", &[1, 2]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let report = hopf_report(&pd, &sigma).unwrap();
        assert!(report.strictly_contracting);
        assert!(report.flat_parabolic_geometry_exists);
        assert!(!report.generic_admissibility);
        assert!(report.spectrum_satisfies_relations);
        let moduli: Vec<f64> =
            report.spectrum.iter().map(|e| e.modulus_approx).collect();
        assert!((moduli[0] - (-1.0f64).exp()).abs() < 1e-12);
        assert!((moduli[2] - (-2.0f64).exp()).abs() < 1e-12);

        // point stabilizer: unconstrained
        let pd = parabolic("A2", &[1]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let report = hopf_report(&pd, &sigma).unwrap();
        assert!(report.generic_admissibility);
        assert!(report.additive_relations.is_empty());

        // Grassmannian: constrained
        let pd = parabolic("A3", &[2]);
        let sigma = canonical_contracting_sigma(&pd).unwrap();
        let report = hopf_report(&pd, &sigma).unwrap();
        assert!(!report.generic_admissibility);

        // non-effective model rejected
        let pd = parabolic("A1xA1", &[1]);
        let sigma = ContractionSigma::from_rational(vec![rat(1), rat(0)]);
        assert!(matches!(hopf_report(&pd, &sigma), Err(Error::NotEffective { component: 1 })));
    }

    #[test]
    fn parse_polar_forms() {
        let e = Eigenvalue::parse_polar("1/2∠90").unwrap();
        assert_eq!(e, Eigenvalue::ExactPolar { modulus: ratio(1, 2), turns: ratio(1, 4) });
        let e = Eigenvalue::parse_polar("0.25∠-30").unwrap();
        assert_eq!(e, Eigenvalue::ExactPolar { modulus: ratio(1, 4), turns: ratio(-1, 12) });
        assert!(Eigenvalue::parse_polar("0.5").is_err());
        assert!(Eigenvalue::parse_polar("x∠30").is_err());
        assert!(Eigenvalue::parse_polar("-1/2∠0").is_err());
        assert!(Eigenvalue::parse_polar("0∠0").is_err());
    }
}
