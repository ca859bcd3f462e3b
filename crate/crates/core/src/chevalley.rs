//! Chevalley bases with integer structure constants.
//!
//! The basis is `X_alpha` for each root plus `H_{alpha_i}` for each simple
//! root, with brackets
//!
//! ```text
//! [H, X_alpha]      = alpha(H) X_alpha
//! [H_alpha, H_beta] = 0
//! [X_alpha, X_beta] = H_alpha                          if alpha + beta = 0
//!                   = N_{alpha,beta} X_{alpha+beta}    otherwise
//! ```
//!
//! with `N_{alpha,beta}` integers satisfying `N_{-alpha,-beta} =
//! -N_{alpha,beta}` and `|N_{alpha,beta}| = p + 1`, where `p` is the largest
//! integer for which `beta - p alpha` is a root.
//!
//! Signs are pinned by the extraspecial-pair convention: positive roots are
//! totally ordered by (height, lexicographic coordinates); for each
//! non-simple positive root `gamma` the special pair `(alpha, beta)`,
//! `alpha < beta`, `alpha + beta = gamma` with `alpha` minimal is assigned
//! `N_{alpha,beta} = +(p+1)`, and every other constant is forced from these
//! by the Jacobi and antisymmetry relations. Repeated builds are identical.

use crate::rat::{rat, rat_str, Rat};
use crate::rootsys::{Root, RootSystem};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// A basis vector of the algebra: a root vector or a simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    RootVector(Root),
    /// Coroot of the i-th simple root, 0-based.
    Coroot(usize),
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::RootVector(r) => write!(f, "X{r}"),
            BasisIndex::Coroot(i) => write!(f, "H{}", i + 1),
        }
    }
}

/// A finitely supported element over the Chevalley basis, tagged with the
/// fingerprint of the algebra it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    fingerprint: String,
    coeffs: BTreeMap<usize, Rat>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients over flat basis indices, sparse and sorted.
    pub fn coeffs(&self) -> &BTreeMap<usize, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, idx: usize) -> Rat {
        self.coeffs.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.fingerprint != other.fingerprint {
            return Err(Error::MixedAlgebra {
                left: self.fingerprint.clone(),
                right: other.fingerprint.clone(),
            });
        }
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(Rat::zero);
            *entry += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(AlgebraElement { fingerprint: self.fingerprint.clone(), coeffs })
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement {
                fingerprint: self.fingerprint.clone(),
                coeffs: BTreeMap::new(),
            };
        }
        AlgebraElement {
            fingerprint: self.fingerprint.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&rat(-1))
    }
}

/// Report of the defining axioms, one boolean per axiom. Failures are listed
/// rather than raised.
#[derive(Debug, Clone, Serialize)]
pub struct ChevalleyAxiomReport {
    pub spec: String,
    pub integrality: bool,
    pub antisymmetry: bool,
    pub n_magnitude: bool,
    pub jacobi: bool,
    pub killing_proportional: bool,
    /// One proportionality constant per simple component, as exact rationals.
    pub killing_constants: Vec<String>,
    pub failures: Vec<String>,
}

impl ChevalleyAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.integrality
            && self.antisymmetry
            && self.n_magnitude
            && self.jacobi
            && self.killing_proportional
    }
}

/// The semisimple Lie algebra of a root system in a Chevalley basis.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: Arc<RootSystem>,
    /// Structure constants for every ordered pair of roots whose sum is a
    /// root.
    n_table: HashMap<(usize, usize), i64>,
    /// Integer expansion of `H_alpha` over the simple coroots, per root.
    coroot_coords: Vec<Vec<i64>>,
    /// `pairing[a][i] = alpha(H_{alpha_i}) = 2<alpha,alpha_i>/<alpha_i,alpha_i>`.
    pairing: Vec<Vec<i64>>,
    /// Brackets of basis pairs, sparse with integer coefficients.
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

/// Resolve `N_{x,y}` from the positive special-pair table, as a rational.
///
/// Zero when `x`, `y` or `x+y` is not a root or `x + y = 0`. Mixed-sign pairs
/// reduce to positive pairs through the identity
/// `N_{ab}/<c,c> = N_{bc}/<a,a> = N_{ca}/<b,b>` for roots with `a + b + c = 0`.
fn n_lookup(rs: &RootSystem, pos_table: &HashMap<(usize, usize), i64>, x: &Root, y: &Root) -> Rat {
    let sum = Root(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect());
    if sum.0.iter().all(|&c| c == 0) {
        return Rat::zero();
    }
    if rs.root_index(x).is_none() || rs.root_index(y).is_none() || rs.root_index(&sum).is_none() {
        return Rat::zero();
    }
    match (x.is_positive(), y.is_positive()) {
        (true, true) => {
            let a = rs.root_index(x).unwrap();
            let b = rs.root_index(y).unwrap();
            let v = if a < b {
                pos_table.get(&(a, b)).copied().expect("positive pair computed")
            } else {
                -pos_table.get(&(b, a)).copied().expect("positive pair computed")
            };
            rat(v)
        }
        (false, false) => -n_lookup(rs, pos_table, &x.negated(), &y.negated()),
        (true, false) => {
            if sum.is_positive() {
                // (x, y, -sum) sum to zero; reduce onto the pair (-y, sum)
                let zeta = sum;
                let scale = rs.root_pairing(&zeta, &zeta) / rs.root_pairing(x, x);
                -scale * n_lookup(rs, pos_table, &y.negated(), &zeta)
            } else {
                // (x, y, zeta) sum to zero; reduce onto the pair (zeta, x)
                let zeta = sum.negated();
                let scale = rs.root_pairing(&zeta, &zeta) / rs.root_pairing(y, y);
                scale * n_lookup(rs, pos_table, &zeta, x)
            }
        }
        (false, true) => -n_lookup(rs, pos_table, y, x),
    }
}

impl ChevalleyAlgebra {
    /// Build the Chevalley basis of `rs` with the extraspecial-pair sign
    /// convention. Deterministic: repeated builds produce identical tables.
    pub fn build(rs: Arc<RootSystem>) -> ChevalleyAlgebra {
        let npos = rs.num_positive();
        let mut pos_table: HashMap<(usize, usize), i64> = HashMap::new();

        // Special pairs grouped by their sum; positive roots are
        // index-ordered by (height, lex) already.
        let mut specials_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); npos];
        for a in 0..npos {
            for b in (a + 1)..npos {
                if let Some(s) = rs.root_sum(rs.root(a), rs.root(b)) {
                    if s < npos {
                        specials_of[s].push((a, b));
                    }
                }
            }
        }

        for gamma in 0..npos {
            let pairs = specials_of[gamma].clone();
            if pairs.is_empty() {
                continue;
            }
            // Extraspecial pair: minimal first member in the total order.
            let &(a0, b0) = pairs.iter().min_by_key(|&&(a, _)| a).unwrap();
            let (p, _) = rs.root_string(rs.root(a0), rs.root(b0)).expect("special pair roots");
            pos_table.insert((a0, b0), i64::from(p) + 1);
            let alpha_x = rs.root(a0).clone();
            let beta_x = rs.root(b0).clone();
            let n_extra = rat(i64::from(p) + 1);
            let gamma_len = rs.root_pairing(rs.root(gamma), rs.root(gamma));

            for &(a, b) in &pairs {
                if (a, b) == (a0, b0) {
                    continue;
                }
                let alpha = rs.root(a).clone();
                let beta = rs.root(b).clone();
                // Four-root identity on (-alpha', alpha, beta, -beta'):
                //   N_{alpha,beta} N_{alpha',beta'} / <g,g>
                //     = N_{-alpha',alpha} N_{beta,-beta'} / <a-a',a-a'>
                //     + N_{beta,-alpha'} N_{alpha,-beta'} / <b-a',b-a'>
                let mut total = Rat::zero();
                let diff_a = Root(alpha.0.iter().zip(&alpha_x.0).map(|(u, v)| u - v).collect());
                if rs.root_index(&diff_a).is_some() {
                    let len = rs.root_pairing(&diff_a, &diff_a);
                    total += n_lookup(&rs, &pos_table, &alpha_x.negated(), &alpha)
                        * n_lookup(&rs, &pos_table, &beta, &beta_x.negated())
                        / len;
                }
                let diff_b = Root(beta.0.iter().zip(&alpha_x.0).map(|(u, v)| u - v).collect());
                if rs.root_index(&diff_b).is_some() {
                    let len = rs.root_pairing(&diff_b, &diff_b);
                    total += n_lookup(&rs, &pos_table, &beta, &alpha_x.negated())
                        * n_lookup(&rs, &pos_table, &alpha, &beta_x.negated())
                        / len;
                }
                let value = total * &gamma_len / &n_extra;
                assert!(value.is_integer(), "propagated structure constant must be integral");
                let v = i64::try_from(&value.to_integer()).expect("structure constant fits i64");
                let (sp, _) = rs.root_string(&alpha, &beta).expect("special pair roots");
                assert_eq!(v.unsigned_abs(), u64::from(sp) + 1, "|N| = p+1 must hold");
                pos_table.insert((a, b), v);
            }
        }

        // Complete the table over all ordered root pairs with root sum.
        let nroots = rs.num_roots();
        let mut n_table = HashMap::new();
        for a in 0..nroots {
            for b in 0..nroots {
                if b == rs.negation_index(a) {
                    continue;
                }
                if rs.root_sum(rs.root(a), rs.root(b)).is_some() {
                    let v = n_lookup(&rs, &pos_table, rs.root(a), rs.root(b));
                    assert!(v.is_integer(), "structure constant must be integral");
                    let v = i64::try_from(&v.to_integer()).expect("structure constant fits i64");
                    n_table.insert((a, b), v);
                }
            }
        }

        // Coroot expansions: H_alpha = sum_i m_i (d_i / d_alpha) H_{alpha_i}.
        let rank = rs.rank();
        let mut coroot_coords = Vec::with_capacity(nroots);
        for a in 0..nroots {
            let alpha = rs.root(a);
            let d_alpha = rs.root_pairing(alpha, alpha) / rat(2);
            let mut coords = Vec::with_capacity(rank);
            for (i, &m) in alpha.0.iter().enumerate() {
                let d_i = &rs.gram()[i][i] / rat(2);
                let c = rat(m) * d_i / &d_alpha;
                assert!(c.is_integer(), "coroot coordinates must be integral");
                coords.push(i64::try_from(&c.to_integer()).expect("coroot coordinate fits i64"));
            }
            coroot_coords.push(coords);
        }

        // alpha(H_{alpha_i}) as integers.
        let mut pairing = Vec::with_capacity(nroots);
        for a in 0..nroots {
            let alpha = rs.root(a);
            let row: Vec<i64> = (0..rank)
                .map(|i| {
                    alpha
                        .0
                        .iter()
                        .enumerate()
                        .map(|(k, &m)| m * rs.cartan_matrix()[k][i])
                        .sum()
                })
                .collect();
            pairing.push(row);
        }

        // Dense table of sparse basis brackets.
        let dim = nroots + rank;
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for a in 0..nroots {
            for b in 0..nroots {
                if b == rs.negation_index(a) {
                    table[a][b] = coroot_coords[a]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (nroots + i, c))
                        .collect();
                } else if let Some(s) = rs.root_sum(rs.root(a), rs.root(b)) {
                    table[a][b] = vec![(s, n_table[&(a, b)])];
                }
            }
        }
        for a in 0..nroots {
            for i in 0..rank {
                let c = pairing[a][i];
                if c != 0 {
                    table[a][nroots + i] = vec![(a, -c)];
                    table[nroots + i][a] = vec![(a, c)];
                }
            }
        }

        ChevalleyAlgebra { rs, n_table, coroot_coords, pairing, table }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn fingerprint(&self) -> String {
        self.rs.fingerprint()
    }

    /// Total dimension `|roots| + rank`.
    pub fn dim(&self) -> usize {
        self.rs.num_roots() + self.rs.rank()
    }

    /// Basis layout: root vectors in root order (positives by (height, lex),
    /// then mirrored negatives), then simple coroots.
    pub fn basis_index(&self, flat: usize) -> BasisIndex {
        let nroots = self.rs.num_roots();
        if flat < nroots {
            BasisIndex::RootVector(self.rs.root(flat).clone())
        } else {
            BasisIndex::Coroot(flat - nroots)
        }
    }

    pub fn flat_index(&self, idx: &BasisIndex) -> Result<usize> {
        match idx {
            BasisIndex::RootVector(r) => {
                self.rs.root_index(r).ok_or_else(|| Error::NotARoot(r.0.clone()))
            }
            BasisIndex::Coroot(i) => {
                if *i < self.rs.rank() {
                    Ok(self.rs.num_roots() + i)
                } else {
                    Err(Error::DimensionMismatch { expected: self.rs.rank(), got: *i })
                }
            }
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { fingerprint: self.fingerprint(), coeffs: BTreeMap::new() }
    }

    pub fn basis_element(&self, flat: usize) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(flat, rat(1));
        AlgebraElement { fingerprint: self.fingerprint(), coeffs }
    }

    /// The root vector `X_alpha`.
    pub fn root_vector(&self, alpha: &Root) -> Result<AlgebraElement> {
        let idx = self.rs.root_index(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        Ok(self.basis_element(idx))
    }

    /// The simple coroot `H_{alpha_i}` (0-based node index).
    pub fn simple_coroot(&self, i: usize) -> AlgebraElement {
        self.basis_element(self.rs.num_roots() + i)
    }

    /// The coroot `H_alpha` of an arbitrary root, expanded over simple
    /// coroots.
    pub fn coroot(&self, alpha: &Root) -> Result<AlgebraElement> {
        let idx = self.rs.root_index(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        let nroots = self.rs.num_roots();
        let coeffs = self.coroot_coords[idx]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (nroots + i, rat(c)))
            .collect();
        Ok(AlgebraElement { fingerprint: self.fingerprint(), coeffs })
    }

    /// Integer expansion of `H_alpha` over simple coroots.
    pub fn coroot_coordinates(&self, alpha: &Root) -> Result<&[i64]> {
        let idx = self.rs.root_index(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        Ok(&self.coroot_coords[idx])
    }

    /// `N_{alpha,beta}`, present exactly when `alpha + beta` is a root.
    pub fn n_constant(&self, alpha: &Root, beta: &Root) -> Option<i64> {
        let a = self.rs.root_index(alpha)?;
        let b = self.rs.root_index(beta)?;
        self.n_table.get(&(a, b)).copied()
    }

    /// All `(alpha, beta, N)` entries, sorted by root index: deterministic,
    /// suitable for golden files.
    pub fn n_table_entries(&self) -> Vec<(Root, Root, i64)> {
        let mut keys: Vec<(usize, usize)> = self.n_table.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|(a, b)| (self.rs.root(a).clone(), self.rs.root(b).clone(), self.n_table[&(a, b)]))
            .collect()
    }

    /// Sparse bracket of two basis vectors with integer coefficients.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    /// `alpha(H_{alpha_i})` for the root with index `a`.
    pub fn root_coroot_pairing(&self, a: usize, i: usize) -> i64 {
        self.pairing[a][i]
    }

    fn check_same(&self, e: &AlgebraElement) -> Result<()> {
        if e.fingerprint != self.fingerprint() {
            return Err(Error::MixedAlgebra {
                left: self.fingerprint(),
                right: e.fingerprint.clone(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the basis bracket.
    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(a)?;
        self.check_same(b)?;
        let mut coeffs: BTreeMap<usize, Rat> = BTreeMap::new();
        for (&i, ci) in &a.coeffs {
            for (&j, cj) in &b.coeffs {
                let scale = ci * cj;
                for &(k, n) in &self.table[i][j] {
                    let entry = coeffs.entry(k).or_insert_with(Rat::zero);
                    *entry += &scale * rat(n);
                }
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(AlgebraElement { fingerprint: self.fingerprint(), coeffs })
    }

    /// Matrix of `x -> [a, x]` in the basis ordering (roots, then coroots);
    /// entry `(r, c)` is the `e_r`-coefficient of `[a, e_c]`.
    pub fn adjoint_matrix(&self, a: &AlgebraElement) -> Result<Vec<Vec<Rat>>> {
        self.check_same(a)?;
        let dim = self.dim();
        let mut m = vec![vec![Rat::zero(); dim]; dim];
        for c in 0..dim {
            for (&i, ci) in &a.coeffs {
                for &(r, n) in &self.table[i][c] {
                    m[r][c] += ci * rat(n);
                }
            }
        }
        Ok(m)
    }

    /// Killing form `tr(ad a . ad b)`, exact.
    pub fn killing_form(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<Rat> {
        self.check_same(a)?;
        self.check_same(b)?;
        let dim = self.dim();
        let mut trace = Rat::zero();
        for c in 0..dim {
            // [b, e_c], then the e_c-coefficient of [a, [b, e_c]]
            let mut mid: Vec<(usize, Rat)> = Vec::new();
            for (&j, cj) in &b.coeffs {
                for &(k, n) in &self.table[j][c] {
                    mid.push((k, cj * rat(n)));
                }
            }
            for (k, ck) in mid {
                for (&i, ci) in &a.coeffs {
                    for &(r, n) in &self.table[i][k] {
                        if r == c {
                            trace += ci * &ck * rat(n);
                        }
                    }
                }
            }
        }
        Ok(trace)
    }

    /// Killing pairing of simple coroots, computed from the weight grading:
    /// `kappa(H_i, H_j) = sum_alpha alpha(H_i) alpha(H_j)`.
    pub fn killing_coroot_entry(&self, i: usize, j: usize) -> i64 {
        (0..self.rs.num_roots()).map(|a| self.pairing[a][i] * self.pairing[a][j]).sum()
    }

    /// Exhaustive Jacobi check over all ordered basis triples, in integer
    /// arithmetic.
    pub fn jacobi_holds(&self) -> bool {
        jacobi_holds_for_table(&self.table)
    }

    /// Check every defining axiom; failures become report entries.
    pub fn verify_axioms(&self) -> ChevalleyAxiomReport {
        let rs = &self.rs;
        let mut failures = Vec::new();

        // Integrality: recompute every constant by the rational reduction
        // rules and compare with the stored integers.
        let mut pos_table = HashMap::new();
        for (&(a, b), &v) in &self.n_table {
            if a < b && rs.root(a).is_positive() && rs.root(b).is_positive() {
                pos_table.insert((a, b), v);
            }
        }
        let mut integrality = true;
        for (&(a, b), &v) in &self.n_table {
            let q = n_lookup(rs, &pos_table, rs.root(a), rs.root(b));
            if !q.is_integer() || q != rat(v) {
                integrality = false;
                failures.push(format!(
                    "integrality: N({}, {}) stored {} but recomputed {}",
                    rs.root(a),
                    rs.root(b),
                    v,
                    rat_str(&q)
                ));
            }
        }

        // N_{beta,alpha} = -N_{alpha,beta} and N_{-alpha,-beta} = -N_{alpha,beta}
        let mut antisymmetry = true;
        for (&(a, b), &v) in &self.n_table {
            let swapped = self.n_table.get(&(b, a)).copied();
            let negated =
                self.n_table.get(&(rs.negation_index(a), rs.negation_index(b))).copied();
            if swapped != Some(-v) || negated != Some(-v) {
                antisymmetry = false;
                failures.push(format!(
                    "antisymmetry fails at N({}, {}) = {}",
                    rs.root(a),
                    rs.root(b),
                    v
                ));
            }
        }

        // |N| = p + 1 for every pair in the table.
        let mut n_magnitude = true;
        for (&(a, b), &v) in &self.n_table {
            let (p, _) = rs.root_string(rs.root(a), rs.root(b)).expect("table pair roots");
            if v.unsigned_abs() != u64::from(p) + 1 {
                n_magnitude = false;
                failures.push(format!(
                    "|N| = p+1 fails at N({}, {}) = {} with p = {}",
                    rs.root(a),
                    rs.root(b),
                    v,
                    p
                ));
            }
        }

        let jacobi = self.jacobi_holds();
        if !jacobi {
            failures.push("Jacobi identity fails on some basis triple".into());
        }

        // kappa(H_i, H_j) = c . <alpha_i^vee, alpha_j^vee> per simple
        // component, one positive constant each; this is the exact shadow of
        // proportionality between the normalized form and the Killing form.
        let mut killing_proportional = true;
        let mut killing_constants = Vec::new();
        let rank = rs.rank();
        let coroot_gram = |i: usize, j: usize| -> Rat {
            let gij = &rs.gram()[i][j];
            let gii = &rs.gram()[i][i];
            let gjj = &rs.gram()[j][j];
            rat(4) * gij / (gii * gjj)
        };
        for comp in 0..rs.num_components() {
            let nodes: Vec<usize> = (0..rank).filter(|&i| rs.node_component(i) == comp).collect();
            let i0 = nodes[0];
            let denom = coroot_gram(i0, i0);
            let c = rat(self.killing_coroot_entry(i0, i0)) / denom;
            if !c.is_positive() {
                killing_proportional = false;
                failures.push(format!("killing constant for component {comp} not positive"));
            }
            for &i in &nodes {
                for j in 0..rank {
                    let kappa = rat(self.killing_coroot_entry(i, j));
                    let expected = if rs.node_component(j) == comp {
                        &c * coroot_gram(i, j)
                    } else {
                        Rat::zero()
                    };
                    if kappa != expected {
                        killing_proportional = false;
                        failures.push(format!(
                            "killing proportionality fails at (H{}, H{})",
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
            killing_constants.push(rat_str(&c));
        }

        ChevalleyAxiomReport {
            spec: rs.fingerprint(),
            integrality,
            antisymmetry,
            n_magnitude,
            jacobi,
            killing_proportional,
            killing_constants,
            failures,
        }
    }
}

/// Exhaustive Jacobi check for a dense table of sparse integer brackets.
pub(crate) fn jacobi_holds_for_table(table: &[Vec<Vec<(usize, i64)>>]) -> bool {
    let dim = table.len();
    let mut scratch = vec![0i64; dim];
    let mut touched = Vec::new();
    let add = |first: &[(usize, i64)],
                   last: usize,
                   scratch: &mut [i64],
                   touched: &mut Vec<usize>| {
        for &(m, c) in first {
            for &(r, n) in &table[m][last] {
                if scratch[r] == 0 {
                    touched.push(r);
                }
                scratch[r] += c * n;
            }
        }
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                add(&table[i][j], k, &mut scratch, &mut touched);
                add(&table[j][k], i, &mut scratch, &mut touched);
                add(&table[k][i], j, &mut scratch, &mut touched);
                let mut ok = true;
                for &r in &touched {
                    if scratch[r] != 0 {
                        ok = false;
                    }
                    scratch[r] = 0;
                }
                touched.clear();
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinSpec;

    fn algebra(s: &str) -> ChevalleyAlgebra {
        let rs = RootSystem::build(DynkinSpec::parse(s).unwrap()).unwrap();
        ChevalleyAlgebra::build(Arc::new(rs))
    }

    #[test]
    fn a1_has_empty_n_table() {
        let alg = algebra("A1");
        assert!(alg.n_table_entries().is_empty());
        // alpha_1(H_{alpha_1}) = 2
        assert_eq!(alg.root_coroot_pairing(0, 0), 2);
    }

    #[test]
    fn a2_n_magnitude_one() {
        let alg = algebra("A2");
        let n = alg.n_constant(&Root(vec![1, 0]), &Root(vec![0, 1])).unwrap();
        assert_eq!(n.abs(), 1);
    }

    #[test]
    fn g2_n_magnitude_two() {
        let alg = algebra("G2");
        let n = alg.n_constant(&Root(vec![1, 0]), &Root(vec![1, 1])).unwrap();
        assert_eq!(n.abs(), 2);
    }

    #[test]
    fn bracket_examples() {
        let alg = algebra("A2");
        let a1 = Root(vec![1, 0]);
        let a2 = Root(vec![0, 1]);
        let x = alg.root_vector(&a1).unwrap();
        let y = alg.root_vector(&a1.negated()).unwrap();
        assert_eq!(alg.bracket(&x, &y).unwrap(), alg.coroot(&a1).unwrap());

        // [a, a] = 0 for a mixed element
        let a = x.add(&alg.simple_coroot(1).scale(&rat(3))).unwrap();
        assert!(alg.bracket(&a, &a).unwrap().is_zero());

        // [H_{alpha_1}, X_{alpha_2}] = -X_{alpha_2}
        let h1 = alg.simple_coroot(0);
        let x2 = alg.root_vector(&a2).unwrap();
        assert_eq!(alg.bracket(&h1, &x2).unwrap(), x2.neg());
    }

    #[test]
    fn bracket_rejects_mixed_algebras() {
        let a = algebra("A2");
        let b = algebra("B2");
        let x = a.root_vector(&Root(vec![1, 0])).unwrap();
        let y = b.root_vector(&Root(vec![1, 0])).unwrap();
        assert!(matches!(a.bracket(&x, &y), Err(Error::MixedAlgebra { .. })));
    }

    #[test]
    fn adjoint_examples() {
        let alg = algebra("A1");
        let h = alg.simple_coroot(0);
        let m = alg.adjoint_matrix(&h).unwrap();
        // diag(2, -2, 0) on (X_alpha, X_{-alpha}, H_alpha)
        assert_eq!(m[0][0], rat(2));
        assert_eq!(m[1][1], rat(-2));
        assert_eq!(m[2][2], rat(0));
        for r in 0..3 {
            for c in 0..3 {
                if r != c {
                    assert_eq!(m[r][c], rat(0));
                }
            }
        }

        let zero = alg.zero();
        let mz = alg.adjoint_matrix(&zero).unwrap();
        assert!(mz.iter().flatten().all(|q| q.is_zero()));
    }

    #[test]
    fn adjoint_nilpotent_in_a2() {
        let alg = algebra("A2");
        let x = alg.root_vector(&Root(vec![1, 0])).unwrap();
        let m = alg.adjoint_matrix(&x).unwrap();
        let dim = alg.dim();
        let mul = |a: &Vec<Vec<Rat>>, b: &Vec<Vec<Rat>>| -> Vec<Vec<Rat>> {
            let mut out = vec![vec![Rat::zero(); dim]; dim];
            for r in 0..dim {
                for k in 0..dim {
                    if a[r][k].is_zero() {
                        continue;
                    }
                    for c in 0..dim {
                        if !b[k][c].is_zero() {
                            let prod = &a[r][k] * &b[k][c];
                            out[r][c] += prod;
                        }
                    }
                }
            }
            out
        };
        let m2 = mul(&m, &m);
        let m4 = mul(&m2, &m2);
        assert!(m4.iter().flatten().all(|q| q.is_zero()), "(ad X)^4 = 0");
        assert!(!m2.iter().flatten().all(|q| q.is_zero()));
    }

    #[test]
    fn killing_examples() {
        let a1 = algebra("A1");
        let h = a1.simple_coroot(0);
        assert_eq!(a1.killing_form(&h, &h).unwrap(), rat(8));

        let a2 = algebra("A2");
        let h1 = a2.simple_coroot(0);
        assert_eq!(a2.killing_form(&h1, &h1).unwrap(), rat(12));

        // kappa(X_alpha, X_beta) = 0 whenever alpha + beta != 0
        let x1 = a2.root_vector(&Root(vec![1, 0])).unwrap();
        let x2 = a2.root_vector(&Root(vec![0, 1])).unwrap();
        let x12 = a2.root_vector(&Root(vec![1, 1])).unwrap();
        assert_eq!(a2.killing_form(&x1, &x2).unwrap(), rat(0));
        assert_eq!(a2.killing_form(&x1, &x12).unwrap(), rat(0));
        assert_eq!(a2.killing_form(&x1, &x1).unwrap(), rat(0));
        // and nonzero on an opposite pair
        let xneg = a2.root_vector(&Root(vec![-1, 0])).unwrap();
        assert!(!a2.killing_form(&x1, &xneg).unwrap().is_zero());
    }

    #[test]
    fn killing_trace_matches_weight_sum() {
        let alg = algebra("G2");
        for i in 0..2 {
            for j in 0..2 {
                let hi = alg.simple_coroot(i);
                let hj = alg.simple_coroot(j);
                assert_eq!(
                    alg.killing_form(&hi, &hj).unwrap(),
                    rat(alg.killing_coroot_entry(i, j))
                );
            }
        }
    }

    #[test]
    fn axiom_reports() {
        let a2 = algebra("A2");
        let rep = a2.verify_axioms();
        assert!(rep.all_pass(), "failures: {:?}", rep.failures);
        assert_eq!(rep.killing_constants, vec!["6".to_string()]);

        let g2 = algebra("G2");
        let rep = g2.verify_axioms();
        assert!(rep.all_pass(), "failures: {:?}", rep.failures);

        let prod = algebra("A1xA1");
        let rep = prod.verify_axioms();
        assert!(rep.all_pass(), "failures: {:?}", rep.failures);
        assert_eq!(rep.killing_constants.len(), 2);
        // cross-component killing entries vanish
        assert_eq!(prod.killing_coroot_entry(0, 1), 0);
    }

    #[test]
    fn deterministic_rebuild() {
        let a = algebra("B3");
        let b = algebra("B3");
        assert_eq!(a.n_table_entries(), b.n_table_entries());
    }

    #[test]
    fn axioms_across_more_types() {
        for s in ["A3", "B2", "C3", "D4"] {
            let rep = algebra(s).verify_axioms();
            assert!(rep.all_pass(), "{s} failures: {:?}", rep.failures);
        }
    }
}
