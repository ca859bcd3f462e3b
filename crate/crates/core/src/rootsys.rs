//! Finite root systems of semisimple type with exact rational inner products.
//!
//! Roots are stored as integer vectors in simple-root coordinates, so a root
//! is positive exactly when all coordinates are nonnegative. The invariant
//! inner product is the symmetrized Cartan matrix, normalized so that short
//! roots of each simple component have squared length 2. Product systems
//! concatenate coordinates; the gram matrix is block diagonal.

use crate::rat::{rat, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// Simple-component families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Number of roots of the simple system of this family and rank.
    pub fn root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G => 12,
            Family::F => 48,
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    fn check_rank(self, rank: usize) -> std::result::Result<(), String> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G => rank == 2,
            Family::F => rank == 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(())
        } else {
            Err(match self {
                Family::A => "rank must be >= 1".into(),
                Family::B | Family::C => "rank must be >= 2".into(),
                Family::D => "rank must be >= 3".into(),
                Family::G => "rank must be 2".into(),
                Family::F => "rank must be 4".into(),
                Family::E => "rank must be 6, 7 or 8".into(),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// An ordered product of simple Dynkin components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    components: Vec<(Family, usize)>,
}

impl DynkinSpec {
    /// Build a spec from components, enforcing the per-family rank ranges.
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidComponent {
                component: "(empty)".into(),
                msg: "at least one component required".into(),
            });
        }
        for &(fam, rank) in &components {
            fam.check_rank(rank).map_err(|msg| Error::InvalidComponent {
                component: format!("{fam}{rank}"),
                msg,
            })?;
        }
        Ok(DynkinSpec { components })
    }

    /// Parse the grammar `<FAMILY><RANK>("x"<FAMILY><RANK>)*`, e.g. `"A2"`,
    /// `"B3"`, `"A1xA1"`. Case-insensitive; whitespace is forbidden.
    pub fn parse(input: &str) -> Result<Self> {
        if let Some(pos) = input.find(|c: char| c.is_whitespace()) {
            return Err(Error::Parse {
                pos,
                token: input[pos..].chars().take(1).collect(),
                msg: "whitespace is forbidden in Dynkin specs".into(),
            });
        }
        let mut components = Vec::new();
        let mut pos = 0;
        let bytes = input.as_bytes();
        loop {
            let fam_char = input[pos..].chars().next().ok_or_else(|| Error::Parse {
                pos,
                token: String::new(),
                msg: "expected a family letter".into(),
            })?;
            let fam = Family::from_char(fam_char).ok_or_else(|| Error::Parse {
                pos,
                token: fam_char.to_string(),
                msg: "expected a family letter in {A,B,C,D,E,F,G}".into(),
            })?;
            pos += fam_char.len_utf8();
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                let token: String = input[pos..].chars().take(1).collect();
                return Err(Error::Parse {
                    pos,
                    token,
                    msg: "expected a rank after the family letter".into(),
                });
            }
            let rank: usize = input[digits_start..pos].parse().map_err(|_| Error::Parse {
                pos: digits_start,
                token: input[digits_start..pos].into(),
                msg: "rank out of range".into(),
            })?;
            components.push((fam, rank));
            if pos == bytes.len() {
                break;
            }
            let sep = input[pos..].chars().next().unwrap();
            if sep != 'x' && sep != 'X' {
                return Err(Error::Parse {
                    pos,
                    token: sep.to_string(),
                    msg: "expected 'x' between components".into(),
                });
            }
            pos += sep.len_utf8();
        }
        DynkinSpec::new(components)
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    /// Total rank: sum of component ranks.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }

    /// Expected number of roots.
    pub fn root_count(&self) -> usize {
        self.components.iter().map(|&(f, r)| f.root_count(r)).sum()
    }

    /// Canonical string form, e.g. `"A1xA1"`.
    pub fn name(&self) -> String {
        self.components
            .iter()
            .map(|&(f, r)| format!("{f}{r}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A root in simple-root coordinates. Coordinates of a root are all
/// nonnegative (positive root) or all nonpositive (negative root).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coordinates; positive roots have positive height.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|&c| -c).collect())
    }

    fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// A finite reduced root system, immutable after construction.
///
/// Basis order of roots: positive roots ascending by (height, lexicographic
/// coordinates), then the negative roots mirrored, i.e. root `npos + i` is
/// the negative of root `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: DynkinSpec,
    rank: usize,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    gram: Vec<Vec<Rat>>,
    /// `cartan[i][j] = 2<alpha_i, alpha_j> / <alpha_j, alpha_j>`.
    cartan: Vec<Vec<i64>>,
    /// Component index of each simple node.
    node_component: Vec<usize>,
}

fn add_single_edges(a: &mut [Vec<i64>], edges: &[(usize, usize)]) {
    for &(i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
}

/// Cartan matrix and symmetrizers of one simple component.
/// `d[i] = <alpha_i, alpha_i>/2`, with short roots at d = 1.
fn simple_cartan(family: Family, rank: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let mut d = vec![1i64; n];
    match family {
        Family::A => {
            add_single_edges(&mut a, &chain);
        }
        Family::B => {
            // alpha_n short, the rest long
            add_single_edges(&mut a, &chain);
            a[n - 2][n - 1] = -2;
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        Family::C => {
            // alpha_n long, the rest short
            add_single_edges(&mut a, &chain);
            a[n - 1][n - 2] = -2;
            d[n - 1] = 2;
        }
        Family::D => {
            // chain on 1..n-1 plus alpha_n forked off alpha_{n-2}
            add_single_edges(&mut a, &chain[..n - 2]);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -1;
            a[1][0] = -3;
            d[1] = 3;
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            add_single_edges(&mut a, &[(0, 1), (2, 3)]);
            a[1][2] = -2;
            a[2][1] = -1;
            d[0] = 2;
            d[1] = 2;
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n >= 8 {
                edges.push((6, 7));
            }
            add_single_edges(&mut a, &edges);
        }
    }
    (a, d)
}

impl RootSystem {
    /// Construct the full reduced root system of `spec` by closing the simple
    /// roots under the reflections they generate. Closure under all root
    /// reflections and the closed-form root count are verified before
    /// returning.
    pub fn build(spec: DynkinSpec) -> Result<RootSystem> {
        let rank = spec.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut gram = vec![vec![Rat::zero(); rank]; rank];
        let mut node_component = vec![0usize; rank];
        let mut offset = 0;
        for (ci, &(fam, r)) in spec.components().iter().enumerate() {
            let (a, d) = simple_cartan(fam, r);
            for i in 0..r {
                node_component[offset + i] = ci;
                for j in 0..r {
                    cartan[offset + i][offset + j] = a[i][j];
                    // <alpha_i, alpha_j> = d_j * a_ij
                    gram[offset + i][offset + j] = rat(d[j] * a[i][j]);
                }
            }
            offset += r;
        }

        // Orbit of the simple roots under simple reflections.
        let mut found: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..rank {
            let mut coords = vec![0i64; rank];
            coords[i] = 1;
            let alpha = Root(coords);
            found.insert(alpha.clone());
            queue.push_back(alpha);
        }
        while let Some(beta) = queue.pop_front() {
            for j in 0..rank {
                // s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
                let pairing: i64 = beta.0.iter().enumerate().map(|(k, &m)| m * cartan[k][j]).sum();
                let mut refl = beta.clone();
                refl.0[j] -= pairing;
                if found.insert(refl.clone()) {
                    queue.push_back(refl);
                }
            }
        }

        let mut positives: Vec<Root> = found.iter().filter(|r| r.is_positive()).cloned().collect();
        positives.sort_by_key(|r| (r.height(), r.0.clone()));
        let npos = positives.len();
        let mut roots = positives;
        for i in 0..npos {
            roots.push(roots[i].negated());
        }

        if roots.len() != found.len() {
            return Err(Error::Invariant(format!(
                "{}: found {} roots but only {} are signed",
                spec.name(),
                found.len(),
                roots.len()
            )));
        }
        if roots.len() != spec.root_count() {
            return Err(Error::Invariant(format!(
                "{}: got {} roots, expected {}",
                spec.name(),
                roots.len(),
                spec.root_count()
            )));
        }

        let index: HashMap<Root, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let rs = RootSystem { spec, rank, roots, index, gram, cartan, node_component };

        // Reduced + closed under every root reflection.
        for beta in &rs.roots {
            let double = Root(beta.0.iter().map(|c| 2 * c).collect());
            if rs.index.contains_key(&double) {
                return Err(Error::Invariant(format!("system not reduced at {beta}")));
            }
            if beta.0.iter().any(|&c| c > 0) && beta.0.iter().any(|&c| c < 0) {
                return Err(Error::Invariant(format!("mixed-sign root {beta}")));
            }
        }
        for alpha in &rs.roots {
            for beta in &rs.roots {
                let refl = rs.reflect(alpha, beta);
                if !rs.index.contains_key(&refl) {
                    return Err(Error::Invariant(format!(
                        "reflection closure fails: s_{alpha}({beta}) = {refl}"
                    )));
                }
            }
        }
        Ok(rs)
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    /// Canonical identity string, used to detect mixed-system operands.
    pub fn fingerprint(&self) -> String {
        self.spec.name()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All roots in basis order (positives by (height, lex), then mirrored
    /// negatives).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Index of `-roots[idx]`.
    pub fn negation_index(&self, idx: usize) -> usize {
        let npos = self.num_positive();
        if idx < npos {
            idx + npos
        } else {
            idx - npos
        }
    }

    /// Gram matrix of the invariant inner product on simple roots.
    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// Cartan integers `2<alpha_i,alpha_j>/<alpha_j,alpha_j>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn node_component(&self, node: usize) -> usize {
        self.node_component[node]
    }

    pub fn num_components(&self) -> usize {
        self.spec.components().len()
    }

    /// Component a root belongs to (its support lies in one coordinate block).
    pub fn root_component(&self, root: &Root) -> usize {
        let k = root.0.iter().position(|&c| c != 0).expect("root is nonzero");
        self.node_component[k]
    }

    /// Exact inner product of two rational weight vectors in simple-root
    /// coordinates.
    pub fn inner_product(&self, x: &[Rat], y: &[Rat]) -> Result<Rat> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        if y.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: y.len() });
        }
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc += xi * yj * &self.gram[i][j];
            }
        }
        Ok(acc)
    }

    /// Rational coordinates of a root.
    pub fn root_weight(&self, root: &Root) -> Vec<Rat> {
        root.0.iter().map(|&c| rat(c)).collect()
    }

    /// `<alpha, beta>` for two roots, exact.
    pub fn root_pairing(&self, alpha: &Root, beta: &Root) -> Rat {
        let mut acc = Rat::zero();
        for (i, &a) in alpha.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in beta.0.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                acc += rat(a * b) * &self.gram[i][j];
            }
        }
        acc
    }

    /// Cartan integer `2<beta, alpha>/<alpha, alpha>` for roots; always an
    /// integer.
    pub fn cartan_int(&self, beta: &Root, alpha: &Root) -> i64 {
        let two = rat(2);
        let q = two * self.root_pairing(beta, alpha) / self.root_pairing(alpha, alpha);
        assert!(q.is_integer(), "cartan integer not integral");
        let n = q.to_integer();
        i64::try_from(&n).expect("cartan integer fits in i64")
    }

    /// Reflection `s_alpha(beta) = beta - (2<beta,alpha>/<alpha,alpha>) alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Root {
        let c = self.cartan_int(beta, alpha);
        Root(beta.0.iter().zip(&alpha.0).map(|(b, a)| b - c * a).collect())
    }

    /// The alpha-string through beta: `p = max{k : beta - k alpha is a root}`
    /// and `q = max{k : beta + k alpha is a root}`.
    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<(u32, u32)> {
        if self.root_index(alpha).is_none() {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        if self.root_index(beta).is_none() {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        if alpha == beta || *alpha == beta.negated() {
            return Err(Error::DegenerateRootString);
        }
        let neg = alpha.negated();
        let mut p = 0u32;
        let mut cur = beta.plus(&neg);
        while self.index.contains_key(&cur) {
            p += 1;
            cur = cur.plus(&neg);
        }
        let mut q = 0u32;
        let mut cur = beta.plus(alpha);
        while self.index.contains_key(&cur) {
            q += 1;
            cur = cur.plus(alpha);
        }
        Ok((p, q))
    }

    /// Sum of two roots if the sum is again a root.
    pub fn root_sum(&self, a: &Root, b: &Root) -> Option<usize> {
        self.root_index(&a.plus(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(DynkinSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn a1_is_forced() {
        let rs = build("A1");
        assert_eq!(rs.num_roots(), 2);
        assert_eq!(rs.roots()[0], Root(vec![1]));
        assert_eq!(rs.roots()[1], Root(vec![-1]));
    }

    #[test]
    fn a2_reflection_closure() {
        let rs = build("A2");
        assert_eq!(rs.num_roots(), 6);
        for coords in [vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, 0], vec![0, -1], vec![-1, -1]]
        {
            assert!(rs.root_index(&Root(coords.clone())).is_some(), "{coords:?} missing");
        }
    }

    #[test]
    fn g2_count_and_highest_root() {
        let rs = build("G2");
        assert_eq!(rs.num_roots(), 12);
        let highest = rs.positive_roots().last().unwrap();
        assert_eq!(highest, &Root(vec![3, 2]));
    }

    #[test]
    fn closed_form_counts() {
        for (s, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("A4", 20),
            ("B2", 8),
            ("B3", 18),
            ("B4", 32),
            ("C2", 8),
            ("C3", 18),
            ("C4", 32),
            ("D3", 12),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("A1xA1", 4),
            ("A2xB2", 14),
        ] {
            assert_eq!(build(s).num_roots(), n, "{s}");
        }
    }

    #[test]
    fn inner_product_examples() {
        let a2 = build("A2");
        let a1 = a2.root_weight(&Root(vec![1, 0]));
        let al2 = a2.root_weight(&Root(vec![0, 1]));
        assert_eq!(a2.inner_product(&a1, &a1).unwrap(), rat(2));
        assert_eq!(a2.inner_product(&a1, &al2).unwrap(), rat(-1));

        let g2 = build("G2");
        let beta = g2.root_weight(&Root(vec![0, 1]));
        assert_eq!(g2.inner_product(&beta, &beta).unwrap(), rat(6));
        let alpha = g2.root_weight(&Root(vec![1, 0]));
        assert_eq!(g2.inner_product(&alpha, &alpha).unwrap(), rat(2));
        assert_eq!(g2.inner_product(&alpha, &beta).unwrap(), rat(-3));
    }

    #[test]
    fn inner_product_dimension_mismatch() {
        let a2 = build("A2");
        let bad = vec![rat(1)];
        let good = vec![rat(1), rat(0)];
        assert!(matches!(
            a2.inner_product(&bad, &good),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn root_string_examples() {
        let a2 = build("A2");
        let a = Root(vec![1, 0]);
        let b = Root(vec![0, 1]);
        assert_eq!(a2.root_string(&a, &b).unwrap(), (0, 1));
        assert_eq!(a2.root_string(&a, &Root(vec![1, 1])).unwrap(), (1, 0));

        let g2 = build("G2");
        assert_eq!(g2.root_string(&Root(vec![1, 0]), &Root(vec![0, 1])).unwrap(), (0, 3));
    }

    #[test]
    fn root_string_rejects_degenerate() {
        let a2 = build("A2");
        let a = Root(vec![1, 0]);
        assert_eq!(a2.root_string(&a, &a), Err(Error::DegenerateRootString));
        assert_eq!(a2.root_string(&a, &a.negated()), Err(Error::DegenerateRootString));
    }

    #[test]
    fn string_cartan_consistency_exhaustive() {
        for s in ["A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
            let rs = build(s);
            for alpha in rs.roots() {
                for beta in rs.roots() {
                    if alpha == beta || *alpha == beta.negated() {
                        continue;
                    }
                    let (p, q) = rs.root_string(alpha, beta).unwrap();
                    assert_eq!(
                        p as i64 - q as i64,
                        rs.cartan_int(beta, alpha),
                        "{s}: string through {beta} along {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn negation_and_mirror_layout() {
        let rs = build("B3");
        let npos = rs.num_positive();
        for i in 0..rs.num_roots() {
            let j = rs.negation_index(i);
            assert_eq!(rs.root(j), &rs.root(i).negated());
            if i < npos {
                assert!(rs.root(i).is_positive());
            } else {
                assert!(!rs.root(i).is_positive());
            }
        }
    }

    #[test]
    fn product_gram_is_block_diagonal() {
        let rs = build("A1xA1");
        assert_eq!(rs.gram()[0][1], Rat::zero());
        assert_eq!(rs.gram()[1][0], Rat::zero());
        assert_eq!(rs.gram()[0][0], rat(2));
        // roots of distinct components are orthogonal
        let a = Root(vec![1, 0]);
        let b = Root(vec![0, 1]);
        assert_eq!(rs.root_pairing(&a, &b), Rat::zero());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(DynkinSpec::parse("H2"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(DynkinSpec::parse("A"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(DynkinSpec::parse("A2 xA1"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(DynkinSpec::parse("A2yB3"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(DynkinSpec::parse(""), Err(Error::Parse { pos: 0, .. })));
        // rank restrictions reject with the offending component named
        match DynkinSpec::parse("G3") {
            Err(Error::InvalidComponent { component, .. }) => assert_eq!(component, "G3"),
            other => panic!("expected InvalidComponent, got {other:?}"),
        }
        assert!(DynkinSpec::parse("D2").is_err());
        assert!(DynkinSpec::parse("E5").is_err());
        assert!(DynkinSpec::parse("B1").is_err());
        assert!(DynkinSpec::parse("a2xb2").is_ok());
    }

    #[test]
    fn fractional_weights_pair_exactly() {
        let a2 = build("A2");
        let x = vec![ratio(1, 2), ratio(-1, 3)];
        let y = vec![rat(1), rat(1)];
        // (1/2, -1/3) G (1,1) with row sums G·(1,1) = (1,1)
        assert_eq!(a2.inner_product(&x, &y).unwrap(), ratio(1, 6));
    }
}
