//! Root-system and Weyl-group kernel.
//!
//! Roots are integer vectors in the simple-root basis; the W-invariant inner
//! product is carried by a rational Gram matrix, normalized so that long
//! roots have squared length 2 in each simple factor. Weyl group elements
//! are stored as permutations of the root list together with a canonical
//! (lexicographically minimal) reduced word.
//!
//! The inversion set convention is `Phi(w) = Phi^- \cap w^{-1} Phi^+`, the
//! set of negative roots sent positive by `w`; its size is the length.

use crate::{rat, Rat};
use num::Zero;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RootError {
    #[error("invalid type label `{0}`: expected a series letter A-G followed by a rank, e.g. A3, F4, E6")]
    BadLabel(String),
    #[error("invalid series/rank combination {series}{rank}")]
    BadRank { series: Series, rank: usize },
    #[error("elements belong to different root systems ({0} vs {1})")]
    MismatchedSystems(TypeLabel, TypeLabel),
    #[error("Weyl group enumeration budget exceeded: more than {budget} elements")]
    BudgetExceeded { budget: usize },
    #[error("simple-root index {index} out of range 1..={rank}")]
    BadWordIndex { index: usize, rank: usize },
}

/// Cartan-Killing series letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple type such as `A3` or `F4`, parsed from its string form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub series: Series,
    pub rank: usize,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A') | Some('a') => Series::A,
            Some('B') | Some('b') => Series::B,
            Some('C') | Some('c') => Series::C,
            Some('D') | Some('d') => Series::D,
            Some('E') | Some('e') => Series::E,
            Some('F') | Some('f') => Series::F,
            Some('G') | Some('g') => Series::G,
            _ => return Err(RootError::BadLabel(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootError::BadLabel(s.to_string()))?;
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(RootError::BadRank { series, rank });
        }
        Ok(TypeLabel { series, rank })
    }
}

impl TypeLabel {
    /// Cartan matrix entries `a[i][j] = 2(alpha_i, alpha_j) / (alpha_j, alpha_j)`.
    fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
            }
            Series::B => {
                // alpha_n short (Bourbaki): a[n-2][n-1] = -2, a[n-1][n-2] = -1
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
                a[n - 2][n - 1] = -2;
            }
            Series::C => {
                // alpha_n long: transpose of B
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
                a[n - 1][n - 2] = -2;
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(&mut a, i, i + 1);
                }
                link(&mut a, n - 3, n - 1);
            }
            Series::E => {
                // Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4.
                link(&mut a, 0, 2);
                link(&mut a, 1, 3);
                for i in 2..n - 1 {
                    link(&mut a, i, i + 1);
                }
            }
            Series::F => {
                // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                link(&mut a, 0, 1);
                link(&mut a, 2, 3);
                a[1][2] = -2;
                a[2][1] = -1;
            }
            Series::G => {
                // alpha_1 short, alpha_2 long (Bourbaki)
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }

    /// Half squared lengths `(alpha_i, alpha_i)/2`, long roots normalized to 2.
    fn half_lengths(&self) -> Vec<Rat> {
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![rat(1); n],
            Series::B => {
                let mut d = vec![rat(1); n];
                d[n - 1] = crate::ratio(1, 2);
                d
            }
            Series::C => {
                let mut d = vec![crate::ratio(1, 2); n];
                d[n - 1] = rat(1);
                d
            }
            Series::F => vec![rat(1), rat(1), crate::ratio(1, 2), crate::ratio(1, 2)],
            Series::G => vec![crate::ratio(1, 3), rat(1)],
        }
    }
}

/// Immutable root-system tables for one simple type.
///
/// Roots are indexed so that `0..n_positive` are the positive roots sorted by
/// height then lexicographically, and the negative of root `r` sits at index
/// `r + n_positive` (mod `2 * n_positive`).
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub label: TypeLabel,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// All roots in simple-root coordinates.
    pub roots: Vec<Vec<i64>>,
    pub n_positive: usize,
    /// W-invariant inner product `(alpha_i, alpha_j)`.
    pub gram: Vec<Vec<Rat>>,
    /// Half-sum of positive roots, simple-root coordinates.
    pub rho: Vec<Rat>,
    /// A reduced word for the longest element.
    pub w0_word: Vec<usize>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Permutations of the root list induced by the simple reflections.
    simple_perms: Vec<Vec<u32>>,
}

/// A Weyl group element: canonical reduced word + cached root permutation.
///
/// Equality and hashing use the permutation only, so elements built from
/// different reduced words of the same group element compare equal.
#[derive(Debug, Clone)]
pub struct WeylElt {
    pub label: TypeLabel,
    /// Lexicographically minimal reduced word (0-based simple-root indices).
    pub word: Vec<usize>,
    /// `perm[r]` is the index of `w(roots[r])`.
    pub perm: Vec<u32>,
    pub length: usize,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.perm == other.perm
    }
}
impl Eq for WeylElt {}

impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WeylElt {
    /// Orders by length, then by canonical word; deterministic report order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.length, &self.word).cmp(&(other.length, &other.word))
    }
}

impl WeylElt {
    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// 1-based word for display and serialization.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word_1based()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

pub fn build_root_system(label: &str) -> Result<RootSystem, RootError> {
    Ok(RootSystem::new(label.parse()?))
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Self {
        let rank = label.rank;
        let cartan = label.cartan();
        let half = label.half_lengths();

        // Close the simple roots under the simple reflections.
        let mut set: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone(), ());
            set.push(v);
        }
        let mut head = 0;
        while head < set.len() {
            let v = set[head].clone();
            head += 1;
            for j in 0..rank {
                let mut w = v.clone();
                let pairing: i64 = (0..rank).map(|k| v[k] * cartan[k][j]).sum();
                w[j] -= pairing;
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    set.push(w);
                }
            }
        }

        let mut positive: Vec<Vec<i64>> = set
            .iter()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        // Height then reversed-lex, so that roots[i] = alpha_i for i < rank.
        positive.sort_by_key(|v| {
            let height: i64 = v.iter().sum();
            let rev: Vec<i64> = v.iter().rev().copied().collect();
            (height, rev)
        });
        let n_positive = positive.len();
        debug_assert_eq!(set.len(), 2 * n_positive);

        let mut roots = positive;
        for r in 0..n_positive {
            let neg: Vec<i64> = roots[r].iter().map(|c| -c).collect();
            roots.push(neg);
        }
        let root_index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();

        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| rat(cartan[i][j]) * &half[j]).collect())
            .collect();

        let mut rho = vec![Rat::zero(); rank];
        for r in roots.iter().take(n_positive) {
            for (k, c) in r.iter().enumerate() {
                rho[k] += rat(*c);
            }
        }
        for c in rho.iter_mut() {
            *c *= crate::ratio(1, 2);
        }

        let simple_perms: Vec<Vec<u32>> = (0..rank)
            .map(|j| {
                roots
                    .iter()
                    .map(|v| {
                        let mut w = v.clone();
                        let pairing: i64 = (0..rank).map(|k| v[k] * cartan[k][j]).sum();
                        w[j] -= pairing;
                        root_index[&w] as u32
                    })
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            label,
            rank,
            cartan,
            roots,
            n_positive,
            gram,
            rho,
            w0_word: Vec::new(),
            root_index,
            simple_perms,
        };
        rs.w0_word = rs.longest_element_word(&(0..rank).collect::<Vec<_>>());
        rs
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Index of the negative of root `r`.
    pub fn negate_root(&self, r: usize) -> usize {
        (r + self.n_positive) % (2 * self.n_positive)
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.n_positive
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    /// Pairing `<v, alpha_i^vee>` of a simple-root-coordinate vector with a
    /// simple coroot; integral on the root lattice.
    pub fn coroot_pairing(&self, v: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|k| v[k] * self.cartan[k][i]).sum()
    }

    /// `(u, v)` under the invariant form, both in simple-root coordinates.
    pub fn inner(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if v[j].is_zero() {
                    continue;
                }
                acc += &u[i] * &v[j] * &self.gram[i][j];
            }
        }
        acc
    }

    pub fn root_rat(&self, r: usize) -> Vec<Rat> {
        self.roots[r].iter().map(|&c| rat(c)).collect()
    }

    /// Height of root `r` (sum of simple-root coordinates).
    pub fn height(&self, r: usize) -> i64 {
        self.roots[r].iter().sum()
    }

    /// Fundamental weight `omega_i` in simple-root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Vec<Rat> {
        let mut rhs = vec![Rat::zero(); self.rank];
        rhs[i] = rat(1);
        solve_coroot_system(self, &rhs)
    }

    /// Reflection through root `r` as a group element.
    pub fn reflection(&self, r: usize) -> WeylElt {
        let beta = &self.roots[r];
        let beta_rat = self.root_rat(r);
        let beta_sq = self.inner(&beta_rat, &beta_rat);
        let perm: Vec<u32> = self
            .roots
            .iter()
            .map(|v| {
                let vr: Vec<Rat> = v.iter().map(|&c| rat(c)).collect();
                let pairing = rat(2) * self.inner(&vr, &beta_rat) / &beta_sq;
                let k = pairing
                    .to_integer()
                    .try_into()
                    .map(|k: i64| k)
                    .expect("coroot pairing fits i64");
                let img: Vec<i64> = (0..self.rank).map(|t| v[t] - k * beta[t]).collect();
                self.root_index[&img] as u32
            })
            .collect();
        self.from_perm(perm)
    }

    /// Order of the Weyl group, by the classical product formulas.
    pub fn weyl_order(&self) -> num::BigInt {
        use num::BigInt;
        let n = self.rank as u64;
        let fact = |k: u64| -> BigInt {
            let mut acc = BigInt::from(1u64);
            for i in 2..=k {
                acc *= i;
            }
            acc
        };
        match self.label.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => fact(n) << n,
            Series::D => fact(n) << (n - 1),
            Series::E => match n {
                6 => BigInt::from(51_840u64),
                7 => BigInt::from(2_903_040u64),
                _ => BigInt::from(696_729_600u64),
            },
            Series::F => BigInt::from(1_152u64),
            Series::G => BigInt::from(12u64),
        }
    }

    /// `(rho, alpha_r)` for a root index `r`.
    pub fn rho_pair_root(&self, r: usize) -> Rat {
        let mut acc = Rat::zero();
        for j in 0..self.rank {
            let c = self.roots[r][j];
            if c == 0 {
                continue;
            }
            for i in 0..self.rank {
                if self.rho[i].is_zero() {
                    continue;
                }
                acc += &self.rho[i] * rat(c) * &self.gram[i][j];
            }
        }
        acc
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt {
            label: self.label,
            word: Vec::new(),
            perm: (0..self.num_roots() as u32).collect(),
            length: 0,
        }
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt {
            label: self.label,
            word: vec![i],
            perm: self.simple_perms[i].clone(),
            length: 1,
        }
    }

    fn check_label(&self, w: &WeylElt) -> Result<(), RootError> {
        if w.label != self.label {
            return Err(RootError::MismatchedSystems(w.label, self.label));
        }
        Ok(())
    }

    /// Builds an element from a (not necessarily reduced) word of 0-based
    /// simple-root indices.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt, RootError> {
        for &i in word {
            if i >= self.rank {
                return Err(RootError::BadWordIndex {
                    index: i + 1,
                    rank: self.rank,
                });
            }
        }
        let mut perm: Vec<u32> = (0..self.num_roots() as u32).collect();
        // w = s_{i1} ... s_{ik} acts by v -> s_{i1}(s_{i2}(...(v))).
        for &i in word.iter().rev() {
            let sp = &self.simple_perms[i];
            for p in perm.iter_mut() {
                *p = sp[*p as usize];
            }
        }
        Ok(self.from_perm(perm))
    }

    /// 1-based variant used by CLI parsing.
    pub fn from_word_1based(&self, word: &[usize]) -> Result<WeylElt, RootError> {
        for &i in word {
            if i == 0 || i > self.rank {
                return Err(RootError::BadWordIndex {
                    index: i,
                    rank: self.rank,
                });
            }
        }
        let zero: Vec<usize> = word.iter().map(|&i| i - 1).collect();
        self.from_word(&zero)
    }

    pub fn from_perm(&self, perm: Vec<u32>) -> WeylElt {
        let length = (0..self.n_positive)
            .filter(|&r| perm[r] as usize >= self.n_positive)
            .count();
        let word = self.canonical_word(&perm, length);
        WeylElt {
            label: self.label,
            word,
            perm,
            length,
        }
    }

    /// Lexicographically minimal reduced word, by greedy left-descent peeling.
    fn canonical_word(&self, perm: &[u32], length: usize) -> Vec<usize> {
        let mut inv = vec![0u32; perm.len()];
        for (r, &p) in perm.iter().enumerate() {
            inv[p as usize] = r as u32;
        }
        let mut word = Vec::with_capacity(length);
        let mut cur = inv;
        for _ in 0..length {
            // i is a left descent of w iff w^{-1}(alpha_i) < 0.
            let i = (0..self.rank)
                .find(|&i| cur[i] as usize >= self.n_positive)
                .expect("nonidentity element must have a left descent");
            word.push(i);
            // replace w by s_i w; its inverse is w^{-1} s_i.
            let sp = &self.simple_perms[i];
            let next: Vec<u32> = (0..cur.len()).map(|r| cur[sp[r] as usize]).collect();
            cur = next;
        }
        word
    }

    /// `w * v` (apply `v` first, then `w`).
    pub fn compose(&self, w: &WeylElt, v: &WeylElt) -> WeylElt {
        debug_assert_eq!(w.label, v.label);
        let perm: Vec<u32> = v.perm.iter().map(|&r| w.perm[r as usize]).collect();
        self.from_perm(perm)
    }

    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        let mut perm = vec![0u32; w.perm.len()];
        for (r, &p) in w.perm.iter().enumerate() {
            perm[p as usize] = r as u32;
        }
        self.from_perm(perm)
    }

    pub fn longest_element(&self) -> WeylElt {
        self.from_word(&self.w0_word.clone()).expect("valid word")
    }

    /// Longest element of the standard parabolic subgroup generated by the
    /// given simple reflections, as a reduced word.
    pub fn longest_element_word(&self, generators: &[usize]) -> Vec<usize> {
        let mut perm: Vec<u32> = (0..self.num_roots() as u32).collect();
        let mut word = Vec::new();
        loop {
            // ascend while some generator's simple root stays positive
            let next = generators
                .iter()
                .copied()
                .find(|&i| (perm[i] as usize) < self.n_positive);
            match next {
                Some(i) => {
                    // w <- w * s_i
                    let sp = &self.simple_perms[i];
                    let newperm: Vec<u32> = (0..perm.len()).map(|r| perm[sp[r] as usize]).collect();
                    perm = newperm;
                    word.push(i);
                }
                None => break,
            }
        }
        // canonicalize through from_perm for a stable word
        self.from_perm(perm).word
    }

    /// Applies `w` to a rational vector in simple-root coordinates.
    pub fn act(&self, w: &WeylElt, v: &[Rat]) -> Vec<Rat> {
        let mut cur = v.to_vec();
        for &i in w.word.iter().rev() {
            // s_i(v) = v - <v, alpha_i^vee> alpha_i
            let mut pairing = Rat::zero();
            for k in 0..self.rank {
                if !cur[k].is_zero() {
                    pairing += &cur[k] * rat(self.cartan[k][i]);
                }
            }
            cur[i] -= pairing;
        }
        cur
    }

    /// Image root index under `w`.
    pub fn act_root(&self, w: &WeylElt, r: usize) -> usize {
        w.perm[r] as usize
    }

    /// `Phi(w) = Phi^- \cap w^{-1} Phi^+`: sorted indices of negative roots
    /// sent positive by `w`.
    pub fn inversion_set(&self, w: &WeylElt) -> Vec<usize> {
        (self.n_positive..self.num_roots())
            .filter(|&r| (w.perm[r] as usize) < self.n_positive)
            .collect()
    }

    /// Inversion set as a bitmask over positive-root indices: bit `p` is set
    /// iff `-alpha_p` belongs to `Phi(w)`.
    pub fn inv_mask(&self, w: &WeylElt) -> u128 {
        let mut mask = 0u128;
        for p in 0..self.n_positive {
            if (w.perm[p + self.n_positive] as usize) < self.n_positive {
                mask |= 1 << p;
            }
        }
        mask
    }

    pub fn full_mask(&self) -> u128 {
        if self.n_positive == 128 {
            u128::MAX
        } else {
            (1u128 << self.n_positive) - 1
        }
    }

    /// Weak order: `u <= v` iff `Phi(u)` is contained in `Phi(v)`.
    pub fn weak_leq(&self, u: &WeylElt, v: &WeylElt) -> Result<bool, RootError> {
        self.check_label(u)?;
        self.check_label(v)?;
        let mu = self.inv_mask(u);
        let mv = self.inv_mask(v);
        Ok(mu & !mv == 0)
    }

    /// Bruhat order by the subword property, via the standard left-descent
    /// recursion.
    pub fn bruhat_leq(&self, u: &WeylElt, v: &WeylElt) -> Result<bool, RootError> {
        self.check_label(u)?;
        self.check_label(v)?;
        Ok(self.bruhat_leq_inner(u.clone(), v.clone()))
    }

    fn bruhat_leq_inner(&self, u: WeylElt, v: WeylElt) -> bool {
        if u.length > v.length {
            return false;
        }
        if v.length == 0 {
            return u.length == 0;
        }
        let i = v.word[0];
        let si = self.simple_reflection(i);
        let sv = self.compose(&si, &v);
        // i is a left descent of u?
        let iu = self.inverse(&u);
        if (iu.perm[i] as usize) >= self.n_positive {
            let su = self.compose(&si, &u);
            self.bruhat_leq_inner(su, sv)
        } else {
            self.bruhat_leq_inner(u, sv)
        }
    }

    /// Enumerates the full Weyl group by BFS over right multiplication.
    /// Fails once more than `budget` elements have been produced.
    pub fn weyl_group(&self, budget: usize) -> Result<Vec<WeylElt>, RootError> {
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        let id = self.identity();
        seen.insert(id.perm.clone(), ());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for i in 0..self.rank {
                let sp = &self.simple_perms[i];
                let perm: Vec<u32> = (0..w.perm.len()).map(|r| w.perm[sp[r] as usize]).collect();
                if !seen.contains_key(&perm) {
                    if out.len() >= budget {
                        return Err(RootError::BudgetExceeded { budget });
                    }
                    seen.insert(perm.clone(), ());
                    out.push(self.from_perm(perm));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Solves `<x, alpha_i^vee> = rhs_i` for `x` in simple-root coordinates,
/// i.e. the linear system `sum_k x_k cartan[k][i] = rhs_i`.
pub(crate) fn solve_coroot_system(rs: &RootSystem, rhs: &[Rat]) -> Vec<Rat> {
    let n = rs.rank;
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|k| rat(rs.cartan[k][i])).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    m[r][c] = &m[r][c] - &f * &m[col][c];
                }
            }
        }
    }
    (0..n).map(|r| m[r][n].clone()).collect()
}
