//! Cup-product structure constants via divided-difference calculus on the
//! coinvariant algebra.
//!
//! Polynomials live in Q[alpha_1, ..., alpha_r] with the simple roots as
//! coordinates. The basis representative of the codimension-l(x) Schubert
//! cycle is `P_x`, obtained from `P_{w0} = (1/|W|) prod_{alpha > 0} alpha`
//! by divided differences; the coefficient of `P_x` in a homogeneous class
//! is extracted as the constant term of a divided-difference chain along
//! one fixed reduced word of `x`.
//!
//! Constants for G/P are computed in G/B and restricted to W^P indices,
//! using injectivity of the pullback H*(G/P) -> H*(G/B) on Schubert classes.
//! In the cycle-class indexing used throughout (`sigma_w = [X_w]`, the class
//! of a variety of dimension l(w)), the representative of `sigma_w` is
//! `P_{w0 w w0^P}`.

use crate::parabolic::{ParabolicContext, ParabolicError};
use crate::rootsys::{RootError, RootSystem, WeylElt};
use crate::{rat, Rat};
use num::{BigInt, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchubertError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error("element {word} is not a minimal coset representative")]
    NotMinimalRep { word: String },
}

/// Sparse exact polynomial in the simple-root coordinates on t*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinvariantPoly {
    pub rank: usize,
    /// exponent vector -> coefficient; zero coefficients are never stored.
    pub terms: BTreeMap<Vec<u8>, Rat>,
}

impl CoinvariantPoly {
    pub fn zero(rank: usize) -> Self {
        CoinvariantPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: Rat) -> Self {
        let mut p = Self::zero(rank);
        if !c.is_zero() {
            p.terms.insert(vec![0; rank], c);
        }
        p
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, rat(1))
    }

    /// The linear form with the given simple-root coordinates.
    pub fn linear(rank: usize, coords: &[Rat]) -> Self {
        let mut p = Self::zero(rank);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u8; rank];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, e: Vec<u8>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        CoinvariantPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    /// Constant term.
    pub fn eval_zero(&self) -> Rat {
        self.terms
            .get(&vec![0u8; self.rank])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Total degree if homogeneous and nonzero, `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: usize = e.iter().map(|&x| x as usize).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Substitution by the simple reflection s_i: every variable alpha_j
    /// maps to alpha_j - <alpha_j, alpha_i^vee> alpha_i.
    pub fn apply_simple_reflection(&self, rs: &RootSystem, i: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            // expand prod_j (alpha_j + c_j alpha_i)^{e_j}, with alpha_i -> -alpha_i
            let mut partial: Vec<(Vec<u8>, Rat)> = vec![(vec![0u8; self.rank], c.clone())];
            for (j, &ej) in e.iter().enumerate() {
                if ej == 0 {
                    continue;
                }
                if j == i {
                    let sign = if ej % 2 == 0 { rat(1) } else { rat(-1) };
                    for (mono, coef) in partial.iter_mut() {
                        mono[i] += ej;
                        *coef *= &sign;
                    }
                    continue;
                }
                let cj = -rs.cartan[j][i];
                if cj == 0 {
                    for (mono, _) in partial.iter_mut() {
                        mono[j] += ej;
                    }
                    continue;
                }
                // binomial expansion of (alpha_j + cj alpha_i)^{ej}
                let mut next = Vec::with_capacity(partial.len() * (ej as usize + 1));
                for (mono, coef) in &partial {
                    let mut binom = Rat::one();
                    let mut cj_pow = Rat::one();
                    for k in 0..=ej {
                        let mut m = mono.clone();
                        m[j] += ej - k;
                        m[i] += k;
                        next.push((m, coef * &binom * &cj_pow));
                        // C(ej, k+1) = C(ej, k) * (ej - k) / (k + 1)
                        binom *= crate::ratio((ej - k) as i64, (k + 1) as i64);
                        cj_pow *= rat(cj);
                    }
                }
                partial = next;
            }
            for (mono, coef) in partial {
                out.insert_add(mono, coef);
            }
        }
        out
    }
}

/// Divided difference `(f - s_i f) / alpha_i`; the numerator is exactly
/// divisible since alpha_i is a coordinate.
pub fn divided_difference(rs: &RootSystem, i: usize, f: &CoinvariantPoly) -> CoinvariantPoly {
    let num = f.sub(&f.apply_simple_reflection(rs, i));
    let mut out = CoinvariantPoly::zero(f.rank);
    for (e, c) in num.terms {
        assert!(
            e[i] >= 1,
            "divided-difference numerator must be divisible by alpha_{}",
            i + 1
        );
        let mut e2 = e;
        e2[i] -= 1;
        out.terms.insert(e2, c);
    }
    out
}

/// A cohomology class of G/P in the Schubert basis: finitely supported
/// rational coefficients on W^P.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohClass {
    pub coeffs: BTreeMap<WeylElt, Rat>,
}

impl CohClass {
    pub fn zero() -> Self {
        CohClass::default()
    }

    pub fn single(w: WeylElt, c: Rat) -> Self {
        let mut cls = CohClass::zero();
        if !c.is_zero() {
            cls.coeffs.insert(w, c);
        }
        cls
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, w: WeylElt, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return CohClass::zero();
        }
        CohClass {
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| (w.clone(), c * k))
                .collect(),
        }
    }

    /// Common length of the support (homogeneous class), if any.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut len = None;
        for w in self.coeffs.keys() {
            match len {
                None => len = Some(w.length),
                Some(l) if l != w.length => return None,
                _ => {}
            }
        }
        len
    }
}

/// Memoizing engine for divided-difference representatives and products on
/// one parabolic context.
pub struct SchubertEngine {
    pub ctx: ParabolicContext,
    wp: Vec<WeylElt>,
    memo: HashMap<WeylElt, CoinvariantPoly>,
}

impl SchubertEngine {
    /// `budget` caps the W^P enumeration.
    pub fn new(ctx: ParabolicContext, budget: usize) -> Result<Self, SchubertError> {
        let wp = ctx.minimal_coset_reps(budget)?;
        Ok(SchubertEngine {
            ctx,
            wp,
            memo: HashMap::new(),
        })
    }

    pub fn wp(&self) -> &[WeylElt] {
        &self.wp
    }

    pub fn rs(&self) -> &RootSystem {
        &self.ctx.rs
    }

    /// Divided-difference representative of the codimension-l(w) cycle.
    pub fn schubert_polynomial(&mut self, w: &WeylElt) -> CoinvariantPoly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let rs = &self.ctx.rs;
        let result = if w.length == rs.n_positive {
            // top representative: (1/|W|) prod_{alpha > 0} alpha
            let mut p = CoinvariantPoly::one(rs.rank);
            for r in 0..rs.n_positive {
                let coords: Vec<Rat> = rs.roots[r].iter().map(|&c| rat(c)).collect();
                p = p.mul(&CoinvariantPoly::linear(rs.rank, &coords));
            }
            let order: BigInt = rs.weyl_order();
            p.scale(&Rat::new(BigInt::one(), order))
        } else {
            // ascend: P_w = partial_i P_{w s_i} with l(w s_i) = l(w) + 1
            let i = (0..rs.rank)
                .find(|&i| (w.perm[i] as usize) < rs.n_positive)
                .expect("non-longest element has an ascent");
            let si = rs.simple_reflection(i);
            let wsi = rs.compose(w, &si);
            let higher = self.schubert_polynomial(&wsi);
            divided_difference(&self.ctx.rs, i, &higher)
        };
        self.memo.insert(w.clone(), result.clone());
        result
    }

    /// Coefficient of `P_x` in a homogeneous polynomial of degree l(x):
    /// constant term of the divided-difference chain along the canonical
    /// reduced word of `x`.
    pub fn dual_coefficient(&self, x: &WeylElt, f: &CoinvariantPoly) -> Rat {
        self.dual_coefficient_along(&x.word, f)
    }

    /// Same extraction along an explicit reduced word (used to check the
    /// result is independent of the chosen word).
    pub fn dual_coefficient_along(&self, word: &[usize], f: &CoinvariantPoly) -> Rat {
        let mut cur = f.clone();
        // partial_x = partial_{i_1} o ... o partial_{i_k}: rightmost first
        for &i in word.iter().rev() {
            if cur.is_zero() {
                return Rat::zero();
            }
            cur = divided_difference(&self.ctx.rs, i, &cur);
        }
        cur.eval_zero()
    }

    fn require_minimal(&self, w: &WeylElt) -> Result<(), SchubertError> {
        if !self.ctx.is_minimal_rep(w) {
            return Err(SchubertError::NotMinimalRep {
                word: w.word_string(),
            });
        }
        Ok(())
    }

    /// Representative polynomial of the cycle class `sigma_u` for u in W^P.
    fn sigma_rep(&mut self, u: &WeylElt) -> Result<CoinvariantPoly, SchubertError> {
        let du = self.ctx.poincare_dual(u)?;
        Ok(self.schubert_polynomial(&du))
    }

    /// Cup product `sigma_u . sigma_v = sum_w c_{uv}^w sigma_w` on W^P.
    pub fn cup_product(&mut self, u: &WeylElt, v: &WeylElt) -> Result<CohClass, SchubertError> {
        self.require_minimal(u)?;
        self.require_minimal(v)?;
        let n = self.ctx.n_dim;
        if u.length + v.length < n {
            return Ok(CohClass::zero());
        }
        let target_len = u.length + v.length - n;
        if target_len > n {
            return Ok(CohClass::zero());
        }
        let f = self.sigma_rep(u)?.mul(&self.sigma_rep(v)?);
        let mut out = CohClass::zero();
        let candidates: Vec<WeylElt> = self
            .wp
            .iter()
            .filter(|w| w.length == target_len)
            .cloned()
            .collect();
        for w in candidates {
            let dw = self.ctx.poincare_dual(&w)?;
            let c = self.dual_coefficient(&dw, &f);
            debug_assert!(
                c.is_integer() && !c.is_negative(),
                "cup constant must be a nonnegative integer, got {c}"
            );
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Symmetrized triple constant: `sigma_u . sigma_v . sigma_w = c [pt]`.
    pub fn triple_constant(
        &mut self,
        u: &WeylElt,
        v: &WeylElt,
        w: &WeylElt,
    ) -> Result<Rat, SchubertError> {
        self.require_minimal(w)?;
        if u.length + v.length + w.length != 2 * self.ctx.n_dim {
            self.require_minimal(u)?;
            self.require_minimal(v)?;
            return Ok(Rat::zero());
        }
        let prod = self.cup_product(u, v)?;
        let dw = self.ctx.poincare_dual(w)?;
        Ok(prod.coeffs.get(&dw).cloned().unwrap_or_else(Rat::zero))
    }
}
