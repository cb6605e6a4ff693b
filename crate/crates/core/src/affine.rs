//! Extended affine Weyl group elements `pi^lambda w` and their length theory.
//!
//! Multiplication follows `(pi^a u)(pi^b w) = pi^{a + u(b)} uw`. An element
//! always stores the raw translation; the factorisation `lambda = v(mu)` with
//! `mu` dominant and `v` of minimal length is derived on demand.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, FiniteElement};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// An integer cocharacter in the coordinates of its Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(Vec<i64>);

impl Cocharacter {
    pub fn new(coords: Vec<i64>) -> Self {
        Cocharacter(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Cocharacter(vec![0; dim])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Cocharacter {
        Cocharacter(self.0.iter().map(|a| k * a).collect())
    }
}

impl Deref for Cocharacter {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Cocharacter {
    fn from(v: Vec<i64>) -> Self {
        Cocharacter(v)
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `x = pi^lambda w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    translation: Cocharacter,
    finite: FiniteElement,
}

impl AffineElement {
    /// No validation; see [`crate::Group::element`] for the checked form.
    pub fn new(translation: Cocharacter, finite: FiniteElement) -> Self {
        AffineElement { translation, finite }
    }

    pub fn translation(&self) -> &Cocharacter {
        &self.translation
    }

    pub fn finite(&self) -> &FiniteElement {
        &self.finite
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} * ", self.translation)?;
        match self.finite.stored_word() {
            Some(w) => {
                f.write_str("w[")?;
                for g in w {
                    write!(f, "{g}")?;
                }
                f.write_str("]")
            }
            None => write!(f, "p{}", self.finite),
        }
    }
}

/// `lambda = v(mu)` with `mu` dominant and `v` of minimal length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub v: FiniteElement,
    pub mu: Cocharacter,
}

impl CoxeterSystem {
    pub fn check_dim(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: lambda.len(),
            });
        }
        Ok(())
    }

    pub fn act_cocharacter(&self, w: &FiniteElement, lambda: &Cocharacter) -> Cocharacter {
        Cocharacter(self.act(w, lambda))
    }

    /// `<alpha, mu> >= 0` for every positive root.
    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        self.positive_roots().iter().all(|a| self.pairing(a, mu) >= 0)
    }

    /// `<alpha, lambda> != 0` for every root, i.e. `lambda` lies in an open
    /// chamber. For dominant input this is strict dominance.
    pub fn is_regular(&self, lambda: &[i64]) -> bool {
        self.positive_roots().iter().all(|a| self.pairing(a, lambda) != 0)
    }

    /// Moves `lambda` into the dominant chamber one simple reflection at a
    /// time, always reflecting the smallest simple root with negative pairing.
    pub fn decompose(&self, lambda: &Cocharacter) -> Decomposition {
        let mut cur = lambda.0.clone();
        let mut v = self.identity();
        while let Some(i) = (1..=self.rank()).find(|&i| self.pairing(&self.simple_roots()[i - 1], &cur) < 0) {
            cur = self.reflect(i, &cur);
            v = self.right_mul_gen(&v, i);
        }
        Decomposition {
            v,
            mu: Cocharacter(cur),
        }
    }

    /// `l(pi^mu) = <2 rho, mu>` for dominant `mu`.
    pub fn translation_length(&self, mu: &Cocharacter) -> Result<usize> {
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.0.clone()));
        }
        Ok(self.pairing(self.rho2(), mu) as usize)
    }

    pub fn affine_mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        let shifted = self.act_cocharacter(&x.finite, &y.translation);
        AffineElement {
            translation: x.translation.add(&shifted),
            finite: self.mul(&x.finite, &y.finite),
        }
    }

    pub fn affine_inverse(&self, x: &AffineElement) -> AffineElement {
        let winv = self.inverse(&x.finite);
        AffineElement {
            translation: self.act_cocharacter(&winv, &x.translation).neg(),
            finite: winv,
        }
    }

    /// `s * pi^lambda w = pi^{s(lambda)} sw`.
    pub fn left_mul(&self, gen: usize, x: &AffineElement) -> Result<AffineElement> {
        self.generator(gen)?;
        Ok(AffineElement {
            translation: Cocharacter(self.reflect(gen, &x.translation)),
            finite: self.left_mul_gen(gen, &x.finite),
        })
    }

    /// `pi^lambda w * s = pi^lambda ws`.
    pub fn right_mul(&self, x: &AffineElement, gen: usize) -> Result<AffineElement> {
        self.generator(gen)?;
        Ok(AffineElement {
            translation: x.translation.clone(),
            finite: self.right_mul_gen(&x.finite, gen),
        })
    }

    /// `s x s`.
    pub fn affine_conjugate(&self, gen: usize, x: &AffineElement) -> Result<AffineElement> {
        self.right_mul(&self.left_mul(gen, x)?, gen)
    }

    /// Closed length formula `l(pi^mu) + l(v^{-1} w) - l(v^{-1})`, valid when
    /// the translation is regular.
    pub fn affine_length(&self, x: &AffineElement) -> Result<usize> {
        let Decomposition { v, mu } = self.decompose(&x.translation);
        if !self.is_regular(&mu) {
            return Err(Error::NotRegular(x.translation.0.clone()));
        }
        let vinv = self.inverse(&v);
        let total = self.translation_length(&mu)? + self.length(&self.mul(&vinv, &x.finite));
        Ok(total - self.length(&vinv))
    }

    /// Hyperplane count `sum_{a > 0} |<a, lambda> + [w^{-1} a < 0]|`, valid
    /// for every translation. Used as an independent cross-check.
    pub fn affine_length_oracle(&self, x: &AffineElement) -> usize {
        let w_rho = self.act(&x.finite, self.regular_coweight());
        self.positive_roots()
            .iter()
            .map(|a| {
                let shift = i64::from(self.pairing(a, &w_rho) < 0);
                (self.pairing(a, &x.translation) + shift).unsigned_abs() as usize
            })
            .sum()
    }

    /// `l(v^{-1} w) = l(v^{-1}) + l(w)`.
    pub fn is_additive(&self, x: &AffineElement) -> bool {
        self.check_additive(x).is_ok()
    }

    pub fn check_additive(&self, x: &AffineElement) -> Result<()> {
        let vinv = self.inverse(&self.decompose(&x.translation).v);
        let product = self.length(&self.mul(&vinv, &x.finite));
        let sum = self.length(&vinv) + self.length(&x.finite);
        if product != sum {
            return Err(Error::NotAdditive { product, sum });
        }
        Ok(())
    }

    /// The finite part has full support.
    pub fn is_reuman_type(&self, x: &AffineElement) -> bool {
        self.has_full_support(&x.finite)
    }

    pub fn check_reuman_type(&self, x: &AffineElement) -> Result<()> {
        let missing = self.full_set().difference(self.support(&x.finite));
        if !missing.is_empty() {
            return Err(Error::NotReumanType {
                missing: missing.to_string(),
            });
        }
        Ok(())
    }

    /// Projection to the finite Weyl group.
    pub fn eta1(&self, x: &AffineElement) -> FiniteElement {
        x.finite.clone()
    }

    /// The chamber `v(C)` containing the translation.
    pub fn eta2(&self, x: &AffineElement) -> Result<FiniteElement> {
        if !self.is_regular(&x.translation) {
            return Err(Error::NotRegular(x.translation.0.clone()));
        }
        Ok(self.decompose(&x.translation).v)
    }

    /// `eta2(x)^{-1} eta1(x) eta2(x)` lies in no proper standard parabolic.
    pub fn reuman_criterion(&self, x: &AffineElement) -> Result<bool> {
        let v = self.eta2(x)?;
        let conj = self.mul(&self.mul(&self.inverse(&v), &x.finite), &v);
        Ok(self.support(&conj) == self.full_set())
    }

    /// `pi^{v(mu)} w`.
    pub fn affine_from_parts(
        &self,
        v: &FiniteElement,
        mu: &Cocharacter,
        w: &FiniteElement,
    ) -> Result<AffineElement> {
        self.check_dim(mu)?;
        Ok(AffineElement {
            translation: self.act_cocharacter(v, mu),
            finite: w.clone(),
        })
    }

    /// Generators whose simple root pairs negatively with `lambda`.
    pub fn negative_simple_roots(&self, lambda: &[i64]) -> GenSet {
        (1..=self.rank())
            .filter(|&i| self.pairing(&self.simple_roots()[i - 1], lambda) < 0)
            .collect()
    }
}
