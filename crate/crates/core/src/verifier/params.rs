//! Theorem parameters, the regime predicate and exact degree floors.

use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of the clique-side theorem: forbidden cycle `C_{2k+1}`,
/// chromatic target `r`, host order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremParams {
    pub r: usize,
    pub k: usize,
    pub n: usize,
}

/// `f(2) = 5`, `f(r) = 3r + 4` otherwise.
pub fn f(r: usize) -> usize {
    if r == 2 {
        2 * r + 1
    } else {
        3 * r + 4
    }
}

/// `coeff * base^exp * k`, or `None` when it does not fit in a `u128`
/// (in which case no representable `n` reaches it).
fn threshold(coeff: u128, base: usize, exp: usize, k: usize) -> Option<u128> {
    let exp = u32::try_from(exp).ok()?;
    (base as u128).checked_pow(exp)?.checked_mul(coeff)?.checked_mul(k as u128)
}

impl TheoremParams {
    pub fn new(r: usize, k: usize, n: usize) -> Result<Self> {
        if r < 1 || k < 1 {
            return Err(Error::param("r and k must be at least 1"));
        }
        Ok(TheoremParams { r, k, n })
    }

    /// `108 (r+1)^r k`, saturating at `u128::MAX`.
    pub fn n_threshold(&self) -> u128 {
        threshold(108, self.r + 1, self.r, self.k).unwrap_or(u128::MAX)
    }

    pub fn k_in_regime(&self) -> bool {
        self.k >= f(self.r)
    }

    pub fn n_in_regime(&self) -> bool {
        (self.n as u128) >= self.n_threshold()
    }

    pub fn in_regime(&self) -> bool {
        self.k_in_regime() && self.n_in_regime()
    }

    /// `d >= n / (2r + 2)`, by cross-multiplication.
    pub fn degree_floor_holds(&self, d: usize) -> bool {
        (d as u128) * (2 * self.r as u128 + 2) >= self.n as u128
    }

    /// `n / (2r + 2)` when it is an integer.
    pub fn layer_size(&self) -> Option<usize> {
        let den = 2 * self.r + 2;
        self.n.is_multiple_of(den).then_some(self.n / den)
    }

    /// Longest odd girth allowed by the shortest-odd-cycle bound, `2(2r+1)+1`.
    pub fn odd_girth_bound(&self) -> usize {
        2 * (2 * self.r + 1) + 1
    }
}

/// Parameters of the bipartite-side theorem, derived from a family: `p` from
/// the shortest missing odd length, `k` from the longest member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub p: usize,
    pub k: usize,
    pub n: usize,
}

impl FamilyParams {
    pub fn n_threshold(&self) -> u128 {
        threshold(108, 2 * self.p + 1, 2 * self.p, self.k).unwrap_or(u128::MAX)
    }

    pub fn in_regime(&self) -> bool {
        self.k > 4 * self.p && (self.n as u128) >= self.n_threshold()
    }

    /// `d >= n / (2(2p+1))`.
    pub fn degree_floor_holds(&self, d: usize) -> bool {
        (d as u128) * (2 * (2 * self.p as u128 + 1)) >= self.n as u128
    }
}
