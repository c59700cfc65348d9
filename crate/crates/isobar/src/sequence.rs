//! Isobaric sequences (P₀, P₁, …, P_N): the carriers of the level product.

use crate::error::{Error, Result};
use crate::poly::IsobaricPolynomial;
use crate::rational::Rat;

/// A sequence with P_n of level n and all variables confined to t₁…t_k.
/// P₀ is a rational constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsobaricSequence {
    truncation_k: usize,
    polys: Vec<IsobaricPolynomial>,
}

impl IsobaricSequence {
    pub fn new(truncation_k: usize, polys: Vec<IsobaricPolynomial>) -> Result<Self> {
        if truncation_k == 0 {
            return Err(Error::ShapeMismatch("truncation k must be positive".into()));
        }
        if polys.is_empty() {
            return Err(Error::ShapeMismatch("sequence must contain P0".into()));
        }
        for (n, p) in polys.iter().enumerate() {
            if !p.is_zero() && p.level() != n {
                return Err(Error::LevelMismatch(n, p.level()));
            }
            if p.max_box() > truncation_k {
                return Err(Error::ShapeMismatch(format!(
                    "P{n} uses t{} beyond the truncation k={truncation_k}",
                    p.max_box()
                )));
            }
        }
        Ok(IsobaricSequence { truncation_k, polys })
    }

    /// (1, 0, 0, …): the level-product unit.
    pub fn identity(truncation_k: usize, len: usize) -> Self {
        assert!(truncation_k >= 1 && len >= 1);
        let mut polys = vec![IsobaricPolynomial::one()];
        polys.extend((1..len).map(IsobaricPolynomial::zero));
        IsobaricSequence { truncation_k, polys }
    }

    pub fn truncation_k(&self) -> usize {
        self.truncation_k
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Highest level carried by the sequence.
    pub fn max_level(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, n: usize) -> &IsobaricPolynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[IsobaricPolynomial] {
        &self.polys
    }

    /// The constant P₀ as a rational.
    pub fn head(&self) -> Rat {
        self.polys[0]
            .constant_value()
            .expect("P0 is a constant by construction")
    }
}
