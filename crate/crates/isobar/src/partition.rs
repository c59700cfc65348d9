//! Integer partitions: conjugation, hook shapes, centralizer orders, and
//! the enumeration shared with the monomial lattice.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exponent::{exponents_of_level, ExponentVector};

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook (n−r, 1^r).
    pub fn hook(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r + 1 > n {
            return Err(Error::InvalidHook { n, r });
        }
        let mut parts = vec![(n - r) as u32];
        parts.extend(std::iter::repeat_n(1, r));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight n = Σ λᵢ.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `Some((n, r))` when λ = (n−r, 1^r); hooks are exactly the shapes
    /// whose second row has length ≤ 1.
    pub fn hook_form(&self) -> Option<(usize, usize)> {
        if self.parts.is_empty() {
            return None;
        }
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some((self.n(), self.len() - 1))
        } else {
            None
        }
    }

    /// Multiplicity encoding: α with αᵢ = #parts equal to i.
    pub fn exponent_vector(&self) -> ExponentVector {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut entries = vec![0u32; max];
        for &p in &self.parts {
            entries[p as usize - 1] += 1;
        }
        ExponentVector::new(entries)
    }

    pub fn from_exponent_vector(alpha: &ExponentVector) -> Partition {
        Partition { parts: alpha.partition_parts() }
    }

    /// Centralizer order z_λ = Π i^{mᵢ} mᵢ!; the conjugacy class of cycle
    /// type λ in Sym(n) has size n!/z_λ.
    pub fn z(&self) -> BigInt {
        let alpha = self.exponent_vector();
        let mut z = BigInt::one();
        for (i, &m) in alpha.entries().iter().enumerate() {
            for _ in 0..m {
                z *= i as u64 + 1;
            }
            for f in 1..=m as u64 {
                z *= f;
            }
        }
        z
    }
}

/// All partitions of n, ascending in the lexicographic order
/// (1^n) < (2,1^{n−2}) < … < (n).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    exponents_of_level(n, n.max(1))
        .iter()
        .map(Partition::from_exponent_vector)
        .collect()
}

/// Same lexicographic order as the monomial enumeration (by weight first).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a CLI partition: `3,2` or `[3,2]`, descending positive parts.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(4, 1).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::hook(3, 2).unwrap(), p(&[1, 1, 1]));
        assert!(Partition::hook(3, 3).is_err());
        assert_eq!(p(&[3, 1]).hook_form(), Some((4, 1)));
        assert_eq!(p(&[2, 2]).hook_form(), None);
        assert_eq!(p(&[5]).hook_form(), Some((5, 0)));
    }

    #[test]
    fn exponent_round_trip() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                assert_eq!(Partition::from_exponent_vector(&lam.exponent_vector()), lam);
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        // z over partitions of 3: (1^3)→6, (2,1)→2, (3)→3
        let zs: Vec<_> = partitions_of(3).iter().map(|l| l.z()).collect();
        assert_eq!(zs, vec![BigInt::from(6), BigInt::from(2), BigInt::from(3)]);
        // Σ n!/z = n! over all classes
        for n in 1..=7usize {
            let fact = crate::rational::factorial(n);
            let total: BigInt = partitions_of(n).iter().map(|l| &fact / l.z()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_partition("3,2").unwrap(), p(&[3, 2]));
        assert_eq!(parse_partition("[3,1]").unwrap(), p(&[3, 1]));
        assert!(parse_partition("2,3").is_err());
        assert!(parse_partition("3,0").is_err());
        assert_eq!(p(&[3, 2]).to_string(), "(3,2)");
    }

    #[test]
    fn enumeration_order() {
        let ps = partitions_of(4);
        assert_eq!(
            ps,
            vec![p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1]), p(&[4])]
        );
    }
}
