//! Exponent vectors of isobaric monomials, the level-n monomial lattice,
//! and the lexicographic order that arranges monomials into boxes.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// α = (α₁,…,α_k), encoding the monomial t₁^{α₁}⋯t_k^{α_k}.
///
/// Trailing zeros are trimmed on construction, so equality of vectors is
/// equality of monomials regardless of how many variables are in scope.
/// The vector corresponds to the partition (1^{α₁},…,k^{α_k}) of its level.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        ExponentVector { entries }
    }

    /// The exponent vector of the constant monomial 1.
    pub fn empty() -> Self {
        ExponentVector { entries: Vec::new() }
    }

    /// e_j: the vector of the single variable t_j (1-based).
    pub fn unit(j: usize) -> Self {
        assert!(j >= 1, "variable indices are 1-based");
        let mut entries = vec![0; j];
        entries[j - 1] = 1;
        ExponentVector { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// α_j for 1-based j; zero beyond the stored length.
    pub fn entry(&self, j: usize) -> u32 {
        if j == 0 || j > self.entries.len() {
            0
        } else {
            self.entries[j - 1]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Level Σ j·α_j, the grading preserved by the level product.
    pub fn level(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| (i + 1) * a as usize)
            .sum()
    }

    /// Depth Σ α_j: the length of any maximal chain down to 1 in the lattice.
    pub fn depth(&self) -> usize {
        self.entries.iter().map(|&a| a as usize).sum()
    }

    /// Largest j with α_j ≠ 0; zero for the empty vector.
    pub fn box_index(&self) -> usize {
        self.entries.len()
    }

    /// Componentwise sum (monomial product).
    pub fn plus(&self, other: &Self) -> Self {
        let n = self.entries.len().max(other.entries.len());
        let entries = (1..=n)
            .map(|j| self.entry(j) + other.entry(j))
            .collect();
        ExponentVector::new(entries)
    }

    /// Componentwise difference, `None` unless `other ≤ self` pointwise.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.entries.len() > self.entries.len() {
            return None;
        }
        let entries = (1..=self.entries.len())
            .map(|j| self.entry(j).checked_sub(other.entry(j)))
            .collect::<Option<Vec<_>>>()?;
        Some(ExponentVector::new(entries))
    }

    /// α − e_j, `None` when α_j = 0.
    pub fn minus_unit(&self, j: usize) -> Option<Self> {
        if self.entry(j) == 0 {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[j - 1] -= 1;
        Some(ExponentVector::new(entries))
    }

    /// Parts of the corresponding partition, largest first.
    pub fn partition_parts(&self) -> Vec<u32> {
        let mut parts = Vec::with_capacity(self.depth());
        for j in (1..=self.entries.len()).rev() {
            for _ in 0..self.entry(j) {
                parts.push(j as u32);
            }
        }
        parts
    }

    fn parts_desc(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.entries.len())
            .rev()
            .flat_map(move |j| std::iter::repeat_n(j as u32, self.entry(j) as usize))
    }
}

/// Total order: by level, then by the lexicographic order on the weakly
/// decreasing part lists. Within one level this is exactly the order
/// (1^4) < (1^2,2) < (2^2) < (1,3) < (4), under which the box-i monomials
/// form a contiguous block for each i.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level().cmp(&other.level()).then_with(|| {
            let mut a = self.parts_desc();
            let mut b = other.parts_desc();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(x), Some(y)) => match x.cmp(&y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                }
            }
        })
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    /// Renders the monomial itself: `t1^2*t3`; the empty vector prints `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for j in 1..=self.entries.len() {
            let a = self.entry(j);
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "t{j}")?;
            } else {
                write!(f, "t{j}^{a}")?;
            }
        }
        Ok(())
    }
}

/// (level, depth, box) of a monomial.
pub fn monomial_stats(alpha: &ExponentVector) -> (usize, usize, usize) {
    (alpha.level(), alpha.depth(), alpha.box_index())
}

/// All exponent vectors of level `n` with parts ≤ `k`, sorted ascending in
/// the lexicographic order above. For `k ≥ n` this enumerates all 𝒫(n)
/// monomials of level n.
pub fn exponents_of_level(n: usize, k: usize) -> Vec<ExponentVector> {
    assert!(k >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut multiplicities = vec![0u32; k.min(n).max(1)];
    gen_parts(n, n.min(k), &mut multiplicities, &mut out);
    out
}

/// Emits partitions of `n` with largest part ≤ `max_part`, first part
/// ascending, which is exactly ascending lexicographic order.
fn gen_parts(n: usize, max_part: usize, mults: &mut [u32], out: &mut Vec<ExponentVector>) {
    if n == 0 {
        out.push(ExponentVector::new(mults.to_vec()));
        return;
    }
    for first in 1..=max_part.min(n) {
        mults[first - 1] += 1;
        gen_parts(n - first, first, mults, out);
        mults[first - 1] -= 1;
    }
}

/// The depth-(Σα−1) lattice predecessors of α: one pair (j, α−e_j) per
/// variable with α_j > 0, in ascending j.
pub fn lattice_covers(alpha: &ExponentVector) -> Result<Vec<(usize, ExponentVector)>> {
    if alpha.is_empty() {
        return Err(Error::EmptyExponent);
    }
    Ok((1..=alpha.box_index())
        .filter_map(|j| alpha.minus_unit(j).map(|g| (j, g)))
        .collect())
}
