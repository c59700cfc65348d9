//! The level product on isobaric sequences and its rational roots: the
//! rising/falling B-sequences, total differentials of weight monomials,
//! the L-coefficients, and the q-th level root H of a weighted family.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::{exponents_of_level, ExponentVector};
use crate::poly::IsobaricPolynomial;
use crate::rational::{big_to_rat, binomial, factorial, rat_int, Rat};
use crate::sequence::IsobaricSequence;
use crate::weights::WeightVector;

/// B_j^q = q(q+1)⋯(q+j); zero for j < 0.
pub fn b_rising(q: &Rat, j: i64) -> Rat {
    if j < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..=j {
        acc *= q + rat_int(i);
    }
    acc
}

/// B_{−(j)}^q = q(q−1)⋯(q−j); zero for j < 0. In particular zero whenever
/// q is an integer with 0 ≤ q ≤ j.
pub fn b_falling(q: &Rat, j: i64) -> Rat {
    if j < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..=j {
        acc *= q - rat_int(i);
    }
    acc
}

/// A polynomial in the weight variables ω₁, ω₂, … with exact rational
/// coefficients. Not level-graded: total differentials lower the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPoly {
    terms: BTreeMap<ExponentVector, Rat>,
}

impl WeightPoly {
    pub fn zero() -> Self {
        WeightPoly { terms: BTreeMap::new() }
    }

    /// The monomial ω^γ with the given coefficient.
    pub fn monomial(gamma: ExponentVector, coeff: Rat) -> Self {
        let mut p = WeightPoly::zero();
        p.add_term(gamma, coeff);
        p
    }

    pub fn constant(c: Rat) -> Self {
        WeightPoly::monomial(ExponentVector::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, gamma: &ExponentVector) -> Rat {
        self.terms.get(gamma).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, gamma: ExponentVector, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(gamma) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return WeightPoly::zero();
        }
        WeightPoly {
            terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = WeightPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.plus(b), ca * cb);
            }
        }
        out
    }

    /// One application of the total differential D₁ = Σᵢ ∂/∂ωᵢ.
    pub fn d1(&self) -> Self {
        let mut out = WeightPoly::zero();
        for (gamma, c) in &self.terms {
            for j in 1..=gamma.box_index() {
                let e = gamma.entry(j);
                if e > 0 {
                    out.add_term(
                        gamma.minus_unit(j).unwrap(),
                        c * rat_int(e as i64),
                    );
                }
            }
        }
        out
    }

    /// Exact value at a concrete weight vector.
    pub fn evaluate(&self, omega: &WeightVector) -> Result<Rat> {
        let mut total = Rat::zero();
        for (gamma, c) in &self.terms {
            let mut term = c.clone();
            for j in 1..=gamma.box_index() {
                let w = omega.get(j)?;
                for _ in 0..gamma.entry(j) {
                    term *= &w;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

/// D_p(ω^α) in closed form: p!·Σ_{γ ≤ α, |α−γ| = p} Π C(αᵢ,γᵢ) ω^γ.
/// This is the production path; [`total_differential_recursive`] is the
/// defining recursion and serves as its oracle.
pub fn total_differential(p: usize, alpha: &ExponentVector) -> WeightPoly {
    let mut out = WeightPoly::zero();
    if p > alpha.depth() {
        return out;
    }
    let pfact = big_to_rat(factorial(p));
    let entries = alpha.entries();
    let mut gamma = vec![0u32; entries.len()];
    collect_drops(entries, 0, p, &mut gamma, &Rat::one(), &mut |gamma, prod| {
        out.add_term(ExponentVector::new(gamma.to_vec()), prod * &pfact);
    });
    out
}

/// Walks all γ ≤ α with |α − γ| = `remaining` dropped in positions `i..`,
/// carrying Π C(αᵢ,γᵢ).
fn collect_drops(
    alpha: &[u32],
    i: usize,
    remaining: usize,
    gamma: &mut Vec<u32>,
    prod: &Rat,
    emit: &mut impl FnMut(&[u32], &Rat),
) {
    if i == alpha.len() {
        if remaining == 0 {
            emit(gamma, prod);
        }
        return;
    }
    let max_drop = (alpha[i] as usize).min(remaining);
    for drop in 0..=max_drop {
        gamma[i] = alpha[i] - drop as u32;
        let factor = big_to_rat(binomial(alpha[i] as i64, drop as i64));
        collect_drops(alpha, i + 1, remaining - drop, gamma, &(prod * factor), emit);
    }
    gamma[i] = alpha[i];
}

/// D_p(ω^α) by p-fold application of D₁.
pub fn total_differential_recursive(p: usize, alpha: &ExponentVector) -> WeightPoly {
    let mut poly = WeightPoly::monomial(alpha.clone(), Rat::one());
    for _ in 0..p {
        poly = poly.d1();
    }
    poly
}

/// The L-coefficient of Theorem-style level roots:
/// L(α) = (1/Π αᵢ!) Σ_{j=0}^{Σα−1} C(Σα−1, j) B_{−(j)}^q D_{Σα−j−1}(ω^α)|_ω.
pub fn l_coefficient(alpha: &ExponentVector, omega: &WeightVector, q: &Rat) -> Result<Rat> {
    let d = alpha.depth();
    if d == 0 {
        return Err(Error::EmptyExponent);
    }
    let mut sum = Rat::zero();
    for j in 0..=(d - 1) as i64 {
        let b = b_falling(q, j);
        if b.is_zero() {
            continue;
        }
        let diff = total_differential(d - 1 - j as usize, alpha).evaluate(omega)?;
        sum += big_to_rat(binomial((d - 1) as i64, j)) * b * diff;
    }
    let mut denom = Rat::one();
    for &a in alpha.entries() {
        denom *= big_to_rat(factorial(a as usize));
    }
    Ok(sum / denom)
}

/// A request for the level-n slice of the q-th level root of the family ω,
/// truncated to t₁…t_k.
#[derive(Clone, Debug)]
pub struct RootQuery {
    pub n: usize,
    pub k: usize,
    pub omega: WeightVector,
    pub q: Rat,
}

/// H_{k,n,ω}(t,q) = Σ_{α ⊢ n} L(α) t^α, with H₀ = 1.
pub fn root(query: &RootQuery) -> Result<IsobaricPolynomial> {
    if query.n == 0 {
        return Ok(IsobaricPolynomial::one());
    }
    let mut p = IsobaricPolynomial::zero(query.n);
    for alpha in exponents_of_level(query.n, query.k) {
        let c = l_coefficient(&alpha, &query.omega, &query.q)?;
        p.add_term(alpha, c);
    }
    Ok(p)
}

/// The root sequence (H₀, …, H_N) for one ω and q.
pub fn root_sequence(
    k: usize,
    n_max: usize,
    omega: &WeightVector,
    q: &Rat,
) -> Result<IsobaricSequence> {
    let polys = (0..=n_max)
        .map(|n| root(&RootQuery { n, k, omega: omega.clone(), q: q.clone() }))
        .collect::<Result<_>>()?;
    IsobaricSequence::new(k, polys)
}

/// Convolution of sequences: R_n = Σ_{i=0}^{n} Pᵢ Q_{n−i}. Level is
/// preserved, hence the name.
pub fn level_product(a: &IsobaricSequence, b: &IsobaricSequence) -> Result<IsobaricSequence> {
    if a.truncation_k() != b.truncation_k() {
        return Err(Error::ShapeMismatch(format!(
            "truncation {} vs {}",
            a.truncation_k(),
            b.truncation_k()
        )));
    }
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!("length {} vs {}", a.len(), b.len())));
    }
    let polys = (0..a.len())
        .map(|n| {
            let mut r = IsobaricPolynomial::zero(n);
            for i in 0..=n {
                r.accumulate(&a.poly(i).mul(b.poly(n - i)));
            }
            r
        })
        .collect();
    IsobaricSequence::new(a.truncation_k(), polys)
}

/// The unique b with a * b = (1, 0, 0, …), by forward substitution.
/// Requires the constant a₀ to be a nonzero rational.
pub fn level_inverse(a: &IsobaricSequence) -> Result<IsobaricSequence> {
    let head = a.head();
    if head.is_zero() {
        return Err(Error::NotInvertible);
    }
    let head_inv = head.recip();
    let mut polys = vec![IsobaricPolynomial::constant(head_inv.clone())];
    for n in 1..a.len() {
        let mut acc = IsobaricPolynomial::zero(n);
        for i in 1..=n {
            acc.accumulate(&a.poly(i).mul(&polys[n - i]));
        }
        polys.push(acc.scale(&-&head_inv));
    }
    IsobaricSequence::new(a.truncation_k(), polys)
}

/// s-fold level product; negative s inverts first. s = 0 gives the unit.
pub fn level_power(a: &IsobaricSequence, s: i64) -> Result<IsobaricSequence> {
    if s < 0 {
        return level_power(&level_inverse(a)?, -s);
    }
    let mut out = IsobaricSequence::identity(a.truncation_k(), a.len());
    for _ in 0..s {
        out = level_product(&out, a)?;
    }
    Ok(out)
}
