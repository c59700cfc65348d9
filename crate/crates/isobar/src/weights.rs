//! Weighted isobaric families: the coefficient formula
//! A(α) = multinomial(Σα; α)·(Σ αᵢωᵢ)/(Σ αᵢ), construction by closed form,
//! by the Newton-style recursion, and by convolution against the GFPs,
//! plus weight arithmetic and weight detection.

use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::{exponents_of_level, ExponentVector};
use crate::partition::Partition;
use crate::poly::IsobaricPolynomial;
use crate::rational::{big_to_rat, multinomial, parse_rational, rat_int, Rat};
use crate::sequence::IsobaricSequence;

/// ω = (ω₁, ω₂, …): rational weights for the variables t₁, t₂, ….
/// ω₀ = 0 by convention. Entries beyond the stored list are not implied;
/// asking for one is a [`Error::MissingWeight`].
#[derive(Clone, Debug)]
pub struct WeightVector {
    entries: Vec<Rat>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        WeightVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    /// ω_i for 1-based i; ω₀ is 0.
    pub fn get(&self, i: usize) -> Result<Rat> {
        if i == 0 {
            return Ok(Rat::zero());
        }
        self.entries
            .get(i - 1)
            .cloned()
            .ok_or(Error::MissingWeight { index: i, len: self.entries.len() })
    }
}

/// Entrywise equality after zero-padding to a common length, so a vector
/// equals itself with trailing zeros appended.
impl PartialEq for WeightVector {
    fn eq(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|i| {
            self.entries.get(i - 1).cloned().unwrap_or_else(Rat::zero)
                == other.entries.get(i - 1).cloned().unwrap_or_else(Rat::zero)
        })
    }
}

impl Eq for WeightVector {}

/// Entrywise sum; the free-module operation on families.
impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, other: &WeightVector) -> WeightVector {
        let n = self.len().max(other.len());
        let entries = (0..n)
            .map(|i| {
                self.entries.get(i).cloned().unwrap_or_else(Rat::zero)
                    + other.entries.get(i).cloned().unwrap_or_else(Rat::zero)
            })
            .collect();
        WeightVector::new(entries)
    }
}

/// Named weight generators, extendable to any level without storing an
/// infinite vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightPattern {
    /// GFP weights (1, 1, 1, …): the complete-homogeneous reflects.
    Ones,
    /// GLP weights (1, 2, 3, …): the power-sum reflects.
    Naturals,
    /// Hook weights (−1)^r (0,…,0,1,1,…) with r leading zeros.
    Hook(usize),
    /// An explicit finite vector.
    Explicit(WeightVector),
}

impl WeightPattern {
    /// ω_i under the pattern (1-based).
    pub fn weight(&self, i: usize) -> Result<Rat> {
        if i == 0 {
            return Ok(Rat::zero());
        }
        match self {
            WeightPattern::Ones => Ok(rat_int(1)),
            WeightPattern::Naturals => Ok(rat_int(i as i64)),
            WeightPattern::Hook(r) => Ok(if i <= *r {
                Rat::zero()
            } else if r % 2 == 0 {
                rat_int(1)
            } else {
                rat_int(-1)
            }),
            WeightPattern::Explicit(w) => w.get(i),
        }
    }

    /// The first `len` weights as a concrete vector.
    pub fn vector(&self, len: usize) -> Result<WeightVector> {
        let entries = (1..=len).map(|i| self.weight(i)).collect::<Result<_>>()?;
        Ok(WeightVector::new(entries))
    }
}

/// Weight-spec grammar shared with the CLI: `ones`, `naturals`, `hook:r`,
/// or a comma-separated list of exact rationals such as `1,-1/2,3`.
pub fn parse_weight_spec(s: &str) -> Result<WeightPattern> {
    let s = s.trim();
    match s {
        "ones" => return Ok(WeightPattern::Ones),
        "naturals" => return Ok(WeightPattern::Naturals),
        _ => {}
    }
    if let Some(r) = s.strip_prefix("hook:") {
        let r: usize = r
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad hook index in {s:?}")))?;
        return Ok(WeightPattern::Hook(r));
    }
    if s.is_empty() {
        return Err(Error::Parse("empty weight spec".into()));
    }
    let entries = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightPattern::Explicit(WeightVector::new(entries)))
}

/// The closed-form coefficient of t^α in the family of weight ω:
/// multinomial(Σαᵢ; α₁,…,α_k) · (Σᵢ αᵢωᵢ) / (Σᵢ αᵢ).
pub fn wip_coefficient(alpha: &ExponentVector, omega: &WeightVector) -> Result<Rat> {
    let d = alpha.depth();
    if d == 0 {
        return Err(Error::EmptyExponent);
    }
    let mut dot = Rat::zero();
    for (i, &a) in alpha.entries().iter().enumerate() {
        if a > 0 {
            dot += omega.get(i + 1)? * rat_int(a as i64);
        }
    }
    Ok(big_to_rat(multinomial(alpha.entries())) * dot / rat_int(d as i64))
}

/// P_{k,n,ω} = Σ_{α ⊢ n} A(α) t^α over the variables t₁…t_k. P₀ is 0.
pub fn wip(n: usize, k: usize, omega: &WeightVector) -> Result<IsobaricPolynomial> {
    let mut p = IsobaricPolynomial::zero(n);
    if n == 0 {
        return Ok(p);
    }
    for alpha in exponents_of_level(n, k) {
        let c = wip_coefficient(&alpha, omega)?;
        p.add_term(alpha, c);
    }
    Ok(p)
}

/// P₀, …, P_{n_max} through the recursion
/// P_n = t₁P_{n−1} + ⋯ + t_{n−1}P₁ + ω_n t_n, with t_j = 0 for j > k.
pub fn wip_recursion_chain(
    k: usize,
    n_max: usize,
    omega: &WeightVector,
) -> Result<Vec<IsobaricPolynomial>> {
    let one = Rat::one();
    let mut ps: Vec<IsobaricPolynomial> = vec![IsobaricPolynomial::zero(0)];
    for m in 1..=n_max {
        let mut p = IsobaricPolynomial::zero(m);
        for j in 1..m.min(k + 1) {
            p.accumulate(&ps[m - j].mul_monomial(&ExponentVector::unit(j), &one));
        }
        if m <= k {
            p.add_term(ExponentVector::unit(m), omega.get(m)?);
        }
        ps.push(p);
    }
    Ok(ps)
}

/// Same polynomial as [`wip`], through the recursion route.
pub fn wip_via_recursion(n: usize, k: usize, omega: &WeightVector) -> Result<IsobaricPolynomial> {
    Ok(wip_recursion_chain(k, n, omega)?.pop().unwrap())
}

/// P₀, …, P_{n_max} through the convolution Σ_j ω_j t_j F_{n−j} against
/// the GFP sequence (F₀ = 1).
pub fn wip_convolution_chain(
    k: usize,
    n_max: usize,
    omega: &WeightVector,
) -> Result<Vec<IsobaricPolynomial>> {
    let fs = gfp_chain(k, n_max.saturating_sub(1));
    let mut ps = vec![IsobaricPolynomial::zero(0)];
    for n in 1..=n_max {
        let mut p = IsobaricPolynomial::zero(n);
        for j in 1..=n.min(k) {
            p.accumulate(&fs[n - j].mul_monomial(&ExponentVector::unit(j), &omega.get(j)?));
        }
        ps.push(p);
    }
    Ok(ps)
}

/// Same polynomial as [`wip`], through the convolution route.
pub fn wip_via_convolution(n: usize, k: usize, omega: &WeightVector) -> Result<IsobaricPolynomial> {
    Ok(wip_convolution_chain(k, n, omega)?.pop().unwrap())
}

/// F₀, …, F_upto in k variables, by the generating-function recursion
/// F_m = t₁F_{m−1} + ⋯ + t_kF_{m−k}. This route never touches the
/// closed-form coefficients.
pub(crate) fn gfp_chain(k: usize, upto: usize) -> Vec<IsobaricPolynomial> {
    let mut fs: Vec<IsobaricPolynomial> = vec![IsobaricPolynomial::one()];
    for m in 1..=upto {
        let mut p = IsobaricPolynomial::zero(m);
        for i in 1..=m.min(k) {
            p.accumulate(&fs[m - i].mul_monomial(&ExponentVector::unit(i), &Rat::from_integer(1.into())));
        }
        fs.push(p);
    }
    fs
}

/// The generalized Fibonacci polynomial F_{k,n}, the level-n GFP.
pub fn gfp(n: usize, k: usize) -> IsobaricPolynomial {
    gfp_chain(k, n).pop().unwrap()
}

/// Recovers a weight vector from a level-n polynomial, or `None` when the
/// polynomial is not weighted. ω₁ is read off t₁ⁿ, ωᵢ off the first-in-box
/// monomial t₁^{n−i}tᵢ, and the resulting weight must then reproduce every
/// coefficient of the closed form.
pub fn detect_weight(p: &IsobaricPolynomial) -> Option<WeightVector> {
    let n = p.level();
    if n == 0 {
        return None;
    }
    let w1 = p.coefficient(&ExponentVector::new(vec![n as u32]));
    let mut entries = vec![w1.clone()];
    for i in 2..=n {
        let mut first_in_box = vec![0u32; i];
        first_in_box[0] = (n - i) as u32;
        first_in_box[i - 1] += 1;
        let a = p.coefficient(&ExponentVector::new(first_in_box));
        entries.push(a - rat_int((n - i) as i64) * &w1);
    }
    let omega = WeightVector::new(entries);
    for alpha in exponents_of_level(n, n) {
        let expect = wip_coefficient(&alpha, &omega).ok()?;
        if p.coefficient(&alpha) != expect {
            return None;
        }
    }
    Some(omega)
}

/// Expands Ω(y) = (Σᵢ ωᵢtᵢyⁱ) / (1 − p(y)), p(y) = Σ_{i≤k} tᵢyⁱ, to order
/// `n_max`. The coefficient of yⁿ is P_{k,n,ω}; the constant term is 0.
pub fn generating_series(
    omega: &WeightVector,
    k: usize,
    n_max: usize,
) -> Result<IsobaricSequence> {
    // 1/(1 − p(y)) expanded by forward substitution.
    let denom_inv = gfp_chain(k, n_max.saturating_sub(1));
    let mut polys = vec![IsobaricPolynomial::zero(0)];
    for m in 1..=n_max {
        let mut p = IsobaricPolynomial::zero(m);
        for i in 1..=m.min(k) {
            p.accumulate(&denom_inv[m - i].mul_monomial(&ExponentVector::unit(i), &omega.get(i)?));
        }
        polys.push(p);
    }
    IsobaricSequence::new(k, polys)
}

/// P_{λ,ω} = Π_j P_{λ_j,ω}: the basis elements attached to a nowhere-zero
/// weight.
pub fn basis_products(
    lambda: &Partition,
    omega: &WeightVector,
    k: usize,
) -> Result<IsobaricPolynomial> {
    let mut out = IsobaricPolynomial::one();
    for &part in lambda.parts() {
        out = out.mul(&wip(part as usize, k, omega)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::Rng;
    use rand::SeedableRng;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn poly(level: usize, terms: &[(&[u32], i64)]) -> IsobaricPolynomial {
        let mut p = IsobaricPolynomial::zero(level);
        for (a, c) in terms {
            p.add_term(ev(a), rat_int(*c));
        }
        p
    }

    fn wv(entries: &[i64]) -> WeightVector {
        WeightVector::new(entries.iter().map(|&e| rat_int(e)).collect())
    }

    fn random_weight(rng: &mut impl Rng, len: usize) -> WeightVector {
        WeightVector::new(
            (0..len)
                .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=9)))
                .collect(),
        )
    }

    #[test]
    fn coefficient_examples() {
        // A((2,1)) = 2ω₁ + ω₂ for five random ω
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let w = random_weight(&mut rng, 3);
            let a = wip_coefficient(&ev(&[2, 1]), &w).unwrap();
            assert_eq!(a, rat_int(2) * w.get(1).unwrap() + w.get(2).unwrap());
            // A((1,0,1)) = ω₁ + ω₃
            let b = wip_coefficient(&ev(&[1, 0, 1]), &w).unwrap();
            assert_eq!(b, w.get(1).unwrap() + w.get(3).unwrap());
        }
        assert_eq!(wip_coefficient(&ev(&[2, 1]), &wv(&[1, 2])).unwrap(), rat_int(4));
        assert_eq!(
            wip_coefficient(&ExponentVector::empty(), &wv(&[1])),
            Err(Error::EmptyExponent)
        );
    }

    #[test]
    fn wip_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..5 {
            let w = random_weight(&mut rng, 2);
            let p = wip(2, 2, &w).unwrap();
            let mut expect = IsobaricPolynomial::zero(2);
            expect.add_term(ev(&[2]), w.get(1).unwrap());
            expect.add_term(ev(&[0, 1]), w.get(2).unwrap());
            assert_eq!(p, expect);
        }
        // F₄ and the level-4 GLP
        assert_eq!(
            wip(4, 4, &wv(&[1, 1, 1, 1])).unwrap(),
            poly(4, &[(&[4], 1), (&[2, 1], 3), (&[0, 2], 1), (&[1, 0, 1], 2), (&[0, 0, 0, 1], 1)])
        );
        assert_eq!(
            wip(4, 4, &wv(&[1, 2, 3, 4])).unwrap(),
            poly(4, &[(&[4], 1), (&[2, 1], 4), (&[0, 2], 2), (&[1, 0, 1], 4), (&[0, 0, 0, 1], 4)])
        );
    }

    #[test]
    fn recursion_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let w = random_weight(&mut rng, 2);
        let mut expect = IsobaricPolynomial::zero(2);
        expect.add_term(ev(&[2]), w.get(1).unwrap());
        expect.add_term(ev(&[0, 1]), w.get(2).unwrap());
        assert_eq!(wip_via_recursion(2, 2, &w).unwrap(), expect);

        assert_eq!(
            wip_via_recursion(4, 4, &wv(&[1, 1, 1, 1])).unwrap(),
            wip(4, 4, &wv(&[1, 1, 1, 1])).unwrap()
        );
        // the r = 1 hook at level 3
        assert_eq!(
            wip_via_recursion(3, 3, &wv(&[0, -1, -1])).unwrap(),
            poly(3, &[(&[1, 1], -1), (&[0, 0, 1], -1)])
        );
    }

    #[test]
    fn convolution_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(14);
        let w = random_weight(&mut rng, 2);
        assert_eq!(wip_via_convolution(2, 2, &w).unwrap(), wip(2, 2, &w).unwrap());
        assert_eq!(
            wip_via_convolution(4, 4, &wv(&[0, -1, -1, -1])).unwrap(),
            poly(4, &[(&[2, 1], -1), (&[0, 2], -1), (&[1, 0, 1], -1), (&[0, 0, 0, 1], -1)])
        );
        assert_eq!(
            wip_via_convolution(1, 1, &wv(&[7])).unwrap(),
            poly(1, &[(&[1], 7)])
        );
    }

    #[test]
    fn weight_addition() {
        assert_eq!(&wv(&[1, 1, 1]) + &wv(&[0, 1, 2]), wv(&[1, 2, 3]));
        assert_eq!(&wv(&[1, 1]) + &WeightVector::new(vec![]), wv(&[1, 1]));
        // doubling the GFP weight doubles every coefficient, n ≤ 6
        let ones = wv(&[1, 1, 1, 1, 1, 1]);
        let twos = &ones + &ones;
        for n in 1..=6 {
            assert_eq!(
                wip(n, n, &twos).unwrap(),
                wip(n, n, &ones).unwrap().scale(&rat_int(2))
            );
        }
        // additivity on random weights
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(15);
        for n in 1..=6usize {
            let a = random_weight(&mut rng, n);
            let b = random_weight(&mut rng, n);
            assert_eq!(
                wip(n, n, &(&a + &b)).unwrap(),
                wip(n, n, &a).unwrap().add(&wip(n, n, &b).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn detect_weight_examples() {
        let f3 = poly(3, &[(&[3], 1), (&[1, 1], 2), (&[0, 0, 1], 1)]);
        assert_eq!(detect_weight(&f3), Some(wv(&[1, 1, 1])));
        let s31 = poly(4, &[(&[2, 1], -1), (&[0, 2], -1), (&[1, 0, 1], -1), (&[0, 0, 0, 1], -1)]);
        assert_eq!(detect_weight(&s31), Some(wv(&[0, -1, -1, -1])));
        let s22 = poly(4, &[(&[0, 2], 1), (&[1, 0, 1], -1)]);
        assert_eq!(detect_weight(&s22), None);
    }

    #[test]
    fn detect_weight_is_faithful() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(16);
        for n in 1..=8usize {
            let w = random_weight(&mut rng, n);
            let p = wip(n, n, &w).unwrap();
            assert_eq!(detect_weight(&p), Some(w));
        }
    }

    #[test]
    fn integer_weights_give_integer_coefficients() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in 1..=10usize {
            let w = WeightVector::new(
                (0..n).map(|_| rat_int(rng.random_range(-9..=9))).collect(),
            );
            for (_, c) in wip(n, n, &w).unwrap().terms() {
                assert!(c.is_integer());
            }
        }
    }

    #[test]
    fn term_count_attained_for_nowhere_zero_weights() {
        // 𝒫(n) terms exactly when every ωᵢ ≠ 0
        let p = [0, 1, 2, 3, 5, 7, 11, 15, 22];
        #[allow(clippy::needless_range_loop)]
        for n in 1..=8usize {
            let w = WeightVector::new((1..=n).map(|i| rat(1, i as i64)).collect());
            assert_eq!(wip(n, n, &w).unwrap().num_terms(), p[n]);
        }
    }

    #[test]
    fn generating_series_examples() {
        let ones = wv(&[1, 1, 1]);
        let s = generating_series(&ones, 2, 3).unwrap();
        assert!(s.poly(0).is_zero());
        assert_eq!(s.poly(1), &poly(1, &[(&[1], 1)]));
        assert_eq!(s.poly(2), &poly(2, &[(&[2], 1), (&[0, 1], 1)]));
        assert_eq!(s.poly(3), &poly(3, &[(&[3], 1), (&[1, 1], 2)]));

        let zero = generating_series(&wv(&[0, 0, 0]), 3, 3).unwrap();
        assert!(zero.polys().iter().all(|p| p.is_zero()));

        let glp = generating_series(&wv(&[1, 2, 3]), 3, 3).unwrap();
        for n in 1..=3 {
            assert_eq!(glp.poly(n), &wip(n, 3, &wv(&[1, 2, 3])).unwrap());
        }
    }

    #[test]
    fn padded_equality() {
        assert_eq!(wv(&[1, 2]), wv(&[1, 2, 0, 0]));
        assert_ne!(wv(&[1, 2]), wv(&[1, 2, 1]));
        assert_eq!(WeightVector::new(vec![]), wv(&[0, 0]));
    }

    #[test]
    fn generating_series_matches_the_family() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(18);
        for k in [2usize, 5] {
            let w = random_weight(&mut rng, k);
            let series = generating_series(&w, k, 8).unwrap();
            for n in 1..=8 {
                assert_eq!(series.poly(n), &wip(n, k, &w).unwrap(), "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn basis_products_examples() {
        let ones = wv(&[1, 1]);
        let l11 = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(basis_products(&l11, &ones, 2).unwrap(), poly(2, &[(&[2], 1)]));
        let l21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            basis_products(&l21, &ones, 2).unwrap(),
            poly(3, &[(&[3], 1), (&[1, 1], 1)])
        );
        let l2 = Partition::new(vec![2]).unwrap();
        assert_eq!(
            basis_products(&l2, &wv(&[1, 2]), 2).unwrap(),
            poly(2, &[(&[2], 1), (&[0, 1], 2)])
        );
    }

    #[test]
    fn weight_spec_grammar() {
        assert_eq!(parse_weight_spec("ones").unwrap(), WeightPattern::Ones);
        assert_eq!(parse_weight_spec("naturals").unwrap(), WeightPattern::Naturals);
        assert_eq!(parse_weight_spec("hook:2").unwrap(), WeightPattern::Hook(2));
        assert_eq!(
            parse_weight_spec("1,-1/2").unwrap(),
            WeightPattern::Explicit(WeightVector::new(vec![rat_int(1), rat(-1, 2)]))
        );
        assert!(parse_weight_spec("wibble").is_err());
        assert!(parse_weight_spec("1,,2").is_err());
        assert!(parse_weight_spec("hook:x").is_err());
        // hook:2 pattern values
        let h2 = parse_weight_spec("hook:2").unwrap().vector(4).unwrap();
        assert_eq!(h2, wv(&[0, 0, 1, 1]));
    }
}
