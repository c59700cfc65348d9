//! Multiplicative arithmetic functions of the core group: local values at
//! prime powers via GFP evaluation, Dirichlet convolution, integer and
//! rational convolution powers, and global evaluation on factored integers.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::exponents_of_level;
use crate::rational::{big_to_rat, factorial, Rat};
use crate::roots::{root, RootQuery};
use crate::weights::WeightPattern;

/// Coefficients (a₁,…,a_k) of a core polynomial x^k − a₁x^{k−1} − ⋯ − a_k.
/// A core function takes the same local values at every prime, so no
/// operation here needs a prime argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreFunctionSpec {
    coeffs: Vec<Rat>,
}

impl CoreFunctionSpec {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("core polynomial needs degree >= 1".into()));
        }
        Ok(CoreFunctionSpec { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Wire form {"a":["1","1"],"k":2} with exact fraction strings.
    pub fn to_json_string(&self) -> String {
        let repr = SpecRepr {
            a: self.coeffs.iter().map(crate::rational::format_rational).collect(),
            k: self.degree(),
        };
        serde_json::to_string(&repr).expect("spec serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let repr: SpecRepr =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if repr.k != repr.a.len() {
            return Err(Error::Parse(format!(
                "degree {} does not match {} coefficients",
                repr.k,
                repr.a.len()
            )));
        }
        let coeffs = repr
            .a
            .iter()
            .map(|s| crate::rational::parse_rational(s))
            .collect::<Result<_>>()?;
        CoreFunctionSpec::new(coeffs)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct SpecRepr {
    a: Vec<String>,
    k: usize,
}

/// Local values (χ(p⁰), …, χ(p^N)) of a multiplicative function at the
/// powers of one prime; χ(p⁰) = 1 always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSequence {
    values: Vec<Rat>,
}

impl LocalSequence {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        match values.first() {
            Some(v) if v.is_one() => Ok(LocalSequence { values }),
            _ => Err(Error::Domain(
                "a multiplicative function takes value 1 at 1".into(),
            )),
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn value(&self, n: usize) -> &Rat {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Extends with zeros; exact only for functions supported on the
    /// stored prefix (like the negative core values).
    pub fn zero_padded(&self, len: usize) -> LocalSequence {
        let mut values = self.values.clone();
        values.resize(len.max(values.len()), Rat::zero());
        LocalSequence { values }
    }
}

/// χ(pⁿ) = F_{k,n}(a) via the recursion Fₙ = a₁F_{n−1} + ⋯ + a_kF_{n−k},
/// F₀ = 1: the positive element determined by the core polynomial.
pub fn positive_values(spec: &CoreFunctionSpec, n_max: usize) -> LocalSequence {
    let k = spec.degree();
    let mut values = vec![Rat::one()];
    for n in 1..=n_max {
        let mut v = Rat::zero();
        for i in 1..=n.min(k) {
            v += &spec.coefficients()[i - 1] * &values[n - i];
        }
        values.push(v);
    }
    LocalSequence { values }
}

/// The negative element (1, −a₁, …, −a_k, 0, …): the Dirichlet inverse of
/// the positive one, with the core-polynomial coefficients as values.
pub fn negative_values(spec: &CoreFunctionSpec) -> LocalSequence {
    let mut values = vec![Rat::one()];
    values.extend(spec.coefficients().iter().map(|a| -a));
    LocalSequence { values }
}

/// The convolution identity (1, 0, …, 0).
pub fn identity_sequence(n_max: usize) -> LocalSequence {
    let mut values = vec![Rat::one()];
    values.resize(n_max + 1, Rat::zero());
    LocalSequence { values }
}

/// Dirichlet convolution at prime powers: (f*g)ₙ = Σᵢ fᵢ g_{n−i}.
pub fn dirichlet_convolve(f: &LocalSequence, g: &LocalSequence) -> Result<LocalSequence> {
    if f.len() != g.len() {
        return Err(Error::ShapeMismatch(format!(
            "local sequences of length {} vs {}",
            f.len(),
            g.len()
        )));
    }
    let values = (0..f.len())
        .map(|n| (0..=n).map(|i| f.value(i) * g.value(n - i)).sum())
        .collect();
    Ok(LocalSequence { values })
}

/// χ^{*s}(pⁿ) for integer s ≥ 0 and a function with local values
/// (1, t₁, …, t_k, 0, …): Σ_{α ⊢ n, Σα ≤ s} C_s(α) Π tᵢ^{αᵢ} with
/// C_s(α) = multinomial(s; α₁,…,α_k, s−Σα).
pub fn conv_power_int(t: &[Rat], s: u32, n: usize) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let k = t.len();
    let mut total = Rat::zero();
    for alpha in exponents_of_level(n, k) {
        let d = alpha.depth();
        if d > s as usize {
            continue;
        }
        // multinomial(s; α, s−Σα) = s! / (Παᵢ! · (s−Σα)!)
        let mut c = big_to_rat(factorial(s as usize));
        for &a in alpha.entries() {
            c /= big_to_rat(factorial(a as usize));
        }
        c /= big_to_rat(factorial(s as usize - d));
        let mut term = c;
        for (i, &a) in alpha.entries().iter().enumerate() {
            for _ in 0..a {
                term *= &t[i];
            }
        }
        total += term;
    }
    total
}

/// Local values of the q-th convolution root: vₙ = H_{k,n}(a, q), the
/// level-root polynomial at ones-weights evaluated at the core
/// coefficients.
pub fn rational_power(spec: &CoreFunctionSpec, q: &Rat, n_max: usize) -> Result<LocalSequence> {
    let k = spec.degree();
    let ones = WeightPattern::Ones.vector(k)?;
    let mut values = vec![Rat::one()];
    for n in 1..=n_max {
        let h = root(&RootQuery { n, k, omega: ones.clone(), q: q.clone() })?;
        values.push(h.evaluate(spec.coefficients())?);
    }
    Ok(LocalSequence { values })
}

/// Trial division is capped here by default; factoring is not the subject.
pub const DEFAULT_FACTOR_CEILING: u64 = 1_000_000_000_000;

/// Prime factorization (p, e) pairs, ascending p.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while m.is_multiple_of(2) {
        m /= 2;
        e += 1;
    }
    push(2, e);
    let mut p = 3;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        push(p, e);
        p += 2;
    }
    if m > 1 {
        push(m, 1);
    }
    out
}

/// χ^{*q}(m) = Π_p χ^{*q}(p^{e_p}) over the factorization of m.
pub fn evaluate_global(spec: &CoreFunctionSpec, q: &Rat, m: u64) -> Result<Rat> {
    evaluate_global_with_ceiling(spec, q, m, DEFAULT_FACTOR_CEILING)
}

pub fn evaluate_global_with_ceiling(
    spec: &CoreFunctionSpec,
    q: &Rat,
    m: u64,
    ceiling: u64,
) -> Result<Rat> {
    if m == 0 {
        return Err(Error::Domain("multiplicative functions live on m >= 1".into()));
    }
    if m > ceiling {
        return Err(Error::FactorizationCeiling(m));
    }
    let factors = factorize(m);
    let top = factors.iter().map(|&(_, e)| e as usize).max().unwrap_or(0);
    let local = rational_power(spec, q, top)?;
    Ok(factors
        .iter()
        .map(|&(_, e)| local.value(e as usize).clone())
        .product())
}
