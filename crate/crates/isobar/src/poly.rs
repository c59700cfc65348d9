//! Sparse isobaric polynomials: finite maps from exponent vectors of one
//! level to exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::rational::{format_rational, parse_rational, Rat};

/// A polynomial Σ A(α) t^α in which every stored monomial has the same
/// level. The zero polynomial stores no terms and, as in any graded ring,
/// is a member of every homogeneous component; its `level` is nominal.
#[derive(Clone, Debug)]
pub struct IsobaricPolynomial {
    level: usize,
    terms: BTreeMap<ExponentVector, Rat>,
}

impl IsobaricPolynomial {
    pub fn zero(level: usize) -> Self {
        IsobaricPolynomial { level, terms: BTreeMap::new() }
    }

    /// Level-0 polynomial with the empty exponent vector as its sole key.
    pub fn constant(c: Rat) -> Self {
        let mut p = IsobaricPolynomial::zero(0);
        p.add_term(ExponentVector::empty(), c);
        p
    }

    pub fn one() -> Self {
        IsobaricPolynomial::constant(Rat::one())
    }

    pub fn monomial(alpha: ExponentVector, coeff: Rat) -> Self {
        let mut p = IsobaricPolynomial::zero(alpha.level());
        p.add_term(alpha, coeff);
        p
    }

    /// The single variable t_j (1-based), a polynomial of level j.
    pub fn variable(j: usize) -> Self {
        IsobaricPolynomial::monomial(ExponentVector::unit(j), Rat::one())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of t^α (zero when absent).
    pub fn coefficient(&self, alpha: &ExponentVector) -> Rat {
        self.terms.get(alpha).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest variable index occurring in any term.
    pub fn max_box(&self) -> usize {
        self.terms.keys().map(|a| a.box_index()).max().unwrap_or(0)
    }

    /// If this is a constant (level 0 or zero), its rational value.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(Rat::zero())
        } else if self.level == 0 {
            Some(self.coefficient(&ExponentVector::empty()))
        } else {
            None
        }
    }

    pub(crate) fn add_term(&mut self, alpha: ExponentVector, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(alpha.level(), self.level, "term of the wrong level");
        match self.terms.entry(alpha) {
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

    /// In-place sum; panics on a genuine grading mismatch. Internal helper
    /// for the accumulation loops (public code goes through [`add`]).
    pub(crate) fn accumulate(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.level = other.level;
        }
        assert_eq!(self.level, other.level, "grading mismatch");
        for (alpha, c) in &other.terms {
            self.add_term(alpha.clone(), c.clone());
        }
    }

    /// Coefficient-wise sum. Mixing two nonzero levels is a grading error;
    /// the zero polynomial is compatible with every level.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.is_zero() && !other.is_zero() && self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        out.accumulate(other);
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return IsobaricPolynomial::zero(self.level);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, v)| (a.clone(), v * c))
            .collect();
        IsobaricPolynomial { level: self.level, terms }
    }

    /// Product, of level `self.level + other.level`; exponent vectors add
    /// componentwise.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = IsobaricPolynomial::zero(self.level + other.level);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.plus(b), ca * cb);
            }
        }
        out
    }

    /// Product with a single monomial, the workhorse of the recursions.
    pub fn mul_monomial(&self, alpha: &ExponentVector, coeff: &Rat) -> Self {
        let mut out = IsobaricPolynomial::zero(self.level + alpha.level());
        if coeff.is_zero() {
            return out;
        }
        for (a, c) in &self.terms {
            out.add_term(a.plus(alpha), c * coeff);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = IsobaricPolynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at t = point (point[j-1] is the value of t_j).
    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        let needed = self.max_box();
        if needed > point.len() {
            return Err(Error::MissingCoordinate { needed, got: point.len() });
        }
        let mut total = Rat::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in alpha.entries().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Drops every term that involves a variable t_j with j > k.
    pub fn truncate(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(a, _)| a.box_index() <= k)
            .map(|(a, c)| (a.clone(), c.clone()))
            .collect();
        IsobaricPolynomial { level: self.level, terms }
    }

    pub fn to_json_string(&self) -> String {
        let repr = PolyRepr {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| TermRepr {
                    alpha: a.entries().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("polynomial serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let repr: PolyRepr =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = IsobaricPolynomial::zero(repr.level);
        for term in repr.terms {
            let alpha = ExponentVector::new(term.alpha);
            if alpha.level() != repr.level {
                return Err(Error::LevelMismatch(repr.level, alpha.level()));
            }
            p.add_term(alpha, parse_rational(&term.coeff)?);
        }
        Ok(p)
    }
}

/// Zero equals zero at every nominal level; otherwise level and terms match.
impl PartialEq for IsobaricPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.level == other.level && self.terms == other.terms
    }
}

impl Eq for IsobaricPolynomial {}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    alpha: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    level: usize,
    terms: Vec<TermRepr>,
}

impl fmt::Display for IsobaricPolynomial {
    /// Terms ascending in the lexicographic order, exact coefficients:
    /// `t1^4 + 3t1^2*t2 + t2^2`, `(3/8)t1^2 + (1/2)t2`, `-t1*t2 - t3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if alpha.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    if abs.is_integer() {
                        write!(f, "{}", abs.numer())?;
                    } else {
                        write!(f, "({})", format_rational(&abs))?;
                    }
                }
                write!(f, "{alpha}")?;
            }
        }
        Ok(())
    }
}
