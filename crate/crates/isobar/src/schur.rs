//! Schur reflects by signed Jacobi–Trudi determinants, hook reflects with
//! their weights, the hook-basis expansion of weighted families, and
//! character tables of Sym(n) extracted through the reflected Frobenius
//! formula.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::{exponents_of_level, ExponentVector};
use crate::partition::{partitions_of, Partition};
use crate::poly::IsobaricPolynomial;
use crate::rational::{big_to_rat, rat_int, Rat};
use crate::weights::{gfp_chain, wip, WeightPattern, WeightVector};

/// Which Jacobi–Trudi determinant to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurBasis {
    /// det[ê_{λ′ᵢ−i+j}] over the conjugate shape, ê_m = (−1)^{m+1} t_m.
    Elementary,
    /// det[F_{λᵢ−i+j}] over the shape itself, F the GFPs.
    Homogeneous,
}

/// The isobaric reflect Ŝ_λ of the Schur polynomial of shape λ.
///
/// Both determinants use the boundary values ê₀ = F₀ = 1 and
/// ê_m = F_m = 0 for m < 0; the empty shape gives the constant 1.
pub fn schur_reflect(lambda: &Partition, basis: SchurBasis) -> IsobaricPolynomial {
    let matrix: Vec<Vec<IsobaricPolynomial>> = match basis {
        SchurBasis::Elementary => {
            let conj = lambda.conjugate();
            let size = conj.len();
            (1..=size)
                .map(|i| {
                    (1..=size)
                        .map(|j| {
                            let m = conj.parts()[i - 1] as i64 - i as i64 + j as i64;
                            elementary_reflect(m)
                        })
                        .collect()
                })
                .collect()
        }
        SchurBasis::Homogeneous => {
            let size = lambda.len();
            let top = lambda.parts().first().copied().unwrap_or(0) as usize + size;
            let fs = gfp_chain(top, top);
            (1..=size)
                .map(|i| {
                    (1..=size)
                        .map(|j| {
                            let m = lambda.parts()[i - 1] as i64 - i as i64 + j as i64;
                            if m < 0 {
                                IsobaricPolynomial::zero(0)
                            } else {
                                fs[m as usize].clone()
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    determinant(&matrix)
}

/// ê_m = (−1)^{m+1} t_m for m ≥ 1; ê₀ = 1; zero below.
fn elementary_reflect(m: i64) -> IsobaricPolynomial {
    match m {
        m if m < 0 => IsobaricPolynomial::zero(0),
        0 => IsobaricPolynomial::one(),
        m => {
            let sign = if m % 2 == 1 { rat_int(1) } else { rat_int(-1) };
            IsobaricPolynomial::monomial(ExponentVector::unit(m as usize), sign)
        }
    }
}

/// Exact determinant by expansion along the first remaining row, memoized
/// on the set of unused columns. Every minor of a Jacobi–Trudi matrix is
/// level-homogeneous, so the graded arithmetic never mixes levels.
fn determinant(matrix: &[Vec<IsobaricPolynomial>]) -> IsobaricPolynomial {
    let size = matrix.len();
    if size == 0 {
        return IsobaricPolynomial::one();
    }
    let full: u32 = (1 << size) - 1;
    let mut memo: HashMap<u32, IsobaricPolynomial> = HashMap::new();
    det_rec(matrix, 0, full, &mut memo)
}

fn det_rec(
    matrix: &[Vec<IsobaricPolynomial>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, IsobaricPolynomial>,
) -> IsobaricPolynomial {
    if cols == 0 {
        return IsobaricPolynomial::one();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let mut acc = IsobaricPolynomial::zero(0);
    let mut sign = Rat::one();
    for j in 0..matrix.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &matrix[row][j];
        if !entry.is_zero() {
            let minor = det_rec(matrix, row + 1, cols & !(1 << j), memo);
            acc.accumulate(&entry.mul(&minor).scale(&sign));
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// The hook reflect Ŝ_{(n−r,1^r)} = (−1)^r Σ_{j=r+1}^{n} t_j F_{n−j}.
pub fn hook_reflect(n: usize, r: usize) -> Result<IsobaricPolynomial> {
    if n == 0 || r > n - 1 {
        return Err(Error::InvalidHook { n, r });
    }
    let fs = gfp_chain(n, n - r - 1);
    let sign = if r.is_multiple_of(2) { rat_int(1) } else { rat_int(-1) };
    let mut p = IsobaricPolynomial::zero(n);
    for j in r + 1..=n {
        p.accumulate(&fs[n - j].mul_monomial(&ExponentVector::unit(j), &sign));
    }
    Ok(p)
}

/// The weight pattern of hooks with leg length r+1:
/// (−1)^r (0,…,0,1,1,…) with r leading zeros.
pub fn hook_weight(r: usize) -> WeightPattern {
    WeightPattern::Hook(r)
}

/// Coordinates (c₀,…,c_{n−1}) of P_{n,ω} in the hook-reflect basis:
/// cᵢ = (−1)^{i+1}(ωᵢ − ω_{i+1}) with ω₀ = 0, so that
/// Σᵢ cᵢ Ŝ_{(n−i,1^i)} = P_{n,ω}.
pub fn to_hook_basis(omega: &WeightVector, n: usize) -> Result<Vec<Rat>> {
    if n == 0 {
        return Err(Error::Domain("hook expansion needs level n >= 1".into()));
    }
    (0..n)
        .map(|i| {
            let sign = if (i + 1) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            Ok(sign * (omega.get(i)? - omega.get(i + 1)?))
        })
        .collect()
}

/// Levels above this need no character table here; the default keeps the
/// exact linear solves instant.
pub const DEFAULT_TABLE_BOUND: usize = 7;

/// The complex character table of Sym(n): rows indexed by the shapes λ
/// (descending, trivial character first), columns by the class types μ
/// (ascending, identity class first). Entries are integer-valued rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    n: usize,
    rows: Vec<Partition>,
    columns: Vec<Partition>,
    entries: Vec<Vec<Rat>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn columns(&self) -> &[Partition] {
        &self.columns
    }

    /// χ_λ^μ by row/column index.
    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    /// Σ_μ χ_λ^μ χ_{λ′}^μ / z_μ, which is δ_{λλ′} by first orthogonality.
    pub fn orthogonality_sum(&self, row_a: usize, row_b: usize) -> Rat {
        self.columns
            .iter()
            .enumerate()
            .map(|(j, mu)| {
                &self.entries[row_a][j] * &self.entries[row_b][j]
                    / big_to_rat(mu.z())
            })
            .sum()
    }

    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct TableRepr {
            n: usize,
            rows: Vec<Vec<u32>>,
            columns: Vec<Vec<u32>>,
            entries: Vec<Vec<String>>,
        }
        let repr = TableRepr {
            n: self.n,
            rows: self.rows.iter().map(|p| p.parts().to_vec()).collect(),
            columns: self.columns.iter().map(|p| p.parts().to_vec()).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(crate::rational::format_rational).collect())
                .collect(),
        };
        serde_json::to_string(&repr).expect("table serialization cannot fail")
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.columns.iter().map(|p| p.to_string()).collect();
        let row_labels: Vec<String> = self.rows.iter().map(|p| p.to_string()).collect();
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(crate::rational::format_rational).collect())
            .collect();
        let head_width = row_labels.iter().map(|s| s.len()).max().unwrap_or(0).max(3);
        let mut widths: Vec<usize> = labels.iter().map(|s| s.len()).collect();
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len());
            }
        }
        write!(f, "{:>head_width$}", "chi")?;
        for (j, label) in labels.iter().enumerate() {
            write!(f, "  {:>width$}", label, width = widths[j])?;
        }
        for (i, row) in cells.iter().enumerate() {
            write!(f, "\n{:>head_width$}", row_labels[i])?;
            for (j, cell) in row.iter().enumerate() {
                write!(f, "  {:>width$}", cell, width = widths[j])?;
            }
        }
        Ok(())
    }
}

/// Character table through the reflected Frobenius formula
/// Ŝ_λ = (1/n!) Σ_μ C(μ) χ_λ^μ G_μ: expand every Ŝ_λ and every PSP-reflect
/// product G_μ over the level-n monomial basis, solve the exact linear
/// system for the G-coordinates c_{λμ}, and read off χ_λ^μ = c_{λμ} z_μ.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with_bound(n, DEFAULT_TABLE_BOUND)
}

pub fn character_table_with_bound(n: usize, bound: usize) -> Result<CharacterTable> {
    if n == 0 || n > bound {
        return Err(Error::TableBound { n, bound });
    }
    let mus = partitions_of(n);
    let monos = exponents_of_level(n, n);
    let naturals = WeightPattern::Naturals.vector(n)?;

    // G_μ = Π_j G_{μ_j}, expanded in n variables
    let g_columns: Vec<IsobaricPolynomial> = mus
        .iter()
        .map(|mu| {
            let mut g = IsobaricPolynomial::one();
            for &part in mu.parts() {
                g = g.mul(&wip(part as usize, n, &naturals)?);
            }
            Ok(g)
        })
        .collect::<Result<_>>()?;

    let matrix: Vec<Vec<Rat>> = monos
        .iter()
        .map(|alpha| g_columns.iter().map(|g| g.coefficient(alpha)).collect())
        .collect();

    let mut rows: Vec<Partition> = mus.clone();
    rows.reverse();

    let rhs: Vec<Vec<Rat>> = rows
        .iter()
        .map(|lam| {
            let s = schur_reflect(lam, SchurBasis::Elementary);
            monos.iter().map(|alpha| s.coefficient(alpha)).collect()
        })
        .collect();

    let coords = solve_columns(&matrix, &rhs)?;

    let entries = coords
        .iter()
        .map(|c| {
            c.iter()
                .zip(&mus)
                .map(|(c, mu)| c * big_to_rat(mu.z()))
                .collect()
        })
        .collect();

    Ok(CharacterTable { n, rows, columns: mus, entries })
}

/// Solves M x = b exactly for each right-hand side, one Gaussian
/// elimination over the rationals for the whole batch.
fn solve_columns(matrix: &[Vec<Rat>], rhs: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let size = matrix.len();
    let extra = rhs.len();
    let mut aug: Vec<Vec<Rat>> = (0..size)
        .map(|i| {
            let mut row = matrix[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].clone();
        for r in 0..size {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &inv;
            #[allow(clippy::needless_range_loop)]
            for c in col..size + extra {
                let delta = &factor * &aug[col][c];
                aug[r][c] -= delta;
            }
        }
    }
    Ok((0..extra)
        .map(|b| {
            (0..size)
                .map(|i| &aug[i][size + b] / &aug[i][i])
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::weights::detect_weight;
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

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(
            schur_reflect(&part(&[2]), SchurBasis::Elementary),
            poly(2, &[(&[2], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            schur_reflect(&part(&[3, 2]), SchurBasis::Elementary),
            poly(5, &[(&[1, 2], 1), (&[2, 0, 1], -1), (&[0, 1, 1], 1), (&[1, 0, 0, 1], -1)])
        );
        assert_eq!(
            schur_reflect(&part(&[1]), SchurBasis::Homogeneous),
            IsobaricPolynomial::variable(1)
        );
        assert_eq!(
            schur_reflect(&Partition::empty(), SchurBasis::Elementary),
            IsobaricPolynomial::one()
        );
    }

    #[test]
    fn determinant_routes_agree() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                assert_eq!(
                    schur_reflect(&lam, SchurBasis::Elementary),
                    schur_reflect(&lam, SchurBasis::Homogeneous),
                    "λ = {lam}"
                );
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(
            hook_reflect(4, 1).unwrap(),
            poly(4, &[(&[2, 1], -1), (&[0, 2], -1), (&[1, 0, 1], -1), (&[0, 0, 0, 1], -1)])
        );
        for n in 1..=6 {
            assert_eq!(hook_reflect(n, 0).unwrap(), crate::weights::gfp(n, n));
        }
        assert_eq!(hook_reflect(3, 2).unwrap(), IsobaricPolynomial::variable(3));
        assert!(hook_reflect(3, 3).is_err());
    }

    #[test]
    fn hooks_match_determinants() {
        for n in 1..=8usize {
            for r in 0..n {
                let lam = Partition::hook(n, r).unwrap();
                assert_eq!(
                    hook_reflect(n, r).unwrap(),
                    schur_reflect(&lam, SchurBasis::Elementary)
                );
            }
        }
    }

    #[test]
    fn hook_weight_patterns() {
        let w0 = hook_weight(0).vector(4).unwrap();
        assert_eq!(w0, WeightPattern::Ones.vector(4).unwrap());
        let w1 = hook_weight(1).vector(4).unwrap();
        assert_eq!(
            w1,
            WeightVector::new(vec![rat_int(0), rat_int(-1), rat_int(-1), rat_int(-1)])
        );
        let w2 = hook_weight(2).vector(4).unwrap();
        assert_eq!(
            w2,
            WeightVector::new(vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)])
        );
        // the detected weight of every hook reflect follows the pattern
        for n in 1..=8usize {
            for r in 0..n {
                let detected = detect_weight(&hook_reflect(n, r).unwrap());
                assert_eq!(detected, Some(hook_weight(r).vector(n).unwrap()), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn non_hooks_are_not_weighted() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                let detected = detect_weight(&schur_reflect(&lam, SchurBasis::Elementary));
                assert_eq!(detected.is_some(), lam.hook_form().is_some(), "λ = {lam}");
            }
        }
    }

    #[test]
    fn smallest_monomial_law() {
        // smallest monomial of Ŝ_λ is t^δ with partition λ′, coefficient (−1)^{n−λ₁}
        for n in 1..=8 {
            for lam in partitions_of(n) {
                let s = schur_reflect(&lam, SchurBasis::Elementary);
                let (alpha, coeff) = s.terms().next().unwrap();
                assert_eq!(Partition::from_exponent_vector(alpha), lam.conjugate());
                let expect = if (n - lam.parts()[0] as usize).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(coeff, &rat_int(expect));
            }
        }
    }

    #[test]
    fn hook_basis_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let w = WeightVector::new(vec![
            rat(rng.random_range(-9..=9), 3),
            rat(rng.random_range(-9..=9), 2),
        ]);
        let c = to_hook_basis(&w, 2).unwrap();
        assert_eq!(c[0], w.get(1).unwrap());
        assert_eq!(c[1], w.get(1).unwrap() - w.get(2).unwrap());

        // hook weights expand to a unit coordinate
        for n in 2..=6usize {
            for r in 0..n {
                let w = hook_weight(r).vector(n).unwrap();
                let c = to_hook_basis(&w, n).unwrap();
                for (i, ci) in c.iter().enumerate() {
                    assert_eq!(ci, &rat_int(if i == r { 1 } else { 0 }));
                }
            }
        }
        // ones recovers F_n: coordinates (1, 0, …, 0)
        for n in 1..=6usize {
            let c = to_hook_basis(&WeightPattern::Ones.vector(n).unwrap(), n).unwrap();
            assert_eq!(c[0], rat_int(1));
            assert!(c[1..].iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn character_table_small() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.entries(), &[vec![rat_int(1)]]);

        let t2 = character_table(2).unwrap();
        assert_eq!(t2.rows(), &[part(&[2]), part(&[1, 1])]);
        assert_eq!(t2.columns(), &[part(&[1, 1]), part(&[2])]);
        assert_eq!(t2.entries()[0], vec![rat_int(1), rat_int(1)]);
        assert_eq!(t2.entries()[1], vec![rat_int(1), rat_int(-1)]);

        // the classical table of Sym(3)
        let t3 = character_table(3).unwrap();
        assert_eq!(t3.entries()[0], vec![rat_int(1), rat_int(1), rat_int(1)]);
        assert_eq!(t3.entries()[1], vec![rat_int(2), rat_int(0), rat_int(-1)]);
        assert_eq!(t3.entries()[2], vec![rat_int(1), rat_int(-1), rat_int(1)]);

        assert!(character_table(8).is_err());
        assert!(character_table_with_bound(8, 8).is_ok());
    }

    #[test]
    fn first_row_is_trivial_character() {
        for n in 1..=6 {
            let t = character_table(n).unwrap();
            assert!(t.entries()[0].iter().all(|c| c == &rat_int(1)));
        }
    }
}
