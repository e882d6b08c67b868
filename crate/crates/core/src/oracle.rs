//! Independent brute-force verification: standard-monomial counting,
//! monomial-ideal algebra, graded Betti numbers as Koszul homology over the
//! exact rationals, and Reisner's Cohen-Macaulay criterion.
//!
//! Everything here is definitional. Rank computations use fraction-free
//! elimination over the integers, falling back to arbitrary precision when
//! 128-bit arithmetic overflows.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::monomials::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::Zero;

/// Dimensions of the graded pieces of a quotient ring, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimensionTable {
    pub dims: Vec<i64>,
}

impl GradedDimensionTable {
    pub fn get(&self, d: usize) -> i64 {
        self.dims.get(d).copied().unwrap_or(0)
    }
}

/// Degree-by-degree count of monomials outside the ideal, up to `cutoff`.
pub fn standard_monomials(ideal: &MonomialIdeal, cutoff: usize) -> GradedDimensionTable {
    GradedDimensionTable {
        dims: ideal.standard_monomial_counts(cutoff),
    }
}

/// Intersection of two monomial ideals: pairwise lcms, minimalized.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch(a.nvars(), b.nvars()));
    }
    let mut gens = Vec::with_capacity(a.gens().len() * b.gens().len());
    for g in a.gens() {
        for h in b.gens() {
            let lcm: Vec<u32> = g
                .exps()
                .iter()
                .zip(h.exps())
                .map(|(x, y)| *x.max(y))
                .collect();
            gens.push(Monomial::new(lcm));
        }
    }
    Ok(MonomialIdeal::new(a.nvars(), gens))
}

/// Sum of two monomial ideals.
pub fn sum(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch(a.nvars(), b.nvars()));
    }
    let gens = a.gens().iter().chain(b.gens()).cloned().collect();
    Ok(MonomialIdeal::new(a.nvars(), gens))
}

/// Colon by a single variable.
pub fn colon_var(a: &MonomialIdeal, var: usize) -> MonomialIdeal {
    let gens = a
        .gens()
        .iter()
        .map(|g| {
            let mut exps = g.exps().to_vec();
            if exps[var] > 0 {
                exps[var] -= 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(a.nvars(), gens)
}

/// Equality of monomial ideals (minimal generator sets are unique).
pub fn equals(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch(a.nvars(), b.nvars()));
    }
    Ok(a == b)
}

// ---------------------------------------------------------------------------
// exact rank

/// Rank by one-step Bareiss elimination; `None` on 128-bit overflow.
fn rank_i128(mut mat: Vec<Vec<i128>>) -> Option<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = mat[0].len();
    let mut prev: i128 = 1;
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t1 = mat[r][c].checked_mul(mat[i][j])?;
                let t2 = mat[i][c].checked_mul(mat[r][j])?;
                mat[i][j] = t1.checked_sub(t2)? / prev;
            }
            mat[i][c] = 0;
        }
        prev = mat[r][c];
        r += 1;
    }
    Some(r)
}

fn rank_bigint(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                mat[i][j] = num / &prev;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[r][c].clone();
        r += 1;
    }
    r
}

/// Exact rank over the rationals of a small integer matrix.
pub fn exact_rank(mat: &[Vec<i64>]) -> usize {
    let as_i128: Vec<Vec<i128>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    match rank_i128(as_i128) {
        Some(r) => r,
        None => {
            let as_big: Vec<Vec<BigInt>> = mat
                .iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            rank_bigint(as_big)
        }
    }
}

// ---------------------------------------------------------------------------
// Koszul homology

/// Graded Betti numbers of R/I as Koszul homology, one fine-degree slice at
/// a time: `beta_{i,j} = dim H_i(K(x_1..x_n) (x) R/I)_j`. The differential
/// preserves the exponent vector, so each slice is a finite complex with
/// basis `{S subset of supp(a) : x^(a - e_S) not in I}`.
pub fn koszul_betti(ideal: &MonomialIdeal, cutoff: usize) -> Result<BettiTable> {
    let n = ideal.nvars();
    if n > 10 || cutoff > 12 {
        return Err(Error::ScaleExceeded(format!(
            "koszul_betti is capped at 10 variables and cutoff 12 (got {n}, {cutoff})"
        )));
    }
    let mut table = BettiTable::new();
    let mut exps = vec![0u32; n];
    koszul_rec(ideal, 0, cutoff as u32, &mut exps, &mut table);
    Ok(table)
}

fn koszul_rec(
    ideal: &MonomialIdeal,
    pos: usize,
    budget: u32,
    exps: &mut Vec<u32>,
    table: &mut BettiTable,
) {
    if pos == exps.len() {
        koszul_slice(ideal, exps, table);
        return;
    }
    for e in 0..=budget {
        exps[pos] = e;
        koszul_rec(ideal, pos + 1, budget - e, exps, table);
    }
    exps[pos] = 0;
}

/// Homology of the Koszul slice in one fine degree.
fn koszul_slice(ideal: &MonomialIdeal, a: &[u32], table: &mut BettiTable) {
    let active: Vec<usize> = (0..a.len()).filter(|&v| a[v] > 0).collect();
    let na = active.len();
    let j: u32 = a.iter().sum();

    // standard[s] = true when x^(a - e_S) lies outside the ideal,
    // S encoded as a bitmask over `active`
    let mut standard = vec![false; 1usize << na];
    let mut any = false;
    let mut trial = a.to_vec();
    for s in 0..(1usize << na) {
        for (bit, &v) in active.iter().enumerate() {
            trial[v] = a[v] - ((s >> bit) as u32 & 1);
        }
        let m = Monomial::new(trial.clone());
        if !ideal.contains(&m) {
            standard[s] = true;
            any = true;
        }
    }
    if !any {
        return;
    }

    // bases grouped by homological index |S|
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); na + 2];
    let mut index: Vec<usize> = vec![usize::MAX; 1 << na];
    for s in 0..(1usize << na) {
        if standard[s] {
            let i = s.count_ones() as usize;
            index[s] = basis[i].len();
            basis[i].push(s);
        }
    }

    // ranks of the slice differentials d_i : C_i -> C_{i-1}
    let mut ranks = vec![0usize; na + 2];
    for i in 1..=na {
        if basis[i].is_empty() || basis[i - 1].is_empty() {
            continue;
        }
        let mut mat = vec![vec![0i64; basis[i].len()]; basis[i - 1].len()];
        for (col, &s) in basis[i].iter().enumerate() {
            let mut sign = 1i64;
            for bit in 0..na {
                if s >> bit & 1 == 1 {
                    let target = s & !(1 << bit);
                    if standard[target] {
                        mat[index[target]][col] = sign;
                    }
                    sign = -sign;
                }
            }
        }
        ranks[i] = exact_rank(&mat);
    }

    for i in 0..=na {
        let dim = basis[i].len() as i64;
        if dim == 0 {
            continue;
        }
        let homology = dim - ranks[i] as i64 - ranks[i + 1] as i64;
        debug_assert!(homology >= 0);
        table.add(i, j as usize, homology);
    }
}

// ---------------------------------------------------------------------------
// Reisner criterion

/// Reisner's criterion over the rationals: the Stanley-Reisner ring is
/// Cohen-Macaulay iff for every face F, the reduced homology of its link
/// vanishes below the dimension of the link.
pub fn reisner_cm(complex: &SimplicialComplex) -> Result<bool> {
    if complex.n > 24 {
        return Err(Error::ScaleExceeded(format!(
            "reisner_cm is capped at 24 vertices (got {})",
            complex.n
        )));
    }
    let faces: Vec<u64> = {
        let mut v: Vec<u64> = complex.all_faces().into_iter().collect();
        v.sort();
        v
    };
    if faces.len() > 200_000 {
        return Err(Error::ScaleExceeded(format!("{} faces", faces.len())));
    }
    if faces.is_empty() {
        return Ok(true);
    }
    for &f in &faces {
        let link: Vec<u64> = faces
            .iter()
            .filter(|&&u| u & f == f)
            .map(|&u| u & !f)
            .collect();
        if !link_is_connected_below_top(&link) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reduced rational homology of the complex (given as its full face list,
/// including the empty face) vanishes below top dimension.
fn link_is_connected_below_top(link_faces: &[u64]) -> bool {
    let dim_link: i64 = link_faces
        .iter()
        .map(|f| f.count_ones() as i64 - 1)
        .max()
        .unwrap_or(-1);
    if dim_link <= 0 {
        // nothing below the top dimension: H_tilde_{-1} vanishes whenever a
        // vertex exists, and the {empty-face} link has nothing below -1
        return true;
    }
    // chains by dimension, including C_{-1} for the empty face
    let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); (dim_link + 2) as usize];
    for &f in link_faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    for chain in &mut by_dim {
        chain.sort();
    }
    // rank of each boundary map d_k : C_k -> C_{k-1} (index k+1 in by_dim)
    let mut ranks = vec![0usize; (dim_link + 2) as usize];
    for k in 0..=dim_link as usize {
        let rows = &by_dim[k]; // faces of dimension k-1
        let cols = &by_dim[k + 1]; // faces of dimension k
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut mat = vec![vec![0i64; cols.len()]; rows.len()];
        for (col, &face) in cols.iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..64u32 {
                if face >> v & 1 == 1 {
                    let sub = face & !(1u64 << v);
                    if let Ok(row) = rows.binary_search(&sub) {
                        mat[row][col] = sign;
                    }
                    sign = -sign;
                }
            }
        }
        ranks[k] = exact_rank(&mat);
    }
    // reduced homology in dimensions k = 0 .. dim_link - 1
    for k in 0..dim_link as usize {
        let dim_ck = by_dim[k + 1].len() as i64;
        let h = dim_ck - ranks[k] as i64 - ranks[k + 1] as i64;
        debug_assert!(h >= 0);
        if h != 0 {
            return false;
        }
    }
    true
}
