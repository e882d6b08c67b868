//! Monomials in a fixed ordered variable context, lex-segment ideals and
//! their z1-decomposition, the exponent-reversing bijection phi, and
//! lexicographic order ideals of monomials (LOIMs).

use crate::error::{Error, Result};
use crate::sequences::{is_o_sequence, HVector};
use std::cmp::Ordering;
use std::fmt;

/// Exponent-vector monomial of fixed context length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Factor list `y_{e_1} ... y_{e_k}`, 1-based indices ascending.
    pub fn factors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(i + 1);
            }
        }
        out
    }

    /// Degree-lexicographic order, variables x_1 > x_2 > ... .
    pub fn cmp_deglex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other))
    }

    /// Pure lexicographic order: the first nonzero coordinate of the
    /// exponent difference decides.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Reverse lexicographic order: the last nonzero coordinate of the
    /// exponent difference decides, negative meaning smaller. Totally
    /// orders all monomials, across degrees.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn render(&self, letter: char) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{letter}{}", i + 1)),
                _ => parts.push(format!("{letter}{}^{e}", i + 1)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('z'))
    }
}

/// All degree-d monomials in `nvars` variables, lex descending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = rem;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=rem).rev() {
            exps[pos] = e;
            rec(exps, pos + 1, rem - e, out);
        }
        exps[pos] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(&mut exps, 0, d, &mut out);
    out
}

/// Monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set; redundant generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator in wrong variable context");
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.cmp_deglex(b));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        // degree ascending, lex descending within a degree
        minimal.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.cmp_lex(b).reverse())
        });
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![] }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal::new(nvars, vec![Monomial::one(nvars)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, deg-lex descending.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Artinian test: a pure power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
        }) || self.is_unit()
    }

    pub fn initial_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Counts of standard monomials (monomials outside the ideal) in each
    /// degree 0..=cutoff, by pruned enumeration.
    pub fn standard_monomial_counts(&self, cutoff: usize) -> Vec<i64> {
        let mut counts = vec![0i64; cutoff + 1];
        if self.is_unit() {
            return counts;
        }
        if self.nvars == 0 {
            counts[0] = 1;
            return counts;
        }
        let mut exps = vec![0u32; self.nvars];
        // divisibility can only start holding once the generator's support
        // is fully assigned
        let gen_last_var: Vec<usize> = self
            .gens
            .iter()
            .map(|g| g.exps().iter().rposition(|&e| e > 0).unwrap_or(0))
            .collect();
        self.count_rec(0, cutoff as u32, &mut exps, &gen_last_var, &mut counts);
        counts
    }

    fn count_rec(
        &self,
        pos: usize,
        budget: u32,
        exps: &mut Vec<u32>,
        gen_last_var: &[usize],
        counts: &mut Vec<i64>,
    ) {
        if pos == self.nvars {
            let d: u32 = exps.iter().sum();
            counts[d as usize] += 1;
            return;
        }
        for e in 0..=budget {
            exps[pos] = e;
            let blocked = self.gens.iter().zip(gen_last_var).any(|(g, &last)| {
                last <= pos && g.exps()[..=pos].iter().zip(exps.iter()).all(|(a, b)| a <= b)
            });
            if !blocked {
                self.count_rec(pos + 1, budget - e, exps, gen_last_var, counts);
            }
        }
        exps[pos] = 0;
    }

    /// h-vector of the quotient; the ideal must be Artinian.
    pub fn quotient_hvector(&self) -> Result<HVector> {
        if !self.is_artinian() {
            return Err(Error::NotLexSegment(format!(
                "quotient by a non-Artinian ideal has no finite h-vector ({} vars)",
                self.nvars
            )));
        }
        // standard monomials vanish beyond sum of (max pure-power exponents)
        let cap: usize = (0..self.nvars)
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| g.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
                    .map(|g| g.degree() as usize)
                    .min()
                    .unwrap_or(1)
                    .saturating_sub(1)
            })
            .sum();
        let counts = self.standard_monomial_counts(cap);
        Ok(HVector::new(counts))
    }

    /// Lex-segment test: in every degree up to the maximal generator degree,
    /// membership is upward closed in the lexicographic order.
    pub fn is_lex_segment(&self) -> bool {
        let maxd = self.max_gen_degree();
        for d in 1..=maxd {
            let mut seen_gap = false;
            for m in monomials_of_degree(self.nvars, d) {
                if self.contains(&m) {
                    if seen_gap {
                        return false;
                    }
                } else {
                    seen_gap = true;
                }
            }
        }
        true
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render('z')).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The unique decomposition `J = sum_j z1^j I_j` of an Artinian lex-segment
/// ideal, with the h-vectors of the (c-1)-variable quotients by the parts.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub alpha: usize,
    pub parts: Vec<MonomialIdeal>,
    pub hparts: Vec<HVector>,
}

/// The Artinian lex-segment ideal in `c` variables with standard-monomial
/// count `h_i` in each degree.
pub fn lex_segment_ideal(h: &HVector, c: usize) -> Result<MonomialIdeal> {
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(format!("{h}")));
    }
    if h.is_zero() {
        return Ok(MonomialIdeal::unit(c));
    }
    if h.get(1) > c as i64 {
        return Err(Error::CodimTooSmall(format!(
            "h_1 = {} exceeds the variable count {c}",
            h.get(1)
        )));
    }
    let v = h.socle_degree() as u32;
    let mut all_gens: Vec<Monomial> = Vec::new();
    let mut prev_degree_ideal: Vec<Monomial> = Vec::new();
    for d in 1..=v + 1 {
        let monos = monomials_of_degree(c, d);
        let total = monos.len() as i64;
        let keep = h.get(d as i64);
        let in_ideal = total - keep;
        if in_ideal < 0 {
            return Err(Error::CodimTooSmall(format!(
                "h_{d} = {keep} exceeds the monomial count {total} in {c} variables"
            )));
        }
        let segment: Vec<Monomial> = monos.into_iter().take(in_ideal as usize).collect();
        // Macaulay consistency: the span of the previous degree must sit
        // inside the chosen segment
        for m in &prev_degree_ideal {
            for i in 0..c {
                let up = m.mul(&Monomial::var(c, i));
                if !segment.contains(&up) {
                    return Err(Error::NotOSequence(format!(
                        "{h} admits no lex-segment ideal in {c} variables"
                    )));
                }
            }
        }
        all_gens.extend(segment.iter().cloned());
        prev_degree_ideal = segment;
    }
    Ok(MonomialIdeal::new(c, all_gens))
}

/// Decompose an Artinian lex-segment ideal as `sum_j z1^j I_j`.
pub fn decompose(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let c = ideal.nvars();
    if c == 0 || !ideal.is_artinian() || !ideal.is_lex_segment() {
        return Err(Error::NotLexSegment(format!("{ideal:?}")));
    }
    let alpha = ideal.initial_degree().unwrap() as usize;
    let mut parts = Vec::with_capacity(alpha);
    let mut hparts = Vec::with_capacity(alpha);
    for j in 0..alpha {
        let gens: Vec<Monomial> = ideal
            .gens()
            .iter()
            .filter(|g| g.exps()[0] as usize <= j)
            .map(|g| Monomial::new(g.exps()[1..].to_vec()))
            .collect();
        let part = MonomialIdeal::new(c - 1, gens);
        if !part.is_lex_segment() {
            return Err(Error::NotLexSegment(format!(
                "decomposition part I_{j} = {part:?} is not lex-segment"
            )));
        }
        let hp = part.quotient_hvector()?;
        parts.push(part);
        hparts.push(hp);
    }
    // nesting and the regularity gap a(I_j) > reg(I_{j+1})
    for j in 0..alpha.saturating_sub(1) {
        if !parts[j + 1].contains_ideal(&parts[j]) {
            return Err(Error::NotLexSegment(format!(
                "decomposition parts not nested at {j}"
            )));
        }
        // the zero ideal has infinite initial degree
        let a_j = parts[j]
            .initial_degree()
            .map(|d| d as usize)
            .unwrap_or(usize::MAX);
        let reg_next = if parts[j + 1].is_unit() {
            0
        } else {
            hparts[j + 1].socle_degree() + 1
        };
        if a_j <= reg_next {
            return Err(Error::NotLexSegment(format!(
                "regularity gap fails at part {j}: a = {a_j}, reg = {reg_next}"
            )));
        }
    }
    Ok(Decomposition { alpha, parts, hparts })
}

/// Self-test hook for the decomposition: `h(s) = sum_j hparts[j](s - j)`.
pub fn decomposition_hvector_check(h: &HVector, d: &Decomposition) -> bool {
    let top = h.socle_degree() as i64 + d.alpha as i64 + 1;
    (0..=top).all(|s| {
        let sum: i64 = d
            .hparts
            .iter()
            .enumerate()
            .map(|(j, hp)| hp.get(s - j as i64))
            .sum();
        sum == h.get(s)
    })
}

/// Exponent-reversing bijection between the z- and y-contexts:
/// `phi(z1^a1 ... zc^ac) = y1^ac ... yc^a1`.
pub fn phi(m: &Monomial) -> Monomial {
    let mut exps = m.exps().to_vec();
    exps.reverse();
    Monomial::new(exps)
}

/// The lexicographic order ideal of monomials of `h` in `c` variables: the
/// smallest `h_i` degree-i monomials under reverse lex, listed ascending in
/// the global reverse-lex order.
pub fn loim(h: &HVector, c: usize) -> Result<Vec<Monomial>> {
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(format!("{h}")));
    }
    if h.get(1) > c as i64 {
        return Err(Error::CodimTooSmall(format!(
            "h_1 = {} exceeds the variable count {c}",
            h.get(1)
        )));
    }
    let mut out = Vec::new();
    if h.is_zero() {
        return Ok(out);
    }
    for d in 0..=h.socle_degree() as u32 {
        let mut monos = monomials_of_degree(c, d);
        monos.sort_by(|a, b| a.cmp_revlex(b));
        let count = h.get(d as i64) as usize;
        debug_assert!(count <= monos.len());
        out.extend(monos.into_iter().take(count));
    }
    out.sort_by(|a, b| a.cmp_revlex(b));
    Ok(out)
}
