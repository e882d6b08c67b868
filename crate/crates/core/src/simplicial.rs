//! Simplicial complexes as facet lists over integer vertices,
//! Stanley-Reisner translation, f/h-vector conversion, shelling
//! verification, and the shellable ball / polytope-boundary constructions.

use crate::configurations::{Configuration, Label, LabelKind};
use crate::error::{Error, Result};
use crate::monomials::{loim, Monomial, MonomialIdeal};
use crate::sequences::{binomial, is_o_sequence, is_si_sequence, si_params, HVector};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A simplicial complex: vertex set `0..n`, facets as bitsets. Facets are
/// deduplicated and non-maximal faces are dropped on construction, except
/// that facet *order* is preserved (it may carry a shelling).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    pub n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: Vec<u64>) -> Self {
        assert!(n <= 64, "vertex sets are capped at 64");
        let mut kept: Vec<u64> = Vec::new();
        for f in facets {
            debug_assert_eq!(f >> n, 0, "facet uses vertices outside 0..{n}");
            if kept.iter().any(|&g| g & f == f) {
                continue;
            }
            kept.retain(|&g| f & g != g);
            kept.push(f);
        }
        SimplicialComplex { n, facets: kept }
    }

    pub fn from_vertex_lists(n: usize, facets: &[Vec<usize>]) -> Self {
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect();
        SimplicialComplex::new(n, masks)
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_vertices(f)).collect()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Largest facet cardinality (0 for the void complex).
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    /// All faces, including the empty face, as bitsets.
    pub fn all_faces(&self) -> HashSet<u64> {
        let mut faces = HashSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        faces
    }
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

/// f-vector `(f_{-1} = 1, f_0, ..., f_{d-1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector(pub Vec<i64>);

impl FVector {
    /// Number of (k-1)-faces; index 0 is the empty face.
    pub fn get(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }
}

/// Face counts by exhaustive enumeration.
pub fn faces(complex: &SimplicialComplex) -> FVector {
    let d = complex.max_facet_size();
    let mut counts = vec![0i64; d + 1];
    for face in complex.all_faces() {
        counts[face.count_ones() as usize] += 1;
    }
    if complex.facets.is_empty() {
        // the void complex has no faces at all; keep f_{-1} = 0
        return FVector(vec![0]);
    }
    FVector(counts)
}

/// h from f via `sum h_j z^j = sum f_{j-1} z^j (1-z)^{d-j}`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.d() as i64;
    let h: Vec<i64> = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, j - i).unwrap() * f.get(i as usize)
                })
                .sum()
        })
        .collect();
    HVector::new(h)
}

/// f from h: `f_{k-1} = sum_i binom(d-i, k-i) h_i`.
pub fn h_to_f(h: &HVector, d: usize) -> Result<FVector> {
    if h.socle_degree() > d {
        return Err(Error::Invalid(format!(
            "h-vector {h} is longer than d + 1 = {}",
            d + 1
        )));
    }
    let f: Vec<i64> = (0..=d as i64)
        .map(|k| {
            (0..=k)
                .map(|i| binomial(d as i64 - i, k - i).unwrap() * h.get(i))
                .sum()
        })
        .collect();
    Ok(FVector(f))
}

/// Stanley-Reisner ideal of a complex: the squarefree monomial ideal of
/// minimal non-faces, over one variable per vertex.
pub fn sr_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.n;
    if n > 20 {
        return Err(Error::ScaleExceeded(format!("{n} vertices for sr_ideal")));
    }
    let faces = complex.all_faces();
    let mut gens: Vec<Monomial> = Vec::new();
    for mask in 0u64..(1 << n) {
        if faces.contains(&mask) {
            continue;
        }
        let minimal = (0..n)
            .filter(|v| mask >> v & 1 == 1)
            .all(|v| faces.contains(&(mask & !(1 << v))));
        if minimal {
            let exps: Vec<u32> = (0..n).map(|v| (mask >> v & 1) as u32).collect();
            gens.push(Monomial::new(exps));
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// The complex whose facets are the complements of the configuration's
/// component label sets within its universe.
pub fn complex_of(x: &Configuration) -> SimplicialComplex {
    let n = x.universe.size();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let facets: Vec<u64> = x
        .components
        .iter()
        .map(|comp| {
            let mut mask = 0u64;
            for l in comp.labels() {
                mask |= 1 << x.universe.position(*l).unwrap();
            }
            full & !mask
        })
        .collect();
    SimplicialComplex::new(n, facets)
}

/// Shelling check: for each facet after the first, the intersection with
/// the union of its predecessors must be pure of codimension one in the
/// facet, and nonempty.
pub fn is_shelling(complex: &SimplicialComplex, order: &[usize]) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure("shellings are defined for pure complexes".into()));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    assert!(
        sorted.len() == complex.facets.len() && sorted.iter().enumerate().all(|(i, &o)| i == o),
        "order must be a permutation of the facets"
    );
    let facets = &complex.facets;
    let d = complex.max_facet_size();
    for (pos, &i) in order.iter().enumerate().skip(1) {
        let fi = facets[i];
        let mut intersections: Vec<u64> = Vec::new();
        for &j in &order[..pos] {
            let inter = fi & facets[j];
            if intersections.iter().any(|&g| g & inter == inter) {
                continue;
            }
            intersections.retain(|&g| inter & g != g);
            intersections.push(inter);
        }
        if intersections.is_empty() {
            return Ok(false);
        }
        if !intersections.iter().all(|g| g.count_ones() as usize == d - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How to read the input h-vector of `billera_lee_ball`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BallMode {
    /// O-sequence input: a shellable (2t-1)-ball whose Stanley-Reisner ideal
    /// realizes the ACM configuration of the h-vector.
    Ball,
    /// SI-sequence input: the s-ball whose boundary is the simplicial
    /// polytope with the given h-vector.
    Polytope,
}

/// A shellable ball with its shelling order (facets are stored in that
/// order, so the order is 0, 1, 2, ...).
#[derive(Clone, Debug)]
pub struct ShellableBall {
    pub complex: SimplicialComplex,
    pub order: Vec<usize>,
}

/// The Billera-Lee construction.
///
/// Ball mode: vertex set of size c + 2t, one facet per LOIM monomial of the
/// O-sequence, in reverse-lex order.
///
/// Polytope mode: vertex set of size s + c split as V' (first c - 1 + 2t
/// vertices) and V''; the facets are the ball-mode facets of the
/// first-difference prefix g over V', each joined with all of V''.
pub fn billera_lee_ball(h: &HVector, mode: BallMode) -> Result<ShellableBall> {
    let facets: Vec<u64>;
    let n;
    match mode {
        BallMode::Ball => {
            if !is_o_sequence(h) {
                return Err(Error::NotOSequence(format!("{h}")));
            }
            let c = (h.get(1).max(1)) as usize;
            let t = h.socle_degree();
            n = c + 2 * t;
            facets = loim(h, c)?
                .iter()
                .map(|m| beta_mask(m, c, t))
                .collect::<Result<Vec<_>>>()?;
        }
        BallMode::Polytope => {
            if !is_si_sequence(h) {
                return Err(Error::NotSISequence(format!("{h}")));
            }
            let p = si_params(h)?;
            let c = p.c.max(2);
            let (s, t) = (p.s, p.t);
            n = s + c;
            let vprime = c - 1 + 2 * t;
            let vtail = (((1u128 << n) - (1u128 << vprime)) & u128::from(u64::MAX)) as u64;
            facets = loim(&p.g, c - 1)?
                .iter()
                .map(|m| beta_mask(m, c - 1, t).map(|b| b | vtail))
                .collect::<Result<Vec<_>>>()?;
        }
    }
    let order: Vec<usize> = (0..facets.len()).collect();
    Ok(ShellableBall {
        complex: SimplicialComplex::new(n, facets),
        order,
    })
}

/// Vertex bitset of beta_bar(m, c, t) under v_i <-> u_{i+1}.
fn beta_mask(m: &Monomial, c: usize, t: usize) -> Result<u64> {
    let set = crate::configurations::beta_bar(m, c, t)?;
    Ok(set.into_iter().fold(0u64, |mask, u| mask | (1 << (u - 1))))
}

/// Facets of the boundary: the ridges contained in exactly one facet.
pub fn boundary_complex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !complex.is_pure() {
        return Err(Error::NotPure("boundary of a non-pure complex".into()));
    }
    let mut ridge_count: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for &f in complex.facets() {
        for v in mask_vertices(f) {
            *ridge_count.entry(f & !(1u64 << v)).or_insert(0) += 1;
        }
    }
    let mut boundary: Vec<u64> = ridge_count
        .into_iter()
        .filter(|&(_, count)| count == 1)
        .map(|(ridge, _)| ridge)
        .collect();
    boundary.sort();
    Ok(SimplicialComplex::new(complex.n, boundary))
}

/// Report for the g-theorem validator.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopeValidation {
    pub is_si_sequence: bool,
    /// dimension of the would-be polytope
    pub d: usize,
    pub vertex_count: usize,
}

/// A sequence is the h-vector of a simplicial polytope iff it is an
/// SI-sequence; reports the polytope dimension and vertex count.
pub fn g_theorem_validate(h: &HVector) -> PolytopeValidation {
    let ok = is_si_sequence(h);
    let s = h.socle_degree();
    PolytopeValidation {
        is_si_sequence: ok,
        d: s,
        vertex_count: s + h.get(1).max(0) as usize,
    }
}

/// The variable instantiation used to compare the boundary complex of the
/// polytope-mode ball with the Gorenstein configuration: `M_i = x_{2i}`,
/// low `L_i = x_{2i+1}`, and the high L-range mapped decreasingly onto the
/// tail vertices.
pub fn boundary_variable_of_label(c: usize, s: usize, t: usize, label: Label) -> usize {
    let ci = c as i64;
    let ti = t as i64;
    let i = label.index as i64;
    match label.kind {
        LabelKind::M => (2 * i) as usize,
        LabelKind::L => {
            if i <= ti + (ci - 3).div_euclid(2) {
                (2 * i + 1) as usize
            } else {
                ((s + c) as i64 - 1 - i + ti + (ci - 1).div_euclid(2)) as usize
            }
        }
    }
}

/// JSON form `{"n": .., "facets": [[v, ..], ..]}`.
#[derive(Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            n: c.n,
            facets: c.facet_vertices(),
        }
    }
}

impl From<&ComplexJson> for SimplicialComplex {
    fn from(j: &ComplexJson) -> Self {
        SimplicialComplex::from_vertex_lists(j.n, &j.facets)
    }
}
