//! h-vector calculators: liaison arithmetic for geometric links, basic
//! double links, complete intersections, and the two-route h-vector of a
//! configuration.

use crate::configurations::Configuration;
use crate::error::{Error, Result};
use crate::sequences::{integrate, HVector};
use crate::simplicial::{complex_of, f_to_h, faces};

/// h-vector of the residual in a geometric link: `g'_i = c_{s-i} - g_{s-i}`
/// with `s` the socle degree of the (symmetric) linking h-vector.
pub fn linked_hvector(cvec: &HVector, gvec: &HVector) -> Result<HVector> {
    if !cvec.is_symmetric() {
        return Err(Error::NotSymmetric(format!("{cvec}")));
    }
    let s = cvec.socle_degree() as i64;
    if (0..=s).any(|i| gvec.get(i) > cvec.get(i)) || gvec.socle_degree() as i64 > s {
        return Err(Error::NotDominated(format!("g = {gvec} exceeds c = {cvec}")));
    }
    let gprime: Vec<i64> = (0..=s).map(|i| cvec.get(s - i) - gvec.get(s - i)).collect();
    Ok(HVector::new(gprime))
}

/// h-vector of the sum of the linked ideals: integrate
/// `d_i = g_i + g'_i - c_i`.
pub fn sum_linked_hvector(cvec: &HVector, gvec: &HVector) -> Result<HVector> {
    let gprime = linked_hvector(cvec, gvec)?;
    let s = cvec.socle_degree() as i64;
    let d: Vec<i64> = (0..=s)
        .map(|i| gvec.get(i) + gprime.get(i) - cvec.get(i))
        .collect();
    let result = integrate(&HVector::new(d));
    if result.entries().iter().any(|&e| e < 0) {
        return Err(Error::NegativeEntry(format!(
            "sum of linked ideals of c = {cvec}, g = {gvec} gives {result}"
        )));
    }
    Ok(result)
}

/// Hilbert-function arithmetic of a basic double link:
/// `t -> hI(t) - hI(t-d) + hJ(t-d)`, on raw sequences.
pub fn basic_double_link_hvector(h_i: &HVector, h_j: &HVector, d: usize) -> HVector {
    // inputs are Hilbert-function prefixes; evaluate only where both are known
    let top = (h_i.socle_degree()).max(h_j.socle_degree() + d) as i64;
    let out: Vec<i64> = (0..=top)
        .map(|t| h_i.get(t) - h_i.get(t - d as i64) + h_j.get(t - d as i64))
        .collect();
    HVector::new(out)
}

/// h-vector of a complete intersection: coefficients of
/// `prod_i (1 + z + ... + z^(d_i - 1))`.
pub fn ci_hvector(degrees: &[usize]) -> HVector {
    assert!(!degrees.is_empty(), "a complete intersection needs degrees");
    let mut coeffs = vec![1i64];
    for &d in degrees {
        assert!(d >= 1, "degrees are positive");
        let mut next = vec![0i64; coeffs.len() + d - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for j in 0..d {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    HVector::new(coeffs)
}

/// h-vector of a configuration, computed two independent ways which must
/// agree: standard-monomial counting of the realized ideal differenced down
/// to the Artinian reduction, and the f-to-h conversion of the associated
/// simplicial complex.
pub fn hvector_of(x: &Configuration) -> Result<HVector> {
    if x.is_empty() {
        return Ok(HVector::zero());
    }
    let nvars = x.universe.size();
    let dim = nvars - x.codim;

    // route 1: count and difference
    let ideal = x.realize();
    let cutoff = dim + 2;
    let mut window = crate::oracle::standard_monomials(&ideal, cutoff).dims;
    for _ in 0..dim {
        let mut prev = 0i64;
        for value in window.iter_mut() {
            let cur = *value;
            *value -= prev;
            prev = cur;
        }
    }
    let counted = HVector::new(window.clone());
    if counted.socle_degree() > dim || counted.entries().iter().any(|&e| e < 0) {
        return Err(Error::OracleDisagreement(format!(
            "differenced Hilbert function {counted} is not an h-vector; \
             the configuration is not arithmetically Cohen-Macaulay-consistent"
        )));
    }

    // route 2: Stanley-Reisner f-to-h
    let complex = complex_of(x);
    let from_faces = f_to_h(&faces(&complex));

    if counted != from_faces {
        return Err(Error::OracleDisagreement(format!(
            "standard-monomial route gives {counted}, face route gives {from_faces}"
        )));
    }
    Ok(counted)
}
