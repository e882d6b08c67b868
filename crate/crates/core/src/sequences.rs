//! Integer-sequence machinery: Macaulay growth bounds, O-sequences,
//! SI-sequences, differencing/integration and parameter extraction.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite integer sequence indexed from degree 0.
///
/// Trailing zeros are trimmed on construction, so `(1,2,0)` and `(1,2)`
/// compare equal. The zero vector is the single entry `(0)`. Entries may be
/// negative: first differences of h-vectors pass through this type.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector {
    entries: Vec<i64>,
}

impl HVector {
    pub fn new(entries: Vec<i64>) -> Self {
        let mut entries = entries;
        while entries.len() > 1 && *entries.last().unwrap() == 0 {
            entries.pop();
        }
        if entries.is_empty() {
            entries.push(0);
        }
        HVector { entries }
    }

    pub fn zero() -> Self {
        HVector { entries: vec![0] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries == [0]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry in degree `i`; zero outside the stored range.
    pub fn get(&self, i: i64) -> i64 {
        if i < 0 || i as usize >= self.entries.len() {
            0
        } else {
            self.entries[i as usize]
        }
    }

    /// Index of the last nonzero entry (0 for the zero vector).
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Invalid(format!("bad h-vector entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Invalid("empty h-vector".into()));
        }
        Ok(HVector::new(entries))
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl From<Vec<i64>> for HVector {
    fn from(v: Vec<i64>) -> Self {
        HVector::new(v)
    }
}

/// Parameters of an SI-sequence: codimension `c = h_1`, socle degree `s`,
/// flat-start degree `t = min {i | h_i >= h_{i+1}}`, and the first-difference
/// prefix `g = (1, h_1 - 1, ..., h_t - h_{t-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIParams {
    pub c: usize,
    pub s: usize,
    pub t: usize,
    pub g: HVector,
}

/// Checked binomial coefficient.
pub fn binomial(n: i64, k: i64) -> Result<i64> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow("binomial"))?
            / (i + 1);
    }
    Ok(acc)
}

/// Maximal admissible value of `h_{degree+1}` given `h_degree = value`, via
/// the unique `degree`-indexed binomial expansion of `value` with top and
/// bottom incremented.
pub fn macaulay_bound(value: i64, degree: i64) -> Result<i64> {
    assert!(degree >= 1, "macaulay_bound needs degree >= 1");
    if value <= 0 {
        return Ok(0);
    }
    let mut rest = value;
    let mut d = degree;
    let mut bound: i64 = 0;
    while rest > 0 && d >= 1 {
        // largest a with binom(a, d) <= rest
        let mut a = d;
        while binomial(a + 1, d)? <= rest {
            a += 1;
        }
        rest -= binomial(a, d)?;
        bound = bound
            .checked_add(binomial(a + 1, d + 1)?)
            .ok_or(Error::Overflow("macaulay_bound"))?;
        d -= 1;
    }
    debug_assert_eq!(rest, 0, "binomial expansion of {value} in degree {degree}");
    Ok(bound)
}

/// O-sequence test: `h_0 = 1` (or the zero vector) and Macaulay growth
/// `h_{i+1} <= h_i^{<i>}` for all i >= 1.
pub fn is_o_sequence(h: &HVector) -> bool {
    if h.is_zero() {
        return true;
    }
    let e = h.entries();
    if e[0] != 1 || e.iter().any(|&x| x < 0) {
        return false;
    }
    for i in 1..e.len().saturating_sub(1) {
        match macaulay_bound(e[i], i as i64) {
            Ok(b) => {
                if e[i + 1] > b {
                    return false;
                }
            }
            // bound overflowed 64 bits, so the (64-bit) entry cannot exceed it
            Err(_) => continue,
        }
    }
    true
}

/// SI-sequence test: symmetric, and the first difference of the first half
/// is an O-sequence.
pub fn is_si_sequence(h: &HVector) -> bool {
    if h.is_zero() || !h.is_symmetric() {
        return false;
    }
    let e = h.entries();
    if e[0] != 1 || e.iter().any(|&x| x <= 0) {
        return false;
    }
    let s = h.socle_degree();
    let half: Vec<i64> = (0..=(s / 2) as i64)
        .map(|i| h.get(i) - h.get(i - 1))
        .collect();
    is_o_sequence(&HVector::new(half))
}

/// First difference `(h_0, h_1 - h_0, ..., -h_s)`; one entry longer than the
/// input so that `integrate` inverts it.
pub fn difference(h: &HVector) -> HVector {
    let s = h.socle_degree() as i64;
    let d: Vec<i64> = (0..=s + 1).map(|i| h.get(i) - h.get(i - 1)).collect();
    HVector::new(d)
}

/// Running partial sums, truncated at the last nonzero partial sum.
pub fn integrate(d: &HVector) -> HVector {
    let mut acc = 0i64;
    let sums: Vec<i64> = d
        .entries()
        .iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect();
    HVector::new(sums)
}

/// Extract `(c, s, t, g)` from an SI-sequence.
pub fn si_params(h: &HVector) -> Result<SIParams> {
    if !is_si_sequence(h) {
        return Err(Error::NotSISequence(format!("{h}")));
    }
    let s = h.socle_degree();
    let c = h.get(1).max(0) as usize;
    let t = (0..=s as i64)
        .find(|&i| h.get(i) >= h.get(i + 1))
        .expect("finite sequence has a flat-start degree") as usize;
    let g: Vec<i64> = (0..=t as i64).map(|i| h.get(i) - h.get(i - 1)).collect();
    debug_assert!(s >= 2 * t);
    Ok(SIParams {
        c,
        s,
        t,
        g: HVector::new(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(v: &[i64]) -> HVector {
        HVector::new(v.to_vec())
    }

    #[test]
    fn macaulay_bound_examples() {
        assert_eq!(macaulay_bound(3, 1).unwrap(), 6);
        assert_eq!(macaulay_bound(2, 1).unwrap(), 3);
        assert_eq!(macaulay_bound(6, 2).unwrap(), 10);
        assert_eq!(macaulay_bound(0, 5).unwrap(), 0);
        assert_eq!(macaulay_bound(1, 4).unwrap(), 1);
        assert_eq!(macaulay_bound(10, 2).unwrap(), 20);
        assert_eq!(macaulay_bound(4, 2).unwrap(), 5);
    }

    #[test]
    fn o_sequence_examples() {
        assert!(is_o_sequence(&hv(&[1, 3, 6, 10])));
        assert!(!is_o_sequence(&hv(&[1, 2, 4])));
        assert!(is_o_sequence(&hv(&[1, 3, 6, 4])));
        assert!(is_o_sequence(&HVector::zero()));
        assert!(!is_o_sequence(&hv(&[2, 1])));
        // internal zero forces zero tail
        assert!(!is_o_sequence(&hv(&[1, 2, 0, 1])));
    }

    #[test]
    fn si_sequence_examples() {
        assert!(!is_si_sequence(&hv(&[1, 3, 6, 6, 7, 6, 6, 3, 1])));
        assert!(is_si_sequence(&hv(&[1, 4, 10, 14, 10, 4, 1])));
        assert!(!is_si_sequence(&hv(&[1, 2])));
        assert!(is_si_sequence(&hv(&[1])));
        assert!(is_si_sequence(&hv(&[1, 1])));
        assert!(is_si_sequence(&hv(&[1, 3, 5, 3, 1])));
        assert!(is_si_sequence(&hv(&[1, 4, 10, 20, 10, 4, 1])));
        assert!(!is_si_sequence(&hv(&[1, 4, 10, 21, 10, 4, 1])));
    }

    #[test]
    fn difference_and_integrate() {
        assert_eq!(integrate(&hv(&[1, 0, -1])), hv(&[1, 1]));
        assert_eq!(difference(&hv(&[1, 1])), hv(&[1, 0, -1]));
        assert_eq!(difference(&hv(&[1, 2])), hv(&[1, 1, -2]));
        assert_eq!(integrate(&difference(&hv(&[1, 4, 10, 14, 10, 4, 1]))), hv(&[1, 4, 10, 14, 10, 4, 1]));
        assert_eq!(difference(&HVector::zero()), HVector::zero());
        assert_eq!(integrate(&HVector::zero()), HVector::zero());
    }

    #[test]
    fn si_params_examples() {
        let p = si_params(&hv(&[1, 4, 4, 1])).unwrap();
        assert_eq!((p.c, p.s, p.t), (4, 3, 1));
        assert_eq!(p.g, hv(&[1, 3]));

        let p = si_params(&hv(&[1, 3, 5, 3, 1])).unwrap();
        assert_eq!((p.c, p.s, p.t), (3, 4, 2));
        assert_eq!(p.g, hv(&[1, 2, 2]));

        let p = si_params(&hv(&[1, 1])).unwrap();
        assert_eq!((p.c, p.s, p.t), (1, 1, 0));
        assert_eq!(p.g, hv(&[1]));

        assert!(si_params(&hv(&[1, 2])).is_err());
    }

    #[test]
    fn trimming_is_canonical() {
        assert_eq!(hv(&[1, 2, 0]), hv(&[1, 2]));
        assert_eq!(hv(&[0, 0]), HVector::zero());
        assert_eq!(HVector::parse("1,4,10,14,10,4,1").unwrap(), hv(&[1, 4, 10, 14, 10, 4, 1]));
    }
}
