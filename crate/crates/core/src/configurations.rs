//! Label universes, the beta-bar/prime-component machinery, and the builders
//! for the maximal ACM configurations, the maximal Gorenstein configurations,
//! the arbitrary-h-vector ACM configurations and the arbitrary-SI Gorenstein
//! configurations, together with stick-figure and subspace-property checks.

use crate::error::{Error, Result};
use crate::monomials::{loim, Monomial, MonomialIdeal};
use crate::sequences::{is_o_sequence, si_params, HVector};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LabelKind {
    M,
    L,
}

/// A symbolic linear form `M_i` or `L_i`. Labels are totally ordered by
/// their u-position: `M_i <-> u_{2i+1}`, `L_i <-> u_{2i+2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label {
    pub kind: LabelKind,
    pub index: usize,
}

impl Label {
    pub fn m(index: usize) -> Self {
        Label { kind: LabelKind::M, index }
    }

    pub fn l(index: usize) -> Self {
        Label { kind: LabelKind::L, index }
    }

    /// 1-based u-index under the mu bijection.
    pub fn upos(&self) -> usize {
        match self.kind {
            LabelKind::M => 2 * self.index + 1,
            LabelKind::L => 2 * self.index + 2,
        }
    }

    /// Inverse of `upos`.
    pub fn from_upos(u: usize) -> Self {
        assert!(u >= 1);
        if u % 2 == 1 {
            Label::m((u - 1) / 2)
        } else {
            Label::l((u - 2) / 2)
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.upos().cmp(&other.upos())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LabelKind::M => write!(f, "M{}", self.index),
            LabelKind::L => write!(f, "L{}", self.index),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = match s.chars().next() {
            Some('M') => (LabelKind::M, &s[1..]),
            Some('L') => (LabelKind::L, &s[1..]),
            _ => return Err(Error::Invalid(format!("bad label {s:?}"))),
        };
        let index = rest
            .parse::<usize>()
            .map_err(|e| Error::Invalid(format!("bad label {s:?}: {e}")))?;
        Ok(Label { kind, index })
    }
}

/// Ambient label set `{M_0..M_{m_count-1}, L_0..L_{l_count-1}}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Universe {
    pub m_count: usize,
    pub l_count: usize,
}

impl Universe {
    pub fn size(&self) -> usize {
        self.m_count + self.l_count
    }

    pub fn contains(&self, label: Label) -> bool {
        match label.kind {
            LabelKind::M => label.index < self.m_count,
            LabelKind::L => label.index < self.l_count,
        }
    }

    /// All labels, sorted by u-position.
    pub fn labels(&self) -> Vec<Label> {
        let mut out: Vec<Label> = (0..self.m_count)
            .map(Label::m)
            .chain((0..self.l_count).map(Label::l))
            .collect();
        out.sort();
        out
    }

    /// Rank of the label in the u-position order; this is the variable index
    /// the label instantiates to.
    pub fn position(&self, label: Label) -> Option<usize> {
        if !self.contains(label) {
            return None;
        }
        Some(match label.kind {
            LabelKind::M => label.index + label.index.min(self.l_count),
            LabelKind::L => label.index + (label.index + 1).min(self.m_count),
        })
    }

    /// The set M_{c,t} used for the ACM configurations.
    pub fn acm(c: usize, t: usize) -> Universe {
        let c = c as i64;
        let t = t as i64;
        Universe {
            m_count: (t + (c - 1).div_euclid(2) + 1) as usize,
            l_count: (t + (c - 2).div_euclid(2) + 1) as usize,
        }
    }

    /// The set N_{c,s,t} used for the Gorenstein configurations.
    pub fn gorenstein(c: usize, s: usize, t: usize) -> Universe {
        let c = c as i64;
        let s = s as i64;
        let t = t as i64;
        Universe {
            m_count: (t + (c - 1).div_euclid(2) + 1) as usize,
            l_count: (s - t + (c - 2).div_euclid(2) + 1) as usize,
        }
    }
}

/// A variable-generated prime, recorded as its sorted set of labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeComponent {
    labels: Vec<Label>,
}

impl PrimeComponent {
    pub fn new(mut labels: Vec<Label>) -> Self {
        labels.sort();
        labels.dedup();
        PrimeComponent { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn contains_all(&self, other: &PrimeComponent) -> bool {
        other.labels.iter().all(|l| self.contains(*l))
    }

    pub fn with(&self, label: Label) -> PrimeComponent {
        let mut labels = self.labels.clone();
        labels.push(label);
        PrimeComponent::new(labels)
    }

    fn mask(&self, universe: &Universe) -> u128 {
        let mut m = 0u128;
        for l in &self.labels {
            let p = universe.position(*l).expect("component label outside universe");
            m |= 1u128 << p;
        }
        m
    }
}

impl fmt::Debug for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite union of linear subvarieties: a set of equal-size prime
/// components inside a label universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    pub codim: usize,
    pub s: Option<usize>,
    pub t: usize,
    pub universe: Universe,
    pub components: Vec<PrimeComponent>,
}

impl Configuration {
    pub fn new(
        codim: usize,
        s: Option<usize>,
        t: usize,
        universe: Universe,
        components: Vec<PrimeComponent>,
    ) -> Self {
        let mut components = components;
        components.sort();
        components.dedup();
        for comp in &components {
            debug_assert_eq!(comp.len(), codim, "component size != codim");
            debug_assert!(comp.labels().iter().all(|l| universe.contains(*l)));
        }
        Configuration { codim, s, t, universe, components }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains_component(&self, comp: &PrimeComponent) -> bool {
        self.components.binary_search(comp).is_ok()
    }

    pub fn component_set(&self) -> BTreeSet<PrimeComponent> {
        self.components.iter().cloned().collect()
    }

    /// Degree of the configuration: the number of components.
    pub fn degree(&self) -> usize {
        self.components.len()
    }

    /// Instantiate the labels as distinct variables (in u-position order)
    /// and intersect the component primes into a squarefree monomial ideal.
    /// The intersection is pairwise lcm-and-minimalize, on bitmasks.
    pub fn realize(&self) -> MonomialIdeal {
        let n = self.universe.size();
        assert!(n <= 64, "realization is capped at 64 labels");
        // current minimal generators as variable bitmasks; start at the unit
        let mut gens: Vec<u64> = vec![0];
        for comp in &self.components {
            let prime: Vec<u64> = comp
                .labels()
                .iter()
                .map(|l| 1u64 << self.universe.position(*l).unwrap())
                .collect();
            let mut next: Vec<u64> = Vec::with_capacity(gens.len() * prime.len());
            for &g in &gens {
                for &p in &prime {
                    next.push(g | p);
                }
            }
            next.sort_by_key(|m| (m.count_ones(), *m));
            next.dedup();
            let mut minimal: Vec<u64> = Vec::new();
            for m in next {
                if !minimal.iter().any(|&kept| m & kept == kept) {
                    minimal.push(m);
                }
            }
            gens = minimal;
        }
        let monomials: Vec<Monomial> = gens
            .into_iter()
            .map(|mask| Monomial::new((0..n).map(|v| (mask >> v & 1) as u32).collect()))
            .collect();
        MonomialIdeal::new(n, monomials)
    }
}

/// `beta_bar(m, c, t)`: the 2t-element set of u-indices attached to a
/// monomial of degree k <= t in `c` variables.
pub fn beta_bar(m: &Monomial, c: usize, t: usize) -> Result<BTreeSet<usize>> {
    assert_eq!(m.nvars(), c, "monomial context must have {c} variables");
    let k = m.degree() as usize;
    if k > t {
        return Err(Error::DegreeExceedsT { degree: k, t });
    }
    let mut set: BTreeSet<usize> = (1..=2 * (t - k)).collect();
    for (j, e) in m.factors().into_iter().enumerate() {
        let j = j + 1; // 1-based position in the factor list
        set.insert(e + 2 * (j + t - k) - 1);
        set.insert(e + 2 * (j + t - k));
    }
    debug_assert_eq!(set.len(), 2 * t);
    Ok(set)
}

/// The prime `p_{c,t}(m)`: mu-images of the complement of `beta_bar` in
/// `{u_1, ..., u_{c+2t}}`.
pub fn prime_component(m: &Monomial, c: usize, t: usize) -> Result<PrimeComponent> {
    let beta = beta_bar(m, c, t)?;
    let labels: Vec<Label> = (1..=c + 2 * t)
        .filter(|u| !beta.contains(u))
        .map(Label::from_upos)
        .collect();
    debug_assert_eq!(labels.len(), c);
    Ok(PrimeComponent::new(labels))
}

/// The ACM configuration `Z_{c,t}(h)` with prescribed h-vector: one component
/// per LOIM monomial.
pub fn build_z(h: &HVector, c: usize, t: usize) -> Result<Configuration> {
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(format!("{h}")));
    }
    if !h.is_zero() && h.socle_degree() > t {
        return Err(Error::DegreeExceedsT { degree: h.socle_degree(), t });
    }
    let monomials = loim(h, c)?;
    let components = monomials
        .iter()
        .map(|m| prime_component(m, c, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::new(c, None, t, Universe::acm(c, t), components))
}

/// Alternating index tuples `(K_{i_1}, ..., K_{i_len})` with kinds
/// alternating from `start`, the chain rule `M_a <= L_b`, `L_a < M_b`
/// between neighbours, and the last index bounded by `last_bound`.
fn alternating_tuples(start: LabelKind, len: usize, last_bound: i64) -> Vec<PrimeComponent> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(PrimeComponent::new(vec![]));
        return out;
    }
    if last_bound < 0 {
        return out;
    }
    let mut cur: Vec<Label> = Vec::with_capacity(len);
    fn rec(
        kind: LabelKind,
        lo: usize,
        remaining: usize,
        bound: usize,
        cur: &mut Vec<Label>,
        out: &mut Vec<PrimeComponent>,
    ) {
        if remaining == 0 {
            out.push(PrimeComponent::new(cur.clone()));
            return;
        }
        for i in lo..=bound {
            cur.push(Label { kind, index: i });
            let (next_kind, next_lo) = match kind {
                LabelKind::M => (LabelKind::L, i),
                LabelKind::L => (LabelKind::M, i + 1),
            };
            rec(next_kind, next_lo, remaining - 1, bound, cur, out);
            cur.pop();
        }
    }
    rec(start, 0, len, last_bound as usize, &mut cur, &mut out);
    out
}

/// The maximal ACM configuration `Z_{c,t}`.
pub fn build_z_max(c: usize, t: usize) -> Configuration {
    assert!(c >= 1);
    let bound = if c % 2 == 0 {
        t as i64 + (c as i64 - 2) / 2
    } else {
        t as i64 + (c as i64 - 1) / 2
    };
    let components = alternating_tuples(LabelKind::M, c, bound);
    Configuration::new(c, None, t, Universe::acm(c, t), components)
}

/// The maximal Gorenstein configuration `G_{c,s,t}` over `N_{c,s,t}`.
pub fn build_g_max(c: usize, s: usize, t: usize) -> Result<Configuration> {
    assert!(c >= 1);
    if s < 2 * t {
        return Err(Error::SocleTooSmall { s, twot: 2 * t });
    }
    let ci = c as i64;
    let si = s as i64;
    let ti = t as i64;
    let mut components: Vec<PrimeComponent> = Vec::new();
    if c % 2 == 0 {
        components.extend(alternating_tuples(LabelKind::M, c, ti + (ci - 2) / 2));
        components.extend(alternating_tuples(LabelKind::L, c, ti + (ci - 2) / 2));
        for prefix in alternating_tuples(LabelKind::M, c - 1, ti + (ci - 2) / 2) {
            for ic in (ti + ci / 2)..=(si - ti + (ci - 2) / 2) {
                components.push(prefix.with(Label::l(ic as usize)));
            }
        }
    } else {
        components.extend(alternating_tuples(LabelKind::M, c, ti + (ci - 1) / 2));
        components.extend(alternating_tuples(LabelKind::L, c, ti + (ci - 3).div_euclid(2)));
        for prefix in alternating_tuples(LabelKind::M, c - 1, ti + (ci - 3).div_euclid(2)) {
            for ic in (ti + (ci - 1) / 2)..=(si - ti + (ci - 3).div_euclid(2)) {
                components.push(prefix.with(Label::l(ic as usize)));
            }
        }
    }
    Ok(Configuration::new(
        c,
        Some(s),
        t,
        Universe::gorenstein(c, s, t),
        components,
    ))
}

/// `G'_{c,s,t}`: for odd c, `G_{c,s,t}` with `M_{t+(c-1)/2}` renamed to
/// `L_{s-t+(c-1)/2}`, so that its universe becomes `N_{c-1,s+1,t}`.
/// Unchanged for even c.
pub fn relabel_g_max(c: usize, s: usize, t: usize) -> Result<Configuration> {
    let g = build_g_max(c, s, t)?;
    if c % 2 == 0 {
        return Ok(g);
    }
    let from = Label::m(t + (c - 1) / 2);
    let to = Label::l(s - t + (c - 1) / 2);
    let components = g
        .components
        .iter()
        .map(|comp| {
            PrimeComponent::new(
                comp.labels()
                    .iter()
                    .map(|&l| if l == from { to } else { l })
                    .collect(),
            )
        })
        .collect();
    Ok(Configuration::new(
        c,
        Some(s),
        t,
        Universe::gorenstein(c - 1, s + 1, t),
        components,
    ))
}

/// The arbitrary-SI Gorenstein configuration `G_c(h)`: all c-element label
/// subsets of `N_{c-1,s+1,t}` containing exactly one component of
/// `Z_{c-1,t}(g)`, with `c = max(h_1, 2)`.
pub fn build_gorenstein(h: &HVector) -> Result<Configuration> {
    let p = si_params(h)?;
    let c = p.c.max(2);
    let z = build_z(&p.g, c - 1, p.t)?;
    let universe = Universe::gorenstein(c - 1, p.s + 1, p.t);
    debug_assert!(z
        .universe
        .labels()
        .iter()
        .all(|&l| universe.contains(l)));
    let mut candidates: BTreeSet<PrimeComponent> = BTreeSet::new();
    let labels = universe.labels();
    for p1 in &z.components {
        for &hlabel in &labels {
            if !p1.contains(hlabel) {
                candidates.insert(p1.with(hlabel));
            }
        }
    }
    let components: Vec<PrimeComponent> = candidates
        .into_iter()
        .filter(|cand| {
            z.components
                .iter()
                .filter(|p1| cand.contains_all(p1))
                .count()
                == 1
        })
        .collect();
    Ok(Configuration::new(c, Some(p.s), p.t, universe, components))
}

/// Residual `G \ Z` of a subconfiguration inside a generalized stick figure.
pub fn residual(g: &Configuration, z: &Configuration) -> Result<Configuration> {
    if g.universe != z.universe || g.codim != z.codim {
        return Err(Error::NotSubconfiguration(
            "universe or codimension mismatch".into(),
        ));
    }
    if !z.components.iter().all(|c| g.contains_component(c)) {
        return Err(Error::NotSubconfiguration(
            "Z has a component outside G".into(),
        ));
    }
    let components: Vec<PrimeComponent> = g
        .components
        .iter()
        .filter(|c| !z.contains_component(c))
        .cloned()
        .collect();
    Ok(Configuration::new(g.codim, g.s, g.t, g.universe, components))
}

/// Generalized stick figure test: no three distinct components may have
/// exactly c+1 distinct labels among them.
pub fn is_generalized_stick_figure(x: &Configuration) -> bool {
    find_stick_figure_violation(x).is_none()
}

/// First violating triple, if any.
pub fn find_stick_figure_violation(
    x: &Configuration,
) -> Option<(PrimeComponent, PrimeComponent, PrimeComponent)> {
    let c = x.codim as u32;
    let masks: Vec<u128> = x.components.iter().map(|comp| comp.mask(&x.universe)).collect();
    let n = masks.len();
    for i in 0..n {
        for j in i + 1..n {
            let ij = masks[i] | masks[j];
            // a triple with c+1 labels needs every pair within it to span
            // at most c+1 labels
            if ij.count_ones() > c + 1 {
                continue;
            }
            for k in j + 1..n {
                if (ij | masks[k]).count_ones() == c + 1 {
                    return Some((
                        x.components[i].clone(),
                        x.components[j].clone(),
                        x.components[k].clone(),
                    ));
                }
            }
        }
    }
    None
}

/// Prime colon semantics: `I : label` drops the components containing the
/// label. The universe is kept.
pub fn colon_by_label(x: &Configuration, label: Label) -> Configuration {
    let components: Vec<PrimeComponent> = x
        .components
        .iter()
        .filter(|c| !c.contains(label))
        .cloned()
        .collect();
    Configuration::new(x.codim, x.s, x.t, x.universe, components)
}

/// The shift `tau(u_i) = u_{i+1}`: `M_i -> L_i`, `L_i -> M_{i+1}`.
pub fn shift_tau(x: &Configuration, universe: Universe) -> Configuration {
    let components: Vec<PrimeComponent> = x
        .components
        .iter()
        .map(|comp| {
            PrimeComponent::new(
                comp.labels()
                    .iter()
                    .map(|l| Label::from_upos(l.upos() + 1))
                    .collect(),
            )
        })
        .collect();
    Configuration::new(x.codim, x.s, x.t, universe, components)
}

/// Report of the subspace-property verification for `build_gorenstein(h)`.
#[derive(Clone, Debug, Serialize)]
pub struct SubspaceReport {
    pub g_label: String,
    pub colon_identity: bool,
    /// initial degree a of (J:g)/J, from oracle Hilbert functions
    pub initial_degree: usize,
    pub reg: usize,
    pub expected_initial_degree: usize,
    pub passes: bool,
}

/// Verify the subspace property combinatorially: the colon identity on the
/// maximal configurations, and the initial degree of `(J:g)/J` for the
/// constructed Gorenstein configuration.
pub fn check_subspace_property(h: &HVector) -> Result<SubspaceReport> {
    let p = si_params(h)?;
    let c = p.c.max(2);
    let (s, t) = (p.s, p.t);
    // g is the top L of N_{c-1,s+1,t}
    let g_label = Label::l((s as i64 - t as i64 + (c as i64 - 1).div_euclid(2)) as usize);

    let big = build_g_max(c - 1, s + 1, t)?;
    let lhs = colon_by_label(&big, g_label);
    let rhs = build_g_max(c - 1, s, t)?;
    let colon_identity = lhs.component_set() == rhs.component_set();

    let j = build_gorenstein(h)?;
    let jg = colon_by_label(&j, g_label);
    let cutoff = s + 2;
    let dims_j = j.realize().standard_monomial_counts(cutoff);
    let dims_jg = jg.realize().standard_monomial_counts(cutoff);
    let initial_degree = (0..=cutoff)
        .find(|&d| dims_j[d] != dims_jg[d])
        .ok_or_else(|| Error::OracleDisagreement("(J:g)/J is zero up to the cutoff".into()))?;
    let reg = s + 1;
    let expected = s - t;
    let passes = colon_identity && initial_degree == expected && 2 * initial_degree >= reg - 1;
    Ok(SubspaceReport {
        g_label: g_label.to_string(),
        colon_identity,
        initial_degree,
        reg,
        expected_initial_degree: expected,
        passes,
    })
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Serialize, Deserialize)]
struct UniverseJson {
    #[serde(rename = "M")]
    m: usize,
    #[serde(rename = "L")]
    l: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    c: usize,
    s: Option<usize>,
    t: usize,
}

#[derive(Serialize, Deserialize)]
struct ConfigurationJson {
    params: ParamsJson,
    universe: UniverseJson,
    components: Vec<Vec<String>>,
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigurationJson {
            params: ParamsJson { c: self.codim, s: self.s, t: self.t },
            universe: UniverseJson { m: self.universe.m_count, l: self.universe.l_count },
            components: self
                .components
                .iter()
                .map(|comp| comp.labels().iter().map(|l| l.to_string()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ConfigurationJson::deserialize(deserializer)?;
        let components = raw
            .components
            .iter()
            .map(|labels| {
                labels
                    .iter()
                    .map(|s| Label::from_str(s))
                    .collect::<Result<Vec<_>>>()
                    .map(PrimeComponent::new)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let universe = Universe { m_count: raw.universe.m, l_count: raw.universe.l };
        for comp in &components {
            for l in comp.labels() {
                if !universe.contains(*l) {
                    return Err(serde::de::Error::custom(format!(
                        "label {l} outside the declared universe"
                    )));
                }
            }
            if comp.len() != raw.params.c {
                return Err(serde::de::Error::custom(format!(
                    "component {comp:?} has size {} but c = {}",
                    comp.len(),
                    raw.params.c
                )));
            }
        }
        Ok(Configuration::new(raw.params.c, raw.params.s, raw.params.t, universe, components))
    }
}

/// Plain-text export for computer-algebra systems: the ambient ring and the
/// intersection of variable-generated primes.
pub fn cas_export(x: &Configuration) -> String {
    let n = x.universe.size();
    let mut out = format!("R = QQ[x0..x{}];\n", n.saturating_sub(1));
    if x.components.is_empty() {
        out.push_str("I = ideal(1_R);\n");
        return out;
    }
    let primes: Vec<String> = x
        .components
        .iter()
        .map(|comp| {
            let vars: Vec<String> = comp
                .labels()
                .iter()
                .map(|l| format!("x{}", x.universe.position(*l).unwrap()))
                .collect();
            format!("ideal({})", vars.join(","))
        })
        .collect();
    if primes.len() == 1 {
        out.push_str(&format!("I = {};\n", primes[0]));
    } else {
        out.push_str(&format!("I = intersect(\n  {});\n", primes.join(",\n  ")));
    }
    out
}
