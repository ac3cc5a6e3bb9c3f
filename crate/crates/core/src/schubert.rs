//! Schubert calculus on Grassmannians of projective subspaces.
//!
//! A Schubert class of `G(l, n)` is written `w(a_0, ..., a_l)` with
//! `0 <= a_0 < ... < a_l <= n`; its dimension is `sum(a_i) - l(l+1)/2`.
//! The special class `w(h, n)` is the locus of `l`-planes meeting a fixed
//! `P^h`, of codimension `n - l - h`. Products with special classes are
//! expanded with Pieri's rule, and every other product in the crate is a
//! fold of those.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Result, ScrollError};
use crate::scalar::Coefficient;

/// The Grassmannian `G(l, n)` of `l`-planes in `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GrassmannSpec {
    l: u32,
    n: u32,
}

impl GrassmannSpec {
    pub fn new(l: u32, n: u32) -> Result<Self> {
        if l >= n {
            return Err(ScrollError::Domain(format!(
                "G({l},{n}) requires 0 <= l < n"
            )));
        }
        Ok(Self { l, n })
    }

    /// `G(1, n)`, the Grassmannian of lines.
    pub fn lines(n: u32) -> Result<Self> {
        Self::new(1, n)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(l + 1)(n - l)`.
    pub fn dim(&self) -> usize {
        ((self.l + 1) * (self.n - self.l)) as usize
    }

    /// `w(n - l, ..., n)`, the class of the whole Grassmannian.
    pub fn fundamental_class(&self) -> SchubertIndex {
        SchubertIndex((self.n - self.l..=self.n).collect())
    }

    /// `w(0, 1, ..., l)`, the class of a single `l`-plane.
    pub fn point_class(&self) -> SchubertIndex {
        SchubertIndex((0..=self.l).collect())
    }

    /// Check that `a` is a Schubert index of this Grassmannian.
    pub fn index(&self, a: &[u32]) -> Result<SchubertIndex> {
        let idx = SchubertIndex::new(a.to_vec())?;
        self.validate(&idx)?;
        Ok(idx)
    }

    pub fn validate(&self, idx: &SchubertIndex) -> Result<()> {
        if idx.0.len() != (self.l + 1) as usize {
            return Err(ScrollError::Domain(format!(
                "{idx} has {} entries, G({},{}) needs {}",
                idx.0.len(),
                self.l,
                self.n,
                self.l + 1
            )));
        }
        if idx.0.last().is_some_and(|&top| top > self.n) {
            return Err(ScrollError::Domain(format!(
                "{idx} exceeds the ambient P^{}",
                self.n
            )));
        }
        Ok(())
    }

    /// Dimension of the Schubert variety `idx` (assumed valid).
    pub fn dimension_of(&self, idx: &SchubertIndex) -> usize {
        let l = self.l as usize;
        idx.0.iter().map(|&a| a as usize).sum::<usize>() - l * (l + 1) / 2
    }

    pub fn codimension_of(&self, idx: &SchubertIndex) -> usize {
        self.dim() - self.dimension_of(idx)
    }

    /// Codimension `n - l - h` of the special class `w(h, n)`.
    pub fn special_codimension(&self, h: u32) -> Result<usize> {
        if h + self.l > self.n {
            return Err(ScrollError::Domain(format!(
                "special class w({h},{}) needs h <= n - l = {}",
                self.n,
                self.n - self.l
            )));
        }
        Ok((self.n - self.l - h) as usize)
    }

    /// Multiply the fundamental class by the special classes `hs`, in order.
    ///
    /// Valid for any `l`; each `h` must satisfy `0 <= h <= n - l`.
    pub fn special_product<C: Coefficient>(&self, hs: &[u32]) -> Result<CycleSum<C>> {
        let mut acc = CycleSum::from_index(*self, self.fundamental_class())?;
        for &h in hs {
            acc = multiply_sum(&acc, h)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for GrassmannSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.l, self.n)
    }
}

/// A basis element `w(a_0, ..., a_l)`; always strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchubertIndex(Vec<u32>);

impl SchubertIndex {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.is_empty() {
            return Err(ScrollError::Domain("empty Schubert index".into()));
        }
        if a.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ScrollError::Domain(format!(
                "Schubert index {a:?} is not strictly increasing"
            )));
        }
        Ok(Self(a))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("w(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Codimension `n - 1 - r` of the class of lines meeting a `P^r` in `P^n`.
pub fn codimension(spec: GrassmannSpec, r: u32) -> Result<u32> {
    if spec.l != 1 {
        return Err(ScrollError::Domain(format!(
            "codimension of a special line class needs l = 1, got {spec}"
        )));
    }
    if r + 1 > spec.n {
        return Err(ScrollError::Domain(format!(
            "P^{r} is not a proper subspace of P^{}",
            spec.n
        )));
    }
    Ok(spec.n - 1 - r)
}

/// Integer combination of Schubert classes of one Grassmannian, all of the
/// same dimension. Terms are kept in lexicographic order of their indices.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleSum<C> {
    spec: GrassmannSpec,
    terms: BTreeMap<SchubertIndex, C>,
}

impl<C: Coefficient> CycleSum<C> {
    pub fn zero(spec: GrassmannSpec) -> Self {
        Self {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_index(spec: GrassmannSpec, idx: SchubertIndex) -> Result<Self> {
        let mut sum = Self::zero(spec);
        sum.add_term(idx, C::one())?;
        Ok(sum)
    }

    pub fn spec(&self) -> GrassmannSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dimension shared by every term, `None` for the zero sum.
    pub fn dimension(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| self.spec.dimension_of(k))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchubertIndex, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coeff * idx`, dropping the term if it cancels.
    pub fn add_term(&mut self, idx: SchubertIndex, coeff: C) -> Result<()> {
        self.spec.validate(&idx)?;
        if let Some(dim) = self.dimension() {
            let other = self.spec.dimension_of(&idx);
            if other != dim {
                return Err(ScrollError::Invariant(format!(
                    "mixing dimension {other} term {idx} into a dimension {dim} sum"
                )));
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&idx) {
            Some(old) => {
                let total = old + coeff;
                if !total.is_zero() {
                    self.terms.insert(idx, total);
                }
            }
            None => {
                self.terms.insert(idx, coeff);
            }
        }
        Ok(())
    }

    pub fn coefficient_of(&self, idx: &SchubertIndex) -> C {
        self.terms.get(idx).cloned().unwrap_or_else(C::zero)
    }

    /// Parse the `c*w(a0,a1) + ...` text form (or `0`).
    pub fn parse(spec: GrassmannSpec, text: &str) -> Result<Self> {
        let mut sum = Self::zero(spec);
        let text = text.trim();
        if text == "0" {
            return Ok(sum);
        }
        for term in text.split(" + ") {
            let (coeff, rest) = term
                .trim()
                .split_once("*w(")
                .ok_or_else(|| ScrollError::Parse(format!("bad term `{term}`")))?;
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| ScrollError::Parse(format!("bad term `{term}`")))?;
            let coeff: C = coeff
                .parse()
                .map_err(|_| ScrollError::Parse(format!("bad coefficient `{coeff}`")))?;
            let a = inner
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| ScrollError::Parse(format!("bad index `{inner}`: {e}")))?;
            sum.add_term(SchubertIndex::new(a)?, coeff)?;
        }
        Ok(sum)
    }
}

impl<C: Coefficient> fmt::Display for CycleSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{idx}")?;
        }
        Ok(())
    }
}

/// All indices `b` with `0 <= b_0 <= a_0 < b_1 <= a_1 < ... < b_l <= a_l`
/// and `sum(b) = sum(a) - (n - l - h)`.
pub fn pieri_terms(spec: GrassmannSpec, idx: &SchubertIndex, h: u32) -> Result<Vec<SchubertIndex>> {
    spec.validate(idx)?;
    let drop = spec.special_codimension(h)? as u32;
    let a = idx.entries();
    let total: u32 = a.iter().sum();
    let Some(target) = total.checked_sub(drop) else {
        return Ok(Vec::new());
    };

    // suffix_max[k] = largest possible sum of b_k..b_l
    let mut suffix_max = vec![0u32; a.len() + 1];
    for k in (0..a.len()).rev() {
        suffix_max[k] = suffix_max[k + 1] + a[k];
    }

    let mut out = Vec::new();
    let mut b = Vec::with_capacity(a.len());
    fill_pieri(a, &suffix_max, 0, target, &mut b, &mut out);
    Ok(out)
}

fn fill_pieri(
    a: &[u32],
    suffix_max: &[u32],
    k: usize,
    remaining: u32,
    b: &mut Vec<u32>,
    out: &mut Vec<SchubertIndex>,
) {
    if k == a.len() {
        if remaining == 0 {
            out.push(SchubertIndex(b.clone()));
        }
        return;
    }
    let lo = if k == 0 { 0 } else { a[k - 1] + 1 };
    for bk in lo..=a[k] {
        if bk > remaining {
            break;
        }
        let rest = remaining - bk;
        if rest > suffix_max[k + 1] {
            continue;
        }
        b.push(bk);
        fill_pieri(a, suffix_max, k + 1, rest, b, out);
        b.pop();
    }
}

/// `w(a) * w(h, n)` by Pieri's rule; every coefficient is one.
pub fn pieri_multiply<C: Coefficient>(
    spec: GrassmannSpec,
    idx: &SchubertIndex,
    h: u32,
) -> Result<CycleSum<C>> {
    let mut sum = CycleSum::zero(spec);
    for b in pieri_terms(spec, idx, h)? {
        sum.add_term(b, C::one())?;
    }
    Ok(sum)
}

/// Linear extension of [`pieri_multiply`] to a whole cycle sum.
pub fn multiply_sum<C: Coefficient>(sum: &CycleSum<C>, h: u32) -> Result<CycleSum<C>> {
    let spec = sum.spec();
    let mut dims = sum.terms().map(|(idx, _)| spec.dimension_of(idx));
    if let Some(first) = dims.next() {
        if dims.any(|d| d != first) {
            return Err(ScrollError::Invariant(
                "cycle sum is not homogeneous".into(),
            ));
        }
    }
    let mut out = CycleSum::zero(spec);
    for (idx, coeff) in sum.terms() {
        for b in pieri_terms(spec, idx, h)? {
            out.add_term(b, coeff.clone())?;
        }
    }
    Ok(out)
}

/// Product of the special line classes `w(h, n)`, `h` in `hs`, in `G(1, n)`.
pub fn product_of_specials<C: Coefficient>(spec: GrassmannSpec, hs: &[u32]) -> Result<CycleSum<C>> {
    if spec.l != 1 {
        return Err(ScrollError::Domain(format!(
            "product_of_specials is defined on G(1,n), got {spec}"
        )));
    }
    if let Some(&h) = hs.iter().find(|&&h| h + 2 > spec.n) {
        return Err(ScrollError::Domain(format!(
            "w({h},{}) imposes no condition; specials must lie in [0, {}]",
            spec.n,
            spec.n.saturating_sub(2)
        )));
    }
    spec.special_product(hs)
}

pub fn coefficient_of<C: Coefficient>(sum: &CycleSum<C>, idx: &SchubertIndex) -> C {
    sum.coefficient_of(idx)
}

/// Degree of a zero-dimensional product of special line classes.
pub fn intersection_number<C: Coefficient>(spec: GrassmannSpec, hs: &[u32]) -> Result<C> {
    let mut total = 0usize;
    for &h in hs {
        total += spec.special_codimension(h)?;
    }
    if total != spec.dim() {
        return Err(ScrollError::Dimension {
            expected: spec.dim(),
            found: total,
        });
    }
    let product = product_of_specials::<C>(spec, hs)?;
    Ok(product.coefficient_of(&spec.point_class()))
}
