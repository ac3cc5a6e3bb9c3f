//! Closed-form families of incidence scrolls, indexed by the smallest base
//! space: a line, a plane, or a three-space.
//!
//! These formulas are independent of the degeneration engine and are used
//! to cross-check it.

use serde::Serialize;

use crate::base::{is_nondegenerate, restrict_to_span, IncidenceBase};
use crate::error::{Result, ScrollError};

/// Binomial coefficient, zero whenever `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, t| acc * (n - t) / (t + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `{P^1, (n-1) P^(n-2)}`: rational normal scrolls.
    DirectrixLine,
    /// `{P^2, i P^(n-3), (n-2i) P^(n-2)}`.
    BasePlane,
    /// `{P^3, j P^(n-4), i P^(n-3), (n+1-3j-2i) P^(n-2)}`.
    BaseSolid,
}

impl Family {
    /// Dimension of the base space carrying the distinguished directrix.
    pub fn directrix_space(self) -> u32 {
        match self {
            Family::DirectrixLine => 1,
            Family::BasePlane => 2,
            Family::BaseSolid => 3,
        }
    }
}

/// Number of minimum directrix curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectrixCount {
    /// A one-dimensional family.
    Infinite,
    Finite(u32),
}

/// Invariants of the rational normal scroll `O + O(-e)` embedded by
/// `C_0 + (e + 1) f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineExtras {
    pub e: u32,
    pub deg_b: u32,
    pub min_directrix_count: DirectrixCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormRecord {
    pub family: Family,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    pub base: IncidenceBase,
    /// Base inside the span of the scroll when `base` is degenerate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted: Option<IncidenceBase>,
    pub degree: i64,
    pub genus: i64,
    pub directrix_degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extras: Option<LineExtras>,
}

impl ClosedFormRecord {
    pub fn is_degenerate(&self) -> bool {
        self.restricted.is_some()
    }

    /// The base the scroll actually lives on.
    pub fn effective_base(&self) -> &IncidenceBase {
        self.restricted.as_ref().unwrap_or(&self.base)
    }

    /// Position of the distinguished directrix space in `base`.
    pub fn directrix_position(&self) -> usize {
        self.base
            .position_of(self.family.directrix_space())
            .expect("family base contains its directrix space")
    }

    fn build(
        family: Family,
        n: u32,
        j: Option<u32>,
        i: Option<u32>,
        dims: Vec<u32>,
        invariants: (i64, i64, i64),
        extras: Option<LineExtras>,
    ) -> Result<Self> {
        let base = IncidenceBase::new(n, dims)?;
        let restricted = if is_nondegenerate(&base) {
            None
        } else {
            Some(restrict_to_span(&base)?)
        };
        let (degree, genus, directrix_degree) = invariants;
        Ok(Self {
            family,
            n,
            j,
            i,
            base,
            restricted,
            degree,
            genus,
            directrix_degree,
            extras,
        })
    }
}

fn repeat(dim: u32, count: u32) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(dim, count as usize)
}

/// Rational normal scroll of degree `n - 1` with a line as minimum directrix.
pub fn p1s(n: u32) -> Result<ClosedFormRecord> {
    if n < 3 {
        return Err(ScrollError::Domain(format!(
            "line family needs n >= 3, got {n}"
        )));
    }
    let dims: Vec<u32> = std::iter::once(1).chain(repeat(n - 2, n - 1)).collect();
    let extras = LineExtras {
        e: n.saturating_sub(3),
        deg_b: n - 2,
        min_directrix_count: if n == 3 {
            DirectrixCount::Infinite
        } else {
            DirectrixCount::Finite(1)
        },
    };
    ClosedFormRecord::build(
        Family::DirectrixLine,
        n,
        None,
        None,
        dims,
        (n as i64 - 1, 0, 1),
        Some(extras),
    )
}

/// Scrolls with a base plane and `i` spaces of dimension `n - 3`.
pub fn p2s(n: u32, i: u32) -> Result<ClosedFormRecord> {
    if n < 4 || 2 * i > n {
        return Err(ScrollError::Domain(format!(
            "plane family needs n >= 4 and 0 <= i <= n/2, got n={n}, i={i}"
        )));
    }
    let dims: Vec<u32> = std::iter::once(2)
        .chain(repeat(n - 3, i))
        .chain(repeat(n - 2, n - 2 * i))
        .collect();
    let (n_, i_) = (n as i64, i as i64);
    let degree = binomial(n_ - i_, 2) + i_ - 1;
    let genus = binomial(n_ - i_ - 2, 2);
    let directrix = n_ - i_ - 1;
    ClosedFormRecord::build(
        Family::BasePlane,
        n,
        None,
        Some(i),
        dims,
        (degree, genus, directrix),
        None,
    )
}

/// Scrolls with a base three-space, `j` spaces of dimension `n - 4` and `i`
/// of dimension `n - 3`.
///
/// With `k = n - i - 2j` the scroll has
/// `d = C(k+1, 3) - k + (i+j) k + j - 1`,
/// `g = C(k, 3) + C(k-1, 3) - 2k + (i+j)(k-2) + 4`,
/// and its directrix in the three-space has degree `C(k, 2) + i + j - 1`.
pub fn p3s(n: u32, j: u32, i: u32) -> Result<ClosedFormRecord> {
    if n < 5 || 3 * j > n + 1 || 3 * j + 2 * i > n + 1 {
        return Err(ScrollError::Domain(format!(
            "three-space family needs n >= 5, 3j <= n+1, 2i <= n+1-3j; got n={n}, j={j}, i={i}"
        )));
    }
    let dims: Vec<u32> = std::iter::once(3)
        .chain(repeat(n - 4, j))
        .chain(repeat(n - 3, i))
        .chain(repeat(n - 2, n + 1 - 3 * j - 2 * i))
        .collect();
    let (i_, j_) = (i as i64, j as i64);
    let k = n as i64 - i_ - 2 * j_;
    let degree = binomial(k + 1, 3) - k + (i_ + j_) * k + j_ - 1;
    let genus = binomial(k, 3) + binomial(k - 1, 3) - 2 * k + (i_ + j_) * (k - 2) + 4;
    let directrix = binomial(k, 2) + i_ + j_ - 1;
    ClosedFormRecord::build(
        Family::BaseSolid,
        n,
        Some(j),
        Some(i),
        dims,
        (degree, genus, directrix),
        None,
    )
}

/// All in-range plane-family parameters `(n, i)` for `n` in `ns`.
pub fn p2s_params(ns: std::ops::RangeInclusive<u32>) -> Vec<(u32, u32)> {
    ns.flat_map(|n| (0..=n / 2).map(move |i| (n, i)))
        .filter(|&(n, _)| n >= 4)
        .collect()
}

/// All in-range three-space-family parameters `(n, j, i)` for `n` in `ns`.
pub fn p3s_params(ns: std::ops::RangeInclusive<u32>) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in ns.filter(|&n| n >= 5) {
        for j in 0..=(n + 1) / 3 {
            for i in 0..=(n + 1 - 3 * j) / 2 {
                out.push((n, j, i));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u32, dims: &[u32]) -> IncidenceBase {
        IncidenceBase::new(n, dims.to_vec()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 3), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn line_family() {
        let r = p1s(3).unwrap();
        assert_eq!(r.base, b(3, &[1, 1, 1]));
        assert_eq!((r.degree, r.genus), (2, 0));
        let x = r.extras.unwrap();
        assert_eq!((x.e, x.deg_b), (0, 1));
        assert_eq!(x.min_directrix_count, DirectrixCount::Infinite);

        let x = p1s(5).unwrap().extras.unwrap();
        assert_eq!(
            (x.e, x.deg_b, x.min_directrix_count),
            (2, 3, DirectrixCount::Finite(1))
        );
        let r = p1s(9).unwrap();
        assert_eq!(r.degree, 8);
        assert_eq!(r.extras.unwrap().e, 6);
        assert_eq!(r.extras.unwrap().deg_b, 7);
        assert!(p1s(2).is_err());
    }

    #[test]
    fn plane_family() {
        let r = p2s(4, 0).unwrap();
        assert_eq!(r.base, b(4, &[2; 5]));
        assert_eq!((r.degree, r.genus, r.directrix_degree), (5, 1, 3));

        let r = p2s(7, 3).unwrap();
        assert_eq!(r.base, b(7, &[2, 4, 4, 4, 5]));
        assert_eq!((r.degree, r.genus, r.directrix_degree), (8, 1, 3));

        let r = p2s(4, 2).unwrap();
        assert!(r.is_degenerate());
        assert_eq!(r.effective_base(), &b(3, &[1, 1, 1]));
        assert_eq!((r.degree, r.genus), (2, 0));

        assert!(p2s(4, 3).is_err());
        assert!(p2s(3, 0).is_err());
    }

    #[test]
    fn solid_family() {
        let r = p3s(5, 0, 0).unwrap();
        assert_eq!(r.base, b(5, &[3; 7]));
        assert_eq!((r.degree, r.genus, r.directrix_degree), (14, 8, 9));

        let r = p3s(6, 0, 1).unwrap();
        assert_eq!(r.base, b(6, &[3, 3, 4, 4, 4, 4, 4]));
        assert_eq!((r.degree, r.genus, r.directrix_degree), (19, 11, 10));

        let r = p3s(7, 0, 4).unwrap();
        assert_eq!(r.base, b(7, &[3, 4, 4, 4, 4]));
        assert_eq!((r.degree, r.genus, r.directrix_degree), (12, 3, 6));

        assert!(p3s(5, 3, 0).is_err());
        assert!(p3s(5, 0, 4).is_err());
    }

    #[test]
    fn plane_genus_constraint() {
        for (n, i) in p2s_params(4..=30) {
            let r = p2s(n, i).unwrap();
            let (n, i) = (n as i64, i as i64);
            assert_eq!(2 * r.genus, (n - i - 2) * (n - i - 3));
        }
    }

    #[test]
    fn parameter_ranges() {
        assert_eq!(
            p2s_params(4..=5),
            vec![(4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (5, 2)]
        );
        // n = 5: j in 0..=2; i <= (6 - 3j)/2
        assert_eq!(p3s_params(5..=5).len(), 4 + 2 + 1);
    }
}
