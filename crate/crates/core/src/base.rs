//! Bases of incidence scrolls: multisets of subspaces of `P^n` whose
//! special Schubert classes cut a curve out of `G(1, n)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Result, ScrollError};

/// Ambient dimension plus the dimensions of the base spaces, sorted ascending.
///
/// Hyperplanes impose no condition on lines and are dropped on construction,
/// so every stored dimension lies in `[0, ambient - 2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IncidenceBase {
    ambient: u32,
    dims: Vec<u32>,
}

impl IncidenceBase {
    pub fn new(ambient: u32, dims: impl Into<Vec<u32>>) -> Result<Self> {
        canonicalize(ambient, dims.into())
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `2n - 3`, the number of conditions that cut a curve out of `G(1, n)`.
    pub fn required_conditions(&self) -> u32 {
        2 * self.ambient - 3
    }

    /// Distinct dimensions with multiplicities, ascending.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &d in &self.dims {
            match out.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn contains_dim(&self, dim: u32) -> bool {
        self.dims.binary_search(&dim).is_ok()
    }

    /// Position of some space of dimension `dim`.
    pub fn position_of(&self, dim: u32) -> Option<usize> {
        self.dims.binary_search(&dim).ok()
    }

    fn require_is(&self) -> Result<()> {
        if satisfies_is(self) {
            Ok(())
        } else {
            Err(ScrollError::NotIncidence {
                conditions: conditions_count(self),
                required: self.required_conditions(),
            })
        }
    }

    fn pair(&self, i: usize, j: usize) -> Result<(u32, u32)> {
        if i == j || i >= self.dims.len() || j >= self.dims.len() {
            return Err(ScrollError::Domain(format!(
                "({i}, {j}) is not a pair of distinct positions in {self}"
            )));
        }
        Ok((self.dims[i], self.dims[j]))
    }

    fn others(&self, i: usize, j: usize) -> impl Iterator<Item = u32> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(move |&(k, _)| k != i && k != j)
            .map(|(_, &d)| d)
    }
}

impl fmt::Display for IncidenceBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} dims=", self.ambient)?;
        for (k, d) in self.dims.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for IncidenceBase {
    type Err = ScrollError;

    /// Parses `n=6 dims=2,3,3,4,4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || ScrollError::Parse(format!("expected `n=<N> dims=<d1,d2,...>`, got `{s}`"));
        let mut parts = s.split_whitespace();
        let ambient = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .ok_or_else(bad)?
            .parse::<u32>()
            .map_err(|_| bad())?;
        let dims = parts
            .next()
            .and_then(|p| p.strip_prefix("dims="))
            .ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        IncidenceBase::new(ambient, parse_dims(dims)?)
    }
}

/// Parses a comma-separated dimension list; the empty string is the empty list.
pub fn parse_dims(text: &str) -> Result<Vec<u32>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|d| {
            d.trim()
                .parse::<u32>()
                .map_err(|_| ScrollError::Parse(format!("bad dimension `{d}`")))
        })
        .collect()
}

/// Sort, drop hyperplanes, and reject spaces that do not fit in `P^ambient`.
pub fn canonicalize(ambient: u32, mut dims: Vec<u32>) -> Result<IncidenceBase> {
    if ambient < 2 {
        return Err(ScrollError::Domain(format!(
            "ambient P^{ambient} has no scrolls"
        )));
    }
    if let Some(&d) = dims.iter().find(|&&d| d >= ambient) {
        return Err(ScrollError::Domain(format!(
            "P^{d} is not a proper subspace of P^{ambient}"
        )));
    }
    dims.retain(|&d| d + 1 < ambient);
    dims.sort_unstable();
    Ok(IncidenceBase { ambient, dims })
}

/// Number of linear conditions the base imposes on `G(1, n)`.
pub fn conditions_count(base: &IncidenceBase) -> u32 {
    base.dims.iter().map(|&d| base.ambient - 1 - d).sum()
}

/// The incidence condition: the base cuts out a curve of lines.
pub fn satisfies_is(base: &IncidenceBase) -> bool {
    conditions_count(base) == base.required_conditions()
}

/// Every pair of base spaces spans at least a hyperplane.
pub fn is_nondegenerate(base: &IncidenceBase) -> bool {
    smallest_pair(base).is_none_or(|(_, _, sum)| sum + 1 >= base.ambient)
}

fn smallest_pair(base: &IncidenceBase) -> Option<(usize, usize, u32)> {
    // dims are sorted, so the first two positions carry the smallest sum
    (base.dims.len() >= 2).then(|| (0, 1, base.dims[0] + base.dims[1]))
}

/// Filters for [`enumerate_bases`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationFilter {
    pub nondegenerate_only: bool,
    pub contains_dim: Option<u32>,
}

/// Every base of `P^n` satisfying the incidence condition, in lexicographic
/// order of the sorted dimension lists.
///
/// A base is a multiset of condition counts `n - 1 - dim` in `[1, n - 1]`
/// summing to `2n - 3`; those are generated as partitions with
/// non-increasing parts, i.e. non-decreasing dimensions.
pub fn enumerate_bases(n: u32, filter: EnumerationFilter) -> Result<Vec<IncidenceBase>> {
    if n < 3 {
        return Err(ScrollError::Domain(format!(
            "enumeration needs n >= 3, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut dims = Vec::new();
    extend_bases(n, 0, 2 * n - 3, &mut dims, &mut |dims: &[u32]| {
        let base = IncidenceBase {
            ambient: n,
            dims: dims.to_vec(),
        };
        let keep = if filter.nondegenerate_only {
            base.dims[0] > 0 && is_nondegenerate(&base)
        } else {
            true
        };
        if keep && filter.contains_dim.is_none_or(|d| base.contains_dim(d)) {
            out.push(base);
        }
    });
    out.sort();
    Ok(out)
}

fn extend_bases(
    n: u32,
    min_dim: u32,
    remaining: u32,
    dims: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        emit(dims);
        return;
    }
    for d in min_dim..=n - 2 {
        let cost = n - 1 - d;
        if cost > remaining {
            continue;
        }
        dims.push(d);
        extend_bases(n, d, remaining - cost, dims, emit);
        dims.pop();
    }
}

/// The two components of a join degeneration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinResult {
    /// Same ambient; the pair replaced by its intersection `P^m`.
    pub dot: IncidenceBase,
    /// Inside the hyperplane holding the pair; the others cut by it.
    pub ddot: IncidenceBase,
    pub m: u32,
}

/// Move positions `i` and `j` into a common hyperplane, meeting in `P^m`.
pub fn join(base: &IncidenceBase, i: usize, j: usize) -> Result<JoinResult> {
    base.require_is()?;
    let (a, b) = base.pair(i, j)?;
    let n = base.ambient;
    if a + b + 1 < n {
        return Err(ScrollError::NoSpecialization(a, b, n));
    }
    let m = a + b + 1 - n;

    let mut dot_dims: Vec<u32> = base.others(i, j).collect();
    dot_dims.push(m);
    let dot = canonicalize(n, dot_dims)?;

    let mut ddot_dims: Vec<u32> = Vec::with_capacity(base.len());
    for d in base.others(i, j) {
        let Some(cut) = d.checked_sub(1) else {
            return Err(ScrollError::Domain(format!(
                "a point of {base} does not lie in the joining hyperplane"
            )));
        };
        ddot_dims.push(cut);
    }
    ddot_dims.extend([a, b]);
    let ddot = canonicalize(n - 1, ddot_dims)?;

    for child in [&dot, &ddot] {
        if !satisfies_is(child) {
            return Err(ScrollError::Invariant(format!(
                "join of {base} produced {child} violating the incidence condition"
            )));
        }
    }
    Ok(JoinResult { dot, ddot, m })
}

/// Inverse of a join with `m = 0`: lift into `P^(n+1)`, keeping the pair and
/// raising every other space by one.
pub fn separate(base: &IncidenceBase, i: usize, j: usize) -> Result<IncidenceBase> {
    let (a, b) = base.pair(i, j)?;
    if a + b != base.ambient {
        return Err(ScrollError::Domain(format!(
            "separate needs dimensions summing to {}, got P^{a} and P^{b}",
            base.ambient
        )));
    }
    let mut dims: Vec<u32> = base.others(i, j).map(|d| d + 1).collect();
    dims.extend([a, b]);
    let lifted = canonicalize(base.ambient + 1, dims)?;
    if satisfies_is(base) && !satisfies_is(&lifted) {
        return Err(ScrollError::Invariant(format!(
            "separate of {base} produced {lifted} violating the incidence condition"
        )));
    }
    Ok(lifted)
}

/// Re-express a degenerate base inside the span of its scroll.
///
/// While two spaces `P^a`, `P^b` with `a + b <= n - 2` exist, every line
/// meeting both lies in their span `P^(a+b+1)`; the remaining spaces are
/// replaced by their intersection with that span. The pair with the
/// smallest dimension sum is processed first.
pub fn restrict_to_span(base: &IncidenceBase) -> Result<IncidenceBase> {
    base.require_is()?;
    let mut current = base.clone();
    while let Some((i, j, sum)) = smallest_pair(&current) {
        if sum + 2 > current.ambient {
            break;
        }
        let span = sum + 1;
        let shift = current.ambient - span;
        let mut dims = vec![current.dims[i], current.dims[j]];
        for d in current.others(i, j) {
            let Some(cut) = d.checked_sub(shift) else {
                return Err(ScrollError::EmptyIncidence { dim: d, span });
            };
            dims.push(cut);
        }
        current = canonicalize(span, dims)?;
        if !satisfies_is(&current) {
            return Err(ScrollError::Invariant(format!(
                "restriction of {base} produced {current} violating the incidence condition"
            )));
        }
    }
    Ok(current)
}
