//! Degree, genus, directrices and speciality of incidence scrolls.
//!
//! The degree is read off the Schubert product of the base. The genus comes
//! from repeatedly degenerating the scroll: two base spaces are pushed into
//! a common hyperplane, the scroll breaks into two incidence scrolls with
//! `kappa` common generators, and
//!
//! ```text
//! d = d1 + d2,    g = g1 + g2 + kappa - 1.
//! ```
//!
//! Degenerate components are first restricted to their span. The recursion
//! ends at plane pencils, which have degree one and genus zero.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::base::{
    is_nondegenerate, join, restrict_to_span, satisfies_is, IncidenceBase, JoinResult,
};
use crate::error::{Result, ScrollError};
use crate::scalar::to_i64;
use crate::schubert::{intersection_number, product_of_specials, GrassmannSpec, SchubertIndex};

fn require_is(base: &IncidenceBase) -> Result<()> {
    if satisfies_is(base) {
        Ok(())
    } else {
        Err(ScrollError::NotIncidence {
            conditions: crate::base::conditions_count(base),
            required: base.required_conditions(),
        })
    }
}

/// Coefficient `d` in `w(n_1, n) ... w(n_r, n) = d w(0, 2)`.
pub fn degree(base: &IncidenceBase) -> Result<i64> {
    require_is(base)?;
    let spec = GrassmannSpec::lines(base.ambient())?;
    let product = product_of_specials::<BigInt>(spec, base.dims())?;
    let pencil = SchubertIndex::new(vec![0, 2])?;
    to_i64(&product.coefficient_of(&pencil))
}

/// Number of generators shared by the two components of the join at `(i, j)`.
///
/// They are the lines of the joining hyperplane `P^(n-1)` through the common
/// `P^m` that meet every other base space, each of which the hyperplane cuts
/// in one dimension less.
pub fn kappa(base: &IncidenceBase, i: usize, j: usize) -> Result<i64> {
    let JoinResult { m, .. } = join(base, i, j)?;
    let n = base.ambient();
    let mut specials = vec![m];
    for (k, &d) in base.dims().iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let cut = d.checked_sub(1).ok_or_else(|| {
            ScrollError::Domain(format!("a point of {base} misses the joining hyperplane"))
        })?;
        specials.push(cut);
    }
    let hyperplane = GrassmannSpec::lines(n - 1)?;
    let codim: usize = specials.iter().map(|&h| (n - 2 - h) as usize).sum();
    if codim != hyperplane.dim() {
        return Err(ScrollError::Invariant(format!(
            "common generators of {base} at ({i}, {j}) have codimension {codim}"
        )));
    }
    to_i64(&intersection_number::<BigInt>(hyperplane, &specials)?)
}

/// Degree of the section the scroll cuts on the base space at `which`.
///
/// Lines of the scroll through a point of that `P^a` sweep it; meeting a
/// general hyperplane of it replaces `w(a, n)` by `w(a - 1, n)`.
pub fn directrix_degree(base: &IncidenceBase, which: usize) -> Result<i64> {
    require_is(base)?;
    let a = *base
        .dims()
        .get(which)
        .ok_or_else(|| ScrollError::Domain(format!("no base space at position {which}")))?;
    if a == 0 {
        return Err(ScrollError::Domain(
            "a point carries no directrix curve".into(),
        ));
    }
    let mut specials = base.dims().to_vec();
    specials[which] = a - 1;
    let spec = GrassmannSpec::lines(base.ambient())?;
    to_i64(&intersection_number::<BigInt>(spec, &specials)?)
}

/// `h1 = n - d + 2g - 1` for a linearly normal scroll `R^d_g` spanning `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Speciality {
    pub h1: i64,
    pub special: bool,
    /// Set when `h1 < 0`, i.e. the scroll cannot be linearly normal.
    pub anomalous: bool,
}

pub fn speciality(n: u32, d: i64, g: i64) -> Speciality {
    let h1 = n as i64 - d + 2 * g - 1;
    Speciality {
        h1,
        special: h1 > 0,
        anomalous: h1 < 0,
    }
}

/// How a node of the degeneration witness was resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "action", rename_all = "snake_case")]
pub enum Action {
    /// Lines through a point in a plane.
    Pencil,
    /// Degenerate base re-expressed inside its span (single child).
    Restrict,
    /// Children are the `dot` and `ddot` components, in that order.
    Join {
        pair: (u32, u32),
        m: u32,
        kappa: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerationNode {
    #[serde(flatten)]
    pub base: IncidenceBase,
    pub degree: i64,
    pub genus: i64,
    #[serde(flatten)]
    pub action: Action,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Arc<DegenerationNode>>,
}

impl DegenerationNode {
    /// Visit every node, parents before children.
    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a DegenerationNode)) {
        visit(self);
        for child in &self.children {
            child.walk(visit);
        }
    }
}

/// One section curve of a report: the base space, its degree, its genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DirectrixEntry {
    pub space_dim: u32,
    pub curve_degree: i64,
    pub curve_genus: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScrollReport {
    #[serde(flatten)]
    pub base: IncidenceBase,
    pub span: u32,
    pub degree: i64,
    pub genus: i64,
    pub h1: i64,
    pub special: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub anomalous: bool,
    pub directrix: Vec<DirectrixEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Arc<DegenerationNode>>,
}

impl ScrollReport {
    pub fn is_degenerate(&self) -> bool {
        self.span != self.base.ambient()
    }

    /// `R^d_g` label of the scroll.
    pub fn label(&self) -> String {
        format!("R^{}_{} in P^{}", self.degree, self.genus, self.span)
    }

    pub fn directrix_on(&self, dim: u32) -> Option<&DirectrixEntry> {
        self.directrix.iter().find(|e| e.space_dim == dim)
    }
}

/// Outcome of degenerating at one specific pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub pair: (u32, u32),
    pub m: u32,
    pub kappa: i64,
    pub dot: (i64, i64),
    pub ddot: (i64, i64),
}

impl PairOutcome {
    pub fn degree(&self) -> i64 {
        self.dot.0 + self.ddot.0
    }

    pub fn genus(&self) -> i64 {
        self.dot.1 + self.ddot.1 + self.kappa - 1
    }
}

enum Step {
    Pencil,
    Restrict(IncidenceBase),
    Join {
        pair: (u32, u32),
        parts: JoinResult,
        kappa: i64,
    },
}

/// Positions `(i, j)`, `i < j`, of one representative per distinct pair of
/// dimensions that admits a join (`n_i + n_j >= n - 1`).
pub fn admissible_pairs(base: &IncidenceBase) -> Vec<(usize, usize)> {
    let dims = base.dims();
    let mut out = Vec::new();
    for i in 0..dims.len() {
        if i > 0 && dims[i] == dims[i - 1] {
            continue;
        }
        for j in i + 1..dims.len() {
            if j > i + 1 && dims[j] == dims[j - 1] {
                continue;
            }
            if dims[i] + dims[j] + 1 >= base.ambient() {
                out.push((i, j));
            }
        }
    }
    out
}

/// Smallest `m` first, then the larger dimension sum, then the
/// lexicographically smallest pair of dimensions.
fn preferred_pair(base: &IncidenceBase) -> Option<(usize, usize)> {
    let dims = base.dims();
    let n = base.ambient();
    admissible_pairs(base).into_iter().min_by_key(|&(i, j)| {
        let sum = dims[i] + dims[j];
        (sum + 1 - n, std::cmp::Reverse(sum), (dims[i], dims[j]))
    })
}

fn plan(base: &IncidenceBase) -> Result<Step> {
    if !is_nondegenerate(base) {
        return Ok(Step::Restrict(restrict_to_span(base)?));
    }
    if base.ambient() <= 2 || base.contains_dim(0) {
        return Ok(Step::Pencil);
    }
    let (i, j) = preferred_pair(base)
        .ok_or_else(|| ScrollError::UnresolvedDegeneration(base.to_string()))?;
    let parts = join(base, i, j)?;
    let kappa = kappa(base, i, j)?;
    if kappa < 1 {
        return Err(ScrollError::Invariant(format!(
            "join of {base} at ({i}, {j}) has kappa = {kappa}"
        )));
    }
    Ok(Step::Join {
        pair: (base.dims()[i], base.dims()[j]),
        parts,
        kappa,
    })
}

/// Memoizing classifier. Shared freely between threads; the memo tables are
/// the only mutable state and every insert is idempotent.
#[derive(Debug, Default)]
pub struct Engine {
    values: RwLock<HashMap<IncidenceBase, (i64, i64)>>,
    trees: RwLock<HashMap<IncidenceBase, Arc<DegenerationNode>>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(degree, genus)` through the degeneration recursion.
    pub fn invariants(&self, base: &IncidenceBase) -> Result<(i64, i64)> {
        require_is(base)?;
        self.invariants_unchecked(base)
    }

    pub fn genus(&self, base: &IncidenceBase) -> Result<i64> {
        self.invariants(base).map(|(_, g)| g)
    }

    fn invariants_unchecked(&self, base: &IncidenceBase) -> Result<(i64, i64)> {
        if let Some(&hit) = self.values.read().expect("memo poisoned").get(base) {
            return Ok(hit);
        }
        let value = match plan(base)? {
            Step::Pencil => (1, 0),
            Step::Restrict(inner) => self.invariants_unchecked(&inner)?,
            Step::Join { parts, kappa, .. } => {
                let (d1, g1) = self.invariants_unchecked(&parts.dot)?;
                let (d2, g2) = self.invariants_unchecked(&parts.ddot)?;
                (d1 + d2, g1 + g2 + kappa - 1)
            }
        };
        self.values
            .write()
            .expect("memo poisoned")
            .insert(base.clone(), value);
        Ok(value)
    }

    /// Degenerate at the given pair instead of the preferred one; the
    /// components are classified by the regular recursion.
    pub fn via_pair(&self, base: &IncidenceBase, i: usize, j: usize) -> Result<PairOutcome> {
        let parts = join(base, i, j)?;
        let kappa = kappa(base, i, j)?;
        Ok(PairOutcome {
            pair: (base.dims()[i], base.dims()[j]),
            m: parts.m,
            kappa,
            dot: self.invariants(&parts.dot)?,
            ddot: self.invariants(&parts.ddot)?,
        })
    }

    /// The full degeneration witness behind [`Engine::invariants`].
    pub fn witness(&self, base: &IncidenceBase) -> Result<Arc<DegenerationNode>> {
        require_is(base)?;
        self.witness_unchecked(base)
    }

    fn witness_unchecked(&self, base: &IncidenceBase) -> Result<Arc<DegenerationNode>> {
        if let Some(hit) = self.trees.read().expect("memo poisoned").get(base) {
            return Ok(hit.clone());
        }
        let node = match plan(base)? {
            Step::Pencil => DegenerationNode {
                base: base.clone(),
                degree: 1,
                genus: 0,
                action: Action::Pencil,
                children: Vec::new(),
            },
            Step::Restrict(inner) => {
                let child = self.witness_unchecked(&inner)?;
                DegenerationNode {
                    base: base.clone(),
                    degree: child.degree,
                    genus: child.genus,
                    action: Action::Restrict,
                    children: vec![child],
                }
            }
            Step::Join { pair, parts, kappa } => {
                let dot = self.witness_unchecked(&parts.dot)?;
                let ddot = self.witness_unchecked(&parts.ddot)?;
                DegenerationNode {
                    base: base.clone(),
                    degree: dot.degree + ddot.degree,
                    genus: dot.genus + ddot.genus + kappa - 1,
                    action: Action::Join {
                        pair,
                        m: parts.m,
                        kappa,
                    },
                    children: vec![dot, ddot],
                }
            }
        };
        let node = Arc::new(node);
        self.trees
            .write()
            .expect("memo poisoned")
            .insert(base.clone(), node.clone());
        Ok(node)
    }

    /// Full report for a base; `with_tree` attaches the witness.
    pub fn classify(&self, base: &IncidenceBase, with_tree: bool) -> Result<ScrollReport> {
        require_is(base)?;
        let ring_degree = degree(base)?;
        let span = restrict_to_span(base)?.ambient();
        let (d, g) = self.invariants_unchecked(base)?;
        if d != ring_degree {
            return Err(ScrollError::Invariant(format!(
                "{base}: Schubert degree {ring_degree} but degeneration degree {d}"
            )));
        }
        let mut directrix = Vec::new();
        for (dim, _) in base.multiplicities() {
            if dim == 0 {
                continue;
            }
            let pos = base.position_of(dim).expect("dimension present");
            directrix.push(DirectrixEntry {
                space_dim: dim,
                curve_degree: directrix_degree(base, pos)?,
                curve_genus: g,
            });
        }
        let sp = speciality(span, d, g);
        let tree = if with_tree {
            Some(self.witness_unchecked(base)?)
        } else {
            None
        };
        Ok(ScrollReport {
            base: base.clone(),
            span,
            degree: d,
            genus: g,
            h1: sp.h1,
            special: sp.special,
            anomalous: sp.anomalous,
            directrix,
            tree,
        })
    }

    /// Snapshot of the value memo, sorted by base.
    pub fn memo_entries(&self) -> Vec<(IncidenceBase, i64, i64)> {
        let mut out: Vec<_> = self
            .values
            .read()
            .expect("memo poisoned")
            .iter()
            .map(|(b, &(d, g))| (b.clone(), d, g))
            .collect();
        out.sort();
        out
    }

    /// Seed the value memo; used when loading a persisted cache.
    pub fn seed(&self, base: IncidenceBase, degree: i64, genus: i64) {
        self.values
            .write()
            .expect("memo poisoned")
            .insert(base, (degree, genus));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u32, dims: &[u32]) -> IncidenceBase {
        IncidenceBase::new(n, dims.to_vec()).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&b(3, &[1, 1, 1])).unwrap(), 2);
        assert_eq!(degree(&b(5, &[3; 7])).unwrap(), 14);
        assert_eq!(degree(&b(4, &[1, 1, 2])).unwrap(), 2);
        assert_eq!(degree(&b(2, &[0])).unwrap(), 1);
        assert!(matches!(
            degree(&b(5, &[2, 3])),
            Err(ScrollError::NotIncidence {
                conditions: 3,
                required: 7
            })
        ));
    }

    #[test]
    fn kappas() {
        assert_eq!(kappa(&b(5, &[3; 7]), 0, 1).unwrap(), 5);
        assert_eq!(kappa(&b(6, &[3, 4, 4, 4, 4, 4, 4, 4]), 0, 1).unwrap(), 9);
        // m = 0
        assert_eq!(kappa(&b(4, &[1, 2, 2, 2]), 0, 1).unwrap(), 1);
        assert_eq!(kappa(&b(6, &[2, 3, 3, 4, 4]), 0, 1).unwrap(), 1);
        assert_eq!(kappa(&b(6, &[2, 3, 3, 4, 4]), 1, 3).unwrap(), 2);
    }

    #[test]
    fn genera() {
        let e = Engine::new();
        assert_eq!(e.genus(&b(4, &[2; 5])).unwrap(), 1);
        assert_eq!(e.genus(&b(5, &[3; 7])).unwrap(), 8);
        for n in 3..9 {
            let mut dims = vec![1];
            dims.extend(std::iter::repeat_n(n - 2, n as usize - 1));
            assert_eq!(e.genus(&b(n, &dims)).unwrap(), 0);
        }
    }

    #[test]
    fn worked_example_through_the_other_pair() {
        let e = Engine::new();
        let base = b(6, &[2, 3, 3, 4, 4]);
        let out = e.via_pair(&base, 1, 3).unwrap();
        assert_eq!(out.m, 2);
        assert_eq!(out.kappa, 2);
        assert_eq!(out.dot, (e.invariants(&b(5, &[2, 2, 2, 3])).unwrap().0, 0));
        assert_eq!(out.ddot.1, 0);
        assert_eq!(out.genus(), 1);
        assert_eq!(out.degree(), 7);

        let parts = join(&base, 1, 3).unwrap();
        assert_eq!(restrict_to_span(&parts.dot).unwrap(), b(5, &[2, 2, 2, 3]));
        assert_eq!(restrict_to_span(&parts.ddot).unwrap(), b(4, &[1, 2, 2, 2]));
    }

    #[test]
    fn directrices() {
        for n in 4..10 {
            let mut dims = vec![2];
            dims.extend(std::iter::repeat_n(n - 2, n as usize));
            assert_eq!(directrix_degree(&b(n, &dims), 0).unwrap(), n as i64 - 1);
        }
        assert_eq!(directrix_degree(&b(5, &[3; 7]), 3).unwrap(), 9);
        assert_eq!(directrix_degree(&b(6, &[2, 3, 4, 4, 4, 4]), 1).unwrap(), 6);
        assert!(directrix_degree(&b(3, &[0, 1]), 0).is_err());
    }

    #[test]
    fn specialities() {
        assert_eq!(
            speciality(4, 5, 1),
            Speciality {
                h1: 0,
                special: false,
                anomalous: false
            }
        );
        assert!(speciality(5, 9, 3).special);
        assert_eq!(speciality(5, 9, 3).h1, 1);
        assert!(!speciality(7, 12, 3).special);
        assert!(speciality(5, 9, 0).anomalous);
    }

    #[test]
    fn classify_reports() {
        let e = Engine::new();
        let r = e.classify(&b(7, &[2, 4, 4, 4, 5]), false).unwrap();
        assert_eq!((r.degree, r.genus, r.special), (8, 1, false));
        assert_eq!(r.directrix_on(2).unwrap().curve_degree, 3);

        let r = e.classify(&b(6, &[3, 3, 4, 4, 4, 4, 4]), false).unwrap();
        assert_eq!((r.degree, r.genus, r.special), (19, 11, true));
        assert_eq!(r.directrix_on(3).unwrap().curve_degree, 10);

        let r = e.classify(&b(3, &[0, 1]), true).unwrap();
        assert_eq!((r.degree, r.genus, r.span), (1, 0, 2));
        assert!(r.is_degenerate());
        assert!(r.directrix_on(0).is_none());
        assert_eq!(r.tree.unwrap().action, Action::Restrict);
    }

    #[test]
    fn witness_bookkeeping() {
        let e = Engine::new();
        let tree = e.witness(&b(6, &[2, 3, 3, 4, 4])).unwrap();
        assert_eq!((tree.degree, tree.genus), (7, 1));
        let mut joins = 0;
        tree.walk(&mut |node| {
            if let Action::Join { kappa, m, .. } = node.action {
                joins += 1;
                assert!(kappa >= 1);
                if m == 0 {
                    assert_eq!(kappa, 1);
                }
                let (dot, ddot) = (&node.children[0], &node.children[1]);
                assert_eq!(node.degree, dot.degree + ddot.degree);
                assert_eq!(node.genus, dot.genus + ddot.genus + kappa - 1);
            }
        });
        assert!(joins > 0);
    }

    #[test]
    fn preferred_pair_rule() {
        let base = b(6, &[2, 3, 3, 4, 4]);
        assert_eq!(preferred_pair(&base), Some((0, 1)));
        assert_eq!(
            admissible_pairs(&base),
            vec![(0, 1), (0, 3), (1, 2), (1, 3), (3, 4)]
        );
    }
}
