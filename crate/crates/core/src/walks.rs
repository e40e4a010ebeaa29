//! Minor walks: lattice paths in the `n × (d+1)` grid of coefficient
//! positions that encode the nonzero maximal minors of the cascade matrices.
//!
//! A row selection `((i_1,j_1), …, (i_{d+k},j_{d+k}))` maps to the walk with
//! steps `(u_s, v_s) = (j_s, s - i_s)`. The minor is nonzero exactly when every
//! step stays inside the lattice, and its diagonal product (the leading
//! monomial under the diagonal order) multiplies the visited `a_{u,v}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::cascade::{RowLabel, RowSelection};
use crate::polyring::{Monomial, VariableId};
use crate::{check_shape, Error, Result};

/// Steps `(u, v)`: `u` is the polynomial index (1-based), `v` the coefficient index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorWalk {
    steps: Vec<(usize, usize)>,
}

impl MinorWalk {
    /// Validates `steps` as a minor walk for polynomials of degree `d`, `n` of them.
    pub fn new(steps: Vec<(usize, usize)>, d: usize, n: usize) -> Result<Self> {
        if !is_minor_walk(&steps, d, n) {
            return Err(Error::OutOfRange(alloc::format!("{steps:?} is not a minor walk")));
        }
        Ok(MinorWalk { steps })
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Cascade depth `k` of the matrix whose minor this walk encodes.
    pub fn depth(&self) -> usize {
        self.steps.len() - self.steps.last().map_or(0, |&(_, v)| v)
    }

    pub fn vertices(&self) -> BTreeSet<(usize, usize)> {
        self.steps.iter().copied().collect()
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.steps.iter().map(|&(u, v)| VariableId::a(u, v))
    }
}

impl fmt::Display for MinorWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (u, v)) in self.steps.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "({u},{v})")?;
        }
        Ok(())
    }
}

/// Walk of a row selection; `ZeroMinor` if a step leaves the lattice.
pub fn rows_to_walk(sel: &RowSelection, d: usize) -> Result<MinorWalk> {
    let rows = sel.rows();
    if rows.len() <= d {
        return Err(Error::OutOfRange(alloc::format!(
            "a selection of {} rows is not a maximal minor for degree {d}",
            rows.len()
        )));
    }
    let mut steps = Vec::with_capacity(rows.len());
    for (idx, r) in rows.iter().enumerate() {
        let s = idx + 1;
        match s.checked_sub(r.block) {
            Some(v) if v <= d => steps.push((r.poly, v)),
            _ => return Err(Error::ZeroMinor),
        }
    }
    // inside the lattice, the first and last steps are forced to v = 0 and v = d
    debug_assert_eq!(steps[0].1, 0);
    debug_assert_eq!(steps[steps.len() - 1].1, d);
    Ok(MinorWalk { steps })
}

/// Inverse of [`rows_to_walk`]: step `s` sits in row `(s - v_s, u_s)`.
pub fn walk_to_rows(w: &MinorWalk) -> RowSelection {
    let rows = w.steps.iter().enumerate().map(|(idx, &(u, v))| RowLabel::new(idx + 1 - v, u)).collect();
    RowSelection::new(rows).expect("minor walks map to increasing selections")
}

/// Lattice membership, `v_1 = 0`, `v_last = d`, and every step either
/// weakly lowers `v` or raises it by one while moving to a larger `u`.
pub fn is_minor_walk(steps: &[(usize, usize)], d: usize, n: usize) -> bool {
    if steps.len() < 2 || steps.iter().any(|&(u, v)| u == 0 || u > n || v > d) {
        return false;
    }
    if steps[0].1 != 0 || steps[steps.len() - 1].1 != d {
        return false;
    }
    steps.windows(2).all(|w| {
        let ((u0, v0), (u1, v1)) = (w[0], w[1]);
        v1 <= v0 || (v1 == v0 + 1 && u1 > u0)
    })
}

/// The local characterisation of inclusion-minimal minor walks.
pub fn is_reduced(steps: &[(usize, usize)], d: usize, n: usize) -> bool {
    if !is_minor_walk(steps, d, n) {
        return false;
    }
    let len = steps.len();
    let v = |s: usize| steps[s].1;
    let u = |s: usize| steps[s].0;
    if (1..len).any(|s| v(s) < v(s - 1)) {
        return false;
    }
    // steps are 0-based here: index 1 is the second step, len-2 the second to last
    if v(1) != 1 || d == 0 || v(len - 2) != d - 1 {
        return false;
    }
    for s in 0..len - 1 {
        if v(s + 1) != v(s) {
            continue;
        }
        if s == 0 || s + 2 >= len {
            return false;
        }
        // a flat step s → s+1 needs u_{s+1} ≤ u_{s-1} and u_{s+2} ≤ u_s, or step s
        // (respectively s+1) could be dropped
        if v(s) != v(s - 1) + 1 || v(s + 2) != v(s + 1) + 1 || u(s + 1) > u(s - 1) || u(s + 2) > u(s) {
            return false;
        }
    }
    true
}

/// All minor walks of length `d + k`, by depth-first extension.
///
/// Step `s` is kept within `s - k ≤ v_s ≤ s - 1`, the range for which the
/// walk still comes from a row of `M_k`.
pub fn enumerate_walks(d: usize, n: usize, k: usize) -> Result<Vec<MinorWalk>> {
    check_shape(d, n)?;
    if k == 0 || k > d {
        return Err(Error::OutOfRange(alloc::format!("cascade depth k = {k} must lie in 1..={d}")));
    }
    let len = d + k;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    for u in 1..=n {
        path.push((u, 0));
        extend_walk(&mut path, d, n, k, len, &mut out);
        path.pop();
    }
    Ok(out)
}

fn extend_walk(path: &mut Vec<(usize, usize)>, d: usize, n: usize, k: usize, len: usize, out: &mut Vec<MinorWalk>) {
    let s = path.len();
    if s == len {
        if path[s - 1].1 == d {
            out.push(MinorWalk { steps: path.clone() });
        }
        return;
    }
    let (u, v) = path[s - 1];
    // next step has 1-based index s + 1
    let lo = (s + 1).saturating_sub(k);
    let hi = s.min(d);
    for nv in lo..=hi {
        if nv <= v {
            for nu in 1..=n {
                path.push((nu, nv));
                extend_walk(path, d, n, k, len, out);
                path.pop();
            }
        } else if nv == v + 1 {
            for nu in u + 1..=n {
                path.push((nu, nv));
                extend_walk(path, d, n, k, len, out);
                path.pop();
            }
        }
    }
}

/// All reduced minor walks, of every length `d+1 ..= 2d`.
///
/// Built directly from the local conditions: the walk climbs one level per
/// step, except for single flat steps that must be entered from a climb, move
/// to a `u` no larger than the one before that climb, and be followed by a
/// climb to a `u` no larger than the one before the flat step.
pub fn enumerate_reduced(d: usize, n: usize) -> Result<Vec<MinorWalk>> {
    check_shape(d, n)?;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(2 * d);
    for u in 1..=n {
        path.push((u, 0));
        extend_reduced(&mut path, d, n, &mut out);
        path.pop();
    }
    Ok(out)
}

fn extend_reduced(path: &mut Vec<(usize, usize)>, d: usize, n: usize, out: &mut Vec<MinorWalk>) {
    let s = path.len();
    let (u, v) = path[s - 1];
    if v == d {
        out.push(MinorWalk { steps: path.clone() });
        return;
    }
    let last_was_flat = s >= 2 && path[s - 2].1 == v;
    // climb
    let max_u = if last_was_flat { path[s - 2].0 } else { n };
    for nu in u + 1..=max_u {
        path.push((nu, v + 1));
        extend_reduced(path, d, n, out);
        path.pop();
    }
    // flat step: only right after a climb, and not beyond where that climb started
    let last_was_climb = s >= 2 && path[s - 2].1 + 1 == v;
    if last_was_climb {
        for nu in 1..=path[s - 2].0 {
            path.push((nu, v));
            extend_reduced(path, d, n, out);
            path.pop();
        }
    }
}

/// Product of the visited variables, counted with multiplicity.
pub fn walk_leading_monomial(w: &MinorWalk) -> Monomial {
    Monomial::product(w.variables())
}

/// The coordinate subspace `S_{s,t} = {a_{i,t-1} : i < s} ∪ {a_{i,t} : i > s}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoordinateSubspace {
    pub s: usize,
    pub t: usize,
    pub variables: BTreeSet<VariableId>,
}

impl CoordinateSubspace {
    pub fn new(s: usize, t: usize, n: usize) -> Self {
        let mut variables = BTreeSet::new();
        for i in 1..s {
            variables.insert(VariableId::a(i, t - 1));
        }
        for i in s + 1..=n {
            variables.insert(VariableId::a(i, t));
        }
        CoordinateSubspace { s, t, variables }
    }

    /// Whether the walk visits one of the subspace's variables.
    pub fn hits(&self, w: &MinorWalk) -> bool {
        w.variables().any(|v| self.variables.contains(&v))
    }
}

/// All `nd` subspaces `S_{s,t}`, `s ∈ 1..=n`, `t ∈ 1..=d`.
pub fn components(d: usize, n: usize) -> Result<Vec<CoordinateSubspace>> {
    check_shape(d, n)?;
    let mut out = Vec::with_capacity(n * d);
    for s in 1..=n {
        for t in 1..=d {
            out.push(CoordinateSubspace::new(s, t, n));
        }
    }
    Ok(out)
}
