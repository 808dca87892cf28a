//! Momentum polytopes in H-representation, exact vertex enumeration,
//! directional width and lattice width.
//!
//! Convention: the divisor with coefficients kappa corresponds to
//! `P = { m : <m, eta_rho> >= -kappa_rho for every ray }` (inner-normal
//! convention). Sign conventions vary across the literature, so this is
//! stated once here and relied on everywhere.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::divisor::KaehlerClass;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice;

/// A halfspace `<m, normal> >= -offset`.
pub type Halfspace = (Vec<BigInt>, BigRational);

/// A polytope given by halfspaces, with vertices computed on first use.
#[derive(Debug)]
pub struct LatticePolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    vertices: OnceLock<Option<Vec<Vec<BigRational>>>>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        LatticePolytope {
            dim: self.dim,
            halfspaces: self.halfspaces.clone(),
            vertices: OnceLock::new(),
        }
    }
}

impl LatticePolytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        for (normal, _) in &halfspaces {
            if normal.len() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "halfspace normal has length {}, expected {}",
                    normal.len(),
                    dim
                )));
            }
        }
        Ok(LatticePolytope {
            dim,
            halfspaces,
            vertices: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, point: &[BigRational]) -> bool {
        self.halfspaces.iter().all(|(normal, offset)| {
            let mut acc = BigRational::zero();
            for (n, p) in normal.iter().zip(point) {
                acc += BigRational::from_integer(n.clone()) * p;
            }
            acc >= -offset.clone()
        })
    }

    /// The polytope is bounded iff the recession cone
    /// `{ x : <x, normal> >= 0 }` is the origin alone.
    pub fn is_bounded(&self) -> bool {
        let homogeneous: Vec<Halfspace> = self
            .halfspaces
            .iter()
            .map(|(n, _)| (n.clone(), BigRational::zero()))
            .collect();
        for coord in 0..self.dim {
            match coordinate_bounds(self.dim, &homogeneous, coord) {
                Some((Some(lo), Some(hi))) if lo.is_zero() && hi.is_zero() => {}
                _ => return false,
            }
        }
        true
    }

    /// Exact vertex set: every full-rank choice of `dim` constraints solved
    /// and kept when feasible; deduplicated and sorted. Errors when the
    /// polytope is unbounded.
    pub fn vertices(&self) -> Result<&[Vec<BigRational>]> {
        let computed = self.vertices.get_or_init(|| {
            if !self.is_bounded() {
                return None;
            }
            Some(enumerate_vertices(self.dim, &self.halfspaces))
        });
        match computed {
            Some(v) => Ok(v),
            None => Err(Error::Unbounded),
        }
    }
}

/// Basic solutions of all `dim`-subsets of constraints, filtered by
/// feasibility. Assumes boundedness was already established.
fn enumerate_vertices(dim: usize, halfspaces: &[Halfspace]) -> Vec<Vec<BigRational>> {
    let m = halfspaces.len();
    let mut vertices: Vec<Vec<BigRational>> = Vec::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    if m < dim {
        return vertices;
    }
    loop {
        // solve <m, normal_i> = -offset_i for i in subset
        let system: Vec<Vec<BigRational>> = subset
            .iter()
            .map(|&i| {
                halfspaces[i]
                    .0
                    .iter()
                    .map(|e| BigRational::from_integer(e.clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<BigRational> = subset.iter().map(|&i| -halfspaces[i].1.clone()).collect();
        if let Some(point) = lattice::solve_exact(&system, &rhs) {
            // demand a genuine unique solution (full-rank normals) and
            // feasibility for every constraint
            let unique = rational_rank(&system) == dim;
            if unique && satisfies_all(halfspaces, &point) && !vertices.contains(&point) {
                vertices.push(point);
            }
        }
        // next dim-subset in lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                vertices.sort();
                return vertices;
            }
            i -= 1;
            if subset[i] != i + m - dim {
                subset[i] += 1;
                for j in i + 1..dim {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn satisfies_all(halfspaces: &[Halfspace], point: &[BigRational]) -> bool {
    halfspaces.iter().all(|(normal, offset)| {
        let mut acc = BigRational::zero();
        for (n, p) in normal.iter().zip(point) {
            acc += BigRational::from_integer(n.clone()) * p;
        }
        acc >= -offset.clone()
    })
}

fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut mat: Vec<Vec<BigRational>> = rows.to_vec();
    let m = mat.len();
    let n = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        for i in 0..m {
            if i != rank && !mat[i][col].is_zero() {
                let f = &mat[i][col] / &mat[rank][col];
                for c in col..n {
                    let v = &mat[i][c] - &f * &mat[rank][c];
                    mat[i][c] = v;
                }
            }
        }
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

/// The momentum polytope `{ m : <m, eta_rho> >= -kappa_rho }` of a complete
/// fan with nonnegative coefficients. Contains the origin by construction.
pub fn momentum_polytope(fan: &Fan, kappa: &KaehlerClass) -> Result<LatticePolytope> {
    if kappa.coefficients().len() != fan.ray_count() {
        return Err(Error::ShapeMismatch("kappa length".into()));
    }
    if let Some(index) = kappa.first_negative() {
        return Err(Error::NegativeKappa { index });
    }
    let halfspaces: Vec<Halfspace> = fan
        .rays()
        .iter()
        .zip(kappa.coefficients())
        .map(|(ray, k)| (ray.clone(), k.clone()))
        .collect();
    LatticePolytope::new(fan.dim(), halfspaces)
}

/// `max <u, x> - min <u, x>` over the polytope, evaluated on vertices.
pub fn width_along(p: &LatticePolytope, u: &[BigInt]) -> Result<BigRational> {
    if u.len() != p.dim() {
        return Err(Error::ShapeMismatch(format!(
            "direction has length {}, expected {}",
            u.len(),
            p.dim()
        )));
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::ZeroDirection);
    }
    let vertices = p.vertices()?;
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for v in vertices {
        let mut acc = BigRational::zero();
        for (c, x) in u.iter().zip(v) {
            acc += BigRational::from_integer(c.clone()) * x;
        }
        if lo.as_ref().is_none_or(|l| acc < *l) {
            lo = Some(acc.clone());
        }
        if hi.as_ref().is_none_or(|h| acc > *h) {
            hi = Some(acc);
        }
    }
    Ok(hi.unwrap() - lo.unwrap())
}

/// Result of a lattice width search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWidth {
    pub value: BigRational,
    /// Lexicographically smallest primitive minimizing direction, normalized
    /// so its first nonzero entry is positive.
    pub direction: Vec<BigInt>,
    /// The sup-norm cap actually searched.
    pub search_bound: BigInt,
    /// Whether an external minimum cross-check certified global optimality
    /// (set by [`lattice_width_certified`]).
    pub gamma_certified: bool,
}

fn default_search_bound(p: &LatticePolytope) -> Result<BigInt> {
    let vertices = p.vertices()?;
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let mut spread = BigInt::zero();
    for coord in 0..p.dim() {
        let lo = vertices.iter().map(|v| &v[coord]).min().unwrap();
        let hi = vertices.iter().map(|v| &v[coord]).max().unwrap();
        let s = (hi - lo).ceil().to_integer();
        if s > spread {
            spread = s;
        }
    }
    Ok(spread + 1)
}

/// Minimum of `width_along` over nonzero primitive integer directions with
/// sup-norm at most `search_bound` (default: the largest vertex coordinate
/// spread plus one). Ties break to the lexicographically smallest direction
/// among sign-normalized representatives.
pub fn lattice_width(p: &LatticePolytope, search_bound: Option<BigInt>) -> Result<LatticeWidth> {
    let bound = match search_bound {
        Some(b) if b.is_positive() => b,
        Some(_) => return Err(Error::ShapeMismatch("search bound must be positive".into())),
        None => default_search_bound(p)?,
    };
    let vertices = p.vertices()?;
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let b = i64::try_from(&bound)
        .map_err(|_| Error::ShapeMismatch("search bound too large to enumerate".into()))?;
    let mut best: Option<(BigRational, Vec<BigInt>)> = None;
    let mut direction = vec![0i64; p.dim()];
    search_directions(p, b, 0, &mut direction, &mut best)?;
    let (value, dir) = best.ok_or(Error::ZeroDirection)?;
    Ok(LatticeWidth {
        value,
        direction: dir,
        search_bound: bound,
        gamma_certified: false,
    })
}

fn search_directions(
    p: &LatticePolytope,
    bound: i64,
    index: usize,
    direction: &mut Vec<i64>,
    best: &mut Option<(BigRational, Vec<BigInt>)>,
) -> Result<()> {
    if index == direction.len() {
        // sign normalization: first nonzero entry positive
        match direction.iter().find(|&&c| c != 0) {
            None => return Ok(()),
            Some(&c) if c < 0 => return Ok(()),
            Some(_) => {}
        }
        let as_big: Vec<BigInt> = direction.iter().map(|&c| BigInt::from(c)).collect();
        let mut g = BigInt::zero();
        for e in &as_big {
            g = g.gcd(e);
        }
        if !g.is_one() {
            return Ok(());
        }
        let w = width_along(p, &as_big)?;
        if best.as_ref().is_none_or(|(v, _)| w < *v) {
            *best = Some((w, as_big));
        }
        return Ok(());
    }
    for c in -bound..=bound {
        direction[index] = c;
        search_directions(p, bound, index + 1, direction, best)?;
    }
    direction[index] = 0;
    Ok(())
}

/// Lattice width with an external exact minimum as an optimality
/// certificate: when the enumerated minimum exceeds `expected_minimum` the
/// search bound doubles and the search reruns, up to a fixed number of
/// doublings. The flag `gamma_certified` records whether the final value
/// equals the expected minimum.
pub fn lattice_width_certified(
    p: &LatticePolytope,
    expected_minimum: &BigRational,
    search_bound: Option<BigInt>,
) -> Result<LatticeWidth> {
    let mut bound = match search_bound {
        Some(b) if b.is_positive() => b,
        Some(_) => return Err(Error::ShapeMismatch("search bound must be positive".into())),
        None => default_search_bound(p)?,
    };
    for _ in 0..8 {
        let mut result = lattice_width(p, Some(bound.clone()))?;
        if result.value <= *expected_minimum {
            result.gamma_certified = result.value == *expected_minimum;
            return Ok(result);
        }
        bound *= 2;
    }
    let mut result = lattice_width(p, Some(bound))?;
    result.gamma_certified = result.value == *expected_minimum;
    Ok(result)
}

/// Interval of a single coordinate over the solution set, by eliminating all
/// other variables; `None` when the system is infeasible. Each side is
/// `None` when unbounded on that side.
fn coordinate_bounds(
    dim: usize,
    halfspaces: &[Halfspace],
    coord: usize,
) -> Option<(Option<BigRational>, Option<BigRational>)> {
    // constraints as (coeffs, rhs) meaning coeffs . x >= rhs
    let mut constraints: Vec<(Vec<BigRational>, BigRational)> = halfspaces
        .iter()
        .map(|(n, k)| {
            (
                n.iter()
                    .map(|e| BigRational::from_integer(e.clone()))
                    .collect(),
                -k.clone(),
            )
        })
        .collect();
    for var in (0..dim).filter(|&v| v != coord) {
        constraints = eliminate(constraints, var);
    }
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (coeffs, rhs) in &constraints {
        let c = &coeffs[coord];
        if c.is_zero() {
            if rhs.is_positive() {
                return None; // 0 >= positive: infeasible
            }
            continue;
        }
        let value = rhs / c;
        if c.is_positive() {
            if lo.as_ref().is_none_or(|l| value > *l) {
                lo = Some(value);
            }
        } else if hi.as_ref().is_none_or(|h| value < *h) {
            hi = Some(value);
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return None;
        }
    }
    Some((lo, hi))
}

/// One Fourier-Motzkin elimination step.
fn eliminate(
    constraints: Vec<(Vec<BigRational>, BigRational)>,
    var: usize,
) -> Vec<(Vec<BigRational>, BigRational)> {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in constraints {
        if c.0[var].is_zero() {
            zero.push(c);
        } else if c.0[var].is_positive() {
            pos.push(c);
        } else {
            neg.push(c);
        }
    }
    let mut out = zero;
    for (pc, pr) in &pos {
        for (nc, nr) in &neg {
            // positive multipliers cancel the variable:
            // (-n_var) * p + (p_var) * n
            let alpha = -nc[var].clone();
            let beta = pc[var].clone();
            let coeffs: Vec<BigRational> = pc
                .iter()
                .zip(nc)
                .map(|(a, b)| &alpha * a + &beta * b)
                .collect();
            let rhs = &alpha * pr + &beta * nr;
            out.push((coeffs, rhs));
        }
    }
    out
}

/// Deterministic feasible point of the system `<m, normal_i> >= -offset_i`,
/// or `None` when infeasible. When the normals span the ambient space every
/// nonempty solution set is pointed, so the lexicographically least feasible
/// basic solution is returned; otherwise a Fourier-Motzkin sweep picks the
/// lexicographically least point coordinate by coordinate, preferring 0
/// whenever a coordinate is unbounded below.
pub fn feasible_lex_min(dim: usize, halfspaces: &[Halfspace]) -> Result<Option<Vec<BigRational>>> {
    let normal_rows: Vec<Vec<BigRational>> = halfspaces
        .iter()
        .map(|(n, _)| {
            n.iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect()
        })
        .collect();
    if rational_rank(&normal_rows) == dim {
        let candidates = enumerate_vertices(dim, halfspaces);
        return Ok(candidates.into_iter().next());
    }
    // degenerate direction present: fix coordinates one at a time
    let mut system: Vec<(Vec<BigRational>, BigRational)> = halfspaces
        .iter()
        .map(|(n, k)| {
            (
                n.iter()
                    .map(|e| BigRational::from_integer(e.clone()))
                    .collect(),
                -k.clone(),
            )
        })
        .collect();
    let mut point = Vec::with_capacity(dim);
    for coord in 0..dim {
        // bounds of this coordinate over the remaining system
        let mut reduced = system.clone();
        for var in coord + 1..dim {
            reduced = eliminate(reduced, var);
        }
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for (coeffs, rhs) in &reduced {
            let c = &coeffs[coord];
            if c.is_zero() {
                if rhs.is_positive() {
                    return Ok(None);
                }
                continue;
            }
            let value = rhs / c;
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| value > *l) {
                    lo = Some(value);
                }
            } else if hi.as_ref().is_none_or(|h| value < *h) {
                hi = Some(value);
            }
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return Ok(None);
            }
        }
        let chosen = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => {
                if h.is_negative() {
                    h
                } else {
                    BigRational::zero()
                }
            }
            (None, None) => BigRational::zero(),
        };
        // substitute the chosen value into the system
        for (coeffs, rhs) in &mut system {
            let c = coeffs[coord].clone();
            if !c.is_zero() {
                *rhs -= c * &chosen;
                coeffs[coord] = BigRational::zero();
            }
        }
        point.push(chosen);
    }
    // final consistency: every constraint reduced to a constant must hold
    for (coeffs, rhs) in &system {
        if coeffs.iter().all(Zero::is_zero) && rhs.is_positive() {
            return Ok(None);
        }
    }
    Ok(Some(point))
}
