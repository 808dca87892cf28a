//! Divisor classes: the class coefficients kappa, the divisor class group,
//! the intersection pairing with curve relations, wall curves, ampleness and
//! kappa normalization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{Fan, Wall};
use crate::lattice::{self, IntMatrix};
use crate::polytope;
use crate::relations::Relation;

/// Rational coefficients per ray expressing a divisor (or Kaehler) class in
/// the ray divisor classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaehlerClass {
    kappa: Vec<BigRational>,
}

impl KaehlerClass {
    pub fn new(fan: &Fan, kappa: Vec<BigRational>) -> Result<Self> {
        if kappa.len() != fan.ray_count() {
            return Err(Error::ShapeMismatch(format!(
                "kappa has {} entries for {} rays",
                kappa.len(),
                fan.ray_count()
            )));
        }
        Ok(KaehlerClass { kappa })
    }

    pub fn from_integers(fan: &Fan, kappa: &[i64]) -> Result<Self> {
        KaehlerClass::new(
            fan,
            kappa
                .iter()
                .map(|&k| BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.kappa
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.kappa.iter().any(Signed::is_negative)
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.kappa.iter().position(Signed::is_negative)
    }

    pub fn scale(&self, c: &BigRational) -> KaehlerClass {
        KaehlerClass {
            kappa: self.kappa.iter().map(|k| k * c).collect(),
        }
    }
}

/// The divisor class group as cokernel data: free rank, torsion invariant
/// factors, and a presentation matrix whose column `rho` gives the
/// coordinates of the class of the ray divisor `rho` in the chosen
/// generators (free generators first, then one row per torsion factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroupDescription {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub presentation: IntMatrix,
}

/// Cokernel of the pairing matrix `m -> (<m, eta_rho>)_rho`, computed via
/// Smith normal form.
pub fn class_group(fan: &Fan) -> ClassGroupDescription {
    let m = fan.ray_count();
    if m == 0 {
        return ClassGroupDescription {
            free_rank: 0,
            torsion: Vec::new(),
            presentation: IntMatrix::zero(0, 0),
        };
    }
    let snf = lattice::smith_normal_form(&fan.ray_matrix());
    let rank = snf.rank();
    let torsion: Vec<BigInt> = snf
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    let free_rank = m - rank;
    // In the coordinates y = U x the image is spanned by d_i e_i, so the
    // class of e_rho is read off the rows of U: free coordinates are the
    // rows past the rank, torsion coordinates the rows whose factor exceeds
    // one (reduced modulo that factor).
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in rank..m {
        rows.push(snf.u.row(r).to_vec());
    }
    let factors = snf.invariant_factors();
    for (i, d) in factors.iter().enumerate() {
        if !d.is_one() {
            rows.push(
                snf.u
                    .row(i)
                    .iter()
                    .map(|e| num_integer::Integer::mod_floor(e, d))
                    .collect(),
            );
        }
    }
    let presentation = IntMatrix::from_rows(&rows).unwrap_or_else(|_| IntMatrix::zero(0, m));
    ClassGroupDescription {
        free_rank,
        torsion,
        presentation,
    }
}

/// The intersection pairing: `sum_rho kappa_rho * a_rho`.
pub fn intersect(kappa: &KaehlerClass, rel: &Relation) -> Result<BigRational> {
    let a = rel.entries();
    if a.len() != kappa.kappa.len() {
        return Err(Error::ShapeMismatch(format!(
            "relation has {} entries, kappa has {}",
            a.len(),
            kappa.kappa.len()
        )));
    }
    let mut acc = BigRational::zero();
    for (k, e) in kappa.kappa.iter().zip(a) {
        acc += k * BigRational::from_integer(e.clone());
    }
    Ok(acc)
}

/// The torus-invariant curve relation attached to a wall: coefficient one on
/// the two rays opposite the wall in its neighbors, integers on wall rays,
/// zero elsewhere.
pub fn wall_curve_relation(fan: &Fan, wall: &Wall) -> Result<Relation> {
    let (c1, c2) = wall.neighbors;
    let cone1 = &fan.max_cones()[c1];
    let cone2 = &fan.max_cones()[c2];
    let in_facet = |i: usize| wall.facet.binary_search(&i).is_ok();
    let u = *cone1
        .iter()
        .find(|&&i| !in_facet(i))
        .ok_or_else(|| Error::InternalContradiction("wall facet equals its neighbor".into()))?;
    let u_prime = *cone2
        .iter()
        .find(|&&i| !in_facet(i))
        .ok_or_else(|| Error::InternalContradiction("wall facet equals its neighbor".into()))?;
    // express ray(u') in the basis (ray(u), facet rays)
    let dim = fan.dim();
    let mut basis_indices = vec![u];
    basis_indices.extend(wall.facet.iter().copied());
    let system: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| {
            basis_indices
                .iter()
                .map(|&i| BigRational::from_integer(fan.ray(i)[c].clone()))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = fan
        .ray(u_prime)
        .iter()
        .map(|e| BigRational::from_integer(e.clone()))
        .collect();
    let x = lattice::solve_exact(&system, &rhs)
        .ok_or_else(|| Error::InternalContradiction("wall basis does not span".into()))?;
    if x[0] != -BigRational::one() {
        return Err(Error::InternalContradiction(
            "opposite wall rays are not unimodularly opposed; fan is not smooth complete".into(),
        ));
    }
    let mut entries = vec![BigInt::zero(); fan.ray_count()];
    entries[u] = BigInt::one();
    entries[u_prime] = BigInt::one();
    for (pos, &i) in wall.facet.iter().enumerate() {
        let coeff = &x[pos + 1];
        if !coeff.is_integer() {
            return Err(Error::NotSmoothCone);
        }
        entries[i] = -coeff.to_integer();
    }
    Relation::new(fan, entries)
}

/// Toric ampleness via wall positivity: the class is ample iff it pairs
/// strictly positively with every wall curve.
pub fn is_ample(fan: &Fan, kappa: &KaehlerClass) -> Result<bool> {
    for wall in crate::fan::walls(fan)? {
        let rel = wall_curve_relation(fan, &wall)?;
        if !intersect(kappa, &rel)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Replace kappa by the equivalent representative `kappa_rho + <m, eta_rho>`
/// with every coefficient nonnegative, choosing the lexicographically least
/// feasible `m`. Identity when the input is already nonnegative. Errors with
/// `NotRepresentable` when no such `m` exists (empty momentum polytope).
pub fn normalize_kappa(fan: &Fan, kappa: &KaehlerClass) -> Result<KaehlerClass> {
    if kappa.kappa.len() != fan.ray_count() {
        return Err(Error::ShapeMismatch("kappa length".into()));
    }
    if kappa.is_nonnegative() {
        return Ok(kappa.clone());
    }
    let halfspaces: Vec<(Vec<BigInt>, BigRational)> = fan
        .rays()
        .iter()
        .zip(&kappa.kappa)
        .map(|(ray, k)| (ray.clone(), k.clone()))
        .collect();
    let m = polytope::feasible_lex_min(fan.dim(), &halfspaces)?.ok_or(Error::NotRepresentable)?;
    let mut out = Vec::with_capacity(kappa.kappa.len());
    for (ray, k) in fan.rays().iter().zip(&kappa.kappa) {
        let mut pairing = BigRational::zero();
        for (mi, ri) in m.iter().zip(ray) {
            pairing += mi * BigRational::from_integer(ri.clone());
        }
        out.push(k + pairing);
    }
    debug_assert!(out.iter().all(|k| !k.is_negative()));
    KaehlerClass::new(fan, out)
}
