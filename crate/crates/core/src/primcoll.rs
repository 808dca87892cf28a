//! Primitive collections and relations, Fano detection, minimal rational
//! curve families, and combinatorial free-curve certificates.
//!
//! A primitive collection is a minimal non-face of the simplicial complex
//! formed by the generator sets of the cones: the set itself spans no cone,
//! every proper subset does. On the simplicial fans accepted here "spans a
//! cone" is exactly "is a subset of some maximal cone's generator set".

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::divisor::{intersect, KaehlerClass};
use crate::error::{Error, Result};
use crate::fan::{locate_cone, Fan};
use crate::relations::Relation;

/// A set of ray indices spanning no cone while every proper subset spans one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimitiveCollection {
    pub indices: Vec<usize>,
}

/// The unique expression of a collection's ray sum inside the cone holding
/// it: `sum_{x in collection} eta_x = sum_i b_i y_i` with positive integers
/// `b_i` over the generators of `sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRelation {
    pub collection: PrimitiveCollection,
    /// Ray indices generating the cone that contains the sum (empty for the
    /// zero cone).
    pub sigma: Vec<usize>,
    /// Positive integer coefficients, aligned with `sigma`.
    pub coefficients: Vec<BigInt>,
    /// `|collection| - sum of coefficients`.
    pub degree: BigInt,
}

impl PrimitiveRelation {
    /// The signed relation vector: +1 on collection members, minus the
    /// coefficient on generators of sigma, combined where they overlap.
    pub fn relation_vector(&self, ray_count: usize) -> Vec<BigInt> {
        let mut a = vec![BigInt::zero(); ray_count];
        for &i in &self.collection.indices {
            a[i] += 1;
        }
        for (&i, b) in self.sigma.iter().zip(&self.coefficients) {
            a[i] -= b;
        }
        a
    }
}

fn is_face(fan: &Fan, subset: &[usize], memo: &mut BTreeMap<Vec<usize>, bool>) -> bool {
    if let Some(&v) = memo.get(subset) {
        return v;
    }
    let v = fan
        .max_cones()
        .iter()
        .any(|cone| subset.iter().all(|x| cone.binary_search(x).is_ok()));
    memo.insert(subset.to_vec(), v);
    v
}

fn combinations(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        visit(&subset);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All primitive collections, enumerated as minimal non-faces in canonical
/// order (by size, then lexicographically). On a complete simplicial fan a
/// minimal non-face has at most `dim + 1` elements, since its facets are
/// faces of cones.
pub fn primitive_collections(fan: &Fan) -> Vec<PrimitiveCollection> {
    let m = fan.ray_count();
    let mut memo: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    let mut out = Vec::new();
    for k in 1..=(fan.dim() + 1).min(m) {
        let mut found: Vec<Vec<usize>> = Vec::new();
        combinations(m, k, &mut |subset| {
            if is_face(fan, subset, &mut memo) {
                return;
            }
            let mut minimal = true;
            for drop in 0..k {
                let mut facet = subset.to_vec();
                facet.remove(drop);
                if !is_face(fan, &facet, &mut memo) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                found.push(subset.to_vec());
            }
        });
        out.extend(found.into_iter().map(|indices| PrimitiveCollection { indices }));
    }
    out
}

/// The primitive relation of a collection: locate the cone containing the
/// ray sum in its relative interior and read off the positive integer
/// coefficients. Errors with `NotSmoothCone` when the coefficients fail to
/// be integers (impossible on smooth fans).
pub fn primitive_relation(fan: &Fan, coll: &PrimitiveCollection) -> Result<PrimitiveRelation> {
    let mut sum = vec![BigInt::zero(); fan.dim()];
    for &i in &coll.indices {
        for (s, r) in sum.iter_mut().zip(fan.ray(i)) {
            *s += r;
        }
    }
    let (sigma, rational_coeffs) = locate_cone(fan, &sum)?;
    let mut coefficients = Vec::with_capacity(rational_coeffs.len());
    for c in &rational_coeffs {
        if !c.is_integer() {
            return Err(Error::NotSmoothCone);
        }
        coefficients.push(c.to_integer());
    }
    let coeff_sum: BigInt = coefficients.iter().sum();
    let degree = BigInt::from(coll.indices.len()) - coeff_sum;
    Ok(PrimitiveRelation {
        collection: coll.clone(),
        sigma,
        coefficients,
        degree,
    })
}

/// Fano iff every primitive relation has strictly positive degree.
pub fn is_fano(fan: &Fan) -> Result<bool> {
    for coll in primitive_collections(fan) {
        if !primitive_relation(fan, &coll)?.degree.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal rational curve families: primitive collections whose ray sum
/// vanishes, each of degree equal to its cardinality. Errors with an
/// internal contradiction when a smooth complete fan has none.
pub fn minimal_curve_families(fan: &Fan) -> Result<Vec<(PrimitiveCollection, usize)>> {
    let mut out = Vec::new();
    for coll in primitive_collections(fan) {
        let rel = primitive_relation(fan, &coll)?;
        if rel.sigma.is_empty() {
            let degree = coll.indices.len();
            out.push((coll, degree));
        }
    }
    if out.is_empty() {
        return Err(Error::InternalContradiction(
            "smooth complete fan without a zero-sum primitive collection".into(),
        ));
    }
    Ok(out)
}

/// Combinatorial certificate for the free rational curve attached to a
/// nonzero nonnegative relation: distinct rational markers on the support
/// rays and, per affine coordinate, the multiset of (marker, exponent) pairs
/// with exponent `a_rho * eta_rho[i]`. The exponent sums vanish per
/// coordinate exactly because the weighted ray sum does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCertificate {
    pub relation: Vec<BigInt>,
    /// Ray index -> marker parameter, for rays with positive coefficient.
    pub markers: BTreeMap<usize, BigRational>,
    /// Per coordinate: (marker, exponent) pairs over the support rays.
    pub exponents: Vec<Vec<(BigRational, BigInt)>>,
    /// Pairing with the supplied class, when one was given.
    pub symplectic_area: Option<BigRational>,
}

impl CurveCertificate {
    /// Re-check every certificate invariant against the fan.
    pub fn verify(&self, fan: &Fan) -> Result<()> {
        let support: Vec<usize> = self
            .relation
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_positive())
            .map(|(i, _)| i)
            .collect();
        if support.len() != self.markers.len()
            || !support.iter().all(|i| self.markers.contains_key(i))
        {
            return Err(Error::InternalContradiction(
                "marker set does not match the relation support".into(),
            ));
        }
        let values: Vec<&BigRational> = self.markers.values().collect();
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i] == values[j] {
                    return Err(Error::DuplicateMarker {
                        value: crate::rat::format_rational(values[i]),
                    });
                }
            }
        }
        for (coord, table) in self.exponents.iter().enumerate() {
            let mut total = BigInt::zero();
            for (pos, &ray) in support.iter().enumerate() {
                let (marker, exponent) = &table[pos];
                if marker != &self.markers[&ray] {
                    return Err(Error::InternalContradiction(
                        "exponent table markers out of order".into(),
                    ));
                }
                // vanishing order at this marker must be a_rho * eta_rho[coord]
                let expected = &self.relation[ray] * &fan.ray(ray)[coord];
                if *exponent != expected {
                    return Err(Error::InternalContradiction(
                        "vanishing orders do not match the relation".into(),
                    ));
                }
                total += exponent;
            }
            if !total.is_zero() {
                return Err(Error::UnbalancedRelation { coordinate: coord });
            }
        }
        Ok(())
    }
}

/// Build and verify the certificate for a nonzero nonnegative relation.
/// Markers default to 0, 1, 2, ... over the support rays in ray order;
/// caller-supplied markers must be pairwise distinct.
pub fn free_curve_certificate(
    fan: &Fan,
    relation: &[BigInt],
    markers: Option<&[BigRational]>,
    kappa: Option<&KaehlerClass>,
) -> Result<CurveCertificate> {
    if relation.len() != fan.ray_count() {
        return Err(Error::ShapeMismatch(format!(
            "relation has {} entries for {} rays",
            relation.len(),
            fan.ray_count()
        )));
    }
    if let Some(index) = relation.iter().position(Signed::is_negative) {
        return Err(Error::RelationNotNonneg { index });
    }
    if relation.iter().all(Zero::is_zero) {
        return Err(Error::ZeroRelation);
    }
    let support: Vec<usize> = relation
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_positive())
        .map(|(i, _)| i)
        .collect();
    let marker_values: Vec<BigRational> = match markers {
        Some(values) => {
            if values.len() != support.len() {
                return Err(Error::ShapeMismatch(format!(
                    "{} markers supplied for {} support rays",
                    values.len(),
                    support.len()
                )));
            }
            for i in 0..values.len() {
                for j in i + 1..values.len() {
                    if values[i] == values[j] {
                        return Err(Error::DuplicateMarker {
                            value: crate::rat::format_rational(&values[i]),
                        });
                    }
                }
            }
            values.to_vec()
        }
        None => (0..support.len())
            .map(|k| BigRational::from_integer(BigInt::from(k)))
            .collect(),
    };
    // regularity at infinity: the weighted ray sum must vanish
    for coord in 0..fan.dim() {
        let mut total = BigInt::zero();
        for (a, ray) in relation.iter().zip(fan.rays()) {
            total += a * &ray[coord];
        }
        if !total.is_zero() {
            return Err(Error::UnbalancedRelation { coordinate: coord });
        }
    }
    let mut exponents = Vec::with_capacity(fan.dim());
    for coord in 0..fan.dim() {
        let table: Vec<(BigRational, BigInt)> = support
            .iter()
            .zip(&marker_values)
            .map(|(&ray, c)| (c.clone(), &relation[ray] * &fan.ray(ray)[coord]))
            .collect();
        exponents.push(table);
    }
    let symplectic_area = match kappa {
        Some(k) => Some(intersect(k, &Relation::new(fan, relation.to_vec())?)?),
        None => None,
    };
    let certificate = CurveCertificate {
        relation: relation.to_vec(),
        markers: support.iter().copied().zip(marker_values).collect(),
        exponents,
        symplectic_area,
    };
    certificate.verify(fan)?;
    Ok(certificate)
}
