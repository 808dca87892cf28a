//! Curve classes as integer relations among the ray generators, the minimal
//! nonnegative solutions of the homogeneous system, and the two combinatorial
//! bounds derived from them: the minimum `gamma` of the pairing over nonzero
//! nonnegative relations and the degree-capped maximum `lambda`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::divisor::{intersect, KaehlerClass};
use crate::error::{Error, Result};
use crate::fan::Fan;

/// An integer vector `a` indexed by rays with `sum_rho a_rho * eta_rho = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    a: Vec<BigInt>,
    nonneg: bool,
}

impl Relation {
    /// Validate that the weighted ray sum vanishes.
    pub fn new(fan: &Fan, a: Vec<BigInt>) -> Result<Relation> {
        if a.len() != fan.ray_count() {
            return Err(Error::ShapeMismatch(format!(
                "relation has {} entries for {} rays",
                a.len(),
                fan.ray_count()
            )));
        }
        for c in 0..fan.dim() {
            let mut acc = BigInt::zero();
            for (coeff, ray) in a.iter().zip(fan.rays()) {
                acc += coeff * &ray[c];
            }
            if !acc.is_zero() {
                return Err(Error::UnbalancedRelation { coordinate: c });
            }
        }
        let nonneg = a.iter().all(|e| !e.is_negative()) && a.iter().any(|e| e.is_positive());
        Ok(Relation { a, nonneg })
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.a
    }

    /// All entries nonnegative and not all zero.
    pub fn is_nonneg(&self) -> bool {
        self.nonneg
    }

    pub fn total_degree(&self) -> BigInt {
        self.a.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.a.iter().all(|e| e.is_zero() || e.is_one())
    }
}

/// The minimum of the pairing together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub value: BigRational,
    /// Lexicographically smallest minimizing relation.
    pub minimizer: Relation,
    /// Whether some global minimizer has all entries in {0, 1}.
    pub attained_by_binary: bool,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn componentwise_le(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The complete set of componentwise-minimal nonzero nonnegative integer
/// solutions of `sum_rho a_rho * eta_rho = 0`, by breadth-first branch and
/// bound in the style of Contejean-Devie: a partial solution `t` grows in
/// coordinate `j` only when the ray `eta_j` points against the current
/// weighted sum, and any candidate dominating a known minimal solution is
/// pruned. Output is sorted lexicographically.
pub fn minimal_nonneg_relations(fan: &Fan) -> Vec<Relation> {
    let m = fan.ray_count();
    if m == 0 {
        return Vec::new();
    }
    let rays = fan.rays();
    let mut minimal: Vec<Vec<BigInt>> = Vec::new();
    // frontier maps a partial solution to its weighted ray sum; BTreeMap
    // iteration keeps the search order (and hence everything observable)
    // deterministic
    let mut frontier: BTreeMap<Vec<BigInt>, Vec<BigInt>> = BTreeMap::new();
    for j in 0..m {
        let mut unit = vec![BigInt::zero(); m];
        unit[j] = BigInt::one();
        frontier.insert(unit, rays[j].clone());
    }
    while !frontier.is_empty() {
        let mut next: BTreeMap<Vec<BigInt>, Vec<BigInt>> = BTreeMap::new();
        for (t, sum) in &frontier {
            if sum.iter().all(Zero::is_zero) {
                if !minimal.iter().any(|s| componentwise_le(s, t)) {
                    minimal.push(t.clone());
                }
                continue;
            }
            for j in 0..m {
                if dot(sum, &rays[j]).is_negative() {
                    let mut child = t.clone();
                    child[j] += 1;
                    if minimal.iter().any(|s| componentwise_le(s, &child)) {
                        continue;
                    }
                    next.entry(child).or_insert_with(|| {
                        let mut child_sum = sum.clone();
                        for (cs, r) in child_sum.iter_mut().zip(&rays[j]) {
                            *cs += r;
                        }
                        child_sum
                    });
                }
            }
        }
        frontier = next;
    }
    minimal.sort();
    minimal
        .into_iter()
        .map(|a| Relation::new(fan, a).expect("solver produces exact relations"))
        .collect()
}

/// Minimum of the pairing over all nonzero nonnegative relations. Because
/// the coefficients are nonnegative the minimum is attained on a
/// componentwise-minimal solution, so the search reduces to
/// `minimal_nonneg_relations`.
pub fn gamma(fan: &Fan, kappa: &KaehlerClass) -> Result<GammaResult> {
    if let Some(index) = kappa.first_negative() {
        return Err(Error::NegativeKappa { index });
    }
    let minimal = minimal_nonneg_relations(fan);
    if minimal.is_empty() {
        return Err(Error::NoRelation);
    }
    let mut best_value: Option<BigRational> = None;
    let mut best_rel: Option<&Relation> = None;
    let mut attained_by_binary = false;
    for rel in &minimal {
        let value = intersect(kappa, rel)?;
        if best_value.as_ref().is_none_or(|v| value < *v) {
            best_value = Some(value);
            // first occurrence in the lexicographically sorted list wins ties
            best_rel = Some(rel);
            attained_by_binary = rel.is_binary();
        } else if best_value.as_ref() == Some(&value) && rel.is_binary() {
            attained_by_binary = true;
        }
    }
    Ok(GammaResult {
        value: best_value.expect("nonempty minimal set"),
        minimizer: best_rel.expect("nonempty minimal set").clone(),
        attained_by_binary,
    })
}

/// Exhaustive maximum of the pairing over nonnegative relations of total
/// degree between 1 and `dim + 1`.
pub fn lambda_lu(fan: &Fan, kappa: &KaehlerClass) -> Result<BigRational> {
    if let Some(index) = kappa.first_negative() {
        return Err(Error::NegativeKappa { index });
    }
    let cap = fan.dim() + 1;
    let mut best: Option<BigRational> = None;
    let mut current = vec![BigInt::zero(); fan.ray_count()];
    let mut sum = vec![BigInt::zero(); fan.dim()];
    enumerate_bounded_degree(fan, kappa, 0, cap, &mut current, &mut sum, &mut |value| {
        if best.as_ref().is_none_or(|b| *b < value) {
            best = Some(value);
        }
    });
    best.ok_or(Error::NoRelation)
}

/// Every relation in the degree-capped set, for callers that want the set
/// itself rather than the maximum.
pub fn degree_capped_relations(fan: &Fan, cap: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut current = vec![BigInt::zero(); fan.ray_count()];
    let mut sum = vec![BigInt::zero(); fan.dim()];
    collect_bounded_degree(fan, 0, cap, &mut current, &mut sum, &mut out);
    out.sort();
    out
}

fn collect_bounded_degree(
    fan: &Fan,
    index: usize,
    remaining: usize,
    current: &mut Vec<BigInt>,
    sum: &mut Vec<BigInt>,
    out: &mut Vec<Relation>,
) {
    if index == fan.ray_count() {
        if sum.iter().all(Zero::is_zero) && current.iter().any(|e| e.is_positive()) {
            out.push(Relation::new(fan, current.clone()).expect("balanced by construction"));
        }
        return;
    }
    for value in 0..=remaining {
        if value > 0 {
            current[index] = BigInt::from(value);
            for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
                *s += r;
            }
        }
        collect_bounded_degree(fan, index + 1, remaining - value, current, sum, out);
    }
    // undo the accumulated contributions of this coordinate
    let total = current[index].clone();
    if !total.is_zero() {
        for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
            *s -= &total * r;
        }
        current[index] = BigInt::zero();
    }
}

fn enumerate_bounded_degree(
    fan: &Fan,
    kappa: &KaehlerClass,
    index: usize,
    remaining: usize,
    current: &mut Vec<BigInt>,
    sum: &mut Vec<BigInt>,
    visit: &mut impl FnMut(BigRational),
) {
    if index == fan.ray_count() {
        if sum.iter().all(Zero::is_zero) && current.iter().any(|e| e.is_positive()) {
            let rel = Relation {
                a: current.clone(),
                nonneg: true,
            };
            visit(intersect(kappa, &rel).expect("lengths validated"));
        }
        return;
    }
    for value in 0..=remaining {
        if value > 0 {
            current[index] = BigInt::from(value);
            for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
                *s += r;
            }
        }
        enumerate_bounded_degree(fan, kappa, index + 1, remaining - value, current, sum, visit);
    }
    let total = current[index].clone();
    if !total.is_zero() {
        for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
            *s -= &total * r;
        }
        current[index] = BigInt::zero();
    }
}

/// Independent oracle for `gamma`: minimum of the pairing over all nonzero
/// nonnegative relations with every entry at most `bound`, by exhaustive
/// enumeration. `None` when no relation lives in that box. Agrees with
/// `gamma` whenever `bound` dominates every entry of every minimal relation.
pub fn gamma_by_brute_force(
    fan: &Fan,
    kappa: &KaehlerClass,
    bound: u64,
) -> Result<Option<BigRational>> {
    if let Some(index) = kappa.first_negative() {
        return Err(Error::NegativeKappa { index });
    }
    let mut best: Option<BigRational> = None;
    let mut current = vec![BigInt::zero(); fan.ray_count()];
    let mut sum = vec![BigInt::zero(); fan.dim()];
    brute_force_walk(fan, kappa, bound, 0, &mut current, &mut sum, &mut |value| {
        if best.as_ref().is_none_or(|b| *b > value) {
            best = Some(value);
        }
    });
    Ok(best)
}

fn brute_force_walk(
    fan: &Fan,
    kappa: &KaehlerClass,
    bound: u64,
    index: usize,
    current: &mut Vec<BigInt>,
    sum: &mut Vec<BigInt>,
    visit: &mut impl FnMut(BigRational),
) {
    if index == fan.ray_count() {
        if sum.iter().all(Zero::is_zero) && current.iter().any(|e| e.is_positive()) {
            let rel = Relation {
                a: current.clone(),
                nonneg: true,
            };
            visit(intersect(kappa, &rel).expect("lengths validated"));
        }
        return;
    }
    for value in 0..=bound {
        if value > 0 {
            current[index] = BigInt::from(value);
            for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
                *s += r;
            }
        }
        brute_force_walk(fan, kappa, bound, index + 1, current, sum, visit);
    }
    let total = current[index].clone();
    if !total.is_zero() {
        for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
            *s -= &total * r;
        }
        current[index] = BigInt::zero();
    }
}

/// All nonzero nonnegative relations with entries bounded by `bound`,
/// reduced to their componentwise-minimal members. Test oracle for
/// `minimal_nonneg_relations`.
pub fn box_minimal_relations(fan: &Fan, bound: u64) -> Vec<Relation> {
    let mut all: Vec<Vec<BigInt>> = Vec::new();
    let mut current = vec![BigInt::zero(); fan.ray_count()];
    let mut sum = vec![BigInt::zero(); fan.dim()];
    box_walk(fan, bound, 0, &mut current, &mut sum, &mut all);
    let mut minimal: Vec<Vec<BigInt>> = Vec::new();
    for cand in &all {
        if all
            .iter()
            .any(|other| other != cand && componentwise_le(other, cand))
        {
            continue;
        }
        minimal.push(cand.clone());
    }
    minimal.sort();
    minimal
        .into_iter()
        .map(|a| Relation::new(fan, a).expect("balanced by construction"))
        .collect()
}

fn box_walk(
    fan: &Fan,
    bound: u64,
    index: usize,
    current: &mut Vec<BigInt>,
    sum: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if index == fan.ray_count() {
        if sum.iter().all(Zero::is_zero) && current.iter().any(|e| e.is_positive()) {
            out.push(current.clone());
        }
        return;
    }
    for value in 0..=bound {
        if value > 0 {
            current[index] = BigInt::from(value);
            for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
                *s += r;
            }
        }
        box_walk(fan, bound, index + 1, current, sum, out);
    }
    let total = current[index].clone();
    if !total.is_zero() {
        for (s, r) in sum.iter_mut().zip(fan.ray(index)) {
            *s -= &total * r;
        }
        current[index] = BigInt::zero();
    }
}
