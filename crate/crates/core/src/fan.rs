//! The combinatorial model of a toric variety: rays, maximal cones,
//! validation (simplicial / smooth / complete / pure), point location and
//! walls.
//!
//! Rays keep the order they were given in and are never reordered; every
//! index elsewhere in the crate refers to that order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix};

/// A fan given by primitive ray generators and maximal cones (sets of ray
/// indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Build a fan and enforce the structural invariants: rays are primitive,
    /// pairwise distinct and of length `dim`; cone indices are valid; no
    /// maximal cone is contained in another.
    pub fn new(dim: usize, rays: Vec<Vec<BigInt>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        if dim == 0 {
            return Err(Error::ShapeMismatch("ambient dimension must be positive".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "ray {} has length {}, expected {}",
                    i,
                    ray.len(),
                    dim
                )));
            }
            if !lattice::is_primitive(ray).map_err(|_| Error::RayNotPrimitive { index: i })? {
                return Err(Error::RayNotPrimitive { index: i });
            }
        }
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                if rays[i] == rays[j] {
                    return Err(Error::DuplicateRay { first: i, second: j });
                }
            }
        }
        let mut cones: Vec<Vec<usize>> = Vec::with_capacity(max_cones.len());
        for cone in &max_cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != cone.len() {
                return Err(Error::ShapeMismatch("cone lists a ray twice".into()));
            }
            for &idx in &c {
                if idx >= rays.len() {
                    return Err(Error::InvalidCone {
                        index: idx,
                        rays: rays.len(),
                    });
                }
            }
            cones.push(c);
        }
        for i in 0..cones.len() {
            for j in 0..cones.len() {
                if i != j && is_subset(&cones[i], &cones[j]) {
                    return Err(Error::ShapeMismatch(format!(
                        "maximal cone {i} is contained in maximal cone {j}"
                    )));
                }
            }
        }
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn ray(&self, i: usize) -> &[BigInt] {
        &self.rays[i]
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// The rays as the rows of a matrix; this is the matrix of the pairing
    /// `m -> (<m, eta_rho>)_rho` in the chosen bases.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rays).expect("rays have uniform length")
    }

    fn cone_matrix(&self, cone: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        IntMatrix::from_rows(&rows).expect("rays have uniform length")
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Validation flags for a fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FanReport {
    pub simplicial: bool,
    pub smooth: bool,
    pub complete: bool,
    pub pure: bool,
}

impl FanReport {
    pub fn smooth_complete(&self) -> bool {
        self.smooth && self.complete
    }
}

/// A codimension-one face shared by two maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// Ray indices of the shared facet (size `dim - 1`).
    pub facet: Vec<usize>,
    /// Indices into `fan.max_cones()` of the two neighbors.
    pub neighbors: (usize, usize),
}

/// Classify a fan.
///
/// * simplicial: every maximal cone has exactly as many generators as the
///   dimension of their span;
/// * smooth: simplicial, and every cone's generators extend to a lattice
///   basis (all invariant factors one);
/// * pure: every maximal cone is full-dimensional;
/// * complete: pure, every facet of every maximal cone is shared by exactly
///   two maximal cones, and the adjacency graph is connected. This operative
///   criterion presumes simplicial facet combinatorics, the only kind this
///   crate accepts downstream.
pub fn validate_fan(fan: &Fan) -> FanReport {
    let mut simplicial = true;
    let mut smooth = true;
    let mut pure = true;
    for cone in fan.max_cones() {
        let m = fan.cone_matrix(cone);
        let r = lattice::rank(&m);
        if r != cone.len() {
            simplicial = false;
        }
        if r != fan.dim() {
            pure = false;
        }
        if !lattice::spans_saturated_sublattice(&m) {
            smooth = false;
        }
    }
    smooth = smooth && simplicial;
    let complete = simplicial && pure && facet_pairing(fan).is_ok() && adjacency_connected(fan);
    FanReport {
        simplicial,
        smooth,
        complete,
        pure,
    }
}

/// Facets keyed by their ray indices, each with the maximal cones containing it.
type FacetPairs = Vec<(Vec<usize>, Vec<usize>)>;

/// Map each facet ((dim-1)-subset of a maximal cone) to the cones containing
/// it. Err with the offending facet when some facet is not shared by exactly
/// two maximal cones.
fn facet_pairing(fan: &Fan) -> std::result::Result<FacetPairs, Vec<usize>> {
    use std::collections::BTreeMap;
    if fan.max_cones().is_empty() {
        return Err(Vec::new());
    }
    let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, cone) in fan.max_cones().iter().enumerate() {
        for drop in 0..cone.len() {
            let mut facet = cone.clone();
            facet.remove(drop);
            facets.entry(facet).or_default().push(ci);
        }
    }
    for (facet, cones) in &facets {
        if cones.len() != 2 {
            return Err(facet.clone());
        }
    }
    Ok(facets.into_iter().collect())
}

fn adjacency_connected(fan: &Fan) -> bool {
    let n = fan.max_cones().len();
    if n == 0 {
        return false;
    }
    let Ok(pairs) = facet_pairing(fan) else {
        return false;
    };
    let mut adj = vec![Vec::new(); n];
    for (_, cones) in &pairs {
        adj[cones[0]].push(cones[1]);
        adj[cones[1]].push(cones[0]);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(c) = stack.pop() {
        for &d in &adj[c] {
            if !seen[d] {
                seen[d] = true;
                stack.push(d);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All walls of a smooth complete fan, in a deterministic order (sorted by
/// facet indices). Errors with `NotComplete` when some facet is not shared by
/// exactly two maximal cones.
pub fn walls(fan: &Fan) -> Result<Vec<Wall>> {
    let pairs = facet_pairing(fan).map_err(|facet| Error::NotComplete(format!("{facet:?}")))?;
    Ok(pairs
        .into_iter()
        .map(|(facet, cones)| Wall {
            facet,
            neighbors: (cones[0], cones[1]),
        })
        .collect())
}

/// Locate the unique cone containing `v` in its relative interior, together
/// with the strictly positive coefficients expressing `v` in its generators.
/// The zero vector yields the zero cone: an empty index set and no
/// coefficients.
pub fn locate_cone(fan: &Fan, v: &[BigInt]) -> Result<(Vec<usize>, Vec<BigRational>)> {
    if v.len() != fan.dim() {
        return Err(Error::ShapeMismatch(format!(
            "vector length {} does not match fan dimension {}",
            v.len(),
            fan.dim()
        )));
    }
    if v.iter().all(Zero::is_zero) {
        return Ok((Vec::new(), Vec::new()));
    }
    let rhs: Vec<BigRational> = v.iter().map(|e| BigRational::from_integer(e.clone())).collect();
    for cone in fan.max_cones() {
        // solve sum_i x_i * ray_i = v; rows of the system are coordinates
        let system: Vec<Vec<BigRational>> = (0..fan.dim())
            .map(|c| {
                cone.iter()
                    .map(|&i| BigRational::from_integer(fan.ray(i)[c].clone()))
                    .collect()
            })
            .collect();
        let Some(x) = lattice::solve_exact(&system, &rhs) else {
            continue;
        };
        // exactness guard: solve_exact pins free variables, so recheck
        let mut ok = true;
        for (c, want) in rhs.iter().enumerate() {
            let mut acc = BigRational::zero();
            for (pos, &i) in cone.iter().enumerate() {
                acc += BigRational::from_integer(fan.ray(i)[c].clone()) * &x[pos];
            }
            if acc != *want {
                ok = false;
                break;
            }
        }
        if !ok || x.iter().any(BigRational::is_negative) {
            continue;
        }
        let mut face = Vec::new();
        let mut coeffs = Vec::new();
        for (pos, &i) in cone.iter().enumerate() {
            if x[pos].is_positive() {
                face.push(i);
                coeffs.push(x[pos].clone());
            }
        }
        return Ok((face, coeffs));
    }
    Err(Error::OutsideSupport)
}


#[cfg(test)]
mod tests {
    use super::testfans::*;
    use super::*;

    #[test]
    fn validates_projective_plane() {
        let report = validate_fan(&projective_plane());
        assert!(report.simplicial && report.smooth && report.complete && report.pure);
    }

    #[test]
    fn validates_hirzebruch() {
        let report = validate_fan(&hirzebruch2());
        assert!(report.smooth && report.complete);
    }

    #[test]
    fn single_cone_is_smooth_not_complete() {
        let report = validate_fan(&single_quadrant());
        assert!(report.smooth);
        assert!(!report.complete);
    }

    #[test]
    fn rejects_bad_rays_and_cones() {
        assert_eq!(
            Fan::new(2, vec![bigvec(&[2, 4])], vec![]),
            Err(Error::RayNotPrimitive { index: 0 })
        );
        assert_eq!(
            Fan::new(2, vec![bigvec(&[1, 0]), bigvec(&[1, 0])], vec![]),
            Err(Error::DuplicateRay { first: 0, second: 1 })
        );
        assert_eq!(
            Fan::new(2, vec![bigvec(&[1, 0])], vec![vec![0, 3]]),
            Err(Error::InvalidCone { index: 3, rays: 1 })
        );
    }

    #[test]
    fn non_smooth_cone_detected() {
        // quadric cone generators (1,0),(1,2): index two sublattice
        let fan = Fan::new(2, vec![bigvec(&[1, 0]), bigvec(&[1, 2])], vec![vec![0, 1]]).unwrap();
        let report = validate_fan(&fan);
        assert!(report.simplicial);
        assert!(!report.smooth);
    }

    #[test]
    fn locates_zero_and_interior_points() {
        let h2 = hirzebruch2();
        // u2 + u4 = 0: the zero cone
        assert_eq!(locate_cone(&h2, &bigvec(&[0, 0])).unwrap(), (vec![], vec![]));
        // u1 + u3 = 2 u2: the ray through u2 with coefficient 2
        let (face, coeffs) = locate_cone(&h2, &bigvec(&[0, 2])).unwrap();
        assert_eq!(face, vec![1]);
        assert_eq!(coeffs, vec![BigRational::from_integer(2.into())]);
        // interior of a 2-cone
        let (face, coeffs) = locate_cone(&projective_plane(), &bigvec(&[2, 1])).unwrap();
        assert_eq!(face, vec![0, 1]);
        assert_eq!(
            coeffs,
            vec![
                BigRational::from_integer(2.into()),
                BigRational::from_integer(1.into())
            ]
        );
    }

    #[test]
    fn locate_reports_outside_support() {
        assert_eq!(
            locate_cone(&single_quadrant(), &bigvec(&[-1, 0])),
            Err(Error::OutsideSupport)
        );
    }

    #[test]
    fn locate_coefficients_reconstruct_the_point() {
        let fans = [projective_plane(), hirzebruch2(), p1_x_p1()];
        for fan in &fans {
            for x in -3i64..=3 {
                for y in -3i64..=3 {
                    let v = bigvec(&[x, y]);
                    let (face, coeffs) = locate_cone(fan, &v).unwrap();
                    let mut acc = vec![BigRational::zero(); 2];
                    for (&i, c) in face.iter().zip(&coeffs) {
                        for d in 0..2 {
                            acc[d] += BigRational::from_integer(fan.ray(i)[d].clone()) * c;
                        }
                    }
                    let want: Vec<BigRational> =
                        v.iter().map(|e| BigRational::from_integer(e.clone())).collect();
                    assert_eq!(acc, want);
                    assert!(coeffs.iter().all(BigRational::is_positive));
                }
            }
        }
    }

    #[test]
    fn wall_counts() {
        assert_eq!(walls(&hirzebruch2()).unwrap().len(), 4);
        assert_eq!(walls(&projective_plane()).unwrap().len(), 3);
        assert!(matches!(
            walls(&single_quadrant()),
            Err(Error::NotComplete(_))
        ));
    }

    fn projective_3_space() -> Fan {
        Fan::new(
            3,
            vec![
                bigvec(&[1, 0, 0]),
                bigvec(&[0, 1, 0]),
                bigvec(&[0, 0, 1]),
                bigvec(&[-1, -1, -1]),
            ],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn three_dimensional_walls_and_location() {
        let p3 = projective_3_space();
        assert!(validate_fan(&p3).smooth_complete());
        let ws = walls(&p3).unwrap();
        assert_eq!(ws.len(), 6);
        for w in &ws {
            assert_eq!(w.facet.len(), 2);
            assert_ne!(w.neighbors.0, w.neighbors.1);
        }
        let (face, coeffs) = locate_cone(&p3, &bigvec(&[1, 2, 3])).unwrap();
        assert_eq!(face, vec![0, 1, 2]);
        assert_eq!(
            coeffs,
            vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(2.into()),
                BigRational::from_integer(3.into())
            ]
        );
        // a point on a two-dimensional face
        let (face, _) = locate_cone(&p3, &bigvec(&[1, 1, 0])).unwrap();
        assert_eq!(face, vec![0, 1]);
    }

    #[test]
    fn projective_line_is_complete() {
        // one-dimensional fan: facets are empty sets shared by both cones
        let p1 = Fan::new(1, vec![bigvec(&[1]), bigvec(&[-1])], vec![vec![0], vec![1]]).unwrap();
        let report = validate_fan(&p1);
        assert!(report.smooth_complete());
        assert_eq!(walls(&p1).unwrap().len(), 1);
        let half = Fan::new(1, vec![bigvec(&[1])], vec![vec![0]]).unwrap();
        assert!(!validate_fan(&half).complete);
    }

    #[test]
    fn validation_invariant_under_ray_permutation() {
        // relabel the rays of H2 and permute cone indices accordingly
        let perm = [2usize, 0, 3, 1];
        let h2 = hirzebruch2();
        let mut rays = vec![Vec::new(); 4];
        for (old, &new_pos) in perm.iter().enumerate() {
            rays[new_pos] = h2.ray(old).to_vec();
        }
        let cones: Vec<Vec<usize>> = h2
            .max_cones()
            .iter()
            .map(|c| c.iter().map(|&i| perm[i]).collect())
            .collect();
        let permuted = Fan::new(2, rays, cones).unwrap();
        assert_eq!(validate_fan(&permuted), validate_fan(&h2));
    }

    #[test]
    fn validation_invariant_under_unimodular_change() {
        // T = [[1,1],[0,1]] applied to every ray of P2
        let p2 = projective_plane();
        let rays: Vec<Vec<BigInt>> = p2
            .rays()
            .iter()
            .map(|r| vec![&r[0] + &r[1], r[1].clone()])
            .collect();
        let changed = Fan::new(2, rays, p2.max_cones().to_vec()).unwrap();
        assert_eq!(validate_fan(&changed), validate_fan(&p2));
        // locate_cone transported: v = (2,1) maps to (3,1)
        let (face, coeffs) = locate_cone(&changed, &bigvec(&[3, 1])).unwrap();
        let (face0, coeffs0) = locate_cone(&p2, &bigvec(&[2, 1])).unwrap();
        assert_eq!(face, face0);
        assert_eq!(coeffs, coeffs0);
    }
}
