//! Shared corpus and random generators for the integration suites.
// each test target compiles this module separately and uses a different slice of it
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

use toricgw::divisor::{intersect, is_ample, wall_curve_relation, KaehlerClass};
use toricgw::fan::{validate_fan, walls, Fan};
use toricgw::report::FanDocument;

pub fn bigvec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&e| BigInt::from(e)).collect()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub fan: Fan,
    pub kappa: KaehlerClass,
}

fn entry(name: &'static str, dim: usize, rays: &[&[i64]], cones: &[&[usize]], kappa: &[i64]) -> CorpusEntry {
    let fan = Fan::new(
        dim,
        rays.iter().map(|r| bigvec(r)).collect(),
        cones.iter().map(|c| c.to_vec()).collect(),
    )
    .expect("corpus fan is well formed");
    let kappa = KaehlerClass::from_integers(&fan, kappa).expect("kappa length");
    CorpusEntry { name, fan, kappa }
}

/// The fixed corpus: six smooth complete fans with ample classes.
pub fn corpus() -> Vec<CorpusEntry> {
    let entries = vec![
        entry(
            "projective-plane",
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
            &[0, 0, 1],
        ),
        entry(
            "p1-x-p1",
            2,
            &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
            &[&[0, 2], &[1, 2], &[1, 3], &[0, 3]],
            &[0, 1, 0, 2],
        ),
        entry(
            "hirzebruch-2",
            2,
            &[&[-1, 2], &[0, 1], &[1, 0], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
            &[0, 0, 1, 1],
        ),
        entry(
            "plane-blowup",
            2,
            &[&[1, 0], &[1, 1], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
            &[1, 0, 1, 1],
        ),
        entry(
            "projective-3-space",
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
            &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
            &[0, 0, 0, 1],
        ),
        entry(
            "p1-x-p2",
            3,
            &[
                &[1, 0, 0],
                &[-1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[0, -1, -1],
            ],
            &[
                &[0, 2, 3],
                &[0, 2, 4],
                &[0, 3, 4],
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
            ],
            &[0, 1, 0, 0, 1],
        ),
    ];
    for e in &entries {
        let report = validate_fan(&e.fan);
        assert!(report.smooth_complete(), "{} must be smooth complete", e.name);
        assert!(is_ample(&e.fan, &e.kappa).unwrap(), "{} kappa must be ample", e.name);
    }
    entries
}

pub fn document_for(entry: &CorpusEntry) -> FanDocument {
    FanDocument {
        name: Some(entry.name.to_string()),
        dim: entry.fan.dim(),
        rays: entry.fan.rays().to_vec(),
        max_cones: entry.fan.max_cones().to_vec(),
        kappa: Some(entry.kappa.coefficients().to_vec()),
    }
}

/// A random smooth complete toric surface with an ample class, produced by
/// blowing up a random base surface at random torus-fixed points. The class
/// stays ample across a blowup by giving the new ray the pulled-back
/// coefficient minus half the smaller adjacent wall slack.
pub fn random_surface(rng: &mut StdRng, max_blowups: usize) -> (Fan, KaehlerClass) {
    // cyclic ray order with consecutive determinants +-1
    let (mut rays, mut kappa): (Vec<[i64; 2]>, Vec<BigRational>) = match rng.gen_range(0..4u32) {
        0 => (
            vec![[1, 0], [0, 1], [-1, -1]],
            vec![rat(1), rat(1), rat(1)],
        ),
        1 => (
            vec![[1, 0], [0, 1], [-1, 0], [0, -1]],
            vec![rat(1), rat(1), rat(1), rat(1)],
        ),
        2 => (
            vec![[0, -1], [1, 0], [0, 1], [-1, 1]],
            vec![rat(1), rat(1), rat(0), rat(0)],
        ),
        _ => (
            vec![[0, -1], [1, 0], [0, 1], [-1, 2]],
            vec![rat(1), rat(1), rat(0), rat(0)],
        ),
    };
    let blowups = rng.gen_range(0..=max_blowups);
    for _ in 0..blowups {
        let m = rays.len();
        let i = rng.gen_range(0..m);
        let j = (i + 1) % m;
        let fan = cyclic_fan(&rays);
        let class = KaehlerClass::new(&fan, kappa.clone()).unwrap();
        let slack_i = wall_slack(&fan, &class, i);
        let slack_j = wall_slack(&fan, &class, j);
        let delta = slack_i.min(slack_j).min(rat(1)) / rat(2);
        let new_ray = [rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]];
        let new_kappa = &kappa[i] + &kappa[j] - delta;
        if j == 0 {
            // between the last and first ray: append in cyclic order
            rays.push(new_ray);
            kappa.push(new_kappa);
        } else {
            rays.insert(j, new_ray);
            kappa.insert(j, new_kappa);
        }
    }
    let fan = cyclic_fan(&rays);
    let class = KaehlerClass::new(&fan, kappa).unwrap();
    // blowups can push single coefficients negative even though the class
    // stays ample; switch to the equivalent nonnegative representative
    // (pairings are unchanged, so ampleness and the bounds are too)
    let class = toricgw::divisor::normalize_kappa(&fan, &class).unwrap();
    assert!(validate_fan(&fan).smooth_complete());
    assert!(is_ample(&fan, &class).unwrap());
    (fan, class)
}

/// A random smooth complete threefold fan with a nonnegative class, made by
/// subdividing random maximal cones of a base fan at the sum of their
/// generators (each step replaces one smooth cone by three smooth ones).
pub fn random_threefold(rng: &mut StdRng, max_blowups: usize) -> (Fan, KaehlerClass) {
    let p1xp2 = rng.gen_bool(0.5);
    let mut rays: Vec<Vec<BigInt>> = if p1xp2 {
        vec![
            bigvec(&[1, 0, 0]),
            bigvec(&[-1, 0, 0]),
            bigvec(&[0, 1, 0]),
            bigvec(&[0, 0, 1]),
            bigvec(&[0, -1, -1]),
        ]
    } else {
        vec![
            bigvec(&[1, 0, 0]),
            bigvec(&[0, 1, 0]),
            bigvec(&[0, 0, 1]),
            bigvec(&[-1, -1, -1]),
        ]
    };
    let mut cones: Vec<Vec<usize>> = if p1xp2 {
        vec![
            vec![0, 2, 3],
            vec![0, 2, 4],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 4],
        ]
    } else {
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
    };
    for _ in 0..rng.gen_range(0..=max_blowups) {
        let target = rng.gen_range(0..cones.len());
        let cone = cones.swap_remove(target);
        let mut sum = vec![BigInt::from(0); 3];
        for &i in &cone {
            for (s, r) in sum.iter_mut().zip(&rays[i]) {
                *s += r;
            }
        }
        let new = rays.len();
        rays.push(sum);
        cones.push(vec![cone[0], cone[1], new]);
        cones.push(vec![cone[0], cone[2], new]);
        cones.push(vec![cone[1], cone[2], new]);
    }
    let fan = Fan::new(3, rays, cones).expect("subdivided threefold fan");
    assert!(validate_fan(&fan).smooth_complete());
    let kappa = KaehlerClass::new(
        &fan,
        (0..fan.ray_count())
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(0i64..=8)), BigInt::from(2)))
            .collect(),
    )
    .unwrap();
    (fan, kappa)
}

fn cyclic_fan(rays: &[[i64; 2]]) -> Fan {
    let m = rays.len();
    let ray_vecs: Vec<Vec<BigInt>> = rays.iter().map(|r| bigvec(&r[..])).collect();
    let cones: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    Fan::new(2, ray_vecs, cones).expect("cyclic surface fan")
}

/// Pairing of the class with the wall curve across the wall spanned by ray
/// `ray_index` (surface case: walls are single rays).
fn wall_slack(fan: &Fan, kappa: &KaehlerClass, ray_index: usize) -> BigRational {
    let all = walls(fan).expect("complete surface fan");
    let wall = all
        .iter()
        .find(|w| w.facet == vec![ray_index])
        .expect("every ray spans a wall");
    let rel = wall_curve_relation(fan, wall).expect("smooth wall");
    intersect(kappa, &rel).expect("matching lengths")
}

/// A random unimodular matrix: a short product of shears and coordinate
/// swaps, entries kept small.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut t: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..steps {
        match rng.gen_range(0..3u32) {
            0 => {
                // shear: row_a += s * row_b
                let a = rng.gen_range(0..n);
                let mut b = rng.gen_range(0..n);
                if a == b {
                    b = (b + 1) % n;
                }
                let s: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                for c in 0..n {
                    t[a][c] += s * t[b][c];
                }
            }
            1 => {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                t.swap(a, b);
            }
            _ => {
                let a = rng.gen_range(0..n);
                for c in 0..n {
                    t[a][c] = -t[a][c];
                }
            }
        }
    }
    t
}

/// Apply a lattice change to every ray: `ray -> T * ray`.
pub fn apply_unimodular(fan: &Fan, t: &[Vec<i64>]) -> Fan {
    let rays: Vec<Vec<BigInt>> = fan
        .rays()
        .iter()
        .map(|ray| {
            (0..fan.dim())
                .map(|r| {
                    let mut acc = BigInt::from(0);
                    for (c, e) in ray.iter().enumerate() {
                        acc += BigInt::from(t[r][c]) * e;
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Fan::new(fan.dim(), rays, fan.max_cones().to_vec()).expect("unimodular image fan")
}

/// Relabel rays by a permutation (new_index = perm[old_index]) and carry the
/// class coefficients along.
pub fn permute_fan(fan: &Fan, kappa: &KaehlerClass, perm: &[usize]) -> (Fan, KaehlerClass) {
    let m = fan.ray_count();
    let mut rays = vec![Vec::new(); m];
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(0)); m];
    for old in 0..m {
        rays[perm[old]] = fan.ray(old).to_vec();
        coeffs[perm[old]] = kappa.coefficients()[old].clone();
    }
    let cones: Vec<Vec<usize>> = fan
        .max_cones()
        .iter()
        .map(|c| c.iter().map(|&i| perm[i]).collect())
        .collect();
    let fan = Fan::new(fan.dim(), rays, cones).expect("permuted fan");
    let kappa = KaehlerClass::new(&fan, coeffs).expect("permuted kappa");
    (fan, kappa)
}

/// Random permutation of 0..n by repeated swaps.
pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
