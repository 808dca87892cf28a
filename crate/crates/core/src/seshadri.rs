//! Upper bounds for Seshadri constants, either from the toric minimum bound
//! or from a user-supplied list of minimal-curve degrees.

use num_rational::BigRational;
use num_traits::Signed;

use crate::divisor::{is_ample, KaehlerClass};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::relations::gamma;

/// Where a Seshadri upper bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeshadriSource {
    /// The toric minimum over nonzero nonnegative relations.
    Gamma,
    /// The minimum of an explicit list of minimal-curve degrees.
    MinimalCurveList,
}

/// An upper bound for the Seshadri constant, valid at every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriBound {
    pub upper: BigRational,
    pub source: SeshadriSource,
    /// Standing assumptions the bound relies on.
    pub caveat: String,
}

/// Upper bound from the toric minimum. Requires an ample class; on smooth
/// complete toric varieties ample classes are very ample, which the bound's
/// hypothesis asks for, and the report states that assumption.
pub fn seshadri_bound_toric(fan: &Fan, kappa: &KaehlerClass) -> Result<SeshadriBound> {
    if let Some(index) = kappa.first_negative() {
        return Err(Error::NegativeKappa { index });
    }
    if !is_ample(fan, kappa)? {
        return Err(Error::NotAmple);
    }
    let g = gamma(fan, kappa)?;
    Ok(SeshadriBound {
        upper: g.value,
        source: SeshadriSource::Gamma,
        caveat: "holds at every point; assumes the class is very ample (automatic for ample \
                 classes on smooth complete toric varieties)"
            .into(),
    })
}

/// Upper bound as the minimum of explicitly supplied positive curve degrees.
pub fn seshadri_bound_minimal_curves(degrees: &[BigRational]) -> Result<SeshadriBound> {
    if degrees.is_empty() {
        return Err(Error::NoCurves);
    }
    for d in degrees {
        if !d.is_positive() {
            return Err(Error::InvalidDegree {
                value: crate::rat::format_rational(d),
            });
        }
    }
    let upper = degrees.iter().min().unwrap().clone();
    Ok(SeshadriBound {
        upper,
        source: SeshadriSource::MinimalCurveList,
        caveat: "holds at every point; assumes the curves form minimal families for a very \
                 ample class"
            .into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::testfans::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn toric_bound_equals_gamma() {
        let h2 = hirzebruch2();
        let kappa = KaehlerClass::from_integers(&h2, &[0, 0, 1, 1]).unwrap();
        let bound = seshadri_bound_toric(&h2, &kappa).unwrap();
        assert_eq!(bound.upper, rat(1));
        assert_eq!(bound.source, SeshadriSource::Gamma);

        let p2 = projective_plane();
        let k1 = KaehlerClass::from_integers(&p2, &[0, 0, 1]).unwrap();
        assert_eq!(seshadri_bound_toric(&p2, &k1).unwrap().upper, rat(1));
        let k2 = KaehlerClass::from_integers(&p2, &[0, 0, 2]).unwrap();
        assert_eq!(seshadri_bound_toric(&p2, &k2).unwrap().upper, rat(2));
    }

    #[test]
    fn toric_bound_requires_ample() {
        let h2 = hirzebruch2();
        let flat = KaehlerClass::from_integers(&h2, &[0, 0, 1, 0]).unwrap();
        assert_eq!(seshadri_bound_toric(&h2, &flat), Err(Error::NotAmple));
    }

    #[test]
    fn curve_list_bound_is_the_minimum() {
        let bound = seshadri_bound_minimal_curves(&[rat(2), rat(3)]).unwrap();
        assert_eq!(bound.upper, rat(2));
        assert_eq!(
            seshadri_bound_minimal_curves(&[rat(5)]).unwrap().upper,
            rat(5)
        );
        assert_eq!(seshadri_bound_minimal_curves(&[]), Err(Error::NoCurves));
        assert!(matches!(
            seshadri_bound_minimal_curves(&[rat(1), rat(0)]),
            Err(Error::InvalidDegree { .. })
        ));
    }

    #[test]
    fn curve_list_bound_dominates_the_toric_bound() {
        // the toric bound minimizes over a larger feasible set
        for (fan, kappa) in [
            (hirzebruch2(), vec![0, 0, 1, 1]),
            (projective_plane(), vec![0, 0, 1]),
            (p1_x_p1(), vec![0, 2, 0, 1]),
        ] {
            let kappa = KaehlerClass::from_integers(&fan, &kappa).unwrap();
            let toric = seshadri_bound_toric(&fan, &kappa).unwrap();
            let degrees: Vec<BigRational> = crate::primcoll::minimal_curve_families(&fan)
                .unwrap()
                .into_iter()
                .map(|(coll, _)| {
                    let mut a = vec![BigInt::from(0); fan.ray_count()];
                    for &i in &coll.indices {
                        a[i] = BigInt::from(1);
                    }
                    let rel = crate::relations::Relation::new(&fan, a).unwrap();
                    crate::divisor::intersect(&kappa, &rel).unwrap()
                })
                .collect();
            let from_curves = seshadri_bound_minimal_curves(&degrees).unwrap();
            assert!(from_curves.upper >= toric.upper);
        }
    }
}
