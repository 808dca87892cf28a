//! The fan document format, orchestration of the full computation, and the
//! machine- plus human-readable bound report.
//!
//! A fan document is strict JSON with the fields `name` (optional string),
//! `dim`, `rays`, `max_cones` and optional `kappa`; unknown fields are
//! rejected. Kappa entries may be integers, decimals or "p/q" strings and
//! are parsed exactly, never through floating point. Every number in a
//! report is serialized as an exact rational string for the same reason.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::divisor::{self, KaehlerClass};
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan, FanReport};
use crate::polytope;
use crate::primcoll;
use crate::rat::{self, serde_int_vec, serde_rat, serde_rat_vec, serde_rat_vec_vec};
use crate::relations;

/// Parsed form of a fan document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanDocument {
    pub name: Option<String>,
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub max_cones: Vec<Vec<usize>>,
    pub kappa: Option<Vec<BigRational>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    dim: usize,
    rays: Vec<Vec<serde_json::Value>>,
    max_cones: Vec<Vec<usize>>,
    #[serde(default)]
    kappa: Option<Vec<serde_json::Value>>,
}

fn integer_from_value(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => {
            let text = n.to_string();
            text.parse().map_err(|_| Error::BadNumber {
                value: text,
                reason: "ray coordinates must be integers".into(),
            })
        }
        other => Err(Error::BadNumber {
            value: other.to_string(),
            reason: "expected an integer".into(),
        }),
    }
}

fn rational_from_value(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::Number(n) => rat::parse_rational(&n.to_string()),
        serde_json::Value::String(s) => rat::parse_rational(s),
        other => Err(Error::BadNumber {
            value: other.to_string(),
            reason: "expected a number or a \"p/q\" string".into(),
        }),
    }
}

/// Strict parse of a fan document. The document must describe a structurally
/// valid fan (primitive distinct rays, in-range cone indices) and, when
/// kappa is present, one exact rational per ray.
pub fn parse_fan_file(bytes: &[u8]) -> Result<FanDocument> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let rays: Vec<Vec<BigInt>> = raw
        .rays
        .iter()
        .map(|ray| ray.iter().map(integer_from_value).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let kappa: Option<Vec<BigRational>> = match &raw.kappa {
        Some(values) => Some(
            values
                .iter()
                .map(rational_from_value)
                .collect::<Result<_>>()?,
        ),
        None => None,
    };
    if let Some(k) = &kappa {
        if k.len() != rays.len() {
            return Err(Error::ShapeMismatch(format!(
                "kappa has {} entries for {} rays",
                k.len(),
                rays.len()
            )));
        }
    }
    let doc = FanDocument {
        name: raw.name,
        dim: raw.dim,
        rays,
        max_cones: raw.max_cones,
        kappa,
    };
    doc.fan()?; // must describe a valid fan
    Ok(doc)
}

impl FanDocument {
    pub fn fan(&self) -> Result<Fan> {
        Fan::new(self.dim, self.rays.clone(), self.max_cones.clone())
    }

    pub fn kaehler_class(&self, fan: &Fan) -> Result<KaehlerClass> {
        match &self.kappa {
            Some(k) => KaehlerClass::new(fan, k.clone()),
            None => Err(Error::MissingKappa),
        }
    }
}

/// A structured warning with a stable code so tests can assert presence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    pub code: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupSummary {
    pub free_rank: usize,
    #[serde(with = "serde_int_vec")]
    pub torsion: Vec<BigInt>,
    /// Rows express the chosen generators; column rho gives the coordinates
    /// of the ray divisor class rho.
    pub presentation: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveRelationSummary {
    pub collection: Vec<usize>,
    pub cone: Vec<usize>,
    #[serde(with = "serde_int_vec")]
    pub coefficients: Vec<BigInt>,
    #[serde(with = "crate::rat::serde_int")]
    pub degree: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFamilySummary {
    pub collection: Vec<usize>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSummary {
    #[serde(with = "serde_rat")]
    pub value: BigRational,
    #[serde(with = "serde_int_vec")]
    pub minimizer: Vec<BigInt>,
    pub attained_by_binary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthSummary {
    #[serde(with = "serde_rat")]
    pub value: BigRational,
    #[serde(with = "serde_int_vec")]
    pub direction: Vec<BigInt>,
    pub certified_by_gamma: bool,
}

/// Everything the tool knows about one (fan, class) input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: Option<String>,
    pub validation: FanReport,
    pub class_group: ClassGroupSummary,
    pub fano: bool,
    pub ample: bool,
    /// The class representative every bound below was computed on.
    #[serde(with = "serde_rat_vec")]
    pub kappa: Vec<BigRational>,
    pub normalized: bool,
    pub primitive_relations: Vec<PrimitiveRelationSummary>,
    pub minimal_curve_families: Vec<CurveFamilySummary>,
    pub gamma: GammaSummary,
    #[serde(with = "serde_rat")]
    pub lambda: BigRational,
    #[serde(with = "serde_rat_vec_vec")]
    pub polytope_vertices: Vec<Vec<BigRational>>,
    pub lattice_width: WidthSummary,
    #[serde(with = "serde_rat")]
    pub gromov_width_upper: BigRational,
    #[serde(with = "serde_rat")]
    pub seshadri_upper: BigRational,
    pub warnings: Vec<Warning>,
}

/// Options for [`run_report`].
#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    /// Apply `normalize_kappa` before computing (otherwise a negative
    /// coefficient is an error).
    pub normalize: bool,
    /// Optional cap for the width direction search.
    pub search_bound: Option<BigInt>,
}

/// Run every computation on a parsed document and assemble the report.
/// The fan must validate smooth and complete; the width of the momentum
/// polytope must equal the minimum bound exactly, otherwise the run aborts
/// with an internal contradiction.
pub fn run_report(doc: &FanDocument, options: &ReportOptions) -> Result<BoundReport> {
    let fan = doc.fan()?;
    let validation = validate_fan(&fan);
    if !validation.smooth_complete() {
        return Err(Error::NotSmoothComplete);
    }
    let raw_kappa = doc.kaehler_class(&fan)?;
    let (kappa, normalized) = if options.normalize {
        let normalized = divisor::normalize_kappa(&fan, &raw_kappa)?;
        let changed = normalized != raw_kappa;
        (normalized, changed)
    } else {
        if let Some(index) = raw_kappa.first_negative() {
            return Err(Error::NegativeKappa { index });
        }
        (raw_kappa, false)
    };

    let group = divisor::class_group(&fan);
    let class_group = ClassGroupSummary {
        free_rank: group.free_rank,
        torsion: group.torsion.clone(),
        presentation: group
            .presentation
            .row_vectors()
            .iter()
            .map(|row| row.iter().map(BigInt::to_string).collect())
            .collect(),
    };

    let mut primitive_relations = Vec::new();
    for coll in primcoll::primitive_collections(&fan) {
        let rel = primcoll::primitive_relation(&fan, &coll)?;
        primitive_relations.push(PrimitiveRelationSummary {
            collection: coll.indices.clone(),
            cone: rel.sigma.clone(),
            coefficients: rel.coefficients.clone(),
            degree: rel.degree.clone(),
        });
    }
    let fano = primitive_relations
        .iter()
        .all(|r| r.degree.is_positive());

    let minimal_curve_families = primcoll::minimal_curve_families(&fan)?
        .into_iter()
        .map(|(coll, degree)| CurveFamilySummary {
            collection: coll.indices,
            degree,
        })
        .collect();

    let gamma = relations::gamma(&fan, &kappa)?;
    let lambda = relations::lambda_lu(&fan, &kappa)?;
    let ample = divisor::is_ample(&fan, &kappa)?;

    let p = polytope::momentum_polytope(&fan, &kappa)?;
    let vertices = p.vertices()?.to_vec();
    let width =
        polytope::lattice_width_certified(&p, &gamma.value, options.search_bound.clone())?;
    if width.value != gamma.value {
        return Err(Error::InternalContradiction(format!(
            "lattice width {} differs from the minimum bound {}",
            rat::format_rational(&width.value),
            rat::format_rational(&gamma.value)
        )));
    }

    let mut warnings = Vec::new();
    let cap = BigInt::from(fan.dim() + 1);
    if relations::minimal_nonneg_relations(&fan)
        .iter()
        .any(|r| r.total_degree() > cap)
    {
        warnings.push(Warning {
            code: "LAMBDA_DEGREE_CAP".into(),
            text: format!(
                "lambda maximizes only over relations of total degree at most {cap}; a minimal \
                 relation of higher total degree exists and is excluded from that maximum"
            ),
        });
    }
    if !ample {
        warnings.push(Warning {
            code: "SESHADRI_ASSUMES_AMPLE".into(),
            text: "the class is not ample, so the Seshadri upper bound's very-ampleness \
                   hypothesis fails; the value is reported for reference only"
                .into(),
        });
    }
    warnings.push(Warning {
        code: "SESHADRI_UPPER_BOUND_ONLY".into(),
        text: "seshadri_upper is an upper bound at every point; whether it is attained is not \
               decidable by this tool"
            .into(),
    });

    Ok(BoundReport {
        name: doc.name.clone(),
        validation,
        class_group,
        fano,
        ample,
        kappa: kappa.coefficients().to_vec(),
        normalized,
        primitive_relations,
        minimal_curve_families,
        gamma: GammaSummary {
            value: gamma.value.clone(),
            minimizer: gamma.minimizer.entries().to_vec(),
            attained_by_binary: gamma.attained_by_binary,
        },
        lambda,
        polytope_vertices: vertices,
        lattice_width: WidthSummary {
            value: width.value,
            direction: width.direction,
            certified_by_gamma: width.gamma_certified,
        },
        gromov_width_upper: gamma.value.clone(),
        seshadri_upper: gamma.value,
        warnings,
    })
}

impl BoundReport {
    /// Deterministic machine-readable serialization.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parse a serialized report back.
    pub fn from_json(text: &str) -> Result<BoundReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "fan: {name}")?;
        }
        writeln!(
            f,
            "validation: simplicial={} smooth={} complete={} pure={}",
            self.validation.simplicial,
            self.validation.smooth,
            self.validation.complete,
            self.validation.pure
        )?;
        writeln!(
            f,
            "class group: free rank {}{}",
            self.class_group.free_rank,
            if self.class_group.torsion.is_empty() {
                String::new()
            } else {
                format!(", torsion {}", join(&self.class_group.torsion))
            }
        )?;
        writeln!(f, "fano: {}", self.fano)?;
        writeln!(f, "ample: {}", self.ample)?;
        writeln!(
            f,
            "kappa{}: [{}]",
            if self.normalized { " (normalized)" } else { "" },
            join(self.kappa.iter().map(rat::format_rational))
        )?;
        writeln!(f, "primitive relations:")?;
        for r in &self.primitive_relations {
            writeln!(
                f,
                "  collection [{}] -> cone [{}] coefficients [{}], degree {}",
                join(&r.collection),
                join(&r.cone),
                join(&r.coefficients),
                r.degree
            )?;
        }
        writeln!(f, "minimal curve families:")?;
        for c in &self.minimal_curve_families {
            writeln!(f, "  collection [{}], degree {}", join(&c.collection), c.degree)?;
        }
        writeln!(
            f,
            "gamma: {} at relation [{}] (binary minimizer: {})",
            rat::format_rational(&self.gamma.value),
            join(&self.gamma.minimizer),
            self.gamma.attained_by_binary
        )?;
        writeln!(f, "lambda: {}", rat::format_rational(&self.lambda))?;
        writeln!(
            f,
            "momentum polytope vertices: {}",
            join(
                self.polytope_vertices
                    .iter()
                    .map(|v| format!("({})", join(v.iter().map(rat::format_rational))))
            )
        )?;
        writeln!(
            f,
            "lattice width: {} in direction [{}]",
            rat::format_rational(&self.lattice_width.value),
            join(&self.lattice_width.direction)
        )?;
        writeln!(
            f,
            "gromov width upper bound: {}",
            rat::format_rational(&self.gromov_width_upper)
        )?;
        writeln!(
            f,
            "seshadri upper bound: {}",
            rat::format_rational(&self.seshadri_upper)
        )?;
        for w in &self.warnings {
            writeln!(f, "warning [{}]: {}", w.code, w.text)?;
        }
        Ok(())
    }
}
