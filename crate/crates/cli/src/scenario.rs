//! Scenario files: a single JSON document naming an ambient space, an
//! arrangement, the requested outputs, and optionally a scissor expression
//! for the complement and a compactification diagram.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use prochern::{
    AmbientSpace, BlowDownMap, CompactificationDiagram, DivisorArrangement, SpaceExpression,
};

use crate::error::CliError;
use crate::report::{
    class_table, gw_value, induction_rows, OutputBlock, ScenarioReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ambient: Option<AmbientSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub arrangement: Option<ArrangementSpec>,
    pub outputs: Vec<OutputKind>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scissor: Option<ExprSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagram: Option<DiagramSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum AmbientSpec {
    /// Product of projective spaces with the given factor dimensions.
    Product { factors: Vec<u32> },
    /// Explicit surface lattice.
    Surface {
        basis_labels: Vec<String>,
        intersection_matrix: Vec<Vec<i64>>,
        canonical_class: Vec<i64>,
        c2_degree: i64,
    },
    /// Chain of blow-ups over a base; the base must be a surface or a
    /// product of total dimension 2.
    Blowup {
        base: Box<AmbientSpec>,
        labels: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementSpec {
    #[serde(default = "default_true")]
    pub snc_asserted: bool,
    pub components: Vec<ComponentSpec>,
}

fn default_true() -> bool {
    true
}

/// One named component: `multidegree` coordinates on a product ambient, or
/// `divisor` coordinates in a surface basis. Exactly one must be present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multidegree: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub divisor: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    CsmOpen,
    CsmZero,
    SilredRhs,
    CharClass,
    VerifyMain,
    VerifyInduction,
    Additivity,
    Chi,
    ChiQuadratic,
    Compat,
}

impl OutputKind {
    fn name(&self) -> &'static str {
        match self {
            OutputKind::CsmOpen => "csm_open",
            OutputKind::CsmZero => "csm_zero",
            OutputKind::SilredRhs => "silred_rhs",
            OutputKind::CharClass => "char_class",
            OutputKind::VerifyMain => "verify_main",
            OutputKind::VerifyInduction => "verify_induction",
            OutputKind::Additivity => "additivity",
            OutputKind::Chi => "chi",
            OutputKind::ChiQuadratic => "chi_quadratic",
            OutputKind::Compat => "compat",
        }
    }
}

/// Scissor expression tree. Unit variants are plain strings in JSON
/// (`"point"`, `"gm"`); the rest are single-key objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExprSpec {
    Point,
    Gm,
    Affine(u32),
    Proj(u32),
    Product(Vec<ExprSpec>),
    DisjointUnion(Vec<ExprSpec>),
    Complement {
        whole: Box<ExprSpec>,
        closed: Box<ExprSpec>,
    },
    /// Override the smooth-dimension annotation of a subtree.
    SmoothDim { dim: u32, expr: Box<ExprSpec> },
}

impl ExprSpec {
    pub fn build(&self) -> SpaceExpression {
        match self {
            ExprSpec::Point => SpaceExpression::point(),
            ExprSpec::Gm => SpaceExpression::gm(),
            ExprSpec::Affine(n) => SpaceExpression::affine(*n),
            ExprSpec::Proj(n) => SpaceExpression::proj(*n),
            ExprSpec::Product(parts) => {
                SpaceExpression::product(parts.iter().map(|p| p.build()).collect())
            }
            ExprSpec::DisjointUnion(parts) => {
                SpaceExpression::disjoint_union(parts.iter().map(|p| p.build()).collect())
            }
            ExprSpec::Complement { whole, closed } => {
                SpaceExpression::complement(whole.build(), closed.build())
            }
            ExprSpec::SmoothDim { dim, expr } => expr.build().with_smooth_dim(*dim),
        }
    }
}

/// Downstairs data of a compactification diagram. The upstairs arrangement
/// is the scenario's own; the ambient must be a one-step blow-up chain so
/// the connecting map is determined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub downstairs_components: Vec<ComponentSpec>,
    #[serde(default = "default_true")]
    pub claim_same_complement: bool,
}

/// Parse a scenario document, classifying syntax errors (with line/column)
/// separately from schema mismatches.
pub fn parse_spec(json: &str) -> Result<ScenarioSpec, CliError> {
    match serde_json::from_str::<ScenarioSpec>(json) {
        Ok(spec) => Ok(spec),
        Err(e) if e.classify() == serde_json::error::Category::Data => {
            Err(CliError::Schema(e.to_string()))
        }
        Err(e) => Err(CliError::Parse(e)),
    }
}

struct Built {
    arrangement: Option<DivisorArrangement>,
    maps: Vec<BlowDownMap>,
    scissor: Option<SpaceExpression>,
}

fn build_ambient(spec: &AmbientSpec) -> Result<(Arc<AmbientSpace>, Vec<BlowDownMap>), CliError> {
    match spec {
        AmbientSpec::Product { factors } => {
            let ambient = AmbientSpace::product(factors)
                .map_err(|e| CliError::engine("ambient", e))?;
            Ok((ambient, Vec::new()))
        }
        AmbientSpec::Surface {
            basis_labels,
            intersection_matrix,
            canonical_class,
            c2_degree,
        } => {
            let ambient = AmbientSpace::surface(
                basis_labels.clone(),
                intersection_matrix.clone(),
                canonical_class.clone(),
                *c2_degree,
            )
            .map_err(|e| CliError::engine("ambient", e))?;
            Ok((ambient, Vec::new()))
        }
        AmbientSpec::Blowup { base, labels } => {
            let (base_ambient, mut maps) = build_ambient(base)?;
            let mut current = base_ambient
                .to_surface()
                .map_err(|e| CliError::engine("ambient", e))?;
            for label in labels {
                let (next, map) = current
                    .blow_up(label)
                    .map_err(|e| CliError::engine("ambient", e))?;
                maps.push(map);
                current = next;
            }
            Ok((current, maps))
        }
    }
}

fn build_components(
    ambient: &Arc<AmbientSpace>,
    specs: &[ComponentSpec],
) -> Result<Vec<(String, prochern::ChowClass)>, CliError> {
    let mut components = Vec::with_capacity(specs.len());
    for c in specs {
        let class = match (&c.multidegree, &c.divisor) {
            (Some(degrees), None) => {
                if !ambient.is_product() {
                    return Err(CliError::Schema(format!(
                        "component `{}` uses multidegree coordinates on a surface ambient",
                        c.name
                    )));
                }
                ambient
                    .multidegree_divisor(degrees)
                    .map_err(|e| CliError::engine("arrangement", e))?
            }
            (None, Some(coords)) => {
                if !ambient.is_surface() {
                    return Err(CliError::Schema(format!(
                        "component `{}` uses divisor coordinates on a product ambient",
                        c.name
                    )));
                }
                ambient
                    .surface_divisor(coords)
                    .map_err(|e| CliError::engine("arrangement", e))?
            }
            _ => {
                return Err(CliError::Schema(format!(
                    "component `{}` needs exactly one of `multidegree` or `divisor`",
                    c.name
                )));
            }
        };
        components.push((c.name.clone(), class));
    }
    Ok(components)
}

fn build(spec: &ScenarioSpec) -> Result<Built, CliError> {
    if spec.outputs.is_empty() {
        return Err(CliError::Schema("outputs must be non-empty".to_string()));
    }
    let scissor = spec.scissor.as_ref().map(|s| s.build());
    match (&spec.ambient, &spec.arrangement) {
        (Some(ambient_spec), Some(arr_spec)) => {
            let (ambient, maps) = build_ambient(ambient_spec)?;
            let components = build_components(&ambient, &arr_spec.components)?;
            let arrangement =
                DivisorArrangement::new(&ambient, components, arr_spec.snc_asserted)
                    .map_err(|e| CliError::engine("arrangement", e))?;
            Ok(Built {
                arrangement: Some(arrangement),
                maps,
                scissor,
            })
        }
        (None, None) => Ok(Built {
            arrangement: None,
            maps: Vec::new(),
            scissor,
        }),
        _ => Err(CliError::Schema(
            "ambient and arrangement must be given together".to_string(),
        )),
    }
}

fn require_arrangement(
    built: &Built,
    output: OutputKind,
) -> Result<&DivisorArrangement, CliError> {
    built.arrangement.as_ref().ok_or_else(|| {
        CliError::Schema(format!(
            "output `{}` needs an ambient and an arrangement",
            output.name()
        ))
    })
}

fn require_scissor(
    built: &Built,
    output: OutputKind,
) -> Result<&SpaceExpression, CliError> {
    built.scissor.as_ref().ok_or_else(|| {
        CliError::Schema(format!(
            "output `{}` needs a scissor expression",
            output.name()
        ))
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExecOptions {
    /// Record wall-clock duration in the report. Off by default so that
    /// identical inputs produce byte-identical reports.
    pub timings: bool,
}

/// Run every requested output in declaration order.
pub fn execute(spec: &ScenarioSpec, opts: &ExecOptions) -> Result<ScenarioReport, CliError> {
    let start = Instant::now();
    let built = build(spec)?;
    let mut outputs = Vec::with_capacity(spec.outputs.len());
    for &output in &spec.outputs {
        let err = |e| CliError::engine(output.name(), e);
        let block = match output {
            OutputKind::CsmOpen => OutputBlock::CsmOpen {
                class: class_table(&require_arrangement(&built, output)?.csm_open().map_err(err)?),
            },
            OutputKind::CsmZero => {
                let class = require_arrangement(&built, output)?
                    .csm_zero()
                    .map_err(err)?;
                OutputBlock::CsmZero {
                    degree: class.degree(),
                    class: class_table(&class),
                }
            }
            OutputKind::SilredRhs => OutputBlock::SilredRhs {
                class: class_table(
                    &require_arrangement(&built, output)?
                        .csm_zero_expanded()
                        .map_err(err)?,
                ),
            },
            OutputKind::CharClass => {
                let class = require_arrangement(&built, output)?
                    .char_class_localization()
                    .map_err(err)?;
                OutputBlock::CharClass {
                    degree: class.degree(),
                    class: class_table(&class),
                }
            }
            OutputKind::VerifyMain => {
                let report = require_arrangement(&built, output)?
                    .verify_main_identity()
                    .map_err(err)?;
                OutputBlock::VerifyMain {
                    pass: report.pass,
                    csm_zero: class_table(&report.csm_zero),
                    silred_rhs: class_table(&report.expanded),
                    char_class: class_table(&report.localization),
                }
            }
            OutputKind::VerifyInduction => {
                let report = require_arrangement(&built, output)?
                    .verify_induction()
                    .map_err(err)?;
                OutputBlock::VerifyInduction {
                    pass: report.pass,
                    levels: induction_rows(&report),
                }
            }
            OutputKind::Additivity => {
                let report = require_arrangement(&built, output)?
                    .additivity_check()
                    .map_err(err)?;
                OutputBlock::Additivity {
                    pass: report.pass,
                    stratum_sum: class_table(&report.stratum_sum),
                    tangent_total: class_table(&report.tangent_total),
                }
            }
            OutputKind::Chi => {
                let value = require_scissor(&built, output)?
                    .chi_compact()
                    .map_err(err)?;
                let matches = match &built.arrangement {
                    Some(arr) => {
                        Some(arr.csm_zero().map_err(err)?.degree() == value)
                    }
                    None => None,
                };
                OutputBlock::Chi {
                    value,
                    matches_degree_csm_zero: matches,
                }
            }
            OutputKind::ChiQuadratic => {
                let expr = require_scissor(&built, output)?;
                let value = expr.chi_compact_quadratic().map_err(err)?;
                let (homological, note) = match expr.smooth_dim() {
                    Some(_) => (
                        Some(gw_value(&expr.chi_homological_quadratic().map_err(err)?)),
                        Some(
                            "homological value uses the smooth-duality scaling <-1>^dim \
                             applied to the compactly supported value"
                                .to_string(),
                        ),
                    ),
                    None => (None, None),
                };
                OutputBlock::ChiQuadratic {
                    value: gw_value(&value),
                    homological,
                    note,
                }
            }
            OutputKind::Compat => {
                let diagram_spec = spec.diagram.as_ref().ok_or_else(|| {
                    CliError::Schema("output `compat` needs a diagram".to_string())
                })?;
                let upstairs = require_arrangement(&built, output)?.clone();
                if built.maps.len() != 1 {
                    return Err(CliError::Schema(
                        "output `compat` needs an ambient given as a one-step blow-up chain"
                            .to_string(),
                    ));
                }
                let map = built.maps[0].clone();
                let downstairs_components =
                    build_components(map.target(), &diagram_spec.downstairs_components)?;
                let downstairs = DivisorArrangement::new(
                    map.target(),
                    downstairs_components,
                    upstairs.snc_asserted(),
                )
                .map_err(err)?;
                let diagram = CompactificationDiagram::new(
                    upstairs,
                    downstairs,
                    Some(map),
                    diagram_spec.claim_same_complement,
                )
                .map_err(err)?;
                let report = diagram.compat_check().map_err(err)?;
                OutputBlock::Compat {
                    pass: report.pass,
                    csm_pass: report.csm_pass,
                    char_pass: report.char_pass,
                    csm_upstairs_pushed: class_table(&report.csm_upstairs_pushed),
                    csm_downstairs: class_table(&report.csm_downstairs),
                    char_upstairs_pushed: class_table(&report.char_upstairs_pushed),
                    char_downstairs: class_table(&report.char_downstairs),
                }
            }
        };
        outputs.push(block);
    }
    let all_pass = outputs.iter().all(|b| b.pass() != Some(false));
    Ok(ScenarioReport {
        engine: crate::engine_version(),
        scenario: spec.clone(),
        outputs,
        all_pass,
        duration_ms: opts
            .timings
            .then(|| start.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expr_spec_json_forms() {
        let json = r#"{"complement": {"whole": {"proj": 1}, "closed": {"disjoint_union": ["point", "point"]}}}"#;
        let spec: ExprSpec = serde_json::from_str(json).unwrap();
        let expr = spec.build();
        assert_eq!(expr.chi_compact().unwrap(), 0);
        assert_eq!(expr.smooth_dim(), Some(1));

        let spec: ExprSpec = serde_json::from_str(r#""gm""#).unwrap();
        assert_eq!(spec.build().chi_compact().unwrap(), 0);

        let spec: ExprSpec =
            serde_json::from_str(r#"{"smooth_dim": {"dim": 2, "expr": {"affine": 2}}}"#).unwrap();
        assert_eq!(spec.build().smooth_dim(), Some(2));
    }

    #[test]
    fn parse_classifies_errors() {
        assert!(matches!(parse_spec("{"), Err(CliError::Parse(_))));
        assert!(matches!(
            parse_spec(r#"{"outputs": ["bogus"]}"#),
            Err(CliError::Schema(_))
        ));
    }

    #[test]
    fn chi_only_scenario() {
        let spec = parse_spec(r#"{"outputs": ["chi", "chi_quadratic"], "scissor": "gm"}"#).unwrap();
        let report = execute(&spec, &ExecOptions::default()).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.outputs.len(), 2);
        match &report.outputs[1] {
            OutputBlock::ChiQuadratic {
                value, homological, ..
            } => {
                assert_eq!((value.one, value.neg_one), (-1, 1));
                assert_eq!(value.rank, 0);
                let h = homological.as_ref().unwrap();
                assert_eq!((h.one, h.neg_one), (1, -1));
            }
            other => panic!("unexpected block {other:?}"),
        }
    }

    #[test]
    fn arrangement_outputs_need_ambient() {
        let spec = parse_spec(r#"{"outputs": ["csm_open"]}"#).unwrap();
        assert!(matches!(
            execute(&spec, &ExecOptions::default()),
            Err(CliError::Schema(_))
        ));
    }

    #[test]
    fn ambient_and_arrangement_come_together() {
        let spec = parse_spec(
            r#"{"outputs": ["chi"], "ambient": {"type": "product", "factors": [2]}, "scissor": "gm"}"#,
        )
        .unwrap();
        assert!(matches!(
            execute(&spec, &ExecOptions::default()),
            Err(CliError::Schema(_))
        ));
    }
}
