//! Report structures shared by the text and JSON renderers. JSON reports
//! round-trip: parsing an emitted report and re-serializing it reproduces
//! the bytes.

use serde::{Deserialize, Serialize};

use prochern::{ChowClass, GWElement, InductionReport};

use crate::scenario::ScenarioSpec;

/// One `monomial -> coefficient` row of a class table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub monomial: String,
    pub coefficient: i64,
}

/// Nonzero terms in lexicographic monomial order.
pub type ClassTable = Vec<ClassRow>;

pub fn class_table(class: &ChowClass) -> ClassTable {
    class
        .terms()
        .into_iter()
        .map(|(monomial, coefficient)| ClassRow {
            monomial,
            coefficient,
        })
        .collect()
}

/// A Grothendieck-Witt value `one * <1> + neg_one * <-1>` with its two
/// complete invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwValue {
    pub one: i64,
    pub neg_one: i64,
    pub rank: i64,
    pub signature: i64,
}

pub fn gw_value(x: &GWElement) -> GwValue {
    GwValue {
        one: x.coeff_one(),
        neg_one: x.coeff_epsilon(),
        rank: x.rank(),
        signature: x.signature(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionLevelRow {
    pub level: usize,
    pub boundary_class: ClassTable,
    pub expansion: ClassTable,
    pub claim_pass: bool,
    pub split_pass: bool,
    pub closed_form_pass: bool,
    pub pass: bool,
}

pub fn induction_rows(report: &InductionReport) -> Vec<InductionLevelRow> {
    report
        .levels
        .iter()
        .map(|l| InductionLevelRow {
            level: l.components_used,
            boundary_class: class_table(&l.boundary_class),
            expansion: class_table(&l.expansion),
            claim_pass: l.claim_pass,
            split_pass: l.split_pass,
            closed_form_pass: l.closed_form_pass,
            pass: l.pass,
        })
        .collect()
}

/// One requested output of a scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputBlock {
    CsmOpen {
        class: ClassTable,
    },
    CsmZero {
        class: ClassTable,
        degree: i64,
    },
    SilredRhs {
        class: ClassTable,
    },
    CharClass {
        class: ClassTable,
        degree: i64,
    },
    VerifyMain {
        pass: bool,
        csm_zero: ClassTable,
        silred_rhs: ClassTable,
        char_class: ClassTable,
    },
    VerifyInduction {
        pass: bool,
        levels: Vec<InductionLevelRow>,
    },
    Additivity {
        pass: bool,
        stratum_sum: ClassTable,
        tangent_total: ClassTable,
    },
    Chi {
        value: i64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        matches_degree_csm_zero: Option<bool>,
    },
    ChiQuadratic {
        value: GwValue,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        homological: Option<GwValue>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        note: Option<String>,
    },
    Compat {
        pass: bool,
        csm_pass: bool,
        char_pass: bool,
        csm_upstairs_pushed: ClassTable,
        csm_downstairs: ClassTable,
        char_upstairs_pushed: ClassTable,
        char_downstairs: ClassTable,
    },
}

impl OutputBlock {
    /// `Some(flag)` for verification outputs, `None` for pure computations.
    pub fn pass(&self) -> Option<bool> {
        match self {
            OutputBlock::VerifyMain { pass, .. }
            | OutputBlock::VerifyInduction { pass, .. }
            | OutputBlock::Additivity { pass, .. }
            | OutputBlock::Compat { pass, .. } => Some(*pass),
            OutputBlock::Chi {
                matches_degree_csm_zero: Some(flag),
                ..
            } => Some(*flag),
            _ => None,
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            OutputBlock::CsmOpen { .. } => "csm_open",
            OutputBlock::CsmZero { .. } => "csm_zero",
            OutputBlock::SilredRhs { .. } => "silred_rhs",
            OutputBlock::CharClass { .. } => "char_class",
            OutputBlock::VerifyMain { .. } => "verify_main",
            OutputBlock::VerifyInduction { .. } => "verify_induction",
            OutputBlock::Additivity { .. } => "additivity",
            OutputBlock::Chi { .. } => "chi",
            OutputBlock::ChiQuadratic { .. } => "chi_quadratic",
            OutputBlock::Compat { .. } => "compat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub engine: String,
    pub scenario: ScenarioSpec,
    pub outputs: Vec<OutputBlock>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_ms: Option<u64>,
}

impl ScenarioReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.engine);
        out.push('\n');
        if let Some(name) = &self.scenario.name {
            out.push_str(&format!("scenario: {name}\n"));
        }
        if let Some(desc) = &self.scenario.description {
            out.push_str(&format!("description: {desc}\n"));
        }
        for block in &self.outputs {
            let header = match block.pass() {
                Some(true) => format!("\n== {} == PASS\n", block.kind_name()),
                Some(false) => format!("\n== {} == FAIL\n", block.kind_name()),
                None => format!("\n== {} ==\n", block.kind_name()),
            };
            out.push_str(&header);
            render_block(&mut out, block);
        }
        out.push_str(&format!(
            "\nresult: {}\n",
            if self.all_pass { "PASS" } else { "FAIL" }
        ));
        if let Some(ms) = self.duration_ms {
            out.push_str(&format!("duration: {ms} ms\n"));
        }
        out
    }
}

fn push_table(out: &mut String, indent: &str, table: &ClassTable) {
    if table.is_empty() {
        out.push_str(&format!("{indent}0\n"));
        return;
    }
    let width = table.iter().map(|r| r.monomial.len()).max().unwrap_or(1);
    for row in table {
        out.push_str(&format!(
            "{indent}{:<width$}  {}\n",
            row.monomial,
            row.coefficient,
            width = width
        ));
    }
}

fn push_named_table(out: &mut String, name: &str, table: &ClassTable) {
    out.push_str(&format!("  {name}:\n"));
    push_table(out, "    ", table);
}

fn gw_text(v: &GwValue) -> String {
    format!(
        "{}*<1> + {}*<-1>  (rank {}, signature {})",
        v.one, v.neg_one, v.rank, v.signature
    )
}

fn render_block(out: &mut String, block: &OutputBlock) {
    match block {
        OutputBlock::CsmOpen { class } | OutputBlock::SilredRhs { class } => {
            push_table(out, "  ", class);
        }
        OutputBlock::CsmZero { class, degree } | OutputBlock::CharClass { class, degree } => {
            push_table(out, "  ", class);
            out.push_str(&format!("  degree: {degree}\n"));
        }
        OutputBlock::VerifyMain {
            csm_zero,
            silred_rhs,
            char_class,
            ..
        } => {
            push_named_table(out, "csm_zero", csm_zero);
            push_named_table(out, "silred_rhs", silred_rhs);
            push_named_table(out, "char_class", char_class);
        }
        OutputBlock::VerifyInduction { levels, .. } => {
            for level in levels {
                out.push_str(&format!(
                    "  level {}: {} (claim {}, split {}, closed-form {})\n",
                    level.level,
                    if level.pass { "pass" } else { "FAIL" },
                    level.claim_pass,
                    level.split_pass,
                    level.closed_form_pass
                ));
                push_named_table(out, "boundary_class", &level.boundary_class);
                push_named_table(out, "expansion", &level.expansion);
            }
        }
        OutputBlock::Additivity {
            stratum_sum,
            tangent_total,
            ..
        } => {
            push_named_table(out, "stratum_sum", stratum_sum);
            push_named_table(out, "tangent_total", tangent_total);
        }
        OutputBlock::Chi {
            value,
            matches_degree_csm_zero,
        } => {
            out.push_str(&format!("  chi_c: {value}\n"));
            if let Some(flag) = matches_degree_csm_zero {
                out.push_str(&format!("  matches degree(csm_zero): {flag}\n"));
            }
        }
        OutputBlock::ChiQuadratic {
            value,
            homological,
            note,
        } => {
            out.push_str(&format!("  chi_c quadratic: {}\n", gw_text(value)));
            if let Some(h) = homological {
                out.push_str(&format!("  chi homological: {}\n", gw_text(h)));
            }
            if let Some(n) = note {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        OutputBlock::Compat {
            csm_pass,
            char_pass,
            csm_upstairs_pushed,
            csm_downstairs,
            char_upstairs_pushed,
            char_downstairs,
            ..
        } => {
            out.push_str(&format!("  csm classes agree: {csm_pass}\n"));
            push_named_table(out, "csm_upstairs_pushed", csm_upstairs_pushed);
            push_named_table(out, "csm_downstairs", csm_downstairs);
            out.push_str(&format!("  char classes agree: {char_pass}\n"));
            push_named_table(out, "char_upstairs_pushed", char_upstairs_pushed);
            push_named_table(out, "char_downstairs", char_downstairs);
        }
    }
}
