//! Seeded randomized verification suite: generate arrangements over all
//! product ambients within the bounds and run the three identity checks on
//! each. Generation is pinned to the documented linear-congruential scheme
//! so runs are reproducible across implementations.

use serde::{Deserialize, Serialize};

use prochern::{AmbientSpace, DivisorArrangement};

use crate::error::CliError;
use crate::rng::Lcg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub seed: u64,
    pub max_dim: u32,
    pub max_components: u32,
    pub max_multidegree: i64,
    pub count: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            seed: 0,
            max_dim: 3,
            max_components: 4,
            max_multidegree: 3,
            count: 100,
        }
    }
}

/// Hard caps that keep the suite at desk scale.
const DIM_CAP: u32 = 3;
const COMPONENT_CAP: u32 = 4;
const MULTIDEGREE_CAP: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub index: u32,
    pub factors: Vec<u32>,
    pub multidegrees: Vec<Vec<i64>>,
    pub main_pass: bool,
    pub induction_pass: bool,
    pub induction_levels: usize,
    pub additivity_pass: bool,
}

impl SuiteEntry {
    pub fn pass(&self) -> bool {
        self.main_pass && self.induction_pass && self.additivity_pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub engine: String,
    pub params: SuiteParams,
    pub entries: Vec<SuiteEntry>,
    pub passed: u32,
    pub failed: u32,
    pub all_pass: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.engine);
        out.push('\n');
        out.push_str(&format!(
            "verification suite: seed {}, max dim {}, max components {}, max multidegree {}, count {}\n",
            self.params.seed,
            self.params.max_dim,
            self.params.max_components,
            self.params.max_multidegree,
            self.params.count
        ));
        for entry in &self.entries {
            if !entry.pass() {
                out.push_str(&format!(
                    "FAIL index {} factors {:?} multidegrees {:?} (main {}, induction {}, additivity {})\n",
                    entry.index,
                    entry.factors,
                    entry.multidegrees,
                    entry.main_pass,
                    entry.induction_pass,
                    entry.additivity_pass
                ));
            }
        }
        out.push_str(&format!(
            "passed {}/{} arrangements\nresult: {}\n",
            self.passed,
            self.entries.len(),
            if self.all_pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// All factor tuples with total dimension 1..=max_dim, ordered by total
/// dimension and then lexicographically.
pub fn ambient_catalog(max_dim: u32) -> Vec<Vec<u32>> {
    fn compositions_of(total: u32) -> Vec<Vec<u32>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=total {
            for mut rest in compositions_of(total - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    (1..=max_dim).flat_map(compositions_of).collect()
}

fn check_bounds(params: &SuiteParams) -> Result<(), CliError> {
    if params.max_dim == 0 || params.max_dim > DIM_CAP {
        return Err(CliError::InvalidBounds(format!(
            "max dimension must be in 1..={DIM_CAP}"
        )));
    }
    if params.max_components == 0 || params.max_components > COMPONENT_CAP {
        return Err(CliError::InvalidBounds(format!(
            "max components must be in 1..={COMPONENT_CAP}"
        )));
    }
    if params.max_multidegree <= 0 || params.max_multidegree > MULTIDEGREE_CAP {
        return Err(CliError::InvalidBounds(format!(
            "max multidegree must be in 1..={MULTIDEGREE_CAP}"
        )));
    }
    Ok(())
}

/// Drawing order per arrangement: the component count, then the multidegree
/// entries component by component, each uniform in `[1, max_multidegree]`.
/// The ambient cycles through [`ambient_catalog`] by generation index.
pub fn generate_arrangement(
    rng: &mut Lcg,
    factors: &[u32],
    max_components: u32,
    max_multidegree: i64,
) -> (DivisorArrangement, Vec<Vec<i64>>) {
    let ambient = AmbientSpace::product(factors).expect("catalog factors are valid");
    let m = rng.uniform(1, max_components as u64) as usize;
    let mut multidegrees = Vec::with_capacity(m);
    let mut components = Vec::with_capacity(m);
    for i in 0..m {
        let degrees: Vec<i64> = (0..factors.len())
            .map(|_| rng.uniform(1, max_multidegree as u64) as i64)
            .collect();
        let class = ambient
            .multidegree_divisor(&degrees)
            .expect("positive multidegrees give divisor classes");
        components.push((format!("D{}", i + 1), class));
        multidegrees.push(degrees);
    }
    let arrangement =
        DivisorArrangement::new(&ambient, components, true).expect("names are distinct");
    (arrangement, multidegrees)
}

pub fn run_suite(params: &SuiteParams) -> Result<SuiteReport, CliError> {
    check_bounds(params)?;
    let ambients = ambient_catalog(params.max_dim);
    let mut rng = Lcg::new(params.seed);
    let mut entries = Vec::with_capacity(params.count as usize);
    for index in 0..params.count {
        let factors = &ambients[index as usize % ambients.len()];
        let (arrangement, multidegrees) = generate_arrangement(
            &mut rng,
            factors,
            params.max_components,
            params.max_multidegree,
        );
        let main = arrangement
            .verify_main_identity()
            .map_err(|e| CliError::engine("verify_main", e))?;
        let induction = arrangement
            .verify_induction()
            .map_err(|e| CliError::engine("verify_induction", e))?;
        let additivity = arrangement
            .additivity_check()
            .map_err(|e| CliError::engine("additivity", e))?;
        entries.push(SuiteEntry {
            index,
            factors: factors.clone(),
            multidegrees,
            main_pass: main.pass,
            induction_pass: induction.pass,
            induction_levels: induction.levels.len(),
            additivity_pass: additivity.pass,
        });
    }
    let passed = entries.iter().filter(|e| e.pass()).count() as u32;
    let failed = entries.len() as u32 - passed;
    Ok(SuiteReport {
        engine: crate::engine_version(),
        params: *params,
        entries,
        passed,
        failed,
        all_pass: failed == 0,
    })
}
