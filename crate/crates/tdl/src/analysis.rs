//! Saturability classification, the small-order survey, and the clone /
//! Cartesian-product bound checks.
//!
//! A labeling of an order-n graph is saturated when it uses exactly the
//! labels `{1..=n}` and `chi_td = n`. A graph is saturable when some
//! optimal labeling is saturated, and supersaturable when all of them are.

use crate::graphs::{self, Graph};
use crate::solver::{self, ChiOutcome, SearchConfig, SearchOutcome, SolverError};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SaturClass {
    /// `chi_td` differs from the order, so saturation cannot apply.
    NotApplicable,
    /// Applicable but no optimal labeling is saturated.
    NotSaturable,
    /// Some optimal labelings are saturated, some are not.
    Saturable,
    /// Every optimal labeling is saturated.
    Supersaturable,
}

impl SaturClass {
    pub fn is_saturable(self) -> bool {
        matches!(self, SaturClass::Saturable | SaturClass::Supersaturable)
    }
}

impl std::fmt::Display for SaturClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SaturClass::NotApplicable => "not-applicable",
            SaturClass::NotSaturable => "not-saturable",
            SaturClass::Saturable => "saturable",
            SaturClass::Supersaturable => "supersaturable",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SaturabilityVerdict {
    pub chi: u32,
    pub order: usize,
    /// `chi == order`, the precondition for saturation.
    pub applicable: bool,
    /// Number of optimal (`chi_td`-ceiling) labelings, as raw vertex ->
    /// label maps.
    pub minimal_count: usize,
    /// How many of those use exactly the labels `{1..=chi}`.
    pub saturated_count: usize,
    pub class: SaturClass,
}

/// Computes `chi_td`, enumerates every optimal labeling, and classifies.
pub fn saturability(g: &Graph, cfg: &SearchConfig) -> Result<SaturabilityVerdict, SolverError> {
    let chi = match solver::chi_td(g, cfg)? {
        ChiOutcome::Exact { chi, .. } => chi,
        ChiOutcome::Bounded { .. } => return Err(SolverError::BudgetExceeded),
    };
    let order = g.n();
    let applicable = chi as usize == order;
    let minimal = solver::enumerate_tdls(g, chi, cfg)?;
    let saturated_count = if applicable {
        minimal
            .iter()
            .filter(|f| {
                let set = f.label_set();
                set.len() == order && set.iter().zip(1..).all(|(&l, want)| l == want)
            })
            .count()
    } else {
        0
    };
    let class = if !applicable {
        SaturClass::NotApplicable
    } else if saturated_count == 0 {
        SaturClass::NotSaturable
    } else if saturated_count == minimal.len() {
        SaturClass::Supersaturable
    } else {
        SaturClass::Saturable
    };
    Ok(SaturabilityVerdict {
        chi,
        order,
        applicable,
        minimal_count: minimal.len(),
        saturated_count,
        class,
    })
}

/// Per-graph record in a survey, keyed by certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveyRow {
    pub certificate: String,
    pub edges: Vec<(usize, usize)>,
    pub verdict: SaturabilityVerdict,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveySummary {
    pub order: usize,
    pub scanned: usize,
    /// Graphs with `chi_td` equal to the order.
    pub chi_equals_order: usize,
    pub saturable: usize,
    pub supersaturable: usize,
    pub rows: Vec<SurveyRow>,
}

/// Classifies every connected graph of the given order. Rows come back
/// sorted by certificate, independent of scheduling.
pub fn survey_order(order: usize, cfg: &SearchConfig) -> Result<SurveySummary, SolverError> {
    use rayon::prelude::*;
    let graphs = graphs::enumerate_connected(order).expect("survey orders are 1..=6");
    let rows: Result<Vec<SurveyRow>, SolverError> = graphs
        .par_iter()
        .map(|g| {
            let verdict = saturability(g, cfg)?;
            Ok(SurveyRow {
                certificate: graphs::canonical_form(g).expect("survey graphs are small").to_hex(),
                edges: g.edges(),
                verdict,
            })
        })
        .collect();
    let mut rows = rows?;
    rows.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    Ok(SurveySummary {
        order,
        scanned: rows.len(),
        chi_equals_order: rows.iter().filter(|r| r.verdict.applicable).count(),
        saturable: rows.iter().filter(|r| r.verdict.class.is_saturable()).count(),
        supersaturable: rows
            .iter()
            .filter(|r| r.verdict.class == SaturClass::Supersaturable)
            .count(),
        rows,
    })
}

/// Outcome of checking `chi_td(clone(G)) <= 2 chi_td(G) + 1`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CloneBoundCheck {
    pub chi_g: u32,
    pub chi_clone: u32,
    pub bound: u32,
    pub holds: bool,
    /// Whether the bound is met with equality.
    pub tight: bool,
    /// Whether cloning strictly increased `chi_td` (it does not always).
    pub clone_exceeds_base: bool,
}

pub fn check_clone_bound(g: &Graph, cfg: &SearchConfig) -> Result<CloneBoundCheck, SolverError> {
    let chi_g = exact_chi(g, cfg)?;
    let clone = graphs::clone_graph(g).expect("clone within vertex cap");
    // The clone contains the original, so its optimum is at least chi_g.
    let chi_clone = exact_chi_from(&clone, chi_g, cfg)?;
    let bound = 2 * chi_g + 1;
    Ok(CloneBoundCheck {
        chi_g,
        chi_clone,
        bound,
        holds: chi_clone <= bound,
        tight: chi_clone == bound,
        clone_exceeds_base: chi_clone > chi_g,
    })
}

/// Outcome of checking `chi_td(K_m x G) <= m chi_td(G) + m(m-1)/2`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductBoundCheck {
    pub m: usize,
    pub chi_g: u32,
    pub chi_product: u32,
    pub bound: u32,
    pub holds: bool,
}

pub fn check_product_bound(
    g: &Graph,
    m: usize,
    cfg: &SearchConfig,
) -> Result<ProductBoundCheck, SolverError> {
    assert!(m >= 1);
    let chi_g = exact_chi(g, cfg)?;
    let km = graphs::builders::complete(m).expect("m >= 1");
    let product = graphs::cartesian_product(&km, g).expect("product within vertex cap");
    // The product contains the original as a subgraph.
    let chi_product = exact_chi_from(&product, chi_g, cfg)?;
    let bound = m as u32 * chi_g + (m * (m - 1) / 2) as u32;
    Ok(ProductBoundCheck { m, chi_g, chi_product, bound, holds: chi_product <= bound })
}

fn exact_chi(g: &Graph, cfg: &SearchConfig) -> Result<u32, SolverError> {
    exact_chi_from(g, 1, cfg)
}

fn exact_chi_from(g: &Graph, lower: u32, cfg: &SearchConfig) -> Result<u32, SolverError> {
    match solver::chi_td_with_lower(g, lower, cfg)? {
        ChiOutcome::Exact { chi, .. } => Ok(chi),
        ChiOutcome::Bounded { .. } => Err(SolverError::BudgetExceeded),
    }
}

/// Finds one labeling with ceiling `k`, for bound demonstrations where the
/// exact optimum of a larger graph is not needed.
pub fn witness_at(g: &Graph, k: u32, cfg: &SearchConfig) -> Option<crate::labeling::VertexLabeling> {
    match solver::has_tdl(g, k, cfg) {
        SearchOutcome::Witness(w) => Some(w),
        _ => None,
    }
}
