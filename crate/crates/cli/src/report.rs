//! Machine-readable analysis report.
//!
//! Rationals are written as `"num/den"` strings so no precision is lost.

use adjalg::algebra::{standard_basis, BasisOutcome, ClosureWitness, StandardBasis};
use adjalg::linalg::{parse_rational, Polynomial, Rational, RationalMatrix};
use adjalg::spectral::{count_distinct_eigenvalues, hoffman_polynomial, is_distance_regular, DrgReason};
use adjalg::structure::{diameter2_four_ev_check, faithful_diagram_analysis, FourEigenvalueClass};
use adjalg::walkpart::{
    distance_matrix_expansions, distance_matrix_polynomials_from, is_quotient_polynomial_from,
    walk_partition,
};
use adjalg::{distance_data, Error, Graph};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{CliError, ErrorKind};

pub const SCHEMA: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub graph: GraphInfo,
    /// Number of distinct eigenvalues, `d + 1`.
    pub eigenvalue_count: usize,
    pub drg: DrgInfo,
    pub quotient_polynomial: QuotientPolynomialInfo,
    pub standard_basis: BasisInfo,
    pub distance_polynomials: Vec<DistancePolynomialInfo>,
    pub hoffman_polynomial: Option<PolynomialJson>,
    pub diagram: DiagramInfo,
    pub four_eigenvalue_class: FourEigenvalueLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
    pub diameter: usize,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrgInfo {
    pub is_drg: bool,
    pub reason: String,
    pub intersection_array: Option<IntersectionArrayJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArrayJson {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientPolynomialInfo {
    pub value: bool,
    pub d: usize,
    pub r: usize,
    pub z_is_identity: bool,
    pub walk_vector_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    /// Coefficient of `t^i` at index `i`, each as `"num/den"`.
    pub coefficients: Vec<String>,
    pub pretty: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    NotRegular,
    NonBinaryEntry {
        index: usize,
        row: usize,
        col: usize,
        value: String,
    },
    ProductOutsideSpan {
        i: usize,
        j: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    /// Position in the canonical (pivot) order.
    pub index: usize,
    pub distance: usize,
    pub valency: usize,
    pub polynomial: PolynomialJson,
    /// One string of `0`/`1` characters per matrix row.
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisInfo {
    pub closed: bool,
    pub witness: Option<WitnessJson>,
    pub identity_index: Option<usize>,
    /// Listed by distance, then valency.
    pub elements: Vec<BasisElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistancePolynomialInfo {
    pub distance: usize,
    /// Indices `j` with `A_i = sum p_j(A)`, when `A_i` is a polynomial in `A`.
    pub terms: Option<Vec<usize>>,
    pub polynomial: Option<PolynomialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub distances: Vec<usize>,
    pub sizes: Vec<usize>,
    pub quotient: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramInfo {
    pub common: bool,
    pub r_plus_1: usize,
    pub rank_p: Option<usize>,
    pub concluded_qp: Option<bool>,
    pub signature: Option<SignatureJson>,
    pub construction: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FourEigenvalueLabel {
    CaseI,
    CaseIi,
    Both,
    Neither,
    NotApplicable,
}

impl From<FourEigenvalueClass> for FourEigenvalueLabel {
    fn from(c: FourEigenvalueClass) -> Self {
        match c {
            FourEigenvalueClass::CaseI => Self::CaseI,
            FourEigenvalueClass::CaseII => Self::CaseIi,
            FourEigenvalueClass::Both => Self::Both,
            FourEigenvalueClass::Neither => Self::Neither,
            FourEigenvalueClass::NotApplicable => Self::NotApplicable,
        }
    }
}

/// Always `num/den`, even for integers.
pub fn rational_json(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse_rational_json(text: &str) -> Option<Rational> {
    parse_rational(text)
}

impl PolynomialJson {
    pub fn new(p: &Polynomial) -> Self {
        Self {
            coefficients: p.coefficients().iter().map(rational_json).collect(),
            pretty: p.to_string(),
        }
    }

    pub fn to_polynomial(&self) -> Option<Polynomial> {
        self.coefficients
            .iter()
            .map(|c| parse_rational_json(c))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }
}

pub fn bitmap_rows(m: &RationalMatrix) -> Vec<String> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| if m.get(r, c).is_zero() { '0' } else { '1' })
                .collect()
        })
        .collect()
}

pub fn drg_reason(reason: &DrgReason) -> String {
    match reason {
        DrgReason::NotRegular => "graph is not regular".into(),
        DrgReason::NonBinaryMatrix(k) => format!("predistance matrix {k} is not a 0-1 matrix"),
        DrgReason::ZeroBeforeDiameter(k) => {
            format!("predistance matrix {k} vanishes before the diameter is reached")
        }
        DrgReason::Success => "all predistance matrices are distance matrices".into(),
    }
}

pub fn witness_json(w: &ClosureWitness) -> WitnessJson {
    match w {
        ClosureWitness::NonBinaryEntry {
            index,
            row,
            col,
            value,
        } => WitnessJson::NonBinaryEntry {
            index: *index,
            row: *row,
            col: *col,
            value: rational_json(value),
        },
        ClosureWitness::ProductOutsideSpan { i, j } => WitnessJson::ProductOutsideSpan { i: *i, j: *j },
    }
}

/// Basis elements in display order.
pub fn basis_elements(g: &Graph, b: &StandardBasis) -> Result<Vec<BasisElement>, CliError> {
    let dd = distance_data(g)?;
    Ok(b.distance_order(&dd)
        .into_iter()
        .map(|i| BasisElement {
            index: i,
            distance: b.distance_of(i, &dd),
            valency: b.valency(i),
            polynomial: PolynomialJson::new(&b.polynomials[i]),
            rows: bitmap_rows(&b.matrices[i]),
        })
        .collect())
}

/// Runs the whole pipeline. Disconnected input is a precondition failure.
pub fn analyze(g: &Graph) -> Result<AnalysisReport, CliError> {
    let dd = distance_data(g)?;
    let eigenvalue_count = count_distinct_eigenvalues(g.adjacency())?;

    let verdict = is_distance_regular(g)?;
    let drg = DrgInfo {
        is_drg: verdict.is_drg,
        reason: drg_reason(&verdict.reason),
        intersection_array: verdict.intersection_array.as_ref().map(|a| IntersectionArrayJson {
            b: a.b.clone(),
            c: a.c.clone(),
            display: a.to_string(),
        }),
    };

    let wp = walk_partition(g)?;
    let (qp, diag) = is_quotient_polynomial_from(g, &wp)?;
    let quotient_polynomial = QuotientPolynomialInfo {
        value: qp,
        d: diag.d,
        r: diag.r,
        z_is_identity: diag.z_is_identity,
        walk_vector_count: diag.walk_vector_count,
    };

    let standard_basis = match standard_basis(g) {
        Ok(BasisOutcome::Closed(b)) => BasisInfo {
            closed: true,
            witness: None,
            identity_index: Some(b.identity_index),
            elements: basis_elements(g, &b)?,
        },
        Ok(BasisOutcome::NotClosed(failure)) => BasisInfo {
            closed: false,
            witness: Some(witness_json(&failure.witness)),
            identity_index: None,
            elements: Vec::new(),
        },
        Err(Error::NotRegular) => BasisInfo {
            closed: false,
            witness: Some(WitnessJson::NotRegular),
            identity_index: None,
            elements: Vec::new(),
        },
        Err(e) => return Err(e.into()),
    };

    let expansions = distance_matrix_expansions(g, &wp)?;
    let polys = distance_matrix_polynomials_from(g, &wp)?;
    let distance_polynomials = expansions
        .into_iter()
        .zip(polys)
        .enumerate()
        .map(|(i, (terms, poly))| DistancePolynomialInfo {
            distance: i,
            terms,
            polynomial: poly.as_ref().map(PolynomialJson::new),
        })
        .collect();

    let fd = faithful_diagram_analysis(g)?;
    let diagram = DiagramInfo {
        common: fd.common,
        r_plus_1: fd.r_plus_1,
        rank_p: fd.rank_p,
        concluded_qp: fd.concluded_qp,
        signature: fd.signature.map(|s| SignatureJson {
            distances: s.distances,
            sizes: s.sizes,
            quotient: s.quotient,
        }),
        construction: fd.construction.to_owned(),
    };

    let report = AnalysisReport {
        schema: SCHEMA.to_owned(),
        graph: GraphInfo {
            n: g.n(),
            m: g.edge_count(),
            regular: g.is_regular(),
            diameter: dd.diameter,
            connected: true,
        },
        eigenvalue_count,
        drg,
        quotient_polynomial,
        standard_basis,
        distance_polynomials,
        hoffman_polynomial: hoffman_polynomial(g).as_ref().map(PolynomialJson::new),
        diagram,
        four_eigenvalue_class: diameter2_four_ev_check(g)?.into(),
    };
    report
        .check_consistency()
        .map_err(|msg| CliError::new(ErrorKind::Internal, msg))?;
    Ok(report)
}

impl AnalysisReport {
    /// Cross-field implications that every report must satisfy.
    pub fn check_consistency(&self) -> Result<(), String> {
        let qp = &self.quotient_polynomial;
        let mut problems = Vec::new();
        if self.schema != SCHEMA {
            problems.push(format!("unknown schema {}", self.schema));
        }
        if self.eigenvalue_count != qp.d + 1 {
            problems.push("eigenvalue count differs from d + 1".to_owned());
        }
        if self.drg.is_drg && !qp.value {
            problems.push("distance-regular but not quotient-polynomial".to_owned());
        }
        if self.drg.is_drg != self.drg.intersection_array.is_some() {
            problems.push("intersection array present iff distance-regular".to_owned());
        }
        if qp.value != self.standard_basis.closed {
            problems.push("closure disagrees with the walk-class test".to_owned());
        }
        if qp.value != (qp.d == qp.r) || qp.value != qp.z_is_identity {
            problems.push("quotient-polynomial diagnostics disagree".to_owned());
        }
        if self.standard_basis.closed && self.standard_basis.elements.len() != qp.d + 1 {
            problems.push("basis size differs from d + 1".to_owned());
        }
        if self.distance_polynomials.len() != self.graph.diameter + 1 {
            problems.push("distance table length differs from the diameter".to_owned());
        }
        for entry in &self.distance_polynomials {
            if entry.terms.is_some() != entry.polynomial.is_some() {
                problems.push(format!("distance {} has terms without a polynomial", entry.distance));
            }
            if qp.value && entry.polynomial.is_none() {
                problems.push(format!("quotient-polynomial but A_{} is not polynomial", entry.distance));
            }
        }
        if self.drg.is_drg && self.hoffman_polynomial.is_none() {
            problems.push("distance-regular graph without a Hoffman polynomial".to_owned());
        }
        if self.diagram.concluded_qp == Some(true) && !qp.value {
            problems.push("diagram rank concluded quotient-polynomial wrongly".to_owned());
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems.join("; "))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::new(ErrorKind::Malformed, e.to_string()))
    }
}
