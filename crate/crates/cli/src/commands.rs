use std::fmt::Write as _;

use adjalg::algebra::{standard_basis, BasisOutcome};
use adjalg::graph::write_edge_list;
use adjalg::spectral::{count_distinct_eigenvalues, is_distance_regular};
use adjalg::walkpart::{distance_matrix_expansions, distance_matrix_polynomials_from, walk_partition};
use adjalg::Graph;
use clap::{Parser, Subcommand};

use crate::report::{analyze, basis_elements, drg_reason, witness_json, WitnessJson};
use crate::spec::{parse_spec, FAMILIES};
use crate::{load_graph, CliError, CliResult, ErrorKind};

#[derive(Debug, Parser)]
#[command(
    name = "adjalg",
    version,
    about = "Exact adjacency-algebra analysis of finite simple graphs",
    after_help = "GRAPH is an edge-list file or an inline spec such as gen:cycle(6)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the edge list of a generated graph.
    Gen {
        /// Family name, or a complete spec such as kronecker(complete(2),triangular(4)).
        family: String,
        /// Integer parameters or nested specs for the family.
        params: Vec<String>,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
    },
    /// Print the number of distinct adjacency eigenvalues.
    Eigcount { graph: String },
    /// Decide distance-regularity.
    Drg { graph: String },
    /// Print the standard basis or a closure-failure witness.
    Basis {
        graph: String,
        /// Also print the polynomial of each basis matrix.
        #[arg(long)]
        polys: bool,
    },
    /// Print the walk-regular partition with W, Z and the polynomials p_i.
    Walkpart { graph: String },
    /// Express each distance matrix as a polynomial in A where possible.
    Distpoly { graph: String },
    /// Run every analysis.
    Analyze {
        graph: String,
        /// Emit the JSON report.
        #[arg(long)]
        json: bool,
    },
}

/// Output text plus an optional file to write it to.
pub struct Output {
    pub text: String,
    pub path: Option<std::path::PathBuf>,
}

pub fn run(command: &Command) -> CliResult<Output> {
    let text = match command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            return Ok(Output {
                text: gen(family, params)?,
                path: output.clone(),
            })
        }
        Command::Eigcount { graph } => eigcount(&load_graph(graph)?)?,
        Command::Drg { graph } => drg(&load_graph(graph)?)?,
        Command::Basis { graph, polys } => basis(&load_graph(graph)?, *polys)?,
        Command::Walkpart { graph } => walkpart(&load_graph(graph)?)?,
        Command::Distpoly { graph } => distpoly(&load_graph(graph)?)?,
        Command::Analyze { graph, json } => {
            let report = analyze(&load_graph(graph)?)?;
            if *json {
                report.to_json() + "\n"
            } else {
                summary(&report)
            }
        }
    };
    Ok(Output { text, path: None })
}

/// Joins `family` and `params` into a spec: `circulant 7 1 2` is `circulant(7,1,2)`.
pub fn gen_spec(family: &str, params: &[String]) -> String {
    if params.is_empty() {
        family.to_owned()
    } else {
        format!("{family}({})", params.join(","))
    }
}

pub fn gen(family: &str, params: &[String]) -> CliResult<String> {
    let text = gen_spec(family, params);
    let spec = parse_spec(&text)
        .map_err(|m| CliError::new(ErrorKind::Usage, format!("{m}\nfamilies: {FAMILIES}")))?;
    let g = spec.build().map_err(|m| CliError::new(ErrorKind::Usage, m))?;
    Ok(write_edge_list(&g, &[spec.to_string()]))
}

pub fn eigcount(g: &Graph) -> CliResult<String> {
    Ok(format!("{}\n", count_distinct_eigenvalues(g.adjacency())?))
}

pub fn drg(g: &Graph) -> CliResult<String> {
    let v = is_distance_regular(g)?;
    let mut out = format!("distance-regular: {}\n", if v.is_drg { "yes" } else { "no" });
    if let Some(a) = &v.intersection_array {
        writeln!(out, "intersection array: {a}").unwrap();
    }
    writeln!(out, "reason: {}", drg_reason(&v.reason)).unwrap();
    Ok(out)
}

fn describe_witness(w: &WitnessJson) -> String {
    match w {
        WitnessJson::NotRegular => "graph is not regular".to_owned(),
        WitnessJson::NonBinaryEntry {
            index,
            row,
            col,
            value,
        } => format!("reduced matrix {index} has entry {value} at ({row}, {col})"),
        WitnessJson::ProductOutsideSpan { i, j } => {
            format!("Hadamard product of reduced matrices {i} and {j} leaves the span")
        }
    }
}

pub fn basis(g: &Graph, polys: bool) -> CliResult<String> {
    let mut out = String::new();
    match standard_basis(g)? {
        BasisOutcome::NotClosed(failure) => {
            writeln!(out, "closed: no").unwrap();
            writeln!(out, "witness: {}", describe_witness(&witness_json(&failure.witness))).unwrap();
        }
        BasisOutcome::Closed(b) => {
            writeln!(out, "closed: yes").unwrap();
            writeln!(out, "elements: {} (identity F_{})", b.len(), b.identity_index).unwrap();
            for e in basis_elements(g, &b)? {
                writeln!(out, "F_{}: distance {}, valency {}", e.index, e.distance, e.valency).unwrap();
                for row in &e.rows {
                    writeln!(out, "  {row}").unwrap();
                }
                if polys {
                    writeln!(out, "  p(t) = {}", e.polynomial.pretty).unwrap();
                    writeln!(out, "  coefficients: [{}]", e.polynomial.coefficients.join(", ")).unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn walkpart(g: &Graph) -> CliResult<String> {
    let wp = walk_partition(g)?;
    let mut out = format!("d = {}, r = {}\nclasses:\n", wp.d, wp.r());
    for (i, c) in wp.classes.iter().enumerate() {
        let walk: Vec<String> = c.walk_vector.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "  R_{i}: distance {}, {} pairs, walk vector ({})",
            c.distance,
            c.pairs.len(),
            walk.join(",")
        )
        .unwrap();
    }
    write!(out, "W =\n{}Z =\n{}", indent(&wp.w.to_string()), indent(&wp.z.to_string())).unwrap();
    for (i, p) in wp.polynomials.iter().enumerate() {
        writeln!(out, "p_{i}(t) = {p}").unwrap();
    }
    Ok(out)
}

pub fn distpoly(g: &Graph) -> CliResult<String> {
    let wp = walk_partition(g)?;
    let expansions = distance_matrix_expansions(g, &wp)?;
    let polys = distance_matrix_polynomials_from(g, &wp)?;
    let mut out = String::new();
    for (i, (terms, poly)) in expansions.iter().zip(&polys).enumerate() {
        match (terms, poly) {
            (Some(terms), Some(p)) => {
                let sum: Vec<String> = terms.iter().map(|j| format!("p_{j}")).collect();
                writeln!(out, "A_{i} = {} = {p}", sum.join(" + ")).unwrap();
            }
            _ => writeln!(out, "A_{i}: not a polynomial in A").unwrap(),
        }
    }
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn summary(r: &crate::report::AnalysisReport) -> String {
    let mut out = String::new();
    let g = &r.graph;
    let regular = g.regular.map_or("no".to_owned(), |k| format!("yes (k = {k})"));
    writeln!(out, "vertices {}, edges {}, diameter {}, regular {regular}", g.n, g.m, g.diameter).unwrap();
    writeln!(out, "distinct eigenvalues: {}", r.eigenvalue_count).unwrap();
    write!(out, "distance-regular: {}", yes_no(r.drg.is_drg)).unwrap();
    if let Some(a) = &r.drg.intersection_array {
        write!(out, " {}", a.display).unwrap();
    }
    out.push('\n');
    let qp = &r.quotient_polynomial;
    writeln!(out, "quotient-polynomial: {} (d = {}, r = {})", yes_no(qp.value), qp.d, qp.r).unwrap();
    if r.standard_basis.closed {
        writeln!(out, "standard basis:").unwrap();
        for e in &r.standard_basis.elements {
            writeln!(out, "  F_{} (distance {}) = {}", e.index, e.distance, e.polynomial.pretty).unwrap();
        }
    } else if let Some(w) = &r.standard_basis.witness {
        writeln!(out, "standard basis: none ({})", describe_witness(w)).unwrap();
    }
    writeln!(out, "distance polynomials:").unwrap();
    for e in &r.distance_polynomials {
        match &e.polynomial {
            Some(p) => writeln!(out, "  A_{} = {}", e.distance, p.pretty).unwrap(),
            None => writeln!(out, "  A_{}: none", e.distance).unwrap(),
        }
    }
    match &r.hoffman_polynomial {
        Some(h) => writeln!(out, "Hoffman polynomial: {}", h.pretty).unwrap(),
        None => writeln!(out, "Hoffman polynomial: none").unwrap(),
    }
    let d = &r.diagram;
    write!(out, "common walk-vector diagram: {}", yes_no(d.common)).unwrap();
    if let Some(rank) = d.rank_p {
        write!(out, ", rank(P) = {rank} of {}", d.r_plus_1).unwrap();
    }
    out.push('\n');
    writeln!(out, "diameter-2 four-eigenvalue class: {:?}", r.four_eigenvalue_class).unwrap();
    out
}

