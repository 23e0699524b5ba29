//! CSV reports. All numbers print with Rust's shortest round-trip `f64`
//! formatting, so files parse back to the exact same values.

use std::borrow::Cow;
use std::collections::HashMap;

use crate::diffusion::{rank, ranks_by_index, DiffusionTrace};
use crate::error::{Error, Result};
use crate::eval::{epsilon_norm, hbedge_color_ratios, EccentricitySweep};
use crate::hbgraph::HbGraph;
use crate::rwalk::WalkOutcome;

/// Quotes a field when it holds a comma, quote or newline.
fn escape(field: &str) -> Cow<'_, str> {
    if field.contains([',', '"', '\n', '\r']) {
        Cow::Owned(format!("\"{}\"", field.replace('"', "\"\"")))
    } else {
        Cow::Borrowed(field)
    }
}

fn alpha_headers(steps: usize) -> Vec<String> {
    (0..=steps).map(|t| format!("alpha_{t}")).collect()
}

fn epsilon_headers(steps: usize) -> Vec<String> {
    // Column epsilon_t_5 holds the values at half step t + 1/2.
    (0..steps).map(|t| format!("epsilon_{t}_5")).collect()
}

/// One file holding the whole diffusion trace: a row per vertex (alpha
/// columns filled) and a row per hb-edge (epsilon columns filled).
pub fn write_trace_csv(g: &HbGraph, trace: &DiffusionTrace) -> String {
    let steps = trace.step_count();
    let mut out = String::new();
    out.push_str("kind,id");
    for h in alpha_headers(steps) {
        out.push(',');
        out.push_str(&h);
    }
    for h in epsilon_headers(steps) {
        out.push(',');
        out.push_str(&h);
    }
    out.push('\n');
    for (i, id) in g.vertices().iter().enumerate() {
        out.push_str("vertex,");
        out.push_str(&escape(id));
        for t in 0..=steps {
            out.push(',');
            out.push_str(&trace.alpha_at(t)[i].to_string());
        }
        out.push_str(&",".repeat(steps));
        out.push('\n');
    }
    for (j, e) in g.hbedges().iter().enumerate() {
        out.push_str("hbedge,");
        out.push_str(&escape(e.id()));
        out.push_str(&",".repeat(steps + 1));
        for t in 0..steps {
            out.push(',');
            out.push_str(&trace.epsilon_at(t)[j].to_string());
        }
        out.push('\n');
    }
    out
}

/// Splits one CSV line honoring double-quoted fields.
fn split_csv_line(line: &str) -> Result<Vec<String>> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            match c {
                '"' if chars.peek() == Some(&'"') => {
                    cur.push('"');
                    chars.next();
                }
                '"' => quoted = false,
                _ => cur.push(c),
            }
        } else {
            match c {
                '"' if cur.is_empty() => quoted = true,
                ',' => fields.push(std::mem::take(&mut cur)),
                _ => cur.push(c),
            }
        }
    }
    if quoted {
        return Err(Error::Parse(format!("unterminated quote in line `{line}`")));
    }
    fields.push(cur);
    Ok(fields)
}

/// Parses a trace CSV back into a `DiffusionTrace` aligned with `g`. The
/// file must cover exactly the graph's vertices and hb-edges; row order is
/// free.
pub fn parse_trace_csv(g: &HbGraph, text: &str) -> Result<DiffusionTrace> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty trace file".into()))?;
    let cols = split_csv_line(header)?;
    if cols.len() < 2 || cols[0] != "kind" || cols[1] != "id" {
        return Err(Error::Schema(
            "trace header must start with kind,id".into(),
        ));
    }
    let n_alpha = cols[2..].iter().take_while(|c| c.starts_with("alpha_")).count();
    if n_alpha < 2 {
        return Err(Error::Schema(
            "trace needs alpha columns for at least one step".into(),
        ));
    }
    let steps = n_alpha - 1;
    let expected: Vec<String> = alpha_headers(steps)
        .into_iter()
        .chain(epsilon_headers(steps))
        .collect();
    if cols[2..] != expected[..] {
        return Err(Error::Schema(format!(
            "trace header columns must be {}",
            expected.join(",")
        )));
    }

    let parse_cell = |cell: &str, what: &str, id: &str| -> Result<f64> {
        cell.parse::<f64>().map_err(|_| {
            Error::Parse(format!("bad {what} value `{cell}` in row `{id}`"))
        })
    };

    let mut alphas: Vec<Vec<f64>> = vec![vec![0.0; g.vertex_count()]; steps + 1];
    let mut epsilons: Vec<Vec<f64>> = vec![vec![0.0; g.hbedge_count()]; steps];
    let mut seen_vertices = vec![false; g.vertex_count()];
    let mut seen_hbedges = vec![false; g.hbedge_count()];

    for line in lines.filter(|l| !l.is_empty()) {
        let fields = split_csv_line(line)?;
        if fields.len() != 2 + 2 * steps + 1 {
            return Err(Error::Schema(format!(
                "row `{line}` has {} fields, expected {}",
                fields.len(),
                2 + 2 * steps + 1
            )));
        }
        let id = &fields[1];
        match fields[0].as_str() {
            "vertex" => {
                let i = g
                    .vertex_index(id)
                    .ok_or_else(|| Error::Schema(format!("unknown vertex `{id}` in trace")))?;
                if std::mem::replace(&mut seen_vertices[i], true) {
                    return Err(Error::Schema(format!("duplicate vertex row `{id}`")));
                }
                for t in 0..=steps {
                    alphas[t][i] = parse_cell(&fields[2 + t], "alpha", id)?;
                }
            }
            "hbedge" => {
                let j = g
                    .hbedge_index(id)
                    .ok_or_else(|| Error::Schema(format!("unknown hb-edge `{id}` in trace")))?;
                if std::mem::replace(&mut seen_hbedges[j], true) {
                    return Err(Error::Schema(format!("duplicate hb-edge row `{id}`")));
                }
                for t in 0..steps {
                    epsilons[t][j] = parse_cell(&fields[2 + steps + 1 + t], "epsilon", id)?;
                }
            }
            other => {
                return Err(Error::Schema(format!("unknown row kind `{other}`")));
            }
        }
    }
    if let Some(i) = seen_vertices.iter().position(|s| !s) {
        return Err(Error::Schema(format!(
            "trace is missing vertex `{}`",
            g.vertices()[i]
        )));
    }
    if let Some(j) = seen_hbedges.iter().position(|s| !s) {
        return Err(Error::Schema(format!(
            "trace is missing hb-edge `{}`",
            g.hbedges()[j].id()
        )));
    }
    DiffusionTrace::from_parts(alphas, epsilons)
}

/// Per-vertex report: the alpha trajectory, degrees, the rank induced by
/// the final alpha, and (when available) walk passages and walk rank.
pub fn write_vertex_csv(
    g: &HbGraph,
    trace: &DiffusionTrace,
    walk: Option<&WalkOutcome>,
) -> String {
    let steps = trace.step_count();
    let diffusion_ranks = ranks_by_index(&rank(g.vertices(), trace.final_alpha()));
    let walk_ranks = walk.map(|w| ranks_by_index(&w.vertex_ranks));
    let mut out = String::new();
    out.push_str("id");
    for h in alpha_headers(steps) {
        out.push(',');
        out.push_str(&h);
    }
    out.push_str(",m_degree,degree,diffusion_rank,walk_count,walk_rank\n");
    for (i, id) in g.vertices().iter().enumerate() {
        out.push_str(&escape(id));
        for t in 0..=steps {
            out.push(',');
            out.push_str(&trace.alpha_at(t)[i].to_string());
        }
        out.push(',');
        out.push_str(&g.m_degree_by_index(i).to_string());
        out.push(',');
        out.push_str(&g.degree_by_index(i).to_string());
        out.push(',');
        out.push_str(&diffusion_ranks[i].to_string());
        match (walk, &walk_ranks) {
            (Some(w), Some(ranks)) => {
                out.push(',');
                out.push_str(&w.counts.vertex_passages[i].to_string());
                out.push(',');
                out.push_str(&ranks[i].to_string());
            }
            _ => out.push_str(",,"),
        }
        out.push('\n');
    }
    out
}

/// Per-hb-edge report: the epsilon trajectory, cardinalities, the
/// normalizer and the color ratio of the final half step.
pub fn write_hbedge_csv(g: &HbGraph, trace: &DiffusionTrace) -> Result<String> {
    let steps = trace.step_count();
    let ratios = hbedge_color_ratios(g, trace.final_epsilon())?;
    let mut out = String::new();
    out.push_str("id");
    for h in epsilon_headers(steps) {
        out.push(',');
        out.push_str(&h);
    }
    out.push_str(",m_cardinality,support_cardinality,epsilon_norm,color_ratio\n");
    for (j, e) in g.hbedges().iter().enumerate() {
        out.push_str(&escape(e.id()));
        for t in 0..steps {
            out.push(',');
            out.push_str(&trace.epsilon_at(t)[j].to_string());
        }
        out.push(',');
        out.push_str(&e.m_cardinality().to_string());
        out.push(',');
        out.push_str(&e.support_cardinality().to_string());
        out.push(',');
        out.push_str(&epsilon_norm(g, e.id())?.to_string());
        out.push(',');
        out.push_str(&ratios[j].to_string());
        out.push('\n');
    }
    Ok(out)
}

/// Sweep curves, one row per recorded threshold.
pub fn write_sweep_csv(sweeps: &[EccentricitySweep]) -> String {
    let mut out = String::from("target,ratio,max_eccentricity,subset_fraction\n");
    for sweep in sweeps {
        for p in &sweep.points {
            out.push_str(sweep.target.as_str());
            out.push(',');
            out.push_str(&p.ratio.to_string());
            out.push(',');
            if let Some(e) = p.max_eccentricity {
                out.push_str(&e.to_string());
            }
            out.push(',');
            out.push_str(&p.subset_fraction.to_string());
            out.push('\n');
        }
    }
    out
}

/// Walk passage counts and ranks for vertices and hb-edges.
pub fn write_walk_csv(g: &HbGraph, outcome: &WalkOutcome) -> String {
    let vranks = ranks_by_index(&outcome.vertex_ranks);
    let eranks = ranks_by_index(&outcome.hbedge_ranks);
    let mut out = String::from("kind,id,passages,rank\n");
    for (i, id) in g.vertices().iter().enumerate() {
        out.push_str(&format!(
            "vertex,{},{},{}\n",
            escape(id),
            outcome.counts.vertex_passages[i],
            vranks[i]
        ));
    }
    for (j, e) in g.hbedges().iter().enumerate() {
        out.push_str(&format!(
            "hbedge,{},{},{}\n",
            escape(e.id()),
            outcome.counts.hbedge_passages[j],
            eranks[j]
        ));
    }
    out
}

/// Rank lookup by id over ranked values (helper for summaries).
pub fn rank_of(ranked: &[crate::diffusion::RankedValue]) -> HashMap<&str, usize> {
    ranked.iter().map(|r| (r.id.as_str(), r.rank)).collect()
}
