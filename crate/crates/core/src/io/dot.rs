//! Graphviz export of the extra-vertex view: round nodes for vertices,
//! square nodes for hb-edges, colored by the supplied intensities.

use crate::error::{Error, Result};
use crate::hbgraph::HbGraph;

/// Diverging ramp from cool blue through white to warm red.
const LOW: (f64, f64, f64) = (0x21 as f64, 0x66 as f64, 0xac as f64);
const MID: (f64, f64, f64) = (0xf7 as f64, 0xf7 as f64, 0xf7 as f64);
const HIGH: (f64, f64, f64) = (0xb2 as f64, 0x18 as f64, 0x2b as f64);

fn lerp(a: (f64, f64, f64), b: (f64, f64, f64), t: f64) -> (f64, f64, f64) {
    (
        a.0 + (b.0 - a.0) * t,
        a.1 + (b.1 - a.1) * t,
        a.2 + (b.2 - a.2) * t,
    )
}

fn color(t: f64) -> String {
    let (r, g, b) = if t <= 0.5 {
        lerp(LOW, MID, t * 2.0)
    } else {
        lerp(MID, HIGH, (t - 0.5) * 2.0)
    };
    format!("#{:02x}{:02x}{:02x}", r.round() as u8, g.round() as u8, b.round() as u8)
}

/// Maps values onto [0, 1]; an all-equal slice lands in the middle.
fn normalize(values: &[f64]) -> Vec<f64> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(max - min).is_normal() {
        return vec![0.5; values.len()];
    }
    values.iter().map(|v| (v - min) / (max - min)).collect()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the graph as Graphviz source. `vertex_values` colors the round
/// vertex nodes, `hbedge_values` the square hb-edge nodes; both are
/// normalized independently.
pub fn export_dot(
    g: &HbGraph,
    vertex_values: &[f64],
    hbedge_values: &[f64],
) -> Result<String> {
    if vertex_values.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            actual: vertex_values.len(),
        });
    }
    if hbedge_values.len() != g.hbedge_count() {
        return Err(Error::LengthMismatch {
            expected: g.hbedge_count(),
            actual: hbedge_values.len(),
        });
    }
    let vt = normalize(vertex_values);
    let et = normalize(hbedge_values);
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for (i, id) in g.vertices().iter().enumerate() {
        out.push_str(&format!(
            "  {} [value={}, fillcolor=\"{}\"];\n",
            quote(id),
            vertex_values[i],
            color(vt[i])
        ));
    }
    for (j, e) in g.hbedges().iter().enumerate() {
        out.push_str(&format!(
            "  {} [shape=square, value={}, fillcolor=\"{}\"];\n",
            quote(&format!("x_{}", e.id())),
            hbedge_values[j],
            color(et[j])
        ));
    }
    for e in g.hbedges() {
        for (v, m) in e.members().iter() {
            out.push_str(&format!(
                "  {} -- {} [label={m}];\n",
                quote(v),
                quote(&format!("x_{}", e.id())),
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::g1;

    #[test]
    fn dot_covers_all_nodes_and_incidences() {
        let g = g1();
        let dot = export_dot(&g, &[1.0, 1.25, 0.75], &[1.5, 1.5]).unwrap();
        for node in ["\"v1\"", "\"v2\"", "\"v3\"", "\"x_e1\"", "\"x_e2\""] {
            assert!(dot.contains(node), "missing {node}");
        }
        assert_eq!(dot.matches("shape=square").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.contains("\"v1\" -- \"x_e1\" [label=2];"));
    }

    #[test]
    fn dot_output_is_deterministic() {
        let g = g1();
        let a = export_dot(&g, &[1.0, 1.25, 0.75], &[1.5, 1.5]).unwrap();
        let b = export_dot(&g, &[1.0, 1.25, 0.75], &[1.5, 1.5]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn extreme_values_hit_ramp_ends() {
        let g = g1();
        let dot = export_dot(&g, &[0.0, 0.5, 1.0], &[0.0, 1.0]).unwrap();
        assert!(dot.contains("#2166ac"));
        assert!(dot.contains("#f7f7f7"));
        assert!(dot.contains("#b2182b"));
    }

    #[test]
    fn flat_values_land_mid_ramp() {
        let g = g1();
        let dot = export_dot(&g, &[2.0, 2.0, 2.0], &[3.0, 3.0]).unwrap();
        assert_eq!(dot.matches("#f7f7f7").count(), 5);
    }

    #[test]
    fn shape_errors_are_reported() {
        let g = g1();
        assert!(matches!(
            export_dot(&g, &[1.0], &[1.0, 1.0]),
            Err(Error::LengthMismatch { expected: 3, actual: 1 })
        ));
        assert!(matches!(
            export_dot(&g, &[1.0, 1.0, 1.0], &[1.0]),
            Err(Error::LengthMismatch { expected: 2, actual: 1 })
        ));
    }
}
