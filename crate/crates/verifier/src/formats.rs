//! File formats: graphs as edge lists (plain text or JSON), monomial ideals
//! as literals over declared variables, and Betti tables as text grids or
//! JSON objects. All writers emit deterministic, byte-stable output.

use edgeideal::error::{Error, Result};
use edgeideal::graph::Graph;
use edgeideal::linalg::FieldSpec;
use edgeideal::monomial::{parse_ideal, MonomialIdeal};
use edgeideal::resolution::BettiTable;
use serde_json::json;

/// Parses the plain-text graph format: optional `n=<count>` header line, then
/// one `u v` edge per line (0-based). `#` starts a comment. Without a header
/// the vertex count is one more than the largest vertex mentioned.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex = 0usize;
    let mut any_vertex = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Input(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() || !edges.is_empty() {
                return Err(err("n=<count> must be the first directive".into()));
            }
            n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{rest}`")))?,
            );
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(err(format!("expected `u v`, got `{line}`"))),
        };
        let u: usize = u.parse().map_err(|_| err(format!("bad vertex `{u}`")))?;
        let v: usize = v.parse().map_err(|_| err(format!("bad vertex `{v}`")))?;
        if u == v {
            return Err(err(format!("loop at vertex {u}")));
        }
        max_vertex = max_vertex.max(u).max(v);
        any_vertex = true;
        edges.push((u, v));
    }
    let n = n.unwrap_or(if any_vertex { max_vertex + 1 } else { 0 });
    Graph::from_edges(n, &edges)
}

/// Parses the JSON graph format `{"n": int, "edges": [[u, v], ...]}`.
pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad JSON graph: {e}")))?;
    let n = value
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Input("JSON graph needs an integer field `n`".into()))?
        as usize;
    let edges_val = value
        .get("edges")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Input("JSON graph needs an array field `edges`".into()))?;
    let mut edges = Vec::with_capacity(edges_val.len());
    for (idx, e) in edges_val.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Input(format!("edge {idx} is not a pair")))?;
        let u = pair[0]
            .as_u64()
            .ok_or_else(|| Error::Input(format!("edge {idx} has a bad endpoint")))?;
        let v = pair[1]
            .as_u64()
            .ok_or_else(|| Error::Input(format!("edge {idx} has a bad endpoint")))?;
        edges.push((u as usize, v as usize));
    }
    Graph::from_edges(n, &edges)
}

/// Dispatches on the leading character: `{` means JSON, otherwise text.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

pub fn write_graph_text(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_graph_json(g: &Graph) -> String {
    let edges: Vec<Vec<usize>> = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
    serde_json::to_string_pretty(&json!({"n": g.vertex_count(), "edges": edges}))
        .expect("serializable")
        + "\n"
}

/// Parses the ideal file format: a `vars: x1, x2, ...` header line followed
/// by comma-separated monomials (possibly across several lines). Returns the
/// variable names alongside the ideal.
pub fn parse_ideal_file(text: &str) -> Result<(Vec<String>, MonomialIdeal)> {
    let mut names: Option<Vec<String>> = None;
    let mut body = String::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if names.is_some() {
                return Err(Error::Input(format!(
                    "line {}: repeated vars: header",
                    lineno + 1
                )));
            }
            let list: Vec<String> = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            if list.is_empty() {
                return Err(Error::Input(format!(
                    "line {}: empty variable list",
                    lineno + 1
                )));
            }
            names = Some(list);
            continue;
        }
        if names.is_none() {
            return Err(Error::Input(format!(
                "line {}: ideal files start with `vars: ...`",
                lineno + 1
            )));
        }
        if !body.is_empty() && !body.trim_end().ends_with(',') {
            body.push(',');
        }
        body.push_str(line);
    }
    let names = names.ok_or_else(|| Error::Input("missing `vars:` header".into()))?;
    let ideal = parse_ideal(&body, &names)?;
    Ok((names, ideal))
}

pub fn write_ideal_file(names: &[String], ideal: &MonomialIdeal) -> String {
    format!("vars: {}\n{}\n", names.join(", "), ideal.format_with(names))
}

/// True when the file content looks like an ideal file.
pub fn looks_like_ideal(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("vars:"))
}

/// Macaulay2-style text grid of a Betti table of an ideal: columns are
/// homological degrees, rows are internal degree minus homological degree.
pub fn betti_grid(t: &BettiTable) -> String {
    if t.is_empty() {
        return "(zero module)\n".to_string();
    }
    let pd = t.projective_dimension().expect("nonempty") as usize;
    let rows: Vec<i64> = {
        let min = t
            .graded_entries()
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .min()
            .expect("nonempty");
        let max = t
            .graded_entries()
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .expect("nonempty");
        (min..=max).collect()
    };
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["".to_string()];
    header.extend((0..=pd).map(|i| i.to_string()));
    cells.push(header);
    let mut totals = vec!["total:".to_string()];
    for i in 0..=pd {
        totals.push(t.beta_total(i as u32).to_string());
    }
    cells.push(totals);
    for &r in &rows {
        let mut line = vec![format!("{r}:")];
        for i in 0..=pd {
            let j = r + i as i64;
            let v = if j < 0 { 0 } else { t.beta(i as u32, j as u32) };
            line.push(if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            });
        }
        cells.push(line);
    }
    let widths: Vec<usize> = (0..=pd + 1)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                line.push_str(&format!("{:<w$}", cell, w = widths[0] + 1));
            } else {
                line.push_str(&format!(" {:>w$}", cell, w = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// JSON form of a Betti table: entries sorted by (i, j), multigraded entries
/// by (i, exponents).
pub fn betti_json(t: &BettiTable) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = t
        .graded_entries()
        .iter()
        .map(|(&(i, j), &b)| json!([i, j, b]))
        .collect();
    let multigraded: Vec<serde_json::Value> = t
        .multigraded_entries()
        .iter()
        .map(|((i, m), &b)| json!([i, m.exponents(), b]))
        .collect();
    json!({
        "schema": 1,
        "field": field_json(&t.field()),
        "entries": entries,
        "multigraded": multigraded,
    })
}

pub fn field_json(f: &FieldSpec) -> serde_json::Value {
    json!(f.characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 4)]).unwrap();
        let text = write_graph_text(&g);
        assert_eq!(text, "n=5\n0 1\n2 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::cycle(4);
        let text = write_graph_json(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn header_allows_isolated_vertices() {
        let g = parse_graph("n=4\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("0 1\nx 2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_graph("0 1\n2 2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_graph("0 1\nn=5\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "vars: x1, x2, x3\nx1^4, x1^3*x2,\nx2^4*x3\n";
        let (names, ideal) = parse_ideal_file(text).unwrap();
        assert_eq!(names, vec!["x1", "x2", "x3"]);
        assert_eq!(ideal.num_gens(), 3);
        let written = write_ideal_file(&names, &ideal);
        let (_, again) = parse_ideal_file(&written).unwrap();
        assert_eq!(ideal, again);
    }

    #[test]
    fn ideal_file_requires_header() {
        assert!(parse_ideal_file("x1*x2\n").is_err());
        assert!(looks_like_ideal("vars: a b\na*b\n"));
        assert!(!looks_like_ideal("0 1\n"));
    }

    #[test]
    fn betti_grid_of_pentagon() {
        use edgeideal::resolution::hochster_betti;
        let t = hochster_betti(&Graph::cycle(5), &FieldSpec::Char0);
        let grid = betti_grid(&t);
        // Rows are j - i: the five first syzygies in degree 3 share the
        // degree-2 row with the generators.
        let expect = "        0 1 2\ntotal:  5 5 1\n2:      5 5 .\n3:      . . 1\n";
        assert_eq!(grid, expect);
    }
}
