use serde::{Deserialize, Serialize};

use super::{indices, FaceLattice, VertexSet01};
use crate::error::{Error, Result};

/// cdd-style V-representation of a vertex set.
pub fn vrep(v: &VertexSet01) -> String {
    let mut out = String::from("V-representation\nbegin\n");
    out.push_str(&format!("{} {} rational\n", v.len(), v.dim() + 1));
    for i in 0..v.len() {
        out.push('1');
        for j in 0..v.dim() {
            out.push_str(if v.coord(i, j) { " 1" } else { " 0" });
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn expect(line: Option<&str>, want: &str) -> Result<()> {
    match line {
        Some(l) if l == want => Ok(()),
        Some(l) => Err(Error::Parse(format!("expected `{want}`, found `{l}`"))),
        None => Err(Error::Parse(format!("expected `{want}`, found end of input"))),
    }
}

/// Parses the output of [`vrep`]. Lines starting with `*` are comments and
/// anything after `end` is ignored. Only vertices (leading `1`) with 0/1
/// coordinates are accepted.
pub fn parse_vrep(text: &str) -> Result<VertexSet01> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('*'));
    expect(lines.next(), "V-representation")?;
    expect(lines.next(), "begin")?;
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing size line".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [count, cols, kind] = fields[..] else {
        return Err(Error::Parse(format!("bad size line `{header}`")));
    };
    if kind != "rational" && kind != "integer" {
        return Err(Error::Parse(format!("unsupported number type `{kind}`")));
    }
    let count: usize = count
        .parse()
        .map_err(|_| Error::Parse(format!("bad row count `{count}`")))?;
    let cols: usize = cols
        .parse()
        .map_err(|_| Error::Parse(format!("bad column count `{cols}`")))?;
    if cols == 0 {
        return Err(Error::Parse("column count must be at least 1".into()));
    }
    let dim = cols - 1;
    let mut points = Vec::with_capacity(count);
    for r in 0..count {
        let row = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {count} rows, found {r}")))?;
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != cols {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {cols}",
                r + 1,
                entries.len()
            )));
        }
        if entries[0] != "1" {
            return Err(Error::Parse(format!(
                "row {} is not a vertex (leading entry `{}`)",
                r + 1,
                entries[0]
            )));
        }
        let mut p = 0u64;
        for (j, e) in entries[1..].iter().enumerate() {
            match *e {
                "0" => {}
                "1" if j < 64 => p |= 1 << j,
                _ => {
                    return Err(Error::Parse(format!(
                        "row {} has a non 0/1 coordinate `{e}`",
                        r + 1
                    )))
                }
            }
        }
        points.push(p);
    }
    expect(lines.next(), "end")?;
    VertexSet01::new(dim, points)
}

/// JSON form of a vertex set: points as 0/1 arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSetJson {
    pub dim: usize,
    pub points: Vec<Vec<u8>>,
}

fn point_row(v: &VertexSet01, i: usize) -> Vec<u8> {
    (0..v.dim()).map(|j| v.coord(i, j) as u8).collect()
}

pub fn vertex_json(v: &VertexSet01) -> VertexSetJson {
    VertexSetJson {
        dim: v.dim(),
        points: (0..v.len()).map(|i| point_row(v, i)).collect(),
    }
}

pub fn parse_vertex_json(text: &str) -> Result<VertexSet01> {
    let json: VertexSetJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut points = Vec::with_capacity(json.points.len());
    for (r, row) in json.points.iter().enumerate() {
        if row.len() != json.dim {
            return Err(Error::Parse(format!(
                "point {} has {} coordinates, expected {}",
                r + 1,
                row.len(),
                json.dim
            )));
        }
        let mut p = 0u64;
        for (j, &c) in row.iter().enumerate() {
            match c {
                0 => {}
                1 if j < 64 => p |= 1 << j,
                _ => {
                    return Err(Error::Parse(format!(
                        "point {} has a non 0/1 coordinate {c}",
                        r + 1
                    )))
                }
            }
        }
        points.push(p);
    }
    VertexSet01::new(json.dim, points)
}

/// JSON form of a face lattice; faces are lists of 0-based vertex indices,
/// grouped by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<u8>>,
    pub f_vector: Vec<usize>,
    pub faces: Vec<Vec<Vec<usize>>>,
}

pub fn lattice_json(v: &VertexSet01, l: &FaceLattice) -> LatticeJson {
    LatticeJson {
        dim: l.dim,
        vertices: vertex_json(v).points,
        f_vector: l.f_vector(),
        faces: l
            .faces
            .iter()
            .map(|group| group.iter().map(|&m| indices(m).collect()).collect())
            .collect(),
    }
}
