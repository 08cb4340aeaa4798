//! PALP-style vertex matrices.
//!
//! Each block is a header line whose first two tokens are the matrix
//! dimensions (anything after them is a free-form comment) followed by the
//! matrix rows. A `3 k` header means the `k` vertices are the columns of a
//! 3-row matrix; `k 3` means they are the rows.

use std::io::{BufRead, Write};

use fano_obstruct_core::{convex_hull, Int, LatticePoint};

use crate::error::IngestError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRecord {
    /// 0-based position in the source stream.
    pub index: usize,
    pub vertices: Vec<LatticePoint>,
    pub source_header: String,
}

fn normalize(line: &str) -> String {
    line.replace('\u{2212}', "-")
}

fn parse_int(token: &str, line: usize) -> Result<Int, IngestError> {
    token.parse::<Int>().map_err(|_| IngestError::Parse {
        line,
        message: format!("not an integer: {token:?}"),
    })
}

/// Streaming parser over a PALP text source.
pub struct PalpReader<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
    index: usize,
    failed: bool,
}

pub fn parse_palp<R: BufRead>(reader: R) -> PalpReader<R> {
    PalpReader {
        lines: reader.lines(),
        line_no: 0,
        index: 0,
        failed: false,
    }
}

impl<R: BufRead> PalpReader<R> {
    /// Next non-blank line with its 1-based number.
    fn next_line(&mut self) -> Result<Option<(usize, String)>, IngestError> {
        for line in self.lines.by_ref() {
            self.line_no += 1;
            let line = normalize(&line?);
            if !line.trim().is_empty() {
                return Ok(Some((self.line_no, line)));
            }
        }
        Ok(None)
    }

    fn read_block(&mut self) -> Result<Option<PolytopeRecord>, IngestError> {
        let Some((header_line, header)) = self.next_line()? else {
            return Ok(None);
        };
        let mut tokens = header.split_whitespace();
        let mut dim = || -> Result<usize, IngestError> {
            let tok = tokens.next().unwrap_or("");
            tok.parse::<usize>().map_err(|_| IngestError::Parse {
                line: header_line,
                message: format!("expected matrix dimensions, found {:?}", header.trim()),
            })
        };
        let rows = dim()?;
        let cols = dim()?;
        if rows != 3 && cols != 3 {
            return Err(IngestError::NotThreeDimensional { line: header_line });
        }

        let mut matrix: Vec<Vec<Int>> = Vec::with_capacity(rows);
        for r in 0..rows {
            let Some((line_no, line)) = self.next_line()? else {
                return Err(IngestError::Parse {
                    line: self.line_no,
                    message: format!("unexpected end of input: expected {} more rows", rows - r),
                });
            };
            let row = line
                .split_whitespace()
                .map(|t| parse_int(t, line_no))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != cols {
                return Err(IngestError::Parse {
                    line: line_no,
                    message: format!("expected {cols} integers, found {}", row.len()),
                });
            }
            matrix.push(row);
        }

        let as_columns = || -> Vec<LatticePoint> {
            (0..cols)
                .map(|j| {
                    LatticePoint::new(
                        matrix[0][j].clone(),
                        matrix[1][j].clone(),
                        matrix[2][j].clone(),
                    )
                })
                .collect()
        };
        let as_rows = || -> Vec<LatticePoint> {
            matrix
                .iter()
                .map(|r| LatticePoint::new(r[0].clone(), r[1].clone(), r[2].clone()))
                .collect()
        };
        let vertices = match (rows, cols) {
            (3, 3) => {
                let cols_first = as_columns();
                if convex_hull(&cols_first).is_ok() {
                    cols_first
                } else {
                    let by_rows = as_rows();
                    if convex_hull(&by_rows).is_err() {
                        return Err(IngestError::Parse {
                            line: header_line,
                            message: "3x3 block is not full-dimensional in either orientation"
                                .into(),
                        });
                    }
                    by_rows
                }
            }
            (3, _) => as_columns(),
            _ => as_rows(),
        };

        let record = PolytopeRecord {
            index: self.index,
            vertices,
            source_header: header.trim_end().to_string(),
        };
        self.index += 1;
        Ok(Some(record))
    }
}

impl<R: BufRead> Iterator for PalpReader<R> {
    type Item = Result<PolytopeRecord, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.read_block() {
            Ok(Some(rec)) => Some(Ok(rec)),
            Ok(None) => None,
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// Writes vertices in the `k 3` row layout.
pub fn write_palp<W: Write>(
    out: &mut W,
    vertices: &[LatticePoint],
    comment: &str,
) -> std::io::Result<()> {
    if comment.is_empty() {
        writeln!(out, "{} 3", vertices.len())?;
    } else {
        writeln!(out, "{} 3 {comment}", vertices.len())?;
    }
    for v in vertices {
        writeln!(out, "{} {} {}", v[0], v[1], v[2])?;
    }
    Ok(())
}

/// A JSON document holding one array of 3-integer vertex arrays.
pub fn parse_json_vertices(text: &str) -> Result<Vec<LatticePoint>, IngestError> {
    let rows: Vec<Vec<serde_json::Number>> =
        serde_json::from_str(text).map_err(|e| IngestError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let coords: Option<Vec<i64>> = row.iter().map(|x| x.as_i64()).collect();
            match coords.as_deref() {
                Some(&[x, y, z]) => Ok(LatticePoint::from([x, y, z])),
                _ => Err(IngestError::Parse {
                    line: 1,
                    message: format!("vertex {i} is not an array of 3 integers"),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn almost_flat() -> Vec<LatticePoint> {
        [[0, 0, 1], [0, 1, -1], [0, 1, 0], [-2, -1, 0], [1, 0, 0]]
            .into_iter()
            .map(LatticePoint::from)
            .collect()
    }

    fn parse_all(text: &str) -> Result<Vec<PolytopeRecord>, IngestError> {
        parse_palp(text.as_bytes()).collect()
    }

    #[test]
    fn column_layout() {
        let recs = parse_all("3 5 example\n0 0 0 -2 1\n0 1 1 -1 0\n1 -1 0 0 0\n").unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].vertices, almost_flat());
        assert_eq!(recs[0].source_header, "3 5 example");
    }

    #[test]
    fn row_layout_with_unicode_minus() {
        let recs =
            parse_all("5 3 example\n0 0 1\n0 1 \u{2212}1\n0 1 0\n\u{2212}2 \u{2212}1 0\n1 0 0\n")
                .unwrap();
        assert_eq!(recs[0].vertices, almost_flat());
    }

    #[test]
    fn blank_lines_and_multiple_blocks() {
        let text = "\n4 3\n1 0 0\n0 1 0\n\n0 0 1\n-1 -1 -1\n\n\n3 4 second\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n";
        let recs = parse_all(text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].index, 1);
        assert_eq!(recs[0].vertices, recs[1].vertices);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_all("4 4 x\n1 2 3 4\n"),
            Err(IngestError::NotThreeDimensional { line: 1 })
        ));
        assert!(matches!(
            parse_all("a 3\n"),
            Err(IngestError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_all("4 3\n1 0 0\n0 1 0\n"),
            Err(IngestError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_all("4 3\n1 0 0\n0 1\n0 0 1\n-1 -1 -1\n"),
            Err(IngestError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_all("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\ngarbage here\n"),
            Err(IngestError::Parse { line: 6, .. })
        ));
        assert!(matches!(
            parse_all("4 3\n1 0 0\n0 1 x\n0 0 1\n-1 -1 -1\n"),
            Err(IngestError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn square_header_never_full_dimensional() {
        let err = parse_all("3 3\n1 0 0\n0 1 0\n0 0 1\n").unwrap_err();
        assert!(matches!(err, IngestError::Parse { line: 1, .. }));
    }

    #[test]
    fn json_input() {
        let v = parse_json_vertices("[[0,0,1],[0,1,-1],[0,1,0],[-2,-1,0],[1,0,0]]").unwrap();
        assert_eq!(v, almost_flat());
        assert!(parse_json_vertices("[[0,0],[1,1,1]]").is_err());
        assert!(parse_json_vertices("[[0,0,1.5]]").is_err());
        assert!(parse_json_vertices("{").is_err());
    }

    #[test]
    fn write_then_parse() {
        let mut buf = Vec::new();
        write_palp(&mut buf, &almost_flat(), "af").unwrap();
        let recs = parse_all(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(recs[0].vertices, almost_flat());
    }
}
