//! Line-oriented DCX text format:
//!
//! ```text
//! dcx 1
//! dim D
//! 0 <count>
//! <count empty lines>
//! 1 <count>
//! <i0> <i1>
//! ...
//! ```

use std::fmt::Write as _;

use super::DeltaComplex;
use crate::error::{Error, Result};

pub fn write_dcx(x: &DeltaComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dcx 1");
    let _ = writeln!(out, "dim {}", x.dim());
    for k in 0..=x.dim() {
        let _ = writeln!(out, "{k} {}", x.count(k));
        for i in 0..x.count(k) {
            let line: Vec<String> = x.faces(k, i).iter().map(|f| f.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }
    out
}

pub fn parse_dcx(text: &str) -> Result<DeltaComplex> {
    let mut lines = text.split_inclusive('\n').scan(0usize, |pos, line| {
        let start = *pos;
        *pos += line.len();
        Some((start, line.trim_end_matches(['\n', '\r'])))
    });
    let mut next = |what: &str| -> Result<(usize, &str)> {
        lines
            .next()
            .ok_or_else(|| Error::parse(text.len(), format!("unexpected end of input, expected {what}")))
    };
    let (pos, header) = next("header")?;
    if header.trim() != "dcx 1" {
        return Err(Error::parse(pos, "expected header `dcx 1`"));
    }
    let (pos, dim_line) = next("dim line")?;
    let dim: usize = dim_line
        .trim()
        .strip_prefix("dim")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| Error::parse(pos, "expected `dim D`"))?;
    let mut layers = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let (pos, sec) = next("section header")?;
        let mut it = sec.split_whitespace();
        let kk: Option<usize> = it.next().and_then(|t| t.parse().ok());
        let count: Option<usize> = it.next().and_then(|t| t.parse().ok());
        match (kk, count, it.next()) {
            (Some(kk), Some(count), None) if kk == k => {
                let mut layer = Vec::with_capacity(count);
                for _ in 0..count {
                    let (pos, line) = next("simplex line")?;
                    let mut faces = Vec::new();
                    for tok in line.split_whitespace() {
                        let f: usize = tok
                            .parse()
                            .map_err(|_| Error::parse(pos, format!("bad face index `{tok}`")))?;
                        faces.push(f);
                    }
                    let expected = if k == 0 { 0 } else { k + 1 };
                    if faces.len() != expected {
                        return Err(Error::parse(
                            pos,
                            format!("{k}-simplex needs {expected} face indices, found {}", faces.len()),
                        ));
                    }
                    if k > 0 {
                        let below: &Vec<Vec<usize>> = &layers[k - 1];
                        if let Some(bad) = faces.iter().find(|&&f| f >= below.len()) {
                            return Err(Error::parse(pos, format!("face index {bad} out of range")));
                        }
                    }
                    layer.push(faces);
                }
                layers.push(layer);
            }
            _ => return Err(Error::parse(pos, format!("expected section header `{k} <count>`"))),
        }
    }
    for (pos, rest) in lines {
        if !rest.trim().is_empty() {
            return Err(Error::parse(pos, "trailing content after last section"));
        }
    }
    DeltaComplex::new(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generator;

    #[test]
    fn round_trip_generators() {
        for name in ["S3", "T3", "S1~S2"] {
            let x = generator(name, &[]).unwrap();
            assert_eq!(parse_dcx(&write_dcx(&x)).unwrap(), x);
        }
    }

    #[test]
    fn rejects_out_of_range_and_identity_violations() {
        let bad = "dcx 1\ndim 1\n0 1\n\n1 1\n0 3\n";
        assert!(matches!(parse_dcx(bad), Err(Error::Parse { pos: 21, .. })));
        let broken = "dcx 1\ndim 2\n0 3\n\n\n\n1 3\n1 0\n2 1\n2 0\n2 1\n1 2 1\n";
        assert!(matches!(parse_dcx(broken), Err(Error::MalformedComplex(_))));
        assert!(matches!(parse_dcx("dcx 2\n"), Err(Error::Parse { pos: 0, .. })));
    }
}
