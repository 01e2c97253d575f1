//! Wavefront OBJ export of a sampled surface grid.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::frame::Vec3;

/// Nine significant digits; fixed eight decimals below magnitude one.
fn coord(x: f64) -> String {
    let decimals = if x.abs() < 1.0 {
        8
    } else {
        (8 - x.abs().log10().floor() as i32).max(0) as usize
    };
    let mut s = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit (9.9999999996 -> 10.00000000)
    if decimals > 0 && x.abs() >= 1.0 && s.trim_start_matches('-').len() > 10 {
        let d = decimals - 1;
        s = format!("{x:.d$}");
    }
    if s.starts_with('-') && s[1..].bytes().all(|c| c == b'0' || c == b'.') {
        s.remove(0);
    }
    s
}

/// OBJ text for an `nu x nv` grid stored row-major (`points[i * nv + j]`).
pub fn obj_string(points: &[Vec3], nu: usize, nv: usize) -> Result<String> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidArgument(format!("mesh grid must be at least 2x2, got {nu}x{nv}")));
    }
    if points.len() != nu * nv {
        return Err(Error::InvalidArgument(format!(
            "expected {} grid points, got {}",
            nu * nv,
            points.len()
        )));
    }
    let mut out = String::with_capacity(points.len() * 40);
    for p in points {
        writeln!(out, "v {} {} {}", coord(p.x), coord(p.y), coord(p.z)).expect("write to string");
    }
    let id = |i: usize, j: usize| i * nv + j + 1;
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            writeln!(out, "f {} {} {}", id(i, j), id(i + 1, j), id(i + 1, j + 1)).expect("write to string");
            writeln!(out, "f {} {} {}", id(i, j), id(i + 1, j + 1), id(i, j + 1)).expect("write to string");
        }
    }
    Ok(out)
}

pub fn export_obj(points: &[Vec3], nu: usize, nv: usize, path: &Path) -> Result<()> {
    let text = obj_string(points, nu, nv)?;
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Vertices and faces of an OBJ file; only `v` and `f` lines are read.
pub fn read_obj(text: &str) -> Result<(Vec<Vec3>, Vec<[usize; 3]>)> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        let bad = || Error::InvalidArgument(format!("malformed OBJ line {}: '{line}'", n + 1));
        match parts.next() {
            Some("v") => {
                let c: Vec<f64> = parts.map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                if c.len() != 3 {
                    return Err(bad());
                }
                vertices.push(Vec3::new(c[0], c[1], c[2]));
            }
            Some("f") => {
                let c: Vec<usize> = parts.map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                if c.len() != 3 {
                    return Err(bad());
                }
                faces.push([c[0], c[1], c[2]]);
            }
            _ => {}
        }
    }
    Ok((vertices, faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_format() {
        let s = obj_string(&[Vec3::new(1.0, 0.0, 0.0); 4], 2, 2).unwrap();
        assert_eq!(s.lines().next().unwrap(), "v 1.00000000 0.00000000 0.00000000");
        assert_eq!(s.lines().filter(|l| l.starts_with("f ")).count(), 2);
        assert_eq!(s.lines().nth(4).unwrap(), "f 1 3 4");
        assert_eq!(s.lines().nth(5).unwrap(), "f 1 4 2");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(coord(-12.3456789012), "-12.3456789");
        assert_eq!(coord(0.000123456789012), "0.00012346");
        assert_eq!(coord(9.9999999996), "10.0000000");
        assert_eq!(coord(-1e-20), "0.00000000");
        assert_eq!(coord(123456789012.0), "123456789012");
        assert_eq!(coord(-0.5), "-0.50000000");
    }

    #[test]
    fn round_trip() {
        let pts: Vec<Vec3> = (0..12).map(|i| Vec3::new(i as f64 * 0.37, -1.0 / (1.0 + i as f64), 3.0)).collect();
        let (v, f) = read_obj(&obj_string(&pts, 3, 4).unwrap()).unwrap();
        assert_eq!(f.len(), 2 * 2 * 3);
        for (a, b) in v.iter().zip(&pts) {
            assert!((a - b).norm() <= 1e-8 * (1.0 + b.norm()));
        }
    }

    #[test]
    fn small_grids_are_rejected() {
        assert!(obj_string(&[Vec3::zeros(); 3], 1, 3).is_err());
    }
}
