//! Small fixed-size tensors on a two-dimensional parameter domain.

use nalgebra::Matrix2;

pub type Sym2 = Matrix2<f64>;

/// Totally symmetric rank-3 tensor with indices in {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic(pub [[[f64; 2]; 2]; 2]);

impl Cubic {
    /// Builds the tensor from its four independent components, where `a112`
    /// fills every slot with two 0-indices and `a122` every slot with two
    /// 1-indices.
    pub fn symmetric(a111: f64, a112: f64, a122: f64, a222: f64) -> Self {
        let mut t = [[[0.0; 2]; 2]; 2];
        for (i, plane) in t.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, x) in row.iter_mut().enumerate() {
                    *x = match i + j + k {
                        0 => a111,
                        1 => a112,
                        2 => a122,
                        _ => a222,
                    };
                }
            }
        }
        Cubic(t)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.0[i][j][k]
    }

    /// Raises all three indices with the inverse metric `inv`.
    pub fn raised(&self, inv: &Sym2) -> Cubic {
        let mut out = [[[0.0; 2]; 2]; 2];
        for (i, plane) in out.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, x) in row.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for a in 0..2 {
                        for b in 0..2 {
                            for c in 0..2 {
                                acc += inv[(i, a)] * inv[(j, b)] * inv[(k, c)] * self.0[a][b][c];
                            }
                        }
                    }
                    *x = acc;
                }
            }
        }
        Cubic(out)
    }

    /// Full contraction `A_ijk B^ijk`.
    pub fn contract(&self, other: &Cubic) -> f64 {
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    acc += self.0[i][j][k] * other.0[i][j][k];
                }
            }
        }
        acc
    }

    /// Half trace `T_i = 1/2 A_ijk G^jk`.
    pub fn half_trace(&self, inv: &Sym2) -> [f64; 2] {
        let mut t = [0.0; 2];
        for (i, ti) in t.iter_mut().enumerate() {
            for j in 0..2 {
                for k in 0..2 {
                    *ti += 0.5 * self.0[i][j][k] * inv[(j, k)];
                }
            }
        }
        t
    }

    /// Largest difference between entries related by an index permutation.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let x = self.0[i][j][k];
                    for y in [self.0[i][k][j], self.0[j][i][k], self.0[j][k][i], self.0[k][i][j], self.0[k][j][i]] {
                        worst = worst.max((x - y).abs());
                    }
                }
            }
        }
        worst
    }
}

/// `v^i = inv^ij v_j`.
pub fn raise(inv: &Sym2, v: [f64; 2]) -> [f64; 2] {
    [
        inv[(0, 0)] * v[0] + inv[(0, 1)] * v[1],
        inv[(1, 0)] * v[0] + inv[(1, 1)] * v[1],
    ]
}

/// `v_i = g_ij v^j`.
pub fn lower(g: &Sym2, v: [f64; 2]) -> [f64; 2] {
    raise(g, v)
}

/// Symmetric 2x2 matrix from its three entries.
pub fn sym2(a11: f64, a12: f64, a22: f64) -> Sym2 {
    Sym2::new(a11, a12, a12, a22)
}

/// Inverse of a symmetric 2x2 matrix; `None` when singular.
pub fn inverse(m: &Sym2) -> Option<Sym2> {
    let det = m.determinant();
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    Some(Sym2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]) / det)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_fill() {
        let a = Cubic::symmetric(1.0, 2.0, 3.0, 4.0);
        assert_eq!(a.asymmetry(), 0.0);
        assert_eq!(a.get(0, 1, 0), 2.0);
        assert_eq!(a.get(1, 0, 1), 3.0);
        assert_eq!(a.get(1, 1, 1), 4.0);
    }

    #[test]
    fn raising_with_identity_is_a_no_op() {
        let a = Cubic::symmetric(1.0, -2.0, 0.5, 0.0);
        assert_eq!(a.raised(&Sym2::identity()), a);
        // 1 + 3*4 + 3*0.25
        assert_eq!(a.contract(&a), 13.75);
        assert_eq!(a.half_trace(&Sym2::identity()), [0.5 * (1.0 + 0.5), 0.5 * (-2.0 + 0.0)]);
    }

    #[test]
    fn inverse_of_symmetric() {
        let m = sym2(2.0, 1.0, 3.0);
        let inv = inverse(&m).unwrap();
        assert!((m * inv - Sym2::identity()).norm() < 1e-15);
        assert!(inverse(&sym2(1.0, 1.0, 1.0)).is_none());
    }
}
