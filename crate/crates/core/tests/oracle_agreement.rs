use rulekit::frame::linspace;
use rulekit::oracle::{
    numeric_darboux, numeric_field_derivatives, numeric_forms, numeric_pick, numeric_relative_metric,
    numeric_relative_normal, numeric_tchebychev, FDConfig,
};
use rulekit::relgeom::{darboux, pick, tchebychev};
use rulekit::tensors::{fundamental_forms, relative_data};
use rulekit::zoo;

fn grid(u0: f64, u1: f64, n: usize) -> Vec<(f64, f64)> {
    let vs = linspace(-2.0, 2.0, n);
    linspace(u0, u1, n).into_iter().flat_map(|u| vs.iter().map(move |&v| (u, v))).collect()
}

fn rel(closed: f64, oracle: f64, scale: f64) -> f64 {
    (closed - oracle).abs() / scale.max(1e-3)
}

#[test]
fn exact_items_match_on_zoo() {
    for name in zoo::ZOO {
        let s = zoo::surface(name).unwrap();
        let d = s.domain();
        for (u, v) in grid(d.lo, d.hi, 7) {
            let f = fundamental_forms(&s, u, v).unwrap();
            let n = numeric_forms(&s, u, v).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    assert!(rel(f.g[(i, j)], n.g[(i, j)], f.g.norm()) < 1e-8, "{name} g");
                    assert!(rel(f.h[(i, j)], n.h[(i, j)], f.h.norm()) < 1e-8, "{name} h");
                }
            }
            assert!(n.gauss < 0.0);
            assert!(rel(f.gauss, n.gauss, f.gauss.abs()) < 1e-8);
        }
    }
}

#[test]
fn helicoid_metric_at_striction_is_identity() {
    let s = zoo::surface("helicoid").unwrap();
    for u in [0.0, 1.0, 5.0] {
        let g = numeric_forms(&s, u, 0.0).unwrap().g;
        assert!((g[(0, 0)] - 1.0).abs() < 1e-12 && g[(0, 1)].abs() < 1e-12 && (g[(1, 1)] - 1.0).abs() < 1e-12);
    }
}

#[test]
fn fd_items_match_on_generic() {
    let s = zoo::surface("generic").unwrap();
    let cfg = FDConfig::default();
    for alpha in [0.0, 0.3, 1.0] {
        for (u, v) in grid(0.2, 3.0, 5) {
            let p = relative_data(&s, u, v, alpha).unwrap();
            let ng = numeric_relative_metric(&s, u, v, alpha).unwrap();
            assert!((p.relative_metric - ng).norm() / p.relative_metric.norm() < 1e-8);
            let y = numeric_relative_normal(&s, u, v, alpha, &cfg).unwrap();
            assert!((p.y - y).norm() / p.y.norm() < 1e-5);

            let a = darboux(&s, u, v, alpha).unwrap();
            let na = numeric_darboux(&s, u, v, alpha, &cfg).unwrap();
            let scale = a.a111.abs().max(a.a112.abs()).max(a.a221.abs());
            for (c, o) in [(a.a111, na.a111), (a.a112, na.a112), (a.a221, na.a221), (a.a222, na.a222)] {
                assert!(rel(c, o, scale) < 1e-5, "alpha {alpha} A at ({u}, {v})");
            }
            let j = pick(&s, u, v, alpha).unwrap();
            assert!(rel(j, numeric_pick(&s, u, v, alpha, &cfg).unwrap(), j.abs()) < 1e-5);

            let t = tchebychev(&s, u, v, alpha).unwrap();
            let (nt, nvec) = numeric_tchebychev(&s, u, v, alpha, &cfg).unwrap();
            let tn = t.t1.abs().max(t.t2.abs());
            assert!(rel(t.t1, nt[0], tn) < 1e-5 && rel(t.t2, nt[1], tn) < 1e-5);
            assert!((t.vec - nvec).norm() / t.vec.norm().max(1e-3) < 1e-5);
            let (div, rot) = numeric_field_derivatives(&s, u, v, alpha, &cfg).unwrap();
            assert!(rel(t.div, div, t.div.abs()) < 1e-5);
            assert!(rel(t.rot, rot, t.rot.abs()) < 1e-5);
        }
    }
}

#[test]
fn oracle_darboux_vanishing_components() {
    let cfg = FDConfig::default();
    for name in zoo::ZOO {
        let s = zoo::surface(name).unwrap();
        let d = s.domain();
        for (u, v) in grid(d.lo, d.hi, 5) {
            let a = numeric_darboux(&s, u, v, 0.3, &cfg).unwrap();
            assert!(a.a222.abs() < 1e-8, "{name}: A222 = {}", a.a222);
            let q = numeric_darboux(&s, u, v, 0.25, &cfg).unwrap();
            assert!(q.a112.abs() < 1e-8 && q.a221.abs() < 1e-8, "{name} at alpha 1/4");
        }
    }
}

#[test]
fn oracle_field_derivatives_at_special_values() {
    let cfg = FDConfig::default();
    let conoid = zoo::surface("conoid").unwrap();
    let generic = zoo::surface("generic").unwrap();
    for (u, v) in grid(0.0, 6.0, 5) {
        let (div, _) = numeric_field_derivatives(&conoid, u, v, 0.0, &cfg).unwrap();
        assert!(div.abs() < 1e-7);
        let (div, rot) = numeric_field_derivatives(&generic, u, v, 0.25, &cfg).unwrap();
        assert!(div.abs() < 1e-10 && rot.abs() < 1e-10);
    }
}

#[test]
fn richardson_error_scales_like_fourth_order() {
    // a coarse step so truncation dominates roundoff
    let s = zoo::surface("generic").unwrap();
    let (u, v) = (1.1, 0.6);
    let exact = tchebychev(&s, u, v, 1.0).unwrap().div;
    let err = |h: f64| {
        let cfg = FDConfig::with_step(h).unwrap();
        (numeric_field_derivatives(&s, u, v, 1.0, &cfg).unwrap().0 - exact).abs()
    };
    let ratio = err(1e-2) / err(5e-3);
    assert!((8.0..=24.0).contains(&ratio), "ratio {ratio}");
}
