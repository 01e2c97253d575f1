// Write OBJ meshes of a surface and of its affine normal image.

use rulekit::affine::image_point;
use rulekit::cli::obj::export_obj;
use rulekit::frame::linspace;
use rulekit::zoo;

pub fn run_example() -> rulekit::Result<()> {
    let s = zoo::surface("edlinger")?;
    let (nu, nv) = (64, 32);
    let us = linspace(0.0, std::f64::consts::TAU, nu);
    let vs = linspace(-2.0, 2.0, nv);
    let mut base = Vec::with_capacity(nu * nv);
    let mut image = Vec::with_capacity(nu * nv);
    for &u in &us {
        for &v in &vs {
            base.push(s.point(u, v)?);
            image.push(image_point(&s, u, v)?);
        }
    }
    let dir = std::env::temp_dir();
    for (name, points) in [("edlinger_base.obj", &base), ("edlinger_affine.obj", &image)] {
        let path = dir.join(name);
        export_obj(points, nu, nv, &path)?;
        println!("wrote {} ({} vertices, {} triangles)", path.display(), points.len(), 2 * (nu - 1) * (nv - 1));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
