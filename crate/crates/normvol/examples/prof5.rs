use normvol::bodies::simplex_pair_body;
use normvol::normed::{mu, VolumeKind};
use normvol::solvers::SolverBudget;
use std::time::Instant;

fn main() {
    let budget = SolverBudget::seeded(42);
    let b = simplex_pair_body(5, 3).unwrap();
    let t = Instant::now();
    let r = mu(&b, 7, VolumeKind::Busemann, &budget).unwrap();
    println!("mu clean pair: {:.3}s value {}", t.elapsed().as_secs_f64(), r.value);
    // one perturbed trial equivalent
    use normvol::rng::stream_rng;
    use rand::Rng;
    let mut rng = stream_rng(42, 0x9E27);
    let classes = b.antipodal_classes().unwrap();
    let circ = b.circumradius();
    let mut pts = vec![];
    for (i, _) in classes {
        let mut v = b.vertices[i].clone();
        for x in v.iter_mut() { *x += 0.03 * circ * (rng.gen::<f64>() * 2.0 - 1.0); }
        pts.push(v.iter().map(|x| -x).collect::<Vec<f64>>());
        pts.push(v);
    }
    let mut pb = normvol::geom::hull::convex_hull(&pts).unwrap();
    pb.symmetric = true;
    let t = Instant::now();
    let r = mu(&pb, 7, VolumeKind::Busemann, &budget).unwrap();
    println!("mu perturbed pair: {:.3}s value {}", t.elapsed().as_secs_f64(), r.value);
}
