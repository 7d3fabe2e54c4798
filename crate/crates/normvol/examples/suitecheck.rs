use normvol::harness::suites::*;
use normvol::solvers::SolverBudget;
use std::time::Instant;

fn run(name: &str, reports: Vec<normvol::harness::VerificationReport>, t0: Instant) {
    let ok = normvol::harness::all_pass(&reports);
    println!("== {name}: {} ({} reports, {:.2}s)", if ok { "ALL PASS" } else { "FAIL" }, reports.len(), t0.elapsed().as_secs_f64());
    for r in &reports {
        if !r.pass {
            println!("  {}", r.line());
        }
    }
}

fn main() {
    let budget = SolverBudget::seeded(42);
    let t = Instant::now(); run("bus-plane", verify_bus_plane(&budget).unwrap(), t);
    let t = Instant::now(); run("bus-max d=3", verify_bus_max(3, &budget).unwrap(), t);
    let t = Instant::now(); run("bus-max d=4", verify_bus_max(4, &budget).unwrap(), t);
    let t = Instant::now(); run("bus-max d=5", verify_bus_max(5, &budget).unwrap(), t);
    let t = Instant::now(); run("ht-plane", verify_ht_plane(&[4, 6, 8], &budget).unwrap(), t);
    let t = Instant::now(); run("mass", verify_mass(&budget).unwrap(), t);
    let t = Instant::now(); run("mass-star", verify_mass_star(&budget).unwrap(), t);
    let t = Instant::now(); run("ht-simplex", verify_ht_simplex_local(50, &budget).unwrap(), t);
    let t = Instant::now(); run("shadow", verify_shadow(&budget).unwrap(), t);
    let t = Instant::now(); run("combinatorics", verify_combinatorics(), t);
}
