//! Fixed instances for the criterion benches.

use twinless::generate::twin_free_double_cycle;
use twinless::instances::fig1a;
use twinless::DirectedGraph;

/// Named 2-vertex-twinless connected instances of increasing size.
pub fn fixtures() -> Vec<(String, DirectedGraph)> {
    let mut out = vec![("fig1a".to_string(), fig1a())];
    for n in [50, 100, 200] {
        let g = twin_free_double_cycle(n, 2 * n, 1).expect("feasible parameters");
        out.push((format!("tfdc_{n}_m{}", g.m()), g));
    }
    out
}
