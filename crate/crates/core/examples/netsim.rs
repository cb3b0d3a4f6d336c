//! A growing network with its degree distribution and growth rates.

use hypercode::netsim::{distributions, fit_exponent, kinematics, run, DistKind, SimConfig, DEFAULT_K_MIN};

fn main() -> hypercode::Result<()> {
    let cfg = SimConfig::new(2, 5000, 42);
    let (state, summary) = run(&cfg)?;
    println!("{} vertices, {} edges", state.v_net(), state.e_net);
    println!("vertex growth {:?}", summary.fit.v);
    println!("edge growth {:?}", summary.fit.e);

    let cum = distributions(&state, DistKind::Cum);
    let fit = fit_exponent(&cum, DEFAULT_K_MIN)?;
    println!("degree exponent {:.2} ± {:.2} over {} points", fit.gamma, fit.stderr, fit.points);

    let k = kinematics(&state.history)?;
    println!("velocity {:.3}, average degree {:.3}, sparse {}", k.velocity, k.average_degree, k.sparse);
    Ok(())
}
