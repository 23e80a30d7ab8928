//! The special constants behind the asymptotic predictions, and numeric
//! probes of the reflected-walk limit law: sech-kernel sums evaluated at
//! integer and half-integer levels, converging to √(π/2) and 2G.

use walk_extrema::asymptotics::{
    catalan, constant_table, euler_gamma, sech_probe, sech_probe_second_moment, ProbeScenario,
};

fn main() {
    println!("constant table:");
    for (name, value) in constant_table(1e-14) {
        println!("  {name:<18} = {value:.15}");
    }
    println!(
        "\ncatalan via paired-term acceleration: {:.15}",
        catalan(1e-15)
    );
    println!(
        "euler gamma via harmonic expansion:   {:.15}",
        euler_gamma()
    );

    let target1 = (std::f64::consts::PI / 2.0).sqrt();
    let target2 = 2.0 * catalan(1e-14);
    println!("\nsech probes of the limiting mean (target √(π/2) = {target1:.12}):");
    for t in [0.1, 0.01, 0.001] {
        let strong = sech_probe(ProbeScenario::Strong, t);
        let weak = sech_probe(ProbeScenario::Weak, t);
        println!(
            "  t = {t:<6} integer levels {strong:.12} (err {:+.2e}), \
             half-integer {weak:.12} (err {:+.2e})",
            strong - target1,
            weak - target1
        );
    }
    println!("\nsecond-moment probes (target 2G = {target2:.12}):");
    for t in [0.1, 0.01, 0.001] {
        let strong = sech_probe_second_moment(ProbeScenario::Strong, t);
        let weak = sech_probe_second_moment(ProbeScenario::Weak, t);
        println!(
            "  t = {t:<6} integer levels {strong:.12} (err {:+.2e}), \
             half-integer {weak:.12} (err {:+.2e})",
            strong - target2,
            weak - target2
        );
    }
}
