//! Maximum distance reached during one excursion from the origin (a walk
//! with downward bias p < q, conditioned on returning): exact law, moments,
//! and the logarithmic growth of the best of n independent excursions.

use num_traits::ToPrimitive;
use walk_extrema::cycles::CycleLaw;
use walk_extrema::exactnum::rat;
use walk_extrema::walkcore::WalkParams;

fn main() {
    let params = WalkParams::plain(rat(1, 3)).unwrap();
    let law = CycleLaw::new(&params).unwrap();

    println!("cycle-maximum law at p = 1/3 (x = p/q = {}):", law.x());
    for k in 1..=8u32 {
        let exact = law.pmf_exact(k);
        assert_eq!(exact, law.pmf_closed_form(k));
        println!("  P(M = {k}) = {exact} = {:.6}", exact.to_f64().unwrap());
    }
    println!("E(M)  = {:.10}", law.mean(1e-13));
    println!("E(M²) = {:.10}", law.second_moment(1e-13));

    // the mean of the best of n excursions grows like log₂ n
    println!("\nbest of n independent excursions:");
    for e in [4u32, 8, 12, 16] {
        let n = 1u64 << e;
        let mean = law.copies_mean(n, 1e-12);
        println!(
            "  n = 2^{e:<2}: E(max) = {mean:.4}  (E(max) − log₂n = {:.4})",
            mean - e as f64
        );
    }
}
