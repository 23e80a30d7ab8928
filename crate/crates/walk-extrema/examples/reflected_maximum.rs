//! Maximum of a walk reflected at the origin, under both reflection rules:
//! strong (S_j = |S_{j−1} + X_j|) and weak (S_j = max(S_{j−1} + X_j, 0)).
//! Shows the three exact methods agreeing, the strong/weak ordering, and the
//! float route converging to the √(π/2)·√n and 2G·n limits.

use walk_extrema::asymptotics::reflected_prediction;
use walk_extrema::exactnum::rat;
use walk_extrema::walkcore::{dominates, Mode, WalkParams};
use walk_extrema::{reflect_strong, reflect_weak};

fn main() {
    let n = 10;
    let strong = WalkParams::plain(rat(1, 2))
        .unwrap()
        .with_mode(Mode::StrongReflect);
    let weak = strong.with_mode(Mode::WeakReflect);

    // three independent exact methods, identical output
    let s = reflect_strong::max_pmf_recurrence(n, &strong).unwrap();
    assert_eq!(
        s,
        reflect_strong::max_pmf_matrix_method(n, &strong).unwrap()
    );
    assert_eq!(s, reflect_strong::max_pmf_series(n, &strong).unwrap());
    let w = reflect_weak::max_pmf_recurrence(n, &weak).unwrap();
    assert_eq!(w, reflect_weak::max_pmf_matrix_method(n, &weak).unwrap());
    assert_eq!(w, reflect_weak::max_pmf_series(n, &weak).unwrap());

    println!("P(max = a) at n = {n}, fair steps:");
    println!("  a   strong           weak");
    for a in 0..=n as i64 {
        println!("  {a:<3} {:<16} {}", s.prob(a), w.prob(a));
    }
    assert!(
        dominates(&s, &w),
        "strong reflection pushes the walk higher"
    );

    println!("\nlarge-horizon moments (float survival DP) vs predictions:");
    for n in [1_000usize, 10_000] {
        let pred = reflected_prediction(n, &strong).unwrap();
        let ms = reflect_strong::moments_float(n, &strong).unwrap();
        let mw = reflect_weak::moments_float(n, &weak).unwrap();
        println!(
            "n = {n:6}: E(M) strong {:.3}, weak {:.3}, predicted {:.3}; \
             E(M²) strong {:.1}, weak {:.1}, predicted {:.1}",
            ms.mean, mw.mean, pred.mean, ms.second_moment, mw.second_moment, pred.second_moment
        );
    }
}
