//! Prints the synthetic calibration tables: ensemble mean and standard
//! deviation of the DFA Hurst estimate over seeded fBm ensembles (DFA-1 and
//! DFA-2, L = 1024) and over symmetric alpha-stable walks with nominal
//! H = 1/alpha (DFA-2, several lengths).
//!
//! Run with `cargo run --release --example calibration_tables`.

use hurstlab::ensemble::{fbm_hurst_samples, levy_hurst_samples};

const MEMBERS: usize = 500;
const SEED: u64 = 20030101;

fn mean_std(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn main() {
    println!("fBm ensembles, L = 1024, {MEMBERS} members");
    println!("{:>6} {:>16} {:>16}", "H", "DFA-1", "DFA-2");
    for i in 2..=8 {
        let h = i as f64 / 10.0;
        let dfa1 = fbm_hurst_samples(h, 1024, MEMBERS, SEED, 1).unwrap();
        let dfa2 = fbm_hurst_samples(h, 1024, MEMBERS, SEED, 2).unwrap();
        let (m1, s1) = mean_std(&dfa1);
        let (m2, s2) = mean_std(&dfa2);
        println!("{h:>6.1} {m1:>8.3} ± {s1:<5.3} {m2:>8.3} ± {s2:<5.3}");
    }

    println!();
    println!("alpha-stable walks, DFA-2, {MEMBERS} members, nominal H = 1/alpha");
    println!("{:>6} {:>16} {:>16} {:>16}", "H", "L=1024", "L=4096", "L=16384");
    for nominal in [0.6, 0.7, 0.8] {
        let alpha = 1.0 / nominal;
        print!("{nominal:>6.1}");
        for length in [1024usize, 4096, 16384] {
            let samples = levy_hurst_samples(alpha, length, MEMBERS, SEED, 2).unwrap();
            let (m, s) = mean_std(&samples);
            print!(" {m:>8.3} ± {s:<5.3}");
        }
        println!();
    }
}
