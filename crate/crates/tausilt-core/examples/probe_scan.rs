use std::time::Instant;
use tausilt_core::scan::{bulk_options, scan_rad_cube_zero};

fn main() {
    let t0 = Instant::now();
    let mut n = 0usize;
    let report = scan_rad_cube_zero(2, 2, &bulk_options(), |_| {
        n += 1;
        if n % 5000 == 0 {
            eprintln!("{n} classified, {:?}", t0.elapsed());
        }
    })
    .unwrap();
    println!(
        "raw={} canonical={} finite={} infinite={} disagreements={} in {:?}",
        report.raw_count,
        report.canonical_count,
        report.finite,
        report.infinite,
        report.disagreements.len(),
        t0.elapsed()
    );
    for d in report.disagreements.iter().take(5) {
        println!("DISAGREE: {d}");
    }
}
