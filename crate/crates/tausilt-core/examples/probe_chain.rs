use std::sync::Arc;
use std::time::Instant;
use tausilt_core::algebra::compute_basis;
use tausilt_core::catalog;
use tausilt_core::mutation::{left_mutation, SiltingObject};
use tausilt_core::hom::is_presilting;

fn main() {
    for (name, pres) in [("Delta1", catalog::delta1()), ("Omega1", catalog::omega1())] {
        let b = Arc::new(compute_basis(&pres).unwrap());
        let mut t = SiltingObject::initial(&b).unwrap();
        let start = Instant::now();
        for step in 0..19 {
            let slot = if step % 2 == 0 { 1 } else { 0 };
            let s = Instant::now();
            let next = left_mutation(&t, slot).unwrap().object.unwrap();
            let ps = Instant::now();
            assert!(is_presilting(&[&next.summands[0], &next.summands[1]]).unwrap());
            println!(
                "{name} step {:2}: g={:?} mutate={:?} presilt={:?}",
                step + 1,
                next.g_vectors().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                ps - s,
                ps.elapsed()
            );
            t = next;
        }
        println!("{name} total: {:?}", start.elapsed());
    }
}
