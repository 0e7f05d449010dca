use std::sync::Arc;
use tausilt_core::algebra::compute_basis;
use tausilt_core::catalog;
use tausilt_core::endo::{endomorphism_table, StructureTable};
use tausilt_core::iso::{is_isomorphic, IsoOptions};
use tausilt_core::mutation::{left_mutation, SiltingObject};

fn main() {
    let cases: Vec<(&str, tausilt_core::AlgebraPresentation, usize, tausilt_core::AlgebraPresentation)> = vec![
        ("End(mu2-(Delta1)) ~ Delta1^op", catalog::delta1(), 1, catalog::delta1().opposite()),
        ("End(mu2-(Omega2)) ~ Omega2^op", catalog::omega2(), 1, catalog::omega2().opposite()),
        ("End(mu2-(Omega3)) ~ Delta2", catalog::omega3(), 1, catalog::delta2()),
        ("End(mu2-(Omega1)) ~ Omega1^op", catalog::omega1(), 1, catalog::omega1().opposite()),
        ("End(mu1-(Omega1^op)) ~ Omega1", catalog::omega1().opposite(), 0, catalog::omega1()),
        ("End(mu2-(Omega4)) ~ Delta4", catalog::omega4(), 1, catalog::delta4()),
        ("End(mu1-(Omega4^op)) ~ Omega5", catalog::omega4().opposite(), 0, catalog::omega5()),
    ];
    for (name, pres, slot, target) in cases {
        let t0 = std::time::Instant::now();
        let b = Arc::new(compute_basis(&pres).unwrap());
        let t = SiltingObject::initial(&b).unwrap();
        let t1 = left_mutation(&t, slot).unwrap().object.unwrap();
        let e = endomorphism_table(&t1).unwrap();
        let bt = StructureTable::from_algebra(&compute_basis(&target).unwrap());
        match is_isomorphic(&e.table, &bt, &IsoOptions::default()) {
            Ok(Some(w)) => println!("{name}: WITNESS residue={} vmap={:?} dim={} ({:?})", w.residue, w.vertex_map, e.dimension, t0.elapsed()),
            Ok(None) => println!("{name}: NO WITNESS FOUND dim={} endo_arrows={:?} ({:?})", e.dimension, e.arrow_counts, t0.elapsed()),
            Err(err) => println!("{name}: ERROR {err}"),
        }
    }
}
