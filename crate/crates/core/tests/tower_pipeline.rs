use quadgal_core::tower::{build_g1_tower, build_g2_tower, first_realizable_g2_triple};
use std::time::Instant;

#[test]
fn g1_tower_over_2_7() {
    let t0 = Instant::now();
    let rep = build_g1_tower(2, 7, 50).expect("G1 tower builds");
    eprintln!("G1 tower in {:?}", t0.elapsed());
    eprintln!("gamma = {}, d = {}", rep.gamma.display, rep.d);
    eprintln!("radicands: {:?}", rep.radicands.iter().map(|r| &r.display).collect::<Vec<_>>());
    assert_eq!(rep.degree_e, 4);
    assert_eq!(rep.degree_k, 16);
    assert_eq!(rep.degree_l, 32);
    assert_eq!(rep.gal_k.order, 16);
    assert_eq!(rep.gal_k.isomorphic_to, "DwC");
    assert_eq!(rep.gal_l.order, 32);
    assert_eq!(rep.gal_l.isomorphic_to, "G1");
    assert_eq!(rep.galois_closure_checks, 16);
    assert!(rep.minus_a_nonrigid);
    assert!(rep.e_sqrt_gamma_not_galois);
    eprintln!("quartics: {:?}", rep.cyclic_quartics);
}

#[test]
fn g2_tower_over_first_triple() {
    let triple = first_realizable_g2_triple().unwrap();
    eprintln!("first realizable triple: {triple:?}");
    assert_eq!(triple, (2, -1, 7));
    let t0 = Instant::now();
    let rep = build_g2_tower(triple.0, triple.1, triple.2, 50).expect("G2 tower builds");
    eprintln!("G2 tower in {:?}", t0.elapsed());
    eprintln!("delta = {}, d = {}", rep.delta.display, rep.d);
    assert_eq!(rep.degree_k, 32);
    assert_eq!(rep.degree_l, 64);
    assert_eq!(rep.gal_k.isomorphic_to, "DwD");
    assert_eq!(rep.gal_l.isomorphic_to, "G2");
    assert_eq!(rep.sqrt_a_fixer_in_l.isomorphic_to, "DD");
    assert_eq!(rep.sqrt_a_fixer_in_k.isomorphic_to, "E16");
    assert!(rep.abelian_16_is_sqrt_a_fixer);
    assert_eq!(rep.galois_closure_checks, 32);
    assert!(rep.minus_a_nonrigid);
}
