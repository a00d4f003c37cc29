use steiner_core::families::{build, expected_properties, partitions, spiders, triangles_with_legs, FamilySpec, Sdiam3Claim};
use steiner_core::steiner::sdiam;
use steiner_core::ExtendedNat;

fn sdiam3(spec: &str) -> u64 {
    let g = build(&spec.parse().unwrap()).unwrap();
    sdiam(&g, 3).unwrap().finite().unwrap()
}

fn check(spec: &FamilySpec) {
    let g = build(spec).unwrap();
    let want = expected_properties(spec).unwrap();
    assert_eq!(g.order(), want.order, "{spec}");
    assert_eq!(g.edge_count(), want.edge_count, "{spec}");
    assert_eq!(g.max_degree(), want.max_degree, "{spec}");
    assert!(g.is_connected(), "{spec}");
    let measured = sdiam(&g, 3).unwrap().finite().unwrap();
    assert!(want.sdiam3.admits(measured), "{spec}: sdiam3 = {measured}, claimed {:?}", want.sdiam3);
    assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), *spec);
}

#[test]
fn named_examples() {
    assert_eq!(sdiam3("cycle:9"), 6);
    assert_eq!(sdiam3("cycle:3"), 2);
    assert_eq!(sdiam3("complete:6"), 2);
    assert_eq!(sdiam3("path:7"), 6);
    assert_eq!(sdiam3("star:8"), 3);
    assert_eq!(sdiam3("multipartite:2,2,3"), 3);
    assert_eq!(sdiam3("kmm:7,3"), 2);
    assert_eq!(sdiam3("tabc:1,2,3"), 6);
    assert_eq!(sdiam3("c3abc:0,1,2"), 5);
    assert_eq!(sdiam3("layered:3,3,5"), 5);
    let g = build(&"cycle:9".parse().unwrap()).unwrap();
    assert_eq!(sdiam(&g, 2).unwrap(), ExtendedNat::Finite(4));
}

#[test]
fn constructions_match_their_closed_forms() {
    for n in 3..=11 {
        check(&FamilySpec::Path(n));
        check(&FamilySpec::Cycle(n));
        check(&FamilySpec::Star(n));
        check(&FamilySpec::Complete(n));
        for m in 0..=n / 2 {
            check(&FamilySpec::CompleteMinusMatching { n, m });
        }
        for ell in 2..n {
            check(&FamilySpec::Broom { n, ell });
        }
        for spec in spiders(n).iter().chain(&triangles_with_legs(n)) {
            check(spec);
        }
        for parts in partitions(n).into_iter().filter(|p| p.len() >= 2) {
            check(&FamilySpec::CompleteMultipartite(parts));
        }
        if n >= 4 {
            check(&FamilySpec::K2mMinusEdge(n));
        }
        if n >= 5 {
            for r in 1..=n - 4 {
                check(&FamilySpec::TwoCenter { n, r });
            }
            for d in 4..n {
                check(&FamilySpec::layered_for(n, d).unwrap());
            }
        }
        for b in 1..=n {
            for a in 0..=n - b {
                check(&FamilySpec::DoubleBroom { a, b, c: n - a - b });
            }
        }
    }
    for x in 1..=5 {
        for y in 1..=5 {
            check(&FamilySpec::TStar { x, y });
        }
    }
}

#[test]
fn spiders_and_triangles_reach_the_top() {
    for n in 4..=11 {
        for spec in spiders(n).iter().chain(&triangles_with_legs(n)) {
            let g = build(spec).unwrap();
            assert_eq!(sdiam(&g, 3).unwrap(), ExtendedNat::Finite(n as u64 - 1), "{spec}");
            assert_eq!(
                expected_properties(spec).unwrap().sdiam3,
                Sdiam3Claim::Exact(n as u64 - 1),
                "{spec}"
            );
        }
    }
}

#[test]
fn syntax_errors() {
    for bad in ["cycle", "cycle:2", "cycle:x", "tabc:3,2,1", "nope:4", "chorded:6;0-1", "multipartite:3", "path:65"] {
        assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
    }
    assert_eq!(
        "chorded:8;0-4, 2-6".parse::<FamilySpec>().unwrap(),
        FamilySpec::ChordedCycle { n: 8, chords: vec![(0, 4), (2, 6)] }
    );
}
