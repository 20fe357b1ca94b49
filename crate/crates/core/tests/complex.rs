use halftwist::arc::{Arc, ArcOracle};
use halftwist::complex::*;
use halftwist::error::Error;

#[test]
fn straightening_adds_a_straight_arc_per_round() {
    let oracle = ArcOracle::default();
    for (n, k) in [(5, 2), (7, 3), (9, 4)] {
        for seed in 0..20 {
            let v = random_vertex(n, k, 8, seed).unwrap();
            let s = straighten(&v).unwrap();
            assert!(s.outer_iterations <= k);
            let report = check_path(&RawPath::from(&s.path), &oracle).unwrap();
            assert!(report.ends_straight);
            assert_eq!(report.edges, s.path.len());
        }
    }
}

#[test]
fn connected_vertices_are_joined_by_checked_paths() {
    let oracle = ArcOracle::default();
    for seed in 0..10 {
        let v = random_vertex(6, 2, 8, 2 * seed).unwrap();
        let w = random_vertex(6, 2, 8, 2 * seed + 1).unwrap();
        let p = connect(&v, &w).unwrap();
        check_path(&RawPath::from(&p), &oracle).unwrap();
        let mut got = p.last().codes().to_vec();
        let mut want = w.codes().to_vec();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn paths_round_trip_through_text() {
    let v = random_vertex(7, 2, 6, 4).unwrap();
    let p = straighten(&v).unwrap().path;
    let text = p.to_string();
    let raw: RawPath = text.parse().unwrap();
    assert_eq!(raw, RawPath::from(&p));
    assert_eq!(v.to_string().parse::<Vertex>().unwrap(), v);
}

#[test]
fn tampered_certificates_are_rejected() {
    let v = random_vertex(7, 2, 6, 9).unwrap();
    let good = RawPath::from(&straighten(&v).unwrap().path);
    let oracle = ArcOracle::default();
    let mut collide = good.clone();
    let last = collide.vertices.last_mut().unwrap();
    last[0] = last[1].clone();
    assert!(check_path(&collide, &oracle).is_err());
    let mut skip = good.clone();
    skip.vertices.push(vec![
        Arc::straight(2, 7).unwrap(),
        Arc::straight(5, 7).unwrap(),
    ]);
    skip.replaced.push(0);
    let jumped = skip.vertices[skip.vertices.len() - 2]
        .iter()
        .all(|a| a.index() != 2 && a.index() != 5);
    if jumped {
        assert!(check_path(&skip, &oracle).is_err());
    }
}

#[test]
fn the_half_full_disk_is_unsupported() {
    let arcs = vec![Arc::straight(1, 4).unwrap(), Arc::straight(3, 4).unwrap()];
    let v = validate_vertex(arcs).unwrap();
    assert!(matches!(
        straighten(&v),
        Err(Error::UnsupportedParameters(_))
    ));
}
