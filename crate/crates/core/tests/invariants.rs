use std::collections::BTreeSet;

use proptest::prelude::*;
use zkgenus_core::complex::{build_real_mac, CubicalCell, SimplicialComplex};
use zkgenus_core::embedding::{hypercube_graph, one_skeleton, rotation_from_complex, trace_faces};
use zkgenus_core::necklace::{enumerate_necklaces, necklace_total};
use zkgenus_core::quotient::{polygon_quotient, CyclicAction};
use zkgenus_core::surface::{as_face_complex, certify, triangulate, Witness};
use zkgenus_core::{verify_inclusion, FaceComplex};

fn mac(n: usize) -> zkgenus_core::CubicalComplex {
    build_real_mac(&SimplicialComplex::polygon_boundary(n).unwrap()).unwrap()
}

/// Cell counts straight from the definition: a d-cell is a d-face of the
/// polygon plus a choice of 0/1 on the other n - d coordinates.
#[test]
fn cell_counts_for_n_up_to_16() {
    for n in 3..=16usize {
        let c = mac(n);
        let free = |d: usize| 1usize << (n - d);
        assert_eq!(c.count(0), free(0), "n={n}");
        assert_eq!(c.count(1), n * free(1), "n={n}");
        assert_eq!(c.count(2), n * free(2), "n={n}");
        assert_eq!(c.euler_characteristic(), (4 - n as i64) << (n - 2), "n={n}");
    }
}

#[test]
fn every_vertex_link_is_an_n_gon() {
    for n in 3..=9 {
        let f = as_face_complex(&mac(n)).unwrap();
        let mut corners = vec![0usize; f.vertex_count()];
        for walk in &f.faces {
            for &s in walk {
                corners[f.tail(s)] += 1;
            }
        }
        assert!(corners.iter().all(|&k| k == n), "n={n}");
    }
}

#[test]
fn discrete_points_give_the_hypercube_graph() {
    for n in 3..=8 {
        let points = SimplicialComplex::discrete_points(n).unwrap();
        let c = build_real_mac(&points).unwrap();
        assert_eq!(c.top_dim(), 1);
        let skel = one_skeleton(&c);
        let q = hypercube_graph(n).unwrap();
        let key = |g: &zkgenus_core::Graph| {
            g.edges()
                .iter()
                .map(|&(a, b)| (a.min(b), a.max(b)))
                .collect::<BTreeSet<_>>()
        };
        assert_eq!(skel.vertex_count(), q.vertex_count());
        assert_eq!(key(&skel), key(&q), "n={n}");
        let poly = SimplicialComplex::polygon_boundary(n).unwrap();
        assert!(verify_inclusion(&points, &poly).unwrap());
    }
}

#[test]
fn triangulation_keeps_the_surface() {
    for n in 3..=8 {
        let f = as_face_complex(&mac(n)).unwrap();
        let t = triangulate(&f).unwrap();
        assert_eq!(t.face_count(), 2 * f.face_count());
        assert_eq!(t.edge_count(), f.edge_count() + f.face_count());
        let (a, b) = (certify(&f), certify(&t));
        assert!(b.is_surface());
        assert_eq!(a.genus, b.genus, "n={n}");
    }
}

#[test]
fn quotient_triangulation_agrees() {
    for n in 3..=9 {
        let q = polygon_quotient(n).unwrap().to_face_complex().unwrap();
        assert_eq!(
            certify(&q).genus,
            certify(&triangulate(&q).unwrap()).genus,
            "n={n}"
        );
    }
}

#[test]
fn reversed_rotation_traces_the_same_genus() {
    for n in 3..=8 {
        let c = mac(n);
        let g = hypercube_graph(n).unwrap();
        let r = rotation_from_complex(&c).unwrap();
        let a = trace_faces(&g, &r).unwrap();
        let b = trace_faces(&g, &r.reversed()).unwrap();
        assert_eq!(a.face_count(), b.face_count());
        assert_eq!(a.genus, b.genus);
    }
}

#[test]
fn face_complex_json_round_trip() {
    let f = as_face_complex(&mac(5)).unwrap();
    let back = FaceComplex::from_json(&f.to_json().unwrap()).unwrap();
    assert_eq!(f, back);
    let c = mac(5);
    let back = zkgenus_core::CubicalComplex::from_json(&c.to_json().unwrap()).unwrap();
    assert_eq!(back.cells(), c.cells());
}

#[test]
fn enumeration_is_the_orbit_space_of_the_vertex_action() {
    for n in 3..=10 {
        let q = polygon_quotient(n).unwrap();
        let labels: Vec<String> = (0..q.counts().0).map(|v| q.vertex_label(v)).collect();
        let reps: Vec<String> = enumerate_necklaces(n, 16)
            .unwrap()
            .into_iter()
            .map(|c| c.representative)
            .collect();
        assert_eq!(labels, reps, "n={n}");
        assert_eq!(labels.len() as u64, necklace_total(2, n as u64).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn action_commutes_with_boundary(n in 3usize..=12, idx in any::<prop::sample::Index>(), k in 0usize..12) {
        let c = mac(n);
        let a = CyclicAction::new(n).unwrap();
        let cell = c.cell(idx.index(c.len()));
        let image = a.rotate(cell, k);
        prop_assert!(c.contains(&image));
        let lhs: BTreeSet<CubicalCell> = image.boundary().collect();
        let rhs: BTreeSet<CubicalCell> = cell.boundary().map(|b| a.rotate(b, k)).collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.rotate(image, n - k % n), cell);
    }

    #[test]
    fn boundary_of_boundary_cancels(n in 3usize..=12, idx in any::<prop::sample::Index>()) {
        let c = mac(n);
        let squares = c.dim_range(2);
        let sq = squares.start + idx.index(squares.len());
        let mut parity = std::collections::BTreeMap::<usize, u8>::new();
        for &e in c.boundary_of(sq) {
            for &v in c.boundary_of(e) {
                *parity.entry(v).or_default() ^= 1;
            }
        }
        prop_assert!(parity.values().all(|&p| p == 0));
    }

    #[test]
    fn orientation_witness_checks_out(n in 3usize..=9, flip in any::<prop::sample::Index>()) {
        let mut f = as_face_complex(&mac(n)).unwrap();
        let i = flip.index(f.face_count());
        let before = match certify(&f).witness { Witness::Orientation(o) => o, _ => unreachable!() };
        f.faces[i] = f.faces[i].iter().rev().map(|s| s.reversed()).collect();
        let cert = certify(&f);
        prop_assert!(cert.recheck(&f));
        let Witness::Orientation(after) = cert.witness else { unreachable!() };
        // Reversing one walk flips that face relative to all the others.
        let rel = |o: &[bool]| o.iter().map(|&x| x == o[0]).collect::<Vec<_>>();
        let mut expect = rel(&before);
        if i != 0 {
            expect[i] = !expect[i];
        } else {
            expect = expect.iter().enumerate().map(|(j, &x)| if j == 0 { x } else { !x }).collect();
        }
        prop_assert_eq!(rel(&after), expect);
    }
}
