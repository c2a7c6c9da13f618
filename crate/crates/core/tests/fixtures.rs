//! Hand-made labelings of specific family members, listed per vertex in
//! canonical numbering.

use perrin_cordial::io::export_dot;
use perrin_cordial::labeling::{is_cordial, is_valid, tally, tally_labeling, to_parity};
use perrin_cordial::perrin::{even_count, odd_count, perrin_parity};
use perrin_cordial::{FamilySpec, ParityPattern, PerrinLabeling};

fn check(spec: FamilySpec, indices: &[usize]) -> (PerrinLabeling, i64) {
    let g = spec.generate().unwrap();
    let f = PerrinLabeling::from_indices(g.vertex_count(), indices);
    assert!(is_valid(&g, &f), "{spec}");
    let t = tally_labeling(&g, &f).unwrap();
    assert!(is_cordial(&t), "{spec}: {t:?}");
    (f, t.epsilon())
}

#[test]
fn wheel_with_thirteen_spokes() {
    let (_, eps) = check(
        FamilySpec::Wheel(13),
        &[0, 2, 3, 5, 9, 1, 10, 4, 12, 6, 7, 8, 11, 13],
    );
    assert_eq!(eps, 0);
}

#[test]
fn triangular_snake_four() {
    let spec = FamilySpec::TriangularSnake(4);
    let (f, eps) = check(spec, &[1, 4, 6, 3, 9, 0, 2, 7, 5]);
    assert_eq!(eps, 0);
    assert_eq!(f.skipped_index(), Some(8));
    let dot = export_dot(&spec.generate().unwrap(), &f).unwrap();
    let red = dot
        .lines()
        .filter(|l| l.contains("--") && l.contains("color=red"))
        .count();
    assert_eq!(red, 6);
}

#[test]
fn friendship_four() {
    let (_, eps) = check(FamilySpec::Friendship(4), &[1, 0, 5, 3, 2, 9, 7, 6, 4]);
    assert_eq!(eps, 0);
}

// Internal v1..v4, then the pendants of v3, then those of v4.
const JELLYFISH_7_7: [usize; 18] = [2, 1, 4, 0, 12, 16, 14, 15, 18, 7, 13, 3, 8, 7, 6, 9, 5, 11];

#[test]
fn jellyfish_seven_seven_sample_reuses_an_index() {
    let g = FamilySpec::Jellyfish(7, 7).generate().unwrap();
    let f = PerrinLabeling::from_indices(18, &JELLYFISH_7_7);
    assert!(!is_valid(&g, &f));
    let err = f.validate().unwrap_err().to_string();
    assert!(err.contains("index 7 used twice"), "{err}");
    let used: std::collections::BTreeSet<usize> = JELLYFISH_7_7.iter().copied().collect();
    let missing: Vec<usize> = (0..=18).filter(|i| !used.contains(i)).collect();
    assert_eq!(missing, vec![10, 17]);
}

#[test]
fn jellyfish_seven_seven_sample_pattern_is_not_realizable() {
    // The intended parities balance the edges, but need more odd indices
    // than {0..=18} holds.
    let g = FamilySpec::Jellyfish(7, 7).generate().unwrap();
    let pattern = ParityPattern::new(JELLYFISH_7_7.iter().map(|&i| perrin_parity(i)).collect());
    assert_eq!(tally(&g, &pattern).unwrap().epsilon(), 1);
    let odd_vertices = pattern.len() - pattern.even_vertex_count();
    assert_eq!(odd_vertices, 11);
    assert_eq!(odd_count(18), 10);
    assert_eq!(even_count(18), 9);
    assert!(to_parity(&PerrinLabeling::from_indices(18, &JELLYFISH_7_7)).is_err());
}
