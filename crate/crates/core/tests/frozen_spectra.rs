//! Full element-order census for every group in the suite, pinned to
//! values computed independently (by hand for the small groups, from the
//! standard character-theory / conjugacy-class data for the simple ones).
//! A regression here means the engine changed what it counts — these
//! numbers are not allowed to move.

mod common;

use common::build;

type Census = &'static [(u64, u64)];

fn assert_census(spec: &str, order: u64, expected: Census) {
    let entry = build(spec);
    assert_eq!(entry.group.order(), order, "{spec}: order");
    let got: Vec<(u64, u64)> = entry.spec.counts().clone().into_iter().collect();
    assert_eq!(got, expected, "{spec}: spectrum");
    assert_eq!(entry.spec.total(), order, "{spec}: census totality");
}

#[test]
fn cyclic() {
    let table: &[(&str, u64, Census)] = &[
        ("C1", 1, &[(1, 1)]),
        ("C2", 2, &[(1, 1), (2, 1)]),
        ("C3", 3, &[(1, 1), (3, 2)]),
        ("C4", 4, &[(1, 1), (2, 1), (4, 2)]),
        ("C5", 5, &[(1, 1), (5, 4)]),
        ("C6", 6, &[(1, 1), (2, 1), (3, 2), (6, 2)]),
        ("C7", 7, &[(1, 1), (7, 6)]),
        ("C8", 8, &[(1, 1), (2, 1), (4, 2), (8, 4)]),
        ("C9", 9, &[(1, 1), (3, 2), (9, 6)]),
        ("C10", 10, &[(1, 1), (2, 1), (5, 4), (10, 4)]),
        ("C12", 12, &[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)]),
        ("C14", 14, &[(1, 1), (2, 1), (7, 6), (14, 6)]),
        ("C15", 15, &[(1, 1), (3, 2), (5, 4), (15, 8)]),
        ("C20", 20, &[(1, 1), (2, 1), (4, 2), (5, 4), (10, 4), (20, 8)]),
        (
            "C30",
            30,
            &[(1, 1), (2, 1), (3, 2), (5, 4), (6, 2), (10, 4), (15, 8), (30, 8)],
        ),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn dihedral() {
    let table: &[(&str, u64, Census)] = &[
        ("D3", 6, &[(1, 1), (2, 3), (3, 2)]),
        ("D4", 8, &[(1, 1), (2, 5), (4, 2)]),
        ("D5", 10, &[(1, 1), (2, 5), (5, 4)]),
        ("D6", 12, &[(1, 1), (2, 7), (3, 2), (6, 2)]),
        ("D7", 14, &[(1, 1), (2, 7), (7, 6)]),
        ("D8", 16, &[(1, 1), (2, 9), (4, 2), (8, 4)]),
        ("D10", 20, &[(1, 1), (2, 11), (5, 4), (10, 4)]),
        ("D12", 24, &[(1, 1), (2, 13), (3, 2), (4, 2), (6, 2), (12, 4)]),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn symmetric_and_alternating() {
    let table: &[(&str, u64, Census)] = &[
        ("S3", 6, &[(1, 1), (2, 3), (3, 2)]),
        ("S4", 24, &[(1, 1), (2, 9), (3, 8), (4, 6)]),
        ("S5", 120, &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)]),
        ("A4", 12, &[(1, 1), (2, 3), (3, 8)]),
        ("A5", 60, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
        ("A6", 360, &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)]),
        (
            "A7",
            2520,
            &[(1, 1), (2, 105), (3, 350), (4, 630), (5, 504), (6, 210), (7, 720)],
        ),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn psl2() {
    let table: &[(&str, u64, Census)] = &[
        ("L2(2)", 6, &[(1, 1), (2, 3), (3, 2)]),
        ("L2(3)", 12, &[(1, 1), (2, 3), (3, 8)]),
        ("L2(4)", 60, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
        ("L2(5)", 60, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
        ("L2(7)", 168, &[(1, 1), (2, 21), (3, 56), (4, 42), (7, 48)]),
        ("L2(8)", 504, &[(1, 1), (2, 63), (3, 56), (7, 216), (9, 168)]),
        ("L2(9)", 360, &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)]),
        (
            "L2(11)",
            660,
            &[(1, 1), (2, 55), (3, 110), (5, 264), (6, 110), (11, 120)],
        ),
        (
            "L2(13)",
            1092,
            &[(1, 1), (2, 91), (3, 182), (6, 182), (7, 468), (13, 168)],
        ),
        (
            "L2(17)",
            2448,
            &[(1, 1), (2, 153), (3, 272), (4, 306), (8, 612), (9, 816), (17, 288)],
        ),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn psl2_coincidences() {
    // L2(4) = L2(5) = A5 and L2(9) = A6 as abstract groups; the spectra
    // must coincide even though the permutation carriers differ.
    let a5 = build("A5");
    for other in ["L2(4)", "L2(5)"] {
        assert_eq!(build(other).spec.counts(), a5.spec.counts(), "{other} vs A5");
    }
    assert_eq!(build("L2(9)").spec.counts(), build("A6").spec.counts());
}

#[test]
fn suzuki_matrix_and_file_agree() {
    let census: Census = &[(1, 1), (2, 455), (4, 3640), (5, 5824), (7, 12480), (13, 6720)];
    assert_census("Sz(8)", 29120, census);
    // The same group given by permutation generators on 65 points.
    assert_census("file:sz8.gens", 29120, census);
}

#[test]
fn simple_file_backed() {
    let table: &[(&str, u64, Census)] = &[
        (
            "L3(3)",
            5616,
            &[(1, 1), (2, 117), (3, 728), (4, 702), (6, 936), (8, 1404), (13, 1728)],
        ),
        (
            "L3(4)",
            20160,
            &[(1, 1), (2, 315), (3, 2240), (4, 3780), (5, 8064), (7, 5760)],
        ),
        (
            "U3(3)",
            6048,
            &[(1, 1), (2, 63), (3, 728), (4, 504), (6, 504), (7, 1728), (8, 1512), (12, 1008)],
        ),
        (
            "U4(2)",
            25920,
            &[(1, 1), (2, 315), (3, 800), (4, 3780), (5, 5184), (6, 5760), (9, 5760), (12, 4320)],
        ),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn order_40320_pair() {
    // 2^4:A7 and L3(4):2 — same order, same census, not isomorphic.
    let census: Census = &[
        (1, 1),
        (2, 435),
        (3, 2240),
        (4, 6300),
        (5, 8064),
        (6, 6720),
        (7, 5760),
        (8, 5040),
        (14, 5760),
    ];
    assert_census("file:thompson_24a7.gens", 40320, census);
    assert_census("file:thompson_l34_2.gens", 40320, census);
}

#[test]
fn small_file_backed() {
    let table: &[(&str, u64, Census)] = &[
        ("file:q8.gens", 8, &[(1, 1), (2, 1), (4, 6)]),
        ("file:q16.gens", 16, &[(1, 1), (2, 1), (4, 10), (8, 4)]),
        ("file:dic3.gens", 12, &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]),
        ("file:sl2_3.gens", 24, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]),
        ("file:f20.gens", 20, &[(1, 1), (2, 5), (4, 10), (5, 4)]),
        ("file:f21.gens", 21, &[(1, 1), (3, 14), (7, 6)]),
        ("file:c2xc4.gens", 8, &[(1, 1), (2, 3), (4, 4)]),
        ("file:c2xc2xc2.gens", 8, &[(1, 1), (2, 7)]),
        ("file:c3xc3.gens", 9, &[(1, 1), (3, 8)]),
        ("file:c2xc6.gens", 12, &[(1, 1), (2, 3), (3, 2), (6, 6)]),
        ("file:c4xc4.gens", 16, &[(1, 1), (2, 3), (4, 12)]),
    ];
    for &(spec, order, census) in table {
        assert_census(spec, order, census);
    }
}

#[test]
fn nse_values() {
    // nse is the sorted set of census values; spot-check the headline ones.
    assert_eq!(build("A5").spec.nse(), vec![1, 15, 20, 24]);
    assert_eq!(build("L2(7)").spec.nse(), vec![1, 21, 42, 48, 56]);
    assert_eq!(build("L2(8)").spec.nse(), vec![1, 56, 63, 168, 216]);
    assert_eq!(build("file:c2xc6.gens").spec.nse(), vec![1, 2, 3, 6]);
    assert_eq!(build("D6").spec.nse(), vec![1, 2, 7]);
}
