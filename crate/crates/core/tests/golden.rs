use norlund_core::theorem::PrimitivePoly;
use norlund_core::{compute_p, m, norlund_table, Integer, PolyZ};

fn pz(cs: &[i64]) -> PolyZ {
    PolyZ::new(cs.iter().map(|&c| Integer::from(c)).collect())
}

#[test]
fn published_primitive_polynomials() {
    let table: [(usize, &[i64]); 8] = [
        (2, &[-1, 3]),
        (3, &[-1]),
        (4, &[2, 5, -30, 15]),
        (5, &[2, 7, -3]),
        (6, &[-16, -42, 91, 315, -315, 63]),
        (7, &[-16, -58, -51, 54, -9]),
        (8, &[144, 404, -540, -2345, -840, 3150, -1260, 135]),
        (9, &[144, 548, 648, -17, -465, 165, -15]),
    ];
    for (n, coeffs) in table {
        assert_eq!(compute_p(n).unwrap().poly, pz(coeffs), "P_{n}");
    }
}

#[test]
fn primitive_polynomials_from_shared_table() {
    // same construction fed from the batch Norlund table
    for b in norlund_table(40).into_iter().skip(2) {
        let n = b.n;
        let m_n = m(n as u64).unwrap();
        let p = norlund_core::theorem::primitive_from_norlund(&b, &m_n).unwrap();
        assert_eq!(p, compute_p(n).unwrap());
        assert!(p.poly.is_primitive());
        assert_eq!(p.poly.degree(), Some(PrimitivePoly::expected_degree(n)));
    }
}

#[test]
fn large_coefficients_exceed_machine_words() {
    let p80 = compute_p(80).unwrap();
    let big = Integer::from(i64::MAX);
    assert!(p80.poly.coeffs().iter().any(|c| c > &big || c < &-big.clone()));
    assert!(p80.poly.is_primitive());
}
