mod common;

use common::*;
use tcone::semigroup::enumerate_semigroups;

#[test]
fn enumeration_matches_brute_force() {
    for d in 2..=4 {
        assert_eq!(enumerate_semigroups(d, 18), semigroups_brute(d, 18), "d = {d}");
    }
}

#[test]
fn standard_bases_small() {
    for d in 2..=4 {
        for gens in enumerate_semigroups(d, 16) {
            check_standard_basis(&gens).unwrap();
        }
    }
}

#[test]
fn standard_basis_examples() {
    for gens in [&[5, 6, 13][..], &[11, 14, 21], &[8, 12, 14, 21], &[8, 10, 12, 15], &[30, 33, 44, 45], &[9, 10, 11, 23]] {
        check_standard_basis(gens).unwrap();
    }
}

#[test]
fn betti_oracle_known_values() {
    assert_eq!(betti_degrees(&[5, 6, 13]), vec![18, 25, 26]);
    assert_eq!(betti_degrees(&[2, 3]), vec![6]);
    assert_eq!(frobenius(&[11, 14, 21]), 73);
}

#[test]
fn colon_small_box() {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                for bp in 0..b {
                    for cp in 0..c {
                        if bp + cp == 0 {
                            continue;
                        }
                        let ms = [[0, 0, 0], [1, 1, 0], [a, 0, 1], [0, b, c], [a + 1, 1, 1]];
                        check_colon(a, b, c, bp, cp, &ms).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn type_examples() {
    // complete intersection
    assert_eq!(check_type(3, 4, 4, 1, 1, &[]).unwrap(), Some(1));
    // five-generated Gorenstein pattern with alpha = 1
    assert_eq!(check_type(3, 4, 4, 1, 1, &[[2, 3, 0], [2, 0, 3]]).unwrap(), Some(1));
    // different x-exponents on the two mixed monomials
    let t = check_type(3, 4, 4, 1, 1, &[[2, 3, 0], [1, 0, 3]]).unwrap().unwrap();
    assert!(t >= 2);
    assert_eq!(check_monomial_type(&[[2, 0, 0], [0, 3, 0], [0, 0, 2]]).unwrap(), 1);
    assert_eq!(check_monomial_type(&[[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0]]).unwrap(), 2);
}
