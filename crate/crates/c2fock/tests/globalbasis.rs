//! Peeling, the monomial basis `A(Y)`, closed-form coefficients and the
//! global basis `G(Y)`.

use c2fock::algebra::Weight;
use c2fock::globalbasis::{
    a_basis, addition_chains, chain_sets, g_basis, g_table, peel_sequence, q_closed_form, sigma, BasisKind,
    GlobalBasis,
};
use c2fock::fock::{divided_power_f, f_wall, moves_add};
use c2fock::verify;
use c2fock::youngwall::enumerate_weight_space;
use c2fock::{Error, FockVector, GroundState, Index, LaurentPoly, YoungWall};

const L1: GroundState = GroundState(Index::ONE);
const L2: GroundState = GroundState(Index::TWO);

fn w(s: &str) -> YoungWall {
    s.parse().unwrap()
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn vector(g: GroundState, terms: &[(&str, &str)]) -> FockVector {
    let mut v = FockVector::zero(g);
    for (y, c) in terms {
        v.add_term(w(y), p(c));
    }
    v
}

fn steps(y: &str) -> Vec<(u8, u32)> {
    peel_sequence(&w(y)).unwrap().steps.iter().map(|&(i, r)| (i.value(), r)).collect()
}

#[test]
fn peel_sequences() {
    assert_eq!(steps("L1[1]"), [(1, 1)]);
    assert_eq!(steps("L1[3]"), [(0, 1), (2, 1), (1, 1)]);
    assert_eq!(steps("L1[3,1]"), [(1, 1), (0, 1), (2, 1), (1, 1)]);
    assert_eq!(steps("L1[4,1]"), [(1, 2), (0, 1), (2, 1), (1, 1)]);
    assert_eq!(steps("L1[8,5,1]")[0], (1, 4));
    assert_eq!(peel_sequence(&w("L1[8,4,4]")).unwrap_err(), Error::NotReduced("L1[8,4,4]".into()));
}

#[test]
fn peel_sequence_walls_end_at_ground() {
    let seq = peel_sequence(&w("L2[2,2,2,2]")).unwrap();
    assert_eq!(seq.walls.first(), Some(&w("L2[2,2,2,2]")));
    assert_eq!(seq.walls.last(), Some(&YoungWall::ground(L2)));
    assert_eq!(seq.walls.len(), seq.steps.len() + 1);
    assert!(seq.steps.iter().all(|&(_, r)| r > 0));
}

#[test]
fn monomial_basis_examples() {
    assert_eq!(a_basis(&w("L1[1]")).unwrap().coeffs, FockVector::from_wall(&w("L1[1]")));
    assert_eq!(a_basis(&w("L1[3,1]")).unwrap().coeffs, vector(L1, &[("L1[3,1]", "1"), ("L1[4]", "q")]));
    let a = a_basis(&w("L2[2,2,2,2]")).unwrap();
    assert_eq!(a.kind, BasisKind::A);
    let expected = vector(
        L2,
        &[
            ("L2[2,2,2,2]", "1"),
            ("L2[3,2,2,1]", "q+q^7"),
            ("L2[4:0,2,2]", "q-q^5"),
            ("L2[4:0,3,1]", "q^2+q^4-q^6-q^8"),
            ("L2[5,3]", "1+2*q^2+q^4"),
            ("L2[6,2]", "q+q^3"),
        ],
    );
    assert_eq!(a.coeffs, expected);
}

#[test]
fn global_basis_of_lambda1_up_to_five_blocks() {
    let single = ["L1[1]", "L1[2:0]", "L1[2:2]", "L1[3]", "L1[2:0,1]", "L1[2:2,1]", "L1[3,2:0]", "L1[3,2:2]"];
    for y in single {
        assert_eq!(g_basis(&w(y)).unwrap().coeffs, FockVector::from_wall(&w(y)), "G({y})");
    }
    let two = [
        ("L1[3,1]", "L1[4]", "q"),
        ("L1[2:0,2:2]", "L1[3,1]", "q^2"),
        ("L1[2:2,2:0]", "L1[3,1]", "q^2"),
        ("L1[4,1]", "L1[5]", "q^2"),
        ("L1[2:0,2:2,1]", "L1[4,1]", "q"),
        ("L1[2:2,2:0,1]", "L1[4,1]", "q"),
    ];
    for (y, z, c) in two {
        assert_eq!(g_basis(&w(y)).unwrap().coeffs, vector(L1, &[(y, "1"), (z, c)]), "G({y})");
    }
}

#[test]
fn global_basis_of_the_lambda2_example() {
    let mut solver = GlobalBasis::new();
    let g53 = solver.g(&w("L2[5,3]")).unwrap();
    assert_eq!(g53.coeffs, a_basis(&w("L2[5,3]")).unwrap().coeffs);
    assert_eq!(g53.coeffs, vector(L2, &[("L2[5,3]", "1"), ("L2[6,2]", "q"), ("L2[7,1]", "q^4")]));
    let g = solver.g(&w("L2[2,2,2,2]")).unwrap();
    assert_eq!(g.gamma, vec![(w("L2[5,3]"), LaurentPoly::one())]);
    let expected = vector(
        L2,
        &[
            ("L2[2,2,2,2]", "1"),
            ("L2[3,2,2,1]", "q+q^7"),
            ("L2[4:0,2,2]", "q-q^5"),
            ("L2[4:0,3,1]", "q^2+q^4-q^6-q^8"),
            ("L2[5,3]", "2*q^2+q^4"),
            ("L2[6,2]", "q^3"),
            ("L2[7,1]", "-q^4"),
        ],
    );
    assert_eq!(g.coeffs, expected);
}

#[test]
fn weight_space_tables() {
    let one = Weight { lambda: Index::ONE, k: [0, 1, 0] };
    let t = g_table(L1, &one).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].coeffs, FockVector::from_wall(&w("L1[1]")));
    let t = g_table(L1, &Weight::minus_delta(Index::ONE, 1)).unwrap();
    let heads: Vec<String> = t.iter().map(|e| e.head.to_string()).collect();
    assert_eq!(heads, ["L1[2:2,2:0]", "L1[2:0,2:2]", "L1[3,1]"]);
    // The minimal wall of a weight space has G = A.
    let minimal = enumerate_weight_space(L1, &Weight::minus_delta(Index::ONE, 2), true).pop().unwrap();
    assert_eq!(g_basis(&minimal).unwrap().coeffs, a_basis(&minimal).unwrap().coeffs);
}

#[test]
fn closed_form_single_steps() {
    for y in ["L1[]", "L1[3,1]", "L2[4:0,4:2,4:0,3]"] {
        let y = w(y);
        for i in Index::ALL {
            let f = f_wall(i, &y);
            for m in moves_add(&y, i) {
                assert_eq!(q_closed_form(&y, &m.result, i, 1).unwrap(), f.coeff(&m.result));
            }
        }
    }
    assert!(matches!(q_closed_form(&w("L1[]"), &w("L1[3]"), Index::ONE, 1), Err(Error::NoChain(_))));
}

#[test]
fn closed_form_type_two_double_step() {
    // On walls with two independent 0-slots, Q = Q° · q².
    let (y, v) = c2fock::youngwall::enumerate_walls(L1, 6)
        .into_iter()
        .map(|y| {
            let v = divided_power_f(Index::ZERO, 2, &FockVector::from_wall(&y)).unwrap();
            (y, v)
        })
        .find(|(_, v)| !v.is_zero())
        .expect("some wall has two 0-slots");
    for (z, c) in v.iter() {
        let chains = addition_chains(&y, z, Index::ZERO, 2);
        assert_eq!(chains.len(), 1);
        let q0 = chains[0].iter().fold(LaurentPoly::one(), |acc, s| acc * s.coeff.clone());
        assert_eq!(c, &q0.shift(2));
    }
}

#[test]
fn closed_form_chain_bookkeeping() {
    assert_eq!(sigma(0, 0, 0), 0);
    assert_eq!(sigma(1, 1, 1), 2 + 2 + 1);
    for g in GroundState::ALL {
        for y in c2fock::youngwall::enumerate_walls(g, 6) {
            for r in 1..=3 {
                let v = divided_power_f(Index::ONE, r, &FockVector::from_wall(&y)).unwrap();
                for (z, _) in v.iter() {
                    let chains = addition_chains(&y, z, Index::ONE, r);
                    assert_eq!(chains.len(), 1, "{y} -> {z}");
                    let s = chain_sets(&y, z, &chains[0]);
                    assert_eq!(2 * s.j1.len() + s.j2.len() + s.j3.len(), r as usize, "{y} -> {z}");
                    assert!(chains[0].windows(2).all(|p| p[1].column <= p[0].column));
                }
            }
        }
    }
}

#[test]
fn closed_form_matches_divided_powers() {
    for g in GroundState::ALL {
        let n = verify::closed_form_suite(g, 8, 3).unwrap();
        assert!(n >= 100, "{g}: only {n} coefficients");
    }
}

#[test]
fn global_basis_properties() {
    for g in GroundState::ALL {
        verify::gb_suite(g, 8).unwrap();
        verify::peel_unit_suite(g, 8).unwrap();
        verify::reduced_form_suite(g, 8).unwrap();
    }
}
