//! Young-wall combinatorics: patterns, moves, reducedness, orders, ladders,
//! peeling, reduced forms and enumeration.

use c2fock::algebra::weight_sub_alpha;
use c2fock::crystal::maximal_vectors;
use c2fock::youngwall::{
    dominance, enumerate_walls, enumerate_weight_space, ladder, partition_gt, slot_at, wall_total_order, Coordinate, Slot,
};
use c2fock::{Error, GroundState, Index, Weight, YoungWall};

const L0: GroundState = GroundState(Index::ZERO);
const L1: GroundState = GroundState(Index::ONE);
const L2: GroundState = GroundState(Index::TWO);

fn w(s: &str) -> YoungWall {
    s.parse().unwrap()
}

#[test]
fn ground_walls() {
    for g in GroundState::ALL {
        let y = YoungWall::ground(g);
        assert!(y.is_ground() && y.is_reduced());
        assert_eq!(y.weight(), Weight::dominant(g.lambda()));
        assert_eq!(y.to_string(), format!("{g}[]"));
    }
    assert_ne!(YoungWall::ground(L0), YoungWall::ground(L2));
    // The cube colours of the two type-II ground states alternate oppositely.
    assert_ne!(L0.ground_color(0), L2.ground_color(0));
    assert_ne!(L0.ground_color(1), L2.ground_color(1));
}

#[test]
fn pattern_slots() {
    let one = Slot::HalfOne;
    let levels: Vec<Slot> = (0..4).map(|l| slot_at(L1, 0, l)).collect();
    assert_eq!(levels[0], one);
    assert!(matches!(levels[1], Slot::Cube { .. }));
    assert_eq!(&levels[2..], &[one, one]);
    let (Slot::Cube { front: f0, back: b0 }, Slot::Cube { front: f1, back: b1 }) = (slot_at(L1, 0, 1), slot_at(L1, 1, 1)) else {
        panic!("level 1 of Λ1 is a cube");
    };
    assert_eq!((f0, b0), (b1, f1));
    // Over Λ0 the first slot completes the ground half cube.
    assert!(matches!(slot_at(L0, 0, 0), Slot::Cube { .. }));
}

#[test]
fn adding_and_removing_blocks() {
    let g = YoungWall::ground(L1);
    let one = g.add_block(0, Index::ONE).unwrap();
    assert_eq!(one, w("L1[1]"));
    assert_eq!(g.add_block(1, Index::ONE), Err(Error::Inadmissible { column: 1, color: 1 }));
    assert_eq!(one.add_block(0, Index::ZERO).unwrap(), w("L1[2:0]"));
    assert_eq!(one.add_block(0, Index::TWO).unwrap(), w("L1[2:2]"));
    assert_eq!(one.remove_block(0, Index::ONE).unwrap(), g);
    for i in Index::ALL {
        assert!(matches!(g.remove_block(0, i), Err(Error::NotRemovable { .. })));
    }
}

#[test]
fn add_then_remove_is_identity() {
    for g in GroundState::ALL {
        for y in enumerate_walls(g, 6) {
            for k in 0..=y.len() {
                for i in Index::ALL {
                    if let Ok(z) = y.add_block(k, i) {
                        assert!(z.is_proper());
                        assert_eq!(z.remove_block(k, i).unwrap(), y);
                        assert_eq!(z.weight(), weight_sub_alpha(&y.weight(), i, 1));
                    }
                }
            }
        }
    }
}

#[test]
fn literal_parsing_and_diagnostics() {
    for s in ["L1[3,1]", "L2[4:0,4:2,4:0,3]", "L0[4:2,2]", "L1[]"] {
        assert_eq!(w(s).to_string(), s);
    }
    let err = |s: &str| s.parse::<YoungWall>().unwrap_err().to_string();
    assert!(err("L1[1,2]").contains("weak-decrease"));
    assert!(err("L1[2]").contains("half cube"));
    assert!(err("L1[3:0]").contains("drop the color"));
    assert!(err("L3[]").contains("ground state"));
    assert!(err("L1[3,1").contains("']'"));
    // Two full columns of the same height are not proper.
    assert!(err("L1[3,3]").contains("same height"));
}

#[test]
fn reducedness_examples() {
    assert!(!w("L2[6,6]").is_reduced());
    assert!(w("L1[4,3,1]").is_reduced());
    assert!(!w("L0[4:2]").is_reduced());
    assert!(w("L0[4:0]").is_reduced());
    let y = w("L1[8,4,4]");
    assert!(y.is_proper() && !y.is_reduced());
}

#[test]
fn partition_orders() {
    assert!(dominance(&[3, 1], &[4]));
    assert!(!dominance(&[4], &[3, 1]));
    assert!(partition_gt(&[3, 1], &[4]));
    assert!(!partition_gt(&[4], &[3, 1]));
    assert!(dominance(&[2, 2], &[2, 2]) && !partition_gt(&[2, 2], &[2, 2]));
}

#[test]
fn ladders() {
    assert_eq!(ladder(Coordinate { k: 0, l: 3 }).points, vec![Coordinate { k: 0, l: 3 }]);
    let lad = ladder(Coordinate { k: 2, l: 0 });
    let pts: Vec<(usize, u32)> = lad.points.iter().map(|c| (c.k, c.l)).collect();
    assert_eq!(pts, [(2, 0), (1, 2), (0, 4)]);
    let y = w("L1[8,5,1]");
    let blocks = y.blocks_in_ladder(&lad);
    assert!(blocks.iter().all(|b| b.color == Index::ONE));
    // One block at each end and a stacked pair of 1-blocks in the middle.
    assert_eq!(blocks.len(), 4);
}

#[test]
fn peeling() {
    assert_eq!(w("L1[1]").peel().unwrap(), (YoungWall::ground(L1), Index::ONE, 1));
    assert_eq!(w("L1[8,5,1]").peel().unwrap(), (w("L1[7,3]"), Index::ONE, 4));
    assert_eq!(YoungWall::ground(L1).peel(), Err(Error::Ground));
}

#[test]
fn reduced_forms() {
    let y = w("L1[15,7,1]");
    assert!(!y.is_reduced());
    let r = y.reduced_form();
    assert_eq!(r, w("L1[9,7,4,3]"));
    assert_eq!(r.reduced_form(), r);
    assert_eq!(w("L1[3,1]").reduced_form(), w("L1[3,1]"));
    assert_eq!(w("L1[4]").reduced_form(), w("L1[3,1]"));
}

#[test]
fn weight_spaces() {
    assert_eq!(enumerate_weight_space(L1, &Weight::dominant(Index::ONE), true), vec![YoungWall::ground(L1)]);
    let w1 = weight_sub_alpha(&Weight::dominant(Index::ONE), Index::ONE, 1);
    assert_eq!(enumerate_weight_space(L1, &w1, true), vec![w("L1[1]")]);
    // Three reduced walls at Λ1 − δ: one per dimension of that weight space.
    let d = Weight::minus_delta(Index::ONE, 1);
    let reduced = enumerate_weight_space(L1, &d, true);
    assert_eq!(reduced, vec![w("L1[2:2,2:0]"), w("L1[2:0,2:2]"), w("L1[3,1]")]);
    let all = enumerate_weight_space(L1, &d, false);
    assert_eq!(all.len(), reduced.len() + maximal_vectors(L1, 1).len());
}

#[test]
fn enumeration_is_duplicate_free_and_descending() {
    for g in GroundState::ALL {
        let walls = enumerate_walls(g, 8);
        let mut seen = std::collections::BTreeSet::new();
        assert!(walls.iter().all(|y| seen.insert(y.clone())));
        assert!(walls.windows(2).all(|p| wall_total_order(&p[0], &p[1]) == std::cmp::Ordering::Greater));
        assert_eq!(walls.last(), Some(&YoungWall::ground(g)));
        assert!(walls.iter().all(YoungWall::is_proper));
    }
}
