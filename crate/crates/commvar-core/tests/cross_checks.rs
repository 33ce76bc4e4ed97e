//! Consistency between the diagram combinatorics and the matrix models:
//! the rank read off a Satake diagram must equal the dimension of a maximal
//! abelian subspace of g1 in the corresponding model.

use commvar_core::liealg::{build_model, Family};
use commvar_core::satake;

#[test]
fn bdi_diagram_rank_matches_model() {
    for n in 1..=3usize {
        for m in n.max(3 - n)..=6 {
            if n + m < 3 || n + m > 8 {
                continue;
            }
            let d = satake::bdi_diagram(n, m).unwrap();
            let model = build_model(Family::BDI { n, m }).unwrap();
            assert_eq!(d.rank(), model.rank(), "BDI({n},{m})");
        }
    }
}

#[test]
fn aiii_diagram_rank_matches_model() {
    for p in 1..=3usize {
        for q in p..=5 {
            if p + q < 2 {
                continue;
            }
            let d = satake::aiii_diagram(p, q).unwrap();
            let model = build_model(Family::AIIIGl { n: p, m: q }).unwrap();
            assert_eq!(d.rank(), model.rank(), "AIII({p},{q})");
        }
    }
}

#[test]
fn diii_diagram_rank_matches_model() {
    for l in 3..=6usize {
        let d = satake::diii_diagram(l).unwrap();
        let model = build_model(Family::DIII { n: l }).unwrap();
        assert_eq!(d.rank(), model.rank(), "DIII({l})");
    }
}
