use oddcore::constructions::{bc_construction, g_construction};
use oddcore::parity::OddCycleFamily;
use oddcore::verifier::*;
use oddcore::VertexSet;

const LIMIT: u64 = 100_000_000;

#[test]
fn main_theorem_passes_on_every_g_fixture() {
    for r in 3..=5 {
        for n in (2 * (r + 1)..=60).step_by(2 * (r + 1)) {
            let g = g_construction(r, n).unwrap().graph;
            let params = TheoremParams::new(r, 3 * r + 4, n).unwrap();
            let rep = check_theorem_main(&g, &params, LIMIT).unwrap();
            assert_eq!(rep.conclusion, Conclusion::Pass, "r={r} n={n} {rep:?}");
            assert_eq!(rep.tier, Tier::BelowRegime);
            let rec = recognize_g_construction(&g, r).unwrap();
            rec.validate(&g).unwrap();
        }
    }
}

#[test]
fn structure_lemma_case_one_on_fixtures() {
    let mut cases = Vec::new();
    for r in 1..=5 {
        for n in (2 * (r + 1)..=60).step_by(2 * (r + 1)) {
            cases.push((r, g_construction(r, n).unwrap()));
        }
    }
    for p in 1..=3 {
        for n in (2 * (2 * p + 1)..=60).step_by(2 * (2 * p + 1)) {
            cases.push((2 * p, bc_construction(p, n).unwrap()));
        }
    }
    for (r, c) in cases {
        let h = VertexSet::from(c.selected.clone());
        if h.len() < 3 {
            continue;
        }
        let params = TheoremParams::new(r, 13, c.graph.n()).unwrap();
        let rep = check_structure_lemma(&c.graph, &h, &params, LIMIT).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Pass, "r={r} n={} {rep:?}", c.graph.n());
        assert_eq!(rep.witnesses["case"], "i");
    }
}

#[test]
fn main2_passes_on_bc_fixtures() {
    for p in 1..=2 {
        let k = 4 * p + 1;
        let family = OddCycleFamily::new((3..=2 * k + 1).step_by(2).filter(|&l| l != 2 * p + 1)).unwrap();
        assert_eq!(family.p(), p);
        for n in (2 * (2 * p + 1)..=40).step_by(2 * (2 * p + 1)) {
            let g = bc_construction(p, n).unwrap().graph;
            let rep = check_theorem_main2(&g, &family, LIMIT).unwrap();
            assert_eq!(rep.conclusion, Conclusion::Pass, "p={p} n={n} {rep:?}");
        }
    }
}

#[test]
fn delta_chi_is_monotone_for_triangles() {
    let fam = OddCycleFamily::new([3]).unwrap();
    let values: Vec<f64> = (5..=7)
        .map(|n| {
            let r = exact_delta_chi(&fam, 2, n).unwrap();
            let v = r.value.unwrap();
            v.num as f64 / v.den as f64
        })
        .collect();
    assert!(values.windows(2).all(|w| w[1] <= w[0]), "{values:?}");
}

#[test]
fn delta_chi_eight_vertices() {
    // the Möbius ladder on 8 vertices: triangle-free, cubic, 3-chromatic
    let fam = OddCycleFamily::new([3]).unwrap();
    let r = exact_delta_chi(&fam, 2, 8).unwrap();
    assert_eq!(r.value.unwrap().to_string(), "3/8");
}
