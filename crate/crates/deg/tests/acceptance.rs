//! Acceptance suite: one test per acceptance criterion, each printing a
//! single PASS line (visible with `--nocapture`) and asserting its runtime
//! budget. Every identity is exact; nothing here is tolerance-based.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;

use deg::campaigns::{run_campaign, CampaignSpec};
use deg::graph::{classify_component, skew_graph, standard_graph, SignedColoredGraph};
use deg::llt::{
    build_llt_graph, reference_pair, straight_tuples, SkewTuple, TupleFilling,
};
use deg::macdonald::{mac_inv, tr_tuples};
use deg::qsym::yamanouchi_schur_counts;
use deg::tableaux::{enumerate_skew_shapes, Partition, Signature, SkewShape, Tableau};
use deg::words::{
    controlled_move, dual_move, enumerate_permutations, inverse, knuth_move, rsk,
    TauWord, Word,
};

fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(partition(outer), partition(inner)).expect("valid skew shape")
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

fn campaign(name: &str, n: usize) -> deg::campaigns::Report {
    let spec = CampaignSpec {
        name: name.into(),
        n,
        jobs: 0,
        output: None,
        force: false,
    };
    let report = run_campaign(&spec).expect("campaign runs");
    assert!(
        report.all_passed(),
        "campaign {name} (n = {n}) reported failures:\n{}",
        report.render_text()
    );
    report
}

fn pass(criterion: &str, started: Instant, budget_secs: u64, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < budget_secs,
        "{criterion} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
    println!(
        "PASS {criterion}: {detail} ({:.2}s, budget {budget_secs}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_1_figure_fidelity() {
    let started = Instant::now();

    // Straight shape (4,3,2); rows bottom to top.
    let t = Tableau::new(
        shape(&[4, 3, 2], &[]),
        vec![vec![1, 2, 5, 7], vec![3, 6, 9], vec![4, 8]],
    )
    .expect("standard tableau");
    assert_eq!(t.content_reading_word().to_string(), "438162957");
    assert_eq!(t.row_reading_word().to_string(), "483691257");
    let sigma: Signature = "+--+-+-+".parse().expect("signature");
    assert_eq!(t.content_reading_word().signature(), sigma);
    assert_eq!(t.row_reading_word().signature(), sigma);

    // Skew shape (4,1,1)/(2): both reading orders give the same word.
    let t = Tableau::new(shape(&[4, 1, 1], &[2]), vec![vec![1, 4], vec![2], vec![3]])
        .expect("standard skew tableau");
    assert_eq!(t.content_reading_word().to_string(), "3214");
    assert_eq!(
        t.content_reading_word().signature(),
        "--+".parse::<Signature>().expect("signature")
    );

    // The nine-cell pair of shapes: a displayed filling word, its
    // signature, and its inversion count.
    let tuple = reference_pair();
    let w = word("453826179");
    let filling = TupleFilling::from_word(&tuple, &w).expect("filling of the pair");
    assert_eq!(filling.shifted_content_word(), w);
    assert_eq!(
        w.signature(),
        "---+++-+".parse::<Signature>().expect("signature")
    );
    assert_eq!(filling.inv(), 3);

    // The pair's bound word, and two controlled moves on another filling.
    let tau = tuple.tau().expect("nonempty tuple");
    assert_eq!(
        tau,
        TauWord::new(vec![4, 5, 6, 6, 6, 7, 8, 9, 9]).expect("bound word")
    );
    let start = word("534826179");
    assert_eq!(
        controlled_move(&start, &tau, 3).expect("move applies"),
        word("542836179")
    );
    assert_eq!(
        controlled_move(&start, &tau, 5).expect("move applies"),
        word("634825179")
    );

    // The ten-cell three-column shape: its displayed ribbon tuple and
    // filling carry arm total 3, adjusted inversions 1, major index 9.
    let mu = shape(&[3, 3, 2, 1, 1], &[]);
    let displayed = SkewTuple::new(vec![
        shape(&[3, 3, 3, 3, 2], &[3, 3, 2, 1]),
        shape(&[1, 1, 1], &[]),
        shape(&[2, 2], &[2]),
    ])
    .expect("three-component tuple");
    let ribbon = tr_tuples(&mu)
        .into_iter()
        .find(|r| r.tuple() == &displayed)
        .expect("the displayed ribbons realize the columns");
    let filling = TupleFilling::from_word(
        &displayed,
        &Word::new(vec![1, 4, 3, 9, 6, 7, 8, 2, 5, 10]).expect("word"),
    )
    .expect("filling of the ribbons");
    assert_eq!(ribbon.a(), 3);
    assert_eq!(ribbon.maj(), 9);
    assert_eq!(mac_inv(&ribbon, &filling), 1);

    pass(
        "criterion 1 (figure fidelity)",
        started,
        1,
        "all five golden examples reproduce byte-exactly",
    );
}

#[test]
fn criterion_2_axiom_suite() {
    let started = Instant::now();
    let axioms = campaign("axioms-std", 7);
    let routes = campaign("theorem-4plus", 7);
    pass(
        "criterion 2 (axiom suite)",
        started,
        300,
        &format!(
            "{} axiom checks and {} route-agreement checks passed, \
             including the loop-family fixture",
            axioms.checks.len(),
            routes.checks.len()
        ),
    );
}

#[test]
fn criterion_3_classification_multiplicities() {
    let started = Instant::now();
    let mut shapes = 0usize;
    let mut components = 0usize;
    for m in 1..=7 {
        for sh in enumerate_skew_shapes(m) {
            let g: SignedColoredGraph = if sh.is_straight() {
                standard_graph(sh.outer()).expect("standard graph builds")
            } else {
                skew_graph(&sh).expect("skew graph builds")
            };
            let mut classified: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for comp in g.components() {
                let sub = g.subgraph(&comp);
                let lambda = classify_component(&sub)
                    .expect("classification applies")
                    .unwrap_or_else(|| {
                        panic!("a component of {sh} matches no standard graph")
                    });
                *classified.entry(lambda).or_default() += 1;
                components += 1;
            }
            let counted = yamanouchi_schur_counts(&sh);
            assert_eq!(
                classified, counted,
                "multiplicities disagree on {sh}: graph classification vs \
                 Yamanouchi reading-word counts"
            );
            shapes += 1;
        }
    }
    pass(
        "criterion 3 (classification multiplicities)",
        started,
        300,
        &format!(
            "{components} components across {shapes} shapes classify to the \
             same multiplicities as the Yamanouchi word counts"
        ),
    );
}

#[test]
fn criterion_4_bounded_graph_sweeps() {
    let started = Instant::now();
    let n5 = campaign("llt-n5", 5);
    let n6 = campaign("llt-n6", 6);
    let gap = campaign("gap-tau", 6);
    pass(
        "criterion 4 (bounded graph sweeps)",
        started,
        1800,
        &format!(
            "five-letter scope: {} checks; six-letter scope with loop-family \
             scan: {} checks; gapped bound words: {} checks",
            n5.checks.len(),
            n6.checks.len(),
            gap.checks.len()
        ),
    );
}

#[test]
fn criterion_5_llt_expansion_corpus() {
    let started = Instant::now();
    let report = campaign("llt-expansion", 7);
    pass(
        "criterion 5 (tuple Schur expansions)",
        started,
        900,
        &format!(
            "{} tuples re-expand exactly with one Yamanouchi vertex per component",
            report.checks.len()
        ),
    );
}

#[test]
fn criterion_6_sharpness() {
    let started = Instant::now();
    let report = campaign("sharpness", 4);
    assert_eq!(report.checks.len(), 4);
    pass(
        "criterion 6 (sharpness)",
        started,
        300,
        "all four coefficient gaps reproduce exactly",
    );
}

#[test]
fn criterion_7_macdonald_expansions() {
    let started = Instant::now();
    let report = campaign("mac-expansion", 7);
    let direct = report
        .checks
        .iter()
        .filter(|c| c.key.starts_with("direct/"))
        .count();
    let conjugate = report.checks.len() - direct;
    pass(
        "criterion 7 (two-variable series)",
        started,
        600,
        &format!(
            "{direct} direct expansions re-expand exactly; {conjugate} \
             conjugate symmetries hold"
        ),
    );
}

#[test]
fn criterion_8_property_batteries() {
    let started = Instant::now();

    // Insertion duality and move commutation on all 720 six-letter words.
    for w in enumerate_permutations(6) {
        let inv = inverse(&w).expect("permutations invert");
        let (p, q) = rsk(&w).expect("insertion");
        let (pi, qi) = rsk(&inv).expect("insertion");
        assert_eq!(q, pi, "recording tableau of {w} is the insertion tableau of its inverse");
        assert_eq!(p, qi);
        for i in 2..=5 {
            let mirrored = inverse(&knuth_move(&inv, i).expect("move")).expect("invert");
            assert_eq!(
                dual_move(&w, i).expect("move"),
                mirrored,
                "dual move {i} on {w} must mirror the Knuth move on the inverse"
            );
            for j in 2..=5 {
                let dk = dual_move(&knuth_move(&w, j).expect("move"), i).expect("move");
                let kd = knuth_move(&dual_move(&w, i).expect("move"), j).expect("move");
                assert_eq!(dk, kd, "moves {i}/{j} must commute on {w}");
            }
        }
    }

    // Inversion constancy on the components of every corpus tuple graph.
    let mut corpus: Vec<SkewTuple> = Vec::new();
    for size in 1..=7 {
        corpus.extend(straight_tuples(2, size));
    }
    for size in 1..=6 {
        corpus.extend(
            straight_tuples(3, size)
                .into_iter()
                .filter(|t| t.diam().map(|d| d <= 3).unwrap_or(false)),
        );
    }
    corpus.push(reference_pair());
    let mut tuple_components = 0usize;
    for tuple in &corpus {
        let g = build_llt_graph(tuple).expect("tuple graph builds");
        for comp in g.components() {
            let invs: Vec<u32> = comp
                .iter()
                .map(|&v| {
                    let w = g.payload(v).as_word().expect("word payload");
                    TupleFilling::from_word(tuple, &w)
                        .expect("vertex word is a filling")
                        .inv()
                })
                .collect();
            assert!(
                invs.windows(2).all(|pair| pair[0] == pair[1]),
                "inversion statistic varies on a component of {tuple}"
            );
            tuple_components += 1;
        }
    }

    // Bound words are counted by the Catalan numbers through length 10.
    let mut catalan: Vec<usize> = vec![1];
    for n in 1..=10usize {
        let next = (0..n).map(|i| catalan[i] * catalan[n - 1 - i]).sum();
        catalan.push(next);
    }
    for n in 1..=10 {
        assert_eq!(
            TauWord::all_of_len(n).len(),
            catalan[n],
            "bound words of length {n}"
        );
    }
    assert_eq!(catalan[10], 16796);

    // Ribbon-tuple diameter is at most 3 exactly when the shape avoids
    // (3,3) and (4), for every shape with at most 7 cells.
    let wide = partition(&[4]);
    let tall_wide = partition(&[3, 3]);
    let mut ribbon_shapes = 0usize;
    for m in 1..=7 {
        for sh in enumerate_skew_shapes(m) {
            let mut diams = std::collections::BTreeSet::new();
            for ribbon in tr_tuples(&sh) {
                diams.insert(ribbon.tuple().diam().expect("nonempty tuple"));
            }
            assert_eq!(diams.len(), 1, "diameter must not depend on the ribbon choice");
            let covered = !sh.contains_translate_of(&tall_wide)
                && !sh.contains_translate_of(&wide);
            let diam = diams.into_iter().next().expect("one diameter");
            assert_eq!(
                diam <= 3,
                covered,
                "{sh} has ribbon diameter {diam} but covering is {covered}"
            );
            ribbon_shapes += 1;
        }
    }

    pass(
        "criterion 8 (property batteries)",
        started,
        300,
        &format!(
            "insertion duality and commutation on 720 words; inversion \
             constancy on {tuple_components} tuple components; Catalan counts \
             through length 10; diameter-covering equivalence on \
             {ribbon_shapes} shapes"
        ),
    );
}
