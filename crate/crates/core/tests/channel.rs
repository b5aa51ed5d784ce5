use convdistill::{
    ChannelKind, ChannelModel, DecoderKind, GeneratorSet, LaurentPoly, Pauli, PauliVec, Simulator,
};

fn forney() -> GeneratorSet {
    let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
    GeneratorSet::unassisted(vec![
        PauliVec::new(
            vec![p("0"), p("D"), p("D")],
            vec![p("1+D"), p("1"), p("1+D")],
        )
        .unwrap(),
        PauliVec::new(
            vec![p("1+D"), p("1+D"), p("1")],
            vec![p("0"), p("D"), p("D")],
        )
        .unwrap(),
    ])
    .unwrap()
}

/// Letter counts `[I, X, Y, Z]` over at least `draws` single-qubit draws.
fn letter_counts(ch: ChannelModel, draws: usize) -> ([usize; 4], usize) {
    let g = forney();
    let sim = Simulator::new(&g, ch, 12, DecoderKind::Viterbi { w_max: 1 }).unwrap();
    let frames = sim.candidate_frames().to_vec();
    let mut counts = [0usize; 4];
    let mut total = 0;
    let mut trial = 0;
    while total < draws {
        let e = sim.sample(trial);
        for &t in &frames {
            for q in 0..g.n() {
                let idx = match e.get(t, q) {
                    Pauli::I => 0,
                    Pauli::X => 1,
                    Pauli::Y => 2,
                    Pauli::Z => 3,
                };
                counts[idx] += 1;
                total += 1;
            }
        }
        trial += 1;
    }
    (counts, total)
}

fn within_three_sigma(count: usize, total: usize, prob: f64) {
    let n = total as f64;
    let sigma = (n * prob * (1.0 - prob)).sqrt();
    let dev = (count as f64 - n * prob).abs();
    assert!(
        dev <= 3.0 * sigma,
        "count {count} of {total}, expected {prob}, off by {dev:.1} > 3σ = {:.1}",
        3.0 * sigma
    );
}

#[test]
fn depolarizing_marginals() {
    let (c, total) = letter_counts(ChannelModel::depolarizing(0.3, 11).unwrap(), 100_000);
    within_three_sigma(c[1], total, 0.1);
    within_three_sigma(c[2], total, 0.1);
    within_three_sigma(c[3], total, 0.1);
}

#[test]
fn independent_xz_marginals() {
    let ch = ChannelModel::new(ChannelKind::IndependentXz, 0.2, 5).unwrap();
    let (c, total) = letter_counts(ch, 100_000);
    within_three_sigma(c[1], total, 0.2 * 0.8);
    within_three_sigma(c[2], total, 0.04);
    within_three_sigma(c[3], total, 0.2 * 0.8);
}

#[test]
fn custom_marginals() {
    let ch = ChannelModel::new(
        ChannelKind::Custom {
            px: 0.05,
            py: 0.0,
            pz: 0.2,
        },
        0.0,
        9,
    )
    .unwrap();
    let (c, total) = letter_counts(ch, 100_000);
    within_three_sigma(c[1], total, 0.05);
    assert_eq!(c[2], 0);
    within_three_sigma(c[3], total, 0.2);
}

#[test]
fn periodic_single_places_one_error_per_block() {
    let g = forney();
    let sim = Simulator::new(
        &g,
        ChannelModel::periodic_single(2, 1.0, 3).unwrap(),
        12,
        DecoderKind::Table,
    )
    .unwrap();
    let candidates = sim.candidate_frames().to_vec();
    for trial in 0..200 {
        let e = sim.sample(trial);
        for t in 0..12 {
            let w = (0..g.n()).filter(|&q| e.get(t, q) != Pauli::I).count();
            if candidates.contains(&t) {
                assert_eq!(w, 1, "trial {trial} frame {t}");
            } else {
                assert_eq!(w, 0, "trial {trial} frame {t}");
            }
        }
    }
}

#[test]
fn invalid_channels_rejected() {
    assert!(ChannelModel::depolarizing(1.5, 0).is_err());
    assert!(ChannelModel::periodic_single(0, 0.5, 0).is_err());
    assert!(ChannelModel::new(
        ChannelKind::Custom {
            px: 0.6,
            py: 0.3,
            pz: 0.2
        },
        0.0,
        0
    )
    .is_err());
}
