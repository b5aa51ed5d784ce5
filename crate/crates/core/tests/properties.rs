//! Randomized checks against independent oracles.

use convdistill::block::{decompose, encoded_stabilizer, Gate, RowRole, SymplecticMatrix};
use convdistill::builder::{
    augment_multi, augment_single, check_commuting, css_augment, css_gram_schmidt, symplectic_gram,
    vecs_commute, Triangle,
};
use convdistill::sim::{
    ChannelModel, CompiledCode, DecoderKind, ErrorFrameSeq, Execution, Simulator, TableDecoder,
    TrialOutcome, ViterbiDecoder,
};
use convdistill::{shifted_symplectic, GeneratorSet, LaurentPoly, Pauli, PauliVec};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

fn poly(lo: i64, hi: i64) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(lo..=hi, 0..6).prop_map(LaurentPoly::from_exponents)
}

fn pauli_vec(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = PauliVec> {
    (
        proptest::collection::vec(poly(lo, hi), n),
        proptest::collection::vec(poly(lo, hi), n),
    )
        .prop_map(|(z, x)| PauliVec::new(z, x).unwrap())
}

fn nonidentity(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = PauliVec> {
    pauli_vec(n, lo, hi).prop_filter("identity", |u| !u.is_identity())
}

/// Polynomials over Z2 as bit masks (bit i = coefficient of D^i).
mod bitpoly {
    pub fn mul(a: u64, b: u64) -> u128 {
        let mut acc = 0u128;
        for i in 0..64 {
            if (a >> i) & 1 == 1 {
                acc ^= (b as u128) << i;
            }
        }
        acc
    }

    fn deg(a: u64) -> i32 {
        63 - a.leading_zeros() as i32
    }

    pub fn rem(mut a: u64, b: u64) -> u64 {
        while a != 0 && deg(a) >= deg(b) {
            a ^= b << (deg(a) - deg(b));
        }
        a
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = rem(a, b);
            a = b;
            b = r;
        }
        a
    }
}

fn to_mask(p: &LaurentPoly) -> u64 {
    p.exponents().fold(0, |acc, e| acc | 1 << e)
}

/// Whether `u` shifted by `i` frames anticommutes with `v`, by counting
/// anticommuting letter pairs frame by frame.
fn window_anticommutes(u: &PauliVec, v: &PauliVec, i: i64) -> bool {
    let mut odd = false;
    for t in -30..=30 {
        for q in 0..u.n() {
            let (uz, ux) = (u.z()[q].coeff(t - i), u.x()[q].coeff(t - i));
            let (vz, vx) = (v.z()[q].coeff(t), v.x()[q].coeff(t));
            odd ^= (uz & vx) ^ (ux & vz);
        }
    }
    odd
}

/// Rank over the field of rational functions in D, by fraction-free elimination.
fn rational_rank(rows: &[PauliVec]) -> usize {
    let mut rows: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .map(|r| r.z().iter().chain(r.x()).cloned().collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let a = row[c].clone();
            if a.is_zero() {
                continue;
            }
            for (e, pv) in row.iter_mut().zip(&pivot) {
                *e = &(&pivot[c] * &*e) + &(&a * pv);
            }
        }
        rank += 1;
    }
    rank
}

fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) {
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row[c] {
                    row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
                }
            }
            rank += 1;
        }
    }
    rank
}

fn matrix_rows(m: &SymplecticMatrix) -> Vec<Vec<bool>> {
    (0..m.rows())
        .map(|r| {
            (0..m.qubits())
                .map(|c| m.z(r, c))
                .chain((0..m.qubits()).map(|c| m.x(r, c)))
                .collect()
        })
        .collect()
}

fn random_matrix(p: usize, q: usize) -> impl Strategy<Value = SymplecticMatrix> {
    proptest::collection::vec(proptest::collection::vec(any::<bool>(), 2 * q), p)
        .prop_map(move |rows| {
            let z = rows.iter().map(|r| r[..q].to_vec()).collect();
            let x = rows.iter().map(|r| r[q..].to_vec()).collect();
            SymplecticMatrix::new(z, x)
        })
        .prop_filter_map("zero row", Result::ok)
}

fn full_rank_matrix(p: usize, q: usize) -> impl Strategy<Value = SymplecticMatrix> {
    random_matrix(p, q).prop_filter("rank deficient", move |m| gf2_rank(&matrix_rows(m)) == p)
}

fn gram_bits(m: &SymplecticMatrix) -> Vec<Vec<bool>> {
    let rows = matrix_rows(m);
    let q = m.qubits();
    rows.iter()
        .map(|a| {
            rows.iter()
                .map(|b| (0..q).fold(false, |acc, c| acc ^ (a[c] & b[q + c]) ^ (a[q + c] & b[c])))
                .collect()
        })
        .collect()
}

fn gate_strategy(q: usize) -> impl Strategy<Value = Gate> {
    (0..4usize, 0..q, 1..q).prop_map(move |(kind, i, d)| {
        let j = (i + d) % q;
        match kind {
            0 => Gate::Cnot(i, j),
            1 => Gate::H(i),
            2 => Gate::P(i),
            _ => Gate::Swap(i, j),
        }
    })
}

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

fn augmented_single() -> GeneratorSet {
    let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
    augment_single(&PauliVec::new(vec![p("1+D^3"), p("1+D^2")], vec![p("D^2"), p("D")]).unwrap())
        .unwrap()
}

/// Per-frame patterns of weight at most one, identity first.
fn single_patterns(noisy: usize) -> Vec<(usize, Pauli)> {
    let mut out = vec![(0, Pauli::I)];
    for q in 0..noisy {
        for p in Pauli::NONTRIVIAL {
            out.push((q, p));
        }
    }
    out
}

/// Minimum weight over all errors with at most one error per support frame
/// whose syndrome equals `target`.
fn exhaustive_min_weight(
    code: &CompiledCode,
    frames: usize,
    support: &[usize],
    target: &[u64],
) -> Option<usize> {
    let pats = single_patterns(code.noisy());
    let mut best: Option<usize> = None;
    let total = pats.len().pow(support.len() as u32);
    for mut idx in 0..total {
        let mut e = ErrorFrameSeq::identity(code.n_total(), frames);
        for &t in support {
            let (q, p) = pats[idx % pats.len()];
            idx /= pats.len();
            e.set(t, q, p);
        }
        if code.syndromes(&e).unwrap().vectors == target {
            let w = e.weight();
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    best
}

fn error_on(
    code: &CompiledCode,
    frames: usize,
    support: &[usize],
    choice: &[usize],
) -> ErrorFrameSeq {
    let pats = single_patterns(code.noisy());
    let mut e = ErrorFrameSeq::identity(code.n_total(), frames);
    for (&t, &c) in support.iter().zip(choice) {
        let (q, p) = pats[c % pats.len()];
        e.set(t, q, p);
    }
    e
}

fn random_error(
    n_total: usize,
    noisy: usize,
    frames: usize,
) -> impl Strategy<Value = ErrorFrameSeq> {
    proptest::collection::vec((0..noisy, 0..4usize), frames).prop_map(move |cells| {
        let mut e = ErrorFrameSeq::identity(n_total, frames);
        for (t, (q, p)) in cells.into_iter().enumerate() {
            e.set(t, q, [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][p]);
        }
        e
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn addition_laws(a in poly(-8, 8), b in poly(-8, 8), c in poly(-8, 8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a + &a).is_zero());
    }

    #[test]
    fn multiplication_matches_convolution(a in poly(-70, 70), b in poly(-70, 70)) {
        let mut terms = Vec::new();
        for i in a.exponents() {
            for j in b.exponents() {
                terms.push(i + j);
            }
        }
        prop_assert_eq!(&a * &b, LaurentPoly::from_exponents(terms));
    }

    #[test]
    fn distributivity_and_reversal(a in poly(-8, 8), b in poly(-8, 8), c in poly(-8, 8)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a.time_reverse() * &b.time_reverse(), (&a * &b).time_reverse());
        prop_assert_eq!(a.time_reverse().time_reverse(), a);
    }

    #[test]
    fn parts_recompose(a in poly(-8, 8)) {
        let constant = if a.constant_term() { LaurentPoly::one() } else { LaurentPoly::zero() };
        prop_assert_eq!(&(&a.positive_part() + &a.negative_part()) + &constant, a.clone());
        let renorm = LaurentPoly::from_exponents(a.exponents());
        prop_assert_eq!(renorm, a);
    }

    #[test]
    fn display_parse_round_trip(a in poly(-20, 20)) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn gcd_matches_euclid_oracle(a in poly(0, 12), b in poly(0, 12), k in -3i64..3) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = LaurentPoly::gcd(&a.shift(k), &b.shift(k + 1)).unwrap();
        let strip = |p: &LaurentPoly| p.delay().map_or(0, |d| to_mask(&p.shift(-d)));
        let expect = bitpoly::gcd(strip(&a), strip(&b));
        prop_assert_eq!(to_mask(&g.poly), expect);
        prop_assert!(g.poly.constant_term());
        let d = g.to_poly();
        prop_assert!(a.shift(k).div_exact(&d).is_some());
        prop_assert!(b.shift(k + 1).div_exact(&d).is_some());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(-6, 6), b in poly(-6, 6)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        let lo = bitpoly::mul(to_mask(&a.shift(6)), to_mask(&b.shift(6)));
        prop_assert_eq!(lo.count_ones() as usize, (&a * &b).weight());
    }

    #[test]
    fn product_antisymmetry(
        (u, v) in (1usize..4).prop_flat_map(|n| (pauli_vec(n, -4, 4), pauli_vec(n, -4, 4))),
    ) {
        let uv = shifted_symplectic(&u, &v).unwrap();
        let vu = shifted_symplectic(&v, &u).unwrap();
        prop_assert_eq!(uv, vu.time_reverse());
    }

    #[test]
    fn self_product_symmetric_and_zero_constant(u in pauli_vec(3, -5, 5)) {
        let uu = shifted_symplectic(&u, &u).unwrap();
        prop_assert!(!uu.constant_term());
        prop_assert_eq!(uu.time_reverse(), uu);
    }

    #[test]
    fn scalar_rules(u in pauli_vec(2, -3, 3), v in pauli_vec(2, -3, 3), f in poly(-3, 3)) {
        let uv = shifted_symplectic(&u, &v).unwrap();
        prop_assert_eq!(shifted_symplectic(&u.scale(&f), &v).unwrap(), &f.time_reverse() * &uv);
        prop_assert_eq!(shifted_symplectic(&u, &v.scale(&f)).unwrap(), &f * &uv);
    }

    #[test]
    fn window_homomorphism(u in pauli_vec(2, -3, 3), v in pauli_vec(2, -3, 3)) {
        let sum = (&u + &v).to_window(-4, 4);
        let prod = u.to_window(-4, 4).mul(&v.to_window(-4, 4)).unwrap();
        prop_assert_eq!(sum, prod);
    }

    #[test]
    fn commutation_matches_window_oracle(u in pauli_vec(2, -3, 3), v in pauli_vec(2, -3, 3)) {
        for i in -8..=8 {
            prop_assert_eq!(
                !convdistill::commutes_at_shift(&u, &v, i).unwrap(),
                window_anticommutes(&u, &v, i),
                "shift {}", i
            );
        }
        let w = u.to_window(-6, 6);
        for i in -3..=3 {
            let sv = v.to_window(-6, 6).with_start(-6 + i);
            prop_assert_eq!(w.anticommutes(&sv), window_anticommutes(&u, &v, -i));
        }
    }

    #[test]
    fn single_augmentation_commutes(u in nonidentity(3, -2, 4)) {
        let g = augment_single(&u).unwrap();
        prop_assert!(check_commuting(&g));
        prop_assert!(shifted_symplectic(&g.gens()[0], &g.gens()[0]).unwrap().is_zero());
    }

    #[test]
    fn multi_augmentation_preserves_products(
        gens in proptest::collection::vec(nonidentity(2, -2, 3), 1..4),
        upper in any::<bool>(),
    ) {
        let variant = if upper { Triangle::Upper } else { Triangle::Lower };
        let g = augment_multi(&gens, variant).unwrap();
        prop_assert!(check_commuting(&g));
        let before = symplectic_gram(&gens);
        let cols: Vec<PauliVec> = g
            .gens()
            .iter()
            .map(|a| {
                PauliVec::new(a.z()[2..].to_vec(), a.x()[2..].to_vec()).unwrap()
            })
            .collect();
        prop_assert_eq!(symplectic_gram(&cols), before);
    }

    #[test]
    fn css_relations(
        zs in proptest::collection::vec(proptest::collection::vec(poly(0, 3), 3), 1..3),
        xs in proptest::collection::vec(proptest::collection::vec(poly(0, 3), 3), 1..3),
    ) {
        let zero = vec![LaurentPoly::zero(); 3];
        let rows: Vec<PauliVec> = zs
            .iter()
            .map(|z| PauliVec::new(z.clone(), zero.clone()).unwrap())
            .chain(xs.iter().map(|x| PauliVec::new(zero.clone(), x.clone()).unwrap()))
            .filter(|r| !r.is_identity())
            .collect();
        prop_assume!(!rows.is_empty());
        let d = css_gram_schmidt(&rows).unwrap();
        let c = d.pairs.len();
        for i in 0..c {
            for j in 0..c {
                let uv = shifted_symplectic(&d.pairs[i].u, &d.pairs[j].v).unwrap();
                if i == j {
                    prop_assert_eq!(&uv, &d.pairs[i].f);
                    prop_assert!(!uv.is_zero());
                } else {
                    prop_assert!(uv.is_zero());
                }
                prop_assert!(shifted_symplectic(&d.pairs[i].u, &d.pairs[j].u).unwrap().is_zero());
                prop_assert!(shifted_symplectic(&d.pairs[i].v, &d.pairs[j].v).unwrap().is_zero());
            }
        }
        let everything: Vec<PauliVec> = d
            .pairs
            .iter()
            .flat_map(|p| [p.u.clone(), p.v.clone()])
            .collect();
        for w in &d.isotropic {
            for o in everything.iter().chain(&d.isotropic) {
                prop_assert!(shifted_symplectic(w, o).unwrap().is_zero());
            }
        }
        let outputs: Vec<PauliVec> = everything.iter().chain(&d.isotropic).cloned().collect();
        let combined: Vec<PauliVec> = rows.iter().chain(&outputs).cloned().collect();
        let r = rational_rank(&rows);
        prop_assert_eq!(rational_rank(&outputs), r);
        prop_assert_eq!(rational_rank(&combined), r);

        let g = css_augment(&d).unwrap();
        prop_assert!(check_commuting(&g));
        prop_assert_eq!(g.ebits(), c);
        prop_assert!(vecs_commute(g.gens()));
    }

    #[test]
    fn gates_preserve_symplectic_products(
        m in random_matrix(4, 4),
        gates in proptest::collection::vec(gate_strategy(4), 1..12),
    ) {
        let before = gram_bits(&m);
        let mut w = m.clone();
        for g in gates {
            w.apply(g).unwrap();
            prop_assert_eq!(gram_bits(&w), before.clone());
        }
    }

    #[test]
    fn decomposition_matches_gram_rank(m in full_rank_matrix(4, 4)) {
        let d = decompose(&m).unwrap();
        prop_assert_eq!(2 * d.c, gf2_rank(&gram_bits(&m)));
        prop_assert_eq!(d.c * 2 + d.s, m.rows());
        prop_assert_eq!(d.k, m.qubits() - d.s - d.c);

        // Canonical shape: Z_i / X_i pairs on qubits 0..c, then Z on fresh qubits.
        let mut col = 0;
        for (r, role) in d.roles.iter().enumerate() {
            let letters = d.canonical.row_paulis(r);
            let expect = match role {
                RowRole::PairZ(_) => Pauli::Z,
                RowRole::PairX(_) => Pauli::X,
                RowRole::Isotropic => Pauli::Z,
            };
            prop_assert_eq!(letters[col], expect);
            prop_assert_eq!(letters.iter().filter(|&&l| l != Pauli::I).count(), 1);
            if !matches!(role, RowRole::PairZ(_)) {
                col += 1;
            }
        }

        // Undoing the gates on the canonical form gives the input after row operations.
        let mut expect = m.clone();
        for op in d.circuit.row_ops() {
            expect.apply_row_op(op);
        }
        let mut replay = d.canonical.clone();
        for g in d.circuit.gates().collect::<Vec<_>>().into_iter().rev() {
            replay.apply(g).unwrap();
        }
        prop_assert_eq!(&replay, &expect);
        prop_assert_eq!(gf2_rank(&gram_bits(&expect)), gf2_rank(&gram_bits(&m)));

        let enc = encoded_stabilizer(&d);
        prop_assert!(enc.is_abelian());
        prop_assert_eq!(enc.qubits(), m.qubits() + d.c);
    }

    #[test]
    fn syndrome_linearity(
        e1 in random_error(3, 2, 12),
        e2 in random_error(3, 2, 12),
    ) {
        let code = CompiledCode::new(&augmented_single()).unwrap();
        let s1 = code.syndromes(&e1).unwrap();
        let s2 = code.syndromes(&e2).unwrap();
        prop_assert_eq!(code.syndromes(&e1.xor(&e2)).unwrap(), s1.xor(&s2));
    }

    #[test]
    fn stabilizer_elements_are_transparent(shifts in proptest::collection::vec(any::<bool>(), 18)) {
        let g = forney();
        let frames = 10;
        let sim = Simulator::new(
            &g,
            ChannelModel::depolarizing(0.1, 0).unwrap(),
            frames,
            DecoderKind::Viterbi { w_max: 1 },
        )
        .unwrap();
        let mut e = PauliVec::identity(3);
        for (k, &on) in shifts.iter().enumerate() {
            if on {
                e = &e + &g.gens()[k % 2].shift((k / 2) as i64);
            }
        }
        let err = ErrorFrameSeq::from_window(&e.to_window(0, frames as i64 - 1)).unwrap();
        prop_assert!(sim.code().syndromes(&err).unwrap().is_zero());
        prop_assert_eq!(sim.evaluate(&err), TrialOutcome::Success);
    }

    #[test]
    fn viterbi_is_minimum_weight_forney(choice in proptest::collection::vec(0usize..10, 3)) {
        let code = CompiledCode::new(&forney()).unwrap();
        let frames = 5;
        let support = [1, 2, 3];
        let e = error_on(&code, frames, &support, &choice);
        let s = code.syndromes(&e).unwrap();
        let mut mask = vec![false; frames];
        for &t in &support {
            mask[t] = true;
        }
        let v = ViterbiDecoder::new(&code, frames, mask, 1).unwrap();
        let d = v.decode(&s).expect("true error is a candidate");
        prop_assert_eq!(code.syndromes(&d).unwrap(), s.clone());
        prop_assert_eq!(Some(d.weight()), exhaustive_min_weight(&code, frames, &support, &s.vectors));
    }

    #[test]
    fn viterbi_is_minimum_weight_augmented_single(choice in proptest::collection::vec(0usize..7, 2)) {
        let code = CompiledCode::new(&augmented_single()).unwrap();
        let frames = 8;
        let support = [3, 4];
        let e = error_on(&code, frames, &support, &choice);
        let s = code.syndromes(&e).unwrap();
        let mut mask = vec![false; frames];
        for &t in &support {
            mask[t] = true;
        }
        let v = ViterbiDecoder::new(&code, frames, mask, 1).unwrap();
        let d = v.decode(&s).expect("true error is a candidate");
        prop_assert_eq!(code.syndromes(&d).unwrap(), s.clone());
        prop_assert_eq!(Some(d.weight()), exhaustive_min_weight(&code, frames, &support, &s.vectors));
    }

    #[test]
    fn decoders_are_sound(e in random_error(3, 2, 16), w_max in 1usize..=2) {
        let code = CompiledCode::new(&augmented_single()).unwrap();
        let mut e = e;
        for t in (0..3).chain(13..16) {
            e.set(t, 0, Pauli::I);
            e.set(t, 1, Pauli::I);
        }
        let s = code.syndromes(&e).unwrap();
        let mut mask = vec![false; 16];
        for m in mask.iter_mut().take(13).skip(3) {
            *m = true;
        }
        let v = ViterbiDecoder::new(&code, 16, mask, w_max).unwrap();
        let d = v.decode(&s).expect("true error has bounded weight per frame");
        prop_assert_eq!(code.syndromes(&d).unwrap(), s.clone());
        prop_assert!(d.weight() <= e.weight());

        let table = TableDecoder::new(&code, 16, 4).unwrap();
        if let Some(d) = table.decode(&s) {
            prop_assert_eq!(code.syndromes(&d).unwrap(), s);
        }
    }

    #[test]
    fn fixed_seed_is_deterministic(seed in any::<u64>(), p in 0.0f64..0.3) {
        let g = forney();
        let ch = ChannelModel::depolarizing(p, seed).unwrap();
        let sim = Simulator::new(&g, ch, 8, DecoderKind::Viterbi { w_max: 1 }).unwrap();
        let a = sim.run(20, Execution::Sequential);
        let b = sim.run(20, Execution::Parallel);
        let c = Simulator::new(&g, ch, 8, DecoderKind::Viterbi { w_max: 1 })
            .unwrap()
            .run(20, Execution::Sequential);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
        prop_assert_eq!(a.successes + a.logical_failures, a.trials);
    }
}

/// Every property, for the acceptance gate.
#[allow(dead_code)]
pub(crate) const ALL: &[(&str, fn())] = &[
    ("addition_laws", addition_laws),
    (
        "multiplication_matches_convolution",
        multiplication_matches_convolution,
    ),
    ("distributivity_and_reversal", distributivity_and_reversal),
    ("parts_recompose", parts_recompose),
    ("display_parse_round_trip", display_parse_round_trip),
    ("gcd_matches_euclid_oracle", gcd_matches_euclid_oracle),
    (
        "exact_division_inverts_multiplication",
        exact_division_inverts_multiplication,
    ),
    ("product_antisymmetry", product_antisymmetry),
    (
        "self_product_symmetric_and_zero_constant",
        self_product_symmetric_and_zero_constant,
    ),
    ("scalar_rules", scalar_rules),
    ("window_homomorphism", window_homomorphism),
    (
        "commutation_matches_window_oracle",
        commutation_matches_window_oracle,
    ),
    ("single_augmentation_commutes", single_augmentation_commutes),
    (
        "multi_augmentation_preserves_products",
        multi_augmentation_preserves_products,
    ),
    ("css_relations", css_relations),
    (
        "gates_preserve_symplectic_products",
        gates_preserve_symplectic_products,
    ),
    (
        "decomposition_matches_gram_rank",
        decomposition_matches_gram_rank,
    ),
    ("syndrome_linearity", syndrome_linearity),
    (
        "stabilizer_elements_are_transparent",
        stabilizer_elements_are_transparent,
    ),
    (
        "viterbi_is_minimum_weight_forney",
        viterbi_is_minimum_weight_forney,
    ),
    (
        "viterbi_is_minimum_weight_augmented_single",
        viterbi_is_minimum_weight_augmented_single,
    ),
    ("decoders_are_sound", decoders_are_sound),
    ("fixed_seed_is_deterministic", fixed_seed_is_deterministic),
];

#[allow(dead_code)]
pub(crate) fn cases() -> u32 {
    config().cases
}
