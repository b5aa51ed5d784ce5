//! Pauli-frame Monte-Carlo simulation of convolutional entanglement distillation.
//!
//! Only Bob's half of each noisy ebit suffers errors, so a trial is fully
//! described by a Pauli error on a finite window of frames. Alice's and
//! Bob's measurement outcomes are never drawn: decoding consumes only their
//! differences, which are the commutation bits of each generator shift with
//! the error.
//!
//! Window layout for `F` frames and constraint length `ν`: generators are
//! delay-normalized, shift `i` covers frames `i..=i+ν` and is measured for
//! `0 <= i < F - ν`. Errors are confined to the interior frames
//! `ν..=F-1-ν`, whose every syndrome bit is measured.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::builder::{protocol_yield, GeneratorSet};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliWindow};

/// Error distribution on each noisy qubit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ChannelKind {
    /// X, Y, Z each with probability `p/3`.
    Depolarizing,
    /// Independent X and Z flips, each with probability `p`.
    IndependentXz,
    /// X, Y, Z with the given probabilities; `p` is ignored.
    Custom { px: f64, py: f64, pz: f64 },
    /// Errors only on the first interior frame of each block of `period`
    /// frames: with probability `p`, one uniformly chosen noisy qubit gets a
    /// uniformly chosen X, Y or Z.
    PeriodicSingle { period: usize },
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelKind::Depolarizing => f.write_str("depolarizing"),
            ChannelKind::IndependentXz => f.write_str("independent-xz"),
            ChannelKind::Custom { px, py, pz } => write!(f, "custom({px},{py},{pz})"),
            ChannelKind::PeriodicSingle { period } => write!(f, "periodic-single({period})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChannelModel {
    pub kind: ChannelKind,
    pub p: f64,
    pub seed: u64,
}

impl ChannelModel {
    pub fn new(kind: ChannelKind, p: f64, seed: u64) -> Result<Self> {
        let prob = |v: f64| (0.0..=1.0).contains(&v);
        if !prob(p) {
            return Err(Error::Unsupported(format!(
                "error probability {p} outside [0, 1]"
            )));
        }
        match kind {
            ChannelKind::Custom { px, py, pz }
                if !(prob(px) && prob(py) && prob(pz) && prob(px + py + pz)) =>
            {
                return Err(Error::Unsupported(
                    "custom probabilities must sum to at most 1".into(),
                ))
            }
            ChannelKind::PeriodicSingle { period: 0 } => {
                return Err(Error::Unsupported("period must be positive".into()))
            }
            _ => {}
        }
        Ok(ChannelModel { kind, p, seed })
    }

    pub fn depolarizing(p: f64, seed: u64) -> Result<Self> {
        Self::new(ChannelKind::Depolarizing, p, seed)
    }

    pub fn periodic_single(period: usize, p: f64, seed: u64) -> Result<Self> {
        Self::new(ChannelKind::PeriodicSingle { period }, p, seed)
    }

    /// Spacing between frames that may carry errors.
    fn period(&self) -> usize {
        match self.kind {
            ChannelKind::PeriodicSingle { period } => period,
            _ => 1,
        }
    }

    fn draw_letter<R: Rng + ?Sized>(&self, rng: &mut R) -> Pauli {
        match self.kind {
            ChannelKind::Depolarizing => {
                if rng.random_bool(self.p) {
                    Pauli::NONTRIVIAL[rng.random_range(0..3)]
                } else {
                    Pauli::I
                }
            }
            ChannelKind::IndependentXz => {
                let x = rng.random_bool(self.p);
                let z = rng.random_bool(self.p);
                Pauli::from_bits(z, x)
            }
            ChannelKind::Custom { px, py, pz } => {
                let u: f64 = rng.random();
                if u < px {
                    Pauli::X
                } else if u < px + py {
                    Pauli::Y
                } else if u < px + py + pz {
                    Pauli::Z
                } else {
                    Pauli::I
                }
            }
            ChannelKind::PeriodicSingle { .. } => unreachable!("drawn per frame"),
        }
    }
}

/// Pauli error on Bob's side over frames `0..len`, as per-frame qubit masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ErrorFrameSeq {
    n_total: usize,
    z: Vec<u64>,
    x: Vec<u64>,
}

impl ErrorFrameSeq {
    pub fn identity(n_total: usize, frames: usize) -> Self {
        ErrorFrameSeq {
            n_total,
            z: vec![0; frames],
            x: vec![0; frames],
        }
    }

    pub fn from_window(w: &PauliWindow) -> Result<Self> {
        if w.n() > 64 {
            return Err(Error::Unsupported("frames wider than 64 qubits".into()));
        }
        let mut e = Self::identity(w.n(), w.len());
        for (t, frame) in w.frames().iter().enumerate() {
            for (q, &p) in frame.iter().enumerate() {
                e.set(t, q, p);
            }
        }
        Ok(e)
    }

    pub fn to_window(&self) -> PauliWindow {
        let frames = (0..self.frames())
            .map(|t| (0..self.n_total).map(|q| self.get(t, q)).collect())
            .collect();
        PauliWindow::new(self.n_total, 0, frames).expect("consistent frame sizes")
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn frames(&self) -> usize {
        self.z.len()
    }

    pub fn get(&self, t: usize, q: usize) -> Pauli {
        Pauli::from_bits((self.z[t] >> q) & 1 == 1, (self.x[t] >> q) & 1 == 1)
    }

    pub fn set(&mut self, t: usize, q: usize, p: Pauli) {
        let (z, x) = p.bits();
        let bit = 1u64 << q;
        self.z[t] = (self.z[t] & !bit) | if z { bit } else { 0 };
        self.x[t] = (self.x[t] & !bit) | if x { bit } else { 0 };
    }

    /// `(z, x)` qubit masks of frame `t`.
    pub fn frame(&self, t: usize) -> (u64, u64) {
        (self.z[t], self.x[t])
    }

    pub fn weight(&self) -> usize {
        self.z
            .iter()
            .zip(&self.x)
            .map(|(z, x)| (z | x).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }

    /// Phase-free product.
    pub fn xor(&self, other: &Self) -> Self {
        ErrorFrameSeq {
            n_total: self.n_total,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
        }
    }
}

/// Difference vectors `e_i`, one `m`-bit word per measured shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyndromeStream {
    pub m: usize,
    pub vectors: Vec<u64>,
}

impl SyndromeStream {
    pub fn is_zero(&self) -> bool {
        self.vectors.iter().all(|&v| v == 0)
    }

    pub fn xor(&self, other: &Self) -> Self {
        SyndromeStream {
            m: self.m,
            vectors: self
                .vectors
                .iter()
                .zip(&other.vectors)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

fn parity(v: u64) -> u64 {
    (v.count_ones() & 1) as u64
}

/// Generators as per-offset qubit masks, ready for syndrome extraction.
#[derive(Clone, Debug)]
pub struct CompiledCode {
    n_total: usize,
    noisy: usize,
    m: usize,
    nu: usize,
    /// `gz[j][r]`: z-mask of generator `j` at frame offset `r`.
    gz: Vec<Vec<u64>>,
    gx: Vec<Vec<u64>>,
}

impl CompiledCode {
    pub fn new(g: &GeneratorSet) -> Result<Self> {
        let g = g.delay_normalized();
        if g.frame_size() > 64 {
            return Err(Error::Unsupported("frames wider than 64 qubits".into()));
        }
        if g.m() == 0 || g.m() > 64 {
            return Err(Error::Unsupported(format!(
                "simulation needs 1 to 64 generators, got {}",
                g.m()
            )));
        }
        let nu = g.constraint_length();
        let mask = |polys: &[crate::LaurentPoly], r: usize| -> u64 {
            polys
                .iter()
                .enumerate()
                .filter(|(_, p)| p.coeff(r as i64))
                .fold(0, |acc, (q, _)| acc | 1 << q)
        };
        let gz = g
            .gens()
            .iter()
            .map(|u| (0..=nu).map(|r| mask(u.z(), r)).collect())
            .collect();
        let gx = g
            .gens()
            .iter()
            .map(|u| (0..=nu).map(|r| mask(u.x(), r)).collect())
            .collect();
        Ok(CompiledCode {
            n_total: g.frame_size(),
            noisy: g.n(),
            m: g.m(),
            nu,
            gz,
            gx,
        })
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn noisy(&self) -> usize {
        self.noisy
    }

    /// Syndrome bits contributed by a one-frame error at offset `r` of each generator.
    pub fn frame_signature(&self, z: u64, x: u64, r: usize) -> u64 {
        (0..self.m).fold(0, |acc, j| {
            acc | (parity((z & self.gx[j][r]) ^ (x & self.gz[j][r])) << j)
        })
    }

    fn check_window(&self, frames: usize) -> Result<()> {
        let needed = 2 * self.nu + 1;
        if frames < needed {
            return Err(Error::WindowTooSmall { frames, needed });
        }
        Ok(())
    }

    /// Interior frames, the ones allowed to carry errors.
    pub fn interior(&self, frames: usize) -> std::ops::RangeInclusive<usize> {
        self.nu..=frames - 1 - self.nu
    }

    pub fn syndromes(&self, err: &ErrorFrameSeq) -> Result<SyndromeStream> {
        if err.n_total() != self.n_total {
            return Err(Error::FrameSizeMismatch {
                left: self.n_total,
                right: err.n_total(),
            });
        }
        self.check_window(err.frames())?;
        let shifts = err.frames() - self.nu;
        let vectors = (0..shifts)
            .map(|i| {
                (0..=self.nu).fold(0, |acc, r| {
                    let (z, x) = err.frame(i + r);
                    acc ^ self.frame_signature(z, x, r)
                })
            })
            .collect();
        Ok(SyndromeStream { m: self.m, vectors })
    }
}

/// Syndrome stream of `err` under the generators of `g`.
pub fn syndromes(err: &ErrorFrameSeq, g: &GeneratorSet) -> Result<SyndromeStream> {
    CompiledCode::new(g)?.syndromes(err)
}

/// Frames that may carry errors under `ch`.
fn candidate_frames(code: &CompiledCode, ch: &ChannelModel, frames: usize) -> Vec<usize> {
    code.interior(frames).step_by(ch.period()).collect()
}

fn sample_into<R: Rng + ?Sized>(
    code: &CompiledCode,
    ch: &ChannelModel,
    candidates: &[usize],
    frames: usize,
    rng: &mut R,
) -> ErrorFrameSeq {
    let mut e = ErrorFrameSeq::identity(code.n_total, frames);
    match ch.kind {
        ChannelKind::PeriodicSingle { .. } => {
            for &t in candidates {
                if rng.random_bool(ch.p) {
                    let q = rng.random_range(0..code.noisy);
                    e.set(t, q, Pauli::NONTRIVIAL[rng.random_range(0..3)]);
                }
            }
        }
        _ => {
            for &t in candidates {
                for q in 0..code.noisy {
                    e.set(t, q, ch.draw_letter(rng));
                }
            }
        }
    }
    e
}

/// Draws one error window from the channel's own seed. Catalytic columns
/// and the `ν`-frame margins stay error-free.
pub fn sample_errors(ch: &ChannelModel, frames: usize, g: &GeneratorSet) -> Result<ErrorFrameSeq> {
    let code = CompiledCode::new(g)?;
    code.check_window(frames)?;
    let mut rng = trial_rng(ch.seed, 0);
    Ok(sample_into(
        &code,
        ch,
        &candidate_frames(&code, ch, frames),
        frames,
        &mut rng,
    ))
}

/// ChaCha8 seeded with `seed`, on stream `trial`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Single-frame error patterns on the noisy qubits, identity first, then
/// weight one ordered by qubit and X, Y, Z, then weight two.
fn frame_patterns(noisy: usize, w_max: usize) -> Vec<(u64, u64)> {
    let mut out = vec![(0, 0)];
    let singles: Vec<(u64, u64)> = (0..noisy)
        .flat_map(|q| {
            Pauli::NONTRIVIAL.iter().map(move |p| {
                let (z, x) = p.bits();
                ((z as u64) << q, (x as u64) << q)
            })
        })
        .collect();
    if w_max >= 1 {
        out.extend(&singles);
    }
    if w_max >= 2 {
        for (a, &(z1, x1)) in singles.iter().enumerate() {
            for &(z2, x2) in &singles[a + 1..] {
                if (z1 | x1) & (z2 | x2) == 0 {
                    out.push((z1 | z2, x1 | x2));
                }
            }
        }
    }
    out
}

/// GF(2) row space over packed bit vectors, kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
struct Gf2Span {
    basis: Vec<(usize, Vec<u64>)>,
}

impl Gf2Span {
    fn reduce(&self, v: &mut [u64]) {
        for (pivot, row) in &self.basis {
            if (v[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        self.reduce(&mut v);
        let Some(wi) = v.iter().position(|&w| w != 0) else {
            return;
        };
        let pivot = wi * 64 + v[wi].trailing_zeros() as usize;
        for (_, row) in &mut self.basis {
            if (row[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a ^= b;
                }
            }
        }
        self.basis.push((pivot, v));
    }

    fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&w| w == 0)
    }
}

/// Decides whether a residual error acts trivially: it must be a product of
/// generator shifts whose support lies inside the window.
#[derive(Clone, Debug)]
pub struct StabilizerSpan {
    n_total: usize,
    frames: usize,
    span: Gf2Span,
}

impl StabilizerSpan {
    pub fn new(code: &CompiledCode, frames: usize) -> Self {
        let mut span = Gf2Span::default();
        let words = (2 * code.n_total * frames).div_ceil(64);
        for j in 0..code.m {
            let len = (0..=code.nu)
                .rev()
                .find(|&r| code.gz[j][r] | code.gx[j][r] != 0)
                .unwrap_or(0);
            for k in 0..frames.saturating_sub(len) {
                let mut v = vec![0u64; words];
                for r in 0..=len {
                    Self::write_frame(&mut v, code.n_total, k + r, code.gz[j][r], code.gx[j][r]);
                }
                span.insert(v);
            }
        }
        StabilizerSpan {
            n_total: code.n_total,
            frames,
            span,
        }
    }

    fn write_frame(v: &mut [u64], n_total: usize, t: usize, z: u64, x: u64) {
        for q in 0..n_total {
            let base = 2 * (t * n_total + q);
            v[base / 64] ^= ((z >> q) & 1) << (base % 64);
            v[(base + 1) / 64] ^= ((x >> q) & 1) << ((base + 1) % 64);
        }
    }

    pub fn contains(&self, e: &ErrorFrameSeq) -> bool {
        let words = (2 * self.n_total * self.frames).div_ceil(64);
        let mut v = vec![0u64; words];
        for t in 0..self.frames.min(e.frames()) {
            let (z, x) = e.frame(t);
            Self::write_frame(&mut v, self.n_total, t, z, x);
        }
        self.span.contains(&v)
    }
}

/// Table lookup on single-qubit errors at frames spaced by at least `ν + 1`.
#[derive(Clone, Debug)]
pub struct TableDecoder {
    code: CompiledCode,
    frames: usize,
    candidates: Vec<usize>,
    table: BTreeMap<Vec<u64>, (u64, u64)>,
}

impl TableDecoder {
    /// Errors on collisions between syndromes of inequivalent errors and on
    /// errors with no syndrome at all.
    pub fn new(code: &CompiledCode, frames: usize, period: usize) -> Result<Self> {
        code.check_window(frames)?;
        if period <= code.nu {
            return Err(Error::Unsupported(format!(
                "table decoding needs errors at least {} frames apart, got {period}",
                code.nu + 1
            )));
        }
        let local = 2 * code.nu + 1;
        let span = StabilizerSpan::new(code, local);
        let mut table = BTreeMap::new();
        for (z, x) in frame_patterns(code.noisy, 1).into_iter().skip(1) {
            let sig = Self::signature(code, z, x);
            if sig.iter().all(|&s| s == 0) {
                return Err(Error::AmbiguousTable(format!(
                    "error {} has an empty syndrome",
                    describe(z, x)
                )));
            }
            match table.get(&sig) {
                None => {
                    table.insert(sig, (z, x));
                }
                Some(&(z0, x0)) => {
                    let mut diff = ErrorFrameSeq::identity(code.n_total, local);
                    diff.z[code.nu] = z ^ z0;
                    diff.x[code.nu] = x ^ x0;
                    if !span.contains(&diff) {
                        return Err(Error::AmbiguousTable(format!(
                            "errors {} and {} share a syndrome",
                            describe(z0, x0),
                            describe(z, x)
                        )));
                    }
                }
            }
        }
        Ok(TableDecoder {
            code: code.clone(),
            frames,
            candidates: code.interior(frames).step_by(period).collect(),
            table,
        })
    }

    /// Syndrome of a one-frame error at offset `r`, for `r = 0..=ν`.
    fn signature(code: &CompiledCode, z: u64, x: u64) -> Vec<u64> {
        (0..=code.nu)
            .map(|r| code.frame_signature(z, x, r))
            .collect()
    }

    /// Syndrome columns of every tabled single-qubit error, in table order
    /// (qubit, then X, Y, Z). Entry `r` is the bit vector for generator offset `r`.
    pub fn entries(&self) -> Vec<(usize, Pauli, Vec<u64>)> {
        frame_patterns(self.code.noisy, 1)
            .into_iter()
            .skip(1)
            .map(|(z, x)| {
                let q = (z | x).trailing_zeros() as usize;
                (
                    q,
                    Pauli::from_bits(z != 0, x != 0),
                    Self::signature(&self.code, z, x),
                )
            })
            .collect()
    }

    /// Recovered error, or `None` when the syndrome is not explained by the table.
    pub fn decode(&self, s: &SyndromeStream) -> Option<ErrorFrameSeq> {
        let nu = self.code.nu;
        let mut residual = s.vectors.clone();
        let mut out = ErrorFrameSeq::identity(self.code.n_total, self.frames);
        for &t in &self.candidates {
            let sig: Vec<u64> = (0..=nu).map(|r| residual[t - r]).collect();
            if sig.iter().all(|&v| v == 0) {
                continue;
            }
            let &(z, x) = self.table.get(&sig)?;
            for r in 0..=nu {
                residual[t - r] = 0;
            }
            out.z[t] = z;
            out.x[t] = x;
        }
        residual.iter().all(|&v| v == 0).then_some(out)
    }
}

fn describe(z: u64, x: u64) -> String {
    let q = (z | x).trailing_zeros();
    format!("{}{}", Pauli::from_bits(z != 0, x != 0), q)
}

#[derive(Clone, Copy, Debug)]
struct Branch {
    z: u64,
    x: u64,
    weight: u32,
    /// Contribution to the shift that this frame finalizes.
    fin: u64,
    /// Contribution to the pending shifts, packed like the state.
    push: u128,
}

#[derive(Clone, Copy, Debug)]
struct Survivor {
    metric: u32,
    pred_rank: usize,
    branch: usize,
    pred: u128,
}

/// Minimum-weight decoding on the syndrome trellis. The state after frame
/// `τ` holds the partial syndromes of shifts `τ-ν+1..=τ`; ties between
/// equal-weight paths go to the lexicographically smallest branch sequence.
#[derive(Clone, Debug)]
pub struct ViterbiDecoder {
    code: CompiledCode,
    frames: usize,
    support: Vec<bool>,
    branches: Vec<Branch>,
}

impl ViterbiDecoder {
    /// `support[t]` says whether frame `t` may carry an error.
    pub fn new(
        code: &CompiledCode,
        frames: usize,
        support: Vec<bool>,
        w_max: usize,
    ) -> Result<Self> {
        code.check_window(frames)?;
        if !(1..=2).contains(&w_max) {
            return Err(Error::Unsupported(format!(
                "w_max must be 1 or 2, got {w_max}"
            )));
        }
        if code.m * code.nu > 128 {
            return Err(Error::Unsupported(
                "trellis state wider than 128 bits".into(),
            ));
        }
        if support.len() != frames {
            return Err(Error::Unsupported(
                "support mask length differs from window".into(),
            ));
        }
        let nu = code.nu;
        let m = code.m;
        let branches = frame_patterns(code.noisy, w_max)
            .into_iter()
            .map(|(z, x)| {
                let push = (0..nu).fold(0u128, |acc, k| {
                    acc | (code.frame_signature(z, x, nu - 1 - k) as u128) << (k * m)
                });
                Branch {
                    z,
                    x,
                    weight: (z | x).count_ones(),
                    fin: code.frame_signature(z, x, nu),
                    push,
                }
            })
            .collect();
        Ok(ViterbiDecoder {
            code: code.clone(),
            frames,
            support,
            branches,
        })
    }

    pub fn decode(&self, s: &SyndromeStream) -> Option<ErrorFrameSeq> {
        let nu = self.code.nu;
        let m = self.code.m;
        let low_mask: u128 = if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        };
        let measured = s.vectors.len();

        // (metric, rank) per live state.
        let mut live: BTreeMap<u128, (u32, usize)> = BTreeMap::from([(0, (0, 0))]);
        let mut history: Vec<BTreeMap<u128, (u128, usize)>> = Vec::with_capacity(self.frames);
        for t in 0..self.frames {
            let allowed = if self.support[t] {
                self.branches.len()
            } else {
                1
            };
            let check = t.checked_sub(nu).filter(|&i| i < measured);
            let mut next: BTreeMap<u128, Survivor> = BTreeMap::new();
            for (&state, &(metric, rank)) in &live {
                for (bi, b) in self.branches[..allowed].iter().enumerate() {
                    let fin = (if nu == 0 {
                        0
                    } else {
                        (state & low_mask) as u64
                    }) ^ b.fin;
                    if let Some(i) = check {
                        if fin != s.vectors[i] {
                            continue;
                        }
                    }
                    let ns = if nu == 0 { 0 } else { (state >> m) ^ b.push };
                    let cand = Survivor {
                        metric: metric + b.weight,
                        pred_rank: rank,
                        branch: bi,
                        pred: state,
                    };
                    let better = next.get(&ns).is_none_or(|cur| {
                        (cand.metric, cand.pred_rank, cand.branch)
                            < (cur.metric, cur.pred_rank, cur.branch)
                    });
                    if better {
                        next.insert(ns, cand);
                    }
                }
            }
            if next.is_empty() {
                return None;
            }
            let mut order: Vec<(usize, usize, u128)> = next
                .iter()
                .map(|(&st, sv)| (sv.pred_rank, sv.branch, st))
                .collect();
            order.sort_unstable();
            live = order
                .iter()
                .enumerate()
                .map(|(rank, &(_, _, st))| (st, (next[&st].metric, rank)))
                .collect();
            history.push(
                next.iter()
                    .map(|(&st, sv)| (st, (sv.pred, sv.branch)))
                    .collect(),
            );
        }

        let (&end, _) = live
            .iter()
            .min_by_key(|(_, &(metric, rank))| (metric, rank))?;
        let mut out = ErrorFrameSeq::identity(self.code.n_total, self.frames);
        let mut state = end;
        for t in (0..self.frames).rev() {
            let (pred, bi) = history[t][&state];
            let b = self.branches[bi];
            out.z[t] = b.z;
            out.x[t] = b.x;
            state = pred;
        }
        Some(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum DecoderKind {
    Table,
    Viterbi { w_max: usize },
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderKind::Table => f.write_str("table"),
            DecoderKind::Viterbi { w_max } => write!(f, "viterbi(w_max={w_max})"),
        }
    }
}

#[derive(Clone, Debug)]
enum Decoder {
    Table(TableDecoder),
    Viterbi(ViterbiDecoder),
}

impl Decoder {
    fn decode(&self, s: &SyndromeStream) -> Option<ErrorFrameSeq> {
        match self {
            Decoder::Table(d) => d.decode(s),
            Decoder::Viterbi(d) => d.decode(s),
        }
    }
}

/// Whether trials run on the rayon pool or one after another.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Success,
    /// No error consistent with the syndrome was found.
    Detected,
    /// A correction was applied but left a nontrivial residual.
    Undetected,
}

fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimReport {
    pub trials: u64,
    pub successes: u64,
    pub logical_failures: u64,
    pub detected: u64,
    pub residual_undetected: u64,
    pub success_rate: f64,
    #[serde(serialize_with = "ratio_string")]
    pub protocol_yield: Ratio<i64>,
    #[serde(serialize_with = "ratio_string")]
    pub measured_yield: Ratio<i64>,
    pub frames: usize,
    pub interior_start: usize,
    pub interior_end: usize,
    pub constraint_length: usize,
    pub seed: u64,
    pub p: f64,
    pub channel: ChannelKind,
    pub decoder: DecoderKind,
}

impl SimReport {
    /// `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        kv("trials", self.trials.to_string());
        kv("successes", self.successes.to_string());
        kv("logical_failures", self.logical_failures.to_string());
        kv("detected", self.detected.to_string());
        kv("residual_undetected", self.residual_undetected.to_string());
        kv("success_rate", format!("{:.6}", self.success_rate));
        kv("protocol_yield", self.protocol_yield.to_string());
        kv("measured_yield", self.measured_yield.to_string());
        kv("frames", self.frames.to_string());
        kv(
            "window",
            format!("{}..={}", self.interior_start, self.interior_end),
        );
        kv("constraint_length", self.constraint_length.to_string());
        kv("seed", self.seed.to_string());
        kv("p", self.p.to_string());
        kv("channel", self.channel.to_string());
        kv("decoder", self.decoder.to_string());
        out
    }
}

/// Everything a batch of trials shares.
#[derive(Clone, Debug)]
pub struct Simulator {
    code: CompiledCode,
    channel: ChannelModel,
    frames: usize,
    candidates: Vec<usize>,
    decoder_kind: DecoderKind,
    decoder: Decoder,
    span: StabilizerSpan,
    protocol_yield: Ratio<i64>,
}

impl Simulator {
    pub fn new(
        g: &GeneratorSet,
        channel: ChannelModel,
        frames: usize,
        decoder_kind: DecoderKind,
    ) -> Result<Self> {
        let code = CompiledCode::new(g)?;
        code.check_window(frames)?;
        let candidates = candidate_frames(&code, &channel, frames);
        let decoder = match decoder_kind {
            DecoderKind::Table => {
                Decoder::Table(TableDecoder::new(&code, frames, channel.period())?)
            }
            DecoderKind::Viterbi { w_max } => {
                let mut support = vec![false; frames];
                for &t in &candidates {
                    support[t] = true;
                }
                Decoder::Viterbi(ViterbiDecoder::new(&code, frames, support, w_max)?)
            }
        };
        Ok(Simulator {
            span: StabilizerSpan::new(&code, frames),
            code,
            channel,
            frames,
            candidates,
            decoder_kind,
            decoder,
            protocol_yield: protocol_yield(g).yield_,
        })
    }

    /// Error drawn by trial `trial`.
    pub fn sample(&self, trial: u64) -> ErrorFrameSeq {
        let mut rng = trial_rng(self.channel.seed, trial);
        self.sample_with(&mut rng)
    }

    fn sample_with<R: RngCore>(&self, rng: &mut R) -> ErrorFrameSeq {
        sample_into(
            &self.code,
            &self.channel,
            &self.candidates,
            self.frames,
            rng,
        )
    }

    /// Syndrome, decoding and residual check for a given error.
    pub fn evaluate(&self, err: &ErrorFrameSeq) -> TrialOutcome {
        let s = self
            .code
            .syndromes(err)
            .expect("window checked at construction");
        match self.decoder.decode(&s) {
            None => TrialOutcome::Detected,
            Some(d) if self.span.contains(&d.xor(err)) => TrialOutcome::Success,
            Some(_) => TrialOutcome::Undetected,
        }
    }

    pub fn run_trial(&self, trial: u64) -> TrialOutcome {
        self.evaluate(&self.sample(trial))
    }

    pub fn run(&self, trials: u64, exec: Execution) -> SimReport {
        let tally = |acc: [u64; 3], o: TrialOutcome| {
            let mut acc = acc;
            acc[o as usize] += 1;
            acc
        };
        let counts = match exec {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..trials)
                    .into_par_iter()
                    .map(|t| self.run_trial(t))
                    .fold(|| [0u64; 3], tally)
                    .reduce(|| [0u64; 3], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]])
            }
            _ => (0..trials)
                .map(|t| self.run_trial(t))
                .fold([0u64; 3], tally),
        };
        self.report(trials, counts)
    }

    fn report(&self, trials: u64, [successes, detected, undetected]: [u64; 3]) -> SimReport {
        let measured_yield = if trials == 0 {
            Ratio::from_integer(0)
        } else {
            self.protocol_yield * Ratio::new(successes as i64, trials as i64)
        };
        let interior = self.code.interior(self.frames);
        SimReport {
            trials,
            successes,
            logical_failures: detected + undetected,
            detected,
            residual_undetected: undetected,
            success_rate: if trials == 0 {
                0.0
            } else {
                successes as f64 / trials as f64
            },
            protocol_yield: self.protocol_yield,
            measured_yield,
            frames: self.frames,
            interior_start: *interior.start(),
            interior_end: *interior.end(),
            constraint_length: self.code.nu,
            seed: self.channel.seed,
            p: self.channel.p,
            channel: self.channel.kind,
            decoder: self.decoder_kind,
        }
    }

    pub fn code(&self) -> &CompiledCode {
        &self.code
    }

    pub fn frames(&self) -> usize {
        self.frames
    }

    /// Frames that may carry errors.
    pub fn candidate_frames(&self) -> &[usize] {
        &self.candidates
    }
}

/// Runs `trials` independent trials with the default execution mode.
pub fn run_distillation(
    g: &GeneratorSet,
    ch: ChannelModel,
    frames: usize,
    trials: u64,
    decoder: DecoderKind,
) -> Result<SimReport> {
    Ok(Simulator::new(g, ch, frames, decoder)?.run(trials, Execution::default()))
}
