//! Phase-free Pauli sequences and their polynomial encoding.
//!
//! A [`PauliVec`] `(z(D) | x(D))` stands for a doubly-infinite Pauli sequence
//! over frames of `n` qubits: the coefficient of `D^t` in `z_q` and `x_q`
//! picks the letter on qubit `q` of frame `t`. [`shifted_symplectic`] gives,
//! in one polynomial, the commutation relation of one sequence with every
//! frame shift of another.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Single-qubit Pauli operator, phases dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    /// Letter from its `(z, x)` bit pair.
    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, false) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    /// The `(z, x)` bit pair.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Z => (true, false),
            Pauli::Y => (true, true),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn anticommutes(self, other: Pauli) -> bool {
        let (z1, x1) = self.bits();
        let (z2, x2) = other.bits();
        (z1 & x2) ^ (x1 & z2)
    }
}

/// Product up to phase.
impl Mul for Pauli {
    type Output = Pauli;

    fn mul(self, other: Pauli) -> Pauli {
        let (z1, x1) = self.bits();
        let (z2, x2) = other.bits();
        Pauli::from_bits(z1 ^ z2, x1 ^ x2)
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `(z(D) | x(D))`: one generator and all of its frame shifts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliVec {
    z: Vec<LaurentPoly>,
    x: Vec<LaurentPoly>,
}

impl PauliVec {
    pub fn new(z: Vec<LaurentPoly>, x: Vec<LaurentPoly>) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::FrameSizeMismatch {
                left: z.len(),
                right: x.len(),
            });
        }
        Ok(PauliVec { z, x })
    }

    /// The all-identity sequence on frames of `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliVec {
            z: vec![LaurentPoly::zero(); n],
            x: vec![LaurentPoly::zero(); n],
        }
    }

    /// A single letter on qubit `q` of frame `t`.
    pub fn single(n: usize, q: usize, t: i64, p: Pauli) -> Self {
        let mut v = Self::identity(n);
        let (z, x) = p.bits();
        if z {
            v.z[q] = LaurentPoly::monomial(t);
        }
        if x {
            v.x[q] = LaurentPoly::monomial(t);
        }
        v
    }

    /// Frame size.
    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn z(&self) -> &[LaurentPoly] {
        &self.z
    }

    pub fn x(&self) -> &[LaurentPoly] {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.entries().all(LaurentPoly::is_zero)
    }

    /// All `2n` entries, z-part first.
    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.z.iter().chain(&self.x)
    }

    /// Smallest exponent over all entries.
    pub fn delay(&self) -> Option<i64> {
        self.entries().filter_map(LaurentPoly::delay).min()
    }

    /// Largest exponent over all entries.
    pub fn degree(&self) -> Option<i64> {
        self.entries().filter_map(LaurentPoly::degree).max()
    }

    /// Number of frames spanned after delay normalization, minus one.
    pub fn span(&self) -> usize {
        match (self.delay(), self.degree()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    /// Multiplication of every entry by `D^k`, i.e. a `k`-frame shift.
    pub fn shift(&self, k: i64) -> Self {
        PauliVec {
            z: self.z.iter().map(|p| p.shift(k)).collect(),
            x: self.x.iter().map(|p| p.shift(k)).collect(),
        }
    }

    /// Shifted so the earliest nonidentity frame is frame 0.
    pub fn delay_normalized(&self) -> Self {
        self.delay()
            .map_or_else(|| self.clone(), |d| self.shift(-d))
    }

    /// Scalar multiplication `f(D)·u(D)`.
    pub fn scale(&self, f: &LaurentPoly) -> Self {
        PauliVec {
            z: self.z.iter().map(|p| f * p).collect(),
            x: self.x.iter().map(|p| f * p).collect(),
        }
    }

    /// Appends extra columns after the existing ones on both sides.
    pub fn extend_columns(&self, z: &[LaurentPoly], x: &[LaurentPoly]) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::FrameSizeMismatch {
                left: z.len(),
                right: x.len(),
            });
        }
        let mut out = self.clone();
        out.z.extend_from_slice(z);
        out.x.extend_from_slice(x);
        Ok(out)
    }

    /// Keeps only the first `n` columns.
    pub fn truncate_columns(&self, n: usize) -> Self {
        PauliVec {
            z: self.z[..n.min(self.n())].to_vec(),
            x: self.x[..n.min(self.n())].to_vec(),
        }
    }

    /// Letter on qubit `q` of frame `t`.
    pub fn letter(&self, q: usize, t: i64) -> Pauli {
        Pauli::from_bits(self.z[q].coeff(t), self.x[q].coeff(t))
    }

    /// Explicit Pauli letters for frames `first..=last`.
    pub fn to_window(&self, first: i64, last: i64) -> PauliWindow {
        let frames = (first..=last)
            .map(|t| (0..self.n()).map(|q| self.letter(q, t)).collect())
            .collect();
        PauliWindow {
            n: self.n(),
            start_frame: first,
            frames,
        }
    }

    /// Window covering exactly the support, or frame 0 alone for the identity.
    pub fn support_window(&self) -> PauliWindow {
        match (self.delay(), self.degree()) {
            (Some(lo), Some(hi)) => self.to_window(lo, hi),
            _ => self.to_window(0, 0),
        }
    }
}

impl Add<&PauliVec> for &PauliVec {
    type Output = PauliVec;

    /// Phase-free product of the two sequences. Panics on a frame-size mismatch.
    fn add(self, rhs: &PauliVec) -> PauliVec {
        assert_eq!(self.n(), rhs.n(), "frame size mismatch");
        PauliVec {
            z: self.z.iter().zip(&rhs.z).map(|(a, b)| a + b).collect(),
            x: self.x.iter().zip(&rhs.x).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for PauliVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[LaurentPoly]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "{} | {}", join(&self.z), join(&self.x))
    }
}

/// `(u⊙v)(D) = Σ_q z_q(D^-1)·x'_q(D) + x_q(D^-1)·z'_q(D)`.
///
/// The coefficient at `D^i` is 1 exactly when `u` shifted by `i` frames
/// anticommutes with `v`.
pub fn shifted_symplectic(u: &PauliVec, v: &PauliVec) -> Result<LaurentPoly> {
    if u.n() != v.n() {
        return Err(Error::FrameSizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let mut acc = LaurentPoly::zero();
    for q in 0..u.n() {
        acc += &(&u.z[q].time_reverse() * &v.x[q]);
        acc += &(&u.x[q].time_reverse() * &v.z[q]);
    }
    Ok(acc)
}

/// Whether `u` shifted by `i` frames commutes with `v`.
pub fn commutes_at_shift(u: &PauliVec, v: &PauliVec, i: i64) -> Result<bool> {
    Ok(!shifted_symplectic(u, v)?.coeff(i))
}

/// Finite stretch of a Pauli sequence, frame by frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliWindow {
    n: usize,
    start_frame: i64,
    frames: Vec<Vec<Pauli>>,
}

impl PauliWindow {
    pub fn new(n: usize, start_frame: i64, frames: Vec<Vec<Pauli>>) -> Result<Self> {
        if let Some(bad) = frames.iter().find(|f| f.len() != n) {
            return Err(Error::FrameSizeMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(PauliWindow {
            n,
            start_frame,
            frames,
        })
    }

    pub fn identity(n: usize, start_frame: i64, frames: usize) -> Self {
        PauliWindow {
            n,
            start_frame,
            frames: vec![vec![Pauli::I; n]; frames],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start_frame(&self) -> i64 {
        self.start_frame
    }

    pub fn frames(&self) -> &[Vec<Pauli>] {
        &self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn with_start(mut self, start_frame: i64) -> Self {
        self.start_frame = start_frame;
        self
    }

    /// Letter at absolute frame `t`, identity outside the window.
    pub fn get(&self, q: usize, t: i64) -> Pauli {
        let i = t - self.start_frame;
        if i < 0 || i as usize >= self.frames.len() {
            return Pauli::I;
        }
        self.frames[i as usize][q]
    }

    pub fn set(&mut self, q: usize, t: i64, p: Pauli) {
        let i = (t - self.start_frame) as usize;
        self.frames[i][q] = p;
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.frames
            .iter()
            .flatten()
            .filter(|&&p| p != Pauli::I)
            .count()
    }

    /// Polynomial form of the window.
    pub fn to_pauli_vec(&self) -> PauliVec {
        let mut z = vec![Vec::new(); self.n];
        let mut x = vec![Vec::new(); self.n];
        for (i, frame) in self.frames.iter().enumerate() {
            let t = self.start_frame + i as i64;
            for (q, p) in frame.iter().enumerate() {
                let (zb, xb) = p.bits();
                if zb {
                    z[q].push(t);
                }
                if xb {
                    x[q].push(t);
                }
            }
        }
        PauliVec {
            z: z.into_iter().map(LaurentPoly::from_exponents).collect(),
            x: x.into_iter().map(LaurentPoly::from_exponents).collect(),
        }
    }

    /// Letterwise product over the union of both windows, up to phase.
    pub fn mul(&self, other: &PauliWindow) -> Result<PauliWindow> {
        if self.n != other.n {
            return Err(Error::FrameSizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let lo = self.start_frame.min(other.start_frame);
        let hi = (self.start_frame + self.len() as i64).max(other.start_frame + other.len() as i64);
        let frames = (lo..hi)
            .map(|t| {
                (0..self.n)
                    .map(|q| self.get(q, t) * other.get(q, t))
                    .collect()
            })
            .collect();
        Ok(PauliWindow {
            n: self.n,
            start_frame: lo,
            frames,
        })
    }

    /// Whether the two finite operators anticommute, aligned by absolute frame.
    pub fn anticommutes(&self, other: &PauliWindow) -> bool {
        let lo = self.start_frame.max(other.start_frame);
        let hi = (self.start_frame + self.len() as i64).min(other.start_frame + other.len() as i64);
        let mut odd = false;
        for t in lo..hi {
            for q in 0..self.n.min(other.n) {
                odd ^= self.get(q, t).anticommutes(other.get(q, t));
            }
        }
        odd
    }
}

impl fmt::Display for PauliWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, frame) in self.frames.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for p in frame {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PauliWindow {
    type Err = Error;

    /// Parses `ZZX|IXZ|XZZ`, starting at frame 0.
    fn from_str(s: &str) -> Result<Self> {
        let mut frames = Vec::new();
        let mut col = 1;
        for part in s.trim().split('|') {
            let mut frame = Vec::new();
            for c in part.chars() {
                if !c.is_whitespace() {
                    frame.push(Pauli::from_letter(c).ok_or_else(|| {
                        Error::parse(1, col, format!("unexpected character `{c}`"))
                    })?);
                }
                col += 1;
            }
            col += 1;
            frames.push(frame);
        }
        let n = frames[0].len();
        if n == 0 {
            return Err(Error::parse(1, 1, "empty frame"));
        }
        PauliWindow::new(n, 0, frames)
            .map_err(|_| Error::parse(1, 1, "frames have different sizes"))
    }
}
