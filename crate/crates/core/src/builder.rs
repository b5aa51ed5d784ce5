//! Commuting convolutional stabilizers from arbitrary generator sets.
//!
//! Classical binary or quaternary convolutional codes give generator sets
//! whose members need not commute with each other's frame shifts. Each
//! construction here appends catalytic-ebit columns (always after the noisy
//! columns of a frame) so that every shifted symplectic product vanishes.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::pauli::{shifted_symplectic, PauliVec};

/// How a generator set was obtained; decides the catalytic ebit count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    #[default]
    Unassisted,
    Single,
    MultiLower,
    MultiUpper,
    Css,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Unassisted => "unassisted",
            Construction::Single => "single",
            Construction::MultiLower => "multi-lower",
            Construction::MultiUpper => "multi-upper",
            Construction::Css => "css",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "unassisted" => Construction::Unassisted,
            "single" => Construction::Single,
            "multi-lower" | "multi" => Construction::MultiLower,
            "multi-upper" => Construction::MultiUpper,
            "css" => Construction::Css,
            _ => return Err(Error::Unsupported(format!("construction `{s}`"))),
        })
    }
}

/// Placement of the off-diagonal products in [`augment_multi`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Triangle {
    #[default]
    Lower,
    Upper,
}

/// Basic generators of a convolutional stabilizer. Every generator spans
/// `n + ebits` columns per frame; the last `ebits` are the noiseless
/// catalytic columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    noisy: usize,
    ebits: usize,
    gens: Vec<PauliVec>,
    construction: Construction,
}

impl GeneratorSet {
    pub fn new(
        noisy: usize,
        ebits: usize,
        gens: Vec<PauliVec>,
        construction: Construction,
    ) -> Result<Self> {
        if noisy == 0 {
            return Err(Error::InvalidGeneratorSet(
                "frame has no noisy qubits".into(),
            ));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.n() != noisy + ebits {
                return Err(Error::FrameSizeMismatch {
                    left: noisy + ebits,
                    right: g.n(),
                });
            }
            if g.is_identity() {
                return Err(Error::InvalidGeneratorSet(format!(
                    "generator {i} is the identity"
                )));
            }
        }
        Ok(GeneratorSet {
            noisy,
            ebits,
            gens,
            construction,
        })
    }

    /// A set with no catalytic columns.
    pub fn unassisted(gens: Vec<PauliVec>) -> Result<Self> {
        let n = gens.first().map_or(0, PauliVec::n);
        Self::new(n, 0, gens, Construction::Unassisted)
    }

    /// Noisy qubits per frame.
    pub fn n(&self) -> usize {
        self.noisy
    }

    /// Number of basic generators.
    pub fn m(&self) -> usize {
        self.gens.len()
    }

    pub fn ebits(&self) -> usize {
        self.ebits
    }

    /// Qubits per frame including catalytic columns.
    pub fn frame_size(&self) -> usize {
        self.noisy + self.ebits
    }

    pub fn ebit_columns(&self) -> Range<usize> {
        self.noisy..self.noisy + self.ebits
    }

    pub fn gens(&self) -> &[PauliVec] {
        &self.gens
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// Constraint length ν: the largest frame span of any delay-normalized generator.
    pub fn constraint_length(&self) -> usize {
        self.gens.iter().map(PauliVec::span).max().unwrap_or(0)
    }

    /// Each generator shifted so its earliest frame is frame 0.
    pub fn delay_normalized(&self) -> Self {
        GeneratorSet {
            gens: self.gens.iter().map(PauliVec::delay_normalized).collect(),
            ..self.clone()
        }
    }

    /// The generators with catalytic columns stripped.
    pub fn noisy_part(&self) -> Vec<PauliVec> {
        self.gens
            .iter()
            .map(|g| g.truncate_columns(self.noisy))
            .collect()
    }
}

/// True iff every pair of generators has a vanishing shifted symplectic product.
pub fn check_commuting(g: &GeneratorSet) -> bool {
    vecs_commute(g.gens())
}

/// [`check_commuting`] on bare vectors of equal frame size.
pub fn vecs_commute(gens: &[PauliVec]) -> bool {
    symplectic_gram(gens)
        .iter()
        .flatten()
        .all(LaurentPoly::is_zero)
}

/// Matrix of pairwise products `(u_i⊙u_j)`. Panics on frame-size mismatch.
pub fn symplectic_gram(gens: &[PauliVec]) -> Vec<Vec<LaurentPoly>> {
    gens.iter()
        .map(|u| {
            gens.iter()
                .map(|v| shifted_symplectic(u, v).expect("equal frame sizes"))
                .collect()
        })
        .collect()
}

/// True iff each generator's entries share no factor other than a power of `D`.
pub fn noncatastrophic_check(g: &GeneratorSet) -> bool {
    g.gens().iter().all(is_noncatastrophic)
}

pub fn is_noncatastrophic(u: &PauliVec) -> bool {
    LaurentPoly::gcd_all(u.entries()).is_ok_and(|g| g.is_monomial())
}

fn check_same_frames(gens: &[PauliVec]) -> Result<usize> {
    let n = gens
        .first()
        .map(PauliVec::n)
        .ok_or_else(|| Error::InvalidGeneratorSet("no generators".into()))?;
    for g in gens {
        if g.n() != n {
            return Err(Error::FrameSizeMismatch {
                left: n,
                right: g.n(),
            });
        }
    }
    Ok(n)
}

/// Appends one ebit column `((u⊙u)^+ | 1)` to a single generator.
pub fn augment_single(u: &PauliVec) -> Result<GeneratorSet> {
    let n = u.n();
    let uu = shifted_symplectic(u, u)?;
    let aug = u.extend_columns(&[uu.positive_part()], &[LaurentPoly::one()])?;
    GeneratorSet::new(n, 1, vec![aug], Construction::Single)
}

/// Appends `m` ebit columns to `m` generators. The x-part of the new
/// columns is the identity, the z-part holds `u_i^+` on the diagonal and
/// the cross products on one side of it, so that `(a_i⊙a_j) = (u_i⊙u_j)`.
pub fn augment_multi(gens: &[PauliVec], variant: Triangle) -> Result<GeneratorSet> {
    let n = check_same_frames(gens)?;
    let m = gens.len();
    let gram = symplectic_gram(gens);
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let z: Vec<LaurentPoly> = (0..m)
            .map(|k| match (k.cmp(&i), variant) {
                (std::cmp::Ordering::Equal, _) => gram[i][i].positive_part(),
                (std::cmp::Ordering::Less, Triangle::Lower) => gram[k][i].clone(),
                (std::cmp::Ordering::Greater, Triangle::Upper) => gram[k][i].clone(),
                _ => LaurentPoly::zero(),
            })
            .collect();
        let x: Vec<LaurentPoly> = (0..m)
            .map(|k| {
                if k == i {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                }
            })
            .collect();
        out.push(gens[i].extend_columns(&z, &x)?);
    }
    let construction = match (m, variant) {
        (1, _) => Construction::Single,
        (_, Triangle::Lower) => Construction::MultiLower,
        (_, Triangle::Upper) => Construction::MultiUpper,
    };
    GeneratorSet::new(n, m, out, construction)
}

/// Element of GF(4) in the basis `{ω, ω̄}`; `1 = ω + ω̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gf4 {
    Zero,
    One,
    Omega,
    OmegaBar,
}

impl Gf4 {
    /// Coordinates `(a_ω, a_ω̄)`.
    pub fn coords(self) -> (bool, bool) {
        match self {
            Gf4::Zero => (false, false),
            Gf4::One => (true, true),
            Gf4::Omega => (true, false),
            Gf4::OmegaBar => (false, true),
        }
    }

    /// Symbols `0`, `1`, `w` (ω) and `W` (ω̄).
    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(Gf4::Zero),
            '1' => Some(Gf4::One),
            'w' => Some(Gf4::Omega),
            'W' => Some(Gf4::OmegaBar),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gf4::Zero => '0',
            Gf4::One => '1',
            Gf4::Omega => 'w',
            Gf4::OmegaBar => 'W',
        }
    }
}

/// Row of a quaternary convolutional code: one GF(4)-polynomial per
/// position, stored as its `ω` and `ω̄` coordinate polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf4Generator {
    omega: Vec<LaurentPoly>,
    omega_bar: Vec<LaurentPoly>,
}

impl Gf4Generator {
    pub fn new(omega: Vec<LaurentPoly>, omega_bar: Vec<LaurentPoly>) -> Result<Self> {
        if omega.len() != omega_bar.len() {
            return Err(Error::FrameSizeMismatch {
                left: omega.len(),
                right: omega_bar.len(),
            });
        }
        Ok(Gf4Generator { omega, omega_bar })
    }

    /// From explicit frames; `frames[t][q]` is the coefficient of `D^t` at position `q`.
    pub fn from_frames(frames: &[Vec<Gf4>]) -> Result<Self> {
        let n = frames.first().map_or(0, Vec::len);
        let mut w = vec![Vec::new(); n];
        let mut wb = vec![Vec::new(); n];
        for (t, frame) in frames.iter().enumerate() {
            if frame.len() != n {
                return Err(Error::FrameSizeMismatch {
                    left: n,
                    right: frame.len(),
                });
            }
            for (q, s) in frame.iter().enumerate() {
                let (a, b) = s.coords();
                if a {
                    w[q].push(t as i64);
                }
                if b {
                    wb[q].push(t as i64);
                }
            }
        }
        Ok(Gf4Generator {
            omega: w.into_iter().map(LaurentPoly::from_exponents).collect(),
            omega_bar: wb.into_iter().map(LaurentPoly::from_exponents).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }
}

/// The two Pauli generators `N(ω̄·g)` and `N(ω·g)` under the map
/// `0→I, ω→X, 1→Y, ω̄→Z`.
pub fn import_gf4(g: &Gf4Generator) -> [PauliVec; 2] {
    let sum: Vec<LaurentPoly> = g
        .omega
        .iter()
        .zip(&g.omega_bar)
        .map(|(a, b)| a + b)
        .collect();
    // ω̄·(a ω + b ω̄) = a + b ω = (a + b) ω + a ω̄
    let u1 = PauliVec::new(g.omega.clone(), sum.clone()).expect("equal lengths");
    // ω·(a ω + b ω̄) = a ω̄ + b = b ω + (a + b) ω̄
    let u2 = PauliVec::new(sum, g.omega_bar.clone()).expect("equal lengths");
    [u1, u2]
}

/// One symplectic pair from [`css_gram_schmidt`]: `(u⊙v) = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssPair {
    pub u: PauliVec,
    pub v: PauliVec,
    pub f: LaurentPoly,
}

/// Output of [`css_gram_schmidt`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CssDecomposition {
    pub pairs: Vec<CssPair>,
    pub isotropic: Vec<PauliVec>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum RowKind {
    Z,
    X,
}

fn row_kind(w: &PauliVec, row: usize) -> Result<RowKind> {
    let has_z = w.z().iter().any(|p| !p.is_zero());
    let has_x = w.x().iter().any(|p| !p.is_zero());
    match (has_z, has_x) {
        (true, false) => Ok(RowKind::Z),
        (false, true) => Ok(RowKind::X),
        (false, false) => Err(Error::InvalidGeneratorSet(format!(
            "generator {row} is the identity"
        ))),
        (true, true) => Err(Error::NotCss { row }),
    }
}

/// Divides a row by the gcd of its entries, D-power included.
fn divide_out_gcf(w: &PauliVec) -> PauliVec {
    match LaurentPoly::gcd_all(w.entries()) {
        Ok(g) if !(g.is_monomial() && g.shift == 0) => {
            let d = g.to_poly();
            let div = |v: &[LaurentPoly]| -> Vec<LaurentPoly> {
                v.iter()
                    .map(|p| p.div_exact(&d).expect("gcd divides every entry"))
                    .collect()
            };
            PauliVec::new(div(w.z()), div(w.x())).expect("equal lengths")
        }
        _ => w.clone(),
    }
}

/// Shifted-symplectic Gram-Schmidt on rows that are each purely z or purely x.
///
/// Rows are processed in order. Row `p` is paired with the first later row it
/// fails to commute with (swapped up to `p + 1`); all rows after the pair are
/// then made orthogonal to both members and divided by their common factor.
/// A row with no partner is isotropic. Rows that become zero are dropped.
pub fn css_gram_schmidt(ws: &[PauliVec]) -> Result<CssDecomposition> {
    check_same_frames(ws)?;
    let mut rows: Vec<(PauliVec, RowKind)> = ws
        .iter()
        .enumerate()
        .map(|(i, w)| row_kind(w, i).map(|k| (w.clone(), k)))
        .collect::<Result<_>>()?;
    let mut out = CssDecomposition::default();
    let mut p = 0;
    while p < rows.len() {
        let partner = (p + 1..rows.len()).find(|&j| {
            !shifted_symplectic(&rows[p].0, &rows[j].0)
                .expect("equal frame sizes")
                .is_zero()
        });
        let Some(j) = partner else {
            out.isotropic.push(rows[p].0.clone());
            p += 1;
            continue;
        };
        rows.swap(p + 1, j);
        let (a, b) = if rows[p].1 == RowKind::Z {
            (rows[p].0.clone(), rows[p + 1].0.clone())
        } else {
            (rows[p + 1].0.clone(), rows[p].0.clone())
        };
        let ab = shifted_symplectic(&a, &b)?;
        let ba = ab.time_reverse();
        let mut r = p + 2;
        while r < rows.len() {
            let (w, kind) = &rows[r];
            let updated = match kind {
                RowKind::Z => {
                    let rb = shifted_symplectic(w, &b)?;
                    &w.scale(&ba) + &a.scale(&rb.time_reverse())
                }
                RowKind::X => {
                    let ra = shifted_symplectic(w, &a)?;
                    &w.scale(&ab) + &b.scale(&ra.time_reverse())
                }
            };
            if updated.is_identity() {
                rows.remove(r);
            } else {
                rows[r].0 = divide_out_gcf(&updated);
                r += 1;
            }
        }
        let (u, v) = (rows[p].0.clone(), rows[p + 1].0.clone());
        let f = shifted_symplectic(&u, &v)?;
        out.pairs.push(CssPair { u, v, f });
        p += 2;
    }
    Ok(out)
}

/// Stacks `u_1..u_c, v_1..v_c` and the isotropic rows, adding `c` ebit
/// columns: `f_i(D^-1)` in the z-part of `u_i` and `1` in the x-part of `v_i`.
pub fn css_augment(d: &CssDecomposition) -> Result<GeneratorSet> {
    let all: Vec<PauliVec> = d
        .pairs
        .iter()
        .flat_map(|p| [p.u.clone(), p.v.clone()])
        .chain(d.isotropic.iter().cloned())
        .collect();
    let n = check_same_frames(&all)?;
    let c = d.pairs.len();
    if c == 0 {
        return GeneratorSet::new(n, 0, d.isotropic.clone(), Construction::Unassisted);
    }
    let zeros = vec![LaurentPoly::zero(); c];
    let unit = |i: usize, val: LaurentPoly| {
        let mut col = zeros.clone();
        col[i] = val;
        col
    };
    let mut gens = Vec::with_capacity(all.len());
    for (i, pair) in d.pairs.iter().enumerate() {
        gens.push(
            pair.u
                .extend_columns(&unit(i, pair.f.time_reverse()), &zeros)?,
        );
    }
    for (i, pair) in d.pairs.iter().enumerate() {
        gens.push(
            pair.v
                .extend_columns(&zeros, &unit(i, LaurentPoly::one()))?,
        );
    }
    for w in &d.isotropic {
        gens.push(w.extend_columns(&zeros, &zeros)?);
    }
    GeneratorSet::new(n, c, gens, Construction::Css)
}

/// Yield and catalytic requirement of a protocol built on a generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolYield {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "yield")]
    pub yield_: Ratio<i64>,
    pub constraint_length: usize,
    pub catalytic_ebits: usize,
}

/// `(n − m)/n` together with the number of noiseless ebits needed to start
/// the protocol: `nν` for a single augmented generator, `(n+m)ν` for the
/// multi-generator construction, `(n+c)ν` for the CSS one and none without
/// catalytic columns.
pub fn protocol_yield(g: &GeneratorSet) -> ProtocolYield {
    let (n, m) = (g.n(), g.m());
    let nu = g.constraint_length();
    let catalytic_ebits = if g.ebits() == 0 {
        0
    } else {
        match g.construction() {
            Construction::Unassisted => 0,
            Construction::Single => n * nu,
            Construction::MultiLower | Construction::MultiUpper => (n + m) * nu,
            Construction::Css => (n + g.ebits()) * nu,
        }
    };
    ProtocolYield {
        n,
        m,
        yield_: Ratio::new(n as i64 - m as i64, n as i64),
        constraint_length: nu,
        catalytic_ebits,
    }
}
