//! Encoders for entanglement-assisted block codes.
//!
//! A set of `p` independent Pauli generators on `q` qubits, written as a
//! binary `(Z|X)` matrix, is brought to canonical form by Clifford column
//! operations and symplectic row operations. The canonical form has `c`
//! anticommuting pairs `Z_i, X_i` followed by `s` isotropic rows `Z_j`;
//! each pair needs one ebit, so `c` is the ebit count and `k = q − s − c`
//! qubits are encoded. Reversing the recorded gates gives the encoder.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pauli::Pauli;

/// Binary `(Z|X)` matrix, one row per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    qubits: usize,
    z: Vec<Vec<bool>>,
    x: Vec<Vec<bool>>,
}

impl SymplecticMatrix {
    /// Builds from explicit bit rows. Every row must be nonzero.
    pub fn new(z: Vec<Vec<bool>>, x: Vec<Vec<bool>>) -> Result<Self> {
        let m = Self::new_unchecked(z, x)?;
        if let Some(r) = (0..m.rows()).find(|&r| m.row_is_zero(r)) {
            return Err(Error::InvalidMatrix(format!("row {r} is the identity")));
        }
        Ok(m)
    }

    fn new_unchecked(z: Vec<Vec<bool>>, x: Vec<Vec<bool>>) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::InvalidMatrix(format!(
                "{} z rows but {} x rows",
                z.len(),
                x.len()
            )));
        }
        let qubits = z.first().map_or(0, Vec::len);
        if z.iter().chain(&x).any(|r| r.len() != qubits) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(SymplecticMatrix { qubits, z, x })
    }

    /// From rows of Pauli letters.
    pub fn from_paulis(rows: &[Vec<Pauli>]) -> Result<Self> {
        let z = rows
            .iter()
            .map(|r| r.iter().map(|p| p.bits().0).collect())
            .collect();
        let x = rows
            .iter()
            .map(|r| r.iter().map(|p| p.bits().1).collect())
            .collect();
        Self::new(z, x)
    }

    pub fn rows(&self) -> usize {
        self.z.len()
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn z(&self, r: usize, c: usize) -> bool {
        self.z[r][c]
    }

    pub fn x(&self, r: usize, c: usize) -> bool {
        self.x[r][c]
    }

    pub fn letter(&self, r: usize, c: usize) -> Pauli {
        Pauli::from_bits(self.z[r][c], self.x[r][c])
    }

    pub fn row_paulis(&self, r: usize) -> Vec<Pauli> {
        (0..self.qubits).map(|c| self.letter(r, c)).collect()
    }

    fn row_is_zero(&self, r: usize) -> bool {
        !self.z[r].iter().chain(&self.x[r]).any(|&b| b)
    }

    fn row_is_zero_from(&self, r: usize, t: usize) -> bool {
        !self.z[r][t..].iter().chain(&self.x[r][t..]).any(|&b| b)
    }

    /// Standard symplectic product of rows `a` and `b`.
    pub fn symplectic_product(&self, a: usize, b: usize) -> bool {
        (0..self.qubits).fold(false, |acc, c| {
            acc ^ (self.z[a][c] & self.x[b][c]) ^ (self.x[a][c] & self.z[b][c])
        })
    }

    /// `p × p` matrix of pairwise symplectic products.
    pub fn gram(&self) -> Vec<Vec<bool>> {
        (0..self.rows())
            .map(|a| {
                (0..self.rows())
                    .map(|b| self.symplectic_product(a, b))
                    .collect()
            })
            .collect()
    }

    /// True when all rows commute pairwise.
    pub fn is_abelian(&self) -> bool {
        self.gram().iter().flatten().all(|&b| !b)
    }

    fn check_qubit(&self, i: usize) -> Result<()> {
        if i >= self.qubits {
            return Err(Error::QubitOutOfRange {
                index: i,
                qubits: self.qubits,
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_qubit(i)?;
        self.check_qubit(j)?;
        if i == j {
            return Err(Error::SameQubit(i));
        }
        Ok(())
    }

    /// CNOT from `i` to `j`: X column `i` is added to X column `j`, Z column `j` to Z column `i`.
    pub fn apply_cnot(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_pair(i, j)?;
        for r in 0..self.rows() {
            self.x[r][j] ^= self.x[r][i];
            self.z[r][i] ^= self.z[r][j];
        }
        Ok(())
    }

    /// Hadamard on `i`: swaps Z column `i` with X column `i`.
    pub fn apply_hadamard(&mut self, i: usize) -> Result<()> {
        self.check_qubit(i)?;
        for r in 0..self.rows() {
            std::mem::swap(&mut self.z[r][i], &mut self.x[r][i]);
        }
        Ok(())
    }

    /// Phase gate on `i`: X column `i` is added to Z column `i`.
    pub fn apply_phase(&mut self, i: usize) -> Result<()> {
        self.check_qubit(i)?;
        for r in 0..self.rows() {
            self.z[r][i] ^= self.x[r][i];
        }
        Ok(())
    }

    /// Exchanges columns `i` and `j` in both matrices.
    pub fn apply_swap(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_pair(i, j)?;
        for r in 0..self.rows() {
            self.z[r].swap(i, j);
            self.x[r].swap(i, j);
        }
        Ok(())
    }

    pub fn apply(&mut self, g: Gate) -> Result<()> {
        match g {
            Gate::Cnot(i, j) => self.apply_cnot(i, j),
            Gate::H(i) => self.apply_hadamard(i),
            Gate::P(i) => self.apply_phase(i),
            Gate::Swap(i, j) => self.apply_swap(i, j),
        }
    }

    /// Adds row `from` to row `to`.
    pub fn add_row(&mut self, from: usize, to: usize) {
        for c in 0..self.qubits {
            let (zf, xf) = (self.z[from][c], self.x[from][c]);
            self.z[to][c] ^= zf;
            self.x[to][c] ^= xf;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.z.swap(a, b);
        self.x.swap(a, b);
    }

    pub fn apply_row_op(&mut self, op: RowOp) {
        match op {
            RowOp::Add { from, to } => self.add_row(from, to),
            RowOp::Swap(a, b) => self.swap_rows(a, b),
        }
    }

    /// Rows as `zbits|xbits`.
    pub fn to_bit_string(&self) -> String {
        let bits = |v: &[bool]| {
            v.iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect::<String>()
        };
        (0..self.rows())
            .map(|r| format!("{}|{}", bits(&self.z[r]), bits(&self.x[r])))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Appends `extra` identity columns after the existing ones.
    fn widened(&self, extra: usize) -> Self {
        let pad = |rows: &[Vec<bool>]| {
            rows.iter()
                .map(|r| {
                    r.iter()
                        .copied()
                        .chain(std::iter::repeat_n(false, extra))
                        .collect()
                })
                .collect()
        };
        SymplecticMatrix {
            qubits: self.qubits + extra,
            z: pad(&self.z),
            x: pad(&self.x),
        }
    }
}

impl fmt::Display for SymplecticMatrix {
    /// One row of Pauli letters per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows() {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.qubits {
                write!(f, "{}", self.letter(r, c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymplecticMatrix {
    type Err = Error;

    /// One generator per line, either Pauli letters (`ZXZI`) or bit blocks
    /// (`1010|0100`). Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut z = Vec::new();
        let mut x = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let bits = |part: &str, col: usize| -> Result<Vec<bool>> {
                part.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::parse(
                            lineno,
                            col,
                            format!("expected bit, got `{c}`"),
                        )),
                    })
                    .collect()
            };
            if let Some((zs, xs)) = line.split_once('|') {
                z.push(bits(zs, 1)?);
                x.push(bits(xs, zs.len() + 2)?);
            } else {
                let row: Vec<Pauli> = line
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .enumerate()
                    .map(|(k, c)| {
                        Pauli::from_letter(c).ok_or_else(|| {
                            Error::parse(lineno, k + 1, format!("expected Pauli letter, got `{c}`"))
                        })
                    })
                    .collect::<Result<_>>()?;
                z.push(row.iter().map(|p| p.bits().0).collect());
                x.push(row.iter().map(|p| p.bits().1).collect());
            }
        }
        if z.is_empty() {
            return Err(Error::parse(1, 1, "no generators"));
        }
        SymplecticMatrix::new(z, x)
    }
}

/// Clifford gate on qubit indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Cnot(usize, usize),
    H(usize),
    P(usize),
    Swap(usize, usize),
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot(i, j) => write!(f, "CNOT {i} {j}"),
            Gate::H(i) => write!(f, "H {i}"),
            Gate::P(i) => write!(f, "P {i}"),
            Gate::Swap(i, j) => write!(f, "SWAP {i} {j}"),
        }
    }
}

/// Row operation; changes the generator set but not the stabilized group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowOp {
    Add { from: usize, to: usize },
    Swap(usize, usize),
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOp::Add { from, to } => write!(f, "# ROWADD {from} {to}"),
            RowOp::Swap(a, b) => write!(f, "# ROWSWAP {a} {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Gate(Gate),
    Row(RowOp),
}

/// Gates and row operations in the order the reduction applied them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordCircuit {
    qubits: usize,
    steps: Vec<Step>,
}

impl CliffordCircuit {
    pub fn new(qubits: usize) -> Self {
        CliffordCircuit {
            qubits,
            steps: Vec::new(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn gates(&self) -> impl Iterator<Item = Gate> + '_ {
        self.steps.iter().filter_map(|s| match s {
            Step::Gate(g) => Some(*g),
            Step::Row(_) => None,
        })
    }

    pub fn row_ops(&self) -> impl Iterator<Item = RowOp> + '_ {
        self.steps.iter().filter_map(|s| match s {
            Step::Row(r) => Some(*r),
            Step::Gate(_) => None,
        })
    }

    /// Encoding script: the reduction reversed, one gate per line, with
    /// row operations as comments where they occurred. Adjacent identical
    /// H, CNOT or SWAP gates cancel.
    pub fn to_script(&self) -> String {
        let mut kept: Vec<Step> = Vec::new();
        for &step in self.steps.iter().rev() {
            match (kept.last(), step) {
                (Some(&Step::Gate(a)), Step::Gate(b)) if a == b && !matches!(b, Gate::P(_)) => {
                    kept.pop();
                }
                _ => kept.push(step),
            }
        }
        let mut out = String::new();
        for step in &kept {
            match step {
                Step::Gate(g) => out.push_str(&g.to_string()),
                Step::Row(r) => out.push_str(&r.to_string()),
            }
            out.push('\n');
        }
        out
    }
}

/// Role of a canonical row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowRole {
    /// `Z` on the qubit of pair `i`.
    PairZ(usize),
    /// `X` on the qubit of pair `i`.
    PairX(usize),
    Isotropic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EADecomposition {
    pub c: usize,
    pub s: usize,
    pub k: usize,
    pub circuit: CliffordCircuit,
    pub canonical: SymplecticMatrix,
    pub roles: Vec<RowRole>,
}

struct Reducer {
    m: SymplecticMatrix,
    circuit: CliffordCircuit,
    origin: Vec<usize>,
    trace: Option<Vec<SymplecticMatrix>>,
}

impl Reducer {
    fn gate(&mut self, g: Gate) {
        self.m.apply(g).expect("indices in range");
        self.circuit.steps.push(Step::Gate(g));
        self.snapshot();
    }

    fn row(&mut self, op: RowOp) {
        self.m.apply_row_op(op);
        if let RowOp::Swap(a, b) = op {
            self.origin.swap(a, b);
        }
        self.circuit.steps.push(Step::Row(op));
        self.snapshot();
    }

    fn snapshot(&mut self) {
        if let Some(t) = &mut self.trace {
            t.push(self.m.clone());
        }
    }

    fn anticommuting_after(&self, r: usize, from: usize) -> Option<usize> {
        (from..self.m.rows()).find(|&j| j != r && self.m.symplectic_product(r, j))
    }

    /// Turns row `r` into `X_t` using columns `t..`.
    fn reduce_to_x(&mut self, r: usize, t: usize) -> Result<()> {
        let q = self.m.qubits();
        if self.m.row_is_zero_from(r, t) {
            return Err(Error::DependentRow {
                row: self.origin[r],
            });
        }
        if !self.m.x(r, t) {
            if let Some(j) = (t + 1..q).find(|&j| self.m.x(r, j)) {
                self.gate(Gate::Swap(t, j));
            } else if self.m.z(r, t) {
                self.gate(Gate::H(t));
            } else {
                let j = (t + 1..q)
                    .find(|&j| self.m.z(r, j))
                    .expect("row is nonzero");
                self.gate(Gate::Swap(t, j));
                self.gate(Gate::H(t));
            }
        }
        for j in t + 1..q {
            if self.m.x(r, j) {
                self.gate(Gate::Cnot(t, j));
            }
        }
        if self.m.z(r, t) {
            self.gate(Gate::P(t));
        }
        let zs: Vec<usize> = (t + 1..q).filter(|&j| self.m.z(r, j)).collect();
        for &j in &zs {
            self.gate(Gate::H(j));
        }
        for &j in &zs {
            self.gate(Gate::Cnot(t, j));
        }
        Ok(())
    }

    /// With row `a` equal to `X_t`, turns row `a + 1` into `X_t` and row `a` into `Z_t`.
    fn complete_pair(&mut self, a: usize, t: usize) {
        let b = a + 1;
        let q = self.m.qubits();
        for j in t + 1..q {
            if self.m.z(b, j) && self.m.x(b, j) {
                self.gate(Gate::P(j));
            }
        }
        let zs: Vec<usize> = (t + 1..q)
            .filter(|&j| self.m.z(b, j) && !self.m.x(b, j))
            .collect();
        self.gate(Gate::H(t));
        for &j in &zs {
            self.gate(Gate::H(j));
        }
        if self.m.z(b, t) {
            self.gate(Gate::P(t));
        }
        for j in t + 1..q {
            if self.m.x(b, j) {
                self.gate(Gate::Cnot(t, j));
            }
        }
    }
}

/// Canonical form and encoder of a full-rank generator matrix.
pub fn decompose(m: &SymplecticMatrix) -> Result<EADecomposition> {
    decompose_inner(m, false).map(|(d, _)| d)
}

/// [`decompose`] that also returns the matrix after every gate and row operation.
pub fn decompose_traced(m: &SymplecticMatrix) -> Result<(EADecomposition, Vec<SymplecticMatrix>)> {
    decompose_inner(m, true).map(|(d, t)| (d, t.unwrap_or_default()))
}

fn decompose_inner(
    m: &SymplecticMatrix,
    traced: bool,
) -> Result<(EADecomposition, Option<Vec<SymplecticMatrix>>)> {
    let p = m.rows();
    let q = m.qubits();
    if p > 0 && q == 0 {
        return Err(Error::InvalidMatrix("no qubits".into()));
    }
    let mut red = Reducer {
        m: m.clone(),
        circuit: CliffordCircuit::new(q),
        origin: (0..p).collect(),
        trace: traced.then(Vec::new),
    };
    let mut roles = Vec::with_capacity(p);
    let mut a = 0;
    let mut t = 0;
    let mut c = 0;

    // Anticommuting pairs first.
    while a < p {
        let Some(r) = (a..p).find(|&r| red.anticommuting_after(r, a).is_some()) else {
            break;
        };
        if t >= q {
            return Err(Error::DependentRow { row: red.origin[r] });
        }
        if r != a {
            red.row(RowOp::Swap(a, r));
        }
        if !red.m.symplectic_product(a, a + 1) {
            let j = red.anticommuting_after(a, a + 1).expect("partner exists");
            red.row(RowOp::Swap(a + 1, j));
        }
        red.reduce_to_x(a, t)?;
        red.complete_pair(a, t);
        for r in a + 2..p {
            if red.m.z(r, t) {
                red.row(RowOp::Add { from: a, to: r });
            }
        }
        for r in a + 2..p {
            if red.m.x(r, t) {
                red.row(RowOp::Add { from: a + 1, to: r });
            }
        }
        roles.push(RowRole::PairZ(c));
        roles.push(RowRole::PairX(c));
        c += 1;
        a += 2;
        t += 1;
    }

    // The remaining rows commute with everything.
    while a < p {
        if t >= q {
            return Err(Error::DependentRow { row: red.origin[a] });
        }
        red.reduce_to_x(a, t)?;
        for r in a + 1..p {
            if red.m.x(r, t) {
                red.row(RowOp::Add { from: a, to: r });
            }
        }
        red.gate(Gate::H(t));
        roles.push(RowRole::Isotropic);
        a += 1;
        t += 1;
    }

    let s = p - 2 * c;
    let dec = EADecomposition {
        c,
        s,
        k: q - s - c,
        circuit: red.circuit,
        canonical: red.m,
        roles,
    };
    Ok((dec, red.trace))
}

/// Input generators after the decomposition's row operations, with the
/// receiver's half of each ebit appended: `X` on the row that became `Z_i`
/// and `Z` on the row that became `X_i`. The result is abelian.
pub fn encoded_stabilizer(d: &EADecomposition) -> SymplecticMatrix {
    let q = d.canonical.qubits();
    let mut out = d.canonical.widened(d.c);
    for (r, role) in d.roles.iter().enumerate() {
        match *role {
            RowRole::PairZ(i) => out.x[r][q + i] = true,
            RowRole::PairX(i) => out.z[r][q + i] = true,
            RowRole::Isotropic => {}
        }
    }
    for g in d.circuit.gates().collect::<Vec<_>>().into_iter().rev() {
        out.apply(g).expect("gate indices below q");
    }
    out
}

/// Rank over GF(2) of a square bit matrix.
pub fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let src = rows[rank].clone();
                for (d, s) in rows[r].iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        rank += 1;
    }
    rank
}
