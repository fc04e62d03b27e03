//! Boolean (OR, AND) matrices over automaton state sets.
//!
//! Rows are bit-packed; a product ORs together the rows of the right operand
//! selected by the set bits of each left row. Powers of a fixed matrix are
//! eventually periodic, and [`PowerOrbit`] records the pre-period (index) and
//! period so that arbitrarily large exponents reduce to a table lookup.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::automata::Dfa;
use crate::error::{Error, Result};

fn words_for(dim: usize) -> usize {
    dim.div_ceil(64)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolVector {
    dim: usize,
    bits: Vec<u64>,
}

impl BoolVector {
    pub fn zeros(dim: usize) -> Self {
        BoolVector {
            dim,
            bits: vec![0; words_for(dim)],
        }
    }

    /// Unit row vector with a single 1 at `i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = BoolVector::zeros(dim);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BoolVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(text: &str) -> Result<Self> {
        let bits = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BoolVector::from_bits(&bits))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        let mask = 1u64 << (i % 64);
        if value {
            self.bits[i / 64] |= mask;
        } else {
            self.bits[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim).filter(|&i| self.get(i))
    }

    /// Row vector times matrix.
    pub fn checked_mul(&self, m: &BoolMatrix) -> Result<BoolVector> {
        if self.dim != m.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: m.dim,
            });
        }
        let mut out = BoolVector::zeros(m.dim);
        for i in self.ones() {
            for (o, r) in out.bits.iter_mut().zip(m.row_words(i)) {
                *o |= r;
            }
        }
        Ok(out)
    }

    /// Boolean inner product.
    pub fn dot(&self, other: &BoolVector) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0))
    }

    pub fn or(&self, other: &BoolVector) -> BoolVector {
        assert_eq!(self.dim, other.dim);
        BoolVector {
            dim: self.dim,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }
}

impl Mul<&BoolMatrix> for &BoolVector {
    type Output = BoolVector;

    fn mul(self, m: &BoolMatrix) -> BoolVector {
        self.checked_mul(m).expect("vector/matrix dimensions agree")
    }
}

impl fmt::Display for BoolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Square boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMatrix {
    dim: usize,
    // dim rows of words_for(dim) words each
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(dim: usize) -> Self {
        BoolMatrix {
            dim,
            bits: vec![0; dim * words_for(dim)],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = BoolMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of `0`/`1` characters, e.g. `["010", "001", "000"]`.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let dim = rows.len();
        let mut m = BoolMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            let v = BoolVector::parse(row.as_ref())?;
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
            m.set_row(i, &v);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn row_words(&self, i: usize) -> &[u64] {
        let w = words_for(self.dim);
        &self.bits[i * w..(i + 1) * w]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        let w = words_for(self.dim);
        &mut self.bits[i * w..(i + 1) * w]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row_words(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.dim && j < self.dim);
        let mask = 1u64 << (j % 64);
        let word = &mut self.row_words_mut(i)[j / 64];
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BoolVector {
        BoolVector {
            dim: self.dim,
            bits: self.row_words(i).to_vec(),
        }
    }

    pub fn set_row(&mut self, i: usize, v: &BoolVector) {
        assert_eq!(v.dim, self.dim);
        self.row_words_mut(i).copy_from_slice(&v.bits);
    }

    pub fn row_count_ones(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn checked_mul(&self, rhs: &BoolMatrix) -> Result<BoolMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let mut out = BoolMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                if self.get(i, k) {
                    let src = rhs.row_words(k).to_vec();
                    for (o, r) in out.row_words_mut(i).iter_mut().zip(src) {
                        *o |= r;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise OR.
    pub fn or(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.dim, other.dim);
        BoolMatrix {
            dim: self.dim,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }

    /// Matrix times column vector: `out[i] = OR_j self[i][j] & v[j]`.
    pub fn apply(&self, v: &BoolVector) -> BoolVector {
        assert_eq!(v.dim, self.dim);
        let mut out = BoolVector::zeros(self.dim);
        for i in 0..self.dim {
            let hit = self.row_words(i).iter().zip(&v.bits).any(|(a, b)| a & b != 0);
            out.set(i, hit);
        }
        out
    }

    /// `self^k`, reduced through the power orbit of `self`.
    pub fn pow(&self, k: &BigUint) -> BoolMatrix {
        self.power_orbit().power(k).clone()
    }

    pub fn pow_u64(&self, k: u64) -> BoolMatrix {
        self.pow(&BigUint::from(k))
    }

    /// Lists `I, A, A², …` until the first repeat.
    pub fn power_orbit(&self) -> PowerOrbit {
        let mut seen: HashMap<BoolMatrix, usize> = HashMap::new();
        let mut powers = vec![BoolMatrix::identity(self.dim)];
        seen.insert(powers[0].clone(), 0);
        loop {
            let next = powers.last().unwrap() * self;
            if let Some(&first) = seen.get(&next) {
                let period = powers.len() - first;
                return PowerOrbit {
                    index: first,
                    period,
                    powers,
                };
            }
            seen.insert(next.clone(), powers.len());
            powers.push(next);
        }
    }

    pub fn to_rows(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.row(i).to_string()).collect()
    }
}

impl Mul<&BoolMatrix> for &BoolMatrix {
    type Output = BoolMatrix;

    fn mul(self, rhs: &BoolMatrix) -> BoolMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rows().join("\n"))
    }
}

/// The eventually periodic sequence of powers of a matrix `A`.
///
/// `powers` holds `A⁰ … A^{index+period-1}`, pairwise distinct, and
/// `A^{index+period} = A^{index}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    pub index: usize,
    pub period: usize,
    pub powers: Vec<BoolMatrix>,
}

impl PowerOrbit {
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    /// Position in `powers` of `A^k`.
    pub fn position(&self, k: &BigUint) -> usize {
        match k.to_usize() {
            Some(k) => self.position_small(k),
            None => {
                let offset = (k - BigUint::from(self.index)) % BigUint::from(self.period);
                self.index + offset.to_usize().expect("remainder is below the period")
            }
        }
    }

    pub fn position_small(&self, k: usize) -> usize {
        if k < self.powers.len() {
            k
        } else {
            self.index + (k - self.index) % self.period
        }
    }

    /// Position of `A^{k+1}` given the position of `A^k`.
    pub fn successor(&self, pos: usize) -> usize {
        if pos + 1 < self.powers.len() {
            pos + 1
        } else {
            self.index
        }
    }

    pub fn power(&self, k: &BigUint) -> &BoolMatrix {
        &self.powers[self.position(k)]
    }

    pub fn power_small(&self, k: usize) -> &BoolMatrix {
        &self.powers[self.position_small(k)]
    }
}

/// Per-symbol incidence matrices of a complete DFA, their union `M`, and the
/// power orbit of `M`.
#[derive(Debug, Clone)]
pub struct Incidence {
    pub letters: Vec<BoolMatrix>,
    pub total: BoolMatrix,
    pub orbit: PowerOrbit,
    /// Indicator of the accepting states.
    pub finals: BoolVector,
}

impl Incidence {
    pub fn of(d: &Dfa) -> Self {
        let (letters, total) = incidence_matrices(d);
        let orbit = total.power_orbit();
        let finals = BoolVector::from_bits(
            &(0..d.state_count()).map(|q| d.is_accepting(q)).collect::<Vec<_>>(),
        );
        Incidence {
            letters,
            total,
            orbit,
            finals,
        }
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }
}

/// `(M_c)_{ij} = 1` iff `δ(q_i, c) = q_j`; the second component is the OR of all `M_c`.
pub fn incidence_matrices(d: &Dfa) -> (Vec<BoolMatrix>, BoolMatrix) {
    let n = d.state_count();
    let letters: Vec<BoolMatrix> = d
        .alphabet()
        .symbols()
        .map(|c| {
            let mut m = BoolMatrix::zeros(n);
            for q in 0..n {
                m.set(q, d.step(q, c), true);
            }
            m
        })
        .collect();
    let total = letters
        .iter()
        .fold(BoolMatrix::zeros(n), |acc, m| acc.or(m));
    (letters, total)
}
