//! Array-backed permutations on `{1, …, m}` and their cycle decompositions.
//!
//! Symbols are 1-indexed at every public boundary; storage is 0-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("symbol {symbol} is outside 1..={degree}")]
    OutOfRange { symbol: usize, degree: usize },
    #[error("symbol {0} appears more than once")]
    Repeated(usize),
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("cannot parse cycle notation at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A bijection of `{1, …, degree}`.
///
/// Ordering is lexicographic on the one-line images, which is the order
/// used for canonical forms and for sorting search output.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[j] is the 0-based image of the 0-based symbol j
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        Ok(Permutation {
            images: (0..degree as u32).collect(),
        })
    }

    /// Builds a permutation from its one-line form `[σ(1), σ(2), …]`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &s in images {
            if s == 0 || s > degree {
                return Err(PermError::OutOfRange { symbol: s, degree });
            }
            if std::mem::replace(&mut seen[s - 1], true) {
                return Err(PermError::Repeated(s));
            }
            out.push((s - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Internal constructor from 0-based images already known to be a bijection.
    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub(crate) fn zero_based(&self) -> &[u32] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based symbol `j`.
    ///
    /// Panics if `j` is not in `1..=degree`.
    pub fn apply(&self, j: usize) -> usize {
        assert!(
            (1..=self.degree()).contains(&j),
            "symbol {j} outside 1..={}",
            self.degree()
        );
        self.images[j - 1] as usize + 1
    }

    /// One-line form `[σ(1), …, σ(m)]`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `result(j) = outer(inner(j))`.
    pub fn compose(outer: &Permutation, inner: &Permutation) -> Result<Permutation, PermError> {
        if outer.degree() != inner.degree() {
            return Err(PermError::DegreeMismatch(outer.degree(), inner.degree()));
        }
        Ok(Permutation {
            images: inner
                .images
                .iter()
                .map(|&x| outer.images[x as usize])
                .collect(),
        })
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn after(&self, inner: &Permutation) -> Result<Permutation, PermError> {
        Permutation::compose(self, inner)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x as usize] = j as u32;
        }
        Permutation { images: inv }
    }

    /// `self^k` for a non-negative exponent.
    pub fn pow(&self, k: usize) -> Permutation {
        let mut out = Permutation {
            images: (0..self.degree() as u32).collect(),
        };
        for _ in 0..k {
            out = Permutation::compose(self, &out).expect("same degree");
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j as u32 == x)
    }

    /// True when every symbol is sent to one of opposite parity.
    pub fn is_parity_reversing(&self) -> Result<bool, PermError> {
        if !self.degree().is_multiple_of(2) {
            return Err(PermError::OddDegree(self.degree()));
        }
        Ok(self
            .images
            .iter()
            .enumerate()
            .all(|(j, &x)| (j as u32 ^ x) & 1 == 1))
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    pub fn two_cycle_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(j, &x)| x as usize > j && self.images[x as usize] as usize == j)
            .count()
    }

    /// Cycle lengths in canonical cycle order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn to_cycles(&self) -> CycleDecomposition {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition {
            degree: self.degree(),
            cycles,
        }
    }

    pub fn from_cycles(d: &CycleDecomposition) -> Result<Permutation, PermError> {
        if d.degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<Option<u32>> = vec![None; d.degree];
        for cycle in &d.cycles {
            for (idx, &s) in cycle.iter().enumerate() {
                if s == 0 || s > d.degree {
                    return Err(PermError::OutOfRange {
                        symbol: s,
                        degree: d.degree,
                    });
                }
                if images[s - 1].is_some() {
                    return Err(PermError::Repeated(s));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[s - 1] = Some((next - 1) as u32);
            }
        }
        Ok(Permutation {
            images: images
                .into_iter()
                .enumerate()
                .map(|(j, x)| x.unwrap_or(j as u32))
                .collect(),
        })
    }

    /// Parses cycle notation such as `(1,2,19,14)(6,13,20,7)`.
    ///
    /// Omitted symbols are fixed points. Without an explicit degree the
    /// degree is the smallest multiple of 4 that covers the largest symbol.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
        let cycles = parse_cycle_list(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let degree = match degree {
            Some(d) => d,
            None => max.div_ceil(4) * 4,
        };
        Permutation::from_cycles(&CycleDecomposition::new(degree, cycles)?)
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_cycles().fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s, None)
    }
}

/// Disjoint cycles covering `{1, …, degree}`, kept in canonical form:
/// each cycle starts at its smallest symbol and cycles are sorted by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Validates and canonicalizes; missing symbols become fixed points.
    pub fn new(degree: usize, cycles: Vec<Vec<usize>>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            if cycle.is_empty() {
                continue;
            }
            for &s in &cycle {
                if s == 0 || s > degree {
                    return Err(PermError::OutOfRange { symbol: s, degree });
                }
                if std::mem::replace(&mut seen[s - 1], true) {
                    return Err(PermError::Repeated(s));
                }
            }
            let min_at = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, &s)| s)
                .map(|(i, _)| i)
                .unwrap();
            let mut rotated = cycle;
            rotated.rotate_left(min_at);
            out.push(rotated);
        }
        for (j, _) in seen.iter().enumerate().filter(|(_, &s)| !s) {
            out.push(vec![j + 1]);
        }
        out.sort_by_key(|c| c[0]);
        Ok(CycleDecomposition {
            degree,
            cycles: out,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, s) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let err = |pos: usize, msg: &str| PermError::Parse {
        pos,
        msg: msg.to_string(),
    };
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut cycles = Vec::new();
    skip_ws(&mut pos);
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a symbol"));
            }
            let value = text[start..pos]
                .parse::<usize>()
                .map_err(|e| err(start, &e.to_string()))?;
            cycle.push(value);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos, "expected ',' or ')'")),
            }
        }
        cycles.push(cycle);
        skip_ws(&mut pos);
    }
    if cycles.is_empty() {
        return Err(err(0, "empty permutation"));
    }
    Ok(cycles)
}
