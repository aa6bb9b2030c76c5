//! Symbols `1..=4n` as oriented arcs of the two curves.
//!
//! Symbol `2i-1` is `a_i`, symbol `2i` is `b_i`, and symbol `2n+j` is the
//! reversal of symbol `j`. Labels print as `a3`, `b2`, `a5'`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("intersection number must be at least 1")]
    ZeroN,
    #[error("symbol {symbol} is outside 1..={max}")]
    SymbolOutOfRange { symbol: usize, max: usize },
    #[error("arc index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("bad arc label {0:?}")]
    BadLabel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Alpha,
    Beta,
}

impl Curve {
    pub fn letter(self) -> char {
        match self {
            Curve::Alpha => 'a',
            Curve::Beta => 'b',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcLabel {
    pub curve: Curve,
    pub index: usize,
    pub inverted: bool,
}

impl ArcLabel {
    pub fn new(curve: Curve, index: usize, inverted: bool) -> Self {
        ArcLabel {
            curve,
            index,
            inverted,
        }
    }

    pub fn reversed(self) -> Self {
        ArcLabel {
            inverted: !self.inverted,
            ..self
        }
    }

    /// The label with the orientation mark dropped.
    pub fn unoriented(self) -> Self {
        ArcLabel {
            inverted: false,
            ..self
        }
    }
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.curve.letter(), self.index)?;
        if self.inverted {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for ArcLabel {
    type Err = EncodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EncodingError::BadLabel(s.to_string());
        let mut chars = s.chars();
        let curve = match chars.next() {
            Some('a') => Curve::Alpha,
            Some('b') => Curve::Beta,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (digits, inverted) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(ArcLabel::new(curve, index, inverted))
    }
}

/// The labelling of `{1, …, 4n}` for a fixed intersection number `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelScheme {
    n: usize,
}

impl LabelScheme {
    pub fn new(n: usize) -> Result<Self, EncodingError> {
        if n == 0 {
            return Err(EncodingError::ZeroN);
        }
        Ok(LabelScheme { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        4 * self.n
    }

    pub fn label_of(&self, j: usize) -> Result<ArcLabel, EncodingError> {
        let n = self.n;
        if j == 0 || j > 4 * n {
            return Err(EncodingError::SymbolOutOfRange {
                symbol: j,
                max: 4 * n,
            });
        }
        let (base, inverted) = if j > 2 * n {
            (j - 2 * n, true)
        } else {
            (j, false)
        };
        let curve = if base % 2 == 1 {
            Curve::Alpha
        } else {
            Curve::Beta
        };
        Ok(ArcLabel::new(curve, base.div_ceil(2), inverted))
    }

    pub fn index_of(&self, label: ArcLabel) -> Result<usize, EncodingError> {
        if label.index == 0 || label.index > self.n {
            return Err(EncodingError::IndexOutOfRange {
                index: label.index,
                n: self.n,
            });
        }
        let base = match label.curve {
            Curve::Alpha => 2 * label.index - 1,
            Curve::Beta => 2 * label.index,
        };
        Ok(if label.inverted {
            base + 2 * self.n
        } else {
            base
        })
    }
}

pub fn label_of(j: usize, n: usize) -> Result<ArcLabel, EncodingError> {
    LabelScheme::new(n)?.label_of(j)
}

pub fn index_of(label: ArcLabel, n: usize) -> Result<usize, EncodingError> {
    LabelScheme::new(n)?.index_of(label)
}

/// The arc-reversal involution `(1, 2, …, 4n)^{2n}`.
pub fn make_q(n: usize) -> Result<Permutation, EncodingError> {
    if n == 0 {
        return Err(EncodingError::ZeroN);
    }
    let m = 4 * n as u32;
    let half = 2 * n as u32;
    Ok(Permutation::from_zero_based(
        (0..m).map(|j| (j + half) % m).collect(),
    ))
}

/// Advances every arc to the next arc of the same curve, keeping its
/// orientation: `a_i -> a_{i+1}`, `a_i' -> a_{i-1}'`, and likewise for `b`.
pub fn make_tau(n: usize) -> Result<Permutation, EncodingError> {
    let scheme = LabelScheme::new(n)?;
    let images = (1..=4 * n)
        .map(|j| {
            let l = scheme.label_of(j).expect("in range");
            let index = if l.inverted {
                if l.index == 1 {
                    n
                } else {
                    l.index - 1
                }
            } else if l.index == n {
                1
            } else {
                l.index + 1
            };
            (scheme.index_of(ArcLabel { index, ..l }).expect("in range") - 1) as u32
        })
        .collect();
    Ok(Permutation::from_zero_based(images))
}
