//! Closed-form minimal intersection numbers of filling pairs, and a
//! search-backed cross-check at small scale.

use std::fmt;

use thiserror::Error;

use crate::search::{enumerate, SearchError, SearchQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    /// The sphere with at most three punctures carries no filling pair.
    #[error("no filling pair exists on S_{{{genus},{punctures}}}")]
    NoFillingPair { genus: usize, punctures: usize },
    #[error("closed-form cases disagree at S_{{{genus},{punctures}}}: {values:?}")]
    Inconsistent {
        genus: usize,
        punctures: usize,
        values: Vec<usize>,
    },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// The closed-form case that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `g ∉ {0, 2}`, `p = 0`: `2g - 1`.
    Closed,
    /// `g ∉ {0, 2}`, `p ≥ 1`: `2g + p - 2`.
    Punctured,
    /// `g = 0`, `p ≥ 4`: `p - 2` for even `p`, `p - 1` for odd `p`.
    Sphere,
    /// `g = 2`, `p ≤ 2`: `4`.
    GenusTwoFew,
    /// `g = 2`, `p ≥ 2`: `2g + p - 2`.
    GenusTwoMany,
}

/// Every closed-form case that applies to `(g, p)`, with its value.
/// Two cases overlap at `(2, 2)`.
pub fn applicable_branches(genus: usize, punctures: usize) -> Vec<(Branch, usize)> {
    let (g, p) = (genus, punctures);
    let mut out = Vec::new();
    match g {
        0 => {
            if p >= 4 {
                out.push((Branch::Sphere, if p % 2 == 0 { p - 2 } else { p - 1 }));
            }
        }
        2 => {
            if p <= 2 {
                out.push((Branch::GenusTwoFew, 4));
            }
            if p >= 2 {
                out.push((Branch::GenusTwoMany, 2 * g + p - 2));
            }
        }
        _ if p == 0 => out.push((Branch::Closed, 2 * g - 1)),
        _ => out.push((Branch::Punctured, 2 * g + p - 2)),
    }
    out
}

/// Minimal geometric intersection number of a filling pair on `S_{g,p}`.
pub fn min_intersection(genus: usize, punctures: usize) -> Result<usize, TableError> {
    let branches = applicable_branches(genus, punctures);
    let Some(&(_, value)) = branches.first() else {
        return Err(TableError::NoFillingPair { genus, punctures });
    };
    if branches.iter().any(|&(_, v)| v != value) {
        return Err(TableError::Inconsistent {
            genus,
            punctures,
            values: branches.iter().map(|&(_, v)| v).collect(),
        });
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existence {
    /// `n + 2 - 2g` is below one or below `p`, so no permutation can fit.
    Infeasible,
    Empty,
    Found,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Infeasible => "infeasible",
            Existence::Empty => "empty",
            Existence::Found => "nonempty",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub genus: usize,
    pub punctures: usize,
    /// `(n, outcome)` for `n = 1..=n_max`.
    pub rows: Vec<(usize, Existence)>,
    pub smallest_found: Option<usize>,
    pub table_value: Option<usize>,
}

impl CrossValidation {
    /// True when the table value and the search agree within `1..=n_max`.
    pub fn agrees(&self) -> bool {
        let n_max = self.rows.len();
        match (self.smallest_found, self.table_value) {
            (Some(found), Some(table)) => found == table,
            (None, Some(table)) => table > n_max,
            (None, None) => true,
            (Some(_), None) => false,
        }
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, e) in &self.rows {
            writeln!(f, "n={n} {e}")?;
        }
        let show = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
        write!(
            f,
            "smallest={} table={} agree={}",
            show(self.smallest_found),
            show(self.table_value),
            self.agrees()
        )
    }
}

/// Searches `n = 1..=n_max` for filling permutations on `S_{g,p}` and
/// compares the first hit with [`min_intersection`].
pub fn cross_validate(
    genus: usize,
    punctures: usize,
    n_max: usize,
) -> Result<CrossValidation, TableError> {
    let table_value = match min_intersection(genus, punctures) {
        Ok(v) => Some(v),
        Err(TableError::NoFillingPair { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let faces = n as i64 + 2 - 2 * genus as i64;
        let outcome = if faces < 1 || (punctures as i64) > faces {
            Existence::Infeasible
        } else {
            let result = enumerate(&SearchQuery::new(genus, punctures, n).limit(Some(1)))?;
            if result.solutions.is_empty() {
                Existence::Empty
            } else {
                Existence::Found
            }
        };
        rows.push((n, outcome));
    }
    let smallest_found = rows
        .iter()
        .find(|(_, e)| *e == Existence::Found)
        .map(|&(n, _)| n);
    Ok(CrossValidation {
        genus,
        punctures,
        rows,
        smallest_found,
        table_value,
    })
}
