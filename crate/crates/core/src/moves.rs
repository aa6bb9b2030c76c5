//! The double-bigon move: one crossing becomes three, creating two
//! punctured bigons and taking `(g, p, n)` to `(g, p + 2, n + 2)`.
//!
//! The move is carried out on a [`CrossingDiagram`], the list of crossings
//! of the two curves. A crossing sits where `a_i` starts (and `a_{i-1}`
//! ends) and where `b_k` starts. Looking along `a` with `a` heading down,
//! `b` heads either right (positive) or left (negative). The clockwise
//! corner rule then fixes `σ` on the four arcs entering the crossing.

use thiserror::Error;

use crate::perm::Permutation;
use crate::verifier::{validate, FillingInstance, ValidationReport, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("input instance is not valid:\n{0}")]
    InvalidInput(Box<ValidationReport>),
    #[error("no vertex class has smallest corner {0}")]
    NoSuchSite(usize),
    #[error("target punctures {target} cannot be reached from {from} in steps of 2")]
    TargetParity { from: usize, target: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("surgery produced an invalid instance:\n{0}")]
    Internal(Box<ValidationReport>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    /// `a_alpha` starts here (1-based).
    pub alpha: usize,
    /// `b_beta` starts here (1-based).
    pub beta: usize,
    pub positive: bool,
}

/// The intersection pattern of the two curves, with `n` crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingDiagram {
    n: usize,
    // indexed by alpha position - 1
    crossings: Vec<Crossing>,
}

fn alpha_sym(i: usize) -> usize {
    2 * i - 1
}

fn beta_sym(k: usize) -> usize {
    2 * k
}

impl CrossingDiagram {
    /// Builds a diagram from crossings whose alpha and beta positions each
    /// run over `1..=n` exactly once.
    pub fn new(mut crossings: Vec<Crossing>) -> Option<Self> {
        let n = crossings.len();
        if n == 0 {
            return None;
        }
        crossings.sort();
        let alphas_ok = crossings.iter().enumerate().all(|(i, c)| c.alpha == i + 1);
        let mut seen = vec![false; n];
        let betas_ok = crossings
            .iter()
            .all(|c| (1..=n).contains(&c.beta) && !std::mem::replace(&mut seen[c.beta - 1], true));
        (alphas_ok && betas_ok).then_some(CrossingDiagram { n, crossings })
    }

    /// Reads the diagram off a permutation that passes the equation and
    /// parity checks.
    pub fn from_sigma(sigma: &Permutation) -> Result<Self, VerifyError> {
        let n = crate::verifier::intersection_number(sigma)?;
        if !crate::verifier::check_equation(sigma)? || !sigma.is_parity_reversing().unwrap_or(false)
        {
            return Err(VerifyError::NotFilling(
                "crossings are only defined for filling permutations".into(),
            ));
        }
        let crossings = (1..=n)
            .map(|i| {
                let prev = if i == 1 { n } else { i - 1 };
                let s = sigma.apply(alpha_sym(prev));
                // s is a b-symbol: b_m' means positive with k = m + 1, b_m negative with k = m
                if s > 2 * n {
                    let m = (s - 2 * n) / 2;
                    Crossing {
                        alpha: i,
                        beta: m % n + 1,
                        positive: true,
                    }
                } else {
                    Crossing {
                        alpha: i,
                        beta: s / 2,
                        positive: false,
                    }
                }
            })
            .collect();
        CrossingDiagram::new(crossings).ok_or_else(|| {
            VerifyError::Internal("crossing positions do not form a bijection".into())
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    fn prev(&self, i: usize) -> usize {
        if i == 1 {
            self.n
        } else {
            i - 1
        }
    }

    fn inv(&self, s: usize) -> usize {
        s + 2 * self.n
    }

    /// The four `(incoming arc, next arc)` pairs of `σ` at crossing `c`.
    fn corners(&self, c: &Crossing) -> [(usize, usize); 4] {
        let (i, k) = (c.alpha, c.beta);
        let (ip, kp) = (self.prev(i), self.prev(k));
        let a_in = alpha_sym(ip);
        let a_out = alpha_sym(i);
        let b_in = beta_sym(kp);
        let b_out = beta_sym(k);
        if c.positive {
            [
                (a_in, self.inv(b_in)),
                (b_in, a_out),
                (self.inv(a_out), b_out),
                (self.inv(b_out), self.inv(a_in)),
            ]
        } else {
            [
                (a_in, b_out),
                (b_in, self.inv(a_in)),
                (self.inv(a_out), self.inv(b_in)),
                (self.inv(b_out), a_out),
            ]
        }
    }

    /// Corner symbols (incoming arcs) at crossing `c`.
    pub fn corner_symbols(&self, c: &Crossing) -> [usize; 4] {
        self.corners(c).map(|(a, _)| a)
    }

    pub fn to_sigma(&self) -> Permutation {
        let mut images = vec![0u32; 4 * self.n];
        for c in &self.crossings {
            for (from, to) in self.corners(c) {
                images[from - 1] = (to - 1) as u32;
            }
        }
        Permutation::from_zero_based(images)
    }

    /// Replaces crossing `at` by three crossings in a row along both
    /// curves. With `reversed`, `b` meets them in the opposite order to `a`.
    fn triple(&self, at: Crossing, reversed: bool) -> CrossingDiagram {
        let shift_a = |i: usize| if i > at.alpha { i + 2 } else { i };
        let shift_b = |k: usize| if k > at.beta { k + 2 } else { k };
        let mut crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .filter(|c| **c != at)
            .map(|c| Crossing {
                alpha: shift_a(c.alpha),
                beta: shift_b(c.beta),
                positive: c.positive,
            })
            .collect();
        for step in 0..3 {
            let beta = if reversed {
                at.beta + 2 - step
            } else {
                at.beta + step
            };
            crossings.push(Crossing {
                alpha: at.alpha + step,
                beta,
                positive: at.positive == (step != 1),
            });
        }
        CrossingDiagram::new(crossings).expect("positions stay a bijection")
    }
}

/// A crossing named by the smallest corner symbol of its vertex class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurgerySite {
    pub vertex_class: usize,
}

impl SurgerySite {
    pub fn new(smallest_corner: usize) -> Self {
        SurgerySite {
            vertex_class: smallest_corner,
        }
    }
}

/// Every site of a filling permutation, in ascending order.
pub fn sites(sigma: &Permutation) -> Result<Vec<SurgerySite>, VerifyError> {
    Ok(crate::verifier::vertex_classes(sigma)?
        .iter()
        .map(|c| SurgerySite::new(c[0]))
        .collect())
}

fn ensure_valid(inst: &FillingInstance) -> Result<(), MoveError> {
    let report = validate(inst);
    if report.is_valid() {
        Ok(())
    } else {
        Err(MoveError::InvalidInput(Box::new(report)))
    }
}

/// Applies the double-bigon move at `site`.
///
/// Arcs are renumbered from the old `a_1` and `b_1` (or their first
/// segments). The two faces that grow at the site are chosen, where
/// possible, to avoid turning an existing bigon into a square, so that the
/// bigon count rises by exactly two.
pub fn double_bigon(
    inst: &FillingInstance,
    site: SurgerySite,
) -> Result<FillingInstance, MoveError> {
    ensure_valid(inst)?;
    let diagram = CrossingDiagram::from_sigma(&inst.sigma)?;
    let at = *diagram
        .crossings()
        .iter()
        .find(|c| diagram.corner_symbols(c).iter().min() == Some(&site.vertex_class))
        .ok_or(MoveError::NoSuchSite(site.vertex_class))?;

    let bigons = inst.sigma.two_cycle_count();
    let forward = diagram.triple(at, false).to_sigma();
    let sigma = if forward.two_cycle_count() == bigons + 2 {
        forward
    } else {
        let backward = diagram.triple(at, true).to_sigma();
        if backward.two_cycle_count() == bigons + 2 {
            backward
        } else {
            forward
        }
    };

    let out = FillingInstance::new(sigma, inst.genus, inst.punctures + 2)?;
    let report = validate(&out);
    if !report.is_valid() {
        return Err(MoveError::Internal(Box::new(report)));
    }
    Ok(out)
}

/// Repeats the move at the smallest site until `target_p` punctures.
pub fn extend_to(inst: &FillingInstance, target_p: usize) -> Result<FillingInstance, MoveError> {
    if target_p < inst.punctures || !(target_p - inst.punctures).is_multiple_of(2) {
        return Err(MoveError::TargetParity {
            from: inst.punctures,
            target: target_p,
        });
    }
    ensure_valid(inst)?;
    let mut current = inst.clone();
    while current.punctures < target_p {
        let site = sites(&current.sigma)?[0];
        current = double_bigon(&current, site)?;
    }
    Ok(current)
}

/// The faces of `σ` with no corner at `site`, with arcs renumbered the way
/// the move renumbers them. These faces reappear unchanged after the move.
pub fn untouched_faces(
    sigma: &Permutation,
    site: SurgerySite,
) -> Result<Vec<Vec<usize>>, MoveError> {
    let diagram = CrossingDiagram::from_sigma(sigma)?;
    let n = diagram.n();
    let at = *diagram
        .crossings()
        .iter()
        .find(|c| diagram.corner_symbols(c).iter().min() == Some(&site.vertex_class))
        .ok_or(MoveError::NoSuchSite(site.vertex_class))?;
    let corners = diagram.corner_symbols(&at);
    let renumber = |s: usize| -> usize {
        let inverted = s > 2 * n;
        let base = if inverted { s - 2 * n } else { s };
        let is_alpha = base % 2 == 1;
        let mut index = base.div_ceil(2);
        if index > if is_alpha { at.alpha } else { at.beta } {
            index += 2;
        }
        let base = if is_alpha { 2 * index - 1 } else { 2 * index };
        if inverted {
            base + 2 * (n + 2)
        } else {
            base
        }
    };
    Ok(sigma
        .to_cycles()
        .cycles()
        .iter()
        .filter(|c| !c.iter().any(|s| corners.contains(s)))
        .map(|c| c.iter().map(|&s| renumber(s)).collect())
        .collect())
}
