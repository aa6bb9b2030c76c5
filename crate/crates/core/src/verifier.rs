//! Checking candidate filling permutations and gluing their polygons.
//!
//! A filling permutation `σ` on `4n` symbols lists, for each oriented arc,
//! the arc that follows it clockwise around its complementary polygon. It
//! must be parity reversing and satisfy `σ(Q(σ(j))) = τ(j)` for every `j`.
//!
//! Polygon corners are indexed by the symbol of the edge entering them.
//! The corner rotation `r = Q∘σ` walks the four corners meeting at one
//! crossing, so its orbits are the vertices of the glued surface.

use std::fmt;

use thiserror::Error;

use crate::encoding::{make_q, make_tau, ArcLabel, LabelScheme};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("degree {0} is not a positive multiple of 4")]
    Degree(usize),
    #[error("not a filling permutation: {0}")]
    NotFilling(String),
    #[error("cannot place {punctures} punctures on {faces} faces with {bigons} bigons")]
    InfeasiblePunctures {
        punctures: usize,
        faces: usize,
        bigons: usize,
    },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// `n` for a permutation of degree `4n`.
pub fn intersection_number(sigma: &Permutation) -> Result<usize, VerifyError> {
    let d = sigma.degree();
    if !d.is_multiple_of(4) {
        return Err(VerifyError::Degree(d));
    }
    Ok(d / 4)
}

/// A candidate `(σ, g, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingInstance {
    pub sigma: Permutation,
    pub genus: usize,
    pub punctures: usize,
}

impl FillingInstance {
    pub fn new(sigma: Permutation, genus: usize, punctures: usize) -> Result<Self, VerifyError> {
        intersection_number(&sigma)?;
        Ok(FillingInstance {
            sigma,
            genus,
            punctures,
        })
    }

    pub fn n(&self) -> usize {
        self.sigma.degree() / 4
    }

    /// `n + 2 - 2g`, the face count the instance must have.
    pub fn required_faces(&self) -> i64 {
        self.n() as i64 + 2 - 2 * self.genus as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    DegreeDivisibleBy4,
    ParityReversing,
    Equation,
    CycleCount,
    TwoCycles,
    PunctureFeasibility,
    VertexClassCount,
    EulerCharacteristic,
    Connectivity,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::DegreeDivisibleBy4,
        CheckKind::ParityReversing,
        CheckKind::Equation,
        CheckKind::CycleCount,
        CheckKind::TwoCycles,
        CheckKind::PunctureFeasibility,
        CheckKind::VertexClassCount,
        CheckKind::EulerCharacteristic,
        CheckKind::Connectivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::DegreeDivisibleBy4 => "degree-divisible-by-4",
            CheckKind::ParityReversing => "parity-reversing",
            CheckKind::Equation => "equation",
            CheckKind::CycleCount => "cycle-count",
            CheckKind::TwoCycles => "two-cycles",
            CheckKind::PunctureFeasibility => "puncture-feasibility",
            CheckKind::VertexClassCount => "vertex-class-count",
            CheckKind::EulerCharacteristic => "euler-characteristic",
            CheckKind::Connectivity => "connectivity",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    /// What was observed when the check failed.
    pub witness: Option<String>,
}

impl Check {
    fn new(kind: CheckKind, failure: Option<String>) -> Self {
        Check {
            kind,
            passed: failure.is_none(),
            witness: failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub n: usize,
    pub genus: usize,
    pub punctures: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> &Check {
        self.checks
            .iter()
            .find(|c| c.kind == kind)
            .expect("every kind is evaluated")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} genus={} punctures={}",
            self.n, self.genus, self.punctures
        )?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "PASS {}", c.kind.name())?,
                Some(w) => writeln!(f, "FAIL {}: {}", c.kind.name(), w)?,
            }
        }
        write!(f, "{}", if self.is_valid() { "VALID" } else { "INVALID" })
    }
}

/// `Q∘σ`; its orbits are the vertex classes.
pub fn corner_rotation(sigma: &Permutation) -> Result<Permutation, VerifyError> {
    let n = intersection_number(sigma)?;
    let q = make_q(n).map_err(|_| VerifyError::Degree(sigma.degree()))?;
    Ok(Permutation::compose(&q, sigma).expect("same degree"))
}

fn orbits(p: &Permutation) -> Vec<Vec<usize>> {
    p.to_cycles().cycles().to_vec()
}

/// Vertex classes as orbits of the corner rotation, each starting at its
/// smallest corner, sorted by that corner.
pub fn vertex_classes(sigma: &Permutation) -> Result<Vec<Vec<usize>>, VerifyError> {
    Ok(orbits(&corner_rotation(sigma)?))
}

/// First `j` where `σ(Q(σ(j))) ≠ τ(j)`, if any.
fn equation_violation(sigma: &Permutation, n: usize) -> Option<(usize, usize, usize)> {
    let q = make_q(n).expect("n >= 1");
    let tau = make_tau(n).expect("n >= 1");
    (1..=4 * n).find_map(|j| {
        let lhs = sigma.apply(q.apply(sigma.apply(j)));
        let rhs = tau.apply(j);
        (lhs != rhs).then_some((j, lhs, rhs))
    })
}

/// Whether `σ(Q(σ(j))) = τ(j)` holds for every symbol.
pub fn check_equation(sigma: &Permutation) -> Result<bool, VerifyError> {
    let n = intersection_number(sigma)?;
    if n == 0 {
        return Err(VerifyError::Degree(0));
    }
    Ok(equation_violation(sigma, n).is_none())
}

fn parity_violation(sigma: &Permutation) -> Option<usize> {
    (1..=sigma.degree()).find(|&j| (sigma.apply(j) + j).is_multiple_of(2))
}

/// Whether faces glued along `j ~ Q(j)` form a single component.
fn is_connected(sigma: &Permutation, n: usize) -> bool {
    let m = 4 * n;
    let mut face_of = vec![0usize; m];
    for (f, cycle) in sigma.to_cycles().cycles().iter().enumerate() {
        for &s in cycle {
            face_of[s - 1] = f;
        }
    }
    let faces = sigma.cycle_count();
    let mut parent: Vec<usize> = (0..faces).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = faces;
    for j in 0..m {
        let a = find(&mut parent, face_of[j]);
        let b = find(&mut parent, face_of[(j + 2 * n) % m]);
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

/// Evaluates every condition for `inst` to encode a filling pair on
/// `S_{g,p}` with `n` intersections. Failures are reported, never raised.
pub fn validate(inst: &FillingInstance) -> ValidationReport {
    let sigma = &inst.sigma;
    let n = inst.n();
    let g = inst.genus as i64;
    let p = inst.punctures;
    let mut checks = Vec::with_capacity(CheckKind::ALL.len());

    checks.push(Check::new(
        CheckKind::DegreeDivisibleBy4,
        (!sigma.degree().is_multiple_of(4) || n == 0).then(|| format!("degree {}", sigma.degree())),
    ));

    checks.push(Check::new(
        CheckKind::ParityReversing,
        parity_violation(sigma)
            .map(|j| format!("sigma({j}) = {} has the parity of {j}", sigma.apply(j))),
    ));

    checks.push(Check::new(
        CheckKind::Equation,
        equation_violation(sigma, n)
            .map(|(j, lhs, rhs)| format!("sigma(Q(sigma({j}))) = {lhs} but tau({j}) = {rhs}")),
    ));

    let faces = sigma.cycle_count();
    let required = inst.required_faces();
    checks.push(Check::new(
        CheckKind::CycleCount,
        (faces as i64 != required).then(|| {
            let twice_genus = n as i64 + 2 - faces as i64;
            let implied = if twice_genus % 2 == 0 {
                format!("{}", twice_genus / 2)
            } else {
                format!("{twice_genus}/2")
            };
            format!("{faces} cycles, expected n+2-2g = {required} (cycle count implies genus {implied})")
        }),
    ));

    let bigons = sigma.two_cycle_count();
    checks.push(Check::new(
        CheckKind::TwoCycles,
        (bigons > p).then(|| format!("{bigons} two-cycles exceed {p} punctures")),
    ));

    checks.push(Check::new(
        CheckKind::PunctureFeasibility,
        (p as i64 > required).then(|| format!("{p} punctures exceed n+2-2g = {required} faces")),
    ));

    let classes = vertex_classes(sigma).expect("degree checked");
    let bad_class = classes.iter().find(|c| c.len() != 4);
    checks.push(Check::new(
        CheckKind::VertexClassCount,
        (classes.len() != n || bad_class.is_some()).then(|| match bad_class {
            Some(c) => format!(
                "{} vertex classes, expected {n}; class at corner {} has size {}",
                classes.len(),
                c[0],
                c.len()
            ),
            None => format!("{} vertex classes, expected {n}", classes.len()),
        }),
    ));

    let euler = classes.len() as i64 - 2 * n as i64 + faces as i64;
    checks.push(Check::new(
        CheckKind::EulerCharacteristic,
        (euler != 2 - 2 * g).then(|| {
            format!(
                "V - E + F = {} - {} + {} = {euler}, expected 2-2g = {}",
                classes.len(),
                2 * n,
                faces,
                2 - 2 * g
            )
        }),
    ));

    checks.push(Check::new(
        CheckKind::Connectivity,
        (!is_connected(sigma, n)).then(|| "faces glue into more than one component".to_string()),
    ));

    ValidationReport {
        n,
        genus: inst.genus,
        punctures: p,
        checks,
    }
}

/// The oriented arc labels around one polygon, read clockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceWord(pub Vec<ArcLabel>);

impl FaceWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[ArcLabel] {
        &self.0
    }

    /// True when `other` is a cyclic rotation of this word.
    pub fn is_rotation_of(&self, other: &FaceWord) -> bool {
        self.len() == other.len()
            && (self.is_empty()
                || (0..self.len()).any(|r| {
                    self.0
                        .iter()
                        .cycle()
                        .skip(r)
                        .zip(other.0.iter())
                        .all(|(a, b)| a == b)
                }))
    }
}

impl fmt::Display for FaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// One labelled word per cycle of `σ`, in canonical cycle order.
pub fn faces_as_words(sigma: &Permutation) -> Result<Vec<FaceWord>, VerifyError> {
    let n = intersection_number(sigma)?;
    let scheme = LabelScheme::new(n).map_err(|_| VerifyError::Degree(sigma.degree()))?;
    Ok(sigma
        .to_cycles()
        .cycles()
        .iter()
        .map(|c| {
            FaceWord(
                c.iter()
                    .map(|&s| scheme.label_of(s).expect("in range"))
                    .collect(),
            )
        })
        .collect())
}

/// The closed surface obtained by gluing one polygon per cycle of `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedSurface {
    n: usize,
    face_cycles: Vec<Vec<usize>>,
    faces: Vec<FaceWord>,
    vertex_classes: Vec<Vec<usize>>,
    euler_characteristic: i64,
    genus: usize,
    connected: bool,
    punctured: Vec<bool>,
}

impl GluedSurface {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[FaceWord] {
        &self.faces
    }

    /// Symbols around each face, matching `faces()` entry for entry.
    pub fn face_cycles(&self) -> &[Vec<usize>] {
        &self.face_cycles
    }

    /// The edge glued to edge `j`, i.e. `Q(j)`.
    pub fn paired_edge(&self, j: usize) -> usize {
        let m = 4 * self.n;
        assert!((1..=m).contains(&j));
        (j - 1 + 2 * self.n) % m + 1
    }

    pub fn vertex_classes(&self) -> &[Vec<usize>] {
        &self.vertex_classes
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_classes.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.n
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler_characteristic
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Whether face `k` (0-based, canonical order) carries a puncture.
    pub fn punctured(&self) -> &[bool] {
        &self.punctured
    }

    pub fn puncture_count(&self) -> usize {
        self.punctured.iter().filter(|&&b| b).count()
    }

    /// Reads the filling permutation back off the face words.
    pub fn sigma(&self) -> Permutation {
        let scheme = LabelScheme::new(self.n).expect("n >= 1");
        let cycles: Vec<Vec<usize>> = self
            .faces
            .iter()
            .map(|w| {
                w.labels()
                    .iter()
                    .map(|&l| scheme.index_of(l).expect("label in range"))
                    .collect()
            })
            .collect();
        let d = crate::perm::CycleDecomposition::new(4 * self.n, cycles).expect("faces partition");
        Permutation::from_cycles(&d).expect("valid cycles")
    }

    /// One line per face: `F<k>: <labels>`, with a trailing ` *` on
    /// punctured faces.
    pub fn face_text(&self) -> String {
        let mut out = String::new();
        for (k, (w, &punct)) in self.faces.iter().zip(&self.punctured).enumerate() {
            out.push_str(&format!("F{}: {w}", k + 1));
            if punct {
                out.push_str(" *");
            }
            out.push('\n');
        }
        out
    }

    pub fn summary_line(&self) -> String {
        format!(
            "vertices={} edges={} faces={} euler={} genus={} connected={}",
            self.vertex_count(),
            self.edge_count(),
            self.face_count(),
            self.euler_characteristic,
            self.genus,
            self.connected
        )
    }
}

/// Glues the polygons of `σ` and places `punctures` punctures: every bigon
/// first, then the remaining faces in canonical order, at most one each.
pub fn glue(sigma: &Permutation, punctures: usize) -> Result<GluedSurface, VerifyError> {
    let n = intersection_number(sigma)?;
    if n == 0 {
        return Err(VerifyError::Degree(0));
    }
    if let Some(j) = parity_violation(sigma) {
        return Err(VerifyError::NotFilling(format!(
            "sigma({j}) = {} has the parity of {j}",
            sigma.apply(j)
        )));
    }
    if let Some((j, lhs, rhs)) = equation_violation(sigma, n) {
        return Err(VerifyError::NotFilling(format!(
            "sigma(Q(sigma({j}))) = {lhs} but tau({j}) = {rhs}"
        )));
    }

    let face_cycles = sigma.to_cycles().cycles().to_vec();
    let bigons = face_cycles.iter().filter(|c| c.len() == 2).count();
    if punctures > face_cycles.len() || bigons > punctures {
        return Err(VerifyError::InfeasiblePunctures {
            punctures,
            faces: face_cycles.len(),
            bigons,
        });
    }

    let vertex_classes = vertex_classes(sigma)?;
    if let Some(c) = vertex_classes.iter().find(|c| c.len() != 4) {
        return Err(VerifyError::Internal(format!(
            "vertex class at corner {} has size {}",
            c[0],
            c.len()
        )));
    }
    let euler = vertex_classes.len() as i64 - 2 * n as i64 + face_cycles.len() as i64;
    if euler > 2 || euler % 2 != 0 {
        return Err(VerifyError::Internal(format!(
            "euler characteristic {euler} of an orientable closed surface"
        )));
    }

    let mut punctured: Vec<bool> = face_cycles.iter().map(|c| c.len() == 2).collect();
    let mut remaining = punctures - bigons;
    for slot in punctured.iter_mut().filter(|b| !**b) {
        if remaining == 0 {
            break;
        }
        *slot = true;
        remaining -= 1;
    }

    Ok(GluedSurface {
        n,
        faces: faces_as_words(sigma)?,
        face_cycles,
        vertex_classes,
        euler_characteristic: euler,
        genus: ((2 - euler) / 2) as usize,
        connected: is_connected(sigma, n),
        punctured,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G2_SIGMA: &str = "(1,2,19,14)(3,8,15,16,9,4,17,18,5,10,11,12)(6,13,20,7)";

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn words(ws: &[FaceWord]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn equation_examples() {
        assert!(check_equation(&perm(G2_SIGMA)).unwrap());
        assert!(check_equation(&perm("(1,2,3,4)")).unwrap());
        assert!(!check_equation(&Permutation::identity(20).unwrap()).unwrap());
        assert_eq!(
            check_equation(&Permutation::parse("(1,2)", Some(6)).unwrap()),
            Err(VerifyError::Degree(6))
        );
    }

    #[test]
    fn instance_rejects_bad_degree() {
        let p = Permutation::parse("(1,2)", Some(6)).unwrap();
        assert_eq!(FillingInstance::new(p, 0, 0), Err(VerifyError::Degree(6)));
    }

    #[test]
    fn genus_two_instance_passes_everything() {
        let report = validate(&FillingInstance::new(perm(G2_SIGMA), 2, 3).unwrap());
        assert_eq!(report.n, 5);
        assert_eq!(report.checks.len(), 9);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn g2_sigma_without_punctures_is_still_valid() {
        let report = validate(&FillingInstance::new(perm(G2_SIGMA), 2, 0).unwrap());
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn sphere_instance_passes() {
        let report = validate(&FillingInstance::new(perm("(1,2)(3,6)(4,5)(7,8)"), 0, 4).unwrap());
        assert_eq!(report.n, 2);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn failures_carry_witnesses() {
        let report =
            validate(&FillingInstance::new(Permutation::identity(20).unwrap(), 2, 3).unwrap());
        assert!(!report.is_valid());
        let parity = report.check(CheckKind::ParityReversing);
        assert!(!parity.passed);
        assert!(parity.witness.as_ref().unwrap().contains("sigma(1) = 1"));
        assert!(!report.check(CheckKind::Equation).passed);

        // wrong genus: the cycle count implies g = 2
        let report = validate(&FillingInstance::new(perm(G2_SIGMA), 1, 3).unwrap());
        let cc = report.check(CheckKind::CycleCount);
        assert!(!cc.passed);
        assert!(cc.witness.as_ref().unwrap().contains("implies genus 2"));
        assert!(!report.check(CheckKind::EulerCharacteristic).passed);
        assert!(report.check(CheckKind::Equation).passed);

        // too few punctures for the bigons, too many for the faces
        let sphere = perm("(1,2)(3,6)(4,5)(7,8)");
        let report = validate(&FillingInstance::new(sphere.clone(), 0, 3).unwrap());
        assert_eq!(
            report.failures().map(|c| c.kind).collect::<Vec<_>>(),
            vec![CheckKind::TwoCycles]
        );
        let report = validate(&FillingInstance::new(sphere, 0, 5).unwrap());
        assert_eq!(
            report.failures().map(|c| c.kind).collect::<Vec<_>>(),
            vec![CheckKind::PunctureFeasibility]
        );
    }

    #[test]
    fn report_text() {
        let report = validate(&FillingInstance::new(perm("(1,2,3,4)"), 1, 0).unwrap());
        let text = report.to_string();
        assert!(text.starts_with("n=1 genus=1 punctures=0\nPASS degree-divisible-by-4\n"));
        assert!(text.ends_with("PASS connectivity\nVALID"));
    }

    #[test]
    fn glue_g2_sigma() {
        let s = glue(&perm(G2_SIGMA), 3).unwrap();
        assert_eq!(
            words(s.faces()),
            [
                "a1 b1 a5' b2'",
                "a2 b4 a3' b3' a5 b2 a4' b4' a3 b5 a1' b1'",
                "b3 a2' b5' a4",
            ]
        );
        assert_eq!(s.punctured(), &[true, true, true]);
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edge_count(), 10);
        assert_eq!(s.face_count(), 3);
        assert_eq!(s.euler_characteristic(), -2);
        assert_eq!(s.genus(), 2);
        assert!(s.is_connected());
        assert!(s.vertex_classes().iter().all(|c| c.len() == 4));
        assert_eq!(s.sigma(), perm(G2_SIGMA));
        assert_eq!(s.paired_edge(2), 12);
        assert_eq!(s.paired_edge(19), 9);
    }

    #[test]
    fn glue_torus() {
        let s = glue(&perm("(1,2,3,4)"), 0).unwrap();
        assert_eq!(words(s.faces()), ["a1 b1 a1' b1'"]);
        assert_eq!(s.vertex_classes(), &[vec![1, 4, 3, 2]]);
        assert_eq!(
            (s.vertex_count(), s.edge_count(), s.face_count()),
            (1, 2, 1)
        );
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.punctured(), &[false]);
    }

    #[test]
    fn glue_sphere_with_four_bigons() {
        let s = glue(&perm("(1,2)(3,6)(4,5)(7,8)"), 4).unwrap();
        assert_eq!(s.face_count(), 4);
        assert!(s.faces().iter().all(|w| w.len() == 2));
        assert_eq!(s.punctured(), &[true; 4]);
        assert_eq!(
            (
                s.vertex_count(),
                s.edge_count(),
                s.euler_characteristic(),
                s.genus()
            ),
            (2, 4, 2, 0)
        );
    }

    #[test]
    fn glue_assigns_bigons_first_then_ascending() {
        // this sigma has no bigons, so one puncture lands on the first face
        let s = glue(&perm(G2_SIGMA), 1).unwrap();
        assert_eq!(s.punctured(), &[true, false, false]);
        assert_eq!(
            s.face_text(),
            "F1: a1 b1 a5' b2' *\nF2: a2 b4 a3' b3' a5 b2 a4' b4' a3 b5 a1' b1'\nF3: b3 a2' b5' a4\n"
        );
    }

    #[test]
    fn glue_errors() {
        assert!(matches!(
            glue(&perm(G2_SIGMA), 4),
            Err(VerifyError::InfeasiblePunctures {
                punctures: 4,
                faces: 3,
                bigons: 0
            })
        ));
        assert!(matches!(
            glue(&perm("(1,2)(3,6)(4,5)(7,8)"), 2),
            Err(VerifyError::InfeasiblePunctures { bigons: 4, .. })
        ));
        assert!(matches!(
            glue(&Permutation::identity(8).unwrap(), 0),
            Err(VerifyError::NotFilling(_))
        ));
        assert!(matches!(
            glue(&perm("(1,2)(3,4)"), 0),
            Err(VerifyError::NotFilling(_))
        ));
    }

    #[test]
    fn rotation_check() {
        let a = FaceWord(vec![
            "a1".parse().unwrap(),
            "b1".parse().unwrap(),
            "a2".parse().unwrap(),
        ]);
        let b = FaceWord(vec![
            "b1".parse().unwrap(),
            "a2".parse().unwrap(),
            "a1".parse().unwrap(),
        ]);
        let c = FaceWord(vec![
            "b1".parse().unwrap(),
            "a1".parse().unwrap(),
            "a2".parse().unwrap(),
        ]);
        assert!(a.is_rotation_of(&b));
        assert!(!a.is_rotation_of(&c));
    }
}
