//! Explicit automorphisms of abelian surfaces with their expected invariant
//! lattices and fixed loci, and a runner that recomputes everything.
//!
//! Matrices act on `H^1 = Z^4` (column `j` is the image of `e_j`). Every
//! basis below is positively oriented for the complex structure, which is
//! what makes the signature of the invariant lattice meaningful.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{
    coinvariant_lattice, fixed_point_count, generated_group, h2_order, invariant_lattice,
    order_of, sign_invariant, wedge_square, ActionError, GroupType,
};
use crate::classification::{enumerate_table, family_dimension};
use crate::lattice::{
    discriminant, genus_fingerprint, isometry_search, Lattice, LatticeError, NamedLattice,
    DEFAULT_COEFF_BOUND,
};
use crate::linalg::poly::euler_phi;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("rescaling factor must be positive, got {0}")]
    InvalidFactor(i64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedLocus {
    Points(u64),
    /// Only `det(I - g) = 0` is checked; the component description is kept
    /// as a note.
    PositiveDimensional { components: String },
}

impl fmt::Display for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLocus::Points(n) => write!(f, "{}", plural_points(*n)),
            FixedLocus::PositiveDimensional { components } => {
                write!(f, "positive-dimensional ({components})")
            }
        }
    }
}

fn plural_points(n: impl fmt::Display) -> String {
    let n = n.to_string();
    if n == "1" {
        "1 point".into()
    } else {
        format!("{n} points")
    }
}

/// The group element `±σ^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Element {
    pub negated: bool,
    pub power: u32,
}

impl Element {
    pub fn matrix(self, g: &IntMatrix) -> IntMatrix {
        let m = g.pow(self.power).expect("square");
        if self.negated {
            -&m
        } else {
            m
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-")?;
        }
        write!(f, "σ")?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedExpectation {
    pub element: Element,
    pub locus: FixedLocus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleRecord {
    pub name: &'static str,
    pub description: &'static str,
    /// Order of the action on `H^2`.
    pub p: u32,
    pub g_h1: IntMatrix,
    pub order_h1: u32,
    pub group_type: GroupType,
    pub symplectic: bool,
    pub expected_t: NamedLattice,
    /// Expected coinvariant lattice, where it is known by name.
    pub expected_s: Option<NamedLattice>,
    /// An intersection matrix of `T` computed independently in some other
    /// basis (e.g. from curve classes).
    pub reported_gram: Option<IntMatrix>,
    pub fixed: Vec<FixedExpectation>,
    pub family_dim: Option<u32>,
}

impl ExampleRecord {
    pub fn minus_g_h1(&self) -> IntMatrix {
        -&self.g_h1
    }
}

fn matrix(rows: [[i64; 4]; 4]) -> IntMatrix {
    IntMatrix::from_rows(&rows)
}

fn name(s: &str) -> NamedLattice {
    s.parse().expect("catalog names parse")
}

fn points(negated: bool, power: u32, n: u64) -> FixedExpectation {
    FixedExpectation {
        element: Element { negated, power },
        locus: FixedLocus::Points(n),
    }
}

fn curves(negated: bool, power: u32, components: &str) -> FixedExpectation {
    FixedExpectation {
        element: Element { negated, power },
        locus: FixedLocus::PositiveDimensional {
            components: components.to_string(),
        },
    }
}

/// `σ` and `σ^2` with one locus, `-σ` and `-σ^2` with another.
fn order3_loci(plus: FixedLocus, minus: FixedLocus) -> Vec<FixedExpectation> {
    let mut out = Vec::new();
    for power in [1, 2] {
        out.push(FixedExpectation {
            element: Element { negated: false, power },
            locus: plus.clone(),
        });
    }
    for power in [1, 2] {
        out.push(FixedExpectation {
            element: Element { negated: true, power },
            locus: minus.clone(),
        });
    }
    out
}

/// The fixed catalog, in a stable order.
pub fn list_examples() -> Vec<ExampleRecord> {
    vec![
        // E x E' with (id, -id); basis λ1, λ2 of E then μ1, μ2 of E'.
        ExampleRecord {
            name: "p2_U",
            description: "E x E' with σ = (id, -id)",
            p: 2,
            g_h1: IntMatrix::diagonal(&[1, 1, -1, -1]),
            order_h1: 2,
            group_type: GroupType::TwoTimes(2),
            symplectic: false,
            expected_t: name("U"),
            expected_s: None,
            reported_gram: None,
            fixed: vec![curves(false, 1, "4 copies of E"), curves(true, 1, "4 copies of E'")],
            family_dim: Some(2),
        },
        // Quotient by (x0, x0') with x0 = λ1/2, x0' = μ1/2. Basis
        // f1 = (λ1 + μ1)/2, λ2, μ1, μ2; σ f1 = f1 - μ1.
        ExampleRecord {
            name: "p2_U2",
            description: "(E x E')/⟨(x0, x0')⟩ for 2-torsion points x0, x0'",
            p: 2,
            g_h1: matrix([[1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, -1, 0], [0, 0, 0, -1]]),
            order_h1: 2,
            group_type: GroupType::TwoTimes(2),
            symplectic: false,
            expected_t: name("U(2)"),
            expected_s: None,
            reported_gram: None,
            fixed: vec![curves(false, 1, "2 copies of E"), curves(true, 1, "2 copies of E'")],
            family_dim: Some(2),
        },
        // Quotient by two 2-torsion points. Basis (λ1 + μ1)/2, (λ2 + μ2)/2, μ1, μ2.
        ExampleRecord {
            name: "p2_2m2",
            description: "E x E' modulo a (Z/2)^2 of 2-torsion points",
            p: 2,
            g_h1: matrix([[1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, -1, 0], [0, -1, 0, -1]]),
            order_h1: 2,
            group_type: GroupType::TwoTimes(2),
            symplectic: false,
            expected_t: name("⟨2⟩ ⊕ ⟨-2⟩"),
            expected_s: None,
            // the genus two curve C and the elliptic curve E
            reported_gram: Some(IntMatrix::from_rows(&[[2, 2], [2, 0]])),
            fixed: vec![curves(false, 1, "E"), curves(true, 1, "E'")],
            family_dim: Some(2),
        },
        // E_i x E_i with (i, i); basis (1, i) on each factor.
        ExampleRecord {
            name: "p2_U4x4",
            description: "E_i x E_i with σ = (i, i)",
            p: 2,
            g_h1: matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
            order_h1: 4,
            group_type: GroupType::Cyclic(4),
            symplectic: false,
            expected_t: name("U ⊕ ⟨-2⟩^2"),
            expected_s: None,
            // E x 0, 0 x E, the diagonal and the graph of i
            reported_gram: Some(IntMatrix::from_rows(&[
                [0, 1, 1, 1],
                [1, 0, 1, 1],
                [1, 1, 0, 2],
                [1, 1, 2, 0],
            ])),
            fixed: vec![points(false, 1, 4), points(true, 1, 4)],
            family_dim: Some(0),
        },
        // E x E_ρ with (id, ρ), ρ = ζ3 acting on the basis (1, ζ3).
        ExampleRecord {
            name: "p3_U",
            description: "E x E_ρ with σ = (id, ρ)",
            p: 3,
            g_h1: matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]]),
            order_h1: 3,
            group_type: GroupType::TwoTimes(3),
            symplectic: false,
            expected_t: name("U"),
            expected_s: None,
            reported_gram: None,
            fixed: order3_loci(
                FixedLocus::PositiveDimensional {
                    components: "3 copies of E".into(),
                },
                FixedLocus::Points(4),
            ),
            family_dim: Some(1),
        },
        // Quotient by (x0, x0') with x0 = λ1/3 and x0' = (2 + ζ3)/3, which
        // ρ fixes. Basis f1 = (λ1 + 2μ1 + μ2)/3, λ2, μ1, μ2; σ f1 = f1 - μ1.
        ExampleRecord {
            name: "p3_U3",
            description: "(E x E_ρ)/⟨(x0, x0')⟩ for 3-torsion points, x0' fixed by ρ",
            p: 3,
            g_h1: matrix([[1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, 0, -1], [0, 0, 1, -1]]),
            order_h1: 3,
            group_type: GroupType::TwoTimes(3),
            symplectic: false,
            expected_t: name("U(3)"),
            expected_s: None,
            reported_gram: None,
            fixed: order3_loci(
                FixedLocus::PositiveDimensional {
                    components: "E".into(),
                },
                FixedLocus::Points(4),
            ),
            family_dim: Some(1),
        },
        ExampleRecord {
            name: "p3_UA2",
            description: "E_ρ x E_ρ with σ = (ρ, ρ)",
            p: 3,
            g_h1: matrix([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]]),
            order_h1: 3,
            group_type: GroupType::TwoTimes(3),
            symplectic: false,
            expected_t: name("U ⊕ A2(-1)"),
            expected_s: None,
            reported_gram: Some(IntMatrix::from_rows(&[
                [0, 1, 1, 1],
                [1, 0, 1, 1],
                [1, 1, 0, 3],
                [1, 1, 3, 0],
            ])),
            fixed: order3_loci(FixedLocus::Points(9), FixedLocus::Points(1)),
            family_dim: Some(0),
        },
        // C^2 / ⟨(1,1), (ζ, ζ^2), (ζ^2, ζ^4), (ζ^3, ζ)⟩ with σ = (ζ, ζ^2), ζ = ζ5:
        // e1 -> e2 -> e3 -> e4 -> -e1 - e2 - e3 - e4.
        ExampleRecord {
            name: "p5_H5",
            description: "Jacobian of y^2 = x^5 - 1 with σ = (ζ5, ζ5^2)",
            p: 5,
            g_h1: matrix([[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]),
            order_h1: 5,
            group_type: GroupType::TwoTimes(5),
            symplectic: false,
            expected_t: name("H5"),
            expected_s: None,
            reported_gram: Some(IntMatrix::from_rows(&[[10, 5], [5, 2]])),
            fixed: (1..=4)
                .map(|k| points(false, k, 5))
                .chain((1..=4).map(|k| points(true, k, 1)))
                .collect(),
            family_dim: Some(0),
        },
        // Λ = ⟨(1,0), (0,1), (x,y), (-y,x-y)⟩ with σ = [[0,-1],[1,-1]], in the
        // basis e1, e2, e4, e3. The last swap makes the basis positively
        // oriented, and σ becomes (ρ, ρ^2) on the two planes.
        ExampleRecord {
            name: "symp_order3",
            description: "symplectic σ of order 3, (ρ, ρ^-1) on two lattice planes",
            p: 3,
            g_h1: matrix([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, -1, 1], [0, 0, -1, 0]]),
            order_h1: 3,
            group_type: GroupType::Cyclic(6),
            symplectic: true,
            expected_t: name("U ⊕ A2"),
            expected_s: Some(name("A2(-1)")),
            reported_gram: None,
            fixed: vec![points(false, 1, 9)],
            family_dim: None,
        },
        // Λ = ⟨(1,0), (0,1), (x,-y), (y,x)⟩ with σ = [[0,-1],[1,0]], in the
        // basis e1, e2, e4, e3.
        ExampleRecord {
            name: "symp_order4",
            description: "symplectic σ of order 4, (i, -i) on two lattice planes",
            p: 2,
            g_h1: matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
            order_h1: 4,
            group_type: GroupType::Cyclic(4),
            symplectic: true,
            expected_t: name("U ⊕ A1^2"),
            expected_s: Some(name("⟨-2⟩^2")),
            reported_gram: None,
            fixed: vec![points(false, 1, 4)],
            family_dim: None,
        },
        // The y = 0 member E_x x E_x, σ(a, b) = (-b, a), in the product basis
        // (1,0), (x,0), (0,1), (0,x). Its fixed points are (a, a) with 2a = 0.
        ExampleRecord {
            name: "symp_order4_product",
            description: "symplectic σ(a, b) = (-b, a) on E_x x E_x",
            p: 2,
            g_h1: matrix([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]),
            order_h1: 4,
            group_type: GroupType::Cyclic(4),
            symplectic: true,
            expected_t: name("U ⊕ A1^2"),
            expected_s: Some(name("⟨-2⟩^2")),
            reported_gram: None,
            fixed: vec![points(false, 1, 4), points(true, 1, 4), points(false, 2, 16)],
            family_dim: None,
        },
    ]
}

pub fn find_example(name: &str) -> Result<ExampleRecord, CatalogError> {
    list_examples()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| CatalogError::UnknownExample(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub example: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.example,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: expected {}; computed {}",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.computed
            )?;
        }
        Ok(())
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display, pass: bool) {
        self.0.push(CheckResult {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    fn error(&mut self, name: impl Into<String>, expected: impl fmt::Display, err: impl fmt::Display) {
        self.push(name, expected, format!("error: {err}"), false);
    }
}

fn describe<T: fmt::Display, E: fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Looks up `name` and runs every check on it.
pub fn verify_example(name: &str) -> Result<VerificationReport, CatalogError> {
    Ok(verify_record(&find_example(name)?))
}

pub fn verify_all() -> Vec<VerificationReport> {
    list_examples().iter().map(verify_record).collect()
}

/// Whether `a` and `b` have equal fingerprints and an explicit isometry
/// turns up within the default coefficient bound.
fn isometric(a: &Lattice, b: &Lattice) -> Result<(bool, String), LatticeError> {
    let fa = genus_fingerprint(a)?;
    let fb = genus_fingerprint(b)?;
    if fa != fb {
        return Ok((false, format!("fingerprint {fa}")));
    }
    match isometry_search(a, b, DEFAULT_COEFF_BOUND)? {
        Some(p) => Ok((true, format!("witness P = {p}"))),
        None => Ok((false, "no witness within the coefficient bound".into())),
    }
}

pub fn verify_record(rec: &ExampleRecord) -> VerificationReport {
    let mut checks = Checks(Vec::new());
    let g = &rec.g_h1;

    // orders
    let h1 = order_of(g);
    let h2 = h2_order(g);
    let orders_ok = h1.as_ref().ok() == Some(&rec.order_h1) && h2.as_ref().ok() == Some(&rec.p);
    checks.push(
        "orders on H^1 / H^2",
        format!("{} / {}", rec.order_h1, rec.p),
        format!("{} / {}", describe(&h1), describe(&h2)),
        orders_ok,
    );

    let group = generated_group(g);
    checks.push(
        "group ⟨σ, -id⟩",
        rec.group_type,
        describe(&group),
        group.is_ok_and(|t| t.is_isomorphic(rec.group_type)),
    );

    match g.char_poly() {
        Ok(poly) => {
            let factors = poly.cyclotomic_factorization();
            let degree: Option<u32> = factors
                .as_ref()
                .map(|f| f.iter().map(|&(n, k)| k * euler_phi(n)).sum());
            let shown = match &factors {
                Some(f) => f
                    .iter()
                    .map(|&(n, k)| if k == 1 { format!("Φ{n}") } else { format!("Φ{n}^{k}") })
                    .collect::<Vec<_>>()
                    .join(" "),
                None => format!("{poly} (not cyclotomic)"),
            };
            checks.push(
                "characteristic polynomial",
                "product of cyclotomic polynomials of total degree 4",
                shown,
                degree == Some(4),
            );
        }
        Err(e) => checks.error("characteristic polynomial", "cyclotomic", e),
    }

    let action = match wedge_square(g) {
        Ok(a) => a,
        Err(e) => {
            checks.error("wedge square", "automorphism of Z^4", e);
            return finish(rec, checks);
        }
    };
    let sign_ok = sign_invariant(g).unwrap_or(false);
    checks.push("Λ²(-σ) = Λ²(σ)", true, sign_ok, sign_ok);

    let expected_t = match rec.expected_t.lattice() {
        Ok(l) => l,
        Err(e) => {
            checks.error("expected T", &rec.expected_t, e);
            return finish(rec, checks);
        }
    };
    let t = match invariant_lattice(&action) {
        Ok(t) => t,
        Err(e) => {
            checks.error("invariant lattice T", &rec.expected_t, e);
            return finish(rec, checks);
        }
    };
    match isometric(&t.lattice, &expected_t) {
        Ok((ok, detail)) => checks.push(
            "T ≅ expected",
            &rec.expected_t,
            format!("Gram {}, {detail}", t.lattice.gram()),
            ok,
        ),
        Err(e) => checks.error("T ≅ expected", &rec.expected_t, e),
    }
    if let Some(gram) = &rec.reported_gram {
        match Lattice::new(gram.clone()).and_then(|l| isometric(&l, &expected_t)) {
            Ok((ok, detail)) => checks.push(
                format!("reported Gram {gram} ≅ expected"),
                &rec.expected_t,
                detail,
                ok,
            ),
            Err(e) => checks.error(format!("reported Gram {gram}"), &rec.expected_t, e),
        }
    }

    let (plus, minus) = t.lattice.signature();
    let r = t.rank();
    let expected_sig = if rec.symplectic {
        (3, r.saturating_sub(3))
    } else {
        (1, r.saturating_sub(1))
    };
    checks.push(
        "signature of T",
        format!("{expected_sig:?}"),
        format!("{:?}", (plus, minus)),
        (plus, minus) == expected_sig,
    );

    match coinvariant_lattice(&action) {
        Ok(s) => {
            checks.push("rank T + rank S", 6, r + s.rank(), r + s.rank() == 6);
            let at = discriminant(&t.lattice);
            let as_ = discriminant(&s.lattice);
            let fmt_factors = |v: &[BigInt]| {
                format!(
                    "[{}]",
                    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
                )
            };
            checks.push(
                "A_T ≅ A_S",
                fmt_factors(&at.invariant_factors),
                fmt_factors(&as_.invariant_factors),
                at.invariant_factors == as_.invariant_factors,
            );
            match forms_are_opposite(&t.lattice, &s.lattice) {
                Ok(ok) => checks.push("q_S = -q_T (value distribution)", true, ok, ok),
                Err(e) => checks.error("q_S = -q_T (value distribution)", true, e),
            }
            if let Some(expected_s) = &rec.expected_s {
                match expected_s
                    .lattice()
                    .and_then(|l| isometric(&s.lattice, &l))
                {
                    Ok((ok, detail)) => checks.push(
                        "S ≅ expected",
                        expected_s,
                        format!("Gram {}, {detail}", s.lattice.gram()),
                        ok,
                    ),
                    Err(e) => checks.error("S ≅ expected", expected_s, e),
                }
            }
        }
        Err(e) => checks.error("coinvariant lattice S", "rank 6 - r", e),
    }

    for fe in &rec.fixed {
        let m = fe.element.matrix(g);
        let count = fixed_point_count(&m);
        let (ok, computed) = match (&fe.locus, &count) {
            (FixedLocus::Points(n), Ok(c)) => (*c == BigInt::from(*n), plural_points(c)),
            (FixedLocus::PositiveDimensional { .. }, Err(ActionError::PositiveDimensional)) => {
                (true, "det(I - g) = 0".to_string())
            }
            (_, Ok(c)) => (false, plural_points(c)),
            (_, Err(e)) => (false, format!("error: {e}")),
        };
        checks.push(format!("fixed locus of {}", fe.element), &fe.locus, computed, ok);
    }

    if is_prime(rec.p) {
        checks.push("rank T even", "even", r, r % 2 == 0);
    }

    if let Some(dim) = rec.family_dim {
        let computed = family_dimension(rec.p, r as u32);
        checks.push(
            "family dimension",
            dim,
            describe(&computed),
            computed.as_ref().ok() == Some(&dim),
        );
    }

    if !rec.symplectic {
        let found = enumerate_table(rec.p)
            .map(|rows| {
                rows.iter()
                    .any(|row| row.lattice_name == rec.expected_t && row.r as usize == r)
            })
            .unwrap_or(false);
        checks.push(
            "row of the classification table",
            format!("p = {}, T = {}", rec.p, rec.expected_t),
            if found { "present" } else { "absent" },
            found,
        );
    }

    finish(rec, checks)
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn finish(rec: &ExampleRecord, checks: Checks) -> VerificationReport {
    let passed = checks.0.iter().all(|c| c.pass);
    VerificationReport {
        example: rec.name.to_string(),
        checks: checks.0,
        passed,
    }
}

/// Whether the value distributions of `q_S` and `-q_T` agree, as they must
/// for orthogonal complements in a unimodular lattice.
fn forms_are_opposite(t: &Lattice, s: &Lattice) -> Result<bool, LatticeError> {
    let ft = genus_fingerprint(t)?;
    let fs = genus_fingerprint(s)?;
    if ft.even != fs.even {
        return Ok(false);
    }
    let modulus = num_rational::BigRational::from_integer(BigInt::from(if ft.even { 2 } else { 1 }));
    let mut negated: Vec<_> = ft
        .q_histogram
        .iter()
        .map(|(q, n)| {
            let neg = -q;
            let reduced = &neg - (&neg / &modulus).floor() * &modulus;
            (reduced, *n)
        })
        .collect();
    negated.sort();
    Ok(negated == fs.q_histogram)
}

/// `T(n)`: the transcendental lattice of the quotient K3 surface for a
/// symplectic automorphism of order `n` is the generic `T` scaled by `n`.
pub fn quotient_transcendental(t: &Lattice, n: i64) -> Result<Lattice, CatalogError> {
    if n < 1 {
        return Err(CatalogError::InvalidFactor(n));
    }
    Ok(t.rescale(&BigInt::from(n))?)
}
