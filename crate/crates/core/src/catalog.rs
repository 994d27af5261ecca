//! Registry of generating-function identities.
//!
//! Every entry pairs an exact coefficient rule (the left-hand sum) with a
//! closed-form evaluator (the right-hand side, built on [`crate::special`])
//! and the domain on which the two agree. The verification harness iterates
//! over this registry.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{self, Rational};
use crate::special::{self, bernoulli, BesselKind, EllipticKind};

/// Partial sums are checked on `|z| <= 4` for entire functions.
pub const ENTIRE_REFERENCE_RADIUS: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{id}: z = {z} is outside the domain ({reason})")]
    OutOfDomain { id: String, z: f64, reason: String },
}

pub type TermFn = Box<dyn Fn(usize) -> Rational + Send + Sync>;
pub type SequenceFn = Box<dyn Fn(usize) -> Vec<Rational> + Send + Sync>;
pub type ClosedFn = Box<dyn Fn(f64) -> Result<f64, String> + Send + Sync>;

/// How the coefficient of `z^n` is produced.
pub enum CoeffRule {
    /// Each coefficient independently from `n`.
    Term(TermFn),
    /// All coefficients `0..=n` at once (for recurrences).
    Sequence(SequenceFn),
}

impl CoeffRule {
    pub fn coefficient(&self, n: usize) -> Rational {
        match self {
            CoeffRule::Term(f) => f(n),
            CoeffRule::Sequence(f) => f(n).swap_remove(n),
        }
    }

    /// Coefficients of `z^0 ..= z^order`.
    pub fn coefficients(&self, order: usize) -> Vec<Rational> {
        match self {
            CoeffRule::Term(f) => (0..=order).map(f).collect(),
            CoeffRule::Sequence(f) => f(order),
        }
    }
}

/// Behaviour of the series on its circle of convergence (real points only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Diverges at both `z = ±radius`.
    Open,
    /// Converges at both `z = ±radius`, except any excluded points.
    Closed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceDomain {
    /// Radius of convergence; `f64::INFINITY` for entire functions.
    pub radius: f64,
    pub boundary: Boundary,
    /// Real points where the identity fails even though `|z| <= radius`.
    pub excluded_points: Vec<f64>,
    pub notes: &'static str,
}

impl ConvergenceDomain {
    pub fn disk(radius: f64, boundary: Boundary) -> Self {
        ConvergenceDomain { radius, boundary, excluded_points: Vec::new(), notes: "" }
    }

    pub fn entire() -> Self {
        ConvergenceDomain::disk(f64::INFINITY, Boundary::Open)
    }

    pub fn unit() -> Self {
        ConvergenceDomain::disk(1.0, Boundary::Open)
    }

    pub fn excluding(mut self, points: &[f64]) -> Self {
        self.excluded_points.extend_from_slice(points);
        self
    }

    pub fn with_notes(mut self, notes: &'static str) -> Self {
        self.notes = notes;
        self
    }

    pub fn is_entire(&self) -> bool {
        self.radius.is_infinite()
    }

    pub fn contains(&self, z: f64) -> bool {
        if !z.is_finite() || self.excluded_points.contains(&z) {
            return false;
        }
        let a = z.abs();
        a < self.radius || (a == self.radius && self.boundary == Boundary::Closed)
    }

    /// Radius the sample policy scales by.
    pub fn sample_radius(&self) -> f64 {
        if self.is_entire() {
            ENTIRE_REFERENCE_RADIUS
        } else {
            self.radius
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    Mixed,
}

/// A closed form that is a ratio of integer polynomials (lowest degree first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalForm {
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

impl RationalForm {
    /// `numerator / (1 - z)^power`.
    pub fn over_one_minus_z(numerator: &[i64], power: u32) -> Self {
        let denominator = (0..=power as u64)
            .map(|k| {
                let c = i64::try_from(exact::choose(power as u64, k)).expect("small binomial");
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        RationalForm { numerator: numerator.to_vec(), denominator }
    }
}

pub struct IdentityEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Handbook citation or the displayed formula.
    pub anchor: &'static str,
    /// Which powers appear, normalizations folded into the closed form, etc.
    pub variable_map: &'static str,
    pub domain: ConvergenceDomain,
    pub parity: Parity,
    /// Reason the closed form is unavailable for `z < 0`, if it is.
    pub nonnegative_only: Option<&'static str>,
    pub rational_form: Option<RationalForm>,
    pub coeff_rule: CoeffRule,
    closed: ClosedFn,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry").field("id", &self.id).field("anchor", &self.anchor).finish_non_exhaustive()
    }
}

impl IdentityEntry {
    pub fn new(
        id: &'static str,
        description: &'static str,
        anchor: &'static str,
        coeff_rule: CoeffRule,
        closed: impl Fn(f64) -> Result<f64, String> + Send + Sync + 'static,
        domain: ConvergenceDomain,
    ) -> Self {
        IdentityEntry {
            id,
            description,
            anchor,
            variable_map: "",
            domain,
            parity: Parity::Mixed,
            nonnegative_only: None,
            rational_form: None,
            coeff_rule,
            closed: Box::new(closed),
        }
    }

    pub fn variable_map(mut self, notes: &'static str) -> Self {
        self.variable_map = notes;
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn nonnegative_only(mut self, reason: &'static str) -> Self {
        self.nonnegative_only = Some(reason);
        self
    }

    pub fn rational_form(mut self, form: RationalForm) -> Self {
        self.rational_form = Some(form);
        self
    }

    pub fn coefficient(&self, n: usize) -> Rational {
        self.coeff_rule.coefficient(n)
    }

    pub fn coefficients(&self, order: usize) -> Vec<Rational> {
        self.coeff_rule.coefficients(order)
    }

    /// Right-hand side at `z`, after the domain checks.
    pub fn closed_form(&self, z: f64) -> Result<f64, CatalogError> {
        let out = |reason: String| CatalogError::OutOfDomain { id: self.id.to_string(), z, reason };
        if !self.domain.contains(z) {
            return Err(out(format!("|z| must be below the radius {}", self.domain.radius)));
        }
        if z < 0.0 {
            if let Some(reason) = self.nonnegative_only {
                return Err(out(reason.to_string()));
            }
        }
        (self.closed)(z).map_err(out)
    }
}

/// Immutable registry, built once.
pub struct Catalog {
    entries: Vec<IdentityEntry>,
    index: HashMap<&'static str, usize>,
}

impl Catalog {
    fn build() -> Catalog {
        let mut entries = builtin_entries();
        entries.extend(crate::lagrange::catalog_entries());
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            let previous = index.insert(e.id, i);
            assert!(previous.is_none(), "duplicate identity id {}", e.id);
        }
        Catalog { entries, index }
    }

    pub fn global() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    pub fn entries(&self) -> &[IdentityEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&IdentityEntry, CatalogError> {
        self.index.get(id).map(|&i| &self.entries[i]).ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))
    }
}

pub fn list_identities() -> Vec<&'static str> {
    Catalog::global().entries().iter().map(|e| e.id).collect()
}

pub fn entry(id: &str) -> Result<&'static IdentityEntry, CatalogError> {
    Catalog::global().get(id)
}

pub fn coefficient(id: &str, n: usize) -> Result<Rational, CatalogError> {
    Ok(entry(id)?.coefficient(n))
}

pub fn closed_form(id: &str, z: f64) -> Result<f64, CatalogError> {
    entry(id)?.closed_form(z)
}

pub fn domain(id: &str) -> Result<ConvergenceDomain, CatalogError> {
    Ok(entry(id)?.domain.clone())
}

/// Number of leading coefficients in the text export.
pub const EXPORT_COEFFICIENTS: usize = 8;

/// One record per entry: id, anchor, domain, and the first eight coefficients.
pub fn export_table() -> String {
    let mut out = String::new();
    for e in Catalog::global().entries() {
        let radius = if e.domain.is_entire() { "inf".to_string() } else { format_radius(e.domain.radius) };
        let boundary = match e.domain.boundary {
            Boundary::Open => "open",
            Boundary::Closed => "closed",
        };
        let coeffs: Vec<String> = e.coefficients(EXPORT_COEFFICIENTS - 1).iter().map(exact::format_rational).collect();
        writeln!(out, "id: {}", e.id).unwrap();
        writeln!(out, "  anchor: {}", e.anchor).unwrap();
        let excluded: Vec<String> = e.domain.excluded_points.iter().map(|p| p.to_string()).collect();
        writeln!(out, "  domain: radius={radius} boundary={boundary} excluded=[{}]", excluded.join(", ")).unwrap();
        writeln!(out, "  coefficients: {}", coeffs.join(" ")).unwrap();
    }
    out
}

fn format_radius(r: f64) -> String {
    if (r - 2.0 * PI).abs() < 1e-15 {
        "2pi".into()
    } else if (r - PI).abs() < 1e-15 {
        "pi".into()
    } else if (r - (-1f64).exp()).abs() < 1e-15 {
        "1/e".into()
    } else {
        r.to_string()
    }
}

fn zero() -> Rational {
    Rational::zero()
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn term(f: impl Fn(usize) -> Rational + Send + Sync + 'static) -> CoeffRule {
    CoeffRule::Term(Box::new(f))
}

/// `f(k)` is the coefficient of `z^(2k+1)`; even powers vanish.
fn odd_powers(f: impl Fn(usize) -> Rational + Send + Sync + 'static) -> CoeffRule {
    term(move |n| if n % 2 == 1 { f(n / 2) } else { zero() })
}

/// `f(k)` is the coefficient of `z^(2k)`; odd powers vanish.
fn even_powers(f: impl Fn(usize) -> Rational + Send + Sync + 'static) -> CoeffRule {
    term(move |n| if n % 2 == 0 { f(n / 2) } else { zero() })
}

fn special_err(e: special::SpecialError) -> String {
    e.to_string()
}

fn int(n: usize) -> Rational {
    exact::int(n as i64)
}

fn fact(n: usize) -> Rational {
    exact::factorial_rational(n as u64)
}

fn central(n: usize) -> Rational {
    Rational::new(exact::choose(2 * n as u64, n as u64), exact::pow_u64(4, n as u32))
}

/// Shared `x^i / (1 - z)^j`-type rational closed forms.
fn rational_closed(form: &RationalForm) -> impl Fn(f64) -> Result<f64, String> + Send + Sync + 'static {
    let num: Vec<f64> = form.numerator.iter().map(|&c| c as f64).collect();
    let den: Vec<f64> = form.denominator.iter().map(|&c| c as f64).collect();
    move |z| Ok(crate::series::horner(&num, z) / crate::series::horner(&den, z))
}

fn rational_entry(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    rule: CoeffRule,
    form: RationalForm,
) -> IdentityEntry {
    let closed = rational_closed(&form);
    IdentityEntry::new(id, description, anchor, rule, closed, ConvergenceDomain::unit()).rational_form(form)
}

/// Parameters for the parametrized families. Chosen rational so the
/// coefficient rules stay exact.
pub const BINOMIAL_R: (i64, i64) = (1, 2);
pub const NEGATIVE_BINOMIAL_S: (i64, i64) = (5, 2);
pub const FALLING_I: u64 = 3;
pub const RISING_I: u64 = 4;
pub const GAMMA_STAR_A: (i64, i64) = (1, 2);
pub const BESSEL_NU: i64 = 1;
pub const BERNOULLI_A: (i64, i64) = (1, 3);
pub const POLYLOG_S: i64 = 3;

fn builtin_entries() -> Vec<IdentityEntry> {
    let mut v = Vec::new();

    // Binomial families.
    let r = exact::ratio(BINOMIAL_R.0, BINOMIAL_R.1);
    let r_f = BINOMIAL_R.0 as f64 / BINOMIAL_R.1 as f64;
    v.push(
        IdentityEntry::new(
            "binomial",
            "binomial series with r = 1/2",
            "3.6.8: sum C(r,n) z^n = (1+z)^r",
            term(move |n| exact::binomial(&r, n as u64)),
            move |z| Ok((1.0 + z).powf(r_f)),
            ConvergenceDomain::disk(1.0, Boundary::Closed).with_notes("converges on |z| = 1 for r > 0"),
        )
        .variable_map("r fixed to 1/2"),
    );
    let s = exact::ratio(NEGATIVE_BINOMIAL_S.0, NEGATIVE_BINOMIAL_S.1);
    let s_f = NEGATIVE_BINOMIAL_S.0 as f64 / NEGATIVE_BINOMIAL_S.1 as f64;
    v.push(
        IdentityEntry::new(
            "negative-binomial",
            "negative binomial series with s = 5/2",
            "3.6.9: sum C(n+s-1,n) z^n = sum (s)_n z^n/n! = (1-z)^(-s)",
            term(move |n| exact::pochhammer(&s, n as u64) / fact(n)),
            move |z| Ok((1.0 - z).powf(-s_f)),
            ConvergenceDomain::unit(),
        )
        .variable_map("s fixed to 5/2"),
    );
    v.push(rational_entry(
        "geometric",
        "geometric series",
        "3.6.10: sum z^n = 1/(1-z)",
        term(|_| Rational::one()),
        RationalForm::over_one_minus_z(&[1], 1),
    ));
    v.push(rational_entry(
        "n-first",
        "first moment",
        "sum n z^n = z/(1-z)^2",
        term(int),
        RationalForm::over_one_minus_z(&[0, 1], 2),
    ));
    v.push(rational_entry(
        "n-squared",
        "second moment",
        "sum n^2 z^n = (z+z^2)/(1-z)^3",
        term(|n| int(n * n)),
        RationalForm::over_one_minus_z(&[0, 1, 1], 3),
    ));
    v.push(rational_entry(
        "n-cubed",
        "third moment",
        "sum n^3 z^n = (z+4z^2+z^3)/(1-z)^4",
        term(|n| int(n * n * n)),
        RationalForm::over_one_minus_z(&[0, 1, 4, 1], 4),
    ));
    v.push(rational_entry(
        "n-fourth",
        "fourth moment",
        "sum n^4 z^n = (z+11z^2+11z^3+z^4)/(1-z)^5",
        term(|n| int(n * n * n * n)),
        RationalForm::over_one_minus_z(&[0, 1, 11, 11, 1], 5),
    ));
    v.push(rational_entry(
        "falling-2",
        "falling factorial n(n-1)",
        "sum n(n-1) z^n = 2 sum C(n,2) z^n = 2z^2/(1-z)^3",
        term(|n| int(n * n.saturating_sub(1))),
        RationalForm::over_one_minus_z(&[0, 0, 2], 3),
    ));
    let mut falling_num = vec![0; FALLING_I as usize];
    falling_num.push(1);
    v.push(
        rational_entry(
            "choose-n-i",
            "binomial coefficient C(n,i) with i = 3",
            "sum C(n,i) z^n = z^i/(1-z)^(i+1)",
            term(|n| {
                Rational::from_integer(if n as u64 >= FALLING_I {
                    exact::choose(n as u64, FALLING_I)
                } else {
                    0.into()
                })
            }),
            RationalForm::over_one_minus_z(&falling_num, FALLING_I as u32 + 1),
        )
        .variable_map("i fixed to 3; the 1/i! falling-factorial form is the same sum"),
    );
    v.push(rational_entry(
        "rising-1",
        "rising factor n+1",
        "sum (n+1) z^n = 1/(1-z)^2",
        term(|n| int(n + 1)),
        RationalForm::over_one_minus_z(&[1], 2),
    ));
    v.push(
        rational_entry(
            "rising-2",
            "rising product (n+1)(n+2)",
            "(1/2) sum (n+1)(n+2) z^n = 1/(1-z)^3",
            term(|n| int((n + 1) * (n + 2))),
            RationalForm::over_one_minus_z(&[2], 3),
        )
        .variable_map("coefficient (n+1)(n+2); the factor 1/2 moves to the closed form"),
    );
    v.push(
        rational_entry(
            "choose-n-plus-i",
            "binomial coefficient C(n+i,i) with i = 4",
            "sum C(n+i,i) z^n = 1/(1-z)^(i+1)",
            term(|n| Rational::from_integer(exact::choose(n as u64 + RISING_I, RISING_I))),
            RationalForm::over_one_minus_z(&[1], RISING_I as u32 + 1),
        )
        .variable_map("i fixed to 4"),
    );

    // Central binomial families.
    v.push(IdentityEntry::new(
        "central-binomial",
        "central binomial coefficients",
        "sum C(2n,n) z^n/2^(2n) = sum (1/2)_n z^n/n! = (1-z)^(-1/2)",
        term(central),
        |z| Ok((1.0 - z).powf(-0.5)),
        ConvergenceDomain::unit(),
    ));
    v.push(
        IdentityEntry::new(
            "catalan-like",
            "central binomial over n+1",
            "sum C(2n,n) z^n/(2^(2n)(n+1)) = 2[1-(1-z)^(1/2)]/z",
            term(|n| central(n) / int(n + 1)),
            |z| Ok(if z == 0.0 { 1.0 } else { 2.0 * (1.0 - (1.0 - z).sqrt()) / z }),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .variable_map("removable singularity at z = 0 takes the limit value 1"),
    );
    v.push(
        IdentityEntry::new(
            "catalan-like-2",
            "central binomial over (n+1)(n+2)",
            "sum C(2n,n) z^n/(2^(2n)(n+1)(n+2)) = 4[(1-z)^(3/2) - 1 + 3z/2]/(3z^2)",
            term(|n| central(n) / int((n + 1) * (n + 2))),
            |z| Ok(if z == 0.0 { 0.5 } else { 4.0 * ((1.0 - z).powf(1.5) - 1.0 + 1.5 * z) / (3.0 * z * z) }),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .variable_map("removable singularity at z = 0 takes the limit value 1/2"),
    );

    // Logarithm and inverse trigonometric functions.
    v.push(IdentityEntry::new(
        "log",
        "logarithm",
        "4.1.24: sum_{n>=1} z^n/n = -ln(1-z)",
        term(|n| if n == 0 { zero() } else { exact::ratio(1, n as i64) }),
        |z| Ok(-(-z).ln_1p()),
        ConvergenceDomain::disk(1.0, Boundary::Closed).excluding(&[1.0]).with_notes("converges at z = -1 only"),
    ));
    v.push(
        IdentityEntry::new(
            "dilogarithm",
            "Euler's dilogarithm g_2",
            "27.7.1: sum_{n>=1} z^n/n^2 = -int_0^z ln(1-t)/t dt = g_2(z)",
            term(|n| if n == 0 { zero() } else { exact::ratio(1, (n * n) as i64) }),
            |z| special::polylog(2.0, z).map_err(special_err),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .variable_map("summation variable t read as z"),
    );
    v.push(
        IdentityEntry::new(
            "arctanh",
            "inverse hyperbolic tangent",
            "4.6.22/4.6.33: sum z^(2n+1)/(2n+1) = int_0^z dt/(1-t^2) = (1/2) ln[(1+z)/(1-z)]",
            odd_powers(|k| exact::ratio(1, 2 * k as i64 + 1)),
            |z| Ok(z.atanh()),
            ConvergenceDomain::unit(),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "arctan",
            "inverse tangent",
            "4.4.42: sum (-1)^n z^(2n+1)/(2n+1) = int_0^z dt/(1+t^2) = arctan z",
            odd_powers(|k| sign(k) / int(2 * k + 1)),
            |z| Ok(z.atan()),
            ConvergenceDomain::disk(1.0, Boundary::Closed).with_notes("boundary-convergent: arctan 1 = pi/4"),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "arcsin",
            "inverse sine",
            "4.4.40: sum C(2n,n) z^(2n+1)/(2^(2n)(2n+1)) = int_0^z dt/(1-t^2)^(1/2) = arcsin z",
            odd_powers(|k| central(k) / int(2 * k + 1)),
            |z| Ok(z.asin()),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "arcsinh",
            "inverse hyperbolic sine",
            "4.6.31: sum C(2n,n) (-1)^n z^(2n+1)/(2^(2n)(2n+1)) = ln[z + (z^2+1)^(1/2)]",
            odd_powers(|k| sign(k) * central(k) / int(2 * k + 1)),
            |z| Ok(z.asinh()),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .parity(Parity::Odd),
    );
    let squared_coefficient = |k: usize| {
        let f = fact(k);
        Rational::from_integer(exact::pow_u64(2, 2 * k as u32)) * &f * &f / (int(k + 1) * fact(2 * k + 1))
    };
    v.push(
        IdentityEntry::new(
            "arcsin-squared",
            "squared inverse sine over z",
            "sum 2^(2n) (n!)^2 z^(2n)/((n+1)(2n+1)!) = (arcsin z / z)^2",
            even_powers(squared_coefficient),
            |z| Ok(if z == 0.0 { 1.0 } else { (z.asin() / z).powi(2) }),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .parity(Parity::Even)
        .variable_map("removable singularity at z = 0 takes the limit value 1"),
    );
    v.push(
        IdentityEntry::new(
            "arcsinh-squared",
            "squared inverse hyperbolic sine over z",
            "sum (-1)^n 2^(2n) (n!)^2 z^(2n)/((n+1)(2n+1)!) = (arcsinh z / z)^2",
            even_powers(move |k| sign(k) * squared_coefficient(k)),
            |z| Ok(if z == 0.0 { 1.0 } else { (z.asinh() / z).powi(2) }),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .parity(Parity::Even),
    );

    // Exponential, trigonometric, hyperbolic.
    v.push(IdentityEntry::new(
        "exp",
        "exponential",
        "4.2.1: sum z^n/n! = e^z",
        term(fact_recip),
        |z| Ok(z.exp()),
        ConvergenceDomain::entire(),
    ));
    v.push(
        IdentityEntry::new(
            "sinh",
            "hyperbolic sine",
            "4.5.62: sum z^(2n+1)/(2n+1)! = sinh z",
            odd_powers(|k| fact_recip(2 * k + 1)),
            |z| Ok(z.sinh()),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "sin",
            "sine",
            "4.3.65: sum (-1)^n z^(2n+1)/(2n+1)! = sin z",
            odd_powers(|k| sign(k) * fact_recip(2 * k + 1)),
            |z| Ok(z.sin()),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "cosh",
            "hyperbolic cosine",
            "4.5.63: sum z^(2n)/(2n)! = cosh z",
            even_powers(|k| fact_recip(2 * k)),
            |z| Ok(z.cosh()),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even),
    );
    v.push(
        IdentityEntry::new(
            "cos",
            "cosine",
            "4.3.66: sum (-1)^n z^(2n)/(2n)! = cos z",
            even_powers(|k| sign(k) * fact_recip(2 * k)),
            |z| Ok(z.cos()),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even),
    );

    // Exponential, sine and cosine integrals.
    let ln_reason = "closed form contains ln z";
    v.push(
        IdentityEntry::new(
            "ei",
            "exponential integral Ei",
            "5.1.10: sum_{n>=1} z^n/(n n!) = int_0^z (e^t - 1)/t dt = Ei(z) - gamma - ln z",
            term(|n| if n == 0 { zero() } else { fact_recip(n) / int(n) }),
            |z| {
                if z == 0.0 {
                    return Ok(0.0);
                }
                Ok(special::expint::ei(z).map_err(special_err)? - special::euler_gamma() - z.ln())
            },
            ConvergenceDomain::entire(),
        )
        .nonnegative_only(ln_reason)
        .variable_map("z = 0 takes the limit value 0"),
    );
    v.push(
        IdentityEntry::new(
            "e1",
            "exponential integral E1",
            "5.1.11: sum_{n>=1} (-1)^n z^n/(n n!) = int_0^z (e^-t - 1)/t dt = -E1(z) - gamma - ln z",
            term(|n| if n == 0 { zero() } else { sign(n) * fact_recip(n) / int(n) }),
            |z| {
                if z == 0.0 {
                    return Ok(0.0);
                }
                Ok(-special::expint::e1(z).map_err(special_err)? - special::euler_gamma() - z.ln())
            },
            ConvergenceDomain::entire(),
        )
        .nonnegative_only(ln_reason)
        .variable_map("z = 0 takes the limit value 0"),
    );
    let odd_integral = |k: usize| fact_recip(2 * k + 1) / int(2 * k + 1);
    v.push(
        IdentityEntry::new(
            "shi",
            "hyperbolic sine integral",
            "5.2.3: sum z^(2n+1)/((2n+1)(2n+1)!) = int_0^z sinh t/t dt = Shi(z)",
            odd_powers(odd_integral),
            |z| Ok(special::expint::shi(z)),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "si",
            "sine integral",
            "5.2.1: sum (-1)^n z^(2n+1)/((2n+1)(2n+1)!) = int_0^z sin t/t dt = Si(z)",
            odd_powers(move |k| sign(k) * odd_integral(k)),
            |z| Ok(special::expint::si(z)),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd),
    );
    let even_integral = |k: usize| if k == 0 { zero() } else { fact_recip(2 * k) / int(2 * k) };
    v.push(
        IdentityEntry::new(
            "chi",
            "hyperbolic cosine integral",
            "5.2.4: sum_{n>=1} z^(2n)/(2n (2n)!) = int_0^z (cosh t - 1)/t dt = Chi(z) - gamma - ln z",
            even_powers(even_integral),
            |z| {
                if z == 0.0 {
                    return Ok(0.0);
                }
                let a = z.abs();
                Ok(special::expint::chi(a).map_err(special_err)? - special::euler_gamma() - a.ln())
            },
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even)
        .variable_map("even in z: evaluated at |z|; z = 0 takes the limit value 0"),
    );
    v.push(
        IdentityEntry::new(
            "ci",
            "cosine integral",
            "5.2.2: sum_{n>=1} (-1)^n z^(2n)/(2n (2n)!) = int_0^z (cos t - 1)/t dt = Ci(z) - gamma - ln z",
            even_powers(move |k| sign(k) * even_integral(k)),
            |z| {
                if z == 0.0 {
                    return Ok(0.0);
                }
                let a = z.abs();
                Ok(special::expint::ci(a).map_err(special_err)? - special::euler_gamma() - a.ln())
            },
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even)
        .variable_map("even in z: evaluated at |z|; z = 0 takes the limit value 0"),
    );

    // Incomplete gamma and error function.
    let a = exact::ratio(GAMMA_STAR_A.0, GAMMA_STAR_A.1);
    let a_f = GAMMA_STAR_A.0 as f64 / GAMMA_STAR_A.1 as f64;
    let a_plus_one = &a + Rational::one();
    v.push(
        IdentityEntry::new(
            "gamma-star",
            "incomplete gamma gamma*(a, z), a = 1/2, ascending form",
            "6.5.29: e^-z sum z^n/Gamma(a+n+1) = gamma*(a,z)",
            CoeffRule::Sequence(Box::new(move |order| {
                let mut out = Vec::with_capacity(order + 1);
                let mut c = Rational::one();
                for n in 0..=order {
                    if n > 0 {
                        c /= &a_plus_one + int(n - 1);
                    }
                    out.push(c.clone());
                }
                out
            })),
            move |z| {
                Ok(special::gamma(a_f + 1.0).map_err(special_err)?
                    * z.exp()
                    * special::gamma_star(a_f, z).map_err(special_err)?)
            },
            ConvergenceDomain::entire(),
        )
        .variable_map("coefficient 1/(a+1)_n; Gamma(a+1) and e^-z move to the closed form"),
    );
    let a2 = a.clone();
    v.push(
        IdentityEntry::new(
            "gamma-star-alternating",
            "incomplete gamma gamma*(a, z), a = 1/2, alternating form",
            "6.5.29: (1/Gamma(a)) sum (-1)^n z^n/((a+n) n!) = gamma*(a,z)",
            term(move |n| sign(n) / ((&a2 + int(n)) * fact(n))),
            move |z| Ok(special::gamma(a_f).map_err(special_err)? * special::gamma_star(a_f, z).map_err(special_err)?),
            ConvergenceDomain::entire(),
        )
        .variable_map("the factor 1/Gamma(a) moves to the closed form"),
    );
    v.push(
        IdentityEntry::new(
            "erf",
            "error function",
            "7.1.5: sum (-1)^n z^(2n+1)/((2n+1) n!) = (sqrt(pi)/2) erf z",
            odd_powers(|k| sign(k) / (int(2 * k + 1) * fact(k))),
            |z| Ok(0.5 * PI.sqrt() * special::erf(z)),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd),
    );
    v.push(
        IdentityEntry::new(
            "erf-positive",
            "error function, positive-term form",
            "7.1.5: e^(-z^2) sum 2^(2n) n! z^(2n+1)/(2n+1)! = (sqrt(pi)/2) erf z",
            odd_powers(|k| Rational::from_integer(exact::pow_u64(4, k as u32)) * fact(k) / fact(2 * k + 1)),
            |z| Ok(0.5 * PI.sqrt() * (z * z).exp() * special::erf(z)),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Odd)
        .variable_map("the factor e^(-z^2) moves to the closed form"),
    );

    // Bessel functions.
    let nu = BESSEL_NU;
    let bessel_coefficient = move |k: usize, alternating: bool| {
        let s = if alternating { sign(k) } else { Rational::one() };
        let denom = Rational::from_integer(exact::pow_u64(4, k as u32))
            * fact(k)
            * exact::pochhammer(&exact::int(nu + 1), k as u64);
        s / denom
    };
    let nu_f = nu as f64;
    v.push(
        IdentityEntry::new(
            "bessel-j",
            "Bessel J_nu series, nu = 1",
            "9.1.10: sum (-1)^n z^(2n)/(2^(2n) n! Gamma(nu+n+1)) = (2/z)^nu J_nu(z)",
            even_powers(move |k| bessel_coefficient(k, true)),
            move |z| {
                let g = special::gamma(nu_f + 1.0).map_err(special_err)?;
                Ok(g * special::bessel::bessel_scaled(BesselKind::J, nu_f, z).map_err(special_err)?)
            },
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even)
        .variable_map("coefficient uses (nu+1)_n; Gamma(nu+1) moves to the closed form"),
    );
    v.push(
        IdentityEntry::new(
            "bessel-i",
            "modified Bessel I_nu series, nu = 1",
            "9.1.10: sum z^(2n)/(2^(2n) n! Gamma(nu+n+1)) = (2/z)^nu I_nu(z)",
            even_powers(move |k| bessel_coefficient(k, false)),
            move |z| {
                let g = special::gamma(nu_f + 1.0).map_err(special_err)?;
                Ok(g * special::bessel::bessel_scaled(BesselKind::I, nu_f, z).map_err(special_err)?)
            },
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even)
        .variable_map("coefficient uses (nu+1)_n; Gamma(nu+1) moves to the closed form"),
    );
    let bessel0 = |k: usize| {
        let f = fact(k);
        Rational::one() / (Rational::from_integer(exact::pow_u64(4, k as u32)) * &f * &f)
    };
    v.push(
        IdentityEntry::new(
            "bessel-j0",
            "Bessel J_0",
            "9.1.12: sum (-1)^n z^(2n)/(2^(2n) n! n!) = J_0(z)",
            even_powers(move |k| sign(k) * bessel0(k)),
            |z| special::bessel(BesselKind::J, 0.0, z).map_err(special_err),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even),
    );
    v.push(
        IdentityEntry::new(
            "bessel-i0",
            "modified Bessel I_0",
            "9.1.12: sum z^(2n)/(2^(2n) n! n!) = I_0(z)",
            even_powers(bessel0),
            |z| special::bessel(BesselKind::I, 0.0, z).map_err(special_err),
            ConvergenceDomain::entire(),
        )
        .parity(Parity::Even),
    );

    // Elliptic integrals.
    let m_reason = "elliptic parameter must satisfy 0 <= m < 1";
    v.push(
        IdentityEntry::new(
            "elliptic-k",
            "complete elliptic integral K",
            "17.3.11: sum C(2n,n)^2 z^n/2^(4n) = (2/pi) int_0^(pi/2) (1 - z sin^2 t)^(-1/2) dt = 2K(z)/pi",
            term(|n| {
                let c = central(n);
                &c * &c
            }),
            |z| Ok(2.0 * special::elliptic(EllipticKind::K, z).map_err(special_err)? / PI),
            ConvergenceDomain::unit(),
        )
        .nonnegative_only(m_reason)
        .variable_map("integrand exponent -1/2 belongs to K, as decided by quadrature"),
    );
    v.push(
        IdentityEntry::new(
            "elliptic-e",
            "complete elliptic integral E",
            "17.3.12: sum_{n>=1} C(2n,n)^2 z^n/(2^(4n)(2n-1)) = 1 - (2/pi) int_0^(pi/2) (1 - z sin^2 t)^(1/2) dt = 1 - 2E(z)/pi",
            term(|n| {
                if n == 0 {
                    return zero();
                }
                let c = central(n);
                &c * &c / int(2 * n - 1)
            }),
            |z| Ok(1.0 - 2.0 * special::elliptic(EllipticKind::E, z).map_err(special_err)? / PI),
            ConvergenceDomain::disk(1.0, Boundary::Open),
        )
        .nonnegative_only(m_reason)
        .variable_map("integrand exponent +1/2 belongs to E, as decided by quadrature"),
    );

    // Bernoulli and Euler polynomials.
    let ba = exact::ratio(BERNOULLI_A.0, BERNOULLI_A.1);
    let ba_f = BERNOULLI_A.0 as f64 / BERNOULLI_A.1 as f64;
    let ba2 = ba.clone();
    v.push(
        IdentityEntry::new(
            "bernoulli-gf",
            "Bernoulli polynomial generating function, a = 1/3",
            "23.1.1: sum B_n(a) z^n/n! = z e^(az)/(e^z - 1), |z| < 2 pi",
            term(move |n| bernoulli::bernoulli_poly_exact(n, &ba) / fact(n)),
            move |z| Ok(if z == 0.0 { 1.0 } else { z * (ba_f * z).exp() / z.exp_m1() }),
            ConvergenceDomain::disk(2.0 * PI, Boundary::Open),
        )
        .variable_map("removable singularity at z = 0 takes the limit value 1"),
    );
    v.push(IdentityEntry::new(
        "euler-gf",
        "Euler polynomial generating function, a = 1/3",
        "23.1.1: sum E_n(a) z^n/n! = 2 e^(az)/(e^z + 1), |z| < pi",
        term(move |n| bernoulli::euler_poly_exact(n, &ba2) / fact(n)),
        move |z| Ok(2.0 * (ba_f * z).exp() / (z.exp() + 1.0)),
        ConvergenceDomain::disk(PI, Boundary::Open),
    ));

    // Polylogarithm.
    let s_poly = POLYLOG_S;
    v.push(
        IdentityEntry::new(
            "polylog",
            "generalized zeta (Bose) function g_s, s = 3",
            "sum_{n>=1} z^n/n^s = g_s(z)",
            term(
                move |n| if n == 0 { zero() } else { Rational::new(1.into(), exact::pow_u64(n as u64, s_poly as u32)) },
            ),
            move |z| special::polylog(s_poly as f64, z).map_err(special_err),
            ConvergenceDomain::disk(1.0, Boundary::Closed),
        )
        .variable_map("s fixed to 3 so the coefficients stay rational"),
    );
    v
}

fn fact_recip(n: usize) -> Rational {
    Rational::new(1.into(), exact::factorial(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Series;

    #[test]
    fn registry_shape() {
        let ids = list_identities();
        assert!(ids.len() >= 35, "{} entries", ids.len());
        assert!(ids.contains(&"geometric"));
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn documented_coefficients() {
        assert_eq!(coefficient("n-squared", 3).unwrap(), exact::int(9));
        assert_eq!(coefficient("sin", 2).unwrap(), exact::int(0));
        assert_eq!(coefficient("n-fourth", 2).unwrap(), exact::int(16));
        assert!(matches!(coefficient("nope", 1), Err(CatalogError::UnknownIdentity(_))));
    }

    #[test]
    fn documented_closed_forms() {
        assert_eq!(closed_form("geometric", 0.5).unwrap(), 2.0);
        assert_eq!(closed_form("catalan-like", 0.0).unwrap(), 1.0);
        assert!((closed_form("arctan", 1.0).unwrap() - PI / 4.0).abs() < 1e-16);
        assert!(matches!(closed_form("geometric", 1.0), Err(CatalogError::OutOfDomain { .. })));
        assert!(matches!(closed_form("ei", -1.0), Err(CatalogError::OutOfDomain { .. })));
    }

    #[test]
    fn documented_domains() {
        assert_eq!(domain("bernoulli-gf").unwrap().radius, 2.0 * PI);
        assert!(domain("exp").unwrap().radius.is_infinite());
        assert_eq!(domain("geometric").unwrap().radius, 1.0);
        assert!(domain("log").unwrap().contains(-1.0));
        assert!(!domain("log").unwrap().contains(1.0));
    }

    #[test]
    fn rational_forms_reproduce_coefficients() {
        let order = 20;
        let mut checked = 0;
        for e in Catalog::global().entries() {
            let Some(form) = &e.rational_form else { continue };
            let num = Series::from_ints(&form.numerator, order);
            let den = Series::from_ints(&form.denominator, order);
            let quotient = num.div(&den).unwrap();
            assert_eq!(quotient.coeffs(), e.coefficients(order).as_slice(), "{}", e.id);
            checked += 1;
        }
        assert!(checked >= 10);
    }

    #[test]
    fn n_fourth_closed_form_by_long_division() {
        let form = entry("n-fourth").unwrap().rational_form.clone().unwrap();
        let q = Series::from_ints(&form.numerator, 6).div(&Series::from_ints(&form.denominator, 6)).unwrap();
        assert_eq!(q.coeffs()[2], exact::int(16));
    }

    #[test]
    fn parity_flags_match_coefficients() {
        for e in Catalog::global().entries() {
            let coeffs = e.coefficients(24);
            match e.parity {
                Parity::Odd => assert!(coeffs.iter().step_by(2).all(Zero::is_zero), "{}", e.id),
                Parity::Even => assert!(coeffs.iter().skip(1).step_by(2).all(Zero::is_zero), "{}", e.id),
                Parity::Mixed => {}
            }
        }
    }

    #[test]
    fn sequence_and_term_rules_agree() {
        let e = entry("gamma-star").unwrap();
        let all = e.coefficients(10);
        for (n, c) in all.iter().enumerate() {
            assert_eq!(&e.coefficient(n), c);
        }
        assert_eq!(all[2], exact::ratio(4, 15));
    }

    #[test]
    fn export_has_one_record_per_entry() {
        let text = export_table();
        assert_eq!(text.lines().filter(|l| l.starts_with("id: ")).count(), list_identities().len());
        assert!(text.contains("id: geometric\n  anchor: 3.6.10: sum z^n = 1/(1-z)\n  domain: radius=1 boundary=open excluded=[]\n  coefficients: 1 1 1 1 1 1 1 1\n"));
    }
}
