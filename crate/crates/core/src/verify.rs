//! Verification suites: each row compares an expected value with one
//! computed by an independent path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{self, euler_phi};
use crate::aut::{self, aut_count, aut_product_formula, hom_count};
use crate::class_c::{self, catalog, catalog_scan, metacyclic_in_c, solve_phi_eq_prime};
use crate::closed_forms::{self as cf, partition};
use crate::error::{Error, Result};
use crate::expr::parse;
use crate::families::{self, abelian_types_up_to, from_abelian_type};
use crate::group::{self, enumerated_spectrum, GroupSpec, MetacyclicParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigUint),
    Bool(bool),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => crate::count::serialize_big(v, s),
            Value::Bool(b) => s.serialize_bool(*b),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v.into())
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v.into())
    }
}

impl From<BigUint> for Value {
    fn from(v: BigUint) -> Self {
        Value::Int(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

impl ReportRow {
    pub fn new(label: impl Into<String>, expected: impl Into<Value>, computed: impl Into<Value>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        ReportRow {
            label: label.into(),
            expected,
            computed,
            status,
        }
    }

    /// A sweep: `matched` of `total` cases agreed.
    pub fn sweep(label: &str, total: usize, matched: usize) -> Self {
        Self::new(format!("{label} [{total} cases]"), total, matched)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned columns: status, label, expected, computed.
    pub fn to_text(&self) -> String {
        let w = self.rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0);
        let we = self
            .rows
            .iter()
            .map(|r| r.expected.to_string().len())
            .max()
            .unwrap_or(0)
            .max("expected".len());
        let mut out = format!("{:<6} {:<w$}  {:>we$}  computed\n", "status", "label", "expected");
        for r in &self.rows {
            out += &format!(
                "{:<6} {:<w$}  {:>we$}  {}\n",
                r.status.to_string().to_uppercase(),
                r.label,
                r.expected.to_string(),
                r.computed
            );
        }
        out += &format!("{} passed, {} failed\n", self.passed(), self.failed());
        out
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Summary {
            pass: usize,
            fail: usize,
        }
        let mut st = s.serialize_struct("Report", 2)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field(
            "summary",
            &Summary {
                pass: self.passed(),
                fail: self.failed(),
            },
        )?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Abelian,
    Dihedral,
    Metacyclic,
    Symmetric,
    Aut,
    ClassC,
    WorkedExamples,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "abelian",
        "dihedral",
        "metacyclic",
        "symmetric",
        "aut",
        "class-c",
        "paper-examples",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "abelian" => Suite::Abelian,
            "dihedral" => Suite::Dihedral,
            "metacyclic" => Suite::Metacyclic,
            "symmetric" => Suite::Symmetric,
            "aut" => Suite::Aut,
            "class-c" => Suite::ClassC,
            "paper-examples" => Suite::WorkedExamples,
            "all" => Suite::All,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

pub fn run(suite: Suite) -> Result<Report> {
    let rows = match suite {
        Suite::Abelian => abelian()?,
        Suite::Dihedral => dihedral()?,
        Suite::Metacyclic => metacyclic()?,
        Suite::Symmetric => symmetric()?,
        Suite::Aut => automorphisms()?,
        Suite::ClassC => class_c_suite()?,
        Suite::WorkedExamples => worked_examples()?,
        Suite::All => {
            let mut rows = Vec::new();
            for s in [
                Suite::Abelian,
                Suite::Dihedral,
                Suite::Metacyclic,
                Suite::Symmetric,
                Suite::Aut,
                Suite::ClassC,
                Suite::WorkedExamples,
            ] {
                rows.extend(run(s)?.rows);
            }
            rows
        }
    };
    Ok(Report { rows })
}

fn g(expr: &str) -> Result<GroupSpec> {
    parse(expr)
}

fn oracle_phi(g: &GroupSpec) -> Result<BigUint> {
    enumerated_spectrum(g)?.phi()
}

fn phi_row(expr: &str, expected: u64) -> Result<ReportRow> {
    Ok(ReportRow::new(
        format!("phi({expr}) = {expected}"),
        expected,
        group::phi(&g(expr)?)?,
    ))
}

/// Counts cases where `check` holds, in parallel; errors propagate.
fn count_matches<T: Sync>(items: &[T], check: impl Fn(&T) -> Result<bool> + Sync) -> Result<usize> {
    items
        .par_iter()
        .map(|x| check(x).map(usize::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

const ABELIAN_SWEEP_BOUND: u64 = 1000;

fn abelian() -> Result<Vec<ReportRow>> {
    let mut rows = vec![
        phi_row("Z1", 1)?,
        ReportRow::new("closed form, p = 2, exponents (1,2)", 4u64, cf::phi_abelian_p::<u64>(2, &[1, 2])?),
        ReportRow::new("closed form, p = 3, exponents (1)", 2u64, cf::phi_abelian_p::<u64>(3, &[1])?),
        ReportRow::new(
            "closed form, p = 2, exponents (1,1,1)",
            7u64,
            cf::phi_abelian_p::<u64>(2, &[1, 1, 1])?,
        ),
        phi_row("Z2xZ4xZ9", 24)?,
        phi_row("Z2xZ2xZ3", 6)?,
    ];
    let types = abelian_types_up_to(ABELIAN_SWEEP_BOUND);
    let matched = count_matches(&types, |t| {
        Ok(cf::phi_abelian::<BigUint>(t)? == oracle_phi(&from_abelian_type(t))?)
    })?;
    rows.push(ReportRow::sweep(
        &format!("abelian closed form = oracle, |G| <= {ABELIAN_SWEEP_BOUND}"),
        types.len(),
        matched,
    ));
    let matched = count_matches(&types, |t| {
        let phi_g = cf::phi_abelian::<BigUint>(t)?;
        let phi_n: BigUint = arith::euler_phi_of(&t.factorization());
        let strict_top = t
            .factors()
            .iter()
            .all(|(_, e)| e.len() < 2 || e[e.len() - 2] < e[e.len() - 1]);
        Ok(phi_g >= phi_n && (phi_g == phi_n) == strict_top)
    })?;
    rows.push(ReportRow::sweep(
        &format!("abelian phi(G) >= phi(|G|), equality iff top exponent unique, |G| <= {ABELIAN_SWEEP_BOUND}"),
        types.len(),
        matched,
    ));
    rows.push(phi_row("H(0)", 6)?);
    rows.push(phi_row("H(2)", 24)?);
    rows.push(phi_row("H(0,Z3)", 12)?);
    let hams = hamiltonian_specs(ABELIAN_SWEEP_BOUND)?;
    let matched = count_matches(&hams, |(rank, t, spec)| {
        Ok(cf::phi_hamiltonian::<BigUint>(*rank, t)? == oracle_phi(spec)?)
    })?;
    rows.push(ReportRow::sweep(
        &format!("hamiltonian closed form = oracle, |G| <= {ABELIAN_SWEEP_BOUND}"),
        hams.len(),
        matched,
    ));
    Ok(rows)
}

/// Every `Q8 x Z2^rank x A`, `A` odd abelian, of order at most `bound`.
pub fn hamiltonian_specs(bound: u64) -> Result<Vec<(u32, crate::AbelianType, GroupSpec)>> {
    let mut out = Vec::new();
    let mut rank = 0;
    while 8u64 << rank <= bound {
        for t in abelian_types_up_to(bound / (8 << rank)) {
            if t.factors().iter().all(|(p, _)| *p != 2) {
                let spec = families::hamiltonian(rank, &from_abelian_type(&t))?;
                out.push((rank, t, spec));
            }
        }
        rank += 1;
    }
    Ok(out)
}

/// The P-group parameters checked for `phi = 0`.
pub const P_GROUP_CASES: [(u64, u64, u32); 8] = [
    (3, 2, 2),
    (3, 2, 3),
    (3, 2, 4),
    (5, 2, 2),
    (5, 2, 3),
    (7, 3, 2),
    (7, 3, 3),
    (13, 3, 2),
];

fn dihedral() -> Result<Vec<ReportRow>> {
    let mut rows = vec![phi_row("D8", 2)?, phi_row("D6", 0)?, phi_row("D12", 2)?, phi_row("D4", 3)?];
    let ns: Vec<u64> = (2..=100).collect();
    let matched = count_matches(&ns, |&n| {
        Ok(BigUint::from(cf::phi_dihedral(n)?) == oracle_phi(&families::dihedral(2 * n)?)?)
    })?;
    rows.push(ReportRow::sweep("dihedral closed form = oracle, 2 <= n <= 100", ns.len(), matched));
    for (p, q, n) in P_GROUP_CASES {
        let spec = families::p_group_p(p, q, n)?;
        rows.push(ReportRow::new(format!("phi({spec}) = 0"), 0u64, oracle_phi(&spec)?));
    }
    Ok(rows)
}

/// Every valid presentation `(m, n, s, r)` with `m <= max_m`, `n <= max_n`.
pub fn metacyclic_sweep(max_m: u64, max_n: u64) -> Vec<MetacyclicParams> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            for s in 0..m {
                for r in 0..m.max(1) {
                    if MetacyclicParams::is_valid(m, n, s, r) {
                        out.push(MetacyclicParams { m, n, s, r });
                    }
                }
            }
        }
    }
    out
}

fn metacyclic_oracle_in_c(p: &MetacyclicParams) -> Result<bool> {
    Ok(!oracle_phi(&families::metacyclic(p.m, p.n, p.s, p.r)?)?.is_zero())
}

fn metacyclic() -> Result<Vec<ReportRow>> {
    let mut rows = vec![
        ReportRow::new("exponent of MC(4,2,2,3) = Q8", 4u64, cf::metacyclic_exponent(4, 2, 2, 3)?),
        ReportRow::new("exponent of MC(7,1,0,1) = Z7", 7u64, cf::metacyclic_exponent(7, 1, 0, 1)?),
        ReportRow::new("exponent of MC(6,2,0,5) = D12", 6u64, cf::metacyclic_exponent(6, 2, 0, 5)?),
    ];
    let sweep = metacyclic_sweep(40, 12);
    let matched = count_matches(&sweep, |p| {
        let spec = families::metacyclic(p.m, p.n, p.s, p.r)?;
        Ok(cf::metacyclic_exponent(p.m, p.n, p.s, p.r)? == enumerated_spectrum(&spec)?.exponent()?)
    })?;
    rows.push(ReportRow::sweep(
        "metacyclic exponent formula = oracle, m <= 40, n <= 12",
        sweep.len(),
        matched,
    ));
    let matched = count_matches(&sweep, |p| {
        Ok(metacyclic_in_c(p.m, p.n, p.s, p.r)? == metacyclic_oracle_in_c(p)?)
    })?;
    rows.push(ReportRow::sweep(
        "criterion n | gcd(m,s) = oracle membership, m <= 40, n <= 12",
        sweep.len(),
        matched,
    ));
    let slice: Vec<u64> = (2..=40).collect();
    let matched = count_matches(&slice, |&m| {
        let p = MetacyclicParams::new(m, 2, 0, m - 1)?;
        let crit = metacyclic_in_c(m, 2, 0, m - 1)?;
        Ok(crit == (m % 2 == 0) && crit == metacyclic_oracle_in_c(&p)?)
    })?;
    rows.push(ReportRow::sweep(
        "D_2m in class C iff m even (criterion and oracle), 2 <= m <= 40",
        slice.len(),
        matched,
    ));
    rows.push(ReportRow::new("criterion for MC(4,2,2,3) = Q8", true, metacyclic_in_c(4, 2, 2, 3)?));
    rows.push(ReportRow::new("criterion for MC(5,2,0,4) = D10", false, metacyclic_in_c(5, 2, 0, 4)?));
    Ok(rows)
}

fn symmetric() -> Result<Vec<ReportRow>> {
    let mut rows = vec![
        ReportRow::new("phi(S1) = 1", 1u64, cf::phi_symmetric::<BigUint>(1)?),
        ReportRow::new("phi(S2) = 1", 1u64, cf::phi_symmetric::<BigUint>(2)?),
        ReportRow::new("phi(A2) = 1", 1u64, cf::phi_alternating::<BigUint>(2)?),
        ReportRow::new("phi(A3) = 2", 2u64, cf::phi_alternating::<BigUint>(3)?),
    ];
    for n in 3..=30 {
        rows.push(ReportRow::new(format!("phi(S{n}) = 0"), 0u64, cf::phi_symmetric::<BigUint>(n)?));
    }
    for n in 4..=30 {
        rows.push(ReportRow::new(format!("phi(A{n}) = 0"), 0u64, cf::phi_alternating::<BigUint>(n)?));
    }
    for n in 1..=8usize {
        let oracle = enumerated_spectrum(&families::symmetric(n)?)?.exponent()?;
        rows.push(ReportRow::new(
            format!("exp(S{n}) = lcm(1..{n}) vs enumeration"),
            oracle,
            cf::exp_symmetric::<u64>(n as u64),
        ));
    }
    let ns: Vec<u64> = (2..=30).collect();
    let matched = count_matches(&ns, |&n| {
        Ok(cf::exp_alternating::<u64>(n)? == partition::partition_exponent(n as usize, true)?)
    })?;
    rows.push(ReportRow::sweep(
        "exp(A_n) halving rule = lcm over even cycle types, 2 <= n <= 30",
        ns.len(),
        matched,
    ));
    let mut total = 0;
    let mut matched = 0;
    for n in 1..=7usize {
        for (alt, spec) in [(false, families::symmetric(n)?), (true, families::alternating(n.max(2))?)] {
            let oracle = enumerated_spectrum(&spec)?;
            let degree = if alt { n.max(2) } else { n };
            for d in arith::divisors(cf::exp_symmetric::<u64>(degree as u64)) {
                let engine: BigUint = if alt {
                    cf::count_order_alternating(degree, d)?
                } else {
                    cf::count_order_symmetric(degree, d)?
                };
                total += 1;
                matched += usize::from(engine == oracle.count(d));
            }
        }
    }
    rows.push(ReportRow::sweep(
        "cycle-type counts = enumeration per order, S_n and A_n, n <= 7",
        total,
        matched,
    ));
    let ns: Vec<u32> = (0..=20).collect();
    let matched = ns
        .iter()
        .filter(|&&n| {
            let total: BigUint = partition::Partitions::new(n)
                .map(|l| l.class_size::<BigUint>())
                .sum();
            total == (1..=n as u64).map(BigUint::from).product::<BigUint>()
        })
        .count();
    rows.push(ReportRow::sweep("class sizes sum to n!, n <= 20", ns.len(), matched));
    let ns: Vec<u64> = (5..=40).collect();
    let matched = ns
        .iter()
        .filter(|&&n| {
            cf::prime_power_parts(n).iter().all(|&(p, _)| {
                let q = cf::symmetric_exp_p_part(n, p);
                n < p * q && q <= n
            }) && cf::prime_power_parts(n).iter().map(|&(p, a)| p.pow(a)).sum::<u64>() > n
        })
        .count();
    rows.push(ReportRow::sweep(
        "n/p < p^a <= n and sum of prime-power parts > n, 5 <= n <= 40",
        ns.len(),
        matched,
    ));
    Ok(rows)
}

fn automorphisms() -> Result<Vec<ReportRow>> {
    let z6 = g("Z6")?;
    let s3 = g("S3")?;
    let z6s3 = g("Z6xS3")?;
    let aut_z6s3 = aut_count(&z6s3)?;
    let mut rows = vec![
        ReportRow::new("|Aut(Z6)| = 2", 2u64, aut_count(&z6)?),
        ReportRow::new("|Aut(S3)| = 6", 6u64, aut_count(&s3)?),
        ReportRow::new("|Hom(S3, Z6)| = 2", 2u64, hom_count(&s3, &z6)?),
        ReportRow::new("|Aut(Z6xS3)| = 24", 24u64, aut_z6s3.clone()),
        ReportRow::new("|Z6xS3| > |Aut(Z6xS3)|", true, z6s3.order() > aut_z6s3),
        ReportRow::new("|Hom(Z4, Z2)| = 2", 2u64, hom_count(&g("Z4")?, &g("Z2")?)?),
        ReportRow::new("product formula (Z6, S3) = 24", 24u64, aut_product_formula(&z6, &s3)?),
        ReportRow::new("product formula (Z1, S3) = 6", 6u64, aut_product_formula(&g("Z1")?, &s3)?),
        ReportRow::new(
            "product formula (Z2, S3) = |Aut(D12)|",
            aut_count(&g("D12")?)?,
            aut_product_formula(&g("Z2")?, &s3)?,
        ),
    ];
    let ns: Vec<u64> = (1..=100).collect();
    let matched = count_matches(&ns, |&n| Ok(aut_count(&families::cyclic(n)?)? == euler_phi(n).into()))?;
    rows.push(ReportRow::sweep("|Aut(Z_n)| = phi(n), n <= 100", ns.len(), matched));
    let types = abelian_types_up_to(64);
    let matched = count_matches(&types, |t| {
        let spec = from_abelian_type(t);
        let (p, a) = (group::phi(&spec)?, aut_count(&spec)?);
        Ok(p <= a && (p == a) == t.is_cyclic())
    })?;
    rows.push(ReportRow::sweep(
        "abelian phi(G) <= |Aut(G)|, equality iff cyclic, |G| <= 64",
        types.len(),
        matched,
    ));
    for expr in ["S3", "S4", "A5", "D10"] {
        let spec = g(expr)?;
        let ok = group::center_order(&spec)? == 1
            && group::phi(&spec)? < spec.order()
            && spec.order() <= aut_count(&spec)?;
        rows.push(ReportRow::new(format!("phi({expr}) < |{expr}| <= |Aut({expr})|"), true, ok));
    }
    let c = aut::order_totient_check(&g("Z3xS3")?)?;
    rows.push(ReportRow::new("Z3xS3: phi(G) = phi(|G|) and k = |G|/exp(G)", true, c.holds && c.sides_agree()));
    let c = aut::order_totient_check(&g("D8")?)?;
    rows.push(ReportRow::new("D8: phi(G) != phi(|G|) and k != |G|/exp(G)", true, !c.phi_side && !c.k_side));
    rows.push(ReportRow::new("Q16 has a unique cyclic subgroup of order exp", true, aut::phi_exp_check(&g("Q16")?)?));
    rows.push(ReportRow::new("Q8 has a unique cyclic subgroup of order exp", false, aut::phi_exp_check(&g("Q8")?)?));
    let d8 = aut::conjecture_screen(&g("D8")?, None)?;
    rows.push(ReportRow::new("D8 screened out by |G| >= exp(G)^2", false, d8.cond_i));
    let s = aut::conjecture_screen(&z6s3, None)?;
    rows.push(ReportRow::new(
        "Z6xS3 is not a counterexample to phi(G) <= |Aut(G)|",
        false,
        s.is_counterexample.unwrap_or(true),
    ));
    Ok(rows)
}

fn class_c_suite() -> Result<Vec<ReportRow>> {
    let mut rows = vec![
        ReportRow::new("D12 in class C", true, class_c::in_class_c(&g("D12")?)?),
        ReportRow::new("S3 in class C", false, class_c::in_class_c(&g("S3")?)?),
        ReportRow::new("element orders of Z12 form a sublattice", true, class_c::sublattice_check(&g("Z12")?)?),
        ReportRow::new("element orders of S3 form a sublattice", false, class_c::sublattice_check(&g("S3")?)?),
        ReportRow::new("element orders of A4 form a sublattice", false, class_c::sublattice_check(&g("A4")?)?),
    ];
    let cat = catalog(200)?;
    let matched = count_matches(&cat, |e| Ok(class_c::membership_check(&e.spec)?.agrees()))?;
    rows.push(ReportRow::sweep(
        "phi != 0 iff sublattice iff commuting witness, catalog |G| <= 200",
        cat.len(),
        matched,
    ));
    let members: Vec<_> = cat.iter().filter(|e| e.order <= 24 && !e.phi().is_zero()).collect();
    let pairs: Vec<(usize, usize)> = (0..members.len())
        .flat_map(|i| (i..members.len()).map(move |j| (i, j)))
        .collect();
    let matched = count_matches(&pairs, |&(i, j)| {
        Ok(!members[i].spectrum.lcm_convolve(&members[j].spectrum)?.phi()?.is_zero())
    })?;
    rows.push(ReportRow::sweep(
        "class C closed under direct products, members of order <= 24",
        pairs.len(),
        matched,
    ));
    for expr in ["S3", "Z5", "A5"] {
        let e = class_c::embed_in_c(&g(expr)?)?;
        rows.push(ReportRow::new(format!("{e} in class C"), true, class_c::in_class_c(&e)?));
    }
    for (p, count) in [(2, 5usize), (3, 1), (5, 0), (7, 1), (13, 0), (31, 1)] {
        let s = solve_phi_eq_prime(p)?;
        rows.push(ReportRow::new(format!("solutions of phi(G) = {p}"), count, s.specs.len()));
    }
    let cat100 = catalog(100)?;
    for p in [2u64, 3, 5, 7, 13, 31] {
        let expected: Vec<String> = solve_phi_eq_prime(p)?.specs.iter().map(|g| g.to_string()).collect();
        let extra = cat100
            .iter()
            .filter(|e| e.phi() == BigUint::from(p) && !expected.contains(&e.spec.to_string()))
            .count();
        rows.push(ReportRow::new(format!("catalog |G| <= 100: extra groups with phi(G) = {p}"), 0usize, extra));
    }
    let scan = catalog_scan(2, 16)?;
    rows.push(ReportRow::new(
        "catalog |G| <= 16 with phi(G) = 2: Z3, Z4, Z6, D8, D12",
        true,
        scan.iter().map(|g| g.to_string()).collect::<Vec<_>>() == ["Z3", "Z4", "Z6", "D8", "D12"],
    ));
    Ok(rows)
}

fn worked_examples() -> Result<Vec<ReportRow>> {
    let mut rows = vec![
        phi_row("Z2^2", 3)?,
        phi_row("D8", 2)?,
        ReportRow::new("Klein group and D8 differ only in phi at order 8", true, {
            let k = group::phi(&g("Z2^2")?)?;
            let d = group::phi(&g("D8")?)?;
            k != d
        }),
        ReportRow::new("phi(D8) = 2 < 4 = phi(|D8|)", true, group::phi(&g("D8")?)? < BigUint::from(euler_phi(8))),
        ReportRow::new(
            "phi(Z3xS3) = 6 = phi(|Z3xS3|)",
            true,
            group::phi(&g("Z3xS3")?)? == BigUint::from(6u32) && euler_phi(18) == 6,
        ),
        ReportRow::new("phi(Q8) = 6 > 4 = phi(|Q8|)", true, group::phi(&g("Q8")?)? > BigUint::from(euler_phi(8))),
        phi_row("Q8", 6)?,
        phi_row("Z3xS3", 6)?,
        phi_row("Z6xS3", 20)?,
        phi_row("S1", 1)?,
        phi_row("S2", 1)?,
        phi_row("S3", 0)?,
        phi_row("S4", 0)?,
        phi_row("A3", 2)?,
        phi_row("A4", 0)?,
        phi_row("A5", 0)?,
        ReportRow::new("exp(S4) = 12", 12u64, group::exponent(&g("S4")?)?),
        ReportRow::new("S4 has no element of order 12", 0u64, cf::count_order_symmetric::<u64>(4, 12)?),
        ReportRow::new("abelian 2-group closed form, type (2,2,2) = 7", 7u64, cf::phi_abelian_p::<u64>(2, &[1, 1, 1])?),
        ReportRow::new("Q8xZ2^n: phi = 3 * 2^(n+1), n = 3", 48u64, group::phi(&g("H(3)")?)?),
        ReportRow::new("dihedral D10 (n odd) has phi = 0", 0u64, group::phi(&g("D10")?)?),
        ReportRow::new("P-group P(7,3,2) has phi = 0", 0u64, group::phi(&g("P(7,3,2)")?)?),
        ReportRow::new("|Aut(Z6)|", 2u64, aut_count(&g("Z6")?)?),
        ReportRow::new("|Aut(S3)|", 6u64, aut_count(&g("S3")?)?),
        ReportRow::new("|Hom(S3, Z6)|", 2u64, hom_count(&g("S3")?, &g("Z6")?)?),
        ReportRow::new("|Aut(Z6xS3)| = 2 * 6 * 2", 24u64, aut_count(&g("Z6xS3")?)?),
        ReportRow::new("|Z6xS3| = 36 > |Aut(Z6xS3)|", true, BigUint::from(36u32) > aut_count(&g("Z6xS3")?)?),
    ];
    let m11 = families::mathieu11();
    let m = group::exponent(&m11)?;
    rows.push(ReportRow::new("|M11| = 7920", 7920u64, enumerated_spectrum(&m11)?.group_order().clone()));
    rows.push(ReportRow::new("330 divides exp(M11)", 0u64, m % 330));
    let zm = families::direct_product(vec![families::cyclic(m)?, m11])?;
    let aut_value = BigUint::from(euler_phi(m)) * 7920u32;
    let screen = aut::conjecture_screen(&zm, Some(&aut_value))?;
    rows.push(ReportRow::new(
        format!("Z{m}xM11: phi(G) > phi(m)|M11| = {aut_value}"),
        true,
        screen.is_counterexample == Some(true),
    ));
    let c = aut::order_totient_check(&g("Z3xS3")?)?;
    rows.push(ReportRow::new("Z3xS3: k = |G|/exp(G) = 3", 3u64, c.k));
    rows.push(ReportRow::new("Q8 in class C via n | gcd(m,s)", true, metacyclic_in_c(4, 2, 2, 3)?));
    rows.push(ReportRow::new("D_2m with m = 6 in class C", true, metacyclic_in_c(6, 2, 0, 5)?));
    rows.push(ReportRow::new("Z30xA5 in class C", true, class_c::in_class_c(&class_c::embed_in_c(&g("A5")?)?)?));
    rows.push(ReportRow::new("D12 in class C with S3 subgroup/quotient outside it", true, {
        class_c::in_class_c(&g("D12")?)? && !class_c::in_class_c(&g("S3")?)?
    }));
    rows.push(ReportRow::new("phi(G) = 2 has five solutions", 5usize, solve_phi_eq_prime(2)?.specs.len()));
    rows.push(ReportRow::new(
        "phi(G) = 7 solved by Z2^3",
        true,
        solve_phi_eq_prime(7)?.specs.iter().map(|g| g.to_string()).collect::<Vec<_>>() == ["Z2^3"],
    ));
    rows.push(ReportRow::new(
        "phi(Z2^3) = 7",
        7u64,
        group::phi(&g("Z2^3")?)?.to_u64().unwrap_or(0),
    ));
    Ok(rows)
}
