//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints its `criterion N: PASS|FAIL` line; exits nonzero if
//! any criterion fails.

use std::sync::OnceLock;

use gentotient::arith::{self, euler_phi};
use gentotient::aut::{self, aut_count, hom_count};
use gentotient::class_c::{self, catalog, catalog_scan, solve_phi_eq_prime, CatalogEntry, SolutionKind};
use gentotient::closed_forms as cf;
use gentotient::expr::parse;
use gentotient::families::{self, abelian_types_up_to, from_abelian_type};
use gentotient::group::{self, enumerated_spectrum, GroupSpec};
use gentotient::verify::{hamiltonian_specs, metacyclic_sweep, P_GROUP_CASES};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

fn report(n: u32, pass: bool, detail: &str) -> bool {
    println!("criterion {n}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
    pass
}

fn oracle_phi(g: &GroupSpec) -> BigUint {
    enumerated_spectrum(g).unwrap().phi().unwrap()
}

fn catalog_2000() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| catalog(2000).unwrap())
}

fn criterion_01_worked_examples() -> bool {
    let cases = [
        ("D8", 2u64),
        ("Q8", 6),
        ("Z3xS3", 6),
        ("Z6xS3", 20),
        ("Z2^2", 3),
        ("S1", 1),
        ("S2", 1),
        ("S3", 0),
        ("S4", 0),
        ("A3", 2),
        ("A4", 0),
        ("A5", 0),
    ];
    let bad: Vec<String> = cases
        .iter()
        .filter_map(|&(e, want)| {
            let got = oracle_phi(&parse(e).unwrap());
            (got != BigUint::from(want)).then(|| format!("{e}: {got} != {want}"))
        })
        .collect();
    report(1, bad.is_empty(), &format!("{} values checked, mismatches {bad:?}", cases.len()))
}

fn criterion_02_abelian_closed_form() -> bool {
    let types = abelian_types_up_to(5000);
    let bad: Vec<String> = types
        .par_iter()
        .filter(|t| cf::phi_abelian::<BigUint>(t).unwrap() != oracle_phi(&from_abelian_type(t)))
        .map(|t| t.to_string())
        .collect();
    report(
        2,
        bad.is_empty(),
        &format!("{} abelian types of order <= 5000, mismatches {bad:?}", types.len()),
    )
}

fn criterion_03_hamiltonian_closed_form() -> bool {
    let groups = hamiltonian_specs(5000).unwrap();
    let bad: Vec<String> = groups
        .par_iter()
        .filter(|(rank, t, g)| cf::phi_hamiltonian::<BigUint>(*rank, t).unwrap() != oracle_phi(g))
        .map(|(_, _, g)| g.to_string())
        .collect();
    report(
        3,
        bad.is_empty(),
        &format!("{} hamiltonian groups of order <= 5000, mismatches {bad:?}", groups.len()),
    )
}

fn criterion_04_dihedral_and_p_groups() -> bool {
    let bad_d: Vec<u64> = (2..=100u64)
        .into_par_iter()
        .filter(|&n| {
            BigUint::from(cf::phi_dihedral(n).unwrap()) != oracle_phi(&families::dihedral(2 * n).unwrap())
        })
        .collect();
    let bad_p: Vec<String> = P_GROUP_CASES
        .iter()
        .map(|&(p, q, n)| families::p_group_p(p, q, n).unwrap())
        .filter(|g| !oracle_phi(g).is_zero())
        .map(|g| g.to_string())
        .collect();
    report(
        4,
        bad_d.is_empty() && bad_p.is_empty(),
        &format!(
            "dihedral 2 <= n <= 100 mismatches {bad_d:?}; {} P-groups, nonzero phi {bad_p:?}",
            P_GROUP_CASES.len()
        ),
    )
}

fn criterion_05_symmetric_and_alternating() -> bool {
    let s_nonzero: Vec<u64> = (3..=30)
        .filter(|&n| !cf::phi_symmetric::<BigUint>(n).unwrap().is_zero())
        .collect();
    let a_nonzero: Vec<u64> = (4..=30)
        .filter(|&n| !cf::phi_alternating::<BigUint>(n).unwrap().is_zero())
        .collect();
    // exp(S_n) = lcm(1..n), checked against enumeration.
    let exp_bad: Vec<usize> = (1..=10usize)
        .into_par_iter()
        .filter(|&n| {
            let s = enumerated_spectrum(&families::symmetric(n).unwrap()).unwrap();
            let direct = (1..=n as u64).fold(1, arith::lcm);
            s.exponent().unwrap() != direct || cf::exp_symmetric::<u64>(n as u64) != direct
        })
        .collect();
    let halving_bad: Vec<u64> = (2..=30u64)
        .filter(|&n| {
            cf::exp_alternating::<u64>(n).unwrap() != cf::partition_exponent(n as usize, true).unwrap()
        })
        .collect();
    let mut per_order = 0;
    let mut count_bad = Vec::new();
    for n in 1..=8usize {
        for alt in [false, true] {
            if alt && n < 2 {
                continue;
            }
            let spec = if alt {
                families::alternating(n).unwrap()
            } else {
                families::symmetric(n).unwrap()
            };
            let oracle = enumerated_spectrum(&spec).unwrap();
            for d in arith::divisors(cf::exp_symmetric::<u64>(n as u64)) {
                let engine: BigUint = if alt {
                    cf::count_order_alternating(n, d).unwrap()
                } else {
                    cf::count_order_symmetric(n, d).unwrap()
                };
                per_order += 1;
                if engine != oracle.count(d) {
                    count_bad.push(format!("{spec} order {d}"));
                }
            }
        }
    }
    let pass = s_nonzero.is_empty()
        && a_nonzero.is_empty()
        && exp_bad.is_empty()
        && halving_bad.is_empty()
        && count_bad.is_empty();
    report(
        5,
        pass,
        &format!(
            "phi(S_n) != 0 for {s_nonzero:?}, phi(A_n) != 0 for {a_nonzero:?}, exp(S_n) mismatches {exp_bad:?}, \
             exp(A_n) rule mismatches {halving_bad:?}, {per_order} per-order counts, mismatches {count_bad:?}"
        ),
    )
}

fn criterion_06_automorphism_example() -> bool {
    let z6 = parse("Z6").unwrap();
    let s3 = parse("S3").unwrap();
    let z6s3 = parse("Z6xS3").unwrap();
    let a_z6 = aut_count(&z6).unwrap();
    let a_s3 = aut_count(&s3).unwrap();
    let h = hom_count(&s3, &z6).unwrap();
    let a = aut_count(&z6s3).unwrap();
    let order = z6s3.order();
    let pass = a_z6 == 2u32.into()
        && a_s3 == 6u32.into()
        && h == 2u32.into()
        && a == 24u32.into()
        && order == 36u32.into()
        && order > a;
    report(
        6,
        pass,
        &format!("|Aut(Z6)| = {a_z6}, |Aut(S3)| = {a_s3}, |Hom(S3,Z6)| = {h}, |Aut(Z6xS3)| = {a}, |G| = {order}"),
    )
}

fn criterion_07_mathieu_counterexample() -> bool {
    let m11 = families::mathieu11();
    let spectrum = enumerated_spectrum(&m11).unwrap();
    let size = spectrum.group_order().to_u64().unwrap();
    let exp = spectrum.exponent().unwrap();
    let g = families::direct_product(vec![families::cyclic(exp).unwrap(), m11]).unwrap();
    let phi_g = group::order_spectrum(&g).unwrap().phi().unwrap();
    let bound = BigUint::from(euler_phi(exp)) * size;
    let pass = size == 7920 && exp == 1320 && bound == BigUint::from(2_534_400u32) && phi_g > bound;
    report(
        7,
        pass,
        &format!("|M11| = {size}, exp = {exp}, phi(Z{exp}xM11) = {phi_g} vs phi(m)|M11| = {bound}"),
    )
}

fn criterion_08_order_and_exponent_equivalences() -> bool {
    let cat = catalog_2000();
    let bad: Vec<String> = cat
        .par_iter()
        .filter(|e| {
            let c = aut::order_totient_check(&e.spec).unwrap();
            // phi_exp_check errors if k = 1 disagrees with phi(G) = phi(exp)
            let exp_ok = aut::phi_exp_check(&e.spec).is_ok();
            !c.sides_agree() || !exp_ok
        })
        .map(|e| e.spec.to_string())
        .collect();
    report(
        8,
        bad.is_empty(),
        &format!("{} catalog groups of order <= 2000, disagreements {bad:?}", cat.len()),
    )
}

fn criterion_09_abelian_automorphism_bound() -> bool {
    let types = abelian_types_up_to(128);
    let bad: Vec<String> = types
        .par_iter()
        .filter(|t| {
            let g = from_abelian_type(t);
            let p = oracle_phi(&g);
            let a = aut_count(&g).unwrap();
            !(p <= a && (p == a) == t.is_cyclic())
        })
        .map(|t| t.to_string())
        .collect();
    report(
        9,
        bad.is_empty(),
        &format!("{} abelian groups of order <= 128, violations {bad:?}", types.len()),
    )
}

fn criterion_10_metacyclic_criterion() -> bool {
    let sweep = metacyclic_sweep(40, 12);
    let mismatches: Vec<String> = sweep
        .par_iter()
        .filter(|p| {
            let g = families::metacyclic(p.m, p.n, p.s, p.r).unwrap();
            class_c::metacyclic_in_c(p.m, p.n, p.s, p.r).unwrap() != !oracle_phi(&g).is_zero()
        })
        .map(|p| format!("MC({},{},{},{})", p.m, p.n, p.s, p.r))
        .collect();
    let slice_bad: Vec<u64> = (2..=40u64)
        .filter(|&m| {
            let crit = class_c::metacyclic_in_c(m, 2, 0, m - 1).unwrap();
            let oracle = !oracle_phi(&families::metacyclic(m, 2, 0, m - 1).unwrap()).is_zero();
            crit != (m % 2 == 0) || oracle != (m % 2 == 0)
        })
        .collect();
    println!(
        "criterion 10: dihedral slice n = 2, r = m - 1: {} ({} of 39 disagree)",
        if slice_bad.is_empty() { "PASS" } else { "FAIL" },
        slice_bad.len()
    );
    let first: Vec<&String> = mismatches.iter().take(5).collect();
    report(
        10,
        mismatches.is_empty() && slice_bad.is_empty(),
        &format!(
            "{} presentations, {} disagree with the oracle, e.g. {first:?}",
            sweep.len(),
            mismatches.len()
        ),
    )
}

fn criterion_11_membership_equivalence() -> bool {
    let cat = catalog_2000();
    let bad: Vec<String> = cat
        .par_iter()
        .filter(|e| !class_c::membership_check(&e.spec).unwrap().agrees())
        .map(|e| e.spec.to_string())
        .collect();
    report(
        11,
        bad.is_empty(),
        &format!("{} catalog groups of order <= 2000, disagreements {bad:?}", cat.len()),
    )
}

fn criterion_12_prime_equation() -> bool {
    let expected: [(u64, &[&str]); 6] = [
        (2, &["Z3", "Z4", "Z6", "D8", "D12"]),
        (3, &["Z2^2"]),
        (5, &[]),
        (7, &["Z2^3"]),
        (13, &[]),
        (31, &["Z2^5"]),
    ];
    let mut problems = Vec::new();
    for (p, want) in expected {
        let s = solve_phi_eq_prime(p).unwrap();
        let got: Vec<String> = s.specs.iter().map(|g| g.to_string()).collect();
        if got != want {
            problems.push(format!("solve({p}) = {got:?}"));
        }
        let kind = match want.len() {
            0 => SolutionKind::Empty,
            1 => SolutionKind::SingleElementaryAbelian,
            _ => SolutionKind::FiveGroups,
        };
        if s.kind != kind {
            problems.push(format!("solve({p}) kind {:?}", s.kind));
        }
        for g in &s.specs {
            if oracle_phi(g) != BigUint::from(p) {
                problems.push(format!("phi({g}) != {p}"));
            }
        }
        let scan: Vec<String> = catalog_scan(p, 100).unwrap().iter().map(|g| g.to_string()).collect();
        let extra: Vec<&String> = scan.iter().filter(|g| !want.contains(&g.as_str())).collect();
        if !extra.is_empty() {
            problems.push(format!("scan({p}) extra {extra:?}"));
        }
    }
    report(12, problems.is_empty(), &format!("p in {{2,3,5,7,13,31}}, problems {problems:?}"))
}

fn main() {
    let criteria: [fn() -> bool; 12] = [
        criterion_01_worked_examples,
        criterion_02_abelian_closed_form,
        criterion_03_hamiltonian_closed_form,
        criterion_04_dihedral_and_p_groups,
        criterion_05_symmetric_and_alternating,
        criterion_06_automorphism_example,
        criterion_07_mathieu_counterexample,
        criterion_08_order_and_exponent_equivalences,
        criterion_09_abelian_automorphism_bound,
        criterion_10_metacyclic_criterion,
        criterion_11_membership_equivalence,
        criterion_12_prime_equation,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
