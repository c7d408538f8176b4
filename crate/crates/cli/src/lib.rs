//! The `specht` command-line tool: argument handling, report construction and rendering.

mod args;
mod report;

use specht::combinatorics::{OneBoxShift, Partition, Tableau};
use specht::exact_algebra::{Integers, PrimeField, Ring};
use specht::homomorphisms::{
    carter_payne_jm, endo_ring_induced, endo_ring_restriction, hom_space, jm_layers,
    verify_coefficients, verify_relations, CarterPayneMap, HomMatrix,
};
use specht::jantzen::{corrected_image, jantzen_filtration, verify_jantzen_containment};
use specht::limits::{check_degree, set_max_degree, HARD_MAX_DEGREE};
use specht::specht_modules::{vector_record, SpechtBasis, SpechtSeries};
use specht::Error;

pub use args::{Cli, Command, Format};
pub use report::*;

/// Exit statuses of the tool.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure before a report could be produced.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if cli.force {
        set_max_degree(HARD_MAX_DEGREE);
    }
    match build(cli) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            let (code, stderr) = if report.passed() {
                (EXIT_OK, String::new())
            } else {
                (
                    EXIT_CHECK_FAILED,
                    "error: a verification check failed\n".into(),
                )
            };
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
        Err(Failure::Invalid(msg)) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Check(msg)) => Outcome {
            code: EXIT_CHECK_FAILED,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    let p: Partition = s.parse()?;
    check_degree(p.n())?;
    Ok(p)
}

/// A field for `p`, refusing 2 unless the command is brute force and `--allow-p2` is set.
fn prime_field(p: u64, brute_force: bool, allow_p2: bool) -> Result<PrimeField, Failure> {
    let f = PrimeField::new(p)?;
    if p == 2 && !(brute_force && allow_p2) {
        let hint = if brute_force {
            " (pass --allow-p2 to compute it anyway)"
        } else {
            ""
        };
        return Err(Failure::Invalid(format!(
            "p = 2 is outside the hypotheses of this command{hint}"
        )));
    }
    Ok(f)
}

fn shift_of(args: &args::ShiftArgs) -> Result<OneBoxShift, Failure> {
    let alpha = partition(&args.alpha)?;
    match (&args.beta, args.a, args.b) {
        (Some(beta), _, _) => Ok(OneBoxShift::from_pair(&alpha, &partition(beta)?)?),
        (None, Some(a), Some(b)) => Ok(OneBoxShift::new(&alpha, a, b)?),
        _ => Err(Failure::Invalid("give --beta or both --a and --b".into())),
    }
}

fn terms<R: Ring>(ring: &R, basis: &SpechtBasis, coords: &[R::Elem]) -> Vec<Term> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(k, c)| Term {
            tableau: basis.tableau(k).clone(),
            coefficient: ring.to_scalar(c),
        })
        .collect()
}

fn map_images<R: Ring>(
    map: &HomMatrix<R>,
    source: &SpechtBasis,
    target: &SpechtBasis,
) -> MapImages {
    let ring = map.entries.ring();
    let images = (0..map.domain_dim())
        .map(|j| {
            (
                source.tableau(j).clone(),
                terms(ring, target, &map.image(j)),
            )
        })
        .collect();
    MapImages { images }
}

fn build(cli: &Cli) -> Result<Report, Failure> {
    Ok(match &cli.command {
        Command::Tableaux(a) => {
            let shift = shift_of(a)?;
            let tableaux = shift
                .enumerate()
                .into_iter()
                .map(|(set, tableau)| SetTableau { set, tableau })
                .collect();
            Report::Tableaux(TableauxReport {
                hooks: shift.hooks(),
                removable_set: shift.removable_set(),
                count_formula: shift.count_formula(),
                tableaux,
                shift,
            })
        }
        Command::Hom(a) => {
            let alpha = partition(&a.alpha)?;
            let beta = partition(&a.beta)?;
            let f = prime_field(a.p, true, cli.allow_p2)?;
            let space = hom_space(&f, &alpha, &beta)?;
            let (source, target) = (SpechtBasis::new(&alpha)?, SpechtBasis::new(&beta)?);
            Report::Hom(HomReport {
                field: format!("GF({})", a.p),
                dim: space.dim(),
                basis: space.basis.iter().map(HomMatrix::to_record).collect(),
                images: space
                    .basis
                    .iter()
                    .map(|m| map_images(m, &source, &target))
                    .collect(),
                alpha,
                beta,
            })
        }
        Command::CpMap(a) => cp_map(a)?,
        Command::JmMap(a) => {
            let f = prime_field(a.p, false, cli.allow_p2)?;
            let (lambda, from, to) = match (&a.lambda, &a.alpha, &a.beta) {
                (Some(l), _, _) => (partition(l)?, a.from.unwrap_or(0), a.to.unwrap_or(0)),
                (None, Some(x), Some(y)) => jm_layers(&partition(x)?, &partition(y)?)?,
                _ => {
                    return Err(Failure::Invalid(
                        "give --lambda with --from/--to, or --alpha with --beta".into(),
                    ))
                }
            };
            check_degree(lambda.n())?;
            let m = carter_payne_jm(&lambda, from, to, &f)?;
            Report::JmMap(JmMapReport {
                lambda: m.lambda,
                source_layer: m.source_layer,
                target_layer: m.target_layer,
                alpha: m.alpha,
                beta: m.beta,
                prime: m.prime,
                residues: m.residues,
                scalar: m.scalar,
                matrix: a.matrix.then(|| m.matrix.to_record()),
            })
        }
        Command::Endo(a) => {
            let lambda = partition(&a.lambda)?;
            let f = prime_field(a.p, false, cli.allow_p2)?;
            let analysis = if a.induce {
                check_degree(lambda.n() + 1)?;
                endo_ring_induced(&lambda, &f)?
            } else {
                endo_ring_restriction(&lambda, &f)?
            };
            let layers = if a.induce {
                Vec::new()
            } else {
                let series = SpechtSeries::new(&lambda)?;
                series
                    .layers()
                    .iter()
                    .map(|l| LayerNode {
                        node: l.node,
                        residue: l.node.residue(a.p) as u64,
                        tableau: series.basis().tableau(l.members[0]).clone(),
                    })
                    .collect()
            };
            let failure = analysis.verify().err().map(|e| e.to_string());
            Report::Endo(EndoReport {
                analysis,
                layers,
                failure,
            })
        }
        Command::Jantzen(a) => {
            let beta = partition(&a.beta)?;
            let f = prime_field(a.p, a.contain.is_none(), cli.allow_p2)?;
            let filtration = jantzen_filtration(&beta, a.p)?;
            let filtration = if a.bases {
                filtration
            } else {
                filtration.without_bases()
            };
            let containment = match &a.contain {
                Some(alpha) => Some(verify_jantzen_containment(
                    &OneBoxShift::from_pair(&partition(alpha)?, &beta)?,
                    &f,
                )?),
                None => None,
            };
            Report::Jantzen(JantzenReport {
                filtration,
                containment,
            })
        }
        Command::Verify(a) => verify(a, cli.allow_p2)?,
    })
}

fn cp_map(a: &args::CpMapArgs) -> Result<Report, Failure> {
    let shift = shift_of(&a.shift)?;
    let map = CarterPayneMap::new(&shift)?;
    let field = match a.p {
        Some(p) => {
            let f = prime_field(p, false, false)?;
            map.check_prime(&f)?;
            Some(f)
        }
        None => None,
    };
    let image = match &a.image_of {
        None => None,
        Some(which) => {
            let t = if which == "row-reading" {
                Tableau::row_reading(shift.alpha())
            } else {
                let t: Tableau = which.parse()?;
                if !t.is_bijective() || &t.shape() != shift.alpha() {
                    return Err(Failure::Invalid(format!(
                        "{t} is not a bijective tableau of shape ({})",
                        shift.alpha()
                    )));
                }
                t
            };
            let target = SpechtBasis::new(shift.beta())?;
            let (tabloids, expansion) = match &field {
                Some(f) => {
                    let v = map.image(f, &t)?;
                    let coords = target.expand(f, &v)?;
                    (vector_record(f, &v), Some(terms(f, &target, &coords)))
                }
                None => (vector_record(&Integers, &map.image(&Integers, &t)?), None),
            };
            let corrected = corrected_image(&shift, &t)?;
            let coords = target.expand(&Integers, &corrected).map_err(|e| {
                Failure::Check(format!(
                    "e_tθ - h_a E_t is not in S^({})_Z: {e}",
                    shift.beta()
                ))
            })?;
            Some(ImageReport {
                tableau: t,
                tabloids,
                expansion,
                corrected: Some(terms(&Integers, &target, &coords)),
            })
        }
    };
    let matrix = match (&field, a.matrix) {
        (_, false) => None,
        (Some(f), true) => Some(map.specht_matrix(f)?.to_record()),
        (None, true) => Some(map.integral()?.to_record()),
    };
    Ok(Report::CpMap(CpMapReport {
        hooks: shift.hooks(),
        field: field.map_or("Z".to_string(), |f| format!("GF({})", f.modulus())),
        coefficients: map.coefficients().terms.clone(),
        image,
        matrix,
        shift,
    }))
}

fn verify(a: &args::VerifyArgs, allow_p2: bool) -> Result<Report, Failure> {
    check_degree(a.max_n)?;
    let fields = a
        .primes
        .iter()
        .map(|&p| prime_field(p, false, allow_p2))
        .collect::<Result<Vec<_>, _>>()?;
    let shifts: Vec<OneBoxShift> = (2..=a.max_n).flat_map(OneBoxShift::all_of_degree).collect();
    let mut relations = VerifySection {
        name: "relations".into(),
        checked: 0,
        failures: Vec::new(),
    };
    let mut coefficients = VerifySection {
        name: "coefficients".into(),
        checked: 0,
        failures: Vec::new(),
    };
    for s in &shifts {
        let r = verify_relations(s)?;
        relations.checked += r.checked;
        relations
            .failures
            .extend(r.failures.into_iter().map(|f| format!("{s}: {f}")));
        let c = verify_coefficients(s)?;
        coefficients.checked += c.checked;
        coefficients
            .failures
            .extend(c.failures.into_iter().map(|f| format!("{s}: {f}")));
    }
    let mut uniqueness = VerifySection {
        name: "uniqueness".into(),
        checked: 0,
        failures: Vec::new(),
    };
    let mut jm = VerifySection {
        name: "jm-maps".into(),
        checked: 0,
        failures: Vec::new(),
    };
    let mut jantzen = VerifySection {
        name: "jantzen".into(),
        checked: 0,
        failures: Vec::new(),
    };
    for f in &fields {
        let p = f.modulus();
        for s in &shifts {
            let dim = hom_space(f, s.alpha(), s.beta())?.dim();
            let want = usize::from(s.h_a() % p as i64 == 0);
            uniqueness.checked += 1;
            if dim != want {
                uniqueness
                    .failures
                    .push(format!("{s} mod {p}: dim Hom = {dim}, expected {want}"));
            }
            if want == 1 {
                jm.checked += 1;
                let (lambda, u, v) = jm_layers(s.alpha(), s.beta())?;
                match carter_payne_jm(&lambda, u, v, f) {
                    Ok(m) if m.scalar.is_some() => {}
                    Ok(_) => jm
                        .failures
                        .push(format!("{s} mod {p}: no proportionality scalar")),
                    Err(e) => jm.failures.push(format!("{s} mod {p}: {e}")),
                }
            }
            let c = verify_jantzen_containment(s, f)?;
            jantzen.checked += 1;
            if !c.holds() {
                jantzen.failures.push(format!(
                    "{s} mod {p}: image in J^{:?}, expected J^{}",
                    c.observed, c.guaranteed
                ));
            }
        }
    }
    Ok(Report::Verify(VerifyReport {
        max_n: a.max_n,
        primes: a.primes.clone(),
        sections: vec![relations, coefficients, uniqueness, jm, jantzen],
    }))
}
