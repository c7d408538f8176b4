//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line with its measured
//! runtime and the bound it is held to; the test fails if any line is FAIL.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specht::combinatorics::{
    partitions_of, OneBoxShift, Partition, Permutation, SemistandardSet, Tableau, Tabloid,
};
use specht::exact_algebra::{
    smith_normal_form_with, Field, Integers, PrimeField, Rationals, Ring, SparseVector,
};
use specht::homomorphisms::{
    carter_payne_jm, endo_ring_restriction, hom_space, jm_layers, solve_coefficients,
    specht_membership, verify_coefficients, verify_relations, CarterPayneMap,
};
use specht::jantzen::{
    corrected_image, in_jantzen_by_decomposition, verify_jantzen_containment, GramMatrix,
    JantzenFiltration,
};
use specht::specht_modules::{act_jm, polytabloid, ModuleVector, SpechtBasis, TranspositionSum};

type Outcome = Result<String, String>;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn polytabloid_sum<R: Ring>(ring: &R, terms: &[(&str, i64)]) -> ModuleVector<R::Elem> {
    let mut out = SparseVector::new();
    for &(t, c) in terms {
        out.add_scaled(
            ring,
            &ring.from_i64(c),
            &polytabloid(ring, &tab(t)).unwrap(),
        );
    }
    out
}

fn murphy_multiplication() -> Outcome {
    let z = Integers;
    let e = polytabloid(&z, &tab("1234/567/8")).map_err(|e| e.to_string())?;
    let mut got = act_jm(&z, &e, &TranspositionSum::jucys_murphy(8)).map_err(|e| e.to_string())?;
    got.add_scaled(&z, &BigInt::from(2), &e);
    let expected = polytabloid_sum(
        &z,
        &[
            ("1834/567/2", 1),
            ("1234/587/6", 1),
            ("1284/567/3", 1),
            ("1234/568/7", 1),
            ("1238/567/4", 1),
        ],
    );
    ensure(got == expected, || {
        "e_t(L_8 + 2) differs from the five-term sum".into()
    })?;
    Ok(format!("{} tabloids in the support", got.len()))
}

fn one_box_example() -> Outcome {
    let f5 = field(5);
    let alpha = part("4,3");
    let beta = part("3,3,1");
    let expected = polytabloid_sum(
        &f5,
        &[
            ("143/567/2", 1),
            ("123/547/6", 1),
            ("124/567/3", 1),
            ("123/564/7", 1),
            ("123/567/4", 2),
        ],
    );
    let source = SpechtBasis::new(&alpha).map_err(|e| e.to_string())?;
    let target = SpechtBasis::new(&beta).map_err(|e| e.to_string())?;
    let j = source
        .index_of(&tab("1234/567"))
        .ok_or("1234/567 is not standard")?;

    let (lambda, u, v) = jm_layers(&alpha, &beta).map_err(|e| e.to_string())?;
    let jm = carter_payne_jm(&lambda, u, v, &f5).map_err(|e| e.to_string())?;
    let scalar = jm
        .scalar
        .ok_or("no scalar relating the two constructions")?;
    let jm_image = target.combine(&f5, &jm.matrix.image(j));

    let shift = OneBoxShift::from_pair(&alpha, &beta).map_err(|e| e.to_string())?;
    let explicit = CarterPayneMap::new(&shift).map_err(|e| e.to_string())?;
    let explicit_image = explicit
        .image(&f5, &tab("1234/567"))
        .map_err(|e| e.to_string())?;

    let proportional =
        |v: &ModuleVector<u64>| -> Option<u64> { (1..5).find(|&c| &expected.scale(&f5, &c) == v) };
    let c_jm = proportional(&jm_image).ok_or("JM image is not a multiple of the displayed sum")?;
    let c_ex = proportional(&explicit_image)
        .ok_or("explicit image is not a multiple of the displayed sum")?;
    ensure(c_jm == 1, || {
        format!("JM image is {c_jm} times the displayed sum")
    })?;
    ensure(
        f5.mul(&c_ex, &scalar) == c_jm || f5.mul(&c_jm, &scalar) == c_ex,
        || {
            format!("reported scalar {scalar} does not relate multiples {c_jm} (JM) and {c_ex} (explicit)")
        },
    )?;
    Ok(format!(
        "JM multiple {c_jm}, explicit multiple {c_ex}, reported scalar {scalar}"
    ))
}

fn explicit_coefficients() -> Outcome {
    let shift = OneBoxShift::from_pair(&part("4,3"), &part("3,3,1")).map_err(|e| e.to_string())?;
    ensure(shift.hooks() == vec![5, 3], || {
        format!("hooks {:?}", shift.hooks())
    })?;
    let map = CarterPayneMap::new(&shift).map_err(|e| e.to_string())?;
    let c = map.coefficients();
    let one = SemistandardSet::from_members([1]);
    let both = SemistandardSet::from_members([1, 2]);
    ensure(c.terms.len() == 2, || {
        format!("{} coefficients", c.terms.len())
    })?;
    ensure(c.get(&both) == Some(&BigInt::from(1)), || {
        format!("coefficient of {{1,2}}: {:?}", c.get(&both))
    })?;
    ensure(c.get(&one) == Some(&BigInt::from(-3)), || {
        format!("coefficient of {{1}}: {:?}", c.get(&one))
    })?;
    ensure(
        shift.tableau(&one).unwrap().to_string() == "1113/222",
        || "T_{1} tableau".into(),
    )?;
    ensure(
        shift.tableau(&both).unwrap().to_string() == "1112/223",
        || "T_{1,2} tableau".into(),
    )?;
    // independent route: the kernel of the ψ conditions over ℚ
    let solved = solve_coefficients(&shift)
        .map_err(|e| e.to_string())?
        .ok_or("ℚ kernel is not one-dimensional")?;
    let ratio = |s: &SemistandardSet| solved.iter().find(|(t, _)| t == s).map(|(_, v)| v.clone());
    let (r1, r2) = (
        ratio(&one).ok_or("missing {1}")?,
        ratio(&both).ok_or("missing {1,2}")?,
    );
    ensure(
        r1 == r2 * num_rational::BigRational::from_integer(BigInt::from(-3)),
        || "solved kernel is not (−3, 1)".into(),
    )?;
    Ok("h = (5,3), θ = θ̂_{1112/223} − 3θ̂_{1113/222}".into())
}

fn error_term_identity() -> Outcome {
    let z = Integers;
    let shift = OneBoxShift::from_pair(&part("4,3"), &part("3,3,1")).map_err(|e| e.to_string())?;
    let got = corrected_image(&shift, &tab("1234/567")).map_err(|e| e.to_string())?;
    let expected = polytabloid_sum(
        &z,
        &[
            ("123/564/7", 1),
            ("124/567/3", 1),
            ("132/574/6", 1),
            ("134/576/2", 1),
            ("123/567/4", -3),
        ],
    );
    ensure(got == expected, || {
        "e_tθ − 5𝓔_t differs from the displayed combination".into()
    })?;
    let by_kernels = specht_membership(&z, &got, shift.beta()).map_err(|e| e.to_string())?;
    let target = SpechtBasis::new(shift.beta()).map_err(|e| e.to_string())?;
    let by_straightening = target.expand(&z, &got).is_ok();
    ensure(by_kernels && by_straightening, || {
        format!("membership in S^β_ℤ: kernels {by_kernels}, straightening {by_straightening}")
    })?;
    Ok("exact over ℤ, in S^β_ℤ by both routes".into())
}

fn uniqueness_sweep() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5, 7] {
        let f = field(p);
        for n in 2..=7 {
            for shift in OneBoxShift::all_of_degree(n) {
                let dim = hom_space(&f, shift.alpha(), shift.beta())
                    .map_err(|e| e.to_string())?
                    .dim();
                let want = usize::from(shift.h_a() % p as i64 == 0);
                ensure(dim == want, || {
                    format!("{shift} mod {p}: dim Hom = {dim}, expected {want}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (pair, p) instances"))
}

fn relation_suite() -> Outcome {
    let (mut relations, mut coefficients, mut shifts) = (0, 0, 0);
    for n in 2..=7 {
        for shift in OneBoxShift::all_of_degree(n) {
            let r = verify_relations(&shift).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{shift}: {}", r.failures.join("; ")))?;
            let c = verify_coefficients(&shift).map_err(|e| e.to_string())?;
            ensure(c.passed(), || format!("{shift}: {}", c.failures.join("; ")))?;
            relations += r.checked;
            coefficients += c.checked;
            shifts += 1;
        }
    }
    Ok(format!(
        "{shifts} pairs, {relations} relation and {coefficients} coefficient identities"
    ))
}

fn endomorphism_sweep() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5, 7] {
        let f = field(p);
        for m in 2..=8 {
            for lambda in partitions_of(m) {
                let a = endo_ring_restriction(&lambda, &f).map_err(|e| e.to_string())?;
                a.verify().map_err(|e| format!("{lambda} mod {p}: {e}"))?;
                let expected: usize = a.blocks.iter().map(|b| b.nodes.len()).sum();
                ensure(
                    a.end_dim == expected && expected == lambda.removable_nodes().len(),
                    || format!("{lambda} mod {p}: End dim {} vs {expected}", a.end_dim),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, p) instances"))
}

fn jantzen_sweep() -> Outcome {
    let mut nonvacuous = 0;
    for p in [3u64, 5, 7] {
        let f = field(p);
        for n in 2..=7 {
            for shift in OneBoxShift::all_of_degree(n) {
                let r = verify_jantzen_containment(&shift, &f).map_err(|e| e.to_string())?;
                ensure(r.holds(), || format!("{shift} mod {p}: {r:?}"))?;
                if !r.vacuous {
                    nonvacuous += 1;
                }
            }
        }
    }
    let shift = OneBoxShift::from_pair(&part("4,3"), &part("3,3,1")).map_err(|e| e.to_string())?;
    let r = verify_jantzen_containment(&shift, &field(5)).map_err(|e| e.to_string())?;
    ensure(
        r.guaranteed == 1 && r.observed.is_some_and(|i| i >= 1),
        || format!("(3,3,1) mod 5: {r:?}"),
    )?;
    Ok(format!(
        "{nonvacuous} instances with p | h_a; (3,3,1) mod 5: image in J^{}, dims {:?}",
        r.observed.unwrap(),
        r.filtration_dims
    ))
}

fn semistandard_enumeration(rng: &mut ChaCha8Rng) -> Outcome {
    let shift = OneBoxShift::new(&part("4,3,3,2,1"), 1, 6).map_err(|e| e.to_string())?;
    let sets: Vec<String> = shift
        .semistandard_sets()
        .iter()
        .map(ToString::to_string)
        .collect();
    let listed = [
        "{1}",
        "{1,2,3}",
        "{1,3}",
        "{1,4}",
        "{1,5}",
        "{1,2,3,4}",
        "{1,2,3,5}",
        "{1,3,4}",
        "{1,3,5}",
        "{1,4,5}",
        "{1,2,3,4,5}",
        "{1,3,4,5}",
    ];
    ensure(
        sets.len() == 12 && listed.iter().all(|s| sets.iter().any(|x| x == s)),
        || format!("sets {sets:?}"),
    )?;
    let pool: Vec<Partition> = (3..=11).flat_map(partitions_of).collect();
    let mut instances = 0;
    while instances < 200 {
        let alpha = pool.choose(rng).unwrap();
        let shifts = OneBoxShift::all_of(alpha);
        let Some(shift) = shifts.choose(rng) else {
            continue;
        };
        let exhaustive = specht::combinatorics::semistandard_tableaux(
            shift.alpha(),
            &shift.beta().to_composition(),
        )
        .len();
        let formula = shift.count_formula() as usize;
        ensure(
            exhaustive == formula && shift.semistandard_sets().len() == formula,
            || format!("{shift}: formula {formula}, exhaustive {exhaustive}"),
        )?;
        instances += 1;
    }
    Ok(format!(
        "12 sets listed; {instances} random instances match"
    ))
}

fn random_tableau(shape: &Partition, rng: &mut ChaCha8Rng) -> Tableau {
    let mut images: Vec<usize> = (1..=shape.n()).collect();
    images.shuffle(rng);
    Tableau::row_reading(shape)
        .act(&Permutation::from_images(images).unwrap())
        .unwrap()
}

fn random_module_vector<F: Field>(
    f: &F,
    shape: &Partition,
    rng: &mut ChaCha8Rng,
) -> ModuleVector<F::Elem> {
    let mut v = SparseVector::new();
    for _ in 0..rng.gen_range(1..=3) {
        let e = polytabloid(f, &random_tableau(shape, rng)).unwrap();
        v.add_scaled(f, &f.from_i64(rng.gen_range(-4..=4)), &e);
    }
    if rng.gen_bool(0.5) {
        let t = Tabloid::of_tableau(&random_tableau(shape, rng)).unwrap();
        v.add_term(f, t, &f.from_i64(rng.gen_range(1..=4)));
    }
    v
}

fn membership_cross_checks(rng: &mut ChaCha8Rng) -> Outcome {
    let shapes: Vec<Partition> = (2..=6).flat_map(partitions_of).collect();
    let (mut inside, mut outside) = (0, 0);
    for k in 0..500 {
        let shape = shapes.choose(rng).unwrap();
        let basis = SpechtBasis::new(shape).unwrap();
        let (kernels, solve) = if k % 5 == 4 {
            let q = Rationals;
            let v = random_module_vector(&q, shape, rng);
            (
                specht_membership(&q, &v, shape).unwrap(),
                basis.expand_by_solve(&q, &v).is_ok(),
            )
        } else {
            let f = field(*[2u64, 3, 5, 7].choose(rng).unwrap());
            let v = random_module_vector(&f, shape, rng);
            (
                specht_membership(&f, &v, shape).unwrap(),
                basis.expand_by_solve(&f, &v).is_ok(),
            )
        };
        ensure(kernels == solve, || {
            format!("vector {k} in S^({shape}): kernels {kernels}, solve {solve}")
        })?;
        if kernels {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    ensure(inside > 50 && outside > 50, || {
        format!("unbalanced sample: {inside} in, {outside} out")
    })?;

    let shapes: Vec<Partition> = (3..=6)
        .flat_map(partitions_of)
        .filter(|s| s.len() > 1 && s.parts()[0] > 1)
        .collect();
    let (mut member, mut nonmember) = (0, 0);
    for k in 0..200 {
        let shape = shapes.choose(rng).unwrap();
        let p = *[2u64, 3, 5].choose(rng).unwrap();
        let basis = SpechtBasis::new(shape).unwrap();
        let gram = GramMatrix::new(&basis).unwrap();
        let level = rng.gen_range(1..=3u32);
        let snf = smith_normal_form_with(&gram.entries, false, true);
        let v = snf.v.expect("tracked");
        let d = gram.dim();
        // x = V y with p^{level - v_p(d_k)} | y_k lies in J^level; perturb half of them
        let mut y: Vec<BigInt> = snf
            .d
            .iter()
            .map(|dk| {
                let vp = specht::exact_algebra::p_adic_valuation(dk, p).unwrap();
                BigInt::from(p).pow(level.saturating_sub(vp)) * rng.gen_range(-3i64..=3)
            })
            .collect();
        if rng.gen_bool(0.5) {
            let i = rng.gen_range(0..d);
            y[i] += BigInt::one();
        }
        let x: Vec<BigInt> = (0..d)
            .map(|i| (0..d).fold(BigInt::zero(), |acc, k| acc + v.get(i, k) * &y[k]))
            .collect();
        let congruence = gram.in_jantzen_level(&x, p, level);
        let decomposition = in_jantzen_by_decomposition(&basis, &gram, &x, p, level).unwrap();
        ensure(congruence == decomposition, || {
            format!("Jantzen vector {k} in S^({shape}) mod {p} level {level}: {congruence} vs {decomposition}")
        })?;
        if congruence {
            let filtration = JantzenFiltration::new(&gram, p).unwrap();
            let reduced: Vec<u64> = x.iter().map(|c| field(p).from_int(c)).collect();
            ensure(filtration.contains(&reduced, level).unwrap(), || {
                format!("Jantzen vector {k} not in J^{level} mod {p}")
            })?;
            member += 1;
        } else {
            nonmember += 1;
        }
    }
    ensure(member > 20 && nonmember > 20, || {
        format!("unbalanced Jantzen sample: {member} in, {nonmember} out")
    })?;
    Ok(format!(
        "500 membership vectors ({inside} in S), 200 Jantzen vectors ({member} in J^i)"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    bound: Duration,
    run: Box<dyn FnOnce() -> Outcome>,
}

#[test]
fn acceptance() {
    let seed = 0x5eed_2024_u64;
    let mut rng_enum = ChaCha8Rng::seed_from_u64(seed);
    let mut rng_member = ChaCha8Rng::seed_from_u64(seed + 1);
    let criteria = vec![
        Criterion {
            id: 1,
            name: "JM action example",
            bound: Duration::from_secs(1),
            run: Box::new(murphy_multiplication),
        },
        Criterion {
            id: 2,
            name: "one-box example over GF(5)",
            bound: Duration::from_secs(5),
            run: Box::new(one_box_example),
        },
        Criterion {
            id: 3,
            name: "explicit coefficients",
            bound: Duration::from_secs(5),
            run: Box::new(explicit_coefficients),
        },
        Criterion {
            id: 4,
            name: "error-term identity",
            bound: Duration::from_secs(5),
            run: Box::new(error_term_identity),
        },
        Criterion {
            id: 5,
            name: "uniqueness sweep n ≤ 7",
            bound: Duration::from_secs(600),
            run: Box::new(uniqueness_sweep),
        },
        Criterion {
            id: 6,
            name: "relation suite n ≤ 7",
            bound: Duration::from_secs(600),
            run: Box::new(relation_suite),
        },
        Criterion {
            id: 7,
            name: "endomorphism rings m ≤ 8",
            bound: Duration::from_secs(900),
            run: Box::new(endomorphism_sweep),
        },
        Criterion {
            id: 8,
            name: "Jantzen containment n ≤ 7",
            bound: Duration::from_secs(600),
            run: Box::new(jantzen_sweep),
        },
        Criterion {
            id: 9,
            name: "semistandard enumeration",
            bound: Duration::from_secs(600),
            run: Box::new(move || semistandard_enumeration(&mut rng_enum)),
        },
        Criterion {
            id: 10,
            name: "membership oracles",
            bound: Duration::from_secs(600),
            run: Box::new(move || membership_cross_checks(&mut rng_member)),
        },
    ];
    let mut failed = Vec::new();
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.bound => Ok(detail),
            Ok(detail) => Err(format!("{detail}; exceeded {:?}", c.bound)),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!(
                "PASS {:>2} {} [{:.2?} ≤ {:?}]: {detail}",
                c.id, c.name, elapsed, c.bound
            ),
            Err(e) => {
                println!(
                    "FAIL {:>2} {} [{:.2?}, bound {:?}]: {e}",
                    c.id, c.name, elapsed, c.bound
                );
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
