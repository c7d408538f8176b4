use specht::combinatorics::{OneBoxShift, Permutation, Tableau};
use specht::exact_algebra::{rank, Field, Integers, PrimeField, Rationals, SparseVector};
use specht::homomorphisms::{intertwiners, specht_membership, theta_t, CarterPayneMap};
use specht::jantzen::corrected_image;
use specht::specht_modules::{MatrixRepresentation, SpechtBasis};

/// `Hom(S^α, M^β)` has the semistandard maps `θ_T` as a basis (p odd).
fn check_semistandard_basis<F: Field>(field: &F, shift: &OneBoxShift) {
    let basis = SpechtBasis::new(shift.alpha()).unwrap();
    let ty = shift.beta().to_composition();
    let domain = MatrixRepresentation::specht(field.clone(), &basis).unwrap();
    let codomain = MatrixRepresentation::tabloids(field.clone(), &ty).unwrap();
    let space = intertwiners(&domain, &codomain).unwrap();
    let count = shift.count_formula() as usize;
    assert_eq!(space.len(), count, "{shift} over {}", field.name());

    let mut flattened = Vec::new();
    for (_, t) in shift.enumerate() {
        let m = theta_t(field, &basis, &t, &ty).unwrap();
        assert!(
            m.intertwines(domain.matrices(), codomain.matrices())
                .unwrap(),
            "θ_{t} for {shift}"
        );
        let x = m.row_form();
        let mut flat = SparseVector::new();
        for (i, row) in x.rows().iter().enumerate() {
            for (&j, c) in row.iter() {
                flat.add_term(field, i * x.ncols() + j, c);
            }
        }
        flattened.push(flat);
    }
    let width = basis.dim() * codomain.dim();
    let stacked =
        specht::exact_algebra::ExactMatrix::from_rows(field.clone(), width, flattened).unwrap();
    assert_eq!(
        rank(&stacked),
        count,
        "θ_T independent for {shift} over {}",
        field.name()
    );
}

#[test]
fn semistandard_maps_form_a_basis() {
    for n in 2..=6 {
        for shift in OneBoxShift::all_of_degree(n) {
            check_semistandard_basis(&Rationals, &shift);
            for p in [3u64, 5] {
                check_semistandard_basis(&PrimeField::new(p).unwrap(), &shift);
            }
        }
    }
}

#[test]
fn explicit_map_is_a_homomorphism_when_p_divides_h() {
    for n in 2..=7 {
        for shift in OneBoxShift::all_of_degree(n) {
            for p in [3u64, 5, 7] {
                if shift.h_a() % p as i64 != 0 {
                    continue;
                }
                let f = PrimeField::new(p).unwrap();
                let map = CarterPayneMap::new(&shift).unwrap();
                let m = map.specht_matrix(&f).unwrap();
                assert!(!m.is_zero(), "{shift} mod {p}");
                let domain = MatrixRepresentation::specht(f, map.source()).unwrap();
                let codomain =
                    MatrixRepresentation::specht(f, &SpechtBasis::new(shift.beta()).unwrap())
                        .unwrap();
                assert!(
                    m.intertwines(domain.matrices(), codomain.matrices())
                        .unwrap(),
                    "{shift} mod {p}"
                );
            }
        }
    }
}

#[test]
fn corrected_image_is_integral_for_every_tableau() {
    let z = Integers;
    for n in 3..=6 {
        for shift in OneBoxShift::all_of_degree(n) {
            let basis = SpechtBasis::new(shift.alpha()).unwrap();
            let target = SpechtBasis::new(shift.beta()).unwrap();
            let reversed = Permutation::from_images((1..=n).rev().collect()).unwrap();
            let mut tableaux: Vec<Tableau> = basis.tableaux().to_vec();
            tableaux.push(Tableau::row_reading(shift.alpha()).act(&reversed).unwrap());
            for t in tableaux {
                let v = corrected_image(&shift, &t).unwrap();
                assert!(
                    specht_membership(&z, &v, shift.beta()).unwrap(),
                    "{shift}, t = {t}"
                );
                assert!(target.expand(&z, &v).is_ok(), "{shift}, t = {t}");
            }
        }
    }
}
