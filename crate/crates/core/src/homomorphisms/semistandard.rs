use crate::combinatorics::{Composition, Partition, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::exact_algebra::{Ring, SparseVector};
use crate::specht_modules::{column_signed_terms, ModuleVector, SpechtBasis, TabloidModule};

use super::hom_matrix::{HomMatrix, ModuleDescriptor};

fn check_type(t: &Tableau, ty: &Composition) -> Result<()> {
    if !t.has_type(ty) {
        return Err(Error::InvalidTableau(format!(
            "{t} does not have type ({ty})"
        )));
    }
    Ok(())
}

/// `e_s θ_T = Σ_{U ≈ T} U C_s^-` in `M^ν`, where `ν` is the type of `T`.
///
/// `s` is a bijective tableau and `T` a filling of the same shape with content `ν`.
/// Row-equivalent fillings with a repeated entry in some column contribute nothing.
pub fn theta_image<R: Ring>(
    ring: &R,
    s: &Tableau,
    t: &Tableau,
    ty: &Composition,
) -> Result<ModuleVector<R::Elem>> {
    if !s.is_bijective() || s.shape() != t.shape() {
        return Err(Error::InvalidTableau(format!(
            "{s} is not a bijective tableau of the shape of {t}"
        )));
    }
    check_type(t, ty)?;
    let one = ring.one();
    let minus = ring.neg(&one);
    let mut out = SparseVector::new();
    for u in t.row_equivalents() {
        for (k, sign) in column_signed_terms(s, &u, ty.len()) {
            out.add_term(ring, k, if sign > 0 { &one } else { &minus });
        }
    }
    Ok(out)
}

/// `{s} θ_T = Σ_{U ≈ T} U`, where `U` stands for the tabloid placing `s(x)` in row `U(x)`.
pub fn theta_on_tabloid<R: Ring>(
    ring: &R,
    tabloid: &Tabloid,
    t: &Tableau,
    ty: &Composition,
) -> Result<ModuleVector<R::Elem>> {
    check_type(t, ty)?;
    let s = Tableau::new(tabloid.rows()).map_err(|_| {
        Error::ShapeMismatch(format!("{tabloid} is not a tabloid of partition shape"))
    })?;
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(format!("{tabloid} vs {t}")));
    }
    let mut out = SparseVector::new();
    for u in t.row_equivalents() {
        out.add_term(ring, Tabloid::from_labelled(&s, &u, ty.len())?, &ring.one());
    }
    Ok(out)
}

/// The semistandard homomorphism `θ̂_T : S^α → M^ν` on the standard basis of `S^α`.
pub fn theta_t<R: Ring>(
    ring: &R,
    basis: &SpechtBasis,
    t: &Tableau,
    ty: &Composition,
) -> Result<HomMatrix<R>> {
    if &t.shape() != basis.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{t} is not a {}-tableau",
            basis.shape()
        )));
    }
    if !t.is_semistandard() {
        return Err(Error::InvalidTableau(format!("{t} is not semistandard")));
    }
    let module = TabloidModule::new(ty)?;
    let images = basis
        .tableaux()
        .iter()
        .map(|s| module.coordinates(&theta_image(ring, s, t, ty)?))
        .collect::<Result<Vec<_>>>()?;
    HomMatrix::from_images(
        ModuleDescriptor::Specht {
            shape: basis.shape().clone(),
        },
        ModuleDescriptor::Tabloids { shape: ty.clone() },
        ring.clone(),
        module.dim(),
        images,
    )
}

/// All `r`-element subsets of `items`, in lexicographic order of positions.
pub(crate) fn subsets<T: Copy>(items: &[T], r: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], r: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in start..items.len() {
            if items.len() - k < r - cur.len() {
                break;
            }
            cur.push(items[k]);
            go(items, r, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Target type of `ψ_{i,r}` on `M^β`: rows `i` and `i+1` become `β_i + β_{i+1} - r` and `r`.
pub fn psi_target(beta: &Composition, i: usize, r: usize) -> Result<Composition> {
    if i == 0 || i >= beta.len() {
        return Err(Error::InvalidArgument(format!(
            "row {i} must lie in 1..{}",
            beta.len()
        )));
    }
    if r >= beta.part(i + 1) {
        return Err(Error::InvalidArgument(format!(
            "r = {r} must be below β_{} = {}",
            i + 1,
            beta.part(i + 1)
        )));
    }
    let mut parts = beta.parts().to_vec();
    parts[i - 1] = beta.part(i) + beta.part(i + 1) - r;
    parts[i] = r;
    Ok(Composition::new(parts))
}

/// `v ψ_{i,r}` for `v ∈ M^β`: each tabloid goes to the sum over the ways of keeping `r`
/// symbols of row `i+1` and moving the rest into row `i`.
pub fn psi_apply<R: Ring>(
    ring: &R,
    v: &ModuleVector<R::Elem>,
    beta: &Composition,
    i: usize,
    r: usize,
) -> Result<ModuleVector<R::Elem>> {
    psi_target(beta, i, r)?;
    let mut out = SparseVector::new();
    for (k, c) in v.iter() {
        if k.shape() != *beta {
            return Err(Error::ShapeMismatch(format!(
                "tabloid {k} is not in M^({beta})"
            )));
        }
        let lower: Vec<usize> = (1..=k.degree()).filter(|&x| k.row_of(x) == i + 1).collect();
        for moved in subsets(&lower, lower.len() - r) {
            let image = moved
                .iter()
                .fold(*k, |acc, &x| acc.with_symbol_in_row(x, i));
            out.add_term(ring, image, c);
        }
    }
    Ok(out)
}

/// `ψ_{i,r} : M^β → M^ν` on tabloid bases.
pub fn psi_matrix<R: Ring>(
    ring: &R,
    beta: &Composition,
    i: usize,
    r: usize,
) -> Result<HomMatrix<R>> {
    let target = psi_target(beta, i, r)?;
    let source = TabloidModule::new(beta)?;
    let module = TabloidModule::new(&target)?;
    let images = source
        .basis()
        .iter()
        .map(|k| module.coordinates(&psi_apply(ring, &SparseVector::unit(ring, *k), beta, i, r)?))
        .collect::<Result<Vec<_>>>()?;
    HomMatrix::from_images(
        ModuleDescriptor::Tabloids {
            shape: beta.clone(),
        },
        ModuleDescriptor::Tabloids { shape: target },
        ring.clone(),
        module.dim(),
        images,
    )
}

/// Whether `v ∈ M^β` lies in `S^β`, decided by the kernel intersection: `v ψ_{i,r} = 0`
/// for all `1 ≤ i < ℓ(β)` and `0 ≤ r < β_{i+1}`.
pub fn specht_membership<R: Ring>(
    ring: &R,
    v: &ModuleVector<R::Elem>,
    beta: &Partition,
) -> Result<bool> {
    let ty = beta.to_composition();
    for i in 1..beta.len() {
        for r in 0..beta.part(i + 1) {
            if !psi_apply(ring, v, &ty, i, r)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Integers;
    use crate::specht_modules::polytabloid;
    use num_bigint::BigInt;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(subsets(&[1, 2, 3], 0), vec![Vec::<i32>::new()]);
        assert_eq!(subsets(&[1, 2, 3], 3).len(), 1);
    }

    #[test]
    fn identity_type_gives_embedding() {
        let z = Integers;
        let s = tab("135/24");
        let t = tab("111/22");
        let image = theta_image(&z, &s, &t, &comp(&[3, 2])).unwrap();
        assert_eq!(image, polytabloid(&z, &s).unwrap());
    }

    #[test]
    fn psi_relation_on_semistandard_maps() {
        // θ_{1112/223} ψ_{1,2} = 4 θ_{1111/223} + θ_{1112/123} on M^(4,3)
        let z = Integers;
        let beta = comp(&[3, 3, 1]);
        let nu = comp(&[4, 2, 1]);
        for k in crate::combinatorics::tabloids_of(&comp(&[4, 3])) {
            let lhs = psi_apply(
                &z,
                &theta_on_tabloid(&z, &k, &tab("1112/223"), &beta).unwrap(),
                &beta,
                1,
                2,
            )
            .unwrap();
            let mut rhs = theta_on_tabloid(&z, &k, &tab("1111/223"), &nu)
                .unwrap()
                .scale(&z, &BigInt::from(4));
            rhs = rhs.add(
                &z,
                &theta_on_tabloid(&z, &k, &tab("1112/123"), &nu).unwrap(),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn membership_basics() {
        let z = Integers;
        let beta: Partition = "2,1".parse().unwrap();
        let e = polytabloid(&z, &tab("13/2")).unwrap();
        assert!(specht_membership(&z, &e, &beta).unwrap());
        let single = SparseVector::unit(&z, Tabloid::from_rows(&[vec![1, 3], vec![2]]).unwrap());
        assert!(!specht_membership(&z, &single, &beta).unwrap());
        assert!(!psi_apply(&z, &single, &beta.to_composition(), 1, 0)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn psi_range_is_checked() {
        let beta = comp(&[3, 3, 1]);
        assert!(psi_target(&beta, 1, 3).is_err());
        assert!(psi_target(&beta, 3, 0).is_err());
        assert_eq!(psi_target(&beta, 2, 0).unwrap(), comp(&[3, 4, 0]));
    }
}
