use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{reduce_residue, OneBoxShift, Partition, SemistandardSet, Tableau};
use crate::error::{Error, Result};
use crate::exact_algebra::{Field, Integers, PrimeField, Ring, SparseVector};
use crate::specht_modules::{
    act_jm, ModuleVector, SpechtBasis, SpechtSeries, TabloidModule, TranspositionSum,
};

use super::hom_matrix::{HomMatrix, ModuleDescriptor};
use super::semistandard::theta_image;

/// One coefficient `Λ_T` of a combination `Σ_T Λ_T θ̂_T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTerm {
    pub set: SemistandardSet,
    pub tableau: Tableau,
    #[serde(with = "crate::exact_algebra::decimal")]
    pub value: BigInt,
}

/// Integer coefficients `Λ_T` indexed by semistandard sets, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientVector {
    pub terms: Vec<CoefficientTerm>,
}

impl CoefficientVector {
    /// `Λ_T = (-1)^{|T|} ∏_{u ∈ R \ T} h_u`.
    pub fn explicit(shift: &OneBoxShift) -> Self {
        let removable = shift.removable_set();
        let terms = shift
            .enumerate()
            .into_iter()
            .map(|(set, tableau)| {
                let product: BigInt = removable
                    .difference(&set)
                    .members()
                    .iter()
                    .map(|&u| BigInt::from(shift.hook(u)))
                    .product();
                CoefficientTerm {
                    value: product * set.sign(),
                    set,
                    tableau,
                }
            })
            .collect();
        CoefficientVector { terms }
    }

    pub fn get(&self, set: &SemistandardSet) -> Option<&BigInt> {
        self.terms.iter().find(|t| &t.set == set).map(|t| &t.value)
    }

    pub fn values(&self) -> Vec<BigInt> {
        self.terms.iter().map(|t| t.value.clone()).collect()
    }
}

/// The one-box-shift map `θ̂ = Σ_T Λ_T θ̂_T : S^α → M^β`, built over ℤ.
#[derive(Debug, Clone)]
pub struct CarterPayneMap {
    shift: OneBoxShift,
    coefficients: CoefficientVector,
    source: SpechtBasis,
}

impl CarterPayneMap {
    pub fn new(shift: &OneBoxShift) -> Result<Self> {
        Ok(CarterPayneMap {
            shift: shift.clone(),
            coefficients: CoefficientVector::explicit(shift),
            source: SpechtBasis::new(shift.alpha())?,
        })
    }

    pub fn shift(&self) -> &OneBoxShift {
        &self.shift
    }

    pub fn coefficients(&self) -> &CoefficientVector {
        &self.coefficients
    }

    pub fn source(&self) -> &SpechtBasis {
        &self.source
    }

    /// `e_s θ̂` in `M^β` for a bijective `α`-tableau `s`.
    pub fn image<R: Ring>(&self, ring: &R, s: &Tableau) -> Result<ModuleVector<R::Elem>> {
        let ty = self.shift.beta().to_composition();
        let mut out = SparseVector::new();
        for term in &self.coefficients.terms {
            let v = theta_image(ring, s, &term.tableau, &ty)?;
            out.add_scaled(ring, &ring.from_int(&term.value), &v);
        }
        Ok(out)
    }

    /// The map over ℤ, `S^α → M^β`.
    pub fn integral(&self) -> Result<HomMatrix<Integers>> {
        self.to_tabloids(&Integers)
    }

    fn to_tabloids<R: Ring>(&self, ring: &R) -> Result<HomMatrix<R>> {
        let beta = self.shift.beta().to_composition();
        let module = TabloidModule::new(&beta)?;
        let images = self
            .source
            .tableaux()
            .par_iter()
            .map(|s| module.coordinates(&self.image(ring, s)?))
            .collect::<Result<Vec<_>>>()?;
        HomMatrix::from_images(
            ModuleDescriptor::Specht {
                shape: self.shift.alpha().clone(),
            },
            ModuleDescriptor::Tabloids { shape: beta },
            ring.clone(),
            module.dim(),
            images,
        )
    }

    /// Checks the hypotheses for reduction mod `p`: `p` odd and `p | h_a`.
    pub fn check_prime(&self, field: &PrimeField) -> Result<()> {
        field.require_odd()?;
        let h = self.shift.h_a();
        if h % field.modulus() as i64 != 0 {
            return Err(Error::ResidueCondition(format!(
                "p = {} does not divide h_a = {h} (α_a - a ≢ β_b - b mod p)",
                field.modulus()
            )));
        }
        Ok(())
    }

    /// The map mod `p`, `S^α → M^β`.
    pub fn reduce(&self, field: &PrimeField) -> Result<HomMatrix<PrimeField>> {
        self.check_prime(field)?;
        self.to_tabloids(field)
    }

    /// The map mod `p` as `S^α → S^β` on standard bases.
    pub fn specht_matrix(&self, field: &PrimeField) -> Result<HomMatrix<PrimeField>> {
        self.check_prime(field)?;
        let target = SpechtBasis::new(self.shift.beta())?;
        let images = self
            .source
            .tableaux()
            .par_iter()
            .map(|s| {
                let coords = target.expand(field, &self.image(field, s)?)?;
                Ok(SparseVector::from_terms(
                    field,
                    coords.into_iter().enumerate(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        HomMatrix::from_images(
            ModuleDescriptor::Specht {
                shape: self.shift.alpha().clone(),
            },
            ModuleDescriptor::Specht {
                shape: self.shift.beta().clone(),
            },
            *field,
            target.dim(),
            images,
        )
    }
}

/// The map `S^{λ_u} → S^{λ_v}` induced by a polynomial in `L_{n+1}` on the Specht series of
/// `S^λ ↓ Σ_n`, together with its comparison to the explicit map.
#[derive(Debug, Clone)]
pub struct JmMap {
    pub lambda: Partition,
    /// 1-based source layer (removable nodes counted from the top).
    pub source_layer: usize,
    /// 1-based target layer.
    pub target_layer: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub prime: u64,
    /// Integer residues `r_i` of the factors `L_{n+1} - r_i`.
    pub residues: Vec<i64>,
    pub matrix: HomMatrix<PrimeField>,
    /// `c` with JM map `= c ·` explicit map, when the pair is a one-box shift with `p | h_a`.
    pub scalar: Option<u64>,
}

fn apply_polynomial(
    v: &ModuleVector<BigInt>,
    residues: &[i64],
    n1: usize,
) -> Result<ModuleVector<BigInt>> {
    let z = Integers;
    let jm = TranspositionSum::jucys_murphy(n1);
    let mut v = v.clone();
    for &r in residues {
        let mut next = act_jm(&z, &v, &jm)?;
        next.add_scaled(&z, &BigInt::from(-r), &v);
        v = next;
    }
    Ok(v)
}

/// Multiplication by `∏_{i=v+1}^{u} (L_{n+1} - r_i)` from layer `u` to layer `v < u` of the
/// Specht series (1-based, top-down), reduced mod `p`.
///
/// Verifies that the polynomial maps `S_u` into `S_v` over ℤ and `S_{u-1}` into `S_{v-1}`
/// mod `p`, so that the induced map on the quotients is well defined.
pub fn carter_payne_jm(
    lambda: &Partition,
    source_layer: usize,
    target_layer: usize,
    field: &PrimeField,
) -> Result<JmMap> {
    field.require_odd()?;
    let series = SpechtSeries::new(lambda)?;
    let t = series.layers().len();
    if source_layer == 0 || target_layer == 0 || source_layer > t || target_layer > t {
        return Err(Error::InvalidArgument(format!(
            "layers must lie in 1..={t}"
        )));
    }
    if source_layer < target_layer {
        return Err(Error::InvalidArgument(format!(
            "the source layer must lie below the target layer (got {source_layer} -> {target_layer})"
        )));
    }
    let (u, v) = (source_layer - 1, target_layer - 1);
    let p = field.modulus();
    let (ru, rv) = (series.layers()[u].residue, series.layers()[v].residue);
    if reduce_residue(ru - rv, p) != 0 {
        return Err(Error::ResidueCondition(format!(
            "removed nodes have residues {ru} and {rv}, not congruent mod {p}"
        )));
    }
    let residues: Vec<i64> = series.layers()[v + 1..=u]
        .iter()
        .map(|l| l.residue)
        .collect();
    let basis = series.basis();
    let n1 = lambda.n();
    let z = Integers;
    let images: Vec<Vec<BigInt>> = (0..basis.dim())
        .into_par_iter()
        .filter(|&k| series.layer_of(k) <= u)
        .map(|k| {
            let w = apply_polynomial(&basis.vector(&z, k), &residues, n1)?;
            basis.expand(&z, &w)
        })
        .collect::<Result<_>>()?;
    let members: Vec<usize> = (0..basis.dim())
        .filter(|&k| series.layer_of(k) <= u)
        .collect();
    let reduce = |c: &[BigInt]| -> Vec<u64> { c.iter().map(|x| field.from_int(x)).collect() };

    for (&k, coords) in members.iter().zip(&images) {
        let layer = series.layer_of(k);
        if layer == u && !series.lies_in(&z, coords, v) {
            return Err(Error::CheckFailed(format!(
                "image of basis vector {} leaves layer {}",
                basis.tableau(k),
                target_layer
            )));
        }
        if layer < u {
            let modp = reduce(coords);
            let ok = if v == 0 {
                modp.iter().all(|x| *x == 0)
            } else {
                series.lies_in(field, &modp, v - 1)
            };
            if !ok {
                return Err(Error::CheckFailed(format!(
                    "image of {} is not in layer {} mod {p}",
                    basis.tableau(k),
                    target_layer - 1
                )));
            }
        }
    }

    let layer = &series.layers()[u];
    let alpha = layer.quotient.clone();
    let beta = series.layers()[v].quotient.clone();
    let target_dim = series.quotient_basis(v).dim();
    let mut rows = vec![SparseVector::new(); layer.members.len()];
    for (&k, coords) in members.iter().zip(&images) {
        if series.layer_of(k) != u {
            continue;
        }
        let pos = layer
            .members
            .iter()
            .position(|&m| m == k)
            .expect("member of the layer");
        let quotient = series.quotient_coordinates(field, &reduce(coords), v)?;
        rows[layer.quotient_index[pos]] =
            SparseVector::from_terms(field, quotient.into_iter().enumerate());
    }
    let matrix = HomMatrix::from_images(
        ModuleDescriptor::Specht {
            shape: alpha.clone(),
        },
        ModuleDescriptor::Specht {
            shape: beta.clone(),
        },
        *field,
        target_dim,
        rows,
    )?;
    if matrix.is_zero() {
        return Err(Error::CheckFailed(format!(
            "the induced map ({alpha}) -> ({beta}) vanishes mod {p}"
        )));
    }
    let scalar = if u == v {
        None
    } else {
        let shift = OneBoxShift::from_pair(&alpha, &beta)?;
        let explicit = CarterPayneMap::new(&shift)?.specht_matrix(field)?;
        Some(proportionality(field, &matrix, &explicit).ok_or_else(|| {
            Error::CheckFailed(format!(
                "JM map and explicit map ({alpha}) -> ({beta}) are not proportional mod {p}"
            ))
        })?)
    };
    Ok(JmMap {
        lambda: lambda.clone(),
        source_layer,
        target_layer,
        alpha,
        beta,
        prime: p,
        residues,
        matrix,
        scalar,
    })
}

/// The layers of `λ`'s Specht series whose removed nodes give `alpha` and `beta`.
pub fn jm_layers(alpha: &Partition, beta: &Partition) -> Result<(Partition, usize, usize)> {
    let shift = OneBoxShift::from_pair(alpha, beta)?;
    let mut parts = alpha.parts().to_vec();
    if shift.b() > parts.len() {
        parts.push(0);
    }
    parts[shift.b() - 1] += 1;
    let lambda = Partition::new(parts)?;
    let series_nodes = lambda.removable_nodes();
    let source = series_nodes
        .iter()
        .position(|x| x.row == shift.b())
        .expect("row b ends in a removable node")
        + 1;
    let target = series_nodes
        .iter()
        .position(|x| x.row == shift.a())
        .expect("row a ends in a removable node")
        + 1;
    Ok((lambda, source, target))
}

/// `c` with `a = c · b`, if `b ≠ 0` and such a scalar exists.
pub fn proportionality<F: Field>(field: &F, a: &HomMatrix<F>, b: &HomMatrix<F>) -> Option<F::Elem> {
    if a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim() {
        return None;
    }
    let (i, j) = (0..b.codomain_dim())
        .flat_map(|i| (0..b.domain_dim()).map(move |j| (i, j)))
        .find(|&(i, j)| !field.is_zero(&b.entries.get(i, j)))?;
    let c = field.mul(&a.entries.get(i, j), &field.inv(&b.entries.get(i, j))?);
    let scaled: Vec<_> = b
        .entries
        .rows()
        .iter()
        .map(|r| r.scale(field, &c))
        .collect();
    (scaled.as_slice() == a.entries.rows()).then_some(c)
}

/// The composite of JM maps along consecutive same-residue layers from `from` down to `to`.
pub fn compose_cp_chain(
    lambda: &Partition,
    from: usize,
    to: usize,
    field: &PrimeField,
) -> Result<HomMatrix<PrimeField>> {
    let series = SpechtSeries::new(lambda)?;
    let t = series.layers().len();
    if from == 0 || to == 0 || from > t || to > t || from < to {
        return Err(Error::InvalidArgument(format!("need 1 ≤ to ≤ from ≤ {t}")));
    }
    let p = field.modulus();
    let residue = |l: usize| reduce_residue(series.layers()[l - 1].residue, p);
    if residue(from) != residue(to) {
        return Err(Error::ResidueCondition(format!(
            "layers {from} and {to} have different residues mod {p}"
        )));
    }
    let chain: Vec<usize> = (to..=from)
        .rev()
        .filter(|&l| residue(l) == residue(from))
        .collect();
    if chain.len() == 1 {
        return Ok(carter_payne_jm(lambda, from, from, field)?.matrix);
    }
    let mut acc: Option<HomMatrix<PrimeField>> = None;
    for w in chain.windows(2) {
        let step = carter_payne_jm(lambda, w[0], w[1], field)?.matrix;
        acc = Some(match acc {
            None => step,
            Some(prev) => prev.then(&step)?,
        });
    }
    Ok(acc.expect("chain has at least one step"))
}

/// `e_t θ̂` for the row-reading tableau `t`, with `t` and the vector.
pub fn row_reading_image(map: &CarterPayneMap) -> Result<(Tableau, ModuleVector<BigInt>)> {
    let t = Tableau::row_reading(map.shift().alpha());
    let v = map.image(&Integers, &t)?;
    Ok((t, v))
}

/// Whether every coefficient of `v` is divisible by `d`.
pub fn divisible_by(v: &ModuleVector<BigInt>, d: &BigInt) -> bool {
    if d.is_zero() {
        return v.is_empty();
    }
    v.iter().all(|(_, c)| (c % d).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht_modules::SpechtBasis;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn explicit_coefficients_for_43() {
        let shift = OneBoxShift::from_pair(&p("4,3"), &p("3,3,1")).unwrap();
        let c = CoefficientVector::explicit(&shift);
        let pairs: Vec<(String, String, i64)> = c
            .terms
            .iter()
            .map(|t| {
                (
                    t.set.to_string(),
                    t.tableau.to_string(),
                    i64::try_from(t.value.clone()).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            pairs,
            [
                ("{1}".to_string(), "1113/222".to_string(), -3),
                ("{1,2}".to_string(), "1112/223".to_string(), 1)
            ]
        );
    }

    #[test]
    fn residue_condition_is_enforced() {
        let shift = OneBoxShift::from_pair(&p("4,3"), &p("3,3,1")).unwrap();
        let map = CarterPayneMap::new(&shift).unwrap();
        assert!(matches!(
            map.reduce(&PrimeField::new(7).unwrap()),
            Err(Error::ResidueCondition(_))
        ));
        assert!(matches!(
            map.reduce(&PrimeField::new(2).unwrap()),
            Err(Error::CharacteristicTwo)
        ));
        assert!(map.reduce(&PrimeField::new(5).unwrap()).is_ok());
    }

    #[test]
    fn jm_layers_for_43() {
        let (lambda, u, v) = jm_layers(&p("4,3"), &p("3,3,1")).unwrap();
        assert_eq!(lambda, p("4,3,1"));
        assert_eq!((u, v), (3, 1));
    }

    #[test]
    fn jm_identity_on_a_layer() {
        let f = PrimeField::new(5).unwrap();
        let m = carter_payne_jm(&p("4,3,1"), 2, 2, &f).unwrap();
        assert!(m.residues.is_empty());
        let d = SpechtBasis::new(&p("4,2,1")).unwrap().dim();
        assert_eq!(
            m.matrix.entries,
            crate::exact_algebra::ExactMatrix::identity(f, d)
        );
    }

    #[test]
    fn jm_rejects_wrong_direction() {
        let f = PrimeField::new(5).unwrap();
        assert!(carter_payne_jm(&p("4,3,1"), 1, 3, &f).is_err());
        assert!(matches!(
            carter_payne_jm(&p("4,3,1"), 2, 1, &f),
            Err(Error::ResidueCondition(_))
        ));
    }

    #[test]
    fn jm_map_for_431_is_proportional() {
        let f = PrimeField::new(5).unwrap();
        let m = carter_payne_jm(&p("4,3,1"), 3, 1, &f).unwrap();
        assert_eq!(m.residues, [1, -2]);
        assert_eq!((m.alpha.clone(), m.beta.clone()), (p("4,3"), p("3,3,1")));
        assert_eq!(m.scalar, Some(1));
    }
}
