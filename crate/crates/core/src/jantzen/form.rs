use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_algebra::{
    integer_solvable, p_adic_valuation, smith_normal_form_with, Echelon, ExactMatrix, Integers,
    PrimeField, Ring, SparseVector,
};
use crate::specht_modules::{ModuleVector, SpechtBasis, TabloidModule};

/// `⟨u, v⟩` for the form making the tabloids an orthonormal basis.
pub fn bilinear_form(u: &ModuleVector<BigInt>, v: &ModuleVector<BigInt>) -> Result<BigInt> {
    let shapes = u
        .keys()
        .chain(v.keys())
        .map(|k| k.shape())
        .collect::<std::collections::BTreeSet<_>>();
    if shapes.len() > 1 {
        return Err(Error::ShapeMismatch(
            "vectors lie in different permutation modules".into(),
        ));
    }
    let (small, large) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    Ok(small
        .iter()
        .filter_map(|(k, x)| large.get(k).map(|y| x * y))
        .sum())
}

/// Gram matrix `⟨e_s, e_t⟩` of the standard basis of `S^β`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub shape: Partition,
    pub entries: ExactMatrix<Integers>,
}

impl GramMatrix {
    pub fn new(basis: &SpechtBasis) -> Result<Self> {
        let z = Integers;
        let vectors = basis.vectors(&z);
        let d = vectors.len();
        let mut rows = vec![SparseVector::new(); d];
        for i in 0..d {
            for j in 0..d {
                rows[i].add_term(&z, j, &bilinear_form(&vectors[i], &vectors[j])?);
            }
        }
        Ok(GramMatrix {
            shape: basis.shape().clone(),
            entries: ExactMatrix::from_rows(z, d, rows)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// `G x` for integer coordinates `x`.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.entries
            .rows()
            .iter()
            .map(|row| row.iter().map(|(&j, g)| g * &x[j]).sum())
            .collect()
    }

    /// Whether `x ∈ J^i`, i.e. `⟨x, S^β_ℤ⟩ ⊆ p^i ℤ`, read off as `G x ≡ 0 mod p^i`.
    pub fn in_jantzen_level(&self, x: &[BigInt], p: u64, level: u32) -> bool {
        let modulus = BigInt::from(p).pow(level);
        self.apply(x).iter().all(|y| y.is_multiple_of(&modulus))
    }
}

/// One step of the Jantzen filtration, reduced mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JantzenLevel {
    pub level: u32,
    pub dim: usize,
    /// Basis of the image of `J^i(S^β_ℤ)` in `S^β_F`, in standard coordinates mod `p`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<Vec<Vec<u64>>>,
}

/// The Jantzen filtration `S^β = J^0 ⊇ J^1 ⊇ …` of `S^β` mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JantzenFiltration {
    pub shape: Partition,
    pub prime: u64,
    /// Elementary divisors of the Gram matrix.
    #[serde(with = "crate::exact_algebra::decimal::vec")]
    pub elementary_divisors: Vec<BigInt>,
    /// Levels `0..=m+1` with `m` the largest `p`-valuation of an elementary divisor.
    pub levels: Vec<JantzenLevel>,
}

impl JantzenFiltration {
    /// Computed from the Smith form `U G V = D`: `x = V y` lies in `J^i` exactly when
    /// `p^{i - v_p(d_k)}` divides `y_k`, so `J^i` mod `p` is spanned by the columns `k` of `V`
    /// with `v_p(d_k) ≥ i`.
    pub fn new(gram: &GramMatrix, p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let snf = smith_normal_form_with(&gram.entries, false, true);
        let d = gram.dim();
        if snf.rank() != d {
            return Err(Error::CheckFailed(format!(
                "Gram matrix of S^({}) is singular",
                gram.shape
            )));
        }
        let valuations: Vec<u32> = snf
            .d
            .iter()
            .map(|x| p_adic_valuation(x, p).expect("nonzero divisor"))
            .collect();
        let top = valuations.iter().copied().max().unwrap_or(0);
        let v = snf.v.expect("tracked");
        let vt = v.transpose().reduce_mod(&field);
        let levels = (0..=top + 1)
            .map(|level| {
                let basis: Vec<Vec<u64>> = (0..d)
                    .filter(|&k| valuations[k] >= level)
                    .map(|k| (0..d).map(|j| vt.get(k, j)).collect())
                    .collect();
                JantzenLevel {
                    level,
                    dim: basis.len(),
                    basis: Some(basis),
                }
            })
            .collect();
        Ok(JantzenFiltration {
            shape: gram.shape.clone(),
            prime: p,
            elementary_divisors: snf.d,
            levels,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim).collect()
    }

    /// Whether the mod-`p` vector lies in the image of `J^level`.
    pub fn contains(&self, x: &[u64], level: u32) -> Result<bool> {
        let field = PrimeField::new(self.prime)?;
        let Some(l) = self.levels.iter().find(|l| l.level == level) else {
            return Ok(x.iter().all(|c| *c == 0));
        };
        let mut e = Echelon::new(field, x.len());
        for b in l
            .basis
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("filtration stored without bases".into()))?
        {
            e.insert(b);
        }
        Ok(e.contains(x))
    }

    /// Drops the stored bases (for compact output).
    pub fn without_bases(mut self) -> Self {
        for l in &mut self.levels {
            l.basis = None;
        }
        self
    }
}

/// `J^i` of `S^β` mod `p`.
pub fn jantzen_filtration(beta: &Partition, p: u64) -> Result<JantzenFiltration> {
    let basis = SpechtBasis::new(beta)?;
    JantzenFiltration::new(&GramMatrix::new(&basis)?, p)
}

/// Dimensions of `J^0, …, J^levels` mod `p` by successive refinement, without a Smith form.
///
/// Keeps a ℤ-basis `B` of `J^{i-1}`; then `G B = p^{i-1} C`, and `J^i = B · L` where
/// `L = {z : C z ≡ 0 mod p}`.
pub fn jantzen_dims_by_congruence(gram: &GramMatrix, p: u64, levels: u32) -> Result<Vec<usize>> {
    let field = PrimeField::new(p)?;
    let d = gram.dim();
    let pz = BigInt::from(p);
    let mut basis: Vec<Vec<BigInt>> = (0..d)
        .map(|k| (0..d).map(|j| BigInt::from((j == k) as u8)).collect())
        .collect();
    let mut dims = vec![d];
    for level in 1..=levels {
        let scale = pz.pow(level - 1);
        let columns: Vec<Vec<BigInt>> = basis
            .iter()
            .map(|b| {
                gram.apply(b)
                    .into_iter()
                    .map(|y| {
                        debug_assert!(y.is_multiple_of(&scale));
                        y / &scale
                    })
                    .collect()
            })
            .collect();
        let r = basis.len();
        // Rows of C mod p: C[j][m] = columns[m][j].
        let mut echelon = Echelon::new(field, r);
        for j in 0..d {
            let row: Vec<u64> = columns.iter().map(|c| field.from_int(&c[j])).collect();
            echelon.insert(&row);
        }
        let mut lattice: Vec<Vec<BigInt>> = echelon
            .null_space()
            .into_iter()
            .map(|z| z.into_iter().map(BigInt::from).collect())
            .collect();
        for &c in echelon.pivot_columns() {
            lattice.push(
                (0..r)
                    .map(|m| if m == c { pz.clone() } else { BigInt::zero() })
                    .collect(),
            );
        }
        basis = lattice
            .iter()
            .map(|z| {
                let mut x = vec![BigInt::zero(); d];
                for (m, zm) in z.iter().enumerate() {
                    if zm.is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        x[j] += zm * &basis[m][j];
                    }
                }
                x
            })
            .collect();
        let mut span = Echelon::new(field, d);
        for x in &basis {
            span.insert(&x.iter().map(|c| field.from_int(c)).collect::<Vec<_>>());
        }
        dims.push(span.rank());
    }
    Ok(dims)
}

/// Whether `x ∈ S^β_ℤ ∩ (p^i M^β_ℤ + S^{β⊥}_ℤ)`: solves `E^T m = G x / p^i` over ℤ, where the
/// columns of `E` are the standard polytabloids in tabloid coordinates.
pub fn in_jantzen_by_decomposition(
    basis: &SpechtBasis,
    gram: &GramMatrix,
    x: &[BigInt],
    p: u64,
    level: u32,
) -> Result<bool> {
    let z = Integers;
    let module: TabloidModule = basis.tabloid_module()?;
    let rows = basis
        .vectors(&z)
        .iter()
        .map(|v| module.coordinates(v))
        .collect::<Result<Vec<_>>>()?;
    let et = ExactMatrix::from_rows(z, module.dim(), rows)?;
    // X = Σ x_k e_k must equal p^i m + s' with s' ⊥ S; pairing with e_s gives E^T X = p^i E^T m.
    let mut big = SparseVector::new();
    for (k, c) in x.iter().enumerate() {
        big.add_scaled(&z, c, &module.coordinates(&basis.vector(&z, k))?);
    }
    let pairing: Vec<BigInt> =
        et.apply(&big)
            .iter()
            .fold(vec![BigInt::zero(); basis.dim()], |mut acc, (&i, c)| {
                acc[i] = c.clone();
                acc
            });
    debug_assert_eq!(pairing, gram.apply(x));
    let modulus = BigInt::from(p).pow(level);
    if pairing.iter().any(|c| !c.is_multiple_of(&modulus)) {
        return Ok(false);
    }
    let rhs: Vec<BigInt> = pairing.iter().map(|c| c / &modulus).collect();
    Ok(integer_solvable(&et, &rhs))
}

/// Largest `p`-valuation of an elementary divisor.
pub fn max_valuation(filtration: &JantzenFiltration) -> u32 {
    filtration
        .elementary_divisors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| p_adic_valuation(&d.abs(), filtration.prime).unwrap_or(0))
        .max()
        .unwrap_or(0)
}
