use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_algebra::{Echelon, ExactMatrix, Field, Insertion, SparseVector};
use crate::specht_modules::{MatrixRepresentation, SpechtBasis};

use super::hom_matrix::{HomMatrix, ModuleDescriptor};

/// A basis of `Hom(V, W)` for two matrix representations.
#[derive(Debug, Clone)]
pub struct HomSpace<F: Field> {
    pub domain: ModuleDescriptor,
    pub codomain: ModuleDescriptor,
    pub basis: Vec<HomMatrix<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `v · M` for a sparse row vector.
pub(crate) fn row_times<F: Field>(
    field: &F,
    v: &SparseVector<usize, F::Elem>,
    m: &ExactMatrix<F>,
) -> SparseVector<usize, F::Elem> {
    let mut out = SparseVector::new();
    for (&k, c) in v.iter() {
        out.add_scaled(field, c, m.row(k));
    }
    out
}

fn dense<F: Field>(field: &F, v: &SparseVector<usize, F::Elem>, len: usize) -> Vec<F::Elem> {
    let mut d = vec![field.zero(); len];
    for (&k, c) in v.iter() {
        d[k] = c.clone();
    }
    d
}

fn check_pair<F: Field>(
    domain: &MatrixRepresentation<F>,
    codomain: &MatrixRepresentation<F>,
) -> Result<()> {
    if domain.degree() != codomain.degree() {
        return Err(Error::DegreeMismatch {
            expected: domain.degree(),
            found: codomain.degree(),
        });
    }
    if domain.generators() != codomain.generators() {
        return Err(Error::InvalidArgument(
            "representations use different generators".into(),
        ));
    }
    if domain.field() != codomain.field() {
        return Err(Error::DomainMismatch(
            domain.field().name(),
            codomain.field().name(),
        ));
    }
    Ok(())
}

struct SpunNode<F: Field> {
    vector: SparseVector<usize, F::Elem>,
    root: usize,
    /// Product of codomain generator matrices along the word reaching this node.
    word: ExactMatrix<F>,
}

/// All `X` (acting on row vectors) with `ρ(g) X = X σ(g)` for the generators `g`.
///
/// The domain is spun from unit vectors: every basis vector of the spun basis is `r · w` for a
/// root `r` and a word `w` in the generators, so `X` is determined by the images of the roots.
/// Each linear dependency met while spinning imposes one vector equation on those images.
pub fn intertwiners<F: Field>(
    domain: &MatrixRepresentation<F>,
    codomain: &MatrixRepresentation<F>,
) -> Result<Vec<ExactMatrix<F>>> {
    check_pair(domain, codomain)?;
    let f = domain.field().clone();
    let (d, e) = (domain.dim(), codomain.dim());
    let ngens = domain.matrices().len();
    let mut echelon = Echelon::with_tracking(f.clone(), d);
    let mut nodes: Vec<SpunNode<F>> = Vec::new();
    let mut relations: Vec<(usize, usize, SparseVector<usize, F::Elem>)> = Vec::new();
    let mut roots = 0;
    for i in 0..d {
        if echelon.rank() == d {
            break;
        }
        let unit = SparseVector::unit(&f, i);
        let Insertion::Independent(_) = echelon.insert(&dense(&f, &unit, d)) else {
            continue;
        };
        nodes.push(SpunNode {
            vector: unit,
            root: roots,
            word: ExactMatrix::identity(f.clone(), e),
        });
        roots += 1;
        let mut next = nodes.len() - 1;
        while next < nodes.len() {
            for g in 0..ngens {
                let w = row_times(&f, &nodes[next].vector, &domain.matrices()[g]);
                match echelon.insert(&dense(&f, &w, d)) {
                    Insertion::Independent(_) => {
                        let word = nodes[next].word.mul(&codomain.matrices()[g])?;
                        let root = nodes[next].root;
                        nodes.push(SpunNode {
                            vector: w,
                            root,
                            word,
                        });
                    }
                    Insertion::Dependent(combo) => {
                        relations.push((next, g, combo.expect("tracking is enabled")))
                    }
                }
            }
            next += 1;
        }
    }

    // Unknowns: the images y_ρ of the roots, stacked as ρ·e + c.
    let unknowns = roots * e;
    let mut constraints = Echelon::new(f.clone(), unknowns);
    for (k, g, combo) in &relations {
        if constraints.rank() == unknowns {
            break;
        }
        // y_{ρ(k)} P_k B_g - Σ_j c_j y_{ρ(j)} P_j = 0, one equation per codomain coordinate.
        let lhs = nodes[*k].word.mul(&codomain.matrices()[*g])?;
        let mut block_rows = vec![SparseVector::new(); unknowns];
        for c in 0..e {
            block_rows[nodes[*k].root * e + c] = lhs.row(c).clone();
        }
        for (&j, coeff) in combo.iter() {
            let minus = f.neg(coeff);
            for c in 0..e {
                block_rows[nodes[j].root * e + c].add_scaled(&f, &minus, nodes[j].word.row(c));
            }
        }
        let stacked = ExactMatrix::from_rows(f.clone(), e, block_rows)?.transpose();
        for row in stacked.rows() {
            if !row.is_empty() {
                constraints.insert(&dense(&f, row, unknowns));
            }
        }
    }

    let expressions: Vec<SparseVector<usize, F::Elem>> = (0..d)
        .map(|i| {
            echelon
                .express(&dense(&f, &SparseVector::unit(&f, i), d))
                .expect("spun basis spans the domain")
        })
        .collect();
    let mut out = Vec::new();
    for y in constraints.null_space() {
        let images: Vec<SparseVector<usize, F::Elem>> = nodes
            .iter()
            .map(|node| {
                let root_image =
                    SparseVector::from_terms(&f, (0..e).map(|c| (c, y[node.root * e + c].clone())));
                row_times(&f, &root_image, &node.word)
            })
            .collect();
        let rows = expressions
            .iter()
            .map(|expr| {
                let mut row = SparseVector::new();
                for (&k, c) in expr.iter() {
                    row.add_scaled(&f, c, &images[k]);
                }
                row
            })
            .collect();
        out.push(ExactMatrix::from_rows(f.clone(), e, rows)?);
    }
    Ok(out)
}

/// The same space from the full system `ρ(g) X - X σ(g) = 0` in the `dim V · dim W` entries of `X`.
pub fn intertwiners_direct<F: Field>(
    domain: &MatrixRepresentation<F>,
    codomain: &MatrixRepresentation<F>,
) -> Result<Vec<ExactMatrix<F>>> {
    check_pair(domain, codomain)?;
    let f = domain.field().clone();
    let (d, e) = (domain.dim(), codomain.dim());
    let unknowns = d * e;
    let mut system = Echelon::new(f.clone(), unknowns);
    for (a, b) in domain.matrices().iter().zip(codomain.matrices()) {
        let bt = b.transpose();
        for i in 0..d {
            for c in 0..e {
                let mut row = SparseVector::new();
                for (&k, x) in a.row(i).iter() {
                    row.add_term(&f, k * e + c, x);
                }
                for (&m, x) in bt.row(c).iter() {
                    row.add_term(&f, i * e + m, &f.neg(x));
                }
                if !row.is_empty() {
                    system.insert(&dense(&f, &row, unknowns));
                }
            }
        }
    }
    system
        .null_space()
        .into_iter()
        .map(|x| {
            let rows = (0..d)
                .map(|i| SparseVector::from_terms(&f, (0..e).map(|c| (c, x[i * e + c].clone()))))
                .collect();
            ExactMatrix::from_rows(f.clone(), e, rows)
        })
        .collect()
}

/// `Hom(S^α, S^β)` over `field`, by brute force on the generators `(1 2)` and `(1 2 … n)`.
pub fn hom_space<F: Field>(field: &F, alpha: &Partition, beta: &Partition) -> Result<HomSpace<F>> {
    if alpha.n() != beta.n() {
        return Err(Error::SizeMismatch(alpha.n(), beta.n()));
    }
    let domain = MatrixRepresentation::specht(field.clone(), &SpechtBasis::new(alpha)?)?;
    let codomain = MatrixRepresentation::specht(field.clone(), &SpechtBasis::new(beta)?)?;
    let (dd, cd) = (
        ModuleDescriptor::Specht {
            shape: alpha.clone(),
        },
        ModuleDescriptor::Specht {
            shape: beta.clone(),
        },
    );
    let basis = intertwiners(&domain, &codomain)?
        .iter()
        .map(|x| HomMatrix::from_row_form(dd.clone(), cd.clone(), x))
        .collect();
    Ok(HomSpace {
        domain: dd,
        codomain: cd,
        basis,
    })
}
