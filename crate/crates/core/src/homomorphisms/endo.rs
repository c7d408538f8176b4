use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{p_core, Node, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exact_algebra::{rank, Echelon, ExactMatrix, Field, PrimeField, Ring};
use crate::specht_modules::{
    act_jm, InducedModule, MatrixRepresentation, SpechtBasis, TranspositionSum,
};

use super::hom_matrix::ModuleDescriptor;
use super::hom_space::intertwiners;

/// One residue class of nodes and the matching generalized eigenspace of the generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoBlock {
    /// `p`-residue in `0..p`.
    pub residue: u64,
    /// The removable (or addable) nodes of this residue.
    pub nodes: Vec<Node>,
    /// `p`-cores of the partitions obtained by removing (or adding) each node.
    pub cores: Vec<Partition>,
    /// Dimension of the generalized eigenspace for `residue`.
    pub eigenspace_dim: usize,
    /// Least `k` with `(ε - r)^k = 0` on the generalized eigenspace.
    pub nilpotency: usize,
}

impl EndoBlock {
    pub fn multiplicity(&self) -> usize {
        self.nodes.len()
    }
}

/// Observed structure of `End(S^λ↓)` or `End(S^λ↑)` over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoAnalysis {
    pub module: ModuleDescriptor,
    pub prime: u64,
    pub module_dim: usize,
    pub blocks: Vec<EndoBlock>,
    /// Brute-force dimension of the endomorphism ring.
    pub end_dim: usize,
    /// Dimension of the span of `1, ε, …, ε^{t-1}`, `t` the number of nodes.
    pub generated_dim: usize,
    /// Whether `ε` commutes with every generator of the group.
    pub generator_commutes: bool,
}

impl EndoAnalysis {
    pub fn node_count(&self) -> usize {
        self.blocks.iter().map(EndoBlock::multiplicity).sum()
    }

    /// Checks the truncated-polynomial-ring description: one block per residue class with
    /// nilpotency equal to its node count, `dim End` equal to the number of nodes, the
    /// generator spanning `End`, and `p`-cores separating the classes.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::CheckFailed(format!("{}: {msg}", self.module)));
        if !self.generator_commutes {
            return fail("the generator does not commute with the group action".into());
        }
        let total: usize = self.blocks.iter().map(|b| b.eigenspace_dim).sum();
        if total != self.module_dim {
            return fail(format!(
                "generalized eigenspaces cover {total} of {} dimensions",
                self.module_dim
            ));
        }
        for b in &self.blocks {
            if b.nilpotency != b.multiplicity() {
                return fail(format!(
                    "residue {} has nilpotency {} but {} nodes",
                    b.residue,
                    b.nilpotency,
                    b.multiplicity()
                ));
            }
            if b.cores.windows(2).any(|w| w[0] != w[1]) {
                return fail(format!(
                    "nodes of residue {} give different p-cores",
                    b.residue
                ));
            }
        }
        for (i, x) in self.blocks.iter().enumerate() {
            for y in &self.blocks[i + 1..] {
                if x.cores[0] == y.cores[0] {
                    return fail(format!(
                        "residues {} and {} share the p-core {}",
                        x.residue, y.residue, x.cores[0]
                    ));
                }
            }
        }
        let t = self.node_count();
        if self.end_dim != t {
            return fail(format!(
                "dim End = {} but there are {t} nodes",
                self.end_dim
            ));
        }
        if self.generated_dim != t {
            return fail(format!(
                "powers of the generator span {} dimensions, expected {t}",
                self.generated_dim
            ));
        }
        Ok(())
    }
}

fn scalar_shift<F: Field>(field: &F, m: &ExactMatrix<F>, r: &F::Elem) -> Result<ExactMatrix<F>> {
    let mut shift = ExactMatrix::identity(field.clone(), m.nrows());
    for i in 0..m.nrows() {
        shift.set(i, i, field.neg(r));
    }
    m.add(&shift)
}

fn flatten<F: Field>(m: &ExactMatrix<F>) -> Vec<F::Elem> {
    m.to_dense().concat()
}

fn analyse(
    module: ModuleDescriptor,
    field: &PrimeField,
    rep: &MatrixRepresentation<PrimeField>,
    generator: &ExactMatrix<PrimeField>,
    classes: BTreeMap<u64, (Vec<Node>, Vec<Partition>)>,
) -> Result<EndoAnalysis> {
    let d = rep.dim();
    let mut blocks = Vec::new();
    for (residue, (nodes, cores)) in classes {
        let shifted = scalar_shift(field, generator, &field.from_i64(residue as i64))?;
        let mut power = ExactMatrix::identity(*field, d);
        let mut kernel_dims = vec![0usize];
        loop {
            power = power.mul(&shifted)?;
            let k = d - rank(&power);
            if k == *kernel_dims.last().expect("nonempty") {
                break;
            }
            kernel_dims.push(k);
        }
        blocks.push(EndoBlock {
            residue,
            nodes,
            cores,
            eigenspace_dim: *kernel_dims.last().expect("nonempty"),
            nilpotency: kernel_dims.len() - 1,
        });
    }
    let mut generator_commutes = true;
    for g in rep.matrices() {
        if g.mul(generator)? != generator.mul(g)? {
            generator_commutes = false;
        }
    }
    let t: usize = blocks.iter().map(EndoBlock::multiplicity).sum();
    let mut powers = Echelon::new(*field, d * d);
    let mut power = ExactMatrix::identity(*field, d);
    for _ in 0..t {
        powers.insert(&flatten(&power));
        power = power.mul(generator)?;
    }
    let end_dim = intertwiners(rep, rep)?.len();
    Ok(EndoAnalysis {
        module,
        prime: field.modulus(),
        module_dim: d,
        blocks,
        end_dim,
        generated_dim: powers.rank(),
        generator_commutes,
    })
}

/// `End(S^λ↓_{Σ_n})` for `λ ⊢ n+1`, generated by the action of `L_{n+1}`.
pub fn endo_ring_restriction(lambda: &Partition, field: &PrimeField) -> Result<EndoAnalysis> {
    field.require_odd()?;
    let basis = SpechtBasis::new(lambda)?;
    let jm = TranspositionSum::jucys_murphy(lambda.n());
    let generator = basis.operator_matrix(field, |v| act_jm(field, v, &jm))?;
    let rep = MatrixRepresentation::restricted(*field, &basis)?;
    let p = field.modulus();
    let mut classes: BTreeMap<u64, (Vec<Node>, Vec<Partition>)> = BTreeMap::new();
    for node in lambda.removable_nodes() {
        let entry = classes.entry(node.residue(p) as u64).or_default();
        entry.0.push(node);
        entry.1.push(p_core(&lambda.remove_node(node)?, p as usize));
    }
    analyse(
        ModuleDescriptor::Restriction {
            lambda: lambda.clone(),
        },
        field,
        &rep,
        &generator,
        classes,
    )
}

/// `End(S^λ↑^{Σ_n})` for `λ ⊢ n-1`, generated by `E_n - c(λ)`, where `E_n` is the sum of all
/// transpositions and `c(λ)` the content sum of `λ`.
pub fn endo_ring_induced(lambda: &Partition, field: &PrimeField) -> Result<EndoAnalysis> {
    field.require_odd()?;
    let mut module = InducedModule::new(*field, lambda)?;
    let n = module.degree();
    let d = module.dim();
    let mut generator = ExactMatrix::zeros(*field, d, d);
    for (i, j) in TranspositionSum::all_transpositions(n).transpositions() {
        generator = generator.add(&module.action_matrix(&Permutation::transposition(n, i, j))?)?;
    }
    let content: i64 = lambda.nodes().map(|x| x.content()).sum();
    let generator = scalar_shift(field, &generator, &field.from_i64(content))?;
    let rep = module.representation()?;
    let p = field.modulus();
    let mut classes: BTreeMap<u64, (Vec<Node>, Vec<Partition>)> = BTreeMap::new();
    for node in lambda.addable_nodes() {
        let entry = classes.entry(node.residue(p) as u64).or_default();
        entry.0.push(node);
        entry.1.push(p_core(&lambda.add_node(node)?, p as usize));
    }
    analyse(
        ModuleDescriptor::Induced {
            lambda: lambda.clone(),
        },
        field,
        &rep,
        &generator,
        classes,
    )
}
