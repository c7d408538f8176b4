use crate::combinatorics::{Node, Partition, Tableau};
use crate::error::{Error, Result};
use crate::exact_algebra::Ring;

use super::basis::SpechtBasis;

/// One step `S_i / S_{i-1}` of the Specht series of a restriction.
#[derive(Debug, Clone)]
pub struct SeriesLayer {
    /// The removable node holding `n+1`.
    pub node: Node,
    /// `λ` with that node removed.
    pub quotient: Partition,
    /// Integer residue (content) of the node.
    pub residue: i64,
    /// Standard basis indices of `S^λ` with `n+1` at the node.
    pub members: Vec<usize>,
    /// For each member, the index of the tableau with `n+1` deleted in the quotient basis.
    pub quotient_index: Vec<usize>,
}

/// The filtration `0 ⊂ S_1 ⊂ … ⊂ S_t = S^λ` of `S^λ` restricted to `Σ_n`, where `λ ⊢ n+1`
/// has removable nodes `x_1, …, x_t` from top to bottom and `S_i` is spanned by the
/// standard polytabloids with `n+1` in one of `x_1, …, x_i`.
#[derive(Debug, Clone)]
pub struct SpechtSeries {
    basis: SpechtBasis,
    layers: Vec<SeriesLayer>,
    quotient_bases: Vec<SpechtBasis>,
    layer_of: Vec<usize>,
}

impl SpechtSeries {
    pub fn new(lambda: &Partition) -> Result<Self> {
        if lambda.n() == 0 {
            return Err(Error::InvalidPartition(
                "the empty partition has no removable node".into(),
            ));
        }
        let basis = SpechtBasis::new(lambda)?;
        let top = lambda.n();
        let mut layers = Vec::new();
        let mut quotient_bases = Vec::new();
        let mut layer_of = vec![usize::MAX; basis.dim()];
        for (i, node) in lambda.removable_nodes().into_iter().enumerate() {
            let quotient = lambda.remove_node(node)?;
            let qb = SpechtBasis::new(&quotient)?;
            let mut members = Vec::new();
            let mut quotient_index = Vec::new();
            for (k, t) in basis.tableaux().iter().enumerate() {
                if t.get(node) != top {
                    continue;
                }
                layer_of[k] = i;
                members.push(k);
                quotient_index.push(
                    qb.index_of(&delete_entry(t, node)?)
                        .expect("deleting the largest symbol keeps standardness"),
                );
            }
            layers.push(SeriesLayer {
                node,
                quotient,
                residue: node.content(),
                members,
                quotient_index,
            });
            quotient_bases.push(qb);
        }
        Ok(SpechtSeries {
            basis,
            layers,
            quotient_bases,
            layer_of,
        })
    }

    pub fn lambda(&self) -> &Partition {
        self.basis.shape()
    }

    pub fn basis(&self) -> &SpechtBasis {
        &self.basis
    }

    pub fn layers(&self) -> &[SeriesLayer] {
        &self.layers
    }

    pub fn quotient_basis(&self, layer: usize) -> &SpechtBasis {
        &self.quotient_bases[layer]
    }

    /// 0-based layer of the `k`-th standard basis vector.
    pub fn layer_of(&self, k: usize) -> usize {
        self.layer_of[k]
    }

    /// Index of the layer whose removed node is `node`.
    pub fn layer_with_node(&self, node: Node) -> Option<usize> {
        self.layers.iter().position(|l| l.node == node)
    }

    /// Index of the layer with the given quotient shape.
    pub fn layer_with_quotient(&self, quotient: &Partition) -> Option<usize> {
        self.layers.iter().position(|l| &l.quotient == quotient)
    }

    /// Whether the coordinates lie in `S_{layer}` (0-based, so `S_{layer+1}` in 1-based terms).
    pub fn lies_in<R: Ring>(&self, ring: &R, coords: &[R::Elem], layer: usize) -> bool {
        coords
            .iter()
            .enumerate()
            .all(|(k, c)| self.layer_of[k] <= layer || ring.is_zero(c))
    }

    /// The image in `S_{layer} / S_{layer-1} ≅ S^{λ_layer}`, in the quotient's standard basis.
    ///
    /// Errors if the vector does not lie in `S_{layer}`.
    pub fn quotient_coordinates<R: Ring>(
        &self,
        ring: &R,
        coords: &[R::Elem],
        layer: usize,
    ) -> Result<Vec<R::Elem>> {
        if !self.lies_in(ring, coords, layer) {
            return Err(Error::NotInSpecht(format!(
                "vector is not in layer {} of the series",
                layer + 1
            )));
        }
        let l = &self.layers[layer];
        let mut out = vec![ring.zero(); self.quotient_bases[layer].dim()];
        for (&k, &q) in l.members.iter().zip(&l.quotient_index) {
            out[q] = coords[k].clone();
        }
        Ok(out)
    }

    /// The standard tableau of `λ` obtained by adding `n+1` at the layer's node.
    pub fn lift(&self, layer: usize, t: &Tableau) -> Result<Tableau> {
        let node = self.layers[layer].node;
        if t.shape() != self.layers[layer].quotient {
            return Err(Error::ShapeMismatch(format!(
                "{t} is not a {}-tableau",
                self.layers[layer].quotient
            )));
        }
        let mut rows = t.rows().to_vec();
        if node.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[node.row - 1].push(self.lambda().n());
        Tableau::new(rows)
    }
}

fn delete_entry(t: &Tableau, node: Node) -> Result<Tableau> {
    let mut rows = t.rows().to_vec();
    rows[node.row - 1].remove(node.col - 1);
    if rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    #[test]
    fn layers_of_431() {
        let s = SpechtSeries::new(&"4,3,1".parse().unwrap()).unwrap();
        let shapes: Vec<String> = s.layers().iter().map(|l| l.quotient.to_string()).collect();
        assert_eq!(shapes, ["3,3,1", "4,2,1", "4,3"]);
        let residues: Vec<i64> = s.layers().iter().map(|l| l.residue).collect();
        assert_eq!(residues, [3, 1, -2]);
    }

    #[test]
    fn single_row() {
        let s = SpechtSeries::new(&"5".parse().unwrap()).unwrap();
        assert_eq!(s.layers().len(), 1);
        assert_eq!(s.layers()[0].quotient.to_string(), "4");
    }

    #[test]
    fn layer_dimensions_add_up() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let s = SpechtSeries::new(&lambda).unwrap();
                let total: usize = s.layers().iter().map(|l| l.members.len()).sum();
                assert_eq!(total, s.basis().dim());
                for (i, l) in s.layers().iter().enumerate() {
                    assert_eq!(l.members.len(), s.quotient_basis(i).dim());
                    let mut q = l.quotient_index.clone();
                    q.sort_unstable();
                    assert_eq!(q, (0..l.members.len()).collect::<Vec<_>>());
                }
            }
        }
    }
}
