//! Split crystallographic groups `Γ = Z^n ⋊ G`.
//!
//! Group elements are pairs (lattice vector, point-group matrix) but nothing
//! here stores them: every question answered by this crate factors through
//! the action of `G` on the lattice. For a matrix group the action is
//! faithful, so `C_Γ(A) = A` and `Γ/C_Γ(A)` is `G` itself.

use thiserror::Error;

use crate::fingroup::{closure, GroupError, PointGroup};
use crate::intmat::{det_one_minus, fixed_lattice, IntMatrix, Lattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystError {
    #[error("lattice rank must be at least 1")]
    ZeroRank,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0} is not in the point group")]
    NotInPointGroup(IntMatrix),
}

#[derive(Clone, Debug)]
pub struct CrystGroup {
    rank: usize,
    point_group: PointGroup,
    action_kernel: PointGroup,
}

pub fn make_cryst(rank: usize, generators: &[IntMatrix], cap: usize) -> Result<CrystGroup, CrystError> {
    if rank == 0 {
        return Err(CrystError::ZeroRank);
    }
    let point_group = closure(rank, generators, cap)?;
    Ok(CrystGroup::from_point_group(point_group))
}

impl CrystGroup {
    pub fn from_point_group(point_group: PointGroup) -> Self {
        let rank = point_group.dim();
        // Only the identity matrix acts trivially.
        let action_kernel = PointGroup::trivial(rank);
        CrystGroup { rank, point_group, action_kernel }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn point_group(&self) -> &PointGroup {
        &self.point_group
    }

    pub fn action_kernel(&self) -> &PointGroup {
        &self.action_kernel
    }

    /// `A^Γ`, the translations fixed by every point-group element.
    pub fn fixed_sublattice(&self) -> Lattice {
        fixed_lattice(self.rank, self.point_group.elements()).expect("elements share the rank")
    }

    /// Whether `Γ` surjects onto `Z`, i.e. `A^Γ ≠ 0`.
    pub fn maps_onto_z(&self) -> bool {
        !self.fixed_sublattice().is_zero()
    }

    /// Whether a finite-order element of `Γ` with point-group image `g` has an
    /// infinite centralizer. Elements of infinite order always do.
    pub fn centralizer_is_infinite(&self, g: &IntMatrix) -> Result<bool, CrystError> {
        if !self.point_group.contains(g) {
            return Err(CrystError::NotInPointGroup(g.clone()));
        }
        Ok(det_one_minus(g) == 0.into())
    }
}
