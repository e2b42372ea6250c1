//! The 23-dimensional algebra `A + kv`, where `A` is the multilinear
//! quotient of the free anticommutative algebra on four generators with
//! all words of degree four killed.

use crate::algebra::{Algebra, BilinearForm};
use crate::error::Result;

use super::extension::{central_extension, parse_psi};
use super::free::{free_anticommutative, multilinear_quotient, WordAlgebra};

/// The eight entries as commonly tabulated. With these alone the
/// extension is not Malcev; see [`PSI_TABLE`].
pub const UNPATCHED_PSI_TABLE: &str = "\
psi [x1,x2] [x3,x4] 2
psi [x1,x3] [x2,x4] -2
psi [x1,x4] [x2,x3] 2
psi [x2,x3,x1] x4 -3
psi [x2,x4,x1] x3 3
psi [x2,x4,x3] x1 -1
psi [x3,x4,x1] x2 -3
psi [x3,x4,x2] x1 1
";

/// The eight tabulated entries plus `psi([x2,x3,x4], x1) = 1`, the
/// smallest completion for which the extension is a Malcev algebra.
pub const PSI_TABLE: &str = "\
psi [x1,x2] [x3,x4] 2
psi [x1,x3] [x2,x4] -2
psi [x1,x4] [x2,x3] 2
psi [x2,x3,x1] x4 -3
psi [x2,x3,x4] x1 1
psi [x2,x4,x1] x3 3
psi [x2,x4,x3] x1 -1
psi [x3,x4,x1] x2 -3
psi [x3,x4,x2] x1 1
";

/// [`PSI_TABLE`] with `psi([x1,x2],[x3,x4])` changed from 2 to 3.
pub const CORRUPTED_PSI_TABLE: &str = "\
psi [x1,x2] [x3,x4] 3
psi [x1,x3] [x2,x4] -2
psi [x1,x4] [x2,x3] 2
psi [x2,x3,x1] x4 -3
psi [x2,x3,x4] x1 1
psi [x2,x4,x1] x3 3
psi [x2,x4,x3] x1 -1
psi [x3,x4,x1] x2 -3
psi [x3,x4,x2] x1 1
";

#[derive(Clone, Debug)]
pub struct Atilde {
    /// The 22-dimensional quotient with basis words of degrees 1 to 3.
    pub base: WordAlgebra,
    pub psi: BilinearForm,
    /// The extension; `v` is the last basis vector.
    pub algebra: Algebra,
}

impl Atilde {
    pub fn v(&self) -> usize {
        self.algebra.dim() - 1
    }
}

pub fn atilde_from_table(table: &str) -> Result<Atilde> {
    let base = multilinear_quotient(&free_anticommutative(4, 4)?);
    let psi = parse_psi(&base, table)?;
    let algebra = central_extension(&base.algebra, &psi)?;
    Ok(Atilde { base, psi, algebra })
}

pub fn atilde() -> Atilde {
    atilde_from_table(PSI_TABLE).expect("built-in table")
}

pub fn atilde_unpatched() -> Atilde {
    atilde_from_table(UNPATCHED_PSI_TABLE).expect("built-in table")
}

pub fn atilde_corrupted() -> Atilde {
    atilde_from_table(CORRUPTED_PSI_TABLE).expect("built-in table")
}
