use num_traits::ToPrimitive;

use super::{Branch, DiscriminantError};
use crate::graph::{pair, Cycle};
use crate::Rational;

/// Numerical invariants of the discriminant and of the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    /// multiplicity of the discriminant, `Z.Z_K - Z^2`
    pub e_delta: i64,
    pub n_b: i64,
    /// number of singular (cusp) branches
    pub n_bs: i64,
    /// multiplicity of the surface, `-Z^2`
    pub e_surface: i64,
    /// Milnor number of a generic hyperplane section, `1 + Z.Z_K`
    pub mu_section: i64,
    pub delta: i64,
    pub milnor: i64,
}

fn integer(q: &Rational, what: &'static str) -> Result<i64, DiscriminantError> {
    q.is_integer()
        .then(|| q.to_integer().to_i64())
        .flatten()
        .ok_or_else(|| DiscriminantError::IdentityViolation {
            identity: what,
            lhs: q.to_string(),
            rhs: "an integer".into(),
        })
}

fn check(identity: &'static str, lhs: i64, rhs: i64) -> Result<(), DiscriminantError> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(DiscriminantError::IdentityViolation {
            identity,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

/// Compute the invariants and check the four identities linking the branch
/// data to the cycles `Z`, `Z_K`, `Z_Ω`.
pub fn invariants(
    z: &Cycle,
    canonical: &Cycle,
    omega: &Cycle,
    branches: &[Branch],
    intersections: &[Vec<u64>],
) -> Result<Invariants, DiscriminantError> {
    let z_zk = integer(&pair(z, canonical)?, "Z.Z_K")?;
    let z_z = integer(&pair(z, z)?, "Z^2")?;
    let z_omega = integer(&pair(z, omega)?, "Z.Z_Ω")?;

    let e_delta = z_zk - z_z;
    let e_surface = -z_z;
    let mu_section = 1 + z_zk;
    let n_b = branches.len() as i64;
    let n_bs = branches.iter().filter(|b| b.multiplicity() == 2).count() as i64;
    let multiplicity_sum: i64 = branches.iter().map(|b| b.multiplicity() as i64).sum();

    check("E1: e_delta = sum of branch multiplicities", e_delta, multiplicity_sum)?;
    check("E2: n_b = e_delta - n_bs", n_b, e_delta - n_bs)?;
    check("E3: n_b = -Z.Z_Ω - n_bs", n_b, -z_omega - n_bs)?;
    check(
        "E4: e_delta = mu_section - 1 + e_surface",
        e_delta,
        mu_section - 1 + e_surface,
    )?;

    let mut delta: i64 = branches.iter().map(|b| b.kind.delta() as i64).sum();
    for (i, row) in intersections.iter().enumerate() {
        delta += row[i + 1..].iter().map(|&im| im as i64).sum::<i64>();
    }
    Ok(Invariants {
        e_delta,
        n_b,
        n_bs,
        e_surface,
        mu_section,
        delta,
        milnor: 2 * delta - n_b + 1,
    })
}
