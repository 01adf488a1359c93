//! Existence criteria for even hyperbolic p-elementary lattices and the
//! enumeration of invariant lattices of non-symplectic actions of prime order
//! on `H^2` of an abelian surface.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{delta_invariant, is_p_elementary, LatticeError, NamedLattice};

/// Primes that can occur as the order of the action on `H^2`.
pub const SUPPORTED_PRIMES: [u32; 3] = [2, 3, 5];

/// Rank of `H^2` of a 2-torus.
const H2_RANK: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassificationError {
    #[error("unsupported prime {0} (expected 2, 3 or 5)")]
    UnsupportedPrime(u32),
    #[error("delta must be 0 or 1, got {0}")]
    InvalidDelta(u8),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("no family of dimension >= 0 for p = {p}, r = {r}")]
    InvalidRank { p: u32, r: u32 },
    #[error("no table entry for p = {p}, r = {r}, a = {a}, delta = {delta:?}")]
    NotInTable {
        p: u32,
        r: u32,
        a: u32,
        delta: Option<u8>,
    },
    #[error("{name} does not have the invariants p = {p}, r = {r}, a = {a}, delta = {delta:?}")]
    RoundTrip {
        name: String,
        p: u32,
        r: u32,
        a: u32,
        delta: Option<u8>,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Existence of an even hyperbolic 2-elementary lattice with invariants
/// `(r, a, delta)`.
pub fn nikulin_2_exists(r: u32, a: u32, delta: u8) -> Result<bool, ClassificationError> {
    if delta > 1 {
        return Err(ClassificationError::InvalidDelta(delta));
    }
    let implies = |p: bool, q: bool| !p || q;
    let r_mod8_is_2_pm_a = r % 8 == (2 + a) % 8 || (r + a) % 8 == 2;
    Ok(a <= r
        && r % 2 == a % 2
        && implies(delta == 0, r % 4 == 2)
        && implies(a == 0, delta == 0)
        && implies(a <= 1, r_mod8_is_2_pm_a)
        && implies(a == 2 && r % 8 == 6, delta == 0)
        && implies(delta == 0 && a == r, r % 8 == 2))
}

/// Existence of an even hyperbolic p-elementary lattice with invariants
/// `(r, a)` for an odd prime `p`.
pub fn rs_p_exists(r: u32, a: u32, p: u32) -> Result<bool, ClassificationError> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(ClassificationError::NotOddPrime(p));
    }
    let implies = |x: bool, y: bool| !x || y;
    // (-1)^(r/2 - 1) mod 4 is 1 or 3
    let sign_class = if r >= 2 && (r / 2 - 1) % 2 == 0 { 1 } else { 3 };
    Ok(a <= r
        && r % 2 == 0
        && implies(a % 2 == 0, r % 4 == 2)
        && implies(a % 2 == 1, p % 4 == sign_class)
        && implies(r % 8 != 2, r > a && a > 0))
}

/// For a rank `p - 1` lattice with an order-p action and discriminant `p^a`,
/// `p^a / p^(p-2)` must be a rational square.
pub fn bcms_condition(p: u32, a: u32) -> bool {
    a % 2 == p % 2
}

/// Dimension of the family of abelian surfaces whose invariant lattice has
/// rank `r` under an order-p action on `H^2`.
pub fn family_dimension(p: u32, r: u32) -> Result<u32, ClassificationError> {
    let invalid = ClassificationError::InvalidRank { p, r };
    match p {
        2 => 4u32.checked_sub(r).ok_or(invalid),
        3 | 5 => {
            let s = H2_RANK.checked_sub(r).ok_or(invalid.clone())?;
            if s == 0 || s % (p - 1) != 0 {
                return Err(invalid);
            }
            Ok(s / (p - 1) - 1)
        }
        _ => Err(ClassificationError::UnsupportedPrime(p)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub p: u32,
    pub r: u32,
    pub dim: u32,
    pub a: u32,
    /// Only defined for `p = 2`.
    pub delta: Option<u8>,
    pub lattice_name: NamedLattice,
}

fn lookup(p: u32, r: u32, a: u32, delta: Option<u8>) -> Option<&'static str> {
    Some(match (p, r, a, delta) {
        (2, 2, 0, Some(0)) => "U",
        (2, 2, 2, Some(0)) => "U(2)",
        (2, 2, 2, Some(1)) => "⟨2⟩ ⊕ ⟨-2⟩",
        (2, 4, 2, Some(1)) => "U ⊕ ⟨-2⟩^2",
        (3, 2, 0, None) => "U",
        (3, 2, 2, None) => "U(3)",
        (3, 4, 1, None) => "U ⊕ A2(-1)",
        (5, 2, 1, None) => "H5",
        _ => return None,
    })
}

/// The unique even hyperbolic p-elementary lattice with the given invariants,
/// restricted to the cases that occur in rank at most 4 inside `U^3`.
/// The invariants of the result are recomputed before it is returned.
pub fn resolve_lattice(
    p: u32,
    r: u32,
    a: u32,
    delta: Option<u8>,
) -> Result<NamedLattice, ClassificationError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(ClassificationError::UnsupportedPrime(p));
    }
    let name = lookup(p, r, a, delta).ok_or(ClassificationError::NotInTable { p, r, a, delta })?;
    let named: NamedLattice = name.parse()?;
    let l = named.lattice()?;
    let delta_ok = match delta {
        Some(d) => delta_invariant(&l)? == d,
        None => true,
    };
    let ok = l.rank() == r as usize
        && l.signature() == (1, r as usize - 1)
        && l.is_even()
        && is_p_elementary(&l, u64::from(p)) == Some(a as usize)
        && delta_ok;
    if !ok {
        return Err(ClassificationError::RoundTrip {
            name: name.to_string(),
            p,
            r,
            a,
            delta,
        });
    }
    Ok(named)
}

/// All admissible invariant lattices for an order-p action, sorted by
/// `(r, a, delta)`.
pub fn enumerate_table(p: u32) -> Result<Vec<ClassificationRow>, ClassificationError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(ClassificationError::UnsupportedPrime(p));
    }
    let mut rows = Vec::new();
    // T is hyperbolic and its complement contains a positive 2-plane, so
    // 2 <= r <= 4; r is even.
    for r in [2u32, 4] {
        let s = H2_RANK - r;
        if p != 2 && s % (p - 1) != 0 {
            continue;
        }
        for a in 0..=r.min(s) {
            let deltas: &[Option<u8>] = if p == 2 { &[Some(0), Some(1)] } else { &[None] };
            for &delta in deltas {
                let exists = match delta {
                    Some(d) => nikulin_2_exists(r, a, d)?,
                    None => rs_p_exists(r, a, p)?,
                };
                if !exists || (s == p - 1 && !bcms_condition(p, a)) {
                    continue;
                }
                rows.push(ClassificationRow {
                    p,
                    r,
                    dim: family_dimension(p, r)?,
                    a,
                    delta,
                    lattice_name: resolve_lattice(p, r, a, delta)?,
                });
            }
        }
    }
    rows.sort_by_key(|row| (row.r, row.a, row.delta));
    Ok(rows)
}

/// Rows for every supported prime.
pub fn full_table() -> Result<Vec<ClassificationRow>, ClassificationError> {
    let mut all = Vec::new();
    for p in SUPPORTED_PRIMES {
        all.extend(enumerate_table(p)?);
    }
    Ok(all)
}

/// Aligned plain-text rendering with columns p, r, dim, a, T.
pub struct TextTable<'a>(pub &'a [ClassificationRow]);

impl fmt::Display for TextTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = ["p", "r", "dim", "a", "T"];
        let cells: Vec<[String; 5]> = self
            .0
            .iter()
            .map(|row| {
                [
                    row.p.to_string(),
                    row.r.to_string(),
                    row.dim.to_string(),
                    row.a.to_string(),
                    row.lattice_name.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for line in &cells {
            for (w, c) in widths.iter_mut().zip(line) {
                *w = (*w).max(c.chars().count());
            }
        }
        let write_line = |f: &mut fmt::Formatter<'_>, line: &[&str]| -> fmt::Result {
            let parts: Vec<String> = line
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(f, "{}", parts.join("  ").trim_end())
        };
        write_line(f, &header)?;
        let total: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
        writeln!(f, "{}", "-".repeat(total))?;
        for line in &cells {
            let refs: Vec<&str> = line.iter().map(String::as_str).collect();
            write_line(f, &refs)?;
        }
        Ok(())
    }
}
