//! Exact combinatorics of integer partitions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::scalar::Real;

/// Guard on [`enumerate_partitions`]; `p(60) ≈ 1e6`.
pub const MAX_ENUMERATION_SIZE: usize = 60;

/// Weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter("partition parts must be weakly decreasing".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    #[inline]
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    #[inline]
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `λ_1`, zero for the empty partition.
    #[inline]
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let parts = (1..=self.first()).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// `b(λ) = ∑ (i−1) λ_i`.
    pub fn b(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths in row-major cell order.
    pub fn hooks(&self) -> Vec<usize> {
        let t = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + t.parts[j] - i - 1);
            }
        }
        out
    }

    /// `λ + (1^n)`: adds one to each of the first `n` rows, padding with zeros.
    pub fn add_column(&self, n: usize) -> Self {
        let mut parts: Vec<usize> = (1..=n.max(self.length())).map(|i| self.part(i) + usize::from(i <= n)).collect();
        parts.retain(|&p| p > 0);
        Self { parts }
    }

    /// `(n, λ_1, λ_2, …)`; requires `λ_1 ≤ n`.
    pub fn prepend_row(&self, n: usize) -> Result<Self> {
        if self.first() > n {
            return Err(Error::InvalidParameter(format!("cannot prepend row {n} above part {}", self.first())));
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.parts);
        Ok(Self { parts })
    }

    pub fn cell_stats(&self) -> CellStats {
        cell_stats(self)
    }

    pub fn fermionic(&self, depth: usize) -> FermionicSet {
        fermionic_coordinates(self, depth)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Per-cell data and exact `dim λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStats {
    /// Row-major hook lengths.
    pub hooks: Vec<usize>,
    /// Row-major contents `j − i`.
    pub contents: Vec<i64>,
    pub b_of_lambda: usize,
    /// Number of standard Young tableaux, `|λ|!/∏ h`.
    pub dim_lambda: BigUint,
}

pub fn cell_stats(lambda: &Partition) -> CellStats {
    let hooks = lambda.hooks();
    let contents = lambda
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row).map(move |j| j as i64 - i as i64))
        .collect();
    let num: BigUint = (1..=lambda.size()).fold(BigUint::one(), |acc, k| acc * k);
    let den: BigUint = hooks.iter().fold(BigUint::one(), |acc, &h| acc * h);
    debug_assert!((&num % &den) == BigUint::from(0u8));
    CellStats { hooks, contents, b_of_lambda: lambda.b(), dim_lambda: num / den }
}

/// Leading entries of `Ξ(λ) = {λ_i − i + ½}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermionicSet {
    pub entries: Vec<HalfInteger>,
}

impl FermionicSet {
    pub fn contains(&self, r: HalfInteger) -> bool {
        self.entries.contains(&r)
    }
}

pub fn fermionic_coordinates(lambda: &Partition, depth: usize) -> FermionicSet {
    let entries = (1..=depth).map(|i| HalfInteger::above(lambda.part(i) as i64 - i as i64)).collect();
    FermionicSet { entries }
}

/// Whether `r ∈ Ξ(λ)`, decided exactly.
pub fn occupies(lambda: &Partition, r: HalfInteger) -> bool {
    // λ_i − i + ½ = r has i ≥ 1; rows beyond ℓ(λ) give −i + ½.
    let below = r.floor(); // λ_i − i
    if below < -(lambda.length() as i64) {
        return true;
    }
    (1..=lambda.length()).any(|i| lambda.part(i) as i64 - i as i64 == below)
}

/// Specializations with closed-form Schur values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Specialization<T> {
    /// `x_i = ξ q^{i−1/2}`.
    Principal { xi: T, q: T },
    /// Exponential (Plancherel) specialization `t_n = ξ δ_{n,1}`.
    Exponential { xi: T },
}

/// `s_λ` at a specialization:
/// principal `(ξq^{1/2})^{|λ|} q^{b(λ)} ∏ 1/(1−q^h)`, exponential `ξ^{|λ|} ∏ 1/h`.
pub fn schur_specialized<T: Real>(lambda: &Partition, spec: Specialization<T>) -> T {
    let n = lambda.size() as i32;
    match spec {
        Specialization::Principal { xi, q } => {
            let mut v = (xi * q.sqrt()).powi(n) * q.powi(lambda.b() as i32);
            for h in lambda.hooks() {
                v /= T::one() - q.powi(h as i32);
            }
            v
        }
        Specialization::Exponential { xi } => {
            let mut v = xi.powi(n);
            for h in lambda.hooks() {
                v /= T::of_usize(h);
            }
            v
        }
    }
}

/// All partitions of `n` in lexicographically descending order.
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        Self { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        self.next = successor(&cur);
        Some(Partition { parts: cur })
    }
}

/// Next partition of the same size in descending lexicographic order.
fn successor(a: &[usize]) -> Option<Vec<usize>> {
    let k = a.iter().rposition(|&p| p > 1)?;
    let mut out = a[..k].to_vec();
    let v = a[k] - 1;
    let mut rem = a.len() - k; // trailing ones plus the decremented unit
    out.push(v);
    while rem > 0 {
        let take = rem.min(v);
        out.push(take);
        rem -= take;
    }
    Some(out)
}

/// Every partition with `|λ| ≤ max_size`, ordered by size then descending lexicographic order.
pub fn enumerate_partitions(max_size: usize) -> Result<impl Iterator<Item = Partition>> {
    if max_size > MAX_ENUMERATION_SIZE {
        return Err(Error::LimitExceeded { what: "enumeration size", value: max_size, limit: MAX_ENUMERATION_SIZE });
    }
    Ok((0..=max_size).flat_map(PartitionsOf::new))
}

/// Partitions of `n` with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(n: usize, rows: usize, cols: usize) -> impl Iterator<Item = Partition> {
    PartitionsOf::new(n).filter(move |l| l.length() <= rows && l.first() <= cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successor_walks_all_of_five() {
        let all: Vec<String> = PartitionsOf::new(5).map(|p| p.to_string()).collect();
        assert_eq!(all, ["(5)", "(4,1)", "(3,2)", "(3,1,1)", "(2,2,1)", "(2,1,1,1)", "(1,1,1,1,1)"]);
    }

    #[test]
    fn occupation_matches_fermionic_list() {
        let l = Partition::new(vec![3, 1]).unwrap();
        let f = l.fermionic(6);
        for twice in -15..=15 {
            if twice % 2 == 0 {
                continue;
            }
            let r = HalfInteger::from_twice(twice).unwrap();
            if r.value::<f64>() > -6.0 {
                assert_eq!(occupies(&l, r), f.contains(r), "{r}");
            }
        }
    }

    #[test]
    fn column_and_row_growth() {
        let l = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(l.add_column(3).parts(), &[3, 2, 1]);
        assert_eq!(l.add_column(1).parts(), &[3, 1]);
        assert_eq!(l.prepend_row(4).unwrap().parts(), &[4, 2, 1]);
        assert!(l.prepend_row(1).is_err());
        assert_eq!(Partition::empty().add_column(2).parts(), &[1, 1]);
    }
}
