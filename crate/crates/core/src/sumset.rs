//! Subsets of Z_n and their iterated sumsets.

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: usize,
    members: FixedBitSet,
}

impl ResidueSet {
    /// Members must already lie in `0..modulus`; repeats are ignored.
    pub fn new(modulus: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(invalid("modulus must be at least 1"));
        }
        let mut set = FixedBitSet::with_capacity(modulus);
        for a in members {
            if a >= modulus {
                return Err(invalid(format!("residue {a} out of range for modulus {modulus}")));
            }
            set.insert(a);
        }
        Ok(Self { modulus, members: set })
    }

    pub fn empty(modulus: usize) -> Result<Self> {
        Self::new(modulus, [])
    }

    /// Parses a comma-separated list such as `0,1,4`.
    pub fn parse(modulus: usize, list: &str) -> Result<Self> {
        let members = parse_list(list)?;
        Self::new(modulus, members)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.modulus
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.members.is_subset(&other.members)
    }

    pub fn negated(&self) -> Self {
        let n = self.modulus;
        let mut neg = FixedBitSet::with_capacity(n);
        for a in self.iter() {
            neg.insert((n - a) % n);
        }
        Self { modulus: n, members: neg }
    }

    pub fn is_symmetric(&self) -> bool {
        self.negated() == *self
    }

    /// A ∪ (−A).
    pub fn symmetrized(&self) -> Self {
        let mut out = self.negated();
        out.members.union_with(&self.members);
        out
    }

    pub fn with(&self, a: usize) -> Self {
        let mut out = self.clone();
        out.members.insert(a % self.modulus);
        out
    }

    pub fn without(&self, a: usize) -> Self {
        let mut out = self.clone();
        out.members.set(a % self.modulus, false);
        out
    }

    /// A + B, the set of pairwise sums. Each member of `other` contributes a
    /// cyclic shift of `self`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(invalid("residue sets have different moduli"));
        }
        let n = self.modulus;
        let mut out = FixedBitSet::with_capacity(n);
        for b in other.iter() {
            for a in self.iter() {
                let s = a + b;
                out.insert(if s >= n { s - n } else { s });
            }
        }
        Ok(Self { modulus: n, members: out })
    }

    /// hA = {a_1 + ... + a_h}.
    pub fn sumset(&self, h: usize) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if h == 0 {
            return Err(invalid("sumset order h must be at least 1"));
        }
        let mut acc = self.clone();
        for _ in 1..h {
            acc = acc.sum(self)?;
        }
        Ok(acc)
    }

    /// Smallest h <= n with hA = Z_n, if any.
    pub fn basis_order(&self) -> Result<Option<usize>> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut acc = self.clone();
        for h in 1..=self.modulus {
            if acc.is_full() {
                return Ok(Some(h));
            }
            acc = acc.sum(self)?;
        }
        Ok(None)
    }

    pub fn is_basis(&self) -> Result<bool> {
        Ok(self.basis_order()?.is_some())
    }
}

impl std::fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

impl std::fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list: Vec<String> = self.iter().map(|a| a.to_string()).collect();
        f.write_str(&list.join(","))
    }
}

impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub fn parse_list(list: &str) -> Result<Vec<usize>> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<usize>().map_err(|_| invalid(format!("bad residue {s:?}")))
        })
        .collect()
}

/// Trial division.
pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}
