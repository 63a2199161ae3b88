//! Finite label groups for G-braids, given by multiplication table.

use std::fmt;

use crate::error::{BraidError, Result};

/// A finite group stored as an `m × m` multiplication table over element
/// indices `0..m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupTable {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroupTable {
    /// Builds a table and checks closure, associativity, the identity and
    /// two-sided inverses.
    pub fn new(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(BraidError::InvalidGroup("empty group".into()));
        }
        if table.len() != m || table.iter().any(|row| row.len() != m) {
            return Err(BraidError::InvalidGroup(format!("table must be {m}x{m}")));
        }
        if table.iter().flatten().any(|&x| x >= m) {
            return Err(BraidError::InvalidGroup("table entry out of range".into()));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(BraidError::InvalidGroup(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| BraidError::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(m);
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| BraidError::InvalidGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(FiniteGroupTable {
            name: name.to_string(),
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// The cyclic group `Z_m` written additively; element `k` is the residue `k`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(BraidError::InvalidGroup("Z_0 is not finite".into()));
        }
        let labels = (0..m).map(|k| k.to_string()).collect();
        let table = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        Self::new(&format!("Z{m}"), labels, table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    /// The symmetric group on three letters. Elements are the permutations
    /// of `[0, 1, 2]` in lexicographic order, so index 0 is the identity.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (a * b)(x) = a(b(x))
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1))
            .collect();
        Self::new("S3", labels, table).expect("S3 table is a group")
    }

    /// Looks up one of the built-in groups: `trivial`, `Z<m>`, `S3`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "trivial" | "1" => Ok(Self::trivial()),
            "S3" | "s3" => Ok(Self::symmetric3()),
            _ => {
                let digits = name
                    .strip_prefix('Z')
                    .or_else(|| name.strip_prefix('z'))
                    .ok_or_else(|| BraidError::InvalidGroup(format!("unknown group `{name}`")))?;
                let m: usize = digits
                    .parse()
                    .map_err(|_| BraidError::InvalidGroup(format!("unknown group `{name}`")))?;
                Self::cyclic(m)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Representatives of the classes `{g, g⁻¹}`, smallest index first.
    pub fn inverse_classes(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| g <= self.inv(g)).collect()
    }
}

impl fmt::Debug for FiniteGroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroupTable({})", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_inverses() {
        let z3 = FiniteGroupTable::cyclic(3).unwrap();
        assert_eq!(z3.identity(), 0);
        assert_eq!(z3.inv(1), 2);
        assert_eq!(z3.inv(2), 1);
        assert_eq!(z3.inverse_classes(), vec![0, 1]);
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = FiniteGroupTable::symmetric3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        let commuting = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .all(|(a, b)| s3.mul(a, b) == s3.mul(b, a));
        assert!(!commuting);
        // transpositions are involutions, 3-cycles are mutually inverse
        assert_eq!(s3.inv(1), 1);
        assert_eq!(s3.inv(3), 4);
    }

    #[test]
    fn rejects_non_associative_table() {
        let labels = vec!["a".into(), "b".into(), "c".into()];
        // a Latin square with identity 0 that is not associative
        let table = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(FiniteGroupTable::new("bad", labels, table).is_err());
    }

    #[test]
    fn by_name_round_trip() {
        assert_eq!(FiniteGroupTable::by_name("Z4").unwrap().order(), 4);
        assert_eq!(FiniteGroupTable::by_name("S3").unwrap().name(), "S3");
        assert!(FiniteGroupTable::by_name("Q8").is_err());
    }
}
