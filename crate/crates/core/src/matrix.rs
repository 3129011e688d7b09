//! Coxeter matrices and the type-symbol shorthand for the classical and
//! exceptional finite types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank supported. Generator subsets are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// Symmetric integer matrix `m` with `m[r][r] = 1` and `m[r][s] >= 2`
/// off the diagonal. Infinite entries are not representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct CoxeterMatrix {
    entries: Vec<Vec<u32>>,
}

/// On-disk form: `{"rank": n, "m": [[...], ...]}`.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rank: usize,
    m: Vec<Vec<i64>>,
}

impl TryFrom<MatrixFile> for CoxeterMatrix {
    type Error = Error;

    fn try_from(file: MatrixFile) -> Result<Self> {
        if file.m.len() != file.rank {
            return Err(Error::InvalidMatrix(format!(
                "rank is {} but the matrix has {} rows",
                file.rank,
                file.m.len()
            )));
        }
        let mut entries = Vec::with_capacity(file.rank);
        for (r, row) in file.m.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (s, &v) in row.iter().enumerate() {
                let v = u32::try_from(v).map_err(|_| {
                    Error::InvalidMatrix(format!("entry ({}, {}) = {v} is not a positive integer", r + 1, s + 1))
                })?;
                out.push(v);
            }
            entries.push(out);
        }
        CoxeterMatrix::new(entries)
    }
}

impl From<CoxeterMatrix> for MatrixFile {
    fn from(m: CoxeterMatrix) -> Self {
        MatrixFile {
            rank: m.rank(),
            m: m.entries
                .iter()
                .map(|row| row.iter().map(|&v| i64::from(v)).collect())
                .collect(),
        }
    }
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if n > MAX_RANK {
            return Err(Error::InvalidMatrix(format!("rank {n} exceeds {MAX_RANK}")));
        }
        for (r, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for (s, &v) in row.iter().enumerate() {
                if r == s && v != 1 {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry {} is {v}, expected 1",
                        r + 1
                    )));
                }
                if r != s && v < 2 {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) is {v}, off-diagonal entries must be at least 2",
                        r + 1,
                        s + 1
                    )));
                }
                if entries[s][r] != v {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({}, {})", r + 1, s + 1)));
                }
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MatrixFile = serde_json::from_str(text)?;
        CoxeterMatrix::try_from(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization is infallible")
    }

    /// Path diagram with the given bond labels: `bonds[i]` joins `i` and `i + 1`.
    fn linear(bonds: &[u32]) -> Self {
        let n = bonds.len() + 1;
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, &b) in bonds.iter().enumerate() {
            m[i][i + 1] = b;
            m[i + 1][i] = b;
        }
        CoxeterMatrix { entries: m }
    }

    pub fn type_a(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::BadTypeSymbol(format!("A{n}")));
        }
        Ok(Self::linear(&vec![3; n - 1]))
    }

    /// `B_n`, with the 4-bond between generators `n - 1` and `n`.
    pub fn type_b(n: usize) -> Result<Self> {
        if !(2..=MAX_RANK).contains(&n) {
            return Err(Error::BadTypeSymbol(format!("B{n}")));
        }
        let mut bonds = vec![3; n - 1];
        bonds[n - 2] = 4;
        Ok(Self::linear(&bonds))
    }

    /// `D_n`: a path `1 - ... - (n-1)` with `n` attached to `n - 2`.
    pub fn type_d(n: usize) -> Result<Self> {
        if !(4..=MAX_RANK).contains(&n) {
            return Err(Error::BadTypeSymbol(format!("D{n}")));
        }
        let mut m = Self::linear(&vec![3; n - 2]).entries;
        for (i, row) in m.iter_mut().enumerate() {
            row.push(if i == n - 3 { 3 } else { 2 });
        }
        let mut last = vec![2; n];
        last[n - 3] = 3;
        last[n - 1] = 1;
        m.push(last);
        Ok(CoxeterMatrix { entries: m })
    }

    pub fn type_f4() -> Self {
        Self::linear(&[3, 4, 3])
    }

    pub fn type_h3() -> Self {
        Self::linear(&[5, 3])
    }

    pub fn type_h4() -> Self {
        Self::linear(&[5, 3, 3])
    }

    /// Dihedral group of order `2m`.
    pub fn type_i2(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadTypeSymbol(format!("I2({m})")));
        }
        Ok(Self::linear(&[m]))
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry for 0-based generator indices.
    pub fn get(&self, r: usize, s: usize) -> u32 {
        self.entries[r][s]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// True when the matrix is `A_n` in its standard path labeling.
    pub fn is_type_a(&self) -> bool {
        let n = self.rank();
        (0..n).all(|r| {
            (0..n).all(|s| {
                let expected = match r.abs_diff(s) {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                self.entries[r][s] == expected
            })
        })
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Type symbols accepted on the command line: `A5`, `B3`, `D4`, `F4`, `G2`,
/// `H3`, `H4`, `I2(7)`.
impl FromStr for CoxeterMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sym = s.trim();
        let bad = || Error::BadTypeSymbol(s.to_string());
        let upper = sym.to_ascii_uppercase();
        if let Some(inner) = upper.strip_prefix("I2(").and_then(|t| t.strip_suffix(')')) {
            let m: u32 = inner.trim().parse().map_err(|_| bad())?;
            return Self::type_i2(m).map_err(|_| bad());
        }
        match upper.as_str() {
            "F4" => return Ok(Self::type_f4()),
            "G2" => return Self::type_i2(6),
            "H3" => return Ok(Self::type_h3()),
            "H4" => return Ok(Self::type_h4()),
            _ => {}
        }
        let mut chars = upper.chars();
        let family = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        match family {
            'A' => Self::type_a(n),
            'B' | 'C' => Self::type_b(n),
            'D' => Self::type_d(n),
            _ => Err(bad()),
        }
        .map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_symbols() {
        let a3: CoxeterMatrix = "A3".parse().unwrap();
        assert_eq!(a3.rows(), &[vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]]);
        assert!(a3.is_type_a());

        let d4: CoxeterMatrix = "D4".parse().unwrap();
        assert_eq!(d4.get(1, 3), 3);
        assert_eq!(d4.get(0, 3), 2);
        assert_eq!(d4.get(2, 3), 2);
        assert!(!d4.is_type_a());

        let i7: CoxeterMatrix = "I2(7)".parse().unwrap();
        assert_eq!(i7.get(0, 1), 7);
        assert_eq!("h4".parse::<CoxeterMatrix>().unwrap(), CoxeterMatrix::type_h4());
        assert_eq!("B2".parse::<CoxeterMatrix>().unwrap().get(0, 1), 4);
    }

    #[test]
    fn rejects_bad_symbols() {
        for s in ["", "A0", "B1", "D3", "E6", "I2(1)", "I2(x)", "Q4", "A", "Ã2"] {
            assert!(
                matches!(s.parse::<CoxeterMatrix>(), Err(Error::BadTypeSymbol(_))),
                "{s}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let m = CoxeterMatrix::type_f4();
        let text = m.to_json();
        assert_eq!(text, r#"{"rank":4,"m":[[1,3,2,2],[3,1,4,2],[2,4,1,3],[2,2,3,1]]}"#);
        assert_eq!(CoxeterMatrix::from_json(&text).unwrap(), m);
    }

    #[test]
    fn rejects_invalid_matrices() {
        let cases = [
            r#"{"rank":2,"m":[[1,3],[4,1]]}"#,
            r#"{"rank":2,"m":[[1,1],[1,1]]}"#,
            r#"{"rank":2,"m":[[2,3],[3,1]]}"#,
            r#"{"rank":2,"m":[[1,0],[0,1]]}"#,
            r#"{"rank":2,"m":[[1,-1],[-1,1]]}"#,
            r#"{"rank":3,"m":[[1,3],[3,1]]}"#,
            r#"{"rank":2,"m":[[1,3,2],[3,1]]}"#,
        ];
        for c in cases {
            assert!(
                matches!(CoxeterMatrix::from_json(c), Err(Error::InvalidMatrix(_))),
                "{c}"
            );
        }
        let via_serde: std::result::Result<CoxeterMatrix, _> = serde_json::from_str(cases[0]);
        assert!(via_serde.is_err());
        assert!(matches!(
            CoxeterMatrix::new(vec![vec![1, 3], vec![3, 2]]),
            Err(Error::InvalidMatrix(_))
        ));
        // Infinity has no integer encoding.
        assert!(CoxeterMatrix::from_json(r#"{"rank":2,"m":[[1,"inf"],["inf",1]]}"#).is_err());
    }
}
