use std::fmt;
use std::str::FromStr;

use crate::error::MonodromyError;

/// Letter `(i, ±1)` is the elementary braid `β_{i,i+1}^{±1}`, with `i ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// All letters positive.
    pub fn positive(indices: &[usize]) -> Self {
        BraidWord { letters: indices.iter().map(|&i| (i, 1)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect() }
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        BraidWord { letters }
    }

    pub fn repeat(&self, k: usize) -> Self {
        BraidWord { letters: self.letters.repeat(k) }
    }

    pub fn validate(&self, n: usize) -> Result<(), MonodromyError> {
        match self.letters.iter().find(|(i, s)| *i == 0 || *i >= n || !(*s == 1 || *s == -1)) {
            Some((i, _)) => Err(MonodromyError::BadWord(format!("generator {i} out of range for n = {n}"))),
            None => Ok(()),
        }
    }
}

impl FromStr for BraidWord {
    type Err = MonodromyError;

    /// Whitespace-separated signed integers; `k` is `β_{k,k+1}`, `-k` its inverse.
    fn from_str(s: &str) -> Result<Self, MonodromyError> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let k: i64 = tok.parse().map_err(|_| MonodromyError::BadWord(format!("'{tok}' is not an integer")))?;
                if k == 0 {
                    return Err(MonodromyError::BadWord("generator 0 does not exist".into()));
                }
                Ok((k.unsigned_abs() as usize, if k > 0 { 1 } else { -1 }))
            })
            .collect::<Result<_, _>>()?;
        Ok(BraidWord { letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.letters.iter().map(|&(i, s)| if s > 0 { i.to_string() } else { format!("-{i}") }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(β₁₂β₂₃⋯β_{n−1,n})ⁿ`, the braid of a full turn.
pub fn center_braid(n: usize) -> BraidWord {
    let gens: Vec<usize> = (1..n).collect();
    BraidWord::positive(&gens).repeat(n)
}
