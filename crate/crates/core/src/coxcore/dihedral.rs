use std::fmt;

use crate::error::{Error, Result};

/// Element of the dihedral group `I_2(m)` with generators `s1`, `s2`, stored
/// as the alternating reduced word of length `length` beginning with
/// `start`. The identity and the longest element are kept in the canonical
/// form `start = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    length: usize,
    start: usize,
}

fn other(s: usize) -> usize {
    3 - s
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement {
            length: 0,
            start: 1,
        }
    }

    pub fn longest(m: usize) -> Self {
        DihedralElement {
            length: m,
            start: 1,
        }
    }

    /// Alternating word of the given length starting with `start`.
    pub fn new(m: usize, length: usize, start: usize) -> Result<Self> {
        if length > m || !(1..=2).contains(&start) {
            return Err(Error::OutOfRange(format!(
                "dihedral element (length {length}, start s{start}) in I2({m})"
            )));
        }
        Ok(DihedralElement::canonical(m, length, start))
    }

    fn canonical(m: usize, length: usize, start: usize) -> Self {
        if length == 0 || length == m {
            DihedralElement { length, start: 1 }
        } else {
            DihedralElement { length, start }
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn start(&self) -> usize {
        self.start
    }

    fn last_letter(&self, start: usize) -> usize {
        if self.length % 2 == 1 {
            start
        } else {
            other(start)
        }
    }

    /// Reduced word as generator indices.
    pub fn word(&self) -> Vec<usize> {
        (0..self.length)
            .map(|i| {
                if i % 2 == 0 {
                    self.start
                } else {
                    other(self.start)
                }
            })
            .collect()
    }

    pub(crate) fn left_mul(&self, m: usize, s: usize) -> Self {
        if self.length == 0 {
            return DihedralElement::canonical(m, 1, s);
        }
        if self.length == m {
            // w0 has reduced words starting with either generator.
            return DihedralElement::canonical(m, m - 1, other(s));
        }
        if self.start == s {
            DihedralElement::canonical(m, self.length - 1, other(s))
        } else {
            DihedralElement::canonical(m, self.length + 1, s)
        }
    }

    pub(crate) fn right_mul(&self, m: usize, s: usize) -> Self {
        if self.length == 0 {
            return DihedralElement::canonical(m, 1, s);
        }
        if self.length == m {
            // pick the reduced word of w0 ending in s, then drop that letter
            let start = if m % 2 == 1 { s } else { other(s) };
            return DihedralElement::canonical(m, m - 1, start);
        }
        if self.last_letter(self.start) == s {
            DihedralElement::canonical(m, self.length - 1, self.start)
        } else {
            DihedralElement::canonical(m, self.length + 1, self.start)
        }
    }
}

impl fmt::Display for DihedralElement {
    /// `e` for the identity, otherwise the reduced word such as `s1s2s1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.length == 0 {
            return f.write_str("e");
        }
        for s in self.word() {
            write!(f, "s{s}")?;
        }
        Ok(())
    }
}

/// Parse `e` or an alternating word `s1s2...`.
pub(crate) fn parse_dihedral(m: usize, text: &str) -> Result<DihedralElement> {
    let text = text.trim();
    if text == "e" {
        return Ok(DihedralElement::identity());
    }
    let letters: Vec<usize> = text
        .split('s')
        .skip(1)
        .map(|d| match d {
            "1" => Ok(1),
            "2" => Ok(2),
            _ => Err(Error::parse("dihedral element", text)),
        })
        .collect::<Result<_>>()?;
    if letters.is_empty() || !text.starts_with('s') || letters.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::parse("dihedral element", text));
    }
    DihedralElement::new(m, letters.len(), letters[0])
}
