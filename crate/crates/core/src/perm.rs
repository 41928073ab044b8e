//! Permutations of `{0, …, degree−1}` and the cycle notation used at the
//! user-facing boundary.
//!
//! Text uses 1-based points, `"(1 2 3)(4 5)"`, with `"()"` for the identity.
//! Internally every point is 0-based.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, …, degree−1}` stored as its image array.
///
/// Products are read left to right: `a.then(&b)` applies `a` first, so
/// conjugation `h^g` is `g⁻¹ h g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image array {images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation on `degree` points. Successive cycles
    /// are multiplied left to right, so non-disjoint input is a product.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        let mut chars = text.char_indices().peekable();
        let mut saw_cycle = false;
        while let Some((pos, c)) = chars.next() {
            match c {
                c if c.is_whitespace() => continue,
                '(' => {
                    saw_cycle = true;
                    let mut points: Vec<usize> = Vec::new();
                    let mut closed = false;
                    while let Some((pos, c)) = chars.next() {
                        match c {
                            ')' => {
                                closed = true;
                                break;
                            }
                            c if c.is_whitespace() || c == ',' => {}
                            c if c.is_ascii_digit() => {
                                let mut value = c.to_digit(10).unwrap() as usize;
                                while let Some(&(_, d)) = chars.peek() {
                                    let Some(d) = d.to_digit(10) else { break };
                                    value = value * 10 + d as usize;
                                    chars.next();
                                }
                                if value == 0 || value > degree {
                                    return Err(Error::parse(
                                        pos + 1,
                                        format!("point {value} outside 1..={degree}"),
                                    ));
                                }
                                if points.contains(&(value - 1)) {
                                    return Err(Error::parse(
                                        pos + 1,
                                        format!("point {value} repeated within a cycle"),
                                    ));
                                }
                                points.push(value - 1);
                            }
                            other => {
                                return Err(Error::parse(
                                    pos + 1,
                                    format!("unexpected character {other:?} inside cycle"),
                                ))
                            }
                        }
                    }
                    if !closed {
                        return Err(Error::parse(text.len() + 1, "unterminated cycle"));
                    }
                    let mut images: Vec<u32> = (0..degree as u32).collect();
                    for (k, &p) in points.iter().enumerate() {
                        images[p] = points[(k + 1) % points.len()] as u32;
                    }
                    perm = perm.then(&Permutation { images });
                }
                other => {
                    return Err(Error::parse(
                        pos + 1,
                        format!("expected '(' but found {other:?}"),
                    ))
                }
            }
        }
        if !saw_cycle {
            return Err(Error::parse(1, "empty permutation text; use \"()\" for the identity"));
        }
        Ok(perm)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
