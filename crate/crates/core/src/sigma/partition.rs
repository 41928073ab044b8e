use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{is_prime, prime_divisors};

/// How primes not listed in any explicit block are grouped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeftoverRule {
    /// Each unlisted prime is its own block.
    Singletons,
    /// All unlisted primes form one block.
    OneBlock,
}

/// One block σᵢ of a partition of the primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// Exactly these primes.
    Primes(Vec<u64>),
    /// Every prime except these.
    Complement(Vec<u64>),
}

impl Block {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            Block::Primes(ps) => ps.binary_search(&p).is_ok(),
            Block::Complement(ps) => ps.binary_search(&p).is_err(),
        }
    }

    /// `n` is a σᵢ-number: all of its prime divisors lie in the block.
    pub fn divides_only(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// `n` is a σᵢ′-number: none of its prime divisors lie in the block.
    pub fn avoids(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| !self.contains(p))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ps: &[u64]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Block::Primes(ps) => write!(f, "{{{}}}", list(ps)),
            Block::Complement(ps) => write!(f, "P\\{{{}}}", list(ps)),
        }
    }
}

/// A partition σ of the primes: explicit disjoint blocks plus a rule for
/// every prime not listed.
///
/// Text forms: `sigma0` (all singletons), `pi:2,3` (the block `{2,3}` and
/// its complement), `blocks:[2,5][3];rest=singletons` (or `rest=one_block`;
/// the `rest` clause defaults to singletons).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePartition {
    blocks: Vec<Vec<u64>>,
    leftover: LeftoverRule,
    name: String,
}

impl PrimePartition {
    pub fn new(blocks: Vec<Vec<u64>>, leftover: LeftoverRule, name: impl Into<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::parse(1, "empty block"));
            }
            block.sort_unstable();
            for &p in &block {
                if !is_prime(p) {
                    return Err(Error::parse(1, format!("{p} is not a prime")));
                }
                if !seen.insert(p) {
                    return Err(Error::parse(1, format!("prime {p} listed in two blocks")));
                }
            }
            normalized.push(block);
        }
        Ok(PrimePartition {
            blocks: normalized,
            leftover,
            name: name.into(),
        })
    }

    /// All primes in singleton blocks.
    pub fn sigma0() -> Self {
        PrimePartition {
            blocks: Vec::new(),
            leftover: LeftoverRule::Singletons,
            name: "sigma0".into(),
        }
    }

    /// `{π, π′}`.
    pub fn pi(primes: &[u64]) -> Result<Self> {
        let name = format!(
            "pi:{}",
            primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        );
        Self::new(vec![primes.to_vec()], LeftoverRule::OneBlock, name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }

    pub fn leftover(&self) -> LeftoverRule {
        self.leftover
    }

    /// Every block is a single prime.
    pub fn is_sigma0(&self) -> bool {
        self.leftover == LeftoverRule::Singletons && self.blocks.iter().all(|b| b.len() == 1)
    }

    /// The block containing `p`.
    pub fn classify(&self, p: u64) -> Block {
        if let Some(b) = self.blocks.iter().find(|b| b.contains(&p)) {
            return Block::Primes(b.clone());
        }
        match self.leftover {
            LeftoverRule::Singletons => Block::Primes(vec![p]),
            LeftoverRule::OneBlock => {
                let mut listed: Vec<u64> = self.blocks.iter().flatten().copied().collect();
                listed.sort_unstable();
                Block::Complement(listed)
            }
        }
    }

    /// σ(n): the blocks meeting the prime divisors of `n`, ordered by their
    /// smallest such prime.
    pub fn blocks_of(&self, n: u64) -> Vec<Block> {
        let mut out: Vec<Block> = Vec::new();
        for p in prime_divisors(n) {
            let b = self.classify(p);
            if !out.contains(&b) {
                out.push(b);
            }
        }
        out
    }
}

impl fmt::Display for PrimePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn parse_prime_list(text: &str, offset: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let value: u64 = trimmed
            .parse()
            .map_err(|_| Error::parse(pos + 1, format!("expected a prime, found {trimmed:?}")))?;
        if !is_prime(value) {
            return Err(Error::parse(pos + 1, format!("{value} is not a prime")));
        }
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for PrimePartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = text.trim();
        if s == "sigma0" {
            return Ok(Self::sigma0());
        }
        if let Some(rest) = s.strip_prefix("pi:") {
            let primes = parse_prime_list(rest, 3)?;
            return Self::new(vec![primes], LeftoverRule::OneBlock, s);
        }
        if let Some(rest) = s.strip_prefix("blocks:") {
            let (list, rule) = match rest.split_once(';') {
                Some((list, rule)) => (list, Some(rule)),
                None => (rest, None),
            };
            let leftover = match rule.map(str::trim) {
                None | Some("rest=singletons") => LeftoverRule::Singletons,
                Some("rest=one_block") => LeftoverRule::OneBlock,
                Some(other) => {
                    return Err(Error::parse(
                        7 + list.len() + 2,
                        format!("expected rest=singletons or rest=one_block, found {other:?}"),
                    ))
                }
            };
            let mut blocks = Vec::new();
            let mut pos = 7;
            let mut remaining = list;
            while !remaining.trim().is_empty() {
                let lead = remaining.len() - remaining.trim_start().len();
                remaining = remaining.trim_start();
                pos += lead;
                let Some(inner) = remaining.strip_prefix('[') else {
                    return Err(Error::parse(pos + 1, "expected '['"));
                };
                let Some(close) = inner.find(']') else {
                    return Err(Error::parse(pos + 1, "unterminated block"));
                };
                blocks.push(parse_prime_list(&inner[..close], pos + 1)?);
                pos += close + 2;
                remaining = &inner[close + 1..];
            }
            if blocks.is_empty() {
                return Err(Error::parse(8, "no blocks listed"));
            }
            return Self::new(blocks, leftover, s);
        }
        Err(Error::parse(
            1,
            format!("unknown partition {s:?}; expected sigma0, pi:..., or blocks:..."),
        ))
    }
}
