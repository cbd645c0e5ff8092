//! Binary strings and their run-length encodings.
//!
//! Positions are 1-based in documentation and in mask values; storage is a
//! plain `Vec<u8>` read left to right.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("symbol {b} is not binary")));
        }
        Ok(BitString { bits })
    }

    pub fn empty() -> Self {
        BitString { bits: Vec::new() }
    }

    pub fn constant(len: usize, symbol: u8) -> Self {
        BitString {
            bits: vec![symbol & 1; len],
        }
    }

    /// `symbol, 1-symbol, symbol, ...` of the given length.
    pub fn alternating(len: usize, first: u8) -> Self {
        BitString {
            bits: (0..len).map(|i| (first ^ (i as u8)) & 1).collect(),
        }
    }

    /// The `len` low bits of `value`, most significant bit first, so that
    /// string order agrees with numeric order.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        BitString {
            bits: (0..len).map(|i| ((value >> (len - 1 - i)) & 1) as u8).collect(),
        }
    }

    pub fn to_u64(&self) -> u64 {
        assert!(self.len() <= 64);
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// All strings of length `len` in ascending binary order.
    pub fn all(len: usize) -> impl Iterator<Item = BitString> {
        assert!(len < 64);
        (0..1u64 << len).map(move |v| BitString::from_u64(v, len))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.bits
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn complement(&self) -> Self {
        BitString {
            bits: self.bits.iter().map(|b| b ^ 1).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        BitString {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_alternating(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] != w[1])
    }

    /// `y_π`: the symbols of `self` at the (1-based) positions of `mask`.
    pub fn project(&self, mask: &[usize]) -> BitString {
        BitString {
            bits: mask.iter().map(|&i| self.bits[i - 1]).collect(),
        }
    }
}

impl From<&[u8]> for BitString {
    fn from(bits: &[u8]) -> Self {
        BitString::new(bits.to_vec()).expect("binary symbols")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BitString { bits })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            f.write_str(if *b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn hamming_weight(s: &BitString) -> usize {
    s.bits.iter().filter(|&&b| b == 1).count()
}

/// Run-length encoding `(a; b_1, ..., b_l)`: the first symbol and the run
/// lengths. The empty string has no first symbol and no runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rle {
    first: Option<u8>,
    runs: Vec<usize>,
}

impl Rle {
    pub fn new(first_symbol: u8, runs: Vec<usize>) -> Result<Self> {
        if first_symbol > 1 {
            return Err(Error::Parse(format!("first symbol {first_symbol} is not binary")));
        }
        if runs.is_empty() {
            return Err(Error::Parse("a nonempty encoding needs at least one run".into()));
        }
        if runs.contains(&0) {
            return Err(Error::Parse("run lengths must be positive".into()));
        }
        Ok(Rle {
            first: Some(first_symbol),
            runs,
        })
    }

    pub fn empty() -> Self {
        Rle {
            first: None,
            runs: Vec::new(),
        }
    }

    pub fn first_symbol(&self) -> Option<u8> {
        self.first
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// Number of runs, `ℓ`.
    pub fn ell(&self) -> usize {
        self.runs.len()
    }

    /// Length of the decoded string.
    pub fn total_len(&self) -> usize {
        self.runs.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Symbol of the 0-based run `i`.
    pub fn run_symbol(&self, i: usize) -> u8 {
        self.first.expect("nonempty encoding") ^ (i as u8 & 1)
    }
}

/// Accepts `2,1,3`, `s=0:2,1,3` or `s=0,2,1,3`. The first symbol defaults to 1.
impl FromStr for Rle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (first, body) = match s.strip_prefix("s=") {
            Some(rest) => {
                let mut chars = rest.chars();
                let sym = match chars.next() {
                    Some('0') => 0,
                    Some('1') => 1,
                    _ => return Err(Error::Parse(format!("bad first-symbol prefix in {s:?}"))),
                };
                let tail = chars.as_str();
                let tail = tail
                    .strip_prefix(':')
                    .or_else(|| tail.strip_prefix(','))
                    .ok_or_else(|| Error::Parse(format!("expected ':' after the prefix in {s:?}")))?;
                (sym, tail)
            }
            None => (1, s),
        };
        let runs = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad run length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Rle::new(first, runs)
    }
}

impl fmt::Display for Rle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first {
            None => f.write_str("()"),
            Some(a) => {
                let runs: Vec<String> = self.runs.iter().map(|k| k.to_string()).collect();
                write!(f, "({a}; {})", runs.join(","))
            }
        }
    }
}

pub fn rle_encode(s: &BitString) -> Rle {
    let bits = s.as_slice();
    let Some(&first) = bits.first() else {
        return Rle::empty();
    };
    let mut runs = vec![1usize];
    for w in bits.windows(2) {
        if w[0] == w[1] {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    Rle {
        first: Some(first),
        runs,
    }
}

pub fn rle_decode(r: &Rle) -> BitString {
    let mut bits = Vec::with_capacity(r.total_len());
    for (i, &k) in r.runs.iter().enumerate() {
        bits.extend(std::iter::repeat_n(r.run_symbol(i), k));
    }
    BitString { bits }
}

/// The merging transformation `g`: the first run is flipped to its
/// complement so it joins the second, e.g. `(1;1,2,3,1) -> (0;3,3,1)`.
/// A single run (and the empty encoding) is a fixed point.
pub fn apply_g(r: &Rle) -> Rle {
    if r.ell() <= 1 {
        return r.clone();
    }
    let mut runs = Vec::with_capacity(r.ell() - 1);
    runs.push(r.runs[0] + r.runs[1]);
    runs.extend_from_slice(&r.runs[2..]);
    Rle {
        first: r.first.map(|a| a ^ 1),
        runs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn encode_paper_example() {
        let r = rle_encode(&bs("0011010001"));
        assert_eq!(r, Rle::new(0, vec![2, 2, 1, 1, 3, 1]).unwrap());
        assert_eq!(rle_decode(&r), bs("0011010001"));
    }

    #[test]
    fn encode_trivial_cases() {
        assert_eq!(rle_encode(&BitString::empty()), Rle::empty());
        assert_eq!(rle_encode(&bs("11111")), Rle::new(1, vec![5]).unwrap());
        assert_eq!(rle_decode(&Rle::new(0, vec![1, 1, 1]).unwrap()), bs("010"));
    }

    #[test]
    fn weights() {
        assert_eq!(hamming_weight(&bs("110")), 2);
        assert_eq!(hamming_weight(&bs("00000")), 0);
        assert_eq!(hamming_weight(&bs("0011010001")), 4);
    }

    #[test]
    fn g_examples() {
        let x = rle_encode(&bs("1001110"));
        assert_eq!(apply_g(&x), rle_encode(&bs("0001110")));
        let single = Rle::new(0, vec![7]).unwrap();
        assert_eq!(apply_g(&single), single);
        assert_eq!(apply_g(&rle_encode(&bs("101010"))), rle_encode(&bs("001010")));
    }

    #[test]
    fn parse_rle_syntax() {
        assert_eq!("1,1".parse::<Rle>().unwrap(), Rle::new(1, vec![1, 1]).unwrap());
        assert_eq!("s=0:2,3".parse::<Rle>().unwrap(), Rle::new(0, vec![2, 3]).unwrap());
        assert_eq!("s=0,2,3".parse::<Rle>().unwrap(), Rle::new(0, vec![2, 3]).unwrap());
        assert!("1,0".parse::<Rle>().is_err());
        assert!("s=2:1".parse::<Rle>().is_err());
        assert!("".parse::<Rle>().is_err());
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 0..=16 {
            for s in BitString::all(n) {
                assert_eq!(rle_decode(&rle_encode(&s)), s);
            }
        }
    }

    #[test]
    fn u64_packing_is_msb_first() {
        assert_eq!(BitString::from_u64(0b110, 3), bs("110"));
        assert_eq!(bs("0110").to_u64(), 6);
    }

    proptest! {
        #[test]
        fn g_drops_one_run_and_keeps_length(bits in proptest::collection::vec(0u8..2, 1..40)) {
            let r = rle_encode(&BitString::new(bits).unwrap());
            let g = apply_g(&r);
            prop_assert_eq!(g.total_len(), r.total_len());
            if r.ell() > 1 {
                prop_assert_eq!(g.ell(), r.ell() - 1);
                // g(r) must already be canonical: decoding and re-encoding changes nothing.
                prop_assert_eq!(rle_encode(&rle_decode(&g)), g);
            } else {
                prop_assert_eq!(g, r);
            }
        }

        #[test]
        fn g_chain_reaches_single_run(bits in proptest::collection::vec(0u8..2, 1..40)) {
            let mut r = rle_encode(&BitString::new(bits).unwrap());
            let steps = r.ell() - 1;
            for _ in 0..steps {
                r = apply_g(&r);
            }
            prop_assert_eq!(r.ell(), 1);
        }

        #[test]
        fn complement_flips_only_first_symbol(bits in proptest::collection::vec(0u8..2, 1..40)) {
            let s = BitString::new(bits).unwrap();
            let a = rle_encode(&s);
            let b = rle_encode(&s.complement());
            prop_assert_eq!(a.runs(), b.runs());
            prop_assert_eq!(a.first_symbol().map(|v| v ^ 1), b.first_symbol());
        }
    }
}
