//! Bit strings, the standard string enumeration, and the prefix-free code.
//!
//! Bits are packed MSB-first per byte, which is also the `.dseq` on-disk
//! layout, so sequence files round-trip without shuffling. The empty
//! string is valid everywhere and prints as `λ`.

use std::fmt;
use std::io::{Read, Write};
use std::path::Path;

use crate::{Error, Result};

/// A finite string over {0, 1}. Trailing bits of the last byte are kept
/// zero so that equality and hashing can work on the raw bytes.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        BitString { bytes: Vec::new(), len: 0 }
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitString { bytes: Vec::with_capacity(bits.div_ceil(8)), len: 0 }
    }

    /// `n` zero bits.
    pub fn zeros(n: usize) -> Self {
        BitString { bytes: vec![0u8; n.div_ceil(8)], len: n }
    }

    /// `n` one bits.
    pub fn ones(n: usize) -> Self {
        let mut s = BitString::with_capacity(n);
        for _ in 0..n {
            s.push(true);
        }
        s
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = BitString::with_capacity(bits.len());
        for &b in bits {
            s.push(b);
        }
        s
    }

    /// Parse a plain run of `0`/`1` characters. Empty input is λ.
    pub fn from_binary_str(text: &str) -> Option<Self> {
        let mut s = BitString::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => s.push(false),
                '1' => s.push(true),
                _ => return None,
            }
        }
        Some(s)
    }

    /// Parse a CLI-style literal: `0b0110` (binary) or `0x2f` (hex,
    /// four bits per digit, MSB first). A bare run of 0/1 also works.
    pub fn parse_literal(text: &str) -> Option<Self> {
        if let Some(bin) = text.strip_prefix("0b") {
            return Self::from_binary_str(bin);
        }
        if let Some(hex) = text.strip_prefix("0x") {
            let mut s = BitString::with_capacity(hex.len() * 4);
            for c in hex.chars() {
                let v = c.to_digit(16)? as u8;
                for k in (0..4).rev() {
                    s.push(v >> k & 1 == 1);
                }
            }
            return Some(s);
        }
        Self::from_binary_str(text)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bytes[i / 8] >> (7 - i % 8) & 1 == 1
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        if self.len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[self.len / 8] |= 1 << (7 - self.len % 8);
        }
        self.len += 1;
    }

    pub fn extend(&mut self, other: &BitString) {
        for b in other.iter() {
            self.push(b);
        }
    }

    /// The first `n` bits as a new string. `n` must not exceed the length.
    pub fn prefix(&self, n: usize) -> BitString {
        assert!(n <= self.len, "prefix {n} of a {}-bit string", self.len);
        let mut s = BitString {
            bytes: self.bytes[..n.div_ceil(8)].to_vec(),
            len: n,
        };
        // re-zero the tail of the last byte
        if n % 8 != 0 {
            let keep = 0xffu8 << (8 - n % 8);
            *s.bytes.last_mut().unwrap() &= keep;
        }
        s
    }

    /// Bits `from..` as a new string.
    pub fn suffix(&self, from: usize) -> BitString {
        let mut s = BitString::with_capacity(self.len.saturating_sub(from));
        for i in from..self.len {
            s.push(self.get(i));
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// True when `self` is a prefix of `other` (`self ⊑ other`).
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        if self.len > other.len {
            return false;
        }
        // whole bytes first, then the ragged tail
        let whole = self.len / 8;
        if self.bytes[..whole] != other.bytes[..whole] {
            return false;
        }
        (whole * 8..self.len).all(|i| self.get(i) == other.get(i))
    }

    /// True when one of the two strings is a prefix of the other
    /// (`self ∼ other`).
    pub fn comparable(&self, other: &BitString) -> bool {
        if self.len <= other.len {
            self.is_prefix_of(other)
        } else {
            other.is_prefix_of(self)
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut s = self.clone();
        s.extend(other);
        s
    }

    pub fn to_binary_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Hex rendering, four bits per digit, zero-padded on the right to a
    /// multiple of four. λ renders as the empty string.
    pub fn to_hex_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.len {
            let mut v = 0u8;
            for k in 0..4 {
                v <<= 1;
                if i + k < self.len && self.get(i + k) {
                    v |= 1;
                }
            }
            out.push(char::from_digit(v as u32, 16).unwrap());
            i += 4;
        }
        out
    }

    /// Raw packed bytes (MSB-first), final byte zero-padded.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "λ")
        } else {
            write!(f, "{}", self.to_binary_string())
        }
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b\"{self}\"")
    }
}

/// A finite prefix of some (conceptually infinite) sequence, tagged with
/// the name of the sequence it came from. Indexing into the sequence is
/// 1-based: position 1 is the leftmost bit.
#[derive(Clone, Debug)]
pub struct SeqPrefix {
    pub bits: BitString,
    pub label: String,
}

impl SeqPrefix {
    pub fn new(bits: BitString, label: impl Into<String>) -> Self {
        SeqPrefix { bits, label: label.into() }
    }

    /// 1-based bit access, mirroring the `S[1]`-is-leftmost convention.
    pub fn at(&self, pos: usize) -> bool {
        assert!(pos >= 1 && pos <= self.bits.len());
        self.bits.get(pos - 1)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Ceiling base-2 logarithm with the degenerate convention fixed once for
/// the whole crate: `ilog(0) = ilog(1) = 0`, otherwise `⌈log₂ n⌉`.
#[inline]
pub fn ilog(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// Floor base-2 logarithm for n ≥ 1.
#[inline]
pub fn ilog_floor(n: u64) -> u32 {
    debug_assert!(n >= 1);
    63 - n.leading_zeros()
}

/// `dbl(x)` followed by the separator `01`. Prefix-free over all payloads;
/// output length is `2|x| + 2`.
pub fn prefix_encode(x: &BitString) -> BitString {
    let mut out = BitString::with_capacity(2 * x.len() + 2);
    for b in x.iter() {
        out.push(b);
        out.push(b);
    }
    out.push(false);
    out.push(true);
    out
}

/// Inverse of [`prefix_encode`]: returns the payload and whatever follows
/// the separator. Fails when a pair is undoubled or the input ends before
/// the separator.
pub fn prefix_decode(y: &BitString) -> Result<(BitString, BitString)> {
    let mut payload = BitString::new();
    let mut i = 0;
    loop {
        if i + 2 > y.len() {
            return Err(Error::MalformedEncoding { at: i });
        }
        match (y.get(i), y.get(i + 1)) {
            (false, true) => return Ok((payload, y.suffix(i + 2))),
            (a, b) if a == b => payload.push(a),
            _ => return Err(Error::MalformedEncoding { at: i }),
        }
        i += 2;
    }
}

/// `s_n` under the length-increasing lexicographic enumeration:
/// λ, 0, 1, 00, 01, 10, 11, 000, …
pub fn string_index(n: u64) -> BitString {
    let m = n + 1;
    let bits = ilog_floor(m);
    let mut s = BitString::with_capacity(bits as usize);
    for k in (0..bits).rev() {
        s.push(m >> k & 1 == 1);
    }
    s
}

/// Inverse of [`string_index`]. Only defined for strings shorter than 64
/// bits, which covers every enumeration index this crate manipulates.
pub fn index_of_string(x: &BitString) -> u64 {
    assert!(x.len() < 64, "enumeration index overflow");
    let mut m = 1u64;
    for b in x.iter() {
        m = m << 1 | b as u64;
    }
    m - 1
}

const DSEQ_MAGIC: &[u8; 4] = b"DSEQ";
const DSEQ_VERSION: u8 = 1;

/// Write a sequence prefix in the bit-packed `.dseq` format: magic
/// `DSEQ`, one version byte, a little-endian u64 bit count, then the bits
/// packed MSB-first with the final byte zero-padded.
pub fn write_dseq<W: Write>(mut w: W, bits: &BitString) -> Result<()> {
    w.write_all(DSEQ_MAGIC)?;
    w.write_all(&[DSEQ_VERSION])?;
    w.write_all(&(bits.len() as u64).to_le_bytes())?;
    w.write_all(bits.as_bytes())?;
    Ok(())
}

pub fn read_dseq<R: Read>(mut r: R) -> Result<BitString> {
    let mut head = [0u8; 13];
    r.read_exact(&mut head)?;
    if &head[..4] != DSEQ_MAGIC || head[4] != DSEQ_VERSION {
        return Err(Error::MalformedEncoding { at: 0 });
    }
    let len = u64::from_le_bytes(head[5..13].try_into().unwrap()) as usize;
    let mut bytes = vec![0u8; len.div_ceil(8)];
    r.read_exact(&mut bytes)?;
    let mut s = BitString { bytes, len };
    if len % 8 != 0 {
        let keep = 0xffu8 << (8 - len % 8);
        if let Some(last) = s.bytes.last_mut() {
            *last &= keep;
        }
    }
    Ok(s)
}

pub fn write_dseq_file(path: &Path, bits: &BitString) -> Result<()> {
    let f = std::fs::File::create(path)?;
    write_dseq(std::io::BufWriter::new(f), bits)
}

pub fn read_dseq_file(path: &Path) -> Result<BitString> {
    let f = std::fs::File::open(path)?;
    read_dseq(std::io::BufReader::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(text: &str) -> BitString {
        BitString::from_binary_str(text).unwrap()
    }

    #[test]
    fn ilog_convention() {
        assert_eq!(ilog(0), 0);
        assert_eq!(ilog(1), 0);
        assert_eq!(ilog(8), 3);
        assert_eq!(ilog(9), 4);
        for k in 1..=30u32 {
            assert_eq!(ilog(1u64 << k), k);
            assert_eq!(ilog((1u64 << k) + 1), k + 1);
        }
    }

    #[test]
    fn prefix_code_examples() {
        assert_eq!(prefix_encode(&BitString::new()), bs("01"));
        assert_eq!(prefix_encode(&bs("1")), bs("1101"));
        assert_eq!(prefix_encode(&bs("10")), bs("110001"));

        let (p, r) = prefix_decode(&bs("01")).unwrap();
        assert!(p.is_empty() && r.is_empty());
        let (p, r) = prefix_decode(&bs("110111")).unwrap();
        assert_eq!((p, r), (bs("1"), bs("11")));
        assert!(matches!(
            prefix_decode(&bs("10")),
            Err(Error::MalformedEncoding { at: 0 })
        ));
    }

    #[test]
    fn prefix_code_roundtrip_exhaustive_to_16() {
        // every payload up to length 16, with a fixed remainder
        let rem = bs("011");
        for len in 0..=16usize {
            for v in 0u32..1 << len {
                let mut x = BitString::new();
                for k in (0..len).rev() {
                    x.push(v >> k & 1 == 1);
                }
                let enc = prefix_encode(&x).concat(&rem);
                let (p, r) = prefix_decode(&enc).unwrap();
                assert_eq!(p, x);
                assert_eq!(r, rem);
            }
        }
    }

    #[test]
    fn prefix_freeness_exhaustive_to_10() {
        let mut codes: Vec<BitString> = Vec::new();
        for len in 0..=10usize {
            for v in 0u32..1 << len {
                let mut x = BitString::new();
                for k in (0..len).rev() {
                    x.push(v >> k & 1 == 1);
                }
                codes.push(prefix_encode(&x));
            }
        }
        for (a, ca) in codes.iter().enumerate() {
            for (b, cb) in codes.iter().enumerate() {
                if a != b {
                    assert!(!ca.is_prefix_of(cb), "{ca} is a prefix of {cb}");
                }
            }
        }
    }

    #[test]
    fn enumeration_basics() {
        assert!(string_index(0).is_empty());
        assert_eq!(string_index(1), bs("0"));
        assert_eq!(string_index(2), bs("1"));
        assert_eq!(string_index(3), bs("00"));
        assert_eq!(string_index(4), bs("01"));
        for k in 1..=10u32 {
            // the last string of each length is 1^k
            assert_eq!(string_index((1 << (k + 1)) - 2), BitString::ones(k as usize));
        }
    }

    #[test]
    fn enumeration_inverse_to_2_16() {
        for n in 0..=1u64 << 16 {
            assert_eq!(index_of_string(&string_index(n)), n);
        }
    }

    #[test]
    fn parse_literals() {
        assert_eq!(BitString::parse_literal("0b0110").unwrap(), bs("0110"));
        assert_eq!(BitString::parse_literal("0x2f").unwrap(), bs("00101111"));
        assert!(BitString::parse_literal("0b").unwrap().is_empty());
        assert!(BitString::parse_literal("zz").is_none());
    }

    proptest! {
        #[test]
        fn prop_encode_decode_roundtrip(x in proptest::collection::vec(any::<bool>(), 0..40),
                                        r in proptest::collection::vec(any::<bool>(), 0..40)) {
            let x = BitString::from_bools(&x);
            let r = BitString::from_bools(&r);
            let (p, rest) = prefix_decode(&prefix_encode(&x).concat(&r)).unwrap();
            prop_assert_eq!(p, x);
            prop_assert_eq!(rest, r);
        }

        #[test]
        fn prop_prefix_suffix_partition(v in proptest::collection::vec(any::<bool>(), 0..64),
                                        cut in 0usize..64) {
            let s = BitString::from_bools(&v);
            let cut = cut.min(s.len());
            let joined = s.prefix(cut).concat(&s.suffix(cut));
            prop_assert_eq!(joined, s);
        }

        #[test]
        fn prop_dseq_roundtrip(v in proptest::collection::vec(any::<bool>(), 0..200)) {
            let s = BitString::from_bools(&v);
            let mut buf = Vec::new();
            write_dseq(&mut buf, &s).unwrap();
            let back = read_dseq(&buf[..]).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
