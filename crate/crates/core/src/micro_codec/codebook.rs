use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::entropy_code::{decode_micro_entropy, encode_micro_entropy};
use super::huffman::{canonical_codes, huffman_lengths};
use super::types::{MicroTables, MicroType};
use crate::error::{Error, Result};
use crate::io::{Reader, Writer};
use crate::ops;
use crate::primitives::RawBits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CodecMode {
    /// Zaks sequence of each micro tree.
    Fixed,
    /// Bounded subtree-size arithmetic code.
    #[default]
    Entropy,
    /// Huffman code over the micro-tree types that occur.
    Huffman,
}

impl CodecMode {
    pub const ALL: [CodecMode; 3] = [CodecMode::Fixed, CodecMode::Entropy, CodecMode::Huffman];

    fn tag(self) -> u8 {
        match self {
            CodecMode::Fixed => 0,
            CodecMode::Entropy => 1,
            CodecMode::Huffman => 2,
        }
    }
}

impl fmt::Display for CodecMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodecMode::Fixed => "fixed",
            CodecMode::Entropy => "entropy",
            CodecMode::Huffman => "huffman",
        })
    }
}

impl FromStr for CodecMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(CodecMode::Fixed),
            "entropy" => Ok(CodecMode::Entropy),
            "huffman" => Ok(CodecMode::Huffman),
            _ => Err(Error::InvalidName(format!("codec {s:?} (expected fixed, entropy or huffman)"))),
        }
    }
}

/// Codewords for the distinct micro-tree types of one tree cover.
///
/// Type ids index `types`, which is sorted by key. Codewords are stored as
/// `(len, bits)` with bit `i` being the `i`-th bit written.
#[derive(Debug, Clone)]
pub struct Codebook {
    mode: CodecMode,
    max_nodes: usize,
    types: Vec<MicroType>,
    codes: Vec<(u8, u128)>,
    decode_map: HashMap<(u8, u128), u32>,
    // canonical Huffman decoding, indexed by code length
    first: Vec<u128>,
    offset: Vec<u32>,
    count: Vec<u32>,
    by_rank: Vec<u32>,
    tables: Vec<OnceLock<MicroTables>>,
}

impl PartialEq for Codebook {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.max_nodes == other.max_nodes && self.types == other.types && self.codes == other.codes
    }
}

impl Eq for Codebook {}

fn key_of(bits: &RawBits) -> (u8, u128) {
    (bits.len() as u8, bits.get_u128(0, bits.len()))
}

fn reverse(len: u8, bits: u128) -> u128 {
    if len == 0 {
        0
    } else {
        bits.reverse_bits() >> (128 - len as u32)
    }
}

impl Codebook {
    /// `types` must be sorted and distinct; `freqs[i]` counts occurrences of `types[i]`.
    pub fn build(mode: CodecMode, types: Vec<MicroType>, freqs: &[u64], max_nodes: usize) -> Result<Self> {
        if types.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Build("micro types must be sorted and distinct".into()));
        }
        if types.iter().any(|t| t.nodes() > max_nodes || t.nodes() == 0) {
            return Err(Error::Build(format!("micro type outside 1..={max_nodes} nodes")));
        }
        let lengths = match mode {
            CodecMode::Huffman => {
                if freqs.len() != types.len() {
                    return Err(Error::Build("one frequency per type required".into()));
                }
                huffman_lengths(freqs)
            }
            _ => Vec::new(),
        };
        Self::assemble(mode, types, &lengths, max_nodes)
    }

    fn assemble(mode: CodecMode, types: Vec<MicroType>, lengths: &[u8], max_nodes: usize) -> Result<Self> {
        let codes: Vec<(u8, u128)> = match mode {
            CodecMode::Fixed => types.iter().map(|t| (t.key().0 as u8, t.key().1)).collect(),
            CodecMode::Entropy => types.iter().map(|t| key_of(&encode_micro_entropy(&t.shape(), max_nodes))).collect(),
            CodecMode::Huffman => {
                if lengths.len() != types.len() || lengths.iter().any(|&l| l == 0 || l > 128) {
                    return Err(Error::Decode("invalid Huffman code lengths".into()));
                }
                if super::huffman::kraft_sum(lengths) > 1.0 {
                    return Err(Error::Decode("Huffman code lengths violate Kraft".into()));
                }
                canonical_codes(lengths).into_iter().zip(lengths).map(|(c, &l)| (l, reverse(l, c))).collect()
            }
        };
        let mut book = Self {
            mode,
            max_nodes,
            tables: (0..types.len()).map(|_| OnceLock::new()).collect(),
            types,
            codes,
            decode_map: HashMap::new(),
            first: vec![0; 129],
            offset: vec![0; 129],
            count: vec![0; 129],
            by_rank: Vec::new(),
        };
        if mode == CodecMode::Huffman {
            let mut order: Vec<u32> = (0..book.types.len() as u32).collect();
            order.sort_by_key(|&i| (lengths[i as usize], i));
            for (rank, &i) in order.iter().enumerate() {
                let l = lengths[i as usize] as usize;
                if book.count[l] == 0 {
                    book.first[l] = reverse(l as u8, book.codes[i as usize].1);
                    book.offset[l] = rank as u32;
                }
                book.count[l] += 1;
            }
            book.by_rank = order;
        } else {
            for (i, &c) in book.codes.iter().enumerate() {
                if book.decode_map.insert(c, i as u32).is_some() {
                    return Err(Error::Build("duplicate codeword".into()));
                }
            }
        }
        Ok(book)
    }

    pub fn mode(&self) -> CodecMode {
        self.mode
    }

    pub fn max_nodes(&self) -> usize {
        self.max_nodes
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[MicroType] {
        &self.types
    }

    pub fn type_id(&self, t: &MicroType) -> Option<usize> {
        self.types.binary_search(t).ok()
    }

    pub fn code_len(&self, id: usize) -> usize {
        self.codes[id].0 as usize
    }

    pub fn codeword(&self, id: usize) -> RawBits {
        let (len, bits) = self.codes[id];
        (0..len as usize).map(|i| (bits >> i) & 1 == 1).collect()
    }

    /// Type id for a stored codeword.
    #[inline]
    pub fn decode(&self, len: usize, bits: u128) -> Option<usize> {
        ops::tick(1);
        if self.mode == CodecMode::Huffman {
            if len == 0 || len > 128 {
                return None;
            }
            let c = reverse(len as u8, bits);
            let idx = c.checked_sub(self.first[len])?;
            if idx >= self.count[len] as u128 {
                return None;
            }
            return Some(self.by_rank[self.offset[len] as usize + idx as usize] as usize);
        }
        self.decode_map.get(&(len as u8, bits)).map(|&i| i as usize)
    }

    /// Decodes a codeword back to a shape without consulting the type list.
    pub fn decode_shape(&self, code: &RawBits) -> Result<MicroType> {
        match self.mode {
            CodecMode::Fixed => MicroType::from_key(code.len(), code.get_u128(0, code.len())),
            CodecMode::Entropy => MicroType::of(&decode_micro_entropy(code, self.max_nodes)?),
            CodecMode::Huffman => {
                let id = self
                    .decode(code.len(), code.get_u128(0, code.len()))
                    .ok_or_else(|| Error::Decode("unknown Huffman codeword".into()))?;
                Ok(self.types[id])
            }
        }
    }

    /// Lookup tables for type `id`, built on first use.
    #[inline]
    pub fn tables(&self, id: usize) -> &MicroTables {
        self.tables[id].get_or_init(|| MicroTables::new(&self.types[id].shape()))
    }

    pub fn code_lengths(&self) -> Vec<u8> {
        self.codes.iter().map(|c| c.0).collect()
    }

    /// Bits to store the codebook itself: each key with a length byte, plus
    /// one length byte per type in Huffman mode.
    pub fn size_bits(&self) -> usize {
        let keys: usize = self.types.iter().map(|t| 8 + t.key().0).sum();
        keys + if self.mode == CodecMode::Huffman { 8 * self.types.len() } else { 0 }
    }

    /// Lookup-table bits if every type's tables were built.
    pub fn table_bits(&self) -> usize {
        self.types.iter().map(|t| 8 * (5 * t.nodes() + t.nodes() * t.nodes())).sum()
    }

    pub(crate) fn write_to(&self, w: &mut Writer) {
        w.section(b"CBOK", 1, |w| {
            w.put_u8(self.mode.tag());
            w.put_u64(self.max_nodes as u64);
            w.put_u64(self.types.len() as u64);
            for t in &self.types {
                let (len, bits) = t.key();
                w.put_u8(len as u8);
                w.put_u64(bits as u64);
                w.put_u64((bits >> 64) as u64);
            }
            if self.mode == CodecMode::Huffman {
                w.put_bytes(&self.code_lengths());
            }
        });
    }

    pub(crate) fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"CBOK", 1)?;
        let mode = match s.get_u8()? {
            0 => CodecMode::Fixed,
            1 => CodecMode::Entropy,
            2 => CodecMode::Huffman,
            x => return Err(Error::Format(format!("unknown codec tag {x}"))),
        };
        let max_nodes = s.get_usize()?;
        if max_nodes == 0 || max_nodes > super::types::MAX_MICRO_NODES {
            return Err(Error::Format(format!("micro size limit {max_nodes} out of range")));
        }
        let m = s.get_usize()?;
        if m > s.remaining() {
            return Err(Error::Format("type count exceeds section".into()));
        }
        let mut types = Vec::with_capacity(m);
        for _ in 0..m {
            let len = s.get_u8()? as usize;
            let bits = s.get_u64()? as u128 | (s.get_u64()? as u128) << 64;
            types.push(MicroType::from_key(len, bits)?);
        }
        if types.windows(2).any(|w| w[0] >= w[1]) || types.iter().any(|t| t.nodes() > max_nodes) {
            return Err(Error::Format("codebook types not sorted or oversized".into()));
        }
        let lengths = if mode == CodecMode::Huffman { s.get_bytes(m)?.to_vec() } else { Vec::new() };
        s.finish()?;
        Self::assemble(mode, types, &lengths, max_nodes)
    }
}
