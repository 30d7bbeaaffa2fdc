//! Bit vectors and truth tables as permutations.
//!
//! Everything exhaustive in this crate goes through this module: a reversible
//! gate or circuit on `n` lines is a bijection on `[0, 2^n)`, and all
//! verification reduces to building and comparing such permutations.
//!
//! Bit-order convention, enforced crate-wide: the FIRST declared line is the
//! MOST significant bit of the encoded integer. A gate on lines (A, B, C)
//! maps input index `4A + 2B + C`.

use thiserror::Error;

/// Hard cap on line count for exhaustive enumeration. 2^16 rows stay instant;
/// anything wider is rejected instead of silently crawling.
pub const MAX_WIDTH: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BitcoreError {
    #[error("width {0} out of range (must be 1..={MAX_WIDTH})")]
    WidthOutOfRange(usize),
    #[error("value {value} does not fit in {width} bits")]
    ValueOutOfRange { width: usize, value: u32 },
    #[error("table length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    #[error("table entry {entry} at index {index} is out of range (table length {len})")]
    EntryOutOfRange { index: usize, entry: u32, len: usize },
    #[error("table is not a bijection: inputs {first} and {second} both map to {image}")]
    NotBijective { first: u32, second: u32, image: u32 },
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(usize, usize),
}

/// A fixed-width vector of line values, encoded first-line-is-MSB.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVector {
    width: usize,
    value: u32,
}

impl BitVector {
    pub fn new(width: usize, value: u32) -> Result<Self, BitcoreError> {
        if width == 0 || width > MAX_WIDTH {
            return Err(BitcoreError::WidthOutOfRange(width));
        }
        if value >= (1u32 << width) {
            return Err(BitcoreError::ValueOutOfRange { width, value });
        }
        Ok(BitVector { width, value })
    }

    /// Encode an ordered tuple of line values; `bits[0]` is the first line
    /// and therefore the most significant bit.
    pub fn from_bits(bits: &[bool]) -> Result<Self, BitcoreError> {
        Self::new(bits.len(), encode_bits(bits))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Value of line `i` (line 0 is the MSB).
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.width);
        (self.value >> (self.width - 1 - i)) & 1 == 1
    }

    pub fn bits(&self) -> Vec<bool> {
        decode_bits(self.width, self.value)
    }
}

impl std::fmt::Display for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.width {
            write!(f, "{}", if self.bit(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Encode line values to an integer, first value = MSB.
pub fn encode_bits(bits: &[bool]) -> u32 {
    bits.iter().fold(0, |acc, &b| (acc << 1) | u32::from(b))
}

/// Decode an integer to `width` line values, first value = MSB.
pub fn decode_bits(width: usize, value: u32) -> Vec<bool> {
    (0..width).map(|i| (value >> (width - 1 - i)) & 1 == 1).collect()
}

/// Check that a truth table is a bijection on its index range.
///
/// Structural problems (length not a power of two, entry out of range) are
/// errors; a well-formed table that merely collides returns `Ok(false)`.
pub fn is_bijective(table: &[u32]) -> Result<bool, BitcoreError> {
    let len = table.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(BitcoreError::LengthNotPowerOfTwo(len));
    }
    for (index, &entry) in table.iter().enumerate() {
        if entry as usize >= len {
            return Err(BitcoreError::EntryOutOfRange { index, entry, len });
        }
    }
    Ok(collision(table).is_none())
}

/// First pair of inputs mapping to the same image, if any.
pub fn collision(table: &[u32]) -> Option<(u32, u32, u32)> {
    let mut seen = vec![u32::MAX; table.len()];
    for (index, &entry) in table.iter().enumerate() {
        let prev = seen[entry as usize];
        if prev != u32::MAX {
            return Some((prev, index as u32, entry));
        }
        seen[entry as usize] = index as u32;
    }
    None
}

/// A bijection on `[0, 2^width)`: the exhaustive behavior of a reversible
/// gate or circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthPermutation {
    width: usize,
    map: Vec<u32>,
}

impl TruthPermutation {
    pub fn new(width: usize, map: Vec<u32>) -> Result<Self, BitcoreError> {
        if width == 0 || width > MAX_WIDTH {
            return Err(BitcoreError::WidthOutOfRange(width));
        }
        if map.len() != 1usize << width {
            return Err(BitcoreError::LengthNotPowerOfTwo(map.len()));
        }
        if !is_bijective(&map)? {
            let (first, second, image) = collision(&map).expect("collision exists");
            return Err(BitcoreError::NotBijective { first, second, image });
        }
        Ok(TruthPermutation { width, map })
    }

    pub fn identity(width: usize) -> Result<Self, BitcoreError> {
        if width == 0 || width > MAX_WIDTH {
            return Err(BitcoreError::WidthOutOfRange(width));
        }
        let map = (0..1u32 << width).collect();
        Ok(TruthPermutation { width, map })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    pub fn image(&self, input: u32) -> u32 {
        self.map[input as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// The inverse permutation: `invert(p).image(p.image(i)) == i`.
    pub fn invert(&self) -> TruthPermutation {
        let mut map = vec![0u32; self.map.len()];
        for (input, &output) in self.map.iter().enumerate() {
            map[output as usize] = input as u32;
        }
        TruthPermutation { width: self.width, map }
    }

    /// Apply `self` first, then `second`.
    pub fn compose(&self, second: &TruthPermutation) -> Result<TruthPermutation, BitcoreError> {
        if self.width != second.width {
            return Err(BitcoreError::WidthMismatch(self.width, second.width));
        }
        let map = self.map.iter().map(|&mid| second.map[mid as usize]).collect();
        Ok(TruthPermutation { width: self.width, map })
    }
}
