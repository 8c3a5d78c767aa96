use super::codebook::Codebook;
use crate::error::{Error, Result};
use crate::io::{Persist, Reader, Writer};
use crate::primitives::{SpaceBits, VariableCellArray};

/// Codeword of every micro tree, in micro-tree order, in one variable-cell array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeArray {
    cells: VariableCellArray,
}

impl TypeArray {
    pub fn new(book: &Codebook, ids: &[usize]) -> Result<Self> {
        let cells = VariableCellArray::new(ids.iter().map(|&id| book.codeword(id)), None)?;
        Ok(Self { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Type id of micro tree `k` (0-based).
    #[inline]
    pub fn type_id(&self, book: &Codebook, k: usize) -> usize {
        let (len, bits) = self.cells.cell_key(k);
        book.decode(len, bits).expect("type array holds only codebook words")
    }

    pub fn total_payload_bits(&self) -> usize {
        self.cells.payload_bits()
    }

    pub fn space(&self) -> SpaceBits {
        self.cells.space()
    }

    pub(crate) fn check(&self, book: &Codebook) -> Result<()> {
        for k in 0..self.len() {
            let (len, bits) = self.cells.cell_key(k);
            if len > 128 || book.decode(len, bits).is_none() {
                return Err(Error::Format(format!("micro tree {k} has no codeword in the codebook")));
            }
        }
        Ok(())
    }
}

impl Persist for TypeArray {
    fn write_to(&self, w: &mut Writer) {
        self.cells.write_to(w);
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        Ok(Self {
            cells: VariableCellArray::read_from(r)?,
        })
    }
}
