//! JSON matrix documents.
//!
//! ```json
//! {"ring": "H", "rows": 1, "cols": 2, "data": [[[0, 1, 0, 0], [1, 0, 0, 0]]]}
//! ```
//!
//! Reals are plain numbers, complex entries `[re, im]` and quaternions
//! `[w, x, y, z]`. The component order is fixed.

use serde::{Deserialize, Serialize};

use crate::algebra::{Quaternion, RingTag};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Entry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
    Quaternion([f64; 4]),
}

impl Entry {
    fn encode(ring: RingTag, q: Quaternion) -> Self {
        match ring {
            RingTag::R => Entry::Real(q.w),
            RingTag::C => Entry::Complex([q.w, q.x]),
            RingTag::H => Entry::Quaternion(q.to_array()),
        }
    }

    fn decode(self, ring: RingTag) -> Result<Quaternion> {
        match (ring, self) {
            (RingTag::R, Entry::Real(w)) => Ok(Quaternion::real(w)),
            (RingTag::C, Entry::Complex([w, x])) => Ok(Quaternion::new(w, x, 0.0, 0.0)),
            (RingTag::H, Entry::Quaternion(a)) => Ok(Quaternion::from_array(a)),
            (ring, e) => Err(Error::Parse(format!(
                "entry {e:?} does not match ring {ring}"
            ))),
        }
    }
}

impl From<&DenseMatrix> for MatrixDocument {
    fn from(m: &DenseMatrix) -> Self {
        let data = (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| Entry::encode(m.ring(), m[(r, c)]))
                    .collect()
            })
            .collect();
        Self {
            ring: m.ring().as_str().to_string(),
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }
}

impl From<DenseMatrix> for MatrixDocument {
    fn from(m: DenseMatrix) -> Self {
        Self::from(&m)
    }
}

impl TryFrom<MatrixDocument> for DenseMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDocument) -> Result<Self> {
        doc.to_matrix()
    }
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<DenseMatrix> {
        let ring = RingTag::parse(&self.ring).ok_or_else(|| {
            Error::Parse(format!("unknown ring `{}` (expected R, C or H)", self.ring))
        })?;
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Parse("matrix dimensions must be positive".into()));
        }
        if self.data.len() != self.rows || self.data.iter().any(|row| row.len() != self.cols) {
            return Err(Error::Parse(format!(
                "data does not have shape {}x{}",
                self.rows, self.cols
            )));
        }
        let entries = self
            .data
            .iter()
            .flatten()
            .map(|e| e.decode(ring))
            .collect::<Result<Vec<_>>>()?;
        DenseMatrix::from_entries(ring, self.rows, self.cols, entries)
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix documents always serialize")
    }
}

/// Parses a matrix from its JSON document.
pub fn parse_matrix(json: &str) -> Result<DenseMatrix> {
    MatrixDocument::parse(json)?.to_matrix()
}

/// Serializes a matrix to its JSON document.
pub fn matrix_to_json(m: &DenseMatrix) -> String {
    MatrixDocument::from(m).to_json()
}

impl Serialize for DenseMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDocument::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DenseMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixDocument::deserialize(d)?
            .to_matrix()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::random_gaussian;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_each_ring() {
        let r = parse_matrix(r#"{"ring":"R","rows":1,"cols":2,"data":[[1.5,-2]]}"#).unwrap();
        assert_eq!(r, DenseMatrix::from_real_rows(&[&[1.5, -2.0]]));
        let c = parse_matrix(r#"{"ring":"C","rows":1,"cols":1,"data":[[[0,1]]]}"#).unwrap();
        assert_eq!(c[(0, 0)], Quaternion::I);
        let h = parse_matrix(r#"{"ring":"H","rows":1,"cols":2,"data":[[[0,0,0,1],[1,0,0,0]]]}"#)
            .unwrap();
        assert_eq!(h[(0, 0)], Quaternion::K);
        assert_eq!(h[(0, 1)], Quaternion::ONE);
    }

    #[test]
    fn rejects_malformed_documents() {
        for bad in [
            r#"{"ring":"Q","rows":1,"cols":1,"data":[[1]]}"#,
            r#"{"ring":"R","rows":2,"cols":1,"data":[[1]]}"#,
            r#"{"ring":"R","rows":1,"cols":1,"data":[[[1,2]]]}"#,
            r#"{"ring":"C","rows":1,"cols":1,"data":[[1]]}"#,
            r#"{"ring":"H","rows":1,"cols":1,"data":[[[1,2]]]}"#,
            r#"{"ring":"R","rows":0,"cols":0,"data":[]}"#,
            r#"{"ring":"R","rows":1,"cols":1,"data":[[null]]}"#,
            "not json",
        ] {
            assert!(matches!(parse_matrix(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn serialized_form_is_stable() {
        let m = DenseMatrix::from_quaternion_rows(&[&[Quaternion::new(1.0, -0.5, 0.25, 2.0)]]);
        assert_eq!(
            matrix_to_json(&m),
            r#"{"ring":"H","rows":1,"cols":1,"data":[[[1.0,-0.5,0.25,2.0]]]}"#
        );
    }

    proptest! {
        #[test]
        fn documents_round_trip_bit_exactly(seed in any::<u64>(), ring_ix in 0usize..3, rows in 1usize..4, cols in 1usize..4) {
            let ring = [RingTag::R, RingTag::C, RingTag::H][ring_ix];
            let m = random_gaussian(ring, rows, cols, &mut ChaCha8Rng::seed_from_u64(seed)).scale(1e3);
            let json = matrix_to_json(&m);
            let back = parse_matrix(&json).unwrap();
            prop_assert_eq!(back.real_coords().iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                            m.real_coords().iter().map(|v| v.to_bits()).collect::<Vec<_>>());
            prop_assert_eq!(matrix_to_json(&back), json);
        }
    }
}
