use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted set of distinct integer grid displacements `k_1 < … < k_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct OffsetSet(Vec<i64>);

impl OffsetSet {
    /// Sorts the offsets; rejects empty input and repeated values.
    pub fn new(mut offsets: Vec<i64>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::EmptyOffsets);
        }
        offsets.sort_unstable();
        if let Some(w) = offsets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateOffset(w[0]));
        }
        Ok(Self(offsets))
    }

    /// `{−r, …, span − r}`: `span + 1` consecutive offsets with `r` of them
    /// strictly left of the origin. Panics if `r > span`.
    pub fn contiguous(r: u32, span: u32) -> Self {
        assert!(r <= span, "contiguous stencil needs r <= span (r={r}, span={span})");
        let r = i64::from(r);
        Self((-r..=i64::from(span) - r).collect())
    }

    /// `{−half, …, half}`
    pub fn symmetric(half: u32) -> Self {
        Self::contiguous(half, 2 * half)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn position(&self, offset: i64) -> Option<usize> {
        self.0.binary_search(&offset).ok()
    }

    pub fn contains(&self, offset: i64) -> bool {
        self.position(offset).is_some()
    }

    /// Largest `|k_i|`.
    pub fn reach(&self) -> u64 {
        self.0.iter().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    /// `Some(r)` when the set is `{−r, …, len − 1 − r}` with `0 ≤ r < len`.
    pub fn contiguous_r(&self) -> Option<u32> {
        let first = self.0[0];
        let consecutive = self.0.windows(2).all(|w| w[1] == w[0] + 1);
        let r = -first;
        (consecutive && r >= 0 && r < self.len() as i64).then_some(r as u32)
    }

    /// The set `{−k_i}`.
    pub fn mirrored(&self) -> Self {
        Self(self.0.iter().rev().map(|k| -k).collect())
    }
}

impl TryFrom<Vec<i64>> for OffsetSet {
    type Error = Error;
    fn try_from(offsets: Vec<i64>) -> Result<Self> {
        Self::new(offsets)
    }
}

impl From<OffsetSet> for Vec<i64> {
    fn from(set: OffsetSet) -> Self {
        set.0
    }
}

impl fmt::Display for OffsetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_validates() {
        let set = OffsetSet::new(vec![1, -2, 0, -1]).unwrap();
        assert_eq!(set.as_slice(), &[-2, -1, 0, 1]);
        assert_eq!(OffsetSet::new(vec![0, 1, 0]), Err(Error::DuplicateOffset(0)));
        assert_eq!(OffsetSet::new(vec![]), Err(Error::EmptyOffsets));
    }

    #[test]
    fn contiguous_sets() {
        assert_eq!(OffsetSet::contiguous(1, 2).as_slice(), &[-1, 0, 1]);
        assert_eq!(OffsetSet::contiguous(0, 2).as_slice(), &[0, 1, 2]);
        assert_eq!(OffsetSet::contiguous(3, 3).as_slice(), &[-3, -2, -1, 0]);
        assert_eq!(OffsetSet::symmetric(2).as_slice(), &[-2, -1, 0, 1, 2]);
        assert_eq!(OffsetSet::contiguous(2, 3).contiguous_r(), Some(2));
        assert_eq!(OffsetSet::new(vec![-2, -1, 1, 2]).unwrap().contiguous_r(), None);
        assert_eq!(OffsetSet::new(vec![1, 2]).unwrap().contiguous_r(), None);
    }

    #[test]
    fn reach_and_mirror() {
        let set = OffsetSet::new(vec![-3, 0, 1]).unwrap();
        assert_eq!(set.reach(), 3);
        assert_eq!(set.mirrored().as_slice(), &[-1, 0, 3]);
        assert_eq!(set.to_string(), "{-3,0,1}");
    }
}
