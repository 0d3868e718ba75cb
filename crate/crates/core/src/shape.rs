use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer partition `λ_1 ≥ λ_2 ≥ ... ≥ λ_r > 0`, i.e. a vertex of the
/// Young graph. Serialized as a bare array of row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    /// Builds a shape, or returns `None` if the rows are not a partition.
    pub fn new(rows: Vec<usize>) -> Option<Self> {
        let positive = rows.iter().all(|&r| r > 0);
        let decreasing = rows.windows(2).all(|w| w[0] >= w[1]);
        (positive && decreasing).then_some(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Shape) -> bool {
        other.num_rows() <= self.num_rows() && other.0.iter().enumerate().all(|(i, &r)| r <= self.row(i))
    }

    /// Adds one cell at the end of row `i` (0-based) if the result is a shape.
    pub fn grow(&self, i: usize) -> Option<Shape> {
        if i > self.num_rows() || (i > 0 && self.row(i - 1) == self.row(i)) {
            return None;
        }
        let mut rows = self.0.clone();
        if i == rows.len() {
            rows.push(1);
        } else {
            rows[i] += 1;
        }
        Some(Shape(rows))
    }

    /// Row lengths padded with zeros to `k` entries: the point in the Weyl chamber.
    pub fn padded(&self, k: usize) -> Vec<usize> {
        (0..k.max(self.num_rows())).map(|i| self.row(i)).collect()
    }

    /// Every shape of the given size, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Shape> {
        fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if remaining == 0 {
                out.push(Shape(current.clone()));
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = String;

    fn try_from(rows: Vec<usize>) -> Result<Self, String> {
        Shape::new(rows.clone())
            .ok_or_else(|| format!("{rows:?} is not a weakly decreasing sequence of positive integers"))
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_partitions() {
        assert!(Shape::new(vec![1, 2]).is_none());
        assert!(Shape::new(vec![2, 0]).is_none());
        assert!(Shape::new(vec![]).is_some());
    }

    #[test]
    fn grow_respects_partition_rule() {
        let s = Shape::new(vec![2, 2]).unwrap();
        assert_eq!(s.grow(0).unwrap().rows(), &[3, 2]);
        assert!(s.grow(1).is_none());
        assert_eq!(s.grow(2).unwrap().rows(), &[2, 2, 1]);
        assert!(s.grow(3).is_none());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Shape::all_of_size(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn json_is_a_bare_array() {
        let s = Shape::new(vec![2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Shape>("[1,2]").is_err());
        assert_eq!(s.to_string(), "(2,1)");
        assert_eq!(s.padded(3), vec![2, 1, 0]);
    }
}
