//! Backtracking enumerators for fillings of a fixed shape.

use std::ops::ControlFlow;

use crate::shape::Shape;
use crate::tableau::{SemistandardTableau, StandardTableau};
use crate::word::{Alphabet, Letter};

/// All standard tableaux of the given shape.
pub fn standard_tableaux(shape: &Shape) -> Vec<StandardTableau> {
    fn go(shape: &Shape, next: Letter, rows: &mut Vec<Vec<Letter>>, out: &mut Vec<StandardTableau>) {
        if next as usize > shape.size() {
            out.push(StandardTableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..shape.num_rows() {
            let len = rows[r].len();
            let fits = len < shape.row(r) && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                go(shape, next + 1, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    go(shape, 1, &mut rows, &mut out);
    out
}

/// Visits every semistandard filling of `shape` with entries in the alphabet,
/// in lexicographic order of the row-major reading. The visitor may stop the
/// walk early.
///
/// Each cell is bounded below by its left and upper neighbours and above by
/// the number of cells still to come in its column, so every partial filling
/// extends. The walk is an odometer: bump the last cell that is below its
/// bound and refill everything after it with the least admissible values.
pub fn for_each_semistandard<F>(shape: &Shape, alphabet: Alphabet, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vec<Letter>]) -> ControlFlow<()>,
{
    let k = alphabet.size();
    if shape.num_rows() > k as usize {
        return ControlFlow::Continue(());
    }
    let column_heights: Vec<usize> = (0..shape.row(0))
        .map(|c| shape.rows().iter().filter(|&&len| len > c).count())
        .collect();
    let cells: Vec<(usize, usize)> = shape
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<Letter>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
    let hi = |r: usize, c: usize| k - (column_heights[c] - 1 - r) as Letter;
    let fill_from = |rows: &mut Vec<Vec<Letter>>, start: usize| {
        for &(r, c) in &cells[start..] {
            let left = if c > 0 { rows[r][c - 1] } else { 1 };
            let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            rows[r][c] = left.max(above);
        }
    };

    fill_from(&mut rows, 0);
    loop {
        visit(&rows)?;
        let bumped = cells.iter().rposition(|&(r, c)| rows[r][c] < hi(r, c));
        let Some(j) = bumped else {
            return ControlFlow::Continue(());
        };
        let (r, c) = cells[j];
        rows[r][c] += 1;
        fill_from(&mut rows, j + 1);
    }
}

/// All semistandard fillings of `shape` over the alphabet.
pub fn semistandard_tableaux(shape: &Shape, alphabet: Alphabet) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    let _ = for_each_semistandard(shape, alphabet, |rows| {
        out.push(SemistandardTableau::from_rows_unchecked(rows.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{validate, TableauKind};

    fn shape(rows: &[usize]) -> Shape {
        Shape::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn standard_counts_match_hook_lengths() {
        // f^(2,1)=2, f^(3,2)=5, f^(3,2,1)=16, f^(4,4)=14
        for (rows, expected) in [
            (&[2, 1][..], 2),
            (&[3, 2], 5),
            (&[3, 2, 1], 16),
            (&[4, 4], 14),
            (&[], 1),
        ] {
            let all = standard_tableaux(&shape(rows));
            assert_eq!(all.len(), expected, "shape {rows:?}");
            assert!(all
                .iter()
                .all(|t| validate(t.as_tableau(), TableauKind::Standard).is_ok()));
        }
    }

    #[test]
    fn semistandard_counts() {
        let k2 = Alphabet::new(2).unwrap();
        let k3 = Alphabet::new(3).unwrap();
        // s_(2,1)(1,1) = 2, s_(2,1)(1,1,1) = 8, s_(2,2)(1,1,1) = 6, s_(1,1,1)(1,1) = 0
        assert_eq!(semistandard_tableaux(&shape(&[2, 1]), k2).len(), 2);
        assert_eq!(semistandard_tableaux(&shape(&[2, 1]), k3).len(), 8);
        assert_eq!(semistandard_tableaux(&shape(&[2, 2]), k3).len(), 6);
        assert_eq!(semistandard_tableaux(&shape(&[1, 1, 1]), k2).len(), 0);
        assert_eq!(semistandard_tableaux(&Shape::empty(), k2).len(), 1);
        for t in semistandard_tableaux(&shape(&[3, 2, 1]), k3) {
            assert!(t.check_alphabet(k3).is_ok());
        }
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        let flow = for_each_semistandard(&shape(&[3, 1]), Alphabet::new(3).unwrap(), |_| {
            seen += 1;
            if seen == 4 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(flow, ControlFlow::Break(()));
        assert_eq!(seen, 4);
    }

    #[test]
    fn long_shapes_do_not_recurse() {
        // s_(n-m, m)(1,1) = n - 2m + 1
        let mut count = 0;
        let _ = for_each_semistandard(&shape(&[30_000, 29_000]), Alphabet::BINARY, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1_001);
    }
}
