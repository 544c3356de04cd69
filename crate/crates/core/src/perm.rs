//! Small permutation utilities shared by the canonical-form searches.

use crate::sign::Sign;

/// Number of pairs `i < j` with `seq[i] > seq[j]`.
pub(crate) fn inversions<T: Ord>(seq: &[T]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sign of the permutation that sorts `seq` (entries assumed distinct).
pub(crate) fn sorting_sign<T: Ord>(seq: &[T]) -> Sign {
    Sign::from_parity(inversions(seq))
}

/// Calls `f` with every permutation of `0..n`, in lexicographic order.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Enumerates the bijections that send each cell onto its own block of
/// consecutive new labels. Blocks follow the order of `cells`. `f` receives
/// `new_label[old_vertex]`.
pub(crate) fn for_each_cell_relabeling(
    cells: &[Vec<usize>],
    n: usize,
    mut f: impl FnMut(&[usize]),
) {
    let mut offsets = Vec::with_capacity(cells.len());
    let mut off = 0;
    for c in cells {
        offsets.push(off);
        off += c.len();
    }
    debug_assert_eq!(off, n);
    let mut perms: Vec<Vec<usize>> = cells.iter().map(|c| (0..c.len()).collect()).collect();
    let mut relabel = vec![0; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for (k, &v) in cell.iter().enumerate() {
                relabel[v] = offsets[ci] + perms[ci][k];
            }
        }
        f(&relabel);
        // odometer over the per-cell permutations
        let mut ci = 0;
        loop {
            if ci == cells.len() {
                return;
            }
            if next_permutation(&mut perms[ci]) {
                break;
            }
            perms[ci].sort_unstable();
            ci += 1;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_permutations() {
        let mut seen = 0;
        for_each_permutation(5, |_| seen += 1);
        assert_eq!(seen, 120);
        let mut seen = 0;
        for_each_permutation(0, |_| seen += 1);
        assert_eq!(seen, 1);
    }

    #[test]
    fn cell_relabelings_respect_blocks() {
        let cells = vec![vec![2], vec![0, 3, 1]];
        let mut seen = Vec::new();
        for_each_cell_relabeling(&cells, 4, |r| seen.push(r.to_vec()));
        assert_eq!(seen.len(), 6);
        for r in &seen {
            assert_eq!(r[2], 0);
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[0, 1, 2]), 0);
        assert_eq!(inversions(&[2, 1, 0]), 3);
        assert_eq!(sorting_sign(&[1, 0, 2]), Sign::Minus);
    }
}
