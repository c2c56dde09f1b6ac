//! Permutations with cycle decompositions and the absolute order.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored 0-based: `images[i] = π(i+1) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidInput(format!(
                    "image sequence {images:?} is not a permutation"
                )));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based application.
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// Multiplies on the right by the transposition `(i j)` (0-based points).
    pub fn times_transposition(&self, i: usize, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i, j);
        Self { images }
    }

    /// Cycle decomposition, each cycle rotated so its minimum comes first,
    /// cycles sorted by minimum; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Absolute length: `n` minus the number of cycles.
    pub fn absolute_length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// Index of this permutation in the lexicographic enumeration of all
    /// image sequences (the Lehmer code rank).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut factorials = Vec::with_capacity(n.max(1));
        factorials.push(1usize);
        for i in 1..n {
            factorials.push(factorials[i - 1] * i);
        }
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank += smaller_later * factorials[n - 1 - i];
        }
        rank
    }

    /// Cycle notation, 1-based, fixed points included: `(1 3)(2)(4)`.
    pub fn cycle_notation(&self) -> String {
        if self.n() == 0 {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in self.cycles() {
            out.push('(');
            for (i, &p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Absolute order: `π ≤_T σ` iff `l_T(σ) = l_T(π) + l_T(π⁻¹σ)`.
pub fn absolute_leq(pi: &Permutation, sigma: &Permutation) -> Result<bool> {
    if pi.n() != sigma.n() {
        return Err(Error::SizeMismatch {
            left: pi.n(),
            right: sigma.n(),
        });
    }
    let quotient = pi.inverse().compose(sigma)?;
    Ok(sigma.absolute_length() == pi.absolute_length() + quotient.absolute_length())
}

/// Advances `images` to the lexicographically next permutation in place;
/// returns false when `images` was already the last one.
pub(crate) fn next_permutation(images: &mut [usize]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn cycle_decomposition() {
        // (1 4 2 3): 1->4, 4->2, 2->3, 3->1; 0-based images [3, 2, 0, 1].
        let p = perm(&[3, 2, 0, 1]);
        assert_eq!(p.cycles(), vec![vec![0, 3, 1, 2]]);
        assert_eq!(p.cycle_notation(), "(1 4 2 3)");
        assert_eq!(p.cycle_count(), 1);
        assert_eq!(p.absolute_length(), 3);

        let id = Permutation::identity(4);
        assert_eq!(id.cycle_notation(), "(1)(2)(3)(4)");
        assert_eq!(id.absolute_length(), 0);
    }

    #[test]
    fn compose_and_inverse() {
        let p = perm(&[3, 2, 0, 1]);
        let id = p.compose(&p.inverse()).unwrap();
        assert_eq!(id, Permutation::identity(4));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn lex_rank_matches_enumeration_order() {
        let mut images: Vec<usize> = (0..4).collect();
        let mut expected = 0usize;
        loop {
            assert_eq!(perm(&images).lex_rank(), expected);
            expected += 1;
            if !next_permutation(&mut images) {
                break;
            }
        }
        assert_eq!(expected, 24);
    }

    #[test]
    fn absolute_order_basics() {
        let id = Permutation::identity(3);
        let three_cycle = perm(&[1, 2, 0]); // (1 2 3)
        let swap12 = perm(&[1, 0, 2]); // (1 2)(3)

        // Identity below everything; reflexivity.
        assert!(absolute_leq(&id, &three_cycle).unwrap());
        assert!(absolute_leq(&three_cycle, &three_cycle).unwrap());
        // (1 2) ≤_T (1 2 3): lengths 1 + 1 = 2.
        assert!(absolute_leq(&swap12, &three_cycle).unwrap());
        // The converse fails.
        assert!(!absolute_leq(&three_cycle, &swap12).unwrap());
    }

    #[test]
    fn absolute_order_is_a_partial_order_up_to_s5() {
        for points in 2..=5usize {
            let mut perms = Vec::new();
            let mut images: Vec<usize> = (0..points).collect();
            loop {
                perms.push(perm(&images));
                if !next_permutation(&mut images) {
                    break;
                }
            }
            let n = perms.len();
            let mut leq = vec![vec![false; n]; n];
            for a in 0..n {
                for b in 0..n {
                    leq[a][b] = absolute_leq(&perms[a], &perms[b]).unwrap();
                }
            }
            for a in 0..n {
                assert!(leq[a][a]);
                for b in 0..n {
                    if a != b && leq[a][b] {
                        assert!(!leq[b][a], "antisymmetry fails at {points}");
                    }
                    if !leq[a][b] {
                        continue;
                    }
                    for (c, &bc) in leq[b].iter().enumerate() {
                        if bc {
                            assert!(leq[a][c], "transitivity fails at {points}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn size_mismatch_is_reported() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            absolute_leq(&a, &b),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        ));
    }
}
