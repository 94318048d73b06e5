//! Permutations of `{1, ..., r}` in one-line notation.

use std::fmt;

/// A permutation stored 0-based; `images[i] = w(i+1) - 1`.
/// Products compose as functions: `(u * w)(i) = u(w(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r as u8).collect(),
        }
    }

    /// From a 1-based one-line form; `None` if not a bijection.
    pub fn from_one_line(w: &[usize]) -> Option<Self> {
        let r = w.len();
        let mut seen = vec![false; r];
        for &x in w {
            if x == 0 || x > r || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation {
            images: w.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)`, 1-based `i`.
    pub fn simple(r: usize, i: usize) -> Self {
        let mut p = Self::identity(r);
        p.images.swap(i - 1, i);
        p
    }

    pub fn r(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn images0(&self) -> &[u8] {
        &self.images
    }

    pub fn from_images0(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub fn compose(&self, w: &Self) -> Self {
        Permutation {
            images: w.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.r()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `w * s_i`: swaps the values in positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// True when `l(w s_i) < l(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`, found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.r()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.mul_simple(i);
        }
        word.reverse();
        word
    }

    /// All permutations of `r` letters in lexicographic order of one-line forms.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..r as u8).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..r.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
