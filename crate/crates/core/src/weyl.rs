//! Symmetric group combinatorics for type A: words in the simple
//! transpositions, length, Bruhat order, reduced expressions.
//!
//! Permutations are stored in one-line notation over {1..n}; the simple
//! generators are s_i = (i, i+1), indexed 1-based to match the usual
//! labelling s_1, ..., s_{n-1}.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid permutation data")]
    InvalidPermutation,
    #[error("cannot parse Weyl element from {0:?}")]
    Parse(String),
}

/// An element of S_n in one-line notation: `perm[i]` is the image of i+1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        WeylElement { perm: (1..=rank).collect() }
    }

    pub fn from_one_line(perm: Vec<usize>) -> Result<Self, WeylError> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &x in &perm {
            if x == 0 || x > n || seen[x] {
                return Err(WeylError::InvalidPermutation);
            }
            seen[x] = true;
        }
        Ok(WeylElement { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Image of the letter i (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    pub fn simple_reflection(rank: usize, i: usize) -> Result<Self, WeylError> {
        if i == 0 || i + 1 > rank {
            return Err(WeylError::IndexOutOfRange { index: i, rank });
        }
        let mut perm: Vec<usize> = (1..=rank).collect();
        perm.swap(i - 1, i);
        Ok(WeylElement { perm })
    }

    /// Product of s_{i1} ... s_{ik} read left to right.
    pub fn from_word(rank: usize, word: &[usize]) -> Result<Self, WeylError> {
        if rank < 1 {
            return Err(WeylError::InvalidPermutation);
        }
        let mut w = WeylElement::identity(rank);
        for &i in word {
            if i == 0 || i + 1 > rank {
                return Err(WeylError::IndexOutOfRange { index: i, rank });
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// Group product: (self * other)(x) = self(other(x)).
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let perm = (1..=self.rank()).map(|x| self.apply(other.apply(x))).collect();
        WeylElement { perm }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        for i in 1..=n {
            perm[self.apply(i) - 1] = i;
        }
        WeylElement { perm }
    }

    /// w * s_i; swaps the entries at positions i, i+1.
    pub fn mul_simple_right(&self, i: usize) -> WeylElement {
        let mut perm = self.perm.clone();
        perm.swap(i - 1, i);
        WeylElement { perm }
    }

    /// s_i * w; swaps the values i, i+1.
    pub fn mul_simple_left(&self, i: usize) -> WeylElement {
        let perm = self
            .perm
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        WeylElement { perm }
    }

    /// Inversion count; equals the minimal word length.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn longest_element(rank: usize) -> WeylElement {
        WeylElement { perm: (1..=rank).rev().collect() }
    }

    /// Right descents: i with w(i) > w(i+1), i.e. l(w s_i) < l(w).
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.rank()).filter(|&i| self.perm[i - 1] > self.perm[i]).collect()
    }

    /// Bruhat order via the dominance criterion: x <= y iff for all i, j
    /// the count #{k <= i : x(k) >= j} is at most the same count for y.
    pub fn bruhat_leq(&self, other: &WeylElement) -> Result<bool, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch(self.rank(), other.rank()));
        }
        let n = self.rank();
        let counts = |w: &WeylElement| -> Vec<Vec<usize>> {
            let mut c = vec![vec![0usize; n + 2]; n + 1];
            for i in 1..=n {
                for j in 1..=n {
                    c[i][j] = c[i - 1][j] + usize::from(w.apply(i) >= j);
                }
            }
            c
        };
        let cx = counts(self);
        let cy = counts(other);
        for i in 1..=n {
            for j in 1..=n {
                if cx[i][j] > cy[i][j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All reduced words, by peeling right descents.
    pub fn reduced_words(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        if self.is_identity() {
            out.insert(Vec::new());
            return out;
        }
        for i in self.right_descents() {
            let shorter = self.mul_simple_right(i);
            for mut word in shorter.reduced_words() {
                word.push(i);
                out.insert(word);
            }
        }
        out
    }

    /// All of S_n, ordered by length then lexicographic one-line notation.
    /// This enumeration is the fixed basis order for Grothendieck-group
    /// matrices, so it must stay byte-for-byte reproducible.
    pub fn enumerate(rank: usize) -> Vec<WeylElement> {
        let mut all = Vec::new();
        let mut perm: Vec<usize> = (1..=rank).collect();
        loop {
            all.push(WeylElement { perm: perm.clone() });
            if !next_permutation(&mut perm) {
                break;
            }
        }
        all.sort_by(|a, b| a.length().cmp(&b.length()).then(a.perm.cmp(&b.perm)));
        all
    }

    /// "[3,1,2]" style one-line form.
    pub fn one_line(&self) -> String {
        let inner: Vec<String> = self.perm.iter().map(|x| x.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    /// "s1 s2 s1" style word form (lexicographically smallest reduced word).
    pub fn word_string(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        let word = self.reduced_words().into_iter().next().unwrap();
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }

    /// Parse "s1 s2 s1", "e", or one-line "[2,1,3]".
    pub fn parse(rank: usize, text: &str) -> Result<Self, WeylError> {
        let t = text.trim();
        if t == "e" || t.is_empty() {
            return Ok(WeylElement::identity(rank));
        }
        if t.starts_with('[') && t.ends_with(']') {
            let inner = &t[1..t.len() - 1];
            let perm: Result<Vec<usize>, _> =
                inner.split(',').map(|x| x.trim().parse::<usize>()).collect();
            let perm = perm.map_err(|_| WeylError::Parse(text.to_string()))?;
            if perm.len() != rank {
                return Err(WeylError::Parse(text.to_string()));
            }
            return WeylElement::from_one_line(perm);
        }
        let mut word = Vec::new();
        for tok in t.split_whitespace() {
            let idx = tok
                .strip_prefix('s')
                .and_then(|x| x.parse::<usize>().ok())
                .ok_or_else(|| WeylError::Parse(text.to_string()))?;
            word.push(idx);
        }
        WeylElement::from_word(rank, &word)
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Subword characterization of Bruhat order, used as the test oracle:
/// x <= y iff a fixed reduced word of y contains some reduced word of x
/// as a (not necessarily contiguous) subword.
pub fn bruhat_leq_by_subwords(x: &WeylElement, y: &WeylElement) -> bool {
    let yword = match y.reduced_words().into_iter().next() {
        Some(w) => w,
        None => return x.is_identity(),
    };
    let lx = x.length();
    if lx > yword.len() {
        return false;
    }
    // Enumerate subwords of the fixed reduced word of y.
    let m = yword.len();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != lx {
            continue;
        }
        let sub: Vec<usize> =
            (0..m).filter(|k| mask & (1 << k) != 0).map(|k| yword[k]).collect();
        if &WeylElement::from_word(x.rank(), &sub).unwrap() == x {
            return true;
        }
    }
    false
}
