//! Words, restricted growth functions, and set partitions of `[n]`.
//!
//! A word is a finite sequence of positive integers. A restricted growth
//! function (RGF) additionally starts with 1 and never jumps more than one
//! above its running maximum, which makes RGFs of length `n` the canonical
//! encodings of set partitions of `{1, ..., n}` in standard form.
//!
//! Text form: a plain digit string while every letter is at most 9 (so `12311`
//! reads as in the literature), and dot-separated integers (`1.2.3.10`)
//! otherwise. The machine form is always an integer array.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default ceiling for exhaustive generation. `Bell(15) ~ 1.38e9`, so anything
/// above this must be opted into explicitly by the caller.
pub const DEFAULT_MAX_N: usize = 15;

/// A finite sequence of positive integers. The empty word is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    /// Builds a word, rejecting non-positive letters.
    pub fn new(letters: Vec<usize>) -> Result<Word> {
        if letters.contains(&0) {
            return Err(Error::Invalid("word letters must be positive".into()));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// True iff the word satisfies the restricted-growth conditions. The
    /// empty word qualifies by convention.
    pub fn is_rgf(&self) -> bool {
        let mut max = 0usize;
        for (i, &x) in self.letters.iter().enumerate() {
            if i == 0 && x != 1 {
                return false;
            }
            if x > max + 1 {
                return false;
            }
            max = max.max(x);
        }
        true
    }

    /// Order-isomorphic relabeling onto `1..k`: all copies of the smallest
    /// letter become 1, the next smallest become 2, and so on. Idempotent.
    pub fn standardize(&self) -> Word {
        let mut values: Vec<usize> = self.letters.clone();
        values.sort_unstable();
        values.dedup();
        let letters = self
            .letters
            .iter()
            .map(|x| values.binary_search(x).unwrap() + 1)
            .collect();
        Word { letters }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!(self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_letter() <= 9 {
            for &x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<usize> = if s.contains('.') {
            s.split('.')
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Invalid(format!("bad letter {p:?} in word {s:?}")))
                })
                .collect::<Result<_>>()?
        } else if s.chars().all(|c| ('1'..='9').contains(&c)) {
            s.chars().map(|c| c as usize - '0' as usize).collect()
        } else {
            // A single letter of 10 or more has no dots to show; any other
            // string reaching this arm is malformed and rejected by Word::new.
            vec![s
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad word literal {s:?}")))?]
        };
        Word::new(letters)
    }
}

/// A word satisfying the restricted-growth conditions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgf(Word);

impl Rgf {
    pub fn new(word: Word) -> Result<Rgf> {
        if word.is_rgf() {
            Ok(Rgf(word))
        } else {
            Err(Error::NotRgf(word.to_string()))
        }
    }

    pub fn from_letters(letters: Vec<usize>) -> Result<Rgf> {
        Rgf::new(Word::new(letters)?)
    }

    pub fn empty() -> Rgf {
        Rgf(Word::empty())
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// 1-indexed positions of the left-to-right maxima, which for an RGF are
    /// exactly the first occurrences of each value.
    pub fn left_to_right_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0usize;
        for (i, &x) in self.letters().iter().enumerate() {
            if x > max {
                out.push(i + 1);
                max = x;
            }
        }
        out
    }

    /// Length of the longest prefix of the form `1 2 ... m`.
    pub fn initial_run_len(&self) -> usize {
        let mut m = 0;
        for (i, &x) in self.letters().iter().enumerate() {
            if x == i + 1 {
                m = i + 1;
            } else {
                break;
            }
        }
        m
    }
}

impl std::ops::Deref for Rgf {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rgf({})", self.0)
    }
}

impl FromStr for Rgf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rgf> {
        Rgf::new(s.parse()?)
    }
}

/// A set partition of `{1, ..., n}` kept in standard form: elements ascending
/// within each block, blocks ordered by their minima.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition of `[n]` where `n` is the total number of elements;
    /// the blocks are sorted into standard form and must cover `1..=n` exactly.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::Invalid(format!(
                        "blocks must partition 1..={n} exactly"
                    )));
                }
                seen[x] = true;
            }
        }
        Ok(SetPartition { n, blocks })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The RGF `w` with `w_i = j` exactly when element `i` lies in block `j`.
    pub fn to_rgf(&self) -> Rgf {
        let mut letters = vec![0usize; self.n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &x in block {
                letters[x - 1] = j + 1;
            }
        }
        Rgf::from_letters(letters).expect("standard form always yields an RGF")
    }

    /// Inverse of [`SetPartition::to_rgf`].
    pub fn from_rgf(w: &Rgf) -> SetPartition {
        let k = w.max_letter();
        let mut blocks = vec![Vec::new(); k];
        for (i, &x) in w.letters().iter().enumerate() {
            blocks[x - 1].push(i + 1);
        }
        SetPartition { n: w.len(), blocks }
    }

    /// Restriction to a subset of the ground set, relabeled order-isomorphically
    /// onto `1..|subset|` (the standardized subpartition).
    pub fn restrict_standardized(&self, subset: &[usize]) -> SetPartition {
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        let rank = |x: usize| sorted.binary_search(&x).unwrap() + 1;
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|x| sorted.binary_search(x).is_ok())
                    .map(|&x| rank(x))
                    .collect::<Vec<usize>>()
            })
            .filter(|b: &Vec<usize>| !b.is_empty())
            .collect();
        SetPartition::new(blocks).expect("restriction of a valid partition is valid")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!(self.blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n <= 9;
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if compact {
                    b.iter().map(|x| x.to_string()).collect::<String>()
                } else {
                    b.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        write!(f, "{}", rendered.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetPartition> {
        if s.is_empty() {
            return SetPartition::new(Vec::new());
        }
        let blocks: Vec<Vec<usize>> = s
            .split('/')
            .map(|b| {
                if b.contains(',') {
                    b.split(',')
                        .map(|p| {
                            p.parse::<usize>()
                                .map_err(|_| Error::Invalid(format!("bad element {p:?}")))
                        })
                        .collect::<Result<Vec<usize>>>()
                } else {
                    b.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Invalid(format!("bad character {c:?}")))
                        })
                        .collect::<Result<Vec<usize>>>()
                }
            })
            .collect::<Result<_>>()?;
        SetPartition::new(blocks)
    }
}

/// Lexicographic stream of every RGF of length `n`, using the default ceiling.
pub fn enumerate_rgfs(n: usize) -> Result<RgfIter> {
    enumerate_rgfs_with_limit(n, DEFAULT_MAX_N)
}

/// As [`enumerate_rgfs`] with an explicit ceiling.
pub fn enumerate_rgfs_with_limit(n: usize, limit: usize) -> Result<RgfIter> {
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    Ok(RgfIter {
        n,
        word: Vec::new(),
        maxes: Vec::new(),
        started: false,
        done: false,
    })
}

/// Iterator over `R_n` in strictly increasing lexicographic order.
///
/// Generation works by successor: start at `1^n` and repeatedly bump the
/// rightmost letter that sits below `1 + max(prefix)`, resetting the suffix
/// to ones.
pub struct RgfIter {
    n: usize,
    word: Vec<usize>,
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for RgfIter {
    type Item = Rgf;

    fn next(&mut self) -> Option<Rgf> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.word = vec![1; self.n];
            self.maxes = vec![1; self.n];
            if self.n == 0 {
                self.done = true;
                return Some(Rgf::empty());
            }
            return Some(Rgf::from_letters(self.word.clone()).unwrap());
        }
        // Find the rightmost position that can still grow; position 0 is
        // pinned at 1.
        let mut i = self.n;
        loop {
            if i <= 1 {
                self.done = true;
                return None;
            }
            i -= 1;
            let prefix_max = self.maxes[i - 1];
            if self.word[i] <= prefix_max {
                self.word[i] += 1;
                self.maxes[i] = prefix_max.max(self.word[i]);
                for j in i + 1..self.n {
                    self.word[j] = 1;
                    self.maxes[j] = self.maxes[j - 1];
                }
                return Some(Rgf::from_letters(self.word.clone()).unwrap());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rgf_recognition() {
        assert!("11213224".parse::<Word>().unwrap().is_rgf());
        assert!(!"11214322".parse::<Word>().unwrap().is_rgf());
        assert!(Word::empty().is_rgf());
        assert!(!"211".parse::<Word>().unwrap().is_rgf());
    }

    #[test]
    fn standardize_examples() {
        let w: Word = "245".parse().unwrap();
        assert_eq!(w.standardize().to_string(), "123");
        let w: Word = "131".parse().unwrap();
        assert_eq!(w.standardize().to_string(), "121");
        let w: Word = "111".parse().unwrap();
        assert_eq!(w.standardize().to_string(), "111");
    }

    #[test]
    fn partition_rgf_round_trip_examples() {
        let sigma: SetPartition = "145/2/3".parse().unwrap();
        assert_eq!(sigma.to_rgf().to_string(), "12311");
        let sigma: SetPartition = "1/23".parse().unwrap();
        assert_eq!(sigma.to_rgf().to_string(), "122");

        let w: Rgf = "12311".parse().unwrap();
        assert_eq!(SetPartition::from_rgf(&w).to_string(), "145/2/3");
        let w: Rgf = "122".parse().unwrap();
        assert_eq!(SetPartition::from_rgf(&w).to_string(), "1/23");

        // All singletons <-> the identity labeling.
        let singles = SetPartition::new(vec![vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(singles.to_rgf().to_string(), "1234");
        // A single block <-> the all-ones word.
        let ones: Rgf = "11111".parse().unwrap();
        assert_eq!(SetPartition::from_rgf(&ones).blocks().len(), 1);
    }

    #[test]
    fn enumeration_order_and_counts() {
        let words: Vec<String> = enumerate_rgfs(3).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(words, ["111", "112", "121", "122", "123"]);
        assert_eq!(enumerate_rgfs(4).unwrap().count(), 15);
        let empties: Vec<Rgf> = enumerate_rgfs(0).unwrap().collect();
        assert_eq!(empties, [Rgf::empty()]);
    }

    #[test]
    fn enumeration_ceiling() {
        assert!(matches!(
            enumerate_rgfs(20),
            Err(Error::ResourceLimit { n: 20, limit: 15 })
        ));
        assert!(enumerate_rgfs_with_limit(16, 16).is_ok());
    }

    #[test]
    fn left_to_right_maxima_examples() {
        let w: Rgf = "12311".parse().unwrap();
        assert_eq!(w.left_to_right_maxima(), [1, 2, 3]);
        let w: Rgf = "11111".parse().unwrap();
        assert_eq!(w.left_to_right_maxima(), [1]);
        // First occurrences of 1..8 in the word 1234435631786.
        let w: Rgf = "1234435631786".parse().unwrap();
        assert_eq!(w.left_to_right_maxima(), [1, 2, 3, 4, 7, 8, 11, 12]);
    }

    #[test]
    fn dotted_text_form() {
        let w = Word::new((1..=11).collect()).unwrap();
        assert_eq!(w.to_string(), "1.2.3.4.5.6.7.8.9.10.11");
        let back: Word = w.to_string().parse().unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn initial_run() {
        let w: Rgf = "123456633211".parse().unwrap();
        assert_eq!(w.initial_run_len(), 6);
        let w: Rgf = "11".parse().unwrap();
        assert_eq!(w.initial_run_len(), 1);
        assert_eq!(Rgf::empty().initial_run_len(), 0);
    }
}
