//! Exhaustive generation of every object of a family at a given size.
//!
//! Path families are produced by a lexicographic successor on the step word,
//! so a stream holds one word in memory and costs amortized O(length) per
//! item. Trees reuse the same machinery over the parenthesis alphabet.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::path::{
    DyckPath, DyckStep, LatticePath, MotzkinStep, MultipleDyckPath, Paren, Run, Step,
    TwoMotzkinStep,
};
use crate::tree::PlaneTree;

/// Can a path at height `h` with `r` steps left still close?
fn feasible<S: Step>(h: i64, r: usize) -> bool {
    let r = r as i64;
    h >= 0 && h <= r && (S::has_level() || (r - h) % 2 == 0)
}

/// All closed, nonnegative paths of a fixed length over `S`, in
/// lexicographic order of their encodings.
pub struct LatticePaths<S: Step> {
    len: usize,
    word: Vec<S>,
    /// `before[i]` is the height before step `i`.
    before: Vec<i64>,
    done: bool,
}

impl<S: Step> LatticePaths<S> {
    pub fn new(len: usize) -> Self {
        let mut it = LatticePaths {
            len,
            word: Vec::with_capacity(len),
            before: Vec::with_capacity(len),
            done: !feasible::<S>(0, len),
        };
        if !it.done {
            it.fill_from(0, 0);
        }
        it
    }

    /// Greedy smallest completion of positions `from..len` starting at `h`.
    fn fill_from(&mut self, from: usize, mut h: i64) {
        self.word.truncate(from);
        self.before.truncate(from);
        for i in from..self.len {
            let step = S::ALPHABET
                .iter()
                .copied()
                .find(|s| feasible::<S>(h + s.delta(), self.len - i - 1))
                .expect("a feasible state always has a feasible step");
            self.word.push(step);
            self.before.push(h);
            h += step.delta();
        }
    }

    fn advance(&mut self) {
        for i in (0..self.len).rev() {
            let h = self.before[i];
            let rest = self.len - i - 1;
            let current = self.word[i];
            let bigger = S::ALPHABET
                .iter()
                .copied()
                .filter(|&s| s > current)
                .find(|s| feasible::<S>(h + s.delta(), rest));
            if let Some(step) = bigger {
                self.word[i] = step;
                self.fill_from(i + 1, h + step.delta());
                return;
            }
        }
        self.done = true;
    }
}

impl<S: Step> Iterator for LatticePaths<S> {
    type Item = LatticePath<S>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = LatticePath::new_unchecked(self.word.clone());
        self.advance();
        Some(out)
    }
}

pub struct PlaneTrees {
    words: LatticePaths<Paren>,
}

impl Iterator for PlaneTrees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        self.words.next().map(|p| {
            let word = p.steps().iter().map(|&s| s == Paren::Open).collect();
            PlaneTree::from_word_unchecked(word)
        })
    }
}

/// Every plane tree with `n` edges, ordered by encoding (`(` before `)`).
pub fn plane_trees(n: usize) -> PlaneTrees {
    PlaneTrees {
        words: LatticePaths::new(2 * n),
    }
}

pub fn two_motzkin_paths(m: usize) -> LatticePaths<TwoMotzkinStep> {
    LatticePaths::new(m)
}

pub fn motzkin_paths(m: usize) -> LatticePaths<MotzkinStep> {
    LatticePaths::new(m)
}

pub fn dyck_paths(n: usize) -> LatticePaths<DyckStep> {
    LatticePaths::new(2 * n)
}

/// Multiple Dyck paths of semilength `n`: each Dyck path in order, then every
/// way of cutting its maximal runs into ordered compositions. Cuts are counted
/// in mixed radix with the last run varying fastest.
pub struct MultipleDyckPaths {
    dyck: LatticePaths<DyckStep>,
    /// Maximal runs of the current Dyck path.
    maximal: Vec<Run>,
    /// Cut mask per maximal run; bit `j` set cuts after unit step `j + 1`.
    cuts: Vec<u64>,
    exhausted: bool,
}

impl MultipleDyckPaths {
    fn load(&mut self, path: &DyckPath) {
        self.maximal.clear();
        for &s in path.steps() {
            match self.maximal.last_mut() {
                Some(run) if run.dir == s => run.len += 1,
                _ => self.maximal.push(Run { dir: s, len: 1 }),
            }
        }
        assert!(
            self.maximal.iter().all(|r| r.len <= 64),
            "runs longer than 64 steps are not supported"
        );
        self.cuts = vec![0; self.maximal.len()];
    }

    fn build(&self) -> MultipleDyckPath {
        let mut runs = Vec::new();
        for (run, &mask) in self.maximal.iter().zip(&self.cuts) {
            let mut len = 1;
            for j in 0..run.len - 1 {
                if mask >> j & 1 == 1 {
                    runs.push(Run { dir: run.dir, len });
                    len = 1;
                } else {
                    len += 1;
                }
            }
            runs.push(Run { dir: run.dir, len });
        }
        MultipleDyckPath::new_unchecked(runs)
    }

    /// Next cut pattern for the current Dyck path; false once all are used.
    fn bump(&mut self) -> bool {
        for (run, mask) in self.maximal.iter().zip(self.cuts.iter_mut()).rev() {
            let limit = 1u128 << (run.len - 1);
            if u128::from(*mask) + 1 < limit {
                *mask += 1;
                return true;
            }
            *mask = 0;
        }
        false
    }
}

impl Iterator for MultipleDyckPaths {
    type Item = MultipleDyckPath;

    fn next(&mut self) -> Option<MultipleDyckPath> {
        if self.exhausted {
            return None;
        }
        let out = self.build();
        if !self.bump() {
            match self.dyck.next() {
                Some(p) => self.load(&p),
                None => self.exhausted = true,
            }
        }
        Some(out)
    }
}

pub fn multiple_dyck_paths(n: usize) -> MultipleDyckPaths {
    let mut dyck = dyck_paths(n);
    let first = dyck.next().expect("every semilength has a Dyck path");
    let mut it = MultipleDyckPaths {
        dyck,
        maximal: Vec::new(),
        cuts: Vec::new(),
        exhausted: false,
    };
    it.load(&first);
    it
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    PlaneTrees,
    TwoMotzkin,
    Motzkin,
    Dyck,
    MultipleDyck,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::PlaneTrees,
        Family::TwoMotzkin,
        Family::Motzkin,
        Family::Dyck,
        Family::MultipleDyck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PlaneTrees => "trees",
            Family::TwoMotzkin => "2motzkin",
            Family::Motzkin => "motzkin",
            Family::Dyck => "dyck",
            Family::MultipleDyck => "mdyck",
        }
    }

    /// Encodings of every object of this family at `size`, in stream order.
    pub fn encodings(self, size: usize) -> Box<dyn Iterator<Item = String>> {
        match self {
            Family::PlaneTrees => Box::new(plane_trees(size).map(|t| t.encode())),
            Family::TwoMotzkin => Box::new(two_motzkin_paths(size).map(|p| p.encode())),
            Family::Motzkin => Box::new(motzkin_paths(size).map(|p| p.encode())),
            Family::Dyck => Box::new(dyck_paths(size).map(|p| p.encode())),
            Family::MultipleDyck => Box::new(multiple_dyck_paths(size).map(|p| p.encode())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Counts by dynamic programming over heights, without generating objects.
///
/// Trees and Dyck paths walk `2n` unit steps; 2-Motzkin paths give each level
/// position two choices; multiple Dyck paths track the last direction, and a
/// unit step continuing a run either extends it or starts a new one.
pub fn count_only(family: Family, size: usize) -> BigInt {
    match family {
        Family::PlaneTrees | Family::Dyck => count_paths(2 * size, &[(1, 1), (-1, 1)]),
        Family::TwoMotzkin => count_paths(size, &[(1, 1), (-1, 1), (0, 2)]),
        Family::Motzkin => count_paths(size, &[(1, 1), (-1, 1), (0, 1)]),
        Family::MultipleDyck => count_multiple_dyck(size),
    }
}

/// `steps` lists `(height change, multiplicity)`.
fn count_paths(len: usize, steps: &[(i64, u32)]) -> BigInt {
    let cap = len / 2 + 1;
    let mut row = vec![BigInt::zero(); cap + 1];
    row[0] = BigInt::one();
    for i in 0..len {
        let mut next = vec![BigInt::zero(); cap + 1];
        let rest = len - i - 1;
        for (h, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(d, mult) in steps {
                let nh = h as i64 + d;
                if nh < 0 || nh as usize > rest.min(cap) {
                    continue;
                }
                next[nh as usize] += c * mult;
            }
        }
        row = next;
    }
    row.swap_remove(0)
}

fn count_multiple_dyck(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let len = 2 * n;
    // [height][0 = last was up, 1 = last was down]
    let mut row = vec![[BigInt::zero(), BigInt::zero()]; n + 1];
    row[1][0] = BigInt::one();
    for _ in 1..len {
        let mut next = vec![[BigInt::zero(), BigInt::zero()]; n + 1];
        for (h, cells) in row.iter().enumerate() {
            for (last, c) in cells.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if h < n {
                    next[h + 1][0] += if last == 0 { c * 2u32 } else { c.clone() };
                }
                if h > 0 {
                    next[h - 1][1] += if last == 1 { c * 2u32 } else { c.clone() };
                }
            }
        }
        row = next;
    }
    row[0][1].clone()
}

pub fn count_stream(family: Family, size: usize) -> u64 {
    family.encodings(size).count() as u64
}
