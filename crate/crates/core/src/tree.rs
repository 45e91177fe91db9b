//! Plane (rooted, ordered) trees.
//!
//! A tree is stored as its balanced-parentheses word: each matched pair is
//! one edge, nesting is parent/child and left to right is sibling order. The
//! word is the preorder traversal of the edges, so all tree walks below are
//! plain scans with a stack and never recurse.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    /// `true` for `(`, `false` for `)`.
    word: Vec<bool>,
}

impl PlaneTree {
    /// The tree with a root and no edges.
    pub fn empty() -> Self {
        PlaneTree::default()
    }

    /// Hangs `children` under a fresh root, left to right.
    pub fn from_children<I: IntoIterator<Item = PlaneTree>>(children: I) -> Self {
        let mut word = Vec::new();
        for child in children {
            word.push(true);
            word.extend_from_slice(&child.word);
            word.push(false);
        }
        PlaneTree { word }
    }

    /// Caller guarantees `word` is balanced and prefix-nonnegative.
    pub(crate) fn from_word_unchecked(word: Vec<bool>) -> Self {
        debug_assert!(is_balanced(&word));
        PlaneTree { word }
    }

    pub(crate) fn word(&self) -> &[bool] {
        &self.word
    }

    pub fn edge_count(&self) -> usize {
        self.word.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.edge_count() + 1
    }

    /// Vertices without children. The root is a leaf only in the empty tree.
    pub fn leaf_count(&self) -> usize {
        if self.word.is_empty() {
            return 1;
        }
        self.word.windows(2).filter(|w| w[0] && !w[1]).count()
    }

    /// Subtrees rooted at the root's children, left to right.
    pub fn children(&self) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, &open) in self.word.iter().enumerate() {
            if open {
                if depth == 0 {
                    start = i + 1;
                }
                depth += 1;
            } else {
                depth -= 1;
                if depth == 0 {
                    out.push(PlaneTree {
                        word: self.word[start..i].to_vec(),
                    });
                }
            }
        }
        out
    }

    pub fn root_degree(&self) -> usize {
        let mut depth = 0usize;
        let mut deg = 0;
        for &open in &self.word {
            if open {
                if depth == 0 {
                    deg += 1;
                }
                depth += 1;
            } else {
                depth -= 1;
            }
        }
        deg
    }

    /// Depth below the root of the deepest vertex.
    pub fn height(&self) -> usize {
        let mut depth = 0usize;
        let mut best = 0;
        for &open in &self.word {
            if open {
                depth += 1;
                best = best.max(depth);
            } else {
                depth -= 1;
            }
        }
        best
    }

    /// For each edge in preorder, the index of the `)` that closes it.
    pub(crate) fn closing_positions(&self) -> Vec<usize> {
        let mut closes = vec![0; self.edge_count()];
        let mut stack = Vec::new();
        let mut edge = 0;
        for (i, &open) in self.word.iter().enumerate() {
            if open {
                stack.push(edge);
                edge += 1;
            } else {
                let e = stack.pop().expect("balanced word");
                closes[e] = i;
            }
        }
        closes
    }

    /// Balanced-parentheses encoding, e.g. `()(())`.
    pub fn encode(&self) -> String {
        self.word
            .iter()
            .map(|&o| if o { '(' } else { ')' })
            .collect()
    }
}

fn is_balanced(word: &[bool]) -> bool {
    let mut depth = 0i64;
    for &open in word {
        depth += if open { 1 } else { -1 };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::with_capacity(s.len());
        let mut depth = 0usize;
        for (pos, c) in s.chars().enumerate() {
            match c {
                '(' => {
                    depth += 1;
                    word.push(true);
                }
                ')' => {
                    if depth == 0 {
                        return Err(Error::UnbalancedParentheses { pos });
                    }
                    depth -= 1;
                    word.push(false);
                }
                found => return Err(Error::IllegalCharacter { pos, found }),
            }
        }
        if depth != 0 {
            return Err(Error::UnbalancedParentheses {
                pos: s.chars().count(),
            });
        }
        Ok(PlaneTree { word })
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree({})", self.encode())
    }
}
