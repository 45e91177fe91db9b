//! Test-only reference implementations, written from the definitions and
//! sharing no code with the library's classification or enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Pointer-style tree built recursively from a parenthesis word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveTree {
    pub children: Vec<NaiveTree>,
}

impl NaiveTree {
    pub fn parse(s: &str) -> NaiveTree {
        fn go(chars: &[u8], i: &mut usize) -> Vec<NaiveTree> {
            let mut kids = Vec::new();
            while *i < chars.len() && chars[*i] == b'(' {
                *i += 1;
                let children = go(chars, i);
                assert_eq!(chars[*i], b')');
                *i += 1;
                kids.push(NaiveTree { children });
            }
            kids
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        let children = go(bytes, &mut i);
        assert_eq!(i, bytes.len());
        NaiveTree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaves(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(NaiveTree::leaves).sum()
        }
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }
}

/// Category names as plain strings so the oracle does not touch the library.
pub const NTI: &str = "NonTerminalInterior";
pub const NTE: &str = "NonTerminalExterior";
pub const TI: &str = "TerminalInterior";
pub const TE: &str = "TerminalExterior";
pub const CRIT: &str = "Critical";

/// Preorder edge categories. The critical edge is found by walking from the
/// root along last children until reaching a leaf, and tracked by identity
/// (a path of child indices), not by preorder position.
pub fn naive_categories(t: &NaiveTree) -> Vec<&'static str> {
    let mut critical_path = Vec::new();
    let mut v = t;
    while !v.is_leaf() {
        critical_path.push(v.children.len() - 1);
        v = v.children.last().unwrap();
    }

    fn walk(v: &NaiveTree, addr: &mut Vec<usize>, critical: &[usize], out: &mut Vec<&'static str>) {
        let k = v.children.len();
        for (i, c) in v.children.iter().enumerate() {
            addr.push(i);
            let exterior = i + 1 == k;
            let terminal = c.is_leaf();
            let cat = if addr.as_slice() == critical {
                CRIT
            } else {
                match (terminal, exterior) {
                    (false, false) => NTI,
                    (false, true) => NTE,
                    (true, false) => TI,
                    (true, true) => TE,
                }
            };
            out.push(cat);
            walk(c, addr, critical, out);
            addr.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &critical_path, &mut out);
    out
}

/// All balanced parenthesis words with `n` pairs, by recursion on the
/// first-return decomposition `( A ) B`.
pub fn naive_trees(n: usize) -> BTreeSet<String> {
    let mut memo: Vec<BTreeSet<String>> = vec![BTreeSet::from([String::new()])];
    for m in 1..=n {
        let mut set = BTreeSet::new();
        for i in 0..m {
            for a in &memo[i] {
                for b in &memo[m - 1 - i] {
                    set.insert(format!("({a}){b}"));
                }
            }
        }
        memo.push(set);
    }
    memo.swap_remove(n)
}

/// All words over `letters` of length `m` whose height profile under
/// `delta` stays nonnegative and ends at 0, by filtering the full product.
pub fn naive_paths(m: usize, letters: &[(char, i64)]) -> BTreeSet<String> {
    let mut words = vec![(String::new(), 0i64)];
    for _ in 0..m {
        words = words
            .into_iter()
            .flat_map(|(w, h)| {
                letters
                    .iter()
                    .filter(move |&&(_, d)| h + d >= 0)
                    .map(move |&(c, d)| (format!("{w}{c}"), h + d))
            })
            .collect();
    }
    words
        .into_iter()
        .filter(|(_, h)| *h == 0)
        .map(|(w, _)| w)
        .collect()
}

/// Multiple Dyck paths as run sequences, generated directly: any run of any
/// admissible length in either direction, until `n` up steps are used and
/// the path is back on the axis.
pub fn naive_multiple_dyck(n: u32) -> BTreeSet<String> {
    fn go(n: u32, h: u32, ups: u32, acc: &mut Vec<String>, out: &mut BTreeSet<String>) {
        if ups == n && h == 0 {
            out.insert(acc.join(" "));
            return;
        }
        for len in 1..=(n - ups) {
            acc.push(format!("U{len}"));
            go(n, h + len, ups + len, acc, out);
            acc.pop();
        }
        for len in 1..=h {
            acc.push(format!("D{len}"));
            go(n, h - len, ups, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Catalan numbers by the convolution recurrence, in u128.
pub fn catalan_recurrence(n: usize) -> u128 {
    let mut c = vec![1u128];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n]
}
