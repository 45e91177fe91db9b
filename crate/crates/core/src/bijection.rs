//! Plane trees with `n` edges to 2-Motzkin paths of length `n - 1`.
//!
//! Each edge is sorted into one of five categories by two yes/no questions:
//! is it the edge to its parent's last child (exterior) or not (interior),
//! and does it end in a leaf (terminal)? The last edge in preorder is always
//! a terminal exterior edge and is singled out as the critical edge. Walking
//! the edges in preorder, the map emits
//!
//! | category                | step |
//! |-------------------------|------|
//! | non-terminal interior   | `U`  |
//! | non-terminal exterior   | `S`  |
//! | terminal interior       | `W`  |
//! | terminal exterior       | `D`  |
//! | critical                | none |

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{TwoMotzkinPath, TwoMotzkinStep};
use crate::tree::PlaneTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeCategory {
    NonTerminalInterior,
    NonTerminalExterior,
    TerminalInterior,
    TerminalExterior,
    Critical,
}

impl EdgeCategory {
    pub const ALL: [EdgeCategory; 5] = [
        EdgeCategory::NonTerminalInterior,
        EdgeCategory::NonTerminalExterior,
        EdgeCategory::TerminalInterior,
        EdgeCategory::TerminalExterior,
        EdgeCategory::Critical,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The step this category turns into; `None` for the critical edge.
    pub fn step(self) -> Option<TwoMotzkinStep> {
        match self {
            EdgeCategory::NonTerminalInterior => Some(TwoMotzkinStep::Up),
            EdgeCategory::NonTerminalExterior => Some(TwoMotzkinStep::StraightLevel),
            EdgeCategory::TerminalInterior => Some(TwoMotzkinStep::WavyLevel),
            EdgeCategory::TerminalExterior => Some(TwoMotzkinStep::Down),
            EdgeCategory::Critical => None,
        }
    }

    pub fn from_step(step: TwoMotzkinStep) -> Self {
        match step {
            TwoMotzkinStep::Up => EdgeCategory::NonTerminalInterior,
            TwoMotzkinStep::StraightLevel => EdgeCategory::NonTerminalExterior,
            TwoMotzkinStep::WavyLevel => EdgeCategory::TerminalInterior,
            TwoMotzkinStep::Down => EdgeCategory::TerminalExterior,
        }
    }

    pub fn is_terminal(self) -> bool {
        matches!(
            self,
            EdgeCategory::TerminalInterior
                | EdgeCategory::TerminalExterior
                | EdgeCategory::Critical
        )
    }

    pub fn is_exterior(self) -> bool {
        matches!(
            self,
            EdgeCategory::NonTerminalExterior
                | EdgeCategory::TerminalExterior
                | EdgeCategory::Critical
        )
    }
}

impl fmt::Display for EdgeCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An edge named by its preorder index (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassifiedEdge {
    pub index: usize,
    pub category: EdgeCategory,
}

/// Categories of all edges of `t`, in preorder.
pub fn classify_edges(t: &PlaneTree) -> Result<Vec<ClassifiedEdge>> {
    let n = t.edge_count();
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let word = t.word();
    let closes = t.closing_positions();
    let opens = word
        .iter()
        .enumerate()
        .filter_map(|(i, &open)| open.then_some(i));
    let edges = opens
        .zip(closes)
        .enumerate()
        .map(|(index, (open, close))| {
            let terminal = close == open + 1;
            let exterior = close + 1 == word.len() || !word[close + 1];
            let category = match (terminal, exterior) {
                _ if index == n - 1 => EdgeCategory::Critical,
                (false, false) => EdgeCategory::NonTerminalInterior,
                (false, true) => EdgeCategory::NonTerminalExterior,
                (true, false) => EdgeCategory::TerminalInterior,
                (true, true) => EdgeCategory::TerminalExterior,
            };
            debug_assert!(index != n - 1 || (terminal && exterior));
            ClassifiedEdge { index, category }
        })
        .collect();
    Ok(edges)
}

/// Number of edges in each category.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "PascalCase")]
pub struct CategoryCensus {
    pub non_terminal_interior: usize,
    pub non_terminal_exterior: usize,
    pub terminal_interior: usize,
    pub terminal_exterior: usize,
    pub critical: usize,
}

impl CategoryCensus {
    pub fn get(&self, c: EdgeCategory) -> usize {
        match c {
            EdgeCategory::NonTerminalInterior => self.non_terminal_interior,
            EdgeCategory::NonTerminalExterior => self.non_terminal_exterior,
            EdgeCategory::TerminalInterior => self.terminal_interior,
            EdgeCategory::TerminalExterior => self.terminal_exterior,
            EdgeCategory::Critical => self.critical,
        }
    }

    fn bump(&mut self, c: EdgeCategory) {
        let slot = match c {
            EdgeCategory::NonTerminalInterior => &mut self.non_terminal_interior,
            EdgeCategory::NonTerminalExterior => &mut self.non_terminal_exterior,
            EdgeCategory::TerminalInterior => &mut self.terminal_interior,
            EdgeCategory::TerminalExterior => &mut self.terminal_exterior,
            EdgeCategory::Critical => &mut self.critical,
        };
        *slot += 1;
    }

    pub fn total(&self) -> usize {
        EdgeCategory::ALL.iter().map(|&c| self.get(c)).sum()
    }
}

pub fn category_census(t: &PlaneTree) -> Result<CategoryCensus> {
    let mut census = CategoryCensus::default();
    for e in classify_edges(t)? {
        census.bump(e.category);
    }
    Ok(census)
}

/// The tree-to-path map. A single edge maps to the empty path.
pub fn phi(t: &PlaneTree) -> Result<TwoMotzkinPath> {
    let steps = classify_edges(t)?
        .into_iter()
        .filter_map(|e| e.category.step())
        .collect();
    Ok(TwoMotzkinPath::new_unchecked(steps))
}

/// Rebuilds the tree from its path.
///
/// Reads the steps as edge categories in preorder, followed by the critical
/// edge. A stack holds the vertices that will still receive children, and
/// every new edge hangs below the top of the stack:
/// an exterior edge is its parent's last child, so the parent is popped;
/// a non-terminal edge leads to a vertex that gets children next, so it is
/// pushed. Up therefore grows the stack, Down shrinks it and both level
/// steps keep its size, which tracks the path height plus one.
pub fn phi_inverse(p: &TwoMotzkinPath) -> PlaneTree {
    let categories = p
        .steps()
        .iter()
        .map(|&s| EdgeCategory::from_step(s))
        .chain(std::iter::once(EdgeCategory::Critical));

    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut open = vec![0usize];
    for category in categories {
        let parent = *open.last().expect("valid path keeps a vertex open");
        let v = children.len();
        children.push(Vec::new());
        children[parent].push(v);
        if category.is_exterior() {
            open.pop();
        }
        if !category.is_terminal() {
            open.push(v);
        }
    }
    debug_assert!(open.is_empty());

    // Preorder walk of the arena into a parenthesis word.
    let mut word = Vec::with_capacity(2 * (children.len() - 1));
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, next) = *top;
        if let Some(&c) = children[v].get(next) {
            top.1 += 1;
            word.push(true);
            stack.push((c, 0));
        } else {
            stack.pop();
            if !stack.is_empty() {
                word.push(false);
            }
        }
    }
    PlaneTree::from_word_unchecked(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeCategory::*;

    fn t(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    fn cats(s: &str) -> Vec<EdgeCategory> {
        classify_edges(&t(s))
            .unwrap()
            .into_iter()
            .map(|e| e.category)
            .collect()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(cats("(())"), vec![NonTerminalExterior, Critical]);
        assert_eq!(cats("()()"), vec![TerminalInterior, Critical]);
        assert_eq!(
            cats("(())()"),
            vec![NonTerminalInterior, TerminalExterior, Critical]
        );
        assert_eq!(cats("()"), vec![Critical]);
        let idx: Vec<usize> = classify_edges(&t("(())()"))
            .unwrap()
            .iter()
            .map(|e| e.index)
            .collect();
        assert_eq!(idx, vec![0, 1, 2]);
    }

    #[test]
    fn empty_tree_is_rejected() {
        let empty = PlaneTree::empty();
        assert_eq!(classify_edges(&empty), Err(Error::EmptyTree));
        assert_eq!(phi(&empty), Err(Error::EmptyTree));
        assert_eq!(category_census(&empty), Err(Error::EmptyTree));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&t("(())")).unwrap().to_string(), "S");
        assert_eq!(phi(&t("(())()")).unwrap().to_string(), "UD");
        assert_eq!(phi(&t("()")).unwrap().to_string(), "");
    }

    #[test]
    fn three_edge_trees_hit_every_length_two_path() {
        let mut images: Vec<String> = crate::enumeration::plane_trees(3)
            .map(|tree| phi(&tree).unwrap().to_string())
            .collect();
        images.sort();
        assert_eq!(images, vec!["SS", "SW", "UD", "WS", "WW"]);
    }

    #[test]
    fn inverse_examples() {
        let p = |s: &str| s.parse::<TwoMotzkinPath>().unwrap();
        assert_eq!(phi_inverse(&p("S")).encode(), "(())");
        assert_eq!(phi_inverse(&p("UD")).encode(), "(())()");
        assert_eq!(phi_inverse(&p("")).encode(), "()");
    }

    #[test]
    fn census_examples() {
        let c = category_census(&t("(())()")).unwrap();
        assert_eq!(
            c,
            CategoryCensus {
                non_terminal_interior: 1,
                non_terminal_exterior: 0,
                terminal_interior: 0,
                terminal_exterior: 1,
                critical: 1,
            }
        );
        let single = category_census(&t("()")).unwrap();
        assert_eq!(single.critical, 1);
        assert_eq!(single.total(), 1);
        let star = category_census(&t("()()()")).unwrap();
        assert_eq!(star.terminal_interior, 2);
        assert_eq!(star.critical, 1);
        assert_eq!(star.total(), 3);
    }

    #[test]
    fn census_serializes_with_category_names() {
        let c = category_census(&t("(())()")).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"NonTerminalInterior":1,"NonTerminalExterior":0,"TerminalInterior":0,"TerminalExterior":1,"Critical":1}"#
        );
    }

    #[test]
    fn step_category_roundtrip() {
        for c in EdgeCategory::ALL {
            match c.step() {
                Some(s) => assert_eq!(EdgeCategory::from_step(s), c),
                None => assert_eq!(c, Critical),
            }
        }
    }

    #[test]
    fn deep_path_tree() {
        let n = 50_000;
        let tree = t(&("(".repeat(n) + &")".repeat(n)));
        let path = phi(&tree).unwrap();
        assert_eq!(path.len(), n - 1);
        assert_eq!(path.count(TwoMotzkinStep::StraightLevel), n - 1);
        assert_eq!(phi_inverse(&path), tree);
    }
}
