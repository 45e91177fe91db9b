//! Text and SVG drawings of trees and paths.

use std::fmt::Write as _;

use weighted_motzkin::path::{LatticePath, Step};
use weighted_motzkin::{classify_edges, EdgeCategory, PlaneTree};

fn glyph(delta: i64, letter: char) -> char {
    match (delta, letter) {
        (1, _) => '/',
        (-1, _) => '\\',
        (_, 'W') => '~',
        _ => '-',
    }
}

/// Height profile, top row first. Up steps are `/`, down steps `\`, straight
/// and plain level steps `-`, wavy level steps `~`.
pub fn path_ascii<S: Step>(p: &LatticePath<S>) -> String {
    let mut cells = Vec::with_capacity(p.len());
    let mut h = 0i64;
    for &s in p.steps() {
        let d = s.delta();
        let row = if d < 0 { h - 1 } else { h };
        cells.push((row, glyph(d, s.letter())));
        h += d;
    }
    let top = cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
    let mut out = String::new();
    for row in (0..=top).rev() {
        let line: String = cells
            .iter()
            .map(|&(r, g)| if r == row { g } else { ' ' })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn category_tag(c: EdgeCategory) -> String {
    match c.step() {
        Some(s) => format!("{c} [{}]", s.letter()),
        None => c.to_string(),
    }
}

/// Indented preorder listing; each non-root line names the category of the
/// edge into that vertex and the step it maps to.
pub fn tree_ascii(t: &PlaneTree) -> String {
    let mut out = String::from("root\n");
    let categories: Vec<EdgeCategory> = match classify_edges(t) {
        Ok(edges) => edges.into_iter().map(|e| e.category).collect(),
        Err(_) => return out,
    };
    // Walk the encoding: `(` opens an edge, `)` closes it.
    let enc: Vec<char> = t.encode().chars().collect();
    let mut edge = 0;
    // For each open ancestor, whether it was its parent's last child.
    let mut last_flags: Vec<bool> = Vec::new();
    for &c in &enc {
        if c == ')' {
            last_flags.pop();
            continue;
        }
        let category = categories[edge];
        edge += 1;
        let is_last = category.is_exterior();
        for &ancestor_last in &last_flags {
            out.push_str(if ancestor_last { "    " } else { "|   " });
        }
        out.push_str(if is_last { "`-- " } else { "+-- " });
        out.push_str(&category_tag(category));
        out.push('\n');
        last_flags.push(is_last);
    }
    out
}

const UNIT: i64 = 24;
const MARGIN: i64 = 16;

fn svg_header(out: &mut String, width: i64, height: i64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
}

/// Path drawn on a grid; wavy level steps are dashed.
pub fn path_svg<S: Step>(p: &LatticePath<S>) -> String {
    let top = p.max_height();
    let width = 2 * MARGIN + UNIT * p.len() as i64;
    let height = 2 * MARGIN + UNIT * top;
    let y = |h: i64| MARGIN + UNIT * (top - h);
    let mut out = String::new();
    svg_header(&mut out, width, height);
    let _ = writeln!(
        out,
        r##"<line x1="{MARGIN}" y1="{}" x2="{}" y2="{}" stroke="#bbb"/>"##,
        y(0),
        width - MARGIN,
        y(0)
    );
    let mut h = 0;
    for (i, &s) in p.steps().iter().enumerate() {
        let x0 = MARGIN + UNIT * i as i64;
        let h1 = h + s.delta();
        let dash = if s.letter() == 'W' {
            r#" stroke-dasharray="3 3""#
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r##"<line x1="{x0}" y1="{}" x2="{}" y2="{}" stroke="#000" stroke-width="2"{dash}/>"##,
            y(h),
            x0 + UNIT,
            y(h1)
        );
        h = h1;
    }
    for (i, hh) in std::iter::once(0).chain(p.heights()).enumerate() {
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="2.5" fill="#000"/>"##,
            MARGIN + UNIT * i as i64,
            y(hh)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Layered drawing: leaves get consecutive columns, internal vertices sit
/// above the middle of their children.
pub fn tree_svg(t: &PlaneTree) -> String {
    // Arena from the encoding.
    let mut parent = vec![usize::MAX];
    let mut depth = vec![0i64];
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack = vec![0usize];
    for c in t.encode().chars() {
        if c == '(' {
            let p = *stack.last().expect("balanced");
            let v = parent.len();
            parent.push(p);
            depth.push(depth[p] + 1);
            children.push(Vec::new());
            children[p].push(v);
            stack.push(v);
        } else {
            stack.pop();
        }
    }
    let n = parent.len();
    let mut xpos = vec![0f64; n];
    let mut next_leaf = 0f64;
    for v in 0..n {
        if children[v].is_empty() {
            xpos[v] = next_leaf;
            next_leaf += 1.0;
        }
    }
    // Vertices were created in preorder, so reverse order places every
    // child before its parent.
    for v in (0..n).rev() {
        if let (Some(&first), Some(&last)) = (children[v].first(), children[v].last()) {
            xpos[v] = (xpos[first] + xpos[last]) / 2.0;
        }
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let width = 2 * MARGIN + UNIT * (next_leaf as i64 - 1).max(0);
    let height = 2 * MARGIN + UNIT * max_depth;
    let px = |v: usize| MARGIN as f64 + UNIT as f64 * xpos[v];
    let py = |v: usize| MARGIN + UNIT * depth[v];
    let mut out = String::new();
    svg_header(&mut out, width, height);
    for (v, &p) in parent.iter().enumerate().skip(1) {
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000" stroke-width="2"/>"##,
            px(p),
            py(p),
            px(v),
            py(v)
        );
    }
    for v in 0..n {
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="3" fill="#000"/>"##,
            px(v),
            py(v)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use weighted_motzkin::{MotzkinPath, TwoMotzkinPath};

    #[test]
    fn path_profile() {
        let p: TwoMotzkinPath = "UWDS".parse().unwrap();
        assert_eq!(path_ascii(&p), " ~\n/ \\-\n");
    }

    #[test]
    fn flat_and_empty_profiles() {
        let p: TwoMotzkinPath = "SWS".parse().unwrap();
        assert_eq!(path_ascii(&p), "-~-\n");
        assert_eq!(path_ascii(&TwoMotzkinPath::empty()), "\n");
        let m: MotzkinPath = "ULD".parse().unwrap();
        assert_eq!(path_ascii(&m), " -\n/ \\\n");
    }

    #[test]
    fn tree_listing() {
        let t: PlaneTree = "()()".parse().unwrap();
        assert_eq!(
            tree_ascii(&t),
            "root\n+-- TerminalInterior [W]\n`-- Critical\n"
        );
        let t: PlaneTree = "(())()".parse().unwrap();
        assert_eq!(
            tree_ascii(&t),
            "root\n+-- NonTerminalInterior [U]\n|   `-- TerminalExterior [D]\n`-- Critical\n"
        );
        assert_eq!(tree_ascii(&PlaneTree::empty()), "root\n");
    }

    #[test]
    fn svg_is_well_formed() {
        let t: PlaneTree = "(()())()".parse().unwrap();
        let svg = tree_svg(&t);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg.matches("<line").count(), 4);

        let p: TwoMotzkinPath = "UWDS".parse().unwrap();
        let svg = path_svg(&p);
        assert_eq!(svg.matches("stroke-dasharray").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 5);
    }
}
