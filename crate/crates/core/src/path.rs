//! Lattice paths that start and end on the axis and never go below it.
//!
//! [`LatticePath`] is generic over the step alphabet; the concrete families
//! are [`TwoMotzkinPath`], [`MotzkinPath`] and [`DyckPath`]. Multiple Dyck
//! paths keep their run decomposition and get their own type.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A step alphabet. Variants must be declared in the order of their letters
/// so that the derived `Ord` agrees with lexicographic order on encodings.
pub trait Step: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// All steps, in increasing letter order.
    const ALPHABET: &'static [Self];

    fn delta(self) -> i64;
    fn letter(self) -> char;

    fn from_letter(c: char) -> Option<Self> {
        Self::ALPHABET.iter().copied().find(|s| s.letter() == c)
    }

    /// Whether the alphabet has a step of height change zero.
    fn has_level() -> bool {
        Self::ALPHABET.iter().any(|s| s.delta() == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoMotzkinStep {
    Down,
    StraightLevel,
    Up,
    WavyLevel,
}

impl Step for TwoMotzkinStep {
    const ALPHABET: &'static [Self] = &[
        TwoMotzkinStep::Down,
        TwoMotzkinStep::StraightLevel,
        TwoMotzkinStep::Up,
        TwoMotzkinStep::WavyLevel,
    ];

    fn delta(self) -> i64 {
        match self {
            TwoMotzkinStep::Up => 1,
            TwoMotzkinStep::Down => -1,
            TwoMotzkinStep::StraightLevel | TwoMotzkinStep::WavyLevel => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            TwoMotzkinStep::Down => 'D',
            TwoMotzkinStep::StraightLevel => 'S',
            TwoMotzkinStep::Up => 'U',
            TwoMotzkinStep::WavyLevel => 'W',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    Down,
    Level,
    Up,
}

impl Step for MotzkinStep {
    const ALPHABET: &'static [Self] = &[MotzkinStep::Down, MotzkinStep::Level, MotzkinStep::Up];

    fn delta(self) -> i64 {
        match self {
            MotzkinStep::Up => 1,
            MotzkinStep::Down => -1,
            MotzkinStep::Level => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            MotzkinStep::Down => 'D',
            MotzkinStep::Level => 'L',
            MotzkinStep::Up => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckStep {
    Down,
    Up,
}

impl Step for DyckStep {
    const ALPHABET: &'static [Self] = &[DyckStep::Down, DyckStep::Up];

    fn delta(self) -> i64 {
        match self {
            DyckStep::Up => 1,
            DyckStep::Down => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            DyckStep::Down => 'D',
            DyckStep::Up => 'U',
        }
    }
}

/// Parenthesis alphabet; `(` sorts before `)`, which fixes the order trees
/// are enumerated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Paren {
    Open,
    Close,
}

impl Step for Paren {
    const ALPHABET: &'static [Self] = &[Paren::Open, Paren::Close];

    fn delta(self) -> i64 {
        match self {
            Paren::Open => 1,
            Paren::Close => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Paren::Open => '(',
            Paren::Close => ')',
        }
    }
}

/// Checks the prefix and closure conditions on a sequence of height changes.
fn check_heights(deltas: impl IntoIterator<Item = i64>) -> Result<()> {
    let mut height = 0i64;
    for (pos, d) in deltas.into_iter().enumerate() {
        height += d;
        if height < 0 {
            return Err(Error::NegativePrefix { pos });
        }
    }
    if height != 0 {
        return Err(Error::NotClosed { height });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath<S: Step> {
    steps: Vec<S>,
}

pub type TwoMotzkinPath = LatticePath<TwoMotzkinStep>;
pub type MotzkinPath = LatticePath<MotzkinStep>;
pub type DyckPath = LatticePath<DyckStep>;

impl<S: Step> LatticePath<S> {
    pub fn new(steps: Vec<S>) -> Result<Self> {
        check_heights(steps.iter().map(|s| s.delta()))?;
        Ok(LatticePath { steps })
    }

    pub(crate) fn new_unchecked(steps: Vec<S>) -> Self {
        debug_assert!(check_heights(steps.iter().map(|s| s.delta())).is_ok());
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[S] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<S> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: S) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Heights after each step; starts implicitly at 0.
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    pub fn max_height(&self) -> i64 {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn encode(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl<S: Step> FromStr for LatticePath<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(pos, c)| S::from_letter(c).ok_or(Error::IllegalCharacter { pos, found: c }))
            .collect::<Result<Vec<S>>>()?;
        Self::new(steps)
    }
}

impl<S: Step> fmt::Display for LatticePath<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl<S: Step> fmt::Debug for LatticePath<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({})", self.encode())
    }
}

/// One big step of a multiple Dyck path: `len` unit steps in one direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub dir: DyckStep,
    pub len: u32,
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dir.letter(), self.len)
    }
}

/// A Dyck path cut into runs. Adjacent runs may share a direction: `U1 U1 D2`
/// and `U2 D2` are different objects over the same Dyck word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultipleDyckPath {
    runs: Vec<Run>,
}

impl MultipleDyckPath {
    pub fn new(runs: Vec<Run>) -> Result<Self> {
        if let Some(pos) = runs.iter().position(|r| r.len == 0) {
            return Err(Error::InvalidRun {
                pos,
                token: runs[pos].to_string(),
            });
        }
        // positions are reported in runs, not unit steps
        let mut height = 0i64;
        for (pos, r) in runs.iter().enumerate() {
            height += r.dir.delta() * i64::from(r.len);
            if height < 0 {
                return Err(Error::NegativePrefix { pos });
            }
        }
        if height != 0 {
            return Err(Error::NotClosed { height });
        }
        Ok(MultipleDyckPath { runs })
    }

    pub(crate) fn new_unchecked(runs: Vec<Run>) -> Self {
        MultipleDyckPath { runs }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of big steps.
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn semilength(&self) -> u64 {
        self.runs
            .iter()
            .filter(|r| r.dir == DyckStep::Up)
            .map(|r| u64::from(r.len))
            .sum()
    }

    /// The underlying Dyck path with runs flattened into unit steps.
    pub fn flatten(&self) -> DyckPath {
        let steps = self
            .runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.dir, r.len as usize))
            .collect();
        DyckPath::new_unchecked(steps)
    }

    pub fn encode(&self) -> String {
        self.to_string()
    }
}

impl FromStr for MultipleDyckPath {
    type Err = Error;

    /// Whitespace-separated tokens such as `U2 D1 D1`. Positions in errors
    /// are character offsets into `s`.
    fn from_str(s: &str) -> Result<Self> {
        let mut runs = Vec::new();
        let mut offsets = Vec::new();
        for (pos, token) in tokens(s) {
            let mut chars = token.chars();
            let first = chars.next().expect("tokens are nonempty");
            let dir = match first {
                'U' => DyckStep::Up,
                'D' => DyckStep::Down,
                found => return Err(Error::IllegalCharacter { pos, found }),
            };
            let digits = chars.as_str();
            if let Some((i, found)) = digits.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(Error::IllegalCharacter {
                    pos: pos + 1 + digits[..i].chars().count(),
                    found,
                });
            }
            let len = digits
                .parse::<u32>()
                .ok()
                .filter(|&l| l > 0)
                .ok_or_else(|| Error::InvalidRun {
                    pos,
                    token: token.to_string(),
                })?;
            runs.push(Run { dir, len });
            offsets.push(pos);
        }
        MultipleDyckPath::new(runs).map_err(|e| match e {
            Error::NegativePrefix { pos } => Error::NegativePrefix { pos: offsets[pos] },
            other => other,
        })
    }
}

fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (ci, (bi, c)) in s.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (true, Some((cpos, bstart))) => {
                out.push((cpos, &s[bstart..bi]));
                start = None;
            }
            (false, None) => start = Some((ci, bi)),
            _ => {}
        }
    }
    if let Some((cpos, bstart)) = start {
        out.push((cpos, &s[bstart..]));
    }
    out.into_iter()
}

impl fmt::Display for MultipleDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultipleDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultipleDyckPath({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    TwoMotzkin,
    Motzkin,
    Dyck,
    MultipleDyck,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyPath {
    TwoMotzkin(TwoMotzkinPath),
    Motzkin(MotzkinPath),
    Dyck(DyckPath),
    MultipleDyck(MultipleDyckPath),
}

impl AnyPath {
    pub fn kind(&self) -> PathKind {
        match self {
            AnyPath::TwoMotzkin(_) => PathKind::TwoMotzkin,
            AnyPath::Motzkin(_) => PathKind::Motzkin,
            AnyPath::Dyck(_) => PathKind::Dyck,
            AnyPath::MultipleDyck(_) => PathKind::MultipleDyck,
        }
    }
}

impl fmt::Display for AnyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPath::TwoMotzkin(p) => p.fmt(f),
            AnyPath::Motzkin(p) => p.fmt(f),
            AnyPath::Dyck(p) => p.fmt(f),
            AnyPath::MultipleDyck(p) => p.fmt(f),
        }
    }
}

pub fn parse_path(s: &str, kind: PathKind) -> Result<AnyPath> {
    Ok(match kind {
        PathKind::TwoMotzkin => AnyPath::TwoMotzkin(s.parse()?),
        PathKind::Motzkin => AnyPath::Motzkin(s.parse()?),
        PathKind::Dyck => AnyPath::Dyck(s.parse()?),
        PathKind::MultipleDyck => AnyPath::MultipleDyck(s.parse()?),
    })
}
