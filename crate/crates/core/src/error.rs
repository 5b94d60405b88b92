use core::fmt;

/// Errors raised by the group machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or a permutation and a group) disagree on degree.
    DegreeMismatch { expected: usize, found: usize },
    /// Degree zero was requested.
    EmptyDegree,
    /// An image sequence is not a bijection of `0..n`.
    NotABijection,
    /// Cycle notation could not be parsed.
    Parse(ParseError),
    /// Enumeration would exceed the configured order cap.
    GroupTooLarge { cap: usize },
    /// A permutation that has to lie in a group does not.
    NotAMember,
    /// A subgroup belongs to a different parent group.
    ForeignSubgroup,
    /// `p` is not a prime.
    NotPrime(u64),
    /// A subset size outside `0..=n`.
    SubsetSizeOutOfRange { n: usize, k: usize },
    /// Point index outside the action's point set.
    PointOutOfRange { point: usize, points: usize },
    /// The operation needs a transitive action.
    NotTransitive,
    /// A seed or point list was empty where at least one point is needed.
    EmptySeed,
    /// Points that must be pairwise distinct are not.
    RepeatedPoint(usize),
    /// The two actions of an equivariant map do not fit together.
    IncompatibleActions,
    /// A combination of parameters that the routine does not cover.
    Unsupported(&'static str),
    /// Integer overflow in exact arithmetic.
    Overflow,
    /// A sequence of parts is not a partition of the stated integer.
    InvalidPartition,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::EmptyDegree => f.write_str("degree must be positive"),
            Error::NotABijection => f.write_str("image sequence is not a bijection"),
            Error::Parse(e) => write!(f, "{e}"),
            Error::GroupTooLarge { cap } => {
                write!(f, "group too large: order exceeds the cap of {cap}")
            }
            Error::NotAMember => f.write_str("permutation is not an element of the group"),
            Error::ForeignSubgroup => f.write_str("subgroup belongs to a different group"),
            Error::NotPrime(p) => write!(f, "{p} is not a prime"),
            Error::SubsetSizeOutOfRange { n, k } => {
                write!(f, "subset size {k} out of range for {n} points")
            }
            Error::PointOutOfRange { point, points } => {
                write!(f, "point {point} out of range (action has {points} points)")
            }
            Error::NotTransitive => f.write_str("action is not transitive"),
            Error::EmptySeed => f.write_str("seed must be nonempty"),
            Error::RepeatedPoint(p) => write!(f, "point {} is repeated", p + 1),
            Error::IncompatibleActions => f.write_str("actions are incompatible"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::Overflow => f.write_str("integer overflow"),
            Error::InvalidPartition => f.write_str("invalid partition"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

/// What went wrong while reading cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    /// 1-based point outside `1..=degree`.
    PointOutOfRange(usize),
    /// The same point twice inside one cycle.
    RepeatedPoint(usize),
    InvalidNumber,
    Degree(usize),
}

/// A parse failure with the byte offset at which it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.position + 1;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected {c:?} at column {col}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at column {col}"),
            ParseErrorKind::PointOutOfRange(p) => {
                write!(f, "point {p} out of range at column {col}")
            }
            ParseErrorKind::RepeatedPoint(p) => {
                write!(f, "point {p} repeated within a cycle at column {col}")
            }
            ParseErrorKind::InvalidNumber => write!(f, "invalid number at column {col}"),
            ParseErrorKind::Degree(d) => write!(f, "invalid degree {d}"),
        }
    }
}

impl core::error::Error for ParseError {}
