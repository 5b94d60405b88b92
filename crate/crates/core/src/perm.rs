//! Permutations of `{0, …, n-1}`.
//!
//! Points are 0-based internally and 1-based in every textual form. The
//! product `p * q` is function composition, `x ↦ p(q(x))`, so a word of
//! cycles such as `(1 2)(2 3)` is evaluated right to left.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::Mul;

use crate::error::{Error, ParseError, ParseErrorKind};
use crate::partition::PartitionOfN;

/// A bijection of `{0, …, n-1}` stored as its image sequence.
///
/// The derived ordering is lexicographic on image sequences, which is the
/// canonical element order used by [`FiniteGroup`](crate::FiniteGroup).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::EmptyDegree);
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || core::mem::replace(&mut seen[x], true) {
                return Err(Error::NotABijection);
            }
        }
        Ok(Permutation { images })
    }

    /// Builds the product of 0-based cycles, rightmost cycle applied first.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let cycle = cycle.as_ref();
            let mut seen = vec![false; degree];
            for &p in cycle {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, points: degree });
                }
                if core::mem::replace(&mut seen[p], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            let c = Permutation::cycle_unchecked(degree, cycle);
            result = &c * &result;
        }
        Ok(result)
    }

    /// The cycle `(points[0] points[1] …)`; points must be distinct and in range.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self, Error> {
        Permutation::from_cycles(degree, &[points])
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, Error> {
        Permutation::cycle(degree, &[a, b])
    }

    fn cycle_unchecked(degree: usize, points: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()];
        }
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x]] = g.images[y];
        }
        Permutation { images }
    }

    /// `self ∘ other ∘ self⁻¹ ∘ other⁻¹`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        &(self * other) * &(other * self).inverse()
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = vec![0; self.degree() + 1];
        for c in self.cycles() {
            counts[c.len()] += 1;
        }
        CycleType { counts }
    }

    /// `+1` or `-1`; `(-1)` to the number of even-length cycles.
    pub fn sign(&self) -> i32 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.images[x] != x).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in permutation product");
        Permutation { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_char('(')?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_char(' ')?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_char(')')?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `()`.
///
/// Grammar: `EXPR := CYCLE+ | "()"`, `CYCLE := "(" INT (WS INT)* ")"`.
/// Adjacent cycles may share points; they multiply right to left.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    if degree == 0 {
        return Err(ParseError { position: 0, kind: ParseErrorKind::Degree(0) });
    }
    let bytes = text.as_bytes();
    let err = |position, kind| ParseError { position, kind };
    if text == "()" {
        return Ok(Permutation::identity(degree));
    }
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    if bytes.is_empty() {
        return Err(err(0, ParseErrorKind::UnexpectedEnd));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(err(pos, unexpected(text, pos)));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(
                    pos,
                    if pos == bytes.len() { ParseErrorKind::UnexpectedEnd } else { unexpected(text, pos) },
                ));
            }
            let value: usize = text[start..pos].parse().map_err(|_| err(start, ParseErrorKind::InvalidNumber))?;
            if value == 0 || value > degree {
                return Err(err(start, ParseErrorKind::PointOutOfRange(value)));
            }
            if cycle.contains(&(value - 1)) {
                return Err(err(start, ParseErrorKind::RepeatedPoint(value)));
            }
            cycle.push(value - 1);
            match bytes.get(pos) {
                None => return Err(err(pos, ParseErrorKind::UnexpectedEnd)),
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_whitespace() => {
                    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                        pos += 1;
                    }
                }
                Some(_) => return Err(err(pos, unexpected(text, pos))),
            }
        }
        cycles.push(cycle);
    }
    // Points were validated above, so this cannot fail.
    Ok(Permutation::from_cycles(degree, &cycles).expect("validated cycles"))
}

fn unexpected(text: &str, pos: usize) -> ParseErrorKind {
    match text[pos..].chars().next() {
        Some(c) => ParseErrorKind::UnexpectedChar(c),
        None => ParseErrorKind::UnexpectedEnd,
    }
}

/// Cycle type of a permutation: `counts[i]` is the number of cycles of
/// length `i`, fixed points included.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    counts: Vec<usize>,
}

impl CycleType {
    pub fn degree(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, m)| i * m).sum()
    }

    /// `m_i`, the number of cycles of length `i`.
    pub fn multiplicity(&self, length: usize) -> usize {
        self.counts.get(length).copied().unwrap_or(0)
    }

    /// Cycle lengths of at least 2 in descending order; empty for the identity.
    pub fn display_parts(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for len in (2..self.counts.len()).rev() {
            parts.extend(core::iter::repeat_n(len, self.counts[len]));
        }
        parts
    }

    pub fn to_partition(&self) -> PartitionOfN {
        let mut parts = self.display_parts();
        parts.extend(core::iter::repeat_n(1, self.multiplicity(1)));
        PartitionOfN::new(self.degree(), parts).expect("cycle lengths partition the degree")
    }

    pub fn from_partition(partition: &PartitionOfN) -> Self {
        let mut counts = vec![0; partition.n() + 1];
        for &p in partition.parts() {
            counts[p] += 1;
        }
        CycleType { counts }
    }

    pub fn label(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('(')?;
        for (i, p) in self.display_parts().iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{p}")?;
        }
        f.write_char(')')
    }
}
