use std::fmt;
use std::str::FromStr;

use crate::bits::Bitstream;
use crate::error::{DensityError, Result};
use crate::ratio::Ratio;

/// Which density question is being asked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Density exactly theta.
    Fixed,
    /// Density at least theta.
    Bounded,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Fixed => "fixed",
            Problem::Bounded => "bounded",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fixed" => Ok(Problem::Fixed),
            "bounded" => Ok(Problem::Bounded),
            other => Err(format!("unknown problem {other:?} (expected fixed or bounded)")),
        }
    }
}

/// A non-empty closed interval `[start, end]` of 1-based stream positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    /// Panics if `start` is 0 or `end < start`.
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start >= 1 && start <= end, "invalid span [{start}, {end}]");
        Self { start, end }
    }

    /// The substring `x_{p+1}..x_q` between prefix positions `p < q`.
    pub(crate) fn between(p: usize, q: usize) -> Self {
        debug_assert!(p < q);
        Self { start: p + 1, end: q }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

/// `None` means no qualifying non-empty substring exists.
pub type SpanResult = Option<Span>;

pub fn span_len(result: &SpanResult) -> usize {
    result.map_or(0, |s| s.len())
}

/// Recounts the ones in `span` directly from the stream and checks the
/// density condition with exact integer arithmetic.
///
/// Spans that fall outside `1..=n` are rejected.
pub fn verify_span(stream: &Bitstream, ratio: Ratio, span: Span, problem: Problem) -> bool {
    if span.start == 0 || span.start > span.end || span.end > stream.len() {
        return false;
    }
    let ones = stream
        .iter()
        .skip(span.start - 1)
        .take(span.len())
        .filter(|b| *b)
        .count() as u128;
    let lhs = ones * ratio.beta() as u128;
    let rhs = span.len() as u128 * ratio.alpha() as u128;
    match problem {
        Problem::Fixed => lhs == rhs,
        Problem::Bounded => lhs >= rhs,
    }
}

/// Longest run of `bit`, earliest on ties.
fn longest_run(stream: &Bitstream, bit: bool) -> SpanResult {
    let mut best: SpanResult = None;
    let mut run_start = 0usize;
    for (offset, b) in stream.iter().enumerate() {
        let i = offset + 1;
        if b != bit {
            run_start = 0;
            continue;
        }
        if run_start == 0 {
            run_start = i;
        }
        let run = Span::new(run_start, i);
        if run.len() > span_len(&best) {
            best = Some(run);
        }
    }
    best
}

/// Solves theta = 0 and theta = 1 directly.
///
/// Theta 1 asks for the longest run of ones under either problem; theta 0
/// asks for the longest run of zeroes (fixed) or the whole stream (bounded).
pub fn trivial_extremes(stream: &Bitstream, ratio: Ratio, problem: Problem) -> Result<SpanResult> {
    if !ratio.is_trivial() {
        return Err(DensityError::NonTrivialRatio {
            alpha: ratio.alpha(),
            beta: ratio.beta(),
        });
    }
    Ok(match (ratio.alpha() == 0, problem) {
        (false, _) => longest_run(stream, true),
        (true, Problem::Fixed) => longest_run(stream, false),
        (true, Problem::Bounded) => (!stream.is_empty()).then(|| Span::new(1, stream.len())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "010110101100";

    fn stream(s: &str) -> Bitstream {
        s.parse().unwrap()
    }

    fn ratio(a: u64, b: u64) -> Ratio {
        Ratio::new(a, b).unwrap()
    }

    #[test]
    fn verify_examples() {
        let s = stream(EXAMPLE);
        assert!(verify_span(&s, ratio(3, 5), Span::new(2, 11), Problem::Fixed));
        assert!(verify_span(&s, ratio(7, 10), Span::new(4, 10), Problem::Bounded));
        assert!(!verify_span(&s, ratio(3, 5), Span::new(1, 3), Problem::Fixed));
        assert!(!verify_span(&s, ratio(3, 5), Span::new(5, 13), Problem::Fixed));
    }

    #[test]
    fn trivial_examples() {
        let s = stream(EXAMPLE);
        assert_eq!(
            trivial_extremes(&s, Ratio::ONE, Problem::Fixed).unwrap(),
            Some(Span::new(4, 5))
        );
        assert_eq!(
            trivial_extremes(&s, Ratio::ONE, Problem::Bounded).unwrap(),
            Some(Span::new(4, 5))
        );
        assert_eq!(
            trivial_extremes(&s, Ratio::ZERO, Problem::Bounded).unwrap(),
            Some(Span::new(1, 12))
        );
        assert_eq!(
            trivial_extremes(&s, Ratio::ZERO, Problem::Fixed).unwrap(),
            Some(Span::new(11, 12))
        );
        assert_eq!(
            trivial_extremes(&stream("111"), Ratio::ZERO, Problem::Fixed).unwrap(),
            None
        );
        assert_eq!(
            trivial_extremes(&stream(""), Ratio::ZERO, Problem::Bounded).unwrap(),
            None
        );
        assert!(matches!(
            trivial_extremes(&s, ratio(1, 2), Problem::Fixed),
            Err(DensityError::NonTrivialRatio { .. })
        ));
    }

    #[test]
    fn problem_names() {
        assert_eq!("fixed".parse::<Problem>(), Ok(Problem::Fixed));
        assert_eq!("bounded".parse::<Problem>(), Ok(Problem::Bounded));
        assert!("other".parse::<Problem>().is_err());
    }
}
