//! Parsers for the surface syntax: group words like
//! `x1^-1 x2^2 x1 x2^2` with optional canonical shift suffix
//! `; [z1,...,zn]`, and automorphism words like `p[2,1,3] a[1,2] d[3]
//! e[1,2]^-2` with a postfix `'` marking formal inverses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use chw_core::auto::{AutoLetter, AutoToken, AutoWord};
use chw_core::group::{embed_a, GroupElement};
use chw_core::lattice::LatticeVector;
use chw_core::word::Permutation;

/// A syntax or validation error with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse tree of a group word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordExpr {
    pub factors: Vec<WordFactor>,
    /// Canonical shift suffix, only allowed at the top level.
    pub shift: Option<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFactor {
    pub atom: WordAtom,
    pub exponent: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordAtom {
    Generator(usize),
    Group(Box<WordExpr>),
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos,
                format!("expected '{}'", byte as char),
            ))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected digits"));
        }
        Ok(core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn unsigned(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| ParseError::new(start, "index out of range"))
    }

    /// Signed arbitrary-precision integer: `'-'? digits`.
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits()?;
        let value: BigInt = digits
            .parse()
            .map_err(|_| ParseError::new(start, "malformed integer"))?;
        Ok(if negative { -value } else { value })
    }
}

/// Parses a group word. The grammar is
/// `word := factor+`, `factor := atom ('^' int)?`,
/// `atom := 'x' digits | '(' word ')'`, with whitespace between
/// factors, plus an optional top-level canonical suffix `; [z1,...,zn]`.
/// Generator indices are validated against the rank.
pub fn parse_word(text: &str, n: usize) -> Result<WordExpr, ParseError> {
    let mut scanner = Scanner::new(text);
    let factors = parse_factors(&mut scanner, n)?;
    scanner.skip_ws();
    let shift = if scanner.peek() == Some(b';') {
        scanner.bump();
        Some(parse_shift(&mut scanner, n)?)
    } else {
        None
    };
    scanner.skip_ws();
    if !scanner.at_end() {
        return Err(ParseError::new(scanner.pos, "unexpected trailing input"));
    }
    if factors.is_empty() && shift.is_none() {
        return Err(ParseError::new(0, "empty word"));
    }
    Ok(WordExpr { factors, shift })
}

fn parse_factors(scanner: &mut Scanner, n: usize) -> Result<Vec<WordFactor>, ParseError> {
    let mut factors = Vec::new();
    loop {
        scanner.skip_ws();
        let atom = match scanner.peek() {
            Some(b'x') => {
                scanner.bump();
                let start = scanner.pos;
                let index = scanner.unsigned()?;
                if index == 0 || index > n {
                    return Err(ParseError::new(
                        start,
                        format!("generator index {index} out of range 1..={n}"),
                    ));
                }
                WordAtom::Generator(index)
            }
            Some(b'(') => {
                scanner.bump();
                let inner = parse_factors(scanner, n)?;
                scanner.skip_ws();
                scanner.expect(b')')?;
                if inner.is_empty() {
                    return Err(ParseError::new(scanner.pos, "empty parenthesized word"));
                }
                WordAtom::Group(Box::new(WordExpr {
                    factors: inner,
                    shift: None,
                }))
            }
            _ => break,
        };
        let exponent = if scanner.peek() == Some(b'^') {
            scanner.bump();
            scanner.integer()?
        } else {
            BigInt::one()
        };
        factors.push(WordFactor { atom, exponent });
    }
    Ok(factors)
}

fn parse_shift(scanner: &mut Scanner, n: usize) -> Result<Vec<BigInt>, ParseError> {
    scanner.skip_ws();
    let start = scanner.pos;
    scanner.expect(b'[')?;
    let mut coords = Vec::new();
    scanner.skip_ws();
    if scanner.peek() != Some(b']') {
        loop {
            scanner.skip_ws();
            coords.push(scanner.integer()?);
            scanner.skip_ws();
            match scanner.peek() {
                Some(b',') => {
                    scanner.bump();
                }
                Some(b']') => break,
                _ => return Err(ParseError::new(scanner.pos, "expected ',' or ']'")),
            }
        }
    }
    scanner.expect(b']')?;
    if coords.len() != n {
        return Err(ParseError::new(
            start,
            format!("shift has {} coordinates, expected {n}", coords.len()),
        ));
    }
    Ok(coords)
}

/// Evaluates a parsed word to a normal form by folding the factors.
pub fn eval_word(expr: &WordExpr, n: usize) -> chw_core::Result<GroupElement> {
    let mut result = GroupElement::identity(n);
    for factor in &expr.factors {
        let base = match &factor.atom {
            WordAtom::Generator(i) => GroupElement::generator(n, *i)?,
            WordAtom::Group(inner) => eval_word(inner, n)?,
        };
        result = result.multiply(&base.power(&factor.exponent))?;
    }
    if let Some(coords) = &expr.shift {
        result = result.multiply(&embed_a(LatticeVector::from_coords(coords.clone())))?;
    }
    Ok(result)
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, n: usize) -> Result<GroupElement, ParseError> {
    let expr = parse_word(text, n)?;
    eval_word(&expr, n).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses an automorphism word: whitespace-separated tokens `p[...]`
/// (permutation by images), `a[i,j]`, `e[i,j]` with optional integer
/// power `^k`, `d[i]`, each optionally followed by `'` for the formal
/// inverse. Written left to right; the rightmost token acts first.
pub fn parse_auto_word(text: &str, n: usize) -> Result<AutoWord, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut letters = Vec::new();
    loop {
        scanner.skip_ws();
        if scanner.at_end() {
            break;
        }
        let token_start = scanner.pos;
        let kind = scanner.bump().expect("not at end");
        if !matches!(kind, b'p' | b'a' | b'e' | b'd') {
            return Err(ParseError::new(
                token_start,
                format!("unknown token '{}'", kind as char),
            ));
        }
        scanner.expect(b'[')?;
        let mut numbers = Vec::new();
        loop {
            scanner.skip_ws();
            numbers.push((scanner.pos, scanner.unsigned()?));
            scanner.skip_ws();
            match scanner.peek() {
                Some(b',') => {
                    scanner.bump();
                }
                Some(b']') => {
                    scanner.bump();
                    break;
                }
                _ => return Err(ParseError::new(scanner.pos, "expected ',' or ']'")),
            }
        }
        let exponent = if scanner.peek() == Some(b'^') {
            if kind != b'e' {
                return Err(ParseError::new(
                    scanner.pos,
                    "integer powers are only allowed on e tokens",
                ));
            }
            scanner.bump();
            Some(scanner.integer()?)
        } else {
            None
        };
        let inverse = if scanner.peek() == Some(b'\'') {
            scanner.bump();
            true
        } else {
            false
        };

        let token = match kind {
            b'p' => {
                let images: Vec<usize> = numbers.iter().map(|&(_, v)| v).collect();
                if images.len() != n {
                    return Err(ParseError::new(
                        token_start,
                        format!("permutation lists {} images, expected {n}", images.len()),
                    ));
                }
                let sigma = Permutation::from_images(images)
                    .map_err(|e| ParseError::new(token_start, e.to_string()))?;
                AutoToken::Perm(sigma)
            }
            b'a' | b'e' => {
                let (i, j) = two_indices(&numbers, token_start, n)?;
                if kind == b'a' {
                    AutoToken::Fr { i, j }
                } else {
                    AutoToken::Eps {
                        i,
                        j,
                        exponent: exponent.unwrap_or_else(BigInt::one),
                    }
                }
            }
            b'd' => {
                if numbers.len() != 1 {
                    return Err(ParseError::new(token_start, "d takes one index"));
                }
                let (pos, i) = numbers[0];
                if i == 0 || i > n {
                    return Err(ParseError::new(
                        pos,
                        format!("generator index {i} out of range 1..={n}"),
                    ));
                }
                AutoToken::Delta { i }
            }
            _ => unreachable!("kind checked above"),
        };
        letters.push(AutoLetter { token, inverse });
    }
    AutoWord::new(n, letters).map_err(|e| ParseError::new(0, e.to_string()))
}

fn two_indices(
    numbers: &[(usize, usize)],
    token_start: usize,
    n: usize,
) -> Result<(usize, usize), ParseError> {
    if numbers.len() != 2 {
        return Err(ParseError::new(token_start, "expected two indices [i,j]"));
    }
    let (pos_i, i) = numbers[0];
    let (pos_j, j) = numbers[1];
    if i == 0 || i > n {
        return Err(ParseError::new(
            pos_i,
            format!("generator index {i} out of range 1..={n}"),
        ));
    }
    if j == 0 || j > n {
        return Err(ParseError::new(
            pos_j,
            format!("generator index {j} out of range 1..={n}"),
        ));
    }
    if i == j {
        return Err(ParseError::new(pos_j, "indices must differ"));
    }
    Ok((i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_evaluates_to_identity() {
        let g = parse_element("x1^-1 x2^2 x1 x2^2", 2).unwrap();
        assert!(g.is_identity());
        assert_eq!(g.to_string(), "; [0,0]");
    }

    #[test]
    fn parenthesized_powers() {
        let g = parse_element("(x1 x2)^2", 3).unwrap();
        assert_eq!(g.word().letters(), [1, 2, 1, 2]);
        assert!(g.shift().is_zero());
    }

    #[test]
    fn generator_cube() {
        let g = parse_element("x1^3", 2).unwrap();
        assert_eq!(g.word().letters(), [1]);
        assert_eq!(g.shift(), &LatticeVector::from_i64(&[1, 0]));
    }

    #[test]
    fn canonical_round_trip() {
        let g = parse_element("x2 x1 ; [4,-7]", 2).unwrap();
        let again = parse_element(&g.to_string(), 2).unwrap();
        assert_eq!(g, again);

        let identity = parse_element("; [0,0,0]", 3).unwrap();
        assert!(identity.is_identity());
    }

    #[test]
    fn malformed_words_rejected() {
        for bad in [
            "", "x", "x0", "x3", "x1^", "x1^^2", "(x1", "x1)", "^2", "(", ")", "x1 ; [1]",
            "x1 ; [1,2,3]", "x1 ; [1,2] x2", "x1;", "x1 ; 1,2", "()", "x1 y2", "--", "x1^-",
        ] {
            assert!(parse_word(bad, 2).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn negative_exponents_fold() {
        let g = parse_element("x2^-1", 2).unwrap();
        assert_eq!(g.word().letters(), [2]);
        assert_eq!(g.shift(), &LatticeVector::from_i64(&[0, -1]));
    }

    #[test]
    fn autoword_tokens() {
        let word = parse_auto_word("a[1,2] d[3]", 3).unwrap();
        assert_eq!(word.letters().len(), 2);
        assert_eq!(
            word.letters()[0].token,
            AutoToken::Fr { i: 1, j: 2 }
        );
        assert_eq!(word.letters()[1].token, AutoToken::Delta { i: 3 });

        let word = parse_auto_word("e[1,2]^-2", 3).unwrap();
        assert_eq!(
            word.letters()[0].token,
            AutoToken::Eps {
                i: 1,
                j: 2,
                exponent: BigInt::from(-2)
            }
        );

        let word = parse_auto_word("p[2,1,3]' a[1,2]'", 3).unwrap();
        assert!(word.letters()[0].inverse);
        assert!(word.letters()[1].inverse);
    }

    #[test]
    fn malformed_autowords_rejected() {
        for bad in [
            "a[1,1]",
            "a[1]",
            "a[1,2,3]",
            "a[0,1]",
            "a[1,4]",
            "p[1,2]",
            "p[1,1,2]",
            "d[]",
            "d[0]",
            "q[1]",
            "a[1,2]^2",
            "e[1,2]^",
            "e[1,2]''",
            "a[1,2",
            "a 1,2]",
        ] {
            assert!(parse_auto_word(bad, 3).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn autoword_composition_order_is_right_to_left() {
        // p[2,1,3] a[1,2] means: apply the conjugation first, then the
        // transposition.
        let word = parse_auto_word("p[2,1,3] a[1,2]", 3).unwrap();
        let phi = word.evaluate().unwrap();
        // x1 -> alpha_sigma(x2 x1 x2^-1) = x1 x2 x1^-1.
        let image = phi.image(1);
        assert_eq!(image.word().letters(), [1, 2, 1]);
    }

    #[test]
    fn formatting_round_trips() {
        use chw_core::word::ReducedWord;
        use proptest::prelude::*;

        proptest!(|(n in 2usize..=5, raw in prop::collection::vec(1usize..=5, 0..=8), coords in prop::collection::vec(-9i64..=9, 5))| {
            let letters: Vec<usize> = raw.into_iter().map(|l| (l - 1) % n + 1).collect();
            let word = ReducedWord::from_letters(n, letters).unwrap();
            let shift = LatticeVector::from_i64(&coords[..n]);
            let g = GroupElement::from_parts(word, shift).unwrap();
            let parsed = parse_element(&g.to_string(), n).unwrap();
            prop_assert_eq!(g, parsed);
        });
    }

    #[test]
    fn fuzzed_inputs_do_not_panic() {
        let samples = [
            "x1^-1 x2^2 x1 x2^2",
            "(x1 x2)^2 ; [1,2]",
            "x12^34 (x1 (x2)^2)^-1",
        ];
        for sample in samples {
            for cut in 0..=sample.len() {
                if sample.is_char_boundary(cut) {
                    let _ = parse_word(&sample[..cut], 2);
                }
            }
            for (pos, replacement) in ('!'..='~').enumerate().take(40) {
                let mut mutated: Vec<char> = sample.chars().collect();
                let slot = pos % mutated.len();
                mutated[slot] = replacement;
                let text: String = mutated.into_iter().collect();
                let _ = parse_word(&text, 2);
            }
        }
        let samples = ["p[2,1,3] a[1,2] e[1,2]^-2 d[3]'"];
        for sample in samples {
            for cut in 0..=sample.len() {
                let _ = parse_auto_word(&sample[..cut], 3);
            }
        }
    }
}
