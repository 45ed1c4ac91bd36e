//! Standard-form braid words for plats.
//!
//! A grid is read row by row as b_1 b_2 ... b_{n-1}. Odd rows contribute
//! sigma_2^{a_{i,1}} ... sigma_{2m-2}^{a_{i,m-1}}, even rows
//! sigma_1^{a_{i,1}} ... sigma_{2m-1}^{a_{i,m}}. Zero exponents are dropped.
//!
//! Text form: whitespace-separated `s<k>^<e>` tokens, e.g. `s2^-3 s4^-4`.

use std::fmt;

use thiserror::Error;

use crate::plat::{row_width, PlatGrid, ValidationError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub generator: usize,
    pub exponent: i64,
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}^{}", self.generator, self.exponent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("SyntaxError: at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("SyntaxError: generator s{generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("SyntaxError: zero exponent on s{generator}")]
    ZeroExponent { generator: usize },
    #[error("ShapeError: a plat needs an even number of strands, at least 4 (got {strands})")]
    StrandCount { strands: usize },
    #[error("NotStandardForm: letter {index} ({letter}) does not fit the alternating even/odd row pattern")]
    NotStandardForm { index: usize, letter: BraidLetter },
    #[error("AmbiguousLength: the plat length cannot be inferred from this word; supply n")]
    AmbiguousLength,
    #[error("{0}")]
    Invalid(#[from] ValidationError),
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        for l in &letters {
            if l.generator == 0 || l.generator >= strands {
                return Err(BraidError::GeneratorOutOfRange { generator: l.generator, strands });
            }
            if l.exponent == 0 {
                return Err(BraidError::ZeroExponent { generator: l.generator });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses `s<k>^<e>` tokens for a braid on `strands` strands.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for (position, token) in tokens(text) {
            let letter = parse_token(token, position)?;
            if letter.generator == 0 || letter.generator >= strands {
                return Err(BraidError::Syntax {
                    position,
                    message: format!("generator s{} out of range 1..{}", letter.generator, strands.saturating_sub(1)),
                });
            }
            letters.push(letter);
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

fn parse_token(token: &str, position: usize) -> Result<BraidLetter, BraidError> {
    let err = |message: String| BraidError::Syntax { position, message };
    let rest = token.strip_prefix('s').ok_or_else(|| err(format!("expected `s<k>^<e>`, found `{token}`")))?;
    let (generator, exponent) = rest.split_once('^').ok_or_else(|| err(format!("missing `^<e>` in `{token}`")))?;
    if generator.is_empty() || !generator.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("bad generator in `{token}`")));
    }
    let generator: usize = generator.parse().map_err(|_| err(format!("bad generator in `{token}`")))?;
    let exponent: i64 = exponent.parse().map_err(|_| err(format!("bad exponent in `{token}`")))?;
    if exponent == 0 {
        return Err(err(format!("zero exponent in `{token}`")));
    }
    Ok(BraidLetter { generator, exponent })
}

/// Parses a braid word; see [`BraidWord::parse`].
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    BraidWord::parse(text, strands)
}

pub fn serialize_braid(word: &BraidWord) -> String {
    word.to_string()
}

/// The standard-form word b_1 ... b_{n-1} of a grid.
pub fn to_braid_word(grid: &PlatGrid) -> BraidWord {
    let mut letters = Vec::with_capacity(grid.twist_region_count());
    for (idx, row) in grid.rows().iter().enumerate() {
        let i = idx + 1;
        for (jdx, &a) in row.iter().enumerate() {
            if a != 0 {
                letters.push(BraidLetter { generator: PlatGrid::generator(i, jdx + 1), exponent: a });
            }
        }
    }
    BraidWord { strands: grid.strands(), letters }
}

/// Factors a standard-form word back into a standard plat grid.
///
/// With `n` given, letters are placed greedily in the earliest row that can
/// take them, so empty rows may be inserted; trailing rows are zero-filled.
/// Without `n`, every row must be non-empty and the row count must come out
/// odd, otherwise the length is ambiguous.
pub fn from_braid_word(word: &BraidWord, n: Option<usize>) -> Result<PlatGrid, BraidError> {
    let strands = word.strands();
    if strands < 4 || !strands.is_multiple_of(2) {
        return Err(BraidError::StrandCount { strands });
    }
    let m = strands / 2;
    let row_limit = n.map(|n| n.saturating_sub(1));

    let mut rows: Vec<Vec<i64>> = vec![vec![0; row_width(m, 1)]];
    let mut last_col: Option<usize> = None;
    for (index, &letter) in word.letters().iter().enumerate() {
        let g = letter.generator;
        let even_gen = g % 2 == 0;
        let col = if even_gen { g / 2 } else { g.div_ceil(2) };
        loop {
            let i = rows.len();
            let row_takes_even = i % 2 == 1;
            let fits = row_takes_even == even_gen && last_col.is_none_or(|c| col > c);
            if fits {
                rows[i - 1][col - 1] = letter.exponent;
                last_col = Some(col);
                break;
            }
            // moving on would leave the current row empty
            let current_empty = last_col.is_none();
            if n.is_none() && current_empty {
                return Err(BraidError::NotStandardForm { index, letter });
            }
            if row_limit.is_some_and(|lim| i >= lim) {
                return Err(BraidError::NotStandardForm { index, letter });
            }
            rows.push(vec![0; row_width(m, i + 1)]);
            last_col = None;
        }
    }

    let n = match n {
        Some(n) => {
            while rows.len() < n.saturating_sub(1) {
                let i = rows.len() + 1;
                rows.push(vec![0; row_width(m, i)]);
            }
            n
        }
        None => {
            if word.is_empty() || rows.len().is_multiple_of(2) {
                return Err(BraidError::AmbiguousLength);
            }
            rows.len() + 1
        }
    };
    Ok(PlatGrid::standard(m, n, rows)?)
}
