//! Text format for codes.
//!
//! ```text
//! # the running example
//! n=3
//! 000
//! 010
//! {3}
//! 12
//! 101
//! ```
//!
//! The first non-comment line must be `n=<k>`. Each further line holds one
//! word, either as a binary string of length `n` (position `i` is neuron
//! `i`), a braced comma list (`{2,11}`, `{}` for the empty word), or, when
//! `n ≤ 9`, bare digits (`12`). A line made only of `0`/`1` characters and
//! exactly `n` long is read as binary. `#` starts a comment.

use crate::code::{Code, Codeword, MAX_NEURONS};
use crate::error::{Error, Result};

/// One word literal as written, with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordLiteral {
    pub line: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeDocument {
    pub n: usize,
    pub words: Vec<WordLiteral>,
    /// File path or `<stdin>`/`<inline>`.
    pub source: String,
    header_line: usize,
}

/// A successfully parsed code plus non-fatal diagnostics.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub code: Code,
    pub warnings: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

impl CodeDocument {
    /// Splits `text` into header and word literals; words are not yet
    /// interpreted.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n=<k>` header"))?;
        let value = header
            .strip_prefix("n")
            .map(str::trim_start)
            .and_then(|h| h.strip_prefix('='))
            .ok_or_else(|| parse_error(header_line, format!("expected `n=<k>`, found `{header}`")))?;
        let n: usize = value
            .trim()
            .parse()
            .map_err(|_| parse_error(header_line, format!("bad neuron count `{}`", value.trim())))?;
        if n == 0 || n > MAX_NEURONS {
            return Err(parse_error(header_line, format!("neuron count {n} out of range 1..={MAX_NEURONS}")));
        }

        let words = lines.map(|(line, text)| WordLiteral { line, text: text.to_string() }).collect();
        Ok(CodeDocument { n, words, source: source.into(), header_line })
    }

    /// Interprets every literal and builds the code.
    pub fn to_code(&self) -> Result<Parsed> {
        let mut seen = Vec::with_capacity(self.words.len());
        let mut warnings = Vec::new();
        for lit in &self.words {
            let w = parse_word(&lit.text, self.n).map_err(|m| parse_error(lit.line, m))?;
            if seen.contains(&w) {
                warnings.push(format!("{}:{}: duplicate word `{}` ignored", self.source, lit.line, lit.text));
            } else {
                seen.push(w);
            }
        }
        let code = Code::new(self.n, seen).map_err(|e| match e {
            Error::EmptyCode => parse_error(self.header_line, "the code is empty"),
            Error::FullCode(n) => parse_error(self.header_line, format!("the code is all of 2^[{n}]")),
            other => other,
        })?;
        Ok(Parsed { code, warnings })
    }
}

fn parse_word(text: &str, n: usize) -> std::result::Result<Codeword, String> {
    let neurons: Vec<usize> = if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad neuron `{t}` in `{text}`")))
            .collect::<std::result::Result<_, _>>()?
    } else if text.len() == n && text.chars().all(|c| c == '0' || c == '1') {
        text.chars().enumerate().filter(|&(_, c)| c == '1').map(|(i, _)| i + 1).collect()
    } else if n <= 9 && text.chars().all(|c| c.is_ascii_digit()) {
        text.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    } else {
        return Err(format!("unrecognised word `{text}`"));
    };
    if let Some(&bad) = neurons.iter().find(|&&i| i == 0 || i > n) {
        return Err(format!("neuron {bad} out of range 1..={n} in `{text}`"));
    }
    Ok(Codeword::from_neurons(neurons).expect("range checked"))
}

/// Parses a whole document into a code.
pub fn parse_code(text: &str) -> Result<Code> {
    Ok(CodeDocument::parse(text, "<inline>")?.to_code()?.code)
}

/// Canonical rendering: header, then one binary word per line, ascending.
pub fn render_code(code: &Code) -> String {
    let n = code.n();
    let mut out = format!("n={n}\n");
    for w in code.words() {
        out.extend((1..=n).map(|i| if w.contains(i) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}
