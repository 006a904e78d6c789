//! Matcher tokens.
//!
//! Hangul is split syllable by syllable so that dictionary surfaces and
//! graph literals can align below the word level; Latin words and digit
//! runs stay whole; every punctuation character stands alone; whitespace
//! runs collapse into a single boundary token that keeps its exact text.
//! Concatenating all token texts reproduces the input.

use unicode_normalization::UnicodeNormalization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Syllable,
    LatinWord,
    DigitRun,
    Punct,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Start position in chars of the normalized input.
    pub offset: usize,
}

impl Token {
    pub fn is_boundary(&self) -> bool {
        self.kind == TokenKind::Boundary
    }

    /// Length in chars.
    pub fn len(&self) -> usize {
        self.text.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }
}

/// Composed-form normalization applied to every piece of text on load.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

fn is_hangul(c: char) -> bool {
    matches!(c,
        '\u{AC00}'..='\u{D7A3}'   // precomposed syllables
        | '\u{1100}'..='\u{11FF}' // jamo
        | '\u{3130}'..='\u{318F}' // compatibility jamo
        | '\u{A960}'..='\u{A97F}'
        | '\u{D7B0}'..='\u{D7FF}')
}

fn class_of(c: char) -> TokenKind {
    if is_hangul(c) {
        TokenKind::Syllable
    } else if c.is_whitespace() {
        TokenKind::Boundary
    } else if c.is_alphabetic() {
        TokenKind::LatinWord
    } else if c.is_numeric() {
        TokenKind::DigitRun
    } else {
        TokenKind::Punct
    }
}

/// Split (already normalized) text into matcher tokens.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut run = String::new();
    let mut run_kind = TokenKind::Punct;
    let mut run_offset = 0usize;
    let mut pos = 0usize;

    let mut flush = |run: &mut String, kind: TokenKind, offset: usize, out: &mut Vec<Token>| {
        if !run.is_empty() {
            out.push(Token {
                kind,
                text: std::mem::take(run),
                offset,
            });
        }
    };

    for c in text.chars() {
        let kind = class_of(c);
        let extends = !run.is_empty()
            && kind == run_kind
            && matches!(kind, TokenKind::LatinWord | TokenKind::DigitRun | TokenKind::Boundary);
        if extends {
            run.push(c);
        } else {
            flush(&mut run, run_kind, run_offset, &mut tokens);
            run.push(c);
            run_kind = kind;
            run_offset = pos;
        }
        pos += 1;
    }
    flush(&mut run, run_kind, run_offset, &mut tokens);
    tokens
}

/// Rebuild the exact input from a token slice.
pub fn detokenize(tokens: &[Token]) -> String {
    tokens.iter().map(|t| t.text.as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(tokens: &[Token]) -> Vec<&str> {
        tokens.iter().map(|t| t.text.as_str()).collect()
    }

    #[test]
    fn hangul_splits_per_syllable() {
        let toks = tokenize("기장이 짧네요");
        assert_eq!(texts(&toks), vec!["기", "장", "이", " ", "짧", "네", "요"]);
        assert_eq!(toks[3].kind, TokenKind::Boundary);
        assert_eq!(toks[4].offset, 4);
    }

    #[test]
    fn empty_input_yields_no_tokens() {
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn latin_and_digit_runs_stay_whole() {
        let toks = tokenize("size 55");
        assert_eq!(texts(&toks), vec!["size", " ", "55"]);
        assert_eq!(toks[0].kind, TokenKind::LatinWord);
        assert_eq!(toks[2].kind, TokenKind::DigitRun);
    }

    #[test]
    fn punctuation_is_split_per_char() {
        let toks = tokenize("좋아요!!");
        assert_eq!(texts(&toks), vec!["좋", "아", "요", "!", "!"]);
        assert_eq!(toks[3].kind, TokenKind::Punct);
    }

    #[test]
    fn whitespace_runs_collapse_to_one_boundary() {
        let toks = tokenize("a  \tb");
        assert_eq!(texts(&toks), vec!["a", "  \t", "b"]);
        assert_eq!(toks.len(), 3);
    }

    #[test]
    fn detokenize_restores_input() {
        for s in ["기장이 약간 짧네요.", "  spaced  out  ", "사이즈55!", ""] {
            assert_eq!(detokenize(&tokenize(s)), s);
        }
    }

    #[test]
    fn normalize_composes_jamo() {
        // decomposed 기 (U+1100 U+1175) composes to the precomposed syllable
        let decomposed = "\u{1100}\u{1175}";
        assert_eq!(normalize(decomposed), "기");
    }
}
