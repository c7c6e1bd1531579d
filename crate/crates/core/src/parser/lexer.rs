//! Tokenizer for the Java-like source subset.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Identifier,
    Keyword,
    Literal,
    Operator,
    Punctuation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` at {}:{}", self.text, self.line, self.column)
    }
}

pub const KEYWORDS: &[&str] = &[
    "class", "public", "private", "protected", "static", "final", "void", "int", "long", "double",
    "float", "boolean", "char", "byte", "short", "if", "else", "while", "for", "return", "new",
    "this",
];

pub const PRIMITIVE_TYPES: &[&str] =
    &["void", "int", "long", "double", "float", "boolean", "char", "byte", "short"];

const LITERAL_WORDS: &[&str] = &["true", "false", "null"];

// Longest match first.
const OPERATORS: &[&str] = &[
    "+=", "-=", "*=", "/=", "%=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "=", "<", ">",
    "!", "+", "-", "*", "/", "%",
];

const PUNCTUATION: &[char] = &['(', ')', '{', '}', ';', ',', '.'];

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    column: u32,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line: 1, column: 1, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c))
    }
}

/// Splits `text` into tokens. Comments and whitespace are consumed and never
/// emitted.
pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if cur.starts_with("//") {
            while let Some(c) = cur.peek() {
                if c == '\n' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        if cur.starts_with("/*") {
            cur.bump();
            cur.bump();
            loop {
                if cur.starts_with("*/") {
                    cur.bump();
                    cur.bump();
                    break;
                }
                if cur.bump().is_none() {
                    return Err(ParseError::lex("unterminated comment", line, column));
                }
            }
            continue;
        }
        let mut text = String::new();
        let kind = if c.is_ascii_alphabetic() || c == '_' {
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    text.push(c);
                    cur.bump();
                } else {
                    break;
                }
            }
            if KEYWORDS.contains(&text.as_str()) {
                TokenKind::Keyword
            } else if LITERAL_WORDS.contains(&text.as_str()) {
                TokenKind::Literal
            } else {
                TokenKind::Identifier
            }
        } else if c.is_ascii_digit() {
            lex_number(&mut cur, &mut text);
            TokenKind::Literal
        } else if c == '"' || c == '\'' {
            lex_quoted(&mut cur, &mut text, c, line, column)?;
            TokenKind::Literal
        } else if let Some(op) = OPERATORS.iter().find(|op| cur.starts_with(op)) {
            for _ in 0..op.len() {
                cur.bump();
            }
            text.push_str(op);
            TokenKind::Operator
        } else if PUNCTUATION.contains(&c) {
            cur.bump();
            text.push(c);
            TokenKind::Punctuation
        } else {
            let mut msg = String::from("unexpected character `");
            msg.push(c);
            msg.push('`');
            return Err(ParseError::lex(&msg, line, column));
        };
        out.push(Token { kind, text, line, column });
    }
    Ok(out)
}

fn lex_number(cur: &mut Cursor<'_>, text: &mut String) {
    let digits = |cur: &mut Cursor<'_>, text: &mut String| {
        while let Some(c) = cur.peek() {
            if c.is_ascii_digit() || c == '_' {
                text.push(c);
                cur.bump();
            } else {
                break;
            }
        }
    };
    digits(cur, text);
    if cur.peek() == Some('.') && cur.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
        text.push('.');
        cur.bump();
        digits(cur, text);
    }
    if let Some(c) = cur.peek() {
        if matches!(c, 'l' | 'L' | 'd' | 'D' | 'f' | 'F') {
            text.push(c);
            cur.bump();
        }
    }
}

fn lex_quoted(
    cur: &mut Cursor<'_>,
    text: &mut String,
    quote: char,
    line: u32,
    column: u32,
) -> Result<(), ParseError> {
    let what = if quote == '"' { "unterminated string literal" } else { "unterminated char literal" };
    text.push(quote);
    cur.bump();
    loop {
        match cur.peek() {
            None | Some('\n') => return Err(ParseError::lex(what, line, column)),
            Some('\\') => {
                text.push('\\');
                cur.bump();
                match cur.bump() {
                    Some('\n') | None => return Err(ParseError::lex(what, line, column)),
                    Some(c) => text.push(c),
                }
            }
            Some(c) => {
                text.push(c);
                cur.bump();
                if c == quote {
                    return Ok(());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn texts(src: &str) -> Vec<String> {
        tokenize(src).unwrap().into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn smallest_statement() {
        let toks = tokenize("int x = 1;").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Keyword,
                TokenKind::Identifier,
                TokenKind::Operator,
                TokenKind::Literal,
                TokenKind::Punctuation
            ]
        );
        assert_eq!(texts("int x = 1;"), vec!["int", "x", "=", "1", ";"]);
    }

    #[test]
    fn line_comment_dropped() {
        assert_eq!(texts("x = y + z; // c"), vec!["x", "=", "y", "+", "z", ";"]);
    }

    #[test]
    fn block_comment_and_positions() {
        let toks = tokenize("/* a\n b */ foo\n  bar").unwrap();
        assert_eq!(toks.len(), 2);
        assert_eq!((toks[0].line, toks[0].column), (2, 7));
        assert_eq!((toks[1].line, toks[1].column), (3, 3));
    }

    #[test]
    fn unterminated_forms_report_location() {
        let err = tokenize("int a;\n  /* never closed").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = tokenize("s = \"abc;\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert!(tokenize("c = 'a").is_err());
    }

    #[test]
    fn unknown_character_is_an_error() {
        let err = tokenize("int x = 1 # 2;").unwrap_err();
        assert_eq!((err.line, err.column), (1, 11));
    }

    #[test]
    fn operators_use_longest_match() {
        assert_eq!(texts("a+=b++<=c&&!d"), vec!["a", "+=", "b", "++", "<=", "c", "&&", "!", "d"]);
    }

    #[test]
    fn literals() {
        let toks = tokenize(r#"1.5 10L "a\"b" '\n' true null"#).unwrap();
        assert!(toks.iter().all(|t| t.kind == TokenKind::Literal));
        assert_eq!(toks[2].text, r#""a\"b""#);
    }
}
