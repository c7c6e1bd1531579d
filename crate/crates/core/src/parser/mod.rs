//! Lexing, parsing and name resolution for the Java-like source subset, and
//! conversion of the resulting syntax tree into a [`CodeGraph`].
//!
//! Source files use the `.java` extension. The accepted subset covers classes
//! with fields, methods and constructors; local declarations, assignment,
//! `if`/`else`, `while`, `for`, `return` and expression statements; binary and
//! unary operators, calls, `new`, field access and literals. Arrays, generics,
//! casts, lambdas, interfaces and exceptions are not supported.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::CodeGraph;

pub mod ast;
pub mod lexer;
mod parse;
mod resolve;
mod to_graph;

pub use ast::{Ast, AstNode};
pub use lexer::{tokenize, Token, TokenKind};
pub use parse::parse;
pub use resolve::resolve;
pub use to_graph::ast_to_graph;

/// File extension of accepted source files.
pub const SOURCE_EXTENSION: &str = "java";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// Tokens or token classes that would have been accepted here.
    pub expected: Vec<String>,
    pub line: u32,
    pub column: u32,
}

impl ParseError {
    pub(crate) fn lex(message: &str, line: u32, column: u32) -> ParseError {
        ParseError { message: message.into(), expected: Vec::new(), line, column }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}

/// Tokenizes, parses and resolves `text`.
pub fn parse_source(text: &str) -> Result<Ast, ParseError> {
    let tokens = tokenize(text)?;
    let mut ast = parse(&tokens)?;
    resolve(&mut ast);
    Ok(ast)
}

/// Parses `text` straight to a graph with `AST` and `NEXT_TOKEN` edges.
pub fn source_to_graph(text: &str) -> Result<CodeGraph, ParseError> {
    Ok(ast_to_graph(&parse_source(text)?))
}
