//! Recursive-descent parser producing an ordered concrete syntax tree.
//!
//! Every token becomes exactly one leaf, so reading the leaves left to right
//! reproduces the token stream.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::ast::{Ast, Tree};
use super::lexer::{Token, TokenKind, PRIMITIVE_TYPES};
use super::ParseError;
use crate::graph::{Construct, Span};

const MODIFIERS: &[&str] = &["public", "private", "protected", "static", "final"];
const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%="];

/// Parses a token stream into a syntax tree rooted at a `CompilationUnit`.
pub fn parse(tokens: &[Token]) -> Result<Ast, ParseError> {
    let mut p = Parser { tokens, pos: 0 };
    let unit = p.compilation_unit()?;
    Ok(unit.into_ast())
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&'t Token> {
        self.tokens.get(self.pos + offset)
    }

    fn at(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.text == text && t.kind != TokenKind::Literal)
    }

    fn at_kind(&self, kind: TokenKind) -> bool {
        self.peek().is_some_and(|t| t.kind == kind)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let expected: Vec<String> = expected.iter().map(|s| String::from(*s)).collect();
        match self.peek() {
            Some(t) => ParseError {
                message: format!("unexpected `{}`", t.text),
                expected,
                line: t.line,
                column: t.column,
            },
            None => {
                let (line, column) = self
                    .tokens
                    .last()
                    .map(|t| (t.line, t.column + t.text.chars().count() as u32))
                    .unwrap_or((1, 1));
                ParseError { message: "unexpected end of input".into(), expected, line, column }
            }
        }
    }

    fn bump(&mut self, construct: Construct) -> Tree {
        let t = &self.tokens[self.pos];
        self.pos += 1;
        Tree::leaf(construct, t.text.clone(), Span { line: t.line, column: t.column })
    }

    /// Consumes a keyword/operator/punctuation token as a `Token:` leaf.
    fn bump_token(&mut self) -> Tree {
        let text = &self.tokens[self.pos].text;
        let c = Construct::token(text).unwrap_or_else(|| Construct::named("Token:;"));
        self.bump(c)
    }

    fn expect(&mut self, text: &str) -> Result<Tree, ParseError> {
        if self.at(text) {
            Ok(self.bump_token())
        } else {
            Err(self.error(&[text]))
        }
    }

    fn expect_ident(&mut self, label: &str) -> Result<Tree, ParseError> {
        if self.at_kind(TokenKind::Identifier) {
            Ok(self.bump(Construct::named(label)))
        } else {
            Err(self.error(&["identifier"]))
        }
    }

    fn at_type_start(&self) -> bool {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Keyword => PRIMITIVE_TYPES.contains(&t.text.as_str()),
            Some(t) => t.kind == TokenKind::Identifier,
            None => false,
        }
    }

    fn type_ref(&mut self) -> Result<Tree, ParseError> {
        if self.at_type_start() {
            Ok(self.bump(Construct::named("TypeRef")))
        } else {
            Err(self.error(&["type"]))
        }
    }

    fn compilation_unit(&mut self) -> Result<Tree, ParseError> {
        let mut classes = Vec::new();
        while self.peek().is_some() {
            classes.push(self.class_decl()?);
        }
        if classes.is_empty() {
            return Err(self.error(&["class"]));
        }
        Ok(Tree::inner("CompilationUnit", classes))
    }

    fn modifiers(&mut self, out: &mut Vec<Tree>) {
        while self.peek().is_some_and(|t| MODIFIERS.contains(&t.text.as_str())) {
            out.push(self.bump_token());
        }
    }

    fn class_decl(&mut self) -> Result<Tree, ParseError> {
        let mut kids = Vec::new();
        self.modifiers(&mut kids);
        kids.push(self.expect("class")?);
        let name = self.expect_ident("ClassName")?;
        let class_name = name.text.clone().unwrap_or_default();
        kids.push(name);
        kids.push(self.expect("{")?);
        while !self.at("}") {
            if self.peek().is_none() {
                return Err(self.error(&["}"]));
            }
            kids.push(self.member(&class_name)?);
        }
        kids.push(self.expect("}")?);
        Ok(Tree::inner("ClassDecl", kids))
    }

    fn member(&mut self, class_name: &str) -> Result<Tree, ParseError> {
        let mut kids = Vec::new();
        self.modifiers(&mut kids);
        let is_ctor = self.peek().is_some_and(|t| t.kind == TokenKind::Identifier && t.text == class_name)
            && self.peek_at(1).is_some_and(|t| t.text == "(");
        if is_ctor {
            kids.push(self.bump(Construct::named("ConstructorName")));
            self.parameters(&mut kids)?;
            kids.push(self.block()?);
            return Ok(Tree::inner("ConstructorDecl", kids));
        }
        kids.push(self.type_ref()?);
        if self.at_kind(TokenKind::Identifier) && self.peek_at(1).is_some_and(|t| t.text == "(") {
            kids.push(self.bump(Construct::named("MethodName")));
            self.parameters(&mut kids)?;
            kids.push(self.block()?);
            return Ok(Tree::inner("MethodDecl", kids));
        }
        kids.push(self.expect_ident("FieldName")?);
        if self.at("=") {
            kids.push(self.bump_token());
            kids.push(self.expression()?);
        }
        kids.push(self.expect(";")?);
        Ok(Tree::inner("FieldDecl", kids))
    }

    fn parameters(&mut self, kids: &mut Vec<Tree>) -> Result<(), ParseError> {
        kids.push(self.expect("(")?);
        if !self.at(")") {
            loop {
                let ty = self.type_ref()?;
                let name = self.expect_ident("ParamName")?;
                kids.push(Tree::inner("Parameter", vec![ty, name]));
                if self.at(",") {
                    kids.push(self.bump_token());
                } else {
                    break;
                }
            }
        }
        kids.push(self.expect(")")?);
        Ok(())
    }

    fn block(&mut self) -> Result<Tree, ParseError> {
        let mut kids = vec![self.expect("{")?];
        while !self.at("}") {
            if self.peek().is_none() {
                return Err(self.error(&["}"]));
            }
            kids.push(self.statement()?);
        }
        kids.push(self.expect("}")?);
        Ok(Tree::inner("Block", kids))
    }

    fn at_local_decl(&self) -> bool {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Keyword => PRIMITIVE_TYPES.contains(&t.text.as_str()),
            // `Foo x` needs one extra token of lookahead
            Some(t) if t.kind == TokenKind::Identifier => {
                self.peek_at(1).is_some_and(|n| n.kind == TokenKind::Identifier)
            }
            _ => false,
        }
    }

    fn statement(&mut self) -> Result<Tree, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.error(&["statement"]));
        };
        if tok.kind != TokenKind::Literal {
            match tok.text.as_str() {
                "{" => return self.block(),
                "if" => return self.if_stmt(),
                "while" => return self.while_stmt(),
                "for" => return self.for_stmt(),
                "return" => return self.return_stmt(),
                ";" => return Ok(Tree::inner("EmptyStmt", vec![self.bump_token()])),
                _ => {}
            }
        }
        if self.at_local_decl() {
            return self.var_decl();
        }
        self.expr_stmt()
    }

    fn var_decl(&mut self) -> Result<Tree, ParseError> {
        let mut kids = vec![self.type_ref()?, self.expect_ident("LocalName")?];
        if self.at("=") {
            kids.push(self.bump_token());
            kids.push(self.expression()?);
        }
        kids.push(self.expect(";")?);
        Ok(Tree::inner("VarDecl", kids))
    }

    fn expr_stmt(&mut self) -> Result<Tree, ParseError> {
        let e = self.expression()?;
        let semi = self.expect(";")?;
        Ok(Tree::inner("ExprStmt", vec![e, semi]))
    }

    fn if_stmt(&mut self) -> Result<Tree, ParseError> {
        let mut kids = vec![self.bump_token(), self.expect("(")?, self.expression()?, self.expect(")")?];
        kids.push(self.statement()?);
        if self.at("else") {
            kids.push(self.bump_token());
            kids.push(self.statement()?);
        }
        Ok(Tree::inner("If", kids))
    }

    fn while_stmt(&mut self) -> Result<Tree, ParseError> {
        let kids = vec![
            self.bump_token(),
            self.expect("(")?,
            self.expression()?,
            self.expect(")")?,
            self.statement()?,
        ];
        Ok(Tree::inner("While", kids))
    }

    fn for_stmt(&mut self) -> Result<Tree, ParseError> {
        let mut kids = vec![self.bump_token(), self.expect("(")?];
        let init = if self.at(";") {
            Tree::inner("EmptyStmt", vec![self.bump_token()])
        } else if self.at_local_decl() {
            self.var_decl()?
        } else {
            self.expr_stmt()?
        };
        kids.push(init);
        if !self.at(";") {
            kids.push(self.expression()?);
        }
        kids.push(self.expect(";")?);
        if !self.at(")") {
            kids.push(self.expression()?);
        }
        kids.push(self.expect(")")?);
        kids.push(self.statement()?);
        Ok(Tree::inner("For", kids))
    }

    fn return_stmt(&mut self) -> Result<Tree, ParseError> {
        let mut kids = vec![self.bump_token()];
        if !self.at(";") {
            kids.push(self.expression()?);
        }
        kids.push(self.expect(";")?);
        Ok(Tree::inner("Return", kids))
    }

    fn expression(&mut self) -> Result<Tree, ParseError> {
        let lhs = self.binary(0)?;
        if self.peek().is_some_and(|t| t.kind == TokenKind::Operator && ASSIGN_OPS.contains(&t.text.as_str())) {
            if !matches!(lhs.label(), "NameUse" | "FieldAccess") {
                return Err(self.error(&["assignable expression before assignment"]));
            }
            let op = self.bump_token();
            let rhs = self.expression()?;
            return Ok(Tree::inner("Assign", vec![lhs, op, rhs]));
        }
        Ok(lhs)
    }

    fn binary(&mut self, level: usize) -> Result<Tree, ParseError> {
        const LEVELS: &[&[&str]] = &[
            &["||"],
            &["&&"],
            &["==", "!="],
            &["<", ">", "<=", ">="],
            &["+", "-"],
            &["*", "/", "%"],
        ];
        if level == LEVELS.len() {
            return self.unary();
        }
        let mut lhs = self.binary(level + 1)?;
        while self
            .peek()
            .is_some_and(|t| t.kind == TokenKind::Operator && LEVELS[level].contains(&t.text.as_str()))
        {
            let op = self.bump_token();
            let rhs = self.binary(level + 1)?;
            lhs = Tree::inner("BinaryOp", vec![lhs, op, rhs]);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Tree, ParseError> {
        if self
            .peek()
            .is_some_and(|t| t.kind == TokenKind::Operator && matches!(t.text.as_str(), "!" | "-" | "+" | "++" | "--"))
        {
            let op = self.bump_token();
            let operand = self.unary()?;
            return Ok(Tree::inner("UnaryOp", vec![op, operand]));
        }
        let e = self.postfix()?;
        if self.at("++") || self.at("--") {
            let op = self.bump_token();
            return Ok(Tree::inner("PostfixOp", vec![e, op]));
        }
        Ok(e)
    }

    fn postfix(&mut self) -> Result<Tree, ParseError> {
        let mut e = self.primary()?;
        while self.at(".") {
            let dot = self.bump_token();
            if self.at_kind(TokenKind::Identifier) && self.peek_at(1).is_some_and(|t| t.text == "(") {
                let mut kids = vec![e, dot, self.bump(Construct::named("CalleeName"))];
                self.arguments(&mut kids)?;
                e = Tree::inner("Call", kids);
            } else {
                let member = self.expect_ident("MemberName")?;
                e = Tree::inner("FieldAccess", vec![e, dot, member]);
            }
        }
        Ok(e)
    }

    fn arguments(&mut self, kids: &mut Vec<Tree>) -> Result<(), ParseError> {
        kids.push(self.expect("(")?);
        if !self.at(")") {
            loop {
                kids.push(self.expression()?);
                if self.at(",") {
                    kids.push(self.bump_token());
                } else {
                    break;
                }
            }
        }
        kids.push(self.expect(")")?);
        Ok(())
    }

    fn primary(&mut self) -> Result<Tree, ParseError> {
        const EXPECTED: &[&str] = &["identifier", "literal", "this", "new", "("];
        let Some(tok) = self.peek() else {
            return Err(self.error(EXPECTED));
        };
        match tok.kind {
            TokenKind::Literal => {
                let label = literal_label(&tok.text);
                Ok(self.bump(Construct::named(label)))
            }
            TokenKind::Identifier => {
                if self.peek_at(1).is_some_and(|t| t.text == "(") {
                    let mut kids = vec![self.bump(Construct::named("CalleeName"))];
                    self.arguments(&mut kids)?;
                    Ok(Tree::inner("Call", kids))
                } else {
                    Ok(self.bump(Construct::named("NameUse")))
                }
            }
            TokenKind::Keyword if tok.text == "this" => Ok(self.bump(Construct::named("This"))),
            TokenKind::Keyword if tok.text == "new" => {
                let mut kids = vec![self.bump_token(), self.type_ref()?];
                self.arguments(&mut kids)?;
                Ok(Tree::inner("New", kids))
            }
            TokenKind::Punctuation if tok.text == "(" => {
                let kids = vec![self.bump_token(), self.expression()?, self.expect(")")?];
                Ok(Tree::inner("Paren", kids))
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}

fn literal_label(text: &str) -> &'static str {
    match text {
        "true" | "false" => "BoolLiteral",
        "null" => "NullLiteral",
        _ if text.starts_with('"') => "StringLiteral",
        _ if text.starts_with('\'') => "CharLiteral",
        _ if text.contains('.') || text.ends_with(['d', 'D', 'f', 'F']) => "DoubleLiteral",
        _ => "IntLiteral",
    }
}
