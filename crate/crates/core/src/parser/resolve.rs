//! Name resolution over a parsed [`Ast`].
//!
//! Classes, fields and methods are visible throughout the unit. Parameters and
//! locals follow lexical block scoping; an inner declaration shadows an outer
//! one and a local is visible only after its declaration.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::ast::Ast;
use crate::graph::{Entity, NodeId};

#[derive(Clone, Debug, Default)]
struct ClassInfo {
    decl: NodeId,
    fields: BTreeMap<String, (NodeId, String)>,
    methods: BTreeMap<String, (NodeId, String)>,
}

#[derive(Clone, Debug)]
struct Binding {
    decl: NodeId,
    entity: Entity,
    type_name: String,
}

/// Annotates every identifier leaf with its declaration, entity kind and
/// declared type. Unresolvable names are left with `decl == None`.
pub fn resolve(ast: &mut Ast) {
    let classes = collect_classes(ast);
    let root = ast.root();
    let class_ids: Vec<NodeId> = ast.node(root).children.clone();
    for class in class_ids {
        let Some(name_id) = ast.child_with(class, "ClassName") else { continue };
        let class_name = ast.node(name_id).text.clone().unwrap_or_default();
        let mut r = Resolver { classes: &classes, class_name, scopes: Vec::new() };
        let members = ast.node(class).children.clone();
        for m in members {
            match ast.label(m) {
                "FieldDecl" => r.member_header(ast, m),
                "MethodDecl" | "ConstructorDecl" => r.method(ast, m),
                _ => {}
            }
        }
    }
}

fn collect_classes(ast: &mut Ast) -> BTreeMap<String, ClassInfo> {
    let mut classes = BTreeMap::new();
    let root = ast.root();
    for class in ast.node(root).children.clone() {
        let Some(name_id) = ast.child_with(class, "ClassName") else { continue };
        let class_name = ast.node(name_id).text.clone().unwrap_or_default();
        declare(ast, name_id, Entity::Class, &class_name);
        let mut info = ClassInfo { decl: name_id, ..Default::default() };
        for m in ast.node(class).children.clone() {
            let label = ast.label(m);
            if label != "FieldDecl" && label != "MethodDecl" {
                continue;
            }
            let ty = ast
                .child_with(m, "TypeRef")
                .and_then(|t| ast.node(t).text.clone())
                .unwrap_or_default();
            let (name_label, entity) =
                if label == "FieldDecl" { ("FieldName", Entity::Field) } else { ("MethodName", Entity::Method) };
            let Some(n) = ast.child_with(m, name_label) else { continue };
            let name = ast.node(n).text.clone().unwrap_or_default();
            declare(ast, n, entity, &ty);
            let table = if entity == Entity::Field { &mut info.fields } else { &mut info.methods };
            // first declaration wins for duplicate names
            table.entry(name).or_insert((n, ty));
        }
        classes.entry(class_name).or_insert(info);
    }
    classes
}

fn declare(ast: &mut Ast, id: NodeId, entity: Entity, type_name: &str) {
    let n = ast.node_mut(id);
    n.decl = Some(id);
    n.entity = Some(entity);
    n.type_name = Some(type_name.into());
}

fn bind(ast: &mut Ast, id: NodeId, decl: NodeId, entity: Entity, type_name: &str) {
    let n = ast.node_mut(id);
    n.decl = Some(decl);
    n.entity = Some(entity);
    n.type_name = Some(type_name.into());
}

struct Resolver<'c> {
    classes: &'c BTreeMap<String, ClassInfo>,
    class_name: String,
    scopes: Vec<BTreeMap<String, Binding>>,
}

impl<'c> Resolver<'c> {
    fn current_class(&self) -> Option<&'c ClassInfo> {
        self.classes.get(&self.class_name)
    }

    fn lookup_local(&self, name: &str) -> Option<&Binding> {
        self.scopes.iter().rev().find_map(|s| s.get(name))
    }

    fn member_header(&mut self, ast: &mut Ast, member: NodeId) {
        // field initializers see fields, methods and classes but no locals
        for c in ast.node(member).children.clone() {
            if !matches!(ast.label(c), "TypeRef" | "FieldName") {
                self.expr(ast, c);
            }
        }
    }

    fn method(&mut self, ast: &mut Ast, method: NodeId) {
        self.scopes.push(BTreeMap::new());
        for c in ast.node(method).children.clone() {
            match ast.label(c) {
                "Parameter" => {
                    let ty = ast
                        .child_with(c, "TypeRef")
                        .and_then(|t| ast.node(t).text.clone())
                        .unwrap_or_default();
                    if let Some(n) = ast.child_with(c, "ParamName") {
                        self.declare_local(ast, n, Entity::Param, &ty);
                    }
                }
                "ConstructorName" => {
                    if let Some(info) = self.current_class() {
                        let name = self.class_name.clone();
                        bind(ast, c, info.decl, Entity::Class, &name);
                    }
                }
                "Block" => self.stmt(ast, c),
                _ => {}
            }
        }
        self.scopes.pop();
    }

    fn declare_local(&mut self, ast: &mut Ast, id: NodeId, entity: Entity, ty: &str) {
        declare(ast, id, entity, ty);
        let name = ast.node(id).text.clone().unwrap_or_default();
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name, Binding { decl: id, entity, type_name: ty.into() });
        }
    }

    fn stmt(&mut self, ast: &mut Ast, id: NodeId) {
        let children = ast.node(id).children.clone();
        match ast.label(id) {
            "Block" => {
                self.scopes.push(BTreeMap::new());
                for c in children {
                    self.stmt(ast, c);
                }
                self.scopes.pop();
            }
            "For" => {
                self.scopes.push(BTreeMap::new());
                for c in children {
                    self.stmt(ast, c);
                }
                self.scopes.pop();
            }
            "VarDecl" => {
                let ty = ast
                    .child_with(id, "TypeRef")
                    .and_then(|t| ast.node(t).text.clone())
                    .unwrap_or_default();
                // the initializer is resolved before the name comes into scope
                for &c in &children {
                    if !matches!(ast.label(c), "TypeRef" | "LocalName") {
                        self.expr(ast, c);
                    }
                }
                if let Some(n) = ast.child_with(id, "LocalName") {
                    self.declare_local(ast, n, Entity::Local, &ty);
                }
            }
            "If" | "While" | "Return" | "ExprStmt" | "EmptyStmt" => {
                for c in children {
                    if is_statement(ast.label(c)) {
                        self.stmt(ast, c);
                    } else {
                        self.expr(ast, c);
                    }
                }
            }
            _ => self.expr(ast, id),
        }
    }

    fn expr(&mut self, ast: &mut Ast, id: NodeId) {
        let children = ast.node(id).children.clone();
        match ast.label(id) {
            "NameUse" => self.name_use(ast, id),
            "Call" => {
                let callee_pos = children.iter().position(|&c| ast.label(c) == "CalleeName");
                if let Some(pos) = callee_pos {
                    let callee = children[pos];
                    if pos == 0 {
                        if let Some(info) = self.current_class() {
                            self.bind_member(ast, callee, info, false);
                        }
                    } else {
                        let recv = children[0];
                        self.expr(ast, recv);
                        if let Some(info) = self.receiver_class(ast, recv) {
                            self.bind_member(ast, callee, info, false);
                        }
                    }
                    for &c in &children[pos + 1..] {
                        self.expr(ast, c);
                    }
                }
            }
            "FieldAccess" => {
                let recv = children[0];
                self.expr(ast, recv);
                if let Some(&member) = children.last() {
                    if let Some(info) = self.receiver_class(ast, recv) {
                        self.bind_member(ast, member, info, true);
                    }
                }
            }
            _ => {
                for c in children {
                    self.expr(ast, c);
                }
            }
        }
    }

    fn bind_member(&self, ast: &mut Ast, id: NodeId, info: &ClassInfo, field: bool) {
        let name = ast.node(id).text.clone().unwrap_or_default();
        let table = if field { &info.fields } else { &info.methods };
        if let Some((decl, ty)) = table.get(&name) {
            let entity = if field { Entity::Field } else { Entity::Method };
            bind(ast, id, *decl, entity, ty);
        }
    }

    fn name_use(&self, ast: &mut Ast, id: NodeId) {
        let name = ast.node(id).text.clone().unwrap_or_default();
        if let Some(b) = self.lookup_local(&name) {
            let b = b.clone();
            bind(ast, id, b.decl, b.entity, &b.type_name);
        } else if let Some((decl, ty)) = self.current_class().and_then(|c| c.fields.get(&name)) {
            bind(ast, id, *decl, Entity::Field, ty);
        } else if let Some(info) = self.classes.get(&name) {
            bind(ast, id, info.decl, Entity::Class, &name);
        }
    }

    /// Class (declared in this unit) that an expression evaluates to.
    fn receiver_class(&self, ast: &Ast, id: NodeId) -> Option<&'c ClassInfo> {
        let n = ast.node(id);
        let class_name: Option<String> = match n.construct.label() {
            "This" => Some(self.class_name.clone()),
            "NameUse" | "MemberName" | "CalleeName" => match n.entity {
                Some(Entity::Class) => n.text.clone(),
                Some(_) => n.type_name.clone(),
                None => None,
            },
            "FieldAccess" | "Call" => {
                let member = n
                    .children
                    .iter()
                    .copied()
                    .find(|&c| matches!(ast.label(c), "MemberName" | "CalleeName"))?;
                return self.receiver_class(ast, member);
            }
            "New" => ast.child_with(id, "TypeRef").and_then(|t| ast.node(t).text.clone()),
            "Paren" => return self.receiver_class(ast, n.children[1]),
            _ => None,
        };
        class_name.and_then(|c| self.classes.get(&c))
    }
}

fn is_statement(label: &str) -> bool {
    matches!(
        label,
        "Block" | "VarDecl" | "ExprStmt" | "EmptyStmt" | "If" | "While" | "For" | "Return"
    )
}
