//! Seeded generator of small structured programs for dataflow fixtures.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Gen {
    rng: ChaCha8Rng,
    budget: usize,
    scopes: Vec<Vec<String>>,
    fresh: usize,
    out: String,
}

impl Gen {
    fn visible(&self) -> Vec<String> {
        let mut v: Vec<String> = vec!["f".into(), "p".into(), "q".into()];
        for s in &self.scopes {
            v.extend(s.iter().cloned());
        }
        v
    }

    fn var(&mut self) -> String {
        let v = self.visible();
        v[self.rng.gen_range(0..v.len())].clone()
    }

    fn operand(&mut self) -> String {
        match self.rng.gen_range(0..5) {
            0 => self.rng.gen_range(0..10).to_string(),
            1 => "this.f".into(),
            _ => self.var(),
        }
    }

    fn expr(&mut self) -> String {
        match self.rng.gen_range(0..4) {
            0 => self.operand(),
            1 => format!("{} + {}", self.operand(), self.operand()),
            2 => format!("g({}, {})", self.operand(), self.operand()),
            _ => format!("{} * {} - {}", self.operand(), self.operand(), self.operand()),
        }
    }

    fn cond(&mut self) -> String {
        format!("{} < {}", self.operand(), self.operand())
    }

    fn indent(&mut self, depth: usize) {
        for _ in 0..depth + 2 {
            self.out.push_str("    ");
        }
    }

    fn block(&mut self, depth: usize, max: usize) {
        self.scopes.push(Vec::new());
        let n = self.rng.gen_range(1..=max);
        for _ in 0..n {
            if self.budget == 0 {
                break;
            }
            self.stmt(depth);
        }
        self.scopes.pop();
    }

    fn stmt(&mut self, depth: usize) {
        self.budget -= 1;
        let nested = depth < 2 && self.budget > 2;
        let choice = self.rng.gen_range(0..if nested { 10 } else { 6 });
        self.indent(depth);
        match choice {
            0 | 1 => {
                let (v, e) = (self.var(), self.expr());
                self.out.push_str(&format!("{v} = {e};\n"));
            }
            2 => {
                let (v, e) = (self.var(), self.operand());
                self.out.push_str(&format!("{v} += {e};\n"));
            }
            3 => {
                let v = self.var();
                self.out.push_str(&format!("{v}++;\n"));
            }
            4 => {
                let name = format!("v{}", self.fresh);
                self.fresh += 1;
                // occasionally shadow an outer local name instead
                let name = match self.scopes.iter().flatten().next() {
                    Some(outer) if self.rng.gen_bool(0.2) && !self.scopes.last().unwrap().contains(outer) => {
                        outer.clone()
                    }
                    _ => name,
                };
                if self.rng.gen_bool(0.8) {
                    let e = self.expr();
                    self.out.push_str(&format!("int {name} = {e};\n"));
                } else {
                    self.out.push_str(&format!("int {name};\n"));
                }
                self.scopes.last_mut().unwrap().push(name);
            }
            5 => {
                if self.rng.gen_bool(0.15) {
                    let e = self.operand();
                    self.out.push_str(&format!("return {e};\n"));
                } else {
                    let e = self.expr();
                    self.out.push_str(&format!("h({e});\n"));
                }
            }
            6 | 7 => {
                let c = self.cond();
                self.out.push_str(&format!("if ({c}) {{\n"));
                self.block(depth + 1, 3);
                self.indent(depth);
                if self.rng.gen_bool(0.5) {
                    self.out.push_str("} else {\n");
                    self.block(depth + 1, 3);
                    self.indent(depth);
                }
                self.out.push_str("}\n");
            }
            8 => {
                let c = self.cond();
                self.out.push_str(&format!("while ({c}) {{\n"));
                self.block(depth + 1, 3);
                self.indent(depth);
                self.out.push_str("}\n");
            }
            _ => {
                let i = format!("i{}", self.fresh);
                self.fresh += 1;
                let bound = self.operand();
                self.out.push_str(&format!("for (int {i} = 0; {i} < {bound}; {i}++) {{\n"));
                self.scopes.push(vec![i]);
                self.block(depth + 1, 3);
                self.scopes.pop();
                self.indent(depth);
                self.out.push_str("}\n");
            }
        }
    }
}

/// A class with one method of at most `max_statements` statements.
pub fn random_program(seed: u64, max_statements: usize) -> String {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        budget: max_statements,
        scopes: Vec::new(),
        fresh: 0,
        out: String::new(),
    };
    g.out.push_str("class Fixture {\n    int f;\n    int m(int p, int q) {\n");
    g.block(0, max_statements);
    g.out.push_str("        return p;\n    }\n}\n");
    g.out
}
