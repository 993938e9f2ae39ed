//! Named bundles of values that a checker evaluates.
//!
//! Text form, one block per value:
//!
//! ```text
//! @map f
//! map 4 3
//! 0 1 1 2
//! @rel T
//! rel 4
//! 0 1
//! @int m 2
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::relation::Relation;
use crate::text::{parse_map, parse_relation, parse_usize};
use crate::ualg::{parse_algebra, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rel(Relation),
    Map(FiniteMap),
    Int(usize),
    Alg(FiniteAlgebra),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instance {
    items: Vec<(String, Value)>,
}

fn missing(what: &str, name: &str) -> Error {
    Error::InvalidParameter(format!("instance has no {what} named `{name}`"))
}

impl Instance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Value) -> Self {
        self.items.push((name.to_string(), value));
        self
    }

    pub fn rel_with(self, name: &str, r: Relation) -> Self {
        self.with(name, Value::Rel(r))
    }

    pub fn map_with(self, name: &str, f: FiniteMap) -> Self {
        self.with(name, Value::Map(f))
    }

    pub fn int_with(self, name: &str, k: usize) -> Self {
        self.with(name, Value::Int(k))
    }

    pub fn alg_with(self, name: &str, a: FiniteAlgebra) -> Self {
        self.with(name, Value::Alg(a))
    }

    pub fn items(&self) -> &[(String, Value)] {
        &self.items
    }

    fn get(&self, name: &str) -> Option<&Value> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn rel(&self, name: &str) -> Result<&Relation> {
        match self.get(name) {
            Some(Value::Rel(r)) => Ok(r),
            _ => Err(missing("relation", name)),
        }
    }

    pub fn map(&self, name: &str) -> Result<&FiniteMap> {
        match self.get(name) {
            Some(Value::Map(f)) => Ok(f),
            _ => Err(missing("map", name)),
        }
    }

    pub fn int(&self, name: &str) -> Result<usize> {
        match self.get(name) {
            Some(Value::Int(k)) => Ok(*k),
            _ => Err(missing("integer", name)),
        }
    }

    pub fn alg(&self, name: &str) -> Result<&FiniteAlgebra> {
        match self.get(name) {
            Some(Value::Alg(a)) => Ok(a),
            _ => Err(missing("algebra", name)),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.items {
            match v {
                Value::Rel(r) => write!(f, "@rel {name}\n{r}")?,
                Value::Map(m) => write!(f, "@map {name}\n{m}")?,
                Value::Int(k) => writeln!(f, "@int {name} {k}")?,
                Value::Alg(a) => write!(f, "@alg {name}\n{a}")?,
            }
        }
        Ok(())
    }
}

/// Parse the text form. Line numbers in errors refer to the whole input.
pub fn parse_instance(src: &str) -> Result<Instance> {
    let mut inst = Instance::new();
    let lines: Vec<&str> = src.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i].trim();
        if line.is_empty() || line.starts_with('#') {
            i += 1;
            continue;
        }
        let no = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (tag, name) = match toks.as_slice() {
            [tag, name, ..] if tag.starts_with('@') => (*tag, name.to_string()),
            _ => return Err(Error::parse(no, "expected `@rel`, `@map`, `@int` or `@alg` header")),
        };
        let mut end = i + 1;
        while end < lines.len() && !lines[end].trim_start().starts_with('@') {
            end += 1;
        }
        // keep line numbers aligned with the full input
        let body: String = lines
            .iter()
            .enumerate()
            .map(|(k, l)| if k > i && k < end { *l } else { "" })
            .collect::<Vec<_>>()
            .join("\n");
        let value = match tag {
            "@rel" => Value::Rel(parse_relation(&body)?),
            "@map" => Value::Map(parse_map(&body)?),
            "@alg" => Value::Alg(parse_algebra(&body)?),
            "@int" => match toks.as_slice() {
                [_, _, k] => Value::Int(parse_usize(no, k)?),
                _ => return Err(Error::parse(no, "expected `@int <name> <value>`")),
            },
            _ => return Err(Error::parse(no, format!("unknown block `{tag}`"))),
        };
        if tag == "@int" && end > i + 1 && lines[i + 1..end].iter().any(|l| !l.trim().is_empty()) {
            return Err(Error::parse(no + 1, "unexpected content after `@int`"));
        }
        inst.items.push((name, value));
        i = end;
    }
    Ok(inst)
}
