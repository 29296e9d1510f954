//! Plain-text instance files: posets, frames, propositions, families and
//! residuated tables, with a canonical serializer and a JSON mirror.
//!
//! ```text
//! poset A {
//!   elements: 0 a b 1;
//!   covers: 0<a, 0<b, a<1, b<1;
//!   involution: 0:1, a:b;
//! }
//! frame T { points: 1 2; rel: 1->1, 1->2, 2->2; }
//! prop p over A,T = [a, 1];
//! family B = { p };
//! ```

mod lexer;
mod parser;
mod serialize;
pub mod json;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::frame::TimeFrame;
use crate::poset::Poset;
use crate::residuated::ResiduatedPoset;
use crate::tense::{Family, Proposition};

pub use parser::parse;
pub use serialize::serialize;

/// Outcome of validating one declared structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub kind: &'static str,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at {loc}: {msg}")]
    Parse { loc: Location, msg: String },
    #[error("resolve error at {loc}: unknown {kind} `{name}`")]
    Resolve {
        loc: Location,
        kind: &'static str,
        name: String,
    },
    #[error("resolve error at {loc}: duplicate {kind} `{name}`")]
    Duplicate {
        loc: Location,
        kind: &'static str,
        name: String,
    },
    #[error("arity error at {loc}: prop `{name}` has {got} values, frame has {want} points")]
    Arity {
        loc: Location,
        name: String,
        got: usize,
        want: usize,
    },
    #[error("{loc}: {source}")]
    Structure {
        loc: Location,
        #[source]
        source: Error,
    },
}

impl DslError {
    pub fn location(&self) -> Location {
        match self {
            DslError::Parse { loc, .. }
            | DslError::Resolve { loc, .. }
            | DslError::Duplicate { loc, .. }
            | DslError::Arity { loc, .. }
            | DslError::Structure { loc, .. } => *loc,
        }
    }

    /// Syntax and name errors, as opposed to structures that fail validation.
    pub fn is_syntax(&self) -> bool {
        !matches!(self, DslError::Structure { .. })
    }
}

/// A declaration with its source position; equality ignores the position.
#[derive(Debug, Clone)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
    pub loc: Location,
}

impl<T: PartialEq> PartialEq for Named<T> {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.value == other.value
    }
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Named<T> {
        Named {
            name: name.into(),
            value,
            loc: Location::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropDecl {
    pub poset: String,
    pub frame: String,
    pub values: Proposition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDecl {
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduatedDecl {
    pub poset: String,
    pub table: ResiduatedPoset,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Instance {
    pub posets: Vec<Named<Poset>>,
    pub frames: Vec<Named<TimeFrame>>,
    pub residuated: Vec<Named<ResiduatedDecl>>,
    pub props: Vec<Named<PropDecl>>,
    pub families: Vec<Named<FamilyDecl>>,
}

fn find<'a, T>(items: &'a [Named<T>], name: &str) -> Option<&'a T> {
    items.iter().find(|n| n.name == name).map(|n| &n.value)
}

impl Instance {
    pub fn new() -> Instance {
        Instance::default()
    }

    pub fn is_empty(&self) -> bool {
        self.posets.is_empty()
            && self.frames.is_empty()
            && self.residuated.is_empty()
            && self.props.is_empty()
            && self.families.is_empty()
    }

    pub fn poset(&self, name: &str) -> Option<&Poset> {
        find(&self.posets, name)
    }

    pub fn frame(&self, name: &str) -> Option<&TimeFrame> {
        find(&self.frames, name)
    }

    pub fn prop(&self, name: &str) -> Option<&PropDecl> {
        find(&self.props, name)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyDecl> {
        find(&self.families, name)
    }

    pub fn residuated(&self, name: &str) -> Option<&ResiduatedDecl> {
        find(&self.residuated, name)
    }

    pub fn add_poset(&mut self, name: &str, p: Poset) -> &mut Self {
        self.posets.push(Named::new(name, p));
        self
    }

    pub fn add_frame(&mut self, name: &str, f: TimeFrame) -> &mut Self {
        self.frames.push(Named::new(name, f));
        self
    }

    pub fn add_prop(&mut self, name: &str, poset: &str, frame: &str, values: Proposition) -> &mut Self {
        self.props.push(Named::new(
            name,
            PropDecl {
                poset: poset.into(),
                frame: frame.into(),
                values,
            },
        ));
        self
    }

    pub fn add_family(&mut self, name: &str, members: &[&str]) -> &mut Self {
        self.families.push(Named::new(
            name,
            FamilyDecl {
                members: members.iter().map(|s| s.to_string()).collect(),
            },
        ));
        self
    }

    pub fn add_residuated(&mut self, name: &str, poset: &str, table: ResiduatedPoset) -> &mut Self {
        self.residuated.push(Named::new(
            name,
            ResiduatedDecl {
                poset: poset.into(),
                table,
            },
        ));
        self
    }

    /// A poset `A`, a frame `T`, and the given families as props `p1, p2, ...`
    /// (shared between families) and families `B1, B2, ...`.
    pub fn from_case(poset: &Poset, frame: &TimeFrame, families: &[Family]) -> Instance {
        let mut inst = Instance::new();
        inst.add_poset("A", poset.clone()).add_frame("T", frame.clone());
        let mut seen: Vec<Proposition> = Vec::new();
        for b in families {
            for q in b.props() {
                if !seen.contains(q) {
                    seen.push(q.clone());
                }
            }
        }
        for (i, q) in seen.iter().enumerate() {
            inst.add_prop(&format!("p{}", i + 1), "A", "T", q.clone());
        }
        for (k, b) in families.iter().enumerate() {
            let names: Vec<String> = b
                .props()
                .iter()
                .map(|q| format!("p{}", seen.iter().position(|s| s == q).unwrap() + 1))
                .collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            inst.add_family(&format!("B{}", k + 1), &refs);
        }
        inst
    }

    /// Resolves a family by name: a declared family, a single prop, or an
    /// inline list `{p, q}` of prop names.
    pub fn resolve_family(&self, spec: &str) -> Result<(String, Family), String> {
        let spec = spec.trim();
        let names: Vec<String> = if let Some(inner) = spec.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            inner
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        } else if let Some(f) = self.family(spec) {
            f.members.clone()
        } else {
            vec![spec.to_string()]
        };
        if names.is_empty() {
            return Err("empty family".into());
        }
        let mut props = Vec::new();
        let mut owner: Option<(&str, &str)> = None;
        for n in &names {
            let d = self.prop(n).ok_or_else(|| format!("unknown prop or family `{n}`"))?;
            match owner {
                None => owner = Some((&d.poset, &d.frame)),
                Some(o) if o != (d.poset.as_str(), d.frame.as_str()) => {
                    return Err(format!("prop `{n}` is over a different poset or frame"))
                }
                _ => {}
            }
            props.push(d.values.clone());
        }
        let label = if names.len() == 1 {
            names[0].clone()
        } else {
            format!("{{{}}}", names.join(","))
        };
        let fam = Family::new(props).map_err(|e| e.to_string())?;
        Ok((label, fam))
    }

    /// Poset and frame names a family's props are declared over.
    pub fn family_owner(&self, spec: &str) -> Option<(String, String)> {
        let spec = spec.trim();
        let first = if let Some(inner) = spec.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            inner.split(',').next()?.trim().to_string()
        } else if let Some(f) = self.family(spec) {
            f.members.first()?.clone()
        } else {
            spec.to_string()
        };
        self.prop(&first).map(|d| (d.poset.clone(), d.frame.clone()))
    }

    /// Boundedness and MLUB-completeness of posets (the latter within
    /// `enum_cap`), seriality of frames, the residuation axioms, and
    /// resolvability of families.
    pub fn validate(&self, enum_cap: usize) -> Vec<Validation> {
        let item = |kind, name: &str, r: std::result::Result<String, String>| {
            let ok = r.is_ok();
            let detail = r.unwrap_or_else(|e| e);
            Validation { kind, name: name.to_string(), ok, detail }
        };
        let mut out = Vec::new();
        for p in &self.posets {
            let v = &p.value;
            let r = match v.bounds() {
                Err(e) => Err(e.to_string()),
                Ok(_) => match v.is_mlub_complete(enum_cap) {
                    Ok(false) => Err("not MLUB-complete".to_string()),
                    Ok(true) | Err(_) => Ok(format!("{} elements, bounded", v.len())),
                },
            };
            out.push(item("poset", &p.name, r));
        }
        for f in &self.frames {
            let r = f.value.check_serial().map(|_| format!("{} points, serial", f.value.len()));
            out.push(item("frame", &f.name, r.map_err(|e| e.to_string())));
        }
        for d in &self.residuated {
            let t = &d.value.table;
            let rep = t.validate();
            let r = match &rep.violation {
                None => Ok(format!("{} instances of the axioms checked", rep.checked)),
                Some(v) => Err(t.describe(v)),
            };
            out.push(item("residuated", &d.name, r));
        }
        for f in &self.families {
            let r = self.resolve_family(&f.name).map(|(_, b)| format!("{} props", b.len()));
            out.push(item("family", &f.name, r));
        }
        out
    }

    /// Every declared family, resolved, in declaration order.
    pub fn all_families(&self) -> Vec<(String, Family)> {
        self.families
            .iter()
            .filter_map(|f| self.resolve_family(&f.name).ok().map(|(_, b)| (f.name.clone(), b)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_one, EXAMPLE_ONE_TEXT};

    #[test]
    fn resolves_families() {
        let inst = parse(EXAMPLE_ONE_TEXT).unwrap();
        let ex = example_one();
        let (label, b) = inst.resolve_family("{p, q}").unwrap();
        assert_eq!(label, "{p,q}");
        assert_eq!(b, Family::new(vec![ex.p.clone(), ex.q.clone()]).unwrap());
        assert_eq!(inst.resolve_family("r").unwrap().1, Family::singleton(ex.r));
        assert!(inst.resolve_family("{}").is_err());
        assert!(inst.resolve_family("zz").is_err());
        assert_eq!(inst.family_owner("{p}"), Some(("A".into(), "T".into())));
    }

    #[test]
    fn case_instances_round_trip() {
        let ex = example_one();
        let fams = vec![
            Family::new(vec![ex.p.clone(), ex.q.clone()]).unwrap(),
            Family::singleton(ex.q.clone()),
        ];
        let inst = Instance::from_case(&ex.poset, &ex.frame, &fams);
        assert_eq!(inst.props.len(), 2);
        let back = parse(&serialize(&inst)).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.all_families().len(), 2);
    }
}
