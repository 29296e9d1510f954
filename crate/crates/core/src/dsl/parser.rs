use super::lexer::{tokenize, Tok, Token};
use super::{DslError, FamilyDecl, Instance, Location, Named, PropDecl, ResiduatedDecl};
use crate::error::Error;
use crate::frame::TimeFrame;
use crate::poset::Poset;
use crate::residuated::ResiduatedPoset;

type PResult<T> = Result<T, DslError>;

/// Field keyword, whether it named the full relation, and the pairs.
type OrderField = (Id, bool, Vec<(Id, Id)>);

pub fn parse(src: &str) -> PResult<Instance> {
    let tokens = tokenize(src)?;
    let end = Location {
        line: src.lines().count().max(1),
        col: src.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
        inst: Instance::new(),
    };
    while !p.at_end() {
        p.declaration()?;
    }
    Ok(p.inst)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: Location,
    inst: Instance,
}

/// An identifier with the position of its first character.
#[derive(Debug, Clone)]
struct Id {
    text: String,
    loc: Location,
}

fn structure(loc: Location, source: Error) -> DslError {
    DslError::Structure { loc, source }
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn loc(&self) -> Location {
        self.tokens.get(self.pos).map_or(self.end, |t| t.loc)
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(DslError::Parse {
            loc: self.loc(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, want: Tok) -> PResult<Location> {
        match self.tokens.get(self.pos) {
            Some(t) if t.tok == want => {
                self.pos += 1;
                Ok(t.loc)
            }
            Some(t) => {
                let found = t.tok.describe();
                self.error(format!("expected {}, found {found}", want.describe()))
            }
            None => self.error(format!("expected {}, found end of input", want.describe())),
        }
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<Id> {
        match self.tokens.get(self.pos) {
            Some(Token {
                tok: Tok::Ident(s),
                loc,
            }) => {
                let id = Id {
                    text: s.clone(),
                    loc: *loc,
                };
                self.pos += 1;
                Ok(id)
            }
            Some(t) => {
                let found = t.tok.describe();
                self.error(format!("expected an identifier, found {found}"))
            }
            None => self.error("expected an identifier, found end of input"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<Location> {
        let loc = self.loc();
        let id = self.ident().map_err(|_| DslError::Parse {
            loc,
            msg: format!("expected `{kw}`"),
        })?;
        if id.text == kw {
            Ok(id.loc)
        } else {
            Err(DslError::Parse {
                loc,
                msg: format!("expected `{kw}`, found `{}`", id.text),
            })
        }
    }

    fn declaration(&mut self) -> PResult<()> {
        let kw = self.ident()?;
        match kw.text.as_str() {
            "poset" => self.poset(),
            "frame" => self.frame(),
            "prop" => self.prop(),
            "family" => self.family(),
            "residuated" => self.residuated(),
            other => Err(DslError::Parse {
                loc: kw.loc,
                msg: format!("unknown declaration `{other}`"),
            }),
        }
    }

    fn fresh_name(&mut self, kind: &'static str, taken: impl Fn(&Instance, &str) -> bool) -> PResult<Id> {
        let id = self.ident()?;
        if taken(&self.inst, &id.text) {
            return Err(DslError::Duplicate {
                loc: id.loc,
                kind,
                name: id.text,
            });
        }
        Ok(id)
    }

    /// `id id ... ;`
    fn id_list(&mut self) -> PResult<Vec<Id>> {
        let mut out = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            out.push(self.ident()?);
        }
        self.expect(Tok::Semi)?;
        Ok(out)
    }

    /// `item (, item)* ;`, possibly empty.
    fn comma_list<T>(&mut self, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(&Tok::Semi) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(&Tok::Semi) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn pair(&mut self, sep: Tok) -> PResult<(Id, Id)> {
        let a = self.ident()?;
        self.expect(sep)?;
        let b = self.ident()?;
        Ok((a, b))
    }

    fn field(&mut self) -> PResult<Id> {
        let id = self.ident()?;
        self.expect(Tok::Colon)?;
        Ok(id)
    }

    fn poset(&mut self) -> PResult<()> {
        let name = self.fresh_name("poset", |i, n| i.poset(n).is_some())?;
        self.expect(Tok::LBrace)?;
        let mut elements: Option<Vec<Id>> = None;
        let mut order: Option<OrderField> = None;
        let mut involution: Option<(Id, Vec<(Id, Id)>)> = None;
        while !self.eat(&Tok::RBrace) {
            let f = self.field()?;
            match f.text.as_str() {
                "elements" if elements.is_none() => elements = Some(self.id_list()?),
                "covers" | "rel" if order.is_none() => {
                    let full = f.text == "rel";
                    let pairs = self.comma_list(|p| p.pair(if full { Tok::Le } else { Tok::Lt }))?;
                    order = Some((f, full, pairs));
                }
                "involution" if involution.is_none() => {
                    let pairs = self.comma_list(|p| p.pair(Tok::Colon))?;
                    involution = Some((f, pairs));
                }
                "elements" | "covers" | "rel" | "involution" => {
                    return Err(DslError::Parse {
                        loc: f.loc,
                        msg: format!("`{}` given twice (or both `covers` and `rel`)", f.text),
                    })
                }
                other => {
                    return Err(DslError::Parse {
                        loc: f.loc,
                        msg: format!("unknown poset field `{other}`"),
                    })
                }
            }
        }
        let elements = elements.ok_or_else(|| DslError::Parse {
            loc: name.loc,
            msg: format!("poset `{}` has no `elements`", name.text),
        })?;
        let labels: Vec<String> = elements.iter().map(|e| e.text.clone()).collect();
        for (i, e) in elements.iter().enumerate() {
            if labels[..i].contains(&e.text) {
                return Err(structure(e.loc, Error::DuplicateLabel(e.text.clone())));
            }
        }
        let lookup = |id: &Id| -> PResult<usize> {
            labels.iter().position(|l| *l == id.text).ok_or_else(|| DslError::Resolve {
                loc: id.loc,
                kind: "element",
                name: id.text.clone(),
            })
        };
        let (order_loc, full, pairs) = match &order {
            Some((f, full, pairs)) => (f.loc, *full, pairs.as_slice()),
            None => (name.loc, false, &[][..]),
        };
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<PResult<Vec<_>>>()?;
        let mut poset = if full {
            Poset::from_relation(labels.clone(), &idx)
        } else {
            Poset::from_covers(labels.clone(), &idx)
        }
        .map_err(|e| structure(order_loc, e))?;
        if let Some((f, pairs)) = &involution {
            let mut map: Vec<Option<usize>> = vec![None; labels.len()];
            for (a, b) in pairs {
                let (x, y) = (lookup(a)?, lookup(b)?);
                for (from, to, at) in [(x, y, a), (y, x, b)] {
                    match map[from] {
                        Some(prev) if prev != to => {
                            return Err(structure(
                                at.loc,
                                Error::Involution(format!("`{}` is mapped twice", at.text)),
                            ))
                        }
                        _ => map[from] = Some(to),
                    }
                }
            }
            let total = map
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    m.ok_or_else(|| {
                        structure(
                            f.loc,
                            Error::Involution(format!("`{}` has no image", labels[i])),
                        )
                    })
                })
                .collect::<PResult<Vec<_>>>()?;
            poset = poset.with_involution(total).map_err(|e| structure(f.loc, e))?;
        }
        self.inst.posets.push(Named {
            name: name.text,
            value: poset,
            loc: name.loc,
        });
        Ok(())
    }

    fn frame(&mut self) -> PResult<()> {
        let name = self.fresh_name("frame", |i, n| i.frame(n).is_some())?;
        self.expect(Tok::LBrace)?;
        let mut points: Option<Vec<Id>> = None;
        let mut rel: Option<(Id, Vec<(Id, Id)>)> = None;
        while !self.eat(&Tok::RBrace) {
            let f = self.field()?;
            match f.text.as_str() {
                "points" if points.is_none() => points = Some(self.id_list()?),
                "rel" if rel.is_none() => {
                    let pairs = self.comma_list(|p| p.pair(Tok::Arrow))?;
                    rel = Some((f, pairs));
                }
                "points" | "rel" => {
                    return Err(DslError::Parse {
                        loc: f.loc,
                        msg: format!("`{}` given twice", f.text),
                    })
                }
                other => {
                    return Err(DslError::Parse {
                        loc: f.loc,
                        msg: format!("unknown frame field `{other}`"),
                    })
                }
            }
        }
        let points = points.ok_or_else(|| DslError::Parse {
            loc: name.loc,
            msg: format!("frame `{}` has no `points`", name.text),
        })?;
        let labels: Vec<String> = points.iter().map(|e| e.text.clone()).collect();
        for (i, e) in points.iter().enumerate() {
            if labels[..i].contains(&e.text) {
                return Err(structure(e.loc, Error::DuplicateLabel(e.text.clone())));
            }
        }
        let lookup = |id: &Id| -> PResult<usize> {
            labels.iter().position(|l| *l == id.text).ok_or_else(|| DslError::Resolve {
                loc: id.loc,
                kind: "time point",
                name: id.text.clone(),
            })
        };
        let pairs = rel.as_ref().map_or(&[][..], |(_, p)| p.as_slice());
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<PResult<Vec<_>>>()?;
        let frame = TimeFrame::from_pairs(labels, &idx).map_err(|e| structure(name.loc, e))?;
        self.inst.frames.push(Named {
            name: name.text,
            value: frame,
            loc: name.loc,
        });
        Ok(())
    }

    fn prop(&mut self) -> PResult<()> {
        let name = self.fresh_name("prop", |i, n| i.prop(n).is_some())?;
        self.keyword("over")?;
        let poset_id = self.ident()?;
        self.expect(Tok::Comma)?;
        let frame_id = self.ident()?;
        self.expect(Tok::Eq)?;
        let open = self.expect(Tok::LBracket)?;
        let mut values = Vec::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                values.push(self.ident()?);
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        self.expect(Tok::Semi)?;
        let poset = self.inst.poset(&poset_id.text).ok_or_else(|| DslError::Resolve {
            loc: poset_id.loc,
            kind: "poset",
            name: poset_id.text.clone(),
        })?;
        let frame = self.inst.frame(&frame_id.text).ok_or_else(|| DslError::Resolve {
            loc: frame_id.loc,
            kind: "frame",
            name: frame_id.text.clone(),
        })?;
        if values.len() != frame.len() {
            return Err(DslError::Arity {
                loc: open,
                name: name.text,
                got: values.len(),
                want: frame.len(),
            });
        }
        let values = values
            .iter()
            .map(|v| {
                poset.index_of(&v.text).ok_or_else(|| DslError::Resolve {
                    loc: v.loc,
                    kind: "element",
                    name: v.text.clone(),
                })
            })
            .collect::<PResult<Vec<_>>>()?;
        self.inst.props.push(Named {
            name: name.text,
            value: PropDecl {
                poset: poset_id.text,
                frame: frame_id.text,
                values,
            },
            loc: name.loc,
        });
        Ok(())
    }

    fn family(&mut self) -> PResult<()> {
        let name = self.fresh_name("family", |i, n| i.family(n).is_some())?;
        self.expect(Tok::Eq)?;
        self.expect(Tok::LBrace)?;
        let mut members: Vec<Id> = Vec::new();
        loop {
            members.push(self.ident()?);
            if self.eat(&Tok::RBrace) {
                break;
            }
            self.expect(Tok::Comma)?;
        }
        self.expect(Tok::Semi)?;
        let mut owner: Option<(String, String)> = None;
        for m in &members {
            let d = self.inst.prop(&m.text).ok_or_else(|| DslError::Resolve {
                loc: m.loc,
                kind: "prop",
                name: m.text.clone(),
            })?;
            let o = (d.poset.clone(), d.frame.clone());
            match &owner {
                None => owner = Some(o),
                Some(prev) if *prev != o => {
                    return Err(structure(
                        m.loc,
                        Error::Mismatch(format!("prop `{}` is over a different poset or frame", m.text)),
                    ))
                }
                _ => {}
            }
        }
        self.inst.families.push(Named {
            name: name.text,
            value: FamilyDecl {
                members: members.into_iter().map(|m| m.text).collect(),
            },
            loc: name.loc,
        });
        Ok(())
    }

    fn residuated(&mut self) -> PResult<()> {
        let name = self.fresh_name("residuated poset", |i, n| i.residuated(n).is_some())?;
        self.keyword("over")?;
        let poset_id = self.ident()?;
        let poset = self
            .inst
            .poset(&poset_id.text)
            .ok_or_else(|| DslError::Resolve {
                loc: poset_id.loc,
                kind: "poset",
                name: poset_id.text.clone(),
            })?
            .clone();
        self.expect(Tok::LBrace)?;
        let n = poset.len();
        let mut times: Vec<Option<usize>> = vec![None; n * n];
        let mut arrow: Vec<Option<usize>> = vec![None; n * n];
        let lookup = |id: &Id| -> PResult<usize> {
            poset.index_of(&id.text).ok_or_else(|| DslError::Resolve {
                loc: id.loc,
                kind: "element",
                name: id.text.clone(),
            })
        };
        while !self.eat(&Tok::RBrace) {
            let f = self.field()?;
            let table = match f.text.as_str() {
                "times" => &mut times,
                "arrow" => &mut arrow,
                other => {
                    return Err(DslError::Parse {
                        loc: f.loc,
                        msg: format!("unknown residuated field `{other}`"),
                    })
                }
            };
            let (x, y, r) = (self.ident()?, self.ident()?, self.ident()?);
            self.expect(Tok::Semi)?;
            let cell = lookup(&x)? * n + lookup(&y)?;
            if table[cell].is_some() {
                return Err(structure(
                    x.loc,
                    Error::Mismatch(format!("{} row `{} {}` given twice", f.text, x.text, y.text)),
                ));
            }
            table[cell] = Some(lookup(&r)?);
        }
        let complete = |t: Vec<Option<usize>>, what: &str| -> PResult<Vec<usize>> {
            t.iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| {
                        structure(
                            name.loc,
                            Error::Mismatch(format!(
                                "{what} table lacks row `{} {}`",
                                poset.label(i / n),
                                poset.label(i % n)
                            )),
                        )
                    })
                })
                .collect()
        };
        let times = complete(times, "times")?;
        let arrow = complete(arrow, "arrow")?;
        let table = ResiduatedPoset::new(poset.clone(), times, arrow).map_err(|e| structure(name.loc, e))?;
        self.inst.residuated.push(Named {
            name: name.text,
            value: ResiduatedDecl {
                poset: poset_id.text,
                table,
            },
            loc: name.loc,
        });
        Ok(())
    }
}
