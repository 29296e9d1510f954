use super::{DslError, Location};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Colon,
    Comma,
    Lt,
    Le,
    Arrow,
    Eq,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eq => "`=`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub loc: Location,
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\'')
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            let loc = Location {
                line: i + 1,
                col: j + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                j += 1;
                continue;
            }
            if is_ident_char(c) {
                let start = j;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..j].iter().collect()),
                    loc,
                });
                continue;
            }
            let next = chars.get(j + 1).copied();
            let (tok, width) = match (c, next) {
                ('<', Some('=')) => (Tok::Le, 2),
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('<', _) => (Tok::Lt, 1),
                ('{', _) => (Tok::LBrace, 1),
                ('}', _) => (Tok::RBrace, 1),
                ('[', _) => (Tok::LBracket, 1),
                (']', _) => (Tok::RBracket, 1),
                (';', _) => (Tok::Semi, 1),
                (':', _) => (Tok::Colon, 1),
                (',', _) => (Tok::Comma, 1),
                ('=', _) => (Tok::Eq, 1),
                _ => {
                    return Err(DslError::Parse {
                        loc,
                        msg: format!("unexpected character `{c}`"),
                    })
                }
            };
            out.push(Token { tok, loc });
            j += width;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let t = tokenize("poset A { # x\n  covers: a<=b', 0<a.b; }").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("poset".into()));
        assert_eq!(t[3].loc, Location { line: 2, col: 3 });
        assert!(t.iter().any(|x| x.tok == Tok::Le));
        assert!(t.iter().any(|x| x.tok == Tok::Ident("b'".into())));
        assert!(t.iter().any(|x| x.tok == Tok::Ident("a.b".into())));
    }

    #[test]
    fn bad_character() {
        let e = tokenize("poset A {\n  elements: a $;").unwrap_err();
        assert!(matches!(e, DslError::Parse { loc: Location { line: 2, col: 15 }, .. }));
    }
}
