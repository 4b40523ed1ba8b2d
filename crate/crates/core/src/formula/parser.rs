use super::ast::{FixKind, Formula};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unbound variable {name}")]
    UnboundVariable { line: usize, col: usize, name: String },
    #[error("{line}:{col}: negation applied to a non-atom")]
    NegationOnNonAtom { line: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    Mu,
    Nu,
    True,
    False,
    Not,
    Dia,
    Sq,
    And,
    Or,
    Dot,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lower(s) | Tok::Upper(s) => format!("`{s}`"),
            Tok::Mu => "`mu`".into(),
            Tok::Nu => "`nu`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`~`".into(),
            Tok::Dia => "`<>`".into(),
            Tok::Sq => "`[]`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Dot => "`.`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            _ => {}
        }
        let tok = if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
                col += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "mu" => Tok::Mu,
                "nu" => Tok::Nu,
                "true" => Tok::True,
                "false" => Tok::False,
                _ if c.is_ascii_uppercase() => Tok::Upper(word),
                _ => Tok::Lower(word),
            }
        } else {
            let next = chars.get(i + 1).copied();
            let (tok, n) = match (c, next) {
                ('<', Some('>')) => (Tok::Dia, 2),
                ('[', Some(']')) => (Tok::Sq, 2),
                ('~', _) => (Tok::Not, 1),
                ('&', _) => (Tok::And, 1),
                ('|', _) => (Tok::Or, 1),
                ('.', _) => (Tok::Dot, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                _ => {
                    return Err(ParseError::Syntax {
                        line: l0,
                        col: c0,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            };
            i += n;
            col += n;
            tok
        };
        out.push(Spanned {
            tok,
            line: l0,
            col: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, t: &Spanned, wanted: &str) -> ParseError {
        ParseError::Syntax {
            line: t.line,
            col: t.col,
            message: format!("expected {wanted}, found {}", t.tok.describe()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(())
        } else {
            Err(self.unexpected(&t, &tok.describe()))
        }
    }

    fn expr(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conj()?;
        while self.peek().tok == Tok::Or {
            self.next();
            lhs = Formula::or(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::And {
            self.next();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let t = self.next();
        match t.tok {
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Lower(p) => Ok(Formula::Atom(p)),
            Tok::Upper(x) => {
                if self.scope.contains(&x) {
                    Ok(Formula::Var(x))
                } else {
                    Err(ParseError::UnboundVariable {
                        line: t.line,
                        col: t.col,
                        name: x,
                    })
                }
            }
            Tok::Not => match self.peek().tok.clone() {
                Tok::Lower(p) => {
                    self.next();
                    Ok(Formula::NegAtom(p))
                }
                Tok::Eof => Err(self.unexpected(&self.peek().clone(), "an atom")),
                _ => Err(ParseError::NegationOnNonAtom {
                    line: t.line,
                    col: t.col,
                }),
            },
            Tok::Dia => Ok(Formula::diamond(self.unary()?)),
            Tok::Sq => Ok(Formula::boxed(self.unary()?)),
            Tok::LParen => {
                let f = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Mu | Tok::Nu => {
                let kind = if t.tok == Tok::Mu {
                    FixKind::Mu
                } else {
                    FixKind::Nu
                };
                let v = self.next();
                let x = match v.tok {
                    Tok::Upper(x) => x,
                    _ => return Err(self.unexpected(&v, "a fixpoint variable")),
                };
                self.expect(Tok::Dot)?;
                self.scope.push(x.clone());
                let body = self.expr();
                self.scope.pop();
                Ok(Formula::fix(kind, &x, body?))
            }
            _ => Err(self.unexpected(&t, "a formula")),
        }
    }
}

/// Parse a closed formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        scope: Vec::new(),
    };
    let f = p.expr()?;
    let t = p.next();
    if t.tok != Tok::Eof {
        return Err(p.unexpected(&t, "end of input"));
    }
    Ok(f)
}
