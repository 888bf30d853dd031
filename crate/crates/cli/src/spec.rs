//! Inline generator specs such as `kronecker(complete(2),triangular(4))`.
//!
//! ```text
//! spec := name | name "(" [arg ("," arg)*] ")"
//! arg  := integer | spec
//! ```

use adjalg::graph::{chordal_ring_12_4, circulant, complete, cycle, kronecker, petersen, triangular};
use adjalg::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Complete(usize),
    Cycle(usize),
    Triangular(usize),
    Circulant(usize, Vec<usize>),
    Kronecker(Box<Spec>, Box<Spec>),
    Petersen,
    ChordalRing12_4,
}

pub const FAMILIES: &str =
    "complete(n), cycle(n), triangular(m), circulant(n,s1,...), kronecker(spec,spec), petersen, chordal-ring-12-4";

#[derive(Clone, Debug, PartialEq, Eq)]
enum Arg {
    Int(usize),
    Spec(Spec),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        &self.text[start..self.pos]
    }

    fn arg(&mut self) -> Result<Arg, String> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let digits = self.take_while(|c| c.is_ascii_digit());
            return digits
                .parse()
                .map(Arg::Int)
                .map_err(|_| format!("integer `{digits}` is too large"));
        }
        self.spec().map(Arg::Spec)
    }

    fn spec(&mut self) -> Result<Spec, String> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_');
        if name.is_empty() {
            return Err(format!("expected a generator name at offset {}", self.pos));
        }
        let mut args = Vec::new();
        if self.eat('(') && !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(format!("expected `,` or `)` at offset {}", self.pos));
                }
            }
        }
        build(name, args)
    }
}

fn ints(name: &str, args: &[Arg]) -> Result<Vec<usize>, String> {
    args.iter()
        .map(|a| match a {
            Arg::Int(v) => Ok(*v),
            Arg::Spec(_) => Err(format!("{name} takes integer arguments")),
        })
        .collect()
}

fn one_int(name: &str, args: &[Arg], min: usize) -> Result<usize, String> {
    match ints(name, args)?.as_slice() {
        [v] if *v >= min => Ok(*v),
        [v] => Err(format!("{name}({v}) needs an argument of at least {min}")),
        _ => Err(format!("{name} takes exactly one integer")),
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<Spec, String> {
    match name {
        "complete" => Ok(Spec::Complete(one_int(name, &args, 1)?)),
        "cycle" => Ok(Spec::Cycle(one_int(name, &args, 3)?)),
        "triangular" => Ok(Spec::Triangular(one_int(name, &args, 2)?)),
        "circulant" => {
            let values = ints(name, &args)?;
            match values.split_first() {
                Some((&n, conn)) if n > 0 && !conn.is_empty() => {
                    Ok(Spec::Circulant(n, conn.to_vec()))
                }
                _ => Err("circulant needs n > 0 and at least one connection residue".into()),
            }
        }
        "kronecker" => match <[Arg; 2]>::try_from(args) {
            Ok([Arg::Spec(a), Arg::Spec(b)]) => Ok(Spec::Kronecker(Box::new(a), Box::new(b))),
            _ => Err("kronecker takes two generator specs".into()),
        },
        "petersen" | "chordal-ring-12-4" if !args.is_empty() => {
            Err(format!("{name} takes no arguments"))
        }
        "petersen" => Ok(Spec::Petersen),
        "chordal-ring-12-4" => Ok(Spec::ChordalRing12_4),
        other => Err(format!("unknown generator `{other}`; known: {FAMILIES}")),
    }
}

pub fn parse_spec(text: &str) -> Result<Spec, String> {
    let mut parser = Parser { text, pos: 0 };
    let spec = parser.spec()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(format!("trailing input at offset {}", parser.pos));
    }
    Ok(spec)
}

impl Spec {
    pub fn build(&self) -> Result<Graph, String> {
        Ok(match self {
            Self::Complete(n) => complete(*n),
            Self::Cycle(n) => cycle(*n),
            Self::Triangular(m) => triangular(*m),
            Self::Circulant(n, conn) => circulant(*n, conn).map_err(|e| e.to_string())?,
            Self::Kronecker(a, b) => kronecker(&a.build()?, &b.build()?),
            Self::Petersen => petersen(),
            Self::ChordalRing12_4 => chordal_ring_12_4(),
        })
    }
}

impl std::fmt::Display for Spec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "complete({n})"),
            Self::Cycle(n) => write!(f, "cycle({n})"),
            Self::Triangular(m) => write!(f, "triangular({m})"),
            Self::Circulant(n, conn) => {
                write!(f, "circulant({n}")?;
                for s in conn {
                    write!(f, ",{s}")?;
                }
                write!(f, ")")
            }
            Self::Kronecker(a, b) => write!(f, "kronecker({a},{b})"),
            Self::Petersen => write!(f, "petersen"),
            Self::ChordalRing12_4 => write!(f, "chordal-ring-12-4"),
        }
    }
}
