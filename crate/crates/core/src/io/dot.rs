//! Reader for the Graphviz DOT subset used by pre-laid-out graphs: node
//! statements with `pos`, `width` and `height`, edge chains, and default
//! attribute statements. Sizes are converted from inches to points so that
//! positions and sizes share one unit.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::model::{Embedding, Node, Point, SizedGraph};

const POINTS_PER_INCH: f64 = 72.0;
const DEFAULT_WIDTH: f64 = 0.75;
const DEFAULT_HEIGHT: f64 = 0.5;

pub fn read_dot(text: &str) -> Result<(SizedGraph, Embedding)> {
    let tokens = tokenize(text)?;
    Parser { tokens, at: 0 }.graph()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Eq,
    Semi,
    Comma,
    Colon,
    EdgeOp,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
    /// Quoted strings are never keywords.
    quoted: bool,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Dot {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut line_start = true;
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
                line_start = true;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            bump!();
            continue;
        }
        // Preprocessor-style lines starting with '#' are ignored.
        if c == '#' && line_start {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        line_start = false;
        let (tl, tc) = (line, col);
        let next = chars.get(i + 1).copied();
        if c == '/' && next == Some('/') {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        if c == '/' && next == Some('*') {
            bump!();
            bump!();
            loop {
                if i >= chars.len() {
                    return Err(err(tl, tc, "unterminated comment"));
                }
                if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    bump!();
                    bump!();
                    break;
                }
                bump!();
            }
            continue;
        }
        let simple = match c {
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '=' => Some(Tok::Eq),
            ';' => Some(Tok::Semi),
            ',' => Some(Tok::Comma),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = simple {
            bump!();
            out.push(Token {
                tok,
                line: tl,
                column: tc,
                quoted: false,
            });
            continue;
        }
        if c == '-' && matches!(next, Some('-') | Some('>')) {
            bump!();
            bump!();
            out.push(Token {
                tok: Tok::EdgeOp,
                line: tl,
                column: tc,
                quoted: false,
            });
            continue;
        }
        if c == '<' {
            return Err(err(tl, tc, "HTML-like labels are not supported"));
        }
        if c == '"' {
            bump!();
            let mut s = String::new();
            loop {
                if i >= chars.len() {
                    return Err(err(tl, tc, "unterminated string"));
                }
                let ch = chars[i];
                if ch == '"' {
                    bump!();
                    break;
                }
                if ch == '\\' && i + 1 < chars.len() {
                    let esc = chars[i + 1];
                    bump!();
                    bump!();
                    match esc {
                        '"' => s.push('"'),
                        '\n' => {}
                        other => {
                            s.push('\\');
                            s.push(other);
                        }
                    }
                    continue;
                }
                s.push(ch);
                bump!();
            }
            out.push(Token {
                tok: Tok::Id(s),
                line: tl,
                column: tc,
                quoted: true,
            });
            continue;
        }
        if c == '+' {
            bump!();
            out.push(Token {
                tok: Tok::Id("+".into()),
                line: tl,
                column: tc,
                quoted: false,
            });
            continue;
        }
        if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' || !c.is_ascii() {
            let mut s = String::new();
            while i < chars.len() {
                let ch = chars[i];
                if ch.is_alphanumeric()
                    || ch == '_'
                    || ch == '.'
                    || !ch.is_ascii()
                    || (ch == '-' && s.is_empty())
                {
                    s.push(ch);
                    bump!();
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Id(s),
                line: tl,
                column: tc,
                quoted: false,
            });
            continue;
        }
        return Err(err(tl, tc, format!("unexpected character {c:?}")));
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
        quoted: false,
    });
    Ok(concatenate(out))
}

/// Merge `"a" + "b"` into one quoted id.
fn concatenate(tokens: Vec<Token>) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(tokens.len());
    let mut iter = tokens.into_iter().peekable();
    while let Some(t) = iter.next() {
        let is_plus = !t.quoted && t.tok == Tok::Id("+".into());
        let prev_quoted = out.last().is_some_and(|p| p.quoted);
        let next_quoted = iter.peek().is_some_and(|n| n.quoted);
        if is_plus && prev_quoted && next_quoted {
            let next = iter.next().expect("peeked");
            if let (
                Some(Token {
                    tok: Tok::Id(prev), ..
                }),
                Tok::Id(tail),
            ) = (out.last_mut(), next.tok)
            {
                prev.push_str(&tail);
            }
            continue;
        }
        out.push(t);
    }
    out
}

struct NodeDecl {
    attrs: HashMap<String, String>,
    line: usize,
    column: usize,
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(err(t.line, t.column, format!("expected {what}")))
        }
    }

    fn keyword(t: &Token, kw: &str) -> bool {
        !t.quoted && matches!(&t.tok, Tok::Id(s) if s.eq_ignore_ascii_case(kw))
    }

    fn id(&mut self, what: &str) -> Result<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Id(s) => Ok((s.clone(), t.clone())),
            _ => Err(err(t.line, t.column, format!("expected {what}"))),
        }
    }

    fn graph(mut self) -> Result<(SizedGraph, Embedding)> {
        if Self::keyword(self.peek(), "strict") {
            self.next();
        }
        let t = self.next();
        if !(Self::keyword(&t, "graph") || Self::keyword(&t, "digraph")) {
            return Err(err(t.line, t.column, "expected 'graph' or 'digraph'"));
        }
        let mut graph_id = String::new();
        if let Tok::Id(s) = &self.peek().tok {
            graph_id = s.clone();
            self.next();
        }
        self.expect(Tok::LBrace, "'{'")?;

        let mut defaults: HashMap<String, String> = HashMap::new();
        let mut nodes: HashMap<String, NodeDecl> = HashMap::new();
        let mut order: Vec<String> = Vec::new();
        let mut edges: BTreeSet<(String, String)> = BTreeSet::new();

        loop {
            let t = self.peek().clone();
            match &t.tok {
                Tok::RBrace => {
                    self.next();
                    break;
                }
                Tok::Semi => {
                    self.next();
                    continue;
                }
                Tok::Eof => return Err(err(t.line, t.column, "missing '}'")),
                Tok::LBrace => return Err(err(t.line, t.column, "subgraphs are not supported")),
                Tok::Id(_) => {}
                _ => return Err(err(t.line, t.column, "expected a statement")),
            }
            if Self::keyword(&t, "subgraph") {
                return Err(err(t.line, t.column, "subgraphs are not supported"));
            }
            if Self::keyword(&t, "node") || Self::keyword(&t, "edge") || Self::keyword(&t, "graph")
            {
                self.next();
                let attrs = self.attr_lists()?;
                if Self::keyword(&t, "node") {
                    defaults.extend(attrs);
                }
                continue;
            }
            let (first, first_tok) = self.node_id()?;
            if self.peek().tok == Tok::Eq {
                // Graph attribute `key = value`.
                self.next();
                self.id("attribute value")?;
                continue;
            }
            let mut chain = vec![(first, first_tok)];
            while self.peek().tok == Tok::EdgeOp {
                self.next();
                if self.peek().tok == Tok::LBrace || Self::keyword(self.peek(), "subgraph") {
                    let t = self.peek();
                    return Err(err(t.line, t.column, "subgraphs are not supported"));
                }
                chain.push(self.node_id()?);
            }
            let attrs = self.attr_lists()?;
            let is_node_stmt = chain.len() == 1;
            for (id, tok) in &chain {
                let decl = nodes.entry(id.clone()).or_insert_with(|| {
                    order.push(id.clone());
                    NodeDecl {
                        attrs: defaults.clone(),
                        line: tok.line,
                        column: tok.column,
                    }
                });
                if is_node_stmt {
                    decl.attrs.extend(attrs.clone());
                }
            }
            for w in chain.windows(2) {
                let (a, b) = (&w[0].0, &w[1].0);
                if a != b {
                    let key = if a < b {
                        (a.clone(), b.clone())
                    } else {
                        (b.clone(), a.clone())
                    };
                    edges.insert(key);
                }
            }
        }
        let trailing = self.peek();
        if trailing.tok != Tok::Eof {
            return Err(err(
                trailing.line,
                trailing.column,
                "unexpected content after the graph",
            ));
        }

        let mut graph_nodes = Vec::with_capacity(order.len());
        let mut positions = HashMap::with_capacity(order.len());
        for id in &order {
            let decl = &nodes[id];
            let inches = |key: &str, default: f64| -> Result<f64> {
                match decl.attrs.get(key) {
                    None => Ok(default),
                    Some(v) => v
                        .trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite() && *x > 0.0)
                        .ok_or_else(|| {
                            err(
                                decl.line,
                                decl.column,
                                format!("node {id:?}: invalid {key} {v:?}"),
                            )
                        }),
                }
            };
            let w = inches("width", DEFAULT_WIDTH)? * POINTS_PER_INCH;
            let h = inches("height", DEFAULT_HEIGHT)? * POINTS_PER_INCH;
            let pos = decl
                .attrs
                .get("pos")
                .ok_or_else(|| Error::MissingPosition(id.clone()))?;
            let p = parse_pos(pos).ok_or_else(|| {
                err(
                    decl.line,
                    decl.column,
                    format!("node {id:?}: invalid pos {pos:?}"),
                )
            })?;
            graph_nodes.push(Node::new(id.clone(), w, h));
            positions.insert(id.clone(), p);
        }
        let graph = SizedGraph::new(graph_id, graph_nodes, edges)?;
        let embedding = Embedding::from_map(&graph, &positions)?;
        Ok((graph, embedding))
    }

    /// A node id, with an optional `:port[:compass]` suffix that is ignored.
    fn node_id(&mut self) -> Result<(String, Token)> {
        let (id, tok) = self.id("a node id")?;
        while self.peek().tok == Tok::Colon {
            self.next();
            self.id("a port")?;
        }
        Ok((id, tok))
    }

    fn attr_lists(&mut self) -> Result<HashMap<String, String>> {
        let mut attrs = HashMap::new();
        while self.peek().tok == Tok::LBracket {
            self.next();
            loop {
                if self.peek().tok == Tok::RBracket {
                    self.next();
                    break;
                }
                let (key, _) = self.id("an attribute name")?;
                self.expect(Tok::Eq, "'='")?;
                let (value, _) = self.id("an attribute value")?;
                attrs.insert(key, value);
                if matches!(self.peek().tok, Tok::Comma | Tok::Semi) {
                    self.next();
                }
            }
        }
        Ok(attrs)
    }
}

/// `"x,y"` with an optional trailing `!`; further coordinates are ignored.
fn parse_pos(s: &str) -> Option<Point> {
    let s = s.trim().trim_end_matches('!');
    let mut parts = s.split(',');
    let x = parts.next()?.trim().parse::<f64>().ok()?;
    let y = parts.next()?.trim().parse::<f64>().ok()?;
    let p = Point::new(x, y);
    p.is_finite().then_some(p)
}
