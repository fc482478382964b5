use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

use super::ports::PortGraph;
use super::rational::{fraction_of_twists, twists_of_fraction, RationalTangle};

/// An algebraic 2-tangle. `Comp { i, j, a, b }` is `r^i(a) * r^j(b)`, with `r`
/// the quarter-turn rotation and `*` horizontal composition. Rotation
/// exponents are 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Zero,
    Infinity,
    Crossing(bool),
    Twists(Vec<i64>),
    Comp {
        i: u8,
        j: u8,
        a: Box<TangleExpr>,
        b: Box<TangleExpr>,
    },
}

/// Which pair of ends a closure joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// NW to NE and SW to SE.
    Numerator,
    /// NW to SW and NE to SE.
    Denominator,
}

fn integer_tangle(a: i64) -> PortGraph {
    let x = if a > 0 {
        PortGraph::positive_crossing()
    } else {
        PortGraph::negative_crossing()
    };
    (0..a.unsigned_abs()).fold(PortGraph::zero(), |t, _| t.compose(&x))
}

/// `[a1]`, then `T -> mirror(rotate(T)) * [a]` for each later term, which
/// sends the fraction `p/q` to `a + q/p`.
fn twist_graph(tw: &[i64]) -> PortGraph {
    match tw.split_first() {
        None => PortGraph::zero(),
        Some((&first, rest)) => rest.iter().fold(integer_tangle(first), |t, &a| {
            t.rotate().mirror().compose(&integer_tangle(a))
        }),
    }
}

impl TangleExpr {
    pub fn comp(i: u8, j: u8, a: TangleExpr, b: TangleExpr) -> Self {
        TangleExpr::Comp {
            i: i % 2,
            j: j % 2,
            a: Box::new(a),
            b: Box::new(b),
        }
    }

    pub fn diagram(&self) -> PortGraph {
        match self {
            TangleExpr::Zero => PortGraph::zero(),
            TangleExpr::Infinity => PortGraph::infinity(),
            TangleExpr::Crossing(true) => PortGraph::positive_crossing(),
            TangleExpr::Crossing(false) => PortGraph::negative_crossing(),
            TangleExpr::Twists(tw) => twist_graph(tw),
            TangleExpr::Comp { i, j, a, b } => {
                let rot = |g: PortGraph, k: u8| if k == 1 { g.rotate() } else { g };
                rot(a.diagram(), *i).compose(&rot(b.diagram(), *j))
            }
        }
    }

    pub fn closure(&self, kind: Closure) -> LinkDiagram {
        self.diagram().closure(kind == Closure::Numerator)
    }

    pub fn crossing_count(&self) -> usize {
        match self {
            TangleExpr::Zero | TangleExpr::Infinity => 0,
            TangleExpr::Crossing(_) => 1,
            TangleExpr::Twists(tw) => tw.iter().map(|a| a.unsigned_abs() as usize).sum(),
            TangleExpr::Comp { a, b, .. } => a.crossing_count() + b.crossing_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TangleExpr::Comp { a, b, .. } => 1 + a.depth().max(b.depth()),
            _ => 0,
        }
    }

    /// The fraction, when the expression is rational by the sum rule: a
    /// composition is rational when one rotated side is an integer tangle.
    pub fn fraction(&self) -> Option<RationalTangle> {
        match self {
            TangleExpr::Zero => Some(RationalTangle::from_fraction(0, 1)),
            TangleExpr::Infinity => Some(RationalTangle::from_fraction(1, 0)),
            TangleExpr::Crossing(s) => Some(RationalTangle::from_fraction(if *s { 1 } else { -1 }, 1)),
            TangleExpr::Twists(tw) => Some(fraction_of_twists(tw)),
            TangleExpr::Comp { i, j, a, b } => {
                let rot = |t: RationalTangle, k: u8| if k == 1 { t.rotate() } else { t };
                let fa = rot(a.fraction()?, *i);
                let fb = rot(b.fraction()?, *j);
                let integer = |t: &RationalTangle| t.denominator().is_one();
                if !(integer(&fa) || integer(&fb)) {
                    return None;
                }
                let (p1, q1) = (fa.numerator(), fa.denominator());
                let (p2, q2) = (fb.numerator(), fb.denominator());
                let p: BigInt = p1 * q2 + p2 * q1;
                Some(RationalTangle::from_fraction(p, q1 * q2))
            }
        }
    }

    /// Paths of all 0-tangle leaves, in left-to-right order. A path is a
    /// string over `L`, `R`; the root is the empty path.
    pub fn zero_sites(&self) -> Vec<String> {
        let mut out = Vec::new();
        fn walk(e: &TangleExpr, path: &mut String, out: &mut Vec<String>) {
            match e {
                TangleExpr::Zero => out.push(path.clone()),
                TangleExpr::Comp { a, b, .. } => {
                    path.push('L');
                    walk(a, path, out);
                    path.pop();
                    path.push('R');
                    walk(b, path, out);
                    path.pop();
                }
                _ => {}
            }
        }
        walk(self, &mut String::new(), &mut out);
        out
    }

    pub fn at(&self, path: &str) -> Option<&TangleExpr> {
        let mut e = self;
        for c in path.chars() {
            e = match (e, c) {
                (TangleExpr::Comp { a, .. }, 'L') => a,
                (TangleExpr::Comp { b, .. }, 'R') => b,
                _ => return None,
            };
        }
        Some(e)
    }

    fn replace_at(&self, path: &[u8], with: TangleExpr) -> TangleExpr {
        match (self, path.split_first()) {
            (_, None) => with,
            (TangleExpr::Comp { i, j, a, b }, Some((&c, rest))) => {
                let (a, b) = if c == b'L' {
                    (a.replace_at(rest, with), (**b).clone())
                } else {
                    ((**a).clone(), b.replace_at(rest, with))
                };
                TangleExpr::comp(*i, *j, a, b)
            }
            _ => unreachable!("path validated by the caller"),
        }
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> TangleExpr {
        match self {
            TangleExpr::Crossing(s) => TangleExpr::Crossing(!s),
            TangleExpr::Twists(tw) => TangleExpr::Twists(tw.iter().map(|a| -a).collect()),
            TangleExpr::Comp { i, j, a, b } => TangleExpr::comp(*i, *j, a.mirror(), b.mirror()),
            other => other.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<TangleExpr> {
        let tokens: Vec<String> = text
            .replace('(', " ( ")
            .replace(')', " ) ")
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut pos = 0;
        let e = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input after {e}")));
        }
        Ok(e)
    }
}

fn parse_expr(tokens: &[String], pos: &mut usize) -> Result<TangleExpr> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::Parse("unexpected end of tangle expression".into()))?;
    *pos += 1;
    match tok.as_str() {
        "t0" => Ok(TangleExpr::Zero),
        "tinf" => Ok(TangleExpr::Infinity),
        "x+" => Ok(TangleExpr::Crossing(true)),
        "x-" => Ok(TangleExpr::Crossing(false)),
        "(" => {
            let head = tokens
                .get(*pos)
                .ok_or_else(|| Error::Parse("unexpected end after '('".into()))?;
            *pos += 1;
            let e = match head.as_str() {
                "tw" => {
                    let mut tw = Vec::new();
                    while tokens.get(*pos).is_some_and(|t| t != ")") {
                        let t = &tokens[*pos];
                        tw.push(t.parse().map_err(|_| Error::Parse(format!("bad twist count {t:?}")))?);
                        *pos += 1;
                    }
                    TangleExpr::Twists(tw)
                }
                "comp" => {
                    let mut exp = || -> Result<u8> {
                        let t = tokens
                            .get(*pos)
                            .ok_or_else(|| Error::Parse("missing rotation exponent".into()))?;
                        *pos += 1;
                        match t.as_str() {
                            "0" => Ok(0),
                            "1" => Ok(1),
                            _ => Err(Error::Parse(format!("rotation exponent must be 0 or 1, got {t:?}"))),
                        }
                    };
                    let (i, j) = (exp()?, exp()?);
                    let a = parse_expr(tokens, pos)?;
                    let b = parse_expr(tokens, pos)?;
                    TangleExpr::comp(i, j, a, b)
                }
                other => return Err(Error::Parse(format!("unknown tangle form {other:?}"))),
            };
            if tokens.get(*pos).map(String::as_str) != Some(")") {
                return Err(Error::Parse("missing ')'".into()));
            }
            *pos += 1;
            Ok(e)
        }
        other => Err(Error::Parse(format!("unexpected token {other:?}"))),
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Zero => write!(f, "t0"),
            TangleExpr::Infinity => write!(f, "tinf"),
            TangleExpr::Crossing(true) => write!(f, "x+"),
            TangleExpr::Crossing(false) => write!(f, "x-"),
            TangleExpr::Twists(tw) => {
                write!(f, "(tw")?;
                for a in tw {
                    write!(f, " {a}")?;
                }
                write!(f, ")")
            }
            TangleExpr::Comp { i, j, a, b } => write!(f, "(comp {i} {j} {a} {b})"),
        }
    }
}

/// Replaces the 0-tangle at `site` by the twist realization of `sign * n/q`.
/// With `(n, q) = (5, 2)` this is the (2,2)-move for `sign = 1` and the
/// (-2,-2)-move for `sign = -1`.
pub fn apply_rational_move(t: &TangleExpr, site: &str, n: i64, q: i64, sign: i8) -> Result<TangleExpr> {
    if !site.chars().all(|c| c == 'L' || c == 'R') {
        return Err(Error::InvalidMoveSite(format!("{site:?} is not a path over L, R")));
    }
    match t.at(site) {
        Some(TangleExpr::Zero) => {}
        Some(other) => return Err(Error::InvalidMoveSite(format!("site {site:?} holds {other}, not t0"))),
        None => return Err(Error::InvalidMoveSite(format!("site {site:?} does not exist"))),
    }
    if q < 1 {
        return Err(Error::InvalidMoveSite(format!(
            "move denominator must be positive, got {q}"
        )));
    }
    let p = if sign < 0 { -n } else { n };
    let tw = twists_of_fraction(&BigInt::from(p), &BigInt::from(q));
    Ok(t.replace_at(site.as_bytes(), TangleExpr::Twists(tw)))
}
