use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

use super::word::LeftNormedWord;

/// Generators, equations between left-normed words, and an optional exponent
/// `n` imposing `r_n(u, w)` on every pair of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeiPresentation {
    names: Vec<String>,
    relations: Vec<(LeftNormedWord, LeftNormedWord)>,
    burnside: Option<u32>,
}

fn default_names(m: usize) -> Vec<String> {
    if m <= 26 {
        (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..m).map(|i| format!("x{i}")).collect()
    }
}

impl KeiPresentation {
    /// The free Kei on `m` generators.
    pub fn free(m: usize) -> Self {
        Self::with_names(default_names(m))
    }

    pub fn with_names(names: Vec<String>) -> Self {
        KeiPresentation {
            names,
            relations: Vec::new(),
            burnside: None,
        }
    }

    /// `Q(m, n)`: the free Kei on `m` generators with `r_n` on all pairs.
    pub fn q(m: usize, n: u32) -> Self {
        Self::free(m).with_burnside(n)
    }

    pub fn with_burnside(mut self, n: u32) -> Self {
        self.burnside = Some(n);
        self
    }

    pub fn add_relation(&mut self, lhs: LeftNormedWord, rhs: LeftNormedWord) -> Result<()> {
        let m = self.names.len();
        if lhs.max_letter() >= m || rhs.max_letter() >= m {
            return Err(Error::Parse(format!("relation uses a generator outside 0..{m}")));
        }
        self.relations.push((lhs, rhs));
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[(LeftNormedWord, LeftNormedWord)] {
        &self.relations
    }

    pub fn burnside(&self) -> Option<u32> {
        self.burnside
    }

    /// Text form: `gens m [names]`, `rel w = w`, `burnside n`.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens {}", self.names.len());
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for (l, r) in &self.relations {
            let _ = writeln!(out, "rel {} = {}", l.format(&self.names), r.format(&self.names));
        }
        if let Some(n) = self.burnside {
            let _ = writeln!(out, "burnside {n}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut p: Option<KeiPresentation> = None;
        let mut burnside = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            match kw {
                "gens" => {
                    if p.is_some() {
                        return Err(err("duplicate gens line".into()));
                    }
                    let mut toks = rest.split_whitespace();
                    let m: usize = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected a generator count".into()))?;
                    let names: Vec<String> = toks.map(str::to_string).collect();
                    let names = if names.is_empty() {
                        default_names(m)
                    } else if names.len() == m {
                        names
                    } else {
                        return Err(err(format!("{} names given for {m} generators", names.len())));
                    };
                    p = Some(KeiPresentation::with_names(names));
                }
                "rel" => {
                    let pres = p.as_mut().ok_or_else(|| err("rel before gens".into()))?;
                    let (l, r) = rest.split_once('=').ok_or_else(|| err("expected `w = w`".into()))?;
                    let l = LeftNormedWord::parse(l, &pres.names).map_err(|e| err(e.to_string()))?;
                    let r = LeftNormedWord::parse(r, &pres.names).map_err(|e| err(e.to_string()))?;
                    pres.relations.push((l, r));
                }
                "burnside" => {
                    let n: u32 = rest.parse().map_err(|_| err(format!("bad exponent {rest:?}")))?;
                    if n < 2 {
                        return Err(err("burnside exponent must be at least 2".into()));
                    }
                    burnside = Some(n);
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let mut p = p.ok_or_else(|| Error::Parse("missing gens line".into()))?;
        p.burnside = burnside;
        Ok(p)
    }
}

/// `r_n(a, b)`: `a` equals the alternating word `w` with `phi(w) = n`.
/// Letters are `a = 0`, `b = 1`.
pub fn r_n_relation(n: u32) -> (LeftNormedWord, LeftNormedWord) {
    assert!(n >= 2);
    let rhs = if n % 2 == 1 {
        LeftNormedWord::alternating(1, 0, n as usize)
    } else {
        LeftNormedWord::alternating(0, 1, n as usize)
    };
    (LeftNormedWord::generator(0), rhs)
}

/// One generator per Fox arc, then one per split circle; each crossing gives
/// `u2 = u0 * o` with `u0, u2` the under-arcs and `o` the over-arc.
pub fn fundamental_kei(d: &LinkDiagram) -> KeiPresentation {
    let (arc_of, arcs) = d.fox_arcs();
    let m = arcs + d.split_circles();
    let mut p = KeiPresentation::with_names((0..m).map(|i| format!("x{i}")).collect());
    for c in d.crossings() {
        let (u0, o, u2) = (arc_of[c[0]], arc_of[c[1]], arc_of[c[2]]);
        p.relations
            .push((LeftNormedWord::generator(u2), LeftNormedWord::new(vec![u0, o]).unwrap()));
    }
    p
}

/// A group presentation: relators are words of `(generator, exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i32)>>,
}

impl GroupPresentation {
    /// `< y0, y1 | y1*y0^-1*y1*y2^-1, ... >`, readable by common group-theory systems.
    pub fn to_text(&self) -> String {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                let parts: Vec<String> = r
                    .iter()
                    .map(|&(g, e)| {
                        if e == 1 {
                            self.generators[g].clone()
                        } else {
                            format!("{}^{e}", self.generators[g])
                        }
                    })
                    .collect();
                parts.join("*")
            })
            .collect();
        format!("< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// The core group: one generator per Fox arc (and split circle), and per
/// crossing the relator `y_o y_u0^-1 y_o y_u2^-1`.
pub fn core_group_presentation(d: &LinkDiagram) -> GroupPresentation {
    let (arc_of, arcs) = d.fox_arcs();
    let m = arcs + d.split_circles();
    let relators = d
        .crossings()
        .iter()
        .map(|c| {
            let (u0, o, u2) = (arc_of[c[0]], arc_of[c[1]], arc_of[c[2]]);
            vec![(o, 1), (u0, -1), (o, 1), (u2, -1)]
        })
        .collect();
    GroupPresentation {
        generators: (0..m).map(|i| format!("y{i}")).collect(),
        relators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{corpus, parse_pd};
    use crate::kei::word::phi_eval;

    #[test]
    fn r_n_shapes() {
        let names = vec!["a".to_string(), "b".to_string()];
        let (l, r) = r_n_relation(3);
        assert_eq!(l.format(&names), "a");
        assert_eq!(r.format(&names), "b*a*b");
        assert_eq!(r_n_relation(5).1.format(&names), "b*a*b*a*b");
        assert_eq!(r_n_relation(2).1.format(&names), "a*b");
        for n in 2..20 {
            assert_eq!(phi_eval(&r_n_relation(n).1).unwrap(), n as i64);
        }
    }

    #[test]
    fn fundamental_kei_shapes() {
        let p = fundamental_kei(&LinkDiagram::unlink(3));
        assert_eq!(p.generator_count(), 3);
        assert!(p.relations().is_empty());
        let t = fundamental_kei(&parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap());
        assert_eq!(t.generator_count(), 3);
        assert_eq!(t.relations().len(), 3);
    }

    #[test]
    fn text_round_trip() {
        let mut p = KeiPresentation::q(3, 4);
        let (l, r) = r_n_relation(3);
        p.add_relation(l, r).unwrap();
        let q = KeiPresentation::parse_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn text_errors() {
        assert!(KeiPresentation::parse_text("rel a = b").is_err());
        assert!(KeiPresentation::parse_text("gens 2\nrel a = c").is_err());
        assert!(KeiPresentation::parse_text("gens 2\nburnside 1").is_err());
        assert!(KeiPresentation::parse_text("gens 2 a").is_err());
        assert!(KeiPresentation::parse_text("gens 2\nfoo").is_err());
    }

    #[test]
    fn out_of_range_relation() {
        let mut p = KeiPresentation::free(2);
        assert!(p
            .add_relation(LeftNormedWord::generator(2), LeftNormedWord::generator(0))
            .is_err());
    }

    #[test]
    fn core_group_shapes() {
        let u = core_group_presentation(&LinkDiagram::unlink(1));
        assert_eq!((u.generators.len(), u.relators.len()), (1, 0));
        let h = core_group_presentation(&corpus::get("hopf").unwrap());
        assert_eq!((h.generators.len(), h.relators.len()), (2, 2));
        let t = core_group_presentation(&corpus::get("3_1").unwrap());
        assert_eq!((t.generators.len(), t.relators.len()), (3, 3));
        for r in &t.relators {
            assert_eq!(r[0], r[2]);
            assert_eq!((r[1].1, r[3].1), (-1, -1));
        }
        assert!(t.to_text().starts_with("< y0, y1, y2 | "));
    }
}
