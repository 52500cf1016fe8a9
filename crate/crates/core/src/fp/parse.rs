//! Text DSL for presentations:
//! `gens: x y; rels: x^4, y^2, [x,y]^2, [[x,y],x]^2, [[[x,y],x],x]`.
//!
//! Concatenation is multiplication, `^n` is an integer power (negative
//! allowed), `[u,v]` expands to `u^-1 v^-1 u v`, parentheses group.

use super::{FpError, GroupPresentation, Word};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, msg: &str) -> FpError {
        FpError::Parse(format!("{msg} at byte {}", self.pos))
    }

    /// Longest declared generator name starting here.
    fn ident(&mut self) -> Result<usize, FpError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut best: Option<usize> = None;
        for (i, name) in self.gens.iter().enumerate() {
            let nb = name.as_bytes();
            if rest.starts_with(nb) {
                match best {
                    Some(b) if self.gens[b].len() >= nb.len() => {}
                    _ => best = Some(i),
                }
            }
        }
        let i = best.ok_or_else(|| self.err("expected a generator name"))?;
        self.pos += self.gens[i].len();
        Ok(i)
    }

    fn integer(&mut self) -> Result<i32, FpError> {
        self.skip_ws();
        let mut sign = 1i32;
        if self.peek() == Some(b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse::<i32>()
            .map(|n| sign * n)
            .map_err(|_| self.err("integer out of range"))
    }

    fn atom(&mut self) -> Result<Word, FpError> {
        match self.peek() {
            Some(b'[') => {
                self.bump();
                let u = self.expr(&[b',', b']'])?;
                if self.bump() != Some(b',') {
                    return Err(self.err("expected `,` in commutator"));
                }
                let v = self.expr(&[b']'])?;
                if self.bump() != Some(b']') {
                    return Err(self.err("expected `]`"));
                }
                Ok(Word::commutator(&u, &v))
            }
            Some(b'(') => {
                self.bump();
                let w = self.expr(&[b')'])?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(w)
            }
            Some(_) => {
                let g = self.ident()?;
                Ok(Word::gen(g))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn factor(&mut self) -> Result<Word, FpError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let n = self.integer()?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    /// Product of factors until one of `stops` (at this nesting level) or EOF.
    fn expr(&mut self, stops: &[u8]) -> Result<Word, FpError> {
        let mut acc = Word::identity();
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(c) if stops.contains(&c) => return Ok(acc),
                Some(_) => {
                    let f = self.factor()?;
                    acc = acc.concat(&f);
                }
            }
        }
    }
}

/// Splits on `,` at bracket depth zero.
fn split_relators(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in body.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

pub fn parse_presentation(src: &str) -> Result<GroupPresentation, FpError> {
    let mut gens: Option<Vec<String>> = None;
    let mut rels_body: Option<String> = None;
    for section in src.split(';') {
        let section = section.trim();
        if section.is_empty() {
            continue;
        }
        if let Some(body) = section.strip_prefix("gens:") {
            gens = Some(body.split_whitespace().map(|s| s.to_string()).collect());
        } else if let Some(body) = section.strip_prefix("rels:") {
            rels_body = Some(body.to_string());
        } else {
            return Err(FpError::Parse(format!(
                "expected `gens:` or `rels:` section, got `{section}`"
            )));
        }
    }
    let gens = gens.ok_or_else(|| FpError::Parse("missing `gens:` section".into()))?;
    if gens.is_empty() {
        return Err(FpError::NoGenerators);
    }
    let mut relators = Vec::new();
    if let Some(body) = rels_body {
        for rel in split_relators(&body) {
            let mut cur = Cursor {
                src: rel.as_bytes(),
                pos: 0,
                gens: &gens,
            };
            let w = cur.expr(&[])?;
            cur.skip_ws();
            if cur.pos != rel.len() {
                return Err(FpError::Parse(format!("trailing input in relator `{rel}`")));
            }
            relators.push(w);
        }
    }
    GroupPresentation::new(gens, relators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_g1_style_dsl() {
        let p = parse_presentation(
            "gens: x y; rels: x^4, y^2, [x,y]^2, [[x,y],x]^2, [[[x,y],x],x], [[[x,y],x],y]",
        )
        .unwrap();
        assert_eq!(p.generators, vec!["x", "y"]);
        assert_eq!(p.relators.len(), 6);
        assert_eq!(p.relators[0].0, vec![1, 1, 1, 1]);
        // [x,y] = x^-1 y^-1 x y
        assert_eq!(p.relators[2].0, vec![-1, -2, 1, 2, -1, -2, 1, 2]);
    }

    #[test]
    fn juxtaposition_powers_and_parens() {
        let p = parse_presentation("gens: r s; rels: (rs)^2, r^-1 s r s").unwrap();
        assert_eq!(p.relators[0].0, vec![1, 2, 1, 2]);
        assert_eq!(p.relators[1].0, vec![-1, 2, 1, 2]);
    }

    #[test]
    fn rejects_unknown_names_and_garbage() {
        assert!(parse_presentation("gens: x; rels: y^2").is_err());
        assert!(parse_presentation("rels: x^2").is_err());
        assert!(parse_presentation("gens: x; rels: x^2 ]").is_err());
    }

    #[test]
    fn multi_char_generator_names() {
        let p = parse_presentation("gens: x1 x2; rels: x1^2, x2^2, [x1,x2]").unwrap();
        assert_eq!(p.relators[2].0, vec![-1, -2, 1, 2]);
    }
}
