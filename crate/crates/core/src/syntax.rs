//! Text syntax for groups and spaces.
//!
//! Groups: `Z`, `Z^k`, `Z/n` (and `0`) joined by `+`.
//!
//! Spaces:
//!
//! ```text
//! expr    := product ('v' product)*
//! product := power ('x' power)*
//! power   := atom ('*' count)?
//! atom    := 'pt' | 'S' n | 'RP' n | 'M(' group ',' n ')' | 'K(' group ',' n ')'
//!          | 'L(' p ',' q ')' | 'Sg(' g ')' | 'Ng(' g ')' | 'ZC(' n ';' r ')'
//!          | 'P(' n ')' | 'F(' g ';' r ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored except inside numbers. Parsed descriptors are validated but not
//! normalized.

use std::collections::BTreeMap;

use crate::abelian::AbelianGroup;
use crate::error::{Error, ParseError, Result};
use crate::spaces::SpaceDescriptor;

const ATOMS: &[&str] = &[
    "pt", "S<n>", "RP<n>", "M(", "K(", "L(", "Sg(", "Ng(", "ZC(", "P(", "F(", "(",
];

pub fn parse_expression(text: &str) -> Result<SpaceDescriptor> {
    let mut p = Parser::new(text);
    let d = p.expr()?;
    p.finish(&["'v'", "'x'", "'*'"])?;
    d.validate()?;
    Ok(d)
}

pub fn parse_group(text: &str) -> Result<AbelianGroup> {
    let mut p = Parser::new(text);
    let g = p.group()?;
    p.finish(&["'+'"])?;
    Ok(g)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self { chars: text.char_indices().collect(), pos: 0, end: text.len() }
    }

    /// Index of the next non-whitespace character at or after `from`.
    fn skip_from(&self, mut from: usize) -> usize {
        while self.chars.get(from).is_some_and(|&(_, c)| c.is_whitespace()) {
            from += 1;
        }
        from
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.skip_from(self.pos)).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.skip_from(self.pos)).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, expected: &[&str]) -> Error {
        ParseError {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
        .into()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos = self.skip_from(self.pos) + 1;
            true
        } else {
            false
        }
    }

    /// Keyword characters may be separated by whitespace.
    fn eat_keyword(&mut self, kw: &str) -> bool {
        let mut at = self.pos;
        for k in kw.chars() {
            at = self.skip_from(at);
            match self.chars.get(at) {
                Some(&(_, c)) if c == k => at += 1,
                _ => return false,
            }
        }
        self.pos = at;
        true
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn finish(&self, continuations: &[&str]) -> Result<()> {
        if self.skip_from(self.pos) == self.chars.len() {
            Ok(())
        } else {
            let mut expected = continuations.to_vec();
            expected.push("end of input");
            Err(self.error(&expected))
        }
    }

    /// Digits must be contiguous: `3 2` is two numbers, not `32`.
    fn number(&mut self) -> Result<u64> {
        self.pos = self.skip_from(self.pos);
        let start = self.pos;
        let mut value: Option<u64> = Some(0);
        while let Some(d) = self.chars.get(self.pos).and_then(|&(_, c)| c.to_digit(10)) {
            value = value.and_then(|v| v.checked_mul(10)).and_then(|v| v.checked_add(d as u64));
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(&["number"]));
        }
        value.ok_or_else(|| Error::InvalidDescriptor("number exceeds 64 bits".into()))
    }

    fn small(&mut self) -> Result<u32> {
        let v = self.number()?;
        u32::try_from(v).map_err(|_| Error::InvalidDescriptor(format!("{v} exceeds 32 bits")))
    }

    fn group(&mut self) -> Result<AbelianGroup> {
        let mut acc = self.group_term()?;
        while self.eat('+') {
            acc = acc.direct_sum(&self.group_term()?);
        }
        Ok(acc)
    }

    fn group_term(&mut self) -> Result<AbelianGroup> {
        if self.eat('0') {
            return Ok(AbelianGroup::zero());
        }
        if !self.eat('Z') {
            return Err(self.error(&["'Z'", "'0'"]));
        }
        if self.eat('^') {
            let k = self.small()?;
            Ok(AbelianGroup::free(k))
        } else if self.eat('/') {
            match self.number()? {
                0 => Err(Error::InvalidGroup("Z/0 is not a torsion factor; write Z".into())),
                n => Ok(AbelianGroup::cyclic(n)),
            }
        } else {
            Ok(AbelianGroup::free(1))
        }
    }

    fn expr(&mut self) -> Result<SpaceDescriptor> {
        let mut operands = self.power()?;
        let mut is_wedge = operands.len() > 1;
        while self.eat('v') {
            operands.extend(self.power()?);
            is_wedge = true;
        }
        if is_wedge {
            wedge_of(operands)
        } else {
            Ok(operands.pop().expect("one operand"))
        }
    }

    fn power(&mut self) -> Result<Vec<SpaceDescriptor>> {
        let d = self.product()?;
        if self.eat('*') {
            let k = self.small()?;
            if k == 0 {
                return Err(Error::InvalidDescriptor("repetition count must be at least 1".into()));
            }
            return Ok(vec![d; k as usize]);
        }
        Ok(vec![d])
    }

    fn product(&mut self) -> Result<SpaceDescriptor> {
        let first = self.atom()?;
        let mut factors = vec![first];
        while self.eat('x') {
            factors.push(self.atom()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        match factors.as_slice() {
            [SpaceDescriptor::Sphere(n), SpaceDescriptor::Sphere(m)] => {
                Ok(SpaceDescriptor::ProductOfSpheres(*n, *m))
            }
            _ => Err(Error::InvalidDescriptor(
                "only products of exactly two spheres are supported".into(),
            )),
        }
    }

    fn atom(&mut self) -> Result<SpaceDescriptor> {
        let d = if self.eat_keyword("pt") {
            SpaceDescriptor::Point
        } else if self.eat_keyword("RP") {
            SpaceDescriptor::RealProjective(self.small()?)
        } else if self.eat_keyword("Sg(") {
            let genus = self.small()?;
            self.expect(')')?;
            SpaceDescriptor::Surface { orientable: true, genus }
        } else if self.eat_keyword("Ng(") {
            let genus = self.small()?;
            self.expect(')')?;
            SpaceDescriptor::Surface { orientable: false, genus }
        } else if self.eat_keyword("ZC(") {
            let n = self.number()?;
            self.expect(';')?;
            let h2_rank = self.small()?;
            self.expect(')')?;
            SpaceDescriptor::ZnComplex { n, h2_rank }
        } else if self.eat_keyword("F(") {
            let pi1_rank = self.small()?;
            self.expect(';')?;
            let h2_rank = self.small()?;
            self.expect(')')?;
            SpaceDescriptor::FreePi1Complex { pi1_rank, h2_rank }
        } else if self.eat_keyword("P(") {
            let n = self.number()?;
            self.expect(')')?;
            SpaceDescriptor::PseudoProjectivePlane(n)
        } else if self.eat_keyword("L(") {
            let p = self.number()?;
            self.expect(',')?;
            let q = self.number()?;
            self.expect(')')?;
            SpaceDescriptor::lens(p, q)
        } else if let Some(moore) =
            [("M(", true), ("K(", false)].into_iter().find_map(|(kw, m)| self.eat_keyword(kw).then_some(m))
        {
            let group = self.group()?;
            self.expect(',')?;
            let degree = self.small()?;
            self.expect(')')?;
            if moore {
                SpaceDescriptor::MooreSpace { group, degree }
            } else {
                SpaceDescriptor::EilenbergMacLane { group, degree }
            }
        } else if self.eat('S') {
            SpaceDescriptor::Sphere(self.small()?)
        } else if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            inner
        } else {
            return Err(self.error(ATOMS));
        };
        d.validate()?;
        Ok(d)
    }
}

/// Wedge of points, spheres, sphere wedges, and at most one `Z_n`-complex
/// (which then absorbs 2-spheres only).
fn wedge_of(mut operands: Vec<SpaceDescriptor>) -> Result<SpaceDescriptor> {
    operands.retain(|d| *d != SpaceDescriptor::Point);
    if let [single] = operands.as_slice() {
        return Ok(match single {
            SpaceDescriptor::Sphere(n) => SpaceDescriptor::WedgeOfSpheres(BTreeMap::from([(*n, 1)])),
            other => other.clone(),
        });
    }
    let mut spheres: BTreeMap<u32, u32> = BTreeMap::new();
    let mut zn: Option<(u64, u32)> = None;
    for d in operands {
        match d {
            SpaceDescriptor::Point => {}
            SpaceDescriptor::Sphere(n) => *spheres.entry(n).or_default() += 1,
            SpaceDescriptor::WedgeOfSpheres(map) => {
                for (n, k) in map {
                    *spheres.entry(n).or_default() += k;
                }
            }
            SpaceDescriptor::PseudoProjectivePlane(n) | SpaceDescriptor::ZnComplex { n, .. }
                if zn.is_some() =>
            {
                return Err(Error::InvalidDescriptor(format!(
                    "wedge of two Z_n-complexes (second has n = {n}) is not a supported family"
                )));
            }
            SpaceDescriptor::PseudoProjectivePlane(n) => zn = Some((n, 0)),
            SpaceDescriptor::ZnComplex { n, h2_rank } => zn = Some((n, h2_rank)),
            other => {
                return Err(Error::InvalidDescriptor(format!(
                    "cannot wedge a {} with other spaces",
                    other.family()
                )));
            }
        }
    }
    match zn {
        None => Ok(SpaceDescriptor::WedgeOfSpheres(spheres)),
        Some((n, r)) => {
            if spheres.keys().any(|&dim| dim != 2) {
                return Err(Error::InvalidDescriptor(
                    "a Z_n-complex can only be wedged with 2-spheres".into(),
                ));
            }
            let extra = spheres.get(&2).copied().unwrap_or(0);
            Ok(SpaceDescriptor::ZnComplex { n, h2_rank: r + extra })
        }
    }
}
