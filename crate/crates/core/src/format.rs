//! Text formats: ideal files, decomposition files and partition listings.
//!
//! Ideal file (line oriented, `#` starts a comment):
//!
//! ```text
//! n = 2
//! module = I          # or S/I
//! I = x1^2*x2^4, x1^3*x2^3, x1^5*x2
//! J = x1^4*x2^5, (6,2)
//! g = 7 6
//! ```
//!
//! Monomials are `1` or products of `xi` / `xi^a` with 1-based `i`; a raw
//! exponent tuple `(a1,…,an)` is accepted as well. `J` defaults to `0`.
//! With `module = S/I` the file describes the pair `(S, I)`.

use std::fmt;
use std::sync::Arc;

use crate::decomp::{Partition, StanleyDecomposition, StanleySpace};
use crate::error::Error;
use crate::ideal::{ExponentVector, MonomialIdeal, QuotientPair};
use crate::poset::CharacteristicPoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    /// The text parsed but describes an invalid module.
    Invalid(Error),
}

/// An error with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    fn invalid(line: usize, column: usize, err: Error) -> Self {
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Invalid(err),
        }
    }

    pub fn is_empty_module(&self) -> bool {
        self.kind == ParseErrorKind::Invalid(Error::EmptyModule)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => f.write_str(m),
            ParseErrorKind::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

/// Character cursor over one line, tracking the column.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]` in the original line.
    offset: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, offset: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            offset,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::syntax(self.line, self.column(), msg))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.chars.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of line")),
            }
        }
    }

    fn int(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn exponent(&mut self) -> PResult<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("exponent out of range")
        })
    }

    /// `(a1,…,an)`
    fn tuple(&mut self, n: usize) -> PResult<ExponentVector> {
        let start = self.pos;
        self.expect('(')?;
        let mut v = Vec::new();
        if !self.eat(')') {
            loop {
                v.push(self.exponent()?);
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        if v.len() != n {
            self.pos = start;
            return self.err(format!("tuple has {} entries, expected {n}", v.len()));
        }
        Ok(ExponentVector::new(v))
    }

    /// `1 | term ('*' term)* | (a1,…,an)`
    fn monomial(&mut self, n: usize) -> PResult<ExponentVector> {
        self.skip_ws();
        match self.peek() {
            Some('(') => return self.tuple(n),
            Some('1') => {
                self.pos += 1;
                return Ok(ExponentVector::zero(n));
            }
            _ => {}
        }
        let mut v = vec![0u32; n];
        loop {
            self.skip_ws();
            if self.peek() != Some('x') {
                return self.err("expected a monomial");
            }
            self.pos += 1;
            let at = self.pos;
            let i = self.int()?;
            if i == 0 || i as usize > n {
                self.pos = at;
                return self.err(format!("variable x{i} out of range 1..={n}"));
            }
            let a = if self.eat('^') { self.exponent()? } else { 1 };
            let slot = &mut v[i as usize - 1];
            *slot = slot.checked_add(a).ok_or_else(|| {
                ParseError::syntax(self.line, self.column(), "exponent out of range")
            })?;
            if !self.eat('*') {
                break;
            }
        }
        Ok(ExponentVector::new(v))
    }

    fn monomial_list(&mut self, n: usize) -> PResult<Vec<ExponentVector>> {
        let mut out = vec![self.monomial(n)?];
        while self.eat(',') {
            out.push(self.monomial(n)?);
        }
        if !self.at_end() {
            return self.err("expected `,` or end of line");
        }
        Ok(out)
    }
}

/// Contents of an ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub pair: QuotientPair,
    pub g: Option<ExponentVector>,
}

struct Entry<'a> {
    value: &'a str,
    line: usize,
    /// 0-based column of `value`.
    column: usize,
}

impl Entry<'_> {
    fn cursor(&self) -> Cursor {
        Cursor::new(self.value, self.line, self.column)
    }
}

const KEYS: [&str; 5] = ["n", "module", "I", "J", "g"];

/// Parses an ideal file. Also reports `J ⊄ I`, `I = J` and an inadmissible
/// `g` at the offending line.
pub fn parse_ideal_file(text: &str) -> PResult<IdealFile> {
    let mut entries: [Option<Entry>; 5] = Default::default();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(sep) = content.find(['=', ':']) else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(ParseError::syntax(line, col, "expected `key = value`"));
        };
        let key = content[..sep].trim();
        let key_col = content.len() - content.trim_start().len() + 1;
        let Some(slot) = KEYS.iter().position(|&k| k == key) else {
            return Err(ParseError::syntax(
                line,
                key_col,
                format!("unknown key `{key}`"),
            ));
        };
        if entries[slot].is_some() {
            return Err(ParseError::syntax(
                line,
                key_col,
                format!("duplicate key `{key}`"),
            ));
        }
        let value = &content[sep + 1..];
        entries[slot] = Some(Entry {
            value,
            line,
            column: content[..sep + 1].chars().count(),
        });
    }
    let [n_e, module_e, i_e, j_e, g_e] = entries;
    let missing =
        |key: &str| ParseError::syntax(last_line.max(1), 1, format!("missing `{key} = …`"));

    let n_e = n_e.ok_or_else(|| missing("n"))?;
    let mut c = n_e.cursor();
    let n = c.int()? as usize;
    if !c.at_end() {
        return c.err("expected end of line after n");
    }
    if n == 0 {
        return Err(ParseError::syntax(
            n_e.line,
            n_e.column + 1,
            "n must be positive",
        ));
    }

    let quotient = match &module_e {
        None => false,
        Some(e) => match e.value.trim() {
            "I" => false,
            "S/I" => true,
            other => {
                let col = e.column + e.value.len() - e.value.trim_start().len() + 1;
                return Err(ParseError::syntax(
                    e.line,
                    col,
                    format!("module must be `I` or `S/I`, found `{other}`"),
                ));
            }
        },
    };

    let i_e = i_e.ok_or_else(|| missing("I"))?;
    let ideal = |e: &Entry| -> PResult<MonomialIdeal> {
        let mut c = e.cursor();
        c.skip_ws();
        let first = c.pos;
        if c.peek() == Some('0') {
            c.pos += 1;
            if c.at_end() {
                return Ok(MonomialIdeal::zero(n));
            }
            c.pos = first;
        }
        let gens = c.monomial_list(n)?;
        MonomialIdeal::new(n, gens).map_err(|err| ParseError::invalid(e.line, e.column + 1, err))
    };
    let i = ideal(&i_e)?;
    let j = match &j_e {
        Some(e) => ideal(e)?,
        None => MonomialIdeal::zero(n),
    };

    let pair = if quotient {
        if let Some(e) = &j_e {
            return Err(ParseError::syntax(
                e.line,
                1,
                "`J` is not allowed with module = S/I",
            ));
        }
        QuotientPair::quotient_ring(i)
    } else {
        QuotientPair::new(i, j)
    };
    let pair = pair.map_err(|err| {
        let at = match (&err, &j_e) {
            (Error::NotContained(_), Some(e)) => e,
            _ => &i_e,
        };
        ParseError::invalid(at.line, at.column + 1, err)
    })?;

    let g = match g_e {
        None => None,
        Some(e) => {
            let mut c = e.cursor();
            c.skip_ws();
            let g = if c.peek() == Some('(') {
                c.tuple(n)?
            } else {
                let mut v = Vec::new();
                while !c.at_end() {
                    v.push(c.exponent()?);
                    c.eat(',');
                }
                if v.len() != n {
                    return Err(ParseError::syntax(
                        e.line,
                        e.column + 1,
                        format!("g has {} entries, expected {n}", v.len()),
                    ));
                }
                ExponentVector::new(v)
            };
            if !c.at_end() {
                return c.err("expected end of line after g");
            }
            pair.check_admissible(&g)
                .map_err(|err| ParseError::invalid(e.line, e.column + 1, err))?;
            Some(g)
        }
    };
    Ok(IdealFile { pair, g })
}

fn monomial_list(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    ideal
        .generators()
        .iter()
        .map(ExponentVector::monomial)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Writes an ideal file that parses back to the same pair and `g`.
pub fn emit_ideal_file(pair: &QuotientPair, g: Option<&ExponentVector>) -> String {
    let mut out = format!("n = {}\n", pair.num_vars());
    if pair.numerator().is_unit() && !pair.denominator().is_zero() {
        out.push_str("module = S/I\n");
        out.push_str(&format!("I = {}\n", monomial_list(pair.denominator())));
    } else {
        out.push_str(&format!("I = {}\n", monomial_list(pair.numerator())));
        if !pair.denominator().is_zero() {
            out.push_str(&format!("J = {}\n", monomial_list(pair.denominator())));
        }
    }
    if let Some(g) = g {
        let entries: Vec<String> = g.entries().iter().map(u32::to_string).collect();
        out.push_str(&format!("g = {}\n", entries.join(" ")));
    }
    out
}

/// Parses one Stanley space per line, `x^(e1,…,en) K[ i1 … ik ]`, with
/// 1-based variable indices.
pub fn parse_decomposition(text: &str, n: usize) -> PResult<Vec<StanleySpace>> {
    let mut spaces = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut c = Cursor::new(content, k + 1, 0);
        c.expect('x')?;
        c.expect('^')?;
        let generator = c.tuple(n)?;
        c.expect('K')?;
        c.expect('[')?;
        let mut free = Vec::new();
        while !c.eat(']') {
            if c.at_end() {
                return c.err("expected `]`");
            }
            let at = c.pos;
            let i = c.int()? as usize;
            if i == 0 || i > n {
                c.pos = at;
                return c.err(format!("variable index {i} out of range 1..={n}"));
            }
            free.push(i - 1);
            c.eat(',');
        }
        if !c.at_end() {
            return c.err("expected end of line");
        }
        spaces.push(StanleySpace::new(generator, free));
    }
    Ok(spaces)
}

pub fn emit_decomposition(d: &StanleyDecomposition) -> String {
    d.spaces().iter().map(|s| format!("{s}\n")).collect()
}

/// Parses the listing printed by `Partition`'s `Display`: one
/// `[(c…) , (d…)]` per line, bottom then top.
pub fn parse_partition(text: &str, poset: Arc<CharacteristicPoset>) -> PResult<Partition> {
    let n = poset.num_vars();
    let mut intervals = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut c = Cursor::new(content, k + 1, 0);
        c.expect('[')?;
        let bottom = c.tuple(n)?;
        c.expect(',')?;
        let top = c.tuple(n)?;
        c.expect(']')?;
        if !c.at_end() {
            return c.err("expected end of line");
        }
        intervals.push((bottom, top));
    }
    Partition::from_vectors(poset, &intervals).map_err(|e| ParseError::invalid(1, 1, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
        ExponentVector::from(a)
    }

    #[test]
    fn parse_squares() {
        let f = parse_ideal_file("n=2\nI= x1^2, x2^2").unwrap();
        let gens = f.pair.numerator().generators();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&ev([2, 0])) && gens.contains(&ev([0, 2])));
        assert!(f.pair.denominator().is_zero());
        assert_eq!(f.g, None);
    }

    #[test]
    fn parse_figure4_with_g() {
        let text = "# the instance\nn = 2\nI = x1^2*x2^4, x1^3*x2^3, x1^5*x2\nJ = x1^4*x2^5, (6,2)\ng = 7 6\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.g, Some(ev([7, 6])));
        assert_eq!(f.pair.numerator().generators().len(), 3);
        assert!(f.pair.denominator().generators().contains(&ev([6, 2])));
    }

    #[test]
    fn parse_quotient_mode() {
        let f = parse_ideal_file("n=3\nmodule: S/I\nI= x1*x2").unwrap();
        assert!(f.pair.numerator().is_unit());
        assert_eq!(f.pair.denominator().generators(), &[ev([1, 1, 0])]);
    }

    #[test]
    fn parse_constant_and_repeated_variables() {
        let f = parse_ideal_file("n = 2\nI = x1*x1^2*x2").unwrap();
        assert_eq!(f.pair.numerator().generators(), &[ev([3, 1])]);
        let f = parse_ideal_file("n = 2\nI = 1").unwrap();
        assert!(f.pair.numerator().is_unit());
    }

    fn syntax_at(text: &str) -> (usize, usize) {
        let e = parse_ideal_file(text).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)), "{e}");
        (e.line, e.column)
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(syntax_at("n = 2\nI = x1^2, y2"), (2, 11));
        assert_eq!(syntax_at("n = 2\nI = x3"), (2, 6));
        assert_eq!(syntax_at("n = 2\nI = (1,2,3)"), (2, 5));
        assert_eq!(syntax_at("n = 2\nfoo = 1").0, 2);
        assert_eq!(syntax_at("n = 2\nI = x1\nI = x2").0, 3);
        assert_eq!(syntax_at("I = x1").0, 1);
        assert_eq!(syntax_at("n = 2\nI = x1\ng = 1 2 3").0, 3);
        assert_eq!(syntax_at("n = 2\nI = x1 x2"), (2, 8));
        assert_eq!(syntax_at("n = 2\nmodule = R\nI = x1").0, 2);
    }

    #[test]
    fn semantic_errors() {
        let e = parse_ideal_file("n = 2\nI = x1^2\nJ = x1").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Invalid(Error::NotContained(_))
        ));

        let e = parse_ideal_file("n = 2\nI = x1\nJ = x1").unwrap_err();
        assert!(e.is_empty_module());

        let e = parse_ideal_file("n = 2\nI = x1^3\ng = 2 0").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Invalid(Error::InadmissibleG { .. })
        ));
    }

    #[test]
    fn emit_round_trip_examples() {
        for text in [
            "n=2\nI= x1^2, x2^2",
            "n=3\nmodule= S/I\nI= x1*x2",
            "n = 2\nI = x1^2*x2^4, x1^3*x2^3, x1^5*x2\nJ = x1^4*x2^5, x1^6*x2^2\ng = 7 6",
            "n = 3\nI = 1\nJ = x1, x2*x3",
        ] {
            let f = parse_ideal_file(text).unwrap();
            let again = parse_ideal_file(&emit_ideal_file(&f.pair, f.g.as_ref())).unwrap();
            assert_eq!(f, again);
        }
    }

    #[test]
    fn decomposition_round_trip() {
        let text = "x^(1,3) K[ 1 2 ]\nx^(3,2) K[ 1 ]\n\n# last\nx^(3,1) K[1]\n";
        let spaces = parse_decomposition(text, 2).unwrap();
        assert_eq!(spaces.len(), 3);
        assert_eq!(spaces[0], StanleySpace::new(ev([1, 3]), [0, 1]));
        let pair =
            QuotientPair::ideal(MonomialIdeal::new(2, [ev([1, 3]), ev([3, 1])]).unwrap()).unwrap();
        let d = StanleyDecomposition::new(pair, spaces.clone()).unwrap();
        assert_eq!(
            parse_decomposition(&emit_decomposition(&d), 2).unwrap(),
            spaces
        );
        assert!(parse_decomposition("x^(0,2) K[]", 2).unwrap()[0]
            .free
            .is_empty());
        let e = parse_decomposition("x^(1,3) K[ 3 ]", 2).unwrap_err();
        assert_eq!((e.line, e.column), (1, 12));
    }

    #[test]
    fn partition_round_trip() {
        let pair = QuotientPair::ideal(MonomialIdeal::maximal(3)).unwrap();
        let poset = Arc::new(CharacteristicPoset::canonical(&pair).unwrap());
        let p = Partition::singletons(Arc::clone(&poset));
        let again = parse_partition(&p.to_string(), poset).unwrap();
        assert_eq!(p, again);
    }
}
