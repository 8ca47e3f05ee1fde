use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::brace::LeftBrace;
use crate::cycleset::{CycleSet, Solution};
use crate::error::Result;
use crate::perm::Perm;

/// A syntax error. `line` and `column` are 1-based; `line` is 0 when the
/// input was a single permutation string.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {}, column {}: {kind}", self.line, self.column)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    PointOutOfRange {
        point: usize,
        degree: usize,
    },
    RepeatedPoint(usize),
    RowCount {
        expected: usize,
        found: usize,
    },
    RowOrder {
        expected: usize,
        found: usize,
    },
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::PointOutOfRange { point, degree } => {
                write!(f, "point {point} is outside 1..={degree}")
            }
            ParseErrorKind::RepeatedPoint(p) => write!(f, "point {p} appears more than once"),
            ParseErrorKind::RowCount { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            ParseErrorKind::RowOrder { expected, found } => {
                write!(f, "expected row {expected}, found row {found}")
            }
            ParseErrorKind::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
        }
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    err(line, column, ParseErrorKind::Syntax(msg.into()))
}

/// Cursor over one permutation string; columns are 1-based character offsets.
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<(usize, usize)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let from = self.chars[start].0;
        let to = self
            .chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i);
        self.text[from..to].parse().ok().map(|v| (v, start + 1))
    }
}

/// Parses `()` or a product of disjoint cycles such as `(1,8)(2,10)` over
/// the 1-based points `1..=degree`. Whitespace is allowed anywhere.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm, ParseError> {
    let mut cur = Cursor::new(text);
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut cycles = 0;
    cur.skip_ws();
    loop {
        if cur.peek().is_none() {
            break;
        }
        let open = cur.column();
        if !cur.eat('(') {
            return Err(syntax(0, cur.column(), "expected '('"));
        }
        cur.skip_ws();
        if cur.eat(')') {
            if cycles > 0 {
                return Err(syntax(0, open, "'()' cannot follow other cycles"));
            }
            cur.skip_ws();
            if cur.peek().is_some() {
                return Err(syntax(0, cur.column(), "unexpected input after '()'"));
            }
            return Ok(Perm::identity(degree));
        }
        let mut points = Vec::new();
        loop {
            cur.skip_ws();
            let Some((p, col)) = cur.int() else {
                return Err(syntax(0, cur.column(), "expected a point"));
            };
            if p == 0 || p > degree {
                return Err(err(
                    0,
                    col,
                    ParseErrorKind::PointOutOfRange { point: p, degree },
                ));
            }
            if std::mem::replace(&mut used[p - 1], true) {
                return Err(err(0, col, ParseErrorKind::RepeatedPoint(p)));
            }
            points.push(p - 1);
            cur.skip_ws();
            if cur.eat(',') {
                continue;
            }
            if cur.eat(')') {
                break;
            }
            return Err(syntax(0, cur.column(), "expected ',' or ')'"));
        }
        if points.len() < 2 {
            return Err(syntax(0, open, "a cycle needs at least two points"));
        }
        for (k, &p) in points.iter().enumerate() {
            images[p] = points[(k + 1) % points.len()];
        }
        cycles += 1;
        cur.skip_ws();
    }
    if cycles == 0 {
        return Err(syntax(
            0,
            cur.column(),
            "empty permutation; write '()' for the identity",
        ));
    }
    Ok(Perm::from_images(images).expect("disjoint cycles form a bijection"))
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect()
}

fn parse_header(lines: &[(usize, &str)], keyword: &str) -> Result<usize, ParseError> {
    let Some(&(no, line)) = lines.first() else {
        return Err(syntax(1, 1, format!("missing '{keyword} <size>' header")));
    };
    let mut words = line.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(syntax(no, 1, format!("expected '{keyword} <size>'")));
    }
    let size = words
        .next()
        .and_then(|w| w.parse::<usize>().ok())
        .ok_or_else(|| syntax(no, keyword.len() + 2, "expected a positive size"))?;
    if size == 0 {
        return Err(syntax(no, keyword.len() + 2, "size must be positive"));
    }
    if words.next().is_some() {
        return Err(syntax(no, 1, "trailing input after the size"));
    }
    Ok(size)
}

/// Parses `<keyword> <x> := <perm>` with the expected row label `x`.
fn parse_row(
    no: usize,
    line: &str,
    keyword: &str,
    expected: usize,
    n: usize,
) -> Result<Perm, ParseError> {
    let body = line.trim_start();
    let indent = line.len() - body.len();
    let Some(rest) = body.strip_prefix(keyword) else {
        return Err(syntax(
            no,
            indent + 1,
            format!("expected '{keyword} {expected} := ...'"),
        ));
    };
    let Some(assign) = rest.find(":=") else {
        return Err(syntax(no, indent + 1, "missing ':='"));
    };
    let label_col = indent + keyword.len() + 1;
    let label: usize = rest[..assign]
        .trim()
        .parse()
        .map_err(|_| syntax(no, label_col, "expected a row number"))?;
    if label != expected {
        return Err(err(
            no,
            label_col,
            ParseErrorKind::RowOrder {
                expected,
                found: label,
            },
        ));
    }
    let offset = indent + keyword.len() + assign + 2;
    let perm_text = &rest[assign + 2..];
    let offset_chars = line[..offset].chars().count();
    parse_perm(perm_text, n).map_err(|e| ParseError {
        line: no,
        column: e.column + offset_chars,
        kind: e.kind,
    })
}

fn parse_rows(
    lines: &[(usize, &str)],
    keyword: &str,
    n: usize,
    last_line: usize,
) -> Result<Vec<Perm>, ParseError> {
    let rows: Vec<&(usize, &str)> = lines
        .iter()
        .filter(|(_, l)| l.trim_start().starts_with(keyword))
        .collect();
    // Rows are checked in order so a syntax error wins over a short table.
    let mut perms = Vec::with_capacity(n);
    for (k, &&(no, line)) in rows.iter().enumerate() {
        if k == n {
            return Err(err(
                no,
                1,
                ParseErrorKind::RowCount {
                    expected: n,
                    found: rows.len(),
                },
            ));
        }
        perms.push(parse_row(no, line, keyword, k + 1, n)?);
    }
    if perms.len() != n {
        return Err(err(
            last_line,
            1,
            ParseErrorKind::RowCount {
                expected: n,
                found: perms.len(),
            },
        ));
    }
    Ok(perms)
}

/// Parses the cycle-set text format:
///
/// ```text
/// # comment
/// n 4
/// sigma 1 := (2,4)
/// sigma 2 := (1,3)
/// ...
/// ```
///
/// Syntax problems are reported as [`Error::Parse`]; tables that parse but
/// break an axiom are reported as [`Error::CycleSet`].
pub fn parse_cycle_set(text: &str) -> Result<CycleSet> {
    let lines = content_lines(text);
    let n = parse_header(&lines, "n")?;
    let body = &lines[1..];
    let last = lines.last().map_or(1, |l| l.0);
    if let Some(&(no, line)) = body
        .iter()
        .find(|(_, l)| !l.trim_start().starts_with("sigma"))
    {
        return Err(syntax(no, 1, format!("unexpected line '{}'", line.trim())).into());
    }
    let sigma = parse_rows(body, "sigma", n, last)?;
    CycleSet::new(sigma)
}

pub fn render_cycle_set(x: &CycleSet) -> String {
    let mut out = format!("n {}\n", x.size());
    for (i, s) in x.sigmas().iter().enumerate() {
        let _ = writeln!(out, "sigma {} := {}", i + 1, s);
    }
    out
}

/// Parses the solution format: `n <size>`, then `lambda <x> := <perm>` for
/// every `x`, then `rho <y> := <perm>` for every `y`.
pub fn parse_solution(text: &str) -> Result<Solution> {
    let lines = content_lines(text);
    let n = parse_header(&lines, "n")?;
    let body = &lines[1..];
    let last = lines.last().map_or(1, |l| l.0);
    if let Some(&(no, line)) = body
        .iter()
        .find(|(_, l)| !(l.trim_start().starts_with("lambda") || l.trim_start().starts_with("rho")))
    {
        return Err(syntax(no, 1, format!("unexpected line '{}'", line.trim())).into());
    }
    let lambda = parse_rows(body, "lambda", n, last)?;
    let rho = parse_rows(body, "rho", n, last)?;
    Solution::new(lambda, rho)
}

pub fn render_solution(s: &Solution) -> String {
    let mut out = format!("n {}\n", s.size());
    for x in 0..s.size() {
        let _ = writeln!(out, "lambda {} := {}", x + 1, s.lambda(x));
    }
    for y in 0..s.size() {
        let _ = writeln!(out, "rho {} := {}", y + 1, s.rho(y));
    }
    out
}

/// Parses the brace format: `m <order>`, `m` rows of the addition table, a
/// blank line, then `m` rows of the multiplication table. Entries are 0-based
/// and `0` is the shared neutral element.
pub fn parse_brace(text: &str) -> Result<LeftBrace> {
    let lines = content_lines(text);
    let m = parse_header(&lines, "m")?;
    let rows = &lines[1..];
    let last = lines.last().map_or(1, |l| l.0);
    if rows.len() != 2 * m {
        return Err(err(
            last,
            1,
            ParseErrorKind::RowCount {
                expected: 2 * m,
                found: rows.len(),
            },
        )
        .into());
    }
    let mut tables = Vec::with_capacity(2 * m);
    for &(no, line) in rows {
        let mut row = Vec::with_capacity(m);
        for (column, word) in words_with_columns(line) {
            let v: usize = word.parse().map_err(|_| {
                syntax(
                    no,
                    column,
                    format!("'{word}' is not a non-negative integer"),
                )
            })?;
            if v >= m {
                return Err(err(
                    no,
                    column,
                    ParseErrorKind::PointOutOfRange {
                        point: v,
                        degree: m,
                    },
                )
                .into());
            }
            row.push(v);
        }
        if row.len() != m {
            return Err(err(
                no,
                1,
                ParseErrorKind::NotSquare {
                    row: no,
                    len: row.len(),
                    expected: m,
                },
            )
            .into());
        }
        tables.push(row);
    }
    let mul = tables.split_off(m);
    LeftBrace::from_tables(tables, mul)
}

pub fn render_brace(b: &LeftBrace) -> String {
    let table = |t: Vec<Vec<usize>>| {
        t.iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    format!(
        "m {}\n{}\n\n{}\n",
        b.order(),
        table(b.add_table()),
        table(b.mul_table())
    )
}

/// Whitespace-separated words with their 1-based starting columns.
fn words_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    for (ci, (bi, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => {
                start = Some(bi);
                col = ci + 1;
            }
            (true, Some(s)) => {
                out.push((col, &line[s..bi]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((col, &line[s..]));
    }
    out
}

/// Tells the two table formats apart by their header keyword.
pub fn detect_format(text: &str) -> Option<&'static str> {
    let lines = content_lines(text);
    let first = lines.first()?.1.split_whitespace().next()?;
    match first {
        "m" => Some("brace"),
        "n" if lines
            .iter()
            .any(|(_, l)| l.trim_start().starts_with("lambda")) =>
        {
            Some("solution")
        }
        "n" => Some("cycleset"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn parses_spaced_notation() {
        let p = parse_perm("( 2,4)", 4).unwrap();
        assert_eq!(p.images(), &[0, 3, 2, 1]);
        assert!(parse_perm("()", 5).unwrap().is_identity());
        assert!(parse_perm("  (  )  ", 2).unwrap().is_identity());
        let p = parse_perm("( 1, 8)( 2,10)( 3,11)( 4, 9)( 5, 6)( 7,12)", 12).unwrap();
        assert!((&p * &p).is_identity());
        assert_eq!(p.apply(0), 7);
        assert_eq!(p.apply(1), 9);
        assert_eq!(p.to_string(), "(1,8)(2,10)(3,11)(4,9)(5,6)(7,12)");
    }

    #[test]
    fn reports_positions() {
        let e = parse_perm("(1,2)(2,3)", 3).unwrap_err();
        assert_eq!(
            (e.column, e.kind.clone()),
            (7, ParseErrorKind::RepeatedPoint(2))
        );
        let e = parse_perm("(1, 5)", 4).unwrap_err();
        assert_eq!(e.column, 5);
        assert_eq!(
            e.kind,
            ParseErrorKind::PointOutOfRange {
                point: 5,
                degree: 4
            }
        );
        let e = parse_perm("(0,1)", 4).unwrap_err();
        assert_eq!(e.column, 2);
        let e = parse_perm("(1,2", 4).unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_perm("(1;2)", 4).unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_perm("", 4).is_err());
        assert!(parse_perm("(3)", 4).is_err());
        assert!(parse_perm("()(1,2)", 4).is_err());
        assert!(parse_perm("(1,2)()", 4).is_err());
        assert!(parse_perm("(1,2) x", 4).is_err());
    }

    #[test]
    fn cycle_set_file() {
        let text = "# size 4\nn 4\nsigma 1 := ( 2,4)\nsigma 2 := ( 1,3)\n\
                    sigma 3 := ( 1, 2,3,4)\nsigma 4 := ( 1,4,3,2) # last\n";
        let x = parse_cycle_set(text).unwrap();
        assert_eq!(x.size(), 4);
        assert_eq!(parse_cycle_set(&render_cycle_set(&x)).unwrap(), x);
    }

    #[test]
    fn cycle_set_errors() {
        let e = parse_cycle_set("n 3\nsigma 1 := ()\nsigma 2 := ()\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse(ParseError {
                kind: ParseErrorKind::RowCount {
                    expected: 3,
                    found: 2
                },
                ..
            })
        ));
        let e = parse_cycle_set("n 2\nsigma 1 := ()\nsigma 2 := (1,2)\n").unwrap_err();
        assert!(matches!(e, Error::CycleSet(_)), "{e}");
        let e = parse_cycle_set("n 2\nsigma 2 := ()\nsigma 1 := ()\n").unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { line: 2, .. })), "{e}");
        let e = parse_cycle_set("n 2\nsigma 1 := ()\nsigma 2 := (1,3)\n").unwrap_err();
        let Error::Parse(pe) = e else { panic!() };
        assert_eq!((pe.line, pe.column), (3, 15));
        assert!(parse_cycle_set("n 0\n").is_err());
        assert!(parse_cycle_set("size 2\n").is_err());
        assert!(parse_cycle_set("").is_err());
    }

    #[test]
    fn brace_file() {
        let text = "m 2\n0 1\n1 0\n\n0 1\n1 0\n";
        let b = parse_brace(text).unwrap();
        assert_eq!(b, LeftBrace::trivial_cyclic(2).unwrap());
        assert_eq!(render_brace(&b), text);
        assert!(matches!(
            parse_brace("m 2\n0 1\n1\n\n0 1\n1 0\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_brace("m 2\n0 1\n1 0\n\n0 1\n"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn solution_file() {
        let x = CycleSet::cyclic(3).unwrap();
        let text = render_solution(&x.to_solution());
        assert_eq!(detect_format(&text), Some("solution"));
        let s = parse_solution(&text).unwrap();
        assert_eq!(s.to_cycle_set().unwrap(), x);
    }

    #[test]
    fn detects_formats() {
        assert_eq!(detect_format("# c\nn 1\nsigma 1 := ()\n"), Some("cycleset"));
        assert_eq!(detect_format("m 1\n0\n\n0\n"), Some("brace"));
        assert_eq!(detect_format("hello"), None);
    }

    proptest! {
        #[test]
        fn perm_render_parse_round_trip(v in (1usize..12).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
            let p = Perm::from_images(v).unwrap();
            prop_assert_eq!(parse_perm(&p.to_string(), p.degree()).unwrap(), p);
        }
    }
}
