//! Line-based N-Triples reader.
//!
//! Each non-blank, non-comment line holds exactly one statement:
//!
//! ```text
//! subject ws predicate ws object ws? '.' ws?
//! ```
//!
//! where the subject is `<IRI>` or `_:label`, the predicate is `<IRI>` and
//! the object is `<IRI>`, `_:label` or a literal `"..."` with an optional
//! `@lang` or `^^<IRI>` suffix. Errors are reported per line and never abort
//! the document.

use std::fmt;

use thiserror::Error;

/// An IRI reference, stored with escapes decoded. Equality is exact string
/// equality; no normalization or resolution happens.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IriRef(String);

impl IriRef {
    /// Wraps an IRI value. Returns `None` for an empty string.
    pub fn new(value: impl Into<String>) -> Option<Self> {
        let value = value.into();
        if value.is_empty() {
            None
        } else {
            Some(IriRef(value))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for IriRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        write_escaped_iri(f, &self.0)?;
        f.write_str(">")
    }
}

/// A document-local blank node label (`_:label`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankLabel(String);

impl BlankLabel {
    /// Accepts labels matching `[A-Za-z][A-Za-z0-9]*`.
    pub fn new(label: impl Into<String>) -> Option<Self> {
        let label = label.into();
        if is_blank_label(&label) {
            Some(BlankLabel(label))
        } else {
            None
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

fn is_blank_label(label: &str) -> bool {
    let mut chars = label.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

/// A literal. At most one of `language_tag` and `datatype` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub lexical_form: String,
    pub language_tag: Option<String>,
    pub datatype: Option<IriRef>,
}

impl Literal {
    pub fn plain(lexical_form: impl Into<String>) -> Self {
        Literal {
            lexical_form: lexical_form.into(),
            language_tag: None,
            datatype: None,
        }
    }

    /// The tag is lowercased.
    pub fn lang(lexical_form: impl Into<String>, tag: &str) -> Self {
        Literal {
            lexical_form: lexical_form.into(),
            language_tag: Some(tag.to_ascii_lowercase()),
            datatype: None,
        }
    }

    pub fn typed(lexical_form: impl Into<String>, datatype: IriRef) -> Self {
        Literal {
            lexical_form: lexical_form.into(),
            language_tag: None,
            datatype: Some(datatype),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("\"")?;
        write_escaped_literal(f, &self.lexical_form)?;
        f.write_str("\"")?;
        if let Some(tag) = &self.language_tag {
            write!(f, "@{tag}")?;
        }
        if let Some(dt) = &self.datatype {
            write!(f, "^^{dt}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(IriRef),
    Blank(BlankLabel),
    Literal(Literal),
}

impl Term {
    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn as_iri(&self) -> Option<&IriRef> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::Blank(b) => b.fmt(f),
            Term::Literal(l) => l.fmt(f),
        }
    }
}

impl From<IriRef> for Term {
    fn from(iri: IriRef) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankLabel> for Term {
    fn from(b: BlankLabel) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

/// One parsed triple. The subject is never a literal; the predicate is
/// always an IRI.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Statement {
    subject: Term,
    predicate: IriRef,
    object: Term,
    line_no: usize,
}

impl Statement {
    /// Returns `None` if `subject` is a literal.
    pub fn new(subject: Term, predicate: IriRef, object: Term, line_no: usize) -> Option<Self> {
        if subject.is_literal() {
            return None;
        }
        Some(Statement {
            subject,
            predicate,
            object,
            line_no,
        })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &IriRef {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    /// 1-based source line, or 0 for statements built in code.
    pub fn line_no(&self) -> usize {
        self.line_no
    }

    /// Compares the three terms, ignoring the line number.
    pub fn same_triple(&self, other: &Statement) -> bool {
        self.subject == other.subject && self.predicate == other.predicate && self.object == other.object
    }
}

/// Canonical N-Triples form, terminated by ` .` without a newline.
impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing terminal '.'")]
    MissingTerminalDot,
    #[error("unterminated IRI")]
    UnterminatedIri,
    #[error("invalid character in IRI")]
    InvalidIri,
    #[error("unterminated literal")]
    UnterminatedLiteral,
    #[error("literal in subject position")]
    LiteralAsSubject,
    #[error("blank node in predicate position")]
    BlankAsPredicate,
    #[error("literal in predicate position")]
    LiteralAsPredicate,
    #[error("bad escape sequence")]
    BadEscape,
    #[error("missing subject")]
    MissingSubject,
    #[error("missing predicate")]
    MissingPredicate,
    #[error("missing object")]
    MissingObject,
    #[error("invalid blank node label")]
    InvalidBlankLabel,
    #[error("invalid language tag")]
    InvalidLanguageTag,
    #[error("expected whitespace between terms")]
    MissingWhitespace,
    #[error("unexpected content after '.'")]
    TrailingContent,
    #[error("unexpected character")]
    UnexpectedCharacter,
}

/// A per-line error. `column` is the 0-based byte offset within the line.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// The whole input was not valid UTF-8.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("input is not valid UTF-8 (first invalid byte at offset {valid_up_to})")]
pub struct InvalidEncoding {
    pub valid_up_to: usize,
}

/// Bad escape in a literal or IRI body; `offset` is the byte offset of the
/// backslash within the raw content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("bad escape at offset {offset}")]
pub struct BadEscape {
    pub offset: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParsedDocument {
    pub statements: Vec<Statement>,
    pub errors: Vec<ParseError>,
}

impl ParsedDocument {
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Parses raw bytes, rejecting the whole document if it is not UTF-8.
pub fn parse_document(input: &[u8]) -> Result<ParsedDocument, InvalidEncoding> {
    match std::str::from_utf8(input) {
        Ok(text) => Ok(parse_str(text)),
        Err(e) => Err(InvalidEncoding {
            valid_up_to: e.valid_up_to(),
        }),
    }
}

/// Parses a document line by line. Blank lines and `#` comment lines are
/// skipped; malformed lines are reported and skipped.
pub fn parse_str(text: &str) -> ParsedDocument {
    let mut doc = ParsedDocument::default();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start_matches([' ', '\t']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match parse_line(line, idx + 1) {
            Ok(stmt) => doc.statements.push(stmt),
            Err(err) => doc.errors.push(err),
        }
    }
    doc
}

/// Parses a single statement line (without its newline).
pub fn parse_line(line: &str, line_no: usize) -> Result<Statement, ParseError> {
    let mut cursor = Cursor {
        src: line,
        pos: 0,
        line_no,
    };
    cursor.skip_ws();

    let subject = match cursor.peek() {
        None => return Err(cursor.error(ParseErrorKind::MissingSubject)),
        Some('"') => return Err(cursor.error(ParseErrorKind::LiteralAsSubject)),
        Some(_) => cursor.term()?,
    };

    cursor.require_ws()?;
    let predicate = match cursor.peek() {
        None | Some('.') => return Err(cursor.error(ParseErrorKind::MissingPredicate)),
        Some('_') => return Err(cursor.error(ParseErrorKind::BlankAsPredicate)),
        Some('"') => return Err(cursor.error(ParseErrorKind::LiteralAsPredicate)),
        Some(_) => match cursor.term()? {
            Term::Iri(iri) => iri,
            _ => unreachable!("only '<' starts an IRI term"),
        },
    };

    cursor.require_ws()?;
    let object = match cursor.peek() {
        None | Some('.') => return Err(cursor.error(ParseErrorKind::MissingObject)),
        Some(_) => cursor.term()?,
    };

    cursor.skip_ws();
    match cursor.peek() {
        Some('.') => cursor.bump(),
        _ => return Err(cursor.error(ParseErrorKind::MissingTerminalDot)),
    }
    cursor.skip_ws();
    if cursor.peek().is_some() {
        return Err(cursor.error(ParseErrorKind::TrailingContent));
    }

    Ok(Statement {
        subject,
        predicate,
        object,
        line_no,
    })
}

/// Decodes `\n \r \t \" \\` and `\uXXXX`. Any other backslash sequence is
/// rejected.
pub fn unescape_literal(raw: &str) -> Result<String, BadEscape> {
    unescape(raw, true)
}

fn unescape(raw: &str, allow_char_escapes: bool) -> Result<String, BadEscape> {
    if !raw.contains('\\') {
        return Ok(raw.to_owned());
    }
    let mut out = String::with_capacity(raw.len());
    let mut iter = raw.char_indices();
    while let Some((offset, c)) = iter.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        let bad = BadEscape { offset };
        let decoded = match iter.next().map(|(_, c)| c) {
            Some('n') if allow_char_escapes => '\n',
            Some('r') if allow_char_escapes => '\r',
            Some('t') if allow_char_escapes => '\t',
            Some('"') if allow_char_escapes => '"',
            Some('\\') if allow_char_escapes => '\\',
            Some('u') => {
                let start = offset + 2;
                let hex = raw.get(start..start + 4).ok_or(bad)?;
                if !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
                    return Err(bad);
                }
                let code = u32::from_str_radix(hex, 16).map_err(|_| bad)?;
                let c = char::from_u32(code).ok_or(bad)?;
                for _ in 0..4 {
                    iter.next();
                }
                c
            }
            _ => return Err(bad),
        };
        out.push(decoded);
    }
    Ok(out)
}

pub(crate) fn write_escaped_literal(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    for c in s.chars() {
        match c {
            '\\' => f.write_str("\\\\")?,
            '"' => f.write_str("\\\"")?,
            '\n' => f.write_str("\\n")?,
            '\r' => f.write_str("\\r")?,
            '\t' => f.write_str("\\t")?,
            c => write!(f, "{c}")?,
        }
    }
    Ok(())
}

fn iri_char_needs_escape(c: char) -> bool {
    c == '<' || c == '>' || c == '"' || c == '\\' || c.is_whitespace() || c.is_control()
}

pub(crate) fn write_escaped_iri(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    for c in s.chars() {
        if iri_char_needs_escape(c) && (c as u32) <= 0xFFFF {
            write!(f, "\\u{:04X}", c as u32)?;
        } else {
            write!(f, "{c}")?;
        }
    }
    Ok(())
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line_no: usize,
}

impl Cursor<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(self.pos, kind)
    }

    fn error_at(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line_no,
            column,
            kind,
        }
    }

    fn skip_ws(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn require_ws(&mut self) -> Result<(), ParseError> {
        let at = self.pos;
        if self.skip_ws() == 0 && self.peek().is_some() {
            return Err(self.error_at(at, ParseErrorKind::MissingWhitespace));
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some('<') => self.iri().map(Term::Iri),
            Some('_') => self.blank().map(Term::Blank),
            Some('"') => self.literal().map(Term::Literal),
            _ => Err(self.error(ParseErrorKind::UnexpectedCharacter)),
        }
    }

    fn iri(&mut self) -> Result<IriRef, ParseError> {
        let open = self.pos;
        self.bump();
        let body_start = self.pos;
        loop {
            match self.peek() {
                None => return Err(self.error_at(open, ParseErrorKind::UnterminatedIri)),
                Some('>') => break,
                Some(c) if c == '<' || c == '"' || c.is_whitespace() || c.is_control() => {
                    return Err(self.error(ParseErrorKind::InvalidIri));
                }
                Some(_) => self.bump(),
            }
        }
        let raw = &self.src[body_start..self.pos];
        self.bump();
        let value = unescape(raw, false)
            .map_err(|e| self.error_at(body_start + e.offset, ParseErrorKind::BadEscape))?;
        IriRef::new(value).ok_or_else(|| self.error_at(open, ParseErrorKind::InvalidIri))
    }

    fn blank(&mut self) -> Result<BlankLabel, ParseError> {
        let start = self.pos;
        if !self.rest().starts_with("_:") {
            return Err(self.error(ParseErrorKind::InvalidBlankLabel));
        }
        self.pos += 2;
        let label_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        BlankLabel::new(&self.src[label_start..self.pos])
            .ok_or_else(|| self.error_at(start, ParseErrorKind::InvalidBlankLabel))
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let open = self.pos;
        self.bump();
        let body_start = self.pos;
        loop {
            match self.peek() {
                None => return Err(self.error_at(open, ParseErrorKind::UnterminatedLiteral)),
                Some('"') => break,
                Some('\\') => {
                    self.bump();
                    if self.peek().is_none() {
                        return Err(self.error_at(open, ParseErrorKind::UnterminatedLiteral));
                    }
                    self.bump();
                }
                Some(_) => self.bump(),
            }
        }
        let raw = &self.src[body_start..self.pos];
        self.bump();
        let lexical_form = unescape_literal(raw)
            .map_err(|e| self.error_at(body_start + e.offset, ParseErrorKind::BadEscape))?;

        match self.peek() {
            Some('@') => {
                let at = self.pos;
                self.bump();
                let tag_start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '-') {
                    self.pos += 1;
                }
                let tag = &self.src[tag_start..self.pos];
                if !is_language_tag(tag) {
                    return Err(self.error_at(at, ParseErrorKind::InvalidLanguageTag));
                }
                Ok(Literal::lang(lexical_form, tag))
            }
            Some('^') => {
                if !self.rest().starts_with("^^<") {
                    return Err(self.error(ParseErrorKind::InvalidIri));
                }
                self.pos += 2;
                let datatype = self.iri()?;
                Ok(Literal::typed(lexical_form, datatype))
            }
            _ => Ok(Literal::plain(lexical_form)),
        }
    }
}

/// `[A-Za-z]+ ('-' [A-Za-z0-9]+)*`
fn is_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let primary = parts.next().unwrap_or("");
    !primary.is_empty()
        && primary.bytes().all(|b| b.is_ascii_alphabetic())
        && parts.all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_alphanumeric()))
}
