use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LAngle,
    RAngle,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    Eq,
    NotEq,
    Bang,
    Arrow,
    DoubleArrow,
    Ident(String),
    Num(usize),
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LAngle => "`<`".into(),
            Tok::RAngle => "`>`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Eq => "`=`".into(),
            Tok::NotEq => "`!=`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DoubleArrow => "`<->`".into(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(n) => format!("`{n}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// Largest numeral literal accepted; numerals nest one level per unit.
pub const MAX_NUMERAL: usize = 4096;

pub(crate) fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b':' => Tok::Colon,
            b'=' => Tok::Eq,
            b'>' => Tok::RAngle,
            b'<' if src[i..].starts_with("<->") => {
                i += 2;
                Tok::DoubleArrow
            }
            b'<' => Tok::LAngle,
            b'-' if src[i..].starts_with("->") => {
                i += 1;
                Tok::Arrow
            }
            b'!' if src[i..].starts_with("!=") => {
                i += 1;
                Tok::NotEq
            }
            b'!' => Tok::Bang,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..=i];
                match digits.parse::<usize>() {
                    Ok(n) if n <= MAX_NUMERAL => Tok::Num(n),
                    _ => {
                        return Err(ParseError::at(
                            src,
                            start,
                            format!("numeral {digits} is larger than {MAX_NUMERAL}"),
                        ))
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric()
                        || bytes[i + 1] == b'_'
                        || bytes[i + 1] == b'\'')
                {
                    i += 1;
                }
                Tok::Ident(src[start..=i].to_string())
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(ParseError::at(
                    src,
                    start,
                    format!("unexpected character `{ch}`"),
                ));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}
