use std::fmt;

/// 1-based line and column (in characters).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub fn new(line: usize, column: usize) -> Self {
        Pos { line, column }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Keyword {
    Base,
    Scale,
    Signed,
    Dim,
    Check,
    Express,
    In,
    PiGroups,
    Ratio,
}

impl Keyword {
    fn from_word(word: &str) -> Option<Keyword> {
        Some(match word {
            "base" => Keyword::Base,
            "scale" => Keyword::Scale,
            "signed" => Keyword::Signed,
            "dim" => Keyword::Dim,
            "check" => Keyword::Check,
            "express" => Keyword::Express,
            "in" => Keyword::In,
            "pigroups" => Keyword::PiGroups,
            "ratio" => Keyword::Ratio,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Keyword::Base => "base",
            Keyword::Scale => "scale",
            Keyword::Signed => "signed",
            Keyword::Dim => "dim",
            Keyword::Check => "check",
            Keyword::Express => "express",
            Keyword::In => "in",
            Keyword::PiGroups => "pigroups",
            Keyword::Ratio => "ratio",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TokenKind {
    Ident(String),
    /// Numeric literal, kept as written. A `-` directly followed by a digit
    /// belongs to the number.
    Num(String),
    Keyword(Keyword),
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Tilde,
    Colon,
    Semi,
    Eq,
    Minus,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => write!(f, "identifier `{name}`"),
            TokenKind::Num(text) => write!(f, "number `{text}`"),
            TokenKind::Keyword(k) => write!(f, "keyword `{}`", k.as_str()),
            TokenKind::Star => write!(f, "`*`"),
            TokenKind::Slash => write!(f, "`/`"),
            TokenKind::Caret => write!(f, "`^`"),
            TokenKind::LParen => write!(f, "`(`"),
            TokenKind::RParen => write!(f, "`)`"),
            TokenKind::Comma => write!(f, "`,`"),
            TokenKind::Tilde => write!(f, "`~`"),
            TokenKind::Colon => write!(f, "`:`"),
            TokenKind::Semi => write!(f, "`;`"),
            TokenKind::Eq => write!(f, "`=`"),
            TokenKind::Minus => write!(f, "`-`"),
            TokenKind::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for LexError {}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn pos(&self) -> Pos {
        Pos::new(self.line, self.column)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn eat_digits(&mut self, out: &mut String) -> usize {
        let mut n = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.bump();
            n += 1;
        }
        n
    }
}

/// Splits `input` into tokens, ending with a single [`TokenKind::Eof`].
pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let mut cur = Cursor {
        chars: input.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    let mut last_pos = Pos::new(1, 1);
    while let Some(c) = cur.peek() {
        let pos = cur.pos();
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        let kind = if c.is_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(c) = cur.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
                word.push(c);
                cur.bump();
            }
            match Keyword::from_word(&word) {
                Some(k) => TokenKind::Keyword(k),
                None => TokenKind::Ident(word),
            }
        } else if c.is_ascii_digit() {
            TokenKind::Num(lex_number(&mut cur, String::new())?)
        } else {
            cur.bump();
            match c {
                '-' if cur.peek().is_some_and(|c| c.is_ascii_digit()) => {
                    TokenKind::Num(lex_number(&mut cur, "-".into())?)
                }
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                ',' => TokenKind::Comma,
                '~' => TokenKind::Tilde,
                ':' => TokenKind::Colon,
                ';' => TokenKind::Semi,
                '=' => TokenKind::Eq,
                other => {
                    return Err(LexError {
                        pos,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        tokens.push(Token { kind, pos });
        last_pos = Pos::new(cur.line, cur.column.saturating_sub(1).max(1));
    }
    let eof = if tokens.is_empty() { Pos::new(1, 1) } else { last_pos };
    tokens.push(Token {
        kind: TokenKind::Eof,
        pos: eof,
    });
    Ok(tokens)
}

fn lex_number(cur: &mut Cursor<'_>, mut text: String) -> Result<String, LexError> {
    cur.eat_digits(&mut text);
    if cur.peek() == Some('.') {
        let dot = cur.pos();
        text.push('.');
        cur.bump();
        if cur.eat_digits(&mut text) == 0 {
            return Err(LexError {
                pos: dot,
                message: "expected digits after decimal point".into(),
            });
        }
    }
    if let Some(e) = cur.peek().filter(|c| *c == 'e' || *c == 'E') {
        let marker = cur.pos();
        text.push(e);
        cur.bump();
        if let Some(sign) = cur.peek().filter(|c| *c == '+' || *c == '-') {
            text.push(sign);
            cur.bump();
        }
        if cur.eat_digits(&mut text) == 0 {
            return Err(LexError {
                pos: marker,
                message: "expected digits in exponent".into(),
            });
        }
    }
    Ok(text)
}
