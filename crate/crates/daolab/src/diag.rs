use std::fmt;

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl Diagnostic {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic { pos, message: message.into() }
    }

    /// `error: ...` followed by the offending line and a caret under the column.
    pub fn render(&self, file: &str, source: &str) -> String {
        let line_text = source.lines().nth(self.pos.line.saturating_sub(1)).unwrap_or("");
        let gutter = self.pos.line.to_string().len();
        let mut out = format!("error: {}\n", self.message);
        out.push_str(&format!("{:w$}--> {}:{}\n", "", file, self.pos, w = gutter));
        out.push_str(&format!("{:w$} |\n", "", w = gutter));
        out.push_str(&format!("{} | {}\n", self.pos.line, line_text));
        out.push_str(&format!("{:w$} | {:c$}^\n", "", "", w = gutter, c = self.pos.col.saturating_sub(1)));
        out
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for Diagnostic {}
