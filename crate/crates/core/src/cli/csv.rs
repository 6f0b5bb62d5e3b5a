use std::fmt::Write;

/// Scientific notation with 12 significant digits.
pub fn num(v: f64) -> String {
    if v.is_infinite() {
        return "unbounded".to_string();
    }
    if v == 0.0 {
        // keep -0.0 and 0.0 byte-identical
        return format!("{:.11e}", 0.0);
    }
    format!("{v:.11e}")
}

/// CSV document with `#`-prefixed metadata lines ahead of the header.
#[derive(Debug, Default)]
pub struct Document {
    buf: String,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn meta(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        writeln!(self.buf, "# {key}={value}").unwrap();
        self
    }

    pub fn row<I, S>(&mut self, fields: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for f in fields {
            if !first {
                self.buf.push(',');
            }
            self.buf.push_str(f.as_ref());
            first = false;
        }
        self.buf.push('\n');
        self
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
