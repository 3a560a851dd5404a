//! Pretty JSON with arrays nested directly in arrays (matrix rows) kept on
//! one line.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;

enum Frame {
    Object { nonempty: bool },
    Array { compact: bool, nonempty: bool },
}

#[derive(Default)]
struct MatrixFormatter {
    stack: Vec<Frame>,
}

impl MatrixFormatter {
    fn indent<W: ?Sized + Write>(&self, w: &mut W) -> io::Result<()> {
        let depth = self.stack.len();
        w.write_all(b"\n")?;
        for _ in 0..depth {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn mark_nonempty(&mut self) {
        match self.stack.last_mut() {
            Some(Frame::Object { nonempty } | Frame::Array { nonempty, .. }) => *nonempty = true,
            None => {}
        }
    }

    fn compact(&self) -> bool {
        matches!(self.stack.last(), Some(Frame::Array { compact: true, .. }))
    }
}

impl Formatter for MatrixFormatter {
    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        let compact = matches!(self.stack.last(), Some(Frame::Array { .. }));
        self.stack.push(Frame::Array {
            compact,
            nonempty: false,
        });
        w.write_all(b"[")
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if let Some(Frame::Array {
            compact: false,
            nonempty: true,
        }) = self.stack.pop()
        {
            self.indent(w)?;
        }
        w.write_all(b"]")
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.mark_nonempty();
        if self.compact() {
            if !first {
                w.write_all(b", ")?;
            }
            return Ok(());
        }
        if !first {
            w.write_all(b",")?;
        }
        self.indent(w)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, _w: &mut W) -> io::Result<()> {
        Ok(())
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.stack.push(Frame::Object { nonempty: false });
        w.write_all(b"{")
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if let Some(Frame::Object { nonempty: true }) = self.stack.pop() {
            self.indent(w)?;
        }
        w.write_all(b"}")
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.mark_nonempty();
        if !first {
            w.write_all(b",")?;
        }
        self.indent(w)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, _w: &mut W) -> io::Result<()> {
        Ok(())
    }
}

/// Serializes `value` followed by a newline.
pub fn to_bytes<T: Serialize + ?Sized>(value: &T) -> anyhow::Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, MatrixFormatter::default());
    value.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(out)
}
