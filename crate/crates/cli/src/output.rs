use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::args::Format;
use crate::Failure;

/// A result in all three encodings.
pub struct Document {
    pub json: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
}

impl Document {
    pub fn new(json: &impl Serialize, header: Vec<&'static str>, rows: Vec<Vec<String>>, pretty: String) -> Document {
        Document {
            json: serde_json::to_string_pretty(json).expect("documents are plain data") + "\n",
            header,
            rows,
            pretty,
        }
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, Failure> {
        match format {
            Format::Json => Ok(self.json.clone().into_bytes()),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
                w.write_record(&self.header).map_err(Failure::io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(Failure::io)?;
                }
                w.into_inner().map_err(|e| Failure::io(e.into_error()))
            }
            Format::Pretty => Ok(self.pretty.clone().into_bytes()),
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<(), Failure> {
        let bytes = self.render(format)?;
        match out {
            Some(p) => fs::write(p, bytes).map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display()))),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(&bytes).and_then(|_| stdout.flush()).map_err(Failure::io)
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for r in rows {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_pads_columns() {
        let rows = vec![vec!["(0;1)".to_string(), "1".to_string()], vec!["(;2)".to_string(), "(a)/(a+1)".to_string()]];
        assert_eq!(table(&["Ω", "c"], &rows), "Ω      c\n(0;1)  1\n(;2)   (a)/(a+1)\n");
    }

    #[test]
    fn csv_quotes_commas() {
        let doc = Document::new(&(), vec!["omega", "c"], vec![vec!["(1,0;2)".into(), "a".into()]], String::new());
        let out = String::from_utf8(doc.render(Format::Csv).unwrap()).unwrap();
        assert_eq!(out, "omega,c\n\"(1,0;2)\",a\n");
    }
}
