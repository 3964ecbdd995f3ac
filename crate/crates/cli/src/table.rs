//! Partition-labelled matrices and their JSON, CSV and LaTeX renderings.

use serde_json::{json, Map, Value};
use spin_kostka::Partition;

pub struct Table {
    /// Row-label symbol, `xi` or `lambda`.
    pub row_symbol: &'static str,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// Compact polynomial strings such as `1+t+2*t^3`.
    pub cells: Vec<Vec<String>>,
}

impl Table {
    pub fn to_json(&self, header: Map<String, Value>) -> Value {
        let mut out = header;
        out.insert("rows".into(), json!(self.rows));
        out.insert("cols".into(), json!(self.cols));
        out.insert("entries".into(), json!(self.cells));
        Value::Object(out)
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let corner = format!("{}\\mu", self.row_symbol);
        w.write_record(std::iter::once(corner).chain(self.cols.iter().map(|c| c.to_string())))?;
        for (r, row) in self.rows.iter().zip(&self.cells) {
            w.write_record(std::iter::once(r.to_string()).chain(row.iter().cloned()))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    /// The matrix layout with a label row and a label column.
    pub fn to_latex(&self) -> String {
        let mut out = format!("\\left[ \\begin{{array}}{{{}}}\n", "c".repeat(self.cols.len() + 1));
        let header: Vec<String> = self.cols.iter().map(latex_partition).collect();
        out.push_str(&format!(
            "\\{}\\backslash\\mu & {} \\\\\n",
            self.row_symbol,
            header.join(" & ")
        ));
        for (i, (r, row)) in self.rows.iter().zip(&self.cells).enumerate() {
            let cells: Vec<String> = row.iter().map(|c| latex_poly(c)).collect();
            let end = if i + 1 == self.rows.len() { "" } else { " \\\\" };
            out.push_str(&format!("{} & {}{end}\n", latex_partition(r), cells.join(" & ")));
        }
        out.push_str("\\end{array} \\right]\n");
        out
    }
}

/// `(1,1,1)` becomes `(1^3)`; everything else prints as is.
pub fn latex_partition(p: &Partition) -> String {
    let parts = p.parts();
    if parts.len() >= 2 && parts.iter().all(|&x| x == 1) {
        format!("(1^{})", braced(&parts.len().to_string()))
    } else {
        p.to_string()
    }
}

/// Drops `*` and braces multi-digit exponents.
pub fn latex_poly(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.next_if(char::is_ascii_digit) {
                    digits.push(d);
                }
                out.push('^');
                out.push_str(&braced(&digits));
            }
            c => out.push(c),
        }
    }
    out
}

fn braced(s: &str) -> String {
    if s.len() > 1 {
        format!("{{{s}}}")
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_helpers() {
        assert_eq!(latex_poly("1+2*t^3+q*t^12"), "1+2t^3+qt^{12}");
        assert_eq!(latex_partition(&"1,1,1".parse().unwrap()), "(1^3)");
        assert_eq!(latex_partition(&"2,1,1".parse().unwrap()), "(2,1,1)");
        assert_eq!(latex_partition(&"1".parse().unwrap()), "(1)");
    }

    #[test]
    fn csv_quotes_labels() {
        let t = Table {
            row_symbol: "xi",
            rows: vec!["2".parse().unwrap()],
            cols: vec!["2".parse().unwrap(), "1,1".parse().unwrap()],
            cells: vec![vec!["1".into(), "t".into()]],
        };
        assert_eq!(t.to_csv().unwrap(), "xi\\mu,(2),\"(1,1)\"\n(2),1,t\n");
    }
}
