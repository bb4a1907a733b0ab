//! Serializable table documents: multiplication tables, character
//! tables, tables of marks and Gram matrices, with deterministic JSON
//! and CSV emitters and their parsers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::characters::{conjugacy_classes, marks_matrix, perm_character};
use crate::class_algebra::{canonical_representative, multiply_classes, GramMatrix};
use crate::error::{Error, Result};
use crate::solomon::StructureTable;
use crate::weyl::{enumerate_partitions, enumerate_subsets, Rank};

/// Which basis a multiplication table is indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Solomon,
    Class,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Solomon => "solomon",
            Algebra::Class => "class",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub strategy: String,
}

/// A full basis-product table of one of the two algebras. Cell (i, j)
/// maps basis labels to the nonnegative integer coefficients of the
/// product of basis elements i and j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub rank: usize,
    pub algebra: Algebra,
    pub labels: Vec<String>,
    pub cells: Vec<Vec<BTreeMap<String, u64>>>,
    pub metadata: Metadata,
}

fn metadata(table: &StructureTable) -> Metadata {
    Metadata {
        version: env!("CARGO_PKG_VERSION").to_string(),
        strategy: table.strategy().name().to_string(),
    }
}

/// The multiplication table of the class algebra Σ_W(A_n), classes in
/// canonical partition order.
pub fn class_table(table: &StructureTable) -> Result<TableDocument> {
    let rank = table.rank();
    let classes = enumerate_partitions(rank);
    let labels: Vec<String> = classes.iter().map(|p| p.to_string()).collect();
    let mut cells = Vec::with_capacity(classes.len());
    for a in &classes {
        let mut row = Vec::with_capacity(classes.len());
        for b in &classes {
            let product = multiply_classes(a, b, table)?;
            let cell: BTreeMap<String, u64> = product
                .coeffs()
                .iter()
                .map(|(c, v)| {
                    let n = v
                        .to_integer()
                        .try_into()
                        .expect("class structure constants are nonnegative integers");
                    (c.to_string(), n)
                })
                .collect();
            row.push(cell);
        }
        cells.push(row);
    }
    Ok(TableDocument {
        rank: rank.n(),
        algebra: Algebra::Class,
        labels,
        cells,
        metadata: metadata(table),
    })
}

/// The multiplication table of the Solomon algebra Σ(W), subsets in
/// bitmask order.
pub fn solomon_table(table: &StructureTable) -> Result<TableDocument> {
    let rank = table.rank();
    let subsets = enumerate_subsets(rank);
    let labels: Vec<String> = subsets.iter().map(|s| s.to_string()).collect();
    let mut cells = Vec::with_capacity(subsets.len());
    for &j in &subsets {
        let mut row = Vec::with_capacity(subsets.len());
        for &k in &subsets {
            let cell: BTreeMap<String, u64> = table
                .row(j, k)
                .iter()
                .map(|(l, &a)| (l.to_string(), a))
                .collect();
            row.push(cell);
        }
        cells.push(row);
    }
    Ok(TableDocument {
        rank: rank.n(),
        algebra: Algebra::Solomon,
        labels,
        cells,
        metadata: metadata(table),
    })
}

impl TableDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<TableDocument> {
        serde_json::from_str(s)
            .map_err(|e| Error::ContractViolation(format!("malformed table JSON: {e}")))
    }

    /// One CSV row per basis pair: rank, left label, right label, and
    /// the product as `coeff*label` terms joined by `+`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rank,algebra,left,right,product\n");
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let product = if cell.is_empty() {
                    "0".to_string()
                } else {
                    cell.iter()
                        .map(|(label, c)| format!("{c}*{label}"))
                        .collect::<Vec<_>>()
                        .join("+")
                };
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    self.rank,
                    self.algebra.name(),
                    quote(&self.labels[i]),
                    quote(&self.labels[j]),
                    quote(&product)
                ));
            }
        }
        out
    }

    /// Parses the CSV emitted by [`TableDocument::to_csv`]. Metadata is
    /// not carried by CSV; the caller supplies it for the round trip.
    pub fn from_csv(s: &str, metadata: Metadata) -> Result<TableDocument> {
        let mut lines = s.lines();
        let header = lines.next().unwrap_or_default();
        if header != "rank,algebra,left,right,product" {
            return Err(Error::ContractViolation(format!(
                "unexpected CSV header: {header}"
            )));
        }
        let mut rank = None;
        let mut algebra = None;
        let mut labels: Vec<String> = Vec::new();
        let mut parsed: Vec<(String, String, BTreeMap<String, u64>)> = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let fields = split_csv_line(line)?;
            let [r, alg, left, right, product] = fields.as_slice() else {
                return Err(Error::ContractViolation(format!(
                    "expected 5 CSV fields, got {}",
                    fields.len()
                )));
            };
            let r: usize = r
                .parse()
                .map_err(|_| Error::ContractViolation(format!("bad rank field: {r}")))?;
            let alg = match alg.as_str() {
                "solomon" => Algebra::Solomon,
                "class" => Algebra::Class,
                other => {
                    return Err(Error::ContractViolation(format!(
                        "unknown algebra: {other}"
                    )))
                }
            };
            if *rank.get_or_insert(r) != r || *algebra.get_or_insert(alg) != alg {
                return Err(Error::ContractViolation(
                    "inconsistent rank or algebra across CSV rows".into(),
                ));
            }
            if !labels.contains(left) {
                labels.push(left.clone());
            }
            let mut cell = BTreeMap::new();
            if product != "0" {
                for term in product.split('+') {
                    let (c, label) = term.split_once('*').ok_or_else(|| {
                        Error::ContractViolation(format!("malformed product term: {term}"))
                    })?;
                    let c: u64 = c.parse().map_err(|_| {
                        Error::ContractViolation(format!("bad coefficient: {c}"))
                    })?;
                    cell.insert(label.to_string(), c);
                }
            }
            parsed.push((left.clone(), right.clone(), cell));
        }
        let rank = rank.ok_or_else(|| Error::ContractViolation("empty CSV table".into()))?;
        let algebra = algebra.expect("set together with rank");
        let size = labels.len();
        if parsed.len() != size * size {
            return Err(Error::ContractViolation(format!(
                "expected {} cells, got {}",
                size * size,
                parsed.len()
            )));
        }
        let mut cells = vec![vec![BTreeMap::new(); size]; size];
        for (left, right, cell) in parsed {
            let i = labels.iter().position(|l| *l == left).unwrap();
            let j = labels
                .iter()
                .position(|l| *l == right)
                .ok_or_else(|| Error::ContractViolation(format!("unknown label: {right}")))?;
            cells[i][j] = cell;
        }
        Ok(TableDocument {
            rank,
            algebra,
            labels,
            cells,
            metadata,
        })
    }
}

fn quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn split_csv_line(line: &str) -> Result<Vec<String>> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    cur.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' if cur.is_empty() => quoted = true,
            ',' if !quoted => {
                fields.push(std::mem::take(&mut cur));
            }
            c => cur.push(c),
        }
    }
    if quoted {
        return Err(Error::ContractViolation(format!(
            "unterminated quote in CSV line: {line}"
        )));
    }
    fields.push(cur);
    Ok(fields)
}

/// A labelled integer matrix (character table or table of marks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rank: usize,
    pub kind: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub values: Vec<Vec<u64>>,
}

impl MatrixDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("matrix serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<MatrixDocument> {
        serde_json::from_str(s)
            .map_err(|e| Error::ContractViolation(format!("malformed matrix JSON: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&quote(&self.kind));
        for label in &self.col_labels {
            out.push(',');
            out.push_str(&quote(label));
        }
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.values) {
            out.push_str(&quote(label));
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// The character table of the χ_λ: rows are class-algebra basis labels,
/// columns the cycle-type classes of S_{n+1}.
pub fn character_table(rank: Rank) -> Result<MatrixDocument> {
    let classes = enumerate_partitions(rank);
    let col_labels: Vec<String> = conjugacy_classes(rank)
        .iter()
        .map(|(c, _)| c.to_string())
        .collect();
    let mut values = Vec::with_capacity(classes.len());
    for lambda in &classes {
        let j = canonical_representative(lambda, rank)?;
        let chi = perm_character(j, rank);
        values.push(
            enumerate_partitions(rank)
                .iter()
                .map(|c| {
                    chi.value(c)
                        .to_integer()
                        .try_into()
                        .expect("permutation character values are nonnegative integers")
                })
                .collect(),
        );
    }
    Ok(MatrixDocument {
        rank: rank.n(),
        kind: "characters".to_string(),
        row_labels: classes.iter().map(|p| p.to_string()).collect(),
        col_labels,
        values,
    })
}

/// The parabolic table of marks: rows are the actions W/W_λ, columns
/// the parabolic classes W_P.
pub fn marks_table(rank: Rank) -> Result<MatrixDocument> {
    let classes = enumerate_partitions(rank);
    let labels: Vec<String> = classes.iter().map(|p| p.to_string()).collect();
    let matrix = marks_matrix(rank)?;
    let values = (0..matrix.rows())
        .map(|i| {
            (0..matrix.cols())
                .map(|j| {
                    matrix
                        .get(i, j)
                        .to_integer()
                        .try_into()
                        .expect("marks are nonnegative integers")
                })
                .collect()
        })
        .collect();
    Ok(MatrixDocument {
        rank: rank.n(),
        kind: "marks".to_string(),
        row_labels: labels.clone(),
        col_labels: labels,
        values,
    })
}

/// CSV export of a Gram matrix as exact numerator/denominator pairs.
pub fn gram_to_csv(gram: &GramMatrix) -> String {
    let mut out = String::from("left,right,numerator,denominator\n");
    for (i, a) in gram.order.iter().enumerate() {
        for (j, b) in gram.order.iter().enumerate() {
            let v = gram.entries.get(i, j);
            out.push_str(&format!(
                "{},{},{},{}\n",
                quote(&a.to_string()),
                quote(&b.to_string()),
                v.numer(),
                v.denom()
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_algebra::gram_matrix;
    use crate::solomon::Strategy;

    fn table(n: usize) -> StructureTable {
        StructureTable::compute(Rank::new(n).unwrap(), Strategy::Auto).unwrap()
    }

    #[test]
    fn class_table_rank_1() {
        let doc = class_table(&table(1)).unwrap();
        assert_eq!(doc.labels, vec!["[2]", "[1,1]"]);
        // identity row and column, and x_∅·x_∅ = 2x_∅
        assert_eq!(doc.cells[0][0], BTreeMap::from([("[2]".into(), 1)]));
        assert_eq!(doc.cells[0][1], BTreeMap::from([("[1,1]".into(), 1)]));
        assert_eq!(doc.cells[1][0], BTreeMap::from([("[1,1]".into(), 1)]));
        assert_eq!(doc.cells[1][1], BTreeMap::from([("[1,1]".into(), 2)]));
    }

    #[test]
    fn json_round_trip() {
        for algebra in [Algebra::Class, Algebra::Solomon] {
            let t = table(2);
            let doc = match algebra {
                Algebra::Class => class_table(&t).unwrap(),
                Algebra::Solomon => solomon_table(&t).unwrap(),
            };
            assert_eq!(TableDocument::from_json(&doc.to_json()).unwrap(), doc);
        }
    }

    #[test]
    fn csv_round_trip() {
        let t = table(3);
        for doc in [class_table(&t).unwrap(), solomon_table(&t).unwrap()] {
            let parsed =
                TableDocument::from_csv(&doc.to_csv(), doc.metadata.clone()).unwrap();
            assert_eq!(parsed, doc);
        }
    }

    #[test]
    fn deterministic_output() {
        let a = class_table(&table(3)).unwrap();
        let b = class_table(&table(3)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn csv_quoting_handles_commas_in_labels() {
        let line = split_csv_line("3,class,\"[3,1]\",\"[2,2]\",\"2*[2,1,1]\"").unwrap();
        assert_eq!(line, vec!["3", "class", "[3,1]", "[2,2]", "2*[2,1,1]"]);
    }

    #[test]
    fn character_and_marks_documents() {
        let r = Rank::new(3).unwrap();
        let chars = character_table(r).unwrap();
        // natural character of S_4 in the (3,1) row; columns in canonical
        // order [4],[3,1],[2,2],[2,1,1],[1,1,1,1]
        let row31 = &chars.values[chars.row_labels.iter().position(|l| l == "[3,1]").unwrap()];
        assert_eq!(row31, &vec![0, 1, 0, 2, 4]);
        let marks = marks_table(r).unwrap();
        // trivial-subgroup column holds the indices |W : W_λ|
        let trivial_col = marks
            .col_labels
            .iter()
            .position(|l| l == "[1,1,1,1]")
            .unwrap();
        let indices: Vec<u64> = marks.values.iter().map(|row| row[trivial_col]).collect();
        assert_eq!(indices, vec![1, 4, 6, 12, 24]);
        let parsed = MatrixDocument::from_json(&chars.to_json()).unwrap();
        assert_eq!(parsed, chars);
    }

    #[test]
    fn gram_csv_has_integer_entries() {
        let g = gram_matrix(&table(2)).unwrap();
        let csv = gram_to_csv(&g);
        assert!(csv.lines().count() > 1);
        for line in csv.lines().skip(1) {
            assert!(line.ends_with(",1"), "denominator 1 expected: {line}");
        }
    }
}
