use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cpoly::{CPoly, D, LAMBDA};
use crate::error::{Error, Result};

use super::combo::Combo;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub name: String,
    /// 0 even, 1 odd
    pub parity: u8,
    pub index: usize,
}

pub fn parity_name(p: u8) -> &'static str {
    if p == 0 {
        "even"
    } else {
        "odd"
    }
}

/// Koszul sign `(-1)^{p q}`.
pub fn koszul(p: u8, q: u8) -> i64 {
    if p & q & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Where an algebra came from; used by analyses that need the ambient shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    Custom,
    Cur,
    Vir,
    W(usize),
    K(usize),
    K4Prime,
    S(usize),
    STilde(usize),
    CK6,
    Tensor(usize),
    SemidirectWCur(usize),
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Custom => write!(f, "custom"),
            FamilyTag::Cur => write!(f, "Cur"),
            FamilyTag::Vir => write!(f, "Vir"),
            FamilyTag::W(n) => write!(f, "W{n}"),
            FamilyTag::K(n) => write!(f, "K{n}"),
            FamilyTag::K4Prime => write!(f, "K4prime"),
            FamilyTag::S(n) => write!(f, "S{n}"),
            FamilyTag::STilde(n) => write!(f, "Stilde{n}"),
            FamilyTag::CK6 => write!(f, "CK6"),
            FamilyTag::Tensor(n) => write!(f, "Tensor{n}"),
            FamilyTag::SemidirectWCur(n) => write!(f, "WCur{n}"),
        }
    }
}

pub type Rule = Arc<dyn Fn(usize, usize) -> Combo + Send + Sync>;

/// A rows × cols grid of bracket values in `(∂, λ)`, filled eagerly or on
/// first access from a rule.
pub struct Table {
    rows: usize,
    cols: usize,
    cells: Vec<OnceLock<Combo>>,
    rule: Option<Rule>,
}

impl Table {
    pub fn explicit(rows: usize, cols: usize, mut entries: HashMap<(usize, usize), Combo>) -> Self {
        let cells = (0..rows * cols)
            .map(|k| {
                let c = OnceLock::new();
                let _ = c.set(entries.remove(&(k / cols, k % cols)).unwrap_or_default());
                c
            })
            .collect();
        Table {
            rows,
            cols,
            cells,
            rule: None,
        }
    }

    pub fn lazy(rows: usize, cols: usize, rule: Rule) -> Self {
        Table {
            rows,
            cols,
            cells: (0..rows * cols).map(|_| OnceLock::new()).collect(),
            rule: Some(rule),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Combo {
        assert!(i < self.rows && j < self.cols, "table index out of range");
        self.cells[i * self.cols + j]
            .get_or_init(|| (self.rule.as_ref().expect("unset cell"))(i, j))
    }
}

/// A finite Lie conformal superalgebra, free over `ℂ[∂]` on `labels`.
#[derive(Clone)]
pub struct Algebra {
    pub name: String,
    pub labels: Vec<BasisLabel>,
    pub params: Vec<String>,
    pub tag: FamilyTag,
    table: Arc<Table>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("rank", &self.rank())
            .finish()
    }
}

pub(crate) fn make_labels(names: &[(String, u8)]) -> Result<Vec<BasisLabel>> {
    let mut seen = std::collections::HashSet::new();
    names
        .iter()
        .enumerate()
        .map(|(index, (name, parity))| {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
            Ok(BasisLabel {
                name: name.clone(),
                parity: *parity,
                index,
            })
        })
        .collect()
}

impl Algebra {
    /// Builds from an explicit table; missing pairs are zero.
    pub fn from_table(
        name: &str,
        labels: &[(String, u8)],
        entries: HashMap<(usize, usize), Combo>,
    ) -> Result<Self> {
        let labels = make_labels(labels)?;
        let n = labels.len();
        for &(i, j) in entries.keys() {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), n });
            }
        }
        Ok(Algebra {
            name: name.into(),
            labels,
            params: Vec::new(),
            tag: FamilyTag::Custom,
            table: Arc::new(Table::explicit(n, n, entries)),
        })
    }

    /// Builds from a rule evaluated lazily per basis pair.
    pub fn from_rule(name: &str, labels: &[(String, u8)], rule: Rule) -> Result<Self> {
        let labels = make_labels(labels)?;
        let n = labels.len();
        Ok(Algebra {
            name: name.into(),
            labels,
            params: Vec::new(),
            tag: FamilyTag::Custom,
            table: Arc::new(Table::lazy(n, n, rule)),
        })
    }

    pub fn with_tag(mut self, tag: FamilyTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn with_params(mut self, params: &[&str]) -> Self {
        self.params = params.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.labels[i].parity
    }

    pub fn parities(&self) -> Vec<u8> {
        self.labels.iter().map(|l| l.parity).collect()
    }

    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l.name == name)
            .ok_or_else(|| Error::UnknownLabel(name.into()))
    }

    pub fn label_names(&self) -> Vec<&str> {
        self.labels.iter().map(|l| l.name.as_str()).collect()
    }

    /// `S(i, j)` as a combination with coefficients in `(∂, λ)`.
    pub fn entry(&self, i: usize, j: usize) -> &Combo {
        self.table.get(i, j)
    }

    /// Every stored table entry, row-major.
    pub fn entries(&self) -> Vec<((usize, usize), Combo)> {
        let n = self.rank();
        (0..n * n)
            .map(|k| ((k / n, k % n), self.entry(k / n, k % n).clone()))
            .collect()
    }

    /// Largest `∂`- or `λ`-degree over the whole table.
    pub fn max_degree(&self) -> u32 {
        let n = self.rank();
        let mut m = 0;
        for i in 0..n {
            for j in 0..n {
                let e = self.entry(i, j);
                m = m.max(e.degree_in(D)).max(e.degree_in(LAMBDA));
            }
        }
        m
    }
}

/// `B(∂, λ) ↦ -(-1)^{p q} B(∂, -λ-∂)`: the value of `[b_j λ b_i]` from
/// `[b_i λ b_j]`.
pub fn skew_transform(b: &Combo, p: u8, q: u8) -> Combo {
    let img = CPoly::linear(&[(LAMBDA, -1), (D, -1)]);
    let r = b.compose(&[None, Some(&img), None, None]);
    if koszul(p, q) < 0 {
        r
    } else {
        r.neg()
    }
}
