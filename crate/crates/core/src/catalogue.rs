//! Named nilpotent Lie algebras of dimension at most nine, with the
//! invariants published for them.
//!
//! Every table is stored in the [`format`](crate::format) text syntax and
//! parsed once on first use. Decomposable algebras are compositions of other
//! entries with abelian or Heisenberg summands and are never re-keyed by
//! hand. Lookup accepts canonical names and aliases; `+` may stand for `⊕`,
//! whitespace is ignored and `(eps)` or `(epsilon)` may stand for `(ε)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::format::{self, AlgebraFile};
use crate::linalg::Scalar;

/// Citation labels used by expectations.
pub mod cite {
    pub const NOTATION: &str = "notation table";
    pub const TABLE_1: &str = "Table 1";
    pub const TABLE_2: &str = "Table 2";
    pub const TABLE_3: &str = "Table 3";
    pub const TABLE_4: &str = "Table 4";
    pub const TABLE_5: &str = "Table 5";
    pub const TABLE_6: &str = "Table 6";
    pub const TABLE_7: &str = "Table 7";
    pub const TABLE_1_HEADING: &str = "Table 1 heading";
    pub const TABLE_2_HEADING: &str = "Table 2 heading";
    pub const TABLE_3_HEADING: &str = "Table 3 heading";
    pub const TABLE_4_HEADING: &str = "Table 4 heading";
    pub const TABLE_5_HEADING: &str = "Table 5 heading";
    pub const TABLE_6_HEADING: &str = "Table 6 heading";
    pub const TABLE_7_HEADING: &str = "Table 7 heading";
    pub const MULTIPLIER_PROP: &str = "multiplier proposition";
    pub const NONCAPABLE_LEMMA: &str = "non-capable lemma";
    pub const MAIN_THEOREM: &str = "main theorem";
    pub const MAIN_PROOF_CLASS_2: &str = "main theorem proof, class 2";
    pub const MAIN_PROOF_CLASS_3: &str = "main theorem proof, class 3";
}

/// How an entry's structure constants are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Table,
    DirectSum { left: &'static str, right: Summand },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summand {
    Abelian(usize),
    Entry(&'static str),
}

/// A single recorded invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    /// `dim M(L)` and/or `s(L)`; at least one is present.
    Multiplier {
        dim_m: Option<usize>,
        s: Option<i64>,
    },
    DerivedDim(usize),
    CenterDim(usize),
    /// `Z(L) ⊆ L^2`
    CenterInDerived,
    /// `Z(L) = L^2`
    CenterEqualsDerived,
    Class(usize),
    Capable(bool),
}

impl Invariant {
    pub fn label(&self) -> &'static str {
        match self {
            Invariant::Multiplier {
                dim_m: Some(_),
                s: Some(_),
            } => "dim M, s",
            Invariant::Multiplier {
                dim_m: Some(_),
                s: None,
            } => "dim M",
            Invariant::Multiplier { .. } => "s",
            Invariant::DerivedDim(_) => "dim L^2",
            Invariant::CenterDim(_) => "dim Z",
            Invariant::CenterInDerived => "Z in L^2",
            Invariant::CenterEqualsDerived => "Z = L^2",
            Invariant::Class(_) => "class",
            Invariant::Capable(_) => "capable",
        }
    }

    pub fn expected_text(&self) -> String {
        match self {
            Invariant::Multiplier { dim_m, s } => {
                [dim_m.map(|v| v.to_string()), s.map(|v| v.to_string())]
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>()
                    .join(", ")
            }
            Invariant::DerivedDim(v) | Invariant::CenterDim(v) | Invariant::Class(v) => {
                v.to_string()
            }
            Invariant::CenterInDerived | Invariant::CenterEqualsDerived => "yes".into(),
            Invariant::Capable(b) => if *b { "yes" } else { "no" }.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub invariant: Invariant,
    pub source: &'static str,
}

/// An expected value together with its citation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sourced<T> {
    pub value: T,
    pub source: &'static str,
}

/// The recorded expectations of one entry, one field per invariant. A
/// `None` field means nothing is recorded. When several sources give the
/// same invariant the first one is kept here; [`CatalogueEntry::expectations`]
/// has them all.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub name: String,
    pub dim_m: Option<Sourced<usize>>,
    pub s: Option<Sourced<i64>>,
    pub dim_derived: Option<Sourced<usize>>,
    pub dim_center: Option<Sourced<usize>>,
    pub center_in_derived: Option<Sourced<bool>>,
    pub center_equals_derived: Option<Sourced<bool>>,
    pub class: Option<Sourced<usize>>,
    pub capable: Option<Sourced<bool>>,
}

impl fmt::Display for ExpectedInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn show<T: fmt::Display>(v: &Option<Sourced<T>>) -> String {
            match v {
                Some(s) => format!("{} ({})", s.value, s.source),
                None => "unknown".into(),
            }
        }
        writeln!(f, "{}", self.name)?;
        writeln!(f, "  dim M     {}", show(&self.dim_m))?;
        writeln!(f, "  s         {}", show(&self.s))?;
        writeln!(f, "  dim L^2   {}", show(&self.dim_derived))?;
        writeln!(f, "  dim Z     {}", show(&self.dim_center))?;
        writeln!(f, "  Z in L^2  {}", show(&self.center_in_derived))?;
        writeln!(f, "  Z = L^2   {}", show(&self.center_equals_derived))?;
        writeln!(f, "  class     {}", show(&self.class))?;
        write!(f, "  capable   {}", show(&self.capable))
    }
}

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    name: &'static str,
    aliases: &'static [&'static str],
    tables: &'static [&'static str],
    construction: Construction,
    file: AlgebraFile,
    expectations: Vec<Expectation>,
}

impl CatalogueEntry {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn aliases(&self) -> &'static [&'static str] {
        self.aliases
    }

    /// Where the algebra is printed.
    pub fn tables(&self) -> &'static [&'static str] {
        self.tables
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn dim(&self) -> usize {
        self.file.dim
    }

    /// Parameters with their default values.
    pub fn parameters(&self) -> &[(String, Scalar)] {
        &self.file.params
    }

    pub fn is_parameterized(&self) -> bool {
        !self.file.params.is_empty()
    }

    /// The symbolic table, with parameters unbound from any particular value.
    pub fn file(&self) -> &AlgebraFile {
        &self.file
    }

    pub fn expectations(&self) -> &[Expectation] {
        &self.expectations
    }

    /// Structure constants at the default parameters.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        self.algebra_with(&[])
    }

    /// Structure constants with some parameters rebound.
    pub fn algebra_with(&self, params: &[(&str, Scalar)]) -> Result<LieAlgebra> {
        let mut file = self.file.clone();
        for (name, value) in params {
            file.bind(name, value.clone())?;
        }
        file.to_algebra()
    }

    /// Whether the printed table violates the Jacobi identity.
    pub fn is_quarantined(&self) -> bool {
        self.algebra().is_err()
    }

    pub fn expected(&self) -> ExpectedInvariants {
        let mut out = ExpectedInvariants {
            name: self.name.to_string(),
            ..Default::default()
        };
        fn keep<T>(slot: &mut Option<Sourced<T>>, value: T, source: &'static str) {
            if slot.is_none() {
                *slot = Some(Sourced { value, source });
            }
        }
        for e in &self.expectations {
            match e.invariant {
                Invariant::Multiplier { dim_m, s } => {
                    if let Some(v) = dim_m {
                        keep(&mut out.dim_m, v, e.source);
                    }
                    if let Some(v) = s {
                        keep(&mut out.s, v, e.source);
                    }
                }
                Invariant::DerivedDim(v) => keep(&mut out.dim_derived, v, e.source),
                Invariant::CenterDim(v) => keep(&mut out.dim_center, v, e.source),
                Invariant::CenterInDerived => keep(&mut out.center_in_derived, true, e.source),
                Invariant::CenterEqualsDerived => {
                    keep(&mut out.center_equals_derived, true, e.source)
                }
                Invariant::Class(v) => keep(&mut out.class, v, e.source),
                Invariant::Capable(v) => keep(&mut out.capable, v, e.source),
            }
        }
        out
    }
}

struct Def {
    name: &'static str,
    aliases: &'static [&'static str],
    tables: &'static [&'static str],
    body: Body,
}

enum Body {
    /// `dim; line; line; ...`
    Table(&'static str),
    Sum(&'static str, Summand),
}

const fn table(
    name: &'static str,
    aliases: &'static [&'static str],
    tables: &'static [&'static str],
    text: &'static str,
) -> Def {
    Def {
        name,
        aliases,
        tables,
        body: Body::Table(text),
    }
}

const fn sum(
    name: &'static str,
    aliases: &'static [&'static str],
    tables: &'static [&'static str],
    left: &'static str,
    right: Summand,
) -> Def {
    Def {
        name,
        aliases,
        tables,
        body: Body::Sum(left, right),
    }
}

use cite::*;
use Summand::{Abelian, Entry};

const N: &[&str] = &[NOTATION];
const T1: &[&str] = &[TABLE_1];
const T2: &[&str] = &[TABLE_2];
const T3: &[&str] = &[TABLE_3];

#[rustfmt::skip]
const DEFS: &[Def] = &[
    table("L_{3,2}", &["H(1)"], N, "dim 3; [1,2]=3"),
    table("L_{4,3}", &["L(3,4,1,4)"], N, "dim 4; [1,2]=3; [1,3]=4"),
    table("L_{5,5}", &["L(4,5,1,6)"], N, "dim 5; [1,2]=3; [1,3]=5; [2,4]=5"),
    table("L_{5,6}", &["L'(7,5,1,7)"], &[NOTATION, TABLE_1], "dim 5; [1,2]=3; [1,3]=4; [1,4]=5; [2,3]=5"),
    table("L_{5,7}", &["L(7,5,1,7)"], &[NOTATION, TABLE_1], "dim 5; [1,2]=3; [1,3]=4; [1,4]=5"),
    table("L_{5,8}", &["L(4,5,2,4)"], N, "dim 5; [1,2]=4; [1,3]=5"),
    table("L_{5,9}", &["L(7,5,2,7)"], &[NOTATION, TABLE_1], "dim 5; [1,2]=3; [1,3]=4; [2,3]=5"),
    table("L_{6,10}", &[], N, "dim 6; [1,2]=3; [1,3]=6; [4,5]=6"),
    table("L_{6,22}", &["L_{6,22}(ε)"], N, "dim 6; param eps = 1; [1,2]=5; [1,3]=6; [2,4]=eps*6; [3,4]=5"),
    table("27B", &["L_1", "L_{1}"], N, "dim 7; [1,2]=6; [3,4]=6; [1,5]=7; [2,3]=7"),
    table("27A", &["L_2", "L_{2}"], N, "dim 7; [1,2]=6; [1,4]=7; [3,5]=7"),
    table("157", &[], N, "dim 7; [1,2]=3; [1,3]=7; [2,4]=7; [5,6]=7"),

    table("L_{6,6}", &[], T1, "dim 6; [1,2]=3; [1,3]=4; [1,4]=5; [2,3]=5"),
    table("L_{6,7}", &[], T1, "dim 6; [1,2]=3; [1,3]=4; [1,4]=5"),
    table("L_{6,9}", &[], T1, "dim 6; [1,2]=3; [1,3]=4; [2,3]=5"),
    table("L_{6,11}", &[], T1, "dim 6; [1,2]=3; [1,3]=4; [1,4]=6; [2,3]=6; [2,5]=6"),
    table("L_{6,12}", &[], T1, "dim 6; [1,2]=3; [1,3]=4; [1,4]=6; [2,5]=6"),
    table("L_{6,13}", &[], T1, "dim 6; [1,2]=3; [1,3]=5; [2,4]=5; [1,5]=6; [3,4]=6"),
    table("L_{6,19}", &["L_{6,19}(ε)"], T1, "dim 6; param eps = 1; [1,2]=4; [1,3]=5; [1,5]=6; [2,4]=6; [3,5]=eps*6"),
    table("L_{6,20}", &[], T1, "dim 6; [1,2]=4; [1,3]=5; [1,5]=6; [2,4]=6"),
    table("L_{6,23}", &[], T1, "dim 6; [1,2]=3; [1,3]=5; [2,4]=5; [1,4]=6"),
    table("L_{6,24}", &["L_{6,24}(ε)"], T1, "dim 6; param eps = 1; [1,2]=3; [1,3]=5; [2,4]=5; [1,4]=eps*6; [2,3]=6"),
    table("L_{6,25}", &[], T1, "dim 6; [1,2]=3; [1,3]=5; [1,4]=6"),
    table("L_{6,26}", &[], T1, "dim 6; [1,2]=4; [1,3]=5; [2,3]=6"),

    table("37A", &[], T2, "dim 7; [1,2]=5; [2,3]=6; [2,4]=7"),
    table("37B", &[], &[NOTATION, TABLE_2], "dim 7; [1,2]=5; [2,3]=6; [3,4]=7"),
    table("37C", &[], &[NOTATION, TABLE_2], "dim 7; [1,2]=5; [3,4]=5; [2,3]=6; [2,4]=7"),
    table("37D", &[], &[NOTATION, TABLE_2], "dim 7; [1,2]=5; [3,4]=5; [1,3]=6; [2,4]=7"),
    table("257A", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [1,5]=7"),
    table("257B", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [1,4]=7; [2,5]=7"),
    table("257C", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [2,5]=7"),
    table("257D", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [1,4]=7; [2,5]=7"),
    table("257E", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [4,5]=6; [2,4]=7"),
    table("257F", &[], T2, "dim 7; [1,2]=3; [2,3]=6; [4,5]=6; [2,4]=7"),
    table("257G", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [4,5]=6; [1,5]=7; [2,4]=7"),
    table("257H", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [4,5]=7"),
    table("257I", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [1,4]=6; [1,5]=7; [2,3]=7"),
    table("257J", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [1,5]=7; [2,3]=7"),
    table("257K", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,3]=7; [4,5]=7"),
    table("257L", &[], T2, "dim 7; [1,2]=3; [1,3]=6; [2,4]=6; [2,3]=7; [4,5]=7"),
    table("147A", &[], T2, "dim 7; [1,2]=4; [1,3]=5; [1,6]=7; [2,5]=7; [3,4]=7"),
    table("147B", &[], T2, "dim 7; [1,2]=4; [1,3]=5; [1,4]=7; [2,6]=7; [3,5]=7"),
    table("1457A", &[], T2, "dim 7; [1,2]=3; [1,3]=4; [1,4]=7; [5,6]=7"),
    table("1457B", &[], T2, "dim 7; [1,2]=3; [1,3]=4; [1,4]=7; [2,3]=7; [5,6]=7"),
    table("137A", &[], T2, "dim 7; [1,2]=5; [1,5]=7; [3,6]=7; [3,4]=6"),
    table("137B", &[], T2, "dim 7; [1,2]=5; [3,4]=6; [1,5]=7; [2,4]=7; [3,6]=7"),
    table("137C", &[], T2, "dim 7; [1,2]=5; [1,4]=6; [2,3]=6; [1,6]=7; [3,5]=-7"),
    table("137D", &[], T2, "dim 7; [1,2]=5; [1,4]=6; [2,3]=6; [1,6]=7; [2,4]=7; [3,5]=-7"),
    table("1357A", &[], T2, "dim 7; [1,2]=4; [1,4]=5; [2,3]=5; [1,5]=7; [2,6]=7; [3,4]=-7"),
    table("1357B", &[], T2, "dim 7; [1,2]=4; [1,4]=5; [2,3]=5; [1,5]=7; [3,6]=7; [3,4]=-7"),
    table("1357C", &[], T2, "dim 7; [1,2]=4; [1,4]=5; [2,3]=5; [1,5]=7; [2,4]=7; [3,4]=-7"),

    sum("L_{4,3}⊕H(1)", &["L(3,4,1,4)⊕H(1)"], T3, "L_{4,3}", Entry("L_{3,2}")),
    sum("L_{5,6}⊕A(2)", &[], T3, "L_{5,6}", Abelian(2)),
    sum("L_{5,7}⊕A(2)", &[], T3, "L_{5,7}", Abelian(2)),
    sum("L_{5,9}⊕A(2)", &["L(7,5,2,7)⊕A(2)"], &[TABLE_3, TABLE_6], "L_{5,9}", Abelian(2)),
    sum("L_{6,11}⊕A(1)", &[], T3, "L_{6,11}", Abelian(1)),
    sum("L_{6,12}⊕A(1)", &[], T3, "L_{6,12}", Abelian(1)),
    sum("L_{6,13}⊕A(1)", &[], T3, "L_{6,13}", Abelian(1)),
    sum("L_{6,19}⊕A(1)", &["L_{6,19}(ε)⊕A(1)"], T3, "L_{6,19}", Abelian(1)),
    sum("L_{6,20}⊕A(1)", &[], T3, "L_{6,20}", Abelian(1)),
    sum("L_{6,23}⊕A(1)", &[], T3, "L_{6,23}", Abelian(1)),
    sum("L_{6,24}⊕A(1)", &["L_{6,24}(ε)⊕A(1)"], T3, "L_{6,24}", Abelian(1)),
    sum("L_{6,25}⊕A(1)", &[], T3, "L_{6,25}", Abelian(1)),
    sum("L_{6,26}⊕A(1)", &[], &[TABLE_3, TABLE_6, MAIN_THEOREM], "L_{6,26}", Abelian(1)),

    sum("L_{5,8}⊕A(4)", &["L(4,5,2,4)⊕A(4)"], &[MAIN_THEOREM], "L_{5,8}", Abelian(4)),
    sum("L_{4,3}⊕A(3)", &["L(3,4,1,4)⊕A(3)"], &[MAIN_THEOREM], "L_{4,3}", Abelian(3)),
    sum("L_{5,5}⊕A(2)", &["L(4,5,1,6)⊕A(2)"], &[MAIN_THEOREM], "L_{5,5}", Abelian(2)),
    sum("L_{6,22}⊕A(2)", &["L_{6,22}(ε)⊕A(2)"], &[MAIN_THEOREM], "L_{6,22}", Abelian(2)),
];

const fn ms(dim_m: usize, s: i64) -> Invariant {
    Invariant::Multiplier {
        dim_m: Some(dim_m),
        s: Some(s),
    }
}

const fn m_only(dim_m: usize) -> Invariant {
    Invariant::Multiplier {
        dim_m: Some(dim_m),
        s: None,
    }
}

const fn s_only(s: i64) -> Invariant {
    Invariant::Multiplier {
        dim_m: None,
        s: Some(s),
    }
}

/// Per-row multiplier values.
#[rustfmt::skip]
const ROWS: &[(&str, Invariant, &str)] = &[
    ("L_{6,26}", ms(8, 3), TABLE_4),
    ("37A", ms(12, 4), TABLE_4),
    ("37B", ms(11, 5), TABLE_4),
    ("37C", ms(11, 5), TABLE_4),
    ("37D", ms(11, 5), TABLE_4),

    ("L_{5,9}", ms(3, 4), TABLE_5),
    ("L_{6,23}", ms(6, 5), TABLE_5),
    ("L_{6,24}", ms(5, 6), TABLE_5),
    ("L_{6,25}", ms(6, 5), TABLE_5),
    ("257A", ms(9, 7), TABLE_5),
    ("257B", ms(8, 8), TABLE_5),
    ("257C", ms(9, 7), TABLE_5),
    ("257D", ms(8, 8), TABLE_5),
    ("257E", ms(8, 8), TABLE_5),
    ("257F", ms(9, 7), TABLE_5),
    ("257G", ms(8, 8), TABLE_5),
    ("257H", ms(8, 8), TABLE_5),
    ("257I", ms(8, 8), TABLE_5),
    ("257J", ms(8, 8), TABLE_5),
    ("257K", ms(6, 10), TABLE_5),
    ("257L", ms(6, 10), TABLE_5),

    ("L_{5,9}⊕A(2)", ms(8, 8), TABLE_6),
    ("L_{6,26}⊕A(1)", ms(11, 5), TABLE_6),

    ("L_{5,6}", ms(3, 4), TABLE_7),
    ("L_{5,7}", ms(3, 4), TABLE_7),
    ("L_{6,11}", ms(5, 6), TABLE_7),
    ("L_{6,12}", ms(5, 6), TABLE_7),
    ("L_{6,13}", ms(4, 7), TABLE_7),
    ("L_{6,19}", ms(5, 6), TABLE_7),
    ("L_{6,20}", ms(5, 6), TABLE_7),
    ("147A", ms(8, 8), TABLE_7),
    ("147B", ms(8, 8), TABLE_7),
    ("1457A", ms(6, 10), TABLE_7),
    ("1457B", ms(6, 10), TABLE_7),
    ("137A", ms(7, 9), TABLE_7),
    ("137B", ms(7, 9), TABLE_7),
    ("137C", ms(7, 9), TABLE_7),
    ("137D", ms(7, 9), TABLE_7),
    ("1357A", ms(7, 9), TABLE_7),
    ("1357B", ms(6, 10), TABLE_7),
    ("1357C", ms(6, 10), TABLE_7),

    ("L_{6,22}", m_only(8), MULTIPLIER_PROP),
    ("L_{5,8}", m_only(6), MULTIPLIER_PROP),
    ("27B", m_only(9), MULTIPLIER_PROP),
    ("27A", m_only(10), MULTIPLIER_PROP),

    ("L_{6,10}", s_only(5), NONCAPABLE_LEMMA),
    ("27A", s_only(6), NONCAPABLE_LEMMA),
    ("157", s_only(6), NONCAPABLE_LEMMA),
    ("L_{6,10}", Invariant::Capable(false), NONCAPABLE_LEMMA),
    ("27A", Invariant::Capable(false), NONCAPABLE_LEMMA),
    ("157", Invariant::Capable(false), NONCAPABLE_LEMMA),
    ("L_{6,10}", Invariant::DerivedDim(2), NONCAPABLE_LEMMA),
    ("27A", Invariant::DerivedDim(2), NONCAPABLE_LEMMA),
    ("157", Invariant::DerivedDim(2), NONCAPABLE_LEMMA),

    ("L_{4,3}", m_only(2), MAIN_PROOF_CLASS_3),
    ("L_{5,5}", m_only(4), MAIN_PROOF_CLASS_3),
    ("L_{4,3}", Invariant::Class(3), MAIN_PROOF_CLASS_3),
    ("L_{5,5}", Invariant::Class(3), MAIN_PROOF_CLASS_3),
    ("L_{4,3}", Invariant::DerivedDim(2), MAIN_PROOF_CLASS_3),
    ("L_{5,5}", Invariant::DerivedDim(2), MAIN_PROOF_CLASS_3),
    ("L_{6,22}", Invariant::Class(2), MAIN_PROOF_CLASS_2),
    ("L_{5,8}", Invariant::Class(2), MAIN_PROOF_CLASS_2),
    ("27B", Invariant::Class(2), MAIN_PROOF_CLASS_2),
    ("L_{6,22}", Invariant::DerivedDim(2), MAIN_PROOF_CLASS_2),
    ("L_{5,8}", Invariant::DerivedDim(2), MAIN_PROOF_CLASS_2),
    ("27B", Invariant::DerivedDim(2), MAIN_PROOF_CLASS_2),
];

/// The members of the main theorem's list, as printed, with the entry each
/// resolves to.
pub const MAIN_THEOREM_MEMBERS: [(&str, &str); 11] = [
    ("L(4,5,2,4)⊕A(4)", "L_{5,8}⊕A(4)"),
    ("L(3,4,1,4)⊕A(3)", "L_{4,3}⊕A(3)"),
    ("L(4,5,1,6)⊕A(2)", "L_{5,5}⊕A(2)"),
    ("L_{6,22}(ε)⊕A(2)", "L_{6,22}⊕A(2)"),
    ("L_{6,26}⊕A(1)", "L_{6,26}⊕A(1)"),
    ("L_{6,10}", "L_{6,10}"),
    ("L_{6,23}", "L_{6,23}"),
    ("L_{6,25}", "L_{6,25}"),
    ("37B", "37B"),
    ("37C", "37C"),
    ("37D", "37D"),
];

/// Structural hypotheses that hold for every row of a table.
fn table_hypotheses(table: &str) -> &'static [(Invariant, &'static str)] {
    match table {
        TABLE_1 => &[(Invariant::DerivedDim(3), TABLE_1_HEADING)],
        TABLE_2 => &[(Invariant::DerivedDim(3), TABLE_2_HEADING)],
        TABLE_3 => &[(Invariant::DerivedDim(3), TABLE_3_HEADING)],
        TABLE_4 => &[
            (Invariant::DerivedDim(3), TABLE_4_HEADING),
            (Invariant::CenterDim(3), TABLE_4_HEADING),
            (Invariant::CenterEqualsDerived, TABLE_4_HEADING),
        ],
        TABLE_5 => &[
            (Invariant::DerivedDim(3), TABLE_5_HEADING),
            (Invariant::CenterDim(2), TABLE_5_HEADING),
            (Invariant::CenterInDerived, TABLE_5_HEADING),
        ],
        TABLE_6 => &[
            (Invariant::DerivedDim(3), TABLE_6_HEADING),
            (Invariant::CenterDim(4), TABLE_6_HEADING),
        ],
        TABLE_7 => &[
            (Invariant::DerivedDim(3), TABLE_7_HEADING),
            (Invariant::CenterDim(1), TABLE_7_HEADING),
        ],
        _ => &[],
    }
}

struct Catalogue {
    entries: Vec<CatalogueEntry>,
    index: HashMap<String, usize>,
}

/// Lookup key: whitespace dropped, `+` read as `⊕`, `eps`/`epsilon` as `ε`.
pub fn normalize_name(name: &str) -> String {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .replace('+', "⊕")
        .replace("(epsilon)", "(ε)")
        .replace("(eps)", "(ε)")
        .replace("\\oplus", "⊕")
}

fn build() -> Catalogue {
    let mut entries: Vec<CatalogueEntry> = Vec::with_capacity(DEFS.len());
    let mut index: HashMap<String, usize> = HashMap::new();
    for def in DEFS {
        let (file, construction) = match def.body {
            Body::Table(text) => {
                let text = text.replace(';', "\n");
                let file = format::parse_algebra_file(&text)
                    .unwrap_or_else(|e| panic!("catalogue table for {}: {e}", def.name));
                (file, Construction::Table)
            }
            Body::Sum(left, right) => {
                let left_file = &entries[index[&normalize_name(left)]].file;
                let right_file = match right {
                    Summand::Abelian(k) => AlgebraFile::abelian(k),
                    Summand::Entry(name) => entries[index[&normalize_name(name)]].file.clone(),
                };
                (
                    left_file.direct_sum(&right_file),
                    Construction::DirectSum { left, right },
                )
            }
        };
        let mut expectations: Vec<Expectation> = ROWS
            .iter()
            .filter(|(n, _, _)| *n == def.name)
            .map(|&(_, invariant, source)| Expectation { invariant, source })
            .collect();
        for table in [
            TABLE_1, TABLE_2, TABLE_3, TABLE_4, TABLE_5, TABLE_6, TABLE_7,
        ] {
            let listed = def.tables.contains(&table)
                || ROWS
                    .iter()
                    .any(|(n, _, src)| *n == def.name && *src == table);
            if !listed {
                continue;
            }
            for &(invariant, source) in table_hypotheses(table) {
                if !expectations.iter().any(|e| e.invariant == invariant) {
                    expectations.push(Expectation { invariant, source });
                }
            }
        }
        if MAIN_THEOREM_MEMBERS.iter().any(|(_, n)| *n == def.name) {
            expectations.push(Expectation {
                invariant: s_only(5),
                source: MAIN_THEOREM,
            });
        }
        let i = entries.len();
        for key in std::iter::once(&def.name).chain(def.aliases) {
            let previous = index.insert(normalize_name(key), i);
            assert!(previous.is_none(), "catalogue name {key} used twice");
        }
        entries.push(CatalogueEntry {
            name: def.name,
            aliases: def.aliases,
            tables: def.tables,
            construction,
            file,
            expectations,
        });
    }
    Catalogue { entries, index }
}

fn catalogue() -> &'static Catalogue {
    static CATALOGUE: OnceLock<Catalogue> = OnceLock::new();
    CATALOGUE.get_or_init(build)
}

/// All entries in catalogue order.
pub fn list_entries() -> &'static [CatalogueEntry] {
    &catalogue().entries
}

pub fn entry(name: &str) -> Result<&'static CatalogueEntry> {
    let c = catalogue();
    let key = normalize_name(name);
    let key = key
        .strip_suffix("(ε)")
        .filter(|k| c.index.contains_key(*k))
        .unwrap_or(&key);
    c.index
        .get(key)
        .map(|&i| &c.entries[i])
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The named algebra at its default parameters.
pub fn get(name: &str) -> Result<LieAlgebra> {
    entry(name)?.algebra()
}

/// The named algebra with parameters rebound, e.g. `[("eps", int(0))]`.
pub fn get_with(name: &str, params: &[(&str, Scalar)]) -> Result<LieAlgebra> {
    entry(name)?.algebra_with(params)
}

pub fn expected_invariants(name: &str) -> Result<ExpectedInvariants> {
    entry(name).map(|e| e.expected())
}

/// The eleven algebras of the main theorem as `(printed name, entry)`.
pub fn main_theorem_list() -> Vec<(&'static str, &'static CatalogueEntry)> {
    MAIN_THEOREM_MEMBERS
        .iter()
        .map(|&(label, name)| {
            (
                label,
                entry(name).expect("main theorem member is catalogued"),
            )
        })
        .collect()
}

/// The whole catalogue in the text format, one section per entry, each
/// introduced by a `# name: NAME` line.
pub fn export() -> String {
    let mut out = String::new();
    for e in list_entries() {
        out.push_str(&format!("# name: {}\n", e.name));
        if !e.aliases.is_empty() {
            out.push_str(&format!("# aliases: {}\n", e.aliases.join(", ")));
        }
        out.push_str(&format!("# source: {}\n", e.tables.join(", ")));
        out.push_str(&format::serialize(&e.file));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer_algebra;
    use crate::linalg::int;

    #[test]
    fn entry_counts() {
        let all = list_entries();
        assert_eq!(all.len(), 68);
        let count = |t: &str| all.iter().filter(|e| e.tables().contains(&t)).count();
        assert_eq!(count(NOTATION), 15);
        assert_eq!(count(TABLE_1), 15);
        assert_eq!(count(TABLE_2), 27);
        assert_eq!(count(TABLE_3), 13);
        assert_eq!(main_theorem_list().len(), 11);
    }

    #[test]
    fn row_counts_per_table() {
        let count = |t: &str| {
            ROWS.iter()
                .filter(|(_, inv, src)| *src == t && matches!(inv, Invariant::Multiplier { .. }))
                .count()
        };
        assert_eq!(
            [
                count(TABLE_4),
                count(TABLE_5),
                count(TABLE_6),
                count(TABLE_7)
            ],
            [5, 16, 2, 18]
        );
    }

    #[test]
    fn every_row_names_an_entry() {
        for (name, _, _) in ROWS {
            assert!(entry(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn lookup_by_alias_and_spelling() {
        assert_eq!(entry("L(4,5,2,4)").unwrap().name(), "L_{5,8}");
        assert_eq!(entry("L_1").unwrap().name(), "27B");
        assert_eq!(entry("L_{2}").unwrap().name(), "27A");
        assert_eq!(entry("L(4,5,2,4) + A(4)").unwrap().name(), "L_{5,8}⊕A(4)");
        assert_eq!(entry("L_{6,22}(eps)").unwrap().name(), "L_{6,22}");
        assert_eq!(entry("L_{6,22}(eps)+A(2)").unwrap().name(), "L_{6,22}⊕A(2)");
        assert_eq!(get("H(1)").unwrap(), LieAlgebra::heisenberg(1));
        assert_eq!(get("L(3,4,1,4)").unwrap(), get("L_{4,3}").unwrap());
        assert_eq!(
            entry("L_{9,99}").unwrap_err(),
            Error::UnknownName("L_{9,99}".into())
        );
    }

    #[test]
    fn printed_tables() {
        let d = get("37D").unwrap();
        let expected = integer_algebra(
            7,
            &[
                (1, 2, &[(1, 5)]),
                (3, 4, &[(1, 5)]),
                (1, 3, &[(1, 6)]),
                (2, 4, &[(1, 7)]),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
        let l157 = get("157").unwrap();
        assert_eq!(l157.nonzero_brackets().count(), 4);
        assert_eq!(l157.basis_bracket(4, 5), crate::linalg::SparseVec::unit(6));
    }

    #[test]
    fn parameters() {
        let e = entry("L_{6,22}").unwrap();
        assert!(e.is_parameterized());
        assert_eq!(e.parameters()[0].1, int(1));
        let zero = get_with("L_{6,22}", &[("eps", int(0))]).unwrap();
        assert!(zero.basis_bracket(1, 3).is_zero());
        assert!(zero.validate().is_valid());
        assert_eq!(
            get_with("37B", &[("eps", int(0))]).unwrap_err(),
            Error::UnknownParameter("eps".into())
        );
        let sum = get_with("L_{6,22}⊕A(2)", &[("eps", int(2))]).unwrap();
        assert_eq!(
            sum.basis_bracket(1, 3),
            crate::linalg::SparseVec::unit(5).scaled(&int(2))
        );
    }

    #[test]
    fn compositions_match_direct_sums() {
        let composed = get("L_{4,3}⊕H(1)").unwrap();
        let direct = get("L_{4,3}")
            .unwrap()
            .direct_sum(&LieAlgebra::heisenberg(1));
        assert_eq!(composed, direct);
        let l = get("L_{5,8}⊕A(4)").unwrap();
        assert_eq!(l.dim(), 9);
        assert_eq!(l.derived_subalgebra().dim(), 2);
    }

    #[test]
    fn expectations_carry_sources() {
        let e = expected_invariants("257K").unwrap();
        assert_eq!(e.dim_m.unwrap().value, 6);
        assert_eq!(
            e.s.unwrap(),
            Sourced {
                value: 10,
                source: TABLE_5
            }
        );
        assert_eq!(e.dim_center.unwrap().value, 2);
        assert_eq!(
            expected_invariants("L_{5,8}").unwrap().dim_m.unwrap().value,
            6
        );
        let none = expected_invariants("L_{6,6}").unwrap();
        assert!(none.dim_m.is_none() && none.s.is_none());
        assert!(none.to_string().contains("unknown"));
        let l56 = expected_invariants("L_{5,6}").unwrap();
        assert_eq!(l56.dim_m.unwrap().value, 3);
        assert!(l56.class.is_none());
        assert_eq!(expected_invariants("1357C").unwrap().s.unwrap().value, 10);
    }

    #[test]
    fn export_round_trips() {
        let text = export();
        let sections = format::split_sections(&text);
        assert_eq!(sections.len(), list_entries().len());
        for ((name, body), e) in sections.iter().zip(list_entries()) {
            assert_eq!(name, e.name());
            assert_eq!(&format::parse_algebra_file(body).unwrap(), e.file());
        }
    }
}
