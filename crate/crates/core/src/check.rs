//! Property checks that can be answered by a fast criterion, by an exact
//! slow method, or by both with a cross-check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::oracle;
use crate::structure::{
    decide_by_criterion, find_admissible_order, linear_relations_criterion, scarf_matches_graph,
    variable_decomposition, CriterionResult, Decision,
};
use crate::graph::{build_syzygy_graph, classify_shape};
use crate::monomial::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    LinearResolution,
    LinearQuotients,
    VarDecomposable,
    LinearRelations,
    Scarf,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::LinearResolution,
        Property::LinearQuotients,
        Property::VarDecomposable,
        Property::LinearRelations,
        Property::Scarf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LinearResolution => "linear-resolution",
            Property::LinearQuotients => "linear-quotients",
            Property::VarDecomposable => "var-decomposable",
            Property::LinearRelations => "linear-relations",
            Property::Scarf => "scarf",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Criterion when one applies, otherwise the exact method.
    #[default]
    Auto,
    Criterion,
    Oracle,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Criterion => "criterion",
            Method::Oracle => "oracle",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "criterion" => Ok(Method::Criterion),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            _ => Err(Error::Input(format!("unknown method `{s}`"))),
        }
    }
}

/// One side of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// What produced the verdict, e.g. `"tree criterion"` or `"betti oracle"`.
    pub source: String,
    pub reason: Option<String>,
    /// 0-based generator indices: a failure witness or a success certificate.
    pub certificate: Option<Vec<usize>>,
}

impl Verdict {
    fn new(holds: bool, source: impl Into<String>) -> Self {
        Verdict { holds, source: source.into(), reason: None, certificate: None }
    }

    fn with(mut self, detail: Option<&CriterionResult>) -> Self {
        if let Some(d) = detail {
            self.reason = d.reason.clone();
            self.certificate = d.witness.clone();
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub property: Property,
    pub method: Method,
    pub holds: bool,
    pub criterion: Option<Verdict>,
    pub exact: Option<Verdict>,
    /// `Some(false)` when both sides ran and disagree.
    pub agree: Option<bool>,
}

impl CheckOutcome {
    pub fn is_disagreement(&self) -> bool {
        self.agree == Some(false)
    }
}

fn rule_source(d: &Decision) -> String {
    format!("{} criterion", d.shape.name())
}

fn criterion_side(ideal: &MonomialIdeal, property: Property, caps: &Caps) -> Result<Option<Verdict>> {
    if !ideal.is_equigenerated() {
        return Ok(None);
    }
    if property == Property::LinearRelations {
        let r = linear_relations_criterion(ideal)?;
        return Ok(Some(Verdict::new(r.holds, "pair subgraph connectivity").with(Some(&r))));
    }
    if property == Property::Scarf {
        let holds = scarf_matches_graph(ideal, caps)?;
        return Ok(Some(Verdict::new(holds, "scarf complex equals syzygy graph")));
    }
    let Some(d) = decide_by_criterion(ideal)? else {
        return Ok(None);
    };
    let holds = match property {
        Property::LinearResolution => Some(d.linear_resolution),
        Property::LinearQuotients => d.linear_quotients,
        Property::VarDecomposable => d.variable_decomposable,
        _ => unreachable!(),
    };
    Ok(holds.map(|h| Verdict::new(h, rule_source(&d)).with(d.detail.as_ref())))
}

fn exact_side(ideal: &MonomialIdeal, property: Property, field: FieldSpec, caps: &Caps) -> Result<Verdict> {
    Ok(match property {
        Property::LinearResolution | Property::Scarf => {
            Verdict::new(oracle::has_linear_resolution(ideal, field, caps)?, "betti oracle")
        }
        Property::LinearRelations => Verdict::new(oracle::has_linear_relations(ideal, field, caps)?, "betti oracle"),
        Property::LinearQuotients => {
            let order = find_admissible_order(ideal)?;
            let mut v = Verdict::new(order.is_some(), "admissible order search");
            v.certificate = order;
            v
        }
        Property::VarDecomposable => {
            let tree = variable_decomposition(ideal)?;
            let mut v = Verdict::new(tree.is_some(), "shedding variable search");
            if let Some(root) = tree.and_then(|t| t.root_variable()) {
                v.reason = Some(format!("sheds x{root} first"));
            }
            v
        }
    })
}

/// Verdict for inputs on which the syzygy graph is undefined.
fn degenerate(ideal: &MonomialIdeal, property: Property) -> Option<Verdict> {
    if ideal.is_empty() {
        return None;
    }
    if !ideal.is_equigenerated() {
        let holds = match property {
            Property::LinearResolution | Property::LinearRelations | Property::Scarf => false,
            _ => return None,
        };
        let mut v = Verdict::new(holds, "degree check");
        v.reason = Some("generators have mixed degrees".into());
        return Some(v);
    }
    None
}

/// Evaluates `property` on `ideal` with the requested method. `Method::Both`
/// runs both sides whenever a criterion applies and records agreement.
pub fn check_property(
    ideal: &MonomialIdeal,
    property: Property,
    method: Method,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckOutcome> {
    if ideal.is_empty() {
        return Err(Error::Input("the zero ideal has no generators".into()));
    }
    if property == Property::Scarf
        && ideal.is_equigenerated()
        && !classify_shape(&build_syzygy_graph(ideal)?).is_tree()
    {
        return Err(Error::Precondition("scarf comparison needs a tree-shaped syzygy graph".into()));
    }
    if let Some(v) = degenerate(ideal, property) {
        return Ok(CheckOutcome { property, method, holds: v.holds, criterion: Some(v), exact: None, agree: None });
    }
    let (criterion, exact) = match method {
        Method::Criterion => {
            let c = criterion_side(ideal, property, caps)?.ok_or_else(|| {
                Error::Precondition(format!("no criterion for {property} applies to this syzygy graph"))
            })?;
            (Some(c), None)
        }
        Method::Oracle => (None, Some(exact_side(ideal, property, field, caps)?)),
        Method::Auto => match criterion_side(ideal, property, caps)? {
            Some(c) => (Some(c), None),
            None => (None, Some(exact_side(ideal, property, field, caps)?)),
        },
        Method::Both => (criterion_side(ideal, property, caps)?, Some(exact_side(ideal, property, field, caps)?)),
    };
    let agree = match (&criterion, &exact) {
        (Some(c), Some(e)) => Some(c.holds == e.holds),
        _ => None,
    };
    let holds = match (&criterion, &exact) {
        (Some(c), _) => c.holds,
        (None, Some(e)) => e.holds,
        (None, None) => unreachable!("one side always runs"),
    };
    Ok(CheckOutcome { property, method, holds, criterion, exact, agree })
}
