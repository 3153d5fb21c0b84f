use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::contfrac::{ContinuedFraction, Fraction};
use crate::fiblinks::{
    closed_form_index, fib_expansion, fib_link, mod2_closed_form, ClosedFormN, FibExpansion,
    FibLinkParams,
};
use crate::links::{Components, RationalLink};
use crate::lissajous::{obstruction, LissajousVerdict};
use crate::poly::{conway_polynomial, GF2Poly, IntPoly, LaurentPoly};

pub fn int_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn int_poly_json(p: &IntPoly) -> Value {
    json!({ "variable": "z", "coeffs": p.coeffs().iter().map(int_json).collect::<Vec<_>>() })
}

pub fn laurent_json(p: &LaurentPoly) -> Value {
    json!({
        "variable": "t",
        "min_degree": p.min_degree(),
        "coeffs": p.coeffs().iter().map(int_json).collect::<Vec<_>>(),
    })
}

pub fn gf2_json(p: &GF2Poly) -> Value {
    Value::Array(p.bits().into_iter().map(Value::from).collect())
}

pub fn cf_json(cf: &ContinuedFraction) -> Value {
    Value::Array(cf.quotients().iter().map(int_json).collect())
}

pub fn fraction_json(f: &Fraction) -> Value {
    Value::String(f.to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub const CSV_HEADER: [&str; 12] = [
    "n",
    "j",
    "alpha",
    "beta",
    "components",
    "expansion",
    "conway",
    "conway_mod2",
    "N",
    "closed_form",
    "match",
    "lissajous",
];

/// Everything computed for one Fibonacci link `F_j^(n)`.
#[derive(Clone, Debug)]
pub struct FibRecord {
    pub params: FibLinkParams,
    pub link: RationalLink,
    pub expansion: FibExpansion,
    /// `∇` from the matrix product on `expansion`.
    pub conway: IntPoly,
    pub conway_mod2: GF2Poly,
    pub closed: ClosedFormN,
    pub closed_form: GF2Poly,
    /// `None` for two-component links.
    pub lissajous: Option<LissajousVerdict>,
}

impl FibRecord {
    pub fn compute(params: FibLinkParams) -> Self {
        let link = fib_link(params);
        let expansion = fib_expansion(params);
        let conway = conway_polynomial(&expansion.quotients).expect("expansion is even");
        let conway_mod2 = conway.mod2();
        let lissajous = obstruction(&link).ok();
        Self {
            params,
            link,
            expansion,
            conway,
            conway_mod2,
            closed: closed_form_index(params),
            closed_form: mod2_closed_form(params),
            lissajous,
        }
    }

    pub fn matches(&self) -> bool {
        self.conway_mod2 == self.closed_form
    }

    fn lissajous_label(&self) -> String {
        match &self.lissajous {
            Some(v) => v.status.to_string(),
            None => "n/a".to_string(),
        }
    }

    pub fn csv_row(&self) -> [String; 12] {
        let f = self.link.fraction();
        [
            self.params.n().to_string(),
            self.params.j().to_string(),
            f.num().to_string(),
            f.den().to_string(),
            self.link.components().count().to_string(),
            self.expansion.quotients.to_string(),
            self.conway.to_string(),
            self.conway_mod2.to_string(),
            self.closed.index.to_string(),
            self.closed_form.to_string(),
            self.matches().to_string(),
            self.lissajous_label(),
        ]
    }

    pub fn to_json(&self) -> Value {
        let f = self.link.fraction();
        let mut m = Map::new();
        m.insert("n".into(), self.params.n().into());
        m.insert("j".into(), self.params.j().into());
        m.insert("notation".into(), cf_json(self.link.notation()));
        m.insert("fraction".into(), fraction_json(f));
        m.insert("alpha".into(), int_json(f.num()));
        m.insert("beta".into(), int_json(f.den()));
        m.insert("determinant".into(), int_json(self.link.determinant()));
        m.insert("components".into(), self.link.components().count().into());
        m.insert("expansion".into(), cf_json(&self.expansion.quotients));
        m.insert("route".into(), self.expansion.route.to_string().into());
        m.insert("s_applied".into(), self.expansion.s_applied.into());
        m.insert("conway".into(), int_poly_json(&self.conway));
        m.insert("conway_mod2".into(), gf2_json(&self.conway_mod2));
        m.insert("N".into(), self.closed.index.into());
        m.insert("closed_form".into(), gf2_json(&self.closed_form));
        m.insert("match".into(), self.matches().into());
        m.insert(
            "lissajous".into(),
            match &self.lissajous {
                Some(v) => {
                    json!({ "status": v.status.to_string(), "witness": gf2_json(&v.witness) })
                }
                None => Value::Null,
            },
        );
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let f = self.link.fraction();
        let components = self.link.components();
        let mut lines = vec![
            format!(
                "{} = {}",
                self.params,
                self.link.notation().conway_notation()
            ),
            format!("fraction      {f}"),
            format!("determinant   {}", self.link.determinant()),
            format!("components    {} ({components})", components.count()),
            format!(
                "expansion     {} ({}{})",
                self.expansion.quotients,
                self.expansion.route,
                if self.expansion.s_applied {
                    ", of s(fraction)"
                } else {
                    ""
                }
            ),
            format!("conway        {}", self.conway),
            format!("conway mod 2  {}", self.conway_mod2),
            format!(
                "closed form   f_{} = {}",
                self.closed.index, self.closed_form
            ),
            format!("match         {}", self.matches()),
        ];
        match &self.lissajous {
            Some(v) => lines.push(format!(
                "lissajous     {} (witness {})",
                v.status, v.witness
            )),
            None => lines.push("lissajous     n/a (two-component link)".into()),
        }
        if components == Components::TwoComponent {
            lines.push(LINK_SIGN_NOTE.into());
        }
        lines.join("\n") + "\n"
    }
}

pub const LINK_SIGN_NOTE: &str =
    "note: two-component link; the integer Conway polynomial depends on the even expansion used";
