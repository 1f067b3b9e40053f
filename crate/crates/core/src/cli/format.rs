//! Text, JSON and LaTeX renderings of multivectors.

use serde_json::{json, Value};

use crate::cli::config::{BasisMode, OutputFormat, Session};
use crate::dotted::dwedge_to_wedge;
use crate::error::Result;
use crate::multivector::{render_term, Blade, BladeStyle, Multivector};
use crate::scalar::Scalar;

/// Coordinates and blade style to print `u` with. In dotted mode the
/// coordinates are taken in the dotted basis of the session's `F`.
fn coordinates(u: &Multivector, session: &Session) -> Result<(Multivector, BladeStyle)> {
    match session.cfg.basis {
        BasisMode::Dotted => Ok((dwedge_to_wedge(u, session.dotted())?, BladeStyle::Dotted)),
        BasisMode::Undotted if session.cfg.alias => Ok((u.clone(), BladeStyle::Alias)),
        BasisMode::Undotted => Ok((u.clone(), BladeStyle::Wedge)),
    }
}

pub fn text(u: &Multivector, style: BladeStyle) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (b, c)) in u.terms().enumerate() {
        let t = render_term(c, &style.name(*b));
        if k > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

pub fn json_value(u: &Multivector) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .map(|(b, c)| {
            json!({
                "blade": b.indices(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

fn latex_scalar(c: &Scalar) -> String {
    c.to_string()
        .replace('*', " ")
        .replace('[', "_{")
        .replace(']', "}")
}

fn latex_blade(b: Blade, style: BladeStyle) -> String {
    if b.is_id() {
        return "1".into();
    }
    let op = if style == BladeStyle::Dotted { " \\dot\\wedge " } else { " \\wedge " };
    if style == BladeStyle::Alias {
        let idx: String = b.iter().map(|i| i.to_string()).collect();
        return format!("e_{{{idx}}}");
    }
    b.iter().map(|i| format!("e_{{{i}}}")).collect::<Vec<_>>().join(op)
}

pub fn latex(u: &Multivector, style: BladeStyle) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (b, c)) in u.terms().enumerate() {
        let blade = latex_blade(*b, style);
        let (neg, mag) = if c.to_string().starts_with('-') && c.num_terms() == 1 {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if neg {
            out.push_str(if k > 0 { " - " } else { "-" });
        } else if k > 0 {
            out.push_str(" + ");
        }
        let coeff = if mag.num_terms() > 1 {
            format!("\\left({}\\right)", latex_scalar(&mag))
        } else {
            latex_scalar(&mag)
        };
        match (mag.is_one(), b.is_id()) {
            (true, _) => out.push_str(&blade),
            (false, true) => out.push_str(&coeff),
            (false, false) => out.push_str(&format!("{coeff}\\, {blade}")),
        }
    }
    out
}

/// Renders `u` in the session's output format and basis mode.
pub fn render(u: &Multivector, session: &Session) -> Result<String> {
    let (coords, style) = coordinates(u, session)?;
    Ok(match session.cfg.format {
        OutputFormat::Text => text(&coords, style),
        OutputFormat::Json => json_value(&coords).to_string(),
        OutputFormat::Latex => latex(&coords, style),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::SessionConfig;

    fn e(dim: usize, idx: &[usize]) -> Multivector {
        Multivector::blade(dim, idx).unwrap()
    }

    #[test]
    fn styles() {
        let u = e(3, &[1, 2]).scale(&Scalar::sym("a")) - e(3, &[]);
        assert_eq!(text(&u, BladeStyle::Wedge), "-Id+a*e1we2");
        assert_eq!(text(&u, BladeStyle::Alias), "-Id+a*e12");
        assert_eq!(latex(&u, BladeStyle::Wedge), "-1 + a\\, e_{1} \\wedge e_{2}");
        let v = json_value(&u);
        assert_eq!(v["terms"][1]["blade"], json!([1, 2]));
        assert_eq!(v["terms"][1]["coeff"], "a");
    }

    #[test]
    fn dotted_mode_reads_back_dotted_coordinates() {
        let cfg = SessionConfig {
            basis: BasisMode::Dotted,
            ..SessionConfig::default()
        };
        let s = Session::new(cfg, Some(2)).unwrap();
        let u = e(2, &[1, 2]) + Multivector::scalar(2, Scalar::entry("F", 1, 2));
        assert_eq!(render(&u, &s).unwrap(), "e1We2");
    }
}
