//! Text formats: module presentation files and extension-algebra files.
//!
//! Presentation file: first line `p r n`, then one relation per line as
//! `;`-separated component polynomials (`0` for a zero component).
//! Extension-algebra file: header line `p n`, then a presentation block.
//! Blank lines and `#` comments are skipped everywhere.

use crate::error::{Error, Result};
use crate::extension::ExtensionAlgebra;
use crate::field::FieldSpec;
use crate::fmla::AlgebraContext;
use crate::modvec::FreeModuleVector;
use crate::poly::Polynomial;
use crate::presentation::ModulePresentation;

fn content_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_usize(tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Malformed(format!("bad {what} '{tok}'")))
}

fn parse_presentation_lines(lines: &[&str]) -> Result<ModulePresentation> {
    let header = lines
        .first()
        .ok_or_else(|| Error::Malformed("empty presentation".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::Malformed(format!(
            "presentation header must be 'p r n', got '{header}'"
        )));
    }
    let p = parse_usize(toks[0], "characteristic")? as u64;
    let r = parse_usize(toks[1], "variable count")?;
    let n = parse_usize(toks[2], "generator count")?;
    let field = FieldSpec::new(p)?;
    let mut relations = Vec::new();
    for line in &lines[1..] {
        let comps: Vec<&str> = line.split(';').map(str::trim).collect();
        if comps.len() != n {
            return Err(Error::Malformed(format!(
                "relation '{line}' has {} components, expected {n}",
                comps.len()
            )));
        }
        let mut entries = Vec::new();
        for (j, c) in comps.iter().enumerate() {
            let poly = Polynomial::parse(field, r, c)?;
            if !poly.is_zero() {
                entries.push((j, poly));
            }
        }
        relations.push(FreeModuleVector::from_entries(n, entries));
    }
    ModulePresentation::new(field, r, n, relations)
}

pub fn parse_presentation(text: &str) -> Result<ModulePresentation> {
    parse_presentation_lines(&content_lines(text))
}

/// Canonical form: header, then relations with `;`-separated components.
pub fn print_presentation(m: &ModulePresentation) -> String {
    let mut out = format!("{} {} {}\n", m.field().p(), m.nvars(), m.ngens());
    for rel in m.relations() {
        let comps: Vec<String> = (0..m.ngens())
            .map(|j| rel.component(j).map_or_else(|| "0".to_string(), |p| p.to_string()))
            .collect();
        out.push_str(&comps.join(" ; "));
        out.push('\n');
    }
    out
}

pub fn parse_extension(text: &str) -> Result<ExtensionAlgebra> {
    let lines = content_lines(text);
    let header = lines
        .first()
        .ok_or_else(|| Error::Malformed("empty extension-algebra file".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Malformed(format!(
            "algebra header must be 'p n', got '{header}'"
        )));
    }
    let p = parse_usize(toks[0], "characteristic")? as u64;
    let n = parse_usize(toks[1], "base rank")?;
    let field = FieldSpec::new(p)?;
    let module = parse_presentation_lines(&lines[1..])?;
    if module.field() != field {
        return Err(Error::ConfigMismatch(
            "algebra and module characteristics differ".into(),
        ));
    }
    if module.nvars() != n {
        return Err(Error::ConfigMismatch(format!(
            "module over {} variables under a rank-{n} base",
            module.nvars()
        )));
    }
    ExtensionAlgebra::new(AlgebraContext::new(field, n)?, module)
}

pub fn print_extension(b: &ExtensionAlgebra) -> String {
    format!(
        "{} {}\n{}",
        b.field().p(),
        b.base().rank(),
        print_presentation(b.module())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_roundtrip() {
        let text = "2 2 2\nx2 ; x1\n0 ; x1^2 + 1\n";
        let m = parse_presentation(text).unwrap();
        assert_eq!(m.nvars(), 2);
        assert_eq!(m.ngens(), 2);
        assert_eq!(m.relations().len(), 2);
        let printed = print_presentation(&m);
        let again = parse_presentation(&printed).unwrap();
        assert_eq!(print_presentation(&again), printed);
    }

    #[test]
    fn presentation_with_comments() {
        let text = "# free module of rank 1\n3 2 1\n";
        let m = parse_presentation(text).unwrap();
        assert_eq!(m.relations().len(), 0);
        assert_eq!(m.field().p(), 3);
    }

    #[test]
    fn presentation_rejects_bad_shapes() {
        assert!(parse_presentation("").is_err());
        assert!(parse_presentation("2 2").is_err());
        assert!(parse_presentation("4 2 1\n").is_err()); // not prime
        assert!(parse_presentation("2 2 2\nx1\n").is_err()); // wrong arity
    }

    #[test]
    fn extension_roundtrip() {
        let text = "2 2\n2 2 1\nx1\n";
        let b = parse_extension(text).unwrap();
        assert_eq!(b.base().rank(), 2);
        assert_eq!(b.module().relations().len(), 1);
        let printed = print_extension(&b);
        let again = parse_extension(&printed).unwrap();
        assert_eq!(print_extension(&again), printed);
    }

    #[test]
    fn extension_rejects_mismatches() {
        assert!(parse_extension("2 2\n3 2 1\n").is_err()); // p mismatch
        assert!(parse_extension("2 3\n2 2 1\n").is_err()); // rank mismatch
    }
}
