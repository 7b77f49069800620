use super::LinearSystem;
use crate::binform::{parse_form, BinForm};
use crate::error::{Error, Result};

/// Optional header fixing the common degree of the forms in a system file.
pub const SYSTEM_DEGREE_HEADER: &str = "# degree:";

/// Parses a system file: one form per line, `#` comments, and an optional
/// `# degree: n` header. All forms must share one degree.
pub fn parse_system(text: &str) -> Result<LinearSystem> {
    let mut degree: Option<usize> = None;
    let mut forms: Vec<BinForm> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix(SYSTEM_DEGREE_HEADER) {
            let d = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad degree header", lineno + 1)))?;
            degree = Some(d);
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let expected = degree.or_else(|| forms.first().map(BinForm::degree));
        let f = parse_form(line, expected).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?;
        forms.push(f);
    }
    if forms.is_empty() {
        return Err(Error::Parse("system file contains no forms".into()));
    }
    LinearSystem::new(&forms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_forms_and_header() {
        let s = parse_system("# degree: 4\n# comment\nu^4\nu^3 v\n\nv^4\n").unwrap();
        assert_eq!((s.n(), s.k()), (4, 2));
        let s = parse_system("u^5 + v^5\nu^5 - v^5\n").unwrap();
        assert_eq!(s.k(), 1);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(
            parse_system("# degree: 3\nu^4\n"),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 4
            })
        ));
        assert!(matches!(
            parse_system("u^4\nu^3\n"),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(parse_system("u^4 + w\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_system("# nothing\n"), Err(Error::Parse(_))));
    }
}
