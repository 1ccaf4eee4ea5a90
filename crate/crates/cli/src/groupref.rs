//! Group references: embedded names, generator files and small constructors.

use std::path::Path;

use primegraph::group::linear::{semidirect_spectrum, LinearAction};
use primegraph::group::{embedded_group, embedded_module, spectrum, GroupError, PermGroup, Spectrum, EMBEDDED_GROUPS, EMBEDDED_MODULES};

/// A resolved group reference.
#[derive(Clone, Debug)]
pub enum GroupRef {
    Perm(PermGroup),
    /// `V ⋊ S` for a shipped natural module `V` of `S`.
    Natural { name: String, action: LinearAction, group: PermGroup },
}

impl GroupRef {
    /// Parses `factor (x factor)*`. A string naming an existing file is read
    /// as a generator file before any splitting.
    pub fn parse(text: &str) -> Result<GroupRef, GroupError> {
        let text = text.trim();
        if Path::new(text).is_file() {
            return read_file(text).map(GroupRef::Perm);
        }
        let factors: Vec<&str> = text.split('x').map(str::trim).collect();
        if factors.len() == 1 {
            return factor(factors[0]);
        }
        let mut product: Option<PermGroup> = None;
        for f in &factors {
            let g = factor(f)?.perm_group()?;
            product = Some(match product {
                None => g,
                Some(p) => p.direct_product(&g),
            });
        }
        let name = factors.join("x");
        Ok(GroupRef::Perm(product.expect("at least one factor").with_name(name)))
    }

    pub fn name(&self) -> String {
        match self {
            GroupRef::Perm(g) => g.name().unwrap_or("G").to_string(),
            GroupRef::Natural { name, .. } => format!("nat:{name}"),
        }
    }

    /// A permutation representation; natural-module extensions act on the module.
    pub fn perm_group(&self) -> Result<PermGroup, GroupError> {
        match self {
            GroupRef::Perm(g) => Ok(g.clone()),
            GroupRef::Natural { name, action, .. } => Ok(action.affine_group()?.with_name(format!("nat:{name}"))),
        }
    }

    /// Canonical text the spectrum cache key is derived from.
    pub fn canonical_text(&self) -> String {
        match self {
            GroupRef::Perm(g) => format!("perm\n{}", g.to_generator_text()),
            GroupRef::Natural { action, group, .. } => {
                format!("natural\n{}\n{}", action.to_text(), group.to_generator_text())
            }
        }
    }

    /// The spectrum; natural-module extensions avoid enumerating `V ⋊ S`.
    pub fn spectrum(&self, cap: u64) -> Result<Spectrum, GroupError> {
        match self {
            GroupRef::Perm(g) => spectrum(g, cap),
            GroupRef::Natural { action, group, .. } => semidirect_spectrum(action, group, cap),
        }
    }
}

fn read_file(path: &str) -> Result<PermGroup, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Parse { line: 0, message: format!("{path}: {e}") })?;
    let name = Path::new(path).file_stem().and_then(|s| s.to_str()).unwrap_or(path).to_string();
    Ok(PermGroup::parse_generators(&text)?.with_name(name))
}

fn factor(text: &str) -> Result<GroupRef, GroupError> {
    if let Some(module) = text.strip_prefix("nat:") {
        let (action, group) = embedded_module(module)?;
        return Ok(GroupRef::Natural { name: module.to_string(), action, group });
    }
    named(text).map(GroupRef::Perm)
}

fn named(text: &str) -> Result<PermGroup, GroupError> {
    let unknown = || GroupError::Unsupported(format!("unknown group {text:?}"));
    if EMBEDDED_GROUPS.contains(&text) {
        return embedded_group(text);
    }
    if EMBEDDED_MODULES.contains(&text) {
        return Ok(embedded_module(text)?.1.with_name(text));
    }
    if text == "1" {
        return Ok(PermGroup::trivial(1).with_name("1"));
    }
    for (prefix, build) in [
        ("PSL2(", PermGroup::psl2 as fn(u64) -> Result<PermGroup, GroupError>),
        ("PGL2(", PermGroup::pgl2),
    ] {
        if let Some(rest) = text.strip_prefix(prefix) {
            let q: u64 = rest.strip_suffix(')').and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
            return Ok(build(q)?.with_name(text));
        }
    }
    let mut chars = text.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    let g = match head {
        'A' => PermGroup::alternating(n),
        'S' => PermGroup::symmetric(n),
        'C' => PermGroup::cyclic(n),
        'D' => PermGroup::dihedral(n)?,
        _ => return Err(unknown()),
    };
    Ok(g.with_name(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(text: &str) -> u64 {
        GroupRef::parse(text).unwrap().spectrum(100_000).unwrap().group_order()
    }

    #[test]
    fn constructors() {
        assert_eq!(order("A5"), 60);
        assert_eq!(order("S6"), 720);
        assert_eq!(order("C12"), 12);
        assert_eq!(order("D10"), 10);
        assert_eq!(order("PSL2(17)"), 2448);
        assert_eq!(order("PGL2(5)"), 120);
        assert_eq!(order("A5xC2"), 120);
        assert_eq!(order("M10"), 720);
        assert_eq!(order("nat:SL2(4)"), 960);
        assert_eq!(order("1"), 1);
    }

    #[test]
    fn rejects_unknown_names() {
        for bad in ["", "Q8", "A", "Ax", "PSL2(6)", "nat:M22", "B5"] {
            assert!(GroupRef::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn natural_module_matches_affine_group() {
        let r = GroupRef::parse("nat:SL2(4)").unwrap();
        let direct = spectrum(&r.perm_group().unwrap(), 10_000).unwrap();
        assert_eq!(r.spectrum(10_000).unwrap(), direct);
    }
}
