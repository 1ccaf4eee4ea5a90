//! Embedded generator sets and groups built from the projective line.

use super::field::FiniteField;
use super::linear::LinearAction;
use super::{GroupError, PermGroup};
use crate::data;
use crate::perm::Permutation;

/// Names of the embedded permutation groups.
pub const EMBEDDED_GROUPS: &[&str] = &["M22", "PSL3(4)", "J2.2", "J2", "J1", "M10", "PGL2(9)"];

/// Names of the embedded matrix groups (natural modules in characteristic 2).
pub const EMBEDDED_MODULES: &[&str] = &["SL2(4)", "SL2(8)", "Sz(8)", "Sz(32)"];

fn lookup(name: &str, prefix: &str) -> Result<&'static data::DataFile, GroupError> {
    data::DATA_FILES
        .iter()
        .find(|d| d.name == name && d.path.starts_with(prefix))
        .ok_or_else(|| GroupError::UnknownDataset(name.to_string()))
}

pub fn embedded_group(name: &str) -> Result<PermGroup, GroupError> {
    let file = lookup(name, "groups/")?;
    Ok(PermGroup::parse_generators(file.text)?.with_name(name))
}

/// The matrix generators of an embedded module together with the faithful
/// permutation group they induce on projective points.
pub fn embedded_module(name: &str) -> Result<(LinearAction, PermGroup), GroupError> {
    let file = lookup(name, "modules/")?;
    let action = LinearAction::parse(file.text)?;
    let group = action.projective_group()?.with_name(name);
    Ok((action, group))
}

/// Permutations of `PG(1, q)`: field elements are points `0..q`, infinity is `q`.
struct ProjectiveLine {
    f: FiniteField,
}

impl ProjectiveLine {
    fn new(q: u64) -> Result<Self, GroupError> {
        Ok(ProjectiveLine {
            f: FiniteField::new(q)?,
        })
    }

    fn inf(&self) -> u32 {
        self.f.order()
    }

    fn perm(&self, map: impl Fn(u32) -> u32) -> Permutation {
        let n = self.f.order() + 1;
        Permutation::from_images((0..n).map(map).collect()).expect("bijection of the line")
    }

    fn translation(&self) -> Permutation {
        let inf = self.inf();
        self.perm(|x| if x == inf { inf } else { self.f.add(x, 1) })
    }

    fn scaling(&self, a: u32) -> Permutation {
        let inf = self.inf();
        self.perm(|x| if x == inf { inf } else { self.f.mul(x, a) })
    }

    fn inversion(&self) -> Permutation {
        let inf = self.inf();
        let minus_one = self.f.neg(1);
        self.perm(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                self.f.mul(minus_one, self.f.inv(x).unwrap())
            }
        })
    }

    /// `x -> a * x^p`.
    fn semilinear(&self, a: u32) -> Permutation {
        let inf = self.inf();
        self.perm(|x| if x == inf { inf } else { self.f.mul(a, self.f.frobenius(x)) })
    }
}

impl PermGroup {
    /// `PSL(2, q)` on the `q + 1` points of the projective line.
    pub fn psl2(q: u64) -> Result<Self, GroupError> {
        let line = ProjectiveLine::new(q)?;
        let w = line.f.primitive_element();
        let gens = vec![
            line.translation(),
            line.scaling(line.f.mul(w, w)),
            line.inversion(),
        ];
        Ok(PermGroup::new(q as usize + 1, gens)?.with_name(format!("PSL2({q})")))
    }

    /// `PGL(2, q)` on the projective line.
    pub fn pgl2(q: u64) -> Result<Self, GroupError> {
        let line = ProjectiveLine::new(q)?;
        let w = line.f.primitive_element();
        let gens = vec![line.translation(), line.scaling(w), line.inversion()];
        Ok(PermGroup::new(q as usize + 1, gens)?.with_name(format!("PGL2({q})")))
    }

    /// `M10`, the extension of `PSL(2, 9)` by `x -> w x^3`.
    pub fn m10() -> Self {
        let line = ProjectiveLine::new(9).expect("GF(9)");
        let w = line.f.primitive_element();
        let gens = vec![
            line.translation(),
            line.scaling(line.f.mul(w, w)),
            line.inversion(),
            line.semilinear(w),
        ];
        PermGroup::new(10, gens).expect("degree 10").with_name("M10")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spectrum;

    #[test]
    fn projective_line_group_orders() {
        for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32] {
            let d = if q % 2 == 0 { 1 } else { 2 };
            let expected = q * (q * q - 1) / d;
            assert_eq!(PermGroup::psl2(q).unwrap().order(), expected.into(), "PSL2({q})");
            assert_eq!(PermGroup::pgl2(q).unwrap().order(), (q * (q * q - 1)).into());
        }
    }

    #[test]
    fn constructed_groups_agree_with_embedded_data() {
        let m10 = PermGroup::m10();
        let data = embedded_group("M10").unwrap();
        assert_eq!(m10.order(), 720u32.into());
        assert_eq!(data.order(), 720u32.into());
        assert_eq!(spectrum(&m10, 1000).unwrap(), spectrum(&data, 1000).unwrap());
        let pgl = PermGroup::pgl2(9).unwrap();
        let data = embedded_group("PGL2(9)").unwrap();
        assert_eq!(spectrum(&pgl, 1000).unwrap(), spectrum(&data, 1000).unwrap());
    }

    #[test]
    fn embedded_orders() {
        let expect: &[(&str, u64)] = &[
            ("M22", 443_520),
            ("PSL3(4)", 20_160),
            ("J2.2", 1_209_600),
            ("J2", 604_800),
            ("J1", 175_560),
            ("M10", 720),
            ("PGL2(9)", 720),
        ];
        for &(name, order) in expect {
            assert_eq!(embedded_group(name).unwrap().order(), order.into(), "{name}");
        }
    }

    #[test]
    fn embedded_modules_give_faithful_projective_actions() {
        let expect: &[(&str, usize, u64)] = &[
            ("SL2(4)", 5, 60),
            ("SL2(8)", 9, 504),
            ("Sz(8)", 65, 29_120),
            ("Sz(32)", 1025, 32_537_600),
        ];
        for &(name, degree, order) in expect {
            let (_, g) = embedded_module(name).unwrap();
            assert_eq!(g.degree(), degree, "{name}");
            assert_eq!(g.order(), order.into(), "{name}");
        }
    }

    #[test]
    fn unknown_dataset() {
        assert!(matches!(
            embedded_group("M24"),
            Err(GroupError::UnknownDataset(_))
        ));
    }
}
