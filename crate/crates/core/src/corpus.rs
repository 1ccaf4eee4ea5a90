//! Named test groups used by property checks and the acceptance suite.

use crate::group::field::FiniteField;
use crate::group::{embedded_group, embedded_module, GroupError, PermGroup};
use crate::perm::Permutation;

/// The affine group `x -> a x + b` with `a` in the subgroup of order `d` of
/// `GF(p)^*`, a Frobenius group of order `p d` for `d > 1`.
pub fn affine_line(p: u64, d: u64) -> Result<PermGroup, GroupError> {
    if (p - 1) % d != 0 {
        return Err(GroupError::Unsupported(format!("{d} does not divide {p} - 1")));
    }
    let f = FiniteField::new(p)?;
    if f.degree() != 1 {
        return Err(GroupError::Unsupported(format!("{p} is not prime")));
    }
    let a = f.pow(f.primitive_element(), (p - 1) / d);
    let n = p as u32;
    let translate = Permutation::from_images((0..n).map(|x| f.add(x, 1)).collect())?;
    let scale = Permutation::from_images((0..n).map(|x| f.mul(x, a)).collect())?;
    Ok(PermGroup::new(p as usize, vec![translate, scale])?.with_name(format!("{p}:{d}")))
}

fn named(g: PermGroup, name: &str) -> PermGroup {
    g.with_name(name)
}

/// At least 30 groups of order at most 2000.
pub fn small_corpus() -> Vec<PermGroup> {
    let mut out = vec![named(PermGroup::trivial(1), "1")];
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30] {
        out.push(PermGroup::cyclic(n));
    }
    for order in [4, 6, 8, 10, 12, 14, 18, 20, 30] {
        out.push(PermGroup::dihedral(order).expect("even order"));
    }
    for n in 3..=6 {
        out.push(PermGroup::symmetric(n));
    }
    for n in 4..=6 {
        out.push(PermGroup::alternating(n));
    }
    for q in [4, 5, 7, 8, 9, 11, 13] {
        out.push(PermGroup::psl2(q).expect("prime power"));
    }
    for q in [5, 7] {
        out.push(PermGroup::pgl2(q).expect("prime power"));
    }
    out.push(PermGroup::m10());
    for (p, d) in [(5, 4), (7, 3), (7, 6), (11, 5), (13, 4)] {
        out.push(affine_line(p, d).expect("divisor of p - 1"));
    }
    let c2 = PermGroup::cyclic(2);
    let c3 = PermGroup::cyclic(3);
    let c5 = PermGroup::cyclic(5);
    let s3 = PermGroup::symmetric(3);
    let a4 = PermGroup::alternating(4);
    let a5 = PermGroup::alternating(5);
    out.push(s3.direct_product(&c2));
    out.push(s3.direct_product(&c5));
    out.push(s3.direct_product(&s3));
    out.push(a4.direct_product(&c3));
    out.push(a4.direct_product(&c2));
    out.push(a5.direct_product(&c2));
    out.push(a5.direct_product(&c3));
    out.push(PermGroup::symmetric(4).direct_product(&c2));
    out.push(PermGroup::psl2(7).expect("prime").direct_product(&c2));
    out.push(PermGroup::dihedral(10).expect("even").direct_product(&c3));
    out.push(affine_line(7, 3).expect("3 | 6").direct_product(&c2));
    out
}

/// The small corpus together with larger groups up to order 30000.
pub fn extended_corpus() -> Result<Vec<PermGroup>, GroupError> {
    let mut out = small_corpus();
    out.push(PermGroup::symmetric(7));
    out.push(PermGroup::alternating(7));
    out.push(PermGroup::alternating(8));
    for q in [16, 17, 19, 23, 25, 27] {
        out.push(PermGroup::psl2(q)?);
    }
    out.push(PermGroup::pgl2(9)?);
    out.push(embedded_group("PSL3(4)")?);
    out.push(embedded_module("Sz(8)")?.1);
    let (sl24, _) = embedded_module("SL2(4)")?;
    out.push(sl24.affine_group()?.with_name("2^4:SL2(4)"));
    out.push(PermGroup::alternating(5).direct_product(&PermGroup::alternating(5)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn affine_line_orders() {
        assert_eq!(affine_line(7, 3).unwrap().order(), BigUint::from(21u32));
        assert_eq!(affine_line(13, 12).unwrap().order(), BigUint::from(156u32));
        assert!(affine_line(7, 4).is_err());
    }

    #[test]
    fn corpus_sizes() {
        let small = small_corpus();
        assert!(small.len() >= 30);
        for g in &small {
            assert!(g.order() <= BigUint::from(2000u32), "{:?}", g.name());
            assert!(g.name().is_some());
        }
    }
}
