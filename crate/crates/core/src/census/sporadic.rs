//! Sporadic groups (and the Tits group) from the shipped table.

use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::data;
use crate::numtheory::Factorization;

#[derive(Clone, Debug)]
pub struct SporadicEntry {
    pub name: &'static str,
    pub order: Factorization,
    pub out_order: u64,
}

/// All 26 sporadic groups followed by `2F4(2)'`.
pub fn sporadic_table() -> &'static [SporadicEntry] {
    static TABLE: OnceLock<Vec<SporadicEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let file = data::find("census/sporadic.txt").expect("sporadic table is registered");
        parse(file.text)
    })
}

pub(crate) fn entry(name: &str) -> Option<&'static SporadicEntry> {
    sporadic_table().iter().find(|e| e.name == name)
}

fn parse(text: &'static str) -> Vec<SporadicEntry> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut it = line.splitn(4, ' ');
            let name = it.next().expect("name");
            let order: BigUint = it.next().and_then(|s| s.parse().ok()).expect("order");
            let out_order: u64 = it.next().and_then(|s| s.parse().ok()).expect("out order");
            let order = Factorization::parse_compact(&order, it.next().unwrap_or(""))
                .unwrap_or_else(|| panic!("factorization of {name} does not match its order"));
            SporadicEntry { name, order, out_order }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::factorize;

    #[test]
    fn table_is_complete_and_consistent() {
        let t = sporadic_table();
        assert_eq!(t.len(), 27);
        for e in t {
            assert!(e.out_order == 1 || e.out_order == 2, "{}", e.name);
        }
        // Independent factoring of the smaller orders.
        for e in t.iter().filter(|e| e.order.value().bits() <= 64) {
            assert_eq!(factorize(e.order.value()).factors(), e.order.factors(), "{}", e.name);
        }
        let monster = entry("M").unwrap();
        assert_eq!(monster.order.primes().count(), 15);
    }
}
