//! Registry of shipped data files with their SHA-256 checksums.

use sha2::{Digest, Sha256};

/// A data file compiled into the library.
#[derive(Clone, Copy, Debug)]
pub struct DataFile {
    pub name: &'static str,
    pub path: &'static str,
    pub text: &'static str,
    pub sha256: &'static str,
}

impl DataFile {
    pub fn checksum_ok(&self) -> bool {
        sha256_hex(self.text.as_bytes()) == self.sha256
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

macro_rules! data_file {
    ($name:expr, $path:expr, $sha:expr) => {
        DataFile {
            name: $name,
            path: $path,
            text: include_str!(concat!("../data/", $path)),
            sha256: $sha,
        }
    };
}

pub static DATA_FILES: &[DataFile] = &[
    data_file!("M22", "groups/m22.gens", "9968c0b7f0fb794b7c67ec8a626f0406c0b10cf2a3a5093d04dbb1bf91005333"),
    data_file!("PSL3(4)", "groups/psl3_4.gens", "2a3c70e865e8661b85bdfb094a0c1a6964b9143c543878c90ee0aed036e8cc10"),
    data_file!("J2.2", "groups/j2_2.gens", "a654f1fc5b9c6f67b3aad13af30f7e4643ba0186e03a248084d1ade07eb2565d"),
    data_file!("J2", "groups/j2.gens", "b2f977ccbf27e7e0151f1bd85ccd7c6c86bca539a9e24ed6992d27113a5e4bd3"),
    data_file!("J1", "groups/j1.gens", "e3344b990326c48b3a628edcc91db7eaecc79be666cbe55e03ac9b4fccbfd963"),
    data_file!("M10", "groups/m10.gens", "38cb9e24dae4c60e81169b02a1b328c19b3f881c7efea48a8164dd59b5d464a8"),
    data_file!("PGL2(9)", "groups/pgl2_9.gens", "82292610f9664bc85f987360fbe91e43686d3eabe6accaca15e33b3f9e75a4ce"),
    data_file!("SL2(4)", "modules/sl2_4.mat", "2a419992f313f35ea705d5dcaf2e2934d18a2e1cabfc368e9d835caffc8f26b4"),
    data_file!("SL2(8)", "modules/sl2_8.mat", "ed491bbe42a58f9551fcef0317205f001857b7017c89fa0d3894f82ee2457ede"),
    data_file!("Sz(8)", "modules/sz8.mat", "04e5d112267a292efed4964c78d07783daaa9110ca71c362959b445d8c9d3822"),
    data_file!("Sz(32)", "modules/sz32.mat", "d1f7b2306c8c76310b979d2a12d1fa2e67cac6ca5dcf0de7d68b76a0c4d73ac0"),
    data_file!("sporadic", "census/sporadic.txt", "22bd3078c2f6683685183caa73aa5e6c5ee97c86f40c025d4808543521619e90"),
    data_file!("table1", "tables/table1.txt", "34e95c02ddab372a4b663f936b009bf60882b460078f7ed63b57a45beadabca0"),
    data_file!("table2_e8_2", "tables/e8_2.txt", "4dbd24dcb5ef9fb4820890db731c195b513f06b2abd005e95417377b254b81d3"),
    data_file!("table3_monster", "tables/monster.txt", "8b6b8dd68c9b995905037769170bf7dda24e10f34d9a28f7ff8e9ea7b6c66608"),
    data_file!("gk_2g2_27", "tables/2g2_27.graph", "4f4fcc191d2c868050a461ea8534f14fb5ace5c0bf01950028c2f3449a23df69"),
];

pub fn find(path: &str) -> Option<&'static DataFile> {
    DATA_FILES.iter().find(|d| d.path == path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checksums_match() {
        for d in DATA_FILES {
            assert!(d.checksum_ok(), "{} ({})", d.name, d.path);
        }
    }

    #[test]
    fn corrupted_text_is_detected() {
        let d = DATA_FILES[0];
        let mut text = d.text.to_string();
        text.push(' ');
        assert_ne!(sha256_hex(text.as_bytes()), d.sha256);
    }
}
