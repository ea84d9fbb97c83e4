//! Emits one unrolled sorter unit per network family into `OUT_DIR`.

use std::env;
use std::fs;
use std::path::PathBuf;

use netsort_networks::{emit_family_unit, Family};

fn main() {
    let out_dir = PathBuf::from(env::var_os("OUT_DIR").expect("OUT_DIR is set by cargo"));
    let sizes: Vec<usize> = (2..=16).collect();
    for family in Family::ALL {
        let unit = emit_family_unit(family, &sizes).expect("every family has networks for 2..=16");
        let file = out_dir.join(format!("unrolled_{}.rs", family.slug().replace('-', "_")));
        fs::write(&file, unit).unwrap_or_else(|e| panic!("writing {}: {e}", file.display()));
    }
    println!("cargo::rerun-if-changed=build.rs");
}
