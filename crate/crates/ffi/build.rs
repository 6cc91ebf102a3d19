use std::env;
use std::path::PathBuf;

use cbindgen::{Config, Language};

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let config = Config::from_file(crate_dir.join("cbindgen.toml")).expect("cbindgen.toml");
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .with_language(Language::C)
        .generate()
        .expect("unable to generate bindings")
        .write_to_file(crate_dir.join("include/eudoxus.h"));
}
