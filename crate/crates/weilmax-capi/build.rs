use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(crate_dir.join("include/weilmax.h"));
        }
        Err(e) => {
            // The committed header stays authoritative when generation is
            // unavailable (e.g. building without the dev toolchain).
            println!("cargo:warning=cbindgen failed: {e}; keeping committed include/weilmax.h");
        }
    }
}
