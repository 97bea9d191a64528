//! Writes the example corpus to a directory (default `data/`), then the
//! golden reports of the corpus runs to `DIR/golden/`.
//!
//! `cargo run --example export_corpus -- [DIR]`

use std::path::PathBuf;

use eqss::cli::corpus::{cup_forms, cup_json, documents, golden_args, golden_runs};
use eqss::cli::{run_with, Settings};

fn main() -> std::io::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in documents() {
        std::fs::write(dir.join(name), doc.to_json())?;
        println!("wrote {}", dir.join(name).display());
    }
    for (name, cup) in cup_forms() {
        std::fs::write(dir.join(name), cup_json(&cup))?;
        println!("wrote {}", dir.join(name).display());
    }
    // golden runs read their inputs relative to the crate root
    std::env::set_current_dir(env!("CARGO_MANIFEST_DIR"))?;
    let golden = dir.join("golden");
    std::fs::create_dir_all(&golden)?;
    for (report, args) in golden_runs() {
        let out = run_with(golden_args(report, &args), Settings::default());
        if !out.stderr.is_empty() {
            eprint!("{report}: {}", out.stderr);
        }
        std::fs::write(golden.join(report), out.stdout)?;
        println!("wrote {} (exit {})", golden.join(report).display(), out.code);
    }
    Ok(())
}
