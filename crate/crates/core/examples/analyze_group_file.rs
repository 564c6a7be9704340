//! Reading a group file and producing the same report as `eulerclass analyze`.
//!
//! cargo run --example analyze_group_file -- [path] [char]

use std::path::PathBuf;

use eulerclass::report::analyze_path;
use eulerclass::DEFAULT_CAP;

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("groups/p3m1.json"));
    let p: u64 = args.next().map(|s| s.parse().expect("char must be an integer")).unwrap_or(3);

    match analyze_path(&path, p, DEFAULT_CAP) {
        Ok(report) => {
            println!("{}", report.render_text());
            println!("{}", report.to_json_string());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
