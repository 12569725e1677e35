//! Full pipeline on a polytope file, printed in the human format.

use std::io::Write;

use gkz_lcsl::pipeline::{run_pipeline, PipelineConfig};
use gkz_lcsl::report::{emit_report, Format};

fn main() -> gkz_lcsl::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/p1xp3.poly").to_string());
    let mut cfg = PipelineConfig::new(path);
    cfg.order = 4;
    let report = run_pipeline(&cfg)?;
    std::io::stdout().write_all(&emit_report(&report, Format::Human)).expect("stdout");
    Ok(())
}
