//! Run certificate suites from code and inspect flagged certificates.
//!
//! ```text
//! cargo run --release --example run_suite -- all
//! ```

use fanocert::certify::{run_suite, Config, Suite, Verdict};

fn main() {
    let suite: Suite = std::env::args().nth(1).map_or(Suite::All, |s| s.parse().expect("suite name"));
    let report = run_suite(suite, &Config::default());
    let s = report.summary;
    println!("{suite}: {} certificates, {} pass, {} fail, {} flagged", s.total, s.pass, s.fail, s.flagged);

    for c in report.certificates.iter().filter(|c| c.verdict != Verdict::Pass) {
        println!("{} {}", c.verdict, c.id);
        println!("  expected {} ({:?})", c.expected.value, c.expected.provenance);
        println!("  computed {}", c.computed);
        if let Some(note) = &c.note {
            println!("  {note}");
        }
    }
}
