//! The massive/massless summary tables with the documented corrections
//! applied and flagged.
//!
//! Run with: `cargo run --example summary_tables`

use kinstatic::errata::ERRATA;
use kinstatic::tables::{render_text, summary_tables};

fn main() {
    let tables = summary_tables();
    print!("{}", render_text(&tables));

    println!("\nfull errata ledger:");
    for e in ERRATA {
        println!("  {} ({})", e.id, e.location);
        println!("      printed:   {}", e.printed);
        println!("      corrected: {}", e.corrected);
        println!("      why:       {}", e.rationale);
    }

    // Cells keep the printed text they replaced.
    let abs = &tables.massive[0];
    println!(
        "\nABS motion cell: emitted `{}`, printed `{}`",
        abs.motion.text,
        abs.motion.printed.as_deref().unwrap()
    );
}
