//! Build and verify every row of the S³ → S² design-size table.

use hopf_designs::cli::{hopf_table, HopfTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows = hopf_table()?;
    println!("{}", HopfTable(&rows));
    Ok(())
}
