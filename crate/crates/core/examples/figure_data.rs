// Ground-state and energy curves behind the two figures, written as CSV.

use std::path::PathBuf;

use relosc::cli::{fig1_tables, fig2_tables, write_atomic, Command, RunConfig};

pub fn run_example() -> relosc::Result<Vec<PathBuf>> {
    let dir = std::env::temp_dir().join("relosc-figure-data");
    let mut written = Vec::new();
    let tables = fig1_tables(&RunConfig::defaults(Command::Fig1))?
        .into_iter()
        .chain(fig2_tables(&RunConfig::defaults(Command::Fig2))?);
    for t in tables {
        let path = dir.join(format!("{}.csv", t.stem));
        write_atomic(&path, &t.table.to_csv())?;
        written.push(path);
    }
    Ok(written)
}

fn main() -> relosc::Result<()> {
    for path in run_example()? {
        println!("{}", path.display());
    }
    Ok(())
}
