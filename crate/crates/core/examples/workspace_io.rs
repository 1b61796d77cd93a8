//! Loading the shipped JSON fixtures, querying them and writing them back in
//! canonical form.

use charclass::extension::section_curvature;
use charclass::io::{cochain_text, parse_workspace, serialize_workspace};

fn main() -> charclass::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/heisenberg.json");
    let text = std::fs::read_to_string(path).map_err(|e| charclass::Error::Parse(e.to_string()))?;
    let ws = parse_workspace(&text)?;
    println!("algebras: {:?}", ws.algebras().keys().collect::<Vec<_>>());

    let ext = ws.extension("heis")?;
    for name in ["s0", "s1", "s2"] {
        let r = section_curvature(ext, ws.section(name, "heis")?)?;
        print!("R_{name}: {}", cochain_text(&r, ext.base().basis_names()));
    }
    println!("canonical: {}", serialize_workspace(&ws) == text);
    Ok(())
}
