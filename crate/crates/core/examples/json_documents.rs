// The document formats the command-line tool reads and writes.

use spectral_glue::io::{graph_to_json, parse_glue, parse_graph, poly_to_json, GlueSpec};
use spectral_glue::spectral_gluing::multi_bridge_charpoly;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k2 = parse_graph(r#"{"name": "K2", "vertices": 2, "edges": [[0, 1]]}"#)?;
    let glue = parse_glue(r#"{"mode": "bridge", "pairs": [[0, 0]]}"#)?.resolve(&k2, &k2)?;
    let GlueSpec::Bridge(bridges) = glue else {
        unreachable!("bridge document")
    };
    let p = multi_bridge_charpoly(&k2, &k2, &bridges)?;
    println!("{}", graph_to_json(&k2, Some("K2".into())));
    println!("{}", poly_to_json(&p));
    assert_eq!(poly_to_json(&p)["coefficients"].to_string(), "[0,-4,10,-6,1]");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("json_documents");
}
