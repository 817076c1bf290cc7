//! Loading and validating region descriptions.

use starlog::BasicDomainSpec;

fn main() -> starlog::Result<()> {
    let dir = std::path::Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/domains"));
    for name in ["slice.json", "product.json", "z0_neighbourhood.json", "ball11.json"] {
        let d = BasicDomainSpec::load(&dir.join(name))?;
        let r = d.validate()?;
        println!("{name}: {:?}, {} rects, step {}, {} grid nodes", d.kind, d.rects.len(), d.step(), d.grid().len());
        println!("  {r:?}");
    }
    let bad = BasicDomainSpec::from_json(r#"{"rects":[[-1,1,0.5,1]],"kind":"slice"}"#)?;
    println!("slice region off the real axis: {}", bad.validate().unwrap_err());
    Ok(())
}
