//! Generating, serializing, parsing and realizing documents.

use permcat::cli::codec::{category_doc, Realizer};
use permcat::cli::doc::{parse, serialize, Body, Document};
use permcat::cli::generate::{Generator, GeneratorConfig};
use permcat::permcat::validate;

fn main() -> permcat::Result<()> {
    let mut g = Generator::new(GeneratorConfig::with_seed(3))?;
    let cat = g.category();
    let text = serialize(&Document::new(Body::Category(category_doc(&cat, 2)?)));
    println!("{text}");

    let doc = parse(&text)?;
    let Body::Category(c) = &doc.body else { unreachable!() };
    let again = Realizer::new().category(c)?;
    println!("realized {again}: {}", if validate(&again, 2).all_pass() { "all laws hold" } else { "FAILS" });

    let err = parse(r#"{"schema_version": 1, "kind": "monoid", "body": {"kind": "free", "generators": ["x"], "colour": 1}}"#).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
