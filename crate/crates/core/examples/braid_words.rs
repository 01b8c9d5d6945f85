//! Braid words: parsing, Markov moves, occurrence strings and canonical
//! forms.
//!
//! ```text
//! cargo run --example braid_words
//! ```

use braidrank::{BraidWord, OccurrenceString};

fn main() {
    let w: BraidWord = "B3:-2,1,-2,1".parse().expect("valid word");
    println!("word          {w}");
    println!("length        {}", w.len());
    println!("components    {}", w.component_count());
    println!("occurrences   {}", w.occurrence_string());
    println!("class         {:?}", w.classify());
    println!("canonical     {}", w.canonical_form());

    // conjugation and (de)stabilization leave the closure unchanged
    let rotated = w.cyclic_rotate(1);
    let stabilized = w.stabilize(true);
    println!("rotated       {rotated}");
    println!("stabilized    {stabilized}");
    println!("destabilized  {}", stabilized.destabilize().expect("single top generator"));
    println!("mirror        {}", w.mirror());
    println!("flip          {}", w.flip());

    // the unsigned shapes a 5-braid of length 8 can have
    let shapes = OccurrenceString::compositions(8, 4, 1);
    let no_unit = shapes.iter().filter(|o| !o.counts().contains(&1)).count();
    println!("{} occurrence strings for 5-braids of length 8, {no_unit} without a 1", shapes.len());

    let link: BraidWord = "B3:1,1,2,2".parse().unwrap();
    println!("{link} closes to a {}-component link", link.component_count());
}
