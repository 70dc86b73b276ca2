//! Pushouts along monos stay monic and are pullbacks; random cubes satisfy
//! the Van Kampen property.

use cospan_rewrite::laws::{adhesive_suite, SuiteConfig};

fn main() {
    let report = adhesive_suite(&SuiteConfig::new(11, 100, 4));
    println!("{report}");
}
