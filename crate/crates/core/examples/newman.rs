//! Termination and the diamond condition on small oriented graphs.
use diamond_lemma::arw::{NewmanVerdict, OrientedGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in [
        ("diamond", include_str!("../corpus/diamond.edges")),
        ("two diamonds", include_str!("../corpus/two_diamonds.edges")),
        ("fork", include_str!("../corpus/fork.edges")),
        ("cycle", include_str!("../corpus/cycle.edges")),
    ] {
        let g = OrientedGraph::parse_edge_list(text)?;
        match g.newman_verdict() {
            NewmanVerdict::UniqueSinks(components) => {
                let sinks: Vec<&str> = components.iter().map(|c| c.sink.as_str()).collect();
                println!("{name}: unique sinks {sinks:?}");
            }
            NewmanVerdict::NotTerminating { cycle } => println!("{name}: cycle {}", cycle.join(" -> ")),
            NewmanVerdict::DiamondFails(f) => {
                println!("{name}: {} and {} never meet below {}", f.left, f.right, f.vertex)
            }
        }
    }
    Ok(())
}
