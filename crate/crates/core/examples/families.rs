//! Build members of each family and print them in the three export formats.
//!
//! cargo run --example families -- 7 2

use quartic_iso::graph::{self, AccordionParams, CirculantParams};

fn main() -> quartic_iso::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (7, 2),
    };

    let p = AccordionParams::new(n, k)?;
    let acc = graph::accordion(p);
    println!("A[{n},{k}]: {} vertices, {} edges", acc.order(), acc.size());
    println!("  u_1 = {}, v_1 = {}, neighbours of u_1: {:?}", p.u(1), p.v(1), acc.neighbors(p.u(1)));
    for ((x, y), class) in graph::accordion_edges(p).into_iter().take(4) {
        println!("  {x}-{y} {class:?}");
    }
    print!("{}", acc.to_json());

    let ci = graph::circulant(CirculantParams::new(n, 1, 2)?);
    println!("\nCi[{},{{1,2}}] as an edge list:", 2 * n);
    print!("{}", ci.to_edge_list());

    let torus = graph::cartesian_product(&graph::cycle_graph(3)?, &graph::cycle_graph(4)?)?;
    println!("\nC3 x C4 in DOT:");
    print!("{}", torus.to_dot());

    let cyl = graph::cartesian_product(&graph::cycle_graph(6)?, &graph::path_graph(2)?)?;
    println!(
        "\nC6 x P2: connected={} bipartite={} degrees={:?}",
        graph::is_connected(&cyl),
        graph::is_bipartite(&cyl),
        cyl.degree_sequence()
    );
    Ok(())
}
