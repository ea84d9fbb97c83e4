// Usage: cargo run --example networks
//
// Builds each network family, prints size and depth, checks it with the
// zero-one principle and shows the comparator table and unrolled source.

use netsort::networks::{
    depth, emit_unrolled_source, format_table, network_for, parse_table, verify_zero_one, Dialect, Family,
};

fn main() {
    println!("{:>3} {}", "n", Family::ALL.map(|f| format!("{:>10}", f.label())).join(""));
    for n in 2..=16 {
        let cells: Vec<String> = Family::ALL
            .iter()
            .map(|&f| {
                let net = network_for(f, n).unwrap();
                assert!(verify_zero_one(&net).unwrap());
                format!("{:>10}", format!("{}/{}", net.size(), depth(&net)))
            })
            .collect();
        println!("{n:>3} {}", cells.join(""));
    }
    println!("(size/depth, all verified on every 0/1 input)\n");

    let net = network_for(Family::BoseNelsonLocality, 4).unwrap();
    let table = format_table(&net);
    println!("{table}");
    assert_eq!(parse_table(&table, Family::BoseNelsonLocality).unwrap(), net);

    println!("{}", emit_unrolled_source(&net, Dialect::Source));

    // drop the final comparator (1,2)
    let broken = parse_table("n=4\n0 1\n2 3\n0 2\n1 3\n", Family::Best).unwrap();
    assert!(!verify_zero_one(&broken).unwrap());
    println!("a 4-input network without its final comparator is rejected");
}
