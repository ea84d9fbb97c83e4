//! Emission of networks as comparator tables or as straight-line Rust.
//!
//! Emitted Rust expects these names in scope where it is included:
//!
//! - `SortItem` and the `ConditionalSwap` trait,
//! - `cswap::<S, N>(v: &mut [SortItem; N], low, high)`,
//! - `sub::<M, N>(v: &mut [SortItem; N], at) -> &mut [SortItem; M]`,
//! - `prefix::<N>(v: &mut [SortItem]) -> &mut [SortItem; N]`.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use crate::bose_nelson::{bose_nelson_split, generate_bose_nelson, recursive_parts};
use crate::{depth, format_table, network_for, Family, Network, NetworkError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    /// The `n=` / `<low> <high>` table format.
    Table,
    /// One Rust function per network.
    Source,
}

impl FromStr for Dialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Dialect::Table),
            "source" => Ok(Dialect::Source),
            other => Err(format!("unknown emission dialect `{other}` (expected table or source)")),
        }
    }
}

/// Name of the emitted sorter, e.g. `sort_bn_l_10`.
pub fn function_name(family: Family, n: usize) -> String {
    format!("sort_{}_{n}", family.slug().replace('-', "_"))
}

/// Emits one network.
///
/// In the source dialect every comparator becomes one `cswap` call in network
/// order. Networks tagged [`Family::BoseNelsonRecursive`] instead call the
/// emitted sorters for both halves and then run the merger comparators.
///
/// # Panics
///
/// Panics if a network tagged `BoseNelsonRecursive` is not the Bose-Nelson
/// network for its channel count.
pub fn emit_unrolled_source(net: &Network, dialect: Dialect) -> String {
    match dialect {
        Dialect::Table => format_table(net),
        Dialect::Source => emit_function(net),
    }
}

fn emit_function(net: &Network) -> String {
    let n = net.channels();
    let family = net.family();
    let mut out = String::new();
    writeln!(
        out,
        "/// {} network, {n} channels: {} comparators, {} levels.",
        family.label(),
        net.size(),
        depth(net)
    )
    .unwrap();
    // The recursive variant keeps its sub-sorters as real calls.
    let inline = if family == Family::BoseNelsonRecursive { "#[inline(never)]" } else { "#[inline]" };
    writeln!(out, "{inline}").unwrap();
    writeln!(out, "pub fn {}<S: ConditionalSwap>(v: &mut [SortItem; {n}]) {{", function_name(family, n)).unwrap();

    if family == Family::BoseNelsonRecursive && n >= 2 {
        assert_eq!(
            net.comparators(),
            generate_bose_nelson(n).comparators(),
            "BN-R emission needs the Bose-Nelson network for {n} channels"
        );
        let (first, second) = bose_nelson_split(n);
        let (_, _, merger) = recursive_parts(n);
        for (len, at) in [(first, 0), (second, first)] {
            if len >= 2 {
                writeln!(out, "    {}::<S>(sub::<{len}, {n}>(v, {at}));", function_name(family, len)).unwrap();
            }
        }
        for c in merger {
            writeln!(out, "    cswap::<S, {n}>(v, {}, {});", c.low(), c.high()).unwrap();
        }
    } else {
        for c in net.comparators() {
            writeln!(out, "    cswap::<S, {n}>(v, {}, {});", c.low(), c.high()).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Emits a whole compilation unit for one family: a sorter per size (plus
/// any smaller sizes the recursive variant calls) and a `sort_dispatch`
/// entry point selecting the sorter by item count.
pub fn emit_family_unit(family: Family, sizes: &[usize]) -> Result<String, NetworkError> {
    let mut needed: BTreeSet<usize> = BTreeSet::new();
    for &n in sizes {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m < 2 || !needed.insert(m) {
                continue;
            }
            if family == Family::BoseNelsonRecursive {
                let (a, b) = bose_nelson_split(m);
                stack.extend([a, b]);
            }
        }
    }

    let mut out = String::new();
    writeln!(out, "// Generated sorters for the {} family. Do not edit.", family.label()).unwrap();
    for &n in &needed {
        out.push('\n');
        out.push_str(&emit_unrolled_source(&network_for(family, n)?, Dialect::Source));
    }

    let mut dispatched: Vec<usize> = sizes.iter().copied().filter(|&n| n >= 2).collect();
    dispatched.sort_unstable();
    dispatched.dedup();
    writeln!(out).unwrap();
    writeln!(out, "/// Sorts the first `n` items with the {} sorter for `n`.", family.label()).unwrap();
    writeln!(out, "/// Returns false when no sorter was generated for `n`.").unwrap();
    writeln!(out, "#[allow(dead_code)]").unwrap();
    writeln!(out, "pub fn sort_dispatch<S: ConditionalSwap>(v: &mut [SortItem], n: usize) -> bool {{").unwrap();
    writeln!(out, "    match n {{").unwrap();
    for n in dispatched {
        writeln!(out, "        {n} => {}::<S>(prefix::<{n}>(v)),", function_name(family, n)).unwrap();
    }
    writeln!(out, "        _ => return false,").unwrap();
    writeln!(out, "    }}").unwrap();
    writeln!(out, "    true").unwrap();
    writeln!(out, "}}").unwrap();
    Ok(out)
}
