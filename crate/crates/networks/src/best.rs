//! Best known networks for 2 to 16 channels, embedded from
//! `data/networks/best_NN.txt`. Each file names its source.

use crate::{parse_table, Family, Network, NetworkError};

pub const BEST_MIN: usize = 2;
pub const BEST_MAX: usize = 16;

const TABLES: [&str; BEST_MAX - BEST_MIN + 1] = [
    include_str!("../data/networks/best_02.txt"),
    include_str!("../data/networks/best_03.txt"),
    include_str!("../data/networks/best_04.txt"),
    include_str!("../data/networks/best_05.txt"),
    include_str!("../data/networks/best_06.txt"),
    include_str!("../data/networks/best_07.txt"),
    include_str!("../data/networks/best_08.txt"),
    include_str!("../data/networks/best_09.txt"),
    include_str!("../data/networks/best_10.txt"),
    include_str!("../data/networks/best_11.txt"),
    include_str!("../data/networks/best_12.txt"),
    include_str!("../data/networks/best_13.txt"),
    include_str!("../data/networks/best_14.txt"),
    include_str!("../data/networks/best_15.txt"),
    include_str!("../data/networks/best_16.txt"),
];

pub fn best_network(n: usize) -> Result<Network, NetworkError> {
    if !(BEST_MIN..=BEST_MAX).contains(&n) {
        return Err(NetworkError::UnsupportedSize { n, min: BEST_MIN, max: BEST_MAX });
    }
    let net = parse_table(TABLES[n - BEST_MIN], Family::Best).expect("embedded network table is well formed");
    assert_eq!(net.channels(), n, "best_{n:02}.txt declares the wrong channel count");
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{depth, Comparator};

    #[test]
    fn ten_channels_size_and_depth() {
        let net = best_network(10).unwrap();
        assert_eq!(net.size(), 29);
        assert_eq!(depth(&net), 9);
    }

    #[test]
    fn two_channels() {
        assert_eq!(best_network(2).unwrap().comparators(), &[Comparator::new(0, 1)]);
    }

    #[test]
    fn out_of_range() {
        for n in [0, 1, 17, 32] {
            assert_eq!(best_network(n), Err(NetworkError::UnsupportedSize { n, min: 2, max: 16 }));
        }
    }

    #[test]
    fn published_sizes() {
        let sizes: Vec<usize> = (2..=16).map(|n| best_network(n).unwrap().size()).collect();
        assert_eq!(sizes, [1, 3, 5, 9, 12, 16, 19, 25, 29, 35, 39, 45, 51, 56, 60]);
    }
}
