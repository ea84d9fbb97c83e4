use crate::{Family, LeveledNetwork, Network};

/// Greedy earliest-level schedule. Each comparator goes into the first level
/// after the last level that touched either of its channels; comparators
/// that land in the same level keep their original relative order.
pub fn compute_levels(net: &Network) -> LeveledNetwork {
    let n = net.channels();
    let mut next_free = vec![0usize; n];
    let mut levels: Vec<Vec<_>> = Vec::new();
    for &c in net.comparators() {
        let level = next_free[c.low()].max(next_free[c.high()]);
        if level == levels.len() {
            levels.push(Vec::new());
        }
        levels[level].push(c);
        next_free[c.low()] = level + 1;
        next_free[c.high()] = level + 1;
    }
    LeveledNetwork { n, levels }
}

/// Number of levels in the greedy schedule.
pub fn depth(net: &Network) -> usize {
    compute_levels(net).depth()
}

/// Reorders `net` level by level, tagged [`Family::BoseNelsonParallel`].
pub fn reorder_parallelism(net: &Network) -> Network {
    let leveled = compute_levels(net);
    Network::from_parts(net.channels(), leveled.flatten(), Family::BoseNelsonParallel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Comparator;

    fn net(n: usize, pairs: &[(usize, usize)]) -> Network {
        Network::new(n, pairs.iter().map(|&p| Comparator::from(p)).collect(), Family::Best).unwrap()
    }

    #[test]
    fn disjoint_comparators_share_a_level() {
        let leveled = compute_levels(&net(4, &[(0, 1), (2, 3), (0, 2)]));
        let expected = vec![
            vec![Comparator::new(0, 1), Comparator::new(2, 3)],
            vec![Comparator::new(0, 2)],
        ];
        assert_eq!(leveled.levels(), expected.as_slice());
    }

    #[test]
    fn chained_comparators_need_one_level_each() {
        assert_eq!(depth(&net(3, &[(0, 1), (1, 2), (0, 1)])), 3);
    }

    #[test]
    fn trivial_depths() {
        assert_eq!(depth(&net(2, &[])), 0);
        assert_eq!(depth(&net(2, &[(0, 1)])), 1);
    }

    #[test]
    fn later_comparator_does_not_jump_ahead_of_channel_predecessor() {
        // (2,3) is free at level 0, (1,2) must wait for it.
        let leveled = compute_levels(&net(4, &[(0, 1), (2, 3), (1, 2), (0, 3)]));
        assert_eq!(leveled.depth(), 2);
        assert_eq!(leveled.levels()[1], vec![Comparator::new(1, 2), Comparator::new(0, 3)]);
    }
}
