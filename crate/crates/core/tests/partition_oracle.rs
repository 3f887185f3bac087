mod common;

use common::{brute_sigma, build, partitions};

#[test]
fn partition_counts_are_bell_numbers() {
    for (n, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (7, 877)] {
        let mut count = 0;
        partitions(n, |_| count += 1);
        assert_eq!(count, bell, "n = {n}");
    }
}

#[test]
fn brute_oracle_on_hand_examples() {
    assert_eq!(brute_sigma(&build(&[3, 5], &[None, Some(0)]), None), Some(8));
    assert_eq!(brute_sigma(&build(&[3, 5], &[None, Some(0)]), Some(1)), None);
    assert_eq!(brute_sigma(&build(&[5, 3, 7], &[None, Some(0), Some(0)]), None), Some(12));
    assert_eq!(brute_sigma(&build(&[5, 1, 5], &[None, Some(0), Some(1)]), None), Some(6));
    assert_eq!(brute_sigma(&build(&[], &[]), None), Some(0));
}
