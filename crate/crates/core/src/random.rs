//! Random generators for property tests, benchmarks and experiments.

use rand::Rng;

use crate::attr::{Attribute, AttributeSet};
use crate::fd::{Fd, FdSet};
use crate::reduction::HittingSetInstance;

/// `A, B, …, Z` for widths up to 26, `A1, A2, …` beyond.
pub fn letters(width: usize) -> Vec<Attribute> {
    (0..width)
        .map(|i| {
            let name = if width <= 26 {
                char::from(b'A' + i as u8).to_string()
            } else {
                format!("A{}", i + 1)
            };
            Attribute::new(&name).expect("identifier")
        })
        .collect()
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, pool: &[Attribute], max: usize) -> AttributeSet {
    let size = rng.random_range(0..=max.min(pool.len()));
    let mut out = AttributeSet::new();
    while out.len() < size {
        out.insert(pool[rng.random_range(0..pool.len())].clone());
    }
    out
}

/// Up to `max_fds` fds over `letters(width)`, each side of size at most
/// `max_side`. Left sides are non-empty; right sides may be empty.
pub fn random_fdset<R: Rng + ?Sized>(rng: &mut R, width: usize, max_fds: usize, max_side: usize) -> FdSet {
    let pool = letters(width);
    let mut sigma = FdSet::new(pool.iter().collect());
    for _ in 0..rng.random_range(0..=max_fds) {
        let mut lhs = random_subset(rng, &pool, max_side);
        if lhs.is_empty() {
            lhs.insert(pool[rng.random_range(0..width)].clone());
        }
        let rhs = random_subset(rng, &pool, max_side);
        sigma.insert(Fd::new(lhs, rhs)).expect("within universe");
    }
    sigma
}

/// Ground set `p1 … pn` with `m` random non-empty subsets of size at most
/// `max_size`.
pub fn random_hitting_set<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, max_size: usize) -> HittingSetInstance {
    let ground: Vec<Attribute> = (1..=n)
        .map(|i| Attribute::new(&format!("p{i}")).expect("identifier"))
        .collect();
    let subsets = (0..m)
        .map(|_| {
            let mut b = random_subset(rng, &ground, max_size);
            if b.is_empty() {
                b.insert(ground[rng.random_range(0..n)].clone());
            }
            b
        })
        .collect();
    HittingSetInstance::new(ground, subsets).expect("valid instance")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn letter_names() {
        assert_eq!(
            letters(3).iter().map(Attribute::name).collect::<Vec<_>>(),
            ["A", "B", "C"]
        );
        assert_eq!(letters(30)[29].name(), "A30");
    }

    #[test]
    fn generated_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let sigma = random_fdset(&mut rng, 5, 6, 3);
            assert!(sigma.len() <= 6);
            assert!(sigma.iter().all(|fd| !fd.lhs().is_empty() && fd.lhs().len() <= 3));
            let inst = random_hitting_set(&mut rng, 6, 4, 3);
            assert_eq!(inst.subsets().len(), 4);
        }
    }
}
