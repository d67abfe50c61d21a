//! Bitmask subsets of {1, ..., n}.

/// Subset of {1, ..., n} as a bitmask; bit i-1 set means i is in the subset.
pub type Mask = u32;

/// Elements of the mask in increasing order (1-based).
pub fn mask_elems(mask: Mask) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn mask_from_elems(elems: &[usize]) -> Mask {
    let mut m = 0;
    for &e in elems {
        assert!(e >= 1 && e <= 32);
        m |= 1 << (e - 1);
    }
    m
}

pub fn mask_complement(mask: Mask, n: usize) -> Mask {
    !mask & ((1u32 << n) - 1)
}

/// All k-element subsets of {1, ..., n}, in increasing mask order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Mask> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// All subsets of {1, ..., n}, in increasing mask order.
pub fn all_subsets(n: usize) -> Vec<Mask> {
    (0..1u32 << n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_complement() {
        let m = mask_from_elems(&[1, 3]);
        assert_eq!(m, 0b101);
        assert_eq!(mask_elems(m), vec![1, 3]);
        assert_eq!(mask_complement(m, 4), 0b1010);
        assert_eq!(mask_elems(mask_complement(m, 4)), vec![2, 4]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(3, 0), vec![0]);
        assert_eq!(all_subsets(2), vec![0b00, 0b01, 0b10, 0b11]);
    }
}
