//! Torus-fixed flag models: flags as slot orderings, Grassmannian spaces as
//! slot subsets, orthogonal complements as set complements.

use super::quiver::Quiver;
use crate::polyalg::Perm;

/// A full flag on slots 1..n: `order.apply(q)` is the slot spanning step q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagModel {
    pub order: Perm,
}

impl FlagModel {
    pub fn standard(n: usize) -> Self {
        FlagModel { order: Perm::identity(n) }
    }

    pub fn from_order(order: Perm) -> Self {
        FlagModel { order }
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    /// Position of a slot in this flag.
    pub fn pos(&self, slot: usize) -> usize {
        self.order.inverse().apply(slot)
    }

    /// Relative position: rel(self, other)(q) is the self-position of the
    /// slot at other-position q.
    pub fn rel(&self, other: &FlagModel) -> Perm {
        self.order.inverse().compose(&other.order)
    }

    /// Slots of `w_set` ordered by this flag, followed by the rest in order;
    /// the flag through W closest to this one.
    pub fn v_w(&self, w_set: &[usize]) -> FlagModel {
        let (inside, outside) = self.split(w_set);
        let mut images = inside;
        images.extend(outside);
        FlagModel { order: Perm::from_one_line(&images) }
    }

    /// Slots of `w_set` in reversed order, followed by the rest: the
    /// orthogonal twist of `v_w`, with rel(self, result) = x w_{0,k}.
    pub fn v_perp_w(&self, w_set: &[usize]) -> FlagModel {
        let (mut inside, outside) = self.split(w_set);
        inside.reverse();
        let mut images = inside;
        images.extend(outside);
        FlagModel { order: Perm::from_one_line(&images) }
    }

    fn split(&self, w_set: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for q in 1..=n {
            let slot = self.order.apply(q);
            if w_set.contains(&slot) {
                inside.push(slot);
            } else {
                outside.push(slot);
            }
        }
        (inside, outside)
    }

    /// The flag with rel(self, result) = w.
    pub fn compose_rel(&self, w: &Perm) -> FlagModel {
        FlagModel { order: self.order.compose(w) }
    }
}

/// Fibre dimension of the representation bundle over a flag: for each arrow
/// i -> j, the matrix entries (target slot, source slot) not forced to zero
/// by preservation of the flag; with slot colours fixed, an entry survives
/// exactly when the target slot comes no later than the source slot.
pub fn dim_x(quiver: &Quiver, colours: &[usize], flag: &FlagModel) -> usize {
    count_entries(quiver, colours, |sp, sq| flag.pos(sp) <= flag.pos(sq))
}

/// Fibre dimension of the intersection of two preservation conditions.
pub fn dim_x_intersect(
    quiver: &Quiver,
    colours: &[usize],
    f1: &FlagModel,
    f2: &FlagModel,
) -> usize {
    count_entries(quiver, colours, |sp, sq| {
        f1.pos(sp) <= f1.pos(sq) && f2.pos(sp) <= f2.pos(sq)
    })
}

fn count_entries(
    quiver: &Quiver,
    colours: &[usize],
    allowed: impl Fn(usize, usize) -> bool,
) -> usize {
    let n = colours.len();
    let mut dim = 0;
    for &(i, j) in quiver.arrows() {
        for sq in 1..=n {
            if colours[sq - 1] != i {
                continue;
            }
            for sp in 1..=n {
                if colours[sp - 1] == j && allowed(sp, sq) {
                    dim += 1;
                }
            }
        }
    }
    dim
}

/// Factor rel(V, V^{perp W}) = x1 x2 through the target-colour subflag for a
/// one-arrow quiver: x1 = rel(V, V^{W_j}), x2 = rel(V^{W_j}, V^{perp W}).
pub fn relpos_factor(
    quiver: &Quiver,
    colours: &[usize],
    flag: &FlagModel,
    w_set: &[usize],
) -> (Perm, Perm) {
    assert_eq!(quiver.arrows().len(), 1, "needs exactly one arrow");
    let (_, j) = quiver.arrows()[0];
    let w_j: Vec<usize> = w_set.iter().cloned().filter(|&s| colours[s - 1] == j).collect();
    let vwj = flag.v_w(&w_j);
    let vperp = flag.v_perp_w(w_set);
    (flag.rel(&vwj), vwj.rel(&vperp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivercomb::quiver::{one_vertex, single_arrow, single_arrow_reversed};

    #[test]
    fn rel_conventions() {
        let n = 4;
        let v = FlagModel::standard(n);
        let w = Perm::s(2, n).compose(&Perm::s(1, n));
        let v1 = v.compose_rel(&w);
        assert_eq!(v.rel(&v1), w);
        assert_eq!(v1.rel(&v), w.inverse());
        assert_eq!(v.rel(&v), Perm::identity(n));
    }

    #[test]
    fn v_w_and_perp() {
        let v = FlagModel::standard(5);
        // W at positions x([1;3]) for the minimal representative x = [2,3,4,1,5].
        let x = Perm::from_one_line(&vec![2, 3, 4, 1, 5]);
        let w_set = [2, 3, 4];
        assert_eq!(v.rel(&v.v_w(&w_set)), x);
        let xw0k = x.compose(&Perm::longest_k(3, 5));
        assert_eq!(v.rel(&v.v_perp_w(&w_set)), xw0k);
    }

    #[test]
    fn worked_factorization() {
        // Dimension vector 2i + 3j, W of colour content i + 2j: slots 3 and
        // one of 1, 5 carry colour i; slots 2, 4 carry colour j.
        let quiver = single_arrow();
        let colours = [0, 1, 0, 1, 1];
        let v = FlagModel::standard(5);
        let w_set = [2, 3, 4];
        let (x1, x2) = relpos_factor(&quiver, &colours, &v, &w_set);
        let expect = Perm::from_one_line(&vec![2, 4, 1, 3, 5]);
        assert_eq!(x1, expect);
        assert_eq!(x2, expect);
        assert_eq!(x1.len() + x2.len(), x1.compose(&x2).len());
        let x = Perm::from_one_line(&vec![2, 3, 4, 1, 5]);
        assert_eq!(x1.compose(&x2), x.compose(&Perm::longest_k(3, 5)));
    }

    #[test]
    fn dim_x_examples() {
        let q = single_arrow();
        // Top colouring (i, j): the only matrix entry is forbidden.
        assert_eq!(dim_x(&q, &[0, 1], &FlagModel::standard(2)), 0);
        // Top colouring (j, i): the entry survives.
        assert_eq!(dim_x(&q, &[1, 0], &FlagModel::standard(2)), 1);
        assert_eq!(dim_x(&one_vertex(), &[0, 0], &FlagModel::standard(2)), 0);
        let rev = single_arrow_reversed();
        assert_eq!(dim_x(&rev, &[0, 1], &FlagModel::standard(2)), 1);
    }
}
