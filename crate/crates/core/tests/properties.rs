use proptest::prelude::*;

use wonderful_core::linalg::{q, Q};
use wonderful_core::orbits::levi_data;
use wonderful_core::toricfan::{build_fan, locate, Placement};
use wonderful_core::weyl::{enumerate, DEFAULT_CAP};
use wonderful_core::{CartanType, Poly, RootSystem, Subset};

const TYPES: [&str; 9] = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA2", "D4"];

fn rs_of(t: &str) -> RootSystem {
    RootSystem::new(&CartanType::parse(t).unwrap())
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(0u64..5, 0..8).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn subset_complement_is_involutive(bits in 0u64..256) {
        let s = Subset::from_bits(bits);
        prop_assert_eq!(s.complement(8).complement(8), s);
        prop_assert_eq!(s.len() + s.complement(8).len(), 8);
        prop_assert!(s.is_subset_of(s.union(Subset::from_bits(bits.rotate_left(3) & 0xff))));
    }

    #[test]
    fn poly_product_evaluates_multiplicatively(a in poly(), b in poly()) {
        prop_assert_eq!(a.mul(&b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.substitute_power(2).eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn orbit_dimensions_add_up(t in 0..TYPES.len(), bits in 0u64..16) {
        let rs = rs_of(TYPES[t]);
        let s = Subset::from_bits(bits & ((1 << rs.rank()) - 1));
        let d = levi_data(&rs, s).unwrap();
        prop_assert_eq!(d.dim_orbit + s.len(), rs.dim_g());
        prop_assert_eq!(d.dim_orbit + d.dim_stabilizer, 2 * rs.dim_g());
    }

    #[test]
    fn weyl_lengths_behave(t in 0..TYPES.len(), a in any::<proptest::sample::Index>(), b in any::<proptest::sample::Index>()) {
        let rs = rs_of(TYPES[t]);
        let w = enumerate(&rs, DEFAULT_CAP).unwrap();
        let (x, y) = (a.index(w.order()), b.index(w.order()));
        let xy = w.compose(x, y);
        let len = |k: usize| w.element(k).length();
        prop_assert_eq!(len(w.inverse(x)), len(x));
        prop_assert!(len(xy) <= len(x) + len(y));
        prop_assert_eq!((len(xy) + len(x) + len(y)) % 2, 0);
        prop_assert_eq!(len(x) + len(w.compose(w.longest_index(), x)), rs.positive_count());
        let e = w.element(x);
        for u in rs.roots() {
            for v in rs.positive_roots() {
                prop_assert_eq!(
                    rs.inner_product(&e.act_on_root(&rs, u), &e.act_on_root(&rs, v)),
                    rs.inner_product(u, v)
                );
            }
        }
    }

    #[test]
    fn generic_points_lie_in_one_chamber(t in 0..TYPES.len(), coords in proptest::collection::vec(-1000i64..1000, 4)) {
        let rs = rs_of(TYPES[t]);
        let w = enumerate(&rs, DEFAULT_CAP).unwrap();
        let fan = build_fan(&rs, &w).unwrap();
        // root coefficients are at most 3, so balanced base-7 offsets avoid every wall
        let point: Vec<Q> = (0..rs.rank())
            .map(|i| q(coords[i]) + Q::new(1, 7i128.pow(i as u32 + 1)))
            .collect();
        let placements = locate(&fan, &point);
        let interior = placements.iter().filter(|p| **p == Placement::Interior).count();
        let boundary = placements.iter().filter(|p| **p == Placement::Boundary).count();
        prop_assert_eq!((interior, boundary), (1, 0));
    }
}
