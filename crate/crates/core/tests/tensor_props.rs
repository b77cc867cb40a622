mod common;

use common::gen::{frac, matrix, nonzero_orthant, semilinear_matrix};
use common::*;
use proptest::collection::vec;
use proptest::prelude::*;
use semiscale::exactla::nullspace;
use semiscale::semivec::{SemiLinearMap, SemiSpace, SemiVector};
use semiscale::tensor::{
    extend_map, outer, rank_one_terms, semi_tensor, ExtensionSpace, SemiTensorSpace, SemiToVecMap, SesquiSpace,
    VecSpace, Vector,
};

fn unit(n: usize, i: usize) -> Vec<Frac> {
    (0..n).map(|k| if k == i { Frac::ONE } else { Frac::ZERO }).collect()
}

fn vecv(space: &VecSpace, v: &[Frac]) -> Vector {
    Vector::new(space, to_rationals(v)).unwrap()
}

fn semi(space: &SemiSpace, v: &[Frac]) -> SemiVector {
    SemiVector::from_dense(space, &to_rationals(v)).unwrap()
}

fn dims3() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..=4, 1usize..=4, 1usize..=4)
}

proptest! {
    #[test]
    fn sesqui_with_semi_free_factor_has_dimension_mn((m, n, _) in dims3()) {
        let (v, u) = (VecSpace::new("V", m), SemiSpace::new("U", n));
        let s = SesquiSpace::with_semi(&v, &u);
        prop_assert_eq!(s.dim(), m * n);
        // The pure tensors of basis elements span a space of that dimension.
        let rows: Mat = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let t = s.sesqui(&vecv(&v, &unit(m, i)), &semi(&u, &unit(n, j))).unwrap();
                from_rationals(t.coords())
            })
            .collect();
        prop_assert_eq!(oracle_rank(&rows), m * n);
    }

    #[test]
    fn sesqui_with_vector_factor_has_dimension_2mk((m, _, k) in dims3()) {
        let (v, u) = (VecSpace::new("V", m), VecSpace::new("W", k));
        let s = SesquiSpace::with_vector(&v, &u);
        prop_assert_eq!(s.dim(), 2 * m * k);
        let mut rows: Mat = Vec::new();
        for i in 0..m {
            for j in 0..k {
                for sign in [Frac::ONE, -Frac::ONE] {
                    let w: Vec<Frac> = unit(k, j).into_iter().map(|x| x * sign).collect();
                    let t = s.sesqui_vv(&vecv(&v, &unit(m, i)), &vecv(&u, &w)).unwrap();
                    rows.push(from_rationals(t.coords()));
                }
            }
        }
        prop_assert_eq!(oracle_rank(&rows), 2 * m * k);
    }

    #[test]
    fn projection_rank_and_kernel((m, _, k) in dims3(), a in vec(frac(), 4), b in vec(frac(), 4)) {
        let (v, u) = (VecSpace::new("V", m), VecSpace::new("W", k));
        let s = SesquiSpace::with_vector(&v, &u);
        let p = s.projection_matrix().unwrap();
        let pm: Mat = (0..p.rows()).map(|i| from_rationals(p.row(i))).collect();
        prop_assert_eq!(oracle_rank(&pm), m * k);
        prop_assert_eq!(p.rank(), m * k);
        prop_assert_eq!(nullspace(&p).len(), m * k);

        let (x, y) = (vecv(&v, &a[..m]), vecv(&u, &b[..k]));
        let t = s.sesqui_vv(&x, &y).unwrap();
        prop_assert_eq!(t.project().unwrap(), outer(&x, &y));
        // v ⊗̀ u + v ⊗̀ (-u) lies in the kernel.
        let pair = t.add(&s.sesqui_vv(&x, &y.neg()).unwrap()).unwrap();
        prop_assert!(pair.project().unwrap().is_zero());
    }

    #[test]
    fn left_and_right_products_agree((m, n, _) in dims3(), a in vec(frac(), 4), b in nonzero_orthant(4)) {
        let (v, u) = (VecSpace::new("V", m), SemiSpace::new("U", n));
        prop_assume!(b[..n].iter().any(|x| !x.is_zero()));
        let s = SesquiSpace::with_semi(&v, &u);
        let t = s.sesqui(&vecv(&v, &a[..m]), &semi(&u, &b[..n])).unwrap();
        prop_assert_eq!(t.to_left().unwrap().to_right(), t);
    }

    #[test]
    fn extension_has_dimension_sdim_and_decomposes(n in 1usize..=4, t in vec(frac(), 4)) {
        let u = SemiSpace::new("U", n);
        let ext = ExtensionSpace::new(&u);
        prop_assert_eq!(ext.dim(), n);
        let t = vecv(ext.space(), &t[..n]);
        let (plus, minus) = ext.decompose(&t).unwrap();
        let embed = |p: Option<SemiVector>| p.map_or_else(|| ext.space().zero(), |p| ext.embed(&p).unwrap());
        let (plus, minus) = (embed(plus), embed(minus));
        prop_assert_eq!(plus.sub(&minus).unwrap(), t);
        for (a, b) in plus.coords().iter().zip(minus.coords()) {
            prop_assert!(a.is_zero() || b.is_zero());
        }
    }

    #[test]
    fn extension_factorises_maps(
        ((n, k), mat) in (1usize..=4, 1usize..=4).prop_flat_map(|(n, k)| (Just((n, k)), matrix(k, n))),
        u in nonzero_orthant(4),
    ) {
        prop_assume!(u[..n].iter().any(|x| !x.is_zero()));
        let (src, dst) = (SemiSpace::new("U", n), VecSpace::new("V", k));
        let f = SemiToVecMap::new(&src, &dst, to_ratmatrix(&mat)).unwrap();
        let ext = ExtensionSpace::new(&src);
        let x = semi(&src, &u[..n]);
        let fbar = extend_map(&f);
        prop_assert_eq!(fbar.apply(&ext.embed(&x).unwrap()).unwrap(), f.apply(&x).unwrap());
        prop_assert_eq!(from_rationals(f.apply(&x).unwrap().coords()), mat_vec(&mat, &u[..n]));
    }

    #[test]
    fn semi_tensor_dimensions_multiply(ds in vec(1usize..=3, 0..4)) {
        let factors: Vec<SemiSpace> = ds.iter().enumerate().map(|(i, d)| SemiSpace::new(&format!("U{i}"), *d)).collect();
        let t = SemiTensorSpace::new(&factors);
        prop_assert_eq!(t.sdim(), ds.iter().product::<usize>());
    }

    #[test]
    fn semi_tensor_is_bilinear(a in nonzero_orthant(3), b in nonzero_orthant(3), c in nonzero_orthant(2)) {
        let (u, v) = (SemiSpace::new("U", 3), SemiSpace::new("V", 2));
        let (x, y, z) = (semi(&u, &a), semi(&u, &b), semi(&v, &c));
        let lhs = semi_tensor(&x.add(&y).unwrap(), &z).unwrap();
        let rhs = semi_tensor(&x, &z).unwrap().add(&semi_tensor(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn maps_are_sums_of_rank_one_terms(
        ((m, n), mat) in (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| (Just((m, n)), semilinear_matrix(n, m))),
        u in nonzero_orthant(4),
    ) {
        prop_assume!(u[..m].iter().any(|x| !x.is_zero()));
        let (src, dst) = (SemiSpace::new("U", m), SemiSpace::new("V", n));
        let f = SemiLinearMap::new(&src, &dst, to_ratmatrix(&mat)).unwrap();
        let x = semi(&src, &u[..m]);
        let mut acc: Option<SemiVector> = None;
        for (alpha, w) in rank_one_terms(&f).unwrap() {
            let r = alpha.pair(&x).unwrap();
            if r.is_zero() {
                continue;
            }
            let term = w.smul(&r).unwrap();
            acc = Some(match acc {
                Some(a) => a.add(&term).unwrap(),
                None => term,
            });
        }
        prop_assert_eq!(acc.unwrap(), f.apply(&x).unwrap());
    }
}
