mod common;

use common::gen::{pos_real, small_exponent};
use common::*;
use proptest::prelude::*;
use semiscale::exactla::{PosReal, REL_TOL};
use semiscale::posspace::{PowerSpace, RationalMap};

fn pr(x: f64) -> PosReal {
    PosReal::new(x).unwrap()
}

proptest! {
    #[test]
    fn powers_compose(p in small_exponent(), q in small_exponent(), c in pos_real()) {
        let u = PowerSpace::atomic("U").element(pr(c));
        let (rp, rq) = (p.to_rational(), q.to_rational());
        let lhs = u.power(&rp).iterate_power(&rq);
        let rhs = u.power(&(&rp * &rq));
        prop_assert_eq!(lhs.space(), rhs.space());
        prop_assert!(lhs.approx_eq(&rhs, REL_TOL));
        // Outside the normal f64 range the coefficient saturates; compare only inside it.
        prop_assume!(((p * q).n as f64 / (p * q).d as f64 * c.ln()).abs() < 700.0);
        prop_assert!(close(lhs.coeff().get(), c.powf((p * q).n as f64 / (p * q).d as f64), 1e-9));
    }

    #[test]
    fn products_add_exponents(p in small_exponent(), q in small_exponent(), a in pos_real(), b in pos_real()) {
        let base = PowerSpace::atomic("U");
        let (rp, rq) = (p.to_rational(), q.to_rational());
        let x = base.element(pr(a)).power(&rp);
        let y = base.element(pr(b)).power(&rp);
        let prod = x.combine(&y).unwrap();
        prop_assert_eq!(prod.space().exponent(), &(&rp + &rp));
        let together = base.element(pr(a * b)).power(&rp);
        prop_assert!(prod.coeff().approx_eq(together.coeff(), REL_TOL));
        let z = base.element(pr(b)).power(&rq);
        let w = x.combine(&z).unwrap();
        prop_assert_eq!(w.space(), &base.pow(&(&rp + &rq)));
    }

    #[test]
    fn scalars_pull_out_of_powers(q in small_exponent(), r in pos_real(), c in pos_real()) {
        let u = PowerSpace::atomic("U").element(pr(c));
        let rq = q.to_rational();
        let lhs = u.smul(pr(r)).power(&rq);
        let rhs = u.power(&rq).smul(pr(r).powq(&rq));
        prop_assert!(lhs.approx_eq(&rhs, REL_TOL));
    }

    #[test]
    fn inverse_pairs_to_one(c in pos_real(), q in small_exponent()) {
        let u = PowerSpace::atomic("U").element(pr(c)).power(&q.to_rational());
        prop_assert!(u.inverse().pair(&u).unwrap().approx_eq(PosReal::ONE, REL_TOL));
        prop_assert_eq!(u.space().dual().dual(), u.space().clone());
    }

    #[test]
    fn rational_maps_compose_and_invert(p in small_exponent(), q in small_exponent(), a in pos_real(), c in pos_real()) {
        let u = PowerSpace::atomic("U");
        let (rp, rq) = (p.to_rational(), q.to_rational());
        let f = RationalMap::power_map(&u, &rp);
        let g = RationalMap::power_map(f.target(), &rq);
        let x = u.element(pr(c));
        let gf = g.compose(&f).unwrap();
        prop_assert_eq!(gf.degree(), &(&rp * &rq));
        prop_assert!(gf.apply(&x).unwrap().approx_eq(&g.apply(&f.apply(&x).unwrap()).unwrap(), REL_TOL));
        let h = RationalMap::new(rp.clone(), u.clone(), u.pow(&rq), pr(a));
        match h.inverse() {
            Ok(inv) => {
                prop_assert!(!rp.is_zero());
                let back = inv.apply(&h.apply(&x).unwrap()).unwrap();
                prop_assert!(back.approx_eq(&x, 1e-9));
            }
            Err(_) => prop_assert!(rp.is_zero()),
        }
    }
}
