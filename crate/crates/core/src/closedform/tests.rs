use alloc::string::ToString;
use alloc::vec;

use super::*;
use crate::qseries::Monomial;

fn q(d: u64) -> Grading {
    Grading::q(d)
}

fn show(cf: &ClosedForm, g: Grading) -> String {
    build(cf, g).unwrap().to_string()
}

#[test]
fn examples() {
    assert_eq!(
        show(&ClosedForm::new(FormId::LhpQ, Params::n(2)), q(4)),
        "1 + q + q^2 + 2*q^3 + 2*q^4"
    );
    let ones = Subst::identity().with(Var::U, Monomial::one()).with(Var::V, Monomial::one());
    let cf = ClosedForm::new(FormId::TlhUvq, Params::nk(2, 1)).with_args(ones);
    assert_eq!(show(&cf, q(4)), "1 + q + q^2 + q^3 + q^4");
    let cf = ClosedForm::new(FormId::TlhXyBar, Params::nk(2, 1));
    assert_eq!(show(&cf, Grading::xy(3)), "x + x^2 + x^3");
    let cf = ClosedForm::new(FormId::TalhXy, Params::nk(2, 2));
    assert_eq!(show(&cf, Grading::xy(2)), "1 + x + x*y + x^2");
    let cf = ClosedForm::new(FormId::LMu, Params::n(2).with_mu(vec![2, 1]));
    assert_eq!(show(&cf, q(20)), "q^4 + q^5");
}

#[test]
fn domain_errors() {
    let cf = ClosedForm::new(FormId::TalhUvq, Params::nk(1, 2));
    assert!(matches!(build(&cf, q(5)), Err(Error::Domain(_))));
    let cf = ClosedForm::new(FormId::LhpQ, Params::default());
    assert!(build(&cf, q(5)).is_err());
    // y -> x^-1 * y has grade zero under x-only grading: 1/(1 - x y^0 ...)
    let g = Grading::new(&[(Var::X, 1)], 4);
    let cf = ClosedForm::new(FormId::LhpXy, Params::n(2)).arg(Var::X, Var::Y.pow(1));
    assert!(build(&cf, g).is_err());
}

#[test]
fn text_round_trip() {
    for s in [
        "tlh_uvq(n=4,k=2)",
        "tlh_xy_bar(n=3,k=2; x->x^2*y, y->x^-1)",
        "l_mu(n=2,mu=(2,1))",
        "r_exact_t(n=5,t=1,j=2,l=inf)",
        "fin3_rhs(k=2; q->q^2)",
    ] {
        let cf = parse_closed_form(s).unwrap();
        assert_eq!(cf.to_string(), s);
    }
    assert!(parse_closed_form("nope(n=1)").is_err());
    assert!(parse_closed_form("lhp_q(n=x)").is_err());
}

#[test]
fn specializations_agree() {
    let ones = Subst::identity().with(Var::U, Monomial::one()).with(Var::V, Monomial::one());
    for n in 0..=4 {
        let a = build(&ClosedForm::new(FormId::LhpUvq, Params::n(n)).with_args(ones.clone()), q(12)).unwrap();
        let b = build(&ClosedForm::new(FormId::LhpQ, Params::n(n)), q(12)).unwrap();
        assert_eq!(a, b);
        let g = Grading::new(&[(Var::Q, 1)], 10);
        let a = build(&ClosedForm::new(FormId::TlhUvq, Params::nk(n, n)), g).unwrap();
        let b = build(&ClosedForm::new(FormId::LhpUvq, Params::n(n)), g).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn mutation_changes_low_order() {
    let cf = ClosedForm::new(FormId::TlhUvq, Params::nk(3, 2));
    let opts = BuildOptions {
        mutation: Some(Mutation::DropTriangularPrefactor),
        ..BuildOptions::default()
    };
    let a = build(&cf, q(3)).unwrap();
    let b = build_with(&cf, q(3), &opts).unwrap();
    assert_ne!(a, b);
}

#[test]
fn fin3_lengths_differ() {
    let cf = ClosedForm::new(FormId::Fin3Rhs, Params::k(1));
    let unb = BuildOptions {
        fin3_length: Fin3Length::Unbounded,
        ..BuildOptions::default()
    };
    assert_eq!(show(&cf, q(3)), "z*q + z^2*q^2 + z*q^3 + z^3*q^3");
    assert_ne!(build(&cf, q(6)).unwrap(), build_with(&cf, q(6), &unb).unwrap());
}
