//! Exact values for small inputs through the public API.

mod common;

use std::collections::BTreeSet;

use common::s;
use powmon::cancellativity::{
    are_relatively_prime, gcd_criterion, relcanc_witness, verify_separated_sum, RelCancWitness,
};
use powmon::constructors::{
    build_family, compose_sum, for_elasticity, from_generators, interval_three, shift_structure,
    verify_family, verify_shift,
};
use powmon::fixtures::interval_seed;
use powmon::{
    fact_gcd, Error, Factorization, Factorizer, FinSet, LengthSet, Precondition, Rational,
};

fn word(ts: &[&str]) -> Factorization {
    Factorization::new(ts.iter().map(|t| s(t)).collect())
}

fn sets(ts: &[&str]) -> BTreeSet<FinSet> {
    ts.iter().map(|t| s(t)).collect()
}

fn lengths(v: &[usize]) -> LengthSet {
    v.iter().copied().collect()
}

#[test]
fn finset_values() {
    assert_eq!(s("{1,0,1}"), s("{0,1}"));
    assert_eq!(FinSet::parse("{1,2}"), Err(Error::MissingZero));
    assert!(FinSet::parse("{0,-1}").is_err());
    assert!(FinSet::parse("{0,1.5}").is_err());
    assert!(FinSet::parse("{}").is_err());
    assert_eq!(
        FinSet::parse("{0,18446744073709551616}"),
        Err(Error::Overflow)
    );
    assert_eq!(
        s("{0,1,4,5}").sumset(&s("{0,3}")).unwrap(),
        s("{0,1,3,4,5,7,8}")
    );
    assert_eq!(
        s("{0,1,2,3}").sumset(&s("{0,7}")).unwrap(),
        s("{0,1,2,3,7,8,9,10}")
    );
    assert_eq!(s("{0,1,2}").dilate(3).unwrap(), s("{0,3,6}"));
    assert_eq!(s("{0,7}").dilate(9).unwrap(), s("{0,63}"));
    assert_eq!(s("{0,7}").dilate(1).unwrap(), s("{0,7}"));
    assert_eq!(s("{0}").gcd(), 0);
    assert_eq!(s("{0,3,6,9}").gcd(), 3);
    assert_eq!(s("{0,4,10}").gcd(), 2);
    assert_eq!(s("{0,3,6}").render(), "{0,3,6}");
    assert_eq!(
        FinSet::new(vec![0, u64::MAX]).unwrap().sumset(&s("{0,1}")),
        Err(Error::Overflow)
    );
}

#[test]
fn factorizer_values() {
    let f = Factorizer::new();
    assert_eq!(
        f.cofactors(&s("{0,1,2,3}"), &s("{0,1}")).unwrap(),
        sets(&["{0,2}", "{0,1,2}"])
    );
    assert_eq!(
        f.cofactors(&s("{0,1,3}"), &s("{0,2}")).unwrap(),
        BTreeSet::new()
    );
    assert_eq!(
        f.cofactors(&s("{0,1,3}"), &FinSet::zero()).unwrap(),
        sets(&["{0,1,3}"])
    );
    assert_eq!(
        f.divisors(&s("{0,1,2}")).unwrap(),
        sets(&["{0}", "{0,1}", "{0,1,2}"])
    );
    assert_eq!(f.divisors(&FinSet::zero()).unwrap(), sets(&["{0}"]));
    assert_eq!(f.divisors(&s("{0,7}")).unwrap(), sets(&["{0}", "{0,7}"]));

    assert!(f.is_atom(&s("{0,1,2,7,9}")).unwrap());
    assert!(f.is_atom(&s("{0,1,4,6,7}")).unwrap());
    assert!(f.is_atom(&s("{0,1}")).unwrap());
    assert!(!f.is_atom(&s("{0,1,2}")).unwrap());
    assert!(!f.is_atom(&FinSet::zero()).unwrap());

    assert_eq!(f.atom_divisors(&FinSet::zero()).unwrap(), BTreeSet::new());
    assert_eq!(
        f.atom_divisors(&s("{0,1,2,3}")).unwrap(),
        sets(&["{0,1}", "{0,2}"])
    );

    assert_eq!(
        f.factorizations(&s("{0,1,2,3}")).unwrap(),
        BTreeSet::from([
            word(&["{0,1}", "{0,1}", "{0,1}"]),
            word(&["{0,1}", "{0,2}"])
        ])
    );
    assert_eq!(
        f.factorizations(&FinSet::zero()).unwrap(),
        BTreeSet::from([Factorization::empty()])
    );
    assert_eq!(
        f.factorizations(&s("{0,1,3,4,5,7,8}")).unwrap(),
        BTreeSet::from([
            word(&["{0,1,4}", "{0,3,4}"]),
            word(&["{0,3}", "{0,1}", "{0,4}"])
        ])
    );

    assert_eq!(f.length_set(&interval_seed()).unwrap(), lengths(&[2, 3, 4]));
    assert_eq!(f.length_set(&s("{0,1}")).unwrap(), lengths(&[1]));
    assert_eq!(
        f.length_set(&s("{0,1,2,3,7,8,9,10}")).unwrap(),
        lengths(&[2, 3, 4])
    );

    let q = |t: &str| t.parse::<Rational>().unwrap();
    assert_eq!(f.elasticity_of_set(&FinSet::zero()).unwrap(), q("1/1"));
    assert_eq!(f.elasticity_of_set(&interval_seed()).unwrap(), q("2/1"));
    assert_eq!(
        f.elasticity_of_set(&s("{0,1,3,4,5,7,8}")).unwrap(),
        q("3/2")
    );

    let u = word(&["{0,1}", "{0,1}", "{0,2}"]);
    assert_eq!(fact_gcd(&u, &word(&["{0,1}", "{0,3}"])), word(&["{0,1}"]));
    assert_eq!(fact_gcd(&u, &u), u);
    assert!(fact_gcd(
        &word(&["{0,1,4}", "{0,3,4}"]),
        &word(&["{0,3}", "{0,1}", "{0,4}"])
    )
    .is_empty());
}

#[test]
fn cancellativity_values() {
    let f = Factorizer::new();
    assert_eq!(relcanc_witness(&f, &s("{0,7}")).unwrap(), None);
    assert_eq!(
        relcanc_witness(&f, &s("{0,1,2,3}")).unwrap(),
        Some(RelCancWitness {
            b: s("{0,1}"),
            c: s("{0,2}"),
            d: s("{0,1,2}")
        })
    );
    let w = relcanc_witness(&f, &s("{0,3,6,9}")).unwrap().unwrap();
    assert_eq!(w.b.sumset(&w.c).unwrap(), s("{0,3,6,9}"));
    assert_eq!(w.b.sumset(&w.d).unwrap(), s("{0,3,6,9}"));
    assert_ne!(w.c, w.d);

    assert!(are_relatively_prime(&f, &FinSet::zero(), &s("{0,5,9}")).unwrap());
    assert!(are_relatively_prime(&f, &s("{0,1}"), &s("{0,2}")).unwrap());
    assert!(!are_relatively_prime(&f, &s("{0,1}"), &s("{0,1,2}")).unwrap());

    assert!(gcd_criterion(&f, &s("{0,1,3,4,5,7,8}")).unwrap());
    assert!(!gcd_criterion(&f, &s("{0,1,2,3}")).unwrap());
    assert!(gcd_criterion(&f, &FinSet::zero()).unwrap());

    let r = verify_separated_sum(&f, &s("{0,1}"), &s("{0,3}")).unwrap();
    assert!(r.passed());
    assert_eq!(
        f.factorizations(&s("{0,1,3,4}")).unwrap(),
        BTreeSet::from([word(&["{0,1}", "{0,3}"])])
    );
}

#[test]
fn family_values() {
    let f = Factorizer::new();
    let fam = build_family(1, None).unwrap();
    assert_eq!(fam.n, vec![3]);
    assert_eq!(fam.s[1], s("{0,1,3,4,5,7,8}"));
    let r = verify_family(&f, &fam).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(f.factorizations(fam.top()).unwrap().len(), 2);

    let fam = build_family(2, None).unwrap();
    assert_eq!(fam.n, vec![3, 15]);
    assert!(verify_family(&f, &fam).unwrap().passed());
    assert_eq!(f.length_set(fam.top()).unwrap(), lengths(&[2, 4]));

    let r = verify_family(&f, &build_family(0, None).unwrap()).unwrap();
    assert!(r.passed());
    assert!(r.checks.iter().any(|c| c.name == "scope"));

    let v = serde_json::to_value(build_family(2, None).unwrap()).unwrap();
    for key in ["i", "n", "A", "B", "C", "D", "S"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn family_beyond_minimal_budget_claim() {
    let f = Factorizer::new();
    for i in 4..=5 {
        let r = verify_family(&f, &build_family(i, None).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn construction_values() {
    let f = Factorizer::new();
    let s1 = s("{0,1,3,4,5,7,8}");
    let w = compose_sum(&f, &s1, &s("{0,1}")).unwrap();
    assert_eq!(w, s1.sumset(&s("{0,17}")).unwrap());
    assert_eq!(f.length_set(&w).unwrap(), lengths(&[3, 4]));
    assert_eq!(compose_sum(&f, &s1, &FinSet::zero()).unwrap(), s1);
    assert_eq!(
        compose_sum(&f, &s("{0,1,2,3}"), &s("{0,1}")),
        Err(Error::PreconditionFailed(
            Precondition::XRelativelyCancellative
        ))
    );

    assert_eq!(from_generators(0, &[3]).unwrap(), s1);
    assert_eq!(f.length_set(&s1).unwrap(), lengths(&[2, 3]));
    let w = from_generators(2, &[]).unwrap();
    assert_eq!(w, s("{0,1,3,4}"));
    assert_eq!(f.length_set(&w).unwrap(), lengths(&[2]));
    assert_eq!(from_generators(0, &[]).unwrap(), FinSet::zero());

    assert_eq!(interval_three(2).unwrap(), interval_seed());
    assert_eq!(
        interval_three(3).unwrap(),
        interval_seed().sumset(&s("{0,61}")).unwrap()
    );
    assert_eq!(
        f.length_set(&interval_three(4).unwrap()).unwrap(),
        lengths(&[4, 5, 6])
    );

    let q = |t: &str| t.parse::<Rational>().unwrap();
    assert_eq!(for_elasticity(q("1")).unwrap(), s("{0,1}"));
    assert_eq!(for_elasticity(q("3/2")).unwrap(), s1);
    assert_eq!(
        for_elasticity(q("2")).unwrap(),
        build_family(2, None).unwrap().top().clone()
    );
    assert_eq!(
        for_elasticity(q("1/2")),
        Err(Error::PreconditionFailed(Precondition::ElasticityBelowOne))
    );
}

#[test]
fn shift_values() {
    let f = Factorizer::new();
    assert_eq!(
        shift_structure(&f, &s("{0,1,2}"), 5).unwrap().n_set,
        sets(&["{0,1,2}"])
    );
    assert_eq!(
        shift_structure(&f, &interval_seed(), 61).unwrap().n_set,
        BTreeSet::from([s("{0,1,10,11}"), interval_seed()])
    );
    assert!(matches!(
        shift_structure(&f, &s("{0,1}"), 2),
        Err(Error::PreconditionFailed(Precondition::ShiftBound { .. }))
    ));
    assert!(verify_shift(&f, &s("{0,1,2}"), 5).unwrap().passed());
    assert_eq!(f.length_set(&s("{0,1,2,5,6,7}")).unwrap(), lengths(&[3]));
    assert!(verify_shift(&f, &interval_seed(), 61).unwrap().passed());
    assert!(verify_shift(&f, &FinSet::zero(), 1).unwrap().passed());
}

#[test]
fn interval_three_to_six() {
    let f = Factorizer::new();
    for k in 2..=6 {
        let l = f.length_set(&interval_three(k).unwrap()).unwrap();
        assert_eq!(l, (k..=k + 2).collect::<LengthSet>(), "k = {k}");
    }
}
