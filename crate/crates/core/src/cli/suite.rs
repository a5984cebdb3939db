//! The fixture suite behind `verify-paper`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cancellativity::{is_relatively_cancellative, verify_separated_sum};
use crate::constructors::{build_family, shift_structure, verify_family, verify_shift};
use crate::error::{Error, Precondition, Result};
use crate::factorizer::{Factorization, Factorizer, LengthSet};
use crate::finset::FinSet;
use crate::fixtures::{
    boundary_sets, interval_seed, interval_seed_atoms, interval_seed_shift_divisors,
    interval_seed_shifted, interval_seed_words, INTERVAL_SHIFT,
};
use crate::report::Report;

type Item = fn(&Factorizer) -> Result<Report>;

pub(crate) fn items(include_slow: bool) -> Vec<(&'static str, Item)> {
    let mut out: Vec<(&'static str, Item)> = vec![
        ("boundary sets", boundary),
        ("interval seed", seed),
        ("interval seed shifted", seed_shifted),
        ("family i = 1", |f| family(f, 1)),
        ("family i = 2", |f| family(f, 2)),
        ("separated sums (sampled)", separated_sums),
        ("shift structure, x in [0,6]", shift_exhaustive),
    ];
    if include_slow {
        out.push(("family i = 3", |f| family(f, 3)));
    }
    out
}

fn lengths(v: &[usize]) -> LengthSet {
    v.iter().copied().collect()
}

fn rejected(r: Result<impl Sized>, expected: Precondition) -> bool {
    matches!(r, Err(Error::PreconditionFailed(p)) if p == expected)
}

fn boundary(f: &Factorizer) -> Result<Report> {
    let s = boundary_sets();
    let mut r = Report::new("boundary sets");
    for (name, set, expect) in [
        ("A", &s.a, false),
        ("B", &s.b, true),
        ("C", &s.c, true),
        ("D", &s.d, false),
        ("E", &s.e, true),
    ] {
        let got = is_relatively_cancellative(f, set)?;
        r.check(
            format!("{name} relatively cancellative = {expect}"),
            got == expect,
            set.to_string(),
        );
    }
    r.check(
        "gcd(B) > 2 max(A), gcd(D) > 2 max(C), gcd(E) = 2 max(C)",
        s.b.gcd() > 2 * s.a.max_element()
            && s.d.gcd() > 2 * s.c.max_element()
            && s.e.gcd() == 2 * s.c.max_element(),
        "",
    );
    for (name, x, y, full, split) in [
        ("A+B", &s.a, &s.b, &[2, 3, 4][..], &[3, 4][..]),
        ("C+D", &s.c, &s.d, &[2, 3, 4], &[3, 4]),
        ("C+E", &s.c, &s.e, &[2, 3], &[2]),
    ] {
        let l = f.length_set(&x.sumset(y)?)?;
        let ladd = f.length_set(x)?.sumset(&f.length_set(y)?);
        r.check(
            format!("L({name}) = {} ⊋ {}", lengths(full), lengths(split)),
            l == lengths(full) && ladd == lengths(split),
            format!("{l} and {ladd}"),
        );
    }
    let ce = s.c.sumset(&s.e)?;
    r.check(
        "C+E is not relatively cancellative",
        !is_relatively_cancellative(f, &ce)?,
        ce.to_string(),
    );
    r.check(
        "(A, B) rejected: A not relatively cancellative",
        rejected(
            verify_separated_sum(f, &s.a, &s.b),
            Precondition::XRelativelyCancellative,
        ),
        "",
    );
    r.check(
        "(C, D) rejected: D not relatively cancellative",
        rejected(
            verify_separated_sum(f, &s.c, &s.d),
            Precondition::YRelativelyCancellative,
        ),
        "",
    );
    r.check(
        "(C, E) rejected: gcd(E) = 2 max(C)",
        rejected(
            verify_separated_sum(f, &s.c, &s.e),
            Precondition::GcdBound { gcd: 2, bound: 2 },
        ),
        "",
    );
    Ok(r)
}

fn seed(f: &Factorizer) -> Result<Report> {
    let x = interval_seed();
    let mut r = Report::new("interval seed");
    let l = f.length_set(&x)?;
    r.check("L(X) = {2,3,4}", l == lengths(&[2, 3, 4]), l.to_string());
    let z = f.factorizations(&x)?;
    let expected: BTreeSet<Factorization> = interval_seed_words()
        .into_iter()
        .map(Factorization::new)
        .collect();
    r.check(
        "Z(X) is the three listed words",
        z == expected,
        format!("{} word(s)", z.len()),
    );
    let atoms = f.atom_divisors(&x)?;
    let expected: BTreeSet<FinSet> = interval_seed_atoms().into_iter().collect();
    r.check(
        "atom divisors of X are the seven listed",
        atoms == expected,
        format!("{} atom(s)", atoms.len()),
    );
    r.check(
        "X not relatively cancellative",
        !is_relatively_cancellative(f, &x)?,
        "",
    );
    Ok(r)
}

fn seed_shifted(f: &Factorizer) -> Result<Report> {
    let x = interval_seed();
    let y = interval_seed_shifted();
    let mut r = Report::new("interval seed shifted");
    let st = shift_structure(f, &x, INTERVAL_SHIFT)?;
    let expected: BTreeSet<FinSet> = interval_seed_shift_divisors().into_iter().collect();
    r.check(
        "N = {{0,1,10,11}, X}",
        st.n_set == expected,
        format!("{} divisor(s)", st.n_set.len()),
    );
    let l = f.length_set(&y)?;
    r.check(
        "L(Y) = {3,4,5} directly",
        l == lengths(&[3, 4, 5]),
        l.to_string(),
    );
    let shift = verify_shift(f, &x, INTERVAL_SHIFT)?;
    r.check("L(Y) from the triples", shift.passed(), "");
    r.check(
        "Y not relatively cancellative",
        !is_relatively_cancellative(f, &y)?,
        "",
    );
    Ok(r)
}

fn family(f: &Factorizer, i: usize) -> Result<Report> {
    verify_family(f, &build_family(i, None)?)
}

/// `count` pairs `(x, y)` with `x` a relatively cancellative sum of at most
/// two atoms with max at most 6, and `y` a relatively cancellative set other
/// than `{0}` from `[0, 6]` dilated past `2 max(x)`.
pub(crate) fn separated_pairs(
    f: &Factorizer,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<Vec<(FinSet, FinSet)>> {
    let mut atoms = Vec::new();
    let mut relcanc = Vec::new();
    for bits in 0u64..64 {
        let a = FinSet::new(
            (0..7)
                .filter(|i| i == &0 || bits >> (i - 1) & 1 == 1)
                .collect(),
        )?;
        if f.is_atom(&a)? {
            atoms.push(a.clone());
        }
        if !a.is_zero() && is_relatively_cancellative(f, &a)? {
            relcanc.push(a);
        }
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut x = atoms[rng.gen_range(0..atoms.len())].clone();
        if rng.gen_bool(0.5) {
            let other = &atoms[rng.gen_range(0..atoms.len())];
            if x.max_element() + other.max_element() <= 6 {
                x = x.sumset(other)?;
            }
        }
        if !is_relatively_cancellative(f, &x)? {
            continue;
        }
        let z = &relcanc[rng.gen_range(0..relcanc.len())];
        let d = 2 * x.max_element() + 1 + rng.gen_range(0..3);
        out.push((x, z.dilate(d)?));
    }
    Ok(out)
}

fn separated_sums(f: &Factorizer) -> Result<Report> {
    let mut r = Report::new("separated sums");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (x, y) in separated_pairs(f, &mut rng, 25)? {
        let rep = verify_separated_sum(f, &x, &y)?;
        r.check(format!("{x} + {y}"), rep.passed(), "");
    }
    Ok(r)
}

fn shift_exhaustive(f: &Factorizer) -> Result<Report> {
    let mut r = Report::new("shift structure");
    let mut failed = Vec::new();
    let mut total = 0;
    for bits in 0u64..64 {
        let x = FinSet::new(
            (0..7)
                .filter(|i| i == &0 || bits >> (i - 1) & 1 == 1)
                .collect(),
        )?;
        let n = 2 * x.max_element() + 1;
        total += 1;
        if !verify_shift(f, &x, n)?.passed() {
            failed.push(x.to_string());
        }
    }
    r.check(
        "Z and L of x + {0, 2max(x)+1} match the triples",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{total} instances")
        } else {
            format!("failed: {}", failed.join(" "))
        },
    );
    Ok(r)
}
