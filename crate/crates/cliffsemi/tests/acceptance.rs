//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::sync::Arc;
use std::time::Instant;

use cliffsemi::{
    classify_trigonal, clifford_brute_oracle, clifford_of_curve, enumerate_semigroups, gonality,
    nonplanar_family, plane_closed_form, relations_report, visit_candidates, MonomialSheaf,
    NumericalSemigroup, Pencil,
};

fn semi(gens: &[u64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn semi_gaps(gaps: &[u64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_gaps(gaps).unwrap())
}

fn sheaf(s: &Arc<NumericalSemigroup>, exps: &[i64]) -> MonomialSheaf {
    MonomialSheaf::new(s, exps)
}

/// Independent gonality witnesses: direct minimization of
/// `a + #((a+S) \ S)` over plain integer arithmetic.
fn brute_gonality_witnesses(s: &NumericalSemigroup) -> (u64, Vec<u64>) {
    let hi = 2 * s.conductor() + 4;
    let mem: Vec<bool> = (0..=2 * hi).map(|x| s.contains(x as i64)).collect();
    let deg = |a: u64| -> u64 {
        a + (0..=hi)
            .filter(|&x| mem[x as usize] && !mem[(x + a) as usize])
            .count() as u64
    };
    let best = (1..=s.multiplicity()).map(deg).min().unwrap();
    let witnesses = (1..=best).filter(|&a| deg(a) == best).collect();
    (best, witnesses)
}

#[test]
fn criterion_01_gorenstein_plane_curve_scrolls() {
    let s = semi(&[5, 6]);
    let f = sheaf(&s, &[4, 5, 6]);
    assert_eq!(f.hom_omega_exponents(), vec![6, 11, 12]);
    assert_eq!(f.h0(), 4);
    assert_eq!(f.degree(), 10);
    assert_eq!(f.scrollar_dimension().unwrap(), 7);

    let t = Pencil::new(&f, 0, 5).unwrap().scroll_type().unwrap();
    assert_eq!(t.invariants, vec![2, 1, 0, 0, 0, 0, 0]);
    let t = Pencil::new(&f, 4, 6).unwrap().scroll_type().unwrap();
    assert_eq!(t.invariants, vec![1, 1, 1, 0, 0, 0, 0]);
    println!("criterion 01 gorenstein plane curve scrolls: pass");
}

#[test]
fn criterion_02_non_gorenstein_curve_scrolls() {
    let s = semi_gaps(&[1, 2, 4, 5, 7, 8, 11]);
    let f = sheaf(&s, &[3, 4, 6]);
    assert_eq!(f.hom_omega_exponents(), vec![0, 3]);
    assert_eq!(f.degree(), 8);
    assert_eq!(f.scrollar_dimension().unwrap(), 5);

    let p = Pencil::new(&f, 0, 4).unwrap();
    assert_eq!(p.scroll_type().unwrap().invariants, vec![1, 1, 0, 0, 0]);
    assert_eq!(p.matrix().unwrap().rows, [vec![0, 1], vec![2, 4]]);
    let t = Pencil::new(&f, 3, 6).unwrap().scroll_type().unwrap();
    assert_eq!(t.invariants, vec![2, 0, 0, 0, 0]);
    println!("criterion 02 non-gorenstein curve scrolls: pass");
}

#[test]
fn criterion_03_five_generator_curve() {
    let s = semi(&[5, 9, 13, 17, 21]);
    assert_eq!(s.genus(), 10);
    assert_eq!(s.conductor(), 17);
    assert!(!s.is_gorenstein());

    let gon = gonality(&s).unwrap();
    assert_eq!(gon.gonality, 5);
    assert_eq!(gon.witnesses, vec![1, 4, 5]);
    assert_eq!(brute_gonality_witnesses(&s), (5, vec![1, 4, 5]));

    let out = clifford_of_curve(&s).unwrap();
    assert_eq!(out.clifford, 2);
    assert_eq!(out.clifford_dimension, 2);
    let expected = sheaf(&s, &[4, 5]);
    assert_eq!(expected.degree(), 6);
    assert_eq!(expected.h0(), 3);
    assert!(out
        .witnesses
        .iter()
        .any(|f| f.dedup_key() == expected.dedup_key()));
    println!("criterion 03 five-generator curve: pass");
}

#[test]
fn criterion_04_exceptional_dimension_three_curve() {
    let s = semi(&[6, 8, 9]);
    assert_eq!(s.genus(), 10);
    assert!(s.is_gorenstein());

    let gon = gonality(&s).unwrap();
    assert_eq!(gon.gonality, 6);
    // The three published pencils t, t^3, t^6 all compute the gonality.
    for a in [1, 3, 6] {
        assert!(gon.witnesses.contains(&a), "missing witness {a}");
    }
    // The full minimizer set also contains a = 2: O<1,t^2> has degree
    // 2 + #{2,10,11,19} = 6 as well. Pin the complete set against an
    // independent brute-force minimization.
    let (bd, bw) = brute_gonality_witnesses(&s);
    assert_eq!(bd, 6);
    assert_eq!(gon.witnesses, bw);
    assert_eq!(gon.witnesses, vec![1, 2, 3, 6]);
    println!("note: O<1,t^2> also attains the minimal degree 6 on <6,8,9>");

    let out = clifford_of_curve(&s).unwrap();
    assert_eq!(out.clifford, 3);
    assert_eq!(out.clifford_dimension, 3);
    let expected = sheaf(&s, &[6, 8, 9]);
    assert!(out
        .witnesses
        .iter()
        .any(|f| f.dedup_key() == expected.dedup_key()));
    println!("criterion 04 exceptional dimension-three curve: pass");
}

#[test]
fn criterion_05_plane_family_by_full_solver() {
    for alpha in 4..=9u64 {
        let facts = plane_closed_form(alpha).unwrap();
        let s = Arc::new(facts.semigroup.clone());

        let gon = gonality(&s).unwrap();
        assert_eq!(gon.gonality, alpha, "alpha {alpha}");
        assert!(gon.witnesses.contains(&1));
        assert!(gon.witnesses.contains(&alpha));
        let invertible_pencil = sheaf(&s, &[alpha as i64]);
        assert!(invertible_pencil.is_invertible());
        assert!(invertible_pencil.is_base_point_free());
        assert_eq!(invertible_pencil.degree(), alpha);
        let base_point_pencil = sheaf(&s, &[1]);
        assert!(!base_point_pencil.is_invertible());
        assert!(!base_point_pencil.is_base_point_free());
        assert_eq!(base_point_pencil.degree(), alpha);

        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, alpha as i64 - 3, "alpha {alpha}");
        assert_eq!(out.clifford_dimension, 2, "alpha {alpha}");
        let witness = sheaf(&s, &facts.witness_exponents.iter().map(|&e| e as i64).collect::<Vec<_>>());
        assert!(witness.is_invertible());
        assert!(out
            .witnesses
            .iter()
            .any(|f| f.dedup_key() == witness.dedup_key()));
    }
    println!("criterion 05 plane family, full solver, multiplicity 4..9: pass");
}

#[test]
fn criterion_06_nonplanar_family_by_full_solver() {
    for alpha in 4..=7u64 {
        let facts = nonplanar_family(alpha).unwrap();
        let s = Arc::new(facts.semigroup.clone());
        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, alpha as i64 - 3, "alpha {alpha}");
        assert_eq!(out.clifford_dimension, 2, "alpha {alpha}");
        assert!(
            out.computing.iter().all(|f| !f.is_invertible()),
            "alpha {alpha}: an invertible sheaf computes the Clifford index"
        );
    }
    println!("criterion 06 nonplanar family, multiplicity 4..7: pass");
}

#[test]
fn criterion_07_trigonal_classification() {
    let mut checked = 0usize;
    for s in enumerate_semigroups(10) {
        if s.is_smooth() {
            continue;
        }
        let class = classify_trigonal(&s).unwrap();
        let gon = gonality(&s).unwrap().gonality;
        assert_eq!(
            class.is_trigonal(),
            gon == 3,
            "classification mismatch on {s}: {class:?} vs gonality {gon}"
        );
        checked += 1;
    }
    println!("criterion 07 trigonal classification over {checked} semigroups of genus <= 10: pass");
}

#[test]
fn criterion_08_property_suite() {
    let mut sheaves_checked = 0usize;
    for s in enumerate_semigroups(10) {
        if s.genus() < 4 {
            continue;
        }
        let s = Arc::new(s);
        let genus = s.genus() as i64;
        let gon = gonality(&s).unwrap();
        let out = clifford_of_curve(&s).unwrap();

        // every theorem-backed relation must hold, including the equivalence
        // of zero Clifford index with gonality two
        let checks = relations_report(&s, &gon, &out);
        for c in &checks {
            assert!(c.holds, "{}: relation {} fails", s, c.name);
        }

        let mut failure: Option<String> = None;
        visit_candidates(&s, |c| {
            if failure.is_some() {
                return;
            }
            // materializing re-derives h0/h1/deg on a second code path and
            // asserts the definitional and window-count Clifford routes agree
            let exps: Vec<i64> = c.section_exponents(&s).iter().map(|&e| e as i64).collect();
            let f = MonomialSheaf::new(&s, &exps);
            let inv = *f.invariants();
            if (inv.h0, inv.h1, inv.degree, inv.clifford) != (c.h0, c.h1, c.degree, c.clifford) {
                failure = Some(format!("{s}: candidate/sheaf mismatch at a_max {}", c.a_max));
                return;
            }
            // Riemann-Roch
            if inv.h0 as i64 - inv.h1 as i64 != inv.degree as i64 - genus + 1 {
                failure = Some(format!("{s}: Riemann-Roch fails at a_max {}", c.a_max));
                return;
            }
            // the Clifford bound holds whenever both cohomologies are nonzero
            if inv.h1 >= 1 && inv.clifford < 0 {
                failure = Some(format!("{s}: negative Clifford index at a_max {}", c.a_max));
                return;
            }
            // equality in the Clifford bound with both at least 2 forces
            // gonality 2
            if inv.contributes_clifford && inv.clifford == 0 && gon.gonality != 2 {
                failure = Some(format!("{s}: Clifford equality off gonality two"));
                return;
            }
            // scrollar dimension relation
            if let Some(scd) = inv.scrollar_dim {
                if inv.clifford != scd as i64 - (inv.h0 as i64 - 1) {
                    failure = Some(format!("{s}: scrollar relation fails"));
                    return;
                }
            }
            sheaves_checked += 1;
        });
        if let Some(f) = failure {
            panic!("{f}");
        }

        // structure sheaf edge of the Clifford bound
        let o = MonomialSheaf::structure(&s);
        assert_eq!(o.clifford_index(), 0);
    }
    println!("criterion 08 property suite over genus 4..10 ({sheaves_checked} sheaves): pass");
}

#[test]
fn criterion_09_oracle_equivalence() {
    let started = Instant::now();
    let mut checked = 0usize;
    for s in enumerate_semigroups(8) {
        if s.genus() < 4 {
            continue;
        }
        let s = Arc::new(s);
        let fast = clifford_of_curve(&s).unwrap();
        let slow = clifford_brute_oracle(&s, s.genus()).unwrap();
        assert!(
            fast.agrees_with(&slow),
            "oracle mismatch on {s}: {} vs {}",
            fast.clifford,
            slow.clifford
        );
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() <= 60,
        "oracle sweep took {elapsed:?}, budget is 60s"
    );
    println!(
        "criterion 09 oracle equivalence over {checked} semigroups of genus 4..8 in {elapsed:?}: pass"
    );
}

#[test]
fn criterion_10_scroll_consistency() {
    // every pencil examined alongside criteria 1-6
    let mut pencils_checked = 0usize;
    let mut check_all_pencils = |f: &MonomialSheaf| {
        let sections = f.section_exponents();
        let genus = f.base().genus() as u64;
        let scd = f.scrollar_dimension().unwrap();
        for (i, &u) in sections.iter().enumerate() {
            for &v in &sections[i + 1..] {
                let p = Pencil::new(f, u, v).unwrap();
                let t = p.scroll_type().unwrap();
                assert_eq!(t.degree, f.h1() as u64, "degree != h1 for {f} ({u},{v})");
                assert_eq!(t.dim, scd, "dim != scd for {f} ({u},{v})");
                assert_eq!(t.ambient, genus - 1, "ambient != g-1 for {f} ({u},{v})");
                pencils_checked += 1;
            }
        }
    };

    let s = semi(&[5, 6]);
    check_all_pencils(&sheaf(&s, &[4, 5, 6]));
    let s = semi_gaps(&[1, 2, 4, 5, 7, 8, 11]);
    check_all_pencils(&sheaf(&s, &[3, 4, 6]));
    let s = semi(&[5, 9, 13, 17, 21]);
    check_all_pencils(&sheaf(&s, &[4, 5]));
    for &a in &gonality(&s).unwrap().witnesses {
        check_all_pencils(&sheaf(&s, &[a as i64]));
    }
    let s = semi(&[6, 8, 9]);
    check_all_pencils(&sheaf(&s, &[6, 8, 9]));
    for &a in &gonality(&s).unwrap().witnesses {
        check_all_pencils(&sheaf(&s, &[a as i64]));
    }
    for alpha in 4..=9u64 {
        let s = Arc::new(plane_closed_form(alpha).unwrap().semigroup);
        check_all_pencils(&sheaf(&s, &[1]));
        check_all_pencils(&sheaf(&s, &[alpha as i64]));
        for f in clifford_of_curve(&s).unwrap().computing {
            check_all_pencils(&f);
        }
    }
    for alpha in 4..=7u64 {
        let s = Arc::new(nonplanar_family(alpha).unwrap().semigroup);
        for f in clifford_of_curve(&s).unwrap().computing {
            check_all_pencils(&f);
        }
    }
    println!("criterion 10 scroll consistency over {pencils_checked} pencils: pass");
}
