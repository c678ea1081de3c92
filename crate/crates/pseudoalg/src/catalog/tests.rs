use super::*;
use crate::hopf::HPoly;

fn t(s: &str) -> Tensor2 {
    expr::eval_tensor(s, &BTreeMap::new()).unwrap()
}

fn same_brackets(a: &PseudoAlgebra, b: &PseudoAlgebra) -> bool {
    let n = a.rank();
    n == b.rank() && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| a.get(i, j, k) == b.get(i, j, k))))
}

#[test]
fn ids_are_unique_and_cover_the_lists() {
    let ids: Vec<&str> = list_families().iter().map(|f| f.id).collect();
    let mut dedup = ids.clone();
    dedup.dedup();
    assert_eq!(ids, dedup, "ids must be unique and sorted");
    assert!(ids.len() >= 70);
    for n in 1..=18 {
        assert!(ids.contains(&format!("thm27-{n}").as_str()), "thm27-{n}");
    }
    for x in ["A", "B", "C", "D", "E"] {
        assert!(ids.contains(&format!("mtype-{x}").as_str()));
    }
    for (p, n) in [("z", 5), ("a", 16), ("b", 16), ("c", 8), ("d", 3), ("e", 16)] {
        for i in 1..=n {
            assert!(ids.contains(&format!("{p}{i}").as_str()), "{p}{i}");
        }
    }
}

#[test]
fn every_family_has_consistent_tables() {
    for f in FAMILIES {
        for mode in [Mode::Literal, Mode::Corrected] {
            let r = resolve(f, mode);
            for (slot, e) in &r.slots {
                if let Shape::Frame(_) = f.shape {
                    assert!(FRAME_SLOTS.contains(&slot.as_str()), "{}: unknown slot {slot}", f.id);
                }
                if e == families::ALPHA_CHOICE {
                    assert!(f.param("alpha_m").is_some(), "{}", f.id);
                }
            }
        }
    }
}

#[test]
fn corrections_refer_to_printed_text() {
    for c in corrections() {
        let f = family(&c.family).unwrap_or_else(|_| panic!("correction for unknown family {}", c.family));
        assert!(!c.reason.is_empty());
        let lit = resolve(f, Mode::Literal);
        match c.slot.as_str() {
            "status" => assert_eq!(c.corrected, "refuted"),
            "constraint" if !c.printed.is_empty() => assert!(lit.constraints.contains(&c.printed), "{c:?}"),
            "regime" if !c.printed.is_empty() => assert!(lit.regimes.contains(&c.printed), "{c:?}"),
            "constraint" | "regime" => {}
            slot => {
                let printed = lit.slots.iter().find(|(n, _)| n == slot).map(|(_, e)| e.as_str());
                assert_eq!(printed, Some(c.printed.as_str()), "{}: printed text of {slot}", c.family);
            }
        }
    }
}

#[test]
fn thm27_7_has_the_printed_module() {
    let a = build("thm27-7", &Params::new().with("lambda", 2).with("kappa", 3)).unwrap();
    assert_eq!(a.rank(), 2);
    assert_eq!(*a.get(0, 1, 1), t("2*s|1 - 1|s + 3*1|1"));
    assert_eq!(*a.get(1, 0, 1), t("-(2*1|s - s|1 + 3*1|1)"));
    assert_eq!(a.classify(), Classification::Lie);
}

#[test]
fn mtype_d_at_w12_one() {
    let a = build("mtype-D", &Params::new().with("w12", 1).with("kappa1", 0)).unwrap();
    assert_eq!(*a.get(1, 1, 2), t("s|s(2) - s(2)|s"));
    assert_eq!(*a.get(0, 1, 1), t("-1|s"));
    assert_eq!(*a.get(0, 2, 2), t("-3*s|1 - 1|s"));
}

#[test]
fn nonzero_parameters_are_enforced() {
    let err = build("mtype-E", &Params::new().with("w03", 0).with("kappa1", 1)).unwrap_err();
    match err {
        CatalogError::ParamDomainViolation { family, message } => {
            assert_eq!(family, "mtype-E");
            assert_eq!(message, "requires w03 ≠ 0");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn constraints_are_enforced_and_named() {
    let p = Params::new().with("lambda1", 1).with("kappa1", 0).with("w01", 1).with("a", 2);
    let err = build("mtype-B", &p).unwrap_err().to_string();
    assert!(err.contains("a*lambda1 == 0"), "{err}");
    assert!(matches!(build("nope", &p), Err(CatalogError::UnknownFamily(_))));
    let err = build("mtype-B", &Params::new().with("lambda1", 0)).unwrap_err().to_string();
    assert!(err.contains("missing parameter"), "{err}");
}

#[test]
fn printed_formula_failures_are_reported_literally() {
    // As printed, the λ = -2 extension carries a stray factor α.
    let p = Params::new().with("x13", 1).with("x30", 1);
    assert!(matches!(build_literal("thm27-11", &p), Err(CatalogError::PaperFormulaFails { .. })));
    let b = build_mode("thm27-11", &p, Mode::Corrected).unwrap();
    assert_eq!(b.classification, Classification::Lie);
    assert_eq!(b.corrections.len(), 1);
    assert!(b.report.passed());
}

#[test]
fn e14_reproduces_the_extended_schrodinger_virasoro_algebra() {
    let p = Params::new().with("w01", -1).with("lambda1", "1/2").with("kappa1", 0).with("a00", 1);
    let e14 = build("e14", &p).unwrap();
    let sv = build("sv-extended", &Params::new()).unwrap();
    assert!(same_brackets(&e14, &sv));
    // [Y, N] = -1⊗1 Y with Y = -e1, N = e3.
    assert_eq!(*sv.get(1, 3, 1), t("1|1"));
}

#[test]
fn sv_conformal_is_mtype_b_up_to_sign_of_e2() {
    let p = Params::new().with("lambda1", "1/2").with("kappa1", 0).with("w01", 1).with("a", 0);
    let b = build("mtype-B", &p).unwrap();
    let sv = build("sv-conformal", &Params::new()).unwrap();
    assert!(!same_brackets(&b, &sv));
    assert!(same_brackets(&b.scale_basis(2, &Rat::int(-1)), &sv));
    assert!(same_brackets(&build("mtype-B", &p.with("w01", -1)).unwrap(), &sv));
}

#[test]
fn presets_agree_with_their_families() {
    // TSV(c) is the 2-type family with w02 = -2, κ1 = -c.
    let tsv = build("tsv", &Params::new().with("c", "3/2")).unwrap();
    let c = build("mtype-C", &Params::new().with("w02", -2).with("kappa1", "-3/2")).unwrap();
    assert!(same_brackets(&tsv, &c));
    let dsv = build("dsv", &Params::new()).unwrap();
    let t00 = build("t-ab", &Params::new().with("a", 0).with("b", 0)).unwrap();
    assert!(same_brackets(&dsv, &t00));
}

#[test]
fn gauge_transform_of_thm27_8_still_verifies() {
    let a = build("thm27-8", &Params::new().with("lambda", 3)).unwrap();
    let h = HPoly::from_terms([(0, Rat::int(2)), (1, Rat::new(-1, 3)), (3, Rat::int(5))]);
    let g = a.add_multiple(0, 1, &h);
    assert!(!same_brackets(&a, &g));
    assert!(g.check_all().passed());
    assert_eq!(g.classify(), Classification::Lie);
    // The inverse transformation recovers the original algebra.
    assert!(same_brackets(&g.add_multiple(0, 1, &h.scale(&Rat::int(-1))), &a));
}

#[test]
fn lie_when_follows_the_symmetry_of_the_argument() {
    let skew = build("thm27-3", &Params::new().with("A", "s|1 - 1|s")).unwrap();
    assert_eq!(skew.classify(), Classification::Lie);
    let b = build_mode("thm27-3", &Params::new().with("A", "s|1"), Mode::Corrected).unwrap();
    assert_eq!(b.classification, Classification::LeibnizNotLie);
}

#[test]
fn one_sided_families_are_leibniz_not_lie() {
    let b = build_mode("thm27-15", &Params::new().with("x00", 2), Mode::Corrected).unwrap();
    assert_eq!(b.classification, Classification::LeibnizNotLie);
}

#[test]
fn choice_parameters_select_the_alpha() {
    let p = Params::new()
        .with("alpha_m", "a2")
        .with("w", 1)
        .with("b00", 1)
        .with("lambda1", 0)
        .with("lambda2", -3)
        .with("kappa1", 0)
        .with("kappa2", 0);
    let a = build("e2", &p).unwrap();
    assert_eq!(*a.get(1, 1, 2), t("s|s(2) - s(2)|s"));
    let err = build("e2", &p.clone().with("lambda2", 1)).unwrap_err().to_string();
    assert!(err.contains("lambda2 == -3"), "{err}");
    let err = build("e2", &p.with("alpha_m", "a9")).unwrap_err().to_string();
    assert!(err.contains("alpha_m"), "{err}");
}

#[test]
fn degenerate_limits_build() {
    // Every rational parameter 0, every nonzero one 1.
    for f in FAMILIES {
        if refutation(f.id).is_some() {
            continue;
        }
        let options: Vec<&str> = match f.param("alpha_m").map(|p| p.kind) {
            Some(Kind::Choice(o)) => o.to_vec(),
            _ => vec![""],
        };
        for opt in options {
            let mut p = Params::new();
            for spec in f.params {
                let v = match spec.kind {
                    Kind::Rational => "0",
                    Kind::NonZero => "1",
                    Kind::Choice(_) => opt,
                    Kind::Tensor => "s|1 - 1|s",
                    Kind::Poly => "1|1",
                };
                p.0.insert(spec.name.to_string(), v.to_string());
            }
            match build_mode(f.id, &p, Mode::Corrected) {
                Ok(_) | Err(CatalogError::ParamDomainViolation { .. }) => {}
                Err(e) => panic!("{}: {e}", f.id),
            }
        }
    }
}

#[test]
fn corrected_catalog_verifies() {
    let report = verify_all(3, 42);
    let failing: Vec<&str> = report.families.iter().filter(|f| !f.pass).map(|f| f.id.as_str()).collect();
    assert!(failing.is_empty(), "{failing:?}");
    let refuted: Vec<&str> = report.families.iter().filter(|f| f.refuted).map(|f| f.id.as_str()).collect();
    assert_eq!(refuted, ["c3", "c8", "e13", "e4", "e5"]);
    for f in report.families.iter().filter(|f| !f.refuted) {
        assert!(f.draws.iter().all(|d| d.ok), "{}", f.id);
    }
}

#[test]
fn verification_is_deterministic() {
    let f = family("a2").unwrap();
    assert_eq!(verify_family(f, Mode::Corrected, 4, 9), verify_family(f, Mode::Corrected, 4, 9));
}

#[test]
fn reference_lists_every_family() {
    let md = reference_markdown();
    for f in FAMILIES {
        assert!(md.contains(&format!("## `{}`", f.id)));
    }
}
