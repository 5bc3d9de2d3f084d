use spotty::oracle::{run_campaign, Grid};

#[test]
fn default_grid_passes_including_m1() {
    let reports = run_campaign(&Grid::default(), 4).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    assert!(failed.is_empty(), "{:#?}", &failed[..failed.len().min(5)]);
    for lemma in [
        "ideal-sum",
        "multiple-sum",
        "subset-support-sum",
        "partial-weight-sum",
        "exact-support-sum",
        "off-support-sum",
        "in-support-sum",
        "split-support-sum",
        "byte-kernel",
        "poisson",
        "partition-axioms",
        "partition-m4",
    ] {
        assert!(reports.iter().any(|r| r.lemma == lemma), "missing {lemma}");
    }
}

#[test]
fn worker_count_does_not_change_reports() {
    let grid = Grid {
        ms: vec![2, 3],
        bs: vec![2, 3],
        samples: 20,
        seed: 7,
        ..Grid::default()
    };
    assert_eq!(
        run_campaign(&grid, 1).unwrap(),
        run_campaign(&grid, 5).unwrap()
    );
}

#[test]
fn injected_fault_is_reported() {
    let grid = Grid {
        ms: vec![4],
        bs: vec![1],
        inject_fault: true,
        codes_per_ring: 0,
        ..Grid::default()
    };
    let reports = run_campaign(&grid, 1).unwrap();
    assert!(reports.iter().any(|r| !r.pass && r.lemma == "ideal-sum"));
    assert!(reports.iter().any(|r| !r.pass && r.lemma == "chi-hom"));
}

#[test]
fn uniqueness_reports_are_opt_in() {
    let base = Grid {
        ms: vec![3],
        bs: vec![1],
        codes_per_ring: 0,
        ..Grid::default()
    };
    let without = run_campaign(&base, 1).unwrap();
    assert!(without.iter().all(|r| r.lemma != "partition-uniqueness"));
    let with = run_campaign(
        &Grid {
            uniqueness: true,
            ..base
        },
        1,
    )
    .unwrap();
    let report = with
        .iter()
        .find(|r| r.lemma == "partition-uniqueness")
        .unwrap();
    assert_eq!(report.actual, "2");
}
