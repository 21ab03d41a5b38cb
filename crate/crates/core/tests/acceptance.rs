use s3voa_core::checks::{registry, run_all, Context};
use s3voa_core::report::Status;

#[test]
fn acceptance_criteria() {
    let ctx = Context::default();
    let reports = run_all(&registry(), &ctx);
    assert_eq!(reports.len(), 12);
    let mut failed = Vec::new();
    for (i, r) in reports.iter().enumerate() {
        let verdict = if r.status == Status::Pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {:<18} {verdict}", i + 1, r.check);
        if r.status != Status::Pass {
            println!("    {}", r.data);
            failed.push(r.check.clone());
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
