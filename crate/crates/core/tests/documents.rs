//! Certificate document round trips: write, read, re-verify; tampering and
//! schema mismatches are caught.

use degpart::graph::{build_complete, build_cycle};
use degpart::io::{
    self, degen_certificate_doc, document_to_certificate, partition_certificate_doc,
    read_certificate, write_certificate, CertificateDocument, DocumentCertificate, OutcomeDoc,
};
use degpart::oracle::checker::{verify_degen_certificate, verify_partition_certificate};
use degpart::partition::{find_partition_t1, find_partition_t2, RVector};

#[test]
fn partition_document_round_trip_reverifies() {
    let g = build_cycle(5);
    let r = RVector::new(vec![2, 2]).unwrap();
    let cert = find_partition_t1(&g, &r, 4).unwrap();
    let report = verify_partition_certificate(&g, &cert);
    let doc = partition_certificate_doc(&g, &cert).with_verdict(&report);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    write_certificate(&doc, &path).unwrap();
    let loaded = read_certificate(&path).unwrap();
    assert_eq!(doc, loaded);

    // Re-running verification on the reconstructed certificate reproduces
    // the embedded verdict.
    let DocumentCertificate::Partition(rebuilt) = document_to_certificate(&loaded).unwrap() else {
        panic!("expected a partition certificate");
    };
    let re = verify_partition_certificate(&g, &rebuilt);
    assert_eq!(re.passed(), loaded.verdict.unwrap().passed);
    assert!(re.passed());
}

#[test]
fn clique_structure_round_trip() {
    let g = build_complete(5);
    let r = RVector::new(vec![2, 2]).unwrap();
    let cert = find_partition_t1(&g, &r, 4).unwrap();
    let doc = partition_certificate_doc(&g, &cert);
    let json = serde_json::to_string(&doc).unwrap();
    let loaded: CertificateDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc, loaded);
    assert!(matches!(loaded.outcome, OutcomeDoc::CliqueStructure { .. }));
}

#[test]
fn tampered_document_fails_reverification() {
    let g = build_cycle(6);
    let r = RVector::new(vec![1, 2]).unwrap();
    let cert = find_partition_t2(&g, &r, 2).unwrap();
    let report = verify_degen_certificate(&g, &cert);
    assert!(report.passed());
    let mut doc = degen_certificate_doc(&g, &cert).with_verdict(&report);

    // Remove a vertex from the first part: coverage breaks.
    if let OutcomeDoc::DegeneratePartition { parts, .. } = &mut doc.outcome {
        let part = parts.iter_mut().find(|p| !p.is_empty()).unwrap();
        part.pop();
    } else {
        panic!("expected a degenerate partition");
    }
    let DocumentCertificate::Degen(rebuilt) = document_to_certificate(&doc).unwrap() else {
        panic!("expected a degen certificate");
    };
    let re = verify_degen_certificate(&g, &rebuilt);
    assert!(!re.passed());
    assert!(re.failed_names().contains(&"parts-disjoint-cover"));
}

#[test]
fn schema_mismatch_rejected() {
    let g = build_cycle(5);
    let r = RVector::new(vec![2, 2]).unwrap();
    let cert = find_partition_t1(&g, &r, 4).unwrap();
    let mut doc = partition_certificate_doc(&g, &cert);
    doc.schema_version = "degpart/0".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("old.json");
    write_certificate(&doc, &path).unwrap();
    assert!(matches!(
        read_certificate(&path),
        Err(degpart::Error::Schema(_))
    ));
}

#[test]
fn missing_field_is_a_schema_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"schema_version\": \"degpart/1\"}").unwrap();
    assert!(matches!(
        read_certificate(&path),
        Err(degpart::Error::Json(_))
    ));
}

#[test]
fn digest_binds_document_to_input() {
    let g = build_cycle(5);
    let h = build_complete(5);
    let r = RVector::new(vec![2, 2]).unwrap();
    let cert = find_partition_t1(&g, &r, 4).unwrap();
    let doc = partition_certificate_doc(&g, &cert);
    assert_eq!(doc.input.digest, io::graph_digest(&g));
    assert_ne!(doc.input.digest, io::graph_digest(&h));
}
