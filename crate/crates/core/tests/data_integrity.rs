use std::path::PathBuf;

use nilorbits::exceptional::{graph, ExceptionalAlgebra};
use sha2::{Digest, Sha256};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[test]
fn embedded_graphs_match_pinned_checksums() {
    let sums = std::fs::read_to_string(data_dir().join("CHECKSUMS")).unwrap();
    let mut seen = 0;
    for line in sums.lines().filter(|l| !l.trim().is_empty()) {
        let (hex, file) = line.split_once("  ").unwrap();
        let bytes = std::fs::read(data_dir().join(file.trim())).unwrap();
        let digest: String = Sha256::digest(&bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(digest, hex, "{file} changed; update CHECKSUMS after review");
        seen += 1;
    }
    assert_eq!(seen, ExceptionalAlgebra::ALL.len());
}

#[test]
fn every_edge_drops_dimension_by_an_even_amount() {
    for a in ExceptionalAlgebra::ALL {
        let g = graph(a).unwrap();
        for e in &g.edges {
            let (hi, lo) = (g.dim_of(&e.above).unwrap(), g.dim_of(&e.below).unwrap());
            assert!(
                hi > lo && (hi - lo) % 2 == 0,
                "{a}: {} > {}",
                e.above,
                e.below
            );
        }
    }
}

#[test]
fn extremes_of_f4_pair_up() {
    let g = graph(ExceptionalAlgebra::F4).unwrap();
    let label = |hi: &str, lo: &str| {
        g.edges
            .iter()
            .find(|e| e.above == hi && e.below == lo)
            .unwrap()
            .label
            .clone()
    };
    assert_eq!(label("F4", "F4(a1)"), "F_4");
    assert_eq!(label("~A1", "0"), "f^sp_4");
    let dls = g.dls_map().unwrap();
    assert_eq!(dls["F4"], "0");
    assert_eq!(dls["F4(a1)"], "~A1");
}

#[test]
fn uncertain_labels_keep_both_flags() {
    let g = graph(ExceptionalAlgebra::E8).unwrap();
    let e = g.edges.iter().find(|e| e.label == "(C_2)^*").unwrap();
    let l = e.parsed_label().unwrap();
    assert!(l.uncertain && l.star);
}
