use plethy_core::schur::{decode_table, CharacterTable, CACHE_ENV};

#[test]
fn character_tables_persist_to_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(CACHE_ENV, dir.path());
    let table = CharacterTable::for_degree(9);
    let path = dir.path().join("chartab-v1-n9.bin");
    let bytes = std::fs::read(&path).expect("cache file written");
    let decoded = decode_table(9, &bytes).expect("cache file decodes");
    assert_eq!(decoded.partitions(), table.partitions());
    for a in table.partitions() {
        for b in table.partitions() {
            assert_eq!(decoded.get(a, b), table.get(a, b));
        }
    }
    assert!(decode_table(9, &bytes[..bytes.len() / 2]).is_none());
    assert!(decode_table(8, &bytes).is_none());
}
