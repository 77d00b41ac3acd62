use std::cmp;

/// Unit-cost edit distance (insert, delete, substitute) between two
/// sequences, using a single rolling row.
pub fn levenshtein<T: PartialEq>(source: &[T], target: &[T]) -> usize {
    if source.is_empty() {
        return target.len();
    }
    if target.is_empty() {
        return source.len();
    }

    let mut row: Vec<usize> = (0..=target.len()).collect();
    for (i, a) in source.iter().enumerate() {
        let mut diag = i;
        row[0] = i + 1;
        for (j, b) in target.iter().enumerate() {
            let next = cmp::min(cmp::min(row[j], row[j + 1]) + 1, diag + usize::from(a != b));
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[target.len()]
}
