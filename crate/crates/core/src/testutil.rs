use crate::word::Word;

/// Every word over `alphabet` of length at most `max_len`, shortest first.
pub(crate) fn all_words(alphabet: &[u8], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|p: &Vec<u8>| {
                alphabet.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word::from));
    }
    out
}
