use bigon_core::freegroup::*;
use proptest::prelude::*;

fn all_reduced(max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for x in [1i8, -1, 2, -2] {
                if w.last() != Some(&-x) {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().map(|v| Word::new(v)));
        layer = next;
    }
    out
}

#[test]
fn reduced_word_count() {
    // 4 * 3^(n-1) reduced words of length n
    let expected: usize = (1..=6).map(|n| 4 * 3usize.pow(n - 1)).sum();
    assert_eq!(all_reduced(6).len(), expected);
}

#[test]
fn whitehead_agrees_with_nielsen_orbit_up_to_length_8() {
    // a length-n Whitehead step splits into two Nielsen moves that stay below 2n letters
    let orbit = nielsen_orbit(&"a".parse().unwrap(), 16);
    for w in all_reduced(8) {
        let in_orbit = orbit.contains(&w.cyclic_normal_form());
        assert_eq!(is_primitive(&w), in_orbit, "{w}");
    }
}

#[test]
fn oracle_agrees_on_short_words() {
    for w in all_reduced(5) {
        assert_eq!(is_primitive(&w), primitivity_oracle(&w, 12), "{w}");
    }
}

#[test]
fn boundary_words_not_primitive() {
    for t in 4..=12usize {
        let b: Word = format!("baba{}", "b".repeat(t - 2)).parse().unwrap();
        let w: Word = format!("{}aba", "b".repeat(t + 3)).parse().unwrap();
        assert!(!is_primitive(&b), "t={t}");
        assert!(!is_primitive(&w), "t={t}");
    }
    let odd: Word = "bababbb".parse().unwrap();
    assert!(!primitivity_oracle(&odd, 10));
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 1..14)
        .prop_map(|v| Word::new(&v))
        .prop_filter("nonempty", |w| !w.is_empty())
}

fn swap(w: &Word) -> Word {
    w.substitute(&"b".parse().unwrap(), &"a".parse().unwrap())
}

proptest! {
    #[test]
    fn reduce_is_idempotent(v in prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..20)) {
        let w = Word::new(&v);
        prop_assert_eq!(Word::new(w.letters()), w);
    }

    #[test]
    fn primitivity_invariances(w in word(), k in 0usize..14) {
        let p = is_primitive(&w);
        prop_assert_eq!(is_primitive(&w.inverse()), p);
        prop_assert_eq!(is_primitive(&swap(&w)), p);
        let c = w.cyclically_reduced();
        let k = k % c.len().max(1);
        let rotated = Word::new(&[&c.letters()[k..], &c.letters()[..k]].concat());
        prop_assert_eq!(is_primitive(&rotated), p);
        let g: Word = "ab".parse().unwrap();
        prop_assert_eq!(is_primitive(&g.concat(&w).concat(&g.inverse())), p);
    }

    #[test]
    fn abelian_filter(w in word()) {
        let (p, q) = abelianize(&w);
        let g = bigon_core::fatgraph::gcd(p.unsigned_abs(), q.unsigned_abs());
        if g != 1 {
            prop_assert!(!is_primitive(&w));
        }
    }

    #[test]
    fn automorphic_images_of_a_are_primitive(moves in prop::collection::vec(0usize..4, 0..8)) {
        let mut w: Word = "a".parse().unwrap();
        let imgs = [("ab", "b"), ("a", "ba"), ("Ba", "b"), ("a", "Ab")];
        for m in moves {
            let (x, y) = imgs[m];
            w = w.substitute(&x.parse().unwrap(), &y.parse().unwrap());
        }
        prop_assert!(is_primitive(&w));
    }
}
