#![allow(dead_code)]

use marked_braids::{BraidWord, Dialect, Extensions, FiniteGroupTable, GroupPresentation, Kind, Letter};

/// Every dialect the library presents, with both settings of the dotted
/// extension, on `n` strands.
pub fn all_presentations(n: usize) -> Vec<GroupPresentation> {
    let mut dialects = vec![Dialect::Classical, Dialect::Z2, Dialect::Virtual, Dialect::Z2Quotient];
    for g in ["Z2", "Z3", "S3"] {
        dialects.push(Dialect::gbraid(FiniteGroupTable::by_name(g).unwrap()));
    }
    let mut out: Vec<GroupPresentation> =
        dialects.iter().map(|d| GroupPresentation::standard(d, n).unwrap()).collect();
    for d in [Dialect::Dotted, Dialect::TwistedDotted] {
        for flag in [true, false] {
            out.push(GroupPresentation::new(&d, n, Extensions { dot_crossing_far_commute: flag }).unwrap());
        }
    }
    out
}

pub fn label(p: &GroupPresentation) -> String {
    format!("{} n={} ext={}", p.dialect(), p.strands(), p.extensions().dot_crossing_far_commute)
}

/// Forgets the labels of a parity word.
pub fn drop_labels(w: &BraidWord) -> BraidWord {
    let letters = w
        .letters()
        .iter()
        .map(|l| {
            assert_eq!(l.kind, Kind::Marked);
            Letter { kind: Kind::Classical, label: 0, ..*l }
        })
        .collect();
    BraidWord::new(Dialect::Classical, w.strands(), letters).unwrap()
}

/// Lifts a classical word to the parity dialect with every crossing even.
pub fn even_lift(w: &BraidWord) -> BraidWord {
    let letters = w.letters().iter().map(|l| Letter::marked(l.index, 0, l.inverse)).collect();
    BraidWord::new(Dialect::Z2, w.strands(), letters).unwrap()
}

/// Action of a classical word on the free group `F_n` (Artin representation),
/// images of the generators as freely reduced signed index lists.
pub fn artin_action(w: &BraidWord) -> Vec<Vec<i32>> {
    let n = w.strands();
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();
    // images are applied right to left: x ↦ σ_{t1}(σ_{t2}(... x))
    for l in w.letters().iter().rev() {
        let i = l.index as usize;
        images = images.iter().map(|img| substitute(img, i, l.inverse)).collect();
    }
    images
}

fn substitute(word: &[i32], i: usize, inverse: bool) -> Vec<i32> {
    let (a, b) = (i as i32, i as i32 + 1);
    let gen_image = |g: i32| -> Vec<i32> {
        if !inverse {
            // σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            if g == a {
                vec![a, b, -a]
            } else if g == b {
                vec![a]
            } else {
                vec![g]
            }
        } else if g == a {
            vec![b]
        } else if g == b {
            vec![-b, a, b]
        } else {
            vec![g]
        }
    };
    let mut out: Vec<i32> = Vec::new();
    for &x in word {
        let img = gen_image(x.abs());
        let piece: Vec<i32> = if x > 0 { img } else { img.iter().rev().map(|y| -y).collect() };
        for y in piece {
            if out.last() == Some(&-y) {
                out.pop();
            } else {
                out.push(y);
            }
        }
    }
    out
}
