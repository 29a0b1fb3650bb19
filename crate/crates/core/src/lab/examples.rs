//! The two counterexample families: an unbounded IEHNC ratio, and a rank-5
//! counterexample to Guzman's conjecture.

use crate::error::{Error, Result};
use crate::format::Presentation;
use crate::subgroup::Subgroup;
use crate::word::{Letter, Word};

fn x(i: usize) -> Letter {
    Letter::gen(i)
}

fn power(letter: Letter, e: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(letter, e)
}

/// In `F(x_1, .., x_{l+2})`:
/// `H = <x_1^i x_2 x_1^-(i+1) : 0 <= i <= v-2> ∨ <x_3, .., x_{l+2}>` and `K = <x_1, x_2>`.
pub fn iehnc_presentations(v: usize, l: usize) -> Result<(Presentation, Presentation)> {
    if v < 3 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "IEHNC family needs v >= 3 and l >= 1 (got v={v}, l={l})"
        )));
    }
    let rank = l + 2;
    let mut h: Vec<Word> = (0..=v - 2)
        .map(|i| {
            Word::reduce(
                power(x(1), i)
                    .chain(std::iter::once(x(2)))
                    .chain(power(x(1).inverse(), i + 1)),
            )
        })
        .collect();
    h.extend((3..=l + 2).map(|j| Word::reduce([x(j)])));
    let k = vec![Word::reduce([x(1)]), Word::reduce([x(2)])];
    Ok((
        Presentation { rank, generators: h },
        Presentation { rank, generators: k },
    ))
}

pub fn example_iehnc(v: usize, l: usize) -> Result<(Subgroup, Subgroup)> {
    let (h, k) = iehnc_presentations(v, l)?;
    let h = Subgroup::from_words(h.rank, &h.generators)?;
    let k = Subgroup::from_words(k.rank, &k.generators)?;
    debug_assert_eq!(h.reduced_rank(), v + l - 2);
    debug_assert_eq!(k.reduced_rank(), 1);
    Ok((h, k))
}

/// Letters of `F(a, b, c, d, x, y)` in generator order.
pub mod guzman_letters {
    use crate::word::Letter;

    pub const A: usize = 1;
    pub const B: usize = 2;
    pub const C: usize = 3;
    pub const D: usize = 4;
    pub const X: usize = 5;
    pub const Y: usize = 6;

    pub fn word(letters: &[(usize, bool)]) -> crate::word::Word {
        crate::word::Word::reduce(letters.iter().map(|&(i, inv)| Letter::new(i, inv)))
    }
}

/// `H = <a, b, x, y², yxy⁻¹>`, `K = <c, d, y, x², xyx⁻¹>` in `F(a, b, c, d, x, y)`.
pub fn guzman_presentations() -> (Presentation, Presentation) {
    use guzman_letters::*;
    let p = |i| (i, false);
    let n = |i| (i, true);
    let h = vec![
        word(&[p(A)]),
        word(&[p(B)]),
        word(&[p(X)]),
        word(&[p(Y), p(Y)]),
        word(&[p(Y), p(X), n(Y)]),
    ];
    let k = vec![
        word(&[p(C)]),
        word(&[p(D)]),
        word(&[p(Y)]),
        word(&[p(X), p(X)]),
        word(&[p(X), p(Y), n(X)]),
    ];
    (
        Presentation { rank: 6, generators: h },
        Presentation { rank: 6, generators: k },
    )
}

pub fn example_guzman() -> (Subgroup, Subgroup) {
    let (h, k) = guzman_presentations();
    (
        Subgroup::from_words(6, &h.generators).expect("fixed presentation"),
        Subgroup::from_words(6, &k.generators).expect("fixed presentation"),
    )
}
