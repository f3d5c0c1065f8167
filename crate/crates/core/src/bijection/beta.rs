use super::{ins_word, BijectionError, SplitRule};
use crate::paths::WeightedDyckPath;
use crate::perm::{assemble, schutzenberger_word, AlternatingPermutation};

/// The image of an irreducible path: bottom word `ins(wd)`, top word
/// `S_2n(ins(reflect(wd)))`.
pub fn beta_irreducible(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<AlternatingPermutation, BijectionError> {
    let bot = ins_word(wd, rule)?;
    let mirrored = ins_word(&wd.reflect(), rule)?;
    let top = schutzenberger_word(&mirrored, wd.len())
        .expect("positions of a path of length 2n lie in 1..=2n");
    assemble(&bot, &top).map_err(|source| BijectionError::Inconsistent { bot, top, source })
}

/// The image of any weighted path: with irreducible factors `f1 ... fm`
/// read left to right, `beta(fm) • ... • beta(f1)`.
pub fn beta(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<AlternatingPermutation, BijectionError> {
    let mut acc = AlternatingPermutation::default();
    for f in wd.factor_irreducible() {
        acc = beta_irreducible(&f, rule)?.shifted_concat(&acc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(s: &str) -> String {
        beta(&s.parse().unwrap(), SplitRule::CeilHalf)
            .unwrap()
            .to_string()
    }

    #[test]
    fn running_example_image() {
        let wd: WeightedDyckPath = "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0"
            .parse()
            .unwrap();
        let sigma = beta_irreducible(&wd, SplitRule::CeilHalf).unwrap();
        assert_eq!(sigma.to_string(), "8,13,6,12,11,14,7,10,2,9,4,5,1,3");
        assert_eq!(sigma.top(), vec![13, 12, 14, 10, 9, 5, 3]);
        assert_eq!(beta(&wd, SplitRule::CeilHalf).unwrap(), sigma);
    }

    #[test]
    fn small_images() {
        assert_eq!(image("UD;0,0"), "1,2");
        assert_eq!(image("UUDD;0,0,0,0"), "2,4,1,3");
        assert_eq!(image("UDUD;0,0,0,0"), "3,4,1,2");
        assert_eq!(image("UUDDUD;0,0,0,0,0,0"), "5,6,2,4,1,3");
        assert_eq!(image(";"), "");
    }

    #[test]
    fn all_weightings_of_uudd() {
        let mut got: Vec<String> = ["0,0,0,0", "0,0,1,0", "0,1,0,0", "0,1,1,0"]
            .iter()
            .map(|w| image(&format!("UUDD;{w}")))
            .collect();
        got.sort();
        assert_eq!(got, vec!["1,3,2,4", "1,4,2,3", "2,3,1,4", "2,4,1,3"]);
    }
}
