//! The twenty upward-closed families at height three, under their
//! conventional short names.

use crate::level::LevelSet;
use crate::upset::{u_of, v_of, UpSet};

fn ls(levels: &[u8]) -> LevelSet {
    LevelSet::from_levels(3, levels).expect("catalogue levels fit height 3")
}

/// Every element of the height-three monoid, named:
///
/// * `full` / `empty` — the identity and the absorbing element;
/// * `uS` — the principal cone on `S`;
/// * `vS` / `vN` — everything meeting `S` (resp. meeting any level);
/// * `wi` — the strict supersets of `{i}`;
/// * `xi` — `v{i}` joined with the cone on the other two levels;
/// * `y` — the sets with at least two levels.
pub fn catalogue3() -> Vec<(&'static str, UpSet)> {
    let x = |i: u8, rest: &[u8]| v_of(&ls(&[i])).union(&u_of(&ls(rest)));
    let w = |i: u8, j: u8, k: u8| {
        UpSet::generated_by(3, &[ls(&[i, j]), ls(&[i, k])]).expect("levels fit")
    };
    vec![
        ("full", UpSet::full(3).expect("height 3 fits")),
        ("vN", v_of(&ls(&[0, 1, 2]))),
        ("v01", v_of(&ls(&[0, 1]))),
        ("v02", v_of(&ls(&[0, 2]))),
        ("v12", v_of(&ls(&[1, 2]))),
        ("x0", x(0, &[1, 2])),
        ("x1", x(1, &[0, 2])),
        ("x2", x(2, &[0, 1])),
        ("u0", u_of(&ls(&[0]))),
        ("u1", u_of(&ls(&[1]))),
        ("u2", u_of(&ls(&[2]))),
        ("w0", w(0, 1, 2)),
        ("w1", w(1, 0, 2)),
        ("w2", w(2, 0, 1)),
        ("u01", u_of(&ls(&[0, 1]))),
        ("u02", u_of(&ls(&[0, 2]))),
        ("u12", u_of(&ls(&[1, 2]))),
        ("u012", u_of(&ls(&[0, 1, 2]))),
        ("y", UpSet::generated_by(3, &[ls(&[0, 1]), ls(&[0, 2]), ls(&[1, 2])]).expect("levels fit")),
        ("empty", UpSet::empty(3).expect("height 3 fits")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_q;
    use crate::upset::star;
    use std::collections::HashSet;

    fn named(name: &str) -> UpSet {
        catalogue3()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, u)| u)
            .unwrap()
    }

    #[test]
    fn twenty_distinct_names_and_elements() {
        let cat = catalogue3();
        assert_eq!(cat.len(), 20);
        let names: HashSet<&str> = cat.iter().map(|(n, _)| *n).collect();
        let families: HashSet<u64> = cat.iter().map(|(_, u)| u.family()).collect();
        assert_eq!(names.len(), 20);
        assert_eq!(families.len(), 20);
    }

    #[test]
    fn catalogue_exhausts_height_three() {
        let from_catalogue: HashSet<u64> =
            catalogue3().iter().map(|(_, u)| u.family()).collect();
        let from_enumeration: HashSet<u64> =
            enumerate_q(3).unwrap().iter().map(|u| u.family()).collect();
        assert_eq!(from_catalogue, from_enumeration);
    }

    #[test]
    fn renders_use_minimal_members() {
        assert_eq!(named("x0").render(), "⟨{0},{1,2}⟩");
        assert_eq!(named("w1").render(), "⟨{0,1},{1,2}⟩");
        assert_eq!(named("vN").render(), "⟨{0},{1},{2}⟩");
        assert_eq!(named("full").render(), "⟨{}⟩");
        assert_eq!(named("empty").render(), "⟨⟩");
    }

    #[test]
    fn product_factorizations() {
        assert_eq!(star(&named("v01"), &named("v02")), named("x0"));
        assert_eq!(star(&named("v01"), &named("v12")), named("x1"));
        assert_eq!(star(&named("v02"), &named("v12")), named("x2"));
        assert_eq!(star(&named("u0"), &named("v12")), named("w0"));
        assert_eq!(star(&named("v01"), &named("u2")), named("w2"));
        assert_eq!(
            star(&star(&named("v01"), &named("v02")), &named("v12")),
            named("y")
        );
    }
}
