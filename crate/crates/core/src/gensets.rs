//! Named, validated generating sets for direct powers, the constructors for
//! every family the crate knows about, and their JSON file format.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::GenSetError;
use crate::perm::{gcd, Perm};
use crate::power::{Coding, PowerElement};

/// A nonempty list of distinct, non-identity generators of a common shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    name: String,
    provenance: String,
    group: Coding,
    generators: Vec<PowerElement>,
}

/// On-disk form. `group` defaults to `alternating`, which requires every
/// coordinate of every generator to be even.
#[derive(Debug, Serialize, Deserialize)]
struct GenSetFile {
    name: String,
    degree: usize,
    width: usize,
    generators: Vec<Vec<String>>,
    provenance: String,
    #[serde(default)]
    group: Coding,
}

impl GenSet {
    pub fn new(
        name: impl Into<String>,
        provenance: impl Into<String>,
        group: Coding,
        generators: Vec<PowerElement>,
    ) -> Result<GenSet, GenSetError> {
        let first = generators.first().ok_or(GenSetError::Empty)?;
        let (n, k) = (first.degree(), first.width());
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != n || g.width() != k {
                return Err(GenSetError::Shape(i, g.degree(), g.width(), n, k));
            }
            if g.is_identity() {
                return Err(GenSetError::IdentityGenerator(i));
            }
            if let Some(j) = generators[..i].iter().position(|h| h == g) {
                return Err(GenSetError::Duplicate(i, j));
            }
            if group == Coding::Alternating {
                if let Some(slot) = g.first_odd_slot() {
                    return Err(GenSetError::OddGenerator { index: i, slot });
                }
            }
        }
        Ok(GenSet {
            name: name.into(),
            provenance: provenance.into(),
            group,
            generators,
        })
    }

    /// Shorthand for an alternating-group generating set.
    pub fn alternating(
        name: impl Into<String>,
        provenance: impl Into<String>,
        generators: Vec<PowerElement>,
    ) -> Result<GenSet, GenSetError> {
        GenSet::new(name, provenance, Coding::Alternating, generators)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn group(&self) -> Coding {
        self.group
    }

    pub fn degree(&self) -> usize {
        self.generators[0].degree()
    }

    pub fn width(&self) -> usize {
        self.generators[0].width()
    }

    pub fn generators(&self) -> &[PowerElement] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Column `slot` (1-based): the `slot`-th coordinate of every generator.
    pub fn column(&self, slot: usize) -> Vec<Perm> {
        self.generators
            .iter()
            .map(|g| g.part(slot).clone())
            .collect()
    }

    /// Generators together with their inverses, duplicates removed, in
    /// first-occurrence order.
    pub fn symmetrized(&self) -> GenSet {
        let mut gens = self.generators.clone();
        for g in &self.generators {
            let inv = g.inverse();
            if !gens.contains(&inv) {
                gens.push(inv);
            }
        }
        GenSet {
            name: format!("{}+inverses", self.name),
            provenance: self.provenance.clone(),
            group: self.group,
            generators: gens,
        }
    }

    pub fn is_closed_under_inverse(&self) -> bool {
        self.generators
            .iter()
            .all(|g| self.generators.contains(&g.inverse()))
    }

    pub fn to_json(&self) -> String {
        let file = GenSetFile {
            name: self.name.clone(),
            degree: self.degree(),
            width: self.width(),
            generators: self
                .generators
                .iter()
                .map(PowerElement::to_cycle_strings)
                .collect(),
            provenance: self.provenance.clone(),
            group: self.group,
        };
        serde_json::to_string_pretty(&file).expect("genset serializes")
    }

    pub fn from_json(text: &str) -> Result<GenSet, GenSetError> {
        let file: GenSetFile = serde_json::from_str(text).map_err(|source| GenSetError::Json {
            path: "<string>".into(),
            source,
        })?;
        GenSet::from_file_repr(file)
    }

    fn from_file_repr(file: GenSetFile) -> Result<GenSet, GenSetError> {
        let generators = file
            .generators
            .iter()
            .map(|g| PowerElement::from_cycle_strings(g, file.degree))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some((i, g)) = generators
            .iter()
            .enumerate()
            .find(|(_, g)| g.width() != file.width)
        {
            return Err(GenSetError::Shape(
                i,
                g.degree(),
                g.width(),
                file.degree,
                file.width,
            ));
        }
        GenSet::new(file.name, file.provenance, file.group, generators)
    }
}

pub fn load_genset(path: impl AsRef<Path>) -> Result<GenSet, GenSetError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| GenSetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: GenSetFile = serde_json::from_str(&text).map_err(|source| GenSetError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    GenSet::from_file_repr(file)
}

pub fn save_genset(genset: &GenSet, path: impl AsRef<Path>) -> Result<(), GenSetError> {
    let path = path.as_ref();
    fs::write(path, genset.to_json() + "\n").map_err(|source| GenSetError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn perm(cycles: &str, degree: usize) -> Perm {
    Perm::parse_cycles(cycles, degree).expect("builtin cycle literal")
}

/// The slot-embedded copies of each element of `base`, slot-major:
/// `(a_1 at slot 1), (a_2 at slot 1), ..., (a_1 at slot 2), ...`.
pub fn canonical_genset(base: &[Perm], width: usize) -> Result<GenSet, GenSetError> {
    let blocks = base
        .iter()
        .map(|p| PowerElement::new(vec![p.clone()]))
        .collect::<Result<Vec<_>, _>>()?;
    canonical_blocks(&blocks, width, "canonical", parity_of(base))
}

fn parity_of(base: &[Perm]) -> Coding {
    if base.iter().all(Perm::is_even) {
        Coding::Alternating
    } else {
        Coding::Symmetric
    }
}

/// Canonical generating set of `(G^w)^k` built from a width-`w` generating set of `G^w`.
pub fn canonical_power(genset: &GenSet, copies: usize) -> Result<GenSet, GenSetError> {
    let mut g = canonical_blocks(genset.generators(), copies, "canonical", genset.group())?;
    g.name = format!("canonical:{}:{}", genset.name(), copies);
    Ok(g)
}

fn canonical_blocks(
    blocks: &[PowerElement],
    copies: usize,
    name: &str,
    group: Coding,
) -> Result<GenSet, GenSetError> {
    let first = blocks.first().ok_or(GenSetError::Empty)?;
    if copies == 0 {
        return Err(GenSetError::Invalid("width must be at least 1".into()));
    }
    let (n, w) = (first.degree(), first.width());
    let mut gens = Vec::with_capacity(copies * blocks.len());
    for slot in 0..copies {
        for b in blocks {
            let mut parts = vec![Perm::identity(n); copies * w];
            parts[slot * w..(slot + 1) * w].clone_from_slice(b.parts());
            gens.push(PowerElement::new(parts)?);
        }
    }
    GenSet::new(
        format!("{name}:{copies}"),
        "slot-embedded copies of a base generating set",
        group,
        gens,
    )
}

/// Generators `g_1..g_n` of `G^n` from `a_1..a_k` of pairwise coprime orders:
/// `g_i` carries `a_1..a_k` in consecutive slots starting at slot `i`,
/// wrapping past slot `n` back to slot 1.
pub fn coprime_genset(base: &[Perm], width: usize) -> Result<GenSet, GenSetError> {
    if base.is_empty() {
        return Err(GenSetError::Empty);
    }
    let k = base.len();
    if width < k {
        return Err(GenSetError::Invalid(format!(
            "width {width} smaller than the {k} base elements"
        )));
    }
    let orders: Vec<u64> = base.iter().map(Perm::order).collect();
    for i in 0..k {
        for j in i + 1..k {
            if gcd(orders[i], orders[j]) != 1 {
                return Err(GenSetError::NotCoprime(orders[i], orders[j]));
            }
        }
    }
    let n = base[0].degree();
    let gens = (0..width)
        .map(|i| {
            let mut parts = vec![Perm::identity(n); width];
            for (j, a) in base.iter().enumerate() {
                parts[(i + j) % width] = a.clone();
            }
            PowerElement::new(parts)
        })
        .collect::<Result<Vec<_>, _>>()?;
    GenSet::new(
        format!("coprime:{width}"),
        "coprime-order cyclic placement",
        parity_of(base),
        gens,
    )
}

/// `α = (1 2)(3 4)` and `β = (1 2 3)` in `A_4`.
pub fn a4_alpha_beta() -> (Perm, Perm) {
    (perm("(1 2)(3 4)", 4), perm("(1 2 3)", 4))
}

/// Size-`n` generating set of `A_4^n` from the coprime construction over `{α, β}`.
pub fn a4_genset(width: usize) -> Result<GenSet, GenSetError> {
    if width < 2 {
        return Err(GenSetError::Invalid(format!(
            "a4-power needs width >= 2, got {width}"
        )));
    }
    let (alpha, beta) = a4_alpha_beta();
    let mut g = coprime_genset(&[alpha, beta], width)?;
    g.name = format!("a4-power:{width}");
    g.provenance = "coprime construction over alpha=(1 2)(3 4), beta=(1 2 3)".into();
    Ok(g)
}

/// The pair `(x, y)` used for `A_n^2`: an `n`-cycle and `(1 2)(3 4)` for odd
/// `n`; an `(n-1)`-cycle and `(n-3 n-2)(n-1 n)` for even `n`.
pub fn an2_pair(degree: usize) -> Result<(Perm, Perm), GenSetError> {
    if !(5..=crate::perm::MAX_DEGREE).contains(&degree) {
        return Err(GenSetError::Invalid(format!(
            "an2 needs degree in 5..=12, got {degree}"
        )));
    }
    let cycle_len = if degree % 2 == 1 { degree } else { degree - 1 };
    let images: Vec<u8> = (0..degree)
        .map(|i| {
            if i < cycle_len {
                ((i + 1) % cycle_len) as u8
            } else {
                i as u8
            }
        })
        .collect();
    let long = Perm::from_images(images)?;
    let inv = if degree % 2 == 1 {
        perm("(1 2)(3 4)", degree)
    } else {
        let n = degree;
        perm(&format!("({} {})({} {})", n - 3, n - 2, n - 1, n), degree)
    };
    Ok((long, inv))
}

/// `{(x, y), (y, x)}` for the pair from [`an2_pair`].
pub fn an2_genset(degree: usize) -> Result<GenSet, GenSetError> {
    let (x, y) = an2_pair(degree)?;
    GenSet::alternating(
        format!("an2:{degree}"),
        "swapped pair of a long cycle and a double transposition",
        vec![
            PowerElement::new(vec![x.clone(), y.clone()])?,
            PowerElement::new(vec![y, x])?,
        ],
    )
}

/// The nine named elements of `A_5` used by the pair tables.
#[derive(Debug, Clone)]
pub struct A5Letters {
    pub a: Perm,
    pub b: Perm,
    pub c: Perm,
    pub d: Perm,
    pub e: Perm,
    pub f: Perm,
    pub g: Perm,
    pub h: Perm,
    pub i: Perm,
}

impl A5Letters {
    pub fn new() -> A5Letters {
        A5Letters {
            a: perm("(1 2)(3 4)", 5),
            b: perm("(1 2 3 4 5)", 5),
            c: perm("(1 2 3)", 5),
            d: perm("(1 3 5)", 5),
            e: perm("(2 4 5)", 5),
            f: perm("(1 2 3 5 4)", 5),
            g: perm("(1 2 5 4 3)", 5),
            h: perm("(1 2 5 3 4)", 5),
            i: perm("(1 3 2 5 4)", 5),
        }
    }
}

impl Default for A5Letters {
    fn default() -> Self {
        A5Letters::new()
    }
}

/// Nineteen ordered generating pairs of `A_5`, pairwise inequivalent under `Aut(A_5)`.
/// Squares are computed from the letters.
pub fn a5_bases19() -> Vec<(Perm, Perm)> {
    let l = A5Letters::new();
    let b2 = l.b.pow(2);
    let c2 = l.c.pow(2);
    vec![
        (l.a.clone(), l.b.clone()),
        (l.b.clone(), l.a.clone()),
        (l.a.clone(), b2.clone()),
        (b2.clone(), l.a.clone()),
        (l.c.clone(), l.b.clone()),
        (l.b.clone(), l.c.clone()),
        (l.c.clone(), b2.clone()),
        (b2.clone(), l.c.clone()),
        (l.b.clone(), c2.clone()),
        (c2.clone(), l.b.clone()),
        (b2.clone(), c2.clone()),
        (c2, b2),
        (l.d.clone(), l.a.clone()),
        (l.a.clone(), l.d.clone()),
        (l.d, l.e),
        (l.b.clone(), l.f),
        (l.b.clone(), l.g),
        (l.b.clone(), l.h),
        (l.b, l.i),
    ]
}

/// Assembles ordered pairs as columns of a two-generator set of `G^k`.
pub fn from_pair_columns(
    name: impl Into<String>,
    provenance: impl Into<String>,
    columns: &[(Perm, Perm)],
) -> Result<GenSet, GenSetError> {
    let first = PowerElement::new(columns.iter().map(|(s, _)| s.clone()).collect())?;
    let second = PowerElement::new(columns.iter().map(|(_, t)| t.clone()).collect())?;
    GenSet::new(
        name,
        provenance,
        parity_of(&[first.parts(), second.parts()].concat()),
        vec![first, second],
    )
}

/// The two-element generating set `C_k` of `A_5^k`, `1 <= k <= 8`.
pub fn a5_power_genset(width: usize) -> Result<GenSet, GenSetError> {
    if !(1..=8).contains(&width) {
        return Err(GenSetError::Invalid(format!(
            "a5-power needs width in 1..=8, got {width}"
        )));
    }
    let l = A5Letters::new();
    let b2 = l.b.pow(2);
    let first = [&l.a, &l.b, &l.a, &b2, &l.c, &l.b, &l.c, &b2];
    let second = [&l.b, &l.a, &b2, &l.a, &l.b, &l.c, &b2, &l.c];
    let take =
        |row: [&Perm; 8]| PowerElement::new(row[..width].iter().map(|&p| p.clone()).collect());
    GenSet::alternating(
        format!("a5-power:{width}"),
        "two-generator table over a=(1 2)(3 4), b=(1 2 3 4 5), c=(1 2 3)",
        vec![take(first)?, take(second)?],
    )
}

/// The 19 pairs as a two-generator set of `A_5^19`.
pub fn a5_bases19_genset() -> GenSet {
    let mut g = from_pair_columns(
        "a5-bases19",
        "nineteen inequivalent generating pairs of A5 as columns",
        &a5_bases19(),
    )
    .expect("valid builtin");
    g.group = Coding::Alternating;
    g
}

/// Selector patterns accepted by [`builtin`].
pub const BUILTIN_PATTERNS: &[&str] = &[
    "a4-power:<n>",
    "an2:<n>",
    "a5-power:<k>",
    "a5-bases19",
    "canonical:<builtin>:<k>",
];

/// Concrete names listed by `gensets list`.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = (2..=6).map(|n| format!("a4-power:{n}")).collect();
    names.extend((5..=9).map(|n| format!("an2:{n}")));
    names.extend((1..=8).map(|k| format!("a5-power:{k}")));
    names.push("a5-bases19".into());
    names
}

/// Resolves a builtin selector such as `a5-power:3` or `canonical:a5-power:1:4`.
pub fn builtin(selector: &str) -> Result<GenSet, GenSetError> {
    let unknown = || GenSetError::UnknownBuiltin(selector.to_string());
    if selector == "a5-bases19" {
        return Ok(a5_bases19_genset());
    }
    if let Some(rest) = selector.strip_prefix("canonical:") {
        let (inner, k) = rest.rsplit_once(':').ok_or_else(unknown)?;
        let k: usize = k.parse().map_err(|_| unknown())?;
        return canonical_power(&builtin(inner)?, k);
    }
    let (family, arg) = selector.split_once(':').ok_or_else(unknown)?;
    let arg: usize = arg.parse().map_err(|_| unknown())?;
    match family {
        "a4-power" => a4_genset(arg),
        "an2" => an2_genset(arg),
        "a5-power" => a5_power_genset(arg),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    fn pe(parts: &[&str], n: usize) -> PowerElement {
        PowerElement::from_cycle_strings(parts, n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let (alpha, beta) = a4_alpha_beta();
        let g = canonical_genset(&[alpha, beta], 2).unwrap();
        let alpha = "(1 2)(3 4)";
        let beta = "(1 2 3)";
        assert_eq!(
            g.generators(),
            &[
                pe(&[alpha, "()"], 4),
                pe(&[beta, "()"], 4),
                pe(&["()", alpha], 4),
                pe(&["()", beta], 4),
            ]
        );
        let l = A5Letters::new();
        assert_eq!(
            canonical_genset(&[l.a.clone(), l.b.clone()], 19)
                .unwrap()
                .len(),
            38
        );
        let one = canonical_genset(&[l.a.clone(), l.b.clone()], 1).unwrap();
        assert_eq!(one.generators(), a5_power_genset(1).unwrap().generators());
        assert!(matches!(canonical_genset(&[], 3), Err(GenSetError::Empty)));
    }

    #[test]
    fn coprime_examples() {
        let alpha = "(1 2)(3 4)";
        let beta = "(1 2 3)";
        let (a, b) = a4_alpha_beta();
        let g = coprime_genset(&[a.clone(), b.clone()], 3).unwrap();
        assert_eq!(
            g.generators(),
            &[
                pe(&[alpha, beta, "()"], 4),
                pe(&["()", alpha, beta], 4),
                pe(&[beta, "()", alpha], 4),
            ]
        );
        let g2 = coprime_genset(&[a.clone(), b], 2).unwrap();
        assert_eq!(
            g2.generators(),
            &[pe(&[alpha, beta], 4), pe(&[beta, alpha], 4)]
        );
        let four = p("(1 2 3 4)", 4);
        assert!(matches!(
            coprime_genset(&[a.clone(), four], 3),
            Err(GenSetError::NotCoprime(2, 4))
        ));
        assert!(coprime_genset(&[a.clone(), p("(1 2 3)", 4), p("(1 3)(2 4)", 4)], 2).is_err());
    }

    /// Transcribes the two-case index formulas literally (1-based).
    fn coprime_by_formula(base: &[Perm], n: usize) -> Vec<PowerElement> {
        let k = base.len();
        let deg = base[0].degree();
        (1..=n)
            .map(|i| {
                let mut parts = vec![Perm::identity(deg); n];
                if i <= n - k + 1 {
                    for j in 1..=k {
                        parts[i + j - 2] = base[j - 1].clone();
                    }
                } else {
                    // (a_{n-i+2}, ..., a_k, 1, ..., 1, a_1 at slot i, ..., a_{n-i+1})
                    for (slot, j) in (n - i + 2..=k).enumerate() {
                        parts[slot] = base[j - 1].clone();
                    }
                    for j in 1..=n - i + 1 {
                        parts[i + j - 2] = base[j - 1].clone();
                    }
                }
                PowerElement::new(parts).unwrap()
            })
            .collect()
    }

    #[test]
    fn coprime_matches_index_formulas() {
        let (a, b) = a4_alpha_beta();
        for n in 2..=7 {
            let g = coprime_genset(&[a.clone(), b.clone()], n).unwrap();
            assert_eq!(
                g.generators(),
                coprime_by_formula(&[a.clone(), b.clone()], n)
            );
        }
        let three = [p("(1 2)", 6), p("(3 4 5)", 6), p("(1 2 3 4 5)", 6)];
        let three = [three[0].clone(), p("(3 4 6)", 6), three[2].clone()];
        // orders 2, 3, 5
        for n in 3..=8 {
            let g = coprime_genset(&three, n).unwrap();
            assert_eq!(g.generators(), coprime_by_formula(&three, n));
            for (i, gi) in g.generators().iter().enumerate() {
                assert_eq!(gi.part(i + 1), &three[0]);
                for a in &three {
                    assert_eq!(gi.parts().iter().filter(|&x| x == a).count(), 1);
                }
            }
        }
    }

    #[test]
    fn a4_genset_shapes() {
        let g = a4_genset(2).unwrap();
        assert_eq!(
            g.generators(),
            &[
                pe(&["(1 2)(3 4)", "(1 2 3)"], 4),
                pe(&["(1 2 3)", "(1 2)(3 4)"], 4)
            ]
        );
        let (alpha, beta) = a4_alpha_beta();
        let g5 = a4_genset(5).unwrap();
        assert_eq!(g5.len(), 5);
        for gi in g5.generators() {
            assert_eq!(gi.parts().iter().filter(|&x| *x == alpha).count(), 1);
            assert_eq!(gi.parts().iter().filter(|&x| *x == beta).count(), 1);
        }
        assert!(a4_genset(1).is_err());
    }

    #[test]
    fn an2_examples() {
        let g = an2_genset(5).unwrap();
        assert_eq!(
            g.generators(),
            &[
                pe(&["(1 2 3 4 5)", "(1 2)(3 4)"], 5),
                pe(&["(1 2)(3 4)", "(1 2 3 4 5)"], 5),
            ]
        );
        let (x, y) = an2_pair(6).unwrap();
        assert_eq!(x, p("(1 2 3 4 5)", 6));
        assert_eq!(y, p("(3 4)(5 6)", 6));
        for n in 5..=12 {
            for gen in an2_genset(n).unwrap().generators() {
                assert!(gen.parts().iter().all(Perm::is_even));
            }
        }
        assert!(an2_genset(4).is_err());
    }

    #[test]
    fn bases19_shape() {
        let bases = a5_bases19();
        assert_eq!(bases.len(), 19);
        assert_eq!(bases[0], (p("(1 2)(3 4)", 5), p("(1 2 3 4 5)", 5)));
        assert_eq!(bases[2].1, p("(1 3 5 2 4)", 5));
        let g = a5_bases19_genset();
        assert_eq!(
            (g.width(), g.len(), g.group()),
            (19, 2, Coding::Alternating)
        );
    }

    #[test]
    fn a5_power_examples() {
        let l = A5Letters::new();
        let b2 = l.b.pow(2);
        let g3 = a5_power_genset(3).unwrap();
        assert_eq!(
            g3.generators(),
            &[
                PowerElement::new(vec![l.a.clone(), l.b.clone(), l.a.clone()]).unwrap(),
                PowerElement::new(vec![l.b.clone(), l.a.clone(), b2.clone()]).unwrap(),
            ]
        );
        let g8 = a5_power_genset(8).unwrap();
        let (a, b, c) = (&l.a, &l.b, &l.c);
        assert_eq!(
            g8.generators()[0].parts(),
            &[a, b, a, &b2, c, b, c, &b2].map(Perm::clone)
        );
        assert_eq!(
            g8.generators()[1].parts(),
            &[b, a, &b2, a, b, c, &b2, c].map(Perm::clone)
        );
        let g1 = a5_power_genset(1).unwrap();
        assert_eq!(g1.column(1), vec![l.a.clone(), l.b.clone()]);
        assert!(a5_power_genset(0).is_err());
        assert!(a5_power_genset(9).is_err());
    }

    #[test]
    fn a5_power_columns_come_from_the_base_list() {
        let bases = a5_bases19();
        for k in 1..=8 {
            let g = a5_power_genset(k).unwrap();
            for slot in 1..=k {
                let col = g.column(slot);
                assert!(bases.contains(&(col[0].clone(), col[1].clone())));
            }
        }
    }

    #[test]
    fn validation_rejects_bad_sets() {
        let x = pe(&["(1 2 3)", "()"], 5);
        assert!(matches!(
            GenSet::alternating("d", "", vec![x.clone(), x.clone()]),
            Err(GenSetError::Duplicate(1, 0))
        ));
        assert!(matches!(
            GenSet::alternating("i", "", vec![PowerElement::identity(5, 2)]),
            Err(GenSetError::IdentityGenerator(0))
        ));
        assert!(matches!(
            GenSet::alternating("o", "", vec![pe(&["()", "(1 2)"], 5)]),
            Err(GenSetError::OddGenerator { index: 0, slot: 2 })
        ));
        assert!(GenSet::new("o", "", Coding::Symmetric, vec![pe(&["()", "(1 2)"], 5)]).is_ok());
        assert!(matches!(
            GenSet::alternating("s", "", vec![x, pe(&["(1 2 3)"], 5)]),
            Err(GenSetError::Shape(1, 5, 1, 5, 2))
        ));
        assert!(matches!(
            GenSet::alternating("e", "", vec![]),
            Err(GenSetError::Empty)
        ));
    }

    #[test]
    fn symmetrized_adds_inverses() {
        let g = a5_power_genset(1).unwrap();
        let s = g.symmetrized();
        // a is an involution, b is not
        assert_eq!(s.len(), 3);
        assert!(s.is_closed_under_inverse());
        assert!(!g.is_closed_under_inverse());
    }

    #[test]
    fn builtin_selectors() {
        assert_eq!(builtin("a4-power:3").unwrap().len(), 3);
        assert_eq!(builtin("an2:7").unwrap().degree(), 7);
        assert_eq!(builtin("a5-power:4").unwrap().width(), 4);
        assert_eq!(builtin("a5-bases19").unwrap().width(), 19);
        let c = builtin("canonical:a5-power:1:3").unwrap();
        assert_eq!((c.width(), c.len()), (3, 6));
        assert_eq!(c.name(), "canonical:a5-power:1:3");
        let c2 = builtin("canonical:a5-power:2:2").unwrap();
        assert_eq!((c2.width(), c2.len()), (4, 4));
        for bad in [
            "nosuch",
            "a5-power:x",
            "a5-power:9",
            "canonical:a5-power:1",
            "zz:3",
        ] {
            assert!(builtin(bad).is_err(), "{bad}");
        }
        for name in builtin_names() {
            assert_eq!(builtin(&name).unwrap().name(), name);
        }
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = a5_power_genset(4).unwrap();
        let back = GenSet::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        let dup = r#"{"name":"x","degree":5,"width":1,"generators":[["(1 2 3)"],["(1 2 3)"]],"provenance":""}"#;
        assert!(matches!(
            GenSet::from_json(dup),
            Err(GenSetError::Duplicate(1, 0))
        ));
        let odd = r#"{"name":"x","degree":5,"width":1,"generators":[["(1 2)"]],"provenance":"","group":"alternating"}"#;
        assert!(matches!(
            GenSet::from_json(odd),
            Err(GenSetError::OddGenerator { .. })
        ));
        let wrong_width =
            r#"{"name":"x","degree":5,"width":2,"generators":[["(1 2 3)"]],"provenance":""}"#;
        assert!(matches!(
            GenSet::from_json(wrong_width),
            Err(GenSetError::Shape(..))
        ));
        assert!(matches!(
            GenSet::from_json("{"),
            Err(GenSetError::Json { .. })
        ));
        let bad_cycle =
            r#"{"name":"x","degree":5,"width":1,"generators":[["(1 9)"]],"provenance":""}"#;
        assert!(GenSet::from_json(bad_cycle).is_err());
    }
}
