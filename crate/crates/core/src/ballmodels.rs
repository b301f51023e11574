//! Rational models of spaces of unparametrized ball embeddings.
//!
//! For each chamber the stabilizer of a packing is modeled by polynomial
//! generators `T_i` (one per circle, with `T_i T_j = 0` for circles in distinct
//! wedge factors) and the embedding space by adjoining `β` (degree 3) and `γ`
//! (degree 5) with
//!
//! ```text
//! dβ = Σ mᵢ Tᵢ²    mᵢ = aᵢ² + aᵢbᵢ + bᵢ²
//! dγ = Σ nᵢ Tᵢ³    nᵢ = aᵢ²bᵢ + aᵢbᵢ²
//! ```
//!
//! where circle `i` sits in the maximal torus with weights `(aᵢ, bᵢ)`. The two
//! torus circles are pinned to `(1,0)` and `(0,1)`, for which the two sums
//! become the images `t₁²+t₁t₂+t₂²` and `t₁²t₂+t₁t₂²` of the generators of
//! `H*(BSU(3))`. A single ball has stabilizer `U(2)`, modeled by its Chern
//! classes. Four small balls are handled by the Kriz model of four points.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::One;

use crate::chambers::ChamberLabel;
use crate::dga::{cohomology, verify_presentation, CohomologyReport, DgaSpec, PresentationReport};
use crate::error::{Error, Result};
use crate::gradedalg::{graded_basis, ideal_member, GPolynomial, Generator, GeneratorTable, PresentedAlgebra};
use crate::kriz::{kriz_model, KrizParams};
use crate::linalg::Echelon;
use crate::rational::{int, Rational};

/// Weights `(aᵢ, bᵢ)` of the circles not pinned to the standard torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CircleWeights {
    pairs: Vec<(i64, i64)>,
}

impl CircleWeights {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self> {
        if let Some(&(a, b)) = pairs.iter().find(|p| **p == (0, 0)) {
            return Err(Error::InvalidWeight { a, b });
        }
        Ok(Self { pairs })
    }

    /// `count` copies of `(1, 1)`.
    pub fn uniform(count: usize) -> Self {
        Self { pairs: vec![(1, 1); count] }
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `aᵢ² + aᵢbᵢ + bᵢ²`, positive for every valid pair.
    pub fn m(&self, i: usize) -> i64 {
        let (a, b) = self.pairs[i];
        a * a + a * b + b * b
    }

    /// `aᵢ²bᵢ + aᵢbᵢ²`.
    pub fn n(&self, i: usize) -> i64 {
        let (a, b) = self.pairs[i];
        a * a * b + a * b * b
    }
}

impl fmt::Display for CircleWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a},{b}")).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Parses `a,b;a,b;…`; the empty string gives no weights.
impl FromStr for CircleWeights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        let mut pairs = Vec::new();
        for part in s.split(';') {
            let mut it = part.split(',').map(|x| x.trim().parse::<i64>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => pairs.push((a, b)),
                _ => return Err(Error::Parse(format!("bad weight pair `{part}`"))),
            }
        }
        Self::new(pairs)
    }
}

/// Number of free circle weights for a supported `(n, chamber)` pair.
pub fn circle_count(n: usize, chamber: ChamberLabel) -> Result<usize> {
    match (n, chamber) {
        (1 | 2, ChamberLabel::Unique) | (3, ChamberLabel::Big) => Ok(0),
        (3, ChamberLabel::Small) => Ok(1),
        (4, ChamberLabel::C(r)) if r <= 4 => Ok(r as usize),
        (4, ChamberLabel::C(5)) => Ok(0),
        _ => Err(Error::UnsupportedModel { n, chamber: chamber.to_string() }),
    }
}

fn check_weights(n: usize, chamber: ChamberLabel, w: &CircleWeights) -> Result<usize> {
    let expected = circle_count(n, chamber)?;
    if w.len() != expected {
        return Err(Error::WeightCount { expected, found: w.len() });
    }
    Ok(expected)
}

fn t_name(i: usize) -> String {
    format!("T{i}")
}

/// The stabilizer generators of a chamber together with `β`, `γ`.
struct Layout {
    gens: Vec<Generator>,
    /// Pairs of `T` indices (1-based) with vanishing product.
    orthogonal: Vec<(usize, usize)>,
    /// Text of dβ and dγ.
    d_beta: String,
    d_gamma: String,
}

fn signed_sum(terms: &[(i64, String)]) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if *c == 0 {
            continue;
        }
        let sep = match (out.is_empty(), *c < 0) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sep);
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

const TORUS_BETA: &str = "T1^2 + T1*T2 + T2^2";
const TORUS_GAMMA: &str = "T1^2*T2 + T1*T2^2";

fn layout(n: usize, chamber: ChamberLabel, w: &CircleWeights) -> Result<Layout> {
    let circles = check_weights(n, chamber, w)?;
    let mut gens = Vec::new();
    let mut orthogonal = Vec::new();
    let (d_beta, d_gamma) = match (n, chamber) {
        (1, _) => {
            gens.push(Generator::new("c1", 2));
            gens.push(Generator::new("c2", 4));
            (String::from("c1^2 - c2"), String::from("c1*c2"))
        }
        (2, _) | (3, ChamberLabel::Big) => {
            gens.push(Generator::new("T1", 2));
            gens.push(Generator::new("T2", 2));
            (String::from(TORUS_BETA), String::from(TORUS_GAMMA))
        }
        (3, ChamberLabel::Small) => {
            for i in 1..=3 {
                gens.push(Generator::new(&t_name(i), 2));
            }
            orthogonal.extend([(1, 3), (2, 3)]);
            (
                format!("{TORUS_BETA} + {}", signed_sum(&[(w.m(0), String::from("T3^2"))])),
                format!("{TORUS_GAMMA} + {}", signed_sum(&[(w.n(0), String::from("T3^3"))])),
            )
        }
        (4, ChamberLabel::C(_)) => {
            for i in 1..=circles {
                gens.push(Generator::new(&t_name(i), 2));
                for j in 1..i {
                    orthogonal.push((j, i));
                }
            }
            let beta: Vec<_> = (0..circles).map(|i| (w.m(i), format!("T{}^2", i + 1))).collect();
            let gamma: Vec<_> = (0..circles).map(|i| (w.n(i), format!("T{}^3", i + 1))).collect();
            (signed_sum(&beta), signed_sum(&gamma))
        }
        _ => return Err(Error::UnsupportedModel { n, chamber: chamber.to_string() }),
    };
    Ok(Layout { gens, orthogonal, d_beta, d_gamma })
}

/// Default degree cap: 10 up to three balls, 14 for four.
pub fn default_cap(n: usize) -> u32 {
    if n <= 3 {
        10
    } else {
        14
    }
}

/// The model of the embedding space for a chamber.
///
/// Four small balls (`C_5`) are modeled by the Kriz model of four points in
/// the plane, which takes no weights.
pub fn iemb_model(n: usize, chamber: ChamberLabel, w: &CircleWeights, degree_cap: u32) -> Result<DgaSpec> {
    if (n, chamber) == (4, ChamberLabel::C(5)) {
        check_weights(n, chamber, w)?;
        return Ok(kriz_model(KrizParams::new(2, 4)?, degree_cap));
    }
    let l = layout(n, chamber, w)?;
    let mut gens = l.gens;
    gens.push(Generator::new("beta", 3));
    gens.push(Generator::new("gamma", 5));
    let table = GeneratorTable::new(gens)?;
    let rels: Vec<String> = l.orthogonal.iter().map(|(i, j)| format!("T{i}*T{j}")).collect();
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    let algebra = PresentedAlgebra::parse(table, &rels)?;
    DgaSpec::parse(algebra, &[("beta", &l.d_beta), ("gamma", &l.d_gamma)], degree_cap)
}

/// Presentation of the cohomology of the stabilizer's classifying space.
///
/// For four small balls this is the algebra `Λ(α₁..α₄, η₁, η₂)/I` with
/// `|αᵢ| = 2`, `|ηᵢ| = 5`.
pub fn bstab_presentation(n: usize, chamber: ChamberLabel) -> Result<PresentedAlgebra> {
    if (n, chamber) == (4, ChamberLabel::C(5)) {
        return Ok(small_four_stabilizer());
    }
    let w = CircleWeights::uniform(circle_count(n, chamber)?);
    let l = layout(n, chamber, &w)?;
    let table = GeneratorTable::new(l.gens)?;
    let rels: Vec<String> = l.orthogonal.iter().map(|(i, j)| format!("T{i}*T{j}")).collect();
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    PresentedAlgebra::parse(table, &rels)
}

fn small_four_generators() -> Arc<GeneratorTable> {
    let mut gens: Vec<Generator> = (1..=4).map(|i| Generator::new(&format!("alpha{i}"), 2)).collect();
    gens.push(Generator::new("eta1", 5));
    gens.push(Generator::new("eta2", 5));
    GeneratorTable::new(gens).expect("well-formed table")
}

fn with_eta_relations(mut rels: Vec<String>) -> Vec<String> {
    for i in 1..=2 {
        for j in 1..=4 {
            for k in j + 1..=4 {
                rels.push(format!("eta{i}*(alpha{j} - alpha{k})"));
            }
        }
    }
    rels.push(String::from("eta1*eta2"));
    rels
}

fn parse_algebra(table: Arc<GeneratorTable>, rels: &[String]) -> PresentedAlgebra {
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    PresentedAlgebra::parse(table, &rels).expect("valid relations")
}

/// The stabilizer cohomology ring for four small balls, with the quadratic
/// relations
///
/// ```text
/// α₁² − α₂² + α₁αᵢ − α₂αᵢ,  α₂² − αᵢ² + α₁α₂ − α₁αᵢ   (i = 3, 4)
/// α₃² − α₄² + α₁α₃ − α₁α₄
/// ```
///
/// together with `ηᵢ(αⱼ − αₖ)` and `η₁η₂`. The five quadratic relations are
/// linearly dependent (the second for `i = 3`, minus the second for `i = 4`,
/// plus the last vanishes), so the degree-4 piece has dimension 6.
pub fn small_four_stabilizer() -> PresentedAlgebra {
    let mut rels = Vec::new();
    for i in [3, 4] {
        rels.push(format!("alpha1^2 - alpha2^2 + alpha1*alpha{i} - alpha2*alpha{i}"));
        rels.push(format!("alpha2^2 - alpha{i}^2 + alpha1*alpha2 - alpha1*alpha{i}"));
    }
    rels.push(String::from("alpha3^2 - alpha4^2 + alpha1*alpha3 - alpha1*alpha4"));
    parse_algebra(small_four_generators(), &with_eta_relations(rels))
}

/// Like [`small_four_stabilizer`] but with quadratic relations spanned by all
/// differences `Δ_ab − Δ_cd` of the pulled-back diagonal classes
/// `Δ_ab = α_a² + α_aα_b + α_b²`. Every quadratic relation of
/// [`small_four_stabilizer`] is such a difference; this ideal also contains
/// the ones involving `Δ₃₄`.
pub fn small_four_stabilizer_diagonal() -> PresentedAlgebra {
    let delta = |a: usize, b: usize| format!("(alpha{a}^2 + alpha{a}*alpha{b} + alpha{b}^2)");
    let rels = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        .iter()
        .map(|&(a, b)| format!("{} - {}", delta(1, 2), delta(a, b)))
        .collect();
    parse_algebra(small_four_generators(), &with_eta_relations(rels))
}

/// `base ⊗ Λ(β, γ)` with `dβ = α₁²` and `dγ = α₁α₂²`, for one of the
/// small-ball stabilizer rings: the model of the four-ball embedding space
/// seen from the stabilizer side.
pub fn small_four_fibration_model(base: &PresentedAlgebra, degree_cap: u32) -> DgaSpec {
    let mut gens = base.table().generators().to_vec();
    gens.push(Generator::new("beta", 3));
    gens.push(Generator::new("gamma", 5));
    let table = GeneratorTable::new(gens).expect("well-formed table");
    let rels: Vec<String> = base.relations().iter().map(|r| r.to_string()).collect();
    let algebra = parse_algebra(table, &rels);
    DgaSpec::parse(algebra, &[("beta", "alpha1^2"), ("gamma", "alpha1*alpha2^2")], degree_cap)
        .expect("degrees match")
}

/// A presentation of the cohomology of a model together with the images of
/// its generators as cocycles.
#[derive(Clone, Debug)]
pub struct CohomologyPresentation {
    pub algebra: PresentedAlgebra,
    pub gen_map: Vec<GPolynomial>,
}

/// The weighted presentation of the embedding-space cohomology for every
/// chamber except four small balls.
///
/// The weights enter as `Σ mᵢTᵢ²`; rescaling `αᵢ = √mᵢ Tᵢ` would turn it into
/// the unweighted form but is irrational in general.
pub fn iemb_presentation(n: usize, chamber: ChamberLabel, w: &CircleWeights) -> Result<CohomologyPresentation> {
    let model = iemb_model(n, chamber, w, default_cap(n))?;
    let target = model.algebra().table().clone();
    let tp = |s: &str| GPolynomial::parse(&target, s);
    let (gens, rels, images): (Vec<Generator>, Vec<String>, Vec<GPolynomial>) = match (n, chamber) {
        (1, _) => (vec![Generator::new("T", 2)], vec![String::from("T^3")], vec![tp("c1")?]),
        (2, _) | (3, ChamberLabel::Big) => (
            vec![Generator::new("T1", 2), Generator::new("T2", 2)],
            vec![String::from(TORUS_BETA), String::from("T1^3")],
            vec![tp("T1")?, tp("T2")?],
        ),
        (3, ChamberLabel::Small) => {
            let (m, nn) = (w.m(0), w.n(0));
            let eta = signed_sum(&[(m, String::from("T3*gamma")), (-nn, String::from("T3^2*beta"))]);
            (
                vec![
                    Generator::new("T1", 2),
                    Generator::new("T2", 2),
                    Generator::new("T3", 2),
                    Generator::new("eta", 7),
                ],
                vec![
                    format!("{TORUS_BETA} + {m}*T3^2"),
                    String::from("T1*T3"),
                    String::from("T2*T3"),
                    String::from("T1^3"),
                    String::from("eta*T1"),
                    String::from("eta*T2"),
                ],
                vec![tp("T1")?, tp("T2")?, tp("T3")?, tp(&eta)?],
            )
        }
        (4, ChamberLabel::C(0)) => (
            vec![Generator::new("beta", 3), Generator::new("eta", 5)],
            Vec::new(),
            vec![tp("beta")?, tp("gamma")?],
        ),
        (4, ChamberLabel::C(r)) if (1..=4).contains(&r) => {
            let r = r as usize;
            let mut gens: Vec<Generator> = (1..=r).map(|i| Generator::new(&t_name(i), 2)).collect();
            gens.push(Generator::new("eta", 5));
            let mut rels = vec![signed_sum(
                &(0..r).map(|i| (w.m(i), format!("T{}^2", i + 1))).collect::<Vec<_>>(),
            )];
            for i in 1..=r {
                for j in i + 1..=r {
                    rels.push(format!("T{i}*T{j}"));
                }
            }
            let mut images: Vec<GPolynomial> = (1..=r).map(|i| tp(&t_name(i))).collect::<Result<_>>()?;
            images.push(small_eta(&target, w)?);
            (gens, rels, images)
        }
        _ => return Err(Error::UnsupportedModel { n, chamber: chamber.to_string() }),
    };
    let table = GeneratorTable::new(gens)?;
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    let algebra = PresentedAlgebra::parse(table, &rels)?;
    Ok(CohomologyPresentation { algebra, gen_map: images })
}

/// `η = (Πmⱼ)γ − Σᵢ nᵢ(Π_{j≠i} mⱼ) Tᵢ β` for the wedge-of-circles chambers.
fn small_eta(target: &Arc<GeneratorTable>, w: &CircleWeights) -> Result<GPolynomial> {
    let r = w.len();
    let prod: i64 = (0..r).map(|i| w.m(i)).product();
    let mut eta = GPolynomial::generator(target, "gamma")?.scale(&int(prod));
    for i in 0..r {
        let others: i64 = (0..r).filter(|j| *j != i).map(|j| w.m(j)).product();
        let term = GPolynomial::parse(target, &format!("T{}*beta", i + 1))?.scale(&int(w.n(i) * others));
        eta = eta.sub(&term)?;
    }
    Ok(eta)
}

/// Outcome of checking one presentation against its model.
#[derive(Clone, Debug)]
pub struct PresentationCheck {
    pub n: usize,
    pub chamber: ChamberLabel,
    pub weights: CircleWeights,
    pub report: PresentationReport,
}

/// Verifies the weighted presentation of a chamber through `degree_cap`.
pub fn check_presentation(
    n: usize,
    chamber: ChamberLabel,
    w: &CircleWeights,
    degree_cap: u32,
) -> Result<PresentationCheck> {
    let model = iemb_model(n, chamber, w, degree_cap)?;
    let p = iemb_presentation(n, chamber, w)?;
    let report = verify_presentation(&model, &p.algebra, &p.gen_map)?;
    Ok(PresentationCheck { n, chamber, weights: w.clone(), report })
}

/// Cohomology ranks of the model for each weight set; `true` when they all agree.
pub fn weight_independence_check(
    n: usize,
    chamber: ChamberLabel,
    weight_sets: &[CircleWeights],
    degree_cap: u32,
) -> Result<(bool, Vec<CohomologyReport>)> {
    let reports = weight_sets
        .iter()
        .map(|w| cohomology(&iemb_model(n, chamber, w, degree_cap)?))
        .collect::<Result<Vec<_>>>()?;
    let agree = reports.windows(2).all(|p| p[0].ranks == p[1].ranks);
    Ok((agree, reports))
}

/// One source relation of the comparison with the Ashraf–Berceanu ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationImage {
    pub relation: String,
    pub image: String,
    pub in_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbIsomorphismReport {
    pub relations: Vec<RelationImage>,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    /// Per-degree rank of the image of the source in the target.
    pub image_ranks: Vec<usize>,
    pub degree_cap: u32,
}

impl AbIsomorphismReport {
    pub fn relations_ok(&self) -> bool {
        self.relations.iter().all(|r| r.in_ideal)
    }

    pub fn dims_agree(&self) -> bool {
        self.source_dims == self.target_dims
    }

    pub fn surjective(&self) -> bool {
        self.image_ranks == self.target_dims
    }

    pub fn passed(&self) -> bool {
        self.relations_ok() && self.dims_agree() && self.surjective()
    }
}

/// The Ashraf–Berceanu ring `Λ(α₁,α₂,α₃,ζ)/(αᵢ²+αⱼ²+αᵢαⱼ, α₁³, ζ(αᵢ−αⱼ))`,
/// `|αᵢ| = 2`, `|ζ| = 7`, with its relations listed in the usual order.
pub fn ashraf_berceanu_ring() -> PresentedAlgebra {
    let table = GeneratorTable::new(vec![
        Generator::new("alpha1", 2),
        Generator::new("alpha2", 2),
        Generator::new("alpha3", 2),
        Generator::new("zeta", 7),
    ])
    .expect("well-formed table");
    PresentedAlgebra::parse(
        table,
        &[
            "alpha1^2 + alpha2^2 + alpha1*alpha2",
            "alpha1^2 + alpha3^2 + alpha1*alpha3",
            "alpha2^2 + alpha3^2 + alpha2*alpha3",
            "alpha1^3",
            "zeta*(alpha1 - alpha2)",
            "zeta*(alpha1 - alpha3)",
            "zeta*(alpha2 - alpha3)",
        ],
    )
    .expect("valid relations")
}

/// Maps the Ashraf–Berceanu ring into the presentation computed for three
/// small balls with third weight `(1,1)` (so `m₃ = 3` and the rescaling
/// constant is 1): `α₁ ↦ T₁+T₃`, `α₂ ↦ T₂+T₃`, `α₃ ↦ −T₁−T₂+T₃`, `ζ ↦ η`.
pub fn ab_isomorphism_check(degree_cap: u32) -> Result<AbIsomorphismReport> {
    let source = ashraf_berceanu_ring();
    let target = iemb_presentation(3, ChamberLabel::Small, &CircleWeights::uniform(1))?.algebra;
    let tt = target.table().clone();
    let images = vec![
        GPolynomial::parse(&tt, "T1 + T3")?,
        GPolynomial::parse(&tt, "T2 + T3")?,
        GPolynomial::parse(&tt, "-T1 - T2 + T3")?,
        GPolynomial::parse(&tt, "eta")?,
    ];
    let mut relations = Vec::new();
    for r in source.relations() {
        let image = r.substitute(&tt, &images)?;
        relations.push(RelationImage {
            relation: r.to_string(),
            image: image.to_string(),
            in_ideal: ideal_member(&target, &image)?,
        });
    }
    let mut source_dims = Vec::new();
    let mut target_dims = Vec::new();
    let mut image_ranks = Vec::new();
    for q in 0..=degree_cap {
        let sp = graded_basis(&source, q);
        let tp = graded_basis(&target, q);
        source_dims.push(sp.dimension());
        target_dims.push(tp.dimension());
        let mut span = Echelon::new();
        for m in sp.basis() {
            let img = GPolynomial::monomial(source.table(), m.clone(), Rational::one()).substitute(&tt, &images)?;
            span.insert(&tp.project(&img)?);
        }
        image_ranks.push(span.rank());
    }
    Ok(AbIsomorphismReport { relations, source_dims, target_dims, image_ranks, degree_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::cohomology;

    fn ranks(n: usize, c: ChamberLabel, w: &CircleWeights, cap: u32) -> Vec<usize> {
        cohomology(&iemb_model(n, c, w, cap).unwrap()).unwrap().ranks
    }

    #[test]
    fn weights() {
        let w: CircleWeights = "1,1;2,-1".parse().unwrap();
        assert_eq!((w.m(0), w.n(0), w.m(1), w.n(1)), (3, 2, 3, -2));
        assert_eq!(w.to_string(), "1,1;2,-1");
        assert!(matches!("0,0".parse::<CircleWeights>(), Err(Error::InvalidWeight { a: 0, b: 0 })));
        assert!("1".parse::<CircleWeights>().is_err());
        assert!("".parse::<CircleWeights>().unwrap().is_empty());
    }

    #[test]
    fn model_shapes() {
        let big = iemb_model(3, ChamberLabel::Big, &CircleWeights::default(), 10).unwrap();
        let d = big.differential_of_generators();
        assert_eq!(d[2].to_string(), "T1^2 + T1*T2 + T2^2");
        assert_eq!(d[3].to_string(), "T1^2*T2 + T1*T2^2");
        let small = iemb_model(3, ChamberLabel::Small, &"2,1".parse().unwrap(), 10).unwrap();
        assert_eq!(small.differential_of_generators()[4].to_string(), "T1^2*T2 + T1*T2^2 + 6*T3^3");
        assert_eq!(small.algebra().relations().len(), 2);
        let c2 = iemb_model(4, ChamberLabel::C(2), &CircleWeights::uniform(2), 14).unwrap();
        assert_eq!(c2.differential_of_generators()[2].to_string(), "3*T1^2 + 3*T2^2");
        assert_eq!(c2.differential_of_generators()[3].to_string(), "2*T1^3 + 2*T2^3");
        assert!(matches!(
            iemb_model(4, ChamberLabel::C(2), &CircleWeights::uniform(1), 14),
            Err(Error::WeightCount { expected: 2, found: 1 })
        ));
        assert!(iemb_model(5, ChamberLabel::C(2), &CircleWeights::uniform(2), 14).is_err());
    }

    #[test]
    fn small_chamber_ranks() {
        let one = ranks(1, ChamberLabel::Unique, &CircleWeights::default(), 8);
        assert_eq!(one, vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
        let c1 = ranks(4, ChamberLabel::C(1), &CircleWeights::uniform(1), 12);
        assert_eq!(&c1[..8], &[1, 0, 1, 0, 0, 1, 0, 1]);
        let c0 = ranks(4, ChamberLabel::C(0), &CircleWeights::default(), 10);
        assert_eq!(c0, vec![1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn stabilizer_presentations() {
        use crate::gradedalg::quotient_dimension;
        let big = bstab_presentation(3, ChamberLabel::Big).unwrap();
        assert!(big.relations().is_empty());
        assert_eq!(quotient_dimension(&big, 4), 3);
        let c0 = bstab_presentation(4, ChamberLabel::C(0)).unwrap();
        assert_eq!((0..6).map(|q| quotient_dimension(&c0, q)).collect::<Vec<_>>(), vec![1, 0, 0, 0, 0, 0]);
        let c5 = bstab_presentation(4, ChamberLabel::C(5)).unwrap();
        let dims: Vec<usize> = (0..8).map(|q| quotient_dimension(&c5, q)).collect();
        assert_eq!(dims, vec![1, 0, 4, 0, 6, 2, 7, 2]);
        let diag = small_four_stabilizer_diagonal();
        let dims: Vec<usize> = (0..8).map(|q| quotient_dimension(&diag, q)).collect();
        assert_eq!(dims, vec![1, 0, 4, 0, 5, 2, 5, 2]);
    }

    #[test]
    fn ashraf_berceanu_images() {
        let rep = ab_isomorphism_check(10).unwrap();
        assert_eq!(rep.relations[0].image, "T1^2 + T1*T2 + 3*T1*T3 + T2^2 + 3*T2*T3 + 3*T3^2");
        assert_eq!(rep.relations[4].image, "T1*eta - T2*eta");
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.target_dims, vec![1, 0, 3, 0, 3, 0, 1, 1, 0, 1, 0]);
    }
}
