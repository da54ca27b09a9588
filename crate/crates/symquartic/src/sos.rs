//! Zero-forcing non-SOS certificates and exact SOS identity checking.
//!
//! # Why a kernel computation proves "not a sum of squares"
//!
//! Any sum-of-squares decomposition of a quartic `f = h_1^2 + ... + h_t^2`
//! has *quadratic* summands, and at every real zero of `f` each summand must
//! itself vanish.  So if we can exhibit a finite set `Z` of zeros of `f` such
//! that the only quadratic form vanishing on all of `Z` is the zero form,
//! then every `h_t` is forced to be zero — contradicting `f != 0`.  That is
//! a complete, machine-checkable refutation.
//!
//! "Vanishes on `Z`" is a linear condition on the quadratic's coefficient
//! vector `(a_1..a_n, a_12..a_{n-1,n})`, one row per point, so the whole
//! argument reduces to: build the [vanishing constraint
//! matrix](vanishing_constraint_matrix), verify `Z` really consists of zeros
//! of `f` (exact evaluation), and check the matrix has trivial kernel (exact
//! elimination).  [`certify_not_sos`] packages those three steps into a
//! [`NonSosCertificate`]; when any step fails the verdict is
//! `inconclusive` — the method is sound but not complete, so it never claims
//! "is sos".
//!
//! The 0/1 points with coordinate weight `m` or `m+1` (with `m = floor(n/2)`)
//! are the canonical zero sets for the difference-quartic families; for
//! those weights the trivial-kernel fact also has a short structural proof
//! by row subtractions, which [`replay_lemma_subtractions`] re-derives on
//! randomized index choices as an independent cross-check of the
//! elimination.
//!
//! The flip side — *verifying* an explicit SOS identity — is handled by
//! [`verify_sos_identity`], which expands sums of squared products with
//! exact arithmetic and compares term maps.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::forms::make_l;
use crate::matrix::RatMatrix;
use crate::poly::{format_rational, rat, Point, Polynomial, Rational};

/// Default seed for the randomized lemma replay; recorded in certificates
/// so they can be reproduced byte-for-byte.
pub const DEFAULT_REPLAY_SEED: u64 = 1;

/// Number of randomized index choices the lemma replay checks per run.
pub const REPLAY_TRIALS: usize = 8;

/// A finite set of 0/1 points, described by the coordinate weights (numbers
/// of ones) it contains, in deterministic lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    n: usize,
    weights: Vec<usize>,
    points: Vec<Point>,
}

impl ZeroSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The weights, sorted ascending and deduplicated.
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// All 0/1 points in `n` coordinates whose weight (number of ones) lies in
/// `weights`, in lexicographic order on coordinate vectors.
pub fn enumerate_zero_points(n: usize, weights: &[usize]) -> Result<ZeroSet, Error> {
    let mut ws: Vec<usize> = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    for &w in &ws {
        if w > n {
            return Err(Error::WeightOutOfRange { weight: w, n });
        }
    }
    let mut raw: Vec<Vec<u32>> = Vec::new();
    for &w in &ws {
        let mut chosen = Vec::with_capacity(w);
        combinations(n, w, 0, &mut chosen, &mut |positions| {
            let mut coords = vec![0u32; n];
            for &p in positions {
                coords[p] = 1;
            }
            raw.push(coords);
        });
    }
    raw.sort_unstable();
    let points = raw
        .into_iter()
        .map(|coords| Point::new(coords.into_iter().map(|c| rat(c as i64)).collect()))
        .collect();
    Ok(ZeroSet {
        n,
        weights: ws,
        points,
    })
}

/// Visits every size-`w` subset of `start..n` (appended to `chosen`).
fn combinations(
    n: usize,
    w: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if w == 0 {
        visit(chosen);
        return;
    }
    // Leave enough positions for the remaining w - 1 picks.
    for p in start..=(n - w) {
        chosen.push(p);
        combinations(n, w - 1, p + 1, chosen, visit);
        chosen.pop();
    }
}

/// True iff `f` evaluates to exactly zero at every point of `z`.
pub fn verify_zeros(f: &Polynomial, z: &ZeroSet) -> Result<bool, Error> {
    Ok(first_nonzero(f, z)?.is_none())
}

/// The first point of `z` (in order) where `f` does not vanish, with its
/// value.
fn first_nonzero(f: &Polynomial, z: &ZeroSet) -> Result<Option<(Point, Rational)>, Error> {
    if f.var_count() != z.n {
        return Err(Error::VarCountMismatch {
            left: f.var_count(),
            right: z.n,
        });
    }
    for p in &z.points {
        let v = f.eval(p)?;
        if !v.is_zero() {
            return Ok(Some((p.clone(), v)));
        }
    }
    Ok(None)
}

/// Number of coefficients of a quadratic form in `n` variables:
/// `n` squares plus `n(n-1)/2` cross terms.
pub fn quadratic_basis_size(n: usize) -> usize {
    n + n * (n - 1) / 2
}

/// Column index of the cross-term coefficient `a_ij` (`i < j`) in the
/// quadratic coefficient layout (squares first, then pairs in lex order).
pub fn pair_column(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    n + i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// The coefficient vector of a quadratic form
/// `h = sum a_i x_i^2 + sum_{i<j} a_ij x_i x_j`, in the column layout used
/// by the vanishing constraint matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticCoefficientVector {
    n: usize,
    entries: Vec<Rational>,
}

impl QuadraticCoefficientVector {
    /// Wraps raw entries; the length must be `n + n(n-1)/2`.
    pub fn from_entries(n: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != quadratic_basis_size(n) {
            return Err(Error::VarCountMismatch {
                left: quadratic_basis_size(n),
                right: entries.len(),
            });
        }
        Ok(QuadraticCoefficientVector { n, entries })
    }

    /// Extracts the coefficient vector of a homogeneous quadratic.
    pub fn from_quadratic_form(h: &Polynomial) -> Result<Self, Error> {
        let n = h.var_count();
        if !h.is_zero() && h.homogeneous_degree() != Some(2) {
            return Err(Error::NotHomogeneous);
        }
        let mut entries = vec![Rational::zero(); quadratic_basis_size(n)];
        for (mono, c) in h.terms() {
            let support: Vec<usize> = (0..n).filter(|&i| mono.exponent(i) > 0).collect();
            match support.as_slice() {
                [i] => entries[*i] = c.clone(),
                [i, j] => entries[pair_column(n, *i, *j)] = c.clone(),
                _ => unreachable!("degree-2 monomial has one or two variables"),
            }
        }
        Ok(QuadraticCoefficientVector { n, entries })
    }

    /// The quadratic form these coefficients describe.
    pub fn to_quadratic_form(&self) -> Polynomial {
        let n = self.n;
        let mut terms = Vec::new();
        for i in 0..n {
            let mut exps = vec![0u32; n];
            exps[i] = 2;
            terms.push((exps, self.entries[i].clone()));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let mut exps = vec![0u32; n];
                exps[i] = 1;
                exps[j] = 1;
                terms.push((exps, self.entries[pair_column(n, i, j)].clone()));
            }
        }
        Polynomial::from_terms(n, terms).expect("arity matches")
    }

    /// Coefficient of `x_i^2`.
    pub fn square_coeff(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    /// Coefficient of `x_i x_j` (`i < j`).
    pub fn pair_coeff(&self, i: usize, j: usize) -> &Rational {
        &self.entries[pair_column(self.n, i, j)]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }
}

/// The row a single point contributes to the vanishing constraint system:
/// the quadratic monomial basis `x_1^2..x_n^2, x_1x_2..x_{n-1}x_n`
/// evaluated at the point.
pub fn quadratic_monomial_row(p: &Point) -> Vec<Rational> {
    let n = p.len();
    let mut row = Vec::with_capacity(quadratic_basis_size(n));
    for i in 0..n {
        row.push(p.coord(i) * p.coord(i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            row.push(p.coord(i) * p.coord(j));
        }
    }
    row
}

/// The linear system expressing "a quadratic form vanishes at every point
/// of `z`": one row per point, one column per quadratic coefficient.
pub fn vanishing_constraint_matrix(z: &ZeroSet) -> RatMatrix {
    let cols = quadratic_basis_size(z.n);
    let rows = z.points.iter().map(quadratic_monomial_row).collect();
    RatMatrix::from_rows(cols, rows).expect("rows have uniform length")
}

/// Dimension of the right kernel of a constraint matrix (re-exported here
/// because a zero answer is exactly what a certificate needs).
pub fn kernel_dimension(m: &RatMatrix) -> usize {
    m.kernel_dimension()
}

/// Why a certificate came back `inconclusive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// Some supplied point is not actually a zero of the form.
    ZeroCheckFailed { point: Point, value: Rational },
    /// Quadratics other than zero vanish on the whole set, so nothing is
    /// forced.
    NontrivialKernel { dimension: usize },
}

/// Certificate verdict: a proof of non-SOS-ness, or no information.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonSosVerdict {
    NotSos,
    Inconclusive(InconclusiveReason),
}

/// Result of the randomized structural cross-check; see
/// [`replay_lemma_subtractions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReplay {
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
}

/// A machine-checkable record that a quartic is not a sum of squares (or
/// that the zero-forcing argument did not apply).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSosCertificate {
    form_hash: String,
    n: usize,
    weights: Vec<usize>,
    point_count: usize,
    constraint_rows: usize,
    unknowns: usize,
    kernel_dimension: usize,
    verdict: NonSosVerdict,
    replay: Option<LemmaReplay>,
    replay_seed: u64,
}

impl NonSosCertificate {
    /// FNV-1a hash of the form's canonical serialization, hex encoded.
    pub fn form_hash(&self) -> &str {
        &self.form_hash
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn constraint_rows(&self) -> usize {
        self.constraint_rows
    }

    /// Number of quadratic coefficients, `n + n(n-1)/2`.
    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn kernel_dimension(&self) -> usize {
        self.kernel_dimension
    }

    pub fn verdict(&self) -> &NonSosVerdict {
        &self.verdict
    }

    pub fn is_not_sos(&self) -> bool {
        matches!(self.verdict, NonSosVerdict::NotSos)
    }

    /// The structural cross-check outcome, when the weights are the
    /// canonical `{m, m+1}` pair.
    pub fn replay(&self) -> Option<&LemmaReplay> {
        self.replay.as_ref()
    }

    /// Deterministic text rendering, stable for fixed inputs and seed.
    pub fn to_text(&self) -> String {
        let mut out = String::from("notsos certificate\n");
        out.push_str(&format!("form_hash: {}\n", self.form_hash));
        out.push_str(&format!("n: {}\n", self.n));
        let ws: Vec<String> = self.weights.iter().map(usize::to_string).collect();
        out.push_str(&format!("weights: {}\n", ws.join(",")));
        out.push_str(&format!("points: {}\n", self.point_count));
        out.push_str(&format!("constraint_rows: {}\n", self.constraint_rows));
        out.push_str(&format!("unknowns: {}\n", self.unknowns));
        out.push_str(&format!("kernel_dimension: {}\n", self.kernel_dimension));
        out.push_str(&format!("replay_seed: {}\n", self.replay_seed));
        match &self.replay {
            Some(r) => out.push_str(&format!(
                "replay: {} ({} trials)\n",
                if r.passed { "passed" } else { "FAILED" },
                r.trials
            )),
            None => out.push_str("replay: skipped (weights are not {m, m+1})\n"),
        }
        match &self.verdict {
            NonSosVerdict::NotSos => out.push_str("verdict: not_sos\n"),
            NonSosVerdict::Inconclusive(reason) => {
                out.push_str("verdict: inconclusive\n");
                match reason {
                    InconclusiveReason::ZeroCheckFailed { point, value } => {
                        out.push_str(&format!(
                            "reason: zero check failed at {point} (value {})\n",
                            format_rational(value)
                        ));
                    }
                    InconclusiveReason::NontrivialKernel { dimension } => {
                        out.push_str(&format!("reason: kernel dimension {dimension} > 0\n"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for NonSosCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn fnv1a_64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Hex FNV-1a hash of a polynomial's canonical serialization; certificates
/// carry this so a verifier can confirm which form they are about.
pub fn form_hash(f: &Polynomial) -> String {
    format!("{:016x}", fnv1a_64(f.to_canonical_string().as_bytes()))
}

/// Runs the zero-forcing argument with the default replay seed; see
/// [`certify_not_sos_with_seed`].
pub fn certify_not_sos(f: &Polynomial, z: &ZeroSet) -> Result<NonSosCertificate, Error> {
    certify_not_sos_with_seed(f, z, DEFAULT_REPLAY_SEED)
}

/// Runs the full zero-forcing argument on a nonzero homogeneous quartic:
/// verifies every point of `z` is a zero of `f`, builds the vanishing
/// constraint matrix, and computes its exact kernel dimension.
///
/// The verdict is `not_sos` exactly when both checks succeed (all zeros
/// verified and kernel trivial); any other outcome is `inconclusive`, never
/// "is sos" — the argument is sound but one-sided.  When the weights are the
/// canonical `{m, m+1}` pair the structural row-subtraction replay is run
/// with the given seed and recorded alongside.
///
/// Only quartics are accepted: their SOS summands are quadratics, which is
/// what makes "vanishing on zeros" a *linear* condition.  For higher even
/// degree the analogous constraints no longer pin down the summands, so the
/// engine refuses rather than over-claim.
pub fn certify_not_sos_with_seed(
    f: &Polynomial,
    z: &ZeroSet,
    seed: u64,
) -> Result<NonSosCertificate, Error> {
    if f.homogeneous_degree() != Some(4) {
        return Err(Error::NotQuartic);
    }
    let n = f.var_count();
    if z.n != n {
        return Err(Error::VarCountMismatch { left: n, right: z.n });
    }

    let zero_failure = first_nonzero(f, z)?;
    let matrix = vanishing_constraint_matrix(z);
    let kdim = matrix.kernel_dimension();

    let verdict = match (&zero_failure, kdim) {
        (None, 0) => NonSosVerdict::NotSos,
        (Some((point, value)), _) => NonSosVerdict::Inconclusive(
            InconclusiveReason::ZeroCheckFailed {
                point: point.clone(),
                value: value.clone(),
            },
        ),
        (None, dimension) => NonSosVerdict::Inconclusive(
            InconclusiveReason::NontrivialKernel { dimension },
        ),
    };

    // The structural cross-check applies to the canonical weight pair.
    let m = n / 2;
    let replay = if n >= 4 && z.weights == [m, m + 1] {
        Some(LemmaReplay {
            seed,
            trials: REPLAY_TRIALS,
            passed: replay_lemma_subtractions_with_seed(n, seed)?,
        })
    } else {
        None
    };

    Ok(NonSosCertificate {
        form_hash: form_hash(f),
        n,
        weights: z.weights.clone(),
        point_count: z.len(),
        constraint_rows: matrix.rows(),
        unknowns: matrix.cols(),
        kernel_dimension: kdim,
        verdict,
        replay,
        replay_seed: seed,
    })
}

/// Replays the structural proof that the `{m, m+1}`-weight constraint
/// matrix has trivial kernel, with the default seed.
pub fn replay_lemma_subtractions(n: usize) -> Result<bool, Error> {
    replay_lemma_subtractions_with_seed(n, DEFAULT_REPLAY_SEED)
}

/// Replays the structural proof on randomized index choices.
///
/// Let `m = floor(n/2)` and suppose a quadratic with coefficients `a_i`,
/// `a_ij` vanishes on all 0/1 points of weight `m` and `m+1`.  For any
/// disjoint choice of indices `i, j, k` and a set `S` with `|S| = m-1`:
///
/// * subtracting the row of `S ∪ {i}` from the row of `S ∪ {i, k}` leaves
///   `a_k + Σ_{l∈S} a_kl + a_ik = 0` — a difference row supported exactly
///   on those columns with coefficient 1;
/// * subtracting the analogous difference for `j` leaves `a_ik - a_jk = 0`,
///   i.e. the cross coefficients involving `k` all agree.
///
/// Together with the weight-`m` rows this forces every coefficient to a
/// common multiple `u`, and evaluating at a single weight-`m` point then
/// gives `u * (-m^2 + m(m-1)/2) = 0` whose scalar `-m(m+1)/2` is nonzero —
/// so `u = 0` and the quadratic is identically zero.  This function
/// verifies the two subtraction identities on `REPLAY_TRIALS` random
/// `(i, j, k, S)` choices and the scalar's nonvanishing, returning true
/// when all of them hold.
pub fn replay_lemma_subtractions_with_seed(n: usize, seed: u64) -> Result<bool, Error> {
    if n < 4 {
        return Err(Error::TooFewVariables { n, min: 4 });
    }
    let m = n / 2;

    // Final scalar of the proof: -m^2 + m(m-1)/2 = -m(m+1)/2, nonzero for
    // every m >= 1.
    let scalar = crate::poly::frac(-((m * m) as i64) * 2 + (m * (m - 1)) as i64, 2);
    if scalar.is_zero() {
        return Ok(false);
    }

    let mut rng = SplitMix64::new(seed);
    let cols = quadratic_basis_size(n);

    for _ in 0..REPLAY_TRIALS {
        let mut idx: Vec<usize> = (0..n).collect();
        shuffle(&mut idx, &mut rng);
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let mut s_set: Vec<usize> = idx[3..3 + (m - 1)].to_vec();
        s_set.sort_unstable();

        let diff_i = row_difference(n, &s_set, i, k);
        let diff_j = row_difference(n, &s_set, j, k);

        // Difference row for i: ones exactly at a_k, {a_kl : l in S}, a_ik.
        if diff_i != expected_difference_row(n, cols, &s_set, i, k) {
            return Ok(false);
        }
        if diff_j != expected_difference_row(n, cols, &s_set, j, k) {
            return Ok(false);
        }

        // Subtracting them isolates a_ik - a_jk.
        let mut second: Vec<Rational> = vec![Rational::zero(); cols];
        for (c, (a, b)) in second.iter_mut().zip(diff_i.iter().zip(&diff_j)) {
            *c = a - b;
        }
        let mut expected_second: Vec<Rational> = vec![Rational::zero(); cols];
        expected_second[pair_column(n, i.min(k), i.max(k))] = Rational::one();
        expected_second[pair_column(n, j.min(k), j.max(k))] = -Rational::one();
        if second != expected_second {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `row(S ∪ {extra, k}) - row(S ∪ {extra})` in the quadratic monomial
/// basis.
fn row_difference(n: usize, s_set: &[usize], extra: usize, k: usize) -> Vec<Rational> {
    let with = zero_one_point(n, s_set.iter().chain([&extra, &k]));
    let without = zero_one_point(n, s_set.iter().chain([&extra]));
    let a = quadratic_monomial_row(&with);
    let b = quadratic_monomial_row(&without);
    a.iter().zip(&b).map(|(x, y)| x - y).collect()
}

fn zero_one_point<'a>(n: usize, ones: impl Iterator<Item = &'a usize>) -> Point {
    let mut coords = vec![rat(0); n];
    for &i in ones {
        coords[i] = rat(1);
    }
    Point::new(coords)
}

fn expected_difference_row(
    n: usize,
    cols: usize,
    s_set: &[usize],
    extra: usize,
    k: usize,
) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); cols];
    row[k] = Rational::one();
    for &l in s_set {
        row[pair_column(n, l.min(k), l.max(k))] = Rational::one();
    }
    row[pair_column(n, extra.min(k), extra.max(k))] = Rational::one();
    row
}

/// An explicit sum-of-squares identity `target = Σ (g·h)^2`, stored as the
/// factor pairs whose products are squared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosIdentity {
    pub target: Polynomial,
    pub summands: Vec<(Polynomial, Polynomial)>,
}

impl SosIdentity {
    /// Serializes the summand list as concatenated polynomial blocks
    /// (`g_1, h_1, g_2, h_2, ...`), the inverse of [`parse_summands`].
    pub fn summands_to_text(&self) -> String {
        let mut out = String::new();
        for (g, h) in &self.summands {
            out.push_str(&g.to_canonical_string());
            out.push_str(&h.to_canonical_string());
        }
        out
    }
}

/// Parses a concatenation of polynomial blocks into factor pairs
/// `(g_1, h_1), (g_2, h_2), ...`; the block count must be even.
pub fn parse_summands(text: &str) -> Result<Vec<(Polynomial, Polynomial)>, Error> {
    let mut blocks: Vec<String> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("poly ") {
            blocks.push(String::new());
        }
        match blocks.last_mut() {
            Some(block) => {
                block.push_str(trimmed);
                block.push('\n');
            }
            None => {
                return Err(Error::Parse(
                    "summand text must start with a poly header".into(),
                ))
            }
        }
    }
    let polys: Vec<Polynomial> = blocks
        .iter()
        .map(|b| Polynomial::parse(b))
        .collect::<Result<_, _>>()?;
    if polys.len() % 2 != 0 {
        return Err(Error::Parse(format!(
            "summand list has {} polynomials; factor pairs need an even count",
            polys.len()
        )));
    }
    let mut pairs = Vec::with_capacity(polys.len() / 2);
    let mut it = polys.into_iter();
    while let (Some(g), Some(h)) = (it.next(), it.next()) {
        pairs.push((g, h));
    }
    Ok(pairs)
}

/// Expands `Σ (g·h)^2` with exact arithmetic and compares term maps with
/// the target.  Any arity mismatch simply fails the identity.
pub fn verify_sos_identity(id: &SosIdentity) -> bool {
    let n = id.target.var_count();
    let mut acc = Polynomial::zero(n);
    for (g, h) in &id.summands {
        let Ok(gh) = g.mul(h) else {
            return false;
        };
        let Ok(sum) = acc.add(&gh.pow(2)) else {
            return false;
        };
        acc = sum;
    }
    acc == id.target
}

/// The explicit SOS decomposition of the even difference quartic in `2m`
/// variables:
///
/// ```text
/// L_{2m} = Σ_{i<j} (x_i - x_j)^2 ( -(x_1 + ... + x_{2m}) + m(x_i + x_j) )^2
/// ```
///
/// packaged as factor pairs ready for [`verify_sos_identity`].
pub fn even_l_sos_identity(two_m: usize) -> Result<SosIdentity, Error> {
    if two_m % 2 != 0 || two_m < 4 {
        return Err(Error::FormParameter(format!(
            "the even-family decomposition needs an even argument >= 4, got {two_m}"
        )));
    }
    let n = two_m;
    let m = rat((two_m / 2) as i64);
    let target = make_l(n)?;
    let mut sum_all = Polynomial::zero(n);
    for v in 0..n {
        sum_all = &sum_all + &Polynomial::var(n, v);
    }
    let mut summands = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let g = &Polynomial::var(n, i) - &Polynomial::var(n, j);
            let pair_sum = &Polynomial::var(n, i) + &Polynomial::var(n, j);
            let h = &pair_sum.scale(&m) - &sum_all;
            summands.push((g, h));
        }
    }
    Ok(SosIdentity { target, summands })
}

/// Minimal deterministic PRNG (splitmix64) so certificates are byte-stable
/// across platforms and library versions.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

fn shuffle(items: &mut [usize], rng: &mut SplitMix64) {
    for i in (1..items.len()).rev() {
        let j = rng.below(i + 1);
        items.swap(i, j);
    }
}
