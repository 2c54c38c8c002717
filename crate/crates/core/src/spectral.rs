//! The minimum Roman dominating distance matrix, its exact characteristic
//! polynomial, and its spectrum.
//!
//! Two independent routes to the eigenvalues are provided: the exact integer
//! characteristic polynomial (Faddeev–LeVerrier over big integers) and cyclic
//! Jacobi rotations in `f64`. [`poly_roots_check`] ties them together.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::SpectralError;
use crate::graph::DistanceMatrix;
use crate::roman::{check_rdf_with, RomanDominatingFunction};

/// Default largest order accepted by [`char_poly`].
pub const DEFAULT_CHARPOLY_LIMIT: usize = 64;

/// Symmetric integer matrix: graph distances off the diagonal, Roman labels on
/// it. Unreachable pairs are stored as 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MrddMatrix {
    n: usize,
    entries: Vec<i64>,
    rdf_weight: usize,
}

impl MrddMatrix {
    /// Wraps an arbitrary symmetric integer matrix given by rows. The recorded
    /// RDF weight is the trace.
    ///
    /// # Panics
    ///
    /// If the rows are not square and symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
        let entries: Vec<i64> = rows.iter().flatten().copied().collect();
        for i in 0..n {
            for j in 0..i {
                assert_eq!(
                    entries[i * n + j],
                    entries[j * n + i],
                    "matrix is not symmetric"
                );
            }
        }
        let trace: i64 = (0..n).map(|i| entries[i * n + i]).sum();
        MrddMatrix {
            n,
            entries,
            rdf_weight: trace.max(0) as usize,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[i64]>::to_vec)
            .take(self.n)
            .collect()
    }

    /// Weight of the RDF that supplied the diagonal.
    pub fn rdf_weight(&self) -> usize {
        self.rdf_weight
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `Σ a_ij²`, which equals `Σ ρ_k²` for a symmetric matrix.
    pub fn frobenius_squared(&self) -> i64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// `diag(self, other)`.
    pub fn block_diagonal(&self, other: &MrddMatrix) -> MrddMatrix {
        let n = self.n + other.n;
        let mut entries = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                entries[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        MrddMatrix {
            n,
            entries,
            rdf_weight: self.rdf_weight + other.rdf_weight,
        }
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> MrddMatrix {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        MrddMatrix {
            n,
            entries,
            rdf_weight: self.rdf_weight,
        }
    }
}

/// Builds the matrix from a distance matrix and a Roman dominating function,
/// which must be valid for the graph the distances describe.
pub fn build_mrdd(
    dm: &DistanceMatrix,
    f: &RomanDominatingFunction,
) -> Result<MrddMatrix, SpectralError> {
    let n = dm.dim();
    if f.len() != n {
        return Err(SpectralError::DimensionMismatch {
            matrix: n,
            labels: f.len(),
        });
    }
    check_rdf_with(n, f, |u, v| dm.get(u, v) == Some(1)).map_err(SpectralError::InvalidRdf)?;

    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                entries[i * n + j] = dm.get(i, j).map_or(0, i64::from);
            }
        }
    }
    for &v in &f.v1 {
        entries[v * n + v] = 1;
    }
    for &v in &f.v2 {
        entries[v * n + v] = 2;
    }
    Ok(MrddMatrix {
        n,
        entries,
        rdf_weight: f.weight(),
    })
}

/// Monic integer polynomial `Σ c_k ρ^k`, coefficients stored `c_0..c_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a polynomial needs at least one coefficient"
        );
        CharPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_0`, which is `(-1)^n det(A)`.
    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly { coeffs: out }
    }

    pub fn pow(&self, exp: usize) -> CharPoly {
        (0..exp).fold(CharPoly::one(), |acc, _| acc.mul(self))
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Coefficients `c_0..c_n` as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl fmt::Display for CharPoly {
    /// `ρ^3 - 2ρ^2 - 3ρ`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("ρ")?,
                _ => write!(f, "ρ^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact characteristic polynomial `det(ρI - A)` of order at most
/// [`DEFAULT_CHARPOLY_LIMIT`].
pub fn char_poly(a: &MrddMatrix) -> Result<CharPoly, SpectralError> {
    char_poly_with_limit(a, DEFAULT_CHARPOLY_LIMIT)
}

/// Faddeev–LeVerrier: `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`,
/// `M_{k+1} = A M_k + c_{n-k} I`.
///
/// Every `M_k` is an integer matrix, so each division by `k` must be exact;
/// that is asserted at every step.
pub fn char_poly_with_limit(a: &MrddMatrix, limit: usize) -> Result<CharPoly, SpectralError> {
    let n = a.dim();
    if n > limit {
        return Err(SpectralError::TooLarge { n, limit });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return Ok(CharPoly { coeffs });
    }

    let mut m: Vec<BigInt> = (0..n * n)
        .map(|idx| {
            if idx % (n + 1) == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let mut am = vec![BigInt::zero(); n * n];

    for k in 1..=n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    let x = a.get(i, l);
                    if x != 0 {
                        acc += &m[l * n + j] * x;
                    }
                }
                am[i * n + j] = acc;
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i * (n + 1)]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(
            r.is_zero(),
            "Faddeev–LeVerrier step {k}: trace {trace} not divisible by {k}"
        );
        let c = -q;
        if k < n {
            std::mem::swap(&mut m, &mut am);
            for i in 0..n {
                m[i * (n + 1)] += &c;
            }
        }
        coeffs[n - k] = c;
    }
    Ok(CharPoly { coeffs })
}

/// Stopping rule for [`eigenvalues`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    /// Converged once the off-diagonal Frobenius norm drops below
    /// `tol` times the initial Frobenius norm.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            tol: 1e-10,
            max_sweeps: 100,
        }
    }
}

impl JacobiOptions {
    pub fn with_tol(tol: f64) -> Self {
        JacobiOptions {
            tol,
            ..Self::default()
        }
    }
}

/// Real spectrum of a symmetric matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `Σ |ρ_k|`.
    pub energy: f64,
    /// Off-diagonal Frobenius norm at termination relative to the initial
    /// Frobenius norm.
    pub residual: f64,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, residual: f64) -> Self {
        // stable: ties keep discovery order
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let energy = compensated_sum(eigenvalues.iter().map(|x| x.abs()));
        Spectrum {
            eigenvalues,
            energy,
            residual,
        }
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        compensated_sum(self.eigenvalues.iter().copied())
    }

    pub fn sum_of_squares(&self) -> f64 {
        compensated_sum(self.eigenvalues.iter().map(|x| x * x))
    }
}

/// Neumaier summation.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

pub fn eigenvalues(a: &MrddMatrix, opts: JacobiOptions) -> Result<Spectrum, SpectralError> {
    symmetric_eigenvalues(&a.to_f64(), a.dim(), opts)
}

/// Cyclic Jacobi on a dense symmetric `n × n` matrix in row-major order.
pub fn symmetric_eigenvalues(
    matrix: &[f64],
    n: usize,
    opts: JacobiOptions,
) -> Result<Spectrum, SpectralError> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(SpectralError::BadTolerance(opts.tol));
    }
    assert_eq!(matrix.len(), n * n, "matrix is not n x n");
    let mut a = matrix.to_vec();
    let norm0 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let relative_off = |a: &[f64]| -> f64 {
        if norm0 == 0.0 {
            return 0.0;
        }
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt() / norm0
    };

    let mut off = relative_off(&a);
    let mut sweeps = 0;
    while off >= opts.tol {
        if sweeps == opts.max_sweeps {
            return Err(SpectralError::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = relative_off(&a);
    }
    let diag = (0..n).map(|i| a[i * (n + 1)]).collect();
    Ok(Spectrum::from_eigenvalues(diag, off))
}

/// Annihilates `a[p][q]` with a plane rotation.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

pub fn energy(s: &Spectrum) -> f64 {
    compensated_sum(s.eigenvalues.iter().map(|x| x.abs()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootResidual {
    pub eigenvalue: f64,
    /// `|p(ρ)| / (1 + Σ |c_k| |ρ|^k)`, with `p(ρ)` evaluated exactly.
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootCheckReport {
    pub roots: Vec<RootResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Checks that every computed eigenvalue is (numerically) a root of `p`.
///
/// The coefficient norm in the denominator is weighted by the evaluation
/// point, so the residual measures the relative backward error of `p(ρ)` and
/// stays meaningful for high-degree polynomials with large roots.
pub fn poly_roots_check(p: &CharPoly, s: &Spectrum, tol: f64) -> RootCheckReport {
    assert_eq!(
        p.degree(),
        s.eigenvalues.len(),
        "degree and spectrum size differ"
    );
    let coeffs_f64: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let roots: Vec<RootResidual> = s
        .eigenvalues
        .iter()
        .map(|&rho| {
            let x = BigRational::from_float(rho).expect("eigenvalues are finite");
            let value = p.eval_exact(&x).abs().to_f64().unwrap_or(f64::INFINITY);
            let scale = compensated_sum(
                coeffs_f64
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * rho.abs().powi(k as i32)),
            );
            let residual = value / (1.0 + scale);
            RootResidual {
                eigenvalue: rho,
                residual,
                pass: residual < tol,
            }
        })
        .collect();
    let max_residual = roots.iter().map(|r| r.residual).fold(0.0, f64::max);
    RootCheckReport {
        pass: roots.iter().all(|r| r.pass),
        max_residual,
        roots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, generate, Family, FamilySpec, Graph};
    use crate::roman::min_roman_domination;
    use crate::test_graphs::{nine_vertex_graph, NINE_VERTEX_MATRIX};

    fn family(f: Family, p: usize) -> Graph {
        generate(FamilySpec::new(f, p).unwrap()).unwrap()
    }

    fn matrix_of(g: &Graph) -> MrddMatrix {
        let (_, f) = min_roman_domination(g).unwrap();
        build_mrdd(&all_pairs_distances(g), &f).unwrap()
    }

    /// Fraction-free Bareiss determinant, independent of Faddeev–LeVerrier.
    fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    /// `det(xI - A)` at an integer point.
    fn char_value(a: &MrddMatrix, x: i64) -> BigInt {
        let n = a.dim();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(if i == j { x } else { 0 } - a.get(i, j)))
                    .collect()
            })
            .collect();
        bareiss_det(m)
    }

    #[test]
    fn builds_small_matrices() {
        let k3 = matrix_of(&family(Family::Complete, 3));
        assert_eq!(k3.rows(), vec![vec![2, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);

        let star = matrix_of(&family(Family::Star, 4));
        assert_eq!(
            star.rows(),
            vec![
                vec![2, 1, 1, 1],
                vec![1, 0, 2, 2],
                vec![1, 2, 0, 2],
                vec![1, 2, 2, 0]
            ]
        );

        let nine = matrix_of(&nine_vertex_graph());
        let expected: Vec<Vec<i64>> = NINE_VERTEX_MATRIX.iter().map(|r| r.to_vec()).collect();
        assert_eq!(nine.rows(), expected);
        assert_eq!(nine.trace(), 4);
        assert_eq!(nine.rdf_weight(), 4);
        assert_eq!(nine.frobenius_squared(), 358);
    }

    #[test]
    fn build_rejects_bad_input() {
        let g = family(Family::Complete, 3);
        let dm = all_pairs_distances(&g);
        let short = RomanDominatingFunction::from_labels(&[2, 0]);
        assert!(matches!(
            build_mrdd(&dm, &short),
            Err(SpectralError::DimensionMismatch {
                matrix: 3,
                labels: 2
            })
        ));
        let undominated = RomanDominatingFunction::from_labels(&[1, 0, 1]);
        assert!(matches!(
            build_mrdd(&dm, &undominated),
            Err(SpectralError::InvalidRdf(_))
        ));
    }

    #[test]
    fn unreachable_pairs_become_zero() {
        let g = crate::graph::disjoint_union(
            &family(Family::Complete, 2),
            &family(Family::Complete, 2),
        );
        let a = matrix_of(&g);
        assert_eq!(a.get(0, 2), 0);
        assert_eq!(a.get(1, 3), 0);
        assert_eq!(a.get(2, 3), 1);
    }

    #[test]
    fn exact_char_polys() {
        let nine = matrix_of(&nine_vertex_graph());
        let p = char_poly(&nine).unwrap();
        assert_eq!(
            p,
            CharPoly::from_i64(&[444, 2410, 4438, 2659, -1284, -2339, -1034, -171, -4, 1])
        );
        assert_eq!(
            p.to_string(),
            "ρ^9 - 4ρ^8 - 171ρ^7 - 1034ρ^6 - 2339ρ^5 - 1284ρ^4 + 2659ρ^3 + 4438ρ^2 + 2410ρ + 444"
        );

        let one = MrddMatrix::from_rows(&[vec![2]]);
        assert_eq!(char_poly(&one).unwrap(), CharPoly::from_i64(&[-2, 1]));

        let k3 = matrix_of(&family(Family::Complete, 3));
        assert_eq!(char_poly(&k3).unwrap(), CharPoly::from_i64(&[0, -3, -2, 1]));

        let empty = MrddMatrix::from_rows(&[]);
        assert_eq!(char_poly(&empty).unwrap(), CharPoly::one());
    }

    #[test]
    fn char_poly_agrees_with_bareiss() {
        for g in [
            nine_vertex_graph(),
            family(Family::Crown, 4),
            family(Family::HealthySpider, 5),
            family(Family::Cycle, 7),
        ] {
            let a = matrix_of(&g);
            let p = char_poly(&a).unwrap();
            assert_eq!(p.degree(), a.dim());
            assert_eq!(p.coeffs()[a.dim() - 1], BigInt::from(-a.trace()));
            for x in -3..=3 {
                assert_eq!(p.eval_i64(x), char_value(&a, x), "x = {x}");
            }
        }
    }

    #[test]
    fn char_poly_size_limit() {
        let a = matrix_of(&family(Family::Complete, 5));
        assert_eq!(
            char_poly_with_limit(&a, 4),
            Err(SpectralError::TooLarge { n: 5, limit: 4 })
        );
    }

    #[test]
    fn char_poly_serializes_as_strings() {
        let p = CharPoly::from_i64(&[-2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["-2","1"]"#);
        assert_eq!(CharPoly::from_i64(&[0, 0, 1]).to_string(), "ρ^2");
        assert_eq!(CharPoly::from_i64(&[-1, -1]).to_string(), "-ρ - 1");
    }

    #[test]
    fn jacobi_small_cases() {
        let k3 = matrix_of(&family(Family::Complete, 3));
        let s = eigenvalues(&k3, JacobiOptions::default()).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([3.0, 0.0, -1.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        assert!((energy(&s) - 4.0).abs() < 1e-12);

        let d = symmetric_eigenvalues(
            &[0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0],
            3,
            JacobiOptions::default(),
        )
        .unwrap();
        assert_eq!(d.eigenvalues, vec![2.0, 1.0, 0.0]);
        assert_eq!(d.residual, 0.0);

        let star3 = matrix_of(&family(Family::Star, 3));
        let s = eigenvalues(&star3, JacobiOptions::default()).unwrap();
        assert!((s.energy - 6.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_nine_vertex_spectrum() {
        let a = matrix_of(&nine_vertex_graph());
        let s = eigenvalues(&a, JacobiOptions::default()).unwrap();
        let printed = [
            17.5476, 1.2642, -0.4384, -0.8397, -1.0, -1.0, -3.0, -3.9721, -4.5615,
        ];
        for (got, want) in s.eigenvalues.iter().zip(printed) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
        assert!((s.energy - 33.6237).abs() < 1e-3);
        assert!((s.sum() - 4.0).abs() < 1e-9);
        assert!((s.sum_of_squares() - 358.0).abs() < 1e-8);
    }

    #[test]
    fn jacobi_errors() {
        let a = matrix_of(&nine_vertex_graph());
        assert!(matches!(
            eigenvalues(
                &a,
                JacobiOptions {
                    tol: 0.0,
                    max_sweeps: 10
                }
            ),
            Err(SpectralError::BadTolerance(_))
        ));
        assert!(matches!(
            eigenvalues(
                &a,
                JacobiOptions {
                    tol: 1e-12,
                    max_sweeps: 1
                }
            ),
            Err(SpectralError::NoConvergence { sweeps: 1, .. })
        ));
    }

    #[test]
    fn roots_cross_check() {
        let one = MrddMatrix::from_rows(&[vec![2]]);
        let s = eigenvalues(&one, JacobiOptions::default()).unwrap();
        let r = poly_roots_check(&char_poly(&one).unwrap(), &s, 1e-12);
        assert!(r.pass);
        assert_eq!(r.max_residual, 0.0);

        let k3 = matrix_of(&family(Family::Complete, 3));
        let s = eigenvalues(&k3, JacobiOptions::default()).unwrap();
        assert!(poly_roots_check(&char_poly(&k3).unwrap(), &s, 1e-8).pass);

        let nine = matrix_of(&nine_vertex_graph());
        let s = eigenvalues(&nine, JacobiOptions::default()).unwrap();
        let r = poly_roots_check(&char_poly(&nine).unwrap(), &s, 1e-6);
        assert!(r.pass, "{r:?}");

        // a perturbed eigenvalue is caught
        let mut bad = s.clone();
        bad.eigenvalues[0] += 1e-2;
        assert!(!poly_roots_check(&char_poly(&nine).unwrap(), &bad, 1e-6).pass);
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let v = [1e16, 1.0, -1e16, 1.0];
        assert_eq!(compensated_sum(v), 2.0);
    }
}
