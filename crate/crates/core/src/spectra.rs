//! Seidel matrices, exact characteristic polynomials and the exact
//! positive-semidefiniteness test for `S(G) + sI`.
//!
//! The characteristic polynomial is computed with Faddeev–LeVerrier over
//! plain integers; only the final Taylor shift `p(x − s)` lives in ℤ[√2].
//! The roots of the shifted polynomial are the eigenvalues of `S + sI`, so
//! the sign pattern of its coefficients decides semidefiniteness and the
//! lowest nonzero coefficient gives the rank.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, MAX_VERTICES};
use crate::ring::QuadInt;
use crate::Family;

/// `S(G) = J − I − 2A(G)`: `−1` on edges, `+1` on non-edges, `0` on the diagonal.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct SeidelMatrix {
    graph: Graph,
}

impl SeidelMatrix {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        if i == j {
            0
        } else if self.graph.has_edge(i, j) {
            -1
        } else {
            1
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect()
    }
}

impl fmt::Debug for SeidelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub fn seidel_matrix(g: &Graph) -> SeidelMatrix {
    SeidelMatrix { graph: *g }
}

/// Integer polynomial, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial(pub Vec<i128>);

impl IntPolynomial {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.0
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

/// Polynomial over ℤ[√2], constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPolynomial(pub Vec<QuadInt>);

impl QuadPolynomial {
    pub fn coefficients(&self) -> &[QuadInt] {
        &self.0
    }

    /// Descartes criterion for a real-rooted polynomial of degree `n`:
    /// all roots are `≥ 0` iff `(−1)^(n−k) c_k ≥ 0` for every `k`. The
    /// multiplicity of the root 0 is the index of the lowest nonzero
    /// coefficient.
    pub fn verdict(&self) -> SpectralVerdict {
        let n = self.0.len() - 1;
        let psd = self
            .0
            .iter()
            .enumerate()
            .all(|(k, c)| {
                let s = c.sign();
                if (n - k) % 2 == 0 { s >= 0 } else { s <= 0 }
            });
        let zero_mult = self.0.iter().position(|c| !c.is_zero()).unwrap_or(n);
        SpectralVerdict { psd, rank: n - zero_mult }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpectralVerdict {
    pub psd: bool,
    /// Rank of `S + sI`; meaningful only when `psd` holds.
    pub rank: usize,
}

/// Running maximum of the absolute value of every integer produced by the
/// characteristic-polynomial and shift computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Magnitude {
    pub max: u128,
}

impl Magnitude {
    #[inline]
    pub fn observe(&mut self, x: i128) {
        let a = x.unsigned_abs();
        if a > self.max {
            self.max = a;
        }
    }

    #[inline]
    pub fn observe_quad(&mut self, x: QuadInt) {
        let a = x.max_abs_component();
        if a > self.max {
            self.max = a;
        }
    }

    pub fn merge(&mut self, other: Magnitude) {
        self.max = self.max.max(other.max);
    }
}

type Square = [[i128; MAX_VERTICES]; MAX_VERTICES];

const FL_SITE: &str = "Faddeev-LeVerrier";

#[inline]
fn add(x: i128, y: i128) -> Result<i128> {
    x.checked_add(y).ok_or(Error::Overflow(FL_SITE))
}

/// Faddeev–LeVerrier on `S(G)`; writes `c_0..=c_n` into `out`.
///
/// `M_1 = I`, `c_{n−k} = −tr(S·M_k)/k`, `M_{k+1} = S·M_k + c_{n−k}·I`.
/// Every `M_k` is a polynomial in `S`, hence symmetric, so only the upper
/// triangle of each product is formed.
fn faddeev_leverrier(g: &Graph, mag: &mut Magnitude, out: &mut [i128; MAX_VERTICES + 1]) -> Result<()> {
    let n = g.order();
    let adj = g.raw_rows();
    out[n] = 1;
    if n == 0 {
        return Ok(());
    }
    let mut m: Square = [[0; MAX_VERTICES]; MAX_VERTICES];
    let mut next: Square = [[0; MAX_VERTICES]; MAX_VERTICES];
    for (i, row) in m.iter_mut().enumerate().take(n) {
        row[i] = 1;
    }
    let mut colsum = [0i128; MAX_VERTICES];
    let mut acc = [0i128; MAX_VERTICES];
    for k in 1..=n {
        // tr(S·M) = 2 Σ_{i<j} s_ij m_ij
        let mut half = 0i128;
        for i in 0..n {
            let row = &m[i];
            let mut plus = 0i128;
            let mut minus = 0i128;
            for j in i + 1..n {
                if adj[i] >> j & 1 == 1 {
                    minus = add(minus, row[j])?;
                } else {
                    plus = add(plus, row[j])?;
                }
            }
            half = add(half, plus.checked_sub(minus).ok_or(Error::Overflow(FL_SITE))?)?;
        }
        let trace = half.checked_mul(2).ok_or(Error::Overflow(FL_SITE))?;
        mag.observe(trace);
        let k_i = k as i128;
        if trace % k_i != 0 {
            return Err(Error::InexactDivision { step: k });
        }
        let c = -(trace / k_i);
        mag.observe(c);
        out[n - k] = c;
        if k == n {
            break;
        }

        // (S·M)[i][j] = colsum[j] − m[i][j] − 2 Σ_{l∈N(i)} m[l][j]
        for (j, cs) in colsum.iter_mut().enumerate().take(n) {
            let mut s = 0i128;
            for row in m.iter().take(n) {
                s = add(s, row[j])?;
            }
            *cs = s;
        }
        for i in 0..n {
            acc[i..n].iter_mut().for_each(|a| *a = 0);
            for l in Bits(adj[i]) {
                let row = &m[l];
                for j in i..n {
                    acc[j] = add(acc[j], row[j])?;
                }
            }
            for j in i..n {
                let twice = acc[j].checked_mul(2).ok_or(Error::Overflow(FL_SITE))?;
                let mut v = colsum[j]
                    .checked_sub(m[i][j])
                    .and_then(|v| v.checked_sub(twice))
                    .ok_or(Error::Overflow(FL_SITE))?;
                if i == j {
                    v = add(v, c)?;
                }
                mag.observe(v);
                next[i][j] = v;
                next[j][i] = v;
            }
        }
        core::mem::swap(&mut m, &mut next);
    }
    Ok(())
}

/// Monic `det(xI − S)` with exact integer coefficients.
pub fn charpoly_fl(s: &SeidelMatrix) -> Result<IntPolynomial> {
    let mut mag = Magnitude::default();
    charpoly_tracked(&s.graph, &mut mag)
}

fn charpoly_tracked(g: &Graph, mag: &mut Magnitude) -> Result<IntPolynomial> {
    let mut out = [0i128; MAX_VERTICES + 1];
    faddeev_leverrier(g, mag, &mut out)?;
    Ok(IntPolynomial(out[..=g.order()].to_vec()))
}

/// `q(x) = p(x − s)` by repeated synthetic division in ℤ[√2].
pub fn taylor_shift(p: &IntPolynomial, s: QuadInt) -> Result<QuadPolynomial> {
    let mut mag = Magnitude::default();
    let mut a: Vec<QuadInt> = p.0.iter().map(|&c| QuadInt::from_int(c)).collect();
    shift_in_place(&mut a, s, &mut mag)?;
    Ok(QuadPolynomial(a))
}

fn shift_in_place(a: &mut [QuadInt], s: QuadInt, mag: &mut Magnitude) -> Result<()> {
    if a.is_empty() {
        return Ok(());
    }
    let n = a.len() - 1;
    let t = s.checked_neg()?;
    for i in 0..n {
        for j in (i..n).rev() {
            let v = a[j].checked_add(t.checked_mul(a[j + 1])?)?;
            mag.observe_quad(v);
            a[j] = v;
        }
    }
    Ok(())
}

/// Shifted characteristic polynomial `p_G(x − s)` where `s` is the family's shift.
pub fn shifted_charpoly(g: &Graph, shift: QuadInt, mag: &mut Magnitude) -> Result<QuadPolynomial> {
    let n = g.order();
    let mut ints = [0i128; MAX_VERTICES + 1];
    faddeev_leverrier(g, mag, &mut ints)?;
    let mut a: Vec<QuadInt> = ints[..=n].iter().map(|&c| QuadInt::from_int(c)).collect();
    shift_in_place(&mut a, shift, mag)?;
    Ok(QuadPolynomial(a))
}

/// Exact test of `S(G) + sI ⪰ 0` and its rank.
pub fn psd_rank(g: &Graph, family: Family) -> Result<SpectralVerdict> {
    psd_rank_tracked(g, family.shift(), &mut Magnitude::default())
}

pub fn psd_rank_tracked(g: &Graph, shift: QuadInt, mag: &mut Magnitude) -> Result<SpectralVerdict> {
    let n = g.order();
    let mut ints = [0i128; MAX_VERTICES + 1];
    faddeev_leverrier(g, mag, &mut ints)?;
    let mut a = [QuadInt::ZERO; MAX_VERTICES + 1];
    for (q, &c) in a.iter_mut().zip(&ints[..=n]) {
        *q = QuadInt::from_int(c);
    }
    shift_in_place(&mut a[..=n], shift, mag)?;
    let mut psd = true;
    let mut zero_mult = None;
    for (k, c) in a[..=n].iter().enumerate() {
        let s = c.sign();
        if zero_mult.is_none() && s != 0 {
            zero_mult = Some(k);
        }
        if ((n - k) % 2 == 0 && s < 0) || ((n - k) % 2 == 1 && s > 0) {
            psd = false;
            break;
        }
    }
    // c_n = 1, so a nonzero coefficient always exists when psd holds.
    let rank = n - zero_mult.unwrap_or(n);
    Ok(SpectralVerdict { psd, rank })
}

/// Third Seidel degree `(S³)_{vv}` of every vertex, in vertex order.
///
/// For `j ≠ v`, `(S²)_{jv} = (n − 2) − 2·|{k ∉ {j, v} : (j∼k) ≠ (k∼v)}|`.
pub fn third_degrees_per_vertex(g: &Graph) -> [i32; MAX_VERTICES] {
    let n = g.order();
    let adj = g.raw_rows();
    let all = if n == MAX_VERTICES { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = [0i32; MAX_VERTICES];
    for v in 0..n {
        let mut total = 0i32;
        for j in 0..n {
            if j == v {
                continue;
            }
            let differ = ((adj[j] ^ adj[v]) & all & !(1 << j | 1 << v)).count_ones() as i32;
            let s2 = (n as i32 - 2) - 2 * differ;
            total += if adj[v] >> j & 1 == 1 { -s2 } else { s2 };
        }
        out[v] = total;
    }
    out
}

/// Sorted third Seidel degrees: the switching-invariant hash of a graph.
pub fn third_seidel_degrees(g: &Graph) -> Vec<i32> {
    let mut d = third_degrees_per_vertex(g)[..g.order()].to_vec();
    d.sort_unstable();
    d
}

/// `(S^k)_{vv}` for every vertex, by plain matrix powering.
pub fn seidel_degrees(g: &Graph, k: u32) -> Vec<i128> {
    let s = seidel_matrix(g);
    let n = g.order();
    let base: Vec<Vec<i128>> = s.to_rows().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pow: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    for _ in 0..k {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in 0..n {
                if base[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += base[i][l] * pow[l][j];
                }
            }
        }
        pow = next;
    }
    (0..n).map(|i| pow[i][i]).collect()
}
