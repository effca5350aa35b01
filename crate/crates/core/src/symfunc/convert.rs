//! Transition matrices between each basis and the power sums.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Basis, Rational};
use crate::enumerate::{coarsenings, set_partition_type};
use crate::graph::VertexSet;
use crate::partition::Partition;

type Matrix = Vec<Vec<Rational>>;

/// Change-of-basis data for one degree.
///
/// For each basis `B`, `to_p[B][λ][μ]` is the coefficient of `p_μ` in `B_λ`
/// and `from_p[B][λ][μ]` is the coefficient of `B_μ` in `p_λ`.
#[derive(Debug)]
pub struct Transitions {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_p: Vec<Matrix>,
    from_p: Vec<Matrix>,
}

impl Transitions {
    fn build(degree: usize) -> Self {
        let partitions = Partition::all(degree);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let k = partitions.len();
        let identity = identity(k);

        // p -> m̃ by counting coarsenings of a fixed set partition of each type
        let mut p_to_mt = vec![vec![Rational::zero(); k]; k];
        for (i, lambda) in partitions.iter().enumerate() {
            for gamma in coarsenings(&consecutive_blocks(lambda)) {
                p_to_mt[i][index[&set_partition_type(&gamma)]] += Rational::one();
            }
        }
        let mt_to_p = invert_triangular(&p_to_mt, &partitions, |row, col| {
            col.len() < row.len()
        });

        let mf: Vec<Rational> = partitions
            .iter()
            .map(|l| Rational::from_integer(l.multiplicity_factorial()))
            .collect();
        let m_to_p: Matrix = (0..k)
            .map(|i| mt_to_p[i].iter().map(|x| x / &mf[i]).collect())
            .collect();
        let p_to_m: Matrix = (0..k)
            .map(|i| (0..k).map(|j| &p_to_mt[i][j] * &mf[j]).collect())
            .collect();

        let e_to_p = product_basis_to_p(&partitions, &index, &newton_e(degree));
        let h_to_p = product_basis_to_p(&partitions, &index, &newton_h(degree));
        let refined = |row: &Partition, col: &Partition| col.len() > row.len();
        let p_to_e = invert_triangular(&e_to_p, &partitions, refined);
        let p_to_h = invert_triangular(&h_to_p, &partitions, refined);

        let mut to_p = vec![Vec::new(); 5];
        let mut from_p = vec![Vec::new(); 5];
        to_p[Basis::P.index()] = identity.clone();
        from_p[Basis::P.index()] = identity;
        to_p[Basis::E.index()] = e_to_p;
        from_p[Basis::E.index()] = p_to_e;
        to_p[Basis::H.index()] = h_to_p;
        from_p[Basis::H.index()] = p_to_h;
        to_p[Basis::MTilde.index()] = mt_to_p;
        from_p[Basis::MTilde.index()] = p_to_mt;
        to_p[Basis::M.index()] = m_to_p;
        from_p[Basis::M.index()] = p_to_m;

        Transitions {
            degree,
            partitions,
            index,
            to_p,
            from_p,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Coefficient of `p_μ` in `b_λ`.
    pub fn to_p_entry(&self, basis: Basis, lambda: &Partition, mu: &Partition) -> Rational {
        self.to_p[basis.index()][self.index[lambda]][self.index[mu]].clone()
    }

    /// Coefficient of `b_μ` in `p_λ`.
    pub fn from_p_entry(&self, basis: Basis, lambda: &Partition, mu: &Partition) -> Rational {
        self.from_p[basis.index()][self.index[lambda]][self.index[mu]].clone()
    }

    pub(crate) fn to_power_sums(
        &self,
        basis: Basis,
        coeffs: &BTreeMap<Partition, Rational>,
    ) -> Vec<Rational> {
        self.apply(&self.to_p[basis.index()], coeffs.iter().map(|(l, c)| (self.index[l], c)))
    }

    pub(crate) fn power_sums_to(
        &self,
        basis: Basis,
        p: &[Rational],
    ) -> BTreeMap<Partition, Rational> {
        let out = self.apply(
            &self.from_p[basis.index()],
            p.iter().enumerate().filter(|(_, c)| !c.is_zero()),
        );
        out.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.partitions[i].clone(), c))
            .collect()
    }

    fn apply<'a>(
        &self,
        m: &Matrix,
        coeffs: impl Iterator<Item = (usize, &'a Rational)>,
    ) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.partitions.len()];
        for (i, c) in coeffs {
            for (j, x) in m[i].iter().enumerate() {
                if !x.is_zero() {
                    out[j] += c * x;
                }
            }
        }
        out
    }
}

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn consecutive_blocks(lambda: &Partition) -> Vec<VertexSet> {
    let mut base = 0;
    lambda
        .parts()
        .iter()
        .map(|&k| {
            let b = ((1u32 << k) - 1) << base;
            base += k;
            b
        })
        .collect()
}

/// Inverts `t` where `t[λ][μ] ≠ 0` only for `μ = λ` or `earlier(λ, μ)`, by
/// substituting rows in an order that resolves every `earlier` dependency first.
fn invert_triangular(
    t: &Matrix,
    partitions: &[Partition],
    earlier: impl Fn(&Partition, &Partition) -> bool,
) -> Matrix {
    let k = partitions.len();
    let mut order: Vec<usize> = (0..k).collect();
    // `earlier` is by part count in both uses
    order.sort_by_key(|&i| partitions[i].len());
    if k > 1 && !earlier(&partitions[order[k - 1]], &partitions[order[0]]) {
        order.reverse();
    }
    let mut inv: Matrix = vec![Vec::new(); k];
    for &i in &order {
        let diag = &t[i][i];
        assert!(!diag.is_zero(), "singular transition matrix");
        let mut row: Vec<Rational> = vec![Rational::zero(); k];
        row[i] = Rational::one();
        for j in 0..k {
            if j == i || t[i][j].is_zero() {
                continue;
            }
            assert!(earlier(&partitions[i], &partitions[j]), "matrix is not triangular");
            for (x, y) in row.iter_mut().zip(&inv[j]) {
                *x -= &t[i][j] * y;
            }
        }
        inv[i] = row.into_iter().map(|x| x / diag).collect();
    }
    inv
}

/// Sparse power-sum expansion, keyed by partition.
type PExpansion = BTreeMap<Partition, Rational>;

fn multiply(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out = PExpansion::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            *out.entry(la.union(lb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `e_0, …, e_n` in power sums: `k e_k = Σ_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
fn newton_e(n: usize) -> Vec<PExpansion> {
    newton(n, |i| if i % 2 == 1 { Rational::one() } else { -Rational::one() })
}

/// `h_0, …, h_n` in power sums: `k h_k = Σ_{i=1}^k h_{k-i} p_i`.
fn newton_h(n: usize) -> Vec<PExpansion> {
    newton(n, |_| Rational::one())
}

fn newton(n: usize, sign: impl Fn(usize) -> Rational) -> Vec<PExpansion> {
    let mut out: Vec<PExpansion> = vec![PExpansion::from([(Partition::ones(0), Rational::one())])];
    for k in 1..=n {
        let mut acc = PExpansion::new();
        for i in 1..=k {
            let p_i = PExpansion::from([(Partition::single(i), sign(i))]);
            for (l, c) in multiply(&out[k - i], &p_i) {
                *acc.entry(l).or_insert_with(Rational::zero) += c;
            }
        }
        let kk = Rational::from_integer(BigInt::from(k));
        acc = acc
            .into_iter()
            .map(|(l, c)| (l, c / &kk))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out.push(acc);
    }
    out
}

/// Rows `b_λ = ∏ b_{λ_i}` in power sums, given `b_0..b_n`.
fn product_basis_to_p(
    partitions: &[Partition],
    index: &HashMap<Partition, usize>,
    singles: &[PExpansion],
) -> Matrix {
    let k = partitions.len();
    partitions
        .iter()
        .map(|lambda| {
            let prod = lambda
                .parts()
                .iter()
                .fold(singles[0].clone(), |acc, &part| multiply(&acc, &singles[part]));
            let mut row = vec![Rational::zero(); k];
            for (l, c) in prod {
                row[index[&l]] = c;
            }
            row
        })
        .collect()
}

static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transitions>>>> = OnceLock::new();

/// Transition data for `degree`, built on first use and shared afterwards.
/// Concurrent first calls may each build it; the first insert wins.
pub fn transitions(degree: usize) -> Arc<Transitions> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("cache lock").get(&degree) {
        return Arc::clone(t);
    }
    let built = Arc::new(Transitions::build(degree));
    let mut w = cache.write().expect("cache lock");
    Arc::clone(w.entry(degree).or_insert(built))
}
