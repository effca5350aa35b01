//! Set maps: rational-valued functions on the subsets of a small ground set,
//! with the convolution product `(h·g)_U = Σ_{S⊎T=U} h_S g_T`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::enumerate::{count_hamiltonian_paths, hamiltonian_paths, set_partition_type, set_partitions_of};
use crate::error::{Error, Result};
use crate::graph::{full_set, members, Digraph, VertexSet};
use crate::symfunc::json::{big_to_json, rational_from_json};
use crate::symfunc::{Basis, Rational, SymFunc};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 12;

/// A value for every subset of `0..ground`, indexed by bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct SetMap {
    ground: usize,
    values: Vec<Rational>,
}

impl SetMap {
    pub fn zero(ground: usize) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::TooLarge {
                n: ground,
                max: MAX_GROUND,
            });
        }
        Ok(SetMap {
            ground,
            values: vec![Rational::zero(); 1 << ground],
        })
    }

    /// `ε`: one at the empty set, zero elsewhere.
    pub fn identity(ground: usize) -> Result<Self> {
        let mut h = Self::zero(ground)?;
        h.values[0] = Rational::one();
        Ok(h)
    }

    pub fn from_fn(ground: usize, mut f: impl FnMut(VertexSet) -> Rational) -> Result<Self> {
        let mut h = Self::zero(ground)?;
        for (s, v) in h.values.iter_mut().enumerate() {
            *v = f(s as VertexSet);
        }
        Ok(h)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn get(&self, s: VertexSet) -> &Rational {
        &self.values[s as usize]
    }

    pub fn set(&mut self, s: VertexSet, value: Rational) {
        self.values[s as usize] = value;
    }

    pub fn multiply(&self, other: &SetMap) -> Result<SetMap> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(self.ground, other.ground));
        }
        let mut out = Self::zero(self.ground)?;
        for u in 0..=full_set(self.ground) {
            let mut acc = Rational::zero();
            let mut s = u;
            loop {
                let (a, b) = (self.get(s), other.get(u & !s));
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & u;
            }
            out.values[u as usize] = acc;
        }
        Ok(out)
    }

    /// The unique `g` with `h·g = ε`, built by increasing subset size.
    pub fn inverse(&self) -> Result<SetMap> {
        let h0 = self.values[0].clone();
        if h0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut g = Self::zero(self.ground)?;
        let mut order: Vec<VertexSet> = (0..=full_set(self.ground)).collect();
        order.sort_by_key(|s| s.count_ones());
        for u in order {
            if u == 0 {
                g.values[0] = h0.recip();
                continue;
            }
            let mut acc = Rational::zero();
            let mut s = u;
            while s != 0 {
                acc += self.get(s) * g.get(u & !s);
                s = (s - 1) & u;
            }
            g.values[u as usize] = -acc / &h0;
        }
        Ok(g)
    }

    /// Nonzero entries only, e.g. `{"ground": 2, "values": [{"subset": 0, "num": 1, "den": 1}]}`.
    pub fn to_json(&self) -> Value {
        let values: Vec<Value> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, v)| {
                json!({"subset": s, "num": big_to_json(v.numer()), "den": big_to_json(v.denom())})
            })
            .collect();
        json!({"ground": self.ground, "values": values})
    }

    /// Missing subsets default to zero.
    pub fn from_json(v: &Value) -> Result<SetMap> {
        let ground = v
            .get("ground")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(0, "missing `ground`"))? as usize;
        let mut h = Self::zero(ground)?;
        for entry in v.get("values").and_then(Value::as_array).into_iter().flatten() {
            let s = entry
                .get("subset")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse(0, "missing `subset`"))?;
            if s > full_set(ground) as u64 {
                return Err(Error::parse(0, format!("subset {s} outside ground set of {ground}")));
            }
            h.values[s as usize] = rational_from_json(entry)?;
        }
        Ok(h)
    }
}

impl fmt::Debug for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// `h_S = π_{D|S}`, the Hamiltonian path count of each restriction (`h_∅ = 1`).
pub fn path_setmap(d: &Digraph) -> Result<SetMap> {
    SetMap::from_fn(d.n(), |s| {
        Rational::from_integer(BigInt::from(count_hamiltonian_paths(&d.restrict_set(s))))
    })
}

/// `g_S = (-1)^{|S|} π_{D̄|S}`, the inverse of [`path_setmap`].
pub fn signed_complement_setmap(d: &Digraph) -> Result<SetMap> {
    let c = d.complement();
    SetMap::from_fn(d.n(), |s| {
        let v = Rational::from_integer(BigInt::from(count_hamiltonian_paths(&c.restrict_set(s))));
        if s.count_ones() % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

/// Two vertex-disjoint paths covering every vertex, the first on `D` and the
/// second on `D̄`. Either may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl PathPair {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Self {
        PathPair { first, second }
    }

    /// `|T|`, the size of the complement-side path; the pair's sign is `(-1)^{|T|}`.
    pub fn complement_len(&self) -> usize {
        self.second.len()
    }

    fn validate(&self, d: &Digraph) -> Result<()> {
        let n = d.n();
        if n == 0 {
            return Err(Error::InvalidPathPair("no vertices to cover".into()));
        }
        if !d.is_path(&self.first) {
            return Err(Error::InvalidPathPair("first path does not run along the digraph".into()));
        }
        if !d.complement().is_path(&self.second) {
            return Err(Error::InvalidPathPair(
                "second path does not run along the complement".into(),
            ));
        }
        let s: VertexSet = self.first.iter().fold(0, |a, &v| a | 1 << v);
        let t: VertexSet = self.second.iter().fold(0, |a, &v| a | 1 << v);
        if s & t != 0 || s | t != full_set(n) {
            return Err(Error::InvalidPathPair("paths must partition the vertex set".into()));
        }
        Ok(())
    }
}

/// The sign-reversing involution on path pairs: a vertex moves across the
/// junction between the end of the first path and the start of the second.
pub fn pathsum_involution(d: &Digraph, pair: &PathPair) -> Result<PathPair> {
    pair.validate(d)?;
    let mut first = pair.first.clone();
    let mut second = pair.second.clone();
    match (first.last().copied(), second.first().copied()) {
        (None, Some(w)) => {
            second.remove(0);
            first.push(w);
        }
        (Some(v), None) => {
            first.pop();
            second.push(v);
        }
        (Some(v), Some(w)) => {
            if d.has_arrow(v, w) {
                second.remove(0);
                first.push(w);
            } else {
                first.pop();
                second.insert(0, v);
            }
        }
        (None, None) => unreachable!("validated pair covers a nonempty vertex set"),
    }
    Ok(PathPair { first, second })
}

/// Every path pair of `d`, sorted.
pub fn path_pairs(d: &Digraph) -> Result<Vec<PathPair>> {
    let n = d.n();
    let c = d.complement();
    let paths_on = |g: &Digraph, s: VertexSet| -> Vec<Vec<usize>> {
        if s == 0 {
            return vec![Vec::new()];
        }
        let labels: Vec<usize> = members(s).collect();
        hamiltonian_paths(&g.restrict_set(s))
            .expect("nonempty restriction")
            .into_iter()
            .map(|p| p.into_iter().map(|i| labels[i]).collect())
            .collect()
    };
    let mut out = Vec::new();
    for s in 0..=full_set(n) {
        let t = full_set(n) & !s;
        let firsts = paths_on(d, s);
        let seconds = paths_on(&c, t);
        for a in &firsts {
            for b in &seconds {
                out.push(PathPair::new(a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ_{S⊎T=V} (-1)^{|T|} π_{D|S} π_{D̄|T}`, which vanishes for nonempty `V`.
pub fn pathsum_signed_sum(d: &Digraph) -> BigInt {
    let h = path_setmap(d).expect("within ground cap");
    let g = signed_complement_setmap(d).expect("within ground cap");
    let full = full_set(d.n());
    let mut total = Rational::zero();
    let mut s = full;
    loop {
        total += h.get(s) * g.get(full & !s);
        if s == 0 {
            break;
        }
        s = (s - 1) & full;
    }
    total.to_integer()
}

fn assembled(h: &SetMap, s: VertexSet) -> SymFunc {
    let mut f = SymFunc::zero(s.count_ones() as usize, Basis::MTilde);
    for sigma in set_partitions_of(s) {
        let prod = sigma.iter().fold(Rational::one(), |acc, &t| acc * h.get(t));
        f.add_term(set_partition_type(&sigma), prod);
    }
    f
}

/// Compares `ω(Σ_{σ⊢S} m̃_{t(σ)} ∏ h_T)` with `(-1)^{|S|} Σ_{σ⊢S} m̃_{t(σ)} ∏ h⁻¹_T`.
/// `h` must take the value 1 at the empty set.
pub fn lass_reciprocity_check(h: &SetMap, s: VertexSet) -> Result<bool> {
    if s == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if s > full_set(h.ground) {
        return Err(Error::VertexOutOfRange {
            vertex: (31 - s.leading_zeros()) as usize,
            n: h.ground,
        });
    }
    if h.get(0).is_zero() {
        return Err(Error::NotInvertible);
    }
    if !h.get(0).is_one() {
        return Err(Error::NotNormalized);
    }
    let inv = h.inverse()?;
    let lhs = assembled(h, s).omega();
    let mut rhs = assembled(&inv, s);
    if s.count_ones() % 2 == 1 {
        rhs = rhs.scale(&-Rational::one());
    }
    Ok(lhs == rhs)
}
