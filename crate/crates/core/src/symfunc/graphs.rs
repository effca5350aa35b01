//! Symmetric functions attached to digraphs, graphs and posets, and the
//! direct coefficient formulas that avoid basis conversion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Basis, Rational, SymFunc};
use crate::enumerate::{
    c_coefficients, count_hamiltonian_cycles, count_hamiltonian_paths, cycle_covers, path_covers,
    set_partition_type, set_partitions, set_partitions_of,
};
use crate::error::{Error, Result};
use crate::graph::{full_set, Digraph, Graph, Poset};
use crate::partition::Partition;

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyVertexSet)
    } else {
        Ok(())
    }
}

fn check_size(n: usize, lambda: &Partition) -> Result<()> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    Ok(())
}

fn int(x: impl Into<BigInt>) -> Rational {
    Rational::from_integer(x.into())
}

/// `Π_D`: one `m̃_{t(E)}` for every path cover `E` of `d`.
pub fn pi_symfunc(d: &Digraph) -> Result<SymFunc> {
    let mut f = SymFunc::zero(d.n(), Basis::MTilde);
    for e in path_covers(d, None)? {
        f.add_term(e.partition(), Rational::one());
    }
    Ok(f)
}

/// `Π_D` assembled from Hamiltonian path counts of restrictions:
/// `Σ_σ m̃_{t(σ)} ∏_{T∈σ} π_{D|T}`.
pub fn pi_symfunc_by_restrictions(d: &Digraph) -> Result<SymFunc> {
    by_restrictions(d, Basis::MTilde, count_hamiltonian_paths)
}

/// `Z_D`: one `p_{t(F)}` for every cycle cover `F` of `d`.
pub fn z_symfunc(d: &Digraph) -> Result<SymFunc> {
    let mut f = SymFunc::zero(d.n(), Basis::P);
    for c in cycle_covers(d)? {
        f.add_term(c.partition(), Rational::one());
    }
    Ok(f)
}

/// `Z_D` assembled from Hamiltonian cycle counts of restrictions.
pub fn z_symfunc_by_restrictions(d: &Digraph) -> Result<SymFunc> {
    by_restrictions(d, Basis::P, count_hamiltonian_cycles)
}

fn by_restrictions(d: &Digraph, basis: Basis, count: fn(&Digraph) -> u64) -> Result<SymFunc> {
    let mut f = SymFunc::zero(d.n(), basis);
    for sigma in set_partitions(d.n())? {
        let prod: u64 = sigma.iter().map(|&t| count(&d.restrict_set(t))).product();
        if prod != 0 {
            f.add_term(set_partition_type(&sigma), int(prod));
        }
    }
    Ok(f)
}

/// `X_G`: one `m̃_{t(σ)}` for every stable set partition `σ`.
pub fn chromatic_symfunc(g: &Graph) -> Result<SymFunc> {
    let mut f = SymFunc::zero(g.n(), Basis::MTilde);
    for sigma in set_partitions(g.n())? {
        if sigma.iter().all(|&b| g.is_stable(b)) {
            f.add_term(set_partition_type(&sigma), Rational::one());
        }
    }
    Ok(f)
}

/// The chromatic polynomial at `k`, by specializing `p_λ ↦ k^{ℓ(λ)}`.
pub fn chromatic_polynomial_eval(g: &Graph, k: u64) -> Result<BigInt> {
    let x = chromatic_symfunc(g)?.convert(Basis::P);
    let mut total = Rational::zero();
    for (lambda, c) in x.terms() {
        total += c * int(BigInt::from(k).pow(lambda.len() as u32));
    }
    assert!(total.is_integer(), "chromatic polynomial value is not integral");
    Ok(total.to_integer())
}

/// `p_λ` in the elementary basis from the acyclic spanning subdigraphs of `τ_λ`:
/// `(-1)^n Σ_μ (-1)^{ℓ(μ)} c_λ^μ e_μ`.
pub fn p_to_e_via_tau(lambda: &Partition) -> Result<SymFunc> {
    let n = lambda.size();
    let mut f = SymFunc::zero(n, Basis::E);
    for (mu, c) in c_coefficients(lambda)? {
        let c = int(c);
        let c = if (n + mu.len()) % 2 == 1 { -c } else { c };
        f.add_term(mu, c);
    }
    Ok(f)
}

/// Number of pairs `(E, F)` with `E` a path cover of `d` of type `λ` and `F`
/// a cycle cover of `D/E`. This is `(-1)^{n-ℓ(λ)}` times `[e_λ] Z_D`.
pub fn z_e_coefficient_direct(d: &Digraph, lambda: &Partition) -> Result<BigInt> {
    check_size(d.n(), lambda)?;
    let mut total = BigInt::zero();
    if d.n() == 0 {
        return Ok(total);
    }
    for e in path_covers(d, Some(lambda))? {
        total += cycle_covers(&d.contract_path_cover(&e)?)?.len();
    }
    Ok(total)
}

/// `[h_λ] Z_D = Σ det(D/E)` over path covers `E` of type `λ`.
pub fn z_h_coefficient_direct(d: &Digraph, lambda: &Partition) -> Result<BigInt> {
    check_size(d.n(), lambda)?;
    let mut total = BigInt::zero();
    if d.n() == 0 {
        return Ok(total);
    }
    for e in path_covers(d, Some(lambda))? {
        total += d.contract_path_cover(&e)?.adjacency_determinant();
    }
    Ok(total)
}

/// `[e_λ] X_{inc(P)} = Σ det(P̄/E)` over weakly decreasing path covers of type `λ`.
pub fn inc_e_coefficient(p: &Poset, lambda: &Partition) -> Result<BigInt> {
    z_h_coefficient_direct(&p.digraph().complement(), lambda)
}

/// Hamiltonian path count of `h` from cycle counts of restrictions of `h`
/// and its complement: `Σ_σ ∏_{T∈σ} (z_{H|T} - (-1)^{|T|} z_{H̄|T})`.
pub fn pi_via_berge_lass(h: &Digraph) -> Result<BigInt> {
    nonempty(h.n())?;
    let hbar = h.complement();
    let n = h.n();
    // per-subset factor, computed once
    let factor: Vec<BigInt> = (0..=full_set(n))
        .map(|t| {
            let z = BigInt::from(count_hamiltonian_cycles(&h.restrict_set(t)));
            let zbar = BigInt::from(count_hamiltonian_cycles(&hbar.restrict_set(t)));
            if t.count_ones() % 2 == 0 {
                z - zbar
            } else {
                z + zbar
            }
        })
        .collect();
    Ok(set_partitions_of(full_set(n))
        .iter()
        .map(|sigma| {
            sigma
                .iter()
                .fold(BigInt::one(), |acc, &t| acc * &factor[t as usize])
        })
        .sum())
}

/// True iff every coefficient in the elementary basis is nonnegative.
pub fn is_e_positive(f: &SymFunc) -> bool {
    f.convert(Basis::E).is_nonnegative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{acyclic_digraphs, digraphs, hamiltonian_paths};
    use crate::samples;
    use std::collections::BTreeMap;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Monomial coefficients of `X_G` read off proper colorings with `n`
    /// colors: the coefficient of `m_λ` is the number of colorings whose
    /// color-count vector, sorted, is `λ` and whose counts are nonincreasing.
    fn coloring_monomials(g: &Graph) -> BTreeMap<Partition, Rational> {
        let n = g.n();
        let mut out = BTreeMap::new();
        let mut colors = vec![0usize; n];
        loop {
            let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
            if proper {
                let mut counts = vec![0usize; n];
                for &c in &colors {
                    counts[c] += 1;
                }
                // x_1^{a_1} x_2^{a_2} ... with a nonincreasing is the leading monomial of m_λ
                if counts.windows(2).all(|w| w[0] >= w[1]) {
                    let lambda = Partition::from_sizes(counts.into_iter().filter(|&c| c > 0)).unwrap();
                    *out.entry(lambda).or_insert_with(Rational::zero) += Rational::one();
                }
            }
            let mut i = 0;
            while i < n && colors[i] == n - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
        out
    }

    #[test]
    fn chromatic_matches_coloring_oracle() {
        for n in 1..=4 {
            for g in crate::enumerate::graphs(n) {
                let x = chromatic_symfunc(&g).unwrap().convert(Basis::M);
                let oracle = SymFunc::from_terms(n, Basis::M, coloring_monomials(&g)).unwrap();
                assert_eq!(x, oracle, "{g}");
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        let path = chromatic_symfunc(&Graph::path(3)).unwrap().convert(Basis::E);
        assert_eq!(path.to_string(), "e_{2,1} + 3 e_{3}");
        for n in 1..=5 {
            let k = chromatic_symfunc(&Graph::complete(n)).unwrap().convert(Basis::E);
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(k, SymFunc::from_terms(n, Basis::E, [(Partition::single(n), int(fact))]).unwrap());
            let empty = chromatic_symfunc(&Graph::empty(n)).unwrap().convert(Basis::P);
            assert_eq!(empty, SymFunc::basis_element(Basis::P, &Partition::ones(n)));
        }
        assert!(chromatic_symfunc(&Graph::empty(0)).is_err());
    }

    #[test]
    fn chromatic_polynomial_matches_coloring_count() {
        assert_eq!(chromatic_polynomial_eval(&Graph::complete(3), 3).unwrap(), BigInt::from(6));
        for n in 1..=4 {
            for g in crate::enumerate::graphs(n) {
                for k in 0..=4 {
                    assert_eq!(
                        chromatic_polynomial_eval(&g, k as u64).unwrap(),
                        BigInt::from(g.count_colorings(k))
                    );
                }
            }
        }
    }

    #[test]
    fn pi_and_z_basics() {
        let one = Digraph::empty(1);
        assert_eq!(pi_symfunc(&one).unwrap(), SymFunc::basis_element(Basis::MTilde, &part(&[1])));
        assert!(z_symfunc(&one).unwrap().is_zero());
        for n in 1..=4 {
            assert_eq!(
                pi_symfunc(&Digraph::empty(n)).unwrap(),
                SymFunc::basis_element(Basis::MTilde, &Partition::ones(n))
            );
            let c = Digraph::complete_acyclic(n).complement();
            assert_eq!(z_symfunc(&c).unwrap(), SymFunc::basis_element(Basis::P, &Partition::ones(n)));
        }
    }

    #[test]
    fn restriction_assembly_matches_direct() {
        for n in 1..=3 {
            for d in digraphs(n) {
                assert_eq!(pi_symfunc(&d).unwrap(), pi_symfunc_by_restrictions(&d).unwrap());
                assert_eq!(z_symfunc(&d).unwrap(), z_symfunc_by_restrictions(&d).unwrap());
            }
        }
    }

    #[test]
    fn pi_equals_z_on_complements_of_acyclic() {
        for n in 1..=4 {
            for d in acyclic_digraphs(n) {
                let c = d.complement();
                assert_eq!(pi_symfunc(&c).unwrap().convert(Basis::P), z_symfunc(&c).unwrap());
            }
        }
    }

    #[test]
    fn tau_route_matches_conversion() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                let via = p_to_e_via_tau(&l).unwrap();
                assert_eq!(via, SymFunc::basis_element(Basis::P, &l).convert(Basis::E), "{l}");
            }
        }
        assert_eq!(p_to_e_via_tau(&part(&[2])).unwrap().to_string(), "e_{1,1} - 2 e_{2}");
    }

    #[test]
    fn direct_coefficients_match_conversion() {
        for n in 1..=3 {
            for d in digraphs(n) {
                let z = z_symfunc(&d).unwrap();
                let ze = z.convert(Basis::E);
                let zh = z.convert(Basis::H);
                for l in Partition::all(n) {
                    let sign = if (n - l.len()) % 2 == 1 { -1 } else { 1 };
                    assert_eq!(
                        int(z_e_coefficient_direct(&d, &l).unwrap() * sign),
                        ze.coeff(&l)
                    );
                    assert_eq!(int(z_h_coefficient_direct(&d, &l).unwrap()), zh.coeff(&l));
                }
            }
        }
        assert!(z_h_coefficient_direct(&Digraph::empty(2), &part(&[3])).is_err());
    }

    #[test]
    fn berge_lass_matches_path_count() {
        for n in 1..=3 {
            for h in digraphs(n) {
                let paths = hamiltonian_paths(&h).unwrap().len();
                assert_eq!(pi_via_berge_lass(&h).unwrap(), BigInt::from(paths), "{h}");
            }
        }
    }

    #[test]
    fn poset_routes_agree() {
        let p = samples::five_element_poset();
        let x = chromatic_symfunc(&p.incomparability_graph()).unwrap();
        assert_eq!(pi_symfunc(p.digraph()).unwrap(), x);
        let xe = x.convert(Basis::E);
        for l in Partition::all(5) {
            assert_eq!(int(inc_e_coefficient(&p, &l).unwrap()), xe.coeff(&l));
        }
        let chain = Poset::chain(4);
        assert_eq!(inc_e_coefficient(&chain, &Partition::ones(4)).unwrap(), BigInt::one());
    }

    #[test]
    fn e_positivity() {
        assert!(is_e_positive(&chromatic_symfunc(&Graph::complete(3)).unwrap()));
        assert!(!is_e_positive(&SymFunc::basis_element(Basis::P, &part(&[2]))));
    }
}
