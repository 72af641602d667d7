//! Classical identities exercised end-to-end: Littlewood's expansion of a
//! Kronecker product against an outer product, and Hankel determinants of
//! complete homogeneous / elementary functions as rectangular Schur
//! functions.

use symf::scalars::ParamRat;
use symf::shapes::{enumerate_partitions, Partition};
use symf::symfunc::{jacobi_trudi, Basis, SymFunc};

/// `(s_α s_β) * s_θ = Σ_{λ⊢|α|, μ⊢|β|} c^θ_{λμ} (s_α * s_λ)(s_β * s_μ)`
/// where `*` is the Kronecker product and `c^θ_{λμ} = ⟨s_θ, s_λ s_μ⟩`.
#[test]
fn littlewood_kronecker_expansion() {
    for total in 2..=5u32 {
        for a in 1..total {
            let b = total - a;
            for alpha in enumerate_partitions(a, None, None) {
                for beta in enumerate_partitions(b, None, None) {
                    let outer = SymFunc::s(&alpha) * SymFunc::s(&beta);
                    for theta in enumerate_partitions(total, None, None) {
                        let lhs = outer.kronecker(&SymFunc::s(&theta));
                        let mut rhs = SymFunc::zero();
                        for lam in enumerate_partitions(a, None, None) {
                            for mu in enumerate_partitions(b, None, None) {
                                let c = SymFunc::s(&theta)
                                    .hall(&(SymFunc::s(&lam) * SymFunc::s(&mu)));
                                if c.is_zero() {
                                    continue;
                                }
                                let left = SymFunc::s(&alpha).kronecker(&SymFunc::s(&lam));
                                let right = SymFunc::s(&beta).kronecker(&SymFunc::s(&mu));
                                rhs = rhs + (left * right).scale(&c);
                            }
                        }
                        assert_eq!(lhs, rhs, "α={alpha} β={beta} θ={theta}");
                    }
                }
            }
        }
    }
}

/// Expands an `n×n` determinant with entries drawn from a single-index
/// family (`index ↦ basis[index]`, index 0 meaning the constant 1) into a
/// basis-monomial map.
fn determinant(n: usize, basis: Basis, entry: impl Fn(usize, usize) -> u32) -> SymFunc {
    let mut terms: Vec<(Partition, ParamRat)> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn permute(
        perm: &mut Vec<usize>,
        k: usize,
        parity: bool,
        visit: &mut impl FnMut(&[usize], bool),
    ) {
        if k + 1 >= perm.len() {
            visit(perm, parity);
            return;
        }
        permute(perm, k + 1, parity, visit);
        for i in k + 1..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, !parity, visit);
            perm.swap(k, i);
        }
    }
    permute(&mut perm, 0, true, &mut |perm, even| {
        let mut indices: Vec<u32> = Vec::with_capacity(n);
        for (i, &j) in perm.iter().enumerate() {
            let value = entry(i, j);
            if value > 0 {
                indices.push(value);
            }
        }
        indices.sort_unstable_by(|x, y| y.cmp(x));
        let c = if even {
            ParamRat::one()
        } else {
            -ParamRat::one()
        };
        terms.push((Partition::new(indices).expect("sorted"), c));
    });
    SymFunc::from_terms(basis, terms)
}

fn rectangle(width: u32, height: u32) -> Partition {
    Partition::new(vec![width; height as usize]).expect("rectangle")
}

/// `det(h_{i+j+k})_{0≤i,j<n} = (−1)^{n(n−1)/2} s_{((n+k−1)^n)}`: the Hankel
/// matrix is the Jacobi–Trudi matrix of the rectangle with rows reversed.
#[test]
fn hankel_determinant_of_h_is_rectangular_schur() {
    for n in 1..=4u32 {
        for k in 0..=4u32 {
            if n == 1 && k == 0 {
                continue; // det = h₀ = 1, no Schur shape
            }
            let det = determinant(n as usize, Basis::H, |i, j| i as u32 + j as u32 + k);
            let mut expected = jacobi_trudi(&rectangle(n + k - 1, n), false);
            if (n * (n - 1) / 2) % 2 == 1 {
                expected = -expected;
            }
            assert_eq!(det, expected, "n={n} k={k}");
            // Where cheap, pin the Schur form itself.
            if (n + k - 1) * n <= 8 {
                let mut rect = SymFunc::s(&rectangle(n + k - 1, n));
                if (n * (n - 1) / 2) % 2 == 1 {
                    rect = -rect;
                }
                assert_eq!(det, rect, "n={n} k={k} (Schur form)");
            }
        }
    }
}

/// The elementary version: `det(e_{i+j+k})_{0≤i,j<n}` is, up to the same
/// sign, the Schur function of the conjugate rectangle `(n^{n+k−1})`.
#[test]
fn hankel_determinant_of_e_is_conjugate_rectangular_schur() {
    for n in 1..=4u32 {
        for k in 0..=4u32 {
            if n == 1 && k == 0 {
                continue;
            }
            let det = determinant(n as usize, Basis::E, |i, j| i as u32 + j as u32 + k);
            let mut expected = jacobi_trudi(&rectangle(n, n + k - 1), true);
            if (n * (n - 1) / 2) % 2 == 1 {
                expected = -expected;
            }
            assert_eq!(det, expected, "n={n} k={k}");
            if (n + k - 1) * n <= 8 {
                let mut rect = SymFunc::s(&rectangle(n, n + k - 1));
                if (n * (n - 1) / 2) % 2 == 1 {
                    rect = -rect;
                }
                assert_eq!(det, rect, "n={n} k={k} (Schur form)");
            }
        }
    }
}
