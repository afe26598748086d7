use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Finitely generated abelian group `Z^free_rank (+) Z/t1 (+) ... (+) Z/tk`
/// in invariant-factor form: every `t_i >= 2` and `t_1 | t_2 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders([order.into()])
    }

    /// Direct sum of cyclic groups `Z/c` (with `c = 0` meaning `Z`), brought
    /// into canonical form. Signs are ignored and unit orders dropped.
    pub fn from_cyclic_orders<I>(orders: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for c in orders {
            let c = c.abs();
            if c.is_zero() {
                free_rank += 1;
            } else if !c.is_one() {
                torsion.push(c);
            }
        }
        Self {
            free_rank,
            torsion: divisor_chain(torsion),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            free_rank: self.free_rank + other.free_rank,
            torsion: divisor_chain(self.torsion.iter().chain(&other.torsion).cloned().collect()),
        }
    }

    pub fn sum_all<'a, I>(groups: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        groups
            .into_iter()
            .fold(Self::trivial(), |acc, g| acc.direct_sum(g))
    }
}

/// Turns any list of positive orders into the invariant-factor chain of the
/// same group by repeatedly replacing pairs with their gcd and lcm.
fn divisor_chain(mut t: Vec<BigInt>) -> Vec<BigInt> {
    let k = t.len();
    for i in 0..k {
        for j in i + 1..k {
            if !(&t[j] % &t[i]).is_zero() {
                let g = t[i].gcd(&t[j]);
                let l = &t[i] / &g * &t[j];
                t[i] = g;
                t[j] = l;
            }
        }
    }
    t.retain(|x| !x.is_one());
    t
}

/// Isomorphism test for canonical forms: equal free rank and equal chains.
pub fn groups_isomorphic(g: &FinAbGroup, h: &FinAbGroup) -> bool {
    g == h
}

impl fmt::Display for FinAbGroup {
    /// Renders as `Z^r (+) Z/t1 (+) ...`; the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" (+) "))
    }
}
