use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coalgebra::{pushforward_pair, CoalgebraMorphism};
use crate::duality::{dual_coalgebra_of_algebra, dualize_algebra_pair};
use crate::exactlin::invert;

/// Rewrites an algebra pair in new bases of `A` and `I`, given as the
/// columns of invertible matrices.
pub fn rebase_algebra_pair(p: &DorrohPairAlgebra, ga: &Matrix, gi: &Matrix) -> Result<DorrohPairAlgebra> {
    let inv = |g: &Matrix| invert(g)?.ok_or_else(|| Error::Input("basis change is singular".into()));
    let (ga_inv, gi_inv) = (inv(ga)?, inv(gi)?);
    let f = p.field();
    let a = Algebra::new(f, ga.cols(), p.a().mul().rebase_bilinear(ga, ga, &ga_inv))?;
    let i = Algebra::new(f, gi.cols(), p.i().mul().rebase_bilinear(gi, gi, &gi_inv))?;
    let left = p.action().left().rebase_bilinear(ga, gi, &gi_inv);
    let right = p.action().right().rebase_bilinear(gi, ga, &gi_inv);
    DorrohPairAlgebra::new(a, i, BimoduleAction::new(left, right)?)
}

/// Rewrites a coalgebra pair in new bases of `C` and `P`.
pub fn rebase_coalgebra_pair(
    p: &DorrohPairCoalgebra,
    gc: &Matrix,
    gp: &Matrix,
) -> Result<DorrohPairCoalgebra> {
    let inv = |g: &Matrix| invert(g)?.ok_or_else(|| Error::Input("basis change is singular".into()));
    let (gc_inv, gp_inv) = (inv(gc)?, inv(gp)?);
    let f = p.field();
    let c = Coalgebra::new(f, gc.cols(), p.c().delta().rebase_cobilinear(gc, &gc_inv, &gc_inv))?;
    let q = Coalgebra::new(f, gp.cols(), p.p().delta().rebase_cobilinear(gp, &gp_inv, &gp_inv))?;
    let rho_l = p.coaction().rho_l().rebase_cobilinear(gp, &gc_inv, &gp_inv);
    let rho_r = p.coaction().rho_r().rebase_cobilinear(gp, &gp_inv, &gc_inv);
    DorrohPairCoalgebra::new(c, q, BicomoduleCoaction::new(rho_l, rho_r)?)
}

/// Seeded generator of valid pairs built from constructions and random
/// changes of basis. Extensions have dimension at most `max_dim`.
pub struct PairSampler {
    rng: ChaCha8Rng,
    field: FieldSpec,
    max_dim: usize,
}

impl PairSampler {
    pub fn new(seed: u64, field: FieldSpec, max_dim: usize) -> Self {
        PairSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
            max_dim: max_dim.max(2),
        }
    }

    fn scalar(&mut self) -> Scalar {
        match self.field {
            FieldSpec::Rationals => self.field.from_i64(self.rng.gen_range(-2..=2)),
            FieldSpec::Prime(p) => self.field.from_i64(self.rng.gen_range(0..p) as i64),
        }
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        loop {
            let rows = (0..n).map(|_| (0..n).map(|_| self.scalar()).collect()).collect();
            let m = Matrix::from_rows(self.field, rows).expect("square rows");
            if m.rank() == n {
                return m;
            }
        }
    }

    fn small_algebra(&mut self, max: usize) -> Algebra {
        let f = self.field;
        let mut pool = vec![
            k(f),
            dual_numbers(f),
            k_z2(f),
            nilpotent1(f),
            trunc_poly(f, 2),
            trunc_ideal(f, 2),
            trunc_ideal(f, 3),
            m2(f),
            product_algebra(&k(f), &k(f)),
            Algebra::zero(f, 2),
        ];
        pool.retain(|a| a.dim() <= max);
        let a = pool.choose(&mut self.rng).expect("k always fits").clone();
        let g = self.invertible_matrix(a.dim());
        let g_inv = invert(&g).unwrap().unwrap();
        Algebra::new(f, a.dim(), a.mul().rebase_bilinear(&g, &g, &g_inv)).expect("square")
    }

    fn small_coalgebra(&mut self, max: usize) -> Coalgebra {
        let f = self.field;
        let mut pool = vec![
            grouplikes(f, 1),
            grouplikes(f, 2),
            grouplikes(f, 3),
            divided_power(f, 1),
            divided_power(f, 2),
            divided_power(f, 3),
            mc2(f),
            zero_coalgebra(f, 1),
            zero_coalgebra(f, 2),
            dual_coalgebra_of_algebra(&trunc_ideal(f, 3)),
            dual_coalgebra_of_algebra(&k_z2(f)),
        ];
        pool.retain(|c| c.dim() <= max);
        let c = pool.choose(&mut self.rng).expect("grouplikes(1) always fits").clone();
        let g = self.invertible_matrix(c.dim());
        let g_inv = invert(&g).unwrap().unwrap();
        Coalgebra::new(f, c.dim(), c.delta().rebase_cobilinear(&g, &g_inv, &g_inv)).expect("square")
    }

    fn construct_algebra_pair(&mut self) -> DorrohPairAlgebra {
        let max = self.max_dim;
        match self.rng.gen_range(0..5) {
            0 => {
                let a = self.small_algebra(max / 2);
                trivial_extension(&a, &ModuleOverAlgebra::regular(&a, Side::Bi))
            }
            1 => {
                let a = self.small_algebra(max - 1);
                let i = self.small_algebra(max - a.dim());
                direct_product_algebras(&a, &i)
            }
            2 => regular_algebra_pair(&self.small_algebra(max / 2)),
            3 => unitization(&self.small_algebra(max - 1)),
            _ => {
                let a = self.small_algebra((max - 1) / 2);
                one_point(&a, &ModuleOverAlgebra::regular(&a, Side::Left)).map(|t| t.pair)
            }
        }
        .expect("constructions yield valid pairs")
    }

    pub fn algebra_pair(&mut self) -> DorrohPairAlgebra {
        let p = self.construct_algebra_pair();
        let ga = self.invertible_matrix(p.a().dim());
        let gi = self.invertible_matrix(p.i().dim());
        rebase_algebra_pair(&p, &ga, &gi).expect("invertible basis change")
    }

    fn grouplike_map(&mut self, from: usize, to: usize) -> Vec<usize> {
        (0..from).map(|_| self.rng.gen_range(0..to)).collect()
    }

    fn construct_coalgebra_pair(&mut self) -> DorrohPairCoalgebra {
        let f = self.field;
        let max = self.max_dim;
        match self.rng.gen_range(0..8) {
            0 => {
                let c = self.small_coalgebra(max / 2);
                trivial_coextension(&c, &ComoduleOverCoalgebra::regular(&c, Side::Bi))
            }
            1 => {
                let c = self.small_coalgebra(max - 1);
                let p = self.small_coalgebra(max - c.dim());
                direct_product_coalgebras(&c, &p)
            }
            2 => regular_coalgebra_pair(&self.small_coalgebra(max / 2)),
            3 => counital_hull(&self.small_coalgebra(max - 1)),
            4 => grouplike_pair(f),
            5 => {
                let a = self.rng.gen_range(1..=(max - 1) / 2);
                let b = self.rng.gen_range(1..=(max - 1) / 2);
                let n = self.rng.gen_range(1..=max - a - b);
                let (sl, sr) = (self.grouplike_map(n, a), self.grouplike_map(n, b));
                let l: Vec<_> = (0..n).map(|x| ([x, sl[x], x], 1)).collect();
                let r: Vec<_> = (0..n).map(|x| ([x, x, sr[x]], 1)).collect();
                triangular_coalgebra(
                    &grouplikes(f, a),
                    &grouplikes(f, b),
                    &SparseTensor3::from_i64(f, [n, a, n], &l),
                    &SparseTensor3::from_i64(f, [n, n, b], &r),
                )
            }
            6 => {
                let a = self.rng.gen_range(1..=max / 2);
                let b = self.rng.gen_range(1..=max - a);
                let src = grouplikes(f, a);
                let p = regular_coalgebra_pair(&src).expect("regular pair");
                let phi = self.grouplike_map(a, b);
                let mut m = Matrix::zeros(f, b, a);
                for (i, &t) in phi.iter().enumerate() {
                    m.set(t, i, f.one());
                }
                let map = CoalgebraMorphism::new(src, grouplikes(f, b), m).expect("dims");
                pushforward_pair(&p, &map)
            }
            _ => {
                let mut s = PairSampler {
                    rng: ChaCha8Rng::seed_from_u64(self.rng.gen()),
                    field: f,
                    max_dim: max,
                };
                dualize_algebra_pair(&s.construct_algebra_pair()).map(|(p, _)| p)
            }
        }
        .expect("constructions yield valid pairs")
    }

    pub fn coalgebra_pair(&mut self) -> DorrohPairCoalgebra {
        let p = self.construct_coalgebra_pair();
        let gc = self.invertible_matrix(p.c().dim());
        let gp = self.invertible_matrix(p.p().dim());
        rebase_coalgebra_pair(&p, &gc, &gp).expect("invertible basis change")
    }
}
