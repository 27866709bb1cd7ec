//! Randomized invariant suites, shared by the `properties` target and the
//! acceptance harness.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::Arc;

use homforge_core::chaincx::{cone_homology_dims, homology_dims, induced_map, ChainMap, Complex, Homology, TensorComplex};
use homforge_core::constructions::{build_Ci, build_thetas, make_zeta, minimal_resolution, Factor, ZetaSpec};
use homforge_core::gfp::{self, EliminationConfig};
use homforge_core::modrep::{GModule, GroupAlgebraContext};
use homforge_core::{FieldPrime, SparseMatrix};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{dense, naive_add, naive_identity, naive_kron, naive_mul, naive_rank};

pub const CASES: u32 = 1000;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: Debug,
{
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(7)]
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, f: FieldPrime, density: f64) -> SparseMatrix {
    let mut t = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(density) {
                t.push((i, j, rng.gen_range(1..f.p())));
            }
        }
    }
    SparseMatrix::from_triplets(rows, cols, f, t).unwrap()
}

/// Random complex of trivial modules; each differential maps into the kernel
/// of the one below, so `d^2 = 0` by construction.
fn random_trivial_complex(rng: &mut ChaCha8Rng, ctx: GroupAlgebraContext) -> Arc<Complex> {
    let f = ctx.field();
    let len = rng.gen_range(1..=4);
    let lo = rng.gen_range(-2..=2);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=6)).collect();
    let terms: Vec<Arc<GModule>> = dims.iter().map(|&n| Arc::new(GModule::trivial_sum(ctx, n))).collect();
    let mut diffs: Vec<SparseMatrix> = Vec::new();
    for k in 1..len {
        let d = match diffs.last() {
            None => random_matrix(rng, dims[0], dims[1], f, 0.5),
            Some(prev) => {
                let ker = gfp::nullspace(prev);
                if ker.cols() == 0 {
                    SparseMatrix::zero(dims[k - 1], dims[k], f)
                } else {
                    ker.mul(&random_matrix(rng, ker.cols(), dims[k], f, 0.6)).unwrap()
                }
            }
        };
        diffs.push(d);
    }
    Arc::new(Complex::new(ctx, lo, terms, diffs).unwrap())
}

fn d_squared_holds(c: &Complex) -> bool {
    let p = c.ctx().p();
    (c.lo() + 2..=c.hi()).all(|i| {
        let prod = naive_mul(&dense(c.d(i - 1).unwrap()), &dense(c.d(i).unwrap()), p);
        prod.iter().flatten().all(|&v| v == 0)
    })
}

/// `d f = (-1)^m f d` checked entrywise with schoolbook products.
fn commutes(s: &Complex, t: &Complex, m: i32, comps: &BTreeMap<i32, SparseMatrix>) -> bool {
    let p = s.ctx().p();
    let f = s.ctx().field();
    let comp = |i: i32| comps.get(&i).cloned().unwrap_or_else(|| SparseMatrix::zero(t.dim(i + m), s.dim(i), f));
    for i in s.lo()..=s.hi() + 1 {
        let left = naive_mul(&dense(&t.d_or_zero(i + m)), &dense(&comp(i)), p);
        let right = naive_mul(&dense(&comp(i - 1)), &dense(&s.d_or_zero(i)), p);
        let sign = if m % 2 == 0 { 1 } else { p - 1 };
        for (a, b) in left.iter().flatten().zip(right.iter().flatten()) {
            if *a != (sign as u64 * *b as u64 % p as u64) as u32 {
                return false;
            }
        }
    }
    true
}

fn map_commutes(g: &ChainMap) -> bool {
    commutes(g.source(), g.target(), g.degree(), g.components())
}

/// `dim H_i = dim C_i - rank d_i - rank d_{i+1}` with the schoolbook rank.
fn oracle_homology(c: &Complex) -> BTreeMap<i32, usize> {
    let p = c.ctx().p();
    let rank = |i: i32| c.d(i).map_or(0, |d| naive_rank(dense(d), p));
    c.degrees().map(|i| (i, c.dim(i) - rank(i) - rank(i + 1))).collect()
}

fn euler(dims: impl Iterator<Item = (i32, usize)>) -> i64 {
    dims.map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}

/// `f = d h + h d` for a random degree-one `h`.
fn null_homotopic(rng: &mut ChaCha8Rng, c: &Arc<Complex>) -> BTreeMap<i32, SparseMatrix> {
    let f = c.ctx().field();
    let h: BTreeMap<i32, SparseMatrix> = (c.lo()..c.hi())
        .map(|i| (i, random_matrix(rng, c.dim(i + 1), c.dim(i), f, 0.5)))
        .collect();
    let hz = |i: i32| h.get(&i).cloned().unwrap_or_else(|| SparseMatrix::zero(c.dim(i + 1), c.dim(i), f));
    c.degrees()
        .map(|i| {
            let dh = c.d_or_zero(i + 1).mul(&hz(i)).unwrap();
            let hd = if i > c.lo() { hz(i - 1).mul(&c.d_or_zero(i)).unwrap() } else { SparseMatrix::zero(c.dim(i), c.dim(i), f) };
            (i, dh.add(&hd).unwrap())
        })
        .collect()
}

/// A random `kE`-module: a free module modulo the submodule generated by random vectors.
fn random_module(rng: &mut ChaCha8Rng, ctx: GroupAlgebraContext) -> GModule {
    let f = ctx.field();
    let s = if ctx.r() == 1 { rng.gen_range(1..=3) } else { rng.gen_range(1..=2) };
    let free = Arc::new(GModule::free(ctx, s));
    let k = rng.gen_range(0..=2);
    let mut span = random_matrix(rng, free.dim(), k, f, 0.3);
    loop {
        let mut blocks = vec![span.clone()];
        for x in free.actions() {
            blocks.push(x.mul(&span).unwrap());
        }
        let grown = SparseMatrix::hstack(&blocks.iter().collect::<Vec<_>>()).unwrap();
        if gfp::rank(&grown) == gfp::rank(&span) {
            break;
        }
        span = grown;
    }
    let (q, _) = free.quotient(&span).unwrap();
    q.as_ref().clone()
}

fn rank_nullity_case(p: u32, rows: usize, cols: usize, density: f64, seed: u64) -> Result<(), TestCaseError> {
    let f = FieldPrime::new(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_matrix(&mut rng, rows, cols, f, density);
    let r = gfp::rank(&m);
    prop_assert_eq!(r, naive_rank(dense(&m), p));
    prop_assert_eq!(gfp::rank(&m.transpose()), r);
    let sparse_only = EliminationConfig { dense_entry_threshold: 0, fallback_density: 2.0, ..Default::default() };
    prop_assert_eq!(gfp::rank_with(&m, &sparse_only), r);
    let n = gfp::nullspace(&m);
    prop_assert_eq!(n.cols() + r, cols);
    prop_assert!(m.mul(&n).unwrap().is_zero());
    prop_assert_eq!(naive_rank(dense(&n), p), n.cols());
    prop_assert_eq!(gfp::pivot_columns(&m).len(), r);
    Ok(())
}

pub fn rank_nullity(cases: u32) -> Result<(), String> {
    run(cases, (prime(), 0usize..14, 0usize..14, 0.05f64..0.9, any::<u64>()), |(p, rows, cols, density, seed)| rank_nullity_case(p, rows, cols, density, seed))
}

fn d_squared_on_constructed_complexes_case(p: u32, kind: u8, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = rng.gen_range(1..=2);
    let ctx = GroupAlgebraContext::with_prime(p, r).unwrap();
    let c: Arc<Complex> = match kind {
        0 => random_trivial_complex(&mut rng, ctx),
        1 => {
            let a = random_trivial_complex(&mut rng, ctx);
            let b = random_trivial_complex(&mut rng, ctx);
            Arc::new(Complex::tensor(&a, &b).unwrap())
        }
        2 => {
            let factors: Vec<Arc<Complex>> = (0..r).map(|i| Factor::koszul(ctx, i).unwrap().complex).collect();
            TensorComplex::build(factors, None).unwrap().complex().clone()
        }
        3 => {
            let a = random_trivial_complex(&mut rng, ctx);
            let comps = null_homotopic(&mut rng, &a);
            Arc::new(Complex::cone(&ChainMap::new(a.clone(), a, 0, comps).unwrap()).unwrap())
        }
        _ => {
            let ctx = GroupAlgebraContext::with_prime(3, r).unwrap();
            let n = if rng.gen_bool(0.5) { 2 } else { 4 };
            let res = minimal_resolution(ctx, n).unwrap();
            let i = rng.gen_range(0..r);
            let z = make_zeta(&res, n, ZetaSpec::Random { seed: rng.gen() }, i).unwrap();
            prop_assert!(d_squared_holds(res.complex()));
            build_Ci(&res, &z).unwrap().0.complex
        }
    };
    prop_assert!(d_squared_holds(&c));
    // a differential with d^2 != 0 must be refused
    if c.hi() - c.lo() >= 2 {
        let i = c.lo() + 2;
        let d1 = c.d(i - 1).unwrap();
        let d2 = c.d(i).unwrap();
        let bumped = d2.add(&SparseMatrix::from_triplets(d2.rows(), d2.cols(), d2.field(), vec![(rng.gen_range(0..d2.rows()), rng.gen_range(0..d2.cols()), 1)]).unwrap()).unwrap();
        if !d1.mul(&bumped).unwrap().is_zero() {
            let mut diffs: Vec<SparseMatrix> = (c.lo() + 1..=c.hi()).map(|j| c.d(j).unwrap().clone()).collect();
            diffs[1] = bumped;
            prop_assert!(Complex::new(*c.ctx(), c.lo(), c.terms().to_vec(), diffs).is_err());
        }
    }
    Ok(())
}

pub fn d_squared_on_constructed_complexes(cases: u32) -> Result<(), String> {
    run(cases, (prime(), 0u8..5, any::<u64>()), |(p, kind, seed)| d_squared_on_constructed_complexes_case(p, kind, seed))
}

fn graded_commutation_case(p: u32, odd: bool, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = FieldPrime::new(p).unwrap();
    let map = if odd {
        // random combination of the degree-one θ_i on a Koszul tensor
        let r = if p <= 3 { rng.gen_range(1..=3) } else { rng.gen_range(1..=2) };
        let ctx = GroupAlgebraContext::with_prime(p, r).unwrap();
        let factors: Vec<Factor> = (0..r).map(|i| Factor::koszul(ctx, i).unwrap()).collect();
        let tc = TensorComplex::build(factors.iter().map(|x| x.complex.clone()).collect(), None).unwrap();
        let thetas = build_thetas(&tc, &factors).unwrap();
        let mut acc = thetas[0].scale(rng.gen_range(0..p));
        for t in &thetas[1..] {
            acc = acc.add(&t.scale(rng.gen_range(0..p))).unwrap();
        }
        acc
    } else {
        let ctx = GroupAlgebraContext::with_prime(p, 1).unwrap();
        let c = random_trivial_complex(&mut rng, ctx);
        let comps = null_homotopic(&mut rng, &c);
        let g = ChainMap::new(c.clone(), c.clone(), 0, comps).unwrap();
        // null-homotopic maps vanish on homology
        let h = Homology::compute(&c).unwrap();
        prop_assert!(induced_map(&g, &h, &h).unwrap().values().all(|m| m.is_zero()));
        g
    };
    prop_assert!(map_commutes(&map));
    // perturb one component: accepted only if it still commutes
    let (src, tgt, deg) = (map.source().clone(), map.target().clone(), map.degree());
    let i = rng.gen_range(src.lo()..=src.hi());
    if tgt.term(i + deg).is_some() {
        let mut comps = map.components().clone();
        let c = map.component_or_zero(i);
        let bump = SparseMatrix::from_triplets(c.rows(), c.cols(), f, vec![(rng.gen_range(0..c.rows()), rng.gen_range(0..c.cols()), 1)]).unwrap();
        comps.insert(i, c.add(&bump).unwrap());
        let ok = commutes(&src, &tgt, deg, &comps);
        let built = ChainMap::new(src, tgt, deg, comps);
        prop_assert!(ok || built.is_err());
        if let Ok(g) = built {
            prop_assert!(map_commutes(&g));
        }
    }
    Ok(())
}

pub fn graded_commutation(cases: u32) -> Result<(), String> {
    run(cases, (prime(), any::<bool>(), any::<u64>()), |(p, odd, seed)| graded_commutation_case(p, odd, seed))
}

fn euler_characteristic_case(p: u32, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = GroupAlgebraContext::with_prime(p, 1).unwrap();
    let c = random_trivial_complex(&mut rng, ctx);
    let oracle = oracle_homology(&c);
    let h = Homology::compute(&c).unwrap();
    prop_assert_eq!(&h.dims(), &oracle);
    prop_assert_eq!(&homology_dims(&c).unwrap(), &oracle);
    prop_assert_eq!(euler(oracle.clone().into_iter()), euler(c.degrees().map(|i| (i, c.dim(i)))));
    // representatives are independent cycles
    for hd in h.degrees() {
        if hd.dim > 0 {
            if let Some(d) = c.d(hd.degree) {
                prop_assert!(d.mul(&hd.reps).unwrap().is_zero());
            }
            prop_assert_eq!(naive_rank(dense(&hd.reps), p), hd.dim);
        }
    }
    // the cone of a null-homotopic self-map has twice the homology
    let comps = null_homotopic(&mut rng, &c);
    let g = ChainMap::new(c.clone(), c.clone(), 0, comps).unwrap();
    let cone = Complex::cone(&g).unwrap();
    let cone_dims = oracle_homology(&cone);
    prop_assert_eq!(euler(cone_dims.clone().into_iter()), 0);
    prop_assert_eq!(cone_dims.values().sum::<usize>(), 2 * h.total_dim());
    let les = cone_homology_dims(&h.dims(), &induced_map(&g, &h, &h).unwrap(), 0);
    for (j, d) in cone_dims {
        prop_assert_eq!(les.get(&j).copied().unwrap_or(0), d);
    }
    Ok(())
}

pub fn euler_characteristic(cases: u32) -> Result<(), String> {
    run(cases, (prime(), any::<u64>()), |(p, seed)| euler_characteristic_case(p, seed))
}

fn tensor_action_is_unipotent_case(p: u32, r: usize, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // keep the tensor below a few hundred dimensions
    let r = if p <= 3 { r } else { 1 };
    let ctx = GroupAlgebraContext::with_prime(p, r).unwrap();
    let m = random_module(&mut rng, ctx);
    let n = random_module(&mut rng, ctx);
    let t = m.tensor(&n).unwrap();
    t.validate().unwrap();
    for i in 0..r {
        let (x, y) = (dense(m.action(i)), dense(n.action(i)));
        let gx = naive_add(&naive_identity(m.dim()), &x, p);
        let gy = naive_add(&naive_identity(n.dim()), &y, p);
        // g acts diagonally: 1 + X_T = (1 + X) ⊗ (1 + Y)
        let g = naive_kron(&gx, &gy, p);
        prop_assert_eq!(&naive_add(&naive_identity(t.dim()), &dense(t.action(i)), p), &g);
        let mut pow = naive_identity(t.dim());
        for _ in 0..p {
            pow = naive_mul(&pow, &g, p);
        }
        prop_assert_eq!(pow, naive_identity(t.dim()));
    }
    Ok(())
}

pub fn tensor_action_is_unipotent(cases: u32) -> Result<(), String> {
    run(cases, (prime(), 1usize..=2, any::<u64>()), |(p, r, seed)| tensor_action_is_unipotent_case(p, r, seed))
}
