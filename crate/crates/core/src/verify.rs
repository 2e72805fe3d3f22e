//! Identity suites run by `hopf verify all` and the acceptance tests.
//!
//! Every cap is derived from [`Config::max_degree`] (`d` below): QSym axioms
//! to weight `d+1`, NSym to `d`, tree algebras to `d+1` vertices, pairings to
//! `d`, tree multiplicities to `d+1` non-root vertices. Reports contain no
//! timings so repeated runs are byte-identical.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::composition::{compositions_of, compositions_up_to, partitions_of, Composition};
use crate::error::{invalid, Result};
use crate::hopf::{
    antipode_holds, associativity_holds, coassociativity_holds, compatibility_holds, counit_holds, unit_holds,
    GradedHopf, Tensor2,
};
use crate::hopf_trees::{
    epsilon, kappa, ladder_bouquet, multiplicity_formula, n_operator, pair_t_hk, pair_t_hk_tensor, phi, phi_planar,
    phi_star, pi, trees_up_to, HFElement, HKElement, TElement, GL, HF, HK, MAX_KAPPA_DEGREE, MAX_PHI_STAR_DEGREE,
};
use crate::lincomb::{LinComb, Rational};
use crate::mzv::ZetaEvaluator;
use crate::qsym::{quasi_shuffle, NSym, NSymElement, QSym, QSymElement};
use crate::series::expand_truncated;
use crate::sym::{abelianize, SymElement};
use crate::trees::{corolla, enumerate_forests, enumerate_planar_forests, ladder, Forest, RootedTree};
use crate::words::{admissible_words_of_weight, double_shuffle_delta, ohno_action, tau_admissible, AdmissibleWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub max_degree: u32,
    pub truncation_n: u64,
    pub tolerance: f64,
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Self { max_degree: 5, truncation_n: 1_000_000, tolerance: 1e-4, format: OutputFormat::Text }
    }
}

impl Config {
    pub fn new(max_degree: u32, truncation_n: u64, tolerance: f64, format: OutputFormat) -> Result<Self> {
        if max_degree < 1 {
            return invalid("--max-degree must be at least 1");
        }
        if truncation_n < 2 {
            return invalid("--N must be at least 2");
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return invalid("--tol must be a positive number");
        }
        Ok(Self { max_degree, truncation_n, tolerance, format })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    /// Number of individual identities checked.
    pub checked: usize,
    /// The first failure, or empty.
    pub detail: String,
}

/// Counts checks and remembers the first failure.
struct Tally {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, checked: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn error(&mut self, what: String) {
        self.checked += 1;
        if self.failure.is_none() {
            self.failure = Some(what);
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            pass: self.failure.is_none(),
            checked: self.checked,
            detail: self.failure.unwrap_or_default(),
        }
    }
}

/// Quasi-shuffle products against truncated-series products, exactly.
pub fn qsym_oracle(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree;
    let (vars, deg) = (d as usize + 3, 2 * d);
    let mut t = Tally::new("qsym-oracle");
    let comps = compositions_up_to(d);
    for a in &comps {
        for b in comps.iter().filter(|b| a.weight() + b.weight() <= d) {
            let product = quasi_shuffle(a.parts(), b.parts());
            let lhs = expand_truncated(&product, vars, deg);
            let rhs = expand_truncated(&LinComb::basis(a.clone()), vars, deg)
                .mul(&expand_truncated(&LinComb::basis(b.clone()), vars, deg));
            t.check(lhs == rhs, || format!("M{} * M{}", a, b));
        }
    }
    t.finish()
}

fn axioms<A: GradedHopf>(t: &mut Tally, basis: &[A::Basis], compat_degree: usize) {
    for b in basis {
        t.check(coassociativity_holds::<A>(b), || format!("coassociativity at {:?}", b));
        t.check(counit_holds::<A>(b), || format!("counit at {:?}", b));
        t.check(antipode_holds::<A>(b), || format!("antipode at {:?}", b));
        t.check(unit_holds::<A>(b), || format!("unit at {:?}", b));
    }
    for a in basis {
        for b in basis.iter().filter(|b| A::degree(a) + A::degree(b) <= compat_degree) {
            t.check(compatibility_holds::<A>(a, b), || format!("compatibility at {:?}, {:?}", a, b));
        }
    }
}

pub fn hopf_qsym(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("hopf-qsym");
    axioms::<QSym>(&mut t, &compositions_up_to(d as u32 + 1), d.saturating_sub(1));
    t.finish()
}

pub fn hopf_nsym(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("hopf-nsym");
    axioms::<NSym>(&mut t, &compositions_up_to(d as u32), d.saturating_sub(1));
    t.finish()
}

pub fn hopf_hk(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("hopf-hk");
    let forests: Vec<Forest> = (0..=d + 1).flat_map(enumerate_forests).collect();
    axioms::<HK>(&mut t, &forests, d.saturating_sub(1));
    t.finish()
}

pub fn hopf_hf(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("hopf-hf");
    let forests: Vec<_> = (0..=d + 1).flat_map(enumerate_planar_forests).collect();
    axioms::<HF>(&mut t, &forests, d.saturating_sub(2));
    t.finish()
}

pub fn hopf_t(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("hopf-t");
    let trees = trees_up_to(d + 1);
    axioms::<GL>(&mut t, &trees, d.saturating_sub(1));
    let small: Vec<&RootedTree> = trees.iter().filter(|x| x.non_root() < d).collect();
    for a in &small {
        for b in &small {
            for c in small.iter().filter(|c| a.non_root() + b.non_root() + c.non_root() < d) {
                t.check(associativity_holds::<GL>(a, b, c), || format!("associativity at {}, {}, {}", a, b, c));
            }
        }
    }
    t.finish()
}

/// `⟨M_I M_J, S_K⟩ = ⟨M_I ⊗ M_J, Δ S_K⟩` and `⟨Δ M_K, S_I ⊗ S_J⟩ = ⟨M_K, S_I S_J⟩`.
pub fn duality_qsym_nsym(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree;
    let mut t = Tally::new("duality-qsym-nsym");
    let comps = compositions_up_to(d);
    for a in &comps {
        for b in comps.iter().filter(|b| a.weight() + b.weight() <= d) {
            let pair = (a.clone(), b.clone());
            let m_prod = QSymElement::basis(a.clone()).mul(&QSymElement::basis(b.clone()));
            let s_prod = NSymElement::basis(a.clone()).mul(&NSymElement::basis(b.clone()));
            for k in compositions_of(a.weight() + b.weight()) {
                let delta_s = NSymElement::basis(k.clone()).coproduct();
                t.check(m_prod.coeff(&k) == delta_s.coeff(&pair), || {
                    format!("<M{} M{}, S{}>", a, b, k)
                });
                let delta_m = QSymElement::basis(k.clone()).coproduct();
                t.check(delta_m.coeff(&pair) == s_prod.coeff(&k), || {
                    format!("<M{}, S{} S{}>", k, a, b)
                });
            }
        }
    }
    t.finish()
}

/// `⟨t1∘t2, f⟩ = ⟨t1⊗t2, Δ_K f⟩` and `⟨Δ_T t, f1⊗f2⟩ = ⟨t, f1 f2⟩` up to `d` vertices.
pub fn duality_t_hk(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("duality-t-hk");
    let trees = trees_up_to(d);
    let forests: Vec<Vec<Forest>> = (0..=d).map(enumerate_forests).collect();
    for t1 in &trees {
        for t2 in trees.iter().filter(|t2| t1.non_root() + t2.non_root() <= d) {
            let prod = TElement::basis(t1.clone()).mul(&TElement::basis(t2.clone()));
            let pair = LinComb::basis((t1.clone(), t2.clone()));
            for f in &forests[t1.non_root() + t2.non_root()] {
                let hk = HKElement::basis(f.clone());
                let lhs = pair_t_hk(&prod, &hk);
                let rhs = pair_t_hk_tensor(&pair, &hk.coproduct());
                t.check(lhs == rhs, || format!("<{} o {}, {}>", t1, t2, f));
            }
        }
    }
    for n1 in 0..=d {
        for n2 in 0..=d - n1 {
            for f1 in &forests[n1] {
                for f2 in &forests[n2] {
                    let prod = HKElement::basis(f1.clone()).mul(&HKElement::basis(f2.clone()));
                    let pair: Tensor2<Forest> = LinComb::basis((f1.clone(), f2.clone()));
                    for tree in trees_up_to(n1 + n2 + 1).into_iter().filter(|x| x.non_root() == n1 + n2) {
                        let te = TElement::basis(tree.clone());
                        let lhs = pair_t_hk_tensor(&te.coproduct(), &pair);
                        let rhs = pair_t_hk(&te, &prod);
                        t.check(lhs == rhs, || format!("<D {}, {} (x) {}>", tree, f1, f2));
                    }
                }
            }
        }
    }
    t.finish()
}

fn words(terms: &[(&str, i64)]) -> LinComb<AdmissibleWord> {
    terms.iter().map(|(w, c)| (w.parse().expect("static word"), Rational::from_integer(BigInt::from(*c)))).collect()
}

fn comps(terms: &[(&[u32], i64)]) -> LinComb<Composition> {
    terms
        .iter()
        .map(|(p, c)| (Composition::new(p.to_vec()).expect("static composition"), Rational::from_integer(BigInt::from(*c))))
        .collect()
}

/// ζ(2), Euler's ζ(2,1) = ζ(3), the two expansions of ζ(2)², and double shuffle up to weight `d`.
pub fn mzv_values(cfg: &Config) -> SuiteReport {
    let mut t = Tally::new("mzv-values");
    let mut z = match ZetaEvaluator::new(cfg.truncation_n) {
        Ok(z) => z,
        Err(e) => {
            t.error(e.to_string());
            return t.finish();
        }
    };
    let run = |t: &mut Tally, z: &mut ZetaEvaluator| -> Result<()> {
        let n = cfg.truncation_n as f64;
        let z2 = z.eval(&comps(&[(&[2], 1)]))?.value;
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        // tail of Σ 1/i² beyond N is below 1/N
        t.check((z2 - exact).abs() < 2.0 / n, || format!("zeta(2) = {} vs {}", z2, exact));
        let euler = z.eval(&comps(&[(&[1, 2], 1), (&[3], -1)]))?.value;
        t.check(euler.abs() < cfg.tolerance, || format!("zeta(2,1) - zeta(3) = {}", euler));
        let square = z2 * z2;
        let stuffle = z.eval(&comps(&[(&[2, 2], 2), (&[4], 1)]))?.value;
        let shuffle = z.eval(&words(&[("xxyy", 4), ("xyxy", 2)]))?.value;
        t.check((stuffle - square).abs() < cfg.tolerance, || format!("2z(2,2)+z(4) - z(2)^2 = {}", stuffle - square));
        t.check((shuffle - square).abs() < cfg.tolerance, || format!("4z(3,1)+2z(2,2) - z(2)^2 = {}", shuffle - square));
        t.check((shuffle - stuffle).abs() < cfg.tolerance, || format!("shuffle - stuffle = {}", shuffle - stuffle));
        let d = cfg.max_degree as usize;
        for wu in 2..=d {
            for wv in 2..=d.saturating_sub(wu) {
                for u in admissible_words_of_weight(wu) {
                    for v in admissible_words_of_weight(wv) {
                        let rep = z.verify(&double_shuffle_delta(&u, &v)?, cfg.tolerance)?;
                        t.check(rep.pass, || format!("double shuffle {} {}: {}", u, v, rep.value));
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut t, &mut z) {
        t.error(e.to_string());
    }
    t.finish()
}

/// `ζ(h_i·w) = ζ(h_i·τ(w))` for admissible `w` of weight `<= d` and `i <= 2`.
pub fn ohno(cfg: &Config) -> SuiteReport {
    let mut t = Tally::new("ohno");
    let run = |t: &mut Tally| -> Result<()> {
        let mut z = ZetaEvaluator::new(cfg.truncation_n)?;
        for weight in 2..=cfg.max_degree as usize {
            for w in admissible_words_of_weight(weight) {
                for i in 0..=2 {
                    let rel = &ohno_action(i, &w)? - &ohno_action(i, &tau_admissible(&w))?;
                    let rep = z.verify(&rel, cfg.tolerance)?;
                    t.check(rep.pass, || format!("h_{} on {}: defect {} (error {})", i, w, rep.value, rep.error_estimate));
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut t) {
        t.error(e.to_string());
    }
    t.finish()
}

/// Divided powers, the corolla identity, `φ*(κ_n) = h_n`, and the φ/Φ/π square.
pub fn tree_identities(cfg: &Config) -> SuiteReport {
    let d = cfg.max_degree as usize;
    let mut t = Tally::new("tree-identities");
    let kappas: Vec<TElement> = std::iter::once(TElement::one())
        .chain((1..=d.min(MAX_KAPPA_DEGREE)).map(|n| kappa(n).expect("degree in range")))
        .collect();
    for n in 1..kappas.len() {
        let mut expected = LinComb::zero();
        for i in 0..=n {
            expected += &kappas[i].terms().tensor(kappas[n - i].terms());
        }
        t.check(kappas[n].coproduct() == expected, || format!("kappa_{} divided powers", n));
        let eps = epsilon(n).expect("degree in range");
        let fact = (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k);
        t.check(eps.scale(&Rational::from_integer(fact)) == TElement::basis(corolla(n)), || {
            format!("{}! epsilon_{} is not the corolla", n, n)
        });
    }
    for n in 1..kappas.len().min(d).min(MAX_PHI_STAR_DEGREE + 1) {
        let ok = phi_star(&kappas[n]).map(|s| s.same_as(&SymElement::h(n as u32))).unwrap_or(false);
        t.check(ok, || format!("phi*(kappa_{}) != h_{}", n, n));
    }
    let ladders: Vec<HKElement> = std::iter::once(HKElement::one())
        .chain((1..=d + 1).map(|n| HKElement::basis(Forest::single(ladder(n).expect("positive")))))
        .collect();
    for n in 1..ladders.len() {
        let mut expected = LinComb::zero();
        for i in 0..=n {
            expected += &ladders[i].terms().tensor(ladders[n - i].terms());
        }
        t.check(ladders[n].coproduct() == expected, || format!("ladder {} divided powers", n));
    }
    for comp in compositions_up_to(d as u32) {
        let w = NSymElement::elementary(comp.parts()).expect("positive parts");
        let up = pi(&phi_planar(&w));
        let down = phi(&abelianize(&w));
        t.check(up == down, || format!("square fails on e{}", comp));
    }
    for n in 1..=d as u32 {
        let e = NSymElement::elementary(&[n]).expect("positive");
        let lhs = phi_planar(&e).coproduct();
        let rhs = e.coproduct().map_linear(|(a, b)| {
            let pa = phi_planar(&NSymElement::basis(a.clone()));
            let pb = phi_planar(&NSymElement::basis(b.clone()));
            pa.terms().tensor(pb.terms())
        });
        t.check(lhs == rhs, || format!("Phi is not a coalgebra map on e_{}", n));
        let s = SymElement::e(n);
        let lhs = phi(&s).coproduct();
        let rhs = s.coproduct_e().map_linear(|(a, b)| {
            let pa = phi(&SymElement::basis_element(crate::sym::SymBasis::E, a.clone()));
            let pb = phi(&SymElement::basis_element(crate::sym::SymBasis::E, b.clone()));
            pa.terms().tensor(pb.terms())
        });
        t.check(lhs == rhs, || format!("phi is not a coalgebra map on e_{}", n));
    }
    let hf_small: Vec<HFElement> = (1..=d as u32)
        .map(|n| phi_planar(&NSymElement::elementary(&[n]).expect("positive")))
        .collect();
    for (i, a) in hf_small.iter().enumerate() {
        for (j, b) in hf_small.iter().enumerate().filter(|(j, _)| i + j + 2 <= d) {
            let e = NSymElement::elementary(&[i as u32 + 1, j as u32 + 1]).expect("positive");
            t.check(a.mul(b) == phi_planar(&e), || format!("Phi is not multiplicative on e_{} e_{}", i + 1, j + 1));
        }
    }
    t.finish()
}

/// Tree multiplicities from `N^k(•)` against the closed formula, and positivity.
pub fn multiplicity(cfg: &Config) -> SuiteReport {
    let top = cfg.max_degree as usize + 1;
    let mut t = Tally::new("multiplicity");
    let mut growth = vec![TElement::one()];
    for k in 1..=top {
        let next = n_operator(&growth[k - 1], 1);
        growth.push(next);
    }
    for k in 1..=top {
        for lambda in partitions_of(k as u32) {
            let tree = ladder_bouquet(lambda.parts()).expect("positive parts");
            let brute = growth[k].coeff(&tree);
            let formula = multiplicity_formula(lambda.parts()).expect("nonempty");
            t.check(brute == formula, || format!("{:?}: N-operator {} vs formula {}", lambda, brute, formula));
        }
    }
    for tree in trees_up_to(top + 1) {
        let c = growth[tree.non_root()].coeff(&tree);
        t.check(c.is_integer() && c.is_positive(), || format!("n(.; {}) = {}", tree, c));
    }
    for (k, g) in growth.iter().enumerate() {
        let ok = g.terms().iter().all(|(x, c)| x.non_root() == k && c.is_integer() && !c.is_negative() && !c.is_zero());
        t.check(ok, || format!("N^{}(.) has a bad coefficient", k));
    }
    t.finish()
}

/// Every suite, in a fixed order.
pub fn run_all(cfg: &Config) -> Vec<SuiteReport> {
    vec![
        qsym_oracle(cfg),
        hopf_qsym(cfg),
        hopf_nsym(cfg),
        hopf_hk(cfg),
        hopf_hf(cfg),
        hopf_t(cfg),
        duality_qsym_nsym(cfg),
        duality_t_hk(cfg),
        mzv_values(cfg),
        ohno(cfg),
        tree_identities(cfg),
        multiplicity(cfg),
    ]
}

#[derive(Serialize)]
struct JsonReport<'a> {
    max_degree: u32,
    #[serde(rename = "N")]
    truncation_n: u64,
    tol: f64,
    pass: bool,
    suites: &'a [SuiteReport],
}

/// The pass/fail table printed by `verify all`.
pub fn render(cfg: &Config, reports: &[SuiteReport]) -> String {
    let pass = reports.iter().all(|r| r.pass);
    match cfg.format {
        OutputFormat::Json => {
            let doc = JsonReport {
                max_degree: cfg.max_degree,
                truncation_n: cfg.truncation_n,
                tol: cfg.tolerance,
                pass,
                suites: reports,
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "max-degree {}  N {}  tol {:e}", cfg.max_degree, cfg.truncation_n, cfg.tolerance);
            let _ = writeln!(out, "{:<20} {:>8}  result", "suite", "checked");
            for r in reports {
                let _ = write!(out, "{:<20} {:>8}  {}", r.name, r.checked, if r.pass { "PASS" } else { "FAIL" });
                if !r.detail.is_empty() {
                    let _ = write!(out, "  ({})", r.detail);
                }
                out.push('\n');
            }
            let _ = writeln!(out, "overall: {}", if pass { "PASS" } else { "FAIL" });
            out
        }
    }
}
