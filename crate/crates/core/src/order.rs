//! The total order on minimal generators of powers of an edge ideal:
//! edge-divisibility, greedy maximal expressions, the ordered list, and the
//! colon-containment property checker that the regularity framework rests on.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::Instant;

/// A chosen order L1 > L2 > ... > Lk on the minimal generators of an edge
/// ideal. The results downstream hold for any base order, so this is caller
/// input; randomized orders strengthen the property tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    edges: Vec<Monomial>,
}

impl EdgeOrder {
    /// Validates that `edges` is exactly the minimal generating set of `ideal`.
    pub fn new(ideal: &MonomialIdeal, edges: Vec<Monomial>) -> Result<EdgeOrder> {
        let as_set: HashSet<&Monomial> = edges.iter().collect();
        if as_set.len() != edges.len()
            || edges.len() != ideal.num_gens()
            || !ideal.gens().iter().all(|g| as_set.contains(g))
        {
            return Err(Error::Invalid(
                "edge order must list each minimal generator exactly once".into(),
            ));
        }
        Ok(EdgeOrder { edges })
    }

    /// Default order: lexicographic on exponent vectors, biggest first.
    pub fn lex(ideal: &MonomialIdeal) -> EdgeOrder {
        let mut edges = ideal.gens().to_vec();
        edges.sort_by(|a, b| b.lex_cmp(a));
        EdgeOrder { edges }
    }

    /// Seed-deterministic shuffle of the lex order.
    pub fn shuffled(ideal: &MonomialIdeal, seed: u64) -> EdgeOrder {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut edges = Self::lex(ideal).edges;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        edges.shuffle(&mut rng);
        EdgeOrder { edges }
    }

    pub fn edges(&self) -> &[Monomial] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// 0-based position of a generator.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.edges.iter().position(|e| e == m)
    }
}

/// Precomputed powers I^1..I^max with hashed generator sets, so
/// edge-divisibility tests are set lookups.
pub struct Powers {
    ideal: MonomialIdeal,
    powers: Vec<MonomialIdeal>,
    members: Vec<HashSet<Monomial>>,
}

impl Powers {
    pub fn new(ideal: &MonomialIdeal, max: u32) -> Powers {
        let mut powers = Vec::with_capacity(max as usize);
        let mut members = Vec::with_capacity(max as usize);
        let mut current = ideal.clone();
        for n in 1..=max {
            if n > 1 {
                current = current
                    .multiply(ideal)
                    .expect("same context by construction");
            }
            members.push(current.gens().iter().cloned().collect());
            powers.push(current.clone());
        }
        Powers {
            ideal: ideal.clone(),
            powers,
            members,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `I^n` for 1 <= n <= max.
    pub fn power(&self, n: u32) -> &MonomialIdeal {
        &self.powers[(n - 1) as usize]
    }

    pub fn max(&self) -> u32 {
        self.powers.len() as u32
    }

    pub fn is_min_gen(&self, m: &Monomial, n: u32) -> bool {
        self.members[(n - 1) as usize].contains(m)
    }
}

/// `m1` (a generator of I^k) divides `m2` (a generator of I^n, n > k) "as an
/// edge" when the quotient is a minimal generator of I^(n-k).
pub fn edge_divides(m1: &Monomial, m2: &Monomial, powers: &Powers, k: u32, n: u32) -> Result<bool> {
    if n <= k {
        return Err(Error::Invalid("edge divisibility needs n > k".into()));
    }
    if !powers.is_min_gen(m1, k) {
        return Err(Error::NotInPower(m1.render(powers.ideal.context())));
    }
    if !powers.is_min_gen(m2, n) {
        return Err(Error::NotInPower(m2.render(powers.ideal.context())));
    }
    Ok(match m2.div(m1) {
        Some(q) => powers.is_min_gen(&q, n - k),
        None => false,
    })
}

/// The unique greedy factorization of a generator of I^n into base edges:
/// always take the least-indexed edge dividing the remainder as an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalExpression {
    /// 0-based indices into the edge order, non-decreasing.
    pub factors: Vec<usize>,
    /// Multiplicity of each base edge in the factorization; sums to n.
    pub exponent_vector: Vec<u32>,
}

impl MaximalExpression {
    pub fn product(&self, order: &EdgeOrder) -> Monomial {
        self.factors
            .iter()
            .fold(Monomial::one(), |acc, &i| acc.mul(&order.edges()[i]))
    }

    /// First-disagreement comparison of factor index sequences; the earlier
    /// (smaller) index wins. Equivalent to lex comparison of the exponent
    /// vectors.
    pub fn cmp_desc(&self, other: &MaximalExpression) -> Ordering {
        for (a, b) in self.factors.iter().zip(&other.factors) {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

pub fn maximal_expression(
    m: &Monomial,
    order: &EdgeOrder,
    powers: &Powers,
    n: u32,
) -> Result<MaximalExpression> {
    if !powers.is_min_gen(m, n) {
        return Err(Error::NotInPower(m.render(powers.ideal().context())));
    }
    let mut factors = Vec::with_capacity(n as usize);
    let mut rest = m.clone();
    for level in (1..=n).rev() {
        let mut chosen = None;
        for (i, e) in order.edges().iter().enumerate() {
            let ok = if level == 1 {
                rest == *e
            } else {
                edge_divides(e, &rest, powers, 1, level)?
            };
            if ok {
                chosen = Some((i, e.clone()));
                break;
            }
        }
        let (i, e) = chosen.ok_or_else(|| {
            Error::NotInPower(m.render(powers.ideal().context()))
        })?;
        factors.push(i);
        rest = rest.div(&e).expect("edge divides the remainder");
    }
    let mut exponent_vector = vec![0u32; order.len()];
    for &i in &factors {
        exponent_vector[i] += 1;
    }
    Ok(MaximalExpression {
        factors,
        exponent_vector,
    })
}

/// The earliest base edge dividing `m` as an edge; the first factor of the
/// maximal expression.
pub fn belongs_to(m: &Monomial, order: &EdgeOrder, powers: &Powers, n: u32) -> Result<usize> {
    if n == 1 {
        return order
            .position(m)
            .ok_or_else(|| Error::NotInPower(m.render(powers.ideal().context())));
    }
    Ok(maximal_expression(m, order, powers, n)?.factors[0])
}

/// The ordered list of minimal generators of I^n, descending, with each
/// generator's maximal expression.
#[derive(Debug, Clone)]
pub struct OrderedGenerators {
    pub n: u32,
    pub list: Vec<(Monomial, MaximalExpression)>,
}

impl OrderedGenerators {
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.list.iter().map(|(m, _)| m)
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.list.iter().position(|(g, _)| g == m)
    }

    /// The compact one-line rendering `a²b² > ab²c > ...`.
    pub fn render_chain(&self, ideal: &MonomialIdeal) -> String {
        self.list
            .iter()
            .map(|(m, _)| m.render_compact(ideal.context()))
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

pub fn ordered_generators(
    order: &EdgeOrder,
    powers: &Powers,
    n: u32,
) -> Result<OrderedGenerators> {
    let mut list: Vec<(Monomial, MaximalExpression)> = powers
        .power(n)
        .gens()
        .iter()
        .map(|m| Ok((m.clone(), maximal_expression(m, order, powers, n)?)))
        .collect::<Result<_>>()?;
    list.sort_by(|(_, a), (_, b)| a.cmp_desc(b).reverse());
    Ok(OrderedGenerators { n, list })
}

/// Verdict for one (j, k) pair in the ordering property scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PairVerdict {
    /// (L_j : L_(k+1)) lies inside (I^(n+1) : L_(k+1)).
    Subset,
    /// Certified by index i: (L_i : L_(k+1)) is a variable containing
    /// (L_j : L_(k+1)).
    Principal { i: usize },
    /// No certificate found; would falsify the implementation.
    Counterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderingReport {
    pub n: u32,
    pub pairs_checked: u64,
    pub subset: u64,
    pub principal: u64,
    pub counterexamples: Vec<(usize, usize)>,
    pub elapsed_ms: u128,
}

impl OrderingReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Scans every j <= k pair of the ordered list: whenever
/// (L_j : L_(k+1)) ⊄ (I^(n+1) : L_(k+1)), some i <= k must give a
/// variable-generated (L_i : L_(k+1)) containing it.
pub fn verify_ordering_property(
    order: &EdgeOrder,
    powers: &Powers,
    n: u32,
    mut line_sink: Option<&mut dyn FnMut(usize, usize, &PairVerdict)>,
) -> Result<OrderingReport> {
    let start = Instant::now();
    let gens = ordered_generators(order, powers, n)?;
    let next_power = powers.power(n + 1);
    let mut report = OrderingReport {
        n,
        pairs_checked: 0,
        subset: 0,
        principal: 0,
        counterexamples: Vec::new(),
        elapsed_ms: 0,
    };
    let list = &gens.list;
    for k in 1..list.len() {
        let target = &list[k].0;
        let colon_ideal = next_power.colon(target);
        // Degree-1 colon monomials among L_1..L_k, for certificates.
        let principal_vars: Vec<(usize, Monomial)> = (0..k)
            .map(|i| (i, list[i].0.colon(target)))
            .filter(|(_, q)| q.degree() == 1)
            .collect();
        for j in 0..k {
            report.pairs_checked += 1;
            let q = list[j].0.colon(target);
            let verdict = if colon_ideal.contains_monomial(&q) {
                report.subset += 1;
                PairVerdict::Subset
            } else if let Some((i, _)) =
                principal_vars.iter().find(|(_, var)| var.divides(&q))
            {
                report.principal += 1;
                PairVerdict::Principal { i: *i }
            } else {
                report.counterexamples.push((j, k));
                PairVerdict::Counterexample
            };
            if let Some(sink) = line_sink.as_deref_mut() {
                sink(j, k, &verdict);
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Renders one scan line: `j k -> {subset|principal:i|counterexample}`.
pub fn render_pair_line(j: usize, k: usize, verdict: &PairVerdict) -> String {
    let tail = match verdict {
        PairVerdict::Subset => "subset".to_string(),
        PairVerdict::Principal { i } => format!("principal:{i}"),
        PairVerdict::Counterexample => "counterexample".to_string(),
    };
    format!("{j} {k} -> {tail}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::monomial::edge_ideal;

    fn paw_setup() -> (MonomialIdeal, EdgeOrder, Powers) {
        let (ideal, order) = fixtures::paw_ideal();
        let powers = Powers::new(&ideal, 4);
        (ideal, order, powers)
    }

    #[test]
    fn edge_divisibility_on_the_paw_ideal() {
        let (ideal, _, powers) = paw_setup();
        let ctx = ideal.context();
        let ab = Monomial::parse("a*b", ctx).unwrap();
        let ab2d = Monomial::parse("a*b^2*d", ctx).unwrap();
        let abcd = Monomial::parse("a*b*c*d", ctx).unwrap();
        assert!(edge_divides(&ab, &ab2d, &powers, 1, 2).unwrap());
        assert!(!edge_divides(&ab, &abcd, &powers, 1, 2).unwrap());
    }

    #[test]
    fn any_edge_divides_its_products() {
        let i = edge_ideal(&fixtures::triangle());
        let powers = Powers::new(&i, 2);
        for e in i.gens() {
            for f in i.gens() {
                let prod = e.mul(f);
                assert!(edge_divides(e, &prod, &powers, 1, 2).unwrap());
            }
        }
    }

    #[test]
    fn edge_divides_rejects_non_members() {
        let (ideal, _, powers) = paw_setup();
        let ctx = ideal.context();
        let junk = Monomial::parse("a^4", ctx).unwrap();
        assert!(edge_divides(&junk, &junk, &powers, 1, 2).is_err());
    }

    #[test]
    fn maximal_expression_of_degree_one_power() {
        let (_, order, powers) = paw_setup();
        for (i, e) in order.edges().iter().enumerate() {
            let ex = maximal_expression(e, &order, &powers, 1).unwrap();
            assert_eq!(ex.factors, vec![i]);
        }
    }

    #[test]
    fn known_maximal_expressions_in_the_square() {
        let (ideal, order, powers) = paw_setup();
        let ctx = ideal.context();
        // abcd factors as (bc, ad): ab does not edge-divide it.
        let abcd = Monomial::parse("a*b*c*d", ctx).unwrap();
        let ex = maximal_expression(&abcd, &order, &powers, 2).unwrap();
        assert_eq!(ex.factors, vec![1, 2]);
        // ab²d factors as (ab, bd).
        let ab2d = Monomial::parse("a*b^2*d", ctx).unwrap();
        let ex = maximal_expression(&ab2d, &order, &powers, 2).unwrap();
        assert_eq!(ex.factors, vec![0, 3]);
    }

    #[test]
    fn expression_product_reconstructs_the_monomial() {
        let (_, order, powers) = paw_setup();
        for n in 1..=3u32 {
            for m in powers.power(n).gens() {
                let ex = maximal_expression(m, &order, &powers, n).unwrap();
                assert_eq!(&ex.product(&order), m);
                assert_eq!(ex.exponent_vector.iter().sum::<u32>(), n);
                // Greedy factor sequences are non-decreasing.
                assert!(ex.factors.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn ordered_list_of_first_power_is_the_base_order() {
        let (ideal, order, powers) = paw_setup();
        let l1 = ordered_generators(&order, &powers, 1).unwrap();
        assert_eq!(l1.render_chain(&ideal), "ab > bc > ad > bd");
    }

    #[test]
    fn ordered_list_of_the_square_matches_the_known_chain() {
        let (ideal, order, powers) = paw_setup();
        let l2 = ordered_generators(&order, &powers, 2).unwrap();
        assert_eq!(
            l2.render_chain(&ideal),
            "a²b² > ab²c > a²bd > ab²d > b²c² > abcd > b²cd > a²d² > abd² > b²d²"
        );
    }

    #[test]
    fn belongs_to_on_known_cases() {
        let (ideal, order, powers) = paw_setup();
        let ctx = ideal.context();
        let abcd = Monomial::parse("a*b*c*d", ctx).unwrap();
        assert_eq!(belongs_to(&abcd, &order, &powers, 2).unwrap(), 1); // bc
        let ab2d = Monomial::parse("a*b^2*d", ctx).unwrap();
        assert_eq!(belongs_to(&ab2d, &order, &powers, 2).unwrap(), 0); // ab
        let e2 = order.edges()[2].mul(&order.edges()[2]);
        assert_eq!(belongs_to(&e2, &order, &powers, 2).unwrap(), 2);
    }

    /// All expressions of `m` as an n-fold product, as exponent vectors.
    fn all_expressions(
        m: &Monomial,
        order: &EdgeOrder,
        n: u32,
        start: usize,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if n == 0 {
            if m.is_one() {
                out.push(acc.clone());
            }
            return;
        }
        for i in start..order.len() {
            if let Some(q) = m.div(&order.edges()[i]) {
                acc[i] += 1;
                all_expressions(&q, order, n - 1, i, acc, out);
                acc[i] -= 1;
            }
        }
    }

    #[test]
    fn greedy_expression_is_the_lex_maximal_one() {
        // Brute-force comparator over every factorization, on ideals with at
        // most 5 edges and n <= 2, plus the paw at n = 3.
        let cases = vec![
            (edge_ideal(&fixtures::paw()), 3u32),
            (edge_ideal(&fixtures::cycle(5)), 2),
            (edge_ideal(&fixtures::star(4)), 2),
            (edge_ideal(&fixtures::two_k2()), 2),
        ];
        for (ideal, nmax) in cases {
            let order = EdgeOrder::lex(&ideal);
            let powers = Powers::new(&ideal, nmax + 1);
            for n in 2..=nmax {
                for m in powers.power(n).gens() {
                    let greedy = maximal_expression(m, &order, &powers, n).unwrap();
                    let mut acc = vec![0u32; order.len()];
                    let mut all = Vec::new();
                    all_expressions(m, &order, n, 0, &mut acc, &mut all);
                    let lexmax = all.iter().max().unwrap();
                    assert_eq!(
                        &greedy.exponent_vector, lexmax,
                        "greedy disagrees with lex-max for {}",
                        m.render(ideal.context())
                    );
                }
            }
        }
    }

    #[test]
    fn earlier_belonging_edge_means_bigger_generator() {
        let (_, order, powers) = paw_setup();
        for n in 2..=3u32 {
            let gens = ordered_generators(&order, &powers, n).unwrap();
            for (pos1, (m1, _)) in gens.list.iter().enumerate() {
                for (m2, _) in &gens.list[pos1 + 1..] {
                    let b1 = belongs_to(m1, &order, &powers, n).unwrap();
                    let b2 = belongs_to(m2, &order, &powers, n).unwrap();
                    assert!(b1 <= b2, "descending list must not decrease belonging");
                }
            }
        }
    }

    #[test]
    fn same_belonging_edge_compares_by_quotient() {
        let (_, order, powers) = paw_setup();
        for n in 2..=3u32 {
            let list_n = ordered_generators(&order, &powers, n).unwrap();
            let list_prev = ordered_generators(&order, &powers, n - 1).unwrap();
            for (p1, (m1, _)) in list_n.list.iter().enumerate() {
                for (m2, _) in &list_n.list[p1 + 1..] {
                    let b1 = belongs_to(m1, &order, &powers, n).unwrap();
                    let b2 = belongs_to(m2, &order, &powers, n).unwrap();
                    if b1 != b2 {
                        continue;
                    }
                    if n == 1 {
                        continue;
                    }
                    let e = &order.edges()[b1];
                    let q1 = m1.div(e).unwrap();
                    let q2 = m2.div(e).unwrap();
                    let pq1 = list_prev.position(&q1).unwrap();
                    let pq2 = list_prev.position(&q2).unwrap();
                    assert!(pq1 < pq2, "quotient order must match");
                }
            }
        }
    }

    #[test]
    fn factor_swap_respects_the_order() {
        // For m = gh*m' with gh in the maximal expression, any m'' above m'
        // pushes gh*m'' above m.
        let (_, order, powers) = paw_setup();
        for n in 2..=3u32 {
            let list_n = ordered_generators(&order, &powers, n).unwrap();
            let list_prev = ordered_generators(&order, &powers, n - 1).unwrap();
            for (pos, (m, ex)) in list_n.list.iter().enumerate() {
                let mut seen = HashSet::new();
                for &fi in &ex.factors {
                    if !seen.insert(fi) {
                        continue;
                    }
                    let gh = &order.edges()[fi];
                    let m_prime = m.div(gh).unwrap();
                    let prime_pos = list_prev.position(&m_prime).unwrap();
                    for (m2, _) in &list_prev.list[..prime_pos] {
                        let lifted = gh.mul(m2);
                        let lifted_pos = list_n.position(&lifted).unwrap();
                        assert!(
                            lifted_pos < pos,
                            "lifting a bigger cofactor must give a bigger generator"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ordering_property_on_first_power_of_catalog_graphs() {
        for g in crate::catalog::catalog_with_edges(5) {
            let ideal = edge_ideal(&g);
            let order = EdgeOrder::lex(&ideal);
            let powers = Powers::new(&ideal, 2);
            let report = verify_ordering_property(&order, &powers, 1, None).unwrap();
            assert!(report.passed(), "counterexample on {g:?}");
        }
    }

    #[test]
    fn ordering_property_on_paw_square_and_k4() {
        let (_, order, powers) = paw_setup();
        let report = verify_ordering_property(&order, &powers, 2, None).unwrap();
        assert!(report.passed());
        assert!(report.pairs_checked > 0);

        let k4 = edge_ideal(&fixtures::complete(4));
        let order = EdgeOrder::lex(&k4);
        let powers = Powers::new(&k4, 3);
        let report = verify_ordering_property(&order, &powers, 2, None).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn pair_line_rendering() {
        assert_eq!(render_pair_line(0, 3, &PairVerdict::Subset), "0 3 -> subset");
        assert_eq!(
            render_pair_line(1, 4, &PairVerdict::Principal { i: 2 }),
            "1 4 -> principal:2"
        );
    }
}
