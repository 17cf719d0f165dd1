//! Exact monomial-ideal arithmetic: edge ideals, powers, minimal generators,
//! colon ideals, containment, and polarization.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

/// The ordered variable list of a polynomial ring. Polarization variables
/// remember their base variable and copy index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    /// `Some((base, copy))` for copy variables introduced by polarization.
    polar: Vec<Option<(usize, u32)>>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<VariableContext> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        let polar = vec![None; names.len()];
        Ok(VariableContext { names, polar })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// For a copy variable, the `(base index, copy number)` pair.
    pub fn polarization_of(&self, i: usize) -> Option<(usize, u32)> {
        self.polar[i]
    }
}

/// A monomial as a sparse exponent vector over a shared context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// Sorted by variable index; exponents strictly positive.
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn variable(i: usize) -> Monomial {
        Monomial { exps: vec![(i, 1)] }
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut exps: Vec<(usize, u32)> = pairs.iter().copied().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v == var)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// Support as a bit mask; only valid while variable indices stay < 64.
    pub fn support_mask(&self) -> u64 {
        self.exps.iter().fold(0u64, |m, &(v, _)| m | (1 << v))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j >= other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut rem = e;
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                rem -= other.exps[j].1;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        Some(Monomial { exps: out })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                out.push((v, e.min(other.exps[j].1)));
            }
        }
        Monomial { exps: out }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1.max(other.exps[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// `(self : other)` for monomials is the principal ideal on
    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.div(&self.gcd(other)).expect("gcd divides")
    }

    /// Plain lexicographic comparison of dense exponent vectors.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v1, e1)), Some(&(v2, e2))) => {
                    if v1 < v2 {
                        return Ordering::Greater;
                    }
                    if v1 > v2 {
                        return Ordering::Less;
                    }
                    if e1 != e2 {
                        return e1.cmp(&e2);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    /// Renders with `*` separators and `^` exponents, e.g. `a^2*b*d`.
    pub fn render(&self, ctx: &VariableContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    ctx.name(v).to_string()
                } else {
                    format!("{}^{}", ctx.name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Renders in compact juxtaposed form with unicode superscripts,
    /// e.g. `a²bd`.
    pub fn render_compact(&self, ctx: &VariableContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for &(v, e) in &self.exps {
            out.push_str(ctx.name(v));
            if e > 1 {
                out.push_str(&superscript(e));
            }
        }
        out
    }

    /// Parses `a^2*b*d` style factors against a context.
    pub fn parse(text: &str, ctx: &VariableContext) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: u32 = e.trim().parse().map_err(|_| Error::Parse {
                        line: 0,
                        msg: format!("bad exponent in `{factor}`"),
                    })?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let idx = ctx
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            pairs.push((idx, exp));
        }
        Ok(Monomial::from_pairs(&pairs))
    }

    /// Re-expresses a monomial over another context by variable name.
    pub fn relabel(&self, from: &VariableContext, to: &VariableContext) -> Result<Monomial> {
        let mut pairs = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            let idx = to
                .index_of(from.name(v))
                .ok_or_else(|| Error::UnknownVariable(from.name(v).to_string()))?;
            pairs.push((idx, e));
        }
        Ok(Monomial::from_pairs(&pairs))
    }
}

fn superscript(mut e: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut digits = Vec::new();
    if e == 0 {
        digits.push(DIGITS[0]);
    }
    while e > 0 {
        digits.push(DIGITS[(e % 10) as usize]);
        e /= 10;
    }
    digits.into_iter().rev().collect()
}

/// Canonical storage comparison: degree first, then lex descending.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.lex_cmp(a))
}

/// A monomial ideal held by its unique minimal generating set, kept as a
/// divisibility antichain sorted by (degree, lex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ctx: VariableContext, gens: Vec<Monomial>) -> MonomialIdeal {
        Self::with_context(Arc::new(ctx), gens)
    }

    pub fn with_context(ctx: Arc<VariableContext>, gens: Vec<Monomial>) -> MonomialIdeal {
        let gens = minimalize_gens(gens);
        MonomialIdeal { ctx, gens }
    }

    pub fn zero(ctx: VariableContext) -> MonomialIdeal {
        MonomialIdeal {
            ctx: Arc::new(ctx),
            gens: Vec::new(),
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn context_arc(&self) -> Arc<VariableContext> {
        Arc::clone(&self.ctx)
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership: divisible by some minimal generator.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊇ other` iff every generator of `other` lies in `self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    /// Ideal sum, re-minimalized.
    pub fn plus(&self, extra: &[Monomial]) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        MonomialIdeal::with_context(self.context_arc(), gens)
    }

    /// Ideal product, re-minimalized.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal::with_context(self.context_arc(), gens))
    }

    /// n-th power by expanding multisets of generators. `power(I, 0)` is the
    /// unit ideal, degenerate by convention.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::with_context(self.context_arc(), vec![Monomial::one()]);
        }
        if self.is_zero() {
            return MonomialIdeal::with_context(self.context_arc(), Vec::new());
        }
        let mut products: HashSet<Monomial> = HashSet::new();
        let mut stack = Monomial::one();
        expand_power(&self.gens, n as usize, 0, &mut stack, &mut products);
        MonomialIdeal::with_context(self.context_arc(), products.into_iter().collect())
    }

    /// Colon ideal `(self : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        MonomialIdeal::with_context(self.context_arc(), gens)
    }

    /// Maximum exponent of each variable over the generators.
    fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.ctx.len()];
        for g in &self.gens {
            for &(v, e) in g.exponents() {
                out[v] = out[v].max(e);
            }
        }
        out
    }

    /// Polarization: each generator Π x_i^(a_i) unfolds to
    /// Π_i x_(i,0)·x_(i,1)···x_(i,a_i−1), with x_(i,0) identified with x_i.
    /// Copy labels are the base label with appended primes (numeric suffix on
    /// collision). Returns the squarefree ideal and the base-to-copies map.
    pub fn polarize(&self) -> Polarization {
        let maxes = self.max_exponents();
        let mut names: Vec<String> = self.ctx.names().to_vec();
        let mut polar: Vec<Option<(usize, u32)>> = vec![None; names.len()];
        let mut copies: Vec<Vec<usize>> = (0..names.len()).map(|i| vec![i]).collect();
        for (base, &mx) in maxes.iter().enumerate() {
            for copy in 1..mx {
                let mut label = format!("{}{}", self.ctx.name(base), "'".repeat(copy as usize));
                let mut suffix = 2u32;
                while names.contains(&label) {
                    label = format!("{}'{}", self.ctx.name(base), suffix);
                    suffix += 1;
                }
                copies[base].push(names.len());
                polar.push(Some((base, copy)));
                names.push(label);
            }
        }
        let ctx = VariableContext { names, polar };
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut pairs = Vec::new();
                for &(v, e) in g.exponents() {
                    for copy in 0..e as usize {
                        pairs.push((copies[v][copy], 1));
                    }
                }
                Monomial::from_pairs(&pairs)
            })
            .collect();
        Polarization {
            ideal: MonomialIdeal::new(ctx, gens),
            copies,
        }
    }

    /// Parses one generator per line in `a^2*b*d` notation; the context is
    /// the variables in first-appearance order. Keeps the raw line order
    /// alongside the canonical ideal.
    pub fn parse(text: &str) -> Result<MonomialIdeal> {
        Ok(Self::parse_with_line_order(text)?.0)
    }

    pub fn parse_with_line_order(text: &str) -> Result<(MonomialIdeal, Vec<Monomial>)> {
        let mut names: Vec<String> = Vec::new();
        let mut lines: Vec<String> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            for factor in line.split('*') {
                let name = factor.split('^').next().unwrap_or("").trim();
                if name.is_empty() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "empty factor".into(),
                    });
                }
                if name != "1" && !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            }
            lines.push(line.to_string());
        }
        let ctx = VariableContext::new(names)?;
        let mut in_order = Vec::with_capacity(lines.len());
        for line in &lines {
            in_order.push(Monomial::parse(line, &ctx)?);
        }
        let ideal = MonomialIdeal::new(ctx, in_order.clone());
        Ok((ideal, in_order))
    }

    /// One generator per line.
    pub fn render(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.render(&self.ctx))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Generators as label/exponent sets, for comparisons across contexts.
    pub fn labeled_gens(&self) -> BTreeSet<Vec<(String, u32)>> {
        self.gens
            .iter()
            .map(|g| {
                let mut v: Vec<(String, u32)> = g
                    .exponents()
                    .iter()
                    .map(|&(i, e)| (self.ctx.name(i).to_string(), e))
                    .collect();
                v.sort();
                v
            })
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ctx)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn expand_power(
    gens: &[Monomial],
    left: usize,
    start: usize,
    acc: &mut Monomial,
    out: &mut HashSet<Monomial>,
) {
    if left == 0 {
        out.insert(acc.clone());
        return;
    }
    for i in start..gens.len() {
        let saved = acc.clone();
        *acc = acc.mul(&gens[i]);
        expand_power(gens, left - 1, i, acc, out);
        *acc = saved;
    }
}

/// Reduces a generating set to the divisibility antichain in canonical
/// order. Same-degree monomials never divide one another, so each candidate
/// is only tested against strictly smaller degrees.
pub fn minimalize_gens(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        for k in &kept {
            if k.degree() >= g.degree() {
                break;
            }
            if k.divides(&g) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    kept
}

/// The result of polarization: the squarefree ideal plus, per base
/// variable, the context indices of its copies (`copies[v][0] == v`).
#[derive(Debug, Clone)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub copies: Vec<Vec<usize>>,
}

/// The edge ideal I(G): one squarefree degree-2 generator per edge over the
/// vertex context. A graph with no edges yields the zero ideal, which stays
/// flagged via `is_zero`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ctx = VariableContext::new(g.labels().iter().cloned()).expect("labels are unique");
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_pairs(&[(u, 1), (v, 1)]))
        .collect();
    MonomialIdeal::new(ctx, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text).unwrap()
    }

    #[test]
    fn edge_ideal_of_single_edge() {
        let g = Graph::parse_edge_list("a b\n").unwrap();
        let i = edge_ideal(&g);
        assert_eq!(i.render(), "a*b");
    }

    #[test]
    fn edge_ideal_of_paw_fixture() {
        let i = edge_ideal(&fixtures::paw());
        assert_eq!(i.labeled_gens(), ideal("a*b\nb*c\na*d\nb*d").labeled_gens());
    }

    #[test]
    fn edge_ideal_of_triangle() {
        let i = edge_ideal(&fixtures::triangle());
        assert_eq!(i.num_gens(), 3);
        assert!(i.gens().iter().all(|g| g.degree() == 2));
    }

    #[test]
    fn edgeless_graph_gives_flagged_zero_ideal() {
        let g = Graph::with_vertices(["a", "b"]).unwrap();
        assert!(edge_ideal(&g).is_zero());
    }

    #[test]
    fn minimalize_removes_multiples() {
        let i = ideal("a*b\na^2*b");
        assert_eq!(i.render(), "a*b");
        let j = ideal("a*b\nc*d");
        assert_eq!(j.num_gens(), 2);
    }

    #[test]
    fn power_of_principal_ideal() {
        let i = ideal("a*b");
        assert_eq!(i.power(2).render(), "a^2*b^2");
    }

    #[test]
    fn paw_ideal_square_has_ten_generators() {
        let (i, _) = fixtures::paw_ideal();
        let sq = i.power(2);
        assert_eq!(sq.num_gens(), 10);
        assert!(sq.gens().iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn triangle_ideal_square_by_enumeration_oracle() {
        // Independent oracle: expand all 6 unordered pairs of the 3 edges and
        // verify the set of distinct products.
        let i = edge_ideal(&fixtures::triangle());
        let mut expected = HashSet::new();
        for (a, ga) in i.gens().iter().enumerate() {
            for gb in &i.gens()[a..] {
                expected.insert(ga.mul(gb));
            }
        }
        let sq = i.power(2);
        assert_eq!(sq.num_gens(), expected.len());
        assert_eq!(expected.len(), 6);
        for g in sq.gens() {
            assert!(expected.contains(g));
            assert_eq!(g.degree(), 4);
        }
    }

    #[test]
    fn power_zero_is_degenerate_unit() {
        let i = ideal("a*b");
        assert!(i.power(0).is_unit());
    }

    #[test]
    fn power_is_multiplicative_on_fixtures() {
        for g in [fixtures::paw(), fixtures::triangle(), fixtures::cycle(5)] {
            let i = edge_ideal(&g);
            for (m, n) in [(1u32, 1u32), (1, 2), (2, 1)] {
                let lhs = i.power(m + n);
                let rhs = i.power(m).multiply(&i.power(n)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn colon_by_one_is_identity() {
        let (i, _) = fixtures::paw_ideal();
        assert_eq!(i.colon(&Monomial::one()), i);
    }

    #[test]
    fn colon_single_generator_gcd_rule() {
        let i = ideal("a*b");
        let b = Monomial::parse("b", i.context()).unwrap();
        assert_eq!(i.colon(&b).render(), "a");
    }

    #[test]
    fn colon_contains_the_ideal_and_is_monotone() {
        let (i, _) = fixtures::paw_ideal();
        let sq = i.power(2);
        for m in i.gens() {
            let c = sq.colon(m);
            assert!(c.contains(&sq).unwrap());
            // monotone: I ⊆ J ⇒ (I:m) ⊆ (J:m), with I = sq, J = sq + one gen.
            let bigger = sq.plus(&[Monomial::variable(0)]);
            assert!(bigger.colon(m).contains(&c).unwrap());
        }
    }

    #[test]
    fn containment_basics() {
        let a = ideal("a");
        let ab = ideal("a*b");
        let a_in_ab_ctx = MonomialIdeal::with_context(
            ab.context_arc(),
            vec![Monomial::parse("a", ab.context()).unwrap()],
        );
        assert!(a_in_ab_ctx.contains(&ab).unwrap());
        assert!(ab.contains(&ab).unwrap());
        assert!(a.contains(&a).unwrap());
        assert!(ab.contains(&a_in_ab_ctx).is_err() || !ab.contains(&a_in_ab_ctx).unwrap());
    }

    #[test]
    fn polarize_square_to_prime_copy() {
        let i = ideal("z^2\nu*z");
        let p = i.polarize();
        assert!(p.ideal.is_squarefree());
        let expected = ideal("z*z'\nu*z");
        assert_eq!(p.ideal.labeled_gens(), expected.labeled_gens());
    }

    #[test]
    fn polarize_squarefree_is_identity() {
        let (i, _) = fixtures::paw_ideal();
        let p = i.polarize();
        assert_eq!(p.ideal, i);
        assert!(p.copies.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn polarize_unfolds_general_exponents() {
        let i = ideal("a^2*b^2");
        let p = i.polarize();
        assert_eq!(p.ideal.render(), "a*b*a'*b'");
        assert_eq!(p.ideal.context().len(), 4);
        assert_eq!(p.ideal.context().polarization_of(2), Some((0, 1)));
    }

    #[test]
    fn parse_and_render_round_trip() {
        let i = ideal("a^2*b*d\nb*c");
        let again = MonomialIdeal::parse(&i.render()).unwrap();
        assert_eq!(i.labeled_gens(), again.labeled_gens());
    }

    #[test]
    fn compact_render_uses_superscripts() {
        let i = ideal("a^2*b^2");
        let g = &i.gens()[0];
        assert_eq!(g.render_compact(i.context()), "a²b²");
    }

    #[test]
    fn parse_rejects_unknown_juxtaposition() {
        let ctx = VariableContext::new(["a", "b"]).unwrap();
        assert!(Monomial::parse("ab", &ctx).is_err());
    }
}
