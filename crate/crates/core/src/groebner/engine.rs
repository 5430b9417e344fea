//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Pairs are processed by the normal strategy: smallest lcm degree first,
//! then smallest x-degree, then generator indices. The order is fully
//! deterministic.

use std::cmp::Ordering;

use super::arith::{Coefficients, ETerm};
use crate::algebra::{Bidegree, Monomial, RingDescriptor};

/// Steps between content removals during fraction-free reduction.
const CONTENT_PERIOD: usize = 8;

struct Elem<C> {
    terms: Vec<ETerm<C>>,
    mask: u64,
    active: bool,
}

impl<C> Elem<C> {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: (u32, i64, usize, usize),
}

pub(crate) struct Engine<'a, A: Coefficients> {
    ring: RingDescriptor,
    arith: &'a A,
    elems: Vec<Elem<A::C>>,
    pairs: Vec<Pair>,
    cap: Option<Bidegree>,
}

impl<'a, A: Coefficients> Engine<'a, A> {
    pub fn new(ring: RingDescriptor, arith: &'a A, cap: Option<Bidegree>) -> Self {
        Engine {
            ring,
            arith,
            elems: Vec::new(),
            pairs: Vec::new(),
            cap,
        }
    }

    /// Load a basis that is already known to be reduced and Gröbner, so it
    /// can be used for normal forms without re-running the algorithm.
    pub fn with_basis(
        ring: RingDescriptor,
        arith: &'a A,
        basis: Vec<Vec<ETerm<A::C>>>,
    ) -> Self {
        let mut e = Engine::new(ring, arith, None);
        for terms in basis.into_iter().filter(|t| !t.is_empty()) {
            let mask = terms[0].0.divmask();
            e.elems.push(Elem {
                terms,
                mask,
                active: true,
            });
        }
        e
    }

    /// `a·p − b·(m·g)`, merged in decreasing order.
    fn axpy(
        &self,
        a: &A::C,
        p: &[ETerm<A::C>],
        b: &A::C,
        m: &Monomial,
        g: &[ETerm<A::C>],
    ) -> Vec<ETerm<A::C>> {
        let ar = self.arith;
        let a_one = ar.is_one(a);
        let nb = ar.neg(b);
        let scale_p = |c: &A::C| if a_one { c.clone() } else { ar.mul(a, c) };
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|(mono, c)| (mono.mul(m), c)).peekable();
        while i < p.len() {
            let Some((gm, gc)) = gi.peek() else { break };
            match self.ring.cmp_mono(&p[i].0, gm) {
                Ordering::Greater => {
                    out.push((p[i].0.clone(), scale_p(&p[i].1)));
                    i += 1;
                }
                Ordering::Less => {
                    let (gm, gc) = gi.next().unwrap();
                    out.push((gm, ar.mul(&nb, gc)));
                }
                Ordering::Equal => {
                    let c = ar.add(&scale_p(&p[i].1), &ar.mul(&nb, gc));
                    let (gm, _) = gi.next().unwrap();
                    if !ar.is_zero(&c) {
                        out.push((gm, c));
                    }
                    i += 1;
                }
            }
        }
        for t in &p[i..] {
            out.push((t.0.clone(), scale_p(&t.1)));
        }
        for (gm, gc) in gi {
            out.push((gm, ar.mul(&nb, gc)));
        }
        out
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        self.elems
            .iter()
            .position(|e| e.active && e.mask & !mask == 0 && e.lm().divides(m))
    }

    /// Reduce `p` by the active elements. With `full` every term is reduced,
    /// otherwise only leading terms. Terms before `skip` are kept as they
    /// are (used for tail reduction). When `scale` is given, the product of
    /// all multipliers applied to `p` is accumulated into it and content is
    /// never removed, so that `result = scale·p − (combination of basis)`.
    fn reduce_from(
        &self,
        mut p: Vec<ETerm<A::C>>,
        skip: usize,
        full: bool,
        mut scale: Option<&mut A::C>,
    ) -> Vec<ETerm<A::C>> {
        let ar = self.arith;
        let mut done: Vec<ETerm<A::C>> = p.drain(..skip.min(p.len())).collect();
        let mut start = 0;
        let mut steps = 0;
        while start < p.len() {
            match self.find_divisor(&p[start].0) {
                Some(k) => {
                    let g = &self.elems[k].terms;
                    let q = p[start].0.checked_div(&g[0].0).expect("divisor");
                    let (a, b) = ar.cancel(&p[start].1, &g[0].1);
                    p = self.axpy(&a, &p[start + 1..], &b, &q, &g[1..]);
                    start = 0;
                    if !ar.is_one(&a) {
                        for t in done.iter_mut() {
                            t.1 = ar.mul(&t.1, &a);
                        }
                        if let Some(s) = scale.as_deref_mut() {
                            *s = ar.mul(s, &a);
                        }
                    }
                    steps += 1;
                    if scale.is_none() && steps % CONTENT_PERIOD == 0 {
                        ar.remove_common_content(&mut done, &mut p);
                    }
                }
                None if full => {
                    done.push(p[start].clone());
                    start += 1;
                }
                None => {
                    done.extend(p.drain(start..));
                    break;
                }
            }
        }
        done
    }

    /// Full normal form of `p`, normalized.
    pub fn normal_form(&self, p: Vec<ETerm<A::C>>) -> Vec<ETerm<A::C>> {
        let mut r = self.reduce_from(p, 0, true, None);
        self.arith.normalize(&mut r);
        r
    }

    /// Full normal form without normalization, returning the scale `s` with
    /// `r = s·p − (combination of basis)`.
    pub fn normal_form_scaled(&self, p: Vec<ETerm<A::C>>) -> (Vec<ETerm<A::C>>, A::C) {
        let mut s = self.arith.one();
        let r = self.reduce_from(p, 0, true, Some(&mut s));
        (r, s)
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<ETerm<A::C>> {
        let (gi, gj) = (&self.elems[i].terms, &self.elems[j].terms);
        let mi = lcm.checked_div(&gi[0].0).expect("lcm");
        let mj = lcm.checked_div(&gj[0].0).expect("lcm");
        let (a, b) = self.arith.cancel(&gi[0].1, &gj[0].1);
        let p: Vec<ETerm<A::C>> = gi[1..].iter().map(|(m, c)| (m.mul(&mi), c.clone())).collect();
        self.axpy(&a, &p, &b, &mj, &gj[1..])
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let (i, j) = (i.min(j), i.max(j));
        let lcm = self.elems[i].lm().lcm(self.elems[j].lm());
        let key = (lcm.degree() + lcm.t(), lcm.bidegree().a, i, j);
        Pair { i, j, lcm, key }
    }

    /// Add a reduced, normalized, nonzero element and update the pair set
    /// with the Gebauer–Möller criteria.
    fn insert(&mut self, h: Vec<ETerm<A::C>>) {
        let hidx = self.elems.len();
        let mask = h[0].0.divmask();
        self.elems.push(Elem {
            terms: h,
            mask,
            active: true,
        });
        let lm_h = self.elems[hidx].lm().clone();

        let cands: Vec<(Pair, bool)> = (0..hidx)
            .filter(|&g| self.elems[g].active)
            .map(|g| (self.pair(g, hidx), self.elems[g].lm().is_coprime(&lm_h)))
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for idx in 0..cands.len() {
            let (p, coprime) = &cands[idx];
            if *coprime {
                kept.push(idx);
                continue;
            }
            let dominated = cands[idx + 1..].iter().any(|(q, _)| q.lcm.divides(&p.lcm))
                || kept.iter().any(|&k| cands[k].0.lcm.divides(&p.lcm));
            if !dominated {
                kept.push(idx);
            }
        }

        let elems = &self.elems;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && elems[p.i].lm().lcm(&lm_h) != p.lcm
                && elems[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        for k in kept {
            let (p, coprime) = &cands[k];
            if !coprime {
                self.pairs.push(p.clone());
            }
        }
        for g in 0..hidx {
            if self.elems[g].active && lm_h.divides(self.elems[g].lm()) {
                self.elems[g].active = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let (idx, _) = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.key.cmp(&q.key))?;
        Some(self.pairs.swap_remove(idx))
    }

    fn within_cap(&self, lcm: &Monomial) -> bool {
        match self.cap {
            Some(cap) => lcm.t() > 0 || cap.dominates(&lcm.bidegree()),
            None => true,
        }
    }

    pub fn add_generators(&mut self, mut gens: Vec<Vec<ETerm<A::C>>>) {
        gens.retain(|g| !g.is_empty());
        gens.sort_by(|p, q| self.ring.cmp_mono(&p[0].0, &q[0].0));
        for g in gens {
            let r = self.normal_form(g);
            if !r.is_empty() {
                self.insert(r);
            }
        }
    }

    pub fn run(&mut self) {
        while let Some(pair) = self.pop_pair() {
            if !self.within_cap(&pair.lcm) {
                continue;
            }
            let s = self.spoly(pair.i, pair.j, &pair.lcm);
            if s.is_empty() {
                continue;
            }
            let r = self.normal_form(s);
            if !r.is_empty() {
                self.insert(r);
            }
        }
    }

    /// Active elements (a minimal basis), unreduced.
    pub fn basis(&self) -> Vec<Vec<ETerm<A::C>>> {
        self.elems
            .iter()
            .filter(|e| e.active)
            .map(|e| e.terms.clone())
            .collect()
    }

    /// The reduced basis: tails reduced, normalized, sorted by increasing
    /// leading monomial.
    pub fn reduced_basis(&self) -> Vec<Vec<ETerm<A::C>>> {
        let mut out: Vec<Vec<ETerm<A::C>>> = self
            .elems
            .iter()
            .filter(|e| e.active)
            .map(|e| {
                let mut r = self.reduce_from(e.terms.clone(), 1, true, None);
                self.arith.normalize(&mut r);
                r
            })
            .collect();
        out.sort_by(|p, q| self.ring.cmp_mono(&p[0].0, &q[0].0));
        out
    }

    /// Buchberger's criterion: every S-polynomial of active elements reduces
    /// to zero.
    pub fn is_groebner(&self) -> bool {
        let act: Vec<usize> = (0..self.elems.len()).filter(|&i| self.elems[i].active).collect();
        for (x, &i) in act.iter().enumerate() {
            for &j in &act[x + 1..] {
                let p = self.pair(i, j);
                let s = self.spoly(p.i, p.j, &p.lcm);
                if !self.reduce_from(s, 0, true, None).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
