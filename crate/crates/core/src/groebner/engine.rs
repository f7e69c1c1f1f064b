//! Fraction-free Buchberger kernel on integer-coefficient polynomials.
//!
//! Pairs are processed by increasing LCM degree (normal strategy); input
//! generators of degree `d` are reduced after the S-pairs of degree `d`, so a
//! generator that survives reduction is a minimal generator of the ideal.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{PowerProduct, TermOrder};

/// Terms strictly descending under the active order, no zero coefficients.
pub(crate) type Terms = Vec<(PowerProduct, BigInt)>;

pub(crate) struct Kernel {
    pub order: TermOrder,
    pub degree_cap: Option<u32>,
}

#[derive(Debug, Default)]
pub(crate) struct KernelOutput {
    /// Minimal basis: primitive, positive leading coefficient, leading terms
    /// form a divisibility antichain.
    pub basis: Vec<Terms>,
    /// Degree of every input generator that was minimal.
    pub minimal_generator_degrees: Vec<u32>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: PowerProduct,
    degree: u32,
}

struct State {
    order: TermOrder,
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Kernel {
    /// Runs Buchberger on homogeneous-or-not integer inputs. For homogeneous
    /// input with a cap `D`, the output spans `I_d` for every `d <= D`.
    pub fn run(&self, inputs: Vec<Terms>) -> KernelOutput {
        let order = self.order;
        let mut queue: Vec<Terms> = inputs
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(primitive)
            .filter(|f| self.within_cap(lead(f).degree()))
            .collect();
        // input generators sorted so the lowest degree (then smallest leading
        // term) is processed first
        queue.sort_by(|a, b| {
            let (la, lb) = (lead(a), lead(b));
            la.degree()
                .cmp(&lb.degree())
                .then_with(|| order.compare(la, lb))
        });
        queue.reverse();

        let mut state = State {
            order,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        let mut minimal_degrees = Vec::new();

        loop {
            let next_pair = state.pairs.iter().map(|p| p.degree).min();
            let next_gen = queue.last().map(|f| lead(f).degree());
            let degree = match (next_pair, next_gen) {
                (None, None) => break,
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
            };
            if !self.within_cap(degree) {
                break;
            }

            // S-pairs of this degree first
            loop {
                let Some(idx) = state.select_pair(degree) else { break };
                let pair = state.pairs.swap_remove(idx);
                let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j], &pair.lcm, order);
                let h = state.top_reduce(s);
                if !h.is_empty() {
                    state.insert(h);
                }
            }
            while queue.last().map(|f| lead(f).degree()) == Some(degree) {
                let f = queue.pop().expect("checked non-empty");
                let h = state.top_reduce(f);
                if !h.is_empty() {
                    minimal_degrees.push(lead(&h).degree());
                    state.insert(h);
                }
            }
        }

        let basis = state
            .polys
            .into_iter()
            .zip(state.active)
            .filter_map(|(p, a)| a.then_some(p))
            .collect();
        KernelOutput {
            basis: minimize(basis, order),
            minimal_generator_degrees: minimal_degrees,
        }
    }

    fn within_cap(&self, degree: u32) -> bool {
        self.degree_cap.map_or(true, |cap| degree <= cap)
    }
}

impl State {
    fn select_pair(&self, degree: u32) -> Option<usize> {
        let order = self.order;
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.degree == degree)
            .min_by(|(_, a), (_, b)| order.compare(&a.lcm, &b.lcm))
            .map(|(k, _)| k)
    }

    fn reducer_for(&self, t: &PowerProduct) -> Option<usize> {
        (0..self.polys.len())
            .filter(|&k| self.active[k] && lead(&self.polys[k]).divides(t))
            .min_by_key(|&k| self.polys[k].len())
    }

    fn top_reduce(&self, mut f: Terms) -> Terms {
        while let Some((t, _)) = f.first() {
            let Some(k) = self.reducer_for(t) else { break };
            f = reduce_step(&f, 0, &self.polys[k], self.order);
            f = primitive(f);
        }
        f
    }

    /// Gebauer-Moeller update with the new element `h`.
    fn insert(&mut self, h: Terms) {
        let h_index = self.polys.len();
        let lh = lead(&h).clone();

        let mut candidates: Vec<(usize, PowerProduct, bool)> = (0..self.polys.len())
            .filter(|&k| self.active[k])
            .map(|k| {
                let lk = lead(&self.polys[k]);
                (k, lh.lcm(lk), lh.is_coprime(lk))
            })
            .collect();

        // criterion M / F: keep a pair only if no other candidate's lcm
        // divides it (ties broken by position)
        let mut kept: Vec<(usize, PowerProduct, bool)> = Vec::new();
        for (a, (k, lcm, coprime)) in candidates.iter().enumerate() {
            let dominated = candidates.iter().enumerate().any(|(b, (_, other, _))| {
                b != a && other.divides(lcm) && (other != lcm || b < a)
            });
            if !dominated {
                kept.push((*k, lcm.clone(), *coprime));
            }
        }
        candidates.clear();
        // Buchberger's first criterion
        kept.retain(|(_, _, coprime)| !coprime);

        // criterion B on the old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = lead(&polys[p.i]);
            let lj = lead(&polys[p.j]);
            !(lh.divides(&p.lcm) && lh.lcm(li) != p.lcm && lh.lcm(lj) != p.lcm)
        });

        for (k, lcm, _) in kept {
            let degree = lcm.degree();
            self.pairs.push(Pair {
                i: k,
                j: h_index,
                lcm,
                degree,
            });
        }
        for k in 0..self.polys.len() {
            if self.active[k] && lh.divides(lead(&self.polys[k])) {
                self.active[k] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }
}

pub(crate) fn lead(f: &Terms) -> &PowerProduct {
    &f[0].0
}

/// Divides out the integer content and makes the leading coefficient
/// positive.
pub(crate) fn primitive(mut f: Terms) -> Terms {
    if f.is_empty() {
        return f;
    }
    let mut g = BigInt::zero();
    for (_, c) in &f {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if f[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in f.iter_mut() {
            *c /= &g;
        }
    }
    f
}

/// `a*f - b*m*g` where the coefficients are chosen so the term of `f` at
/// `pos` cancels against `LT(m*g)`.
pub(crate) fn reduce_step(f: &Terms, pos: usize, g: &Terms, order: TermOrder) -> Terms {
    let (t, cf) = &f[pos];
    let (lg, cg) = &g[0];
    let m = lg.quotient_of(t).expect("reducer divides the term");
    let common = cf.gcd(cg);
    let a = cg / &common;
    let b = cf / &common;
    combine(f, &a, g, &b, &m, order)
}

/// `a*f - b*m*g`, merged in descending order.
fn combine(f: &Terms, a: &BigInt, g: &Terms, b: &BigInt, m: &PowerProduct, order: TermOrder) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut fi = f.iter().peekable();
    let mut gi = g.iter().map(|(t, c)| (t.mul(m), c)).peekable();
    loop {
        let step = match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some((tf, _)), Some((tg, _))) => order.compare(tf, tg),
        };
        match step {
            Ordering::Greater => {
                let (t, c) = fi.next().expect("peeked");
                out.push((t.clone(), c * a));
            }
            Ordering::Less => {
                let (t, c) = gi.next().expect("peeked");
                out.push((t, -(c * b)));
            }
            Ordering::Equal => {
                let (t, c1) = fi.next().expect("peeked");
                let (_, c2) = gi.next().expect("peeked");
                let c = c1 * a - c2 * b;
                if !c.is_zero() {
                    out.push((t.clone(), c));
                }
            }
        }
    }
    out
}

fn s_polynomial(f: &Terms, g: &Terms, lcm: &PowerProduct, order: TermOrder) -> Terms {
    let (lf, cf) = &f[0];
    let (lg, cg) = &g[0];
    let mf = lf.quotient_of(lcm).expect("lcm is a multiple");
    let mg = lg.quotient_of(lcm).expect("lcm is a multiple");
    let common = cf.gcd(cg);
    let a = cg / &common;
    let b = cf / &common;
    let shifted: Terms = f.iter().map(|(t, c)| (t.mul(&mf), c.clone())).collect();
    combine(&shifted, &a, g, &b, &mg, order)
}

/// Interreduces leading terms: drops elements whose leading term is a
/// multiple of another's, keeping the first in sorted position.
fn minimize(mut basis: Vec<Terms>, order: TermOrder) -> Vec<Terms> {
    basis.sort_by(|a, b| {
        let (la, lb) = (lead(a), lead(b));
        la.degree().cmp(&lb.degree()).then_with(|| order.compare(la, lb))
    });
    let mut kept: Vec<Terms> = Vec::with_capacity(basis.len());
    for f in basis {
        if !kept.iter().any(|k| lead(k).divides(lead(&f))) {
            kept.push(f);
        }
    }
    kept
}

/// Full reduction of `f` modulo `basis` (tail terms included), returning a
/// primitive polynomial with positive leading coefficient.
pub(crate) fn full_reduce(f: Terms, basis: &[Terms], order: TermOrder) -> Terms {
    let mut f = f;
    let mut pos = 0;
    while pos < f.len() {
        let t = &f[pos].0;
        let reducer = basis
            .iter()
            .filter(|g| lead(g).divides(t))
            .min_by_key(|g| g.len());
        match reducer {
            Some(g) => {
                f = reduce_step(&f, pos, g, order);
                f = primitive_keep_sign(f);
            }
            None => pos += 1,
        }
    }
    primitive(f)
}

fn primitive_keep_sign(mut f: Terms) -> Terms {
    let mut g = BigInt::zero();
    for (_, c) in &f {
        g = g.gcd(c);
        if g.is_one() {
            return f;
        }
    }
    if !g.is_zero() {
        for (_, c) in f.iter_mut() {
            *c /= &g;
        }
    }
    f
}

/// Reduced basis: every element fully reduced against the others.
pub(crate) fn interreduce(basis: Vec<Terms>, order: TermOrder) -> Vec<Terms> {
    let mut out = basis.clone();
    for k in 0..out.len() {
        let others: Vec<Terms> = out
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let f = std::mem::take(&mut out[k]);
        // the leading term is irreducible, so only tails change
        out[k] = full_reduce(f, &others, order);
    }
    out
}
