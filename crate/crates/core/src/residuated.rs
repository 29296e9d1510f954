//! Residuated posets given by explicit `⊙`/`→` tables, the bold operations on
//! their completion, the subset connectives `⊡`/`⇒`, and the law checks that
//! tie them to the tense operators.

use serde::Serialize;

use crate::check::CheckReport;
use crate::display;
use crate::dm::{self, hat_tense};
use crate::error::{Error, Result};
use crate::frame::TimeFrame;
use crate::order::{self, OrderKind};
use crate::poset::{Poset, ProductPoset};
use crate::subset::Subset;
use crate::tense::{apply_to_slices, Family, TenseOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduatedPoset {
    base: Poset,
    /// Row-major `n × n` table of `x ⊙ y`.
    times: Vec<usize>,
    /// Row-major `n × n` table of `x → y`.
    arrow: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Unit,
    Commutativity,
    Associativity,
    Monotonicity,
    Residuation,
    /// `x ≤ y → (x ⊙ y)`
    UnitOfAdjunction,
    /// `(x → y) ⊙ x ≤ y`
    CounitOfAdjunction,
}

impl Axiom {
    pub fn describe(self) -> &'static str {
        match self {
            Axiom::Unit => "axiom 1: x*1 = x",
            Axiom::Commutativity => "axiom 2: x*y = y*x",
            Axiom::Associativity => "axiom 3: x*(y*z) = (x*y)*z",
            Axiom::Monotonicity => "axiom 4: x<=v, y<=z imply x*y <= v*z",
            Axiom::Residuation => "axiom 5: x*y <= z iff x <= y->z",
            Axiom::UnitOfAdjunction => "x <= y->(x*y)",
            Axiom::CounitOfAdjunction => "(x->y)*x <= y",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Element indices in the order the axiom names its variables.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResiduationReport {
    pub checked: usize,
    pub violation: Option<AxiomViolation>,
}

impl ResiduationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl ResiduatedPoset {
    pub fn new(base: Poset, times: Vec<usize>, arrow: Vec<usize>) -> Result<ResiduatedPoset> {
        base.bounds()?;
        let n = base.len();
        for (name, t) in [("times", &times), ("arrow", &arrow)] {
            if t.len() != n * n {
                return Err(Error::Mismatch(format!(
                    "{name} table has {} entries, expected {}",
                    t.len(),
                    n * n
                )));
            }
            if let Some(&bad) = t.iter().find(|&&v| v >= n) {
                return Err(Error::Mismatch(format!("{name} table entry {bad} out of range")));
            }
        }
        Ok(ResiduatedPoset { base, times, arrow })
    }

    pub fn from_fns(
        base: Poset,
        times: impl Fn(usize, usize) -> usize,
        arrow: impl Fn(usize, usize) -> usize,
    ) -> Result<ResiduatedPoset> {
        let n = base.len();
        let t = (0..n * n).map(|i| times(i / n, i % n)).collect();
        let a = (0..n * n).map(|i| arrow(i / n, i % n)).collect();
        ResiduatedPoset::new(base, t, a)
    }

    /// Gödel chain `0 < ... < 1`: `x ⊙ y = min`, `x → y = 1` if `x ≤ y`, else `y`.
    pub fn godel_chain(n: usize) -> ResiduatedPoset {
        let base = labelled_chain(n);
        let top = n - 1;
        ResiduatedPoset::from_fns(base, |x, y| x.min(y), |x, y| if x <= y { top } else { y })
            .expect("Gödel chain")
    }

    /// Łukasiewicz chain on `0..n-1`: `x ⊙ y = max(0, x+y-top)`, `x → y = min(top, top-x+y)`.
    pub fn lukasiewicz_chain(n: usize) -> ResiduatedPoset {
        let base = labelled_chain(n);
        let top = n - 1;
        ResiduatedPoset::from_fns(
            base,
            |x, y| (x + y).saturating_sub(top),
            |x, y| (top - x + y).min(top),
        )
        .expect("Łukasiewicz chain")
    }

    /// Boolean lattice `2^k` with meet and material implication.
    pub fn boolean_cube(k: usize) -> ResiduatedPoset {
        let base = Poset::boolean(k);
        let mask = (1usize << k) - 1;
        ResiduatedPoset::from_fns(base, |x, y| x & y, |x, y| (!x & mask) | y).expect("Boolean cube")
    }

    /// Componentwise product.
    pub fn product(factors: &[ResiduatedPoset], cap: usize) -> Result<ResiduatedPoset> {
        let bases: Vec<Poset> = factors.iter().map(|f| f.base.clone()).collect();
        let prod = ProductPoset::new(&bases, cap)?;
        let op = |x: usize, y: usize, f: &dyn Fn(&ResiduatedPoset, usize, usize) -> usize| {
            let (cx, cy) = (prod.coords(x), prod.coords(y));
            let c: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, r)| f(r, cx[i], cy[i]))
                .collect();
            prod.index(&c)
        };
        let times = |x, y| op(x, y, &|r, a, b| r.times(a, b));
        let arrow = |x, y| op(x, y, &|r, a, b| r.arrow(a, b));
        ResiduatedPoset::from_fns(prod.poset.clone(), times, arrow)
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.times[x * self.len() + y]
    }

    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.len() + y]
    }

    pub fn times_table(&self) -> &[usize] {
        &self.times
    }

    pub fn arrow_table(&self) -> &[usize] {
        &self.arrow
    }

    /// Copy with one `→` cell replaced.
    pub fn with_arrow(&self, x: usize, y: usize, value: usize) -> ResiduatedPoset {
        let mut r = self.clone();
        let n = self.len();
        r.arrow[x * n + y] = value;
        r
    }

    /// Copy with one `⊙` cell replaced.
    pub fn with_times(&self, x: usize, y: usize, value: usize) -> ResiduatedPoset {
        let mut r = self.clone();
        let n = self.len();
        r.times[x * n + y] = value;
        r
    }

    /// Exhaustive check of the five axioms and the two derived inequalities,
    /// stopping at the first violation.
    pub fn validate(&self) -> ResiduationReport {
        let p = &self.base;
        let n = self.len();
        let top = p.top().expect("validated at construction");
        let mut checked = 0;
        let fail = |axiom, witness: Vec<usize>| {
            Some(AxiomViolation { axiom, witness })
        };
        let done = |checked, violation| ResiduationReport { checked, violation };
        for x in 0..n {
            checked += 1;
            if self.times(x, top) != x {
                return done(checked, fail(Axiom::Unit, vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                checked += 1;
                if self.times(x, y) != self.times(y, x) {
                    return done(checked, fail(Axiom::Commutativity, vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    checked += 1;
                    if self.times(x, self.times(y, z)) != self.times(self.times(x, y), z) {
                        return done(checked, fail(Axiom::Associativity, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            for v in p.up_set(x).iter() {
                for y in 0..n {
                    for z in p.up_set(y).iter() {
                        checked += 1;
                        if !p.leq(self.times(x, y), self.times(v, z)) {
                            return done(checked, fail(Axiom::Monotonicity, vec![x, y, v, z]));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    checked += 1;
                    if p.leq(self.times(x, y), z) != p.leq(x, self.arrow(y, z)) {
                        return done(checked, fail(Axiom::Residuation, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                checked += 1;
                if !p.leq(x, self.arrow(y, self.times(x, y))) {
                    return done(checked, fail(Axiom::UnitOfAdjunction, vec![x, y]));
                }
                checked += 1;
                if !p.leq(self.times(self.arrow(x, y), x), y) {
                    return done(checked, fail(Axiom::CounitOfAdjunction, vec![x, y]));
                }
            }
        }
        done(checked, None)
    }

    /// Human-readable form of a violation.
    pub fn describe(&self, v: &AxiomViolation) -> String {
        let names: Vec<&str> = v.witness.iter().map(|&i| self.base.label(i)).collect();
        format!("{} fails at ({})", v.axiom.describe(), names.join(", "))
    }

    fn products(&self, x: Subset, y: Subset) -> Subset {
        let mut acc = Subset::EMPTY;
        for a in x.iter() {
            for b in y.iter() {
                acc.insert(self.times(a, b));
            }
        }
        acc
    }

    /// `X ⊙ Y = LU({x ⊙ y})` on closed sets.
    pub fn bold_times(&self, x: Subset, y: Subset) -> Subset {
        self.base.lu(self.products(x, y))
    }

    /// `X → Y = ⋂ {L(x → z) | x ∈ X, z ∈ U(Y)}` on closed sets.
    pub fn bold_arrow(&self, x: Subset, y: Subset) -> Subset {
        let p = &self.base;
        let uy = p.upper_cone(y);
        let mut acc = p.full();
        for a in x.iter() {
            for z in uy.iter() {
                acc &= p.down_set(self.arrow(a, z));
            }
        }
        acc
    }

    /// `B ⊡ C = Max LU({b ⊙ c})`
    pub fn boxdot(&self, b: Subset, c: Subset) -> Result<Subset> {
        nonempty(b, c)?;
        Ok(self.base.maximals(self.bold_times(b, c)))
    }

    /// `B ⇒ C = Min U(⋂ {L(b → d) | b ∈ B, d ∈ U(C)})`
    pub fn double_arrow(&self, b: Subset, c: Subset) -> Result<Subset> {
        nonempty(b, c)?;
        Ok(self.base.min_upper(self.bold_arrow(b, c)))
    }
}

fn nonempty(b: Subset, c: Subset) -> Result<()> {
    if b.is_empty() || c.is_empty() {
        Err(Error::EmptySet("connective operand"))
    } else {
        Ok(())
    }
}

fn labelled_chain(n: usize) -> Poset {
    assert!(n >= 2, "a residuated chain needs at least two elements");
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            _ if n == 3 => "m".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_covers(labels, &covers).expect("chain")
}

/// Residuation and equations (1)–(2) on the completion, over all closed sets
/// and all subsets, within the enumeration cap.
pub fn check_completion(rp: &ResiduatedPoset, cap: usize) -> Result<CheckReport> {
    let p = rp.base();
    let closed = dm::closed_sets(p, cap)?;
    let mut r = CheckReport::new();
    let show = |s: Subset| display::set(p, s);
    for &x in &closed {
        for &y in &closed {
            let xy = rp.bold_times(x, y);
            r.check("completion: product closed", dm::is_closed(p, xy), || show(xy));
            let yz_all: Vec<Subset> = closed.iter().map(|&z| rp.bold_arrow(y, z)).collect();
            for (k, &z) in closed.iter().enumerate() {
                let ok = xy.is_subset(z) == x.is_subset(yz_all[k]);
                r.check("completion: residuation", ok, || {
                    format!("X = {}, Y = {}, Z = {}", show(x), show(y), show(z))
                });
            }
        }
    }
    for x in Subset::all_subsets(p.len()) {
        for y in Subset::all_subsets(p.len()) {
            let lhs = rp.bold_times(p.lu(x), p.lu(y));
            let rhs = p.lu(rp.products(x, y));
            r.check("completion: equation (1)", lhs == rhs, || {
                format!("X = {}, Y = {}", show(x), show(y))
            });
            let lhs = rp.bold_arrow(p.lu(x), p.lu(y));
            let rhs = rp.bold_arrow(x, y);
            r.check("completion: equation (2)", lhs == rhs, || {
                format!("X = {}, Y = {}", show(x), show(y))
            });
        }
    }
    Ok(r)
}

/// Items (1)–(5) of the subset adjunction over every combination drawn from `pool`.
pub fn check_adjunction(rp: &ResiduatedPoset, pool: &[Subset]) -> Result<CheckReport> {
    let p = rp.base();
    let (_, top) = p.bounds()?;
    let one = Subset::singleton(top);
    let show = |s: Subset| display::set(p, s);
    let mut r = CheckReport::new();
    // Precompute every pairwise ⊡ and ⇒.
    let k = pool.len();
    let mut bx = vec![Subset::EMPTY; k * k];
    let mut da = vec![Subset::EMPTY; k * k];
    for i in 0..k {
        for j in 0..k {
            bx[i * k + j] = rp.boxdot(pool[i], pool[j])?;
            da[i * k + j] = rp.double_arrow(pool[i], pool[j])?;
        }
    }
    for (i, &b) in pool.iter().enumerate() {
        let a = rp.boxdot(b, one)?;
        r.check("(1) B [.] {1} = Max LU(B)", a == p.maximals(p.lu(b)), || show(b));
        let a = rp.double_arrow(one, b)?;
        r.check("(1) {1} => B = Min U(B)", a == p.min_upper(b), || show(b));
        for (j, &c) in pool.iter().enumerate() {
            r.check("(2) commutativity", bx[i * k + j] == bx[j * k + i], || {
                format!("B = {}, C = {}", show(b), show(c))
            });
            let lc = p.lower_cone(da[i * k + j]);
            // (5) with C = b, D = c.
            let left = rp.boxdot(lc, b)?;
            r.check("(5) L(C=>D) [.] C <= U(D)", left.is_subset(p.lu(c)), || {
                format!("C = {}, D = {}", show(b), show(c))
            });
            let right = rp.double_arrow(lc, c)?;
            r.check("(5) C <= L(C=>D) => D", order::holds(p, OrderKind::All, b, right), || {
                format!("C = {}, D = {}", show(b), show(c))
            });
            for (l, &d) in pool.iter().enumerate() {
                let left = bx[i * k + j].is_subset(p.lu(d));
                let right = order::holds(p, OrderKind::All, b, da[j * k + l]);
                r.check("(4) B [.] C <= U(D) iff B <= C => D", left == right, || {
                    format!("B = {}, C = {}, D = {}", show(b), show(c), show(d))
                });
                if !b.is_subset(p.lu(c)) {
                    continue;
                }
                for (m, &e) in pool.iter().enumerate() {
                    if d.is_subset(p.lu(e)) {
                        let ok = bx[i * k + l].is_subset(p.lu(bx[j * k + m]));
                        r.check("(3) monotonicity", ok, || {
                            format!(
                                "B = {}, C = {}, D = {}, E = {}",
                                show(b),
                                show(c),
                                show(d),
                                show(e)
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(r)
}

/// The hat operators over the completion against the bold operations.
/// Trajectories are given as closed sets per time point.
pub fn check_dr_laws(rp: &ResiduatedPoset, f: &TimeFrame, trajs: &[Vec<Subset>]) -> Result<CheckReport> {
    let p = rp.base();
    let m = f.len();
    let mut r = CheckReport::new();
    let pw = |a: &[Subset], b: &[Subset], op: &dyn Fn(Subset, Subset) -> Subset| -> Vec<Subset> {
        a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect()
    };
    let leq = |a: &[Subset], b: &[Subset]| a.iter().zip(b).all(|(x, y)| x.is_subset(*y));
    let times = |x, y| rp.bold_times(x, y);
    let arrow = |x, y| rp.bold_arrow(x, y);
    let hats = |t: &[Subset]| -> Result<[Vec<Subset>; 4]> {
        Ok([
            hat_tense(TenseOp::P, p, f, t)?,
            hat_tense(TenseOp::F, p, f, t)?,
            hat_tense(TenseOp::H, p, f, t)?,
            hat_tense(TenseOp::G, p, f, t)?,
        ])
    };
    let all_hats = trajs.iter().map(|t| hats(t)).collect::<Result<Vec<_>>>()?;
    let show = |t: &[Subset]| {
        let parts: Vec<String> = t.iter().map(|&s| display::set(p, s)).collect();
        format!("[{}]", parts.join(", "))
    };
    for (i, p1) in trajs.iter().enumerate() {
        if p1.len() != m {
            return Err(Error::Mismatch("trajectory length differs from the frame".into()));
        }
        let [hp1, hf1, hh1, hg1] = &all_hats[i];
        for (j, p2) in trajs.iter().enumerate() {
            let [hp2, hf2, hh2, hg2] = &all_hats[j];
            let detail = || format!("p1 = {}, p2 = {}", show(p1), show(p2));
            let prod = pw(p1, p2, &times);
            let imp = pw(p1, p2, &arrow);
            let [pp, fp, hp, gp] = hats(&prod)?;
            let [_, _, hi, gi] = hats(&imp)?;
            r.check("DR1 G(p1)*G(p2) <= G(p1*p2)", leq(&pw(hg1, hg2, &times), &gp), detail);
            r.check("DR1 G(p1->p2) <= G(p1)->G(p2)", leq(&gi, &pw(hg1, hg2, &arrow)), detail);
            r.check("DR2 P(q1*q2) <= P(q1)*P(q2)", leq(&pp, &pw(hp1, hp2, &times)), detail);
            r.check("DR3 H(q1)*H(q2) <= H(q1*q2)", leq(&pw(hh1, hh2, &times), &hp), detail);
            r.check("DR3 H(p1->p2) <= H(p1)->H(p2)", leq(&hi, &pw(hh1, hh2, &arrow)), detail);
            r.check("DR4 F(p1*p2) <= F(p1)*F(p2)", leq(&fp, &pw(hf1, hf2, &times)), detail);
            // p1 as the argument of the left adjoint, p2 of the right one.
            r.check("Galois (P,G)", leq(hp1, p2) == leq(p1, hg2), detail);
            r.check("Galois (F,H)", leq(hf1, p2) == leq(p1, hh2), detail);
        }
    }
    Ok(r)
}

/// Slicewise `⊡` of two families, as slices.
fn family_boxdot(rp: &ResiduatedPoset, a: &Family, b: &Family) -> Result<Vec<Subset>> {
    (0..a.time_len())
        .map(|t| rp.boxdot(a.slice(t), b.slice(t)))
        .collect()
}

fn slices_boxdot(rp: &ResiduatedPoset, a: &[Subset], b: &[Subset]) -> Result<Vec<Subset>> {
    a.iter().zip(b).map(|(&x, &y)| rp.boxdot(x, y)).collect()
}

fn slices_double_arrow(rp: &ResiduatedPoset, a: &[Subset], b: &[Subset]) -> Result<Vec<Subset>> {
    a.iter().zip(b).map(|(&x, &y)| rp.double_arrow(x, y)).collect()
}

/// The tense operators of a frame against `⊡` and `⇒`, over all pairs of families.
pub fn check_dt_laws(rp: &ResiduatedPoset, f: &TimeFrame, families: &[Family]) -> Result<CheckReport> {
    let p = rp.base();
    let mut r = CheckReport::new();
    let op = |o: TenseOp, s: &[Subset]| apply_to_slices(o, p, f, s);
    let u = |s: &[Subset]| dm::u_slices(p, s);
    let l = |s: &[Subset]| dm::l_slices(p, s);
    let all = |a: &[Subset], b: &[Subset]| order::first_violation(p, OrderKind::All, a, b).is_none();
    for c1 in families {
        for c2 in families {
            let detail = || format!("C1 = {}, C2 = {}", display::family(p, c1), display::family(p, c2));
            let (s1, s2) = (c1.slices(), c2.slices());
            let (u1, u2) = (u(&s1), u(&s2));
            let prod = family_boxdot(rp, c1, c2)?;
            let imp: Vec<Subset> = slices_double_arrow(rp, &s1, &s2)?;
            for (lower, name) in [(TenseOp::G, "DT1"), (TenseOp::H, "DT3")] {
                let lhs = slices_boxdot(rp, &op(lower, &u1)?, &op(lower, &u2)?)?;
                let rhs = dm::min_slices(p, &u(&op(lower, &u(&prod))?));
                r.check(&format!("{name} {lower}(U(C1))[.]{lower}(U(C2)) <= Min U({lower}(U(C1[.]C2)))"), all(&lhs, &rhs), detail);
                let lhs = op(lower, &imp)?;
                let rhs = slices_double_arrow(rp, &op(lower, &u1)?, &op(lower, &u2)?)?;
                r.check(&format!("{name} {lower}(C1=>C2) <= {lower}(U(C1))=>{lower}(U(C2))"), all(&lhs, &rhs), detail);
            }
            for (upper, name) in [(TenseOp::P, "DT2"), (TenseOp::F, "DT4")] {
                let lhs = l(&op(upper, &prod)?);
                let inner = slices_boxdot(rp, &l(&op(upper, &s1)?), &l(&op(upper, &s2)?))?;
                let rhs = u(&inner);
                r.check(&format!("{name} L({upper}(D1[.]D2)) <= U(L({upper}(D1))[.]L({upper}(D2)))"), all(&lhs, &rhs), detail);
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::DEFAULT_ENUM_CAP;

    #[test]
    fn generators_validate() {
        for rp in [
            ResiduatedPoset::godel_chain(2),
            ResiduatedPoset::godel_chain(3),
            ResiduatedPoset::godel_chain(5),
            ResiduatedPoset::lukasiewicz_chain(4),
            ResiduatedPoset::boolean_cube(1),
            ResiduatedPoset::boolean_cube(3),
        ] {
            assert!(rp.validate().is_valid(), "{:?}", rp.validate());
        }
        let prod = ResiduatedPoset::product(
            &[ResiduatedPoset::godel_chain(3), ResiduatedPoset::lukasiewicz_chain(2)],
            64,
        )
        .unwrap();
        assert_eq!(prod.len(), 6);
        assert!(prod.validate().is_valid());
    }

    #[test]
    fn corrupted_arrow_caught() {
        let g = ResiduatedPoset::godel_chain(3);
        let (m, one, zero) = (1, 2, 0);
        let bad = g.with_arrow(one, zero, m);
        let rep = bad.validate();
        let v = rep.violation.unwrap();
        assert_eq!(v.axiom, Axiom::Residuation);
        assert_eq!(v.witness, vec![m, one, zero]);
        assert_eq!(bad.describe(&v), "axiom 5: x*y <= z iff x <= y->z fails at (m, 1, 0)");
    }

    #[test]
    fn subset_connectives_on_godel_chain() {
        let g = ResiduatedPoset::godel_chain(3);
        let s = Subset::singleton;
        assert_eq!(g.boxdot(s(1), s(1)).unwrap(), s(1));
        assert_eq!(g.double_arrow(s(1), s(0)).unwrap(), s(0));
        assert!(g.boxdot(Subset::EMPTY, s(1)).is_err());
    }

    #[test]
    fn godel_adjunction_exhaustive() {
        let g = ResiduatedPoset::godel_chain(3);
        let pool: Vec<Subset> = Subset::all_subsets(3).skip(1).collect();
        let r = check_adjunction(&g, &pool).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn completion_is_residuated() {
        for rp in [ResiduatedPoset::godel_chain(3), ResiduatedPoset::boolean_cube(2)] {
            let r = check_completion(&rp, DEFAULT_ENUM_CAP).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
        }
    }

    #[test]
    fn constant_trajectories_satisfy_dr() {
        let g = ResiduatedPoset::godel_chain(3);
        let f = TimeFrame::chain(3);
        let trajs: Vec<Vec<Subset>> = (0..3).map(|x| vec![g.base().down_set(x); 3]).collect();
        let r = check_dr_laws(&g, &f, &trajs).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn singleton_families_on_boolean_chain_satisfy_dt() {
        let b = ResiduatedPoset::boolean_cube(1);
        let f = TimeFrame::chain(2);
        let fams: Vec<Family> = crate::tense::all_propositions(2, 2, 4)
            .unwrap()
            .into_iter()
            .map(Family::singleton)
            .collect();
        let r = check_dt_laws(&b, &f, &fams).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }
}
