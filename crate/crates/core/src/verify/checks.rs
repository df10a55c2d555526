use fixedbitset::FixedBitSet;

use super::{Ctx, Outcome};
use crate::module::{
    nilpotent_elements, quotient_module, restrict_scalars, zero_divisors_on, ConcreteModule, Restricted,
    SubId,
};
use crate::spectrum::{Hull, Spectrum};
use crate::zsub::{z0_closure, Classifier};

/// A hypothesis filter with its assertion.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub hypotheses: &'static str,
    /// Fewest hypothesis-satisfying instances before the check counts as vacuous.
    pub minimum: usize,
    pub(crate) requires: fn(&Ctx<'_>) -> bool,
    pub(crate) run: fn(&Ctx<'_>, &mut Outcome),
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish()
    }
}

const MIN: usize = 10;
const MIN_FAITHFUL: usize = 5;

fn mult(c: &Ctx<'_>) -> bool {
    c.p.multiplication
}
fn rm(c: &Ctx<'_>) -> bool {
    c.p.reduced_multiplication()
}
fn frm(c: &Ctx<'_>) -> bool {
    c.p.faithful && rm(c)
}
fn fm(c: &Ctx<'_>) -> bool {
    c.p.faithful && c.p.multiplication
}
fn rmd(c: &Ctx<'_>) -> bool {
    rm(c) && c.p.dac
}
fn rmt(c: &Ctx<'_>) -> bool {
    rm(c) && c.p.property_t && c.p.torsion_proper
}
fn nonzero(c: &Ctx<'_>) -> bool {
    c.s.lattice().order() > 1
}
fn any(_: &Ctx<'_>) -> bool {
    true
}

const fn check(
    id: &'static str,
    hypotheses: &'static str,
    minimum: usize,
    requires: fn(&Ctx<'_>) -> bool,
    run: fn(&Ctx<'_>, &mut Outcome),
) -> Check {
    Check {
        id,
        hypotheses,
        minimum,
        requires,
        run,
    }
}

pub fn catalog() -> Vec<Check> {
    vec![
        check("T1", "multiplication", MIN, mult, t1),
        check("T2", "multiplication", MIN, mult, t2),
        check("T3", "multiplication", MIN, mult, t3),
        check("T4", "reduced multiplication", MIN, rm, t4),
        check("T5", "reduced multiplication", MIN, rm, t5),
        check("T6", "reduced multiplication", MIN, rm, t6),
        check("T7", "reduced multiplication", MIN, rm, t7),
        check("T8", "faithful reduced multiplication", MIN_FAITHFUL, frm, t8),
        check("T9", "reduced multiplication", MIN, rm, t9),
        check("T10", "reduced multiplication", MIN, rm, t10),
        check("T11", "reduced multiplication", MIN, rm, t11),
        check("T12", "reduced multiplication", MIN, rm, t12),
        check("T13", "reduced multiplication", MIN, rm, t13),
        check("T14", "faithful multiplication", MIN_FAITHFUL, fm, t14),
        check("T15", "reduced multiplication", MIN, rm, t15),
        check("T16", "nonzero module", MIN, nonzero, t16),
        check("T17", "reduced multiplication", MIN, rm, t17),
        check("T18", "reduced multiplication", MIN, rm, t18),
        check("T19", "reduced multiplication, dac", MIN, rmd, t19),
        check("T20", "reduced multiplication, dac", MIN, rmd, t20),
        check("T21", "reduced multiplication, dac", MIN, rmd, t21),
        check("T22", "reduced multiplication, dac", MIN, rmd, t22),
        check("T23", "reduced multiplication, dac", MIN, rmd, t23),
        check("T24", "faithful multiplication", MIN_FAITHFUL, fm, t24),
        check(
            "T25",
            "reduced multiplication, property T, T_0(M) proper",
            MIN_FAITHFUL,
            rmt,
            t25,
        ),
        check(
            "T26",
            "reduced multiplication, property T, T_0(M) proper",
            MIN_FAITHFUL,
            rmt,
            t26,
        ),
        check("D1", "none", MIN, any, d1),
    ]
}

/// T6 with `V(x)` in place of its complement. Must fail on any corpus with
/// a reduced multiplication module that has a minimal prime.
pub fn negative_control() -> Check {
    check("T6-corrupted", "reduced multiplication", MIN, rm, t6_corrupted)
}

fn bits(len: usize, it: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(len);
    b.extend(it);
    b
}

fn hull(c: &Ctx<'_>, h: Hull) -> SubId {
    h.resolve(c.s.lattice())
}

fn members<'a>(c: &'a Ctx<'_>, n: SubId) -> &'a FixedBitSet {
    c.s.lattice().get(n).members()
}

fn within_torsion(c: &Ctx<'_>, n: SubId) -> bool {
    members(c, n).is_subset(c.torsion())
}

/// `x ∈ N` and `key(x) = key(y)` force `y ∈ N`.
fn closed_under<K: PartialEq>(c: &Ctx<'_>, n: SubId, keys: &[K]) -> bool {
    let inside = c.s.lattice().get(n);
    inside
        .elements()
        .iter()
        .all(|&x| (0..keys.len()).all(|y| inside.contains(y) || keys[x] != keys[y]))
}

/// `Σ_{x ∈ N} 𝔓_x`, which is `M` as soon as one `𝔓_x` is.
fn sum_of_frak_p(c: &Ctx<'_>, n: SubId) -> SubId {
    let lat = c.s.lattice();
    lat.get(n)
        .elements()
        .iter()
        .fold(lat.bottom(), |acc, &x| lat.join(acc, hull(c, c.s.frak_p_elem(x))))
}

/// `x ∈ N ⇒ (0 :_M Ann(x)) ⊆ N`.
fn absorbs_double_annihilators(c: &Ctx<'_>, n: SubId) -> bool {
    let lat = c.s.lattice();
    lat.get(n)
        .elements()
        .iter()
        .all(|&x| lat.is_subset(lat.zero_of(lat.ann(x)), n))
}

fn nilradical(c: &Ctx<'_>) -> FixedBitSet {
    bits(c.s.lattice().order(), nilpotent_elements(c.m()))
}

fn t1(c: &Ctx<'_>, o: &mut Outcome) {
    let nil = nilradical(c);
    let spec = hull(c, c.s.intersect(c.s.spec().iter().copied()));
    o.case(&nil == members(c, spec), || {
        format!("nilpotents {} vs ∩Spec {}", nil.count_ones(..), c.sub(spec))
    });
}

fn t2(c: &Ctx<'_>, o: &mut Outcome) {
    let a = hull(c, c.s.intersect(c.s.min_primes().iter().copied()));
    let b = hull(c, c.s.intersect(c.s.spec().iter().copied()));
    o.case(a == b, || {
        format!("∩Min^p = {} but ∩Spec = {}", c.sub(a), c.sub(b))
    });
}

fn t3(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let nil_zero = nilradical(c).count_ones(..) == 1;
    let p0_zero = hull(c, c.s.frak_p(lat.bottom())) == lat.bottom();
    let reduced = c.s.is_reduced();
    o.case(reduced == (nil_zero && p0_zero), || {
        format!("reduced={reduced}, nilradical zero={nil_zero}, P_0 zero={p0_zero}")
    });
}

fn t4(c: &Ctx<'_>, o: &mut Outcome) {
    for &p in c.s.spec() {
        let op = c.s.o_p(p).expect("prime");
        let minimal = c.s.is_min_prime(p);
        o.case(minimal == (&op == members(c, p)), || {
            format!("P={} minimal={minimal} |O_P|={}", c.sub(p), op.count_ones(..))
        });
    }
}

fn t5(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for &p in c.s.min_primes() {
        for &x in lat.get(p).elements() {
            o.case(!lat.ann(x).is_subset_of(lat.colon(p)), || {
                format!("P={} x={}: Ann(x) ⊆ (P:M)", c.sub(p), c.elem(x))
            });
        }
    }
}

fn complement(set: &FixedBitSet) -> FixedBitSet {
    let mut out = set.clone();
    out.toggle_range(..);
    out
}

fn t6(c: &Ctx<'_>, o: &mut Outcome) {
    t6_with(c, o, complement);
}

fn t6_corrupted(c: &Ctx<'_>, o: &mut Outcome) {
    t6_with(c, o, Clone::clone);
}

fn t6_with(c: &Ctx<'_>, o: &mut Outcome, expected: fn(&FixedBitSet) -> FixedBitSet) {
    let lat = c.s.lattice();
    for x in 0..lat.order() {
        let lhs = c.s.v_sub(lat.ideal_times(lat.ann(x)));
        let rhs = expected(c.s.v_elem(x));
        o.case(lhs == rhs, || {
            format!(
                "x={}: V(Ann(x)M)={:?} expected {:?}",
                c.elem(x),
                lhs.ones().collect::<Vec<_>>(),
                rhs.ones().collect::<Vec<_>>()
            )
        });
    }
}

fn t7(c: &Ctx<'_>, o: &mut Outcome) {
    let k = c.s.min_primes().len();
    match c.s.hausdorff_certificate() {
        Ok(cert) => o.case(cert.pairs.len() == k * k.saturating_sub(1) / 2, || {
            format!("{} pairs certified for {k} minimal primes", cert.pairs.len())
        }),
        Err(e) => o.case(false, || e.to_string()),
    }
}

fn t8(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let mut union = FixedBitSet::with_capacity(lat.order());
    for &p in c.s.min_primes() {
        union.union_with(members(c, p));
    }
    o.case(&union == c.torsion(), || {
        format!(
            "|T_0|={} but |∪Min^p|={}",
            c.torsion().count_ones(..),
            union.count_ones(..)
        )
    });
}

fn t9(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for i in c.m().ring().all_ideals() {
        let n = lat.zero_of(&i);
        let q = quotient_module(c.m(), lat.get(n));
        let qs = Spectrum::new(&q, c.bound).expect("quotient is no larger than M");
        o.case(qs.is_reduced(), || format!("M/(0:{i}) is not reduced"));
        for &qp in qs.min_primes() {
            let lifted = lat
                .find(&q.preimage(qs.lattice().get(qp).members()))
                .expect("preimage is a submodule");
            o.case(c.s.is_min_prime(lifted), || {
                format!(
                    "I={i}: lift {} of a minimal prime of M/(0:I) is not minimal",
                    c.sub(lifted)
                )
            });
        }
    }
}

fn t10(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for i in c.m().ring().all_ideals() {
        let n = lat.zero_of(&i);
        let p = hull(c, c.s.frak_p(n));
        o.case(p == n, || {
            format!("I={i}: (0:I)={} but P_(0:I)={}", c.sub(n), c.sub(p))
        });
    }
}

fn t11(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let ring = c.m().ring();
    for x in 0..lat.order() {
        let dbl = lat.zero_of(lat.ann(x));
        o.case(c.s.v_elem(x) == &c.s.v_sub(dbl), || {
            format!("(a) x={}: V(x) ≠ V((0:Ann(x)))", c.elem(x))
        });
    }
    for j in ring.all_ideals() {
        let g = j.generator(ring);
        let jm = lat.zero_of(&lat.ann_of(lat.ideal_times(&j)));
        for x in 0..lat.order() {
            let jx = c.m().scale(&g, x);
            let lhs = lat.zero_of(lat.ann(jx));
            let rhs = lat.meet(jm, lat.zero_of(lat.ann(x)));
            o.case(lhs == rhs, || {
                format!("(b) J={j} x={}: {} vs {}", c.elem(x), c.sub(lhs), c.sub(rhs))
            });
        }
    }
}

fn t12(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for x in 0..lat.order() {
        let lhs = lat.zero_of(lat.ann(x));
        let rhs = hull(c, c.s.frak_p(lat.cyclic(x)));
        o.case(lhs == rhs, || {
            format!("x={}: (0:Ann(x))={} P_Rx={}", c.elem(x), c.sub(lhs), c.sub(rhs))
        });
    }
}

struct Keys {
    frak_p: Vec<Hull>,
    v_cyclic: Vec<FixedBitSet>,
    ann: Vec<crate::ring::IdealCanon>,
}

fn keys(c: &Ctx<'_>) -> Keys {
    let lat = c.s.lattice();
    let all = 0..lat.order();
    Keys {
        frak_p: all.clone().map(|x| c.s.frak_p_elem(x)).collect(),
        v_cyclic: all.clone().map(|x| c.s.v_sub(lat.cyclic(x))).collect(),
        ann: all.map(|x| lat.ann(x).clone()).collect(),
    }
}

fn all_equal(flags: &[bool]) -> bool {
    flags.windows(2).all(|w| w[0] == w[1])
}

fn t13(c: &Ctx<'_>, o: &mut Outcome) {
    let k = keys(c);
    for n in c.proper() {
        let flags = [
            closed_under(c, n, &k.frak_p),
            closed_under(c, n, &k.v_cyclic),
            closed_under(c, n, &k.ann),
        ];
        o.case(all_equal(&flags), || format!("N={}: (a,b,c)={flags:?}", c.sub(n)));
    }
}

fn t14(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for n in c.c.z0_family() {
        for r in lat.ring_elems() {
            let k = lat.colon_by_scalar(n, r);
            if lat.is_proper(k) {
                o.case(c.c.is_z0(k), || {
                    format!("N={} r={r}: (N:r)={} not z°", c.sub(n), c.sub(k))
                });
            } else {
                o.note(|| format!("N={} r={r}: (N:r)=M", c.sub(n)));
            }
        }
    }
}

fn t15(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let m = c.m();
    for x in 0..lat.order() {
        let a = lat.ideal_times(lat.ann(x));
        let converse = c.p.faithful && c.c.is_z0(a);
        for &y in lat.get(a).elements() {
            let equal = hull(c, c.s.frak_p_elem(y)) == a;
            let torsion = c.torsion().contains(m.add(x, y));
            if equal {
                o.case(!torsion, || {
                    format!(
                        "x={} y={}: Ann(x)M={} = P_y but x+y={} is torsion",
                        c.elem(x),
                        c.elem(y),
                        c.sub(a),
                        c.elem(m.add(x, y))
                    )
                });
            }
            if converse && !torsion {
                o.case(equal, || {
                    format!(
                        "x={} y={}: x+y not torsion but Ann(x)M={} ≠ P_y",
                        c.elem(x),
                        c.elem(y),
                        c.sub(a)
                    )
                });
            }
        }
    }
}

fn t16(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let ann = lat.ann_of(lat.top());
    let Restricted::Module(r) = restrict_scalars(c.m(), &ann).expect("exact annihilator") else {
        return;
    };
    let rs = Spectrum::new(&r, c.bound).expect("same order as M");
    let rc = Classifier::new(&rs);
    for n in c.proper() {
        let there = rs.lattice().find(members(c, n)).expect("same submodules");
        let (a, b) = (c.c.is_z0(n), rc.is_z0(there));
        o.case(a == b, || {
            format!("N={}: over R {a}, over R/Ann(M) {b}", c.sub(n))
        });
    }
}

fn t17(c: &Ctx<'_>, o: &mut Outcome) {
    for n in c.proper() {
        let flags = [
            c.c.is_z0(n),
            absorbs_double_annihilators(c, n),
            sum_of_frak_p(c, n) == n,
        ];
        o.case(all_equal(&flags), || format!("N={}: (a,b,c)={flags:?}", c.sub(n)));
    }
}

fn t18(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for n in c.c.z0_family() {
        o.case(within_torsion(c, n), || {
            format!("(a) z° N={} leaves T_0(M)", c.sub(n))
        });
    }
    for x in c.torsion().ones() {
        let k = lat.zero_of(lat.ann(x));
        if lat.is_proper(k) {
            o.case(c.c.is_z0(k), || {
                format!("(b) x={}: (0:Ann(x))={} not z°", c.elem(x), c.sub(k))
            });
        } else {
            o.note(|| format!("(b) x={}: (0:Ann(x))=M", c.elem(x)));
        }
    }
}

fn t19(c: &Ctx<'_>, o: &mut Outcome) {
    let k = keys(c);
    for n in c.proper() {
        let flags = [
            closed_under(c, n, &k.frak_p),
            closed_under(c, n, &k.v_cyclic),
            absorbs_double_annihilators(c, n),
            closed_under(c, n, &k.ann),
            c.c.is_z0(n),
            sum_of_frak_p(c, n) == n,
        ];
        o.case(all_equal(&flags), || format!("N={}: (a..f)={flags:?}", c.sub(n)));
    }
}

fn t20(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let rad = hull(c, c.s.jacobson_radical(lat.bottom()));
    let left = rad == lat.bottom();
    let right = c.c.z0_family().into_iter().all(|n| c.c.is_z(n));
    o.case(left == right, || {
        format!("Rad_0={} zero={left}, every z° is z={right}", c.sub(rad))
    });
}

fn t21(c: &Ctx<'_>, o: &mut Outcome) {
    for n in c.c.z0_family() {
        for p in c.s.minimal_primes_over(n) {
            o.case(c.s.is_prime(p) && c.c.is_z0(p), || {
                format!("N={}: minimal prime {} over N is not z°", c.sub(n), c.sub(p))
            });
        }
        let rad = hull(c, c.s.prime_radical(n));
        o.case(c.c.is_z0(rad), || {
            format!("N={}: rad(N)={} not z°", c.sub(n), c.sub(rad))
        });
    }
}

fn t22(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let family = c.c.z0_family();
    for &n in &family {
        let q = quotient_module(c.m(), lat.get(n));
        let qs = Spectrum::new(&q, c.bound).expect("quotient is no larger than M");
        let qc = Classifier::new(&qs);
        for k in qc.z0_family() {
            let lifted = lat
                .find(&q.preimage(qs.lattice().get(k).members()))
                .expect("preimage is a submodule");
            o.case(c.c.is_z0(lifted), || {
                format!(
                    "(a) N={}: contraction {} of a z° of M/N is not z°",
                    c.sub(n),
                    c.sub(lifted)
                )
            });
        }
    }
    let prime_z0: Vec<SubId> = c.s.spec().iter().copied().filter(|&p| c.c.is_z0(p)).collect();
    for n in c.proper() {
        let meet = hull(
            c,
            c.s.intersect(prime_z0.iter().copied().filter(|&p| lat.is_subset(n, p))),
        );
        o.case(c.c.is_z0(n) == (meet == n), || {
            format!(
                "(b) N={}: z°={} but ∩ prime z° above = {}",
                c.sub(n),
                c.c.is_z0(n),
                c.sub(meet)
            )
        });
    }
    for k in c.c.maximal_z0() {
        o.case(c.s.is_prime(k), || {
            format!("(c) maximal z° {} not prime", c.sub(k))
        });
    }
    for &p in c.s.spec() {
        let inside: Vec<SubId> = family.iter().copied().filter(|&k| lat.is_subset(k, p)).collect();
        let ok = c.c.is_z0(p)
            || inside
                .iter()
                .any(|&k| c.s.is_prime(k) && !inside.iter().any(|&j| j != k && lat.is_subset(k, j)));
        o.case(ok, || {
            format!("(d) prime {} has no maximal prime z° inside", c.sub(p))
        });
    }
}

fn t23(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let ring = c.m().ring();
    let proper: Vec<SubId> = c.proper().collect();
    let coprime = |a: SubId, b: SubId| ring.are_coprime(lat.colon(a), lat.colon(b)).expect("same ring");
    let mut assert_family = |family: &[SubId]| {
        let meet = family.iter().fold(lat.top(), |acc, &n| lat.meet(acc, n));
        let each = family.iter().all(|&n| c.c.is_z0(n));
        o.case(c.c.is_z0(meet) == each, || {
            let names: Vec<String> = family.iter().map(|&n| c.sub(n)).collect();
            format!("family {names:?}: ∩ z°={} each z°={each}", c.c.is_z0(meet))
        });
    };
    for (i, &a) in proper.iter().enumerate() {
        for (j, &b) in proper.iter().enumerate().skip(i + 1) {
            if !coprime(a, b) {
                continue;
            }
            assert_family(&[a, b]);
            for &d in &proper[j + 1..] {
                if coprime(a, d) && coprime(b, d) {
                    assert_family(&[a, b, d]);
                }
            }
        }
    }
}

fn t24(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    let ring = c.m().ring();
    let zd = zero_divisors_on(c.m());
    for n in c.c.z0_family() {
        let colon = lat.colon(n);
        let outside = ring.ideal_elements(colon).into_iter().find(|r| !zd.contains(r));
        o.case(outside.is_none(), || {
            format!(
                "N={}: {} in (N:M)={colon} is not a zero divisor",
                c.sub(n),
                outside.clone().unwrap()
            )
        });
    }
}

fn t25(c: &Ctx<'_>, o: &mut Outcome) {
    for n in c.s.lattice().ids().filter(|&n| within_torsion(c, n)) {
        let trace = z0_closure(c.s, n);
        let f = trace.fixpoint;
        let least = c.c.smallest_z0_containing(n);
        o.case(trace.proper && c.c.is_z0(f) && least == Some(f), || {
            format!(
                "N={}: fixpoint {} proper={} z°={} smallest={:?}",
                c.sub(n),
                c.sub(f),
                trace.proper,
                c.c.is_z0(f),
                least.map(|l| c.sub(l))
            )
        });
    }
}

fn t26(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for &k in c.s.maximal_submodules() {
        if within_torsion(c, k) {
            o.case(c.c.is_z0(k), || {
                format!("maximal {} inside T_0(M) not z°", c.sub(k))
            });
        }
    }
    let maximal = c.c.maximal_z0();
    for n in lat.ids().filter(|&n| within_torsion(c, n)) {
        let least = c.c.smallest_z0_containing(n).is_some();
        let top = maximal.iter().any(|&k| lat.is_subset(n, k) && c.s.is_prime(k));
        o.case(least && top, || {
            format!(
                "N={}: smallest z° exists={least}, prime maximal z° above={top}",
                c.sub(n)
            )
        });
    }
}

fn d1(c: &Ctx<'_>, o: &mut Outcome) {
    let lat = c.s.lattice();
    for &p in c.s.min_primes() {
        o.case(c.c.is_z0(p), || format!("minimal prime {} not z°", c.sub(p)));
    }
    let family = c.c.z0_family();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            let m = lat.meet(a, b);
            o.case(c.c.is_z0(m), || {
                format!("{} ∩ {} = {} not z°", c.sub(a), c.sub(b), c.sub(m))
            });
        }
    }
    if let Hull::Sub(p0) = c.s.frak_p(lat.bottom()) {
        let least = family.iter().all(|&k| lat.is_subset(p0, k));
        o.case(c.c.is_z0(p0) && least, || {
            format!("P_0={} is not the least z°", c.sub(p0))
        });
    }
}
