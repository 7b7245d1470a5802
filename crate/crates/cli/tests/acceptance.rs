//! Acceptance criteria, one line per criterion. Each check has a fixed
//! wall-clock bound; exceeding it counts as a failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rbgf_core::comb::{
    count_generalized_partitions, count_set_partitions, cover_count, enum_generalized_partitions,
    factorial, gen_stirling_explicit, gen_stirling_rec, generalized_partition_sum,
    multiset_partition_total, stirling2, SetFamily,
};
use rbgf_core::egf::{compose, divided_powers, egf_kfold};
use rbgf_core::qseries::{euler_f, figurate_identity_check, theta_phi, theta_psi, FigurateKind};
use rbgf_core::rational::{frac, from_int, pow, rat};
use rbgf_core::rba::{element_pow, geometric_inverse};
use rbgf_core::verify::{backend_equiv, rb_axiom, standard_lambdas, thm_nk};
use rbgf_core::{AlgebraContext, LambdaEGF, RBAElement, Rational, TensorWord};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn criterion_1() -> Check {
    let rec = gen_stirling_rec(3, 2);
    let explicit = gen_stirling_explicit(3, 2).map_err(|e| e.to_string())?;
    let mut listed = enum_generalized_partitions(3, Some(2)).map_err(|e| e.to_string())?;
    listed.sort();
    let mut expected: Vec<SetFamily> = vec![
        vec![vec![1], vec![2, 3]],
        vec![vec![1], vec![1, 2, 3]],
        vec![vec![1, 2], vec![3]],
        vec![vec![1, 2], vec![2, 3]],
        vec![vec![2], vec![1, 3]],
        vec![vec![2], vec![1, 2, 3]],
        vec![vec![1, 2], vec![1, 3]],
        vec![vec![1, 2], vec![1, 2, 3]],
    ];
    expected.sort();
    ensure(rec == big(8), || format!("recurrence gave {rec}"))?;
    ensure(explicit == big(8), || {
        format!("explicit formula gave {explicit}")
    })?;
    ensure(listed == expected, || {
        format!("enumeration gave {listed:?}")
    })
}

fn criterion_2() -> Check {
    for n in 1..=8usize {
        for k in 1..=n {
            let rec = gen_stirling_rec(n, k);
            let explicit = gen_stirling_explicit(n, k).map_err(|e| e.to_string())?;
            let search = count_generalized_partitions(n, k).map_err(|e| e.to_string())?;
            ensure(rec == explicit && rec == search, || {
                format!("S̄({n},{k}): rec {rec}, explicit {explicit}, enumeration {search}")
            })?;
        }
        let two = |e: usize| BigInt::from(2u8).pow(e as u32);
        ensure(gen_stirling_rec(n, 1) == big(1), || format!("S̄({n},1)"))?;
        ensure(gen_stirling_rec(n, n) == two(n * (n - 1) / 2), || {
            format!("S̄({n},{n})")
        })?;
        if n >= 2 {
            let s2 = BigInt::from(3u8).pow(n as u32 - 1) - 1;
            ensure(gen_stirling_rec(n, 2) == s2, || format!("S̄({n},2)"))?;
            let s = two((n - 1) * (n - 2) / 2) * (two(n) - big(n as u64) - 1);
            ensure(gen_stirling_rec(n, n - 1) == s, || {
                format!("S̄({n},{})", n - 1)
            })?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let lambdas = standard_lambdas();
    let per_lambda = 128;
    let mismatch = rb_axiom(&lambdas, 8, per_lambda, 0xacce97);
    ensure(mismatch.is_none(), || {
        format!("axiom fails in degree {mismatch:?}")
    })
}

fn criterion_4() -> Check {
    let mismatch = backend_equiv(&standard_lambdas(), 4, 3);
    ensure(mismatch.is_none(), || {
        format!("backends differ in degree {mismatch:?}")
    })
}

fn criterion_5() -> Check {
    for lambda in [rat(0), rat(1), rat(2), rat(3)] {
        let ctx = AlgebraContext::new(lambda.clone(), 8);
        for n in 0..=8 {
            let lhs = element_pow(&RBAElement::one(1), n, &ctx);
            let rhs = RBAElement::from_terms((0..=n).map(|k| {
                let c = from_int(&(factorial(k) * stirling2(n, k))) * pow(&lambda, n - k);
                (TensorWord::one(k), c)
            }));
            ensure(lhs == rhs, || format!("n={n} λ={lambda}: {lhs}"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let ctx = AlgebraContext::new(rat(1), 6);
    for k in 1..=5 {
        let h = egf_kfold(&vec![LambdaEGF::ones(&ctx); k]).map_err(|e| e.to_string())?;
        for n in 0..=6 {
            let expected = pow(&rat((1 << k) - 1), n);
            ensure(*h.coeff(n) == expected, || {
                format!("k={k} n={n}: {}", h.coeff(n))
            })?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for lambda in [rat(0), rat(1), rat(2), rat(3)] {
        for k in 1..=3 {
            for l in 1..=3 {
                let ctx = AlgebraContext::new(lambda.clone(), k * l);
                let power = element_pow(&RBAElement::one(l), k, &ctx);
                for n in l..=k * l {
                    let b = cover_count(n, k, l).map_err(|e| e.to_string())?;
                    let expected = pow(&lambda, k * l - n) * from_int(&b);
                    ensure(power.one_coeff(n) == expected, || {
                        format!("n={n} k={k} l={l} λ={lambda}: {}", power.one_coeff(n))
                    })?;
                }
                let full: BigInt = factorial(k * l) / factorial(l).pow(k as u32);
                let b = cover_count(k * l, k, l).map_err(|e| e.to_string())?;
                ensure(b == full, || format!("B({},{k},{l}) = {b}", k * l))?;
            }
        }
    }
    for l in 1..=3 {
        let trunc = 9;
        let ctx = AlgebraContext::new(rat(0), trunc);
        let inv = geometric_inverse(&RBAElement::one(l), &ctx).map_err(|e| e.to_string())?;
        let expected = RBAElement::from_terms((0..=trunc / l).map(|k| {
            let c: BigInt = factorial(k * l) / factorial(l).pow(k as u32);
            (TensorWord::one(k * l), from_int(&c))
        }));
        ensure(inv == expected, || format!("1/(1-1_{l}) = {inv}"))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let bell = [1, 1, 2, 5, 15, 52, 203, 877];
    let ctx0 = AlgebraContext::new(rat(0), 7);
    let h = compose(&LambdaEGF::ones(&ctx0), &LambdaEGF::ones_from_1(&ctx0))
        .map_err(|e| e.to_string())?;
    for (n, &b) in bell.iter().enumerate() {
        let listed = count_set_partitions(n, None).map_err(|e| e.to_string())?;
        ensure(*h.coeff(n) == rat(b) && listed == big(b as u64), || {
            format!("B({n}): compose {}, enumeration {listed}", h.coeff(n))
        })?;
    }
    let ctx1 = AlgebraContext::new(rat(1), 6);
    let h = compose(&LambdaEGF::ones(&ctx1), &LambdaEGF::ones_from_1(&ctx1))
        .map_err(|e| e.to_string())?;
    for n in 1..=6 {
        let listed = enum_generalized_partitions(n, None)
            .map_err(|e| e.to_string())?
            .len();
        ensure(*h.coeff(n) == rat(listed as i64), || {
            format!("B̄({n}): compose {}, enumeration {listed}", h.coeff(n))
        })?;
    }
    let mixed = [
        rat(0),
        rat(2),
        frac(-1, 3),
        rat(5),
        rat(1),
        frac(7, 2),
        rat(-4),
    ];
    for lambda in [rat(0), rat(1), rat(2)] {
        let ctx = AlgebraContext::new(lambda.clone(), 6);
        for f in [
            LambdaEGF::ones_from_1(&ctx),
            LambdaEGF::new(mixed.to_vec(), &ctx),
        ] {
            let powers = divided_powers(&f, 4).map_err(|e| e.to_string())?;
            for (k, p) in powers.iter().enumerate().skip(1) {
                for n in 1..=6 {
                    let expected = generalized_partition_sum(n, Some(k), &lambda, |sizes| {
                        sizes
                            .iter()
                            .map(|&s| f.coeff(s).clone())
                            .product::<Rational>()
                    })
                    .map_err(|e| e.to_string())?;
                    ensure(*p.coeff(n) == expected, || {
                        format!("E^[{k}] at n={n}, λ={lambda}: {} vs {expected}", p.coeff(n))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let mismatch = thm_nk(8, &[rat(0), rat(1), rat(2)]).map_err(|e| e.to_string())?;
    ensure(mismatch.is_none(), || {
        format!("expansion fails at kn={mismatch:?}")
    })?;
    let c = multiset_partition_total(2, 2).map_err(|e| e.to_string())?;
    let b: BigInt = (0..=4).map(|t| cover_count(t, 2, 2).unwrap()).sum();
    ensure(c == big(13) && b == big(13), || {
        format!("C(2,2)={c}, Σ_t B(t,2,2)={b}")
    })
}

fn criterion_10() -> Check {
    for (name, id) in [
        ("phi", theta_phi(50)),
        ("psi", theta_psi(50)),
        ("f(-q)", euler_f(50)),
    ] {
        let m = id.first_mismatch();
        ensure(m.is_none(), || format!("{name} differs at q^{m:?}"))?;
    }
    for kind in [
        FigurateKind::Square,
        FigurateKind::Triangular,
        FigurateKind::Pentagonal,
    ] {
        let r = figurate_identity_check(kind, 25);
        ensure(r.equal(), || {
            format!("{} differs in degree {:?}", kind.name(), r.first_mismatch)
        })?;
    }
    Ok(())
}

fn criterion_11() -> Check {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let cases: [(&[&str], &str); 3] = [
        (
            &["table", "gen-stirling", "--nmax", "3"],
            "table_gen_stirling_nmax_3.csv",
        ),
        (
            &["verify", "figurate-pentagonal", "--trunc", "15"],
            "verify_figurate_pentagonal_15.json",
        ),
        (
            &[
                "eval",
                "one(1)*one(1)",
                "--lambda",
                "1",
                "--trunc",
                "5",
                "--format",
                "json",
            ],
            "eval_one_1_squared.json",
        ),
    ];
    for (args, file) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_rbgf"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        let expected = std::fs::read(fixtures.join(file)).map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?} exited with {}", out.status)
        })?;
        ensure(out.stdout == expected, || {
            format!(
                "{args:?} printed {:?}",
                String::from_utf8_lossy(&out.stdout)
            )
        })?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    title: &'static str,
    bound: Duration,
    check: fn() -> Check,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "S̄(3,2) = 8 by recurrence, explicit formula and listing",
        bound: secs(1),
        check: criterion_1,
    },
    Criterion {
        id: 2,
        title: "S̄ triple agreement for n <= 8 and special values",
        bound: secs(10),
        check: criterion_2,
    },
    Criterion {
        id: 3,
        title: "Rota-Baxter axiom on 512 random pairs, 4 weights",
        bound: secs(30),
        check: criterion_3,
    },
    Criterion {
        id: 4,
        title: "recursive and stuffle products agree, length <= 4",
        bound: secs(60),
        check: criterion_4,
    },
    Criterion {
        id: 5,
        title: "(1⊗1)^n Stirling expansion for n <= 8",
        bound: secs(5),
        check: criterion_5,
    },
    Criterion {
        id: 6,
        title: "E_{1,I}^k coefficients (2^k-1)^n",
        bound: secs(5),
        check: criterion_6,
    },
    Criterion {
        id: 7,
        title: "powers of 1_l count covers; weight-zero geometric series",
        bound: secs(30),
        check: criterion_7,
    },
    Criterion {
        id: 8,
        title: "composition gives Bell and generalized Bell numbers; divided powers",
        bound: secs(60),
        check: criterion_8,
    },
    Criterion {
        id: 9,
        title: "(1⊗x^{⊗k})^n expansion and Σ_t B(t,n,k) = C(n,k) for kn <= 8",
        bound: secs(60),
        check: criterion_9,
    },
    Criterion {
        id: 10,
        title: "theta and Euler series to q^50; figurate identities to degree 25",
        bound: secs(30),
        check: criterion_10,
    },
    Criterion {
        id: 11,
        title: "CLI output matches golden fixtures",
        bound: secs(5),
        check: criterion_11,
    },
];

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= c.bound, || {
                format!("took {elapsed:.2?}, bound {:?}", c.bound)
            })
        });
        match outcome {
            Ok(()) => println!(
                "PASS  criterion {:>2}  {}  ({:.2?} of {:?})",
                c.id, c.title, elapsed, c.bound
            ),
            Err(why) => {
                failures += 1;
                println!(
                    "FAIL  criterion {:>2}  {}  ({:.2?}): {why}",
                    c.id, c.title, elapsed
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
