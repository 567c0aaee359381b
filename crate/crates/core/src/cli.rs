//! The `ah` command-line front end.
//!
//! [`run`] parses arguments, dispatches, and returns the exit code with the
//! text that would be written to stdout and stderr. Every command builds a
//! JSON value; pretty output is rendered from the same value, so both modes
//! carry identical content.

use std::ffi::OsString;
use std::panic::{self, AssertUnwindSafe};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::ah::{AhContext, OreElement};
use crate::aut::{self, Automorphism, EndoKind, Endomorphism, InvariantRing, PSet};
use crate::center::{self, CommutatorSpace};
use crate::error::Error;
use crate::field::{FieldElem, FieldSpec};
use crate::normal;
use crate::parse::{parse_element, parse_poly, parse_scalar, parse_weyl};
use crate::poly::{Factor, FactoredPoly, Irreducibility, Poly};
use crate::weyl::{self, Side};

#[derive(Parser, Debug)]
#[command(name = "ah", version, about = "Exact computations in A_h = F<x, Y> with Yx - xY = h(x)")]
struct Cli {
    /// Ground field: QQ or GF:p.
    #[arg(long, global = true, default_value = "QQ")]
    field: String,
    /// The polynomial h.
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<String>,
    /// Trusted factorization of h, e.g. "x^2,x-1,3" (factors with optional
    /// exponents, then an optional unit).
    #[arg(long = "h-factored", global = true, allow_hyphen_values = true)]
    h_factored: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized factorization steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    /// [x, A_h]
    X,
    /// [Y, A_h]
    Y,
    /// the Lie ideal [A_h, A_h]
    Lie,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Factor a polynomial into monic irreducibles.
    Factor {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Distinct roots in the ground field.
    Roots {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Monic gcd of two polynomials.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// f(g(x)).
    Compose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Formal derivative.
    Deriv {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Number of distinct roots over the algebraic closure.
    RootCount {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Normal form of an element of A_h.
    Eval {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The commutator [a, b].
    Comm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// delta(f) = h f'.
    Delta {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Image under the anti-automorphism x -> x, Y -> -Y + h'.
    Anti {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rewrite an element of A_h in the Weyl algebra (Y = y h).
    ToWeyl {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Pull a Weyl algebra element (written with y) back into A_h.
    FromWeyl {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Embed a in A_h into A_f for f dividing h.
    Embed {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Ore condition witness for powers of f.
    OreWitness {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        left: bool,
    },
    /// Whether a h^-m equals w h^-n after localizing at h.
    LocalizedEqual {
        #[arg(allow_hyphen_values = true)]
        a: String,
        m: u32,
        #[arg(allow_hyphen_values = true)]
        w: String,
        n: u32,
    },
    /// The element h^i y^i (or y^i h^i with --right) written in A_h.
    ProductFormula {
        i: usize,
        #[arg(long)]
        right: bool,
    },
    /// Generators of the center.
    Center,
    /// Whether a commutes with x and Y.
    IsCentral {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Coordinates over the center in characteristic p.
    DecomposeCentral {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Membership in a commutator space, with a preimage when one is found.
    InCommutator {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value = "x")]
        space: SpaceArg,
    },
    /// Whether a commutes with x.
    InCentralizerX {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Whether v A_h = A_h v, with the shift r in [Y, v] = r v.
    IsNormal {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Write a normal element as a product of prime factors of h times a central element.
    ClassifyNormal {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Whether A_h is a simple ring.
    IsSimple,
    /// Whether v generates a height one prime ideal.
    PrimeTest {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// The pairs (alpha, beta) with h(alpha x + beta) = alpha^deg(h) h.
    AutP,
    /// The translations fixing h.
    AutG,
    /// Structure of the automorphism group with its invariants and center.
    AutClassify,
    /// Apply x -> alpha x + beta, Y -> alpha^(deg h - 1) Y + f.
    AutApply {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The composite of two automorphisms, the second applied first.
    AutCompose {
        #[arg(allow_hyphen_values = true)]
        alpha1: String,
        #[arg(allow_hyphen_values = true)]
        beta1: String,
        #[arg(allow_hyphen_values = true)]
        f1: String,
        #[arg(allow_hyphen_values = true)]
        alpha2: String,
        #[arg(allow_hyphen_values = true)]
        beta2: String,
        #[arg(allow_hyphen_values = true)]
        f2: String,
    },
    /// Generator of the ring of invariant polynomials.
    Invariants,
    /// The center of the automorphism group.
    AutCenter,
    /// Whether A_h and A_g are isomorphic.
    Iso {
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// The endomorphism eta_k for h = x^n.
    EndoEta {
        k: u64,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// The endomorphism kappa_c, Y -> Y + c.
    EndoKappa {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Extend an automorphism of A_h to A_f for f dividing h.
    AutExtend {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Restrict an automorphism of A_h to A_g for h dividing g.
    AutRestrict {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Env {
    spec: FieldSpec,
    h: Option<String>,
    h_factored: Option<String>,
    seed: u64,
}

impl Env {
    fn poly(&self, src: &str) -> CliResult<Poly> {
        Ok(parse_poly(src, self.spec)?)
    }

    fn scalar(&self, src: &str) -> CliResult<FieldElem> {
        Ok(parse_scalar(src, self.spec)?)
    }

    fn ctx(&self) -> CliResult<AhContext> {
        match (&self.h, &self.h_factored) {
            (None, None) => Err(Failure::Usage("this command needs --h".into())),
            (h, Some(spec)) => {
                let factored = self.factored(spec)?;
                let h = match h {
                    Some(src) => self.poly(src)?,
                    None => factored.expand(),
                };
                Ok(AhContext::with_factorization(h, factored)?)
            }
            (Some(h), None) => Ok(AhContext::new(self.poly(h)?)?),
        }
    }

    fn ctx_for(&self, src: &str) -> CliResult<AhContext> {
        Ok(AhContext::new(self.poly(src)?)?)
    }

    /// `"u1^a1,u2^a2,unit"`.
    fn factored(&self, src: &str) -> CliResult<FactoredPoly> {
        let mut unit = self.spec.one();
        let mut factors = Vec::new();
        for item in src.split(',').map(str::trim) {
            let (base, mult) = match item.rsplit_once('^') {
                Some((b, e)) if (b == "x" || whole_parenthesized(b)) && e.bytes().all(|c| c.is_ascii_digit()) => {
                    (b, e.parse::<usize>().map_err(|_| Failure::Usage(format!("bad exponent in `{item}`")))?)
                }
                _ => (item, 1),
            };
            let p = self.poly(base)?;
            if p.is_zero() {
                return Err(Error::ZeroPolynomial.into());
            }
            if p.is_constant() {
                unit = &unit * &p.leading().pow(mult as u64);
                continue;
            }
            unit = &unit * &p.leading().pow(mult as u64);
            factors.push(Factor { poly: p.monic(), multiplicity: mult, irreducibility: Irreducibility::Verified });
        }
        Ok(FactoredPoly { unit, factors })
    }
}

/// `(...)` where the first parenthesis closes at the end.
fn whole_parenthesized(b: &str) -> bool {
    if !b.starts_with('(') {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in b.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == b.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn result(x: impl ToString) -> Value {
    json!({ "result": x.to_string() })
}

fn pair_json(a: &FieldElem, b: &FieldElem) -> Value {
    json!({ "alpha": s(a), "beta": s(b) })
}

fn p_json(p: &PSet) -> Value {
    match p {
        PSet::Finite(pairs) => Value::Array(pairs.iter().map(|(a, b)| pair_json(a, b)).collect()),
        PSet::OneParameterFamily(lambda) => json!({ "family_lambda": s(lambda) }),
    }
}

fn invariant_json(t: &InvariantRing) -> Value {
    s(t)
}

fn automorphism_json(w: &Automorphism) -> Value {
    json!({ "alpha": s(w.alpha()), "beta": s(w.beta()), "f": s(w.f()), "map": s(w) })
}

fn endo_json(e: &Endomorphism, image: Option<OreElement>, bound: usize) -> CliResult<Value> {
    let probe = e.probe_surjectivity(bound)?;
    let mut m = Map::new();
    let kind = match e.kind() {
        EndoKind::Eta { k } => format!("eta_{k}"),
        EndoKind::Kappa { c } => format!("kappa({c})"),
    };
    m.insert("endomorphism".into(), s(kind));
    m.insert("x".into(), s(e.x_image()));
    m.insert("Y".into(), s(e.yhat_image()));
    m.insert("relation_holds".into(), Value::Bool(e.preserves_relation()));
    m.insert("probe_bound".into(), json!(probe.bound));
    m.insert("x_reached".into(), Value::Bool(probe.x_reached));
    m.insert("Y_reached".into(), Value::Bool(probe.yhat_reached));
    m.insert("surjective_within_bound".into(), Value::Bool(probe.surjective_within_bound()));
    if let Some(img) = image {
        m.insert("image".into(), s(img));
    }
    Ok(Value::Object(m))
}

fn dispatch(cmd: &Cmd, env: &Env) -> CliResult<Value> {
    let spec = env.spec;
    Ok(match cmd {
        Cmd::Factor { f } => {
            let fp = env.poly(f)?.factor_with_seed(env.seed)?;
            let factors: Vec<Value> = fp
                .factors
                .iter()
                .map(|fa| {
                    json!({
                        "poly": s(&fa.poly),
                        "multiplicity": fa.multiplicity,
                        "verified": fa.irreducibility == Irreducibility::Verified,
                    })
                })
                .collect();
            json!({ "result": s(&fp), "unit": s(&fp.unit), "factors": factors })
        }
        Cmd::Roots { f } => {
            let roots: Vec<Value> = env.poly(f)?.roots()?.iter().map(s).collect();
            json!({ "roots": roots })
        }
        Cmd::Gcd { f, g } => result(env.poly(f)?.gcd(&env.poly(g)?)?),
        Cmd::Compose { f, g } => result(env.poly(f)?.compose(&env.poly(g)?)),
        Cmd::Deriv { f } => result(env.poly(f)?.derivative()),
        Cmd::RootCount { f } => json!({ "distinct_roots": env.poly(f)?.distinct_root_count()? }),
        Cmd::Eval { a } => {
            let ctx = env.ctx()?;
            result(parse_element(a, &ctx)?)
        }
        Cmd::Comm { a, b } => {
            let ctx = env.ctx()?;
            result(parse_element(a, &ctx)?.commutator(&parse_element(b, &ctx)?)?)
        }
        Cmd::Delta { f } => {
            let ctx = env.ctx()?;
            result(ctx.delta(&env.poly(f)?))
        }
        Cmd::Anti { a } => {
            let ctx = env.ctx()?;
            result(parse_element(a, &ctx)?.antiautomorphism())
        }
        Cmd::ToWeyl { a } => {
            let ctx = env.ctx()?;
            result(weyl::to_weyl(&parse_element(a, &ctx)?))
        }
        Cmd::FromWeyl { w } => {
            let ctx = env.ctx()?;
            result(weyl::from_weyl(&parse_weyl(w, spec)?, &ctx)?)
        }
        Cmd::Embed { f, a } => {
            let ctx = env.ctx()?;
            let target = env.ctx_for(f)?;
            result(weyl::embed(&parse_element(a, &ctx)?, &target)?)
        }
        Cmd::OreWitness { a, f, left } => {
            let ctx = env.ctx()?;
            let a = parse_element(a, &ctx)?;
            let f = env.poly(f)?;
            let side = if *left { Side::Left } else { Side::Right };
            let w = weyl::ore_witness(&a, &f, side)?;
            json!({
                "side": if *left { "left" } else { "right" },
                "s1": s(&w.s1),
                "a1": s(&w.a1),
                "holds": w.holds(&a, &f),
            })
        }
        Cmd::LocalizedEqual { a, m, w, n } => {
            let ctx = env.ctx()?;
            let eq = weyl::localized_equal(&parse_element(a, &ctx)?, *m, &parse_weyl(w, spec)?, *n)?;
            json!({ "equal": eq })
        }
        Cmd::ProductFormula { i, right } => {
            let ctx = env.ctx()?;
            let side = if *right { Side::Right } else { Side::Left };
            result(weyl::product_formula_lhs(*i, side, &ctx))
        }
        Cmd::Center => {
            let ctx = env.ctx()?;
            match center::center(&ctx).generators {
                Some(g) => json!({
                    "generators": [s(&g.xp), s(&g.hp_yp)],
                    "correction": s(&g.correction),
                }),
                None => json!({ "generators": [], "correction": Value::Null }),
            }
        }
        Cmd::IsCentral { a } => {
            let ctx = env.ctx()?;
            json!({ "central": center::is_central(&parse_element(a, &ctx)?) })
        }
        Cmd::DecomposeCentral { a } => {
            let ctx = env.ctx()?;
            let a = parse_element(a, &ctx)?;
            let d = center::central_decompose(&a)?;
            let entries: Vec<Value> = d
                .entries()
                .into_iter()
                .map(|(i, j, s_, t, c)| json!({ "i": i, "j": j, "s": s_, "t": t, "coeff": s(c) }))
                .collect();
            json!({ "entries": entries, "reassembles": d.reassemble(&ctx)? == a })
        }
        Cmd::InCommutator { a, space } => {
            let ctx = env.ctx()?;
            let a = parse_element(a, &ctx)?;
            let space = match space {
                SpaceArg::X => CommutatorSpace::BracketX,
                SpaceArg::Y => CommutatorSpace::BracketYhat,
                SpaceArg::Lie => CommutatorSpace::LieIdeal,
            };
            let member = center::in_commutator_space(&a, space)?;
            let preimage = if member { center::commutator_preimage(&a, space)? } else { None };
            json!({ "member": member, "preimage": preimage.map(s).unwrap_or(Value::Null) })
        }
        Cmd::InCentralizerX { a } => {
            let ctx = env.ctx()?;
            json!({ "member": center::centralizer_x_membership(&parse_element(a, &ctx)?) })
        }
        Cmd::IsNormal { v } => {
            let ctx = env.ctx()?;
            let cert = normal::is_normal(&parse_element(v, &ctx)?)?;
            let mut m = Map::new();
            m.insert("normal".into(), Value::Bool(cert.verdict));
            m.insert("r".into(), cert.r.map(s).unwrap_or(Value::Null));
            if let Some(c) = cert.classification {
                m.insert("factors".into(), factors_json(&c.factors));
                m.insert("z".into(), s(&c.z));
            }
            Value::Object(m)
        }
        Cmd::ClassifyNormal { v } => {
            let ctx = env.ctx()?;
            let c = normal::classify_normal(&parse_element(v, &ctx)?)?;
            json!({ "factors": factors_json(&c.factors), "z": s(&c.z) })
        }
        Cmd::IsSimple => json!({ "simple": normal::is_simple(&env.ctx()?) }),
        Cmd::PrimeTest { v } => {
            let ctx = env.ctx()?;
            let r = normal::height_one_prime_test(&parse_element(v, &ctx)?)?;
            json!({ "kind": s(r.kind), "detail": r.detail })
        }
        Cmd::AutP => json!({ "P": p_json(&aut::compute_p(&env.ctx()?)?) }),
        Cmd::AutG => {
            let g: Vec<Value> = aut::compute_g(&env.ctx()?)?.iter().map(s).collect();
            json!({ "G": g })
        }
        Cmd::AutClassify => {
            let st = aut::classify_aut_group(&env.ctx()?)?;
            let (generator, ell) = match &st.case {
                aut::AutCase::SemidirectFinite { alpha, beta, ell } => (pair_json(alpha, beta), json!(ell)),
                aut::AutCase::SemidirectFstar { lambda } => (json!({ "family_lambda": s(lambda) }), Value::Null),
                _ => (Value::Null, Value::Null),
            };
            let g: Vec<Value> = st.g.iter().map(s).collect();
            json!({
                "case": st.case.name(),
                "P": p_json(&st.p_set),
                "G": g,
                "k": st.k,
                "generator": generator,
                "ell": ell,
                "t": invariant_json(&st.t),
                "q": s(&st.q),
                "n_exponent": st.n_exponent,
            })
        }
        Cmd::AutApply { alpha, beta, f, a } => {
            let ctx = env.ctx()?;
            let w = Automorphism::new(&ctx, env.scalar(alpha)?, env.scalar(beta)?, env.poly(f)?)?;
            result(w.apply(&parse_element(a, &ctx)?)?)
        }
        Cmd::AutCompose { alpha1, beta1, f1, alpha2, beta2, f2 } => {
            let ctx = env.ctx()?;
            let w1 = Automorphism::new(&ctx, env.scalar(alpha1)?, env.scalar(beta1)?, env.poly(f1)?)?;
            let w2 = Automorphism::new(&ctx, env.scalar(alpha2)?, env.scalar(beta2)?, env.poly(f2)?)?;
            automorphism_json(&w1.compose(&w2)?)
        }
        Cmd::Invariants => json!({ "t": invariant_json(&aut::invariant_ring(&env.ctx()?)?) }),
        Cmd::AutCenter => {
            let c = aut::aut_center(&env.ctx()?)?;
            json!({ "q": s(&c.q), "t": invariant_json(&c.t) })
        }
        Cmd::Iso { g } => {
            let ctx = env.ctx()?;
            match aut::iso_test(ctx.h(), &env.poly(g)?)? {
                Some(w) => json!({ "isomorphic": true, "alpha": s(&w.alpha), "beta": s(&w.beta), "nu": s(&w.nu) }),
                None => json!({ "isomorphic": false }),
            }
        }
        Cmd::EndoEta { k, a, bound } => {
            let ctx = env.ctx()?;
            let e = aut::eta_endo(&ctx, *k)?;
            let image = a.as_deref().map(|a| e.apply(&parse_element(a, &ctx)?)).transpose()?;
            endo_json(&e, image, *bound)?
        }
        Cmd::EndoKappa { c, a, bound } => {
            let ctx = env.ctx()?;
            let e = aut::kappa_endo(&ctx, &parse_element(c, &ctx)?)?;
            let image = a.as_deref().map(|a| e.apply(&parse_element(a, &ctx)?)).transpose()?;
            endo_json(&e, image, *bound)?
        }
        Cmd::AutExtend { f, alpha, beta, q } => {
            let ctx = env.ctx()?;
            let w = Automorphism::new(&ctx, env.scalar(alpha)?, env.scalar(beta)?, env.poly(q)?)?;
            match aut::extend_automorphism(&w, &env.ctx_for(f)?)? {
                Some(e) => json!({ "extends": true, "automorphism": automorphism_json(&e) }),
                None => json!({ "extends": false }),
            }
        }
        Cmd::AutRestrict { g, alpha, beta, q } => {
            let ctx = env.ctx()?;
            let w = Automorphism::new(&ctx, env.scalar(alpha)?, env.scalar(beta)?, env.poly(q)?)?;
            match aut::restrict_automorphism(&w, &env.ctx_for(g)?)? {
                Some(r) => json!({ "restricts": true, "automorphism": automorphism_json(&r) }),
                None => json!({ "restricts": false }),
            }
        }
    })
}

fn factors_json(factors: &[(Poly, usize)]) -> Value {
    Value::Array(factors.iter().map(|(u, b)| json!({ "u": s(u), "beta": b })).collect())
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(plain).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render_pretty(v: &Value) -> String {
    match v {
        Value::Object(m) if m.len() == 1 && m.contains_key("result") => plain(&m["result"]),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect::<Vec<_>>().join("\n"),
        other => plain(other),
    }
}

fn error_kind(e: &Error) -> String {
    format!("{e:?}").chars().take_while(|c| c.is_ascii_alphanumeric()).collect()
}

fn failure_output(json_mode: bool, code: i32, kind: &str, message: &str) -> CliOutput {
    if json_mode {
        let body = json!({ "error": { "kind": kind, "message": message } });
        CliOutput { code, stdout: format!("{body}\n"), stderr: String::new() }
    } else {
        CliOutput { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let spec = match cli.field.parse::<FieldSpec>() {
        Ok(spec) => spec,
        Err(e) => return failure_output(cli.json, 2, "Usage", &e.to_string()),
    };
    let env = Env { spec, h: cli.h.clone(), h_factored: cli.h_factored.clone(), seed: cli.seed };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli.command, &env)));
    match outcome {
        Ok(Ok(value)) => {
            let stdout = if cli.json { format!("{value}\n") } else { format!("{}\n", render_pretty(&value)) };
            CliOutput { code: 0, stdout, stderr: String::new() }
        }
        Ok(Err(Failure::Usage(msg))) => failure_output(cli.json, 2, "Usage", &msg),
        Ok(Err(Failure::Domain(e))) => {
            let code = match e {
                Error::Syntax { .. } | Error::MixedGenerators | Error::NegativeExponent { .. } => 2,
                _ => 1,
            };
            failure_output(cli.json, code, &error_kind(&e), &e.to_string())
        }
        Err(_) => failure_output(cli.json, 1, "Internal", "internal invariant violated"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ah(args: &[&str]) -> CliOutput {
        run(std::iter::once("ah").chain(args.iter().copied()))
    }

    #[test]
    fn golden_examples() {
        let out = ah(&["--field", "QQ", "--h", "x^2", "comm", "Y", "x"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "x^2\n"));
        let out = ah(&["--field", "GF:3", "--h", "x^2", "center", "--json"]);
        assert_eq!(out.stdout, "{\"generators\":[\"x^3\",\"Y^3\"],\"correction\":\"0\"}\n");
        let out = ah(&["--field", "QQ", "--h", "x^2*(x-1)", "aut-classify"]);
        assert!(out.stdout.starts_with("case: PolyOnly\n"), "{}", out.stdout);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(ah(&["--h", "x", "from-weyl", "y"]).code, 1);
        assert_eq!(ah(&["--h", "x", "eval", "x +"]).code, 2);
        assert_eq!(ah(&["eval", "x"]).code, 2);
        assert_eq!(ah(&["--field", "GF:4", "roots", "x"]).code, 2);
        assert_eq!(ah(&["no-such-command"]).code, 2);
        let out = ah(&["--json", "--h", "x", "from-weyl", "y"]);
        assert_eq!(out.stdout, "{\"error\":{\"kind\":\"NotInSubalgebra\",\"message\":\"element is not in A_h: coefficient of y^1 is not divisible by h^1\"}}\n");
        assert_eq!(ah(&["--help"]).code, 0);
    }

    #[test]
    fn negative_arguments() {
        let out = ah(&["--h", "x^2 - x", "aut-apply", "-1", "1", "0", "-x*Y"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "(-x + 1)*Y\n");
    }

    #[test]
    fn factored_h() {
        let out = ah(&["--h-factored", "x^2,(x^2+1)^2,3", "prime-test", "x^2+1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with("kind: FactorOfH"));
        let out = ah(&["--h", "x", "--h-factored", "x,2", "is-simple"]);
        assert_eq!(out.code, 1);
        assert!(whole_parenthesized("(x+1)"));
        assert!(!whole_parenthesized("(x+1)*(x+2)"));
    }
}
