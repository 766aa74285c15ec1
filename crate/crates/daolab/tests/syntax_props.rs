use daolab::session::parse_polynomial;
use daolab::syntax::{self, Arg, Command, Expr, FieldSpec, IdealDecl, Located, ModeSpec, RingDecl, SessionScript, Statement, Value, Verb};
use daolab_core::field::{Field, PrimeField, Rationals};
use daolab_core::monomial::{Monomial, MonomialOrder};
use daolab_core::poly::PolyRing;
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [&str; 4] = ["x", "y", "z", "x1"];

fn loc<T>(node: T) -> Located<T> {
    Located { node, pos: Default::default() }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..200, 1u32..5).prop_map(|(n, d)| Expr::Num(BigInt::from(n), BigInt::from(d))),
        prop::sample::select(VARS.to_vec()).prop_map(|v| Expr::Var(loc(v.to_string()))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

fn name() -> impl Strategy<Value = String> {
    "[A-Z][a-z0-9_]{0,3}"
}

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        "[a-z][a-z_]{0,6}".prop_map(Value::Word),
        (0u64..1000).prop_map(Value::Int),
        (0u64..9, 0u64..9).prop_map(|(a, b)| Value::Range(a.min(b), a.max(b))),
    ]
}

fn statement() -> impl Strategy<Value = Statement> {
    let field = prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(32003)), Just(FieldSpec::Prime(7))];
    let mode = prop::option::of(prop_oneof![Just(ModeSpec::Graded), Just(ModeSpec::Local)]);
    let ring = (name(), field, prop::collection::vec(expr(), 0..3), mode).prop_map(|(name, field, relations, mode)| {
        Statement::Ring(RingDecl { name, field, vars: VARS.iter().map(|s| s.to_string()).collect(), relations, mode })
    });
    let ideal = (name(), prop::collection::vec(expr(), 1..4), prop::option::of(1u32..5))
        .prop_map(|(name, gens, power)| Statement::Ideal(IdealDecl { name, gens, power }));
    let verb = prop_oneof![Just(Verb::Compute), Just(Verb::Verify), Just(Verb::Explore), Just(Verb::Resolve)];
    let arg = prop_oneof![
        prop_oneof!["[a-z][a-z_]{0,6}", name()].prop_map(|w| Arg::Word(loc(w))),
        ("[a-z][a-z_]{0,6}", value()).prop_map(|(k, v)| Arg::Pair(loc(k), v)),
    ];
    let command = (verb, prop::collection::vec(arg, 0..4)).prop_map(|(verb, args)| Statement::Command(Command { verb, args }));
    prop_oneof![ring, ideal, command]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_expressions_reparse_to_a_fixed_point(e in expr()) {
        let once = syntax::parse_expr(&syntax::print_expr(&e)).unwrap();
        let text = syntax::print_expr(&once);
        let twice = syntax::parse_expr(&text).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(text, syntax::print_expr(&twice));
    }

    // printing may reassociate, but never changes the value
    #[test]
    fn printing_preserves_the_polynomial(e in expr()) {
        let p = PolyRing::new(Rationals, VARS.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex);
        let direct = parse_polynomial(&p, &syntax::print_expr(&e)).unwrap();
        let again = parse_polynomial(&p, &syntax::print_expr(&syntax::parse_expr(&syntax::print_expr(&e)).unwrap())).unwrap();
        prop_assert_eq!(direct, again);
    }

    #[test]
    fn sessions_reparse_to_a_fixed_point(sts in prop::collection::vec(statement(), 0..6)) {
        let script = SessionScript { statements: sts.into_iter().map(loc).collect() };
        let text = syntax::print_session(&script);
        let once = syntax::parse_session(&text).unwrap();
        let again = syntax::print_session(&once);
        let twice = syntax::parse_session(&again).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(again, syntax::print_session(&twice));
    }

    #[test]
    fn displayed_polynomials_parse_back(terms in prop::collection::vec((prop::collection::vec(0u16..4, 3), -50i64..50, 1i64..6), 0..6)) {
        let q = PolyRing::new(Rationals, vec!["x".into(), "y".into(), "z".into()], MonomialOrder::DegRevLex);
        let f = q.from_terms(terms.iter().map(|(e, n, d)| {
            (Monomial::from_exponents(e), q.field().from_ratio(&BigInt::from(*n), &BigInt::from(*d)).unwrap())
        }).collect());
        prop_assert_eq!(parse_polynomial(&q, &q.display(&f)).unwrap(), f);

        let fp = PrimeField::new(32003).unwrap();
        let p = PolyRing::new(fp.clone(), vec!["x".into(), "y".into(), "z".into()], MonomialOrder::Lex);
        let g = p.from_terms(terms.iter().map(|(e, n, _)| (Monomial::from_exponents(e), fp.from_i64(*n))).collect());
        prop_assert_eq!(parse_polynomial(&p, &p.display(&g)).unwrap(), g);
    }
}

#[test]
fn unknown_variables_are_diagnosed() {
    let p = PolyRing::new(Rationals, vec!["x".into()], MonomialOrder::DegRevLex);
    let err = parse_polynomial(&p, "x + 2*w").unwrap_err();
    assert_eq!((err.pos.line, err.pos.col), (1, 7));
    assert!(err.message.contains("unknown variable `w`"));
}
