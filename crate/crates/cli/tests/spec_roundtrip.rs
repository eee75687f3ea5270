use proptest::prelude::*;
use qloop_cli::spec::{parse_spec, Factor, FactorKind, Grid, Modifier, Param, SpecFile};
use qloop_core::field::{FactoredRatZ, QRat};
use qloop_core::superlinalg::Superdim;

fn arb_value() -> impl Strategy<Value = QRat> {
    (-3i64..=3, -3i32..=3, prop::option::of(1i64..=2)).prop_map(|(c, k, d)| {
        let v = QRat::monomial(c, k);
        match d {
            Some(d) => v.checked_div(&QRat::one().add(&QRat::monomial(d, 1))).unwrap(),
            None => v,
        }
    })
}

fn arb_param() -> impl Strategy<Value = Param> {
    prop_oneof![
        arb_value().prop_map(Param::Value),
        prop::sample::select(vec!["x", "a2", "b_1"]).prop_map(|s| Param::Var(s.to_string())),
    ]
}

fn arb_series() -> impl Strategy<Value = FactoredRatZ> {
    (prop::collection::vec(-3i32..=3, 0..3), prop::collection::vec(-3i32..=3, 0..3)).prop_map(|(z, p)| {
        let zs: Vec<QRat> = z.into_iter().map(QRat::q_pow).collect();
        let ps: Vec<QRat> = p.into_iter().map(QRat::q_pow).collect();
        FactoredRatZ::new(QRat::one(), &zs, &ps).unwrap()
    })
}

fn arb_kind(gl11: bool) -> BoxedStrategy<FactorKind> {
    let common = prop_oneof![
        arb_param().prop_map(|a| FactorKind::Natural { a }),
        arb_param().prop_map(|a| FactorKind::Kr { r: 1, a }),
    ];
    if !gl11 {
        return common.boxed();
    }
    prop_oneof![
        common,
        (arb_value(), arb_value())
            .prop_filter("a != b", |(a, b)| a != b)
            .prop_map(|(a, b)| FactorKind::Gl11Prime { a: Param::Value(a), b: Param::Value(b) }),
        any::<bool>().prop_map(|odd| FactorKind::Parity { odd }),
        (arb_param(), arb_param()).prop_map(|(a, b)| FactorKind::Torus { a, b }),
        arb_series().prop_map(|f| FactorKind::Series { f }),
    ]
    .boxed()
}

fn arb_modifier() -> impl Strategy<Value = Modifier> {
    prop_oneof![
        Just(Modifier::Dual),
        Just(Modifier::Flip),
        (arb_series(), arb_series()).prop_map(|(f, g)| Modifier::Twist { f, g }),
    ]
}

fn arb_spec() -> impl Strategy<Value = SpecFile> {
    prop::sample::select(vec![(1usize, 1usize), (2, 1), (1, 2), (2, 2)]).prop_flat_map(|(m, n)| {
        let factor = (arb_kind(m == 1 && n == 1), prop::collection::vec(arb_modifier(), 0..3))
            .prop_map(|(kind, modifiers)| Factor { kind, modifiers, line: 0 });
        let grid = prop::collection::vec(arb_value(), 1..4);
        (prop::collection::vec(factor, 1..4), prop::option::of(grid)).prop_map(move |(factors, g)| SpecFile {
            sd: Superdim::new(m, n),
            factors,
            grids: g.map(|values| vec![Grid { var: "x".into(), values }]).unwrap_or_default(),
        })
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(s in arb_spec()) {
        let text = s.to_string();
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn garbage_lines_report_their_position(s in arb_spec(), junk in "[a-z]{3,8}") {
        prop_assume!(!["algebra", "factor", "modifier", "grid"].contains(&junk.as_str()));
        let text = format!("{s}{junk} 1\n");
        let e = parse_spec(&text).unwrap_err();
        prop_assert_eq!(e.line, text.lines().count());
        prop_assert_eq!(e.col, 1);
    }
}
