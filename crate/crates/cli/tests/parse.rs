use std::path::Path;
use std::sync::Arc;

use hopfforge::catalog::{b_coideal_spec, b_lambda, BCoideal};
use hopfforge::coideal::Side;
use hopfforge::expr::Word;
use hopfforge::scalar::{int, ratio, Scalar};
use hopfforge_cli::build::{self, SubSource};
use hopfforge_cli::file::{parse, DefinitionFile, GenDecl, ParseError, Relation, SubBlock};
use proptest::prelude::*;

fn shipped() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/b_lambda.hopf");
    std::fs::read_to_string(path).unwrap()
}

fn err(text: &str) -> ParseError {
    parse(text).unwrap_err()
}

const HEAD: &str = "hopf A\ngen X weight 1\ngen Y weight 1\n";

#[test]
fn shipped_file_matches_catalog() {
    let file = parse(&shipped()).unwrap();
    let built = build::from_file(&file).unwrap();
    let reference = b_lambda(&int(1)).unwrap();
    assert_eq!(built.host.algebra().presentation(), reference.algebra().presentation());
    assert_eq!(built.host.data(), reference.data());
    assert!(built.host.axioms().passed());

    let host = Arc::new(reference);
    let names: Vec<&str> = built.subs.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["R_inf", "L_0"]);
    for ((_, source), which) in built.subs.iter().zip([BCoideal::RInfinity, BCoideal::L(int(0))]) {
        let SubSource::Spec(spec, chi) = source else { panic!("file subs are specs") };
        assert_eq!(spec, &b_coideal_spec(&host, &which).unwrap());
        assert!(chi.is_some());
    }
}

#[test]
fn omitted_primitive_terms_are_filled_in() {
    let text = "hopf P\ngen X weight 1\ngen Y weight 1\ngen Z weight 2\nrel [Y,X] = -Y\nrel [Z,X] = -Z + Y\nrel [Z,Y] = 1/2*Y^2\n\
                coprod X = 1@X + X@1\ncoprod Y = 1@Y + Y@1\ncoprod Z = X@Y\n";
    let built = build::from_file(&parse(text).unwrap()).unwrap();
    assert_eq!(built.host.data(), b_lambda(&int(1)).unwrap().data());
}

#[test]
fn empty_input_has_no_header() {
    for text in ["", "# only a comment\n\n"] {
        let e = err(text);
        assert!(e.message.contains("no algebra header"), "{e}");
        assert_eq!(e.column, 1);
    }
    let e = err("gen X weight 1\n");
    assert!(e.message.contains("no algebra header"));
    assert_eq!((e.line, e.column), (1, 1));
}

#[test]
fn tensor_syntax_in_relations() {
    let e = err(&format!("{HEAD}rel [Y,X] = X@Y\n"));
    assert_eq!(e.message, "tensor syntax not allowed in relations");
    assert_eq!((e.line, e.column), (4, 14));
}

#[test]
fn undeclared_and_duplicate_names() {
    let e = err(&format!("{HEAD}rel [Z,X] = Y\n"));
    assert_eq!(e.message, "undeclared generator `Z`");
    assert_eq!((e.line, e.column), (4, 6));

    let e = err(&format!("{HEAD}coprod X = 1@X + X@W\n"));
    assert_eq!(e.message, "undeclared generator `W`");
    assert_eq!((e.line, e.column), (4, 20));

    let e = err(&format!("{HEAD}gen   X weight 2\n"));
    assert_eq!(e.message, "duplicate declaration of generator `X`");
    assert_eq!((e.line, e.column), (4, 7));

    let e = err(&format!("{HEAD}coprod X = 1@X + X@1\ncoprod X = 1@X + X@1\n"));
    assert!(e.message.contains("duplicate coprod"), "{e}");
    assert_eq!(e.line, 5);

    let e = err(&format!("{HEAD}rel [Y,X] = Y\nrel [Y, X] = 0\n"));
    assert!(e.message.contains("duplicate relation"), "{e}");
}

#[test]
fn grammar_violations() {
    let e = err(&format!("{HEAD}rel [X,Y] = Y\n"));
    assert!(e.message.contains("write relations as [Y,X]"), "{e}");
    let e = err(&format!("{HEAD}rel [Y,X] = Y*X\n"));
    assert!(e.message.contains("ordered monomials"), "{e}");
    let e = err(&format!("{HEAD}counit X = 1\n"));
    assert_eq!(e.message, "counit of `X` must be 0");
    assert_eq!((e.line, e.column), (4, 12));
    let e = err(&format!("{HEAD}coprod X = 1@X + X@1\n"));
    assert_eq!(e.message, "no coprod line for `Y`");
    assert_eq!(e.line, 3);
    let e = err(&format!("{HEAD}coprod X = 1@X + X@1\ncoprod Y = 1@Y + Y@1\nantipode X = -X\n"));
    assert!(e.message.contains("antipode given for some generators but not `Y`"), "{e}");
    let e = err(&format!("{HEAD}gen Z weight 0\n"));
    assert!(e.message.contains("positive integer"), "{e}");
    let e = err(&format!("{HEAD}coprod X = 1@X + X@1 +\n"));
    assert_eq!(e.line, 4);
    let e = err(&format!("{HEAD}sub T side middle {{\n}}\n"));
    assert!(e.message.contains("unknown side"), "{e}");
    let e = err(&format!("{HEAD}coprod X = 1@X + X@1\ncoprod Y = 1@Y + Y@1\nsub T side left {{\ngen Y weight 1\nembed Y = Y\n"));
    assert!(e.message.contains("unclosed block"), "{e}");
    let e = err(&format!("{HEAD}embed X = X\n"));
    assert!(e.message.contains("only allowed inside a sub block"), "{e}");
    let e = err(&format!("{HEAD}frobnicate\n"));
    assert_eq!(e.message, "unknown statement `frobnicate`");
}

#[test]
fn error_display_has_position() {
    let e = err(&format!("{HEAD}rel [Y,X] = X@Y\n"));
    assert_eq!(e.to_string(), "line 4, column 14: tensor syntax not allowed in relations");
}

#[test]
fn one_line_sub_blocks() {
    let text = format!(
        "{HEAD}coprod X = 1@X + X@1; coprod Y = 1@Y + Y@1\nsub T side left {{ gen Y weight 1; embed Y = Y; chi Y = 1/2 }}\n"
    );
    let f = parse(&text).unwrap();
    assert_eq!(f.subs.len(), 1);
    assert_eq!(f.subs[0].side, Side::Left);
    assert_eq!(f.subs[0].chi, Some(vec![ratio(1, 2)]));
}

fn names(n: usize) -> Vec<String> {
    ["A", "B", "C", "D"][..n].iter().map(|s| s.to_string()).collect()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn word(n: usize, ordered: bool) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, 1u32..=3), 0..=3).prop_map(move |mut w| {
        if ordered {
            w.sort();
            w.dedup_by_key(|(g, _)| *g);
        }
        w
    })
}

fn poly(n: usize, ordered: bool) -> impl Strategy<Value = Vec<(Scalar, Word)>> {
    prop::collection::vec((scalar(), word(n, ordered)), 1..=3)
}

fn tensor(n: usize) -> impl Strategy<Value = Vec<(Scalar, Vec<Word>)>> {
    prop::collection::vec((scalar(), prop::collection::vec(word(n, false), 2)), 1..=3)
}

fn gens(n: usize) -> impl Strategy<Value = Vec<GenDecl>> {
    prop::collection::vec(1u32..=3, n).prop_map(move |ws| {
        names(n)
            .into_iter()
            .zip(ws)
            .map(|(name, weight)| GenDecl { name, weight })
            .collect()
    })
}

fn relations(n: usize) -> impl Strategy<Value = Vec<Relation>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..a).map(move |b| (a, b))).collect();
    prop::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_flat_map(move |chosen| {
        let k = chosen.len();
        prop::collection::vec(poly(n, true), k).prop_map(move |values| {
            chosen
                .iter()
                .zip(values)
                .map(|(&(a, b), value)| Relation { a, b, value })
                .collect()
        })
    })
}

fn sub_block(host: usize) -> impl Strategy<Value = SubBlock> {
    (1usize..=2)
        .prop_flat_map(move |m| {
            (
                gens(m),
                relations(m),
                prop::collection::vec(poly(host, false), m),
                prop::option::of(prop::collection::vec(scalar(), m)),
                prop::sample::select(vec![Side::Left, Side::Right, Side::Hopf]),
            )
        })
        .prop_map(|(generators, relations, embeds, chi, side)| SubBlock {
            name: "T".into(),
            side,
            generators,
            relations,
            embeds,
            chi,
        })
}

fn definition() -> impl Strategy<Value = DefinitionFile> {
    (1usize..=4).prop_flat_map(|n| {
        (
            gens(n),
            relations(n),
            prop::collection::vec(tensor(n), n),
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n),
            prop::option::of(prop::collection::vec(poly(n, false), n)),
            prop::option::of(sub_block(n)),
        )
            .prop_map(|(generators, relations, coproducts, counits, antipodes, sub)| DefinitionFile {
                name: "R".into(),
                generators,
                relations,
                coproducts,
                counits,
                antipodes,
                subs: sub.into_iter().collect(),
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_round_trips(f in definition()) {
        let text = f.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, f);
    }
}
