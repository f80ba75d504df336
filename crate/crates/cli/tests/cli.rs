use std::process::Command;

use serde_json::Value;

fn pastrev(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pastrev"))
        .args(args)
        .output()
        .expect("run pastrev");
    (
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn text(args: &[&str]) -> String {
    let (out, err, code) = pastrev(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&text(&all)).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    pastrev(args).2
}

#[test]
fn field_examples() {
    assert_eq!(text(&["field", "arith", "1/2", "+", "1/3"]), "5/6");
    assert_eq!(text(&["field", "arith", "1+i", "*", "1-i"]), "2");
    assert_eq!(text(&["field", "conj", "3+2i"]), "3-2i");
    assert_eq!(text(&["field", "conj", "5"]), "5");
    assert_eq!(text(&["field", "inv", "2i"]), "-1/2i");
    assert_eq!(code(&["field", "inv", "0"]), 3);
}

#[test]
fn poly_examples() {
    assert_eq!(text(&["poly", "reverse", "3x^2+2x+1"]), "x^2+2x+3");
    assert_eq!(text(&["poly", "reverse", "2x+3"]), "3x+2");
    assert_eq!(text(&["poly", "cipher", "x^5+1"]), "6");
    assert_eq!(text(&["poly", "flip", "x^2+x"]), "x+1");
    assert_eq!(text(&["poly", "flip", "x^3"]), "1");
    assert_eq!(text(&["poly", "paste", "x+2", "2x+1"]), "x^3+2x^2+2x+1");
    assert_eq!(text(&["poly", "paste", "1", "1", "1"]), "x^2+x+1");
    assert_eq!(text(&["poly", "paste", "x", "1"]), "x^2+1");
    assert_eq!(text(&["poly", "classify", "x-1"]), "antipalindromic");
    assert_eq!(text(&["poly", "classify", "2x^2-5x+2"]), "palindromic");
    assert_eq!(text(&["poly", "divides-at", "x^3+2x^2+2x+1", "-1"]), "true");
    assert_eq!(text(&["poly", "divides-at", "x+1", "1"]), "false");
    assert_eq!(text(&["poly", "reciprocal", "(1+i)x+2"]), "2x+1-i");
    assert_eq!(text(&["poly", "mul", "2x^2-5x+2", "x+1"]), "2x^3-3x^2-3x+2");
    assert_eq!(text(&["poly", "add", "x+1", "x-1"]), "2x");
    assert_eq!(
        text(&["poly", "expand", "--factor", "x-2", "--factor", "2x-1"]),
        "2x^2-5x+2"
    );
    assert_eq!(
        text(&["poly", "expand", "--unit", "-3", "--factor", "x"]),
        "-3x"
    );
    assert_eq!(text(&["poly", "paste", "1+2z", "3+z"]), "2z^3+z^2+z+3");
}

#[test]
fn poly_structured_output() {
    let v = json(&["poly", "divrem", "x^2-1", "x+1"]);
    assert_eq!(v["quotient"]["text"], "x-1");
    assert_eq!(v["remainder"]["coeffs"], serde_json::json!([]));
    let v = json(&["poly", "pair", "--factor", "x-2", "--factor", "2x-1"]);
    assert_eq!(v["symmetry"], "palindromic");
    assert_eq!(v["pairs"], serde_json::json!([["2", "1/2"]]));
    let v = json(&["poly", "reverse-factored", "--factor", "2x-3"]);
    assert_eq!(v["expanded"]["text"], "-3x+2");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["poly", "reverse", "x"]), 3);
    assert_eq!(code(&["poly", "reverse", "x+"]), 2);
    assert_eq!(code(&["poly", "bogus"]), 2);
    assert_eq!(code(&["nat", "--base", "2", "reverse", "12"]), 2);
    assert_eq!(code(&["nat", "--base", "40", "reverse", "1"]), 3);
    assert_eq!(code(&["nat", "games", "nines", "--rows", "11"]), 3);
    assert_eq!(code(&["verify", "--only", "NOPE"]), 3);
    let (_, err, _) = pastrev(&["poly", "reverse", "x+"]);
    assert!(err.starts_with("error: parse error at byte 2"), "{err}");
}

#[test]
fn nat_examples() {
    assert_eq!(text(&["nat", "cipher", "987"]), "3");
    assert_eq!(text(&["nat", "cipher", "0"]), "1");
    assert_eq!(text(&["nat", "reverse", "120"]), "21");
    assert_eq!(text(&["nat", "paste", "12", "34"]), "1234");
    assert_eq!(text(&["nat", "paste", "987654321", "0"]), "9876543210");
    assert_eq!(text(&["nat", "paste", "9", "10"]), "910");
    assert_eq!(text(&["nat", "paste", "1", "1", "1", "1", "1"]), "11111");
    assert_eq!(text(&["nat", "palindrome", "12321"]), "true");
    assert_eq!(text(&["nat", "palindrome", "123"]), "false");
    assert_eq!(text(&["nat", "eleven", "123321"]), "true");
    assert_eq!(text(&["nat", "--base", "2", "reverse", "1101"]), "1011");
    assert_eq!(text(&["nat", "--base", "16", "paste", "ff", "1"]), "ff1");
}

#[test]
fn games_layout() {
    let out = text(&["nat", "games", "nines", "--rows", "10"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[9], "9876543210 x 9 - 2 = 88888888888");
    assert_eq!(lines[0], "         9 x 9 + 7 = 88");
    assert!(lines.iter().all(|l| !l.ends_with(' ')));
    let rows = json(&["nat", "games", "repunits", "--rows", "3"]);
    assert_eq!(rows[2]["lhs"], "111 x 111");
    assert_eq!(rows[2]["rhs"], "12321");
    assert_eq!(rows[2]["equal"], true);
}

#[test]
fn op_examples() {
    assert_eq!(text(&["op", "add", "D+1", "D-1"]), "2*D");
    assert_eq!(text(&["op", "mul", "D", "x"]), "x*D+1");
    assert_eq!(text(&["op", "mul", "D+x", "D+1"]), "D^2+(x+1)*D+x");
    assert_eq!(text(&["op", "mul", "D-2", "D-3"]), "D^2-5*D+6");
    assert_eq!(text(&["op", "reverse", "2*D+3"]), "3*D+2");
    assert_eq!(text(&["op", "reverse", "D^2+1-x^2"]), "(-x^2+1)*D^2+1");
    assert_eq!(text(&["op", "paste", "D+2", "2*D+1"]), "D^3+2*D^2+2*D+1");
    assert_eq!(text(&["op", "paste", "1", "1"]), "D+1");
    assert_eq!(
        text(&["op", "classify", "x*D^3+2*D^2+2*D+x"]),
        "palindromic"
    );
    assert_eq!(text(&["op", "apply", "D^2+1-x^2", "exp(-x^2/2)"]), "0");
    assert_eq!(text(&["op", "apply", "D-2", "x*exp(2x)"]), "exp(2x)");
    assert_eq!(text(&["op", "charpoly", "D^2-5*D+6"]), "λ^2-5λ+6");
    assert_eq!(code(&["op", "charpoly", "x*D+1"]), 3);
}

#[test]
fn op_division_and_kernel() {
    let v = json(&["op", "divide", "x*D^3+2*D^2+2*D+x"]);
    assert_eq!(v["quotient"]["text"], "x*D^2+(-x+2)*D+x");
    assert_eq!(v["remainder"], "0");
    let v = json(&["op", "divide", "D-1", "--c", "1"]);
    assert_eq!(v["quotient"]["text"], "1");
    assert_eq!(v["remainder"], "-2");
    let v = json(&["op", "kernel", "--factor", "x-2"]);
    assert_eq!(v["reversed"]["text"], "-2*D+1");
    assert_eq!(v["exponents"][0]["reversed"], "1/2");
    let v = json(&["op", "kernel", "--factor", "x+1", "--factor", "x+1"]);
    assert_eq!(v["exponents"][0]["exponent"], "-1");
    assert_eq!(v["exponents"][0]["multiplicity"], 2);
    let v = json(&["op", "logderiv", "x*D+(x^2+1)"]);
    assert_eq!(v["product"], "1");
}

#[test]
fn cheb_examples() {
    assert_eq!(text(&["cheb", "t", "2"]), "2w^2-1");
    let v = json(&["cheb", "reduce", "z^2+3z+1"]);
    assert_eq!(v, serde_json::json!({ "n": 1, "coeffs": ["3/2", "1"] }));
    let v = json(&["cheb", "reduce", "2z^4+3z^3+7z^2+3z+2"]);
    assert_eq!(v["coeffs"], serde_json::json!(["7/2", "3", "2"]));
    assert_eq!(text(&["cheb", "expand", "1", "1"]), "z^2+2z+1");
    assert_eq!(text(&["cheb", "expand", "1/2"]), "1");
    let v = json(&["cheb", "eval", "z^2+3z+1", "2"]);
    assert_eq!(v["corrected_matches"], true);
    assert_eq!(v["printed_matches"], false);
    assert_eq!(code(&["cheb", "reduce", "z^2+3z+2"]), 3);
}

#[test]
fn verify_subset() {
    let v = json(&[
        "verify", "--seed", "7", "--only", "N1,P1.4", "--cases", "20",
    ]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);
    let ids: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["P1.4", "N1"]);
    assert_eq!(v["reports"][0]["cases"], 20);
    let list = json(&["verify", "--list"]);
    assert!(list
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p["id"] == "ERR-PDOC1-2" && p["kind"] == "erratum"));
}
