//! Canonical text form of a parsed system. Re-parsing the output yields
//! the same declarations (positions aside).

use std::fmt::Write;

use super::{Arg, DeclKind, NameSet, RawSystem, Surface};

// Binding strength, loosest to tightest. A quantifier is weaker than
// everything, so it is parenthesized wherever it is an operand.
const PREC_QUANT: u8 = 0;
const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_NOT: u8 = 5;
const PREC_ATOM: u8 = 6;

fn precedence(f: &Surface) -> u8 {
    match f {
        Surface::ForAll { .. } | Surface::Exists { .. } => PREC_QUANT,
        Surface::Iff(..) => PREC_IFF,
        Surface::Implies(..) => PREC_IMPLIES,
        Surface::Or(..) => PREC_OR,
        Surface::And(..) => PREC_AND,
        Surface::Not(..) => PREC_NOT,
        _ => PREC_ATOM,
    }
}

pub fn format_system(raw: &RawSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "system {}", raw.name);
    for decl in &raw.decls {
        match &decl.kind {
            DeclKind::External { name, value } => {
                let word = if value.as_bool() { "true" } else { "false" };
                let _ = writeln!(out, "external {name} = {word}");
            }
            DeclKind::Sentence { name, body } => {
                let _ = writeln!(out, "sentence {name} := {}", format_formula(body));
            }
            DeclKind::Expect(e) => {
                let _ = write!(out, "expect {}", e.name);
                if let Some(v) = e.mfp {
                    let _ = write!(out, " mfp={v}");
                }
                if let Some(v) = e.lifp {
                    let _ = write!(out, " lifp={v}");
                }
                if let Some(v) = e.final_value {
                    let _ = write!(out, " final={v}");
                }
                out.push('\n');
            }
        }
    }
    out
}

/// Minimal-parentheses rendering of a surface formula.
pub fn format_formula(f: &Surface) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, PREC_QUANT);
    out
}

fn write_formula(out: &mut String, f: &Surface, min_prec: u8) {
    let prec = precedence(f);
    let wrap = prec < min_prec;
    if wrap {
        out.push('(');
    }
    match f {
        Surface::True => out.push_str("true"),
        Surface::False => out.push_str("false"),
        Surface::Ident(name) => out.push_str(name),
        Surface::Truth(arg) => write_pred(out, 'T', arg),
        Surface::Falsity(arg) => write_pred(out, 'F', arg),
        Surface::Undetermined(arg) => write_pred(out, 'U', arg),
        Surface::Not(inner) => {
            out.push_str("not ");
            write_formula(out, inner, PREC_NOT);
        }
        Surface::And(a, b) => {
            write_formula(out, a, PREC_AND);
            out.push_str(" and ");
            write_formula(out, b, PREC_AND + 1);
        }
        Surface::Or(a, b) => {
            write_formula(out, a, PREC_OR);
            out.push_str(" or ");
            write_formula(out, b, PREC_OR + 1);
        }
        Surface::Implies(a, b) => {
            write_formula(out, a, PREC_IMPLIES + 1);
            out.push_str(" implies ");
            write_formula(out, b, PREC_IMPLIES);
        }
        Surface::Iff(a, b) => {
            write_formula(out, a, PREC_IFF);
            out.push_str(" iff ");
            write_formula(out, b, PREC_IFF + 1);
        }
        Surface::ForAll { var, set, body } => {
            out.push_str("forall ");
            out.push_str(var);
            out.push_str(" in ");
            write_nameset(out, set);
            out.push_str(": ");
            write_formula(out, body, PREC_QUANT);
        }
        Surface::Exists { var, set, body } => {
            out.push_str("exists ");
            out.push_str(var);
            out.push_str(" in ");
            write_nameset(out, set);
            out.push_str(": ");
            write_formula(out, body, PREC_QUANT);
        }
        Surface::AtMost { count, set } => {
            let _ = write!(out, "atmost {count} of ");
            write_nameset(out, set);
        }
        Surface::AtLeast { count, set } => {
            let _ = write!(out, "atleast {count} of ");
            write_nameset(out, set);
        }
    }
    if wrap {
        out.push(')');
    }
}

fn write_pred(out: &mut String, head: char, arg: &Arg) {
    out.push(head);
    out.push('(');
    match arg {
        Arg::Name(name) => out.push_str(name),
        Arg::Quote(inner) => {
            out.push('<');
            write_formula(out, inner, PREC_QUANT);
            out.push('>');
        }
    }
    out.push(')');
}

fn write_nameset(out: &mut String, set: &NameSet) {
    match set {
        NameSet::All => out.push_str("all"),
        NameSet::Explicit(names) => {
            out.push('{');
            for (i, n) in names.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(n);
            }
            out.push('}');
        }
    }
}
