//! Command dispatch for the `symq` binary.
//!
//! The dispatcher is a plain function from argument list to
//! `(exit code, output text)`, so the whole command surface is testable
//! without spawning processes.  Exit codes are part of the interface:
//!
//! * `0` — success: psd / not_sos / identity true / output produced
//! * `1` — negative finding: not_psd / inconclusive / identity false
//! * `2` — usage error or precondition failure
//!
//! All numeric output is exact `num/den` text; nothing is ever rounded.

use std::collections::HashMap;

use crate::chart::render_chart;
use crate::error::Error;
use crate::forms::{lift, FormId};
use crate::poly::{format_rational, Point, Polynomial};
use crate::psd::check_psd;
use crate::sos::{
    certify_not_sos_with_seed, enumerate_zero_points, parse_summands, verify_sos_identity,
    SosIdentity, DEFAULT_REPLAY_SEED,
};

/// Success (psd, not_sos, identity true, or plain output).
pub const EXIT_OK: i32 = 0;
/// Negative finding (not_psd, inconclusive, identity false).
pub const EXIT_NEGATIVE: i32 = 1;
/// Usage error or precondition failure.
pub const EXIT_USAGE: i32 = 2;

const USAGE: &str = "\
symq: exact certificates for symmetric quartic forms

usage:
  symq form <form-id>                print a named form
  symq eval <poly-file> <point>      evaluate at a comma-separated rational point
  symq psd <poly-file>               decide nonnegativity of a symmetric quartic
  symq notsos <poly-file> [--weights w1,w2,...] [--seed k]
                                     zero-forcing proof that a quartic is not
                                     a sum of squares (weights default to
                                     {floor(n/2), floor(n/2)+1})
  symq verify-sos <target-file> <summands-file>
                                     check an exact identity target = sum (g*h)^2;
                                     the summands file concatenates the factor
                                     polynomials g1, h1, g2, h2, ...
  symq chart <max-n> <max-2d> [--unicode]
                                     print the psd-vs-sos classification chart
  symq lift <poly-file> <i>          multiply by (x1+...+xn)^(2i)
  symq help                          show this text

form ids: L:<n> (n >= 4), C:<2m> (even >= 4), cl44, robinson, lax5,
          lift:<form-id>:<i>

exit status: 0 = psd / not_sos / identity true / success
             1 = not_psd / inconclusive / identity false
             2 = usage or precondition error
";

/// Runs one command; returns the exit code and the full output text.
pub fn dispatch(args: &[String]) -> (i32, String) {
    match run(args) {
        Ok((code, out)) => (code, out),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn run(args: &[String]) -> Result<(i32, String), Error> {
    let Some(command) = args.first() else {
        return Ok((EXIT_USAGE, USAGE.to_string()));
    };
    let rest = &args[1..];
    match command.as_str() {
        "help" | "--help" | "-h" => Ok((EXIT_OK, USAGE.to_string())),
        "form" => cmd_form(rest),
        "eval" => cmd_eval(rest),
        "psd" => cmd_psd(rest),
        "notsos" => cmd_notsos(rest),
        "verify-sos" => cmd_verify_sos(rest),
        "chart" => cmd_chart(rest),
        "lift" => cmd_lift(rest),
        other => Err(Error::Parse(format!(
            "unknown command '{other}' (try 'symq help')"
        ))),
    }
}

/// Splits arguments into positionals and `--flag value` options
/// (`--unicode` is a bare flag).
fn split_flags<'a>(
    args: &'a [String],
    value_flags: &[&str],
    bare_flags: &[&str],
) -> Result<(Vec<&'a str>, HashMap<String, &'a str>), Error> {
    let mut positional = Vec::new();
    let mut flags = HashMap::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if bare_flags.contains(&name) {
                flags.insert(name.to_string(), "");
            } else if value_flags.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| Error::Parse(format!("--{name} needs a value")))?;
                flags.insert(name.to_string(), value.as_str());
            } else {
                return Err(Error::Parse(format!("unknown flag --{name}")));
            }
        } else {
            positional.push(arg.as_str());
        }
    }
    Ok((positional, flags))
}

fn read_poly(path: &str) -> Result<Polynomial, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    Polynomial::parse(&text)
}

fn cmd_form(args: &[String]) -> Result<(i32, String), Error> {
    let [id] = args else {
        return Err(Error::Parse("usage: symq form <form-id>".into()));
    };
    let f = FormId::parse(id)?.construct()?;
    Ok((EXIT_OK, f.to_canonical_string()))
}

fn cmd_eval(args: &[String]) -> Result<(i32, String), Error> {
    let [file, point] = args else {
        return Err(Error::Parse("usage: symq eval <poly-file> <point>".into()));
    };
    let f = read_poly(file)?;
    let p = Point::parse(point)?;
    let v = f.eval(&p)?;
    Ok((EXIT_OK, format!("{}\n", format_rational(&v))))
}

fn cmd_psd(args: &[String]) -> Result<(i32, String), Error> {
    let [file] = args else {
        return Err(Error::Parse("usage: symq psd <poly-file>".into()));
    };
    let f = read_poly(file)?;
    let cert = check_psd(&f)?;
    let code = if cert.is_psd() { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((code, cert.to_text()))
}

fn cmd_notsos(args: &[String]) -> Result<(i32, String), Error> {
    let (positional, flags) = split_flags(args, &["weights", "seed"], &[])?;
    let [file] = positional.as_slice() else {
        return Err(Error::Parse(
            "usage: symq notsos <poly-file> [--weights w1,w2,...] [--seed k]".into(),
        ));
    };
    let f = read_poly(file)?;
    let n = f.var_count();
    let weights: Vec<usize> = match flags.get("weights") {
        Some(list) => list
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad weight '{w}'")))
            })
            .collect::<Result<_, _>>()?,
        None => {
            let m = n / 2;
            vec![m, m + 1]
        }
    };
    let seed: u64 = match flags.get("seed") {
        Some(s) => s
            .parse()
            .map_err(|_| Error::Parse(format!("bad seed '{s}'")))?,
        None => DEFAULT_REPLAY_SEED,
    };
    let z = enumerate_zero_points(n, &weights)?;
    let cert = certify_not_sos_with_seed(&f, &z, seed)?;
    let code = if cert.is_not_sos() { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((code, cert.to_text()))
}

fn cmd_verify_sos(args: &[String]) -> Result<(i32, String), Error> {
    let [target_file, summands_file] = args else {
        return Err(Error::Parse(
            "usage: symq verify-sos <target-file> <summands-file>".into(),
        ));
    };
    let target = read_poly(target_file)?;
    let text = std::fs::read_to_string(summands_file)
        .map_err(|e| Error::Io(format!("{summands_file}: {e}")))?;
    let summands = parse_summands(&text)?;
    let ok = verify_sos_identity(&SosIdentity { target, summands });
    let code = if ok { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((code, format!("identity: {ok}\n")))
}

fn cmd_chart(args: &[String]) -> Result<(i32, String), Error> {
    let (positional, flags) = split_flags(args, &[], &["unicode"])?;
    let [max_n, max_2d] = positional.as_slice() else {
        return Err(Error::Parse(
            "usage: symq chart <max-n> <max-2d> [--unicode]".into(),
        ));
    };
    let max_n: usize = max_n
        .parse()
        .map_err(|_| Error::Parse(format!("bad max-n '{max_n}'")))?;
    let max_2d: usize = max_2d
        .parse()
        .map_err(|_| Error::Parse(format!("bad max-2d '{max_2d}'")))?;
    let table = render_chart(max_n, max_2d, flags.contains_key("unicode"))?;
    Ok((EXIT_OK, table))
}

fn cmd_lift(args: &[String]) -> Result<(i32, String), Error> {
    let [file, exponent] = args else {
        return Err(Error::Parse("usage: symq lift <poly-file> <i>".into()));
    };
    let f = read_poly(file)?;
    let i: u32 = exponent
        .parse()
        .map_err(|_| Error::Parse(format!("bad lift exponent '{exponent}'")))?;
    let lifted = lift(&f, i)?;
    Ok((EXIT_OK, lifted.to_canonical_string()))
}
