//! Acceptance suite: one PASS/FAIL line per criterion, run in order.
//! Exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use gauss_meander::braid::{inversion_set, permutation_from_inversions, Permutation};
use gauss_meander::gauss::{canonical_word, enumerate_codes, GaussCode};
use gauss_meander::meander::{
    apply_prefix, encode_meander, enumerate_meander_matrices, is_meander_matrix,
    oracle_enumerate_meanders, reconstruct_meander, Cell,
};
use gauss_meander::realize::{
    audit, even_condition, matrix_conditions, oracle_realizable, oracle_realizable_with,
};
use gauss_meander::{BitMatrix, ChordDiagram, Limits};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_inversion_set() -> Outcome {
    let pi = Permutation::new(vec![4, 2, 6, 1, 5, 3]).map_err(|e| e.to_string())?;
    let printed = [
        (1, 2),
        (1, 4),
        (1, 6),
        (2, 4),
        (3, 4),
        (3, 5),
        (3, 6),
        (5, 6),
    ];
    let r = inversion_set(&pi);
    let got: Vec<(usize, usize)> = r.pairs().collect();
    ensure(got == printed, || format!("R = {got:?}"))?;
    let back = permutation_from_inversions(&r).map_err(|e| e.to_string())?;
    ensure(back == pi, || format!("recovered {back}"))?;
    Ok(format!("R{pi} has the 8 printed pairs and inverts back"))
}

fn six_crossing_meander() -> BitMatrix {
    BitMatrix::from_rows(&[
        [0, 1, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 0, 1, 1],
        [1, 0, 0, 1, 1, 0, 1],
        [1, 1, 1, 1, 1, 1, 0],
    ])
    .expect("7×7 0/1 matrix")
}

fn c2_meander_matrix() -> Outcome {
    let m = six_crossing_meander();
    let check = is_meander_matrix(&m).map_err(|e| e.to_string())?;
    ensure(check.holds(), || {
        format!("definition form fails: {:?}", check.definition)
    })?;
    ensure(check.characterization_holds(), || {
        format!("product form fails: {:?}", check.characterization)
    })?;
    let rec = reconstruct_meander(&m).map_err(|e| e.to_string())?;
    ensure(rec.visitation().starts_with(&[3, 4]), || {
        format!("starts {:?}", rec.visitation())
    })?;
    ensure(rec.visitation() == [3, 4, 5, 2, 1, 6], || {
        format!("visitation {:?}", rec.visitation())
    })?;
    ensure(encode_meander(&rec) == m, || {
        "re-encoding differs".to_string()
    })?;
    Ok("both forms accept; visitation 3 4 5 2 1 6; re-encodes bit-for-bit".to_string())
}

/// The two completed 9×9 tableaux, with `a` the shared value of (6,7), (6,8), (7,8).
fn eight_crossing_completion(a: i64) -> BitMatrix {
    BitMatrix::from_rows(&[
        [0, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 1, 0, 1, 1, 1],
        [1, 0, 1, 0, 1, 0, 1, 1, 1],
        [1, 0, 1, 1, 0, 0, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0, a, a],
        [1, 1, 1, 1, 1, 1, a, 0, a],
        [1, 1, 1, 1, 1, 1, a, a, 0],
    ])
    .expect("9×9 0/1 matrix")
}

fn c3_delta_fill_trace() -> Outcome {
    let err = |e: gauss_meander::MeanderError| e.to_string();
    let after5 = apply_prefix(8, &[5])
        .map_err(err)?
        .ok_or("prefix (5) infeasible")?;
    let cells = [after5.cell(6, 7), after5.cell(6, 8), after5.cell(7, 8)];
    let a = Cell::Expr {
        constant: false,
        unknowns: vec!["a".to_string()],
    };
    ensure(cells.iter().all(|c| *c == a), || {
        format!("(6,7),(6,8),(7,8) = {cells:?}")
    })?;
    ensure(after5.choose(8).is_none(), || {
        "8 after (5) accepted".to_string()
    })?;
    let after52 = apply_prefix(8, &[5, 2])
        .map_err(err)?
        .ok_or("prefix (5,2) infeasible")?;
    ensure(
        after52
            .delta_fill(7)
            .map(|p| !p.propagate().is_feasible())
            .unwrap_or(false),
        || "7 after (5,2) not rejected as infeasible".to_string(),
    )?;
    let done: Vec<Vec<Vec<u8>>> = enumerate_meander_matrices(8, &[5, 2, 3])
        .map_err(err)?
        .map(|e| e.matrix.to_rows())
        .collect();
    let expected: BTreeSet<Vec<Vec<u8>>> = [
        eight_crossing_completion(0).to_rows(),
        eight_crossing_completion(1).to_rows(),
    ]
    .into();
    ensure(
        done.len() == 2 && done.iter().cloned().collect::<BTreeSet<_>>() == expected,
        || format!("{} completions differ from a = 0, 1", done.len()),
    )?;
    Ok("(6,7) = (6,8) = (7,8) = a; 8 after (5) and 7 after (5,2) rejected; two completions a = 0, 1".to_string())
}

fn c4_oracle_truths() -> Outcome {
    let code = |s: &str| GaussCode::parse(s).map_err(|e| e.to_string());
    for (s, genus) in [("aa", 0), ("abcabc", 0), ("abab", 1)] {
        let v = oracle_realizable(&code(s)?).map_err(|e| e.to_string())?;
        ensure(v.genus == genus && v.realizable == (genus == 0), || {
            format!("{s}: {v:?}")
        })?;
    }
    for (s, passes) in [("abab", false), ("abacbc", false), ("abcabc", true)] {
        let d = ChordDiagram::new(code(s)?).map_err(|e| e.to_string())?;
        ensure(even_condition(&d).is_realizable() == passes, || {
            format!("even condition on {s}")
        })?;
    }
    Ok(
        "genus aa = 0, abcabc = 0, abab = 1; even condition fails abab, abacbc and passes abcabc"
            .to_string(),
    )
}

fn c5_differential_audit() -> Outcome {
    let summary = audit(2, 6, &Limits::default()).map_err(|e| e.to_string())?;
    if let Some(rec) = summary.minimal_counterexample() {
        return Err(format!(
            "{} disagreements; minimal counterexample {} (thm34 {}, oracle {})",
            summary.disagreements.len(),
            rec.code,
            rec.thm34,
            rec.oracle
        ));
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gauss_meander::cli::run(
        ["gmk", "--json", "audit", "--min-n", "2", "--max-n", "6"],
        &mut out,
        &mut err,
    );
    ensure(code == 0 && out.is_empty(), || {
        format!("audit command exit {code}, {} bytes", out.len())
    })?;
    Ok(format!(
        "{} codes, zero disagreements, empty audit stream",
        summary.total_checked()
    ))
}

fn c6_necessity() -> Outcome {
    let mut checked = 0;
    let mut witness = None;
    for n in 2..=6 {
        for canon in enumerate_codes(n, true).map_err(|e| e.to_string())? {
            let d = ChordDiagram::new(canon.into_code()).map_err(|e| e.to_string())?;
            let realizable = oracle_realizable(d.code())
                .map_err(|e| e.to_string())?
                .realizable;
            let conditions =
                matrix_conditions(&d.interlacement_matrix()).map_err(|e| e.to_string())?;
            if realizable {
                ensure(even_condition(&d).is_realizable(), || {
                    format!("{} fails the even condition", d.code())
                })?;
                ensure(conditions.holds(), || {
                    format!("{} fails {:?}", d.code(), conditions.violations)
                })?;
            } else if conditions.holds() && witness.is_none() {
                witness = Some(d.code().to_string());
            }
            checked += 1;
        }
    }
    match witness {
        Some(w) => Ok(format!("necessity holds on {checked} codes; {w} passes all three conditions but is not planar")),
        None => Err(format!(
            "necessity holds on {checked} codes, but no non-planar code with n ≤ 6 passes all three matrix conditions"
        )),
    }
}

fn c7_enumerator_vs_oracle() -> Outcome {
    let mut counts = Vec::new();
    for n in [2, 4, 6, 8] {
        let emitted: BTreeSet<Vec<Vec<u8>>> = enumerate_meander_matrices(n, &[])
            .map_err(|e| e.to_string())?
            .map(|e| e.matrix.to_rows())
            .collect();
        let oracle: BTreeSet<Vec<Vec<u8>>> = oracle_enumerate_meanders(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|r| encode_meander(r).to_rows())
            .collect();
        ensure(emitted == oracle, || {
            format!(
                "N = {n}: {} emitted vs {} from the oracle",
                emitted.len(),
                oracle.len()
            )
        })?;
        counts.push(format!("N={n}: {}", emitted.len()));
    }
    ensure(counts[0] == "N=2: 1", || counts[0].clone())?;
    Ok(format!("identical sets ({})", counts.join(", ")))
}

fn c8_round_trip() -> Outcome {
    let mut total = 0;
    for n in [2, 4, 6, 8, 10] {
        for e in enumerate_meander_matrices(n, &[]).map_err(|e| e.to_string())? {
            let rec = reconstruct_meander(&e.matrix)
                .map_err(|err| format!("{:?}: {err}", e.visitation))?;
            ensure(encode_meander(&rec) == e.matrix, || {
                format!("{:?} does not re-encode", e.visitation)
            })?;
            let w = rec.visitation();
            ensure(
                w[0] % 2 == 1 && w.windows(2).all(|p| p[0] % 2 != p[1] % 2),
                || format!("parity of {w:?}"),
            )?;
            ensure(
                common::noncrossing(&rec.upper()) && common::noncrossing(&rec.lower()),
                || format!("{w:?} has crossing arcs"),
            )?;
            rec.verify(0).map_err(|err| format!("{w:?}: {err}"))?;
            let genus = oracle_realizable_with(&rec.gauss_code(), n + 1)
                .map_err(|e| e.to_string())?
                .genus;
            ensure(genus == 0, || format!("{w:?} has genus {genus}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} matrices for N ≤ 10, zero violations"))
}

fn c9_smoothing() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        for w in common::all_words(n) {
            let d = ChordDiagram::new(GaussCode::from_indices(&w).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            for c in 0..n {
                let rewritten = d.smooth_index(c).map_err(|e| e.to_string())?;
                let toggled = d.smoothed_interlacement(c).map_err(|e| e.to_string())?;
                ensure(
                    rewritten.interlacement_for_labels(&d.labels_without(c)) == Some(toggled),
                    || format!("{} / {}", d.code(), d.label(c)),
                )?;
                let reference = common::brute_canonical(&common::smooth_word(&w, c));
                ensure(canonical_word(rewritten.code().word()) == reference, || {
                    format!("canonical form of {} / {}", d.code(), d.label(c))
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (code, chord) pairs agree"))
}

fn main() {
    let criteria: [(u8, &str, Duration, fn() -> Outcome); 9] = [
        (
            1,
            "inversion set",
            Duration::from_millis(1),
            c1_inversion_set,
        ),
        (
            2,
            "meander matrix",
            Duration::from_secs(1),
            c2_meander_matrix,
        ),
        (
            3,
            "delta-fill trace",
            Duration::from_secs(1),
            c3_delta_fill_trace,
        ),
        (
            4,
            "oracle ground truths",
            Duration::from_secs(1),
            c4_oracle_truths,
        ),
        (
            5,
            "differential audit",
            Duration::from_secs(300),
            c5_differential_audit,
        ),
        (
            6,
            "necessity suites",
            Duration::from_secs(300),
            c6_necessity,
        ),
        (
            7,
            "enumerator vs oracle",
            Duration::from_secs(600),
            c7_enumerator_vs_oracle,
        ),
        (
            8,
            "round trip and invariants",
            Duration::from_secs(600),
            c8_round_trip,
        ),
        (
            9,
            "smoothing equivalence",
            Duration::from_secs(60),
            c9_smoothing,
        ),
    ];
    let mut failed = 0;
    let mut stdout = std::io::stdout().lock();
    for (number, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!(
                "{detail}, but took {elapsed:?} (budget {budget:?})"
            )),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        failed += usize::from(outcome.is_err());
        let _ = writeln!(
            stdout,
            "{tag} criterion {number} ({name}, {elapsed:.2?}): {detail}"
        );
    }
    let _ = stdout.flush();
    if failed > 0 {
        let _ = writeln!(stdout, "{failed} of 9 criteria failed");
        std::process::exit(1);
    }
}
