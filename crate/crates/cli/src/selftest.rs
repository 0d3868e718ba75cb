//! Exhaustive checks at sizes small enough to finish in a few seconds.

use std::io::Write;

use anyhow::Result;
use rskdyn_core::{
    enumerate_coplactic_class, enumerate_plactic_class, rank, rsk, rsk_inverse, semistandard_tableaux,
    standard_tableaux, validate, Alphabet, Shape, TableauKind,
};

fn round_trip() -> Result<bool> {
    for k in 1..=3 {
        let a = Alphabet::new(k)?;
        for n in 0..=6 {
            for w in a.words(n) {
                let pair = rsk(&w);
                let ok = validate(pair.p().as_tableau(), TableauKind::Semistandard).is_ok()
                    && validate(pair.q().as_tableau(), TableauKind::Standard).is_ok()
                    && rsk_inverse(&pair, a)? == w;
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn rank_is_second_row() -> Result<bool> {
    for n in 0..=12 {
        for w in Alphabet::BINARY.words(n) {
            if rank(&w)? != rsk(&w).shape().row(1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn classes_partition_words() -> Result<bool> {
    for k in 1..=3u32 {
        let a = Alphabet::new(k)?;
        for n in 0..=5 {
            let (mut plactic, mut coplactic) = (0usize, 0usize);
            for shape in Shape::all_of_size(n) {
                for t in semistandard_tableaux(&shape, a) {
                    let class = enumerate_plactic_class(&t, a)?;
                    if class.iter().any(|w| rsk(w).p() != &t) {
                        return Ok(false);
                    }
                    plactic += class.len();
                }
                for t in standard_tableaux(&shape) {
                    let class = enumerate_coplactic_class(&t, a);
                    if class.iter().any(|w| rsk(w).q() != &t) {
                        return Ok(false);
                    }
                    coplactic += class.len();
                }
            }
            let total = (k as usize).pow(n as u32);
            if plactic != total || coplactic != total {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

type Check = fn() -> Result<bool>;

/// Prints one line per check; returns whether all passed.
pub fn run(out: &mut impl Write) -> Result<bool> {
    let checks: [(&str, Check); 3] = [
        ("rsk round trip, k <= 3, n <= 6", round_trip),
        ("rank equals second row, binary n <= 12", rank_is_second_row),
        ("classes partition A^n, k <= 3, n <= 5", classes_partition_words),
    ];
    let mut all = true;
    for (name, check) in checks {
        let ok = check()?;
        all &= ok;
        writeln!(out, "{} {name}", if ok { "ok  " } else { "FAIL" })?;
    }
    Ok(all)
}
