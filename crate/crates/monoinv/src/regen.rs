//! Regenerates the corpus data files from the built-in constructors.

use monoinv_core::corpus::{builtin_corpus, CorpusEntry, Expected};
use monoinv_core::gin::{variety_invariants, GinConfig, ESCALATED_VOTES};
use monoinv_core::groebner::monomials_of_degree;
use monoinv_core::{linalg, Elem, Error, Ideal, PrimeField, Result};

use crate::corpus_file::CorpusFile;

/// `dim (S/I)_d` for `d <= dmax` from ranks of the spans of `m * g` over
/// generators `g` and monomials `m`, without Gröbner bases.
pub fn hilbert_by_rank(ideal: &Ideal, dmax: u32) -> Vec<u64> {
    let ring = ideal.ring();
    let n = ring.nvars();
    (0..=dmax)
        .map(|d| {
            let basis = monomials_of_degree(n, d);
            let mut rows: Vec<Vec<Elem>> = Vec::new();
            for g in ideal.generators() {
                let Some(e) = g.degree().filter(|&e| e <= d) else { continue };
                for m in monomials_of_degree(n, d - e) {
                    let mut row = vec![Elem::ZERO; basis.len()];
                    for t in g.terms() {
                        let mono = t.mono.mul(&m).expect("same ring");
                        let col = basis.iter().position(|b| *b == mono).expect("degree d monomial");
                        row[col] = t.coeff;
                    }
                    rows.push(row);
                }
            }
            (basis.len() - linalg::rank(ring.field(), &rows)) as u64
        })
        .collect()
}

/// Computes the expectations of an entry with an escalated vote and checks
/// the Hilbert function of its gin against rank counts.
pub fn derive_expectations(entry: &CorpusEntry, seed: u64) -> Result<(Expected, u32)> {
    let cfg = GinConfig::new(seed, ESCALATED_VOTES)?.derive(&entry.name, 0);
    let inv = variety_invariants(&entry.ideal, &cfg)?;
    if !inv.gin.agreed {
        return Err(Error::GinUnstable { samples: inv.gin.samples_used });
    }
    let dmax = inv.gin.gin.max_degree().unwrap_or(0) + entry.n as u32 + 1;
    if inv.gin.gin.hilbert_function(dmax).values != hilbert_by_rank(&entry.ideal, dmax) {
        return Err(Error::InvalidArgument("Hilbert function of gin disagrees with rank counts"));
    }
    let expected = Expected {
        gin: Some(inv.gin.gin.generators().to_vec()),
        s_z: Some(inv.s_z),
        s_gamma: Some(inv.s_gamma),
        stable_lambdas: Some(inv.table.stable_profile().lambdas.clone()),
    };
    Ok((expected, dmax))
}

pub fn regenerate(field: PrimeField, seed: u64) -> Result<Vec<CorpusFile>> {
    let mut out = Vec::new();
    for mut entry in builtin_corpus(field, seed)? {
        let (expected, dmax) = derive_expectations(&entry, seed)?;
        entry.expected = expected;
        let comments = vec![
            format!("generated by `monoinv corpus-regen --seed {seed}`"),
            format!("expectations: gin agreed over {ESCALATED_VOTES} coordinate samples"),
            format!("Hilbert function of gin matched rank counts of I_d for d <= {dmax}"),
        ];
        out.push(CorpusFile { entry, prime: field.characteristic(), comments });
    }
    Ok(out)
}
