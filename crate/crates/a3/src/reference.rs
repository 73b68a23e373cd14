use std::sync::Arc;

use linalg::SymMatrix;
use monodromy::{apply_braid, apply_permutation, check_constraints, BraidWord, MonodromyData, Report};
use symring::{rat, SymbolTable};

use crate::error::A3Error;

pub const BANDS: usize = 5;

fn table() -> Arc<SymbolTable> {
    SymbolTable::standard()
}

fn parse_matrix(rows: &[[&str; 3]; 3]) -> SymMatrix {
    let t = table();
    let r: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
    SymMatrix::parse(&t, &r).expect("well-formed constant matrix")
}

/// `η = ¼·antidiag(1, 1, 1)`.
pub fn a3_eta() -> SymMatrix {
    parse_matrix(&[["0", "0", "1/4"], ["0", "1/4", "0"], ["1/4", "0", "0"]])
}

pub fn a3_mu() -> Vec<symring::BigRational> {
    vec![rat(-1, 4), rat(0, 1), rat(1, 4)]
}

/// The Stokes matrix of band `k` in lexicographical order.
pub fn s_lex(band: usize) -> SymMatrix {
    let t = table();
    if band % 2 == 0 {
        SymMatrix::from_ints(&t, &[&[1, 0, -1], &[0, 1, -1], &[0, 0, 1]]).unwrap()
    } else {
        SymMatrix::from_ints(&t, &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }
}

/// `C_lex` of band `k`; `cell` 1 reads the upper signs, 2 the lower ones.
pub fn c_lex(band: usize, cell: u8) -> Result<SymMatrix, A3Error> {
    let (p, m) = match cell {
        1 => ("", "-"),
        2 => ("-", ""),
        c => return Err(A3Error::BadCell(c)),
    };
    let mid_a = [format!("{m}s2"), format!("{p}s2"), "0".to_string()];
    let mid_b = ["0".to_string(), format!("{p}s2"), format!("{m}s2")];
    let (top, mid, bottom): ([&str; 3], [String; 3], [&str; 3]) = match band {
        0 => (["-i*g34/spi", "-i*g34/spi", "(1-i)*g34/spi"], mid_a, ["i*g14/spi", "i*g14/spi", "(1+i)*g14/spi"]),
        1 => (["(1+i)*g34/spi", "-i*g34/spi", "-i*g34/spi"], mid_b, ["(1-i)*g14/spi", "i*g14/spi", "i*g14/spi"]),
        2 => (["g34/spi", "g34/spi", "(1+i)*g34/spi"], mid_a, ["g14/spi", "g14/spi", "(1-i)*g14/spi"]),
        3 => (["(-1+i)*g34/spi", "g34/spi", "g34/spi"], mid_b, ["(-1-i)*g14/spi", "g14/spi", "g14/spi"]),
        4 => (["i*g34/spi", "i*g34/spi", "(-1+i)*g34/spi"], mid_a, ["-i*g14/spi", "-i*g14/spi", "(-1-i)*g14/spi"]),
        b => return Err(A3Error::BadBand(b)),
    };
    let mid: [&str; 3] = [&mid[0], &mid[1], &mid[2]];
    Ok(parse_matrix(&[top, mid, bottom]))
}

/// The tabulated data for one band and cell.
pub fn a3_reference(band: usize, cell: u8) -> Result<MonodromyData, A3Error> {
    let t = table();
    Ok(MonodromyData::new(a3_mu(), SymMatrix::zeros(&t, 3), a3_eta(), s_lex(band), c_lex(band, cell)?, None)?)
}

/// The braid column of the table: a prefix reaching the band, plus the
/// trailing letter that passes to the second cell.
pub fn table_word(band: usize, cell: u8) -> Result<BraidWord, A3Error> {
    let prefix = match band {
        0 => BraidWord::empty(),
        1 => BraidWord::positive(&[1, 2, 1]),
        2 => BraidWord::positive(&[1, 2]).repeat(3),
        3 => BraidWord::positive(&[1, 2]).repeat(3).concat(&BraidWord::positive(&[1, 2, 1])),
        4 => BraidWord::positive(&[1, 2]).repeat(6),
        b => return Err(A3Error::BadBand(b)),
    };
    match cell {
        1 => Ok(prefix),
        2 => Ok(prefix.concat(&BraidWord::positive(&[if band % 2 == 0 { 1 } else { 2 }]))),
        c => Err(A3Error::BadCell(c)),
    }
}

/// `(2k−1)π/4 < arg h < (2k+1)π/4` for band `k`.
pub fn band_label(band: usize) -> String {
    let lo = 2 * band as i64 - 1;
    let frac = |k: i64| match k {
        1 => "pi/4".to_string(),
        -1 => "-pi/4".to_string(),
        k => format!("{k}pi/4"),
    };
    format!("{}<arg h<{}", frac(lo), frac(lo + 2))
}

/// The band containing `arg h`, if `arg h` lies inside one of the open sectors.
pub fn band_for_arg(arg: f64) -> Option<usize> {
    let x = (arg + std::f64::consts::FRAC_PI_4) / std::f64::consts::FRAC_PI_2;
    if (x - x.round()).abs() < 1e-12 || x < 0.0 || x >= BANDS as f64 {
        return None;
    }
    Some(x.floor() as usize)
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub band: usize,
    pub cell: u8,
    pub word: BraidWord,
    pub data: MonodromyData,
}

/// Every band and cell obtained from band 0, cell 1 through the table's braid words.
pub fn reproduced_rows() -> Result<Vec<TableRow>, A3Error> {
    let base = a3_reference(0, 1)?;
    let mut out = Vec::new();
    for band in 0..BANDS {
        for cell in [1, 2] {
            let word = table_word(band, cell)?;
            let data = apply_braid(&base, &word)?;
            out.push(TableRow { band, cell, word, data });
        }
    }
    Ok(out)
}

/// Compares each reproduced row with the tabulated one and checks the constraints on it.
pub fn reproduce_a3_table() -> Result<Report, A3Error> {
    let mut report = Report::new();
    for row in reproduced_rows()? {
        let name = format!("band{}_cell{}", row.band, row.cell);
        let expected = a3_reference(row.band, row.cell)?;
        report.push(&format!("{name}_s"), row.data.s == expected.s, format!("word \"{}\"", row.word));
        report.push(&format!("{name}_c"), row.data.c == expected.c, format!("word \"{}\"", row.word));
        let cons = check_constraints(&expected)?;
        report.push(&format!("{name}_constraints"), cons.all_pass(), format!("{} checks", cons.checks.len()));
    }
    let base = a3_reference(0, 1)?;
    let centre = apply_braid(&base, &monodromy::center_braid(3))?;
    report.push("centre_fixes_s", centre.s == base.s, "(1 2)^3".to_string());
    let m0_inv = base.m0_inv()?;
    let expected_diag = SymMatrix::parse(&table(), &[&["i", "0", "0"], &["0", "1", "0"], &["0", "0", "-i"]]).unwrap();
    report.push("m0_inverse_is_diag_i_1_minus_i", m0_inv == expected_diag, String::new());
    report.push("centre_multiplies_c_by_m0_inverse", centre.c == &expected_diag * &base.c, String::new());
    Ok(report)
}

/// `S` in the original labelling `(u₁, u₂, u₃)`.
pub fn unpermuted_s() -> SymMatrix {
    SymMatrix::from_ints(&table(), &[&[1, 0, 0], &[-1, 1, 0], &[-1, 0, 1]]).unwrap()
}

/// The lexicographical order `(u₂, u₃, u₁)` of the base cell.
pub const LEX_PERMUTATION: [usize; 3] = [2, 3, 1];

/// Band-0 data in the original labelling, from which the lexicographical
/// data is recovered by [`LEX_PERMUTATION`].
pub fn unpermuted_reference() -> Result<MonodromyData, A3Error> {
    let base = a3_reference(0, 1)?;
    let p = monodromy::permutation_matrix(base.table(), &LEX_PERMUTATION)?;
    let mut out = base.clone();
    out.s = unpermuted_s();
    out.c = &base.c * &p;
    let back = apply_permutation(&out, &LEX_PERMUTATION)?;
    debug_assert_eq!(back.s, base.s);
    Ok(out)
}

/// The Coxeter matrix of `W(A₃)` in the original labelling.
pub fn coxeter_matrix() -> SymMatrix {
    SymMatrix::from_ints(&table(), &[&[2, -1, -1], &[-1, 2, 0], &[-1, 0, 2]]).unwrap()
}
