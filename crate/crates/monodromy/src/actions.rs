use linalg::SymMatrix;
use symring::SymExpr;

use crate::braid::BraidWord;
use crate::checks::c0_violations;
use crate::data::MonodromyData;
use crate::error::MonodromyError;

/// `A^{β_{i,i+1}^{±1}}(S)` for 1-based `i`: the identity outside rows and
/// columns `i, i+1`, where the block is `[[0,1],[1,−s]]` for `+1` and
/// `[[−s,1],[1,0]]` for `−1`, with `s = S_{i,i+1}`.
pub fn braid_matrix(s: &SymMatrix, i: usize, sign: i8) -> SymMatrix {
    let t = s.table();
    let k = i - 1;
    let mut a = SymMatrix::identity(t, s.n());
    let m = -s.get(k, k + 1);
    a.set(k, k, SymExpr::zero(t));
    a.set(k + 1, k + 1, SymExpr::zero(t));
    a.set(k, k + 1, SymExpr::one(t));
    a.set(k + 1, k, SymExpr::one(t));
    if sign > 0 {
        a.set(k + 1, k + 1, m);
    } else {
        a.set(k, k, m);
    }
    a
}

/// Inverse of [`braid_matrix`], written out explicitly so that symbolic
/// Stokes entries need no general inversion.
pub fn braid_matrix_inverse(s: &SymMatrix, i: usize, sign: i8) -> SymMatrix {
    let t = s.table();
    let k = i - 1;
    let mut a = SymMatrix::identity(t, s.n());
    let v = s.get(k, k + 1).clone();
    a.set(k, k, SymExpr::zero(t));
    a.set(k + 1, k + 1, SymExpr::zero(t));
    a.set(k, k + 1, SymExpr::one(t));
    a.set(k + 1, k, SymExpr::one(t));
    if sign > 0 {
        a.set(k, k, v);
    } else {
        a.set(k + 1, k + 1, v);
    }
    a
}

/// The total matrix `A^β(S)` of a word, letters composed left to right.
pub fn braid_word_matrix(s: &SymMatrix, w: &BraidWord) -> Result<SymMatrix, MonodromyError> {
    w.validate(s.n())?;
    let mut cur = s.clone();
    let mut total = SymMatrix::identity(s.table(), s.n());
    for &(i, sign) in &w.letters {
        let a = braid_matrix(&cur, i, sign);
        cur = &(&a * &cur) * &a.transpose();
        total = &a * &total;
    }
    Ok(total)
}

/// `S ↦ A S Aᵀ`, `C ↦ C A⁻¹` for each letter in turn, swapping `u_i, u_{i+1}`.
pub fn apply_braid(md: &MonodromyData, w: &BraidWord) -> Result<MonodromyData, MonodromyError> {
    w.validate(md.n())?;
    if !md.s.is_upper_triangular() {
        return Err(MonodromyError::NotTriangular);
    }
    let mut out = md.clone();
    for &(i, sign) in &w.letters {
        let a = braid_matrix(&out.s, i, sign);
        let a_inv = braid_matrix_inverse(&out.s, i, sign);
        out.s = &(&a * &out.s) * &a.transpose();
        out.c = &out.c * &a_inv;
        if let Some(u) = out.u.as_mut() {
            u.swap(i - 1, i);
        }
    }
    Ok(out)
}

/// `tau` lists, for each new position, the old 1-based label now placed
/// there; `S ↦ P S Pᵀ`, `C ↦ C Pᵀ` with `P[k][τ(k)−1] = 1`.
pub fn permutation_matrix(table: &std::sync::Arc<symring::SymbolTable>, tau: &[usize]) -> Result<SymMatrix, MonodromyError> {
    let n = tau.len();
    let mut seen = vec![false; n];
    for &t in tau {
        if t == 0 || t > n || seen[t - 1] {
            return Err(MonodromyError::Invalid(format!("{tau:?} is not a permutation of 1..={n}")));
        }
        seen[t - 1] = true;
    }
    let zero_based: Vec<usize> = tau.iter().map(|t| t - 1).collect();
    Ok(SymMatrix::permutation(table, &zero_based))
}

pub fn apply_permutation(md: &MonodromyData, tau: &[usize]) -> Result<MonodromyData, MonodromyError> {
    if tau.len() != md.n() {
        return Err(MonodromyError::Invalid("permutation length differs from n".into()));
    }
    let p = permutation_matrix(md.table(), tau)?;
    let pt = p.transpose();
    let mut out = md.clone();
    out.s = &(&p * &md.s) * &pt;
    out.c = &md.c * &pt;
    out.u = md.u.as_ref().map(|u| tau.iter().map(|&t| u[t - 1]).collect());
    Ok(out)
}

pub fn sign_matrix(table: &std::sync::Arc<symring::SymbolTable>, eps: &[i8]) -> Result<SymMatrix, MonodromyError> {
    if eps.iter().any(|e| *e != 1 && *e != -1) {
        return Err(MonodromyError::Invalid("sign entries must be ±1".into()));
    }
    let d: Vec<SymExpr> = eps.iter().map(|&e| SymExpr::int(table, e as i64)).collect();
    Ok(SymMatrix::diag(table, &d))
}

/// `S ↦ 𝓘 S 𝓘`, `C ↦ C 𝓘`.
pub fn apply_signs(md: &MonodromyData, eps: &[i8]) -> Result<MonodromyData, MonodromyError> {
    if eps.len() != md.n() {
        return Err(MonodromyError::Invalid("sign vector length differs from n".into()));
    }
    let i = sign_matrix(md.table(), eps)?;
    let mut out = md.clone();
    out.s = &(&i * &md.s) * &i;
    out.c = &md.c * &i;
    Ok(out)
}

/// `C ↦ G C`, refused unless `G ∈ 𝒞₀(η, μ, R)`.
pub fn apply_gauge(md: &MonodromyData, g: &SymMatrix) -> Result<MonodromyData, MonodromyError> {
    let v = c0_violations(g, &md.mu, &md.r, &md.eta)?;
    if !v.is_empty() {
        return Err(MonodromyError::NotMember(v.join("; ")));
    }
    let mut out = md.clone();
    out.c = g * &md.c;
    Ok(out)
}

/// `C ↦ M₀^{−k} C`.
pub fn apply_shift(md: &MonodromyData, k: i64) -> Result<MonodromyData, MonodromyError> {
    let step = if k >= 0 { md.m0_inv()? } else { md.m0()? };
    let mut out = md.clone();
    for _ in 0..k.unsigned_abs() {
        out.c = &step * &out.c;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ActionRecord {
    Permutation(Vec<usize>),
    Sign(Vec<i8>),
    Gauge(SymMatrix),
    Braid(BraidWord),
    Shift(i64),
}

impl ActionRecord {
    pub fn kind(&self) -> &'static str {
        match self {
            ActionRecord::Permutation(_) => "permutation",
            ActionRecord::Sign(_) => "sign",
            ActionRecord::Gauge(_) => "gauge",
            ActionRecord::Braid(_) => "braid",
            ActionRecord::Shift(_) => "shift",
        }
    }

    pub fn apply(&self, md: &MonodromyData) -> Result<MonodromyData, MonodromyError> {
        match self {
            ActionRecord::Permutation(t) => apply_permutation(md, t),
            ActionRecord::Sign(e) => apply_signs(md, e),
            ActionRecord::Gauge(g) => apply_gauge(md, g),
            ActionRecord::Braid(w) => apply_braid(md, w),
            ActionRecord::Shift(k) => apply_shift(md, *k),
        }
    }
}

/// Applies a sequence of actions in order.
pub fn apply_all(md: &MonodromyData, actions: &[ActionRecord]) -> Result<MonodromyData, MonodromyError> {
    actions.iter().try_fold(md.clone(), |acc, a| a.apply(&acc))
}
