//! Adaptive Simpson quadrature for vector-valued, fallible integrands.

use crate::error::Result;

const MAX_DEPTH: u32 = 48;

/// Integrates each component of `f` over `[a, b]` with `panels` equal
/// initial subdivisions, refining each panel adaptively until the Richardson
/// error estimate drops below `abs_tol` (split proportionally to length).
pub fn adaptive_simpson<const N: usize, F>(f: &mut F, a: f64, b: f64, panels: usize, abs_tol: f64) -> Result<[f64; N]>
where
    F: FnMut(f64) -> Result<[f64; N]>,
{
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut total = [0.0; N];
    let mut left = a;
    let mut f_left = f(a)?;
    for k in 0..panels {
        let right = if k + 1 == panels { b } else { a + width * (k + 1) as f64 };
        let mid = 0.5 * (left + right);
        let f_mid = f(mid)?;
        let f_right = f(right)?;
        let whole = simpson(left, right, &f_left, &f_mid, &f_right);
        let panel = refine(
            f,
            Panel {
                a: left,
                b: right,
                fa: f_left,
                fm: f_mid,
                fb: f_right,
                whole,
            },
            abs_tol / panels as f64,
            MAX_DEPTH,
        )?;
        for (t, p) in total.iter_mut().zip(panel) {
            *t += p;
        }
        left = right;
        f_left = f_right;
    }
    Ok(total)
}

struct Panel<const N: usize> {
    a: f64,
    b: f64,
    fa: [f64; N],
    fm: [f64; N],
    fb: [f64; N],
    whole: [f64; N],
}

fn simpson<const N: usize>(a: f64, b: f64, fa: &[f64; N], fm: &[f64; N], fb: &[f64; N]) -> [f64; N] {
    let h = (b - a) / 6.0;
    std::array::from_fn(|i| h * (fa[i] + 4.0 * fm[i] + fb[i]))
}

fn refine<const N: usize, F>(f: &mut F, p: Panel<N>, tol: f64, depth: u32) -> Result<[f64; N]>
where
    F: FnMut(f64) -> Result<[f64; N]>,
{
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let f_lm = f(lm)?;
    let f_rm = f(rm)?;
    let left = simpson(p.a, m, &p.fa, &f_lm, &p.fm);
    let right = simpson(m, p.b, &p.fm, &f_rm, &p.fb);
    let delta: [f64; N] = std::array::from_fn(|i| left[i] + right[i] - p.whole[i]);
    let err = delta.iter().fold(0.0_f64, |acc, d| acc.max(d.abs()));
    if depth == 0 || err <= 15.0 * tol {
        return Ok(std::array::from_fn(|i| left[i] + right[i] + delta[i] / 15.0));
    }
    let l = refine(
        f,
        Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: f_lm,
            fb: p.fm,
            whole: left,
        },
        0.5 * tol,
        depth - 1,
    )?;
    let r = refine(
        f,
        Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: f_rm,
            fb: p.fb,
            whole: right,
        },
        0.5 * tol,
        depth - 1,
    )?;
    Ok(std::array::from_fn(|i| l[i] + r[i]))
}
