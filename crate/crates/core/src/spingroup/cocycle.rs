//! Combinatorial evaluation of the sign in `T_σ T_τ = ε(σ, τ) T_{στ}`.
//!
//! In the Clifford model every canonical lift is a signed product of unit
//! vectors `v_ab = (c_a - c_b)/√2`. Writing
//! `C(a, b_1, ..., b_k) = v_{a b_k} ⋯ v_{a b_1}`, the cycle element is
//! `[a, b_1, ..., b_k] = -C(a, b_1, ..., b_k)` and
//! `T_σ = (-1)^{c(σ)} ∏ C(cycle)` over the nontrivial cycles of `σ`, each
//! started at its minimum, in increasing order of minima.
//!
//! The product is evaluated by right-multiplying the cycle list of `σ` by
//! the vectors of `T_τ` one at a time. Three local rules suffice:
//!
//! - disjoint products of `p` and `q` vectors commute up to `(-1)^{pq}`;
//! - `C(i_1, ..., i_m) = (-1)^{m-1} C(i_2, ..., i_m, i_1)`;
//! - with `X = (a, x_1..x_p)` and `Y = (b, y_1..y_q)` disjoint,
//!   `C(X) C(Y) v_ab = (-1)^q C(a, y_1..y_q, b, x_1..x_p)`, and for
//!   `b = x_j`, `C(X) v_ab = (-1)^j C(a, x_{j+1}..x_p) C(b, x_1..x_{j-1})`.

use arrayvec::ArrayVec;

use crate::perm::{Perm, MAX_DEGREE};

type Cycle = ArrayVec<u8, MAX_DEGREE>;
type Cycles = ArrayVec<Cycle, { MAX_DEGREE / 2 }>;

/// Canonical nontrivial cycles, 0-based.
fn canonical_cycles(p: &Perm) -> Cycles {
    let mut out = Cycles::new();
    let mut seen = 0u32;
    for start in 0..MAX_DEGREE {
        if seen & (1 << start) != 0 || p.apply(start) == start {
            continue;
        }
        let mut c = Cycle::new();
        let mut x = start;
        loop {
            seen |= 1 << x;
            c.push(x as u8);
            x = p.apply(x);
            if x == start {
                break;
            }
        }
        out.push(c);
    }
    out
}

struct State {
    cycles: Cycles,
    odd: bool,
}

impl State {
    fn find(&self, point: u8) -> Option<(usize, usize)> {
        self.cycles
            .iter()
            .enumerate()
            .find_map(|(ci, c)| c.iter().position(|&x| x == point).map(|pos| (ci, pos)))
    }

    fn rotate(&mut self, ci: usize, by: usize) {
        let c = &mut self.cycles[ci];
        if by > 0 {
            self.odd ^= ((c.len() - 1) * by) % 2 == 1;
            c.rotate_left(by);
        }
    }

    fn move_to_end(&mut self, ci: usize) {
        let deg = self.cycles[ci].len() - 1;
        if deg % 2 == 1 {
            let after: usize = self.cycles[ci + 1..].iter().map(|c| c.len() - 1).sum();
            self.odd ^= after % 2 == 1;
        }
        let c = self.cycles.remove(ci);
        self.cycles.push(c);
    }

    /// Right-multiplies by `v_ab`.
    fn apply(&mut self, a: u8, b: u8) {
        match (self.find(a), self.find(b)) {
            (None, None) => {
                let mut c = Cycle::new();
                c.push(a);
                c.push(b);
                self.cycles.push(c);
            }
            (Some((xa, pa)), None) => {
                self.rotate(xa, pa);
                self.move_to_end(xa);
                self.cycles.last_mut().unwrap().insert(1, b);
            }
            (None, Some((yb, pb))) => {
                self.rotate(yb, pb);
                self.move_to_end(yb);
                let y = self.cycles.last_mut().unwrap();
                self.odd ^= (y.len() - 1) % 2 == 1;
                // (b, y_1..y_q) -> (a, y_1..y_q, b)
                y[0] = a;
                y.push(b);
            }
            (Some((xa, pa)), Some((yb, pb))) if xa != yb => {
                self.rotate(xa, pa);
                self.rotate(yb, pb);
                self.move_to_end(xa);
                let yb = if yb > xa { yb - 1 } else { yb };
                self.move_to_end(yb);
                let y = self.cycles.pop().unwrap();
                let x = self.cycles.pop().unwrap();
                self.odd ^= (y.len() - 1) % 2 == 1;
                let mut merged = Cycle::new();
                merged.push(a);
                merged.try_extend_from_slice(&y[1..]).unwrap();
                merged.push(b);
                merged.try_extend_from_slice(&x[1..]).unwrap();
                self.cycles.push(merged);
            }
            (Some((xa, pa)), Some(_)) => {
                self.rotate(xa, pa);
                self.move_to_end(xa);
                let x = self.cycles.pop().unwrap();
                let j = x.iter().position(|&v| v == b).unwrap();
                self.odd ^= j % 2 == 1;
                if x.len() - j > 1 {
                    let mut first = Cycle::new();
                    first.push(a);
                    first.try_extend_from_slice(&x[j + 1..]).unwrap();
                    self.cycles.push(first);
                }
                if j > 1 {
                    let mut second = Cycle::new();
                    second.push(b);
                    second.try_extend_from_slice(&x[1..j]).unwrap();
                    self.cycles.push(second);
                }
            }
        }
    }

    /// Puts every cycle at its minimum and sorts by minima, tracking signs.
    fn canonicalize(&mut self) {
        for ci in 0..self.cycles.len() {
            let c = &self.cycles[ci];
            let pos = (0..c.len()).min_by_key(|&k| c[k]).unwrap();
            self.rotate(ci, pos);
        }
        let k = self.cycles.len();
        for i in 0..k {
            for j in i + 1..k {
                let (ci, cj) = (&self.cycles[i], &self.cycles[j]);
                if ci[0] > cj[0] && (ci.len() - 1) % 2 == 1 && (cj.len() - 1) % 2 == 1 {
                    self.odd ^= true;
                }
            }
        }
        self.cycles.sort_unstable_by_key(|c| c[0]);
    }
}

/// `ε(σ, τ) ∈ {+1, -1}` with `T_σ T_τ = ε T_{στ}`.
pub fn cocycle(sigma: &Perm, tau: &Perm) -> i8 {
    let sc = canonical_cycles(sigma);
    let tc = canonical_cycles(tau);
    if tc.is_empty() || sc.is_empty() {
        return 1;
    }
    let mut parity = sc.len() + tc.len();
    let mut st = State {
        cycles: sc,
        odd: false,
    };
    for c in &tc {
        for &y in c[1..].iter().rev() {
            st.apply(c[0], y);
        }
    }
    st.canonicalize();
    debug_assert!({
        let prod = sigma.compose(tau);
        canonical_cycles(&prod) == st.cycles
    });
    parity += st.cycles.len();
    if st.odd ^ (parity % 2 == 1) {
        -1
    } else {
        1
    }
}
