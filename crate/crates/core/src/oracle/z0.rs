//! Central correction `z0` from a direct power computation.

use crate::group::{frame_power, FrameElement};
use crate::numeric::{rat_int, Rat};

/// The unique `z0` with `(p, z0, lambda)^q = (0, 0, q lambda)`, where `p` is in
/// adapted basis coordinates and the rotation acts by the order-`q` matrix.
/// Returns `None` if the power fails to be central.
pub fn z0_solve(q: u8, p: [Rat; 2]) -> Option<Rat> {
    // z enters the q-th power with coefficient q, so one evaluation at z = 0 suffices
    let g = FrameElement::new(p, Rat::from_integer(0.into()), 1, q, rat_int(1));
    let gq = frame_power(&g, q as i64);
    if !gq.is_central() || gq.turns != q as i64 {
        return None;
    }
    Some(-gq.z / rat_int(q as i64))
}
