//! Primitive-operation counter used to check that queries run in constant time.
//!
//! Every word read, directory probe and table lookup on a query path bumps a
//! thread-local counter. The counter never affects results.

use std::cell::Cell;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

#[inline(always)]
pub(crate) fn tick(n: u64) {
    OPS.with(|c| c.set(c.get().wrapping_add(n)));
}

/// Resets this thread's counter to zero.
pub fn reset() {
    OPS.with(|c| c.set(0));
}

/// Operations counted on this thread since the last [`reset`].
pub fn count() -> u64 {
    OPS.with(|c| c.get())
}

/// Runs `f` and returns its result together with the number of counted operations.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = count();
    let out = f();
    (out, count().wrapping_sub(before))
}
