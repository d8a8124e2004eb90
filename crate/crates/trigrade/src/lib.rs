//! A Z₃-graded cubic algebra and the groups its covariance singles out.
//!
//! The crate has three layers:
//!
//! * exact scalars in the cyclotomic field Q(ζ₁₂) ([`scalar`]), which hosts
//!   both the cubic phase `j = e^{2πi/3}` and the imaginary unit `i`;
//! * the graded algebra itself ([`algebra`]) — generators obeying ternary
//!   cyclic relations instead of binary anticommutation — together with its
//!   invariant three- and two-forms ([`forms`]);
//! * covariance solvers ([`lorentz`], [`su3`]) that recover the SL(2, C)
//!   cover of the Lorentz group from the two-generator algebra and the
//!   SU(3) adjoint representation from the three-generator one, plus a
//!   deterministic verification layer ([`report`], [`suites`]) surfaced by
//!   the `verify` command-line tool.
//!
//! Everything algebraic is computed exactly; floating point enters only
//! through sampled group elements and residual reporting.

pub mod algebra;
pub mod forms;
pub mod lorentz;
pub mod matrix;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod su3;
pub mod suites;

pub use scalar::{ComplexFloat, CycloScalar, Rational};

#[cfg(test)]
mod thread_safety {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_can_be_shared_across_threads() {
        assert_send_sync::<crate::scalar::CycloScalar>();
        assert_send_sync::<crate::algebra::GradedWord>();
        assert_send_sync::<crate::algebra::AlgebraElement>();
        assert_send_sync::<crate::forms::CyclicTensor3>();
        assert_send_sync::<crate::matrix::DenseMatrix<crate::scalar::CycloScalar>>();
        assert_send_sync::<crate::matrix::GroupMatrix>();
        assert_send_sync::<crate::report::CheckReport>();
    }
}
