//! Actions on a Cbit.
//!
//! Two regimes live here:
//!
//! * Z₂ actions `U_α = αI + ᾱX` with `α ∈ {0, 1}` and `ᾱ = 1 − α`. They form a
//!   two-element group and map Cbits to Cbits. With this formula `U₁ = I` and
//!   `U₀ = X`.
//! * Real unit-circle actions `αI + βX` with `α² + β² = 1`. These are
//!   self-adjoint but not unitary, their products leave the circle and their
//!   inverses cannot be normalized. The functions below quantify each failure.

use crate::pauli::{Qubit, TwoLevelOperator};
use crate::{Error, Result, C64};
use serde::{Deserialize, Serialize};

/// Tolerance on `α² + β² = 1` for circle membership.
pub const CIRCLE_TOLERANCE: f64 = 1e-12;

/// `|α² − β²|` at or below this is treated as non-invertible.
pub const SINGULAR_TOLERANCE: f64 = 1e-10;

fn check_label(x: u8) -> Result<u8> {
    if x <= 1 {
        Ok(x)
    } else {
        Err(Error::InvalidCbit(x))
    }
}

/// `U_α = αI + ᾱX`, `α ∈ Z₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CbitAction {
    alpha: u8,
}

impl CbitAction {
    pub const IDENTITY: CbitAction = CbitAction { alpha: 1 };
    pub const NOT: CbitAction = CbitAction { alpha: 0 };

    pub fn new(alpha: u8) -> Result<Self> {
        check_label(alpha).map(|alpha| Self { alpha })
    }

    pub fn alpha(&self) -> u8 {
        self.alpha
    }

    pub fn alpha_bar(&self) -> u8 {
        1 - self.alpha
    }

    pub fn operator(&self) -> TwoLevelOperator {
        let a = f64::from(self.alpha);
        TwoLevelOperator::action(C64::new(a, 0.0), C64::new(1.0 - a, 0.0))
    }

    /// `x ↦ αx + ᾱx̄` over Z₂.
    pub fn apply(&self, x: u8) -> Result<u8> {
        let x = check_label(x)?;
        Ok((self.alpha * x + self.alpha_bar() * (1 - x)) % 2)
    }

    /// `U_{α₂} U_{α₁} = U_β` with `β = α₂α₁ + ᾱ₂ᾱ₁`; `self` is `α₂`.
    pub fn compose(&self, first: &CbitAction) -> CbitAction {
        let beta = self.alpha * first.alpha + self.alpha_bar() * first.alpha_bar();
        CbitAction { alpha: beta % 2 }
    }

    /// Every `U_α` is its own inverse.
    pub fn inverse(&self) -> CbitAction {
        *self
    }
}

pub fn cbit_apply(action: CbitAction, x: u8) -> Result<u8> {
    action.apply(x)
}

pub fn cbit_compose(second: CbitAction, first: CbitAction) -> CbitAction {
    second.compose(&first)
}

/// Products `row · column` over `{U₀, U₁}`, indexed by α.
pub fn cayley_table() -> [[CbitAction; 2]; 2] {
    let e = [CbitAction::NOT, CbitAction::IDENTITY];
    [
        [e[0].compose(&e[0]), e[0].compose(&e[1])],
        [e[1].compose(&e[0]), e[1].compose(&e[1])],
    ]
}

/// An ordered list of action parameters, stored in application order:
/// `params[0]` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct History<P> {
    pub params: Vec<P>,
}

impl<P> Default for History<P> {
    fn default() -> Self {
        Self { params: Vec::new() }
    }
}

impl<P: Clone> History<P> {
    pub fn new(params: Vec<P>) -> Self {
        Self { params }
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.params.iter().rev().cloned().collect())
    }

    /// `self` followed by `later`.
    pub fn then(&self, later: &History<P>) -> Self {
        let mut params = self.params.clone();
        params.extend(later.params.iter().cloned());
        Self::new(params)
    }
}

impl History<CbitAction> {
    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        labels
            .iter()
            .map(|&a| CbitAction::new(a))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn labels(&self) -> Vec<u8> {
        self.params.iter().map(CbitAction::alpha).collect()
    }

    /// Product of the actions as a single group element.
    pub fn product(&self) -> CbitAction {
        self.params
            .iter()
            .fold(CbitAction::IDENTITY, |acc, a| a.compose(&acc))
    }

    /// Product of the 2×2 matrices, last action leftmost.
    pub fn operator(&self) -> TwoLevelOperator {
        self.params
            .iter()
            .fold(TwoLevelOperator::identity(), |acc, a| a.operator().compose(&acc))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    pub final_state: u8,
    /// `x₁ … x_n`, one entry per action.
    pub intermediates: Vec<u8>,
}

/// Runs `x_k = α_k x_{k−1} + ᾱ_k x̄_{k−1}` over the history.
pub fn run_history(history: &History<CbitAction>, x0: u8) -> Result<Trajectory> {
    let mut x = check_label(x0)?;
    let mut intermediates = Vec::with_capacity(history.len());
    for action in &history.params {
        x = action.apply(x)?;
        intermediates.push(x);
    }
    Ok(Trajectory {
        final_state: x,
        intermediates,
    })
}

pub fn reverse_history<P: Clone>(history: &History<P>) -> History<P> {
    history.reversed()
}

/// Real action `αI + βX` on the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleAction {
    pub alpha: f64,
    pub beta: f64,
}

impl CircleAction {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let radius_sq = alpha * alpha + beta * beta;
        if !radius_sq.is_finite() || (radius_sq - 1.0).abs() > CIRCLE_TOLERANCE {
            return Err(Error::NotOnCircle {
                alpha,
                beta,
                radius_sq,
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_angle(theta: f64) -> Self {
        Self {
            alpha: theta.cos(),
            beta: theta.sin(),
        }
    }

    pub fn operator(&self) -> TwoLevelOperator {
        TwoLevelOperator::action(C64::new(self.alpha, 0.0), C64::new(self.beta, 0.0))
    }

    /// Max-entry deviation of `U†U` from `I`; equals `2|αβ|`.
    pub fn unitarity_defect(&self) -> f64 {
        self.operator().unitarity_defect()
    }
}

/// Result of composing two circle actions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleProduct {
    pub alpha: f64,
    pub beta: f64,
    /// `α₃² + β₃²` of the product.
    pub defect: f64,
}

/// Multiplies `second · first` as matrices and reads `(α₃, β₃)` back from the
/// Pauli decomposition. The product leaves the circle:
/// `α₃² + β₃² = 1 + 4α₂α₁β₂β₁`.
pub fn circle_compose_defect(second: &CircleAction, first: &CircleAction) -> CircleProduct {
    let coeffs = second.operator().compose(&first.operator()).pauli_decompose();
    let (alpha, beta) = (coeffs.i.re, coeffs.x.re);
    CircleProduct {
        alpha,
        beta,
        defect: alpha * alpha + beta * beta,
    }
}

/// Closed form of the defect, `1 + 4α₂α₁β₂β₁`.
pub fn predicted_defect(second: &CircleAction, first: &CircleAction) -> f64 {
    1.0 + 4.0 * second.alpha * first.alpha * second.beta * first.beta
}

fn inverse_gap(action: &CircleAction) -> Result<f64> {
    let gap = action.alpha * action.alpha - action.beta * action.beta;
    if gap.abs() <= SINGULAR_TOLERANCE {
        Err(Error::SingularInverse { gap: gap.abs() })
    } else {
        Ok(gap)
    }
}

/// `(α̃, β̃) = (α, −β) / (α² − β²)`, the coefficients of `(αI + βX)⁻¹`.
pub fn circle_inverse(action: &CircleAction) -> Result<(f64, f64)> {
    let gap = inverse_gap(action)?;
    Ok((action.alpha / gap, -action.beta / gap))
}

/// `‖U⁻¹(α, β)|x₀⟩‖ = |α² − β²|⁻¹`.
pub fn circle_inverse_norm(action: &CircleAction) -> Result<f64> {
    inverse_gap(action).map(|gap| 1.0 / gap.abs())
}

/// Norm of `U⁻¹(α, β)` applied to the Cbit `x`, measured directly.
pub fn measured_inverse_norm(action: &CircleAction, x: u8) -> Result<f64> {
    let (at, bt) = circle_inverse(action)?;
    let inv = TwoLevelOperator::action(C64::new(at, 0.0), C64::new(bt, 0.0));
    Ok(inv.apply(&Qubit::cbit(x)?).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn act(a: u8) -> CbitAction {
        CbitAction::new(a).unwrap()
    }

    #[test]
    fn labels_follow_the_formula() {
        assert_eq!(act(1).operator(), TwoLevelOperator::identity());
        assert_eq!(act(0).operator(), TwoLevelOperator::x());
        for a in [0, 1] {
            let u = act(a).operator();
            assert_eq!(u * u, TwoLevelOperator::identity());
        }
    }

    #[test]
    fn cbit_apply_examples() {
        assert_eq!(cbit_apply(act(1), 0), Ok(0));
        assert_eq!(cbit_apply(act(0), 0), Ok(1));
        assert_eq!(cbit_apply(act(0), 1), Ok(0));
        assert_eq!(cbit_apply(act(1), 2), Err(Error::InvalidCbit(2)));
        assert_eq!(CbitAction::new(3), Err(Error::InvalidCbit(3)));
    }

    #[test]
    fn cbit_apply_matches_matrix_action() {
        for a in [0, 1] {
            for x in [0, 1] {
                let via_matrix = act(a).operator().apply(&Qubit::cbit(x).unwrap());
                let label = cbit_apply(act(a), x).unwrap();
                assert_eq!(via_matrix.as_cbit(), Some(label));
            }
        }
    }

    #[test]
    fn cbit_compose_examples() {
        assert_eq!(cbit_compose(act(1), act(1)), act(1));
        assert_eq!(cbit_compose(act(0), act(0)), act(1));
        assert_eq!(cbit_compose(act(0), act(1)), act(0));
        assert_eq!(cbit_compose(act(1), act(0)), act(0));
    }

    #[test]
    fn cayley_table_matches_matrix_products() {
        let table = cayley_table();
        for a2 in 0..2u8 {
            for a1 in 0..2u8 {
                let product = act(a2).operator() * act(a1).operator();
                assert_eq!(table[a2 as usize][a1 as usize].operator(), product);
            }
        }
    }

    #[test]
    fn history_examples() {
        let h = History::from_labels(&[0, 0]).unwrap();
        let run = run_history(&h, 0).unwrap();
        assert_eq!(run.final_state, 0);
        assert_eq!(run.intermediates, vec![1, 0]);

        let empty = History::<CbitAction>::default();
        let run = run_history(&empty, 1).unwrap();
        assert_eq!(run.final_state, 1);
        assert!(run.intermediates.is_empty());

        let h = History::from_labels(&[0]).unwrap();
        for x in [0, 1] {
            assert_eq!(run_history(&h, x).unwrap().final_state, 1 - x);
        }
        assert!(run_history(&h, 5).is_err());
    }

    #[test]
    fn reverse_examples() {
        let h = History::from_labels(&[0, 1, 0]).unwrap();
        assert_eq!(reverse_history(&h), h);
        let h = History::from_labels(&[0, 0, 1]).unwrap();
        assert_eq!(reverse_history(&h).labels(), vec![1, 0, 0]);
    }

    #[test]
    fn circle_defect_examples() {
        let d = CircleAction::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        let p = circle_compose_defect(&d, &d);
        assert!((p.defect - 2.0).abs() < 1e-12);

        let one = CircleAction::new(1.0, 0.0).unwrap();
        let any = CircleAction::from_angle(0.7);
        assert!((circle_compose_defect(&one, &any).defect - 1.0).abs() < 1e-12);

        let not = CircleAction::new(0.0, 1.0).unwrap();
        let p = circle_compose_defect(&not, &not);
        assert_eq!((p.alpha, p.beta, p.defect), (1.0, 0.0, 1.0));
    }

    #[test]
    fn off_circle_rejected() {
        assert!(matches!(
            CircleAction::new(0.5, 0.5),
            Err(Error::NotOnCircle { .. })
        ));
    }

    #[test]
    fn circle_inverse_examples() {
        let one = CircleAction::new(1.0, 0.0).unwrap();
        assert_eq!(circle_inverse(&one), Ok((1.0, 0.0)));
        assert_eq!(circle_inverse_norm(&one), Ok(1.0));

        let a = CircleAction::new(3f64.sqrt() / 2.0, 0.5).unwrap();
        let (at, bt) = circle_inverse(&a).unwrap();
        assert!((at - 3f64.sqrt()).abs() < 1e-12);
        assert!((bt + 1.0).abs() < 1e-12);
        assert!((circle_inverse_norm(&a).unwrap() - 2.0).abs() < 1e-12);

        let b = CircleAction::new(0.8, 0.6).unwrap();
        let expected = 1.0 / 0.28;
        assert!((circle_inverse_norm(&b).unwrap() - expected).abs() < 1e-10);
        for x in [0, 1] {
            assert!((measured_inverse_norm(&b, x).unwrap() - expected).abs() < 1e-10);
        }

        let d = CircleAction::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        assert!(matches!(circle_inverse(&d), Err(Error::SingularInverse { .. })));
        assert!(matches!(circle_inverse_norm(&d), Err(Error::SingularInverse { .. })));
    }

    fn arb_history(max: usize) -> impl Strategy<Value = History<CbitAction>> {
        prop::collection::vec(0u8..2, 0..=max)
            .prop_map(|labels| History::from_labels(&labels).unwrap())
    }

    proptest! {
        #[test]
        fn reverse_is_involution(h in arb_history(20)) {
            prop_assert_eq!(reverse_history(&reverse_history(&h)), h);
        }

        #[test]
        fn reverse_history_undoes_run(h in arb_history(20), x0 in 0u8..2) {
            let forward = run_history(&h, x0).unwrap();
            let back = run_history(&reverse_history(&h), forward.final_state).unwrap();
            prop_assert_eq!(back.final_state, x0);
            prop_assert_eq!(forward.intermediates.len(), h.len());
        }

        #[test]
        fn composition_law(h1 in arb_history(20), h2 in arb_history(20), x0 in 0u8..2) {
            let split = run_history(&h2, run_history(&h1, x0).unwrap().final_state).unwrap();
            let joined = run_history(&h1.then(&h2), x0).unwrap();
            prop_assert_eq!(split.final_state, joined.final_state);
            prop_assert_eq!(h1.then(&h2).product(), h2.product().compose(&h1.product()));
            prop_assert_eq!(h1.then(&h2).operator(), h2.operator() * h1.operator());
        }

        #[test]
        fn circle_properties(t1 in -3.2..3.2f64, t2 in -3.2..3.2f64) {
            let (a1, a2) = (CircleAction::from_angle(t1), CircleAction::from_angle(t2));
            let p = circle_compose_defect(&a2, &a1);
            prop_assert!((p.defect - predicted_defect(&a2, &a1)).abs() <= 1e-12);

            let u = a1.operator();
            prop_assert_eq!(u.adjoint(), u);
            for x in [0, 1] {
                prop_assert!((u.apply(&Qubit::cbit(x).unwrap()).norm() - 1.0).abs() <= 1e-12);
            }
            if (a1.alpha * a1.beta).abs() > 1e-3 {
                prop_assert!(a1.unitarity_defect() > 1e-6);
            }
            if let Ok((at, bt)) = circle_inverse(&a1) {
                let gap = a1.alpha * a1.alpha - a1.beta * a1.beta;
                let inv = TwoLevelOperator::action(C64::new(at, 0.0), C64::new(bt, 0.0));
                prop_assert!((inv * u).max_deviation(&TwoLevelOperator::identity()) <= 1e-10 * (1.0 / gap.abs()).max(1.0));
                prop_assert!(((at * at + bt * bt) - gap.powi(-2)).abs() <= 1e-10 * gap.powi(-2));
            }
        }
    }
}
