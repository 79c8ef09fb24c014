use std::fmt;
use std::str::FromStr;

use super::VerifyError;

macro_rules! identity_ids {
    ($($name:ident => $tag:literal,)*) => {
        /// One registered identity check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        #[allow(non_camel_case_types)]
        pub enum IdentityId {
            $($name,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$name,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$name => $tag,)*
                }
            }
        }
    };
}

identity_ids! {
    EQ01_GF => "EQ01_GF",
    EQ02_VS_EQ04 => "EQ02_VS_EQ04",
    EQ05_GF => "EQ05_GF",
    EQ06_UMBRAL => "EQ06_UMBRAL",
    EQ07_COEFFS => "EQ07_COEFFS",
    EQ08_TABLE => "EQ08_TABLE",
    EQ09_WORPITZKY => "EQ09_WORPITZKY",
    EQ10_RECURSION => "EQ10_RECURSION",
    EQ11_POWER_SUM => "EQ11_POWER_SUM",
    EQ12_GF => "EQ12_GF",
    EQ13_GF => "EQ13_GF",
    EQ14_GF => "EQ14_GF",
    EQ15_GF => "EQ15_GF",
    EQ16_GF => "EQ16_GF",
    EQ18_UMBRAL_DEG => "EQ18_UMBRAL_DEG",
    EQ20_RECURSION_DEG => "EQ20_RECURSION_DEG",
    EQ22_STIRLING_TRANSFORM => "EQ22_STIRLING_TRANSFORM",
    EQ23_25_28_NUMBERS => "EQ23_25_28_NUMBERS",
    EQ26_27_ORDERED_BELL => "EQ26_27_ORDERED_BELL",
    EQ30_FROBENIUS_FORM => "EQ30_FROBENIUS_FORM",
    EQ31_BELL_FROBENIUS => "EQ31_BELL_FROBENIUS",
    EQ41_Q_FORM => "EQ41_Q_FORM",
    EQ44_46_MOMENT => "EQ44_46_MOMENT",
    LIMIT_LAMBDA_ZERO => "LIMIT_LAMBDA_ZERO",
    BRIDGE_A_EQUALS_H => "BRIDGE_A_EQUALS_H",
    STIRLING_ORTHOGONALITY => "STIRLING_ORTHOGONALITY",
    BRUTE_FORCE_EULERIAN => "BRUTE_FORCE_EULERIAN",
}

impl IdentityId {
    /// Whether the check also ranges over a second index `m`.
    pub fn needs_second_index(self) -> bool {
        self == IdentityId::EQ11_POWER_SUM
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownIdentity(s.to_string()))
    }
}

/// Registry row: what a check compares and which operations produce each
/// side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityInfo {
    pub id: IdentityId,
    pub description: &'static str,
    pub anchor: &'static str,
    pub left: &'static str,
    pub right: &'static str,
}

const fn info(
    id: IdentityId,
    description: &'static str,
    anchor: &'static str,
    left: &'static str,
    right: &'static str,
) -> IdentityInfo {
    IdentityInfo { id, description, anchor, left, right }
}

use IdentityId as I;

static REGISTRY: [IdentityInfo; 27] = [
    info(I::EQ01_GF,
        "(Σ_k (k+1)^n x^k)(1-x)^{n+1} has coefficients <n,m>, checked as a series to order n_max+1",
        "Eq. (1), \"the generating function of Eulerian numbers is given by\"",
        "power_sum_series_times_binomial", "eulerian_closed_form"),
    info(I::EQ02_VS_EQ04,
        "Eulerian closed form equals the recurrence triangle",
        "Eq. (4), \"recurrence relation for Eulerian numbers as follows\"",
        "eulerian_closed_form", "eulerian_triangle"),
    info(I::EQ05_GF,
        "(Σ_n A_n(t) x^n/n!)·(e^{x(t-1)} - t) = 1 - t as a series to order n_max+1",
        "Eq. (5), \"are defined by the generating function\"",
        "eulerian_triangle_series_product", "one_minus_t"),
    info(I::EQ06_UMBRAL,
        "Σ_k C(n,k) A_k(t)(t-1)^{n-k} - t A_n(t) = (1-t)δ_{0,n}",
        "Eq. (6), \"where $\\delta_{n,k}$ is the Kronecker's symbol\"",
        "umbral_sum_from_triangle", "kronecker_delta"),
    info(I::EQ07_COEFFS,
        "n![x^n] of the Eulerian series equals Σ_l <n,l> t^l with closed-form coefficients",
        "Eq. (7), \"$A_n(t) = \\sum_{l=0}^n \\genfrac<>{0pt}{}{n}{l} t^l$\"",
        "eulerian_egf_inversion", "eulerian_poly_closed"),
    info(I::EQ08_TABLE,
        "A_k(t)/(1-t)^{k+1} = Σ_j (j+1)^k t^j to order 10 for k = 0..3, and the displayed A_2, A_3",
        "Eq. (8), \"The first few Eulerian polynomials are given by\"",
        "eulerian_triangle_over_power", "power_sum_coefficients"),
    info(I::EQ09_WORPITZKY,
        "Σ_{k<n} <n,k> C(x+k,n) = x^n as polynomials in x",
        "Eq. (9), \"The Worpitzky's identity expresses\"",
        "worpitzky_binomial_sum", "x_power"),
    info(I::EQ10_RECURSION,
        "A_n(t) = (1/(t-1)) Σ_{l<n} C(n,l) A_l(t)(t-1)^{n-l} with exact division",
        "Eq. (10), \"From \\eqref{06}, we note that\"",
        "eulerian_poly_recursive", "eulerian_triangle"),
    info(I::EQ11_POWER_SUM,
        "Power sums through Eulerian polynomials: left side Σ_{k=1}^m k^n t^k, as rational functions in t",
        "Eq. (11), \"where $m \\geq 1$ and $n \\geq 0$\"",
        "power_sum_polynomial", "eulerian_power_sum_formula"),
    info(I::EQ12_GF,
        "n![t^n] of the ordered Bell series equals Σ_k C(n,k) b_{k,λ} (x)_{n-k,λ}",
        "Eq. (12), \"the degenerate ordered Bell polynomials are defined by the generating function\"",
        "deg_ordered_bell_poly_egf", "binomial_convolution_of_stirling_transform"),
    info(I::EQ13_GF,
        "n![t^n] of (1-u)e^{xt}/(e^t-u) equals Σ_k C(n,k) H_k(u) x^{n-k}",
        "Eq. (13), \"the Frobenius-Euler polynomials are given by the generating function\"",
        "frobenius_euler_egf", "frobenius_euler_recurrence"),
    info(I::EQ14_GF,
        "n![t^n] (log(1+t))^k/k! equals the Stirling-1 triangle",
        "Eq. (14), \"Stirling numbers of the first kind and of the second kind\"",
        "log_series_power", "stirling1_triangle"),
    info(I::EQ15_GF,
        "n![t^n] (e^t-1)^k/k! equals the Stirling-2 triangle",
        "Eq. (15), \"$\\frac{1}{k!} \\big(e^t-1 \\big)^k$\"",
        "exp_series_power", "stirling2_triangle"),
    info(I::EQ16_GF,
        "n![x^n] (1-t)/((1+λx)^{(t-1)/λ} - t) equals the degenerate recursion",
        "Eq. (16), \"we consider the degenerate Eulerian polynomials given by the generating function\"",
        "deg_eulerian_egf_inversion", "deg_eulerian_poly_recursive"),
    info(I::EQ18_UMBRAL_DEG,
        "Σ_k C(n,k) A_{k,λ}(t)(t-1)_{n-k,λ} - t A_{n,λ}(t) = (1-t)δ_{0,n}",
        "Eq. (18), \"Comparing the coefficients on both sides of \\eqref{17}\"",
        "deg_umbral_sum_from_stirling_transform", "kronecker_delta"),
    info(I::EQ20_RECURSION_DEG,
        "the degenerate recursion with exact division by t-1 equals the Stirling transform",
        "Eq. (20), \"For $n \\geq 1$, we have\"",
        "deg_eulerian_poly_recursive", "deg_eulerian_stirling_transform"),
    info(I::EQ22_STIRLING_TRANSFORM,
        "A_{n,λ}(t) = Σ_k A_k(t) λ^{n-k} S_1(n,k) against the degenerate Eulerian series",
        "Eq. (22), \"by comparing the coefficients on both sides of \\eqref{21}\"",
        "deg_eulerian_stirling_transform", "deg_eulerian_egf_inversion"),
    info(I::EQ23_25_28_NUMBERS,
        "Eqs. (23), (25), (28): t-coefficients of A_{n,λ}(t), the single sum and the double sum agree",
        "Eq. (25), \"Comparing the coefficients on both sides of \\eqref{24}\"",
        "deg_eulerian_recursion_coefficients", "deg_eulerian_number_sums"),
    info(I::EQ26_27_ORDERED_BELL,
        "Eqs. (26), (27): b_{n,λ} from its series equals A_{n,λ}(2) and the double sum",
        "Eq. (26), \"By \\eqref{12} and \\eqref{16}, we get\"",
        "deg_ordered_bell_egf", "deg_eulerian_at_two"),
    info(I::EQ30_FROBENIUS_FORM,
        "A_{n,λ}(t) = Σ_k λ^{n-k} S_1(n,k) H_k(t)(t-1)^k against the degenerate Eulerian series",
        "Eq. (30), \"where $H_n(t)$ is the Frobenius-Euler numbers\"",
        "deg_eulerian_frobenius_form", "deg_eulerian_egf_inversion"),
    info(I::EQ31_BELL_FROBENIUS,
        "b_{n,λ} = Σ_k λ^{n-k} S_1(n,k) H_k(2) against its series",
        "Eq. (31), \"Let us take $t=2$. Then we have\"",
        "deg_ordered_bell_frobenius_form", "deg_ordered_bell_egf"),
    info(I::EQ41_Q_FORM,
        "A_{n,λ}(-q) = Σ_k (-1)^k λ^{n-k}(1+q)^k S_1(n,k) H_k(-q)",
        "Eq. (41), \"Comparing the coefficients on both sides of \\eqref{36} and \\eqref{40}\"",
        "deg_eulerian_recursion_at_minus_q", "q_form_stirling_sum"),
    info(I::EQ44_46_MOMENT,
        "Eqs. (44)-(46): Σ_l |S_{1,λ/(1+q)}(n,l)| H_l(-q) = (-1)^n A_{n,λ}(-q)/(1+q)^n, denominators divide (1+q)^n",
        "Eq. (46), \"Hence, by \\eqref{44} and \\eqref{46}, we get\"",
        "fermionic_moment", "moment_from_stirling_transform"),
    info(I::LIMIT_LAMBDA_ZERO,
        "A_{n,λ}(t) at λ = 0 is A_n(t)",
        "after Eq. (16), \"Note that $\\lim_{\\lambda  \\rightarrow 0} A_{n,\\lambda }(t) = A_n(t)$\"",
        "deg_eulerian_poly_recursive_at_zero", "eulerian_triangle"),
    info(I::BRIDGE_A_EQUALS_H,
        "A_n(t) = (t-1)^n H_n(t), linking the Eulerian and Frobenius-Euler series",
        "Eq. (5) and Eq. (13)",
        "eulerian_triangle", "frobenius_euler_recurrence_in_t"),
    info(I::STIRLING_ORTHOGONALITY,
        "Σ_k S_1(n,k) S_2(k,m) = δ_{n,m}",
        "Eqs. (14)-(15)",
        "stirling_triangle_product", "kronecker_delta"),
    info(I::BRUTE_FORCE_EULERIAN,
        "ascent counts over all permutations of 1..n equal the Eulerian triangle, n <= 8",
        "Eulerian number definition, \"exactly $m$ elements are greater than the previous element\"",
        "permutation_enumeration", "eulerian_triangle"),
];

/// Every registered identity, in tag order.
pub fn list_identities() -> &'static [IdentityInfo] {
    &REGISTRY
}

pub fn identity_info(id: IdentityId) -> &'static IdentityInfo {
    REGISTRY.iter().find(|i| i.id == id).expect("every id is registered")
}
