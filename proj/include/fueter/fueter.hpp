#pragma once

#include <optional>
#include <vector>

#include "fueter/radial_calc.hpp"
#include "fueter/radial_expr.hpp"
#include "fueter/seed.hpp"

namespace fueter {

/// Scalar radial profiles of a biaxial function.
/// Plus:  (first + omega nu second) P_k P_l   i.e. (A, B)
/// Minus: (omega first + nu second) P_k P_l   i.e. (C, D)
struct BiaxialComponents {
  Variant kind = Variant::Plus;
  BivariateRadial first;
  BivariateRadial second;
  friend bool operator==(const BiaxialComponents&, const BiaxialComponents&) = default;
};

struct FischerLayer {
  int n = 0;                // power of the vector variable
  RadialExpr component;     // monogenic, homogeneous of degree K - n
};

/// Delta^{k+l+(m-2)/2} of (u + omega nu v) Hk Hl (Plus) or (omega u + nu v) Hk Hl
/// (Minus). Hk, Hl are homogeneous polynomials in the x- resp. y-group, valued in
/// R_p resp. R_q; w must be antiholomorphic. The result is checked to be monogenic.
RadialExpr ft_biaxial(const SeedFunction& w, const RadialExpr& hk, const RadialExpr& hl,
                      Variant variant);
inline RadialExpr ft_plus(const SeedFunction& w, const RadialExpr& hk, const RadialExpr& hl) {
  return ft_biaxial(w, hk, hl, Variant::Plus);
}
inline RadialExpr ft_minus(const SeedFunction& w, const RadialExpr& hk, const RadialExpr& hl) {
  return ft_biaxial(w, hk, hl, Variant::Minus);
}

/// Higher-order map: Delta^{mu+k+l+(m-2)/2} of the same integrand, for
/// monogenic Pk, Pl and seeds with d_z Delta^mu w = 0. mu defaults to the
/// seed's recomputed order; an override must not be smaller.
RadialExpr ft_mu(const SeedFunction& w, const RadialExpr& pk, const RadialExpr& pl, Variant variant,
                 std::optional<int> mu_override = std::nullopt);

struct ClosedFormData {
  Integer constant;              // (2k+p-1)!! (2l+q-1)!! multinomial(N; J1, J2)
  BiaxialComponents components;  // unscaled (A, B) or (C, D)
  int mu = 0;
  int exponent = 0;              // N = mu + k + l + (m-2)/2
};

ClosedFormData closed_form_data(const SeedFunction& w, const BiaxialParams& params,
                                Variant variant, int mu);

/// constant * (A + omega nu B) Pk Pl or constant * (omega C + nu D) Pk Pl.
RadialExpr ft_closed_form(const SeedFunction& w, const RadialExpr& pk, const RadialExpr& pl,
                          Variant variant, std::optional<int> mu_override = std::nullopt);

/// Classical map in R^{m+1}: (d_X0^2 + Delta)^{K+(m-1)/2} of
/// (u(X0, R) + (X/R) v(X0, R)) PK for holomorphic w and odd m. The frame must
/// be (m, 0) with the scalar axis.
RadialExpr fueter_classical(const SeedFunction& w, const RadialExpr& pk);
/// (2K+m-1)!! ((R^-1 d_R)^N u + (X/R) (d_R R^-1)^N v) PK.
RadialExpr classical_closed_form(const SeedFunction& w, const RadialExpr& pk);

/// H = sum_n x^n P_{K-n} for a homogeneous polynomial H in the group's
/// coordinates. Layers n = 0..K, each monogenic (possibly zero).
std::vector<FischerLayer> fischer_decompose(const RadialExpr& h, Group group);

/// Fischer route: Fischer layers, parity split, and one higher-order map
/// per (n1, n2) with seed w * h(x, y). Equals ft_biaxial.
RadialExpr ft_general_via_fischer(const SeedFunction& w, const RadialExpr& hk,
                                  const RadialExpr& hl, Variant variant);

/// Recovers (A, B) or (C, D) from an expression of the corresponding biaxial
/// shape. Throws PreconditionError on a shape mismatch.
BiaxialComponents extract_components(const RadialExpr& f, const RadialExpr& pk,
                                     const RadialExpr& pl, Variant kind);

/// The Vekua-type first-order systems satisfied by biaxial monogenic profiles.
bool vekua_check(const BiaxialComponents& comp, const BiaxialParams& params);

/// Splits a Clifford-valued expression by blade cardinality.
struct ExprParity {
  RadialExpr even;
  RadialExpr odd;
};
ExprParity parity_split(const RadialExpr& f);

/// Scalar expression u(r, rho) (plus omega nu v or the minus form) from real
/// seed parts, times Pk Pl.
RadialExpr biaxial_integrand(const BivariateRadial& u, const BivariateRadial& v,
                             const RadialExpr& pk, const RadialExpr& pl, Variant variant);

}  // namespace fueter
