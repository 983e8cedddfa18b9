#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vincular/combinat.hpp"

namespace vincular {

// Formal power series truncated at a fixed order, with exact integer
// coefficients. Arithmetic results carry the minimum order of the operands.
// The coefficient ring stays the integers: inversion is restricted to
// constant term +-1, which covers every series this library divides by.
class TruncatedSeries {
 public:
  // zero series of the given order
  explicit TruncatedSeries(int order);
  // pads with zeros / truncates the given coefficients to order+1 entries
  TruncatedSeries(int order, std::vector<BigCount> coeffs);

  static TruncatedSeries monomial(int order, int degree,
                                  const BigCount& coefficient = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigCount& coeff(int k) const {
    return coeffs_.at(static_cast<size_t>(k));
  }
  const std::vector<BigCount>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(int new_order) const;

  TruncatedSeries operator+(const TruncatedSeries&) const;
  TruncatedSeries operator-(const TruncatedSeries&) const;
  TruncatedSeries operator*(const TruncatedSeries&) const;

  // multiplicative inverse through the order; throws std::domain_error unless
  // the constant term is +1 or -1 (keeps coefficients integral)
  TruncatedSeries invert_unit() const;

  // a(x/(1-x)) through the order, by Horner-style accumulation: starting from
  // the top coefficient, alternate "multiply by x, then by 1/(1-x)" and add
  // the next coefficient down. Exact per coefficient: the substituted series
  // has valuation 1.
  TruncatedSeries compose_x_over_1mx() const;

  bool is_zero() const;
  // smallest k with a nonzero coefficient, or -1 for the zero series
  int first_nonzero() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigCount> coeffs_;  // size order+1
};

// The series B with B_n = sum_{j=0}^n C(n,j) a_{j+d}, computed through the
// substitution formula (1-x)^{d-1}/x^d [A(x/(1-x)) - sum_{j<d} a_j (x/(1-x))^j];
// at d = 0 the leading factor means division by (1-x). The bracket is
// divisible by x^d by construction; a nonzero remainder throws
// std::logic_error. Result order = a.order() - d. Requires 0 <= d <= order.
TruncatedSeries binomial_transform(const TruncatedSeries& a, int d);

// sum_{k>=0} x^k / ((1-x)(1-2x)...(1-kx)) through the order; the coefficients
// are the Bell numbers (the k-th term has valuation k, so the sum is finite).
TruncatedSeries bell_ogf(int order);

// First-occurrence generating function for the 12-3 family:
// sum_{n>=1} x/(1-nx) sum_{k>=0} k x^{k+n} / ((1-x)...(1-(k+n)x)).
TruncatedSeries u1_closed_form(int order);

// First-occurrence generating function for the 23-1 family: same double sum
// with the outer factor x/(1-(n-1)x).
TruncatedSeries v1_closed_form(int order);

// Occurrence-count generating function values for the 2-13 family, r <= 3:
//   r=0: C(2n,n)/(n+1)          r=1: C(2n, n-3)
//   r=2: n(n-3)/(2(n+4)) C(2n,n-3)
//   r=3: (1/3) C(n+2,2) C(2n,n-5)
// The rational prefactors divide exactly; a nonzero remainder throws
// std::logic_error (it would mean the formula was mistranscribed).
BigCount w_closed_form(int r, int n);

// ---------------------------------------------------------------------------
// Multivariate layer: series in t whose coefficients are sparse polynomials in
// the auxiliary variables (x, y, p, q), stored as exponent-quadruple -> count.

using ExponentQuad = std::array<int, 4>;  // (e_x, e_y, e_p, e_q)
using AuxPoly = std::map<ExponentQuad, BigCount>;

class MultiSeries {
 public:
  explicit MultiSeries(int order);  // zero
  static MultiSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const AuxPoly& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  AuxPoly& coeff_mut(int k) { return coeffs_.at(static_cast<size_t>(k)); }

  MultiSeries operator+(const MultiSeries&) const;
  MultiSeries operator-(const MultiSeries&) const;
  MultiSeries operator*(const MultiSeries&) const;

  // inverse through the t-order; the t^0 coefficient must be the constant
  // polynomial 1 (always the case for the continued-fraction denominators)
  MultiSeries invert_unit() const;

  // substitute 1 for every auxiliary variable
  TruncatedSeries at_ones() const;

  // coefficient of p^r in the t^k coefficient, requiring all other auxiliary
  // exponents zero (the univariate-in-p case)
  BigCount p_coefficient(int k, int r) const;
  // largest p-exponent present at t^k (0 for an empty coefficient)
  int max_p_exponent(int k) const;

  bool operator==(const MultiSeries&) const = default;

 private:
  std::vector<AuxPoly> coeffs_;  // per t-degree
};

// A Stieltjes continued fraction 1/(1 - c_1 t/(1 - c_2 t/(...))) given by its
// level numerators c_1, c_2, ... (auxiliary-variable polynomials).
struct ContinuedFractionSpec {
  std::vector<AuxPoly> numerators;  // numerators[L-1] is level L
  int depth = 0;                    // == numerators.size()
};

// Occurrence counter for the 2-13 family: level L numerator is
// 1 + p + ... + p^{m-1} with m = ceil(L/2). Depth defaults to order+2; the
// levels variant builds an explicit depth for stability re-checks.
ContinuedFractionSpec cf_2d13_levels(int depth);
ContinuedFractionSpec cf_2d13_spec(int order);

// Joint statistic counter: level L numerator is x (L odd) or y (L even) times
// q^{m-1} + p q^{m-2} + ... + p^{m-1}, m = ceil(L/2). The x-offset of the
// counted monomial x^{1+ascents} is realized inside the numerators; no outer
// factor is applied.
ContinuedFractionSpec cf_csz_levels(int depth);
ContinuedFractionSpec cf_csz_spec(int order);

// Evaluates the finite continued fraction bottom-up: W <- 1, then
// W <- 1/(1 - numerator_L * t * W) from the deepest level to level 1, all
// arithmetic truncated at the t-order. Requires spec.depth >= order + 1
// (each level contributes one factor of t, so the result is then exact
// through the order).
MultiSeries eval_stieltjes(const ContinuedFractionSpec& spec, int order);

// The four functional equations relating the occurrence generating functions
// of the 12-3 family (U) and the 23-1 family (V), transcribed exactly as
// stated; o abbreviates substitution of x/(1-x):
//   U1:  U_1 = x/(1-x) (U_1(o) + U_0(o) - U_0)
//   U2:  U_2 = x/((1-x)^2 (1-2x)) (U_2(o) - (1-x) U_2
//              + U_1(o) - (1-x)^2 U_1 + U_0(o) - (1-x)^2 U_0)
//   V1:  V_1 = x/(1-x) V_1(o) + x (V_0(o) - V_0)
//   V2:  V_2 = x/(1-x) (V_2(o) + (1-2x) V_1(o) + (1-3x+x^2) V_0(o)) - x + x^2
enum class FunctionalEq { U1, U2, V1, V2 };

// LHS - RHS of the chosen equation through the given order. Inputs are keyed
// "U0"/"U1"/"U2" or "V0"/"V1"/"V2" as the equation requires, each of order >=
// the requested order; a missing input throws std::invalid_argument. A correct
// equation with correct inputs yields the zero series. The U2 equation as
// stated above does NOT: its residual is nonzero from order 2 on even with
// exhaustively verified inputs, while the recurrence route for the same
// quantity checks out — the equation itself carries the error. It is kept
// verbatim and the verification surface reports the failing order.
TruncatedSeries functional_eq_residual(
    FunctionalEq which, const std::map<std::string, TruncatedSeries>& inputs,
    int order);

}  // namespace vincular
