#include "vincular/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vincular {

namespace {

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// 1 - c x as a series of the given order
TruncatedSeries one_minus_cx(int order, long c) {
  TruncatedSeries s = TruncatedSeries::monomial(order, 0);
  if (order >= 1) return s - TruncatedSeries::monomial(order, 1, c);
  return s;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigCount> coeffs)
    : TruncatedSeries(order) {
  const size_t keep = std::min(coeffs.size(), coeffs_.size());
  for (size_t k = 0; k < keep; ++k) coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree,
                                          const BigCount& coefficient) {
  TruncatedSeries s(order);
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = coefficient;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order())
    throw std::invalid_argument("truncated: cannot extend a series");
  return TruncatedSeries(new_order, coeffs_);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out(min_order(*this, rhs));
  for (int k = 0; k <= out.order(); ++k)
    out.coeffs_[static_cast<size_t>(k)] =
        coeffs_[static_cast<size_t>(k)] + rhs.coeffs_[static_cast<size_t>(k)];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out(min_order(*this, rhs));
  for (int k = 0; k <= out.order(); ++k)
    out.coeffs_[static_cast<size_t>(k)] =
        coeffs_[static_cast<size_t>(k)] - rhs.coeffs_[static_cast<size_t>(k)];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  TruncatedSeries out(min_order(*this, rhs));
  const int n = out.order();
  for (int i = 0; i <= n; ++i) {
    const BigCount& a = coeffs_[static_cast<size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      out.coeffs_[static_cast<size_t>(i + j)] +=
          a * rhs.coeffs_[static_cast<size_t>(j)];
  }
  return out;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
  const BigCount& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error(
        "invert_unit: constant term must be +1 or -1, got " + c0.get_str());
  TruncatedSeries out(order());
  out.coeffs_[0] = c0;  // 1/1 = 1, 1/(-1) = -1
  for (int n = 1; n <= order(); ++n) {
    BigCount acc = 0;
    for (int k = 1; k <= n; ++k)
      acc += coeffs_[static_cast<size_t>(k)] *
             out.coeffs_[static_cast<size_t>(n - k)];
    out.coeffs_[static_cast<size_t>(n)] = -c0 * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::compose_x_over_1mx() const {
  const int n = order();
  const TruncatedSeries inv_1mx = one_minus_cx(n, 1).invert_unit();
  // Horner from the top: acc <- acc * x/(1-x) + c_k
  TruncatedSeries acc = TruncatedSeries::monomial(n, 0, coeffs_.back());
  for (int k = n - 1; k >= 0; --k) {
    // multiply by x (shift) ...
    TruncatedSeries shifted(n);
    for (int j = 0; j < n; ++j)
      shifted.coeffs_[static_cast<size_t>(j) + 1] =
          acc.coeffs_[static_cast<size_t>(j)];
    // ... then by 1/(1-x), then add the next coefficient down
    acc = shifted * inv_1mx;
    acc.coeffs_[0] += coeffs_[static_cast<size_t>(k)];
  }
  return acc;
}

bool TruncatedSeries::is_zero() const { return first_nonzero() == -1; }

int TruncatedSeries::first_nonzero() const {
  for (int k = 0; k <= order(); ++k)
    if (coeffs_[static_cast<size_t>(k)] != 0) return k;
  return -1;
}

TruncatedSeries binomial_transform(const TruncatedSeries& a, int d) {
  if (d < 0 || d > a.order())
    throw std::invalid_argument("binomial_transform: requires 0 <= d <= order");
  const int n = a.order();
  TruncatedSeries bracket = a.compose_x_over_1mx();
  // subtract sum_{j<d} a_j (x/(1-x))^j
  const TruncatedSeries x_over_1mx =
      TruncatedSeries::monomial(n, 1) * one_minus_cx(n, 1).invert_unit();
  TruncatedSeries power = TruncatedSeries::monomial(n, 0);
  for (int j = 0; j < d; ++j) {
    bracket = bracket - TruncatedSeries::monomial(n, 0, a.coeff(j)) * power;
    power = power * x_over_1mx;
  }
  // divide by x^d; the bracket must have valuation >= d
  for (int k = 0; k < d; ++k)
    if (bracket.coeff(k) != 0)
      throw std::logic_error(
          "binomial_transform: nonzero remainder below degree 0");
  TruncatedSeries shifted(n - d);
  {
    std::vector<BigCount> tail(
        bracket.coeffs().begin() + d, bracket.coeffs().end());
    shifted = TruncatedSeries(n - d, std::move(tail));
  }
  // apply (1-x)^{d-1}; d = 0 reads as division by (1-x)
  if (d == 0) return shifted * one_minus_cx(n, 1).invert_unit();
  TruncatedSeries out = shifted;
  for (int k = 0; k < d - 1; ++k) out = out * one_minus_cx(n - d, 1);
  return out;
}

TruncatedSeries bell_ogf(int order) {
  TruncatedSeries sum = TruncatedSeries::monomial(order, 0);  // k = 0 term
  TruncatedSeries term = sum;
  for (int k = 1; k <= order; ++k) {
    term = term * TruncatedSeries::monomial(order, 1) *
           one_minus_cx(order, k).invert_unit();
    sum = sum + term;
  }
  return sum;
}

namespace {

// shared double-sum for the first-occurrence closed forms; outer_shift is 0
// for the 12-3 family (factor x/(1-nx)) and 1 for the 23-1 family (x/(1-(n-1)x))
TruncatedSeries first_occurrence_closed_form(int order, int outer_shift) {
  TruncatedSeries out(order);
  // prefix products 1/((1-x)...(1-mx)), extended on demand
  std::vector<TruncatedSeries> prefix{TruncatedSeries::monomial(order, 0)};
  auto prefix_product = [&](int m) -> const TruncatedSeries& {
    while (static_cast<int>(prefix.size()) <= m)
      prefix.push_back(
          prefix.back() *
          one_minus_cx(order, static_cast<long>(prefix.size())).invert_unit());
    return prefix[static_cast<size_t>(m)];
  };
  for (int n = 1; n <= order; ++n) {
    // inner sum over k >= 1; the (n, k) term has valuation 1 + k + n
    TruncatedSeries inner(order);
    bool any = false;
    for (int k = 1; k + n <= order; ++k) {
      inner = inner + TruncatedSeries::monomial(order, k + n, k) *
                          prefix_product(k + n);
      any = true;
    }
    if (!any) break;
    const TruncatedSeries outer =
        TruncatedSeries::monomial(order, 1) *
        one_minus_cx(order, n - outer_shift).invert_unit();
    out = out + outer * inner;
  }
  return out;
}

}  // namespace

TruncatedSeries u1_closed_form(int order) {
  return first_occurrence_closed_form(order, 0);
}

TruncatedSeries v1_closed_form(int order) {
  return first_occurrence_closed_form(order, 1);
}

BigCount w_closed_form(int r, int n) {
  if (n < 0) throw std::invalid_argument("w_closed_form: n must be >= 0");
  auto exact_quotient = [](const BigCount& numerator, const BigCount& divisor) {
    if (divisor == 0 || !mpz_divisible_p(numerator.get_mpz_t(),
                                         divisor.get_mpz_t()))
      throw std::logic_error("w_closed_form: non-exact division");
    BigCount out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
    return out;
  };
  switch (r) {
    case 0:
      return catalan(n);
    case 1:
      return binomial(2L * n, n - 3L);
    case 2: {
      const BigCount base = binomial(2L * n, n - 3L);
      if (base == 0) return 0;
      return exact_quotient(BigCount(n) * (n - 3) * base, BigCount(2) * (n + 4));
    }
    case 3: {
      const BigCount base = binomial(2L * n, n - 5L);
      if (base == 0) return 0;
      return exact_quotient(binomial(n + 2L, 2L) * base, 3);
    }
    default:
      throw std::invalid_argument("w_closed_form: r must be in 0..3");
  }
}

// ---------------------------------------------------------------------------

namespace {

ExponentQuad add_exponents(const ExponentQuad& a, const ExponentQuad& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

void add_term(AuxPoly& poly, const ExponentQuad& e, const BigCount& c) {
  auto it = poly.find(e);
  if (it == poly.end()) {
    if (c != 0) poly.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) poly.erase(it);
}

const AuxPoly kOnePoly{{ExponentQuad{0, 0, 0, 0}, BigCount(1)}};

}  // namespace

MultiSeries::MultiSeries(int order) {
  if (order < 0) throw std::invalid_argument("MultiSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, {});
}

MultiSeries MultiSeries::one(int order) {
  MultiSeries s(order);
  s.coeffs_[0] = kOnePoly;
  return s;
}

MultiSeries MultiSeries::operator+(const MultiSeries& rhs) const {
  MultiSeries out(std::min(order(), rhs.order()));
  for (int k = 0; k <= out.order(); ++k) {
    out.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    for (const auto& [e, c] : rhs.coeffs_[static_cast<size_t>(k)])
      add_term(out.coeffs_[static_cast<size_t>(k)], e, c);
  }
  return out;
}

MultiSeries MultiSeries::operator-(const MultiSeries& rhs) const {
  MultiSeries out(std::min(order(), rhs.order()));
  for (int k = 0; k <= out.order(); ++k) {
    out.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    for (const auto& [e, c] : rhs.coeffs_[static_cast<size_t>(k)])
      add_term(out.coeffs_[static_cast<size_t>(k)], e, -c);
  }
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& rhs) const {
  MultiSeries out(std::min(order(), rhs.order()));
  const int n = out.order();
  for (int i = 0; i <= n; ++i) {
    const AuxPoly& a = coeffs_[static_cast<size_t>(i)];
    if (a.empty()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const AuxPoly& b = rhs.coeffs_[static_cast<size_t>(j)];
      if (b.empty()) continue;
      for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
          add_term(out.coeffs_[static_cast<size_t>(i + j)],
                   add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::invert_unit() const {
  if (coeffs_[0] != kOnePoly)
    throw std::domain_error(
        "MultiSeries::invert_unit: t^0 coefficient must be the constant 1");
  MultiSeries out = MultiSeries::one(order());
  for (int n = 1; n <= order(); ++n) {
    AuxPoly acc;
    for (int k = 1; k <= n; ++k)
      for (const auto& [ea, ca] : coeffs_[static_cast<size_t>(k)])
        for (const auto& [eb, cb] : out.coeffs_[static_cast<size_t>(n - k)])
          add_term(acc, add_exponents(ea, eb), ca * cb);
    AuxPoly& target = out.coeffs_[static_cast<size_t>(n)];
    target.clear();
    for (const auto& [e, c] : acc) add_term(target, e, -c);
  }
  return out;
}

TruncatedSeries MultiSeries::at_ones() const {
  std::vector<BigCount> values(static_cast<size_t>(order()) + 1, 0);
  for (int k = 0; k <= order(); ++k) {
    BigCount sum = 0;
    for (const auto& [e, c] : coeffs_[static_cast<size_t>(k)]) sum += c;
    values[static_cast<size_t>(k)] = std::move(sum);
  }
  return TruncatedSeries(order(), std::move(values));
}

BigCount MultiSeries::p_coefficient(int k, int r) const {
  const AuxPoly& poly = coeffs_.at(static_cast<size_t>(k));
  for (const auto& [e, c] : poly)
    if (e[0] != 0 || e[1] != 0 || e[3] != 0)
      throw std::logic_error(
          "p_coefficient: coefficient involves variables besides p");
  const auto it = poly.find(ExponentQuad{0, 0, r, 0});
  return it == poly.end() ? BigCount(0) : it->second;
}

int MultiSeries::max_p_exponent(int k) const {
  int best = 0;
  for (const auto& [e, c] : coeffs_.at(static_cast<size_t>(k)))
    best = std::max(best, e[2]);
  return best;
}

ContinuedFractionSpec cf_2d13_levels(int depth) {
  if (depth < 1) throw std::invalid_argument("cf_2d13_levels: depth must be >= 1");
  ContinuedFractionSpec spec;
  spec.depth = depth;
  for (int level = 1; level <= depth; ++level) {
    const int m = (level + 1) / 2;  // ceil(level/2)
    AuxPoly numerator;
    for (int a = 0; a < m; ++a) numerator[{0, 0, a, 0}] = 1;  // 1+p+...+p^{m-1}
    spec.numerators.push_back(std::move(numerator));
  }
  return spec;
}

ContinuedFractionSpec cf_2d13_spec(int order) {
  return cf_2d13_levels(order + 2);
}

ContinuedFractionSpec cf_csz_levels(int depth) {
  if (depth < 1) throw std::invalid_argument("cf_csz_levels: depth must be >= 1");
  ContinuedFractionSpec spec;
  spec.depth = depth;
  for (int level = 1; level <= depth; ++level) {
    const int m = (level + 1) / 2;
    AuxPoly numerator;
    for (int a = 0; a < m; ++a) {
      // q^{m-1} + p q^{m-2} + ... + p^{m-1}, times x at odd levels, y at even
      const bool odd = level % 2 == 1;
      numerator[{odd ? 1 : 0, odd ? 0 : 1, a, m - 1 - a}] = 1;
    }
    spec.numerators.push_back(std::move(numerator));
  }
  return spec;
}

ContinuedFractionSpec cf_csz_spec(int order) {
  return cf_csz_levels(order + 2);
}

MultiSeries eval_stieltjes(const ContinuedFractionSpec& spec, int order) {
  if (spec.depth != static_cast<int>(spec.numerators.size()))
    throw std::invalid_argument(
        "eval_stieltjes: spec.depth disagrees with the numerator list");
  if (spec.depth < order + 1)
    throw std::invalid_argument(
        "eval_stieltjes: depth must be at least order + 1");
  MultiSeries w = MultiSeries::one(order);
  for (int level = spec.depth; level >= 1; --level) {
    // W <- 1/(1 - numerator * t * W)
    MultiSeries numerator_t(order);
    if (order >= 1)
      numerator_t.coeff_mut(1) =
          spec.numerators[static_cast<size_t>(level) - 1];
    w = (MultiSeries::one(order) - numerator_t * w).invert_unit();
  }
  return w;
}

TruncatedSeries functional_eq_residual(
    FunctionalEq which, const std::map<std::string, TruncatedSeries>& inputs,
    int order) {
  auto input = [&](const char* key) {
    const auto it = inputs.find(key);
    if (it == inputs.end())
      throw std::invalid_argument(
          std::string("functional_eq_residual: missing input series ") + key);
    if (it->second.order() < order)
      throw std::invalid_argument(
          std::string("functional_eq_residual: input ") + key +
          " has order below the requested order");
    return it->second.truncated(order);
  };
  const TruncatedSeries x = TruncatedSeries::monomial(order, 1);
  const TruncatedSeries one_minus_x = one_minus_cx(order, 1);
  const TruncatedSeries x_over_1mx = x * one_minus_x.invert_unit();

  switch (which) {
    case FunctionalEq::U1: {
      const TruncatedSeries u0 = input("U0"), u1 = input("U1");
      const TruncatedSeries rhs =
          x_over_1mx *
          (u1.compose_x_over_1mx() + u0.compose_x_over_1mx() - u0);
      return u1 - rhs;
    }
    case FunctionalEq::U2: {
      const TruncatedSeries u0 = input("U0"), u1 = input("U1"),
                            u2 = input("U2");
      const TruncatedSeries one_minus_x_sq = one_minus_x * one_minus_x;
      const TruncatedSeries prefactor =
          x * (one_minus_x_sq * one_minus_cx(order, 2)).invert_unit();
      const TruncatedSeries bracket =
          u2.compose_x_over_1mx() - one_minus_x * u2 +
          u1.compose_x_over_1mx() - one_minus_x_sq * u1 +
          u0.compose_x_over_1mx() - one_minus_x_sq * u0;
      return u2 - prefactor * bracket;
    }
    case FunctionalEq::V1: {
      const TruncatedSeries v0 = input("V0"), v1 = input("V1");
      const TruncatedSeries rhs =
          x_over_1mx * v1.compose_x_over_1mx() +
          x * (v0.compose_x_over_1mx() - v0);
      return v1 - rhs;
    }
    case FunctionalEq::V2: {
      const TruncatedSeries v0 = input("V0"), v1 = input("V1"),
                            v2 = input("V2");
      const TruncatedSeries quadratic =
          TruncatedSeries::monomial(order, 0) -
          TruncatedSeries::monomial(order, 1, 3) +
          TruncatedSeries::monomial(order, 2);  // 1 - 3x + x^2
      const TruncatedSeries rhs =
          x_over_1mx * (v2.compose_x_over_1mx() +
                        one_minus_cx(order, 2) * v1.compose_x_over_1mx() +
                        quadratic * v0.compose_x_over_1mx()) -
          x + TruncatedSeries::monomial(order, 2);
      return v2 - rhs;
    }
  }
  throw std::logic_error("functional_eq_residual: unreachable");
}

}  // namespace vincular
