#include "jumpcalc/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jumpcalc {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

TruncatedPoly::TruncatedPoly(std::size_t nvars, int order) : nvars_(nvars), order_(order) {
  if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
}

TruncatedPoly TruncatedPoly::constant(std::size_t nvars, int order, const Rational& value) {
  TruncatedPoly p(nvars, order);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

TruncatedPoly TruncatedPoly::variable(std::size_t nvars, int order, std::size_t index,
                                      const Rational& coeff) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  TruncatedPoly p(nvars, order);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, coeff);
  return p;
}

TruncatedPoly TruncatedPoly::monomial(int order, const Exponents& e, const Rational& coeff) {
  TruncatedPoly p(e.size(), order);
  p.add_term(e, coeff);
  return p;
}

int TruncatedPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool TruncatedPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return total_degree(t.first) == degree; });
}

Rational TruncatedPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

void TruncatedPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (coeff == 0 || total_degree(e) > order_) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedPoly TruncatedPoly::homogeneous_part(int degree) const {
  TruncatedPoly out(nvars_, order_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

TruncatedPoly TruncatedPoly::with_order(int order) const {
  TruncatedPoly out(nvars_, order);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  const int order = std::min(a.order_, b.order_);
  // Bucket by degree so pairs beyond the truncation are never visited.
  auto bucket = [order](const TruncatedPoly& p) {
    std::vector<std::vector<const std::pair<const Exponents, Rational>*>> by_degree(order + 1);
    for (const auto& t : p.terms_) {
      const int d = total_degree(t.first);
      if (d <= order) by_degree[d].push_back(&t);
    }
    return by_degree;
  };
  const auto ba = bucket(a);
  const auto bb = bucket(b);
  TruncatedPoly out(a.nvars_, order);
  Exponents e(a.nvars_);
  for (int da = 0; da <= order; ++da) {
    for (int db = 0; da + db <= order; ++db) {
      for (const auto* ta : ba[da]) {
        for (const auto* tb : bb[db]) {
          for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<std::uint8_t>(ta->first[i] + tb->first[i]);
          }
          out.add_term(e, ta->second * tb->second);
        }
      }
    }
  }
  return out;
}

std::string TruncatedPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Highest degree first, then lexicographically descending exponents.
  std::vector<const std::pair<const Exponents, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const int dx = total_degree(x->first);
    const int dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "c" + std::to_string(i);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    if (mono.empty()) {
      out << jumpcalc::to_string(c);
    } else if (c == 1) {
      out << mono;
    } else {
      out << jumpcalc::to_string(c) << "*" << mono;
    }
  }
  return out.str();
}

UnivariateSeries::UnivariateSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("univariate series needs at least one coefficient");
}

UnivariateSeries q_series(int order) {
  if (order < 0) throw std::invalid_argument("q_series: order must be >= 0");
  const auto len = static_cast<std::size_t>(order) + 1;
  // 1 - exp(-x) = x * sum_k (-1)^k x^k / (k+1)!; divide x by it.
  std::vector<Rational> den(len);
  for (std::size_t k = 0; k < len; ++k) {
    den[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k + 1));
  }
  std::vector<Rational> q(len);
  q[0] = 1 / den[0];
  for (std::size_t k = 1; k < len; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += den[i] * q[k - i];
    q[k] = -acc / den[0];
  }
  return UnivariateSeries(std::move(q));
}

namespace {

TruncatedPoly inverse_of_unit(const TruncatedPoly& s) {
  // (1 + h)^{-1} = sum_j (-h)^j, and h^j vanishes past the truncation order.
  TruncatedPoly minus_h = TruncatedPoly::constant(s.nvars(), s.order(), 1) - s;
  TruncatedPoly result = TruncatedPoly::constant(s.nvars(), s.order(), 1);
  TruncatedPoly power = result;
  for (int j = 1; j <= s.order(); ++j) {
    power = power * minus_h;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

}  // namespace

TruncatedPoly series_pow(const TruncatedPoly& s, int k) {
  if (s.constant_term() != 1) throw std::invalid_argument("series_pow: constant term must be 1");
  TruncatedPoly base = k < 0 ? inverse_of_unit(s) : s;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  TruncatedPoly result = TruncatedPoly::constant(s.nvars(), s.order(), 1);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedPoly substitute_linear(const UnivariateSeries& s, const TruncatedPoly& linear) {
  if (!linear.is_homogeneous(1)) {
    throw std::invalid_argument("substitute_linear: argument must be a linear form");
  }
  TruncatedPoly result(linear.nvars(), linear.order());
  TruncatedPoly power = TruncatedPoly::constant(linear.nvars(), linear.order(), 1);
  for (int k = 0; k <= std::min(s.order(), linear.order()); ++k) {
    if (k > 0) power = power * linear;
    if (power.is_zero()) break;
    result += power * s[static_cast<std::size_t>(k)];
  }
  return result;
}

}  // namespace jumpcalc
