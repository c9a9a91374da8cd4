#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace liouville::special {

/// Sparse polynomial in two variables (x, y) over a coefficient ring T.
///
/// T only needs +, -, * and construction from int; instantiated with double
/// for evaluation and with an exact rational type for symbolic checks.
template <class T>
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;  // (power of x, power of y)

  BiPoly() = default;

  static BiPoly x() { return monomial(T(1), 1, 0); }
  static BiPoly y() { return monomial(T(1), 0, 1); }
  static BiPoly constant(T c) { return monomial(std::move(c), 0, 0); }

  static BiPoly monomial(T c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, std::move(c));
    return p;
  }

  /// Univariate polynomial in x from coefficients c[0] + c[1] x + ...
  static BiPoly in_x(const std::vector<T>& c) {
    BiPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), 0, c[i]);
    return p;
  }

  [[nodiscard]] const std::map<Exponent, T>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  [[nodiscard]] int degree_x() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  [[nodiscard]] int degree_y() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  [[nodiscard]] T coefficient(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(int i, int j, const T& c) {
    if (c == T(0)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

  [[nodiscard]] BiPoly d_dx() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
      if (e.first > 0) r.add_term(e.first - 1, e.second, c * T(e.first));
    }
    return r;
  }

  [[nodiscard]] BiPoly d_dy() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
      if (e.second > 0) r.add_term(e.first, e.second - 1, c * T(e.second));
    }
    return r;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, T(0) - c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    return r;
  }

  /// Value at (x, y) in any type the coefficients multiply into.
  template <class S>
  [[nodiscard]] S evaluate(const S& xv, const S& yv) const {
    std::vector<S> xp(static_cast<std::size_t>(degree_x()) + 1, S(1));
    std::vector<S> yp(static_cast<std::size_t>(degree_y()) + 1, S(1));
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * xv;
    for (std::size_t j = 1; j < yp.size(); ++j) yp[j] = yp[j - 1] * yv;
    S sum(0);
    for (const auto& [e, c] : terms_) sum = sum + S(c) * xp[e.first] * yp[e.second];
    return sum;
  }

 private:
  std::map<Exponent, T> terms_;
};

/// Dense form for repeated double evaluation: flat arrays of (i, j, c).
struct DenseBiPoly {
  std::vector<int> px;
  std::vector<int> py;
  std::vector<double> coeff;
  int max_x = 0;
  int max_y = 0;

  template <class T>
  static DenseBiPoly from(const BiPoly<T>& p) {
    DenseBiPoly d;
    for (const auto& [e, c] : p.terms()) {
      d.px.push_back(e.first);
      d.py.push_back(e.second);
      d.coeff.push_back(static_cast<double>(c));
      d.max_x = std::max(d.max_x, e.first);
      d.max_y = std::max(d.max_y, e.second);
    }
    return d;
  }

  /// Uses precomputed power tables xp[i] = x^i, yp[j] = y^j.
  [[nodiscard]] double evaluate(const std::vector<double>& xp, const std::vector<double>& yp) const {
    double s = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) s += coeff[k] * xp[px[k]] * yp[py[k]];
    return s;
  }
};

}  // namespace liouville::special
