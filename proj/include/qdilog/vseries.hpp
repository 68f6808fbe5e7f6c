#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qdilog/error.hpp"

namespace qdilog {

/// Truncated Laurent series in v = q^{1/2} with exact coefficients.
///
/// Coefficients are stored for exponents min_exp() .. max_exp(); everything
/// above v_max() is dropped. The canonical form has nonzero first and last
/// stored coefficients, so two equal series compare equal structurally.
///
/// Products are exact modulo v^{v_max + 1} when both operands have
/// non-negative support. Multiplying by a negative power of v loses the top
/// coefficients that were already truncated away.
template <typename Scalar>
class BasicVSeries {
 public:
  BasicVSeries() = default;
  explicit BasicVSeries(int v_max) : v_max_(v_max) {}

  static BasicVSeries monomial(Scalar c, int exponent, int v_max) {
    BasicVSeries s(v_max);
    if (exponent <= v_max && c != 0) {
      s.min_exp_ = exponent;
      s.coeffs_.push_back(std::move(c));
    }
    return s;
  }

  static BasicVSeries one(int v_max) { return monomial(Scalar(1), 0, v_max); }

  /// v^exponent
  static BasicVSeries v_power(int exponent, int v_max) {
    return monomial(Scalar(1), exponent, v_max);
  }

  /// q^exponent == v^{2 exponent}
  static BasicVSeries q_power(int exponent, int v_max) {
    return monomial(Scalar(1), 2 * exponent, v_max);
  }

  static BasicVSeries from_coefficients(int min_exp, std::vector<Scalar> coeffs, int v_max) {
    BasicVSeries s(v_max);
    s.min_exp_ = min_exp;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  int v_max() const { return v_max_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero series.
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(int exponent) const {
    const int k = exponent - min_exp_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Multiply by v^k.
  BasicVSeries shifted(int k) const {
    BasicVSeries s = *this;
    s.min_exp_ += k;
    s.normalize();
    return s;
  }

  /// Inverse of a unit (min_exp 0, constant term +-1).
  BasicVSeries inverse() const {
    if (is_zero() || min_exp_ != 0 || (coeffs_[0] != 1 && coeffs_[0] != -1)) {
      throw Error(ErrorKind::NonUnit, "series is not a unit: constant term must be +-1");
    }
    const auto len = static_cast<std::size_t>(v_max_ + 1);
    std::vector<Scalar> b(len, Scalar(0));
    const Scalar& a0 = coeffs_[0];
    b[0] = a0;
    for (std::size_t n = 1; n < len; ++n) {
      Scalar acc = 0;
      const std::size_t top = std::min(n, coeffs_.size() - 1);
      for (std::size_t k = 1; k <= top; ++k) acc += coeffs_[k] * b[n - k];
      b[n] = -a0 * acc;
    }
    return from_coefficients(0, std::move(b), v_max_);
  }

  BasicVSeries operator-() const {
    BasicVSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  BasicVSeries& operator+=(const BasicVSeries& o) {
    check_compatible(o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
      min_exp_ = o.min_exp_;
      coeffs_ = o.coeffs_;
      return *this;
    }
    const int lo = std::min(min_exp_, o.min_exp_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      out[static_cast<std::size_t>(min_exp_ - lo) + k] += coeffs_[k];
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      out[static_cast<std::size_t>(o.min_exp_ - lo) + k] += o.coeffs_[k];
    }
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  BasicVSeries& operator-=(const BasicVSeries& o) { return *this += -o; }

  BasicVSeries& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend BasicVSeries operator+(BasicVSeries a, const BasicVSeries& b) { return a += b; }
  friend BasicVSeries operator-(BasicVSeries a, const BasicVSeries& b) { return a -= b; }
  friend BasicVSeries operator*(BasicVSeries a, const Scalar& c) { return a *= c; }
  friend BasicVSeries operator*(const Scalar& c, BasicVSeries a) { return a *= c; }

  friend BasicVSeries operator*(const BasicVSeries& a, const BasicVSeries& b) {
    a.check_compatible(b);
    BasicVSeries s(a.v_max_);
    if (a.is_zero() || b.is_zero()) return s;
    const int lo = a.min_exp_ + b.min_exp_;
    const int hi = std::min(a.max_exp() + b.max_exp(), a.v_max_);
    if (hi < lo) return s;
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const int ei = a.min_exp_ + static_cast<int>(i);
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const int e = ei + b.min_exp_ + static_cast<int>(j);
        if (e > hi) break;
        out[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    s.min_exp_ = lo;
    s.coeffs_ = std::move(out);
    s.normalize();
    return s;
  }

  BasicVSeries& operator*=(const BasicVSeries& o) { return *this = *this * o; }

  friend bool operator==(const BasicVSeries& a, const BasicVSeries& b) {
    return a.v_max_ == b.v_max_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

  /// Exponents (in v) at which a and b differ.
  friend std::vector<int> differing_exponents(const BasicVSeries& a, const BasicVSeries& b) {
    a.check_compatible(b);
    std::vector<int> out;
    if (a.is_zero() && b.is_zero()) return out;
    const int lo = std::min(a.is_zero() ? b.min_exp_ : a.min_exp_,
                            b.is_zero() ? a.min_exp_ : b.min_exp_);
    const int hi = std::max(a.is_zero() ? b.max_exp() : a.max_exp(),
                            b.is_zero() ? a.max_exp() : b.max_exp());
    for (int e = lo; e <= hi; ++e) {
      if (a.coeff(e) != b.coeff(e)) out.push_back(e);
    }
    return out;
  }

 private:
  void check_compatible(const BasicVSeries& o) const {
    if (v_max_ != o.v_max_) {
      throw Error(ErrorKind::TruncationMismatch,
                  "series truncated at different orders (v^" + std::to_string(v_max_) +
                      " vs v^" + std::to_string(o.v_max_) + ")");
    }
  }

  void normalize() {
    // Drop everything above the truncation order.
    const int keep = v_max_ - min_exp_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<int>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      min_exp_ += static_cast<int>(lead);
    }
  }

  int v_max_ = 0;
  int min_exp_ = 0;
  std::vector<Scalar> coeffs_;
};

/// Renders as "c·q^{e/2}" terms, lowest exponent first, where e is the
/// exponent of v.
template <typename Scalar>
std::string to_string(const BasicVSeries<Scalar>& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = s.min_exp(); e <= s.max_exp(); ++e) {
    const Scalar c = s.coeff(e);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c << "·q^{" << e << "/2}";
  }
  return os.str();
}

}  // namespace qdilog
