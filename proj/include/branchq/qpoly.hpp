#pragma once
// Sparse polynomials in one variable q with arbitrary-precision integer
// coefficients and nonnegative integer exponents. For the half-step graded
// families the variable is read as t = q^(1/2); the container is agnostic.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace branchq {

using BigInt = boost::multiprecision::cpp_int;

class QPoly {
 public:
  QPoly() = default;

  static QPoly monomial(int exp, BigInt coeff = 1) {
    QPoly p;
    p.add_term(exp, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  void add_term(int exp, const BigInt& coeff) {
    if (coeff == 0) return;
    if (exp < 0) throw std::domain_error("QPoly: negative exponent");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Multiplication by the monomial q^s.
  QPoly shifted(int s) const {
    QPoly p;
    for (const auto& [e, c] : terms_) p.add_term(e + s, c);
    return p;
  }

  // Substitution q -> q^m (exponent stretch).
  QPoly stretched(int m) const {
    if (m <= 0) throw std::invalid_argument("QPoly::stretched: m must be positive");
    QPoly p;
    for (const auto& [e, c] : terms_) p.add_term(e * m, c);
    return p;
  }

  QPoly scaled(const BigInt& k) const {
    QPoly p;
    for (const auto& [e, c] : terms_) p.add_term(e, c * k);
    return p;
  }

  BigInt eval_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  BigInt coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Smallest coefficient value (0 for the zero polynomial). Negative iff some
  // coefficient is negative.
  BigInt min_coeff() const {
    BigInt m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)e;
      if (first || c < m) m = c;
      first = false;
    }
    return m;
  }

  bool nonneg_coeffs() const { return min_coeff() >= 0; }

  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int low_exp() const { return terms_.empty() ? -1 : terms_.begin()->first; }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<int, BigInt>& terms() const { return terms_; }

  // Rendering: descending exponents, e.g. "q^8+2q^7+3q^6-q^2+5". Zero is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int e = it->first;
      BigInt c = it->second;
      if (!first) {
        os << (c < 0 ? "-" : "+");
        if (c < 0) c = -c;
      } else if (c < 0) {
        os << '-';
        c = -c;
      }
      first = false;
      if (e == 0) {
        os << c.str();
      } else {
        if (c != 1) os << c.str();
        os << 'q';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient
};

}  // namespace branchq
