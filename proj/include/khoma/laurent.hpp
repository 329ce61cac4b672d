#pragma once

// Integer Laurent polynomials in one variable q, stored sparsely.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>

namespace khoma {

using Int = boost::multiprecision::cpp_int;

class Laurent {
 public:
  Laurent() = default;

  // coeff * q^exp
  static Laurent term(Int coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
  }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return term(1, 0); }

  // q + q^-1, the value of a single circle
  static Laurent circle() {
    Laurent p;
    p.coeffs_[1] = 1;
    p.coeffs_[-1] = 1;
    return p;
  }

  const std::map<int, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  Laurent& operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(c, e);
    return *this;
  }

  Laurent& operator-=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(-c, e);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) p.add_term(ca * cb, ea + eb);
    return p;
  }

  Laurent operator-() const {
    Laurent p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
    return p;
  }

  // multiply by coeff * q^exp in place
  Laurent& mul_term(const Int& coeff, int exp) {
    std::map<int, Int> next;
    if (coeff != 0)
      for (const auto& [e, c] : coeffs_) next[e + exp] = c * coeff;
    coeffs_ = std::move(next);
    return *this;
  }

  Laurent pow(unsigned n) const {
    Laurent r = one();
    for (unsigned k = 0; k < n; ++k) r = r * (*this);
    return r;
  }

  bool operator==(const Laurent& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Laurent& other) const { return !(*this == other); }

  // Human-readable form, ascending exponents: "q^-1 + q", "-q^2 + 3"
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        out << a.str();
      } else {
        if (a != 1) out << a.str();
        out << "q";
        if (e != 1) out << "^" << e;
      }
      first = false;
    }
    return out.str();
  }

 private:
  void add_term(const Int& c, int e) {
    if (c == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, Int> coeffs_;
};

}  // namespace khoma
