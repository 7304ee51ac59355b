#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace khbn {

// Laurent polynomial in q with integer coefficients.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(std::int64_t constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static Laurent term(std::int64_t coeff, int power) {
    Laurent out;
    if (coeff != 0) out.coeffs_[power] = coeff;
    return out;
  }

  void add_term(std::int64_t coeff, int power) {
    if (coeff == 0) return;
    auto it = coeffs_.find(power);
    if (it == coeffs_.end()) {
      coeffs_[power] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& other) {
    for (const auto& [p, c] : other.coeffs_) add_term(c, p);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) {
    a += b;
    return a;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [pa, ca] : a.coeffs_)
      for (const auto& [pb, cb] : b.coeffs_) out.add_term(ca * cb, pa + pb);
    return out;
  }

  Laurent pow(int e) const {
    Laurent out(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }

  const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

  // Sorted term list, lowest power first, e.g. "q^-2 + 2 + q^2".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (p == 0) {
        s += std::to_string(mag);
      } else {
        if (mag != 1) s += std::to_string(mag) + "*";
        s += (p == 1) ? "q" : "q^" + std::to_string(p);
      }
    }
    return s;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace khbn
