#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace khbn {

// Polynomial in H over F2, stored as a bitset indexed by power.
class PolyH {
 public:
  PolyH() = default;

  static PolyH monomial(int power) {
    PolyH p;
    p.set(power);
    return p;
  }

  bool is_zero() const { return words_.empty(); }

  bool test(int power) const {
    const std::size_t w = static_cast<std::size_t>(power) / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (power % 64)) & 1u;
  }

  // Adds H^power (addition over F2 toggles the bit).
  void add_monomial(int power) {
    const std::size_t w = static_cast<std::size_t>(power) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= (std::uint64_t{1} << (power % 64));
    trim();
  }

  PolyH& operator+=(const PolyH& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
  }

  friend PolyH operator+(PolyH a, const PolyH& b) {
    a += b;
    return a;
  }

  // Multiplication by H^k.
  PolyH shifted(int k) const {
    PolyH out;
    for (int p : support()) out.add_monomial(p + k);
    return out;
  }

  bool is_monomial() const { return support().size() == 1; }

  int min_power() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) {
        for (int b = 0; b < 64; ++b)
          if ((words_[w] >> b) & 1u) return static_cast<int>(w) * 64 + b;
      }
    }
    return -1;
  }

  std::vector<int> support() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (int b = 0; b < 64; ++b)
        if ((words_[w] >> b) & 1u) out.push_back(static_cast<int>(w) * 64 + b);
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int p : support()) {
      if (!s.empty()) s += ',';
      s += std::to_string(p);
    }
    return s;
  }

  friend bool operator==(const PolyH&, const PolyH&) = default;
  friend auto operator<=>(const PolyH&, const PolyH&) = default;

 private:
  void set(int power) { add_monomial(power); }
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

}  // namespace khbn
