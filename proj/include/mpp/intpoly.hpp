#pragma once

#include <string>
#include <vector>

#include "mpp/errors.hpp"
#include "mpp/rational.hpp"

namespace mpp {

// Univariate polynomial over arbitrary-precision integers, coefficient at
// index i is the degree-i coefficient.  Trailing zeros are trimmed, the zero
// polynomial is the empty vector.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(Int c) { if (c != 0) coeffs_.push_back(std::move(c)); }
  explicit IntPoly(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }

  static IntPoly x() { return IntPoly(std::vector<Int>{0, 1}); }
  static IntPoly one() { return IntPoly(Int(1)); }

  // (x - 1)^k
  static IntPoly xMinusOnePow(int k);

  bool isZero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for 0
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Int(0);
  }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  // x^rho * p(1/x); requires degree() <= rho.
  IntPoly reverse(int rho) const;

  // Exact division by (x - 1); throws NotDivisible if there is a remainder.
  IntPoly divideByXMinusOne() const;
  bool divisibleByXMinusOne() const { return evalAtOne() == 0; }

  Int evalAtOne() const;
  std::string toString() const; // human-readable, ascending powers

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

struct ShapeFlags {
  bool nonnegative = false;
  bool palindromic = false;
  bool unimodal = false;
  bool gammaPositive = false;
};

// Shape diagnostics of p, read as a polynomial of nominal degree d (so the
// palindromy center is d/2 even when the leading coefficient vanishes).
ShapeFlags shapeChecks(const IntPoly& p, int d);

// Gamma-vector of a palindromic p of nominal degree d: the coefficients in
// the basis x^i (x+1)^(d-2i).  Throws NotPalindromic otherwise.
std::vector<Int> gammaVector(const IntPoly& p, int d);

} // namespace mpp
