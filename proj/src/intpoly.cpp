#include "mpp/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace mpp {

IntPoly IntPoly::xMinusOnePow(int k) {
  IntPoly r = one();
  IntPoly base(std::vector<Int>{-1, 1});
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<Int> r = coeffs_;
  for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (isZero() || o.isZero()) return IntPoly();
  std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::reverse(int rho) const {
  require(degree() <= rho, ErrKind::DegreeExceedsRank,
          "reverse: degree " + std::to_string(degree()) +
              " exceeds rank difference " + std::to_string(rho));
  std::vector<Int> r(rho + 1, Int(0));
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) r[rho - i] = coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divideByXMinusOne() const {
  if (isZero()) return IntPoly();
  // synthetic division at root 1
  std::vector<Int> q(coeffs_.size() - 1, Int(0));
  Int carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry += coeffs_[i];
    q[i - 1] = carry;
  }
  require(carry + coeffs_[0] == 0, ErrKind::NotDivisible,
          "polynomial " + toString() + " not divisible by (x-1)");
  return IntPoly(std::move(q));
}

Int IntPoly::evalAtOne() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string IntPoly::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    if (coeffs_[i] == 0) continue;
    Int c = coeffs_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

ShapeFlags shapeChecks(const IntPoly& p, int d) {
  ShapeFlags f;
  f.nonnegative = true;
  for (const auto& c : p.coeffs())
    if (c < 0) f.nonnegative = false;

  f.palindromic = p.degree() <= d;
  if (f.palindromic)
    for (int i = 0; i <= d; ++i)
      if (p.coeff(i) != p.coeff(d - i)) { f.palindromic = false; break; }

  f.unimodal = true;
  if (p.degree() > d) f.unimodal = false;
  else {
    int peak = 0;
    while (peak < d && p.coeff(peak + 1) >= p.coeff(peak)) ++peak;
    for (int i = peak; i < d; ++i)
      if (p.coeff(i + 1) > p.coeff(i)) { f.unimodal = false; break; }
  }

  if (f.palindromic) {
    f.gammaPositive = true;
    for (const auto& g : gammaVector(p, d))
      if (g < 0) f.gammaPositive = false;
  }
  return f;
}

std::vector<Int> gammaVector(const IntPoly& p, int d) {
  ShapeFlags probe;
  {
    bool pal = p.degree() <= d;
    if (pal)
      for (int i = 0; i <= d; ++i)
        if (p.coeff(i) != p.coeff(d - i)) { pal = false; break; }
    require(pal, ErrKind::NotPalindromic,
            "gamma vector requested for non-palindromic polynomial " + p.toString());
  }
  (void)probe;
  std::vector<Int> gamma;
  IntPoly rest = p;
  IntPoly xp = IntPoly::x();
  IntPoly xPow = IntPoly::one();
  for (int i = 0; 2 * i <= d; ++i) {
    Int gi = rest.coeff(i);
    gamma.push_back(gi);
    // subtract gi * x^i (x+1)^(d-2i)
    IntPoly term = xPow * IntPoly(gi);
    IntPoly xp1 = IntPoly(std::vector<Int>{1, 1});
    IntPoly pw = IntPoly::one();
    for (int j = 0; j < d - 2 * i; ++j) pw = pw * xp1;
    rest = rest - term * pw;
    xPow = xPow * xp;
  }
  require(rest.isZero(), ErrKind::Internal, "gamma expansion failed to terminate");
  return gamma;
}

} // namespace mpp
