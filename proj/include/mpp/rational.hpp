#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mpp/errors.hpp"

namespace mpp {

// All geometry is exact.  cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form the file formats
// require.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

inline Int ratNum(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int ratDen(const Rat& r) { return boost::multiprecision::denominator(r); }

// Serializes as "p/q", or just "p" when q == 1.
inline std::string ratToString(const Rat& r) {
  Int n = ratNum(r), d = ratDen(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rat ratFromString(const std::string& s) {
  auto bad = [&]() { fail(ErrKind::BadInput, "malformed rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d <= 0) bad();
    return Rat(n, d);
  } catch (const std::exception&) {
    bad();
  }
  return Rat(); // unreachable
}

inline int ratSign(const Rat& r) { return r.sign(); }

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec scaled(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline bool isZeroVec(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

} // namespace mpp
