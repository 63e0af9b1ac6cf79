#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kmw {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline QVec to_rat(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline QVec add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool is_zero(const QVec& a) {
  for (const Rat& x : a) {
    if (x != 0) return false;
  }
  return true;
}

// Scales a rational vector to a primitive integer vector pointing the same
// way (entries coprime). The zero vector maps to itself.
IVec primitive(const QVec& v);

std::string to_string(const Rat& q);
std::string to_string(const QVec& v);

}  // namespace kmw
