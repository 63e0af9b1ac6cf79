#include "kmw/gcm.hpp"

#include <algorithm>
#include <iostream>
#include <map>

namespace kmw {

const char* to_string(ComponentType t) {
  switch (t) {
    case ComponentType::Finite:
      return "finite";
    case ComponentType::Affine:
      return "affine";
    default:
      return "indefinite";
  }
}

namespace {

std::vector<int> checked_subset(const Gcm& g, const std::vector<int>& j, const char* who) {
  std::vector<int> out = j;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int i : out)
    if (i < 0 || i >= g.size()) fail(Errc::IndexOutOfRange, std::string(who) + ": index out of range");
  return out;
}

}  // namespace

Gcm Gcm::validate(const IMat& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    fail(Errc::NotGcm, "matrix must be square and nonempty");
  int n = matrix.rows();
  for (int i = 0; i < n; ++i) {
    if (matrix(i, i) != 2) fail(Errc::NotGcm, "diagonal entry differs from 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix(i, j) > 0) fail(Errc::NotGcm, "positive off-diagonal entry");
      if ((matrix(i, j) == 0) != (matrix(j, i) == 0)) fail(Errc::NotGcm, "asymmetric zero pattern");
    }
  }

  // Propagate eps over each Dynkin component from eps_root = 1, checking
  // consistency on cross edges: symmetry of B means eps_j a_ij = eps_i a_ji.
  std::vector<Rat> eps(n, Rat(0));
  std::vector<int> comp_of(n, -1);
  int ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (comp_of[root] >= 0) continue;
    int comp = ncomp++;
    std::vector<int> stack = {root}, members;
    comp_of[root] = comp;
    eps[root] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || matrix(i, j) == 0) continue;
        Rat propagated = eps[i] * matrix(j, i) / Rat(matrix(i, j));
        if (comp_of[j] < 0) {
          comp_of[j] = comp;
          eps[j] = propagated;
          stack.push_back(j);
        } else if (eps[j] != propagated) {
          fail(Errc::NotSymmetrizable, "inconsistent symmetrizer ratios on a cycle");
        }
      }
    }
    // Scale the component so all eps are integers with gcd 1.
    Int den_lcm = 1, num_gcd = 0;
    for (int i : members) {
      Int den = eps[i].get_den(), g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
      den_lcm = den_lcm / g * den;
    }
    for (int i : members) {
      eps[i] *= den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), eps[i].get_num().get_mpz_t());
    }
    if (num_gcd > 1)
      for (int i : members) eps[i] /= num_gcd;
  }

  Gcm g;
  g.n_ = n;
  g.a_ = matrix;
  g.eps_ = std::move(eps);
  g.b_ = QMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.b_(i, j) = Rat(matrix(i, j)) / g.eps_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.b_(i, j) != g.b_(j, i)) fail(Errc::NotSymmetrizable, "symmetrized matrix not symmetric");
  g.rank_ = kmw::rank(to_rat(matrix));
  return g;
}

std::vector<std::vector<int>> components(const Gcm& g, const std::vector<int>& j) {
  std::vector<int> idx = checked_subset(g, j, "components");
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.size(), false);
  for (int root : idx) {
    if (seen[root]) continue;
    std::vector<int> comp, stack = {root};
    seen[root] = true;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (int k : idx) {
        if (!seen[k] && g.entry(i, k) != 0) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentType classify_component(const Gcm& g, const std::vector<int>& c) {
  std::vector<int> idx = checked_subset(g, c, "classify_component");
  if (idx.empty() || components(g, idx).size() != 1)
    fail(Errc::NotConnected, "classify_component wants a nonempty connected subset");
  int k = static_cast<int>(idx.size());
  QMat sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = g.symmetrized()(idx[i], idx[j]);
  SemidefiniteInfo info = classify_symmetric(std::move(sub));
  if (info.positive_definite()) return ComponentType::Finite;
  if (info.positive_semidefinite && info.kernel_dim == 1) return ComponentType::Affine;
  return ComponentType::Indefinite;
}

bool is_special(const Gcm& g, const std::vector<int>& theta) {
  std::vector<int> idx = checked_subset(g, theta, "is_special");
  for (const auto& comp : components(g, idx))
    if (classify_component(g, comp) == ComponentType::Finite) return false;
  return true;
}

SpecialSet make_special(const Gcm& g, const std::vector<int>& theta) {
  std::vector<int> idx = checked_subset(g, theta, "make_special");
  SpecialSet s;
  s.theta = idx;
  for (const auto& comp : components(g, idx)) {
    ComponentType t = classify_component(g, comp);
    if (t == ComponentType::Finite) fail(Errc::NotSpecial, "subset has a finite-type component");
    s.components.emplace_back(comp, t);
  }
  return s;
}

std::vector<SpecialSet> enumerate_special(const Gcm& g) {
  int n = g.size();
  if (n > 20)
    std::cerr << "kmw: enumerate_special on n = " << n << " scans 2^n subsets; expect this to be slow\n";
  std::map<std::vector<int>, ComponentType> memo;
  auto classify = [&](const std::vector<int>& comp) {
    auto it = memo.find(comp);
    if (it == memo.end()) it = memo.emplace(comp, classify_component(g, comp)).first;
    return it->second;
  };
  std::vector<SpecialSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) theta.push_back(i);
    SpecialSet s;
    s.theta = theta;
    bool ok = true;
    for (const auto& comp : components(g, theta)) {
      ComponentType t = classify(comp);
      if (t == ComponentType::Finite) {
        ok = false;
        break;
      }
      s.components.emplace_back(comp, t);
    }
    if (ok) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SpecialSet& a, const SpecialSet& b) {
    if (a.theta.size() != b.theta.size()) return a.theta.size() < b.theta.size();
    return a.theta < b.theta;
  });
  return out;
}

std::vector<int> orthogonal_complement(const Gcm& g, const std::vector<int>& theta) {
  std::vector<int> idx = checked_subset(g, theta, "orthogonal_complement");
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i) {
    bool orth = true;
    for (int j : idx)
      if (g.entry(i, j) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(i);
  }
  return out;
}

std::vector<int> infinite_part(const Gcm& g, const std::vector<int>& j) {
  std::vector<int> idx = checked_subset(g, j, "infinite_part");
  std::vector<int> out;
  for (const auto& comp : components(g, idx))
    if (classify_component(g, comp) != ComponentType::Finite)
      out.insert(out.end(), comp.begin(), comp.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmw
