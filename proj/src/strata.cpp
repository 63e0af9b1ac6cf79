#include "kmw/strata.hpp"

#include <algorithm>

namespace kmw {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string theta_label(const std::vector<int>& theta) {
  std::string s = "{";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(theta[i] + 1);
  }
  return s + "}";
}

std::string theta_json(const std::vector<int>& theta) {
  std::string s = "[";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(theta[i] + 1);
  }
  return s + "]";
}

}  // namespace

OrbitPoset orbit_poset(const Gcm& g) {
  OrbitPoset p;
  p.specials = enumerate_special(g);
  int n = static_cast<int>(p.specials.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !subset(p.specials[i].theta, p.specials[j].theta)) continue;
      if (p.specials[i].theta.size() == p.specials[j].theta.size()) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (subset(p.specials[i].theta, p.specials[k].theta) &&
            subset(p.specials[k].theta, p.specials[j].theta) &&
            p.specials[k].theta.size() > p.specials[i].theta.size() &&
            p.specials[k].theta.size() < p.specials[j].theta.size())
          covering = false;
      }
      if (covering) p.hasse.emplace_back(i, j);
    }
  std::sort(p.hasse.begin(), p.hasse.end());
  return p;
}

std::vector<OrbitStratum> orbit_strata(const Gcm& g) {
  std::vector<SpecialSet> specials = enumerate_special(g);
  int dim = 2 * g.size() - g.rank();
  std::vector<OrbitStratum> out;
  for (const SpecialSet& s : specials) {
    OrbitStratum st;
    st.theta = s;
    st.torus_rank = dim - static_cast<int>(s.theta.size());
    for (const SpecialSet& t : specials) {
      if (subset(s.theta, t.theta)) st.closure.push_back(t);
      if (subset(t.theta, s.theta)) st.slice_specials.push_back(t);
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<BirkhoffStratum> birkhoff_strata(const RealizationPtr& r, int bound) {
  std::vector<BirkhoffStratum> out;
  for (MonoidElement& x : enumerate_monoid(r, bound)) {
    SpecialSet label = orbit_label(x);
    out.push_back(BirkhoffStratum{std::move(x), std::move(label)});
  }
  return out;
}

std::vector<MonoidElement> principal_open_index(const RealizationPtr& r, const std::vector<int>& theta,
                                                int bound) {
  if (!is_special(r->gcm(), theta)) fail(Errc::NotSpecial, "principal_open_index wants a special set");
  std::vector<MonoidElement> out;
  for (MonoidElement& x : enumerate_monoid(r, bound))
    if (parabolic_decompose(x, theta).member) out.push_back(std::move(x));
  return out;
}

BigCellData big_cell_data(const RealizationPtr& r, const std::vector<int>& theta, long height_bound) {
  if (!is_special(r->gcm(), theta)) fail(Errc::NotSpecial, "big_cell_data wants a special set");
  std::vector<int> sorted_theta = theta;
  std::sort(sorted_theta.begin(), sorted_theta.end());
  BigCellData d;
  d.torus_rank = r->dim() - static_cast<int>(sorted_theta.size());
  for (int i = 0; i < r->dim(); ++i)
    if (!std::binary_search(sorted_theta.begin(), sorted_theta.end(), i)) d.p_basis.push_back(i);
  d.height_bound = height_bound;
  for (const RealRoot& root : positive_real_roots_by_height(r, height_bound)) {
    bool inside = true;
    for (int i = 0; i < r->n(); ++i)
      if (root.alpha[i] != 0 && !std::binary_search(sorted_theta.begin(), sorted_theta.end(), i))
        inside = false;
    if (!inside) ++d.unipotent_root_count;
  }
  for (const SpecialSet& s : enumerate_special(r->gcm()))
    if (subset(s.theta, sorted_theta)) d.slice_specials.push_back(s);
  return d;
}

std::string emit_poset_dot(const OrbitPoset& p) {
  std::string s = "digraph orbit_closure {\n";
  for (size_t i = 0; i < p.specials.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"\xce\x98=" + theta_label(p.specials[i].theta) + "\"];\n";
  for (const auto& [a, b] : p.hasse)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

std::string emit_poset_json(const OrbitPoset& p) {
  std::string s = "{\"specials\":[";
  for (size_t i = 0; i < p.specials.size(); ++i) {
    if (i) s += ",";
    s += theta_json(p.specials[i].theta);
  }
  s += "],\"hasse\":[";
  for (size_t i = 0; i < p.hasse.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(p.hasse[i].first) + "," + std::to_string(p.hasse[i].second) + "]";
  }
  return s + "]}";
}

std::string emit_strata_dot(const OrbitPoset& p, const std::vector<BirkhoffStratum>& strata, int bound) {
  std::string s = "digraph birkhoff_strata {\n  label=\"bound=" + std::to_string(bound) + "\";\n";
  for (size_t i = 0; i < p.specials.size(); ++i) {
    long count = 0;
    for (const BirkhoffStratum& st : strata)
      if (st.orbit.theta == p.specials[i].theta) ++count;
    s += "  n" + std::to_string(i) + " [label=\"\xce\x98=" + theta_label(p.specials[i].theta) +
         " (" + std::to_string(count) + ")\"];\n";
  }
  for (const auto& [a, b] : p.hasse)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

std::string emit_strata_json(const OrbitPoset& p, const std::vector<BirkhoffStratum>& strata, int bound) {
  std::string s = emit_poset_json(p);
  s.pop_back();  // strip closing brace
  s += ",\"bound\":" + std::to_string(bound) + ",\"strata\":[";
  bool first = true;
  for (size_t i = 0; i < p.specials.size(); ++i) {
    long count = 0;
    for (const BirkhoffStratum& st : strata)
      if (st.orbit.theta == p.specials[i].theta) ++count;
    if (count == 0) continue;
    if (!first) s += ",";
    first = false;
    s += "{\"theta\":" + theta_json(p.specials[i].theta) + ",\"count\":" + std::to_string(count) + "}";
  }
  return s + "]}";
}

}  // namespace kmw
