#pragma once

#include <string>

#include "kmw/monoid.hpp"

namespace kmw {

// Closure poset of the orbit stratification: nodes are the special sets,
// Theta precedes Xi when Xi lies in the closure (reverse inclusion of the
// open orbits: Theta subset Xi). Hasse pairs are positions into specials.
struct OrbitPoset {
  std::vector<SpecialSet> specials;           // sorted by (size, lex)
  std::vector<std::pair<int, int>> hasse;     // covering pairs (from, to)
};

OrbitPoset orbit_poset(const Gcm& g);

struct OrbitStratum {
  SpecialSet theta;
  std::vector<SpecialSet> closure;         // all special Xi containing theta
  int torus_rank = 0;                      // 2n - l - |theta|
  std::vector<SpecialSet> slice_specials;  // special Xi inside theta
};

std::vector<OrbitStratum> orbit_strata(const Gcm& g);

// Stratum index; swapping the two group factors fixes every index here
// (the involution acts trivially at this combinatorial level).
struct BirkhoffStratum {
  MonoidElement element;
  SpecialSet orbit;
};

// enumerate_monoid(bound), each element tagged with its orbit label.
std::vector<BirkhoffStratum> birkhoff_strata(const RealizationPtr& r, int bound);

// Elements of enumerate_monoid(bound) lying in the parabolic submonoid of
// theta (the index set of the principal open set of theta).
std::vector<MonoidElement> principal_open_index(const RealizationPtr& r, const std::vector<int>& theta,
                                                int bound);

// Finite index data of a big cell: torus rank, the weight-basis indices off
// theta, and the window count of positive real roots outside Z-span(theta).
struct BigCellData {
  int torus_rank = 0;
  std::vector<int> p_basis;
  long height_bound = 0;
  long unipotent_root_count = 0;
  std::vector<SpecialSet> slice_specials;
};

BigCellData big_cell_data(const RealizationPtr& r, const std::vector<int>& theta, long height_bound);

// Deterministic serializations (indices printed 1-based).
std::string emit_poset_dot(const OrbitPoset& p);
std::string emit_poset_json(const OrbitPoset& p);
std::string emit_strata_dot(const OrbitPoset& p, const std::vector<BirkhoffStratum>& strata, int bound);
std::string emit_strata_json(const OrbitPoset& p, const std::vector<BirkhoffStratum>& strata, int bound);

}  // namespace kmw
