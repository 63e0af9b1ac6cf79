// kmweyl: exact Kac-Moody Weyl group / Tits cone face / Weyl monoid toolbox.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input or failed check,
// 3 a budget-exhausted result is present (output still emitted).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmw/oracle.hpp"
#include "kmw/strata.hpp"
#include "kmw/words.hpp"

using json = nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string inline_matrix;
  std::string format = "text";
  int budget = 8;
  int window = 2;
  int bound = 4;
  long height = 6;
  int sample = 4;
  std::string theta;
};

kmw::IMat read_matrix(const Options& opt) {
  json doc;
  if (!opt.inline_matrix.empty()) {
    doc = json{{"matrix", json::parse(opt.inline_matrix)}};
  } else if (!opt.input.empty()) {
    if (opt.input == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(opt.input);
      if (!in) throw kmw::Error(kmw::Errc::UnsupportedFormat, "cannot open input file " + opt.input);
      doc = json::parse(in);
    }
  } else {
    throw kmw::Error(kmw::Errc::UnsupportedFormat, "no GCM given: use --input FILE or --matrix JSON");
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw kmw::Error(kmw::Errc::UnsupportedFormat, "input must be a JSON object with a \"matrix\" array");
  const json& rows = doc["matrix"];
  int n = static_cast<int>(rows.size());
  kmw::IMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw kmw::Error(kmw::Errc::UnsupportedFormat, "matrix must be square");
    for (int j = 0; j < n; ++j) {
      if (!rows[i][j].is_number_integer())
        throw kmw::Error(kmw::Errc::UnsupportedFormat, "matrix entries must be integers");
      m(i, j) = kmw::Int(rows[i][j].get<long>());
    }
  }
  return m;
}

std::vector<int> parse_theta(const std::string& list, int n) {
  std::vector<int> out;
  if (list.empty()) return out;
  std::stringstream ss(list);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int i = std::stoi(part);
    if (i < 1 || i > n) throw kmw::Error(kmw::Errc::IndexOutOfRange, "--theta index out of range");
    out.push_back(i - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

json theta_to_json(const std::vector<int>& theta) {
  json arr = json::array();
  for (int i : theta) arr.push_back(i + 1);
  return arr;
}

std::string theta_to_text(const std::vector<int>& theta) {
  std::string s = "{";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(theta[i] + 1);
  }
  return s + "}";
}

int run_classify(const Options& opt) {
  kmw::Gcm g = kmw::Gcm::validate(read_matrix(opt));
  std::vector<int> all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  auto comps = kmw::components(g, all);
  auto specials = kmw::enumerate_special(g);
  if (opt.format == "json") {
    json out;
    out["n"] = g.size();
    out["rank"] = g.rank();
    out["dim"] = 2 * g.size() - g.rank();
    json eps = json::array();
    for (const auto& e : g.symmetrizer()) eps.push_back(e.get_str());
    out["symmetrizer"] = eps;
    json jc = json::array();
    for (const auto& c : comps)
      jc.push_back({{"indices", theta_to_json(c)}, {"type", kmw::to_string(kmw::classify_component(g, c))}});
    out["components"] = jc;
    json js = json::array();
    for (const auto& s : specials)
      js.push_back({{"theta", theta_to_json(s.theta)},
                    {"orthogonal_complement", theta_to_json(kmw::orthogonal_complement(g, s.theta))}});
    out["special_sets"] = js;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n = " << g.size() << ", rank = " << g.rank() << ", realization dim = "
              << 2 * g.size() - g.rank() << "\n";
    std::cout << "symmetrizer:";
    for (const auto& e : g.symmetrizer()) std::cout << " " << e.get_str();
    std::cout << "\ncomponents:\n";
    for (const auto& c : comps)
      std::cout << "  " << theta_to_text(c) << " " << kmw::to_string(kmw::classify_component(g, c)) << "\n";
    std::cout << "special sets (with orthogonal complements):\n";
    for (const auto& s : specials)
      std::cout << "  " << theta_to_text(s.theta) << "  perp " << theta_to_text(kmw::orthogonal_complement(g, s.theta))
                << "\n";
  }
  return 0;
}

int run_monoid(const Options& opt, const std::string& verb, const std::vector<std::string>& words) {
  auto r = kmw::Realization::build(kmw::Gcm::validate(read_matrix(opt)));
  kmw::IsectOptions iopts;
  iopts.length_budget = opt.budget;
  iopts.stability_window = opt.window;
  bool exhausted = false;
  auto parse = [&](const std::string& w) {
    kmw::ParsedElement p = kmw::parse_element_word(r, w, iopts);
    if (p.status == kmw::IsectStatus::BudgetExhausted) exhausted = true;
    return p.elem;
  };
  if (verb == "mul") {
    kmw::MonoidElement a = parse(words.at(0)), b = parse(words.at(1));
    kmw::MulResult prod = kmw::multiply(a, b, iopts);
    if (prod.status == kmw::IsectStatus::BudgetExhausted) exhausted = true;
    std::cout << kmw::format_element_word(prod.elem)
              << (exhausted ? "   # status: budget-exhausted" : "") << "\n";
  } else if (verb == "eq") {
    kmw::MonoidElement a = parse(words.at(0)), b = parse(words.at(1));
    std::cout << (a == b ? "equal" : "not equal") << "\n";
  } else {  // nf
    kmw::MonoidElement a = parse(words.at(0));
    for (kmw::NfFlavor fl : {kmw::NfFlavor::Type1, kmw::NfFlavor::Type2}) {
      kmw::NormalForm nf = kmw::normal_form(a, fl);
      std::cout << (fl == kmw::NfFlavor::Type1 ? "type1: " : "type2: ");
      std::string s1;
      for (int i : kmw::reduced_word(nf.sigma1)) s1 += (s1.empty() ? "s" : " s") + std::to_string(i + 1);
      std::string s2;
      for (int i : kmw::reduced_word(nf.sigma2)) s2 += (s2.empty() ? "s" : " s") + std::to_string(i + 1);
      std::cout << "sigma1 = [" << s1 << "], theta = " << theta_to_text(nf.theta.theta)
                << ", sigma2 = [" << s2 << "]\n";
    }
  }
  return exhausted ? 3 : 0;
}

int run_enum(const Options& opt) {
  auto r = kmw::Realization::build(kmw::Gcm::validate(read_matrix(opt)));
  auto elems = kmw::enumerate_monoid(r, opt.bound);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& x : elems) arr.push_back(kmw::format_element_word(x));
    std::cout << json{{"bound", opt.bound}, {"elements", arr}}.dump() << "\n";
  } else {
    for (const auto& x : elems) std::cout << kmw::format_element_word(x) << "\n";
  }
  return 0;
}

int run_poset(const Options& opt) {
  kmw::Gcm g = kmw::Gcm::validate(read_matrix(opt));
  kmw::OrbitPoset p = kmw::orbit_poset(g);
  if (opt.format == "dot") {
    std::cout << kmw::emit_poset_dot(p);
  } else if (opt.format == "json") {
    std::cout << kmw::emit_poset_json(p) << "\n";
  } else {
    for (size_t i = 0; i < p.specials.size(); ++i)
      std::cout << i << ": " << theta_to_text(p.specials[i].theta) << "\n";
    for (auto& [a, b] : p.hasse) std::cout << a << " -> " << b << "\n";
  }
  return 0;
}

int run_strata(const Options& opt) {
  auto r = kmw::Realization::build(kmw::Gcm::validate(read_matrix(opt)));
  kmw::OrbitPoset p = kmw::orbit_poset(r->gcm());
  auto strata = kmw::birkhoff_strata(r, opt.bound);
  if (opt.format == "json") {
    std::cout << kmw::emit_strata_json(p, strata, opt.bound) << "\n";
  } else if (opt.format == "dot") {
    std::cout << kmw::emit_strata_dot(p, strata, opt.bound);
  } else {
    std::cout << "strata within bound " << opt.bound << ":\n";
    for (const auto& s : p.specials) {
      long count = 0;
      for (const auto& st : strata)
        if (st.orbit.theta == s.theta) ++count;
      std::cout << "  orbit " << theta_to_text(s.theta) << ": " << count << " elements\n";
    }
  }
  return 0;
}

int run_bigcell(const Options& opt) {
  auto r = kmw::Realization::build(kmw::Gcm::validate(read_matrix(opt)));
  std::vector<int> theta = parse_theta(opt.theta, r->n());
  kmw::BigCellData d = kmw::big_cell_data(r, theta, opt.height);
  if (opt.format == "json") {
    json out;
    out["theta"] = theta_to_json(theta);
    out["torus_rank"] = d.torus_rank;
    out["p_basis"] = theta_to_json(d.p_basis);
    out["height_bound"] = d.height_bound;
    out["unipotent_root_count"] = d.unipotent_root_count;
    json js = json::array();
    for (const auto& s : d.slice_specials) js.push_back(theta_to_json(s.theta));
    out["slice_specials"] = js;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "big cell of " << theta_to_text(theta) << ":\n";
    std::cout << "  torus rank " << d.torus_rank << "\n";
    std::cout << "  weight basis indices " << theta_to_text(d.p_basis) << "\n";
    std::cout << "  positive real roots off theta within height " << d.height_bound << ": "
              << d.unipotent_root_count << "\n";
    std::cout << "  slice specials:";
    for (const auto& s : d.slice_specials) std::cout << " " << theta_to_text(s.theta);
    std::cout << "\n";
  }
  return 0;
}

int run_oracle_check(const Options& opt) {
  auto r = kmw::Realization::build(kmw::Gcm::validate(read_matrix(opt)));
  kmw::IsectOptions iopts;
  iopts.length_budget = opt.budget;
  iopts.stability_window = opt.window;
  auto elems = kmw::enumerate_monoid(r, opt.bound);
  auto sample = kmw::WeightSample::build(r, opt.sample);
  std::vector<kmw::PartialMap> maps;
  maps.reserve(elems.size());
  for (const auto& x : elems) maps.push_back(kmw::PartialMap::from_element(x, sample));
  long products = 0, exhausted = 0, hom_mismatch = 0, eq_mismatch = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      kmw::MulResult prod = kmw::multiply(elems[i], elems[j], iopts);
      ++products;
      if (prod.status != kmw::IsectStatus::Exact) {
        ++exhausted;
        continue;
      }
      kmw::PartialMap lhs = kmw::PartialMap::from_element(prod.elem, sample);
      kmw::PartialMap rhs = kmw::oracle_multiply(maps[i], maps[j]);
      if (!kmw::oracle_equal(lhs, rhs)) ++hom_mismatch;
      if ((elems[i] == elems[j]) != kmw::oracle_equal(maps[i], maps[j])) ++eq_mismatch;
    }
  }
  bool agree = hom_mismatch == 0 && eq_mismatch == 0;
  if (opt.format == "json") {
    json out{{"elements", elems.size()},       {"sample_points", sample->points.size()},
             {"products", products},           {"budget_exhausted", exhausted},
             {"hom_mismatches", hom_mismatch}, {"eq_mismatches", eq_mismatch},
             {"agree", agree},                 {"bound", opt.bound},
             {"sample_length", opt.sample},    {"budget", opt.budget}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "elements: " << elems.size() << ", sample points: " << sample->points.size() << "\n";
    std::cout << "products: " << products << " (budget-exhausted: " << exhausted << ")\n";
    std::cout << "composition mismatches: " << hom_mismatch << "\n";
    std::cout << "equality mismatches: " << eq_mismatch << "\n";
    std::cout << (agree ? "oracle agrees" : "oracle DISAGREES") << "\n";
  }
  if (!agree) return 2;
  return exhausted ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact Kac-Moody Weyl group, Tits cone face and Weyl monoid computations"};
  app.fallthrough();
  app.add_option("--input", opt.input, "path to a JSON file {\"matrix\": [[...]]} ('-' for stdin)");
  app.add_option("--matrix", opt.inline_matrix, "inline JSON integer matrix [[...],[...]]");
  app.add_option("--format", opt.format, "output format: text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--budget", opt.budget, "face-intersection word-length budget (default 8)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--window", opt.window, "face-intersection stability window (default 2)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bound", opt.bound, "enumeration length bound (default 4)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--height", opt.height, "root height window (default 6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--sample", opt.sample, "weight-sample orbit length (default 4)")
      ->check(CLI::PositiveNumber);
  app.add_option("--theta", opt.theta, "comma-separated 1-based special-set indices");
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "validate a GCM and report its combinatorial data");
  auto* monoid = app.add_subcommand("monoid", "Weyl monoid arithmetic on element words");
  monoid->require_subcommand(1);
  std::vector<std::string> words;
  auto* mul = monoid->add_subcommand("mul", "product of two element words");
  mul->add_option("words", words, "two element words")->expected(2);
  auto* eq = monoid->add_subcommand("eq", "equality of two element words");
  eq->add_option("words", words, "two element words")->expected(2);
  auto* nf = monoid->add_subcommand("nf", "normal forms of an element word");
  nf->add_option("words", words, "one element word")->expected(1);
  auto* enumc = app.add_subcommand("enum", "enumerate monoid elements up to the length bound");
  auto* poset = app.add_subcommand("poset", "orbit closure poset of the special sets");
  auto* strata = app.add_subcommand("strata", "Birkhoff strata within the length bound");
  auto* bigcell = app.add_subcommand("bigcell", "big-cell index data for a special set");
  auto* oracle = app.add_subcommand("oracle-check", "cross-validate the monoid against partial maps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify->parsed()) return run_classify(opt);
    if (monoid->parsed()) {
      std::string verb = mul->parsed() ? "mul" : eq->parsed() ? "eq" : "nf";
      return run_monoid(opt, verb, words);
    }
    if (enumc->parsed()) return run_enum(opt);
    if (poset->parsed()) return run_poset(opt);
    if (strata->parsed()) return run_strata(opt);
    if (bigcell->parsed()) return run_bigcell(opt);
    if (oracle->parsed()) return run_oracle_check(opt);
  } catch (const kmw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
