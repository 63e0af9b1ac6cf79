#include "kmw/words.hpp"

#include <sstream>

namespace kmw {

namespace {

[[noreturn]] void bad_token(const std::string& tok, size_t pos, const std::string& why) {
  fail(Errc::UnknownToken,
       "token '" + tok + "' at position " + std::to_string(pos + 1) + ": " + why);
}

MonoidElement parse_token(const RealizationPtr& r, const std::string& tok, size_t pos) {
  if (tok.size() >= 2 && tok[0] == 's') {
    size_t idx = 0;
    int i;
    try {
      i = std::stoi(tok.substr(1), &idx);
    } catch (const std::exception&) {
      bad_token(tok, pos, "expected sI with a 1-based index");
    }
    if (idx != tok.size() - 1) bad_token(tok, pos, "trailing characters after the index");
    if (i < 1 || i > r->n()) bad_token(tok, pos, "generator index out of range");
    return MonoidElement::from_weyl(WeylElement::simple_reflection(r, i - 1));
  }
  if (tok.size() >= 3 && tok.rfind("e[", 0) == 0 && tok.back() == ']') {
    std::vector<int> theta;
    std::string body = tok.substr(2, tok.size() - 3);
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string part;
      while (std::getline(ss, part, ',')) {
        size_t idx = 0;
        int i;
        try {
          i = std::stoi(part, &idx);
        } catch (const std::exception&) {
          bad_token(tok, pos, "expected e[i,j,...] with 1-based indices");
        }
        if (idx != part.size()) bad_token(tok, pos, "malformed index list");
        if (i < 1 || i > r->n()) bad_token(tok, pos, "index out of range");
        theta.push_back(i - 1);
      }
    }
    if (!is_special(r->gcm(), theta))
      fail(Errc::NonSpecialTheta, "token '" + tok + "' at position " + std::to_string(pos + 1) +
                                      ": the index set is not special");
    return MonoidElement::idempotent(standard_face(r, theta));
  }
  bad_token(tok, pos, "expected sI or e[...]");
}

}  // namespace

ParsedElement parse_element_word(const RealizationPtr& r, const std::string& word,
                                 const IsectOptions& opts) {
  MonoidElement acc = MonoidElement::from_weyl(WeylElement::identity(r));
  IsectStatus worst = IsectStatus::Exact;
  std::stringstream ss(word);
  std::string tok;
  size_t pos = 0;
  while (ss >> tok) {
    MonoidElement next = parse_token(r, tok, pos++);
    MulResult prod = multiply(acc, next, opts);
    acc = prod.elem;
    if (prod.status == IsectStatus::BudgetExhausted) worst = IsectStatus::BudgetExhausted;
  }
  return {std::move(acc), worst};
}

std::string format_element_word(const MonoidElement& x) {
  NormalForm nf = normal_form(x, NfFlavor::Type1);
  std::string s;
  auto append_word = [&](const WeylElement& w) {
    for (int i : reduced_word(w)) {
      if (!s.empty()) s += ' ';
      s += 's' + std::to_string(i + 1);
    }
  };
  append_word(nf.sigma1);
  if (!nf.theta.theta.empty() || (nf.sigma1.is_identity() && nf.sigma2.is_identity())) {
    if (!s.empty()) s += ' ';
    s += "e[";
    for (size_t i = 0; i < nf.theta.theta.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(nf.theta.theta[i] + 1);
    }
    s += ']';
  }
  append_word(nf.sigma2);
  return s;
}

}  // namespace kmw
