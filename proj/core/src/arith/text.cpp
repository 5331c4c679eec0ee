#include "hlv/arith/text.hpp"

#include <stdexcept>

namespace hlv {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string rational_text(const Rational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed coefficient: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in coefficient: " + s);
  r.canonicalize();
  return r;
}

std::string monomial_pretty(const Monomial& m) {
  std::string out;
  for (Var v : kAllVars) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_canonical(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += "; ";
    out += rational_text(t.coeff);
    for (Var v : kAllVars) {
      const unsigned e = t.mono.exponent(v);
      if (e != 0) {
        out += ' ';
        out += var_name(v);
        out += ':';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

std::string to_canonical(const RationalFunction& f) {
  if (f.is_polynomial()) return to_canonical(f.num());
  return to_canonical(f.num()) + " // " + to_canonical(f.den());
}

Poly parse_canonical_poly(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return {};
  std::vector<Poly::Term> terms;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = trim(std::string_view(s).substr(pos, end - pos));
    pos = end + 1;
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    std::size_t p = term.find(' ');
    const Rational c = parse_rational(term.substr(0, p));
    std::array<unsigned, kNumVars> exps{};
    while (p != std::string::npos) {
      const std::size_t start = p + 1;
      p = term.find(' ', start);
      const std::string pair = term.substr(start, p == std::string::npos ? std::string::npos : p - start);
      if (pair.empty()) continue;
      const auto colon = pair.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("malformed monomial: " + pair);
      const auto v = parse_var(pair.substr(0, colon));
      if (!v) throw std::invalid_argument("unknown variable: " + pair);
      std::size_t used = 0;
      const unsigned long e = std::stoul(pair.substr(colon + 1), &used);
      if (used != pair.size() - colon - 1) throw std::invalid_argument("malformed exponent: " + pair);
      exps[static_cast<std::size_t>(*v)] += static_cast<unsigned>(e);
    }
    if (c == 0) throw std::invalid_argument("zero coefficient in canonical text");
    terms.push_back({Monomial::from_exponents(exps), c});
    if (end == s.size()) break;
  }
  return Poly::from_terms(std::move(terms));
}

RationalFunction parse_canonical(std::string_view text) {
  const auto sep = text.find("//");
  if (sep == std::string_view::npos) return parse_canonical_poly(text);
  return RationalFunction::normalize(parse_canonical_poly(text.substr(0, sep)),
                                     parse_canonical_poly(text.substr(sep + 2)));
}

std::string to_pretty(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_pretty(t.mono);
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_pretty(const RationalFunction& f) {
  if (f.is_polynomial()) return to_pretty(f.num());
  return "(" + to_pretty(f.num()) + ") / (" + to_pretty(f.den()) + ")";
}

}  // namespace hlv
