#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "sgk/graded.hpp"

namespace sgk {

// Textual round-trip format for Grassmann elements: `3 + 2*b1^b2 - e1^e2`
// (e = fiber generator, b = base generator, `^` = wedge).

namespace detail {

inline int parse_generator(const std::string& tok, const GenSet& g) {
  if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'b'))
    throw ConfigError("grassmann parse: bad generator '" + tok + "'");
  int idx = std::stoi(tok.substr(1)) - 1;
  if (idx < 0) throw ConfigError("grassmann parse: bad generator '" + tok + "'");
  if (tok[0] == 'e') {
    if (idx >= g.n_fiber) throw ConfigError("grassmann parse: fiber index out of range: " + tok);
    return idx;
  }
  if (idx >= g.n_base) throw ConfigError("grassmann parse: base index out of range: " + tok);
  return g.n_fiber + idx;
}

template <class R>
R parse_scalar_token(const std::string& s);

template <>
inline Rational parse_scalar_token<Rational>(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (s.find('.') != std::string::npos)
      throw ConfigError("grassmann parse: decimal literal in exact context: " + s);
    return Rational(boost::multiprecision::cpp_int(s));
  }
  return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                  boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

template <>
inline double parse_scalar_token<double>(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  return std::stod(s);
}

}  // namespace detail

template <class R>
GrassmannElement<R> parse_grassmann(const std::string& text, const GenSet& gens) {
  GrassmannElement<R> out(gens);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) i++; };
  skip_ws();
  if (i == text.size()) return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      i++;
      skip_ws();
    } else if (!first) {
      throw ConfigError("grassmann parse: expected +/- near position " + std::to_string(i));
    }
    first = false;
    // optional numeric coefficient
    std::string num;
    while (i < text.size() &&
           (std::isdigit((unsigned char)text[i]) || text[i] == '.' || text[i] == '/'))
      num += text[i++];
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      i++;
      skip_ws();
    }
    // generator wedge chain
    Mask m = 0;
    int msign = 1;
    while (i < text.size() && (text[i] == 'e' || text[i] == 'b')) {
      std::string tok;
      tok += text[i++];
      while (i < text.size() && std::isdigit((unsigned char)text[i])) tok += text[i++];
      int g = detail::parse_generator(tok, gens);
      Mask bit = Mask(1) << g;
      if (m & bit) {
        msign = 0;  // repeated generator: term vanishes
      } else if (msign != 0) {
        msign *= merge_sign(m, bit);
        m |= bit;
      }
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        i++;
        skip_ws();
      } else {
        break;
      }
    }
    if (num.empty() && m == 0 && msign == 1)
      throw ConfigError("grassmann parse: empty term near position " + std::to_string(i));
    if (msign == 0) continue;
    R c = num.empty() ? R(1) : detail::parse_scalar_token<R>(num);
    if (sign < 0) c = -c;
    if (msign < 0) c = -c;
    out.insert_add(m, c);
  }
  return out;
}

template <class R>
std::string print_grassmann(const GrassmannElement<R>& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, v] : x.terms) {
    std::string c = scalar_to_string(v);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (m == 0) {
      os << c;
      continue;
    }
    bool unit_coeff = (c == "1");
    if (!unit_coeff) os << c << "*";
    bool fg = true;
    for (int g = 0; g < x.gens.total(); g++) {
      if (m & (Mask(1) << g)) {
        if (!fg) os << "^";
        fg = false;
        os << x.gens.label(g);
      }
    }
  }
  return os.str();
}

}  // namespace sgk
