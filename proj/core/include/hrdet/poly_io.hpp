#pragma once

// Canonical text form for polynomials: terms in descending graded-lex order,
// variables printed a_i_j, exponents with '^'. Parse/print round-trips
// exactly.

#include <cctype>
#include <sstream>
#include <string>

#include "hrdet/poly.hpp"

namespace hrdet {

inline std::string coeff_str(const Rat& c) { return c.str(); }
inline std::string coeff_str(const Fp& c) { return c.str(); }
inline std::string coeff_str(const GF2m& c) { return c.str(); }

inline bool coeff_is_negative(const Rat& c) { return c.value() < 0; }
inline bool coeff_is_negative(const Fp&) { return false; }
inline bool coeff_is_negative(const GF2m&) { return false; }

inline std::optional<Rat> parse_coeff(const std::string& s, const Rat&) {
  return Rat::parse(s);
}
inline std::optional<Fp> parse_coeff(const std::string& s, const Fp& proto) {
  try {
    return proto.of_int(std::stoll(s));
  } catch (...) {
    return std::nullopt;
  }
}
inline std::optional<GF2m> parse_coeff(const std::string& s, const GF2m& proto) {
  try {
    return GF2m(std::stoull(s), proto.ctx());
  } catch (...) {
    return std::nullopt;
  }
}

template <class K>
std::string to_string(const SparsePoly<K>& p, const VarTable& vt) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    K c = t.c;
    if (!first) {
      if (coeff_is_negative(c)) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    } else if (coeff_is_negative(c)) {
      os << "-";
      c = -c;
    }
    first = false;
    std::string mono;
    for (int v = 0; v < vt.count(); ++v) {
      if (!t.m.e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += vt.var(v).str();
      if (t.m.e[v] > 1) mono += "^" + std::to_string(int(t.m.e[v]));
    }
    if (mono.empty()) {
      os << coeff_str(c);
    } else if (c.is_one()) {
      os << mono;
    } else {
      os << coeff_str(c) << "*" << mono;
    }
  }
  return os.str();
}

template <class K>
std::optional<SparsePoly<K>> parse_poly(const std::string& text,
                                        const VarTable& vt, const K& proto) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return std::nullopt;
  if (s == "0") return SparsePoly<K>();

  SparsePoly<K> out;
  size_t pos = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    pos = 1;
  } else if (s[0] == '+') {
    pos = 1;
  }
  while (pos < s.size()) {
    K coeff = proto.of_int(neg ? -1 : 1);
    bool saw_factor = false;
    Monomial m = Monomial::one();
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (s[pos] == 'a') {
        // a_i_j[^e]
        size_t q = pos + 1;
        if (q >= s.size() || s[q] != '_') return std::nullopt;
        ++q;
        size_t i0 = q;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
        if (q == i0 || q >= s.size() || s[q] != '_') return std::nullopt;
        int i = std::stoi(s.substr(i0, q - i0));
        ++q;
        size_t j0 = q;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
        if (q == j0) return std::nullopt;
        int j = std::stoi(s.substr(j0, q - j0));
        int exp = 1;
        if (q < s.size() && s[q] == '^') {
          ++q;
          size_t e0 = q;
          while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
          if (q == e0) return std::nullopt;
          exp = std::stoi(s.substr(e0, q - e0));
        }
        if (i < 1 || i > vt.d() || j < 0 || j > vt.n()) return std::nullopt;
        m = m * Monomial::var(vt.index(VarId{uint8_t(i), uint8_t(j)}),
                              static_cast<uint8_t>(exp));
        pos = q;
        saw_factor = true;
      } else {
        // number, possibly num/den
        size_t q = pos;
        while (q < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '/'))
          ++q;
        if (q == pos) return std::nullopt;
        auto c = parse_coeff(s.substr(pos, q - pos), proto);
        if (!c) return std::nullopt;
        coeff *= *c;
        pos = q;
        saw_factor = true;
      }
    }
    if (!saw_factor) return std::nullopt;
    out += SparsePoly<K>::term(m, coeff);
    if (pos < s.size()) {
      neg = (s[pos] == '-');
      ++pos;
    }
  }
  return out;
}

}  // namespace hrdet
