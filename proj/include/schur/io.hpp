#pragma once

// Text and JSON forms of algebra elements.
//
// Text grammar (whitespace between tokens is ignored):
//   element := ['-'] term { ('+' | '-') term }
//   term    := [coeff '*'] 'xi(' intlist ';' intlist ')' | coeff
//   coeff   := int ['/' posint]
//   intlist := int { ',' int }
// The second list of a symbol is the folded bottom j + n*eps. A bare
// coefficient c stands for c times the identity.
//
// JSON:
//   {"n": int, "r": int, "field": "rational" | {"gf": int},
//    "terms": [{"coeff": string, "top": [int...], "bottom": [int...]}]}
// with terms sorted by (top, bottom) and no zero coefficients.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "schur/algebra.hpp"
#include "schur/error.hpp"
#include "schur/field.hpp"

namespace schur {

/// "rational", "q", or "gf:p".
inline Field parse_field(std::string_view text) {
  if (text == "rational" || text == "q" || text == "Q") return Field::rational();
  if (text.starts_with("gf:")) {
    const std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 18) {
      throw ParseError("unknown field descriptor '" + std::string(text) + "'");
    }
    return Field::prime(std::stoull(digits));
  }
  throw ParseError("unknown field descriptor '" + std::string(text) + "'");
}

/// Parses "a" or "a/b" into the field.
inline Scalar parse_scalar(std::string_view text, const Field& field) {
  const auto slash = text.find('/');
  auto integer = [&](std::string_view s) {
    mpz_class v;
    const std::string str(s);
    const bool ok = !str.empty() &&
                    str.find_first_not_of("0123456789", str[0] == '-' ? 1 : 0) == std::string::npos &&
                    !(str[0] == '-' && str.size() == 1) && v.set_str(str, 10) == 0;
    if (!ok) throw ParseError("malformed coefficient '" + std::string(text) + "'");
    return v;
  };
  if (slash == std::string_view::npos) return Scalar::from_integer(field, integer(text));
  const mpz_class num = integer(text.substr(0, slash));
  const mpz_class den = integer(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
  return Scalar::from_fraction(field, num, den);
}

namespace detail {

class ElementParser {
 public:
  ElementParser(std::string_view text, const AlgebraContext& ctx) : text_(text), ctx_(ctx) {}

  AlgebraElement parse() {
    AlgebraElement out(ctx_);
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    parse_term(out, negative);
    while (true) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(out, c == '-');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class parse_int() {
    skip();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t parse_small_int() {
    const std::size_t start = pos_;
    const mpz_class v = parse_int();
    if (!v.fits_slong_p()) {
      pos_ = start;
      fail("tuple entry out of range");
    }
    return v.get_si();
  }

  Tuple parse_intlist(std::size_t list_start) {
    Tuple out{parse_small_int()};
    while (true) {
      skip();
      if (peek() != ',') break;
      ++pos_;
      out.push_back(parse_small_int());
    }
    if (out.size() != ctx_.rank()) {
      throw ParseError("tuple has length " + std::to_string(out.size()) + ", expected r = " +
                           std::to_string(ctx_.r()),
                       list_start);
    }
    return out;
  }

  void parse_term(AlgebraElement& out, bool negative) {
    skip();
    Scalar coeff = Scalar::one(ctx_.field());
    bool has_coeff = false;
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      const mpz_class num = parse_int();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        if (peek() == '-') fail("denominator must be positive");
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      coeff = Scalar::from_fraction(ctx_.field(), num, den);
      has_coeff = true;
      skip();
      if (peek() != '*') {
        if (negative) coeff = -coeff;
        AlgebraElement scaled = one(ctx_);
        scaled *= coeff;
        out += scaled;
        return;
      }
      ++pos_;
      skip();
    }
    if (text_.substr(pos_, 2) != "xi") fail(has_coeff ? "expected 'xi'" : "expected a term");
    pos_ += 2;
    expect('(');
    skip();
    const Tuple top = parse_intlist(pos_);
    expect(';');
    skip();
    const Tuple bottom = parse_intlist(pos_);
    expect(')');
    if (negative) coeff = -coeff;
    out.add_term(canonical(top, bottom, ctx_.n()), coeff);
  }

  std::string_view text_;
  const AlgebraContext& ctx_;
  std::size_t pos_ = 0;
};

inline std::string join(const Tuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(t[k]);
  }
  return out;
}

/// Writes "c*body" into `out` with the sign handled by the separator.
inline void append_signed(std::string& out, const Scalar& c, const std::string& body,
                          bool first, bool omit_unit) {
  const bool negative = c.is_negative();
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar magnitude = negative ? -c : c;
  if (omit_unit && magnitude.is_one()) {
    out += body;
  } else if (body.empty()) {
    out += magnitude.to_string();
  } else {
    out += magnitude.to_string() + "*" + body;
  }
}

}  // namespace detail

inline AlgebraElement parse_element(std::string_view text, const AlgebraContext& ctx) {
  return detail::ElementParser(text, ctx).parse();
}

inline std::string format_symbol(const BasisSymbol& x) {
  return "xi(" + detail::join(x.top()) + ";" + detail::join(x.bottom()) + ")";
}

inline std::string format_element(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, c] : e.terms()) {
    detail::append_signed(out, c, format_symbol(x), first, true);
    first = false;
  }
  return out;
}

using Json = nlohmann::ordered_json;

inline Json field_to_json(const Field& f) {
  if (f.is_rational()) return "rational";
  Json j = Json::object();
  j["gf"] = f.characteristic();
  return j;
}

inline Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return Field::rational();
  if (j.is_object() && j.size() == 1 && j.contains("gf") && j["gf"].is_number_integer() &&
      j["gf"].get<std::int64_t>() > 0) {
    return Field::prime(j["gf"].get<std::uint64_t>());
  }
  throw ParseError("unknown field descriptor " + j.dump());
}

inline Json to_json(const AlgebraElement& e) {
  Json j = Json::object();
  j["n"] = e.context().n();
  j["r"] = e.context().r();
  j["field"] = field_to_json(e.context().field());
  Json terms = Json::array();
  for (const auto& [x, c] : e.terms()) {
    Json t = Json::object();
    t["coeff"] = c.to_string();
    t["top"] = x.top();
    t["bottom"] = x.bottom();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

namespace detail {

inline std::int64_t json_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing or non-integer field '") + key + "'");
  }
  return j[key].get<std::int64_t>();
}

inline Tuple json_tuple(const Json& j, const char* key, std::size_t r) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array '") + key + "'");
  }
  Tuple out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw ParseError(std::string("non-integer entry in '") + key + "'");
    out.push_back(v.get<std::int64_t>());
  }
  if (out.size() != r) {
    throw ParseError(std::string("'") + key + "' has length " + std::to_string(out.size()) +
                     ", expected r = " + std::to_string(r));
  }
  return out;
}

}  // namespace detail

inline AlgebraElement from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("element JSON must be an object");
  if (!j.contains("field")) throw ParseError("missing field descriptor");
  const AlgebraContext ctx(detail::json_int(j, "n"), detail::json_int(j, "r"),
                           field_from_json(j["field"]));
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing 'terms' array");
  AlgebraElement e(ctx);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw ParseError("term needs a string 'coeff'");
    }
    const Scalar c = parse_scalar(t["coeff"].get<std::string>(), ctx.field());
    e.add_term(canonical(detail::json_tuple(t, "top", ctx.rank()),
                         detail::json_tuple(t, "bottom", ctx.rank()), ctx.n()),
               c);
  }
  return e;
}

inline AlgebraElement from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what(), err.byte);
  }
  return from_json(j);
}

}  // namespace schur
