#pragma once

// Polynomials in K[t_1, ..., t_{r-1}, t_r, t_r^{-1}].

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/error.hpp"
#include "schur/field.hpp"
#include "schur/io.hpp"

namespace schur {

class LaurentPoly {
 public:
  using Exponents = std::vector<std::int64_t>;
  using Terms = std::map<Exponents, Scalar>;

  LaurentPoly(std::size_t vars, Field field) : vars_(vars), field_(field) {
    if (vars == 0) throw DomainError("a Laurent polynomial needs at least one variable");
  }

  static LaurentPoly constant(std::size_t vars, const Scalar& c) {
    LaurentPoly p(vars, c.field());
    p.add_term(Exponents(vars, 0), c);
    return p;
  }

  static LaurentPoly one(std::size_t vars, const Field& f) {
    return constant(vars, Scalar::one(f));
  }

  /// t_k for k in 1..vars.
  static LaurentPoly variable(std::size_t vars, const Field& f, std::size_t k) {
    if (k < 1 || k > vars) throw DomainError("variable index out of range");
    Exponents e(vars, 0);
    e[k - 1] = 1;
    LaurentPoly p(vars, f);
    p.add_term(e, Scalar::one(f));
    return p;
  }

  static LaurentPoly monomial(const Exponents& e, const Scalar& c) {
    LaurentPoly p(e.size(), c.field());
    p.add_term(e, c);
    return p;
  }

  std::size_t vars() const noexcept { return vars_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_) throw DomainError("exponent vector has the wrong length");
    for (std::size_t k = 0; k + 1 < vars_; ++k) {
      if (e[k] < 0) {
        throw DomainError("only the last variable may carry a negative exponent");
      }
    }
    if (!(c.field() == field_)) throw DomainError("coefficient from another field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly out(a.vars_, a.field_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.vars_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = detail::checked_add(ea[k], eb[k]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check(const LaurentPoly& o) const {
    if (vars_ != o.vars_ || !(field_ == o.field_)) {
      throw DomainError("Laurent polynomials over different rings");
    }
  }

  std::size_t vars_;
  Field field_;
  Terms terms_;
};

/// Leading (lexicographically largest) monomial first, e.g. "t1^2 - 2*t2".
inline std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string body;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!body.empty()) body += '*';
      body += "t" + std::to_string(k + 1);
      if (e[k] != 1) body += "^" + std::to_string(e[k]);
    }
    detail::append_signed(out, c, body, first, !body.empty());
    first = false;
  }
  return out;
}

/// {"r": int, "terms": [{"exps": [int...], "coeff": string}]}, exponent
/// vectors in ascending lexicographic order.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  j["r"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t = Json::object();
    t["exps"] = e;
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j, const Field& field) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  const std::int64_t r = detail::json_int(j, "r");
  if (r < 1) throw ParseError("'r' must be positive");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing 'terms' array");
  LaurentPoly p(static_cast<std::size_t>(r), field);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw ParseError("term needs a string 'coeff'");
    }
    const auto exps = detail::json_tuple(t, "exps", static_cast<std::size_t>(r));
    for (std::size_t k = 0; k + 1 < exps.size(); ++k) {
      if (exps[k] < 0) throw ParseError("negative exponent on a non-final variable");
    }
    p.add_term(exps, parse_scalar(t["coeff"].get<std::string>(), field));
  }
  return p;
}

}  // namespace schur
