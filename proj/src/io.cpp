#include "ratsemi/io.hpp"

#include <cctype>

#include "ratsemi/errors.hpp"

namespace ratsemi {

using nlohmann::json;

json coeff_to_json(const Coeff& c) {
  if (c.is_rational()) return rat_str(c.rat());
  json coords = json::array();
  for (const auto& q : c.coords()) coords.push_back(rat_str(q));
  return json{{"m", c.conductor()}, {"coords", coords}};
}

Coeff coeff_from_json(const json& j) {
  if (j.is_string()) return Coeff(rat_from_string(j.get<std::string>()));
  if (j.is_number_integer()) return Coeff(static_cast<long>(j.get<long long>()));
  if (j.is_object()) {
    if (!j.contains("m") || !j.contains("coords"))
      throw invalid_input_error("cyclotomic coefficient needs \"m\" and \"coords\"");
    const unsigned m = j.at("m").get<unsigned>();
    std::vector<mpq_class> coords;
    for (const auto& e : j.at("coords")) {
      if (e.is_string())
        coords.push_back(rat_from_string(e.get<std::string>()));
      else if (e.is_number_integer())
        coords.push_back(mpq_class(static_cast<long>(e.get<long long>())));
      else
        throw invalid_input_error("bad cyclotomic coordinate");
    }
    return Coeff(m, std::move(coords));
  }
  throw invalid_input_error("bad coefficient in JSON");
}

json poly_to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(coeff_to_json(c));
  return a;
}

Polynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw invalid_input_error("polynomial JSON must be an array");
  std::vector<Coeff> c;
  for (const auto& e : j) c.push_back(coeff_from_json(e));
  return Polynomial(std::move(c));
}

json function_to_json(const RationalFunction& f) {
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num"))
    throw invalid_input_error("function JSON must be {\"num\": [...], \"den\": [...]}");
  Polynomial num = poly_from_json(j.at("num"));
  Polynomial den = j.contains("den") ? poly_from_json(j.at("den")) : Polynomial::one();
  return RationalFunction(std::move(num), std::move(den));
}

json mobius_to_json(const Mobius& mu) { return function_to_json(mu.to_rational()); }

Mobius mobius_from_json(const json& j) {
  return Mobius::from_rational(function_from_json(j));
}

namespace {

// Recursive-descent parser for polynomial/rational expressions in z.
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RationalFunction run() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw invalid_input_error("unexpected trailing input at position " +
                                std::to_string(pos_) + " in: " + s_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction acc = eat('-') ? negate(term()) : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        acc = add(acc, term());
      else if (eat('-'))
        acc = add(acc, negate(term()));
      else
        return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (eat('*'))
        acc = mul(acc, factor());
      else if (eat('/'))
        acc = div(acc, factor());
      else
        return acc;
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (eat('^')) {
      const unsigned e = read_uint();
      RationalFunction acc = RationalFunction(Polynomial::one());
      for (unsigned i = 0; i < e; ++i) acc = mul(acc, base);
      return acc;
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (eat('(')) {
      RationalFunction r = expr();
      if (!eat(')')) throw invalid_input_error("missing ')' in: " + s_);
      return r;
    }
    if (eat('-')) return negate(atom());
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return RationalFunction::identity();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RationalFunction::constant(Coeff(mpq_class(read_integer())));
    throw invalid_input_error("unexpected character '" + std::string(1, c) +
                              "' at position " + std::to_string(pos_) + " in: " + s_);
  }

  mpz_class read_integer() {
    skip_ws();
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    if (digits.empty()) throw invalid_input_error("expected a number in: " + s_);
    return mpz_class(digits);
  }

  unsigned read_uint() {
    mpz_class v = read_integer();
    if (!v.fits_uint_p()) throw invalid_input_error("exponent too large in: " + s_);
    return static_cast<unsigned>(v.get_ui());
  }

  static RationalFunction negate(const RationalFunction& f) {
    return RationalFunction(-f.num(), f.den());
  }
  static RationalFunction add(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
  }
  static RationalFunction mul(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num() * g.num(), f.den() * g.den());
  }
  static RationalFunction div(const RationalFunction& f, const RationalFunction& g) {
    if (g.num().is_zero()) throw invalid_input_error("division by zero in: ");
    return RationalFunction(f.num() * g.den(), f.den() * g.num());
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_function(const std::string& text) { return Parser(text).run(); }

Polynomial parse_poly(const std::string& text) {
  RationalFunction f = parse_function(text);
  if (!f.is_polynomial())
    throw invalid_input_error("expected a polynomial, got: " + f.str());
  return f.num();
}

RationalFunction read_function(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw invalid_input_error("malformed JSON input: " + text);
    return function_from_json(j);
  }
  return parse_function(text);
}

}  // namespace ratsemi
