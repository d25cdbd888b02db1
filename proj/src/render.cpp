#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/symbolic.hpp"
#include "json.hpp"

namespace eulersum {

namespace {

using nlohmann::json;

std::string plain_atom(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::pi:
      return a.order() == 1 ? "pi" : "pi^" + std::to_string(a.order());
    case AtomKind::catalan:
      return "G";
    case AtomKind::sqrt3:
      return "sqrt(3)";
    case AtomKind::zeta:
      return "zeta(" + std::to_string(a.order()) + ")";
    case AtomKind::hurwitz:
      return "zeta(" + std::to_string(a.order()) + "," + std::to_string(a.num()) + "/" + std::to_string(a.den()) + ")";
    case AtomKind::cot:
      return "cot(" + (a.num() == 1 ? std::string() : std::to_string(a.num()) + "*") + "pi/" + std::to_string(a.den()) + ")";
  }
  return {};
}

std::string latex_atom(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::pi:
      return a.order() == 1 ? "\\pi" : "\\pi^{" + std::to_string(a.order()) + "}";
    case AtomKind::catalan:
      return "G";
    case AtomKind::sqrt3:
      return "\\sqrt{3}";
    case AtomKind::zeta:
      return "\\zeta(" + std::to_string(a.order()) + ")";
    case AtomKind::hurwitz:
      return "\\zeta(" + std::to_string(a.order()) + ",\\frac{" + std::to_string(a.num()) + "}{" +
             std::to_string(a.den()) + "})";
    case AtomKind::cot:
      return "\\cot(\\frac{" + (a.num() == 1 ? std::string() : std::to_string(a.num())) + "\\pi}{" +
             std::to_string(a.den()) + "})";
  }
  return {};
}

json json_atom(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::pi:
      return {{"kind", "pi"}, {"power", a.order()}};
    case AtomKind::catalan:
      return {{"kind", "catalan"}};
    case AtomKind::sqrt3:
      return {{"kind", "sqrt3"}};
    case AtomKind::zeta:
      return {{"kind", "zeta"}, {"s", a.order()}};
    case AtomKind::hurwitz:
      return {{"kind", "hurwitz"}, {"s", a.order()}, {"t", std::to_string(a.num()) + "/" + std::to_string(a.den())}};
    case AtomKind::cot:
      return {{"kind", "cot"}, {"j", a.num()}, {"n", a.den()}};
  }
  return {};
}

// Runs of equal atoms, e.g. cot(pi/5) cot(pi/5) -> (cot(pi/5), 2).
std::vector<std::pair<Atom, int>> group_atoms(const std::vector<Atom>& atoms) {
  std::vector<std::pair<Atom, int>> out;
  for (const auto& a : atoms) {
    if (!out.empty() && out.back().first == a) {
      ++out.back().second;
    } else {
      out.emplace_back(a, 1);
    }
  }
  return out;
}

std::string render_plain(const ConstExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string body;
    if (t.atoms.empty() || mag != Rational(1)) body = mag.str();
    for (const auto& [a, power] : group_atoms(t.atoms)) {
      if (!body.empty()) body += " * ";
      body += plain_atom(a);
      if (power > 1) body += "^" + std::to_string(power);
    }
    out += body;
  }
  return out;
}

std::string render_latex(const ConstExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string atoms;
    for (const auto& [a, power] : group_atoms(t.atoms)) {
      if (!atoms.empty()) atoms += " ";
      atoms += latex_atom(a);
      if (power > 1) atoms += "^{" + std::to_string(power) + "}";
    }
    const std::string num = mag.numerator().get_str();
    std::string numerator;
    if (atoms.empty()) {
      numerator = num;
    } else if (num == "1") {
      numerator = atoms;
    } else {
      numerator = num + " " + atoms;
    }
    if (mag.is_integer()) {
      out += numerator;
    } else {
      out += "\\frac{" + numerator + "}{" + mag.denominator().get_str() + "}";
    }
  }
  return out;
}

std::string render_json(const ConstExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json atoms = json::array();
    for (const auto& a : t.atoms) atoms.push_back(json_atom(a));
    terms.push_back({{"coeff", t.coeff.str()}, {"atoms", atoms}});
  }
  return json{{"terms", terms}}.dump();
}

int get_int(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("parse_json: atom needs integer field '") + key + "'");
  }
  return obj.at(key).get<int>();
}

ConstExpr parse_atom(const json& a) {
  if (!a.is_object() || !a.contains("kind") || !a.at("kind").is_string()) {
    throw std::invalid_argument("parse_json: atom must be an object with a string 'kind'");
  }
  const std::string kind = a.at("kind").get<std::string>();
  if (kind == "pi") return pi_expr(get_int(a, "power"));
  if (kind == "catalan") return ConstExpr(Atom::catalan());
  if (kind == "sqrt3") return ConstExpr(Atom::sqrt3());
  if (kind == "zeta") return ConstExpr(Atom::zeta(get_int(a, "s")));
  if (kind == "hurwitz") {
    if (!a.contains("t") || !a.at("t").is_string()) throw std::invalid_argument("parse_json: hurwitz atom needs string 't'");
    return hurwitz_expr(get_int(a, "s"), Rational::parse(a.at("t").get<std::string>()));
  }
  if (kind == "cot") return cot_expr(get_int(a, "j"), get_int(a, "n"));
  throw std::invalid_argument("parse_json: unknown atom kind '" + kind + "'");
}

}  // namespace

std::string render(const Atom& atom, Format format) {
  switch (format) {
    case Format::plain:
      return plain_atom(atom);
    case Format::latex:
      return latex_atom(atom);
    case Format::json:
      return json_atom(atom).dump();
  }
  return {};
}

std::string render(const ConstExpr& e, Format format) {
  switch (format) {
    case Format::plain:
      return render_plain(e);
    case Format::latex:
      return render_latex(e);
    case Format::json:
      return render_json(e);
  }
  return {};
}

ConstExpr parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("parse_json: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc.at("terms").is_array()) {
    throw std::invalid_argument("parse_json: expected an object with a 'terms' array");
  }
  ConstExpr out;
  for (const auto& t : doc.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.at("coeff").is_string()) {
      throw std::invalid_argument("parse_json: term needs a string 'coeff'");
    }
    ConstExpr term(Rational::parse(t.at("coeff").get<std::string>()));
    if (t.contains("atoms")) {
      if (!t.at("atoms").is_array()) throw std::invalid_argument("parse_json: 'atoms' must be an array");
      for (const auto& a : t.at("atoms")) term *= parse_atom(a);
    }
    out += term;
  }
  return out;
}

}  // namespace eulersum
