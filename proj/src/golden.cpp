#include "eulersum/golden.hpp"

#include <stdexcept>

#include "golden_data.hpp"
#include "json.hpp"

namespace eulersum {

std::vector<GoldenExample> parse_golden(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  std::vector<GoldenExample> out;
  for (const auto& e : doc.at("examples")) {
    GoldenExample g;
    g.kind = oracle::parse_kind(e.at("kind").get<std::string>());
    g.params = {e.at("p").get<int>(), e.at("q").get<int>(), e.at("n").get<int>()};
    g.expected = parse_json(e.at("expr").dump());
    out.push_back(std::move(g));
  }
  return out;
}

const std::vector<GoldenExample>& golden_examples() {
  static const std::vector<GoldenExample> examples = parse_golden(detail::kGoldenExamplesJson);
  return examples;
}

ConstExpr build_closed(oracle::Kind kind, const EulerSumParams& params) {
  switch (kind) {
    case oracle::Kind::S:
      return closed_forms::s_closed(params);
    case oracle::Kind::T:
      return closed_forms::t_closed(params);
    case oracle::Kind::A:
      return closed_forms::a_closed(params);
    case oracle::Kind::B:
      return closed_forms::b_closed(params);
    case oracle::Kind::eq3:
      return closed_forms::eq3_reference(params.q, params.n);
    case oracle::Kind::lemma1:
      return closed_forms::lemma1_rhs(params.q, params.n);
  }
  throw std::logic_error("build_closed: unknown kind");
}

}  // namespace eulersum
