#include "eulersum/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum::quadrature {

namespace {

// Abscissa pair for +t and -t: x_small = e/(1+e), x_big = 1/(1+e) with
// e = exp(-pi sinh|t|), both sharing weight pi cosh t e/(1+e)^2.
struct Node {
  BigFloat small;
  BigFloat big;
  BigFloat weight;
};

// levels[0] holds t = 0, 1, 2, ...; levels[L] holds the odd multiples of 2^-L.
struct NodeTable {
  std::mutex mutex;
  std::vector<std::vector<Node>> levels;
};

std::shared_ptr<NodeTable> node_table(mpfr_prec_t bits) {
  static std::mutex mutex;
  static std::map<mpfr_prec_t, std::shared_ptr<NodeTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[bits];
  if (!slot) slot = std::make_shared<NodeTable>();
  return slot;
}

std::vector<Node> build_level(int level, mpfr_prec_t bits) {
  const BigFloat pi = numerics::detail::pi_bits(bits);
  const BigFloat one(1L, bits);
  // Weights below this no longer affect the sum.
  const BigFloat cutoff = ldexp(one, -static_cast<long>(bits) - 16);
  std::vector<Node> nodes;
  const BigFloat h = ldexp(one, -level);
  const long start = level == 0 ? 0 : 1;
  const long stride = level == 0 ? 1 : 2;
  for (long i = start;; i += stride) {
    const BigFloat t = h * i;
    const BigFloat e = exp(-(pi * sinh(t)));
    const BigFloat denom = one + e;
    BigFloat weight = pi * cosh(t) * e / (denom * denom);
    if (i > 0 && weight < cutoff) break;
    nodes.push_back({e / denom, one / denom, std::move(weight)});
  }
  return nodes;
}

const std::vector<Node>& level_nodes(NodeTable& table, int level, mpfr_prec_t bits) {
  std::lock_guard<std::mutex> lock(table.mutex);
  while (static_cast<int>(table.levels.size()) <= level) {
    table.levels.push_back(build_level(static_cast<int>(table.levels.size()), bits));
  }
  return table.levels[level];
}

}  // namespace

Result tanh_sinh(const Integrand& f, mpfr_prec_t bits, int max_levels, const BigFloat& tolerance) {
  auto table = node_table(bits);
  Result result;
  BigFloat sum(bits);
  BigFloat previous(bits);
  for (int level = 0; level <= max_levels; ++level) {
    const auto& nodes = level_nodes(*table, level, bits);
    for (const auto& node : nodes) {
      if (level == 0 && node.small == node.big) {
        sum += node.weight * f(node.small, node.big);
        ++result.evaluations;
        continue;
      }
      sum += node.weight * (f(node.small, node.big) + f(node.big, node.small));
      result.evaluations += 2;
    }
    BigFloat estimate = ldexp(sum, -level);
    result.levels = level;
    if (level > 0) {
      result.last_difference = abs(estimate - previous);
      if (level >= 3 && result.last_difference < tolerance) {
        result.value = std::move(estimate);
        return result;
      }
    }
    previous = std::move(estimate);
  }
  throw ConvergenceError("tanh-sinh: no convergence after " + std::to_string(max_levels) +
                         " levels (last difference " + to_string(result.last_difference, 6) + ")");
}

}  // namespace eulersum::quadrature
