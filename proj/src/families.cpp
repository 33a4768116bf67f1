#include "banpar/families.hpp"

#include <stdexcept>

namespace banpar {

AffineUnaryNetwork positive_cycle(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cycle size must be at least 1");
  AffineUnaryNetwork net;
  net.rules.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    net.rules.push_back(AffineUnaryRule::link(i == 0 ? n - 1 : i - 1, Sign::positive));
  return net;
}

AffineUnaryNetwork negative_cycle(std::uint32_t n) {
  AffineUnaryNetwork net = positive_cycle(n);
  net.rules[0].bit = true;
  return net;
}

AffineUnaryNetwork hhat(std::uint32_t n, HhatVariant variant) {
  if (n == 0) throw std::invalid_argument("hhat size parameter must be at least 1");
  const bool standard = variant == HhatVariant::standard;
  AffineUnaryNetwork net = standard ? negative_cycle(n) : positive_cycle(n);
  const std::uint32_t total = standard ? 3 * n : 2 * n;
  for (std::uint32_t i = n; i < total; ++i) net.rules.push_back(AffineUnaryRule::constant(false));
  return net;
}

PartitionedOrder mu_hat(std::uint32_t n, HhatVariant variant) {
  if (n == 0) throw std::invalid_argument("hhat size parameter must be at least 1");
  const std::uint32_t total = variant == HhatVariant::standard ? 3 * n : 2 * n;
  PartitionedOrder mu;
  for (std::uint32_t i = 0; i < n; ++i) mu.oblocks.push_back({i});
  std::vector<std::uint32_t> tail;
  for (std::uint32_t i = n; i < total; ++i) tail.push_back(i);
  mu.oblocks.push_back(std::move(tail));
  return mu;
}

PartitionedOrder mu_odd(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("mu_odd requires k >= 2");
  PartitionedOrder mu;
  std::vector<std::uint32_t> first;
  for (std::uint32_t i = 0; i < k; ++i) first.push_back(i);
  // (k, k+1, 2k, 2k-1, ..., k+2)
  std::vector<std::uint32_t> second{k, k + 1};
  for (std::uint32_t i = 2 * k; i >= k + 2; --i) second.push_back(i);
  mu.oblocks.push_back(std::move(first));
  mu.oblocks.push_back(std::move(second));
  return mu;
}

PartitionedOrder mu_even(std::uint32_t k) {
  if (k < 4) throw std::invalid_argument("mu_even requires k >= 4");
  PartitionedOrder mu;
  mu.oblocks.push_back({0});
  std::vector<std::uint32_t> second;
  for (std::uint32_t i = 1; i < k; ++i) second.push_back(i);
  // (k, 2k-1, k+1, 2k-2, 2k-3, ..., k+2): k and k+1 in ascending order
  // around the first descending element, then the rest descending.
  std::vector<std::uint32_t> third{k, 2 * k - 1, k + 1};
  for (std::uint32_t i = 2 * k - 2; i >= k + 2; --i) third.push_back(i);
  mu.oblocks.push_back(std::move(second));
  mu.oblocks.push_back(std::move(third));
  return mu;
}

}  // namespace banpar
