#include <doctest.h>

#include <cmath>

#include "entrokit/generators.hpp"
#include "entrokit/plugin_estimator.hpp"
#include "support/oracles.hpp"

using namespace entrokit;
namespace ts = entrokit::testsupport;

namespace {

SymbolSequence from_digits(const char* digits) {
  std::vector<std::uint8_t> v;
  for (const char* c = digits; *c; ++c) v.push_back(static_cast<std::uint8_t>(*c - '0'));
  return SymbolSequence(std::move(v), 2);
}

}  // namespace

TEST_CASE("plug-in on tiny strings") {
  CHECK(plugin_entropy(from_digits("0101"), 1).bits == doctest::Approx(1.0).epsilon(1e-12));
  // windows 01, 10, 01: H(2/3, 1/3) / 2
  CHECK(plugin_entropy(from_digits("0101"), 2).bits == doctest::Approx(0.4591).epsilon(1e-4));
  CHECK_THROWS_AS(plugin_entropy(from_digits("0101"), 5), std::domain_error);
}

TEST_CASE("word keys larger than 64 bits are rejected") {
  std::vector<std::uint8_t> v(100, 0);
  const SymbolSequence x(std::move(v), 2);
  CHECK_THROWS_AS(plugin_entropy(x, 63), std::length_error);
  CHECK_NOTHROW(plugin_entropy(x, 60));
}

TEST_CASE("w=1 equals the binary entropy of the empirical rate") {
  const auto x = generate(IidSpec{0.3}, 5000, {3, 0});
  std::int64_t ones = 0;
  for (std::int64_t i = 0; i < x.length(); ++i) ones += x[i];
  const double rate = static_cast<double>(ones) / static_cast<double>(x.length());
  CHECK(plugin_entropy(x, 1).bits == doctest::Approx(binary_entropy(rate).bits).epsilon(1e-12));
}

TEST_CASE("plug-in mean stays below the true block entropy") {
  // For iid data the per-symbol block entropy equals h(p) for every w, so
  // the estimator's expectation must sit below h(p).
  const double truth = binary_entropy(0.25).bits;
  const int reps = 50;
  std::vector<double> ests;
  for (int r = 0; r < reps; ++r) {
    const auto x = generate(IidSpec{0.25}, 100000, {770, static_cast<std::uint64_t>(r)});
    ests.push_back(plugin_entropy(x, 20).bits);
  }
  const double mean = ts::sample_mean(ests);
  const double sem = ts::sample_std(ests) / std::sqrt(static_cast<double>(reps));
  CHECK(mean <= truth + 3.0 * sem);
}

TEST_CASE("undersampling pushes long-word estimates down") {
  // Tenth-order dependence, moderate data: w=20 is severely undersampled
  // while w=10 is fine, so the long-word estimate drops well below it.
  MarkovSpec m;
  m.order = 10;
  m.alphabet_size = 2;
  const std::int64_t rows = 1 << 10;
  m.transition.assign(static_cast<std::size_t>(rows), {0.0, 0.0});
  for (std::int64_t r = 0; r < rows; ++r) {
    const int old = (r >> 9) & 1;  // symbol ten steps back
    const double p1 = old ? 0.75 : 0.2;
    m.transition[static_cast<std::size_t>(r)] = {1.0 - p1, p1};
  }
  const auto x = generate(ProcessSpec(m), 100000, {4242, 0});
  const double w10 = plugin_entropy(x, 10).bits;
  const double w20 = plugin_entropy(x, 20).bits;
  CHECK(w20 < w10 - 0.05);
}

TEST_CASE("histogram totals and counts are consistent") {
  const auto x = generate(IidSpec{0.5}, 4096, {5, 0});
  const auto h = word_histogram(x, 12);
  CHECK(h.total_windows == x.length() - 12 + 1);
  std::int64_t sum = 0;
  for (const auto& [key, count] : h.counts) {
    CHECK(key < (std::uint64_t{1} << 12));
    sum += count;
  }
  CHECK(sum == h.total_windows);
}
