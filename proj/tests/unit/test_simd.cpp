#include <doctest.h>

#include <cstdlib>

#include "flood/connection_table.hpp"
#include "flood/random.hpp"
#include "flood/simd/kernels.hpp"
#include "../support/reference.hpp"

using namespace flood;

namespace {

std::vector<std::int32_t> random_row(random::Rng& rng, std::size_t n, std::int32_t cap) {
  std::vector<std::int32_t> row(n);
  for (auto& x : row) x = static_cast<std::int32_t>(random::below(rng, static_cast<std::uint64_t>(cap) + 1));
  return row;
}

}  // namespace

TEST_CASE("scalar kernels") {
  const auto& k = simd::scalar_kernels();
  std::vector<std::int32_t> dst{5, 5, 5, 9};
  const std::vector<std::int32_t> row{0, 3, 9, 9};
  k.min_plus_row(dst.data(), row.data(), 2, 9, dst.size());
  CHECK(dst == std::vector<std::int32_t>{2, 5, 5, 9});
  std::vector<std::int32_t> a{4, 1, 7};
  const std::vector<std::int32_t> b{3, 2, 7};
  k.min_rows(a.data(), b.data(), a.size());
  CHECK(a == std::vector<std::int32_t>{3, 1, 7});
  std::vector<std::int32_t> table{5, 5, 5};
  const std::vector<std::int32_t> direct{4, 6, 6};
  const std::vector<std::int32_t> recoloured{9, 3, 9};
  CHECK(k.relax_row(table.data(), direct.data(), recoloured.data(), 9, table.size()));
  CHECK(table == std::vector<std::int32_t>{4, 4, 5});
  CHECK_FALSE(k.relax_row(table.data(), direct.data(), recoloured.data(), 9, table.size()));
}

TEST_CASE("every available kernel set matches the scalar reference") {
  const auto& scalar = simd::scalar_kernels();
  random::Rng rng(3);
  for (const simd::KernelSet* k : simd::available_kernels()) {
    CAPTURE(simd::to_string(k->isa));
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u}) {
      for (int trial = 0; trial < 20; ++trial) {
        const std::int32_t cap = 1 + static_cast<std::int32_t>(random::below(rng, 40));
        const auto row = random_row(rng, n, cap);
        const auto base = random_row(rng, n, cap);
        const std::int32_t offset = static_cast<std::int32_t>(random::below(rng, static_cast<std::uint64_t>(cap) + 1));

        auto want = base;
        auto got = base;
        scalar.min_plus_row(want.data(), row.data(), offset, cap, n);
        k->min_plus_row(got.data(), row.data(), offset, cap, n);
        CHECK(got == want);

        want = base;
        got = base;
        scalar.min_rows(want.data(), row.data(), n);
        k->min_rows(got.data(), row.data(), n);
        CHECK(got == want);

        const auto recoloured = random_row(rng, n, cap);
        want = base;
        got = base;
        const bool want_changed = scalar.relax_row(want.data(), row.data(), recoloured.data(), cap, n);
        const bool got_changed = k->relax_row(got.data(), row.data(), recoloured.data(), cap, n);
        CHECK(got == want);
        CHECK(got_changed == want_changed);
      }
    }
  }
}

TEST_CASE("tables are identical under every kernel set") {
  random::Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(random::below(rng, 30));
    const auto g = ref::proper_graph(rng, n, 2 + static_cast<int>(random::below(rng, 4)), 10);
    TableOptions scalar_options;
    scalar_options.kernels = &simd::scalar_kernels();
    const auto want = compute_table(g, scalar_options);
    for (const simd::KernelSet* k : simd::available_kernels()) {
      TableOptions options;
      options.kernels = k;
      CHECK(compute_table(g, options) == want);
    }
  }
}

TEST_CASE("best kernel set is available") {
  const auto all = simd::available_kernels();
  REQUIRE_FALSE(all.empty());
  CHECK(all.front()->isa == simd::Isa::scalar);
  const auto& best = simd::best_kernels();
  CHECK(std::find(all.begin(), all.end(), &best) != all.end());
}
