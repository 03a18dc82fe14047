#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "halfdom/kernels.hpp"

using namespace halfdom::kernels;

TEST_CASE("scalar and avx2 elimination are bit-identical") {
  if (detected_isa() != Isa::avx2) {
    MESSAGE("AVX2 not available; comparing scalar with itself");
  }
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 31u, 64u, 129u}) {
    std::vector<double> src(n);
    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k) {
      src[k] = dist(rng);
      a[k] = dist(rng);
    }
    std::vector<double> b = a;
    const double f = dist(rng) / 7.0;
    eliminate_scalar(a.data(), src.data(), f, n);
    if (detected_isa() == Isa::avx2) {
      eliminate_avx2(b.data(), src.data(), f, n);
    } else {
      eliminate_scalar(b.data(), src.data(), f, n);
    }
    CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("dispatch follows the active variant") {
  const Isa original = active_isa();
  set_active_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  std::vector<double> dst = {1, 2, 3, 4, 5};
  const std::vector<double> src = {1, 1, 1, 1, 1};
  eliminate(dst.data(), src.data(), 0.5, dst.size());
  CHECK(dst == std::vector<double>{0.5, 1.5, 2.5, 3.5, 4.5});
  set_active_isa(Isa::avx2);
  CHECK(active_isa() == detected_isa());
  set_active_isa(original);
  CHECK(to_string(Isa::scalar) == "scalar");
}
