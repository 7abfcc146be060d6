#include <doctest.h>

#include <set>

#include "ksinv/verify.hpp"

TEST_CASE("every property passes up to n = 3") {
  int streamed = 0;
  const auto results = ksinv::run_verification(3, [&](const ksinv::PropertyResult&) { ++streamed; });
  CHECK(results.size() == 20);
  CHECK(streamed == static_cast<int>(results.size()));
  std::set<std::string> names;
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.name.find('.') != std::string::npos);
    names.insert(r.name);
  }
  CHECK(names.size() == results.size());
}

TEST_CASE("verification is deterministic") {
  const auto a = ksinv::run_verification(1);
  const auto b = ksinv::run_verification(1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].detail == b[i].detail);
  }
}
