#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "stab/dynsys.hpp"
#include "util.hpp"

using namespace stab;

namespace {

FiniteDynSys make(std::vector<int> map) {
  FiniteDynSys s;
  for (std::size_t i = 0; i < map.size(); ++i) s.labels.push_back(std::to_string(i));
  s.map = std::move(map);
  return s;
}

FiniteDynSys random_system(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (auto& v : m) v = static_cast<int>(gen::integer(0, n - 1));
  return make(std::move(m));
}

std::vector<int> all(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<int> image(const FiniteDynSys& s, const std::vector<int>& b) {
  std::set<int> out;
  for (int v : b) out.insert(s.map[v]);
  return {out.begin(), out.end()};
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// phi^k(A) for k large, by repeated images
std::vector<int> iterate_image(const FiniteDynSys& s, int k) {
  std::vector<int> cur = all(s.size());
  for (int i = 0; i < k; ++i) cur = image(s, cur);
  return cur;
}

}  // namespace

TEST_CASE("analyze examples") {
  auto id = make({0, 1, 2});
  auto r = analyze(id);
  CHECK(r.fix == all(3));
  CHECK(r.per == all(3));
  CHECK(r.stab == all(3));
  CHECK(r.attrac == all(3));

  auto sink = make({0, 0});
  r = analyze(sink);
  for (const auto* s : {&r.fix, &r.per, &r.stab, &r.attrac}) CHECK(*s == std::vector<int>{0});

  auto cyc = make({1, 2, 0});
  r = analyze(cyc);
  CHECK(r.fix.empty());
  CHECK(r.per == all(3));
  CHECK(r.stab == all(3));
  CHECK(r.attrac == all(3));
}

TEST_CASE("check_godelle examples") {
  auto perm = make({3, 0, 1, 2, 4});
  auto g = check_godelle(perm);
  CHECK(g.surjective);
  CHECK(g.stab_equals_attrac);
  CHECK(g.holds);
  auto sink = check_godelle(make({0, 0}));
  CHECK_FALSE(sink.surjective);
  CHECK(sink.chain);
  CHECK(sink.holds);
  auto big = random_system(50);
  CHECK(check_godelle(big).chain);
}

TEST_CASE("random systems satisfy the inclusion chain and invariance") {
  for (int t = 0; t < 100; ++t) {
    auto s = random_system(static_cast<int>(gen::integer(1, 200)));
    auto r = analyze(s);
    CHECK(subset(r.fix, r.per));
    CHECK(subset(r.per, r.stab));
    CHECK(subset(r.stab, r.attrac));
    CHECK(image(s, r.stab) == r.stab);
    auto g = check_godelle(s);
    CHECK(g.holds);
    if (g.surjective) CHECK(r.stab == r.attrac);
    CHECK(attractor_after(s, s.size()) == attractor_after(s, 2 * s.size()));
    CHECK(r.attrac == iterate_image(s, s.size()));
  }
}

TEST_CASE("random permutations are surjective with stab = attrac") {
  for (int t = 0; t < 30; ++t) {
    auto m = all(static_cast<int>(gen::integer(1, 40)));
    std::shuffle(m.begin(), m.end(), gen::rng());
    auto s = make(m);
    auto r = analyze(s);
    CHECK(r.stab == all(s.size()));
    CHECK(r.stab == r.attrac);
    CHECK(check_godelle(s).surjective);
  }
}

TEST_CASE("stab is the largest invariant subset") {
  for (int t = 0; t < 100; ++t) {
    auto s = random_system(static_cast<int>(gen::integer(1, 12)));
    const int n = s.size();
    // every B with phi(B) = B is inside stab, and stab itself qualifies
    std::vector<int> largest;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> b;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) b.push_back(i);
      if (image(s, b) == b && b.size() > largest.size()) largest = b;
    }
    auto r = analyze(s);
    CHECK(r.stab == largest);
    CHECK(stab_brute_force(s) == largest);
  }
}

TEST_CASE("godelle truncation") {
  auto s = godelle_truncation(3, 3);
  validate(s);
  // i = 2, 3 carry j up to i - 1
  CHECK(s.size() == 4 + 1 + 2 + 3);
  auto r = analyze(s);
  const auto idx = [&](const std::string& l) {
    return static_cast<int>(std::find(s.labels.begin(), s.labels.end(), l) - s.labels.begin());
  };
  CHECK(r.attrac == std::vector<int>{idx("(-3,0)")});
  CHECK(r.stab == r.attrac);
  CHECK(r.attrac == iterate_image(s, 2 * s.size()));
  CHECK(s.map[idx("(3,2)")] == idx("(3,1)"));
  CHECK(s.map[idx("(3,0)")] == idx("(0,0)"));
  CHECK(s.map[idx("(0,0)")] == idx("(-1,0)"));
  auto small = godelle_truncation(1, 1);
  CHECK(small.size() == 3);
  CHECK(analyze(small).stab.size() == 1);
  CHECK(error_of([] { godelle_truncation(0, 2); }) == ErrorCode::InvalidBounds);
}

TEST_CASE("json round trip and validation") {
  auto j = nlohmann::json::parse(R"({"elements": ["a", "b", "c"], "map": {"a": "b", "b": "a", "c": "a"}})");
  auto s = dynsys_from_json(j);
  auto out = to_json(s, analyze(s));
  CHECK(out["stab"] == nlohmann::json({"a", "b"}));
  CHECK(out["fix"] == nlohmann::json::array());
  auto missing = nlohmann::json::parse(R"({"elements": ["a", "b"], "map": {"a": "b"}})");
  CHECK(error_of([&] { dynsys_from_json(missing); }) == ErrorCode::InvalidArgument);
  auto outside = nlohmann::json::parse(R"({"elements": ["a"], "map": {"a": "z"}})");
  CHECK(error_of([&] { dynsys_from_json(outside); }) == ErrorCode::InvalidArgument);
}
