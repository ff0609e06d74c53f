#include "stab/dynsys.hpp"

#include <algorithm>
#include <map>

#include "stab/error.hpp"

namespace stab {

namespace {

using Mask = std::vector<char>;

std::vector<int> members(const Mask& m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<int>(i));
  return out;
}

Mask image(const FiniteDynSys& sys, const Mask& b) {
  Mask out(b.size(), 0);
  for (int i = 0; i < sys.size(); ++i)
    if (b[i]) out[sys.map[i]] = 1;
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

void validate(const FiniteDynSys& sys) {
  if (sys.labels.size() != sys.map.size()) throw Error(ErrorCode::InvalidArgument, "labels and map differ in size");
  for (int v : sys.map)
    if (v < 0 || v >= sys.size()) throw Error(ErrorCode::InvalidArgument, "image outside the state set");
}

SubsetReport analyze(const FiniteDynSys& sys) {
  validate(sys);
  const int n = sys.size();
  SubsetReport r;
  for (int i = 0; i < n; ++i)
    if (sys.map[i] == i) r.fix.push_back(i);
  // periodic points: after n steps every orbit sits on its cycle
  Mask on_cycle(n, 0);
  for (int i = 0; i < n; ++i) {
    int y = i;
    for (int k = 0; k < n; ++k) y = sys.map[y];
    on_cycle[y] = 1;
  }
  r.per = members(on_cycle);
  // greatest B with phi(B) = B: shrink B to phi(B) ∩ B, then drop points without images inside
  Mask b(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    Mask img = image(sys, b);
    for (int i = 0; i < n; ++i) {
      if (b[i] && (!img[i] || !b[sys.map[i]])) {
        b[i] = 0;
        changed = true;
      }
    }
  }
  r.stab = members(b);
  r.attrac = attractor_after(sys, n);
  return r;
}

std::vector<int> attractor_after(const FiniteDynSys& sys, int steps) {
  Mask cur(sys.size(), 1);
  for (int k = 0; k < steps; ++k) cur = image(sys, cur);  // phi^k(A) is decreasing in k
  return members(cur);
}

std::vector<int> stab_brute_force(const FiniteDynSys& sys) {
  validate(sys);
  const int n = sys.size();
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "brute force limited to 20 states");
  std::vector<int> best;
  for (unsigned long s = 0; s < (1UL << n); ++s) {
    Mask b(n, 0);
    for (int i = 0; i < n; ++i) b[i] = (s >> i) & 1;
    if (image(sys, b) != b) continue;
    auto m = members(b);
    if (m.size() > best.size()) best = m;
  }
  return best;
}

GodelleReport check_godelle(const FiniteDynSys& sys) {
  SubsetReport r = analyze(sys);
  GodelleReport g{};
  g.chain = subset(r.fix, r.per) && subset(r.per, r.stab) && subset(r.stab, r.attrac);
  Mask sb(sys.size(), 0);
  for (int i : r.stab) sb[i] = 1;
  g.stab_invariant = image(sys, sb) == sb;
  g.surjective = static_cast<int>(attractor_after(sys, 1).size()) == sys.size();
  g.stab_equals_attrac = r.stab == r.attrac;
  g.holds = g.chain && g.stab_invariant && (!g.surjective || g.stab_equals_attrac);
  return g;
}

FiniteDynSys godelle_truncation(int N, int M) {
  if (N < 1 || M < 1) throw Error(ErrorCode::InvalidBounds, "godelle truncation needs N, M >= 1");
  std::map<std::pair<int, int>, int> index;
  FiniteDynSys sys;
  for (int i = -N; i <= M; ++i) {
    for (int j = 0; j <= std::max(i - 1, 0); ++j) {
      index[{i, j}] = sys.size();
      sys.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      sys.map.push_back(-1);
    }
  }
  for (const auto& [ij, k] : index) {
    auto [i, j] = ij;
    std::pair<int, int> t = j > 0 ? std::pair{i, j - 1} : std::pair{std::min(i - 1, 0), 0};
    if (t.first < -N) t = {-N, 0};
    sys.map[k] = index.at(t);
  }
  return sys;
}

FiniteDynSys dynsys_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("map"))
    throw Error(ErrorCode::InvalidArgument, "expected {\"elements\": [...], \"map\": {...}}");
  FiniteDynSys sys;
  std::map<std::string, int> index;
  for (const auto& e : j.at("elements")) {
    std::string s = e.is_string() ? e.get<std::string>() : e.dump();
    if (index.count(s)) throw Error(ErrorCode::InvalidArgument, "duplicate element " + s);
    index[s] = sys.size();
    sys.labels.push_back(s);
    sys.map.push_back(-1);
  }
  const auto& m = j.at("map");
  if (!m.is_object()) throw Error(ErrorCode::InvalidArgument, "map must be an object");
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto src = index.find(it.key());
    std::string dst = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    auto tgt = index.find(dst);
    if (src == index.end() || tgt == index.end())
      throw Error(ErrorCode::InvalidArgument, "map entry " + it.key() + " -> " + dst + " leaves the element set");
    sys.map[src->second] = tgt->second;
  }
  for (int i = 0; i < sys.size(); ++i)
    if (sys.map[i] < 0) throw Error(ErrorCode::InvalidArgument, "map is not total: no image for " + sys.labels[i]);
  return sys;
}

nlohmann::json to_json(const FiniteDynSys& sys, const SubsetReport& r) {
  auto names = [&](const std::vector<int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i : v) a.push_back(sys.labels[i]);
    return a;
  };
  return {{"fix", names(r.fix)}, {"per", names(r.per)}, {"stab", names(r.stab)}, {"attrac", names(r.attrac)}};
}

nlohmann::json to_json(const GodelleReport& r) {
  return {{"inclusion_chain", r.chain},
          {"stab_invariant", r.stab_invariant},
          {"surjective", r.surjective},
          {"stab_equals_attrac", r.stab_equals_attrac},
          {"holds", r.holds}};
}

}  // namespace stab
