#include "iwahori/oracles.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "iwahori/orbits.hpp"

namespace iwahori::oracle {

std::map<AffineWeylElt, int> bfs_lengths(int m, int bound) {
  // Any element in the box has length at most sum_{i<j} (2 bound + 1); a
  // path of that length moves each translation entry by at most one per
  // step, so the search radius below keeps every shortest path inside.
  const int max_len = m * (m - 1) / 2 * (2 * bound + 1);
  const int radius = bound + max_len + 2;
  auto inside = [&](const AffineWeylElt& w, int r) {
    for (int x : w.translation_part())
      if (x < -r || x > r) return false;
    return true;
  };

  std::map<AffineWeylElt, int> dist;
  std::deque<AffineWeylElt> queue;
  // w_1^k has sum(lambda) = -k, and s_1..s_m preserve the sum, so only
  // |k| <= m * bound can reach the box.
  for (int k = -m * bound; k <= m * bound; ++k) {
    AffineWeylElt w = AffineWeylElt::omega(m, k);
    if (dist.emplace(w, 0).second) queue.push_back(w);
  }
  while (!queue.empty()) {
    AffineWeylElt w = queue.front();
    queue.pop_front();
    const int d = dist.at(w);
    if (d >= max_len || m < 2) continue;
    for (int i = 1; i <= m; ++i) {
      AffineWeylElt n = w * AffineWeylElt::simple(m, i);
      if (!inside(n, radius)) continue;
      if (dist.emplace(n, d + 1).second) queue.push_back(n);
    }
  }
  std::map<AffineWeylElt, int> out;
  for (const auto& [w, d] : dist)
    if (inside(w, bound)) out.emplace(w, d);
  return out;
}

std::uint64_t injection_count(int n, int m) {
  std::uint64_t count = 0;
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  while (true) {
    std::set<int> seen(f.begin(), f.end());
    if (static_cast<int>(seen.size()) == n) ++count;
    std::size_t k = 0;
    while (k < f.size() && f[k] == m) f[k++] = 1;
    if (k == f.size()) break;
    ++f[k];
  }
  return count;
}

std::uint64_t orbit_count(int n, int m, int N, int r) {
  const int lo = -N - 2;
  const int hi = r + 2;
  std::uint64_t lambdas = 0;
  std::vector<int> lambda(static_cast<std::size_t>(n), lo);
  while (true) {
    if (lattice_condition(lambda, N, r)) ++lambdas;
    std::size_t k = 0;
    while (k < lambda.size() && lambda[k] == hi) lambda[k++] = lo;
    if (k == lambda.size()) break;
    ++lambda[k];
  }
  return lambdas * injection_count(n, m);
}

std::map<AffineWeylElt, LaurentPoly> iwahori_matsumoto_product(const AffineWeylElt& a, const AffineWeylElt& b) {
  const int m = a.rank();
  const Profile ps = Profile::s();
  const LaurentPoly v = LaurentPoly::variable(ps, var::s, 2);
  const LaurentPoly v_minus_one = v - LaurentPoly::one(ps);
  const ReducedWord rw = reduced_word(b);
  std::map<AffineWeylElt, LaurentPoly> cur{{a * AffineWeylElt::omega(m, rw.omega_power), LaurentPoly::one(ps)}};
  for (int i : rw.word) {
    const AffineWeylElt s = AffineWeylElt::simple(m, i);
    std::map<AffineWeylElt, LaurentPoly> next;
    auto add = [&](const AffineWeylElt& w, const LaurentPoly& c) {
      auto [it, inserted] = next.try_emplace(w, c);
      if (!inserted) it->second += c;
    };
    for (const auto& [w, c] : cur) {
      const AffineWeylElt ws = w * s;
      if (ws.length() > w.length()) {
        add(ws, c);
      } else {
        add(w, c * v_minus_one);
        add(ws, c * v);
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

}  // namespace iwahori::oracle
