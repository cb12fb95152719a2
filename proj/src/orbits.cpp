#include "iwahori/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace iwahori {

namespace {

void check_shape(int n, int m) {
  if (n < 1 || m < 1 || n > m) throw std::invalid_argument("need 1 <= n <= m");
}

}  // namespace

std::vector<Injection> injections(int n, int m) {
  check_shape(n, m);
  std::vector<Injection> out;
  std::vector<bool> choose(static_cast<std::size_t>(m), false);
  std::fill(choose.begin(), choose.begin() + n, true);
  std::vector<std::vector<int>> subsets;
  do {
    std::vector<int> subset;
    for (int i = 0; i < m; ++i)
      if (choose[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
    subsets.push_back(subset);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::sort(subsets.begin(), subsets.end());
  for (const auto& subset : subsets) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    do out.push_back({subset, image});
    while (std::next_permutation(image.begin(), image.end()));
  }
  return out;
}

std::uint64_t injection_count(int n, int m) {
  check_shape(n, m);
  std::uint64_t c = 1;
  for (int k = m - n + 1; k <= m; ++k) c *= static_cast<std::uint64_t>(k);
  return c;
}

bool lattice_condition(const std::vector<int>& lambda, int N, int r) {
  std::vector<int> nu = lambda;
  std::sort(nu.begin(), nu.end());
  do {
    // w_0 reverses the coordinates.
    if (nu.front() > r || -nu.back() > N) return false;
  } while (std::next_permutation(nu.begin(), nu.end()));
  return true;
}

std::vector<OrbitLabel> enumerate_orbits(int n, int m, int N, int r) {
  check_shape(n, m);
  if (N + r <= 0) throw std::invalid_argument("bounds need N + r > 0");
  const auto inj = injections(n, m);
  std::vector<OrbitLabel> out;
  if (-N > r) return out;
  std::vector<int> lambda(static_cast<std::size_t>(n), -N);
  while (true) {
    for (const auto& i : inj) out.push_back({lambda, i});
    std::size_t k = lambda.size();
    while (k > 0 && lambda[k - 1] == r) lambda[--k] = -N;
    if (k == 0) break;
    ++lambda[k - 1];
  }
  return out;
}

std::uint64_t count_orbits(int n, int m, int N, int r) {
  check_shape(n, m);
  if (N + r <= 0) throw std::invalid_argument("bounds need N + r > 0");
  if (-N > r) return 0;
  std::uint64_t per = 1;
  for (int k = 0; k < n; ++k) per *= static_cast<std::uint64_t>(N + r + 1);
  return per * injection_count(n, m);
}

std::vector<std::vector<std::string>> orbit_representative(const OrbitLabel& label, int m) {
  const int n = static_cast<int>(label.lambda.size());
  const auto& sub = label.inj.subset;
  const auto& img = label.inj.image;
  check_shape(n, m);
  if (static_cast<int>(sub.size()) != n || img.size() != sub.size()) throw std::invalid_argument("malformed label");
  std::vector<std::vector<std::string>> table(static_cast<std::size_t>(n),
                                              std::vector<std::string>(static_cast<std::size_t>(m), "0"));
  for (std::size_t k = 0; k < sub.size(); ++k) {
    const int i = sub[k];
    const int row = img[k];
    if (i < 1 || i > m || row < 1 || row > n) throw std::invalid_argument("malformed label");
    table[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(i - 1)] =
        "t^" + std::to_string(label.lambda[static_cast<std::size_t>(row - 1)]);
  }
  return table;
}

std::string to_string(const OrbitLabel& label) {
  std::string out = "lambda=(";
  for (std::size_t i = 0; i < label.lambda.size(); ++i) out += (i ? "," : "") + std::to_string(label.lambda[i]);
  out += ") s:";
  for (std::size_t k = 0; k < label.inj.subset.size(); ++k)
    out += " " + std::to_string(label.inj.subset[k]) + "->" + std::to_string(label.inj.image[k]);
  return out;
}

}  // namespace iwahori
