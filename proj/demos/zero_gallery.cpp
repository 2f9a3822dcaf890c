// Enumerates verified simple zeros by ring and writes a small PGM picture of
// the ring-9 cloud (Julia-set-like structure) to zero_cloud.pgm.

#include <cstdio>
#include <fstream>
#include <map>

#include "phif/phif.hpp"

int main() {
  const phif::EvalConfig cfg{};
  const auto recs = phif::enumerate_simple_zeros(6, cfg);
  std::map<int, int> by_ring;
  for (const auto& r : recs) ++by_ring[r.ring];
  std::printf("verified simple zeros with prefix length <= 6: %zu\n",
              recs.size());
  for (const auto& [ring, count] : by_ring)
    std::printf("  ring S_%-2d: %d zeros\n", ring, count);
  std::printf("worst residual: %.3e\n\n",
              std::max_element(recs.begin(), recs.end(),
                               [](const auto& a, const auto& b) {
                                 return a.residual < b.residual;
                               })
                  ->residual);

  const int n = 16, n1 = 7;
  const auto cloud = phif::approx_zero_cloud(n, n1);
  std::printf("cloud(%d, %d): %zu approximate zeros in ring S_%d\n", n, n1,
              cloud.size(), n - n1);
  std::vector<std::complex<double>> pts;
  pts.reserve(cloud.size());
  for (const auto& p : cloud) pts.push_back(p.value);
  const double R = phif::two_phi_pow_d(n - n1 + 1);
  std::ofstream out("zero_cloud.pgm", std::ios::binary);
  phif::write_pgm(out, phif::rasterize(pts, 512, 512, -R, R, -R, R));
  std::printf("wrote zero_cloud.pgm (512x512)\n");
  return 0;
}
