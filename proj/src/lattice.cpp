#include "oscq/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace oscq::lattice {

std::vector<FockIndex> oscillator_basis(int n_max) {
  if (n_max < 0) throw std::domain_error("oscillator_basis: n_max must be >= 0");
  std::vector<FockIndex> basis;
  basis.reserve(static_cast<std::size_t>(basis_size(n_max)));
  for (int shell = 0; shell <= n_max; ++shell) {
    for (int m = 0; m <= shell; ++m) {
      basis.push_back(FockIndex{m, shell - m});
    }
  }
  return basis;
}

int basis_index(int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("basis_index: indices must be >= 0");
  const int shell = m + n;
  return shell * (shell + 1) / 2 + m;
}

int basis_size(int n_max) {
  if (n_max < 0) throw std::domain_error("basis_size: n_max must be >= 0");
  return (n_max + 1) * (n_max + 2) / 2;
}

std::vector<std::pair<double, double>> bs_set_oscillator(int n_max, double hbar) {
  std::vector<std::pair<double, double>> points;
  for (const FockIndex& ix : oscillator_basis(n_max)) {
    points.emplace_back(ix.m * hbar, ix.n * hbar);
  }
  return points;
}

BohrSommerfeldSetReduced bs_set_reduced(int q, double hbar) {
  if (q < 0) throw std::domain_error("bs_set_reduced: q must be >= 0");
  BohrSommerfeldSetReduced set;
  set.q = q;
  set.entries.reserve(static_cast<std::size_t>(2 * q + 1));
  for (int p = -q; p <= q; ++p) {
    ReducedBSEntry entry;
    entry.p = p;
    entry.radius_sq = static_cast<std::int64_t>(q) * q - static_cast<std::int64_t>(p) * p;
    entry.kind = (entry.radius_sq == 0) ? OrbitKind::pole : OrbitKind::circle;
    entry.radius = hbar * std::sqrt(static_cast<double>(entry.radius_sq));
    set.entries.push_back(entry);
  }
  return set;
}

ChainParity parity_chain(int p, int q) {
  if (q < 0 || p < -q || p > q) throw std::domain_error("parity_chain: need |p| <= q");
  return ((p - q) % 2 == 0) ? ChainParity::even_rel_q : ChainParity::odd_rel_q;
}

}  // namespace oscq::lattice
