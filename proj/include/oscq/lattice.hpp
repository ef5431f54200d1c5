#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oscq::lattice {

/// Oscillator basis label (m, n) on the quarter lattice.  The actions take
/// the values A1 = m*hbar and A2 = n*hbar on the torus this label names.
struct FockIndex {
  int m = 0;
  int n = 0;

  int shell() const { return m + n; }
  friend bool operator==(const FockIndex&, const FockIndex&) = default;
};

/// Reduced basis label: qpt3 eigenvalue p*hbar on the orbit sphere e = q*hbar.
/// Valid labels satisfy |p| <= q.
struct ReducedIndex {
  int p = 0;
  int q = 0;

  friend bool operator==(const ReducedIndex&, const ReducedIndex&) = default;
};

enum class ChainParity { even_rel_q, odd_rel_q };

enum class OrbitKind { circle, pole };

struct ReducedBSEntry {
  int p = 0;
  OrbitKind kind = OrbitKind::circle;
  double radius = 0.0;            // hbar * sqrt(q^2 - p^2)
  std::int64_t radius_sq = 0;     // q^2 - p^2, hbar-stripped integer
};

/// The 2q+1 level sets supporting reduced quantum states: 2q-1 circles for
/// |p| < q plus the two poles p = +-q (a single pole when q = 0).
struct BohrSommerfeldSetReduced {
  int q = 0;
  std::vector<ReducedBSEntry> entries;  // p ascending, -q..q
};

/// All (m, n) with m + n <= n_max, shell-major (ascending N = m + n) and then
/// m ascending inside a shell.  Length (n_max+1)(n_max+2)/2.
std::vector<FockIndex> oscillator_basis(int n_max);

/// Position of (m, n) in oscillator_basis(n_max) for any n_max >= m + n.
int basis_index(int m, int n);

int basis_size(int n_max);

/// Action values {(m*hbar, n*hbar) : m + n <= n_max}, in basis order.
std::vector<std::pair<double, double>> bs_set_oscillator(int n_max, double hbar = 1.0);

BohrSommerfeldSetReduced bs_set_reduced(int q, double hbar = 1.0);

/// even_rel_q iff p == q (mod 2); throws std::domain_error when |p| > q.
ChainParity parity_chain(int p, int q);

}  // namespace oscq::lattice
