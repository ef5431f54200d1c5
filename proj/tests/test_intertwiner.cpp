#include "doctest.h"

#include <cmath>

#include "oscq/intertwiner.hpp"
#include "oscq/oscillator.hpp"
#include "oscq/reduced.hpp"

using namespace oscq;
using namespace oscq::qred;
using oscq::lattice::FockIndex;
using oscq::lattice::ReducedIndex;
using oscq::op::Complex;

TEST_CASE("intertwiner index maps") {
  const Intertwiner q3 = build_intertwiner(3);
  CHECK(q3.forward(FockIndex{2, 1}) == ReducedIndex{1, 3});
  CHECK(q3.inverse(ReducedIndex{-1, 3}) == FockIndex{1, 2});

  const Intertwiner q0 = build_intertwiner(0);
  CHECK(q0.forward(FockIndex{0, 0}) == ReducedIndex{0, 0});
  CHECK(q0.matrix.at(0, 0) == Complex(1.0, 0.0));

  CHECK_THROWS_AS(q3.forward(FockIndex{1, 1}), std::domain_error);
  CHECK_THROWS_AS(q3.inverse(ReducedIndex{2, 3}), std::domain_error);
}

TEST_CASE("pointwise intertwining at q = 1") {
  // qpi1 e_{1,0} = hbar e_{0,1}; through the identification this is
  // qpt1 applied to the p = 1 label, with the same coefficient.
  const double hbar = 1.0;
  const Intertwiner iq = build_intertwiner(1);
  const red::ReducedOperators reduced = red::build_reduced_ops(1, hbar);
  const osc::OscillatorOperators oscillator = osc::build_oscillator_operators(1, hbar);
  const op::SparseOperator pi1 = osc::block_decompose(oscillator.qpi1, 1).at(1);

  const op::SparseOperator lhs = reduced.qpt1 * iq.matrix;
  const op::SparseOperator rhs = iq.matrix * pi1;
  CHECK(max_residual(lhs - rhs) == 0.0);
  // Column of e_{1,0} (local index m = 1): image hbar e~_{-1,1} (row 0).
  CHECK(lhs.at(0, 1) == Complex(hbar, 0.0));
}

TEST_CASE("intertwining residuals vanish") {
  CHECK(verify_intertwining(0, 1.0, 1e-12).all_pass());
  CHECK(verify_intertwining(20, 1.0, 1e-12).all_pass());
  CHECK(verify_intertwining(9, 0.5, 1e-12).all_pass());
}

TEST_CASE("round trips are exact for q <= 50") {
  for (int q = 0; q <= 50; ++q) {
    const Intertwiner iq = build_intertwiner(q);
    CHECK(max_residual(adjoint(iq.matrix) * iq.matrix - op::SparseOperator::identity(q + 1)) ==
          0.0);
    for (int m = 0; m <= q; ++m) {
      const FockIndex ix{m, q - m};
      CHECK(iq.inverse(iq.forward(ix)) == ix);
      CHECK(std::abs(iq.forward(ix).p) <= q);
      CHECK((iq.forward(ix).p - q) % 2 == 0);
    }
  }
}

TEST_CASE("multiplicity report") {
  const auto rows = multiplicity_report(5, 1.0);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.dim_Hq == row.q + 1);
    CHECK(row.dim_Hq0 == row.q + 1);
    CHECK(row.dim_Hq1 == row.q);  // surplus, present only in the reduced side
    CHECK(row.commutant_Hq == 1);
    CHECK(row.commutant_Hqtilde == (row.q == 0 ? 1 : 2));
  }

  const auto trivial = multiplicity_report(0, 1.0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].dim_Hq1 == 0);
}
