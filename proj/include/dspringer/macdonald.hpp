#pragma once

#include <map>
#include <vector>

#include "dspringer/partition.hpp"
#include "dspringer/qt_rational.hpp"
#include "dspringer/schur.hpp"

namespace dspringer {

/// Statistics of one cell of a French diagram (row and col are 0-based;
/// coarm = col, coleg = row).
struct CellStats {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
};

std::vector<CellStats> cell_stats(const Partition& mu);

/// Modified Macdonald polynomial from the inv/maj filling formula,
/// converted to the Schur basis.  Throws GuardExceeded past the Macdonald
/// size guard.
SchurPoly macdonald_htilde(const Partition& mu);

struct MacdonaldTable {
  int n = 0;
  std::map<Partition, SchurPoly> polys;
};

/// H~_mu for every mu |- n, built in parallel over mu.
MacdonaldTable macdonald_table(int n);

/// e_k evaluated on the monomials q^coarm t^coleg of the non-origin cells.
QTPoly delta_eigenvalue(int k, const Partition& mu);

/// Coefficients of e_n in the H~ basis from the closed product formula.
std::map<Partition, QTRational> expand_en_in_macdonald(int n);
/// The same coefficients from an exact linear solve against the Schur
/// matrix of the table.  Slow beyond n = 5.
std::map<Partition, QTRational> expand_en_by_solve(int n);

/// Delta'_{e_k} e_n.  Denominators are cleared over the least common
/// multiple of the irreducible factors; a non-polynomial result throws
/// DenominatorResidue.
SchurPoly delta_prime_e(int k, int n);

}  // namespace dspringer
