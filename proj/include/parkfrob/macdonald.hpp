#pragma once

#include <map>
#include <vector>

#include "parkfrob/laurent.hpp"
#include "parkfrob/partition.hpp"
#include "parkfrob/ratqt.hpp"
#include "parkfrob/symfunc.hpp"

namespace parkfrob {

/// Cell data of a Young diagram in French convention; cells are listed row
/// by row from the bottom, left to right.
struct CellStats {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
};

std::vector<CellStats> cell_stats(const Partition& mu);

/// Largest |mu| accepted by the Macdonald routines (default 7).
int macdonald_cap();
void set_macdonald_cap(int cap);

/// Modified Macdonald polynomial via the fillings formula, in the Schur basis.
SymFunc htilde(const Partition& mu);

/// Coefficient of x^content in the modified Macdonald polynomial.
LaurentQT htilde_monomial_coefficient(const Partition& mu, const std::vector<int>& content);

/// Sum over cells of q^coarm t^coleg.
LaurentQT b_mu(const Partition& mu);

/// e_{k-1} evaluated at the monomials of B_mu - 1.
LaurentQT delta_prime_eigenvalue(int k, const Partition& mu);

/// q^{n(mu')} t^{n(mu)}.
LaurentQT nabla_eigenvalue(const Partition& mu);

/// Coefficients c_mu with f = sum c_mu H~_mu. All returned values share the
/// same denominator.
std::map<Partition, RatQT> expand_in_htilde(const SymFunc& f);

/// Delta'_{e_{k-1}} e_n in the Schur basis.
SymFunc apply_delta_prime(int k, int n);

/// nabla e_n in the Schur basis.
SymFunc apply_nabla(int n);

}  // namespace parkfrob
