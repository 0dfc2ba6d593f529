// Upper eta-series, p-length and a potent filtration for a few small groups.
#include <iostream>

#include "powclass.hpp"

using namespace powclass;

int main() {
  for (const GroupPtr& p : {dihedral(8), wreath_cpcp(3), extraspecial_p3(5, 5)}) {
    const unsigned prime = prime_divisors(p->order()).front();
    EtaLattice lattice(p, prime);
    const EtaProfile prof = upper_eta_series(lattice);
    std::cout << p->label() << ": order " << p->order() << ", pwc " << prof.pwc << ", eta orders";
    for (auto o : prof.eta_series.orders()) std::cout << ' ' << o;
    std::cout << '\n';
  }

  const GroupPtr s4 = symmetric(4);
  const PSeriesResult ps = upper_p_series(s4, 2);
  const EtaProfile syl = upper_eta_series(sylow_p(s4, 2).as_group("P"), 2);
  std::cout << "S4: l_2 = " << *ps.p_length << ", pwc(P) = " << syl.pwc << '\n';

  const GroupPtr w5 = wreath_cpcp(5);
  EtaLattice lattice(w5, 5);
  const auto z = upper_central_series(w5);
  const SeriesChain chain = potent_filtration_prop43(z[3], lattice);
  std::cout << "C5wrC5, N = Z_3: filtration orders";
  for (auto o : chain.orders()) std::cout << ' ' << o;
  std::cout << " (type " << *chain.type_t << ")\n";
}
