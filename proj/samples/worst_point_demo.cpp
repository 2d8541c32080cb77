// Point counts around the worst point over F_3 and F_5, and one symplectic
// completion.
#include <iostream>
#include <random>

#include "locmod/worstpoint.hpp"

int main() {
  using namespace locmod;
  try {
    std::cout << "zero fiber, m=2 s=2:\n";
    auto zf = zero_fiber_sweep(2, 2, {3, 5});
    for (const auto& c : zf.censuses) {
      std::cout << "  q=" << c.q << ": " << c.point_count << " points, by rank";
      for (auto [k, cnt] : c.by_rank) std::cout << " " << k << ":" << cnt;
      std::cout << "\n";
    }
    std::cout << "  estimated dimension " << zf.estimate.d << ", formula " << zf.formula << "\n";

    std::cout << "worst-point scheme, m=2 s=2:\n";
    auto ns = n_scheme_sweep(2, 2, {3, 5});
    for (const auto& c : ns.censuses)
      std::cout << "  q=" << c.q << ": X3=0 " << c.zero_stratum << ", X3!=0 " << c.nonzero_stratum << ", total " << c.total
                << "\n";
    std::cout << "  largest stratum " << ns.largest << " of dimension " << ns.largest_dim << " (rs = " << ns.rs << ")\n";

    const FiniteField& K = FiniteField::prime(5);
    std::mt19937_64 rng(3);
    Mat<Fq> c = random_row(6, K, rng);
    Mat<Fq> g = symplectic_complete(c);
    std::cout << "symplectic completion of " << c.str() << ":\n" << g.str() << "\n  symplectic: "
              << (is_symplectic(g) ? "yes" : "no") << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
