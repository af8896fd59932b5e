// Assembles the rank-one nonsymmetric q-Whittaker series and checks one of
// its q-Toda eigen-equations on the truncation.

#include <iostream>

#include "macweyl/macweyl.hpp"

using namespace macweyl;

int main() {
    const RootDatum& D = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    auto comp = omega_component(D, D.weyl().id, /*N=*/6, /*q_order=*/6);
    std::cout << "identity component of the q-Whittaker series part (A1, truncated):\n";
    for (const auto& t : comp.terms) {
        std::cout << "  lambda=" << t.lambda.str() << ": q-prefactor exponent " << t.q_uexp
                  << "/" << D.two_e() << ", coefficient ";
        LaurentPolynomial head = t.coefficient[0];
        std::cout << head.str(D.two_e()) << " + O(q)\n";
    }

    auto rep = a1_toda_eigen_check(D, 16, 10);
    std::cout << "\nq-Toda Dunkl eigen-equations on the truncation: "
              << (rep.holds ? "hold" : "FAIL") << " (Z-degrees 0.."
              << rep.compared_z_range << ")\n";
    return 0;
}
