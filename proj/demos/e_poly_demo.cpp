// Computes a nonsymmetric Macdonald polynomial by both available routes and
// prints the matching Weyl module character data.

#include <iostream>

#include "macweyl/macweyl.hpp"

using namespace macweyl;

int main() {
    const RootDatum& D = RootDatum::get(CartanType::A2, Affinization::Untwisted);
    Weight lambda(LatticeTag::X, {-1, -1});
    int sigma = D.weyl().gen(1);

    auto walk_route = ram_yip(D, lambda, sigma, EvalMode::Generic).value;
    auto oper_route = e_via_t(D, lambda, sigma);
    std::cout << "E_lambda^sigma for lambda=" << lambda.str() << ", sigma=s1 in A2:\n  "
              << walk_route.str(D.two_e()) << "\n";
    std::cout << "operator route agrees: " << (walk_route == oper_route ? "yes" : "NO") << "\n\n";

    CharacterEngine eng(D);
    std::cout << "ch W_{s1(lambda)}  = " << eng.local_char(sigma, lambda).str(D.two_e()) << "\n";
    std::cout << "  (equals E at v=0: "
              << (eng.local_char(sigma, lambda) == walk_route.specialize_v(false) ? "yes" : "NO")
              << ")\n";

    auto global = eng.global_char(sigma, lambda, 4);
    std::cout << "ch WW_{s1(lambda)} to order q^4:\n";
    for (int j = 0; j <= 4; ++j)
        std::cout << "  q^" << j << ": " << global[j].str(D.two_e()) << "\n";
    return 0;
}
