#include "doctest.h"

#include "macweyl/affine_weyl.hpp"
#include "macweyl/root_data.hpp"

using namespace macweyl;

TEST_CASE("pairing normalization and e per type") {
    const RootDatum& a1 = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    CHECK(a1.e() == 2);
    // (omega, omega) = 1/2: 2e * 1/2 = 2
    CHECK(a1.pairing_2e(Weight(LatticeTag::X, {1}), Weight(LatticeTag::Y, {1})) == 2);

    const RootDatum& a2 = RootDatum::get(CartanType::A2, Affinization::Untwisted);
    CHECK(a2.e() == 3);
    // (omega_1, omega_1) = 2/3: 2e * 2/3 = 4
    CHECK(a2.pairing_2e(Weight(LatticeTag::X, {1, 0}), Weight(LatticeTag::Y, {1, 0})) == 4);

    const RootDatum& a3 = RootDatum::get(CartanType::A3, Affinization::Untwisted);
    CHECK(a3.e() == 4);

    const RootDatum& c2d = RootDatum::get(CartanType::C2, Affinization::DualUntwisted);
    CHECK(c2d.e() == 1);
    const RootDatum& c2u = RootDatum::get(CartanType::C2, Affinization::Untwisted);
    CHECK(c2u.e() == 2);
    const RootDatum& g2d = RootDatum::get(CartanType::G2, Affinization::DualUntwisted);
    CHECK(g2d.e() == 1);
}

TEST_CASE("root systems have the expected shape") {
    const RootDatum& a2 = RootDatum::get(CartanType::A2, Affinization::Untwisted);
    CHECK(a2.num_positive() == 3);
    CHECK(a2.weyl().size == 6);

    const RootDatum& a3 = RootDatum::get(CartanType::A3, Affinization::Untwisted);
    CHECK(a3.num_positive() == 6);
    CHECK(a3.weyl().size == 24);

    const RootDatum& c2 = RootDatum::get(CartanType::C2, Affinization::DualUntwisted);
    CHECK(c2.num_positive() == 4);
    CHECK(c2.weyl().size == 8);
    // theta = 2 alpha_1 + alpha_2 long, vartheta = alpha_1 + alpha_2 short
    CHECK(c2.roots()[c2.theta()].x_coords == std::vector<int>{2, 1});
    CHECK(c2.roots()[c2.theta()].x_d == 2);
    CHECK(c2.roots()[c2.vartheta()].x_coords == std::vector<int>{1, 1});
    CHECK(c2.roots()[c2.vartheta()].x_d == 1);

    const RootDatum& g2 = RootDatum::get(CartanType::G2, Affinization::DualUntwisted);
    CHECK(g2.num_positive() == 6);
    CHECK(g2.weyl().size == 12);
    CHECK(g2.roots()[g2.theta()].x_coords == std::vector<int>{3, 2});
    CHECK(g2.roots()[g2.vartheta()].x_coords == std::vector<int>{2, 1});

    CHECK_THROWS(cartan_type_from_string("B7"));
}

TEST_CASE("fundamental weight / coroot duality") {
    for (auto t : {CartanType::A2, CartanType::C2, CartanType::G2}) {
        for (auto k : {Affinization::Untwisted, Affinization::DualUntwisted}) {
            const RootDatum& D = RootDatum::get(t, k);
            for (int i = 1; i <= D.rank(); ++i)
                for (int j = 1; j <= D.rank(); ++j) {
                    Weight w = D.fundamental_weight(LatticeTag::X, i);
                    int pairing = D.coroot_pairing(LatticeTag::X, D.simple_root_index(j), w);
                    CHECK(pairing == (i == j ? 1 : 0));
                }
        }
    }
}

TEST_CASE("W-invariance of the pairing") {
    for (auto t : {CartanType::A1, CartanType::A2, CartanType::C2, CartanType::G2}) {
        for (auto k : {Affinization::Untwisted, Affinization::DualUntwisted}) {
            const RootDatum& D = RootDatum::get(t, k);
            std::vector<Weight> xs, ys;
            for (int i = 1; i <= D.rank(); ++i) {
                xs.push_back(D.fundamental_weight(LatticeTag::X, i));
                ys.push_back(D.fundamental_weight(LatticeTag::Y, i));
                xs.push_back(-xs.back() - xs.front());
                ys.push_back(2 * ys.back() - ys.front());
            }
            for (int g = 0; g < D.weyl().size; ++g)
                for (const auto& x : xs)
                    for (const auto& y : ys)
                        CHECK(D.pairing_2e(D.act(g, x), D.act(g, y)) == D.pairing_2e(x, y));
        }
    }
}

TEST_CASE("positivity partition of affine roots") {
    for (auto t : {CartanType::A2, CartanType::C2}) {
        const RootDatum& D = RootDatum::get(t, Affinization::DualUntwisted);
        for (int r = 0; r < 2 * D.num_positive(); ++r)
            for (int m = -3; m <= 3; ++m) {
                AffineRoot b{LatticeTag::Y, r, m};
                if (!affine_root_valid(D, b)) continue;
                AffineRoot nb = affine_root_negate(D, b);
                CHECK(affine_root_positive(D, b) != affine_root_positive(D, nb));
            }
    }
}

TEST_CASE("C2 dual untwisted: alpha_0 from the short root and long-root stride") {
    const RootDatum& D = RootDatum::get(CartanType::C2, Affinization::DualUntwisted);
    CHECK(D.xside().phi == D.vartheta());
    CHECK(D.xside().stride == 2);
    // long roots occur only in even degrees
    int lng = D.theta();
    CHECK(affine_root_valid(D, AffineRoot{LatticeTag::X, lng, 2}));
    CHECK_FALSE(affine_root_valid(D, AffineRoot{LatticeTag::X, lng, 1}));
    int sht = D.vartheta();
    CHECK(affine_root_valid(D, AffineRoot{LatticeTag::X, sht, 1}));

    const RootDatum& G = RootDatum::get(CartanType::G2, Affinization::DualUntwisted);
    CHECK(G.xside().stride == 3);
}

TEST_CASE("simply-laced: untwisted and dual untwisted coincide") {
    for (auto t : {CartanType::A1, CartanType::A2, CartanType::A3}) {
        const RootDatum& u = RootDatum::get(t, Affinization::Untwisted);
        const RootDatum& d = RootDatum::get(t, Affinization::DualUntwisted);
        CHECK(u.e() == d.e());
        REQUIRE(u.num_positive() == d.num_positive());
        for (int r = 0; r < 2 * u.num_positive(); ++r) {
            CHECK(u.roots()[r].y_coords == d.roots()[r].y_coords);
            CHECK(u.roots()[r].y_d == d.roots()[r].y_d);
        }
        CHECK(u.yside().stride == d.yside().stride);
        CHECK(u.yside().phi == d.yside().phi);
        CHECK(u.yside().s0_translation == d.yside().s0_translation);
        for (int i = 1; i <= u.rank(); ++i)
            for (int j = 1; j <= u.rank(); ++j)
                CHECK(u.pairing_2e(u.fundamental_weight(LatticeTag::X, i),
                                   u.fundamental_weight(LatticeTag::Y, j)) ==
                      d.pairing_2e(d.fundamental_weight(LatticeTag::X, i),
                                   d.fundamental_weight(LatticeTag::Y, j)));
    }
}

TEST_CASE("s_0 is the reflection in the alpha_0 wall") {
    for (auto t : {CartanType::A1, CartanType::A2, CartanType::A3, CartanType::C2, CartanType::G2}) {
        for (auto k : {Affinization::Untwisted, Affinization::DualUntwisted}) {
            const RootDatum& D = RootDatum::get(t, k);
            for (auto side : {LatticeTag::X, LatticeTag::Y}) {
                AffineElement s0 = AffineElement::simple(D, side, 0);
                AffineRoot a0 = affine_simple_root(D, side, 0);
                CHECK(s0.act(a0) == affine_root_negate(D, a0));
                CHECK((s0 * s0).is_identity());
            }
        }
    }
}

TEST_CASE("hat_sigma on roots matches the four-case table") {
    const RootDatum& a1 = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    int alpha = a1.simple_root_index(1);
    int s = a1.weyl().gen(1);
    // identity fixes -alpha + delta
    auto idr = a1.hat_sigma_root(a1.weyl().id, a1.negative(alpha), 1);
    CHECK(idr == std::make_pair(a1.negative(alpha), 1));
    // s(alpha) = -alpha negative: hat_s(alpha) = s(alpha) + delta = -alpha + delta
    auto sr = a1.hat_sigma_root(s, alpha, 0);
    CHECK(sr == std::make_pair(a1.negative(alpha), 1));
    // and hat_s(-alpha + delta) = -s(alpha) = alpha
    auto sr2 = a1.hat_sigma_root(s, a1.negative(alpha), 1);
    CHECK(sr2 == std::make_pair(alpha, 0));

    const RootDatum& a2 = RootDatum::get(CartanType::A2, Affinization::Untwisted);
    // s_1(alpha_2) = alpha_1 + alpha_2 positive: no delta
    int a2idx = a2.simple_root_index(2);
    auto r = a2.hat_sigma_root(a2.weyl().gen(1), a2idx, 0);
    CHECK(a2.roots()[r.first].x_coords == std::vector<int>{1, 1});
    CHECK(r.second == 0);

    CHECK_THROWS(a1.hat_sigma_root(s, a1.negative(alpha), 0));
}

TEST_CASE("hat_sigma on generators is consistent with hat_sigma on roots") {
    using Gen = RootDatum::CurrentGenerator;
    for (auto t : {CartanType::A2, CartanType::C2}) {
        const RootDatum& D = RootDatum::get(t, Affinization::Untwisted);
        for (int g = 0; g < D.weyl().size; ++g)
            for (int r = 0; r < D.num_positive(); ++r)
                for (auto kind : {Gen::FT, Gen::E1}) {
                    Gen in{kind, r};
                    Gen out = D.hat_sigma_generator(g, in);
                    auto [in_root, in_deg] = in.attached_root(D);
                    CHECK(out.attached_root(D) == D.hat_sigma_root(g, in_root, in_deg));
                }
    }
    // the four-case table on A1: s swaps the two generator kinds
    const RootDatum& a1 = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    int alpha = a1.simple_root_index(1);
    Gen ft{Gen::FT, alpha};
    Gen image = a1.hat_sigma_generator(a1.weyl().w0, ft);
    CHECK(image == Gen{Gen::E1, alpha});
    CHECK(a1.hat_sigma_generator(a1.weyl().id, ft) == ft);
    CHECK_THROWS(a1.hat_sigma_generator(0, Gen{Gen::E1, a1.negative(alpha)}));
}
