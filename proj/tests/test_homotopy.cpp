#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "frontwave/conjugacy.hpp"
#include "frontwave/errors.hpp"
#include "frontwave/homotopy.hpp"
#include "test_util.hpp"

using namespace frontwave;
using namespace frontwave::testutil;

namespace {

GroupElem stf(const SurfaceSpec& surf, const std::string& word) {
    return from_word(Ambient::STF, surf, word);
}

FrontClassData flags(std::optional<bool> base_trivial, std::optional<bool> reversing = {},
                     std::optional<bool> even_reversing_power = {}) {
    FrontClassData d;
    d.base_trivial = base_trivial;
    d.reversing = reversing;
    d.even_reversing_power = even_reversing_power;
    return d;
}

// Word enumeration oracle: every element of the Klein bottle circle bundle
// group within the given word length, tested as b with l == b^(2k).
bool even_reversing_power_by_search(const GroupElem& l, int max_len, int max_exp) {
    SurfaceSpec surf = klein_bottle();
    std::vector<GroupElem> gens;
    for (const std::string& name : {"c", "d", "f"}) {
        GroupElem g = generator(Ambient::STF, surf, name);
        gens.push_back(g);
        gens.push_back(inverse(g));
    }
    std::set<GroupElem> seen;
    std::queue<std::pair<GroupElem, int>> bfs;
    GroupElem one = identity(Ambient::STF, surf);
    seen.insert(one);
    bfs.push({one, 0});
    while (!bfs.empty()) {
        auto [b, depth] = bfs.front();
        bfs.pop();
        if (orientation_parity(b) == -1) {
            for (int k = -max_exp; k <= max_exp; ++k) {
                if (power(b, 2 * k) == l) return true;
            }
        }
        if (depth == max_len) continue;
        for (const GroupElem& g : gens) {
            GroupElem next = compose(b, g);
            if (seen.insert(next).second) bfs.push({next, depth + 1});
        }
    }
    return false;
}

int shape_rank(const CentralizerInfo& info) {
    if (info.shape == "Z") return 1;
    if (info.shape == "Z^2") return 2;
    if (info.shape == "Z^3") return 3;
    return -1;
}

}  // namespace

TEST_CASE("descriptor sums normalize and print the algebraic grammar") {
    GroupDescriptor z = descriptor_zn(1);
    GroupDescriptor z2 = descriptor_atom(AtomKind::Z2);

    CHECK(descriptor_to_string(descriptor_zn(0)) == "0");
    CHECK(descriptor_to_string(z) == "Z");
    CHECK(descriptor_to_string(descriptor_zn(4)) == "Z^4");
    CHECK(descriptor_to_string(direct_sum(z, z2)) == "Z (+) Z_2");
    CHECK(descriptor_to_string(descriptor_atom(AtomKind::Z4)) == "Z_4");
    CHECK(descriptor_to_string(descriptor_atom(AtomKind::Pi1STK)) == "pi1STK");
    CHECK(descriptor_to_string(descriptor_atom(AtomKind::Pi1K)) == "pi1K");
    CHECK(descriptor_to_string(descriptor_atom(AtomKind::Pi1PresSTF)) == "pi1presSTF");
    CHECK(descriptor_to_string(descriptor_atom(AtomKind::SpherePi, 3)) == "pi_3(S^2)");

    SUBCASE("free ranks merge across sums") {
        GroupDescriptor s = direct_sum(descriptor_zn(2), direct_sum(z2, descriptor_zn(1)));
        CHECK(s.free_rank == 3);
        CHECK(s.atoms.size() == 1);
        CHECK(descriptor_to_string(s) == "Z^3 (+) Z_2");
        CHECK(s == direct_sum(direct_sum(descriptor_zn(1), z2), descriptor_zn(2)));
    }
    SUBCASE("atoms sort into a fixed order") {
        GroupDescriptor a = direct_sum(descriptor_atom(AtomKind::SpherePi, 4),
                                       descriptor_atom(AtomKind::SpherePi, 3));
        CHECK(descriptor_to_string(a) == "pi_3(S^2) (+) pi_4(S^2)");
        GroupDescriptor b = direct_sum(descriptor_atom(AtomKind::Pi1STK), z2);
        CHECK(descriptor_to_string(b) == "Z_2 (+) pi1STK");
    }
    SUBCASE("the parity wrapper is printed and never composed") {
        GroupDescriptor w = index_two_subgroup(direct_sum(z, descriptor_atom(AtomKind::Pi1STK)));
        CHECK(descriptor_to_string(w) == "Idx2(Z (+) pi1STK)");
        CHECK_THROWS_AS(direct_sum(w, z), FrontwaveError);
        CHECK_THROWS_AS(index_two_subgroup(w), FrontwaveError);
    }
    SUBCASE("negative ranks are rejected") {
        CHECK_THROWS_AS(descriptor_zn(-1), FrontwaveError);
    }
}

TEST_CASE("component fundamental groups follow the surface dispatch") {
    GroupDescriptor z_z2 = direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Z2));
    GroupDescriptor z_stf = direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STF));
    GroupDescriptor z_stk = direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STK));

    CHECK(pi1_front_space(sphere(), {}) == z_z2);
    CHECK(pi1_front_space(torus(), {}) == descriptor_zn(4));
    CHECK(pi1_front_space(plane(), {}) == descriptor_zn(2));
    CHECK(pi1_front_space(projective_plane(), {}) == z_z2);

    CHECK(descriptor_to_string(pi1_front_space(torus(), {})) == "Z^4");
    CHECK(descriptor_to_string(pi1_front_space(sphere(), {})) == "Z (+) Z_2");

    SUBCASE("spheres and tori ignore the lift entirely") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            GroupElem ts = random_elem(rng, Ambient::STF, torus());
            CHECK(pi1_front_space(torus(), class_data_from_lift(ts)) == descriptor_zn(4));
            GroupElem ss = random_elem(rng, Ambient::STF, sphere());
            CHECK(pi1_front_space(sphere(), class_data_from_lift(ss)) == z_z2);
        }
    }
    SUBCASE("higher genus splits on base triviality") {
        SurfaceSpec surf = orientable_closed(2);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "a1 b2 f^2"))) ==
              descriptor_zn(3));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "f^5"))) == z_stf);
        CHECK(pi1_front_space(surf, flags(false)) == descriptor_zn(3));
        CHECK(pi1_front_space(surf, flags(true)) == z_stf);
    }
    SUBCASE("free surfaces of rank one collapse both branches") {
        SurfaceSpec surf = orientable_free(1);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "x1^2 f"))) ==
              descriptor_zn(3));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "f"))) == descriptor_zn(3));
        CHECK(pi1_front_space(surf, {}) == descriptor_zn(3));
    }
    SUBCASE("free surfaces of higher rank keep the symbolic summand") {
        SurfaceSpec surf = orientable_free(2);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "x1 x2^-1"))) ==
              descriptor_zn(3));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "f^-2"))) == z_stf);
    }
    SUBCASE("the Klein bottle splits three ways") {
        SurfaceSpec surf = klein_bottle();
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "d"))) == descriptor_zn(2));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "c d^3 f"))) ==
              descriptor_zn(2));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "d^2"))) == z_stk);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "d^-4"))) == z_stk);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "1"))) == z_stk);
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "c^2"))) == descriptor_zn(4));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "f"))) == descriptor_zn(4));
        CHECK(pi1_front_space(surf, class_data_from_lift(stf(surf, "c^-1 d^2 f^3"))) ==
              descriptor_zn(4));
        CHECK(pi1_front_space(surf, flags({}, true)) == descriptor_zn(2));
        CHECK(pi1_front_space(surf, flags({}, false, true)) == z_stk);
        CHECK(pi1_front_space(surf, flags({}, false, false)) == descriptor_zn(4));
    }
}

TEST_CASE("asserted flags must match the supplied lift") {
    SurfaceSpec g2 = orientable_closed(2);
    SurfaceSpec kb = klein_bottle();

    SUBCASE("agreeing flags pass") {
        FrontClassData d = class_data_from_lift(stf(g2, "a1"));
        d.base_trivial = false;
        CHECK(pi1_front_space(g2, d) == descriptor_zn(3));
        FrontClassData k = class_data_from_lift(stf(kb, "d^2"));
        k.reversing = false;
        k.even_reversing_power = true;
        CHECK(descriptor_to_string(pi1_front_space(kb, k)) == "Z (+) pi1STK");
    }
    SUBCASE("base triviality disagreement") {
        FrontClassData d = class_data_from_lift(stf(g2, "a1"));
        d.base_trivial = true;
        CHECK_THROWS_AS(pi1_front_space(g2, d), ClassDataMismatch);
    }
    SUBCASE("orientation parity disagreement") {
        FrontClassData d = class_data_from_lift(stf(kb, "d"));
        d.reversing = false;
        CHECK_THROWS_AS(pi1_front_space(kb, d), ClassDataMismatch);
    }
    SUBCASE("even reversing power disagreement") {
        FrontClassData d = class_data_from_lift(stf(kb, "c^2"));
        d.even_reversing_power = true;
        CHECK_THROWS_AS(pi1_front_space(kb, d), ClassDataMismatch);
        FrontClassData e = class_data_from_lift(stf(kb, "d^2"));
        e.even_reversing_power = false;
        CHECK_THROWS_AS(pi1_front_space(kb, e), ClassDataMismatch);
    }
    SUBCASE("flags alone must be complete") {
        CHECK_THROWS_AS(pi1_front_space(g2, {}), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(orientable_free(3), {}), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(kb, {}), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(kb, flags({}, false)), ClassDataMismatch);
    }
    SUBCASE("contradictory flags are rejected without a lift") {
        CHECK_THROWS_AS(pi1_front_space(plane(), flags(false)), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(sphere(), flags(false)), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(g2, flags(false, true)), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(kb, flags(true, true)), ClassDataMismatch);
        CHECK_THROWS_AS(pi1_front_space(kb, flags({}, true, true)), ClassDataMismatch);
    }
    SUBCASE("lifts must live in the right group") {
        CHECK_THROWS_AS(pi1_front_space(g2, class_data_from_lift(stf(kb, "d"))), AmbientMismatch);
        GroupElem base = from_word(Ambient::BaseF, g2, "a1");
        CHECK_THROWS_AS(pi1_front_space(g2, class_data_from_lift(base)), AmbientMismatch);
    }
}

TEST_CASE("the even reversing power test matches a word search") {
    SurfaceSpec surf = klein_bottle();
    for (long long i = -2; i <= 2; ++i) {
        for (long long j = -2; j <= 2; ++j) {
            for (long long k = -2; k <= 2; ++k) {
                GroupElem l = klein_elem(Ambient::STF, i, j, k);
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(k);
                CHECK(klein_even_reversing_power(l) == even_reversing_power_by_search(l, 8, 8));
            }
        }
    }
    CHECK(klein_even_reversing_power(stf(surf, "d^6")));
    CHECK(!klein_even_reversing_power(stf(surf, "d^6 f")));
    CHECK_THROWS_AS(klein_even_reversing_power(stf(torus(), "a1")), UnsupportedSurface);
    CHECK_THROWS_AS(klein_even_reversing_power(from_word(Ambient::BaseF, surf, "d")),
                    AmbientMismatch);
}

TEST_CASE("component rank equals centralizer rank plus one circle") {
    std::mt19937_64 rng(2026);

    SUBCASE("torus") {
        for (int trial = 0; trial < 20; ++trial) {
            GroupElem l = random_elem(rng, Ambient::STF, torus());
            CentralizerInfo info = centralizer_descriptor(l);
            REQUIRE(info.whole_group);
            CHECK(info.shape == "Z^3");
            CHECK(pi1_front_space(torus(), class_data_from_lift(l)) == descriptor_zn(4));
        }
    }
    SUBCASE("higher genus") {
        SurfaceSpec surf = orientable_closed(2);
        for (const std::string& word :
             {"a1", "b2 f", "a1 b1 f^-1", "a2^2", "f^3", "1", "a1 b2^-1 a1"}) {
            GroupElem l = stf(surf, word);
            CentralizerInfo info = centralizer_descriptor(l);
            GroupDescriptor d = pi1_front_space(surf, class_data_from_lift(l));
            if (info.whole_group) {
                CHECK(d == direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STF)));
            } else {
                REQUIRE(shape_rank(info) == 2);
                CHECK(d == descriptor_zn(3));
                CHECK(static_cast<std::size_t>(d.free_rank) == info.generators.size() + 1);
            }
        }
    }
    SUBCASE("Klein bottle") {
        for (long long i = -2; i <= 2; ++i) {
            for (long long j = -2; j <= 2; ++j) {
                for (long long k = -2; k <= 2; ++k) {
                    GroupElem l = klein_elem(Ambient::STF, i, j, k);
                    CentralizerInfo info = centralizer_descriptor(l);
                    GroupDescriptor d = pi1_front_space(klein_bottle(), class_data_from_lift(l));
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(k);
                    if (info.whole_group) {
                        CHECK(d == direct_sum(descriptor_zn(1),
                                              descriptor_atom(AtomKind::Pi1STK)));
                    } else {
                        REQUIRE(shape_rank(info) >= 1);
                        CHECK(d.atoms.empty());
                        CHECK(d.free_rank == shape_rank(info) + 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("higher homotopy vanishes away from the two spherical bases") {
    std::vector<SurfaceSpec> flat = {plane(), torus(), orientable_closed(3), orientable_free(2),
                                     klein_bottle()};
    for (const SurfaceSpec& surf : flat) {
        for (int n = 2; n <= 6; ++n) {
            CHECK(pi_n_front_space(surf, n) == descriptor_zn(0));
            CHECK(descriptor_to_string(pi_n_front_space(surf, n)) == "0");
        }
    }
    for (const SurfaceSpec& surf : {sphere(), projective_plane()}) {
        CHECK(pi_n_front_space(surf, 2) == descriptor_zn(1));
        CHECK(descriptor_to_string(pi_n_front_space(surf, 2)) == "Z");
        CHECK(descriptor_to_string(pi_n_front_space(surf, 3)) == "pi_3(S^2) (+) pi_4(S^2)");
        CHECK(descriptor_to_string(pi_n_front_space(surf, 7)) == "pi_7(S^2) (+) pi_8(S^2)");
    }
    CHECK_THROWS_AS(pi_n_front_space(torus(), 1), FrontwaveError);
    CHECK_THROWS_AS(pi_n_front_space(sphere(), 0), FrontwaveError);
}

TEST_CASE("bundle group descriptors wear the parity wrapper") {
    CHECK(descriptor_to_string(pi1_cstf_descriptor(plane())) == "Idx2(Z^2)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(sphere())) == "Idx2(Z (+) Z_2)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(torus())) == "Idx2(Z^4)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(projective_plane())) == "Idx2(Z (+) Z_4)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(klein_bottle())) == "Idx2(Z (+) pi1STK)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(orientable_closed(2))) ==
          "Idx2(Z (+) pi1STF)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(orientable_free(1))) == "Idx2(Z^3)");
    CHECK(descriptor_to_string(pi1_cstf_descriptor(orientable_free(3))) ==
          "Idx2(Z (+) pi1STF)");
    for (const SurfaceSpec& surf : {plane(), sphere(), klein_bottle()}) {
        CHECK(pi1_cstf_descriptor(surf).index_two);
    }
    CHECK(cstf_parity_rule().find("odd") != std::string::npos);
    CHECK(cstf_parity_rule().find("reversing") != std::string::npos);
}

TEST_CASE("caller asserted nonorientable cases resolve to fixed descriptors") {
    CHECK(descriptor_to_string(pi1_front_space_lookup(NonorientableClassCase::ReversingBase)) ==
          "Z^2");
    CHECK(descriptor_to_string(
              pi1_front_space_lookup(NonorientableClassCase::EvenReversingPower)) ==
          "Z (+) pi1K");
    CHECK(descriptor_to_string(
              pi1_front_space_lookup(NonorientableClassCase::PreservingOther)) == "Z^3");
    CHECK(descriptor_to_string(
              pi1_front_space_lookup(NonorientableClassCase::TrivialBaseNontrivialLift)) ==
          "Z (+) pi1presSTF");
    CHECK(descriptor_to_string(
              pi1_front_space_lookup(NonorientableClassCase::TrivialBaseTrivialLift)) ==
          "Idx2(Z (+) pi1STF)");
}
