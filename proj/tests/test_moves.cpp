#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "frontwave/classes.hpp"
#include "frontwave/front.hpp"
#include "frontwave/group.hpp"
#include "frontwave/moves.hpp"
#include "test_util.hpp"

using namespace frontwave;
using testutil::random_front;

namespace {

FrontCode make_code(const SurfaceSpec& surf, std::vector<Event> events,
                    const std::vector<std::string>& arc_words) {
    FrontCode c;
    c.surface = surf;
    c.events = std::move(events);
    for (const auto& w : arc_words) c.arcs.push_back(from_word(Ambient::STF, surf, w));
    return c;
}

MoveSpec move(Stratum s, int direction, std::vector<int> site) {
    MoveSpec m;
    m.stratum = s;
    m.direction = direction;
    m.site = std::move(site);
    return m;
}

std::pair<int, int> fresh_ids(const FrontCode& before) {
    std::vector<int> ids = double_point_ids(before);
    int top = ids.empty() ? 0 : ids.back();
    return {top + 1, top + 2};
}

}  // namespace

TEST_CASE("triangle orientation data turns into a parity sign") {
    CHECK(triangle_sign(triangle_from_string("---")) == 1);
    CHECK(triangle_sign(triangle_from_string("+--")) == -1);
    CHECK(triangle_sign(triangle_from_string("++-")) == 1);
    CHECK(triangle_sign(triangle_from_string("+++")) == -1);
    CHECK(pi_crossing_sign({triangle_from_string("-+-")}) == -1);
    CHECK_THROWS_AS(triangle_from_string("++"), InvalidMove);
    CHECK_THROWS_AS(triangle_from_string("+x-"), InvalidMove);
}

TEST_CASE("a dangerous tangency birth splices in two crossings and names their class") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(
        surf,
        {DoublePointEvent{1, Slot::first, XType::R1}, DoublePointEvent{1, Slot::second, XType::R1}},
        {"a1 f", "b1"});
    REQUIRE(validate(code).ok());

    MoveSpec m = move(Stratum::Kplus, 1, {0, 1});
    MoveResult res = apply_move(code, m);

    CHECK(validate(res.code).ok());
    CHECK(double_point_ids(res.code) == std::vector<int>{1, 2, 3});
    CHECK(res.event.stratum == Stratum::Kplus);
    CHECK(res.event.sign == 1);
    CHECK(res.event.weight == 2);

    GroupElem p = arc_product(code, 1, 0);
    GroupElem q = arc_product(code, 0, 1);
    REQUIRE(res.event.key.has_value());
    CHECK(*res.event.key == kplus_key(p, q));
    CHECK(loop_pair_at(res.code, 2) == std::make_pair(p, q));

    CHECK(loop_pair_at(res.code, 1) == loop_pair_at(code, 1));
    CHECK(global_class(res.code) == global_class(code));
}

TEST_CASE("tangency births and deaths are exact inverses") {
    std::mt19937_64 rng(4401);
    std::vector<SurfaceSpec> surfaces = {plane(), torus(), klein_bottle()};
    for (Stratum s : {Stratum::Kplus, Stratum::Kminus}) {
        for (const SurfaceSpec& surf : surfaces) {
            for (int trial = 0; trial < 12; ++trial) {
                FrontCode code = random_front(rng, surf);
                if (code.events.empty()) continue;
                const int n_arcs = static_cast<int>(code.arcs.size());
                int i = static_cast<int>(rng() % n_arcs);
                int j = static_cast<int>(rng() % n_arcs);

                MoveResult born = apply_move(code, move(s, 1, {i, j}));
                auto [nx, ny] = fresh_ids(code);
                CHECK(double_point_ids(born.code).size() == double_point_ids(code).size() + 2);
                CHECK(cusp_count(born.code) == cusp_count(code));

                MoveResult dead = apply_move(born.code, move(s, -1, {nx, ny}));
                CHECK(dead.code == code);
                CHECK(dead.event.key == born.event.key);
                CHECK(dead.event.sign == -born.event.sign);
                CHECK(dead.event.weight == 2);

                if (s == Stratum::Kminus) {
                    if (is_orientable(surf)) {
                        REQUIRE(born.event.key.has_value());
                        CHECK(born.event.key->family == ClassFamily::Kminus);
                    } else {
                        CHECK(!born.event.key.has_value());
                    }
                } else {
                    REQUIRE(born.event.key.has_value());
                    CHECK(born.event.key->family == ClassFamily::Kplus);
                }
            }
        }
    }
}

TEST_CASE("an inverse tangency swaps which direction inserts") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(
        surf,
        {DoublePointEvent{1, Slot::first, XType::R1}, DoublePointEvent{1, Slot::second, XType::R1}},
        {"a1", "b1"});

    MoveSpec m = move(Stratum::Kplus, -1, {0, 0});
    m.inverse_tangency = true;
    MoveResult res = apply_move(code, m);
    CHECK(double_point_ids(res.code).size() == 3);
    CHECK(res.event.sign == -1);

    auto [xf, xs] = visit_positions(res.code, 2);
    auto [yf, ys] = visit_positions(res.code, 3);
    CHECK(std::get<DoublePointEvent>(res.code.events[xf]).xtype == XType::R2);
    CHECK(std::get<DoublePointEvent>(res.code.events[yf]).xtype == XType::R1);
    GroupElem f = from_word(Ambient::STF, surf, "f");
    CHECK(res.code.arcs[xf] == inverse(f));
    CHECK(res.code.arcs[ys] == f);
    CHECK(is_identity(res.code.arcs[xs]));
    CHECK(is_identity(res.code.arcs[yf]));

    SUBCASE("the mirrored pattern dies only through the mirrored site") {
        CHECK_THROWS_AS(apply_move(res.code, move(Stratum::Kplus, -1, {2, 3})), InconsistentSite);
        MoveSpec back = move(Stratum::Kplus, 1, {2, 3});
        back.inverse_tangency = true;
        MoveResult res2 = apply_move(res.code, back);
        CHECK(res2.code == code);
        CHECK(res2.event.sign == 1);
    }
    SUBCASE("a direct birth refuses the mirrored death site") {
        MoveResult direct = apply_move(code, move(Stratum::Kplus, 1, {0, 1}));
        MoveSpec bad = move(Stratum::Kplus, 1, {2, 3});
        bad.inverse_tangency = true;
        CHECK_THROWS_AS(apply_move(direct.code, bad), InconsistentSite);
    }
}

TEST_CASE("tangency deaths demand the exact birth signature") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(
        surf,
        {DoublePointEvent{1, Slot::first, XType::R1}, DoublePointEvent{1, Slot::second, XType::R1}},
        {"a1", "b1"});
    MoveResult born = apply_move(code, move(Stratum::Kplus, 1, {0, 1}));

    SUBCASE("the untouched pattern is removable") {
        CHECK(apply_move(born.code, move(Stratum::Kplus, -1, {2, 3})).code == code);
    }
    SUBCASE("a perturbed fiber arc blocks the death") {
        FrontCode bad = born.code;
        auto [xf, xs] = visit_positions(bad, 2);
        bad.arcs[xf] = compose(bad.arcs[xf], from_word(Ambient::STF, surf, "f"));
        bad.arcs[xs] = compose(bad.arcs[xs], from_word(Ambient::STF, surf, "f^-1"));
        REQUIRE(validate(bad).ok());
        CHECK_THROWS_AS(apply_move(bad, move(Stratum::Kplus, -1, {2, 3})), InconsistentSite);
    }
    SUBCASE("a safe tangency tag blocks a dangerous death") {
        CHECK_THROWS_AS(apply_move(born.code, move(Stratum::Kminus, -1, {2, 3})),
                        InconsistentSite);
    }
    SUBCASE("non adjacent double points are rejected") {
        CHECK_THROWS_AS(apply_move(born.code, move(Stratum::Kplus, -1, {1, 2})), InconsistentSite);
    }
    SUBCASE("witnesses naming another class are rejected") {
        MoveSpec m = move(Stratum::Kplus, -1, {2, 3});
        m.witness = {from_word(Ambient::STF, surf, "a1 b1"), from_word(Ambient::STF, surf, "a1")};
        CHECK_THROWS_AS(apply_move(born.code, m), InconsistentSite);
    }
    SUBCASE("witnesses naming the emitted class are accepted") {
        MoveSpec m = move(Stratum::Kplus, -1, {2, 3});
        auto [p, q] = loop_pair_at(born.code, 2);
        m.witness = {p, q};
        CHECK(apply_move(born.code, m).code == code);
    }
}

TEST_CASE("cusp pair births and deaths are exact inverses") {
    std::mt19937_64 rng(5513);
    std::vector<SurfaceSpec> surfaces = {plane(), torus(), projective_plane()};
    for (const SurfaceSpec& surf : surfaces) {
        for (int trial = 0; trial < 12; ++trial) {
            FrontCode code = random_front(rng, surf);
            if (code.events.empty()) continue;
            int p = static_cast<int>(rng() % code.arcs.size());
            int chi = rng() % 2 == 0 ? 1 : -1;

            MoveSpec birth = move(Stratum::Lambda, 1, {p});
            birth.rotation_sign = chi;
            MoveResult born = apply_move(code, birth);
            CHECK(cusp_count(born.code) == cusp_count(code) + 2);
            CHECK(!born.event.key.has_value());
            CHECK(born.event.weight == 2);
            const CuspEvent* c1 = std::get_if<CuspEvent>(&born.code.events[p + 1]);
            const CuspEvent* c2 = std::get_if<CuspEvent>(&born.code.events[p + 2]);
            REQUIRE(c1 != nullptr);
            REQUIRE(c2 != nullptr);
            CHECK(c1->maslov_sign == 1);
            CHECK(c2->maslov_sign == -1);
            CHECK(c1->rotation_sign == chi);
            CHECK(c2->rotation_sign == chi);

            MoveResult dead = apply_move(born.code, move(Stratum::Lambda, -1, {p + 1}));
            CHECK(dead.code == code);
            CHECK(dead.event.sign == -1);
        }
    }
}

TEST_CASE("cusp deaths reject pairs that do not cancel") {
    SurfaceSpec surf = torus();
    SUBCASE("equal coorientation signs") {
        FrontCode code = make_code(surf, {CuspEvent{1, 1}, CuspEvent{1, 1}}, {"a1", "a1^-1"});
        REQUIRE(validate(code).ok());
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, -1, {0})), InconsistentSite);
    }
    SUBCASE("opposite rotation signs") {
        FrontCode code = make_code(surf, {CuspEvent{1, 1}, CuspEvent{-1, -1}}, {"1", "b1"});
        REQUIRE(validate(code).ok());
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, -1, {0})), InconsistentSite);
    }
    SUBCASE("a nontrivial arc between the cusps") {
        FrontCode code = make_code(surf, {CuspEvent{1, 1}, CuspEvent{-1, 1}}, {"a1", "1"});
        REQUIRE(validate(code).ok());
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, -1, {0})), InconsistentSite);
        CHECK(apply_move(code, move(Stratum::Lambda, -1, {1})).code.events.empty());
    }
    SUBCASE("a double point visit in place of a cusp") {
        FrontCode code = make_code(surf,
                                   {CuspEvent{1, 1}, CuspEvent{-1, 1},
                                    DoublePointEvent{1, Slot::first, XType::R1},
                                    DoublePointEvent{1, Slot::second, XType::R1}},
                                   {"1", "a1", "b1", "a1^-1"});
        REQUIRE(validate(code).ok());
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, -1, {1})), InconsistentSite);
    }
}

TEST_CASE("triple point moves swap the triangle visits and name the vanishing triangle class") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(surf,
                               {DoublePointEvent{1, Slot::first, XType::R1},
                                DoublePointEvent{2, Slot::second, XType::R2},
                                DoublePointEvent{2, Slot::first, XType::R2},
                                DoublePointEvent{3, Slot::second, XType::C1},
                                DoublePointEvent{3, Slot::first, XType::C1},
                                DoublePointEvent{1, Slot::second, XType::R1}},
                               {"1", "a1", "1", "b1", "1", "a1^-1 f"});
    REQUIRE(validate(code).ok());

    GroupElem u = from_word(Ambient::STF, surf, "a1");
    GroupElem v = from_word(Ambient::STF, surf, "b1");
    GroupElem w = from_word(Ambient::STF, surf, "a1^-1 f");

    MoveResult res = apply_move(code, move(Stratum::T, 1, {1, 2, 3}));
    REQUIRE(res.event.key.has_value());
    CHECK(*res.event.key == t_key(u, v, w));
    CHECK(res.event.sign == 1);
    CHECK(res.event.weight == 2);
    CHECK(res.code.arcs == code.arcs);
    CHECK(double_point_ids(res.code) == double_point_ids(code));

    const DoublePointEvent* e0 = std::get_if<DoublePointEvent>(&res.code.events[0]);
    const DoublePointEvent* e1 = std::get_if<DoublePointEvent>(&res.code.events[1]);
    REQUIRE(e0 != nullptr);
    REQUIRE(e1 != nullptr);
    CHECK(e0->id == 2);
    CHECK(e1->id == 1);

    MoveResult back = apply_move(res.code, move(Stratum::T, -1, {3, 1, 2}));
    CHECK(back.code == code);
    CHECK(back.event.key == res.event.key);
    CHECK(back.event.sign == -1);

    SUBCASE("triangle data multiplies into the crossing sign") {
        MoveSpec m = move(Stratum::T, 1, {1, 2, 3});
        m.triangle = "+--";
        CHECK(apply_move(code, m).event.sign == -1);
        m.triangle = "++-";
        CHECK(apply_move(code, m).event.sign == 1);
    }
    SUBCASE("witnesses cross check the class") {
        MoveSpec m = move(Stratum::T, 1, {1, 2, 3});
        m.witness = {u, v, w};
        CHECK(apply_move(code, m).event.sign == 1);
        m.witness = {u, v, compose(w, v)};
        CHECK_THROWS_AS(apply_move(code, m), InconsistentSite);
    }
    SUBCASE("a nontrivial inner arc breaks the triangle") {
        FrontCode bad = code;
        bad.arcs[0] = from_word(Ambient::STF, surf, "f");
        bad.arcs[1] = from_word(Ambient::STF, surf, "a1 f^-1");
        REQUIRE(validate(bad).ok());
        CHECK_THROWS_AS(apply_move(bad, move(Stratum::T, 1, {1, 2, 3})), InconsistentSite);
    }
    SUBCASE("double points that never meet are rejected") {
        FrontCode two = make_code(surf,
                                  {DoublePointEvent{1, Slot::first, XType::R1},
                                   DoublePointEvent{1, Slot::second, XType::R1},
                                   DoublePointEvent{2, Slot::first, XType::R1},
                                   DoublePointEvent{2, Slot::second, XType::R1},
                                   DoublePointEvent{3, Slot::first, XType::R1},
                                   DoublePointEvent{3, Slot::second, XType::R1}},
                                  {"a1", "b1", "a1", "b1", "a1", "b1"});
        REQUIRE(validate(two).ok());
        CHECK_THROWS_AS(apply_move(two, move(Stratum::T, 1, {1, 2, 3})), InconsistentSite);
    }
}

TEST_CASE("cusp crossings slide a visit across a cusp without changing its class") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(surf,
                               {DoublePointEvent{1, Slot::first, XType::R1}, CuspEvent{1, 1},
                                DoublePointEvent{1, Slot::second, XType::R1}, CuspEvent{-1, 1}},
                               {"1", "a1", "b1", "a1^-1"});
    REQUIRE(validate(code).ok());
    auto [s1, s2] = loop_pair_at(code, 1);
    ClassKey expected = pi_key(s1, s2, 0);

    MoveResult res = apply_move(code, move(Stratum::Pi, 1, {0}));
    REQUIRE(res.event.key.has_value());
    CHECK(*res.event.key == expected);
    CHECK(res.event.weight == 1);
    CHECK(res.event.sign == 1);

    CHECK(std::get_if<CuspEvent>(&res.code.events[0]) != nullptr);
    const DoublePointEvent* moved = std::get_if<DoublePointEvent>(&res.code.events[1]);
    REQUIRE(moved != nullptr);
    CHECK(moved->id == 1);
    CHECK(moved->xtype == XType::R2);
    CHECK(res.code.arcs[0] == identity(Ambient::STF, surf));
    CHECK(res.code.arcs[1] == from_word(Ambient::STF, surf, "a1 f"));
    CHECK(res.code.arcs[2] == from_word(Ambient::STF, surf, "b1"));
    CHECK(res.code.arcs[3] == from_word(Ambient::STF, surf, "a1^-1 f^-1"));

    auto [t1, t2] = loop_pair_at(res.code, 1);
    CHECK(t1 == compose(from_word(Ambient::STF, surf, "f"), s1));
    CHECK(t2 == compose(s2, from_word(Ambient::STF, surf, "f^-1")));
    CHECK(pi_key(t1, t2, 0) == expected);

    MoveResult back = apply_move(res.code, move(Stratum::Pi, -1, {1}));
    CHECK(back.code == code);
    CHECK(back.event.key == res.event.key);
    CHECK(back.event.sign == -1);
}

TEST_CASE("cusp crossings migrate fiber winding off the inner arc") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(surf,
                               {DoublePointEvent{1, Slot::first, XType::R1}, CuspEvent{1, -1},
                                DoublePointEvent{1, Slot::second, XType::R1}, CuspEvent{-1, -1}},
                               {"f^2", "a1", "f^-1", "b1"});
    REQUIRE(validate(code).ok());
    auto [s1, s2] = loop_pair_at(code, 1);
    ClassKey expected = pi_key(s1, s2, 1);

    SUBCASE("a first slot visit moves right") {
        MoveResult res = apply_move(code, move(Stratum::Pi, 1, {0}));
        CHECK(*res.event.key == expected);
        CHECK(res.code.arcs[0] == identity(Ambient::STF, surf));
        CHECK(res.code.arcs[1] == from_word(Ambient::STF, surf, "a1 f^3"));
        CHECK(res.code.arcs[3] == from_word(Ambient::STF, surf, "b1 f^-1"));

        MoveResult back = apply_move(res.code, move(Stratum::Pi, -1, {1}));
        CHECK(validate(back.code).ok());
        CHECK(back.event.key == res.event.key);
        CHECK(apply_move(back.code, move(Stratum::Pi, 1, {0})).code == res.code);
    }
    SUBCASE("a second slot visit moves right") {
        MoveResult res = apply_move(code, move(Stratum::Pi, 1, {2}));
        CHECK(*res.event.key == expected);
        CHECK(res.code.arcs[1] == from_word(Ambient::STF, surf, "a1 f"));
        CHECK(res.code.arcs[2] == identity(Ambient::STF, surf));
        CHECK(res.code.arcs[3] == from_word(Ambient::STF, surf, "b1 f^-2"));
        const DoublePointEvent* moved = std::get_if<DoublePointEvent>(&res.code.events[3]);
        REQUIRE(moved != nullptr);
        CHECK(moved->slot == Slot::second);
        CHECK(moved->xtype == XType::R2);

        MoveResult back = apply_move(res.code, move(Stratum::Pi, -1, {3}));
        CHECK(validate(back.code).ok());
        CHECK(back.event.key == res.event.key);
        CHECK(apply_move(back.code, move(Stratum::Pi, 1, {2})).code == res.code);
    }
    SUBCASE("sites without an adjacent cusp over a fiber arc are rejected") {
        FrontCode blocked = code;
        blocked.arcs[0] = from_word(Ambient::STF, surf, "a1 a1");
        blocked.arcs[1] = from_word(Ambient::STF, surf, "a1^-1 a1^-1 a1 f^2");
        REQUIRE(validate(blocked).ok());
        CHECK_THROWS_AS(apply_move(blocked, move(Stratum::Pi, 1, {0})), InconsistentSite);
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Pi, 1, {1})), InconsistentSite);
    }
    SUBCASE("witnesses cross check the class") {
        MoveSpec m = move(Stratum::Pi, 1, {0});
        m.witness = {s1, s2};
        CHECK(apply_move(code, m).event.sign == 1);
        m.witness = {compose(s1, s2), s2};
        CHECK_THROWS_AS(apply_move(code, m), InconsistentSite);
    }
}

TEST_CASE("moves reject malformed requests") {
    SurfaceSpec surf = torus();
    FrontCode code = make_code(
        surf,
        {DoublePointEvent{1, Slot::first, XType::R1}, DoublePointEvent{1, Slot::second, XType::R1}},
        {"a1", "b1"});

    SUBCASE("direction must be a unit") {
        MoveSpec m = move(Stratum::Kplus, 0, {0, 1});
        CHECK_THROWS_AS(apply_move(code, m), InvalidMove);
    }
    SUBCASE("site arity is checked") {
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Kplus, 1, {0})), InvalidMove);
        CHECK_THROWS_AS(apply_move(code, move(Stratum::T, 1, {1, 2})), InvalidMove);
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, 1, {0, 1})), InvalidMove);
    }
    SUBCASE("arc slots must exist") {
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Kplus, 1, {0, 5})), InvalidMove);
        CHECK_THROWS_AS(apply_move(code, move(Stratum::Lambda, 1, {-1})), InvalidMove);
    }
    SUBCASE("fresh ids must be fresh") {
        MoveSpec m = move(Stratum::Kplus, 1, {0, 1});
        m.new_id1 = 1;
        m.new_id2 = 4;
        CHECK_THROWS_AS(apply_move(code, m), InvalidMove);
        m.new_id1 = 4;
        m.new_id2 = 4;
        CHECK_THROWS_AS(apply_move(code, m), InvalidMove);
    }
    SUBCASE("invalid codes are refused outright") {
        FrontCode bad = code;
        bad.arcs.pop_back();
        CHECK_THROWS_AS(apply_move(bad, move(Stratum::Kplus, 1, {0, 0})), BadFrontCode);
    }
    SUBCASE("triple point sites need distinct known ids") {
        CHECK_THROWS_AS(apply_move(code, move(Stratum::T, 1, {1, 1, 2})), InvalidMove);
        CHECK_THROWS_AS(apply_move(code, move(Stratum::T, 1, {1, 2, 3})), UnknownDoublePoint);
    }
    SUBCASE("cusp crossing sites must be double point visits") {
        FrontCode with_cusps = make_code(surf,
                                         {CuspEvent{1, 1}, CuspEvent{-1, 1},
                                          DoublePointEvent{1, Slot::first, XType::R1},
                                          DoublePointEvent{1, Slot::second, XType::R1}},
                                         {"1", "f", "a1", "b1"});
        REQUIRE(validate(with_cusps).ok());
        CHECK_THROWS_AS(apply_move(with_cusps, move(Stratum::Pi, 1, {0})), InconsistentSite);
    }
}

TEST_CASE("built in loops assemble cancelling crossing templates") {
    std::mt19937_64 rng(7705);
    SurfaceSpec surf = torus();

    SUBCASE("the kink slide pairs up over orientable surfaces") {
        for (int trial = 0; trial < 10; ++trial) {
            FrontCode code = random_front(rng, surf);
            std::vector<CrossingEvent> events = canned_loop(LoopKind::Gamma1, code);
            const size_t n_dp = double_point_ids(code).size();
            CHECK(events.size() == 6 * n_dp + 2 * static_cast<size_t>(cusp_count(code)));
            for (size_t i = 0; i < events.size(); i += 2) {
                CHECK(events[i].key == events[i + 1].key);
                CHECK(events[i].sign == 1);
                CHECK(events[i + 1].sign == -1);
                CHECK(events[i].weight == (events[i].stratum == Stratum::Pi ? 1 : 2));
            }
        }
    }
    SUBCASE("the kink slide drops safe tangencies off orientable surfaces") {
        FrontCode code = random_front(rng, projective_plane());
        while (double_point_ids(code).empty()) code = random_front(rng, projective_plane());
        std::vector<CrossingEvent> events = canned_loop(LoopKind::Gamma1, code);
        for (const CrossingEvent& e : events) CHECK(e.stratum != Stratum::Kminus);
    }
    SUBCASE("the detour slide emits one cancelling cusp crossing pair per double point") {
        FrontCode code = random_front(rng, surf);
        std::vector<CrossingEvent> events = canned_loop(LoopKind::Gamma3, code);
        CHECK(events.size() == 2 * double_point_ids(code).size());
        for (size_t i = 0; i < events.size(); i += 2) {
            CHECK(events[i].stratum == Stratum::Pi);
            CHECK(events[i].weight == 1);
            CHECK(events[i].key == events[i + 1].key);
            CHECK(events[i].sign + events[i + 1].sign == 0);
        }
    }
    SUBCASE("the cover slide needs a preserving class on the Klein bottle plus explicit events") {
        FrontCode flat = make_code(torus(), {}, {"a1"});
        CHECK_THROWS_AS(canned_loop(LoopKind::Gamma2, flat), UnsupportedLoop);

        FrontCode reversing = make_code(klein_bottle(), {CuspEvent{1, 1}}, {"d"});
        REQUIRE(validate(reversing).ok());
        CHECK_THROWS_AS(canned_loop(LoopKind::Gamma2, reversing), UnsupportedLoop);

        FrontCode preserving = make_code(klein_bottle(), {}, {"c"});
        REQUIRE(validate(preserving).ok());
        CHECK_THROWS_AS(canned_loop(LoopKind::Gamma2, preserving), UnsupportedLoop);

        CannedContext ctx;
        GroupElem cl = from_word(Ambient::STF, klein_bottle(), "c");
        ctx.gamma2_events = {{Stratum::T, 1, t_key(cl, cl, cl), 2}};
        std::vector<CrossingEvent> events = canned_loop(LoopKind::Gamma2, preserving, ctx);
        CHECK(events == *ctx.gamma2_events);
    }
    SUBCASE("codimension two templates produce the advertised shapes") {
        FrontCode code = random_front(rng, surf);
        CannedContext ctx;
        ctx.witnesses = {from_word(Ambient::STF, surf, "a1"), from_word(Ambient::STF, surf, "b1"),
                         from_word(Ambient::STF, surf, "a1 b1"),
                         from_word(Ambient::STF, surf, "b1 f")};

        std::vector<CrossingEvent> tt = canned_loop(LoopKind::TT, code, ctx);
        CHECK(tt.size() == 8);
        for (const CrossingEvent& e : tt) CHECK(e.stratum == Stratum::T);

        std::vector<CrossingEvent> pl = canned_loop(LoopKind::PiLambda, code, ctx);
        REQUIRE(pl.size() == 3);
        CHECK(pl[0].stratum == Stratum::Pi);
        CHECK(pl[0].sign == 1);
        CHECK(pl[0].weight == 1);
        CHECK(pl[1] == pl[0]);
        CHECK(pl[2].stratum == Stratum::T);
        CHECK(pl[2].sign == -1);
        CHECK(pl[2].weight == 2);
        REQUIRE(pl[0].key.has_value());
        CHECK(*pl[2].key == g_map(*pl[0].key));

        std::vector<CrossingEvent> ll = canned_loop(LoopKind::LambdaLambda, code, ctx);
        REQUIRE(ll.size() == 4);
        CHECK(ll[0].stratum == Stratum::Lambda);
        CHECK(!ll[0].key.has_value());
        CHECK(ll[3].sign == -1);

        for (LoopKind k : {LoopKind::KPi, LoopKind::KT, LoopKind::KK, LoopKind::TPi,
                           LoopKind::PiPi}) {
            std::vector<CrossingEvent> events = canned_loop(k, code, ctx);
            CHECK(!events.empty());
            CHECK(events.size() % 2 == 0);
            for (size_t i = 0; i < events.size(); i += 2) {
                CHECK(events[i].key == events[i + 1].key);
                CHECK(events[i].sign + events[i + 1].sign == 0);
            }
        }
    }
    SUBCASE("template witnesses are padded from the code when missing") {
        FrontCode flat = make_code(surf, {}, {"a1 b1"});
        std::vector<CrossingEvent> events = canned_loop(LoopKind::TT, flat);
        CHECK(events.size() == 8);
    }
    SUBCASE("witnesses outside the circle bundle group are rejected") {
        CannedContext ctx;
        ctx.witnesses = {generator(Ambient::PTF, surf, "h")};
        FrontCode flat = make_code(surf, {}, {"a1"});
        CHECK_THROWS_AS(canned_loop(LoopKind::TT, flat, ctx), InvalidMove);
    }
    SUBCASE("loop kind names round trip") {
        for (LoopKind k : {LoopKind::Gamma1, LoopKind::Gamma2, LoopKind::Gamma3, LoopKind::TT,
                           LoopKind::KPi, LoopKind::KT, LoopKind::KK, LoopKind::TPi,
                           LoopKind::PiLambda, LoopKind::PiPi, LoopKind::LambdaLambda}) {
            CHECK(loop_kind_from_string(loop_kind_to_string(k)) == k);
        }
        CHECK_THROWS_AS(loop_kind_from_string("gamma9"), UnsupportedLoop);
        for (Stratum s :
             {Stratum::Lambda, Stratum::Kplus, Stratum::Kminus, Stratum::T, Stratum::Pi}) {
            CHECK(stratum_from_string(stratum_to_string(s)) == s);
        }
        CHECK_THROWS_AS(stratum_from_string("q"), InvalidMove);
    }
}

TEST_CASE("random tangency and cusp moves keep codes valid across surfaces") {
    std::mt19937_64 rng(9119);
    std::vector<SurfaceSpec> surfaces = {plane(), sphere(), torus(), orientable_closed(2),
                                         orientable_free(2), projective_plane(), klein_bottle()};
    for (const SurfaceSpec& surf : surfaces) {
        for (int trial = 0; trial < 8; ++trial) {
            FrontCode code = random_front(rng, surf);
            if (code.events.empty()) continue;
            const int n_arcs = static_cast<int>(code.arcs.size());

            MoveSpec m;
            switch (rng() % 3) {
                case 0:
                    m = move(Stratum::Kplus, 1,
                             {static_cast<int>(rng() % n_arcs), static_cast<int>(rng() % n_arcs)});
                    break;
                case 1:
                    m = move(Stratum::Kminus, 1,
                             {static_cast<int>(rng() % n_arcs), static_cast<int>(rng() % n_arcs)});
                    break;
                default:
                    m = move(Stratum::Lambda, 1, {static_cast<int>(rng() % n_arcs)});
                    break;
            }
            MoveResult res = apply_move(code, m);
            CHECK(validate(res.code).ok());
            CHECK(global_class(res.code) == global_class(code));
            FrontIndices before = indices(code);
            FrontIndices after = indices(res.code);
            CHECK(before.maslov == after.maslov);
        }
    }
}
