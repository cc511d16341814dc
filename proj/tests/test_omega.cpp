// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "sepwsts/omega.hpp"

using namespace sepwsts;

namespace {

OmegaMarking m(const std::string& q, std::vector<Ent> v) { return {q, std::move(v)}; }

// independent oracle: all concrete points of the box [0..bound]^d on one control
std::vector<OmegaMarking> box_points(const std::string& q, std::size_t d, Ent bound) {
    std::vector<OmegaMarking> out{{q, std::vector<Ent>(d, 0)}};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<OmegaMarking> next;
        for (const auto& p : out)
            for (Ent x = 0; x <= bound; ++x) {
                auto v = p.vec;
                v[i] = x;
                next.push_back({q, v});
            }
        out = next;
    }
    return out;
}

bool leq_vec(const std::vector<Ent>& a, const std::vector<Ent>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("omega_leq on examples") {
    CHECK(omega_leq(m("q", {1, omega}), m("q", {omega, omega})));
    CHECK(omega_leq(m("q", {2, 3}), m("q", {2, 3})));
    CHECK_FALSE(omega_leq(m("q", {omega, 0}), m("q", {1, 0})));
    CHECK_FALSE(omega_leq(m("p", {1}), m("q", {1})));
    CHECK_THROWS_AS(omega_leq(m("q", {1}), m("q", {1, 2})), input_error);
}

TEST_CASE("omega_leq is a partial order on small samples") {
    // every marking of dimension 2 over {0, 1, 2, omega}
    std::vector<OmegaMarking> all;
    const Ent vals[] = {0, 1, 2, omega};
    for (Ent a : vals)
        for (Ent b : vals) all.push_back(m("q", {a, b}));
    for (const auto& u : all) CHECK(omega_leq(u, u));
    for (const auto& u : all)
        for (const auto& v : all) {
            if (omega_leq(u, v) && omega_leq(v, u)) CHECK(u == v);
            for (const auto& w : all)
                if (omega_leq(u, v) && omega_leq(v, w)) CHECK(omega_leq(u, w));
        }
}

TEST_CASE("normalize keeps exactly the maximal elements") {
    CHECK(normalize({m("q", {1, 0}), m("q", {1, 1})}) == normalize({m("q", {1, 1})}));
    const auto both = normalize({m("q", {2, 1}), m("q", {1, 2})});
    CHECK(both.size() == 2);
    CHECK(normalize({}).empty());

    SUBCASE("idempotent and denotation-preserving on a box") {
        const std::vector<OmegaMarking> raw = {m("q", {2, 1}), m("q", {1, 2}), m("q", {1, 1}),
                                               m("q", {0, 3}), m("q", {0, 2})};
        const IdealCover c = normalize(raw);
        CHECK(normalize(c.elements) == c);
        for (const auto& p : box_points("q", 2, 4)) {
            bool denoted = false;
            for (const auto& r : raw)
                if (leq_vec(p.vec, r.vec)) denoted = true;
            CHECK(covers_point(c, p) == denoted);
        }
    }
}

TEST_CASE("covers_point on examples") {
    IdealCover c = normalize({m("q", {omega, 1})});
    CHECK(covers_point(c, m("q", {5, 1})));
    CHECK_FALSE(covers_point(c, m("q", {0, 2})));
    CHECK_FALSE(covers_point(IdealCover{}, m("q", {0, 0})));
}

TEST_CASE("cover_leq on examples and against brute force") {
    CHECK(cover_leq(normalize({m("q", {1, 1})}), normalize({m("q", {omega, 1})})));
    CHECK(cover_leq(normalize({m("q", {2, 0}), m("q", {0, 2})}), normalize({m("q", {2, 2})})));
    CHECK_FALSE(cover_leq(normalize({m("q", {omega, 0})}), normalize({m("q", {5, 5})})));

    SUBCASE("agreement with denoted-set inclusion for omega-free covers") {
        const std::vector<IdealCover> covers = {
            normalize({m("q", {2, 1}), m("q", {1, 2})}),
            normalize({m("q", {2, 2})}),
            normalize({m("q", {3, 0})}),
            normalize({m("q", {1, 1}), m("q", {0, 3})}),
            IdealCover{},
        };
        for (const auto& a : covers)
            for (const auto& b : covers) {
                bool brute = true;
                for (const auto& p : box_points("q", 2, 5))
                    if (covers_point(a, p) && !covers_point(b, p)) { brute = false; break; }
                CHECK(cover_leq(a, b) == brute);
            }
    }
}

TEST_CASE("join_product and split_product") {
    const auto j = join_product(m("p", {1, omega}), m("r", {omega, 2}));
    CHECK(j == m("(p|r)", {1, omega, omega, 2}));
    const auto [a, b] = split_product(j, 2);
    CHECK(a == m("p", {1, omega}));
    CHECK(b == m("r", {omega, 2}));
    CHECK(join_product(m("p", {1}), m("r", {})) == m("(p|r)", {1}));
    CHECK_THROWS_AS(split_product(m("(p|r)", {1}), 2), input_error);
    CHECK_THROWS_AS(split_product(m("p", {1, 2}), 1), input_error);

    SUBCASE("split after join is the identity, nested controls included") {
        const auto inner = join_product(m("a", {3}), m("b", {omega}));
        const auto outer = join_product(inner, m("c", {0, 1}));
        const auto [x, y] = split_product(outer, 2);
        CHECK(x == inner);
        CHECK(y == m("c", {0, 1}));
    }
}

TEST_CASE("down_of_finite covers exactly the downward closure on a box") {
    const std::vector<OmegaMarking> s = {m("q", {2, 1}), m("q", {1, 2}), m("q", {1, 1})};
    const IdealCover c = down_of_finite(s);
    CHECK(c.size() == 2);
    for (const auto& p : box_points("q", 2, 4)) {
        bool below = false;
        for (const auto& e : s)
            if (leq_vec(p.vec, e.vec)) below = true;
        CHECK(covers_point(c, p) == below);
    }
    CHECK(down_of_finite({m("q", {1})}).size() == 1);
    CHECK(down_of_finite({}).empty());
    CHECK_THROWS_AS(down_of_finite({m("q", {omega})}), input_error);
}

TEST_CASE("ideal_meets_up") {
    CHECK(ideal_meets_up(m("q", {omega, 0}), m("q", {7, 0})));
    CHECK_FALSE(ideal_meets_up(m("q", {omega, 0}), m("q", {0, 1})));
    CHECK_FALSE(ideal_meets_up(m("p", {omega}), m("q", {0})));
}

TEST_CASE("canonical order sorts covers deterministically") {
    const auto c = normalize({m("q", {2, 1}), m("p", {0, 0}), m("q", {1, 2})});
    REQUIRE(c.size() == 3);
    CHECK(c.elements[0].control == "p");
    CHECK(c.elements[1] == m("q", {1, 2}));
    CHECK(c.elements[2] == m("q", {2, 1}));
}
