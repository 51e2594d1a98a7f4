#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "qmin/extend.hpp"
#include "qmin/grid.hpp"
#include "qmin/laurent.hpp"
#include "qmin/pressed.hpp"

using namespace qmin;

namespace {
LaurentScalar q(int k, long a = 1) { return LaurentScalar::q_power(k, a); }

TorusElement mono(const std::shared_ptr<const TorusAlgebra>& t, std::vector<int> exps,
                  LaurentScalar c = LaurentScalar::one()) {
    return TorusElement::monomial(t, std::move(exps), std::move(c));
}
}  // namespace

TEST_CASE("generic pressed assignment") {
    const auto pa = PressedAssignment::generic(2, 2);
    const auto t = pa.torus();
    REQUIRE(t->size() == 4);
    // generator order pi(1,1), pi(1,2), pi(2,1), pi(2,2)
    CHECK(t->name(0) == "y[1|1]");
    CHECK(t->name(3) == "y[1,2|1,2]");
    CHECK(pa.value(pressed_map(2, 2, 1, 2)) == torus_generator(t, 1));
    CHECK(pa.value(Cortege()) == TorusElement::unit(t));

    // commutation exponents come from the interval calculus
    CHECK(t->comm(0, 1) == 1);  // [1|1] vs [1|2]
    CHECK(t->comm(0, 2) == 1);  // [1|1] vs [2|1], matching x11 x21 = q x21 x11
    CHECK(t->comm(0, 3) == 0);  // [1|1] vs [1,2|1,2]
    CHECK(t->comm(1, 2) == 0);  // [1|2] vs [2|1]

    CHECK_THROWS_AS(pa.value(Cortege({2}, {2})), NotPressed);
}

TEST_CASE("pressed assignment validation") {
    const auto pa = PressedAssignment::generic(2, 2);
    auto values = pa.values();

    // dropping a value
    auto missing = values;
    missing.erase(pressed_map(2, 2, 1, 1));
    CHECK_THROWS_AS(PressedAssignment(2, 2, pa.torus(), missing), NotPressed);

    // a non-monomial value
    auto sums = values;
    sums.at(pressed_map(2, 2, 1, 1)) = torus_generator(pa.torus(), 0) +
                                       torus_generator(pa.torus(), 1);
    CHECK_THROWS_AS(PressedAssignment(2, 2, pa.torus(), sums), NotInvertible);

    // a non-unit coefficient
    auto scaled = values;
    scaled.at(pressed_map(2, 2, 1, 1)) = LaurentScalar(2) * torus_generator(pa.torus(), 0);
    CHECK_THROWS_AS(PressedAssignment(2, 2, pa.torus(), scaled), NotInvertible);

    // wrong quasi-commutation: swap the generators of [1|1] and [1|2] so the
    // exponent flips sign
    auto swapped = values;
    swapped.at(pressed_map(2, 2, 1, 1)) = torus_generator(pa.torus(), 1);
    swapped.at(pressed_map(2, 2, 1, 2)) = torus_generator(pa.torus(), 0);
    CHECK_THROWS_AS(PressedAssignment(2, 2, pa.torus(), swapped), Error);

    // rescaling every value by a unit keeps the relations intact
    auto rescaled = values;
    for (auto& [c, v] : rescaled) v = q(1) * v;
    CHECK_NOTHROW(PressedAssignment(2, 2, pa.torus(), rescaled));
}

TEST_CASE("weights from pressed values") {
    const auto pa = PressedAssignment::generic(2, 2);
    const auto t = pa.torus();
    const auto w = build_weights(pa);
    CHECK(w.at({1, 1}) == mono(t, {1, 0, 0, 0}));
    CHECK(w.at({1, 2}) == mono(t, {0, 1, 0, 0}));
    CHECK(w.at({2, 1}) == mono(t, {0, 0, 1, 0}));
    // w(2,2) = f0(pi(1,1))^-1 f0(pi(2,2)); the two generators commute
    CHECK(w.at({2, 2}) == mono(t, {-1, 0, 0, 1}));
}

TEST_CASE("telescoping recovers the pressed values") {
    const auto pa = PressedAssignment::generic(3, 3);
    const auto w = build_weights(pa);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const int k = std::min(i, j);
            auto prod = TorusElement::unit(pa.torus());
            for (int l = k - 1; l >= 0; --l) prod *= w.at({i - l, j - l});
            CHECK(prod == pa.value(pressed_map(3, 3, i, j)));
        }
}

TEST_CASE("weight commutation check") {
    const auto pa = PressedAssignment::generic(3, 3);
    const auto w = build_weights(pa);
    CHECK(verify_wcast(w, pa).empty());

    // clause (i) holds with exponent +1 on a same-row pair
    CHECK(w.at({1, 1}) * w.at({1, 2}) == q(1) * (w.at({1, 2}) * w.at({1, 1})));
    // clause (iii): off-diagonal pairs commute
    CHECK(w.at({1, 2}) * w.at({2, 1}) == w.at({2, 1}) * w.at({1, 2}));

    // a doctored weight map: repeating one generator breaks clause (i)
    auto broken = w;
    broken.at({1, 2}) = broken.at({1, 1});
    const auto issues = verify_wcast(broken, pa);
    CHECK(!issues.empty());
    bool found = false;
    for (const auto& v : issues)
        if (v.i == 1 && v.j == 1 && v.i2 == 1 && v.j2 == 2 && v.clause == "same-row") found = true;
    CHECK(found);
}

TEST_CASE("exponent witness lemma instances") {
    const auto pa = PressedAssignment::generic(3, 3);

    // |I| = |I'|, i < i': phi = 1
    const auto w1 = exponent_witness(pressed_map(3, 3, 2, 2), pressed_map(3, 3, 3, 2), pa);
    CHECK(w1.phi == 1);
    // i = i', |I| > |I'|: phi = -1
    const auto w2 = exponent_witness(pressed_map(3, 3, 3, 2), pressed_map(3, 3, 3, 1), pa);
    CHECK(w2.phi == -1);
    // |I| != |I'| and i != i': phi = 0
    const auto w3 = exponent_witness(pressed_map(3, 3, 1, 1), pressed_map(3, 3, 2, 2), pa);
    CHECK(w3.phi == 0);

    // same row, j < j': d = +1; same column, i > i': d = -1
    CHECK(exponent_witness(pressed_map(3, 3, 1, 1), pressed_map(3, 3, 1, 2), pa).d == 1);
    CHECK(exponent_witness(pressed_map(3, 3, 2, 1), pressed_map(3, 3, 1, 1), pa).d == -1);
    CHECK(exponent_witness(pressed_map(3, 3, 1, 1), pressed_map(3, 3, 2, 2), pa).d == 0);

    const auto wit = exponent_witness(pressed_map(3, 3, 2, 3), pressed_map(3, 3, 3, 1), pa);
    CHECK(wit.d == wit.c1 - wit.c2 - wit.c3 + wit.c4);
    CHECK(wit.d == wit.phi + wit.psi);

    CHECK_THROWS_AS(exponent_witness(Cortege({2}, {2}), pressed_map(3, 3, 1, 1), pa), NotPressed);
    CHECK_THROWS_AS(exponent_witness(Cortege(), pressed_map(3, 3, 1, 1), pa), NotPressed);
}

TEST_CASE("extension restricts to the pressed values") {
    const auto pa = PressedAssignment::generic(2, 2);
    const auto table = extend_f0(pa);
    CHECK(table.at(pressed_map(2, 2, 1, 1)) == torus_generator(pa.torus(), 0));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const auto c = pressed_map(2, 2, i, j);
            CHECK(table.at(c) == pa.value(c));
        }
    CHECK(table.at(Cortege()) == TorusElement::unit(pa.torus()));

    // the one non-pressed cortege of the 2x2 range
    const auto f22 = table.at(Cortege({2}, {2}));
    CHECK(f22 == mono(pa.torus(), {-1, 0, 0, 1}) + mono(pa.torus(), {-1, 1, 1, 0}, q(1)));
}

TEST_CASE("identities hold on the extended table") {
    const auto pa = PressedAssignment::generic(3, 3);
    const auto table = extend_f0(pa);
    CHECK(evaluate_qi(make_dodgson(3, 3, 1, 2, 1, 2), table).is_zero());
    CHECK(evaluate_qi(make_dodgson(3, 3, 1, 3, 1, 3), table).is_zero());
    CHECK(evaluate_qi(make_plucker(3, 3, {}, {2}, 1, 2, 3, 1), table).is_zero());
    CHECK(evaluate_qi(make_coplucker(3, 3, {2}, {}, 1, 1, 2, 3), table).is_zero());
}

TEST_CASE("reconstruction reproduces the extension") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        const auto pa = PressedAssignment::generic(m, n);
        const auto table = extend_f0(pa);
        const auto rebuilt = reconstruct(table.restrict_pressed(), pa.torus(), m, n);
        CHECK(rebuilt == table);
    }
}

TEST_CASE("custom assignment: the grid's own pressed minors extend to its minor table") {
    // Feed the pressed minors of the canonical 3x3 path matrix back in as
    // f0.  They are invertible monomials of the grid torus and must satisfy
    // the interval exponents (which the constructor validates).  By
    // uniqueness, the extension must coincide with the full minor table.
    const ExtendedGrid g(3, 3);
    const auto t = g.make_torus();
    const auto M = path_matrix(g, t);
    std::map<Cortege, TorusElement> vals;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const auto c = pressed_map(3, 3, i, j);
            vals.emplace(c, quantum_minor(M, c));
        }
    const PressedAssignment pa(3, 3, t, vals);
    const auto table = extend_f0(pa);
    for (const auto& c : all_corteges(3, 3)) CHECK(table.at(c) == quantum_minor(M, c));

    const auto rebuilt = reconstruct(table.restrict_pressed(), t, 3, 3);
    CHECK(rebuilt == table);
}

TEST_CASE("reconstruction input validation") {
    const auto pa = PressedAssignment::generic(2, 2);
    const auto table = extend_f0(pa);
    auto pressed = table.restrict_pressed();

    auto missing = pressed;
    missing.erase(pressed_map(2, 2, 2, 2));
    CHECK_THROWS_AS(reconstruct(missing, pa.torus(), 2, 2), NotPressed);

    auto extra = pressed;
    extra.emplace(Cortege({2}, {2}), TorusElement::unit(pa.torus()));
    CHECK_THROWS_AS(reconstruct(extra, pa.torus(), 2, 2), NotPressed);

    auto zeroed = pressed;
    zeroed.at(pressed_map(2, 2, 1, 1)) = TorusElement::zero(pa.torus());
    CHECK_THROWS_AS(reconstruct(zeroed, pa.torus(), 2, 2), DivisionFailure);

    auto denorm = pressed;
    denorm.at(Cortege()) = q(1) * TorusElement::unit(pa.torus());
    CHECK_THROWS_AS(reconstruct(denorm, pa.torus(), 2, 2), Error);
}

TEST_CASE("table bookkeeping") {
    const auto pa = PressedAssignment::generic(2, 2);
    const auto table = extend_f0(pa);

    // restriction keys are exactly the pressed corteges plus the empty one
    const auto pressed = table.restrict_pressed();
    CHECK(pressed.size() == 5);
    for (const auto& [c, v] : pressed) CHECK(c.is_pressed());

    const auto j = table.to_json();
    CHECK(j.at("[|]") == "(1)");
    CHECK(j.at("[1|1]") == "(1)*y[1|1]");
    CHECK(j.size() == all_corteges(2, 2).size());

    CHECK_THROWS_AS(table.at(Cortege({1, 2}, {1, 3})), OutOfBounds);
}
