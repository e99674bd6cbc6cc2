#include "doctest.h"
#include "dcla/liealg.hpp"
#include "dcla/qpolynomial.hpp"
#include "oracles.hpp"

using namespace dcla;
using namespace dcla::liealg;

namespace {

AlgebraSpec sl(unsigned m, std::vector<Rational> Q, unsigned N) { return {m, Variant::sl, std::move(Q), N}; }
AlgebraSpec gl(unsigned m, std::vector<Rational> Q, unsigned N) { return {m, Variant::gl, std::move(Q), N}; }

void require_pass(const CheckReport& r) {
    for (const auto& f : r.families) {
        CHECK_MESSAGE(f.instances > 0, f.family);
        CHECK_MESSAGE(f.passed(), f.family, ": ", (f.examples.empty() ? std::string() : f.examples.front()));
    }
}

}  // namespace

TEST_CASE("specs and basis elements") {
    CHECK_THROWS_AS(sl(3, {Rational(0)}, 1).validate(), ValidationError);
    CHECK_THROWS_AS(sl(1, {}, 1).validate(), ValidationError);
    CHECK(basis(sl(2, {Rational(0)}, 0), 1).size() == 6);
    CHECK(basis(gl(3, {Rational(0), Rational(0)}, 0), 2).size() == 27);
    for (const auto& b : basis(gl(3, {Rational(0), Rational(0)}, 0), 1)) CHECK(BasisElement::parse(b.str()) == b);
    CHECK(BasisElement::E(1, 2, 0).str() == "E(1,2;0)");
    CHECK(BasisElement::J(1, 3).str() == "J(1;3)");
    CHECK(BasisElement::parse("I(2;4)") == BasisElement::I(2, 4));
    CHECK_THROWS(BasisElement::parse("E(1;2)"));
    CHECK_FALSE(belongs(BasisElement::I(1, 0), sl(2, {Rational(0)}, 0)));
    CHECK_FALSE(belongs(BasisElement::E(1, 3, 0), sl(2, {Rational(0)}, 0)));
}

TEST_CASE("evaluation images") {
    AlgebraSpec s = sl(3, {Rational(1, 2), Rational(-2, 3)}, 1);
    Rational g(3);
    // E(1,3;t) = [X+(1;0), X+(2;t)]
    Matrix expect = Matrix::unit(3, 0, 2) * ((Rational(1) - Rational(1, 2) * g) * (Rational(1) + Rational(2, 3) * g) * g.pow(2));
    CHECK(eval_image(BasisElement::E(1, 3, 2), g, s) == expect);
    CHECK(eval_image(BasisElement::E(3, 1, 1), g, s) == Matrix::unit(3, 2, 0) * g.pow(1));
    CHECK(eval_image(BasisElement::J(2, 1), g, s) == (Matrix::unit(3, 1, 1) - Matrix::unit(3, 2, 2)) * g);
}

TEST_CASE("the rank-1 bracket at Q = 1/2") {
    StructureEngine e(sl(2, {Rational(1, 2)}, 2));
    LieElement expect = LieElement::term(Rational(1), BasisElement::J(1, 1)) -
                        LieElement::term(Rational(1, 2), BasisElement::J(1, 2));
    CHECK(e.bracket(BasisElement::E(1, 2, 1), BasisElement::E(2, 1, 0)) == expect);
    CHECK(e.bracket(BasisElement::J(1, 1), BasisElement::E(1, 2, 2)) ==
          LieElement::term(Rational(2), BasisElement::E(1, 2, 3)));
}

TEST_CASE("sample points skip the inverses of Q") {
    StructureEngine e(sl(3, {Rational(1), Rational(1, 3)}, 1));
    CHECK(e.sample_point(0) == Rational(2));
    CHECK(e.sample_point(1) == Rational(4));
}

TEST_CASE("relations, antisymmetry, Jacobi and evaluation for sl3 and gl3") {
    for (auto spec : {sl(3, {Rational(1, 2), Rational(-2, 3)}, 2), gl(3, {Rational(1), Rational(0)}, 2)}) {
        StructureEngine e(spec);
        StructureTable t = e.table(2);
        require_pass(check_relations(e, 2));
        require_pass(check_antisymmetry(t));
        require_pass(check_jacobi(e, 1));
        require_pass(check_eval_homomorphism(t, {Rational(0), Rational(5), Rational(7, 3)}));
        require_pass(check_rank1_slice(t));
        CHECK(e.max_degree_growth() <= 2);
        CHECK(check_relations(t).passed());
    }
}

TEST_CASE("Q = 0 gives the current algebra") {
    for (auto spec : {sl(3, {Rational(0), Rational(0)}, 2), gl(3, {Rational(0), Rational(0)}, 2)}) {
        StructureTable t = structure_constants(spec);
        auto f = selftest::compare_with_classical(t);
        CHECK(f.instances == t.entries.size());
        CHECK(f.passed());
    }
    // and the oracle does notice a deformation
    StructureTable d = structure_constants(sl(2, {Rational(1)}, 1));
    for (auto& q : d.spec.Q) q = Rational(0);
    CHECK_FALSE(selftest::compare_with_classical(d).passed());
}

TEST_CASE("a corrupted table fails the relation check") {
    StructureTable t = structure_constants(sl(2, {Rational(1, 2)}, 1));
    BasisPair key{BasisElement::E(1, 2, 0), BasisElement::E(2, 1, 0)};
    REQUIRE(t.entries.count(key));
    t.entries[key] = LieElement(BasisElement::J(1, 0));
    CHECK_FALSE(check_relations(t).passed());
    CHECK_FALSE(check_antisymmetry(t).passed());
}

TEST_CASE("bracket outside the table") {
    StructureTable t = structure_constants(sl(2, {Rational(0)}, 1));
    CHECK_THROWS_AS(t.at(BasisElement::E(1, 2, 2), BasisElement::J(1, 0)), DegreeOverflow);
    CHECK_THROWS_AS(bracket(LieElement(BasisElement::E(1, 2, 3)), LieElement(BasisElement::J(1, 0)), t), DegreeOverflow);
}

TEST_CASE("upsilon embeds sl into gl") {
    AlgebraSpec s = sl(3, {Rational(1, 2), Rational(1)}, 2);
    StructureTable t = structure_constants(s);
    StructureEngine g(s.with_variant(Variant::gl));
    require_pass(check_upsilon(t, g));
    CHECK(upsilon(LieElement(BasisElement::J(2, 1))) ==
          LieElement(BasisElement::I(2, 1)) - LieElement(BasisElement::I(3, 1)));
}

TEST_CASE("block isomorphism") {
    std::vector<unsigned> comp{2, 1};
    CHECK(induced_Q(comp, {Rational(3)}) == std::vector<Rational>{Rational(0), Rational(1, 3)});
    for (unsigned n = 1; n <= 3; ++n) CHECK(zeta(comp, zeta_inverse(comp, n)) == n);
    CHECK(zeta_inverse(comp, 2).i == 2);
    CHECK(zeta_inverse(comp, 3).k == 2);
    auto r = phi_isomorphism(comp, {Rational(3)}, 1);
    CHECK(r.inverse_ok);
    CHECK(r.passed());
    auto r2 = phi_isomorphism({1, 2, 1}, {Rational(3), Rational(-1, 2)}, 1);
    CHECK(r2.passed());
    CHECK_THROWS_AS(phi_isomorphism(comp, {Rational(0)}, 1), ValidationError);
    CHECK_THROWS_AS(phi_isomorphism({2, 0}, {Rational(1)}, 1), ValidationError);
}

TEST_CASE("JSON round trips") {
    AlgebraSpec s = gl(2, {Rational(-2, 3)}, 1);
    CHECK(nlohmann::json(s).get<AlgebraSpec>() == s);
    StructureTable t = structure_constants(s);
    StructureTable back = nlohmann::json(t).get<StructureTable>();
    CHECK(back.spec == t.spec);
    CHECK(back.entries == t.entries);
    LieElement e = LieElement::term(Rational(2), BasisElement::E(1, 2, 0)) - LieElement(BasisElement::I(1, 1));
    CHECK(nlohmann::json(e).get<LieElement>() == e);
    CHECK(e.str() == "2*E(1,2;0) - I(1;1)");
    // a seeded engine reproduces the table without solving
    StructureEngine seeded(t);
    CHECK(seeded.bracket(BasisElement::E(1, 2, 1), BasisElement::E(2, 1, 1)) ==
          t.at(BasisElement::E(1, 2, 1), BasisElement::E(2, 1, 1)));
    CHECK(seeded.solved() == 0);
}
