#include <catch2/catch_amalgamated.hpp>

#include <piforge/matroid.hpp>

using namespace piforge;

namespace {

// Columns a = (1,0), b = (1,1), c = (1,1).
ColumnMatroid tiny() {
    return ColumnMatroid(IntMatrix::from_columns({{1, 0}, {1, 1}, {1, 1}}),
                         {"a", "b", "c"});
}

// Columns (t, M, m, d, G) over (L, T, M).
ColumnMatroid twobody() {
    return ColumnMatroid(
        IntMatrix::from_columns(
            {{0, 1, 0}, {0, 0, 1}, {0, 0, 1}, {1, 0, 0}, {3, -2, -1}}),
        {"t", "M", "m", "d", "G"});
}

} // namespace

TEST_CASE("three-column matroid structure") {
    const ColumnMatroid m = tiny();
    CHECK(m.rank == 2);
    CHECK(bases(m) == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
    CHECK(pseudocircuits(m) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(circuits(m) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(pi_monomial(m, {0, 1, 2}, 1).exps == std::vector<i64>{0, 1, -1});
    CHECK(pi_monomial(m, {0, 1, 2}, 2).exps == std::vector<i64>{0, -1, 1});
}

TEST_CASE("two-body matroid structure") {
    const ColumnMatroid m = twobody();
    CHECK(m.rank == 3);

    const std::vector<std::vector<int>> expected_bases{
        {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
        {0, 3, 4}, {1, 3, 4}, {2, 3, 4}};
    CHECK(bases(m) == expected_bases);

    const std::vector<std::vector<int>> expected_pcs{
        {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
    CHECK(pseudocircuits(m) == expected_pcs);

    // Circuits in pure lexicographic order across sizes.
    CHECK(circuits(m) == std::vector<std::vector<int>>{
                             {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2}});

    // Pi-monomials; designating the first member of each pseudocircuit.
    CHECK(pi_monomial(m, expected_pcs[0], 0).exps ==
          std::vector<i64>{0, 1, -1, 0, 0}); // kernel misses t: fallback sign
    CHECK(pi_monomial(m, expected_pcs[2], 0).exps ==
          std::vector<i64>{2, 1, 0, -3, 1});
    CHECK(pi_monomial(m, expected_pcs[3], 0).exps ==
          std::vector<i64>{2, 0, 1, -3, 1});
}

TEST_CASE("pi_monomial rejects non-pseudocircuits") {
    const ColumnMatroid m = twobody();
    CHECK_THROWS_AS(pi_monomial(m, {0, 1, 3}, 0), NotPseudocircuit);
    CHECK_THROWS_AS(pi_monomial(m, {0, 1, 2}, 0), NotPseudocircuit);
    CHECK_THROWS_AS(pi_monomial(m, {0, 1, 2, 3}, 4), StructuralError);
}

TEST_CASE("subset rank queries") {
    const ColumnMatroid m = twobody();
    CHECK(m.subset_rank({}) == 0);
    CHECK(m.subset_rank({1, 2}) == 1);
    CHECK(m.subset_rank({0, 1, 2, 3, 4}) == 3);
}

TEST_CASE("labels") {
    CHECK(detail::latin_label(0) == "A");
    CHECK(detail::latin_label(25) == "Z");
    CHECK(detail::latin_label(26) == "AA");
    CHECK(detail::latin_label(27) == "AB");
    CHECK(detail::greek_label(0) == "α");  // alpha
    CHECK(detail::greek_label(4) == "ε");  // epsilon
    CHECK(detail::greek_label(23) == "ω"); // omega
    CHECK(detail::greek_label(24) == "α2"); // wraps with a counter
}

TEST_CASE("incidence table marks") {
    const ColumnMatroid m = tiny();
    const IncidenceTable t = incidence_table(m);
    REQUIRE(t.basis_labels == std::vector<std::string>{"A", "B"});
    REQUIRE(t.pseudo_labels == std::vector<std::string>{"α"});
    CHECK(t.in_basis(0, 0));
    CHECK(t.in_basis(0, 1));
    CHECK(t.in_basis(1, 0));
    CHECK_FALSE(t.in_basis(1, 1));
    CHECK_FALSE(t.in_basis(2, 0));
    CHECK(t.in_pseudo(0, 0));
    CHECK(t.in_pseudo(1, 0));
    CHECK(t.in_pseudo(2, 0));
}

TEST_CASE("monomial rendering") {
    const std::vector<std::string> names{"t", "M", "m", "d", "G"};
    CHECK(monomial_text(names, {2, 1, 0, -3, 1}) == "t^2 M d^-3 G");
    CHECK(monomial_text(names, {0, 0, 0, 0, 0}) == "");
    CHECK(monomial_text(names, {0, 1, -1, 0, 0}) == "M m^-1");
    CHECK(monomial_text_own_first(names, {0, -1, 1, 0, 0}, 2) == "m M^-1");
    CHECK(monomial_text_own_first(names, {2, 0, 1, -3, 1}, 2) ==
          "m t^2 d^-3 G");
    CHECK(monomial_text_own_first(names, {1, 0, 0, 0, 0}, 0) == "t");
}

TEST_CASE("combinations enumerate in lexicographic order") {
    CHECK(detail::combinations(4, 2) ==
          std::vector<std::vector<int>>{
              {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(detail::combinations(3, 0) ==
          std::vector<std::vector<int>>{{}});
    CHECK(detail::combinations(2, 3).empty());
}

TEST_CASE("matroid constructor validates names") {
    CHECK_THROWS_AS(
        ColumnMatroid(IntMatrix::from_columns({{1, 0}}), {"a", "b"}),
        StructuralError);
}
