#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <piforge/zlinalg.hpp>

using namespace piforge;

namespace {

using Cols = std::vector<std::vector<i64>>;

// Brute-force check that no k' < k admits integer coefficients: scale the
// rational solution at k = 1 and look for an integral multiple.
bool smaller_k_exists(const std::vector<i64>& target, const Cols& cols,
                      i64 kappa, i64 k) {
    std::vector<i64> rhs(target.size());
    for (size_t i = 0; i < target.size(); ++i)
        rhs[i] = kappa * target[i];
    const auto x = solve_columns(cols, rhs);
    REQUIRE(x.has_value());
    for (i64 cand = 1; cand < k; ++cand) {
        bool integral = true;
        for (const auto& xi : x.value())
            integral = integral && (xi * Rational(cand)).is_integer();
        if (integral)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("rank via fraction-free elimination") {
    CHECK(rank(IntMatrix::from_columns({{1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(rank(IntMatrix::from_columns({{1, 1}, {2, 2}})) == 1);
    CHECK(rank(IntMatrix::from_columns({{0, 0}})) == 0);
    CHECK(rank(IntMatrix(0, 0)) == 0);
    CHECK(rank(IntMatrix::from_columns(
              {{2, 4, -2}, {1, 3, 0}, {3, 7, -2}})) == 2);
    CHECK(columns_independent(IntMatrix::from_columns({{1, 0}, {1, 1}})));
    CHECK_FALSE(columns_independent(
        IntMatrix::from_columns({{1, 0}, {1, 1}, {0, 1}})));
}

TEST_CASE("rank survives larger entries without overflow") {
    // 4x4 with entries up to 9; Bareiss keeps intermediates as minors.
    const IntMatrix m = IntMatrix::from_columns({{9, -7, 5, 3},
                                                 {-8, 6, -4, 2},
                                                 {7, 5, 9, -1},
                                                 {6, -4, 3, 8}});
    CHECK(rank(m) == 4);
}

TEST_CASE("solve_columns finds exact rational solutions") {
    const Cols cols{{1, 0, 0}, {0, 0, 1}, {1, -2, 0}};
    const auto x = solve_columns(cols, {0, 1, 0});
    REQUIRE(x.has_value());
    CHECK(x.value() == std::vector<Rational>{Rational(1, 2), Rational(0),
                                             Rational(-1, 2)});

    CHECK_FALSE(solve_columns(Cols{{1, 0, 0}}, {0, 1, 0}).has_value());
    CHECK_THROWS_AS(solve_columns(Cols{{1, 1}, {2, 2}}, {1, 0}), InvalidBasis);
    CHECK_THROWS_AS(solve_columns(Cols{{1, 0}}, {1, 0, 0}), StructuralError);

    // Empty column set: only the zero vector is reachable.
    const auto empty_hit = solve_columns(Cols{}, {0, 0});
    REQUIRE(empty_hit.has_value());
    CHECK(empty_hit.value().empty());
    CHECK_FALSE(solve_columns(Cols{}, {1, 0}).has_value());
}

TEST_CASE("canonical exponents: pendulum prebasis") {
    const std::vector<i64> t{0, 1, 0};
    const Cols lmg{{1, 0, 0}, {0, 0, 1}, {1, -2, 0}};
    CHECK(canonical_solve(t, lmg, 1) ==
          CanonicalExponents{2, {1, 0, -1}});
    CHECK(canonical_solve(t, lmg, 2) ==
          CanonicalExponents{1, {1, 0, -1}});
    CHECK_FALSE(smaller_k_exists(t, lmg, 1, 2));
}

TEST_CASE("canonical exponents: reorderings of the 2x4 example") {
    // Variables: q0 = (2,1) dependent, q1 = (1,0), q2 = (1,1), q3 = (2,0).
    const std::vector<i64> q0{2, 1};
    const Cols b_cols{{1, 0}, {1, 1}};  // (B) = {q1, q2}
    const Cols c_cols{{2, 0}, {1, 1}};  // (C) = {q3, q2}

    CHECK(canonical_solve(q0, b_cols, 2) == CanonicalExponents{1, {2, 2}});
    CHECK(canonical_solve({2, 0}, b_cols, 1) ==
          CanonicalExponents{1, {2, 0}}); // nonmember q3 over (B)

    CHECK(canonical_solve(q0, c_cols, 2) == CanonicalExponents{1, {1, 2}});
    CHECK(canonical_solve({1, 0}, c_cols, 1) ==
          CanonicalExponents{2, {1, 0}}); // nonmember q1 over (C)

    // Minimal k at kappa = 1 differs between the two prebases: 1 vs 2.
    CHECK(canonical_solve(q0, b_cols, 1).k == 1);
    CHECK(canonical_solve(q0, c_cols, 1).k == 2);
    CHECK_FALSE(smaller_k_exists(q0, c_cols, 1, 2));
}

TEST_CASE("canonical exponents: zero target and error paths") {
    const Cols cols{{1, 0}, {0, 1}};
    CHECK(canonical_solve({0, 0}, cols, 1) == CanonicalExponents{1, {0, 0}});
    CHECK(canonical_solve({0, 0}, Cols{}, 1) == CanonicalExponents{1, {}});
    CHECK_THROWS_AS(canonical_solve({1, 0, 0}, Cols{{0, 1, 0}}, 1),
                    NoSolution);
    CHECK_THROWS_AS(canonical_solve({1, 0}, cols, 0), StructuralError);
    CHECK_THROWS_AS(canonical_solve({1, 0}, Cols{{1, 1}, {2, 2}}, 1),
                    InvalidBasis);
}

TEST_CASE("canonical exponents carry no common factor") {
    // target = 2*(1,1), basis = {(1,1)}: k=1, kj=(2) — gcd(k, kj) = 1.
    CHECK(canonical_solve({2, 2}, Cols{{1, 1}}, 1) ==
          CanonicalExponents{1, {2}});
    // kappa scaling divides k, never inflates kj.
    CHECK(canonical_solve({1, 1}, Cols{{2, 2}}, 1) ==
          CanonicalExponents{2, {1}});
    CHECK(canonical_solve({1, 1}, Cols{{2, 2}}, 2) ==
          CanonicalExponents{1, {1}});
    CHECK(canonical_solve({1, 1}, Cols{{2, 2}}, 4) ==
          CanonicalExponents{1, {2}});
}

TEST_CASE("primitive kernel of a pseudocircuit") {
    // Columns (t, M, d, G) over (L, T, M).
    const IntMatrix m = IntMatrix::from_columns(
        {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {3, -2, -1}});
    CHECK(primitive_kernel(m, 0) == std::vector<i64>{2, 1, -3, 1});

    // Sign is set by the designated entry; designating d flips it.
    CHECK(primitive_kernel(m, 2) == std::vector<i64>{-2, -1, 3, -1});

    // Designated entry zero: fall back to the first nonzero entry.
    const IntMatrix mm = IntMatrix::from_columns(
        {{0, 1, 0}, {0, 0, 1}, {0, 0, 1}, {1, 0, 0}});
    CHECK(primitive_kernel(mm, 0) == std::vector<i64>{0, 1, -1, 0});
    const std::vector<i64> w = primitive_kernel(mm, 2);
    CHECK(w == std::vector<i64>{0, -1, 1, 0});

    const IntMatrix indep = IntMatrix::from_columns({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(primitive_kernel(indep, 0), NotPseudocircuit);
    const IntMatrix nullity2 =
        IntMatrix::from_columns({{1, 1}, {2, 2}, {3, 3}});
    CHECK_THROWS_AS(primitive_kernel(nullity2, 0), NotPseudocircuit);
}

TEST_CASE("primitive kernel entries are coprime") {
    const IntMatrix m = IntMatrix::from_columns({{2, 0}, {0, 2}, {2, 2}});
    const std::vector<i64> w = primitive_kernel(m, 0);
    CHECK(w == std::vector<i64>{1, 1, -1});
    i64 g = 0;
    for (i64 e : w)
        g = gcd_i64(g, e);
    CHECK(g == 1);
}

TEST_CASE("from_columns validates shape") {
    CHECK_THROWS_AS(IntMatrix::from_columns({{1, 0}, {1}}), StructuralError);
    const IntMatrix empty = IntMatrix::from_columns({});
    CHECK(empty.cols == 0);
    const IntMatrix m = IntMatrix::from_columns({{1, 2}, {3, 4}});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 3);
    CHECK(m.at(1, 0) == 2);
    CHECK(m.column(1) == std::vector<i64>{3, 4});
    const IntMatrix sel = m.select_columns({1});
    CHECK(sel.cols == 1);
    CHECK(sel.column(0) == std::vector<i64>{3, 4});
    const IntMatrix tr = m.transpose();
    CHECK(tr.at(0, 1) == 2);
    CHECK(tr.at(1, 0) == 3);
}
