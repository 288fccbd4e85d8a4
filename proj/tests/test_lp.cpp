#include <doctest.h>

#include "adeg/lp.hpp"

using namespace adeg;

TEST_CASE("simplex basics") {
    // max x s.t. x <= 3
    LpProblem lp;
    lp.num_vars = 1;
    lp.objective = {Rat(1)};
    lp.add_row({Rat(1)}, Rel::Le, Rat(3));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 3);
    CHECK(sol.x[0] == 3);
    CHECK(sol.dual[0] == 1);

    // min 0 over an empty feasible region
    LpProblem infeas;
    infeas.num_vars = 1;
    infeas.maximize = false;
    infeas.objective = {Rat(0)};
    infeas.add_row({Rat(1)}, Rel::Le, Rat(-1));
    CHECK(solve_lp(infeas).status == LpStatus::Infeasible);

    // max x, unconstrained above
    LpProblem unb;
    unb.num_vars = 1;
    unb.objective = {Rat(1)};
    unb.add_row({Rat(1)}, Rel::Ge, Rat(1));
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("simplex equalities, minimization, exact fractions") {
    // min 3x + 2y s.t. x + y = 10, x - y >= 2
    LpProblem lp;
    lp.num_vars = 2;
    lp.maximize = false;
    lp.objective = {Rat(3), Rat(2)};
    lp.add_row({Rat(1), Rat(1)}, Rel::Eq, Rat(10));
    lp.add_row({Rat(1), Rat(-1)}, Rel::Ge, Rat(2));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] == 6);
    CHECK(sol.x[1] == 4);
    CHECK(sol.objective == 26);

    // fractional data stays exact: max x + y, 2x + 3y <= 1, 3x + 2y <= 1
    LpProblem fr;
    fr.num_vars = 2;
    fr.objective = {Rat(1), Rat(1)};
    fr.add_row({Rat(2), Rat(3)}, Rel::Le, Rat(1));
    fr.add_row({Rat(3), Rat(2)}, Rel::Le, Rat(1));
    auto fsol = solve_lp(fr);
    REQUIRE(fsol.status == LpStatus::Optimal);
    CHECK(fsol.objective == Rat(2, 5));
    CHECK(fsol.x[0] == Rat(1, 5));
    CHECK(fsol.x[1] == Rat(1, 5));
}

TEST_CASE("duals satisfy strong duality and feasibility") {
    // max 5x + 4y s.t. 6x + 4y <= 24, x + 2y <= 6
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = {Rat(5), Rat(4)};
    lp.add_row({Rat(6), Rat(4)}, Rel::Le, Rat(24));
    lp.add_row({Rat(1), Rat(2)}, Rel::Le, Rat(6));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 21);
    // y.b == objective
    CHECK(sol.dual[0] * 24 + sol.dual[1] * 6 == sol.objective);
    // yA >= c and y >= 0 for Le rows of a max problem
    CHECK(sol.dual[0] >= 0);
    CHECK(sol.dual[1] >= 0);
    CHECK(sol.dual[0] * 6 + sol.dual[1] * 1 >= 5);
    CHECK(sol.dual[0] * 4 + sol.dual[1] * 2 >= 4);
}

TEST_CASE("degenerate cycling-prone instance terminates (Bland)") {
    // Beale's classical cycling example
    LpProblem lp;
    lp.num_vars = 4;
    lp.objective = {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)};
    lp.add_row({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, Rel::Le, Rat(0));
    lp.add_row({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, Rel::Le, Rat(0));
    lp.add_row({Rat(0), Rat(0), Rat(1), Rat(0)}, Rel::Le, Rat(1));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rat(1, 20));
}

TEST_CASE("redundant equality rows are tolerated") {
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = {Rat(1), Rat(0)};
    lp.add_row({Rat(1), Rat(1)}, Rel::Eq, Rat(4));
    lp.add_row({Rat(2), Rat(2)}, Rel::Eq, Rat(8));  // same constraint doubled
    lp.add_row({Rat(1), Rat(0)}, Rel::Le, Rat(3));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 3);
}
