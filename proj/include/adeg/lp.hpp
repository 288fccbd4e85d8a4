#ifndef ADEG_LP_HPP
#define ADEG_LP_HPP

#include <vector>

#include "adeg/rational.hpp"

namespace adeg {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class Rel { Le, Ge, Eq };

// max (or min) c.x  subject to  rows, x >= 0. Callers split free variables
// into differences of nonnegative pairs themselves.
struct LpProblem {
    int num_vars = 0;
    bool maximize = true;
    std::vector<Rat> objective;  // size num_vars

    struct Row {
        std::vector<Rat> a;
        Rel rel;
        Rat b;
    };
    std::vector<Row> rows;

    void add_row(std::vector<Rat> a, Rel rel, Rat b);
};

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rat objective;          // in the problem's own sense
    std::vector<Rat> x;     // primal vertex, size num_vars
    std::vector<Rat> dual;  // one multiplier per row; for a max problem a Le
                            // row gets dual >= 0, a Ge row dual <= 0
};

// Dense two-phase primal simplex with Bland's anti-cycling rule; every pivot
// is an exact rational operation.
LpSolution solve_lp(const LpProblem& prob);

}  // namespace adeg

#endif
