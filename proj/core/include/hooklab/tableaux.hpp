#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hooklab/bigint.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

enum class CountMethod { Hlf, Brute };
std::string to_string(CountMethod m);

struct TableauCount {
    BigInt value;
    CountMethod method = CountMethod::Hlf;
};

// Number of linear extensions of a finite poset. must_precede[v] lists the
// elements that have to be placed before v. At most 64 elements.
BigInt count_linear_extensions(const std::vector<std::vector<int>>& must_precede);

// Standard (shifted) tableaux by memoised backtracking; throws when n exceeds max_n.
TableauCount count_brute(const Partition& lambda, bool shifted, int max_n = 18);
// n! / prod of hook lengths; throws std::logic_error on a non-integral quotient.
TableauCount count_hlf(const Partition& lambda, bool shifted);

struct BranchingReport {
    Partition lambda;
    bool shifted = false;
    BigInt total;
    std::vector<std::pair<Cell, BigInt>> summands;
    BigInt sum;
    bool equal = false;

    nlohmann::json to_json() const;
};

BranchingReport check_count_branching(const Partition& lambda, bool shifted);

}  // namespace hooklab
