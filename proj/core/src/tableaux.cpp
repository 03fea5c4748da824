#include "hooklab/tableaux.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hooklab {

std::string to_string(CountMethod m) { return m == CountMethod::Hlf ? "hlf" : "brute"; }

namespace {

struct ExtensionCounter {
    std::vector<std::uint64_t> need;  // bitmask of predecessors
    std::uint64_t full = 0;
    std::unordered_map<std::uint64_t, BigInt> memo;

    BigInt count(std::uint64_t placed) {
        if (placed == full) return 1;
        if (auto it = memo.find(placed); it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::size_t v = 0; v < need.size(); ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if ((placed & bit) == 0 && (need[v] & ~placed) == 0) total += count(placed | bit);
        }
        memo.emplace(placed, total);
        return total;
    }
};

}  // namespace

BigInt count_linear_extensions(const std::vector<std::vector<int>>& must_precede) {
    const std::size_t n = must_precede.size();
    if (n > 64) throw std::invalid_argument("linear extension count supports at most 64 elements");
    ExtensionCounter c;
    c.need.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (int u : must_precede[v]) c.need[v] |= std::uint64_t{1} << u;
    c.full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return c.count(0);
}

TableauCount count_brute(const Partition& lambda, bool shifted, int max_n) {
    if (lambda.size() > max_n)
        throw std::invalid_argument("brute-force count bound exceeded (n=" + std::to_string(lambda.size()) +
                                    " > " + std::to_string(max_n) + ")");
    Diagram d(lambda, shifted);
    // the value of a cell must exceed the values above it and to its left
    std::vector<std::vector<int>> pre(static_cast<std::size_t>(d.size()));
    for (int k = 0; k < d.size(); ++k) {
        Cell z = d.cell(k);
        if (int u = d.index({z.row - 1, z.col}); u >= 0) pre[static_cast<std::size_t>(k)].push_back(u);
        if (int u = d.index({z.row, z.col - 1}); u >= 0) pre[static_cast<std::size_t>(k)].push_back(u);
    }
    return {count_linear_extensions(pre), CountMethod::Brute};
}

TableauCount count_hlf(const Partition& lambda, bool shifted) {
    Diagram d(lambda, shifted);
    BigInt prod = 1;
    for (Cell z : d.cells()) prod *= d.hook_length(z);
    BigInt nf = factorial(d.size());
    if (nf % prod != 0) throw std::logic_error("hook product does not divide n!");
    return {nf / prod, CountMethod::Hlf};
}

nlohmann::json BranchingReport::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, v] : summands) terms.push_back({{"corner", hooklab::to_json(c)}, {"count", v.str()}});
    return {{"partition", lambda.parts()}, {"shifted", shifted}, {"total", total.str()},
            {"summands", terms},           {"sum", sum.str()},   {"pass", equal}};
}

BranchingReport check_count_branching(const Partition& lambda, bool shifted) {
    Diagram d(lambda, shifted);
    BranchingReport r;
    r.lambda = lambda;
    r.shifted = shifted;
    r.total = count_hlf(lambda, shifted).value;
    r.sum = 0;
    for (Cell c : d.corners()) {
        BigInt v = count_hlf(lambda.remove_from_row(c.row), shifted).value;
        r.summands.emplace_back(c, v);
        r.sum += v;
    }
    r.equal = r.sum == r.total;
    return r;
}

}  // namespace hooklab
