#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/bigint.hpp"

namespace hooklab {

// Sparse polynomial with integer coefficients over a fixed list of variables.
// Exponent vectors are dense; zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint16_t>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const BigInt& c);
    static MultiPoly variable(int nvars, int index, const BigInt& coefficient = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const BigInt& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    BigInt evaluate(const std::vector<BigInt>& point) const;
    // Value with every variable set to 1.
    BigInt coefficient_sum() const;
    std::size_t term_count() const { return terms_.size(); }

    // names[k] names variable k; terms printed in descending lexicographic order.
    std::string to_string(const std::vector<std::string>& names) const;
    nlohmann::json to_json() const;

private:
    void check(const MultiPoly& o) const;

    int nvars_;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace hooklab
