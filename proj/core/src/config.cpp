#include "hooklab/config.hpp"

#include <cstdlib>
#include <string>

#include "hooklab/bigint.hpp"

namespace hooklab {

std::uint64_t max_enumeration() {
    if (const char* env = std::getenv("HOOKLAB_MAX_ENUM")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 5'000'000ULL;
}

std::string to_string(const Rational& v) {
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace hooklab
