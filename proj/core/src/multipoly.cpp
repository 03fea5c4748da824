#include "hooklab/multipoly.hpp"

#include <stdexcept>

namespace hooklab {

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, const BigInt& coefficient) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, coefficient);
    return p;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("exponent width mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.nvars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

BigInt MultiPoly::evaluate(const std::vector<BigInt>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("point dimension mismatch");
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int p = 0; p < e[k]; ++p) t *= point[k];
        total += t;
    }
    return total;
}

BigInt MultiPoly::coefficient_sum() const {
    BigInt total = 0;
    for (const auto& kv : terms_) total += kv.second;
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += '*';
            mono += k < names.size() ? names[k] : "v" + std::to_string(k);
            if (e[k] > 1) mono += '^' + std::to_string(e[k]);
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono.empty())
            out += mag.str();
        else
            out += (mag == 1 ? std::string() : mag.str()) + mono;
    }
    return out;
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.push_back({{"exponents", it->first}, {"coefficient", it->second.str()}});
    return {{"nvars", nvars_}, {"terms", terms}};
}

}  // namespace hooklab
