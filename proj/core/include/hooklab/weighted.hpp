#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/bigint.hpp"
#include "hooklab/multipoly.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

// Index window of the y-variables in the j >= l(lambda) branch of the weighted
// punctured hook: A uses y_{j+2-l} .. y_{lambda_i+i-l}, B shifts both ends
// down by one.
enum class HookConvention { A, B };
std::string to_string(HookConvention c);
HookConvention parse_hook_convention(const std::string& s);

inline constexpr HookConvention kDefaultHookConvention = HookConvention::A;

// Variables are x (index 0) and y_1 .. y_{lambda_1 + 1 - l} (indices 1..).
int weight_variable_count(const Partition& lambda);
std::vector<std::string> weight_variable_names(const Partition& lambda);

struct WeightedHook {
    Cell cell;
    MultiPoly poly;
};

WeightedHook weighted_punctured_hook(const Partition& lambda, Cell z, HookConvention c = kDefaultHookConvention);

struct IdentityCheck {
    std::string identity;
    std::optional<Cell> corner;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool informational = false;  // reported, but does not decide the verdict

    nlohmann::json to_json() const;
};

struct IdentityReport {
    std::string kind;
    Partition lambda;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;
    nlohmann::json details;

    bool pass() const;
    nlohmann::json to_json() const;
};

// The three integer identities (h* = 1 off the diagram).
IdentityReport verify_vars(const Partition& lambda);
// The three polynomial identities, plus their x = y = 1 specialisations
// against verify_vars.
IdentityReport verify_weighted(const Partition& lambda, HookConvention c = kDefaultHookConvention);

// The first-row-m variant. Corrected form: in the branch r <= m the factor
// over rows 2..r-1 of column s is prod h*_{is}; Uncorrected uses prod (h*_{is}-1).
enum class VariantForm { Corrected, Uncorrected };
std::string to_string(VariantForm f);

struct VariantTerm {
    Cell corner;
    BigInt value;
};

std::vector<VariantTerm> variant_m_terms(const Partition& lambda, int m, VariantForm f);
// Number of G in G_c with s(G) = (1,m), by enumeration.
std::vector<VariantTerm> variant_m_oracle(const Partition& lambda, int m);
// Decided by the corrected form; the uncorrected form is reported alongside.
IdentityReport verify_variant_m(const Partition& lambda, int m);

// Reading of the bare symbol in the second denominator: lambda_1 or n.
enum class CorollaryReading { LambdaOne, Size };
std::string to_string(CorollaryReading r);

inline constexpr CorollaryReading kDefaultCorollaryReading = CorollaryReading::LambdaOne;

struct CorollaryOptions {
    CorollaryReading reading = kDefaultCorollaryReading;
    // Negative control: add one to this cell's hook when computing f*_lambda.
    std::optional<Cell> perturbed_cell;
};

// Evaluates both readings; the verdict follows options.reading and the
// report names every reading that balances.
IdentityReport verify_recursion_corollary(const Partition& lambda, const CorollaryOptions& options = {});

// Runs a verifier over every strict partition with 1 <= n <= max_n and lists
// the partitions on which each candidate fails.
struct Adjudication {
    std::string question;
    std::vector<std::string> candidates;
    std::vector<std::vector<std::string>> failures;  // parallel to candidates
    std::vector<std::string> passing;                // candidates with no failure

    nlohmann::json to_json() const;
};

Adjudication adjudicate_hook_convention(int max_n);
Adjudication adjudicate_corollary_reading(int max_n);

}  // namespace hooklab
